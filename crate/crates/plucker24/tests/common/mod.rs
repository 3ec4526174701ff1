//! Shared generators for the integration suites.
#![allow(dead_code)] // each test target uses a different subset

use plucker24::{Matrix2x4, MinorSextuple, Tolerance, Transform2x2};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> Matrix2x4 {
    let mut rows = [[0.0; 4]; 2];
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            *v = rng.gen_range(lo..hi);
        }
    }
    Matrix2x4::new(rows).unwrap()
}

/// Entries uniform in [-10, 10); resamples the rare rank-deficient draw.
pub fn random_rank2<R: Rng>(rng: &mut R) -> Matrix2x4 {
    loop {
        let a = random_matrix(rng, -10.0, 10.0);
        if a.rank(Tolerance::default()) == 2 {
            return a;
        }
    }
}

/// A random non-singular transform with |det| in [0.1, 10].
pub fn random_transform<R: Rng>(rng: &mut R) -> Transform2x2 {
    loop {
        let s = Transform2x2 {
            s11: rng.gen_range(-3.0..3.0),
            s12: rng.gen_range(-3.0..3.0),
            s21: rng.gen_range(-3.0..3.0),
            s22: rng.gen_range(-3.0..3.0),
        };
        let det = s.det().abs();
        if (0.1..=10.0).contains(&det) {
            return s;
        }
    }
}

/// Componentwise uniform noise of the given level relative to the largest
/// minor; returns (noisy, noise_norm).
pub fn perturbed<R: Rng>(rng: &mut R, m: &MinorSextuple, level: f64) -> (MinorSextuple, f64) {
    let amp = level * m.max_abs();
    let mut values = m.to_array();
    let mut norm_sq = 0.0;
    for v in values.iter_mut() {
        let delta = rng.gen_range(-amp..amp);
        *v += delta;
        norm_sq += delta * delta;
    }
    (MinorSextuple::from_array(values).unwrap(), norm_sq.sqrt())
}

/// A unit vector orthogonal to both rows of `a` (Gram-Schmidt against the
/// rows, seeded from the best standard basis vector).
pub fn orthogonal_complement_vector(a: &Matrix2x4) -> [f64; 4] {
    let rows = a.rows();
    let mut best: Option<[f64; 4]> = None;
    let mut best_norm = 0.0;
    for k in 0..4 {
        let mut w = [0.0; 4];
        w[k] = 1.0;
        // Orthonormalize the rows, then subtract projections.
        let mut q1 = rows[0];
        let n1 = norm(&q1);
        for v in q1.iter_mut() {
            *v /= n1;
        }
        let mut q2 = rows[1];
        let d = dot(&q2, &q1);
        for (v, u) in q2.iter_mut().zip(q1) {
            *v -= d * u;
        }
        let n2 = norm(&q2);
        for v in q2.iter_mut() {
            *v /= n2;
        }
        let (p1, p2) = (dot(&w, &q1), dot(&w, &q2));
        for ((v, u1), u2) in w.iter_mut().zip(q1).zip(q2) {
            *v -= p1 * u1 + p2 * u2;
        }
        let n = norm(&w);
        if n > best_norm {
            for v in w.iter_mut() {
                *v /= n;
            }
            best_norm = n;
            best = Some(w);
        }
    }
    best.expect("rank-2 matrix has a 2-dimensional orthogonal complement")
}

pub fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64; 4]) -> f64 {
    dot(a, a).sqrt()
}

pub fn combination(a: &Matrix2x4, c1: f64, c2: f64) -> [f64; 4] {
    let rows = a.rows();
    let mut x = [0.0; 4];
    for k in 0..4 {
        x[k] = c1 * rows[0][k] + c2 * rows[1][k];
    }
    x
}
