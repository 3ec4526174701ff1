//! Mapping of library and I/O failures onto documented error names and
//! process exit codes.

use plucker24::Error as LibError;

/// Exit code 1: the input was well formed but the requested operation is
/// undefined on it. Exit code 2: the invocation or input could not be read.
#[derive(Debug)]
pub enum CliError {
    Domain { name: &'static str, message: String },
    Usage { name: &'static str, message: String },
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Domain { name, .. } | CliError::Usage { name, .. } => name,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Domain { message, .. } | CliError::Usage { message, .. } => message,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain { .. } => 1,
            CliError::Usage { .. } => 2,
        }
    }

    pub fn parse(message: String) -> Self {
        CliError::Usage {
            name: "ParseError",
            message,
        }
    }

    pub fn non_finite(message: String) -> Self {
        CliError::Usage {
            name: "NonFiniteValue",
            message,
        }
    }

    pub fn io(message: String) -> Self {
        CliError::Usage {
            name: "IoError",
            message,
        }
    }

    pub fn not_equivalent(message: String) -> Self {
        CliError::Domain {
            name: "NotEquivalent",
            message,
        }
    }
}

impl From<LibError> for CliError {
    fn from(err: LibError) -> Self {
        let message = err.to_string();
        match err {
            LibError::NonFinite(_) => CliError::non_finite(message),
            LibError::InvalidTolerance { .. } => CliError::Usage {
                name: "InvalidTolerance",
                message,
            },
            LibError::DegenerateInput => CliError::Domain {
                name: "DegenerateInput",
                message,
            },
            LibError::PivotTooSmall { .. } => CliError::Domain {
                name: "PivotTooSmall",
                message,
            },
            LibError::PluckerViolated { .. } => CliError::Domain {
                name: "PluckerViolated",
                message,
            },
            LibError::RankDeficient { .. } => CliError::Domain {
                name: "RankDeficient",
                message,
            },
            LibError::NotEquivalent { .. } => CliError::Domain {
                name: "NotEquivalent",
                message,
            },
            LibError::DegenerateProjection { .. } => CliError::Domain {
                name: "DegenerateProjection",
                message,
            },
            LibError::AllZeroInput => CliError::Domain {
                name: "AllZeroInput",
                message,
            },
            LibError::SingularTransform { .. } => CliError::Domain {
                name: "SingularTransform",
                message,
            },
        }
    }
}
