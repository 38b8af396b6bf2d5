use schur_core::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitCode {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    Computation = 3,
    Cap = 4,
}

impl ExitCode {
    pub fn of_error(e: &Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Io(_) | Error::NotPrime(_) | Error::BoundDomain(_) => ExitCode::Usage,
            Error::CapExceeded { .. } => ExitCode::Cap,
            _ => ExitCode::Computation,
        }
    }
}

impl From<ExitCode> for std::process::ExitCode {
    fn from(c: ExitCode) -> Self {
        std::process::ExitCode::from(c as u8)
    }
}
