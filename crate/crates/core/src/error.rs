use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Input outside the domain of the operation (bad shape, degenerate form,
    /// non-isotropic glue, ...).
    Domain(String),
    /// An enumeration would exceed a configured cap.
    Resource {
        what: &'static str,
        required: u64,
        cap: u64,
    },
    /// A computed value disagrees with the value it was checked against.
    Verification(String),
    /// Two independent routes disagreed. Always a bug.
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Resource { .. } => "resource",
            Error::Verification(_) => "verification",
            Error::Internal(_) => "internal",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Resource {
                what,
                required,
                cap,
            } => write!(f, "resource cap exceeded: {what} needs {required}, cap is {cap}"),
            Error::Verification(m) => write!(f, "verification failed: {m}"),
            Error::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl core::error::Error for Error {}
