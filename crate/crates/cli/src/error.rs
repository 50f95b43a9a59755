use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] queer_schur::Error),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),

    #[error("cannot serialize output: {0}")]
    Json(#[from] serde_json::Error),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_REFUSED: u8 = 3;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(queer_schur::Error::OracleGuard { .. }) => EXIT_REFUSED,
            CliError::Core(
                queer_schur::Error::BadComposition { .. }
                | queer_schur::Error::BadGenerator(_)
                | queer_schur::Error::BadIndex(_)
                | queer_schur::Error::GeneratorOutOfRange(..)
                | queer_schur::Error::Scalar(_),
            ) => EXIT_USAGE,
            _ => EXIT_FAILED,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), EXIT_USAGE);
        assert_eq!(
            CliError::from(queer_schur::Error::OracleGuard { r: 5, max: 4 }).exit_code(),
            EXIT_REFUSED
        );
        assert_eq!(
            CliError::from(queer_schur::Error::BadIndex("x".into())).exit_code(),
            EXIT_USAGE
        );
        let inconsistent = queer_schur::Error::OracleInconsistent {
            context: "x".into(),
        };
        assert_eq!(CliError::from(inconsistent).exit_code(), EXIT_FAILED);
    }
}
