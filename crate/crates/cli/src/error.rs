use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    /// Malformed JSON; `message` already names the line and column.
    #[error("{path}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    /// A well-formed document whose contents are inconsistent.
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("no k given: pass --k or set \"k\" in the document")]
    MissingK,
    #[error("this command needs a homomorphism: pass --hom or set \"hom\" in the document")]
    MissingHom,
    #[error("not a homomorphism: edge {0:?}-{1:?} does not map to adjacent residues")]
    NotAHomomorphism(String, String),
    #[error(transparent)]
    Core(#[from] homcycle::Error),
}

impl CliError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Field {
            field: field.into(),
            message: message.into(),
        }
    }

    /// [`crate::EXIT_CAP`] for exceeded caps, [`crate::EXIT_USAGE`] otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(homcycle::Error::CapExceeded { .. }) => crate::EXIT_CAP,
            _ => crate::EXIT_USAGE,
        }
    }
}
