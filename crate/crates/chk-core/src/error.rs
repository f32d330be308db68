use crate::params::ParamError;
use crate::weyl::WeylError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    /// Parameters outside the regime a statement needs.
    #[error("parameter regime: {0}")]
    Regime(String),
    #[error("weight bookkeeping: {0}")]
    Weight(String),
    #[error("window too small: {0}")]
    Window(String),
}

pub type Result<T> = std::result::Result<T, Error>;
