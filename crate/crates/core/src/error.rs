use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside the domain where the computation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A theorem checker was invoked outside the hypotheses of the theorem.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// Two zero sets whose sizes differ by more than one cannot interlace.
    #[error("zero set sizes {0} and {1} differ by more than one")]
    SizeMismatch(usize, usize),

    /// The eigenvalue iteration did not converge.
    #[error("tridiagonal eigenvalue iteration failed to converge")]
    Convergence,
}

pub type Result<T> = std::result::Result<T, Error>;
