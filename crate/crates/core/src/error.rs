use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Factorization did not finish within the configured work limit.
    #[error("factorization budget exceeded for {n}: {reason}")]
    BudgetExceeded { n: String, reason: String },

    #[error("memory budget exceeded: {requested} bytes requested, budget is {budget}")]
    MemoryBudgetExceeded { requested: u64, budget: u64 },

    #[error("{n} exceeds the subset-sum oracle bound {bound}")]
    OracleBoundExceeded { n: u64, bound: u64 },

    #[error("inconsistent congruences: {0}")]
    Inconsistent(String),

    #[error("multiplier {multiplier} exceeds the provable bound {bound}")]
    BoundViolated { multiplier: String, bound: String },

    #[error("found {found} of {wanted} practical terms after scanning {scanned} indices")]
    ScanBudgetExceeded { found: usize, wanted: usize, scanned: u64 },

    /// A construction that the classification says must succeed produced a
    /// non-practical value.
    #[error("classification mismatch: {0}")]
    ClassificationMismatch(String),

    #[error("no non-practical value found for n in 1..={bound}")]
    SearchExhausted { bound: u64 },

    #[error("iteration cap {cap} reached: {what}")]
    IterationCap { cap: u64, what: String },

    #[error("{m} is not congruent to 1 mod 8")]
    InvalidResidue { m: String },

    #[error("j = {0} has no non-representable family (must be one of 0,2,3,4,5,6,7)")]
    InvalidJ(u8),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("bad sieve cache: {0}")]
    BadCache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors that contradict a proven statement rather than a resource or
    /// usage problem.
    pub fn is_falsification(&self) -> bool {
        matches!(self, Error::ClassificationMismatch(_) | Error::NotFound(_))
    }
}
