use thiserror::Error;

/// Errors raised by the arithmetic, construction and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {0} is not supported: an odd prime p >= 3 is required")]
    UnsupportedCharacteristic(u64),

    #[error("prime {0} is too large for the 64-bit residue representation")]
    PrimeTooLarge(u64),

    #[error("operands live in different fields (p = {left} vs p = {right})")]
    ContextMismatch { left: u64, right: u64 },

    #[error("zero has no multiplicative inverse")]
    NotInvertible,

    #[error("a linear polynomial needs a nonzero leading coefficient")]
    ZeroLeadingCoefficient,

    #[error("the identity polynomial x commutes with everything and is excluded")]
    IdentityPolynomial,

    #[error("expected a polynomial of degree 1")]
    NotLinear,

    #[error("scaling coefficient must lie outside {{0, 1}}, got {0}")]
    NotAScaling(u64),

    #[error("orbit index k = {k} is out of range for p = {p} (need 0 <= k <= p)")]
    OrbitOutOfRange { k: u64, p: u64 },

    #[error("interval restriction is undefined for k = 0")]
    EmptyInterval,

    #[error("{index} does not belong to T_{k} for p = {p}")]
    NotInOrbit { index: u64, k: u64, p: u64 },

    #[error("chain index j = {j} must satisfy 1 <= j < p = {p}")]
    ChainOutOfRange { j: u64, p: u64 },

    #[error("degree {d} exceeds p^2 = {limit} for a monic linear polynomial")]
    UnsupportedDegree { d: u64, limit: u64 },

    #[error("oracle search needs {required} candidates, budget is {budget}")]
    OracleTooLarge { required: String, budget: u128 },

    #[error("Pascal oracle limited to m <= {limit}, got {m}")]
    BinomTooLarge { m: u64, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
