use thiserror::Error;

/// Why a value of `q` was rejected by [`crate::psl2::classify_q`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Inadmissibility {
    #[error("q must be at least 2")]
    TooSmall,
    #[error("q is not a prime power")]
    NotPrimePower,
    #[error("q = {base}^{exponent}; only primes and prime cubes give Hurwitz groups")]
    UnsupportedExponent { base: u64, exponent: u32 },
    #[error(
        "q is not coprime to 2*3*7 (this excludes q in {{7, 8, 27}} and other powers of 2, 3, 7)"
    )]
    SharesFactorWith42,
    #[error("q is prime but q mod 7 = {residue}, not +-1")]
    PrimeNotPlusMinusOneMod7 { residue: u64 },
    #[error("q = p^3 but p mod 7 = {residue}, not in {{2, 3, 4, 5}}")]
    CubeBaseNotPlusMinusTwoThreeMod7 { residue: u64 },
    #[error("q = {q} exceeds the supported bound {bound}")]
    TooLarge { q: u64, bound: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible q = {q}: {reason}")]
    Inadmissible { q: u64, reason: Inadmissibility },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unsupported extension degree {0} (only 1 and 3)")]
    UnsupportedDegree(u32),

    #[error("characteristic {0} is excluded (must be coprime to 2*3*7)")]
    ExcludedCharacteristic(u64),

    #[error("field of order {0} is too large")]
    FieldTooLarge(u128),

    #[error("conductor must be positive")]
    ZeroConductor,

    #[error("Galois exponent {j} is not coprime to conductor {conductor}")]
    NotCoprime { j: i64, conductor: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("|G| = {order} exceeds the enumeration cap {cap}; use the closed-form path instead")]
    EnumerationCap { order: u64, cap: u64 },

    #[error("label {label} does not exist for q = {q}")]
    InvalidLabel { label: String, q: u64 },

    #[error("class {class} does not exist for q = {q}")]
    InvalidClass { class: String, q: u64 },

    #[error("invalid subgroup order {0} (expected 2, 3 or 7)")]
    InvalidSubgroupOrder(u64),

    #[error("invalid character index k = {k} for a subgroup of order {order}")]
    InvalidCharacterIndex { order: u64, k: u64 },

    #[error("divisor of degree {degree} is not certified non-special (need degree > 0)")]
    NonPositiveDegree { degree: i64 },

    #[error("divisor outside the domain of this operation: {0}")]
    DivisorOutOfDomain(String),

    #[error("non-integral multiplicity {value} for {label}")]
    NonIntegral { label: String, value: String },

    #[error("Gauss periods for q = {0} need the trace reading (q is not prime)")]
    GaussPeriodsUnavailable(u64),

    #[error("identity failure: {0}")]
    IdentityFailure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
