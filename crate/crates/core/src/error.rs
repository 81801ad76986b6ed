use thiserror::Error;

/// Errors surfaced by the exact-arithmetic pipeline.
///
/// Variants that correspond to a violated mathematical hypothesis carry
/// enough data to report what was expected and what was found.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is zero where a nonzero polynomial is required")]
    ZeroPolynomial,

    #[error("degree {found} is outside the supported range: {why}")]
    DegreeOutOfRange { found: usize, why: String },

    #[error("polynomial {poly} is not irreducible over Q")]
    NotIrreducible { poly: String },

    #[error("discriminant is undefined for degree < 2")]
    DiscriminantUndefined,

    #[error("division by zero (or by a zero polynomial)")]
    DivisionByZero,

    #[error("element does not belong to this field: expected {expected} coordinates, got {got}")]
    ElementFieldMismatch { expected: usize, got: usize },

    #[error("inconsistent embedding data: claimed generator image does not satisfy the subfield minimal polynomial")]
    InconsistentEmbedding,

    #[error("denominator divisible by {p}; cannot reduce modulo {p}")]
    BadReduction { p: u64 },

    #[error("modular factors are not pairwise coprime mod {p}; lifting is ill-posed")]
    FactorsNotCoprime { p: u64 },

    #[error("prime budget exhausted: no usable prime among the first {scanned} candidates")]
    PrimeBudgetExhausted { scanned: usize },

    #[error("primitive element search exhausted after {tried} shift constants")]
    PrimitiveSearchExhausted { tried: usize },

    #[error("nothing to adjoin: the polynomial splits into linear factors over the current field")]
    NothingToAdjoin,

    #[error("not linearly disjoint: compositum degree deficit (expected {expected}, got {got})")]
    NotLinearlyDisjoint { expected: usize, got: usize },

    #[error("input cluster size could not be certified exactly; magnification needs an exact input size")]
    InputClusterUncertified,

    #[error("polynomial {poly} is not Galois over Q: its roots do not all lie in the field generated by one of them")]
    NotGalois { poly: String },

    #[error("degree hypothesis violated: {why}")]
    DegreeHypothesis { why: String },

    #[error("adjunction count k={k} is out of range for degree {n}: require 1 <= k <= n-2")]
    AdjunctionCountOutOfRange { k: usize, n: usize },

    #[error("k = n-1 = {k} adjunctions already generate the full splitting field, so the final degree is n!/1 = n!, not n!/(n-k)!; rerun with k <= n-2 or inspect the k = n-2 tower, whose top field coincides with this one")]
    FullSplittingField { k: usize },

    #[error("factor pattern mismatch at step {step}: expected {expected}, found {found}; the polynomial does not have full symmetric Galois action")]
    TowerPatternMismatch {
        step: usize,
        expected: String,
        found: String,
    },

    #[error("no singleton-cluster seed found for degree {n}; tried: {tried}")]
    NoSingletonSeed { n: usize, tried: String },

    #[error("seed polynomial rejected: {why}")]
    InvalidSeed { why: String },

    #[error("family parameter t={t} is out of range: require an integer t >= 4")]
    FamilyParameterOutOfRange { t: i64 },

    #[error("odd target size {d}: doubling a size-2 cluster only reaches even sizes, so no half-cluster construction applies")]
    OddHalfClusterSize { d: usize },

    #[error("exact factorization over this field exceeds the configured cap ({why}); use a certified bound instead")]
    ExactCapExceeded { why: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
