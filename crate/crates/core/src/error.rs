use thiserror::Error;

/// Errors surfaced by the algebra engine.
///
/// Everything is `Clone` so results can be cached (e.g. a memoized Groebner
/// basis stores the error it hit, and later callers see the same error).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,

    #[error("field mismatch")]
    FieldMismatch,

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("characteristic {0} exceeds 2^31 - 1")]
    CharacteristicTooLarge(u64),

    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("a polynomial ring needs at least one variable")]
    EmptyRing,

    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },

    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),

    #[error("substitution needs {expected} images, got {got}")]
    SubstitutionArity { expected: usize, got: usize },

    #[error("substitution images must be linear forms or zero")]
    NonLinearImage,

    #[error("homogeneous input required")]
    NotHomogeneous,

    #[error("expected a nonzero linear form")]
    NotLinearForm,

    #[error("ideal is not generated by linear forms")]
    NotLinear,

    #[error("zero polynomial in divisor list")]
    ZeroDivisorPolynomial,

    #[error("S-pair degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("no suitable generic linear form found after {attempts} attempts")]
    GenericityExhausted { attempts: u32 },

    #[error("operation requires a proper ideal")]
    ProperIdealRequired,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("saturation degree of the unit ideal is undefined here")]
    UnitSaturationDegree,

    #[error("saturation degree scan exceeded degree {0}")]
    SaturationScanExceeded(u32),

    #[error("hyperplane section would leave an empty ring")]
    RingTooSmall,

    #[error("columns are not a Groebner basis of the module they generate")]
    NotAModuleBasis,

    #[error(
        "graded matrix entry at row {row}, column {col} is not homogeneous of degree {expected}"
    )]
    DegreeIncompatible {
        row: usize,
        col: usize,
        expected: i64,
    },

    #[error("Betti table is empty")]
    EmptyBettiTable,

    #[error("strategies disagree: betti route gives {betti}, hyperplane route gives {hyperplane} on {instance}")]
    StrategyDisagreement {
        betti: i64,
        hyperplane: i64,
        instance: String,
    },

    #[error("a subspace needs between 1 and {max} independent linear forms, got rank {rank}")]
    BadSubspace { rank: usize, max: usize },

    #[error("an arrangement needs at least one subspace")]
    EmptyArrangement,

    #[error("arrangement contains two identical subspaces")]
    DuplicateSubspace,

    #[error("cannot place {d} distinct points on a line over a field with {size} elements")]
    FieldTooSmall { d: usize, size: u64 },

    #[error("{}{message}", parse_prefix(.line))]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

/// Parse errors carry a 1-based input line; 0 means no line applies.
fn parse_prefix(line: &usize) -> String {
    if *line == 0 {
        String::new()
    } else {
        format!("line {line}: ")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
