use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("parts must be positive: {0:?}")]
    ZeroPart(Vec<usize>),

    #[error("composition must be non-empty")]
    EmptyComposition,

    #[error("dominance requires equal size ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },

    #[error("not a ribbon")]
    NotRibbon,

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("diagram has {size} cells, above the expansion bound {max}")]
    TooLarge { size: usize, max: usize },

    #[error("all diagrams of a poset must have the same size")]
    MixedSizes,

    #[error("[{a},{b}] is not a valid label for N={n}, rows={rows}")]
    InvalidLabel {
        a: usize,
        b: usize,
        n: usize,
        rows: usize,
    },

    #[error("labels come from different lattices: (N={0}, rows={1}) vs (N={2}, rows={3})")]
    ContextMismatch(usize, usize, usize, usize),

    #[error("ribbon {0:?} is not multiplicity-free")]
    NotMultiplicityFree(Vec<usize>),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}
