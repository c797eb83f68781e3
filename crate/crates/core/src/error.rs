use thiserror::Error;

use crate::expansion::Basis;

/// Errors shared by the partition, permutation and poset modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("composition parts must be positive: {0:?}")]
    InvalidComposition(Vec<u32>),
    #[error("descent {descent} lies outside 1..={max}")]
    InvalidDescent { descent: u32, max: u32 },
    #[error("degree mismatch: {left} != {right}")]
    SizeMismatch { left: u32, right: u32 },
    #[error("expected a {expected} expansion, got {found}")]
    BasisMismatch { expected: Basis, found: Basis },
    #[error(
        "expansion is not symmetric: {first:?} has coefficient {first_coeff}, \
         rearrangement {second:?} has coefficient {second_coeff}"
    )]
    NotSymmetric {
        first: Vec<u32>,
        first_coeff: String,
        second: Vec<u32>,
        second_coeff: String,
    },
    #[error("{inner:?} is not contained in {outer:?}")]
    NotContained { inner: Vec<u32>, outer: Vec<u32> },
    #[error("not 321-avoiding: positions {positions:?} carry decreasing values {values:?}")]
    Not321Avoiding {
        positions: [i64; 3],
        values: [i64; 3],
    },
    #[error("word does not multiply to a reduced expression")]
    NotReduced,
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("the identity permutation determines no interval")]
    IdentityHasNoInterval,
    #[error("chain index {index} must satisfy 1 < index < {len}")]
    ChainIndexOutOfRange { index: usize, len: usize },
    #[error("chain triple at {index} matches no rewrite case")]
    UnmatchedTriple { index: usize },
    #[error("chain labels do not compose on the recorded start permutation")]
    BrokenChain,
    #[error("transposition label ({a},{b}) must satisfy a < b and b - a <= {k}")]
    InvalidLabel { a: i64, b: i64, k: usize },
    #[error("window is not 0-grassmannian")]
    NotGrassmannian,
    #[error("partition is not {k}-bounded: {parts:?}")]
    NotKBounded { k: usize, parts: Vec<u32> },
    #[error("pieri matrix fails to be unitriangular at {0:?}")]
    NotTriangular(Vec<u32>),
    #[error("pieri degree {m} exceeds k = {k}")]
    PieriDegree { m: usize, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
