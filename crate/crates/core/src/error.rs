use thiserror::Error;

use crate::partition::Partition;
use crate::permutation::Permutation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("Jack parameter must be positive, got {0}")]
    NonPositiveAlpha(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("size mismatch: |{left}| != |{right}|")]
    SizeMismatch { left: Partition, right: Partition },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("n = {n} is too small for {mu} (need n >= |mu| + l(mu) = {need})")]
    TooSmall { mu: Partition, n: usize, need: usize },

    #[error("brute force requested for n = {n}, configured limit is {limit}")]
    BruteForceLimit { n: usize, limit: usize },

    #[error("element is not central: [{a}] and [{b}] are conjugate with different coefficients")]
    NotCentral { a: Permutation, b: Permutation },

    #[error("element is not H_n-biinvariant: [{a}] and [{b}] lie in one double coset with incompatible coefficients")]
    NotBiinvariant { a: Permutation, b: Permutation },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("interpolation check failed at n = {n}: polynomial gives {predicted}, direct value is {actual}")]
    InterpolationMismatch {
        n: usize,
        predicted: String,
        actual: String,
    },

    #[error("N = {big_n} is below n = {n}")]
    DimensionTooSmall { big_n: usize, n: usize },
}
