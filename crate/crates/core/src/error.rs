use alloc::string::String;

use crate::instance::Variant;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("weight matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("weight matrix has {actual} rows, expected {expected}")]
    WrongDimension { expected: usize, actual: usize },
    #[error("weight ({row}, {col}) = {value} is negative or not finite")]
    BadWeight { row: usize, col: usize, value: f64 },
    #[error("weights are not a semi-metric: {count} violation(s), first {first}")]
    NotMetric { count: usize, first: String },
    #[error("instance has no customers")]
    NoCustomers,
    #[error("instance has no depots")]
    NoDepots,
    #[error("capacity must be at least 1")]
    ZeroCapacity,
    #[error("customer {customer} has zero demand")]
    ZeroDemand { customer: usize },
    #[error("variant is unit but customer {customer} has demand {demand}")]
    VariantMismatch { customer: usize, demand: u64 },
    #[error("customer {customer} has demand {demand} above capacity {capacity}; unsplittable instance is infeasible")]
    Infeasible { customer: usize, demand: u64, capacity: u64 },
    #[error("customer {customer} has demand {demand} above capacity {capacity}; run preprocessing first")]
    DemandAboveCapacity { customer: usize, demand: u64, capacity: u64 },
    #[error("even k required, got k = {capacity}")]
    OddCapacity { capacity: u64 },
    #[error("{operation} does not support the {variant:?} variant")]
    UnsupportedVariant { operation: &'static str, variant: Variant },
    #[error("{what}: size {required} exceeds budget {limit}")]
    BudgetExceeded { what: &'static str, required: u64, limit: u64 },
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("perfect matching needs an even vertex count, got {count}")]
    OddVertexCount { count: usize },
    #[error("{operation} needs at least {min} vertices, got {count}")]
    TooFewVertices { operation: &'static str, min: usize, count: usize },
    #[error("vertex {vertex} is out of range")]
    VertexOutOfRange { vertex: usize },
    #[error("open walk is malformed: {reason}")]
    MalformedWalk { reason: &'static str },
    #[error("customer {customer} is not covered by any tour in the pool")]
    Uncoverable { customer: usize },
    #[error("parameter {name} = {value} is out of range")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("linear program did not converge within {iterations} pivots")]
    LpIterationLimit { iterations: usize },
    #[error("linear program is unbounded")]
    LpUnbounded,
    #[error("tree partition selected customer {customer} twice")]
    RepeatedSelection { customer: usize },
}
