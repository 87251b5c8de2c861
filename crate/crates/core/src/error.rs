use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("hexagon sides {0:?} do not close up")]
    HexagonNotClosed([u32; 6]),
    #[error("hole cell {0} lies outside the outer hexagon")]
    HoleOutside(String),
    #[error("unknown region family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} takes {expected} parameters, got {got}")]
    Arity { family: &'static str, expected: usize, got: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("region has {cells} cells, over the budget of {budget}")]
    OverBudget { cells: usize, budget: usize },
    #[error("region is {width} columns wide; the sweep supports at most {max}")]
    TooWide { width: usize, max: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("hyperfactorial of negative argument {0}")]
    NegativeArgument(String),
    #[error("{what} did not reduce to an integer: {value}")]
    NotInteger { what: String, value: String },
    #[error("parameters ({x},{y},{z}) have the wrong parity pattern for {what}")]
    Parity { what: &'static str, x: u32, y: u32, z: u32 },
    #[error("no closed form for family {0}")]
    NoClosedForm(&'static str),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
