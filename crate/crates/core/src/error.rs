use core::fmt;

/// Errors raised by group and character computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("image list is not a bijection")]
    NotAPermutation,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("group has no generators and no degree")]
    EmptyGenerators,
    #[error("not a subgroup: {0}")]
    NotASubgroup(&'static str),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group too large for {op}: order {order} exceeds {limit}")]
    TooLarge {
        op: &'static str,
        order: u128,
        limit: u128,
    },
    #[error("too many conjugacy classes: {count} exceeds {limit}")]
    TooManyClasses { count: usize, limit: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("character is not faithful")]
    NotFaithful,
    #[error("invalid character row {0}")]
    InvalidRow(usize),
    #[error("class function has {got} values, group has {expected} classes")]
    ClassCountMismatch { expected: usize, got: usize },
    #[error("not a direct product embedding: {0}")]
    NotInProduct(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("internal defect: {0}")]
    Defect(&'static str),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    Expected(char),
    ExpectedPoint,
    UnexpectedEnd,
    PointOutOfRange(usize),
    RepeatedPoint(usize),
}

/// A cycle-notation or group-file syntax error. `pos` is a byte offset within
/// the offending text; `line` is set (1-based) when parsing a whole file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParseErrorKind::Empty => write!(f, "empty permutation at offset {}", self.pos),
            ParseErrorKind::Expected(c) => write!(f, "expected '{}' at offset {}", c, self.pos),
            ParseErrorKind::ExpectedPoint => write!(f, "expected a point at offset {}", self.pos),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input at offset {}", self.pos),
            ParseErrorKind::PointOutOfRange(p) => {
                write!(f, "point {} out of range at offset {}", p, self.pos)
            }
            ParseErrorKind::RepeatedPoint(p) => {
                write!(f, "point {} repeated at offset {}", p, self.pos)
            }
        }
    }
}

impl core::error::Error for ParseError {}
