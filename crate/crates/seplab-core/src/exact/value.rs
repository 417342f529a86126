use std::cmp::Ordering;
use std::fmt;

/// A valuation value: a finite integer or the distinguished `Inf`.
///
/// `Inf` marks membership in the support and is never encoded as a large
/// integer; arithmetic absorbs it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Value {
    Fin(i64),
    Inf,
}

impl Value {
    pub fn is_finite(self) -> bool {
        matches!(self, Value::Fin(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Value::Fin(v) => Some(v),
            Value::Inf => None,
        }
    }

    /// Finite value or panic; for callers that have already checked.
    pub fn unwrap_finite(self) -> i64 {
        self.finite().expect("unexpected infinite value")
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Inf, Value::Inf) => Ordering::Equal,
            (Value::Inf, Value::Fin(_)) => Ordering::Greater,
            (Value::Fin(_), Value::Inf) => Ordering::Less,
            (Value::Fin(a), Value::Fin(b)) => a.cmp(b),
        }
    }
}

impl std::ops::Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Fin(a), Value::Fin(b)) => Value::Fin(a + b),
            _ => Value::Inf,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Fin(v) => write!(f, "{v}"),
            Value::Inf => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_addition() {
        assert!(Value::Fin(5) < Value::Inf);
        assert!(Value::Fin(-1) < Value::Fin(0));
        assert_eq!(Value::Fin(2) + Value::Fin(3), Value::Fin(5));
        assert_eq!(Value::Fin(2) + Value::Inf, Value::Inf);
        assert_eq!(format!("{}", Value::Inf), "inf");
    }
}
