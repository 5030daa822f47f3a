use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on the number of generators.
pub const MAX_GENERATORS: usize = 12;

/// Ordered generator squares of `G(p,q)`, with display labels.
///
/// Equality compares the squares only; labels are cosmetic.
#[derive(Clone)]
pub struct Signature {
    squares: Vec<i8>,
    labels: Vec<String>,
    name: Option<String>,
}

impl Signature {
    pub fn new(squares: Vec<i8>) -> Result<Self> {
        let labels = (1..=squares.len()).map(|i| format!("e{i}")).collect();
        Self::with_labels(squares, labels, None)
    }

    pub fn with_labels(squares: Vec<i8>, labels: Vec<String>, name: Option<String>) -> Result<Self> {
        if squares.len() > MAX_GENERATORS {
            return Err(Error::Range {
                what: "generator count",
                value: squares.len() as i64,
                range: "0..=12",
            });
        }
        if let Some(bad) = squares.iter().find(|s| **s != 1 && **s != -1) {
            return Err(Error::Schema(format!("generator square {bad} is not ±1")));
        }
        if labels.len() != squares.len() {
            return Err(Error::DimensionMismatch {
                expected: squares.len(),
                found: labels.len(),
            });
        }
        Ok(Self {
            squares,
            labels,
            name,
        })
    }

    /// `G(n,n)` in the order `e1, f1, …, en, fn`.
    pub fn g_nn(n: usize) -> Self {
        let mut squares = Vec::with_capacity(2 * n);
        let mut labels = Vec::with_capacity(2 * n);
        for i in 1..=n {
            squares.extend([1, -1]);
            labels.push(format!("e{i}"));
            labels.push(format!("f{i}"));
        }
        Self::with_labels(squares, labels, Some(format!("g{n}{n}")))
            .expect("preset within generator cap")
    }

    /// `G(1,n)` in the order `e1, f1, …, fn`.
    pub fn g_1n(n: usize) -> Self {
        let mut squares = vec![1];
        let mut labels = vec!["e1".to_string()];
        for i in 1..=n {
            squares.push(-1);
            labels.push(format!("f{i}"));
        }
        Self::with_labels(squares, labels, Some(format!("g1{n}")))
            .expect("preset within generator cap")
    }

    /// Euclidean `G(3)`.
    pub fn g3() -> Self {
        Self::with_labels(
            vec![1, 1, 1],
            vec!["e1".into(), "e2".into(), "e3".into()],
            Some("g3".into()),
        )
        .expect("preset")
    }

    /// Spacetime `G(1,3)` with generators `γ0 … γ3`.
    pub fn g13() -> Self {
        Self::with_labels(
            vec![1, -1, -1, -1],
            (0..4).map(|i| format!("γ{i}")).collect(),
            Some("g13".into()),
        )
        .expect("preset")
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn dim(&self) -> usize {
        self.squares.len()
    }

    /// Number of blades, `2^m`.
    pub fn blade_count(&self) -> usize {
        1 << self.squares.len()
    }

    pub fn square(&self, i: usize) -> i8 {
        self.squares[i]
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `(p, q)`: counts of positive and negative squares.
    pub fn pq(&self) -> (usize, usize) {
        let p = self.squares.iter().filter(|s| **s > 0).count();
        (p, self.squares.len() - p)
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.squares == other.squares
    }
}

impl Eq for Signature {}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.pq();
        match &self.name {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "G({p},{q})"),
        }?;
        write!(f, "{:?}", self.squares)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        assert_eq!(Signature::g_nn(2).squares(), &[1, -1, 1, -1]);
        assert_eq!(Signature::g_1n(3).squares(), &[1, -1, -1, -1]);
        assert_eq!(Signature::g_1n(7).pq(), (1, 7));
        assert_eq!(Signature::g_nn(4).blade_count(), 256);
        assert_eq!(Signature::g13().label(2), "γ2");
    }

    #[test]
    fn rejects_oversized_and_bad_squares() {
        assert!(Signature::new(vec![1; 13]).is_err());
        assert!(Signature::new(vec![1; 12]).is_ok());
        assert!(Signature::new(vec![1, 0]).is_err());
    }
}
