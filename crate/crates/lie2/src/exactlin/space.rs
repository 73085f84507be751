//! Finite-dimensional vector spaces with named bases.
//!
//! A `FinSpace` is pure bookkeeping: a name plus basis labels. Carrying labels
//! through every construction keeps reports readable (witnesses are printed as
//! label tuples, direct summands keep prefixed labels).

use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
struct SpaceData {
    name: String,
    labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSpace(Arc<SpaceData>);

impl FinSpace {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Self {
        let name = name.into();
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            assert!(seen.insert(l.clone()), "duplicate basis label `{l}` in `{name}`");
        }
        FinSpace(Arc::new(SpaceData { name, labels }))
    }

    /// A space with labels `<prefix>1 ... <prefix>dim`.
    pub fn numbered(name: impl Into<String>, prefix: &str, dim: usize) -> Self {
        let labels = (1..=dim).map(|i| format!("{prefix}{i}")).collect();
        FinSpace::new(name, labels)
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// Direct sum; labels from each summand are prefixed by the summand name
    /// (the second prefix is primed when the names coincide).
    pub fn direct_sum(&self, other: &FinSpace, name: impl Into<String>) -> FinSpace {
        let mut labels = Vec::with_capacity(self.dim() + other.dim());
        for l in self.labels() {
            labels.push(format!("{}.{}", self.name(), l));
        }
        let rprefix = if other.name() == self.name() {
            format!("{}'", other.name())
        } else {
            other.name().to_string()
        };
        for l in other.labels() {
            labels.push(format!("{rprefix}.{l}"));
        }
        FinSpace::new(name, labels)
    }

    /// Same dimensions and labels; used by shape checks that must not depend
    /// on the space name.
    pub fn compatible(&self, other: &FinSpace) -> bool {
        self.0.labels == other.0.labels
    }
}

impl fmt::Display for FinSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(dim {})", self.name(), self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_sum_prefixes_labels() {
        let a = FinSpace::new("g0", vec!["e".into(), "f".into()]);
        let b = FinSpace::numbered("v", "u", 2);
        let s = a.direct_sum(&b, "g0+v");
        assert_eq!(s.dim(), 4);
        assert_eq!(s.labels(), ["g0.e", "g0.f", "v.u1", "v.u2"]);
    }

    #[test]
    #[should_panic(expected = "duplicate basis label")]
    fn rejects_duplicate_labels() {
        FinSpace::new("x", vec!["a".into(), "a".into()]);
    }
}
