//! Verification reports: which law failed, at which basis witness, with what
//! defect vector.

use crate::ring::Ring;
use std::fmt;

/// One failed law instance. The defect is the left-minus-right side of the
/// law evaluated at the witness.
#[derive(Clone, Debug)]
pub struct Failure<R> {
    pub law: String,
    pub witness: Vec<String>,
    pub defect: Vec<R>,
}

impl<R: Ring> fmt::Display for Failure<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({}): [", self.law, self.witness.join(", "))?;
        for (i, d) in self.defect.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Outcome of running a verifier over every canonical basis tuple.
#[derive(Clone, Debug)]
pub struct AxiomReport<R> {
    failures: Vec<Failure<R>>,
}

impl<R: Ring> AxiomReport<R> {
    pub fn new() -> Self {
        AxiomReport { failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure<R>] {
        &self.failures
    }

    pub fn record(&mut self, law: &str, witness: Vec<String>, defect: Vec<R>) {
        if !defect.iter().all(|x| x.is_zero()) {
            self.failures.push(Failure {
                law: law.to_string(),
                witness,
                defect,
            });
        }
    }

    /// Deterministic report order: by law id, then witness.
    pub fn finish(mut self) -> Self {
        self.failures
            .sort_by(|a, b| (&a.law, &a.witness).cmp(&(&b.law, &b.witness)));
        self
    }

    pub fn merge(&mut self, other: AxiomReport<R>) {
        self.failures.extend(other.failures);
    }

    pub fn first_failure(&self) -> Option<&Failure<R>> {
        self.failures.first()
    }

    /// Summary like `failed hom.3 at (e, f, h)` for error messages.
    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => "passed".to_string(),
            Some(f) => format!(
                "failed {} at ({}){}",
                f.law,
                f.witness.join(", "),
                if self.failures.len() > 1 {
                    format!(" and {} more", self.failures.len() - 1)
                } else {
                    String::new()
                }
            ),
        }
    }
}

impl<R: Ring> Default for AxiomReport<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Ring> fmt::Display for AxiomReport<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "passed")
        } else {
            writeln!(f, "{} failure(s):", self.failures.len())?;
            for fail in &self.failures {
                writeln!(f, "  {fail}")?;
            }
            Ok(())
        }
    }
}
