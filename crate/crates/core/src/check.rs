//! Outcomes of identity checks, with reproducible counterexamples.

use serde::Serialize;

use crate::cli::serial::{serialize, serialize_scalar, SerialCoeff};
use crate::corealg::LaurentPoly;
use crate::error::Result;

/// Counterexamples kept per check; the total count is always exact.
pub const MAX_EXAMPLES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub examples: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Values comparable in a check and printable canonically.
pub trait Canonical: PartialEq {
    fn canonical(&self) -> String;
}

impl<C: SerialCoeff> Canonical for LaurentPoly<C> {
    fn canonical(&self) -> String {
        serialize(self)
    }
}

macro_rules! scalar_canonical {
    ($($t:ty),*) => {$(
        impl Canonical for $t {
            fn canonical(&self) -> String {
                serialize_scalar(self)
            }
        }
    )*};
}
scalar_canonical!(crate::corealg::Rational, crate::corealg::QLaurent, crate::corealg::QRatio);

impl Canonical for bool {
    fn canonical(&self) -> String {
        self.to_string()
    }
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), cases: 0, failures: 0, examples: Vec::new(), note: None }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn fail(&mut self, case: impl Into<String>, lhs: String, rhs: String) {
        self.cases += 1;
        self.failures += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(Mismatch { case: case.into(), lhs, rhs });
        }
    }

    pub fn pass(&mut self) {
        self.cases += 1;
    }

    /// Records `lhs == rhs` for one case.
    pub fn compare<T: Canonical>(&mut self, case: impl Into<String>, lhs: &T, rhs: &T) {
        if lhs == rhs {
            self.pass();
        } else {
            self.fail(case, lhs.canonical(), rhs.canonical());
        }
    }

    /// Records every case of a per-case computation; an error counts as a
    /// failure whose left side is the error message.
    pub fn compare_all<T: Canonical>(&mut self, results: impl IntoIterator<Item = (String, Result<(T, T)>)>) {
        for (case, r) in results {
            match r {
                Ok((a, b)) => self.compare(case, &a, &b),
                Err(e) => self.fail(case, format!("error: {e}"), String::new()),
            }
        }
    }

    pub fn merge(&mut self, other: CheckOutcome) {
        self.cases += other.cases;
        self.failures += other.failures;
        for m in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(m);
            }
        }
    }
}
