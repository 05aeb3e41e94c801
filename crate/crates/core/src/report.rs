//! Check outcomes shared by all verification operations.

use std::fmt;

use crate::freealg::{NCPoly, TensorPoly};
use crate::scalar::{Scalar, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    PassWithNote,
    Fail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self != Status::Fail
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::PassWithNote => "pass-with-note",
            Status::Fail => "fail",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Size of a residual: number of nonzero entries and the lowest z-order
/// at which any of them is nonzero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Residual {
    pub nonzero: usize,
    pub first_order: Option<usize>,
}

impl Residual {
    pub fn zero() -> Self {
        Residual::default()
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero == 0
    }

    pub fn of_series<C: Scalar>(s: &Series<C>) -> Self {
        match s.valuation() {
            Some(v) => Residual { nonzero: 1, first_order: Some(v) },
            None => Residual::zero(),
        }
    }

    pub fn of_poly<C: Scalar>(p: &NCPoly<C>) -> Self {
        p.terms().fold(Residual::zero(), |r, (_, c)| r.merge(Residual::of_series(c)))
    }

    pub fn of_tensor<C: Scalar>(t: &TensorPoly<C>) -> Self {
        t.terms().fold(Residual::zero(), |r, (_, c)| r.merge(Residual::of_series(c)))
    }

    pub fn merge(self, o: Residual) -> Residual {
        let first_order = match (self.first_order, o.first_order) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Residual { nonzero: self.nonzero + o.nonzero, first_order }
    }
}

/// One named check with its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub residual: Residual,
    pub notes: Vec<String>,
}

impl CheckOutcome {
    /// Pass iff the residual is zero.
    pub fn from_residual(name: impl Into<String>, residual: Residual) -> Self {
        let status = if residual.is_zero() { Status::Pass } else { Status::Fail };
        CheckOutcome { name: name.into(), status, residual, notes: Vec::new() }
    }

    pub fn failed(name: impl Into<String>, note: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: Status::Fail,
            residual: Residual::zero(),
            notes: vec![note.into()],
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Attach a note and upgrade a plain pass to pass-with-note.
    pub fn noted(mut self, note: impl Into<String>) -> Self {
        if self.status == Status::Pass {
            self.status = Status::PassWithNote;
        }
        self.notes.push(note.into());
        self
    }
}

/// Ordered collection of outcomes from one verification operation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, o: CheckOutcome) {
        self.outcomes.push(o);
    }

    pub fn extend(&mut self, other: Report) {
        self.outcomes.extend(other.outcomes);
    }

    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.status.is_pass())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.status.is_pass())
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    pub fn residual(&self) -> Residual {
        self.outcomes.iter().fold(Residual::zero(), |r, o| r.merge(o.residual))
    }

    /// Worst status, with notes concatenated.
    pub fn summary(&self, name: impl Into<String>) -> CheckOutcome {
        let status = self.outcomes.iter().map(|o| o.status).max().unwrap_or(Status::Pass);
        let mut notes = Vec::new();
        for o in &self.outcomes {
            if o.status == Status::Fail {
                notes.push(format!("{} failed", o.name));
            }
            for n in &o.notes {
                notes.push(format!("{}: {n}", o.name));
            }
        }
        CheckOutcome { name: name.into(), status, residual: self.residual(), notes }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            write!(f, "{:<40} {:<15} nonzero={}", o.name, o.status.label(), o.residual.nonzero)?;
            if let Some(k) = o.residual.first_order {
                write!(f, " first-order={k}")?;
            }
            writeln!(f)?;
            for n in &o.notes {
                writeln!(f, "    {n}")?;
            }
        }
        Ok(())
    }
}
