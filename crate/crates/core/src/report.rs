//! Pass/fail reports carrying an exact witness.

use std::sync::atomic::{AtomicBool, Ordering};

use serde::Serialize;

use crate::scalar::Scalar;
use crate::tensor::Tensor;

static COLLECT_ALL: AtomicBool = AtomicBool::new(false);

/// When enabled, reports keep every failing witness instead of only the first.
pub fn set_collect_all_witnesses(on: bool) {
    COLLECT_ALL.store(on, Ordering::Relaxed);
}

pub fn collect_all_witnesses() -> bool {
    COLLECT_ALL.load(Ordering::Relaxed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// 1-based indices locating the failure (basis tuple, then output component).
    pub indices: Vec<usize>,
    pub residual: Scalar,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equation: Option<String>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, residual: Scalar) -> Self {
        Witness { indices, residual, equation: None }
    }

    pub fn labeled(indices: Vec<usize>, residual: Scalar, equation: impl Into<String>) -> Self {
        Witness { indices, residual, equation: Some(equation.into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub checked_count: usize,
    #[serde(skip)]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub all_witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn pass(check: impl Into<String>, checked_count: usize) -> Self {
        VerificationReport {
            check: check.into(),
            passed: true,
            witness: None,
            checked_count,
            notes: Vec::new(),
            all_witnesses: Vec::new(),
        }
    }

    pub fn fail(check: impl Into<String>, witness: Witness, checked_count: usize) -> Self {
        VerificationReport {
            check: check.into(),
            passed: false,
            witness: Some(witness.clone()),
            checked_count,
            notes: Vec::new(),
            all_witnesses: vec![witness],
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Merges several reports; the first failing part supplies the witness.
    pub fn combine(check: impl Into<String>, parts: impl IntoIterator<Item = VerificationReport>) -> Self {
        let mut out = VerificationReport::pass(check, 0);
        for part in parts {
            out.checked_count += part.checked_count;
            out.notes.extend(part.notes);
            if !part.passed {
                if out.passed {
                    out.passed = false;
                    out.witness = part.witness.map(|mut w| {
                        w.equation.get_or_insert_with(|| part.check.clone());
                        w
                    });
                }
                out.all_witnesses.extend(part.all_witnesses);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Accumulates residual checks in iteration order.
#[derive(Debug)]
pub(crate) struct Checker {
    check: String,
    count: usize,
    witnesses: Vec<Witness>,
    keep_all: bool,
}

impl Checker {
    pub fn new(check: impl Into<String>) -> Self {
        Checker { check: check.into(), count: 0, witnesses: Vec::new(), keep_all: collect_all_witnesses() }
    }

    /// Whether the first witness is already recorded and only it is wanted.
    pub fn done(&self) -> bool {
        !self.keep_all && !self.witnesses.is_empty()
    }

    pub fn tick(&mut self) {
        self.count += 1;
    }

    /// Records the first nonzero entry of `residual` (0-based components) for `tuple`.
    pub fn residuals<'a>(
        &mut self,
        tuple: &[usize],
        residual: impl IntoIterator<Item = &'a Scalar>,
        label: Option<&str>,
    ) {
        self.count += 1;
        if self.done() {
            return;
        }
        if let Some((k, r)) = residual.into_iter().enumerate().find(|(_, r)| !r.is_zero()) {
            let mut indices = tuple.to_vec();
            indices.push(k + 1);
            self.witnesses.push(Witness { indices, residual: r.clone(), equation: label.map(str::to_string) });
        }
    }

    pub fn scalar(&mut self, tuple: &[usize], residual: &Scalar, label: Option<&str>) {
        self.count += 1;
        if self.done() || residual.is_zero() {
            return;
        }
        self.witnesses.push(Witness {
            indices: tuple.to_vec(),
            residual: residual.clone(),
            equation: label.map(str::to_string),
        });
    }

    /// Records the first nonzero entry of `t`, its 1-based indices appended to `prefix`.
    pub fn tensor(&mut self, prefix: &[usize], t: &Tensor, label: Option<&str>) {
        match t.first_nonzero() {
            None => self.tick(),
            Some((idx, v)) => {
                let mut tuple = prefix.to_vec();
                tuple.extend(idx);
                self.scalar(&tuple, v, label);
            }
        }
    }

    pub fn finish(self) -> VerificationReport {
        let mut witnesses = self.witnesses.into_iter();
        match witnesses.next() {
            None => VerificationReport::pass(self.check, self.count),
            Some(first) => {
                let mut report = VerificationReport::fail(self.check, first, self.count);
                report.all_witnesses.extend(witnesses);
                report
            }
        }
    }
}
