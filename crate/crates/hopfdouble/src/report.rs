//! Pass/fail ledgers shared by every verifier.

use serde::{Deserialize, Serialize};

use crate::exactmath::{Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport { subject: subject.into(), entries: Vec::new() }
    }

    pub fn overall(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|e| e.pass)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| !e.pass).map(|e| e.id.as_str()).collect()
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.entries.push(CheckEntry { id: id.into(), pass: true, witness: None });
    }

    pub fn fail(&mut self, id: impl Into<String>, indices: Vec<usize>, lhs: &Scalar, rhs: &Scalar) {
        let witness = Witness { indices, lhs: lhs.render(), rhs: rhs.render() };
        self.entries.push(CheckEntry { id: id.into(), pass: false, witness: Some(witness) });
    }

    /// Records a failure whose witness is a pair of counts, not scalars.
    pub fn fail_counts(&mut self, id: impl Into<String>, indices: Vec<usize>, lhs: usize, rhs: usize) {
        let witness = Witness { indices, lhs: lhs.to_string(), rhs: rhs.to_string() };
        self.entries.push(CheckEntry { id: id.into(), pass: false, witness: Some(witness) });
    }

    /// Pass when `ok`, otherwise fail with an empty index witness.
    pub fn flag(&mut self, id: impl Into<String>, ok: bool) {
        if ok {
            self.pass(id);
        } else {
            let witness = Witness { indices: Vec::new(), lhs: "false".into(), rhs: "true".into() };
            self.entries.push(CheckEntry { id: id.into(), pass: false, witness: Some(witness) });
        }
    }

    /// Compares two matrices entrywise; the witness is the first differing
    /// (row, column) with both values.
    pub fn check_eq(&mut self, id: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> bool {
        match lhs.first_difference(rhs) {
            None => {
                self.pass(id);
                true
            }
            Some((i, j, a, b)) => {
                self.fail(id, vec![i, j], &a, &b);
                false
            }
        }
    }

    /// Appends the entries of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut e in other.entries {
            e.id = format!("{}{}", prefix, e.id);
            self.entries.push(e);
        }
    }
}

/// Splits a flat tensor index into factor indices, leftmost slowest.
pub fn split_index(mut k: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for t in (0..dims.len()).rev() {
        out[t] = k % dims[t].max(1);
        k /= dims[t].max(1);
    }
    out
}

impl VerificationReport {
    /// Like [`check_eq`](Self::check_eq) for map matrices whose source and
    /// target factor as `src` and `dst`; the witness lists the source
    /// basis tuple followed by the target basis tuple.
    pub fn check_map(&mut self, id: impl Into<String>, lhs: &Matrix, rhs: &Matrix, src: &[usize], dst: &[usize]) -> bool {
        match lhs.first_difference(rhs) {
            None => {
                self.pass(id);
                true
            }
            Some((i, j, a, b)) => {
                let mut idx = split_index(i, src);
                idx.extend(split_index(j, dst));
                self.fail(id, idx, &a, &b);
                false
            }
        }
    }
}
