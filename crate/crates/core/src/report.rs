use serde::Serialize;

/// Outcome of one sampled check. Field names are stable; the CLI prints
/// these records verbatim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    /// Short name of the law being exercised.
    pub law: String,
    pub instance: String,
    pub seed: u64,
    pub pairs: usize,
    pub violations: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Set when the check could not run because its hypothesis failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(check: &str, law: &str, instance: impl Into<String>, seed: u64) -> Self {
        Report {
            check: check.into(),
            law: law.into(),
            instance: instance.into(),
            seed,
            pairs: 0,
            violations: 0,
            passed: true,
            witness: None,
            precondition: None,
            notes: Vec::new(),
        }
    }

    /// Counts one case; the first failing case supplies the witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.pairs += 1;
        if !ok {
            self.violations += 1;
            self.passed = false;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn fail_precondition(&mut self, why: impl Into<String>) {
        self.passed = false;
        self.precondition = Some(why.into());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_witness_wins() {
        let mut r = Report::new("axioms", "superadditivity", "demo", 1);
        r.record(true, || unreachable!());
        r.record(false, || "a".into());
        r.record(false, || "b".into());
        assert_eq!((r.pairs, r.violations, r.passed), (3, 2, false));
        assert_eq!(r.witness.as_deref(), Some("a"));
        let j = r.to_json();
        assert_eq!(j["check"], "axioms");
        assert!(j.get("precondition").is_none());
    }
}
