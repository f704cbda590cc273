use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exact::{fmt_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Refuted,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// A computed equality or inequality.
    Check,
    /// An imported fact that is assumed, not computed.
    Axiom,
    /// Informational line.
    Note,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub kind: StepKind,
    pub text: String,
    pub passed: bool,
}

/// Verdict plus the trail of checks that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    /// Which statement of the classification this case re-derives.
    pub paper_ref: String,
    pub values: BTreeMap<String, Value>,
    pub transcript: Vec<Step>,
    pub verdict: Verdict,
}

impl CaseReport {
    pub fn new(id: impl Into<String>, paper_ref: impl Into<String>) -> Self {
        CaseReport {
            id: id.into(),
            paper_ref: paper_ref.into(),
            values: BTreeMap::new(),
            transcript: vec![],
            verdict: Verdict::Inapplicable,
        }
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    /// Record a check and return its outcome.
    pub fn check(&mut self, text: impl Into<String>, passed: bool) -> bool {
        self.transcript.push(Step { kind: StepKind::Check, text: text.into(), passed });
        passed
    }

    pub fn axiom(&mut self, text: impl Into<String>) {
        self.transcript.push(Step { kind: StepKind::Axiom, text: text.into(), passed: true });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.transcript.push(Step { kind: StepKind::Note, text: text.into(), passed: true });
    }

    pub fn all_passed(&self) -> bool {
        self.transcript.iter().all(|s| s.passed)
    }

    /// Confirmed iff every step passed.
    pub fn finish(mut self) -> Self {
        self.verdict = if self.all_passed() { Verdict::Confirmed } else { Verdict::Refuted };
        self
    }

    pub fn inapplicable(mut self, why: impl Into<String>) -> Self {
        self.note(why);
        self.verdict = Verdict::Inapplicable;
        self
    }

    pub fn is_confirmed(&self) -> bool {
        self.verdict == Verdict::Confirmed
    }
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {} ({})", self.verdict, self.id, self.paper_ref)?;
        for (k, v) in &self.values {
            match v {
                Value::String(s) => writeln!(f, "  {k} = {s}")?,
                other => writeln!(f, "  {k} = {other}")?,
            }
        }
        for s in &self.transcript {
            let tag = match (s.kind, s.passed) {
                (StepKind::Check, true) => "ok  ",
                (StepKind::Check, false) => "FAIL",
                (StepKind::Axiom, _) => "ax  ",
                (StepKind::Note, _) => "    ",
            };
            writeln!(f, "  {tag} {}", s.text)?;
        }
        Ok(())
    }
}

/// Exact rational as a JSON string `"num/den"`.
pub fn rat_value(x: &Rational) -> Value {
    Value::String(fmt_rational(x))
}
