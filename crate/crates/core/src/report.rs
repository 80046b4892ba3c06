//! Machine-readable reports produced by the command-line front end.
//!
//! The JSON body is a pure function of the command and its inputs. Wall
//! time is kept in its own optional field so that reports compare
//! byte-for-byte across runs when timing is not requested.

use serde::Serialize;
use serde_json::Value;

use crate::design::Verdict;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub verdict: Verdict,
    pub witness: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self { command, checks: Vec::new(), verdict: Verdict::Pass, elapsed_ms: None }
    }

    pub fn push(&mut self, id: impl Into<String>, verdict: Verdict, witness: impl Serialize) {
        let witness = serde_json::to_value(witness).unwrap_or_else(|e| Value::String(e.to_string()));
        self.checks.push(Check { id: id.into(), verdict, witness });
        self.verdict = overall(self.checks.iter().map(|c| c.verdict));
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<6} {}  {}\n", tag(c.verdict), c.id, c.witness));
        }
        out.push_str(&format!("{:<6} overall\n", tag(self.verdict)));
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed {ms} ms\n"));
        }
        out
    }
}

fn tag(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::HypothesisUnmet => "UNMET",
    }
}

/// `Fail` dominates `HypothesisUnmet`, which dominates `Pass`.
pub fn overall(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut out = Verdict::Pass;
    for v in vs {
        match v {
            Verdict::Fail => return Verdict::Fail,
            Verdict::HypothesisUnmet => out = Verdict::HypothesisUnmet,
            Verdict::Pass => {}
        }
    }
    out
}
