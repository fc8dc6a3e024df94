use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One checked claim. `expected` and `computed` are JSON values; a verdict
/// built from two comparable values passes exactly when they are equal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub citation: String,
    pub pass: bool,
    pub expected: Value,
    pub computed: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdicts: Vec<Verdict>,
    pub witnesses: BTreeMap<String, Value>,
    pub runtime_ms: u64,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    pub fn verdict(&self, claim: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.claim == claim)
    }

    pub fn witness(&self, key: &str) -> Option<&Value> {
        self.witnesses.get(key)
    }
}

/// Collects verdicts and witnesses while a scenario runs.
pub(crate) struct ReportBuilder {
    report: ScenarioReport,
    started: Instant,
}

fn json(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

impl ReportBuilder {
    pub fn new(scenario: &str) -> ReportBuilder {
        ReportBuilder {
            report: ScenarioReport {
                scenario: scenario.to_string(),
                parameters: BTreeMap::new(),
                verdicts: Vec::new(),
                witnesses: BTreeMap::new(),
                runtime_ms: 0,
            },
            started: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.report.parameters.insert(key.to_string(), json(value));
        self
    }

    pub fn check<T: Serialize + PartialEq>(&mut self, claim: &str, citation: &str, expected: T, computed: T) -> bool {
        let pass = expected == computed;
        self.push(claim, citation, pass, json(expected), json(computed));
        pass
    }

    pub fn holds(&mut self, claim: &str, citation: &str, ok: bool) -> bool {
        self.check(claim, citation, true, ok)
    }

    pub fn push(&mut self, claim: &str, citation: &str, pass: bool, expected: Value, computed: Value) {
        self.report.verdicts.push(Verdict { claim: claim.into(), citation: citation.into(), pass, expected, computed });
    }

    pub fn witness(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.report.witnesses.insert(key.to_string(), json(value));
        self
    }

    pub fn finish(mut self) -> ScenarioReport {
        self.report.runtime_ms = self.started.elapsed().as_millis() as u64;
        self.report
    }
}

fn short(v: &Value) -> String {
    let s = v.to_string();
    if s.chars().count() > 60 {
        format!("{}…", s.chars().take(59).collect::<String>())
    } else {
        s
    }
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "scenario {} ({}) in {} ms", self.scenario, params.join(", "), self.runtime_ms)?;
        for v in &self.verdicts {
            let mark = if v.pass { "pass" } else { "FAIL" };
            writeln!(f, "  [{mark}] {}", v.claim)?;
            writeln!(f, "         {}", v.citation)?;
            if !v.pass || v.expected != Value::Bool(true) {
                writeln!(f, "         expected {} computed {}", short(&v.expected), short(&v.computed))?;
            }
        }
        if !self.witnesses.is_empty() {
            writeln!(f, "  witnesses:")?;
            for (k, v) in &self.witnesses {
                writeln!(f, "    {k}: {}", short(v))?;
            }
        }
        let passed = self.verdicts.iter().filter(|v| v.pass).count();
        write!(f, "  {passed}/{} verdicts pass", self.verdicts.len())
    }
}
