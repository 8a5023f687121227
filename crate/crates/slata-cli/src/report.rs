//! Deterministic reports: a flat list of named checks plus rendered
//! artifacts, printable as text or structured JSON (`slata-report/1`).
//! Identical inputs give byte-identical output; the timing field is the
//! one exception and can be suppressed.

use serde::Serialize;

use slata::Verdict;

pub const SCHEMA: &str = "slata-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn from_verdict(name: impl Into<String>, v: &Verdict) -> Check {
        let (status, witness) = match v {
            Verdict::Pass => ("pass", None),
            Verdict::Vacuous => ("vacuous", None),
            Verdict::Fail(w) => ("fail", Some(w.clone())),
        };
        Check {
            name: name.into(),
            status,
            witness,
        }
    }

    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: "pass",
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: "fail",
            witness: Some(witness.into()),
        }
    }

    pub fn of(name: impl Into<String>, r: Result<(), impl std::fmt::Display>) -> Check {
        match r {
            Ok(()) => Check::pass(name),
            Err(e) => Check::fail(name, e.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != "fail"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Artifact {
    pub name: String,
    pub lines: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub input: String,
    pub name: String,
    pub checks: Vec<Check>,
    pub artifacts: Vec<Artifact>,
    pub result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, input: &str, name: &str) -> Report {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            input: input.to_string(),
            name: name.to_string(),
            checks: Vec::new(),
            artifacts: Vec::new(),
            result: "pass",
            timing_ms: None,
        }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn verdicts<'a, N, I>(&mut self, prefix: &str, it: I)
    where
        N: AsRef<str>,
        I: IntoIterator<Item = (N, &'a Verdict)>,
    {
        for (name, v) in it {
            self.check(Check::from_verdict(format!("{prefix}{}", name.as_ref()), v));
        }
    }

    pub fn artifact(&mut self, name: &str, lines: Vec<String>) {
        self.artifacts.push(Artifact {
            name: name.to_string(),
            lines,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Recomputes the summary field; call once the checks are complete.
    pub fn seal(&mut self) {
        self.result = if self.all_pass() { "pass" } else { "fail" };
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.schema));
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}\n", self.input));
        out.push_str(&format!("name: {}\n", self.name));
        for c in &self.checks {
            match &c.witness {
                Some(w) => out.push_str(&format!("check {}: {} [{}]\n", c.name, c.status, w)),
                None => out.push_str(&format!("check {}: {}\n", c.name, c.status)),
            }
        }
        for a in &self.artifacts {
            out.push_str(&format!("artifact {}:\n", a.name));
            for l in &a.lines {
                out.push_str(&format!("  {l}\n"));
            }
        }
        out.push_str(&format!("result: {}\n", self.result));
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("timing-ms: {ms}\n"));
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_stable_and_timing_is_optional() {
        let mut r = Report::new("validate", "x.sla", "x");
        r.check(Check::pass("a.one"));
        r.check(Check::fail("a.two", "witness (0, 1)"));
        r.artifact("order", vec!["0 < 1".into()]);
        r.seal();
        let t = r.render_text();
        assert!(t.starts_with("slata-report/1\n"));
        assert!(t.contains("check a.two: fail [witness (0, 1)]"));
        assert!(t.ends_with("result: fail\n"));
        assert_eq!(t, r.render_text());
        let j = r.render_json();
        assert!(j.contains("\"schema\": \"slata-report/1\""));
        assert!(!j.contains("timing_ms"));
        r.timing_ms = Some(3);
        assert!(r.render_text().ends_with("timing-ms: 3\n"));
        assert!(r.render_json().contains("\"timing_ms\": 3"));
    }

    #[test]
    fn vacuous_counts_as_passing() {
        let mut r = Report::new("validate", "x.sla", "x");
        r.check(Check::from_verdict("s4", &Verdict::Vacuous));
        r.seal();
        assert!(r.all_pass());
        assert_eq!(r.result, "pass");
    }
}
