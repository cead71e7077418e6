use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    /// Required for fail and inconclusive.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: &str) -> Self {
        Self {
            name: name.to_string(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn fail(name: &str, witness: String) -> Self {
        Self {
            name: name.to_string(),
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    pub fn inconclusive(name: &str, reason: String) -> Self {
        Self {
            name: name.to_string(),
            verdict: Verdict::Inconclusive,
            witness: Some(reason),
        }
    }

    pub fn from_bool(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    /// Command-specific data such as counts or tables.
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
}

impl Report {
    pub fn new(subject: &str) -> Self {
        Self {
            subject: subject.to_string(),
            checks: Vec::new(),
            details: serde_json::Value::Null,
        }
    }

    /// 0 all pass, 1 any fail, 4 otherwise inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
            1
        } else if self.checks.iter().any(|c| c.verdict == Verdict::Inconclusive) {
            4
        } else {
            0
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.subject);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Inconclusive => "inconclusive",
            };
            out.push_str(&format!("  {:width$}  {verdict}", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  {w}"));
            }
            out.push('\n');
        }
        if let serde_json::Value::Object(map) = &self.details {
            for (k, v) in map {
                let shown = match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("  {k}: {shown}\n"));
            }
        }
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            crate::io::to_json(self)
        } else {
            self.render_text()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let mut r = Report::new("x");
        assert_eq!(r.exit_code(), 0);
        r.checks.push(Check::inconclusive("a", "cap".into()));
        assert_eq!(r.exit_code(), 4);
        r.checks.push(Check::fail("b", "w".into()));
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn json_shape() {
        let mut r = Report::new("m3");
        r.checks.push(Check::pass("simple"));
        let v: serde_json::Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(v["checks"][0]["verdict"], "pass");
        assert!(v["checks"][0].get("witness").is_none());
        assert!(v.get("details").is_none());
    }
}
