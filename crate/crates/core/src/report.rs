//! Verification reports: one entry per checked identity, with the first
//! violating basis tuple and both sides' coordinates on failure.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub axiom: String,
    pub location: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl Check {
    pub fn pass(axiom: impl Into<String>, location: impl Into<String>) -> Self {
        Check { axiom: axiom.into(), location: location.into(), status: Status::Pass, witness: None, lhs: None, rhs: None }
    }

    pub fn fail(axiom: impl Into<String>, location: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            axiom: axiom.into(),
            location: location.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
            lhs: None,
            rhs: None,
        }
    }

    pub fn info(axiom: impl Into<String>, location: impl Into<String>, note: impl Into<String>) -> Self {
        Check {
            axiom: axiom.into(),
            location: location.into(),
            status: Status::Info,
            witness: Some(note.into()),
            lhs: None,
            rhs: None,
        }
    }

    pub fn with_sides(mut self, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        self.lhs = Some(lhs.to_string());
        self.rhs = Some(rhs.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Pass => write!(f, "PASS {} [{}]", self.axiom, self.location),
            Status::Info => write!(f, "INFO {} [{}]: {}", self.axiom, self.location, self.witness.as_deref().unwrap_or("")),
            Status::Fail => {
                write!(f, "FAIL {} [{}]: {} axiom at {}", self.axiom, self.location, self.axiom, self.witness.as_deref().unwrap_or("?"))?;
                if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
                    write!(f, "; lhs {l}; rhs {r}")?;
                }
                Ok(())
            }
        }
    }
}

/// Ordered list of checks plus optional header fields (e.g. a sampling seed).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub header: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        for h in other.header {
            if !self.header.contains(&h) {
                self.header.push(h);
            }
        }
        self.checks.extend(other.checks);
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.header.push((key.into(), value.into()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn find(&self, axiom: &str) -> impl Iterator<Item = &Check> {
        let a = axiom.to_string();
        self.checks.iter().filter(move |c| c.axiom == a)
    }

    /// JSON lines: a header object first when present, then one object per check.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        if !self.header.is_empty() {
            let map: serde_json::Map<String, serde_json::Value> =
                self.header.iter().map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone()))).collect();
            let obj = serde_json::json!({ "header": map });
            out.push_str(&obj.to_string());
            out.push('\n');
        }
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("report entries serialize"));
            out.push('\n');
        }
        out
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.header {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

/// Runs an identity over `cases`, stopping at the first mismatch.
pub fn sweep<T, V, I>(
    axiom: &str,
    location: &str,
    cases: I,
    describe: impl Fn(&T) -> String,
    mut eval: impl FnMut(&T) -> (V, V),
) -> Check
where
    I: IntoIterator<Item = T>,
    V: PartialEq + fmt::Display,
{
    for case in cases {
        let (l, r) = eval(&case);
        if l != r {
            return Check::fail(axiom, location, describe(&case)).with_sides(l, r);
        }
    }
    Check::pass(axiom, location)
}

/// Equality of two whole objects (matrices, tensors) as a single check.
pub fn compare<V: PartialEq + fmt::Debug>(axiom: &str, location: &str, what: &str, lhs: &V, rhs: &V) -> Check {
    if lhs == rhs {
        Check::pass(axiom, location)
    } else {
        Check::fail(axiom, location, what).with_sides(format!("{lhs:?}"), format!("{rhs:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_records_first_failure() {
        let c = sweep("even", "test", 0..10, |i| format!("i={i}"), |i| (i % 2, if *i == 3 { 0 } else { i % 2 }));
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witness.as_deref(), Some("i=3"));
        assert_eq!(c.lhs.as_deref(), Some("1"));
    }

    #[test]
    fn json_lines_are_stable() {
        let mut r = Report::new();
        r.note("seed", "7");
        r.push(Check::pass("a", "x"));
        r.push(Check::fail("b", "y", "basis 'g'").with_sides("[0:1]", "[1:1]"));
        let s = r.to_json_lines();
        assert_eq!(
            s,
            "{\"header\":{\"seed\":\"7\"}}\n{\"axiom\":\"a\",\"location\":\"x\",\"status\":\"pass\"}\n\
             {\"axiom\":\"b\",\"location\":\"y\",\"status\":\"fail\",\"witness\":\"basis 'g'\",\"lhs\":\"[0:1]\",\"rhs\":\"[1:1]\"}\n"
        );
        assert!(!r.passed());
    }
}
