//! Check results and machine-readable reports.
//!
//! Reports are deterministic: checks are sorted by name, parameters carry the
//! seed, and nothing time- or environment-dependent is recorded, so the same
//! invocation always serializes to the same bytes.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Info,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status: CheckStatus::Pass, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status: CheckStatus::Fail, detail: detail.into() }
    }

    pub fn info(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status: CheckStatus::Info, detail: detail.into() }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status: CheckStatus::Skipped, detail: detail.into() }
    }

    pub fn from_bool(
        name: impl Into<String>,
        ok: bool,
        detail_pass: impl Into<String>,
        detail_fail: impl Into<String>,
    ) -> Check {
        if ok {
            Check::pass(name, detail_pass)
        } else {
            Check::fail(name, detail_fail)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub n: usize,
    pub metric: String,
    #[serde(rename = "maxDegree")]
    pub max_degree: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: Params,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, params: Params, mut checks: Vec<Check>) -> Report {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report { suite: suite.into(), params, checks }
    }

    /// True when no check failed (informational notes do not count).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {}  (n={}, metric={}, max-degree={}, seed={})\n",
            self.suite, self.params.n, self.params.metric, self.params.max_degree,
            self.params.seed
        ));
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "  ok  ",
                CheckStatus::Fail => " FAIL ",
                CheckStatus::Info => " info ",
                CheckStatus::Skipped => " skip ",
            };
            out.push_str(&format!("[{}] {}: {}\n", tag.trim(), c.name, c.detail));
        }
        let (passed, failed, info) = self.tally();
        out.push_str(&format!("{} passed, {} failed, {} informational\n", passed, failed, info));
        out
    }

    fn tally(&self) -> (usize, usize, usize) {
        let mut t = (0, 0, 0);
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => t.0 += 1,
                CheckStatus::Fail => t.1 += 1,
                CheckStatus::Info | CheckStatus::Skipped => t.2 += 1,
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            "demo",
            Params { n: 4, metric: "+---".into(), max_degree: 3, seed: 42 },
            vec![
                Check::pass("b-second", "fine"),
                Check::fail("a-first", "broke"),
                Check::info("c-third", "note"),
            ],
        )
    }

    #[test]
    fn checks_are_sorted_by_name() {
        let r = sample();
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["a-first", "b-second", "c-third"]);
    }

    #[test]
    fn failure_flips_passed() {
        let mut r = sample();
        assert!(!r.passed());
        r.checks.retain(|c| c.status != CheckStatus::Fail);
        assert!(r.passed());
    }

    #[test]
    fn json_is_deterministic() {
        assert_eq!(sample().to_json(), sample().to_json());
        assert!(sample().to_json().contains("\"maxDegree\": 3"));
    }
}
