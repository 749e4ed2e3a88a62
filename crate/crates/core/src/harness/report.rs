use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub graph: String,
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool_version: &'static str,
    pub command: String,
    pub name: String,
    /// The claim the run reproduces, in words.
    pub claim: String,
    pub corpus: String,
    pub graphs: usize,
    pub seed: u64,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
    /// Free-form observations, such as exact round counts or census results.
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, name: &str, claim: &str, corpus: String, seed: u64) -> Report {
        Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            name: name.into(),
            claim: claim.into(),
            corpus,
            graphs: 0,
            seed,
            summary: Summary::default(),
            checks: Vec::new(),
            notes: Vec::new(),
            wall_ms: None,
        }
    }

    pub fn check(
        &mut self,
        graph: impl Into<String>,
        claim: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) {
        self.summary.checks += 1;
        if pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.checks.push(CheckRecord {
            graph: graph.into(),
            claim: claim.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
