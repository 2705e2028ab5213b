//! Run reports: deterministic JSON on stdout, wall-clock timings in an
//! opt-in sidecar file.
//!
//! Timing never appears on stdout because reports must be byte-identical
//! across runs with the same inputs and seed. Set `IDEMPAIR_REPORT_DIR`
//! to also get `idempair-<command>.json` with per-step milliseconds.

use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::time::Instant;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    /// Short witness for the reader: a residual, a count, or "exact".
    pub residual: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, pass: bool, residual: impl Into<String>) -> CheckLine {
        CheckLine {
            name: name.into(),
            pass,
            residual: residual.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<CheckLine>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, results: Value, checks: Vec<CheckLine>) -> RunReport {
        RunReport {
            command: command.into(),
            inputs,
            results,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, pretty: bool) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        if pretty {
            serde_json::to_string_pretty(&v).expect("serializable")
        } else {
            serde_json::to_string(&v).expect("serializable")
        }
    }
}

/// Collects named wall-clock spans for the sidecar file.
pub struct Stopwatch {
    started: Instant,
    spans: Vec<(String, u128)>,
}

impl Stopwatch {
    pub fn new() -> Stopwatch {
        Stopwatch {
            started: Instant::now(),
            spans: Vec::new(),
        }
    }

    /// Closes the current span under `name` and starts the next one.
    pub fn lap(&mut self, name: &str) {
        let now = Instant::now();
        self.spans
            .push((name.into(), now.duration_since(self.started).as_millis()));
        self.started = now;
    }

    /// Writes the sidecar if `IDEMPAIR_REPORT_DIR` is set. Failures are
    /// reported on stderr but never fail the run.
    pub fn write_sidecar(&self, command: &str) {
        let Ok(dir) = std::env::var("IDEMPAIR_REPORT_DIR") else {
            return;
        };
        if dir.is_empty() {
            return;
        }
        let payload = json!({
            "command": command,
            "timing": self
                .spans
                .iter()
                .map(|(step, millis)| json!({"step": step, "millis": millis}))
                .collect::<Vec<_>>(),
        });
        let path = std::path::Path::new(&dir).join(format!("idempair-{command}.json"));
        let written = std::fs::File::create(&path)
            .and_then(|mut f| writeln!(f, "{payload}"));
        if let Err(e) = written {
            eprintln!("warning: could not write timing sidecar {}: {e}", path.display());
        }
    }
}

impl Default for Stopwatch {
    fn default() -> Self {
        Stopwatch::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_rendering_is_stable() {
        let r = RunReport::new(
            "classify",
            json!({"family": "Zn"}),
            json!({"kind": "Zero"}),
            vec![CheckLine::new("sample", true, "exact")],
        );
        let a = r.render(false);
        let b = r.render(false);
        assert_eq!(a, b);
        assert!(r.all_pass());
        assert!(a.contains("\"command\":\"classify\""));

        let failing = RunReport::new("verify", json!({}), json!({}), vec![
            CheckLine::new("good", true, ""),
            CheckLine::new("bad", false, "residual 1"),
        ]);
        assert!(!failing.all_pass());
    }

    #[test]
    fn sidecar_writes_when_directed() {
        let dir = std::env::temp_dir().join("idempair-report-test");
        std::fs::create_dir_all(&dir).unwrap();
        let mut w = Stopwatch::new();
        w.lap("step-one");
        std::env::set_var("IDEMPAIR_REPORT_DIR", &dir);
        w.write_sidecar("table");
        std::env::remove_var("IDEMPAIR_REPORT_DIR");
        let text = std::fs::read_to_string(dir.join("idempair-table.json")).unwrap();
        assert!(text.contains("step-one"));
    }
}
