//! CLI reports: a stable machine-readable section (line-oriented
//! `key=value`) plus a human section. The machine section is deterministic
//! for a fixed seed and input.

use std::fmt::Write as _;

#[derive(Clone, Debug, Default)]
pub struct Report {
    machine: Vec<(String, String)>,
    human: Vec<String>,
    pub exit: i32,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.machine.push((key.into(), value.to_string()));
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.human.push(text.into());
    }

    pub fn machine_entries(&self) -> &[(String, String)] {
        &self.machine
    }

    pub fn render(&self, color: bool) -> String {
        let mut out = String::new();
        let (b, e) = if color { ("\x1b[1m", "\x1b[0m") } else { ("", "") };
        let _ = writeln!(out, "{b}--- machine ---{e}");
        for (k, v) in &self.machine {
            let _ = writeln!(out, "{k}={v}");
        }
        if !self.human.is_empty() {
            let _ = writeln!(out, "{b}--- report ---{e}");
            for l in &self.human {
                let _ = writeln!(out, "{l}");
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.machine {
            map.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        map.insert(
            "exit".to_string(),
            serde_json::Value::Number(self.exit.into()),
        );
        serde_json::Value::Object(map).to_string()
    }
}
