//! Plain-text reports. Everything above the `[timing]` section is a pure
//! function of the inputs, so two runs can be compared byte for byte after
//! dropping that section.

use std::fmt::Display;
use std::io::{self, Write};
use std::time::Instant;

use adjvol_core::harness::{Case, ScanRecord};

pub const REPORT_HEADER: &str = "adjvol-report v1";

pub struct Report {
    command: String,
    lines: Vec<String>,
    fields: Vec<(String, String)>,
    sections: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            lines: Vec::new(),
            fields: Vec::new(),
            sections: Vec::new(),
        }
    }

    pub fn field(&mut self, key: &str, value: impl Display) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn line(&mut self, line: String) {
        self.lines.push(line);
    }

    pub fn section(&mut self, title: &str, body: String) {
        self.sections.push((title.to_string(), body));
    }

    pub fn finish(self, out: &mut impl Write, start: Instant) -> io::Result<()> {
        writeln!(out, "{REPORT_HEADER}")?;
        writeln!(out, "command={}", self.command)?;
        for l in &self.lines {
            writeln!(out, "{l}")?;
        }
        for (k, v) in &self.fields {
            writeln!(out, "{k}={v}")?;
        }
        for (title, body) in &self.sections {
            writeln!(out, "\n[{title}]")?;
            out.write_all(body.as_bytes())?;
            if !body.ends_with('\n') {
                writeln!(out)?;
            }
        }
        writeln!(out, "\n[timing]")?;
        writeln!(out, "elapsed_ms={}", start.elapsed().as_millis())?;
        Ok(())
    }
}

pub fn case_line(c: &Case) -> String {
    if c.detail.is_empty() {
        format!("{:<4} {}", c.status, c.name)
    } else {
        format!("{:<4} {} {}", c.status, c.name, c.detail)
    }
}

/// Disagreeing record with its graph as a loadable edge list.
pub fn counterexample(r: &ScanRecord) -> String {
    let (n, edges) = r.graph.split_once(';').unwrap_or((r.graph.as_str(), ""));
    let edges: Vec<&str> = edges.split(',').filter(|e| !e.is_empty()).collect();
    let mut s = format!(
        "fingerprint={}\nformula={}\noracle={}\nstatus={}\n# edge list\n{} {}\n",
        r.fingerprint,
        r.formula,
        r.oracle,
        if r.conjectural {
            "conjecture"
        } else {
            "theorem"
        },
        n,
        edges.len()
    );
    for e in edges {
        s.push_str(&e.replace('-', " "));
        s.push('\n');
    }
    s
}
