//! The one output shape every subcommand produces, rendered as JSON, CSV or
//! plain text. Exact values are always strings.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Cell {
    #[serde(serialize_with = "as_map")]
    pub params: Vec<(String, String)>,
    pub predicted: Option<String>,
    pub computed: Option<String>,
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn as_map<S: serde::Serializer>(params: &[(String, String)], s: S) -> Result<S::Ok, S::Error> {
    let map: Map<String, Value> = params.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
    map.serialize(s)
}

impl Cell {
    pub fn new(params: Vec<(&str, String)>) -> Self {
        Cell { params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(), ..Cell::default() }
    }

    pub fn computed(mut self, v: impl ToString) -> Self {
        self.computed = Some(v.to_string());
        self
    }

    pub fn predicted(mut self, v: impl ToString) -> Self {
        self.predicted = Some(v.to_string());
        self
    }

    pub fn verdict(mut self, v: &str) -> Self {
        self.verdict = Some(v.to_string());
        self
    }

    pub fn note(mut self, v: impl Into<String>) -> Self {
        self.note = Some(v.into());
        self
    }

    /// Sets predicted, computed and a match/mismatch verdict.
    pub fn compared<T: ToString + PartialEq>(self, predicted: &T, computed: &T) -> Self {
        let verdict = if predicted == computed { "match" } else { "mismatch" };
        self.predicted(predicted.to_string()).computed(computed.to_string()).verdict(verdict)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Map<String, Value>,
    pub cells: Vec<Cell>,
    pub summary: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, config: Map<String, Value>, cells: Vec<Cell>) -> Self {
        let mut summary = Map::new();
        let count = |v: &str| cells.iter().filter(|c| c.verdict.as_deref() == Some(v)).count();
        summary.insert("cells".into(), json!(cells.len()));
        summary.insert("matches".into(), json!(count("match")));
        summary.insert("mismatches".into(), json!(count("mismatch")));
        summary.insert("inapplicable".into(), json!(count("inapplicable")));
        Report { command: command.to_string(), config, cells, summary }
    }

    pub fn mismatches(&self) -> usize {
        self.cells.iter().filter(|c| c.verdict.as_deref() == Some("mismatch")).count()
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            Format::Csv => self.write_csv(out)?,
            Format::Plain => self.write_plain(out)?,
        }
        Ok(())
    }

    fn param_keys(&self) -> Vec<String> {
        let mut keys: Vec<String> = Vec::new();
        for c in &self.cells {
            for (k, _) in &c.params {
                if !keys.contains(k) {
                    keys.push(k.clone());
                }
            }
        }
        keys
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        let keys = self.param_keys();
        let mut w = csv::Writer::from_writer(out);
        let mut header = keys.clone();
        header.extend(["predicted", "computed", "verdict", "note"].map(String::from));
        w.write_record(&header)?;
        for c in &self.cells {
            let mut row: Vec<String> = keys
                .iter()
                .map(|k| c.params.iter().find(|(p, _)| p == k).map(|(_, v)| v.clone()).unwrap_or_default())
                .collect();
            for v in [&c.predicted, &c.computed, &c.verdict, &c.note] {
                row.push(v.clone().unwrap_or_default());
            }
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_plain(&self, out: &mut dyn Write) -> Result<()> {
        // Bare value lists print as one comma-separated line.
        if self.cells.iter().all(|c| c.predicted.is_none() && c.verdict.is_none()) {
            let values: Vec<&str> = self.cells.iter().filter_map(|c| c.computed.as_deref()).collect();
            writeln!(out, "{}", values.join(","))?;
            return Ok(());
        }
        for c in &self.cells {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut line = params.join(" ");
            if let Some(p) = &c.predicted {
                line.push_str(&format!("  predicted={p}"));
            }
            if let Some(v) = &c.computed {
                line.push_str(&format!("  computed={v}"));
            }
            if let Some(v) = &c.verdict {
                line.push_str(&format!("  [{v}]"));
            }
            if let Some(n) = &c.note {
                line.push_str(&format!("  ({n})"));
            }
            writeln!(out, "{line}")?;
        }
        let summary: Vec<String> = self
            .summary
            .iter()
            .filter(|(_, v)| !v.is_array() && !v.is_object())
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(out, "summary: {}", summary.join(" "))?;
        for (k, v) in &self.summary {
            if let Some(items) = v.as_array() {
                for item in items {
                    writeln!(out, "{k}: {}", item.as_str().map(String::from).unwrap_or_else(|| item.to_string()))?;
                }
            }
        }
        Ok(())
    }
}
