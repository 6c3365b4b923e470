//! Rendering of coefficient tables as text, JSON and CSV.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use quotcount::InvariantReport;

use crate::OutputFormat;

/// Labelled coefficient columns indexed by `n`, with the parameters that
/// produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    tool: String,
    params: BTreeMap<String, Value>,
    labels: Vec<String>,
    columns: Vec<Vec<BigInt>>,
    verdict: Option<bool>,
}

/// The JSON document emitted by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub tool: String,
    pub params: BTreeMap<String, Value>,
    pub labels: Vec<String>,
    pub coefficients: Vec<Vec<String>>,
    pub verdict: Option<bool>,
}

impl JsonReport {
    pub fn parse(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Pretty-printed document with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl Table {
    pub fn new(tool: impl Into<String>, params: BTreeMap<String, Value>) -> Self {
        Table {
            tool: tool.into(),
            params,
            labels: Vec::new(),
            columns: Vec::new(),
            verdict: None,
        }
    }

    pub fn column(mut self, label: impl Into<String>, values: Vec<BigInt>) -> Self {
        self.labels.push(label.into());
        self.columns.push(values);
        self
    }

    pub fn verdict(mut self, agree: bool) -> Self {
        self.verdict = Some(agree);
        self
    }

    pub fn verdict_value(&self) -> Option<bool> {
        self.verdict
    }

    pub fn from_report(
        tool: impl Into<String>,
        params: BTreeMap<String, Value>,
        report: InvariantReport,
    ) -> Self {
        let verdict = report.verdict();
        let mut table = Table::new(tool, params).column(report.label, report.coefficients);
        if let Some(check) = report.cross_check {
            table = table.column(check.label, check.coefficients);
        }
        table.verdict = verdict;
        table
    }

    fn rows(&self) -> usize {
        self.columns.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn cell(&self, col: usize, n: usize) -> String {
        self.columns[col]
            .get(n)
            .map(ToString::to_string)
            .unwrap_or_default()
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.to_text(),
            OutputFormat::Json => self.to_json_report().to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }

    pub fn to_json_report(&self) -> JsonReport {
        JsonReport {
            tool: self.tool.clone(),
            params: self.params.clone(),
            labels: self.labels.clone(),
            coefficients: self
                .columns
                .iter()
                .map(|c| c.iter().map(ToString::to_string).collect())
                .collect(),
            verdict: self.verdict,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for label in &self.labels {
            out.push(',');
            out.push_str(label);
        }
        out.push('\n');
        for n in 0..self.rows() {
            write!(out, "{n}").unwrap();
            for col in 0..self.columns.len() {
                write!(out, ",{}", self.cell(col, n)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {}", self.tool);
        for (k, v) in &self.params {
            match v {
                Value::String(s) => write!(out, " {k}={s}").unwrap(),
                other => write!(out, " {k}={other}").unwrap(),
            }
        }
        out.push('\n');

        let rows = self.rows();
        let mut header = vec!["n".to_string()];
        header.extend(self.labels.iter().cloned());
        let body: Vec<Vec<String>> = (0..rows)
            .map(|n| {
                let mut row = vec![n.to_string()];
                row.extend((0..self.columns.len()).map(|c| self.cell(c, n)));
                row
            })
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                body.iter()
                    .map(|r| r[c].len())
                    .chain([header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for row in std::iter::once(&header).chain(&body) {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect();
            out.push_str(&line.join("  "));
            out.push('\n');
        }
        match self.verdict {
            Some(true) => out.push_str("# verdict: agree\n"),
            Some(false) => out.push_str("# verdict: DISAGREE\n"),
            None => {}
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let params = [("order".to_string(), Value::from(2))]
            .into_iter()
            .collect();
        Table::new("demo", params)
            .column(
                "a",
                vec![BigInt::from(1), BigInt::from(-12), BigInt::from(300)],
            )
            .column(
                "b",
                vec![BigInt::from(1), BigInt::from(-12), BigInt::from(301)],
            )
            .verdict(false)
    }

    #[test]
    fn text_is_right_aligned() {
        let expected = "# demo order=2\n\
                        n    a    b\n\
                        0    1    1\n\
                        1  -12  -12\n\
                        2  300  301\n\
                        # verdict: DISAGREE\n";
        assert_eq!(sample().to_text(), expected);
    }

    #[test]
    fn csv_layout() {
        assert_eq!(sample().to_csv(), "n,a,b\n0,1,1\n1,-12,-12\n2,300,301\n");
    }

    #[test]
    fn json_uses_decimal_strings_and_round_trips() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let table = Table::new("demo", BTreeMap::new()).column("x", vec![big]);
        let text = table.render(OutputFormat::Json);
        assert!(text.contains("\"123456789012345678901234567890\""));
        assert!(text.contains("\"verdict\": null"));
        let parsed = JsonReport::parse(&text).unwrap();
        assert_eq!(parsed.to_json(), text);
    }
}
