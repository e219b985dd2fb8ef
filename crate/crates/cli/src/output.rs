//! Record rendering for `count` and `table`.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use singline_core::{scalar, CountResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

const COLUMNS: [&str; 8] = ["d", "k", "u", "rank", "delta", "n", "phi", "warnings"];

/// One query and its count. `n` and `phi` are strings so that values beyond
/// 64 bits survive every format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub d: u32,
    pub k: u32,
    pub u: u32,
    pub rank: u64,
    pub delta: u64,
    pub n: String,
    pub phi: String,
    pub warnings: Vec<String>,
}

impl From<&CountResult> for OutputRecord {
    fn from(r: &CountResult) -> Self {
        Self {
            d: r.query.d(),
            k: r.query.k(),
            u: r.query.u(),
            rank: r.rank,
            delta: r.delta,
            n: r.n.to_string(),
            phi: scalar::fraction_string(&r.phi),
            warnings: r.warnings.iter().map(ToString::to_string).collect(),
        }
    }
}

impl OutputRecord {
    fn fields(&self) -> [String; 8] {
        [
            self.d.to_string(),
            self.k.to_string(),
            self.u.to_string(),
            self.rank.to_string(),
            self.delta.to_string(),
            self.n.clone(),
            self.phi.clone(),
            self.warnings.join(";"),
        ]
    }
}

pub fn render<W: Write>(out: W, records: &[OutputRecord], format: Format) -> io::Result<()> {
    match format {
        Format::Json => render_json(out, records),
        Format::Csv => render_csv(out, records),
        Format::Md => render_md(out, records),
    }
}

/// One JSON object per line.
fn render_json<W: Write>(mut out: W, records: &[OutputRecord]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        writeln!(out)?;
    }
    Ok(())
}

fn render_csv<W: Write>(out: W, records: &[OutputRecord]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS)?;
    for r in records {
        w.write_record(r.fields())?;
    }
    w.flush()
}

fn render_md<W: Write>(mut out: W, records: &[OutputRecord]) -> io::Result<()> {
    writeln!(out, "| {} |", COLUMNS.join(" | "))?;
    writeln!(out, "|{}", "---|".repeat(COLUMNS.len()))?;
    for r in records {
        let cells: Vec<String> = r.fields().iter().map(|c| c.replace('|', "\\|")).collect();
        writeln!(out, "| {} |", cells.join(" | "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use singline_core::{count_via_pipeline, SurfaceQuery};

    fn record(d: i64, k: i64) -> OutputRecord {
        (&count_via_pipeline(&SurfaceQuery::new(d, k).unwrap()).unwrap()).into()
    }

    fn rendered(records: &[OutputRecord], format: Format) -> String {
        let mut buf = Vec::new();
        render(&mut buf, records, format).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn record_fields() {
        let r = record(3, 1);
        assert_eq!((r.d, r.k, r.u, r.rank, r.delta), (3, 1, 2, 16, 19));
        assert_eq!(r.n, "27");
        assert_eq!(r.phi, "2/1");
        assert_eq!(r.warnings.len(), 1);
        assert!(r.warnings[0].contains("divide by 27 for distinct surfaces"));
    }

    #[test]
    fn json_n_is_a_string() {
        let text = rendered(&[record(200, 100)], Format::Json);
        let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        let n = v["n"].as_str().unwrap();
        assert!(n.len() > 20);
        assert_eq!(n.parse::<singline_core::BigInt>().unwrap().to_string(), n);
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut expected: Vec<_> = COLUMNS.iter().map(|s| s.to_string()).collect();
        expected.sort();
        assert_eq!(keys, expected);
    }

    #[test]
    fn csv_header_and_row() {
        let text = rendered(&[record(2, 2)], Format::Csv);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("d,k,u,rank,delta,n,phi,warnings"));
        assert_eq!(lines.next(), Some("2,2,0,3,6,10,1/1,"));
    }

    #[test]
    fn markdown_shape() {
        let text = rendered(&[record(2, 1), record(2, 2)], Format::Md);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("| d | k |"));
        assert!(lines[3].starts_with("| 2 | 2 | 0 | 3 | 6 | 10 |"));
    }
}
