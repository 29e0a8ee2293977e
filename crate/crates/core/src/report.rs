//! The law table: every rule cones falsify, with a verified witness.

use std::fmt::Write;

use serde::Serialize;

use crate::error::Error;
use crate::fixtures::{verify_all, FixtureReport};
use crate::laws::Law;

/// Which fixture carries the witness for each law.
const SOURCES: [(Law, &str); 17] = [
    (Law::D, "d-msd-wllj-llj"),
    (Law::Msd, "d-msd-wllj-llj"),
    (Law::Jsd, "jsd"),
    (Law::M, "msym-cones"),
    (Law::OMr, "o6-cones"),
    (Law::Llj, "d-msd-wllj-llj"),
    (Law::WLlj, "d-msd-wllj-llj"),
    (Law::MSym, "msym-cones"),
    (Law::Mac1, "hexagon-mac1"),
    (Law::Sm, "hexagon-sm"),
    (Law::Bi, "hexagon-bi"),
    (Law::W, "whitman"),
    (Law::Aep, "aep"),
    // beyond the excluded rules
    (Law::DsOMr, "o6-cones"),
    (Law::POm, "mc8-pom"),
    (Law::POm, "rb2-pom"),
    (Law::POm, "pom-cones-r3"),
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub law: String,
    pub statement: String,
    pub carrier: String,
    pub fixture: String,
    pub verdict: String,
    pub verified: bool,
    pub witness: String,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table1 {
    pub rows: Vec<TableRow>,
    pub all_verified: bool,
}

pub fn table1() -> Result<Table1, Error> {
    let reports = verify_all()?;
    let rows: Vec<TableRow> = SOURCES
        .iter()
        .map(|&(law, name)| row(law, reports.iter().find(|r| r.name == name)))
        .collect();
    Ok(Table1 {
        all_verified: rows.iter().all(|r| r.verified),
        rows,
    })
}

fn row(law: Law, report: Option<&FixtureReport>) -> TableRow {
    let claim = report.and_then(|r| {
        r.claims
            .iter()
            .find(|c| c.law == Some(law) && c.expected == "fails")
    });
    let (verdict, verified, witness) = match claim {
        Some(c) if c.pass => (
            "fails (verified)".to_string(),
            true,
            c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
        ),
        Some(c) => (format!("MISMATCH: observed {}", c.observed), false, String::new()),
        None => ("no witness".to_string(), false, String::new()),
    };
    TableRow {
        law: law.name().to_string(),
        statement: law.statement().to_string(),
        carrier: report.map(|r| r.carrier.clone()).unwrap_or_default(),
        fixture: report.map(|r| r.name.clone()).unwrap_or_default(),
        verdict,
        verified,
        witness,
        provenance: report.map(|r| r.provenance.clone()).unwrap_or_default(),
    }
}

impl Table1 {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let widths = [6, 34, 16, 18];
        let _ = writeln!(
            out,
            "{:<w0$} {:<w1$} {:<w2$} {:<w3$} witness / provenance",
            "law",
            "carrier",
            "fixture",
            "verdict",
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
            w3 = widths[3]
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<w0$} {:<w1$} {:<w2$} {:<w3$} {}",
                r.law,
                r.carrier,
                r.fixture,
                r.verdict,
                r.witness,
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2],
                w3 = widths[3]
            );
            let _ = writeln!(out, "{:pad$}  {}: {}", "", r.statement, r.provenance, pad = widths[0]);
        }
        let _ = writeln!(
            out,
            "{} of {} rows verified",
            self.rows.iter().filter(|r| r.verified).count(),
            self.rows.len()
        );
        out
    }

    /// Markdown rendering, for writing to a file.
    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| law | carrier | verdict | witness | provenance |\n|---|---|---|---|---|\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} | `{}` | {} ({}) |",
                r.law,
                r.carrier,
                r.verdict,
                r.witness.replace('|', "\\|"),
                r.provenance,
                r.fixture
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_excluded_law_has_a_verified_row() {
        let t = table1().unwrap();
        for law in Law::EXCLUDED_BY_CONES {
            let r = t.rows.iter().find(|r| r.law == law.name()).unwrap();
            assert!(r.verified, "{law}: {}", r.verdict);
            assert!(!r.witness.is_empty());
        }
        assert!(t.all_verified);
        assert_eq!(t.rows.len(), 17);
    }

    #[test]
    fn text_has_one_line_pair_per_row() {
        let t = table1().unwrap();
        let text = t.to_text();
        assert_eq!(text.lines().count(), 1 + 2 * t.rows.len() + 1);
        assert!(t.to_markdown().contains("| AEP |"));
    }
}
