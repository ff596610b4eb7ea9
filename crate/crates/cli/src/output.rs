//! Rendering of command results as plain text, JSON, DOT and CSV.

use std::collections::BTreeMap;
use std::fmt::Write;

use primegraph::refdata::tables::PatternOutcome;
use primegraph::refdata::CheckReport;
use primegraph::torus::CensusRow;
use primegraph::{CrossReport, GroupSpec, IndependenceResult, PrimeGraph};
use serde_json::{json, Value};

/// Version stamp of every JSON document.
const SCHEMA_VERSION: u32 = 1;

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn set<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

pub fn graph_plain(g: &PrimeGraph) -> String {
    let mut out = String::new();
    writeln!(out, "group {}", g.group).unwrap();
    writeln!(out, "vertices {}", set(&g.vertices)).unwrap();
    let edges = g.edges();
    writeln!(out, "edges {}", edges.len()).unwrap();
    for (i, j) in edges {
        let tag = g.provenance(i, j).map_or(String::new(), |t| t.to_string());
        writeln!(out, "{} -- {} ({tag})", g.vertices[i], g.vertices[j]).unwrap();
    }
    out
}

pub fn graph_json(g: &PrimeGraph) -> Value {
    let n = g.len();
    let provenance: Vec<Value> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| {
            g.provenance(i, j).map(|t| {
                json!({
                    "pair": [i, j],
                    "adjacent": g.adjacent_idx(i, j),
                    "criterion": t.proposition,
                    "clause": t.clause_label(),
                })
            })
        })
        .collect();
    json!({
        "schema": "primegraph/graph",
        "version": SCHEMA_VERSION,
        "group": g.group.to_string(),
        "vertices": strings(&g.vertices),
        "labels": strings(&g.labels),
        "edges": g.edges().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        "provenance": provenance,
    })
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn graph_dot(g: &PrimeGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", dot_id(&format!("GK({})", g.group))).unwrap();
    for (v, l) in g.vertices.iter().zip(&g.labels) {
        writeln!(out, "  {} [label={}];", dot_id(&v.to_string()), dot_id(&format!("{v} ({l})"))).unwrap();
    }
    for (i, j) in g.edges() {
        let tag = g.provenance(i, j).map_or(String::new(), |t| t.to_string());
        writeln!(
            out,
            "  {} -- {} [label={}];",
            dot_id(&g.vertices[i].to_string()),
            dot_id(&g.vertices[j].to_string()),
            dot_id(&tag)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn indep_plain(r: &IndependenceResult) -> String {
    let name = if r.forced.is_empty() { "t".to_string() } else { format!("t({})", strings(&r.forced).join(",")) };
    format!("{name} = {}\nrho = {}\npattern = {}\n", r.t, set(&r.rho), set(&r.e_pattern))
}

pub fn indep_json(g: &PrimeGraph, r: &IndependenceResult) -> Value {
    json!({
        "schema": "primegraph/indep",
        "version": SCHEMA_VERSION,
        "group": g.group.to_string(),
        "forced": strings(&r.forced),
        "t": r.t,
        "rho": strings(&r.rho),
        "pattern": strings(&r.e_pattern),
    })
}

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("census rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("CSV is UTF-8")
}

pub fn census_json(g: &GroupSpec, rows: &[CensusRow]) -> Value {
    let distinct: std::collections::BTreeSet<num_bigint::BigUint> =
        rows.iter().map(|r| r.value.parse().expect("decimal torus order")).collect();
    json!({
        "schema": "primegraph/census",
        "version": SCHEMA_VERSION,
        "group": g.to_string(),
        "tori": rows.len(),
        "distinct_orders": distinct.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "orders": rows,
    })
}

/// Results of a verification run.
pub struct VerifySummary {
    tables: Option<Vec<CheckReport>>,
    oracle: Option<Vec<CrossReport>>,
}

impl VerifySummary {
    pub fn new(tables: Option<Vec<CheckReport>>, oracle: Option<Vec<CrossReport>>) -> Self {
        VerifySummary { tables, oracle }
    }

    fn table_failures(&self) -> Vec<&CheckReport> {
        self.tables.iter().flatten().filter(|c| !c.passed()).collect()
    }

    fn oracle_failures(&self) -> usize {
        self.oracle.iter().flatten().map(|r| r.mismatches.len()).sum()
    }

    pub fn mismatch_count(&self) -> usize {
        self.table_failures().len() + self.oracle_failures()
    }

    pub fn plain(&self) -> String {
        let mut out = String::new();
        if let Some(tables) = &self.tables {
            let mut per_table: BTreeMap<u8, (usize, usize)> = BTreeMap::new();
            for c in tables {
                let e = per_table.entry(c.table).or_default();
                e.0 += 1;
                e.1 += usize::from(!c.passed());
            }
            let rows: std::collections::BTreeSet<&str> = tables.iter().map(|c| c.row.as_str()).collect();
            for (t, (n, bad)) in &per_table {
                writeln!(out, "table {t}: {n} checks, {bad} mismatches").unwrap();
            }
            writeln!(
                out,
                "tables: {} rows, {} checks, {} mismatches",
                rows.len(),
                tables.len(),
                self.table_failures().len()
            )
            .unwrap();
            for c in self.table_failures() {
                writeln!(out, "{c}").unwrap();
            }
        }
        if let Some(oracle) = &self.oracle {
            let pairs: usize = oracle.iter().map(|r| r.pairs_checked).sum();
            writeln!(out, "oracle: {} groups, {pairs} pairs, {} mismatches", oracle.len(), self.oracle_failures())
                .unwrap();
            for r in oracle {
                for m in &r.mismatches {
                    writeln!(out, "MISMATCH {}: {m}", r.group).unwrap();
                }
            }
        }
        writeln!(out, "total mismatches: {}", self.mismatch_count()).unwrap();
        out
    }

    pub fn json(&self) -> Value {
        let tables = self.tables.as_ref().map(|tables| {
            let mismatches: Vec<Value> = self.table_failures().into_iter().map(check_json).collect();
            json!({ "checks": tables.len(), "mismatches": mismatches })
        });
        let oracle = self.oracle.as_ref().map(|oracle| {
            let mismatches: Vec<Value> = oracle
                .iter()
                .flat_map(|r| {
                    r.mismatches.iter().map(move |m| {
                        json!({
                            "group": r.group.to_string(),
                            "r": m.r.to_string(),
                            "s": m.s.to_string(),
                            "oracle": m.oracle,
                            "oracle_witness": m.oracle_witness.as_ref().map(ToString::to_string),
                            "criteria": m.criteria,
                            "criterion": m.criteria_tag.to_string(),
                        })
                    })
                })
                .collect();
            json!({
                "groups": oracle.len(),
                "pairs": oracle.iter().map(|r| r.pairs_checked).sum::<usize>(),
                "mismatches": mismatches,
            })
        });
        json!({
            "schema": "primegraph/verify",
            "version": SCHEMA_VERSION,
            "tables": tables,
            "oracle": oracle,
            "mismatch_count": self.mismatch_count(),
        })
    }
}

fn check_json(c: &CheckReport) -> Value {
    let realized = match &c.outcome {
        PatternOutcome::Witness => Some(strings(&c.witness)),
        PatternOutcome::Alternative(s) => Some(strings(s)),
        PatternOutcome::Unrealized => None,
    };
    json!({
        "row": c.row,
        "table": c.table,
        "group": c.group,
        "invariant": c.invariant.to_string(),
        "expected_t": c.expected_t,
        "computed_t": c.computed_t,
        "expected_pattern": strings(&c.expected_pattern),
        "witness": strings(&c.witness),
        "witness_pattern": strings(&c.witness_pattern),
        "pattern_realized_by": realized,
    })
}
