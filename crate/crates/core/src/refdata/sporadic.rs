//! Embedded prime graphs of the sporadic groups and the Tits group.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::arith::Factorization;
use crate::error::{Error, Result};
use crate::groups::Sporadic;

const DATA: &str = include_str!("../../data/sporadic.json");

#[derive(Deserialize)]
struct FileDoc {
    version: u32,
    source: String,
    groups: Vec<FileGroup>,
}

#[derive(Deserialize)]
struct FileGroup {
    name: String,
    order: Vec<(String, u32)>,
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    checksum: String,
}

/// A data-backed prime graph.
#[derive(Debug, Clone)]
pub struct SporadicGraph {
    pub name: String,
    pub vertices: Vec<BigUint>,
    pub edges: Vec<(usize, usize)>,
    pub order: Factorization,
    pub source: String,
    pub checksum: String,
}

impl SporadicGraph {
    pub fn adjacent(&self, r: &BigUint, s: &BigUint) -> Option<bool> {
        let i = self.vertices.iter().position(|v| v == r)?;
        let j = self.vertices.iter().position(|v| v == s)?;
        Some(self.edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)))
    }
}

/// The checksum recorded for each entry of the data file.
pub fn content_checksum(name: &str, vertices: &[String], edges: &[(usize, usize)], order: &[(String, u32)]) -> String {
    let v = vertices.join(",");
    let e: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
    let o: Vec<String> = order.iter().map(|(p, k)| format!("{p}^{k}")).collect();
    let canon = format!("{name}|{v}|{}|{}", e.join(","), o.join(","));
    Sha256::digest(canon.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn load() -> Result<Vec<SporadicGraph>> {
    let doc: FileDoc = serde_json::from_str(DATA).map_err(|e| Error::Data(format!("sporadic data: {e}")))?;
    if doc.version != 1 {
        return Err(Error::Data(format!("unsupported sporadic data version {}", doc.version)));
    }
    let mut out = Vec::new();
    for g in doc.groups {
        let sum = content_checksum(&g.name, &g.vertices, &g.edges, &g.order);
        if sum != g.checksum {
            return Err(Error::Data(format!("checksum mismatch for {}", g.name)));
        }
        let parse = |s: &str| s.parse::<BigUint>().map_err(|_| Error::Data(format!("{}: bad integer {s}", g.name)));
        let vertices = g.vertices.iter().map(|v| parse(v)).collect::<Result<Vec<_>>>()?;
        let mut powers = BTreeMap::new();
        for (p, e) in &g.order {
            powers.insert(parse(p)?, *e);
        }
        let order = Factorization::from_prime_powers(powers);
        if order.primes().cloned().collect::<Vec<_>>() != vertices {
            return Err(Error::Data(format!("{}: vertices differ from the primes of the order", g.name)));
        }
        if g.edges.iter().any(|&(a, b)| a >= b || b >= vertices.len()) {
            return Err(Error::Data(format!("{}: malformed edge list", g.name)));
        }
        out.push(SporadicGraph {
            name: g.name,
            vertices,
            edges: g.edges,
            order,
            source: doc.source.clone(),
            checksum: g.checksum,
        });
    }
    Ok(out)
}

/// All embedded graphs, in file order.
pub fn sporadic_graphs() -> &'static [SporadicGraph] {
    static GRAPHS: OnceLock<Vec<SporadicGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| load().expect("embedded sporadic data is valid"))
}

/// Looks a graph up by canonical name or alias.
pub fn lookup_sporadic(name: &str) -> Result<&'static SporadicGraph> {
    let canonical = Sporadic::from_name(name).ok_or_else(|| Error::UnknownName(name.to_string()))?.name();
    sporadic_graphs().iter().find(|g| g.name == canonical).ok_or_else(|| Error::UnknownName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_sporadic_present() {
        assert_eq!(sporadic_graphs().len(), 27);
        for s in Sporadic::ALL {
            assert_eq!(lookup_sporadic(s.name()).unwrap().name, s.name());
        }
        assert!(matches!(lookup_sporadic("M13"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn m11_edges() {
        let g = lookup_sporadic("M11").unwrap();
        let b = |n: u32| BigUint::from(n);
        assert_eq!(g.adjacent(&b(2), &b(3)), Some(true));
        assert_eq!(g.adjacent(&b(2), &b(11)), Some(false));
        assert_eq!(g.adjacent(&b(2), &b(7)), None);
    }
}
