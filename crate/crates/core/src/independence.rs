//! Exact independence invariants, components and e-patterns of prime graphs.

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;

use crate::adjacency::{PatternEntry, PrimeGraph};
use crate::error::{Error, Result};

/// A maximum independent set, possibly through forced vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceResult {
    /// The witness, ascending.
    pub rho: Vec<BigUint>,
    pub t: usize,
    /// The vertices every candidate set had to contain.
    pub forced: Vec<BigUint>,
    /// Sorted pattern entries of the witness.
    pub e_pattern: Vec<PatternEntry>,
}

/// Connected components, the one containing 2 first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub components: Vec<Vec<BigUint>>,
}

impl ComponentPartition {
    /// The number of components s(G).
    pub fn s(&self) -> usize {
        self.components.len()
    }
}

/// Vertex sets as bitsets over graph indices.
struct Solver {
    n: usize,
    adj: Vec<FixedBitSet>,
    non_adj: Vec<FixedBitSet>,
}

impl Solver {
    fn new(g: &PrimeGraph) -> Solver {
        let n = g.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut non_adj = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    if g.adjacent_idx(i, j) {
                        adj[i].insert(j);
                    } else {
                        non_adj[i].insert(j);
                    }
                }
            }
        }
        Solver { n, adj, non_adj }
    }

    /// Size of a greedy clique cover of `p`, an upper bound for any
    /// independent subset of `p`.
    fn cover_bound(&self, p: &FixedBitSet) -> usize {
        let mut rest = p.clone();
        let mut count = 0;
        while let Some(u) = rest.minimum() {
            count += 1;
            let mut cand = rest.clone();
            cand.intersect_with(&self.adj[u]);
            rest.set(u, false);
            while let Some(v) = cand.minimum() {
                rest.set(v, false);
                cand.intersect_with(&self.adj[v]);
            }
        }
        count
    }

    /// Largest independent subset of `p`, or None when it cannot exceed
    /// `floor`.
    fn best_in(&self, p: &FixedBitSet, floor: usize) -> Option<usize> {
        let mut best = floor;
        let mut found = false;
        self.expand(p.clone(), 0, &mut best, &mut found);
        found.then_some(best)
    }

    fn expand(&self, p: FixedBitSet, size: usize, best: &mut usize, found: &mut bool) {
        if p.is_clear() {
            if size > *best || (size == *best && !*found) {
                *best = size;
                *found = true;
            }
            return;
        }
        let bound = size + self.cover_bound(&p);
        if bound < *best || (bound == *best && *found) {
            return;
        }
        // Branch on the vertex with the most non-neighbours in p.
        let v = p.ones().max_by_key(|&v| p.intersection(&self.non_adj[v]).count()).expect("non-empty");
        let mut with = p.clone();
        with.intersect_with(&self.non_adj[v]);
        self.expand(with, size + 1, best, found);
        let mut without = p;
        without.set(v, false);
        self.expand(without, size, best, found);
    }

    fn max_size(&self, p: &FixedBitSet) -> usize {
        self.best_in(p, 0).unwrap_or(0)
    }

    /// Lexicographically smallest independent subset of `p` of size `need`.
    fn lex_smallest(&self, mut p: FixedBitSet, mut need: usize) -> Vec<usize> {
        let mut out = Vec::new();
        while need > 0 {
            let v = p
                .ones()
                .find(|&v| {
                    let mut rest = p.clone();
                    rest.intersect_with(&self.non_adj[v]);
                    rest.set_range(..v, false);
                    need == 1 || self.best_in(&rest, need - 2).is_some_and(|b| b >= need - 1)
                })
                .expect("an optimal set exists");
            out.push(v);
            p.intersect_with(&self.non_adj[v]);
            p.set_range(..v + 1, false);
            need -= 1;
        }
        out
    }

    fn full(&self) -> FixedBitSet {
        let mut p = FixedBitSet::with_capacity(self.n);
        p.insert_range(..);
        p
    }
}

fn forced_indices(g: &PrimeGraph, forced: &[BigUint]) -> Result<Vec<usize>> {
    let mut idx = Vec::new();
    for r in forced {
        let i = g.index_of(r).ok_or_else(|| Error::ForcedVertexMissing(r.to_string()))?;
        if !idx.contains(&i) {
            idx.push(i);
        }
    }
    for (a, &i) in idx.iter().enumerate() {
        if idx[a + 1..].iter().any(|&j| g.adjacent_idx(i, j)) {
            return Err(Error::ForcedSetNotIndependent);
        }
    }
    Ok(idx)
}

fn candidates(s: &Solver, forced: &[usize]) -> FixedBitSet {
    let mut p = s.full();
    for &f in forced {
        p.set(f, false);
        p.intersect_with(&s.non_adj[f]);
    }
    p
}

fn result(g: &PrimeGraph, mut idx: Vec<usize>, forced: &[BigUint]) -> IndependenceResult {
    idx.sort_unstable();
    let mut e_pattern: Vec<PatternEntry> = idx.iter().map(|&i| g.labels[i].clone()).collect();
    e_pattern.sort();
    let mut forced: Vec<BigUint> = forced.to_vec();
    forced.sort();
    forced.dedup();
    IndependenceResult { rho: idx.iter().map(|&i| g.vertices[i].clone()).collect(), t: idx.len(), forced, e_pattern }
}

/// A maximum independent set containing `forced`; the witness is the
/// lexicographically smallest optimal set in ascending prime order.
pub fn max_independent_set(g: &PrimeGraph, forced: &[BigUint]) -> Result<IndependenceResult> {
    let f = forced_indices(g, forced)?;
    let s = Solver::new(g);
    let p = candidates(&s, &f);
    let need = s.max_size(&p);
    let mut idx = s.lex_smallest(p, need);
    idx.extend(&f);
    Ok(result(g, idx, forced))
}

/// Every maximum independent set containing `forced`, ascending; stops after
/// `limit` sets.
pub fn all_maximum_independent_sets(
    g: &PrimeGraph,
    forced: &[BigUint],
    limit: usize,
) -> Result<Vec<IndependenceResult>> {
    let f = forced_indices(g, forced)?;
    let s = Solver::new(g);
    let p = candidates(&s, &f);
    let need = s.max_size(&p);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    enumerate_sets(&s, p, need, &mut cur, &mut |set| {
        let mut idx = set.to_vec();
        idx.extend(&f);
        out.push(result(g, idx, forced));
        out.len() < limit
    });
    Ok(out)
}

fn enumerate_sets(
    s: &Solver,
    p: FixedBitSet,
    need: usize,
    cur: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if need == 0 {
        return emit(cur);
    }
    for v in p.ones() {
        let mut rest = p.clone();
        rest.intersect_with(&s.non_adj[v]);
        rest.set_range(..v + 1, false);
        if need > 1 && s.best_in(&rest, need - 2).is_none_or(|b| b < need - 1) {
            continue;
        }
        cur.push(v);
        let go_on = enumerate_sets(s, rest, need - 1, cur, emit);
        cur.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Brute-force maximum independent set size over all subsets; for
/// cross-checking on small graphs.
pub fn exhaustive_independence_number(g: &PrimeGraph, forced: &[BigUint]) -> Result<usize> {
    let n = g.len();
    if n > 24 {
        return Err(Error::Domain(format!("exhaustive search is limited to 24 vertices, graph has {n}")));
    }
    let f = forced_indices(g, forced)?;
    let fmask: u32 = f.iter().map(|&i| 1u32 << i).sum();
    let mut best = 0;
    'subsets: for mask in 0u32..(1u32 << n) {
        if mask & fmask != fmask || (mask.count_ones() as usize) <= best {
            continue;
        }
        for i in 0..n {
            if mask >> i & 1 == 1 {
                for j in i + 1..n {
                    if mask >> j & 1 == 1 && g.adjacent_idx(i, j) {
                        continue 'subsets;
                    }
                }
            }
        }
        best = mask.count_ones() as usize;
    }
    Ok(best)
}

/// Connected components; the component containing 2 comes first, the rest
/// are ordered by their smallest prime.
pub fn components(g: &PrimeGraph) -> ComponentPartition {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for (w, seen_w) in seen.iter_mut().enumerate() {
                if !*seen_w && g.adjacent_idx(v, w) {
                    *seen_w = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp.into_iter().map(|i| g.vertices[i].clone()).collect::<Vec<_>>());
    }
    // Vertices are ascending, so the component of 2, if any, is found first.
    ComponentPartition { components }
}

/// True iff every connected component is a clique.
pub fn all_components_cliques(g: &PrimeGraph) -> bool {
    components(g).components.iter().all(|c| {
        let idx: Vec<usize> = c.iter().map(|r| g.index_of(r).expect("vertex")).collect();
        idx.iter().enumerate().all(|(a, &i)| idx[a + 1..].iter().all(|&j| g.adjacent_idx(i, j)))
    })
}

/// The sorted pattern entries of `rho`.
pub fn e_pattern(g: &PrimeGraph, rho: &[BigUint]) -> Result<Vec<PatternEntry>> {
    let mut out = rho
        .iter()
        .map(|r| {
            let i = g
                .index_of(r)
                .ok_or_else(|| Error::VertexNotInGroup { group: g.group.to_string(), prime: r.to_string() })?;
            Ok(g.labels[i].clone())
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency::build_graph;
    use crate::arith::Budget;
    use crate::groups::{parse_spec, GroupSpec};

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn graph(s: &str) -> PrimeGraph {
        build_graph(&parse_spec(s).unwrap(), Budget::default()).unwrap()
    }

    fn primes(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn triangle() {
        let g = PrimeGraph::from_edges(
            GroupSpec::alternating(5).unwrap(),
            primes(&[2, 3, 5]),
            &[(0, 1), (1, 2), (0, 2)],
            "test",
        );
        let r = max_independent_set(&g, &[]).unwrap();
        assert_eq!(r.t, 1);
        assert_eq!(r.rho, primes(&[2]));
        assert_eq!(components(&g).s(), 1);
        assert!(all_components_cliques(&g));
    }

    #[test]
    fn documented_examples() {
        let r = max_independent_set(&graph("Alt(5)"), &[big(2)]).unwrap();
        assert_eq!((r.t, r.rho), (3, primes(&[2, 3, 5])));
        let r = max_independent_set(&graph("J4"), &[big(2)]).unwrap();
        assert_eq!((r.t, r.rho), (6, primes(&[2, 23, 29, 31, 37, 43])));
        // 3 + 7 = 10 points suffice for an element of order 21 in Alt(10).
        assert_eq!(components(&graph("Alt(10)")).s(), 1);
        let c = components(&graph("Alt(9)"));
        assert_eq!(c.components, vec![primes(&[2, 3, 5]), primes(&[7])]);
        assert_eq!(components(&graph("2B2(8)")).s(), 4);
        assert!(all_components_cliques(&graph("2B2(8)")));
        assert!(all_components_cliques(&graph("Alt(13)")));
        assert_eq!(max_independent_set(&graph("Alt(27)"), &[big(2)]).unwrap().t, 1);
    }

    #[test]
    fn patterns() {
        let g = graph("A5(2)");
        let r = max_independent_set(&g, &[big(2)]).unwrap();
        assert_eq!(r.rho, primes(&[2, 31]));
        assert_eq!(r.e_pattern, vec![PatternEntry::Char, PatternEntry::E(5)]);
        let g = graph("2B2(8)");
        let r = max_independent_set(&g, &[]).unwrap();
        let shown: Vec<String> = r.e_pattern.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["p", "s1", "s2", "s3"]);
    }

    #[test]
    fn forced_errors() {
        let g = graph("A1(8)");
        assert!(matches!(max_independent_set(&g, &[big(11)]), Err(Error::ForcedVertexMissing(_))));
        let g = graph("Alt(7)");
        assert!(matches!(max_independent_set(&g, &[big(2), big(3)]), Err(Error::ForcedSetNotIndependent)));
    }

    #[test]
    fn uniqueness_mode() {
        let g = graph("M11");
        let all = all_maximum_independent_sets(&g, &[big(2)], 10).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].rho, primes(&[2, 5, 11]));
    }
}
