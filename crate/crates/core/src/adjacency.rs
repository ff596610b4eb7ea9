//! Adjacency criteria for the prime graph and graph assembly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{eta, nu_eps, prime_part, suzuki_ree_m, Budget, SuzukiReeSeries};
use crate::error::{Error, Result};
use crate::groups::{prime_set, GroupSpec, LieContext, LieSeries};
use crate::refdata::lookup_sporadic;

/// Which clause of which criterion decided a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// The criterion is a single condition.
    Sole,
    /// A numbered clause fired.
    Number(u8),
    /// No clause of a clause list fired.
    Otherwise,
}

/// Provenance of an adjacency decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CriterionTag {
    pub proposition: &'static str,
    pub clause: Clause,
}

impl CriterionTag {
    const fn new(proposition: &'static str, clause: Clause) -> Self {
        CriterionTag { proposition, clause }
    }

    /// Clause label: "1", "otherwise", or "" for single-condition criteria.
    pub fn clause_label(&self) -> String {
        match self.clause {
            Clause::Sole => String::new(),
            Clause::Number(k) => k.to_string(),
            Clause::Otherwise => "otherwise".into(),
        }
    }
}

impl fmt::Display for CriterionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.clause {
            Clause::Sole => f.write_str(self.proposition),
            Clause::Number(k) => write!(f, "{} clause {}", self.proposition, k),
            Clause::Otherwise => write!(f, "{} otherwise", self.proposition),
        }
    }
}

/// What a vertex contributes to an e-pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternEntry {
    /// The characteristic of a group of Lie type.
    Char,
    /// A prime r with e(r, q) = m.
    E(u64),
    /// Suzuki and Ree groups: the indices i with r | m_i.
    Classes(Vec<u32>),
    /// Alternating and sporadic groups: the prime itself.
    Prime(BigUint),
}

impl fmt::Display for PatternEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternEntry::Char => f.write_str("p"),
            PatternEntry::E(m) => write!(f, "r{m}"),
            PatternEntry::Classes(c) => {
                let parts: Vec<String> = c.iter().map(u32::to_string).collect();
                write!(f, "s{}", parts.join("/"))
            }
            PatternEntry::Prime(r) => write!(f, "{r}"),
        }
    }
}

/// An adjacency decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub adjacent: bool,
    pub tag: CriterionTag,
}

fn decide(adjacent: bool, proposition: &'static str, clause: Clause) -> Decision {
    Decision { adjacent, tag: CriterionTag::new(proposition, clause) }
}

/// Non-adjacent by the first numbered clause that holds, else adjacent.
fn clauses(proposition: &'static str, holds: &[bool]) -> Decision {
    match holds.iter().position(|&h| h) {
        Some(i) => decide(false, proposition, Clause::Number(i as u8 + 1)),
        None => decide(true, proposition, Clause::Otherwise),
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn small(r: &BigUint) -> Option<u64> {
    r.to_u64()
}

fn is(r: &BigUint, v: u64) -> bool {
    small(r) == Some(v)
}

/// Everything needed to decide adjacency in one group.
#[derive(Debug, Clone)]
pub struct GraphContext {
    group: GroupSpec,
    primes: Vec<BigUint>,
    lie: Option<LieContext>,
    /// For Suzuki and Ree groups: the indices i with r | m_i.
    classes: BTreeMap<BigUint, Vec<u32>>,
}

impl GraphContext {
    pub fn new(group: &GroupSpec, budget: Budget) -> Result<GraphContext> {
        let (primes, lie) = match group {
            GroupSpec::Lie(l) => {
                let ctx = LieContext::new(l, budget)?;
                (ctx.primes.clone(), Some(ctx))
            }
            _ => (prime_set(group, budget)?, None),
        };
        let mut classes = BTreeMap::new();
        if let Some(ctx) = &lie {
            if let Some(series) = suzuki_ree_series(ctx.group.series()) {
                let n = ctx.group.n();
                let ms: Vec<BigUint> =
                    (1..=series.count()).map(|i| suzuki_ree_m(series, n, i)).collect::<Result<_>>()?;
                for r in &primes {
                    let idx: Vec<u32> = ms
                        .iter()
                        .enumerate()
                        .filter(|(_, m)| (*m % r) == BigUint::default())
                        .map(|(i, _)| i as u32 + 1)
                        .collect();
                    if !idx.is_empty() {
                        classes.insert(r.clone(), idx);
                    }
                }
            }
        }
        Ok(GraphContext { group: group.clone(), primes, lie, classes })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    pub fn lie(&self) -> Option<&LieContext> {
        self.lie.as_ref()
    }

    /// Indices i with r | m_i for Suzuki and Ree groups.
    pub fn classes(&self, r: &BigUint) -> &[u32] {
        self.classes.get(r).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The e-pattern entry of a vertex.
    pub fn label(&self, r: &BigUint) -> PatternEntry {
        match &self.lie {
            None => PatternEntry::Prime(r.clone()),
            Some(ctx) if r == &big(ctx.group.p()) => PatternEntry::Char,
            Some(ctx) if ctx.group.series().is_suzuki_ree() => PatternEntry::Classes(self.classes(r).to_vec()),
            Some(ctx) => PatternEntry::E(ctx.e(r)),
        }
    }

    fn check_vertex(&self, r: &BigUint) -> Result<()> {
        if self.primes.binary_search(r).is_ok() {
            Ok(())
        } else {
            Err(Error::VertexNotInGroup { group: self.group.to_string(), prime: r.to_string() })
        }
    }

    /// Decides whether r and s are adjacent.
    pub fn adjacent(&self, r: &BigUint, s: &BigUint) -> Result<Decision> {
        self.check_vertex(r)?;
        self.check_vertex(s)?;
        if r == s {
            return Err(Error::Domain(format!("adjacency needs two distinct primes, got {r} twice")));
        }
        Ok(match &self.group {
            GroupSpec::Alternating(n) => alternating(*n as u64, r, s),
            GroupSpec::Sporadic(sp) => {
                let g = lookup_sporadic(sp.name())?;
                decide(g.adjacent(r, s).expect("vertices checked"), "SporadicData", Clause::Sole)
            }
            GroupSpec::Lie(_) => self.lie_adjacent(r, s),
        })
    }

    fn lie_adjacent(&self, r: &BigUint, s: &BigUint) -> Decision {
        let ctx = self.lie.as_ref().expect("Lie context");
        let g = &ctx.group;
        let p = big(g.p());
        if r == &p || s == &p {
            let other = if r == &p { s } else { r };
            return self.with_characteristic(other);
        }
        let two = big(2);
        let series = g.series();
        match series {
            LieSeries::A | LieSeries::TwistedA => {
                let eps = series.eps();
                let low = |x: &BigUint| x == &two || nu_eps(eps, ctx.e(x)) == 1;
                if low(r) || low(s) {
                    let (lo, hi) = if r == &two {
                        (r, s)
                    } else if s == &two {
                        (s, r)
                    } else if low(r) {
                        (r, s)
                    } else {
                        (s, r)
                    };
                    self.divisor_of_q_minus_eps(lo, hi)
                } else {
                    let (mut k, mut l) = (nu_eps(eps, ctx.e(r)), nu_eps(eps, ctx.e(s)));
                    if k > l {
                        std::mem::swap(&mut k, &mut l);
                    }
                    let prop = if series == LieSeries::A { "Prop2.1" } else { "Prop2.2" };
                    decide(!(k + l > g.n() as u64 && l % k != 0), prop, Clause::Sole)
                }
            }
            LieSeries::B | LieSeries::C => {
                if r == &two || s == &two {
                    let odd = if r == &two { s } else { r };
                    let (n, k, e2) = (g.n() as u64, ctx.e(odd), ctx.e(&two));
                    let holds = eta(k) == n && ((n % 2 == 1 && k == (3 - e2) * n) || (n % 2 == 0 && k == 2 * n));
                    decide(!holds, "Prop4.3", Clause::Sole)
                } else {
                    let (k, l) = ordered_by_eta(ctx.e(r), ctx.e(s));
                    let holds = eta(k) + eta(l) > g.n() as u64 && !odd_quotient(k, l);
                    decide(!holds, "Prop2.3", Clause::Sole)
                }
            }
            LieSeries::D | LieSeries::TwistedD => {
                let n = g.n() as u64;
                let plus = series == LieSeries::D;
                if r == &two || s == &two {
                    let odd = if r == &two { s } else { r };
                    let (k, e2) = (ctx.e(odd), ctx.e(&two));
                    let qn = num_traits::pow(g.q_big(), n as usize);
                    let qn_eps = if plus { qn - 1u32 } else { qn + 1u32 };
                    let four_part = big(4).gcd(&qn_eps);
                    let two_part = prime_part(&qn_eps, &two);
                    clauses(
                        "Prop4.4",
                        &[
                            eta(k) == n && four_part == two_part,
                            eta(k) == k && k == n - 1 && n.is_multiple_of(2) && plus && e2 == 2,
                            k % 2 == 0 && eta(k) == n - 1 && plus && e2 == 1,
                            k % 2 == 0 && eta(k) == n - 1 && n % 2 == 1 && !plus && e2 == 2,
                        ],
                    )
                } else {
                    let (k, l) = ordered_by_eta(ctx.e(r), ctx.e(s));
                    let eps: i64 = if plus { 1 } else { -1 };
                    let sign = if (k + l) % 2 == 0 { 1 } else { -1 };
                    let lhs = 2 * eta(k) as i64 + 2 * eta(l) as i64;
                    let rhs = 2 * n as i64 - (1 - eps * sign);
                    let chain = n == l && l == 2 * eta(l) && eta(l) == eta(k) && 2 * eta(k) == 2 * k;
                    let holds = lhs > rhs && !odd_quotient(k, l) && !(plus && chain);
                    decide(!holds, "Prop2.4", Clause::Sole)
                }
            }
            LieSeries::Suzuki | LieSeries::ReeG2 | LieSeries::ReeF4 => {
                if r == &two || s == &two {
                    // Only 2G2 has 2 distinct from the characteristic.
                    let odd = if r == &two { s } else { r };
                    let cls = self.classes(odd);
                    clauses(
                        "Prop4.5",
                        &[false, false, false, false, false, false, false, cls.contains(&3) || cls.contains(&4)],
                    )
                } else {
                    self.suzuki_ree_odd(r, s)
                }
            }
            _ => {
                if r == &two || s == &two {
                    let odd = if r == &two { s } else { r };
                    let (k, e2) = (ctx.e(odd), ctx.e(&two));
                    let mut holds = [false; 8];
                    match series {
                        LieSeries::G2 => holds[0] = k == 3 || k == 6,
                        LieSeries::F4 => holds[1] = k == 12,
                        LieSeries::E6 => holds[2] = k == 9 || k == 12,
                        LieSeries::TwistedE6 => holds[3] = k == 12 || k == 18,
                        LieSeries::E7 => {
                            holds[4] = ((k == 7 || k == 9) && e2 == 2) || ((k == 14 || k == 18) && e2 == 1)
                        }
                        LieSeries::E8 => holds[5] = matches!(k, 15 | 20 | 24 | 30),
                        LieSeries::TrialityD4 => holds[6] = k == 12,
                        _ => unreachable!(),
                    }
                    clauses("Prop4.5", &holds)
                } else {
                    self.exceptional_odd(r, s)
                }
            }
        }
    }

    /// Adjacency in A^ε types when `r` divides q − ε1 (or is 2).
    fn divisor_of_q_minus_eps(&self, r: &BigUint, s: &BigUint) -> Decision {
        let ctx = self.lie.as_ref().unwrap();
        let g = &ctx.group;
        let series = g.series();
        let q = g.q_big();
        let q_eps = if series == LieSeries::A { q - 1u32 } else { q + 1u32 };
        let n = g.n() as u64;
        let k = nu_eps(series.eps(), ctx.e(s));
        let n_r = prime_part(&big(n), r);
        let q_r = prime_part(&q_eps, r);
        let two = big(2);
        let prop = if series == LieSeries::A { "Prop4.1" } else { "Prop4.2" };
        clauses(prop, &[k == n && n_r <= q_r && (n_r != q_r || q_r > two), k + 1 == n && q_r <= n_r])
    }

    fn with_characteristic(&self, r: &BigUint) -> Decision {
        let ctx = self.lie.as_ref().unwrap();
        let g = &ctx.group;
        let series = g.series();
        let n = g.n() as u64;
        let two = big(2);
        let odd = r != &two;
        if series.is_classical() {
            let k = ctx.e(r);
            let q = g.q_big();
            let three = big(3);
            let a2_three = g.rank() == 2
                && matches!(series, LieSeries::A | LieSeries::TwistedA)
                && is(r, 3)
                && prime_part(&(if series == LieSeries::A { q - 1u32 } else { q + 1u32 }), &three) == three;
            return clauses(
                "Prop3.1",
                &[
                    series == LieSeries::A && odd && k + 2 > n,
                    series == LieSeries::TwistedA && odd && nu_eps(series.eps(), k) + 2 > n,
                    series == LieSeries::C && eta(k) + 1 > n,
                    series == LieSeries::B && eta(k) + 1 > n,
                    matches!(series, LieSeries::D | LieSeries::TwistedD) && eta(k) + 2 > n,
                    series == LieSeries::A && g.rank() == 1 && !odd,
                    a2_three,
                ],
            );
        }
        if series.is_suzuki_ree() {
            let cls = self.classes(r);
            return match series {
                LieSeries::Suzuki => clauses("Prop3.3", &[!cls.is_empty()]),
                LieSeries::ReeG2 => clauses("Prop3.3", &[false, !cls.is_empty() && odd]),
                // The m_3 divisors centralize a 2B2(q) and are therefore
                // adjacent to 2; only classes 4, 5 and 6 are isolated from it.
                _ => clauses("Prop3.3", &[false, false, !is(r, 3) && cls.iter().any(|&k| k > 3)]),
            };
        }
        let k = ctx.e(r);
        let mut holds = [false; 7];
        match series {
            LieSeries::G2 => holds[0] = k == 3 || k == 6,
            LieSeries::F4 => holds[1] = k == 8 || k == 12,
            LieSeries::E6 => holds[2] = matches!(k, 8 | 9 | 12),
            LieSeries::TwistedE6 => holds[3] = matches!(k, 8 | 12 | 18),
            LieSeries::E7 => holds[4] = matches!(k, 7 | 9 | 14 | 18),
            LieSeries::E8 => holds[5] = matches!(k, 15 | 20 | 24 | 30),
            LieSeries::TrialityD4 => holds[6] = k == 12,
            _ => unreachable!(),
        }
        clauses("Prop3.2", &holds)
    }

    fn exceptional_odd(&self, r: &BigUint, s: &BigUint) -> Decision {
        let ctx = self.lie.as_ref().unwrap();
        let g = &ctx.group;
        let (mut r, mut s) = (r, s);
        if ctx.e(r) > ctx.e(s) {
            std::mem::swap(&mut r, &mut s);
        }
        let (k, l) = (ctx.e(r), ctx.e(s));
        let mut holds = [false; 7];
        if k != l {
            let q = g.q_big();
            let three = big(3);
            let r3 = is(r, 3);
            let rk = small(r).map(|v| v.saturating_mul(k));
            match g.series() {
                LieSeries::G2 => holds[0] = (!r3 && (l == 3 || l == 6)) || (r3 && (l as i64) == 9 - 3 * k as i64),
                LieSeries::F4 => holds[1] = l == 8 || l == 12 || (l == 6 && (k == 3 || k == 4)) || (l == 4 && k == 3),
                LieSeries::E6 => {
                    holds[2] = (l == 4 && k == 3)
                        || (l == 5 && k >= 3)
                        || (l == 6 && k == 5)
                        || (l == 8 && k >= 3)
                        || (l == 8 && r3 && prime_part(&(q - 1u32), &three) == three)
                        || l == 9
                        || (l == 12 && k != 3)
                }
                LieSeries::TwistedE6 => {
                    holds[3] = (l == 6 && k == 4)
                        || (l == 8 && k >= 3)
                        || (l == 8 && r3 && prime_part(&(q + 1u32), &three) == three)
                        || (l == 10 && k >= 3)
                        || (l == 12 && k != 6)
                        || l == 18
                }
                LieSeries::E7 => {
                    holds[4] = (l == 5 && k == 4)
                        || (l == 6 && k == 5)
                        || ((l == 14 || l == 18) && k != 2)
                        || ((l == 7 || l == 9) && k >= 2)
                        || (l == 8 && k >= 3 && k != 4)
                        || (l == 10 && k >= 3 && k != 6)
                        || (l == 12 && k >= 4 && k != 6)
                }
                LieSeries::E8 => {
                    holds[5] = (l == 6 && k == 5)
                        || ((l == 7 || l == 14) && k >= 3)
                        || (l == 9 && k >= 4)
                        || ((l == 8 || l == 12) && k >= 5 && k != 6)
                        || (l == 10 && k >= 3 && k != 4 && k != 6)
                        || (l == 18 && !matches!(k, 1 | 2 | 6))
                        || (l == 20 && rk != Some(20))
                        || matches!(l, 15 | 24 | 30)
                }
                LieSeries::TrialityD4 => holds[6] = (l == 6 && k == 3) || l == 12,
                _ => unreachable!(),
            }
        }
        clauses("Prop2.5", &holds)
    }

    fn suzuki_ree_odd(&self, r: &BigUint, s: &BigUint) -> Decision {
        let ctx = self.lie.as_ref().unwrap();
        let (cr, cs) = (self.classes(r), self.classes(s));
        let shared = cr.iter().any(|k| cs.contains(k));
        match ctx.group.series() {
            LieSeries::Suzuki => clauses("Prop2.6", &[!shared]),
            LieSeries::ReeG2 => clauses("Prop2.6", &[false, !shared]),
            _ => {
                // Tori (q-1)(q±√(2q)+1) and q^2-1 join class 1 to classes 3 and 2.
                let linked = cr.iter().any(|&k| cs.iter().any(|&l| matches!((k.min(l), k.max(l)), (1, 2) | (1, 3))));
                clauses("Prop2.6", &[false, false, !shared && !linked])
            }
        }
    }
}

fn suzuki_ree_series(series: LieSeries) -> Option<SuzukiReeSeries> {
    match series {
        LieSeries::Suzuki => Some(SuzukiReeSeries::B),
        LieSeries::ReeG2 => Some(SuzukiReeSeries::G),
        LieSeries::ReeF4 => Some(SuzukiReeSeries::F),
        _ => None,
    }
}

/// Orders (k, l) so that η(k) <= η(l), breaking ties by k <= l.
fn ordered_by_eta(a: u64, b: u64) -> (u64, u64) {
    if (eta(a), a) <= (eta(b), b) {
        (a, b)
    } else {
        (b, a)
    }
}

/// True when l / k is an odd natural number.
fn odd_quotient(k: u64, l: u64) -> bool {
    l.is_multiple_of(k) && (l / k) % 2 == 1
}

fn alternating(n: u64, r: &BigUint, s: &BigUint) -> Decision {
    let (r, s) = (r.to_u64().unwrap(), s.to_u64().unwrap());
    let non_adjacent = if r == 2 || s == 2 { r.max(s) + 4 > n } else { r + s > n };
    decide(!non_adjacent, "Alt", Clause::Sole)
}

/// Decides adjacency of r and s in GK(G).
pub fn adjacent(g: &GroupSpec, r: &BigUint, s: &BigUint, budget: Budget) -> Result<Decision> {
    GraphContext::new(g, budget)?.adjacent(r, s)
}

/// The prime graph with per-pair provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeGraph {
    pub group: GroupSpec,
    pub vertices: Vec<BigUint>,
    /// e-pattern entry of each vertex.
    pub labels: Vec<PatternEntry>,
    adjacency: Vec<Vec<bool>>,
    provenance: BTreeMap<(usize, usize), CriterionTag>,
}

impl PrimeGraph {
    /// A graph from explicit data, with every pair tagged `source`.
    pub fn from_edges(
        group: GroupSpec,
        vertices: Vec<BigUint>,
        edges: &[(usize, usize)],
        source: &'static str,
    ) -> Self {
        let n = vertices.len();
        let mut adjacency = vec![vec![false; n]; n];
        for &(a, b) in edges {
            assert!(a != b && a < n && b < n, "bad edge ({a},{b})");
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        let mut provenance = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                provenance.insert((i, j), CriterionTag::new(source, Clause::Sole));
            }
        }
        let labels = vertices.iter().cloned().map(PatternEntry::Prime).collect();
        PrimeGraph { group, vertices, labels, adjacency, provenance }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, r: &BigUint) -> Option<usize> {
        self.vertices.binary_search(r).ok()
    }

    pub fn adjacent_idx(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn adjacent(&self, r: &BigUint, s: &BigUint) -> Option<bool> {
        Some(self.adjacency[self.index_of(r)?][self.index_of(s)?])
    }

    pub fn provenance(&self, i: usize, j: usize) -> Option<CriterionTag> {
        self.provenance.get(&(i.min(j), i.max(j))).copied()
    }

    /// Edges as index pairs (i < j) in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adjacency[i][j]).collect()
    }
}

/// Builds GK(G) over π(G).
pub fn build_graph(g: &GroupSpec, budget: Budget) -> Result<PrimeGraph> {
    let ctx = GraphContext::new(g, budget)?;
    build_graph_with(&ctx)
}

/// Builds GK(G) from an existing context.
pub fn build_graph_with(ctx: &GraphContext) -> Result<PrimeGraph> {
    let vertices = ctx.primes().to_vec();
    let n = vertices.len();
    let mut adjacency = vec![vec![false; n]; n];
    let mut provenance = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = ctx.adjacent(&vertices[i], &vertices[j])?;
            adjacency[i][j] = d.adjacent;
            adjacency[j][i] = d.adjacent;
            provenance.insert((i, j), d.tag);
        }
    }
    let labels = vertices.iter().map(|r| ctx.label(r)).collect();
    Ok(PrimeGraph { group: ctx.group().clone(), vertices, labels, adjacency, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::parse_spec;

    fn adj(g: &str, r: u64, s: u64) -> Decision {
        adjacent(&parse_spec(g).unwrap(), &big(r), &big(s), Budget::default()).unwrap()
    }

    #[test]
    fn documented_examples() {
        let d = adj("A(6,2)", 2, 31);
        assert!(!d.adjacent);
        assert_eq!(d.tag.to_string(), "Prop3.1 clause 1");
        let d = adj("A5(2)", 7, 31);
        assert!(!d.adjacent);
        assert_eq!(d.tag.to_string(), "Prop2.1");
        assert!(adj("Alt(7)", 2, 3).adjacent);
        let d = adj("Alt(7)", 3, 5);
        assert!(!d.adjacent);
        assert_eq!(d.tag.to_string(), "Alt");
        assert!(!adj("C2(5)", 2, 13).adjacent);
        let d = adj("M11", 2, 3);
        assert!(d.adjacent);
        assert_eq!(d.tag.to_string(), "SporadicData");
        assert!(!adj("M11", 2, 11).adjacent);
    }

    #[test]
    fn small_graphs() {
        let g = build_graph(&parse_spec("2B2(8)").unwrap(), Budget::default()).unwrap();
        assert_eq!(g.vertices, vec![big(2), big(5), big(7), big(13)]);
        assert!(g.edges().is_empty());
        let g = build_graph(&parse_spec("Alt(5)").unwrap(), Budget::default()).unwrap();
        assert!(g.edges().is_empty());
        let g = build_graph(&parse_spec("A1(7)").unwrap(), Budget::default()).unwrap();
        assert_eq!(g.vertices, vec![big(2), big(3), big(7)]);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn ree_two() {
        let g = parse_spec("2G2(27)").unwrap();
        assert!(adj("2G2(27)", 2, 3).adjacent);
        let ctx = GraphContext::new(&g, Budget::default()).unwrap();
        for r in ctx.primes() {
            let cls = ctx.classes(r);
            if !is(r, 2) && !is(r, 3) && (cls.contains(&3) || cls.contains(&4)) {
                assert!(!ctx.adjacent(&big(2), r).unwrap().adjacent);
            }
        }
    }

    #[test]
    fn errors() {
        let g = parse_spec("A1(7)").unwrap();
        assert!(matches!(adjacent(&g, &big(2), &big(5), Budget::default()), Err(Error::VertexNotInGroup { .. })));
        assert!(matches!(adjacent(&g, &big(2), &big(2), Budget::default()), Err(Error::Domain(_))));
    }

    #[test]
    fn condition_three_reformulation() {
        // l/k odd natural <=> q^η(k) + (-1)^k divides q^η(l) + (-1)^l.
        for q in [2u64, 3, 4, 5, 7, 9] {
            for n in 1..=12u64 {
                for k in 2..=2 * n {
                    for l in 2..=2 * n {
                        if eta(k) > eta(l) {
                            continue;
                        }
                        let term = |m: u64| {
                            let v = num_traits::pow(big(q), eta(m) as usize);
                            if m.is_multiple_of(2) {
                                v + 1u32
                            } else {
                                v - 1u32
                            }
                        };
                        let divides = (term(l) % term(k)) == BigUint::default();
                        assert_eq!(odd_quotient(k, l), divides, "q={q} k={k} l={l}");
                    }
                }
            }
        }
    }
}
