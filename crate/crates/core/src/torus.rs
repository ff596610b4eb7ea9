//! Maximal-torus orders and the adjacency oracle built on them.
//!
//! Two primes r, s different from the characteristic are adjacent exactly
//! when some maximal torus has order divisible by rs: semisimple elements of
//! order rs lie in a maximal torus, and a finite abelian group whose order is
//! divisible by rs contains an element of order rs.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::adjacency::{CriterionTag, GraphContext};
use crate::arith::{factorize, Budget, Factorization};
use crate::error::{Error, Result};
use crate::groups::{group_order, GroupSpec, LieGroup, LieSeries};

/// Largest classical rank the oracle enumerates.
pub const MAX_CLASSICAL_RANK: u32 = 24;

/// One polynomial factor of a torus order, evaluated at q and t, where t is
/// √(2q) or √(3q) for Suzuki and Ree groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Factor {
    /// q^d + sign.
    Power { d: u32, plus: bool },
    /// q^2 ± q + 1.
    Quadratic { plus: bool },
    /// q^4 - q^2 + 1.
    Twelfth,
    /// q ± t + 1.
    SuzukiRee { plus: bool },
    /// q^2 ± qt + q ± t + 1.
    ReeBig { plus: bool },
    /// q^2 ∓ qt ± t - 1.
    ReeMixed { plus: bool },
}

impl Factor {
    fn evaluate(self, q: &BigUint, t: &BigUint) -> BigUint {
        let one = BigUint::one();
        match self {
            Factor::Power { d, plus } => {
                let v = num_traits::pow(q.clone(), d as usize);
                if plus {
                    v + one
                } else {
                    v - one
                }
            }
            Factor::Quadratic { plus } => {
                if plus {
                    q * q + q + one
                } else {
                    q * q - q + one
                }
            }
            Factor::Twelfth => {
                let q2 = q * q;
                &q2 * &q2 - q2 + one
            }
            Factor::SuzukiRee { plus } => {
                if plus {
                    q + t + one
                } else {
                    q + one - t
                }
            }
            Factor::ReeBig { plus } => {
                if plus {
                    q * q + q * t + q + t + one
                } else {
                    q * q + q + one - q * t - t
                }
            }
            Factor::ReeMixed { plus } => {
                if plus {
                    q * q + t - q * t - one
                } else {
                    q * q + q * t - t - one
                }
            }
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |plus: bool| if plus { '+' } else { '-' };
        let m = |plus: bool| if plus { '-' } else { '+' };
        match *self {
            Factor::Power { d: 1, plus } => write!(f, "(q{}1)", s(plus)),
            Factor::Power { d, plus } => write!(f, "(q^{d}{}1)", s(plus)),
            Factor::Quadratic { plus } => write!(f, "(q^2{}q+1)", s(plus)),
            Factor::Twelfth => f.write_str("(q^4-q^2+1)"),
            Factor::SuzukiRee { plus } => write!(f, "(q{}t+1)", s(plus)),
            Factor::ReeBig { plus } => write!(f, "(q^2{0}qt+q{0}t+1)", s(plus)),
            Factor::ReeMixed { plus } => write!(f, "(q^2{}qt{}t-1)", m(plus), s(plus)),
        }
    }
}

/// Structural tag of a torus: the factors of its order before the central
/// quotient. For classical groups these are the signed parts of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Descriptor {
    pub factors: Vec<(Factor, u32)>,
}

impl Descriptor {
    fn product(factors: Vec<(Factor, u32)>) -> Descriptor {
        Descriptor { factors }
    }

    /// Signed partition parts (d, plus) for classical tori.
    pub fn parts(&self) -> Vec<(u32, bool)> {
        let mut out = Vec::new();
        for &(f, e) in &self.factors {
            if let Factor::Power { d, plus } = f {
                out.extend(std::iter::repeat_n((d, plus), e as usize));
            }
        }
        out
    }

    /// Number of factors q^d + 1, with multiplicity.
    pub fn plus_count(&self) -> u32 {
        self.factors.iter().filter(|(f, _)| matches!(f, Factor::Power { plus: true, .. })).map(|(_, e)| e).sum()
    }

    /// Recomputes the torus order in `g`.
    pub fn evaluate(&self, g: &LieGroup) -> Result<BigUint> {
        let (q, t) = (g.q_big(), root_parameter(g));
        let mut v = BigUint::one();
        for &(f, e) in &self.factors {
            v *= num_traits::pow(f.evaluate(&q, &t), e as usize);
        }
        let d = central_divisor(g);
        if !(&v % &d).is_zero() {
            return Err(Error::Data(format!("torus {self} of {g}: {v} is not divisible by {d}")));
        }
        Ok(v / d)
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(fac, e) in &self.factors {
            if e == 1 {
                write!(f, "{fac}")?;
            } else {
                write!(f, "{fac}^{e}")?;
            }
        }
        Ok(())
    }
}

/// One maximal-torus order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusOrder {
    #[serde(serialize_with = "ser_decimal")]
    pub value: BigUint,
    pub descriptor: Descriptor,
}

fn ser_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// All maximal-torus orders of a group, one entry per descriptor.
#[derive(Debug, Clone)]
pub struct TorusCensus {
    pub group: GroupSpec,
    pub orders: Vec<TorusOrder>,
}

impl TorusCensus {
    /// The distinct order values, ascending.
    pub fn distinct_values(&self) -> Vec<BigUint> {
        let mut v: Vec<BigUint> = self.orders.iter().map(|o| o.value.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// A torus whose order is divisible by both r and s.
    pub fn witness(&self, r: &BigUint, s: &BigUint) -> Option<&TorusOrder> {
        self.orders.iter().find(|o| (&o.value % r).is_zero() && (&o.value % s).is_zero())
    }
}

/// √(2q) for 2B2 and 2F4, √(3q) for 2G2, zero otherwise.
fn root_parameter(g: &LieGroup) -> BigUint {
    match g.series() {
        LieSeries::Suzuki | LieSeries::ReeF4 => num_traits::pow(BigUint::from(2u32), (g.n() + 1) as usize),
        LieSeries::ReeG2 => num_traits::pow(BigUint::from(3u32), (g.n() + 1) as usize),
        _ => BigUint::zero(),
    }
}

/// The divisor turning products of factors into orders in the simple group.
fn central_divisor(g: &LieGroup) -> BigUint {
    let q = g.q_big();
    let n = g.n();
    match g.series() {
        LieSeries::A => {
            let qm = &q - 1u32;
            BigUint::from(n).gcd(&qm) * qm
        }
        LieSeries::TwistedA => {
            let qp = &q + 1u32;
            BigUint::from(n).gcd(&qp) * qp
        }
        LieSeries::B | LieSeries::C => BigUint::from(2u32).gcd(&(&q - 1u32)),
        LieSeries::D => BigUint::from(4u32).gcd(&(num_traits::pow(q, n as usize) - 1u32)),
        LieSeries::TwistedD => BigUint::from(4u32).gcd(&(num_traits::pow(q, n as usize) + 1u32)),
        _ => BigUint::one(),
    }
}

/// Partitions of n in non-increasing order.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Collapses a list of factors into (factor, multiplicity) pairs.
fn collect(factors: impl IntoIterator<Item = Factor>) -> Descriptor {
    let mut out: Vec<(Factor, u32)> = Vec::new();
    for f in factors {
        match out.iter_mut().find(|(g, _)| *g == f) {
            Some(entry) => entry.1 += 1,
            None => out.push((f, 1)),
        }
    }
    Descriptor::product(out)
}

fn pw(d: u32, plus: bool) -> Factor {
    Factor::Power { d, plus }
}

const SIGNS: [bool; 2] = [false, true];

fn descriptors(g: &LieGroup) -> Result<Vec<Descriptor>> {
    let n = g.n();
    let series = g.series();
    if series.is_classical() && g.rank() > MAX_CLASSICAL_RANK {
        return Err(Error::UnsupportedFamily(format!(
            "{g}: torus enumeration is limited to classical rank {MAX_CLASSICAL_RANK}"
        )));
    }
    let signed = |keep: &dyn Fn(usize) -> bool| -> Vec<Descriptor> {
        let mut out = Vec::new();
        for k in 0..=n {
            for minus in partitions(k) {
                for plus in partitions(n - k) {
                    if keep(plus.len()) {
                        out.push(collect(minus.iter().map(|&d| pw(d, false)).chain(plus.iter().map(|&d| pw(d, true)))));
                    }
                }
            }
        }
        out
    };
    let one = |f: Factor, e: u32| Descriptor::product(vec![(f, e)]);
    let two = |f: Factor, e: u32, h: Factor, k: u32| Descriptor::product(vec![(f, e), (h, k)]);
    Ok(match series {
        LieSeries::A => partitions(n).into_iter().map(|p| collect(p.into_iter().map(|d| pw(d, false)))).collect(),
        LieSeries::TwistedA => {
            partitions(n).into_iter().map(|p| collect(p.into_iter().map(|d| pw(d, d % 2 == 1)))).collect()
        }
        LieSeries::B | LieSeries::C => signed(&|_| true),
        LieSeries::D => signed(&|m| m % 2 == 0),
        LieSeries::TwistedD => signed(&|m| m % 2 == 1),
        LieSeries::G2 => {
            let mut v: Vec<_> = SIGNS.iter().map(|&s| one(pw(1, s), 2)).collect();
            v.push(one(pw(2, false), 1));
            v.extend(SIGNS.iter().map(|&s| one(Factor::Quadratic { plus: s }, 1)));
            v
        }
        LieSeries::F4 => {
            let mut v: Vec<_> = SIGNS.iter().map(|&s| one(pw(1, s), 4)).collect();
            for &a in &SIGNS {
                for &b in &SIGNS {
                    v.push(two(pw(1, a), 2, pw(2, b), 1));
                }
            }
            v.extend(SIGNS.iter().map(|&s| one(pw(2, s), 2)));
            for &a in &SIGNS {
                for &b in &SIGNS {
                    v.push(two(pw(1, a), 1, pw(3, b), 1));
                }
            }
            v.extend(SIGNS.iter().map(|&s| one(pw(4, s), 1)));
            v.extend(SIGNS.iter().map(|&s| one(Factor::Quadratic { plus: s }, 2)));
            v.push(one(Factor::Twelfth, 1));
            v
        }
        LieSeries::TrialityD4 => {
            let mut v = Vec::new();
            for &a in &SIGNS {
                for &b in &SIGNS {
                    v.push(two(pw(3, a), 1, pw(1, b), 1));
                }
            }
            v.extend(SIGNS.iter().map(|&s| one(Factor::Quadratic { plus: s }, 2)));
            v.push(one(Factor::Twelfth, 1));
            v
        }
        LieSeries::Suzuki => {
            let mut v = vec![one(pw(1, false), 1)];
            v.extend(SIGNS.iter().map(|&s| one(Factor::SuzukiRee { plus: s }, 1)));
            v
        }
        LieSeries::ReeG2 => {
            let mut v: Vec<_> = SIGNS.iter().map(|&s| one(pw(1, s), 1)).collect();
            v.extend(SIGNS.iter().map(|&s| one(Factor::SuzukiRee { plus: s }, 1)));
            v
        }
        LieSeries::ReeF4 => {
            let mut v: Vec<_> = SIGNS.iter().map(|&s| one(Factor::ReeBig { plus: s }, 1)).collect();
            v.extend(SIGNS.iter().map(|&s| one(Factor::ReeMixed { plus: s }, 1)));
            v.push(one(Factor::Quadratic { plus: false }, 1));
            v.extend(SIGNS.iter().map(|&s| one(Factor::SuzukiRee { plus: s }, 2)));
            v.extend(SIGNS.iter().map(|&s| two(pw(1, false), 1, Factor::SuzukiRee { plus: s }, 1)));
            v.extend(SIGNS.iter().map(|&s| one(pw(1, s), 2)));
            v.extend(SIGNS.iter().map(|&s| one(pw(2, s), 1)));
            v
        }
        LieSeries::E6 | LieSeries::TwistedE6 | LieSeries::E7 | LieSeries::E8 => {
            return Err(Error::UnsupportedFamily(format!("{g}: the torus oracle does not cover E6, 2E6, E7 or E8")))
        }
    })
}

fn lie_of(g: &GroupSpec) -> Result<&LieGroup> {
    g.as_lie().ok_or_else(|| Error::UnsupportedFamily(format!("{g}: the torus oracle covers groups of Lie type only")))
}

/// Enumerates every maximal-torus order of `g`.
pub fn enumerate_torus_orders(g: &GroupSpec, budget: Budget) -> Result<TorusCensus> {
    let lie = lie_of(g)?;
    let list = descriptors(lie)?;
    if list.len() as u64 > budget.steps() {
        return Err(Error::BudgetExceeded { budget: budget.steps() });
    }
    let orders = list
        .into_iter()
        .map(|descriptor| Ok(TorusOrder { value: descriptor.evaluate(lie)?, descriptor }))
        .collect::<Result<Vec<_>>>()?;
    Ok(TorusCensus { group: g.clone(), orders })
}

fn check_pair(g: &GroupSpec, r: &BigUint, s: &BigUint) -> Result<()> {
    let lie = lie_of(g)?;
    let p = BigUint::from(lie.p());
    if r == &p || s == &p {
        return Err(Error::CharacteristicNotSupported(format!(
            "{g}: the torus oracle does not decide adjacency with the characteristic {p}"
        )));
    }
    if r == s {
        return Err(Error::Domain(format!("adjacency needs two distinct primes, got {r} twice")));
    }
    Ok(())
}

/// True iff some maximal torus of `g` has order divisible by r and s.
pub fn oracle_adjacent(g: &GroupSpec, r: &BigUint, s: &BigUint, budget: Budget) -> Result<bool> {
    check_pair(g, r, s)?;
    let census = enumerate_torus_orders(g, budget)?;
    let primes = crate::groups::prime_set(g, budget)?;
    for x in [r, s] {
        if primes.binary_search(x).is_err() {
            return Err(Error::VertexNotInGroup { group: g.to_string(), prime: x.to_string() });
        }
    }
    Ok(census.witness(r, s).is_some())
}

/// A pair on which the oracle and the criteria disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub r: BigUint,
    pub s: BigUint,
    pub oracle: bool,
    /// The torus that makes r and s adjacent, if any.
    pub oracle_witness: Option<Descriptor>,
    pub criteria: bool,
    pub criteria_tag: CriterionTag,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.oracle_witness.as_ref().map_or("no torus".to_string(), |d| d.to_string());
        write!(
            f,
            "({}, {}): oracle {} [{}], criteria {} [{}]",
            self.r, self.s, self.oracle, w, self.criteria, self.criteria_tag
        )
    }
}

/// Result of comparing the oracle with the criteria on one group.
#[derive(Debug, Clone)]
pub struct CrossReport {
    pub group: GroupSpec,
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Compares oracle and criteria on every pair of primes other than p.
pub fn cross_validate(g: &GroupSpec, budget: Budget) -> Result<CrossReport> {
    let lie = lie_of(g)?;
    let census = enumerate_torus_orders(g, budget)?;
    let ctx = GraphContext::new(g, budget)?;
    let p = BigUint::from(lie.p());
    let primes: Vec<&BigUint> = ctx.primes().iter().filter(|r| **r != p).collect();
    let mut mismatches = Vec::new();
    let mut pairs_checked = 0;
    for (i, r) in primes.iter().enumerate() {
        for s in &primes[i + 1..] {
            pairs_checked += 1;
            let witness = census.witness(r, s);
            let d = ctx.adjacent(r, s)?;
            if witness.is_some() != d.adjacent {
                mismatches.push(Mismatch {
                    r: (*r).clone(),
                    s: (*s).clone(),
                    oracle: witness.is_some(),
                    oracle_witness: witness.map(|w| w.descriptor.clone()),
                    criteria: d.adjacent,
                    criteria_tag: d.tag,
                });
            }
        }
    }
    Ok(CrossReport { group: g.clone(), pairs_checked, mismatches })
}

/// One census row with its factorization.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub descriptor: String,
    pub value: String,
    pub factorization: String,
}

/// Census rows with factorized values, in enumeration order.
pub fn census_rows(census: &TorusCensus, budget: Budget) -> Result<Vec<CensusRow>> {
    census
        .orders
        .iter()
        .map(|o| {
            Ok(CensusRow {
                descriptor: o.descriptor.to_string(),
                value: o.value.to_string(),
                factorization: render_factorization(&factorize(&o.value, budget)?),
            })
        })
        .collect()
}

/// "2^3*5" style rendering; "1" for the empty product.
pub fn render_factorization(f: &Factorization) -> String {
    if f.factors().is_empty() {
        return "1".into();
    }
    f.factors()
        .iter()
        .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Checks that every torus order divides |G|.
pub fn orders_divide_group_order(census: &TorusCensus, budget: Budget) -> Result<bool> {
    let order = group_order(&census.group, budget)?.value;
    Ok(census.orders.iter().all(|o| (&order % &o.value).is_zero()))
}

/// Field orders of the standard oracle envelope.
pub const ENVELOPE_Q: [u64; 14] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27];

/// Simple classical groups of rank 1..=max_rank over the given fields.
/// Parameter combinations that are not simple are skipped.
pub fn classical_envelope(max_rank: u32, qs: &[u64]) -> Vec<GroupSpec> {
    let classical = [LieSeries::A, LieSeries::TwistedA, LieSeries::B, LieSeries::C, LieSeries::D, LieSeries::TwistedD];
    let mut out = Vec::new();
    for series in classical {
        for rank in 1..=max_rank {
            for &q in qs {
                if let Ok(g) = GroupSpec::lie(series, rank, q) {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// The standard oracle envelope: classical groups of rank at most 6 over
/// [`ENVELOPE_Q`], G2, 3D4 and F4 over q <= 9, and the Suzuki and Ree groups
/// 2B2(8), 2B2(32), 2G2(27), 2F4(8).
pub fn oracle_envelope() -> Vec<GroupSpec> {
    let mut out = classical_envelope(6, &ENVELOPE_Q);
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for series in [LieSeries::G2, LieSeries::TrialityD4, LieSeries::F4] {
            if let Ok(g) = GroupSpec::lie(series, series.fixed_rank().unwrap_or(0), q) {
                out.push(g);
            }
        }
    }
    for (series, q) in [(LieSeries::Suzuki, 8), (LieSeries::Suzuki, 32), (LieSeries::ReeG2, 27), (LieSeries::ReeF4, 8)]
    {
        out.extend(GroupSpec::lie(series, series.fixed_rank().unwrap_or(0), q));
    }
    out
}
