//! Finite nonabelian simple groups: descriptors, orders and vertex sets.

mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{
    cyclotomic_indices_minus, cyclotomic_indices_plus, cyclotomic_value, factorize, sieve, Budget, Factorization,
    SignEps,
};
use crate::error::{Error, Result};
use crate::refdata;

pub use parse::parse_spec;

/// The 26 sporadic groups and the Tits group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    M23,
    M24,
    J1,
    J2,
    J3,
    J4,
    Ru,
    He,
    McL,
    HN,
    HS,
    Suz,
    Co1,
    Co2,
    Co3,
    Fi22,
    Fi23,
    Fi24,
    ON,
    Ly,
    Th,
    B,
    M,
    Tits,
}

impl Sporadic {
    pub const ALL: [Sporadic; 27] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::M22,
        Sporadic::M23,
        Sporadic::M24,
        Sporadic::J1,
        Sporadic::J2,
        Sporadic::J3,
        Sporadic::J4,
        Sporadic::Ru,
        Sporadic::He,
        Sporadic::McL,
        Sporadic::HN,
        Sporadic::HS,
        Sporadic::Suz,
        Sporadic::Co1,
        Sporadic::Co2,
        Sporadic::Co3,
        Sporadic::Fi22,
        Sporadic::Fi23,
        Sporadic::Fi24,
        Sporadic::ON,
        Sporadic::Ly,
        Sporadic::Th,
        Sporadic::B,
        Sporadic::M,
        Sporadic::Tits,
    ];

    /// Canonical name, also the key in the sporadic data file.
    pub fn name(self) -> &'static str {
        match self {
            Sporadic::M11 => "M11",
            Sporadic::M12 => "M12",
            Sporadic::M22 => "M22",
            Sporadic::M23 => "M23",
            Sporadic::M24 => "M24",
            Sporadic::J1 => "J1",
            Sporadic::J2 => "J2",
            Sporadic::J3 => "J3",
            Sporadic::J4 => "J4",
            Sporadic::Ru => "Ru",
            Sporadic::He => "He",
            Sporadic::McL => "McL",
            Sporadic::HN => "HN",
            Sporadic::HS => "HS",
            Sporadic::Suz => "Suz",
            Sporadic::Co1 => "Co1",
            Sporadic::Co2 => "Co2",
            Sporadic::Co3 => "Co3",
            Sporadic::Fi22 => "Fi22",
            Sporadic::Fi23 => "Fi23",
            Sporadic::Fi24 => "Fi24'",
            Sporadic::ON => "O'N",
            Sporadic::Ly => "Ly",
            Sporadic::Th => "Th",
            Sporadic::B => "B",
            Sporadic::M => "M",
            Sporadic::Tits => "2F4(2)'",
        }
    }

    /// Accepts the canonical name and common aliases, ignoring case.
    pub fn from_name(text: &str) -> Option<Sporadic> {
        let key: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        let found = match key.as_str() {
            "hs" | "his" => Sporadic::HS,
            "ly" | "lys" => Sporadic::Ly,
            "hn" | "f5" => Sporadic::HN,
            "th" | "f3" => Sporadic::Th,
            "b" | "f2" | "bm" => Sporadic::B,
            "m" | "f1" => Sporadic::M,
            "fi24" | "fi24'" => Sporadic::Fi24,
            "on" | "o'n" => Sporadic::ON,
            "tits" | "2f4(2)'" | "^2f4(2)'" => Sporadic::Tits,
            _ => return Sporadic::ALL.into_iter().find(|s| s.name().to_ascii_lowercase() == key),
        };
        Some(found)
    }
}

/// Families of groups of Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieSeries {
    A,
    TwistedA,
    B,
    C,
    D,
    TwistedD,
    E6,
    TwistedE6,
    E7,
    E8,
    F4,
    G2,
    TrialityD4,
    Suzuki,
    ReeG2,
    ReeF4,
}

impl LieSeries {
    pub const ALL: [LieSeries; 16] = [
        LieSeries::A,
        LieSeries::TwistedA,
        LieSeries::B,
        LieSeries::C,
        LieSeries::D,
        LieSeries::TwistedD,
        LieSeries::E6,
        LieSeries::TwistedE6,
        LieSeries::E7,
        LieSeries::E8,
        LieSeries::F4,
        LieSeries::G2,
        LieSeries::TrialityD4,
        LieSeries::Suzuki,
        LieSeries::ReeG2,
        LieSeries::ReeF4,
    ];

    /// Family label without rank, e.g. "2A" or "3D".
    pub fn label(self) -> &'static str {
        match self {
            LieSeries::A => "A",
            LieSeries::TwistedA => "2A",
            LieSeries::B => "B",
            LieSeries::C => "C",
            LieSeries::D => "D",
            LieSeries::TwistedD => "2D",
            LieSeries::E6 | LieSeries::E7 | LieSeries::E8 => "E",
            LieSeries::TwistedE6 => "2E",
            LieSeries::F4 => "F",
            LieSeries::G2 => "G",
            LieSeries::TrialityD4 => "3D",
            LieSeries::Suzuki => "2B",
            LieSeries::ReeG2 => "2G",
            LieSeries::ReeF4 => "2F",
        }
    }

    /// Family key used by the table data, e.g. "2A", "E6", "2B2".
    pub fn key(self) -> &'static str {
        match self {
            LieSeries::A => "A",
            LieSeries::TwistedA => "2A",
            LieSeries::B => "B",
            LieSeries::C => "C",
            LieSeries::D => "D",
            LieSeries::TwistedD => "2D",
            LieSeries::E6 => "E6",
            LieSeries::TwistedE6 => "2E6",
            LieSeries::E7 => "E7",
            LieSeries::E8 => "E8",
            LieSeries::F4 => "F4",
            LieSeries::G2 => "G2",
            LieSeries::TrialityD4 => "3D4",
            LieSeries::Suzuki => "2B2",
            LieSeries::ReeG2 => "2G2",
            LieSeries::ReeF4 => "2F4",
        }
    }

    pub fn from_key(key: &str) -> Option<LieSeries> {
        LieSeries::ALL.into_iter().find(|s| s.key() == key)
    }

    /// Rank fixed by the family name, if any.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            LieSeries::E6 | LieSeries::TwistedE6 => Some(6),
            LieSeries::E7 => Some(7),
            LieSeries::E8 => Some(8),
            LieSeries::F4 | LieSeries::TrialityD4 | LieSeries::ReeF4 => Some(4),
            LieSeries::G2 | LieSeries::Suzuki | LieSeries::ReeG2 => Some(2),
            _ => None,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            LieSeries::A | LieSeries::TwistedA | LieSeries::B | LieSeries::C | LieSeries::D | LieSeries::TwistedD
        )
    }

    pub fn is_suzuki_ree(self) -> bool {
        matches!(self, LieSeries::Suzuki | LieSeries::ReeG2 | LieSeries::ReeF4)
    }

    /// The sign ε for the families written X^ε.
    pub fn eps(self) -> SignEps {
        match self {
            LieSeries::TwistedA | LieSeries::TwistedD | LieSeries::TwistedE6 => SignEps::Minus,
            _ => SignEps::Plus,
        }
    }
}

/// A validated simple group of Lie type over GF(q), q = p^f.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieGroup {
    series: LieSeries,
    rank: u32,
    q: u64,
    p: u64,
    f: u32,
}

impl LieGroup {
    /// Validates rank bounds, the field and the exclusions of non-simple cases.
    pub fn new(series: LieSeries, rank: u32, q: u64) -> Result<LieGroup> {
        let label = format!("{}{}({})", series.label(), rank, q);
        if q < 2 {
            return Err(Error::Domain(format!("{label}: q must be a prime power >= 2")));
        }
        let fac = factorize(&BigUint::from(q), Budget::default())?;
        if fac.factors().len() != 1 {
            return Err(Error::Domain(format!("{label}: q = {q} is not a prime power")));
        }
        let (p, f) = fac.factors().iter().next().map(|(p, e)| (p.to_u64().unwrap(), *e)).unwrap();
        if let Some(fixed) = series.fixed_rank() {
            if rank != fixed {
                return Err(Error::Domain(format!("{label}: family {} has rank {fixed}", series.key())));
            }
        }
        let min_rank = match series {
            LieSeries::A => 1,
            LieSeries::TwistedA | LieSeries::B | LieSeries::C => 2,
            LieSeries::D | LieSeries::TwistedD => 4,
            _ => rank,
        };
        if rank < min_rank {
            return Err(Error::Domain(format!("{label}: rank must be at least {min_rank}")));
        }
        let soluble = "group is soluble";
        let not_simple = |reason: &'static str| Err(Error::NotSimple { group: label.clone(), reason });
        match series {
            LieSeries::Suzuki | LieSeries::ReeF4 if p != 2 || f % 2 == 0 => {
                return Err(Error::Domain(format!("{label}: q must be an odd power of 2")))
            }
            LieSeries::ReeG2 if p != 3 || f % 2 == 0 => {
                return Err(Error::Domain(format!("{label}: q must be an odd power of 3")))
            }
            LieSeries::A if rank == 1 && q <= 3 => return not_simple(soluble),
            LieSeries::B | LieSeries::C if rank == 2 && q == 2 => return not_simple("B2(2) is isomorphic to Sym(6)"),
            LieSeries::G2 if q == 2 => return not_simple("[G2(2),G2(2)] is isomorphic to 2A2(3)"),
            LieSeries::TwistedA if rank == 2 && q == 2 => return not_simple(soluble),
            LieSeries::Suzuki if q == 2 => return not_simple(soluble),
            LieSeries::ReeG2 if q == 3 => return not_simple("[2G2(3),2G2(3)] is isomorphic to A1(8)"),
            LieSeries::ReeF4 if q == 2 => {
                return not_simple("[2F4(2),2F4(2)] = 2F4(2)' is the Tits group; write 2F4(2)'")
            }
            _ => {}
        }
        Ok(LieGroup { series, rank, q, p, f })
    }

    pub fn series(&self) -> LieSeries {
        self.series
    }

    /// Subscript of the family name (A5 -> 5, 2B2 -> 2).
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_big(&self) -> BigUint {
        BigUint::from(self.q)
    }

    /// The characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// The parameter n used throughout the tables: the dimension n for
    /// A_{n-1} and 2A_{n-1}, the rank for B, C, D and exceptional groups, and
    /// the n of q = p^(2n+1) for Suzuki and Ree groups.
    pub fn n(&self) -> u32 {
        match self.series {
            LieSeries::A | LieSeries::TwistedA => self.rank + 1,
            LieSeries::Suzuki | LieSeries::ReeG2 | LieSeries::ReeF4 => (self.f - 1) / 2,
            _ => self.rank,
        }
    }

    /// Factors q^d - sign of the order polynomial, as (d, sign) pairs with
    /// sign -1 for q^d - 1 and +1 for q^d + 1. The 3D4 factor q^8 + q^4 + 1
    /// is handled separately.
    fn polynomial_factors(&self) -> Vec<(u64, i32)> {
        let n = self.n() as u64;
        let minus = |ds: &[u64]| ds.iter().map(|&d| (d, -1)).collect::<Vec<_>>();
        match self.series {
            LieSeries::A => (2..=n).map(|i| (i, -1)).collect(),
            LieSeries::TwistedA => (2..=n).map(|i| (i, if i % 2 == 0 { -1 } else { 1 })).collect(),
            LieSeries::B | LieSeries::C => (1..=n).map(|i| (2 * i, -1)).collect(),
            LieSeries::D | LieSeries::TwistedD => {
                let sign = if self.series == LieSeries::D { -1 } else { 1 };
                let mut v = vec![(n, sign)];
                v.extend((1..n).map(|i| (2 * i, -1)));
                v
            }
            LieSeries::G2 => minus(&[6, 2]),
            LieSeries::F4 => minus(&[12, 8, 6, 2]),
            LieSeries::E6 => minus(&[12, 9, 8, 6, 5, 2]),
            LieSeries::TwistedE6 => vec![(12, -1), (9, 1), (8, -1), (6, -1), (5, 1), (2, -1)],
            LieSeries::E7 => minus(&[2, 6, 8, 10, 12, 14, 18]),
            LieSeries::E8 => minus(&[2, 8, 12, 14, 18, 20, 24, 30]),
            LieSeries::TrialityD4 => minus(&[6, 2]),
            LieSeries::Suzuki => vec![(2, 1), (1, -1)],
            LieSeries::ReeG2 => vec![(3, 1), (1, -1)],
            LieSeries::ReeF4 => vec![(6, 1), (4, -1), (3, 1), (1, -1)],
        }
    }

    /// Exponent N in |G| = q^N f(q).
    pub fn q_exponent(&self) -> u64 {
        let n = self.n() as u64;
        match self.series {
            LieSeries::A | LieSeries::TwistedA => n * (n - 1) / 2,
            LieSeries::B | LieSeries::C => n * n,
            LieSeries::D | LieSeries::TwistedD => n * (n - 1),
            LieSeries::G2 => 6,
            LieSeries::F4 => 24,
            LieSeries::E6 | LieSeries::TwistedE6 => 36,
            LieSeries::E7 => 63,
            LieSeries::E8 => 120,
            LieSeries::TrialityD4 => 12,
            LieSeries::Suzuki => 2,
            LieSeries::ReeG2 => 3,
            LieSeries::ReeF4 => 12,
        }
    }

    /// Multiplicities a_m with f(q) = ∏ Φ_m(q)^{a_m} / d.
    pub fn cyclotomic_exponents(&self) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        for (d, sign) in self.polynomial_factors() {
            let ms = if sign < 0 { cyclotomic_indices_minus(d) } else { cyclotomic_indices_plus(d) };
            for m in ms {
                *out.entry(m).or_insert(0) += 1;
            }
        }
        if self.series == LieSeries::TrialityD4 {
            for m in [3, 6, 12] {
                *out.entry(m).or_insert(0) += 1;
            }
        }
        out
    }

    /// The divisor d in |G| = q^N f(q) / d.
    pub fn center_divisor(&self) -> u64 {
        let q = self.q_big();
        let n = self.n() as u64;
        let g = |a: u64, b: BigUint| a.gcd(&(b % a).to_u64().unwrap());
        let qn = num_traits::pow(q.clone(), n as usize);
        match self.series {
            LieSeries::A => g(n, &q - 1u32),
            LieSeries::TwistedA => g(n, &q + 1u32),
            LieSeries::B | LieSeries::C | LieSeries::E7 => g(2, &q - 1u32),
            LieSeries::D => g(4, qn - 1u32),
            LieSeries::TwistedD => g(4, qn + 1u32),
            LieSeries::E6 => g(3, &q - 1u32),
            LieSeries::TwistedE6 => g(3, &q + 1u32),
            _ => 1,
        }
    }

    /// Largest m with Φ_m(q) dividing the order polynomial; bounds e(r, q)
    /// for every r in π(G) other than p.
    pub fn max_e_order(&self) -> u64 {
        *self.cyclotomic_exponents().keys().max().unwrap()
    }
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}({})", self.series.label(), self.rank, self.q)
    }
}

/// A finite nonabelian simple group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Alternating(u32),
    Sporadic(Sporadic),
    Lie(LieGroup),
}

impl GroupSpec {
    pub fn alternating(n: u32) -> Result<GroupSpec> {
        if n < 5 {
            return Err(Error::NotSimple {
                group: format!("Alt({n})"),
                reason: "alternating groups of degree below 5 are soluble",
            });
        }
        Ok(GroupSpec::Alternating(n))
    }

    pub fn lie(series: LieSeries, rank: u32, q: u64) -> Result<GroupSpec> {
        LieGroup::new(series, rank, q).map(GroupSpec::Lie)
    }

    pub fn as_lie(&self) -> Option<&LieGroup> {
        match self {
            GroupSpec::Lie(g) => Some(g),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Alternating(n) => write!(f, "Alt({n})"),
            GroupSpec::Sporadic(s) => f.write_str(s.name()),
            GroupSpec::Lie(g) => g.fmt(f),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        parse_spec(s)
    }
}

/// |G| with its factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOrder {
    pub value: BigUint,
    pub prime_support: Factorization,
}

fn factorial_half(n: u32) -> Factorization {
    let mut factors = BTreeMap::new();
    for p in sieve(n) {
        let mut e = 0;
        let mut pk = p as u64;
        while pk <= n as u64 {
            e += n as u64 / pk;
            pk *= p as u64;
        }
        if p == 2 {
            e -= 1;
        }
        factors.insert(BigUint::from(p), e as u32);
    }
    Factorization::from_prime_powers(factors)
}

/// The exact order of `g` with its factorization.
pub fn group_order(g: &GroupSpec, budget: Budget) -> Result<GroupOrder> {
    let fac = match g {
        GroupSpec::Alternating(n) => factorial_half(*n),
        GroupSpec::Sporadic(s) => refdata::lookup_sporadic(s.name())?.order.clone(),
        GroupSpec::Lie(l) => {
            let q = l.q_big();
            let mut fac = Factorization::from_prime_powers(BTreeMap::from([(
                BigUint::from(l.p()),
                (l.q_exponent() * l.f() as u64) as u32,
            )]));
            for (m, a) in l.cyclotomic_exponents() {
                fac = fac.mul(&factorize(&cyclotomic_value(m, &q), budget)?.pow(a));
            }
            let d = factorize(&BigUint::from(l.center_divisor()), budget)?;
            fac.div(&d).expect("center divisor divides the order")
        }
    };
    Ok(GroupOrder { value: fac.subject().clone(), prime_support: fac })
}

/// π(G) in ascending order.
pub fn prime_set(g: &GroupSpec, budget: Budget) -> Result<Vec<BigUint>> {
    Ok(group_order(g, budget)?.prime_support.primes().cloned().collect())
}

/// Cached data about a Lie group needed by the criteria: e(r, q) for every
/// vertex other than p.
#[derive(Debug, Clone)]
pub struct LieContext {
    pub group: LieGroup,
    pub primes: Vec<BigUint>,
    pub e: BTreeMap<BigUint, u64>,
}

impl LieContext {
    pub fn new(group: &LieGroup, budget: Budget) -> Result<LieContext> {
        let primes = prime_set(&GroupSpec::Lie(group.clone()), budget)?;
        let q = group.q_big();
        let p = BigUint::from(group.p());
        let mut e = BTreeMap::new();
        for r in &primes {
            if r != &p {
                e.insert(r.clone(), crate::arith::e_order_with_budget(r, &q, budget)?);
            }
        }
        Ok(LieContext { group: group.clone(), primes, e })
    }

    pub fn e(&self, r: &BigUint) -> u64 {
        self.e[r]
    }
}
