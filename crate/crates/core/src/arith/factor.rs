//! Integer factorization: trial division, Miller-Rabin, Brent's variant of
//! Pollard rho. Everything is deterministic; the effort spent on a single
//! factorization is capped by a [`Budget`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Effort limit for one factorization, counted in elimination steps
/// (one trial division or one rho iteration each).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    steps: u64,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 50_000_000;

    pub const fn new(steps: u64) -> Self {
        Budget { steps }
    }

    pub const fn unlimited() -> Self {
        Budget { steps: u64::MAX }
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_STEPS)
    }
}

struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        Meter { limit: budget.steps, used: 0 }
    }

    fn tick(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// A complete prime factorization of `subject`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    subject: BigUint,
    factors: BTreeMap<BigUint, u32>,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization { subject: BigUint::one(), factors: BTreeMap::new() }
    }

    /// Builds a factorization from prime powers. Primality of the keys is the
    /// caller's responsibility and is checked in debug builds.
    pub fn from_prime_powers(factors: BTreeMap<BigUint, u32>) -> Self {
        let mut subject = BigUint::one();
        let mut clean = BTreeMap::new();
        for (p, e) in factors {
            if e == 0 {
                continue;
            }
            debug_assert!(is_prime(&p), "{p} is not prime");
            subject *= num_traits::pow(p.clone(), e as usize);
            clean.insert(p, e);
        }
        Factorization { subject, factors: clean }
    }

    pub fn subject(&self) -> &BigUint {
        &self.subject
    }

    pub fn factors(&self) -> &BTreeMap<BigUint, u32> {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.keys()
    }

    pub fn exponent(&self, p: &BigUint) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    /// Product of two factorizations.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            *factors.entry(p.clone()).or_insert(0) += e;
        }
        Factorization { subject: &self.subject * &other.subject, factors }
    }

    /// Raises every exponent by the factor `k`.
    pub fn pow(&self, k: u32) -> Factorization {
        let factors = self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect();
        Factorization { subject: num_traits::pow(self.subject.clone(), k as usize), factors }
    }

    /// Exact quotient by `other`; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Factorization) -> Option<Factorization> {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            let slot = factors.get_mut(p)?;
            if *slot < *e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                factors.remove(p);
            }
        }
        Some(Factorization { subject: &self.subject / &other.subject, factors })
    }
}

const TRIAL_LIMIT: u32 = 1 << 12;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(TRIAL_LIMIT))
}

/// Primes up to and including `limit`.
pub fn sieve(limit: u32) -> Vec<u32> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

const MR_BASES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Witnesses used above 2^64: the first 24 primes. The first twelve alone are
/// already a proof below 3.3 * 10^24.
const MR_BASES_BIG: [u32; 24] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES_64 {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES_64 {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test: deterministic below 2^64, Miller-Rabin with the fixed
/// witness set [`MR_BASES_BIG`] above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    for &p in small_primes().iter().take(64) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &MR_BASES_BIG {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64, c: u64, meter: &mut Meter) -> Result<Option<u64>> {
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let m = 128u64;
    let (mut y, mut x, mut ys) = (2u64, 2u64, 2u64);
    let mut g = 1u64;
    let mut r = 1u64;
    let mut q = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        meter.tick(r)?;
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let lim = m.min(r - k);
            for _ in 0..lim {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            meter.tick(lim)?;
            g = q.gcd(&n);
            k += m;
        }
        r <<= 1;
    }
    if g == n {
        loop {
            ys = f(ys);
            meter.tick(1)?;
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    Ok(if g == n { None } else { Some(g) })
}

fn rho_big(n: &BigUint, c: u64, meter: &mut Meter) -> Result<Option<BigUint>> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let m = 128u64;
    let two = BigUint::from(2u32);
    let (mut y, mut x, mut ys) = (two.clone(), two.clone(), two);
    let mut g = BigUint::one();
    let mut r = 1u64;
    let mut q = BigUint::one();
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        meter.tick(r)?;
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let lim = m.min(r - k);
            for _ in 0..lim {
                y = f(&y);
                q = q * diff(&x, &y) % n;
            }
            meter.tick(lim)?;
            g = q.gcd(n);
            k += m;
        }
        r <<= 1;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            meter.tick(1)?;
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    Ok(if &g == n { None } else { Some(g) })
}

/// Returns `(root, k)` with `root^k == n` and `k` maximal.
fn perfect_power(n: &BigUint) -> (BigUint, u32) {
    let bits = n.bits() as u32;
    for k in (2..=bits.max(2)).rev() {
        let root = n.nth_root(k);
        if root > BigUint::one() && &num_traits::pow(root.clone(), k as usize) == n {
            return (root, k);
        }
    }
    (n.clone(), 1)
}

/// A nontrivial divisor of the composite `n`.
fn split(n: &BigUint, meter: &mut Meter) -> Result<BigUint> {
    let (root, k) = perfect_power(n);
    if k > 1 {
        return Ok(root);
    }
    for c in 1u64.. {
        let found = match n.to_u64() {
            Some(small) => rho_u64(small, c, meter)?.map(BigUint::from),
            None => rho_big(n, c, meter)?,
        };
        if let Some(d) = found {
            return Ok(d);
        }
    }
    unreachable!()
}

/// Complete factorization of `n >= 1` within `budget` steps.
pub fn factorize(n: &BigUint, budget: Budget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::Domain("cannot factor 0".into()));
    }
    let mut meter = Meter::new(budget);
    let mut factors: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        meter.tick(1)?;
        while (&rest % p).is_zero() {
            rest /= p;
            *factors.entry(pb.clone()).or_insert(0) += 1;
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *factors.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = split(&m, &mut meter)?;
        let (a, b) = (m.clone() / &d, d);
        // Keep shared factors apart so both halves shrink.
        let g = a.gcd(&b);
        if g.is_one() {
            stack.push(a);
            stack.push(b);
        } else {
            stack.push(g.clone());
            stack.push(m / g);
        }
    }
    Ok(Factorization { subject: n.clone(), factors })
}

/// Convenience wrapper for machine integers.
pub fn factorize_u64(n: u64, budget: Budget) -> Result<Factorization> {
    factorize(&BigUint::from(n), budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64) -> Vec<(u64, u32)> {
        factorize_u64(n, Budget::default()).unwrap().factors().iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect()
    }

    #[test]
    fn small_cases() {
        assert!(f(1).is_empty());
        assert_eq!(f(48), vec![(2, 4), (3, 1)]);
        assert_eq!(f((1 << 29) - 1), vec![(233, 1), (1103, 1), (2089, 1)]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(factorize(&BigUint::zero(), Budget::default()).is_err());
    }

    #[test]
    fn semiprimes_and_powers() {
        assert_eq!(f(1_000_003 * 1_000_033), vec![(1_000_003, 1), (1_000_033, 1)]);
        assert_eq!(f(4_294_967_291u64 * 3), vec![(3, 1), (4_294_967_291, 1)]);
        let p = 1_000_003u64;
        assert_eq!(f(p * p * p), vec![(p, 3)]);
    }

    #[test]
    fn big_numbers() {
        let n = (BigUint::one() << 67u32) - 1u32;
        let fac = factorize(&n, Budget::default()).unwrap();
        let ps: Vec<String> = fac.primes().map(|p| p.to_string()).collect();
        assert_eq!(ps, vec!["193707721", "761838257287"]);
        let n = (BigUint::one() << 128u32) + 1u32;
        let m = &n * 65537u32 * 65537u32;
        assert!(factorize(&m, Budget::new(100_000)).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let n = BigUint::from(1_000_003u64 * 1_000_033);
        assert_eq!(factorize(&n, Budget::new(10)), Err(Error::BudgetExceeded { budget: 10 }));
    }

    #[test]
    fn primality_matches_sieve() {
        let primes = sieve(20_000);
        let set: std::collections::HashSet<u64> = primes.iter().map(|&p| p as u64).collect();
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), set.contains(&n), "{n}");
        }
        // Strong pseudoprime to bases 2..=37 would be > 3.3e24; check a
        // Carmichael number and a large prime instead.
        assert!(!is_prime_u64(3_215_031_751));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(is_prime(&((BigUint::one() << 127u32) - 1u32)));
        assert!(!is_prime(&((BigUint::one() << 128u32) + 1u32)));
    }
}
