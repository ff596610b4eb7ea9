//! Exact integer arithmetic used by the adjacency criteria.

mod factor;

pub use factor::{factorize, factorize_u64, is_prime, is_prime_u64, sieve, Budget, Factorization};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Unsigned, Zero};

use crate::error::{Error, Result};

/// Unsigned integer types the generic helpers accept.
pub trait Natural: Integer + Unsigned + Clone + FromPrimitive + ToPrimitive {}

impl<T: Integer + Unsigned + Clone + FromPrimitive + ToPrimitive> Natural for T {}

/// The sign ε of a twisted family: `Plus` is untwisted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignEps {
    Plus,
    Minus,
}

impl SignEps {
    pub fn value(self) -> i64 {
        match self {
            SignEps::Plus => 1,
            SignEps::Minus => -1,
        }
    }
}

/// The r-part n_r: the largest power of `r` dividing `n`.
pub fn prime_part<T: Natural>(n: &T, r: &T) -> T {
    let mut rest = n.clone();
    let mut part = T::one();
    if n.is_zero() || r <= &T::one() {
        return part;
    }
    while rest.is_multiple_of(r) {
        rest = rest / r.clone();
        part = part * r.clone();
    }
    part
}

/// The π-part of `n`: the largest divisor of `n` whose prime divisors lie in `pi`.
pub fn pi_part<'a, T: Natural + 'a>(n: &T, pi: impl IntoIterator<Item = &'a T>) -> T {
    pi.into_iter().fold(T::one(), |acc, r| acc * prime_part(n, r))
}

/// `base^exp mod m` by square-and-multiply.
pub fn mod_pow<T: Natural>(base: &T, exp: &T, m: &T) -> T {
    let two = T::from_u8(2).unwrap();
    let mut result = T::one() % m.clone();
    let mut b = base.clone() % m.clone();
    let mut e = exp.clone();
    while !e.is_zero() {
        if e.is_odd() {
            result = result * b.clone() % m.clone();
        }
        b = b.clone() * b % m.clone();
        e = e / two.clone();
    }
    result
}

/// True when `n = 2^k` for some `k >= 1`.
pub fn is_power_of_two<T: Natural>(n: &T) -> bool {
    let two = T::from_u8(2).unwrap();
    n > &T::one() && prime_part(n, &two) == *n
}

/// ν(m): m if 4 | m, m/2 if m ≡ 2 (mod 4), 2m if m is odd.
pub fn nu(m: u64) -> u64 {
    assert!(m >= 1, "nu is defined on positive integers");
    match m % 4 {
        0 => m,
        2 => m / 2,
        _ => 2 * m,
    }
}

/// η(m): m if m is odd, m/2 otherwise.
pub fn eta(m: u64) -> u64 {
    assert!(m >= 1, "eta is defined on positive integers");
    if m % 2 == 1 {
        m
    } else {
        m / 2
    }
}

/// ν_ε: the identity for ε = +, ν for ε = −.
pub fn nu_eps(eps: SignEps, m: u64) -> u64 {
    match eps {
        SignEps::Plus => m,
        SignEps::Minus => nu(m),
    }
}

/// Inverse of [`nu_eps`].
pub fn nu_eps_inverse(eps: SignEps, m: u64) -> u64 {
    assert!(m >= 1, "nu_eps_inverse is defined on positive integers");
    match eps {
        SignEps::Plus => m,
        SignEps::Minus => match m % 4 {
            0 => m,
            2 => m / 2,
            _ => 2 * m,
        },
    }
}

/// e(r, q): the multiplicative order of q modulo the odd prime r; for r = 2
/// it is 1 when q ≡ 1 (mod 4) and 2 otherwise.
pub fn e_order(r: &BigUint, q: &BigUint) -> Result<u64> {
    e_order_with_budget(r, q, Budget::default())
}

/// [`e_order`] with an explicit budget for factoring r − 1.
pub fn e_order_with_budget(r: &BigUint, q: &BigUint, budget: Budget) -> Result<u64> {
    if q < &BigUint::from(2u32) {
        return Err(Error::Domain(format!("e(r,q) needs q >= 2, got {q}")));
    }
    if !is_prime(r) {
        return Err(Error::Domain(format!("e(r,q) needs a prime r, got {r}")));
    }
    if (q % r).is_zero() {
        return Err(Error::Domain(format!("e({r},{q}) is undefined: {r} divides {q}")));
    }
    if r == &BigUint::from(2u32) {
        return Ok(if (q % 4u32) == BigUint::one() { 1 } else { 2 });
    }
    let r1 = r - 1u32;
    let mut order = r1.clone();
    for p in factorize(&r1, budget)?.primes() {
        while order.is_multiple_of(p) && (q.modpow(&(&order / p), r)).is_one() {
            order /= p;
        }
    }
    order.to_u64().ok_or_else(|| Error::Domain(format!("e({r},{q}) does not fit in 64 bits")))
}

/// Möbius function.
pub fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The cyclotomic value Φ_m(q), computed as ∏_{d | m} (q^d − 1)^{μ(m/d)}.
pub fn cyclotomic_value(m: u64, q: &BigUint) -> BigUint {
    assert!(m >= 1);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in divisors(m) {
        let term = num_traits::pow(q.clone(), d as usize) - 1u32;
        match mobius(m / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Indices m with q^d − 1 = ∏ Φ_m(q).
pub fn cyclotomic_indices_minus(d: u64) -> Vec<u64> {
    divisors(d)
}

/// Indices m with q^d + 1 = ∏ Φ_m(q).
pub fn cyclotomic_indices_plus(d: u64) -> Vec<u64> {
    divisors(2 * d).into_iter().filter(|m| !d.is_multiple_of(*m)).collect()
}

/// Zsigmondy existence: a prime r with e(r,q) = m exists unless
/// (q, m) is (2, 1), (3, 1) or (2, 6).
pub fn zsigmondy_exists(q: &BigUint, m: u64) -> bool {
    assert!(m >= 1 && q >= &BigUint::from(2u32));
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    !((q == &two && (m == 1 || m == 6)) || (q == &three && m == 1))
}

/// All primes r with e(r, q) = m.
pub fn primitive_prime_divisors(q: &BigUint, m: u64, budget: Budget) -> Result<Vec<BigUint>> {
    if q < &BigUint::from(2u32) || m == 0 {
        return Err(Error::Domain(format!("primitive divisors need q >= 2 and m >= 1 (q={q}, m={m})")));
    }
    let phi = cyclotomic_value(m, q);
    let fac = factorize(&phi, budget)?;
    let two = BigUint::from(2u32);
    let mut out = Vec::new();
    for r in fac.primes() {
        if (q % r).is_zero() {
            continue;
        }
        // An odd prime dividing Φ_m(q) but not m has order exactly m.
        let keep = if r == &two { e_order(r, q)? == m } else { !(BigUint::from(m) % r).is_zero() };
        if keep {
            out.push(r.clone());
        }
    }
    Ok(out)
}

/// The three Suzuki/Ree series of class numbers m_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuzukiReeSeries {
    B,
    G,
    F,
}

impl SuzukiReeSeries {
    /// Number of m_i defined for the series.
    pub fn count(self) -> u32 {
        match self {
            SuzukiReeSeries::B => 3,
            SuzukiReeSeries::G => 4,
            SuzukiReeSeries::F => 6,
        }
    }
}

/// The number m_i(series, n).
pub fn suzuki_ree_m(series: SuzukiReeSeries, n: u32, i: u32) -> Result<BigUint> {
    if i < 1 || i > series.count() {
        return Err(Error::Domain(format!("index {i} out of range for m_i({series:?}, n)")));
    }
    let pw = |base: u32, e: u32| BigInt::from(num_traits::pow(BigUint::from(base), e as usize));
    let one = BigInt::one();
    let value: BigInt = match series {
        SuzukiReeSeries::B => {
            let (a, b) = (pw(2, 2 * n + 1), pw(2, n + 1));
            match i {
                1 => a - one,
                2 => a - b + one,
                _ => a + b + one,
            }
        }
        SuzukiReeSeries::G => {
            let (a, b) = (pw(3, 2 * n + 1), pw(3, n + 1));
            match i {
                1 => a - one,
                2 => a + one,
                3 => a - b + one,
                _ => a + b + one,
            }
        }
        SuzukiReeSeries::F => {
            let (a1, a2) = (pw(2, 2 * n + 1), pw(2, 4 * n + 2));
            let (b1, b3) = (pw(2, n + 1), pw(2, 3 * n + 2));
            match i {
                1 => a1 - one,
                2 => a1 + one,
                3 => a2 + one,
                4 => a2 - a1 + one,
                5 => a2 - b3 + a1 - b1 + one,
                _ => a2 + b3 + a1 + b1 + one,
            }
        }
    };
    debug_assert!(value.is_positive());
    Ok(value.to_biguint().expect("m_i is positive"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn e_order_examples() {
        assert_eq!(e_order(&big(7), &big(2)).unwrap(), 3);
        assert_eq!(e_order(&big(2), &big(7)).unwrap(), 2);
        assert_eq!(e_order(&big(2), &big(5)).unwrap(), 1);
        assert_eq!(e_order(&big(13), &big(3)).unwrap(), 3);
        assert!(e_order(&big(3), &big(9)).is_err());
        assert!(e_order(&big(2), &big(4)).is_err());
    }

    #[test]
    fn e_order_matches_naive_powers() {
        for r in sieve(300).into_iter().skip(1) {
            for q in 2..60u64 {
                if q % r as u64 == 0 {
                    continue;
                }
                let mut x = q % r as u64;
                let mut k = 1;
                while x != 1 {
                    x = x * q % r as u64;
                    k += 1;
                }
                assert_eq!(e_order(&big(r as u64), &big(q)).unwrap(), k);
            }
        }
    }

    #[test]
    fn transforms() {
        assert_eq!(nu(4), 4);
        assert_eq!(nu(6), 3);
        assert_eq!(nu(5), 10);
        assert_eq!(eta(3), 3);
        assert_eq!(eta(4), 2);
        assert_eq!(eta(1), 1);
        assert_eq!(nu_eps(SignEps::Plus, 7), 7);
        assert_eq!(nu_eps(SignEps::Minus, 6), 3);
        assert_eq!(nu_eps_inverse(SignEps::Minus, 3), 6);
        for m in 1..=10_000 {
            for eps in [SignEps::Plus, SignEps::Minus] {
                assert_eq!(nu_eps(eps, nu_eps_inverse(eps, m)), m);
                assert_eq!(nu_eps_inverse(eps, nu_eps(eps, m)), m);
            }
        }
    }

    #[test]
    fn parts() {
        assert_eq!(prime_part(&48u64, &2), 16);
        assert_eq!(prime_part(&45u64, &2), 1);
        assert_eq!(pi_part(&720u64, &[2, 3]), 144);
        assert_eq!(pi_part(&big(720), &[big(2), big(3)]), big(144));
        assert!(is_power_of_two(&8u32));
        assert!(!is_power_of_two(&1u32));
        assert!(!is_power_of_two(&12u128));
    }

    #[test]
    fn pi_part_oracle() {
        // Largest divisor with support in {2, 3}, by scanning all divisors.
        for n in 1..2000u64 {
            let scan = divisors(n)
                .into_iter()
                .filter(|d| {
                    let mut x = *d;
                    while x % 2 == 0 {
                        x /= 2;
                    }
                    while x % 3 == 0 {
                        x /= 3;
                    }
                    x == 1
                })
                .max()
                .unwrap();
            assert_eq!(pi_part(&n, &[2, 3]), scan);
            let rest: Vec<u64> = sieve(2000).into_iter().map(u64::from).filter(|&p| p > 3).collect();
            assert_eq!(pi_part(&n, &[2, 3]) * pi_part(&n, &rest), n);
        }
    }

    #[test]
    fn mod_pow_generic() {
        assert_eq!(mod_pow(&3u64, &200, &1_000_007), big(3).modpow(&big(200), &big(1_000_007)).to_u64().unwrap());
        assert_eq!(mod_pow(&big(2), &big(10), &big(1000)), big(24));
        assert_eq!(mod_pow(&5u128, &0, &7), 1);
    }

    #[test]
    fn cyclotomic() {
        assert_eq!(cyclotomic_value(1, &big(2)), big(1));
        assert_eq!(cyclotomic_value(6, &big(2)), big(3));
        assert_eq!(cyclotomic_value(12, &big(3)), big(73));
        assert_eq!(cyclotomic_indices_plus(3), vec![2, 6]);
        assert_eq!(cyclotomic_indices_minus(6), vec![1, 2, 3, 6]);
        for q in 2..8u64 {
            for d in 1..15u64 {
                let minus: BigUint =
                    cyclotomic_indices_minus(d).iter().map(|&m| cyclotomic_value(m, &big(q))).product();
                assert_eq!(minus, num_traits::pow(big(q), d as usize) - 1u32);
                let plus: BigUint = cyclotomic_indices_plus(d).iter().map(|&m| cyclotomic_value(m, &big(q))).product();
                assert_eq!(plus, num_traits::pow(big(q), d as usize) + 1u32);
            }
        }
    }

    #[test]
    fn zsigmondy_examples() {
        assert!(!zsigmondy_exists(&big(2), 6));
        assert!(zsigmondy_exists(&big(2), 4));
        assert!(!zsigmondy_exists(&big(3), 1));
        let b = Budget::default();
        assert!(primitive_prime_divisors(&big(2), 6, b).unwrap().is_empty());
        assert_eq!(primitive_prime_divisors(&big(7), 1, b).unwrap(), vec![big(3)]);
        assert_eq!(primitive_prime_divisors(&big(2), 5, b).unwrap(), vec![big(31)]);
        assert_eq!(primitive_prime_divisors(&big(7), 2, b).unwrap(), vec![big(2)]);
        assert_eq!(primitive_prime_divisors(&big(5), 1, b).unwrap(), vec![big(2)]);
    }

    #[test]
    fn suzuki_ree_examples() {
        assert_eq!(suzuki_ree_m(SuzukiReeSeries::B, 1, 2).unwrap(), big(5));
        assert_eq!(suzuki_ree_m(SuzukiReeSeries::B, 1, 3).unwrap(), big(13));
        assert_eq!(suzuki_ree_m(SuzukiReeSeries::G, 1, 3).unwrap(), big(19));
        assert!(suzuki_ree_m(SuzukiReeSeries::B, 1, 4).is_err());
        assert!(suzuki_ree_m(SuzukiReeSeries::F, 1, 0).is_err());
        // m_1 m_2 m_3 = q^2 + 1 ... product identities: (q - 1)(q^2 + 1) for 2B2.
        let q = big(8);
        let prod: BigUint = (1..=3).map(|i| suzuki_ree_m(SuzukiReeSeries::B, 1, i).unwrap()).product();
        assert_eq!(prod, (&q - 1u32) * (&q * &q + 1u32));
    }
}
