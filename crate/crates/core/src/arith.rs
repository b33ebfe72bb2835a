//! Exact integer and rational arithmetic, plus the handful of number-theoretic
//! primitives the rest of the crate is built on: p-adic valuations, stripping
//! primes, squarefree parts, square roots and the Jacobi symbol.
//!
//! Factorization is plain trial division. Every integer the crate needs to
//! factor is tiny (moduli and discriminants built from primes below 30, and
//! contents of small polynomials), so nothing cleverer is warranted.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, ToBigInt};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Sign of a squarefree twist parameter or of a class representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of(n: i64) -> Option<Sign> {
        match n.signum() {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn apply(self, n: i64) -> i64 {
        match self {
            Sign::Positive => n,
            Sign::Negative => -n,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "pos" | "positive" => Ok(Sign::Positive),
            "-" | "neg" | "negative" => Ok(Sign::Negative),
            other => Err(Error::Parse(format!("expected + or -, got {other:?}"))),
        }
    }
}

pub fn int(n: i64) -> Integer {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `(v_p(n), n / p^v)`.
pub fn valuation_and_strip(n: &Integer, p: u64) -> Result<(u32, Integer)> {
    if n.is_zero() {
        return Err(Error::UndefinedValuation);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = BigInt::from(p);
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        m = q;
        v += 1;
    }
    Ok((v, m))
}

/// Valuation only; `None` stands for `v_p(0) = ∞`.
pub fn valuation(n: &Integer, p: u64) -> Option<u32> {
    valuation_and_strip(n, p).ok().map(|(v, _)| v)
}

/// Divides out every prime factor of `d` from `n` completely.
pub fn strip_by_modulus(n: &Integer, d: u64) -> Result<Integer> {
    if n.is_zero() {
        return Err(Error::UndefinedValuation);
    }
    if d == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    let mut m = n.clone();
    for p in prime_divisors(d) {
        m = valuation_and_strip(&m, p)?.1;
    }
    Ok(m)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor_u64(n).into_iter().map(|(p, _)| p).collect()
}

/// Prime factorization of a nonzero `u64` by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `n = squarefree_part · square_root_part²`, with the sign carried by the
/// squarefree part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub squarefree_part: Integer,
    pub square_root_part: Integer,
}

const TRIAL_LIMIT: u64 = 1 << 22;

pub fn squarefree_decompose(n: &Integer) -> Result<SquarefreeDecomposition> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut m: BigUint = n.magnitude().clone();
    let mut core = BigUint::one();
    let mut root = BigUint::one();
    let mut d = 2u64;
    loop {
        // Stop once d^3 > m: what remains is 1, a prime, a product of two
        // primes, or a prime square.
        let d3 = BigUint::from(d).pow(3);
        if d3 > m {
            break;
        }
        if d > TRIAL_LIMIT {
            return Err(Error::TooLarge(n.to_string()));
        }
        let mut e = 0u32;
        while (&m % d).is_zero() {
            m /= d;
            e += 1;
        }
        if e > 0 {
            root *= BigUint::from(d).pow(e / 2);
            if e % 2 == 1 {
                core *= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let s = m.sqrt();
        if &s * &s == m {
            root *= s;
        } else {
            core *= m;
        }
    }
    let mut core = core.to_bigint().expect("unsigned fits");
    if n.is_negative() {
        core = -core;
    }
    Ok(SquarefreeDecomposition {
        squarefree_part: core,
        square_root_part: root.to_bigint().expect("unsigned fits"),
    })
}

pub fn is_squarefree(n: i64) -> bool {
    if n == 0 {
        return false;
    }
    factor_u64(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

pub fn integer_square_root(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Nonnegative `w` with `w² = r`, if `r` is the square of a rational.
pub fn rational_square_root(r: &Rational) -> Option<Rational> {
    let n = integer_square_root(r.numer())?;
    let d = integer_square_root(r.denom())?;
    Some(Rational::new(n, d))
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi_symbol(a: &Integer, n: &Integer) -> Result<i8> {
    if !n.is_positive() || n.is_even() {
        return Err(Error::Domain(format!(
            "Jacobi symbol needs an odd positive modulus, got {n}"
        )));
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1i8;
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    let four = BigInt::from(4);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { result } else { 0 })
}

/// `jacobi_symbol` on machine integers.
pub fn jacobi_i64(a: i64, n: i64) -> Result<i8> {
    jacobi_symbol(&int(a), &int(n))
}

/// Squarefree integer of smallest absolute value with the given sign that is
/// congruent to `r` mod `m`.
pub fn smallest_squarefree_in_class(r: u64, m: u64, sign: Sign) -> Result<i64> {
    if m == 0 || r >= m {
        return Err(Error::Domain(format!(
            "residue {r} out of range for modulus {m}"
        )));
    }
    let m_i = m as i64;
    let r_i = r as i64;
    let first = match sign {
        Sign::Positive if r == 0 => m_i,
        Sign::Positive => r_i,
        Sign::Negative => r_i - m_i,
    };
    let step = sign.apply(m_i);
    let cap = m_i.saturating_mul(64);
    let mut t = first;
    while t.abs() <= cap {
        if is_squarefree(t) {
            return Ok(t);
        }
        t += step;
    }
    Err(Error::NoRepresentative {
        residue: r,
        modulus: m,
    })
}

/// Least nonnegative residue of `t` mod `m`.
pub fn residue(t: i64, m: u64) -> u64 {
    t.rem_euclid(m as i64) as u64
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

pub fn to_i64(n: &Integer) -> Option<i64> {
    n.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: factor by dividing out every d = 2..=|n|.
    fn brute_factor(n: i64) -> Vec<(i64, u32)> {
        let mut n = n.abs();
        let mut out = vec![];
        let mut d = 2;
        while n > 1 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        out
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(brute_factor(864), vec![(2, 5), (3, 3)]);
        assert_eq!(valuation_and_strip(&int(864), 2).unwrap(), (5, int(27)));
        assert_eq!(valuation_and_strip(&int(7), 2).unwrap(), (0, int(7)));
        assert_eq!(brute_factor(-50), vec![(2, 1), (5, 2)]);
        assert_eq!(valuation_and_strip(&int(-50), 5).unwrap(), (2, int(-2)));
    }

    #[test]
    fn valuation_errors() {
        assert_eq!(
            valuation_and_strip(&int(0), 2),
            Err(Error::UndefinedValuation)
        );
        assert_eq!(valuation_and_strip(&int(12), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(brute_factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(strip_by_modulus(&int(360), 30).unwrap(), int(1));
        assert_eq!(strip_by_modulus(&int(7), 30).unwrap(), int(7));
        assert_eq!(strip_by_modulus(&int(-63), 30).unwrap(), int(-7));
        assert!(strip_by_modulus(&int(0), 30).is_err());
    }

    #[test]
    fn squarefree_examples() {
        let d = squarefree_decompose(&int(12)).unwrap();
        assert_eq!((d.squarefree_part, d.square_root_part), (int(3), int(2)));
        let d = squarefree_decompose(&int(1)).unwrap();
        assert_eq!((d.squarefree_part, d.square_root_part), (int(1), int(1)));
        let d = squarefree_decompose(&int(-63)).unwrap();
        assert_eq!((d.squarefree_part, d.square_root_part), (int(-7), int(3)));
        assert_eq!(squarefree_decompose(&int(0)), Err(Error::ZeroInput));
    }

    #[test]
    fn squarefree_large_prime_square() {
        // 1000003 is prime; its square survives trial division up to the cube root.
        let n = int(2 * 1_000_003i64 * 1_000_003);
        let d = squarefree_decompose(&n).unwrap();
        assert_eq!(d.squarefree_part, int(2));
        assert_eq!(d.square_root_part, int(1_000_003));
    }

    #[test]
    fn square_root_examples() {
        assert_eq!(118 * 118, 13924);
        assert_eq!(rational_square_root(&rat(13924, 9)), Some(rat(118, 3)));
        assert_eq!(rational_square_root(&rat_int(0)), Some(rat_int(0)));
        assert_eq!(rational_square_root(&rat_int(-4)), None);
        assert_eq!(rational_square_root(&rat(2, 9)), None);
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_i64(-1, 7).unwrap(), -1);
        assert_eq!(jacobi_i64(-1, 1).unwrap(), 1);
        assert_eq!(jacobi_i64(3, 5).unwrap(), -1);
        assert_eq!(jacobi_i64(10, 5).unwrap(), 0);
        assert!(jacobi_i64(3, 8).is_err());
        assert!(jacobi_i64(3, -5).is_err());
    }

    #[test]
    fn jacobi_matches_euler_criterion_for_primes() {
        for p in [3i64, 5, 7, 11, 13, 101] {
            for a in -20..20i64 {
                let squares: Vec<i64> = (1..p).map(|x| x * x % p).collect();
                let expected = if a.rem_euclid(p) == 0 {
                    0
                } else if squares.contains(&a.rem_euclid(p)) {
                    1
                } else {
                    -1
                };
                assert_eq!(jacobi_i64(a, p).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn smallest_squarefree_examples() {
        assert_eq!(
            smallest_squarefree_in_class(7, 120, Sign::Positive).unwrap(),
            7
        );
        assert_eq!(
            smallest_squarefree_in_class(4, 8, Sign::Positive),
            Err(Error::NoRepresentative {
                residue: 4,
                modulus: 8
            })
        );
        assert_eq!(
            smallest_squarefree_in_class(113, 120, Sign::Negative).unwrap(),
            -7
        );
        assert_eq!(
            smallest_squarefree_in_class(0, 3, Sign::Positive).unwrap(),
            3
        );
        assert_eq!(
            smallest_squarefree_in_class(0, 3, Sign::Negative).unwrap(),
            -3
        );
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_003 * 3));
        assert!(is_prime(18446744073709551557));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn valuation_reconstructs(n in (-1_000_000i64..1_000_000).prop_filter("nonzero", |n| *n != 0),
                                      p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])) {
                let (v, s) = valuation_and_strip(&int(n), p).unwrap();
                prop_assert_eq!(&s * BigInt::from(p).pow(v), int(n));
                prop_assert!(!(&s % BigInt::from(p)).is_zero());
            }

            #[test]
            fn squarefree_round_trip(n in (-10_000_000i64..10_000_000).prop_filter("nonzero", |n| *n != 0)) {
                let d = squarefree_decompose(&int(n)).unwrap();
                prop_assert_eq!(&d.squarefree_part * &d.square_root_part * &d.square_root_part, int(n));
                let s = d.squarefree_part.to_i64().unwrap();
                prop_assert!(brute_factor(s).iter().all(|&(_, e)| e == 1));
            }

            #[test]
            fn jacobi_multiplicative(a in -500i64..500, b in -500i64..500, k in 0i64..400) {
                let n = 2 * k + 1;
                let lhs = jacobi_i64(a, n).unwrap() * jacobi_i64(b, n).unwrap();
                prop_assert_eq!(lhs, jacobi_i64(a * b, n).unwrap());
            }

            #[test]
            fn sqrt_of_square(n in -10_000i64..10_000, d in 1i64..10_000) {
                let w = rat(n, d);
                prop_assert_eq!(rational_square_root(&(&w * &w)), Some(num_traits::Signed::abs(&w)));
            }
        }
    }
}
