use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{parse_rational, Integer, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial over ℚ in the variable `u`, coefficients ascending.
/// Trailing zeros are never stored, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `self(g(u))`.
    pub fn compose(&self, g: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * g) + &Self::constant(c.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Coefficients in reverse order, padded to length `n + 1`: `u^n · f(1/u)`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut v: Vec<Rational> = (0..=n).map(|k| self.coeff(k)).collect();
        v.reverse();
        Self::new(v)
    }

    pub fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let inv = g.leading().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dg];
        for k in (0..q.len()).rev() {
            let c = &r[k + dg] * &inv;
            if !c.is_zero() {
                for (j, gj) in g.coeffs.iter().enumerate() {
                    r[k + j] -= &c * gj;
                }
            }
            q[k] = c;
        }
        r.truncate(dg);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(g)?;
        if !r.is_zero() {
            return Err(Error::Domain(format!("{g} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, g: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return g.monic();
        }
        if g.is_zero() {
            return self.monic();
        }
        if self.is_constant() || g.is_constant() {
            return Self::one();
        }
        // Primitive remainder sequence over ℤ keeps coefficient growth linear
        // where the naive Euclidean algorithm over ℚ explodes.
        let (_, mut a) = self.primitive_integer();
        let (_, mut b) = g.primitive_integer();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive(r);
        }
        Self::new(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Positive gcd of the numerators over the lcm of the denominators, so
    /// `self = content · (integer polynomial with coprime coefficients)`.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let den = self
            .coeffs
            .iter()
            .fold(Integer::one(), |l, c| l.lcm(c.denom()));
        let num = self
            .coeffs
            .iter()
            .fold(Integer::zero(), |g, c| g.gcd(c.numer()));
        Rational::new(num, den)
    }

    /// `self = c · p` with `p` primitive over ℤ and positive leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, Vec<Integer>) {
        if self.is_zero() {
            return (Rational::zero(), vec![]);
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        let p = self.coeffs.iter().map(|a| (a / &c).to_integer()).collect();
        (c, p)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Yun's squarefree factorization: `[a1, a2, …]` monic with
    /// `self = lc · a1 · a2² · a3³ ⋯`.
    pub fn squarefree_factors(&self) -> Vec<Polynomial> {
        let mut out = vec![];
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            out.push(a);
        }
        out
    }

    /// Product of the factors of odd multiplicity (monic).
    pub fn odd_part(&self) -> Polynomial {
        self.squarefree_factors()
            .iter()
            .step_by(2)
            .fold(Self::one(), |acc, a| &acc * a)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// `g` with `g² = self` and nonnegative leading coefficient, if one exists.
    pub fn square_root(&self) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree()?;
        if n % 2 == 1 {
            return None;
        }
        let m = n / 2;
        let top = crate::arith::rational_square_root(&self.leading())?;
        let two_top = &top + &top;
        let mut g = vec![Rational::zero(); m + 1];
        g[m] = top;
        for k in 1..=m {
            let mut acc = self.coeff(n - k);
            for i in 1..k {
                acc -= &g[m - i] * &g[m - k + i];
            }
            g[m - k] = acc / &two_top;
        }
        let g = Self::new(g);
        (&g * &g == *self).then_some(g)
    }

    /// Rational roots, via the rational root theorem on the primitive form.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = vec![];
        if self.is_constant() {
            return roots;
        }
        let (_, p) = self.primitive_integer();
        let shift = p.iter().take_while(|c| c.is_zero()).count();
        if shift > 0 {
            roots.push(Rational::zero());
        }
        let p = &p[shift..];
        if p.len() <= 1 {
            return roots;
        }
        let lead = p.last().expect("nonempty").abs();
        let tail = p[0].abs();
        let small_divisors = |n: &Integer| -> Vec<Integer> {
            let mut ds = vec![];
            let mut d = Integer::one();
            while &d * &d <= *n {
                if (n % &d).is_zero() {
                    ds.push(d.clone());
                    ds.push(n / &d);
                }
                d += 1;
            }
            ds.sort();
            ds.dedup();
            ds
        };
        let f = Self::new(p.iter().cloned().map(Rational::from_integer).collect());
        for num in small_divisors(&tail) {
            for den in small_divisors(&lead) {
                for s in [num.clone(), -num.clone()] {
                    let x = Rational::new(s, den.clone());
                    if f.eval(&x).is_zero() && !roots.contains(&x) {
                        roots.push(x);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Parses either the ascending list `a0,a1,...` or the human form
    /// `4*u^4 - 20*u^3 + 13*u^2 + 12*u`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if !s.contains('u') {
            if s.contains(',') {
                return s
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()
                    .map(Self::new);
            }
            return parse_rational(s).map(Self::constant);
        }
        parse_human(s)
    }
}

fn primitive(v: Vec<Integer>) -> Vec<Integer> {
    let mut v = v;
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = v.iter().fold(Integer::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return v;
    }
    let sign = if v.last().expect("nonempty").is_negative() {
        -g
    } else {
        g
    };
    v.iter().map(|c| c / &sign).collect()
}

fn pseudo_rem(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn parse_human(s: &str) -> Result<Polynomial> {
    let bad = |why: &str| Error::Parse(format!("{why} in polynomial {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = vec![];
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut out = Polynomial::zero();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-Rational::one(), rest),
            None => (Rational::one(), term.strip_prefix('+').unwrap_or(term)),
        };
        if body.is_empty() {
            return Err(bad("dangling sign"));
        }
        let (coef, power) = match body.find('u') {
            None => (parse_rational(body)?, 0usize),
            Some(pos) => {
                let coef = match body[..pos].strip_suffix('*') {
                    Some(c) => parse_rational(c)?,
                    None if pos == 0 => Rational::one(),
                    None => return Err(bad("missing '*'")),
                };
                let rest = &body[pos + 1..];
                let power = match rest.strip_prefix('^') {
                    Some(k) => k.parse().map_err(|_| bad("bad exponent"))?,
                    None if rest.is_empty() => 1,
                    None => return Err(bad("unexpected text after u")),
                };
                (coef, power)
            }
        };
        out = &out + &Polynomial::monomial(sign * coef, power);
    }
    Ok(out)
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial { (&self).$m(&o) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: &Polynomial) -> Polynomial { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
