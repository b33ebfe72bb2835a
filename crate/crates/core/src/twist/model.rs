use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_squarefree, valuation, Integer, Rational};
use crate::curves::{Point, ShortWeierstrass};
use crate::error::{Error, Result};
use crate::polyfield::Polynomial;

/// `y² = x³ + A·x + B` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerCurve {
    pub a: Integer,
    pub b: Integer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub c4: Integer,
    pub c6: Integer,
    pub delta: Integer,
    pub j: Rational,
}

/// A valuation, with `None` standing for `v(0) = ∞`.
pub type Val = Option<u32>;

impl IntegerCurve {
    pub fn new(a: impl Into<Integer>, b: impl Into<Integer>) -> Result<Self> {
        let c = IntegerCurve {
            a: a.into(),
            b: b.into(),
        };
        if c.discriminant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(c)
    }

    pub fn discriminant(&self) -> Integer {
        let four_a3 = BigInt::from(4) * &self.a * &self.a * &self.a;
        let b2 = BigInt::from(27) * &self.b * &self.b;
        BigInt::from(-16) * (four_a3 + b2)
    }

    pub fn invariants(&self) -> Result<Invariants> {
        let delta = self.discriminant();
        if delta.is_zero() {
            return Err(Error::Singular);
        }
        let c4 = BigInt::from(-48) * &self.a;
        let c6 = BigInt::from(-864) * &self.b;
        let j = Rational::new(&c4 * &c4 * &c4, delta.clone());
        Ok(Invariants { c4, c6, delta, j })
    }

    pub fn quadratic_twist(&self, t: i64) -> Result<IntegerCurve> {
        if t == 0 {
            return Err(Error::ZeroInput);
        }
        if !is_squarefree(t) {
            return Err(Error::NotSquarefree(t.to_string()));
        }
        let t = BigInt::from(t);
        IntegerCurve::new(&self.a * &t * &t, &self.b * &t * &t * &t)
    }

    pub fn valuations(&self, p: u64) -> Result<(Val, Val, Val)> {
        let inv = self.invariants()?;
        Ok((
            valuation(&inv.c4, p),
            valuation(&inv.c6, p),
            valuation(&inv.delta, p),
        ))
    }

    pub fn over_q(&self) -> ShortWeierstrass<Rational> {
        ShortWeierstrass {
            a: Rational::from_integer(self.a.clone()),
            b: Rational::from_integer(self.b.clone()),
        }
    }
}

impl fmt::Display for IntegerCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |n: &Integer| {
            if n.is_negative() {
                format!("- {}", n.abs())
            } else {
                format!("+ {n}")
            }
        };
        write!(f, "y^2 = x^3 {}*x {}", sign(&self.a), sign(&self.b))
    }
}

/// Subtracts `k·(4, 6, 12)` with `k` as large as keeps every entry
/// nonnegative; `None` entries are infinite and never constrain `k`.
pub fn reduce_abc(a: Val, b: Val, c: Val) -> (Val, Val, Val) {
    let k = [a.map(|v| v / 4), b.map(|v| v / 6), c.map(|v| v / 12)]
        .into_iter()
        .flatten()
        .min()
        .unwrap_or(0);
    (
        a.map(|v| v - 4 * k),
        b.map(|v| v - 6 * k),
        c.map(|v| v - 12 * k),
    )
}

/// The curve `q·s² = P(u)` in short Weierstrass form over ℤ together with
/// the maps between the two models.
#[derive(Clone, Debug)]
pub struct TwistModel {
    pub poly: Polynomial,
    pub q: Integer,
    pub curve: IntegerCurve,
    /// The rational root moved to infinity when `P` has degree 4.
    pub root: Option<Rational>,
    cubic: [Rational; 4],
    mu: Integer,
}

/// Height of a rational number, `max(|num|, den)`.
pub fn naive_height(r: &Rational) -> Integer {
    r.numer().abs().max(r.denom().clone())
}

pub fn quartic_to_weierstrass(p: &Polynomial, q: impl Into<Integer>) -> Result<TwistModel> {
    let q: Integer = q.into();
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree(p.to_string()));
    }
    let (root, cubic_poly) = match p.degree() {
        Some(3) => (None, p.clone()),
        Some(4) => {
            let root = p
                .rational_roots()
                .into_iter()
                .min_by(|x, y| naive_height(x).cmp(&naive_height(y)).then(x.cmp(y)))
                .ok_or(Error::NotGood)?;
            // u = root + 1/w and clear w⁴: the w⁴ term is P(root) = 0.
            let shifted = p.compose(&Polynomial::new(vec![root.clone(), Rational::one()]));
            (Some(root), shifted.reversed(4))
        }
        _ => {
            return Err(Error::Domain(format!(
                "expected a cubic or quartic, got {p}"
            )))
        }
    };
    let cubic = [3, 2, 1, 0].map(|k| cubic_poly.coeff(k));
    let [a, b, c, d] = cubic.clone();
    let qr = Rational::from_integer(q.clone());
    let a2 = &b * &qr;
    let a4 = &a * &c * &qr * &qr;
    let a6 = &a * &a * &d * &qr * &qr * &qr;
    let sa =
        Rational::from_integer(81.into()) * &a4 - Rational::from_integer(27.into()) * &a2 * &a2;
    let sb = Rational::from_integer(54.into()) * &a2 * &a2 * &a2
        - Rational::from_integer(243.into()) * &a2 * &a4
        + Rational::from_integer(729.into()) * a6;
    let mu = sa.denom().lcm(sb.denom());
    let mu2 = Rational::from_integer(&mu * &mu);
    let curve = IntegerCurve::new(
        (sa * &mu2 * &mu2).to_integer(),
        (sb * &mu2 * &mu2 * &mu2).to_integer(),
    )?;
    Ok(TwistModel {
        poly: p.clone(),
        q,
        curve,
        root,
        cubic,
        mu,
    })
}

impl TwistModel {
    pub fn weierstrass(&self) -> ShortWeierstrass<Rational> {
        self.curve.over_q()
    }

    fn a2(&self) -> Rational {
        &self.cubic[1] * Rational::from_integer(self.q.clone())
    }

    pub fn is_on_twist(&self, u: &Rational, s: &Rational) -> bool {
        Rational::from_integer(self.q.clone()) * s * s == self.poly.eval(u)
    }

    /// `(u, s)` with `q·s² = P(u)` to a point of the Weierstrass model.
    pub fn to_curve(&self, u: &Rational, s: &Rational) -> Result<Point<Rational>> {
        if !self.is_on_twist(u, s) {
            return Err(Error::OffCurve);
        }
        let (w, sw) = match &self.root {
            None => (u.clone(), s.clone()),
            Some(r) if u == r => return Ok(Point::Infinity),
            Some(r) => {
                let w = (u - r).recip();
                let sw = s * &w * &w;
                (w, sw)
            }
        };
        let q = Rational::from_integer(self.q.clone());
        let a = &self.cubic[0];
        let x = a * &q * w;
        let y = a * &q * &q * sw;
        let mu = Rational::from_integer(self.mu.clone());
        let xs = (Rational::from_integer(9.into()) * x
            + Rational::from_integer(3.into()) * self.a2())
            * &mu
            * &mu;
        let ys = Rational::from_integer(27.into()) * y * &mu * &mu * &mu;
        Ok(Point::new(xs, ys))
    }

    /// Inverse of [`TwistModel::to_curve`].
    pub fn from_curve(&self, p: &Point<Rational>) -> Result<(Rational, Rational)> {
        let Some((xs, ys)) = p.xy() else {
            return match &self.root {
                Some(r) => Ok((r.clone(), Rational::zero())),
                None => Err(Error::NoAffineImage),
            };
        };
        if !self.weierstrass().on_curve(p) {
            return Err(Error::OffCurve);
        }
        let mu = Rational::from_integer(self.mu.clone());
        let x = (xs / (&mu * &mu) - Rational::from_integer(3.into()) * self.a2())
            / Rational::from_integer(9.into());
        let y = ys / (&mu * &mu * &mu) / Rational::from_integer(27.into());
        let q = Rational::from_integer(self.q.clone());
        let a = &self.cubic[0];
        let w = x / (a * &q);
        let sw = y / (a * &q * &q);
        match &self.root {
            None => Ok((w, sw)),
            Some(_) if w.is_zero() => Err(Error::NoAffineImage),
            Some(r) => {
                let u = r + w.recip();
                let s = sw / (&w * &w);
                Ok((u, s))
            }
        }
    }
}
