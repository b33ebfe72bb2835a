use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use crate::arith::{squarefree_decompose, Rational};
use crate::error::{Error, Result};

/// Element of ℚ(u), kept as `num/den` with coprime parts and monic `den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::from_poly(Polynomial::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        Self::normalized(num, den)
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading();
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lc.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn u() -> Self {
        Self::from_poly(Polynomial::u())
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalFunction {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn eval(&self, u0: &Rational) -> Result<Rational> {
        let d = self.den.eval(u0);
        if d.is_zero() {
            return Err(Error::Pole {
                at: u0.clone(),
                denominator: self.den.to_string(),
            });
        }
        Ok(self.num.eval(u0) / d)
    }

    /// `h` with `h² = self`, if one exists in ℚ(u).
    pub fn square_root(&self) -> Option<Self> {
        let n = self.num.square_root()?;
        let d = self.den.square_root()?;
        Some(RationalFunction { num: n, den: d })
    }

    pub fn squarefree_class(&self) -> Result<SquarefreeClass> {
        if self.num.is_zero() {
            return Err(Error::ZeroInput);
        }
        // N/D and N·D differ by the square D².
        let f = &self.num * &self.den;
        let (c, _) = f.primitive_integer();
        let (_, odd) = f.odd_part().primitive_integer();
        let core = squarefree_decompose(&(c.numer() * c.denom()))?.squarefree_part;
        let rep = Polynomial::new(
            odd.into_iter()
                .map(|a| Rational::from_integer(a * &core))
                .collect(),
        );
        Ok(SquarefreeClass {
            representative: rep,
        })
    }
}

/// Canonical squarefree representative of a class in ℚ(u)*/(ℚ(u)*)²: an
/// integer polynomial whose content is a signed squarefree integer and whose
/// primitive part is squarefree with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeClass {
    pub representative: Polynomial,
}

impl SquarefreeClass {
    pub fn is_trivial(&self) -> bool {
        self.representative.is_one()
    }
}

impl fmt::Display for SquarefreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || p.leading().is_negative() {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::reduced(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let od = o.den.exact_div(&g).expect("gcd divides");
        let sd = self.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &od) + &(&o.num * &sd);
        RationalFunction::reduced(num, &self.den * &od)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || o.num.is_zero() {
            return RationalFunction::zero();
        }
        // Cross-cancel before multiplying; both inputs are already reduced.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = o.den.exact_div(&g1).expect("gcd divides");
        let c = o.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        RationalFunction::normalized(&a * &c, &b * &d)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self * &o.inv().expect("division by the zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction { (&self).$m(&o) }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: &RationalFunction) -> RationalFunction { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}
