use std::fmt;

use crate::error::{Error, Result};
use crate::polyfield::Field;

/// `y² = x³ + a·x + b` over a field `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShortWeierstrass<F> {
    pub a: F,
    pub b: F,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Point<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: Field> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn xy(&self) -> Option<(&F, &F)> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, y } => Some((x, y)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine {
                x: x.clone(),
                y: -y.clone(),
            },
        }
    }
}

impl<F: Field> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "[{x}, {y}]"),
        }
    }
}

impl<F: Field> ShortWeierstrass<F> {
    pub fn new(a: F, b: F) -> Result<Self> {
        let c = ShortWeierstrass { a, b };
        if c.discriminant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(c)
    }

    /// `−16(4a³ + 27b²)`.
    pub fn discriminant(&self) -> F {
        let a3 = self.a.clone() * &self.a * &self.a;
        let b2 = self.b.clone() * &self.b;
        F::from_int(-16) * (F::from_int(4) * a3 + F::from_int(27) * b2)
    }

    /// `1728 · 4a³ / (4a³ + 27b²)`.
    pub fn j_invariant(&self) -> F {
        let a3 = F::from_int(4) * &self.a * &self.a * &self.a;
        let den = a3.clone() + F::from_int(27) * &self.b * &self.b;
        F::from_int(1728) * a3 / den
    }

    pub fn on_curve(&self, p: &Point<F>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => self.rhs(x) == y.clone() * y,
        }
    }

    pub fn rhs(&self, x: &F) -> F {
        (x.clone() * x + &self.a) * x + &self.b
    }

    pub fn add(&self, p: &Point<F>, q: &Point<F>) -> Result<Point<F>> {
        if !self.on_curve(p) || !self.on_curve(q) {
            return Err(Error::OffCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    /// Chord and tangent; inputs are trusted to be on the curve.
    pub fn add_unchecked(&self, p: &Point<F>, q: &Point<F>) -> Point<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if y1.is_zero() || (y1.clone() + y2).is_zero() {
                return Point::Infinity;
            }
            (F::from_int(3) * x1 * x1 + &self.a) / (F::from_int(2) * y1)
        } else {
            (y2.clone() - y1) / (x2.clone() - x1)
        };
        let x3 = slope.clone() * &slope - x1 - x2;
        let y3 = slope * (x1.clone() - &x3) - y1;
        Point::Affine { x: x3, y: y3 }
    }

    pub fn double(&self, p: &Point<F>) -> Point<F> {
        self.add_unchecked(p, p)
    }

    /// `n·P` by double-and-add.
    pub fn mul(&self, p: &Point<F>, n: i64) -> Point<F> {
        let base = if n < 0 { p.neg() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &pow);
            }
            k >>= 1;
            if k > 0 {
                pow = self.double(&pow);
            }
        }
        acc
    }

    /// `Σ k_i·P_i`.
    pub fn combination(&self, points: &[Point<F>], coeffs: &[i64]) -> Result<Point<F>> {
        if points.iter().any(|p| !self.on_curve(p)) {
            return Err(Error::OffCurve);
        }
        Ok(points
            .iter()
            .zip(coeffs)
            .fold(Point::Infinity, |acc, (p, &k)| {
                self.add_unchecked(&acc, &self.mul(p, k))
            }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, Rational};

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::new(rat_int(x), rat_int(y))
    }

    #[test]
    fn small_curve_arithmetic() {
        // y² = x³ − 2, a curve with the nontorsion point (3, 5).
        let e = ShortWeierstrass::new(rat_int(0), rat_int(-2)).unwrap();
        let p = pt(3, 5);
        assert!(e.on_curve(&p));
        let two_p = e.double(&p);
        // Tangent at (3,5) has slope 27/10; x(2P) = 729/100 − 6 = 129/100.
        assert_eq!(
            two_p.xy().unwrap().0,
            &Rational::new(129.into(), 100.into())
        );
        assert!(e.on_curve(&two_p));
        assert_eq!(e.mul(&p, 3), e.add_unchecked(&two_p, &p));
        assert_eq!(e.mul(&p, -2), two_p.neg());
        assert_eq!(e.add_unchecked(&p, &p.neg()), Point::Infinity);
        assert_eq!(e.mul(&p, 0), Point::Infinity);
        assert_eq!(e.add(&p, &pt(3, 4)), Err(Error::OffCurve));
    }

    #[test]
    fn two_torsion_doubles_to_infinity() {
        // y² = x³ − x has (0,0), (1,0), (−1,0).
        let e = ShortWeierstrass::new(rat_int(-1), rat_int(0)).unwrap();
        assert_eq!(e.double(&pt(1, 0)), Point::Infinity);
        assert_eq!(e.add_unchecked(&pt(1, 0), &pt(-1, 0)), pt(0, 0));
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(
            ShortWeierstrass::new(rat_int(-3), rat_int(2)),
            Err(Error::Singular)
        );
    }
}
