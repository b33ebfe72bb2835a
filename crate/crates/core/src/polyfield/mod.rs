//! Exact polynomials and rational functions over ℚ in one variable `u`.

mod poly;
mod ratfunc;

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use poly::Polynomial;
pub use ratfunc::{RationalFunction, SquarefreeClass};

use crate::arith::{rational_square_root, Rational};

/// The two fields the curve code runs over: ℚ and ℚ(u).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Div<Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;
    fn sqrt(&self) -> Option<Self>;
}

impl Field for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn sqrt(&self) -> Option<Self> {
        rational_square_root(self)
    }
}

impl Field for RationalFunction {
    fn from_int(n: i64) -> Self {
        RationalFunction::from_int(n)
    }
    fn sqrt(&self) -> Option<Self> {
        self.square_root()
    }
}

/// Parses `p` or `p/q` where both sides are polynomials in either text form.
pub fn parse_rational_function(s: &str) -> crate::error::Result<RationalFunction> {
    let s = s.trim();
    let strip = |t: &str| {
        let t = t.trim();
        t.strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(t)
            .to_string()
    };
    match s.find(")/(") {
        Some(i) => RationalFunction::new(
            Polynomial::parse(&strip(&s[..=i]))?,
            Polynomial::parse(&strip(&s[i + 2..]))?,
        ),
        None => Ok(Polynomial::parse(&strip(s))?.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::error::Error;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p("u^2 - 1").gcd(&p("u^2 - 2*u + 1")), p("u - 1"));
        assert_eq!(&p("u + 1") * &p("u - 1"), p("u^2 - 1"));
        assert_eq!(p("4*u^2 - 4").content(), rat_int(4));
        let (q, r) = p("u^3 + 2").div_rem(&p("u - 1")).unwrap();
        assert_eq!(q, p("u^2 + u + 1"));
        assert_eq!(r, p("3"));
        assert_eq!(
            p("u^3").div_rem(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(p("u^3 + u").derivative(), p("3*u^2 + 1"));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let a = p("1/2*u^2 - 1/8");
        let b = p("3*u^2 + 3/2*u");
        assert_eq!(a.gcd(&b), p("u + 1/2"));
    }

    #[test]
    fn text_forms() {
        let f = p("4*u^4 - 20*u^3 + 13*u^2 + 12*u");
        assert_eq!(f, p("0,12,13,-20,4"));
        assert_eq!(f.to_string(), "4*u^4 - 20*u^3 + 13*u^2 + 12*u");
        assert_eq!(p("-u^2 + 1/2*u - 3").to_string(), "-u^2 + 1/2*u - 3");
        assert_eq!(p("u").to_string(), "u");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert!(Polynomial::parse("4u^2").is_err());
        assert!(Polynomial::parse("").is_err());
        let r = parse_rational_function("(u + 1)/(u^2 - 1)").unwrap();
        assert_eq!(r, rf("1", "u - 1"));
        assert_eq!(r.to_string(), "1/(u - 1)");
    }

    #[test]
    fn squarefree_class_examples() {
        let f = RationalFunction::from(&p("u^2 - 1").pow(2) * &p("u + 2"));
        assert_eq!(f.squarefree_class().unwrap().representative, p("u + 2"));
        let f = RationalFunction::from(p("4*u^2 - 4"));
        assert_eq!(f.squarefree_class().unwrap().representative, p("u^2 - 1"));
        let f = RationalFunction::from(p("8*u"));
        assert_eq!(f.squarefree_class().unwrap().representative, p("2*u"));
        assert_eq!(
            RationalFunction::zero().squarefree_class(),
            Err(Error::ZeroInput)
        );
    }

    #[test]
    fn squarefree_class_keeps_sign_and_content() {
        let f = RationalFunction::from(p("-1200*u^3 + 1645*u^2 - 410*u - 35"));
        assert_eq!(
            f.squarefree_class().unwrap().representative,
            p("-1200*u^3 + 1645*u^2 - 410*u - 35")
        );
        let g = rf("-3*u^2 + 3", "4*u^2 + 4*u + 1");
        assert_eq!(
            g.squarefree_class().unwrap().representative,
            p("-3*u^2 + 3")
        );
        let h = rf("u", "2*u - 2");
        assert_eq!(
            h.squarefree_class().unwrap().representative,
            p("2*u^2 - 2*u")
        );
    }

    #[test]
    fn square_root_examples() {
        assert_eq!(p("u^2 + 2*u + 1").square_root(), Some(p("u + 1")));
        let w = p("10*u^2 + 28*u + 22");
        assert_eq!(&w * &w, p("100*u^4 + 560*u^3 + 1224*u^2 + 1232*u + 484"));
        assert_eq!(
            p("100*u^4 + 560*u^3 + 1224*u^2 + 1232*u + 484").square_root(),
            Some(w)
        );
        assert_eq!(p("u^4 + u^2 + 7").square_root(), None);
        assert_eq!(
            RationalFunction::one().square_root(),
            Some(RationalFunction::one())
        );
        assert_eq!(
            rf("u^2 + 2*u + 1", "u^2 - 2*u + 1").square_root(),
            Some(rf("u + 1", "u - 1"))
        );
        assert_eq!(rf("u", "u - 1").square_root(), None);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p("u^4 + u^2 + 7").eval(&rat_int(2)), rat_int(27));
        assert_eq!(
            p("4*u^4 - 20*u^3 + 13*u^2 + 12*u").eval(&rat_int(3)),
            rat_int(-63)
        );
        let e = rf("1", "u - 1").eval(&rat_int(1));
        assert_eq!(
            e,
            Err(Error::Pole {
                at: rat_int(1),
                denominator: "u - 1".into()
            })
        );
        assert_eq!(rf("1", "u - 1").eval(&rat(1, 2)).unwrap(), rat_int(-2));
    }

    #[test]
    fn canonical_form() {
        let a = rf("2*u + 2", "4*u^2 - 4");
        assert_eq!(a.numer(), &p("1/2"));
        assert_eq!(a.denom(), &p("u - 1"));
        assert_eq!(&a + &(-&a), RationalFunction::zero());
        assert_eq!(&a / &a, RationalFunction::one());
        assert!(RationalFunction::new(p("1"), Polynomial::zero()).is_err());
    }

    #[test]
    fn rational_roots() {
        assert_eq!(
            p("4*u^4 - 20*u^3 + 13*u^2 + 12*u").rational_roots(),
            vec![rat(-1, 2), rat_int(0), rat(3, 2), rat_int(4)]
        );
        assert!(p("u^4 + 1").rational_roots().is_empty());
    }

    #[test]
    fn yun_factors() {
        let f = &(&p("u - 1") * &p("u + 2").pow(2)) * &p("u^2 + 1").pow(3);
        let fs = f.squarefree_factors();
        assert_eq!(fs, vec![p("u - 1"), p("u + 2"), p("u^2 + 1")]);
        assert_eq!(f.odd_part(), &p("u - 1") * &p("u^2 + 1"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
            prop::collection::vec(-9i64..10, 1..=max_deg + 1)
                .prop_map(|v| Polynomial::from_ints(&v))
        }

        fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
            small_poly(max_deg).prop_filter("nonzero", |f| !f.is_zero())
        }

        fn small_rf() -> impl Strategy<Value = RationalFunction> {
            (nonzero_poly(3), nonzero_poly(3))
                .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn class_ignores_squares(f in small_rf(), g in small_rf()) {
                let fg2 = &f * &(&g * &g);
                prop_assert_eq!(fg2.squarefree_class().unwrap(), f.squarefree_class().unwrap());
            }

            #[test]
            fn class_is_multiplicative(f in small_rf(), g in small_rf()) {
                let lhs = (&f * &g).squarefree_class().unwrap();
                let a = RationalFunction::from(f.squarefree_class().unwrap().representative);
                let b = RationalFunction::from(g.squarefree_class().unwrap().representative);
                prop_assert_eq!(lhs, (&a * &b).squarefree_class().unwrap());
            }

            #[test]
            fn square_root_round_trip(g in small_poly(8)) {
                let r = (&g * &g).square_root().unwrap();
                prop_assert!(r == g || r == -&g);
                prop_assert!(!num_traits::Signed::is_negative(&r.leading()));
            }

            #[test]
            fn is_square_iff_trivial_class(f in small_rf()) {
                let trivial = f.squarefree_class().unwrap().is_trivial();
                prop_assert_eq!(f.square_root().is_some(), trivial);
                let sq = &f * &f;
                prop_assert!(sq.squarefree_class().unwrap().is_trivial());
                prop_assert!(sq.square_root().is_some());
            }

            #[test]
            fn evaluation_is_multiplicative(f in small_rf(), g in small_rf(), n in -20i64..20, d in 1i64..20) {
                let x = rat(n, d);
                if let (Ok(a), Ok(b)) = (f.eval(&x), g.eval(&x)) {
                    prop_assert_eq!((&f * &g).eval(&x).unwrap(), &a * &b);
                    prop_assert_eq!((&f + &g).eval(&x).unwrap(), a + b);
                }
            }

            #[test]
            fn gcd_divides_both(a in nonzero_poly(5), b in nonzero_poly(5), c in nonzero_poly(3)) {
                let fa = &a * &c;
                let fb = &b * &c;
                let g = fa.gcd(&fb);
                prop_assert!(fa.div_rem(&g).unwrap().1.is_zero());
                prop_assert!(fb.div_rem(&g).unwrap().1.is_zero());
                prop_assert!(g.leading() == rat_int(1));
                prop_assert!(g.degree() >= c.degree());
            }

            #[test]
            fn parse_display_round_trip(f in small_poly(6)) {
                prop_assert_eq!(Polynomial::parse(&f.to_string()).unwrap(), f);
            }
        }
    }
}
