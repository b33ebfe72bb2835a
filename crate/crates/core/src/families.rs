//! The eight explicit D(q(u))-quintuple families, one per curve, and their
//! numeric instantiation.

use num_traits::{Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::polyfield::{Polynomial, RationalFunction};
use crate::quintuple::{verify_quintuple, Quintuple, QuintupleReport};

/// A family of D(q(u))-quintuples with `q(u) = base_poly · square_factor²`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyRecord {
    pub index: usize,
    pub elements: [Polynomial; 5],
    pub base_poly: Polynomial,
    pub square_factor: Polynomial,
}

struct RawFamily {
    elements: [&'static str; 5],
    base: &'static str,
    square: &'static [&'static str],
}

/// Squarefree class polynomials attached to the eight curves.
pub const TABLE1_POLYS: [&str; 8] = [
    "-1200*u^3 + 1645*u^2 - 410*u - 35",
    "-80*u^4 + 148*u^3 - 65*u^2 - 12*u + 9",
    "-28*u^4 - 44*u^3 + 157*u^2 - 106*u + 21",
    "112*u^4 - 100*u^3 - 93*u^2 + 92*u - 11",
    "300*u^3 - 65*u^2 + 16*u + 1",
    "4*u^4 - 20*u^3 + 13*u^2 + 12*u",
    "-40*u^3 - 19*u^2 + 38*u + 21",
    "-144*u^3 + 61*u^2 + 94*u - 11",
];

const RAW: [RawFamily; 8] = [
    RawFamily {
        elements: [
            "900*u^4 + 4320*u^3 - 1161*u^2 - 3438*u + 1404",
            "1600*u^4 - 1600*u^3 + 1100*u^2 - 920*u + 396",
            "100*u^4 + 1760*u^3 - 1201*u^2 - 542*u + 324",
            "2500*u^4 - 4000*u^3 + 959*u^2 + 514*u + 36",
            "3600*u^4 - 2880*u^3 - 1584*u^2 + 864*u + 324",
        ],
        base: "-1200*u^3 + 1645*u^2 - 410*u - 35",
        square: &["6", "10*u^2 - 4*u - 3"],
    },
    RawFamily {
        elements: [
            "378*u^2 - 405*u + 108",
            "32*u^4 - 64*u^3 + 122*u^2 - 117*u + 36",
            "32*u^4 - 16*u^3 + 80*u^2 - 78*u + 18",
            "128*u^4 - 160*u^3 + 26*u^2 + 15*u",
            "288*u^4 - 288*u^3 + 90*u^2 - 9*u",
        ],
        base: "-80*u^4 + 148*u^3 - 65*u^2 - 12*u + 9",
        square: &["3", "4*u - 1"],
    },
    RawFamily {
        elements: [
            "352*u^4 - 244*u^3 - 129*u^2 + 122*u - 20",
            "4*u^6 + 16*u^5 + 48*u^4 + 48*u^3 - 164*u^2 + 104*u - 20",
            "4*u^6 - 24*u^5 + 112*u^4 - 120*u^3 + 47*u^2 - 14*u + 4",
            "16*u^6 - 16*u^5 - 32*u^4 + 100*u^3 - 105*u^2 + 58*u - 12",
            "36*u^6 - 96*u^5 + 112*u^4 - 88*u^3 + 48*u^2 - 16*u + 4",
        ],
        base: "-28*u^4 - 44*u^3 + 157*u^2 - 106*u + 21",
        square: &["2", "3*u^2 - u + 1", "u - 1"],
    },
    RawFamily {
        elements: [
            "-54*u^2 + 171*u - 90",
            "32*u^4 - 96*u^3 - 6*u^2 + 127*u - 30",
            "32*u^4 + 144*u^3 - 24*u^2 - 26*u - 18",
            "128*u^4 + 96*u^3 - 6*u^2 + 31*u - 6",
            "288*u^4 + 576*u^3 - 54*u^2 - 117*u - 18",
        ],
        base: "112*u^4 - 100*u^3 - 93*u^2 + 92*u - 11",
        square: &["3", "4*u + 1"],
    },
    RawFamily {
        elements: [
            "450*u^4 - 1665*u^3 + 2052*u^2 - 909*u + 72",
            "50*u^4 - 545*u^3 + 1092*u^2 - 317*u + 44",
            "800*u^4 - 350*u^3 + 30*u^2 - 158*u + 2",
            "1250*u^4 - 125*u^3 + 192*u^2 - 41*u + 20",
            "4050*u^4 - 405*u^3 - 648*u^2 - 81*u",
        ],
        base: "300*u^3 - 65*u^2 + 16*u + 1",
        square: &["9", "5*u + 1", "u - 1"],
    },
    RawFamily {
        elements: [
            "576*u^5 - 1296*u^4 + 288*u^3 + 1152*u^2 - 864*u + 144",
            "16*u^8 - 192*u^7 + 704*u^6 - 736*u^5 - 72*u^4 - 80*u^3 + 624*u^2 - 264*u + 81",
            "16*u^8 - 256*u^6 + 512*u^5 - 312*u^4 + 160*u^3 + 96*u^2 - 144*u + 9",
            "64*u^8 - 384*u^7 + 896*u^6 - 1024*u^5 + 528*u^4 - 128*u^3 + 288*u^2 + 48*u + 36",
            "144*u^8 - 576*u^7 + 576*u^6 - 288*u^5 + 504*u^4 + 144*u^3 + 144*u^2 + 72*u + 9",
        ],
        base: "4*u^4 - 20*u^3 + 13*u^2 + 12*u",
        square: &["12", "2*u^2 + 1", "2*u^2 - 4*u - 1", "u - 1"],
    },
    RawFamily {
        elements: [
            "25*u^2 + 30*u + 20",
            "4*u^2 + 24*u + 20",
            "9*u^2 - 2*u - 4",
            "u^2 + 14*u + 12",
            "16*u^2 - 4",
        ],
        base: "-40*u^3 - 19*u^2 + 38*u + 21",
        square: &["2"],
    },
    RawFamily {
        elements: [
            "324*u^4 + 423*u^2 - 198*u + 180",
            "64*u^4 + 320*u^3 - 52*u^2 - 248*u + 60",
            "100*u^4 - 256*u^3 + 239*u^2 + 106*u + 36",
            "4*u^4 + 128*u^3 - 49*u^2 - 86*u + 12",
            "144*u^4 - 576*u^3 + 432*u^2 + 288*u + 36",
        ],
        base: "-144*u^3 + 61*u^2 + 94*u - 11",
        square: &["6", "2*u^2 - 4*u - 1"],
    },
];

fn poly(s: &str) -> Polynomial {
    Polynomial::parse(s).expect("built-in polynomial")
}

pub fn table1_poly(i: usize) -> Result<Polynomial> {
    check_index(i)?;
    Ok(poly(TABLE1_POLYS[i - 1]))
}

pub fn check_index(i: usize) -> Result<()> {
    if (1..=8).contains(&i) {
        Ok(())
    } else {
        Err(Error::UnknownFamily(i))
    }
}

pub fn family(i: usize) -> Result<FamilyRecord> {
    check_index(i)?;
    let raw = &RAW[i - 1];
    Ok(FamilyRecord {
        index: i,
        elements: raw.elements.map(poly),
        base_poly: poly(raw.base),
        square_factor: raw
            .square
            .iter()
            .fold(Polynomial::one(), |acc, f| &acc * &poly(f)),
    })
}

pub fn all_families() -> Vec<FamilyRecord> {
    (1..=8)
        .map(|i| family(i).expect("index in range"))
        .collect()
}

impl FamilyRecord {
    pub fn q(&self) -> Polynomial {
        &self.base_poly * &self.square_factor.pow(2)
    }

    pub fn as_quintuple(&self) -> Quintuple<RationalFunction> {
        Quintuple {
            elements: self.elements.clone().map(RationalFunction::from),
            q: self.q().into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub index: usize,
    pub identities: QuintupleReport<RationalFunction>,
    /// Squarefree class of `q(u)`, which must equal the curve's class polynomial.
    pub q_class: Polynomial,
    pub table1: Polynomial,
}

impl FamilyReport {
    pub fn class_matches(&self) -> bool {
        self.q_class == self.table1
    }

    pub fn is_valid(&self) -> bool {
        self.identities.is_valid() && self.class_matches()
    }
}

/// Proves the ten pair conditions of family `i` as identities in ℚ(u) and
/// compares the class of `q(u)` with the curve's class polynomial.
pub fn family_verify_symbolic(i: usize) -> Result<FamilyReport> {
    let fam = family(i)?;
    let quint = fam.as_quintuple();
    let identities = verify_quintuple(&quint.elements, &quint.q);
    let q_class = quint.q.squarefree_class()?.representative;
    Ok(FamilyReport {
        index: i,
        identities,
        q_class,
        table1: table1_poly(i)?,
    })
}

/// Evaluates family `i` at `u0`. With `target_q`, requires
/// `P(u0)/target_q = y1²` and rescales by `η = 1/(y1·s(u0))` so the result
/// is a D(target_q)-quintuple.
pub fn family_instantiate(
    i: usize,
    u0: &Rational,
    target_q: Option<&Rational>,
) -> Result<Quintuple<Rational>> {
    let fam = family(i)?;
    let p0 = fam.base_poly.eval(u0);
    let s0 = fam.square_factor.eval(u0);
    if p0.is_zero() {
        return Err(Error::Degenerate(format!(
            "q({u0}) = 0: u0 is a root of {}",
            fam.base_poly
        )));
    }
    if s0.is_zero() {
        return Err(Error::Degenerate(format!(
            "q({u0}) = 0: the square factor {} vanishes",
            fam.square_factor
        )));
    }
    let elements = fam.elements.clone().map(|e| e.eval(u0));
    for (k, e) in elements.iter().enumerate() {
        if e.is_zero() {
            return Err(Error::Degenerate(format!(
                "element {} vanishes at u = {u0}",
                k + 1
            )));
        }
    }
    for a in 0..5 {
        for b in a + 1..5 {
            if elements[a] == elements[b] {
                return Err(Error::Degenerate(format!(
                    "elements {} and {} coincide at u = {u0} (both {})",
                    a + 1,
                    b + 1,
                    elements[a]
                )));
            }
        }
    }
    let quint = Quintuple {
        elements,
        q: &p0 * &s0 * &s0,
    };
    let Some(t) = target_q else { return Ok(quint) };
    if t.is_zero() {
        return Err(Error::Domain("target q must be nonzero".into()));
    }
    let ratio = &p0 / t;
    let y1 = match crate::arith::rational_square_root(&ratio) {
        Some(y) if y.is_positive() => y,
        _ => return Err(Error::NotOnTwist(ratio)),
    };
    let eta = (y1 * s0).recip();
    quint.scaled(&eta)
}

/// The D(q(u))-quintuple with fractional coefficients that arises when the
/// twist of curve 6 is written as `y²q = P(u)`; it is 1/16 of family 6.
pub fn fractional_family6() -> (Quintuple<RationalFunction>, Polynomial) {
    let r = |n: &str| RationalFunction::from(poly(n));
    let e1 = &(&(&r("9") * &r("u - 1").pow(3)) * &r("4*u - 1")) * &r("u + 1");
    let e2 = &r("u^4 - 6*u^3 + 5*u + 27/4") * &r("u^4 - 6*u^3 + 8*u^2 - 3*u + 3/4");
    let e3 = r("u^8 - 16*u^6 + 32*u^5 - 39/2*u^4 + 10*u^3 + 6*u^2 - 9*u + 9/16");
    let e4 = &r("4*u^4 - 16*u^3 + 14*u^2 + 4*u + 3") * &r("u^4 - 2*u^3 + 5/2*u^2 + 3/4");
    let e5 = &r("9") * &(&r("u^2 - 2*u - 1/2") * &r("u^2 + 1/2")).pow(2);
    let s = &(&poly("3*u - 3") * &poly("u^2 + 1/2")) * &poly("u^2 - 2*u - 1/2");
    let q = RationalFunction::from(&poly(TABLE1_POLYS[5]) * &s.pow(2));
    (
        Quintuple {
            elements: [e1, e2, e3, e4, e5],
            q,
        },
        s,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn family7_symbolic() {
        let r = family_verify_symbolic(7).unwrap();
        assert!(r.is_valid());
        assert_eq!(
            r.identities.witness(1, 2).unwrap(),
            &RationalFunction::from(poly("10*u^2 + 28*u + 22"))
        );
    }

    #[test]
    fn family6_symbolic() {
        let r = family_verify_symbolic(6).unwrap();
        assert!(r.is_valid());
        let fam = family(6).unwrap();
        let s = &(&(&poly("12") * &poly("2*u^2 + 1")) * &poly("2*u^2 - 4*u - 1")) * &poly("u - 1");
        assert_eq!(fam.q(), &poly("4*u^4 - 20*u^3 + 13*u^2 + 12*u") * &s.pow(2));
    }

    #[test]
    fn family1_symbolic() {
        let r = family_verify_symbolic(1).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.table1, poly("-1200*u^3 + 1645*u^2 - 410*u - 35"));
    }

    #[test]
    fn instantiate_examples() {
        let q = family_instantiate(7, &rat_int(2), None).unwrap();
        let want: Vec<Rational> = [180, 84, 28, 44, 60].iter().map(|&n| rat_int(n)).collect();
        assert_eq!(q.elements.to_vec(), want);
        assert_eq!(q.q, rat_int(-1196));
        assert_eq!(180 * 84 - 1196, 118 * 118);
        assert_eq!(180 * 28 - 1196, 62 * 62);
        assert!(q.verify().is_valid());

        let e = family_instantiate(6, &rat_int(1), None).unwrap_err();
        assert!(
            matches!(&e, Error::Degenerate(m) if m.contains("square factor")),
            "{e}"
        );
        let e = family_instantiate(7, &rat_int(0), None).unwrap_err();
        assert!(
            matches!(&e, Error::Degenerate(m) if m.contains("elements 1 and 2")),
            "{e}"
        );
        assert_eq!(
            family_instantiate(9, &rat_int(2), None),
            Err(Error::UnknownFamily(9))
        );
    }

    #[test]
    fn instantiate_with_target() {
        let q = family_instantiate(7, &rat_int(2), Some(&rat_int(-1196))).unwrap();
        assert_eq!(q.q, rat_int(-1196));
        assert_eq!(q.elements[0], rat_int(180));
        let q = family_instantiate(6, &rat_int(3), Some(&rat_int(-7))).unwrap();
        assert_eq!(q.q, rat_int(-7));
        assert!(q.verify().is_valid());
        // η = 1/(3·s6(3)) with s6(3) = 12·19·5·2 = 2280.
        let raw = family_instantiate(6, &rat_int(3), None).unwrap();
        assert_eq!(&raw.elements[0] * rat(1, 3 * 2280), q.elements[0]);
        assert!(matches!(
            family_instantiate(6, &rat_int(3), Some(&rat_int(7))),
            Err(Error::NotOnTwist(_))
        ));
    }

    #[test]
    fn fractional_family_is_scaled_family6() {
        let (frac, s) = fractional_family6();
        assert!(frac.verify().is_valid());
        let fam = family(6).unwrap();
        assert_eq!(fam.square_factor, s.scale(&rat_int(16)));
        let scaled = frac.scaled(&RationalFunction::from_int(16)).unwrap();
        assert_eq!(scaled, fam.as_quintuple());
    }

    #[test]
    fn instantiate_random_points() {
        for i in 1..=8 {
            let mut ok = 0;
            for n in -7i64..=7 {
                for d in [1i64, 2, 3, 5] {
                    if let Ok(q) = family_instantiate(i, &rat(n, d), None) {
                        assert!(q.verify().is_valid(), "family {i} at {n}/{d}");
                        ok += 1;
                    }
                }
            }
            assert!(ok >= 20, "family {i}: only {ok} samples");
        }
    }
}
