//! D(q)-tuples: verification, scaling, regular extension and the quintuple
//! constructor in the parameters (p, r, c, x), plus its one-parameter
//! specialization that leads to the quartic curve 𝒞.
//!
//! Everything is generic over [`Field`], so the same code runs on numbers
//! and on elements of ℚ(u).

use std::fmt;

use crate::error::{Error, Result};
use crate::polyfield::{Field, Polynomial, RationalFunction};

/// The parameters of the constructor. The derived quantities are
/// `a = p − r`, `d = p + r`, `k = pr`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoint<F> {
    pub p: F,
    pub r: F,
    pub c: F,
    pub x: F,
}

impl<F: Field> ParamPoint<F> {
    pub fn new(p: F, r: F, c: F, x: F) -> Self {
        ParamPoint { p, r, c, x }
    }

    /// `c² + x² − p² − r²`.
    pub fn alpha_denominator(&self) -> F {
        sq(&self.c) + sq(&self.x) - sq(&self.p) - sq(&self.r)
    }

    pub fn alpha(&self) -> Result<F> {
        let den = self.alpha_denominator();
        if den.is_zero() {
            return Err(Error::Degenerate("c² + x² − p² − r² vanishes".into()));
        }
        Ok((sq(&self.c) - sq(&self.r)) * (sq(&self.c) - sq(&self.p)) / den)
    }
}

fn sq<F: Field>(a: &F) -> F {
    a.clone() * a
}

/// The value of b² forced by the construction:
/// `p² + r² − x² + (p² − x²)(r² − x²)/(c² + x² − p² − r²)`.
pub fn b_squared_relation<F: Field>(pt: &ParamPoint<F>) -> Result<F> {
    let den = pt.alpha_denominator();
    if den.is_zero() {
        return Err(Error::Degenerate("p² + r² − c² − x² vanishes".into()));
    }
    let (p2, r2, x2) = (sq(&pt.p), sq(&pt.r), sq(&pt.x));
    Ok(p2.clone() + &r2 - &x2 + (p2 - &x2) * (r2 - x2) / den)
}

/// Five elements and the q they are meant to be a D(q)-tuple for.
#[derive(Clone, Debug, PartialEq)]
pub struct Quintuple<F> {
    pub elements: [F; 5],
    pub q: F,
}

impl<F: Field> Quintuple<F> {
    pub fn verify(&self) -> QuintupleReport<F> {
        verify_quintuple(&self.elements, &self.q)
    }

    pub fn scaled(&self, rho: &F) -> Result<Self> {
        let (elements, q) = scale_tuple(&self.elements, &self.q, rho)?;
        Ok(Quintuple {
            elements: elements.try_into().expect("five elements"),
            q,
        })
    }
}

impl<F: Field> fmt::Display for Quintuple<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) q={}", e.join(", "), self.q)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairCheck<F> {
    pub i: usize,
    pub j: usize,
    pub value: F,
    pub witness: Option<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuintupleReport<F> {
    pub pairs: Vec<PairCheck<F>>,
    pub distinct: bool,
    pub nonzero: bool,
    pub q_nonzero: bool,
}

impl<F: Field> QuintupleReport<F> {
    pub fn is_valid(&self) -> bool {
        self.distinct && self.nonzero && self.q_nonzero && self.failing_pairs().is_empty()
    }

    pub fn failing_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .filter(|c| c.witness.is_none())
            .map(|c| (c.i, c.j))
            .collect()
    }

    pub fn square_count(&self) -> usize {
        self.pairs.iter().filter(|c| c.witness.is_some()).count()
    }

    pub fn witness(&self, i: usize, j: usize) -> Option<&F> {
        self.pairs
            .iter()
            .find(|c| (c.i, c.j) == (i, j))
            .and_then(|c| c.witness.as_ref())
    }
}

/// Checks every pair `e_i·e_j + q` for squareness, and the distinct, nonzero
/// and `q ≠ 0` conditions. Indices in the report are 1-based.
pub fn verify_quintuple<F: Field>(elements: &[F], q: &F) -> QuintupleReport<F> {
    let mut pairs = vec![];
    let mut distinct = true;
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if elements[i] == elements[j] {
                distinct = false;
            }
            let value = elements[i].clone() * &elements[j] + q;
            let witness = value.sqrt();
            pairs.push(PairCheck {
                i: i + 1,
                j: j + 1,
                value,
                witness,
            });
        }
    }
    QuintupleReport {
        pairs,
        distinct,
        nonzero: elements.iter().all(|e| !e.is_zero()),
        q_nonzero: !q.is_zero(),
    }
}

/// Multiplies every element by ρ; the result is a D(qρ²)-tuple.
pub fn scale_tuple<F: Field>(elements: &[F], q: &F, rho: &F) -> Result<(Vec<F>, F)> {
    if rho.is_zero() {
        return Err(Error::Domain("scaling factor must be nonzero".into()));
    }
    let scaled = elements.iter().map(|e| e.clone() * rho).collect();
    Ok((scaled, q.clone() * rho * rho))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularExtension<F> {
    pub a: F,
    pub d: F,
    pub k: F,
}

impl<F: Field> RegularExtension<F> {
    /// True when A or D is zero and so cannot join a tuple.
    pub fn is_degenerate(&self) -> bool {
        self.a.is_zero() || self.d.is_zero()
    }
}

/// Extends the pair {B, C} with `BC + αx² = k²` by `A = B + C − 2k` and
/// `D = B + C + 2k`.
pub fn regular_extension<F: Field>(b: &F, c: &F, alpha_x2: &F) -> Result<RegularExtension<F>> {
    let v = b.clone() * c + alpha_x2;
    let k = v.sqrt().ok_or_else(|| Error::NotAPair(v.to_string()))?;
    let two_k = k.clone() + &k;
    let s = b.clone() + c;
    Ok(RegularExtension {
        a: s.clone() - &two_k,
        d: s + two_k,
        k,
    })
}

/// Which of the three side conditions of the constructor hold.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionStatus<F> {
    pub distinct_nonzero: bool,
    pub alpha_nonzero: bool,
    /// Square root of `AD + αx²` when it exists.
    pub ad_witness: Option<F>,
}

impl<F> ConstructionStatus<F> {
    pub fn is_quintuple(&self) -> bool {
        self.distinct_nonzero && self.alpha_nonzero && self.ad_witness.is_some()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Construction<F> {
    pub quintuple: Quintuple<F>,
    pub alpha: F,
    pub b: F,
    pub status: ConstructionStatus<F>,
    pub report: QuintupleReport<F>,
}

/// Builds `(A, B, C, D, x²)` with `A = a² − α`, … and `q = αx²`. The result
/// is returned even when `AD + αx²` is not a square, since that near miss is
/// exactly what the quartic curve 𝒞 is built to repair.
pub fn construct_quintuple<F: Field>(pt: &ParamPoint<F>) -> Result<Construction<F>> {
    let alpha = pt.alpha()?;
    if alpha.is_zero() {
        return Err(Error::Degenerate("α = 0 (c² = r² or c² = p²)".into()));
    }
    let b2 = b_squared_relation(pt)?;
    let b = b2
        .sqrt()
        .ok_or_else(|| Error::NotConstructible(b2.to_string()))?;
    let a = pt.p.clone() - &pt.r;
    let d = pt.p.clone() + &pt.r;
    let elements = [
        sq(&a) - &alpha,
        sq(&b) - &alpha,
        sq(&pt.c) - &alpha,
        sq(&d) - &alpha,
        sq(&pt.x),
    ];
    let q = alpha.clone() * sq(&pt.x);
    let report = verify_quintuple(&elements, &q);
    let status = ConstructionStatus {
        distinct_nonzero: report.distinct && report.nonzero,
        alpha_nonzero: true,
        ad_witness: report.witness(1, 4).cloned(),
    };
    Ok(Construction {
        quintuple: Quintuple { elements, q },
        alpha,
        b,
        status,
        report,
    })
}

/// α after setting `r = 1`, `x = c + p + 1`: `½(c − p)(c − 1)`.
pub fn specialize_alpha<F: Field>(c: &F, p: &F) -> F {
    (c.clone() - p) * (c.clone() - F::one()) / F::from_int(2)
}

/// The rational parametrization of the conic
/// `b² = p² + (1 − c)/2·p − (c² + c)/2 + 1` through `(p, b) = (c, 1)`.
pub fn conic_parametrize<F: Field>(u: &F, c: &F) -> Result<(F, F)> {
    let den = sq(u) - F::one();
    if den.is_zero() {
        return Err(Error::ParametrizationPole(u.to_string()));
    }
    let two = F::from_int(2);
    let half = F::one() / &two;
    let p = (sq(u) * c + c.clone() / &two + &half - two.clone() * u) / &den;
    let b = (sq(u) - F::from_int(3) * u * c / &two - u.clone() / &two + F::one()) / den;
    Ok((p, b))
}

/// Right-hand side of the conic in `p`.
pub fn conic_rhs<F: Field>(p: &F, c: &F) -> F {
    let two = F::from_int(2);
    sq(p) + (F::one() - c) / &two * p - (sq(c) + c) / two + F::one()
}

/// The specialized parameter point `(p, 1, c, c + p + 1)`.
pub fn specialized_point<F: Field>(u: &F, c: &F) -> Result<ParamPoint<F>> {
    let (p, _) = conic_parametrize(u, c)?;
    let x = c.clone() + &p + F::one();
    Ok(ParamPoint::new(p, F::one(), c.clone(), x))
}

fn poly(s: &str) -> Polynomial {
    Polynomial::parse(s).expect("built-in polynomial")
}

fn ratfunc(num: &str, den: &str) -> RationalFunction {
    RationalFunction::new(poly(num), poly(den)).expect("nonzero denominator")
}

/// Coefficients `f0, …, f4` of the quartic `z² = f4·c⁴ + f3·c³ + … + f0`
/// over ℚ(u) cut out by the condition that `AD + αx²` be a square.
pub fn curve_c_coefficients() -> [RationalFunction; 5] {
    let d1 = "u^2 - 1/4";
    let d2 = "u^4 - 1/2*u^2 + 1/16";
    let f4 = ratfunc("u^4 + u^2 + 7", "1");
    let f3 =
        &ratfunc("-3", d1) * &RationalFunction::from(&poly("u^3 + 3*u - 1") * &poly("2*u^2 + 1"));
    let f2 = ratfunc(
        "-16*u^8 + 16*u^7 + 242*u^6 - 76*u^5 + 199*u^4 - 166*u^3 + 47*u^2 + 10*u - 13",
        "8*u^4 - 4*u^2 + 1/2",
    );
    let f1 = &ratfunc("3", d2)
        * &RationalFunction::from(
            &poly("u^3 + 3*u^2 + 1/2") * &poly("u^4 - 11/2*u^3 + 4*u^2 - 3/2*u + 1/2"),
        );
    let f0 = ratfunc(
        "16*u^8 + 16*u^7 - 116*u^6 + 40*u^5 + 409*u^4 - 308*u^3 + 25*u^2 - 20*u + 19",
        "16*u^4 - 8*u^2 + 1",
    );
    [f0, f1, f2, f3, f4]
}

/// `Σ f_i · c^i`.
pub fn curve_c_quartic(c: &RationalFunction) -> RationalFunction {
    curve_c_coefficients()
        .iter()
        .rev()
        .fold(RationalFunction::from_int(0), |acc, f| &(&acc * c) + f)
}

/// The rational point `(1, 4u(u − 1)²/(u² − 1/4))` of 𝒞.
pub fn curve_c_base_point() -> (RationalFunction, RationalFunction) {
    let z = ratfunc("4*u^3 - 8*u^2 + 4*u", "u^2 - 1/4");
    (RationalFunction::from_int(1), z)
}
