//! Residue-class bookkeeping mod 394680, point search on the twists
//! `q·s² = P_i(u)`, and turning found points into quintuples.

use std::collections::BTreeSet;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::arith::{factor_u64, lcm, rational_square_root, Integer, Rational, Sign};
use crate::error::{Error, Result};
use crate::families::{family_instantiate, table1_poly};
use crate::quintuple::{verify_quintuple, Quintuple};
use crate::twist::{good_classes, quartic_to_weierstrass, TableSet};

/// The common modulus of the eight periods, `2³·3·5·11·13·23`.
pub const DENSITY_MODULUS: u64 = 394680;

/// A set of residues mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClassSet {
    modulus: u64,
    members: Vec<u64>,
}

impl ResidueClassSet {
    pub fn new(modulus: u64, members: impl IntoIterator<Item = u64>) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let set: BTreeSet<u64> = members
            .into_iter()
            .inspect(|&r| assert!(r < modulus))
            .collect();
        ResidueClassSet {
            modulus,
            members: set.into_iter().collect(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sorted ascending.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: u64) -> bool {
        self.members.binary_search(&(r % self.modulus)).is_ok()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.modulus as usize];
        for &r in &self.members {
            m[r as usize] = true;
        }
        m
    }
}

/// `p²` for each prime with `p² | m`.
fn square_divisors(m: u64) -> Vec<u64> {
    factor_u64(m)
        .into_iter()
        .filter(|&(_, e)| e >= 2)
        .map(|(p, _)| p * p)
        .collect()
}

/// Residues mod `m` that contain squarefree integers.
pub fn admissible_classes(m: u64) -> ResidueClassSet {
    let squares = square_divisors(m);
    ResidueClassSet::new(m, (0..m).filter(|r| squares.iter().all(|s| r % s != 0)))
}

/// For each residue mod `g = gcd(modulus, N)`, whether every admissible lift
/// to `lcm(modulus, N)` lands in `good`.
fn coverage_mod_gcd(good: &ResidueClassSet, modulus: u64) -> (u64, Vec<bool>) {
    let n = good.modulus();
    let g = n.gcd(&modulus);
    let big = lcm(n, modulus);
    // Square divisors of the lcm that the residue mod N alone decides.
    let squares: Vec<u64> = square_divisors(big)
        .into_iter()
        .filter(|s| n.is_multiple_of(*s))
        .collect();
    let mask = good.mask();
    let cover = (0..g)
        .map(|r0| {
            (0..n / g)
                .map(|k| r0 + k * g)
                .filter(|r| squares.iter().all(|s| r % s != 0))
                .all(|r| mask[r as usize])
        })
        .collect();
    (g, cover)
}

#[derive(Clone, Debug)]
pub struct DensityResult {
    pub sign: Sign,
    pub curves: Vec<usize>,
    pub modulus: u64,
    pub admissible: usize,
    pub covered: ResidueClassSet,
    /// For each covered residue (same order as `covered.members()`), the
    /// first curve that covers it.
    pub witnesses: Vec<usize>,
}

impl DensityResult {
    pub fn count(&self) -> usize {
        self.covered.len()
    }
}

/// Union of per-curve good classes, lifted to a common modulus. A residue
/// `R` counts for curve `i` only when every admissible integer class
/// `≡ R` is good for `i`; when `N_i | modulus` this is just `R mod N_i` good.
pub fn density_union_with(
    classes: &[(usize, ResidueClassSet)],
    sign: Sign,
    modulus: u64,
) -> DensityResult {
    let covers: Vec<(usize, u64, Vec<bool>)> = classes
        .iter()
        .map(|(i, set)| {
            let (g, cover) = coverage_mod_gcd(set, modulus);
            (*i, g, cover)
        })
        .collect();
    let admissible = admissible_classes(modulus);
    let mut members = vec![];
    let mut witnesses = vec![];
    for &r in admissible.members() {
        if let Some((i, _, _)) = covers.iter().find(|(_, g, cover)| cover[(r % g) as usize]) {
            members.push(r);
            witnesses.push(*i);
        }
    }
    DensityResult {
        sign,
        curves: classes.iter().map(|(i, _)| *i).collect(),
        modulus,
        admissible: admissible.len(),
        covered: ResidueClassSet { modulus, members },
        witnesses,
    }
}

pub fn density_union(tables: &TableSet, sign: Sign, curves: &[usize]) -> Result<DensityResult> {
    let classes = curves
        .iter()
        .map(|&i| good_classes(tables, i, sign).map(|s| (i, s)))
        .collect::<Result<Vec<_>>>()?;
    Ok(density_union_with(&classes, sign, DENSITY_MODULUS))
}

/// A rational point `(u, s)` on `q·s² = P_i(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticPoint {
    pub u: Rational,
    pub s: Rational,
    pub q: Integer,
    pub curve: usize,
}

impl QuarticPoint {
    pub fn new(u: Rational, s: Rational, q: impl Into<Integer>, curve: usize) -> Result<Self> {
        let pt = QuarticPoint {
            u,
            s,
            q: q.into(),
            curve,
        };
        let lhs = Rational::from_integer(pt.q.clone()) * &pt.s * &pt.s;
        if lhs != table1_poly(curve)?.eval(&pt.u) {
            return Err(Error::OffCurve);
        }
        Ok(pt)
    }

    pub fn is_on_curve(&self) -> bool {
        table1_poly(self.curve)
            .map(|p| Rational::from_integer(self.q.clone()) * &self.s * &self.s == p.eval(&self.u))
            .unwrap_or(false)
    }
}

/// Rationals `m/n` in lowest terms with `max(|m|, n) = h`, ordered by `|m|`,
/// then `n`, positive before negative.
fn rationals_of_height(h: i64) -> Vec<Rational> {
    let mut out = vec![];
    for m in 0..=h {
        for n in 1..=h {
            if m.max(n) != h || m.gcd(&n) != 1 {
                continue;
            }
            out.push(Rational::new(m.into(), n.into()));
            if m != 0 {
                out.push(Rational::new((-m).into(), n.into()));
            }
        }
    }
    out
}

/// First `u` of height at most `bound` with `P_i(u)/q` a nonzero square,
/// skipping values where family `i` degenerates.
pub fn find_point(q: i64, i: usize, bound: u64) -> Result<Option<QuarticPoint>> {
    if q == 0 {
        return Err(Error::ZeroInput);
    }
    let p = table1_poly(i)?;
    let qr = Rational::from_integer(q.into());
    for h in 1..=bound as i64 {
        for u in rationals_of_height(h) {
            let v = p.eval(&u) / &qr;
            if v.is_zero() || v.is_negative() {
                continue;
            }
            let Some(s) = rational_square_root(&v) else {
                continue;
            };
            if family_instantiate(i, &u, Some(&qr)).is_err() {
                continue;
            }
            return Ok(Some(QuarticPoint {
                u,
                s,
                q: q.into(),
                curve: i,
            }));
        }
    }
    Ok(None)
}

/// Doubles the point on the Weierstrass model of the twist and maps back.
pub fn chord_tangent_next(pt: &QuarticPoint) -> Result<QuarticPoint> {
    if pt.s.is_zero() {
        return Err(Error::TwoTorsion);
    }
    let model = quartic_to_weierstrass(&table1_poly(pt.curve)?, pt.q.clone())?;
    let image = model.to_curve(&pt.u, &pt.s)?;
    match image.xy() {
        None => return Err(Error::TwoTorsion),
        Some((_, y)) if y.is_zero() => return Err(Error::TwoTorsion),
        Some(_) => {}
    }
    let doubled = model.weierstrass().double(&image);
    let (u, s) = model.from_curve(&doubled)?;
    if s.is_zero() {
        return Err(Error::TwoTorsion);
    }
    if u == pt.u {
        return Err(Error::Degenerate(format!(
            "doubling returned the same u = {u}"
        )));
    }
    Ok(QuarticPoint {
        u,
        s: s.abs(),
        q: pt.q.clone(),
        curve: pt.curve,
    })
}

/// The family-`i` quintuple at `u`, rescaled so that its `q` is `pt.q`.
pub fn emit_quintuple(pt: &QuarticPoint) -> Result<Quintuple<Rational>> {
    if pt.s.is_zero() {
        return Err(Error::Degenerate(
            "u is a root of P, so q would be 0".into(),
        ));
    }
    let quint = family_instantiate(pt.curve, &pt.u, Some(&Rational::from_integer(pt.q.clone())))?;
    let report = verify_quintuple(&quint.elements, &quint.q);
    if !report.is_valid() {
        return Err(Error::Degenerate(format!(
            "emitted tuple fails pairs {:?}",
            report.failing_pairs()
        )));
    }
    Ok(quint)
}
