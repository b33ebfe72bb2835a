use std::collections::HashMap;
use std::fmt;

use num_traits::Signed;
use rayon::prelude::*;

use crate::arith::{
    int, is_squarefree, jacobi_symbol, residue, smallest_squarefree_in_class, strip_by_modulus,
    Integer, Sign,
};
use crate::density::{admissible_classes, ResidueClassSet};
use crate::error::{Error, Result};

use super::model::reduce_abc;
use super::records::{record, CurveRecord};
use super::tables::TableSet;

/// Where a local factor came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Good reduction of `E_t` at `p`.
    Good,
    /// Multiplicative reduction: split or nonsplit decided by a Legendre symbol.
    Formula,
    Table,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Good => "good",
            Source::Formula => "formula",
            Source::Table => "table",
        })
    }
}

fn check_t(t: i64) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroInput);
    }
    if !is_squarefree(t) {
        return Err(Error::NotSquarefree(t.to_string()));
    }
    Ok(())
}

/// `W_p(E_t)` for `p ≥ 5`, along with how it was obtained.
pub fn local_root_number_with_source(
    rec: &CurveRecord,
    tables: &TableSet,
    p: u64,
    t: i64,
) -> Result<(i8, Source)> {
    check_t(t)?;
    if p < 5 || !crate::arith::is_prime(p) {
        return Err(Error::Domain(format!(
            "expected a prime at least 5, got {p}"
        )));
    }
    let inv = rec.model().invariants()?;
    let p_divides_t = t % p as i64 == 0;
    let Some(v_delta) = crate::arith::valuation(&inv.delta, p).filter(|&v| v > 0) else {
        // Good reduction for E, so E_t is good or has type I0* at p; in the
        // latter case W_p = (−1/p).
        return Ok(if p_divides_t {
            (jacobi_symbol(&int(-1), &int(p as i64))?, Source::Good)
        } else {
            (1, Source::Good)
        });
    };
    let (a, b, c) = reduce_abc(
        crate::arith::valuation(&inv.c4, p),
        crate::arith::valuation(&inv.c6, p),
        Some(v_delta),
    );
    let multiplicative = a == Some(0) && b == Some(0) && c.is_some_and(|c| c > 0);
    if multiplicative && !p_divides_t {
        let k = (v_delta - c.unwrap_or(0)) / 12;
        let c6 = &inv.c6 / Integer::from(p).pow(6 * k);
        let split = jacobi_symbol(&(-c6 * Integer::from(t)), &int(p as i64))? == 1;
        return Ok((if split { -1 } else { 1 }, Source::Formula));
    }
    Ok((tables.get(rec.index, p)?.lookup(t)?, Source::Table))
}

pub fn local_root_number(rec: &CurveRecord, tables: &TableSet, p: u64, t: i64) -> Result<i8> {
    local_root_number_with_source(rec, tables, p, t).map(|(w, _)| w)
}

/// `W_2(E_t)` or `W_3(E_t)`, always from a table.
pub fn local_root_number_23(rec: &CurveRecord, tables: &TableSet, p: u64, t: i64) -> Result<i8> {
    if p != 2 && p != 3 {
        return Err(Error::Domain(format!("expected p = 2 or 3, got {p}")));
    }
    if t != 0 && t % 4 == 0 {
        return Err(Error::NonSquarefreeClass(t));
    }
    check_t(t)?;
    tables.get(rec.index, p)?.lookup(t)
}

/// `(−1 / |t_(d)|)` where `t_(d)` is `t` with every prime factor of `d`
/// removed.
pub fn jacobi_factor(t: i64, d: u64) -> Result<i8> {
    if t == 0 {
        return Err(Error::ZeroInput);
    }
    let stripped = strip_by_modulus(&Integer::from(t), 2 * d)?.abs();
    jacobi_symbol(&int(-1), &stripped)
}

/// Every factor of the product formula for one `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootNumberBreakdown {
    pub curve: usize,
    pub t: i64,
    pub w2: i8,
    pub w3: i8,
    pub jacobi: i8,
    pub others: Vec<(u64, i8, Source)>,
    pub product: i8,
}

pub fn root_number_breakdown(
    rec: &CurveRecord,
    tables: &TableSet,
    t: i64,
) -> Result<RootNumberBreakdown> {
    let w2 = local_root_number_23(rec, tables, 2, t)?;
    let w3 = local_root_number_23(rec, tables, 3, t)?;
    let jacobi = jacobi_factor(t, rec.radical_6delta())?;
    let others = rec
        .large_bad_primes()
        .into_iter()
        .map(|p| local_root_number_with_source(rec, tables, p, t).map(|(w, s)| (p, w, s)))
        .collect::<Result<Vec<_>>>()?;
    let product = others
        .iter()
        .fold(-w2 * w3 * jacobi, |acc, &(_, w, _)| acc * w);
    Ok(RootNumberBreakdown {
        curve: rec.index,
        t,
        w2,
        w3,
        jacobi,
        others,
        product,
    })
}

/// `W(E^(i)_t) = −W_2·W_3·(−1/|t_(6Δ)|)·∏_{p | Δ, p ≥ 5} W_p`.
pub fn global_root_number(tables: &TableSet, i: usize, t: i64) -> Result<i8> {
    Ok(root_number_breakdown(record(i)?, tables, t)?.product)
}

/// Residues `r mod N_i` whose twists have root number −1, judged at the
/// smallest squarefree `t ≡ r` of the given sign.
pub fn good_classes(tables: &TableSet, i: usize, sign: Sign) -> Result<ResidueClassSet> {
    let rec = record(i)?;
    let n = rec.period;
    let admissible = admissible_classes(n);
    let flags = admissible
        .members()
        .par_iter()
        .map(|&r| {
            let t = smallest_squarefree_in_class(r, n, sign)?;
            Ok((r, root_number_breakdown(rec, tables, t)?.product == -1))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ResidueClassSet::new(
        n,
        flags.into_iter().filter(|&(_, g)| g).map(|(r, _)| r),
    ))
}

/// Outcome of a periodicity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodCheck {
    pub curve: usize,
    pub sign: Sign,
    pub modulus: u64,
    pub bound: u64,
    pub checked: usize,
    /// Two `t ≡ t′` with different root numbers.
    pub witness: Option<(i64, i64)>,
}

impl PeriodCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks that `W(E_t)` depends only on `t mod modulus` among squarefree `t`
/// of one sign with `|t| ≤ bound`.
pub fn verify_period(
    tables: &TableSet,
    i: usize,
    sign: Sign,
    bound: u64,
    modulus: u64,
) -> Result<PeriodCheck> {
    let rec = record(i)?;
    if modulus == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    let values = (1..=bound as i64)
        .into_par_iter()
        .map(|k| sign.apply(k))
        .filter(|&t| is_squarefree(t))
        .map(|t| root_number_breakdown(rec, tables, t).map(|b| (t, b.product)))
        .collect::<Result<Vec<_>>>()?;
    let mut first: HashMap<u64, (i64, i8)> = HashMap::new();
    let mut witness = None;
    for &(t, w) in &values {
        let r = residue(t, modulus);
        match first.get(&r) {
            Some(&(t0, w0)) if w0 != w => {
                witness = Some((t0, t));
                break;
            }
            Some(_) => {}
            None => {
                first.insert(r, (t, w));
            }
        }
    }
    Ok(PeriodCheck {
        curve: i,
        sign,
        modulus,
        bound,
        checked: values.len(),
        witness,
    })
}
