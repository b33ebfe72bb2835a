use num_bigint::BigInt;
use num_traits::One;

use crate::arith::Integer;
use crate::error::Result;
use crate::families::{family, table1_poly, FamilyRecord};
use crate::polyfield::Polynomial;

use super::model::IntegerCurve;

/// Everything known about one curve `E^(i): y² = P_i(u)`.
#[derive(Clone, Debug)]
pub struct CurveRecord {
    pub index: usize,
    pub a: i64,
    pub b: i64,
    pub delta_sign: i8,
    pub delta_factors: &'static [(u64, u32)],
    /// Conductor, kept for display only.
    pub conductor: &'static [(u64, u32)],
    /// Period of `t ↦ W(E_t)` on squarefree `t` of fixed sign.
    pub period: u64,
    /// Periods of the local factors `W_p`, keyed by prime.
    pub local_periods: &'static [(u64, u64)],
    pub jacobi_period: u64,
}

pub const RECORDS: [CurveRecord; 8] = [
    CurveRecord {
        index: 1,
        a: -33210675,
        b: 6964980750,
        delta_sign: 1,
        delta_factors: &[(2, 20), (3, 18), (5, 8), (11, 4)],
        conductor: &[(2, 1), (3, 1), (5, 2), (11, 1)],
        period: 6600,
        local_periods: &[(2, 8), (3, 3), (5, 25), (11, 11)],
        jacobi_period: 132,
    },
    CurveRecord {
        index: 2,
        a: -24651,
        b: 1453194,
        delta_sign: 1,
        delta_factors: &[(2, 10), (3, 20), (13, 1)],
        conductor: &[(2, 4), (3, 1), (13, 1)],
        period: 312,
        local_periods: &[(2, 8), (3, 3), (13, 13)],
        jacobi_period: 24,
    },
    CurveRecord {
        index: 3,
        a: -97227,
        b: 10789254,
        delta_sign: 1,
        delta_factors: &[(2, 16), (3, 16), (5, 2), (11, 2)],
        conductor: &[(2, 1), (3, 1), (5, 1), (11, 1)],
        period: 1320,
        local_periods: &[(2, 8), (3, 3), (5, 5), (11, 11)],
        jacobi_period: 132,
    },
    CurveRecord {
        index: 4,
        a: -7155,
        b: 187650,
        // The model's discriminant is positive.
        delta_sign: 1,
        delta_factors: &[(2, 10), (3, 12), (5, 3), (11, 2)],
        conductor: &[(2, 4), (5, 2), (11, 1)],
        period: 88,
        local_periods: &[(2, 8), (3, 3), (5, 1), (11, 11)],
        jacobi_period: 132,
    },
    CurveRecord {
        index: 5,
        a: 274725,
        b: 126596250,
        delta_sign: -1,
        delta_factors: &[(2, 10), (3, 18), (5, 6), (11, 3)],
        conductor: &[(2, 4), (3, 1), (5, 2), (11, 2)],
        period: 264,
        local_periods: &[(2, 8), (3, 3), (5, 1), (11, 1)],
        jacobi_period: 132,
    },
    CurveRecord {
        index: 6,
        a: -24003,
        b: 1296702,
        delta_sign: 1,
        delta_factors: &[(2, 14), (3, 18), (5, 2)],
        conductor: &[(2, 1), (3, 1), (5, 1)],
        period: 120,
        local_periods: &[(2, 8), (3, 3), (5, 5)],
        jacobi_period: 12,
    },
    CurveRecord {
        index: 7,
        a: -132867,
        b: 17106174,
        delta_sign: 1,
        delta_factors: &[(2, 16), (3, 14), (5, 4), (11, 2)],
        conductor: &[(2, 1), (3, 1), (5, 1), (11, 1)],
        period: 1320,
        local_periods: &[(2, 8), (3, 3), (5, 5), (11, 11)],
        jacobi_period: 132,
    },
    CurveRecord {
        index: 8,
        a: -1196883,
        b: 46619118,
        delta_sign: 1,
        delta_factors: &[(2, 18), (3, 22), (5, 2), (23, 2)],
        conductor: &[(2, 1), (3, 1), (5, 1), (23, 1)],
        period: 2760,
        local_periods: &[(2, 8), (3, 3), (5, 5), (23, 23)],
        jacobi_period: 552,
    },
];

pub fn record(i: usize) -> Result<&'static CurveRecord> {
    crate::families::check_index(i)?;
    Ok(&RECORDS[i - 1])
}

impl CurveRecord {
    pub fn model(&self) -> IntegerCurve {
        IntegerCurve::new(self.a, self.b).expect("stored models are nonsingular")
    }

    pub fn base_poly(&self) -> Polynomial {
        table1_poly(self.index).expect("index in range")
    }

    pub fn family(&self) -> FamilyRecord {
        family(self.index).expect("index in range")
    }

    /// The discriminant as stored, `± ∏ p^e`.
    pub fn stored_delta(&self) -> Integer {
        let mag = self
            .delta_factors
            .iter()
            .fold(Integer::one(), |acc, &(p, e)| acc * BigInt::from(p).pow(e));
        if self.delta_sign < 0 {
            -mag
        } else {
            mag
        }
    }

    /// Primes at least 5 dividing Δ: the places with their own factor in
    /// the root-number product.
    pub fn large_bad_primes(&self) -> Vec<u64> {
        self.delta_factors
            .iter()
            .map(|&(p, _)| p)
            .filter(|&p| p >= 5)
            .collect()
    }

    /// Product of the distinct primes dividing `6Δ`.
    pub fn radical_6delta(&self) -> u64 {
        6 * self.large_bad_primes().iter().product::<u64>()
    }

    pub fn local_period(&self, p: u64) -> Option<u64> {
        self.local_periods
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, m)| m)
    }

    pub fn describe_factorization(f: &[(u64, u32)]) -> String {
        f.iter()
            .map(|&(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}
