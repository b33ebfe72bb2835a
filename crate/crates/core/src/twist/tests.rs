use std::collections::HashMap;
use std::path::PathBuf;

use num_traits::Signed;
use proptest::prelude::*;

use super::*;
use crate::arith::{int, is_squarefree, Integer, Sign};
use crate::error::Error;

fn tables() -> TableSet {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../tables");
    TableSet::load_dir(&dir).unwrap()
}

fn e6() -> &'static CurveRecord {
    record(6).unwrap()
}

const E6_PLUS: [u64; 47] = [
    6, 7, 9, 11, 14, 15, 22, 26, 30, 35, 39, 41, 43, 50, 51, 53, 54, 58, 59, 61, 65, 66, 67, 71,
    73, 74, 75, 77, 81, 82, 85, 86, 89, 90, 93, 95, 97, 99, 103, 105, 109, 110, 111, 114, 117, 118,
    119,
];

#[test]
fn stored_discriminants_match_models() {
    for rec in &RECORDS {
        assert_eq!(
            rec.model().discriminant(),
            rec.stored_delta(),
            "curve {}",
            rec.index
        );
    }
}

#[test]
fn j_invariants_distinct_and_generic() {
    let js: Vec<_> = RECORDS
        .iter()
        .map(|r| r.model().invariants().unwrap().j)
        .collect();
    for (a, ja) in js.iter().enumerate() {
        assert!(!num_traits::Zero::is_zero(ja));
        assert_ne!(ja, &crate::arith::rat_int(1728));
        for jb in &js[a + 1..] {
            assert_ne!(ja, jb);
        }
    }
}

#[test]
fn table1_models_have_matching_j() {
    // The base quartic twisted by 1 is a model of the same curve.
    for rec in &RECORDS {
        let m = quartic_to_weierstrass(&rec.base_poly(), 1).unwrap();
        assert_eq!(
            m.curve.invariants().unwrap().j,
            rec.model().invariants().unwrap().j,
            "curve {}",
            rec.index
        );
    }
}

#[test]
fn periods_divide_folded_local_periods() {
    // The product of the local factors is periodic with the lcm of their
    // periods; cancellation between factors can make N_i smaller (E4: 88).
    for rec in &RECORDS {
        let l = rec
            .local_periods
            .iter()
            .fold(rec.jacobi_period, |acc, &(_, m)| crate::arith::lcm(acc, m));
        assert_eq!(l % rec.period, 0, "curve {}", rec.index);
    }
}

#[test]
fn tables_cover_every_needed_prime() {
    let t = tables();
    for rec in &RECORDS {
        for p in [2, 3].into_iter().chain(rec.large_bad_primes()) {
            let table = t.get(rec.index, p).unwrap();
            let local = rec.local_period(p).unwrap();
            assert_eq!(local % table.modulus, 0, "curve {} p {}", rec.index, p);
        }
    }
    assert_eq!(t.get(6, 2).unwrap().provenance, Provenance::Paper);
}

#[test]
fn e6_local_examples() {
    let t = tables();
    assert_eq!(local_root_number(e6(), &t, 5, 7).unwrap(), -1);
    assert_eq!(
        local_root_number_with_source(e6(), &t, 5, 7).unwrap().1,
        Source::Formula
    );
    assert_eq!(local_root_number(e6(), &t, 5, 5).unwrap(), 1);
    assert_eq!(local_root_number(e6(), &t, 5, 1).unwrap(), 1);
    assert_eq!(local_root_number(e6(), &t, 7, 1).unwrap(), 1);
    // −c6 mod 5 is a nonresidue, so t = 1 is nonsplit.
    let c6: Integer = e6().model().invariants().unwrap().c6;
    assert_eq!((-c6).mod_floor_5(), 3);
    assert_eq!(local_root_number_23(e6(), &t, 2, 7).unwrap(), -1);
    assert_eq!(local_root_number_23(e6(), &t, 3, 2).unwrap(), 1);
    assert_eq!(local_root_number_23(e6(), &t, 2, 2).unwrap(), 1);
    assert_eq!(
        local_root_number_23(e6(), &t, 2, 8),
        Err(Error::NonSquarefreeClass(8))
    );
}

trait Mod5 {
    fn mod_floor_5(&self) -> i64;
}

impl Mod5 for Integer {
    fn mod_floor_5(&self) -> i64 {
        num_integer::Integer::mod_floor(self, &int(5))
            .try_into()
            .unwrap()
    }
}

#[test]
fn formula_agrees_with_closed_form_table() {
    let t = tables();
    let table = t.get(6, 5).unwrap();
    for n in -500i64..=500 {
        if n == 0 || n % 5 == 0 || !is_squarefree(n) {
            continue;
        }
        assert_eq!(
            local_root_number(e6(), &t, 5, n).unwrap(),
            table.lookup(n).unwrap(),
            "t = {n}"
        );
    }
}

#[test]
fn formula_agrees_with_oracle_tables() {
    // Every multiplicative place with a table: both paths must agree.
    let t = tables();
    for rec in &RECORDS {
        for p in rec.large_bad_primes() {
            let table = t.get(rec.index, p).unwrap();
            for n in -300i64..=300 {
                if n == 0 || !is_squarefree(n) {
                    continue;
                }
                let (w, src) = local_root_number_with_source(rec, &t, p, n).unwrap();
                if src == Source::Formula {
                    assert_eq!(
                        w,
                        table.lookup(n).unwrap(),
                        "curve {} p {} t {}",
                        rec.index,
                        p,
                        n
                    );
                }
            }
        }
    }
}

#[test]
fn jacobi_factor_examples() {
    assert_eq!(jacobi_factor(7, 30).unwrap(), -1);
    assert_eq!(jacobi_factor(1, 30).unwrap(), 1);
    assert_eq!(jacobi_factor(-7, 30).unwrap(), -1);
    assert_eq!(jacobi_factor(0, 30), Err(Error::ZeroInput));
    for n in 1..=1000i64 {
        if is_squarefree(n) && is_squarefree(n + 120) {
            assert_eq!(
                jacobi_factor(n, 30).unwrap(),
                jacobi_factor(n + 120, 30).unwrap()
            );
        }
    }
}

#[test]
fn global_examples() {
    let t = tables();
    let b = root_number_breakdown(e6(), &t, 1).unwrap();
    assert_eq!((b.w2, b.w3, b.jacobi, b.product), (1, -1, 1, 1));
    assert_eq!(global_root_number(&t, 6, 7).unwrap(), -1);
    assert_eq!(global_root_number(&t, 6, -7).unwrap(), -1);
}

#[test]
fn global_matches_oracle_fixture() {
    let t = tables();
    let text = include_str!("../../tests/data/global_root_numbers.txt");
    let mut n = 0;
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let f: Vec<i64> = line
            .split_whitespace()
            .map(|x| x.parse().unwrap())
            .collect();
        assert_eq!(
            global_root_number(&t, f[0] as usize, f[1]).unwrap() as i64,
            f[2],
            "{line}"
        );
        n += 1;
    }
    assert!(n > 1000);
}

#[test]
fn e6_good_classes() {
    let t = tables();
    let plus = good_classes(&t, 6, Sign::Positive).unwrap();
    assert_eq!(plus.members(), &E6_PLUS);
    let minus = good_classes(&t, 6, Sign::Negative).unwrap();
    assert_eq!(minus.len(), 43);
    assert_eq!(&minus.members()[..6], &[1, 2, 3, 5, 10, 13]);
    assert!(minus.contains(113));
}

#[test]
fn class_counts_for_all_curves() {
    // Counts from an independent computer-algebra evaluation of W(E_t).
    let want = [
        (2416, 2336),
        (117, 117),
        (497, 493),
        (33, 33),
        (99, 99),
        (47, 43),
        (497, 493),
        (1037, 1033),
    ];
    let t = tables();
    for (i, &(p, m)) in want.iter().enumerate() {
        let plus = good_classes(&t, i + 1, Sign::Positive).unwrap();
        let minus = good_classes(&t, i + 1, Sign::Negative).unwrap();
        assert_eq!((plus.len(), minus.len()), (p, m), "curve {}", i + 1);
        assert!(plus
            .members()
            .iter()
            .chain(minus.members())
            .all(|r| r % 4 != 0));
    }
}

#[test]
fn e6_period_is_exactly_120() {
    let t = tables();
    assert!(verify_period(&t, 6, Sign::Positive, 5000, 120)
        .unwrap()
        .holds());
    for d in [1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60] {
        let check = verify_period(&t, 6, Sign::Positive, 5000, d).unwrap();
        let (a, b) = check.witness.expect("proper divisor must fail");
        assert_eq!(crate::arith::residue(a, d), crate::arith::residue(b, d));
        assert_ne!(
            global_root_number(&t, 6, a).unwrap(),
            global_root_number(&t, 6, b).unwrap()
        );
    }
}

#[test]
fn stated_periods_hold() {
    let t = tables();
    for rec in &RECORDS {
        for sign in [Sign::Positive, Sign::Negative] {
            let check =
                verify_period(&t, rec.index, sign, 3 * rec.period.min(2000), rec.period).unwrap();
            assert!(
                check.holds(),
                "curve {} sign {} witness {:?}",
                rec.index,
                sign,
                check.witness
            );
        }
    }
}

#[test]
fn e6_sign_flip() {
    let t = tables();
    let mut by_class: HashMap<u64, Vec<i8>> = HashMap::new();
    for n in -2000i64..=-1 {
        if is_squarefree(n) {
            by_class
                .entry(crate::arith::residue(n, 120))
                .or_default()
                .push(global_root_number(&t, 6, n).unwrap());
        }
    }
    for n in 1..=2000i64 {
        if !is_squarefree(n) {
            continue;
        }
        let w = global_root_number(&t, 6, n).unwrap();
        for &w2 in by_class
            .get(&crate::arith::residue(n, 120))
            .into_iter()
            .flatten()
        {
            assert_eq!(w, -w2, "t = {n}");
        }
    }
}

proptest! {
    #[test]
    fn twist_scales_invariants(t in -500i64..500) {
        prop_assume!(t != 0 && is_squarefree(t));
        let e = e6().model();
        let base = e.invariants().unwrap();
        let tw = e.quadratic_twist(t).unwrap().invariants().unwrap();
        let ti = int(t);
        prop_assert_eq!(tw.c4, &base.c4 * &ti * &ti);
        prop_assert_eq!(tw.c6, &base.c6 * &ti * &ti * &ti);
        prop_assert_eq!(tw.delta, &base.delta * ti.pow(6));
        prop_assert_eq!(tw.j, base.j);
    }

    #[test]
    fn root_numbers_are_signs(i in 1usize..=8, t in -3000i64..3000) {
        prop_assume!(t != 0 && is_squarefree(t));
        let w = global_root_number(&tables(), i, t).unwrap();
        prop_assert!(w == 1 || w == -1);
        prop_assert!(!int(w as i64).is_negative() || w == -1);
    }
}
