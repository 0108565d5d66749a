//! Cross-checks of the fast routines against slow independent computations.

use std::collections::BTreeSet;

use rrreg_core::hilbert::hilbert_report;
use rrreg_core::ratliff_rush::{rr_equals_power_exhaustive, rr_equals_power_in};
use rrreg_core::{
    build_membership, hilbert_samuel, make_ideal, power_sumsets, rr_generators, rr_oracle,
    Analyzer, Cap, IdealSpec, Limits, Monomial, MonomialIdeal, Semigroups,
};

fn all_specs(max_d: usize) -> Vec<IdealSpec> {
    let mut out = Vec::new();
    for d in 2..=max_d {
        let inner: Vec<usize> = (1..d).collect();
        for mask in 1u32..(1 << inner.len()) {
            let interior: Vec<usize> = inner
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            out.push(make_ideal(d, &interior).unwrap());
        }
    }
    out
}

// Sums of exactly n elements of S.
fn sumset(s: &[usize], n: usize) -> BTreeSet<usize> {
    let mut acc: BTreeSet<usize> = [0].into();
    for _ in 0..n {
        acc = acc
            .iter()
            .flat_map(|&a| s.iter().map(move |&b| a + b))
            .collect();
    }
    acc
}

fn lattice_colength(spec: &IdealSpec, n: usize) -> u64 {
    let nd = n * spec.degree();
    let gens: Vec<usize> = sumset(&spec.s(), n).into_iter().collect();
    let mut count = 0;
    for u in 0..=nd {
        for v in 0..=nd {
            if !gens.iter().any(|&w| w <= u && nd - w <= v) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn closure_matches_colon_oracle_small() {
    for spec in all_specs(6) {
        let d = spec.degree();
        for n in 1..=3 {
            let fast = rr_generators(&spec, n).unwrap().ideal();
            let slow = rr_oracle(&spec, n, d * d).unwrap().ideal();
            assert_eq!(fast, slow, "{spec} n={n}");
        }
    }
}

#[test]
fn quinonez_formula_at_first_power() {
    for spec in all_specs(8) {
        let d = spec.degree();
        let s = build_membership(&spec.s(), d);
        let t = build_membership(&spec.t(), d);
        let left = MonomialIdeal::from_generators(
            (0..=d)
                .filter(|&u| s.contains(u).unwrap())
                .map(|u| Monomial::new(u, d - u)),
        )
        .unwrap();
        let right = MonomialIdeal::from_generators(
            (0..=d)
                .filter(|&v| t.contains(v).unwrap())
                .map(|v| Monomial::new(d - v, v)),
        )
        .unwrap();
        assert_eq!(
            rr_generators(&spec, 1).unwrap().ideal(),
            left.intersect(&right),
            "{spec}"
        );
    }
}

#[test]
fn generator_shape_and_containment() {
    for spec in all_specs(7) {
        for n in 1..=3 {
            let nd = n * spec.degree();
            let rr = rr_generators(&spec, n).unwrap();
            let ideal = rr.ideal();
            for g in &rr.generators {
                assert!(g.u <= nd && g.v <= nd && nd <= g.u + g.v && g.u + g.v <= 2 * nd);
            }
            for w in sumset(&spec.s(), n) {
                assert!(ideal.contains(Monomial::new(w, nd - w)), "{spec} n={n} w={w}");
            }
            let sorted = rr.generators.windows(2).all(|p| p[0] < p[1]);
            assert!(sorted);
        }
    }
}

#[test]
fn fast_and_exhaustive_closure_checks_agree() {
    for spec in all_specs(8) {
        let powers = power_sumsets(&spec, 5, Limits::default()).unwrap();
        let tables = Semigroups::new(&spec, 5 * spec.degree());
        for ps in &powers {
            assert_eq!(
                rr_equals_power_in(&tables, ps),
                rr_equals_power_exhaustive(&tables, ps),
                "{spec} n={}",
                ps.n()
            );
        }
    }
    let spec = make_ideal(157, &[35, 98]).unwrap();
    let powers = power_sumsets(&spec, 21, Limits::default()).unwrap();
    let tables = Semigroups::new(&spec, 21 * 157);
    for n in [19, 20, 21] {
        let ps = &powers[n - 1];
        assert_eq!(
            rr_equals_power_in(&tables, ps),
            rr_equals_power_exhaustive(&tables, ps)
        );
    }
}

#[test]
fn closure_equality_test_matches_ideal_comparison() {
    for spec in all_specs(7) {
        let powers = power_sumsets(&spec, 4, Limits::default()).unwrap();
        let tables = Semigroups::new(&spec, 4 * spec.degree());
        for ps in &powers {
            let nd = ps.extent();
            let power =
                MonomialIdeal::from_generators(ps.members().map(|w| Monomial::new(w, nd - w)))
                    .unwrap();
            let rr = rr_generators(&spec, ps.n()).unwrap().ideal();
            let check = rr_equals_power_in(&tables, ps);
            assert_eq!(check.equal, rr == power, "{spec} n={}", ps.n());
            if let Some(w) = check.witness {
                assert!(rr.contains(w) && !power.contains(w));
            }
        }
    }
}

#[test]
fn colength_matches_lattice_count() {
    for spec in all_specs(7) {
        for n in 0..=4 {
            let expect = if n == 0 { 0 } else { lattice_colength(&spec, n) };
            assert_eq!(hilbert_samuel(&spec, n).unwrap(), expect, "{spec} n={n}");
        }
    }
}

#[test]
fn closure_stays_equal_past_rees_regularity() {
    for spec in all_specs(7) {
        let mut an = Analyzer::new(&spec);
        let reg_r = an.reg_rees(Cap::Auto).unwrap();
        for n in reg_r..=reg_r + 2 {
            assert!(an.closure_check(n).unwrap().equal, "{spec} n={n}");
        }
    }
}

#[test]
fn hilbert_polynomial_agreement() {
    for spec in all_specs(6).into_iter().step_by(3) {
        let reg_r = Analyzer::new(&spec).reg_rees(Cap::Auto).unwrap();
        let report = hilbert_report(&spec, reg_r).unwrap();
        assert_eq!(report.poly.e0 as u64, spec.degree().pow(2) as u64);
        let start = report.postulation.map_or(0, |p| p + 1);
        for n in start..=reg_r + 5 {
            assert_eq!(
                hilbert_samuel(&spec, n).unwrap() as i128,
                report.poly.eval(n),
                "{spec} n={n}"
            );
        }
        if let Some(p) = report.postulation {
            assert!(p <= reg_r);
        }
        let h: Vec<u64> = (0..=reg_r + 4)
            .map(|n| hilbert_samuel(&spec, n).unwrap())
            .collect();
        assert!(h.windows(2).all(|w| w[0] < w[1]));
    }
}
