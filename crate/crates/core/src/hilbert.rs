//! Hilbert-Samuel function, polynomial and postulation number.
//!
//! Column `u < nd` of the staircase of `I^n` has height
//! `nd - max{w ∈ nS : w ≤ u}`; columns `u ≥ nd` are inside `x^{nd}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::staircase::{IdealSpec, PowerSumset, SumsetFamily};

/// `P(n) = e0·C(n+1, 2) - e1·n + e2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPolynomial {
    pub e0: i64,
    pub e1: i64,
    pub e2: i64,
}

impl HilbertPolynomial {
    pub fn eval(&self, n: usize) -> i128 {
        let n = n as i128;
        self.e0 as i128 * (n * (n + 1) / 2) - self.e1 as i128 * n + self.e2 as i128
    }
}

impl std::fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*C(n+1,2) - {}*n + {}", self.e0, self.e1, self.e2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRow {
    pub n: usize,
    pub h: u64,
    pub p: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub spec: IdealSpec,
    pub e: u64,
    pub poly: HilbertPolynomial,
    pub table: Vec<HilbertRow>,
    pub postulation: Option<usize>,
}

/// Colength of `I^n` from its sumset.
pub fn colength(ps: &PowerSumset) -> u64 {
    let nd = ps.extent();
    let mut last = 0usize;
    let mut total = 0u64;
    for u in 0..nd {
        if ps.contains(u) {
            last = u;
        }
        total += (nd - last) as u64;
    }
    total
}

/// `H(n) = length(A / I^n)` over a shared family.
pub fn hilbert_samuel_in(family: &mut SumsetFamily, n: usize) -> Result<u64> {
    if n == 0 {
        return Ok(0);
    }
    Ok(colength(family.get(n)?))
}

pub fn hilbert_samuel(spec: &IdealSpec, n: usize) -> Result<u64> {
    hilbert_samuel_in(&mut SumsetFamily::new(spec, Default::default()), n)
}

/// Fits the polynomial from `H` at `reg_r + 1, reg_r + 2, reg_r + 3`.
pub fn hilbert_polynomial_in(family: &mut SumsetFamily, reg_r: usize) -> Result<HilbertPolynomial> {
    let n0 = reg_r + 1;
    let h0 = hilbert_samuel_in(family, n0)? as i128;
    let h1 = hilbert_samuel_in(family, n0 + 1)? as i128;
    let h2 = hilbert_samuel_in(family, n0 + 2)? as i128;
    let e0 = h2 - 2 * h1 + h0;
    let expected = family.spec().multiplicity() as i128;
    if e0 != expected {
        return Err(Error::Inconsistent(format!(
            "second difference of H is {e0}, expected multiplicity {expected}"
        )));
    }
    let n0i = n0 as i128;
    // H(n0+1) - H(n0) = e0·(n0+1) - e1
    let e1 = e0 * (n0i + 1) - (h1 - h0);
    let e2 = h0 - e0 * (n0i * (n0i + 1) / 2) + e1 * n0i;
    let to_i64 = |x: i128| {
        i64::try_from(x).map_err(|_| Error::Inconsistent(format!("coefficient {x} overflows")))
    };
    Ok(HilbertPolynomial {
        e0: to_i64(e0)?,
        e1: to_i64(e1)?,
        e2: to_i64(e2)?,
    })
}

pub fn hilbert_polynomial(spec: &IdealSpec, reg_r: usize) -> Result<HilbertPolynomial> {
    hilbert_polynomial_in(&mut SumsetFamily::new(spec, Default::default()), reg_r)
}

/// Largest `n ≤ reg_r` with `H(n) ≠ P(n)`, if any.
pub fn postulation_number_in(
    family: &mut SumsetFamily,
    reg_r: usize,
    poly: &HilbertPolynomial,
) -> Result<Option<usize>> {
    for n in (0..=reg_r).rev() {
        if hilbert_samuel_in(family, n)? as i128 != poly.eval(n) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

pub fn postulation_number(
    spec: &IdealSpec,
    reg_r: usize,
    poly: &HilbertPolynomial,
) -> Result<Option<usize>> {
    postulation_number_in(&mut SumsetFamily::new(spec, Default::default()), reg_r, poly)
}

/// Polynomial, postulation number and the `H`/`P` table for `n = 0..=reg_r + 2`.
pub fn hilbert_report_in(family: &mut SumsetFamily, reg_r: usize) -> Result<HilbertReport> {
    let poly = hilbert_polynomial_in(family, reg_r)?;
    let postulation = postulation_number_in(family, reg_r, &poly)?;
    let mut table = Vec::with_capacity(reg_r + 3);
    for n in 0..=reg_r + 2 {
        table.push(HilbertRow {
            n,
            h: hilbert_samuel_in(family, n)?,
            p: poly.eval(n) as i64,
        });
    }
    Ok(HilbertReport {
        spec: family.spec().clone(),
        e: family.spec().multiplicity(),
        poly,
        table,
        postulation,
    })
}

pub fn hilbert_report(spec: &IdealSpec, reg_r: usize) -> Result<HilbertReport> {
    hilbert_report_in(&mut SumsetFamily::new(spec, Default::default()), reg_r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::make_ideal;

    fn spec(d: usize, a: &[usize]) -> IdealSpec {
        make_ideal(d, a).unwrap()
    }

    #[test]
    fn counterexample_values() {
        let i = spec(157, &[35, 98]);
        assert_eq!(hilbert_samuel(&i, 20), Ok(4_942_376));
        assert_eq!(hilbert_samuel(&i, 21), Ok(5_447_758));
        let poly = hilbert_polynomial(&i, 21).unwrap();
        assert_eq!(
            poly,
            HilbertPolynomial {
                e0: 24649,
                e1: 12246,
                e2: 11005
            }
        );
        assert_eq!(poly.eval(20), 4_942_375);
        assert_eq!(poly.eval(21), 5_447_758);
        assert_eq!(postulation_number(&i, 21, &poly), Ok(Some(20)));
    }

    #[test]
    fn small_values() {
        assert_eq!(hilbert_samuel(&spec(3, &[1]), 1), Ok(7));
        assert_eq!(hilbert_samuel(&spec(3, &[1]), 0), Ok(0));
        let m2 = spec(2, &[1]);
        for n in 0..8 {
            assert_eq!(hilbert_samuel(&m2, n), Ok((n * (2 * n + 1)) as u64));
        }
        let poly = hilbert_polynomial(&m2, 1).unwrap();
        assert_eq!(poly, HilbertPolynomial { e0: 4, e1: 1, e2: 0 });
        assert_eq!(postulation_number(&m2, 1, &poly), Ok(None));
    }

    #[test]
    fn wrong_regularity_is_loud() {
        // Fitting from below the postulation number breaks the d² check.
        let i = spec(157, &[35, 98]);
        let err = hilbert_polynomial(&i, 17).unwrap_err();
        assert!(matches!(err, Error::Inconsistent(_)), "{err:?}");
    }
}
