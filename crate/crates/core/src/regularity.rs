//! Regularity of the Rees algebra and of the fiber ring.
//!
//! With `J = (x^d, y^d)`:
//!
//! * `reg R(I) = max{r_J(I), s*(I)}`, the least `n ≥ r_J(I)` with
//!   `tilde(I^n) = I^n`;
//! * `reg F(I) = max{r_J(I), s*_in(I)}`, the least `n ≥ r_J(I)` with
//!   `tilde(I^n)_{nd} = (I^n)_{nd}`.
//!
//! Since `reg R(I) ≥ reg F(I)` always, a single closure test at `n = reg F(I)`
//! decides whether the two regularities agree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ratliff_rush::{initial_degree_in, rr_equals_power_in, ClosureCheck, Semigroups};
use crate::staircase::{IdealSpec, Limits, SumsetFamily};

/// Upper limit on the powers scanned by the regularity searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Cap {
    /// `d²(d² - 1)`; the resource ceiling stops runaway scans first.
    #[default]
    Auto,
    Fixed(usize),
}

impl Cap {
    pub fn resolve(self, spec: &IdealSpec) -> usize {
        match self {
            Cap::Auto => spec.theoretical_cap(),
            Cap::Fixed(n) => n,
        }
    }
}

impl From<Option<usize>> for Cap {
    fn from(value: Option<usize>) -> Self {
        value.map_or(Cap::Auto, Cap::Fixed)
    }
}

/// Which of the two sufficient conditions a certificate satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Condition {
    /// `a-1 ∈ ⟨S⟩, a ∉ ⟨S⟩, b-1 ∈ ⟨T⟩, b ∉ ⟨T⟩`
    #[serde(rename = "i")]
    First,
    /// `a-1 ∉ ⟨S⟩, a ∈ ⟨S⟩, b-1 ∉ ⟨T⟩, b ∈ ⟨T⟩`
    #[serde(rename = "ii")]
    Second,
}

/// Positive `a, b` with `a + b = nd + 1` certifying `reg R(I) > reg F(I)`
/// for `n = reg F(I)`: the monomial `x^a y^b` lies in `tilde(I^n)` but not
/// in `I^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionWitness {
    pub a: usize,
    pub b: usize,
    pub condition: Condition,
}

/// Output of the quick comparison used by the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub r_j: usize,
    pub reg_f: usize,
    pub conjecture_holds: bool,
    pub witness: Option<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RegularityReport {
    pub spec: IdealSpec,
    pub r_j: usize,
    pub reg_f: usize,
    /// `None` when the scan hit `cap` before `tilde(I^n) = I^n`.
    pub reg_r: Option<usize>,
    pub s_star: Option<usize>,
    pub s_star_in: Option<usize>,
    pub conjecture_holds: bool,
    pub witness: Option<Monomial>,
    pub criterion_witness: Option<CriterionWitness>,
    /// Whether the sumset characterization of `reg F(I)` agreed with the
    /// initial-degree scan over the checked window.
    pub lemma_consistent: Option<bool>,
    pub cap: usize,
}

/// Incremental state for one ideal: the sumsets `nS` and the semigroup
/// tables, both grown on demand.
#[derive(Debug, Clone)]
pub struct Analyzer {
    family: SumsetFamily,
    tables: Semigroups,
    r_j: Option<usize>,
}

impl Analyzer {
    pub fn new(spec: &IdealSpec) -> Self {
        Analyzer::with_limits(spec, Limits::default())
    }

    pub fn with_limits(spec: &IdealSpec, limits: Limits) -> Self {
        Analyzer {
            family: SumsetFamily::new(spec, limits),
            tables: Semigroups::new(spec, spec.degree() + 1),
            r_j: None,
        }
    }

    pub fn spec(&self) -> &IdealSpec {
        self.family.spec()
    }

    pub fn family(&mut self) -> &mut SumsetFamily {
        &mut self.family
    }

    pub fn tables(&self) -> &Semigroups {
        &self.tables
    }

    fn prepare(&mut self, n: usize) -> Result<()> {
        self.family.get(n)?;
        let bound = n * self.spec().degree() + 1;
        if bound > self.tables.bound() {
            // grow geometrically so consecutive powers do not re-extend each time
            self.tables.ensure(bound.max(self.tables.bound() * 2));
        }
        Ok(())
    }

    pub fn reduction_number(&mut self, cap: Cap) -> Result<usize> {
        if let Some(r) = self.r_j {
            let cap = cap.resolve(self.spec());
            return if r <= cap {
                Ok(r)
            } else {
                Err(Error::CapExceeded {
                    what: "reduction number",
                    cap,
                })
            };
        }
        let cap = cap.resolve(self.spec());
        let r = self.family.reduction_number(cap)?;
        self.r_j = Some(r);
        Ok(r)
    }

    /// `tilde(I^n) = I^n`?
    pub fn closure_check(&mut self, n: usize) -> Result<ClosureCheck> {
        self.prepare(n)?;
        Ok(rr_equals_power_in(&self.tables, self.family.built(n)))
    }

    /// `tilde(I^n)_{nd} = (I^n)_{nd}`?
    pub fn initial_degree_check(&mut self, n: usize) -> Result<ClosureCheck> {
        self.prepare(n)?;
        Ok(initial_degree_in(&self.tables, self.family.built(n)))
    }

    fn least_from<F>(&mut self, start: usize, cap: usize, what: &'static str, mut ok: F) -> Result<usize>
    where
        F: FnMut(&mut Self, usize) -> Result<bool>,
    {
        let mut n = start;
        while n <= cap {
            if ok(self, n)? {
                return Ok(n);
            }
            n += 1;
        }
        Err(Error::CapExceeded { what, cap })
    }

    pub fn reg_fiber(&mut self, cap: Cap) -> Result<usize> {
        let r = self.reduction_number(cap)?;
        let cap = cap.resolve(self.spec());
        self.least_from(r, cap, "fiber regularity", |a, n| {
            Ok(a.initial_degree_check(n)?.equal)
        })
    }

    pub fn reg_rees(&mut self, cap: Cap) -> Result<usize> {
        let r = self.reduction_number(cap)?;
        let cap = cap.resolve(self.spec());
        self.least_from(r, cap, "Rees regularity", |a, n| Ok(a.closure_check(n)?.equal))
    }

    /// `(s*(I), s*_in(I))` from a scan of `n = 1..=reg_r`.
    pub fn stability_indices(&mut self, reg_r: usize) -> Result<(usize, usize)> {
        let mut s_star = 1;
        let mut s_star_in = 1;
        for n in 1..=reg_r {
            if !self.closure_check(n)?.equal {
                s_star = n + 1;
            }
            if !self.initial_degree_check(n)?.equal {
                s_star_in = n + 1;
            }
        }
        Ok((s_star, s_star_in))
    }

    /// `(n+1)S ∩ ((n+1)S - d) = nS`?
    pub fn sumset_condition_at(&mut self, n: usize) -> Result<bool> {
        if n == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        self.family.get(n + 1)?;
        let d = self.spec().degree();
        let cur = self.family.built(n).bits();
        let next = self.family.built(n + 1).bits();
        let nd = n * d;
        let mut p = 0;
        while p <= nd {
            let count = (nd + 1 - p).min(64);
            let mask = if count == 64 { u64::MAX } else { (1u64 << count) - 1 };
            let lhs = next.read_word(p as isize) & next.read_word((p + d) as isize);
            if lhs & !cur.read_word(p as isize) & mask != 0 {
                return Ok(false);
            }
            p += count;
        }
        Ok(true)
    }

    /// Least `m ≥ r_J` such that the sumset condition holds for every
    /// `n ∈ [m, window_end]`.
    pub fn reg_fiber_via_lemma_window(&mut self, cap: Cap, window_end: usize) -> Result<usize> {
        let r = self.reduction_number(cap)?;
        let mut m = r;
        for n in r..=window_end {
            if !self.sumset_condition_at(n)? {
                m = n + 1;
            }
        }
        Ok(m)
    }

    /// Sumset route to `reg F(I)`, checked up to `reg R(I) + 3`.
    pub fn reg_fiber_via_lemma(&mut self, cap: Cap) -> Result<usize> {
        let reg_r = self.reg_rees(cap)?;
        self.reg_fiber_via_lemma_window(cap, reg_r + 3)
    }

    /// First `(a, b)` with `a + b = nd + 1` meeting either sufficient
    /// condition, scanning `a = 1..=nd`.
    pub fn criterion_witness(&mut self, n: usize) -> Result<Option<CriterionWitness>> {
        if n == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        let nd = n * self.spec().degree();
        self.family.limits().check("criterion scan", nd + 1)?;
        self.tables.ensure(nd + 1);
        let (s, t) = (self.tables.s(), self.tables.t());
        for a in 1..=nd {
            let b = nd + 1 - a;
            let (s0, s1) = (s.has(a - 1), s.has(a));
            let (t0, t1) = (t.has(b - 1), t.has(b));
            if s0 && !s1 && t0 && !t1 {
                return Ok(Some(CriterionWitness {
                    a,
                    b,
                    condition: Condition::First,
                }));
            }
            if !s0 && s1 && !t0 && t1 {
                return Ok(Some(CriterionWitness {
                    a,
                    b,
                    condition: Condition::Second,
                }));
            }
        }
        Ok(None)
    }

    /// `r_J`, `reg F`, and one closure test at `reg F`.
    pub fn verdict(&mut self, cap: Cap) -> Result<Verdict> {
        let r_j = self.reduction_number(cap)?;
        let reg_f = self.reg_fiber(cap)?;
        let check = self.closure_check(reg_f)?;
        Ok(Verdict {
            r_j,
            reg_f,
            conjecture_holds: check.equal,
            witness: check.witness,
        })
    }

    /// Full comparison: verdict, `reg R`, stability indices, certificates and
    /// the sumset cross-check of `reg F`.
    pub fn report(&mut self, cap: Cap) -> Result<RegularityReport> {
        let verdict = self.verdict(cap)?;
        let cap_n = cap.resolve(self.spec());
        let reg_r = if verdict.conjecture_holds {
            Some(verdict.reg_f)
        } else {
            match self.least_from(verdict.reg_f + 1, cap_n, "Rees regularity", |a, n| {
                Ok(a.closure_check(n)?.equal)
            }) {
                Ok(n) => Some(n),
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e),
            }
        };
        let (s_star, s_star_in) = match reg_r {
            Some(r) => {
                let (s, s_in) = self.stability_indices(r)?;
                (Some(s), Some(s_in))
            }
            None => (None, None),
        };
        let lemma_consistent = match reg_r {
            Some(r) => Some(self.reg_fiber_via_lemma_window(cap, r + 3)? == verdict.reg_f),
            None => None,
        };
        let criterion_witness = self.criterion_witness(verdict.reg_f)?;
        Ok(RegularityReport {
            spec: self.spec().clone(),
            r_j: verdict.r_j,
            reg_f: verdict.reg_f,
            reg_r,
            s_star,
            s_star_in,
            conjecture_holds: verdict.conjecture_holds,
            witness: verdict.witness,
            criterion_witness,
            lemma_consistent,
            cap: cap_n,
        })
    }
}

pub fn reg_fiber(spec: &IdealSpec, cap: Cap) -> Result<usize> {
    Analyzer::new(spec).reg_fiber(cap)
}

pub fn reg_rees(spec: &IdealSpec, cap: Cap) -> Result<usize> {
    Analyzer::new(spec).reg_rees(cap)
}

pub fn stability_indices(spec: &IdealSpec, reg_r: usize) -> Result<(usize, usize)> {
    Analyzer::new(spec).stability_indices(reg_r)
}

pub fn reg_fiber_via_lemma(spec: &IdealSpec, cap: Cap) -> Result<usize> {
    Analyzer::new(spec).reg_fiber_via_lemma(cap)
}

pub fn criterion_witness(spec: &IdealSpec, n: usize) -> Result<Option<CriterionWitness>> {
    Analyzer::new(spec).criterion_witness(n)
}

/// Compares `reg R(I)` with `reg F(I)` and assembles the full report.
pub fn eu_check(spec: &IdealSpec, cap: Cap) -> Result<RegularityReport> {
    Analyzer::new(spec).report(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::make_ideal;

    fn spec(d: usize, a: &[usize]) -> IdealSpec {
        make_ideal(d, a).unwrap()
    }

    #[test]
    fn small_ideals() {
        for (d, a, expect) in [(3, vec![1], 2), (2, vec![1], 1)] {
            let i = spec(d, &a);
            assert_eq!(reg_fiber(&i, Cap::Auto), Ok(expect));
            assert_eq!(reg_rees(&i, Cap::Auto), Ok(expect));
            assert_eq!(reg_fiber_via_lemma(&i, Cap::Auto), Ok(expect));
            let report = eu_check(&i, Cap::Auto).unwrap();
            assert!(report.conjecture_holds);
            assert_eq!(report.criterion_witness, None);
        }
        assert_eq!(stability_indices(&spec(2, &[1]), 1), Ok((1, 1)));
        assert_eq!(criterion_witness(&spec(3, &[1]), 2), Ok(None));
        assert!(criterion_witness(&spec(3, &[1]), 0).is_err());
    }

    #[test]
    fn counterexample() {
        let i = spec(157, &[35, 98]);
        let report = eu_check(&i, Cap::Auto).unwrap();
        assert_eq!(report.r_j, 20);
        assert_eq!(report.reg_f, 20);
        assert_eq!(report.reg_r, Some(21));
        assert_eq!(report.s_star, Some(21));
        assert!(!report.conjecture_holds);
        assert_eq!(report.lemma_consistent, Some(true));
        assert_eq!(
            report.criterion_witness,
            Some(CriterionWitness {
                a: 1299,
                b: 1842,
                condition: Condition::First
            })
        );
        assert_eq!(reg_fiber_via_lemma(&i, Cap::Auto), Ok(20));
    }

    #[test]
    fn fixed_cap_is_reported() {
        let i = spec(157, &[35, 98]);
        assert_eq!(
            reg_rees(&i, Cap::Fixed(10)),
            Err(Error::CapExceeded {
                what: "reduction number",
                cap: 10
            })
        );
        let report = eu_check(&i, Cap::Fixed(20)).unwrap();
        assert_eq!(report.reg_r, None);
        assert!(!report.conjecture_holds);
        assert_eq!(report.s_star, None);
    }
}
