//! Ratliff-Rush closures of the powers `I^n`.
//!
//! `tilde(I^n)` is generated by the monomials `x^u y^v` with
//! `u, v ≤ nd ≤ u + v` such that either `u ∈ ⟨S⟩, v ∈ ⟨T⟩` or
//! `nd - u ∈ ⟨T⟩, nd - v ∈ ⟨S⟩`. Equivalently, every pair `(u, v)` in
//! `⟨S⟩ × ⟨T⟩ ∩ [0, nd]²` contributes `x^u y^v` when `u + v ≥ nd` and
//! `x^{nd-v} y^{nd-u}` otherwise.
//!
//! Such a contribution lies in `I^n` iff some `w ∈ nS` sits between `u` and
//! `nd - v`, which is what the equality tests below reduce to.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::semigroup::MembershipTable;
use crate::staircase::{IdealSpec, Limits, PowerSumset};

/// Membership tables for `⟨S⟩` and `⟨T⟩` on a common range.
#[derive(Debug, Clone)]
pub struct Semigroups {
    s: MembershipTable,
    t: MembershipTable,
}

impl Semigroups {
    pub fn new(spec: &IdealSpec, bound: usize) -> Self {
        Semigroups {
            s: MembershipTable::build(spec.s(), bound),
            t: MembershipTable::build(spec.t(), bound),
        }
    }

    pub fn ensure(&mut self, bound: usize) {
        self.s.extend_to(bound);
        self.t.extend_to(bound);
    }

    pub fn bound(&self) -> usize {
        self.s.bound()
    }

    pub fn s(&self) -> &MembershipTable {
        &self.s
    }

    pub fn t(&self) -> &MembershipTable {
        &self.t
    }
}

/// Generator list of `tilde(I^n)`, sorted by `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RRClosure {
    pub n: usize,
    pub degree: usize,
    pub generators: Vec<Monomial>,
}

impl RRClosure {
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(self.generators.iter().copied())
            .expect("closure always contains pure powers")
    }

    /// Same ideal, with divisibility-redundant generators removed.
    pub fn minimalized(&self) -> RRClosure {
        RRClosure {
            n: self.n,
            degree: self.degree,
            generators: self.ideal().minimal_generators(),
        }
    }
}

/// Outcome of an equality test `tilde(I^n) = I^n`, with the first offending
/// monomial when they differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureCheck {
    pub equal: bool,
    pub witness: Option<Monomial>,
}

impl ClosureCheck {
    fn pass() -> Self {
        ClosureCheck {
            equal: true,
            witness: None,
        }
    }

    fn fail(m: Monomial) -> Self {
        ClosureCheck {
            equal: false,
            witness: Some(m),
        }
    }
}

/// Generator of `tilde(I^n)` contributed by the pair `(u, v)`.
#[inline]
fn contribution(nd: usize, u: usize, v: usize) -> Monomial {
    if u + v >= nd {
        Monomial::new(u, v)
    } else {
        Monomial::new(nd - v, nd - u)
    }
}

fn tables_for(spec: &IdealSpec, n: usize, limits: Limits) -> Result<Semigroups> {
    if n == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    let nd = n.saturating_mul(spec.degree());
    limits.check("closure scan", nd)?;
    Ok(Semigroups::new(spec, nd))
}

/// Generators of `tilde(I^n)`, including `x^{nd}` and `y^{nd}`.
pub fn rr_generators(spec: &IdealSpec, n: usize) -> Result<RRClosure> {
    let tables = tables_for(spec, n, Limits::default())?;
    Ok(rr_generators_in(&tables, spec, n))
}

/// As [`rr_generators`], with caller-provided tables covering `[0, nd]`.
pub fn rr_generators_in(tables: &Semigroups, spec: &IdealSpec, n: usize) -> RRClosure {
    let nd = n * spec.degree();
    assert!(tables.bound() >= nd, "semigroup tables too short");
    let (s, t) = (tables.s(), tables.t());
    let mut generators = Vec::new();
    for u in 0..=nd {
        let direct_u = s.has(u);
        let mirror_u = t.has(nd - u);
        if !direct_u && !mirror_u {
            continue;
        }
        for v in (nd - u)..=nd {
            let direct = direct_u && t.has(v);
            let mirrored = mirror_u && u + v > nd && s.has(nd - v);
            if direct || mirrored {
                generators.push(Monomial::new(u, v));
            }
        }
    }
    RRClosure {
        n,
        degree: spec.degree(),
        generators,
    }
}

/// Tests `tilde(I^n) = I^n`; `ps` must be `nS` for `spec`.
pub fn rr_equals_power(spec: &IdealSpec, ps: &PowerSumset, n: usize) -> Result<ClosureCheck> {
    check_power(spec, ps, n)?;
    let tables = tables_for(spec, n, Limits::default())?;
    Ok(rr_equals_power_in(&tables, ps))
}

fn check_power(spec: &IdealSpec, ps: &PowerSumset, n: usize) -> Result<()> {
    if ps.n() != n || ps.extent() != n * spec.degree() {
        return Err(Error::InvalidArgument(format!(
            "sumset is for power {} but power {n} was requested",
            ps.n()
        )));
    }
    Ok(())
}

/// Linear-time equality test.
///
/// A pair `(u, v)` fails exactly when `u ∉ nS` and `nd - v` falls in the same
/// gap `(p, q)` of `nS` as `u`. So for each gap it suffices to find the first
/// `⟨S⟩` element inside it and the first `⟨T⟩` element in
/// `(nd - q, nd - p)`. Gaps are visited in increasing order, which reproduces
/// the `(u, v)` lexicographic scan order of [`rr_equals_power_exhaustive`].
pub fn rr_equals_power_in(tables: &Semigroups, ps: &PowerSumset) -> ClosureCheck {
    let nd = ps.extent();
    assert!(tables.bound() >= nd, "semigroup tables too short");
    let (s, t) = (tables.s(), tables.t());
    let mut prev = 0usize;
    for q in ps.members().skip(1) {
        let p = prev;
        prev = q;
        if q == p + 1 {
            continue;
        }
        let v_lo = nd - q + 1;
        let v_hi = nd - p - 1;
        let Some(v) = (v_lo..=v_hi).find(|&v| t.has(v)) else {
            continue;
        };
        if let Some(u) = (p + 1..q).find(|&u| s.has(u)) {
            return ClosureCheck::fail(contribution(nd, u, v));
        }
    }
    ClosureCheck::pass()
}

/// Quadratic reference scan over all pairs `(u, v)`, checking each
/// contributed generator against `I^n` directly.
pub fn rr_equals_power_exhaustive(tables: &Semigroups, ps: &PowerSumset) -> ClosureCheck {
    let nd = ps.extent();
    assert!(tables.bound() >= nd, "semigroup tables too short");
    let (s, t) = (tables.s(), tables.t());
    for u in (0..=nd).filter(|&u| s.has(u)) {
        for v in (0..=nd).filter(|&v| t.has(v)) {
            if !ps.has_member_in_range(nd - v, u) {
                return ClosureCheck::fail(contribution(nd, u, v));
            }
        }
    }
    ClosureCheck::pass()
}

/// Tests `tilde(I^n)_{nd} = (I^n)_{nd}`; the witness is `x^u y^{nd-u}` for
/// the least offending `u`.
pub fn rr_equals_power_at_initial_degree(
    spec: &IdealSpec,
    ps: &PowerSumset,
    n: usize,
) -> Result<ClosureCheck> {
    check_power(spec, ps, n)?;
    let tables = tables_for(spec, n, Limits::default())?;
    Ok(initial_degree_in(&tables, ps))
}

pub fn initial_degree_in(tables: &Semigroups, ps: &PowerSumset) -> ClosureCheck {
    let nd = ps.extent();
    assert!(tables.bound() >= nd, "semigroup tables too short");
    let (s, t) = (tables.s(), tables.t());
    match (0..=nd).find(|&u| s.has(u) && t.has(nd - u) && !ps.contains(u)) {
        Some(u) => ClosureCheck::fail(Monomial::new(u, nd - u)),
        None => ClosureCheck::pass(),
    }
}

/// Slow reference: `⋃_{t=0}^{t_max} I^{n+t} : (x^{td}, y^{td})`, built from
/// explicit exponent sets of the powers. Returns minimal generators.
pub fn rr_oracle(spec: &IdealSpec, n: usize, t_max: usize) -> Result<RRClosure> {
    if n == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    let d = spec.degree();
    Limits::default().check("colon oracle", (n + t_max).saturating_mul(d))?;
    let e: Vec<(usize, usize)> = spec.s().into_iter().map(|s| (s, d - s)).collect();
    let mut power: BTreeSet<(usize, usize)> = [(0, 0)].into();
    for _ in 0..n {
        power = minkowski(&power, &e);
    }
    let mut union: Option<MonomialIdeal> = None;
    for t in 0..=t_max {
        if t > 0 {
            power = minkowski(&power, &e);
        }
        let ideal = MonomialIdeal::from_generators(power.iter().map(|&(u, v)| Monomial::new(u, v)))
            .expect("powers contain pure powers");
        let colon = ideal.colon_pair(t * d, t * d);
        union = Some(match union {
            None => colon,
            Some(acc) => acc.sum(&colon),
        });
    }
    let ideal = union.expect("t = 0 always runs");
    Ok(RRClosure {
        n,
        degree: d,
        generators: ideal.minimal_generators(),
    })
}

fn minkowski(a: &BTreeSet<(usize, usize)>, e: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    a.iter()
        .flat_map(|&(x, y)| e.iter().map(move |&(ex, ey)| (x + ex, y + ey)))
        .collect()
}
