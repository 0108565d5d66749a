//! The ideal `I = (x^d, x^{a_1} y^{d-a_1}, …, y^d)`, its powers as bounded
//! sumsets, and the reduction number with respect to `J = (x^d, y^d)`.
//!
//! A minimal generator `x^w y^{nd-w}` of `I^n` is identified with its
//! `x`-exponent `w`, so `I^n` is carried by the integer sumset `nS ⊆ [0, nd]`.
//! The `T` side is never materialized: `w ∈ nT ⟺ nd - w ∈ nS`.

use serde::{Deserialize, Serialize};

use crate::bits::BitTable;
use crate::error::{Error, Result};

/// Default ceiling on `nd`, the width of any single sumset table.
pub const DEFAULT_MAX_EXTENT: usize = 1 << 22;

/// Resource ceilings shared by the table-building routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible `nd` for a power sumset (and the semigroup tables
    /// built alongside it).
    pub max_extent: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_extent: DEFAULT_MAX_EXTENT,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, what: &'static str, extent: usize) -> Result<()> {
        if extent > self.max_extent {
            Err(Error::ResourceLimit {
                what,
                extent,
                ceiling: self.max_extent,
            })
        } else {
            Ok(())
        }
    }
}

/// An equigenerated `(x, y)`-primary monomial ideal of degree `d`, given by the
/// `x`-exponents of its mixed generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealSpec {
    degree: usize,
    interior: Vec<usize>,
}

impl IdealSpec {
    /// Validates `d ≥ 2` and `0 < a_1 < … < a_p < d` with `p ≥ 1`.
    pub fn new(degree: usize, interior: Vec<usize>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidDegree(degree));
        }
        if interior.is_empty() {
            return Err(Error::ParameterIdeal);
        }
        for &a in &interior {
            if a == 0 || a >= degree {
                return Err(Error::ExponentOutOfRange {
                    exponent: a,
                    max: degree - 1,
                });
            }
        }
        for pair in interior.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::NotIncreasing {
                    prev: pair[0],
                    next: pair[1],
                });
            }
        }
        Ok(IdealSpec { degree, interior })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn interior(&self) -> &[usize] {
        &self.interior
    }

    /// `S = {0, a_1, …, a_p, d}`.
    pub fn s(&self) -> Vec<usize> {
        let mut s = Vec::with_capacity(self.interior.len() + 2);
        s.push(0);
        s.extend_from_slice(&self.interior);
        s.push(self.degree);
        s
    }

    /// `T = {0, d - a_p, …, d - a_1, d}`.
    pub fn t(&self) -> Vec<usize> {
        self.s().into_iter().rev().map(|s| self.degree - s).collect()
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn mirror(&self) -> IdealSpec {
        IdealSpec {
            degree: self.degree,
            interior: self.interior.iter().rev().map(|a| self.degree - a).collect(),
        }
    }

    /// Multiplicity `e(I) = d²`.
    pub fn multiplicity(&self) -> u64 {
        (self.degree as u64).pow(2)
    }

    /// `e(e - 1) = d²(d² - 1)`, the a-priori bound on `reg R(I)`.
    pub fn theoretical_cap(&self) -> usize {
        let e = self.multiplicity();
        usize::try_from(e.saturating_mul(e.saturating_sub(1))).unwrap_or(usize::MAX)
    }
}

impl std::fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = self.degree;
        write!(f, "(x^{d}")?;
        for &a in &self.interior {
            write!(f, ", x^{a}*y^{}", d - a)?;
        }
        write!(f, ", y^{d})")
    }
}

/// Free-function form of [`IdealSpec::new`].
pub fn make_ideal(degree: usize, interior: &[usize]) -> Result<IdealSpec> {
    IdealSpec::new(degree, interior.to_vec())
}

/// The sumset `nS` on `[0, nd]`, with per-word prefix counts for constant-time
/// range queries.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSumset {
    n: usize,
    degree: usize,
    bits: BitTable,
    // members strictly before word k
    rank: Vec<u32>,
}

impl PowerSumset {
    fn from_bits(n: usize, degree: usize, bits: BitTable) -> Self {
        let mut rank = Vec::with_capacity(bits.words().len() + 1);
        let mut acc = 0u32;
        rank.push(0);
        for w in bits.words() {
            acc += w.count_ones();
            rank.push(acc);
        }
        PowerSumset {
            n,
            degree,
            bits,
            rank,
        }
    }

    /// `1S = S`.
    pub fn first(spec: &IdealSpec) -> Self {
        let d = spec.degree();
        let mut bits = BitTable::new(d + 1);
        for s in spec.s() {
            bits.set(s);
        }
        PowerSumset::from_bits(1, d, bits)
    }

    /// `(n + 1)S = nS + S`.
    pub fn next(&self, s: &[usize]) -> Self {
        let mut bits = BitTable::new(self.extent() + self.degree + 1);
        for &shift in s {
            bits.or_shifted(&self.bits, shift);
        }
        PowerSumset::from_bits(self.n + 1, self.degree, bits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `nd`, the largest element.
    pub fn extent(&self) -> usize {
        self.n * self.degree
    }

    #[inline]
    pub fn contains(&self, w: usize) -> bool {
        self.bits.get(w)
    }

    /// Number of members in `[0, i)`.
    #[inline]
    fn rank(&self, i: usize) -> usize {
        let i = i.min(self.bits.len());
        let (k, off) = (i / 64, i % 64);
        let mut r = self.rank[k] as usize;
        if off != 0 {
            r += (self.bits.words()[k] & ((1u64 << off) - 1)).count_ones() as usize;
        }
        r
    }

    /// Whether some member lies between `lo` and `hi` inclusive, in either
    /// order.
    #[inline]
    pub fn has_member_in_range(&self, lo: usize, hi: usize) -> bool {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        self.rank(hi + 1) > self.rank(lo)
    }

    pub fn len(&self) -> usize {
        self.rank[self.rank.len() - 1] as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub(crate) fn bits(&self) -> &BitTable {
        &self.bits
    }
}

impl std::fmt::Debug for PowerSumset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PowerSumset")
            .field("n", &self.n)
            .field("degree", &self.degree)
            .field("members", &self.len())
            .finish()
    }
}

/// Lazily grown sequence `1S, 2S, …` for one ideal.
#[derive(Debug, Clone)]
pub struct SumsetFamily {
    spec: IdealSpec,
    s: Vec<usize>,
    limits: Limits,
    powers: Vec<PowerSumset>,
}

impl SumsetFamily {
    pub fn new(spec: &IdealSpec, limits: Limits) -> Self {
        SumsetFamily {
            spec: spec.clone(),
            s: spec.s(),
            limits,
            powers: vec![PowerSumset::first(spec)],
        }
    }

    pub fn spec(&self) -> &IdealSpec {
        &self.spec
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// `nS` for `n ≥ 1`, extending the family as needed.
    pub fn get(&mut self, n: usize) -> Result<&PowerSumset> {
        if n == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        self.limits
            .check("power sumset", n.saturating_mul(self.spec.degree()))?;
        while self.powers.len() < n {
            let next = self.powers[self.powers.len() - 1].next(&self.s);
            self.powers.push(next);
        }
        Ok(&self.powers[n - 1])
    }

    /// Already-built `nS`; panics if [`get`](Self::get) has not reached `n`.
    pub fn built(&self, n: usize) -> &PowerSumset {
        &self.powers[n - 1]
    }

    /// Whether `(n + 1)S = nS ∪ (nS + d)`.
    pub fn reduces_at(&mut self, n: usize) -> Result<bool> {
        self.get(n + 1)?;
        let d = self.spec.degree();
        let cur = self.built(n);
        let mut union = BitTable::new(cur.extent() + d + 1);
        union.or_shifted(cur.bits(), 0);
        union.or_shifted(cur.bits(), d);
        Ok(&union == self.built(n + 1).bits())
    }

    /// Least `n ≥ 1` (at most `cap`) with `(n + 1)S = nS ∪ (nS + d)`.
    pub fn reduction_number(&mut self, cap: usize) -> Result<usize> {
        for n in 1..=cap {
            if self.reduces_at(n)? {
                return Ok(n);
            }
        }
        Err(Error::CapExceeded {
            what: "reduction number",
            cap,
        })
    }
}

/// `1S, …, n_max S`.
pub fn power_sumsets(spec: &IdealSpec, n_max: usize, limits: Limits) -> Result<Vec<PowerSumset>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let mut family = SumsetFamily::new(spec, limits);
    family.get(n_max)?;
    Ok(family.powers)
}

/// `r_J(I)` for `J = (x^d, y^d)`.
pub fn reduction_number(spec: &IdealSpec, cap: usize) -> Result<usize> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be at least 1".into()));
    }
    SumsetFamily::new(spec, Limits::default()).reduction_number(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    // Sums of exactly n elements of S, enumerated directly.
    fn enumerate(s: &[usize], n: usize) -> BTreeSet<usize> {
        let mut acc: BTreeSet<usize> = [0].into();
        for _ in 0..n {
            acc = acc
                .iter()
                .flat_map(|&a| s.iter().map(move |&b| a + b))
                .collect();
        }
        acc
    }

    fn spec(d: usize, a: &[usize]) -> IdealSpec {
        make_ideal(d, a).unwrap()
    }

    #[test]
    fn derived_sets() {
        let i = spec(157, &[35, 98]);
        assert_eq!(i.s(), vec![0, 35, 98, 157]);
        assert_eq!(i.t(), vec![0, 59, 122, 157]);
        let i = spec(3, &[1]);
        assert_eq!(i.s(), vec![0, 1, 3]);
        assert_eq!(i.t(), vec![0, 2, 3]);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(make_ideal(157, &[]), Err(Error::ParameterIdeal));
        assert_eq!(make_ideal(1, &[1]), Err(Error::InvalidDegree(1)));
        assert_eq!(
            make_ideal(5, &[0, 3]),
            Err(Error::ExponentOutOfRange {
                exponent: 0,
                max: 4
            })
        );
        assert_eq!(
            make_ideal(5, &[2, 5]),
            Err(Error::ExponentOutOfRange {
                exponent: 5,
                max: 4
            })
        );
        assert_eq!(
            make_ideal(9, &[4, 4]),
            Err(Error::NotIncreasing { prev: 4, next: 4 })
        );
        assert!(make_ideal(5, &[0, 3])
            .unwrap_err()
            .to_string()
            .contains("exponent out of range"));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(spec(157, &[35, 98]).mirror(), spec(157, &[59, 122]));
        assert_eq!(spec(3, &[1]).mirror(), spec(3, &[2]));
        assert_eq!(spec(4, &[2]).mirror(), spec(4, &[2]));
    }

    #[test]
    fn counterexample_sumset_facts() {
        let i = spec(157, &[35, 98]);
        let p = power_sumsets(&i, 20, Limits::default()).unwrap();
        let s20 = &p[19];
        let s19 = &p[18];
        assert!(s20.contains(1141));
        assert!(!s19.contains(1141));
        assert!(!s19.contains(1141 - 157));
        assert!(!s20.has_member_in_range(1298, 1299));
        assert!(s20.has_member_in_range(1299, 1298) == s20.has_member_in_range(1298, 1299));
        assert!(s20.has_member_in_range(0, 0));
    }

    #[test]
    fn small_sumset() {
        let p = power_sumsets(&spec(3, &[1]), 2, Limits::default()).unwrap();
        assert_eq!(p[1].members().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4, 6]);
        assert!(!p[1].has_member_in_range(5, 5));
        assert!(p[1].has_member_in_range(5, 6));
    }

    #[test]
    fn reduction_numbers() {
        assert_eq!(reduction_number(&spec(157, &[35, 98]), 1000), Ok(20));
        assert_eq!(reduction_number(&spec(3, &[1]), 100), Ok(2));
        assert_eq!(reduction_number(&spec(2, &[1]), 100), Ok(1));
        assert_eq!(
            reduction_number(&spec(157, &[35, 98]), 19),
            Err(Error::CapExceeded {
                what: "reduction number",
                cap: 19
            })
        );
    }

    #[test]
    fn resource_ceiling() {
        let limits = Limits { max_extent: 1000 };
        let err = power_sumsets(&spec(157, &[35, 98]), 7, limits).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { extent: 1099, .. }));
    }

    fn arb_spec() -> impl Strategy<Value = IdealSpec> {
        (2usize..=24).prop_flat_map(|d| {
            prop::collection::btree_set(1..d, 1..=(d - 1).min(4)).prop_map(move |set| {
                IdealSpec::new(d, set.into_iter().collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn sumset_invariants(spec in arb_spec()) {
            let d = spec.degree();
            let s = spec.s();
            let t = spec.t();
            let fam = power_sumsets(&spec, 5, Limits::default()).unwrap();
            let sg = crate::semigroup::build_membership(&s, 5 * d);
            for (i, ps) in fam.iter().enumerate() {
                let n = i + 1;
                let nd = n * d;
                prop_assert!(ps.contains(0) && ps.contains(nd));
                let direct = enumerate(&s, n);
                prop_assert_eq!(ps.members().collect::<BTreeSet<_>>(), direct);
                let nt = enumerate(&t, n);
                for w in 0..=nd {
                    prop_assert_eq!(ps.contains(w), nt.contains(&(nd - w)));
                    if ps.contains(w) {
                        prop_assert!(sg.contains(w).unwrap());
                    }
                }
                if n < fam.len() {
                    prop_assert!(ps.members().all(|w| fam[n].contains(w)));
                }
            }
            // (n + m)S = nS + mS
            for n in 1..=2 {
                for m in 1..=2 {
                    let sum: BTreeSet<usize> = fam[n - 1]
                        .members()
                        .flat_map(|a| fam[m - 1].members().map(move |b| a + b))
                        .collect();
                    prop_assert_eq!(fam[n + m - 1].members().collect::<BTreeSet<_>>(), sum);
                }
            }
        }

        #[test]
        fn reduction_stabilizes_and_is_mirror_invariant(spec in arb_spec()) {
            let r = reduction_number(&spec, 10_000).unwrap();
            prop_assert_eq!(reduction_number(&spec.mirror(), 10_000).unwrap(), r);
            let mut fam = SumsetFamily::new(&spec, Limits::default());
            for n in r..=r + 5 {
                prop_assert!(fam.reduces_at(n).unwrap());
            }
            prop_assert_eq!(spec.mirror().mirror(), spec);
        }
    }
}
