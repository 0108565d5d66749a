//! Monomials in `k[x, y]` and `(x, y)`-primary monomial ideals stored as
//! staircases.

use serde::{Deserialize, Serialize};

/// The monomial `x^u y^v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub u: usize,
    pub v: usize,
}

impl Monomial {
    pub const fn new(u: usize, v: usize) -> Self {
        Monomial { u, v }
    }

    pub fn degree(&self) -> usize {
        self.u + self.v
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.u <= other.u && self.v <= other.v
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x^{}*y^{}", self.u, self.v)
    }
}

/// An `(x, y)`-primary monomial ideal.
///
/// `heights[u]` is the least `v` with `x^u y^v` in the ideal; columns at or
/// beyond `heights.len()` have height zero, i.e. `x^{heights.len()}` is the
/// smallest pure power of `x` in the ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    heights: Vec<usize>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`; `None` unless it contains a pure power
    /// of each variable.
    pub fn from_generators<I>(gens: I) -> Option<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        let width = gens.iter().filter(|g| g.v == 0).map(|g| g.u).min()?;
        let y_pow = gens.iter().filter(|g| g.u == 0).map(|g| g.v).min()?;
        let mut heights = vec![usize::MAX; width];
        for g in &gens {
            if g.u < width {
                heights[g.u] = heights[g.u].min(g.v);
            }
        }
        let mut run = y_pow;
        for h in heights.iter_mut() {
            run = run.min(*h);
            *h = run;
        }
        Some(MonomialIdeal::from_heights(heights))
    }

    /// From a column profile; trailing zero columns are trimmed.
    pub fn from_heights(mut heights: Vec<usize>) -> Self {
        debug_assert!(heights.windows(2).all(|w| w[0] >= w[1]));
        while heights.last() == Some(&0) {
            heights.pop();
        }
        MonomialIdeal { heights }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    #[inline]
    pub fn height(&self, u: usize) -> usize {
        self.heights.get(u).copied().unwrap_or(0)
    }

    pub fn contains(&self, m: Monomial) -> bool {
        m.v >= self.height(m.u)
    }

    /// `dim_k k[x,y] / I`.
    pub fn colength(&self) -> u64 {
        self.heights.iter().map(|&h| h as u64).sum()
    }

    /// Staircase corners, sorted by `u`.
    pub fn minimal_generators(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut prev = usize::MAX;
        for (u, &h) in self.heights.iter().enumerate() {
            if h < prev {
                out.push(Monomial::new(u, h));
                prev = h;
            }
        }
        out.push(Monomial::new(self.heights.len(), 0));
        out
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let width = self.heights.len().max(other.heights.len());
        MonomialIdeal::from_heights(
            (0..width)
                .map(|u| self.height(u).max(other.height(u)))
                .collect(),
        )
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let width = self.heights.len().min(other.heights.len());
        MonomialIdeal::from_heights(
            (0..width)
                .map(|u| self.height(u).min(other.height(u)))
                .collect(),
        )
    }

    /// `I : x^a y^b`.
    pub fn colon_monomial(&self, m: Monomial) -> MonomialIdeal {
        let width = self.heights.len().saturating_sub(m.u);
        MonomialIdeal::from_heights(
            (0..width)
                .map(|r| self.height(r + m.u).saturating_sub(m.v))
                .collect(),
        )
    }

    /// `I : (x^a, y^b)`.
    pub fn colon_pair(&self, a: usize, b: usize) -> MonomialIdeal {
        self.colon_monomial(Monomial::new(a, 0))
            .intersect(&self.colon_monomial(Monomial::new(0, b)))
    }
}
