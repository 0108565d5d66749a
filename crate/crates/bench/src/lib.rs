//! Benchmark fixtures shared by the criterion targets.

use rrreg_core::{make_ideal, IdealSpec};

/// The four-generated ideal of degree 157 with `reg R(I) > reg F(I)`.
pub fn counterexample() -> IdealSpec {
    make_ideal(157, &[35, 98]).expect("valid exponents")
}

/// A spread of small four-generated ideals.
pub fn small_corpus() -> Vec<IdealSpec> {
    (20..=40)
        .step_by(5)
        .flat_map(|d| {
            [(1, d / 2), (d / 3, 2 * d / 3), (2, d - 3)]
                .into_iter()
                .map(move |(a, b)| make_ideal(d, &[a, b]).expect("valid exponents"))
        })
        .collect()
}
