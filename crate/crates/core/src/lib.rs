//! Ratliff-Rush closures, reduction numbers and the regularities of the Rees
//! algebra and the fiber ring for equigenerated `(x, y)`-primary monomial
//! ideals
//!
//! ```text
//! I = (x^d, x^{a_1} y^{d-a_1}, …, x^{a_p} y^{d-a_p}, y^d)
//! ```
//!
//! in `k[x, y]`. Everything reduces to integer combinatorics on
//! `S = {0, a_1, …, a_p, d}`: the numerical semigroups `⟨S⟩`, `⟨T⟩` and the
//! sumsets `nS` describing the minimal generators of `I^n`.
//!
//! ```
//! use rrreg_core::{eu_check, make_ideal, Cap};
//!
//! let ideal = make_ideal(3, &[1]).unwrap();
//! let report = eu_check(&ideal, Cap::Auto).unwrap();
//! assert_eq!((report.r_j, report.reg_f, report.reg_r), (2, 2, Some(2)));
//! assert!(report.conjecture_holds);
//! ```

mod bits;
pub mod error;
pub mod hilbert;
pub mod monomial;
pub mod ratliff_rush;
pub mod regularity;
pub mod search;
pub mod semigroup;
pub mod staircase;

pub use error::{Error, Result};
pub use hilbert::{
    hilbert_polynomial, hilbert_report, hilbert_samuel, postulation_number, HilbertPolynomial,
    HilbertReport, HilbertRow,
};
pub use monomial::{Monomial, MonomialIdeal};
pub use ratliff_rush::{
    rr_equals_power, rr_equals_power_at_initial_degree, rr_generators, rr_oracle, ClosureCheck,
    RRClosure, Semigroups,
};
pub use regularity::{
    criterion_witness, eu_check, reg_fiber, reg_fiber_via_lemma, reg_rees, stability_indices,
    Analyzer, Cap, Condition, CriterionWitness, RegularityReport, Verdict,
};
pub use search::{scan, ScanOptions, ScanOutcome, SearchError, SearchRecord, Status};
pub use semigroup::{build_membership, MembershipTable};
pub use staircase::{
    make_ideal, power_sumsets, reduction_number, IdealSpec, Limits, PowerSumset, SumsetFamily,
};
