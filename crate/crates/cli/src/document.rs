//! The JSON document printed by `--json`. Field names are stable; the schema
//! lives in `schema/analysis.schema.json`.

use rrreg_core::{
    CriterionWitness, HilbertPolynomial, HilbertReport, HilbertRow, Monomial, RegularityReport,
};
use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Input {
    pub degree: usize,
    pub exponents: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSection {
    pub e: u64,
    pub poly: HilbertPolynomial,
    pub postulation: Option<usize>,
    pub table: Vec<HilbertRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<HilbertRow>,
}

impl HilbertSection {
    pub fn new(report: HilbertReport, at: Option<HilbertRow>) -> Self {
        HilbertSection {
            e: report.e,
            poly: report.poly,
            postulation: report.postulation,
            table: report.table,
            at,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RrSection {
    pub power: usize,
    pub minimal: bool,
    pub count: usize,
    pub generators: Vec<Monomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisDocument {
    pub version: String,
    pub command: String,
    pub input: Input,
    pub degree: usize,
    pub exponents: Vec<usize>,
    /// `TRUE`, `FALSE` or `UNRESOLVED` for commands that compare regularities.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_j: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reg_f: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reg_r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_star: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_star_in: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjecture_holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Monomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub criterion_witness: Option<CriterionWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rr: Option<RrSection>,
}

impl AnalysisDocument {
    pub fn new(command: &str, input: Input) -> Self {
        AnalysisDocument {
            version: VERSION.to_string(),
            command: command.to_string(),
            degree: input.degree,
            exponents: input.exponents.clone(),
            input,
            status: None,
            r_j: None,
            reg_f: None,
            reg_r: None,
            s_star: None,
            s_star_in: None,
            conjecture_holds: None,
            witness: None,
            criterion_witness: None,
            hilbert: None,
            rr: None,
        }
    }

    pub fn with_regularity(mut self, report: &RegularityReport) -> Self {
        self.status = Some(
            if report.reg_r.is_none() {
                "UNRESOLVED"
            } else if report.conjecture_holds {
                "TRUE"
            } else {
                "FALSE"
            }
            .to_string(),
        );
        self.r_j = Some(report.r_j);
        self.reg_f = Some(report.reg_f);
        self.reg_r = report.reg_r;
        self.s_star = report.s_star;
        self.s_star_in = report.s_star_in;
        self.conjecture_holds = Some(report.conjecture_holds);
        self.witness = report.witness;
        self.criterion_witness = report.criterion_witness;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rrreg_core::Condition;

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        (0usize..5000, 0usize..5000).prop_map(|(u, v)| Monomial::new(u, v))
    }

    fn arb_doc() -> impl Strategy<Value = AnalysisDocument> {
        (
            2usize..300,
            prop::collection::vec(1usize..300, 1..4),
            prop::option::of(1usize..100),
            prop::option::of(arb_monomial()),
            prop::option::of((1usize..4000, 1usize..4000, any::<bool>())),
            prop::option::of((
                -100i64..100,
                prop::option::of(0usize..30),
                prop::collection::vec((0usize..30, 0u64..1_000_000, -5i64..1_000_000), 0..5),
            )),
            prop::option::of((prop::collection::vec(arb_monomial(), 0..6), prop::option::of(any::<bool>()))),
        )
            .prop_map(|(degree, exponents, reg, witness, cert, hilbert, rr)| {
                let mut doc = AnalysisDocument::new(
                    "analyze",
                    Input {
                        degree,
                        exponents,
                        cap: reg,
                        power: None,
                        at: None,
                        oracle: None,
                    },
                );
                doc.r_j = reg;
                doc.reg_r = reg.map(|r| r + 1);
                doc.conjecture_holds = reg.map(|r| r % 2 == 0);
                doc.witness = witness;
                doc.criterion_witness = cert.map(|(a, b, first)| CriterionWitness {
                    a,
                    b,
                    condition: if first { Condition::First } else { Condition::Second },
                });
                doc.hilbert = hilbert.map(|(e1, postulation, rows)| HilbertSection {
                    e: (degree * degree) as u64,
                    poly: HilbertPolynomial {
                        e0: (degree * degree) as i64,
                        e1,
                        e2: -e1,
                    },
                    postulation,
                    table: rows.into_iter().map(|(n, h, p)| HilbertRow { n, h, p }).collect(),
                    at: None,
                });
                doc.rr = rr.map(|(generators, agree)| RrSection {
                    power: 1,
                    minimal: agree.is_some(),
                    count: generators.len(),
                    generators,
                    oracle_agreement: agree,
                });
                doc
            })
    }

    proptest! {
        #[test]
        fn json_round_trip_is_byte_identical(doc in arb_doc()) {
            let first = doc.to_json();
            let parsed: AnalysisDocument = serde_json::from_str(&first).unwrap();
            prop_assert_eq!(&parsed, &doc);
            prop_assert_eq!(parsed.to_json(), first);
        }
    }

    #[test]
    fn stable_field_names() {
        let mut doc = AnalysisDocument::new(
            "analyze",
            Input {
                degree: 3,
                exponents: vec![1],
                cap: None,
                power: None,
                at: None,
                oracle: None,
            },
        );
        doc.r_j = Some(2);
        doc.reg_f = Some(2);
        doc.reg_r = Some(2);
        doc.s_star = Some(1);
        doc.s_star_in = Some(1);
        doc.conjecture_holds = Some(true);
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        for key in ["degree", "exponents", "rJ", "regF", "regR", "sStar", "sStarIn", "conjectureHolds"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
}
