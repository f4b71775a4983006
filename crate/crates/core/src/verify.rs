//! Named verification suites and the run configuration that selects them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fb::{self, Variant};
use crate::fock;
use crate::hopf::{
    build_hopf, build_universal_r, check_hopf_axioms, check_qybe, check_r_intertwining,
    check_triangularity, TensorElement,
};
use crate::liebialg::{
    classical_r, classical_transport_suite, cocommutator_table, cojacobi_and_cocycle_check,
    cybe_check, first_order_check, jacobi_check, regenerated_table_check, undeformed_limit_check,
    LieAlgebra,
};
use crate::ncalg::{build_presentation, Element, Generator, PresentationName};
use crate::report::{CheckRecord, Outcome, Report};
use crate::schrod::{check_iso_is_hopf_morphism, subalgebra_survey, IsoMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("{0} must be at least 1")]
    TooSmall(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Classical,
    Bialgebra,
    Hopf,
    Rmatrix,
    Fock,
    Fb,
    Iso,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Classical,
        Suite::Bialgebra,
        Suite::Hopf,
        Suite::Rmatrix,
        Suite::Fock,
        Suite::Fb,
        Suite::Iso,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Classical => "classical",
            Suite::Bialgebra => "bialgebra",
            Suite::Hopf => "hopf",
            Suite::Rmatrix => "rmatrix",
            Suite::Fock => "fock",
            Suite::Fb => "fb",
            Suite::Iso => "iso",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

/// Parses `h6`, `h6-dual`, `schrodinger` or `all`.
pub fn parse_algebras(s: &str) -> Result<Vec<PresentationName>, ConfigError> {
    if s == "all" {
        return Ok(PresentationName::ALL.to_vec());
    }
    s.parse::<PresentationName>()
        .map(|p| vec![p])
        .map_err(|_| ConfigError::UnknownAlgebra(s.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Truncation order `M`.
    pub order: usize,
    /// Fock truncation `D`.
    pub fock_dim: usize,
    /// Degree bound of the Fock-Bargmann polynomials.
    pub fb_degree: usize,
    pub algebras: Vec<PresentationName>,
    pub suites: Vec<Suite>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            order: 4,
            fock_dim: 16,
            fb_degree: 12,
            algebras: PresentationName::ALL.to_vec(),
            suites: Suite::ALL.to_vec(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.fock_dim == 0 {
            return Err(ConfigError::TooSmall("fock dimension"));
        }
        if self.fb_degree == 0 {
            return Err(ConfigError::TooSmall("fb degree"));
        }
        Ok(())
    }
}

/// Runs every selected suite on every selected algebra. Jobs run in
/// parallel; records come back suite by suite, algebra by algebra.
pub fn run(config: &RunConfig) -> Report {
    let jobs: Vec<(Suite, PresentationName)> = config
        .suites
        .iter()
        .flat_map(|&s| config.algebras.iter().map(move |&a| (s, a)))
        .collect();
    jobs.par_iter()
        .map(|&(s, a)| run_suite(s, a, config))
        .collect::<Vec<_>>()
        .into_iter()
        .flat_map(|r| r.records)
        .collect()
}

/// One suite on one algebra. Suites that do not apply to the algebra
/// return an empty report.
pub fn run_suite(suite: Suite, algebra: PresentationName, config: &RunConfig) -> Report {
    let report = match suite {
        Suite::Classical => classical(algebra, config),
        Suite::Bialgebra => bialgebra(algebra, config.order),
        Suite::Hopf => check_hopf_axioms(&build_hopf(algebra, config.order)),
        Suite::Rmatrix => rmatrix(algebra, config.order),
        Suite::Fock => fock_suite(algebra, config),
        Suite::Fb => fb_suite(algebra, config),
        Suite::Iso => iso(algebra, config.order),
    };
    report.with_suite(suite.as_str())
}

fn classical(algebra: PresentationName, config: &RunConfig) -> Report {
    let mut report = jacobi_check(&LieAlgebra::for_presentation(algebra));
    report.push(undeformed_limit_check(&build_presentation(
        algebra,
        config.order,
    )));
    report.extend(zero_order_regression(algebra, config));
    if algebra == PresentationName::H6JordanianDual {
        report.extend(fb::automorphism_transport_check(config.order));
    }
    report
}

/// Every deformed structure truncated at `M = 0` against its undeformed
/// counterpart: brackets, primitive coproducts, antipode `-X`, zero
/// counit, trivial R-matrix, and the Fock and Fock-Bargmann actions.
pub fn zero_order_regression(algebra: PresentationName, config: &RunConfig) -> Report {
    let h = build_hopf(algebra, 0);
    let p = h.presentation();
    let mut report = Report::new();
    report.push(undeformed_limit_check(p));
    let anchor = format!("{algebra}.coproduct");
    report.push(CheckRecord::run(
        "classical",
        format!("{algebra}: at M=0 every generator is primitive with antipode -X"),
        &anchor,
        || {
            let bad: Vec<String> = Generator::all()
                .filter(|&g| {
                    let x = Element::generator(g, 0);
                    let primitive =
                        TensorElement::tensor2(&p.one(), &x) + TensorElement::tensor2(&x, &p.one());
                    *h.coproduct_of(g) != primitive
                        || *h.antipode_of(g) != -&x
                        || !h.counit_of(g).is_zero()
                })
                .map(|g| p.name_of(g).to_string())
                .collect();
            Outcome::from_residual(bad.len(), || bad.join(", "))
        },
    ));
    report.push(CheckRecord::run(
        "classical",
        format!("{algebra}: at M=0 the R-matrix is 1 (x) 1"),
        &format!("{algebra}.r_matrix"),
        || {
            let r = build_universal_r(&h);
            let res = &r - &TensorElement::one(2, 0);
            Outcome::from_residual(res.len(), || h.render_tensor(&res))
        },
    ));
    match algebra {
        PresentationName::H6Jordanian => {
            report.extend(fock::classical_limit_check(config.fock_dim, 0));
            report.extend(fb_limit(Variant::Primary, config.fb_degree));
        }
        PresentationName::H6JordanianDual => {
            report.extend(fb_limit(Variant::Dual, config.fb_degree));
        }
        PresentationName::SchrodingerJordanian => {}
    }
    report
}

fn fb_limit(variant: Variant, degree: usize) -> Report {
    let anchor = format!("{}.fb_realization", variant.presentation());
    fb::classical_limit_check(degree, 0)
        .records
        .into_iter()
        .filter(|r| r.anchor == anchor)
        .collect()
}

fn bialgebra(algebra: PresentationName, order: usize) -> Report {
    let g = LieAlgebra::for_presentation(algebra);
    let mut report = cybe_check(&g, &classical_r(algebra));
    report.push(regenerated_table_check(algebra));
    report.extend(cojacobi_and_cocycle_check(&g, &cocommutator_table(algebra)));
    if order >= 1 {
        report.push(first_order_check(&build_hopf(algebra, order)));
    }
    report.extend(
        classical_transport_suite()
            .records
            .into_iter()
            .filter(|r| transport_owner(&r.anchor) == Some(algebra))
            .collect(),
    );
    report
}

fn transport_owner(anchor: &str) -> Option<PresentationName> {
    anchor.split('.').next()?.parse().ok()
}

fn rmatrix(algebra: PresentationName, order: usize) -> Report {
    let h = build_hopf(algebra, order);
    let r = build_universal_r(&h);
    let mut report = check_r_intertwining(&h, &r);
    report.extend(check_qybe(&r, h.presentation()));
    report.extend(check_triangularity(&r, h.presentation()));
    report
}

fn fock_suite(algebra: PresentationName, config: &RunConfig) -> Report {
    if algebra != PresentationName::H6Jordanian {
        return Report::new();
    }
    let p = build_presentation(algebra, config.order);
    let mut report = match fock::rep_check(&p, config.fock_dim) {
        Ok(r) => r,
        Err(e) => [CheckRecord::run(
            "fock",
            "fock: matrices from both constructions",
            "h6_jordanian.fock_action",
            || Outcome::fail(1, e.to_string()),
        )]
        .into_iter()
        .collect(),
    };
    report.extend(fock::compare_with_reference_matrices(config.order));
    report.extend(fock::classical_limit_check(config.fock_dim, config.order));
    report
}

fn fb_suite(algebra: PresentationName, config: &RunConfig) -> Report {
    let (m, db) = (config.order, config.fb_degree);
    match algebra {
        PresentationName::H6Jordanian => {
            let mut report = fb::fb_rep_check(Variant::Primary, db, m);
            report.extend(fb::fock_agreement_check(db, m));
            report
        }
        PresentationName::H6JordanianDual => {
            let mut report = fb::fb_rep_check(Variant::Dual, db, m);
            report.extend(fb::discrete_derivative_check(db, m));
            report
        }
        PresentationName::SchrodingerJordanian => Report::new(),
    }
}

fn iso(algebra: PresentationName, order: usize) -> Report {
    if algebra != PresentationName::SchrodingerJordanian {
        return Report::new();
    }
    let mut report = check_iso_is_hopf_morphism(&IsoMap::new(order));
    report.extend(subalgebra_survey(order));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suites_and_algebras() {
        assert_eq!("rmatrix".parse::<Suite>().unwrap(), Suite::Rmatrix);
        assert!("hopfs".parse::<Suite>().is_err());
        assert_eq!(parse_algebras("all").unwrap().len(), 3);
        assert_eq!(
            parse_algebras("h6-dual").unwrap(),
            vec![PresentationName::H6JordanianDual]
        );
        assert!(parse_algebras("sl2").is_err());
    }

    #[test]
    fn zero_order_regression_passes() {
        let config = RunConfig {
            fock_dim: 8,
            fb_degree: 6,
            ..RunConfig::default()
        };
        for a in PresentationName::ALL {
            let r = zero_order_regression(a, &config);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn non_applicable_suites_are_empty() {
        let config = RunConfig::default();
        assert!(run_suite(Suite::Fock, PresentationName::SchrodingerJordanian, &config).is_empty());
        assert!(run_suite(Suite::Iso, PresentationName::H6Jordanian, &config).is_empty());
    }

    #[test]
    fn records_carry_the_suite_label() {
        let config = RunConfig {
            order: 2,
            algebras: vec![PresentationName::H6Jordanian],
            suites: vec![Suite::Bialgebra],
            ..RunConfig::default()
        };
        let r = run(&config);
        assert!(r.all_passed(), "{r}");
        assert!(r.records.iter().all(|x| x.suite == "bialgebra"));
        assert!(r.records.iter().any(|x| x.identity.contains("chain")));
    }
}
