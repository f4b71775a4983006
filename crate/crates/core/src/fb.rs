//! Fock-Bargmann realizations on polynomials in `alpha` of bounded degree.
//!
//! Operators are matrices over the monomials `alpha^n`, `n <= degree
//! bound`, with entry `(i, j)` the coefficient of `alpha^i` in the image
//! of `alpha^j`. Every generator is assembled from four primitives:
//! multiplication by `alpha`, `d/dalpha`, and the truncated exponentials
//! `e^{c z alpha}` and `e^{c z d}`. Each assembly lowers before it raises,
//! so the truncated compositions are exact.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::fock::{FockMatrix, GuardBand};
use crate::ncalg::{
    automorphism, build_presentation, Element, Generator, Monomial, Presentation, PresentationName,
};
use crate::report::{CheckRecord, Outcome, Report};
use crate::scalars::{factorial, int, Rational, ZSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `A+` primitive; realizes the h6 presentation.
    Primary,
    /// `A-` primitive; realizes the dual presentation.
    Dual,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Primary, Variant::Dual];

    pub fn presentation(self) -> PresentationName {
        match self {
            Variant::Primary => PresentationName::H6Jordanian,
            Variant::Dual => PresentationName::H6JordanianDual,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Primary => "primary",
            Variant::Dual => "dual",
        }
    }
}

/// A linear operator on polynomials of degree at most `degree_bound`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyOperator {
    matrix: FockMatrix,
}

impl PolyOperator {
    fn from_fn(degree_bound: usize, order: usize, f: impl Fn(usize, &mut FockMatrix)) -> Self {
        let mut matrix = FockMatrix::zero(degree_bound + 1, order);
        for j in 0..=degree_bound {
            f(j, &mut matrix);
        }
        Self { matrix }
    }

    pub fn identity(degree_bound: usize, order: usize) -> Self {
        Self {
            matrix: FockMatrix::identity(degree_bound + 1, order),
        }
    }

    /// Multiplication by `alpha`.
    pub fn alpha(degree_bound: usize, order: usize) -> Self {
        Self::from_fn(degree_bound, order, |j, m| {
            m.add_at(j + 1, j, &ZSeries::one(order))
        })
    }

    /// `d/dalpha`.
    pub fn d(degree_bound: usize, order: usize) -> Self {
        Self::from_fn(degree_bound, order, |j, m| {
            if j > 0 {
                m.add_at(j - 1, j, &ZSeries::constant(int(j as i64), order))
            }
        })
    }

    /// `e^{c z alpha}`.
    pub fn exp_alpha(c: &Rational, degree_bound: usize, order: usize) -> Self {
        Self::from_fn(degree_bound, order, |j, m| {
            for k in 0..=order {
                m.add_at(
                    j + k,
                    j,
                    &ZSeries::term(power(c, k) / factorial(k), k, order),
                );
            }
        })
    }

    /// `(e^{c z alpha} - 1)/z`.
    pub fn expm1_over_z_alpha(c: &Rational, degree_bound: usize, order: usize) -> Self {
        Self::from_fn(degree_bound, order, |j, m| {
            for k in 1..=order + 1 {
                m.add_at(
                    j + k,
                    j,
                    &ZSeries::term(power(c, k) / factorial(k), k - 1, order),
                );
            }
        })
    }

    /// `e^{c z d}`, the shift `f(alpha) -> f(alpha + c z)`.
    pub fn exp_d(c: &Rational, degree_bound: usize, order: usize) -> Self {
        Self::from_fn(degree_bound, order, |j, m| {
            for k in 0..=order.min(j) {
                let falling = factorial(j) / factorial(j - k);
                m.add_at(
                    j - k,
                    j,
                    &ZSeries::term(power(c, k) * falling / factorial(k), k, order),
                );
            }
        })
    }

    /// `(e^{c z d} - 1)/z`.
    pub fn expm1_over_z_d(c: &Rational, degree_bound: usize, order: usize) -> Self {
        Self::from_fn(degree_bound, order, |j, m| {
            for k in 1..=(order + 1).min(j) {
                let falling = factorial(j) / factorial(j - k);
                m.add_at(
                    j - k,
                    j,
                    &ZSeries::term(power(c, k) * falling / factorial(k), k - 1, order),
                );
            }
        })
    }

    pub fn degree_bound(&self) -> usize {
        self.matrix.dim() - 1
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn matrix(&self) -> &FockMatrix {
        &self.matrix
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &PolyOperator) -> PolyOperator {
        Self {
            matrix: self.matrix.multiply(&other.matrix),
        }
    }

    pub fn add(&self, other: &PolyOperator) -> PolyOperator {
        let mut matrix = self.matrix.clone();
        matrix.add_scaled(&other.matrix, &ZSeries::one(self.order()));
        Self { matrix }
    }

    pub fn scale(&self, c: &ZSeries) -> PolyOperator {
        let mut matrix = FockMatrix::zero(self.matrix.dim(), self.order());
        matrix.add_scaled(&self.matrix, c);
        Self { matrix }
    }

    /// Image of `alpha^n` as a map from degree to coefficient.
    pub fn apply_monomial(&self, n: usize) -> BTreeMap<usize, ZSeries> {
        (0..self.matrix.dim())
            .filter_map(|i| {
                let c = self.matrix.get(i, n);
                (!c.is_zero()).then(|| (i, c.clone()))
            })
            .collect()
    }
}

fn power(c: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::from_integer(1.into()), |acc, _| acc * c)
}

/// Realization of one generator, looked up by its name in the variant's
/// presentation.
pub fn build_fb(g: Generator, variant: Variant, degree_bound: usize, order: usize) -> PolyOperator {
    let (db, o) = (degree_bound, order);
    let one = int(1);
    let alpha = PolyOperator::alpha(db, o);
    let d = PolyOperator::d(db, o);
    let name = variant.presentation().generator_names()[g.index];
    match (variant, name) {
        (_, "M") => PolyOperator::identity(db, o),
        (Variant::Primary, "A+") => alpha,
        (Variant::Primary, "N") => PolyOperator::expm1_over_z_alpha(&one, db, o).compose(&d),
        (Variant::Primary, "A-") => PolyOperator::exp_alpha(&one, db, o).compose(&d),
        (Variant::Primary, "B+") => {
            let s = PolyOperator::expm1_over_z_alpha(&int(-1), db, o).scale(&-ZSeries::one(o));
            s.compose(&s)
        }
        (Variant::Primary, "B-") => PolyOperator::exp_alpha(&one, db, o).compose(&d).compose(&d),
        (Variant::Dual, "A-") => d,
        (Variant::Dual, "N") => alpha.compose(&PolyOperator::expm1_over_z_d(&one, db, o)),
        (Variant::Dual, "A+") => alpha.compose(&PolyOperator::exp_d(&one, db, o)),
        (Variant::Dual, "B+") => {
            let quad = alpha.compose(&alpha).add(&alpha.scale(&ZSeries::z(o)));
            quad.compose(&PolyOperator::exp_d(&one, db, o))
        }
        (Variant::Dual, "B-") => {
            let t = PolyOperator::expm1_over_z_d(&int(-1), db, o).scale(&-ZSeries::one(o));
            t.compose(&t)
        }
        _ => unreachable!("h6 has six generators"),
    }
}

/// All six realizations, indexed by the variant's generator order.
pub fn fb_generators(variant: Variant, degree_bound: usize, order: usize) -> Vec<PolyOperator> {
    Generator::all()
        .map(|g| build_fb(g, variant, degree_bound, order))
        .collect()
}

/// Bivariate polynomial in `alpha` and `z`: `(alpha power, z power) -> c`.
type Bivariate = BTreeMap<(usize, usize), Rational>;

// ((alpha + z)^n - alpha^n)/z by repeated multiplication by (alpha + z).
fn discrete_derivative_oracle(n: usize) -> Bivariate {
    let mut p: Bivariate = BTreeMap::from([((0, 0), int(1))]);
    for _ in 0..n {
        let mut next = Bivariate::new();
        for ((a, z), c) in &p {
            *next.entry((a + 1, *z)).or_insert_with(|| int(0)) += c;
            *next.entry((*a, z + 1)).or_insert_with(|| int(0)) += c;
        }
        p = next;
    }
    p.remove(&(n, 0));
    p.into_iter()
        .filter(|(_, c)| *c != int(0))
        .map(|((a, z), c)| ((a, z - 1), c))
        .collect()
}

/// `((e^{z d} - 1)/z) alpha^n = ((alpha + z)^n - alpha^n)/z` for every
/// `n <= degree_bound`, as polynomials in `alpha` and `z`.
pub fn discrete_derivative_check(degree_bound: usize, order: usize) -> Report {
    // The identity is exact once z is carried to degree_bound.
    let zorder = order.max(degree_bound);
    let op = PolyOperator::expm1_over_z_d(&int(1), degree_bound, zorder);
    (0..=degree_bound)
        .map(|n| {
            CheckRecord::run(
                "fb",
                format!("fb: (e^(z d) - 1)/z alpha^{n} = ((alpha+z)^{n} - alpha^{n})/z"),
                "h6_jordanian_dual.fb_realization",
                || {
                    let mut got = Bivariate::new();
                    for (a, c) in op.apply_monomial(n) {
                        for (k, ck) in c.nonzero_terms() {
                            got.insert((a, k), ck.clone());
                        }
                    }
                    let want = discrete_derivative_oracle(n);
                    let diff: Vec<String> = got
                        .keys()
                        .chain(want.keys())
                        .filter(|k| got.get(k) != want.get(k))
                        .map(|(a, z)| format!("alpha^{a} z^{z}"))
                        .collect();
                    Outcome::from_residual(diff.len(), || diff.join(", "))
                },
            )
        })
        .collect()
}

// Generators whose matrices move degrees back from beyond the cutoff:
// lowering ones for the primary variant, raising ones for the dual.
fn returning_factors(variant: Variant, m: &Monomial) -> usize {
    let names: [&str; 2] = match variant {
        Variant::Primary => ["A-", "B-"],
        Variant::Dual => ["A+", "B+"],
    };
    let gens = variant.presentation().generator_names();
    names
        .iter()
        .map(|n| {
            let i = gens.iter().position(|g| g == n).expect("fixed");
            m.exponent(Generator::new(i)) as usize
        })
        .sum()
}

fn element_operator(e: &Element, gens: &[PolyOperator]) -> FockMatrix {
    crate::fock::element_matrix(
        e,
        &gens.iter().map(|g| g.matrix.clone()).collect::<Vec<_>>(),
    )
}

/// Commutation relations of the variant's presentation on the guarded
/// block of the degree-bounded space.
pub fn fb_rep_check(variant: Variant, degree_bound: usize, order: usize) -> Report {
    let p = build_presentation(variant.presentation(), order);
    let gens = fb_generators(variant, degree_bound, order);
    let dim = degree_bound + 1;
    let pairs: Vec<_> = p.table_entries().map(|(x, y, _)| (x, y)).collect();
    pairs
        .par_iter()
        .map(|&(x, y)| {
            let entry = p.table_entry(x.index, y.index);
            let l = entry
                .terms()
                .map(|(m, _)| returning_factors(variant, m))
                .chain(std::iter::once(returning_factors(
                    variant,
                    &Monomial::generator(x).concat(&Monomial::generator(y)),
                )))
                .max()
                .unwrap_or(0);
            let guard = GuardBand::for_identity(l, order);
            let block = guard.block(dim);
            CheckRecord::run(
                "fb",
                format!(
                    "fb {}: [{},{}] (degree <= {degree_bound}, block {block})",
                    variant.as_str(),
                    p.name_of(x),
                    p.name_of(y)
                ),
                &format!("{}.fb_realization", variant.presentation()),
                || {
                    if block == 0 {
                        return Outcome::fail(1, format!("guard {} leaves no block", guard.guard));
                    }
                    let (mx, my) = (&gens[x.index].matrix, &gens[y.index].matrix);
                    let lhs = mx.multiply(my).sub(&my.multiply(mx));
                    let res = lhs.sub(&element_operator(entry, &gens)).block(block);
                    let nz: Vec<_> = res.nonzero_entries().collect();
                    Outcome::from_residual(nz.len(), || {
                        nz.iter()
                            .take(6)
                            .map(|(i, j, c)| format!("({i},{j}): {c}"))
                            .collect::<Vec<_>>()
                            .join("; ")
                    })
                },
            )
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// The primary realization and the Fock matrices are the same operators
/// under `alpha -> a+`, `d -> a-`.
pub fn fock_agreement_check(degree_bound: usize, order: usize) -> Report {
    let p = build_presentation(PresentationName::H6Jordanian, order);
    Generator::all()
        .map(|g| {
            CheckRecord::run(
                "fb",
                format!("fb primary: {} equals its Fock matrix", p.name_of(g)),
                "h6_jordanian.fb_realization",
                || {
                    let op = build_fb(g, Variant::Primary, degree_bound, order);
                    match crate::fock::fock_matrix(g, degree_bound + 1, order) {
                        Ok(m) => {
                            let res = op.matrix.sub(&m);
                            let n = res.nonzero_entries().count();
                            Outcome::from_residual(n, || format!("{n} entries differ"))
                        }
                        Err(e) => Outcome::fail(1, e.to_string()),
                    }
                },
            )
        })
        .collect()
}

/// Image of the h6 presentation under the involution (with `z -> -z`)
/// against the dual presentation, entry by entry, and the involution
/// property.
pub fn automorphism_transport_check(order: usize) -> Report {
    let h6 = build_presentation(PresentationName::H6Jordanian, order);
    let dual = build_presentation(PresentationName::H6JordanianDual, order);
    let mut records: Vec<CheckRecord> = h6
        .table_entries()
        .map(|(x, y, entry)| {
            CheckRecord::run(
                "fb",
                format!(
                    "involution: [{},{}] maps to [{},{}]",
                    h6.name_of(x),
                    h6.name_of(y),
                    dual.name_of(x),
                    dual.name_of(y)
                ),
                "h6_jordanian_dual.commutators",
                || {
                    // [phi x, phi y] = [x', y'] since phi g = -g'.
                    let image = automorphism(entry);
                    let res = &image - dual.table_entry(x.index, y.index);
                    Outcome::from_residual(res.len(), || dual.render(&res))
                },
            )
        })
        .collect();
    records.push(CheckRecord::run(
        "fb",
        "involution: applying it twice is the identity",
        "h6_jordanian_dual.commutators",
        || {
            let bad = h6
                .table_entries()
                .filter(|(_, _, e)| automorphism(&automorphism(e)) != **e)
                .count();
            Outcome::from_residual(bad, || format!("{bad} entries change"))
        },
    ));
    records.into_iter().collect()
}

/// Each realization at `z = 0` against the undeformed one (`N = alpha d`,
/// `B+ = alpha^2`, `B- = d^2`).
pub fn classical_limit_check(degree_bound: usize, order: usize) -> Report {
    let mut records = Vec::new();
    for variant in Variant::ALL {
        let names = variant.presentation().generator_names();
        for g in Generator::all() {
            records.push(CheckRecord::run(
                "fb",
                format!(
                    "fb {}: {} at z=0 is undeformed",
                    variant.as_str(),
                    names[g.index]
                ),
                &format!("{}.fb_realization", variant.presentation()),
                || {
                    let op = build_fb(g, variant, degree_bound, order);
                    let a = PolyOperator::alpha(degree_bound, order);
                    let d = PolyOperator::d(degree_bound, order);
                    let want = match names[g.index] {
                        "N" => a.compose(&d),
                        "A+" => a,
                        "A-" => d,
                        "M" => PolyOperator::identity(degree_bound, order),
                        "B+" => a.compose(&a),
                        "B-" => d.compose(&d),
                        _ => unreachable!(),
                    };
                    let res = op.matrix.classical_limit().sub(&want.matrix);
                    let n = res.nonzero_entries().count();
                    Outcome::from_residual(n, || format!("{n} entries differ"))
                },
            ));
        }
    }
    records.into_iter().collect()
}

/// The named dual presentation, for callers that only have a variant.
pub fn presentation_for(variant: Variant, order: usize) -> Presentation {
    build_presentation(variant.presentation(), order)
}
