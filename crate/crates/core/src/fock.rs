//! Truncated Fock-space representation of the deformed h6.
//!
//! Matrices are built in the unnormalized basis `e_m = a+^m |0>`, where
//! `a+ e_m = e_(m+1)` and `a- e_m = m e_(m-1)` and every entry is a rational
//! series. The orthonormal basis `|m> = e_m / sqrt(m!)` is only used to
//! present entries, as radicals.
//!
//! Entry `(i, j)` of a matrix is `<i|X|j>`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::ncalg::{Element, Generator, Monomial, Presentation, PresentationName, RANK};
use crate::report::{CheckRecord, Outcome, Report};
use crate::scalars::{factorial, int, rat, Radical, Rational, ZSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("the boson realization is defined for h6_jordanian, not {0}")]
    UnsupportedPresentation(PresentationName),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("constructions of {generator} disagree at ({row}, {col})")]
    ConstructionMismatch {
        generator: String,
        row: usize,
        col: usize,
    },
}

const H6: PresentationName = PresentationName::H6Jordanian;

fn h6_generator(name: &str) -> Result<Generator, FockError> {
    H6.generator_names()
        .iter()
        .position(|n| *n == name)
        .map(Generator::new)
        .ok_or_else(|| FockError::UnknownGenerator(name.to_string()))
}

/// Normal-ordered boson polynomial `sum c * a+^i a-^j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BosonWord {
    order: usize,
    terms: BTreeMap<(u32, u32), ZSeries>,
}

impl BosonWord {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::term(0, 0, ZSeries::one(order))
    }

    pub fn creation(order: usize) -> Self {
        Self::term(1, 0, ZSeries::one(order))
    }

    pub fn annihilation(order: usize) -> Self {
        Self::term(0, 1, ZSeries::one(order))
    }

    /// `c * a+^i a-^j`.
    pub fn term(i: u32, j: u32, c: ZSeries) -> Self {
        let mut w = Self::zero(c.order());
        w.add_term(i, j, &c);
        w
    }

    /// `sum_k (c z a+)^k / k!` truncated at the order.
    pub fn exp_creation(c: &Rational, order: usize) -> Self {
        let mut w = Self::zero(order);
        let mut ck = Rational::from_integer(1.into());
        for k in 0..=order {
            w.add_term(k as u32, 0, &ZSeries::term(&ck / factorial(k), k, order));
            ck *= c;
        }
        w
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ZSeries)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> ZSeries {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| ZSeries::zero(self.order))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &ZSeries) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((i, j))
            .or_insert_with(|| ZSeries::zero(c.order()));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add_scaled(&mut self, other: &BosonWord, c: &ZSeries) {
        for (&(i, j), oc) in &other.terms {
            self.add_term(i, j, &(oc * c));
        }
    }

    pub fn scale(&self, c: &ZSeries) -> Self {
        let mut w = Self::zero(self.order);
        w.add_scaled(self, c);
        w
    }

    /// Product, reordered with `a- a+ = a+ a- + 1`:
    /// `a-^j a+^k = sum_l C(j,l) k!/(k-l)! a+^(k-l) a-^(j-l)`.
    pub fn multiply(&self, other: &BosonWord) -> Self {
        let mut out = Self::zero(self.order);
        for (&(i, j), c1) in &self.terms {
            for (&(k, l), c2) in &other.terms {
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                let mut coef = Rational::from_integer(1.into());
                for s in 0..=j.min(k) {
                    if s > 0 {
                        // C(j,s) k!/(k-s)! from the s-1 term
                        coef = coef * int(i64::from(j - s + 1)) * int(i64::from(k - s + 1))
                            / int(i64::from(s));
                    }
                    out.add_term(i + k - s, j - s + l, &c.scale(&coef));
                }
            }
        }
        out
    }

    pub fn classical_limit(&self) -> Self {
        let mut w = Self::zero(self.order);
        for (&(i, j), c) in &self.terms {
            w.add_term(i, j, &ZSeries::constant(c.coeff(0).clone(), self.order));
        }
        w
    }

    pub fn render(&self) -> String {
        let parts = self
            .terms
            .iter()
            .enumerate()
            .map(|(n, (&(i, j), c))| {
                let pow = |name: &str, e: u32| match e {
                    0 => None,
                    1 => Some(name.to_string()),
                    _ => Some(format!("{name}^{e}")),
                };
                let mono: Vec<String> =
                    [pow("a+", i), pow("a-", j)].into_iter().flatten().collect();
                let is_identity = mono.is_empty();
                crate::ncalg::render_term(c, &mono.join("*"), is_identity, n == 0)
            })
            .collect();
        crate::ncalg::join_terms(parts)
    }
}

impl fmt::Debug for BosonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BosonWord({})", self.render())
    }
}

/// The deformed boson realization of an h6 generator.
pub fn realize_boson(g: Generator, order: usize) -> BosonWord {
    let one = ZSeries::one(order);
    let exp = BosonWord::exp_creation(&int(1), order);
    let am = BosonWord::annihilation(order);
    match H6.generator_names()[g.index] {
        "A+" => BosonWord::creation(order),
        "M" => BosonWord::one(order),
        // ((e^{z a+} - 1)/z) a-
        "N" => {
            let mut w = BosonWord::zero(order);
            for k in 1..=order + 1 {
                w.add_term(
                    k as u32,
                    1,
                    &ZSeries::term(factorial(k).recip(), k - 1, order),
                );
            }
            w
        }
        "A-" => exp.multiply(&am),
        // ((1 - e^{-z a+})/z)^2
        "B+" => {
            let mut s = BosonWord::zero(order);
            for k in 1..=order + 1 {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s.add_term(
                    k as u32,
                    0,
                    &ZSeries::term(int(sign) / factorial(k), k - 1, order),
                );
            }
            s.multiply(&s)
        }
        "B-" => exp.multiply(&BosonWord::term(0, 2, one)),
        _ => unreachable!("h6 has six generators"),
    }
}

pub fn realize_boson_named(name: &str, order: usize) -> Result<BosonWord, FockError> {
    Ok(realize_boson(h6_generator(name)?, order))
}

/// Square matrix of series in the unnormalized basis.
#[derive(Clone, PartialEq, Eq)]
pub struct FockMatrix {
    dim: usize,
    order: usize,
    entries: Vec<ZSeries>,
}

impl FockMatrix {
    pub fn zero(dim: usize, order: usize) -> Self {
        Self {
            dim,
            order,
            entries: vec![ZSeries::zero(order); dim * dim],
        }
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        let mut m = Self::zero(dim, order);
        for i in 0..dim {
            m.entries[i * dim + i] = ZSeries::one(order);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &ZSeries {
        &self.entries[i * self.dim + j]
    }

    pub fn add_at(&mut self, i: usize, j: usize, c: &ZSeries) {
        if i < self.dim && j < self.dim {
            self.entries[i * self.dim + j] += c;
        }
    }

    pub fn multiply(&self, other: &FockMatrix) -> FockMatrix {
        let d = self.dim;
        let mut out = Self::zero(d, self.order);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * d + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &FockMatrix, c: &ZSeries) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    pub fn sub(&self, other: &FockMatrix) -> FockMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &-ZSeries::one(self.order));
        out
    }

    /// Leading `size x size` block.
    pub fn block(&self, size: usize) -> FockMatrix {
        let size = size.min(self.dim);
        let mut out = Self::zero(size, self.order);
        for i in 0..size {
            for j in 0..size {
                out.entries[i * size + j] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &ZSeries)> {
        let d = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(n, c)| (n / d, n % d, c))
    }

    pub fn classical_limit(&self) -> FockMatrix {
        let mut out = self.clone();
        for c in &mut out.entries {
            *c = ZSeries::constant(c.coeff(0).clone(), self.order);
        }
        out
    }

    pub fn normalized(&self) -> NormalizedMatrix {
        NormalizedMatrix::from_unnormalized(self)
    }
}

impl fmt::Debug for FockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FockMatrix {}x{}", self.dim, self.dim)?;
        for (i, j, c) in self.nonzero_entries() {
            writeln!(f, "  ({i},{j}) = {c}")?;
        }
        Ok(())
    }
}

/// Matrix of a boson polynomial: `a+^i a-^j e_m = m!/(m-j)! e_(m-j+i)`.
pub fn word_matrix(w: &BosonWord, dim: usize) -> FockMatrix {
    let mut out = FockMatrix::zero(dim, w.order());
    for (&(i, j), c) in w.terms() {
        for m in (j as usize)..dim {
            let row = m - j as usize + i as usize;
            if row >= dim {
                continue;
            }
            let falling = factorial(m) / factorial(m - j as usize);
            out.add_at(row, m, &c.scale(&falling));
        }
    }
    out
}

/// The action on number states written out term by term.
pub fn closed_form_matrix(g: Generator, dim: usize, order: usize) -> FockMatrix {
    let mut out = FockMatrix::zero(dim, order);
    let zk = |c: Rational, k: usize| ZSeries::term(c, k, order);
    let name = H6.generator_names()[g.index];
    for m in 0..dim {
        let mq = int(m as i64);
        let mut put = |row: usize, c: ZSeries| out.add_at(row, m, &c);
        match name {
            "A+" => put(m + 1, ZSeries::one(order)),
            "M" => put(m, ZSeries::one(order)),
            "A-" => {
                if m > 0 {
                    put(m - 1, ZSeries::constant(mq.clone(), order));
                }
                for k in 0..order {
                    put(m + k, zk(&mq / factorial(k + 1), k + 1));
                }
            }
            "N" => {
                put(m, ZSeries::constant(mq.clone(), order));
                for k in 1..=order {
                    put(m + k, zk(&mq / factorial(k + 1), k));
                }
            }
            "B+" => {
                put(m + 2, ZSeries::one(order));
                for k in 1..=order {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let c = int(sign * ((1i64 << (k + 2)) - 2)) / factorial(k + 2);
                    put(m + k + 2, zk(c, k));
                }
            }
            "B-" => {
                let mm = int((m * m.saturating_sub(1)) as i64);
                if m >= 2 {
                    put(m - 2, ZSeries::constant(mm.clone(), order));
                }
                if m >= 1 && order >= 1 {
                    put(m - 1, zk(mm.clone(), 1));
                }
                for k in 0..order.saturating_sub(1) {
                    put(m + k, zk(&mm / factorial(k + 2), k + 2));
                }
            }
            _ => unreachable!("h6 has six generators"),
        }
    }
    out
}

/// Both constructions of a generator matrix, which must agree.
pub fn fock_matrix(g: Generator, dim: usize, order: usize) -> Result<FockMatrix, FockError> {
    let closed = closed_form_matrix(g, dim, order);
    let boson = word_matrix(&realize_boson(g, order), dim);
    if let Some(n) = (0..dim * dim).find(|&n| closed.entries[n] != boson.entries[n]) {
        return Err(FockError::ConstructionMismatch {
            generator: H6.generator_names()[g.index].to_string(),
            row: n / dim,
            col: n % dim,
        });
    }
    Ok(closed)
}

/// `sqrt(i!/j!)` as a radical.
fn factorial_ratio_sqrt(i: usize, j: usize) -> Radical {
    let (lo, hi) = (i.min(j), i.max(j));
    let mut r = Radical::rational(int(1));
    for m in lo + 1..=hi {
        r = &r * &Radical::sqrt(m as u64);
    }
    if i >= j {
        r
    } else {
        // 1/(q sqrt(s)) = sqrt(s)/(q s)
        Radical::new((r.q() * int(r.radicand() as i64)).recip(), r.radicand())
    }
}

/// Matrix in the orthonormal basis; each entry is a list of radical
/// coefficients indexed by the power of `z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizedMatrix {
    dim: usize,
    order: usize,
    entries: Vec<Vec<Radical>>,
}

impl NormalizedMatrix {
    pub fn from_unnormalized(u: &FockMatrix) -> Self {
        let d = u.dim;
        let entries = (0..d * d)
            .map(|n| {
                let (i, j) = (n / d, n % d);
                let s = factorial_ratio_sqrt(i, j);
                u.entries[n].coeffs().iter().map(|c| s.scale(c)).collect()
            })
            .collect();
        Self {
            dim: d,
            order: u.order,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &[Radical] {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        self.get(i, j).iter().all(Radical::is_zero)
    }

    pub fn render_entry(&self, i: usize, j: usize) -> String {
        render_radical_series(self.get(i, j))
    }
}

pub fn render_radical_series(coeffs: &[Radical]) -> String {
    let mut out = String::new();
    for (k, r) in coeffs.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
        let zpart = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        let text = match (r.to_string().as_str(), zpart.is_empty()) {
            (s, true) => s.to_string(),
            ("1", false) => zpart,
            ("-1", false) => format!("-{zpart}"),
            (s, false) => format!("{s}*{zpart}"),
        };
        if out.is_empty() {
            out = text;
        } else if let Some(rest) = text.strip_prefix('-') {
            out.push_str(&format!(" - {rest}"));
        } else {
            out.push_str(&format!(" + {text}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Guard band `G`: identities are compared on the leading
/// `(D - G) x (D - G)` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GuardBand {
    pub guard: usize,
}

impl GuardBand {
    /// `G = 2L + M` with `L` the number of lowering factors in the longest
    /// word of the identity.
    pub fn for_identity(lowering: usize, order: usize) -> Self {
        Self {
            guard: 2 * lowering + order,
        }
    }

    pub fn block(&self, dim: usize) -> usize {
        dim.saturating_sub(self.guard)
    }
}

fn lowering_factors(m: &Monomial) -> usize {
    ["A-", "B-"]
        .iter()
        .map(|n| m.exponent(h6_generator(n).expect("fixed")) as usize)
        .sum()
}

/// Matrix of an element: each normal-ordered monomial as a product of
/// generator matrices.
pub fn element_matrix(e: &Element, gens: &[FockMatrix]) -> FockMatrix {
    let dim = gens[0].dim;
    let mut out = FockMatrix::zero(dim, e.order());
    for (m, c) in e.terms() {
        let mat = m
            .word()
            .into_iter()
            .fold(FockMatrix::identity(dim, e.order()), |acc, g| {
                acc.multiply(&gens[g])
            });
        out.add_scaled(&mat, c);
    }
    out
}

fn generator_matrices(dim: usize, order: usize) -> Result<Vec<FockMatrix>, FockError> {
    Generator::all()
        .map(|g| fock_matrix(g, dim, order))
        .collect()
}

fn matrix_residual(res: &FockMatrix) -> Outcome {
    let nz: Vec<_> = res.nonzero_entries().collect();
    Outcome::from_residual(nz.len(), || {
        nz.iter()
            .take(6)
            .map(|(i, j, c)| format!("({i},{j}): {c}"))
            .collect::<Vec<_>>()
            .join("; ")
    })
}

/// Residual of `rho(X)rho(Y) - rho(Y)rho(X) - rho([X,Y])` on the guarded
/// block, together with the guard used.
pub fn pair_residual(
    p: &Presentation,
    gens: &[FockMatrix],
    x: Generator,
    y: Generator,
) -> (FockMatrix, GuardBand) {
    let entry = p.table_entry(x.index, y.index);
    let lowering = entry
        .terms()
        .map(|(m, _)| lowering_factors(m))
        .chain(std::iter::once(
            lowering_factors(&Monomial::generator(x)) + lowering_factors(&Monomial::generator(y)),
        ))
        .max()
        .unwrap_or(0);
    let guard = GuardBand::for_identity(lowering, p.order());
    let lhs = gens[x.index]
        .multiply(&gens[y.index])
        .sub(&gens[y.index].multiply(&gens[x.index]));
    let res = lhs.sub(&element_matrix(entry, gens));
    (res.block(guard.block(gens[0].dim)), guard)
}

/// Commutation relations of `p` on the Fock representation, for every
/// generator pair, plus agreement of the two matrix constructions.
pub fn rep_check(p: &Presentation, dim: usize) -> Result<Report, FockError> {
    if p.name() != H6 {
        return Err(FockError::UnsupportedPresentation(p.name()));
    }
    let order = p.order();
    let mut report: Report = Generator::all()
        .map(|g| {
            CheckRecord::run(
                "fock",
                format!(
                    "fock: closed-form action of {} = boson realization (D={dim})",
                    p.name_of(g)
                ),
                "h6_jordanian.fock_action",
                || match fock_matrix(g, dim, order) {
                    Ok(_) => Outcome::pass(),
                    Err(e) => Outcome::fail(1, e.to_string()),
                },
            )
        })
        .collect();
    let gens = generator_matrices(dim, order)?;
    let pairs: Vec<_> = p.table_entries().map(|(x, y, _)| (x, y)).collect();
    let records: Vec<CheckRecord> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let (nx, ny) = (p.name_of(x), p.name_of(y));
            let mut block = 0;
            let mut rec = CheckRecord::run(
                "fock",
                format!("fock: [{nx},{ny}] on the guarded block (D={dim})"),
                "h6_jordanian.fock_action",
                || {
                    let (res, guard) = pair_residual(p, &gens, x, y);
                    block = guard.block(dim);
                    if block == 0 {
                        return Outcome::fail(1, format!("guard {} leaves no block", guard.guard));
                    }
                    matrix_residual(&res)
                },
            );
            rec.identity = format!("{} [block {block}]", rec.identity);
            rec
        })
        .collect();
    report.extend(records.into_iter().collect());
    Ok(report)
}

/// The classical boson action on number states, in the unnormalized basis.
pub fn undeformed_matrix(g: Generator, dim: usize, order: usize) -> FockMatrix {
    let mut out = FockMatrix::zero(dim, order);
    let one = ZSeries::one(order);
    for m in 0..dim {
        let mq = ZSeries::constant(int(m as i64), order);
        match H6.generator_names()[g.index] {
            "N" => out.add_at(m, m, &mq),
            "M" => out.add_at(m, m, &one),
            "A+" => out.add_at(m + 1, m, &one),
            "A-" if m > 0 => out.add_at(m - 1, m, &mq),
            "B+" => out.add_at(m + 2, m, &one),
            "B-" if m > 1 => out.add_at(
                m - 2,
                m,
                &ZSeries::constant(int((m * (m - 1)) as i64), order),
            ),
            _ => {}
        }
    }
    out
}

/// One reference entry: generator, row, column and `(power of z, value)`.
pub type ReferenceEntry = (&'static str, usize, usize, Vec<(usize, Radical)>);

fn over_sqrt(num: i64, den: i64, n: u64) -> Radical {
    // num / (den sqrt(n)) = num sqrt(n) / (den n)
    Radical::new(rat(num, den * n as i64), n)
}

fn times_sqrt(num: i64, den: i64, n: u64) -> Radical {
    Radical::new(rat(num, den), n)
}

/// Every nonzero entry of the displayed top-left 5x5 blocks.
pub fn reference_entries() -> Vec<ReferenceEntry> {
    let q = |n: i64| Radical::rational(int(n));
    let s = |n: u64| Radical::sqrt(n);
    vec![
        ("A+", 1, 0, vec![(0, q(1))]),
        ("A+", 2, 1, vec![(0, s(2))]),
        ("A+", 3, 2, vec![(0, s(3))]),
        ("A+", 4, 3, vec![(0, s(4))]),
        ("B+", 2, 0, vec![(0, s(2))]),
        ("B+", 3, 0, vec![(1, times_sqrt(-1, 1, 6))]),
        ("B+", 3, 1, vec![(0, s(6))]),
        ("B+", 4, 0, vec![(2, over_sqrt(7, 1, 6))]),
        ("B+", 4, 1, vec![(1, times_sqrt(-2, 1, 6))]),
        ("B+", 4, 2, vec![(0, times_sqrt(2, 1, 3))]),
        ("A-", 0, 1, vec![(0, q(1))]),
        ("A-", 1, 1, vec![(1, q(1))]),
        ("A-", 1, 2, vec![(0, s(2))]),
        ("A-", 2, 1, vec![(2, over_sqrt(1, 1, 2))]),
        ("A-", 2, 2, vec![(1, q(2))]),
        ("A-", 2, 3, vec![(0, s(3))]),
        ("A-", 3, 1, vec![(3, over_sqrt(1, 1, 6))]),
        ("A-", 3, 2, vec![(2, s(3))]),
        ("A-", 3, 3, vec![(1, q(3))]),
        ("A-", 3, 4, vec![(0, s(4))]),
        ("A-", 4, 1, vec![(4, over_sqrt(1, 1, 24))]),
        ("A-", 4, 2, vec![(3, over_sqrt(2, 1, 3))]),
        ("A-", 4, 3, vec![(2, q(3))]),
        ("A-", 4, 4, vec![(1, q(4))]),
        ("B-", 0, 2, vec![(0, s(2))]),
        ("B-", 1, 2, vec![(1, s(2))]),
        ("B-", 1, 3, vec![(0, s(6))]),
        ("B-", 2, 2, vec![(2, q(1))]),
        ("B-", 2, 3, vec![(1, times_sqrt(2, 1, 3))]),
        ("B-", 2, 4, vec![(0, times_sqrt(2, 1, 3))]),
        ("B-", 3, 2, vec![(3, over_sqrt(1, 1, 3))]),
        ("B-", 3, 3, vec![(2, q(3))]),
        ("B-", 3, 4, vec![(1, q(6))]),
        ("B-", 4, 2, vec![(4, over_sqrt(1, 2, 3))]),
        ("B-", 4, 3, vec![(3, q(2))]),
        ("B-", 4, 4, vec![(2, q(6))]),
        ("N", 1, 1, vec![(0, q(1))]),
        ("N", 2, 1, vec![(1, over_sqrt(1, 1, 2))]),
        ("N", 2, 2, vec![(0, q(2))]),
        ("N", 3, 1, vec![(2, over_sqrt(1, 1, 6))]),
        ("N", 3, 2, vec![(1, s(3))]),
        ("N", 3, 3, vec![(0, q(3))]),
        ("N", 4, 1, vec![(3, over_sqrt(1, 1, 24))]),
        ("N", 4, 2, vec![(2, over_sqrt(2, 1, 3))]),
        ("N", 4, 3, vec![(1, q(3))]),
        ("N", 4, 4, vec![(0, q(4))]),
        ("M", 0, 0, vec![(0, q(1))]),
        ("M", 1, 1, vec![(0, q(1))]),
        ("M", 2, 2, vec![(0, q(1))]),
        ("M", 3, 3, vec![(0, q(1))]),
        ("M", 4, 4, vec![(0, q(1))]),
    ]
}

fn expected_series(terms: &[(usize, Radical)], order: usize) -> Vec<Radical> {
    let mut v = vec![Radical::zero(); order + 1];
    for (k, r) in terms.iter().filter(|(k, _)| *k <= order) {
        v[*k] = r.clone();
    }
    v
}

/// Compares the top-left 5x5 blocks with the reference matrices: every
/// reference entry must match, and every entry left blank must vanish.
pub fn compare_with_reference_matrices(order: usize) -> Report {
    const SIZE: usize = 5;
    let reference = reference_entries();
    H6.generator_names()
        .iter()
        .map(|&name| {
            CheckRecord::run(
                "fock",
                format!("fock: reference 5x5 block of {name}"),
                "h6_jordanian.fock_matrices",
                || {
                    let g = h6_generator(name).expect("fixed");
                    // Entries of the block need states up to 4 + order.
                    let dim = SIZE + order + 2;
                    let m = match fock_matrix(g, dim, order) {
                        Ok(m) => m.normalized(),
                        Err(e) => return Outcome::fail(1, e.to_string()),
                    };
                    let mut bad = Vec::new();
                    for i in 0..SIZE {
                        for j in 0..SIZE {
                            let want = reference
                                .iter()
                                .find(|(n, r, c, _)| *n == name && *r == i && *c == j)
                                .map(|(_, _, _, t)| expected_series(t, order))
                                .unwrap_or_else(|| vec![Radical::zero(); order + 1]);
                            if m.get(i, j) != want.as_slice() {
                                bad.push(format!(
                                    "({i},{j}): got {} want {}",
                                    m.render_entry(i, j),
                                    render_radical_series(&want)
                                ));
                            }
                        }
                    }
                    Outcome::from_residual(bad.len(), || bad.join("; "))
                },
            )
        })
        .collect()
}

/// Each generator matrix at `z = 0` against the undeformed action.
pub fn classical_limit_check(dim: usize, order: usize) -> Report {
    Generator::all()
        .map(|g| {
            let name = H6.generator_names()[g.index];
            CheckRecord::run(
                "fock",
                format!("fock: {name} at z=0 is the undeformed ladder action"),
                "h6.fock_action",
                || match fock_matrix(g, dim, order) {
                    Ok(m) => {
                        let res = m.classical_limit().sub(&undeformed_matrix(g, dim, order));
                        matrix_residual(&res)
                    }
                    Err(e) => Outcome::fail(1, e.to_string()),
                },
            )
        })
        .collect()
}

/// Looks up the matrix of an h6 generator by name.
pub fn fock_matrix_named(name: &str, dim: usize, order: usize) -> Result<FockMatrix, FockError> {
    fock_matrix(h6_generator(name)?, dim, order)
}

/// All six generator matrices, in h6 generator order.
pub fn all_fock_matrices(dim: usize, order: usize) -> Result<[FockMatrix; RANK], FockError> {
    let v = generator_matrices(dim, order)?;
    Ok(v.try_into().expect("six generators"))
}

/// True when `q sqrt(r) * sqrt(j!/i!)` is rational for every coefficient.
pub fn normalization_is_consistent(n: &NormalizedMatrix) -> bool {
    (0..n.dim).all(|i| {
        (0..n.dim).all(|j| {
            let back = factorial_ratio_sqrt(j, i);
            n.get(i, j).iter().all(|r| {
                let prod = r * &back;
                prod.radicand() == 1 || prod.is_zero()
            })
        })
    })
}
