//! Noncommutative polynomials on six generators and PBW normal ordering.
//!
//! An [`Element`] is a finite sum of PBW-ordered monomials with [`ZSeries`]
//! coefficients. A [`Presentation`] fixes the generator order and stores the
//! commutator `[X, Y]` for every pair with `X` after `Y`; products are
//! reduced to normal form by repeatedly applying `X Y = Y X + [X, Y]`.
//!
//! Two independent reduction routes exist. [`Presentation::multiply`] is a
//! memoized monomial-times-monomial engine used everywhere else in the
//! crate; [`normal_order_with`] is a plain word-rewriting loop with a
//! selectable redex strategy, used to cross-check the engine.
//!
//! Both routes carry a `z` budget: a commutator term of order `z^k` spends
//! `k` of the remaining budget, and work whose budget would go negative is
//! skipped. Every rewrite either spends budget or lowers the degree (the
//! `z^0` part of each table entry is linear), so reduction always halts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{factorial, fmt_scaled_power, int, rat, Rational, ZSeries};

/// Number of generators in every presentation.
pub const RANK: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcalgError {
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("unknown generator `{name}` in {presentation}")]
    UnknownGenerator {
        name: String,
        presentation: PresentationName,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationName {
    H6Jordanian,
    H6JordanianDual,
    SchrodingerJordanian,
}

impl PresentationName {
    pub const ALL: [PresentationName; 3] = [
        PresentationName::H6Jordanian,
        PresentationName::H6JordanianDual,
        PresentationName::SchrodingerJordanian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PresentationName::H6Jordanian => "h6_jordanian",
            PresentationName::H6JordanianDual => "h6_jordanian_dual",
            PresentationName::SchrodingerJordanian => "schrodinger_jordanian",
        }
    }

    /// Generator names in PBW order.
    pub fn generator_names(self) -> [&'static str; RANK] {
        match self {
            PresentationName::H6Jordanian => ["B-", "A-", "N", "M", "A+", "B+"],
            PresentationName::H6JordanianDual => ["B+", "A+", "N", "M", "A-", "B-"],
            PresentationName::SchrodingerJordanian => ["C", "K", "D", "M", "P", "H"],
        }
    }
}

impl fmt::Display for PresentationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PresentationName {
    type Err = NcalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "h6_jordanian" | "h6" => Ok(PresentationName::H6Jordanian),
            "h6_jordanian_dual" | "h6-dual" | "h6_dual" => Ok(PresentationName::H6JordanianDual),
            "schrodinger_jordanian" | "schrodinger" => Ok(PresentationName::SchrodingerJordanian),
            other => Err(NcalgError::UnknownPresentation(other.to_string())),
        }
    }
}

/// A generator, identified by its position in the PBW order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub index: usize,
}

impl Generator {
    pub const fn new(index: usize) -> Self {
        assert!(index < RANK);
        Self { index }
    }

    pub fn all() -> impl Iterator<Item = Generator> {
        (0..RANK).map(Generator::new)
    }
}

/// The ordered product `g0^e0 * g1^e1 * ... * g5^e5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: [u8; RANK],
}

impl Monomial {
    pub const IDENTITY: Monomial = Monomial { exps: [0; RANK] };

    pub fn from_exponents(exps: [u8; RANK]) -> Self {
        Self { exps }
    }

    pub fn generator(g: Generator) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: Generator, k: u8) -> Self {
        let mut exps = [0; RANK];
        exps[g.index] = k;
        Self { exps }
    }

    pub fn exponents(&self) -> [u8; RANK] {
        self.exps
    }

    pub fn exponent(&self, g: Generator) -> u8 {
        self.exps[g.index]
    }

    pub fn is_identity(&self) -> bool {
        self.exps == [0; RANK]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Last generator (in PBW order) with a nonzero exponent.
    pub fn highest(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// First generator (in PBW order) with a nonzero exponent.
    pub fn lowest(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    fn drop_one(mut self, i: usize) -> Self {
        self.exps[i] -= 1;
        self
    }

    /// Exponent-wise sum: the PBW monomial of the same generators.
    pub fn concat(&self, other: &Monomial) -> Self {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = e.checked_add(o).expect("exponent overflow");
        }
        Self { exps }
    }

    /// The monomial spelled out as a word of generator indices.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree());
        for (i, &e) in self.exps.iter().enumerate() {
            w.extend(std::iter::repeat_n(i, e as usize));
        }
        w
    }

    /// True when every generator with nonzero exponent is in `allowed`.
    pub fn uses_only(&self, allowed: &[Generator]) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || allowed.iter().any(|g| g.index == i))
    }

    pub fn render(&self, names: &[&str; RANK]) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].to_string()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

/// Renders one `coefficient * monomial` term; `leading` controls whether a
/// `+` sign is emitted for positive coefficients.
pub(crate) fn render_term(c: &ZSeries, mono: &str, is_identity: bool, leading: bool) -> String {
    let terms: Vec<_> = c.nonzero_terms().collect();
    let coef = if terms.len() == 1 {
        let (k, q) = terms[0];
        if k == 0 && !is_identity && q.abs().is_one() {
            let sign = if q.is_negative() {
                "-"
            } else if leading {
                ""
            } else {
                "+"
            };
            return format!("{sign}{mono}");
        }
        fmt_scaled_power(q, k, leading)
    } else {
        let sign = if leading { "" } else { "+" };
        format!("{sign}({c})")
    };
    if is_identity {
        coef
    } else {
        format!("{coef}*{mono}")
    }
}

pub(crate) fn join_terms(parts: Vec<String>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, p) in parts.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&p);
        } else {
            let (sign, rest) = p.split_at(1);
            out.push_str(&format!(" {sign} {rest}"));
        }
    }
    out
}

/// A finite sum of normal-ordered monomials with `ZSeries` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    order: usize,
    terms: BTreeMap<Monomial, ZSeries>,
}

impl Element {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::scalar(ZSeries::one(order))
    }

    pub fn scalar(c: ZSeries) -> Self {
        Self::term(Monomial::IDENTITY, c)
    }

    pub fn term(m: Monomial, c: ZSeries) -> Self {
        let mut e = Self::zero(c.order());
        e.add_term(m, &c);
        e
    }

    pub fn generator(g: Generator, order: usize) -> Self {
        Self::term(Monomial::generator(g), ZSeries::one(order))
    }

    /// `c * z^k * m`.
    pub fn scaled_monomial(m: Monomial, c: Rational, k: usize, order: usize) -> Self {
        Self::term(m, ZSeries::term(c, k, order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ZSeries)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> ZSeries {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| ZSeries::zero(self.order))
    }

    pub fn add_term(&mut self, m: Monomial, c: &ZSeries) {
        debug_assert_eq!(c.order(), self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &ZSeries) {
        for (m, oc) in &other.terms {
            self.add_term(*m, &(oc * c));
        }
    }

    pub fn scale(&self, c: &ZSeries) -> Self {
        let mut out = Self::zero(self.order);
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.order);
        for (m, oc) in &self.terms {
            out.add_term(*m, &oc.scale(c));
        }
        out
    }

    /// Multiplies every coefficient by `z^k`.
    pub fn times_z(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.shift_up(k));
        }
        out
    }

    /// Drops every coefficient above `z^budget`.
    pub fn truncated(&self, budget: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.truncated(budget));
        }
        out
    }

    /// Keeps only the `z^0` coefficients.
    pub fn classical_limit(&self) -> Self {
        self.truncated(0)
    }

    /// Substitutes `z -> -z` in every coefficient.
    pub fn negate_z(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.negate_z());
        }
        out
    }

    /// Same coefficients reinterpreted at another truncation order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.with_order(order));
        }
        out
    }

    /// Lowest `z` power among all coefficients.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.values().filter_map(ZSeries::valuation).min()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True when every monomial uses only generators from `allowed`.
    pub fn uses_only(&self, allowed: &[Generator]) -> bool {
        self.terms.keys().all(|m| m.uses_only(allowed))
    }

    /// Multiplies each term by `(-1)^degree`, i.e. sends every generator
    /// to its negative.
    pub fn negate_generators(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            let c = if m.degree() % 2 == 1 { -c } else { c.clone() };
            out.add_term(*m, &c);
        }
        out
    }

    pub fn render(&self, names: &[&str; RANK]) -> String {
        let mut keys: Vec<_> = self.terms.keys().collect();
        keys.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp(a)));
        let parts = keys
            .into_iter()
            .enumerate()
            .map(|(i, m)| render_term(&self.terms[m], &m.render(names), m.is_identity(), i == 0))
            .collect();
        join_terms(parts)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["g0", "g1", "g2", "g3", "g4", "g5"];
        write!(f, "Element[{}]", self.render(&names))
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale_rational(&int(-1))
    }
}

impl std::ops::Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl std::ops::Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl std::ops::Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

type ProductKey = (Monomial, Monomial, usize);

/// A named algebra: generator order plus the commutator table.
pub struct Presentation {
    name: PresentationName,
    order: usize,
    names: [&'static str; RANK],
    // [x * RANK + y] holds [g_x, g_y] for x > y; None while under construction.
    table: Vec<Option<Element>>,
    central: Vec<Generator>,
    cache: RwLock<HashMap<ProductKey, Arc<Element>>>,
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Self {
            name: self.name,
            order: self.order,
            names: self.names,
            table: self.table.clone(),
            central: self.central.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("generators", &self.names)
            .finish()
    }
}

impl Presentation {
    fn empty(name: PresentationName, order: usize) -> Self {
        Self {
            name,
            order,
            names: name.generator_names(),
            table: vec![None; RANK * RANK],
            central: Vec::new(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    fn set(&mut self, x: usize, y: usize, value: Element) {
        assert!(
            x > y,
            "table stores only pairs with the first generator later"
        );
        self.table[x * RANK + y] = Some(value);
    }

    fn finish(mut self) -> Self {
        for x in 0..RANK {
            for y in 0..x {
                assert!(
                    self.table[x * RANK + y].is_some(),
                    "{}: missing commutator [{}, {}]",
                    self.name,
                    self.names[x],
                    self.names[y]
                );
            }
        }
        self.central = Generator::all()
            .filter(|&g| Generator::all().all(|h| g == h || self.bracket(g, h).is_zero()))
            .collect();
        self.cache = RwLock::new(HashMap::new());
        self
    }

    /// Builds a presentation from an explicit table of `[x, y]` for `x > y`.
    pub fn from_table(
        name: PresentationName,
        order: usize,
        entries: impl IntoIterator<Item = ((usize, usize), Element)>,
    ) -> Self {
        let mut p = Self::empty(name, order);
        for ((x, y), e) in entries {
            p.set(x, y, e);
        }
        p.finish()
    }

    pub fn name(&self) -> PresentationName {
        self.name
    }

    /// Truncation order `M`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generator_names(&self) -> &[&'static str; RANK] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Result<Generator, NcalgError> {
        self.names
            .iter()
            .position(|n| *n == name)
            .map(Generator::new)
            .ok_or_else(|| NcalgError::UnknownGenerator {
                name: name.to_string(),
                presentation: self.name,
            })
    }

    /// Shorthand for a generator known to exist.
    pub fn g(&self, name: &str) -> Generator {
        self.generator(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn name_of(&self, g: Generator) -> &'static str {
        self.names[g.index]
    }

    pub fn central_set(&self) -> &[Generator] {
        &self.central
    }

    /// The element `g`.
    pub fn gen(&self, name: &str) -> Element {
        Element::generator(self.g(name), self.order)
    }

    pub fn one(&self) -> Element {
        Element::one(self.order)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.order)
    }

    /// Stored table entry `[g_x, g_y]` for `x > y`.
    pub fn table_entry(&self, x: usize, y: usize) -> &Element {
        assert!(x > y);
        self.table[x * RANK + y].as_ref().unwrap_or_else(|| {
            panic!(
                "{}: commutator [{}, {}] used before it was defined",
                self.name, self.names[x], self.names[y]
            )
        })
    }

    /// All stored entries `(x, y, [g_x, g_y])` with `x > y`.
    pub fn table_entries(&self) -> impl Iterator<Item = (Generator, Generator, &Element)> {
        (0..RANK).flat_map(move |x| {
            (0..x).map(move |y| (Generator::new(x), Generator::new(y), self.table_entry(x, y)))
        })
    }

    /// `[x, y]` with antisymmetry synthesized from the stored half.
    pub fn bracket(&self, x: Generator, y: Generator) -> Element {
        use std::cmp::Ordering::*;
        match x.index.cmp(&y.index) {
            Equal => self.zero(),
            Greater => self.table_entry(x.index, y.index).clone(),
            Less => -self.table_entry(y.index, x.index),
        }
    }

    /// Product of two ordered monomials, exact modulo `z^(budget+1)`.
    pub fn mul_monomials(&self, a: Monomial, b: Monomial, budget: usize) -> Arc<Element> {
        if b.is_identity() || a.is_identity() {
            let m = if b.is_identity() { a } else { b };
            return Arc::new(Element::term(m, ZSeries::one(self.order)));
        }
        if a.highest() <= b.lowest() {
            return Arc::new(Element::term(a.concat(&b), ZSeries::one(self.order)));
        }
        let key = (a, b, budget);
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(&key) {
            return Arc::clone(hit);
        }
        let result = if b.degree() == 1 {
            self.mul_by_generator(a, b.lowest().expect("nonempty"), budget)
        } else {
            let g = b.lowest().expect("nonempty");
            let rest = b.drop_one(g);
            let left = self.mul_monomials(a, Monomial::generator(Generator::new(g)), budget);
            self.right_multiply(&left, rest, budget)
        };
        let result = Arc::new(result.truncated(budget));
        self.cache
            .write()
            .expect("cache poisoned")
            .insert(key, Arc::clone(&result));
        result
    }

    // a * g where the last generator x of a comes after g:
    // p x g = (p g) x + p [x, g].
    fn mul_by_generator(&self, a: Monomial, g: usize, budget: usize) -> Element {
        let x = a.highest().expect("nonempty");
        debug_assert!(x > g);
        let p = a.drop_one(x);
        let pg = self.mul_monomials(p, Monomial::generator(Generator::new(g)), budget);
        let mut out = self.right_multiply(&pg, Monomial::generator(Generator::new(x)), budget);
        for (t, c) in self.table_entry(x, g).terms() {
            let Some(v) = c.valuation() else { continue };
            if v > budget {
                continue;
            }
            let prod = self.mul_monomials(p, *t, budget - v);
            out.add_scaled(&prod, c);
        }
        out
    }

    fn right_multiply(&self, left: &Element, m: Monomial, budget: usize) -> Element {
        let mut out = Element::zero(self.order);
        for (lm, lc) in left.terms() {
            let Some(v) = lc.valuation() else { continue };
            if v > budget {
                continue;
            }
            let prod = self.mul_monomials(*lm, m, budget - v);
            out.add_scaled(&prod, lc);
        }
        out
    }

    /// Product in the algebra, reduced to normal form.
    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let order = self.order;
        let mut out = Element::zero(order);
        for (ma, ca) in a.terms() {
            let Some(va) = ca.valuation() else { continue };
            for (mb, cb) in b.terms() {
                let Some(vb) = cb.valuation() else { continue };
                if va + vb > order {
                    continue;
                }
                let c = ca * cb;
                if c.is_zero() {
                    continue;
                }
                let prod = self.mul_monomials(*ma, *mb, order - va - vb);
                out.add_scaled(&prod, &c);
            }
        }
        out
    }

    /// Left-to-right product of several elements.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a Element>) -> Element {
        factors
            .into_iter()
            .fold(self.one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        &self.multiply(a, b) - &self.multiply(b, a)
    }

    pub fn power(&self, a: &Element, k: usize) -> Element {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    /// `exp(c z g) = sum_k (c z)^k g^k / k!`, truncated at `z^M`.
    pub fn exp_primitive(&self, g: Generator, c: &Rational) -> Element {
        let mut out = Element::zero(self.order);
        let mut ck = Rational::one();
        for k in 0..=self.order {
            out.add_term(
                Monomial::power(g, k as u8),
                &ZSeries::term(&ck / factorial(k), k, self.order),
            );
            ck *= c;
        }
        out
    }

    /// `(exp(c z g) - 1) / z = sum_{k>=1} c^k z^(k-1) g^k / k!`.
    pub fn exp_minus_one_over_z(&self, g: Generator, c: &Rational) -> Element {
        let mut out = Element::zero(self.order);
        let mut ck = c.clone();
        for k in 1..=self.order + 1 {
            out.add_term(
                Monomial::power(g, k as u8),
                &ZSeries::term(&ck / factorial(k), k - 1, self.order),
            );
            ck *= c;
        }
        out
    }

    /// Normal form of an arbitrary word of generators.
    pub fn word(&self, gens: &[Generator]) -> Element {
        let factors: Vec<Element> = gens
            .iter()
            .map(|&g| Element::generator(g, self.order))
            .collect();
        self.product(&factors)
    }

    pub fn render(&self, e: &Element) -> String {
        e.render(&self.names)
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        m.render(&self.names)
    }
}

/// Which adjacent out-of-order pair the rewriter resolves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

/// Normal form of `coeff * word` by direct rewriting (leftmost redex first).
pub fn normal_order(word: &[Generator], coeff: &ZSeries, p: &Presentation) -> Element {
    normal_order_with(word, coeff, p, Strategy::LeftmostFirst)
}

/// Normal form of `coeff * word` by direct rewriting: an adjacent pair
/// `X Y` with `X` after `Y` becomes `Y X + [X, Y]` until no such pair is
/// left. Independent of [`Presentation::multiply`].
pub fn normal_order_with(
    word: &[Generator],
    coeff: &ZSeries,
    p: &Presentation,
    strategy: Strategy,
) -> Element {
    let order = p.order();
    let mut pending: BTreeMap<Vec<usize>, ZSeries> = BTreeMap::new();
    let mut out = Element::zero(order);
    if !coeff.is_zero() {
        pending.insert(word.iter().map(|g| g.index).collect(), coeff.clone());
    }
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let mut inversions = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
        let redex = match strategy {
            Strategy::LeftmostFirst => inversions.next(),
            Strategy::RightmostFirst => inversions.next_back(),
        };
        let Some(i) = redex else {
            let mut exps = [0u8; RANK];
            for &g in &w {
                exps[g] += 1;
            }
            out.add_term(Monomial::from_exponents(exps), &c);
            continue;
        };
        let (x, y) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        push_word(&mut pending, swapped, &c);
        for (t, tc) in p.table_entry(x, y).terms() {
            let nc = &c * tc;
            if nc.is_zero() {
                continue;
            }
            let mut nw = w[..i].to_vec();
            nw.extend(t.word());
            nw.extend_from_slice(&w[i + 2..]);
            push_word(&mut pending, nw, &nc);
        }
    }
    out
}

fn push_word(pending: &mut BTreeMap<Vec<usize>, ZSeries>, w: Vec<usize>, c: &ZSeries) {
    match pending.get_mut(&w) {
        Some(existing) => *existing += c,
        None => {
            pending.insert(w, c.clone());
        }
    }
}

/// The involution relating `h6_jordanian` and `h6_jordanian_dual`:
/// `N -> -N`, `A+ -> -A-`, `A- -> -A+`, `B+ -> -B-`, `B- -> -B+`,
/// `M -> -M`, together with `z -> -z`.
///
/// The two PBW orders are images of each other position by position, so
/// ordered monomials map to ordered monomials and no reordering is needed.
/// The same function maps in either direction.
pub fn automorphism(e: &Element) -> Element {
    e.negate_generators().negate_z()
}

/// `multiply` as a free function over a shared presentation.
pub fn multiply(a: &Element, b: &Element, p: &Presentation) -> Element {
    p.multiply(a, b)
}

pub fn commutator(a: &Element, b: &Element, p: &Presentation) -> Element {
    p.commutator(a, b)
}

pub fn exp_primitive(g: Generator, c: &Rational, p: &Presentation) -> Element {
    p.exp_primitive(g, c)
}

pub fn classical_limit(a: &Element) -> Element {
    a.classical_limit()
}

/// Builds one of the three presentations at truncation order `order`.
pub fn build_presentation(name: PresentationName, order: usize) -> Presentation {
    match name {
        PresentationName::H6Jordanian => build_h6(order),
        PresentationName::H6JordanianDual => build_h6_dual(order),
        PresentationName::SchrodingerJordanian => build_schrodinger(order),
    }
}

pub fn build_presentation_by_name(name: &str, order: usize) -> Result<Presentation, NcalgError> {
    Ok(build_presentation(name.parse()?, order))
}

// Table construction. Entries whose right-hand side is not yet normal
// ordered are reduced with the partially built table, so they are set after
// the simpler entries they depend on.

fn z(k: usize, e: Element) -> Element {
    e.times_z(k)
}

fn build_h6(order: usize) -> Presentation {
    const BM: usize = 0;
    const AM: usize = 1;
    const N: usize = 2;
    const M: usize = 3;
    const AP: usize = 4;
    const BP: usize = 5;
    let mut p = Presentation::empty(PresentationName::H6Jordanian, order);
    let g = |i: usize| Element::generator(Generator::new(i), order);
    let ap = Generator::new(AP);
    let zero = Element::zero(order);

    for other in [BM, AM, N] {
        p.set(M, other, zero.clone());
    }
    p.set(AP, M, zero.clone());
    p.set(BP, M, zero.clone());
    p.set(BP, AP, zero.clone());

    // [A-, B-] = -z A-^2
    p.set(AM, BM, -z(1, p.multiply(&g(AM), &g(AM))));
    // [N, B-] = -2 B- - z A- N
    p.set(
        N,
        BM,
        g(BM).scale_rational(&int(-2)) - z(1, p.multiply(&g(AM), &g(N))),
    );
    // [N, A-] = -A-
    p.set(N, AM, -g(AM));
    // [A+, A-] = -M e^{z A+}
    let m_exp = p.multiply(&g(M), &p.exp_primitive(ap, &int(1)));
    p.set(AP, AM, -m_exp);
    // [A+, N] = -(e^{z A+} - 1)/z
    p.set(AP, N, -p.exp_minus_one_over_z(ap, &int(1)));
    // [B+, N] = -2 B+
    p.set(BP, N, g(BP).scale_rational(&int(-2)));
    // [B+, A-] = -2 (1 - e^{-z A+})/z = 2 (e^{-z A+} - 1)/z
    p.set(
        BP,
        AM,
        p.exp_minus_one_over_z(ap, &int(-1)).scale_rational(&int(2)),
    );

    // [A+, B-] = -(1 + e^{z A+}) A- + z e^{z A+} M N
    let e_plus = p.exp_primitive(ap, &int(1));
    let one_plus = &p.one() + &e_plus;
    let entry = -p.multiply(&one_plus, &g(AM)) + z(1, p.product([&e_plus, &g(M), &g(N)]));
    p.set(AP, BM, entry);

    // [B+, B-] = -(2 (1 + e^{-z A+}) N + 2 M - 2 z A- B+)
    let e_minus = p.exp_primitive(ap, &int(-1));
    let one_plus = &p.one() + &e_minus;
    let bracket = p.multiply(&one_plus, &g(N)).scale_rational(&int(2))
        + g(M).scale_rational(&int(2))
        - z(1, p.multiply(&g(AM), &g(BP))).scale_rational(&int(2));
    p.set(BP, BM, -bracket);

    p.finish()
}

fn build_h6_dual(order: usize) -> Presentation {
    const BP: usize = 0;
    const AP: usize = 1;
    const N: usize = 2;
    const M: usize = 3;
    const AM: usize = 4;
    const BM: usize = 5;
    let mut p = Presentation::empty(PresentationName::H6JordanianDual, order);
    let g = |i: usize| Element::generator(Generator::new(i), order);
    let am = Generator::new(AM);
    let zero = Element::zero(order);

    for other in [BP, AP, N] {
        p.set(M, other, zero.clone());
    }
    p.set(AM, M, zero.clone());
    p.set(BM, M, zero.clone());
    p.set(BM, AM, zero.clone());

    // [A+, B+] = z A+^2
    p.set(AP, BP, z(1, p.multiply(&g(AP), &g(AP))));
    // [N, B+] = 2 B+ + z A+ N
    p.set(
        N,
        BP,
        g(BP).scale_rational(&int(2)) + z(1, p.multiply(&g(AP), &g(N))),
    );
    // [N, A+] = A+
    p.set(N, AP, g(AP));
    // [A-, A+] = M e^{z A-}
    p.set(AM, AP, p.multiply(&g(M), &p.exp_primitive(am, &int(1))));
    // [A-, N] = -[N, A-] = (e^{z A-} - 1)/z
    p.set(AM, N, p.exp_minus_one_over_z(am, &int(1)));
    // [B-, N] = 2 B-
    p.set(BM, N, g(BM).scale_rational(&int(2)));
    // [B-, A+] = -[A+, B-] = 2 (1 - e^{-z A-})/z = -2 (e^{-z A-} - 1)/z
    p.set(
        BM,
        AP,
        p.exp_minus_one_over_z(am, &int(-1))
            .scale_rational(&int(-2)),
    );

    // [A-, B+] = (1 + e^{z A-}) A+ - z e^{z A-} M N
    let e_plus = p.exp_primitive(am, &int(1));
    let one_plus = &p.one() + &e_plus;
    let entry = p.multiply(&one_plus, &g(AP)) - z(1, p.product([&e_plus, &g(M), &g(N)]));
    p.set(AM, BP, entry);

    // [B-, B+] = -[B+, B-] = 2 (1 + e^{-z A-}) N + 2 M - 2 z A+ B-
    let e_minus = p.exp_primitive(am, &int(-1));
    let one_plus = &p.one() + &e_minus;
    let entry = p.multiply(&one_plus, &g(N)).scale_rational(&int(2)) + g(M).scale_rational(&int(2))
        - z(1, p.multiply(&g(AP), &g(BM))).scale_rational(&int(2));
    p.set(BM, BP, entry);

    p.finish()
}

fn build_schrodinger(order: usize) -> Presentation {
    const C: usize = 0;
    const K: usize = 1;
    const D: usize = 2;
    const M: usize = 3;
    const P: usize = 4;
    const H: usize = 5;
    let mut p = Presentation::empty(PresentationName::SchrodingerJordanian, order);
    let g = |i: usize| Element::generator(Generator::new(i), order);
    let pg = Generator::new(P);
    let zero = Element::zero(order);
    let half = rat(1, 2);
    // D + M/2
    let d_shift = g(D) + g(M).scale_rational(&half);

    for other in [C, K, D] {
        p.set(M, other, zero.clone());
    }
    p.set(P, M, zero.clone());
    p.set(H, M, zero.clone());
    p.set(H, P, zero.clone());

    // [K, C] = -(z/2) K^2
    p.set(
        K,
        C,
        z(1, p.multiply(&g(K), &g(K))).scale_rational(&rat(-1, 2)),
    );
    // [D, C] = 2C - (z/2) K (D + M/2)
    p.set(
        D,
        C,
        g(C).scale_rational(&int(2)) - z(1, p.multiply(&g(K), &d_shift)).scale_rational(&half),
    );
    // [D, K] = K
    p.set(D, K, g(K));
    // [P, K] = -[K, P] = -M e^{z P}
    p.set(P, K, -p.multiply(&g(M), &p.exp_primitive(pg, &int(1))));
    // [P, D] = -[D, P] = (e^{z P} - 1)/z
    p.set(P, D, p.exp_minus_one_over_z(pg, &int(1)));
    // [H, K] = -[K, H] = -(1 - e^{-z P})/z = (e^{-z P} - 1)/z
    p.set(H, K, p.exp_minus_one_over_z(pg, &int(-1)));
    // [H, D] = -[D, H] = 2H
    p.set(H, D, g(H).scale_rational(&int(2)));

    // [P, C] = -(1/2)(1 + e^{z P}) K - (z/2) e^{z P} M (D + M/2)
    let e_plus = p.exp_primitive(pg, &int(1));
    let one_plus = &p.one() + &e_plus;
    let entry = -p.multiply(&one_plus, &g(K)).scale_rational(&half)
        - z(1, p.product([&e_plus, &g(M), &d_shift])).scale_rational(&half);
    p.set(P, C, entry);

    // [H, C] = (1/2)(1 + e^{-z P})(D + M/2) - M/2 + z K H
    let e_minus = p.exp_primitive(pg, &int(-1));
    let one_plus = &p.one() + &e_minus;
    let entry = p.multiply(&one_plus, &d_shift).scale_rational(&half) - g(M).scale_rational(&half)
        + z(1, p.multiply(&g(K), &g(H)));
    p.set(H, C, entry);

    p.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h6(order: usize) -> Presentation {
        build_presentation(PresentationName::H6Jordanian, order)
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert_eq!(
            build_presentation_by_name("sl2", 2).unwrap_err(),
            NcalgError::UnknownPresentation("sl2".into())
        );
        assert!(h6(2).generator("Q").is_err());
    }

    #[test]
    fn a_minus_a_plus_entry_is_m_exp() {
        let p = h6(3);
        let entry = p.bracket(p.g("A-"), p.g("A+"));
        let expected = p.multiply(&p.gen("M"), &p.exp_primitive(p.g("A+"), &int(1)));
        assert_eq!(entry, expected);
        assert_eq!(
            p.render(&entry),
            "M + z*M*A+ + (z^2/2)*M*A+^2 + (z^3/6)*M*A+^3"
        );
    }

    #[test]
    fn classical_entries() {
        let p = h6(0);
        let bb = p.bracket(p.g("B-"), p.g("B+"));
        let expected = p.gen("N").scale_rational(&int(4)) + p.gen("M").scale_rational(&int(2));
        assert_eq!(bb, expected);
        let p4 = h6(4);
        let na = p4.bracket(p4.g("N"), p4.g("A+"));
        assert_eq!(na.classical_limit(), p4.gen("A+"));
        assert_eq!(
            p4.bracket(p4.g("B-"), p4.g("B+")).classical_limit(),
            p4.gen("N").scale_rational(&int(4)) + p4.gen("M").scale_rational(&int(2))
        );
    }

    #[test]
    fn schrodinger_k_c_entry() {
        let p = build_presentation(PresentationName::SchrodingerJordanian, 3);
        let kc = p.bracket(p.g("K"), p.g("C"));
        assert_eq!(p.render(&kc), "-(z/2)*K^2");
    }

    #[test]
    fn normal_order_fixed_point_and_swap() {
        let p = h6(3);
        let ordered = [p.g("A-"), p.g("N"), p.g("A+")];
        let one = ZSeries::one(3);
        assert_eq!(
            normal_order(&ordered, &one, &p),
            Element::term(
                Monomial::from_exponents([0, 1, 1, 0, 1, 0]),
                ZSeries::one(3)
            )
        );
        // A- precedes A+ in the PBW order, so A+ A- is the word that rewrites.
        let swapped = normal_order(&[p.g("A+"), p.g("A-")], &one, &p);
        let expected = &p.multiply(&p.gen("A-"), &p.gen("A+")) - &p.bracket(p.g("A-"), p.g("A+"));
        assert_eq!(swapped, expected);
        assert_eq!(
            p.render(&swapped),
            "-M + A-*A+ - z*M*A+ - (z^2/2)*M*A+^2 - (z^3/6)*M*A+^3"
        );
        let already = normal_order(&[p.g("A-"), p.g("A+")], &one, &p);
        assert_eq!(p.render(&already), "A-*A+");
    }

    #[test]
    fn a_plus_n_reorders_with_expm1() {
        let p = h6(3);
        let lhs = p.multiply(&p.gen("A+"), &p.gen("N"));
        let rhs =
            p.multiply(&p.gen("N"), &p.gen("A+")) - p.exp_minus_one_over_z(p.g("A+"), &int(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_examples() {
        let p = h6(4);
        let c = p.commutator(&p.gen("A-"), &p.gen("B-"));
        assert_eq!(p.render(&c), "-z*A-^2");
        assert!(p.commutator(&p.gen("N"), &p.gen("N")).is_zero());
        let nb = p.commutator(&p.gen("N"), &p.gen("B-"));
        assert_eq!(p.render(&nb), "-2*B- - z*A-*N");
    }

    #[test]
    fn m_is_central_everywhere() {
        for name in PresentationName::ALL {
            let p = build_presentation(name, 3);
            let m = p.gen("M");
            for g in Generator::all() {
                let x = Element::generator(g, 3);
                assert!(
                    p.commutator(&m, &x).is_zero(),
                    "{name}: [M, {}]",
                    p.name_of(g)
                );
            }
            assert_eq!(p.central_set(), &[p.g("M")]);
        }
    }

    #[test]
    fn exp_primitive_basics() {
        let p = h6(2);
        let ap = p.g("A+");
        let e = p.exp_primitive(ap, &int(1));
        assert_eq!(p.render(&e), "1 + z*A+ + (z^2/2)*A+^2");
        let inv = p.exp_primitive(ap, &int(-1));
        assert_eq!(p.multiply(&e, &inv), p.one());
        assert_eq!(e.classical_limit(), p.one());
        assert!(p.gen("A-").times_z(2).classical_limit().is_zero());
    }

    #[test]
    fn strategies_agree_on_a_long_word() {
        let p = h6(3);
        let w = ["B+", "B-", "A-", "B+", "N", "A+"].map(|n| p.g(n));
        let one = ZSeries::one(3);
        let left = normal_order_with(&w, &one, &p, Strategy::LeftmostFirst);
        let right = normal_order_with(&w, &one, &p, Strategy::RightmostFirst);
        assert_eq!(left, right);
        assert_eq!(left, p.word(&w));
    }
}
