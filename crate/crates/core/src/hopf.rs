//! Tensor powers of the deformed algebras, their Hopf structure, and the
//! universal R-matrices.
//!
//! A [`TensorElement`] of rank 2 or 3 is a sum of `coefficient * m1 (x) m2
//! (x) ...` with each slot a normal-ordered monomial. Products act slot by
//! slot and each slot is reduced independently by the underlying
//! [`Presentation`].
//!
//! [`HopfStructure`] holds the generator tables for coproduct, counit and
//! antipode and extends them (anti)multiplicatively. The check functions
//! return [`Report`]s; a failing identity carries its residual.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::ncalg::{
    automorphism, build_presentation, join_terms, render_term, Element, Generator, Monomial,
    Presentation, PresentationName, RANK,
};
use crate::report::{CheckRecord, Outcome, Report};
use crate::scalars::{factorial, int, rat, Rational, ZSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("tensor rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
}

/// Element of a tensor power `U^(x)rank`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    rank: usize,
    order: usize,
    terms: BTreeMap<Vec<Monomial>, ZSeries>,
}

impl TensorElement {
    pub fn zero(rank: usize, order: usize) -> Self {
        Self {
            rank,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, order: usize) -> Self {
        let mut t = Self::zero(rank, order);
        t.add_term(vec![Monomial::IDENTITY; rank], &ZSeries::one(order));
        t
    }

    /// The pure tensor `factors[0] (x) factors[1] (x) ...`.
    pub fn tensor(factors: &[&Element]) -> Self {
        let order = factors[0].order();
        let mut out = Self::zero(factors.len(), order);
        let mut key = Vec::with_capacity(factors.len());
        expand_pure(factors, &mut key, &ZSeries::one(order), &mut out);
        out
    }

    pub fn tensor2(a: &Element, b: &Element) -> Self {
        Self::tensor(&[a, b])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &ZSeries)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Monomial]) -> ZSeries {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| ZSeries::zero(self.order))
    }

    pub fn add_term(&mut self, key: Vec<Monomial>, c: &ZSeries) {
        debug_assert_eq!(key.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &ZSeries) {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        for (k, oc) in &other.terms {
            self.add_term(k.clone(), &(oc * c));
        }
    }

    pub fn scale(&self, c: &ZSeries) -> Self {
        let mut out = Self::zero(self.rank, self.order);
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&ZSeries::constant(c.clone(), self.order))
    }

    /// Keeps only the coefficient of `z^k` in every term.
    pub fn z_part(&self, k: usize) -> Self {
        let mut out = Self::zero(self.rank, self.order);
        for (key, c) in &self.terms {
            out.add_term(
                key.clone(),
                &ZSeries::term(c.coeff(k).clone(), k, self.order),
            );
        }
        out
    }

    pub fn classical_limit(&self) -> Self {
        self.z_part(0)
    }

    /// Reorders slots: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank);
        let mut out = Self::zero(self.rank, self.order);
        for (key, c) in &self.terms {
            out.add_term(perm.iter().map(|&i| key[i]).collect(), c);
        }
        out
    }

    /// Swaps the two slots of a rank-2 element.
    pub fn flip(&self) -> Self {
        assert_eq!(self.rank, 2, "flip needs rank 2");
        self.permute(&[1, 0])
    }

    /// Places a rank-2 element into `slots` of a rank-3 tensor, with the
    /// identity in the remaining slot.
    pub fn embed3(&self, slots: (usize, usize)) -> Self {
        assert_eq!(self.rank, 2, "embed3 needs rank 2");
        assert!(slots.0 < 3 && slots.1 < 3 && slots.0 != slots.1);
        let mut out = Self::zero(3, self.order);
        for (key, c) in &self.terms {
            let mut k = vec![Monomial::IDENTITY; 3];
            k[slots.0] = key[0];
            k[slots.1] = key[1];
            out.add_term(k, c);
        }
        out
    }

    /// Applies `f` to every slot monomial and re-expands.
    pub fn map_slots(&self, f: impl Fn(usize, &Monomial) -> Element) -> Self {
        let mut out = Self::zero(self.rank, self.order);
        for (key, c) in &self.terms {
            let images: Vec<Element> = key.iter().enumerate().map(|(i, m)| f(i, m)).collect();
            let refs: Vec<&Element> = images.iter().collect();
            let mut k = Vec::with_capacity(self.rank);
            expand_pure(&refs, &mut k, c, &mut out);
        }
        out
    }

    /// Collapses a rank-1 tensor to an element.
    pub fn to_element(&self) -> Element {
        assert_eq!(self.rank, 1);
        let mut out = Element::zero(self.order);
        for (key, c) in &self.terms {
            out.add_term(key[0], c);
        }
        out
    }

    pub fn render(&self, names: &[&str; RANK]) -> String {
        let parts = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, (key, c))| {
                let mono = key
                    .iter()
                    .map(|m| m.render(names))
                    .collect::<Vec<_>>()
                    .join(" (x) ");
                render_term(c, &mono, false, i == 0)
            })
            .collect();
        join_terms(parts)
    }
}

fn expand_pure(
    factors: &[&Element],
    key: &mut Vec<Monomial>,
    coeff: &ZSeries,
    out: &mut TensorElement,
) {
    let i = key.len();
    if i == factors.len() {
        out.add_term(key.clone(), coeff);
        return;
    }
    for (m, c) in factors[i].terms() {
        let nc = coeff * c;
        if nc.is_zero() {
            continue;
        }
        key.push(*m);
        expand_pure(factors, key, &nc, out);
        key.pop();
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["g0", "g1", "g2", "g3", "g4", "g5"];
        write!(f, "TensorElement[{}]", self.render(&names))
    }
}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &ZSeries::one(self.order));
        out
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-ZSeries::one(self.order));
        out
    }
}

impl std::ops::Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&-ZSeries::one(self.order))
    }
}

impl std::ops::Add for TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: TensorElement) -> TensorElement {
        &self + &rhs
    }
}

impl std::ops::Sub for TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: TensorElement) -> TensorElement {
        &self - &rhs
    }
}

// Above this many term pairs the product is split across threads.
const PARALLEL_PAIRS: usize = 512;

/// Slot-wise product with per-slot normal ordering.
pub fn tensor_multiply(
    a: &TensorElement,
    b: &TensorElement,
    p: &Presentation,
) -> Result<TensorElement, HopfError> {
    if a.rank != b.rank {
        return Err(HopfError::RankMismatch {
            left: a.rank,
            right: b.rank,
        });
    }
    let left: Vec<_> = a.terms.iter().collect();
    let partial = |(ka, ca): &(&Vec<Monomial>, &ZSeries)| {
        let mut out = TensorElement::zero(a.rank, p.order());
        multiply_row(ka, ca, b, p, &mut out);
        out
    };
    if left.len() * b.len() < PARALLEL_PAIRS {
        let mut out = TensorElement::zero(a.rank, p.order());
        for (ka, ca) in &left {
            multiply_row(ka, ca, b, p, &mut out);
        }
        return Ok(out);
    }
    let parts: Vec<TensorElement> = left.par_iter().map(partial).collect();
    let mut out = TensorElement::zero(a.rank, p.order());
    let one = ZSeries::one(p.order());
    for part in &parts {
        out.add_scaled(part, &one);
    }
    Ok(out)
}

fn multiply_row(
    ka: &[Monomial],
    ca: &ZSeries,
    b: &TensorElement,
    p: &Presentation,
    out: &mut TensorElement,
) {
    let order = p.order();
    let Some(va) = ca.valuation() else { return };
    for (kb, cb) in &b.terms {
        let Some(vb) = cb.valuation() else { continue };
        if va + vb > order {
            continue;
        }
        let c = ca * cb;
        if c.is_zero() {
            continue;
        }
        let budget = order - va - vb;
        let slots: Vec<Arc<Element>> = ka
            .iter()
            .zip(kb)
            .map(|(x, y)| p.mul_monomials(*x, *y, budget))
            .collect();
        let refs: Vec<&Element> = slots.iter().map(|s| s.as_ref()).collect();
        let mut key = Vec::with_capacity(ka.len());
        expand_pure(&refs, &mut key, &c, out);
    }
}

pub fn flip(t: &TensorElement) -> TensorElement {
    t.flip()
}

/// The involution of [`automorphism`] applied in every slot.
pub fn tensor_automorphism(t: &TensorElement) -> TensorElement {
    t.map_slots(|_, m| automorphism(&Element::term(*m, ZSeries::one(t.order))))
        .negate_z_coefficients()
}

impl TensorElement {
    fn negate_z_coefficients(&self) -> Self {
        let mut out = Self::zero(self.rank, self.order);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.negate_z());
        }
        out
    }
}

/// Coproduct, counit and antipode tables over a presentation.
pub struct HopfStructure {
    presentation: Presentation,
    coproduct_table: Vec<TensorElement>,
    counit_table: Vec<ZSeries>,
    antipode_table: Vec<Element>,
    coproduct_cache: RwLock<HashMap<Monomial, Arc<TensorElement>>>,
    antipode_cache: RwLock<HashMap<Monomial, Arc<Element>>>,
}

impl fmt::Debug for HopfStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfStructure")
            .field("presentation", &self.presentation)
            .finish()
    }
}

impl HopfStructure {
    /// Assembles a structure from explicit generator tables (indexed by
    /// PBW position).
    pub fn from_tables(
        presentation: Presentation,
        coproduct_table: Vec<TensorElement>,
        counit_table: Vec<ZSeries>,
        antipode_table: Vec<Element>,
    ) -> Self {
        assert_eq!(coproduct_table.len(), RANK);
        assert_eq!(counit_table.len(), RANK);
        assert_eq!(antipode_table.len(), RANK);
        Self {
            presentation,
            coproduct_table,
            counit_table,
            antipode_table,
            coproduct_cache: RwLock::new(HashMap::new()),
            antipode_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn name(&self) -> PresentationName {
        self.presentation.name()
    }

    pub fn order(&self) -> usize {
        self.presentation.order()
    }

    pub fn coproduct_of(&self, g: Generator) -> &TensorElement {
        &self.coproduct_table[g.index]
    }

    pub fn counit_of(&self, g: Generator) -> &ZSeries {
        &self.counit_table[g.index]
    }

    pub fn antipode_of(&self, g: Generator) -> &Element {
        &self.antipode_table[g.index]
    }

    fn tmul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        tensor_multiply(a, b, &self.presentation).expect("ranks agree")
    }

    /// Coproduct of an ordered monomial, `Delta(g m') = Delta(g) Delta(m')`.
    pub fn coproduct_monomial(&self, m: &Monomial) -> Arc<TensorElement> {
        if let Some(hit) = self.coproduct_cache.read().expect("poisoned").get(m) {
            return Arc::clone(hit);
        }
        let result = match m.lowest() {
            None => TensorElement::one(2, self.order()),
            Some(g) => {
                let first = &self.coproduct_table[g];
                let mut exps = m.exponents();
                exps[g] -= 1;
                let rest = Monomial::from_exponents(exps);
                if rest.is_identity() {
                    first.clone()
                } else {
                    self.tmul(first, &self.coproduct_monomial(&rest))
                }
            }
        };
        let result = Arc::new(result);
        self.coproduct_cache
            .write()
            .expect("poisoned")
            .insert(*m, Arc::clone(&result));
        result
    }

    /// Antipode of an ordered monomial, `S(g m') = S(m') S(g)`.
    pub fn antipode_monomial(&self, m: &Monomial) -> Arc<Element> {
        if let Some(hit) = self.antipode_cache.read().expect("poisoned").get(m) {
            return Arc::clone(hit);
        }
        let p = &self.presentation;
        let result = match m.lowest() {
            None => p.one(),
            Some(g) => {
                let mut exps = m.exponents();
                exps[g] -= 1;
                let rest = Monomial::from_exponents(exps);
                p.multiply(&self.antipode_monomial(&rest), &self.antipode_table[g])
            }
        };
        let result = Arc::new(result);
        self.antipode_cache
            .write()
            .expect("poisoned")
            .insert(*m, Arc::clone(&result));
        result
    }

    pub fn coproduct(&self, a: &Element) -> TensorElement {
        let mut out = TensorElement::zero(2, self.order());
        for (m, c) in a.terms() {
            out.add_scaled(&self.coproduct_monomial(m), c);
        }
        out
    }

    /// Every generator has zero counit, so only the identity term survives.
    pub fn counit(&self, a: &Element) -> ZSeries {
        let mut out = ZSeries::zero(self.order());
        for (m, c) in a.terms() {
            let mut value = ZSeries::one(self.order());
            for g in m.word() {
                value = &value * &self.counit_table[g];
            }
            out += &(&value * c);
        }
        out
    }

    pub fn antipode(&self, a: &Element) -> Element {
        let mut out = Element::zero(self.order());
        for (m, c) in a.terms() {
            out.add_scaled(&self.antipode_monomial(m), c);
        }
        out
    }

    /// `Delta` applied in one slot; the rank grows by one.
    pub fn coproduct_in_slot(&self, t: &TensorElement, slot: usize) -> TensorElement {
        let mut out = TensorElement::zero(t.rank() + 1, self.order());
        for (key, c) in t.terms() {
            let d = self.coproduct_monomial(&key[slot]);
            for (dk, dc) in d.terms() {
                let mut k = key[..slot].to_vec();
                k.extend_from_slice(dk);
                k.extend_from_slice(&key[slot + 1..]);
                out.add_term(k, &(c * dc));
            }
        }
        out
    }

    /// `epsilon` applied in one slot; the rank drops by one.
    pub fn counit_in_slot(&self, t: &TensorElement, slot: usize) -> TensorElement {
        let mut out = TensorElement::zero(t.rank() - 1, self.order());
        for (key, c) in t.terms() {
            let e = self.counit(&Element::term(key[slot], ZSeries::one(self.order())));
            if e.is_zero() {
                continue;
            }
            let mut k = key.clone();
            k.remove(slot);
            out.add_term(k, &(c * &e));
        }
        out
    }

    pub fn antipode_in_slot(&self, t: &TensorElement, slot: usize) -> TensorElement {
        let one = ZSeries::one(self.order());
        t.map_slots(|i, m| {
            if i == slot {
                self.antipode_monomial(m).as_ref().clone()
            } else {
                Element::term(*m, one.clone())
            }
        })
    }

    /// Multiplication map `a (x) b -> a b`.
    pub fn multiply_out(&self, t: &TensorElement) -> Element {
        assert_eq!(t.rank(), 2);
        let p = &self.presentation;
        let mut out = Element::zero(self.order());
        for (key, c) in t.terms() {
            let Some(v) = c.valuation() else { continue };
            let prod = p.mul_monomials(key[0], key[1], self.order() - v);
            out.add_scaled(&prod, c);
        }
        out
    }

    pub fn render_tensor(&self, t: &TensorElement) -> String {
        t.render(self.presentation.generator_names())
    }
}

pub fn coproduct(a: &Element, h: &HopfStructure) -> TensorElement {
    h.coproduct(a)
}

pub fn counit(a: &Element, h: &HopfStructure) -> ZSeries {
    h.counit(a)
}

pub fn antipode(a: &Element, h: &HopfStructure) -> Element {
    h.antipode(a)
}

/// Builds the Hopf structure of one of the three presentations.
pub fn build_hopf(name: PresentationName, order: usize) -> HopfStructure {
    match name {
        PresentationName::H6Jordanian => h6_hopf(order),
        PresentationName::H6JordanianDual => h6_dual_hopf(order),
        PresentationName::SchrodingerJordanian => schrodinger_hopf(order),
    }
}

fn h6_hopf(order: usize) -> HopfStructure {
    let p = build_presentation(PresentationName::H6Jordanian, order);
    let one = p.one();
    let t = TensorElement::tensor2;
    let [bm, am, n, m, ap, bp] = ["B-", "A-", "N", "M", "A+", "B+"].map(|s| p.gen(s));
    let exp_ap = |c: i64| p.exp_primitive(p.g("A+"), &int(c));
    let primitive = |x: &Element| t(&one, x) + t(x, &one);

    let mut delta = vec![TensorElement::zero(2, order); RANK];
    delta[p.g("A+").index] = primitive(&ap);
    delta[p.g("M").index] = primitive(&m);
    // 1 (x) N + N (x) e^{z A+}
    delta[p.g("N").index] = t(&one, &n) + t(&n, &exp_ap(1));
    // 1 (x) B+ + B+ (x) e^{-2z A+}
    delta[p.g("B+").index] = t(&one, &bp) + t(&bp, &exp_ap(-2));
    // 1 (x) A- + A- (x) e^{z A+} + z N (x) e^{z A+} M
    delta[p.g("A-").index] =
        t(&one, &am) + t(&am, &exp_ap(1)) + t(&n.times_z(1), &p.multiply(&exp_ap(1), &m));
    // 1 (x) B- + B- (x) e^{2z A+} + z N (x) e^{z A+}(A- - z M N) - z A- (x) e^{z A+} N
    let inner = &am - &p.multiply(&m, &n).times_z(1);
    delta[p.g("B-").index] =
        t(&one, &bm) + t(&bm, &exp_ap(2)) + t(&n.times_z(1), &p.multiply(&exp_ap(1), &inner))
            - t(&am.times_z(1), &p.multiply(&exp_ap(1), &n));

    let mut gamma = vec![Element::zero(order); RANK];
    gamma[p.g("A+").index] = -&ap;
    gamma[p.g("M").index] = -&m;
    gamma[p.g("N").index] = -p.multiply(&n, &exp_ap(-1));
    gamma[p.g("B+").index] = -p.multiply(&bp, &exp_ap(2));
    // -A- e^{-z A+} + z N M e^{-z A+}
    gamma[p.g("A-").index] =
        -p.multiply(&am, &exp_ap(-1)) + p.product([&n, &m, &exp_ap(-1)]).times_z(1);
    // -B- e^{-2z A+} - z A- e^{-2z A+}
    gamma[p.g("B-").index] =
        -p.multiply(&bm, &exp_ap(-2)) - p.multiply(&am, &exp_ap(-2)).times_z(1);

    let counit = vec![ZSeries::zero(order); RANK];
    HopfStructure::from_tables(p, delta, counit, gamma)
}

// Coproduct and antipode carried over from h6 by the involution.
fn h6_dual_hopf(order: usize) -> HopfStructure {
    let source = h6_hopf(order);
    let p = build_presentation(PresentationName::H6JordanianDual, order);
    let minus = ZSeries::constant(int(-1), order);
    let delta = (0..RANK)
        .map(|i| tensor_automorphism(&source.coproduct_table[i]).scale(&minus))
        .collect();
    let gamma = (0..RANK)
        .map(|i| automorphism(&source.antipode_table[i]).scale(&minus))
        .collect();
    HopfStructure::from_tables(p, delta, vec![ZSeries::zero(order); RANK], gamma)
}

fn schrodinger_hopf(order: usize) -> HopfStructure {
    let p = build_presentation(PresentationName::SchrodingerJordanian, order);
    let one = p.one();
    let t = TensorElement::tensor2;
    let [c, k, d, m, pp, h] = ["C", "K", "D", "M", "P", "H"].map(|s| p.gen(s));
    let exp_p = |c: i64| p.exp_primitive(p.g("P"), &int(c));
    let half = rat(1, 2);
    let primitive = |x: &Element| t(&one, x) + t(x, &one);
    // D + M/2
    let d_shift = &d + &m.scale_rational(&half);

    let mut delta = vec![TensorElement::zero(2, order); RANK];
    delta[p.g("P").index] = primitive(&pp);
    delta[p.g("M").index] = primitive(&m);
    // 1 (x) H + H (x) e^{-2zP}
    delta[p.g("H").index] = t(&one, &h) + t(&h, &exp_p(-2));
    // 1 (x) K + K (x) e^{zP} - z (D + M/2) (x) e^{zP} M
    delta[p.g("K").index] =
        t(&one, &k) + t(&k, &exp_p(1)) - t(&d_shift.times_z(1), &p.multiply(&exp_p(1), &m));
    // 1 (x) D + D (x) e^{zP} + (1/2) M (x) (e^{zP} - 1)
    delta[p.g("D").index] =
        t(&one, &d) + t(&d, &exp_p(1)) + t(&m.scale_rational(&half), &(&exp_p(1) - &one));
    // 1 (x) C + C (x) e^{2zP} - (z/2)(D + M/2) (x) e^{zP}(K + z (D + M/2) M)
    //   + (z/2) K (x) e^{zP} (D + M/2)
    let inner = &k + &p.multiply(&d_shift, &m).times_z(1);
    delta[p.g("C").index] = t(&one, &c) + t(&c, &exp_p(2))
        - t(
            &d_shift.times_z(1).scale_rational(&half),
            &p.multiply(&exp_p(1), &inner),
        )
        + t(
            &k.times_z(1).scale_rational(&half),
            &p.multiply(&exp_p(1), &d_shift),
        );

    // Antipodes are the images of the h6 ones under D = -N - M/2, P = A+,
    // K = A-, H = B+/2, C = B-/2.
    let mut gamma = vec![Element::zero(order); RANK];
    gamma[p.g("P").index] = -&pp;
    gamma[p.g("M").index] = -&m;
    // -K e^{-zP} - z (D + M/2) M e^{-zP}
    gamma[p.g("K").index] =
        -p.multiply(&k, &exp_p(-1)) - p.product([&d_shift, &m, &exp_p(-1)]).times_z(1);
    // -(D + M/2) e^{-zP} + M/2
    gamma[p.g("D").index] = -p.multiply(&d_shift, &exp_p(-1)) + m.scale_rational(&half);
    // -H e^{2zP}
    gamma[p.g("H").index] = -p.multiply(&h, &exp_p(2));
    // -C e^{-2zP} - (z/2) K e^{-2zP}
    gamma[p.g("C").index] =
        -p.multiply(&c, &exp_p(-2)) - p.multiply(&k, &exp_p(-2)).times_z(1).scale_rational(&half);

    HopfStructure::from_tables(p, delta, vec![ZSeries::zero(order); RANK], gamma)
}

type Check<'a> = (String, String, Box<dyn Fn() -> Outcome + Send + Sync + 'a>);

fn run_checks(suite: &str, checks: Vec<Check<'_>>) -> Report {
    checks
        .par_iter()
        .map(|(identity, anchor, f)| CheckRecord::run(suite, identity.clone(), anchor, f))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn tensor_outcome(h: &HopfStructure, residual: &TensorElement) -> Outcome {
    Outcome::from_residual(residual.len(), || h.render_tensor(residual))
}

/// Morphism, coassociativity, counit and antipode axioms on generators.
pub fn check_hopf_axioms(h: &HopfStructure) -> Report {
    let p = h.presentation();
    let order = h.order();
    let name = h.name();
    let mut checks: Vec<Check<'_>> = Vec::new();

    for (x, y, entry) in p.table_entries() {
        let (nx, ny) = (p.name_of(x), p.name_of(y));
        checks.push((
            format!("{name}: Delta[{nx},{ny}] = [Delta {nx}, Delta {ny}]"),
            format!("{name}.commutators+coproduct"),
            Box::new(move || {
                let dx = h.coproduct_of(x);
                let dy = h.coproduct_of(y);
                let lhs = &h.tmul(dx, dy) - &h.tmul(dy, dx);
                let residual = &lhs - &h.coproduct(entry);
                tensor_outcome(h, &residual)
            }),
        ));
    }
    for g in Generator::all() {
        let ng = p.name_of(g);
        let x = Element::generator(g, order);
        let anchor = format!("{name}.coproduct");
        checks.push((
            format!("{name}: coassociativity {ng}"),
            anchor.clone(),
            Box::new({
                let x = x.clone();
                move || {
                    let d = h.coproduct(&x);
                    let residual = &h.coproduct_in_slot(&d, 0) - &h.coproduct_in_slot(&d, 1);
                    tensor_outcome(h, &residual)
                }
            }),
        ));
        checks.push((
            format!("{name}: counit (e x id)Delta {ng} = {ng} = (id x e)Delta {ng}"),
            format!("{name}.counit"),
            Box::new({
                let x = x.clone();
                move || {
                    let d = h.coproduct(&x);
                    let left = &h.counit_in_slot(&d, 0).to_element() - &x;
                    let right = &h.counit_in_slot(&d, 1).to_element() - &x;
                    let residual = &left + &right;
                    let terms = left.len() + right.len();
                    Outcome::from_residual(terms, || p.render(&residual))
                }
            }),
        ));
        checks.push((
            format!("{name}: antipode m(S x id)Delta {ng} = e({ng}) = m(id x S)Delta {ng}"),
            format!("{name}.antipode"),
            Box::new(move || {
                let d = h.coproduct(&x);
                let unit = Element::scalar(h.counit(&x));
                let left = &h.multiply_out(&h.antipode_in_slot(&d, 0)) - &unit;
                let right = &h.multiply_out(&h.antipode_in_slot(&d, 1)) - &unit;
                let terms = left.len() + right.len();
                Outcome::from_residual(terms, || {
                    format!("left: {}; right: {}", p.render(&left), p.render(&right))
                })
            }),
        ));
    }
    run_checks("hopf", checks)
}

/// `exp(c z x (x) y)` for single generators `x`, `y`.
pub fn exp_tensor(x: Generator, y: Generator, c: &Rational, order: usize) -> TensorElement {
    let mut out = TensorElement::zero(2, order);
    let mut ck = Rational::from_integer(1.into());
    for k in 0..=order {
        out.add_term(
            vec![Monomial::power(x, k as u8), Monomial::power(y, k as u8)],
            &ZSeries::term(&ck / factorial(k), k, order),
        );
        ck *= c;
    }
    out
}

/// The universal R-matrix as a product of exponentials of `z x (x) y`.
pub fn build_universal_r(h: &HopfStructure) -> TensorElement {
    let p = h.presentation();
    let order = h.order();
    let factors: Vec<(&str, &str, Rational)> = match h.name() {
        // exp(-z A+ (x) N) exp(z N (x) A+)
        PresentationName::H6Jordanian => vec![("A+", "N", int(-1)), ("N", "A+", int(1))],
        // image of the above under the involution
        PresentationName::H6JordanianDual => vec![("A-", "N", int(1)), ("N", "A-", int(-1))],
        // exp(zP (x) D) exp((z/2)P (x) M) exp(-(z/2)M (x) P) exp(-zD (x) P)
        PresentationName::SchrodingerJordanian => vec![
            ("P", "D", int(1)),
            ("P", "M", rat(1, 2)),
            ("M", "P", rat(-1, 2)),
            ("D", "P", int(-1)),
        ],
    };
    factors
        .iter()
        .map(|(x, y, c)| exp_tensor(p.g(x), p.g(y), c, order))
        .fold(TensorElement::one(2, order), |acc, f| h.tmul(&acc, &f))
}

/// `R Delta(X) = (sigma Delta(X)) R` for every generator.
pub fn check_r_intertwining(h: &HopfStructure, r: &TensorElement) -> Report {
    let p = h.presentation();
    let name = h.name();
    let checks: Vec<Check<'_>> = Generator::all()
        .map(|g| {
            let ng = p.name_of(g);
            let check: Check<'_> = (
                format!("{name}: R Delta({ng}) = sigma(Delta({ng})) R"),
                format!("{name}.r_matrix+coproduct"),
                Box::new(move || {
                    let d = h.coproduct_of(g);
                    let residual = &h.tmul(r, d) - &h.tmul(&d.flip(), r);
                    tensor_outcome(h, &residual)
                }),
            );
            check
        })
        .collect();
    run_checks("rmatrix", checks)
}

/// `R12 R13 R23 = R23 R13 R12`.
pub fn check_qybe(r: &TensorElement, p: &Presentation) -> Report {
    let name = p.name();
    let record = CheckRecord::run(
        "rmatrix",
        format!("{name}: R12 R13 R23 = R23 R13 R12"),
        &format!("{name}.r_matrix"),
        || {
            let r12 = r.embed3((0, 1));
            let r13 = r.embed3((0, 2));
            let r23 = r.embed3((1, 2));
            let mul =
                |a: &TensorElement, b: &TensorElement| tensor_multiply(a, b, p).expect("rank 3");
            let lhs = mul(&mul(&r12, &r13), &r23);
            let rhs = mul(&mul(&r23, &r13), &r12);
            let residual = &lhs - &rhs;
            Outcome::from_residual(residual.len(), || residual.render(p.generator_names()))
        },
    );
    std::iter::once(record).collect()
}

/// `R sigma(R) = 1 (x) 1`.
pub fn check_triangularity(r: &TensorElement, p: &Presentation) -> Report {
    let name = p.name();
    let record = CheckRecord::run(
        "rmatrix",
        format!("{name}: R sigma(R) = 1 (x) 1"),
        &format!("{name}.r_matrix"),
        || {
            let prod = tensor_multiply(r, &r.flip(), p).expect("rank 2");
            let residual = &prod - &TensorElement::one(2, p.order());
            Outcome::from_residual(residual.len(), || residual.render(p.generator_names()))
        },
    );
    std::iter::once(record).collect()
}

/// Why `gens` fails to span a Hopf subalgebra, or `None` if it does.
pub fn hopf_subalgebra_witness(h: &HopfStructure, gens: &[Generator]) -> Option<String> {
    assert!(!gens.is_empty(), "generator set must be nonempty");
    let p = h.presentation();
    for &g in gens {
        let d = h.coproduct_of(g);
        if let Some((key, _)) = d
            .terms()
            .find(|(k, _)| !k.iter().all(|m| m.uses_only(gens)))
        {
            let term = key
                .iter()
                .map(|m| p.render_monomial(m))
                .collect::<Vec<_>>()
                .join(" (x) ");
            return Some(format!("Delta({}) contains {}", p.name_of(g), term));
        }
        let s = h.antipode_of(g);
        if !s.uses_only(gens) {
            return Some(format!("S({}) = {}", p.name_of(g), p.render(s)));
        }
        for &g2 in gens {
            let b = p.bracket(g, g2);
            if !b.uses_only(gens) {
                return Some(format!(
                    "[{}, {}] = {}",
                    p.name_of(g),
                    p.name_of(g2),
                    p.render(&b)
                ));
            }
        }
    }
    None
}

pub fn check_hopf_subalgebra(h: &HopfStructure, gens: &[Generator]) -> bool {
    hopf_subalgebra_witness(h, gens).is_none()
}

/// Generators of `h` looked up by name.
pub fn generators_named(h: &HopfStructure, names: &[&str]) -> Vec<Generator> {
    names.iter().map(|n| h.presentation().g(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h6(order: usize) -> HopfStructure {
        build_hopf(PresentationName::H6Jordanian, order)
    }

    #[test]
    fn generator_coproducts_render() {
        let h = h6(2);
        let p = h.presentation();
        assert_eq!(
            h.render_tensor(&h.coproduct(&p.gen("A+"))),
            "1 (x) A+ + A+ (x) 1"
        );
        assert_eq!(h.coproduct(&p.one()), TensorElement::one(2, 2));
        let da = h.coproduct(&p.gen("A-"));
        let one = p.one();
        let e = p.exp_primitive(p.g("A+"), &int(1));
        let expected = TensorElement::tensor2(&one, &p.gen("A-"))
            + TensorElement::tensor2(&p.gen("A-"), &e)
            + TensorElement::tensor2(&p.gen("N").times_z(1), &p.multiply(&e, &p.gen("M")));
        assert_eq!(da, expected);
    }

    #[test]
    fn counit_examples() {
        let h = h6(3);
        let p = h.presentation();
        let e = p.exp_primitive(p.g("A+"), &int(1));
        assert_eq!(h.counit(&e), ZSeries::one(3));
        let x =
            p.multiply(&p.gen("N"), &p.gen("A+")) + Element::scalar(ZSeries::constant(int(3), 3));
        assert_eq!(h.counit(&x), ZSeries::constant(int(3), 3));
        // (e x id) Delta(B-) = B-
        let d = h.coproduct(&p.gen("B-"));
        assert_eq!(h.counit_in_slot(&d, 0).to_element(), p.gen("B-"));
    }

    #[test]
    fn antipode_examples() {
        let h = h6(3);
        let p = h.presentation();
        assert_eq!(h.antipode(&p.gen("A+")), -p.gen("A+"));
        assert_eq!(h.antipode(&p.one()), p.one());
        let expected = -p.multiply(&p.gen("N"), &p.exp_primitive(p.g("A+"), &int(-1)));
        assert_eq!(h.antipode(&p.gen("N")), expected);
        // m(S x id) Delta(N) = N + S(N) e^{zA+} = 0
        let d = h.coproduct(&p.gen("N"));
        assert!(h.multiply_out(&h.antipode_in_slot(&d, 0)).is_zero());
    }

    #[test]
    fn tensor_product_basics() {
        let h = h6(2);
        let p = h.presentation();
        let ap = p.gen("A+");
        let one = p.one();
        let t = TensorElement::tensor2(&ap, &p.gen("N"));
        let id = TensorElement::one(2, 2);
        assert_eq!(tensor_multiply(&id, &t, p).unwrap(), t);
        let left = TensorElement::tensor2(&ap, &one);
        let right = TensorElement::tensor2(&one, &ap);
        assert_eq!(
            tensor_multiply(&left, &right, p).unwrap(),
            TensorElement::tensor2(&ap, &ap)
        );
        let t3 = TensorElement::one(3, 2);
        assert_eq!(
            tensor_multiply(&id, &t3, p).unwrap_err(),
            HopfError::RankMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn coproduct_is_multiplicative_on_a_minus_a_plus() {
        let h = h6(3);
        let p = h.presentation();
        let (am, ap) = (p.gen("A-"), p.gen("A+"));
        let dam = h.coproduct(&am);
        let dap = h.coproduct(&ap);
        let lhs =
            &tensor_multiply(&dam, &dap, p).unwrap() - &tensor_multiply(&dap, &dam, p).unwrap();
        let rhs = h.coproduct(&p.multiply(&p.gen("M"), &p.exp_primitive(p.g("A+"), &int(1))));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_examples() {
        let h = h6(2);
        let p = h.presentation();
        let t = TensorElement::tensor2(&p.gen("A+"), &p.gen("N"));
        assert_eq!(flip(&t), TensorElement::tensor2(&p.gen("N"), &p.gen("A+")));
        let d = h.coproduct(&p.gen("B-"));
        assert_eq!(flip(&flip(&d)), d);
        let da = h.coproduct(&p.gen("A+"));
        assert_eq!(flip(&da), da);
    }

    #[test]
    fn r_matrix_low_orders() {
        let h = h6(3);
        let p = h.presentation();
        let r = build_universal_r(&h);
        assert_eq!(r.z_part(0), TensorElement::one(2, 3));
        let first = (TensorElement::tensor2(&p.gen("N"), &p.gen("A+"))
            - TensorElement::tensor2(&p.gen("A+"), &p.gen("N")))
        .scale(&ZSeries::z(3));
        assert_eq!(r.z_part(1), first);

        let s = build_hopf(PresentationName::SchrodingerJordanian, 3);
        let q = s.presentation();
        let rs = build_universal_r(&s);
        let t = |a: &str, b: &str| TensorElement::tensor2(&q.gen(a), &q.gen(b));
        let expected = (t("P", "D") - t("D", "P")).scale(&ZSeries::z(3))
            + (t("P", "M") - t("M", "P")).scale(&ZSeries::term(rat(1, 2), 1, 3));
        assert_eq!(rs.z_part(1), expected);
    }

    #[test]
    fn order_zero_checks_are_trivial() {
        let h = h6(0);
        let r = build_universal_r(&h);
        assert_eq!(r, TensorElement::one(2, 0));
        assert!(check_qybe(&r, h.presentation()).all_passed());
        assert!(check_triangularity(&r, h.presentation()).all_passed());
        assert!(check_hopf_axioms(&h).all_passed());
    }

    #[test]
    fn subalgebras() {
        let h = h6(3);
        assert!(check_hopf_subalgebra(
            &h,
            &generators_named(&h, &["N", "A+", "A-", "M"])
        ));
        let s = build_hopf(PresentationName::SchrodingerJordanian, 3);
        assert!(check_hopf_subalgebra(
            &s,
            &generators_named(&s, &["D", "P", "K", "M"])
        ));
        let witness = hopf_subalgebra_witness(&s, &generators_named(&s, &["H", "P", "K", "M"]));
        assert!(witness.unwrap().starts_with("Delta(K) contains D"));
        assert!(!check_hopf_subalgebra(
            &s,
            &generators_named(&s, &["D", "C", "H"])
        ));
    }

    #[test]
    fn failing_identity_reports_residual() {
        let h = h6(2);
        let p = h.presentation();
        // Deliberately wrong R: drop the second exponential.
        let r = exp_tensor(p.g("A+"), p.g("N"), &int(-1), 2);
        let report = check_triangularity(&r, p);
        assert!(!report.all_passed());
        let rec = &report.records[0];
        assert!(rec.residual_terms > 0);
        assert!(rec.residual.as_ref().unwrap().contains("A+"));
    }
}
