//! The classical layer: undeformed Lie algebras, classical r-matrices and
//! the cocommutators they generate.
//!
//! Linear combinations are dense vectors over the six generators of a
//! [`LieAlgebra`], in that algebra's own generator order. Wedge elements
//! keep only strictly increasing index tuples and carry an explicit power
//! of `z`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::hopf::HopfStructure;
use crate::ncalg::{Monomial, Presentation, PresentationName, RANK};
use crate::report::{CheckRecord, Outcome, Report};
use crate::scalars::{int, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("{0} is not linear in the generators")]
    NotLinear(String),
    #[error("tensor is not antisymmetric")]
    NotAntisymmetric,
}

/// A rational linear combination of the six generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    coeffs: [Rational; RANK],
}

impl LieElement {
    pub fn zero() -> Self {
        Self {
            coeffs: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        e.coeffs[i] = Rational::one();
        e
    }

    pub fn from_coeffs(coeffs: [Rational; RANK]) -> Self {
        Self { coeffs }
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational; RANK] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * c),
        }
    }

    pub fn add_scaled(&mut self, other: &LieElement, c: &Rational) {
        for i in 0..RANK {
            self.coeffs[i] += &other.coeffs[i] * c;
        }
    }

    pub fn render(&self, names: &[&str; RANK]) -> String {
        render_linear(
            self.support()
                .map(|(i, c)| (names[i].to_string(), c.clone())),
        )
    }
}

impl std::ops::Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl std::ops::Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["g0", "g1", "g2", "g3", "g4", "g5"];
        write!(f, "LieElement({})", self.render(&names))
    }
}

fn render_linear(terms: impl Iterator<Item = (String, Rational)>) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{abs}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A six-dimensional Lie algebra given by its structure constants.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    names: [&'static str; RANK],
    // brackets[x][y] = [g_x, g_y]
    brackets: Vec<Vec<LieElement>>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({})", self.name)
    }
}

/// `(x, y, [(c, g)])` meaning `[x, y] = sum c * g`.
pub type BracketRule<'a> = (&'a str, &'a str, &'a [(Rational, &'a str)]);

impl LieAlgebra {
    /// Builds an algebra from brackets `[x, y] = sum c * g`; unlisted
    /// pairs commute and antisymmetry fills in `[y, x]`.
    pub fn from_brackets(
        name: &str,
        names: [&'static str; RANK],
        rules: &[BracketRule],
    ) -> Result<Self, LieError> {
        let mut g = Self {
            name: name.to_string(),
            names,
            brackets: vec![vec![LieElement::zero(); RANK]; RANK],
        };
        for (x, y, rhs) in rules {
            let (x, y) = (g.index(x)?, g.index(y)?);
            let mut v = LieElement::zero();
            for (c, n) in rhs.iter() {
                v.add_scaled(&LieElement::basis(g.index(n)?), c);
            }
            g.set_bracket(x, y, v);
        }
        Ok(g)
    }

    /// The undeformed two-photon algebra in the h6 generator order.
    pub fn h6() -> Self {
        let n = |c: i64, g: &'static str| (int(c), g);
        Self::from_brackets(
            "h6",
            PresentationName::H6Jordanian.generator_names(),
            &[
                ("N", "A+", &[n(1, "A+")]),
                ("N", "A-", &[n(-1, "A-")]),
                ("A-", "A+", &[n(1, "M")]),
                ("N", "B+", &[n(2, "B+")]),
                ("N", "B-", &[n(-2, "B-")]),
                ("B-", "B+", &[n(4, "N"), n(2, "M")]),
                ("A+", "B-", &[n(-2, "A-")]),
                ("A-", "B+", &[n(2, "A+")]),
            ],
        )
        .expect("generator names are fixed")
    }

    /// The undeformed Schrodinger algebra in its generator order.
    pub fn schrodinger() -> Self {
        let n = |c: i64, g: &'static str| (int(c), g);
        Self::from_brackets(
            "schrodinger",
            PresentationName::SchrodingerJordanian.generator_names(),
            &[
                ("D", "P", &[n(-1, "P")]),
                ("D", "K", &[n(1, "K")]),
                ("K", "P", &[n(1, "M")]),
                ("D", "H", &[n(-2, "H")]),
                ("D", "C", &[n(2, "C")]),
                ("H", "C", &[n(1, "D")]),
                ("K", "H", &[n(1, "P")]),
                ("P", "C", &[n(-1, "K")]),
            ],
        )
        .expect("generator names are fixed")
    }

    /// The undeformed algebra underlying a presentation, in its order.
    pub fn for_presentation(name: PresentationName) -> Self {
        match name {
            PresentationName::H6Jordanian => Self::h6(),
            PresentationName::H6JordanianDual => Self::h6()
                .reindexed("h6", PresentationName::H6JordanianDual.generator_names())
                .expect("same generator set"),
            PresentationName::SchrodingerJordanian => Self::schrodinger(),
        }
    }

    /// The `z^0` part of a deformed presentation, which must be linear.
    pub fn classical_limit_of(p: &Presentation) -> Result<Self, LieError> {
        let mut g = Self {
            name: format!("{}@z=0", p.name()),
            names: *p.generator_names(),
            brackets: vec![vec![LieElement::zero(); RANK]; RANK],
        };
        for (x, y, entry) in p.table_entries() {
            let mut v = LieElement::zero();
            for (m, c) in entry.terms() {
                let c0 = c.coeff(0);
                if c0.is_zero() {
                    continue;
                }
                if m.degree() != 1 {
                    return Err(LieError::NotLinear(format!(
                        "[{},{}]",
                        p.name_of(x),
                        p.name_of(y)
                    )));
                }
                v.coeffs[m.lowest().expect("degree one")] += c0;
            }
            g.set_bracket(x.index, y.index, v);
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &[&'static str; RANK] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize, LieError> {
        self.names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| LieError::UnknownGenerator(name.to_string()))
    }

    pub fn element(&self, terms: &[(Rational, &str)]) -> Result<LieElement, LieError> {
        let mut v = LieElement::zero();
        for (c, n) in terms {
            v.add_scaled(&LieElement::basis(self.index(n)?), c);
        }
        Ok(v)
    }

    fn set_bracket(&mut self, x: usize, y: usize, v: LieElement) {
        self.brackets[y][x] = v.scale(&-Rational::one());
        self.brackets[x][y] = v;
    }

    /// Overwrites one structure constant set; antisymmetry is kept.
    pub fn with_bracket(mut self, x: &str, y: &str, v: LieElement) -> Result<Self, LieError> {
        let (x, y) = (self.index(x)?, self.index(y)?);
        self.set_bracket(x, y, v);
        Ok(self)
    }

    pub fn bracket_basis(&self, x: usize, y: usize) -> &LieElement {
        &self.brackets[x][y]
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, ca) in a.support() {
            for (j, cb) in b.support() {
                out.add_scaled(&self.brackets[i][j], &(ca * cb));
            }
        }
        out
    }

    /// The same algebra with generators listed in `order`.
    pub fn reindexed(&self, name: &str, order: [&'static str; RANK]) -> Result<Self, LieError> {
        let map: Vec<usize> = order
            .iter()
            .map(|n| self.index(n))
            .collect::<Result<_, _>>()?;
        let relabel = |v: &LieElement| {
            LieElement::from_coeffs(std::array::from_fn(|i| v.coeffs[map[i]].clone()))
        };
        let brackets = (0..RANK)
            .map(|x| {
                (0..RANK)
                    .map(|y| relabel(&self.brackets[map[x]][map[y]]))
                    .collect()
            })
            .collect();
        Ok(Self {
            name: name.to_string(),
            names: order,
            brackets,
        })
    }

    /// Every bracket, compared generator name by generator name.
    pub fn same_brackets(&self, other: &LieAlgebra) -> bool {
        let Ok(other) = other.reindexed(&other.name, self.names) else {
            return false;
        };
        self.brackets == other.brackets
    }

    pub fn render_bracket(&self, x: usize, y: usize) -> String {
        format!(
            "[{},{}] = {}",
            self.names[x],
            self.names[y],
            self.brackets[x][y].render(&self.names)
        )
    }

    /// `ad_X` applied to every slot of a wedge.
    pub fn ad_wedge(&self, x: &LieElement, w: &WedgeElement) -> WedgeElement {
        let mut out = WedgeElement::zero(w.rank, w.z_power);
        for (key, c) in &w.terms {
            for slot in 0..w.rank {
                for (j, cj) in self.bracket(x, &LieElement::basis(key[slot])).support() {
                    let mut k = key.clone();
                    k[slot] = j;
                    out.add(&k, &(c * cj));
                }
            }
        }
        out
    }
}

/// Antisymmetric tensor in normal form: increasing index tuples only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WedgeElement {
    rank: usize,
    z_power: u32,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl WedgeElement {
    pub fn zero(rank: usize, z_power: u32) -> Self {
        assert!(rank == 2 || rank == 3, "wedge rank must be 2 or 3");
        Self {
            rank,
            z_power,
            terms: BTreeMap::new(),
        }
    }

    /// `c * z^z_power * x /\ y`.
    pub fn wedge2(x: usize, y: usize, c: Rational, z_power: u32) -> Self {
        let mut w = Self::zero(2, z_power);
        w.add(&[x, y], &c);
        w
    }

    /// Builds from named terms `c * a /\ b` of an algebra.
    pub fn from_named(
        g: &LieAlgebra,
        z_power: u32,
        terms: &[(Rational, &str, &str)],
    ) -> Result<Self, LieError> {
        let mut w = Self::zero(2, z_power);
        for (c, a, b) in terms {
            w.add(&[g.index(a)?, g.index(b)?], c);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn z_power(&self) -> u32 {
        self.z_power
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
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

    pub fn coeff(&self, indices: &[usize]) -> Rational {
        let mut w = Self::zero(self.rank, self.z_power);
        w.add(indices, &Rational::one());
        match w.terms.into_iter().next() {
            None => Rational::zero(),
            Some((k, sign)) => self.terms.get(&k).map(|c| c * sign).unwrap_or_default(),
        }
    }

    /// Adds `c * i1 /\ i2 /\ ...`, sorting the indices with the sign of the
    /// permutation.
    pub fn add(&mut self, indices: &[usize], c: &Rational) {
        assert_eq!(indices.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let mut k = indices.to_vec();
        let mut sign = 1i64;
        for i in 0..k.len() {
            for j in 0..k.len() - 1 - i {
                if k[j] > k[j + 1] {
                    k.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if k.windows(2).any(|w| w[0] == w[1]) {
            return;
        }
        let entry = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
        *entry += c * int(sign);
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add_wedge(&mut self, other: &WedgeElement, c: &Rational) {
        assert_eq!(self.rank, other.rank);
        assert_eq!(self.z_power, other.z_power, "mixed powers of z");
        for (k, oc) in &other.terms {
            self.add(k, &(oc * c));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.rank, self.z_power);
        out.add_wedge(self, c);
        out
    }

    /// Dense tensor with `6^rank` entries, slot 0 most significant.
    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); RANK.pow(self.rank as u32)];
        for (k, c) in &self.terms {
            for (perm, sign) in permutations(self.rank) {
                let idx = perm.iter().fold(0, |acc, &p| acc * RANK + k[p]);
                out[idx] += c * int(sign);
            }
        }
        out
    }

    /// Reads an antisymmetric dense tensor back into normal form.
    pub fn from_dense(dense: &[Rational], rank: usize, z_power: u32) -> Result<Self, LieError> {
        let mut w = Self::zero(rank, z_power);
        for (idx, c) in dense.iter().enumerate() {
            let k = unflatten(idx, rank);
            if !c.is_zero() && k.windows(2).all(|p| p[0] < p[1]) {
                w.terms.insert(k, c.clone());
            }
        }
        if w.to_dense() != dense {
            return Err(LieError::NotAntisymmetric);
        }
        Ok(w)
    }

    pub fn render(&self, names: &[&str; RANK]) -> String {
        let inner = render_linear(self.terms.iter().map(|(k, c)| {
            let word = k.iter().map(|&i| names[i]).collect::<Vec<_>>().join("/\\");
            (word, c.clone())
        }));
        match (self.is_zero(), self.z_power) {
            (true, _) => "0".to_string(),
            (false, 0) => inner,
            (false, 1) => format!("z*({inner})"),
            (false, k) => format!("z^{k}*({inner})"),
        }
    }
}

impl fmt::Debug for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["g0", "g1", "g2", "g3", "g4", "g5"];
        write!(f, "Wedge({})", self.render(&names))
    }
}

fn unflatten(mut idx: usize, rank: usize) -> Vec<usize> {
    let mut k = vec![0; rank];
    for slot in (0..rank).rev() {
        k[slot] = idx % RANK;
        idx /= RANK;
    }
    k
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    match n {
        2 => vec![(vec![0, 1], 1), (vec![1, 0], -1)],
        3 => vec![
            (vec![0, 1, 2], 1),
            (vec![1, 2, 0], 1),
            (vec![2, 0, 1], 1),
            (vec![1, 0, 2], -1),
            (vec![0, 2, 1], -1),
            (vec![2, 1, 0], -1),
        ],
        _ => unreachable!("wedge rank is 2 or 3"),
    }
}

/// Cocommutator of every generator, indexed by generator position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocommutatorTable {
    entries: Vec<WedgeElement>,
}

impl CocommutatorTable {
    pub fn new(entries: Vec<WedgeElement>) -> Self {
        assert_eq!(entries.len(), RANK);
        Self { entries }
    }

    pub fn zero() -> Self {
        Self::new(vec![WedgeElement::zero(2, 1); RANK])
    }

    pub fn get(&self, i: usize) -> &WedgeElement {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[WedgeElement] {
        &self.entries
    }

    /// `delta` extended linearly.
    pub fn apply(&self, x: &LieElement) -> WedgeElement {
        let mut out = WedgeElement::zero(2, self.entries[0].z_power);
        for (i, c) in x.support() {
            out.add_wedge(&self.entries[i], c);
        }
        out
    }

    pub fn render(&self, names: &[&str; RANK]) -> Vec<String> {
        (0..RANK)
            .map(|i| format!("delta({}) = {}", names[i], self.entries[i].render(names)))
            .collect()
    }
}

/// `delta(X) = [1 (x) X + X (x) 1, r]`.
pub fn cocommutator_from_r(g: &LieAlgebra, r: &WedgeElement) -> CocommutatorTable {
    assert_eq!(r.rank, 2, "r must have rank 2");
    CocommutatorTable::new(
        (0..RANK)
            .map(|i| g.ad_wedge(&LieElement::basis(i), r))
            .collect(),
    )
}

/// `[[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]` as a rank-3 wedge.
pub fn schouten_bracket(g: &LieAlgebra, r: &WedgeElement) -> Result<WedgeElement, LieError> {
    assert_eq!(r.rank, 2);
    let dense = r.to_dense();
    let entries: Vec<(usize, usize, &Rational)> = dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i / RANK, i % RANK, c))
        .collect();
    let mut out = vec![Rational::zero(); RANK * RANK * RANK];
    let idx = |a: usize, b: usize, c: usize| (a * RANK + b) * RANK + c;
    for &(a, b, r1) in &entries {
        for &(c, d, r2) in &entries {
            let w = r1 * r2;
            // [r12, r13]
            for (k, ck) in g.bracket_basis(a, c).support() {
                out[idx(k, b, d)] += &w * ck;
            }
            // [r12, r23]
            for (k, ck) in g.bracket_basis(b, c).support() {
                out[idx(a, k, d)] += &w * ck;
            }
            // [r13, r23]
            for (k, ck) in g.bracket_basis(b, d).support() {
                out[idx(a, c, k)] += &w * ck;
            }
        }
    }
    WedgeElement::from_dense(&out, 3, 2 * r.z_power)
}

/// `[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0` over all 20 generator triples.
pub fn jacobi_check(g: &LieAlgebra) -> Report {
    let mut records = Vec::new();
    for x in 0..RANK {
        for y in x + 1..RANK {
            for z in y + 1..RANK {
                let n = g.names;
                records.push(CheckRecord::run(
                    "classical",
                    format!("{}: Jacobi ({},{},{})", g.name, n[x], n[y], n[z]),
                    &format!("{}.lie_brackets", g.name),
                    || {
                        let b = |i: usize, j: usize| g.bracket_basis(i, j).clone();
                        let term = |i, j, k| g.bracket(&b(i, j), &LieElement::basis(k));
                        let sum = &(&term(x, y, z) + &term(y, z, x)) + &term(z, x, y);
                        Outcome::from_residual(sum.support().count(), || sum.render(&n))
                    },
                ));
            }
        }
    }
    records.into_iter().collect()
}

pub fn cybe_check(g: &LieAlgebra, r: &WedgeElement) -> Report {
    let record = CheckRecord::run(
        "classical",
        format!("{}: [[r,r]] = 0 for r = {}", g.name, r.render(&g.names)),
        &format!("{}.classical_r", g.name),
        || match schouten_bracket(g, r) {
            Ok(s) => Outcome::from_residual(s.len(), || s.render(&g.names)),
            Err(e) => Outcome::fail(1, e.to_string()),
        },
    );
    std::iter::once(record).collect()
}

// Dense (delta (x) id) on a rank-2 dense tensor.
fn delta_first_slot(d: &CocommutatorTable, t: &[Rational]) -> Vec<Rational> {
    let dense: Vec<Vec<Rational>> = d.entries.iter().map(WedgeElement::to_dense).collect();
    let mut out = vec![Rational::zero(); RANK * RANK * RANK];
    for (i, c) in t.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, b) = (i / RANK, i % RANK);
        for (j, dc) in dense[a].iter().enumerate() {
            if !dc.is_zero() {
                out[j * RANK + b] += c * dc;
            }
        }
    }
    out
}

fn cyclic_sum(t: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); t.len()];
    for (i, c) in t.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = unflatten(i, 3);
        for shift in 0..3 {
            let j = (k[shift] * RANK + k[(shift + 1) % 3]) * RANK + k[(shift + 2) % 3];
            out[j] += c;
        }
    }
    out
}

/// Co-Jacobi for every generator and the 1-cocycle condition for every
/// pair.
pub fn cojacobi_and_cocycle_check(g: &LieAlgebra, d: &CocommutatorTable) -> Report {
    let n = g.names;
    let mut records = Vec::new();
    for x in 0..RANK {
        records.push(CheckRecord::run(
            "classical",
            format!("{}: co-Jacobi at {}", g.name, n[x]),
            &format!("{}.cocommutators", g.name),
            || {
                let s = cyclic_sum(&delta_first_slot(d, &d.entries[x].to_dense()));
                let bad: Vec<String> = s
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| {
                        let k = unflatten(i, 3);
                        format!("{c}*{}(x){}(x){}", n[k[0]], n[k[1]], n[k[2]])
                    })
                    .collect();
                Outcome::from_residual(bad.len(), || bad.join(" + "))
            },
        ));
    }
    for x in 0..RANK {
        for y in x + 1..RANK {
            records.push(CheckRecord::run(
                "classical",
                format!("{}: cocycle delta[{},{}]", g.name, n[x], n[y]),
                &format!("{}.cocommutators", g.name),
                || {
                    let (ex, ey) = (LieElement::basis(x), LieElement::basis(y));
                    let mut res = d.apply(g.bracket_basis(x, y));
                    res.add_wedge(&g.ad_wedge(&ex, &d.entries[y]), &-Rational::one());
                    res.add_wedge(&g.ad_wedge(&ey, &d.entries[x]), &Rational::one());
                    Outcome::from_residual(res.len(), || res.render(&n))
                },
            ));
        }
    }
    records.into_iter().collect()
}

/// Classical r-matrix of each presentation.
pub fn classical_r(name: PresentationName) -> WedgeElement {
    let g = LieAlgebra::for_presentation(name);
    let terms: Vec<(Rational, &str, &str)> = match name {
        PresentationName::H6Jordanian => vec![(int(1), "N", "A+")],
        PresentationName::H6JordanianDual => vec![(int(-1), "N", "A-")],
        PresentationName::SchrodingerJordanian => {
            vec![(int(1), "P", "D"), (rat(1, 2), "P", "M")]
        }
    };
    WedgeElement::from_named(&g, 1, &terms).expect("generator names are fixed")
}

/// Reference cocommutator table of each bialgebra.
pub fn cocommutator_table(name: PresentationName) -> CocommutatorTable {
    let g = LieAlgebra::for_presentation(name);
    let w = |terms: &[(i64, &str, &str)]| {
        let terms: Vec<_> = terms.iter().map(|(c, a, b)| (int(*c), *a, *b)).collect();
        WedgeElement::from_named(&g, 1, &terms).expect("generator names are fixed")
    };
    let half = |a: &'static str, b: &'static str| (rat(1, 2), a, b);
    let mut entries = vec![WedgeElement::zero(2, 1); RANK];
    let mut set = |gen: &str, v: WedgeElement| entries[g.index(gen).expect("fixed")] = v;
    match name {
        PresentationName::H6Jordanian => {
            set("N", w(&[(1, "N", "A+")]));
            set("B+", w(&[(-2, "B+", "A+")]));
            set("A-", w(&[(1, "A-", "A+"), (1, "N", "M")]));
            set("B-", w(&[(2, "B-", "A+"), (2, "N", "A-")]));
        }
        PresentationName::H6JordanianDual => {
            set("N", w(&[(1, "N", "A-")]));
            set("B-", w(&[(-2, "B-", "A-")]));
            set("A+", w(&[(1, "A+", "A-"), (1, "N", "M")]));
            set("B+", w(&[(2, "B+", "A-"), (2, "N", "A+")]));
        }
        PresentationName::SchrodingerJordanian => {
            set("H", w(&[(-2, "H", "P")]));
            set("K", w(&[(1, "K", "P"), (-1, "D", "M")]));
            let mut d = w(&[(1, "D", "P")]);
            d.add_wedge(
                &WedgeElement::from_named(&g, 1, &[half("M", "P")]).expect("fixed"),
                &Rational::one(),
            );
            set("D", d);
            let mut c = w(&[(2, "C", "P"), (1, "K", "D")]);
            c.add_wedge(
                &WedgeElement::from_named(&g, 1, &[half("K", "M")]).expect("fixed"),
                &Rational::one(),
            );
            set("C", c);
        }
    }
    CocommutatorTable::new(entries)
}

/// The involution `N -> -N, A+ -> -A-, A- -> -A+, M -> -M, B+ -> -B-,
/// B- -> -B+` from h6 order to dual order (positions coincide).
pub fn apply_automorphism(x: &LieElement) -> LieElement {
    x.scale(&-Rational::one())
}

/// The involution on a wedge, together with `z -> -z`.
pub fn automorphism_wedge(w: &WedgeElement) -> WedgeElement {
    let sign = if (w.rank as u32 + w.z_power).is_multiple_of(2) {
        1
    } else {
        -1
    };
    w.scale(&int(sign))
}

/// Transports a cocommutator table: `delta'(phi X) = (phi (x) phi) delta(X)`
/// with `z -> -z`.
pub fn automorphism_table(d: &CocommutatorTable) -> CocommutatorTable {
    CocommutatorTable::new(
        d.entries
            .iter()
            .map(|w| automorphism_wedge(w).scale(&-Rational::one()))
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// h6 combinations to Schrodinger combinations.
    Forward,
    /// Schrodinger combinations to h6 combinations.
    Inverse,
}

/// Image of each source generator as a target combination.
pub fn iso_images(direction: Direction) -> Vec<LieElement> {
    let (source, target) = match direction {
        Direction::Forward => (LieAlgebra::h6(), LieAlgebra::schrodinger()),
        Direction::Inverse => (LieAlgebra::schrodinger(), LieAlgebra::h6()),
    };
    let n = |c: Rational, g: &'static str| (c, g);
    let rules: Vec<(&str, Vec<(Rational, &str)>)> = match direction {
        Direction::Forward => vec![
            ("N", vec![n(int(-1), "D"), n(rat(-1, 2), "M")]),
            ("A+", vec![n(int(1), "P")]),
            ("A-", vec![n(int(1), "K")]),
            ("B+", vec![n(int(2), "H")]),
            ("B-", vec![n(int(2), "C")]),
            ("M", vec![n(int(1), "M")]),
        ],
        Direction::Inverse => vec![
            ("D", vec![n(int(-1), "N"), n(rat(-1, 2), "M")]),
            ("P", vec![n(int(1), "A+")]),
            ("K", vec![n(int(1), "A-")]),
            ("H", vec![n(rat(1, 2), "B+")]),
            ("C", vec![n(rat(1, 2), "B-")]),
            ("M", vec![n(int(1), "M")]),
        ],
    };
    let mut images = vec![LieElement::zero(); RANK];
    for (g, img) in rules {
        images[source.index(g).expect("fixed")] = target.element(&img).expect("fixed");
    }
    images
}

pub fn iso_h6_schrodinger(x: &LieElement, direction: Direction) -> LieElement {
    let images = iso_images(direction);
    let mut out = LieElement::zero();
    for (i, c) in x.support() {
        out.add_scaled(&images[i], c);
    }
    out
}

pub fn iso_wedge(w: &WedgeElement, direction: Direction) -> WedgeElement {
    let images = iso_images(direction);
    let mut out = WedgeElement::zero(w.rank, w.z_power);
    for (k, c) in &w.terms {
        let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), c.clone())];
        for &i in k {
            partial = partial
                .into_iter()
                .flat_map(|(key, pc)| {
                    images[i].support().map(move |(j, cj)| {
                        let mut nk = key.clone();
                        nk.push(j);
                        (nk, &pc * cj)
                    })
                })
                .collect();
        }
        for (key, pc) in partial {
            out.add(&key, &pc);
        }
    }
    out
}

fn rank_of(rows: &[LieElement]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coeffs.to_vec()).collect();
    let mut rank = 0;
    for col in 0..RANK {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let f = &m[i][col] / &pivot;
                let pivot_row = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether the span of `basis` is closed under the bracket.
pub fn is_lie_subalgebra(g: &LieAlgebra, basis: &[LieElement]) -> bool {
    let r = rank_of(basis);
    basis.iter().all(|a| {
        basis.iter().all(|b| {
            let mut rows = basis.to_vec();
            rows.push(g.bracket(a, b));
            rank_of(&rows) == r
        })
    })
}

pub fn is_lie_subalgebra_named(g: &LieAlgebra, names: &[&str]) -> Result<bool, LieError> {
    let basis = names
        .iter()
        .map(|n| g.index(n).map(LieElement::basis))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(is_lie_subalgebra(g, &basis))
}

/// Antisymmetrized order-`z` part of the quantum coproduct,
/// `(Delta - sigma Delta)(X)` at `z^1`.
pub fn first_order_cocommutators(h: &HopfStructure) -> Result<CocommutatorTable, LieError> {
    let p = h.presentation();
    assert!(h.order() >= 1, "needs order at least 1");
    let entries = crate::ncalg::Generator::all()
        .map(|gen| {
            let d = h.coproduct_of(gen);
            let anti = (d - &d.flip()).z_part(1);
            let mut w = WedgeElement::zero(2, 1);
            for (key, c) in anti.terms() {
                let idx = |m: &Monomial| {
                    if m.degree() == 1 {
                        m.lowest().ok_or(())
                    } else {
                        Err(())
                    }
                };
                match (idx(&key[0]), idx(&key[1])) {
                    (Ok(a), Ok(b)) if a < b => w.add(&[a, b], c.coeff(1)),
                    (Ok(_), Ok(_)) => {}
                    _ => return Err(LieError::NotLinear(format!("Delta({})", p.name_of(gen)))),
                }
            }
            Ok(w)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CocommutatorTable::new(entries))
}

/// Cocommutators regenerated from the classical r-matrix against the
/// stored table.
pub fn regenerated_table_check(name: PresentationName) -> CheckRecord {
    let g = LieAlgebra::for_presentation(name);
    let regenerated = cocommutator_from_r(&g, &classical_r(name));
    compare_tables(
        &g,
        &format!("{name}: cocommutators from r match table"),
        &regenerated,
        &cocommutator_table(name),
    )
}

/// Order-`z` antisymmetric part of the quantum coproduct against the
/// stored cocommutator table.
pub fn first_order_check(h: &HopfStructure) -> CheckRecord {
    let name = h.name();
    let g = LieAlgebra::for_presentation(name);
    let identity = format!("{name}: order-z part of Delta - sigma Delta matches table");
    match first_order_cocommutators(h) {
        Ok(first) => compare_tables(&g, &identity, &first, &cocommutator_table(name)),
        Err(e) => CheckRecord::run("classical", identity, &format!("{name}.coproduct"), || {
            Outcome::fail(1, e.to_string())
        }),
    }
}

/// The `z^0` part of a deformed presentation is the undeformed Lie algebra.
pub fn undeformed_limit_check(p: &Presentation) -> CheckRecord {
    let name = p.name();
    let g = LieAlgebra::for_presentation(name);
    CheckRecord::run(
        "classical",
        format!("{name}: z^0 part of the presentation is the undeformed algebra"),
        &format!("{name}.lie_brackets"),
        || match LieAlgebra::classical_limit_of(p) {
            Ok(lim) => Outcome::expect(lim.same_brackets(&g), || {
                (0..RANK)
                    .flat_map(|x| (x + 1..RANK).map(move |y| (x, y)))
                    .filter(|&(x, y)| lim.bracket_basis(x, y) != g.bracket_basis(x, y))
                    .map(|(x, y)| lim.render_bracket(x, y))
                    .collect::<Vec<_>>()
                    .join("; ")
            }),
            Err(e) => Outcome::fail(1, e.to_string()),
        },
    )
}

/// Whole classical layer for one presentation: Jacobi, CYBE, regenerated
/// and stored cocommutators, co-Jacobi, cocycle, and first-order
/// consistency with the quantum coproduct.
pub fn classical_suite(h: &HopfStructure) -> Report {
    let name = h.name();
    let g = LieAlgebra::for_presentation(name);
    let mut report = Report::new();
    report.extend(jacobi_check(&g));
    report.extend(cybe_check(&g, &classical_r(name)));
    report.push(regenerated_table_check(name));
    report.extend(cojacobi_and_cocycle_check(&g, &cocommutator_table(name)));
    if h.order() >= 1 {
        report.push(first_order_check(h));
    }
    report.push(undeformed_limit_check(h.presentation()));
    report
}

fn compare_tables(
    g: &LieAlgebra,
    identity: &str,
    got: &CocommutatorTable,
    want: &CocommutatorTable,
) -> CheckRecord {
    CheckRecord::run(
        "classical",
        identity,
        &format!("{}.cocommutators", g.name),
        || {
            let diffs: Vec<String> = (0..RANK)
                .filter(|&i| got.get(i) != want.get(i))
                .map(|i| {
                    format!(
                        "delta({}): got {} want {}",
                        g.names[i],
                        got.get(i).render(&g.names),
                        want.get(i).render(&g.names)
                    )
                })
                .collect();
            Outcome::from_residual(diffs.len(), || diffs.join("; "))
        },
    )
}

type Check = (String, String, Box<dyn Fn() -> Outcome + Send + Sync>);

/// Automorphism and isomorphism checks at the classical level.
pub fn classical_transport_suite() -> Report {
    let h6 = LieAlgebra::h6();
    let dual = LieAlgebra::for_presentation(PresentationName::H6JordanianDual);
    let sch = LieAlgebra::schrodinger();
    let names = h6.names;
    let checks: Vec<Check> = vec![
        (
            "h6: involution maps the cocommutator table to the dual table".into(),
            "h6_jordanian_dual.cocommutators".into(),
            Box::new(|| {
                let image = automorphism_table(&cocommutator_table(PresentationName::H6Jordanian));
                let want = cocommutator_table(PresentationName::H6JordanianDual);
                Outcome::expect(image == want, || format!("{:?}", image))
            }),
        ),
        (
            "h6: involution maps r to an r generating the dual table".into(),
            "h6_jordanian_dual.classical_r".into(),
            Box::new(move || {
                let image = automorphism_wedge(&classical_r(PresentationName::H6Jordanian));
                let table = cocommutator_from_r(&dual, &image);
                Outcome::expect(
                    image == classical_r(PresentationName::H6JordanianDual)
                        && table == cocommutator_table(PresentationName::H6JordanianDual),
                    || image.render(&names),
                )
            }),
        ),
        (
            "h6: involution preserves the brackets".into(),
            "h6.lie_brackets".into(),
            Box::new({
                let h6 = h6.clone();
                let dual = LieAlgebra::for_presentation(PresentationName::H6JordanianDual);
                move || {
                    let bad: Vec<String> = (0..RANK)
                        .flat_map(|x| (0..RANK).map(move |y| (x, y)))
                        .filter(|&(x, y)| {
                            let (ex, ey) = (LieElement::basis(x), LieElement::basis(y));
                            apply_automorphism(&h6.bracket(&ex, &ey))
                                != dual.bracket(&apply_automorphism(&ex), &apply_automorphism(&ey))
                        })
                        .map(|(x, y)| h6.render_bracket(x, y))
                        .collect();
                    Outcome::from_residual(bad.len(), || bad.join("; "))
                }
            }),
        ),
        (
            "h6 -> schrodinger: isomorphism preserves the brackets".into(),
            "schrodinger_jordanian.lie_brackets".into(),
            Box::new({
                let (h6, sch) = (h6.clone(), sch.clone());
                move || {
                    let f = |x: &LieElement| iso_h6_schrodinger(x, Direction::Forward);
                    let bad: Vec<String> = (0..RANK)
                        .flat_map(|x| (0..RANK).map(move |y| (x, y)))
                        .filter(|&(x, y)| {
                            let (ex, ey) = (LieElement::basis(x), LieElement::basis(y));
                            f(&h6.bracket(&ex, &ey)) != sch.bracket(&f(&ex), &f(&ey))
                        })
                        .map(|(x, y)| h6.render_bracket(x, y))
                        .collect();
                    Outcome::from_residual(bad.len(), || bad.join("; "))
                }
            }),
        ),
        (
            "h6 -> schrodinger: isomorphism maps r and the cocommutators".into(),
            "schrodinger_jordanian.classical_r".into(),
            Box::new(move || {
                let r = iso_wedge(
                    &classical_r(PresentationName::H6Jordanian),
                    Direction::Forward,
                );
                let table = cocommutator_table(PresentationName::H6Jordanian);
                let want = cocommutator_table(PresentationName::SchrodingerJordanian);
                let inv = iso_images(Direction::Inverse);
                // delta_S(Y) = iso(delta_h6(iso^-1 Y))
                let transported: Vec<WedgeElement> = (0..RANK)
                    .map(|i| iso_wedge(&table.apply(&inv[i]), Direction::Forward))
                    .collect();
                Outcome::expect(
                    r == classical_r(PresentationName::SchrodingerJordanian)
                        && CocommutatorTable::new(transported) == want,
                    || r.render(&sch.names),
                )
            }),
        ),
        (
            "h6 <-> schrodinger: round trip is the identity".into(),
            "schrodinger_jordanian.lie_brackets".into(),
            Box::new(|| {
                let ok = (0..RANK).all(|i| {
                    let e = LieElement::basis(i);
                    iso_h6_schrodinger(
                        &iso_h6_schrodinger(&e, Direction::Forward),
                        Direction::Inverse,
                    ) == e
                        && iso_h6_schrodinger(
                            &iso_h6_schrodinger(&e, Direction::Inverse),
                            Direction::Forward,
                        ) == e
                });
                Outcome::expect(ok, || "round trip differs".into())
            }),
        ),
        (
            "subalgebra chain h3 < h4 < h6".into(),
            "h6.lie_brackets".into(),
            Box::new(|| {
                let g = LieAlgebra::h6();
                let h3 = is_lie_subalgebra_named(&g, &["A+", "A-", "M"]).unwrap_or(false);
                let h4 = is_lie_subalgebra_named(&g, &["N", "A+", "A-", "M"]).unwrap_or(false);
                Outcome::expect(h3 && h4, || format!("h3 closed: {h3}, h4 closed: {h4}"))
            }),
        ),
    ];
    checks
        .par_iter()
        .map(|(id, anchor, f)| CheckRecord::run("classical", id.clone(), anchor, f))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{build_hopf, tensor_multiply, TensorElement};
    use crate::ncalg::build_presentation;
    use crate::scalars::ZSeries;

    fn h6_wedge(terms: &[(i64, &str, &str)]) -> WedgeElement {
        let g = LieAlgebra::h6();
        let t: Vec<_> = terms.iter().map(|(c, a, b)| (int(*c), *a, *b)).collect();
        WedgeElement::from_named(&g, 1, &t).unwrap()
    }

    #[test]
    fn wedge_normal_form() {
        let mut w = WedgeElement::zero(2, 1);
        w.add(&[4, 2], &int(3));
        assert_eq!(w.coeff(&[2, 4]), int(-3));
        assert_eq!(w.coeff(&[4, 2]), int(3));
        w.add(&[1, 1], &int(5));
        assert_eq!(w.len(), 1);
        let d = w.to_dense();
        assert_eq!(WedgeElement::from_dense(&d, 2, 1).unwrap(), w);
        let mut bad = vec![Rational::zero(); 36];
        bad[1] = int(1);
        assert_eq!(
            WedgeElement::from_dense(&bad, 2, 0).unwrap_err(),
            LieError::NotAntisymmetric
        );
    }

    #[test]
    fn cocommutators_from_r_match_tables() {
        let g = LieAlgebra::h6();
        let t = cocommutator_from_r(&g, &classical_r(PresentationName::H6Jordanian));
        assert!(t.get(g.index("A+").unwrap()).is_zero());
        assert_eq!(t.get(g.index("N").unwrap()), &h6_wedge(&[(1, "N", "A+")]));
        assert_eq!(
            t.get(g.index("B-").unwrap()),
            &h6_wedge(&[(2, "B-", "A+"), (2, "N", "A-")])
        );
        assert_eq!(
            cocommutator_from_r(&g, &WedgeElement::zero(2, 1)),
            CocommutatorTable::zero()
        );
        let s = LieAlgebra::schrodinger();
        let ts = cocommutator_from_r(&s, &classical_r(PresentationName::SchrodingerJordanian));
        assert_eq!(
            ts,
            cocommutator_table(PresentationName::SchrodingerJordanian)
        );
    }

    // Tensor-level oracle: [X (x) 1 + 1 (x) X, r] with r as a full matrix.
    #[test]
    fn cocommutator_matches_dense_adjoint_action() {
        for name in PresentationName::ALL {
            let g = LieAlgebra::for_presentation(name);
            let r = classical_r(name).to_dense();
            let table = cocommutator_from_r(&g, &classical_r(name));
            for x in 0..RANK {
                let mut out = vec![Rational::zero(); 36];
                for (i, c) in r.iter().enumerate() {
                    let (a, b) = (i / RANK, i % RANK);
                    for (k, ck) in g.bracket_basis(x, a).support() {
                        out[k * RANK + b] += c * ck;
                    }
                    for (k, ck) in g.bracket_basis(x, b).support() {
                        out[a * RANK + k] += c * ck;
                    }
                }
                assert_eq!(out, table.get(x).to_dense(), "{name} generator {x}");
            }
        }
    }

    #[test]
    fn cybe_examples() {
        let g = LieAlgebra::h6();
        assert!(cybe_check(&g, &classical_r(PresentationName::H6Jordanian)).all_passed());
        let bad = h6_wedge(&[(1, "A-", "A+")]);
        let s = schouten_bracket(&g, &bad).unwrap();
        assert!(!s.is_zero());
        assert!(!cybe_check(&g, &bad).all_passed());
        let sch = LieAlgebra::schrodinger();
        assert!(
            cybe_check(&sch, &classical_r(PresentationName::SchrodingerJordanian)).all_passed()
        );
    }

    // Oracle for the Schouten bracket: the same three commutators computed
    // in the tensor cube of the undeformed enveloping algebra.
    #[test]
    fn schouten_matches_enveloping_algebra() {
        let p = build_presentation(PresentationName::H6Jordanian, 0);
        let g = LieAlgebra::h6();
        for r in [
            classical_r(PresentationName::H6Jordanian),
            h6_wedge(&[(1, "A-", "A+")]),
            h6_wedge(&[(1, "B-", "B+"), (3, "N", "A-")]),
        ] {
            let mut rt = TensorElement::zero(2, 0);
            for (i, c) in r.to_dense().iter().enumerate() {
                let gens = [i / RANK, i % RANK]
                    .map(|k| Monomial::generator(crate::ncalg::Generator::new(k)));
                rt.add_term(gens.to_vec(), &ZSeries::constant(c.clone(), 0));
            }
            let (r12, r13, r23) = (rt.embed3((0, 1)), rt.embed3((0, 2)), rt.embed3((1, 2)));
            let comm = |a: &TensorElement, b: &TensorElement| {
                &tensor_multiply(a, b, &p).unwrap() - &tensor_multiply(b, a, &p).unwrap()
            };
            let total = &(&comm(&r12, &r13) + &comm(&r12, &r23)) + &comm(&r13, &r23);
            let mut dense = vec![Rational::zero(); 216];
            for (key, c) in total.terms() {
                let idx: Vec<usize> = key.iter().map(|m| m.lowest().unwrap()).collect();
                assert!(key.iter().all(|m| m.degree() == 1));
                dense[(idx[0] * RANK + idx[1]) * RANK + idx[2]] += c.coeff(0);
            }
            assert_eq!(schouten_bracket(&g, &r).unwrap().to_dense(), dense);
        }
    }

    #[test]
    fn jacobi_and_negative_control() {
        assert!(jacobi_check(&LieAlgebra::h6()).all_passed());
        assert!(jacobi_check(&LieAlgebra::schrodinger()).all_passed());
        assert_eq!(jacobi_check(&LieAlgebra::h6()).len(), 20);
        let g = LieAlgebra::h6();
        let corrupted = g
            .clone()
            .with_bracket("N", "A+", g.element(&[(int(2), "A+")]).unwrap())
            .unwrap();
        let report = jacobi_check(&corrupted);
        assert!(!report.all_passed());
        assert!(report.failures().all(|r| r.residual.is_some()));
    }

    #[test]
    fn bialgebra_conditions() {
        for name in PresentationName::ALL {
            let g = LieAlgebra::for_presentation(name);
            assert!(cojacobi_and_cocycle_check(&g, &cocommutator_table(name)).all_passed());
            assert!(cojacobi_and_cocycle_check(&g, &CocommutatorTable::zero()).all_passed());
        }
        // delta(N) alone breaks the cocycle condition.
        let g = LieAlgebra::h6();
        let mut entries = vec![WedgeElement::zero(2, 1); RANK];
        entries[g.index("N").unwrap()] = h6_wedge(&[(1, "N", "A+")]);
        assert!(!cojacobi_and_cocycle_check(&g, &CocommutatorTable::new(entries)).all_passed());
    }

    #[test]
    fn automorphism_examples() {
        let t = cocommutator_table(PresentationName::H6Jordanian);
        assert_eq!(
            automorphism_table(&t),
            cocommutator_table(PresentationName::H6JordanianDual)
        );
        assert_eq!(automorphism_table(&automorphism_table(&t)), t);
        let image = automorphism_wedge(&classical_r(PresentationName::H6Jordanian));
        let dual = LieAlgebra::for_presentation(PresentationName::H6JordanianDual);
        assert_eq!(image.render(dual.names()), "z*(-N/\\A-)");
        let x = LieElement::basis(2);
        assert_eq!(apply_automorphism(&apply_automorphism(&x)), x);
    }

    #[test]
    fn isomorphism_examples() {
        let h6 = LieAlgebra::h6();
        let s = LieAlgebra::schrodinger();
        let inv = |n: &str| {
            iso_h6_schrodinger(&LieElement::basis(s.index(n).unwrap()), Direction::Inverse)
        };
        let dp = iso_h6_schrodinger(&h6.bracket(&inv("D"), &inv("P")), Direction::Forward);
        assert_eq!(dp, s.element(&[(int(-1), "P")]).unwrap());
        let r = iso_wedge(
            &classical_r(PresentationName::H6Jordanian),
            Direction::Forward,
        );
        assert_eq!(r, classical_r(PresentationName::SchrodingerJordanian));
        assert_eq!(r.render(s.names()), "z*(-D/\\P - 1/2*M/\\P)");
        assert!(classical_transport_suite().all_passed());
    }

    #[test]
    fn subalgebras() {
        let h6 = LieAlgebra::h6();
        assert!(is_lie_subalgebra_named(&h6, &["A+", "A-", "M"]).unwrap());
        assert!(is_lie_subalgebra_named(&h6, &["N", "A+", "A-", "M"]).unwrap());
        assert!(!is_lie_subalgebra_named(&h6, &["N", "A+", "A-"]).unwrap());
        let s = LieAlgebra::schrodinger();
        assert!(is_lie_subalgebra_named(&s, &["H", "P", "K", "M"]).unwrap());
        assert!(is_lie_subalgebra_named(&s, &["D", "C", "H"]).unwrap());
        assert!(!is_lie_subalgebra_named(&s, &["D", "C", "P"]).unwrap());
        let span = [
            s.element(&[(int(1), "D"), (int(1), "M")]).unwrap(),
            LieElement::basis(s.index("M").unwrap()),
            LieElement::basis(s.index("P").unwrap()),
        ];
        assert!(is_lie_subalgebra(&s, &span));
    }

    #[test]
    fn first_order_matches_tables() {
        for name in PresentationName::ALL {
            let h = build_hopf(name, 2);
            assert_eq!(
                first_order_cocommutators(&h).unwrap(),
                cocommutator_table(name),
                "{name}"
            );
            assert!(classical_suite(&h).all_passed(), "{name}");
        }
    }
}
