//! Exact coefficient arithmetic.
//!
//! Three scalar kinds live here:
//!
//! * [`Rational`]: arbitrary-precision rationals, always in lowest terms.
//! * [`ZSeries`]: polynomials in the deformation parameter `z` truncated
//!   modulo `z^(M+1)`. Every deformed quantity in the crate uses these as
//!   its coefficient ring; `M` is fixed per computation.
//! * [`Radical`]: numbers `q * sqrt(r)` with `r` squarefree, used only to
//!   present matrices in the orthonormal number-state basis.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series with zero constant term is not invertible")]
    NonUnit,
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Polynomial in `z` with rational coefficients, reduced modulo `z^(M+1)`.
///
/// The coefficient of `z^k` sits at index `k`; the vector always has
/// length `M + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZSeries {
    coeffs: Vec<Rational>,
}

impl ZSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::term(c, 0, order)
    }

    /// `c * z^power`; vanishes when `power > order`.
    pub fn term(c: Rational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `z` itself.
    pub fn z(order: usize) -> Self {
        Self::term(Rational::one(), 1, order)
    }

    /// Builds a series from explicit coefficients; missing trailing entries
    /// are zero and entries past `order` are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    /// Truncation order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The classical limit `z -> 0`.
    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Lowest power of `z` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Indices and values of the nonzero coefficients.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `z^k`, dropping what falls past the truncation order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for i in 0..=order {
            if i + k > order {
                break;
            }
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Zeroes every coefficient above `z^budget`.
    pub fn truncated(&self, budget: usize) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().skip(budget + 1) {
            *c = Rational::zero();
        }
        out
    }

    /// Substitutes `z -> -z`.
    pub fn negate_z(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Same coefficients, different truncation order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at `z^(M+1)`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.nonzero_terms() {
            for (j, b) in other.nonzero_terms() {
                if i + j > order {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse modulo `z^(M+1)`.
    pub fn invert(&self) -> Result<Self, ScalarError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(ScalarError::NonUnit);
        }
        let order = self.order();
        let inv0 = a0.recip();
        let mut out = Self::zero(order);
        out.coeffs[0] = inv0.clone();
        for k in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out.coeffs[k - j];
            }
            out.coeffs[k] = -acc * &inv0;
        }
        Ok(out)
    }

    fn check_order(&self, other: &Self) -> Result<(), ScalarError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(ScalarError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }
}

pub fn series_add(a: &ZSeries, b: &ZSeries) -> Result<ZSeries, ScalarError> {
    a.try_add(b)
}

pub fn series_mul(a: &ZSeries, b: &ZSeries) -> Result<ZSeries, ScalarError> {
    a.try_mul(b)
}

pub fn series_invert(a: &ZSeries) -> Result<ZSeries, ScalarError> {
    a.invert()
}

// The operator impls are for the hot path where all values come from one
// computation context; mixing orders there is a logic error.
fn expect<T>(r: Result<T, ScalarError>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add for &ZSeries {
    type Output = ZSeries;
    fn add(self, rhs: &ZSeries) -> ZSeries {
        expect(self.try_add(rhs))
    }
}

impl Sub for &ZSeries {
    type Output = ZSeries;
    fn sub(self, rhs: &ZSeries) -> ZSeries {
        expect(self.try_sub(rhs))
    }
}

impl Mul for &ZSeries {
    type Output = ZSeries;
    fn mul(self, rhs: &ZSeries) -> ZSeries {
        expect(self.try_mul(rhs))
    }
}

impl Add for ZSeries {
    type Output = ZSeries;
    fn add(self, rhs: ZSeries) -> ZSeries {
        &self + &rhs
    }
}

impl Sub for ZSeries {
    type Output = ZSeries;
    fn sub(self, rhs: ZSeries) -> ZSeries {
        &self - &rhs
    }
}

impl Mul for ZSeries {
    type Output = ZSeries;
    fn mul(self, rhs: ZSeries) -> ZSeries {
        &self * &rhs
    }
}

impl AddAssign<&ZSeries> for ZSeries {
    fn add_assign(&mut self, rhs: &ZSeries) {
        expect(self.check_order(rhs));
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&ZSeries> for ZSeries {
    fn sub_assign(&mut self, rhs: &ZSeries) {
        expect(self.check_order(rhs));
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for &ZSeries {
    type Output = ZSeries;
    fn neg(self) -> ZSeries {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ZSeries {
    type Output = ZSeries;
    fn neg(self) -> ZSeries {
        -&self
    }
}

/// Writes `c * z^k` as e.g. `z`, `-2*z^3`, `(z/2)`, `(3z^2/4)`, `5/2`.
pub(crate) fn fmt_scaled_power(c: &Rational, k: usize, leading: bool) -> String {
    let mut out = String::new();
    if c.is_negative() {
        out.push('-');
    } else if !leading {
        out.push('+');
    }
    let a = c.abs();
    let zpart = match k {
        0 => String::new(),
        1 => "z".to_string(),
        _ => format!("z^{k}"),
    };
    if k == 0 {
        out.push_str(&a.to_string());
    } else if a.is_integer() {
        if !a.is_one() {
            out.push_str(&format!("{}*", a.numer()));
        }
        out.push_str(&zpart);
    } else {
        let n = a.numer();
        let num = if n.is_one() {
            zpart
        } else {
            format!("{n}{zpart}")
        };
        out.push_str(&format!("({num}/{})", a.denom()));
    }
    out
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.nonzero_terms().collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in terms {
            let s = fmt_scaled_power(c, k, first);
            if first {
                f.write_str(&s)?;
            } else {
                write!(f, " {} {}", &s[..1], &s[1..])?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZSeries[{}; M={}]", self, self.order())
    }
}

/// A real number `q * sqrt(r)` with `r` squarefree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Radical {
    q: Rational,
    r: u64,
}

/// Splits `n` into `(s, r)` with `n = s^2 * r` and `r` squarefree.
pub fn squarefree_split(n: u64) -> (u64, u64) {
    assert!(n > 0, "radicand must be positive");
    let mut square = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        while rest.is_multiple_of(p * p) {
            rest /= p * p;
            square *= p;
        }
        p += 1;
    }
    (square, rest)
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && squarefree_split(n).0 == 1
}

impl Radical {
    pub fn new(q: Rational, r: u64) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let (s, r) = squarefree_split(r);
        Self {
            q: q * Rational::from_integer(BigInt::from(s)),
            r,
        }
    }

    pub fn zero() -> Self {
        Self {
            q: Rational::zero(),
            r: 1,
        }
    }

    pub fn rational(q: Rational) -> Self {
        Self::new(q, 1)
    }

    /// `sqrt(n)`.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        Self::new(Rational::one(), n)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> u64 {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// The rational number `q^2 * r`.
    pub fn square(&self) -> Rational {
        &self.q * &self.q * Rational::from_integer(BigInt::from(self.r))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.q * c, self.r)
    }

    pub fn to_f64(&self) -> f64 {
        self.q.to_f64().unwrap_or(f64::NAN) * (self.r as f64).sqrt()
    }
}

pub fn radical_mul(a: &Radical, b: &Radical) -> Radical {
    if a.is_zero() || b.is_zero() {
        return Radical::zero();
    }
    let g = num_integer::gcd(a.r, b.r);
    // sqrt(a.r) * sqrt(b.r) = g * sqrt((a.r/g) * (b.r/g)); both factors
    // squarefree and coprime, so the product stays squarefree.
    let r = (a.r / g).checked_mul(b.r / g).expect("radicand overflow");
    Radical {
        q: &a.q * &b.q * Rational::from_integer(BigInt::from(g)),
        r,
    }
}

impl Mul for &Radical {
    type Output = Radical;
    fn mul(self, rhs: &Radical) -> Radical {
        radical_mul(self, rhs)
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 1 || self.q.is_zero() {
            write!(f, "{}", self.q)
        } else if self.q.is_one() {
            write!(f, "sqrt({})", self.r)
        } else if (-&self.q).is_one() {
            write!(f, "-sqrt({})", self.r)
        } else {
            write!(f, "{}*sqrt({})", self.q, self.r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(cs: &[(i64, i64)], order: usize) -> ZSeries {
        ZSeries::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect(), order)
    }

    #[test]
    fn add_cancels_and_has_identity() {
        let a = series(&[(1, 1), (1, 1)], 3);
        let b = series(&[(1, 1), (-1, 1)], 3);
        assert_eq!(&a + &b, ZSeries::constant(int(2), 3));
        assert_eq!(&a + &ZSeries::zero(3), a);
    }

    #[test]
    fn add_rational_coefficients() {
        let a = ZSeries::term(rat(1, 2), 2, 4);
        let b = ZSeries::term(rat(1, 3), 2, 4);
        assert_eq!(series_add(&a, &b).unwrap(), ZSeries::term(rat(5, 6), 2, 4));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = ZSeries::one(2);
        let b = ZSeries::one(3);
        assert_eq!(
            series_add(&a, &b),
            Err(ScalarError::OrderMismatch { left: 2, right: 3 })
        );
        assert!(series_mul(&a, &b).is_err());
    }

    #[test]
    fn mul_truncates() {
        let a = series(&[(1, 1), (1, 1)], 1);
        let b = series(&[(1, 1), (-1, 1)], 1);
        assert_eq!(&a * &b, ZSeries::one(1));
        let zm = ZSeries::term(int(1), 4, 4);
        assert!((&zm * &ZSeries::z(4)).is_zero());
    }

    #[test]
    fn exp_times_exp_of_negative_is_one() {
        // Oracle: direct convolution sum_{i+j=k} (-1)^j / (i! j!) = 0 for k > 0.
        let order = 6;
        let e = ZSeries::from_coeffs((0..=order).map(|k| factorial(k).recip()).collect(), order);
        let f = e.negate_z();
        for k in 1..=order {
            let mut acc = Rational::zero();
            for j in 0..=k {
                let sign = if j % 2 == 0 { int(1) } else { int(-1) };
                acc += sign / (factorial(k - j) * factorial(j));
            }
            assert!(acc.is_zero());
        }
        assert_eq!(series_mul(&e, &f).unwrap(), ZSeries::one(order));
    }

    #[test]
    fn invert_geometric() {
        assert_eq!(series_invert(&ZSeries::one(3)).unwrap(), ZSeries::one(3));
        let a = series(&[(1, 1), (1, 1)], 3);
        let expected = series(&[(1, 1), (-1, 1), (1, 1), (-1, 1)], 3);
        assert_eq!(series_invert(&a).unwrap(), expected);
        assert_eq!(
            series_invert(&ZSeries::constant(int(2), 3)).unwrap(),
            ZSeries::constant(rat(1, 2), 3)
        );
        assert_eq!(series_invert(&ZSeries::z(3)), Err(ScalarError::NonUnit));
    }

    #[test]
    fn radicals() {
        assert_eq!(
            radical_mul(&Radical::sqrt(2), &Radical::sqrt(3)),
            Radical::sqrt(6)
        );
        assert_eq!(
            radical_mul(&Radical::sqrt(2), &Radical::sqrt(2)),
            Radical::rational(int(2))
        );
        let seven_over_root6 = Radical::new(rat(7, 6), 6);
        assert_eq!(
            radical_mul(&seven_over_root6, &Radical::sqrt(6)),
            Radical::rational(int(7))
        );
        assert_eq!(Radical::new(int(0), 12), Radical::zero());
        assert_eq!(Radical::sqrt(24), Radical::new(int(2), 6));
    }

    #[test]
    fn display_forms() {
        assert_eq!(fmt_scaled_power(&rat(-1, 2), 1, true), "-(z/2)");
        assert_eq!(fmt_scaled_power(&int(-1), 1, true), "-z");
        assert_eq!(fmt_scaled_power(&int(3), 2, false), "+3*z^2");
        assert_eq!(fmt_scaled_power(&rat(3, 4), 2, true), "(3z^2/4)");
        assert_eq!(
            series(&[(1, 1), (0, 1), (-1, 2)], 2).to_string(),
            "1 - (z^2/2)"
        );
        assert_eq!(Radical::new(rat(7, 6), 6).to_string(), "7/6*sqrt(6)");
    }
}
