//! Dense univariate polynomials over F_p.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Result;
use crate::ff::{FieldContext, FpElement};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients indexed by degree, constant term first. The top stored
/// coefficient is always nonzero; the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DensePolynomial {
    ctx: FieldContext,
    coeffs: Vec<u64>,
}

impl DensePolynomial {
    /// Builds a polynomial from integer coefficients (constant first),
    /// reducing each one mod p.
    pub fn from_coeffs(ctx: FieldContext, coeffs: &[u64]) -> Self {
        let p = ctx.p();
        Self::from_raw(ctx, coeffs.iter().map(|c| c % p).collect())
    }

    pub fn from_elements(ctx: FieldContext, coeffs: &[FpElement]) -> Result<Self> {
        for c in coeffs {
            ctx.check(&c.context())?;
        }
        Ok(Self::from_raw(
            ctx,
            coeffs.iter().map(|c| c.value()).collect(),
        ))
    }

    /// `coeffs` must already be reduced.
    pub(crate) fn from_raw(ctx: FieldContext, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        DensePolynomial { ctx, coeffs }
    }

    pub fn zero(ctx: FieldContext) -> Self {
        DensePolynomial {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FpElement) -> Self {
        Self::from_raw(c.context(), vec![c.value()])
    }

    /// The identity polynomial `x`.
    pub fn x(ctx: FieldContext) -> Self {
        Self::from_raw(ctx, vec![0, 1])
    }

    /// `c * x^n`.
    pub fn monomial(c: FpElement, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = c.value();
        Self::from_raw(c.context(), coeffs)
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FpElement {
        self.ctx.elem(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn leading_coeff(&self) -> Option<FpElement> {
        self.coeffs.last().map(|&c| self.ctx.elem(c))
    }

    /// Reduced coefficients, constant term first. Empty for the zero polynomial.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Indices of the nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn eval(&self, x: FpElement) -> Result<FpElement> {
        self.ctx.check(&x.context())?;
        let v = self.coeffs.iter().rev().fold(0, |acc, &c| {
            self.ctx.add_raw(self.ctx.mul_raw(acc, x.value()), c)
        });
        Ok(self.ctx.elem(v))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check(&other.ctx)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| self.ctx.add_raw(self.raw(i), other.raw(i)))
            .collect();
        Ok(Self::from_raw(self.ctx, out))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ctx.check(&other.ctx)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| self.ctx.sub_raw(self.raw(i), other.raw(i)))
            .collect();
        Ok(Self::from_raw(self.ctx, out))
    }

    pub fn negate(&self) -> Self {
        let out = self.coeffs.iter().map(|&c| self.ctx.neg_raw(c)).collect();
        Self::from_raw(self.ctx, out)
    }

    pub fn scale(&self, c: FpElement) -> Result<Self> {
        self.ctx.check(&c.context())?;
        let out = self
            .coeffs
            .iter()
            .map(|&a| self.ctx.mul_raw(a, c.value()))
            .collect();
        Ok(Self::from_raw(self.ctx, out))
    }

    /// Schoolbook product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ctx.check(&other.ctx)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ctx));
        }
        let ctx = self.ctx;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add_raw(out[i + j], ctx.mul_raw(a, b));
            }
        }
        Ok(Self::from_raw(ctx, out))
    }

    /// `self(inner(x))` by Horner's scheme in the polynomial ring.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.ctx.check(&inner.ctx)?;
        let mut acc = Self::zero(self.ctx);
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(inner)?;
            acc = acc.checked_add(&Self::from_raw(self.ctx, vec![c]))?;
        }
        Ok(acc)
    }

    /// True iff `self ∘ other == other ∘ self`. Polynomials over different
    /// fields never commute.
    pub fn commutes_with(&self, other: &Self) -> bool {
        match (self.compose(other), other.compose(self)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// The group law `g ⊕ h = g + h - x`.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)?.checked_sub(&Self::x(self.ctx))
    }

    /// Inverse under ⊕: `2x - g`.
    pub fn oplus_inverse(&self) -> Self {
        let two_x = Self::monomial(self.ctx.elem(2), 1);
        two_x
            .checked_sub(self)
            .expect("same context by construction")
    }

    #[inline]
    fn raw(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
}

/// `f ∘ g == g ∘ f`.
pub fn commutes(f: &DensePolynomial, g: &DensePolynomial) -> bool {
    f.commutes_with(g)
}

/// Orders by field, then degree, then coefficients from the top down, so
/// polynomials of one degree sort lexicographically on `(c_d, ..., c_0)`.
impl Ord for DensePolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .cmp(&other.ctx)
            .then_with(|| self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for DensePolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Descending degree with caret exponents, e.g. `2x^6 + x^3 + 2x + 1`.
impl fmt::Display for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
