//! Linear polynomials, conjugation, and reduction of a linear `f` to one of
//! the two canonical families `x + 1` and `ax`.
//!
//! Throughout, conjugating `P` by `λ` means `λ⁻¹ ∘ P ∘ λ`. Conjugation maps
//! the commutant of `f` bijectively onto the commutant of `λ⁻¹ ∘ f ∘ λ` and
//! preserves the degree of every nonconstant polynomial.

use std::fmt;

use crate::error::{Error, Result};
use crate::ff::{FieldContext, FpElement};
use crate::poly::DensePolynomial;

/// `ax + b` with `a ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearPolynomial {
    a: FpElement,
    b: FpElement,
}

impl LinearPolynomial {
    pub fn new(a: FpElement, b: FpElement) -> Result<Self> {
        a.context().check(&b.context())?;
        if a.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(LinearPolynomial { a, b })
    }

    /// Reduces `a` and `b` into the field first.
    pub fn from_ints(ctx: FieldContext, a: u64, b: u64) -> Result<Self> {
        Self::new(ctx.elem(a), ctx.elem(b))
    }

    pub fn identity(ctx: FieldContext) -> Self {
        LinearPolynomial {
            a: ctx.one(),
            b: ctx.zero(),
        }
    }

    /// Recovers a linear polynomial from its dense form.
    pub fn from_poly(g: &DensePolynomial) -> Result<Self> {
        if g.degree().finite() != Some(1) {
            return Err(Error::NotLinear);
        }
        Self::new(g.coeff(1), g.coeff(0))
    }

    pub fn a(&self) -> FpElement {
        self.a
    }

    pub fn b(&self) -> FpElement {
        self.b
    }

    pub fn context(&self) -> FieldContext {
        self.a.context()
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_monic(&self) -> bool {
        self.a.is_one()
    }

    pub fn to_poly(&self) -> DensePolynomial {
        DensePolynomial::from_elements(self.context(), &[self.b, self.a])
            .expect("coefficients share a context")
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearPolynomial) -> Result<LinearPolynomial> {
        Self::new(
            self.a.try_mul(inner.a)?,
            self.a.try_mul(inner.b)?.try_add(self.b)?,
        )
    }

    /// `α⁻¹x - α⁻¹β` for `λ = αx + β`.
    pub fn inverse(&self) -> LinearPolynomial {
        let a_inv = self.a.inv().expect("leading coefficient is nonzero");
        LinearPolynomial {
            a: a_inv,
            b: -(a_inv * self.b),
        }
    }
}

impl fmt::Display for LinearPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

/// `λ⁻¹ ∘ P ∘ λ`.
pub fn conjugate(poly: &DensePolynomial, lambda: &LinearPolynomial) -> Result<DensePolynomial> {
    let inner = lambda.to_poly();
    let outer = lambda.inverse().to_poly();
    outer.compose(&poly.compose(&inner)?)
}

/// `λ⁻¹ ∘ f ∘ λ` for linear `f`, computed in closed form.
pub fn conjugate_linear(
    f: &LinearPolynomial,
    lambda: &LinearPolynomial,
) -> Result<LinearPolynomial> {
    lambda.inverse().compose(&f.compose(lambda)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalKind {
    /// `f = x + b`, `b ≠ 0`; canonical representative `x + 1`.
    MonicShift,
    /// `f = ax + b`, `a ≠ 1`; canonical representative `ax`.
    Scaling,
}

/// Which of the candidate conjugator and its inverse turned out to work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugatorDirection {
    AsProposed,
    Inverted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    kind: CanonicalKind,
    original: LinearPolynomial,
    canonical: LinearPolynomial,
    lambda: LinearPolynomial,
    direction: ConjugatorDirection,
}

impl CanonicalForm {
    pub fn kind(&self) -> CanonicalKind {
        self.kind
    }

    pub fn original(&self) -> LinearPolynomial {
        self.original
    }

    /// `x + 1` or `ax`.
    pub fn canonical(&self) -> LinearPolynomial {
        self.canonical
    }

    /// The conjugator with `λ⁻¹ ∘ original ∘ λ = canonical`.
    pub fn lambda(&self) -> LinearPolynomial {
        self.lambda
    }

    pub fn direction(&self) -> ConjugatorDirection {
        self.direction
    }
}

/// Finds `λ` with `λ⁻¹ ∘ f ∘ λ` equal to `ax` (when `a ≠ 1`) or `x + 1`
/// (when `a = 1`).
///
/// The candidate conjugators are the translation `x - b(a-1)⁻¹` and the
/// scaling `b⁻¹x`. Each candidate is checked by composition and replaced by
/// its inverse if it maps in the opposite direction; the scaling candidate
/// needs that swap under the `λ⁻¹ ∘ f ∘ λ` convention.
pub fn canonicalize(f: &LinearPolynomial) -> Result<CanonicalForm> {
    if f.is_identity() {
        return Err(Error::IdentityPolynomial);
    }
    let ctx = f.context();
    let (kind, canonical, candidate) = if f.a.is_one() {
        let lambda = LinearPolynomial::new(f.b.inv()?, ctx.zero())?;
        (
            CanonicalKind::MonicShift,
            LinearPolynomial::from_ints(ctx, 1, 1)?,
            lambda,
        )
    } else {
        let shift = -(f.b * (f.a - ctx.one()).inv()?);
        let lambda = LinearPolynomial::new(ctx.one(), shift)?;
        (
            CanonicalKind::Scaling,
            LinearPolynomial::new(f.a, ctx.zero())?,
            lambda,
        )
    };

    for (lambda, direction) in [
        (candidate, ConjugatorDirection::AsProposed),
        (candidate.inverse(), ConjugatorDirection::Inverted),
    ] {
        let linear_ok = conjugate_linear(f, &lambda)? == canonical;
        if linear_ok && conjugate(&f.to_poly(), &lambda)? == canonical.to_poly() {
            return Ok(CanonicalForm {
                kind,
                original: *f,
                canonical,
                lambda,
                direction,
            });
        }
    }
    unreachable!("one of λ, λ⁻¹ always conjugates {f} to {canonical}")
}

/// Carries a commutant of `λ⁻¹ ∘ f ∘ λ` back to the commutant of `f` by
/// conjugating each member with `λ⁻¹`.
pub fn transport_commutant(
    gs: &[DensePolynomial],
    lambda: &LinearPolynomial,
) -> Result<Vec<DensePolynomial>> {
    let back = lambda.inverse();
    gs.iter().map(|g| conjugate(g, &back)).collect()
}
