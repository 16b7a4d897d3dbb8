//! Arithmetic in the prime field F_p.
//!
//! Residues are stored as `u64` alongside the modulus they belong to, so that
//! elements from different fields can be told apart at runtime. The modulus is
//! capped below 2^32 which keeps every product of two residues inside a `u64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

const MAX_PRIME: u64 = u32::MAX as u64;

/// An odd prime `p` together with the arithmetic it induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldContext {
    p: u64,
}

impl FieldContext {
    /// Validates `p` by trial division. `p = 2` is rejected outright.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 {
            return Err(if p == 2 {
                Error::UnsupportedCharacteristic(p)
            } else {
                Error::NotPrime(p)
            });
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldContext { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer into the field.
    #[inline]
    pub fn elem(&self, value: u64) -> FpElement {
        FpElement {
            value: value % self.p,
            p: self.p,
        }
    }

    /// Reduces a signed integer into the field.
    pub fn elem_i64(&self, value: i64) -> FpElement {
        let p = self.p as i64;
        self.elem(value.rem_euclid(p) as u64)
    }

    pub fn zero(&self) -> FpElement {
        self.elem(0)
    }

    pub fn one(&self) -> FpElement {
        self.elem(1)
    }

    /// All residues `0, 1, ..., p-1` in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = FpElement> + '_ {
        (0..self.p).map(move |v| self.elem(v))
    }

    /// The nonzero residues `1, ..., p-1` in increasing order.
    pub fn units(&self) -> impl Iterator<Item = FpElement> + '_ {
        (1..self.p).map(move |v| self.elem(v))
    }

    // Raw residue kernels shared with the polynomial layer.

    #[inline]
    pub(crate) fn add_raw(&self, x: u64, y: u64) -> u64 {
        let s = x + y;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub_raw(&self, x: u64, y: u64) -> u64 {
        if x >= y {
            x - y
        } else {
            x + self.p - y
        }
    }

    #[inline]
    pub(crate) fn mul_raw(&self, x: u64, y: u64) -> u64 {
        (x * y) % self.p
    }

    #[inline]
    pub(crate) fn neg_raw(&self, x: u64) -> u64 {
        if x == 0 {
            0
        } else {
            self.p - x
        }
    }

    pub(crate) fn check(&self, other: &FieldContext) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.p,
                right: other.p,
            })
        }
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A fully reduced residue modulo `p`.
///
/// The arithmetic operators panic when the two operands come from different
/// fields; the `try_*` methods report the mismatch as an error instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpElement {
    value: u64,
    p: u64,
}

impl FpElement {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn context(&self) -> FieldContext {
        FieldContext { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn same_field(&self, other: &FpElement) -> Result<FieldContext> {
        let ctx = self.context();
        ctx.check(&other.context())?;
        Ok(ctx)
    }

    pub fn try_add(self, other: FpElement) -> Result<FpElement> {
        let ctx = self.same_field(&other)?;
        Ok(FpElement {
            value: ctx.add_raw(self.value, other.value),
            p: self.p,
        })
    }

    pub fn try_sub(self, other: FpElement) -> Result<FpElement> {
        let ctx = self.same_field(&other)?;
        Ok(FpElement {
            value: ctx.sub_raw(self.value, other.value),
            p: self.p,
        })
    }

    pub fn try_mul(self, other: FpElement) -> Result<FpElement> {
        let ctx = self.same_field(&other)?;
        Ok(FpElement {
            value: ctx.mul_raw(self.value, other.value),
            p: self.p,
        })
    }

    /// Multiplicative inverse via Fermat: `x^(p-2)`.
    pub fn inv(self) -> Result<FpElement> {
        if self.value == 0 {
            return Err(Error::NotInvertible);
        }
        Ok(self.pow(self.p - 2))
    }

    /// `x^e` by square-and-multiply. `0^0 = 1`.
    pub fn pow(self, mut e: u64) -> FpElement {
        let ctx = self.context();
        let mut base = self.value;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = ctx.mul_raw(acc, base);
            }
            base = ctx.mul_raw(base, base);
            e >>= 1;
        }
        FpElement {
            value: acc,
            p: self.p,
        }
    }

    /// Smallest `r >= 1` with `x^r = 1`, found by stepping through powers.
    pub fn mult_order(self) -> Result<u64> {
        if self.value == 0 {
            return Err(Error::NotInvertible);
        }
        let ctx = self.context();
        let mut acc = self.value;
        let mut r = 1;
        while acc != 1 {
            acc = ctx.mul_raw(acc, self.value);
            r += 1;
        }
        Ok(r)
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for FpElement {
            type Output = FpElement;

            fn $method(self, rhs: FpElement) -> FpElement {
                self.$checked(rhs)
                    .expect("field elements from different contexts")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for FpElement {
    type Output = FpElement;

    fn neg(self) -> FpElement {
        FpElement {
            value: self.context().neg_raw(self.value),
            p: self.p,
        }
    }
}
