//! Binomial coefficients modulo p.
//!
//! [`LucasTable`] evaluates `C(m, n) mod p` digit by digit in base p from a
//! precomputed `p x p` table of small binomials. [`PascalTriangle`] computes
//! the same residues with nothing but the additive recurrence
//! `C(m, n) = C(m-1, n-1) + C(m-1, n)` and serves as the independent check.

use crate::error::{Error, Result};
use crate::ff::{FieldContext, FpElement};

/// Largest `m` accepted by the Pascal oracle.
pub const PASCAL_LIMIT: u64 = 500;

/// Base-p expansion of a nonnegative integer, least significant digit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePDigits {
    digits: Vec<u64>,
    p: u64,
}

impl BasePDigits {
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn base(&self) -> u64 {
        self.p
    }

    /// Digit at position `i`, zero past the top.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// `Σ digits[i] p^i`.
    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

pub fn base_p_digits(n: u64, ctx: &FieldContext) -> BasePDigits {
    let p = ctx.p();
    let mut digits = Vec::new();
    let mut rest = n;
    loop {
        digits.push(rest % p);
        rest /= p;
        if rest == 0 {
            break;
        }
    }
    BasePDigits { digits, p }
}

/// Small binomials `C(a, b) mod p` for `0 <= a, b < p`.
#[derive(Debug, Clone)]
pub struct LucasTable {
    ctx: FieldContext,
    table: Vec<u64>,
}

impl LucasTable {
    pub fn new(ctx: FieldContext) -> Self {
        let p = ctx.p() as usize;
        let mut table = vec![0u64; p * p];
        for a in 0..p {
            table[a * p] = 1;
            for b in 1..=a {
                let up = table[(a - 1) * p + b - 1];
                let left = if b < a { table[(a - 1) * p + b] } else { 0 };
                table[a * p + b] = ctx.add_raw(up, left);
            }
        }
        LucasTable { ctx, table }
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    /// `C(m, n) mod p` as the product of digitwise binomials. Zero whenever
    /// some digit of `n` exceeds the matching digit of `m` (in particular
    /// whenever `n > m`).
    pub fn binom(&self, m: u64, n: u64) -> FpElement {
        self.ctx.elem(self.binom_raw(m, n))
    }

    pub(crate) fn binom_raw(&self, mut m: u64, mut n: u64) -> u64 {
        let p = self.ctx.p();
        let mut acc = 1u64;
        while n > 0 {
            let (mi, ni) = (m % p, n % p);
            if ni > mi {
                return 0;
            }
            acc = self.ctx.mul_raw(acc, self.table[(mi * p + ni) as usize]);
            m /= p;
            n /= p;
        }
        acc
    }
}

/// One-off Lucas evaluation. Build a [`LucasTable`] when calling repeatedly.
pub fn binom_lucas(m: u64, n: u64, ctx: &FieldContext) -> FpElement {
    LucasTable::new(*ctx).binom(m, n)
}

/// Rows `0..=max_m` of Pascal's triangle reduced mod p.
#[derive(Debug, Clone)]
pub struct PascalTriangle {
    ctx: FieldContext,
    rows: Vec<Vec<u64>>,
}

impl PascalTriangle {
    pub fn new(max_m: u64, ctx: FieldContext) -> Result<Self> {
        if max_m > PASCAL_LIMIT {
            return Err(Error::BinomTooLarge {
                m: max_m,
                limit: PASCAL_LIMIT,
            });
        }
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(max_m as usize + 1);
        rows.push(vec![1]);
        for m in 1..=max_m as usize {
            let prev = &rows[m - 1];
            let mut row = vec![1u64; m + 1];
            for n in 1..m {
                row[n] = ctx.add_raw(prev[n - 1], prev[n]);
            }
            rows.push(row);
        }
        Ok(PascalTriangle { ctx, rows })
    }

    pub fn max_m(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    /// `C(m, n) mod p`; panics if `m` exceeds the precomputed rows.
    pub fn get(&self, m: u64, n: u64) -> FpElement {
        let row = &self.rows[m as usize];
        self.ctx.elem(row.get(n as usize).copied().unwrap_or(0))
    }
}

/// `C(m, n) mod p` from the additive recurrence alone.
pub fn binom_oracle(m: u64, n: u64, ctx: &FieldContext) -> Result<FpElement> {
    Ok(PascalTriangle::new(m, *ctx)?.get(m, n))
}

/// Checks `Σ_{j=0}^{k} C(m, j) C(n-m, k-j) = C(n, k)` mod p with Lucas on both
/// sides. Returns false when `m > n`, where the identity is not defined.
pub fn chu_vandermonde_check(m: u64, n: u64, k: u64, ctx: &FieldContext) -> bool {
    if m > n {
        return false;
    }
    let lucas = LucasTable::new(*ctx);
    let lhs = (0..=k).fold(0, |acc, j| {
        ctx.add_raw(
            acc,
            ctx.mul_raw(lucas.binom_raw(m, j), lucas.binom_raw(n - m, k - j)),
        )
    });
    lhs == lucas.binom_raw(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64) -> FieldContext {
        FieldContext::new(p).unwrap()
    }

    #[test]
    fn digits_examples() {
        assert_eq!(base_p_digits(12, &ctx(5)).digits(), &[2, 2]);
        assert_eq!(base_p_digits(0, &ctx(3)).digits(), &[0]);
        assert_eq!(base_p_digits(25, &ctx(5)).digits(), &[0, 0, 1]);
    }

    #[test]
    fn digits_reconstruct_and_are_canonical() {
        for p in [3, 5, 7, 11] {
            for n in 0..2000 {
                let d = base_p_digits(n, &ctx(p));
                assert_eq!(d.value(), n);
                assert!(d.digits().iter().all(|&x| x < p));
                if n > 0 {
                    assert_ne!(*d.digits().last().unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn freshmans_dream() {
        for p in [3, 5, 7, 11, 13] {
            let lucas = LucasTable::new(ctx(p));
            assert!(lucas.binom(p, 0).is_one());
            assert!(lucas.binom(p, p).is_one());
            for i in 1..p {
                assert!(lucas.binom(p, i).is_zero(), "C({p},{i})");
            }
        }
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(binom_lucas(7, 2, &ctx(5)).value(), 1);
        for m in 0..30 {
            assert!(binom_lucas(m, 0, &ctx(3)).is_one());
        }
        assert!(binom_lucas(3, 5, &ctx(7)).is_zero());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(binom_oracle(6, 3, &ctx(5)).unwrap().value(), 0);
        assert_eq!(binom_oracle(4, 2, &ctx(3)).unwrap().value(), 0);
        for m in 0..20 {
            assert!(binom_oracle(m, m, &ctx(7)).unwrap().is_one());
        }
        assert_eq!(
            binom_oracle(501, 3, &ctx(3)).unwrap_err(),
            Error::BinomTooLarge { m: 501, limit: 500 }
        );
    }

    #[test]
    fn chu_vandermonde_examples() {
        assert!(chu_vandermonde_check(2, 5, 3, &ctx(5)));
        assert!(chu_vandermonde_check(3, 7, 4, &ctx(3)));
        for n in 0..10 {
            for k in 0..=n {
                assert!(chu_vandermonde_check(0, n, k, &ctx(7)));
            }
        }
        assert!(!chu_vandermonde_check(4, 3, 1, &ctx(3)));
    }

    #[test]
    fn chu_vandermonde_small_range() {
        for p in [3, 5, 7] {
            for n in 0..=30 {
                for m in 0..=n {
                    for k in 0..=n {
                        assert!(chu_vandermonde_check(m, n, k, &ctx(p)), "({m},{n},{k},{p})");
                    }
                }
            }
        }
    }
}
