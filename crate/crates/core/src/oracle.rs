//! Exhaustive search for `C_d(f)`, used as ground truth for the constructive
//! path in [`crate::commutant`].
//!
//! Candidates are the `(p-1) p^d` coefficient tuples `(c_d, ..., c_0)` with
//! `c_d ≠ 0`, walked as a base-p counter. Each candidate is tested by
//! comparing `f ∘ g` against `g ∘ f`, where `g ∘ f = Σ c_i f^i` is expanded from
//! a table of powers of `f` rather than by Horner's scheme.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ff::FieldContext;
use crate::poly::DensePolynomial;

pub const DEFAULT_MAX_CANDIDATES: u128 = 10_000_000;

/// Upper bound on the number of candidates a single search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_candidates: u128,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

impl OracleBudget {
    pub fn new(max_candidates: u128) -> Self {
        OracleBudget { max_candidates }
    }
}

/// `(p-1) p^d`, or `None` on overflow.
pub fn search_size(p: u64, d: u64) -> Option<u128> {
    let exp = u32::try_from(d).ok()?;
    (p as u128).checked_pow(exp)?.checked_mul(p as u128 - 1)
}

/// Checks a search of degree `d` over `F_p` against the budget.
pub fn check_budget(p: u64, d: u64, budget: &OracleBudget) -> Result<u128> {
    match search_size(p, d) {
        Some(n) if n <= budget.max_candidates => Ok(n),
        Some(n) => Err(Error::OracleTooLarge {
            required: n.to_string(),
            budget: budget.max_candidates,
        }),
        None => Err(Error::OracleTooLarge {
            required: format!("({} - 1) * {}^{}", p, p, d),
            budget: budget.max_candidates,
        }),
    }
}

/// Tests candidates against a fixed linear `f = ax + b`.
struct CommutationKernel {
    ctx: FieldContext,
    a: u64,
    b: u64,
    /// powers[i][m] = coefficient of x^m in f^i
    powers: Vec<Vec<u64>>,
}

impl CommutationKernel {
    fn new(f: &DensePolynomial, d: usize) -> Self {
        let ctx = f.context();
        let (b, a) = (f.coeff(0).value(), f.coeff(1).value());
        let mut powers = vec![vec![1u64]];
        for i in 1..=d {
            let prev = &powers[i - 1];
            let mut next = vec![0u64; i + 1];
            for (m, &c) in prev.iter().enumerate() {
                next[m] = ctx.add_raw(next[m], ctx.mul_raw(c, b));
                next[m + 1] = ctx.add_raw(next[m + 1], ctx.mul_raw(c, a));
            }
            powers.push(next);
        }
        CommutationKernel { ctx, a, b, powers }
    }

    /// `coeffs` is constant-first with length `d + 1`.
    fn commutes(&self, coeffs: &[u64]) -> bool {
        let ctx = &self.ctx;
        // compare from the top so most candidates are rejected early
        for m in (0..coeffs.len()).rev() {
            let mut lhs = ctx.mul_raw(self.a, coeffs[m]);
            if m == 0 {
                lhs = ctx.add_raw(lhs, self.b);
            }
            let rhs = (m..coeffs.len()).fold(0, |acc, i| {
                ctx.add_raw(acc, ctx.mul_raw(coeffs[i], self.powers[i][m]))
            });
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

const CHUNK: u128 = 1 << 12;

/// Every `g` of degree exactly `d` with `f ∘ g = g ∘ f`, sorted
/// lexicographically by `(c_d, ..., c_0)`.
pub fn brute_force_commutant(
    f: &DensePolynomial,
    d: u64,
    budget: &OracleBudget,
) -> Result<Vec<DensePolynomial>> {
    if f.degree().finite() != Some(1) {
        return Err(Error::NotLinear);
    }
    let ctx = f.context();
    let p = ctx.p();
    let total = check_budget(p, d, budget)?;
    let len = d as usize + 1;
    let kernel = CommutationKernel::new(f, d as usize);

    let chunks = total.div_ceil(CHUNK);
    let found: Vec<Vec<u64>> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|chunk| {
            let start = chunk * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut digits = candidate_at(start, p, len);
            let kernel = &kernel;
            let mut hits = Vec::new();
            for n in start..end {
                if n > start {
                    advance(&mut digits, p);
                }
                if kernel.commutes(&digits) {
                    hits.push(digits.clone());
                }
            }
            hits
        })
        .collect();
    Ok(found
        .into_iter()
        .map(|coeffs| DensePolynomial::from_raw(ctx, coeffs))
        .collect())
}

/// Candidate number `n` in lexicographic order: `c_d = 1 + n / p^d`, the rest
/// the base-p digits of `n mod p^d` with `c_{d-1}` most significant.
fn candidate_at(n: u128, p: u64, len: usize) -> Vec<u64> {
    let mut digits = vec![0u64; len];
    let mut rest = n;
    for c in digits.iter_mut().take(len - 1) {
        *c = (rest % p as u128) as u64;
        rest /= p as u128;
    }
    digits[len - 1] = 1 + rest as u64;
    digits
}

/// Steps the counter to the next candidate.
fn advance(digits: &mut [u64], p: u64) {
    for c in digits.iter_mut() {
        *c += 1;
        if *c < p {
            return;
        }
        *c = 0;
    }
    unreachable!("counter advanced past the last candidate");
}

/// Set difference between a constructed commutant and the oracle's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub constructed_len: usize,
    pub oracle_len: usize,
    /// In the oracle but not constructed.
    pub missing: Vec<DensePolynomial>,
    /// Constructed but not in the oracle.
    pub extra: Vec<DensePolynomial>,
    /// Members listed more than once on the constructed side.
    pub duplicates: usize,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.duplicates == 0
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "constructed: {}", self.constructed_len)?;
        writeln!(f, "oracle: {}", self.oracle_len)?;
        writeln!(f, "missing: {}", self.missing.len())?;
        for g in &self.missing {
            writeln!(f, "  - {g}")?;
        }
        writeln!(f, "extra: {}", self.extra.len())?;
        for g in &self.extra {
            writeln!(f, "  + {g}")?;
        }
        if self.duplicates > 0 {
            writeln!(f, "duplicates: {}", self.duplicates)?;
        }
        Ok(())
    }
}

pub fn compare_sets(
    constructed: &[DensePolynomial],
    oracle: &[DensePolynomial],
) -> ComparisonReport {
    let ours: BTreeSet<&DensePolynomial> = constructed.iter().collect();
    let theirs: BTreeSet<&DensePolynomial> = oracle.iter().collect();
    ComparisonReport {
        constructed_len: constructed.len(),
        oracle_len: oracle.len(),
        missing: theirs.difference(&ours).map(|g| (*g).clone()).collect(),
        extra: ours.difference(&theirs).map(|g| (*g).clone()).collect(),
        duplicates: constructed.len() - ours.len(),
    }
}
