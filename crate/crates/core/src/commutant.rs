//! Counting and constructing `C_d(f)`, the degree-`d` polynomials that
//! commute with a linear polynomial `f` under composition.
//!
//! Every linear `f` other than `x` is conjugate to either `ax` (`a ≠ 1`) or
//! `x + 1`, so the work happens for those two shapes and the result is carried
//! back through the conjugator.
//!
//! * `ax`: `g` commutes iff `a c_i = a^i c_i` for every `i`, so the support of
//!   `g` sits on exponents `i ≡ 1 (mod ord(a))`.
//! * `x + 1`: in degree `kp` with `1 <= k <= p`, each orbit `T_j` carries one
//!   free parameter `t_j` and contributes the generator
//!   `x + t_j Σ_i (-1)^i C(j, i) x^{(j-i)p + i}` (or `t x^{p²} + (1-t)x` for
//!   `j = p`). Members are the ⊕-sums of generators plus a free constant.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::binom::LucasTable;
use crate::error::{Error, Result};
use crate::ff::{FieldContext, FpElement};
use crate::orbits::{pair_encode, t_closed_form};
use crate::poly::DensePolynomial;
use crate::similarity::{canonicalize, transport_commutant, LinearPolynomial};

/// A request for `C_d(f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutantSpec {
    f: LinearPolynomial,
    d: u64,
}

impl CommutantSpec {
    pub fn new(f: LinearPolynomial, d: u64) -> Result<Self> {
        if f.is_identity() {
            return Err(Error::IdentityPolynomial);
        }
        Ok(CommutantSpec { f, d })
    }

    pub fn f(&self) -> LinearPolynomial {
        self.f
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn context(&self) -> FieldContext {
        self.f.context()
    }

    /// Monic degrees divisible by p stop at `p²`.
    fn check_scope(&self) -> Result<()> {
        let p = self.context().p();
        if self.f.is_monic() && self.d.is_multiple_of(p) && self.d > p * p {
            return Err(Error::UnsupportedDegree {
                d: self.d,
                limit: p * p,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountBranch {
    Monic,
    NonMonic,
    Zero,
}

impl CountBranch {
    pub fn as_str(&self) -> &'static str {
        match self {
            CountBranch::Monic => "monic",
            CountBranch::NonMonic => "nonmonic",
            CountBranch::Zero => "zero",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantCount {
    pub count: BigUint,
    pub branch: CountBranch,
}

impl CommutantCount {
    fn zero() -> Self {
        CommutantCount {
            count: BigUint::from(0u32),
            branch: CountBranch::Zero,
        }
    }
}

/// `#C_d(f)` in closed form.
///
/// * `a ≠ 1`, `r = ord(a)`: `(p-1) p^((d-1)/r)` when `r | d-1`, else 0. At
///   `d = 0` the only candidate is the fixed point `b / (1 - a)`, counted when
///   it is nonzero.
/// * `a = 1`: `(p-1) p^k` for `d = kp`, `1 <= k <= p`; `p` for `d = 1` (the
///   translations `x + c`); 0 for `d = 0` and whenever `p ∤ d`.
pub fn count(spec: &CommutantSpec) -> Result<CommutantCount> {
    spec.check_scope()?;
    let p = spec.context().p();
    let d = spec.d;
    let f = spec.f;
    let units = BigUint::from(p - 1);
    let p_big = BigUint::from(p);

    if f.is_monic() {
        return Ok(match d {
            0 => CommutantCount::zero(),
            1 => CommutantCount {
                count: p_big,
                branch: CountBranch::Monic,
            },
            _ if !d.is_multiple_of(p) => CommutantCount::zero(),
            _ => CommutantCount {
                count: units * p_big.pow((d / p) as u32),
                branch: CountBranch::Monic,
            },
        });
    }

    if d == 0 {
        return Ok(match fixed_point_constant(&f) {
            Some(_) => CommutantCount {
                count: BigUint::from(1u32),
                branch: CountBranch::NonMonic,
            },
            None => CommutantCount::zero(),
        });
    }
    let r = f.a().mult_order()?;
    if !(d - 1).is_multiple_of(r) {
        return Ok(CommutantCount::zero());
    }
    let exponent = u32::try_from((d - 1) / r).expect("exponent fits in u32");
    Ok(CommutantCount {
        count: units * p_big.pow(exponent),
        branch: CountBranch::NonMonic,
    })
}

/// Free parameters of a member of `C_{kp}(x + 1)`: one value per orbit
/// `T_1, ..., T_k` and the constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicParameterVector {
    t: Vec<FpElement>,
    c0: FpElement,
}

impl MonicParameterVector {
    /// `t[j-1]` drives orbit `T_j`; the last entry must be nonzero.
    pub fn new(t: Vec<FpElement>, c0: FpElement) -> Result<Self> {
        let ctx = c0.context();
        let k = t.len() as u64;
        if k == 0 || k > ctx.p() {
            return Err(Error::OrbitOutOfRange { k, p: ctx.p() });
        }
        for v in &t {
            ctx.check(&v.context())?;
        }
        if t[t.len() - 1].is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(MonicParameterVector { t, c0 })
    }

    pub fn k(&self) -> u64 {
        self.t.len() as u64
    }

    pub fn t(&self) -> &[FpElement] {
        &self.t
    }

    pub fn c0(&self) -> FpElement {
        self.c0
    }

    /// `x ⊕ G_1(t_1) ⊕ ... ⊕ G_k(t_k) + c0`.
    pub fn to_polynomial(&self) -> Result<DensePolynomial> {
        let ctx = self.c0.context();
        let mut g = DensePolynomial::x(ctx);
        for (j, &t) in self.t.iter().enumerate() {
            g = g.oplus(&orbit_generator(&ctx, j as u64 + 1, t)?)?;
        }
        g.checked_add(&DensePolynomial::constant(self.c0))
    }

    /// Reads the parameters back: `t_j` is the coefficient at `x^{jp}` (at
    /// `x^{p²}` for `j = p`) and `c0` the constant term.
    pub fn from_polynomial(g: &DensePolynomial, k: u64) -> Result<Self> {
        let p = g.context().p();
        let t = (1..=k)
            .map(|j| {
                let index = if j == p { p * p } else { j * p };
                g.coeff(index as usize)
            })
            .collect();
        Self::new(t, g.coeff(0))
    }
}

fn check_chain_index(ctx: &FieldContext, j: u64) -> Result<()> {
    if j == 0 || j >= ctx.p() {
        return Err(Error::ChainOutOfRange { j, p: ctx.p() });
    }
    Ok(())
}

/// Coefficients on `T_j`, keyed by the pair `(i, j')` with `i + j' = j`,
/// solved from `c_(j,0) = t` down the chain
/// `(i'+1) c_(i'+1, j') + (j'+1) c_(i', j'+1) = 0`.
pub fn dependency_chain(
    ctx: &FieldContext,
    j: u64,
    t: FpElement,
) -> Result<BTreeMap<(u64, u64), FpElement>> {
    check_chain_index(ctx, j)?;
    ctx.check(&t.context())?;
    let mut chain = BTreeMap::new();
    chain.insert((j, 0), t);
    let mut prev = t;
    for step in 0..j {
        let (hi, lo) = (j - 1 - step, step);
        // j' + 1 <= j < p, so the division is safe
        let next = -(ctx.elem(hi + 1) * prev) * ctx.elem(lo + 1).inv()?;
        chain.insert((hi, lo + 1), next);
        prev = next;
    }
    Ok(chain)
}

/// `c_(j-i, i) = (-1)^i C(j, i) t`.
pub fn chain_closed_form(
    ctx: &FieldContext,
    j: u64,
    t: FpElement,
) -> Result<BTreeMap<(u64, u64), FpElement>> {
    check_chain_index(ctx, j)?;
    ctx.check(&t.context())?;
    let lucas = LucasTable::new(*ctx);
    Ok((0..=j)
        .map(|i| {
            let c = lucas.binom(j, i) * t;
            let c = if i % 2 == 1 { -c } else { c };
            ((j - i, i), c)
        })
        .collect())
}

/// The member of `C_{jp}(x + 1)` supported on `T_j ∪ {1}` whose top
/// coefficient is `t`. For `j = p` this is `t x^{p²} + (1-t) x`.
pub fn orbit_generator(ctx: &FieldContext, j: u64, t: FpElement) -> Result<DensePolynomial> {
    let p = ctx.p();
    if j == 0 || j > p {
        return Err(Error::OrbitOutOfRange { k: j, p });
    }
    ctx.check(&t.context())?;
    let mut coeffs = vec![0u64; (j * p) as usize + 1];
    if j == p {
        coeffs[(p * p) as usize] = t.value();
        coeffs[1] = (ctx.one() - t).value();
    } else {
        coeffs[1] = 1;
        for ((i, jj), c) in chain_closed_form(ctx, j, t)? {
            let index = pair_encode(i, jj, p) as usize;
            coeffs[index] = ctx.add_raw(coeffs[index], c.value());
        }
    }
    Ok(DensePolynomial::from_raw(*ctx, coeffs))
}

/// All of `C_{kp}(x + 1)`, ordered lexicographically by
/// `(t_k, t_{k-1}, ..., t_1, c0)`. Empty for `k = 0`.
pub fn enumerate_monic(ctx: &FieldContext, k: u64) -> Result<Vec<DensePolynomial>> {
    let p = ctx.p();
    if k > p {
        return Err(Error::UnsupportedDegree {
            d: k * p,
            limit: p * p,
        });
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let len = (k * p) as usize + 1;

    // deltas[j-1][t] = G_j(t) - x as a dense raw vector of length kp + 1
    let deltas: Vec<Vec<Vec<u64>>> = (1..=k)
        .map(|j| {
            ctx.elements()
                .map(|t| {
                    let g = orbit_generator(ctx, j, t)?.checked_sub(&DensePolynomial::x(*ctx))?;
                    let mut v = g.coeffs().to_vec();
                    v.resize(len, 0);
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let lower = (k - 1) as usize;
    let per_top = (p as usize).pow(lower as u32 + 1);
    let members = (1..p)
        .into_par_iter()
        .flat_map_iter(|top| {
            let deltas = &deltas;
            (0..per_top).map(move |n| {
                // n encodes (t_{k-1}, ..., t_1, c0) most significant first
                let mut coeffs = deltas[lower][top as usize].clone();
                coeffs[1] = ctx.add_raw(coeffs[1], 1);
                let mut rest = n;
                let c0 = (rest % p as usize) as u64;
                rest /= p as usize;
                coeffs[0] = ctx.add_raw(coeffs[0], c0);
                for delta in deltas.iter().take(lower) {
                    let t = rest % p as usize;
                    rest /= p as usize;
                    for (c, &dv) in coeffs.iter_mut().zip(&delta[t]) {
                        *c = ctx.add_raw(*c, dv);
                    }
                }
                DensePolynomial::from_raw(*ctx, coeffs)
            })
        })
        .collect();
    Ok(members)
}

/// `C_1(x + 1) = {x + c}`.
fn enumerate_translations(ctx: &FieldContext) -> Vec<DensePolynomial> {
    ctx.elements()
        .map(|c| DensePolynomial::from_raw(*ctx, vec![c.value(), 1]))
        .collect()
}

/// All of `C_d(ax)`, ordered lexicographically by `(c_d, ..., c_1)`.
pub fn enumerate_nonmonic(a: FpElement, d: u64) -> Result<Vec<DensePolynomial>> {
    if a.is_zero() || a.is_one() {
        return Err(Error::NotAScaling(a.value()));
    }
    let ctx = a.context();
    let p = ctx.p() as usize;
    let r = a.mult_order()?;
    if d == 0 || !(d - 1).is_multiple_of(r) {
        return Ok(Vec::new());
    }
    // free exponents below d, highest first
    let free: Vec<usize> = (0..(d - 1) / r)
        .map(|m| (d - (m + 1) * r) as usize)
        .collect();
    let per_top = p.pow(free.len() as u32);
    let mut out = Vec::with_capacity((p - 1) * per_top);
    for top in 1..p as u64 {
        for n in 0..per_top {
            let mut coeffs = vec![0u64; d as usize + 1];
            coeffs[d as usize] = top;
            let mut rest = n;
            for &i in free.iter().rev() {
                coeffs[i] = (rest % p) as u64;
                rest /= p;
            }
            out.push(DensePolynomial::from_raw(ctx, coeffs));
        }
    }
    Ok(out)
}

/// All of `C_d(f)`: enumerate the canonical representative, then conjugate
/// back. The order follows the parameter order of the canonical case.
pub fn enumerate(spec: &CommutantSpec) -> Result<Vec<DensePolynomial>> {
    spec.check_scope()?;
    let ctx = spec.context();
    let p = ctx.p();
    let d = spec.d;
    if d == 0 {
        return Ok(fixed_point_constant(&spec.f)
            .map(DensePolynomial::constant)
            .into_iter()
            .collect());
    }
    let form = canonicalize(&spec.f)?;
    let canonical_members = if spec.f.is_monic() {
        match d {
            0 => Vec::new(),
            1 => enumerate_translations(&ctx),
            _ if !d.is_multiple_of(p) => Vec::new(),
            _ => enumerate_monic(&ctx, d / p)?,
        }
    } else {
        enumerate_nonmonic(spec.f.a(), d)?
    };
    transport_commutant(&canonical_members, &form.lambda())
}

/// The nonzero constant `c` with `f(c) = c`, if any. Conjugation does not
/// preserve degree 0, so constants are handled here rather than transported.
fn fixed_point_constant(f: &LinearPolynomial) -> Option<FpElement> {
    let one = f.context().one();
    let c = f.b() * (one - f.a()).inv().ok()?;
    (!c.is_zero()).then_some(c)
}

/// Exponents `T_j` as returned by the closed form, exposed for callers that
/// want to inspect a generator's support.
pub fn generator_support(p: u64, j: u64) -> Vec<u64> {
    if j == p {
        vec![1, p * p]
    } else {
        let mut s = t_closed_form(p, j);
        s.push(1);
        s.sort_unstable();
        s.dedup();
        s
    }
}
