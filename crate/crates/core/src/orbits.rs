//! Index sets organising the commutant of `x + 1` in degree `kp`.
//!
//! `T_k` collects the exponents whose coefficients are tied together by a
//! single free choice, `R_k = T_0 ∪ ... ∪ T_k` are the exponents a commutant
//! may use, and `S_k = {0..kp} \ R_k` are the exponents that are forced to
//! vanish.

use crate::binom::LucasTable;
use crate::error::{Error, Result};
use crate::ff::FieldContext;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTriple {
    p: u64,
    k: u64,
    t: Vec<u64>,
    r: Vec<u64>,
    s: Vec<u64>,
}

impl OrbitTriple {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `T_k`, sorted.
    pub fn t(&self) -> &[u64] {
        &self.t
    }

    /// `R_k`, sorted.
    pub fn r(&self) -> &[u64] {
        &self.r
    }

    /// `S_k`, sorted.
    pub fn s(&self) -> &[u64] {
        &self.s
    }

    pub fn in_r(&self, index: u64) -> bool {
        self.r.binary_search(&index).is_ok()
    }

    pub fn in_s(&self, index: u64) -> bool {
        self.s.binary_search(&index).is_ok()
    }
}

/// `T_k` grown inductively: `T_0 = {0}`, `T_k = (T_{k-1} + 1) ∪ {kp}` for
/// `0 < k < p`, and `T_p = {p²}`.
fn t_inductive(p: u64, k: u64) -> Vec<u64> {
    if k == p {
        return vec![p * p];
    }
    let mut t = vec![0];
    for step in 1..=k {
        let mut next: Vec<u64> = t.iter().map(|i| i + 1).collect();
        next.push(step * p);
        next.sort_unstable();
        next.dedup();
        t = next;
    }
    t
}

/// Closed form `{ip + j : i + j = k}` for `0 < k < p`.
pub fn t_closed_form(p: u64, k: u64) -> Vec<u64> {
    let mut t: Vec<u64> = (0..=k).map(|i| i * p + (k - i)).collect();
    t.sort_unstable();
    t
}

pub fn build_orbits(ctx: &FieldContext, k: u64) -> Result<OrbitTriple> {
    let p = ctx.p();
    if k > p {
        return Err(Error::OrbitOutOfRange { k, p });
    }
    let t = t_inductive(p, k);
    debug_assert!(k == 0 || k == p || t == t_closed_form(p, k));

    let mut r: Vec<u64> = (0..=k).flat_map(|i| t_inductive(p, i)).collect();
    r.sort_unstable();
    r.dedup();
    let s = (0..=k * p)
        .filter(|i| r.binary_search(i).is_err())
        .collect();
    Ok(OrbitTriple { p, k, t, r, s })
}

/// `(R ∩ [(k-1)p, kp], S ∩ [(k-1)p, kp])`.
pub fn interval_restrict(o: &OrbitTriple) -> Result<(Vec<u64>, Vec<u64>)> {
    if o.k == 0 {
        return Err(Error::EmptyInterval);
    }
    let lo = (o.k - 1) * o.p;
    let hi = o.k * o.p;
    let window =
        |v: &[u64]| -> Vec<u64> { v.iter().copied().filter(|&i| lo <= i && i <= hi).collect() };
    Ok((window(&o.r), window(&o.s)))
}

/// `(i, j) -> ip + j`.
pub fn pair_encode(i: u64, j: u64, p: u64) -> u64 {
    debug_assert!(j < p);
    i * p + j
}

/// Inverse of [`pair_encode`] on `T_k`: the unique `(i, j)` with `i + j = k`
/// and `ip + j = index`.
pub fn pair_decode(index: u64, k: u64, p: u64) -> Result<(u64, u64)> {
    let not_in = Error::NotInOrbit { index, k, p };
    if k >= p {
        return Err(not_in);
    }
    let (i, j) = (index / p, index % p);
    if i + j == k {
        Ok((i, j))
    } else {
        Err(not_in)
    }
}

/// True iff `C(r, s-1) ≡ 0 mod p` for every `r ∈ R_k`, `s ∈ S_k` with
/// `r > s - 1`.
///
/// Pairs with `r < s - 1` vanish trivially. Pairs with `r = s - 1` give
/// `C(r, r) = 1` and are excluded; they occur whenever `s - 1 ∈ R_k` (for
/// example `r = 2, s = 3` at `p = 5, k = 2`). Those pairs are listed by
/// [`orbit_lemma_violations`].
pub fn orbit_lemma_check(o: &OrbitTriple, lucas: &LucasTable) -> bool {
    debug_assert_eq!(lucas.context().p(), o.p);
    // 0 ∈ R_k always, so every s here is at least 1
    o.s.iter().all(|&s| {
        o.r.iter()
            .filter(|&&r| r > s - 1)
            .all(|&r| lucas.binom(r, s - 1).is_zero())
    })
}

/// Every pair `(r, s) ∈ R_k × S_k` with `C(r, s-1) ≢ 0 mod p`, with no
/// restriction on `r`.
pub fn orbit_lemma_violations(o: &OrbitTriple, lucas: &LucasTable) -> Vec<(u64, u64)> {
    o.s.iter()
        .flat_map(|&s| o.r.iter().map(move |&r| (r, s)))
        .filter(|&(r, s)| !lucas.binom(r, s - 1).is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64) -> FieldContext {
        FieldContext::new(p).unwrap()
    }

    #[test]
    fn build_examples_p5() {
        let o = build_orbits(&ctx(5), 3).unwrap();
        assert_eq!(o.t(), &[3, 7, 11, 15]);
        assert_eq!(o.s(), &[4, 8, 9, 12, 13, 14]);

        let o = build_orbits(&ctx(5), 0).unwrap();
        assert_eq!(o.t(), &[0]);
        assert_eq!(o.r(), &[0]);
        assert!(o.s().is_empty());

        let o = build_orbits(&ctx(5), 5).unwrap();
        assert_eq!(o.t(), &[25]);
        // complement of R_5 in 0..=25
        assert_eq!(o.s(), &[9, 13, 14, 17, 18, 19, 21, 22, 23, 24]);
    }

    #[test]
    fn k_above_p_rejected() {
        assert_eq!(
            build_orbits(&ctx(3), 4),
            Err(Error::OrbitOutOfRange { k: 4, p: 3 })
        );
    }

    #[test]
    fn inductive_matches_closed_form() {
        for p in [3, 5, 7, 11] {
            for k in 1..p {
                let t = t_inductive(p, k);
                assert_eq!(t, t_closed_form(p, k));
                assert_eq!(t.len() as u64, k + 1);
            }
        }
    }

    #[test]
    fn triple_invariants() {
        for p in [3, 5, 7, 11] {
            for k in 0..=p {
                let o = build_orbits(&ctx(p), k).unwrap();
                let mut all: Vec<u64> = o.r().iter().chain(o.s()).copied().collect();
                all.sort_unstable();
                assert_eq!(all, (0..=k * p).collect::<Vec<_>>());
                assert!(o.r().iter().all(|i| !o.in_s(*i)));
                for i in 0..=k {
                    assert!(t_inductive(p, i).iter().all(|x| o.in_r(*x)));
                }
            }
        }
    }

    #[test]
    fn orbits_are_disjoint_and_jp_is_unique() {
        for p in [3, 5, 7] {
            let ts: Vec<Vec<u64>> = (0..=p).map(|k| t_inductive(p, k)).collect();
            for a in 0..=p as usize {
                for b in a + 1..=p as usize {
                    assert!(ts[a].iter().all(|x| !ts[b].contains(x)), "T_{a}, T_{b}");
                }
            }
            for j in 1..p {
                let owners: Vec<usize> = (0..=p as usize)
                    .filter(|&k| ts[k].contains(&(j * p)))
                    .collect();
                assert_eq!(owners, vec![j as usize]);
            }
        }
    }

    #[test]
    fn interval_examples() {
        let (r, _) = interval_restrict(&build_orbits(&ctx(5), 2).unwrap()).unwrap();
        assert_eq!(r, vec![5, 6, 10]);
        let (r, s) = interval_restrict(&build_orbits(&ctx(5), 5).unwrap()).unwrap();
        assert_eq!(r, vec![20, 25]);
        assert_eq!(s, vec![21, 22, 23, 24]);
        let (r, _) = interval_restrict(&build_orbits(&ctx(3), 1).unwrap()).unwrap();
        assert_eq!(r, vec![0, 1, 3]);
        assert_eq!(
            interval_restrict(&build_orbits(&ctx(3), 0).unwrap()),
            Err(Error::EmptyInterval)
        );
    }

    #[test]
    fn interval_case_formulas() {
        for p in [3, 5, 7, 11] {
            for k in 1..=p {
                let (r, s) = interval_restrict(&build_orbits(&ctx(p), k).unwrap()).unwrap();
                let base = (k - 1) * p;
                if k % p != 0 {
                    assert_eq!(r, vec![base, base + 1, k * p]);
                    assert_eq!(s, (2..p).map(|i| base + i).collect::<Vec<_>>());
                    assert_eq!(s.len() as u64, p - 2);
                } else {
                    assert_eq!(r, vec![base, k * p]);
                    assert_eq!(s, (1..p).map(|i| base + i).collect::<Vec<_>>());
                    assert_eq!(s.len() as u64, p - 1);
                }
            }
        }
    }

    #[test]
    fn pair_examples() {
        assert_eq!(pair_encode(1, 1, 5), 6);
        assert_eq!(pair_decode(15, 3, 5).unwrap(), (3, 0));
        assert_eq!(pair_decode(11, 3, 5).unwrap(), (2, 1));
        assert_eq!(
            pair_decode(12, 3, 5),
            Err(Error::NotInOrbit {
                index: 12,
                k: 3,
                p: 5
            })
        );
        assert!(pair_decode(25, 5, 5).is_err());
    }

    #[test]
    fn pair_round_trip_on_every_orbit() {
        for p in [3, 5, 7] {
            for k in 1..p {
                for &index in &t_closed_form(p, k) {
                    let (i, j) = pair_decode(index, k, p).unwrap();
                    assert_eq!(pair_encode(i, j, p), index);
                }
            }
        }
    }

    #[test]
    fn lemma_examples() {
        let c5 = ctx(5);
        let lucas = LucasTable::new(c5);
        assert!(orbit_lemma_check(&build_orbits(&c5, 2).unwrap(), &lucas));
        assert!(orbit_lemma_check(&build_orbits(&c5, 0).unwrap(), &lucas));
        let c3 = ctx(3);
        let o = build_orbits(&c3, 1).unwrap();
        assert_eq!(o.r(), &[0, 1, 3]);
        assert_eq!(o.s(), &[2]);
        assert!(LucasTable::new(c3).binom(3, 1).is_zero());
        assert!(orbit_lemma_check(&o, &LucasTable::new(c3)));
    }

    #[test]
    fn lemma_holds_above_the_diagonal_for_all_k() {
        for p in [3, 5, 7, 11] {
            let c = ctx(p);
            let lucas = LucasTable::new(c);
            for k in 0..=p {
                let o = build_orbits(&c, k).unwrap();
                assert!(orbit_lemma_check(&o, &lucas), "p={p} k={k}");
                for (r, s) in orbit_lemma_violations(&o, &lucas) {
                    assert_eq!(r + 1, s, "p={p} k={k}");
                }
            }
        }
    }

    #[test]
    fn diagonal_pairs_are_reported() {
        let c = ctx(5);
        let o = build_orbits(&c, 2).unwrap();
        assert_eq!(
            orbit_lemma_violations(&o, &LucasTable::new(c)),
            vec![(2, 3), (6, 7)]
        );
    }
}
