// The orbit sets T_k, R_k, S_k for p = 5 and their restriction to the last
// interval [(k-1)p, kp].

use commutant::binom::LucasTable;
use commutant::orbits::{build_orbits, interval_restrict, orbit_lemma_check, pair_decode};
use commutant::FieldContext;

fn main() {
    let f5 = FieldContext::new(5).unwrap();
    let lucas = LucasTable::new(f5);

    println!("k | T_k | R_k | S_k");
    for k in 0..=5 {
        let o = build_orbits(&f5, k).unwrap();
        println!("{k} | {:?} | {:?} | {:?}", o.t(), o.r(), o.s());
    }

    println!("\nk | R~_k | S~_k | lemma");
    for k in 1..=5 {
        let o = build_orbits(&f5, k).unwrap();
        let (r, s) = interval_restrict(&o).unwrap();
        println!("{k} | {r:?} | {s:?} | {}", orbit_lemma_check(&o, &lucas));
    }

    let o = build_orbits(&f5, 3).unwrap();
    let pairs: Vec<(u64, u64)> = o
        .t()
        .iter()
        .map(|&i| pair_decode(i, 3, 5).unwrap())
        .collect();
    println!("\nT_3 as (i, j) pairs: {pairs:?}");
}
