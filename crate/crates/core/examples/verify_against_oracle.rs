// Construction, closed-form count and exhaustive search side by side.

use commutant::{
    brute_force_commutant, compare_sets, count, enumerate, CommutantSpec, FieldContext,
    LinearPolynomial, OracleBudget,
};

fn main() {
    let budget = OracleBudget::default();
    for (p, a, b, d) in [
        (3, 1, 1, 6),
        (3, 1, 2, 3),
        (3, 2, 2, 5),
        (5, 2, 1, 5),
        (5, 3, 4, 5),
        (3, 1, 1, 9),
    ] {
        let ctx = FieldContext::new(p).unwrap();
        let f = LinearPolynomial::from_ints(ctx, a, b).unwrap();
        let spec = CommutantSpec::new(f, d).unwrap();
        let formula = count(&spec).unwrap().count;
        let built = enumerate(&spec).unwrap();
        let searched = brute_force_commutant(&f.to_poly(), d, &budget).unwrap();
        let report = compare_sets(&built, &searched);
        println!(
            "p={p} f={f:<8} d={d}: formula {formula:>3}, constructed {:>3}, oracle {:>3} -> {}",
            built.len(),
            searched.len(),
            if report.passed() { "agree" } else { "MISMATCH" }
        );
    }
}
