// Reducing a linear f to x + 1 or ax by conjugation, and carrying the
// commutant back.

use commutant::similarity::transport_commutant;
use commutant::{canonicalize, commutes, enumerate, CommutantSpec, FieldContext, LinearPolynomial};

fn main() {
    let f5 = FieldContext::new(5).unwrap();
    for (a, b) in [(2, 1), (3, 4), (1, 3), (1, 4), (4, 0)] {
        let f = LinearPolynomial::from_ints(f5, a, b).unwrap();
        let form = canonicalize(&f).unwrap();
        println!(
            "f = {:<8} ~ {:<6} via λ = {:<8} ({:?}, {:?})",
            f.to_string(),
            form.canonical().to_string(),
            form.lambda().to_string(),
            form.kind(),
            form.direction()
        );
    }

    // C_5(2x) carried back to C_5(2x + 1)
    let f = LinearPolynomial::from_ints(f5, 2, 1).unwrap();
    let form = canonicalize(&f).unwrap();
    let canonical_members = enumerate(&CommutantSpec::new(form.canonical(), 5).unwrap()).unwrap();
    let moved = transport_commutant(&canonical_members, &form.lambda()).unwrap();
    let all_commute = moved.iter().all(|g| commutes(&f.to_poly(), g));
    println!(
        "\n#C_5({}) = {}, all commute with {f}: {all_commute}",
        form.canonical(),
        moved.len()
    );
    println!(
        "first few: {}",
        moved
            .iter()
            .take(3)
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    );
}
