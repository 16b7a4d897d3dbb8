// Closed-form sizes of C_d(f) for monic and non-monic f.

use commutant::{count, CommutantSpec, Error, FieldContext, LinearPolynomial};

fn main() {
    let f5 = FieldContext::new(5).unwrap();
    let fs = [(1, 1), (2, 0), (4, 3)];

    print!("  d");
    for (a, b) in fs {
        print!(
            " | {:>12}",
            LinearPolynomial::from_ints(f5, a, b).unwrap().to_string()
        );
    }
    println!();
    for d in 0..=12 {
        print!("{d:>3}");
        for (a, b) in fs {
            let spec =
                CommutantSpec::new(LinearPolynomial::from_ints(f5, a, b).unwrap(), d).unwrap();
            print!(" | {:>12}", count(&spec).unwrap().count);
        }
        println!();
    }

    let top = CommutantSpec::new(LinearPolynomial::from_ints(f5, 1, 1).unwrap(), 25).unwrap();
    println!("\n#C_25(x + 1) = {}", count(&top).unwrap().count);
    let beyond = CommutantSpec::new(LinearPolynomial::from_ints(f5, 1, 1).unwrap(), 30).unwrap();
    match count(&beyond) {
        Err(e @ Error::UnsupportedDegree { .. }) => println!("#C_30(x + 1): {e}"),
        other => println!("unexpected: {other:?}"),
    }
}
