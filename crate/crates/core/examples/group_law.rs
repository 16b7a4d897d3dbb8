// The ⊕ law g ⊕ h = g + h - x on polynomials commuting with x + 1.

use commutant::commutant::enumerate_monic;
use commutant::{commutes, DensePolynomial, FieldContext};

fn main() {
    let f3 = FieldContext::new(3).unwrap();
    let f = DensePolynomial::from_coeffs(f3, &[1, 1]);
    let members = enumerate_monic(&f3, 1).unwrap();

    let mut closed = 0;
    for g in &members {
        for h in &members {
            let s = g.oplus(h).unwrap();
            assert!(commutes(&f, &s));
            closed += 1;
        }
    }
    println!("{closed} sums g ⊕ h of members of C_3(x + 1) all commute with x + 1");

    let g = &members[4];
    let inv = g.oplus_inverse();
    println!(
        "g = {g}, inverse 2x - g = {inv}, g ⊕ inverse = {}",
        g.oplus(&inv).unwrap()
    );

    for c in f3.elements() {
        let shifted = g.checked_add(&DensePolynomial::constant(c)).unwrap();
        println!("g + {c} = {shifted} commutes: {}", commutes(&f, &shifted));
    }
}
