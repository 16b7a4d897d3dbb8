// Binomial coefficients mod p by Lucas' theorem, checked against Pascal's
// triangle and the Chu-Vandermonde identity.

use commutant::binom::{base_p_digits, chu_vandermonde_check, LucasTable, PascalTriangle};
use commutant::FieldContext;

fn main() {
    let f5 = FieldContext::new(5).unwrap();
    let lucas = LucasTable::new(f5);

    for n in [12, 25, 137] {
        println!(
            "{n} in base 5 (least significant first): {:?}",
            base_p_digits(n, &f5).digits()
        );
    }

    // C(p, i) vanishes for 0 < i < p
    let row: Vec<u64> = (0..=5).map(|i| lucas.binom(5, i).value()).collect();
    println!("C(5, 0..=5) mod 5 = {row:?}");

    let pascal = PascalTriangle::new(200, f5).unwrap();
    let mut checked = 0;
    for m in 0..=200 {
        for n in 0..=m {
            assert_eq!(lucas.binom(m, n), pascal.get(m, n));
            checked += 1;
        }
    }
    println!("Lucas and Pascal agree on {checked} pairs with m <= 200");

    let ok =
        (0..=20).all(|n| (0..=n).all(|m| (0..=n).all(|k| chu_vandermonde_check(m, n, k, &f5))));
    println!("Chu-Vandermonde holds mod 5 for n <= 20: {ok}");
}
