// C_d(ax): support on exponents congruent to 1 modulo ord(a).

use commutant::commutant::enumerate_nonmonic;
use commutant::FieldContext;

fn main() {
    let f7 = FieldContext::new(7).unwrap();
    for a in 2..7 {
        let a = f7.elem(a);
        let r = a.mult_order().unwrap();
        let sizes: Vec<usize> = (1..=7)
            .map(|d| enumerate_nonmonic(a, d).unwrap().len())
            .collect();
        println!("a = {a}, ord = {r}: #C_d for d = 1..=7 -> {sizes:?}");
    }

    let members = enumerate_nonmonic(f7.elem(6), 5).unwrap();
    println!("\nC_5(6x) over F_7 has {} members, e.g.", members.len());
    for g in members.iter().step_by(57).take(6) {
        println!("  {g}");
    }
}
