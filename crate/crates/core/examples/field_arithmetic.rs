// Residue arithmetic, inverses and multiplicative orders in F_p.

use commutant::FieldContext;

fn main() {
    let f7 = FieldContext::new(7).expect("7 is prime");
    let (x, y) = (f7.elem(3), f7.elem(5));
    println!(
        "in {f7}: {x} + {y} = {}, {x} * {y} = {}, -{x} = {}",
        x + y,
        x * y,
        -x
    );

    println!("\n a | a^-1 | ord(a)");
    for a in f7.units() {
        let inv = a.inv().expect("nonzero");
        let order = a.mult_order().expect("nonzero");
        println!("{a:>2} | {inv:>4} | {order:>6}");
    }

    for p in [2, 9, 11] {
        match FieldContext::new(p) {
            Ok(ctx) => println!("\n{p}: ok ({ctx})"),
            Err(e) => println!("\n{p}: rejected ({e})"),
        }
    }
}
