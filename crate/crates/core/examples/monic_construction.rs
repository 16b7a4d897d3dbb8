// Building C_6(x + 1) over F_3 from orbit generators.

use commutant::commutant::{
    dependency_chain, enumerate_monic, orbit_generator, MonicParameterVector,
};
use commutant::FieldContext;

fn main() {
    let f3 = FieldContext::new(3).unwrap();

    println!("generators G_j(t):");
    for j in 1..=3 {
        for t in f3.elements() {
            println!("  G_{j}({t}) = {}", orbit_generator(&f3, j, t).unwrap());
        }
    }

    let chain = dependency_chain(&f3, 2, f3.one()).unwrap();
    println!("\nchain on T_2 with t = 1: {chain:?}");

    // x ⊕ G_1(2) ⊕ G_2(1) + 2
    let v = MonicParameterVector::new(vec![f3.elem(2), f3.elem(1)], f3.elem(2)).unwrap();
    println!(
        "\nparameters t = (2, 1), c0 = 2 -> {}",
        v.to_polynomial().unwrap()
    );

    let members = enumerate_monic(&f3, 2).unwrap();
    println!("\nC_6(x + 1) has {} members:", members.len());
    for g in &members {
        println!("  {g}");
    }
}
