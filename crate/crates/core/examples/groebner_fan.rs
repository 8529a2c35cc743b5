//! Traverses the Gröbner fan of `<xy + x, x^3 y^3 + x^2 y^3>` in
//! `k[x, xy, x^2 y^3]` and lists each maximal cone with its basis.

use std::sync::Arc;

use nashfan::gfan::{enumerate_fan, is_trivial};
use nashfan::semigroup::SemigroupPresentation;
use nashfan::subalgebra::{Ordered, SubalgebraPoly};

fn main() -> Result<(), nashfan::Error> {
    let p = Arc::new(SemigroupPresentation::from_i64s(&[&[1, 0], &[1, 1], &[2, 3]])?);
    let gens = [
        SubalgebraPoly::from_i64_terms(&p, &[(1, &[1, 1]), (1, &[1, 0])])?,
        SubalgebraPoly::from_i64_terms(&p, &[(1, &[3, 3]), (1, &[2, 3])])?,
    ];
    let fan = enumerate_fan(&gens, &p.weight_cone()?)?;
    for (i, c) in fan.maximal_cones.iter().enumerate() {
        let rays: Vec<String> = c.closure.rays().iter().map(ToString::to_string).collect();
        println!("cone {}: rays {}  witness {}", i + 1, rays.join(" "), c.witness);
        for g in c.basis.elements() {
            println!("    {}", Ordered(g, c.basis.order()));
        }
    }
    println!("trivial: {}", is_trivial(&fan));
    Ok(())
}
