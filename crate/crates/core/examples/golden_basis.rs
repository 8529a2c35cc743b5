//! Reduced Gröbner basis and initial ideal of `<xy + x, x^3 y^3 + x^2 y^3>`
//! in `k[x, xy, x^2 y^3]` for the weight `(1,1)`.

use std::sync::Arc;

use nashfan::gfan::cone_of;
use nashfan::polyhedral::IntVector;
use nashfan::semigroup::SemigroupPresentation;
use nashfan::subalgebra::{initial_ideal, reduced_groebner_basis, Ordered, SubalgebraOrder, SubalgebraPoly};

fn main() -> Result<(), nashfan::Error> {
    let p = Arc::new(SemigroupPresentation::from_i64s(&[&[1, 0], &[1, 1], &[2, 3]])?);
    let gens = [
        SubalgebraPoly::from_i64_terms(&p, &[(1, &[1, 1]), (1, &[1, 0])])?,
        SubalgebraPoly::from_i64_terms(&p, &[(1, &[3, 3]), (1, &[2, 3])])?,
    ];
    let w = IntVector::from([1, 1]);
    let basis = reduced_groebner_basis(&gens, &SubalgebraOrder::new(&w)?)?;
    println!("reduced basis at w = {w}:");
    for g in basis.elements() {
        println!("  {}", Ordered(g, basis.order()));
    }
    println!("initial ideal:");
    for g in initial_ideal(&basis, &w)? {
        println!("  {g}");
    }
    let cone = cone_of(&basis, &p.weight_cone()?)?;
    let rays: Vec<String> = cone.rays().iter().map(ToString::to_string).collect();
    println!("Gröbner cone: cone({})", rays.join(", "));
    Ok(())
}
