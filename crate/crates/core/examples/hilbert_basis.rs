//! Hilbert bases of a few planar cones and of their duals.

use nashfan::polyhedral::{dual_cone, hilbert_basis, Cone, IntVector};

fn show(label: &str, basis: &[IntVector]) {
    let items: Vec<String> = basis.iter().map(ToString::to_string).collect();
    println!("{label}: {}", items.join(" "));
}

fn main() -> Result<(), nashfan::Error> {
    for rays in [[[0, 1], [4, -3]], [[1, 0], [0, 1]], [[0, 1], [5, -2]], [[1, 1], [1, -1]]] {
        let sigma = Cone::from_rays(2, rays.iter().map(|r| IntVector::from(*r)).collect())?;
        let name = format!("cone({},{})", sigma.rays()[0], sigma.rays()[1]);
        show(&name, &hilbert_basis(&sigma)?);
        show(&format!("  dual of {name}"), &hilbert_basis(&dual_cone(&sigma)?)?);
    }
    Ok(())
}
