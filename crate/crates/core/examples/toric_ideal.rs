//! Toric ideals of a few semigroup presentations.

use nashfan::polyhedral::IntVector;
use nashfan::polyring::toric_ideal;

fn main() -> Result<(), nashfan::Error> {
    let cases: [&[[i64; 2]]; 3] = [&[[1, 0], [3, 4], [1, 1]], &[[1, 0], [1, 1], [1, 2], [1, 3]], &[[2, 0], [1, 1], [0, 2]]];
    for gens in cases {
        let gens: Vec<IntVector> = gens.iter().map(|g| IntVector::from(*g)).collect();
        let labels: Vec<String> = gens.iter().map(ToString::to_string).collect();
        println!("A = {}", labels.join(" "));
        for f in toric_ideal(&gens)? {
            println!("  {f}");
        }
    }
    Ok(())
}
