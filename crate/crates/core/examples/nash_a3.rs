//! Nash fans of the `A_3` cone `cone((0,1),(4,-3))` for the first few orders.

use nashfan::nash::nash_fan;
use nashfan::polyhedral::{Cone, IntVector};

fn main() -> Result<(), nashfan::Error> {
    let sigma = Cone::from_rays(2, vec![IntVector::from([0, 1]), IntVector::from([4, -3])])?;
    for n in 0..=3 {
        let r = nash_fan(&sigma, n)?;
        let cones: Vec<String> = r
            .fan
            .closures()
            .iter()
            .map(|c| {
                let rays: Vec<String> = c.rays().iter().map(ToString::to_string).collect();
                format!("cone({})", rays.join(","))
            })
            .collect();
        println!("n={n}: {} | smooth={} nash_isomorphism={}", cones.join(" "), r.smooth, r.nash_isomorphism);
    }
    Ok(())
}
