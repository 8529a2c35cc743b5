//! Writes the Nash fan of `cone((0,1),(4,-3))` at order 1 as an SVG picture.
//!
//! Usage: `cargo run --example fan_svg [OUTPUT]` (default `nash_a3.svg`).

use nashfan::cli::emit_svg;
use nashfan::nash::nash_fan;
use nashfan::polyhedral::{Cone, IntVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "nash_a3.svg".into());
    let sigma = Cone::from_rays(2, vec![IntVector::from([0, 1]), IntVector::from([4, -3])])?;
    let r = nash_fan(&sigma, 1)?;
    let cones: Vec<Cone> = r.fan.closures().into_iter().cloned().collect();
    std::fs::write(&path, emit_svg(&sigma, &cones)?)?;
    println!("wrote {} cones to {path}", cones.len());
    Ok(())
}
