//! Compares smoothness with triviality of the Nash fan over the planar cones
//! `cone((0,1),(q,-p))` with `1 <= p < q <= 6` coprime.

use std::time::Instant;

use nashfan::nash::{nobile_check, planar_cone};
use num_integer::Integer;

fn main() -> Result<(), nashfan::Error> {
    for n in 1..=2 {
        for q in 2..=6i64 {
            for p in (1..q).filter(|p| p.gcd(&q) == 1) {
                let start = Instant::now();
                let report = nobile_check(&planar_cone(p, q)?, n)?;
                println!(
                    "n={n} cone((0,1),({q},-{p})): {} consistent={} [{:.2?}]",
                    report.summary(),
                    report.consistent,
                    start.elapsed()
                );
            }
        }
    }
    Ok(())
}
