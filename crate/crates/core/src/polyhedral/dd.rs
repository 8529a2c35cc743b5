//! Double description method: converts a system of homogeneous inequalities
//! into generators (a lineality basis plus extreme rays) in exact arithmetic.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::lattice::rank;
use super::IntVector;

/// Generators of the polyhedral cone `{x : h.x >= 0 for all h}`.
#[derive(Debug, Clone)]
pub struct Generators {
    /// Basis of the lineality space.
    pub lineality: Vec<IntVector>,
    /// Extreme rays modulo the lineality space, primitive and sorted.
    pub rays: Vec<IntVector>,
}

/// Runs the double description method on the inequalities `h.x >= 0`.
///
/// Starts from the whole space (lineality `e_1..e_d`, no rays) and adds one
/// constraint at a time. While a constraint is non-zero on the current
/// lineality space it consumes one lineality direction; afterwards the
/// classical positive/negative ray combination step applies, followed by an
/// algebraic extremality test (rank of the tight constraints).
pub fn double_description(dim: usize, constraints: &[IntVector]) -> Generators {
    let mut lineality: Vec<IntVector> = (0..dim).map(|i| IntVector::unit(dim, i)).collect();
    let mut rays: Vec<IntVector> = Vec::new();
    let mut processed: Vec<&IntVector> = Vec::new();

    for h in constraints {
        debug_assert_eq!(h.dim(), dim);
        if h.is_zero() {
            continue;
        }
        if let Some(idx) = lineality.iter().position(|l| !h.dot(l).is_zero()) {
            let mut l0 = lineality.remove(idx);
            let mut a = h.dot(&l0);
            if a.is_negative() {
                l0 = l0.neg();
                a = -a;
            }
            for l in lineality.iter_mut() {
                let b = h.dot(l);
                if !b.is_zero() {
                    *l = IntVector::combine(&a, l, &(-b), &l0).primitive().expect("independent lineality");
                }
            }
            rays = rays
                .iter()
                .filter_map(|r| {
                    let b = h.dot(r);
                    if b.is_zero() {
                        Some(r.clone())
                    } else {
                        IntVector::combine(&a, r, &(-b), &l0).primitive()
                    }
                })
                .collect();
            rays.push(l0.primitive().expect("non-zero lineality vector"));
            processed.push(h);
            normalize(&mut rays);
            continue;
        }

        processed.push(h);
        let values: Vec<BigInt> = rays.iter().map(|r| h.dot(r)).collect();
        let mut next: Vec<IntVector> = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if v.is_positive() {
                pos.push((r, v));
                next.push(r.clone());
            } else if v.is_zero() {
                next.push(r.clone());
            } else {
                neg.push((r, v));
            }
        }
        let target_rank = dim - lineality.len() - 1;
        for (p, hp) in &pos {
            for (n, hn) in &neg {
                // hp > 0 > hn, so this is a positive combination lying on h.x = 0.
                let Some(c) = IntVector::combine(hp, n, &(-(*hn).clone()), p).primitive() else {
                    continue;
                };
                if tight_rank(&processed, &c) == target_rank {
                    next.push(c);
                }
            }
        }
        next.retain(|r| tight_rank(&processed, r) == target_rank);
        normalize(&mut next);
        rays = next;
    }

    Generators { lineality, rays }
}

fn tight_rank(constraints: &[&IntVector], r: &IntVector) -> usize {
    let tight: Vec<&IntVector> = constraints.iter().copied().filter(|c| c.dot(r).is_zero()).collect();
    if tight.is_empty() {
        0
    } else {
        rank(&tight)
    }
}

fn normalize(rays: &mut Vec<IntVector>) {
    rays.sort();
    rays.dedup();
}
