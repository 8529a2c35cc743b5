//! Hilbert bases of pointed rational cones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Cone, IntVector};
use crate::error::{Error, Result};

/// The unique minimal generating set of the semigroup `cone ∩ Z^d`, sorted.
pub fn hilbert_basis(cone: &Cone) -> Result<Vec<IntVector>> {
    if cone.rays().is_empty() {
        return Err(Error::DegenerateCone);
    }
    if !cone.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let mut basis = match cone.ambient_dim() {
        1 => cone.rays().to_vec(),
        2 => staircase(cone),
        _ => parallelepiped(cone)?,
    };
    basis.sort();
    Ok(basis)
}

fn det2(a: &IntVector, b: &IntVector) -> BigInt {
    let (a, b) = (a.entries(), b.entries());
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Walks the compact boundary of the convex hull of the non-zero lattice
/// points, from one extreme ray to the other. Consecutive elements `b_{i-1}`,
/// `b_i` span a unimodular parallelogram; the next element is the first
/// lattice point on the line `det(b_i, x) = 1` that lies in the cone.
fn staircase(cone: &Cone) -> Vec<IntVector> {
    let (mut first, mut last) = (cone.rays()[0].clone(), cone.rays()[1].clone());
    if det2(&first, &last).is_negative() {
        std::mem::swap(&mut first, &mut last);
    }
    // x in the cone iff det(first, x) >= 0 and det(x, last) >= 0
    let inside_last = |x: &IntVector| !det2(x, &last).is_negative();

    // A lattice point with det(first, x) = 1 from the extended gcd of `first`.
    let (f0, f1) = (&first.entries()[0], &first.entries()[1]);
    let eg = f0.extended_gcd(f1);
    debug_assert!(eg.gcd.is_one());
    // f0 * x + f1 * y = 1  =>  det(first, (-y, x)) = f0 * x + f1 * y
    let seed = IntVector::new(vec![-eg.y.clone(), eg.x.clone()]);
    debug_assert!(det2(&first, &seed).is_one());
    // Move along seed + t * first until the point enters the cone: det(seed + t first, last) >= 0.
    let d_fl = det2(&first, &last);
    let d_sl = det2(&seed, &last);
    // d_sl + t * d_fl >= 0  with d_fl > 0
    let t = (-d_sl).div_ceil(&d_fl);
    let mut prev = first.clone();
    let mut cur = seed.add(&first.scale(&t));
    debug_assert!(inside_last(&cur));

    let mut basis = vec![first.clone()];
    loop {
        basis.push(cur.clone());
        if det2(&cur, &last).is_zero() {
            break;
        }
        // next = a * cur - prev with the least a keeping it inside the cone.
        let d_cl = det2(&cur, &last);
        let d_pl = det2(&prev, &last);
        // a * d_cl - d_pl >= 0, d_cl > 0
        let a = d_pl.div_ceil(&d_cl);
        let next = cur.scale(&a).sub(&prev);
        prev = cur;
        cur = next;
    }
    basis
}

/// Enumerates lattice points of the box around the zonotope spanned by the
/// rays, then keeps the elements that are not a sum of an already accepted
/// basis element and a cone point, processing candidates by increasing degree
/// under a strictly positive grading.
fn parallelepiped(cone: &Cone) -> Result<Vec<IntVector>> {
    let d = cone.ambient_dim();
    let grading = cone.dual()?.relative_interior_point()?;
    let mut lo = vec![BigInt::zero(); d];
    let mut hi = vec![BigInt::zero(); d];
    for r in cone.rays() {
        for (j, x) in r.entries().iter().enumerate() {
            if x.is_negative() {
                lo[j] += x;
            } else {
                hi[j] += x;
            }
        }
    }
    let mut candidates = Vec::new();
    let mut point = lo.clone();
    loop {
        let v = IntVector::new(point.clone());
        if !v.is_zero() && cone.contains(&v) {
            candidates.push((grading.dot(&v), v));
        }
        // odometer increment
        let mut j = 0;
        loop {
            if j == d {
                candidates.sort();
                let mut basis: Vec<IntVector> = Vec::new();
                for (_, v) in candidates {
                    if !basis.iter().any(|b| cone.contains(&v.sub(b))) {
                        basis.push(v);
                    }
                }
                return Ok(basis);
            }
            if point[j] < hi[j] {
                point[j] += 1;
                break;
            }
            point[j] = lo[j].clone();
            j += 1;
        }
    }
}
