#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use nashfan::cli::doc::PolyDoc;
use nashfan::polyhedral::{Cone, IntVector};
use nashfan::semigroup::SemigroupPresentation;
use nashfan::subalgebra::{SubalgebraOrder, SubalgebraPoly};

pub fn v(x: &[i64]) -> IntVector {
    IntVector::from(x)
}

pub fn pres(g: &[&[i64]]) -> Arc<SemigroupPresentation> {
    Arc::new(SemigroupPresentation::from_i64s(g).unwrap())
}

pub fn poly(p: &Arc<SemigroupPresentation>, t: &[(i64, &[i64])]) -> SubalgebraPoly {
    SubalgebraPoly::from_i64_terms(p, t).unwrap()
}

/// `k[x, xy, x^2 y^3]` and `<xy + x, x^3 y^3 + x^2 y^3>`.
pub fn golden() -> (Arc<SemigroupPresentation>, Vec<SubalgebraPoly>) {
    let p = pres(&[&[1, 0], &[1, 1], &[2, 3]]);
    let gens = vec![poly(&p, &[(1, &[1, 1]), (1, &[1, 0])]), poly(&p, &[(1, &[3, 3]), (1, &[2, 3])])];
    (p, gens)
}

/// Semigroup `{(1,0), (1,1), (m,m+1)}` of the `A_m` singularity.
pub fn a_m(m: i64) -> Arc<SemigroupPresentation> {
    pres(&[&[1, 0], &[1, 1], &[m, m + 1]])
}

/// `x^{a_i} - 1` for the i-th sorted generator.
pub fn binomial(p: &Arc<SemigroupPresentation>, i: usize) -> SubalgebraPoly {
    &SubalgebraPoly::generator(p, i) - &SubalgebraPoly::one(p)
}

/// The ideal as a JSON file body in the command-line schema.
pub fn ideal_json(gens: &[SubalgebraPoly]) -> String {
    let ord = SubalgebraOrder::from_i64s(&vec![0; gens[0].presentation().ambient_dim()]);
    let polys: Vec<PolyDoc> = gens.iter().map(|g| nashfan::cli::doc::poly_doc(g, &ord)).collect();
    serde_json::json!({ "generators": polys }).to_string()
}

/// Exponent -> coefficient string, forgetting term order.
pub fn term_map(p: &PolyDoc) -> BTreeMap<Vec<i64>, String> {
    p.iter().map(|t| (t.exp.clone(), t.coeff.clone())).collect()
}

pub fn poly_map(p: &SubalgebraPoly) -> BTreeMap<Vec<i64>, String> {
    p.terms().map(|(e, c)| (e.clone(), nashfan::cli::doc::format_rational(c))).collect()
}

pub fn cone(rays: &[[i64; 2]]) -> Cone {
    Cone::from_rays(2, rays.iter().map(|r| IntVector::from(*r)).collect()).unwrap()
}

/// `|det|` of two planar vectors, computed directly.
pub fn det2(a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] * b[1] - a[1] * b[0]).abs()
}
