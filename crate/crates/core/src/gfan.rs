//! Gröbner cones and the Gröbner fan of an ideal of `k[A]`, supported on the
//! weight cone `σ`.
//!
//! The fan is enumerated by a breadth-first walk over maximal cones. Each
//! facet in the interior of `σ` is crossed by recomputing the reduced basis
//! under an order that refines the weight at the facet by a step across it.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polyhedral::{self, Cone, IntVector};
use crate::subalgebra::{self, ReducedBasis, SubalgebraOrder, SubalgebraPoly};

/// Environment variable capping the number of traversal threads.
pub const THREADS_ENV: &str = "NASHFAN_THREADS";

/// A maximal Gröbner cone: closure, an interior witness weight, and the
/// reduced basis and initial ideal shared by all interior weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerCone {
    pub closure: Cone,
    pub witness: IntVector,
    pub basis: ReducedBasis,
    pub initial_ideal: Vec<SubalgebraPoly>,
}

/// The maximal cones of a Gröbner fan, sorted by their ray lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerFan {
    pub base: Cone,
    pub maximal_cones: Vec<GroebnerCone>,
    /// Set when the ambient dimension exceeds 3, where the traversal is not
    /// covered by the completeness checks.
    pub best_effort: bool,
}

impl GroebnerFan {
    pub fn len(&self) -> usize {
        self.maximal_cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maximal_cones.is_empty()
    }

    /// Closures of the maximal cones.
    pub fn closures(&self) -> Vec<&Cone> {
        self.maximal_cones.iter().map(|c| &c.closure).collect()
    }

    /// The maximal cone containing `w` in its relative interior, if any.
    pub fn cone_containing(&self, w: &IntVector) -> Option<&GroebnerCone> {
        self.maximal_cones.iter().find(|c| c.closure.contains_relative_interior(w))
    }
}

/// The closed Gröbner cone of a reduced basis inside `sigma`: every element's
/// leading monomial must weigh at least as much as each of its other monomials.
pub fn cone_of(basis: &ReducedBasis, sigma: &Cone) -> Result<Cone> {
    let ord = basis.order();
    let mut inequalities = Vec::new();
    for g in basis.elements() {
        let lm = subalgebra::leading_data(g, ord).lm;
        for (e, _) in g.terms() {
            if *e != lm {
                let diff: Vec<i64> = lm.iter().zip(e).map(|(a, b)| a - b).collect();
                inequalities.push(IntVector::from(diff));
            }
        }
    }
    polyhedral::cone_from_constraints(&[], &inequalities, sigma)
}

/// The order used to cross a facet of a maximal cone: the weight at
/// `facet_point` first, ties broken by `-facet_normal` (pointing out of the
/// cone), then lex.
///
/// Errors with [`Error::NoNeighbor`] when the facet lies on the boundary of
/// `sigma`.
pub fn facet_flip_order(
    sigma: &Cone,
    facet: &Cone,
    facet_normal: &IntVector,
    facet_point: &IntVector,
) -> Result<SubalgebraOrder> {
    if facet.lies_on_boundary_of(sigma) {
        return Err(Error::NoNeighbor);
    }
    if !facet.contains_relative_interior(facet_point) || !facet_normal.dot(facet_point).is_zero() {
        return Err(Error::Traversal(format!("{facet_point} is not inside the facet")));
    }
    SubalgebraOrder::refined(&[facet_point.clone(), facet_normal.neg()])
}

/// The maximal Gröbner cone selected by the order `(w, lex)`.
pub fn groebner_cone_at(gens: &[SubalgebraPoly], sigma: &Cone, w: &IntVector) -> Result<GroebnerCone> {
    let basis = subalgebra::reduced_groebner_basis(gens, &SubalgebraOrder::new(w)?)?;
    finish_cone(basis, sigma)
}

fn finish_cone(basis: ReducedBasis, sigma: &Cone) -> Result<GroebnerCone> {
    let closure = cone_of(&basis, sigma)?;
    if !closure.is_full_dimensional() {
        return Err(Error::Traversal("Gröbner cone is not full-dimensional".into()));
    }
    let witness = closure.relative_interior_point()?;
    let basis = basis.with_order(SubalgebraOrder::new(&witness)?)?;
    let initial_ideal = subalgebra::initial_ideal(&basis, &witness)?;
    Ok(GroebnerCone { closure, witness, basis, initial_ideal })
}

/// Traversal settings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FanOptions {
    /// Worker threads; `None` reads [`THREADS_ENV`] and otherwise uses all cores.
    pub threads: Option<usize>,
}

/// Thread count from [`THREADS_ENV`], if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// The Gröbner fan of the ideal generated by `gens` on `sigma`.
pub fn enumerate_fan(gens: &[SubalgebraPoly], sigma: &Cone) -> Result<GroebnerFan> {
    enumerate_fan_with(gens, sigma, FanOptions::default())
}

pub fn enumerate_fan_with(gens: &[SubalgebraPoly], sigma: &Cone, options: FanOptions) -> Result<GroebnerFan> {
    if !sigma.is_full_dimensional() || sigma.rays().is_empty() {
        return Err(Error::NotFullDimensional);
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = options.threads.or_else(threads_from_env) {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Error::Traversal(e.to_string()))?;
    pool.install(|| traverse(gens, sigma))
}

fn traverse(gens: &[SubalgebraPoly], sigma: &Cone) -> Result<GroebnerFan> {
    let start = groebner_cone_at(gens, sigma, &sigma.relative_interior_point()?)?;
    let mut known: BTreeMap<Cone, GroebnerCone> = BTreeMap::new();
    // Facets already crossed; in a fan each interior facet is shared by
    // exactly two maximal cones, so it is crossed once.
    let mut crossed: HashSet<Cone> = HashSet::new();
    let mut frontier = vec![start.closure.clone()];
    known.insert(start.closure.clone(), start);

    while !frontier.is_empty() {
        let mut jobs = Vec::new();
        for k in &frontier {
            for (facet, normal) in polyhedral::facets(k)? {
                if facet.lies_on_boundary_of(sigma) {
                    continue;
                }
                if crossed.insert(facet.clone()) {
                    jobs.push((k.clone(), facet, normal));
                }
            }
        }
        let flipped: Vec<Result<GroebnerCone>> = jobs
            .par_iter()
            .map(|(k, facet, normal)| {
                let point = facet.relative_interior_point()?;
                let order = facet_flip_order(sigma, facet, normal, &point)?;
                let basis = subalgebra::reduced_groebner_basis(gens, &order)?;
                let cone = finish_cone(basis, sigma)?;
                if cone.closure == *k || !facet.rays().iter().all(|r| cone.closure.contains(r)) {
                    return Err(Error::Traversal(format!(
                        "crossing the facet with rays {:?} did not reach a neighbor",
                        facet.rays().iter().map(ToString::to_string).collect::<Vec<_>>()
                    )));
                }
                Ok(cone)
            })
            .collect();
        let mut next = Vec::new();
        for item in flipped {
            let cone = item?;
            if !known.contains_key(&cone.closure) {
                next.push(cone.closure.clone());
                known.insert(cone.closure.clone(), cone);
            }
        }
        next.sort();
        frontier = next;
    }

    let mut maximal_cones: Vec<GroebnerCone> = known.into_values().collect();
    maximal_cones.sort_by(|a, b| a.closure.rays().cmp(b.closure.rays()));
    Ok(GroebnerFan { base: sigma.clone(), maximal_cones, best_effort: sigma.ambient_dim() > 3 })
}

/// True iff the fan has a single maximal cone, equal to its base.
pub fn is_trivial(fan: &GroebnerFan) -> bool {
    fan.maximal_cones.len() == 1 && fan.maximal_cones[0].closure == fan.base
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::semigroup::SemigroupPresentation;

    fn v(x: &[i64]) -> IntVector {
        IntVector::from(x)
    }

    fn rays(c: &Cone) -> Vec<IntVector> {
        c.rays().to_vec()
    }

    fn golden() -> (Vec<SubalgebraPoly>, Cone) {
        let p = Arc::new(SemigroupPresentation::from_i64s(&[&[1, 0], &[1, 1], &[2, 3]]).unwrap());
        let gens = vec![
            SubalgebraPoly::from_i64_terms(&p, &[(1, &[1, 1]), (1, &[1, 0])]).unwrap(),
            SubalgebraPoly::from_i64_terms(&p, &[(1, &[3, 3]), (1, &[2, 3])]).unwrap(),
        ];
        let sigma = p.weight_cone().unwrap();
        (gens, sigma)
    }

    fn a3() -> (Arc<SemigroupPresentation>, Vec<SubalgebraPoly>, Cone) {
        let p = Arc::new(SemigroupPresentation::from_i64s(&[&[1, 0], &[1, 1], &[3, 4]]).unwrap());
        let b: Vec<SubalgebraPoly> =
            (0..3).map(|i| &SubalgebraPoly::generator(&p, i) - &SubalgebraPoly::one(&p)).collect();
        let mut j1 = Vec::new();
        for i in 0..3 {
            for j in i..3 {
                j1.push(&b[i] * &b[j]);
            }
        }
        let sigma = p.weight_cone().unwrap();
        (p, j1, sigma)
    }

    #[test]
    fn golden_cone_at_one_one() {
        let (gens, sigma) = golden();
        assert_eq!(rays(&sigma), vec![v(&[0, 1]), v(&[3, -2])]);
        let c = groebner_cone_at(&gens, &sigma, &v(&[1, 1])).unwrap();
        // q > 0, p > 0, 3q > p inside sigma
        let printed = polyhedral::cone_from_constraints(&[], &[v(&[0, 1]), v(&[1, 0]), v(&[-1, 3])], &sigma).unwrap();
        assert_eq!(c.closure, printed);
        assert_eq!(rays(&c.closure), vec![v(&[0, 1]), v(&[3, 1])]);
    }

    #[test]
    fn golden_fan() {
        let (gens, sigma) = golden();
        let fan = enumerate_fan(&gens, &sigma).unwrap();
        let got: Vec<Vec<IntVector>> = fan.closures().iter().map(|c| rays(c)).collect();
        assert_eq!(
            got,
            vec![
                vec![v(&[0, 1]), v(&[3, 1])],
                vec![v(&[1, 0]), v(&[3, -2])],
                vec![v(&[1, 0]), v(&[3, 1])],
            ]
        );
        assert!(!is_trivial(&fan));
        assert!(!fan.best_effort);
        for c in &fan.maximal_cones {
            assert!(c.closure.contains_relative_interior(&c.witness));
            assert!(c.basis.is_reduced());
        }
    }

    #[test]
    fn flip_across_golden_facet() {
        let (gens, sigma) = golden();
        let c11 = groebner_cone_at(&gens, &sigma, &v(&[1, 1])).unwrap();
        let (facet, normal) = polyhedral::facets(&c11.closure)
            .unwrap()
            .into_iter()
            .find(|(f, _)| !f.lies_on_boundary_of(&sigma))
            .unwrap();
        assert_eq!(normal, v(&[-1, 3]));
        let order = facet_flip_order(&sigma, &facet, &normal, &v(&[3, 1])).unwrap();
        let basis = subalgebra::reduced_groebner_basis(&gens, &order).unwrap();
        let c41 = cone_of(&basis, &sigma).unwrap();
        assert_eq!(c41, groebner_cone_at(&gens, &sigma, &v(&[4, 1])).unwrap().closure);
        // back across the same facet, now with the opposite normal
        let back = facet_flip_order(&sigma, &facet, &normal.neg(), &v(&[3, 1])).unwrap();
        let basis = subalgebra::reduced_groebner_basis(&gens, &back).unwrap();
        assert_eq!(cone_of(&basis, &sigma).unwrap(), c11.closure);
    }

    #[test]
    fn no_neighbor_on_boundary() {
        let (gens, sigma) = golden();
        let c11 = groebner_cone_at(&gens, &sigma, &v(&[1, 1])).unwrap();
        let (facet, normal) = polyhedral::facets(&c11.closure)
            .unwrap()
            .into_iter()
            .find(|(f, _)| f.lies_on_boundary_of(&sigma))
            .unwrap();
        let point = facet.relative_interior_point().unwrap();
        assert_eq!(facet_flip_order(&sigma, &facet, &normal, &point), Err(Error::NoNeighbor));
    }

    #[test]
    fn a3_fan_and_printed_cones() {
        let (_, j1, sigma) = a3();
        let fan = enumerate_fan(&j1, &sigma).unwrap();
        let got: Vec<Vec<IntVector>> = fan.closures().iter().map(|c| rays(c)).collect();
        assert_eq!(got, vec![vec![v(&[0, 1]), v(&[2, -1])], vec![v(&[2, -1]), v(&[4, -3])]]);

        let c1 = groebner_cone_at(&j1, &sigma, &v(&[1, 0])).unwrap();
        let printed1 = [v(&[1, 1]), v(&[1, 0]), v(&[1, 2]), v(&[2, 3]), v(&[3, 4])];
        assert_eq!(c1.closure, polyhedral::cone_from_constraints(&[], &printed1, &sigma).unwrap());
        let c2 = groebner_cone_at(&j1, &sigma, &v(&[3, -2])).unwrap();
        let printed2 = [v(&[1, 1]), v(&[3, 4]), v(&[-1, -2]), v(&[0, -1]), v(&[1, 0])];
        assert_eq!(c2.closure, polyhedral::cone_from_constraints(&[], &printed2, &sigma).unwrap());
    }

    #[test]
    fn j0_fan_is_trivial() {
        let (p, _, sigma) = a3();
        let j0: Vec<SubalgebraPoly> =
            (0..3).map(|i| &SubalgebraPoly::generator(&p, i) - &SubalgebraPoly::one(&p)).collect();
        let fan = enumerate_fan(&j0, &sigma).unwrap();
        assert!(is_trivial(&fan));
        let basis = subalgebra::reduced_groebner_basis(&j0, &SubalgebraOrder::new(&v(&[2, -1])).unwrap()).unwrap();
        assert_eq!(cone_of(&basis, &sigma).unwrap(), sigma);
    }

    #[test]
    fn thread_count_does_not_change_the_fan() {
        let (_, j1, sigma) = a3();
        let one = enumerate_fan_with(&j1, &sigma, FanOptions { threads: Some(1) }).unwrap();
        let four = enumerate_fan_with(&j1, &sigma, FanOptions { threads: Some(4) }).unwrap();
        assert_eq!(one, four);
    }
}
