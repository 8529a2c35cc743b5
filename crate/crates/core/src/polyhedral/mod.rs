//! Exact polyhedral geometry over the integers: pointed rational cones in
//! both representations, duality, facets, Hilbert bases and lattice changes
//! of coordinates.
//!
//! A [`Cone`] is always stored in canonical form: primitive extreme rays in
//! lexicographic order, primitive facet normals reduced modulo the equality
//! space, and a canonical basis of the equalities. Two cones are equal as
//! sets exactly when they are equal as values.

mod dd;
mod hilbert;
pub mod lattice;
mod vector;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use hilbert::hilbert_basis;
pub use lattice::IntMatrix;
pub use vector::IntVector;

use crate::error::{Error, Result};
use dd::double_description;
use lattice::{canonical_row_basis, primitive_from_rational, reduce_modulo_rref};

/// A pointed rational polyhedral cone with both V- and H-representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    ambient_dim: usize,
    rays: Vec<IntVector>,
    inequalities: Vec<IntVector>,
    equalities: Vec<IntVector>,
}

impl Cone {
    /// The cone generated by `generators`; errors if it contains a line.
    pub fn from_rays(ambient_dim: usize, generators: Vec<IntVector>) -> Result<Cone> {
        check_dims(ambient_dim, &generators)?;
        // H-representation: facet normals are the extreme rays of the dual.
        let h = double_description(ambient_dim, &generators);
        let lineality: Vec<&IntVector> = h.lineality.iter().collect();
        let (equalities, rref_rows, pivots) = canonical_row_basis(&lineality);
        let mut inequalities: Vec<IntVector> = h
            .rays
            .iter()
            .filter_map(|n| primitive_from_rational(&reduce_modulo_rref(n, &rref_rows, &pivots)))
            .collect();
        inequalities.sort();
        inequalities.dedup();

        let rays = extreme_rays(ambient_dim, &equalities, &inequalities)?;
        Ok(Cone { ambient_dim, rays, inequalities, equalities })
    }

    /// The cone `{x : e.x = 0 for e in equalities, h.x >= 0 for h in inequalities}`.
    pub fn from_constraints(
        ambient_dim: usize,
        equalities: Vec<IntVector>,
        inequalities: Vec<IntVector>,
    ) -> Result<Cone> {
        check_dims(ambient_dim, &equalities)?;
        check_dims(ambient_dim, &inequalities)?;
        let rays = extreme_rays(ambient_dim, &equalities, &inequalities)?;
        Cone::from_rays(ambient_dim, rays)
    }

    pub fn positive_orthant(dim: usize) -> Cone {
        Cone::from_rays(dim, (0..dim).map(|i| IntVector::unit(dim, i)).collect())
            .expect("orthant is pointed")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Primitive extreme rays, lexicographically sorted.
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    /// Non-redundant facet normals `h` with `h.x >= 0` on the cone.
    pub fn inequalities(&self) -> &[IntVector] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[IntVector] {
        &self.equalities
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equalities.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equalities.is_empty()
    }

    pub fn contains(&self, p: &IntVector) -> bool {
        self.equalities.iter().all(|e| e.dot(p).is_zero())
            && self.inequalities.iter().all(|h| !h.dot(p).is_negative())
    }

    /// Membership in the relative interior (strict on every facet).
    pub fn contains_relative_interior(&self, p: &IntVector) -> bool {
        self.equalities.iter().all(|e| e.dot(p).is_zero())
            && self.inequalities.iter().all(|h| h.dot(p).is_positive())
    }

    /// The dual cone `{u : u.v >= 0 for all v in self}`.
    pub fn dual(&self) -> Result<Cone> {
        dual_cone(self)
    }

    pub fn relative_interior_point(&self) -> Result<IntVector> {
        relative_interior_point(self)
    }

    /// Image under a linear map given by a unimodular integer matrix.
    pub fn transform(&self, m: &IntMatrix) -> Result<Cone> {
        Cone::from_rays(self.ambient_dim, self.rays.iter().map(|r| m.mul_vec(r)).collect())
    }

    /// Whether the cone is contained in a proper face of `other`.
    pub fn lies_on_boundary_of(&self, other: &Cone) -> bool {
        other.inequalities.iter().any(|h| self.rays.iter().all(|r| h.dot(r).is_zero()))
    }
}

fn check_dims(dim: usize, vectors: &[IntVector]) -> Result<()> {
    if dim == 0 {
        return Err(Error::DegenerateCone);
    }
    match vectors.iter().find(|v| v.dim() != dim) {
        Some(v) => Err(Error::DimensionMismatch { expected: dim, found: v.dim() }),
        None => Ok(()),
    }
}

fn extreme_rays(dim: usize, equalities: &[IntVector], inequalities: &[IntVector]) -> Result<Vec<IntVector>> {
    let mut constraints: Vec<IntVector> = Vec::with_capacity(2 * equalities.len() + inequalities.len());
    for e in equalities {
        constraints.push(e.clone());
        constraints.push(e.neg());
    }
    constraints.extend(inequalities.iter().cloned());
    let g = double_description(dim, &constraints);
    if !g.lineality.is_empty() {
        return Err(Error::NotStrictlyConvex);
    }
    Ok(g.rays)
}

/// `{u : u.v >= 0 for all v in c}` for a full-dimensional pointed cone.
pub fn dual_cone(c: &Cone) -> Result<Cone> {
    if c.rays.is_empty() || !c.is_full_dimensional() {
        return Err(Error::DegenerateCone);
    }
    Cone::from_rays(c.ambient_dim, c.inequalities.clone())
}

/// True iff the primitive ray generators form part of a lattice basis; for a
/// full-dimensional cone this is exactly `ambient_dim` rays with determinant ±1.
pub fn is_smooth(c: &Cone) -> bool {
    if c.is_full_dimensional() {
        c.rays.len() == c.ambient_dim && lattice::determinant(&c.rays).abs() == BigInt::from(1)
    } else {
        c.rays.len() == c.dim() && lattice::extends_to_lattice_basis(&c.rays)
    }
}

/// One entry per facet: the facet as a cone and its primitive inward normal.
pub fn facets(c: &Cone) -> Result<Vec<(Cone, IntVector)>> {
    if !c.is_full_dimensional() || c.rays.is_empty() {
        return Err(Error::NotFullDimensional);
    }
    c.inequalities
        .iter()
        .map(|h| {
            let rays = c.rays.iter().filter(|r| h.dot(r).is_zero()).cloned().collect();
            Ok((Cone::from_rays(c.ambient_dim, rays)?, h.clone()))
        })
        .collect()
}

/// The primitive vector on the sum of the extreme rays.
pub fn relative_interior_point(c: &Cone) -> Result<IntVector> {
    let sum = c
        .rays
        .iter()
        .fold(IntVector::zero(c.ambient_dim), |acc, r| acc.add(r));
    sum.primitive().ok_or(Error::DegenerateCone)
}

/// `{x in ambient : e.x = 0, h.x >= 0}` in canonical form. Lower-dimensional
/// results are allowed.
pub fn cone_from_constraints(eqs: &[IntVector], ineqs: &[IntVector], ambient: &Cone) -> Result<Cone> {
    let mut all_eqs = ambient.equalities.clone();
    all_eqs.extend(eqs.iter().cloned());
    let mut all_ineqs = ambient.inequalities.clone();
    all_ineqs.extend(ineqs.iter().cloned());
    Cone::from_constraints(ambient.ambient_dim, all_eqs, all_ineqs)
}

/// A unimodular change of coordinates moving `gens` into the non-negative orthant.
///
/// Returns the identity when the generators are already non-negative.
/// Otherwise the first row is a primitive interior point `w_1` of the dual of
/// the cone spanned by `gens`, completed to a lattice basis whose remaining
/// rows are pushed into the dual cone by adding the least multiple of `w_1`.
pub fn normalize_to_orthant(gens: &[IntVector]) -> Result<(IntMatrix, Vec<IntVector>)> {
    let d = gens.first().map(IntVector::dim).ok_or(Error::DegenerateCone)?;
    check_dims(d, gens)?;
    if gens.iter().all(IntVector::is_nonnegative) {
        return Ok((IntMatrix::identity(d), gens.to_vec()));
    }
    let spanned = Cone::from_rays(d, gens.to_vec())?;
    if !spanned.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let w1 = relative_interior_point(&dual_cone(&spanned)?)?;
    let basis = lattice::unimodular_completion(&w1)?;
    let mut rows = vec![w1.clone()];
    for w in &basis.rows()[1..] {
        let mut shift = BigInt::zero();
        for g in gens {
            // w.g + N * w1.g >= 0 with w1.g > 0
            let need = (-w.dot(g)).div_ceil(&w1.dot(g));
            if need > shift {
                shift = need;
            }
        }
        rows.push(w.add(&w1.scale(&shift)));
    }
    let u = IntMatrix::from_rows(rows)?;
    let images = gens.iter().map(|g| u.mul_vec(g)).collect();
    Ok((u, images))
}
