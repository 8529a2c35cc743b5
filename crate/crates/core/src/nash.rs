//! Fans of normalized higher Nash blowups of affine normal toric varieties,
//! computed as the Gröbner fan of `J_n = <x^{a_1} - 1, ..., x^{a_s} - 1>^{n+1}`
//! in `k[σ̌ ∩ Z^d]`, and the smoothness test built on it.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gfan::{self, FanOptions, GroebnerCone, GroebnerFan};
use crate::polyhedral::{self, Cone, IntMatrix, IntVector};
use crate::semigroup::SemigroupPresentation;
use crate::subalgebra::SubalgebraPoly;

/// All compositions of `total` into `parts` non-negative parts, in
/// lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(total: u32, parts: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            acc.push(total);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for t in 0..=total {
            acc.push(t);
            go(total - t, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// Generators `prod_i (x^{a_i} - 1)^{t_i}` of `J_n`, one per composition
/// `t` of `n + 1` into `s` parts.
pub fn build_jn(presentation: &Arc<SemigroupPresentation>, n: u32) -> Vec<SubalgebraPoly> {
    let one = SubalgebraPoly::one(presentation);
    let binomials: Vec<SubalgebraPoly> =
        (0..presentation.len()).map(|i| &SubalgebraPoly::generator(presentation, i) - &one).collect();
    compositions(n + 1, presentation.len())
        .into_iter()
        .map(|t| {
            t.iter()
                .zip(&binomials)
                .filter(|(k, _)| **k > 0)
                .fold(one.clone(), |acc, (&k, b)| &acc * &b.pow(k))
        })
        .collect()
}

/// Outcome of the Nash pipeline for a cone `σ` and order `n`.
///
/// Polynomials live in the normalized coordinates `u' = U u` where the
/// presentation is non-negative; the fan and its witnesses are reported in
/// the caller's coordinates via `w = Uᵀ w'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NashResult {
    pub sigma: Cone,
    pub presentation: Arc<SemigroupPresentation>,
    pub n: u32,
    pub fan: GroebnerFan,
    pub smooth: bool,
    pub nash_isomorphism: bool,
    /// The unimodular `U` applied to exponents; the identity when the Hilbert
    /// basis is already non-negative.
    pub transform: IntMatrix,
}

pub fn nash_fan(sigma: &Cone, n: u32) -> Result<NashResult> {
    nash_fan_with(sigma, n, FanOptions::default())
}

pub fn nash_fan_with(sigma: &Cone, n: u32, options: FanOptions) -> Result<NashResult> {
    if !sigma.is_full_dimensional() || sigma.rays().is_empty() {
        return Err(Error::DegenerateCone);
    }
    let dual = polyhedral::dual_cone(sigma)?;
    let hb = polyhedral::hilbert_basis(&dual)?;
    let (u, gens) = polyhedral::normalize_to_orthant(&hb)?;
    let presentation = Arc::new(SemigroupPresentation::new(gens)?);
    let local_sigma = presentation.weight_cone()?;
    let jn = build_jn(&presentation, n);
    let local_fan = gfan::enumerate_fan_with(&jn, &local_sigma, options)?;

    let back = u.transpose();
    let fan = if u.is_identity() { local_fan } else { pull_back(local_fan, &back, sigma)? };
    let nash_isomorphism = gfan::is_trivial(&fan);
    Ok(NashResult {
        sigma: sigma.clone(),
        presentation,
        n,
        smooth: polyhedral::is_smooth(sigma),
        nash_isomorphism,
        fan,
        transform: u,
    })
}

fn pull_back(fan: GroebnerFan, back: &IntMatrix, sigma: &Cone) -> Result<GroebnerFan> {
    let mut maximal_cones = fan
        .maximal_cones
        .into_iter()
        .map(|c| {
            Ok(GroebnerCone {
                closure: c.closure.transform(back)?,
                witness: back.mul_vec(&c.witness),
                basis: c.basis,
                initial_ideal: c.initial_ideal,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    maximal_cones.sort_by(|a, b| a.closure.rays().cmp(b.closure.rays()));
    Ok(GroebnerFan { base: sigma.clone(), maximal_cones, best_effort: fan.best_effort })
}

/// Smoothness of `σ` against triviality of the Nash fan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NobileReport {
    pub smooth: bool,
    pub nash_isomorphism: bool,
    /// `smooth == nash_isomorphism`; false means an internal error.
    pub consistent: bool,
}

impl NobileReport {
    pub fn summary(&self) -> String {
        format!(
            "({}, fan {})",
            if self.smooth { "smooth" } else { "singular" },
            if self.nash_isomorphism { "trivial" } else { "non-trivial" }
        )
    }
}

pub fn nobile_check(sigma: &Cone, n: u32) -> Result<NobileReport> {
    nobile_check_with(sigma, n, FanOptions::default())
}

/// Requires `n >= 1`; for `n = 0` the fan is always trivial.
pub fn nobile_check_with(sigma: &Cone, n: u32, options: FanOptions) -> Result<NobileReport> {
    if n == 0 {
        return Err(Error::Input("the smoothness test needs n >= 1".into()));
    }
    let r = nash_fan_with(sigma, n, options)?;
    Ok(report(&r))
}

pub fn report(r: &NashResult) -> NobileReport {
    NobileReport { smooth: r.smooth, nash_isomorphism: r.nash_isomorphism, consistent: r.smooth == r.nash_isomorphism }
}

/// `cone((0,1), (q,-p))`.
pub fn planar_cone(p: i64, q: i64) -> Result<Cone> {
    Cone::from_rays(2, vec![IntVector::from([0, 1]), IntVector::from([q, -p])])
}
