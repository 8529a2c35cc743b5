//! The affine semigroup `A = Z_{>=0}(a_1, ..., a_s)` inside `N^d`: membership,
//! divisibility of monomials of `k[A]`, and minimality of a presentation.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::polyhedral::{Cone, IntVector};
use crate::polyring::{self, RingPoly};

type MemoKey = (usize, Vec<i64>);

/// Generators `a_1, ..., a_s` of an affine semigroup in `N^d`, sorted
/// lexicographically, together with the indices of the generators that span
/// extreme rays of the cone they generate.
pub struct SemigroupPresentation {
    generators: Vec<IntVector>,
    exponents: Vec<Vec<i64>>,
    ambient_dim: usize,
    edges: Vec<usize>,
    memo: Mutex<HashMap<MemoKey, Option<Vec<u64>>>>,
    toric: OnceLock<Vec<RingPoly>>,
}

impl SemigroupPresentation {
    /// Validates and sorts the generators. Generators must be non-zero,
    /// pairwise distinct and non-negative; redundancy is allowed and can be
    /// detected with [`is_minimal_generating`].
    pub fn new(generators: Vec<IntVector>) -> Result<Self> {
        let ambient_dim = generators
            .first()
            .map(IntVector::dim)
            .ok_or_else(|| Error::InvalidPresentation("no generators".into()))?;
        if ambient_dim == 0 {
            return Err(Error::InvalidPresentation("zero ambient dimension".into()));
        }
        for g in &generators {
            if g.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: g.dim() });
            }
            if g.is_zero() {
                return Err(Error::InvalidPresentation("zero generator".into()));
            }
            if !g.is_nonnegative() {
                return Err(Error::InvalidPresentation(format!(
                    "generator {g} has a negative entry; normalize to the orthant first"
                )));
            }
        }
        let mut generators = generators;
        generators.sort();
        if generators.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPresentation("repeated generator".into()));
        }
        let exponents = generators.iter().map(IntVector::to_i64s).collect::<Result<Vec<_>>>()?;
        let spanned = Cone::from_rays(ambient_dim, generators.clone())?;
        let edges = generators
            .iter()
            .enumerate()
            .filter(|(_, g)| spanned.rays().contains(g))
            .map(|(i, _)| i)
            .collect();
        Ok(SemigroupPresentation {
            generators,
            exponents,
            ambient_dim,
            edges,
            memo: Mutex::new(HashMap::new()),
            toric: OnceLock::new(),
        })
    }

    pub fn from_i64s(generators: &[&[i64]]) -> Result<Self> {
        Self::new(generators.iter().map(|g| IntVector::from(*g)).collect())
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Generators as machine-integer exponent vectors.
    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Indices of the generators that are primitive points of extreme rays.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The cone spanned by the generators.
    pub fn spanned_cone(&self) -> Result<Cone> {
        Cone::from_rays(self.ambient_dim, self.generators.clone())
    }

    /// The dual of the spanned cone, i.e. the weights for which every
    /// monomial of `k[A]` has non-negative degree.
    pub fn weight_cone(&self) -> Result<Cone> {
        self.spanned_cone()?.dual()
    }

    /// Lexicographically smallest `lambda` with `sum lambda_i a_i = u`, if any.
    pub fn member(&self, u: &[i64]) -> Option<Vec<u64>> {
        if u.len() != self.ambient_dim || u.iter().any(|&x| x < 0) {
            return None;
        }
        self.solve(0, u)
    }

    pub fn member_vector(&self, u: &IntVector) -> Option<Vec<u64>> {
        self.member(&u.to_i64s().ok()?)
    }

    pub fn contains(&self, u: &[i64]) -> bool {
        self.member(u).is_some()
    }

    /// Whether `x^u` divides `x^v` in `k[A]`, i.e. `v - u` lies in `A`.
    pub fn divides(&self, u: &[i64], v: &[i64]) -> Result<bool> {
        for w in [u, v] {
            if !self.contains(w) {
                return Err(Error::NotAMonomial(IntVector::from(w).to_string()));
            }
        }
        Ok(self.divides_unchecked(u, v))
    }

    /// [`divides`](Self::divides) for exponents already known to lie in `A`.
    pub(crate) fn divides_unchecked(&self, u: &[i64], v: &[i64]) -> bool {
        let diff: Vec<i64> = v.iter().zip(u).map(|(a, b)| a - b).collect();
        diff.iter().all(|&x| x >= 0) && self.contains(&diff)
    }

    /// Generators of the toric ideal of the presentation in `k[y_1, ..., y_s]`,
    /// with `y_i` mapping to the i-th (sorted) generator. Computed once.
    pub fn toric_ideal(&self) -> Result<&[RingPoly]> {
        if let Some(t) = self.toric.get() {
            return Ok(t);
        }
        let t = polyring::toric_ideal(&self.generators)?;
        Ok(self.toric.get_or_init(|| t))
    }

    /// `sum lambda_i a_i`
    pub fn evaluate(&self, lambda: &[u64]) -> Vec<i64> {
        let mut out = vec![0i64; self.ambient_dim];
        for (l, a) in lambda.iter().zip(&self.exponents) {
            for (o, x) in out.iter_mut().zip(a) {
                *o += *l as i64 * x;
            }
        }
        out
    }

    // Lexicographically smallest witness using generators idx.. only.
    fn solve(&self, idx: usize, residual: &[i64]) -> Option<Vec<u64>> {
        let s = self.exponents.len();
        if residual.iter().all(|&x| x == 0) {
            return Some(vec![0; s - idx]);
        }
        if idx == s {
            return None;
        }
        let key = (idx, residual.to_vec());
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            return hit.clone();
        }
        let a = &self.exponents[idx];
        let max_k = a
            .iter()
            .zip(residual)
            .filter(|(&x, _)| x > 0)
            .map(|(&x, &r)| r / x)
            .min()
            .unwrap_or(0);
        let mut found = None;
        let mut rest = residual.to_vec();
        for k in 0..=max_k {
            if k > 0 {
                for (r, x) in rest.iter_mut().zip(a) {
                    *r -= x;
                }
            }
            if let Some(mut tail) = self.solve(idx + 1, &rest) {
                tail.insert(0, k as u64);
                found = Some(tail);
                break;
            }
        }
        self.memo.lock().expect("memo poisoned").insert(key, found.clone());
        found
    }
}

/// True iff no generator is a non-negative integer combination of the others.
pub fn is_minimal_generating(presentation: &SemigroupPresentation) -> bool {
    let gens = presentation.generators();
    (0..gens.len()).all(|i| {
        let others: Vec<IntVector> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        if others.is_empty() {
            return true;
        }
        match SemigroupPresentation::new(others) {
            Ok(rest) => rest.member(&presentation.exponents()[i]).is_none(),
            Err(_) => true,
        }
    })
}

impl Clone for SemigroupPresentation {
    fn clone(&self) -> Self {
        SemigroupPresentation {
            generators: self.generators.clone(),
            exponents: self.exponents.clone(),
            ambient_dim: self.ambient_dim,
            edges: self.edges.clone(),
            memo: Mutex::new(HashMap::new()),
            toric: self.toric.clone(),
        }
    }
}

impl PartialEq for SemigroupPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for SemigroupPresentation {}

impl fmt::Debug for SemigroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemigroupPresentation")
            .field("generators", &self.generators)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(g: &[&[i64]]) -> SemigroupPresentation {
        SemigroupPresentation::from_i64s(g).unwrap()
    }

    /// Exhaustive search over all lambda with sum lambda_i |a_i|_1 <= |u|_1.
    fn brute_member(gens: &[Vec<i64>], u: &[i64]) -> Option<Vec<u64>> {
        fn go(gens: &[Vec<i64>], u: &[i64], acc: &mut Vec<u64>) -> Option<Vec<u64>> {
            let i = acc.len();
            if i == gens.len() {
                return u.iter().all(|&x| x == 0).then(|| acc.clone());
            }
            let norm: i64 = gens[i].iter().sum();
            let budget: i64 = u.iter().sum();
            for k in 0..=(budget / norm) {
                let rest: Vec<i64> = u.iter().zip(&gens[i]).map(|(a, b)| a - k * b).collect();
                if rest.iter().any(|&x| x < 0) {
                    break;
                }
                acc.push(k as u64);
                if let Some(found) = go(gens, &rest, acc) {
                    return Some(found);
                }
                acc.pop();
            }
            None
        }
        go(gens, u, &mut Vec::new())
    }

    #[test]
    fn member_examples() {
        let a = pres(&[&[1, 0], &[1, 1], &[3, 4]]);
        assert_eq!(a.member(&[1, 1]), Some(vec![0, 1, 0]));
        // (1,0,1) and (0,4,0) are both witnesses; the search returns the lex-smallest
        let w = a.member(&[4, 4]).unwrap();
        assert_eq!(a.evaluate(&w), vec![4, 4]);
        assert_eq!(w, vec![0, 4, 0]);
        let b = pres(&[&[1, 0], &[1, 1], &[2, 3]]);
        assert_eq!(b.member(&[1, 3]), None);
        assert_eq!(brute_member(b.exponents(), &[1, 3]), None);
    }

    #[test]
    fn member_agrees_with_exhaustive_search() {
        let presentations = [
            pres(&[&[1, 0], &[1, 1], &[3, 4]]),
            pres(&[&[1, 0], &[1, 1], &[2, 3]]),
            pres(&[&[1, 0], &[1, 1], &[1, 2], &[2, 5]]),
            pres(&[&[2, 0], &[1, 1], &[0, 2]]),
        ];
        for a in &presentations {
            for x in 0..=8 {
                for y in 0..=8 {
                    let fast = a.member(&[x, y]);
                    let slow = brute_member(a.exponents(), &[x, y]);
                    // both searches return the lexicographically smallest witness
                    assert_eq!(fast, slow, "u = ({x},{y}) in {:?}", a.generators());
                    if let Some(l) = fast {
                        assert_eq!(a.evaluate(&l), vec![x, y]);
                    }
                }
            }
        }
    }

    #[test]
    fn divides_examples() {
        let a = pres(&[&[1, 0], &[1, 1], &[2, 3]]);
        assert!(a.divides(&[1, 0], &[4, 0]).unwrap());
        assert!(!a.divides(&[1, 1], &[1, 0]).unwrap());
        assert!(!a.divides(&[1, 0], &[2, 3]).unwrap());
        assert!(matches!(a.divides(&[1, 3], &[4, 4]), Err(Error::NotAMonomial(_))));
    }

    #[test]
    fn minimality() {
        assert!(is_minimal_generating(&pres(&[&[1, 0], &[1, 1], &[3, 4]])));
        assert!(!is_minimal_generating(&pres(&[&[1, 0], &[1, 1], &[2, 1]])));
        assert!(!is_minimal_generating(&pres(&[&[1, 0], &[1, 1], &[2, 3], &[3, 3]])));
    }

    #[test]
    fn edges_are_extreme_ray_generators() {
        let a = pres(&[&[1, 0], &[1, 1], &[3, 4]]);
        assert_eq!(a.edges(), &[0, 2]);
        assert_eq!(a.edge_count(), 2);
    }

    #[test]
    fn invalid_presentations() {
        assert!(SemigroupPresentation::from_i64s(&[&[1, -1]]).is_err());
        assert!(SemigroupPresentation::from_i64s(&[&[1, 0], &[1, 0]]).is_err());
        assert!(SemigroupPresentation::from_i64s(&[&[0, 0]]).is_err());
        assert!(SemigroupPresentation::from_i64s(&[&[1, 0], &[1, 0, 0]]).is_err());
    }
}
