//! Multivariate polynomials over Q in free variables, with a reduced
//! Gröbner basis engine and toric ideals by elimination.

pub(crate) mod groebner;
mod order;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use order::{Tiebreak, TermOrder};

use crate::error::{Error, Result};
use crate::polyhedral::IntVector;
use groebner::KeyedPoly;

pub type Exponent = Vec<u32>;

/// A polynomial in `nvars` variables: a finitely supported map from
/// exponent vectors to non-zero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

impl RingPoly {
    pub fn zero(nvars: usize) -> Self {
        RingPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn monomial(exp: Exponent, c: BigRational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        RingPoly { nvars, terms }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, BigRational)>) -> Self {
        let mut map: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        RingPoly { nvars, terms: map }
    }

    pub fn from_i64_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|&(c, e)| (e.to_vec(), BigRational::from_integer(c.into()))))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Leading term under `order`, or `None` for the zero polynomial.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Exponent, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Substitutes `y_i -> x^{images[i]}`, producing a polynomial in the
    /// variables of the images.
    pub fn substitute_monomials(&self, images: &[Exponent]) -> RingPoly {
        let target = images.first().map_or(0, Vec::len);
        Self::from_terms(
            target,
            self.terms.iter().map(|(e, c)| {
                let mut out = vec![0u32; target];
                for (k, img) in e.iter().zip(images) {
                    for (o, x) in out.iter_mut().zip(img) {
                        *o += k * x;
                    }
                }
                (out, c.clone())
            }),
        )
    }
}

impl Add for &RingPoly {
    type Output = RingPoly;
    fn add(self, rhs: &RingPoly) -> RingPoly {
        RingPoly::from_terms(self.nvars, self.terms.iter().chain(&rhs.terms).map(|(e, c)| (e.clone(), c.clone())))
    }
}

impl Sub for &RingPoly {
    type Output = RingPoly;
    fn sub(self, rhs: &RingPoly) -> RingPoly {
        self + &(-rhs)
    }
}

impl Neg for &RingPoly {
    type Output = RingPoly;
    fn neg(self) -> RingPoly {
        RingPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &RingPoly {
    type Output = RingPoly;
    fn mul(self, rhs: &RingPoly) -> RingPoly {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                terms.push((a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y));
            }
        }
        RingPoly::from_terms(self.nvars, terms)
    }
}

impl fmt::Display for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { format!("y{}", v + 1) } else { format!("y{}^{k}", v + 1) })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

fn check_nvars(polys: &[RingPoly], order: &TermOrder) -> Result<()> {
    match polys.iter().find(|p| p.nvars != order.nvars()) {
        Some(p) => Err(Error::DimensionMismatch { expected: order.nvars(), found: p.nvars }),
        None => Ok(()),
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// increasing leading monomial. The zero ideal yields an empty basis.
pub fn buchberger_reduced(gens: &[RingPoly], order: &TermOrder) -> Result<Vec<RingPoly>> {
    check_nvars(gens, order)?;
    let keyed = gens.iter().map(|g| KeyedPoly::from_ring(g, order)).collect();
    Ok(groebner::groebner(keyed, order)
        .iter()
        .map(|g| g.to_ring(order.nvars()))
        .collect())
}

/// Remainder of `f` on division by a Gröbner basis.
pub fn normal_form(f: &RingPoly, basis: &[RingPoly], order: &TermOrder) -> Result<RingPoly> {
    check_nvars(std::slice::from_ref(f), order)?;
    check_nvars(basis, order)?;
    let keyed: Vec<KeyedPoly> = basis.iter().map(|g| KeyedPoly::from_ring(g, order)).collect();
    Ok(groebner::reduce(KeyedPoly::from_ring(f, order), &keyed).to_ring(order.nvars()))
}

/// Reduced lex Gröbner basis of the toric ideal `ker(y_i -> x^{a_i})`, in
/// the order the generators are given.
///
/// Computed by eliminating `x` from `<y_i - x^{a_i}>` in `k[x, y]` under a
/// block order with the `x` block first.
pub fn toric_ideal(generators: &[IntVector]) -> Result<Vec<RingPoly>> {
    let d = generators.first().map(IntVector::dim).ok_or(Error::InvalidPresentation("no generators".into()))?;
    let s = generators.len();
    let n = d + s;
    let mut gens = Vec::with_capacity(s);
    for (i, a) in generators.iter().enumerate() {
        if a.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: a.dim() });
        }
        let mut x_exp: Exponent = vec![0; n];
        for (j, v) in a.to_i64s()?.into_iter().enumerate() {
            x_exp[j] = u32::try_from(v).map_err(|_| Error::InvalidPresentation(format!("{a} is not in N^d")))?;
        }
        let y = RingPoly::variable(n, d + i);
        gens.push(&y - &RingPoly::monomial(x_exp, BigRational::one()));
    }
    let order = TermOrder::elimination(n, d);
    let basis = buchberger_reduced(&gens, &order)?;
    Ok(basis
        .into_iter()
        .filter(|g| g.terms().all(|(e, _)| e[..d].iter().all(|&x| x == 0)))
        .map(|g| RingPoly::from_terms(s, g.terms().map(|(e, c)| (e[d..].to_vec(), c.clone()))))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(nvars: usize, terms: &[(i64, &[u32])]) -> RingPoly {
        RingPoly::from_i64_terms(nvars, terms)
    }

    /// Independent Gröbner check: every S-polynomial of the basis reduces to zero.
    fn s_pairs_vanish(basis: &[RingPoly], order: &TermOrder) -> bool {
        for (i, f) in basis.iter().enumerate() {
            for g in &basis[i + 1..] {
                let (ef, cf) = f.leading_term(order).unwrap();
                let (eg, cg) = g.leading_term(order).unwrap();
                let m: Exponent = ef.iter().zip(eg).map(|(a, b)| *a.max(b)).collect();
                let mf = RingPoly::monomial(m.iter().zip(ef).map(|(a, b)| a - b).collect(), cf.recip());
                let mg = RingPoly::monomial(m.iter().zip(eg).map(|(a, b)| a - b).collect(), cg.recip());
                let s = &(&mf * f) - &(&mg * g);
                if !normal_form(&s, basis, order).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn coprime_leading_terms_are_already_a_basis() {
        let gens = [poly(2, &[(1, &[1, 0]), (-1, &[0, 0])]), poly(2, &[(1, &[0, 1]), (-1, &[0, 0])])];
        let gb = buchberger_reduced(&gens, &TermOrder::lex(2)).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&gens[0]) && gb.contains(&gens[1]));
    }

    #[test]
    fn single_s_pair() {
        // {y1, y1 y2 + y2^2} -> {y1, y2^2}
        let gens = [poly(2, &[(1, &[1, 0])]), poly(2, &[(1, &[1, 1]), (1, &[0, 2])])];
        let gb = buchberger_reduced(&gens, &TermOrder::lex(2)).unwrap();
        assert_eq!(gb, vec![poly(2, &[(1, &[0, 2])]), poly(2, &[(1, &[1, 0])])]);
    }

    #[test]
    fn twisted_cubic_style_system() {
        let order = TermOrder::lex(3);
        let gens = [
            poly(3, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]),
            poly(3, &[(1, &[1, 1, 0]), (-1, &[0, 0, 1])]),
        ];
        let gb = buchberger_reduced(&gens, &order).unwrap();
        assert!(s_pairs_vanish(&gb, &order));
        for g in &gens {
            assert!(normal_form(g, &gb, &order).unwrap().is_zero());
        }
        // every basis element lies in the ideal of the generators: reduce by the
        // generators' own basis, computed again from the output
        let again = buchberger_reduced(&gb, &order).unwrap();
        assert_eq!(again, gb);
        // y2^3 - y3^2 is in the ideal: y2^3 = y1^2 y2^2... check via membership
        let member = poly(3, &[(1, &[0, 3, 0]), (-1, &[0, 0, 2])]);
        assert!(normal_form(&member, &gb, &order).unwrap().is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let order = TermOrder::lex(3);
        let basis = [poly(3, &[(1, &[1, 1, 0]), (-1, &[0, 0, 4])])];
        let f = poly(3, &[(1, &[2, 1, 0])]);
        assert_eq!(normal_form(&f, &basis, &order).unwrap(), poly(3, &[(1, &[1, 0, 4])]));
        let y1 = [poly(2, &[(1, &[1, 0])])];
        let y2 = poly(2, &[(1, &[0, 1])]);
        assert_eq!(normal_form(&y2, &y1, &TermOrder::lex(2)).unwrap(), y2);
        let inside = &y1[0] * &y2;
        assert!(normal_form(&inside, &y1, &TermOrder::lex(2)).unwrap().is_zero());
    }

    #[test]
    fn unit_ideal() {
        let gens = [poly(1, &[(1, &[1])]), poly(1, &[(1, &[1]), (1, &[0])])];
        assert_eq!(buchberger_reduced(&gens, &TermOrder::lex(1)).unwrap(), vec![RingPoly::one(1)]);
    }

    #[test]
    fn toric_examples() {
        let gens: Vec<IntVector> = vec![[1, 0].into(), [3, 4].into(), [1, 1].into()];
        assert_eq!(
            toric_ideal(&gens).unwrap(),
            vec![poly(3, &[(1, &[1, 1, 0]), (-1, &[0, 0, 4])])]
        );
        let free: Vec<IntVector> = vec![[1, 0].into(), [0, 1].into()];
        assert!(toric_ideal(&free).unwrap().is_empty());
        let gens: Vec<IntVector> = vec![[1, 0].into(), [1, 1].into(), [2, 3].into()];
        assert_eq!(
            toric_ideal(&gens).unwrap(),
            vec![poly(3, &[(1, &[1, 0, 1]), (-1, &[0, 3, 0])])]
        );
    }

    #[test]
    fn toric_generators_vanish_under_substitution() {
        let gens: Vec<IntVector> = vec![[1, 0].into(), [1, 1].into(), [1, 2].into(), [2, 5].into()];
        let images: Vec<Exponent> = gens.iter().map(|g| g.to_i64s().unwrap().iter().map(|&x| x as u32).collect()).collect();
        let basis = toric_ideal(&gens).unwrap();
        assert!(!basis.is_empty());
        for b in &basis {
            assert_eq!(b.len(), 2);
            assert!(b.substitute_monomials(&images).is_zero());
        }
    }

    #[test]
    fn arithmetic() {
        let x = RingPoly::variable(2, 0);
        let one = RingPoly::one(2);
        let f = &x - &one;
        let sq = f.pow(2);
        assert_eq!(sq, poly(2, &[(1, &[2, 0]), (-2, &[1, 0]), (1, &[0, 0])]));
        assert_eq!(sq.coefficient(&[1, 0]), q(-2));
        assert!((&f - &f).is_zero());
    }
}
