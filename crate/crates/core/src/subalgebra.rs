//! Polynomials in a monomial subalgebra `k[A] = k[x^a_1, ..., x^a_s]`,
//! intrinsic weight orders, division, initial forms and reduced Gröbner bases.
//!
//! Reduced bases are computed extrinsically: generators are lifted to
//! `k[y_1, ..., y_s]` along `y_i -> x^{a_i}`, a Gröbner basis of the lift
//! together with the toric ideal is computed there, and the result is pushed
//! back down and made reduced with the intrinsic division algorithm.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyhedral::IntVector;
use crate::polyring::{self, RingPoly, Tiebreak, TermOrder};
use crate::semigroup::SemigroupPresentation;

/// Exponent vector in `A ⊂ N^d`.
pub type Exp = Vec<i64>;

/// A polynomial of `k[A]`: rational coefficients on exponents of `A`.
#[derive(Clone, PartialEq, Eq)]
pub struct SubalgebraPoly {
    terms: BTreeMap<Exp, BigRational>,
    presentation: Arc<SemigroupPresentation>,
}

impl SubalgebraPoly {
    pub fn zero(presentation: &Arc<SemigroupPresentation>) -> Self {
        SubalgebraPoly { terms: BTreeMap::new(), presentation: presentation.clone() }
    }

    pub fn one(presentation: &Arc<SemigroupPresentation>) -> Self {
        Self::constant(presentation, BigRational::one())
    }

    pub fn constant(presentation: &Arc<SemigroupPresentation>, c: BigRational) -> Self {
        let zero = vec![0; presentation.ambient_dim()];
        Self::from_terms_unchecked(presentation, [(zero, c)])
    }

    /// Validates that every exponent lies in `A`. Repeated exponents are summed.
    pub fn from_terms(
        presentation: &Arc<SemigroupPresentation>,
        terms: impl IntoIterator<Item = (Exp, BigRational)>,
    ) -> Result<Self> {
        let p = Self::from_terms_unchecked(presentation, terms);
        for e in p.terms.keys() {
            if e.len() != presentation.ambient_dim() {
                return Err(Error::DimensionMismatch { expected: presentation.ambient_dim(), found: e.len() });
            }
            if !presentation.contains(e) {
                return Err(Error::NotAMonomial(IntVector::from(e.as_slice()).to_string()));
            }
        }
        Ok(p)
    }

    /// `from_terms` with integer coefficients.
    pub fn from_i64_terms(presentation: &Arc<SemigroupPresentation>, terms: &[(i64, &[i64])]) -> Result<Self> {
        Self::from_terms(presentation, terms.iter().map(|&(c, e)| (e.to_vec(), BigRational::from_integer(c.into()))))
    }

    pub(crate) fn from_terms_unchecked(
        presentation: &Arc<SemigroupPresentation>,
        terms: impl IntoIterator<Item = (Exp, BigRational)>,
    ) -> Self {
        let mut map: BTreeMap<Exp, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        SubalgebraPoly { terms: map, presentation: presentation.clone() }
    }

    /// `x^{a_i}`, indexing the sorted generators.
    pub fn generator(presentation: &Arc<SemigroupPresentation>, i: usize) -> Self {
        Self::from_terms_unchecked(presentation, [(presentation.exponents()[i].clone(), BigRational::one())])
    }

    pub fn presentation(&self) -> &Arc<SemigroupPresentation> {
        &self.presentation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in decreasing order under `ord`.
    pub fn sorted_terms(&self, ord: &SubalgebraOrder) -> Vec<(&Exp, &BigRational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| ord.cmp_exponents(b.0, a.0));
        t
    }

    pub fn coefficient(&self, e: &[i64]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms_unchecked(&self.presentation, self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.presentation), |acc, _| &acc * self)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.presentation, &other.presentation) || self.presentation == other.presentation,
            "polynomials from different subalgebras"
        );
    }
}

impl Add for &SubalgebraPoly {
    type Output = SubalgebraPoly;
    fn add(self, rhs: &SubalgebraPoly) -> SubalgebraPoly {
        self.same_ring(rhs);
        SubalgebraPoly::from_terms_unchecked(
            &self.presentation,
            self.terms.iter().chain(&rhs.terms).map(|(e, c)| (e.clone(), c.clone())),
        )
    }
}

impl Sub for &SubalgebraPoly {
    type Output = SubalgebraPoly;
    fn sub(self, rhs: &SubalgebraPoly) -> SubalgebraPoly {
        self + &(-rhs)
    }
}

impl Neg for &SubalgebraPoly {
    type Output = SubalgebraPoly;
    fn neg(self) -> SubalgebraPoly {
        SubalgebraPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            presentation: self.presentation.clone(),
        }
    }
}

impl Mul for &SubalgebraPoly {
    type Output = SubalgebraPoly;
    fn mul(self, rhs: &SubalgebraPoly) -> SubalgebraPoly {
        self.same_ring(rhs);
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                terms.push((a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y));
            }
        }
        SubalgebraPoly::from_terms_unchecked(&self.presentation, terms)
    }
}

fn variable_name(d: usize, i: usize) -> String {
    match d {
        1..=3 => ["x", "y", "z"][i].to_string(),
        _ => format!("x{}", i + 1),
    }
}

/// Renders a monomial `x^e` in ambient variables, e.g. `x^2*y^3`.
pub fn format_monomial(e: &[i64]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| {
            let v = variable_name(e.len(), i);
            if k == 1 { v } else { format!("{v}^{k}") }
        })
        .collect();
    if parts.is_empty() { "1".to_string() } else { parts.join("*") }
}

fn format_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (&'a Exp, &'a BigRational)>) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let a = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let mono = format_monomial(e);
        match (mono.as_str(), a.is_one()) {
            ("1", _) => write!(f, "{a}")?,
            (_, true) => write!(f, "{mono}")?,
            _ => write!(f, "{a}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Terms in decreasing lexicographic order of exponents.
impl fmt::Display for SubalgebraPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, self.terms.iter().rev())
    }
}

impl fmt::Debug for SubalgebraPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubalgebraPoly({self})")
    }
}

/// Display adaptor listing terms in decreasing order under a given order.
pub struct Ordered<'a>(pub &'a SubalgebraPoly, pub &'a SubalgebraOrder);

impl fmt::Display for Ordered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, self.0.sorted_terms(self.1).into_iter())
    }
}

/// `x^u > x^v` iff the rows, applied in sequence, first separate `u` and `v`
/// in favor of `u`, falling back to lex on the ambient exponents.
///
/// The first row is the weight `w`; further rows only refine ties and are
/// used to reach orders on walls between Gröbner cones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubalgebraOrder {
    rows: Vec<Vec<i64>>,
}

impl SubalgebraOrder {
    pub fn new(weight: &IntVector) -> Result<Self> {
        Self::refined(std::slice::from_ref(weight))
    }

    pub fn from_i64s(weight: &[i64]) -> Self {
        SubalgebraOrder { rows: vec![weight.to_vec()] }
    }

    /// Order given by `rows[0]`, ties broken by `rows[1]`, ..., then lex.
    pub fn refined(rows: &[IntVector]) -> Result<Self> {
        let d = rows.first().map(IntVector::dim).ok_or_else(|| Error::InvalidOrder("no weight".into()))?;
        let rows = rows
            .iter()
            .map(|r| {
                if r.dim() != d {
                    return Err(Error::DimensionMismatch { expected: d, found: r.dim() });
                }
                r.to_i64s()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SubalgebraOrder { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows[0].len()
    }

    pub fn weight(&self) -> IntVector {
        IntVector::from(self.rows[0].as_slice())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Linear sort key: row values followed by the exponent itself.
    pub fn key(&self, u: &[i64]) -> Vec<i64> {
        let mut k: Vec<i64> = self.rows.iter().map(|r| dot(r, u)).collect();
        k.extend_from_slice(u);
        k
    }

    /// Comparison without checking that the exponents lie in `A`.
    pub fn cmp_exponents(&self, u: &[i64], v: &[i64]) -> Ordering {
        for r in &self.rows {
            match dot(r, u).cmp(&dot(r, v)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        u.cmp(v)
    }

    /// Errors unless this is a monomial order on `k[A]`: every generator must
    /// be greater than 1. The primary weight must lie in the weight cone.
    pub fn validate(&self, presentation: &SemigroupPresentation) -> Result<()> {
        if self.dim() != presentation.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: presentation.ambient_dim(), found: self.dim() });
        }
        for a in presentation.exponents() {
            let values: Vec<i64> = self.rows.iter().map(|r| dot(r, a)).collect();
            if values[0] < 0 {
                return Err(Error::WeightNotInCone);
            }
            if values.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                return Err(Error::InvalidOrder(format!(
                    "generator {} is not greater than 1",
                    IntVector::from(a.as_slice())
                )));
            }
        }
        Ok(())
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_member(presentation: &SemigroupPresentation, u: &[i64]) -> Result<()> {
    if u.len() != presentation.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: presentation.ambient_dim(), found: u.len() });
    }
    if !presentation.contains(u) {
        return Err(Error::NotAMonomial(IntVector::from(u).to_string()));
    }
    Ok(())
}

/// Compares two monomials of `k[A]`.
pub fn compare(u: &[i64], v: &[i64], ord: &SubalgebraOrder, presentation: &SemigroupPresentation) -> Result<Ordering> {
    check_member(presentation, u)?;
    check_member(presentation, v)?;
    Ok(ord.cmp_exponents(u, v))
}

/// Sum of the terms of `f` of maximal `w`-weight. Zero maps to zero.
pub fn initial_form(f: &SubalgebraPoly, w: &IntVector) -> Result<SubalgebraPoly> {
    let p = f.presentation();
    if w.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), found: w.dim() });
    }
    let w = w.to_i64s()?;
    if p.exponents().iter().any(|a| dot(&w, a) < 0) {
        return Err(Error::WeightNotInCone);
    }
    let Some(top) = f.terms.keys().map(|e| dot(&w, e)).max() else {
        return Ok(f.clone());
    };
    Ok(SubalgebraPoly::from_terms_unchecked(
        p,
        f.terms.iter().filter(|(e, _)| dot(&w, e) == top).map(|(e, c)| (e.clone(), c.clone())),
    ))
}

/// Leading monomial exponent and coefficient. For the zero polynomial both
/// are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub lm: Exp,
    pub lc: BigRational,
}

impl LeadingData {
    /// The leading term as a polynomial.
    pub fn lt(&self, presentation: &Arc<SemigroupPresentation>) -> SubalgebraPoly {
        SubalgebraPoly::from_terms_unchecked(presentation, [(self.lm.clone(), self.lc.clone())])
    }
}

pub fn leading_data(f: &SubalgebraPoly, ord: &SubalgebraOrder) -> LeadingData {
    match f.terms.iter().max_by(|a, b| ord.cmp_exponents(a.0, b.0)) {
        Some((e, c)) => LeadingData { lm: e.clone(), lc: c.clone() },
        None => LeadingData { lm: vec![0; f.presentation.ambient_dim()], lc: BigRational::zero() },
    }
}

/// Result of [`divide`]: `f = sum quotients[i] * divisors[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<SubalgebraPoly>,
    pub remainder: SubalgebraPoly,
}

/// Multivariate division in `k[A]`: the leading term of the running
/// polynomial is cancelled by the first divisor whose leading monomial
/// divides it in `A`, and moved to the remainder otherwise.
pub fn divide(f: &SubalgebraPoly, divisors: &[SubalgebraPoly], ord: &SubalgebraOrder) -> Result<Division> {
    let pres = f.presentation().clone();
    let leads: Vec<LeadingData> = divisors
        .iter()
        .map(|g| {
            g.same_ring(f);
            if g.is_zero() {
                Err(Error::Input("zero divisor".into()))
            } else {
                Ok(leading_data(g, ord))
            }
        })
        .collect::<Result<_>>()?;
    let mut quotients: Vec<BTreeMap<Exp, BigRational>> = vec![BTreeMap::new(); divisors.len()];
    let mut remainder: Vec<(Exp, BigRational)> = Vec::new();
    // keyed by sort key, so the last entry is the leading term
    let mut p: BTreeMap<Vec<i64>, (Exp, BigRational)> =
        f.terms.iter().map(|(e, c)| (ord.key(e), (e.clone(), c.clone()))).collect();

    while let Some((_, (e, c))) = p.pop_last() {
        let hit = leads.iter().position(|l| pres.divides_unchecked(&l.lm, &e));
        let Some(i) = hit else {
            remainder.push((e, c));
            continue;
        };
        let shift: Exp = e.iter().zip(&leads[i].lm).map(|(a, b)| a - b).collect();
        let q = &c / &leads[i].lc;
        for (ge, gc) in &divisors[i].terms {
            if *ge == leads[i].lm {
                continue;
            }
            let ne: Exp = ge.iter().zip(&shift).map(|(a, b)| a + b).collect();
            let delta = -(&q * gc);
            match p.entry(ord.key(&ne)) {
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let s = &o.get().1 + &delta;
                    if s.is_zero() {
                        o.remove();
                    } else {
                        o.get_mut().1 = s;
                    }
                }
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert((ne, delta));
                }
            }
        }
        *quotients[i].entry(shift).or_insert_with(BigRational::zero) += q;
    }
    Ok(Division {
        quotients: quotients.into_iter().map(|q| SubalgebraPoly::from_terms_unchecked(&pres, q)).collect(),
        remainder: SubalgebraPoly::from_terms_unchecked(&pres, remainder),
    })
}

/// A reduced Gröbner basis together with the order that produced it.
/// Elements are monic and sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBasis {
    elements: Vec<SubalgebraPoly>,
    order: SubalgebraOrder,
}

impl ReducedBasis {
    pub fn elements(&self) -> &[SubalgebraPoly] {
        &self.elements
    }

    pub fn order(&self) -> &SubalgebraOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_exponents(&self) -> Vec<Exp> {
        self.elements.iter().map(|g| leading_data(g, &self.order).lm).collect()
    }

    /// True for the basis `{1}` of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    /// Checks monicity and that no monomial of an element is divisible in
    /// `A` by the leading monomial of another element.
    pub fn is_reduced(&self) -> bool {
        let leads: Vec<LeadingData> = self.elements.iter().map(|g| leading_data(g, &self.order)).collect();
        leads.iter().all(|l| l.lc.is_one())
            && self.elements.iter().enumerate().all(|(i, g)| {
                g.terms.keys().all(|e| {
                    leads.iter().enumerate().all(|(j, l)| j == i || !g.presentation.divides_unchecked(&l.lm, e))
                })
            })
    }

    /// The same basis viewed under another order with the same leading
    /// monomials, re-sorted. Errors if some leading monomial changes.
    pub fn with_order(&self, order: SubalgebraOrder) -> Result<ReducedBasis> {
        let before = self.leading_exponents();
        let out = ReducedBasis { elements: self.elements.clone(), order };
        if out.leading_exponents() != before {
            return Err(Error::Traversal("order change moves a leading monomial".into()));
        }
        Ok(out.sorted())
    }

    fn sorted(mut self) -> Self {
        let ord = self.order.clone();
        self.elements.sort_by_cached_key(|g| ord.key(&leading_data(g, &ord).lm));
        self
    }
}

/// The unique reduced Gröbner basis of the ideal generated by `gens`.
pub fn reduced_groebner_basis(gens: &[SubalgebraPoly], ord: &SubalgebraOrder) -> Result<ReducedBasis> {
    let first = gens.iter().find(|g| !g.is_zero()).ok_or(Error::ZeroIdeal)?;
    let pres = first.presentation().clone();
    for g in gens {
        g.same_ring(first);
    }
    ord.validate(&pres)?;
    if gens.iter().any(SubalgebraPoly::is_constant) {
        return Ok(unit_basis(&pres, ord));
    }

    let s = pres.len();
    let lifted_order = lifted_order(&pres, ord)?;
    let mut lifted: Vec<RingPoly> = pres.toric_ideal()?.to_vec();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        lifted.push(lift(g)?);
    }
    let upstairs = polyring::buchberger_reduced(&lifted, &lifted_order)?;

    let images: Vec<SubalgebraPoly> = upstairs
        .iter()
        .map(|g| push_down(g, &pres))
        .filter(|g| !g.is_zero())
        .collect();
    debug_assert!(images.iter().all(|g| g.presentation.len() == s));
    if images.iter().any(SubalgebraPoly::is_constant) {
        return Ok(unit_basis(&pres, ord));
    }
    auto_reduce(images, ord)
}

fn unit_basis(pres: &Arc<SemigroupPresentation>, ord: &SubalgebraOrder) -> ReducedBasis {
    ReducedBasis { elements: vec![SubalgebraPoly::one(pres)], order: ord.clone() }
}

/// Order on `k[y]` comparing images in `k[A]` first, then lex on `y`.
fn lifted_order(pres: &SemigroupPresentation, ord: &SubalgebraOrder) -> Result<TermOrder> {
    let exps = pres.exponents();
    let mut rows: Vec<Vec<i64>> = ord.rows.iter().map(|r| exps.iter().map(|a| dot(r, a)).collect()).collect();
    for j in 0..pres.ambient_dim() {
        rows.push(exps.iter().map(|a| a[j]).collect());
    }
    TermOrder::new(pres.len(), rows, Tiebreak::Lex)
}

fn lift(f: &SubalgebraPoly) -> Result<RingPoly> {
    let pres = f.presentation();
    let terms = f
        .terms
        .iter()
        .map(|(e, c)| {
            let lambda = pres.member(e).ok_or_else(|| Error::NotAMonomial(IntVector::from(e.as_slice()).to_string()))?;
            let exp = lambda
                .into_iter()
                .map(|l| u32::try_from(l).map_err(|_| Error::Overflow(format!("exponent {l}"))))
                .collect::<Result<Vec<u32>>>()?;
            Ok((exp, c.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RingPoly::from_terms(pres.len(), terms))
}

fn push_down(g: &RingPoly, pres: &Arc<SemigroupPresentation>) -> SubalgebraPoly {
    SubalgebraPoly::from_terms_unchecked(
        pres,
        g.terms().map(|(e, c)| {
            let lambda: Vec<u64> = e.iter().map(|&x| u64::from(x)).collect();
            (pres.evaluate(&lambda), c.clone())
        }),
    )
}

/// Minimalizes a Gröbner basis and tail-reduces it until it is reduced.
fn auto_reduce(mut basis: Vec<SubalgebraPoly>, ord: &SubalgebraOrder) -> Result<ReducedBasis> {
    let pres = basis[0].presentation.clone();
    basis.sort_by_cached_key(|g| ord.key(&leading_data(g, ord).lm));
    let mut minimal: Vec<SubalgebraPoly> = Vec::new();
    let mut leads: Vec<Exp> = Vec::new();
    for g in basis {
        let l = leading_data(&g, ord).lm;
        if !leads.iter().any(|m| pres.divides_unchecked(m, &l)) {
            leads.push(l);
            minimal.push(g);
        }
    }

    let cap = 10 * minimal.len().max(1);
    for _ in 0..cap {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<SubalgebraPoly> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let r = divide(&minimal[i], &others, ord)?.remainder;
            let lc = leading_data(&r, ord).lc;
            let r = r.scale(&lc.recip());
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            return Ok(ReducedBasis { elements: minimal, order: ord.clone() }.sorted());
        }
    }
    Err(Error::ReductionDiverged(cap))
}

/// Remainder of `f` on division by the basis; zero iff `f` lies in the ideal.
pub fn normal_form(f: &SubalgebraPoly, basis: &ReducedBasis) -> Result<SubalgebraPoly> {
    Ok(divide(f, &basis.elements, &basis.order)?.remainder)
}

/// `{in_w(g) : g in basis}`, which generates `in_w(I)` when `w` lies in the
/// closed Gröbner cone of the basis.
pub fn initial_ideal(basis: &ReducedBasis, w: &IntVector) -> Result<Vec<SubalgebraPoly>> {
    let wi = w.to_i64s()?;
    if wi.len() != basis.order.dim() {
        return Err(Error::DimensionMismatch { expected: basis.order.dim(), found: wi.len() });
    }
    for g in &basis.elements {
        if g.presentation.exponents().iter().any(|a| dot(&wi, a) < 0) {
            return Err(Error::WeightNotInCone);
        }
        let lm = leading_data(g, &basis.order).lm;
        if g.terms.keys().any(|e| dot(&wi, e) > dot(&wi, &lm)) {
            return Err(Error::WeightNotInCone);
        }
    }
    basis.elements.iter().map(|g| initial_form(g, w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pres(g: &[&[i64]]) -> Arc<SemigroupPresentation> {
        Arc::new(SemigroupPresentation::from_i64s(g).unwrap())
    }

    fn poly(p: &Arc<SemigroupPresentation>, t: &[(i64, &[i64])]) -> SubalgebraPoly {
        SubalgebraPoly::from_i64_terms(p, t).unwrap()
    }

    fn golden_ring() -> Arc<SemigroupPresentation> {
        pres(&[&[1, 0], &[1, 1], &[2, 3]])
    }

    fn a3() -> Arc<SemigroupPresentation> {
        pres(&[&[1, 0], &[1, 1], &[3, 4]])
    }

    fn j1_a3() -> Vec<SubalgebraPoly> {
        let p = a3();
        let b: Vec<SubalgebraPoly> = (0..3).map(|i| &SubalgebraPoly::generator(&p, i) - &SubalgebraPoly::one(&p)).collect();
        let mut out = Vec::new();
        for i in 0..3 {
            for j in i..3 {
                out.push(&b[i] * &b[j]);
            }
        }
        out
    }

    fn as_set(v: &[SubalgebraPoly]) -> Vec<String> {
        let mut s: Vec<String> = v.iter().map(ToString::to_string).collect();
        s.sort();
        s
    }

    #[test]
    fn rejects_non_members() {
        let p = golden_ring();
        assert!(matches!(SubalgebraPoly::from_i64_terms(&p, &[(1, &[1, 3])]), Err(Error::NotAMonomial(_))));
        assert!(SubalgebraPoly::from_i64_terms(&p, &[(1, &[0, 1])]).is_err());
    }

    #[test]
    fn compare_examples() {
        let p = golden_ring();
        let w11 = SubalgebraOrder::from_i64s(&[1, 1]);
        assert_eq!(compare(&[1, 1], &[1, 0], &w11, &p).unwrap(), Ordering::Greater);
        assert_eq!(compare(&[2, 3], &[2, 3], &w11, &p).unwrap(), Ordering::Equal);
        let w10 = SubalgebraOrder::from_i64s(&[1, 0]);
        assert_eq!(compare(&[2, 2], &[1, 0], &w10, &p).unwrap(), Ordering::Greater);
        assert!(compare(&[1, 3], &[1, 0], &w10, &p).is_err());
    }

    #[test]
    fn initial_form_examples() {
        let p = golden_ring();
        let f = poly(&p, &[(1, &[1, 1]), (1, &[1, 0])]);
        assert_eq!(initial_form(&f, &[1, 1].into()).unwrap(), poly(&p, &[(1, &[1, 1])]));
        let c = SubalgebraPoly::constant(&p, BigRational::from_integer(5.into()));
        assert_eq!(initial_form(&c, &[1, 1].into()).unwrap(), c);
        let q = a3();
        let h = poly(&q, &[(1, &[3, 4]), (1, &[1, 0]), (-4, &[1, 1]), (2, &[0, 0])]);
        assert_eq!(initial_form(&h, &[3, -2].into()).unwrap(), poly(&q, &[(1, &[1, 0])]));
        assert!(matches!(initial_form(&h, &[-1, 0].into()), Err(Error::WeightNotInCone)));
    }

    #[test]
    fn leading_data_examples() {
        let p = golden_ring();
        let w = SubalgebraOrder::from_i64s(&[1, 1]);
        let f = poly(&p, &[(1, &[4, 0]), (1, &[3, 0])]);
        assert_eq!(leading_data(&f, &w).lm, vec![4, 0]);
        let g = poly(&p, &[(1, &[2, 3]), (-1, &[3, 0])]);
        let l = leading_data(&g, &w);
        assert_eq!((l.lm, l.lc), (vec![2, 3], BigRational::one()));
        let z = leading_data(&SubalgebraPoly::zero(&p), &w);
        assert_eq!((z.lm, z.lc), (vec![0, 0], BigRational::zero()));
    }

    #[test]
    fn divide_examples() {
        let p = golden_ring();
        let w = SubalgebraOrder::from_i64s(&[1, 1]);
        let g = poly(&p, &[(1, &[1, 1]), (1, &[1, 0])]);
        let d = divide(&g, std::slice::from_ref(&g), &w).unwrap();
        assert_eq!(d.quotients, vec![SubalgebraPoly::one(&p)]);
        assert!(d.remainder.is_zero());

        let f = poly(&p, &[(1, &[4, 0]), (1, &[3, 0])]);
        let d = divide(&f, &[g], &w).unwrap();
        assert!(d.quotients[0].is_zero());
        assert_eq!(d.remainder, f);

        let xm1 = poly(&p, &[(1, &[1, 0]), (-1, &[0, 0])]);
        let d = divide(&xm1.pow(2), std::slice::from_ref(&xm1), &SubalgebraOrder::from_i64s(&[3, -1])).unwrap();
        assert_eq!(d.quotients[0], xm1);
        assert!(d.remainder.is_zero());
    }

    #[test]
    fn golden_basis_at_one_one() {
        let p = golden_ring();
        let gens = [
            poly(&p, &[(1, &[1, 1]), (1, &[1, 0])]),
            poly(&p, &[(1, &[3, 3]), (1, &[2, 3])]),
        ];
        let gb = reduced_groebner_basis(&gens, &SubalgebraOrder::from_i64s(&[1, 1])).unwrap();
        let expected = [
            poly(&p, &[(1, &[1, 1]), (1, &[1, 0])]),
            poly(&p, &[(1, &[4, 0]), (1, &[3, 0])]),
            poly(&p, &[(1, &[2, 3]), (-1, &[3, 0])]),
        ];
        assert_eq!(gb.elements(), &expected);
        assert!(gb.is_reduced());
        for g in &gens {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        let init = initial_ideal(&gb, &[1, 1].into()).unwrap();
        assert_eq!(
            init,
            vec![poly(&p, &[(1, &[1, 1])]), poly(&p, &[(1, &[4, 0])]), poly(&p, &[(1, &[2, 3])])]
        );
        assert!(matches!(initial_ideal(&gb, &[1, 0].into()), Err(Error::WeightNotInCone)));
    }

    #[test]
    fn a3_bases() {
        let q = a3();
        let j1 = j1_a3();
        let gb1 = reduced_groebner_basis(&j1, &SubalgebraOrder::from_i64s(&[1, 0])).unwrap();
        let exp1 = [
            poly(&q, &[(1, &[2, 2]), (-2, &[1, 1]), (1, &[0, 0])]),
            poly(&q, &[(1, &[2, 1]), (-1, &[1, 0]), (-1, &[1, 1]), (1, &[0, 0])]),
            poly(&q, &[(1, &[2, 0]), (-2, &[1, 0]), (1, &[0, 0])]),
            poly(&q, &[(1, &[3, 4]), (1, &[1, 0]), (-4, &[1, 1]), (2, &[0, 0])]),
        ];
        assert_eq!(as_set(gb1.elements()), as_set(&exp1));
        assert!(gb1.is_reduced());

        let gb2 = reduced_groebner_basis(&j1, &SubalgebraOrder::from_i64s(&[3, -2])).unwrap();
        let exp2 = [
            poly(&q, &[(1, &[2, 2]), (-2, &[1, 1]), (1, &[0, 0])]),
            poly(&q, &[(1, &[4, 5]), (-1, &[3, 4]), (-1, &[1, 1]), (1, &[0, 0])]),
            poly(&q, &[(1, &[6, 8]), (-2, &[3, 4]), (1, &[0, 0])]),
            poly(&q, &[(1, &[1, 0]), (1, &[3, 4]), (-4, &[1, 1]), (2, &[0, 0])]),
        ];
        assert_eq!(as_set(gb2.elements()), as_set(&exp2));
        assert!(gb2.is_reduced());
    }

    #[test]
    fn basis_is_independent_of_generator_order_and_scaling() {
        let mut j1 = j1_a3();
        let ord = SubalgebraOrder::from_i64s(&[1, 0]);
        let a = reduced_groebner_basis(&j1, &ord).unwrap();
        j1.reverse();
        let scaled: Vec<SubalgebraPoly> = j1
            .iter()
            .enumerate()
            .map(|(i, g)| g.scale(&BigRational::new((i as i64 + 2).into(), 3.into())))
            .collect();
        assert_eq!(reduced_groebner_basis(&scaled, &ord).unwrap(), a);
    }

    #[test]
    fn j0_basis_is_the_binomials() {
        let q = a3();
        let j0: Vec<SubalgebraPoly> = (0..3).map(|i| &SubalgebraPoly::generator(&q, i) - &SubalgebraPoly::one(&q)).collect();
        for w in [[1, 0], [1, 1], [3, -2], [5, -3]] {
            let gb = reduced_groebner_basis(&j0, &SubalgebraOrder::from_i64s(&w)).unwrap();
            assert_eq!(as_set(gb.elements()), as_set(&j0));
            let init = initial_ideal(&gb, &IntVector::from(w)).unwrap();
            let mut gens: Vec<String> = (0..3).map(|i| SubalgebraPoly::generator(&q, i).to_string()).collect();
            gens.sort();
            assert_eq!(as_set(&init), gens);
        }
    }

    #[test]
    fn monomial_ideal_is_its_own_initial_ideal() {
        let q = a3();
        let gens = [poly(&q, &[(1, &[2, 0])]), poly(&q, &[(1, &[1, 1])])];
        let gb = reduced_groebner_basis(&gens, &SubalgebraOrder::from_i64s(&[1, 0])).unwrap();
        assert_eq!(initial_ideal(&gb, &[1, 0].into()).unwrap(), gb.elements().to_vec());
        assert_eq!(as_set(gb.elements()), as_set(&gens));
    }

    #[test]
    fn unit_and_zero_ideals() {
        let q = a3();
        let x = SubalgebraPoly::generator(&q, 0);
        let gens = [x.clone(), &x - &SubalgebraPoly::one(&q)];
        let gb = reduced_groebner_basis(&gens, &SubalgebraOrder::from_i64s(&[1, 0])).unwrap();
        assert!(gb.is_unit());
        assert_eq!(
            reduced_groebner_basis(&[SubalgebraPoly::zero(&q)], &SubalgebraOrder::from_i64s(&[1, 0])),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn order_validation() {
        let q = a3();
        let gens = [SubalgebraPoly::generator(&q, 0)];
        assert_eq!(
            reduced_groebner_basis(&gens, &SubalgebraOrder::from_i64s(&[-1, 0])),
            Err(Error::WeightNotInCone)
        );
        // (4,-3) vanishes on (3,4); a negative refinement row would make it smaller than 1
        let bad = SubalgebraOrder::refined(&[[4, -3].into(), [-1, 0].into()]).unwrap();
        assert!(matches!(reduced_groebner_basis(&gens, &bad), Err(Error::InvalidOrder(_))));
    }

    #[test]
    fn h1_lies_in_j1() {
        let q = a3();
        let h1 = poly(&q, &[(1, &[3, 4]), (1, &[1, 0]), (-4, &[1, 1]), (2, &[0, 0])]);
        for w in [[1, 0], [3, -2], [1, 1]] {
            let gb = reduced_groebner_basis(&j1_a3(), &SubalgebraOrder::from_i64s(&w)).unwrap();
            assert!(normal_form(&h1, &gb).unwrap().is_zero());
            for i in 0..3 {
                let b = &SubalgebraPoly::generator(&q, i) - &SubalgebraPoly::one(&q);
                assert!(!normal_form(&b, &gb).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn display() {
        let p = golden_ring();
        let g = poly(&p, &[(1, &[2, 3]), (-1, &[3, 0]), (3, &[0, 0])]);
        assert_eq!(g.to_string(), "-x^3 + x^2*y^3 + 3");
        assert_eq!(Ordered(&g, &SubalgebraOrder::from_i64s(&[1, 1])).to_string(), "x^2*y^3 - x^3 + 3");
    }
}
