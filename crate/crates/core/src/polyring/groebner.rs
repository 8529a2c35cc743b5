//! Buchberger's algorithm on polynomials stored as key-sorted term vectors.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Exponent, RingPoly, TermOrder};

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub key: Vec<i64>,
    pub exp: Exponent,
    pub coeff: BigRational,
}

/// Terms in strictly decreasing key order.
#[derive(Clone, Debug, Default)]
pub(crate) struct KeyedPoly {
    pub terms: Vec<Term>,
}

impl KeyedPoly {
    pub fn from_ring(f: &RingPoly, order: &TermOrder) -> Self {
        let mut terms: Vec<Term> = f
            .terms()
            .map(|(e, c)| Term { key: order.key(e), exp: e.clone(), coeff: c.clone() })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        KeyedPoly { terms }
    }

    pub fn to_ring(&self, nvars: usize) -> RingPoly {
        RingPoly::from_terms(nvars, self.terms.iter().map(|t| (t.exp.clone(), t.coeff.clone())))
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn make_monic(&mut self) {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = lc.recip();
                for t in &mut self.terms {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exp.iter().all(|&x| x == 0)
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn sub_exp(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn sub_key(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_key(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn add_exp(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `p - c * x^shift * g`, merging the two sorted term lists.
fn sub_multiple(p: &[Term], c: &BigRational, shift_exp: &[u32], shift_key: &[i64], g: &KeyedPoly) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.terms.len());
    let mut i = 0;
    let mut gi = g.terms.iter().map(|t| Term {
        key: add_key(&t.key, shift_key),
        exp: add_exp(&t.exp, shift_exp),
        coeff: -(c * &t.coeff),
    });
    let mut pending = gi.next();
    while let Some(q) = pending.take() {
        match p.get(i) {
            Some(t) => match t.key.cmp(&q.key) {
                Ordering::Greater => {
                    out.push(t.clone());
                    i += 1;
                    pending = Some(q);
                }
                Ordering::Less => {
                    out.push(q);
                    pending = gi.next();
                }
                Ordering::Equal => {
                    let s = &t.coeff + &q.coeff;
                    if !s.is_zero() {
                        out.push(Term { coeff: s, ..q });
                    }
                    i += 1;
                    pending = gi.next();
                }
            },
            None => {
                out.push(q);
                pending = gi.next();
            }
        }
    }
    out.extend_from_slice(&p[i..]);
    out
}

/// Full reduction of `f` modulo `basis` (every term, not just the leading one).
pub(crate) fn reduce(f: KeyedPoly, basis: &[KeyedPoly]) -> KeyedPoly {
    let mut remainder = Vec::new();
    let mut p = f.terms;
    let mut pos = 0;
    while pos < p.len() {
        let t = &p[pos];
        let divisor = basis
            .iter()
            .find(|g| g.lead().is_some_and(|l| divides(&l.exp, &t.exp)));
        match divisor {
            Some(g) => {
                let l = g.lead().expect("non-zero divisor");
                let c = &t.coeff / &l.coeff;
                let shift_exp = sub_exp(&t.exp, &l.exp);
                let shift_key = sub_key(&t.key, &l.key);
                // Everything before `pos` already went to the remainder.
                p = sub_multiple(&p[pos..], &c, &shift_exp, &shift_key, g);
                pos = 0;
            }
            None => {
                remainder.push(p[pos].clone());
                pos += 1;
            }
        }
    }
    KeyedPoly { terms: remainder }
}

fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn s_polynomial(f: &KeyedPoly, g: &KeyedPoly, order: &TermOrder) -> KeyedPoly {
    let (lf, lg) = (f.lead().expect("non-zero"), g.lead().expect("non-zero"));
    let m = lcm(&lf.exp, &lg.exp);
    let sf_exp = sub_exp(&m, &lf.exp);
    let sg_exp = sub_exp(&m, &lg.exp);
    let sf_key = order.key(&sf_exp);
    let sg_key = order.key(&sg_exp);
    let inv = lf.coeff.recip();
    let shifted_f: Vec<Term> = f
        .terms
        .iter()
        .map(|t| Term {
            key: add_key(&t.key, &sf_key),
            exp: add_exp(&t.exp, &sf_exp),
            coeff: &t.coeff * &inv,
        })
        .collect();
    let c = lg.coeff.recip();
    KeyedPoly { terms: sub_multiple(&shifted_f, &c, &sg_exp, &sg_key, g) }
}

/// Reduced Gröbner basis: monic, auto-reduced, sorted by increasing leading monomial.
///
/// Pairs are processed by the normal strategy (smallest total degree of the
/// lcm, then pair index) with the coprime and chain criteria.
pub(crate) fn groebner(gens: Vec<KeyedPoly>, order: &TermOrder) -> Vec<KeyedPoly> {
    let mut basis: Vec<KeyedPoly> = Vec::new();
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<KeyedPoly>,
                queue: &mut BTreeSet<(u64, usize, usize)>,
                pending: &mut HashSet<(usize, usize)>,
                mut f: KeyedPoly| {
        f.make_monic();
        let j = basis.len();
        let lf = f.lead().expect("non-zero").exp.clone();
        for (i, g) in basis.iter().enumerate() {
            let deg: u64 = lcm(&g.lead().expect("non-zero").exp, &lf).iter().map(|&x| u64::from(x)).sum();
            queue.insert((deg, i, j));
            pending.insert((i, j));
        }
        basis.push(f);
    };

    for f in gens {
        if f.is_zero() {
            continue;
        }
        if f.is_constant() {
            return vec![unit(order)];
        }
        push(&mut basis, &mut queue, &mut pending, f);
    }

    while let Some((_, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i].lead().expect("non-zero").exp, &basis[j].lead().expect("non-zero").exp);
        if li.iter().zip(lj.iter()).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let m = lcm(li, lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].lead().expect("non-zero").exp, &m)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = reduce(s_polynomial(&basis[i], &basis[j], order), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![unit(order)];
        }
        push(&mut basis, &mut queue, &mut pending, r);
    }

    interreduce(basis)
}

fn unit(order: &TermOrder) -> KeyedPoly {
    let e = vec![0u32; order.nvars()];
    KeyedPoly { terms: vec![Term { key: order.key(&e), exp: e, coeff: BigRational::one() }] }
}

/// Minimalizes and tail-reduces a Gröbner basis.
pub(crate) fn interreduce(mut basis: Vec<KeyedPoly>) -> Vec<KeyedPoly> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| a.lead().expect("non-zero").key.cmp(&b.lead().expect("non-zero").key));
    let mut minimal: Vec<KeyedPoly> = Vec::new();
    for g in basis {
        let lg = &g.lead().expect("non-zero").exp;
        if !minimal.iter().any(|h| divides(&h.lead().expect("non-zero").exp, lg)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<KeyedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = reduce(minimal[i].clone(), &others);
        r.make_monic();
        out.push(r);
    }
    out
}
