//! Exact integer and rational linear algebra on small dense matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntVector;
use crate::error::{Error, Result};

/// A dense integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<IntVector>) -> Result<Self> {
        if let Some(first) = rows.first() {
            for r in &rows {
                if r.dim() != first.dim() {
                    return Err(Error::DimensionMismatch { expected: first.dim(), found: r.dim() });
                }
            }
        }
        Ok(IntMatrix { rows })
    }

    pub fn identity(dim: usize) -> Self {
        IntMatrix { rows: (0..dim).map(|i| IntVector::unit(dim, i)).collect() }
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, IntVector::dim)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.nrows())
    }

    pub fn mul_vec(&self, v: &IntVector) -> IntVector {
        IntVector::new(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.ncols();
        let rows = (0..n)
            .map(|j| IntVector::new(self.rows.iter().map(|r| r.entries()[j].clone()).collect()))
            .collect();
        IntMatrix { rows }
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.rows)
    }

    /// Inverse of a unimodular matrix; errors if the determinant is not ±1.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        let det = self.determinant();
        if det.abs() != BigInt::one() {
            return Err(Error::Input(format!("matrix is not unimodular (det = {det})")));
        }
        let inv = rational_inverse(&self.rows).ok_or(Error::DegenerateCone)?;
        let rows = inv
            .into_iter()
            .map(|r| IntVector::new(r.into_iter().map(|q| q.to_integer()).collect()))
            .collect();
        Ok(IntMatrix { rows })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub fn determinant(rows: &[IntVector]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn to_rational_rows(rows: &[&IntVector]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.entries().iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Reduced row echelon form over the rationals; returns the non-zero rows and pivot columns.
pub fn rref(rows: &[&IntVector]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m = to_rational_rows(rows);
    let ncols = rows.first().map_or(0, |r| r.dim());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[&IntVector]) -> usize {
    rref(rows).1.len()
}

/// Clears denominators and content of a rational vector.
pub fn primitive_from_rational(v: &[BigRational]) -> Option<IntVector> {
    let lcm = v.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    IntVector::new(ints).primitive()
}

/// Canonical integer basis of the row space: RREF rows scaled to primitive integers.
pub fn canonical_row_basis(rows: &[&IntVector]) -> (Vec<IntVector>, Vec<Vec<BigRational>>, Vec<usize>) {
    let (m, pivots) = rref(rows);
    let basis = m.iter().filter_map(|r| primitive_from_rational(r)).collect();
    (basis, m, pivots)
}

/// Reduces `v` modulo a row space given in RREF form, so that it vanishes in all pivot columns.
pub fn reduce_modulo_rref(v: &IntVector, rref_rows: &[Vec<BigRational>], pivots: &[usize]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = v.entries().iter().map(|x| BigRational::from_integer(x.clone())).collect();
    for (row, &c) in rref_rows.iter().zip(pivots) {
        if out[c].is_zero() {
            continue;
        }
        let f = out[c].clone();
        for (o, r) in out.iter_mut().zip(row) {
            *o -= &f * r;
        }
    }
    out
}

/// Inverse over the rationals, or `None` if singular.
pub fn rational_inverse(rows: &[IntVector]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> =
                r.entries().iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[c].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A unimodular matrix whose first row is the given primitive vector.
pub fn unimodular_completion(first: &IntVector) -> Result<IntMatrix> {
    if !first.is_primitive() {
        return Err(Error::Input(format!("{first} is not primitive")));
    }
    let d = first.dim();
    // Column operations reduce the row vector to e_1; `cols` tracks them, so
    // first * cols = e_1 and the inverse of `cols` has `first` as its top row.
    let mut w: Vec<BigInt> = first.entries().to_vec();
    let mut cols: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let col_axpy = |cols: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
        for row in cols.iter_mut() {
            let v = &row[src] * q;
            row[dst] -= v;
        }
    };
    let col_swap = |cols: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in cols.iter_mut() {
            row.swap(a, b);
        }
    };
    for j in 1..d {
        while !w[j].is_zero() {
            let q = w[0].div_floor(&w[j]);
            let v = &w[j] * &q;
            w[0] -= v;
            col_axpy(&mut cols, 0, j, &q);
            w.swap(0, j);
            col_swap(&mut cols, 0, j);
        }
    }
    if w[0].is_negative() {
        for row in cols.iter_mut() {
            row[0] = -row[0].clone();
        }
    }
    let v = IntMatrix::from_rows(cols.into_iter().map(IntVector::new).collect())?;
    let completed = v.unimodular_inverse()?;
    debug_assert_eq!(&completed.rows()[0], first);
    Ok(completed)
}

/// Whether `vectors` extend to a basis of Z^d (gcd of maximal minors is 1 and they are independent).
pub fn extends_to_lattice_basis(vectors: &[IntVector]) -> bool {
    let k = vectors.len();
    let Some(d) = vectors.first().map(IntVector::dim) else {
        return true;
    };
    if k > d {
        return false;
    }
    let mut g = BigInt::zero();
    for cols in combinations(d, k) {
        let minor: Vec<IntVector> = vectors
            .iter()
            .map(|v| IntVector::new(cols.iter().map(|&c| v.entries()[c].clone()).collect()))
            .collect();
        g = g.gcd(&determinant(&minor));
        if g.is_one() {
            return true;
        }
    }
    false
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from(v)
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = [iv(&[2, -1, 3]), iv(&[0, 4, 1]), iv(&[5, 2, -2])];
        // 2*(4*-2 - 1*2) - (-1)*(0*-2 - 1*5) + 3*(0*2 - 4*5)
        assert_eq!(determinant(&m), BigInt::from(-85));
        assert_eq!(determinant(&[iv(&[0, 1]), iv(&[4, -3])]), BigInt::from(-4));
    }

    #[test]
    fn completion_is_unimodular_with_given_row() {
        for w in [iv(&[3, 4]), iv(&[1, 0]), iv(&[-5, 7, 2]), iv(&[6, 10, 15])] {
            let m = unimodular_completion(&w).unwrap();
            assert_eq!(m.rows()[0], w);
            assert_eq!(m.determinant().abs(), BigInt::one());
        }
        assert!(unimodular_completion(&iv(&[2, 4])).is_err());
    }

    #[test]
    fn inverse_of_unimodular() {
        let m = IntMatrix::from_rows(vec![iv(&[1, 0]), iv(&[1, 1])]).unwrap();
        let inv = m.unimodular_inverse().unwrap();
        assert_eq!(inv, IntMatrix::from_rows(vec![iv(&[1, 0]), iv(&[-1, 1])]).unwrap());
    }

    #[test]
    fn lattice_basis_extension() {
        assert!(extends_to_lattice_basis(&[iv(&[0, 1]), iv(&[1, 5])]));
        assert!(!extends_to_lattice_basis(&[iv(&[0, 1]), iv(&[4, -3])]));
        assert!(extends_to_lattice_basis(&[iv(&[1, 1, 0])]));
        assert!(!extends_to_lattice_basis(&[iv(&[1, 1, 0]), iv(&[1, -1, 0])]));
    }

    #[test]
    fn rank_counts_independent_rows() {
        let a = iv(&[1, 2, 3]);
        let b = iv(&[2, 4, 6]);
        let c = iv(&[0, 1, 0]);
        assert_eq!(rank(&[&a, &b]), 1);
        assert_eq!(rank(&[&a, &b, &c]), 2);
    }
}
