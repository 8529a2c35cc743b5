use std::cmp::Ordering;

use crate::error::{Error, Result};

use super::Exponent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    Lex,
    RevLex,
}

/// A monomial order given by integer weight rows compared in sequence, then
/// a lexicographic or reverse-lexicographic tiebreak on the exponents.
///
/// Every comparison goes through a linear sort key (row values followed by
/// the signed exponents), so `key(a + b) = key(a) + key(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    nvars: usize,
    weight_rows: Vec<Vec<i64>>,
    tiebreak: Tiebreak,
}

impl TermOrder {
    /// Errors unless every row has `nvars` entries and every variable is
    /// strictly greater than 1, which for a key-linear order makes it a term
    /// order (1 minimal, multiplicative, total).
    pub fn new(nvars: usize, weight_rows: Vec<Vec<i64>>, tiebreak: Tiebreak) -> Result<Self> {
        if let Some(r) = weight_rows.iter().find(|r| r.len() != nvars) {
            return Err(Error::DimensionMismatch { expected: nvars, found: r.len() });
        }
        let order = TermOrder { nvars, weight_rows, tiebreak };
        for i in 0..nvars {
            let mut e = vec![0u32; nvars];
            e[i] = 1;
            if order.key(&e).iter().find(|&&x| x != 0).is_none_or(|&x| x < 0) {
                return Err(Error::InvalidOrder(format!("variable {i} is not greater than 1")));
            }
        }
        Ok(order)
    }

    pub fn lex(nvars: usize) -> Self {
        TermOrder { nvars, weight_rows: Vec::new(), tiebreak: Tiebreak::Lex }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        TermOrder { nvars, weight_rows: vec![vec![1; nvars]], tiebreak: Tiebreak::RevLex }
    }

    /// Block order in which any monomial involving one of the first
    /// `eliminate` variables beats every monomial in the remaining ones;
    /// ties are broken lexicographically in variable order.
    pub fn elimination(nvars: usize, eliminate: usize) -> Self {
        let row = (0..nvars).map(|i| i64::from(i < eliminate)).collect();
        TermOrder { nvars, weight_rows: vec![row], tiebreak: Tiebreak::Lex }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weight_rows(&self) -> &[Vec<i64>] {
        &self.weight_rows
    }

    pub fn tiebreak(&self) -> Tiebreak {
        self.tiebreak
    }

    pub fn key(&self, e: &[u32]) -> Vec<i64> {
        let mut key = Vec::with_capacity(self.weight_rows.len() + self.nvars);
        for row in &self.weight_rows {
            key.push(row.iter().zip(e).map(|(w, &x)| w * i64::from(x)).sum());
        }
        match self.tiebreak {
            Tiebreak::Lex => key.extend(e.iter().map(|&x| i64::from(x))),
            Tiebreak::RevLex => key.extend(e.iter().rev().map(|&x| -i64::from(x))),
        }
        key
    }

    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}
