use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer vector with arbitrary-precision entries.
///
/// Ordering is lexicographic on the entries, which is the canonical order used
/// for rays, generators and cones throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[index] = BigInt::from(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Dot product against a machine-integer vector (exponents).
    pub fn dot_i64(&self, other: &[i64]) -> BigInt {
        debug_assert_eq!(self.dim(), other.len());
        self.0.iter().zip(other).map(|(a, &b)| a * b).sum()
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// The primitive vector on the same ray, or `None` for the zero vector.
    pub fn primitive(&self) -> Option<IntVector> {
        let g = self.content();
        if g.is_zero() {
            return None;
        }
        Some(IntVector(self.0.iter().map(|x| x / &g).collect()))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == BigInt::from(1)
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    /// `a * self + b * other`
    pub fn combine(a: &BigInt, x: &IntVector, b: &BigInt, y: &IntVector) -> IntVector {
        IntVector(x.0.iter().zip(&y.0).map(|(p, q)| a * p + b * q).collect())
    }

    pub fn to_i64s(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|x| x.to_i64().ok_or_else(|| Error::Overflow(x.to_string())))
            .collect()
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector::from(v.as_slice())
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector::from(&v[..])
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

// Entries are JSON integers when they fit in an i64 and decimal strings otherwise.
impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            match x.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Int(i64),
            Text(String),
        }

        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = IntVector;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of integers")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<IntVector, A::Error> {
                let mut out = Vec::new();
                while let Some(e) = seq.next_element::<Entry>()? {
                    out.push(match e {
                        Entry::Int(v) => BigInt::from(v),
                        Entry::Text(s) => s
                            .parse::<BigInt>()
                            .map_err(|_| de::Error::custom(format!("not an integer: {s}")))?,
                    });
                }
                Ok(IntVector(out))
            }
        }

        deserializer.deserialize_seq(EntriesVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_divides_out_content() {
        let v = IntVector::from([4, -2]);
        assert_eq!(v.primitive().unwrap(), IntVector::from([2, -1]));
        assert!(IntVector::zero(3).primitive().is_none());
        assert!(IntVector::from([3, 4]).is_primitive());
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![IntVector::from([1, 1]), IntVector::from([0, 5]), IntVector::from([1, 0])];
        v.sort();
        assert_eq!(v, vec![IntVector::from([0, 5]), IntVector::from([1, 0]), IntVector::from([1, 1])]);
    }

    #[test]
    fn json_entries() {
        let v = IntVector::from([3, -4]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[3,-4]");
        let back: IntVector = serde_json::from_str("[3,\"-4\"]").unwrap();
        assert_eq!(back, v);
    }
}
