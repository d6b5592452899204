use std::fmt;
use std::ops::{BitXor, BitXorAssign};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A row vector over GF(2) with at most 64 coordinates.
///
/// Coordinates are 1-based: coordinate `i` lives in bit `i - 1`, so the
/// integer encoding of a vector has coordinate 1 as its least significant
/// bit. The text form writes coordinate 1 leftmost; `e_1` of length 5 is
/// `"10000"` and encodes as the integer 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    bits: u64,
}

impl BitVec {
    pub const MAX_LEN: usize = 64;

    /// The zero vector of the given length. Panics above [`Self::MAX_LEN`].
    pub fn zeros(len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "length {len} exceeds 64");
        BitVec { len, bits: 0 }
    }

    /// The unit vector with a single one at `position` (1-based).
    pub fn unit(len: usize, position: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(position, true);
        v
    }

    /// Builds a vector from its integer encoding (coordinate 1 = bit 0).
    pub fn from_encoding(len: usize, encoding: u64) -> Self {
        let v = Self::zeros(len);
        assert_eq!(encoding & !v.mask(), 0, "encoding has bits beyond length {len}");
        BitVec { len, bits: encoding }
    }

    /// Builds a vector with ones exactly at the given 1-based positions.
    pub fn from_support(len: usize, positions: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &p in positions {
            v.set(p, true);
        }
        v
    }

    fn mask(&self) -> u64 {
        if self.len == 64 {
            u64::MAX
        } else {
            (1u64 << self.len) - 1
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn encoding(&self) -> u64 {
        self.bits
    }

    /// Coordinate at `position` (1-based). Panics out of range.
    pub fn get(&self, position: usize) -> bool {
        assert!(position >= 1 && position <= self.len, "position {position} out of 1..={}", self.len);
        (self.bits >> (position - 1)) & 1 == 1
    }

    pub fn set(&mut self, position: usize, value: bool) {
        assert!(position >= 1 && position <= self.len, "position {position} out of 1..={}", self.len);
        if value {
            self.bits |= 1 << (position - 1);
        } else {
            self.bits &= !(1 << (position - 1));
        }
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// The 1-based positions of the nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        let mut b = self.bits;
        while b != 0 {
            out.push(b.trailing_zeros() as usize + 1);
            b &= b - 1;
        }
        out
    }

    /// Inner product over GF(2). Panics on length mismatch.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "dot of lengths {} and {}", self.len, other.len);
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// `|supp(self) ∩ supp(other)|`. Panics on length mismatch.
    pub fn overlap(&self, other: &BitVec) -> usize {
        assert_eq!(self.len, other.len, "overlap of lengths {} and {}", self.len, other.len);
        (self.bits & other.bits).count_ones() as usize
    }

    /// Parses the text form: '0'/'1' characters, coordinate 1 leftmost.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse("empty bit string"));
        }
        if s.len() > Self::MAX_LEN {
            return Err(Error::LengthTooLong(s.len()));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << i,
                '0' => {}
                other => return Err(Error::parse(format!("invalid character '{other}' in bit string"))),
            }
        }
        Ok(BitVec { len: s.len(), bits })
    }
}

impl BitXor for BitVec {
    type Output = BitVec;

    fn bitxor(self, rhs: BitVec) -> BitVec {
        assert_eq!(self.len, rhs.len, "xor of lengths {} and {}", self.len, rhs.len);
        BitVec { len: self.len, bits: self.bits ^ rhs.bits }
    }
}

impl BitXorAssign for BitVec {
    fn bitxor_assign(&mut self, rhs: BitVec) {
        *self = *self ^ rhs;
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if (self.bits >> i) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for BitVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        BitVec::parse(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_is_coordinate_one_leftmost() {
        let v = BitVec::parse("10001").unwrap();
        assert_eq!(v.len(), 5);
        assert!(v.get(1));
        assert!(v.get(5));
        assert!(!v.get(2));
        assert_eq!(v.encoding(), 0b10001);
        assert_eq!(v.to_string(), "10001");
        assert_eq!(v.support(), vec![1, 5]);
    }

    #[test]
    fn unit_vectors() {
        let e2 = BitVec::unit(4, 2);
        assert_eq!(e2.to_string(), "0100");
        assert_eq!(e2.encoding(), 2);
        assert_eq!(e2.weight(), 1);
    }

    #[test]
    fn xor_and_dot() {
        let a = BitVec::parse("1100").unwrap();
        let b = BitVec::parse("0110").unwrap();
        assert_eq!((a ^ b).to_string(), "1010");
        assert!(a.dot(&b)); // one common position
        assert_eq!(a.overlap(&b), 1);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(BitVec::parse("10x1").is_err());
        assert!(BitVec::parse("").is_err());
        assert!(BitVec::parse(&"1".repeat(65)).is_err());
    }

    #[test]
    fn length_64_works() {
        let v = BitVec::from_encoding(64, u64::MAX);
        assert_eq!(v.weight(), 64);
        assert_eq!(v.to_string().len(), 64);
    }
}
