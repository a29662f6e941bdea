use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::WordError;
use crate::MAX_SIZE;

/// Preorder encoding of a rooted binary tree: `1` for an internal node, `0`
/// for a leaf.
///
/// The word is packed most-significant-first into a `u128`, so for two words
/// of the same size the integer order is the lexicographic order with
/// `0 < 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeWord {
    size: u8,
    bits: u128,
}

impl TreeWord {
    /// Validates a sequence of bits (`true` = internal node).
    pub fn from_bits(bits: &[bool]) -> Result<Self, WordError> {
        if bits.is_empty() {
            return Err(WordError::Empty);
        }
        let ones = bits.iter().filter(|b| **b).count();
        let zeros = bits.len() - ones;
        if ones == 0 {
            return Err(WordError::WrongCounts { ones, zeros });
        }
        if ones > MAX_SIZE {
            return Err(WordError::TooLarge(ones));
        }
        // `open` counts leaves still owed; a rooted tree starts owing one.
        let mut open: usize = 1;
        let mut packed: u128 = 0;
        for (i, &b) in bits.iter().enumerate() {
            if open == 0 {
                return Err(WordError::PrefixViolation { position: i - 1 });
            }
            if b {
                open += 1;
            } else {
                open -= 1;
            }
            packed = (packed << 1) | b as u128;
        }
        if zeros != ones + 1 {
            return Err(WordError::WrongCounts { ones, zeros });
        }
        debug_assert_eq!(open, 0);
        Ok(TreeWord { size: ones as u8, bits: packed })
    }

    /// Rebuilds a word from its packed form without validation.
    pub(crate) fn from_packed(size: usize, bits: u128) -> Self {
        TreeWord { size: size as u8, bits }
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn len(&self) -> usize {
        2 * self.size() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn packed(&self) -> u128 {
        self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len());
        (self.bits >> (self.len() - 1 - i)) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.bit(i))
    }

    /// All valid words of the given size, in lexicographic order.
    pub fn all(size: usize) -> Vec<TreeWord> {
        fn rec(size: usize, ones: usize, zeros: usize, acc: u128, out: &mut Vec<TreeWord>) {
            if ones == size && zeros == size + 1 {
                out.push(TreeWord::from_packed(size, acc));
                return;
            }
            // A zero is allowed while the prefix still owes a leaf and the
            // word is not closed off early.
            let owed = ones + 1 - zeros;
            if owed > 1 || (owed == 1 && ones == size) {
                rec(size, ones, zeros + 1, acc << 1, out);
            }
            if ones < size {
                rec(size, ones + 1, zeros, (acc << 1) | 1, out);
            }
        }
        let mut out = Vec::new();
        if (1..=MAX_SIZE).contains(&size) {
            rec(size, 0, 0, 0, &mut out);
        }
        out
    }
}

impl FromStr for TreeWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut bits = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                found => return Err(WordError::BadCharacter { position, found }),
            }
        }
        TreeWord::from_bits(&bits)
    }
}

impl fmt::Display for TreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for TreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeWord({self})")
    }
}

impl Serialize for TreeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TreeWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Validates a textual tree word.
pub fn validate_word(text: &str) -> Result<TreeWord, WordError> {
    text.parse()
}
