//! Words in a free group `F_m` on letters `b_1, ..., b_m`, and endomorphisms
//! given by images of the letters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A freely reduced word; letter `k` stands for `b_k` and `-k` for `b_k^{-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord(Vec<i64>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn letter(k: i64) -> Self {
        assert!(k != 0, "letter 0 does not exist");
        FreeWord(vec![k])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = i64>) -> Self {
        let mut out: Vec<i64> = Vec::new();
        for x in letters {
            debug_assert!(x != 0);
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        FreeWord(out)
    }

    pub fn letters(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter index that occurs.
    pub fn max_letter(&self) -> usize {
        self.0.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        FreeWord::reduce(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::identity(), |acc, _| acc.mul(&base))
    }

    /// `g w g^{-1}`.
    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.mul(self).mul(&g.inverse())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&x| if x > 0 { format!("b{x}") } else { format!("b{}^-1", -x) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An endomorphism of `F_m` given by the images of `b_1, ..., b_m`.
///
/// `verified` is set only once the map has been certified invertible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeGroupAut {
    pub m: usize,
    pub images: Vec<FreeWord>,
    #[serde(default)]
    pub verified: bool,
}

impl FreeGroupAut {
    pub fn identity(m: usize) -> Self {
        FreeGroupAut { m, images: (1..=m as i64).map(FreeWord::letter).collect(), verified: true }
    }

    pub fn new(m: usize, images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != m {
            return Err(Error::BasisMismatch(m, images.len()));
        }
        if let Some(w) = images.iter().find(|w| w.max_letter() > m) {
            return Err(Error::BasisMismatch(m, w.max_letter()));
        }
        Ok(FreeGroupAut { m, images, verified: false })
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        FreeWord::reduce(w.0.iter().flat_map(|&x| {
            let img = &self.images[x.unsigned_abs() as usize - 1];
            if x > 0 {
                img.0.clone()
            } else {
                img.inverse().0
            }
        }))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeGroupAut) -> Result<FreeGroupAut> {
        if self.m != other.m {
            return Err(Error::BasisMismatch(self.m, other.m));
        }
        Ok(FreeGroupAut {
            m: self.m,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
            verified: false,
        })
    }

    /// True when every letter maps to itself.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, w)| w.0 == [k as i64 + 1])
    }

    /// True when this is conjugation by `g`.
    pub fn is_conjugation_by(&self, g: &FreeWord) -> bool {
        self.images.iter().enumerate().all(|(k, w)| *w == FreeWord::letter(k as i64 + 1).conjugate_by(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert!(FreeWord::reduce([1, 2, -2, -1]).is_identity());
        assert_eq!(FreeWord::reduce([1, 2, -2, 3]), FreeWord(vec![1, 3]));
        let w = FreeWord(vec![1, -2, 3]);
        assert!(w.mul(&w.inverse()).is_identity());
        assert_eq!(w.pow(-1), w.inverse());
        assert_eq!(w.to_string(), "b1 b2^-1 b3");
    }

    #[test]
    fn automorphism_composition() {
        // b1 ↦ b1 b2 has inverse b1 ↦ b1 b2^{-1}
        let f = FreeGroupAut::new(2, vec![FreeWord(vec![1, 2]), FreeWord(vec![2])]).unwrap();
        let g = FreeGroupAut::new(2, vec![FreeWord(vec![1, -2]), FreeWord(vec![2])]).unwrap();
        assert!(f.compose(&g).unwrap().is_identity());
        assert!(!f.is_identity());
        assert!(FreeGroupAut::identity(3).is_identity());
        assert!(FreeGroupAut::new(2, vec![FreeWord(vec![3]), FreeWord(vec![2])]).is_err());
        let c = FreeGroupAut::new(2, vec![FreeWord(vec![2, 1, -2]), FreeWord(vec![2])]).unwrap();
        assert!(c.is_conjugation_by(&FreeWord::letter(2)));
    }
}
