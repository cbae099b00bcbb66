//! Exact integer lattice vectors and the signed-permutation group action.
//!
//! All arithmetic is checked: an operation that would overflow `i64`
//! returns [`Error::Overflow`] instead of wrapping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::gcd_u64;

/// A point of Z^d. Ordering is lexicographic on the entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVec(pub Vec<i64>);

impl IntVec {
    pub fn zero(d: usize) -> Self {
        IntVec(vec![0; d])
    }

    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = vec![0; d];
        v[i] = 1;
        IntVec(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// gcd of the absolute values of the entries; 0 iff the zero vector.
    pub fn gcd(&self) -> u64 {
        self.0
            .iter()
            .fold(0u64, |g, &x| gcd_u64(g, x.unsigned_abs()))
    }

    /// True iff the first nonzero entry is positive. The zero vector is
    /// not lex-positive.
    pub fn is_lex_positive(&self) -> bool {
        for &x in &self.0 {
            if x != 0 {
                return x > 0;
            }
        }
        false
    }

    /// ‖v‖_q ≤ p, compared in exact integer arithmetic: for finite q the
    /// test is Σ|vᵢ|^q ≤ p^q, avoiding irrational roots.
    pub fn norm_le(&self, q: Norm, p: u64) -> Result<bool> {
        match q {
            Norm::LInf => Ok(self.0.iter().all(|&x| x.unsigned_abs() <= p)),
            Norm::Finite(q) => {
                let q = q as u32;
                let bound = (p as i128).checked_pow(q).ok_or(Error::Overflow)?;
                let mut sum: i128 = 0;
                for &x in &self.0 {
                    let t = (x.unsigned_abs() as i128)
                        .checked_pow(q)
                        .ok_or(Error::Overflow)?;
                    sum = sum.checked_add(t).ok_or(Error::Overflow)?;
                    if sum > bound {
                        return Ok(false);
                    }
                }
                Ok(sum <= bound)
            }
        }
    }

    pub fn checked_add(&self, other: &IntVec) -> Result<IntVec> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let mut out = Vec::with_capacity(self.dim());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(b).ok_or(Error::Overflow)?);
        }
        Ok(IntVec(out))
    }

    pub fn checked_sub(&self, other: &IntVec) -> Result<IntVec> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let mut out = Vec::with_capacity(self.dim());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(b).ok_or(Error::Overflow)?);
        }
        Ok(IntVec(out))
    }

    pub fn negated(&self) -> Result<IntVec> {
        let mut out = Vec::with_capacity(self.dim());
        for &a in &self.0 {
            out.push(a.checked_neg().ok_or(Error::Overflow)?);
        }
        Ok(IntVec(out))
    }

    /// Exact dot product in i128 (cannot overflow for desk-scale inputs).
    pub fn dot(&self, other: &IntVec) -> Result<i128> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let mut acc: i128 = 0;
        for (&a, &b) in self.0.iter().zip(&other.0) {
            let t = (a as i128).checked_mul(b as i128).ok_or(Error::Overflow)?;
            acc = acc.checked_add(t).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Componentwise positive part g⁺ (max(gᵢ, 0)).
    pub fn positive_part(&self) -> IntVec {
        IntVec(self.0.iter().map(|&x| x.max(0)).collect())
    }

    /// Componentwise negative part g⁻, so that g = g⁺ − g⁻ with both parts
    /// nonnegative.
    pub fn negative_part(&self) -> IntVec {
        IntVec(self.0.iter().map(|&x| (-x).max(0)).collect())
    }

    /// Divide by the gcd of the entries; the zero vector is unchanged.
    pub fn primitive(&self) -> IntVec {
        let g = self.gcd();
        if g <= 1 {
            return self.clone();
        }
        IntVec(self.0.iter().map(|&x| x / g as i64).collect())
    }
}

/// The q selector of a q-norm: ∞ or a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Norm {
    LInf,
    Finite(u64),
}

impl Norm {
    pub fn parse(s: &str) -> Result<Norm> {
        match s {
            "inf" | "infinity" | "oo" => Ok(Norm::LInf),
            _ => {
                let q: u64 = s
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad norm selector: {s}")))?;
                if q == 0 {
                    return Err(Error::InvalidInput("norm selector must be positive".into()));
                }
                Ok(Norm::Finite(q))
            }
        }
    }
}

impl std::fmt::Display for Norm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Norm::LInf => write!(f, "inf"),
            Norm::Finite(q) => write!(f, "{q}"),
        }
    }
}

/// An element of the signed-permutation group B_d: a coordinate
/// permutation followed by sign flips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    /// perm[i] = source index of output coordinate i.
    perm: Vec<usize>,
    /// Entries are exactly ±1.
    flips: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, flips: Vec<i64>) -> Result<Self> {
        let d = perm.len();
        if flips.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: flips.len(),
            });
        }
        let mut seen = vec![false; d];
        for &p in &perm {
            if p >= d || seen[p] {
                return Err(Error::InvalidInput("perm is not a bijection".into()));
            }
            seen[p] = true;
        }
        if flips.iter().any(|&f| f != 1 && f != -1) {
            return Err(Error::InvalidInput("flips must be ±1".into()));
        }
        Ok(SignedPermutation { perm, flips })
    }

    pub fn identity(d: usize) -> Self {
        SignedPermutation {
            perm: (0..d).collect(),
            flips: vec![1; d],
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// wᵢ = flipsᵢ · v_{perm(i)}.
    pub fn apply(&self, v: &IntVec) -> Result<IntVec> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.dim(),
            });
        }
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            out.push(
                self.flips[i]
                    .checked_mul(v.0[self.perm[i]])
                    .ok_or(Error::Overflow)?,
            );
        }
        Ok(IntVec(out))
    }

    /// All 2^d·d! elements of B_d. Intended for small d only.
    pub fn all(d: usize) -> Vec<SignedPermutation> {
        let mut perms = Vec::new();
        let mut idx: Vec<usize> = (0..d).collect();
        permutations(&mut idx, 0, &mut perms);
        let mut out = Vec::with_capacity(perms.len() << d);
        for perm in &perms {
            for mask in 0u32..(1 << d) {
                let flips = (0..d)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(SignedPermutation {
                    perm: perm.clone(),
                    flips,
                });
            }
        }
        out
    }
}

fn permutations(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == idx.len() {
        out.push(idx.clone());
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permutations(idx, k + 1, out);
        idx.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_vec_examples() {
        assert_eq!(IntVec(vec![2, 4]).gcd(), 2);
        assert_eq!(IntVec(vec![0, 3]).gcd(), 3);
        assert_eq!(IntVec(vec![1, -1]).gcd(), 1);
        assert_eq!(IntVec(vec![0, 0]).gcd(), 0);
    }

    #[test]
    fn lex_positive_examples() {
        assert!(IntVec(vec![0, 1]).is_lex_positive());
        assert!(!IntVec(vec![-1, 2]).is_lex_positive());
        assert!(!IntVec(vec![0, 0]).is_lex_positive());
    }

    #[test]
    fn norm_le_examples() {
        assert!(IntVec(vec![1, -1]).norm_le(Norm::Finite(1), 2).unwrap());
        assert!(IntVec(vec![1, 2]).norm_le(Norm::LInf, 2).unwrap());
        assert!(!IntVec(vec![1, 1, 1]).norm_le(Norm::Finite(1), 2).unwrap());
    }

    #[test]
    fn signed_perm_examples() {
        let v = IntVec(vec![5, 3, 1]);
        let id = SignedPermutation::identity(3);
        assert_eq!(id.apply(&v).unwrap(), v);

        let swap = SignedPermutation::new(vec![1, 0], vec![1, 1]).unwrap();
        assert_eq!(
            swap.apply(&IntVec(vec![1, -1])).unwrap(),
            IntVec(vec![-1, 1])
        );

        let neg = SignedPermutation::new(vec![0, 1, 2], vec![-1, -1, -1]).unwrap();
        assert_eq!(neg.apply(&v).unwrap(), IntVec(vec![-5, -3, -1]));
    }

    #[test]
    fn signed_perm_group_size() {
        assert_eq!(SignedPermutation::all(3).len(), 48);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let swap = SignedPermutation::new(vec![1, 0], vec![1, 1]).unwrap();
        assert!(swap.apply(&IntVec(vec![1, 2, 3])).is_err());
    }
}
