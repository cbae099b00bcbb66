//! Enumeration of the primitive generator sets of Z_q(d,p), H_q(d,p) and
//! their positive variants.
//!
//! A generator is a primitive integer vector v (gcd of entries 1) with
//! ‖v‖_q ≤ p, taken lex-positive for the symmetric families and
//! componentwise nonnegative for the positive families. Enumeration walks
//! the box [−p,p]^d in lexicographic order, so output is sorted and
//! byte-stable; the walk is split over the first coordinate when the
//! `parallel` feature is on.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::vec::{IntVec, Norm};

/// Default cap on the number of generators; g(d,p) = O(p^d) explodes and
/// callers must fail gracefully.
pub const DEFAULT_GENERATOR_CAP: usize = 1_000_000;

/// An ordered, duplicate-free set of primitive lattice vectors together
/// with its (d, p, q, positivity) provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub d: usize,
    pub p: u64,
    pub q: Norm,
    pub positive: bool,
    generators: Vec<IntVec>,
}

impl GeneratorSet {
    /// Wrap an explicit generator list (e.g. a construction subset).
    /// The vectors must already be sorted, duplicate-free and primitive.
    pub fn from_vectors(d: usize, p: u64, q: Norm, positive: bool, generators: Vec<IntVec>) -> Result<Self> {
        for w in generators.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput("generators not strictly sorted".into()));
            }
        }
        for g in &generators {
            if g.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, got: g.dim() });
            }
            if g.gcd() != 1 {
                return Err(Error::InvalidInput(format!("non-primitive generator {:?}", g.0)));
            }
        }
        Ok(GeneratorSet { d, p, q, positive, generators })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVec> {
        self.generators.iter()
    }

    /// Componentwise sum of all generators (σ_q(d,p) for the full families).
    pub fn sum(&self) -> Result<IntVec> {
        let mut acc = IntVec::zero(self.d);
        for g in &self.generators {
            acc = acc.checked_add(g)?;
        }
        Ok(acc)
    }

    /// Largest absolute entry over all generators.
    pub fn max_abs_entry(&self) -> i64 {
        self.generators
            .iter()
            .flat_map(|g| g.as_slice().iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }

    /// A copy with the given vectors removed. Errors if any is absent.
    pub fn without(&self, removed: &[IntVec]) -> Result<GeneratorSet> {
        let mut generators = self.generators.clone();
        for r in removed {
            let pos = generators
                .iter()
                .position(|g| g == r)
                .ok_or_else(|| Error::InvalidInput(format!("vector {:?} not in generator set", r.0)))?;
            generators.remove(pos);
        }
        Ok(GeneratorSet { generators, ..self.clone() })
    }
}

fn keeps(v: &[i64], q: Norm, p: u64, positive: bool) -> Result<bool> {
    let iv = IntVec(v.to_vec());
    if iv.gcd() != 1 {
        return Ok(false);
    }
    if positive {
        if v.iter().any(|&x| x < 0) {
            return Ok(false);
        }
    } else if !iv.is_lex_positive() {
        return Ok(false);
    }
    iv.norm_le(q, p)
}

fn scan_suffix(prefix: &mut Vec<i64>, d: usize, lo: i64, hi: i64, out: &mut Vec<IntVec>, count: &mut u64, q: Norm, p: u64, positive: bool, materialize: bool) -> Result<()> {
    if prefix.len() == d {
        if keeps(prefix, q, p, positive)? {
            *count += 1;
            if materialize {
                out.push(IntVec(prefix.clone()));
            }
        }
        return Ok(());
    }
    for x in lo..=hi {
        prefix.push(x);
        scan_suffix(prefix, d, lo, hi, out, count, q, p, positive, materialize)?;
        prefix.pop();
    }
    Ok(())
}

fn scan(d: usize, p: u64, q: Norm, positive: bool, materialize: bool) -> Result<(u64, Vec<IntVec>)> {
    if d == 0 || p == 0 {
        return Err(Error::InvalidInput("d and p must be at least 1".into()));
    }
    let pi = i64::try_from(p).map_err(|_| Error::Overflow)?;
    let lo = if positive { 0 } else { -pi };
    let firsts: Vec<i64> = (lo..=pi).collect();
    let per_first = par::map_vec(&firsts, |&x0| -> Result<(u64, Vec<IntVec>)> {
        let mut out = Vec::new();
        let mut count = 0;
        let mut prefix = vec![x0];
        scan_suffix(&mut prefix, d, lo, pi, &mut out, &mut count, q, p, positive, materialize)?;
        Ok((count, out))
    });
    let mut total = 0;
    let mut all = Vec::new();
    for r in per_first {
        let (c, v) = r?;
        total += c;
        all.extend(v);
    }
    Ok((total, all))
}

/// Number of generators g(d,p) of the selected family, without
/// materializing the set.
pub fn generator_count(d: usize, p: u64, q: Norm, positive: bool) -> Result<u64> {
    Ok(scan(d, p, q, positive, false)?.0)
}

/// Enumerate the generator set, sorted lexicographically ascending.
pub fn enumerate_generators(d: usize, p: u64, q: Norm, positive: bool, cap: usize) -> Result<GeneratorSet> {
    let count = generator_count(d, p, q, positive)?;
    if count > cap as u64 {
        return Err(Error::CapExceeded { what: "generator", limit: cap });
    }
    let (_, generators) = scan(d, p, q, positive, true)?;
    debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
    Ok(GeneratorSet { d, p, q, positive, generators })
}
