//! Extreme points of a finite integer point set, in exact arithmetic.
//!
//! A point v is a vertex of conv(P) iff some h satisfies
//! h·v ≥ h·u + 1 for every other u — the same strict-separation system
//! solved in [`crate::lp`]. A cheap two-stage scheme keeps this usable on
//! thousands of points: first discard everything inside the hull of a
//! small inner sample (argmax points over fixed directions), then run the
//! full test against the shrinking candidate set.

use crate::error::{Error, Result};
use crate::lp::SeparatorSolver;
use crate::par;
use crate::vec::IntVec;

fn diff_rows(v: &IntVec, others: &[&IntVec], buf: &mut Vec<i64>) -> Result<usize> {
    buf.clear();
    let d = v.dim();
    for u in others {
        for j in 0..d {
            buf.push(
                v.as_slice()[j]
                    .checked_sub(u.as_slice()[j])
                    .ok_or(Error::Overflow)?,
            );
        }
    }
    Ok(others.len())
}

/// Deterministic direction sample: signed axes plus xorshift-seeded
/// small integer vectors.
fn directions(d: usize) -> Vec<Vec<i64>> {
    let mut dirs = Vec::new();
    for i in 0..d {
        let mut e = vec![0i64; d];
        e[i] = 1;
        dirs.push(e.clone());
        e[i] = -1;
        dirs.push(e);
    }
    let mut state = 0x853c49e6748fea9bu64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..(8 * d + 24) {
        let v: Vec<i64> = (0..d).map(|_| (next() % 19) as i64 - 9).collect();
        if v.iter().any(|&x| x != 0) {
            dirs.push(v);
        }
    }
    dirs
}

fn argmax(points: &[IntVec], dir: &[i64]) -> Result<usize> {
    let mut best = 0usize;
    let mut best_val: Option<i128> = None;
    for (i, p) in points.iter().enumerate() {
        let mut val: i128 = 0;
        for (x, c) in p.as_slice().iter().zip(dir) {
            val = val
                .checked_add((*x as i128).checked_mul(*c as i128).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        if best_val.map_or(true, |b| val > b) {
            best_val = Some(val);
            best = i;
        }
    }
    Ok(best)
}

/// The subset of `points` that are vertices of their convex hull, sorted.
/// Input need not be sorted or duplicate-free.
pub fn extreme_points(points: &[IntVec]) -> Result<Vec<IntVec>> {
    let mut pts: Vec<IntVec> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(pts);
    }
    let d = pts[0].dim();
    if pts.iter().any(|p| p.dim() != d) {
        return Err(Error::InvalidInput("mixed dimensions in point set".into()));
    }

    // Inner sample: argmax points over the fixed direction set.
    let mut sample_idx: Vec<usize> = Vec::new();
    for dir in directions(d) {
        sample_idx.push(argmax(&pts, &dir)?);
    }
    sample_idx.sort_unstable();
    sample_idx.dedup();
    let in_sample: Vec<bool> = {
        let mut b = vec![false; pts.len()];
        for &i in &sample_idx {
            b[i] = true;
        }
        b
    };
    let sample: Vec<&IntVec> = sample_idx.iter().map(|&i| &pts[i]).collect();

    // Stage 1: anything inside conv(sample) is not a vertex.
    let idxs: Vec<usize> = (0..pts.len()).collect();
    let stage1 = par::map_with(
        &idxs,
        || (SeparatorSolver::new(), Vec::new()),
        |(solver, buf), &i| -> Result<bool> {
            if in_sample[i] {
                return Ok(true);
            }
            let n = diff_rows(&pts[i], &sample, buf)?;
            Ok(solver.find_witness(buf, n, d)?.is_some())
        },
    );
    let mut alive: Vec<bool> = stage1.into_iter().collect::<Result<Vec<_>>>()?;

    // Stage 2: exact test against the surviving candidates, which always
    // include every true vertex, shrinking as non-vertices are dropped.
    let mut solver = SeparatorSolver::new();
    let mut buf = Vec::new();
    for i in 0..pts.len() {
        if !alive[i] {
            continue;
        }
        let others: Vec<&IntVec> = (0..pts.len())
            .filter(|&j| j != i && alive[j])
            .map(|j| &pts[j])
            .collect();
        if others.is_empty() {
            continue;
        }
        let n = diff_rows(&pts[i], &others, &mut buf)?;
        if solver.find_witness(&buf, n, d)?.is_none() {
            alive[i] = false;
        }
    }

    Ok(pts
        .into_iter()
        .zip(alive)
        .filter_map(|(p, keep)| keep.then_some(p))
        .collect())
}
