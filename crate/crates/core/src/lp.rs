//! Exact linear feasibility for strict separation systems.
//!
//! The single primitive here answers: given integer rows b_1, …, b_n ∈ Z^d,
//! is there an h with b_k·h > 0 for every k? Scaling makes this equivalent
//! to b_k·h ≥ 1, which is what we solve. Both sign-vector feasibility in
//! zonotope vertex enumeration and the extreme-point test for point sets
//! reduce to this.
//!
//! By Gordan's theorem the system is infeasible iff some nonzero y ≥ 0 has
//! Bᵀy = 0, so we solve the bounded LP
//!
//!   max Σy  s.t.  Bᵀy ≤ 0,  −Bᵀy ≤ 0,  Σy ≤ 1,  y ≥ 0
//!
//! whose optimum is 0 (feasible) or 1 (infeasible). The tableau has only
//! 2d+1 rows regardless of n. Simplex runs fraction-free: the tableau stays
//! integer, scaled by the positive determinant of the current basis, and
//! every division in the Bareiss-style pivot update is exact. Bland's rule
//! guarantees termination despite the heavy degeneracy of the zero rhs.
//! An integer witness h falls out of the dual values at optimality; the
//! certificate (witness or Farkas vector) is re-verified before returning.

use crate::error::{Error, Result};

/// Reusable solver workspace. One instance per thread; `find_witness` may
/// be called any number of times with varying sizes.
#[derive(Default)]
pub struct SeparatorSolver {
    tab: Vec<i128>,
    basis: Vec<usize>,
}

fn cadd(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn cmul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

impl SeparatorSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Find an integer h with rows[k]·h ≥ 1 for all k, or None if no such
    /// h exists. `rows` is a flat n×d buffer, row-major. The returned
    /// witness is primitive (entries divided by their gcd).
    pub fn find_witness(&mut self, rows: &[i64], n: usize, d: usize) -> Result<Option<Vec<i64>>> {
        assert_eq!(rows.len(), n * d);
        if n == 0 {
            return Ok(Some(vec![0; d]));
        }
        let r = 2 * d + 1; // constraint rows
        let cols = n + r + 1; // y columns, slack columns, rhs
        let obj = r; // objective row index

        self.tab.clear();
        self.tab.resize((r + 1) * cols, 0);
        let tab = &mut self.tab;
        let at = |i: usize, j: usize| i * cols + j;

        for k in 0..n {
            for j in 0..d {
                let v = rows[k * d + j] as i128;
                tab[at(j, k)] = v;
                tab[at(d + j, k)] = -v;
            }
            tab[at(2 * d, k)] = 1;
            tab[at(obj, k)] = 1;
        }
        for i in 0..r {
            tab[at(i, n + i)] = 1;
        }
        tab[at(2 * d, cols - 1)] = 1;

        self.basis.clear();
        self.basis.extend(n..n + r);
        let mut delta: i128 = 1;

        let max_iters = 200 * (r + n + 8);
        let mut iters = 0;
        loop {
            iters += 1;
            if iters > max_iters {
                return Err(Error::Internal("simplex iteration cap exceeded".into()));
            }
            // Bland: entering variable = smallest index with positive reduced cost.
            let mut enter = None;
            for j in 0..n + r {
                if tab[at(obj, j)] > 0 {
                    enter = Some(j);
                    break;
                }
            }
            let Some(s) = enter else { break };

            // Ratio test, ties broken by smallest basic variable index.
            let mut leave: Option<usize> = None;
            for i in 0..r {
                let tis = tab[at(i, s)];
                if tis <= 0 {
                    continue;
                }
                match leave {
                    None => leave = Some(i),
                    Some(l) => {
                        let lhs = cmul(tab[at(i, cols - 1)], tab[at(l, s)])?;
                        let rhs = cmul(tab[at(l, cols - 1)], tis)?;
                        if lhs < rhs || (lhs == rhs && self.basis[i] < self.basis[l]) {
                            leave = Some(i);
                        }
                    }
                }
            }
            let Some(piv) = leave else {
                return Err(Error::Internal("bounded LP reported unbounded".into()));
            };

            // Fraction-free pivot on (piv, s): row piv is left as-is, every
            // other row updates by the Bareiss identity with exact division
            // by the previous scale.
            let pivot_val = tab[at(piv, s)];
            for i in 0..=r {
                if i == piv {
                    continue;
                }
                let tis = tab[at(i, s)];
                for j in 0..cols {
                    let num = cadd(
                        cmul(tab[at(i, j)], pivot_val)?,
                        -cmul(tis, tab[at(piv, j)])?,
                    )?;
                    debug_assert_eq!(num % delta, 0);
                    tab[at(i, j)] = num / delta;
                }
            }
            delta = pivot_val;
            self.basis[piv] = s;
        }

        // Optimum is −tab[obj][rhs]/delta, either 0 or 1.
        let neg_value = self.tab[at(obj, cols - 1)];
        if neg_value != 0 {
            // Infeasible: the basic y values form a Farkas certificate.
            let mut y = vec![0i128; n];
            for i in 0..r {
                if self.basis[i] < n {
                    y[self.basis[i]] = self.tab[at(i, cols - 1)];
                }
            }
            let mut nonzero = false;
            for j in 0..d {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc = cadd(acc, cmul(y[k], rows[k * d + j] as i128)?)?;
                }
                if acc != 0 {
                    return Err(Error::Internal("invalid Farkas certificate".into()));
                }
            }
            for &yk in &y {
                if yk < 0 {
                    return Err(Error::Internal("negative Farkas multiplier".into()));
                }
                nonzero |= yk != 0;
            }
            if !nonzero {
                return Err(Error::Internal("zero Farkas certificate".into()));
            }
            return Ok(None);
        }

        // Feasible: dual values of the paired ± rows give an integer
        // witness scaled by delta, so the raw difference already works.
        let mut h = Vec::with_capacity(d);
        for j in 0..d {
            let hi = cadd(
                self.tab[at(obj, n + d + j)],
                -self.tab[at(obj, n + j)],
            )?;
            let hi64 = i64::try_from(hi).map_err(|_| Error::Overflow)?;
            h.push(hi64);
        }
        // Reduce to primitive form; strict positivity is scale-invariant.
        let g = h.iter().fold(0u64, |g, &x| crate::num::gcd_u64(g, x.unsigned_abs()));
        if g > 1 {
            for x in &mut h {
                *x /= g as i64;
            }
        }
        for k in 0..n {
            let mut acc: i128 = 0;
            for j in 0..d {
                acc = cadd(acc, cmul(rows[k * d + j] as i128, h[j] as i128)?)?;
            }
            if acc < 1 {
                return Err(Error::Internal("witness fails strict separation".into()));
            }
        }
        Ok(Some(h))
    }
}

/// One-shot convenience wrapper around [`SeparatorSolver::find_witness`].
pub fn find_witness(rows: &[i64], n: usize, d: usize) -> Result<Option<Vec<i64>>> {
    SeparatorSolver::new().find_witness(rows, n, d)
}
