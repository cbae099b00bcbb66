//! Zonotope vertex enumeration and derived quantities.
//!
//! A sign vector λ ∈ {±1}^m is feasible iff some h satisfies
//! λ_k(h·g_k) > 0 for all k, in which case Σλ_k g_k is a vertex of the
//! Z-form zonotope and h is a witness normal in its open normal cone.
//! Enumeration is breadth-first over feasible sign vectors, flipping one
//! sign at a time from a seed cell found by a generic objective; each
//! feasibility question is decided by the exact solver in [`crate::lp`].
//! Degenerate (non-simple) arrangements arise already for Z_1(3,2), so
//! nothing here uses floating point.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gens::GeneratorSet;
use crate::lp::SeparatorSolver;
use crate::par;
use crate::vec::IntVec;

/// Default cap on enumerated vertices; covers m(5,1) = 1 981 440 while
/// keeping m(6,1) out of reach by design.
pub const DEFAULT_VERTEX_CAP: usize = 2_500_000;

/// Widest supported generator set: sign vectors are stored as u128 masks.
pub const MAX_GENERATORS: usize = 128;

/// A ±1 assignment to the generators, bit k set meaning λ_k = +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    mask: u128,
    len: usize,
}

impl SignVector {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sign(&self, k: usize) -> i8 {
        debug_assert!(k < self.len);
        if self.mask >> k & 1 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn to_vec(&self) -> Vec<i8> {
        (0..self.len).map(|k| self.sign(k)).collect()
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    /// Rebuild from an explicit ±1 sequence (e.g. deserialized output).
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.len() > MAX_GENERATORS {
            return Err(Error::CapExceeded { what: "sign-vector width", limit: MAX_GENERATORS });
        }
        let mut mask: u128 = 0;
        for (k, &s) in signs.iter().enumerate() {
            match s {
                1 => mask |= 1 << k,
                -1 => {}
                _ => return Err(Error::InvalidInput(format!("sign entry {s} is not ±1"))),
            }
        }
        Ok(SignVector { mask, len: signs.len() })
    }
}

/// One zonotope vertex: its sign vector, the Z-form point Σλ_k g_k, the
/// H-form point Σ_{λ_k=+1} g_k, and an integer witness normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRecord {
    pub signs: SignVector,
    pub z_point: IntVec,
    pub h_point: IntVec,
    pub witness: IntVec,
}

/// Headline numbers for one zonotope.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZonotopeSummary {
    pub generator_count: usize,
    pub vertex_count: usize,
    pub diameter: usize,
    pub grid_k: i64,
    pub translation: IntVec,
}

fn flat_rows(g: &GeneratorSet) -> Vec<i64> {
    let mut flat = Vec::with_capacity(g.len() * g.d);
    for v in g.iter() {
        flat.extend_from_slice(v.as_slice());
    }
    flat
}

fn signed_rows(flat: &[i64], m: usize, d: usize, mask: u128, buf: &mut Vec<i64>) {
    buf.clear();
    for k in 0..m {
        let sgn: i64 = if mask >> k & 1 == 1 { 1 } else { -1 };
        for j in 0..d {
            buf.push(sgn * flat[k * d + j]);
        }
    }
}

/// Seed sign vector from a generic objective: coordinates weighted by
/// decreasing powers of a base larger than any single-coordinate
/// contribution, so no dot product with a generator can vanish.
fn seed_mask(g: &GeneratorSet) -> Result<u128> {
    let d = g.d;
    let base: i128 = (g.max_abs_entry() as i128) * (d as i128) * (g.len() as i128) + 2;
    let mut c = vec![0i128; d];
    let mut pw: i128 = 1;
    for j in (0..d).rev() {
        c[j] = pw;
        pw = pw.checked_mul(base).ok_or(Error::Overflow)?;
    }
    let mut mask: u128 = 0;
    for (k, v) in g.iter().enumerate() {
        let mut dot: i128 = 0;
        for j in 0..d {
            dot = dot
                .checked_add(c[j].checked_mul(v.as_slice()[j] as i128).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        if dot == 0 {
            return Err(Error::Internal("generic objective hit a generator hyperplane".into()));
        }
        if dot > 0 {
            mask |= 1 << k;
        }
    }
    Ok(mask)
}

/// Breadth-first enumeration of feasible sign vectors with witnesses.
fn enumerate_cells(g: &GeneratorSet, vertex_cap: usize) -> Result<Vec<(u128, Vec<i64>)>> {
    let m = g.len();
    let d = g.d;
    if m == 0 {
        return Err(Error::InvalidInput("empty generator set".into()));
    }
    if m > MAX_GENERATORS {
        return Err(Error::CapExceeded { what: "sign-vector width", limit: MAX_GENERATORS });
    }
    let flat = flat_rows(g);

    let seed = seed_mask(g)?;
    let mut solver = SeparatorSolver::new();
    let mut buf = Vec::with_capacity(m * d);
    signed_rows(&flat, m, d, seed, &mut buf);
    let seed_witness = solver
        .find_witness(&buf, m, d)?
        .ok_or_else(|| Error::Internal("seed sign vector infeasible".into()))?;

    let mut visited: HashSet<u128> = HashSet::new();
    visited.insert(seed);
    // Caching infeasible neighbors trades memory for fewer LP solves; for
    // very wide sets the cache would dominate memory, so skip it there.
    let cache_infeasible = m <= 64;
    let mut infeasible: HashSet<u128> = HashSet::new();
    let mut cells: Vec<(u128, Vec<i64>)> = vec![(seed, seed_witness)];
    let mut frontier: Vec<u128> = vec![seed];

    while !frontier.is_empty() {
        let mut candidates: Vec<u128> = Vec::with_capacity(frontier.len() * m);
        for &mask in &frontier {
            for k in 0..m {
                let flipped = mask ^ (1 << k);
                if !visited.contains(&flipped) && !(cache_infeasible && infeasible.contains(&flipped)) {
                    candidates.push(flipped);
                }
            }
        }
        candidates.sort_unstable();
        candidates.dedup();

        let solved = par::map_with(
            &candidates,
            || (SeparatorSolver::new(), Vec::with_capacity(m * d)),
            |(solver, buf), &mask| {
                signed_rows(&flat, m, d, mask, buf);
                solver.find_witness(buf, m, d)
            },
        );

        frontier.clear();
        for (&mask, res) in candidates.iter().zip(solved) {
            match res? {
                Some(witness) => {
                    visited.insert(mask);
                    frontier.push(mask);
                    cells.push((mask, witness));
                    if cells.len() > vertex_cap {
                        return Err(Error::CapExceeded { what: "vertex", limit: vertex_cap });
                    }
                }
                None => {
                    if cache_infeasible {
                        infeasible.insert(mask);
                    }
                }
            }
        }
    }
    Ok(cells)
}

fn z_point_of(g: &GeneratorSet, mask: u128) -> Result<IntVec> {
    let mut acc = IntVec::zero(g.d);
    for (k, v) in g.iter().enumerate() {
        acc = if mask >> k & 1 == 1 {
            acc.checked_add(v)?
        } else {
            acc.checked_sub(v)?
        };
    }
    Ok(acc)
}

fn h_point_of(g: &GeneratorSet, mask: u128) -> Result<IntVec> {
    let mut acc = IntVec::zero(g.d);
    for (k, v) in g.iter().enumerate() {
        if mask >> k & 1 == 1 {
            acc = acc.checked_add(v)?;
        }
    }
    Ok(acc)
}

/// Enumerate all vertices of the zonotope of `g`, each with a witness
/// normal, sorted lexicographically by Z-form point.
pub fn enumerate_vertices(g: &GeneratorSet, vertex_cap: usize) -> Result<Vec<VertexRecord>> {
    let cells = enumerate_cells(g, vertex_cap)?;
    let m = g.len();
    let built = par::map_vec(&cells, |(mask, witness)| -> Result<VertexRecord> {
        Ok(VertexRecord {
            signs: SignVector { mask: *mask, len: m },
            z_point: z_point_of(g, *mask)?,
            h_point: h_point_of(g, *mask)?,
            witness: IntVec(witness.clone()),
        })
    });
    let mut records = built.into_iter().collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.z_point.cmp(&b.z_point));
    Ok(records)
}

/// Number of vertices, without building full records.
pub fn vertex_count(g: &GeneratorSet, vertex_cap: usize) -> Result<usize> {
    Ok(enumerate_cells(g, vertex_cap)?.len())
}

/// m(d,p): the number of vertices of H_∞(d,p).
pub fn m_count(d: usize, p: u64, generator_cap: usize, vertex_cap: usize) -> Result<usize> {
    let g = crate::gens::enumerate_generators(d, p, crate::vec::Norm::LInf, false, generator_cap)?;
    vertex_count(&g, vertex_cap)
}

/// All 2^m signed sums that are vertices of their convex hull, computed
/// without any of the sign-vector machinery; the test oracle for
/// [`enumerate_vertices`].
pub fn brute_force_vertices(g: &GeneratorSet) -> Result<Vec<IntVec>> {
    let m = g.len();
    if m > 16 {
        return Err(Error::InvalidInput("brute force limited to 16 generators".into()));
    }
    if m == 0 {
        return Err(Error::InvalidInput("empty generator set".into()));
    }
    let mut points = Vec::with_capacity(1usize << m);
    for mask in 0u128..(1 << m) {
        points.push(z_point_of(g, mask)?);
    }
    points.sort();
    points.dedup();
    crate::hull::extreme_points(&points)
}

fn adjacency(masks: &[u128], m: usize) -> (HashMap<u128, u32>, Vec<Vec<u32>>) {
    let index: HashMap<u128, u32> = masks.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let adj: Vec<Vec<u32>> = par::map_vec(masks, |&mask| {
        (0..m)
            .filter_map(|k| index.get(&(mask ^ (1 << k))).copied())
            .collect()
    });
    (index, adj)
}

fn eccentricity(adj: &[Vec<u32>], src: u32) -> usize {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[src as usize] = 0;
    let mut frontier = vec![src];
    let mut depth = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in &adj[v as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    next.push(w);
                }
            }
        }
        if !next.is_empty() {
            depth += 1;
        }
        frontier = next;
    }
    assert!(dist.iter().all(|&x| x != u32::MAX), "skeleton is disconnected");
    depth
}

/// Graph diameter of the vertex-edge skeleton: vertices are feasible sign
/// vectors, edges join pairs at Hamming distance one.
pub fn skeleton_diameter(g: &GeneratorSet, vertex_cap: usize) -> Result<usize> {
    let cells = enumerate_cells(g, vertex_cap)?;
    let masks: Vec<u128> = cells.into_iter().map(|(mask, _)| mask).collect();
    Ok(skeleton_diameter_of_masks(&masks, g.len()))
}

/// Skeleton diameter recomputed from existing vertex records (e.g. a
/// deserialized enumeration), without re-running the LP search.
pub fn skeleton_diameter_of_records(records: &[VertexRecord]) -> Result<usize> {
    let m = records
        .first()
        .ok_or_else(|| Error::InvalidInput("no vertex records".into()))?
        .signs
        .len();
    let masks: Vec<u128> = records.iter().map(|r| r.signs.mask()).collect();
    Ok(skeleton_diameter_of_masks(&masks, m))
}

fn skeleton_diameter_of_masks(masks: &[u128], m: usize) -> usize {
    let (_, adj) = adjacency(masks, m);
    let sources: Vec<u32> = (0..masks.len() as u32).collect();
    par::map_vec(&sources, |&s| eccentricity(&adj, s))
        .into_iter()
        .max()
        .unwrap_or(0)
}

/// Grid embedding size: k = max over axes of Σ|g_i|, and the translation
/// Σg⁻ that moves the H-form into [0,k]^d.
pub fn grid_size(g: &GeneratorSet) -> Result<(i64, IntVec)> {
    let d = g.d;
    let mut axis_sums = vec![0i64; d];
    let mut translation = IntVec::zero(d);
    for v in g.iter() {
        for j in 0..d {
            axis_sums[j] = axis_sums[j]
                .checked_add(v.as_slice()[j].abs())
                .ok_or(Error::Overflow)?;
        }
        translation = translation.checked_add(&v.negative_part())?;
    }
    Ok((axis_sums.into_iter().max().unwrap_or(0), translation))
}

/// Z-form vertices with strictly positive, weakly decreasing coordinates.
/// For the symmetric families these generate the full vertex set under
/// signed permutations.
pub fn canonical_vertices(g: &GeneratorSet, vertex_cap: usize) -> Result<Vec<IntVec>> {
    let records = enumerate_vertices(g, vertex_cap)?;
    Ok(canonical_of(&records))
}

pub fn canonical_of(records: &[VertexRecord]) -> Vec<IntVec> {
    records
        .iter()
        .map(|r| &r.z_point)
        .filter(|z| {
            let s = z.as_slice();
            s.windows(2).all(|w| w[0] >= w[1]) && *s.last().unwrap_or(&0) > 0
        })
        .cloned()
        .collect()
}

/// True iff every witness normal of `h_records` is maximized over
/// `p_vertices` at a unique point, i.e. each normal cone of H lands inside
/// a normal cone of P.
pub fn verify_refinement(h_records: &[VertexRecord], p_vertices: &[IntVec]) -> Result<bool> {
    if h_records.is_empty() || p_vertices.is_empty() {
        return Err(Error::InvalidInput("refinement check needs nonempty inputs".into()));
    }
    for r in h_records {
        let mut best: Option<i128> = None;
        let mut best_count = 0usize;
        for u in p_vertices {
            let val = r.witness.dot(u)?;
            match best {
                Some(b) if val < b => {}
                Some(b) if val == b => best_count += 1,
                _ => {
                    best = Some(val);
                    best_count = 1;
                }
            }
        }
        if best_count != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertex count, skeleton diameter and grid size in one pass.
pub fn summarize(g: &GeneratorSet, vertex_cap: usize) -> Result<ZonotopeSummary> {
    let cells = enumerate_cells(g, vertex_cap)?;
    let masks: Vec<u128> = cells.iter().map(|(mask, _)| *mask).collect();
    let diameter = skeleton_diameter_of_masks(&masks, g.len());
    let (grid_k, translation) = grid_size(g)?;
    Ok(ZonotopeSummary {
        generator_count: g.len(),
        vertex_count: cells.len(),
        diameter,
        grid_k,
        translation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens::{enumerate_generators, DEFAULT_GENERATOR_CAP};
    use crate::vec::Norm;

    fn gens(d: usize, p: u64, q: Norm, positive: bool) -> GeneratorSet {
        enumerate_generators(d, p, q, positive, DEFAULT_GENERATOR_CAP).unwrap()
    }

    fn z_points(records: &[VertexRecord]) -> Vec<Vec<i64>> {
        records.iter().map(|r| r.z_point.0.clone()).collect()
    }

    #[test]
    fn octagon_vertices() {
        let g = gens(2, 2, Norm::Finite(1), false);
        let records = enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap();
        let mut expect = vec![
            vec![-3, -1],
            vec![-3, 1],
            vec![-1, 3],
            vec![1, 3],
            vec![3, 1],
            vec![3, -1],
            vec![1, -3],
            vec![-1, -3],
        ];
        expect.sort();
        assert_eq!(z_points(&records), expect);
    }

    #[test]
    fn decagon_vertices() {
        let g = gens(2, 2, Norm::LInf, true);
        let records = enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap();
        let mut expect = vec![
            vec![-5, -5],
            vec![-5, -3],
            vec![-3, -5],
            vec![-3, 1],
            vec![-1, 3],
            vec![1, -3],
            vec![3, -1],
            vec![3, 5],
            vec![5, 3],
            vec![5, 5],
        ];
        expect.sort();
        assert_eq!(z_points(&records), expect);
    }

    #[test]
    fn unit_cube_vertices() {
        for d in 1..=4usize {
            let g = gens(d, 1, Norm::Finite(1), false);
            let records = enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap();
            assert_eq!(records.len(), 1 << d);
            for r in &records {
                assert!(r.z_point.as_slice().iter().all(|&x| x == 1 || x == -1));
            }
        }
    }

    #[test]
    fn truncated_cuboctahedron_counts() {
        let g = gens(3, 2, Norm::Finite(1), false);
        let records = enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(records.len(), 48);
        assert_eq!(skeleton_diameter(&g, DEFAULT_VERTEX_CAP).unwrap(), 9);
        assert_eq!(grid_size(&g).unwrap().0, 5);
    }

    #[test]
    fn witnesses_strictly_separate() {
        let g = gens(3, 2, Norm::Finite(1), false);
        for r in enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap() {
            for (k, v) in g.iter().enumerate() {
                let dot = r.witness.dot(v).unwrap();
                assert!(dot * r.signs.sign(k) as i128 >= 1);
            }
        }
    }

    #[test]
    fn z_h_relation() {
        let g = gens(3, 2, Norm::Finite(1), false);
        let sigma = g.sum().unwrap();
        for r in enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap() {
            let twice_h = r.h_point.checked_add(&r.h_point).unwrap();
            assert_eq!(r.z_point, twice_h.checked_sub(&sigma).unwrap());
        }
    }

    #[test]
    fn matches_brute_force_small() {
        for (d, p, q, positive) in [
            (2, 2, Norm::Finite(1), false),
            (2, 2, Norm::LInf, true),
            (3, 1, Norm::LInf, false),
            (2, 3, Norm::Finite(1), false),
        ] {
            let g = gens(d, p, q, positive);
            let records = enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap();
            let brute = brute_force_vertices(&g).unwrap();
            assert_eq!(
                z_points(&records),
                brute.iter().map(|v| v.0.clone()).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn single_generator_brute_force() {
        let g = GeneratorSet::from_vectors(
            2,
            1,
            Norm::LInf,
            false,
            vec![IntVec(vec![1, 0])],
        )
        .unwrap();
        let brute = brute_force_vertices(&g).unwrap();
        assert_eq!(brute, vec![IntVec(vec![-1, 0]), IntVec(vec![1, 0])]);
    }

    #[test]
    fn linf_31_summary() {
        let g = gens(3, 1, Norm::LInf, false);
        let s = summarize(&g, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(s.vertex_count, 96);
        assert_eq!(s.diameter, 13);
        assert_eq!(s.grid_k, 9);
    }

    #[test]
    fn canonical_vertex_of_b3_permutahedron() {
        let g = gens(3, 2, Norm::Finite(1), false);
        assert_eq!(
            canonical_vertices(&g, DEFAULT_VERTEX_CAP).unwrap(),
            vec![IntVec(vec![5, 3, 1])]
        );
    }

    #[test]
    fn self_refinement() {
        let g = gens(2, 1, Norm::LInf, false);
        let records = enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap();
        let pts: Vec<IntVec> = records.iter().map(|r| r.z_point.clone()).collect();
        assert!(verify_refinement(&records, &pts).unwrap());
        assert!(verify_refinement(&records, &[IntVec(vec![0, 0])]).unwrap());
    }

    #[test]
    fn vertex_cap_enforced() {
        let g = gens(3, 2, Norm::Finite(1), false);
        match enumerate_vertices(&g, 10) {
            Err(Error::CapExceeded { what: "vertex", .. }) => {}
            other => panic!("expected vertex cap error, got {:?}", other.map(|v| v.len())),
        }
    }

    #[test]
    fn grid_translation_decagon() {
        let g = gens(2, 2, Norm::LInf, true);
        let (k, t) = grid_size(&g).unwrap();
        assert_eq!(k, 5);
        assert_eq!(t, IntVec(vec![0, 0]));
    }
}
