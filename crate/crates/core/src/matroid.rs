//! Convex multicriteria matroid optimization via greedily solvable
//! linear counterparts.
//!
//! Given a matroid on ground set [n] (independence-oracle access), a
//! d×n integer weighting W and a convex functional f, the maximum of
//! f(W·1_B) over bases B is attained at a vertex of the projection
//! polytope conv{W·1_B}. Every such vertex is the greedy optimum of the
//! linear counterpart with weights hᵀW for any h in its normal cone, so
//! the convex problem reduces to one greedy run per projection vertex
//! plus comparisons of f. The hard instance wiring a doubled path to the
//! generators of H_∞(d,p) shows the vertex count — hence the number of
//! required counterparts — can reach m(d,p).

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::gens::{enumerate_generators, GeneratorSet};
use crate::hull;
use crate::vec::{IntVec, Norm};

/// Cap on explicitly enumerated bases in the brute-force projector.
pub const DEFAULT_BASIS_CAP: usize = 1_000_000;

/// Independence-oracle access to a matroid on ground set 0..n.
/// `subset` arguments are strictly increasing index slices.
pub trait MatroidOracle {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, subset: &[usize]) -> Result<bool>;

    /// Rank of the whole matroid, by a single greedy sweep.
    fn rank(&self) -> Result<usize> {
        let mut current: Vec<usize> = Vec::new();
        for e in 0..self.ground_size() {
            current.push(e);
            if !self.is_independent(&current)? {
                current.pop();
            }
        }
        Ok(current.len())
    }
}

/// U(n, r): every subset of at most r elements is independent.
#[derive(Debug, Clone)]
pub struct UniformMatroid {
    n: usize,
    r: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidInput(format!("uniform rank {r} exceeds ground size {n}")));
        }
        Ok(UniformMatroid { n, r })
    }
}

impl MatroidOracle for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, subset: &[usize]) -> Result<bool> {
        check_subset(subset, self.n)?;
        Ok(subset.len() <= self.r)
    }

    fn rank(&self) -> Result<usize> {
        Ok(self.r)
    }
}

/// Cycle matroid of a connected multigraph: edge sets are independent iff
/// acyclic. Parallel edges form 2-element circuits; self-loops are
/// rejected outright.
#[derive(Debug, Clone)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidInput("graph needs at least one vertex".into()));
        }
        for &(a, b) in &edges {
            if a >= vertices || b >= vertices {
                return Err(Error::InvalidInput(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at vertex {a}")));
            }
        }
        let mut uf = UnionFind::new(vertices);
        for &(a, b) in &edges {
            uf.union(a, b);
        }
        let root = uf.find(0);
        if (1..vertices).any(|v| uf.find(v) != root) {
            return Err(Error::InvalidInput("graph must be connected".into()));
        }
        Ok(GraphicMatroid { vertices, edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

impl MatroidOracle for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, subset: &[usize]) -> Result<bool> {
        check_subset(subset, self.edges.len())?;
        let mut uf = UnionFind::new(self.vertices);
        for &e in subset {
            let (a, b) = self.edges[e];
            if !uf.union(a, b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn rank(&self) -> Result<usize> {
        Ok(self.vertices - 1)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False iff x and y were already connected.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }
}

/// A matroid given by its list of bases. Construction checks the basis
/// exchange axiom, so an arbitrary set family is rejected.
#[derive(Debug, Clone)]
pub struct ExplicitBasisMatroid {
    n: usize,
    bases: Vec<Vec<usize>>,
}

impl ExplicitBasisMatroid {
    pub fn new(n: usize, mut bases: Vec<Vec<usize>>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::InvalidInput("a matroid has at least one basis".into()));
        }
        for b in &mut bases {
            b.sort_unstable();
            b.dedup();
            if b.iter().any(|&e| e >= n) {
                return Err(Error::InvalidInput("basis element out of range".into()));
            }
        }
        bases.sort();
        bases.dedup();
        let r = bases[0].len();
        if bases.iter().any(|b| b.len() != r) {
            return Err(Error::InvalidInput("bases must be equicardinal".into()));
        }
        // Exchange axiom: for bases A ≠ B and a ∈ A∖B there is b ∈ B∖A
        // with A − a + b a basis.
        for a_basis in &bases {
            for b_basis in &bases {
                for &a in a_basis.iter().filter(|e| !b_basis.contains(e)) {
                    let ok = b_basis
                        .iter()
                        .filter(|e| !a_basis.contains(e))
                        .any(|&b| {
                            let mut swapped: Vec<usize> =
                                a_basis.iter().copied().filter(|&e| e != a).collect();
                            swapped.push(b);
                            swapped.sort_unstable();
                            bases.binary_search(&swapped).is_ok()
                        });
                    if !ok {
                        return Err(Error::InvalidInput(
                            "basis family violates the exchange axiom".into(),
                        ));
                    }
                }
            }
        }
        Ok(ExplicitBasisMatroid { n, bases })
    }
}

impl MatroidOracle for ExplicitBasisMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, subset: &[usize]) -> Result<bool> {
        check_subset(subset, self.n)?;
        Ok(self
            .bases
            .iter()
            .any(|b| subset.iter().all(|e| b.contains(e))))
    }

    fn rank(&self) -> Result<usize> {
        Ok(self.bases[0].len())
    }
}

fn check_subset(subset: &[usize], n: usize) -> Result<()> {
    for w in subset.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidInput("oracle subset not strictly increasing".into()));
        }
    }
    if let Some(&last) = subset.last() {
        if last >= n {
            return Err(Error::InvalidInput(format!("oracle index {last} out of range")));
        }
    }
    Ok(())
}

/// Wrapper counting independence-oracle calls.
pub struct CountingOracle<'a, M: MatroidOracle + ?Sized> {
    inner: &'a M,
    calls: Cell<u64>,
}

impl<'a, M: MatroidOracle + ?Sized> CountingOracle<'a, M> {
    pub fn new(inner: &'a M) -> Self {
        CountingOracle { inner, calls: Cell::new(0) }
    }

    pub fn calls(&self) -> u64 {
        self.calls.get()
    }
}

impl<M: MatroidOracle + ?Sized> MatroidOracle for CountingOracle<'_, M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn is_independent(&self, subset: &[usize]) -> Result<bool> {
        self.calls.set(self.calls.get() + 1);
        self.inner.is_independent(subset)
    }
}

/// Maximum-weight basis by the greedy algorithm: elements in order of
/// decreasing weight (index ascending on ties), kept when independence
/// survives. Negative weights are processed too, so the result is a basis.
pub fn greedy_max<M: MatroidOracle + ?Sized>(oracle: &M, weights: &[i128]) -> Result<Vec<usize>> {
    let n = oracle.ground_size();
    if weights.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: weights.len() });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(weights[e]), e));
    let mut basis: Vec<usize> = Vec::new();
    for e in order {
        let pos = basis.partition_point(|&x| x < e);
        basis.insert(pos, e);
        if !oracle.is_independent(&basis)? {
            basis.remove(pos);
        }
    }
    Ok(basis)
}

fn project(columns: &[IntVec], basis: &[usize]) -> Result<IntVec> {
    let d = columns.first().map_or(0, |c| c.dim());
    let mut acc = IntVec::zero(d);
    for &e in basis {
        acc = acc.checked_add(&columns[e])?;
    }
    Ok(acc)
}

fn check_columns<M: MatroidOracle + ?Sized>(oracle: &M, columns: &[IntVec]) -> Result<usize> {
    if columns.len() != oracle.ground_size() {
        return Err(Error::DimensionMismatch {
            expected: oracle.ground_size(),
            got: columns.len(),
        });
    }
    let d = columns
        .first()
        .ok_or_else(|| Error::InvalidInput("empty weighting".into()))?
        .dim();
    if columns.iter().any(|c| c.dim() != d) {
        return Err(Error::InvalidInput("mixed column dimensions".into()));
    }
    Ok(d)
}

/// All bases, by depth-first search with prefix pruning: a prefix is
/// extended only while independent, and abandoned when too few elements
/// remain to reach full rank.
pub fn enumerate_bases<M: MatroidOracle + ?Sized>(oracle: &M, cap: usize) -> Result<Vec<Vec<usize>>> {
    fn dfs<M: MatroidOracle + ?Sized>(
        oracle: &M,
        n: usize,
        r: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if current.len() == r {
            out.push(current.clone());
            if out.len() > cap {
                return Err(Error::CapExceeded { what: "basis", limit: cap });
            }
            return Ok(());
        }
        for e in start..n {
            if current.len() + (n - e) < r {
                break;
            }
            current.push(e);
            if oracle.is_independent(current)? {
                dfs(oracle, n, r, e + 1, current, out, cap)?;
            }
            current.pop();
        }
        Ok(())
    }

    let n = oracle.ground_size();
    let r = oracle.rank()?;
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    dfs(oracle, n, r, 0, &mut current, &mut out, cap)?;
    Ok(out)
}

/// Vertices of the projection polytope conv{W·1_B : B basis}, by explicit
/// basis enumeration. Exponential; the independent oracle for the solver.
pub fn project_vertices_bruteforce<M: MatroidOracle + ?Sized>(
    oracle: &M,
    columns: &[IntVec],
    basis_cap: usize,
) -> Result<Vec<IntVec>> {
    check_columns(oracle, columns)?;
    let bases = enumerate_bases(oracle, basis_cap)?;
    if bases.is_empty() {
        return Err(Error::InvalidInput("matroid has no bases".into()));
    }
    let mut points: Vec<IntVec> = bases
        .iter()
        .map(|b| project(columns, b))
        .collect::<Result<Vec<_>>>()?;
    points.sort();
    points.dedup();
    hull::extreme_points(&points)
}

/// Convex functionals available for maximization over the projections.
/// Only comparisons of values are ever used.
#[derive(Debug, Clone)]
pub enum Objective {
    /// f(x) = ‖x‖₂².
    SquaredNorm,
    /// f(x) = c·x.
    Linear(IntVec),
    /// f(x) = max_i x_i.
    MaxCoordinate,
}

impl Objective {
    pub fn eval(&self, x: &IntVec) -> Result<i128> {
        match self {
            Objective::SquaredNorm => x.dot(x),
            Objective::Linear(c) => c.dot(x),
            Objective::MaxCoordinate => x
                .as_slice()
                .iter()
                .max()
                .map(|&v| v as i128)
                .ok_or_else(|| Error::InvalidInput("empty vector".into())),
        }
    }
}

/// One optimal basis, its projection and value, and the number of greedy
/// counterparts solved (= m(d,p), the vertex count of H_∞(d,p)).
#[derive(Debug, Clone)]
pub struct MulticriteriaSolution {
    pub basis: Vec<usize>,
    pub projection: IntVec,
    pub value: i128,
    pub counterparts: usize,
}

/// Maximize f(W·1_B) over bases of a matroid with a p-bounded d-row
/// weighting W. For each vertex of H_∞(d,p), its witness normal h (made
/// primitive) yields the linear counterpart hᵀW, solved greedily; since
/// H_∞(d,p) refines conv{W·1_B}, every vertex of the projection polytope
/// is among the collected greedy projections, so comparing f over them is
/// exact. Ties in f go to the lexicographically smallest projection, and
/// among bases reaching it, the lexicographically smallest basis.
pub fn multicriteria_solve<M: MatroidOracle + ?Sized>(
    oracle: &M,
    columns: &[IntVec],
    objective: &Objective,
    p: u64,
    generator_cap: usize,
    vertex_cap: usize,
) -> Result<MulticriteriaSolution> {
    let d = check_columns(oracle, columns)?;
    for c in columns {
        if c.as_slice().iter().any(|&x| x < 0 || x as u64 > p) {
            return Err(Error::InvalidInput(format!(
                "weighting not {p}-bounded: column {:?}",
                c.0
            )));
        }
    }
    let generators = enumerate_generators(d, p, Norm::LInf, false, generator_cap)?;
    let records = crate::zono::enumerate_vertices(&generators, vertex_cap)?;

    let mut best: Option<(i128, IntVec, Vec<usize>)> = None;
    for r in &records {
        let h = r.witness.primitive();
        let weights: Vec<i128> = columns.iter().map(|c| h.dot(c)).collect::<Result<_>>()?;
        let basis = greedy_max(oracle, &weights)?;
        let proj = project(columns, &basis)?;
        let value = objective.eval(&proj)?;
        let better = match &best {
            None => true,
            Some((bv, bp, bb)) => {
                value > *bv
                    || (value == *bv && (proj < *bp || (proj == *bp && basis < *bb)))
            }
        };
        if better {
            best = Some((value, proj, basis));
        }
    }
    let (value, projection, basis) =
        best.ok_or_else(|| Error::Internal("no greedy counterparts solved".into()))?;
    Ok(MulticriteriaSolution { basis, projection, value, counterparts: records.len() })
}

/// m(d,p): the number of greedy counterparts needed for any d-criteria
/// p-bounded matroid problem.
pub fn counterpart_count(d: usize, p: u64, generator_cap: usize, vertex_cap: usize) -> Result<usize> {
    crate::zono::m_count(d, p, generator_cap, vertex_cap)
}

/// The lower-bound instance: a path with every edge doubled, pair k
/// carrying the columns g_k⁺ and g_k⁻ for the k-th generator of
/// H_∞(d,p). Bases pick one edge per pair, so the projection polytope is
/// Σg⁻ + H_∞(d,p), with m(d,p) vertices.
#[derive(Debug, Clone)]
pub struct HardInstance {
    pub generators: GeneratorSet,
    pub matroid: GraphicMatroid,
    pub columns: Vec<IntVec>,
    pub translation: IntVec,
}

pub fn build_hard_instance(d: usize, p: u64, generator_cap: usize) -> Result<HardInstance> {
    let generators = enumerate_generators(d, p, Norm::LInf, false, generator_cap)?;
    let m = generators.len();
    let mut edges = Vec::with_capacity(2 * m);
    let mut columns = Vec::with_capacity(2 * m);
    let mut translation = IntVec::zero(d);
    for (k, g) in generators.iter().enumerate() {
        edges.push((k, k + 1));
        edges.push((k, k + 1));
        columns.push(g.positive_part());
        columns.push(g.negative_part());
        translation = translation.checked_add(&g.negative_part())?;
    }
    let matroid = GraphicMatroid::new(m + 1, edges)?;
    Ok(HardInstance { generators, matroid, columns, translation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens::DEFAULT_GENERATOR_CAP;
    use crate::zono::{enumerate_vertices, DEFAULT_VERTEX_CAP};

    #[test]
    fn uniform_greedy_ties_break_by_index() {
        let m = UniformMatroid::new(4, 2).unwrap();
        assert_eq!(greedy_max(&m, &[5, 1, 5, 3]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn greedy_with_negative_weights_still_returns_a_basis() {
        let m = UniformMatroid::new(3, 2).unwrap();
        assert_eq!(greedy_max(&m, &[-5, -1, -3]).unwrap(), vec![1, 2]);
    }

    #[test]
    fn graphic_triangle() {
        let g = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(g.is_independent(&[0, 1]).unwrap());
        assert!(!g.is_independent(&[0, 1, 2]).unwrap());
        assert_eq!(g.rank().unwrap(), 2);
        assert_eq!(enumerate_bases(&g, 100).unwrap().len(), 3);
    }

    #[test]
    fn graphic_parallel_edges_are_a_circuit() {
        let g = GraphicMatroid::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(g.is_independent(&[0]).unwrap());
        assert!(!g.is_independent(&[0, 1]).unwrap());
    }

    #[test]
    fn graphic_rejects_bad_graphs() {
        assert!(GraphicMatroid::new(3, vec![(0, 1)]).is_err(), "disconnected");
        assert!(GraphicMatroid::new(2, vec![(0, 0), (0, 1)]).is_err(), "self-loop");
    }

    #[test]
    fn explicit_bases_round_trip() {
        let m = ExplicitBasisMatroid::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        assert!(m.is_independent(&[1]).unwrap());
        assert!(m.is_independent(&[0, 2]).unwrap());
        assert!(!m.is_independent(&[0, 1, 2]).unwrap());
        assert_eq!(m.rank().unwrap(), 2);
    }

    #[test]
    fn explicit_bases_exchange_axiom_enforced() {
        // {0,1} and {2,3} with nothing in between is not a matroid.
        assert!(ExplicitBasisMatroid::new(4, vec![vec![0, 1], vec![2, 3]]).is_err());
    }

    #[test]
    fn basis_enumeration_counts() {
        // Spanning trees of K_4: 16 by Cayley.
        let k4 = GraphicMatroid::new(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(enumerate_bases(&k4, 100).unwrap().len(), 16);
        let u = UniformMatroid::new(6, 3).unwrap();
        assert_eq!(enumerate_bases(&u, 100).unwrap().len(), 20);
        assert!(matches!(
            enumerate_bases(&u, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn counting_oracle_counts() {
        let u = UniformMatroid::new(4, 2).unwrap();
        let c = CountingOracle::new(&u);
        greedy_max(&c, &[1, 2, 3, 4]).unwrap();
        assert_eq!(c.calls(), 4);
    }

    #[test]
    fn hard_instance_projects_to_translated_zonotope() {
        let inst = build_hard_instance(2, 1, DEFAULT_GENERATOR_CAP).unwrap();
        assert_eq!(inst.columns.len(), 8);
        assert_eq!(inst.translation, IntVec(vec![0, 1]));
        let verts =
            project_vertices_bruteforce(&inst.matroid, &inst.columns, DEFAULT_BASIS_CAP).unwrap();
        let mut expect: Vec<IntVec> = enumerate_vertices(&inst.generators, DEFAULT_VERTEX_CAP)
            .unwrap()
            .into_iter()
            .map(|r| r.h_point.checked_add(&inst.translation).unwrap())
            .collect();
        expect.sort();
        assert_eq!(verts, expect);
    }

    fn example_w_columns() -> Vec<IntVec> {
        let row1 = [0i64, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1];
        let row2 = [0i64, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1];
        row1.iter()
            .zip(&row2)
            .map(|(&a, &b)| IntVec(vec![a, b]))
            .collect()
    }

    #[test]
    fn multicriteria_worked_example() {
        let m = UniformMatroid::new(12, 6).unwrap();
        let cols = example_w_columns();

        // The h = (1,2) counterpart, weights and greedy basis spelled out.
        let h = IntVec(vec![1, 2]);
        let weights: Vec<i128> = cols.iter().map(|c| h.dot(c).unwrap()).collect();
        assert_eq!(weights, vec![0, 2, 1, 3, 0, 2, 1, 3, 0, 2, 1, 3]);
        let basis = greedy_max(&m, &weights).unwrap();
        assert_eq!(basis, vec![1, 3, 5, 7, 9, 11]);
        assert_eq!(project(&cols, &basis).unwrap(), IntVec(vec![3, 6]));

        let sol = multicriteria_solve(
            &m,
            &cols,
            &Objective::SquaredNorm,
            1,
            DEFAULT_GENERATOR_CAP,
            crate::zono::DEFAULT_VERTEX_CAP,
        )
        .unwrap();
        assert_eq!(sol.counterparts, 8);
        assert_eq!(sol.value, 45);
        // (3,6) and (6,3) both reach 45; lexicographic tie-break.
        assert_eq!(sol.projection, IntVec(vec![3, 6]));
    }

    #[test]
    fn multicriteria_hard_instance_squared_norm() {
        let inst = build_hard_instance(2, 1, DEFAULT_GENERATOR_CAP).unwrap();
        let sol = multicriteria_solve(
            &inst.matroid,
            &inst.columns,
            &Objective::SquaredNorm,
            1,
            DEFAULT_GENERATOR_CAP,
            DEFAULT_VERTEX_CAP,
        )
        .unwrap();
        assert_eq!(sol.counterparts, 8);
        assert_eq!(sol.value, 13);
        // (2,3) and (3,2) both reach 13; lexicographic tie-break.
        assert_eq!(sol.projection, IntVec(vec![2, 3]));
        assert_eq!(project(&inst.columns, &sol.basis).unwrap(), sol.projection);
        assert!(inst.matroid.is_independent(&sol.basis).unwrap());
        assert_eq!(sol.basis.len(), inst.matroid.rank().unwrap());
    }

    #[test]
    fn multicriteria_linear_agrees_with_greedy() {
        let inst = build_hard_instance(2, 1, DEFAULT_GENERATOR_CAP).unwrap();
        let c = IntVec(vec![3, -2]);
        let sol = multicriteria_solve(
            &inst.matroid,
            &inst.columns,
            &Objective::Linear(c.clone()),
            1,
            DEFAULT_GENERATOR_CAP,
            DEFAULT_VERTEX_CAP,
        )
        .unwrap();
        let weights: Vec<i128> = inst.columns.iter().map(|w| c.dot(w).unwrap()).collect();
        let basis = greedy_max(&inst.matroid, &weights).unwrap();
        assert_eq!(sol.value, c.dot(&project(&inst.columns, &basis).unwrap()).unwrap());
    }

    #[test]
    fn multicriteria_max_coordinate_uniform() {
        // Pick 2 of 4 planted columns maximizing the larger coordinate sum.
        let m = UniformMatroid::new(4, 2).unwrap();
        let cols = vec![
            IntVec(vec![4, 0]),
            IntVec(vec![0, 3]),
            IntVec(vec![2, 2]),
            IntVec(vec![1, 1]),
        ];
        let sol = multicriteria_solve(
            &m,
            &cols,
            &Objective::MaxCoordinate,
            4,
            DEFAULT_GENERATOR_CAP,
            DEFAULT_VERTEX_CAP,
        )
        .unwrap();
        assert_eq!(sol.counterparts, 48); // m(2,4)
        assert_eq!(sol.value, 6);
        assert_eq!(sol.projection, IntVec(vec![6, 2]));
        assert_eq!(sol.basis, vec![0, 2]);
    }

    #[test]
    fn multicriteria_rejects_unbounded_weights() {
        let m = UniformMatroid::new(2, 1).unwrap();
        let cols = vec![IntVec(vec![0, 3]), IntVec(vec![1, -1])];
        assert!(multicriteria_solve(
            &m,
            &cols,
            &Objective::SquaredNorm,
            1,
            DEFAULT_GENERATOR_CAP,
            DEFAULT_VERTEX_CAP,
        )
        .is_err());
    }

    #[test]
    fn counterpart_counts_match_m() {
        assert_eq!(counterpart_count(2, 1, DEFAULT_GENERATOR_CAP, DEFAULT_VERTEX_CAP).unwrap(), 8);
        assert_eq!(counterpart_count(2, 3, DEFAULT_GENERATOR_CAP, DEFAULT_VERTEX_CAP).unwrap(), 32);
    }

    #[test]
    fn subset_validation() {
        let u = UniformMatroid::new(3, 2).unwrap();
        assert!(u.is_independent(&[1, 0]).is_err());
        assert!(u.is_independent(&[0, 5]).is_err());
    }
}
