//! Primitive zonotopes: the lattice polytopes generated by primitive
//! integer vectors of bounded q-norm, their vertex/diameter/grid data,
//! the diameter lower-bound constructions they certify, and the reduction
//! of convex multicriteria matroid optimization to greedily solvable
//! linear counterparts.

pub mod diameter;
pub mod error;
pub mod gens;
pub mod hull;
pub mod lp;
pub mod matroid;
pub mod num;
mod par;
pub mod vec;
pub mod verify;
pub mod zono;

pub use diameter::{
    conjecture_consistency, construct_dk, delta_2k, delta_2k_capped, euler_totient_grid,
    matching_schedule, one_factorization, ConsistencyReport, DiameterRecord, MatchingSchedule,
};
pub use error::{Error, Result};
pub use matroid::{
    build_hard_instance, counterpart_count, enumerate_bases, greedy_max, multicriteria_solve,
    project_vertices_bruteforce, CountingOracle, ExplicitBasisMatroid, GraphicMatroid,
    HardInstance, MatroidOracle, MulticriteriaSolution, Objective, UniformMatroid,
    DEFAULT_BASIS_CAP,
};
pub use gens::{enumerate_generators, generator_count, GeneratorSet, DEFAULT_GENERATOR_CAP};
pub use vec::{IntVec, Norm, SignedPermutation};
pub use zono::{
    brute_force_vertices, canonical_vertices, enumerate_vertices, grid_size, m_count,
    skeleton_diameter, skeleton_diameter_of_records, summarize, verify_refinement, vertex_count,
    SignVector, VertexRecord,
    ZonotopeSummary, DEFAULT_VERTEX_CAP, MAX_GENERATORS,
};
