//! Built-in reference checks: every published value the library can
//! recompute, run end to end and reported as one pass/fail line each.
//! Backs the `verify` CLI subcommand and the regression tests.

use crate::diameter::{construct_dk, delta_2k, euler_totient_grid};
use crate::error::Result;
use crate::gens::{enumerate_generators, generator_count, DEFAULT_GENERATOR_CAP};
use crate::matroid::{build_hard_instance, project_vertices_bruteforce, DEFAULT_BASIS_CAP};
use crate::num::totient_sum;
use crate::vec::{IntVec, Norm};
use crate::zono::{m_count, summarize, DEFAULT_VERTEX_CAP};

/// Outcome of one reference check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<Check>,
    name: &str,
    want: T,
    got: Result<T>,
) {
    let (passed, detail) = match got {
        Ok(v) if v == want => (true, format!("{v:?}")),
        Ok(v) => (false, format!("expected {want:?}, got {v:?}")),
        Err(e) => (false, format!("expected {want:?}, got error: {e}")),
    };
    out.push(Check { name: name.to_string(), passed, detail });
}

fn summary_triple(d: usize, p: u64, q: Norm) -> Result<(usize, usize, i64)> {
    let g = enumerate_generators(d, p, q, false, DEFAULT_GENERATOR_CAP)?;
    let s = summarize(&g, DEFAULT_VERTEX_CAP)?;
    Ok((s.vertex_count, s.diameter, s.grid_k))
}

/// The fast reference suite (seconds to a couple of minutes).
pub fn run_quick() -> Vec<Check> {
    let mut out = Vec::new();

    for d in 1..=5usize {
        check(
            &mut out,
            &format!("generator count |G_1({d},2)| = d^2"),
            (d * d) as u64,
            generator_count(d, 2, Norm::Finite(1), false),
        );
    }
    for p in 1..=6u64 {
        let want = totient_sum(p).map(|s| 4 * s).unwrap_or(0);
        check(
            &mut out,
            &format!("generator count |G_inf(2,{p})| = 4*sum phi"),
            want,
            generator_count(2, p, Norm::LInf, false),
        );
    }
    check(
        &mut out,
        "generator sum sigma_1(2,2)",
        IntVec(vec![3, 1]),
        enumerate_generators(2, 2, Norm::Finite(1), false, DEFAULT_GENERATOR_CAP)
            .and_then(|g| g.sum()),
    );
    check(
        &mut out,
        "generator sum sigma_1(3,2)",
        IntVec(vec![5, 3, 1]),
        enumerate_generators(3, 2, Norm::Finite(1), false, DEFAULT_GENERATOR_CAP)
            .and_then(|g| g.sum()),
    );

    check(
        &mut out,
        "Z_1(2,2) octagon (vertices, diameter, grid)",
        (8, 4, 3),
        summary_triple(2, 2, Norm::Finite(1)),
    );
    check(
        &mut out,
        "H_1(3,2) (vertices, diameter, grid)",
        (48, 9, 5),
        summary_triple(3, 2, Norm::Finite(1)),
    );
    check(
        &mut out,
        "H_inf(3,1) (vertices, diameter, grid)",
        (96, 13, 9),
        summary_triple(3, 1, Norm::LInf),
    );
    check(
        &mut out,
        "H_inf_+(2,2) decagon vertex count",
        10usize,
        enumerate_generators(2, 2, Norm::LInf, true, DEFAULT_GENERATOR_CAP)
            .and_then(|g| crate::zono::vertex_count(&g, DEFAULT_VERTEX_CAP)),
    );

    for p in 1..=6u64 {
        let want = totient_sum(p).map(|s| 8 * s as usize).unwrap_or(0);
        check(
            &mut out,
            &format!("m(2,{p}) = 8*sum phi"),
            want,
            m_count(2, p, DEFAULT_GENERATOR_CAP, DEFAULT_VERTEX_CAP),
        );
    }
    check(&mut out, "m(3,1)", 96usize, m_count(3, 1, DEFAULT_GENERATOR_CAP, DEFAULT_VERTEX_CAP));
    check(&mut out, "m(4,1)", 5376usize, m_count(4, 1, DEFAULT_GENERATOR_CAP, DEFAULT_VERTEX_CAP));

    let delta_table: [usize; 17] = [2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 9, 10, 10, 10, 11, 12];
    for (i, &want) in delta_table.iter().enumerate() {
        let k = i as u64 + 1;
        check(
            &mut out,
            &format!("delta(2,{k})"),
            want,
            delta_2k(k).map(|r| r.diameter),
        );
    }
    for p in 1..=4u64 {
        check(
            &mut out,
            &format!("H_1(2,{p}) grid/diameter breakpoint"),
            match euler_totient_grid(p) {
                Ok(v) => v,
                Err(_) => (0, 0),
            },
            delta_2k(euler_totient_grid(p).map(|(k, _)| k).unwrap_or(1))
                .map(|r| (r.grid_k as u64, r.diameter as u64)),
        );
    }

    for d in 2..=4usize {
        for k in 1..=(2 * d as i64 - 1) {
            check(
                &mut out,
                &format!("construct({d},{k}) diameter = floor((k+1)d/2)"),
                ((k as usize + 1) * d) / 2,
                construct_dk(d, k).map(|r| r.diameter),
            );
        }
    }

    check(
        &mut out,
        "hard instance (2,1): projection polytope has m(2,1) vertices",
        8usize,
        build_hard_instance(2, 1, DEFAULT_GENERATOR_CAP).and_then(|inst| {
            project_vertices_bruteforce(&inst.matroid, &inst.columns, DEFAULT_BASIS_CAP)
                .map(|v| v.len())
        }),
    );

    out
}

/// The long suite: everything in [`run_quick`] plus m(5,1), which
/// enumerates just under two million vertices.
pub fn run_long() -> Vec<Check> {
    let mut out = run_quick();
    check(
        &mut out,
        "m(5,1)",
        1_981_440usize,
        m_count(5, 1, DEFAULT_GENERATOR_CAP, DEFAULT_VERTEX_CAP),
    );
    out
}
