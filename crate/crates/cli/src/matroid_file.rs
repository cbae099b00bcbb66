//! Text formats for matroid-solve inputs.
//!
//! Matroid spec file, by first keyword line:
//!   `uniform n r`
//!   `graphic` followed by one `u v` edge line per element
//!   `explicit` followed by one 0/1 basis indicator line per basis
//! Weights file: CSV, d rows by n columns.

use std::fs;
use std::path::Path;

use primzono::{
    Error, ExplicitBasisMatroid, GraphicMatroid, IntVec, MatroidOracle, Result, UniformMatroid,
};

fn bad(path: &Path, line: usize, msg: &str) -> Error {
    Error::InvalidInput(format!("{}:{line}: {msg}", path.display()))
}

pub fn parse_matroid(path: &Path) -> Result<Box<dyn MatroidOracle>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (head_no, head) = lines
        .next()
        .ok_or_else(|| bad(path, 1, "empty matroid file"))?;
    let tokens: Vec<&str> = head.split_whitespace().collect();
    match tokens[0] {
        "uniform" => {
            if tokens.len() != 3 {
                return Err(bad(path, head_no, "expected: uniform n r"));
            }
            let n = tokens[1]
                .parse()
                .map_err(|_| bad(path, head_no, "bad ground size"))?;
            let r = tokens[2]
                .parse()
                .map_err(|_| bad(path, head_no, "bad rank"))?;
            Ok(Box::new(UniformMatroid::new(n, r)?))
        }
        "graphic" => {
            let mut edges = Vec::new();
            let mut max_vertex = 0;
            for (no, line) in lines {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(bad(path, no, "expected edge line: u v"));
                }
                let u: usize = parts[0].parse().map_err(|_| bad(path, no, "bad vertex"))?;
                let v: usize = parts[1].parse().map_err(|_| bad(path, no, "bad vertex"))?;
                max_vertex = max_vertex.max(u).max(v);
                edges.push((u, v));
            }
            if edges.is_empty() {
                return Err(bad(path, head_no, "graphic matroid needs edge lines"));
            }
            Ok(Box::new(GraphicMatroid::new(max_vertex + 1, edges)?))
        }
        "explicit" => {
            let mut bases = Vec::new();
            let mut width = None;
            for (no, line) in lines {
                let mut basis = Vec::new();
                let bits: Vec<&str> = line.split_whitespace().collect();
                match width {
                    None => width = Some(bits.len()),
                    Some(w) if w != bits.len() => {
                        return Err(bad(path, no, "indicator width differs from first basis"));
                    }
                    _ => {}
                }
                for (i, b) in bits.iter().enumerate() {
                    match *b {
                        "1" => basis.push(i),
                        "0" => {}
                        _ => return Err(bad(path, no, "indicator entries must be 0 or 1")),
                    }
                }
                bases.push(basis);
            }
            let n = width.ok_or_else(|| bad(path, head_no, "explicit matroid needs basis lines"))?;
            Ok(Box::new(ExplicitBasisMatroid::new(n, bases)?))
        }
        other => Err(bad(path, head_no, &format!("unknown matroid kind '{other}'"))),
    }
}

/// Parse the d×n weights CSV into its n columns.
pub fn parse_weights(path: &Path) -> Result<Vec<IntVec>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Vec<i64> = line
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad(path, i + 1, "bad integer in weights row"))?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(bad(path, i + 1, "ragged weights matrix"));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(bad(path, 1, "empty weights file"));
    }
    let n = rows[0].len();
    Ok((0..n)
        .map(|j| IntVec(rows.iter().map(|r| r[j]).collect()))
        .collect())
}
