//! On-disk cache for vertex enumerations.
//!
//! One file per (d, p, q, positive, schema-version) key, holding a
//! sha256 checksum line followed by the gzip-compressed JSON vertex
//! document. Corrupt, truncated, or stale entries are silently treated
//! as misses — the cache can only save time, never change an answer.
//! Concurrent invocations coordinate with advisory `flock`: shared for
//! reads, exclusive for writes.

use std::fs::{self, File, OpenOptions};
use std::io::{Read, Write};
use std::os::unix::io::AsRawFd;
use std::path::PathBuf;

use flate2::read::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use primzono::{GeneratorSet, IntVec, SignVector, VertexRecord};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::output::{vertices_json, SCHEMA_VERSION};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// Resolve the cache directory: explicit flag, then the
    /// PRIMZONO_CACHE environment variable, then ~/.cache/primzono.
    /// Returns None (caching disabled) if no directory can be created.
    pub fn resolve(flag: Option<PathBuf>) -> Option<Cache> {
        let dir = flag
            .or_else(|| std::env::var_os("PRIMZONO_CACHE").map(PathBuf::from))
            .or_else(|| {
                std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache/primzono"))
            })?;
        if let Err(e) = fs::create_dir_all(&dir) {
            eprintln!("warning: cache directory {} unusable ({e}); caching disabled", dir.display());
            return None;
        }
        Some(Cache { dir })
    }

    fn path(&self, g: &GeneratorSet) -> PathBuf {
        let kind = if g.positive { "pos" } else { "sym" };
        self.dir.join(format!(
            "v{SCHEMA_VERSION}-d{}-p{}-q{}-{kind}.json.gz",
            g.d, g.p, g.q
        ))
    }

    pub fn load(&self, g: &GeneratorSet) -> Option<Vec<VertexRecord>> {
        let file = File::open(self.path(g)).ok()?;
        unsafe {
            libc::flock(file.as_raw_fd(), libc::LOCK_SH);
        }
        let result = read_entry(&file, g);
        unsafe {
            libc::flock(file.as_raw_fd(), libc::LOCK_UN);
        }
        result
    }

    pub fn store(&self, g: &GeneratorSet, records: &[VertexRecord]) {
        let doc = vertices_json(g, records);
        let mut encoder = GzEncoder::new(Vec::new(), Compression::default());
        if encoder.write_all(doc.to_string().as_bytes()).is_err() {
            return;
        }
        let Ok(payload) = encoder.finish() else { return };
        let checksum = hex(&Sha256::digest(&payload));

        let Ok(file) = OpenOptions::new()
            .create(true)
            .write(true)
            .truncate(true)
            .open(self.path(g))
        else {
            return;
        };
        unsafe {
            libc::flock(file.as_raw_fd(), libc::LOCK_EX);
        }
        let mut file = file;
        let _ = file
            .write_all(checksum.as_bytes())
            .and_then(|()| file.write_all(b"\n"))
            .and_then(|()| file.write_all(&payload));
        unsafe {
            libc::flock(file.as_raw_fd(), libc::LOCK_UN);
        }
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn read_entry(mut file: &File, g: &GeneratorSet) -> Option<Vec<VertexRecord>> {
    let mut raw = Vec::new();
    file.read_to_end(&mut raw).ok()?;
    let newline = raw.iter().position(|&b| b == b'\n')?;
    let (checksum, payload) = raw.split_at(newline);
    let payload = &payload[1..];
    if hex(&Sha256::digest(payload)).as_bytes() != checksum {
        return None;
    }
    let mut json = String::new();
    GzDecoder::new(payload).read_to_string(&mut json).ok()?;
    let doc: Value = serde_json::from_str(&json).ok()?;

    // The entry must describe exactly this generator set.
    if doc.get("meta")? != &crate::output::meta(g) {
        return None;
    }
    let cached_gens: Vec<IntVec> = serde_json::from_value(doc.get("generators")?.clone()).ok()?;
    if cached_gens != g.generators() {
        return None;
    }

    let mut records = Vec::new();
    for v in doc.get("vertices")?.as_array()? {
        let signs: Vec<i8> = serde_json::from_value(v.get("signs")?.clone()).ok()?;
        records.push(VertexRecord {
            signs: SignVector::from_signs(&signs).ok()?,
            z_point: serde_json::from_value(v.get("z")?.clone()).ok()?,
            h_point: serde_json::from_value(v.get("h")?.clone()).ok()?,
            witness: serde_json::from_value(v.get("witness")?.clone()).ok()?,
        });
    }
    if records.is_empty() {
        return None;
    }
    Some(records)
}
