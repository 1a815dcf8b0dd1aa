//! Versioned result cache with atomic writes.
//!
//! Entries are self-describing JSON files named by their key; writes go
//! through a temporary file and an atomic rename, reads tolerate missing,
//! corrupt or version-mismatched entries by recomputing.

use anyhow::{Context, Result};
use bp_hopf::{BpContext, IntegralLatticeBasis};
use std::fs;
use std::path::{Path, PathBuf};

pub const FORMAT_VERSION: u64 = 1;

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    let safe: String = key
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect();
    dir.join(format!("{safe}.json"))
}

/// Write an entry atomically (temp file then rename).
pub fn store(dir: &Path, key: &str, payload: serde_json::Value) -> Result<()> {
    fs::create_dir_all(dir)
        .with_context(|| format!("creating cache directory {}", dir.display()))?;
    let entry = serde_json::json!({
        "format_version": FORMAT_VERSION,
        "key": key,
        "payload": payload,
    });
    let path = entry_path(dir, key);
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec_pretty(&entry)?)
        .with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, &path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

/// Read an entry; `None` on anything unusable (missing, corrupt, version
/// or key mismatch).
pub fn load(dir: &Path, key: &str) -> Option<serde_json::Value> {
    let bytes = fs::read(entry_path(dir, key)).ok()?;
    let value: serde_json::Value = serde_json::from_slice(&bytes).ok()?;
    if value["format_version"].as_u64() != Some(FORMAT_VERSION) {
        return None;
    }
    if value["key"].as_str() != Some(key) {
        return None;
    }
    Some(value["payload"].clone())
}

fn lattice_key(p: u64, degree: i64, nmax: usize) -> String {
    format!("lattice_p{p}_deg{degree}_n{nmax}")
}

/// Fetch the lattice through the cache: in-memory first, then disk, then
/// build-and-store.
pub fn lattice_with_cache(
    ctx: &BpContext,
    degree: i64,
    dir: Option<&Path>,
) -> std::sync::Arc<IntegralLatticeBasis> {
    if !ctx.lattice_is_cached(degree) {
        if let Some(dir) = dir {
            let key = lattice_key(ctx.p, degree, ctx.nmax);
            if let Some(payload) = load(dir, &key) {
                if let Ok(lat) = IntegralLatticeBasis::from_json(ctx, &payload) {
                    if lat.degree == degree && lat.p == ctx.p {
                        ctx.install_lattice(lat);
                    }
                }
            }
        }
    }
    let was_cached = ctx.lattice_is_cached(degree);
    let lat = ctx.lattice(degree);
    if !was_cached {
        if let Some(dir) = dir {
            let _ = store(dir, &lattice_key(ctx.p, degree, ctx.nmax), lat.to_json());
        }
    }
    lat
}

/// Serialize the right-unit table (the cache format for eta_R data).
pub fn eta_table_json(ctx: &BpContext) -> serde_json::Value {
    serde_json::json!({
        "p": ctx.p,
        "nmax": ctx.nmax,
        "images": (1..=ctx.nmax)
            .map(|n| ctx.eta_v(n).to_json())
            .collect::<Vec<_>>(),
    })
}

/// Store the eta table; loading validates against a fresh computation, so
/// the cache can only confirm, never corrupt.
pub fn store_eta_table(ctx: &BpContext, dir: &Path) -> Result<()> {
    store(dir, &format!("eta_p{}_n{}", ctx.p, ctx.nmax), eta_table_json(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption_tolerance() {
        let dir = std::env::temp_dir().join(format!("betaf-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        store(&dir, "some_key", serde_json::json!({"x": 1})).unwrap();
        assert_eq!(load(&dir, "some_key").unwrap()["x"], 1);
        // corrupt the file
        fs::write(entry_path(&dir, "some_key"), b"{ not json").unwrap();
        assert!(load(&dir, "some_key").is_none());
        // wrong version
        fs::write(
            entry_path(&dir, "some_key"),
            serde_json::to_vec(&serde_json::json!({"format_version": 999, "key": "some_key", "payload": {}}))
                .unwrap(),
        )
        .unwrap();
        assert!(load(&dir, "some_key").is_none());
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn lattice_cache_transparency() {
        let dir = std::env::temp_dir().join(format!("betaf-lat-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        let cold_ctx = BpContext::new(2, 2);
        let cold = lattice_with_cache(&cold_ctx, 8, Some(&dir));
        // fresh context, warm disk cache
        let warm_ctx = BpContext::new(2, 2);
        let warm = lattice_with_cache(&warm_ctx, 8, Some(&dir));
        assert_eq!(cold.rows, warm.rows);
        assert_eq!(cold.pivots, warm.pivots);
        assert_eq!(cold.echelon.len(), warm.echelon.len());
        for (a, b) in cold.echelon.iter().zip(&warm.echelon) {
            assert_eq!(a, b);
        }
        // and identical to a no-cache build
        let plain_ctx = BpContext::new(2, 2);
        let plain = plain_ctx.lattice(8);
        assert_eq!(plain.pivots, warm.pivots);
        let _ = fs::remove_dir_all(&dir);
    }
}
