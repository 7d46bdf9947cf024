//! Shared data plumbing: zero-set scan caching, stored zero tables, and the
//! binary arithmetic-table cache. Cache files are an implementation detail;
//! deleting them only costs recomputation, never changes an artifact.

use std::path::Path;

use xiprime::arith::{cache, ArithTable};
use xiprime::zeros::{export_zeros, find_zeros, import_zeros, GridPolicy, ZeroKind, ZeroSet};

use crate::config::RunConfig;
use crate::{CliError, Ctx};

pub fn kind_slug(kind: ZeroKind) -> &'static str {
    match kind {
        ZeroKind::Xi => "xi",
        ZeroKind::XiPrime => "xi-prime",
        ZeroKind::ZPrime => "z-prime",
        ZeroKind::Imported => "imported",
    }
}

/// Read a stored ordinate list. Importing alone can only see the ordinates,
/// so the scan ceiling is restored from the `# t_max:` header when one is
/// present (a bare list is taken to end at its last entry), and the claimed
/// kind is recorded on the set so audits can pair base and derivative lists.
pub fn read_zero_table(path: &Path, claimed: ZeroKind) -> Result<ZeroSet, CliError> {
    let mut zs = import_zeros(path, claimed)
        .map_err(CliError::annotate(format!("zero table {}", path.display())))?;
    zs.kind = claimed;
    if let Some(t) = header_t_max(path)? {
        if t >= zs.t_max {
            zs.t_max = t;
        }
    }
    Ok(zs)
}

/// Scan ceiling recorded by a previous export, if any. Only the leading
/// comment block is searched; the first ordinate line ends it.
fn header_t_max(path: &Path) -> Result<Option<f64>, CliError> {
    let text = std::fs::read_to_string(path).map_err(xiprime::Error::from)?;
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some(comment) = line.strip_prefix('#') else {
            break;
        };
        if let Some(value) = comment.trim().strip_prefix("t_max:") {
            let t: Option<f64> = value.trim().parse().ok();
            return Ok(t.filter(|t| t.is_finite() && *t > 0.0));
        }
    }
    Ok(None)
}

/// Load a cached scan or run it now and cache the result. The cache file is
/// a plain zero table named after the kind and ceiling, so it doubles as a
/// human-readable artifact.
pub fn load_or_scan(kind: ZeroKind, t_max: f64, cfg: &RunConfig) -> Result<ZeroSet, CliError> {
    let path = cfg
        .cache_dir
        .join(format!("zeros-{}-{t_max}.txt", kind_slug(kind)));
    if path.exists() {
        let mut zs = import_zeros(&path, kind)?;
        zs.kind = kind;
        zs.t_max = t_max;
        zs.check_structure().map_err(|e| {
            xiprime::Error::CacheFormat(format!("zero cache {}: {e}", path.display()))
        })?;
        return Ok(zs);
    }
    let zs = find_zeros(kind, 0.0, t_max, &GridPolicy::default())?;
    std::fs::create_dir_all(&cfg.cache_dir).map_err(xiprime::Error::from)?;
    export_zeros(&zs, &path)?;
    Ok(zs)
}

/// Load the binary table cache when it covers the requested extents,
/// otherwise build the table and refresh the cache. An explicit
/// `--table-cache` path wins over the default location in the cache
/// directory. A cache larger than requested is kept: the stored rows are
/// identical to what a smaller build would produce.
pub fn load_or_build_table(ctx: &Ctx) -> Result<ArithTable, CliError> {
    let cfg = &ctx.cfg;
    let path = match &ctx.table_cache {
        Some(p) => p.clone(),
        None => cfg
            .cache_dir
            .join(format!("table-{}-{}.bin", cfg.n_max, cfg.j_max)),
    };
    if path.exists() {
        let table = cache::load(&path, cfg.memory_budget)?;
        if table.n_max() >= cfg.n_max && table.j_max() >= cfg.j_max {
            return Ok(table);
        }
        // Stale cache from a smaller run: fall through and rebuild.
    }
    let table = ArithTable::build(cfg.n_max, cfg.j_max, cfg.memory_budget)?;
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir).map_err(xiprime::Error::from)?;
        }
    }
    cache::save(&table, &path)?;
    Ok(table)
}
