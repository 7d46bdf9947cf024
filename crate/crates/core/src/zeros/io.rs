//! Plain-text persistence for zero lists: one decimal ordinate per line,
//! ascending, with '#' comment lines. The format matches widely published
//! zero tables so imported tables double as correctness oracles.

use std::fmt::Write as _;
use std::path::Path;

use super::types::{ZeroKind, ZeroSet};
use crate::{Error, Result};

/// Write a zero list. Seventeen fractional digits guarantee that reading
/// the file back reproduces every ordinate bit for bit.
pub fn export_zeros(zs: &ZeroSet, path: &Path) -> Result<()> {
    let mut out = String::new();
    let _ = writeln!(out, "# kind: {:?}", zs.kind);
    let _ = writeln!(out, "# t_max: {}", zs.t_max);
    let _ = writeln!(out, "# ordinate_tolerance: {:e}", zs.ordinate_tolerance);
    let _ = writeln!(out, "# source: {}", zs.source);
    for &g in &zs.ordinates {
        let _ = writeln!(out, "{g:.17}");
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Read a zero list. `claimed` records what the file is said to contain;
/// the stored kind is always `Imported` since the list cannot be traced to
/// a scan. Errors carry the 1-based offending line number.
pub fn import_zeros(path: &Path, claimed: ZeroKind) -> Result<ZeroSet> {
    let text = std::fs::read_to_string(path)?;
    let mut ordinates = Vec::new();
    let mut prev = 0.0f64;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let g: f64 = s.parse().map_err(|e| Error::Parse {
            line,
            message: format!("bad ordinate {s:?}: {e}"),
        })?;
        if !g.is_finite() || g <= 0.0 {
            return Err(Error::Parse {
                line,
                message: format!("ordinate must be a positive finite number, got {s}"),
            });
        }
        if g <= prev {
            return Err(Error::Parse {
                line,
                message: format!("ordinates must be strictly ascending ({g} after {prev})"),
            });
        }
        ordinates.push(g);
        prev = g;
    }
    let t_max = ordinates.last().copied().unwrap_or(0.0);
    Ok(ZeroSet {
        kind: ZeroKind::Imported,
        ordinates,
        t_max,
        ordinate_tolerance: 1e-6,
        source: format!("{} (as {:?})", path.display(), claimed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ZeroSet {
        ZeroSet {
            kind: ZeroKind::Xi,
            ordinates: vec![14.134725141734695, 21.022039638771556, 25.010857580145688],
            t_max: 26.0,
            ordinate_tolerance: 1e-9,
            source: "test".into(),
        }
    }

    #[test]
    fn round_trip_is_bitwise() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zeros.txt");
        let zs = sample();
        export_zeros(&zs, &path).unwrap();
        let back = import_zeros(&path, ZeroKind::Xi).unwrap();
        assert_eq!(back.kind, ZeroKind::Imported);
        assert_eq!(back.ordinates.len(), zs.ordinates.len());
        for (a, b) in zs.ordinates.iter().zip(&back.ordinates) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        assert!(back.source.contains("zeros.txt"));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.txt");
        std::fs::write(&path, "# header\n14.1\noops\n").unwrap();
        match import_zeros(&path, ZeroKind::Xi) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn descending_pairs_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("desc.txt");
        std::fs::write(&path, "14.1\n13.9\n").unwrap();
        match import_zeros(&path, ZeroKind::Xi) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("ascending"));
            }
            other => panic!("expected monotonicity error, got {other:?}"),
        }
    }

    #[test]
    fn nonpositive_ordinates_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("neg.txt");
        std::fs::write(&path, "-3.0\n").unwrap();
        assert!(matches!(
            import_zeros(&path, ZeroKind::Xi),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
