//! Locating, persisting, and cross-checking zeros of the scaled functions:
//! sign-change scans with bisection refinement, count audits against the
//! smooth density, interlacing diagnostics, and text import/export.

mod audit;
mod io;
mod scan;
mod types;

pub use audit::{
    compare_zprime, count_audit, interlacing_report, smooth_count, CountAudit, GapEntry,
    InterlacingReport, ZeroPairDelta,
};
pub use io::{export_zeros, import_zeros};
pub use scan::find_zeros;
pub use types::{GridPolicy, ZeroKind, ZeroSet};
