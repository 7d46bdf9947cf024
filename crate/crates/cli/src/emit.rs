//! Artifact writers. Computation may run on the worker pool, but every
//! write below happens on the calling thread, one artifact at a time, so
//! partially interleaved files cannot occur. Floats are written in the
//! shortest round-trip form, which is reproducible bit for bit.

use std::fmt::Write as _;
use std::path::Path;

use xiprime::stats::FormFactorCurve;

use crate::CliError;

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Lib(xiprime::Error::from(e)))?;
    Ok(())
}

/// Pretty JSON artifact with a trailing newline.
pub fn write_json_text(path: &Path, mut text: String) -> Result<(), CliError> {
    text.push('\n');
    write_text(path, &text)
}

/// A form-factor curve with the standard five-column header.
pub fn write_curve_csv(path: &Path, curve: &FormFactorCurve) -> Result<(), CliError> {
    let mut out = String::from("alpha,empirical,theory_f1,theory_montgomery,sine_ref\n");
    for i in 0..curve.alphas.len() {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            curve.alphas[i],
            curve.empirical[i],
            curve.theory_f1[i],
            curve.theory_montgomery[i],
            curve.sine_ref[i]
        );
    }
    write_text(path, &out)
}

/// Arbitrary pre-rendered CSV rows under a fixed header.
pub fn write_rows_csv(path: &Path, header: &str, rows: &[String]) -> Result<(), CliError> {
    let mut out = String::with_capacity(header.len() + 1 + rows.iter().map(|r| r.len() + 1).sum::<usize>());
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(row);
        out.push('\n');
    }
    write_text(path, &out)
}

/// Equal-width histogram rows `bin_lo,bin_hi,count`.
pub fn write_hist_csv(path: &Path, width: f64, counts: &[u64]) -> Result<(), CliError> {
    let rows: Vec<String> = counts
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{},{},{c}", i as f64 * width, (i + 1) as f64 * width))
        .collect();
    write_rows_csv(path, "bin_lo,bin_hi,count", &rows)
}
