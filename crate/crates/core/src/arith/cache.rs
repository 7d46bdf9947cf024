//! Binary on-disk cache for the convolution tables.
//!
//! Layout: magic `XPL1`, then `n_max` and `j_max` as little-endian u64,
//! then the dense rows as little-endian f64, `n_max` values each (indices
//! 1..=n_max), in the order Λ, Λ_2..Λ_{j_max}, α_2..α_{j_max}. The prime
//! lists are not stored; loading reruns the linear sieve, which is cheap
//! next to the convolutions the cache avoids.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::table::{table_bytes, ArithTable};
use crate::{Error, Result};

const MAGIC: &[u8; 4] = b"XPL1";

fn write_row(w: &mut impl Write, row: &[f64]) -> std::io::Result<()> {
    // Skip the index-0 padding entry.
    let mut buf = Vec::with_capacity(64 * 1024);
    for chunk in row[1..].chunks(8 * 1024) {
        buf.clear();
        for v in chunk {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        w.write_all(&buf)?;
    }
    Ok(())
}

fn read_row(r: &mut impl Read, n_max: usize) -> Result<Vec<f64>> {
    let mut row = Vec::with_capacity(n_max + 1);
    row.push(0.0);
    let mut remaining = n_max;
    let mut buf = vec![0u8; 64 * 1024];
    while remaining > 0 {
        let take = remaining.min(buf.len() / 8);
        let bytes = &mut buf[..take * 8];
        r.read_exact(bytes)
            .map_err(|_| Error::CacheFormat("table cache file is truncated".into()))?;
        for chunk in bytes.chunks_exact(8) {
            row.push(f64::from_le_bytes(chunk.try_into().unwrap()));
        }
        remaining -= take;
    }
    Ok(row)
}

/// Write the dense rows of `table` to `path`.
pub fn save(table: &ArithTable, path: &Path) -> Result<()> {
    let file = File::create(path)?;
    let mut w = BufWriter::new(file);
    w.write_all(MAGIC)?;
    w.write_all(&table.n_max().to_le_bytes())?;
    w.write_all(&(table.j_max() as u64).to_le_bytes())?;
    let (lambda, lambda_hi, alpha_hi) = table.rows();
    write_row(&mut w, lambda)?;
    for row in lambda_hi {
        write_row(&mut w, row)?;
    }
    for row in alpha_hi {
        write_row(&mut w, row)?;
    }
    w.flush()?;
    Ok(())
}

/// Read a table back, enforcing the same memory budget as a fresh build.
pub fn load(path: &Path, budget_bytes: u64) -> Result<ArithTable> {
    let file = File::open(path)?;
    let mut r = BufReader::new(file);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)
        .map_err(|_| Error::CacheFormat("table cache file is truncated".into()))?;
    if &magic != MAGIC {
        return Err(Error::CacheFormat(
            "file does not start with the table cache magic".into(),
        ));
    }
    let mut word = [0u8; 8];
    r.read_exact(&mut word)
        .map_err(|_| Error::CacheFormat("table cache file is truncated".into()))?;
    let n_max = u64::from_le_bytes(word);
    r.read_exact(&mut word)
        .map_err(|_| Error::CacheFormat("table cache file is truncated".into()))?;
    let j_max = u64::from_le_bytes(word);
    if n_max < 2 || j_max < 1 || j_max > 64 {
        return Err(Error::CacheFormat(format!(
            "implausible cache header: n_max={n_max}, j_max={j_max}"
        )));
    }
    let required = table_bytes(n_max, j_max as u32);
    if required > budget_bytes {
        return Err(Error::Capacity {
            required_bytes: required,
            budget_bytes,
        });
    }

    let n = n_max as usize;
    let lambda = read_row(&mut r, n)?;
    let mut lambda_hi = Vec::new();
    for _ in 2..=j_max {
        lambda_hi.push(read_row(&mut r, n)?);
    }
    let mut alpha_hi = Vec::new();
    for _ in 2..=j_max {
        alpha_hi.push(read_row(&mut r, n)?);
    }
    let mut tail = [0u8; 1];
    if r.read(&mut tail)? != 0 {
        return Err(Error::CacheFormat(
            "table cache file has trailing bytes".into(),
        ));
    }
    Ok(ArithTable::from_rows(
        n_max,
        j_max as u32,
        lambda,
        lambda_hi,
        alpha_hi,
    ))
}
