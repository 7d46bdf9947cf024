//! Run configuration: defaults, the plain-text `key = value` config file,
//! and command-line overrides. Precedence, lowest to highest: built-in
//! defaults, config file, the `XIPRIME_CACHE` environment variable (cache
//! directory only), command-line flags.

use std::path::{Path, PathBuf};

use crate::CliError;

/// Inclusive alpha grid written as `start:stop:step`.
#[derive(Debug, Clone, Copy)]
pub struct AlphaGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl AlphaGrid {
    pub fn parse(text: &str) -> Result<AlphaGrid, String> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("alpha grid must be start:stop:step, got {text:?}"));
        }
        let mut nums = [0.0f64; 3];
        for (slot, part) in nums.iter_mut().zip(&parts) {
            *slot = part
                .trim()
                .parse()
                .map_err(|e| format!("bad alpha grid component {part:?}: {e}"))?;
        }
        let grid = AlphaGrid {
            start: nums[0],
            stop: nums[1],
            step: nums[2],
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<(), String> {
        let ok = self.start.is_finite()
            && self.stop.is_finite()
            && self.step.is_finite()
            && self.step > 0.0
            && self.start >= 0.0
            && self.stop >= self.start;
        if ok {
            Ok(())
        } else {
            Err(format!(
                "alpha grid needs 0 <= start <= stop and step > 0, got {self}"
            ))
        }
    }

    /// Grid points start, start+step, ... The final point is clamped to
    /// `stop` so binary rounding never pushes it past the declared endpoint
    /// (theory curves reject grids reaching beyond 1).
    pub fn values(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        let mut vals: Vec<f64> = (0..=n).map(|i| self.start + i as f64 * self.step).collect();
        if let Some(last) = vals.last_mut() {
            if *last > self.stop {
                *last = self.stop;
            }
        }
        vals
    }
}

impl std::fmt::Display for AlphaGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

/// Every knob shared across subcommands. Each field is settable from the
/// config file under the same name (`K` for `big_k`) and from the matching
/// global flag.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Height ceiling for zero scans and pair-sum estimators.
    pub t_max: f64,
    /// Arithmetic table extent.
    pub n_max: u64,
    /// Dirichlet-series truncation order K; never above `j_max`.
    pub big_k: u32,
    /// Highest convolution order stored in the arithmetic table.
    pub j_max: u32,
    /// Pair window for form factors and zero-sum window for the explicit
    /// formula (the latter requires at least 500).
    pub window: f64,
    /// Alpha grid for form-factor curves.
    pub alpha_grid: AlphaGrid,
    /// Directory holding zero-scan and table caches.
    pub cache_dir: PathBuf,
    /// Seed for synthetic processes; no ambient entropy anywhere.
    pub seed: u64,
    /// Memory budget in bytes for arithmetic tables.
    pub memory_budget: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            t_max: 1000.0,
            n_max: 200_000,
            big_k: 5,
            j_max: 8,
            window: 500.0,
            alpha_grid: AlphaGrid {
                start: 0.0,
                stop: 1.0,
                step: 0.01,
            },
            cache_dir: PathBuf::from("xiprime-cache"),
            seed: 1,
            memory_budget: 1 << 30,
        }
    }
}

/// Command-line mirrors of the config keys, global so they can follow any
/// subcommand.
#[derive(Debug, clap::Args)]
pub struct Overrides {
    /// Height ceiling for zero scans and estimators.
    #[arg(long, global = true, value_name = "T")]
    pub t_max: Option<f64>,

    /// Arithmetic table extent.
    #[arg(long, global = true, value_name = "N")]
    pub n_max: Option<u64>,

    /// Dirichlet-series truncation order (at most j-max).
    #[arg(long = "K", global = true, value_name = "K")]
    pub big_k: Option<u32>,

    /// Highest convolution order stored in the arithmetic table.
    #[arg(long, global = true, value_name = "J")]
    pub j_max: Option<u32>,

    /// Pair window for form factors; zero-sum window (>= 500) for the
    /// explicit formula.
    #[arg(long, global = true, value_name = "W")]
    pub window: Option<f64>,

    /// Alpha grid as start:stop:step.
    #[arg(long, global = true, value_name = "A:B:H")]
    pub alpha_grid: Option<String>,

    /// Cache directory; wins over both the config file and XIPRIME_CACHE.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Seed for synthetic processes.
    #[arg(long, global = true, value_name = "SEED")]
    pub seed: Option<u64>,

    /// Memory budget in bytes for arithmetic tables.
    #[arg(long, global = true, value_name = "BYTES")]
    pub memory_budget: Option<u64>,

    /// Binary arithmetic-table cache path (default: a file in the cache
    /// directory named after the table extents).
    #[arg(long, global = true, value_name = "PATH")]
    pub table_cache: Option<PathBuf>,

    /// Worker threads for parallel computations. Reductions run in a fixed
    /// order, so results do not depend on this.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
}

impl RunConfig {
    /// Defaults, then the config file, then `XIPRIME_CACHE`, then flags.
    pub fn resolve(file: Option<&Path>, flags: &Overrides) -> Result<RunConfig, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            cfg.apply_file(path)?;
        }
        if let Ok(dir) = std::env::var("XIPRIME_CACHE") {
            if !dir.is_empty() {
                cfg.cache_dir = PathBuf::from(dir);
            }
        }
        cfg.apply_flags(flags)?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::config(format!("cannot read config file {}: {e}", path.display()))
        })?;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let item = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| {
                    CliError::config(format!(
                        "{} line {}: expected `key = value`, got {line:?}",
                        path.display(),
                        idx + 1
                    ))
                })?;
            self.set_key(item.0, item.1).map_err(|msg| {
                CliError::config(format!("{} line {}: {msg}", path.display(), idx + 1))
            })?;
        }
        Ok(())
    }

    fn set_key(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: std::str::FromStr>(v: &str) -> Result<T, String>
        where
            T::Err: std::fmt::Display,
        {
            v.parse().map_err(|e| format!("bad value {v:?}: {e}"))
        }
        match key {
            "t_max" => self.t_max = num(value)?,
            "n_max" => self.n_max = num(value)?,
            "K" => self.big_k = num(value)?,
            "j_max" => self.j_max = num(value)?,
            "window" => self.window = num(value)?,
            "alpha_grid" => self.alpha_grid = AlphaGrid::parse(value)?,
            "cache_dir" => self.cache_dir = PathBuf::from(value),
            "seed" => self.seed = num(value)?,
            "memory_budget" => self.memory_budget = num(value)?,
            _ => return Err(format!("unknown config key {key:?}")),
        }
        Ok(())
    }

    fn apply_flags(&mut self, flags: &Overrides) -> Result<(), CliError> {
        if let Some(v) = flags.t_max {
            self.t_max = v;
        }
        if let Some(v) = flags.n_max {
            self.n_max = v;
        }
        if let Some(v) = flags.big_k {
            self.big_k = v;
        }
        if let Some(v) = flags.j_max {
            self.j_max = v;
        }
        if let Some(v) = flags.window {
            self.window = v;
        }
        if let Some(text) = &flags.alpha_grid {
            self.alpha_grid = AlphaGrid::parse(text).map_err(CliError::config)?;
        }
        if let Some(dir) = &flags.cache_dir {
            self.cache_dir = dir.clone();
        }
        if let Some(v) = flags.seed {
            self.seed = v;
        }
        if let Some(v) = flags.memory_budget {
            self.memory_budget = v;
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), CliError> {
        let check = |ok: bool, msg: &str| {
            if ok {
                Ok(())
            } else {
                Err(CliError::config(msg))
            }
        };
        check(
            self.t_max.is_finite() && self.t_max > 0.0,
            "t_max must be a positive finite number",
        )?;
        check(self.n_max >= 2, "n_max must be at least 2")?;
        check(self.j_max >= 1, "j_max must be at least 1")?;
        check(self.big_k >= 1, "K must be at least 1")?;
        if self.big_k > self.j_max {
            return Err(CliError::config(format!(
                "K = {} exceeds j_max = {}; raise j_max or lower K",
                self.big_k, self.j_max
            )));
        }
        check(
            self.window.is_finite() && self.window > 0.0,
            "window must be a positive finite number",
        )?;
        self.alpha_grid.validate().map_err(CliError::config)?;
        check(self.memory_budget > 0, "memory_budget must be positive")?;
        Ok(())
    }
}
