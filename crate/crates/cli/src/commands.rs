//! Implementations of the operational subcommands. Each prints a single
//! compact JSON summary line to stdout; artifact files are written only
//! where an `--out`-style flag asks for them.

use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;

use xiprime::arith::{psi, s_sum, table_bytes, theory_s_kk};
use xiprime::stats::{
    ah_generate, form_factor, normalize_gaps, normalize_ordinate, AHProcessSpec, AH_SUPPORT,
    GAP_MIN_ORDINATE,
};
use xiprime::verify::{ef_report, EfRequest};
use xiprime::zeros::{
    compare_zprime, count_audit, export_zeros, find_zeros, interlacing_report, GridPolicy,
    InterlacingReport, ZeroKind, ZeroSet,
};

use crate::{data, emit, CliError, Ctx};

/// Zero families selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    /// Completed-function ordinates on the critical line.
    Xi,
    /// Zeros of the derivative of the completed function.
    XiPrime,
    /// Zeros of the derivative of the rotated critical-line function.
    ZPrime,
}

impl KindArg {
    pub fn kind(self) -> ZeroKind {
        match self {
            KindArg::Xi => ZeroKind::Xi,
            KindArg::XiPrime => ZeroKind::XiPrime,
            KindArg::ZPrime => ZeroKind::ZPrime,
        }
    }
}

#[derive(Debug, Args)]
pub struct ArithArgs {
    /// Evaluation point for the spot checks (default: min(n_max, 10^4)).
    #[arg(long)]
    pub x: Option<f64>,

    /// Also write the JSON report to this path.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// Build (or load from cache) the arithmetic table and report diagnostic
/// ratios against the leading-order main terms.
pub fn arith(ctx: &Ctx, args: &ArithArgs) -> Result<(), CliError> {
    let table = data::load_or_build_table(ctx)?;
    let x = args.x.unwrap_or((ctx.cfg.n_max as f64).min(1.0e4));
    let psi_x = psi(&table, x)?;
    let mut s_rows = Vec::new();
    for k in 1..=table.j_max().min(3) {
        let empirical = s_sum(&table, k, k, x)?;
        let main_term = theory_s_kk(k, x);
        s_rows.push(json!({
            "k": k,
            "empirical": empirical,
            "main_term": main_term,
            "ratio": empirical / main_term,
        }));
    }
    let report = json!({
        "n_max": table.n_max(),
        "j_max": table.j_max(),
        "table_bytes": table_bytes(table.n_max(), table.j_max()),
        "x": x,
        "psi": psi_x,
        "psi_over_x": psi_x / x,
        "s_diagonal": s_rows,
    });
    if let Some(out) = &args.out {
        emit::write_json_text(out, serde_json::to_string_pretty(&report).expect("json"))?;
    }
    println!("{report}");
    Ok(())
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[command(subcommand)]
    pub action: Option<ZerosAction>,

    /// Which function to scan up to t-max (scan mode).
    #[arg(long, value_enum, value_name = "KIND")]
    pub kind: Option<KindArg>,

    /// Destination for the scanned ordinate table (scan mode).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ZerosAction {
    /// Count zeros against the smooth density, base and derivative.
    Audit(AuditArgs),
    /// Locate the derivative zeros between consecutive base zeros.
    Interlace(InterlaceArgs),
    /// Offsets between index-paired zeros of the two derivative families.
    CompareZprime(CompareArgs),
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Audit a stored ordinate list instead of scanning.
    #[arg(long, value_name = "PATH")]
    pub zeros: Option<PathBuf>,

    /// What the stored list contains (default: xi).
    #[arg(long, value_enum, value_name = "KIND", requires = "zeros")]
    pub claimed: Option<KindArg>,
}

#[derive(Debug, Args)]
pub struct InterlaceArgs {
    /// Per-gap CSV: midpoint,gap_width,offset,violations.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Per-pair CSV: t,delta,normalized.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

pub fn zeros(ctx: &Ctx, args: &ZerosArgs) -> Result<(), CliError> {
    match &args.action {
        None => zeros_scan(ctx, args),
        Some(ZerosAction::Audit(a)) => zeros_audit(ctx, a),
        Some(ZerosAction::Interlace(a)) => zeros_interlace(ctx, a),
        Some(ZerosAction::CompareZprime(a)) => zeros_compare(ctx, a),
    }
}

/// Fresh scan exported to `--out`. The scan bypasses the cache so the
/// artifact records exactly what this invocation computed.
fn zeros_scan(ctx: &Ctx, args: &ZerosArgs) -> Result<(), CliError> {
    let Some(kind) = args.kind else {
        return Err(CliError::config(
            "zeros: --kind is required (or use one of the audit subcommands)",
        ));
    };
    let Some(out) = &args.out else {
        return Err(CliError::config("zeros: --out is required"));
    };
    let zs = find_zeros(kind.kind(), 0.0, ctx.cfg.t_max, &GridPolicy::default())?;
    export_zeros(&zs, out)?;
    let audit = count_audit(&zs, None);
    println!(
        "{}",
        json!({
            "kind": data::kind_slug(kind.kind()),
            "t_max": ctx.cfg.t_max,
            "count": audit.counted,
            "smooth_count": audit.smooth,
            "mismatch": audit.mismatch,
            "out": out.display().to_string(),
        })
    );
    Ok(())
}

fn zeros_audit(ctx: &Ctx, args: &AuditArgs) -> Result<(), CliError> {
    if let Some(path) = &args.zeros {
        let kind = args.claimed.unwrap_or(KindArg::Xi).kind();
        let zs = data::read_zero_table(path, kind)?;
        let a = count_audit(&zs, None);
        println!(
            "{}",
            json!({
                "list": path.display().to_string(),
                "kind": data::kind_slug(kind),
                "t_max": zs.t_max,
                "counted": a.counted,
                "smooth_count": a.smooth,
                "mismatch": a.mismatch,
            })
        );
        return Ok(());
    }
    let base = data::load_or_scan(ZeroKind::Xi, ctx.cfg.t_max, &ctx.cfg)?;
    let deriv = data::load_or_scan(ZeroKind::XiPrime, ctx.cfg.t_max, &ctx.cfg)?;
    let a = count_audit(&base, Some(&deriv));
    let d = count_audit(&deriv, None);
    println!(
        "{}",
        json!({
            "t_max": ctx.cfg.t_max,
            "base": {"counted": a.counted, "smooth_count": a.smooth, "mismatch": a.mismatch},
            "derivative": {"counted": d.counted, "smooth_count": d.smooth, "mismatch": d.mismatch},
            "n1_minus_n": a.n1_minus_n,
        })
    );
    Ok(())
}

/// Rows for the per-gap CSV shared by `zeros interlace` and the figure
/// pipeline: one row per base gap; `offset` is empty unless the gap holds
/// exactly one derivative zero, and `violations` flags every other count.
pub fn gap_rows(report: &InterlacingReport) -> Vec<String> {
    report
        .pairs
        .iter()
        .map(|e| {
            let midpoint = 0.5 * (e.gap.0 + e.gap.1);
            let width = e.gap.1 - e.gap.0;
            let violations = u8::from(e.inside != 1);
            match e.offset_from_midpoint {
                Some(offset) => format!("{midpoint},{width},{offset},{violations}"),
                None => format!("{midpoint},{width},,{violations}"),
            }
        })
        .collect()
}

fn zeros_interlace(ctx: &Ctx, args: &InterlaceArgs) -> Result<(), CliError> {
    let base = data::load_or_scan(ZeroKind::Xi, ctx.cfg.t_max, &ctx.cfg)?;
    let deriv = data::load_or_scan(ZeroKind::XiPrime, ctx.cfg.t_max, &ctx.cfg)?;
    let report = interlacing_report(&base, &deriv);
    if let Some(out) = &args.out {
        emit::write_rows_csv(out, "midpoint,gap_width,offset,violations", &gap_rows(&report))?;
    }
    println!(
        "{}",
        json!({
            "t_max": ctx.cfg.t_max,
            "gaps": report.pairs.len(),
            "violations": report.violations,
        })
    );
    Ok(())
}

/// Below this ordinate the exponential prefactor dominates and the two
/// derivative families are not yet in one-to-one correspondence (the
/// unscaled derivative picks up extra low critical points), so index
/// pairing starts above a fixed floor.
const COMPARE_FLOOR: f64 = 20.0;

fn zeros_compare(ctx: &Ctx, args: &CompareArgs) -> Result<(), CliError> {
    let xip_all = data::load_or_scan(ZeroKind::XiPrime, ctx.cfg.t_max, &ctx.cfg)?;
    let zp_all = data::load_or_scan(ZeroKind::ZPrime, ctx.cfg.t_max, &ctx.cfg)?;
    let xip = xip_all.restrict(COMPARE_FLOOR, ctx.cfg.t_max);
    let zp = zp_all.restrict(COMPARE_FLOOR, ctx.cfg.t_max);
    let skipped_low = (xip_all.len() - xip.len(), zp_all.len() - zp.len());
    // Above the floor the families advance in lockstep, but near the ceiling
    // one may hold one more zero than the other; trim the longer tail.
    let n = xip.len().min(zp.len());
    let dropped = xip.len().max(zp.len()) - n;
    let deltas = compare_zprime(&truncated(&xip, n), &truncated(&zp, n))?;
    let max_abs_delta = deltas.iter().map(|d| d.delta.abs()).fold(0.0, f64::max);
    let max_abs_normalized = deltas
        .iter()
        .map(|d| d.normalized.abs())
        .fold(0.0, f64::max);
    if let Some(out) = &args.out {
        let rows: Vec<String> = deltas
            .iter()
            .map(|d| format!("{},{},{}", d.t, d.delta, d.normalized))
            .collect();
        emit::write_rows_csv(out, "t,delta,normalized", &rows)?;
    }
    println!(
        "{}",
        json!({
            "t_max": ctx.cfg.t_max,
            "floor": COMPARE_FLOOR,
            "pairs": n,
            "skipped_low": { "xi_prime": skipped_low.0, "z_prime": skipped_low.1 },
            "trimmed_tail": dropped,
            "max_abs_delta": max_abs_delta,
            "max_abs_normalized": max_abs_normalized,
        })
    );
    Ok(())
}

fn truncated(zs: &ZeroSet, n: usize) -> ZeroSet {
    ZeroSet {
        ordinates: zs.ordinates[..n].to_vec(),
        ..zs.clone()
    }
}

#[derive(Debug, Args)]
pub struct FormfactorArgs {
    /// Stored ordinate table to analyze.
    #[arg(long, value_name = "PATH")]
    pub zeros: PathBuf,

    /// Height cutoff for the estimator (default: t-max).
    #[arg(long = "T", value_name = "T")]
    pub t: Option<f64>,

    /// Output CSV: alpha,empirical,theory_f1,theory_montgomery,sine_ref.
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
}

pub fn formfactor(ctx: &Ctx, args: &FormfactorArgs) -> Result<(), CliError> {
    let zs = data::read_zero_table(&args.zeros, ZeroKind::Imported)?;
    let t = args.t.unwrap_or(ctx.cfg.t_max);
    let alphas = ctx.cfg.alpha_grid.values();
    let curve = form_factor(&zs, t, &alphas, ctx.cfg.window, ctx.cfg.big_k)?;
    emit::write_curve_csv(&args.out, &curve)?;
    println!(
        "{}",
        json!({
            "t": t,
            "zeros_used": zs.in_range(0.0, t).len(),
            "k": curve.k_trunc,
            "window": curve.window,
            "neglected_weight_bound": curve.neglected_weight_bound,
            "out": args.out.display().to_string(),
        })
    );
    Ok(())
}

#[derive(Debug, Args)]
pub struct GapsArgs {
    /// Stored ordinate table to analyze.
    #[arg(long, value_name = "PATH")]
    pub zeros: PathBuf,

    /// Extra report thresholds, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "T1,T2,...")]
    pub thresholds: Vec<f64>,

    /// Also write the JSON report to this path.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Histogram CSV of normalized gaps: bin_lo,bin_hi,count.
    #[arg(long, value_name = "PATH")]
    pub hist_out: Option<PathBuf>,

    /// Histogram bin count on [0, hist-max).
    #[arg(long, default_value_t = 60)]
    pub bins: usize,

    /// Histogram upper edge.
    #[arg(long, default_value_t = 3.0)]
    pub hist_max: f64,
}

pub fn gaps(_ctx: &Ctx, args: &GapsArgs) -> Result<(), CliError> {
    let zs = data::read_zero_table(&args.zeros, ZeroKind::Imported)?;
    // The unfolding map is calibrated only above 2*pi*e; drop anything below.
    let restricted = zs.restrict(GAP_MIN_ORDINATE * (1.0 + 1e-15), f64::INFINITY);
    let stats = normalize_gaps(&restricted, &args.thresholds)?;
    let mut hist_overflow = None;
    if let Some(hist_out) = &args.hist_out {
        if args.bins == 0 || !(args.hist_max.is_finite() && args.hist_max > 0.0) {
            return Err(CliError::config(
                "histogram needs bins >= 1 and a positive finite hist-max",
            ));
        }
        let width = args.hist_max / args.bins as f64;
        let mut counts = vec![0u64; args.bins];
        let mut overflow = 0u64;
        for &g in &stats.normalized_gaps {
            let i = (g / width) as usize;
            match counts.get_mut(i) {
                Some(c) => *c += 1,
                None => overflow += 1,
            }
        }
        emit::write_hist_csv(hist_out, width, &counts)?;
        hist_overflow = Some(overflow);
    }
    let report = json!({
        "zeros": restricted.len(),
        "t_max": restricted.t_max,
        "gaps": stats.normalized_gaps.len(),
        "mean": stats.mean,
        "fraction_below": stats
            .fraction_below
            .iter()
            .map(|(threshold, fraction)| json!({"threshold": threshold, "fraction": fraction}))
            .collect::<Vec<_>>(),
        "hist_overflow": hist_overflow,
    });
    if let Some(out) = &args.out {
        emit::write_json_text(out, serde_json::to_string_pretty(&report).expect("json"))?;
    }
    println!("{report}");
    Ok(())
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(subcommand)]
    pub process: SimulateProcess,
}

#[derive(Debug, Subcommand)]
pub enum SimulateProcess {
    /// Ladder whose unfolded spacings live on {1/2, 1, 3/2, 2}.
    Ah(AhArgs),
}

#[derive(Debug, Args)]
pub struct AhArgs {
    /// Number of ordinates to generate.
    #[arg(long, default_value_t = 100_000)]
    pub count: usize,

    /// Spacing probabilities at 1/2,1,3/2,2 (four comma-separated values).
    #[arg(long, value_delimiter = ',', value_name = "P1,P2,P3,P4")]
    pub probs: Option<Vec<f64>>,

    /// Raw height where the ladder starts.
    #[arg(long)]
    pub start_height: Option<f64>,

    /// Export the generated ordinates as a zero table.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

pub fn simulate(ctx: &Ctx, args: &SimulateArgs) -> Result<(), CliError> {
    match &args.process {
        SimulateProcess::Ah(a) => simulate_ah(ctx, a),
    }
}

fn simulate_ah(ctx: &Ctx, args: &AhArgs) -> Result<(), CliError> {
    let mut spec = AHProcessSpec {
        count: args.count,
        seed: ctx.cfg.seed,
        ..AHProcessSpec::default()
    };
    if let Some(probs) = &args.probs {
        spec.probs = probs.as_slice().try_into().map_err(|_| {
            CliError::config(format!("--probs needs exactly 4 values, got {}", probs.len()))
        })?;
    }
    if let Some(h) = args.start_height {
        spec.start_height = h;
    }
    let ladder = ah_generate(&spec)?;
    if let Some(out) = &args.out {
        export_zeros(&ladder, out)?;
    }
    // Unfold and classify each consecutive spacing at the lattice values;
    // the generator works on the unfolded scale, so 0.05 is pure slack.
    let unfolded: Vec<f64> = ladder
        .ordinates
        .iter()
        .map(|&g| normalize_ordinate(g))
        .collect::<xiprime::Result<_>>()?;
    let mut counts = [0u64; 4];
    let mut other = 0u64;
    for w in unfolded.windows(2) {
        let gap = w[1] - w[0];
        match AH_SUPPORT.iter().position(|&s| (gap - s).abs() <= 0.05) {
            Some(i) => counts[i] += 1,
            None => other += 1,
        }
    }
    println!(
        "{}",
        json!({
            "spec": serde_json::to_value(&spec).expect("json"),
            "t_min": ladder.ordinates.first(),
            "t_max_ordinate": ladder.ordinates.last(),
            "spacing_support": AH_SUPPORT,
            "spacing_counts": counts,
            "spacing_other": other,
            "out": args.out.as_ref().map(|p| p.display().to_string()),
        })
    );
    Ok(())
}

#[derive(Debug, Args)]
pub struct ExplicitArgs {
    /// Dirichlet argument, at least 1.
    #[arg(long)]
    pub x: f64,

    /// Imaginary part of the sample point.
    #[arg(long)]
    pub t: f64,

    /// Real part of the sample point, in (5/4, 2).
    #[arg(long, default_value_t = 1.5)]
    pub sigma: f64,

    /// Derivative-zero table; scanned (and cached) when omitted.
    #[arg(long, value_name = "PATH")]
    pub zeros: Option<PathBuf>,

    /// Output JSON path (report goes to stdout when omitted).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

pub fn explicit(ctx: &Ctx, args: &ExplicitArgs) -> Result<(), CliError> {
    let table = data::load_or_build_table(ctx)?;
    let xip = match &args.zeros {
        Some(path) => data::read_zero_table(path, ZeroKind::XiPrime)?,
        None => data::load_or_scan(
            ZeroKind::XiPrime,
            args.t.abs() + ctx.cfg.window,
            &ctx.cfg,
        )?,
    };
    let request = EfRequest {
        x: args.x,
        t: args.t,
        sigma: args.sigma,
        k: ctx.cfg.big_k,
    };
    let report = ef_report(&[request], &xip, &table, ctx.cfg.window)?;
    let text = serde_json::to_string_pretty(&report).expect("json");
    match &args.out {
        Some(out) => {
            emit::write_json_text(out, text)?;
            let s = &report.samples[0];
            println!(
                "{}",
                json!({
                    "x": s.x,
                    "t": s.t,
                    "sigma": s.sigma,
                    "k": s.k,
                    "rel_residual": s.rel_residual,
                    "budget": s.budget,
                    "out": out.display().to_string(),
                })
            );
        }
        None => println!("{text}"),
    }
    Ok(())
}
