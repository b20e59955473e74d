use std::f64::consts::{PI, TAU};
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use vcjones::asymptotics::{fit_asymptotic, ratio_conjecture_scan, strictly_decreasing, FitResult};
use vcjones::calibration::WHITEHEAD_VOLUME;
use vcjones::cyclotomic::nonvanish_scan;
use vcjones::jones::{jones_wl_at_root, KnotSpec, TorusKnot};
use vcjones::numeric::{lobachevsky, RootContext};

use crate::cache::Cache;
use crate::error::{CliError, CliResult};
use crate::range::NRange;
use crate::record::{evaluate, read_log_abs, torus, write_csv, write_json, Descriptor, Evaluation, SweepRecord};
use crate::{ExpectB, FitTarget, Format, KnotArgs, KnotKind, RunConfig};

// 4 * Catalan's constant, 40 significant digits.
const WHITEHEAD_VOLUME_DIGITS: &str = "3.663862376708876060218414059729536443097";

fn descriptor(k: &KnotArgs) -> CliResult<Descriptor> {
    let spec = match k.knot {
        KnotKind::Wl => KnotSpec::WhiteheadLink { r: k.r },
        KnotKind::Torus => KnotSpec::Torus(torus(k.p, k.q)?),
        KnotKind::Wd => KnotSpec::WhiteheadDouble { companion: torus(k.p, k.q)?, r: k.r },
    };
    Ok(Descriptor { spec })
}

/// Evaluations for `orders`, reusing and extending the cache. A cache that
/// cannot be read or written is reported and bypassed.
fn evaluations(cfg: &RunConfig, desc: Descriptor, orders: &[u64]) -> CliResult<Vec<Evaluation>> {
    if orders.contains(&0) {
        return Err(CliError::Usage("N must be at least 1".into()));
    }
    let mut cache = match &cfg.cache_dir {
        Some(dir) => match Cache::open(dir, desc) {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("vcjones: cache disabled: {e}");
                None
            }
        },
        None => None,
    };
    let missing: Vec<u64> =
        orders.iter().copied().filter(|&n| cache.as_ref().and_then(|c| c.get(n)).is_none()).collect();
    let fresh = missing.par_iter().map(|&n| evaluate(desc, n)).collect::<CliResult<Vec<_>>>()?;
    if let Some(c) = cache.as_mut() {
        if let Err(e) = c.append(&fresh) {
            eprintln!("vcjones: could not update cache: {e}");
        }
    }
    eprintln!("cache: {} hits, {} evaluated", orders.len() - fresh.len(), fresh.len());
    let mut out = Vec::with_capacity(orders.len());
    let mut fresh = fresh.into_iter();
    for &n in orders {
        match cache.as_ref().and_then(|c| c.get(n)) {
            Some(e) => out.push(e.clone()),
            None => out.push(fresh.next().expect("one fresh evaluation per missing order")),
        }
    }
    Ok(out)
}

fn emit_records<W: Write>(cfg: &RunConfig, out: W, rows: &[SweepRecord]) -> CliResult<()> {
    match cfg.format {
        Format::Csv => write_csv(out, rows),
        Format::Json => write_json(out, rows),
    }
}

pub fn eval(cfg: &RunConfig, knot: &KnotArgs, n: u64) -> CliResult<bool> {
    let desc = descriptor(knot)?;
    let evals = evaluations(cfg, desc, &[n])?;
    let rows: Vec<_> = evals.iter().map(|e| SweepRecord::new(desc, e)).collect();
    emit_records(cfg, io::stdout().lock(), &rows)?;
    Ok(true)
}

pub fn sweep(cfg: &RunConfig, knot: &KnotArgs, range: NRange, out: Option<&Path>) -> CliResult<bool> {
    let desc = descriptor(knot)?;
    // open the output first so a bad path fails before any work is done
    let sink: Box<dyn Write> = match out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?))
        }
        None => Box::new(io::stdout().lock()),
    };
    let mut orders = Vec::with_capacity(range.len());
    orders.extend(range.values());
    let evals = evaluations(cfg, desc, &orders)?;
    let rows: Vec<_> = evals.iter().map(|e| SweepRecord::new(desc, e)).collect();
    emit_records(cfg, sink, &rows)?;
    Ok(true)
}

#[derive(Serialize)]
struct Verdict {
    name: &'static str,
    value: f64,
    target: f64,
    tolerance: f64,
    pass: bool,
}

#[derive(Serialize)]
struct FitReport {
    a: f64,
    b: f64,
    c: f64,
    max_residual: f64,
    rms_residual: f64,
    n_points: usize,
    window: [f64; 3],
    verdicts: Vec<Verdict>,
}

fn verdicts(
    f: &FitResult,
    target: Option<FitTarget>,
    expect_b: Option<ExpectB>,
    a_tol: Option<f64>,
    b_tol: f64,
) -> Vec<Verdict> {
    let mut out = Vec::new();
    if let Some(t) = target {
        let (goal, default_tol) = match t {
            FitTarget::WhiteheadVolume => (WHITEHEAD_VOLUME, 0.018),
            FitTarget::Zero => (0.0, 0.01),
        };
        let tolerance = a_tol.unwrap_or(default_tol);
        out.push(Verdict { name: "a", value: f.a, target: goal, tolerance, pass: (f.a - goal).abs() <= tolerance });
    }
    if let Some(e) = expect_b {
        let goal = match e {
            ExpectB::ThreePi => 3.0 * PI,
            ExpectB::FourPi => 4.0 * PI,
        };
        let tolerance = b_tol * goal;
        out.push(Verdict { name: "b", value: f.b, target: goal, tolerance, pass: (f.b - goal).abs() <= tolerance });
    }
    out
}

pub fn fit(
    cfg: &RunConfig,
    input: &Path,
    target: Option<FitTarget>,
    expect_b: Option<ExpectB>,
    a_tol: Option<f64>,
    b_tol: f64,
) -> CliResult<bool> {
    let points = if input == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        read_log_abs(buf.as_slice())?
    } else {
        let f = File::open(input).map_err(|e| CliError::Io(format!("{}: {e}", input.display())))?;
        read_log_abs(f)?
    };
    let points: Vec<(f64, f64)> = points.into_iter().map(|(n, l)| (n, TAU * l)).collect();
    let f = fit_asymptotic(&points)?;
    let verdicts = verdicts(&f, target, expect_b, a_tol, b_tol);
    let pass = verdicts.iter().all(|v| v.pass);
    let report = FitReport {
        a: f.a,
        b: f.b,
        c: f.c,
        max_residual: f.max_residual,
        rms_residual: f.rms_residual,
        n_points: f.n_points,
        window: [f.window.0, f.window.1, f.window.2],
        verdicts,
    };
    let mut out = io::stdout().lock();
    match cfg.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Csv => {
            writeln!(out, "a = {:.9}", report.a)?;
            writeln!(out, "b = {:.9}", report.b)?;
            writeln!(out, "c = {:.9}", report.c)?;
            writeln!(out, "max_residual = {:.3e}", report.max_residual)?;
            writeln!(out, "rms_residual = {:.3e}", report.rms_residual)?;
            writeln!(out, "n_points = {}", report.n_points)?;
            writeln!(out, "window = {}:{}:{}", report.window[0], report.window[1], report.window[2])?;
            for v in &report.verdicts {
                writeln!(
                    out,
                    "{} {}: {:.6} vs {:.6} (tolerance {:.4})",
                    if v.pass { "PASS" } else { "FAIL" },
                    v.name,
                    v.value,
                    v.target,
                    v.tolerance
                )?;
            }
        }
    }
    Ok(pass)
}

fn knot_from_pq(p: u32, q: u32) -> CliResult<TorusKnot> {
    if p.gcd(&q) != 1 {
        return Err(CliError::Usage(format!("p = {p} and q = {q} are not coprime")));
    }
    Ok(TorusKnot::new(p, q)?)
}

pub fn nonvanish(cfg: &RunConfig, p: u32, q: u32, k: u32) -> CliResult<bool> {
    let knot = knot_from_pq(p, q)?;
    let report = nonvanish_scan(knot, k)?;
    let mut out = io::stdout().lock();
    match cfg.format {
        Format::Csv => {
            writeln!(out, "N,exact_zero,float_abs")?;
            for r in &report.rows {
                writeln!(out, "{},{},{:e}", r.n, r.is_zero, r.float_abs)?;
            }
            writeln!(out, "zeros: {} of {}", report.zero_count(), report.period())?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                #[serde(rename = "N")]
                n: i64,
                exact_zero: bool,
                float_abs: f64,
            }
            let rows: Vec<Row> =
                report.rows.iter().map(|r| Row { n: r.n, exact_zero: r.is_zero, float_abs: r.float_abs }).collect();
            let obj = serde_json::json!({
                "p": p, "q": q, "k": k, "rows": rows,
                "zeros": report.zero_count(), "period": report.period(),
            });
            writeln!(out, "{obj}")?;
        }
    }
    Ok(true)
}

pub fn ratio(cfg: &RunConfig, p: u32, q: u32, n: Option<u64>, series: Option<Vec<u64>>, delta: f64) -> CliResult<bool> {
    let knot = knot_from_pq(p, q)?;
    let orders = match (n, &series) {
        (Some(n), _) => vec![n],
        (None, Some(s)) if !s.is_empty() => s.clone(),
        _ => return Err(CliError::Usage("give --N or a non-empty --series".into())),
    };
    let scans = orders.par_iter().map(|&n| ratio_conjecture_scan(knot, n, delta)).collect::<Result<Vec<_>, _>>()?;
    let trend = series.is_some().then(|| strictly_decreasing(&scans));
    let mut out = io::stdout().lock();
    match cfg.format {
        Format::Csv => {
            writeln!(out, "N,delta,value,argmax,considered,excluded")?;
            for s in &scans {
                writeln!(out, "{},{},{:.9e},{},{},{}", s.order, s.delta, s.value, s.argmax, s.considered, s.excluded)?;
            }
            if let Some(t) = trend {
                writeln!(out, "decreasing: {}", if t { "PASS" } else { "FAIL" })?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = scans
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "N": s.order, "delta": s.delta, "value": s.value, "argmax": s.argmax,
                        "considered": s.considered, "excluded": s.excluded,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::json!({ "rows": rows, "decreasing": trend }))?;
        }
    }
    Ok(trend.unwrap_or(true))
}

pub fn volume(cfg: &RunConfig, n: Option<u64>) -> CliResult<bool> {
    let computed = 8.0 * lobachevsky(PI / 4.0, 1e-15)?;
    let estimate = match n {
        Some(n) => Some(jones_wl_at_root(&RootContext::new(n)?, 0).two_pi_log_over_n),
        None => None,
    };
    let mut out = io::stdout().lock();
    match cfg.format {
        Format::Csv => {
            writeln!(out, "8 L(pi/4) = {computed:.15}")?;
            writeln!(out, "reference = {WHITEHEAD_VOLUME_DIGITS}")?;
            if let (Some(n), Some(e)) = (n, estimate) {
                writeln!(out, "2 pi log|J_WL(0),{n}| / {n} = {e:.15}")?;
            }
        }
        Format::Json => {
            let obj = serde_json::json!({
                "volume": computed, "reference": WHITEHEAD_VOLUME_DIGITS,
                "N": n, "two_pi_log_over_N": estimate,
            });
            writeln!(out, "{obj}")?;
        }
    }
    Ok(true)
}
