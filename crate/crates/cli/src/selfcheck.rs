//! Fast internal consistency checks: exact against float, algebraic identities,
//! and the Lobachevsky substrate.

use std::f64::consts::PI;
use std::io::{self, Write};

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use vcjones::asymptotics::Sign;
use vcjones::cyclotomic::{a_sum_exact, jones_wl_exact, nonvanish_scan};
use vcjones::jones::{hat_jones_torus, hat_jones_torus_tderiv, jones_torus_limit, jones_wl_at_root, TorusKnot};
use vcjones::numeric::{lobachevsky, RootContext};
use vcjones::Result;

use crate::error::CliResult;
use crate::{Format, RunConfig};

#[derive(Serialize)]
struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn exact_vs_float() -> Result<Check> {
    let mut worst = 0.0f64;
    for n in 1..=16 {
        for r in [0, 1] {
            let exact = jones_wl_exact(n, r)?.embed();
            let float = jones_wl_at_root(&RootContext::new(n)?, r).value.to_complex();
            worst = worst.max((exact - float).norm() / exact.norm());
        }
    }
    Ok(Check { name: "WL exact vs float, N <= 16", pass: worst <= 1e-10, detail: format!("worst {worst:.1e}") })
}

fn a_sum_identities() -> Result<Check> {
    let mut knots = Vec::new();
    for q in 2..=5u32 {
        for p in (q + 1)..=35 / q {
            if p.gcd(&q) == 1 {
                knots.push(TorusKnot::new(p, q)?);
            }
        }
    }
    let bad = knots
        .par_iter()
        .map(|&knot| -> Result<usize> {
            let half = 2 * knot.pq();
            let mut bad = 0;
            for n in 0..2 * half {
                for s in [Sign::Plus, Sign::Minus] {
                    bad += usize::from(!a_sum_exact(knot, n, 0, s)?.is_zero());
                    bad += usize::from(a_sum_exact(knot, n, 1, s)? != a_sum_exact(knot, n + half, 1, s.flipped())?);
                }
            }
            Ok(bad)
        })
        .sum::<Result<usize>>()?;
    Ok(Check {
        name: "A(N,0) = 0 and periodicity, pq <= 35",
        pass: bad == 0,
        detail: format!("{} knots, {bad} failures", knots.len()),
    })
}

fn torus_vanishing() -> Result<Check> {
    let mut worst = 0.0f64;
    for (p, q) in [(2, 3), (2, 5), (3, 4)] {
        let knot = TorusKnot::new(p, q)?;
        for n in 2..=60u64 {
            let ctx = RootContext::new(n)?;
            let hat = hat_jones_torus(knot, n, &ctx)?.to_complex().norm() / (2 * n) as f64;
            let d = hat_jones_torus_tderiv(knot, n, &ctx)?.to_complex();
            let j = jones_torus_limit(knot, n, &ctx)?.to_complex();
            worst = worst.max(hat).max((d + j * n as f64).norm() / d.norm());
        }
    }
    Ok(Check { name: "hat J_N = 0 and t d/dt hat J = -N J", pass: worst <= 1e-9, detail: format!("worst {worst:.1e}") })
}

fn nonvanishing() -> Result<Check> {
    let zeros: usize = (3..=15u32)
        .step_by(2)
        .map(|p| Ok(nonvanish_scan(TorusKnot::new(p, 2)?, 1)?.zero_count()))
        .sum::<Result<usize>>()?;
    Ok(Check { name: "A^+(N,1) != 0 for q = 2, odd p <= 15", pass: zeros == 0, detail: format!("{zeros} zeros") })
}

fn lobachevsky_reflection() -> Result<Check> {
    let mut worst = 0.0f64;
    for k in 0..1000 {
        let x = PI * k as f64 / 999.0;
        worst = worst.max((lobachevsky(x, 1e-15)? + lobachevsky(PI - x, 1e-15)?).abs());
    }
    Ok(Check { name: "L(x) + L(pi - x) = 0", pass: worst <= 2e-12, detail: format!("worst {worst:.1e}") })
}

pub fn run(cfg: &RunConfig) -> CliResult<bool> {
    let checks: [fn() -> Result<Check>; 5] =
        [exact_vs_float, a_sum_identities, torus_vanishing, nonvanishing, lobachevsky_reflection];
    let results = checks.iter().map(|c| c()).collect::<Result<Vec<_>>>()?;
    let mut out = io::stdout().lock();
    for c in &results {
        match cfg.format {
            Format::Csv => writeln!(out, "{} {} ({})", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail)?,
            Format::Json => writeln!(out, "{}", serde_json::to_string(c)?)?,
        }
    }
    Ok(results.iter().all(|c| c.pass))
}
