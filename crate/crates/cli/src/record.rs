use std::io::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use vcjones::jones::{kashaev_value, KnotSpec, TorusKnot};

use crate::error::{CliError, CliResult};

/// A knot or link as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Descriptor {
    pub spec: KnotSpec,
}

impl Descriptor {
    pub fn kind(&self) -> &'static str {
        match self.spec {
            KnotSpec::Torus(_) => "torus",
            KnotSpec::WhiteheadLink { .. } => "wl",
            KnotSpec::WhiteheadDouble { .. } => "wd",
        }
    }

    pub fn pq(&self) -> (Option<u32>, Option<u32>) {
        match self.spec.companion() {
            Some(k) => (Some(k.p()), Some(k.q())),
            None => (None, None),
        }
    }

    /// File stem for the sweep cache.
    pub fn cache_key(&self) -> String {
        let mut key = self.kind().to_string();
        if let (Some(p), Some(q)) = self.pq() {
            key += &format!("_p{p}_q{q}");
        }
        if let Some(r) = self.spec.twist() {
            key += &format!("_r{r}");
        }
        key
    }
}

/// One evaluated `J_{K,N}`. `re`/`im` are empty when they overflow `f64`;
/// `log_abs` is empty only for an exact zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub kind: String,
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub r: Option<i64>,
    #[serde(rename = "N")]
    pub n: u64,
    pub re: Option<f64>,
    pub im: Option<f64>,
    pub log_abs: Option<f64>,
    #[serde(rename = "two_pi_log_over_N")]
    pub two_pi_log_over_n: Option<f64>,
    pub wall_time_ms: f64,
}

/// The stored part of a record; the rest follows from the descriptor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    #[serde(rename = "N")]
    pub n: u64,
    pub re: Option<f64>,
    pub im: Option<f64>,
    pub log_abs: Option<f64>,
    pub arg: f64,
    pub wall_time_ms: f64,
}

pub fn evaluate(desc: Descriptor, n: u64) -> CliResult<Evaluation> {
    let start = Instant::now();
    let v = kashaev_value(desc.spec, n)?;
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let z = v.value.try_to_complex();
    Ok(Evaluation {
        n,
        re: z.map(|z| z.re),
        im: z.map(|z| z.im),
        log_abs: v.log_abs.is_finite().then_some(v.log_abs),
        arg: v.value.arg(),
        wall_time_ms,
    })
}

impl SweepRecord {
    pub fn new(desc: Descriptor, e: &Evaluation) -> Self {
        let (p, q) = desc.pq();
        Self {
            kind: desc.kind().to_string(),
            p,
            q,
            r: desc.spec.twist(),
            n: e.n,
            re: e.re,
            im: e.im,
            log_abs: e.log_abs,
            two_pi_log_over_n: e.log_abs.map(|l| std::f64::consts::TAU * l / e.n as f64),
            wall_time_ms: e.wall_time_ms,
        }
    }
}

pub fn write_csv<W: Write, T: Serialize>(out: W, rows: &[T]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write, T: Serialize>(mut out: W, rows: &[T]) -> CliResult<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        writeln!(out)?;
    }
    Ok(())
}

/// `(N, log|J|)` pairs from a sweep CSV. Columns other than `N` and `log_abs`
/// are ignored; rows with an empty `log_abs` are skipped.
pub fn read_log_abs<R: std::io::Read>(input: R) -> CliResult<Vec<(f64, f64)>> {
    #[derive(Deserialize)]
    struct Row {
        #[serde(rename = "N")]
        n: u64,
        log_abs: Option<f64>,
    }
    let mut rdr = csv::Reader::from_reader(input);
    let headers = rdr.headers()?.clone();
    for col in ["N", "log_abs"] {
        if !headers.iter().any(|h| h == col) {
            return Err(CliError::Usage(format!("malformed CSV: missing column {col:?}")));
        }
    }
    let mut out = Vec::new();
    for row in rdr.deserialize::<Row>() {
        let row = row?;
        if let Some(l) = row.log_abs {
            out.push((row.n as f64, l));
        }
    }
    Ok(out)
}

pub fn torus(p: Option<u32>, q: Option<u32>) -> CliResult<TorusKnot> {
    match (p, q) {
        (Some(p), Some(q)) => Ok(TorusKnot::new(p, q)?),
        _ => Err(CliError::Usage("--p and --q are required".into())),
    }
}
