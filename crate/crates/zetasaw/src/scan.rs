use std::env;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use zetasaw_core::reflection::{self, ChiResidueAtZero};
use zetasaw_core::roots::{self, RootKind};
use zetasaw_core::{fractal, Result as CoreResult};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{complex, num, Table, EXACT};

/// Environment variable capping the worker count.
pub const THREADS_VAR: &str = "ZETASAW_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ScanTarget {
    ChiResidue,
    Content,
    Roots,
    Spacing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RootKindArg {
    Laplace,
    Mellin,
}

#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    pub range: Option<String>,
    pub step: Option<f64>,
    pub log: bool,
    pub kind: Option<RootKindArg>,
    pub n: Option<String>,
    pub m: Option<String>,
}

fn split_range(text: &str) -> CliResult<(&str, &str)> {
    text.split_once("..")
        .map(|(a, b)| (a.trim(), b.trim_start_matches('=').trim()))
        .ok_or_else(|| CliError::usage(format!("expected a range like a..b, got {text:?}")))
}

pub fn parse_int_range(text: &str) -> CliResult<RangeInclusive<i64>> {
    let (a, b) = split_range(text)?;
    let parse = |t: &str| {
        t.parse::<i64>()
            .map_err(|e| CliError::usage(format!("bad range bound {t:?}: {e}")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(CliError::usage(format!("empty range {text}")));
    }
    Ok(a..=b)
}

pub fn parse_count_range(text: &str) -> CliResult<RangeInclusive<u64>> {
    let r = parse_int_range(text)?;
    if *r.start() < 1 {
        return Err(CliError::usage("range must start at 1 or above"));
    }
    Ok(*r.start() as u64..=*r.end() as u64)
}

pub fn parse_real_range(text: &str) -> CliResult<(f64, f64)> {
    let (a, b) = split_range(text)?;
    let parse = |t: &str| {
        t.replace('−', "-")
            .parse::<f64>()
            .map_err(|e| CliError::usage(format!("bad range bound {t:?}: {e}")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(CliError::usage(format!("empty range {text}")));
    }
    Ok((a, b))
}

/// Sample points of `[a, b]`: `step` per decade on a log grid, otherwise a linear step.
pub fn sample_points(a: f64, b: f64, step: Option<f64>, log: bool) -> CliResult<Vec<f64>> {
    if log {
        if a <= 0.0 {
            return Err(CliError::usage("log grid needs a positive lower bound"));
        }
        let per_decade = step.unwrap_or(10.0);
        if !(per_decade >= 1.0) {
            return Err(CliError::usage(
                "--step must be at least 1 point per decade",
            ));
        }
        let (la, lb) = (a.log10(), b.log10());
        let count = ((lb - la) * per_decade).round() as usize;
        Ok((0..=count)
            .map(|i| 10f64.powf(la + (lb - la) * i as f64 / count.max(1) as f64))
            .collect())
    } else {
        let h = step.unwrap_or((b - a) / 100.0);
        if !(h > 0.0) {
            return Err(CliError::usage("--step must be positive"));
        }
        let count = ((b - a) / h + 1e-9).floor() as usize;
        Ok((0..=count).map(|i| a + h * i as f64).collect())
    }
}

fn thread_cap() -> Option<usize> {
    env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Maps `f` over `items` in parallel, keeping input order.
pub fn par_map<T, R, F>(items: &[T], f: F) -> CliResult<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> CoreResult<R> + Sync + Send,
{
    let run = || items.par_iter().map(&f).collect::<CoreResult<Vec<R>>>();
    let out = match thread_cap() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::usage(format!("{THREADS_VAR}: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(out?)
}

pub fn cmd_scan(target: ScanTarget, opts: &ScanOptions, cfg: &RunConfig) -> CliResult<Table> {
    let mut table = match target {
        ScanTarget::ChiResidue => scan_chi_residue(opts, cfg)?,
        ScanTarget::Content => scan_content(opts)?,
        ScanTarget::Roots => scan_roots(opts)?,
        ScanTarget::Spacing => scan_spacing(opts)?,
    };
    let mut with_cfg = Table::new(&[]).with_config(cfg);
    with_cfg.meta.append(&mut table.meta);
    table.meta = with_cfg.meta;
    table.meta("command", "scan");
    Ok(table)
}

fn scan_chi_residue(opts: &ScanOptions, cfg: &RunConfig) -> CliResult<Table> {
    let text = opts.range.as_deref().unwrap_or("1..250");
    let ns: Vec<u64> = parse_count_range(text)?.collect();
    let (radius, samples) = (cfg.radius, cfg.samples);
    let residues: Vec<ChiResidueAtZero> = par_map(&ns, |&n| {
        reflection::chi_residue_at_0_with(n, radius, samples)
    })?;
    let scan = reflection::summarize_scan(residues);
    let mut t = Table::new(&[
        "N",
        "closed_form",
        "contour",
        "error",
        "sign",
        "sign_change",
    ]);
    t.meta("target", "chi-residue");
    t.meta("range", text);
    let change = scan
        .first_change
        .map(|(a, b)| format!("{a}/{b}"))
        .unwrap_or_else(|| "none".into());
    t.meta("sign_change", change);
    t.meta("increasing", scan.increasing.to_string());
    for r in &scan.residues {
        let flagged = scan.first_change.is_some_and(|(_, b)| b == r.n);
        t.push(vec![
            r.n.to_string(),
            num(r.closed_form),
            num(r.contour),
            num(r.difference.abs()),
            if r.contour < 0.0 { "-" } else { "+" }.into(),
            if flagged { "yes" } else { "" }.into(),
        ]);
    }
    Ok(t)
}

fn scan_content(opts: &ScanOptions) -> CliResult<Table> {
    let text = opts.range.as_deref().unwrap_or("1e-6..1e-1");
    let (a, b) = parse_real_range(text)?;
    let log = opts.log || opts.step.is_none();
    let eps = sample_points(a, b, opts.step, log)?;
    let reports = par_map(&eps, |&e| fractal::tube_volume(e))?;
    let mut t = Table::new(&["epsilon", "v", "volume", "scaled", "error"]);
    t.meta("target", "content");
    t.meta("range", text);
    t.meta("grid", if log { "log" } else { "linear" });
    t.meta("limit", num(fractal::MINKOWSKI_CONTENT));
    for r in reports {
        t.push(vec![
            num(r.epsilon),
            r.v.to_string(),
            num(r.volume),
            num(r.scaled),
            EXACT.into(),
        ]);
    }
    Ok(t)
}

fn scan_roots(opts: &ScanOptions) -> CliResult<Table> {
    let kind = opts.kind.unwrap_or(RootKindArg::Laplace);
    let ns: Vec<u64> = parse_count_range(opts.n.as_deref().unwrap_or(match kind {
        RootKindArg::Laplace => "1..9",
        RootKindArg::Mellin => "1..5",
    }))?
    .collect();
    let m_text = opts.m.as_deref().unwrap_or(match kind {
        RootKindArg::Laplace => "-5..5",
        RootKindArg::Mellin => "1..10",
    });
    let ms = parse_int_range(m_text)?;
    let mut t = Table::new(&["n", "m", "re", "im", "error"]);
    t.meta("target", "roots");
    t.meta("m", m_text);
    let rows: Vec<Vec<(i64, num_complex::Complex64, f64)>> = match kind {
        RootKindArg::Laplace => {
            t.meta("kind", "laplace");
            par_map(&ns, |&n| {
                let fam = roots::laplace_roots(n, ms.clone())?;
                Ok(fam
                    .roots
                    .into_iter()
                    .map(|(m, r)| (m, r, roots::laplace_residual(n, r)))
                    .collect())
            })?
        }
        RootKindArg::Mellin => {
            t.meta("kind", "mellin");
            if *ms.start() < 1 {
                return Err(CliError::usage("Mellin root indices start at 1"));
            }
            let count = *ms.end() as usize;
            par_map(&ns, |&n| {
                let fam = roots::mellin_roots_numeric(n, count)?;
                debug_assert_eq!(fam.kind, RootKind::Mellin);
                Ok(fam
                    .roots
                    .into_iter()
                    .filter(|(m, _)| ms.contains(m))
                    .map(|(m, r)| (m, r, roots::mellin_scaled_residual(n, r)))
                    .collect())
            })?
        }
    };
    for (n, family) in ns.iter().zip(rows) {
        for (m, r, res) in family {
            let (re, im) = complex(r);
            t.push(vec![n.to_string(), m.to_string(), re, im, num(res)]);
        }
    }
    Ok(t)
}

fn scan_spacing(opts: &ScanOptions) -> CliResult<Table> {
    let text = opts
        .range
        .as_deref()
        .or(opts.n.as_deref())
        .unwrap_or("1..20");
    let mut t = Table::new(&["n", "spacing_im", "quotient", "exp_re", "exp_im", "error"]);
    t.meta("target", "spacing");
    t.meta("range", text);
    for n in parse_count_range(text)? {
        let q = if n >= 2 {
            num(roots::root_spacing_quotient(n)?)
        } else {
            String::new()
        };
        let (er, ei) = complex(roots::root_exponential_spacing(n));
        t.push(vec![
            n.to_string(),
            num(roots::root_spacing_limit(n).im),
            q,
            er,
            ei,
            EXACT.into(),
        ]);
    }
    Ok(t)
}
