use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use zetasaw_core::fractal::{self, ZetaCombination};
use zetasaw_core::transforms::{self, FiniteZeta, Sign};
use zetasaw_core::{maps, reflection, roots, specfun};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{complex, num, Table, EXACT};

/// Every name accepted by `eval`, with its positional arguments.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("w", "x"),
    ("h", "x"),
    ("tau", "(--s)"),
    ("tau-inv", "+|- (--s)"),
    ("zeta", "(--s)"),
    ("zeta_w", "(--N --s)"),
    ("zeta_h", "(--N --s)"),
    ("chi", "(--N --s)"),
    ("chi-residue", "(--N)"),
    ("chi-recip-residue", "(--N)"),
    ("mellin-w", "n (--s)"),
    ("mellin-h", "n (--s)"),
    ("laplace-w", "n (--s)"),
    ("lambert", "branch (--s)"),
    ("wln", "(--s)"),
    ("geomzeta", "(--s --terms)"),
    ("geomzeta-int", "n"),
    ("tube", "epsilon"),
    ("content", "epsilon"),
    ("counting", "x"),
    ("schroder", "k"),
    ("laplace-root", "n m"),
    ("mellin-root", "m"),
    ("gamma-series", "(--N)"),
    ("cf", "x k"),
];

pub fn operation_list() -> String {
    OPERATIONS
        .iter()
        .map(|(name, args)| format!("  {name} {args}"))
        .collect::<Vec<_>>()
        .join("\n")
}

const COLUMNS: &[&str] = &["op", "input", "re", "im", "symbolic", "error", "method"];

struct Record {
    input: String,
    value: Complex64,
    symbolic: String,
    error: String,
    method: &'static str,
}

impl Record {
    fn new(input: String, value: Complex64, error: String, method: &'static str) -> Self {
        Record {
            input,
            value,
            symbolic: String::new(),
            error,
            method,
        }
    }

    fn symbolic(mut self, text: String) -> Self {
        self.symbolic = text;
        self
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Bound for a converged expansion whose truncation error sits below rounding.
fn rounding_bound(v: Complex64) -> String {
    num(32.0 * f64::EPSILON * v.norm().max(1.0))
}

fn arg<'a>(args: &'a [String], i: usize, op: &str) -> CliResult<&'a str> {
    args.get(i).map(String::as_str).ok_or_else(|| {
        let spec = OPERATIONS
            .iter()
            .find(|(n, _)| *n == op)
            .map(|(_, a)| *a)
            .unwrap_or("");
        CliError::usage(format!("{op} expects: {spec}"))
    })
}

fn parse<T: std::str::FromStr>(text: &str, what: &str) -> CliResult<T>
where
    T::Err: std::fmt::Display,
{
    text.trim()
        .parse::<T>()
        .map_err(|e| CliError::usage(format!("bad {what} {text:?}: {e}")))
}

/// Accepts `p/q` or a decimal, converting decimals exactly.
pub fn parse_rational(text: &str) -> CliResult<BigRational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: num_bigint::BigInt = parse(p, "numerator")?;
        let q: num_bigint::BigInt = parse(q, "denominator")?;
        if q.is_zero() {
            return Err(CliError::usage("zero denominator"));
        }
        return Ok(BigRational::new(p, q));
    }
    let x: f64 = parse(text, "number")?;
    BigRational::from_float(x)
        .ok_or_else(|| CliError::usage(format!("not a finite number: {text}")))
}

/// `-3/4 + 1/2·ζ(2)` style rendering.
pub fn format_combination(comb: &ZetaCombination) -> String {
    let mut out = String::new();
    if !comb.rational.is_zero() || comb.terms.is_empty() {
        out.push_str(&comb.rational.to_string());
    }
    for (coef, k) in &comb.terms {
        if coef.is_zero() {
            continue;
        }
        if out.is_empty() {
            if coef.is_negative() {
                out.push('-');
            }
        } else if coef.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&format!("{}·ζ({k})", coef.abs()));
    }
    out
}

pub fn format_quotients(q: &[num_bigint::BigInt]) -> String {
    let mut out = String::from("[");
    for (i, a) in q.iter().enumerate() {
        if i == 1 {
            out.push_str("; ");
        } else if i > 1 {
            out.push_str(", ");
        }
        out.push_str(&a.to_string());
    }
    out.push(']');
    out
}

fn s_text(s: Complex64) -> String {
    format!("s={}{:+}i", s.re, s.im)
}

fn evaluate(op: &str, args: &[String], cfg: &RunConfig) -> CliResult<Record> {
    let rec = match op {
        "w" | "h" => {
            let x: f64 = parse(arg(args, 0, op)?, "x")?;
            let v = if op == "w" {
                maps::w_map(x)?
            } else {
                maps::gauss_map(x)?
            };
            Record::new(format!("x={x}"), real(v), EXACT.into(), "closed-form")
        }
        "tau" => {
            let s = cfg.require_s()?;
            Record::new(s_text(s), transforms::tau(s)?, EXACT.into(), "closed-form")
        }
        "tau-inv" => {
            let sign = match arg(args, 0, op)? {
                "+" | "plus" => Sign::Plus,
                "-" | "minus" => Sign::Minus,
                other => {
                    return Err(CliError::usage(format!(
                        "tau-inv sign must be + or -, got {other}"
                    )))
                }
            };
            let t = cfg.require_s()?;
            Record::new(
                format!("t={}{:+}i", t.re, t.im),
                transforms::tau_inverse(t, sign),
                EXACT.into(),
                "closed-form",
            )
        }
        "zeta" => {
            let s = cfg.require_s()?;
            let v = specfun::riemann_zeta(s)?;
            Record::new(s_text(s), v, rounding_bound(v), "euler-maclaurin")
        }
        "zeta_w" => {
            let s = cfg.require_s()?;
            let v = transforms::zeta_w_finite(FiniteZeta::new(cfg.n)?, s)?;
            Record::new(
                format!("N={} {}", cfg.n, s_text(s)),
                v,
                EXACT.into(),
                "finite-sum",
            )
        }
        "zeta_h" => {
            let s = cfg.require_s()?;
            let v = transforms::zeta_h_finite(cfg.n, s)?;
            Record::new(
                format!("N={} {}", cfg.n, s_text(s)),
                v,
                EXACT.into(),
                "finite-sum",
            )
        }
        "chi" => {
            let s = cfg.require_s()?;
            let v = reflection::chi(FiniteZeta::new(cfg.n)?, s)?;
            Record::new(
                format!("N={} {}", cfg.n, s_text(s)),
                v,
                EXACT.into(),
                "finite-sum",
            )
        }
        "chi-residue" => {
            let r = reflection::chi_residue_at_0_with(cfg.n, cfg.radius, cfg.samples)?;
            Record::new(
                format!("N={}", cfg.n),
                real(r.contour),
                num(r.difference.abs()),
                "contour",
            )
            .symbolic(format!("closed-form={}", num(r.closed_form)))
        }
        "chi-recip-residue" => {
            let r = reflection::chi_recip_residue_at_2_with(cfg.n, cfg.radius, cfg.samples)?;
            Record::new(
                format!("N={}", cfg.n),
                real(r.contour),
                num(r.difference.abs()),
                "contour",
            )
            .symbolic(format!("closed-form={}", num(r.closed_form)))
        }
        "mellin-w" | "mellin-h" | "laplace-w" => {
            let n: u64 = parse(arg(args, 0, op)?, "n")?;
            if n == 0 {
                return Err(CliError::usage("component index starts at 1"));
            }
            let s = cfg.require_s()?;
            let v = match op {
                "mellin-w" => transforms::mellin_w_component(n, s),
                "mellin-h" => transforms::mellin_h_component(n, s)?,
                _ => transforms::laplace_w_component(n, s),
            };
            Record::new(
                format!("n={n} {}", s_text(s)),
                v,
                EXACT.into(),
                "closed-form",
            )
        }
        "lambert" => {
            let m: i64 = parse(arg(args, 0, op)?, "branch")?;
            let z = cfg.require_s()?;
            let v = specfun::lambert_w(m, z)?;
            let residual = (v * v.exp() - z).norm();
            Record::new(
                format!("m={m} z={}{:+}i", z.re, z.im),
                v,
                num(residual),
                "halley",
            )
        }
        "wln" => {
            let z = cfg.require_s()?;
            let v = specfun::w_ln(z)?;
            Record::new(
                format!("z={}{:+}i", z.re, z.im),
                v,
                rounding_bound(v),
                "halley",
            )
        }
        "geomzeta" => {
            let s = cfg.require_s()?;
            let r = fractal::geometric_zeta(s, cfg.terms)?;
            let err = if r.tail_bound == 0.0 {
                EXACT.into()
            } else {
                num(r.tail_bound)
            };
            Record::new(
                format!("{} terms={}", s_text(s), cfg.terms),
                r.value,
                err,
                "series+tail",
            )
        }
        "geomzeta-int" => {
            let n: u32 = parse(arg(args, 0, op)?, "n")?;
            let comb = fractal::geometric_zeta_integer(n)?;
            let v = comb.value()?;
            Record::new(format!("n={n}"), real(v), EXACT.into(), "partial-fractions")
                .symbolic(format_combination(&comb))
        }
        "tube" => {
            let eps = parse_rational(arg(args, 0, op)?)?;
            let exact = fractal::tube_volume_exact(&eps)?;
            let v = fractal::v_of_epsilon_exact(&eps)?;
            Record::new(
                format!("epsilon={eps}"),
                real(to_f64(&exact)),
                EXACT.into(),
                "closed-form",
            )
            .symbolic(format!("V={exact} v={v}"))
        }
        "content" => {
            let eps: f64 = parse(arg(args, 0, op)?, "epsilon")?;
            let r = fractal::tube_volume(eps)?;
            Record::new(
                format!("epsilon={eps}"),
                real(r.scaled),
                EXACT.into(),
                "closed-form",
            )
            .symbolic(format!("v={}", r.v))
        }
        "counting" => {
            let x = parse_rational(arg(args, 0, op)?)?;
            let v = fractal::geometric_counting_exact(&x)?;
            Record::new(
                format!("x={x}"),
                real(v as f64),
                EXACT.into(),
                "closed-form",
            )
            .symbolic(v.to_string())
        }
        "schroder" => {
            let k: usize = parse(arg(args, 0, op)?, "k")?;
            let table = transforms::schroder_numbers(k);
            let v = &table.values[k];
            Record::new(
                format!("k={k}"),
                real(to_f64(&BigRational::from(v.clone()))),
                EXACT.into(),
                "series-extraction",
            )
            .symbolic(v.to_string())
        }
        "laplace-root" => {
            let n: u64 = parse(arg(args, 0, op)?, "n")?;
            let m: i64 = parse(arg(args, 1, op)?, "m")?;
            let rho = roots::laplace_root(n, m)?;
            Record::new(
                format!("n={n} m={m}"),
                rho,
                num(roots::laplace_residual(n, rho)),
                "lambert-w",
            )
        }
        "mellin-root" => {
            let m: i64 = parse(arg(args, 0, op)?, "m")?;
            let rho = roots::mellin_inverse_n1(Complex64::new(0.0, 0.0), m)?;
            Record::new(
                format!("n=1 m={m}"),
                rho,
                num(roots::mellin_residual(1, rho)),
                "lambert-w",
            )
        }
        "gamma-series" => {
            let v = transforms::gamma_from_w_series(cfg.n);
            Record::new(
                format!("N={}", cfg.n),
                real(v),
                num(0.5 / cfg.n as f64),
                "series",
            )
        }
        "cf" => {
            let k: usize = parse(arg(args, 1, op)?, "k")?;
            let x = parse_rational(arg(args, 0, op)?)?;
            let q = maps::continued_fraction_rational(&x, k);
            Record::new(
                format!("x={x} k={k}"),
                real(to_f64(&x)),
                EXACT.into(),
                "euclid",
            )
            .symbolic(format_quotients(&q))
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown operation {other:?}; available:\n{}",
                operation_list()
            )));
        }
    };
    Ok(rec)
}

fn to_f64(x: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

/// Runs one operation and returns a single-row table.
pub fn cmd_eval(op: &str, args: &[String], cfg: &RunConfig) -> CliResult<Table> {
    let rec = evaluate(op, args, cfg)?;
    let mut table = Table::new(COLUMNS).with_config(cfg);
    table.meta("command", "eval");
    let (re, im) = complex(rec.value);
    table.push(vec![
        op.to_string(),
        rec.input,
        re,
        im,
        rec.symbolic,
        rec.error,
        rec.method.to_string(),
    ]);
    Ok(table)
}
