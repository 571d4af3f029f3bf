use std::path::PathBuf;

use num_complex::Complex64;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Truncation order of the finite zeta sums.
    pub n: u64,
    pub s: Option<Complex64>,
    /// Number of series terms before a tail estimate takes over.
    pub terms: u64,
    pub radius: f64,
    pub samples: usize,
    /// Absolute tolerance used by `verify` wherever a check has no tolerance of its own.
    pub tol: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 100,
            s: None,
            terms: 100_000,
            radius: zetasaw_core::reflection::CONTOUR_RADIUS,
            samples: zetasaw_core::reflection::CONTOUR_SAMPLES,
            tol: 1e-9,
            format: Format::Csv,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> CliResult<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::usage("--tol must be positive"));
        }
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(CliError::usage("--radius must be positive"));
        }
        if self.samples < 64 || !self.samples.is_power_of_two() {
            return Err(CliError::usage(
                "--samples must be a power of two, at least 64",
            ));
        }
        if self.n == 0 {
            return Err(CliError::usage("--N must be at least 1"));
        }
        if self.terms == 0 {
            return Err(CliError::usage("--terms must be at least 1"));
        }
        Ok(())
    }

    pub fn require_s(&self) -> CliResult<Complex64> {
        self.s
            .ok_or_else(|| CliError::usage("this operation needs --s re,im"))
    }

    /// Header lines echoed at the top of every table.
    pub fn echo(&self) -> Vec<(String, String)> {
        let mut meta = vec![
            ("N".to_string(), self.n.to_string()),
            ("terms".to_string(), self.terms.to_string()),
            ("radius".to_string(), crate::output::num(self.radius)),
            ("samples".to_string(), self.samples.to_string()),
            ("tol".to_string(), crate::output::num(self.tol)),
        ];
        if let Some(s) = self.s {
            meta.push((
                "s".to_string(),
                format!("{},{}", crate::output::num(s.re), crate::output::num(s.im)),
            ));
        }
        meta
    }
}

/// Parses `"re,im"` or a bare real number.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let text = text.trim();
    match text.split_once(',') {
        Some((re, im)) => {
            let re = re
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("bad real part {re:?}: {e}"))?;
            let im = im
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("bad imaginary part {im:?}: {e}"))?;
            Ok(Complex64::new(re, im))
        }
        None => text
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|e| format!("bad number {text:?}: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs_and_reals() {
        assert_eq!(
            parse_complex("0.5,14.1").unwrap(),
            Complex64::new(0.5, 14.1)
        );
        assert_eq!(parse_complex("-2").unwrap(), Complex64::new(-2.0, 0.0));
        assert_eq!(
            parse_complex(" -1 , -3 ").unwrap(),
            Complex64::new(-1.0, -3.0)
        );
        assert!(parse_complex("a,b").is_err());
    }

    #[test]
    fn rejects_bad_sampling() {
        let cfg = RunConfig {
            samples: 100,
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig {
            tol: 0.0,
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
        assert!(RunConfig::default().validate().is_ok());
    }
}
