//! τ and its inverse branches, Schröder numbers, component transforms and the
//! truncated zeta approximations `ζ_w(N; s)` and `ζ_h(N; s)`.

use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cmath::{
    c, expm1, expm1mx, exprel, laplace_kernel, one_minus_n_log1p_recip, real_pow_neg,
};
use crate::error::{pole, Error, Result};
use crate::specfun::{gamma_fn, polygamma, riemann_zeta};

/// Truncation order `N` of the finite zeta approximations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteZeta {
    n: u64,
}

impl FiniteZeta {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("truncation order starts at 1"));
        }
        Ok(Self { n })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        zeta_w_finite(*self, s)
    }

    pub fn residue_at_one(&self) -> BigRational {
        residue_zeta_w_at_1(*self)
    }
}

/// Which root of the quadratic `τ(s) = t` to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// `τ(s) = s(s+1)/(s−1)`.
pub fn tau(s: Complex64) -> Result<Complex64> {
    if s == c(1.0) {
        return Err(pole(s));
    }
    Ok(s * (s + 1.0) / (s - 1.0))
}

/// `t/2 − 1/2 ± √(1 − 6t + t²)/2`.
pub fn tau_inverse(t: Complex64, sign: Sign) -> Complex64 {
    let root = (c(1.0) - t * 6.0 + t * t).sqrt() * 0.5;
    let base = t * 0.5 - 0.5;
    match sign {
        Sign::Plus => base + root,
        Sign::Minus => base - root,
    }
}

fn tau_inverse_coeffs(len: usize, sign: Sign) -> Vec<BigInt> {
    // y² + (1 − t) y + t = 0 with y = Σ c_n tⁿ
    let mut cs: Vec<BigInt> = Vec::with_capacity(len);
    let c0 = match sign {
        Sign::Plus => BigInt::zero(),
        Sign::Minus => -BigInt::one(),
    };
    cs.push(c0);
    for n in 1..len {
        let mut conv = BigInt::zero();
        for i in 1..n {
            conv += &cs[i] * &cs[n - i];
        }
        let delta = if n == 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        let next = match sign {
            Sign::Plus => -conv + &cs[n - 1] - delta,
            Sign::Minus => conv - &cs[n - 1] + delta,
        };
        cs.push(next);
    }
    cs
}

/// Maclaurin coefficient of `tⁿ` in the chosen inverse branch of τ.
pub fn tau_inverse_series_coeff(n: usize, sign: Sign) -> BigRational {
    let cs = tau_inverse_coeffs(n + 1, sign);
    BigRational::from_integer(cs[n].clone())
}

/// Large Schröder numbers `S_0 ..= S_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchroederTable {
    pub values: Vec<BigInt>,
}

/// Schröder numbers read off the series of `τ₋⁻¹` (`S_0 = S_1 = 1`).
pub fn schroder_numbers(k: usize) -> SchroederTable {
    let cs = tau_inverse_coeffs(k + 1, Sign::Minus);
    let values = (0..=k)
        .map(|n| if n < 2 { BigInt::one() } else { cs[n].clone() })
        .collect();
    SchroederTable { values }
}

fn log_ratio(n: f64) -> f64 {
    (1.0 / n).ln_1p()
}

/// `∫_{1/(n+1)}^{1/n} x^{s−1} dx`, an entire function of `s`.
pub fn mellin_indicator(n: u64, s: Complex64) -> Complex64 {
    let nf = n as f64;
    let l = log_ratio(nf);
    real_pow_neg(nf, s) * exprel(-s * l) * l
}

/// Mellin transform of `w_n` over its interval.
pub fn mellin_w_component(n: u64, s: Complex64) -> Complex64 {
    let nf = n as f64;
    let l = log_ratio(nf);
    if s == c(0.0) {
        return c(one_minus_n_log1p_recip(nf));
    }
    if s == c(-1.0) {
        return c(nf * (nf + 1.0) * l - nf);
    }
    mellin_indicator(n, s + 1.0) * (nf * (nf + 1.0)) - mellin_indicator(n, s) * nf
}

/// Mellin transform of `h_n(x) = 1/x − n` over its interval.
///
/// The points `s = 0` and `s = 1` are rejected even though the singularities are removable.
pub fn mellin_h_component(n: u64, s: Complex64) -> Result<Complex64> {
    if s == c(0.0) || s == c(1.0) {
        return Err(pole(s));
    }
    Ok(mellin_indicator(n, s - 1.0) - mellin_indicator(n, s) * n as f64)
}

/// `n^{−s}[n(n+1)^{−s}n^{s} − n + s]`, the `n`-th summand of `(s−1)ζ_w(N; s)`.
fn zeta_w_term(n: u64, s: Complex64) -> Complex64 {
    let nf = n as f64;
    let l = log_ratio(nf);
    let bracket = expm1mx(-s * l) * nf + s * one_minus_n_log1p_recip(nf);
    real_pow_neg(nf, s) * bracket
}

/// `ζ_w(N; s) = (1/(s−1)) Σ_{n≤N} [n(n+1)^{−s} − n^{1−s} + s n^{−s}]`.
pub fn zeta_w_finite(n: FiniteZeta, s: Complex64) -> Result<Complex64> {
    if s == c(1.0) {
        return Err(pole(s));
    }
    if s == c(0.0) || s == c(-1.0) {
        return Ok(c(0.0));
    }
    let mut sum = c(0.0);
    for k in (1..=n.n).rev() {
        sum += zeta_w_term(k, s);
    }
    Ok(sum / (s - 1.0))
}

/// `ζ_w(N; n)` at an integer `n ≥ 2` through the polygamma form.
pub fn zeta_w_finite_integer(n: FiniteZeta, k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::Domain(
            "polygamma form needs an integer argument ≥ 2",
        ));
    }
    let nn = n.n as f64;
    let kf = k as f64;
    let cos = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let gamma = gamma_fn(c(kf))?.re;
    Ok(
        nn / ((kf - 1.0) * (nn + 1.0).powf(kf)) - cos * polygamma(k - 1, nn + 1.0)? / gamma
            + riemann_zeta(c(kf))?.re,
    )
}

/// `ζ_h(N; s) = s/(s−1) − (1/(s−1)) Σ_{n≤N} [n^{1−s} − n(n+1)^{−s} − s(n+1)^{−s}]`.
pub fn zeta_h_finite(n: u64, s: Complex64) -> Result<Complex64> {
    if s == c(0.0) || s == c(1.0) {
        return Err(pole(s));
    }
    let mut sum = c(0.0);
    for k in (1..=n).rev() {
        let kf = k as f64;
        let l = log_ratio(kf);
        let x = -s * l;
        let bracket = -expm1mx(x) - s * (one_minus_n_log1p_recip(kf) / kf) - s * expm1(x) / kf;
        sum += real_pow_neg(kf, s - 1.0) * bracket;
    }
    Ok((s - sum) / (s - 1.0))
}

/// Residue of `ζ_w(N; s)` at `s = 1`, `Σ_{n≤N} 1/(n²+n) = N/(N+1)`.
pub fn residue_zeta_w_at_1(n: FiniteZeta) -> BigRational {
    BigRational::new(BigInt::from(n.n), BigInt::from(n.n + 1))
}

/// Laplace transform of `w_n`.
pub fn laplace_w_component(n: u64, s: Complex64) -> Complex64 {
    let nf = n as f64;
    let u = nf * (nf + 1.0);
    if s == c(0.0) {
        return c(0.5 / u);
    }
    (-s / (nf + 1.0)).exp() * laplace_kernel(s / u) / u
}

/// A pole of a meromorphic function with its residue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplePole {
    pub location: Complex64,
    pub residue: Complex64,
}

/// Laplace transform in `s` of `n(n+1)^{−s} + s n^{−s} − n^{1−s}`, the `n`-th summand of
/// `(s−1)ζ_w(N; s)`, evaluated at `t`.
pub fn laplace_of_sm(n: u64, t: Complex64) -> Result<Complex64> {
    let nf = n as f64;
    let a = t + nf.ln();
    let b = t + (nf + 1.0).ln();
    if a == c(0.0) {
        return Err(pole(t));
    }
    if b == c(0.0) {
        return Err(pole(t));
    }
    Ok(c(nf) / b + (a * a).inv() - c(nf) / a)
}

/// The two poles of [`laplace_of_sm`] and their residues `−n` and `+n`.
pub fn laplace_of_sm_poles(n: u64) -> [SimplePole; 2] {
    let nf = n as f64;
    [
        SimplePole {
            location: c(-nf.ln()),
            residue: c(-nf),
        },
        SimplePole {
            location: c(-(nf + 1.0).ln()),
            residue: c(nf),
        },
    ]
}

/// `Σ_{k=1}^{K} 4ζ(2k−2) t^{2k−3}`, which sums to `−2π cot(πt)` on `0 < |t| < 1`.
pub fn tau_mellin_series(t: Complex64, k: usize) -> Result<Complex64> {
    let r = t.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain("series needs 0 < |t| < 1"));
    }
    let t2 = t * t;
    let mut p = t.inv();
    let mut sum = c(0.0);
    for j in 1..=k {
        sum += riemann_zeta(c((2 * j) as f64 - 2.0))? * p * 4.0;
        p *= t2;
    }
    Ok(sum)
}

/// `−2π cot(πt)`.
pub fn tau_mellin_closed(t: Complex64) -> Complex64 {
    let x = t * PI;
    -x.cos() / x.sin() * (2.0 * PI)
}

/// `Σ_{n≤N} (1/n − ln((n+1)/n))`, which increases to γ.
pub fn gamma_from_w_series(n: u64) -> f64 {
    let mut sum = 0.0;
    for k in (1..=n).rev() {
        let kf = k as f64;
        sum += one_minus_n_log1p_recip(kf) / kf;
    }
    sum
}
