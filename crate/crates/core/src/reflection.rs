//! The finite reflection function `χ(N; s) = ζ_w(N; 1−s)/ζ_w(N; s)` and its residues.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::RangeInclusive;
#[allow(unused_imports)]
use num_traits::Float;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cmath::{c, one_minus_n_log1p_recip};
use crate::error::{pole, Error, Result};
use crate::specfun::{
    digamma, gamma_fn, ln_gamma, polygamma, riemann_zeta, riemann_zeta_derivative,
};
use crate::transforms::{zeta_w_finite, zeta_w_finite_integer, FiniteZeta};
use crate::EULER_GAMMA;

/// Default contour radius and sample count for residues of χ.
pub const CONTOUR_RADIUS: f64 = 0.1;
pub const CONTOUR_SAMPLES: usize = 256;

/// `χ(N; s)`.
pub fn chi(n: FiniteZeta, s: Complex64) -> Result<Complex64> {
    let num = zeta_w_finite(n, c(1.0) - s)?;
    let den = zeta_w_finite(n, s)?;
    if den == c(0.0) {
        return Err(Error::DivisionByZero(s));
    }
    let v = num / den;
    if !v.is_finite() {
        return Err(Error::DivisionByZero(s));
    }
    Ok(v)
}

/// `1/χ(N; s)`.
pub fn chi_recip(n: FiniteZeta, s: Complex64) -> Result<Complex64> {
    let num = zeta_w_finite(n, s)?;
    let den = zeta_w_finite(n, c(1.0) - s)?;
    if den == c(0.0) {
        return Err(Error::DivisionByZero(s));
    }
    Ok(num / den)
}

/// The three logarithmic sums entering the residue of χ at 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbcSums {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub n: u64,
    /// `N − a(N)`, summed termwise.
    pub gap: f64,
}

pub fn abc_sums(n: u64) -> AbcSums {
    let (mut a, mut b, mut cc, mut gap) = (0.0, 0.0, 0.0, 0.0);
    for k in (1..=n).rev() {
        let kf = k as f64;
        let l = (1.0 / kf).ln_1p();
        let lk = kf.ln();
        a += kf * l;
        b -= kf * l / (kf + 1.0) + lk / (kf * (kf + 1.0));
        cc += 0.5 * kf * l * (lk + (kf + 1.0).ln());
        gap += one_minus_n_log1p_recip(kf);
    }
    AbcSums {
        a,
        b,
        c: cc,
        n,
        gap,
    }
}

/// A Laurent coefficient obtained from a discretised circle integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentCoefficient {
    pub order: i32,
    pub value: Complex64,
    pub center: Complex64,
    pub radius: f64,
}

/// Coefficient of `(s − center)^order` by the trapezoid rule on a circle.
pub fn laurent_coeff<F>(
    f: F,
    center: Complex64,
    order: i32,
    radius: f64,
    samples: usize,
) -> Result<LaurentCoefficient>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let mut out = laurent_coeffs(f, center, order..=order, radius, samples)?;
    Ok(out.remove(0))
}

/// Several Laurent coefficients from one set of samples on the circle.
pub fn laurent_coeffs<F>(
    f: F,
    center: Complex64,
    orders: RangeInclusive<i32>,
    radius: f64,
    samples: usize,
) -> Result<Vec<LaurentCoefficient>>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if samples < 64 || !samples.is_power_of_two() {
        return Err(Error::Domain("sample count must be a power of two ≥ 64"));
    }
    if !(radius > 0.0) {
        return Err(Error::Domain("radius must be positive"));
    }
    let mut values = Vec::with_capacity(samples);
    for k in 0..samples {
        let e = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / samples as f64);
        let z = center + e * radius;
        let v = f(z)?;
        if !v.is_finite() {
            return Err(Error::NonFinite(z));
        }
        values.push((e, v));
    }
    Ok(orders
        .map(|order| {
            let acc: Complex64 = values.iter().map(|(e, v)| v * e.powi(-order)).sum();
            let value = acc / (samples as f64) * radius.powi(-order);
            LaurentCoefficient {
                order,
                value,
                center,
                radius,
            }
        })
        .collect())
}

/// Residue of χ(N; ·) at 0 by the closed form and by the contour engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiResidueAtZero {
    pub n: u64,
    pub closed_form: f64,
    pub contour: f64,
    pub difference: f64,
    /// Laurent coefficients of orders −2, −1, 0.
    pub laurent: [Complex64; 3],
}

/// `(1 + γ + Ψ(N+2) − 2/(N+1) + b − N(ln Γ(N+1) − c)/((N − a)(N+1)))/(a − N)`.
pub fn chi_residue_at_0_closed(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("truncation order starts at 1"));
    }
    let abc = abc_sums(n);
    let nf = n as f64;
    let lg = ln_gamma(c(nf + 1.0))?.re;
    let top = 1.0 + EULER_GAMMA + digamma(nf + 2.0)? - 2.0 / (nf + 1.0) + abc.b
        - nf * (lg - abc.c) / (abc.gap * (nf + 1.0));
    Ok(-top / abc.gap)
}

pub fn chi_residue_at_0(n: u64) -> Result<ChiResidueAtZero> {
    chi_residue_at_0_with(n, CONTOUR_RADIUS, CONTOUR_SAMPLES)
}

/// [`chi_residue_at_0`] on a circle of the given radius and sample count.
pub fn chi_residue_at_0_with(n: u64, radius: f64, samples: usize) -> Result<ChiResidueAtZero> {
    let fz = FiniteZeta::new(n)?;
    let closed_form = chi_residue_at_0_closed(n)?;
    let coeffs = laurent_coeffs(|s| chi(fz, s), c(0.0), -2..=0, radius, samples)?;
    let laurent = [coeffs[0].value, coeffs[1].value, coeffs[2].value];
    let contour = laurent[1].re;
    Ok(ChiResidueAtZero {
        n,
        closed_form,
        contour,
        difference: closed_form - contour,
        laurent,
    })
}

/// Residue of `1/χ(N; ·)` at 2 by the closed form and by the contour engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiRecipResidueAtTwo {
    pub n: u64,
    pub closed_form: f64,
    pub contour: f64,
    pub difference: f64,
}

/// `(2N/(N+1)² − 2Ψ(1, N+1) + 2ζ(2)) / ((N+1)²/2 − N/2 − 1/2 − Σ n(n+1) ln(1+1/n))`.
pub fn chi_recip_residue_at_2_closed(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("truncation order starts at 1"));
    }
    let nf = n as f64;
    let top = 2.0 * nf / ((nf + 1.0) * (nf + 1.0)) - 2.0 * polygamma(1, nf + 1.0)? + PI * PI / 3.0;
    // (N+1)²/2 − N/2 − 1/2 − Σ n(n+1)L = −Σ (1 − (n+1)(1 − nL))
    let mut bottom = 0.0;
    for k in (1..=n).rev() {
        let kf = k as f64;
        bottom -= 1.0 - (kf + 1.0) * one_minus_n_log1p_recip(kf);
    }
    Ok(top / bottom)
}

pub fn chi_recip_residue_at_2(n: u64) -> Result<ChiRecipResidueAtTwo> {
    chi_recip_residue_at_2_with(n, CONTOUR_RADIUS, CONTOUR_SAMPLES)
}

/// [`chi_recip_residue_at_2`] on a circle of the given radius and sample count.
pub fn chi_recip_residue_at_2_with(
    n: u64,
    radius: f64,
    samples: usize,
) -> Result<ChiRecipResidueAtTwo> {
    let fz = FiniteZeta::new(n)?;
    let closed_form = chi_recip_residue_at_2_closed(n)?;
    let contour = laurent_coeff(|s| chi_recip(fz, s), c(2.0), -1, radius, samples)?
        .value
        .re;
    Ok(ChiRecipResidueAtTwo {
        n,
        closed_form,
        contour,
        difference: closed_form - contour,
    })
}

/// `ζ_w(N; 1−k) = −(1/k) Σ_{m≤N} Σ_{j=1}^{k−2} C(k−1, j−1) m^j`, exactly.
pub fn chi_integer_numerator(n: u64, k: u32) -> BigRational {
    let mut total = BigInt::zero();
    for m in 1..=n {
        let mb = BigInt::from(m);
        let mut p = mb.clone();
        for j in 1..k.saturating_sub(1) {
            total += binomial(BigInt::from(k - 1), BigInt::from(j - 1)) * &p;
            p *= &mb;
        }
    }
    BigRational::new(-total, BigInt::from(k))
}

/// `−Σ_{m≤N} (1/k)((k−1)m^{k−1} + m^k − (m+1)^{k−1} m)`, the expanded numerator as displayed.
pub fn chi_integer_numerator_expanded(n: u64, k: u32) -> BigRational {
    let mut total = BigInt::zero();
    for m in 1..=n {
        let mb = BigInt::from(m);
        total += BigInt::from(k - 1) * num_traits::pow(mb.clone(), (k - 1) as usize)
            + num_traits::pow(mb.clone(), k as usize)
            - num_traits::pow(&mb + 1u32, (k - 1) as usize) * &mb;
    }
    BigRational::new(-total, BigInt::from(k))
}

/// `χ(N; k)` at an integer `k ≥ 2` from the exact numerator and the polygamma denominator.
pub fn chi_at_positive_integer(n: FiniteZeta, k: u32) -> Result<f64> {
    if k < 2 {
        return Err(pole(c(k as f64)));
    }
    let num = chi_integer_numerator(n.order(), k)
        .to_f64()
        .ok_or(Error::Domain("numerator out of range"))?;
    Ok(num / zeta_w_finite_integer(n, k)?)
}

/// `lim_{s→1} χ(N+1; s)/χ(N; s) = (N+2)N(N+1−a(N+1)) / ((N+1)²(N−a(N)))`.
pub fn chi_quotient_limit_at_1(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("truncation order starts at 1"));
    }
    let nf = n as f64;
    let g0 = abc_sums(n).gap;
    let g1 = g0 + one_minus_n_log1p_recip(nf + 1.0);
    Ok((nf + 2.0) * nf * g1 / ((nf + 1.0) * (nf + 1.0) * g0))
}

/// Contour residues of χ at 0 over a range of truncation orders.
#[derive(Debug, Clone, PartialEq)]
pub struct SignScan {
    pub residues: Vec<ChiResidueAtZero>,
    /// First consecutive pair whose contour residues change sign.
    pub first_change: Option<(u64, u64)>,
    pub increasing: bool,
}

pub fn residue_sign_scan(n_min: u64, n_max: u64) -> Result<SignScan> {
    if n_min == 0 || n_max < n_min {
        return Err(Error::Domain("scan needs 1 ≤ N_min ≤ N_max"));
    }
    let residues = (n_min..=n_max)
        .map(chi_residue_at_0)
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize_scan(residues))
}

/// Locates the first sign change and checks monotonicity of already computed residues.
pub fn summarize_scan(residues: Vec<ChiResidueAtZero>) -> SignScan {
    let first_change = residues
        .windows(2)
        .find(|w| (w[0].contour < 0.0) != (w[1].contour < 0.0))
        .map(|w| (w[0].n, w[1].n));
    let increasing = residues.windows(2).all(|w| w[1].contour > w[0].contour);
    SignScan {
        residues,
        first_change,
        increasing,
    }
}

/// `ν(s) = ζ(1−s)/ζ(s)`.
pub fn nu(s: Complex64) -> Result<Complex64> {
    let den = riemann_zeta(s)?;
    if den == c(0.0) {
        return Err(Error::DivisionByZero(s));
    }
    Ok(riemann_zeta(c(1.0) - s)? / den)
}

/// Residue of ν at `s = −n`: `ζ(1+n)/ζ'(−n)` for even `n`, zero for odd `n`.
pub fn nu_residue_at_negative(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("index starts at 1"));
    }
    if n % 2 == 1 {
        return Ok(0.0);
    }
    let s = -(n as f64);
    Ok(riemann_zeta(c(1.0 - s))?.re / riemann_zeta_derivative(c(s))?.re)
}

/// `2(2π)^{−s} cos(πs/2) Γ(s)`, the classical reflection factor.
pub fn classical_chi(s: Complex64) -> Result<Complex64> {
    Ok(c(2.0 * PI).powc(-s) * (s * (PI / 2.0)).cos() * gamma_fn(s)? * 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{residue_zeta_w_at_1, tau};

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn fz(n: u64) -> FiniteZeta {
        FiniteZeta::new(n).unwrap()
    }

    #[test]
    fn chi_special_values() {
        for n in [1u64, 7, 100] {
            assert_eq!(chi(fz(n), z(0.5, 0.0)).unwrap(), z(1.0, 0.0));
            assert!(chi(fz(n), z(2.0, 0.0)).unwrap().norm() <= 1e-10);
            for t in [0.1, 1.0, 5.0, 20.0] {
                let v = chi(fz(n), z(0.5, t)).unwrap();
                assert!((v.norm() - 1.0).abs() < 1e-10, "N={n} t={t}");
            }
        }
        assert!(chi(fz(3), z(0.0, 0.0)).is_err());
        assert!(chi(fz(3), z(-1.0, 0.0)).is_err());
    }

    #[test]
    fn involution_and_conjugation() {
        for n in [1u64, 10, 60] {
            for s in [z(0.3, 0.7), z(2.5, -1.0), z(-0.7, 4.0), z(1.7, 0.2)] {
                let a = chi(fz(n), s).unwrap();
                let b = chi(fz(n), c(1.0) - s).unwrap();
                assert!((a * b - 1.0).norm() < 1e-10);
                let d = chi(fz(n), s.conj()).unwrap();
                assert!((a - d.conj()).norm() < 1e-12 * (1.0 + a.norm()));
            }
        }
    }

    #[test]
    fn abc_single_terms() {
        let l2 = 2f64.ln();
        let t = abc_sums(1);
        assert!((t.a - l2).abs() < 1e-16);
        assert!((t.b + l2 / 2.0).abs() < 1e-16);
        assert!((t.c - l2 * l2 / 2.0).abs() < 1e-16);
        assert!((t.gap - (1.0 - l2)).abs() < 1e-16);
        for n in [1u64, 5, 300] {
            let t = abc_sums(n);
            assert!(t.a < n as f64 && t.c > 0.0);
            assert!(((n as f64 - t.a) - t.gap).abs() < 1e-12 * n as f64);
        }
    }

    #[test]
    fn contour_engine() {
        let r = laurent_coeff(|s| Ok(s.inv()), z(0.0, 0.0), -1, 0.5, 64).unwrap();
        assert!((r.value - 1.0).norm() < 1e-12);
        let r = laurent_coeff(tau, z(1.0, 0.0), -1, 0.5, 128).unwrap();
        assert!((r.value - 2.0).norm() < 1e-10);
        for n in [1u64, 10, 100] {
            let r = laurent_coeff(|s| zeta_w_finite(fz(n), s), z(1.0, 0.0), -1, 0.5, 256).unwrap();
            let exact = residue_zeta_w_at_1(fz(n)).to_f64().unwrap();
            assert!((r.value - exact).norm() < 1e-10);
        }
        assert!(laurent_coeff(Ok, z(0.0, 0.0), 0, 1.0, 100).is_err());
        assert!(laurent_coeff(|s| Ok(s.inv()), z(0.0, 0.0), 0, 1.0, 64)
            .map(|_| ())
            .is_ok());
        assert!(matches!(
            laurent_coeff(|_| Ok(z(f64::NAN, 0.0)), z(0.0, 0.0), 0, 1.0, 64),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn residue_at_zero_closed_form_matches_contour() {
        for n in 1..=20u64 {
            let r = chi_residue_at_0(n).unwrap();
            assert!(r.difference.abs() < 1e-6, "N={n} {r:?}");
            // double pole
            assert!(r.laurent[0].norm() > 1e-3);
            assert!(r.laurent[1].im.abs() < 1e-12);
        }
    }

    #[test]
    fn shared_samples_match_single_orders() {
        let f = |s: Complex64| Ok((s * 2.0).exp() / (s * s));
        let all = laurent_coeffs(f, c(0.0), -2..=1, 0.5, 64).unwrap();
        for lc in &all {
            let one = laurent_coeff(f, c(0.0), lc.order, 0.5, 64).unwrap();
            assert!((one.value - lc.value).norm() < 1e-14);
        }
        assert!((all[0].value - 1.0).norm() < 1e-14);
        assert!((all[1].value - 2.0).norm() < 1e-14);
        assert!((all[2].value - 2.0).norm() < 1e-14);
    }

    #[test]
    fn contour_is_converged() {
        let fz10 = fz(10);
        let a = laurent_coeff(|s| chi(fz10, s), c(0.0), -1, 0.1, 256)
            .unwrap()
            .value;
        let b = laurent_coeff(|s| chi(fz10, s), c(0.0), -1, 0.1, 512)
            .unwrap()
            .value;
        assert!((a - b).norm() < 1e-10);
    }

    #[test]
    fn residue_sign_change() {
        let scan = residue_sign_scan(174, 179).unwrap();
        assert_eq!(scan.first_change, Some((176, 177)));
        let r176 = scan.residues.iter().find(|r| r.n == 176).unwrap();
        assert!((r176.contour + 1.513_450_583_6e-4).abs() < 1e-9);
        assert!((r176.closed_form + 1.513_450_583_6e-4).abs() < 1e-9);
        let small = residue_sign_scan(1, 10).unwrap();
        assert_eq!(small.first_change, None);
    }

    #[test]
    fn residue_trend() {
        assert!((chi_residue_at_0_closed(1000).unwrap() - 0.268).abs() < 2e-3);
        let mut prev = f64::NEG_INFINITY;
        for n in [10u64, 100, 1000, 10_000, 100_000] {
            let v = chi_residue_at_0_closed(n).unwrap();
            assert!(v > prev);
            prev = v;
        }
        assert!(prev < 1.0);
    }

    #[test]
    fn recip_residue_at_two() {
        for n in [1u64, 5, 20] {
            let r = chi_recip_residue_at_2(n).unwrap();
            assert!(r.difference.abs() < 1e-6, "{r:?}");
        }
        // twice ζ_w(N;2) over the negated slope of ζ_w(N;·) at −1
        let n = 5;
        let h = 1e-5;
        let d = (zeta_w_finite(fz(n), z(-1.0 + h, 0.0)).unwrap()
            - zeta_w_finite(fz(n), z(-1.0 - h, 0.0)).unwrap())
            / (2.0 * h);
        let alt = 2.0 * zeta_w_finite(fz(n), z(2.0, 0.0)).unwrap() / (-d * 2.0);
        assert!((alt.re - chi_recip_residue_at_2_closed(n).unwrap()).abs() < 1e-6);
        let big = chi_recip_residue_at_2_closed(100_000).unwrap().abs();
        assert!(big < chi_recip_residue_at_2_closed(100).unwrap().abs() && big < 1e-4);
    }

    #[test]
    fn integer_values() {
        for n in [1u64, 10, 50] {
            assert!(chi_at_positive_integer(fz(n), 2).unwrap().abs() < 1e-10);
        }
        for (n, k) in [(10u64, 3u32), (50, 4), (7, 6), (200, 5)] {
            let closed = chi_at_positive_integer(fz(n), k).unwrap();
            let direct = chi(fz(n), c(k as f64)).unwrap().re;
            assert!(
                (closed - direct).abs() < 1e-9 * direct.abs().max(1.0),
                "N={n} k={k}"
            );
            let exact = chi_integer_numerator(n, k).to_f64().unwrap();
            let via = zeta_w_finite(fz(n), c(1.0 - k as f64)).unwrap().re;
            assert!((exact - via).abs() < 1e-9 * exact.abs());
            assert_eq!(
                chi_integer_numerator_expanded(n, k),
                -chi_integer_numerator(n, k)
            );
        }
        assert!(chi_at_positive_integer(fz(3), 1).is_err());
    }

    #[test]
    fn quotient_limit() {
        let l2 = 2f64.ln();
        let a1 = l2;
        let a2 = l2 + 2.0 * 1.5f64.ln();
        let want = 3.0 * (2.0 - a2) / (4.0 * (1.0 - a1));
        assert!((chi_quotient_limit_at_1(1).unwrap() - want).abs() < 1e-14);
        let n = 5;
        let h = 1e-4;
        let q = |s| chi(fz(n + 1), s).unwrap() / chi(fz(n), s).unwrap();
        let numeric = (q(z(1.0 + h, 0.0)) + q(z(1.0 - h, 0.0))) * 0.5;
        assert!((numeric.re - chi_quotient_limit_at_1(n).unwrap()).abs() < 1e-5);
        assert!((chi_quotient_limit_at_1(1_000_000).unwrap() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn nu_values() {
        assert_eq!(nu_residue_at_negative(3).unwrap(), 0.0);
        let h = 1e-6;
        for n in [2u64, 4, 6] {
            let s = -(n as f64);
            let d = (riemann_zeta(z(s + h, 0.0)).unwrap() - riemann_zeta(z(s - h, 0.0)).unwrap())
                .re
                / (2.0 * h);
            let want = riemann_zeta(z(1.0 + n as f64, 0.0)).unwrap().re / d;
            let got = nu_residue_at_negative(n).unwrap();
            assert!((got - want).abs() < 1e-6 * want.abs(), "n={n}");
            // contour oracle
            let r = laurent_coeff(nu, z(s, 0.0), -1, 0.25, 128).unwrap();
            assert!((r.value.re - got).abs() < 1e-8 * got.abs());
        }
        for t in [0.5, 3.0, 14.0] {
            let s = z(0.5, t);
            let v = nu(s).unwrap();
            assert!((v - classical_chi(s).unwrap()).norm() < 1e-8);
            assert!((v.norm() - 1.0).abs() < 1e-8);
        }
        assert!(nu(z(-2.0, 0.0)).is_err());
    }
}
