//! Adaptive Gauss–Kronrod (7/15) quadrature for complex integrands on real intervals.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Integral value together with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: Complex64,
    pub error: f64,
}

fn kronrod<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Result<(Complex64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        if !(f1.is_finite() && f2.is_finite()) {
            return Err(Error::NonFinite(Complex64::new(center + dx, 0.0)));
        }
        k += (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            g += (f1 + f2) * WG[j / 2];
        }
    }
    if !fc.is_finite() {
        return Err(Error::NonFinite(Complex64::new(center, 0.0)));
    }
    Ok((k * half, ((k - g) * half).norm()))
}

/// Integrates `f` over `[a, b]` until the summed error estimate drops below
/// `abs_tol + rel_tol·|I|`.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Quadrature> {
    let (v, e) = kronrod(&f, a, b)?;
    let mut pieces: Vec<(f64, f64, Complex64, f64)> = alloc::vec![(a, b, v, e)];
    for _ in 0..2000 {
        let total: Complex64 = pieces.iter().map(|p| p.2).sum();
        let err: f64 = pieces.iter().map(|p| p.3).sum();
        if err <= abs_tol.max(rel_tol * total.norm()) {
            return Ok(Quadrature {
                value: total,
                error: err,
            });
        }
        let worst = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let (lo, hi, _, _) = pieces.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = kronrod(&f, lo, mid)?;
        let (v2, e2) = kronrod(&f, mid, hi)?;
        pieces.push((lo, mid, v1, e1));
        pieces.push((mid, hi, v2, e2));
    }
    Err(Error::NonConvergence { iterations: 2000 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let q = integrate(|x| Complex64::new(x * x * x, x), 0.0, 2.0, 1e-14, 1e-14).unwrap();
        assert!((q.value - Complex64::new(4.0, 2.0)).norm() < 1e-13);
    }

    #[test]
    fn oscillatory_integrand() {
        let q = integrate(
            |x| Complex64::new(0.0, 40.0 * x).exp(),
            0.0,
            1.0,
            1e-13,
            1e-13,
        )
        .unwrap();
        let exact = (Complex64::new(0.0, 40.0).exp() - 1.0) / Complex64::new(0.0, 40.0);
        assert!((q.value - exact).norm() < 1e-12);
    }

    #[test]
    fn log_singularity_converges() {
        let q = integrate(|x| Complex64::new(x.ln(), 0.0), 0.0, 1.0, 1e-12, 1e-12).unwrap();
        assert!((q.value.re + 1.0).abs() < 1e-10);
    }
}
