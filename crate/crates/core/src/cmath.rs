//! Small complex helpers that keep cancellation out of the transform formulas.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `e^z − 1` without cancellation for small `z`.
pub(crate) fn expm1(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    let s = (0.5 * y).sin();
    Complex64::new(x.exp_m1() * y.cos() - 2.0 * s * s, x.exp() * y.sin())
}

/// `e^z − 1 − z`.
pub(crate) fn expm1mx(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        let mut term = z * z * 0.5;
        let mut sum = term;
        for k in 3..30 {
            term = term * z / k as f64;
            sum += term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        expm1(z) - z
    }
}

/// `(e^z − 1)/z`, equal to 1 at the origin.
pub(crate) fn exprel(z: Complex64) -> Complex64 {
    if z.norm() < 1e-2 {
        let mut term = c(1.0);
        let mut sum = term;
        for k in 2..12 {
            term = term * z / k as f64;
            sum += term;
        }
        sum
    } else {
        expm1(z) / z
    }
}

/// `ln(1 + z)` accurate near `z = 0`.
pub(crate) fn ln1p(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        z - z * z / 2.0 + z * z * z / 3.0 - z * z * z * z / 4.0
    } else {
        (c(1.0) + z).ln()
    }
}

/// `1 − n ln(1 + 1/n)`, small and positive for large `n`.
pub(crate) fn one_minus_n_log1p_recip(n: f64) -> f64 {
    if n >= 8.0 {
        let x = 1.0 / n;
        // Σ_{k≥2} (−1)^k x^{k−1} / k
        let mut sum = 0.0;
        let mut pow = x;
        for k in 2..40 {
            let t = pow / k as f64;
            sum += if k % 2 == 0 { t } else { -t };
            if t < 1e-19 {
                break;
            }
            pow *= x;
        }
        sum
    } else {
        1.0 - n * (1.0 / n).ln_1p()
    }
}

/// `(1 − (1 + z)e^{−z})/z²`, equal to 1/2 at the origin.
pub(crate) fn laplace_kernel(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        // Σ_{k≥2} (−1)^k (k − 1) z^{k−2} / k!
        let mut sum = c(0.0);
        let mut pow = c(1.0);
        let mut fact = 2.0;
        for k in 2..30 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += pow * (sign * (k - 1) as f64 / fact);
            pow *= z;
            fact *= (k + 1) as f64;
        }
        sum
    } else {
        (c(1.0) - (c(1.0) + z) * (-z).exp()) / (z * z)
    }
}

/// `x^{−s}` for a positive real base.
pub(crate) fn real_pow_neg(x: f64, s: Complex64) -> Complex64 {
    (-s * x.ln()).exp()
}
