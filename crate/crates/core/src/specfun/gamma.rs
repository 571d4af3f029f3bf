use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use super::BERNOULLI_OVER_FACTORIAL;
use crate::error::{pole, Result};

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

/// Stirling series for large `|z|` with `Re z > 0`.
fn stirling(z: Complex64) -> Complex64 {
    let mut sum = (z - 0.5) * z.ln() - z + HALF_LN_TWO_PI;
    let z2 = z * z;
    let mut zp = z;
    for (k, &coef) in BERNOULLI_OVER_FACTORIAL.iter().enumerate().take(16) {
        // B_2k/(2k(2k−1) z^{2k−1}) = (B_2k/(2k)!) (2k−2)! / z^{2k−1}
        let m = 2 * (k + 1);
        let mut f = 1.0;
        for j in 2..=(m - 2) {
            f *= j as f64;
        }
        let term = zp.inv() * (coef * f);
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
        zp *= z2;
    }
    sum
}

/// A logarithm of Γ(z) for `Re z ≥ 1/2` (not necessarily the principal branch).
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let mut shift = Complex64::new(1.0, 0.0);
    let mut w = z;
    while w.norm() < 15.0 {
        shift *= w;
        w += 1.0;
    }
    stirling(w) - shift.ln()
}

/// A logarithm of Γ(z); `exp` of the result is Γ(z).
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(pole(z));
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z))
    } else {
        let s = (z * PI).sin();
        Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_right(1.0 - z))
    }
}

/// Γ(z).
pub fn gamma_fn(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(pole(z));
    }
    if z.im == 0.0 && z.re == z.re.floor() && z.re <= 171.0 {
        let mut f = 1.0;
        for j in 2..(z.re as u32) {
            f *= j as f64;
        }
        return Ok(Complex64::new(f, 0.0));
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z).exp())
    } else {
        Ok(PI / ((z * PI).sin() * ln_gamma_right(1.0 - z).exp()))
    }
}
