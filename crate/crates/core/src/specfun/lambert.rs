use core::f64::consts::{E, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_ITER: usize = 50;
const INV_E: f64 = 0.367_879_441_171_442_33;

/// Series in `p = √(2(ez+1))` around the branch point, on the sheet selected by `sign`.
fn branch_point_series(p: Complex64) -> Complex64 {
    const COEF: [f64; 7] = [
        -1.0,
        1.0,
        -1.0 / 3.0,
        11.0 / 72.0,
        -43.0 / 540.0,
        769.0 / 17280.0,
        -221.0 / 8505.0,
    ];
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in COEF.iter().rev() {
        acc = acc * p + c;
    }
    acc
}

fn asymptotic(z: Complex64, k: i64) -> Complex64 {
    let l1 = z.ln() + Complex64::new(0.0, 2.0 * PI * k as f64);
    let l2 = l1.ln();
    l1 - l2 + l2 / l1
}

/// Branch `m` of the Lambert W function, the solutions of `w e^w = z`.
///
/// Values on the real cuts are taken from the upper half plane.
pub fn lambert_w(m: i64, z: Complex64) -> Result<Complex64> {
    let z = Complex64::new(z.re, if z.im == 0.0 { 0.0 } else { z.im });
    if !z.is_finite() {
        return Err(Error::Domain("Lambert W of a non-finite argument"));
    }
    if z == Complex64::new(0.0, 0.0) {
        return if m == 0 {
            Ok(z)
        } else {
            Err(Error::Domain(
                "Lambert W has a logarithmic singularity at 0 off the principal branch",
            ))
        };
    }
    let d = z * E + 1.0;
    let upper = z.im >= 0.0;
    // branches meeting at −1/e: {0, −1} from above, {0, 1} from below
    let touches = m == 0 || (m == -1 && upper) || (m == 1 && !upper);
    if touches && d.norm() <= 4.0 * f64::EPSILON {
        return Ok(Complex64::new(-1.0, 0.0));
    }
    let near_branch = touches && (z + INV_E).norm() < 0.3;
    let mut w = if near_branch {
        let p = (d * 2.0).sqrt();
        let p = if m == 0 { p } else { -p };
        let w = branch_point_series(p);
        if p.norm() < 1e-3 {
            return Ok(w);
        }
        w
    } else if m == 0 && z.norm() < 2.0 {
        (z + 1.0).ln()
    } else {
        asymptotic(z, m)
    };
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - z;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (wp1 * 2.0);
        let step = f / denom;
        w -= step;
        if step.norm() <= 4.0 * f64::EPSILON * (1.0 + w.norm()) {
            return Ok(w);
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITER,
    })
}

/// `W(−1, −ln(z)/z)`, which inverts `x ↦ x^{1/x}` off the principal sheet.
pub fn w_ln(z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("W_ln is undefined at 0"));
    }
    lambert_w(-1, -z.ln() / z)
}

/// The positive real `x` with `Re W_ln(x) = 0`, namely `2W(3π/2)/(3π)`.
pub fn w_ln_real_root() -> f64 {
    let w = lambert_w(0, Complex64::new(1.5 * PI, 0.0))
        .map(|w| w.re)
        .unwrap_or(f64::NAN);
    2.0 * w / (3.0 * PI)
}
