use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use super::zeta::hurwitz_em;
use crate::error::{Error, Result};

const TAIL_ORDER: usize = 30;

/// Lerch transcendent Φ(z, a, v) = Σ_{n≥0} z^n (v+n)^{−a}.
pub fn lerch_phi(z: Complex64, a: Complex64, v: Complex64) -> Result<Complex64> {
    if v.im == 0.0 && v.re <= 0.0 && v.re == v.re.floor() {
        return Err(Error::Pole(v));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok((-a * v.ln()).exp());
    }
    let r = z.norm();
    if r > 1.0 + 1e-15 {
        return Err(Error::Divergent("Lerch series needs |z| ≤ 1"));
    }
    if r >= 1.0 - 1e-15 {
        if a.re <= 1.0 {
            return Err(Error::Divergent("Lerch series on |z| = 1 needs Re a > 1"));
        }
        if (z - 1.0).norm() < 1e-15 {
            if a == Complex64::new(1.0, 0.0) {
                return Err(Error::Pole(a));
            }
            return Ok(hurwitz_em(a, v));
        }
        return unit_circle(z, a, v);
    }
    inside(z, a, v)
}

fn term(z_pow: Complex64, a: Complex64, x: Complex64) -> Complex64 {
    z_pow * (-a * x.ln()).exp()
}

fn inside(z: Complex64, a: Complex64, v: Complex64) -> Result<Complex64> {
    let r = z.norm();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    let limit = 50_000_000usize;
    for n in 0..limit {
        let x = v + n as f64;
        let t = term(zp, a, x);
        sum += t;
        // once |v+n| grows the terms decay at least geometrically with ratio ≲ r
        if x.re > 2.0 * v.norm() + 10.0 && t.norm() / (1.0 - r) <= 1e-17 * sum.norm() {
            return Ok(sum);
        }
        zp *= z;
    }
    Err(Error::NonConvergence { iterations: limit })
}

/// |z| = 1, z ≠ 1: direct sum to M, then Σ_{k≥0} z^k g(M+k) = Σ_j r_j g^{(j)}(M)
/// with r_j the Taylor coefficients of 1/(1 − z e^t).
fn unit_circle(z: Complex64, a: Complex64, v: Complex64) -> Result<Complex64> {
    let theta = z.arg().abs();
    let m = (4.0 * TAIL_ORDER as f64 / theta).max(64.0).ceil() + v.norm().ceil();
    if m > 1e8 {
        return Err(Error::NonConvergence {
            iterations: m as usize,
        });
    }
    let m = m as usize;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    for n in 0..m {
        sum += term(zp, a, v + n as f64);
        zp *= z;
    }
    // coefficients of 1/(1 − z e^t)
    let mut c = Vec::with_capacity(TAIL_ORDER);
    c.push(1.0 - z);
    let mut fact = 1.0;
    for j in 1..TAIL_ORDER {
        fact *= j as f64;
        c.push(-z / fact);
    }
    let mut rcoef: Vec<Complex64> = Vec::with_capacity(TAIL_ORDER);
    rcoef.push(c[0].inv());
    for j in 1..TAIL_ORDER {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 1..=j {
            acc += c[i] * rcoef[j - i];
        }
        rcoef.push(-acc / c[0]);
    }
    let x = v + m as f64;
    let mut deriv = (-a * x.ln()).exp();
    let mut tail = Complex64::new(0.0, 0.0);
    for (j, rj) in rcoef.iter().enumerate() {
        tail += rj * deriv;
        deriv = deriv * (-a - j as f64) / x;
    }
    Ok(sum + zp * tail)
}
