use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use super::gamma::gamma_fn;
use super::BERNOULLI_OVER_FACTORIAL;
use crate::error::{pole, Error, Result};

/// Euler–Maclaurin evaluation of Σ_{n≥0} (a+n)^{−s} for any complex shift `a`
/// with no nonpositive-integer terms.
pub(crate) fn hurwitz_em(s: Complex64, a: Complex64) -> Complex64 {
    let target = 25.0 + s.norm();
    let m = if a.re < target {
        (target - a.re).ceil() as usize
    } else {
        0
    };
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..m {
        sum += (-s * (a + n as f64).ln()).exp();
    }
    let x = a + m as f64;
    let x_neg_s = (-s * x.ln()).exp();
    sum += x * x_neg_s / (s - 1.0) + x_neg_s * 0.5;
    let x2 = x * x;
    let mut poch = s;
    let mut xp = x_neg_s / x;
    for (k, &coef) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = poch * xp * coef;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            break;
        }
        let j = 2.0 * (k + 1) as f64;
        poch = poch * (s + (j - 1.0)) * (s + j);
        xp /= x2;
    }
    sum
}

/// Riemann ζ(s).
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(pole(s));
    }
    if s.im == 0.0 && s.re < 0.0 && s.re == s.re.floor() && (s.re as i64) % 2 == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if s.re < -0.5 {
        let one_minus = 1.0 - s;
        let factor = Complex64::new(2.0, 0.0).powc(s)
            * Complex64::new(PI, 0.0).powc(s - 1.0)
            * (s * (PI / 2.0)).sin()
            * gamma_fn(one_minus)?;
        return Ok(factor * hurwitz_em(one_minus, Complex64::new(1.0, 0.0)));
    }
    Ok(hurwitz_em(s, Complex64::new(1.0, 0.0)))
}

/// ζ′(s) by a Cauchy integral on a small circle around `s`.
pub fn riemann_zeta_derivative(s: Complex64) -> Result<Complex64> {
    let d = (s - 1.0).norm();
    if d == 0.0 {
        return Err(pole(s));
    }
    let r = 0.25f64.min(d / 2.0);
    let k = 64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..k {
        let e = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / k as f64);
        acc += riemann_zeta(s + e * r)? / e;
    }
    Ok(acc / (r * k as f64))
}

/// Hurwitz ζ(s, a) for real `a > 0`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::Domain("Hurwitz shift must be positive"));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(pole(s));
    }
    Ok(hurwitz_em(s, Complex64::new(a, 0.0)))
}

/// Digamma ψ(x) for real `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain("digamma requires a positive argument"));
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < 12.0 {
        shift += 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut sum = y.ln() - 0.5 / y;
    let mut p = inv2;
    let mut fact = 1.0; // (2k−1)!
    for (k, &coef) in BERNOULLI_OVER_FACTORIAL.iter().enumerate().take(12) {
        let m = 2 * (k + 1);
        if k > 0 {
            fact *= ((m - 2) * (m - 1)) as f64;
        }
        sum -= coef * fact * p;
        p *= inv2;
    }
    Ok(sum - shift)
}

/// Polygamma Ψ(k, x) for real `x > 0`.
pub fn polygamma(k: u32, x: f64) -> Result<f64> {
    if k == 0 {
        return digamma(x);
    }
    if !(x > 0.0) {
        return Err(Error::Domain("polygamma requires a positive argument"));
    }
    let mut fact = 1.0;
    for j in 2..=k {
        fact *= j as f64;
    }
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * fact * hurwitz_zeta(Complex64::new((k + 1) as f64, 0.0), x)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::EULER_GAMMA;

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Σ n^{−s} for n < M plus the integral tail and half the boundary term.
    fn series_oracle(s: f64) -> f64 {
        let m = 200_000u64;
        let mut sum = 0.0;
        for n in (1..m).rev() {
            sum += (n as f64).powf(-s);
        }
        let mf = m as f64;
        sum + mf.powf(1.0 - s) / (s - 1.0) + 0.5 * mf.powf(-s) + s / 12.0 * mf.powf(-s - 1.0)
    }

    #[test]
    fn zeta_at_two_and_three() {
        let v = riemann_zeta(z(2.0, 0.0)).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-14);
        let v = riemann_zeta(z(3.0, 0.0)).unwrap();
        assert!((v.re - series_oracle(3.0)).abs() < 1e-13);
        let v = riemann_zeta(z(1.5, 0.0)).unwrap();
        assert!((v.re - series_oracle(1.5)).abs() < 1e-12);
    }

    #[test]
    fn zeta_at_zero_and_negative_integers() {
        assert!((riemann_zeta(z(0.0, 0.0)).unwrap().re + 0.5).abs() < 1e-15);
        assert!((riemann_zeta(z(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-14);
        assert!((riemann_zeta(z(-3.0, 0.0)).unwrap().re - 1.0 / 120.0).abs() < 1e-14);
        assert_eq!(riemann_zeta(z(-4.0, 0.0)).unwrap(), z(0.0, 0.0));
        assert!(matches!(riemann_zeta(z(1.0, 0.0)), Err(Error::Pole(_))));
    }

    #[test]
    fn first_nontrivial_zero() {
        let v = riemann_zeta(z(0.5, 14.134_725_141_734_693)).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn functional_equation_grid() {
        for &s in &[
            z(2.0, 0.0),
            z(3.0, 0.0),
            z(4.0, 0.0),
            z(2.0, 1.0),
            z(3.0, 2.0),
        ] {
            let lhs = riemann_zeta(1.0 - s).unwrap();
            let rhs = Complex64::new(2.0, 0.0)
                * Complex64::new(2.0 * PI, 0.0).powc(-s)
                * (s * (PI / 2.0)).cos()
                * gamma_fn(s).unwrap()
                * riemann_zeta(s).unwrap();
            assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let s = z(0.3, 27.0);
        let a = riemann_zeta(s).unwrap();
        let b = riemann_zeta(s.conj()).unwrap();
        assert!((a - b.conj()).norm() < 1e-13 * a.norm());
    }

    #[test]
    fn large_imaginary_part_against_functional_equation() {
        // evaluates ζ(−0.7+90i) through the reflection branch and compares with the
        // direct Euler–Maclaurin sum at the same point
        let s = z(-0.7, 90.0);
        let a = riemann_zeta(s).unwrap();
        let b = hurwitz_em(s, z(1.0, 0.0));
        assert!((a - b).norm() < 1e-11 * b.norm());
    }

    #[test]
    fn derivative_matches_central_difference() {
        let s = z(-2.0, 0.0);
        let h = 1e-6;
        let fd = (riemann_zeta(s + h).unwrap() - riemann_zeta(s - h).unwrap()) / (2.0 * h);
        let d = riemann_zeta_derivative(s).unwrap();
        assert!((d - fd).norm() < 1e-8);
        // ζ′(0) = −ln(2π)/2
        let d0 = riemann_zeta_derivative(z(0.0, 0.0)).unwrap();
        assert!((d0.re + (2.0 * PI).ln() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn hurwitz_identities() {
        let a = hurwitz_zeta(z(2.0, 0.0), 1.0).unwrap();
        assert!((a.re - PI * PI / 6.0).abs() < 1e-14);
        let b = hurwitz_zeta(z(2.0, 0.0), 2.0).unwrap();
        assert!((b.re - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
        let c = hurwitz_zeta(z(3.0, 0.0), 0.5).unwrap();
        let z3 = riemann_zeta(z(3.0, 0.0)).unwrap();
        assert!((c - z3 * 7.0).norm() < 1e-13);
        // shift identity at a complex exponent
        let s = z(1.5, 3.0);
        let lhs = hurwitz_zeta(s, 0.3).unwrap() - hurwitz_zeta(s, 1.3).unwrap();
        let rhs = (-s * 0.3f64.ln()).exp();
        assert!((lhs - rhs).norm() < 1e-12);
        assert!(hurwitz_zeta(s, 0.0).is_err());
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        // ψ(1/2) = −γ − 2 ln 2
        assert!((digamma(0.5).unwrap() + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn polygamma_values_and_recurrence() {
        assert!((polygamma(1, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        for k in 0..5u32 {
            let mut fact = 1.0;
            for j in 2..=k {
                fact *= j as f64;
            }
            for &x in &[0.3, 1.0, 2.5, 17.0] {
                let diff = polygamma(k, x + 1.0).unwrap() - polygamma(k, x).unwrap();
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let expected = sign * fact * x.powi(-(k as i32) - 1);
                assert!((diff - expected).abs() < 1e-10, "k={k} x={x}");
            }
        }
    }
}
