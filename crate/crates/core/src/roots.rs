//! Roots of the component transforms `L[w_n]` and `M[w_n]`.

use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};
#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use crate::cmath::c;
use crate::error::{Error, Result};
use crate::specfun::lambert_w;
use crate::transforms::{laplace_w_component, mellin_w_component, zeta_w_finite, FiniteZeta};

/// Lambert W branch index.
pub type BranchIndex = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    Laplace,
    Mellin,
}

/// Roots of one component transform, labelled by branch or lattice index.
#[derive(Debug, Clone, PartialEq)]
pub struct RootFamily {
    pub n: u64,
    pub kind: RootKind,
    pub roots: Vec<(BranchIndex, Complex64)>,
}

const NEG_INV_E: f64 = -0.367_879_441_171_442_3;

/// `−n(n+1)(W(m, −1/e) + 1)`, a zero of `L[w_n]`.
pub fn laplace_root(n: u64, m: BranchIndex) -> Result<Complex64> {
    let nf = n as f64;
    let w = lambert_w(m, c(NEG_INV_E))?;
    Ok(-(w + 1.0) * (nf * (nf + 1.0)))
}

/// `|ρ(m) − conj(ρ(−m−1))|`.
pub fn laplace_root_reflection_check(n: u64, m: BranchIndex) -> Result<f64> {
    Ok((laplace_root(n, m)? - laplace_root(n, -m - 1)?.conj()).norm())
}

/// Laplace roots for a range of branches.
pub fn laplace_roots(
    n: u64,
    branches: impl IntoIterator<Item = BranchIndex>,
) -> Result<RootFamily> {
    let roots = branches
        .into_iter()
        .map(|m| laplace_root(n, m).map(|r| (m, r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RootFamily {
        n,
        kind: RootKind::Laplace,
        roots,
    })
}

/// `(W(m, ln√2/(z−1)) + ln 2)/ln 2`, the solutions of `ζ_w(1; s) = z`.
pub fn mellin_inverse_n1(z: Complex64, m: BranchIndex) -> Result<Complex64> {
    if z == c(1.0) {
        return Err(Error::Domain("no preimage of 1"));
    }
    let w = lambert_w(m, c(0.5 * LN_2) / (z - 1.0))?;
    Ok((w + LN_2) / LN_2)
}

/// `ζ_w(1; s)`, the forward map inverted by [`mellin_inverse_n1`].
pub fn mellin_forward_n1(s: Complex64) -> Result<Complex64> {
    zeta_w_finite(FiniteZeta::new(1)?, s)
}

const SEED_SWEEPS: usize = 30;
const NEWTON_CAP: usize = 100;

/// `n − n q^{−s} − s` with `q = (n+1)/n`; its zeros off `{0, −1}` are the zeros of `M[w_n]`.
fn root_equation(n: f64, l: f64, s: Complex64) -> (Complex64, Complex64) {
    let e = (-s * l).exp() * n;
    (c(n) - e - s, e * l - 1.0)
}

fn refine_root(n: u64, k: i64) -> Result<Complex64> {
    let nf = n as f64;
    let l = (1.0 / nf).ln_1p();
    let twopik = Complex64::new(0.0, 2.0 * PI * k as f64);
    let mut s = Complex64::new(0.5, 2.0 * PI * k as f64 / l);
    // the lattice seed drifts off the line Re = 1/2, so pull it onto the k-th sheet first
    for _ in 0..SEED_SWEEPS {
        s = -((c(1.0) - s / nf).ln() - twopik) / l;
    }
    for _ in 0..NEWTON_CAP {
        let (g, dg) = root_equation(nf, l, s);
        let mut step = g / dg;
        if !step.is_finite() {
            return Err(Error::SeedFailure { index: k as usize });
        }
        let scale = 1.0 + s.norm();
        if step.norm() > 0.5 * scale {
            step *= 0.5;
        }
        s -= step;
        if step.norm() <= 4.0 * f64::EPSILON * scale {
            let (g, _) = root_equation(nf, l, s);
            if g.norm() <= 1e-9 * scale {
                return Ok(s);
            }
        }
    }
    Err(Error::SeedFailure { index: k as usize })
}

/// The `count` zeros of `M[w_n]` with smallest positive imaginary part, by Newton's method.
pub fn mellin_roots_numeric(n: u64, count: usize) -> Result<RootFamily> {
    if n == 0 || count == 0 {
        return Err(Error::Domain("need n ≥ 1 and count ≥ 1"));
    }
    let mut roots = (1..=count as i64)
        .map(|k| refine_root(n, k).map(|r| (k, r)))
        .collect::<Result<Vec<_>>>()?;
    roots.sort_by(|a, b| a.1.im.total_cmp(&b.1.im));
    Ok(RootFamily {
        n,
        kind: RootKind::Mellin,
        roots,
    })
}

/// `|M[w_n](s)|`.
pub fn mellin_residual(n: u64, s: Complex64) -> f64 {
    mellin_w_component(n, s).norm()
}

/// `|M[w_n](s)| / |M[w_n]'(s)|`, the Newton distance to the nearest zero.
///
/// The derivative uses the factorisation `M = −n^{−s} G(s)/(s(s+1))` with `G` vanishing at the zero.
pub fn mellin_scaled_residual(n: u64, s: Complex64) -> f64 {
    let nf = n as f64;
    let l = (1.0 / nf).ln_1p();
    let (_, dg) = root_equation(nf, l, s);
    let dm = crate::cmath::real_pow_neg(nf, s) * dg / (s * (s + 1.0));
    mellin_w_component(n, s).norm() / dm.norm()
}

/// `|L[w_n](s)|`.
pub fn laplace_residual(n: u64, s: Complex64) -> f64 {
    laplace_w_component(n, s).norm()
}

/// `2πi/(ln(n+1) − ln n)`.
pub fn root_spacing_limit(n: u64) -> Complex64 {
    Complex64::new(0.0, 2.0 * PI / (1.0 / n as f64).ln_1p())
}

/// Limiting ratio of the root spacing of `M[w_n]` to that of `M[w_{n−1}]`.
pub fn root_spacing_quotient(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain("quotient needs n ≥ 2"));
    }
    let nf = n as f64;
    Ok((1.0 / (nf - 1.0)).ln_1p() / (1.0 / nf).ln_1p())
}

/// `e^{−2πi/(ln(n+1) − ln n)}`, the limit of `e^{ρ(m) − ρ(m+1)}`.
pub fn root_exponential_spacing(n: u64) -> Complex64 {
    let theta = 2.0 * PI / (1.0 / n as f64).ln_1p();
    Complex64::from_polar(1.0, -theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn laplace_roots_vanish() {
        for n in 1..=5u64 {
            assert_eq!(laplace_root(n, 0).unwrap(), z(0.0, 0.0));
            assert_eq!(laplace_root(n, -1).unwrap(), z(0.0, 0.0));
            // the branch pair touching −1/e lands on the removable point 0
            let at_zero = laplace_residual(n, z(0.0, 0.0));
            assert_eq!(at_zero, 0.5 / (n * (n + 1)) as f64);
            for m in (-5..=5).filter(|m| !matches!(m, 0 | -1)) {
                let r = laplace_root(n, m).unwrap();
                assert!(
                    laplace_residual(n, r) <= 1e-9 * (n * n) as f64,
                    "n={n} m={m}"
                );
                assert!(laplace_root_reflection_check(n, m).unwrap() <= 1e-9);
            }
        }
        let r1 = laplace_root(1, 1).unwrap();
        let w = z(-3.088_843_015_613_044, 7.461_489_285_654_255);
        assert!((r1 + (w + 1.0) * 2.0).norm() < 1e-12);
    }

    #[test]
    fn laplace_quotient() {
        for m in [1i64, 2, -3, 7] {
            let q = laplace_root(2, m).unwrap() / laplace_root(1, m).unwrap();
            assert!((q - 3.0).norm() < 1e-12);
            let q = laplace_root(5, m).unwrap() / laplace_root(4, m).unwrap();
            assert!((q - 1.5).norm() < 1e-12);
        }
    }

    #[test]
    fn inverse_n1_round_trip() {
        for (zz, m) in [
            (z(0.0, 0.0), 0),
            (z(0.0, 0.0), 1),
            (z(2.0, 0.0), 0),
            (z(0.5, -1.0), 3),
            (z(-4.0, 2.0), -2),
        ] {
            let s = mellin_inverse_n1(zz, m).unwrap();
            let back = mellin_forward_n1(s).unwrap();
            assert!((back - zz).norm() < 1e-10, "z={zz} m={m}");
        }
        let s0 = mellin_inverse_n1(z(0.0, 0.0), 0).unwrap();
        let s1 = mellin_inverse_n1(z(0.0, 0.0), 1).unwrap();
        assert!((s0 - s1).norm() > 1.0);
        assert!(mellin_inverse_n1(z(1.0, 0.0), 0).is_err());
    }

    fn mellin_root_lambert(n: u64, m: i64) -> Complex64 {
        let nf = n as f64;
        let l = (1.0 / nf).ln_1p();
        let arg = -nf * l * (-nf * l).exp();
        lambert_w(m, c(arg)).unwrap() / l + nf
    }

    #[test]
    fn mellin_roots_n1_match_closed_form() {
        let fam = mellin_roots_numeric(1, 25).unwrap();
        assert_eq!(fam.roots.len(), 25);
        for (k, r) in &fam.roots {
            let closed = mellin_inverse_n1(z(0.0, 0.0), *k).unwrap();
            assert!((r - closed).norm() < 1e-8, "k={k} {r} {closed}");
            assert!(mellin_residual(1, *r) <= 1e-9);
        }
        assert!(fam.roots.windows(2).all(|w| w[1].1.im > w[0].1.im));
    }

    #[test]
    fn mellin_roots_general_n() {
        for n in [2u64, 3, 10] {
            let fam = mellin_roots_numeric(n, 8).unwrap();
            for (k, r) in &fam.roots {
                assert!((r - mellin_root_lambert(n, *k)).norm() < 1e-8 * (1.0 + r.norm()));
                assert!(mellin_scaled_residual(n, *r) <= 1e-9 * (1.0 + r.norm()));
            }
        }
        let a = mellin_roots_numeric(1, 5).unwrap();
        let b = mellin_roots_numeric(2, 5).unwrap();
        for (x, y) in a.roots.iter().zip(&b.roots) {
            assert!(y.1.im > x.1.im);
        }
    }

    #[test]
    fn mellin_root_asymptotics() {
        let fam = mellin_roots_numeric(1, 21).unwrap();
        let r20 = fam.roots[19].1;
        let r21 = fam.roots[20].1;
        let gap = (r21 - r20).im;
        let lim = root_spacing_limit(1).im;
        assert!((gap - lim).abs() < 0.01 * lim);
        assert!((r20.arg() - PI / 2.0).abs() < 0.05);
        // the real parts grow in magnitude like a logarithm
        let re: Vec<f64> = fam.roots.iter().map(|r| r.1.re.abs()).collect();
        assert!(re.windows(2).all(|w| w[1] > w[0]));
        let far = mellin_roots_numeric(1, 201).unwrap();
        let e = (far.roots[199].1 - far.roots[200].1).exp();
        assert!((e - root_exponential_spacing(1)).norm() < 0.01);
    }

    #[test]
    fn spacing_values() {
        assert!((root_spacing_limit(1) - z(0.0, 2.0 * PI / LN_2)).norm() < 1e-14);
        let q = root_spacing_quotient(3).unwrap();
        assert!((q - (1.5f64.ln() / (4.0f64 / 3.0).ln())).abs() < 1e-15);
        let ratio = root_spacing_limit(3).im / root_spacing_limit(2).im;
        assert!((q - ratio).abs() < 1e-14);
        assert!((root_spacing_quotient(1_000_000).unwrap() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn exponential_spacing() {
        for n in [1u64, 2, 50, 1_000_000] {
            assert!((root_exponential_spacing(n).norm() - 1.0).abs() < 1e-15);
        }
        assert!((root_exponential_spacing(1_000_000) + 1.0).norm() < 1e-3);
        let t = PI / LN_2;
        let expanded = z(1.0 - 2.0 * t.sin().powi(2), -2.0 * t.cos() * t.sin());
        assert!((root_exponential_spacing(1) - expanded).norm() < 1e-12);
    }
}
