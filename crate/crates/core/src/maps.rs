//! The harmonic sawtooth map `w`, the Gauss map `h`, and their orbits.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::specfun::lerch_phi;
use crate::PHI;

/// Decimal expansion of the Euler–Mascheroni constant.
pub const EULER_GAMMA_DIGITS: &str = "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144724980708248096";

/// Largest number of decimals of γ available to [`gamma_orbit`].
pub const EULER_GAMMA_MAX_DIGITS: usize = 120;

/// Branch `n` of the map together with its interval `(1/(n+1), 1/n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MapComponent {
    pub n: u64,
}

impl MapComponent {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("component index starts at 1"));
        }
        Ok(Self { n })
    }

    /// Endpoints `(1/(n+1), 1/n)`; the left one is excluded.
    pub fn interval(&self) -> (f64, f64) {
        (1.0 / (self.n + 1) as f64, 1.0 / self.n as f64)
    }

    pub fn contains(&self, x: f64) -> bool {
        chi_harmonic(x, self.n) == 1
    }
}

/// Indicator of the harmonic interval `(1/(n+1), 1/n]`.
pub fn chi_harmonic(x: f64, n: u64) -> u8 {
    if n == 0 {
        return 0;
    }
    // signs of x(n+1) − 1 and xn − 1 are exact under a fused multiply-add
    let above = x.mul_add((n + 1) as f64, -1.0) > 0.0;
    let below = x.mul_add(n as f64, -1.0) <= 0.0;
    (above && below) as u8
}

/// The unique `n` whose harmonic interval contains `x ∈ (0, 1]`.
pub fn branch_index(x: f64) -> Result<u64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain("map argument must lie in (0, 1]"));
    }
    let mut k = (1.0 / x).floor().max(1.0) as u64;
    while k > 1 && chi_harmonic(x, k) == 0 && x.mul_add(k as f64, -1.0) > 0.0 {
        k -= 1;
    }
    while chi_harmonic(x, k) == 0 {
        k += 1;
    }
    Ok(k)
}

/// `w_n(x) = n(xn + x − 1)` on its interval, zero elsewhere.
pub fn w_component(n: u64, x: f64) -> f64 {
    if chi_harmonic(x, n) == 0 {
        return 0.0;
    }
    n as f64 * x.mul_add((n + 1) as f64, -1.0)
}

/// `h_n(x) = 1/x − n` on its interval, zero elsewhere.
pub fn h_component(n: u64, x: f64) -> f64 {
    if chi_harmonic(x, n) == 0 {
        return 0.0;
    }
    1.0 / x - n as f64
}

/// The harmonic sawtooth map on `(0, 1]`.
pub fn w_map(x: f64) -> Result<f64> {
    let k = branch_index(x)?;
    Ok(k as f64 * x.mul_add((k + 1) as f64, -1.0))
}

/// The Gauss map `1/x − ⌊1/x⌋` on `(0, 1]`.
pub fn gauss_map(x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain("map argument must lie in (0, 1]"));
    }
    let y = 1.0 / x;
    Ok(y - y.floor())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    W,
    H,
}

/// A finite orbit; `terminated` is set when an iterate left `(0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit {
    pub points: Vec<f64>,
    pub terminated: bool,
}

/// `[x, f(x), …, f^r(x)]`, cut short once an iterate leaves the domain.
pub fn iterate_map(kind: MapKind, x: f64, r: usize) -> Result<Orbit> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain("map argument must lie in (0, 1]"));
    }
    let mut points = alloc::vec![x];
    let mut cur = x;
    for _ in 0..r {
        if !(cur > 0.0 && cur <= 1.0) {
            return Ok(Orbit {
                points,
                terminated: true,
            });
        }
        cur = match kind {
            MapKind::W => w_map(cur)?,
            MapKind::H => gauss_map(cur)?,
        };
        points.push(cur);
    }
    let terminated = !(cur > 0.0 && cur <= 1.0);
    Ok(Orbit { points, terminated })
}

/// Fixed point of `w_n`: `n/(n²+n−1)`.
pub fn fixed_point_w(n: u64) -> f64 {
    let nf = n as f64;
    nf / (nf * nf + nf - 1.0)
}

/// Fixed point of `w_n` as an exact fraction.
pub fn fixed_point_w_exact(n: u64) -> BigRational {
    let n = BigInt::from(n);
    BigRational::new(n.clone(), &n * &n + &n - 1)
}

/// Positive fixed point of `h_n`: `√(n²+4)/2 − n/2`.
pub fn fixed_point_h(n: u64) -> f64 {
    let nf = n as f64;
    2.0 / ((nf * nf + 4.0).sqrt() + nf)
}

/// Partial sum `Σ_{n=1}^{terms} n xⁿ/(n²+n−1)` of the fixed-point generating function.
pub fn fix_w_generating(x: f64, terms: usize) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(Error::Divergent("generating function needs |x| < 1"));
    }
    let mut sum = 0.0;
    let mut p = 1.0;
    for n in 1..=terms {
        p *= x;
        sum += fixed_point_w(n as u64) * p;
    }
    Ok(sum)
}

/// Partial-fraction weights `(A, B)` with `n/(n²+n−1) = A/(n+1−φ) + B/(n+φ)`.
pub fn fix_w_lerch_coefficients() -> (f64, f64) {
    let s5 = 5f64.sqrt();
    ((5.0 - s5) / 10.0, (5.0 + s5) / 10.0)
}

/// `A Φ(x, 1, 1−φ) + B Φ(x, 1, φ)` for caller-supplied weights.
pub fn fix_w_lerch_with(x: f64, a: f64, b: f64) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(Error::Divergent("generating function needs |x| < 1"));
    }
    let z = Complex64::new(x, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let p1 = lerch_phi(z, one, Complex64::new(1.0 - PHI, 0.0))?;
    let p2 = lerch_phi(z, one, Complex64::new(PHI, 0.0))?;
    Ok((p1 * a + p2 * b).re)
}

/// Closed form of the generating function through the Lerch transcendent.
pub fn fix_w_lerch(x: f64) -> Result<f64> {
    let (a, b) = fix_w_lerch_coefficients();
    fix_w_lerch_with(x, a, b)
}

/// Continued-fraction quotients of the exact binary value of `x`, at most `k` of them.
pub fn continued_fraction(x: f64, k: usize) -> Result<Vec<BigInt>> {
    let r = BigRational::from_float(x)
        .ok_or(Error::Domain("continued fraction of a non-finite value"))?;
    Ok(continued_fraction_rational(&r, k))
}

/// Continued-fraction quotients of an exact rational, at most `k` of them.
pub fn continued_fraction_rational(x: &BigRational, k: usize) -> Vec<BigInt> {
    let mut r = x.clone();
    let mut out = Vec::new();
    while out.len() < k {
        let a = r.floor();
        out.push(a.to_integer());
        let frac = &r - &a;
        if frac.is_zero() {
            break;
        }
        r = frac.recip();
    }
    out
}

/// Quotients shared by every number in `[lo, hi]`, at most `k` of them.
pub fn continued_fraction_enclosed(lo: &BigRational, hi: &BigRational, k: usize) -> Vec<BigInt> {
    let a = continued_fraction_rational(lo, k + 1);
    let b = continued_fraction_rational(hi, k + 1);
    // numbers sharing a prefix form an interval, so both endpoints fix it for everything between
    let shared = a.iter().zip(&b).take_while(|(x, y)| x == y).count();
    a.into_iter().take(shared.min(k)).collect()
}

/// The first `k` quotients of `−1/e`, from alternating-series enclosures.
pub fn neg_inv_e_continued_fraction(k: usize) -> Result<Vec<BigInt>> {
    let mut terms = 2 * k + 20;
    for _ in 0..8 {
        // S_m = Σ_{j≤m} (−1)^j/j! brackets 1/e between consecutive m
        let mut sum = BigRational::zero();
        let mut fact = BigInt::one();
        let mut prev = BigRational::zero();
        for j in 0..=terms {
            if j > 0 {
                fact *= BigInt::from(j);
            }
            prev = sum.clone();
            let t = BigRational::new(BigInt::one(), fact.clone());
            if j % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
        }
        let (lo, hi) = if prev < sum {
            (-sum, -prev)
        } else {
            (-prev, -sum)
        };
        let q = continued_fraction_enclosed(&lo, &hi, k);
        if q.len() >= k {
            return Ok(q);
        }
        terms *= 2;
    }
    Err(Error::PrecisionExhausted { step: k })
}

/// `w^r(x) = a − b·x` together with the branch index used for the last step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineOrbitState {
    pub a: BigInt,
    pub b: BigInt,
    pub r: usize,
    pub branch: Option<BigInt>,
}

fn step(state: &AffineOrbitState, k: BigInt) -> AffineOrbitState {
    let kk = &k * (&k + 1);
    AffineOrbitState {
        a: &kk * &state.a - &k,
        b: &kk * &state.b,
        r: state.r + 1,
        branch: Some(k),
    }
}

fn initial_state() -> AffineOrbitState {
    AffineOrbitState {
        a: BigInt::zero(),
        b: -BigInt::one(),
        r: 0,
        branch: None,
    }
}

/// Exact affine orbit of a rational point of `(0, 1]`.
pub fn affine_orbit(x: &BigRational, r: usize) -> Result<Vec<AffineOrbitState>> {
    let mut states = alloc::vec![initial_state()];
    for _ in 0..r {
        let s = states.last().cloned().unwrap_or_else(initial_state);
        let y = BigRational::from_integer(s.a.clone()) - BigRational::from_integer(s.b.clone()) * x;
        if !y.is_positive() || y > BigRational::one() {
            break;
        }
        let k = y.recip().floor().to_integer();
        states.push(step(&s, k));
    }
    Ok(states)
}

fn gamma_bounds(digits: usize) -> (BigRational, BigRational) {
    let frac: &str = &EULER_GAMMA_DIGITS[2..2 + digits];
    let num: BigInt = frac.parse().unwrap_or_default();
    let den = BigInt::from(10u32).pow(digits as u32);
    let lo = BigRational::new(num.clone(), den.clone());
    let hi = BigRational::new(num + 1, den);
    (lo, hi)
}

/// Exact states `(a_r, b_r)` with `w^r(γ) = a_r − b_r γ` for `r = 0..=n`.
///
/// Each branch decision uses `digits` decimals of γ as an enclosing interval and
/// fails rather than guess when the interval straddles a branch boundary.
pub fn gamma_orbit(n: usize, digits: usize) -> Result<Vec<AffineOrbitState>> {
    if !(40..=EULER_GAMMA_MAX_DIGITS).contains(&digits) {
        return Err(Error::Domain("gamma orbit needs between 40 and 120 digits"));
    }
    let (glo, ghi) = gamma_bounds(digits);
    orbit_in_interval(&glo, &ghi, n)
}

fn orbit_in_interval(
    glo: &BigRational,
    ghi: &BigRational,
    n: usize,
) -> Result<Vec<AffineOrbitState>> {
    let mut states = alloc::vec![initial_state()];
    for r in 0..n {
        let s = &states[r];
        let a = BigRational::from_integer(s.a.clone());
        let b = BigRational::from_integer(s.b.clone());
        let (y_lo, y_hi) = if s.b.is_positive() {
            (&a - &b * ghi, &a - &b * glo)
        } else {
            (&a - &b * glo, &a - &b * ghi)
        };
        if !y_lo.is_positive() {
            return Err(Error::PrecisionExhausted { step: r + 1 });
        }
        let k_lo = y_hi.recip().floor().to_integer();
        let k_hi = y_lo.recip().floor().to_integer();
        if k_lo != k_hi {
            return Err(Error::PrecisionExhausted { step: r + 1 });
        }
        let next = step(s, k_lo);
        states.push(next);
    }
    Ok(states)
}

/// Floating value of `a − b·x`.
pub fn affine_value(state: &AffineOrbitState, x: f64) -> f64 {
    let a = state.a.to_f64().unwrap_or(f64::NAN);
    let b = state.b.to_f64().unwrap_or(f64::NAN);
    a - b * x
}
