//! The fractal string whose lengths are the areas `1/(2n(n+1))` under the branches of `w`.

use alloc::vec::Vec;
use core::f64::consts::SQRT_2;
#[allow(unused_imports)]
use num_traits::Float;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::{binomial, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cmath::{c, ln1p};
use crate::error::{Error, Result};
use crate::specfun::riemann_zeta;

/// Minkowski dimension of the string.
pub const DIMENSION: f64 = 0.5;
/// Limiting constant `C` with `N(x) ~ C x^D`.
pub const COUNTING_CONSTANT: f64 = SQRT_2 / 2.0;
/// Minkowski content `C 2^{1−D}/(1−D)`.
pub const MINKOWSKI_CONTENT: f64 = 2.0;
/// Residue of the geometric zeta function at `s = D`.
pub const RESIDUE_AT_DIMENSION: f64 = SQRT_2 / 4.0;

/// Lengths `ℓ_n = 1/(2n(n+1))`, produced on demand.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FractalString;

impl FractalString {
    pub fn length_at(&self, n: u64) -> f64 {
        let nf = n as f64;
        0.5 / (nf * (nf + 1.0))
    }

    pub fn lengths(&self) -> impl Iterator<Item = f64> {
        (1u64..).map(|n| FractalString.length_at(n))
    }
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn two_n_np1(n: u64) -> BigInt {
    BigInt::from(n) * BigInt::from(n + 1) * 2u32
}

pub fn string_length(n: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain("index starts at 1"));
    }
    Ok(BigRational::new(BigInt::one(), two_n_np1(n)))
}

/// `((4n+1)/(4n(n+1)), (4n+3)/(4n(n+1)))`, centred in `(1/(n+1), 1/n)`.
pub fn string_interval(n: u64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::Domain("index starts at 1"));
    }
    let nf = n as f64;
    let d = 4.0 * nf * (nf + 1.0);
    Ok(((4.0 * nf + 1.0) / d, (4.0 * nf + 3.0) / d))
}

pub fn total_length() -> BigRational {
    rat(1, 2)
}

/// `Σ_{n≤N} ℓ_n = 1/2 − 1/(2(N+1))`.
pub fn partial_length(n: u64) -> BigRational {
    total_length() - BigRational::new(BigInt::one(), BigInt::from(2 * (n + 1)))
}

/// `Σ_{n≥m} ℓ_n = 1/(2m)`.
pub fn tail_length(m: u64) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::Domain("index starts at 1"));
    }
    Ok(BigRational::new(BigInt::one(), BigInt::from(2 * m)))
}

/// `N(x) = ⌊√(2x+1)/2 − 1/2⌋ = #{n ≥ 1 : 2n(n+1) ≤ x}`.
pub fn geometric_counting(x: f64) -> Result<u64> {
    if !(x >= 0.0) {
        return Err(Error::Domain("counting function needs x ≥ 0"));
    }
    if !x.is_finite() {
        return Err(Error::Domain("counting function needs finite x"));
    }
    let mut k = ((2.0 * x + 1.0).sqrt() * 0.5 - 0.5).floor().max(0.0) as u64;
    let f = |k: u64| 2.0 * k as f64 * (k as f64 + 1.0);
    while k > 0 && f(k) > x {
        k -= 1;
    }
    while f(k + 1) <= x {
        k += 1;
    }
    Ok(k)
}

/// `#{n ≥ 1 : 2n(n+1) ≤ x}` for an exact rational `x ≥ 0`.
pub fn geometric_counting_exact(x: &BigRational) -> Result<u64> {
    if x.is_negative() {
        return Err(Error::Domain("counting function needs x ≥ 0"));
    }
    let fl = x.floor().to_integer();
    let mut k = x
        .to_f64()
        .map(|v| geometric_counting(v).unwrap_or(0))
        .unwrap_or(0);
    while k > 0 && two_n_np1(k) > fl {
        k -= 1;
    }
    while two_n_np1(k + 1) <= fl {
        k += 1;
    }
    Ok(k)
}

/// Number of triples `(a, b, b+1)` with `a² + b² = (b+1)²` and `b+1 ≤ x`, by exhaustive search over `b`.
pub fn pythagorean_count(x: u64) -> u64 {
    let mut count = 0;
    for b in 1..x {
        let a2 = 2 * b + 1;
        let a = a2.sqrt();
        if a * a == a2 {
            count += 1;
        }
    }
    count
}

/// Smallest `j` with `ℓ_j < 2ε` for an exact rational `ε > 0`.
pub fn v_of_epsilon_exact(eps: &BigRational) -> Result<u64> {
    if !eps.is_positive() {
        return Err(Error::Domain("radius must be positive"));
    }
    // ℓ_j < 2ε ⇔ 4p j(j+1) > q
    let p = eps.numer();
    let q = eps.denom();
    let holds = |j: u64| -> bool { p * BigInt::from(j) * BigInt::from(j + 1) * 4u32 > *q };
    let guess = eps.to_f64().map(v_formula).unwrap_or(1).max(1);
    let mut j = guess;
    while j > 1 && holds(j - 1) {
        j -= 1;
    }
    while !holds(j) {
        j += 1;
    }
    Ok(j)
}

fn v_formula(eps: f64) -> u64 {
    let v = ((eps + (eps * eps + eps).sqrt()) / (2.0 * eps)).floor();
    if v.is_finite() && v >= 1.0 {
        v.min(u64::MAX as f64) as u64
    } else {
        1
    }
}

/// `v(ε) = ⌊(ε + √(ε² + ε))/(2ε)⌋`, corrected at exact boundaries.
pub fn v_of_epsilon(eps: f64) -> Result<u64> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::Domain("radius must be positive and finite"));
    }
    let exact = BigRational::from_float(eps).ok_or(Error::Domain("radius not representable"))?;
    v_of_epsilon_exact(&exact)
}

/// Inner tube of the string boundary at radius ε.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeReport {
    pub epsilon: f64,
    pub v: u64,
    pub volume: f64,
    pub scaled: f64,
}

/// `V(ε) = (4εv² − 4εv + 1)/(2v)` as an exact rational.
pub fn tube_volume_exact(eps: &BigRational) -> Result<BigRational> {
    let v = BigRational::from_integer(BigInt::from(v_of_epsilon_exact(eps)?));
    let four_eps = eps * BigRational::from_integer(4.into());
    Ok((&four_eps * &v * &v - &four_eps * &v + BigRational::one())
        / (v * BigRational::from_integer(2.into())))
}

/// `2ε N(1/(2ε)) + 1/(2v)`, the same volume through the counting function.
pub fn tube_volume_counting_form(eps: &BigRational) -> Result<BigRational> {
    let v = v_of_epsilon_exact(eps)?;
    let two_eps = eps * BigRational::from_integer(2.into());
    let count = geometric_counting_exact(&two_eps.recip())?;
    Ok(two_eps * BigRational::from_integer(count.into())
        + BigRational::new(BigInt::one(), BigInt::from(2 * v)))
}

pub fn tube_volume(eps: f64) -> Result<TubeReport> {
    let v = v_of_epsilon(eps)?;
    let vf = v as f64;
    let volume = (4.0 * eps * vf * (vf - 1.0) + 1.0) / (2.0 * vf);
    Ok(TubeReport {
        epsilon: eps,
        v,
        volume,
        scaled: volume / eps.sqrt(),
    })
}

/// `V(ε)/√ε`, tending to the Minkowski content 2.
pub fn minkowski_content_estimate(eps: f64) -> Result<f64> {
    Ok(tube_volume(eps)?.scaled)
}

/// A truncated Dirichlet series with its tail estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub tail: Complex64,
    pub tail_bound: f64,
}

const TAIL_TERMS: usize = 40;

/// `∫_{T+1/2}^∞ (2t(t+1))^{−s} dt` expanded in powers of `(T+1)^{−2}`.
fn geometric_tail(s: Complex64, t: u64) -> Complex64 {
    let x = (t + 1) as f64;
    let inv = 1.0 / (4.0 * x * x);
    let mut coeff = c(1.0);
    let mut sum = c(0.0);
    let lead = c(x).powc(c(1.0) - s * 2.0);
    let mut xp = c(1.0);
    for j in 0..TAIL_TERMS {
        let term = coeff * xp / (s * 2.0 + (2 * j) as f64 - 1.0);
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
        coeff = coeff * (s + j as f64) / (j + 1) as f64;
        xp *= inv;
    }
    c(2.0).powc(-s) * lead * sum
}

/// `ζ_𝓛(s) = Σ (2n(n+1))^{−s}`, summed to `terms` with an integral tail.
pub fn geometric_zeta(s: Complex64, terms: u64) -> Result<SeriesValue> {
    if s.re <= 0.5 {
        return Err(Error::Divergent("geometric zeta needs Re s > 1/2"));
    }
    if terms == 0 {
        return Err(Error::Domain("need at least one term"));
    }
    if s == c(1.0) {
        return Ok(SeriesValue {
            value: c(0.5),
            tail: c(0.0),
            tail_bound: 0.0,
        });
    }
    let mut sum = c(0.0);
    for n in (1..=terms).rev() {
        let nf = n as f64;
        sum += c(2.0 * nf * (nf + 1.0)).powc(-s);
    }
    // midpoint rule with its first derivative correction
    let m = terms as f64 + 0.5;
    let u = c(2.0 * m * (m + 1.0));
    let slope = -s * u.powc(-s - 1.0) * (4.0 * m + 2.0);
    let tail = geometric_tail(s, terms) + slope / 24.0;
    let s2 = s * 2.0;
    let tail_bound = 7.0 / 5760.0
        * (s2 * (s2 + 1.0) * (s2 + 2.0)).norm()
        * 2f64.powf(-s.re)
        * m.powf(-2.0 * s.re - 3.0);
    Ok(SeriesValue {
        value: sum + tail,
        tail,
        tail_bound,
    })
}

/// `(s − 1/2) ζ_𝓛(s)` at `s = 1/2 + δ`.
pub fn geometric_zeta_residue_estimate(delta: f64, terms: u64) -> Result<f64> {
    Ok(geometric_zeta(c(0.5 + delta), terms)?.value.re * delta)
}

/// A rational number plus a rational combination of `ζ(k)` values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaCombination {
    pub rational: BigRational,
    /// Pairs `(coefficient, k)` standing for `coefficient · ζ(k)`.
    pub terms: Vec<(BigRational, u32)>,
}

impl ZetaCombination {
    pub fn value(&self) -> Result<f64> {
        let mut v = self.rational.to_f64().unwrap_or(f64::NAN);
        for (coef, k) in &self.terms {
            v += coef.to_f64().unwrap_or(f64::NAN) * riemann_zeta(c(*k as f64))?.re;
        }
        Ok(v)
    }
}

/// `ζ_𝓛(n)` for integer `n ≥ 1` as an exact combination of even zeta values.
///
/// Partial fractions of `(n(n+1))^{−n}` give the rational part
/// `(−1)^{n+1} C(2n−1, n)/2^n` and the coefficient `2(−1)^{n} C(2n−2i−1, n−1)/2^n` of `ζ(2i)`.
pub fn geometric_zeta_integer(n: u32) -> Result<ZetaCombination> {
    if n == 0 {
        return Err(Error::Domain("argument starts at 1"));
    }
    let pow2 = BigInt::one() << n;
    let sign = |e: u32| {
        if e.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let nb = BigInt::from(n);
    let rational = BigRational::new(
        sign(n + 1) * binomial(BigInt::from(2 * n - 1), nb.clone()),
        pow2.clone(),
    );
    let mut terms = Vec::new();
    for i in 1..=n / 2 {
        let j = 2 * i;
        let a = sign(n - j) * binomial(BigInt::from(2 * n - j - 1), BigInt::from(n - 1));
        terms.push((BigRational::new(a * 2u32, pow2.clone()), j));
    }
    Ok(ZetaCombination { rational, terms })
}

/// The index window and terms of the printed binomial-sum form, evaluated literally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialSumReading {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
    /// Integer window `a_n ..= b_n`, `None` if either end is fractional.
    pub window: Option<(i64, i64)>,
    pub rational: BigRational,
    /// Pairs `(coefficient, argument)` standing for `coefficient · ζ(argument)`.
    pub terms: Vec<(BigRational, BigRational)>,
}

/// `x(x−1)…(x−k+1)/k!` for rational `x`.
pub fn generalized_binomial(x: &BigRational, k: u32) -> BigRational {
    let mut num = BigRational::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= x - BigRational::from_integer(BigInt::from(i));
        den *= BigInt::from(i + 1);
    }
    num / BigRational::from_integer(den)
}

/// `(−1)^n C(2n−1, n−1)/2^n + Σ_{m=a_n}^{b_n} 2(−1)^n C(2m + c_n − d_n + 1/2, n−1) ζ(d_n + 2n − 3/2 − 2m − c_n)/2^n`.
pub fn geometric_zeta_binomial_sum(n: u32) -> Result<BinomialSumReading> {
    if n == 0 {
        return Err(Error::Domain("argument starts at 1"));
    }
    let ni = n as i64;
    let sgn = if n.is_multiple_of(2) { 1 } else { -1 };
    let nr = BigRational::from_integer(ni.into());
    let a = rat((ni - 1) * (1 + sgn), 2);
    let b = rat(-sgn * (ni - 1), 2) + &nr - rat(7, 4) + rat(sgn, 4);
    let cc = BigRational::from_integer((sgn * (ni - 1)).into());
    let d = rat(sgn, 2);
    let pow2 = BigRational::from_integer(BigInt::one() << n);
    let sign = BigRational::from_integer(sgn.into());
    let rational = &sign
        * BigRational::from_integer(binomial(BigInt::from(2 * n - 1), BigInt::from(n - 1)))
        / &pow2;
    let window = match (a.is_integer(), b.is_integer()) {
        (true, true) => Some((
            a.to_integer().to_i64().unwrap_or(0),
            b.to_integer().to_i64().unwrap_or(-1),
        )),
        _ => None,
    };
    let mut terms = Vec::new();
    if let Some((lo, hi)) = window {
        for m in lo..=hi {
            let mr = BigRational::from_integer(m.into());
            let top = &mr * BigRational::from_integer(2.into()) + &cc - &d + rat(1, 2);
            let coef =
                BigRational::from_integer(2.into()) * &sign * generalized_binomial(&top, n - 1)
                    / &pow2;
            let arg = &d + BigRational::from_integer((2 * ni).into())
                - rat(3, 2)
                - mr * BigRational::from_integer(2.into())
                - &cc;
            if !coef.is_zero() {
                terms.push((coef, arg));
            }
        }
    }
    Ok(BinomialSumReading {
        a,
        b,
        c: cc,
        d,
        window,
        rational,
        terms,
    })
}

/// `Σ_j ⌊x ℓ_j⌋`, continued until the summand vanishes.
pub fn spectral_counting(x: f64, terms: u64) -> Result<u64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain("counting function needs finite x ≥ 0"));
    }
    let integral = x.fract() == 0.0 && x < 9.0e15;
    let mut total = 0u64;
    let mut j = 1u64;
    loop {
        let d = 2 * j * (j + 1);
        let f = if integral {
            x as u64 / d
        } else {
            (x / d as f64).floor() as u64
        };
        if f == 0 && j > terms.max(1) {
            break;
        }
        if f == 0 {
            j += 1;
            continue;
        }
        total += f;
        j += 1;
    }
    Ok(total)
}

/// `ζ(s) ζ_𝓛(s)`.
pub fn spectral_zeta(s: Complex64, terms: u64) -> Result<Complex64> {
    if s.re <= 1.0 {
        return Err(Error::Domain("spectral zeta needs Re s > 1"));
    }
    Ok(riemann_zeta(s)? * geometric_zeta(s, terms)?.value)
}

/// `Π_{j≤terms} 1/(1 − ℓ_j^s)`.
pub fn partition_function(s: Complex64, terms: u64) -> Result<Complex64> {
    if s.re <= 0.0 {
        return Err(Error::Domain("partition function needs Re s > 0"));
    }
    let mut log = c(0.0);
    for j in (1..=terms).rev() {
        let p = c(FractalString.length_at(j)).powc(s);
        if p.norm() >= 1.0 {
            return Err(Error::Divergent("factor with |ℓ^s| ≥ 1"));
        }
        log -= ln1p(-p);
    }
    Ok(log.exp())
}

/// `−(d/ds) ln ζ_𝓛(s)` by a central difference with step `h`.
pub fn dynamical_zeta(s: f64, terms: u64, h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::Domain("step must be positive"));
    }
    let hi = geometric_zeta(c(s + h), terms)?.value.re.ln();
    let lo = geometric_zeta(c(s - h), terms)?.value.re.ln();
    Ok(-(hi - lo) / (2.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::w_component;
    use crate::quadrature::integrate;
    use crate::specfun::gamma_fn;
    use core::f64::consts::PI;

    #[test]
    fn lengths() {
        assert_eq!(string_length(1).unwrap(), rat(1, 4));
        assert_eq!(string_length(2).unwrap(), rat(1, 12));
        let q = integrate(|x| c(w_component(3, x)), 0.25, 1.0 / 3.0, 1e-16, 1e-14).unwrap();
        assert!((q.value.re - 1.0 / 24.0).abs() < 1e-12);
        let ls: Vec<f64> = FractalString.lengths().take(50).collect();
        assert!(ls.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(total_length(), rat(1, 2));
        assert_eq!(partial_length(3), rat(3, 8));
        let mut s = BigRational::zero();
        for n in 1..=3 {
            s += string_length(n).unwrap();
        }
        assert_eq!(s, partial_length(3));
        assert_eq!(tail_length(4).unwrap(), rat(1, 8));
    }

    #[test]
    fn intervals() {
        assert_eq!(string_interval(1).unwrap(), (0.625, 0.875));
        for n in 1..40u64 {
            let (lo, hi) = string_interval(n).unwrap();
            let nf = n as f64;
            assert!((hi - lo - FractalString.length_at(n)).abs() < 1e-15);
            assert!(((lo + hi) / 2.0 - 0.5 * (1.0 / nf + 1.0 / (nf + 1.0))).abs() < 1e-15);
        }
        let (lo, hi) = string_interval(2).unwrap();
        assert!(((lo + hi) / 2.0 - 5.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn counting() {
        assert_eq!(geometric_counting(12.0).unwrap(), 2);
        assert_eq!(geometric_counting(3.0).unwrap(), 0);
        assert_eq!(geometric_counting(4.0).unwrap(), 1);
        assert_eq!(geometric_counting(3.999).unwrap(), 0);
        for x in 0..=2000u64 {
            let brute = (1..=x).take_while(|n| 2 * n * (n + 1) <= x).count() as u64;
            assert_eq!(geometric_counting(x as f64).unwrap(), brute);
        }
        assert!(geometric_counting(-1.0).is_err());
    }

    #[test]
    fn pythagorean() {
        assert_eq!(pythagorean_count(5), 1);
        assert_eq!(pythagorean_count(13), 2);
        assert_eq!(pythagorean_count(24), 2);
        assert_eq!(pythagorean_count(25), 3);
        // off by one exactly at x = 2n(n+1)
        for x in 1..=3000u64 {
            let on_boundary = (1..=x).any(|n| 2 * n * (n + 1) == x);
            let same = pythagorean_count(x) == geometric_counting(x as f64).unwrap();
            assert_eq!(same, !on_boundary, "x={x}");
            assert_eq!(
                pythagorean_count(x),
                geometric_counting((x - 1) as f64).unwrap()
            );
        }
    }

    fn v_scan(eps: f64) -> u64 {
        (1u64..)
            .find(|&j| FractalString.length_at(j) < 2.0 * eps)
            .unwrap()
    }

    #[test]
    fn v_values() {
        assert_eq!(v_of_epsilon(0.125).unwrap(), 2);
        assert_eq!(v_of_epsilon(0.25).unwrap(), 1);
        assert_eq!(v_of_epsilon(0.01).unwrap(), 5);
        assert_eq!(v_scan(0.01), 5);
        assert!(v_of_epsilon(0.0).is_err());
        assert!(v_of_epsilon(-1.0).is_err());
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for _ in 0..1000 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let u = (state >> 11) as f64 / (1u64 << 53) as f64;
            let eps = (1e-8f64.ln() + u * (0.25f64.ln() - 1e-8f64.ln())).exp();
            assert_eq!(v_of_epsilon(eps).unwrap(), v_scan(eps), "eps={eps}");
            assert_eq!(
                v_of_epsilon(eps).unwrap(),
                v_formula(eps).max(1).max(v_scan(eps))
            );
        }
    }

    #[test]
    fn tube() {
        let t = tube_volume(0.125).unwrap();
        assert_eq!(t.v, 2);
        assert_eq!(t.volume, 0.5);
        assert!((t.scaled - SQRT_2).abs() < 1e-15);
        assert_eq!(tube_volume_exact(&rat(1, 8)).unwrap(), rat(1, 2));
        assert_eq!(tube_volume(10.0).unwrap().volume, 0.5);
        assert!(tube_volume(1e-12).unwrap().volume < 1e-5);
        let mut prev = 0.0;
        for k in 1..400 {
            let eps = k as f64 / 1600.0;
            let t = tube_volume(eps).unwrap();
            assert!(t.volume >= prev && t.volume <= 0.5);
            prev = t.volume;
            let e = BigRational::from_float(eps).unwrap();
            let exact = tube_volume_exact(&e).unwrap();
            assert_eq!(exact, tube_volume_counting_form(&e).unwrap());
            assert!((exact.to_f64().unwrap() - t.volume).abs() <= 2.0 * f64::EPSILON);
        }
        for k in 4..12 {
            let eps = 10f64.powi(-k);
            let est = minkowski_content_estimate(eps).unwrap();
            assert!(est <= 2.01);
        }
        assert!((minkowski_content_estimate(1e-6).unwrap() - 2.0).abs() < 0.02);
        let formula = COUNTING_CONSTANT * 2f64.powf(1.0 - DIMENSION) / (1.0 - DIMENSION);
        assert!((formula - MINKOWSKI_CONTENT).abs() < 1e-15);
    }

    #[test]
    fn geometric_zeta_values() {
        assert_eq!(geometric_zeta(c(1.0), 10).unwrap().value, c(0.5));
        let v = geometric_zeta(c(2.0), 10_000).unwrap();
        assert!((v.value.re - (PI * PI / 12.0 - 0.75)).abs() < 1e-10);
        assert!(v.tail_bound < 1e-12);
        // near-pole convergence: the tail makes small truncations agree with large ones
        let a = geometric_zeta(c(0.7), 100).unwrap().value;
        let b = geometric_zeta(c(0.7), 100_000).unwrap().value;
        assert!((a - b).norm() < 1e-6);
        let d = geometric_zeta(Complex64::new(1.5, 2.0), 50).unwrap().value;
        let e = geometric_zeta(Complex64::new(1.5, 2.0), 20_000)
            .unwrap()
            .value;
        assert!((d - e).norm() < 1e-9);
        assert!(matches!(
            geometric_zeta(c(0.5), 10),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn residue_at_dimension() {
        let r = geometric_zeta_residue_estimate(1e-6, 1000).unwrap();
        assert!((r - RESIDUE_AT_DIMENSION).abs() < 1e-5);
        // counting-function route: Res = D·C
        assert!((DIMENSION * COUNTING_CONSTANT - RESIDUE_AT_DIMENSION).abs() < 1e-16);
    }

    #[test]
    fn integer_values() {
        let g2 = geometric_zeta_integer(2).unwrap();
        assert_eq!(g2.rational, rat(-3, 4));
        assert_eq!(g2.terms, [(rat(1, 2), 2)]);
        let g4 = geometric_zeta_integer(4).unwrap();
        assert_eq!(g4.rational, rat(-35, 16));
        assert_eq!(g4.terms, [(rat(5, 4), 2), (rat(1, 8), 4)]);
        assert_eq!(geometric_zeta_integer(3).unwrap().rational, rat(5, 4));
        let g10 = geometric_zeta_integer(10).unwrap();
        assert_eq!(g10.terms.last().unwrap(), &(rat(1, 512), 10));
        assert_eq!(geometric_zeta_integer(1).unwrap().rational, rat(1, 2));
        for n in 1..=10u32 {
            let exact = geometric_zeta_integer(n).unwrap().value().unwrap();
            let series = geometric_zeta(c(n as f64), 100_000).unwrap().value.re;
            assert!((exact - series).abs() < 1e-8, "n={n}");
        }
    }

    #[test]
    fn integer_values_by_brute_force() {
        // exact ζ(2k) = (−1)^{k+1} B_2k (2π)^{2k}/(2(2k)!) reduces everything to powers of π²
        for n in 2..=6u32 {
            let g = geometric_zeta_integer(n).unwrap();
            let mut sum = 0.0;
            for k in (1..=200_000u64).rev() {
                sum += (2.0 * k as f64 * (k as f64 + 1.0)).powi(-(n as i32));
            }
            assert!((g.value().unwrap() - sum).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn binomial_sum_reading() {
        let r2 = geometric_zeta_binomial_sum(2).unwrap();
        assert_eq!(r2.window, Some((1, 0)));
        assert!(r2.terms.is_empty());
        assert_eq!(r2.rational, rat(3, 4));
        let r3 = geometric_zeta_binomial_sum(3).unwrap();
        assert_eq!(r3.window, Some((0, 2)));
        assert_eq!(r3.terms.len(), 2);
        assert_eq!(
            r3.terms[0],
            (rat(-1, 4), BigRational::from_integer(6.into()))
        );
        assert_eq!(
            r3.terms[1],
            (rat(-3, 4), BigRational::from_integer(2.into()))
        );
        assert_eq!(generalized_binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(generalized_binomial(&rat(5, 1), 2), rat(10, 1));
    }

    #[test]
    fn spectral() {
        assert_eq!(spectral_counting(4.0, 1).unwrap(), 1);
        assert_eq!(spectral_counting(12.0, 1).unwrap(), 4);
        assert_eq!(spectral_counting(3.9, 10).unwrap(), 0);
        for x in [5.5, 100.0, 1234.0] {
            let brute: u64 = (1..10_000u64)
                .map(|j| (x / (2.0 * j as f64 * (j as f64 + 1.0))).floor() as u64)
                .sum();
            assert_eq!(spectral_counting(x, 1).unwrap(), brute);
        }
        let z2 = PI * PI / 6.0;
        let v = spectral_zeta(c(2.0), 10_000).unwrap();
        assert!((v.re - z2 * (z2 / 2.0 - 0.75)).abs() < 1e-8);
        let mut dbl = 0.0;
        for k in 1..=2000u64 {
            for j in 1..=200u64 {
                dbl += (k as f64).powi(-3) * FractalString.length_at(j).powi(3);
            }
        }
        assert!((spectral_zeta(c(3.0), 10_000).unwrap().re - dbl).abs() < 1e-6);
        let z4 = PI.powi(4) / 90.0;
        let g4 = geometric_zeta_integer(4).unwrap().value().unwrap();
        assert!((spectral_zeta(c(4.0), 10_000).unwrap().re - z4 * g4).abs() < 1e-8);
        assert!(spectral_zeta(c(1.0), 10).is_err());
    }

    #[test]
    fn partition() {
        let p = partition_function(c(10.0), 100).unwrap();
        assert!((p.re - (1.0 + 2f64.powi(-20))).abs() < 1e-9);
        let mut direct = 1.0;
        for j in 1..=1000u64 {
            direct /= 1.0 - FractalString.length_at(j);
        }
        assert!((partition_function(c(1.0), 1000).unwrap().re - direct).abs() < 1e-10);
        // infinite product Γ((3−√3)/2) Γ((3+√3)/2)
        let r = 3f64.sqrt();
        let inf =
            (gamma_fn(c((3.0 - r) / 2.0)).unwrap() * gamma_fn(c((3.0 + r) / 2.0)).unwrap()).re;
        let p = partition_function(c(1.0), 100_000).unwrap().re;
        assert!((p - inf).abs() < 1e-4 && p < inf);
        let a = partition_function(c(2.0), 20_000).unwrap();
        let b = partition_function(c(2.0), 40_000).unwrap();
        assert!((a - b).norm() < 1e-12);
        assert!(partition_function(c(0.0), 10).is_err());
    }

    #[test]
    fn dynamical() {
        for s in [2.0, 3.0] {
            let (mut num, mut den) = (0.0, 0.0);
            for j in (1..=20_000u64).rev() {
                let l = FractalString.length_at(j);
                num += l.powf(s) * (1.0 / l).ln();
                den += l.powf(s);
            }
            let v = dynamical_zeta(s, 20_000, 1e-5).unwrap();
            assert!((v - num / den).abs() < 1e-6, "s={s}");
        }
        // second-order stencil
        let exact = {
            let (mut num, mut den) = (0.0, 0.0);
            for j in (1..=20_000u64).rev() {
                let l = FractalString.length_at(j);
                num += l.powf(2.0) * (1.0 / l).ln();
                den += l.powf(2.0);
            }
            num / den
        };
        let e1 = (dynamical_zeta(2.0, 20_000, 0.02).unwrap() - exact).abs();
        let e2 = (dynamical_zeta(2.0, 20_000, 0.01).unwrap() - exact).abs();
        assert!((e1 / e2 - 4.0).abs() < 0.2);
    }
}
