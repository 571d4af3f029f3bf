//! Complex special functions used by the rest of the crate.

mod bernoulli;
mod gamma;
mod lambert;
mod lerch;
mod zeta;

pub use bernoulli::bernoulli_numbers;
pub use gamma::{gamma_fn, ln_gamma};
pub use lambert::{lambert_w, w_ln, w_ln_real_root};
pub use lerch::lerch_phi;
pub use zeta::{digamma, hurwitz_zeta, polygamma, riemann_zeta, riemann_zeta_derivative};

/// `B_{2k}/(2k)!` for k = 1..=30.
pub(crate) const BERNOULLI_OVER_FACTORIAL: [f64; 30] = [
    8.333_333_333_333_333e-2,
    -1.388_888_888_888_889e-3,
    3.306_878_306_878_307e-5,
    -8.267_195_767_195_768e-7,
    2.087_675_698_786_81e-8,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_582_7e-13,
    8.586_062_056_277_845e-15,
    -2.174_868_698_558_062e-16,
    5.509_002_828_360_229_5e-18,
    -1.395_446_468_581_252_2e-19,
    3.534_707_039_629_467e-21,
    -8.953_517_427_037_546e-23,
    2.267_952_452_337_683e-24,
    -5.744_790_668_872_202e-26,
    1.455_172_475_614_865e-27,
    -3.685_994_940_665_310_3e-29,
    9.336_734_257_095_045e-31,
    -2.365_022_415_700_63e-32,
    5.990_671_762_482_134e-34,
    -1.517_454_884_468_290_3e-35,
    3.843_758_125_454_189e-37,
    -9.736_353_072_646_691e-39,
    2.466_247_044_200_681e-40,
    -6.247_076_741_820_743e-42,
    1.582_403_024_464_491_4e-43,
    -4.008_273_685_948_936e-45,
    1.015_307_585_556_955_7e-46,
    -2.571_804_158_241_871_7e-48,
];
