//! Published values the verification suites compare against.

/// Large Schröder numbers `S_0..S_14`.
pub const SCHRODER: [u64; 15] = [
    1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446, 27297738, 142078746,
];

/// `(−a_n, −b_n)` for the orbit `w^n(γ) = a_n − b_n γ`, `n = 0..10`.
pub const GAMMA_ORBIT: [(u64, u64); 11] = [
    (0, 1),
    (1, 2),
    (48, 84),
    (290, 504),
    (581, 1008),
    (1163, 2016),
    (2327, 4032),
    (13964, 24192),
    (7492468716, 12980362752),
    (14984937433, 25960725504),
    (1078915495184, 1869172236288),
];

/// Leading continued-fraction quotients of `−1/e`.
pub const NEG_INV_E_QUOTIENTS: [i64; 32] = [
    -1, 1, 1, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1, 1, 10, 1, 1, 12, 1, 1, 14, 1, 1, 16, 1, 1, 18, 1,
    1, 20,
];

/// Real root of `W_ln`, to 20 digits.
pub const W_LN_ROOT: f64 = 0.274_410_631_902_848_1;

/// One published row of `ζ_𝓛(n)`: a rational part and coefficients of `ζ(2), ζ(4), …`.
#[derive(Debug, Clone, Copy)]
pub struct PublishedRow {
    pub n: u32,
    pub rational: (i64, i64),
    pub zeta_coefficients: &'static [(i64, i64)],
}

/// The integer values of the geometric zeta function as printed, `n = 1..10`.
pub const GEOMETRIC_ZETA_ROWS: [PublishedRow; 10] = [
    PublishedRow {
        n: 1,
        rational: (1, 2),
        zeta_coefficients: &[],
    },
    PublishedRow {
        n: 2,
        rational: (-3, 4),
        zeta_coefficients: &[(1, 2)],
    },
    PublishedRow {
        n: 3,
        rational: (5, 3),
        zeta_coefficients: &[(-3, 4)],
    },
    PublishedRow {
        n: 4,
        rational: (-35, 16),
        zeta_coefficients: &[(5, 4), (1, 8)],
    },
    PublishedRow {
        n: 5,
        rational: (63, 16),
        zeta_coefficients: &[(-35, 16), (-5, 16)],
    },
    PublishedRow {
        n: 6,
        rational: (-231, 32),
        zeta_coefficients: &[(63, 16), (21, 32), (1, 32)],
    },
    PublishedRow {
        n: 7,
        rational: (429, 32),
        zeta_coefficients: &[(-231, 32), (-21, 16), (-7, 64)],
    },
    PublishedRow {
        n: 8,
        rational: (-6435, 256),
        zeta_coefficients: &[(429, 32), (165, 64), (9, 32), (1, 128)],
    },
    PublishedRow {
        n: 9,
        rational: (12155, 256),
        zeta_coefficients: &[(-6435, 256), (-1287, 256), (-165, 256), (-9, 256)],
    },
    PublishedRow {
        n: 10,
        rational: (-46189, 512),
        zeta_coefficients: &[(12155, 256), (5005, 512), (715, 512), (55, 512), (1, 512)],
    },
];
