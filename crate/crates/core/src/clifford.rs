//! Gamma matrices in the chiral representation
//!
//! ```text
//! γ⁰ = [[0, I], [I, 0]]   γⁱ = [[0, −σᵢ], [σᵢ, 0]]   γ⁵ = [[I, 0], [0, −I]]
//! ```
//!
//! together with the Pauli matrices, the Minkowski metric `diag(1,−1,−1,−1)`,
//! the Levi-Civita symbol with `ε^{0123} = +1` and the bispinor Lorentz
//! generators `S^{μν} = (i/4)[γ^μ, γ^ν]`.

use crate::error::{Result, SpinError};
use crate::linalg::{anticommutator, commutator, dist, Complex, Mat2, Mat4, Real3, Vec3Of, I, ONE, ZERO};
use crate::report::{CheckRecord, CheckReport};

/// A spacetime index `μ ∈ {0, 1, 2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LorentzIndex(u8);

impl LorentzIndex {
    pub const T: Self = Self(0);
    pub const X: Self = Self(1);
    pub const Y: Self = Self(2);
    pub const Z: Self = Self(3);
    pub const ALL: [Self; 4] = [Self::T, Self::X, Self::Y, Self::Z];

    pub fn new(value: usize) -> Result<Self> {
        if value < 4 {
            Ok(Self(value as u8))
        } else {
            Err(SpinError::IndexOutOfRange(value))
        }
    }

    pub fn value(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<usize> for LorentzIndex {
    type Error = SpinError;
    fn try_from(value: usize) -> Result<Self> {
        Self::new(value)
    }
}

const NEG_ONE: Complex = Complex::new(-1.0, 0.0);
const NEG_I: Complex = Complex::new(0.0, -1.0);

pub const SIGMA0: Mat2 = Mat2::from_rows([[ONE, ZERO], [ZERO, ONE]]);
pub const SIGMA1: Mat2 = Mat2::from_rows([[ZERO, ONE], [ONE, ZERO]]);
pub const SIGMA2: Mat2 = Mat2::from_rows([[ZERO, NEG_I], [I, ZERO]]);
pub const SIGMA3: Mat2 = Mat2::from_rows([[ONE, ZERO], [ZERO, NEG_ONE]]);

pub const GAMMA0: Mat4 = Mat4::from_rows([
    [ZERO, ZERO, ONE, ZERO],
    [ZERO, ZERO, ZERO, ONE],
    [ONE, ZERO, ZERO, ZERO],
    [ZERO, ONE, ZERO, ZERO],
]);
pub const GAMMA1: Mat4 = Mat4::from_rows([
    [ZERO, ZERO, ZERO, NEG_ONE],
    [ZERO, ZERO, NEG_ONE, ZERO],
    [ZERO, ONE, ZERO, ZERO],
    [ONE, ZERO, ZERO, ZERO],
]);
pub const GAMMA2: Mat4 = Mat4::from_rows([
    [ZERO, ZERO, ZERO, I],
    [ZERO, ZERO, NEG_I, ZERO],
    [ZERO, NEG_I, ZERO, ZERO],
    [I, ZERO, ZERO, ZERO],
]);
pub const GAMMA3: Mat4 = Mat4::from_rows([
    [ZERO, ZERO, NEG_ONE, ZERO],
    [ZERO, ZERO, ZERO, ONE],
    [ONE, ZERO, ZERO, ZERO],
    [ZERO, NEG_ONE, ZERO, ZERO],
]);
pub const GAMMA5: Mat4 = Mat4::from_rows([
    [ONE, ZERO, ZERO, ZERO],
    [ZERO, ONE, ZERO, ZERO],
    [ZERO, ZERO, NEG_ONE, ZERO],
    [ZERO, ZERO, ZERO, NEG_ONE],
]);

/// The full set of representation matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaSet {
    pub gamma0: Mat4,
    pub gamma1: Mat4,
    pub gamma2: Mat4,
    pub gamma3: Mat4,
    pub gamma5: Mat4,
    pub pauli0: Mat2,
    pub pauli1: Mat2,
    pub pauli2: Mat2,
    pub pauli3: Mat2,
}

pub const GAMMAS: GammaSet = GammaSet {
    gamma0: GAMMA0,
    gamma1: GAMMA1,
    gamma2: GAMMA2,
    gamma3: GAMMA3,
    gamma5: GAMMA5,
    pauli0: SIGMA0,
    pauli1: SIGMA1,
    pauli2: SIGMA2,
    pauli3: SIGMA3,
};

pub fn gamma(mu: LorentzIndex) -> Mat4 {
    match mu.0 {
        0 => GAMMA0,
        1 => GAMMA1,
        2 => GAMMA2,
        _ => GAMMA3,
    }
}

pub fn gamma5() -> Mat4 {
    GAMMA5
}

/// `σ_μ` with `σ₀ = I₂`.
pub fn pauli(mu: LorentzIndex) -> Mat2 {
    match mu.0 {
        0 => SIGMA0,
        1 => SIGMA1,
        2 => SIGMA2,
        _ => SIGMA3,
    }
}

/// `(σ₁, σ₂, σ₃)`.
pub fn sigma_vec() -> Vec3Of<Mat2> {
    Vec3Of::new(SIGMA1, SIGMA2, SIGMA3)
}

/// `(γ¹, γ², γ³)`.
pub fn gamma_vec() -> Vec3Of<Mat4> {
    Vec3Of::new(GAMMA1, GAMMA2, GAMMA3)
}

/// `p⃗·σ⃗`.
pub fn sigma_dot(p: &Real3) -> Mat2 {
    sigma_vec().project(p)
}

/// `p⃗·γ⃗`.
pub fn gamma_dot(p: &Real3) -> Mat4 {
    gamma_vec().project(p)
}

/// Contraction `p_μ γ^μ = p⁰γ⁰ − p⃗·γ⃗` of a contravariant four-vector.
pub fn slash(p: &[f64; 4]) -> Mat4 {
    GAMMA0 * p[0] - gamma_dot(&[p[1], p[2], p[3]])
}

pub fn metric(mu: LorentzIndex, nu: LorentzIndex) -> f64 {
    match (mu.0, nu.0) {
        (0, 0) => 1.0,
        (a, b) if a == b => -1.0,
        _ => 0.0,
    }
}

/// Totally antisymmetric symbol, `ε^{0123} = +1`.
pub fn epsilon4(mu: LorentzIndex, nu: LorentzIndex, rho: LorentzIndex, sig: LorentzIndex) -> i32 {
    let idx = [mu.0, nu.0, rho.0, sig.0];
    let mut sign = 1;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if idx[i] == idx[j] {
                return 0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `S^{μν} = (i/4)[γ^μ, γ^ν]`.
pub fn spin_generator(mu: LorentzIndex, nu: LorentzIndex) -> Mat4 {
    commutator(&gamma(mu), &gamma(nu)) * Complex::new(0.0, 0.25)
}

/// `S_{μν}` with both indices lowered.
pub fn spin_generator_lower(mu: LorentzIndex, nu: LorentzIndex) -> Mat4 {
    spin_generator(mu, nu) * (metric(mu, mu) * metric(nu, nu))
}

/// Checks `{γ^μ, γ^ν} = 2g^{μν}I`, `(γ⁵)² = I`, `{γ⁵, γ^μ} = 0` and
/// `γ⁵ = iγ⁰γ¹γ²γ³`.
pub fn verify_clifford() -> CheckReport {
    const TOL: f64 = 1e-14;
    let mut report = CheckReport::new("clifford");
    let origin = [0.0; 3];

    let mut worst: f64 = 0.0;
    for mu in LorentzIndex::ALL {
        for nu in LorentzIndex::ALL {
            let lhs = anticommutator(&gamma(mu), &gamma(nu));
            let rhs = Mat4::identity() * (2.0 * metric(mu, nu));
            worst = worst.max(dist(&lhs, &rhs));
        }
    }
    report.push(CheckRecord::from_residual("anticommutator_metric", worst, TOL, origin));

    let sq = dist(&(GAMMA5 * GAMMA5), &Mat4::identity());
    report.push(CheckRecord::from_residual("gamma5_squared", sq, TOL, origin));

    let anti = LorentzIndex::ALL
        .iter()
        .map(|&mu| anticommutator(&GAMMA5, &gamma(mu)).max_abs_norm())
        .fold(0.0, f64::max);
    report.push(CheckRecord::from_residual("gamma5_anticommutes", anti, TOL, origin));

    let product = GAMMA0 * GAMMA1 * GAMMA2 * GAMMA3 * I;
    report.push(CheckRecord::from_residual(
        "gamma5_equals_i_g0g1g2g3",
        dist(&product, &GAMMA5),
        TOL,
        origin,
    ));

    let herm = dist(&GAMMA0.dagger(), &GAMMA0)
        .max(dist(&GAMMA1.dagger(), &-GAMMA1))
        .max(dist(&GAMMA2.dagger(), &-GAMMA2))
        .max(dist(&GAMMA3.dagger(), &-GAMMA3));
    report.push(CheckRecord::from_residual("gamma_hermiticity", herm, TOL, origin));

    report
}
