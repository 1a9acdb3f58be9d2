//! On-shell momenta, restricted Lorentz transformations, Wigner rotations
//! and the spin-½ representations `D(R)` (SU(2)) and `S(Λ)` (bispinor).
//!
//! Conventions: `S(Λ) = exp(−(i/2)ω_{μν}S^{μν})`, so a rotation by `θ` about
//! `n̂` is `exp(−iθ n̂·J⃗)` with `J^k = S^{ij}` (cyclic) and a boost of
//! rapidity `χ` along `n̂` is `exp(−iχ n̂·K⃗)` with `K^i = S^{0i}`. With these,
//! `S⁻¹γ^μS = Λ^μ_ν γ^ν` and `S(Λ)v^ε(p)D(R(Λ,p))ᵀ = ±v^ε(Λp)`.

use std::fmt;
use std::ops::Neg;

use serde::Serialize;

use crate::clifford::{sigma_vec, spin_generator, LorentzIndex};
use crate::error::{Result, SpinError};
use crate::linalg::{dot3, norm3, normalize3, Complex, Mat2, Mat4, Real3, I};

/// Sign of the energy, `ε = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EnergySign {
    Positive,
    Negative,
}

impl EnergySign {
    pub const BOTH: [EnergySign; 2] = [EnergySign::Positive, EnergySign::Negative];

    pub fn value(self) -> f64 {
        match self {
            EnergySign::Positive => 1.0,
            EnergySign::Negative => -1.0,
        }
    }

    pub fn from_value(v: i32) -> Option<Self> {
        match v {
            1 => Some(EnergySign::Positive),
            -1 => Some(EnergySign::Negative),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        match self {
            EnergySign::Positive => 0,
            EnergySign::Negative => 1,
        }
    }
}

impl Neg for EnergySign {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            EnergySign::Positive => EnergySign::Negative,
            EnergySign::Negative => EnergySign::Positive,
        }
    }
}

impl fmt::Display for EnergySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergySign::Positive => "+",
            EnergySign::Negative => "-",
        })
    }
}

/// On-shell four-momentum with positive energy `p⁰ = √(p⃗² + m²)`; the
/// energy sign is carried separately as an [`EnergySign`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    mass: f64,
    pvec: Real3,
    p0: f64,
}

impl FourMomentum {
    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn pvec(&self) -> Real3 {
        self.pvec
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn pvec_sq(&self) -> f64 {
        dot3(&self.pvec, &self.pvec)
    }

    pub fn pvec_norm(&self) -> f64 {
        norm3(&self.pvec)
    }

    /// `p⁰ − m`, evaluated as `p⃗²/(p⁰ + m)` so it stays accurate near rest.
    pub fn kinetic(&self) -> f64 {
        self.pvec_sq() / (self.p0 + self.mass)
    }

    /// Contravariant components `(p⁰, p⃗)`.
    pub fn four_vector(&self) -> [f64; 4] {
        [self.p0, self.pvec[0], self.pvec[1], self.pvec[2]]
    }

    /// Components of `εp`.
    pub fn signed(&self, eps: EnergySign) -> [f64; 4] {
        let e = eps.value();
        [e * self.p0, e * self.pvec[0], e * self.pvec[1], e * self.pvec[2]]
    }

    /// `p·p`, which equals `m²` on shell.
    pub fn minkowski_square(&self) -> f64 {
        self.p0 * self.p0 - self.pvec_sq()
    }

    pub fn rest(mass: f64) -> Result<Self> {
        on_shell(mass, [0.0; 3])
    }
}

pub fn on_shell(mass: f64, pvec: Real3) -> Result<FourMomentum> {
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(SpinError::NonPositiveMass(mass));
    }
    if pvec.iter().any(|c| !c.is_finite()) {
        return Err(SpinError::NonFiniteMomentum);
    }
    let p0 = (dot3(&pvec, &pvec) + mass * mass).sqrt();
    Ok(FourMomentum { mass, pvec, p0 })
}

/// `(p⁰, p⃗) ↦ (p⁰, −p⃗)`.
pub fn parity_map(p: &FourMomentum) -> FourMomentum {
    FourMomentum {
        mass: p.mass,
        pvec: [-p.pvec[0], -p.pvec[1], -p.pvec[2]],
        p0: p.p0,
    }
}

type Real4x4 = [[f64; 4]; 4];

const METRIC_DIAG: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// A restricted (proper, orthochronous) Lorentz matrix `Λ^μ_ν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzTransform {
    lambda: Real4x4,
}

impl LorentzTransform {
    const TOL: f64 = 1e-10;

    pub fn identity() -> Self {
        let mut lambda = [[0.0; 4]; 4];
        for (i, row) in lambda.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { lambda }
    }

    /// Validates `ΛᵀgΛ = g`, `det Λ = 1` and `Λ⁰₀ ≥ 1` to 1e-10 relative
    /// to the size of `Λ`.
    pub fn new(lambda: Real4x4) -> Result<Self> {
        if lambda.iter().flatten().any(|x| !x.is_finite()) {
            return Err(SpinError::NotRestricted("non-finite entry".into()));
        }
        let out = Self { lambda };
        let scale = out.max_abs().powi(2).max(1.0);
        let metric_res = out.metric_residual();
        if metric_res > Self::TOL * scale {
            return Err(SpinError::NotRestricted(format!(
                "metric not preserved (residual {metric_res:e})"
            )));
        }
        let det = det4(&lambda);
        if (det - 1.0).abs() > Self::TOL * scale * scale {
            return Err(SpinError::NotRestricted(format!("det = {det}")));
        }
        if lambda[0][0] < 1.0 - Self::TOL * scale {
            return Err(SpinError::NotRestricted(format!(
                "not orthochronous (Λ⁰₀ = {})",
                lambda[0][0]
            )));
        }
        Ok(out)
    }

    pub fn matrix(&self) -> &Real4x4 {
        &self.lambda
    }

    /// Rodrigues rotation by `angle` about `axis` (active, right-handed).
    pub fn rotation(axis: Real3, angle: f64) -> Result<Self> {
        let n = unit_axis(&axis)?;
        if !angle.is_finite() {
            return Err(SpinError::NotRestricted("non-finite angle".into()));
        }
        let (s, c) = angle.sin_cos();
        let k = [[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]];
        let mut lambda = Self::identity().lambda;
        for i in 0..3 {
            for j in 0..3 {
                let kk: f64 = (0..3).map(|l| k[i][l] * k[l][j]).sum();
                lambda[i + 1][j + 1] += s * k[i][j] + (1.0 - c) * kk;
            }
        }
        Ok(Self { lambda })
    }

    /// Pure boost of rapidity `rapidity` along `axis`.
    pub fn boost(axis: Real3, rapidity: f64) -> Result<Self> {
        let n = unit_axis(&axis)?;
        if !rapidity.is_finite() {
            return Err(SpinError::NotRestricted("non-finite rapidity".into()));
        }
        let (ch, sh) = (rapidity.cosh(), rapidity.sinh());
        let mut lambda = Self::identity().lambda;
        lambda[0][0] = ch;
        for i in 0..3 {
            lambda[0][i + 1] = sh * n[i];
            lambda[i + 1][0] = sh * n[i];
            for j in 0..3 {
                lambda[i + 1][j + 1] += (ch - 1.0) * n[i] * n[j];
            }
        }
        Ok(Self { lambda })
    }

    /// Embeds a 3×3 orthogonal matrix as a spatial rotation.
    pub fn from_rotation3(r: &[[f64; 3]; 3]) -> Result<Self> {
        let mut lambda = Self::identity().lambda;
        for i in 0..3 {
            for j in 0..3 {
                lambda[i + 1][j + 1] = r[i][j];
            }
        }
        Self::new(lambda)
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..4).map(|k| self.lambda[i][k] * rhs.lambda[k][j]).sum();
            }
        }
        Self { lambda: out }
    }

    /// `Λ⁻¹ = gΛᵀg`.
    pub fn inverse(&self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = METRIC_DIAG[i] * self.lambda[j][i] * METRIC_DIAG[j];
            }
        }
        Self { lambda: out }
    }

    pub fn apply(&self, x: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|k| self.lambda[i][k] * x[k]).sum();
        }
        out
    }

    /// `Λp`, re-projected onto the mass shell from its spatial part.
    pub fn act_on(&self, p: &FourMomentum) -> FourMomentum {
        let q = self.apply(&p.four_vector());
        let pvec = [q[1], q[2], q[3]];
        FourMomentum {
            mass: p.mass,
            pvec,
            p0: (dot3(&pvec, &pvec) + p.mass * p.mass).sqrt(),
        }
    }

    /// Max-abs residual of `ΛᵀgΛ − g`.
    pub fn metric_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let v: f64 = (0..4)
                    .map(|k| self.lambda[k][i] * METRIC_DIAG[k] * self.lambda[k][j])
                    .sum();
                let target = if i == j { METRIC_DIAG[i] } else { 0.0 };
                worst = worst.max((v - target).abs());
            }
        }
        worst
    }

    pub fn determinant(&self) -> f64 {
        det4(&self.lambda)
    }

    /// Deviation of the time row and column from `(1, 0, 0, 0)`.
    pub fn rotation_residual(&self) -> f64 {
        let mut worst = (self.lambda[0][0] - 1.0).abs();
        for i in 1..4 {
            worst = worst.max(self.lambda[0][i].abs()).max(self.lambda[i][0].abs());
        }
        worst
    }

    pub fn rotation_block(&self) -> [[f64; 3]; 3] {
        let mut r = [[0.0; 3]; 3];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.lambda[i + 1][j + 1];
            }
        }
        r
    }

    pub fn dist(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.lambda[i][j] - other.lambda[i][j]).abs());
            }
        }
        worst
    }

    fn max_abs(&self) -> f64 {
        self.lambda.iter().flatten().fold(0.0, |a, b| a.max(b.abs()))
    }
}

fn unit_axis(axis: &Real3) -> Result<Real3> {
    normalize3(axis).ok_or_else(|| SpinError::NotRestricted("axis must be a nonzero finite vector".into()))
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(m: &Real4x4) -> f64 {
    let mut total = 0.0;
    for col in 0..4 {
        let mut minor = [[0.0; 3]; 3];
        for r in 1..4 {
            let mut cc = 0;
            for c in 0..4 {
                if c == col {
                    continue;
                }
                minor[r - 1][cc] = m[r][c];
                cc += 1;
            }
        }
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * m[0][col] * det3(&minor);
    }
    total
}

/// The rotation-free boost `L_p` with `L_p (m, 0⃗) = p`.
pub fn standard_boost(p: &FourMomentum) -> LorentzTransform {
    let m = p.mass;
    let mut lambda = [[0.0; 4]; 4];
    lambda[0][0] = p.p0 / m;
    for i in 0..3 {
        lambda[0][i + 1] = p.pvec[i] / m;
        lambda[i + 1][0] = p.pvec[i] / m;
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            lambda[i + 1][j + 1] = delta + p.pvec[i] * p.pvec[j] / (m * (m + p.p0));
        }
    }
    LorentzTransform { lambda }
}

/// `R(Λ, p) = L⁻¹_{Λp} Λ L_p`.
pub fn wigner_rotation(lambda: &LorentzTransform, p: &FourMomentum) -> LorentzTransform {
    let lp = standard_boost(p);
    let l_lp = standard_boost(&lambda.act_on(p));
    l_lp.inverse().compose(lambda).compose(&lp)
}

const SMALL_ANGLE: f64 = 1e-6;

/// `D(R) = exp(−iθ n̂·σ⃗/2)` from the axis-angle form of a pure rotation.
/// The overall sign (double cover) is not normalized.
pub fn su2_of_rotation(r: &LorentzTransform) -> Result<Mat2> {
    let rot_res = r.rotation_residual();
    let m = r.rotation_block();
    let mut orth: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let v: f64 = (0..3).map(|k| m[k][i] * m[k][j]).sum();
            orth = orth.max((v - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    let residual = rot_res.max(orth);
    if residual > 1e-8 || det3(&m) < 0.0 {
        return Err(SpinError::NotARotation(residual));
    }

    // w = sinθ n̂ from the antisymmetric part, cosθ from the trace.
    let w = [
        0.5 * (m[2][1] - m[1][2]),
        0.5 * (m[0][2] - m[2][0]),
        0.5 * (m[1][0] - m[0][1]),
    ];
    let cos_t = ((m[0][0] + m[1][1] + m[2][2] - 1.0) * 0.5).clamp(-1.0, 1.0);
    let sin_t = norm3(&w);
    let theta = sin_t.atan2(cos_t);

    // q = sin(θ/2) n̂
    let (half_cos, q) = if theta < SMALL_ANGLE {
        // sin(θ/2)/sinθ = 1/(2cos(θ/2)) ≈ ½(1 + θ²/8)
        let f = 0.5 * (1.0 + theta * theta / 8.0);
        ((1.0 - theta * theta / 8.0), [w[0] * f, w[1] * f, w[2] * f])
    } else if std::f64::consts::PI - theta < SMALL_ANGLE {
        // n̂n̂ᵀ from the symmetric part; sign of n̂ from w when available.
        let denom = 1.0 - cos_t;
        let mut nn = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let sym = 0.5 * (m[i][j] + m[j][i]);
                nn[i][j] = (sym - if i == j { cos_t } else { 0.0 }) / denom;
            }
        }
        let k = (0..3).max_by(|&a, &b| nn[a][a].total_cmp(&nn[b][b])).unwrap_or(0);
        let nk = nn[k][k].max(0.0).sqrt();
        let mut n = [nn[k][0] / nk, nn[k][1] / nk, nn[k][2] / nk];
        n = normalize3(&n).unwrap_or([0.0, 0.0, 1.0]);
        if dot3(&n, &w) < 0.0 {
            n = [-n[0], -n[1], -n[2]];
        }
        let s = (theta * 0.5).sin();
        ((theta * 0.5).cos(), [n[0] * s, n[1] * s, n[2] * s])
    } else {
        let f = (theta * 0.5).sin() / sin_t;
        ((theta * 0.5).cos(), [w[0] * f, w[1] * f, w[2] * f])
    };

    Ok(Mat2::identity() * half_cos - sigma_vec().project(&q) * I)
}

/// A single factor of a compositional Lorentz transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LorentzFactor {
    Rotation { axis: Real3, angle: f64 },
    Boost { axis: Real3, rapidity: f64 },
}

impl LorentzFactor {
    pub fn matrix(&self) -> Result<LorentzTransform> {
        match *self {
            LorentzFactor::Rotation { axis, angle } => LorentzTransform::rotation(axis, angle),
            LorentzFactor::Boost { axis, rapidity } => LorentzTransform::boost(axis, rapidity),
        }
    }

    pub fn bispinor(&self) -> Result<Mat4> {
        match *self {
            LorentzFactor::Rotation { axis, angle } => {
                let n = unit_axis(&axis)?;
                // 2 n̂·J⃗ squares to the identity.
                let j = rotation_generators();
                let two_nj = (j[0] * n[0] + j[1] * n[1] + j[2] * n[2]) * 2.0;
                let (s, c) = (angle * 0.5).sin_cos();
                Ok(Mat4::identity() * c - two_nj * Complex::new(0.0, s))
            }
            LorentzFactor::Boost { axis, rapidity } => {
                let n = unit_axis(&axis)?;
                // −2i n̂·K⃗ = γ⁰(n̂·γ⃗) squares to the identity.
                let k = boost_generators();
                let a = (k[0] * n[0] + k[1] * n[1] + k[2] * n[2]) * Complex::new(0.0, -2.0);
                let half = rapidity * 0.5;
                Ok(Mat4::identity() * half.cosh() + a * half.sinh())
            }
        }
    }
}

fn idx(v: usize) -> LorentzIndex {
    LorentzIndex::ALL[v]
}

/// `J^k = S^{ij}` for cyclic `(i, j, k)`.
pub fn rotation_generators() -> [Mat4; 3] {
    [
        spin_generator(idx(2), idx(3)),
        spin_generator(idx(3), idx(1)),
        spin_generator(idx(1), idx(2)),
    ]
}

/// `K^i = S^{0i}`.
pub fn boost_generators() -> [Mat4; 3] {
    [
        spin_generator(idx(0), idx(1)),
        spin_generator(idx(0), idx(2)),
        spin_generator(idx(0), idx(3)),
    ]
}

/// A restricted Lorentz transformation built as an ordered product of
/// rotations and boosts, `Λ = Λ₁Λ₂⋯`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComposedLorentz {
    pub factors: Vec<LorentzFactor>,
}

impl ComposedLorentz {
    pub fn new(factors: Vec<LorentzFactor>) -> Self {
        Self { factors }
    }

    pub fn matrix(&self) -> Result<LorentzTransform> {
        self.factors
            .iter()
            .try_fold(LorentzTransform::identity(), |acc, f| Ok(acc.compose(&f.matrix()?)))
    }

    pub fn bispinor(&self) -> Result<Mat4> {
        bispinor_rep(&self.factors)
    }
}

/// `S(Λ)` for `Λ` given as an ordered product of factors. Multiplicative up
/// to the double-cover sign.
pub fn bispinor_rep(factors: &[LorentzFactor]) -> Result<Mat4> {
    factors
        .iter()
        .try_fold(Mat4::identity(), |acc, f| Ok(acc * f.bispinor()?))
}

/// `S(R) = diag(D(R), D(R))` for a pure rotation given as a matrix.
pub fn bispinor_of_rotation(r: &LorentzTransform) -> Result<Mat4> {
    let d = su2_of_rotation(r)?;
    Ok(Mat4::from_blocks(&d, &Mat2::zeros(), &Mat2::zeros(), &d))
}

/// `S(Λ)` for a general restricted transformation, from the polar
/// factorization `Λ = B·R` into a standard boost and a rotation.
pub fn bispinor_of(l: &LorentzTransform) -> Result<Mat4> {
    let m = l.matrix();
    let u = [m[1][0], m[2][0], m[3][0]];
    let speed = norm3(&u);
    let (boost, boost_spinor) = match normalize3(&u) {
        Some(axis) if speed > 0.0 => {
            let factor = LorentzFactor::Boost {
                axis,
                rapidity: speed.asinh(),
            };
            (factor.matrix()?, factor.bispinor()?)
        }
        _ => (LorentzTransform::identity(), Mat4::identity()),
    };
    let rotation = boost.inverse().compose(l);
    Ok(boost_spinor * bispinor_of_rotation(&rotation)?)
}
