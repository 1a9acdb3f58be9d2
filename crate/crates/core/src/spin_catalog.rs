//! The eleven spin operators: the four operators obeying the isotropy
//! classification (`S_I`–`S_IV`) and seven operators from the literature,
//! each available as a Dirac-basis matrix, as Dirac-basis sector
//! projections and as spin-basis blocks.
//!
//! Dirac-basis matrices follow the literature sign convention, which is
//! opposite to the standard one; the spin-basis blocks then come out as the
//! familiar `σ⃗/2`-type expressions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::clifford::{
    epsilon4, gamma_dot, gamma_vec, metric, sigma_dot, sigma_vec, slash, spin_generator_lower, LorentzIndex, GAMMA0,
    GAMMA5,
};
use crate::dirac_basis::{cross_vec, projector, spin_blocks_of, DiracMatrixOp, SectorBlocks, VectorOp};
use crate::error::{Result, SpinError};
use crate::kinematics::{EnergySign, FourMomentum};
use crate::linalg::{commutator, dist, eig2, norm3, Mat2, Mat4, Real3, Vec3Of, I};

/// Smallest `|p⃗|/m` at which operators with `1/p⃗²` or `1/(p⁰ − m)`
/// denominators are evaluated.
pub const SINGULAR_LIMIT: f64 = 1e-6;

/// Tolerance for the Hermiticity assertion on diagonal blocks.
pub const HERMITICITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorKind {
    SI,
    SII,
    SIII,
    SIV,
    Dirac,
    NW,
    FW,
    Czachor,
    Frenkel,
    Chakrabarti,
    Pryce,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 11] = [
        OperatorKind::SI,
        OperatorKind::SII,
        OperatorKind::SIII,
        OperatorKind::SIV,
        OperatorKind::Dirac,
        OperatorKind::NW,
        OperatorKind::FW,
        OperatorKind::Czachor,
        OperatorKind::Frenkel,
        OperatorKind::Chakrabarti,
        OperatorKind::Pryce,
    ];

    /// The operators fulfilling sector preservation, parity and isotropy.
    pub const CLASSIFIED: [OperatorKind; 4] = [
        OperatorKind::SI,
        OperatorKind::SII,
        OperatorKind::SIII,
        OperatorKind::SIV,
    ];

    /// Literature operators, in table order.
    pub const LITERATURE: [OperatorKind; 7] = [
        OperatorKind::Dirac,
        OperatorKind::NW,
        OperatorKind::FW,
        OperatorKind::Czachor,
        OperatorKind::Frenkel,
        OperatorKind::Chakrabarti,
        OperatorKind::Pryce,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::SI => "SI",
            OperatorKind::SII => "SII",
            OperatorKind::SIII => "SIII",
            OperatorKind::SIV => "SIV",
            OperatorKind::Dirac => "dirac",
            OperatorKind::NW => "nw",
            OperatorKind::FW => "fw",
            OperatorKind::Czachor => "czachor",
            OperatorKind::Frenkel => "frenkel",
            OperatorKind::Chakrabarti => "chakrabarti",
            OperatorKind::Pryce => "pryce",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            OperatorKind::SI => "S_I",
            OperatorKind::SII => "S_II",
            OperatorKind::SIII => "S_III",
            OperatorKind::SIV => "S_IV",
            OperatorKind::Dirac => "Dirac",
            OperatorKind::NW => "Newton-Wigner",
            OperatorKind::FW => "Foldy-Wouthuysen",
            OperatorKind::Czachor => "Czachor",
            OperatorKind::Frenkel => "Frenkel",
            OperatorKind::Chakrabarti => "Chakrabarti",
            OperatorKind::Pryce => "Pryce",
        }
    }

    /// Whether some closed form divides by `p⃗²` (or `p⁰ − m`).
    pub fn is_singular(self) -> bool {
        matches!(
            self,
            OperatorKind::SII | OperatorKind::SIII | OperatorKind::SIV | OperatorKind::Pryce
        )
    }

    pub fn check_domain(self, p: &FourMomentum) -> Result<()> {
        let limit = SINGULAR_LIMIT * p.mass();
        if self.is_singular() && p.pvec_norm() < limit {
            return Err(SpinError::SingularMomentum {
                operator: self.name().to_string(),
                norm: p.pvec_norm(),
                limit,
            });
        }
        Ok(())
    }

    /// The qualitative verdicts of the property summary table.
    pub fn expected_properties(self) -> Properties {
        use OperatorKind::*;
        let yes_if = |kinds: &[OperatorKind]| kinds.contains(&self);
        Properties {
            sector_preserving: !matches!(self, Dirac | Chakrabarti),
            pseudovector: true,
            isotropic: yes_if(&[SI, SII, SIII, SIV, NW, FW, Pryce]),
            isotropic_positive: yes_if(&[SI, SII, SIII, SIV, NW, FW, Pryce, Chakrabarti]),
            charge_symmetric: yes_if(&[SI, SII, NW, FW, Dirac, Czachor, Frenkel]),
            su2: yes_if(&[SI, SII, SIII, SIV, NW, FW, Pryce]),
            nonrel_limit: !matches!(self, SII | SIII | SIV | Pryce),
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for OperatorKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = SpinError;

    fn from_str(s: &str) -> Result<Self> {
        OperatorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SpinError::UnknownKind(s.to_string()))
    }
}

/// Qualitative properties of a spin operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub sector_preserving: bool,
    pub pseudovector: bool,
    pub isotropic: bool,
    pub isotropic_positive: bool,
    pub charge_symmetric: bool,
    pub su2: bool,
    pub nonrel_limit: bool,
}

/// Spin-basis blocks `s⃗^{out,in}(p⃗)`.
pub type SpinBlockSet = SectorBlocks<Vec3Of<Mat2>>;

fn half_sigma() -> Vec3Of<Mat2> {
    sigma_vec().map(|s| *s * 0.5)
}

/// `½[2p⃗(p⃗·σ⃗)/p⃗² − σ⃗]`.
fn reflected_half_sigma(p: &Real3) -> Vec3Of<Mat2> {
    let p2 = p.iter().map(|x| x * x).sum::<f64>();
    let ps = sigma_dot(p);
    sigma_vec().map_indexed(|i, s| (ps * (2.0 * p[i] / p2) - *s) * 0.5)
}

trait MapIndexed<M> {
    fn map_indexed<N>(&self, f: impl FnMut(usize, &M) -> N) -> Vec3Of<N>;
}

impl<M> MapIndexed<M> for Vec3Of<M> {
    fn map_indexed<N>(&self, mut f: impl FnMut(usize, &M) -> N) -> Vec3Of<N> {
        Vec3Of::from_fn(|i| f(i, &self[i]))
    }
}

/// Closed-form spin block `s⃗^{out,in}(p⃗)` as tabulated.
pub fn spin_block_closed_form(
    kind: OperatorKind,
    p: &FourMomentum,
    out: EnergySign,
    input: EnergySign,
) -> Result<Vec3Of<Mat2>> {
    use OperatorKind::*;
    kind.check_domain(p)?;
    let m = p.mass();
    let p0 = p.p0();
    let pv = p.pvec();
    let p2 = p.pvec_sq();
    let ps = sigma_dot(&pv);
    let sigma = sigma_vec();
    let e = input.value();
    let zero = Vec3Of::new(Mat2::zeros(), Mat2::zeros(), Mat2::zeros());

    if out != input {
        let cross = cross_vec(&pv, &sigma);
        return Ok(match kind {
            Dirac => cross.map(|c| *c * (I / (2.0 * m))),
            Chakrabarti => cross.map(|c| *c * (I * ((1.0 - e) * p0 / (2.0 * m * m)))),
            _ => zero,
        });
    }

    let positive = input == EnergySign::Positive;
    Ok(match kind {
        SI | NW | FW => half_sigma(),
        SII => reflected_half_sigma(&pv),
        SIII if positive => half_sigma(),
        SIII => reflected_half_sigma(&pv),
        SIV if positive => reflected_half_sigma(&pv),
        SIV => half_sigma(),
        Dirac | Frenkel => sigma.map_indexed(|i, s| (*s - ps * (pv[i] / (p0 * (m + p0)))) * (p0 / (2.0 * m))),
        Czachor => sigma.map_indexed(|i, s| (*s + ps * (pv[i] / (m * (m + p0)))) * (m / (2.0 * p0))),
        Chakrabarti => {
            sigma.map_indexed(|i, s| *s * (e / 2.0) + (*s * (p0 * p0) - ps * pv[i]) * ((1.0 - e) / (2.0 * m * m)))
        }
        Pryce => sigma.map_indexed(|i, s| (*s * e + ps * ((1.0 - e) * pv[i] / p2)) * 0.5),
    })
}

pub fn spin_blocks_closed_form(kind: OperatorKind, p: &FourMomentum) -> Result<SpinBlockSet> {
    SectorBlocks::try_from_fn(|o, i| spin_block_closed_form(kind, p, o, i))
}

/// Spin blocks obtained from the Dirac-basis matrix by amplitude sandwiching.
pub fn spin_blocks_computed(kind: OperatorKind, p: &FourMomentum) -> Result<SpinBlockSet> {
    spin_blocks_of(&dirac_matrix_closed_form(kind), p)
}

/// Dirac-basis matrix of `kind` as a momentum-dependent evaluator, with
/// `P̂ ↦ εp`, `|P̂⁰| ↦ p⁰` and `P̂⁰/|P̂⁰| ↦ ε`.
pub fn dirac_matrix_closed_form(kind: OperatorKind) -> VectorOp {
    DiracMatrixOp::new(kind.title(), move |eps, p| {
        kind.check_domain(p)?;
        Ok(dirac_matrix_at(kind, eps, p))
    })
}

fn dirac_matrix_at(kind: OperatorKind, eps: EnergySign, p: &FourMomentum) -> Vec3Of<Mat4> {
    use OperatorKind::*;
    let id = Mat4::identity();
    let m = p.mass();
    let e = eps.value();
    let p0 = p.p0();
    let p2 = p.pvec_sq();
    let pv = p.pvec();
    let big_p = [e * pv[0], e * pv[1], e * pv[2]];
    let pg = gamma_dot(&big_p);
    let psl = slash(&p.signed(eps));
    let g5g0 = GAMMA5 * GAMMA0;

    gamma_vec().map_indexed(|i, &g| {
        let pi = big_p[i];
        match kind {
            Dirac => g5g0 * g * -0.5,
            SI | NW => GAMMA5 * ((g * psl - id * pi) * e + GAMMA0 * pg * (pi / (p0 + m))) * (0.5 / m),
            SII => {
                let inv_gap = (p0 + m) / p2;
                GAMMA5 * ((g * psl - id * pi) * e + GAMMA0 * pg * (pi * inv_gap)) * (-0.5 / m)
            }
            SIII | Pryce => GAMMA5 * (g - (GAMMA0 + id) * pg * (pi / p2)) * 0.5,
            SIV => GAMMA5 * (-g - (GAMMA0 - id) * pg * (pi / p2)) * 0.5,
            FW => g5g0 * (g * m - pg * g + pg * (pi / (m + p0)) - id * pi) * (-0.5 / p0),
            Czachor => g5g0 * (g * (m * m) - pg * g * m - id * (m * pi) + pg * pi) * (-0.5 / (p0 * p0)),
            Frenkel => g5g0 * (-g + pg * g * (1.0 / m) + id * (pi / m)) * 0.5,
            Chakrabarti => GAMMA5 * (-(GAMMA0 * (g * p0 - pg * (pi / (m + p0)))) + pg * g + id * pi) * (0.5 / m),
        }
    })
}

/// Tabulated Dirac-basis projections `Λ_out S⃗(ε_in p) Λ_in` of the
/// literature operators (and of `S_I`, which coincides with Newton-Wigner).
pub fn dirac_block_closed_form(
    kind: OperatorKind,
    p: &FourMomentum,
    out: EnergySign,
    input: EnergySign,
) -> Result<Vec3Of<Mat4>> {
    use OperatorKind::*;
    kind.check_domain(p)?;
    let id = Mat4::identity();
    let m = p.mass();
    let e = input.value();
    let p0 = p.p0();
    let pv = p.pvec();
    let lam = projector(p, input);
    let g5g0 = GAMMA5 * GAMMA0;
    let gv = gamma_vec();
    let zero = Vec3Of::new(Mat4::zeros(), Mat4::zeros(), Mat4::zeros());

    if out != input {
        return match kind {
            Dirac => {
                Ok(gv.map_indexed(|i, &g| GAMMA5 * ((g * p0 - GAMMA0 * pv[i]) * (-e / m) - GAMMA0 * g) * lam * 0.5))
            }
            Chakrabarti => Ok(gv.map_indexed(|i, &g| {
                g5g0 * (id * pv[i] + (id * m - GAMMA0 * p0) * g) * lam * ((e - 1.0) * p0 / (2.0 * m * m))
            })),
            SI | NW | FW | Czachor | Frenkel | Pryce => Ok(zero),
            SII | SIII | SIV => Err(SpinError::NotTabulated(kind.name().to_string())),
        };
    }

    let block = |i: usize, g: Mat4| -> Option<Mat4> {
        let pi = pv[i];
        Some(match kind {
            Dirac | Frenkel => GAMMA5 * (g * p0 - GAMMA0 * pi) * lam * (e / (2.0 * m)),
            SI | NW | FW => GAMMA5 * (g * e - (GAMMA0 * e + id) * (pi / (m + p0))) * lam * 0.5,
            Czachor => GAMMA5 * (g * (e * m) - id * pi) * lam * (0.5 / p0),
            Chakrabarti => {
                let mixing = (g * (p0 / m) - (GAMMA0 * (1.0 / m) + id * (1.0 / (m + p0))) * pi) * ((e - 1.0) * p0 / m);
                GAMMA5 * (mixing + g - (id + GAMMA0) * (e * pi / (m + p0))) * lam * 0.5
            }
            Pryce => {
                // (p⁰ − εm)/(p⁰² − m²) = 1/(p⁰ + εm)
                GAMMA5 * (g - (GAMMA0 + id) * (pi / (p0 + e * m))) * lam * 0.5
            }
            SII | SIII | SIV => return None,
        })
    };
    let blocks: Vec<Option<Mat4>> = (0..3).map(|i| block(i, gv[i])).collect();
    match (blocks[0], blocks[1], blocks[2]) {
        (Some(x), Some(y), Some(z)) => Ok(Vec3Of::new(x, y, z)),
        _ => Err(SpinError::NotTabulated(kind.name().to_string())),
    }
}

/// `W^μ(εp) = ½ ε^{ναβμ} (εp)_ν S_{αβ}`.
pub fn pauli_lubanski(p: &FourMomentum, eps: EnergySign) -> [Mat4; 4] {
    let up = p.signed(eps);
    let idx = LorentzIndex::ALL;
    let lower: [f64; 4] = std::array::from_fn(|n| metric(idx[n], idx[n]) * up[n]);
    std::array::from_fn(|mu| {
        let mut w = Mat4::zeros();
        for n in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    let lc = epsilon4(idx[n], idx[a], idx[b], idx[mu]);
                    if lc != 0 {
                        w += spin_generator_lower(idx[a], idx[b]) * (0.5 * f64::from(lc) * lower[n]);
                    }
                }
            }
        }
        w
    })
}

/// `p_μ W^μ`, which vanishes identically.
pub fn pauli_lubanski_transversality(p: &FourMomentum, eps: EnergySign) -> Mat4 {
    let w = pauli_lubanski(p, eps);
    let up = p.signed(eps);
    let idx = LorentzIndex::ALL;
    (0..4).fold(Mat4::zeros(), |acc, mu| {
        acc + w[mu] * (metric(idx[mu], idx[mu]) * up[mu])
    })
}

/// `−W_μW^μ/m²`, equal to `s(s+1) I = (3/4) I`.
pub fn spin_square(p: &FourMomentum, eps: EnergySign) -> Mat4 {
    let w = pauli_lubanski(p, eps);
    let idx = LorentzIndex::ALL;
    let ww = (0..4).fold(Mat4::zeros(), |acc, mu| acc + w[mu] * w[mu] * metric(idx[mu], idx[mu]));
    ww * (-1.0 / (p.mass() * p.mass()))
}

/// `(1/m)[(|P⁰|/P⁰)W⃗ − W⁰P⃗/(|P⁰| + m)]` built from the bispinor
/// generators, with the overall sign flipped to the convention of the
/// Dirac-basis matrices.
pub fn nw_from_pauli_lubanski(p: &FourMomentum, eps: EnergySign) -> Vec3Of<Mat4> {
    let w = pauli_lubanski(p, eps);
    let m = p.mass();
    let e = eps.value();
    let pv = p.pvec();
    Vec3Of::from_fn(|i| (w[i + 1] * e - w[0] * (e * pv[i] / (p.p0() + m))) * (-1.0 / m))
}

pub fn nw_pauli_lubanski_op() -> VectorOp {
    DiracMatrixOp::new("Newton-Wigner (Pauli-Lubanski)", |eps, p| {
        Ok(nw_from_pauli_lubanski(p, eps))
    })
}

type Coefficient = Arc<dyn Fn(f64, EnergySign) -> f64 + Send + Sync>;

/// Coefficients of the general pseudo-vector block
/// `s⃗^{εε}(p⃗) = α σ⃗ + β (p⃗·σ⃗) p⃗`, as functions of `(|p⃗|, ε)`.
#[derive(Clone)]
pub struct AnsatzCoefficients {
    pub alpha: Coefficient,
    pub beta: Coefficient,
}

impl AnsatzCoefficients {
    pub fn new(
        alpha: impl Fn(f64, EnergySign) -> f64 + Send + Sync + 'static,
        beta: impl Fn(f64, EnergySign) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            alpha: Arc::new(alpha),
            beta: Arc::new(beta),
        }
    }

    pub fn block(&self, p: &Real3, eps: EnergySign) -> Vec3Of<Mat2> {
        let r = norm3(p);
        let (a, b) = ((self.alpha)(r, eps), (self.beta)(r, eps));
        let ps = sigma_dot(p);
        sigma_vec().map_indexed(|i, s| *s * a + ps * (b * p[i]))
    }
}

impl fmt::Debug for AnsatzCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("AnsatzCoefficients")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// `β ≡ 0`.
    FamilyI,
    /// `p⃗²β + 2α ≡ 0`.
    FamilyII,
    NotIsotropic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::FamilyI => "FamilyI",
            Family::FamilyII => "FamilyII",
            Family::NotIsotropic => "NotIsotropic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorClassification {
    pub eps: EnergySign,
    pub family: Family,
    /// `max |β|` over the samples.
    pub residual_i: f64,
    /// `max |p⃗²β + 2α|` over the samples.
    pub residual_ii: f64,
}

fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// Decides, independently in each sector, which alternative of the
/// isotropy condition holds at every sampled radius. A non-finite
/// coefficient makes both residuals NaN and the verdict `NotIsotropic`.
pub fn classify_ansatz(c: &AnsatzCoefficients, radii: &[f64], tol: f64) -> Result<[SectorClassification; 2]> {
    if radii.is_empty() || radii.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
        return Err(SpinError::Config(
            "classification needs positive finite sample radii".into(),
        ));
    }
    Ok(EnergySign::BOTH.map(|eps| {
        let (mut res_i, mut res_ii) = (0.0_f64, 0.0_f64);
        for &r in radii {
            let a = (c.alpha)(r, eps);
            let b = (c.beta)(r, eps);
            if !(a.is_finite() && b.is_finite()) {
                res_i = f64::NAN;
                res_ii = f64::NAN;
            }
            res_i = nan_max(res_i, b.abs());
            res_ii = nan_max(res_ii, (r * r * b + 2.0 * a).abs());
        }
        let family = if res_i <= tol {
            Family::FamilyI
        } else if res_ii <= tol {
            Family::FamilyII
        } else {
            Family::NotIsotropic
        };
        SectorClassification {
            eps,
            family,
            residual_i: res_i,
            residual_ii: res_ii,
        }
    }))
}

/// Eigenvalues (descending) of `â·s⃗` for a block that must be Hermitian.
pub fn block_eigenvalues(block: &Vec3Of<Mat2>, a_hat: &Real3, label: &str) -> Result<(f64, f64)> {
    if (norm3(a_hat) - 1.0).abs() > 1e-12 {
        return Err(SpinError::Config(format!("direction {a_hat:?} is not a unit vector")));
    }
    let proj = block.project(a_hat);
    let residual = proj.hermiticity_residual();
    if !(residual <= HERMITICITY_TOL) {
        return Err(SpinError::NonHermitian {
            operator: label.to_string(),
            residual,
        });
    }
    let (a, b) = eig2(&proj);
    Ok((a.re, b.re))
}

/// Eigenvalues of `â·s⃗^{εε}(p⃗)` from the tabulated diagonal block.
pub fn projection_eigenvalues(
    kind: OperatorKind,
    p: &FourMomentum,
    eps: EnergySign,
    a_hat: &Real3,
) -> Result<(f64, f64)> {
    let block = spin_block_closed_form(kind, p, eps, eps)?;
    block_eigenvalues(&block, a_hat, kind.name())
}

/// How far the projection eigenvalues are from `±1/2` and how much the
/// upper eigenvalue varies over a set of directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IsotropyStats {
    pub max_deviation: f64,
    pub spread: f64,
}

pub fn isotropy_stats(block: &Vec3Of<Mat2>, directions: &[Real3], label: &str) -> Result<IsotropyStats> {
    let mut dev: f64 = 0.0;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for a in directions {
        let (up, down) = block_eigenvalues(block, a, label)?;
        dev = dev.max((up - 0.5).abs()).max((down + 0.5).abs());
        lo = lo.min(up);
        hi = hi.max(up);
    }
    Ok(IsotropyStats {
        max_deviation: dev,
        spread: if directions.is_empty() { 0.0 } else { hi - lo },
    })
}

/// `max_{cyclic (i,j,k)} ‖[s_i, s_j] − i s_k‖`.
pub fn su2_closure_residual(block: &Vec3Of<Mat2>) -> f64 {
    (0..3)
        .map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            dist(&commutator(&block[i], &block[j]), &(block[k] * I))
        })
        .fold(0.0, nan_max)
}

/// `R(p) = 2p⃗⊗p⃗/p⃗² − I₃`.
pub fn rotation_rp(pvec: &Real3) -> Result<[[f64; 3]; 3]> {
    let p2: f64 = pvec.iter().map(|x| x * x).sum();
    if !(p2 > 0.0) || !p2.is_finite() {
        return Err(SpinError::SingularMomentum {
            operator: "R(p)".into(),
            norm: p2.sqrt(),
            limit: 0.0,
        });
    }
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| 2.0 * pvec[i] * pvec[j] / p2 - if i == j { 1.0 } else { 0.0 })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{SIGMA1, SIGMA3};
    use crate::dirac_basis::{sector_project, spin_block_of, ALL_SECTORS};
    use crate::kinematics::on_shell;
    use crate::linalg::dist_vec;

    fn mom(p: Real3) -> FourMomentum {
        on_shell(1.0, p).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for k in OperatorKind::ALL {
            assert_eq!(k.name().parse::<OperatorKind>().unwrap(), k);
        }
        let names: Vec<_> = OperatorKind::ALL.iter().map(|k| k.name()).collect();
        assert_eq!(
            names.join(" "),
            "SI SII SIII SIV dirac nw fw czachor frenkel chakrabarti pryce"
        );
        assert!(matches!(
            "Dirac".parse::<OperatorKind>(),
            Err(SpinError::UnknownKind(_))
        ));
    }

    #[test]
    fn nw_blocks_are_half_sigma() {
        let p = mom([0.3, -2.0, 1.1]);
        let blocks = spin_blocks_computed(OperatorKind::NW, &p).unwrap();
        for (o, i, b) in blocks.iter() {
            let expected = if o == i {
                half_sigma()
            } else {
                Vec3Of::new(Mat2::zeros(), Mat2::zeros(), Mat2::zeros())
            };
            assert!(dist_vec(b, &expected) < 1e-12, "{o}{i}");
        }
    }

    #[test]
    fn dirac_diagonal_block_example() {
        let p = mom([0.0, 0.0, 0.75]);
        let b = spin_block_closed_form(OperatorKind::Dirac, &p, EnergySign::Positive, EnergySign::Positive).unwrap();
        let pv = p.pvec();
        let ps = sigma_dot(&pv);
        let s = sigma_vec();
        for i in 0..3 {
            let expected = (s[i] - ps * (pv[i] / (1.25 * 2.25))) * (1.25 / 2.0);
            assert!(dist(&b[i], &expected) < 1e-15);
        }
    }

    #[test]
    fn sii_axis_blocks() {
        let p = mom([0.0, 0.0, 0.5]);
        let b = spin_block_closed_form(OperatorKind::SII, &p, EnergySign::Positive, EnergySign::Positive).unwrap();
        assert!(dist(&b.z, &(SIGMA3 * 0.5)) < 1e-15);
        assert!(dist(&b.x, &(SIGMA1 * -0.5)) < 1e-15);
    }

    #[test]
    fn singular_domain_is_an_error() {
        let q = mom([0.0; 3]);
        for k in OperatorKind::ALL {
            let closed = spin_blocks_closed_form(k, &q);
            let matrix = dirac_matrix_closed_form(k).evaluate(EnergySign::Negative, &q);
            assert_eq!(closed.is_err(), k.is_singular(), "{k}");
            assert_eq!(matrix.is_err(), k.is_singular(), "{k}");
        }
        assert!(matches!(
            spin_blocks_closed_form(OperatorKind::Pryce, &mom([1e-7, 0.0, 0.0])),
            Err(SpinError::SingularMomentum { .. })
        ));
        assert!(spin_blocks_closed_form(OperatorKind::Pryce, &mom([1e-5, 0.0, 0.0])).is_ok());
    }

    #[test]
    fn table_columns_agree() {
        for pv in [[0.0, 0.0, 0.75], [1.0, 2.0, 3.0], [-0.2, 0.05, 0.4]] {
            let p = mom(pv);
            for k in OperatorKind::ALL {
                let computed = spin_blocks_computed(k, &p).unwrap();
                let closed = spin_blocks_closed_form(k, &p).unwrap();
                for (o, i) in ALL_SECTORS {
                    let r = dist_vec(computed.get(o, i), closed.get(o, i));
                    assert!(r < 1e-12, "{k} {o}{i}: {r:e}");
                }
            }
            for k in OperatorKind::LITERATURE.into_iter().chain([OperatorKind::SI]) {
                let op = dirac_matrix_closed_form(k);
                for (o, i) in ALL_SECTORS {
                    let projected = sector_project(&op, &p, o, i).unwrap();
                    let tabulated = dirac_block_closed_form(k, &p, o, i).unwrap();
                    let r = dist_vec(&projected, &tabulated);
                    assert!(r < 1e-11, "{k} {o}{i}: {r:e}");
                }
            }
        }
        let p = mom([1.0, 0.0, 0.0]);
        assert!(matches!(
            dirac_block_closed_form(OperatorKind::SII, &p, EnergySign::Positive, EnergySign::Positive),
            Err(SpinError::NotTabulated(_))
        ));
    }

    #[test]
    fn pauli_lubanski_rest_frame() {
        let q = mom([0.0; 3]);
        let w = pauli_lubanski(&q, EnergySign::Positive);
        assert!(w[0].max_abs_norm() < 1e-15);
        let (a, b) = eig2(&w[3].block(0, 0));
        assert!((a.re - 0.5).abs() < 1e-15 && (b.re + 0.5).abs() < 1e-15);
        let nw = nw_pauli_lubanski_op();
        let blocks = spin_blocks_of(&nw, &q).unwrap();
        let d = dist_vec(blocks.get(EnergySign::Positive, EnergySign::Positive), &half_sigma());
        assert!(d < 1e-15);
    }

    #[test]
    fn pauli_lubanski_identities() {
        let p = mom([1.5, -0.7, 2.2]);
        for eps in EnergySign::BOTH {
            assert!(pauli_lubanski_transversality(&p, eps).max_abs_norm() < 1e-12);
            assert!(dist(&spin_square(&p, eps), &(Mat4::identity() * 0.75)) < 1e-12);
        }
        let nw = dirac_matrix_closed_form(OperatorKind::NW);
        let pl = nw_pauli_lubanski_op();
        assert!(crate::dirac_basis::operator_equivalent(&nw, &pl, &p, 1e-11));
    }

    #[test]
    fn positive_energy_nw_form() {
        let p = mom([0.4, 0.9, -0.3]);
        let w = pauli_lubanski(&p, EnergySign::Positive);
        let m = p.mass();
        let pv = p.pvec();
        let direct = Vec3Of::from_fn(|i| (w[i + 1] - w[0] * (pv[i] / (p.p0() + m))) * (-1.0 / m));
        let via = nw_from_pauli_lubanski(&p, EnergySign::Positive);
        assert!(dist_vec(&direct, &via) < 1e-15);
        let b = spin_block_of(&nw_pauli_lubanski_op(), &p, EnergySign::Positive, EnergySign::Positive).unwrap();
        assert!(dist_vec(&b, &half_sigma()) < 1e-12);
    }

    #[test]
    fn classification_examples() {
        let radii = [0.1, 0.5, 1.0, 3.0];
        let c = AnsatzCoefficients::new(|_, _| 0.5, |_, _| 0.0);
        let v = classify_ansatz(&c, &radii, 1e-12).unwrap();
        assert!(v.iter().all(|s| s.family == Family::FamilyI));
        let c = AnsatzCoefficients::new(|_, _| -0.5, |r, _| 1.0 / (r * r));
        let v = classify_ansatz(&c, &radii, 1e-12).unwrap();
        assert!(v.iter().all(|s| s.family == Family::FamilyII));
        let c = AnsatzCoefficients::new(|_, _| 0.5, |_, _| 1.0);
        let v = classify_ansatz(&c, &radii, 1e-12).unwrap();
        assert!(v.iter().all(|s| s.family == Family::NotIsotropic));
        let c = AnsatzCoefficients::new(
            |_, e| 0.5 * e.value(),
            |r, e| if e == EnergySign::Positive { 0.0 } else { 1.0 / (r * r) },
        );
        let v = classify_ansatz(&c, &radii, 1e-12).unwrap();
        assert_eq!((v[0].family, v[1].family), (Family::FamilyI, Family::FamilyII));
        let c = AnsatzCoefficients::new(|_, _| f64::NAN, |_, _| 0.0);
        let v = classify_ansatz(&c, &radii, 1e-12).unwrap();
        assert_eq!(v[0].family, Family::NotIsotropic);
        assert!(classify_ansatz(&c, &[], 1e-12).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let p = mom([0.0, 0.0, 0.75]);
        let x = [1.0, 0.0, 0.0];
        let (a, b) = projection_eigenvalues(OperatorKind::Dirac, &p, EnergySign::Positive, &x).unwrap();
        assert!((a - 0.625).abs() < 1e-15 && (b + 0.625).abs() < 1e-15);
        let (a, b) = projection_eigenvalues(OperatorKind::Chakrabarti, &p, EnergySign::Negative, &x).unwrap();
        assert!((a - 17.0 / 16.0).abs() < 1e-14 && (b + 17.0 / 16.0).abs() < 1e-14);
        let (a, b) = projection_eigenvalues(OperatorKind::NW, &p, EnergySign::Negative, &[0.6, 0.0, 0.8]).unwrap();
        assert!((a - 0.5).abs() < 1e-15 && (b + 0.5).abs() < 1e-15);
        assert!(projection_eigenvalues(OperatorKind::NW, &p, EnergySign::Negative, &[1.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn non_hermitian_block_is_rejected() {
        let block = Vec3Of::new(SIGMA1 * I, SIGMA1, SIGMA3);
        assert!(matches!(
            block_eigenvalues(&block, &[1.0, 0.0, 0.0], "test"),
            Err(SpinError::NonHermitian { .. })
        ));
    }

    #[test]
    fn rp_examples() {
        let r = rotation_rp(&[0.0, 0.0, 2.0]).unwrap();
        assert_eq!(r, [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(rotation_rp(&[0.0; 3]).is_err());
    }

    #[test]
    fn su2_closure_examples() {
        assert!(su2_closure_residual(&half_sigma()) < 1e-16);
        let p = mom([0.3, 0.4, 1.2]);
        assert!(su2_closure_residual(&reflected_half_sigma(&p.pvec())) < 1e-14);
        let d = spin_block_closed_form(OperatorKind::Dirac, &p, EnergySign::Positive, EnergySign::Positive).unwrap();
        assert!(su2_closure_residual(&d) > 0.1);
    }
}
