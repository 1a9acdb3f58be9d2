//! Discrete symmetries, rotation covariance and the non-relativistic limit
//! of the cataloged spin operators, all tested on spin-basis blocks obtained
//! from the Dirac-basis matrices.
//!
//! Charge conjugation acts antiunitarily and swaps the energy sectors; an
//! operator that anticommutes with it has blocks related by
//!
//! ```text
//! s⃗^{−ε,−ε}(p⃗) = −σ₂ (s⃗^{εε}(p⃗))* σ₂
//! ```
//!
//! Since `σ₂σ⃗*σ₂ = −σ⃗`, the block `σ⃗/2` satisfies this in both sectors.

use serde::Serialize;

use crate::clifford::{GAMMA0, SIGMA2};
use crate::dirac_basis::amplitude;
use crate::error::{Result, SpinError};
use crate::kinematics::{
    bispinor_of, on_shell, parity_map, su2_of_rotation, wigner_rotation, EnergySign, FourMomentum, LorentzTransform,
};
use crate::linalg::{dist, dist_vec, normalize3, Complex, Mat2, Mat4, Real3, Vec3Of, ONE};
use crate::report::{CheckRecord, CheckReport};
use crate::spin_catalog::{spin_blocks_computed, OperatorKind};

/// Free phases of parity (`ξ`) and charge conjugation (`ξ_c`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseConfig {
    xi: Complex,
    xi_c: Complex,
}

impl PhaseConfig {
    pub fn new(xi: Complex, xi_c: Complex) -> Result<Self> {
        for (name, z) in [("xi", xi), ("xi_c", xi_c)] {
            if (z.norm() - 1.0).abs() > 1e-12 {
                return Err(SpinError::Config(format!(
                    "phase {name} must have unit modulus, got {z}"
                )));
            }
        }
        Ok(Self { xi, xi_c })
    }

    pub fn xi(&self) -> Complex {
        self.xi
    }

    pub fn xi_c(&self) -> Complex {
        self.xi_c
    }
}

impl Default for PhaseConfig {
    fn default() -> Self {
        Self { xi: ONE, xi_c: ONE }
    }
}

/// `P̂|εp, λ⟩ = εξ|εp^π, λ⟩`: the multiplier and the mapped momentum.
pub fn parity_spin_action(eps: EnergySign, p: &FourMomentum, phases: &PhaseConfig) -> (Complex, FourMomentum) {
    (phases.xi * eps.value(), parity_map(p))
}

/// Dirac-basis counterpart `ξγ⁰` (with `p ↦ p^π`).
pub fn parity_dirac_action(phases: &PhaseConfig) -> Mat4 {
    GAMMA0 * phases.xi
}

fn record(name: &str, kind: OperatorKind, residual: f64, tol: f64, p: &FourMomentum, expected: bool) -> CheckRecord {
    CheckRecord::from_residual(name, residual, tol, p.pvec())
        .with_kind(kind.name())
        .expecting(expected)
}

fn single(suite: &str, rec: CheckRecord) -> CheckReport {
    let mut report = CheckReport::new(suite);
    report.push(rec);
    report
}

/// Diagonal blocks at `p⃗` and `−p⃗` coincide.
pub fn check_pseudovector(kind: OperatorKind, p: &FourMomentum, tol: f64) -> Result<CheckReport> {
    let at_p = spin_blocks_computed(kind, p)?;
    let at_minus = spin_blocks_computed(kind, &parity_map(p))?;
    let residual = EnergySign::BOTH
        .iter()
        .map(|&e| dist_vec(at_p.get(e, e), at_minus.get(e, e)))
        .fold(0.0, f64::max);
    let expected = kind.expected_properties().pseudovector;
    Ok(single(
        "parity",
        record("pseudovector", kind, residual, tol, p, expected),
    ))
}

/// `−σ₂ s* σ₂`, componentwise.
pub fn charge_conjugate_block(block: &Vec3Of<Mat2>) -> Vec3Of<Mat2> {
    block.map(|s| -(SIGMA2 * s.conj() * SIGMA2))
}

/// Largest violation of the blockwise charge-symmetry relation at `p`.
pub fn charge_symmetry_residual(kind: OperatorKind, p: &FourMomentum) -> Result<f64> {
    let blocks = spin_blocks_computed(kind, p)?;
    Ok(EnergySign::BOTH
        .iter()
        .map(|&e| dist_vec(blocks.get(-e, -e), &charge_conjugate_block(blocks.get(e, e))))
        .fold(0.0, f64::max))
}

pub fn check_charge_symmetry(kind: OperatorKind, p: &FourMomentum, tol: f64) -> Result<CheckReport> {
    let residual = charge_symmetry_residual(kind, p)?;
    let expected = kind.expected_properties().charge_symmetric;
    Ok(single(
        "charge_symmetry",
        record("charge_symmetry", kind, residual, tol, p, expected),
    ))
}

/// Largest entry of the two off-diagonal blocks.
pub fn sector_mixing(kind: OperatorKind, p: &FourMomentum) -> Result<f64> {
    let blocks = spin_blocks_computed(kind, p)?;
    Ok(blocks
        .iter()
        .filter(|(o, i, _)| o != i)
        .map(|(_, _, b)| b.max_abs_norm())
        .fold(0.0, f64::max))
}

pub fn check_sector_preservation(kind: OperatorKind, p: &FourMomentum, tol: f64) -> Result<CheckReport> {
    let residual = sector_mixing(kind, p)?;
    let expected = kind.expected_properties().sector_preserving;
    Ok(single(
        "sector_preservation",
        record("sector_preservation", kind, residual, tol, p, expected),
    ))
}

/// `min_± ‖S(Λ) v^ε(p) D(R)ᵀ ∓ v^ε(Λp)‖` with `R = R(Λ, p)`.
pub fn intertwining_residual(l: &LorentzTransform, p: &FourMomentum, eps: EnergySign) -> Result<f64> {
    let s = bispinor_of(l)?;
    let d = su2_of_rotation(&wigner_rotation(l, p))?;
    let q = l.act_on(p);
    let lhs = s * amplitude(p, eps).v * d.transpose();
    let rhs = amplitude(&q, eps).v;
    Ok(dist(&lhs, &rhs).min(dist(&lhs, &(-rhs))))
}

pub fn check_intertwining(l: &LorentzTransform, p: &FourMomentum, eps: EnergySign, tol: f64) -> Result<CheckReport> {
    let residual = intertwining_residual(l, p, eps)?;
    let rec = CheckRecord::from_residual(format!("intertwining_{eps}"), residual, tol, p.pvec());
    Ok(single("intertwining", rec))
}

/// `D(R)† s_i(Rp⃗) D(R) = Σ_j R_ij s_j(p⃗)` for every block and component,
/// which is the statement `D† (â·s⃗(Rp⃗)) D = (R⁻¹â)·s⃗(p⃗)` for all `â`.
pub fn wigner_covariance_residual(kind: OperatorKind, r: &LorentzTransform, p: &FourMomentum) -> Result<f64> {
    let d = su2_of_rotation(r)?;
    let rot = r.rotation_block();
    let q = r.act_on(p);
    let at_p = spin_blocks_computed(kind, p)?;
    let at_q = spin_blocks_computed(kind, &q)?;
    let mut worst: f64 = 0.0;
    for (o, i, bq) in at_q.iter() {
        let bp = at_p.get(o, i);
        for c in 0..3 {
            let lhs = d.dagger() * bq[c] * d;
            let rhs = (0..3).fold(Mat2::zeros(), |acc, j| acc + bp[j] * rot[c][j]);
            worst = worst.max(dist(&lhs, &rhs));
        }
    }
    Ok(worst)
}

pub fn check_wigner_covariance_blocks(
    kind: OperatorKind,
    r: &LorentzTransform,
    p: &FourMomentum,
    tol: f64,
) -> Result<CheckReport> {
    let residual = wigner_covariance_residual(kind, r, p)?;
    Ok(single(
        "rotation_covariance",
        record("rotation_covariance", kind, residual, tol, p, true),
    ))
}

/// Radii, in units of the mass, used by the limit probe.
pub const LIMIT_RADII: [f64; 4] = [1e-1, 1e-2, 1e-3, 1e-4];

/// The six coordinate axes and the eight cube diagonals.
pub fn limit_directions() -> Vec<Real3> {
    let mut dirs = Vec::with_capacity(14);
    for i in 0..3 {
        for s in [1.0, -1.0] {
            let mut d = [0.0; 3];
            d[i] = s;
            dirs.push(d);
        }
    }
    for sx in [1.0, -1.0] {
        for sy in [1.0, -1.0] {
            for sz in [1.0, -1.0] {
                dirs.push(normalize3(&[sx, sy, sz]).unwrap_or([0.0, 0.0, 1.0]));
            }
        }
    }
    dirs
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectionLimit {
    pub direction: Real3,
    /// Largest change between the two smallest radii.
    pub convergence: f64,
    #[serde(skip)]
    pub block: Vec3Of<Mat2>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitReport {
    pub kind: OperatorKind,
    pub eps: EnergySign,
    pub directions: Vec<DirectionLimit>,
    /// Largest entrywise difference between the limit estimates of any two
    /// directions at the smallest radius.
    pub spread: f64,
    pub well_defined: bool,
}

impl LimitReport {
    /// Mean of the per-direction estimates.
    pub fn limit(&self) -> Option<Vec3Of<Mat2>> {
        let n = self.directions.len();
        if n == 0 {
            return None;
        }
        let zero = Vec3Of::new(Mat2::zeros(), Mat2::zeros(), Mat2::zeros());
        let sum = self
            .directions
            .iter()
            .fold(zero, |acc, d| acc.zip_map(&d.block, |a, b| *a + *b));
        Some(sum.map(|m| *m * (1.0 / n as f64)))
    }
}

/// Diagonal blocks of sector `eps` along `p⃗ = r·m·n̂`, from the Dirac-basis
/// matrix. The verdict is "well-defined" iff the cross-direction spread at
/// the smallest radius is at most `tol`.
pub fn nonrel_limit_probe(
    kind: OperatorKind,
    eps: EnergySign,
    mass: f64,
    directions: &[Real3],
    radii: &[f64],
    tol: f64,
) -> Result<LimitReport> {
    if radii.is_empty() || radii.iter().any(|r| !(*r > 0.0)) || radii.windows(2).any(|w| w[1] >= w[0]) {
        return Err(SpinError::Config("limit radii must be positive and decreasing".into()));
    }
    let mut out = Vec::with_capacity(directions.len());
    for n in directions {
        let n = normalize3(n).ok_or_else(|| SpinError::Config("zero limit direction".into()))?;
        let mut blocks = Vec::with_capacity(radii.len());
        for r in radii {
            let p = on_shell(mass, [n[0] * r * mass, n[1] * r * mass, n[2] * r * mass])?;
            blocks.push(*spin_blocks_computed(kind, &p)?.get(eps, eps));
        }
        let last = blocks[blocks.len() - 1];
        let convergence = if blocks.len() > 1 {
            dist_vec(&blocks[blocks.len() - 2], &last)
        } else {
            0.0
        };
        out.push(DirectionLimit {
            direction: n,
            convergence,
            block: last,
        });
    }
    let mut spread: f64 = 0.0;
    for (a, da) in out.iter().enumerate() {
        for db in &out[a + 1..] {
            spread = spread.max(dist_vec(&da.block, &db.block));
        }
    }
    Ok(LimitReport {
        kind,
        eps,
        directions: out,
        spread,
        well_defined: spread <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{sigma_vec, SIGMA3};
    use crate::kinematics::ComposedLorentz;
    use crate::kinematics::LorentzFactor;

    fn mom(p: Real3) -> FourMomentum {
        on_shell(1.0, p).unwrap()
    }

    fn half_sigma() -> Vec3Of<Mat2> {
        sigma_vec().map(|s| *s * 0.5)
    }

    #[test]
    fn parity_action() {
        let p = mom([0.2, -0.4, 1.0]);
        let ph = PhaseConfig::default();
        let (phase, q) = parity_spin_action(EnergySign::Positive, &p, &ph);
        assert_eq!(phase, ONE);
        assert_eq!(q.pvec(), [-0.2, 0.4, -1.0]);
        let rest = mom([0.0; 3]);
        assert_eq!(parity_spin_action(EnergySign::Negative, &rest, &ph).1, rest);
        let ph = PhaseConfig::new(Complex::new(0.0, 1.0), ONE).unwrap();
        let (a, q1) = parity_spin_action(EnergySign::Positive, &p, &ph);
        let (b, q2) = parity_spin_action(EnergySign::Positive, &q1, &ph);
        assert!((a * b - ph.xi() * ph.xi()).norm() < 1e-15);
        assert_eq!(q2, p);
        assert!(PhaseConfig::new(Complex::new(2.0, 0.0), ONE).is_err());
    }

    #[test]
    fn parity_dirac_form_matches_amplitudes() {
        let p = mom([0.7, 0.1, -0.3]);
        let ph = PhaseConfig::default();
        for eps in EnergySign::BOTH {
            let (phase, q) = parity_spin_action(eps, &p, &ph);
            let lhs = parity_dirac_action(&ph) * amplitude(&p, eps).v;
            assert!(dist(&lhs, &(amplitude(&q, eps).v * phase)) < 1e-15);
        }
    }

    #[test]
    fn pseudovector_examples() {
        let p = mom([0.3, 1.2, -0.5]);
        for k in [OperatorKind::NW, OperatorKind::Dirac, OperatorKind::SII] {
            assert!(check_pseudovector(k, &p, 1e-12).unwrap().all_pass(), "{k}");
        }
    }

    #[test]
    fn charge_symmetry_examples() {
        let p = mom([0.6, 0.0, 0.8]);
        assert!(charge_symmetry_residual(OperatorKind::SI, &p).unwrap() < 1e-12);
        assert!(charge_symmetry_residual(OperatorKind::SII, &p).unwrap() < 1e-12);
        assert!(charge_symmetry_residual(OperatorKind::SIII, &p).unwrap() > 0.1);
        let block = charge_conjugate_block(&half_sigma());
        assert!(dist_vec(&block, &half_sigma()) < 1e-16);
    }

    #[test]
    fn sector_preservation_examples() {
        let p = mom([0.5, 0.5, 0.0]);
        assert!(check_sector_preservation(OperatorKind::NW, &p, 1e-12)
            .unwrap()
            .all_pass());
        let d = check_sector_preservation(OperatorKind::Dirac, &p, 1e-12).unwrap();
        assert!(!d.all_pass() && d.all_as_expected());
        let rest = mom([0.0; 3]);
        assert!(check_sector_preservation(OperatorKind::Dirac, &rest, 1e-12)
            .unwrap()
            .all_pass());
    }

    #[test]
    fn intertwining_examples() {
        let p = mom([0.4, -1.3, 0.8]);
        let id = LorentzTransform::identity();
        let rot = LorentzTransform::rotation([0.0, 0.0, 1.0], 0.7).unwrap();
        let boost = LorentzTransform::boost([1.0, 0.0, 0.0], 1.2).unwrap();
        for eps in EnergySign::BOTH {
            assert!(intertwining_residual(&id, &p, eps).unwrap() < 1e-15);
            assert!(intertwining_residual(&rot, &p, eps).unwrap() < 1e-13);
            assert!(intertwining_residual(&boost, &p, eps).unwrap() < 1e-12);
        }
        let l = ComposedLorentz::new(vec![
            LorentzFactor::Boost {
                axis: [0.2, 1.0, 0.1],
                rapidity: 2.5,
            },
            LorentzFactor::Rotation {
                axis: [1.0, 1.0, 0.0],
                angle: 3.0,
            },
        ])
        .matrix()
        .unwrap();
        assert!(check_intertwining(&l, &p, EnergySign::Negative, 1e-9)
            .unwrap()
            .all_pass());
    }

    #[test]
    fn rotation_covariance_examples() {
        let p = mom([0.9, -0.2, 0.4]);
        let r = LorentzTransform::rotation([0.3, 0.2, -1.0], 1.9).unwrap();
        for k in [
            OperatorKind::NW,
            OperatorKind::Dirac,
            OperatorKind::Chakrabarti,
            OperatorKind::SIV,
        ] {
            assert!(wigner_covariance_residual(k, &r, &p).unwrap() < 1e-12, "{k}");
        }
        let id = LorentzTransform::identity();
        assert!(wigner_covariance_residual(OperatorKind::Czachor, &id, &p).unwrap() < 1e-15);
    }

    #[test]
    fn limit_examples() {
        let dirs = limit_directions();
        assert_eq!(dirs.len(), 14);
        let si = nonrel_limit_probe(OperatorKind::SI, EnergySign::Positive, 1.0, &dirs, &LIMIT_RADII, 1e-6).unwrap();
        assert!(si.well_defined);
        assert!(dist_vec(&si.limit().unwrap(), &half_sigma()) < 1e-6);
        let sii = nonrel_limit_probe(OperatorKind::SII, EnergySign::Positive, 1.0, &dirs, &LIMIT_RADII, 1e-6).unwrap();
        assert!(!sii.well_defined);
        assert!(sii.spread >= 1.0 - 1e-9);
        assert!(dist(&sii.directions[4].block.z, &(SIGMA3 * 0.5)) < 1e-6);
        assert!(dist(&sii.directions[0].block.z, &(SIGMA3 * -0.5)) < 1e-6);
        assert!(nonrel_limit_probe(OperatorKind::SI, EnergySign::Positive, 1.0, &dirs, &[1e-3, 1e-2], 1e-6).is_err());
    }
}
