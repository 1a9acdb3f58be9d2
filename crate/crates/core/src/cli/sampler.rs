//! Seeded momenta, directions and Lorentz transformations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::kinematics::{on_shell, ComposedLorentz, FourMomentum, LorentzFactor, LorentzTransform};
use crate::linalg::{norm3, Real3};

/// Recorded in report metadata.
pub const PRNG_NAME: &str = "chacha8";

/// Random momenta shorter than this (in units of the mass) are redrawn.
pub const MIN_RANDOM_MOMENTUM: f64 = 1e-3;

pub const MAX_RAPIDITY: f64 = 3.0;

pub struct Sampler {
    rng: ChaCha8Rng,
    mass: f64,
    max_momentum: f64,
}

impl Sampler {
    pub fn new(seed: u64, mass: f64, max_momentum: f64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            mass,
            max_momentum,
        }
    }

    /// Components uniform in `[−K, K]·m`, redrawn while `|p⃗| < 10⁻³ m`.
    pub fn momentum(&mut self) -> Result<FourMomentum> {
        let k = self.max_momentum * self.mass;
        loop {
            let p: Real3 = std::array::from_fn(|_| self.rng.gen_range(-k..=k));
            if norm3(&p) >= MIN_RANDOM_MOMENTUM * self.mass {
                return on_shell(self.mass, p);
            }
        }
    }

    pub fn momenta(&mut self, n: usize) -> Result<Vec<FourMomentum>> {
        (0..n).map(|_| self.momentum()).collect()
    }

    /// Uniform on the unit sphere.
    pub fn direction(&mut self) -> Real3 {
        let z: f64 = self.rng.gen_range(-1.0..=1.0);
        let phi: f64 = self.rng.gen_range(0.0..std::f64::consts::TAU);
        let s = (1.0 - z * z).max(0.0).sqrt();
        [s * phi.cos(), s * phi.sin(), z]
    }

    pub fn directions(&mut self, n: usize) -> Vec<Real3> {
        (0..n).map(|_| self.direction()).collect()
    }

    pub fn rotation_factor(&mut self) -> LorentzFactor {
        LorentzFactor::Rotation {
            axis: self.direction(),
            angle: self.rng.gen_range(0.0..std::f64::consts::TAU),
        }
    }

    pub fn rotation(&mut self) -> Result<LorentzTransform> {
        self.rotation_factor().matrix()
    }

    /// Rotation · boost (rapidity ≤ 3) · rotation.
    pub fn lorentz(&mut self) -> ComposedLorentz {
        let r1 = self.rotation_factor();
        let boost = LorentzFactor::Boost {
            axis: self.direction(),
            rapidity: self.rng.gen_range(0.0..=MAX_RAPIDITY),
        };
        let r2 = self.rotation_factor();
        ComposedLorentz::new(vec![r1, boost, r2])
    }

    /// Uniform in `[lo, hi]`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..=hi)
    }
}

/// Deterministic golden momenta: `0.75m` along each axis, the three cyclic
/// permutations of `(1,2,3)/|(1,2,3)|·0.75m`, and a momentum of `10⁻³ m`
/// next to the rest frame.
pub fn fixed_momenta(mass: f64) -> Result<Vec<FourMomentum>> {
    let n = 14.0_f64.sqrt();
    let d = [1.0 / n * 0.75, 2.0 / n * 0.75, 3.0 / n * 0.75];
    let list: [Real3; 7] = [
        [0.0, 0.0, 0.75],
        [0.75, 0.0, 0.0],
        [0.0, 0.75, 0.0],
        d,
        [d[1], d[2], d[0]],
        [d[2], d[0], d[1]],
        [0.0, 0.0, MIN_RANDOM_MOMENTUM],
    ];
    list.iter()
        .map(|p| on_shell(mass, [p[0] * mass, p[1] * mass, p[2] * mass]))
        .collect()
}
