//! The Dirac (covariant) basis: intertwining amplitudes `v^ε(p)`, the
//! energy projectors `Λ_ε(p)`, sector projections of momentum-dependent
//! matrices and the map between Dirac-basis matrices and spin-basis blocks.
//!
//! A momentum-dependent operator is an evaluator that receives the energy
//! sign explicitly: on a state of the `ε` sector, `P̂^μ` acts as `εp^μ`,
//! `|P̂⁰|` as `p⁰` and `P̂⁰/|P̂⁰|` as `ε`.
//!
//! Sector blocks are indexed `(out, in)`:
//!
//! ```text
//! Ω^{out,in}(p) = Λ_out(p) · Ω(ε_in p) · Λ_in(p)
//! ω^{out,in}(p)ᵀ = ε_out · v̄^{out}(p) · Ω(ε_in p) · v^{in}(p)
//! ```
//!
//! and the spin blocks are recombined by
//! `Ω̃(p) = Σ ε_in · v^{out}(p) · ω^{out,in}(p)ᵀ · v̄^{in}(p)`.
//! Transposing the spin-basis matrix (ω rather than ωᵀ being "the" block)
//! is what reproduces the usual `σ⃗/2` blocks for the Newton-Wigner spin.

use std::fmt;
use std::sync::Arc;

use crate::clifford::LorentzIndex;
use crate::clifford::{
    gamma, gamma_dot, gamma_vec, sigma_dot, sigma_vec, slash, GAMMA0, GAMMA2, GAMMA5, SIGMA0, SIGMA2,
};
use crate::error::Result;
use crate::kinematics::{parity_map, EnergySign, FourMomentum};
use crate::linalg::{dist, dist_vec, Mat2, Mat2x4, Mat4, Mat4x2, Real3, Vec3Of, I};
use crate::report::{CheckRecord, CheckReport};

/// `v^ε(p)`, a 4×2 matrix (bispinor index × spin index).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplitude {
    pub v: Mat4x2,
}

impl Amplitude {
    /// `v̄ = v†γ⁰`.
    pub fn bar(&self) -> Mat2x4 {
        self.v.dagger() * GAMMA0
    }
}

/// Explicit amplitude
/// `v^ε(p) = [2√(1 + p⁰/m)]⁻¹ (I + p^μσ_μ/m ; ε(I + p^{πμ}σ_μ/m)) σ₂`.
pub fn amplitude(p: &FourMomentum, eps: EnergySign) -> Amplitude {
    let m = p.mass();
    let pv = p.pvec();
    let energy = SIGMA0 * (p.p0() / m);
    let spatial = sigma_dot(&pv) * (1.0 / m);
    let upper = SIGMA0 + energy + spatial;
    let lower = (SIGMA0 + energy - spatial) * eps.value();
    let norm = 1.0 / (2.0 * (1.0 + p.p0() / m).sqrt());
    Amplitude {
        v: Mat4x2::stack(&upper, &lower) * SIGMA2 * norm,
    }
}

/// `Λ_ε(p) = (mI + ε p·γ)/(2m)`.
pub fn projector(p: &FourMomentum, eps: EnergySign) -> Mat4 {
    let m = p.mass();
    (Mat4::identity() * m + slash(&p.signed(eps))) * (0.5 / m)
}

/// `εp·γ − mI`; annihilates the `ε` sector.
pub fn dirac_constraint_matrix(p: &FourMomentum, eps: EnergySign) -> Mat4 {
    slash(&p.signed(eps)) - Mat4::identity() * p.mass()
}

/// Value types an operator evaluator can return: a single 4×4 matrix or a
/// 3-vector of them.
pub trait OperatorValue: Clone + fmt::Debug + Send + Sync + 'static {
    /// The matching spin-basis (2×2-valued) type.
    type Block: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn map_dirac(&self, f: impl Fn(&Mat4) -> Mat4) -> Self;
    fn to_block(&self, f: impl Fn(&Mat4) -> Mat2) -> Self::Block;
    fn from_block(block: &Self::Block, f: impl Fn(&Mat2) -> Mat4) -> Self;
    fn zero() -> Self;
    fn zero_block() -> Self::Block;
    fn add(&self, other: &Self) -> Self;
    fn add_block(a: &Self::Block, b: &Self::Block) -> Self::Block;
    fn dist(&self, other: &Self) -> f64;
    fn block_dist(a: &Self::Block, b: &Self::Block) -> f64;
    fn is_finite(&self) -> bool;
}

impl OperatorValue for Mat4 {
    type Block = Mat2;

    fn map_dirac(&self, f: impl Fn(&Mat4) -> Mat4) -> Self {
        f(self)
    }
    fn to_block(&self, f: impl Fn(&Mat4) -> Mat2) -> Mat2 {
        f(self)
    }
    fn from_block(block: &Mat2, f: impl Fn(&Mat2) -> Mat4) -> Self {
        f(block)
    }
    fn zero() -> Self {
        Mat4::zeros()
    }
    fn zero_block() -> Mat2 {
        Mat2::zeros()
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn add_block(a: &Mat2, b: &Mat2) -> Mat2 {
        *a + *b
    }
    fn dist(&self, other: &Self) -> f64 {
        dist(self, other)
    }
    fn block_dist(a: &Mat2, b: &Mat2) -> f64 {
        dist(a, b)
    }
    fn is_finite(&self) -> bool {
        Mat4::is_finite(self)
    }
}

impl OperatorValue for Vec3Of<Mat4> {
    type Block = Vec3Of<Mat2>;

    fn map_dirac(&self, f: impl Fn(&Mat4) -> Mat4) -> Self {
        self.map(f)
    }
    fn to_block(&self, f: impl Fn(&Mat4) -> Mat2) -> Vec3Of<Mat2> {
        self.map(f)
    }
    fn from_block(block: &Vec3Of<Mat2>, f: impl Fn(&Mat2) -> Mat4) -> Self {
        block.map(f)
    }
    fn zero() -> Self {
        Vec3Of::new(Mat4::zeros(), Mat4::zeros(), Mat4::zeros())
    }
    fn zero_block() -> Vec3Of<Mat2> {
        Vec3Of::new(Mat2::zeros(), Mat2::zeros(), Mat2::zeros())
    }
    fn add(&self, other: &Self) -> Self {
        self.zip_map(other, |a, b| *a + *b)
    }
    fn add_block(a: &Vec3Of<Mat2>, b: &Vec3Of<Mat2>) -> Vec3Of<Mat2> {
        a.zip_map(b, |x, y| *x + *y)
    }
    fn dist(&self, other: &Self) -> f64 {
        dist_vec(self, other)
    }
    fn block_dist(a: &Vec3Of<Mat2>, b: &Vec3Of<Mat2>) -> f64 {
        dist_vec(a, b)
    }
    fn is_finite(&self) -> bool {
        self.iter().all(Mat4::is_finite)
    }
}

type Evaluator<V> = dyn Fn(EnergySign, &FourMomentum) -> Result<V> + Send + Sync;

/// A momentum-dependent 4×4 matrix (or 3-vector of matrices), evaluated at
/// `εp` by passing the energy sign explicitly.
#[derive(Clone)]
pub struct DiracMatrixOp<V> {
    label: String,
    eval: Arc<Evaluator<V>>,
}

pub type ScalarOp = DiracMatrixOp<Mat4>;
pub type VectorOp = DiracMatrixOp<Vec3Of<Mat4>>;

impl<V: OperatorValue> DiracMatrixOp<V> {
    pub fn new(
        label: impl Into<String>,
        eval: impl Fn(EnergySign, &FourMomentum) -> Result<V> + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn evaluate(&self, eps: EnergySign, p: &FourMomentum) -> Result<V> {
        (self.eval)(eps, p)
    }
}

impl<V> fmt::Debug for DiracMatrixOp<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DiracMatrixOp").field("label", &self.label).finish()
    }
}

/// Values for each `(out, in)` pair of energy sectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorBlocks<T> {
    blocks: [[T; 2]; 2],
}

impl<T> SectorBlocks<T> {
    pub fn from_fn(mut f: impl FnMut(EnergySign, EnergySign) -> T) -> Self {
        use EnergySign::{Negative as N, Positive as P};
        Self {
            blocks: [[f(P, P), f(P, N)], [f(N, P), f(N, N)]],
        }
    }

    pub fn try_from_fn<E>(mut f: impl FnMut(EnergySign, EnergySign) -> Result<T, E>) -> Result<Self, E> {
        use EnergySign::{Negative as N, Positive as P};
        Ok(Self {
            blocks: [[f(P, P)?, f(P, N)?], [f(N, P)?, f(N, N)?]],
        })
    }

    pub fn get(&self, out: EnergySign, input: EnergySign) -> &T {
        &self.blocks[out.index()][input.index()]
    }

    /// `(out, in, value)` in the order `++, +−, −+, −−`.
    pub fn iter(&self) -> impl Iterator<Item = (EnergySign, EnergySign, &T)> {
        EnergySign::BOTH.into_iter().flat_map(move |o| {
            EnergySign::BOTH
                .into_iter()
                .map(move |i| (o, i, &self.blocks[o.index()][i.index()]))
        })
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> SectorBlocks<U> {
        SectorBlocks::from_fn(|o, i| f(self.get(o, i)))
    }
}

/// `Λ_out(p) · O(ε_in p) · Λ_in(p)`.
pub fn sector_project<V: OperatorValue>(
    op: &DiracMatrixOp<V>,
    p: &FourMomentum,
    out: EnergySign,
    input: EnergySign,
) -> Result<V> {
    let value = op.evaluate(input, p)?;
    let (lo, li) = (projector(p, out), projector(p, input));
    Ok(value.map_dirac(|m| lo * *m * li))
}

pub fn sector_blocks<V: OperatorValue>(op: &DiracMatrixOp<V>, p: &FourMomentum) -> Result<SectorBlocks<V>> {
    SectorBlocks::try_from_fn(|o, i| sector_project(op, p, o, i))
}

/// Spin-basis block `ω^{out,in}(p)` with
/// `ωᵀ = ε_out · v̄^{out} · O(ε_in p) · v^{in}`.
pub fn spin_block_of<V: OperatorValue>(
    op: &DiracMatrixOp<V>,
    p: &FourMomentum,
    out: EnergySign,
    input: EnergySign,
) -> Result<V::Block> {
    let value = op.evaluate(input, p)?;
    let vbar = amplitude(p, out).bar();
    let v = amplitude(p, input).v;
    let sign = out.value();
    Ok(value.to_block(|m| (vbar * *m * v).transpose() * sign))
}

pub fn spin_blocks_of<V: OperatorValue>(op: &DiracMatrixOp<V>, p: &FourMomentum) -> Result<SectorBlocks<V::Block>> {
    SectorBlocks::try_from_fn(|o, i| spin_block_of(op, p, o, i))
}

/// `Ω̃(p) = Σ ε_in · v^{out}(p) · ω^{out,in}(p)ᵀ · v̄^{in}(p)`.
pub fn dirac_from_spin_blocks<V: OperatorValue>(blocks: &SectorBlocks<V::Block>, p: &FourMomentum) -> V {
    blocks.iter().fold(V::zero(), |acc, (out, input, block)| {
        let v_out = amplitude(p, out).v;
        let vbar_in = amplitude(p, input).bar();
        let sign = input.value();
        let term = V::from_block(block, |w| v_out * w.transpose() * vbar_in * sign);
        acc.add(&term)
    })
}

/// `Ω̃(p)`: the sum of the four sector projections.
pub fn omega_tilde<V: OperatorValue>(op: &DiracMatrixOp<V>, p: &FourMomentum) -> Result<V> {
    let blocks = sector_blocks(op, p)?;
    Ok(blocks.iter().fold(V::zero(), |acc, (_, _, b)| acc.add(b)))
}

/// Max over the requested sector pairs of the projected difference.
pub fn equivalence_residual<V: OperatorValue>(
    a: &DiracMatrixOp<V>,
    b: &DiracMatrixOp<V>,
    p: &FourMomentum,
    sectors: &[(EnergySign, EnergySign)],
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &(o, i) in sectors {
        let da = sector_project(a, p, o, i)?;
        let db = sector_project(b, p, o, i)?;
        worst = worst.max(da.dist(&db));
    }
    Ok(worst)
}

pub const ALL_SECTORS: [(EnergySign, EnergySign); 4] = [
    (EnergySign::Positive, EnergySign::Positive),
    (EnergySign::Positive, EnergySign::Negative),
    (EnergySign::Negative, EnergySign::Positive),
    (EnergySign::Negative, EnergySign::Negative),
];

/// Both blocks acting on positive-energy input.
pub const POSITIVE_INPUT: [(EnergySign, EnergySign); 2] = [
    (EnergySign::Positive, EnergySign::Positive),
    (EnergySign::Negative, EnergySign::Positive),
];

/// Whether two matrices represent the same endomorphism at `p`: all four
/// sector projections agree within `tol`. Evaluation failures count as
/// "not equivalent".
pub fn operator_equivalent<V: OperatorValue>(
    a: &DiracMatrixOp<V>,
    b: &DiracMatrixOp<V>,
    p: &FourMomentum,
    tol: f64,
) -> bool {
    matches!(equivalence_residual(a, b, p, &ALL_SECTORS), Ok(r) if r < tol)
}

pub fn identity_op() -> ScalarOp {
    DiracMatrixOp::new("identity", |_, _| Ok(Mat4::identity()))
}

/// `Ĥ = P̂⁰`, i.e. `εp⁰ I`.
pub fn energy_op() -> ScalarOp {
    DiracMatrixOp::new("energy", |eps, p| Ok(Mat4::identity() * (eps.value() * p.p0())))
}

/// `H_D = γ⁰(P⃗·γ⃗ + m)`.
pub fn dirac_hamiltonian() -> ScalarOp {
    DiracMatrixOp::new("dirac_hamiltonian", |eps, p| {
        let pv = p.pvec();
        let e = eps.value();
        Ok(GAMMA0 * (gamma_dot(&[e * pv[0], e * pv[1], e * pv[2]]) + Mat4::identity() * p.mass()))
    })
}

/// Eqs. 4a–c, the projector algebra and the Dirac constraint at `p`.
pub fn verify_amplitude_normalization(p: &FourMomentum, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("orthogonality");
    let pv = p.pvec();
    let id2 = Mat2::identity();
    let (mut a, mut b, mut c, mut constraint) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    let (mut idem, mut trace) = (0.0_f64, 0.0_f64);
    for eps in EnergySign::BOTH {
        let v = amplitude(p, eps);
        let lam = projector(p, eps);
        a = a.max(dist(&(v.v * v.bar()), &(lam * eps.value())));
        let vm = amplitude(p, -eps);
        b = b.max(dist(&(v.v * vm.bar()), &(lam * GAMMA5 * -eps.value())));
        for other in EnergySign::BOTH {
            let expected = if other == eps { id2 * eps.value() } else { Mat2::zeros() };
            c = c.max(dist(&(amplitude(p, other).bar() * v.v), &expected));
        }
        constraint = constraint.max((dirac_constraint_matrix(p, eps) * v.v).max_abs_norm());
        idem = idem.max(dist(&(lam * lam), &lam));
        trace = trace.max((lam.trace() - 2.0).norm());
    }
    let lp = projector(p, EnergySign::Positive);
    let lm = projector(p, EnergySign::Negative);
    let complete = dist(&(lp + lm), &Mat4::identity()).max((lp * lm).max_abs_norm());

    report.push(CheckRecord::from_residual("completeness_4a", a, tol, pv));
    report.push(CheckRecord::from_residual("cross_completeness_4b", b, tol, pv));
    report.push(CheckRecord::from_residual("orthogonality_4c", c, tol, pv));
    report.push(CheckRecord::from_residual("dirac_constraint", constraint, tol, pv));
    report.push(CheckRecord::from_residual("projector_idempotent", idem, tol, pv));
    report.push(CheckRecord::from_residual(
        "projector_complete_orthogonal",
        complete,
        tol,
        pv,
    ));
    report.push(CheckRecord::from_residual("projector_trace", trace, tol, pv));
    report
}

fn sigma_t() -> Vec3Of<Mat2> {
    sigma_vec().map(|s| s.transpose())
}

fn sigma_t_dot(p: &Real3) -> Mat2 {
    sigma_t().project(p)
}

/// `(p⃗ × s⃗)_i` for a 3-vector of 2×2 matrices.
pub(crate) fn cross_vec(p: &Real3, s: &Vec3Of<Mat2>) -> Vec3Of<Mat2> {
    Vec3Of::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        s[k] * p[j] - s[j] * p[k]
    })
}

fn cross_sigma_t(p: &Real3) -> Vec3Of<Mat2> {
    cross_vec(p, &sigma_t())
}

/// The amplitude relations and the eleven `v̄ Γ v` sandwich formulas, each
/// maximized over both energy signs.
pub fn verify_amplitude_identities(p: &FourMomentum, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("amplitude");
    let pv = p.pvec();
    let m = p.mass();
    let p0 = p.p0();
    let p2 = p.pvec_sq();
    let four = p.four_vector();
    let pg = gamma_dot(&pv);
    let gv = gamma_vec();
    let st = sigma_t();
    let pst = sigma_t_dot(&pv);
    let cst = cross_sigma_t(&pv);
    let id2 = Mat2::identity();
    let pp = parity_map(p);

    let mut r = [0.0_f64; 15];
    for eps in EnergySign::BOTH {
        let e = eps.value();
        let v = amplitude(p, eps);
        let vm = amplitude(p, -eps);
        let vb = v.bar();
        let sw = |g: Mat4| vb * g * v.v;

        r[0] = r[0].max(dist(&(GAMMA5 * v.v), &vm.v));
        r[1] = r[1].max(dist(&(GAMMA0 * v.v), &(amplitude(&pp, eps).v * e)));
        r[2] = r[2].max(dist(&(GAMMA2 * v.v.conj()), &(vm.v * SIGMA2 * e)));
        r[3] = r[3].max(dist(&(-vb), &(vm.bar() * GAMMA5)));

        for (mu, comp) in four.iter().enumerate() {
            let g = gamma(LorentzIndex::ALL[mu]);
            r[4] = r[4].max(dist(&sw(g), &(id2 * (comp / m))));
        }
        r[5] = r[5].max(sw(GAMMA5).max_abs_norm());
        r[7] = r[7].max(sw(GAMMA0 * pg).max_abs_norm());
        r[9] = r[9].max(dist(&sw(GAMMA5 * GAMMA0), &(pst * (1.0 / m))));
        r[11] = r[11].max(dist(&sw(GAMMA5 * GAMMA0 * pg), &(pst * -e)));
        for i in 0..3 {
            r[6] = r[6].max(dist(&sw(GAMMA0 * gv[i]), &(cst[i] * (I * (-e / m)))));
            let rhs = id2 * (-e * pv[i]) + cst[i] * (I * (e * p0 / m));
            r[8] = r[8].max(dist(&sw(gv[i] * pg), &rhs));
            let rhs = (pst * (pv[i] / (m + p0)) - st[i] * p0) * (e / m);
            r[10] = r[10].max(dist(&sw(GAMMA5 * GAMMA0 * gv[i]), &rhs));
            let rhs = (st[i] * m + pst * (pv[i] / (m + p0))) * (1.0 / m);
            r[12] = r[12].max(dist(&sw(GAMMA5 * gv[i]), &rhs));
            let rhs = (st[i] * p2 - pst * pv[i]) * (e / m);
            r[13] = r[13].max(dist(&sw(GAMMA5 * gv[i] * pg), &rhs));
            let rhs = pst * (-pv[i] / m);
            r[14] = r[14].max(dist(&sw(GAMMA5 * GAMMA0 * gv[i] * pg), &rhs));
        }
    }

    const NAMES: [&str; 15] = [
        "gamma5_v_flips_sector",
        "gamma0_v_parity",
        "gamma2_vconj_charge",
        "vbar_gamma5_flip",
        "vbar_gamma_mu_v",
        "vbar_g5_v",
        "vbar_g0_gvec_v",
        "vbar_g0_pdotg_v",
        "vbar_gvec_pdotg_v",
        "vbar_g5g0_v",
        "vbar_g5g0_gvec_v",
        "vbar_g5g0_pdotg_v",
        "vbar_g5_gvec_v",
        "vbar_g5_gvec_pdotg_v",
        "vbar_g5g0_gvec_pdotg_v",
    ];
    for (name, res) in NAMES.iter().zip(r) {
        report.push(CheckRecord::from_residual(*name, res, tol, pv));
    }
    report
}

/// The projector sandwich identities `Λ_{±ε} Γ Λ_ε`, sixteen records (the
/// `γ^μ` pair is split into time and space components).
pub fn verify_projector_sandwich_identities(p: &FourMomentum, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("projector_sandwich");
    let pv = p.pvec();
    let m = p.mass();
    let p0 = p.p0();
    let p2 = p.pvec_sq();
    let id = Mat4::identity();
    let pg = gamma_dot(&pv);
    let gv = gamma_vec();
    let g5g0 = GAMMA5 * GAMMA0;

    let mut r = [0.0_f64; 16];
    for eps in EnergySign::BOTH {
        let e = eps.value();
        let le = projector(p, eps);
        let lm = projector(p, -eps);
        let diag = |g: Mat4| le * g * le;
        let off = |g: Mat4| lm * g * le;

        r[0] = r[0].max(dist(&diag(GAMMA0), &(le * (e * p0 / m))));
        r[2] = r[2].max(dist(&off(GAMMA0), &((GAMMA0 - id * (e * p0 / m)) * le)));
        r[8] = r[8].max(dist(
            &diag(GAMMA5 * pg),
            &(GAMMA5 * (GAMMA0 - id * (e * p0 / m)) * le * p0),
        ));
        r[9] = r[9].max(dist(&off(GAMMA5 * pg), &(GAMMA5 * le * (e * p2 / m))));
        r[10] = r[10].max(dist(&diag(g5g0 * pg), &(g5g0 * pg * le)));
        r[11] = r[11].max(off(g5g0 * pg).max_abs_norm());
        for i in 0..3 {
            let g = gv[i];
            r[1] = r[1].max(dist(&diag(g), &(le * (e * pv[i] / m))));
            r[3] = r[3].max(dist(&off(g), &((g - id * (e * pv[i] / m)) * le)));
            r[4] = r[4].max(dist(&diag(GAMMA5 * g), &(GAMMA5 * (g - id * (e * pv[i] / m)) * le)));
            r[5] = r[5].max(dist(&off(GAMMA5 * g), &(GAMMA5 * le * (e * pv[i] / m))));
            let boost_like = GAMMA5 * (GAMMA0 * pv[i] - g * p0) * (e / m);
            r[6] = r[6].max(dist(&diag(g5g0 * g), &(boost_like * le)));
            r[7] = r[7].max(dist(&off(g5g0 * g), &((g5g0 * g - boost_like) * le)));
            let x = pg * g + id * pv[i];
            r[12] = r[12].max(diag(g5g0 * x).max_abs_norm());
            r[13] = r[13].max(dist(&off(g5g0 * x), &(g5g0 * x * le)));
            let rhs = GAMMA5 * (pg * pv[i] - g * p2) * le * (e / m);
            r[14] = r[14].max(dist(&diag(GAMMA5 * x), &rhs));
            let rhs = g5g0 * x * le * (e * p0 / m);
            r[15] = r[15].max(dist(&off(GAMMA5 * x), &rhs));
        }
    }

    const NAMES: [&str; 16] = [
        "diag_gamma0",
        "diag_gammavec",
        "off_gamma0",
        "off_gammavec",
        "diag_g5_gvec",
        "off_g5_gvec",
        "diag_g5_g0_gvec",
        "off_g5_g0_gvec",
        "diag_g5_pdotg",
        "off_g5_pdotg",
        "diag_g5g0_pdotg",
        "off_g5g0_pdotg",
        "diag_g5g0_x",
        "off_g5g0_x",
        "diag_g5_x",
        "off_g5_x",
    ];
    for (name, res) in NAMES.iter().zip(r) {
        report.push(CheckRecord::from_residual(*name, res, tol, pv));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::on_shell;

    fn mom(p: Real3) -> FourMomentum {
        on_shell(1.0, p).unwrap()
    }

    #[test]
    fn rest_frame_amplitude() {
        let q = mom([0.0; 3]);
        for eps in EnergySign::BOTH {
            let v = amplitude(&q, eps).v;
            let s = std::f64::consts::FRAC_1_SQRT_2;
            let expected = Mat4x2::stack(&(SIGMA2 * s), &(SIGMA2 * (s * eps.value())));
            assert!(dist(&v, &expected) < 1e-15);
        }
        let v = amplitude(&q, EnergySign::Positive);
        assert!(dist(&(v.bar() * v.v), &Mat2::identity()) < 1e-15);
    }

    #[test]
    fn completeness_reproduces_projector() {
        let p = mom([0.0, 0.0, 0.75]);
        let v = amplitude(&p, EnergySign::Positive);
        assert!(dist(&(v.v * v.bar()), &projector(&p, EnergySign::Positive)) < 1e-14);
    }

    #[test]
    fn projector_examples() {
        let q = mom([0.0; 3]);
        let expected = (Mat4::identity() + GAMMA0) * 0.5;
        assert_eq!(projector(&q, EnergySign::Positive), expected);
        let p = mom([1.0, 2.0, 3.0]);
        for eps in EnergySign::BOTH {
            let l = projector(&p, eps);
            assert!(dist(&(l * l), &l) < 1e-13);
            assert!((l.trace() - 2.0).norm() < 1e-14);
        }
    }

    #[test]
    fn constraint_annihilates_sector() {
        let p = mom([0.4, -1.1, 0.2]);
        for eps in EnergySign::BOTH {
            let res = (dirac_constraint_matrix(&p, eps) * amplitude(&p, eps).v).max_abs_norm();
            assert!(res < 1e-14);
        }
        let q = mom([0.0; 3]);
        let v = amplitude(&q, EnergySign::Positive).v;
        assert!(((GAMMA0 - Mat4::identity()) * v).max_abs_norm() < 1e-15);
    }

    #[test]
    fn energy_operator_blocks() {
        let p = mom([0.3, 0.2, -0.9]);
        let h = energy_op();
        for (o, i) in ALL_SECTORS {
            let block = sector_project(&h, &p, o, i).unwrap();
            let expected = if o == i {
                projector(&p, i) * (i.value() * p.p0())
            } else {
                Mat4::zeros()
            };
            assert!(dist(&block, &expected) < 1e-13);
        }
        let tilde = omega_tilde(&h, &p).unwrap();
        let expected = slash(&p.four_vector()) * (p.p0() / p.mass());
        assert!(dist(&tilde, &expected) < 1e-12);
    }

    #[test]
    fn identity_blocks() {
        let p = mom([1.0, -0.5, 2.0]);
        let id = identity_op();
        for (o, i) in ALL_SECTORS {
            let block = spin_block_of(&id, &p, o, i).unwrap();
            let expected = if o == i { Mat2::identity() } else { Mat2::zeros() };
            assert!(dist(&block, &expected) < 1e-13);
        }
        assert!(dist(&omega_tilde(&id, &p).unwrap(), &Mat4::identity()) < 1e-13);
    }

    #[test]
    fn hamiltonian_equivalent_to_energy() {
        let p = mom([0.7, 0.1, -0.4]);
        assert!(operator_equivalent(&dirac_hamiltonian(), &energy_op(), &p, 1e-12));
        assert!(operator_equivalent(&energy_op(), &energy_op(), &p, 1e-15));
        // the representative built from blocks is (p⁰/m) p·γ, not H_D itself
        let tilde = omega_tilde(&dirac_hamiltonian(), &p).unwrap();
        assert!(dist(&tilde, &(slash(&p.four_vector()) * (p.p0() / p.mass()))) < 1e-12);
    }

    #[test]
    fn blocks_from_spin_basis() {
        let p = mom([0.2, 0.9, -1.3]);
        let unit = SectorBlocks::from_fn(|o, i| if o == i { Mat2::identity() } else { Mat2::zeros() });
        let m: Mat4 = dirac_from_spin_blocks::<Mat4>(&unit, &p);
        assert!(dist(&m, &Mat4::identity()) < 1e-13);

        let plus_only = SectorBlocks::from_fn(|o, i| {
            if o == EnergySign::Positive && i == EnergySign::Positive {
                Mat2::identity()
            } else {
                Mat2::zeros()
            }
        });
        let m: Mat4 = dirac_from_spin_blocks::<Mat4>(&plus_only, &p);
        assert!(dist(&m, &projector(&p, EnergySign::Positive)) < 1e-13);
    }

    #[test]
    fn sandwich_identities_hold() {
        for pv in [[0.0, 0.0, 0.75], [1.0, 2.0, 3.0], [-4.0, 0.5, 7.0], [0.0; 3]] {
            let p = mom(pv);
            let amp = verify_amplitude_identities(&p, 1e-12);
            assert!(amp.all_pass(), "{amp:#?}");
            assert_eq!(amp.checks.len(), 15);
            let lam = verify_projector_sandwich_identities(&p, 1e-11);
            assert!(lam.all_pass(), "{lam:#?}");
            assert_eq!(lam.checks.len(), 16);
            let norm = verify_amplitude_normalization(&p, 1e-12);
            assert!(norm.all_pass(), "{norm:#?}");
        }
    }

    #[test]
    fn sandwich_time_component_example() {
        let p = mom([0.0, 0.0, 0.75]);
        for eps in EnergySign::BOTH {
            let v = amplitude(&p, eps);
            let s = v.bar() * GAMMA0 * v.v;
            assert!(dist(&s, &(Mat2::identity() * 1.25)) < 1e-15);
        }
        let q = mom([0.0; 3]);
        let v = amplitude(&q, EnergySign::Negative);
        assert!((v.bar() * GAMMA5 * GAMMA0 * v.v).max_abs_norm() < 1e-15);
    }

    #[test]
    fn cross_vec_matches_definition() {
        let p = [0.3, -1.0, 2.0];
        let s = sigma_vec();
        let c = cross_vec(&p, &s);
        assert!(dist(&c.x, &(s.z * p[1] - s.y * p[2])) < 1e-15);
        assert!(dist(&c.z, &(s.y * p[0] - s.x * p[1])) < 1e-15);
    }
}
