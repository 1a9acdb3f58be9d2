//! `spinlab table2`, `spinlab compare` and `spinlab classify`.

use serde::Serialize;

use super::check::{Meta, LIMIT_TOL};
use super::config::RunConfig;
use super::expr::{parse, Expr};
use super::sampler::{fixed_momenta, Sampler};
use crate::dirac_basis::{equivalence_residual, ALL_SECTORS};
use crate::error::Result;
use crate::kinematics::{EnergySign, FourMomentum};
use crate::linalg::{dist_vec, Mat2, Real3, Vec3Of};
use crate::report::Worst;
use crate::spin_catalog::{
    classify_ansatz, dirac_matrix_closed_form, isotropy_stats, spin_blocks_closed_form, spin_blocks_computed,
    su2_closure_residual, AnsatzCoefficients, OperatorKind, Properties, SectorClassification,
};
use crate::symmetries::{charge_symmetry_residual, limit_directions, nonrel_limit_probe, sector_mixing, LIMIT_RADII};

/// Momenta used to decide the qualitative properties in `table2`.
pub const PROPERTY_SAMPLES: usize = 20;

/// A 2×2 complex matrix as `[[[re, im], [re, im]], [[re, im], [re, im]]]`.
pub type MatrixEntries = [[[f64; 2]; 2]; 2];

fn entries(m: &Mat2) -> MatrixEntries {
    std::array::from_fn(|i| std::array::from_fn(|j| [m[(i, j)].re, m[(i, j)].im]))
}

fn vec_entries(v: &Vec3Of<Mat2>) -> [MatrixEntries; 3] {
    std::array::from_fn(|i| entries(&v[i]))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockComparison {
    pub out: EnergySign,
    #[serde(rename = "in")]
    pub input: EnergySign,
    pub computed: [MatrixEntries; 3],
    pub closed_form: [MatrixEntries; 3],
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table2Row {
    pub kind: OperatorKind,
    pub title: String,
    pub blocks: Vec<BlockComparison>,
    pub expected: Properties,
    pub observed: Properties,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table2Report {
    pub schema_version: u32,
    pub meta: Meta,
    pub reference_momentum: Real3,
    pub rows: Vec<Table2Row>,
}

impl Table2Report {
    pub fn all_as_expected(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.expected == r.observed && r.blocks.iter().all(|b| b.residual <= self.meta.tol))
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_as_expected() {
            0
        } else {
            1
        }
    }
}

/// `(1, 2, 3)/|(1, 2, 3)| · 0.75m`.
pub fn reference_momentum(mass: f64) -> Result<FourMomentum> {
    fixed_momenta(mass).map(|f| f[3])
}

fn observe_properties(kind: OperatorKind, momenta: &[FourMomentum], mass: f64, tol: f64) -> Result<Properties> {
    let mut mixing: f64 = 0.0;
    let mut charge: f64 = 0.0;
    let mut parity: f64 = 0.0;
    let mut iso = [0.0_f64; 2];
    let mut su2 = [0.0_f64; 2];
    let mut sampler = Sampler::new(0, mass, 1.0);
    let directions = sampler.directions(50);
    for p in momenta {
        mixing = mixing.max(sector_mixing(kind, p)?);
        charge = charge.max(charge_symmetry_residual(kind, p)?);
        let blocks = spin_blocks_computed(kind, p)?;
        let mirrored = spin_blocks_computed(kind, &crate::kinematics::parity_map(p))?;
        for eps in EnergySign::BOTH {
            let b = blocks.get(eps, eps);
            parity = parity.max(dist_vec(b, mirrored.get(eps, eps)));
            let k = eps.index();
            let stats = isotropy_stats(b, &directions, kind.name())?;
            iso[k] = iso[k].max(stats.spread);
            su2[k] = su2[k].max(su2_closure_residual(b));
        }
    }
    let mut limit = [false; 2];
    for eps in EnergySign::BOTH {
        limit[eps.index()] =
            nonrel_limit_probe(kind, eps, mass, &limit_directions(), &LIMIT_RADII, LIMIT_TOL)?.well_defined;
    }
    let ok = |r: f64| r <= tol;
    Ok(Properties {
        sector_preserving: ok(mixing),
        pseudovector: ok(parity),
        isotropic: ok(iso[0]) && ok(iso[1]),
        isotropic_positive: ok(iso[0]),
        charge_symmetric: ok(charge),
        su2: ok(su2[0]) && ok(su2[1]),
        nonrel_limit: limit[0] && limit[1],
    })
}

/// For each literature operator: computed and tabulated spin blocks at the
/// reference momentum, their residual, and the property matrix observed on
/// sampled momenta next to the tabulated one.
pub fn cmd_table2(config: &RunConfig) -> Result<Table2Report> {
    config.validate()?;
    let p = reference_momentum(config.mass)?;
    let mut sampler = Sampler::new(config.seed, config.mass, config.max_momentum);
    let mut momenta = fixed_momenta(config.mass)?;
    momenta.extend(sampler.momenta(PROPERTY_SAMPLES.min(config.samples))?);

    let mut rows = Vec::new();
    for kind in OperatorKind::LITERATURE {
        let computed = spin_blocks_computed(kind, &p)?;
        let closed = spin_blocks_closed_form(kind, &p)?;
        let blocks = ALL_SECTORS
            .iter()
            .map(|&(o, i)| BlockComparison {
                out: o,
                input: i,
                computed: vec_entries(computed.get(o, i)),
                closed_form: vec_entries(closed.get(o, i)),
                residual: dist_vec(computed.get(o, i), closed.get(o, i)),
            })
            .collect();
        rows.push(Table2Row {
            kind,
            title: kind.title().to_string(),
            blocks,
            expected: kind.expected_properties(),
            observed: observe_properties(kind, &momenta, config.mass, config.tol)?,
        });
    }
    Ok(Table2Report {
        schema_version: super::check::SCHEMA_VERSION,
        meta: Meta::from_config(config),
        reference_momentum: p.pvec(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SectorVerdict {
    pub out: EnergySign,
    #[serde(rename = "in")]
    pub input: EnergySign,
    pub max_residual: f64,
    pub equivalent: bool,
    pub worst_momentum: Real3,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub schema_version: u32,
    pub meta: Meta,
    pub kind_a: OperatorKind,
    pub kind_b: OperatorKind,
    pub sectors: Vec<SectorVerdict>,
    /// All four sector blocks agree.
    pub equivalent: bool,
    /// Both blocks acting on positive-energy input agree.
    pub equivalent_positive: bool,
}

pub fn cmd_compare(a: OperatorKind, b: OperatorKind, config: &RunConfig) -> Result<CompareReport> {
    config.validate()?;
    let mut sampler = Sampler::new(config.seed, config.mass, config.max_momentum);
    let mut momenta = fixed_momenta(config.mass)?;
    momenta.extend(sampler.momenta(config.samples)?);
    let (oa, ob) = (dirac_matrix_closed_form(a), dirac_matrix_closed_form(b));
    let mut sectors = Vec::new();
    for (o, i) in ALL_SECTORS {
        let mut worst = Worst::default();
        for p in &momenta {
            let r = equivalence_residual(&oa, &ob, p, &[(o, i)]).unwrap_or(f64::NAN);
            worst.observe(r, p.pvec());
        }
        sectors.push(SectorVerdict {
            out: o,
            input: i,
            max_residual: worst.residual,
            equivalent: worst.residual <= config.tol,
            worst_momentum: worst.momentum,
        });
    }
    let equivalent = sectors.iter().all(|s| s.equivalent);
    let equivalent_positive = sectors
        .iter()
        .filter(|s| s.input == EnergySign::Positive)
        .all(|s| s.equivalent);
    Ok(CompareReport {
        schema_version: super::check::SCHEMA_VERSION,
        meta: Meta::from_config(config),
        kind_a: a,
        kind_b: b,
        sectors,
        equivalent,
        equivalent_positive,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    pub meta: Meta,
    pub alpha: String,
    pub beta: String,
    pub radii: Vec<f64>,
    pub sectors: Vec<SectorClassification>,
}

/// Sample radii: `0.75m`, `m` and `samples` seeded radii in `[10⁻³, K]·m`.
pub fn classify_radii(config: &RunConfig) -> Vec<f64> {
    let mut sampler = Sampler::new(config.seed, config.mass, config.max_momentum);
    let m = config.mass;
    let mut radii = vec![0.75 * m, m];
    radii.extend((0..config.samples).map(|_| sampler.uniform(1e-3 * m, config.max_momentum * m)));
    radii
}

pub fn cmd_classify(alpha: &str, beta: &str, config: &RunConfig) -> Result<ClassifyReport> {
    config.validate()?;
    let a: Expr = parse(alpha)?;
    let b: Expr = parse(beta)?;
    let m = config.mass;
    let coefficients = AnsatzCoefficients::new(
        move |r, eps| a.eval(r, eps.value(), m),
        move |r, eps| b.eval(r, eps.value(), m),
    );
    let radii = classify_radii(config);
    let sectors = classify_ansatz(&coefficients, &radii, config.tol)?.to_vec();
    Ok(ClassifyReport {
        schema_version: super::check::SCHEMA_VERSION,
        meta: Meta::from_config(config),
        alpha: alpha.to_string(),
        beta: beta.to_string(),
        radii,
        sectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin_catalog::Family;

    fn small() -> RunConfig {
        RunConfig {
            samples: 5,
            ..RunConfig::default()
        }
    }

    #[test]
    fn table2_matches() {
        let r = cmd_table2(&small()).unwrap();
        assert_eq!(r.rows.len(), 7);
        for row in &r.rows {
            assert_eq!(row.expected, row.observed, "{}", row.kind);
        }
        assert_eq!(r.exit_code(), 0);
        let nw = &r.rows[1];
        assert!(nw.blocks.iter().all(|b| b.residual < 1e-14));
        assert!(!r.rows[0].observed.sector_preserving);
        assert!(!r.rows[4].observed.isotropic);
    }

    #[test]
    fn compare_examples() {
        let c = cmd_compare(OperatorKind::NW, OperatorKind::FW, &small()).unwrap();
        assert!(c.equivalent);
        let c = cmd_compare(OperatorKind::Pryce, OperatorKind::SIII, &small()).unwrap();
        assert!(c.equivalent);
        let c = cmd_compare(OperatorKind::NW, OperatorKind::Dirac, &small()).unwrap();
        assert!(!c.equivalent && !c.equivalent_positive);
        let c = cmd_compare(OperatorKind::Chakrabarti, OperatorKind::NW, &small()).unwrap();
        assert!(!c.equivalent && c.equivalent_positive);
    }

    #[test]
    fn classify_examples() {
        let fam = |a: &str, b: &str| cmd_classify(a, b, &small()).unwrap().sectors[0].family;
        assert_eq!(fam("0.5", "0"), Family::FamilyI);
        assert_eq!(fam("-0.5", "1/r^2"), Family::FamilyII);
        assert_eq!(fam("0.5", "1"), Family::NotIsotropic);
        assert!(cmd_classify("0.5 +", "0", &small()).is_err());
    }
}
