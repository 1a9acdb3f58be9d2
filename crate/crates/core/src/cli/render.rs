//! JSON and Markdown renderings of the command reports.

use std::fmt::Write;

use serde::Serialize;

use super::check::Report;
use super::commands::{ClassifyReport, CompareReport, Table2Report};
use super::config::Format;
use crate::spin_catalog::Properties;

pub trait Markdown {
    fn markdown(&self) -> String;
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports contain only serializable data");
    s.push('\n');
    s
}

pub fn render<T: Serialize + Markdown>(value: &T, format: Format) -> String {
    match format {
        Format::Json => json(value),
        Format::Markdown => value.markdown(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn vec3(v: &[f64; 3]) -> String {
    format!("({:.4}, {:.4}, {:.4})", v[0], v[1], v[2])
}

impl Markdown for Report {
    fn markdown(&self) -> String {
        let m = &self.meta;
        let mut s = String::new();
        let _ = writeln!(s, "# spinlab check\n");
        let _ = writeln!(
            s,
            "mass {} · samples {} · seed {} · tol {:e} · prng {}\n",
            m.mass, m.samples, m.seed, m.tol, m.prng
        );
        let verdict = if self.all_as_expected() {
            "all checks as expected"
        } else {
            "UNEXPECTED VERDICTS"
        };
        let _ = writeln!(s, "**{verdict}**\n");
        for suite in &self.suites {
            let _ = writeln!(s, "## {}\n", suite.suite);
            let _ = writeln!(s, "| check | kind | max residual | pass | expected | worst momentum |");
            let _ = writeln!(s, "|---|---|---|---|---|---|");
            for c in &suite.checks {
                let flag = if c.as_expected() { "" } else { " ⚠" };
                let _ = writeln!(
                    s,
                    "| {} | {} | {:.3e} | {} | {}{} | {} |",
                    c.name,
                    c.kind.as_deref().unwrap_or(""),
                    c.max_residual,
                    yes_no(c.pass),
                    if c.expected_pass { "pass" } else { "fail" },
                    flag,
                    vec3(&c.worst_momentum)
                );
            }
            s.push('\n');
        }
        s
    }
}

fn property_cells(p: &Properties) -> [bool; 7] {
    [
        p.sector_preserving,
        p.pseudovector,
        p.isotropic,
        p.isotropic_positive,
        p.charge_symmetric,
        p.su2,
        p.nonrel_limit,
    ]
}

impl Markdown for Table2Report {
    fn markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# spinlab table2\n");
        let _ = writeln!(s, "reference momentum {}\n", vec3(&self.reference_momentum));
        let _ = writeln!(s, "## Spin-basis blocks: computed vs closed form\n");
        let _ = writeln!(s, "| operator | ++ | +- | -+ | -- |");
        let _ = writeln!(s, "|---|---|---|---|---|");
        for row in &self.rows {
            let cells: Vec<String> = row.blocks.iter().map(|b| format!("{:.2e}", b.residual)).collect();
            let _ = writeln!(s, "| {} | {} |", row.title, cells.join(" | "));
        }
        let _ = writeln!(s, "\n## Properties (observed / expected)\n");
        let _ = writeln!(
            s,
            "| operator | sector-preserving | pseudo-vector | isotropic | isotropic (+) | charge-symmetric | su(2) | limit |"
        );
        let _ = writeln!(s, "|---|---|---|---|---|---|---|---|");
        for row in &self.rows {
            let obs = property_cells(&row.observed);
            let exp = property_cells(&row.expected);
            let cells: Vec<String> = obs
                .iter()
                .zip(exp)
                .map(|(o, e)| {
                    if *o == e {
                        yes_no(*o).to_string()
                    } else {
                        format!("{} ⚠ (table: {})", yes_no(*o), yes_no(e))
                    }
                })
                .collect();
            let _ = writeln!(s, "| {} | {} |", row.title, cells.join(" | "));
        }
        s
    }
}

impl Markdown for CompareReport {
    fn markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# spinlab compare {} {}\n", self.kind_a, self.kind_b);
        let _ = writeln!(s, "| sector (out,in) | max residual | equivalent | worst momentum |");
        let _ = writeln!(s, "|---|---|---|---|");
        for v in &self.sectors {
            let _ = writeln!(
                s,
                "| {}{} | {:.3e} | {} | {} |",
                v.out,
                v.input,
                v.max_residual,
                yes_no(v.equivalent),
                vec3(&v.worst_momentum)
            );
        }
        let _ = writeln!(
            s,
            "\nequivalent: {} · equivalent on positive-energy input: {}",
            yes_no(self.equivalent),
            yes_no(self.equivalent_positive)
        );
        s
    }
}

impl Markdown for ClassifyReport {
    fn markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# spinlab classify\n");
        let _ = writeln!(
            s,
            "alpha = `{}`, beta = `{}` over {} radii\n",
            self.alpha,
            self.beta,
            self.radii.len()
        );
        let _ = writeln!(s, "| sector | family | max abs(beta) | max abs(r^2 beta + 2 alpha) |");
        let _ = writeln!(s, "|---|---|---|---|");
        for c in &self.sectors {
            let _ = writeln!(
                s,
                "| {} | {} | {:.3e} | {:.3e} |",
                c.eps, c.family, c.residual_i, c.residual_ii
            );
        }
        s
    }
}
