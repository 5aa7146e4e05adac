//! JSON documents and text tables for the commands.

use std::fmt::Write;

use anyhow::Result;
use nakayama_core::filtration::{epsilon, epsilon_chain, filtration_data, ChainEnd};
use nakayama_core::relations::relations_from_kupisch;
use nakayama_core::text::format_list;
use nakayama_core::verify::VerificationReport;
use nakayama_core::{Algebra, ExtNat, InvariantReport, Kind, Side, Step, UniserialModule};
use serde::Serialize;

/// `5,5,6,6,6` or `linear:3,2,1`, the form the parsers read back.
pub fn plain(a: &Algebra) -> String {
    match a.kind() {
        Kind::Cyclic => format_list(a.kupisch()),
        Kind::Linear => format!("linear:{}", format_list(a.kupisch())),
    }
}

fn components(list: &[Algebra]) -> String {
    list.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" x ")
}

/// `t:l [S_t..S_soc]`.
pub fn module(a: &Algebra, m: UniserialModule) -> String {
    let soc = a.socle(m);
    if m.length == 1 {
        format!("{m} [S_{soc}]")
    } else {
        format!("{m} [S_{}..S_{soc}]", m.top)
    }
}

fn simples(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(|v| format!("S_{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn table(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct ChainSummary {
    pub depth: usize,
    pub end: ChainEnd,
    pub levels: Vec<Vec<Algebra>>,
}

#[derive(Serialize)]
pub struct Analysis {
    #[serde(flatten)]
    pub invariants: InvariantReport,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Vec<Algebra>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainSummary>,
}

impl Analysis {
    pub fn of(a: &Algebra) -> Result<Self> {
        let (relations, eps, chain) = if a.is_cyclic() {
            let chain = epsilon_chain(a, a.n())?;
            (
                Some(relations_from_kupisch(a)?.shorthand()),
                Some(epsilon(a)?.components),
                Some(ChainSummary {
                    depth: chain.depth(),
                    end: chain.end,
                    levels: chain.levels.into_iter().map(|l| l.components).collect(),
                }),
            )
        } else {
            (None, None, None)
        };
        Ok(Analysis {
            invariants: a.report(),
            dimension: a.dimension(),
            relations,
            epsilon: eps,
            chain,
        })
    }

    pub fn table(&self) -> String {
        let r = &self.invariants;
        let alg = Algebra::new(r.kind, r.kupisch.clone()).expect("report of a valid algebra");
        let mut rows: Vec<(&str, String)> = vec![
            ("algebra", alg.to_string()),
            ("vertices", alg.n().to_string()),
            ("dimension", self.dimension.to_string()),
        ];
        if let Some(rel) = &self.relations {
            rows.push(("relations", rel.clone()));
        }
        rows.extend([
            ("r", r.r.to_string()),
            ("self_injective", r.self_injective.to_string()),
            ("phi_dim", r.phi_dim.to_string()),
            ("phi_dim_op", r.phi_dim_op.to_string()),
            ("findim", r.findim.to_string()),
            ("findim_op", r.findim_op.to_string()),
            ("gldim", r.gldim.to_string()),
            ("gorenstein", r.gorenstein.to_string()),
            ("gordim", r.gordim.to_string()),
            ("domdim", r.domdim.to_string()),
            ("m", r.m.to_string()),
        ]);
        if let Some(e) = &self.epsilon {
            rows.push(("epsilon", components(e)));
        }
        if let Some(c) = &self.chain {
            let end = serde_json::to_value(c.end).expect("plain enum");
            rows.push((
                "chain_depth",
                format!("{} ({})", c.depth, end.as_str().unwrap_or("")),
            ));
        }
        let cells: Vec<Vec<String>> = rows
            .into_iter()
            .map(|(k, v)| vec![k.to_string(), v])
            .collect();
        table(&cells)
    }
}

#[derive(Serialize)]
pub struct ChainRow {
    pub level: usize,
    pub algebra: Vec<Algebra>,
    pub socles: Vec<usize>,
    pub shifted: Vec<usize>,
    pub arcs: Vec<UniserialModule>,
    pub phi_dim: ExtNat,
}

/// One row for the algebra and one per reduction step.
pub fn chain_rows(a: &Algebra, steps: usize) -> Result<Vec<ChainRow>> {
    let chain = epsilon_chain(a, steps)?;
    let mut levels = vec![vec![a.clone()]];
    levels.extend(chain.levels.into_iter().map(|l| l.components));
    levels
        .into_iter()
        .enumerate()
        .map(|(level, algebra)| {
            let phi_dim = algebra
                .iter()
                .map(Algebra::phi_dim)
                .max()
                .unwrap_or(ExtNat::ZERO);
            let (socles, shifted, arcs) = match algebra.as_slice() {
                [c] if c.is_cyclic() => {
                    let d = filtration_data(c)?;
                    (d.socles, d.shifted, d.arcs)
                }
                _ => Default::default(),
            };
            Ok(ChainRow {
                level,
                algebra,
                socles,
                shifted,
                arcs,
                phi_dim,
            })
        })
        .collect()
}

pub fn chain_table(rows: &[ChainRow]) -> String {
    let mut cells = vec![["level", "kupisch", "S", "S'", "B", "phi_dim"]
        .map(String::from)
        .to_vec()];
    for row in rows {
        let arcs = match row.algebra.as_slice() {
            [c] if c.is_cyclic() => row
                .arcs
                .iter()
                .map(|&m| module(c, m))
                .collect::<Vec<_>>()
                .join(", "),
            _ => "-".into(),
        };
        let dash = |s: String| if s.is_empty() { "-".to_string() } else { s };
        cells.push(vec![
            row.level.to_string(),
            components(&row.algebra),
            dash(simples(&row.socles)),
            dash(simples(&row.shifted)),
            arcs,
            row.phi_dim.to_string(),
        ]);
    }
    table(&cells)
}

#[derive(Serialize)]
pub struct ResolutionStep {
    pub step: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<UniserialModule>,
    /// Projective cover or injective envelope of the module.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<UniserialModule>,
    /// Set on the last row when the walk returns to an earlier module.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_to: Option<usize>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub zero: bool,
}

#[derive(Serialize)]
pub struct Resolution {
    pub module: UniserialModule,
    pub direction: Side,
    pub dimension: ExtNat,
    pub steps: Vec<ResolutionStep>,
}

impl Resolution {
    pub fn of(a: &Algebra, m: UniserialModule, side: Side, max: Option<usize>) -> Self {
        let cover = |x: UniserialModule| match side {
            Side::Projective => a.projective_cover(x),
            Side::Injective => a.injective_envelope(x),
        };
        let mut steps = vec![ResolutionStep {
            step: 0,
            module: Some(m),
            cover: Some(cover(m)),
            cycle_to: None,
            zero: false,
        }];
        for (i, s) in a.resolution(m, side, max).into_iter().enumerate() {
            let step = i + 1;
            steps.push(match s {
                Step::Module(x) => ResolutionStep {
                    step,
                    module: Some(x),
                    cover: Some(cover(x)),
                    cycle_to: None,
                    zero: false,
                },
                Step::Cycle(at) => ResolutionStep {
                    step,
                    module: None,
                    cover: None,
                    cycle_to: Some(at),
                    zero: false,
                },
                Step::Zero => ResolutionStep {
                    step,
                    module: None,
                    cover: None,
                    cycle_to: None,
                    zero: true,
                },
            });
        }
        Resolution {
            module: m,
            direction: side,
            dimension: a.homological_dim(m, side),
            steps,
        }
    }

    pub fn table(&self, a: &Algebra) -> String {
        let (cover_head, prefix) = match self.direction {
            Side::Projective => ("cover", "P"),
            Side::Injective => ("envelope", "I"),
        };
        let mut cells = vec![vec!["step".to_string(), "module".into(), cover_head.into()]];
        for s in &self.steps {
            let (m, c) = match (s.module, s.cover, s.cycle_to) {
                (Some(m), Some(c), _) => {
                    let vertex = match self.direction {
                        Side::Projective => c.top,
                        Side::Injective => a.socle(c),
                    };
                    let same = if c == m { " (itself)" } else { "" };
                    (
                        module(a, m),
                        format!("{prefix}_{vertex} = {}{same}", module(a, c)),
                    )
                }
                (_, _, Some(at)) => (format!("cycle to step {at}"), String::new()),
                _ => ("0".to_string(), String::new()),
            };
            cells.push(vec![s.step.to_string(), m, c]);
        }
        let dim = match self.direction {
            Side::Projective => "pdim",
            Side::Injective => "injdim",
        };
        format!(
            "{}{dim} {} = {}\n",
            table(&cells),
            self.module,
            self.dimension
        )
    }
}

pub fn verify_table(report: &VerificationReport) -> String {
    let mut cells = vec![["check", "checked", "vacuous", "violations", "statement"]
        .map(String::from)
        .to_vec()];
    let mut ids: Vec<&String> = report.theorems.keys().collect();
    ids.sort_by_key(|id| {
        (
            id.trim_start_matches('T')
                .trim_end_matches('p')
                .parse::<usize>()
                .unwrap_or(0),
            id.len(),
        )
    });
    for id in ids {
        let t = &report.theorems[id];
        cells.push(vec![
            id.clone(),
            t.checked.to_string(),
            t.vacuous.to_string(),
            t.violations.len().to_string(),
            t.statement.clone(),
        ]);
    }
    let mut out = table(&cells);
    for (id, t) in &report.theorems {
        for v in &t.violations {
            writeln!(
                out,
                "VIOLATION {id} {}: {}",
                plain(&Algebra::new(v.kind, v.kupisch.clone()).expect("valid")),
                v.detail
            )
            .unwrap();
        }
    }
    for m in &report.oracles.mismatches {
        writeln!(
            out,
            "MISMATCH {} {}: {}",
            m.oracle,
            format_list(&m.kupisch),
            m.detail
        )
        .unwrap();
    }
    out + &verify_summary(report)
}

pub fn verify_summary(report: &VerificationReport) -> String {
    format!(
        "enumerated {}, oracle runs {}, spot {}, violations {}, mismatches {}\n",
        report.enumerated,
        report.oracles.checked,
        report.spot.count,
        report.violation_count(),
        report.mismatch_count()
    )
}
