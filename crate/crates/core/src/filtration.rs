//! Syzygy filtrations and the syzygy filtered algebra `ε(Λ)`.
//!
//! The socles of the indecomposable projectives cut the vertex cycle into
//! arcs `Δ_1, …, Δ_r`. Every second syzygy is filtered by these arcs and the
//! filtered modules are exactly the modules over `ε(Λ) = End(⊕_{i∈S'} P_i)`,
//! whose simples are the arcs. The Kupisch series of `ε(Λ)` therefore counts
//! how many arcs each projective `P_i`, `i ∈ S'`, spans.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::module::UniserialModule;
use crate::relations::relation_starts;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationData {
    /// `S(Λ)`: socle vertices of the indecomposable projectives.
    pub socles: Vec<usize>,
    /// `S'(Λ)`: successors of the socle vertices.
    pub shifted: Vec<usize>,
    /// `B(Λ)`: arcs from each shifted vertex to the next socle, by top vertex.
    pub arcs: Vec<UniserialModule>,
    /// `∇`: arcs from the successor of each relation start to the next start.
    pub nabla: Vec<UniserialModule>,
}

/// Cuts the cycle after every vertex of `cuts`; one arc starts after each cut.
fn cut_cycle(algebra: &Algebra, cuts: &BTreeSet<usize>) -> Vec<UniserialModule> {
    let n = algebra.n();
    let cuts: Vec<usize> = cuts.iter().copied().collect();
    let mut arcs: Vec<UniserialModule> = cuts
        .iter()
        .enumerate()
        .map(|(i, &end_prev)| {
            let next_end = cuts[(i + 1) % cuts.len()];
            let top = algebra.shift(end_prev, 1);
            let length = (next_end + n - end_prev - 1) % n + 1;
            UniserialModule::new(top, length)
        })
        .collect();
    arcs.sort();
    arcs
}

pub fn filtration_data(algebra: &Algebra) -> Result<FiltrationData> {
    if !algebra.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let socles: BTreeSet<usize> = (1..=algebra.n())
        .map(|i| algebra.socle(algebra.projective(i)))
        .collect();
    let shifted: BTreeSet<usize> = socles.iter().map(|&s| algebra.shift(s, 1)).collect();
    let starts: BTreeSet<usize> = relation_starts(algebra).into_iter().collect();
    Ok(FiltrationData {
        arcs: cut_cycle(algebra, &socles),
        nabla: cut_cycle(algebra, &starts),
        socles: socles.into_iter().collect(),
        shifted: shifted.into_iter().collect(),
    })
}

/// Position of a new vertex of `ε(Λ)`: component index and 1-based vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub component: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonResult {
    /// One cyclic algebra, or linear blocks when some arc is projective.
    pub components: Vec<Algebra>,
    /// The arcs of `B(Λ)`; arc `j` becomes the simple at `placement[j]`.
    pub arcs: Vec<UniserialModule>,
    pub placement: Vec<Placement>,
    /// Arc indices `j` with `Δ_j` projective; the quiver is cut after them.
    pub breaks: Vec<usize>,
}

impl EpsilonResult {
    pub fn is_cyclic(&self) -> bool {
        self.breaks.is_empty()
    }

    /// The single cyclic component, if there is one.
    pub fn cyclic(&self) -> Option<&Algebra> {
        match self.components.as_slice() {
            [a] if a.is_cyclic() => Some(a),
            _ => None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(Algebra::n).sum()
    }

    /// Aggregate over components: the maximum.
    pub fn max_over<F: Fn(&Algebra) -> ExtNat>(&self, f: F) -> ExtNat {
        self.components.iter().map(f).max().unwrap_or(ExtNat::ZERO)
    }

    /// Aggregate over components: the minimum.
    pub fn min_over<F: Fn(&Algebra) -> ExtNat>(&self, f: F) -> ExtNat {
        self.components
            .iter()
            .map(f)
            .min()
            .unwrap_or(ExtNat::Infinite)
    }
}

/// Arc count spanned by `P_{top(Δ_j)}`, walking forward from arc `j`.
fn arc_walk(algebra: &Algebra, arcs: &[UniserialModule], j: usize) -> usize {
    let need = algebra.c(arcs[j].top);
    let mut used = 0;
    let mut count = 0;
    while used < need {
        used += arcs[(j + count) % arcs.len()].length;
        count += 1;
    }
    assert_eq!(
        used, need,
        "P_{} does not end on an arc boundary over {algebra}",
        arcs[j].top
    );
    count
}

/// `ε(Λ)` by Kupisch arithmetic.
///
/// Self-injective algebras are returned unchanged, since there every simple
/// is an arc and every projective spans `c` arcs.
pub fn epsilon(algebra: &Algebra) -> Result<EpsilonResult> {
    let data = filtration_data(algebra)?;
    let arcs = data.arcs;
    let r = arcs.len();
    let counts: Vec<usize> = (0..r).map(|j| arc_walk(algebra, &arcs, j)).collect();
    let breaks: Vec<usize> = (0..r).filter(|&j| algebra.is_projective(arcs[j])).collect();

    let mut placement = vec![
        Placement {
            component: 0,
            vertex: 0
        };
        r
    ];
    let components = if breaks.is_empty() {
        for (j, p) in placement.iter_mut().enumerate() {
            *p = Placement {
                component: 0,
                vertex: j + 1,
            };
        }
        vec![Algebra::cyclic(&counts)?]
    } else {
        let mut components = Vec::new();
        let first = (breaks[0] + 1) % r;
        let mut block = Vec::new();
        for step in 0..r {
            let j = (first + step) % r;
            placement[j] = Placement {
                component: components.len(),
                vertex: block.len() + 1,
            };
            block.push(counts[j]);
            if breaks.contains(&j) {
                components.push(Algebra::linear(&block)?);
                block.clear();
            }
        }
        components
    };
    Ok(EpsilonResult {
        components,
        arcs,
        placement,
        breaks,
    })
}

/// Why an ε-chain stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainEnd {
    SelfInjective,
    Linear,
    MaxSteps,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonChain {
    pub levels: Vec<EpsilonResult>,
    pub end: ChainEnd,
}

impl EpsilonChain {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn truncated(&self) -> bool {
        self.end == ChainEnd::MaxSteps
    }
}

/// Iterates `ε` while the current algebra is cyclic and not self-injective.
pub fn epsilon_chain(algebra: &Algebra, max_steps: usize) -> Result<EpsilonChain> {
    if !algebra.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let mut levels: Vec<EpsilonResult> = Vec::new();
    let mut current = algebra.clone();
    let end = loop {
        if current.is_self_injective() {
            break ChainEnd::SelfInjective;
        }
        if levels.len() == max_steps {
            break ChainEnd::MaxSteps;
        }
        let next = epsilon(&current)?;
        let cyclic = next.cyclic().cloned();
        levels.push(next);
        match cyclic {
            Some(a) => current = a,
            None => break ChainEnd::Linear,
        }
    };
    Ok(EpsilonChain { levels, end })
}

/// φ-dimension through the reduction: the global dimension when finite,
/// otherwise twice the number of steps down to a self-injective algebra.
pub fn phi_dim_fast(algebra: &Algebra) -> Result<ExtNat> {
    let gldim = algebra.gldim();
    if gldim.is_finite() {
        return Ok(gldim);
    }
    let chain = epsilon_chain(algebra, algebra.n())?;
    debug_assert_eq!(
        chain.end,
        ChainEnd::SelfInjective,
        "infinite gldim chain over {algebra}"
    );
    Ok(ExtNat::Finite(2 * chain.depth()))
}

/// A module over one component of `ε(Λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EpsilonModule {
    pub component: usize,
    pub module: UniserialModule,
}

/// The `ε(Λ)`-module corresponding to a `B(Λ)`-filtered `Λ`-module, or
/// `None` when `M` is not filtered (top outside `S'` or socle outside `S`).
pub fn restrict_to_epsilon(
    algebra: &Algebra,
    eps: &EpsilonResult,
    m: UniserialModule,
) -> Option<EpsilonModule> {
    let j = eps.arcs.iter().position(|a| a.top == m.top)?;
    let mut used = 0;
    let mut count = 0;
    while used < m.length {
        let k = (j + count) % eps.arcs.len();
        if count > 0 && eps.placement[k].component != eps.placement[j].component {
            return None;
        }
        used += eps.arcs[k].length;
        count += 1;
    }
    if used != m.length {
        return None;
    }
    debug_assert!(eps.socle_matches(algebra, m));
    let at = eps.placement[j];
    Some(EpsilonModule {
        component: at.component,
        module: UniserialModule::new(at.vertex, count),
    })
}

impl EpsilonResult {
    fn socle_matches(&self, algebra: &Algebra, m: UniserialModule) -> bool {
        let soc = algebra.socle(m);
        self.arcs.iter().any(|a| algebra.socle(*a) == soc)
    }
}

/// `η(Λ)`, the cosyzygy filtered algebra, obtained as `ε` of the opposite
/// algebra read back through duality. Its arcs are the `∇` modules.
pub fn eta(algebra: &Algebra) -> Result<EpsilonResult> {
    let op = algebra.opposite();
    let e = epsilon(&op)?;
    let components: Vec<Algebra> = e.components.iter().map(Algebra::opposite).collect();
    let arcs = e.arcs.iter().map(|&a| op.dual(a)).collect();
    let placement = e
        .placement
        .iter()
        .map(|p| Placement {
            component: p.component,
            vertex: components[p.component].reverse_vertex(p.vertex),
        })
        .collect();
    Ok(EpsilonResult {
        components,
        arcs,
        placement,
        breaks: e.breaks,
    })
}

/// Kind-aware equality check of `ε(Λ)` against `Λ`, up to rotation.
pub fn epsilon_fixes(algebra: &Algebra, eps: &EpsilonResult) -> bool {
    match eps.cyclic() {
        Some(a) => algebra.kind() == Kind::Cyclic && a.same_up_to_rotation(algebra),
        None => false,
    }
}
