//! Algebra-level homological invariants.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind};
use crate::extnat::ExtNat;
use crate::module::{ModuleSet, Side, UniserialModule};
use crate::relations::relation_count;

/// Ranks of `L^t⟨add M⟩` for `t = 0, 1, …` up to the first repeated set,
/// and the index `phi` at which they reach their final value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankSequence {
    pub ranks: Vec<usize>,
    pub phi: usize,
}

/// Igusa–Todorov φ of the direct sum of `modules`.
///
/// Indecomposables form a basis of the free group on non-projective
/// classes and `Ω` sends each to one indecomposable or to zero, so the
/// rank of `L^t⟨add M⟩` is the size of the set of non-projective `t`-th
/// syzygies. The set sequence is eventually periodic and its sizes never
/// increase; φ is the first index whose size equals the size on the cycle.
/// With `Side::Injective` this computes the dual φ via `Σ`.
pub fn phi(modules: &ModuleSet<'_>, side: Side) -> RankSequence {
    let algebra = modules.algebra();
    let live = |m: &UniserialModule| !algebra.is_terminal(*m, side);
    let mut current: Vec<UniserialModule> =
        modules.members().iter().copied().filter(live).collect();
    let mut history: Vec<Vec<UniserialModule>> = Vec::new();
    let mut index: HashMap<Vec<UniserialModule>, usize> = HashMap::new();
    let limit = loop {
        if let Some(&k) = index.get(&current) {
            break history[k].len();
        }
        index.insert(current.clone(), history.len());
        let next: BTreeSet<UniserialModule> = current
            .iter()
            .filter_map(|&m| algebra.step(m, side))
            .filter(live)
            .collect();
        history.push(std::mem::replace(&mut current, next.into_iter().collect()));
    };
    let ranks: Vec<usize> = history.iter().map(Vec::len).collect();
    let phi = ranks
        .iter()
        .position(|&r| r == limit)
        .expect("limit rank occurs in history");
    RankSequence { ranks, phi }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gorenstein {
    pub is_gorenstein: bool,
    /// `Infinite` when some injective has infinite projective dimension.
    pub gordim: ExtNat,
}

/// Dominant dimension from the number of leading projective terms in a
/// minimal injective coresolution: `sup{n | I_0..I_n projective} + 1`,
/// and 0 when `I_0` is not projective. `None` means every term is projective.
pub fn dominant_from_run(run: Option<usize>) -> ExtNat {
    match run {
        None => ExtNat::Infinite,
        Some(0) => ExtNat::ZERO,
        Some(k) => ExtNat::Finite((k - 1) + 1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub kind: Kind,
    pub kupisch: Vec<usize>,
    pub r: usize,
    pub phi_dim: ExtNat,
    pub phi_dim_op: ExtNat,
    pub findim: ExtNat,
    pub findim_op: ExtNat,
    pub gldim: ExtNat,
    pub gorenstein: bool,
    pub gordim: ExtNat,
    pub domdim: ExtNat,
    pub m: ExtNat,
    pub self_injective: bool,
}

impl Algebra {
    pub fn phi_sequence(&self, side: Side) -> RankSequence {
        phi(&ModuleSet::all(self), side)
    }

    /// φ-dimension, attained on the sum of all indecomposables.
    pub fn phi_dim(&self) -> ExtNat {
        ExtNat::Finite(self.phi_sequence(Side::Projective).phi)
    }

    /// Right φ-dimension, built from cosyzygies.
    pub fn phi_dim_op(&self) -> ExtNat {
        ExtNat::Finite(self.phi_sequence(Side::Injective).phi)
    }

    fn finitistic(&self, side: Side) -> ExtNat {
        self.indecomposables()
            .into_iter()
            .map(|m| self.homological_dim(m, side))
            .filter(|d| d.is_finite())
            .max()
            .unwrap_or(ExtNat::ZERO)
    }

    pub fn findim(&self) -> ExtNat {
        self.finitistic(Side::Projective)
    }

    /// Sup of finite injective dimensions.
    pub fn findim_op(&self) -> ExtNat {
        self.finitistic(Side::Injective)
    }

    pub fn simple_pdims(&self) -> Vec<ExtNat> {
        (1..=self.n()).map(|v| self.pdim(self.simple(v))).collect()
    }

    pub fn gldim(&self) -> ExtNat {
        self.simple_pdims()
            .into_iter()
            .max()
            .unwrap_or(ExtNat::ZERO)
    }

    pub fn gorenstein(&self) -> Gorenstein {
        let gordim = (1..=self.n())
            .map(|s| self.pdim(self.injective(s)))
            .max()
            .unwrap_or(ExtNat::ZERO);
        Gorenstein {
            is_gorenstein: gordim.is_finite(),
            gordim,
        }
    }

    /// Leading projective terms in the minimal injective coresolution of
    /// `P`; `None` if they never stop.
    pub fn dominant_run(&self, projective: UniserialModule) -> Option<usize> {
        let mut seen = BTreeSet::from([projective]);
        let mut cur = projective;
        let mut run = 0;
        loop {
            if !self.is_projective(self.injective_envelope(cur)) {
                return Some(run);
            }
            run += 1;
            cur = self.cosyzygy(cur)?;
            if !seen.insert(cur) {
                return None;
            }
        }
    }

    /// Dominant dimension of the regular module: the minimum over the
    /// indecomposable projectives.
    pub fn domdim(&self) -> ExtNat {
        (1..=self.n())
            .map(|i| dominant_from_run(self.dominant_run(self.projective(i))))
            .min()
            .unwrap_or(ExtNat::Infinite)
    }

    /// Least `m >= 1` such that some simple has projective dimension `2m`.
    pub fn even_pdim_parameter(&self) -> ExtNat {
        self.simple_pdims()
            .into_iter()
            .filter_map(ExtNat::finite)
            .filter(|&d| d >= 2 && d % 2 == 0)
            .map(|d| d / 2)
            .min()
            .map_or(ExtNat::Infinite, ExtNat::Finite)
    }

    pub fn report(&self) -> InvariantReport {
        let gor = self.gorenstein();
        InvariantReport {
            kind: self.kind(),
            kupisch: self.kupisch().to_vec(),
            r: relation_count(self),
            phi_dim: self.phi_dim(),
            phi_dim_op: self.phi_dim_op(),
            findim: self.findim(),
            findim_op: self.findim_op(),
            gldim: self.gldim(),
            gorenstein: gor.is_gorenstein,
            gordim: gor.gordim,
            domdim: self.domdim(),
            m: self.even_pdim_parameter(),
            self_injective: self.is_self_injective(),
        }
    }
}
