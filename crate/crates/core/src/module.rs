//! Uniserial module calculus.
//!
//! Every indecomposable module over a Nakayama algebra is uniserial and is
//! determined by its top vertex and composition length. Syzygies, cosyzygies
//! and resolutions all reduce to interval arithmetic on those two numbers.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;

/// The uniserial module `M(top, length)` with composition factors
/// `S_top, S_{top+1}, …, S_{top+length-1}` read from top to socle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct UniserialModule {
    pub top: usize,
    pub length: usize,
}

impl UniserialModule {
    pub const fn new(top: usize, length: usize) -> Self {
        UniserialModule { top, length }
    }
}

impl fmt::Display for UniserialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.top, self.length)
    }
}

/// Which resolution a computation walks: projective resolutions use `Ω`
/// and stop at projectives, injective coresolutions use `Σ` and stop at
/// injectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Projective,
    Injective,
}

/// One step of a (co)resolution walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Module(UniserialModule),
    Zero,
    /// The module repeats the one found at the given earlier step.
    Cycle(usize),
}

impl Algebra {
    /// Checked constructor: `1 <= length <= c_top`.
    pub fn module(&self, top: usize, length: usize) -> Result<UniserialModule> {
        if (1..=self.n()).contains(&top) && (1..=self.c(top)).contains(&length) {
            Ok(UniserialModule { top, length })
        } else {
            Err(Error::InvalidModule { top, length })
        }
    }

    pub fn contains(&self, m: UniserialModule) -> bool {
        (1..=self.n()).contains(&m.top) && (1..=self.c(m.top)).contains(&m.length)
    }

    pub fn socle(&self, m: UniserialModule) -> usize {
        self.shift(m.top, m.length as isize - 1)
    }

    pub fn simple(&self, vertex: usize) -> UniserialModule {
        UniserialModule::new(vertex, 1)
    }

    pub fn projective(&self, vertex: usize) -> UniserialModule {
        UniserialModule::new(vertex, self.c(vertex))
    }

    /// The injective envelope `I_s` of the simple `S_s`.
    pub fn injective(&self, socle: usize) -> UniserialModule {
        let len = self.injective_length(socle);
        UniserialModule::new(self.shift(socle, -(len as isize - 1)), len)
    }

    pub fn is_projective(&self, m: UniserialModule) -> bool {
        m.length == self.c(m.top)
    }

    pub fn is_injective(&self, m: UniserialModule) -> bool {
        m.length == self.injective_length(self.socle(m))
    }

    pub fn projective_cover(&self, m: UniserialModule) -> UniserialModule {
        self.projective(m.top)
    }

    pub fn injective_envelope(&self, m: UniserialModule) -> UniserialModule {
        self.injective(self.socle(m))
    }

    /// `Ω M`, the kernel of `P_top ↠ M`.
    pub fn syzygy(&self, m: UniserialModule) -> Option<UniserialModule> {
        let c = self.c(m.top);
        (m.length < c)
            .then(|| UniserialModule::new(self.shift(m.top, m.length as isize), c - m.length))
    }

    /// `Σ M`, the cokernel of `M ↪ I(soc M)`.
    pub fn cosyzygy(&self, m: UniserialModule) -> Option<UniserialModule> {
        let env = self.injective_envelope(m);
        (m.length < env.length).then(|| UniserialModule::new(env.top, env.length - m.length))
    }

    pub fn is_terminal(&self, m: UniserialModule, side: Side) -> bool {
        match side {
            Side::Projective => self.is_projective(m),
            Side::Injective => self.is_injective(m),
        }
    }

    pub fn step(&self, m: UniserialModule, side: Side) -> Option<UniserialModule> {
        match side {
            Side::Projective => self.syzygy(m),
            Side::Injective => self.cosyzygy(m),
        }
    }

    /// The walk `M, ΩM, Ω²M, …` (or with `Σ`), stopping at zero, at the
    /// first repeated module, or after `max` steps.
    pub fn resolution(&self, m: UniserialModule, side: Side, max: Option<usize>) -> Vec<Step> {
        let mut seen = vec![m];
        let mut out = Vec::new();
        let mut cur = m;
        while max.is_none_or(|limit| out.len() < limit) {
            match self.step(cur, side) {
                None => {
                    out.push(Step::Zero);
                    break;
                }
                Some(next) => {
                    if let Some(at) = seen.iter().position(|&x| x == next) {
                        out.push(Step::Cycle(at));
                        break;
                    }
                    seen.push(next);
                    out.push(Step::Module(next));
                    cur = next;
                }
            }
        }
        out
    }

    /// Projective (resp. injective) dimension: the number of syzygies
    /// (cosyzygies) taken before reaching a projective (injective) module.
    /// Revisiting a module means the resolution is periodic and infinite.
    pub fn homological_dim(&self, m: UniserialModule, side: Side) -> ExtNat {
        let mut seen = HashSet::new();
        let mut cur = m;
        let mut steps = 0;
        loop {
            if self.is_terminal(cur, side) {
                return ExtNat::Finite(steps);
            }
            if !seen.insert(cur) {
                return ExtNat::Infinite;
            }
            cur = self
                .step(cur, side)
                .expect("non-terminal modules have a nonzero (co)syzygy");
            steps += 1;
        }
    }

    pub fn pdim(&self, m: UniserialModule) -> ExtNat {
        self.homological_dim(m, Side::Projective)
    }

    pub fn injdim(&self, m: UniserialModule) -> ExtNat {
        self.homological_dim(m, Side::Injective)
    }

    /// All indecomposables `M(t, ℓ)`, `1 <= ℓ <= c_t`, ordered by top then length.
    pub fn indecomposables(&self) -> Vec<UniserialModule> {
        (1..=self.n())
            .flat_map(|t| (1..=self.c(t)).map(move |l| UniserialModule::new(t, l)))
            .collect()
    }

    /// `dim Hom(M1, M2)`: one dimension for every length `j` at which the
    /// top-`j` quotient of `M1` is also the bottom-`j` submodule of `M2`.
    pub fn hom_dim(&self, from: UniserialModule, to: UniserialModule) -> usize {
        let soc = self.socle(to);
        (1..=from.length.min(to.length))
            .filter(|&j| self.shift(from.top, j as isize - 1) == soc)
            .count()
    }

    /// Dual module over the opposite algebra (vertices reversed): the old
    /// socle becomes the top.
    pub fn dual(&self, m: UniserialModule) -> UniserialModule {
        UniserialModule::new(self.reverse_vertex(self.socle(m)), m.length)
    }
}

/// A duplicate-free set of indecomposables over one algebra, standing for
/// the direct sum of its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSet<'a> {
    algebra: &'a Algebra,
    members: BTreeSet<UniserialModule>,
}

impl<'a> ModuleSet<'a> {
    pub fn new(
        algebra: &'a Algebra,
        members: impl IntoIterator<Item = UniserialModule>,
    ) -> Result<Self> {
        let members: BTreeSet<_> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !algebra.contains(**m)) {
            return Err(Error::InvalidModule {
                top: bad.top,
                length: bad.length,
            });
        }
        Ok(ModuleSet { algebra, members })
    }

    pub fn all(algebra: &'a Algebra) -> Self {
        ModuleSet {
            algebra,
            members: algebra.indecomposables().into_iter().collect(),
        }
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.algebra
    }

    pub fn members(&self) -> &BTreeSet<UniserialModule> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
