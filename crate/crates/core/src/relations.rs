//! Irredundant zero relations of a cyclic Nakayama algebra.
//!
//! A relation `(start, arrows)` says that the path of `arrows` consecutive
//! arrows leaving `start` is zero. Its composition-length counterpart is
//! `c_start = arrows`.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub start: usize,
    pub arrows: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RelationDoc", into = "RelationDoc")]
pub struct RelationSystem {
    vertices: usize,
    relations: Vec<Relation>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationDoc {
    pub vertices: usize,
    pub relations: Vec<Relation>,
}

impl TryFrom<RelationDoc> for RelationSystem {
    type Error = Error;

    fn try_from(doc: RelationDoc) -> Result<Self> {
        RelationSystem::new(doc.vertices, doc.relations)
    }
}

impl From<RelationSystem> for RelationDoc {
    fn from(r: RelationSystem) -> Self {
        RelationDoc {
            vertices: r.vertices,
            relations: r.relations,
        }
    }
}

/// Does the arrow block of `outer` contain the block of `inner` as a
/// consecutive sub-block (indices mod `n`)?
fn contains_block(n: usize, outer: Relation, inner: Relation) -> bool {
    if inner.arrows > outer.arrows {
        return false;
    }
    let offset = (inner.start + n - outer.start) % n;
    offset <= outer.arrows - inner.arrows
}

impl RelationSystem {
    pub fn new(vertices: usize, mut relations: Vec<Relation>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidRelations(msg));
        if vertices == 0 {
            return bad("no vertices".into());
        }
        if relations.is_empty() || relations.len() > vertices {
            return bad(format!(
                "need 1..={vertices} relations, got {}",
                relations.len()
            ));
        }
        relations.sort();
        for rel in &relations {
            if !(1..=vertices).contains(&rel.start) {
                return bad(format!("start vertex {} outside 1..={vertices}", rel.start));
            }
            if rel.arrows == 0 {
                return bad(format!("relation at {} has no arrows", rel.start));
            }
        }
        for pair in relations.windows(2) {
            if pair[0].start == pair[1].start {
                return bad(format!("vertex {} starts two relations", pair[0].start));
            }
        }
        for a in &relations {
            for b in &relations {
                if a != b && contains_block(vertices, *a, *b) {
                    return bad(format!(
                        "relation {}x{} contains relation {}x{}",
                        a.start, a.arrows, b.start, b.arrows
                    ));
                }
            }
        }
        Ok(RelationSystem {
            vertices,
            relations,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Number of relations `r`.
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Last vertex reached by a relation path; this is the socle of `P_start`.
    pub fn end(&self, rel: Relation) -> usize {
        (rel.start - 1 + rel.arrows - 1) % self.vertices + 1
    }

    /// Kupisch series of the bound quiver algebra.
    ///
    /// `c_v` is the least number of arrows after which the path from `v`
    /// has swallowed some relation block; the first such block from `v`
    /// begins `(start - v) mod N` arrows later.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let n = self.vertices;
        let kupisch: Vec<usize> = (1..=n)
            .map(|v| {
                self.relations
                    .iter()
                    .map(|rel| (rel.start + n - v) % n + rel.arrows)
                    .min()
                    .expect("at least one relation")
            })
            .collect();
        let algebra = Algebra::cyclic(&kupisch)?;
        let back = relations_from_kupisch(&algebra)?;
        if back != *self {
            return Err(Error::InvalidRelations(format!(
                "system is redundant; the algebra {algebra} is defined by {}",
                back.shorthand()
            )));
        }
        Ok(algebra)
    }

    /// `rel:N:startxarrows,...` form accepted by the command line.
    pub fn shorthand(&self) -> String {
        let body = self
            .relations
            .iter()
            .map(|r| format!("{}x{}", r.start, r.arrows))
            .collect::<Vec<_>>()
            .join(",");
        format!("rel:{}:{body}", self.vertices)
    }
}

/// Reads the irredundant relations off a cyclic Kupisch series: a relation
/// starts at `i` exactly when `c_{i+1} >= c_i`, i.e. when `rad P_i` is not
/// projective.
pub fn relations_from_kupisch(algebra: &Algebra) -> Result<RelationSystem> {
    if !algebra.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let relations = relation_starts(algebra)
        .into_iter()
        .map(|start| Relation {
            start,
            arrows: algebra.c(start),
        })
        .collect();
    RelationSystem::new(algebra.n(), relations)
}

/// Vertices `i` with `c_{i+1} >= c_i`. On linear algebras a start also needs
/// its relation path to exist, `i + c_i <= N`.
pub fn relation_starts(algebra: &Algebra) -> Vec<usize> {
    let n = algebra.n();
    (1..=n)
        .filter(|&i| {
            if algebra.is_cyclic() {
                algebra.c(algebra.shift(i, 1)) >= algebra.c(i)
            } else {
                i + algebra.c(i) <= n && algebra.c(i + 1) >= algebra.c(i)
            }
        })
        .collect()
}

/// Number of irredundant relations.
pub fn relation_count(algebra: &Algebra) -> usize {
    relation_starts(algebra).len()
}
