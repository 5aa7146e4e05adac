//! Independent second computations that the fast paths are compared against.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::filtration::{epsilon, phi_dim_fast, restrict_to_epsilon, EpsilonResult};
use crate::module::{Side, UniserialModule};
use crate::relations::relation_count;

/// One disagreement between two ways of computing the same value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mismatch {
    pub kupisch: Vec<usize>,
    pub oracle: String,
    pub detail: String,
}

pub const ORACLES: &[&str] = &[
    "phi-fast",
    "phi-matrix-rank",
    "right-vs-opposite",
    "epsilon-hom-length",
    "pdim-transport",
    "opposite-involution",
];

/// Rank of a set of integer vectors, by fraction-free elimination.
pub fn integer_rank(vectors: &[Vec<i64>]) -> usize {
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for v in vectors {
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (pivot, b) in &basis {
            if v[*pivot] != 0 {
                let (a, c) = (b[*pivot], v[*pivot]);
                for (x, y) in v.iter_mut().zip(b) {
                    *x = *x * a - c * y;
                }
                normalize(&mut v);
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            basis.push((p, v));
        }
    }
    basis.len()
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| gcd(g, x.abs()));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// φ of the sum of all indecomposables, computed from the matrix of `L` on
/// the free group of non-projective (or non-injective) classes.
pub fn phi_by_matrix(algebra: &Algebra, side: Side) -> usize {
    let basis: Vec<UniserialModule> = algebra
        .indecomposables()
        .into_iter()
        .filter(|&m| !algebra.is_terminal(m, side))
        .collect();
    let index: HashMap<UniserialModule, usize> =
        basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let dim = basis.len();
    // Column j of `l` is the class of L(basis[j]).
    let image: Vec<Option<usize>> = basis
        .iter()
        .map(|&m| algebra.step(m, side).and_then(|x| index.get(&x).copied()))
        .collect();
    let apply = |v: &Vec<i64>| {
        let mut out = vec![0i64; dim];
        for (j, &x) in v.iter().enumerate() {
            if x != 0 {
                if let Some(i) = image[j] {
                    out[i] += x;
                }
            }
        }
        out
    };
    let mut gens: Vec<Vec<i64>> = (0..dim)
        .map(|j| {
            let mut e = vec![0; dim];
            e[j] = 1;
            e
        })
        .collect();
    let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
    let mut ranks = Vec::new();
    while !seen.contains_key(&gens) {
        seen.insert(gens.clone(), ranks.len());
        ranks.push(integer_rank(&gens));
        gens = gens.iter().map(apply).collect();
    }
    let last = *ranks.iter().min().unwrap_or(&0);
    ranks.iter().position(|&r| r == last).unwrap_or(0)
}

struct Log<'a> {
    kupisch: &'a [usize],
    out: Vec<Mismatch>,
}

impl Log<'_> {
    fn expect<T: PartialEq + std::fmt::Debug>(
        &mut self,
        oracle: &str,
        what: impl FnOnce() -> String,
        left: T,
        right: T,
    ) {
        if left != right {
            self.out.push(Mismatch {
                kupisch: self.kupisch.to_vec(),
                oracle: oracle.to_string(),
                detail: format!("{}: {left:?} vs {right:?}", what()),
            });
        }
    }
}

/// Runs every oracle on one algebra and returns the disagreements.
pub fn cross_validate(algebra: &Algebra) -> Vec<Mismatch> {
    let mut log = Log {
        kupisch: algebra.kupisch(),
        out: Vec::new(),
    };
    let op = algebra.opposite();

    log.expect(
        "opposite-involution",
        || "opposite of opposite".into(),
        &op.opposite(),
        algebra,
    );
    log.expect(
        "opposite-involution",
        || "relation count of opposite".into(),
        relation_count(&op),
        relation_count(algebra),
    );

    for side in [Side::Projective, Side::Injective] {
        log.expect(
            "phi-matrix-rank",
            || format!("{side:?} phi by sets vs by matrix rank"),
            algebra.phi_sequence(side).phi,
            phi_by_matrix(algebra, side),
        );
    }

    log.expect(
        "right-vs-opposite",
        || "right phi_dim".into(),
        algebra.phi_dim_op(),
        op.phi_dim(),
    );
    log.expect(
        "right-vs-opposite",
        || "right findim".into(),
        algebra.findim_op(),
        op.findim(),
    );
    for m in algebra.indecomposables() {
        log.expect(
            "right-vs-opposite",
            || format!("injdim {m}"),
            algebra.injdim(m),
            op.pdim(algebra.dual(m)),
        );
    }

    if algebra.is_cyclic() {
        match phi_dim_fast(algebra) {
            Ok(fast) => log.expect("phi-fast", || "phi_dim".into(), fast, algebra.phi_dim()),
            Err(e) => log.expect(
                "phi-fast",
                || "phi_dim_fast failed".into(),
                e.to_string(),
                String::new(),
            ),
        }
        match epsilon(algebra) {
            Ok(eps) => epsilon_oracles(algebra, &eps, &mut log),
            Err(e) => log.expect(
                "epsilon-hom-length",
                || "epsilon failed".into(),
                e.to_string(),
                String::new(),
            ),
        }
    }
    log.out
}

fn hom_sum(algebra: &Algebra, shifted: &[usize], x: UniserialModule) -> usize {
    shifted
        .iter()
        .map(|&i| algebra.hom_dim(algebra.projective(i), x))
        .sum()
}

fn epsilon_oracles(algebra: &Algebra, eps: &EpsilonResult, log: &mut Log<'_>) {
    let shifted: Vec<usize> = eps.arcs.iter().map(|a| a.top).collect();
    for (j, arc) in eps.arcs.iter().enumerate() {
        let at = eps.placement[j];
        let p = algebra.projective(arc.top);
        log.expect(
            "epsilon-hom-length",
            || format!("Kupisch entry for arc {arc}"),
            eps.components[at.component].c(at.vertex),
            hom_sum(algebra, &shifted, p),
        );
    }
    for m in algebra.indecomposables() {
        let Some(x) = algebra.syzygy(m).and_then(|y| algebra.syzygy(y)) else {
            continue;
        };
        let Some(r) = restrict_to_epsilon(algebra, eps, x) else {
            log.expect(
                "epsilon-hom-length",
                || format!("second syzygy {x} of {m} restricts"),
                false,
                true,
            );
            continue;
        };
        log.expect(
            "epsilon-hom-length",
            || format!("length of restricted {x}"),
            r.module.length,
            hom_sum(algebra, &shifted, x),
        );
        let component = &eps.components[r.component];
        log.expect(
            "pdim-transport",
            || format!("pdim {m} vs 2 + pdim of restricted {x}"),
            algebra.pdim(m),
            component.pdim(r.module) + 2,
        );
    }
}

/// Cheap invariant used by the spot check: every oracle on one algebra.
pub fn agrees(algebra: &Algebra) -> bool {
    cross_validate(algebra).is_empty()
}
