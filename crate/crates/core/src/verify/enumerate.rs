use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};

/// Which algebras to enumerate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBudget {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Cap on every Kupisch entry.
    pub max_length: usize,
    pub kinds: Vec<Kind>,
    /// Keep only the lexicographically least rotation of cyclic series.
    pub dedup: bool,
}

impl EnumerationBudget {
    /// Default budget for `N <= max_vertices`: cyclic and linear algebras,
    /// entries up to `2N + 1`, rotations deduplicated.
    pub fn up_to(max_vertices: usize) -> Self {
        EnumerationBudget {
            min_vertices: 2,
            max_vertices,
            max_length: 2 * max_vertices + 1,
            kinds: vec![Kind::Cyclic, Kind::Linear],
            dedup: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_vertices < 2 {
            return Err(Error::Budget(format!(
                "max_vertices must be at least 2, got {}",
                self.max_vertices
            )));
        }
        if self.min_vertices < 1 || self.min_vertices > self.max_vertices {
            return Err(Error::Budget(format!(
                "vertex range {}..={} is empty",
                self.min_vertices, self.max_vertices
            )));
        }
        if self.kinds.contains(&Kind::Cyclic) && self.max_length < 2 {
            return Err(Error::Budget("cyclic algebras need max_length >= 2".into()));
        }
        if self.kinds.is_empty() {
            return Err(Error::Budget("no algebra kinds selected".into()));
        }
        Ok(())
    }
}

/// All Kupisch series of one kind on exactly `n` vertices with entries at
/// most `max_length`, in lexicographic order.
pub fn series(kind: Kind, n: usize, max_length: usize, dedup: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    extend(kind, n, max_length, &mut current, &mut out);
    if dedup && kind == Kind::Cyclic {
        out.retain(|k| is_least_rotation(k));
    }
    out
}

fn extend(kind: Kind, n: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let i = current.len();
    if i == n {
        let closes = match kind {
            Kind::Cyclic => current[0] + 1 >= current[n - 1],
            Kind::Linear => true,
        };
        if closes {
            out.push(current.clone());
        }
        return;
    }
    let floor = match kind {
        Kind::Cyclic => 2,
        Kind::Linear => 1,
    };
    let lo = current
        .last()
        .map_or(floor, |&prev| floor.max(prev.saturating_sub(1)));
    let hi = match kind {
        Kind::Cyclic => cap,
        Kind::Linear if i + 1 == n => 1,
        Kind::Linear => cap.min(n - i),
    };
    for c in lo..=hi {
        current.push(c);
        extend(kind, n, cap, current, out);
        current.pop();
    }
}

fn is_least_rotation(k: &[usize]) -> bool {
    let n = k.len();
    (1..n).all(|s| {
        let rotated = k[s..].iter().chain(&k[..s]);
        k.iter().le(rotated)
    })
}

/// Every algebra in the budget: cyclic before linear, then by vertex count,
/// then lexicographically.
pub fn enumerate(budget: &EnumerationBudget) -> Result<Vec<Algebra>> {
    budget.validate()?;
    let mut out = Vec::new();
    for kind in [Kind::Cyclic, Kind::Linear] {
        if !budget.kinds.contains(&kind) {
            continue;
        }
        for n in budget.min_vertices..=budget.max_vertices {
            for k in series(kind, n, budget.max_length, budget.dedup) {
                out.push(Algebra::new(kind, k)?);
            }
        }
    }
    Ok(out)
}
