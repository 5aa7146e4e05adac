//! Connected Nakayama algebras described by their Kupisch series.
//!
//! Vertices are numbered `1..=N`. The arrow `α_i` goes from `i` to `i + 1`
//! (and `α_N` closes the cycle for cyclic algebras). The entry `c_i` is the
//! composition length of the indecomposable projective `P_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cyclic,
    Linear,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Cyclic => "cyclic",
            Kind::Linear => "linear",
        })
    }
}

/// A Nakayama algebra given by its kind and Kupisch series.
///
/// Values are validated on construction and immutable afterwards.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "AlgebraDoc", into = "AlgebraDoc")]
pub struct Algebra {
    kind: Kind,
    kupisch: Vec<usize>,
}

/// Unvalidated wire form: `{"kind":"cyclic","kupisch":[...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub kind: Kind,
    pub kupisch: Vec<usize>,
}

impl TryFrom<AlgebraDoc> for Algebra {
    type Error = Error;

    fn try_from(doc: AlgebraDoc) -> Result<Self> {
        Algebra::new(doc.kind, doc.kupisch)
    }
}

impl From<Algebra> for AlgebraDoc {
    fn from(a: Algebra) -> Self {
        AlgebraDoc {
            kind: a.kind,
            kupisch: a.kupisch,
        }
    }
}

/// Checks the Kupisch inequalities for the given kind.
///
/// Cyclic series need every entry at least 2 and `c_{i+1} >= c_i - 1` with
/// indices taken mod `N`. A single vertex is accepted: the local algebra
/// `k[x]/(x^c)` shows up as a syzygy filtered algebra. Linear series end in
/// 1, satisfy the same inequality without wrapping, and never run past the
/// last vertex.
pub fn validate(kind: Kind, kupisch: &[usize]) -> Vec<Violation> {
    let n = kupisch.len();
    if n == 0 {
        return vec![Violation::Empty];
    }
    let mut out = Vec::new();
    let min = match kind {
        Kind::Cyclic => 2,
        Kind::Linear => 1,
    };
    for (i, &c) in kupisch.iter().enumerate() {
        if c < min {
            out.push(Violation::EntryTooSmall {
                index: i + 1,
                value: c,
                min,
            });
        }
    }
    let pairs = match kind {
        Kind::Cyclic => n,
        Kind::Linear => n - 1,
    };
    for i in 0..pairs {
        let j = (i + 1) % n;
        let (c, d) = (kupisch[i], kupisch[j]);
        if d + 1 < c {
            out.push(Violation::Decrease {
                index: i + 1,
                next: j + 1,
                value: c,
                next_value: d,
            });
        }
    }
    if kind == Kind::Linear {
        if kupisch[n - 1] != 1 {
            out.push(Violation::LastNotOne {
                index: n,
                value: kupisch[n - 1],
            });
        }
        for (i, &c) in kupisch.iter().enumerate() {
            let max = n - i;
            if c > max && i + 1 != n {
                out.push(Violation::RunsOffEnd {
                    index: i + 1,
                    value: c,
                    max,
                });
            }
        }
    }
    out
}

impl Algebra {
    pub fn new(kind: Kind, kupisch: Vec<usize>) -> Result<Self> {
        let violations = validate(kind, &kupisch);
        if violations.is_empty() {
            Ok(Algebra { kind, kupisch })
        } else {
            Err(Error::InvalidKupisch { kind, violations })
        }
    }

    pub fn cyclic(kupisch: &[usize]) -> Result<Self> {
        Self::new(Kind::Cyclic, kupisch.to_vec())
    }

    pub fn linear(kupisch: &[usize]) -> Result<Self> {
        Self::new(Kind::Linear, kupisch.to_vec())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_cyclic(&self) -> bool {
        self.kind == Kind::Cyclic
    }

    pub fn kupisch(&self) -> &[usize] {
        &self.kupisch
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.kupisch.len()
    }

    /// `c_i = l(P_i)` for a 1-based vertex.
    pub fn c(&self, vertex: usize) -> usize {
        self.kupisch[vertex - 1]
    }

    pub fn max_length(&self) -> usize {
        self.kupisch.iter().copied().max().unwrap_or(0)
    }

    /// Total number of indecomposable modules, `Σ c_i`.
    pub fn dimension(&self) -> usize {
        self.kupisch.iter().sum()
    }

    /// Linear algebras with a zero arrow split into several blocks.
    pub fn is_connected(&self) -> bool {
        match self.kind {
            Kind::Cyclic => true,
            Kind::Linear => self.kupisch[..self.n() - 1].iter().all(|&c| c >= 2),
        }
    }

    /// Moves `steps` arrows along the quiver from `vertex`.
    ///
    /// Cyclic algebras wrap around; on linear algebras leaving `1..=N` is a
    /// caller bug.
    pub fn shift(&self, vertex: usize, steps: isize) -> usize {
        let n = self.n() as isize;
        let v = vertex as isize - 1 + steps;
        match self.kind {
            Kind::Cyclic => (v.rem_euclid(n) + 1) as usize,
            Kind::Linear => {
                assert!(
                    (0..n).contains(&v),
                    "vertex {vertex} shifted by {steps} leaves A_{n}"
                );
                (v + 1) as usize
            }
        }
    }

    /// Self-injective iff cyclic with constant Kupisch series.
    pub fn is_self_injective(&self) -> bool {
        self.kind == Kind::Cyclic && self.kupisch.iter().all(|&c| c == self.kupisch[0])
    }

    /// Length of the injective envelope `I_s` of the simple `S_s`: the
    /// largest `ℓ` with `ℓ <= c_{s-ℓ+1}`.
    pub fn injective_length(&self, socle: usize) -> usize {
        let limit = match self.kind {
            Kind::Cyclic => self.max_length(),
            Kind::Linear => socle,
        };
        let mut best = 0;
        for len in 1..=limit {
            let top = self.shift(socle, -(len as isize - 1));
            if len <= self.c(top) {
                best = len;
            } else {
                break;
            }
        }
        best
    }

    /// The opposite algebra, relabelled by the reversal `j ↦ N + 1 - j` so
    /// that arrows again point from `i` to `i + 1`.
    pub fn opposite(&self) -> Algebra {
        let n = self.n();
        let kupisch = (1..=n).map(|j| self.injective_length(n + 1 - j)).collect();
        Algebra {
            kind: self.kind,
            kupisch,
        }
    }

    /// The reversal `ρ(j) = N + 1 - j` relating vertices of `A` and `A^op`.
    pub fn reverse_vertex(&self, vertex: usize) -> usize {
        self.n() + 1 - vertex
    }

    /// Lexicographically least rotation of a cyclic series. Linear algebras
    /// are returned unchanged.
    pub fn canonical_rotation(&self) -> Algebra {
        if self.kind == Kind::Linear {
            return self.clone();
        }
        let n = self.n();
        let best = (0..n)
            .map(|k| {
                let mut v = self.kupisch[k..].to_vec();
                v.extend_from_slice(&self.kupisch[..k]);
                v
            })
            .min()
            .expect("nonempty series");
        Algebra {
            kind: Kind::Cyclic,
            kupisch: best,
        }
    }

    pub fn same_up_to_rotation(&self, other: &Algebra) -> bool {
        self.kind == other.kind && self.canonical_rotation() == other.canonical_rotation()
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .kupisch
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "{}({body})",
            if self.kind == Kind::Linear {
                "linear "
            } else {
                ""
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_examples() {
        assert!(validate(Kind::Cyclic, &[5, 5, 6, 6, 6]).is_empty());
        assert!(validate(Kind::Cyclic, &[2, 2]).is_empty());
        assert!(validate(Kind::Linear, &[2, 1]).is_empty());
        assert!(validate(Kind::Linear, &[1, 1]).is_empty());
    }

    #[test]
    fn wrap_inequality_is_reported() {
        // c_1 = 2 must be at least c_2 - 1 = 3.
        let v = validate(Kind::Cyclic, &[2, 4]);
        assert_eq!(
            v,
            vec![Violation::Decrease {
                index: 2,
                next: 1,
                value: 4,
                next_value: 2
            }]
        );
        assert_eq!(v[0].to_string(), "c_1 = 2 < c_2 - 1 = 3");
    }

    #[test]
    fn linear_constraints() {
        let v = validate(Kind::Linear, &[3, 2]);
        assert!(v.contains(&Violation::LastNotOne { index: 2, value: 2 }));
        assert!(v.contains(&Violation::RunsOffEnd {
            index: 1,
            value: 3,
            max: 2
        }));
        assert!(
            validate(Kind::Cyclic, &[1, 2]).contains(&Violation::EntryTooSmall {
                index: 1,
                value: 1,
                min: 2
            })
        );
        assert_eq!(validate(Kind::Cyclic, &[]), vec![Violation::Empty]);
    }

    #[test]
    fn injective_lengths() {
        let a = Algebra::cyclic(&[2, 3, 3]).unwrap();
        let lens: Vec<_> = (1..=3).map(|s| a.injective_length(s)).collect();
        assert_eq!(lens, vec![3, 3, 2]);
        let b = Algebra::cyclic(&[5, 5, 6, 6, 6]).unwrap();
        assert_eq!(b.injective_length(2), 5);
        let c = Algebra::cyclic(&[2, 2]).unwrap();
        assert_eq!((c.injective_length(1), c.injective_length(2)), (2, 2));
        let lin = Algebra::linear(&[2, 1]).unwrap();
        assert_eq!((lin.injective_length(1), lin.injective_length(2)), (1, 2));
    }

    #[test]
    fn opposite_examples() {
        let cases: [(&[usize], &[usize]); 3] = [
            (&[2, 3, 3], &[2, 3, 3]),
            (&[5, 5, 6, 6, 6], &[6, 6, 6, 5, 5]),
            (&[2, 2], &[2, 2]),
        ];
        for (a, op) in cases {
            assert_eq!(Algebra::cyclic(a).unwrap().opposite().kupisch(), op);
        }
        assert_eq!(
            Algebra::linear(&[2, 1]).unwrap().opposite().kupisch(),
            &[2, 1]
        );
        assert_eq!(
            Algebra::linear(&[3, 2, 1]).unwrap().opposite().kupisch(),
            &[3, 2, 1]
        );
        assert_eq!(
            Algebra::linear(&[2, 2, 1]).unwrap().opposite().kupisch(),
            &[2, 2, 1]
        );
    }

    #[test]
    fn canonical_rotation_examples() {
        let r = |k: &[usize]| {
            Algebra::cyclic(k)
                .unwrap()
                .canonical_rotation()
                .kupisch()
                .to_vec()
        };
        assert_eq!(r(&[6, 6, 6, 5, 5]), vec![5, 5, 6, 6, 6]);
        assert_eq!(r(&[2, 2]), vec![2, 2]);
        assert_eq!(r(&[3, 2, 3]), vec![2, 3, 3]);
    }

    #[test]
    fn self_injectivity() {
        assert!(Algebra::cyclic(&[2, 2]).unwrap().is_self_injective());
        assert!(!Algebra::cyclic(&[5, 5, 6, 6, 6])
            .unwrap()
            .is_self_injective());
        assert!(!Algebra::linear(&[2, 1]).unwrap().is_self_injective());
    }

    #[test]
    fn serde_validates() {
        let a: Algebra =
            serde_json::from_str(r#"{"kind":"cyclic","kupisch":[5,5,6,6,6]}"#).unwrap();
        assert_eq!(a.n(), 5);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"kind":"cyclic","kupisch":[5,5,6,6,6]}"#
        );
        assert!(serde_json::from_str::<Algebra>(r#"{"kind":"cyclic","kupisch":[2,4]}"#).is_err());
    }
}
