//! The theorem catalogue, one named check per statement.
//!
//! Each check has a hypothesis and a conclusion over data computed once per
//! algebra. A check whose hypothesis fails is vacuous for that algebra.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::Result;
use crate::extnat::ExtNat;
use crate::filtration::{epsilon, epsilon_chain, epsilon_fixes, EpsilonResult};
use crate::invariants::InvariantReport;

/// Invariants of `ε(Λ)`, aggregated over its components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonSummary {
    pub cyclic: bool,
    pub self_injective: bool,
    pub phi_dim: ExtNat,
    pub findim: ExtNat,
    pub gldim: ExtNat,
    pub gorenstein: bool,
    pub gordim: ExtNat,
    pub domdim: ExtNat,
}

impl EpsilonSummary {
    pub fn of(eps: &EpsilonResult) -> Self {
        let gor: Vec<_> = eps.components.iter().map(Algebra::gorenstein).collect();
        EpsilonSummary {
            cyclic: eps.is_cyclic(),
            self_injective: eps.cyclic().is_some_and(Algebra::is_self_injective),
            phi_dim: eps.max_over(Algebra::phi_dim),
            findim: eps.max_over(Algebra::findim),
            gldim: eps.max_over(Algebra::gldim),
            gorenstein: gor.iter().all(|g| g.is_gorenstein),
            gordim: gor.iter().map(|g| g.gordim).max().unwrap_or(ExtNat::ZERO),
            domdim: eps.min_over(Algebra::domdim),
        }
    }
}

/// Everything the checks look at, computed once.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub algebra: Algebra,
    pub report: InvariantReport,
    pub simple_pdims: Vec<ExtNat>,
    pub epsilon: Option<EpsilonResult>,
    pub eps: Option<EpsilonSummary>,
    /// `(φdim, gldim)` of `Λ, ε(Λ), ε²(Λ), …` along the cyclic part of the chain.
    pub chain: Vec<(Algebra, ExtNat, ExtNat)>,
}

impl Analysis {
    pub fn new(algebra: &Algebra) -> Result<Self> {
        let report = algebra.report();
        let simple_pdims = algebra.simple_pdims();
        let (epsilon_result, eps, chain) = if algebra.is_cyclic() {
            let e = epsilon(algebra)?;
            let summary = EpsilonSummary::of(&e);
            let levels = epsilon_chain(algebra, algebra.n())?;
            let mut chain = vec![(algebra.clone(), report.phi_dim, report.gldim)];
            chain.extend(
                levels
                    .levels
                    .iter()
                    .filter_map(|l| l.cyclic())
                    .map(|a| (a.clone(), a.phi_dim(), a.gldim())),
            );
            (Some(e), Some(summary), chain)
        } else {
            (None, None, Vec::new())
        };
        Ok(Analysis {
            algebra: algebra.clone(),
            report,
            simple_pdims,
            epsilon: epsilon_result,
            eps,
            chain,
        })
    }

    fn cyclic(&self) -> bool {
        self.algebra.is_cyclic()
    }

    fn eps(&self) -> &EpsilonSummary {
        self.eps.as_ref().expect("cyclic algebras carry ε data")
    }

    fn two_r(&self) -> usize {
        2 * self.report.r
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Vacuous,
    Violation(String),
}

fn require(holds: bool, detail: impl FnOnce() -> String) -> Verdict {
    if holds {
        Verdict::Pass
    } else {
        Verdict::Violation(detail())
    }
}

/// Collects conclusions; the first failure becomes the verdict.
struct Conclusions(Vec<String>);

impl Conclusions {
    fn new() -> Self {
        Conclusions(Vec::new())
    }

    fn check(&mut self, holds: bool, detail: impl FnOnce() -> String) -> &mut Self {
        if !holds {
            self.0.push(detail());
        }
        self
    }

    fn verdict(&self) -> Verdict {
        if self.0.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Violation(self.0.join("; "))
        }
    }
}

pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub eval: fn(&Analysis) -> Verdict,
}

impl TheoremCheck {
    pub fn run(&self, a: &Analysis) -> Verdict {
        (self.eval)(a)
    }
}

const INF: ExtNat = ExtNat::Infinite;

fn t1(a: &Analysis) -> Verdict {
    if !a.cyclic() {
        return Verdict::Vacuous;
    }
    let (phi, fin) = (a.report.phi_dim, a.report.findim);
    require(fin <= phi && phi <= fin + 1, || {
        format!("phi_dim {phi}, findim {fin}")
    })
}

fn t2(a: &Analysis) -> Verdict {
    if !a.cyclic() || !a.report.gorenstein {
        return Verdict::Vacuous;
    }
    let (phi, gor) = (a.report.phi_dim, a.report.gordim);
    require(phi == gor, || format!("phi_dim {phi} != gordim {gor}"))
}

fn t3(a: &Analysis) -> Verdict {
    if !a.cyclic() {
        return Verdict::Vacuous;
    }
    let fixed = epsilon_fixes(&a.algebra, a.epsilon.as_ref().expect("cyclic"));
    let si = a.report.self_injective;
    require(fixed == si, || {
        format!("epsilon fixes algebra: {fixed}, self-injective: {si}")
    })
}

fn t4(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.self_injective || a.report.gldim.is_finite() {
        return Verdict::Vacuous;
    }
    let mut c = Conclusions::new();
    c.check(a.eps().cyclic && a.eps().gldim == INF, || {
        format!(
            "epsilon cyclic {} with gldim {}",
            a.eps().cyclic,
            a.eps().gldim
        )
    });
    for pair in a.chain.windows(2) {
        let (ref lam, phi, gldim) = pair[0];
        let (ref next, phi_next, _) = pair[1];
        if gldim == INF && !lam.is_self_injective() {
            c.check(phi == phi_next + 2, || {
                format!("phi_dim {lam} = {phi} but phi_dim {next} = {phi_next}")
            });
        }
    }
    c.verdict()
}

fn t5(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.gldim.is_finite() {
        return Verdict::Vacuous;
    }
    let phi = a.report.phi_dim;
    let even = phi.finite().is_some_and(|p| p % 2 == 0);
    require(even && phi <= a.two_r(), || {
        format!("phi_dim {phi}, 2r {}", a.two_r())
    })
}

fn t6(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.gldim.is_finite() {
        return Verdict::Vacuous;
    }
    let phi = a.report.phi_dim;
    let si = a.report.self_injective;
    let eps_si = a.eps().self_injective;
    let mut c = Conclusions::new();
    c.check((phi == 0) == si, || {
        format!("phi_dim {phi}, self-injective {si}")
    });
    c.check(phi != 1, || "phi_dim = 1".into());
    c.check((phi == 2) == (eps_si && !si), || {
        format!("phi_dim {phi}, epsilon self-injective {eps_si}, self-injective {si}")
    });
    c.verdict()
}

fn t7(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.findim <= 2 {
        return Verdict::Vacuous;
    }
    let (f, fe) = (a.report.findim, a.eps().findim);
    require(f == fe + 2, || {
        format!("findim {f}, findim of epsilon {fe}")
    })
}

fn t7p(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.findim != 2 || a.report.gldim.is_finite() {
        return Verdict::Vacuous;
    }
    let fe = a.eps().findim;
    require(fe == 0, || {
        format!("findim 2, gldim inf, findim of epsilon {fe}")
    })
}

fn t8(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.phi_dim != 2 {
        return Verdict::Vacuous;
    }
    let f = a.report.findim;
    require(f + 1 >= 2, || format!("phi_dim 2, findim {f}"))
}

fn t9(a: &Analysis) -> Verdict {
    if !a.cyclic() || !a.report.gorenstein {
        return Verdict::Vacuous;
    }
    let e = a.eps();
    let mut c = Conclusions::new();
    c.check(e.gorenstein, || "epsilon is not Gorenstein".into());
    let g = a.report.gordim;
    if !a.report.self_injective && g >= 2 {
        c.check(g == e.gordim + 2, || {
            format!("gordim {g}, gordim of epsilon {}", e.gordim)
        });
    }
    c.verdict()
}

fn t10(a: &Analysis) -> Verdict {
    let d = a.report.domdim;
    if !a.cyclic() || d < 3 || d == INF {
        return Verdict::Vacuous;
    }
    let de = a.eps().domdim;
    require(d == de + 2, || {
        format!("domdim {d}, domdim of epsilon {de}")
    })
}

fn t11(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.self_injective {
        return Verdict::Vacuous;
    }
    let (d, phi) = (a.report.domdim, a.report.phi_dim);
    require(d <= phi && d <= a.two_r(), || {
        format!("domdim {d}, phi_dim {phi}, 2r {}", a.two_r())
    })
}

fn t12(a: &Analysis) -> Verdict {
    let Some(m) = a.report.m.finite() else {
        return Verdict::Vacuous;
    };
    let g = a.report.gldim;
    let bound = a.algebra.n() + m - 1;
    require(g <= bound, || {
        format!("m {m}, gldim {g}, N + m - 1 = {bound}")
    })
}

fn t13(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.gldim == INF {
        return Verdict::Vacuous;
    }
    let g = a.report.gldim;
    let bound = 2 * a.algebra.n() - 2;
    require(g <= bound, || format!("gldim {g} > 2N - 2 = {bound}"))
}

fn t14(a: &Analysis) -> Verdict {
    if !a.cyclic() {
        return Verdict::Vacuous;
    }
    let (l, r) = (a.report.findim, a.report.findim_op);
    require(l == r, || format!("findim {l}, right findim {r}"))
}

fn t15(a: &Analysis) -> Verdict {
    if !a.cyclic() {
        return Verdict::Vacuous;
    }
    let (l, r) = (a.report.phi_dim, a.report.phi_dim_op);
    require(l == r, || format!("phi_dim {l}, right phi_dim {r}"))
}

fn t16(a: &Analysis) -> Verdict {
    if !a.cyclic() {
        return Verdict::Vacuous;
    }
    let (l, r) = (a.report.findim, a.report.findim_op);
    require((l == 1) == (r == 1), || {
        format!("findim {l}, right findim {r}")
    })
}

fn t17(a: &Analysis) -> Verdict {
    if !a.cyclic() || a.report.self_injective {
        return Verdict::Vacuous;
    }
    let b = a.two_r();
    let r = &a.report;
    let mut c = Conclusions::new();
    c.check(r.phi_dim <= b, || {
        format!("phi_dim {} > 2r = {b}", r.phi_dim)
    });
    c.check(r.findim <= b, || format!("findim {} > 2r = {b}", r.findim));
    c.check(r.domdim <= b, || format!("domdim {} > 2r = {b}", r.domdim));
    if r.gorenstein {
        c.check(r.gordim <= b, || format!("gordim {} > 2r = {b}", r.gordim));
    }
    c.check(b + 2 <= 2 * a.algebra.n(), || format!("2r = {b} > 2N - 2"));
    c.verdict()
}

fn t18(a: &Analysis) -> Verdict {
    let has_pdim_two = a.simple_pdims.contains(&ExtNat::Finite(2));
    let mut c = Conclusions::new();
    if a.cyclic() {
        if !has_pdim_two {
            return Verdict::Vacuous;
        }
        let e = a.epsilon.as_ref().expect("cyclic");
        c.check(!e.breaks.is_empty(), || {
            "a simple has pdim 2 but epsilon is cyclic".into()
        });
    } else {
        let n = a.algebra.n();
        let g = a.report.gldim;
        c.check(g < n, || format!("linear gldim {g} > N - 1 = {}", n - 1));
        if a.algebra.is_connected() && g >= 2 {
            c.check(has_pdim_two, || {
                format!("connected linear, gldim {g}, no simple of pdim 2")
            });
        }
    }
    c.verdict()
}

/// The full catalogue in report order.
pub const CATALOGUE: &[TheoremCheck] = &[
    TheoremCheck { id: "T1", statement: "cyclic: findim <= phi_dim <= findim + 1", eval: t1 },
    TheoremCheck { id: "T2", statement: "cyclic Gorenstein: phi_dim = gordim", eval: t2 },
    TheoremCheck { id: "T3", statement: "cyclic: epsilon(A) = A iff A self-injective", eval: t3 },
    TheoremCheck {
        id: "T4",
        statement: "cyclic, not self-injective, gldim infinite: epsilon(A) cyclic of infinite gldim and phi_dim A = phi_dim epsilon(A) + 2 along the chain",
        eval: t4,
    },
    TheoremCheck { id: "T5", statement: "cyclic, gldim infinite: phi_dim even and <= 2r", eval: t5 },
    TheoremCheck {
        id: "T6",
        statement: "cyclic, gldim infinite: phi_dim = 0 iff self-injective; phi_dim != 1; phi_dim = 2 iff epsilon(A) self-injective and A not",
        eval: t6,
    },
    TheoremCheck { id: "T7", statement: "cyclic, findim > 2: findim A = findim epsilon(A) + 2", eval: t7 },
    TheoremCheck { id: "T7p", statement: "cyclic, findim = 2, gldim infinite: findim epsilon(A) = 0", eval: t7p },
    TheoremCheck { id: "T8", statement: "cyclic, phi_dim = 2: phi_dim - findim <= 1", eval: t8 },
    TheoremCheck {
        id: "T9",
        statement: "cyclic Gorenstein: epsilon(A) Gorenstein, and gordim A = gordim epsilon(A) + 2 when A is not self-injective and gordim >= 2",
        eval: t9,
    },
    TheoremCheck { id: "T10", statement: "cyclic, 3 <= domdim < inf: domdim A = domdim epsilon(A) + 2", eval: t10 },
    TheoremCheck { id: "T11", statement: "cyclic, not self-injective: domdim <= phi_dim and domdim <= 2r", eval: t11 },
    TheoremCheck { id: "T12", statement: "some simple has pdim 2m, m minimal: gldim finite and <= N + m - 1", eval: t12 },
    TheoremCheck { id: "T13", statement: "cyclic, gldim finite: gldim <= 2N - 2", eval: t13 },
    TheoremCheck { id: "T14", statement: "cyclic: findim = right findim", eval: t14 },
    TheoremCheck { id: "T15", statement: "cyclic: phi_dim = right phi_dim", eval: t15 },
    TheoremCheck { id: "T16", statement: "cyclic: findim = 1 iff right findim = 1", eval: t16 },
    TheoremCheck {
        id: "T17",
        statement: "cyclic, not self-injective: phi_dim, findim, gordim, domdim <= 2r <= 2N - 2",
        eval: t17,
    },
    TheoremCheck {
        id: "T18",
        statement: "linear: gldim <= N - 1, and connected with gldim >= 2 has a simple of pdim 2; cyclic with a simple of pdim 2: epsilon(A) is linear",
        eval: t18,
    },
];

pub fn find(id: &str) -> Option<&'static TheoremCheck> {
    CATALOGUE.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Runs the given checks on one algebra.
pub fn run_checks(analysis: &Analysis, checks: &[&TheoremCheck]) -> Vec<(&'static str, Verdict)> {
    checks.iter().map(|c| (c.id, c.run(analysis))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdicts(k: &[usize]) -> Vec<(&'static str, Verdict)> {
        let a = Analysis::new(&Algebra::cyclic(k).unwrap()).unwrap();
        run_checks(&a, &CATALOGUE.iter().collect::<Vec<_>>())
    }

    fn get(v: &[(&'static str, Verdict)], id: &str) -> Verdict {
        v.iter().find(|(i, _)| *i == id).unwrap().1.clone()
    }

    #[test]
    fn detailed_example_passes() {
        let v = verdicts(&[5, 5, 6, 6, 6]);
        assert_eq!(get(&v, "T2"), Verdict::Pass);
        assert_eq!(get(&v, "T4"), Verdict::Pass);
        assert!(
            v.iter().all(|(_, x)| !matches!(x, Verdict::Violation(_))),
            "{v:?}"
        );
    }

    #[test]
    fn self_injective_is_mostly_vacuous() {
        let v = verdicts(&[2, 2]);
        assert_eq!(get(&v, "T3"), Verdict::Pass);
        for id in ["T4", "T7", "T10", "T11", "T17", "T18"] {
            assert_eq!(get(&v, id), Verdict::Vacuous, "{id}");
        }
    }

    #[test]
    fn findim_one_example() {
        let v = verdicts(&[2, 3, 3]);
        assert_eq!(get(&v, "T16"), Verdict::Pass);
        assert_eq!(get(&v, "T14"), Verdict::Pass);
    }

    #[test]
    fn catalogue_ids_are_unique() {
        let mut ids: Vec<_> = CATALOGUE.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), CATALOGUE.len());
        assert!(find("t12").is_some());
        assert!(find("T99").is_none());
    }
}
