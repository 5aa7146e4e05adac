use nakayama_core::filtration::{epsilon, eta, filtration_data};
use nakayama_core::relations::{Relation, RelationSystem};
use nakayama_core::{Algebra, ExtNat, UniserialModule};

fn m(t: usize, l: usize) -> UniserialModule {
    UniserialModule::new(t, l)
}

/// Longest module with socle `s`, by search over all indecomposables.
fn injective_by_search(a: &Algebra, s: usize) -> UniserialModule {
    a.indecomposables()
        .into_iter()
        .filter(|&x| a.socle(x) == s)
        .max_by_key(|x| x.length)
        .unwrap()
}

/// Projective dimension by walking kernels of covers on composition factor lists.
fn pdim_by_factors(a: &Algebra, x: UniserialModule) -> ExtNat {
    let factors =
        |t: usize, l: usize| -> Vec<usize> { (0..l).map(|k| a.shift(t, k as isize)).collect() };
    let mut seen = Vec::new();
    let mut cur = factors(x.top, x.length);
    for steps in 0.. {
        let cover = factors(cur[0], a.c(cur[0]));
        if cover == cur {
            return ExtNat::Finite(steps);
        }
        if seen.contains(&cur) {
            return ExtNat::Infinite;
        }
        seen.push(cur.clone());
        cur = cover[cur.len()..].to_vec();
    }
    unreachable!()
}

#[test]
fn three_vertex_example() {
    let rels = RelationSystem::new(
        3,
        vec![
            Relation {
                start: 1,
                arrows: 2,
            },
            Relation {
                start: 2,
                arrows: 3,
            },
        ],
    )
    .unwrap();
    let a = rels.to_algebra().unwrap();
    assert_eq!(a.kupisch(), &[2, 3, 3]);
    let injectives: Vec<_> = (1..=3).map(|s| a.injective(s)).collect();
    assert_eq!(injectives, vec![m(2, 3), m(3, 3), m(2, 2)]);
    assert_eq!(
        injectives,
        (1..=3)
            .map(|s| injective_by_search(&a, s))
            .collect::<Vec<_>>()
    );
    let g = a.gorenstein();
    assert!(!g.is_gorenstein);
    assert_eq!(g.gordim, ExtNat::Infinite);
    assert_eq!(pdim_by_factors(&a, m(2, 2)), ExtNat::Infinite);
    assert_eq!(a.findim(), ExtNat::Finite(1));
    assert_eq!(a.findim_op(), ExtNat::Finite(1));
    let e = epsilon(&a).unwrap();
    assert_eq!(e.components, vec![Algebra::cyclic(&[2, 2]).unwrap()]);
    assert_eq!(e.max_over(Algebra::findim), ExtNat::ZERO);
    let h = eta(&a).unwrap();
    assert_eq!(h.components, vec![Algebra::cyclic(&[2, 2]).unwrap()]);
    let mut arcs = h.arcs.clone();
    arcs.sort();
    assert_eq!(arcs, vec![m(2, 1), m(3, 2)]);
    assert_eq!(arcs, filtration_data(&a).unwrap().nabla);
}

#[test]
fn eight_vertex_example() {
    let rels = RelationSystem::new(
        8,
        vec![
            Relation {
                start: 3,
                arrows: 2,
            },
            Relation {
                start: 5,
                arrows: 2,
            },
            Relation {
                start: 8,
                arrows: 3,
            },
        ],
    )
    .unwrap();
    let a = rels.to_algebra().unwrap();
    let r = a.report();
    assert_eq!(
        (r.gldim, r.r, r.m),
        (ExtNat::Finite(2), 3, ExtNat::Finite(1))
    );
    let bound = a.n() + r.m.finite().unwrap() - 1;
    assert_eq!(bound, 8);
    assert!(r.gldim < bound);
    for x in a.indecomposables() {
        assert_eq!(a.pdim(x), pdim_by_factors(&a, x), "{x}");
    }
}

#[test]
fn detailed_example_resolution() {
    let a = Algebra::cyclic(&[5, 5, 6, 6, 6]).unwrap();
    assert_eq!(a.injective(2), m(3, 5));
    assert_eq!(pdim_by_factors(&a, m(3, 5)), ExtNat::Finite(6));
    for x in a.indecomposables() {
        assert_eq!(a.pdim(x), pdim_by_factors(&a, x), "{x}");
    }
}

#[test]
fn extremal_family() {
    for n in 2..=6 {
        let mut k = vec![2 * n + 1; n];
        k[n - 1] = 2 * n;
        let a = Algebra::cyclic(&k).unwrap();
        let r = a.report();
        let want = ExtNat::Finite(2 * n - 2);
        assert_eq!(r.r, n - 1);
        for (name, value) in [
            ("phi_dim", r.phi_dim),
            ("findim", r.findim),
            ("gordim", r.gordim),
            ("domdim", r.domdim),
            ("phi_dim_op", r.phi_dim_op),
            ("findim_op", r.findim_op),
        ] {
            assert_eq!(value, want, "{name} for N = {n}");
        }
    }
}
