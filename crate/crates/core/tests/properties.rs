use std::sync::OnceLock;

use proptest::prelude::*;

use srgint::certify::{row_constraint_violation, verify_certificate, Certificate};
use srgint::constructions::*;
use srgint::design::{
    design_2_21_6_4, golay_s_5_8_24, lambda_s, s_3_6_22, s_4_7_23, sts15, Design,
};
use srgint::graph::*;
use srgint::lattice::{geometric_certificate, knt_certificate, sims_gewirtz_certificate};
use srgint::search::{find_representation, SearchOutcome};

/// `v = 2k − λ + |W|` for adjacent pairs, `v = 2 + 2k − μ + |W|` otherwise.
fn pair_identity(g: &Graph, p: &SrgParams, x: usize, y: usize) -> bool {
    let w = g.common_nonneighbors(x, y);
    if g.adjacent(x, y) {
        p.v + p.lambda == 2 * p.k + w
    } else {
        p.v + p.mu == 2 + 2 * p.k + w
    }
}

fn zoo() -> &'static [(Graph, SrgParams)] {
    static ZOO: OnceLock<Vec<(Graph, SrgParams)>> = OnceLock::new();
    ZOO.get_or_init(|| {
        let mut graphs = vec![
            hoffman_singleton(),
            sims_gewirtz_complement(),
            mclaughlin_complement(),
            gq39(),
            gq39_complement(),
            petersen(),
            clebsch(),
            shrikhande(),
            sts15().block_graph(1).unwrap(),
            s_4_7_23().block_graph(3).unwrap(),
            design_2_21_6_4().block_graph(2).unwrap(),
            Graph::cycle(5),
        ];
        for n in 4..9 {
            graphs.push(triangular(n).unwrap());
        }
        for n in 3..7 {
            graphs.push(lattice_graph(n).unwrap());
        }
        for (n, t) in [(2, 3), (3, 3), (4, 2), (5, 4)] {
            graphs.push(complete_multipartite(n, t).unwrap());
        }
        graphs
            .into_iter()
            .map(|g| {
                let p = is_srg(&g).expect("constructed graph is strongly regular");
                (g, p)
            })
            .collect()
    })
}

fn steiner_systems() -> Vec<(Design, usize)> {
    vec![
        (sts15(), 2),
        (golay_s_5_8_24(), 5),
        (s_4_7_23(), 4),
        (s_3_6_22(), 3),
    ]
}

fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

#[test]
fn pair_identity_on_every_pair() {
    for (g, p) in zoo() {
        for x in 0..g.order() {
            for y in x + 1..g.order() {
                assert!(pair_identity(g, p, x, y), "{p} at ({x},{y})");
            }
        }
    }
}

#[test]
fn lambda_s_integral_on_steiner_systems() {
    for (d, t) in steiner_systems() {
        let p = d.params(t).expect("Steiner system");
        assert_eq!(p.lambda, 1);
        for s in 1..=t as u64 {
            assert!(lambda_s(&p, s).unwrap().is_integer(), "{p:?} s={s}");
        }
    }
}

#[test]
fn constructed_certificates_have_no_row_violations() {
    let mut certs: Vec<(Graph, Certificate)> = Vec::new();
    for n in 2..5 {
        for t in 1..5 {
            certs.push((
                complete_multipartite(n, t).unwrap(),
                knt_certificate(n, t).unwrap(),
            ));
        }
    }
    for n in 4..8 {
        // cliques of pairs through a common point
        let g = triangular(n).unwrap();
        let labels: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let cliques: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..labels.len())
                    .filter(|&x| labels[x].0 == i || labels[x].1 == i)
                    .collect()
            })
            .collect();
        certs.push((g.clone(), geometric_certificate(&g, &cliques).unwrap()));
    }
    for n in 3..6 {
        let g = lattice_graph(n).unwrap();
        let mut cliques: Vec<Vec<usize>> = (0..n)
            .map(|r| (0..n).map(|c| r * n + c).collect())
            .collect();
        cliques.extend((0..n).map(|c| (0..n).map(|r| r * n + c).collect::<Vec<_>>()));
        certs.push((g.clone(), geometric_certificate(&g, &cliques).unwrap()));
    }
    let gq = gq39();
    certs.push((
        gq.clone(),
        geometric_certificate(&gq, &lines_through_edges(&gq).unwrap()).unwrap(),
    ));
    certs.push((sims_gewirtz_complement(), sims_gewirtz_certificate()));
    for (name, s, t) in [
        ("petersen", 2, 2),
        ("shrikhande", 2, 2),
        ("clebsch", 2, 2),
        ("triangular:5", 1, 2),
    ] {
        let g = srgint::registry::build_graph(name).unwrap();
        let SearchOutcome::Found(c) = find_representation(&g, s, t, None, 1_000_000)
            .unwrap()
            .outcome
        else {
            panic!("{name} should have a certificate");
        };
        certs.push((g, c));
    }
    for (g, c) in &certs {
        assert!(verify_certificate(g, c).unwrap().accepted);
        assert_eq!(row_constraint_violation(g, c), None, "{:?}", is_srg(g));
    }
}

fn params() -> impl Strategy<Value = SrgParams> {
    (4usize..400).prop_flat_map(|v| {
        (1..v - 1).prop_flat_map(move |k| {
            (0..k, 1..=k).prop_map(move |(l, m)| SrgParams::new(v, k, l, m))
        })
    })
}

fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (0usize..70).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut it = bits.into_iter();
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|j| (0..j).map(move |i| (i, j)))
                    .filter(|_| it.next().unwrap())
                    .collect();
                Graph::from_edges(n, edges).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn complement_params_is_an_involution(p in params()) {
        if let Ok(c) = complement_params(&p) {
            prop_assert_eq!(complement_params(&c).unwrap(), p);
            prop_assert_eq!(c.is_feasible(), p.is_feasible());
        }
    }

    #[test]
    fn zoo_complements_match_complement_params(i in 0usize..25) {
        let (g, p) = &zoo()[i % zoo().len()];
        let h = g.complement();
        prop_assert_eq!(is_srg(&h), Some(complement_params(p).unwrap()));
    }

    #[test]
    fn pair_identity_random_pairs(i in 0usize..25, x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let (g, p) = &zoo()[i % zoo().len()];
        let (x, y) = (x.index(g.order()), y.index(g.order()));
        prop_assume!(x != y);
        prop_assert!(pair_identity(g, p, x, y));
    }

    #[test]
    fn graph6_and_json_round_trip(g in arbitrary_graph()) {
        let back = graph6_decode(&graph6_encode(&g)).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(edge_set(&back), edge_set(&g));
        let back = Graph::parse_any(&g.to_json()).unwrap();
        prop_assert_eq!(edge_set(&back), edge_set(&g));
    }

    #[test]
    fn certificate_text_round_trip(s in 1i64..4, t in 1i64..4, rows in 1usize..6, cols in 0usize..6, seed in any::<u64>()) {
        let m: Vec<Vec<i64>> = (0..rows)
            .map(|r| (0..cols).map(|c| ((seed >> ((r * cols + c) % 60)) & 7) as i64 - 3).collect())
            .collect();
        let c = Certificate::new(s, t, m).unwrap();
        let back = Certificate::from_text(&c.to_text()).unwrap();
        prop_assert_eq!(back.to_text(), c.to_text());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn derived_golay_systems_are_steiner(p in 0usize..24, q in 0usize..23) {
        let d = golay_s_5_8_24().derive(p).unwrap();
        prop_assert_eq!(d.t_design_lambda(4), Some(1));
        let e = d.derive(q).unwrap();
        prop_assert_eq!(e.t_design_lambda(3), Some(1));
        let params = e.params(3).unwrap();
        for s in 1..=3 {
            prop_assert!(lambda_s(&params, s).unwrap().is_integer());
        }
        prop_assert_eq!(d.intersection_numbers().unwrap().into_iter().collect::<Vec<_>>(), vec![1, 3]);
    }
}
