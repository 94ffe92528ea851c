use proptest::prelude::*;
use srgint::certify::verify_certificate;
use srgint::constructions::*;
use srgint::graph::*;
use srgint::lattice::knt_certificate;
use srgint::search::*;

/// Plain backtracking over every column of norm `s·t` in `n·s·t`
/// coordinates, enough to hold any solution. Only the first column is fixed
/// to one vector per shape, which signed coordinate permutations allow.
fn brute_force(g: &Graph, s: i64, t: i64) -> bool {
    let n = g.order();
    let st = s * t;
    let dim = n * st as usize;
    let mut all = Vec::new();
    let mut cur = vec![0i64; dim];
    fn gen(c: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if c == cur.len() {
            return;
        }
        for v in [0i64, 1, -1, 2, -2] {
            if v * v <= left {
                cur[c] = v;
                gen(c + 1, left - v * v, cur, out);
                cur[c] = 0;
            }
        }
    }
    gen(0, st, &mut cur, &mut all);
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let mut firsts: Vec<Vec<i64>> = Vec::new();
    for v in &all {
        let mut shape: Vec<i64> = v.iter().map(|x| x.abs()).filter(|&x| x != 0).collect();
        shape.sort_unstable_by(|a, b| b.cmp(a));
        let mut canon = shape.clone();
        canon.resize(dim, 0);
        if *v == canon && !firsts.contains(v) {
            firsts.push(v.clone());
        }
    }
    fn go(
        p: usize,
        g: &Graph,
        s: i64,
        pool: Vec<Vec<&Vec<i64>>>,
        dot: &dyn Fn(&[i64], &[i64]) -> i64,
    ) -> bool {
        if p == g.order() {
            return true;
        }
        for cand in &pool[p] {
            let next: Vec<Vec<&Vec<i64>>> = (0..g.order())
                .map(|q| {
                    if q <= p {
                        pool[q].clone()
                    } else {
                        let want = s * g.adjacent(p, q) as i64;
                        pool[q]
                            .iter()
                            .copied()
                            .filter(|w| dot(cand, w) == want)
                            .collect()
                    }
                })
                .collect();
            if next[p + 1..].iter().any(Vec::is_empty) {
                continue;
            }
            if go(p + 1, g, s, next, dot) {
                return true;
            }
        }
        false
    }
    if n == 0 {
        return true;
    }
    let mut pool: Vec<Vec<&Vec<i64>>> = vec![all.iter().collect(); n];
    pool[0] = firsts.iter().collect();
    go(0, g, s, pool, &dot)
}

fn verdict(g: &Graph, s: i64, t: i64, order: Option<&[usize]>) -> Option<bool> {
    let r = find_representation(g, s, t, order, u64::MAX).unwrap();
    match r.outcome {
        SearchOutcome::Found(c) => {
            assert!(verify_certificate(g, &c).unwrap().accepted);
            Some(true)
        }
        SearchOutcome::Unsat => Some(false),
        SearchOutcome::Unknown => None,
    }
}

#[test]
fn classification_verdicts() {
    let found = [
        ("C5", Graph::cycle(5), 1, 2),
        ("K2x3", complete_multipartite(2, 3).unwrap(), 1, 3),
        ("K3x3", complete_multipartite(3, 3).unwrap(), 1, 3),
        ("T5", triangular(5).unwrap(), 1, 2),
        ("L3", lattice_graph(3).unwrap(), 1, 2),
        ("Petersen", petersen(), 2, 2),
        ("Shrikhande", shrikhande(), 2, 2),
        ("Clebsch", clebsch(), 2, 2),
    ];
    for (name, g, s, t) in &found {
        assert_eq!(verdict(g, *s, *t, None), Some(true), "{name}");
    }
    for (name, g) in [
        ("Petersen", petersen()),
        ("Shrikhande", shrikhande()),
        ("Clebsch", clebsch()),
    ] {
        assert_eq!(verdict(&g, 1, 2, None), Some(false), "{name}");
    }
}

#[test]
fn dynkin_e6_oracle() {
    // E6: path 0-1-2-3-4 with 5 attached to 2
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
    assert!(!brute_force(&g, 1, 2));
    assert_eq!(verdict(&g, 1, 2, None), Some(false));
    assert_eq!(verdict(&g, 2, 2, None), Some(true));
}

#[test]
fn multipartite_solutions_match_construction() {
    for n in 2..=4 {
        let g = complete_multipartite(n, 3).unwrap();
        let SearchOutcome::Found(c) = find_representation(&g, 1, 3, None, u64::MAX)
            .unwrap()
            .outcome
        else {
            panic!("K_{{{n}x3}} not found")
        };
        assert_eq!(c.gram(), knt_certificate(n, 3).unwrap().gram());
    }
}

#[test]
fn budget_gives_unknown() {
    let r = find_representation(&shrikhande(), 1, 2, None, 3).unwrap();
    assert_eq!(r.outcome, SearchOutcome::Unknown);
    assert_eq!(r.nodes, 3);
    let json = serde_json::to_value(r.report(None)).unwrap();
    assert_eq!(json["verdict"], "unknown");
}

#[test]
fn unsat_is_order_independent() {
    let g = petersen();
    let mut order: Vec<usize> = (0..10).collect();
    for shift in 0..10 {
        order.rotate_left(1);
        let mut o = order.clone();
        if shift % 2 == 1 {
            o.reverse();
        }
        assert_eq!(verdict(&g, 1, 2, Some(&o)), Some(false));
        assert_eq!(verdict(&g, 2, 2, Some(&o)), Some(true));
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_agrees_with_brute_force(g in small_graph(), st in 0usize..4) {
        let (s, t) = [(1, 1), (1, 2), (2, 1), (1, 3)][st];
        prop_assume!(g.order() * (s * t) as usize <= 12);
        prop_assume!(psd_shift_check(&g, t));
        let expected = brute_force(&g, s, t);
        prop_assert_eq!(verdict(&g, s, t, None), Some(expected));
        let rev: Vec<usize> = (0..g.order()).rev().collect();
        prop_assert_eq!(verdict(&g, s, t, Some(&rev)), Some(expected));
    }

    #[test]
    fn scale_four_small(g in small_graph()) {
        prop_assume!(g.order() <= 3);
        for (s, t) in [(2, 2), (1, 4), (4, 1)] {
            if psd_shift_check(&g, t) {
                prop_assert_eq!(verdict(&g, s, t, None), Some(brute_force(&g, s, t)));
            }
        }
    }
}
