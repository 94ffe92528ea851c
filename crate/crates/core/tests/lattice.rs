use srgint::certify::*;
use srgint::constructions::*;
use srgint::design::sts15;
use srgint::graph::*;
use srgint::lattice::*;

#[test]
fn projected_system_realises_mclaughlin_complement() {
    let r = gram_mcl_report().unwrap();
    assert!(r.matches, "{:?}", r.first_mismatch);
    assert_eq!(r.vertices, 275);
    assert_eq!(r.norms_delta, vec![4]);
    assert_eq!(r.norms_delta_tilde, vec![3]);
    assert_eq!(r.ip_with_a0_delta, vec![2]);
    assert_eq!(r.ip_with_a0_delta_tilde, vec![0]);
    assert_eq!(r.lattice.rank, 23);
    println!("lattice determinant: {}", r.lattice.determinant);
}

#[test]
fn leech_and_delta_inner_products_are_integral() {
    let gens = leech_generators();
    assert!(gram(&gens).is_ok());
    let delta = delta_275(&mclaughlin_complement()).unwrap();
    let mut joint = gens.clone();
    joint.vectors.extend(delta.vectors.iter().copied());
    joint.vectors.push(a0());
    assert!(gram(&joint).is_ok());
    // the projected system is not inside the generator lattice's dual
    let tilde = delta_tilde(&delta).unwrap();
    let mut mixed = gens;
    mixed.vectors.extend(tilde.vectors.iter().copied());
    assert!(matches!(gram(&mixed), Err(srgint::Error::NonIntegral(..))));
}

#[test]
fn bad_labels_rejected() {
    let g = petersen();
    assert!(matches!(
        delta_275(&g),
        Err(srgint::Error::LabelMismatch { .. })
    ));
    assert!(delta_275(&Graph::path(3)).is_err());
}

#[test]
fn geometric_certificates() {
    let d = sts15();
    let g = d.block_graph(1).unwrap();
    let cliques: Vec<Vec<usize>> = (0..15)
        .map(|p| {
            (0..d.block_count())
                .filter(|&b| d.blocks()[b].contains(p))
                .collect()
        })
        .collect();
    let c = geometric_certificate(&g, &cliques).unwrap();
    assert_eq!((c.s, c.t), (1, 3));
    assert!(verify_certificate(&g, &c).unwrap().accepted);

    let gq = gq39();
    let lines = lines_through_edges(&gq).unwrap();
    let c = geometric_certificate(&gq, &lines).unwrap();
    assert_eq!(c.t, 10);
    assert!(verify_certificate(&gq, &c).unwrap().accepted);
    let mut doubled = lines.clone();
    doubled.push(lines[0].clone());
    assert!(matches!(
        geometric_certificate(&gq, &doubled),
        Err(srgint::Error::EdgeCover(_, _, 2))
    ));
}

#[test]
fn sims_gewirtz_is_two_integrable() {
    let g = sims_gewirtz_complement();
    let c = sims_gewirtz_certificate();
    assert!(verify_certificate(&g, &c).unwrap().accepted);
}

#[test]
fn coclique_divisibility() {
    let gc = gq39_complement();
    let cc = max_coclique(&gc, u64::MAX);
    let d = coclique_divisibility_constraint(&gc, cc.witness(), 3).unwrap();
    assert_eq!(d.quotient, [[0, 81], [3, 78]]);
    assert_eq!(d.eigenvector, [27, -1]);
    assert_eq!(d.modulus, 28);
    for (n, t) in [(3, 2), (4, 3), (5, 2)] {
        let g = complete_multipartite(n, t).unwrap();
        let part: Vec<usize> = (0..t).collect();
        let d = coclique_divisibility_constraint(&g, &part, t as i64).unwrap();
        assert_eq!(d.eigenvector, [n as i64 - 1, -1]);
        assert_eq!(d.modulus, n as i64);
    }
    // a non-maximum coclique is not an equitable cell
    assert!(coclique_divisibility_constraint(&gc, &cc.witness()[..2], 3).is_err());
}

#[test]
fn support_bound_closes_the_gq_argument() {
    let gc = gq39_complement();
    let rank = rank_of_shift(&gc, 3);
    assert_eq!(rank, 22);
    assert_eq!(row_support_bound(&gc, 2, 3, rank).unwrap(), 30);
    let h = hoffman_singleton();
    let rank = rank_of_shift(&h, 3);
    assert_eq!(rank, 29);
    assert_eq!(row_support_bound(&h, 2, 3, rank).unwrap(), 10);
}
