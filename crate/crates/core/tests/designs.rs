use srgint::design::*;
use srgint::graph::{is_srg, srg_identity_holds};
use srgint::SrgParams;

#[test]
fn golay_chain_by_derivation() {
    let s5 = golay_s_5_8_24();
    assert_eq!(s5.block_count(), 759);
    assert_eq!(s5.t_design_lambda(5), Some(1));
    assert_eq!(
        s5.intersection_numbers()
            .unwrap()
            .into_iter()
            .collect::<Vec<_>>(),
        vec![0, 2, 4]
    );
    let s4 = s5.derive(0).unwrap();
    assert_eq!(
        (s4.point_count(), s4.block_count(), s4.block_size()),
        (23, 253, 7)
    );
    assert_eq!(s4.t_design_lambda(4), Some(1));
    let s3 = s4.derive(0).unwrap();
    assert_eq!((s3.point_count(), s3.block_count()), (22, 77));
    assert_eq!(s3.t_design_lambda(3), Some(1));
    let r = s3.residual(0).unwrap();
    assert_eq!(
        (r.point_count(), r.block_count(), r.block_size()),
        (21, 56, 6)
    );
    assert_eq!(r.t_design_lambda(2), Some(4));
    assert_eq!(
        r.intersection_numbers()
            .unwrap()
            .into_iter()
            .collect::<Vec<_>>(),
        vec![0, 2]
    );
}

#[test]
fn block_graphs_of_quasi_symmetric_designs() {
    let cases = [
        (s_4_7_23(), 3, SrgParams::new(253, 140, 87, 65)),
        (design_2_21_6_4(), 2, SrgParams::new(56, 45, 36, 36)),
        (sts15(), 1, SrgParams::new(35, 18, 9, 9)),
    ];
    for (d, l2, p) in cases {
        let g = d.block_graph(l2).unwrap();
        assert_eq!(is_srg(&g), Some(p));
        assert!(srg_identity_holds(&g, &p));
    }
    // the Golay system has three intersection sizes
    assert!(golay_s_5_8_24().block_graph(4).is_err());
}

#[test]
fn lambda_s_values() {
    let p = golay_s_5_8_24().params(5).unwrap();
    let got: Vec<i128> = (1..=5)
        .map(|s| lambda_s(&p, s).unwrap().to_integer())
        .collect();
    assert_eq!(got, vec![253, 77, 21, 5, 1]);
    let p = sts15().params(2).unwrap();
    assert_eq!(lambda_s(&p, 1).unwrap().to_integer(), 7);
    assert!(lambda_s(&p, 0).is_err());
    assert!(lambda_s(&p, 3).is_err());
}

#[test]
fn text_round_trip_and_errors() {
    let d = design_2_21_6_4();
    let back = Design::from_text(&d.to_text()).unwrap();
    assert_eq!(back.block_count(), 56);
    assert_eq!(back.t_design_lambda(2), Some(4));
    assert!(Design::from_text("not a design").is_err());
}
