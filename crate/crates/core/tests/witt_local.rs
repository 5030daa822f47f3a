use wittkit::witt_local::{c8_witt_pairs, check_local_duality};
use wittkit::*;

#[test]
fn local_duality_all_sizes() {
    for m in 2..=8 {
        let rep = check_local_duality(&make_local_witt(m).unwrap());
        assert!(rep.all_passed(), "{rep}");
    }
}

#[test]
fn hadamard_four_point_frame() {
    let fm = hadamard_identification(2).unwrap();
    assert!(fm.holds());
    assert_eq!(fm.frame_signature(), Some((1, 3)));
    // √6·e1 = c1 + c2 + c3 + c4
    let w = make_local_witt(4).unwrap();
    let sum = w.partial_sum(4);
    assert_eq!(fm.rows[0].scale(&Scalar::sqrt(6)), sum);
}

#[test]
fn hadamard_eight_point_frame_and_pseudoscalar() {
    let fm = hadamard_identification(3).unwrap();
    assert!(fm.holds());
    assert_eq!(fm.frame_signature(), Some((1, 7)));
    let (lhs, rhs) = fm.pseudoscalar_sides().unwrap();
    assert_eq!(lhs, rhs);
    // 2⁸√7 · e1 f1 ⋯ f7 = -2¹² c1 ∧ ⋯ ∧ c8
    let w = make_local_witt(8).unwrap();
    let prod = Multivector::product(&w.sig, &fm.rows).unwrap();
    let left = prod.scale(&(&Scalar::int(256) * &Scalar::sqrt(7)));
    assert_eq!(left, w.top_wedge().scale(&Scalar::int(-4096)));
}

#[test]
fn g12_has_no_hadamard_frame() {
    let s = no_identification_g12();
    assert_eq!(s.combinations, 32768);
    assert_eq!(s.frames_found, 0);
    assert!(s.timelike_rows > 0 && s.spacelike_rows > 0);
}

#[test]
fn complex_g22() {
    let fm = complex_identification_g22().unwrap();
    assert!(fm.holds());
    assert_eq!(fm.frame_signature(), Some((2, 2)));
}

#[test]
fn c8_table_flags_only_f4() {
    let t = c8_complex_table();
    let bad: Vec<_> = t.iter().filter(|e| !e.matches_printed).map(|e| e.label).collect();
    assert_eq!(bad, vec!["f4"]);
    let rep = check_global_duality(&c8_witt_pairs());
    assert!(rep.all_passed(), "{rep}");
}
