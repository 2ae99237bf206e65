//! Pinned outputs for the exploratory reports.

use taut::explorer;

/// The taut chordal graphs with 0-dimensional wedge signatures up to seven
/// vertices: one isomorphism class per summand count, the complete graph.
#[test]
fn s0_wedge_listing_is_pinned() {
    let report = explorer::s0_wedge_check(7).expect("within limits");
    let expected = include_str!("data/s0_wedge_7.txt");
    assert_eq!(report.render(), expected);
}

/// Fixture stability: chordality, tautness and signatures of the built-in
/// graphs never drift.
#[test]
fn fixtures_are_pinned() {
    let expect = [
        ("k3_k2", true, "S^1 v S^1"),
        ("triangle_chain_7", true, "S^1 v S^1"),
        ("m1", true, "S^0"),
        ("m2", true, "S^1"),
        ("m3", true, "S^2"),
        ("m4", true, "S^3"),
        ("p2", true, "S^0"),
        ("p3", false, "S^0"),
        ("p4", false, "contractible"),
        ("p5", false, "S^1"),
        ("p6", false, "S^1"),
        ("p7", false, "contractible"),
    ];
    for (name, taut_expected, sig_expected) in expect {
        let g = explorer::fixture(name).expect("fixture exists");
        assert!(taut::chordal::is_chordal(&g), "{name}");
        assert_eq!(taut::dismantle::is_taut(&g), taut_expected, "{name}");
        let sig = taut::homology::reduced_betti(
            &taut::complex::independence_complex(&g),
            taut::homology::CoefField::Gf2,
        )
        .unwrap();
        assert_eq!(sig.to_string(), sig_expected, "{name}");
    }
}
