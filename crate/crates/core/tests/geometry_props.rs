mod common;

use ampleness_core::{ChernCharacter, Rational, Surface};
use common::*;
use proptest::prelude::*;

fn same_surface_pair() -> impl Strategy<Value = (Surface, [Rational; 4])> {
    (
        surface(),
        rational(30),
        rational(30),
        rational(30),
        rational(30),
    )
        .prop_map(|(x, a, b, c, d)| (x, [a, b, c, d]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn intersection_is_symmetric((x, [a, b, c, d]) in same_surface_pair()) {
        let (d1, d2) = if x.is_plane() {
            (x.plane_class(a), x.plane_class(c))
        } else {
            (x.ef_class(a, b), x.ef_class(c, d))
        };
        prop_assert_eq!(d1.intersect(&d2).unwrap(), d2.intersect(&d1).unwrap());
    }

    #[test]
    fn serre_duality_for_line_bundles(d in integral_class(15)) {
        let k = d.surface().canonical_class();
        let chi = |c| ChernCharacter::line_bundle(c).unwrap().euler_characteristic();
        prop_assert_eq!(chi(d), chi(k - d));
        // chi(O(D)) = 1 + (D^2 - D·K)/2
        let direct = Rational::ONE + (d.self_intersection() - d.intersect(&k).unwrap()) / 2;
        prop_assert_eq!(Rational::from(chi(d)), direct);
    }

    #[test]
    fn nef_h0_matches_riemann_roch((x, a, t) in (surface(), 0i128..=12, 0i128..=12)) {
        // aE + (ae + t)F is nef on F_e
        let d = class_on(x, a, x.hirzebruch_e().unwrap_or(0) as i128 * a + t);
        prop_assert!(d.is_nef());
        let chi = ChernCharacter::line_bundle(d).unwrap().euler_characteristic();
        prop_assert_eq!(d.h0().unwrap() as i128, chi);
        prop_assert_eq!(Rational::from(chi), d.surface().hilbert_poly(&d));
    }
}

#[test]
fn cone_consistency() {
    for x in [
        P2,
        Surface::Hirzebruch(0),
        Surface::Hirzebruch(1),
        Surface::Hirzebruch(2),
        Surface::Hirzebruch(4),
    ] {
        let curves: Vec<_> = (-6..=6)
            .flat_map(|a| (-6..=12).map(move |b| class_on(x, a, b)))
            .filter(|d| d.is_irreducible_curve_class().unwrap())
            .collect();
        assert!(curves.iter().all(|c| c.is_effective()));
        for a in -6..=6 {
            for b in -6..=12 {
                let n = class_on(x, a, b);
                if n.is_nef() {
                    for c in &curves {
                        assert!(!n.intersect(c).unwrap().is_negative(), "{n} · {c} < 0");
                    }
                }
            }
        }
    }
}

#[test]
fn h0_small_cases() {
    let f1 = Surface::Hirzebruch(1);
    assert_eq!(f1.ef_class(1, 1).h0().unwrap(), 3);
    assert_eq!(f1.section().h0().unwrap(), 1);
    assert_eq!(P2.plane_class(2).h0().unwrap(), 6);
    assert_eq!(Surface::Hirzebruch(2).ef_class(1, 1).h0().unwrap(), 2);
}
