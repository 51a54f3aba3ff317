mod common;

use ampleness_core::ampleness::{
    dimension_count, matches_bad_curve_shape, scan_bad_curves, search_n_min, AmpleGgVerdict,
};
use ampleness_core::{
    ample_gg_verdict, asymptotic_ample_certificate, effective_n_bound, gieseker_character,
    kernel_character, normalize_character, AsymptoticMode, ChernCharacter, Rational, Surface,
};
use common::*;
use proptest::prelude::*;

/// All irreducible `D` in the box reached by the scan, padded by 5, with
/// `chi(v(K + D)) < 0`.
fn brute_bad_curves(
    v: &ChernCharacter,
    max_a: i128,
    max_b: i128,
) -> Vec<ampleness_core::DivisorClass> {
    let x = v.surface();
    let k = x.canonical_class();
    irreducible_in_box(x, max_a + 5, max_b + 5)
        .into_iter()
        .filter(|d| v.twist(&(k + *d)).unwrap().euler_characteristic() < 0)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn closed_form_matches_search(v in asymptotic_hypotheses(), s in 2i128..=4) {
        let w = normalize_character(&v).unwrap().normalized;
        let bound = effective_n_bound(&w, s).unwrap();
        prop_assert!(bound.n_min >= 1);
        prop_assert_eq!(bound.n_min, search_n_min(&w, s).unwrap());
    }

    #[test]
    fn kernel_delta_stays_nonnegative(v in asymptotic_hypotheses()) {
        let w = normalize_character(&v).unwrap().normalized;
        let n_min = effective_n_bound(&w, 2).unwrap().n_min;
        for n in n_min..n_min + 25 {
            let u = kernel_character(&w, n, 2).unwrap();
            prop_assert_eq!(u.rank(), 2);
            prop_assert!(!u.discriminant().is_negative());
        }
        if n_min > 1 {
            prop_assert!(kernel_character(&w, n_min - 1, 2).unwrap().discriminant().is_negative());
        }
    }

    #[test]
    fn asymptotic_certificates_are_valid(v in asymptotic_hypotheses(), s in 2i128..=4) {
        let cert = asymptotic_ample_certificate(&v, s, AsymptoticMode::Normalized).unwrap();
        prop_assert!(cert.valid, "{:?}", cert);
        prop_assert!(cert.dual_twist_chi <= 0);
        prop_assert!(cert.bound.b_class.is_big_and_nef());
        let again = asymptotic_ample_certificate(&v, s, AsymptoticMode::Normalized).unwrap();
        prop_assert_eq!(cert, again);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bad_curves_have_listed_shapes_and_none_are_missed(v in ample_gg_hypotheses()) {
        let scan = scan_bad_curves(&v).unwrap();
        for b in &scan.curves {
            prop_assert!(matches_bad_curve_shape(&b.class), "{} for {}", b.class, v);
            prop_assert!(b.chi_twist < 0);
            prop_assert!(b.class.is_irreducible_curve_class().unwrap());
        }
        let found: Vec<_> = scan.curves.iter().map(|b| b.class).collect();
        let brute = brute_bad_curves(&v, scan.max_first, scan.max_second);
        prop_assert_eq!(brute.len(), found.len());
        for d in brute {
            prop_assert!(found.contains(&d), "missed {}", d);
        }
    }

    #[test]
    fn ample_general_is_sound(v in ample_gg_hypotheses()) {
        let cert = ample_gg_verdict(&v);
        if cert.verdict == AmpleGgVerdict::AmpleGeneral {
            prop_assert!(cert.gg.as_ref().unwrap().is_globally_generated());
            prop_assert!(cert.hypotheses.iter().all(|c| c.holds));
            prop_assert!(cert.bad_curves.iter().all(|b| Rational::from(b.d as i128) < b.c));
        }
        prop_assert_eq!(&cert, &ample_gg_verdict(&v));
        // every bad curve of a globally generated character passes the count
        if cert.gg.as_ref().is_some_and(|g| g.is_globally_generated()) {
            prop_assert_eq!(cert.verdict, AmpleGgVerdict::AmpleGeneral);
        }
    }

    /// The five case inequalities closing the ampleness proof.
    #[test]
    fn dimension_count_cases(v in ample_gg_hypotheses()) {
        let x = v.surface();
        let cases: Vec<(ampleness_core::DivisorClass, u128, i128)> = match x {
            Surface::ProjectivePlane => vec![(x.plane_class(1), 2, 3), (x.plane_class(2), 5, 6)],
            Surface::Hirzebruch(e) => {
                let mut c = vec![(x.fiber(), 1, 2)];
                if e >= 1 {
                    c.push((x.section(), 0, 1));
                }
                if e == 1 {
                    c.push((x.ef_class(2, 2), 5, 7));
                }
                c
            }
        };
        for (d, dim, c_min) in cases {
            let count = dimension_count(&v, &d).unwrap();
            prop_assert_eq!(count.d, dim);
            prop_assert!(count.c >= Rational::from(c_min), "{} on {}: c = {}", d, v, count.c);
            prop_assert!(count.pass);
        }
    }
}

#[test]
fn gieseker_regression() {
    for d in 4..=50i128 {
        let v = gieseker_character(d).unwrap();
        assert_eq!(v.discriminant(), Rational::from((d - 1) * (d - 1)));
        let b = effective_n_bound(&v, 2).unwrap();
        let expected = Rational::new(2 * (d - 1) * (d - 1), (d - 3) * (d - 3)) - 1;
        assert_eq!(b.bound, expected, "d = {d}");
        assert_eq!(b.n_min == 2, d >= 12, "d = {d}");
        let cert = asymptotic_ample_certificate(&v, 2, AsymptoticMode::Direct).unwrap();
        assert_eq!(cert.dual_twist_chi, 10 - 3 * d - d * d);
        assert!(cert.valid);
    }
}

#[test]
fn zero_discriminant_needs_one_copy() {
    let v = ChernCharacter::line_bundle(P2.plane_class(3))
        .unwrap()
        .scale(2)
        .unwrap();
    assert_eq!(effective_n_bound(&v, 2).unwrap().n_min, 1);
}
