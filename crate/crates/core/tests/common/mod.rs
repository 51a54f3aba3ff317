#![allow(dead_code)]

use ampleness_core::{ChernCharacter, DivisorClass, Rational, Surface};
use proptest::prelude::*;

pub const P2: Surface = Surface::ProjectivePlane;

pub fn surface() -> impl Strategy<Value = Surface> {
    prop_oneof![Just(P2), (0u32..=3).prop_map(Surface::Hirzebruch)]
}

pub fn class_on(x: Surface, a: i128, b: i128) -> DivisorClass {
    match x {
        Surface::ProjectivePlane => x.plane_class(a),
        Surface::Hirzebruch(_) => x.ef_class(a, b),
    }
}

pub fn integral_class(span: i128) -> impl Strategy<Value = DivisorClass> {
    (surface(), -span..=span, -span..=span).prop_map(|(x, a, b)| class_on(x, a, b))
}

pub fn rational(span: i128) -> impl Strategy<Value = Rational> {
    (-span..=span, 1i128..=12).prop_map(|(n, d)| Rational::new(n, d))
}

/// Valid character from `(r, c1, c2)` with `c2` free.
pub fn character() -> impl Strategy<Value = ChernCharacter> {
    (surface(), 1i128..=5, -8i128..=8, -8i128..=8, -20i128..=20)
        .prop_map(|(x, r, a, b, c2)| from_c2(r, class_on(x, a, b), c2))
}

pub fn from_c2(r: i128, c1: DivisorClass, c2: i128) -> ChernCharacter {
    let ch2 = c1.self_intersection() / 2 - Rational::from(c2);
    ChernCharacter::new(r, c1, ch2).expect("valid by construction")
}

/// Smallest `c2` with `delta >= 0`: `c2 >= (r - 1) c1^2 / (2r)`.
pub fn min_c2(r: i128, c1: &DivisorClass) -> i128 {
    (c1.self_intersection() * Rational::from(r - 1) / Rational::from(2 * r)).ceil()
}

/// Characters satisfying the slope hypotheses of globally generated
/// ampleness (`strict_plane`) or of asymptotic ampleness, with `delta >= 0`.
fn hypothesis_character(strict_plane: bool) -> impl Strategy<Value = ChernCharacter> {
    (surface(), 2i128..=5, 0i128..=6, 0i128..=6, 0i128..=12).prop_map(move |(x, r, i, j, k)| {
        let c1 = match x {
            Surface::ProjectivePlane => x.plane_class(r + if strict_plane { 2 } else { 1 } + i),
            Surface::Hirzebruch(e) => {
                let a = r + 1 + i;
                let b = e as i128 * a + r + j + if e == 0 { 1 } else { 0 };
                x.ef_class(a, b)
            }
        };
        let c2 = min_c2(r, &c1) + k;
        from_c2(r, c1, c2)
    })
}

pub fn ample_gg_hypotheses() -> impl Strategy<Value = ChernCharacter> {
    hypothesis_character(true)
}

pub fn asymptotic_hypotheses() -> impl Strategy<Value = ChernCharacter> {
    hypothesis_character(false)
}

/// Hirzebruch–Riemann–Roch with `chi(O) = 1`: `r + c1·(-K)/2 + ch2`.
pub fn hrr_chi(v: &ChernCharacter) -> Rational {
    let k = v.surface().canonical_class();
    Rational::from(v.rank()) - v.c1().intersect(&k).unwrap() / 2 + v.ch2()
}

/// Irreducible classes in the box `0 <= a <= max_a`, `0 <= b <= max_b`.
pub fn irreducible_in_box(x: Surface, max_a: i128, max_b: i128) -> Vec<DivisorClass> {
    let mut out = Vec::new();
    for a in 0..=max_a {
        for b in 0..=(if x.is_plane() { 0 } else { max_b }) {
            let d = class_on(x, a, b);
            if d.is_irreducible_curve_class().unwrap() {
                out.push(d);
            }
        }
    }
    out
}
