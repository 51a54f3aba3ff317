//! Fixed characters shared by the benchmarks.

use ampleness_core::{gieseker_character, ChernCharacter, Surface};

/// `(label, character)` pairs spanning both surface types.
pub fn fixtures() -> Vec<(&'static str, ChernCharacter)> {
    let p2 = Surface::ProjectivePlane;
    let f1 = Surface::Hirzebruch(1);
    let f3 = Surface::Hirzebruch(3);
    vec![
        ("p2-2-4h-0", ChernCharacter::parse(p2, "2:4:0").unwrap()),
        ("p2-5-12h-7", ChernCharacter::parse(p2, "5:12:7").unwrap()),
        ("f1-2-3e5f", ChernCharacter::parse(f1, "2:3,5:5/2").unwrap()),
        (
            "f3-3-4e17f",
            ChernCharacter::parse(f3, "3:4,17:10").unwrap(),
        ),
        ("gieseker-12", gieseker_character(12).unwrap()),
    ]
}
