//! Ampleness certificates.
//!
//! [`globally_generated`] decides ampleness of the general globally generated
//! bundle by ruling out trivial quotients on the finitely many curve classes
//! where the cohomology of `V(K_X + D)` does not already forbid them.
//! [`asymptotic`] produces, for a character `v` with `nu - H` big and nef, an
//! explicit multiplier `n` such that the general bundle of character `n·v`
//! is ample.

pub mod asymptotic;
pub mod globally_generated;

pub use asymptotic::{
    asymptotic_ample_certificate, effective_n_bound, gieseker_character, kernel_character,
    normalize_character, search_n_min, AsymptoticCertificate, AsymptoticMode, MultiplierBound,
    Normalization,
};
pub use globally_generated::{
    ample_gg_verdict, dimension_count, enumerate_bad_curves, matches_bad_curve_shape,
    scan_bad_curves, splitting_codim, AmpleGgCertificate, AmpleGgVerdict, BadCurve, BadCurveScan,
    DimensionCount,
};
