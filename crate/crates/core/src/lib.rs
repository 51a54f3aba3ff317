//! Exact numerical decision procedures for ampleness of general stable
//! vector bundles on the projective plane and the Hirzebruch surfaces.
//!
//! Every quantity is an exact rational. The pipeline runs from a Chern
//! character through its logarithmic invariants, the necessary numerical
//! obstructions, the global-generation classification of the general
//! prioritary bundle, and finally two ampleness certificates: one for the
//! general globally generated bundle and one for general bundles of a large
//! enough multiple of the character.

pub mod ampleness;
pub mod character;
pub mod cohomology;
pub mod condition;
pub mod error;
pub mod positivity;
pub mod rational;
pub mod report;
pub mod surface;
pub mod tags;

pub use ampleness::{
    ample_gg_verdict, asymptotic_ample_certificate, effective_n_bound, enumerate_bad_curves,
    gieseker_character, kernel_character, normalize_character, AmpleGgCertificate,
    AsymptoticCertificate, AsymptoticMode,
};
pub use character::{ChernCharacter, LogInvariants};
pub use cohomology::{nonspecial_all_twists, wbn_applicable, wbn_cohomology, CohomologyTriple};
pub use condition::{Condition, Relation};
pub use error::{Error, Result};
pub use positivity::{
    classify_global_generation, gg_quick_criterion, necessary_obstructions, GgClassification,
    GgVerdict, ObstructionReport, ObstructionVerdict,
};
pub use rational::Rational;
pub use report::{render_text, run_report, Report, ReportOptions};
pub use surface::{DivisorClass, Surface};
