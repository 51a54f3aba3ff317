//! Stable identifiers naming the result behind each verdict. Reports cite
//! these so downstream tooling can check which statement a section rests on.

pub const RIEMANN_ROCH: &str = "riemann-roch";
pub const BOGOMOLOV: &str = "bogomolov";
pub const FULTON_LAZARSFELD: &str = "fulton-lazarsfeld";
/// Degree of an ample bundle on a smooth rational curve is at least its rank.
pub const RESTRICTION_DEGREE: &str = "restriction-degree";
/// Sharpened slope bounds for stable ample bundles of rank at least two.
pub const STABLE_SLOPE_BOUND: &str = "stable-slope-bound";
pub const TANGENT_BUNDLE_EXCEPTION: &str = "tangent-bundle-exception";
/// A stable ample bundle with `nu·F = 1` on `F_e` is a line bundle.
pub const FIBER_DEGREE_ONE: &str = "fiber-degree-one";
pub const WEAK_BRILL_NOETHER_PLANE: &str = "weak-brill-noether-plane";
pub const WEAK_BRILL_NOETHER_HIRZEBRUCH: &str = "weak-brill-noether-hirzebruch";
pub const GG_CLASSIFICATION_PLANE: &str = "gg-classification-plane";
pub const GG_CLASSIFICATION_HIRZEBRUCH: &str = "gg-classification-hirzebruch";
pub const GG_CLASSIFICATION_QUADRIC: &str = "gg-classification-quadric";
pub const GG_CRITERION: &str = "gg-criterion";
pub const NONSPECIAL_TWISTS: &str = "nonspecial-twists";
pub const BIG_CURVES: &str = "big-curves-no-trivial-quotient";
pub const BAD_CURVE_LIST: &str = "bad-curve-list";
pub const TRIVIAL_QUOTIENT_CODIM: &str = "trivial-quotient-codimension";
pub const AMPLE_GG: &str = "ample-globally-generated";
pub const ASYMPTOTIC_AMPLE: &str = "asymptotic-ampleness";
pub const EFFECTIVE_MULTIPLIER: &str = "effective-multiplier";
pub const GIESEKER_EXAMPLE: &str = "gieseker-example";

pub const ALL: &[&str] = &[
    RIEMANN_ROCH,
    BOGOMOLOV,
    FULTON_LAZARSFELD,
    RESTRICTION_DEGREE,
    STABLE_SLOPE_BOUND,
    TANGENT_BUNDLE_EXCEPTION,
    FIBER_DEGREE_ONE,
    WEAK_BRILL_NOETHER_PLANE,
    WEAK_BRILL_NOETHER_HIRZEBRUCH,
    GG_CLASSIFICATION_PLANE,
    GG_CLASSIFICATION_HIRZEBRUCH,
    GG_CLASSIFICATION_QUADRIC,
    GG_CRITERION,
    NONSPECIAL_TWISTS,
    BIG_CURVES,
    BAD_CURVE_LIST,
    TRIVIAL_QUOTIENT_CODIM,
    AMPLE_GG,
    ASYMPTOTIC_AMPLE,
    EFFECTIVE_MULTIPLIER,
    GIESEKER_EXAMPLE,
];
