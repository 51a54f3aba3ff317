//! Asymptotic ampleness with an explicit multiplier.
//!
//! For `n` large the general bundle of character `n·v` is the dual of the
//! kernel of a general map `O(-H)^{nr+s} -> ...`, and it is ample once the
//! kernel character `u = (nr + s) ch O(H) - n v` has `delta(u) >= 0` and the
//! twists `u*(H)`, `u*(H - L)` sit in the weak Brill–Noether range.

use serde::{Deserialize, Serialize};

use crate::character::ChernCharacter;
use crate::cohomology::{wbn_applicable, WbnCheck};
use crate::condition::{first_failure, Condition, Relation};
use crate::error::{Error, Result};
use crate::positivity::asymptotic_slope_conditions;
use crate::rational::Rational;
use crate::surface::{DivisorClass, Surface};
use crate::tags;

/// Largest multiplier the direct search will try.
pub const SEARCH_CAP: i128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AsymptoticMode {
    /// Twist first so that `1 < nu·L <= 2`.
    Normalized,
    /// Use the character as given, quotienting by copies of `O(H)`.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalization {
    pub normalized: ChernCharacter,
    /// `N`, with `normalized = v(-N)`.
    pub twist: DivisorClass,
    pub multiple: i128,
}

/// Twists `v` by `-N`, `N = mH` or `m(E + eF)` with `m = ceil(nu·L) - 2`,
/// landing in `1 < nu·L <= 2`. On `F_e`, `N·E = 0` so `nu·E` is unchanged.
pub fn normalize_character(v: &ChernCharacter) -> Result<Normalization> {
    let x = v.surface();
    let nu_l = v.total_slope().intersect(&x.distinguished_line())?;
    if nu_l <= Rational::ONE {
        return Err(Error::precondition(format!("nu·L = {nu_l} <= 1")));
    }
    let m = nu_l.ceil() - 2;
    let twist = match x {
        Surface::ProjectivePlane => x.plane_class(m),
        Surface::Hirzebruch(e) => x.ef_class(m, m * e as i128),
    };
    Ok(Normalization {
        normalized: v.twist(&-twist)?,
        twist,
        multiple: m,
    })
}

/// `u = (nr + s) ch O(H) - n v`, a character of rank `s`.
pub fn kernel_character(v: &ChernCharacter, n: i128, s: i128) -> Result<ChernCharacter> {
    if s < 2 {
        return Err(Error::precondition(format!("s = {s} < 2")));
    }
    if n < 1 {
        return Err(Error::precondition(format!("n = {n} < 1")));
    }
    let h = ChernCharacter::line_bundle(v.surface().polarization())?;
    h.combination(n * v.rank() + s, v, n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierBound {
    /// `B = nu - H`.
    pub b_class: DivisorClass,
    pub b_squared: Rational,
    /// `2s delta / (r B^2) - s/r`.
    pub bound: Rational,
    pub n_min: i128,
}

/// Least `n >= 1` with `delta(u) >= 0`.
///
/// Writing `B = nu - H`, one has
/// `delta(u) = (nr/s) ((B^2/2)(1 + nr/s) - delta)`, which is nonnegative
/// exactly when `n >= 2s delta/(r B^2) - s/r`.
pub fn effective_n_bound(v: &ChernCharacter, s: i128) -> Result<MultiplierBound> {
    if s < 2 {
        return Err(Error::precondition(format!("s = {s} < 2")));
    }
    let b_class = v.total_slope() - v.surface().polarization();
    if !b_class.is_big_and_nef() {
        return Err(Error::precondition(format!(
            "B = nu - H = {b_class} is not big and nef"
        )));
    }
    let b_squared = b_class.self_intersection();
    let r = Rational::from(v.rank());
    let s_q = Rational::from(s);
    let bound = Rational::from(2) * s_q * v.discriminant() / (r * b_squared) - s_q / r;
    Ok(MultiplierBound {
        b_class,
        b_squared,
        bound,
        n_min: bound.ceil().max(1),
    })
}

/// Least `n >= 1` with `delta(kernel_character(v, n, s)) >= 0`, by trying
/// `n = 1, 2, ...`.
pub fn search_n_min(v: &ChernCharacter, s: i128) -> Result<i128> {
    for n in 1..=SEARCH_CAP {
        if !kernel_character(v, n, s)?.discriminant().is_negative() {
            return Ok(n);
        }
    }
    Err(Error::ScanLimit {
        cap: SEARCH_CAP,
        context: format!("multiplier search for {v}"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticCertificate {
    pub tag: String,
    pub mode: AsymptoticMode,
    pub s: i128,
    pub hypotheses: Vec<Condition>,
    pub normalization: Option<Normalization>,
    /// The character the construction runs on.
    pub working: ChernCharacter,
    pub bound: MultiplierBound,
    pub n_min: i128,
    pub kernel: ChernCharacter,
    pub kernel_delta: Rational,
    /// `delta(u)` at `n_min - 1`, when `n_min > 1`.
    pub previous_kernel_delta: Option<Rational>,
    /// `chi(v*(H - L))`, which must be `<= 0`.
    pub dual_twist_chi: i128,
    pub dual_twist_ok: bool,
    /// `chi(u*(H - L)) = -n chi(v*(H - L))`.
    pub kernel_dual_twist_chi: i128,
    pub identity_holds: bool,
    pub kernel_dual_wbn: WbnCheck,
    pub kernel_dual_twist_wbn: WbnCheck,
    pub stability_assumed: bool,
    pub valid: bool,
}

/// Certificate that the general stable bundle of character `n v` is ample
/// for `n = n_min` (in normalized mode, of the normalized character; twisting
/// back by `N` preserves ampleness).
pub fn asymptotic_ample_certificate(
    v: &ChernCharacter,
    s: i128,
    mode: AsymptoticMode,
) -> Result<AsymptoticCertificate> {
    let mut hypotheses = asymptotic_slope_conditions(v);
    hypotheses.push(Condition::new(
        tags::BOGOMOLOV,
        "delta >= 0",
        v.discriminant(),
        Relation::AtLeast,
        Rational::ZERO,
    ));
    if let Some(c) = first_failure(&hypotheses) {
        return Err(Error::precondition(format!(
            "{} fails ({} vs {})",
            c.statement, c.lhs, c.rhs
        )));
    }
    let normalization = match mode {
        AsymptoticMode::Normalized => Some(normalize_character(v)?),
        AsymptoticMode::Direct => None,
    };
    let working = normalization.as_ref().map_or_else(|| *v, |n| n.normalized);

    let bound = effective_n_bound(&working, s)?;
    let n_min = bound.n_min;
    let searched = search_n_min(&working, s)?;
    if searched != n_min {
        return Err(Error::Internal(format!(
            "closed-form multiplier {n_min} disagrees with search {searched}"
        )));
    }
    let kernel = kernel_character(&working, n_min, s)?;
    let kernel_delta = kernel.discriminant();
    let previous_kernel_delta = if n_min > 1 {
        Some(kernel_character(&working, n_min - 1, s)?.discriminant())
    } else {
        None
    };

    let x = v.surface();
    let h_minus_l = x.polarization() - x.distinguished_line();
    let dual_twist_chi = working.dual().twisted(&h_minus_l).euler_characteristic();
    let kernel_dual = kernel.dual();
    let kernel_dual_twist_chi = kernel_dual.twisted(&h_minus_l).euler_characteristic();
    let identity_holds = kernel_dual_twist_chi == -n_min * dual_twist_chi;
    let kernel_dual_wbn = wbn_applicable(&kernel_dual.twisted(&x.polarization()));
    let kernel_dual_twist_wbn = wbn_applicable(&kernel_dual.twisted(&h_minus_l));

    let dual_twist_ok = dual_twist_chi <= 0;
    let valid = !kernel_delta.is_negative()
        && previous_kernel_delta.is_none_or(|d| d.is_negative())
        && dual_twist_ok
        && identity_holds
        && kernel_dual_wbn.applicable
        && kernel_dual_twist_wbn.applicable;
    Ok(AsymptoticCertificate {
        tag: tags::ASYMPTOTIC_AMPLE.into(),
        mode,
        s,
        hypotheses,
        normalization,
        working,
        bound,
        n_min,
        kernel,
        kernel_delta,
        previous_kernel_delta,
        dual_twist_chi,
        dual_twist_ok,
        kernel_dual_twist_chi,
        identity_holds,
        kernel_dual_wbn,
        kernel_dual_twist_wbn,
        stability_assumed: true,
        valid,
    })
}

/// `v_d = (2, (2d - 4)H, 2 - d^2)` on the plane, Gieseker's family of rank
/// two characters with `delta = (d - 1)^2`.
pub fn gieseker_character(d: i128) -> Result<ChernCharacter> {
    if d < 4 {
        return Err(Error::precondition(format!("d = {d} < 4")));
    }
    let p2 = Surface::ProjectivePlane;
    ChernCharacter::new(2, p2.plane_class(2 * d - 4), Rational::from(2 - d * d))
}
