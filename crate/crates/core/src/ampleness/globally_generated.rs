//! Ampleness of the general globally generated bundle.
//!
//! A globally generated bundle fails to be ample only through a trivial
//! quotient `V|_C -> O_C` on some curve `C`. For irreducible `D` with
//! `chi(v(K_X + D)) >= 0` weak Brill–Noether rules such quotients out, so
//! only the finitely many classes with `chi(v(K_X + D)) < 0` need the
//! dimension count `d < c`.

use serde::{Deserialize, Serialize};

use crate::character::ChernCharacter;
use crate::cohomology::{nonspecial_all_twists, NonspecialTrace};
use crate::condition::{first_failure, Condition, Relation};
use crate::error::{Error, Result};
use crate::positivity::{
    ample_slope_conditions, classify_global_generation, is_tangent_bundle, GgClassification,
    GgVerdict,
};
use crate::rational::Rational;
use crate::surface::{DivisorClass, Surface};
use crate::tags;

/// Total number of candidate classes a scan may evaluate before giving up.
pub const SCAN_CAP: usize = 1_000_000;

const BRIDGE_NOTE: &str = "the stable locus M(v) is open and dense in the L-prioritary stack, \
     so the classification of the general prioritary bundle applies to the general stable one \
     once M(v) is nonempty; nonemptiness is assumed by the caller";

const TANGENT_NOTE: &str = "(2, 3H, 3/2) is the character of the tangent bundle of P2, which is \
     both globally generated and ample; the slope hypothesis excludes it only because it is the \
     exception to the sharpened slope bound";

/// Irreducible curve class with `chi(v(K_X + D)) < 0`, together with its
/// dimension count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadCurve {
    pub class: DivisorClass,
    pub chi_twist: i128,
    /// `h^0(O(D)) - 1`.
    pub d: u128,
    /// Lower bound `r nu·D - r + 1` for the codimension of the locus with a
    /// trivial quotient on some curve in `|D|`.
    pub c: Rational,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadCurveScan {
    pub curves: Vec<BadCurve>,
    /// Candidate classes evaluated.
    pub evaluated: usize,
    /// Largest first coordinate (`d` on the plane, `a` in `aE + bF`) reached.
    pub max_first: i128,
    /// Largest `b` reached on `F_e`; zero on the plane.
    pub max_second: i128,
    /// Candidates with `K_X + D` effective, each confirmed to have `chi >= 0`.
    pub shortcut_checked: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionCount {
    pub d: u128,
    pub c: Rational,
    pub pass: bool,
}

/// `d = h^0(O(D)) - 1` against `c = r nu·D - r + 1`; passes when `d < c`.
pub fn dimension_count(v: &ChernCharacter, class: &DivisorClass) -> Result<DimensionCount> {
    if !class.is_irreducible_curve_class()? {
        return Err(Error::precondition(format!(
            "{class} is not an irreducible curve class"
        )));
    }
    let d = class.h0()? - 1;
    let r = Rational::from(v.rank());
    let c = v.c1().intersect(class)? - r + 1;
    Ok(DimensionCount {
        d,
        c,
        pass: Rational::from(d as i128) < c,
    })
}

/// Codimension `k(delta - r + k)` of the locus of rank `r`, degree `delta`
/// bundles on a line splitting with `k` trivial summands.
pub fn splitting_codim(k: i128, r: i128, delta: i128) -> Result<i128> {
    if r < 1 || k < 1 || k > r {
        return Err(Error::precondition(format!(
            "need 1 <= k <= r, got k = {k}, r = {r}"
        )));
    }
    if delta < r {
        return Err(Error::precondition(format!("slope {delta}/{r} is below 1")));
    }
    Ok(k * (delta - r + k))
}

/// Whether `D` has one of the shapes a bad curve can take: `H`, `2H` on the
/// plane; `bE + F` or `E + bF` on `F_0`; `F`, `2E + 2F` or `E + bF` on
/// `F_1`; `F`, `E` or `E + bF` with `b >= e` on `F_e`, `e >= 2`.
pub fn matches_bad_curve_shape(class: &DivisorClass) -> bool {
    if !class.is_integral() {
        return false;
    }
    let a = class.first().numer();
    let b = class.second().numer();
    match class.surface() {
        Surface::ProjectivePlane => a == 1 || a == 2,
        Surface::Hirzebruch(0) => (a == 1 && b >= 0) || (b == 1 && a >= 0),
        Surface::Hirzebruch(1) => (a, b) == (0, 1) || (a, b) == (2, 2) || (a == 1 && b >= 0),
        Surface::Hirzebruch(e) => {
            (a, b) == (0, 1) || (a, b) == (1, 0) || (a == 1 && b >= e as i128)
        }
    }
}

fn scan_preconditions(v: &ChernCharacter) -> Result<()> {
    if v.rank() < 2 {
        return Err(Error::precondition(format!("rank {} < 2", v.rank())));
    }
    if let Some(c) = first_failure(&ample_slope_conditions(v)) {
        return Err(Error::precondition(format!(
            "slope hypothesis {} fails ({} vs {})",
            c.statement, c.lhs, c.rhs
        )));
    }
    if v.discriminant().is_negative() {
        return Err(Error::precondition(format!(
            "delta = {} < 0",
            v.discriminant()
        )));
    }
    Ok(())
}

struct Scanner<'a> {
    v: &'a ChernCharacter,
    k: DivisorClass,
    out: BadCurveScan,
}

impl Scanner<'_> {
    /// Evaluates `chi(v(K + D))`, records `D` if bad, and returns the value.
    fn visit(&mut self, class: DivisorClass) -> Result<i128> {
        self.out.evaluated += 1;
        if self.out.evaluated > SCAN_CAP {
            return Err(Error::ScanLimit {
                cap: SCAN_CAP as i128,
                context: format!("bad-curve scan of {}", self.v),
            });
        }
        let a = class.first().numer();
        self.out.max_first = self.out.max_first.max(a);
        if !class.surface().is_plane() {
            self.out.max_second = self.out.max_second.max(class.second().numer());
        }
        let twist = self.k + class;
        let chi = self.v.twisted(&twist).euler_characteristic();
        if twist.is_effective() {
            self.out.shortcut_checked += 1;
            if chi < 0 {
                return Err(Error::Internal(format!(
                    "K + {class} is effective but chi(v(K + D)) = {chi}"
                )));
            }
        }
        if chi < 0 {
            let count = dimension_count(self.v, &class)?;
            self.out.curves.push(BadCurve {
                class,
                chi_twist: chi,
                d: count.d,
                c: count.c,
                passes: count.pass,
            });
        }
        Ok(chi)
    }
}

/// Every irreducible `D` with `chi(v(K_X + D)) < 0`, by exact scan.
///
/// Under the slope hypotheses `chi(v(K_X + D))` is increasing along each
/// family of irreducible classes: on the plane in `d`; on `F_e` for
/// `D = aE + (ae + t)F` both factors of `r P(nu')` are nonnegative and
/// increasing in `a` and `t`. Each row therefore stops at its first good
/// class, and the scan stops at the first row whose first class is good.
pub fn scan_bad_curves(v: &ChernCharacter) -> Result<BadCurveScan> {
    scan_preconditions(v)?;
    let x = v.surface();
    let mut s = Scanner {
        v,
        k: x.canonical_class(),
        out: BadCurveScan {
            curves: Vec::new(),
            evaluated: 0,
            max_first: 0,
            max_second: 0,
            shortcut_checked: 0,
        },
    };
    match x {
        Surface::ProjectivePlane => {
            let mut d = 1;
            while s.visit(x.plane_class(d))? < 0 {
                d += 1;
            }
        }
        Surface::Hirzebruch(e) => {
            let e = e as i128;
            s.visit(x.fiber())?;
            if e > 0 {
                s.visit(x.section())?;
            }
            // On F_0 the section E is the a = 1, t = 0 entry; a >= 2 needs
            // t >= 1 to stay irreducible.
            let t_min = |a: i128| if e == 0 && a >= 2 { 1 } else { 0 };
            let mut a = 1;
            loop {
                let mut t = t_min(a);
                let first = s.visit(x.ef_class(a, a * e + t))?;
                if first >= 0 {
                    break;
                }
                loop {
                    t += 1;
                    if s.visit(x.ef_class(a, a * e + t))? >= 0 {
                        break;
                    }
                }
                a += 1;
            }
        }
    }
    Ok(s.out)
}

pub fn enumerate_bad_curves(v: &ChernCharacter) -> Result<Vec<BadCurve>> {
    Ok(scan_bad_curves(v)?.curves)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum AmpleGgVerdict {
    AmpleGeneral,
    HypothesesFail { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmpleGgCertificate {
    pub tag: String,
    /// Rank and slope hypotheses.
    pub hypotheses: Vec<Condition>,
    pub gg: Option<GgClassification>,
    pub nonspecial: Option<NonspecialTrace>,
    pub bad_curves: Vec<BadCurve>,
    pub stability_assumed: bool,
    pub bridge_note: String,
    pub notes: Vec<String>,
    pub verdict: AmpleGgVerdict,
}

impl AmpleGgCertificate {
    pub fn is_ample(&self) -> bool {
        self.verdict == AmpleGgVerdict::AmpleGeneral
    }
}

/// Decides whether the general stable bundle of character `v` is globally
/// generated and ample. Failures are reported in the verdict.
pub fn ample_gg_verdict(v: &ChernCharacter) -> AmpleGgCertificate {
    let mut hypotheses = vec![Condition::new(
        "rank",
        "r >= 2",
        Rational::from(v.rank()),
        Relation::AtLeast,
        Rational::from(2),
    )];
    hypotheses.extend(ample_slope_conditions(v));
    let mut notes = Vec::new();
    if is_tangent_bundle(v) {
        notes.push(format!(
            "{}: {TANGENT_NOTE}",
            tags::TANGENT_BUNDLE_EXCEPTION
        ));
    }
    let mut cert = AmpleGgCertificate {
        tag: tags::AMPLE_GG.into(),
        hypotheses,
        gg: None,
        nonspecial: None,
        bad_curves: Vec::new(),
        stability_assumed: true,
        bridge_note: BRIDGE_NOTE.into(),
        notes,
        verdict: AmpleGgVerdict::AmpleGeneral,
    };
    let fail = |cert: &mut AmpleGgCertificate, reason: String| {
        cert.verdict = AmpleGgVerdict::HypothesesFail { reason };
    };

    if let Some(c) = first_failure(&cert.hypotheses).cloned() {
        fail(
            &mut cert,
            format!("{} fails: {} vs {} ({})", c.statement, c.lhs, c.rhs, c.id),
        );
        return cert;
    }
    match classify_global_generation(v) {
        Ok(gg) => {
            let not_gg = match &gg.verdict {
                GgVerdict::NotGloballyGenerated { reason } => Some(reason.clone()),
                GgVerdict::GloballyGenerated { .. } => None,
            };
            cert.gg = Some(gg);
            if let Some(reason) = not_gg {
                fail(&mut cert, format!("not globally generated: {reason}"));
                return cert;
            }
        }
        Err(err) => {
            fail(&mut cert, format!("global generation undecided: {err}"));
            return cert;
        }
    }
    match nonspecial_all_twists(v) {
        Ok(trace) => {
            let holds = trace.holds;
            cert.nonspecial = Some(trace);
            if !holds {
                fail(
                    &mut cert,
                    "twists v(K + D) leave the weak Brill-Noether range".into(),
                );
                return cert;
            }
        }
        Err(err) => {
            fail(&mut cert, err.to_string());
            return cert;
        }
    }
    match enumerate_bad_curves(v) {
        Ok(curves) => {
            let failing = curves.iter().find(|c| !c.passes).cloned();
            cert.bad_curves = curves;
            if let Some(b) = failing {
                fail(
                    &mut cert,
                    format!(
                        "dimension count fails on {}: d = {} >= c = {}",
                        b.class, b.d, b.c
                    ),
                );
            }
        }
        Err(err) => fail(&mut cert, err.to_string()),
    }
    cert
}
