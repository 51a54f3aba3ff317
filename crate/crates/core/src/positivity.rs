//! Necessary numerical conditions for ampleness and the global-generation
//! classification of the general prioritary bundle.

use serde::{Deserialize, Serialize};

use crate::character::{ChernCharacter, LogInvariants};
use crate::condition::{first_failure, Condition, Relation};
use crate::error::{Error, Result};
use crate::rational::{q, Rational};
use crate::surface::Surface;
use crate::tags;

/// `delta >= 0`.
pub fn bogomolov_check(v: &ChernCharacter) -> bool {
    !v.discriminant().is_negative()
}

/// `nu^2/2 - delta/(r+1)`. Positive exactly when the Fulton–Lazarsfeld
/// inequality holds.
pub fn fulton_lazarsfeld_margin(rank: i128, inv: &LogInvariants) -> Rational {
    inv.nu.self_intersection() / 2 - inv.delta / Rational::from(rank + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FultonLazarsfeld {
    pub holds: bool,
    pub margin: Rational,
}

pub fn fulton_lazarsfeld_check(v: &ChernCharacter) -> FultonLazarsfeld {
    let margin = fulton_lazarsfeld_margin(v.rank(), &v.log_invariants());
    FultonLazarsfeld {
        holds: margin.is_positive(),
        margin,
    }
}

/// `ch T_{P^2} = (2, 3H, 3/2)`.
pub fn is_tangent_bundle(v: &ChernCharacter) -> bool {
    v.surface().is_plane()
        && v.rank() == 2
        && v.c1().first() == Rational::from(3)
        && v.ch2() == q(3, 2)
}

/// Slope inequalities a stable ample bundle of rank at least two must
/// satisfy (tangent bundle aside). They are also the hypotheses of the
/// globally generated ampleness theorem.
pub fn ample_slope_conditions(v: &ChernCharacter) -> Vec<Condition> {
    let nu = v.total_slope();
    match v.surface() {
        Surface::ProjectivePlane => vec![Condition::new(
            tags::STABLE_SLOPE_BOUND,
            "mu > 1 + 1/r",
            v.slope(),
            Relation::Greater,
            Rational::ONE + Rational::from(v.rank()).recip(),
        )],
        Surface::Hirzebruch(e) => vec![
            Condition::new(
                tags::STABLE_SLOPE_BOUND,
                "nu·F > 1",
                nu.dot_fiber(),
                Relation::Greater,
                Rational::ONE,
            ),
            if e == 0 {
                Condition::new(
                    tags::STABLE_SLOPE_BOUND,
                    "nu·E > 1",
                    nu.dot_section(),
                    Relation::Greater,
                    Rational::ONE,
                )
            } else {
                Condition::new(
                    tags::STABLE_SLOPE_BOUND,
                    "nu·E >= 1",
                    nu.dot_section(),
                    Relation::AtLeast,
                    Rational::ONE,
                )
            },
        ],
    }
}

/// Hypotheses of asymptotic ampleness: `nu - H` big and nef, spelled out.
/// Same as [`ample_slope_conditions`] except `nu·H > 1` on the plane.
pub fn asymptotic_slope_conditions(v: &ChernCharacter) -> Vec<Condition> {
    match v.surface() {
        Surface::ProjectivePlane => vec![Condition::new(
            tags::ASYMPTOTIC_AMPLE,
            "nu·H > 1",
            v.total_slope().dot_line(),
            Relation::Greater,
            Rational::ONE,
        )],
        Surface::Hirzebruch(_) => ample_slope_conditions(v)
            .into_iter()
            .map(|mut c| {
                c.id = tags::ASYMPTOTIC_AMPLE.to_string();
                c
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ObstructionVerdict {
    /// Every necessary condition holds.
    Unobstructed,
    /// Some necessary condition fails; the listed ids name which.
    Obstructed { failing: Vec<String> },
    /// `v = ch T_{P^2}`, the one exception to the slope bound.
    ExceptionalTangentBundle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub conditions: Vec<Condition>,
    /// Stability of the character is a caller assumption, never computed.
    pub stability_assumed: bool,
    pub verdict: ObstructionVerdict,
}

/// Full checklist of necessary conditions for a stable ample bundle of
/// character `v`.
pub fn necessary_obstructions(v: &ChernCharacter) -> ObstructionReport {
    let inv = v.log_invariants();
    let r = v.rank();
    let mut conditions = vec![
        Condition::new(
            tags::BOGOMOLOV,
            "delta >= 0",
            inv.delta,
            Relation::AtLeast,
            Rational::ZERO,
        ),
        Condition::new(
            tags::FULTON_LAZARSFELD,
            "nu^2/2 > delta/(r+1)",
            inv.nu.self_intersection() / 2,
            Relation::Greater,
            inv.delta / Rational::from(r + 1),
        ),
    ];
    match v.surface() {
        Surface::ProjectivePlane => conditions.push(Condition::new(
            tags::RESTRICTION_DEGREE,
            "mu >= 1",
            inv.mu,
            Relation::AtLeast,
            Rational::ONE,
        )),
        Surface::Hirzebruch(_) => {
            conditions.push(Condition::new(
                tags::RESTRICTION_DEGREE,
                "nu·E >= 1",
                inv.nu.dot_section(),
                Relation::AtLeast,
                Rational::ONE,
            ));
            conditions.push(Condition::new(
                tags::RESTRICTION_DEGREE,
                "nu·F >= 1",
                inv.nu.dot_fiber(),
                Relation::AtLeast,
                Rational::ONE,
            ));
        }
    }
    if r >= 2 {
        conditions.extend(ample_slope_conditions(v));
        if !v.surface().is_plane() {
            conditions.push(Condition::new(
                tags::FIBER_DEGREE_ONE,
                "nu·F != 1 (otherwise the bundle is a line bundle)",
                inv.nu.dot_fiber(),
                Relation::NotEqual,
                Rational::ONE,
            ));
        }
    }

    let verdict = if is_tangent_bundle(v) {
        ObstructionVerdict::ExceptionalTangentBundle
    } else {
        let failing: Vec<String> = conditions
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.id.clone())
            .collect();
        if failing.is_empty() {
            ObstructionVerdict::Unobstructed
        } else {
            ObstructionVerdict::Obstructed { failing }
        }
    };
    ObstructionReport {
        conditions,
        stability_assumed: true,
        verdict,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GgVerdict {
    GloballyGenerated { case: u8, description: String },
    NotGloballyGenerated { reason: String },
}

/// Whether the general `L`-prioritary bundle of a character is globally
/// generated, and which case of the classification decides it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GgClassification {
    pub tag: String,
    pub checks: Vec<Condition>,
    pub verdict: GgVerdict,
}

impl GgClassification {
    pub fn is_globally_generated(&self) -> bool {
        matches!(self.verdict, GgVerdict::GloballyGenerated { .. })
    }

    pub fn case(&self) -> Option<u8> {
        match self.verdict {
            GgVerdict::GloballyGenerated { case, .. } => Some(case),
            GgVerdict::NotGloballyGenerated { .. } => None,
        }
    }
}

fn gg_preconditions(v: &ChernCharacter) -> Result<()> {
    if v.discriminant().is_negative() {
        return Err(Error::precondition(format!(
            "delta = {} < 0 (Bogomolov)",
            v.discriminant()
        )));
    }
    if v.rank() < 2 {
        return Err(Error::precondition(format!("rank {} < 2", v.rank())));
    }
    if !v.surface().is_plane() && !v.total_slope().is_nef() {
        return Err(Error::precondition(format!(
            "total slope {} is not nef",
            v.total_slope()
        )));
    }
    Ok(())
}

/// `v = (r - m) ch O(aC) + m ch O((a+1)C)` for a class `C` with `C^2 = 0`
/// and integers `a >= 0`, `0 <= m < r`. Returns `(a, m)` when solvable.
fn split_pencil_solution(
    v: &ChernCharacter,
    class: &crate::surface::DivisorClass,
) -> Option<(i128, i128)> {
    let r = v.rank();
    // c1 must be k·C
    let c1 = v.c1();
    let k = if class.first().is_zero() {
        (c1.first().is_zero()).then(|| c1.second())?
    } else {
        (c1.second().is_zero()).then(|| c1.first())?
    };
    let k = k.to_integer()?;
    if k < 0 {
        return None;
    }
    let (a, m) = (k.div_euclid(r), k.rem_euclid(r));
    let low = ChernCharacter::line_bundle(class.scaled(a.into())).ok()?;
    let high = ChernCharacter::line_bundle(class.scaled((a + 1).into())).ok()?;
    let mut rebuilt = low.scale(r - m).ok();
    if m > 0 {
        let top = high.scale(m).ok()?;
        rebuilt = match rebuilt {
            Some(w) => w.direct_sum(&top).ok(),
            None => Some(top),
        };
    }
    (rebuilt? == *v).then_some((a, m))
}

/// `(r+1) ch O - ch O(D)`.
fn special_kernel_character(v: &ChernCharacter, d: crate::surface::DivisorClass) -> ChernCharacter {
    let o = ChernCharacter::trivial(v.surface(), 1).expect("rank one");
    let l = ChernCharacter::line_bundle(d).expect("integral class");
    o.combination(v.rank() + 1, &l, 1)
        .expect("rank r of the special character is positive")
}

/// Exact case dispatch of the global-generation classification.
///
/// Requires `delta >= 0`, `r >= 2`, and on Hirzebruch surfaces a nef total
/// slope.
pub fn classify_global_generation(v: &ChernCharacter) -> Result<GgClassification> {
    gg_preconditions(v)?;
    let r = v.rank();
    let chi = v.euler_characteristic();
    let rr = Rational::from(r);
    let chi_q = Rational::from(chi);
    let gg = |case: u8, description: String| GgVerdict::GloballyGenerated { case, description };
    let surface = v.surface();

    match surface {
        Surface::ProjectivePlane => {
            let mu = v.slope();
            let chi_m1 = v.twisted(&surface.plane_class(-1)).euler_characteristic();
            let checks = vec![
                Condition::new("mu", "mu > 0", mu, Relation::Greater, Rational::ZERO),
                Condition::new(
                    "chi(v(-1))",
                    "chi(v(-1)) >= 0",
                    chi_m1.into(),
                    Relation::AtLeast,
                    Rational::ZERO,
                ),
                Condition::new(
                    "chi(v)",
                    "chi(v) >= r + 2",
                    chi_q,
                    Relation::AtLeast,
                    rr + 2,
                ),
            ];
            let verdict = if mu.is_zero() {
                if *v == ChernCharacter::trivial(surface, r)? {
                    gg(1, format!("v = {r}·ch O"))
                } else {
                    GgVerdict::NotGloballyGenerated {
                        reason: "mu = 0 but v is not r·ch O".into(),
                    }
                }
            } else if mu.is_negative() {
                GgVerdict::NotGloballyGenerated {
                    reason: format!("mu = {mu} < 0"),
                }
            } else if chi_m1 >= 0 {
                gg(2, format!("mu > 0 and chi(v(-1)) = {chi_m1} >= 0"))
            } else if chi >= r + 2 {
                gg(3, format!("chi(v(-1)) < 0 and chi(v) = {chi} >= r + 2"))
            } else if chi == r + 1 && *v == special_kernel_character(v, surface.plane_class(-2)) {
                gg(4, "v = (r+1) ch O - ch O(-2)".into())
            } else {
                GgVerdict::NotGloballyGenerated {
                    reason: format!(
                        "chi(v(-1)) = {chi_m1} < 0, chi(v) = {chi} < r + 2, and v is not (r+1) ch O - ch O(-2)"
                    ),
                }
            };
            Ok(GgClassification {
                tag: tags::GG_CLASSIFICATION_PLANE.into(),
                checks,
                verdict,
            })
        }
        Surface::Hirzebruch(0) => {
            let nu = v.total_slope();
            let (x, y) = (nu.dot_fiber(), nu.dot_section());
            let chi_me = v.twisted(&-surface.section()).euler_characteristic();
            let chi_mf = v.twisted(&-surface.fiber()).euler_characteristic();
            let checks = vec![
                Condition::new("nu·E", "nu·E > 0", y, Relation::Greater, Rational::ZERO),
                Condition::new("nu·F", "nu·F > 0", x, Relation::Greater, Rational::ZERO),
                Condition::new(
                    "chi(v(-E))",
                    "chi(v(-E)) >= 0",
                    chi_me.into(),
                    Relation::AtLeast,
                    Rational::ZERO,
                ),
                Condition::new(
                    "chi(v(-F))",
                    "chi(v(-F)) >= 0",
                    chi_mf.into(),
                    Relation::AtLeast,
                    Rational::ZERO,
                ),
                Condition::new(
                    "chi(v)",
                    "chi(v) >= r + 2",
                    chi_q,
                    Relation::AtLeast,
                    rr + 2,
                ),
            ];
            let verdict = if x.is_zero() || y.is_zero() {
                let sol = split_pencil_solution(v, &surface.section())
                    .map(|s| (s, "E"))
                    .or_else(|| split_pencil_solution(v, &surface.fiber()).map(|s| (s, "F")));
                match sol {
                    Some(((a, m), c)) => gg(
                        1,
                        format!("v = {}·ch O({a}{c}) + {m}·ch O({}{c})", r - m, a + 1),
                    ),
                    None => GgVerdict::NotGloballyGenerated {
                        reason: "nu·E = 0 or nu·F = 0 but v is not a balanced sum of line bundles from one ruling".into(),
                    },
                }
            } else if chi_me >= 0 || chi_mf >= 0 {
                gg(
                    2,
                    format!("chi(v(-E)) = {chi_me}, chi(v(-F)) = {chi_mf}, one is >= 0"),
                )
            } else if chi >= r + 2 {
                gg(
                    3,
                    format!("chi(v(-E)), chi(v(-F)) < 0 and chi(v) = {chi} >= r + 2"),
                )
            } else {
                GgVerdict::NotGloballyGenerated {
                    reason: format!(
                        "chi(v(-E)) = {chi_me} < 0, chi(v(-F)) = {chi_mf} < 0, chi(v) = {chi} < r + 2"
                    ),
                }
            };
            Ok(GgClassification {
                tag: tags::GG_CLASSIFICATION_QUADRIC.into(),
                checks,
                verdict,
            })
        }
        Surface::Hirzebruch(e) => {
            let x = v.total_slope().dot_fiber();
            let chi_mf = v.twisted(&-surface.fiber()).euler_characteristic();
            let checks = vec![
                Condition::new("nu·F", "nu·F > 0", x, Relation::Greater, Rational::ZERO),
                Condition::new(
                    "chi(v(-F))",
                    "chi(v(-F)) >= 0",
                    chi_mf.into(),
                    Relation::AtLeast,
                    Rational::ZERO,
                ),
                Condition::new(
                    "chi(v)",
                    "chi(v) >= r + 2",
                    chi_q,
                    Relation::AtLeast,
                    rr + 2,
                ),
            ];
            let verdict = if x.is_zero() {
                match split_pencil_solution(v, &surface.fiber()) {
                    Some((a, m)) => gg(
                        1,
                        format!("v = {}·ch O({a}F) + {m}·ch O({}F)", r - m, a + 1),
                    ),
                    None => GgVerdict::NotGloballyGenerated {
                        reason: "nu·F = 0 but v is not a balanced sum of fiber line bundles".into(),
                    },
                }
            } else if chi_mf >= 0 {
                gg(2, format!("nu·F > 0 and chi(v(-F)) = {chi_mf} >= 0"))
            } else if chi >= r + 2 {
                gg(3, format!("chi(v(-F)) < 0 and chi(v) = {chi} >= r + 2"))
            } else if e == 1
                && chi == r + 1
                && *v == special_kernel_character(v, surface.ef_class(-2, -2))
            {
                gg(4, "v = (r+1) ch O - ch O(-2E-2F)".into())
            } else {
                GgVerdict::NotGloballyGenerated {
                    reason: format!(
                        "chi(v(-F)) = {chi_mf} < 0 and chi(v) = {chi} < r + 2 with no special form"
                    ),
                }
            };
            Ok(GgClassification {
                tag: tags::GG_CLASSIFICATION_HIRZEBRUCH.into(),
                checks,
                verdict,
            })
        }
    }
}

/// One-sided criterion: `chi(v(-L)) >= 0` with `nu` big and nef forces
/// global generation. `false` means the criterion is silent.
pub fn gg_quick_criterion(v: &ChernCharacter) -> Result<bool> {
    if v.discriminant().is_negative() {
        return Err(Error::precondition(format!(
            "delta = {} < 0 (Bogomolov)",
            v.discriminant()
        )));
    }
    if v.rank() < 2 {
        return Err(Error::precondition(format!("rank {} < 2", v.rank())));
    }
    if !v.total_slope().is_big_and_nef() {
        return Err(Error::precondition(format!(
            "total slope {} is not big and nef",
            v.total_slope()
        )));
    }
    let l = v.surface().distinguished_line();
    Ok(v.twisted(&-l).euler_characteristic() >= 0)
}

/// First failing slope hypothesis of the globally generated ampleness
/// theorem, if any.
pub fn failing_ample_slope(v: &ChernCharacter) -> Option<Condition> {
    first_failure(&ample_slope_conditions(v)).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    const P2: Surface = Surface::ProjectivePlane;

    fn p2(r: i128, a: i128, ch2: Rational) -> ChernCharacter {
        ChernCharacter::new(r, P2.plane_class(a), ch2).unwrap()
    }

    fn fe(e: u32, r: i128, x: i128, y: i128, ch2: Rational) -> ChernCharacter {
        ChernCharacter::new(r, Surface::Hirzebruch(e).ef_class(x, y), ch2).unwrap()
    }

    #[test]
    fn bogomolov() {
        assert!(bogomolov_check(&p2(2, 3, q(3, 2))));
        assert!(bogomolov_check(&p2(1, 0, Rational::ZERO)));
        assert!(!bogomolov_check(&p2(2, 0, Rational::ONE)));
        assert_eq!(p2(2, 0, Rational::ONE).discriminant(), q(-1, 2));
    }

    #[test]
    fn fulton_lazarsfeld_boundary() {
        let nu = P2.plane_class(q(3, 2));
        let at = |delta| {
            fulton_lazarsfeld_margin(
                2,
                &LogInvariants {
                    mu: q(3, 2),
                    nu,
                    delta,
                },
            )
        };
        assert!(at(q(7, 8)).is_positive());
        assert!(at(q(27, 8)).is_zero());
        assert!(at(q(7, 2)).is_negative());
        let t = fulton_lazarsfeld_check(&p2(2, 3, q(3, 2)));
        assert!(t.holds);
        assert_eq!(t.margin, q(9, 8) - q(1, 8));
    }

    #[test]
    fn intro_character_is_obstructed() {
        let v = ChernCharacter::parse_log(P2, "2:3/2:7/8").unwrap();
        let report = necessary_obstructions(&v);
        assert!(fulton_lazarsfeld_check(&v).holds);
        match report.verdict {
            ObstructionVerdict::Obstructed { failing } => {
                assert_eq!(failing, vec![tags::STABLE_SLOPE_BOUND.to_string()])
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tangent_bundle_exception() {
        let report = necessary_obstructions(&p2(2, 3, q(3, 2)));
        assert_eq!(report.verdict, ObstructionVerdict::ExceptionalTangentBundle);
        assert!(!is_tangent_bundle(&p2(4, 6, q(3, 1))));
    }

    #[test]
    fn fiber_degree_one_is_cited() {
        // c1 = 2E + 3F on F1 has nu·F = 1
        let v = fe(1, 2, 2, 3, Rational::ZERO);
        let report = necessary_obstructions(&v);
        let ObstructionVerdict::Obstructed { failing } = report.verdict else {
            panic!("expected obstruction");
        };
        assert!(failing.contains(&tags::FIBER_DEGREE_ONE.to_string()));
    }

    #[test]
    fn plane_classification_cases() {
        let c = classify_global_generation(&p2(3, 0, Rational::ZERO)).unwrap();
        assert_eq!(c.case(), Some(1));
        let c = classify_global_generation(&p2(2, 3, q(3, 2))).unwrap();
        assert_eq!(c.case(), Some(2));
        assert_eq!(p2(2, 1, q(-1, 2)).euler_characteristic(), 3);
        let special = p2(3, 2, q(-2, 1));
        assert_eq!(
            special.twisted(&P2.plane_class(-1)).euler_characteristic(),
            -1
        );
        assert_eq!(special.euler_characteristic(), 4);
        let c = classify_global_generation(&special).unwrap();
        assert_eq!(c.case(), Some(4));
        // mu = 0 but not trivial
        let c = classify_global_generation(&p2(2, 0, q(-1, 1))).unwrap();
        assert!(!c.is_globally_generated());
    }

    #[test]
    fn classification_preconditions() {
        assert!(classify_global_generation(&p2(2, 0, Rational::ONE)).is_err());
        assert!(classify_global_generation(&p2(1, 1, q(1, 2))).is_err());
        let not_nef = fe(2, 2, 2, 2, q(-2, 1));
        assert!(!not_nef.total_slope().is_nef());
        assert!(classify_global_generation(&not_nef).is_err());
    }

    #[test]
    fn hirzebruch_split_case() {
        let f1 = Surface::Hirzebruch(1);
        // 2·ch O(F) + ch O(2F) on F1, rank 3, c1 = 4F
        let v = ChernCharacter::new(3, f1.ef_class(0, 4), Rational::ZERO).unwrap();
        let c = classify_global_generation(&v).unwrap();
        assert_eq!(c.case(), Some(1));
        let trivial = ChernCharacter::trivial(f1, 2).unwrap();
        assert_eq!(
            classify_global_generation(&trivial).unwrap().case(),
            Some(1)
        );
        let f0 = Surface::Hirzebruch(0);
        let v = ChernCharacter::new(2, f0.ef_class(3, 0), Rational::ZERO).unwrap();
        assert_eq!(classify_global_generation(&v).unwrap().case(), Some(1));
        // nu·F = 0 with nonzero ch2 is not split
        let v = ChernCharacter::new(2, f1.ef_class(0, 2), q(-1, 1)).unwrap();
        assert!(!classify_global_generation(&v)
            .unwrap()
            .is_globally_generated());
    }

    #[test]
    fn hirzebruch_special_case() {
        let f1 = Surface::Hirzebruch(1);
        // (r+1) ch O - ch O(-2E-2F) with r = 2
        let v = ChernCharacter::new(2, f1.ef_class(2, 2), q(-2, 1)).unwrap();
        assert_eq!(v.euler_characteristic(), 3);
        assert!(v.twisted(&-f1.fiber()).euler_characteristic() < 0);
        assert_eq!(classify_global_generation(&v).unwrap().case(), Some(4));
    }

    #[test]
    fn quick_criterion_examples() {
        assert!(gg_quick_criterion(&p2(2, 4, Rational::ZERO)).unwrap());
        let v = fe(1, 2, 2, 4, q(3, 1));
        assert_eq!(
            v.twisted(&-Surface::Hirzebruch(1).fiber())
                .euler_characteristic(),
            6
        );
        assert!(gg_quick_criterion(&v).unwrap());
        assert!(matches!(
            gg_quick_criterion(&p2(2, 4, q(8, 1))),
            Err(Error::Precondition(_))
        ));
    }
}
