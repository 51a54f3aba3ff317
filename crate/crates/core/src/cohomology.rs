//! Cohomology of the general prioritary bundle via weak Brill–Noether, and the
//! check that every twist `v(K_X + D)` by an irreducible curve class stays in
//! the range where weak Brill–Noether applies.

use serde::{Deserialize, Serialize};

use crate::character::ChernCharacter;
use crate::condition::{first_failure, Condition, Relation};
use crate::error::{Error, Result};
use crate::positivity::ample_slope_conditions;
use crate::rational::Rational;
use crate::surface::Surface;
use crate::tags;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTriple {
    pub h0: u128,
    pub h1: u128,
    pub h2: u128,
}

impl CohomologyTriple {
    pub fn euler_characteristic(&self) -> i128 {
        self.h0 as i128 - self.h1 as i128 + self.h2 as i128
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WbnCheck {
    pub applicable: bool,
    pub tag: String,
    pub conditions: Vec<Condition>,
    /// On `F_e` with `chi >= 0`: whether the general sheaf has at most one
    /// nonzero cohomology group, which then happens iff `nu·E >= -1`.
    /// `None` where the equivalence says nothing.
    pub converse: Option<bool>,
}

/// Hypotheses of weak Brill–Noether: `delta >= 0` on the plane; on `F_e`
/// additionally `nu·F >= -1` and `nu·E >= -1`.
pub fn wbn_applicable(v: &ChernCharacter) -> WbnCheck {
    let delta = v.discriminant();
    let mut conditions = vec![Condition::new(
        "delta",
        "delta >= 0",
        delta,
        Relation::AtLeast,
        Rational::ZERO,
    )];
    let (tag, converse) = match v.surface() {
        Surface::ProjectivePlane => (tags::WEAK_BRILL_NOETHER_PLANE, None),
        Surface::Hirzebruch(_) => {
            let nu = v.total_slope();
            conditions.push(Condition::new(
                "nu·F",
                "nu·F >= -1",
                nu.dot_fiber(),
                Relation::AtLeast,
                -Rational::ONE,
            ));
            conditions.push(Condition::new(
                "nu·E",
                "nu·E >= -1",
                nu.dot_section(),
                Relation::AtLeast,
                -Rational::ONE,
            ));
            let converse =
                (v.euler_characteristic() >= 0 && conditions[0].holds && conditions[1].holds)
                    .then(|| conditions[2].holds);
            (tags::WEAK_BRILL_NOETHER_HIRZEBRUCH, converse)
        }
    };
    WbnCheck {
        applicable: conditions.iter().all(|c| c.holds),
        tag: tag.into(),
        conditions,
        converse,
    }
}

/// Cohomology of the general member: `(max(chi, 0), max(-chi, 0), 0)`.
pub fn wbn_cohomology(v: &ChernCharacter) -> Result<CohomologyTriple> {
    let check = wbn_applicable(v);
    if let Some(c) = first_failure(&check.conditions) {
        return Err(Error::precondition(format!(
            "weak Brill-Noether does not apply: {} fails ({} vs {})",
            c.statement, c.lhs, c.rhs
        )));
    }
    let chi = v.euler_characteristic();
    Ok(CohomologyTriple {
        h0: chi.max(0) as u128,
        h1: (-chi).max(0) as u128,
        h2: 0,
    })
}

/// Symbolic verification that `v(K_X + D)` satisfies weak Brill–Noether for
/// every irreducible curve class `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonspecialTrace {
    pub tag: String,
    /// Worst case of each inequality over all irreducible `D`.
    pub steps: Vec<Condition>,
    pub holds: bool,
}

/// Over irreducible classes `D·F >= 0` and `D·E >= -e`, so the worst twists
/// satisfy `nu(v(K+D))·F >= nu·F - 2` and `nu(v(K+D))·E >= nu·E - 2`. Both
/// bounds are checked against `-1`, together with `delta >= 0`.
pub fn nonspecial_all_twists(v: &ChernCharacter) -> Result<NonspecialTrace> {
    if let Some(c) = first_failure(&ample_slope_conditions(v)) {
        return Err(Error::precondition(format!(
            "slope hypothesis {} fails ({} vs {})",
            c.statement, c.lhs, c.rhs
        )));
    }
    let delta = v.discriminant();
    let mut steps = vec![Condition::new(
        "delta",
        "delta(v(K+D)) = delta(v) >= 0",
        delta,
        Relation::AtLeast,
        Rational::ZERO,
    )];
    if let Surface::Hirzebruch(e) = v.surface() {
        let x = v.surface();
        let nu = v.total_slope();
        let k = x.canonical_class();
        let min_df = Rational::ZERO;
        let min_de = -Rational::from(e);
        steps.push(Condition::new(
            "nu·F",
            "nu·F + K·F + min D·F >= -1",
            nu.dot_fiber() + k.dot_fiber() + min_df,
            Relation::AtLeast,
            -Rational::ONE,
        ));
        steps.push(Condition::new(
            "nu·E",
            "nu·E + K·E + min D·E >= -1",
            nu.dot_section() + k.dot_section() + min_de,
            Relation::AtLeast,
            -Rational::ONE,
        ));
    }
    Ok(NonspecialTrace {
        tag: tags::NONSPECIAL_TWISTS.into(),
        holds: steps.iter().all(|c| c.holds),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    const P2: Surface = Surface::ProjectivePlane;

    #[test]
    fn applicability() {
        let t = ChernCharacter::new(2, P2.plane_class(3), q(3, 2)).unwrap();
        assert!(wbn_applicable(&t).applicable);
        let f1 = Surface::Hirzebruch(1);
        let v = ChernCharacter::new(2, f1.ef_class(2, 4), q(3, 1)).unwrap();
        assert_eq!(v.discriminant(), Rational::ZERO);
        assert!(wbn_applicable(&v).applicable);
        let f2 = Surface::Hirzebruch(2);
        let l = ChernCharacter::line_bundle(f2.ef_class(0, -2)).unwrap();
        let check = wbn_applicable(&l);
        assert!(!check.applicable);
        assert_eq!(check.conditions[2].lhs, q(-2, 1));
    }

    #[test]
    fn general_cohomology() {
        let v = ChernCharacter::new(2, P2.plane_class(2), Rational::ONE).unwrap();
        assert_eq!(
            wbn_cohomology(&v).unwrap(),
            CohomologyTriple {
                h0: 6,
                h1: 0,
                h2: 0
            }
        );
        let omega = ChernCharacter::new(2, P2.plane_class(-3), q(3, 2)).unwrap();
        assert_eq!(
            wbn_cohomology(&omega).unwrap(),
            CohomologyTriple {
                h0: 0,
                h1: 1,
                h2: 0
            }
        );
        let f1 = Surface::Hirzebruch(1);
        let v = ChernCharacter::new(2, f1.ef_class(2, 4), q(3, 1)).unwrap();
        assert_eq!(
            wbn_cohomology(&v).unwrap(),
            CohomologyTriple {
                h0: 10,
                h1: 0,
                h2: 0
            }
        );
        let bad = ChernCharacter::new(2, P2.plane_class(0), Rational::ONE).unwrap();
        assert!(wbn_cohomology(&bad).is_err());
    }

    #[test]
    fn twists_stay_in_range() {
        for e in 0..5 {
            let x = Surface::Hirzebruch(e);
            // nu = 3/2 E + (3e/2 + 2) F: nu·F = 3/2, nu·E = 2
            // c2 = nu^2 + 2 delta with nu^2 = 9e/4 + 6; pad delta to make it integral
            let sq = Rational::from(9 * e as i128) / 4;
            let delta = Rational::from(3) + (Rational::from(sq.ceil()) - sq) / 2;
            let v = ChernCharacter::from_log_invariants(
                2,
                x.ef_class(q(3, 2), Rational::from(3 * e as i128) / 2 + 2),
                delta,
            )
            .unwrap();
            let trace = nonspecial_all_twists(&v).unwrap();
            assert!(trace.holds, "{trace:?}");
            // worst F bound is nu·F - 2 = -1/2
            assert_eq!(trace.steps[1].lhs, q(-1, 2));
            assert_eq!(trace.steps[2].lhs, Rational::ZERO);
        }
        let p = ChernCharacter::new(2, P2.plane_class(4), Rational::ZERO).unwrap();
        assert!(nonspecial_all_twists(&p).unwrap().holds);
        let low = ChernCharacter::new(2, P2.plane_class(3), q(3, 2)).unwrap();
        assert!(nonspecial_all_twists(&low).is_err());
    }
}
