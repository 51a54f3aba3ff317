//! Chern characters `(r, c1, ch2)` and their logarithmic invariants.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surface::{DivisorClass, Surface};

/// Chern character of a sheaf of positive rank.
///
/// Always valid: `r >= 1`, `c1` integral and `c2 = c1^2/2 - ch2` integral.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "CharacterRepr", try_from = "CharacterRepr")]
pub struct ChernCharacter {
    rank: i128,
    c1: DivisorClass,
    ch2: Rational,
}

/// Slope `mu`, total slope `nu` and discriminant `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogInvariants {
    pub mu: Rational,
    pub nu: DivisorClass,
    pub delta: Rational,
}

impl ChernCharacter {
    pub fn new(rank: i128, c1: DivisorClass, ch2: Rational) -> Result<Self> {
        if rank < 1 {
            return Err(Error::Rank(rank));
        }
        c1.require_integral()?;
        let c2 = c1.self_intersection() / 2 - ch2;
        if !c2.is_integer() {
            return Err(Error::Integrality(c2.to_string()));
        }
        Ok(ChernCharacter { rank, c1, ch2 })
    }

    /// Builds `(r, r·nu, r(nu^2/2 - delta))` and validates it.
    pub fn from_log_invariants(rank: i128, nu: DivisorClass, delta: Rational) -> Result<Self> {
        if rank < 1 {
            return Err(Error::Rank(rank));
        }
        let r = Rational::from(rank);
        let c1 = nu.scaled(r);
        let ch2 = r * (nu.self_intersection() / 2 - delta);
        Self::new(rank, c1, ch2)
    }

    /// `ch O(D) = (1, D, D^2/2)`.
    pub fn line_bundle(d: DivisorClass) -> Result<Self> {
        d.require_integral()?;
        Ok(ChernCharacter {
            rank: 1,
            c1: d,
            ch2: d.self_intersection() / 2,
        })
    }

    /// `r · ch O`.
    pub fn trivial(surface: Surface, rank: i128) -> Result<Self> {
        Self::new(rank, surface.zero_class(), Rational::ZERO)
    }

    pub fn surface(&self) -> Surface {
        self.c1.surface()
    }

    pub fn rank(&self) -> i128 {
        self.rank
    }

    pub fn c1(&self) -> DivisorClass {
        self.c1
    }

    pub fn ch2(&self) -> Rational {
        self.ch2
    }

    pub fn c2(&self) -> i128 {
        (self.c1.self_intersection() / 2 - self.ch2)
            .to_integer()
            .expect("validated character has integral c2")
    }

    /// `c1 / r`.
    pub fn total_slope(&self) -> DivisorClass {
        self.c1.scaled(Rational::from(self.rank).recip())
    }

    /// `(c1·H) / (r H^2)`.
    pub fn slope(&self) -> Rational {
        let h = self.surface().polarization();
        self.c1.dot(&h) / (Rational::from(self.rank) * h.self_intersection())
    }

    /// `nu^2/2 - ch2/r`.
    pub fn discriminant(&self) -> Rational {
        let nu = self.total_slope();
        nu.self_intersection() / 2 - self.ch2 / Rational::from(self.rank)
    }

    pub fn log_invariants(&self) -> LogInvariants {
        LogInvariants {
            mu: self.slope(),
            nu: self.total_slope(),
            delta: self.discriminant(),
        }
    }

    /// `r (P(nu) - delta)` as an exact rational.
    pub fn euler_characteristic_exact(&self) -> Rational {
        let nu = self.total_slope();
        Rational::from(self.rank) * (self.surface().hilbert_poly(&nu) - self.discriminant())
    }

    /// Riemann–Roch Euler characteristic. Integral for every valid character.
    pub fn euler_characteristic(&self) -> i128 {
        let chi = self.euler_characteristic_exact();
        chi.to_integer()
            .unwrap_or_else(|| panic!("non-integral Euler characteristic {chi} for {self}"))
    }

    /// `v(D)`: rank fixed, `c1 + rD`, `ch2 + c1·D + rD^2/2`.
    pub fn twist(&self, d: &DivisorClass) -> Result<Self> {
        if d.surface() != self.surface() {
            return Err(Error::SurfaceMismatch(self.surface(), d.surface()));
        }
        d.require_integral()?;
        let r = Rational::from(self.rank);
        Ok(ChernCharacter {
            rank: self.rank,
            c1: self.c1 + d.scaled(r),
            ch2: self.ch2 + self.c1.dot(d) + r * d.self_intersection() / 2,
        })
    }

    /// Twist by a class the caller knows to be integral and on this surface.
    pub(crate) fn twisted(&self, d: &DivisorClass) -> Self {
        self.twist(d).expect("integral twist on the same surface")
    }

    /// `(r, -c1, ch2)`.
    pub fn dual(&self) -> Self {
        ChernCharacter {
            rank: self.rank,
            c1: -self.c1,
            ch2: self.ch2,
        }
    }

    /// `n · v`.
    pub fn scale(&self, n: i128) -> Result<Self> {
        if n < 1 {
            return Err(Error::precondition(format!(
                "scale factor must be >= 1, got {n}"
            )));
        }
        let k = Rational::from(n);
        Ok(ChernCharacter {
            rank: self.rank * n,
            c1: self.c1.scaled(k),
            ch2: self.ch2 * k,
        })
    }

    /// Character of the direct sum.
    pub fn direct_sum(&self, other: &ChernCharacter) -> Result<Self> {
        Ok(ChernCharacter {
            rank: self.rank + other.rank,
            c1: self.c1.checked_add(&other.c1)?,
            ch2: self.ch2 + other.ch2,
        })
    }

    /// `a·self - b·other`, when the result has positive rank.
    pub(crate) fn combination(&self, a: i128, other: &ChernCharacter, b: i128) -> Result<Self> {
        let rank = a * self.rank - b * other.rank;
        let c1 = self.c1.scaled(a.into()) - other.c1.scaled(b.into());
        let ch2 = self.ch2 * a - other.ch2 * b;
        Self::new(rank, c1, ch2)
    }

    /// Parses the canonical `r:c1:ch2` form, with `c1` written `a` on the
    /// plane or `a,b` (meaning `aE + bF`) on a Hirzebruch surface.
    pub fn parse(surface: Surface, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let [r, c1, ch2] = parts.as_slice() else {
            return Err(Error::Parse(format!(
                "character `{s}` must have the form r:c1:ch2"
            )));
        };
        let rank = r
            .trim()
            .parse::<i128>()
            .map_err(|_| Error::Parse(format!("malformed rank `{r}`")))?;
        let c1 = parse_class(surface, c1)?;
        let ch2 = ch2.parse::<Rational>()?;
        Self::new(rank, c1, ch2)
    }

    /// Parses `r:nu:delta` with rational entries in `nu`.
    pub fn parse_log(surface: Surface, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let [r, nu, delta] = parts.as_slice() else {
            return Err(Error::Parse(format!(
                "logarithmic character `{s}` must have the form r:nu:delta"
            )));
        };
        let rank = r
            .trim()
            .parse::<i128>()
            .map_err(|_| Error::Parse(format!("malformed rank `{r}`")))?;
        let nu = parse_class(surface, nu)?;
        let delta = delta.parse::<Rational>()?;
        Self::from_log_invariants(rank, nu, delta)
    }
}

fn parse_class(surface: Surface, s: &str) -> Result<DivisorClass> {
    let coords = s
        .split(',')
        .map(|t| t.parse::<Rational>())
        .collect::<Result<Vec<_>>>()?;
    surface.class_from_coords(&coords)
}

/// Canonical text: `r:a:ch2` or `r:a,b:ch2`.
impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.rank)?;
        let coords: Vec<String> = self.c1.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "{}:{}", coords.join(","), self.ch2)
    }
}

impl fmt::Debug for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ch({}) on {}", self, self.surface())
    }
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr {
    rank: i128,
    c1: DivisorClass,
    ch2: Rational,
}

impl From<ChernCharacter> for CharacterRepr {
    fn from(v: ChernCharacter) -> Self {
        CharacterRepr {
            rank: v.rank,
            c1: v.c1,
            ch2: v.ch2,
        }
    }
}

impl TryFrom<CharacterRepr> for ChernCharacter {
    type Error = Error;
    fn try_from(r: CharacterRepr) -> Result<Self> {
        ChernCharacter::new(r.rank, r.c1, r.ch2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    const P2: Surface = Surface::ProjectivePlane;

    fn p2(r: i128, a: i128, ch2: Rational) -> ChernCharacter {
        ChernCharacter::new(r, P2.plane_class(a), ch2).unwrap()
    }

    fn tangent() -> ChernCharacter {
        p2(2, 3, q(3, 2))
    }

    #[test]
    fn construction_and_validation() {
        assert_eq!(tangent().c2(), 3);
        assert!(matches!(
            ChernCharacter::new(2, P2.plane_class(3), q(1, 3)),
            Err(Error::Integrality(_))
        ));
        assert!(matches!(
            ChernCharacter::new(0, P2.plane_class(1), Rational::ZERO),
            Err(Error::Rank(0))
        ));
        assert!(matches!(
            ChernCharacter::new(2, P2.plane_class(q(1, 2)), Rational::ZERO),
            Err(Error::NonIntegral(_))
        ));
    }

    #[test]
    fn log_invariants_of_tangent_bundle() {
        let inv = tangent().log_invariants();
        assert_eq!(inv.mu, q(3, 2));
        assert_eq!(inv.nu, P2.plane_class(q(3, 2)));
        assert_eq!(inv.delta, q(3, 8));
        assert_eq!(p2(4, 6, q(3, 1)).log_invariants(), inv);
    }

    #[test]
    fn gieseker_twelve_discriminant() {
        let inv = p2(2, 20, q(-142, 1)).log_invariants();
        assert_eq!(inv.nu, P2.plane_class(10));
        assert_eq!(inv.delta, q(121, 1));
    }

    #[test]
    fn log_constructor_clears_denominators() {
        let v = ChernCharacter::from_log_invariants(2, P2.plane_class(q(3, 2)), q(7, 8)).unwrap();
        assert_eq!(v, p2(2, 3, q(1, 2)));
        assert_eq!(v.c2(), 4);
        // nu = 3/2 H with delta = 7/2 gives a non-integral c2
        assert!(ChernCharacter::from_log_invariants(2, P2.plane_class(q(3, 2)), q(7, 2)).is_err());
    }

    #[test]
    fn euler_characteristics() {
        for s in [P2, Surface::Hirzebruch(0), Surface::Hirzebruch(3)] {
            assert_eq!(
                ChernCharacter::trivial(s, 1)
                    .unwrap()
                    .euler_characteristic(),
                1
            );
        }
        // Euler sequence: chi(T) = 3 chi(O(1)) - chi(O) = 8
        assert_eq!(tangent().euler_characteristic(), 8);
        // cotangent: chi(Omega) = 3 chi(O(-1)) - chi(O) = -1
        assert_eq!(p2(2, -3, q(3, 2)).euler_characteristic(), -1);
    }

    #[test]
    fn twist_examples() {
        let v = tangent();
        assert_eq!(v.twist(&P2.zero_class()).unwrap(), v);
        let w = v.twist(&P2.plane_class(-1)).unwrap();
        assert_eq!(w, p2(2, 1, q(-1, 2)));
        assert_eq!(w.discriminant(), q(3, 8));
        let d = Surface::Hirzebruch(1).ef_class(1, 2);
        let o = ChernCharacter::trivial(Surface::Hirzebruch(1), 1).unwrap();
        assert_eq!(
            o.twist(&d).unwrap(),
            ChernCharacter::line_bundle(d).unwrap()
        );
        assert!(v.twist(&P2.plane_class(q(1, 2))).is_err());
    }

    #[test]
    fn dual_and_scale() {
        let v = tangent();
        assert_eq!(v.dual(), p2(2, -3, q(3, 2)));
        assert_eq!(v.dual().dual(), v);
        assert_eq!(v.scale(1).unwrap(), v);
        let g = p2(2, 20, q(-142, 1));
        assert_eq!(g.scale(2).unwrap(), p2(4, 40, q(-284, 1)));
        assert!(v.scale(0).is_err());
        let d = P2.plane_class(2);
        let l = ChernCharacter::line_bundle(d).unwrap();
        assert_eq!(l.dual(), ChernCharacter::line_bundle(-d).unwrap());
    }

    #[test]
    fn line_bundle_characters() {
        assert_eq!(
            ChernCharacter::line_bundle(P2.zero_class()).unwrap(),
            p2(1, 0, Rational::ZERO)
        );
        assert_eq!(
            ChernCharacter::line_bundle(P2.plane_class(1)).unwrap(),
            p2(1, 1, q(1, 2))
        );
        let f1 = Surface::Hirzebruch(1);
        let l = ChernCharacter::line_bundle(f1.ef_class(1, 2)).unwrap();
        assert_eq!(l.ch2(), q(3, 2));
    }

    #[test]
    fn canonical_text() {
        let f1 = Surface::Hirzebruch(1);
        let v = ChernCharacter::parse(f1, "2:3,5:5/2").unwrap();
        assert_eq!(v.c1(), f1.ef_class(3, 5));
        assert_eq!(v.to_string(), "2:3,5:5/2");
        assert_eq!(ChernCharacter::parse(P2, "2:3:3/2").unwrap(), tangent());
        assert!(matches!(
            ChernCharacter::parse(Surface::Hirzebruch(2), "2:3,5:1/3"),
            Err(Error::Integrality(_))
        ));
        assert!(matches!(
            ChernCharacter::parse(P2, "2:3,1:0"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            ChernCharacter::parse(P2, "2:3"),
            Err(Error::Parse(_))
        ));
        let w = ChernCharacter::parse_log(P2, "2:3/2:7/8").unwrap();
        assert_eq!(w, p2(2, 3, q(1, 2)));
    }

    #[test]
    fn json_round_trip() {
        let v = ChernCharacter::parse(Surface::Hirzebruch(1), "2:3,5:5/2").unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<ChernCharacter>(&s).unwrap(), v);
        let bad =
            r#"{"rank":2,"c1":{"surface":"P2","H":{"num":3,"den":1}},"ch2":{"num":1,"den":3}}"#;
        assert!(serde_json::from_str::<ChernCharacter>(bad).is_err());
    }
}
