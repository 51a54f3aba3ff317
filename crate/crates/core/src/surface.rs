//! The projective plane and the Hirzebruch surfaces as lattices with an
//! intersection form.
//!
//! Divisor classes are written in the basis `H` on the plane and `E, F` on a
//! Hirzebruch surface, where `F` is the fiber class and `E` the section of
//! self-intersection `-e`. Coefficients are exact rationals so the same type
//! carries total slopes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Surface {
    ProjectivePlane,
    Hirzebruch(u32),
}

impl Surface {
    pub fn is_plane(&self) -> bool {
        matches!(self, Surface::ProjectivePlane)
    }

    /// The `e` of a Hirzebruch surface; `None` on the plane.
    pub fn hirzebruch_e(&self) -> Option<u32> {
        match self {
            Surface::ProjectivePlane => None,
            Surface::Hirzebruch(e) => Some(*e),
        }
    }

    /// `xH` on the plane. Panics on a Hirzebruch surface.
    pub fn plane_class(&self, x: impl Into<Rational>) -> DivisorClass {
        assert!(self.is_plane(), "plane_class on {self}");
        DivisorClass {
            surface: *self,
            coords: [x.into(), Rational::ZERO],
        }
    }

    /// `xE + yF`. Panics on the plane.
    pub fn ef_class(&self, x: impl Into<Rational>, y: impl Into<Rational>) -> DivisorClass {
        assert!(!self.is_plane(), "ef_class on {self}");
        DivisorClass {
            surface: *self,
            coords: [x.into(), y.into()],
        }
    }

    /// Builds a class from its coordinate list: one entry on the plane, two on
    /// a Hirzebruch surface.
    pub fn class_from_coords(&self, coords: &[Rational]) -> Result<DivisorClass> {
        match (self, coords) {
            (Surface::ProjectivePlane, [a]) => Ok(self.plane_class(*a)),
            (Surface::Hirzebruch(_), [x, y]) => Ok(self.ef_class(*x, *y)),
            _ => Err(Error::Parse(format!(
                "{self} needs {} divisor coordinate(s), got {}",
                self.picard_rank(),
                coords.len()
            ))),
        }
    }

    pub fn picard_rank(&self) -> usize {
        if self.is_plane() {
            1
        } else {
            2
        }
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass {
            surface: *self,
            coords: [Rational::ZERO; 2],
        }
    }

    /// `-3H` on the plane, `-2E - (e+2)F` on `F_e`.
    pub fn canonical_class(&self) -> DivisorClass {
        match *self {
            Surface::ProjectivePlane => self.plane_class(-3),
            Surface::Hirzebruch(e) => self.ef_class(-2, -(e as i128 + 2)),
        }
    }

    /// The minimal ample polarization: `H` on the plane, `E + (e+1)F` on `F_e`.
    pub fn polarization(&self) -> DivisorClass {
        match *self {
            Surface::ProjectivePlane => self.plane_class(1),
            Surface::Hirzebruch(e) => self.ef_class(1, e as i128 + 1),
        }
    }

    /// The class `L`: `H` on the plane, the fiber `F` on `F_e`.
    pub fn distinguished_line(&self) -> DivisorClass {
        match *self {
            Surface::ProjectivePlane => self.plane_class(1),
            Surface::Hirzebruch(_) => self.fiber(),
        }
    }

    /// `F`. Panics on the plane.
    pub fn fiber(&self) -> DivisorClass {
        self.ef_class(0, 1)
    }

    /// `E`. Panics on the plane.
    pub fn section(&self) -> DivisorClass {
        self.ef_class(1, 0)
    }

    /// Euler characteristic of `O_X(nu)` as a polynomial in the slope:
    /// `(x^2 + 3x + 2)/2` on the plane and `(x+1)(y+1-ex/2)` on `F_e`.
    pub fn hilbert_poly(&self, nu: &DivisorClass) -> Rational {
        debug_assert_eq!(nu.surface, *self);
        let [x, y] = nu.coords;
        match *self {
            Surface::ProjectivePlane => (x * x + x * 3 + 2) / 2,
            Surface::Hirzebruch(e) => (x + 1) * (y + 1 - Rational::from(e) * x / 2),
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::ProjectivePlane => write!(f, "P2"),
            Surface::Hirzebruch(e) => write!(f, "F{e}"),
        }
    }
}

impl FromStr for Surface {
    type Err = Error;

    /// `P2` or `F<e>` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("p2") {
            return Ok(Surface::ProjectivePlane);
        }
        if let Some(rest) = t.strip_prefix('F').or_else(|| t.strip_prefix('f')) {
            if let Ok(e) = rest.parse::<u32>() {
                return Ok(Surface::Hirzebruch(e));
            }
        }
        Err(Error::Parse(format!(
            "malformed surface `{s}` (expected P2 or F<e>)"
        )))
    }
}

impl From<Surface> for String {
    fn from(s: Surface) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Surface {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// An element of `Pic(X) ⊗ Q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "DivisorRepr", try_from = "DivisorRepr")]
pub struct DivisorClass {
    surface: Surface,
    // plane: [H, 0]; Hirzebruch: [E, F]
    coords: [Rational; 2],
}

impl DivisorClass {
    pub fn surface(&self) -> Surface {
        self.surface
    }

    /// Coordinates in the surface basis (length 1 on the plane, 2 otherwise).
    pub fn coords(&self) -> &[Rational] {
        &self.coords[..self.surface.picard_rank()]
    }

    /// Coefficient of `E` (Hirzebruch) or `H` (plane).
    pub fn first(&self) -> Rational {
        self.coords[0]
    }

    /// Coefficient of `F`; zero on the plane.
    pub fn second(&self) -> Rational {
        self.coords[1]
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(Rational::is_integer)
    }

    pub(crate) fn require_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NonIntegral(self.to_string()))
        }
    }

    pub fn intersect(&self, other: &DivisorClass) -> Result<Rational> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch(self.surface, other.surface));
        }
        Ok(self.dot(other))
    }

    /// Intersection number of two classes known to share a surface.
    pub(crate) fn dot(&self, other: &DivisorClass) -> Rational {
        debug_assert_eq!(self.surface, other.surface);
        let [a1, b1] = self.coords;
        let [a2, b2] = other.coords;
        match self.surface {
            Surface::ProjectivePlane => a1 * a2,
            Surface::Hirzebruch(e) => -(Rational::from(e) * a1 * a2) + a1 * b2 + a2 * b1,
        }
    }

    pub fn self_intersection(&self) -> Rational {
        self.dot(self)
    }

    /// Degree against `H`, i.e. `D·H`.
    pub fn degree(&self) -> Rational {
        self.dot(&self.surface.polarization())
    }

    /// `D·L`: the `H`-coefficient on the plane, `D·F` on `F_e`. In both bases
    /// this is the first coordinate.
    pub fn dot_line(&self) -> Rational {
        self.coords[0]
    }

    /// `D·F` on `F_e`. Panics on the plane.
    pub fn dot_fiber(&self) -> Rational {
        assert!(!self.surface.is_plane(), "dot_fiber on the plane");
        self.coords[0]
    }

    /// `D·E` on `F_e`. Panics on the plane.
    pub fn dot_section(&self) -> Rational {
        let e = self
            .surface
            .hirzebruch_e()
            .expect("dot_section on the plane");
        self.coords[1] - Rational::from(e) * self.coords[0]
    }

    pub fn is_nef(&self) -> bool {
        match self.surface {
            Surface::ProjectivePlane => !self.coords[0].is_negative(),
            Surface::Hirzebruch(_) => {
                !self.dot_fiber().is_negative() && !self.dot_section().is_negative()
            }
        }
    }

    pub fn is_effective(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// On these surfaces a nef class is big exactly when `D^2 > 0`.
    pub fn is_big_and_nef(&self) -> bool {
        self.is_nef() && self.self_intersection().is_positive()
    }

    /// Whether the general member of `|D|` is an irreducible curve.
    ///
    /// Plane: `dH` with `d >= 1`. `F_e`: `E`, `F`, or `aE + bF` with `a >= 1`
    /// and `b >= ae`; on `F_0` the multiples `aE` with `a >= 2` split into
    /// disjoint rulings and are excluded.
    pub fn is_irreducible_curve_class(&self) -> Result<bool> {
        self.require_integral()?;
        let a = self.coords[0];
        let b = self.coords[1];
        Ok(match self.surface {
            Surface::ProjectivePlane => a >= Rational::ONE,
            Surface::Hirzebruch(e) => {
                let is_e = a == Rational::ONE && b.is_zero();
                let is_f = a.is_zero() && b == Rational::ONE;
                let general = a >= Rational::ONE && b >= a * Rational::from(e);
                let split_ruling = e == 0 && b.is_zero() && a > Rational::ONE;
                is_e || is_f || (general && !split_ruling)
            }
        })
    }

    /// `h^0(O_X(D))` for integral `D`.
    ///
    /// On `F_e` this is the fiberwise count `sum_{i=0..a} max(0, b - ie + 1)`
    /// coming from `pi_* O(aE + bF) = ⊕ O(b - ie)`.
    pub fn h0(&self) -> Result<u128> {
        self.require_integral()?;
        let a = self.coords[0].numer();
        let b = self.coords[1].numer();
        Ok(match self.surface {
            Surface::ProjectivePlane => {
                if a < 0 {
                    0
                } else {
                    ((a + 1) * (a + 2) / 2) as u128
                }
            }
            Surface::Hirzebruch(e) => {
                if a < 0 {
                    0
                } else {
                    (0..=a)
                        .map(|i| (b - i * e as i128 + 1).max(0) as u128)
                        .sum()
                }
            }
        })
    }

    pub fn scaled(&self, k: Rational) -> DivisorClass {
        DivisorClass {
            surface: self.surface,
            coords: [self.coords[0] * k, self.coords[1] * k],
        }
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch(self.surface, other.surface));
        }
        Ok(*self + *other)
    }
}

/// Panics if the summands live on different surfaces; see
/// [`DivisorClass::checked_add`].
impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        assert_eq!(self.surface, rhs.surface, "adding classes across surfaces");
        DivisorClass {
            surface: self.surface,
            coords: [
                self.coords[0] + rhs.coords[0],
                self.coords[1] + rhs.coords[1],
            ],
        }
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            surface: self.surface,
            coords: [-self.coords[0], -self.coords[1]],
        }
    }
}

impl Mul<DivisorClass> for Rational {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        rhs.scaled(self)
    }
}

impl Mul<DivisorClass> for i128 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        rhs.scaled(Rational::from(self))
    }
}

impl fmt::Display for DivisorClass {
    /// `aH`, or `xE + yF`, with exact coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(f: &mut fmt::Formatter<'_>, c: Rational, sym: &str, first: bool) -> fmt::Result {
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if mag == Rational::ONE {
                write!(f, "{sym}")
            } else if mag.is_integer() {
                write!(f, "{mag}{sym}")
            } else {
                write!(f, "({mag}){sym}")
            }
        }
        match self.surface {
            Surface::ProjectivePlane => {
                if self.coords[0].is_zero() {
                    write!(f, "0")
                } else {
                    term(f, self.coords[0], "H", true)
                }
            }
            Surface::Hirzebruch(_) => {
                let [x, y] = self.coords;
                match (x.is_zero(), y.is_zero()) {
                    (true, true) => write!(f, "0"),
                    (false, true) => term(f, x, "E", true),
                    (true, false) => term(f, y, "F", true),
                    (false, false) => {
                        term(f, x, "E", true)?;
                        term(f, y, "F", false)
                    }
                }
            }
        }
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.surface)
    }
}

#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
struct DivisorRepr {
    surface: Surface,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    H: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    E: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    F: Option<Rational>,
}

impl From<DivisorClass> for DivisorRepr {
    fn from(d: DivisorClass) -> Self {
        match d.surface {
            Surface::ProjectivePlane => DivisorRepr {
                surface: d.surface,
                H: Some(d.coords[0]),
                E: None,
                F: None,
            },
            Surface::Hirzebruch(_) => DivisorRepr {
                surface: d.surface,
                H: None,
                E: Some(d.coords[0]),
                F: Some(d.coords[1]),
            },
        }
    }
}

impl TryFrom<DivisorRepr> for DivisorClass {
    type Error = Error;
    fn try_from(r: DivisorRepr) -> Result<Self> {
        match (r.surface, r.H, r.E, r.F) {
            (Surface::ProjectivePlane, Some(h), None, None) => Ok(r.surface.plane_class(h)),
            (Surface::Hirzebruch(_), None, Some(x), Some(y)) => Ok(r.surface.ef_class(x, y)),
            _ => Err(Error::Parse(format!(
                "divisor coordinates do not match surface {}",
                r.surface
            ))),
        }
    }
}
