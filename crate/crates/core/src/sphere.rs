//! Points of the Riemann sphere and the chordal metric.
//!
//! The chordal metric is normalized to diameter 2: it is the Euclidean
//! distance between the images of two points under inverse stereographic
//! projection onto the unit sphere in R³.

use num_complex::Complex64;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A point of the Riemann sphere: a finite complex value or the point at infinity.
///
/// Finite points never carry NaN components. Large finite values stay finite;
/// nothing is promoted to infinity behind the caller's back.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl SpherePoint {
    pub const ZERO: SpherePoint = SpherePoint::Finite(Complex64::new(0.0, 0.0));

    /// Wraps a complex value. NaN components are rejected; IEEE infinities
    /// map to the point at infinity.
    pub fn from_complex(z: Complex64) -> Result<Self> {
        if z.re.is_nan() || z.im.is_nan() {
            return Err(Error::OutOfRange("NaN is not a point of the sphere".into()));
        }
        if z.re.is_infinite() || z.im.is_infinite() {
            return Ok(SpherePoint::Infinity);
        }
        Ok(SpherePoint::Finite(z))
    }

    /// Finite point from real and imaginary parts.
    ///
    /// # Panics
    /// If either part is NaN or infinite.
    pub fn new(re: f64, im: f64) -> Self {
        assert!(re.is_finite() && im.is_finite(), "finite point with non-finite part");
        SpherePoint::Finite(Complex64::new(re, im))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match *self {
            SpherePoint::Finite(z) => Some(z),
            SpherePoint::Infinity => None,
        }
    }

    /// Modulus of a finite point; infinity for the point at infinity.
    pub fn modulus(&self) -> f64 {
        match self {
            SpherePoint::Finite(z) => z.norm(),
            SpherePoint::Infinity => f64::INFINITY,
        }
    }

    /// Inverse stereographic projection onto the unit sphere.
    /// The point at infinity goes to the north pole `(0, 0, 1)`.
    pub fn to_unit_vector(&self) -> [f64; 3] {
        match *self {
            SpherePoint::Infinity => [0.0, 0.0, 1.0],
            SpherePoint::Finite(z) => {
                let r = z.norm();
                if r == 0.0 {
                    [0.0, 0.0, -1.0]
                } else if r < 1.0 {
                    let s = 1.0 + r * r;
                    [2.0 * z.re / s, 2.0 * z.im / s, (r * r - 1.0) / s]
                } else {
                    // scaled to avoid overflowing r²
                    let t = r + 1.0 / r;
                    let (ux, uy) = (z.re / r, z.im / r);
                    [2.0 * ux / t, 2.0 * uy / t, (r - 1.0 / r) / t]
                }
            }
        }
    }

    /// Stereographic projection from the unit sphere. The input is
    /// normalized first; the north pole maps to infinity.
    pub fn from_unit_vector(v: [f64; 3]) -> Self {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let (x, y, z) = (v[0] / n, v[1] / n, v[2] / n);
        if z >= 1.0 || 1.0 - z == 0.0 {
            return SpherePoint::Infinity;
        }
        SpherePoint::Finite(Complex64::new(x / (1.0 - z), y / (1.0 - z)))
    }

    /// Total order used to make symmetric formulas bit-exact: infinity last,
    /// finite points by real then imaginary part.
    fn canonical_cmp(&self, other: &SpherePoint) -> Ordering {
        match (self, other) {
            (SpherePoint::Infinity, SpherePoint::Infinity) => Ordering::Equal,
            (SpherePoint::Infinity, _) => Ordering::Greater,
            (_, SpherePoint::Infinity) => Ordering::Less,
            (SpherePoint::Finite(a), SpherePoint::Finite(b)) => a
                .re
                .total_cmp(&b.re)
                .then_with(|| a.im.total_cmp(&b.im)),
        }
    }
}

impl From<Complex64> for SpherePoint {
    fn from(z: Complex64) -> Self {
        SpherePoint::from_complex(z).expect("NaN complex value")
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Infinity => write!(f, "inf"),
            SpherePoint::Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

/// Chordal distance on the sphere of diameter 2.
///
/// `2|p−q| / √((1+|p|²)(1+|q|²))` for finite points, `2/√(1+|p|²)` against
/// infinity. Exactly symmetric in its arguments.
pub fn chordal_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let (p, q) = if p.canonical_cmp(q) == Ordering::Greater {
        (q, p)
    } else {
        (p, q)
    };
    match (p, q) {
        (SpherePoint::Infinity, SpherePoint::Infinity) => 0.0,
        (SpherePoint::Finite(z), SpherePoint::Infinity)
        | (SpherePoint::Infinity, SpherePoint::Finite(z)) => 2.0 / 1f64.hypot(z.norm()),
        (SpherePoint::Finite(a), SpherePoint::Finite(b)) => {
            let d = (a - b).norm();
            if d == 0.0 {
                return 0.0;
            }
            let ha = 1f64.hypot(a.norm());
            let hb = 1f64.hypot(b.norm());
            (2.0 * (d / ha) / hb).min(2.0)
        }
    }
}

/// Euclidean distance in the finite plane; `None` stands for an infinite distance.
pub fn euclidean_distance(p: &SpherePoint, q: &SpherePoint) -> Option<f64> {
    match (p, q) {
        (SpherePoint::Finite(a), SpherePoint::Finite(b)) => Some((a - b).norm()),
        _ => None,
    }
}

impl Serialize for SpherePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SpherePoint::Infinity => s.serialize_str("inf"),
            SpherePoint::Finite(z) => [z.re, z.im].serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for SpherePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Pair([f64; 2]),
            Tag(String),
        }
        match Repr::deserialize(d)? {
            Repr::Pair([re, im]) => SpherePoint::from_complex(Complex64::new(re, im))
                .map_err(de::Error::custom),
            Repr::Tag(t) if t == "inf" => Ok(SpherePoint::Infinity),
            Repr::Tag(t) => Err(de::Error::custom(format!("expected [re, im] or \"inf\", got {t:?}"))),
        }
    }
}
