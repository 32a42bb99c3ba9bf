//! PSL₂(ℂ): normalized matrices, their action on the sphere, conjugacy
//! classification, fixed points and the Iwasawa factorization into a
//! PSU(2) part times an upper-triangular part with positive real diagonal.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sphere::SpherePoint;

/// Threshold on `|trace² − 4|` below which an element counts as parabolic.
pub const TOL_CLASS: f64 = 1e-9;

/// Entrywise tolerance for recognizing the canonical identity.
pub const IDENTITY_TOL: f64 = 1e-12;

// entries below this modulus are skipped when choosing the sign pivot
const PIVOT_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A Möbius transformation `z ↦ (az+b)/(cz+d)` stored as a determinant-one
/// matrix in sign-canonical form: the first entry (in the order a, b, c, d)
/// of modulus above 1e-12 has argument in `[0, π)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

/// Conjugacy type of a Möbius transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassTag {
    Identity,
    Parabolic,
    Elliptic,
    Loxodromic,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ElementClass {
    pub tag: ClassTag,
    pub trace_squared: Complex64,
}

/// `m = k · b` with `k` unitary and `b` upper triangular with real positive diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IwasawaFactors {
    pub k: MoebiusMap,
    pub b: MoebiusMap,
}

fn needs_flip(x: Complex64) -> bool {
    let r = x.norm();
    let snap = 1e-12 * r;
    x.im < -snap || (x.im.abs() <= snap && x.re < 0.0)
}

impl MoebiusMap {
    /// Normalizes an arbitrary invertible matrix.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let ad = a * d;
        let bc = b * c;
        let det = ad - bc;
        if det == ZERO || !det.re.is_finite() || !det.im.is_finite() {
            return Err(Error::SingularMatrix);
        }
        // A matrix whose computed determinant is already 1 up to the rounding
        // of that computation is left unscaled, which makes normalization idempotent.
        let rounding = 64.0 * f64::EPSILON * (ad.norm() + bc.norm());
        let (a, b, c, d) = if (det - ONE).norm() <= rounding {
            (a, b, c, d)
        } else {
            let s = det.sqrt();
            (a / s, b / s, c / s, d / s)
        };
        let mut m = MoebiusMap { a, b, c, d };
        let pivot = [m.a, m.b, m.c, m.d].into_iter().find(|x| x.norm() > PIVOT_TOL);
        if pivot.is_some_and(needs_flip) {
            m = MoebiusMap { a: -m.a, b: -m.b, c: -m.c, d: -m.d };
        }
        Ok(m)
    }

    /// Real-entry convenience constructor.
    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        MoebiusMap::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        MoebiusMap { a: ONE, b: ZERO, c: ZERO, d: ONE }
    }

    /// `z ↦ z + t`.
    pub fn translation(t: Complex64) -> Self {
        MoebiusMap { a: ONE, b: t, c: ZERO, d: ONE }
    }

    /// `z ↦ αz + β`, α ≠ 0.
    pub fn affine(alpha: Complex64, beta: Complex64) -> Result<Self> {
        if alpha == ZERO {
            return Err(Error::ZeroScale);
        }
        MoebiusMap::new(alpha, beta, ZERO, ONE)
    }

    /// A rotation of the sphere (an element of PSU(2)) sending `q` to infinity.
    pub fn rotation_to_infinity(q: &SpherePoint) -> Self {
        match *q {
            SpherePoint::Infinity => MoebiusMap::identity(),
            SpherePoint::Finite(z) if z == ZERO => {
                MoebiusMap::from_real(0.0, -1.0, 1.0, 0.0).expect("unit determinant")
            }
            SpherePoint::Finite(z) => {
                // rows (a, b), (-b̄, ā) with -b̄ z + ā = 0
                let r = z.norm();
                let a = Complex64::new(r / 1f64.hypot(r), 0.0);
                let b = a / z.conj();
                MoebiusMap::new(a, b, -b.conj(), a.conj()).expect("unitary is invertible")
            }
        }
    }

    /// Row-major entries `[a, b, c, d]`.
    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }
    pub fn b(&self) -> Complex64 {
        self.b
    }
    pub fn c(&self) -> Complex64 {
        self.c
    }
    pub fn d(&self) -> Complex64 {
        self.d
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    pub fn trace_squared(&self) -> Complex64 {
        let t = self.trace();
        t * t
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_entry_diff(&self, other: &MoebiusMap) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries().iter())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// Entrywise distance modulo sign, `min(‖m − n‖∞, ‖m + n‖∞)`.
    pub fn projective_entry_diff(&self, other: &MoebiusMap) -> f64 {
        let neg = MoebiusMap { a: -other.a, b: -other.b, c: -other.c, d: -other.d };
        self.max_entry_diff(other).min(self.max_entry_diff(&neg))
    }

    pub fn is_identity(&self) -> bool {
        self.max_entry_diff(&MoebiusMap::identity()) < IDENTITY_TOL
    }

    /// Pointwise action with the usual conventions at the pole and at infinity.
    pub fn apply(&self, p: &SpherePoint) -> SpherePoint {
        let MoebiusMap { a, b, c, d } = *self;
        let w = match *p {
            SpherePoint::Infinity => {
                if c == ZERO {
                    return SpherePoint::Infinity;
                }
                a / c
            }
            SpherePoint::Finite(z) => {
                let (num, den) = if z.norm() > 1e150 {
                    // divide through by z so huge inputs do not overflow
                    let inv = z.inv();
                    (a + b * inv, c + d * inv)
                } else {
                    (a * z + b, c * z + d)
                };
                if den == ZERO {
                    return SpherePoint::Infinity;
                }
                num / den
            }
        };
        if w.re.is_nan() || w.im.is_nan() || w.re.is_infinite() || w.im.is_infinite() {
            SpherePoint::Infinity
        } else {
            SpherePoint::Finite(w)
        }
    }

    /// Group law: `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        let (u, v) = (self, other);
        MoebiusMap::new(
            u.a * v.a + u.b * v.c,
            u.a * v.b + u.b * v.d,
            u.c * v.a + u.d * v.c,
            u.c * v.b + u.d * v.d,
        )
        .expect("product of invertible matrices is invertible")
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap::new(self.d, -self.b, -self.c, self.a).expect("invertible")
    }

    /// `self^k` for any integer `k`, by repeated squaring.
    pub fn pow(&self, k: i64) -> MoebiusMap {
        let mut base = if k < 0 { self.inverse() } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = MoebiusMap::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &MoebiusMap) -> MoebiusMap {
        g.compose(self).compose(&g.inverse())
    }

    pub fn classify(&self) -> ElementClass {
        let t2 = self.trace_squared();
        let tag = if self.is_identity() {
            ClassTag::Identity
        } else if (t2 - Complex64::new(4.0, 0.0)).norm() < TOL_CLASS {
            ClassTag::Parabolic
        } else if t2.im.abs() < TOL_CLASS && (0.0..4.0).contains(&t2.re) {
            ClassTag::Elliptic
        } else {
            ClassTag::Loxodromic
        };
        ElementClass { tag, trace_squared: t2 }
    }

    /// Fixed points: one for parabolic elements, two otherwise.
    pub fn fixed_points(&self) -> Result<Vec<SpherePoint>> {
        let MoebiusMap { a, b, c, d } = *self;
        let div = |num: Complex64, den: Complex64| {
            if den == ZERO {
                SpherePoint::Infinity
            } else {
                SpherePoint::from_complex(num / den).unwrap_or(SpherePoint::Infinity)
            }
        };
        match self.classify().tag {
            ClassTag::Identity => Err(Error::IdentityFixedPoints),
            ClassTag::Parabolic => Ok(vec![div(a - d, 2.0 * c)]),
            _ => {
                // roots of c z² + (d − a) z − b = 0 in the cancellation-free form
                let lin = d - a;
                let root = (self.trace_squared() - Complex64::new(4.0, 0.0)).sqrt();
                let s = if (lin.conj() * root).re >= 0.0 { root } else { -root };
                let q = -0.5 * (lin + s);
                Ok(vec![div(q, c), div(-b, q)])
            }
        }
    }

    /// `|c| < tol`: membership in the upper-triangular (Borel) subgroup.
    pub fn is_in_borel(&self, tol: f64) -> bool {
        self.c.norm() < tol
    }

    /// Orthonormal columns within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let c1 = self.a.norm_sqr() + self.c.norm_sqr();
        let c2 = self.b.norm_sqr() + self.d.norm_sqr();
        let inner = self.a.conj() * self.b + self.c.conj() * self.d;
        (c1 - 1.0).abs() < tol && (c2 - 1.0).abs() < tol && inner.norm() < tol
    }

    /// Gram–Schmidt on the first column, then back-solve for the triangular part.
    pub fn iwasawa(&self) -> IwasawaFactors {
        let MoebiusMap { a, b, c, d } = *self;
        let r = a.norm().hypot(c.norm());
        let (u1, u2) = (a / r, c / r);
        let k = MoebiusMap::new(u1, -u2.conj(), u2, u1.conj()).expect("unitary is invertible");
        let s = (a.conj() * b + c.conj() * d) / r;
        let borel = MoebiusMap::new(Complex64::new(r, 0.0), s, ZERO, Complex64::new(1.0 / r, 0.0))
            .expect("triangular with non-zero diagonal");
        IwasawaFactors { k, b: borel }
    }

    /// Operator-norm distance modulo sign. For two elements of PSU(2) this is the
    /// Euclidean distance between their closest unit-quaternion lifts.
    pub fn operator_distance(&self, other: &MoebiusMap) -> f64 {
        let diff = |sign: f64| {
            let m = [
                self.a - sign * other.a,
                self.b - sign * other.b,
                self.c - sign * other.c,
                self.d - sign * other.d,
            ];
            operator_norm(m)
        };
        diff(1.0).min(diff(-1.0))
    }

    /// Parses four whitespace-separated complex tokens (`re+imi` style), row-major.
    pub fn parse_tokens(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.len() != 4 {
            return Err(Error::Parse(format!(
                "a matrix needs 4 complex tokens, got {}",
                tokens.len()
            )));
        }
        let e = tokens
            .iter()
            .map(|t| parse_complex(t))
            .collect::<Result<Vec<_>>>()?;
        MoebiusMap::new(e[0], e[1], e[2], e[3])
    }

    /// Matrix in the token format with 17 significant digits.
    pub fn to_tokens(&self) -> String {
        self.entries()
            .iter()
            .map(|z| format_complex(*z))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl FromStr for MoebiusMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MoebiusMap::parse_tokens(s)
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tokens())
    }
}

impl<'de> Deserialize<'de> for MoebiusMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            a: Complex64,
            b: Complex64,
            c: Complex64,
            d: Complex64,
        }
        let raw = Raw::deserialize(d)?;
        MoebiusMap::new(raw.a, raw.b, raw.c, raw.d).map_err(serde::de::Error::custom)
    }
}

fn operator_norm(m: [Complex64; 4]) -> f64 {
    let fro2: f64 = m.iter().map(|z| z.norm_sqr()).sum();
    let det = (m[0] * m[3] - m[1] * m[2]).norm();
    let disc = (fro2 * fro2 - 4.0 * det * det).max(0.0);
    ((fro2 + disc.sqrt()) / 2.0).sqrt()
}

/// Parses `1`, `-2.5`, `3i`, `-i`, `1+2i`, `1e-3-4.5e2i`.
pub fn parse_complex(tok: &str) -> Result<Complex64> {
    let bad = || Error::Parse(format!("not a complex number: {tok:?}"));
    let t = tok.trim();
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() {
        0.0
    } else {
        re_part.parse::<f64>().map_err(|_| bad())?
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

/// `re+imi` with 17 significant digits per part.
pub fn format_complex(z: Complex64) -> String {
    format!("{:.16e}{:+.16e}i", z.re, z.im)
}

fn normal_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Random element of PSL₂(ℂ) from Gaussian entries of standard deviation `scale`,
/// rejecting nearly singular draws.
pub fn random_moebius<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> MoebiusMap {
    loop {
        let e: Vec<Complex64> = (0..4).map(|_| scale * normal_complex(rng)).collect();
        let det = e[0] * e[3] - e[1] * e[2];
        if det.norm() > 1e-2 * scale * scale {
            if let Ok(m) = MoebiusMap::new(e[0], e[1], e[2], e[3]) {
                return m;
            }
        }
    }
}

/// Haar-random element of PSU(2) from a normalized Gaussian quaternion.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R) -> MoebiusMap {
    loop {
        let (alpha, beta) = (normal_complex(rng), normal_complex(rng));
        let n = alpha.norm().hypot(beta.norm());
        if n > 1e-6 {
            return unitary_from_quaternion(alpha / n, beta / n);
        }
    }
}

/// The SU(2) matrix `[[α, −β̄], [β, ᾱ]]` for `|α|² + |β|² = 1`.
pub fn unitary_from_quaternion(alpha: Complex64, beta: Complex64) -> MoebiusMap {
    MoebiusMap::new(alpha, -beta.conj(), beta, alpha.conj()).expect("unit quaternion")
}
