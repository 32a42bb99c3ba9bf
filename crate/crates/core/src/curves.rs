//! Sampled Jordan curves: generators (round circles, the cardioid), affine and
//! Möbius images, the sampling-scale simplicity check and the text file format.

use num_complex::Complex64;
use robust::{orient2d, Coord};
use serde::Serialize;
use std::collections::HashMap;
use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::moebius::MoebiusMap;
use crate::sphere::{chordal_distance, SpherePoint};

pub const MIN_SAMPLES: usize = 8;

/// A cyclically ordered sampling of a Jordan curve.
///
/// Generators return validated curves. Transforms such as [`moebius_image`]
/// never fail, so their output may violate the invariants (for example when
/// a contraction collapses neighbouring samples); use [`SampledCurve::validate`]
/// to check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampledCurve {
    points: Vec<SpherePoint>,
    params: Vec<f64>,
    label: String,
}

impl SampledCurve {
    /// Builds and validates a curve.
    pub fn new(points: Vec<SpherePoint>, params: Vec<f64>, label: impl Into<String>) -> Result<Self> {
        let c = SampledCurve::from_parts_unchecked(points, params, label);
        c.validate()?;
        Ok(c)
    }

    /// Builds a curve without checking the invariants. Lengths must still match.
    pub fn from_parts_unchecked(
        points: Vec<SpherePoint>,
        params: Vec<f64>,
        label: impl Into<String>,
    ) -> Self {
        assert_eq!(points.len(), params.len(), "one parameter per sample");
        SampledCurve { points, params, label: label.into() }
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn contains_infinity(&self) -> bool {
        self.points.iter().any(SpherePoint::is_infinite)
    }

    /// Checks every invariant: sample count, parameter order, distinct
    /// neighbours, at most one infinite sample, and simplicity at sampling scale.
    pub fn validate(&self) -> Result<()> {
        let n = self.points.len();
        if n < MIN_SAMPLES {
            return Err(Error::TooFewSamples(n));
        }
        if self.params.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidCurve("parameters must be strictly increasing".into()));
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if chordal_distance(&self.points[i], &self.points[j]) <= 0.0 {
                return Err(Error::InvalidCurve(format!("samples {i} and {j} coincide")));
            }
        }
        if self.points.iter().filter(|p| p.is_infinite()).count() > 1 {
            return Err(Error::InvalidCurve("more than one sample at infinity".into()));
        }
        if !self.is_simple() {
            return Err(Error::InvalidCurve("polyline self-intersects".into()));
        }
        Ok(())
    }

    /// Segment-intersection test of the closed polyline.
    ///
    /// The test runs in a planar chart centred away from the curve: the
    /// standard finite chart when infinity is well clear of every sample,
    /// otherwise a rotated chart whose point at infinity is the best clear
    /// point among a fixed set of 26 directions.
    pub fn is_simple(&self) -> bool {
        let chart = self.chart();
        let planar: Vec<[f64; 2]> = self
            .points
            .iter()
            .map(|p| match chart.apply(p) {
                SpherePoint::Finite(z) => [z.re, z.im],
                // only reachable if every candidate chart centre lies on the curve
                SpherePoint::Infinity => [f64::MAX, f64::MAX],
            })
            .collect();
        polyline_is_simple(&planar)
    }

    fn chart(&self) -> MoebiusMap {
        let clearance = |q: &SpherePoint| {
            self.points
                .iter()
                .map(|p| chordal_distance(p, q))
                .fold(f64::INFINITY, f64::min)
        };
        if clearance(&SpherePoint::Infinity) >= 0.25 {
            return MoebiusMap::identity();
        }
        let mut best = (SpherePoint::Infinity, clearance(&SpherePoint::Infinity));
        for x in -1i32..=1 {
            for y in -1i32..=1 {
                for z in -1i32..=1 {
                    if (x, y, z) == (0, 0, 0) || (x, y, z) == (0, 0, 1) {
                        continue;
                    }
                    let q = SpherePoint::from_unit_vector([x as f64, y as f64, z as f64]);
                    let c = clearance(&q);
                    if c > best.1 {
                        best = (q, c);
                    }
                }
            }
        }
        MoebiusMap::rotation_to_infinity(&best.0)
    }

    /// Serializes to the curve file format: a `# label` header and one
    /// `param re im` (or `param inf`) line per sample, 17 significant digits.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}", self.label).unwrap();
        for (t, p) in self.params.iter().zip(&self.points) {
            match p {
                SpherePoint::Finite(z) => writeln!(out, "{:.16e} {:.16e} {:.16e}", t, z.re, z.im),
                SpherePoint::Infinity => writeln!(out, "{:.16e} inf", t),
            }
            .unwrap();
        }
        out
    }

    /// Parses the curve file format. With `validate` the curve invariants are checked.
    pub fn from_file_str(s: &str, validate: bool) -> Result<Self> {
        let mut label = String::new();
        let mut points = Vec::new();
        let mut params = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if lineno == 0 {
                    label = rest.trim().to_string();
                }
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: expected `param re im` or `param inf`", lineno + 1));
            let num = |f: &str| f.parse::<f64>().map_err(|_| bad());
            match fields.as_slice() {
                [t, "inf"] => {
                    params.push(num(t)?);
                    points.push(SpherePoint::Infinity);
                }
                [t, re, im] => {
                    params.push(num(t)?);
                    points.push(SpherePoint::from_complex(Complex64::new(num(re)?, num(im)?))?);
                }
                _ => return Err(bad()),
            }
        }
        let c = SampledCurve::from_parts_unchecked(points, params, label);
        if validate {
            c.validate()?;
        }
        Ok(c)
    }
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    orient2d(Coord { x: a[0], y: a[1] }, Coord { x: b[0], y: b[1] }, Coord { x: c[0], y: c[1] })
}

fn on_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0]) && p[0] <= a[0].max(b[0]) && p[1] >= a[1].min(b[1]) && p[1] <= a[1].max(b[1])
}

/// Closed-segment intersection with exact orientation predicates.
fn segments_intersect(p1: [f64; 2], p2: [f64; 2], q1: [f64; 2], q2: [f64; 2]) -> bool {
    let o1 = orient(p1, p2, q1);
    let o2 = orient(p1, p2, q2);
    let o3 = orient(q1, q2, p1);
    let o4 = orient(q1, q2, p2);
    if ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0)) && ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0)) {
        return true;
    }
    (o1 == 0.0 && on_segment(q1, p1, p2))
        || (o2 == 0.0 && on_segment(q2, p1, p2))
        || (o3 == 0.0 && on_segment(p1, q1, q2))
        || (o4 == 0.0 && on_segment(p2, q1, q2))
}

/// Simplicity of a closed planar polyline, bucketing segments on a uniform grid.
pub(crate) fn polyline_is_simple(pts: &[[f64; 2]]) -> bool {
    let n = pts.len();
    if n < 3 || pts.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
        return false;
    }
    let seg = |i: usize| (pts[i], pts[(i + 1) % n]);
    // adjacent segments may only share their common vertex
    for i in 0..n {
        let (a, b) = seg(i);
        let c = pts[(i + 2) % n];
        if orient(a, b, c) == 0.0 {
            let dot = (a[0] - b[0]) * (c[0] - b[0]) + (a[1] - b[1]) * (c[1] - b[1]);
            if dot > 0.0 {
                return false;
            }
        }
    }
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in pts {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let mut extents: Vec<f64> = (0..n)
        .map(|i| {
            let (a, b) = seg(i);
            (a[0] - b[0]).abs().max((a[1] - b[1]).abs())
        })
        .collect();
    extents.sort_by(f64::total_cmp);
    let diag = (hi[0] - lo[0]).hypot(hi[1] - lo[1]);
    let cell = (2.0 * extents[n / 2]).max(diag / (n as f64).sqrt()).max(f64::MIN_POSITIVE);
    let key = |x: f64, y: f64| (((x - lo[0]) / cell).floor() as i64, ((y - lo[1]) / cell).floor() as i64);
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for i in 0..n {
        let (a, b) = seg(i);
        let (x0, y0) = key(a[0].min(b[0]), a[1].min(b[1]));
        let (x1, y1) = key(a[0].max(b[0]), a[1].max(b[1]));
        for gx in x0..=x1 {
            for gy in y0..=y1 {
                grid.entry((gx, gy)).or_default().push(i);
            }
        }
    }
    let mut keys: Vec<_> = grid.keys().copied().collect();
    keys.sort_unstable();
    for k in keys {
        let bucket = &grid[&k];
        for (s, &i) in bucket.iter().enumerate() {
            for &j in &bucket[s + 1..] {
                let gap = (i as isize - j as isize).unsigned_abs();
                if gap <= 1 || gap == n - 1 {
                    continue;
                }
                let (a, b) = seg(i);
                let (c, d) = seg(j);
                if segments_intersect(a, b, c, d) {
                    return false;
                }
            }
        }
    }
    true
}

/// The cardioid `r(θ) = 1 − cos θ` at angle `θ`. The radius is evaluated as
/// `2 sin²(θ/2)` to keep full relative precision near the cusp.
pub fn cardioid_point(theta: f64) -> Complex64 {
    let h = (theta / 2.0).sin();
    let r = 2.0 * h * h;
    Complex64::new(r * theta.cos(), r * theta.sin())
}

/// Samples the cardioid with `n` points graded toward the cusp at `θ = 0`.
///
/// With `u = k/n`, the angle distance to the cusp is `π (2u)^p` on the upper
/// branch and `π (2 − 2u)^p` on the lower branch, so spacing next to the cusp
/// scales like the uniform spacing raised to `p = cusp_exponent`. The lower
/// branch is evaluated as the exact mirror of the upper one.
pub fn cardioid(n: usize, cusp_exponent: f64) -> Result<SampledCurve> {
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples(n));
    }
    if !(cusp_exponent.is_finite() && cusp_exponent >= 1.0) {
        return Err(Error::InvalidCuspExponent(cusp_exponent));
    }
    let mut points = Vec::with_capacity(n);
    let mut params = Vec::with_capacity(n);
    for k in 0..n {
        let u = k as f64 / n as f64;
        if 2 * k <= n {
            let delta = PI * (2.0 * u).powf(cusp_exponent);
            points.push(SpherePoint::Finite(cardioid_point(delta)));
            params.push(delta);
        } else {
            let delta = PI * (2.0 - 2.0 * u).powf(cusp_exponent);
            points.push(SpherePoint::Finite(cardioid_point(delta).conj()));
            params.push(TAU - delta);
        }
    }
    SampledCurve::new(points, params, format!("cardioid(n={n}, p={cusp_exponent})"))
}

/// `|z(θ) − z(0)| / |z(θ) − z(−θ)|` on the cardioid, evaluated from the parametrization.
pub fn cusp_ratio(theta: f64) -> Result<f64> {
    if !(theta > 0.0) {
        return Err(Error::NonPositiveAngle(theta));
    }
    if theta >= PI {
        return Err(Error::OutOfRange(format!("cusp angle {theta} must be below π")));
    }
    let z = cardioid_point(theta);
    let mirror = cardioid_point(-theta);
    Ok(z.norm() / (z - mirror).norm())
}

/// Uniform angular sampling of a Euclidean circle.
pub fn circle(center: Complex64, radius: f64, n: usize) -> Result<SampledCurve> {
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples(n));
    }
    if !(radius > 0.0) {
        return Err(Error::NonPositiveRadius(radius));
    }
    let params: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    let points = params
        .iter()
        .map(|&t| SpherePoint::Finite(center + Complex64::from_polar(radius, t)))
        .collect();
    SampledCurve::new(
        points,
        params,
        format!("circle(center={}{:+}i, r={radius}, n={n})", center.re, center.im),
    )
}

/// Pointwise `z ↦ az + b`; parameters and label carry over.
pub fn affine_image(c: &SampledCurve, a: Complex64, b: Complex64) -> Result<SampledCurve> {
    if a == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroScale);
    }
    let points = c
        .points
        .iter()
        .map(|p| match p {
            SpherePoint::Finite(z) => Ok(SpherePoint::Finite(a * z + b)),
            SpherePoint::Infinity => Err(Error::InfinitePoint("affine image of a curve through infinity")),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SampledCurve { points, params: c.params.clone(), label: c.label.clone() })
}

/// Pointwise Möbius image. Samples landing on the pole become the point at infinity.
pub fn moebius_image(c: &SampledCurve, m: &MoebiusMap) -> SampledCurve {
    let points = c.points.iter().map(|p| m.apply(p)).collect();
    SampledCurve { points, params: c.params.clone(), label: c.label.clone() }
}
