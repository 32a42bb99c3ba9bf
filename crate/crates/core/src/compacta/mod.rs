//! Finite stand-ins for non-empty compact subsets of the sphere and the
//! Hausdorff distance between them.

mod kdtree;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;

use crate::curves::SampledCurve;
use crate::error::{Error, Result};
use crate::moebius::MoebiusMap;
use crate::sphere::{chordal_distance, SpherePoint};
use kdtree::KdTree;

/// Default chordal diameter below which a cloud counts as a point.
pub const DEFAULT_SINGLETON_DELTA: f64 = 0.01;

// below this size the quadratic scan beats building a tree
const BRUTE_FORCE_CUTOFF: usize = 32;

/// A finite point set standing in for a compact set; the represented set lies
/// within chordal distance `epsilon` of `points`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompactCloud {
    points: Vec<SpherePoint>,
    epsilon: f64,
}

impl CompactCloud {
    pub fn new(points: Vec<SpherePoint>, epsilon: f64) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::OutOfRange("a compact cloud must be non-empty".into()));
        }
        if !(epsilon >= 0.0) {
            return Err(Error::OutOfRange(format!("cloud resolution {epsilon} must be >= 0")));
        }
        Ok(CompactCloud { points, epsilon })
    }

    pub fn singleton(p: SpherePoint) -> Self {
        CompactCloud { points: vec![p], epsilon: 0.0 }
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Image under a rotation keeps `epsilon`; for other maps it is only a
    /// nominal value.
    pub fn map(&self, m: &MoebiusMap) -> CompactCloud {
        CompactCloud { points: self.points.iter().map(|p| m.apply(p)).collect(), epsilon: self.epsilon }
    }

    /// Cloud file format: `# cloud epsilon=<eps>` then `re im` or `inf` per line.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("# cloud epsilon={:.16e}\n", self.epsilon);
        for p in &self.points {
            match p {
                SpherePoint::Finite(z) => writeln!(out, "{:.16e} {:.16e}", z.re, z.im),
                SpherePoint::Infinity => writeln!(out, "inf"),
            }
            .unwrap();
        }
        out
    }

    /// Parses the cloud format. A curve file (three columns) is accepted too,
    /// in which case it becomes the cloud of its samples.
    pub fn from_file_str(s: &str) -> Result<Self> {
        let mut epsilon = 0.0;
        let mut points = Vec::new();
        let mut curve_like = false;
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(v) = rest.trim().strip_prefix("cloud epsilon=") {
                    epsilon = v.trim().parse().map_err(|_| Error::Parse(format!("bad epsilon {v:?}")))?;
                }
                continue;
            }
            let bad = || Error::Parse(format!("line {}: expected `re im` or `inf`", lineno + 1));
            let num = |f: &str| f.parse::<f64>().map_err(|_| bad());
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["inf"] => points.push(SpherePoint::Infinity),
                [a, b] if *b == "inf" => {
                    num(a)?;
                    curve_like = true;
                    points.push(SpherePoint::Infinity);
                }
                [re, im] => points.push(SpherePoint::from_complex(Complex64::new(num(re)?, num(im)?))?),
                [_, re, im] => {
                    curve_like = true;
                    points.push(SpherePoint::from_complex(Complex64::new(num(re)?, num(im)?))?);
                }
                _ => return Err(bad()),
            }
        }
        if curve_like {
            let c = SampledCurve::from_file_str(s, false)?;
            return Ok(to_cloud(&c));
        }
        CompactCloud::new(points, epsilon)
    }
}

/// Samples of a curve, with `epsilon` half the largest chordal gap between neighbours.
pub fn to_cloud(c: &SampledCurve) -> CompactCloud {
    let pts = c.points();
    let n = pts.len();
    let max_gap = (0..n)
        .map(|i| chordal_distance(&pts[i], &pts[(i + 1) % n]))
        .fold(0.0, f64::max);
    CompactCloud { points: pts.to_vec(), epsilon: if n > 1 { max_gap / 2.0 } else { 0.0 } }
}

fn unit_vectors(points: &[SpherePoint]) -> Vec<[f64; 3]> {
    points.iter().map(SpherePoint::to_unit_vector).collect()
}

/// `sup_{p∈a} inf_{q∈b} d(p, q)` by exhaustive scan.
pub fn directed_hausdorff_brute(a: &CompactCloud, b: &CompactCloud) -> f64 {
    a.points
        .par_iter()
        .map(|p| b.points.iter().map(|q| chordal_distance(p, q)).fold(f64::INFINITY, f64::min))
        .reduce(|| 0.0, f64::max)
}

/// Directed distance using a 3-d tree on the unit-sphere embedding of `b`.
/// The reported distance for each query is recomputed with the chordal formula.
pub fn directed_hausdorff(a: &CompactCloud, b: &CompactCloud) -> f64 {
    if a.len() * b.len() <= BRUTE_FORCE_CUTOFF * BRUTE_FORCE_CUTOFF {
        return directed_hausdorff_brute(a, b);
    }
    let tree = KdTree::build(&unit_vectors(&b.points));
    a.points
        .par_iter()
        .map(|p| {
            let j = tree.nearest(&p.to_unit_vector());
            chordal_distance(p, &b.points[j])
        })
        .reduce(|| 0.0, f64::max)
}

/// Hausdorff distance in the chordal metric, computed exactly on the point
/// sets. Against the represented compact sets the error is at most
/// `a.epsilon() + b.epsilon()`.
pub fn hausdorff_distance(a: &CompactCloud, b: &CompactCloud) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

/// Quadratic reference implementation of [`hausdorff_distance`].
pub fn hausdorff_distance_brute(a: &CompactCloud, b: &CompactCloud) -> f64 {
    directed_hausdorff_brute(a, b).max(directed_hausdorff_brute(b, a))
}

/// Largest pairwise chordal distance.
pub fn chordal_diameter(a: &CompactCloud) -> f64 {
    let v = unit_vectors(&a.points);
    (0..v.len())
        .into_par_iter()
        .map(|i| {
            let mut best: f64 = 0.0;
            for j in i + 1..v.len() {
                let (dx, dy, dz) = (v[i][0] - v[j][0], v[i][1] - v[j][1], v[i][2] - v[j][2]);
                best = best.max(dx * dx + dy * dy + dz * dz);
            }
            best
        })
        .reduce(|| 0.0, f64::max)
        .sqrt()
        .min(2.0)
}

/// `chordal_diameter(a) < delta`: the cloud is a point at resolution `delta`.
pub fn is_singleton_approx(a: &CompactCloud, delta: f64) -> bool {
    chordal_diameter(a) < delta
}
