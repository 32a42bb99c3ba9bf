//! Turning constants of sampled curves: the supremum over sample pairs of the
//! diameter of the smaller arc between them divided by their distance. A
//! finite bound characterizes quasicircles, so growth of this constant under
//! refinement signals a curve that is not one.
//!
//! Both arcs between samples `i` and `j` are contiguous runs of the cyclic
//! sample sequence. Writing `D_r[s]` for the diameter of the run of `r + 1`
//! samples starting at `s`, the runs satisfy
//! `D_r[s] = max(D_{r-1}[s], D_{r-1}[s+1], d(s, s+r))`, so every arc diameter
//! comes out of a row-by-row sweep in O(n²) total work and O(n) memory per
//! row. The two arcs of a pair sit on rows `r` and `n − r`, which is what the
//! two strategies below have to reconcile.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

use crate::curves::SampledCurve;
use crate::error::{Error, Result};
use crate::sphere::SpherePoint;

/// Pending pairs kept by the pruned sweep before it falls back to the exhaustive one.
const PENDING_BUDGET: usize = 1 << 21;
/// Stored arc diameters per pass of the exhaustive sweep.
const EXHAUSTIVE_BUDGET: usize = 1 << 22;

pub const UNBOUNDED_SLOPE: f64 = 0.3;
pub const BOUNDED_SLOPE: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Chordal,
    Euclidean,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Chordal => "chordal",
            Metric::Euclidean => "euclidean",
        })
    }
}

impl std::str::FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chordal" => Ok(Metric::Chordal),
            "euclidean" => Ok(Metric::Euclidean),
            _ => Err(Error::Parse(format!("unknown metric {s:?} (chordal|euclidean)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TurningEstimate {
    pub constant: f64,
    /// Sample indices `(i, j)`, `i < j`, attaining the maximum; lowest pair on ties.
    pub witness: (usize, usize),
    pub witness_params: (f64, f64),
    pub metric: Metric,
    pub resolution: usize,
}

struct Kernel {
    coords: Vec<[f64; 3]>,
}

impl Kernel {
    fn new(c: &SampledCurve, metric: Metric) -> Result<Self> {
        let coords = c
            .points()
            .iter()
            .map(|p| match (metric, p) {
                (Metric::Chordal, _) => Ok(p.to_unit_vector()),
                (Metric::Euclidean, SpherePoint::Finite(z)) => Ok([z.re, z.im, 0.0]),
                (Metric::Euclidean, SpherePoint::Infinity) => {
                    Err(Error::InfinitePoint("Euclidean turning constant of a curve through infinity"))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Kernel { coords })
    }

    fn len(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    fn dist(&self, i: usize, j: usize) -> f64 {
        let (a, b) = (&self.coords[i], &self.coords[j]);
        let (dx, dy, dz) = (a[0] - b[0], a[1] - b[1], a[2] - b[2]);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    fn is_degenerate(&self) -> bool {
        (1..self.len()).all(|k| self.dist(0, k) < 1e-15)
    }

    /// Advances `row` from run length `r − 1` to `r` and fills `chord[s] = d(s, s + r)`.
    fn advance(&self, row: &mut Vec<f64>, chord: &mut [f64], r: usize) {
        let n = self.len();
        let prev = std::mem::take(row);
        let mut next = vec![0.0; n];
        next.par_iter_mut()
            .zip(chord.par_iter_mut())
            .enumerate()
            .for_each(|(s, (out, ch))| {
                let d = self.dist(s, (s + r) % n);
                *ch = d;
                *out = prev[s].max(prev[(s + 1) % n]).max(d);
            });
        *row = next;
    }
}

/// Running maximum with the lowest-pair tie rule.
#[derive(Clone, Copy, Debug)]
struct Best {
    value: f64,
    pair: (usize, usize),
}

impl Best {
    fn none() -> Self {
        Best { value: f64::NEG_INFINITY, pair: (usize::MAX, usize::MAX) }
    }

    fn beats(&self, value: f64, pair: (usize, usize)) -> bool {
        value > self.value || (value == self.value && pair < self.pair)
    }

    fn offer(&mut self, value: f64, pair: (usize, usize)) {
        if self.beats(value, pair) {
            *self = Best { value, pair };
        }
    }
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Turning constant with pruning. Pairs whose best possible ratio is already
/// beaten are skipped; the result equals [`turning_constant_exhaustive`] exactly,
/// witness included.
pub fn turning_constant(c: &SampledCurve, metric: Metric) -> Result<TurningEstimate> {
    let k = Kernel::new(c, metric)?;
    if k.len() < 2 || k.is_degenerate() {
        return Err(Error::DegenerateCurve);
    }
    let best = pruned_sweep(&k).unwrap_or_else(|| exhaustive_sweep(&k));
    Ok(estimate(c, metric, best))
}

/// Turning constant from every pair, with memory bounded by running the
/// sweep in several passes.
pub fn turning_constant_exhaustive(c: &SampledCurve, metric: Metric) -> Result<TurningEstimate> {
    let k = Kernel::new(c, metric)?;
    if k.len() < 2 || k.is_degenerate() {
        return Err(Error::DegenerateCurve);
    }
    Ok(estimate(c, metric, exhaustive_sweep(&k)))
}

fn estimate(c: &SampledCurve, metric: Metric, best: Best) -> TurningEstimate {
    let (i, j) = best.pair;
    TurningEstimate {
        constant: best.value,
        witness: (i, j),
        witness_params: (c.params()[i], c.params()[j]),
        metric,
        resolution: c.len(),
    }
}

fn exhaustive_sweep(k: &Kernel) -> Best {
    let n = k.len();
    let half = n / 2;
    let mut best = Best::none();
    // rows 1..half with 2r < n hold the first arc of each pair
    let first_rows: Vec<usize> = (1..=half).filter(|&r| 2 * r < n).collect();
    let per_pass = (EXHAUSTIVE_BUDGET / n).max(1);
    let mut chunks: Vec<&[usize]> = first_rows.chunks(per_pass).collect();
    if chunks.is_empty() {
        chunks.push(&[]);
    }
    for (pass, chunk) in chunks.iter().enumerate() {
        let (f0, f1) = match (chunk.first(), chunk.last()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => (half + 1, half),
        };
        let mut saved: Vec<Vec<f64>> = vec![Vec::new(); chunk.len()];
        let mut row = vec![0.0; n];
        let mut chord = vec![0.0; n];
        let last = if chunk.is_empty() { half } else { (n - f0).max(half) };
        for r in 1..=last {
            k.advance(&mut row, &mut chord, r);
            if (f0..=f1).contains(&r) {
                saved[r - f0] = row.clone();
            }
            if 2 * r == n && pass == 0 {
                for s in 0..half {
                    let v = row[s].min(row[s + half]) / chord[s];
                    best.offer(v, (s, s + half));
                }
            }
            if 2 * r > n && (f0..=f1).contains(&(n - r)) {
                let f = n - r;
                let first = &saved[f - f0];
                for s in 0..n {
                    let t = (s + f) % n;
                    let v = first[s].min(row[t]) / k.dist(s, t);
                    best.offer(v, ordered(s, t));
                }
            }
        }
    }
    best
}

struct Pending {
    start: usize,
    first: f64,
    chord: f64,
}

/// Returns `None` when too many pairs stay unresolved.
fn pruned_sweep(k: &Kernel) -> Option<Best> {
    let n = k.len();
    let half = n / 2;
    // every ratio is at least 1 and the neighbouring pair (0, 1) attains it,
    // so it can only be displaced by a strictly larger ratio
    if k.dist(0, 1) == 0.0 {
        return None;
    }
    let mut best = Best { value: 1.0, pair: (0, 1) };
    let mut pending: Vec<Vec<Pending>> = (0..=half).map(|_| Vec::new()).collect();
    let mut pending_count = 0usize;
    let mut row = vec![0.0; n];
    let mut chord = vec![0.0; n];
    let mut window = vec![0.0; n];

    for r in 1..=half {
        k.advance(&mut row, &mut chord, r);
        if 2 * r == n {
            for s in 0..half {
                let v = row[s].min(row[s + half]) / chord[s];
                best.offer(v, (s, s + half));
            }
            continue;
        }
        window_max(&row, r, &mut window);
        let snapshot = best;
        let (row_best, mut row_pending) = (0..n)
            .into_par_iter()
            .fold(
                || (Best::none(), Vec::new()),
                |(mut rb, mut pend), s| {
                    let t = (s + r) % n;
                    let pair = ordered(s, t);
                    let (first, d) = (row[s], chord[s]);
                    let upper = first / d;
                    if snapshot.beats(upper, pair) {
                        // the other arc contains whole runs of the same length
                        if window[s].max(d) >= first {
                            rb.offer(upper, pair);
                        } else {
                            pend.push(Pending { start: s, first, chord: d });
                        }
                    }
                    (rb, pend)
                },
            )
            .reduce(
                || (Best::none(), Vec::new()),
                |(mut a, mut pa), (b, pb)| {
                    a.offer(b.value, b.pair);
                    pa.extend(pb);
                    (a, pa)
                },
            );
        best.offer(row_best.value, row_best.pair);
        row_pending.sort_unstable_by_key(|p| p.start);
        pending_count += row_pending.len();
        if pending_count > PENDING_BUDGET {
            return None;
        }
        pending[r] = row_pending;
    }

    for (f, list) in pending.iter_mut().enumerate() {
        list.retain(|p| best.beats(p.first / p.chord, ordered(p.start, (p.start + f) % n)));
    }
    let Some(min_f) = (1..=half).find(|&f| !pending[f].is_empty()) else {
        return Some(best);
    };
    for r in half + 1..=n - min_f {
        k.advance(&mut row, &mut chord, r);
        let f = n - r;
        for p in &pending[f] {
            let t = (p.start + f) % n;
            let v = p.first.min(row[t]) / p.chord;
            best.offer(v, ordered(p.start, t));
        }
    }
    Some(best)
}

/// `out[s] = max row[t]` over the cyclic window `t ∈ [s + r, s + n − r]`:
/// the runs of length `r` lying inside the complementary arc of pair `(s, s + r)`.
fn window_max(row: &[f64], r: usize, out: &mut [f64]) {
    let n = row.len();
    let w = n - 2 * r + 1;
    let mut dq: VecDeque<usize> = VecDeque::with_capacity(w);
    let mut next = r;
    for (s, slot) in out.iter_mut().enumerate() {
        let hi = s + r + w - 1;
        while next <= hi {
            let v = row[next % n];
            while dq.back().is_some_and(|&b| row[b % n] <= v) {
                dq.pop_back();
            }
            dq.push_back(next);
            next += 1;
        }
        while dq.front().is_some_and(|&f| f < s + r) {
            dq.pop_front();
        }
        *slot = row[dq.front().copied().expect("window is non-empty") % n];
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrendVerdict {
    Unbounded,
    Bounded,
    Inconclusive,
}

/// Least-squares fit of `log(constant)` against `log(resolution)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrendReport {
    pub resolutions: Vec<usize>,
    pub constants: Vec<f64>,
    pub slope: f64,
    pub intercept: f64,
    pub verdict: TrendVerdict,
}

fn check_resolutions(resolutions: &[usize]) -> Result<()> {
    if resolutions.len() < 3 {
        return Err(Error::TooFewResolutions(resolutions.len()));
    }
    if resolutions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedResolutions);
    }
    Ok(())
}

/// Fits the log-log trend of precomputed constants.
pub fn trend_from_constants(resolutions: &[usize], constants: &[f64]) -> Result<TrendReport> {
    check_resolutions(resolutions)?;
    if constants.len() != resolutions.len() {
        return Err(Error::OutOfRange("one constant per resolution".into()));
    }
    let xs: Vec<f64> = resolutions.iter().map(|&r| (r as f64).ln()).collect();
    let ys: Vec<f64> = constants.iter().map(|c| c.ln()).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let verdict = if !slope.is_finite() || slope > UNBOUNDED_SLOPE {
        TrendVerdict::Unbounded
    } else if slope < BOUNDED_SLOPE {
        TrendVerdict::Bounded
    } else {
        TrendVerdict::Inconclusive
    };
    Ok(TrendReport {
        resolutions: resolutions.to_vec(),
        constants: constants.to_vec(),
        slope,
        intercept: my - slope * mx,
        verdict,
    })
}

/// Turning constants of `generator(n)` for each resolution and their log-log slope.
pub fn divergence_trend<F>(generator: F, resolutions: &[usize], metric: Metric) -> Result<TrendReport>
where
    F: Fn(usize) -> Result<SampledCurve>,
{
    check_resolutions(resolutions)?;
    let constants = resolutions
        .iter()
        .map(|&n| turning_constant(&generator(n)?, metric).map(|e| e.constant))
        .collect::<Result<Vec<_>>>()?;
    trend_from_constants(resolutions, &constants)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum QuasicircleVerdict {
    BoundedBy { k: f64 },
    UnboundedTrend,
    Inconclusive { reason: String },
}

/// Classifies a trend: bounded by the largest observed constant when the slope
/// is flat and every constant is at most `k_cap`, unbounded when the slope is
/// steep, inconclusive otherwise.
pub fn verdict_from_trend(trend: &TrendReport, k_cap: f64) -> QuasicircleVerdict {
    let k = trend.constants.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    match trend.verdict {
        TrendVerdict::Unbounded => QuasicircleVerdict::UnboundedTrend,
        TrendVerdict::Bounded if k <= k_cap => QuasicircleVerdict::BoundedBy { k },
        TrendVerdict::Bounded => QuasicircleVerdict::Inconclusive {
            reason: format!("flat slope {:.3} but constant {k:.6} exceeds cap {k_cap}", trend.slope),
        },
        TrendVerdict::Inconclusive => QuasicircleVerdict::Inconclusive {
            reason: format!(
                "slope {:.3} between {BOUNDED_SLOPE} and {UNBOUNDED_SLOPE}",
                trend.slope
            ),
        },
    }
}

pub fn quasicircle_verdict<F>(
    generator: F,
    resolutions: &[usize],
    k_cap: f64,
    metric: Metric,
) -> Result<(QuasicircleVerdict, TrendReport)>
where
    F: Fn(usize) -> Result<SampledCurve>,
{
    let trend = divergence_trend(generator, resolutions, metric)?;
    Ok((verdict_from_trend(&trend, k_cap), trend))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{affine_image, cardioid, circle, moebius_image};
    use crate::moebius::{random_moebius, MoebiusMap};
    use num_complex::Complex64;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: every pair, both arcs scanned point by point.
    fn brute_force(c: &SampledCurve, metric: Metric) -> (f64, (usize, usize)) {
        let k = Kernel::new(c, metric).unwrap();
        let n = k.len();
        let arc_diam = |from: usize, len: usize| {
            let mut d: f64 = 0.0;
            for a in 0..=len {
                for b in a + 1..=len {
                    d = d.max(k.dist((from + a) % n, (from + b) % n));
                }
            }
            d
        };
        let mut best = (f64::NEG_INFINITY, (usize::MAX, usize::MAX));
        for i in 0..n {
            for j in i + 1..n {
                let v = arc_diam(i, j - i).min(arc_diam(j, n - (j - i))) / k.dist(i, j);
                if v > best.0 || (v == best.0 && (i, j) < best.1) {
                    best = (v, (i, j));
                }
            }
        }
        best
    }

    fn wiggly(rng: &mut ChaCha8Rng, n: usize) -> SampledCurve {
        // star-shaped curve with random radial noise
        let amps: Vec<f64> = (0..5).map(|_| rng.random_range(-0.15..0.15)).collect();
        let pts = (0..n)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / n as f64;
                let r = 1.0 + amps.iter().enumerate().map(|(m, a)| a * ((m + 2) as f64 * t).sin()).sum::<f64>();
                SpherePoint::Finite(Complex64::from_polar(r, t))
            })
            .collect();
        let params = (0..n).map(|k| k as f64).collect();
        SampledCurve::from_parts_unchecked(pts, params, "wiggly")
    }

    #[test]
    fn matches_brute_force_on_small_curves() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut curves = vec![
            cardioid(8, 1.0).unwrap(),
            cardioid(9, 1.0).unwrap(),
            cardioid(40, 1.0).unwrap(),
            cardioid(33, 2.0).unwrap(),
            circle(0.0.into(), 1.0, 24).unwrap(),
        ];
        for n in [8, 13, 30, 47] {
            curves.push(wiggly(&mut rng, n));
        }
        let m = random_moebius(&mut rng, 1.0);
        curves.push(moebius_image(&cardioid(36, 1.0).unwrap(), &m));
        for c in &curves {
            for metric in [Metric::Chordal, Metric::Euclidean] {
                let (v, w) = brute_force(c, metric);
                let pruned = turning_constant(c, metric).unwrap();
                let full = turning_constant_exhaustive(c, metric).unwrap();
                assert_eq!(pruned.constant, v, "{}", c.label());
                assert_eq!(full.constant, v, "{}", c.label());
                assert_eq!(pruned.witness, w);
                assert_eq!(full.witness, w);
            }
        }
    }

    #[test]
    fn circle_constant_is_one() {
        let c = circle(0.0.into(), 1.0, 1024).unwrap();
        let e = turning_constant(&c, Metric::Euclidean).unwrap();
        assert!((e.constant - 1.0).abs() < 1e-3);
        assert!(e.constant >= 1.0 - 1e-9);
        assert_eq!(e.resolution, 1024);
        assert_eq!(e.metric, Metric::Euclidean);
    }

    #[test]
    fn cardioid_constant_grows() {
        let mut last = 0.0;
        for n in [128, 256, 512, 1024] {
            let e = turning_constant(&cardioid(n, 1.0).unwrap(), Metric::Euclidean).unwrap();
            if last > 0.0 {
                let ratio = e.constant / last;
                assert!((1.5..=2.5).contains(&ratio), "{ratio}");
            }
            last = e.constant;
            // the witness straddles the cusp: samples 1 and n − 1
            assert_eq!(e.witness, (1, n - 1));
        }
    }

    #[test]
    fn similarity_invariance() {
        let base = cardioid(256, 1.0).unwrap();
        let b0 = turning_constant(&base, Metric::Euclidean).unwrap().constant;
        let img = affine_image(&base, Complex64::new(0.0, 4.0), 0.0.into()).unwrap();
        let b1 = turning_constant(&img, Metric::Euclidean).unwrap().constant;
        assert!((b0 - b1).abs() < 1e-12 * b0);
        // translation rounds the short chord across the cusp at the 1e-16 · |shift| level
        let img = affine_image(&base, Complex64::new(0.0, 3.0), Complex64::new(5.0, -1.0)).unwrap();
        let b2 = turning_constant(&img, Metric::Euclidean).unwrap().constant;
        assert!((b0 - b2).abs() < 1e-8 * b0);
    }

    #[test]
    fn euclidean_rejects_infinity_and_degenerate() {
        let card = cardioid(64, 1.0).unwrap();
        let flip = MoebiusMap::from_real(0.0, -1.0, 1.0, 0.0).unwrap();
        let img = moebius_image(&card, &flip);
        assert!(matches!(turning_constant(&img, Metric::Euclidean), Err(Error::InfinitePoint(_))));
        assert!(turning_constant(&img, Metric::Chordal).is_ok());
        let flat = SampledCurve::from_parts_unchecked(
            vec![SpherePoint::new(1.0, 1.0); 10],
            (0..10).map(|k| k as f64).collect(),
            "flat",
        );
        assert_eq!(turning_constant(&flat, Metric::Euclidean), Err(Error::DegenerateCurve));
    }

    #[test]
    fn window_max_matches_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for n in [5usize, 8, 17, 40] {
            let row: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
            for r in 1..=(n - 1) / 2 {
                let mut out = vec![0.0; n];
                window_max(&row, r, &mut out);
                for s in 0..n {
                    let want = (s + r..=s + n - r).map(|t| row[t % n]).fold(f64::NEG_INFINITY, f64::max);
                    assert_eq!(out[s], want);
                }
            }
        }
    }

    #[test]
    fn trend_examples() {
        let circles = divergence_trend(
            |n| circle(0.0.into(), 1.0, n),
            &[128, 256, 512, 1024],
            Metric::Euclidean,
        )
        .unwrap();
        assert!(circles.slope.abs() < 0.05);
        assert_eq!(circles.verdict, TrendVerdict::Bounded);
        let cards = divergence_trend(|n| cardioid(n, 1.0), &[128, 256, 512, 1024], Metric::Euclidean).unwrap();
        assert!((cards.slope - 1.0).abs() < 0.2, "{}", cards.slope);
        assert_eq!(cards.verdict, TrendVerdict::Unbounded);
        assert_eq!(
            divergence_trend(|n| cardioid(n, 1.0), &[128, 256], Metric::Euclidean),
            Err(Error::TooFewResolutions(2))
        );
        assert_eq!(
            trend_from_constants(&[4, 2, 8], &[1.0, 1.0, 1.0]),
            Err(Error::UnsortedResolutions)
        );
    }

    #[test]
    fn verdict_threshold_logic() {
        let res = [100, 200, 400];
        // mixed slopes: rises then falls, fitted slope ≈ 0.2
        let noisy = trend_from_constants(&res, &[10.0, 14.0, 13.2]).unwrap();
        assert!(noisy.slope > BOUNDED_SLOPE && noisy.slope < UNBOUNDED_SLOPE, "{}", noisy.slope);
        assert!(matches!(verdict_from_trend(&noisy, 100.0), QuasicircleVerdict::Inconclusive { .. }));
        let flat = trend_from_constants(&res, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(verdict_from_trend(&flat, 2.0), QuasicircleVerdict::BoundedBy { k: 1.0 });
        assert!(matches!(verdict_from_trend(&flat, 0.5), QuasicircleVerdict::Inconclusive { .. }));
        let (v, _) = quasicircle_verdict(|n| cardioid(n, 1.0), &[64, 128, 256], 1e9, Metric::Euclidean).unwrap();
        assert_eq!(v, QuasicircleVerdict::UnboundedTrend);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn pruned_equals_exhaustive(seed in any::<u64>(), n in 8usize..160) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let base = wiggly(&mut rng, n);
            let m = random_moebius(&mut rng, 1.0);
            for c in [base.clone(), moebius_image(&base, &m)] {
                let a = turning_constant(&c, Metric::Chordal).unwrap();
                let b = turning_constant_exhaustive(&c, Metric::Chordal).unwrap();
                prop_assert_eq!(a.constant, b.constant);
                prop_assert_eq!(a.witness, b.witness);
                prop_assert!(a.constant >= 1.0 - 1e-9);
            }
        }
    }
}
