//! Curve families generated by group orbits: degeneration toward limit
//! points, fattening by a compact set of rotations, and the empirical test for
//! families of Jordan curves whose turning constants are unbounded.

use rayon::prelude::*;
use serde::Serialize;

use crate::compacta::{chordal_diameter, hausdorff_distance, to_cloud, CompactCloud, DEFAULT_SINGLETON_DELTA};
use crate::curves::{moebius_image, SampledCurve};
use crate::error::{Error, Result};
use crate::groups::{enumerate_elements, limit_set_sample, GroupNet, GroupSpec, Word};
use crate::moebius::MoebiusMap;
use crate::quasicircle::{trend_from_constants, turning_constant, Metric, TrendReport, TrendVerdict};
use crate::sphere::{chordal_distance, SpherePoint};

pub const DEFAULT_ESTIMATOR_RESOLUTION: usize = 2048;

/// All pairs are compared up to this many members, consecutive pairs beyond.
pub const ALL_PAIRS_LIMIT: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct FamilyMember {
    pub element: MoebiusMap,
    pub word: Word,
    /// Index into the fattening net, for fattened families.
    pub net_index: Option<usize>,
    /// Index of the member this one was fattened from.
    pub source_index: Option<usize>,
    #[serde(skip)]
    pub curve: SampledCurve,
    pub chordal_diameter: f64,
    pub degenerate: bool,
    pub simple: bool,
}

impl FamilyMember {
    fn new(element: MoebiusMap, word: Word, curve: SampledCurve, delta: f64) -> Self {
        let chordal_diameter = chordal_diameter(&to_cloud(&curve));
        let simple = curve.is_simple();
        FamilyMember {
            element,
            word,
            net_index: None,
            source_index: None,
            curve,
            chordal_diameter,
            degenerate: chordal_diameter < delta,
            simple,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveFamily {
    pub members: Vec<FamilyMember>,
    pub base_label: String,
    /// The generating group, for orbit families.
    pub spec: Option<GroupSpec>,
    pub bound: usize,
    pub degeneracy_delta: f64,
}

impl CurveFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_infinity(&self) -> bool {
        self.members.iter().any(|m| m.curve.contains_infinity())
    }
}

/// One member `g(base)` per enumerated element `g`, in enumeration order.
pub fn orbit_family(spec: &GroupSpec, base: &SampledCurve, bound: usize) -> Result<CurveFamily> {
    orbit_family_with_delta(spec, base, bound, DEFAULT_SINGLETON_DELTA)
}

pub fn orbit_family_with_delta(spec: &GroupSpec, base: &SampledCurve, bound: usize, delta: f64) -> Result<CurveFamily> {
    if !(delta > 0.0) {
        return Err(Error::OutOfRange(format!("degeneracy threshold {delta} must be positive")));
    }
    let elements = enumerate_elements(spec, bound)?;
    let members = elements
        .into_par_iter()
        .map(|e| {
            let curve = moebius_image(base, &e.map).with_label(format!("{} [{}]", base.label(), e.word));
            FamilyMember::new(e.map, e.word, curve, delta)
        })
        .collect();
    Ok(CurveFamily {
        members,
        base_label: base.label().to_string(),
        spec: Some(spec.clone()),
        bound,
        degeneracy_delta: delta,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileEntry {
    pub exponent: i64,
    pub chordal_diameter: f64,
}

/// Behaviour of one exponent ray.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RayEnd {
    /// `+1` for `n → +∞`, `−1` for `n → −∞`.
    pub direction: i64,
    pub last_exponent: i64,
    pub nearest_limit_point: SpherePoint,
    /// Hausdorff distance from the last member to that point.
    pub hausdorff_to_limit_point: f64,
    /// Smallest `N` such that diameters strictly decrease along the ray from `|n| = N` on.
    pub monotone_from: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegenerationProfile {
    pub entries: Vec<ProfileEntry>,
    pub limit_points: Vec<SpherePoint>,
    pub ends: Vec<RayEnd>,
}

/// Chordal diameters in exponent order and the limit point each ray approaches.
pub fn degeneration_profile(family: &CurveFamily) -> Result<DegenerationProfile> {
    let spec = family.spec.as_ref().filter(|s| s.is_cyclic()).ok_or(Error::NonCyclicFamily)?;
    let mut entries = family
        .members
        .iter()
        .map(|m| {
            let exponent = m.word.exponent().ok_or(Error::NonCyclicFamily)?;
            if m.net_index.is_some() {
                return Err(Error::NonCyclicFamily);
            }
            Ok(ProfileEntry { exponent, chordal_diameter: m.chordal_diameter })
        })
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by_key(|e| e.exponent);
    if matches!(spec, GroupSpec::Trivial) {
        return Ok(DegenerationProfile { entries, limit_points: Vec::new(), ends: Vec::new() });
    }
    let limit = limit_set_sample(spec, 1)?;
    let by_exponent = |k: i64| family.members.iter().find(|m| m.word.exponent() == Some(k));
    let mut ends = Vec::new();
    for direction in [1i64, -1] {
        let ray: Vec<&ProfileEntry> = if direction > 0 {
            entries.iter().filter(|e| e.exponent >= 0).collect()
        } else {
            entries.iter().rev().filter(|e| e.exponent <= 0).collect()
        };
        let Some(last) = ray.last() else { continue };
        if last.exponent == 0 {
            continue;
        }
        let cloud = to_cloud(&by_exponent(last.exponent).expect("entry comes from a member").curve);
        let (nearest_limit_point, hausdorff_to_limit_point) = limit
            .points()
            .iter()
            .map(|p| (*p, hausdorff_distance(&cloud, &CompactCloud::singleton(*p))))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("limit set is non-empty");
        let mut start = ray.len() - 1;
        while start > 0 && ray[start - 1].chordal_diameter > ray[start].chordal_diameter {
            start -= 1;
        }
        ends.push(RayEnd {
            direction,
            last_exponent: last.exponent,
            nearest_limit_point,
            hausdorff_to_limit_point,
            monotone_from: (ray.len() > 1 && start + 1 < ray.len()).then(|| ray[start].exponent.abs()),
        });
    }
    Ok(DegenerationProfile { entries, limit_points: limit.points().to_vec(), ends })
}

/// Every `η(α)` for `η` in the net and `α` in the family, net-major, each
/// tagged with the net index and the index of `α`.
pub fn fatten_family(family: &CurveFamily, net: &GroupNet) -> CurveFamily {
    let pairs: Vec<(usize, usize)> =
        (0..net.len()).flat_map(|i| (0..family.len()).map(move |j| (i, j))).collect();
    let members = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let eta = &net.elements[i];
            let alpha = &family.members[j];
            let curve = moebius_image(&alpha.curve, eta).with_label(format!("η{i}({})", alpha.curve.label()));
            let mut m = FamilyMember::new(eta.compose(&alpha.element), alpha.word.clone(), curve, family.degeneracy_delta);
            m.net_index = Some(i);
            m.source_index = Some(j);
            m
        })
        .collect();
    CurveFamily {
        members,
        base_label: family.base_label.clone(),
        spec: family.spec.clone(),
        bound: family.bound,
        degeneracy_delta: family.degeneracy_delta,
    }
}

fn pointwise_chordal(a: &SampledCurve, b: &SampledCurve) -> f64 {
    a.points()
        .iter()
        .zip(b.points())
        .map(|(p, q)| chordal_distance(p, q))
        .fold(0.0, f64::max)
}

/// Largest pointwise chordal distance between `η⁻¹(member)` and its source.
pub fn provenance_residual(fattened: &CurveFamily, source: &CurveFamily, net: &GroupNet) -> Result<f64> {
    fattened.members.iter().try_fold(0.0f64, |acc, m| {
        let (Some(i), Some(j)) = (m.net_index, m.source_index) else {
            return Err(Error::OutOfRange("member carries no fattening provenance".into()));
        };
        let back = moebius_image(&m.curve, &net.elements[i].inverse());
        Ok(acc.max(pointwise_chordal(&back, &source.members[j].curve)))
    })
}

/// `g(η(α))` against `k(b(α))` where `g∘η = k·b` is the Iwasawa factorization:
/// the pointwise chordal residual and whether the factors have the right shape.
pub fn redecomposition_residual(g: &MoebiusMap, eta: &MoebiusMap, alpha: &SampledCurve) -> (f64, bool) {
    let lhs = moebius_image(&moebius_image(alpha, eta), g);
    let f = g.compose(eta).iwasawa();
    let rhs = moebius_image(&moebius_image(alpha, &f.b), &f.k);
    (pointwise_chordal(&lhs, &rhs), f.k.is_unitary(1e-9) && f.b.is_in_borel(1e-12))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MemberRow {
    pub index: usize,
    pub word: String,
    pub net_index: Option<usize>,
    pub source_index: Option<usize>,
    pub chordal_diameter: f64,
    pub degenerate: bool,
    pub simple: bool,
    pub turning_constant: Option<f64>,
    pub witness: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HausdorffSummary {
    /// `"all"` or `"consecutive"`.
    pub pairs: String,
    pub count: usize,
    pub min: f64,
    pub median: f64,
    pub max: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilySummary {
    pub resolution: usize,
    pub metric: Metric,
    pub rows: Vec<MemberRow>,
    /// Max over the recorded member constants.
    pub sup_constant: f64,
    pub sup_member: usize,
    pub hausdorff: Option<HausdorffSummary>,
}

/// Euclidean unless some member passes through infinity.
pub fn default_metric(family: &CurveFamily) -> Metric {
    if family.contains_infinity() {
        Metric::Chordal
    } else {
        Metric::Euclidean
    }
}

pub fn pairwise_hausdorff(family: &CurveFamily) -> Option<HausdorffSummary> {
    let n = family.len();
    if n < 2 {
        return None;
    }
    let (label, pairs): (&str, Vec<(usize, usize)>) = if n <= ALL_PAIRS_LIMIT {
        ("all", (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
    } else {
        ("consecutive", (0..n - 1).map(|i| (i, i + 1)).collect())
    };
    let clouds: Vec<CompactCloud> = family.members.iter().map(|m| to_cloud(&m.curve)).collect();
    let mut d: Vec<f64> = pairs.iter().map(|&(i, j)| hausdorff_distance(&clouds[i], &clouds[j])).collect();
    d.sort_by(f64::total_cmp);
    let m = d.len();
    let median = if m % 2 == 1 { d[m / 2] } else { 0.5 * (d[m / 2 - 1] + d[m / 2]) };
    Some(HausdorffSummary { pairs: label.into(), count: m, min: d[0], median, max: d[m - 1] })
}

/// Per-member turning constants and the pairwise Hausdorff summary.
pub fn summarize_family(family: &CurveFamily, metric: Metric) -> Result<FamilySummary> {
    if family.is_empty() {
        return Err(Error::OutOfRange("empty family".into()));
    }
    let mut rows = Vec::with_capacity(family.len());
    let mut sup: Option<(f64, usize)> = None;
    for (index, m) in family.members.iter().enumerate() {
        let est = match turning_constant(&m.curve, metric) {
            Ok(e) => Some(e),
            Err(Error::DegenerateCurve) => None,
            Err(e) => return Err(e),
        };
        if let Some(e) = &est {
            if sup.is_none_or(|(s, _)| e.constant > s) {
                sup = Some((e.constant, index));
            }
        }
        rows.push(MemberRow {
            index,
            word: m.word.to_string(),
            net_index: m.net_index,
            source_index: m.source_index,
            chordal_diameter: m.chordal_diameter,
            degenerate: m.degenerate,
            simple: m.simple,
            turning_constant: est.as_ref().map(|e| e.constant),
            witness: est.as_ref().map(|e| e.witness),
        });
    }
    let (sup_constant, sup_member) = sup.ok_or(Error::DegenerateCurve)?;
    Ok(FamilySummary {
        resolution: family.members[0].curve.len(),
        metric,
        rows,
        sup_constant,
        sup_member,
        hausdorff: pairwise_hausdorff(family),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BhVerdict {
    /// The sup of turning constants grows with resolution.
    ViolatingFamilyFound,
    NoViolationDetected,
    Inconclusive,
}

impl BhVerdict {
    pub fn message(&self) -> &'static str {
        match self {
            BhVerdict::ViolatingFamilyFound => "BH-violating family found",
            BhVerdict::NoViolationDetected => "no violation detected",
            BhVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResolutionRecord {
    pub resolution: usize,
    /// Turning constant of the generator's curve itself.
    pub base_constant: f64,
    pub family: FamilySummary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitReport {
    pub group: String,
    pub base_label: String,
    pub bound: usize,
    pub members: usize,
    pub metric: Metric,
    pub records: Vec<ResolutionRecord>,
    pub trend: TrendReport,
    pub verdict: BhVerdict,
    pub message: String,
}

/// Builds the orbit family at every resolution, takes the sup of member
/// turning constants and fits the divergence trend of the sups.
pub fn bh_empirical_test<F>(spec: &GroupSpec, generator: F, bound: usize, resolutions: &[usize]) -> Result<OrbitReport>
where
    F: Fn(usize) -> Result<SampledCurve>,
{
    let mut families = Vec::with_capacity(resolutions.len());
    let mut bases = Vec::with_capacity(resolutions.len());
    for &n in resolutions {
        let base = generator(n)?;
        families.push(orbit_family(spec, &base, bound)?);
        bases.push(base);
    }
    let metric = if families.iter().any(CurveFamily::contains_infinity) {
        Metric::Chordal
    } else {
        Metric::Euclidean
    };
    let mut records = Vec::with_capacity(resolutions.len());
    for ((&resolution, family), base) in resolutions.iter().zip(&families).zip(&bases) {
        let base_constant = turning_constant(base, metric)?.constant;
        records.push(ResolutionRecord { resolution, base_constant, family: summarize_family(family, metric)? });
    }
    let sups: Vec<f64> = records.iter().map(|r| r.family.sup_constant).collect();
    let trend = trend_from_constants(resolutions, &sups)?;
    let verdict = match trend.verdict {
        TrendVerdict::Unbounded => BhVerdict::ViolatingFamilyFound,
        TrendVerdict::Bounded => BhVerdict::NoViolationDetected,
        TrendVerdict::Inconclusive => BhVerdict::Inconclusive,
    };
    Ok(OrbitReport {
        group: spec.name(),
        base_label: bases.last().map(|b| b.label().to_string()).unwrap_or_default(),
        bound,
        members: families.first().map_or(0, CurveFamily::len),
        metric,
        records,
        trend,
        verdict,
        message: verdict.message().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{affine_image, cardioid, circle};
    use crate::groups::{borel_sample, octahedral_net};
    use crate::moebius::random_unitary;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lox2() -> GroupSpec {
        GroupSpec::cyclic_loxodromic(Complex64::new(2.0, 0.0)).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let card = cardioid(128, 1.0).unwrap();
        let t = orbit_family(&GroupSpec::Trivial, &card, 9).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.members[0].curve.points(), card.points());
        let p = orbit_family(&GroupSpec::CyclicParabolic, &card, 5).unwrap();
        assert_eq!(p.len(), 11);
        for m in &p.members {
            let k = m.word.exponent().unwrap() as f64;
            let shifted = affine_image(&card, 1.0.into(), Complex64::new(k, 0.0)).unwrap();
            for (x, y) in m.curve.points().iter().zip(shifted.points()) {
                assert!(chordal_distance(x, y) < 1e-14);
            }
            assert!(m.simple && !m.degenerate);
        }
        let l = orbit_family(&lox2(), &card, 5).unwrap();
        assert_eq!(l.len(), 11);
        let diam = |m: &FamilyMember| {
            let pts: Vec<Complex64> = m.curve.points().iter().map(|p| p.as_complex().unwrap()).collect();
            pts.iter().flat_map(|a| pts.iter().map(move |b| (a - b).norm())).fold(0.0, f64::max)
        };
        let ratio = diam(&l.members[10]) / diam(&l.members[0]);
        assert!((ratio / 1024.0 - 1.0).abs() < 1e-12, "{ratio}");
    }

    #[test]
    fn degeneration_examples() {
        let card = cardioid(64, 1.0).unwrap();
        let p = orbit_family(&GroupSpec::CyclicParabolic, &card, 1000).unwrap();
        let prof = degeneration_profile(&p).unwrap();
        assert_eq!(prof.entries.len(), 2001);
        let at = |k: i64| prof.entries.iter().find(|e| e.exponent == k).unwrap().chordal_diameter;
        assert!(at(1000) < 0.01);
        for k in 10..1000 {
            assert!(at(k + 1) < at(k), "{k}");
        }
        // far out, chordal size is 2·(Euclidean diameter)/(1 + n²) to leading order
        let pts: Vec<Complex64> = card.points().iter().map(|p| p.as_complex().unwrap()).collect();
        let euclid = pts.iter().flat_map(|a| pts.iter().map(move |b| (a - b).norm())).fold(0.0, f64::max);
        assert!((at(1000) / (2.0 * euclid / (1.0 + 1e6)) - 1.0).abs() < 5e-3);
        assert_eq!(prof.limit_points, vec![SpherePoint::Infinity]);
        assert!(prof.ends.iter().all(|e| e.nearest_limit_point == SpherePoint::Infinity));
        let m = degeneration_profile(&orbit_family(&GroupSpec::Trivial, &card, 0).unwrap()).unwrap();
        assert_eq!(m.entries.len(), 1);
        assert_eq!(m.entries[0].chordal_diameter, chordal_diameter(&to_cloud(&card)));
        let r = orbit_family(&GroupSpec::rank_two_parabolic(Complex64::i()).unwrap(), &card, 1).unwrap();
        assert_eq!(degeneration_profile(&r), Err(Error::NonCyclicFamily));
    }

    #[test]
    fn loxodromic_degeneration() {
        let card = cardioid(64, 1.0).unwrap();
        let l = orbit_family(&lox2(), &card, 60).unwrap();
        let prof = degeneration_profile(&l).unwrap();
        let up = prof.ends.iter().find(|e| e.direction == 1).unwrap();
        assert_eq!(up.nearest_limit_point, SpherePoint::Infinity);
        assert!(up.hausdorff_to_limit_point < 0.01);
        let down = prof.ends.iter().find(|e| e.direction == -1).unwrap();
        assert!(chordal_distance(&down.nearest_limit_point, &SpherePoint::new(-3.0, 0.0)) < 1e-12);
        assert!(down.hausdorff_to_limit_point < 1e-12);
        assert!(up.monotone_from.is_some() && down.monotone_from.is_some());
        assert!(l.members.iter().any(|m| m.degenerate));
        for m in &l.members {
            assert_eq!(m.degenerate, m.chordal_diameter < DEFAULT_SINGLETON_DELTA);
        }
    }

    #[test]
    fn fattening_examples() {
        let card = cardioid(128, 1.0).unwrap();
        let fam = orbit_family(&GroupSpec::CyclicParabolic, &card, 1).unwrap();
        let same = fatten_family(&fam, &GroupNet::identity());
        assert_eq!(same.len(), fam.len());
        for (a, b) in same.members.iter().zip(&fam.members) {
            assert_eq!(a.curve.points(), b.curve.points());
        }
        let net = octahedral_net();
        let fat = fatten_family(&fam, &net);
        assert_eq!(fat.len(), 72);
        assert!(fat.members.iter().all(|m| m.simple));
        assert!(provenance_residual(&fat, &fam, &net).unwrap() < 1e-9);
        assert!(provenance_residual(&fam, &fam, &net).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let bs = borel_sample(20, 1.0, &mut rng).unwrap();
        for b in &bs {
            let g = random_unitary(&mut rng).compose(b);
            for (i, eta) in net.elements.iter().enumerate().step_by(5) {
                let (res, shape) = redecomposition_residual(&g, eta, &fam.members[i % 3].curve);
                assert!(res < 1e-9 && shape, "{res}");
            }
        }
    }

    #[test]
    fn summary_and_sup() {
        let card = cardioid(256, 1.0).unwrap();
        let fam = orbit_family(&GroupSpec::rank_two_parabolic(Complex64::i()).unwrap(), &card, 1).unwrap();
        let s = summarize_family(&fam, default_metric(&fam)).unwrap();
        assert_eq!(s.metric, Metric::Euclidean);
        let max = s.rows.iter().filter_map(|r| r.turning_constant).fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(s.sup_constant, max);
        let h = s.hausdorff.unwrap();
        assert_eq!((h.pairs.as_str(), h.count), ("all", 36));
        assert!(h.min > 0.0 && h.min <= h.median && h.median <= h.max);
    }

    #[test]
    fn bh_examples() {
        let res = [256, 512, 1024];
        let r = bh_empirical_test(&GroupSpec::CyclicParabolic, |n| cardioid(n, 1.0), 2, &res).unwrap();
        assert_eq!(r.verdict, BhVerdict::ViolatingFamilyFound);
        assert_eq!(r.message, "BH-violating family found");
        for rec in &r.records {
            assert!((rec.family.sup_constant - rec.base_constant).abs() < 1e-6 * rec.base_constant);
        }
        let c = bh_empirical_test(&GroupSpec::Trivial, |n| circle(0.0.into(), 1.0, n), 0, &res).unwrap();
        assert_eq!(c.verdict, BhVerdict::NoViolationDetected);
        assert!(c.records.iter().all(|r| (r.family.sup_constant - 1.0).abs() < 1e-3));
    }
}
