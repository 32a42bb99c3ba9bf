//! The elementary subgroups used as counterexample sources, word enumeration,
//! finite nets in PSU(2), random Borel elements and fixed-point limit sets.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

use crate::compacta::CompactCloud;
use crate::error::{Error, Result};
use crate::moebius::{unitary_from_quaternion, MoebiusMap};
use crate::sphere::{chordal_distance, SpherePoint};

pub const DEFAULT_ELEMENT_BUDGET: usize = 100_000;

/// Entrywise distance below which two enumerated elements are merged.
pub const DEDUP_TOL: f64 = 1e-9;

/// Fixed points closer than this (chordal) are merged in limit-set samples.
const LIMIT_POINT_MERGE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields, try_from = "RawSpec")]
pub enum GroupSpec {
    /// `{id}`.
    Trivial,
    /// Generated by `T(z) = z + 1`.
    CyclicParabolic,
    /// Generated by `L(z) = λ(z + 1) + 1`, `|λ| > 1`.
    CyclicLoxodromic { lambda: Complex64 },
    /// Generated by `z + 1` and `z + τ`, `Im τ > 0`.
    RankTwoParabolic { tau: Complex64 },
    Custom { generators: Vec<MoebiusMap> },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawSpec {
    // braces so that unknown fields are rejected for the parameterless kinds too
    Trivial {},
    CyclicParabolic {},
    CyclicLoxodromic { lambda: Complex64 },
    RankTwoParabolic { tau: Complex64 },
    Custom { generators: Vec<MoebiusMap> },
}

impl TryFrom<RawSpec> for GroupSpec {
    type Error = Error;
    fn try_from(raw: RawSpec) -> Result<Self> {
        match raw {
            RawSpec::Trivial {} => Ok(GroupSpec::Trivial),
            RawSpec::CyclicParabolic {} => Ok(GroupSpec::CyclicParabolic),
            RawSpec::CyclicLoxodromic { lambda } => GroupSpec::cyclic_loxodromic(lambda),
            RawSpec::RankTwoParabolic { tau } => GroupSpec::rank_two_parabolic(tau),
            RawSpec::Custom { generators } => GroupSpec::custom(generators),
        }
    }
}

impl GroupSpec {
    pub fn cyclic_loxodromic(lambda: Complex64) -> Result<Self> {
        if !(lambda.norm() > 1.0) || !lambda.is_finite() {
            return Err(Error::InvalidGroup(format!("loxodromic multiplier {lambda} needs |λ| > 1")));
        }
        Ok(GroupSpec::CyclicLoxodromic { lambda })
    }

    pub fn rank_two_parabolic(tau: Complex64) -> Result<Self> {
        if !(tau.im > 0.0) || !tau.is_finite() {
            return Err(Error::InvalidGroup(format!("second period {tau} needs Im τ > 0")));
        }
        Ok(GroupSpec::RankTwoParabolic { tau })
    }

    pub fn custom(generators: Vec<MoebiusMap>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidGroup("custom group needs at least one generator".into()));
        }
        if let Some(i) = generators.iter().position(|g| g.is_identity()) {
            return Err(Error::InvalidGroup(format!("generator {i} is the identity")));
        }
        Ok(GroupSpec::Custom { generators })
    }

    pub fn generators(&self) -> Vec<MoebiusMap> {
        let one = Complex64::new(1.0, 0.0);
        match self {
            GroupSpec::Trivial => Vec::new(),
            GroupSpec::CyclicParabolic => vec![MoebiusMap::translation(one)],
            GroupSpec::CyclicLoxodromic { lambda } => {
                vec![MoebiusMap::new(*lambda, lambda + one, 0.0.into(), one).expect("λ ≠ 0")]
            }
            GroupSpec::RankTwoParabolic { tau } => {
                vec![MoebiusMap::translation(one), MoebiusMap::translation(*tau)]
            }
            GroupSpec::Custom { generators } => generators.clone(),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupSpec::Trivial | GroupSpec::CyclicParabolic | GroupSpec::CyclicLoxodromic { .. })
    }

    pub fn name(&self) -> String {
        match self {
            GroupSpec::Trivial => "trivial".into(),
            GroupSpec::CyclicParabolic => "cyclic parabolic <z+1>".into(),
            GroupSpec::CyclicLoxodromic { lambda } => format!("cyclic loxodromic <λ(z+1)+1>, λ={lambda}"),
            GroupSpec::RankTwoParabolic { tau } => format!("rank-two parabolic <z+1, z+τ>, τ={tau}"),
            GroupSpec::Custom { generators } => format!("custom, {} generators", generators.len()),
        }
    }
}

/// A group word as syllables `(generator, exponent)`, read left to right as
/// composition: `[(0, 2), (1, -1)]` is `g0² ∘ g1⁻¹`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn power(generator: usize, k: i64) -> Self {
        if k == 0 {
            Word::identity()
        } else {
            Word(vec![(generator, k)])
        }
    }

    /// Total letter count.
    pub fn length(&self) -> u64 {
        self.0.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// The exponent of a single-generator word, `0` for the identity.
    pub fn exponent(&self) -> Option<i64> {
        match self.0.as_slice() {
            [] => Some(0),
            [(0, e)] => Some(*e),
            _ => None,
        }
    }

    fn push_letter(&mut self, generator: usize, sign: i64) {
        match self.0.last_mut() {
            Some((g, e)) if *g == generator => *e += sign,
            _ => self.0.push((generator, sign)),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "g{g}")?;
            } else {
                write!(f, "g{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupElement {
    pub word: Word,
    pub map: MoebiusMap,
}

/// Enumerates the ball of the given radius with the default element budget.
pub fn enumerate_elements(spec: &GroupSpec, bound: usize) -> Result<Vec<GroupElement>> {
    enumerate_with_budget(spec, bound, DEFAULT_ELEMENT_BUDGET)
}

/// Cyclic kinds give `g^k` for `k = −bound..=bound`; rank two gives `T1^n ∘ T2^m`
/// for `|n|, |m| ≤ bound`, ordered by `(n, m)`; custom groups give all reduced
/// words of length at most `bound`, shortest first and lexicographic within a
/// length, with near-duplicate matrices merged into their first occurrence.
pub fn enumerate_with_budget(spec: &GroupSpec, bound: usize, budget: usize) -> Result<Vec<GroupElement>> {
    let gens = spec.generators();
    let b = bound as i64;
    let requested = ball_size(spec, bound);
    if requested > budget as u128 {
        return Err(Error::BudgetExceeded { bound, requested, budget });
    }
    Ok(match spec {
        GroupSpec::Trivial => vec![GroupElement { word: Word::identity(), map: MoebiusMap::identity() }],
        GroupSpec::CyclicParabolic | GroupSpec::CyclicLoxodromic { .. } => (-b..=b)
            .map(|k| GroupElement { word: Word::power(0, k), map: gens[0].pow(k) })
            .collect(),
        GroupSpec::RankTwoParabolic { .. } => {
            let mut out = Vec::with_capacity(requested as usize);
            for n in -b..=b {
                for m in -b..=b {
                    let mut word = Word::power(0, n);
                    word.0.extend(Word::power(1, m).0);
                    out.push(GroupElement { word, map: gens[0].pow(n).compose(&gens[1].pow(m)) });
                }
            }
            out
        }
        GroupSpec::Custom { .. } => enumerate_reduced(&gens, bound),
    })
}

/// Number of candidate elements before deduplication.
pub fn ball_size(spec: &GroupSpec, bound: usize) -> u128 {
    let side = 2 * bound as u128 + 1;
    match spec {
        GroupSpec::Trivial => 1,
        GroupSpec::CyclicParabolic | GroupSpec::CyclicLoxodromic { .. } => side,
        GroupSpec::RankTwoParabolic { .. } => side.saturating_mul(side),
        GroupSpec::Custom { generators } => {
            let letters = 2 * generators.len() as u128;
            let mut total: u128 = 1;
            let mut level: u128 = 1;
            for l in 0..bound {
                level = level.saturating_mul(if l == 0 { letters } else { letters - 1 });
                total = total.saturating_add(level);
                if total == u128::MAX {
                    break;
                }
            }
            total
        }
    }
}

struct Dedup {
    cells: HashMap<i64, Vec<usize>>,
}

impl Dedup {
    // |a.re| + |a.im| is sign-invariant, and merged pairs differ by < 1e-9 in it
    fn key(m: &MoebiusMap) -> f64 {
        m.a().re.abs() + m.a().im.abs()
    }

    fn cell(x: f64) -> i64 {
        (x / 1e-6).floor() as i64
    }

    fn find(&self, m: &MoebiusMap, kept: &[GroupElement]) -> bool {
        let c = Self::cell(Self::key(m));
        (c - 1..=c + 1).any(|cell| {
            self.cells
                .get(&cell)
                .is_some_and(|ids| ids.iter().any(|&i| kept[i].map.projective_entry_diff(m) < DEDUP_TOL))
        })
    }

    fn insert(&mut self, m: &MoebiusMap, index: usize) {
        self.cells.entry(Self::cell(Self::key(m))).or_default().push(index);
    }
}

// word, its matrix, and its last letter
type Frontier = (Word, MoebiusMap, Option<(usize, i64)>);

fn enumerate_reduced(gens: &[MoebiusMap], bound: usize) -> Vec<GroupElement> {
    // letter order: g0, g0⁻¹, g1, g1⁻¹, ...
    let letters: Vec<(usize, i64, MoebiusMap)> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, g)| [(i, 1, *g), (i, -1, g.inverse())])
        .collect();
    let mut kept = vec![GroupElement { word: Word::identity(), map: MoebiusMap::identity() }];
    let mut dedup = Dedup { cells: HashMap::new() };
    dedup.insert(&kept[0].map, 0);
    // frontier holds every reduced word of the current length, duplicates included,
    // so later words are still generated from it
    let mut frontier: Vec<Frontier> = vec![(Word::identity(), MoebiusMap::identity(), None)];
    for _ in 0..bound {
        let mut next = Vec::with_capacity(frontier.len() * letters.len());
        for (word, map, last) in &frontier {
            for &(g, s, ref m) in &letters {
                if *last == Some((g, -s)) {
                    continue;
                }
                let mut w = word.clone();
                w.push_letter(g, s);
                next.push((w, map.compose(m), Some((g, s))));
            }
        }
        for (w, m, _) in &next {
            if !dedup.find(m, &kept) {
                dedup.insert(m, kept.len());
                kept.push(GroupElement { word: w.clone(), map: *m });
            }
        }
        frontier = next;
    }
    kept
}

/// A finite set of group elements with a note on how it was built.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupNet {
    pub elements: Vec<MoebiusMap>,
    pub description: String,
}

impl GroupNet {
    pub fn identity() -> Self {
        GroupNet { elements: vec![MoebiusMap::identity()], description: "identity only".into() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn quaternion_map(q: [f64; 4]) -> MoebiusMap {
    let n = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
    unitary_from_quaternion(Complex64::new(q[0] / n, q[1] / n), Complex64::new(q[2] / n, q[3] / n))
}

/// Grid on the four faces `q_i = +1` of the cube `[−1, 1]⁴`, pushed radially to
/// the unit quaternions. Every unit quaternion or its negative projects from
/// one of these faces, a grid cell has half-diagonal `√3/N`, and radial
/// projection outside the ball is 1-Lipschitz, so every rotation lies within
/// operator distance `√3/N ≤ resolution` of the net.
pub fn psu2_net(resolution: f64) -> Result<GroupNet> {
    if !(resolution > 0.0) || !resolution.is_finite() {
        return Err(Error::OutOfRange(format!("net resolution {resolution} must be positive")));
    }
    let mut n = (3f64.sqrt() / resolution).ceil().max(1.0) as usize;
    if n.is_multiple_of(2) {
        // odd grids contain the face centre, hence the identity
        n += 1;
    }
    let coord = |j: usize| -1.0 + (2 * j + 1) as f64 / n as f64;
    let mut elements = Vec::with_capacity(4 * n * n * n);
    for face in 0..4 {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut rest = [coord(i), coord(j), coord(k)].into_iter();
                    let q: [f64; 4] = std::array::from_fn(|axis| if axis == face { 1.0 } else { rest.next().unwrap() });
                    elements.push(quaternion_map(q));
                }
            }
        }
    }
    Ok(GroupNet {
        elements,
        description: format!(
            "PSU(2) cube-face net, {n}^3 points on 4 faces, covering radius {:.6}",
            3f64.sqrt() / n as f64
        ),
    })
}

/// The 24 rotations of the octahedron.
pub fn octahedral_net() -> GroupNet {
    let h = 0.5;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut quats: Vec<[f64; 4]> = Vec::new();
    for axis in 0..4 {
        let mut q = [0.0; 4];
        q[axis] = 1.0;
        quats.push(q);
    }
    for signs in 0..8u32 {
        let s = |bit: u32| if signs >> bit & 1 == 1 { -h } else { h };
        quats.push([h, s(0), s(1), s(2)]);
    }
    for i in 0..4 {
        for j in i + 1..4 {
            for neg in [false, true] {
                let mut q = [0.0; 4];
                q[i] = r;
                q[j] = if neg { -r } else { r };
                quats.push(q);
            }
        }
    }
    GroupNet {
        elements: quats.into_iter().map(quaternion_map).collect(),
        description: "octahedral rotation group (24 elements)".into(),
    }
}

/// Random upper-triangular maps `[[a, b], [0, 1/a]]` with `log|a|` normal of
/// standard deviation 0.5, uniform argument, and complex normal `b` scaled by `scale`.
pub fn borel_sample<R: Rng + ?Sized>(count: usize, scale: f64, rng: &mut R) -> Result<Vec<MoebiusMap>> {
    if count == 0 {
        return Err(Error::OutOfRange("Borel sample count must be at least 1".into()));
    }
    if !(scale >= 0.0) || !scale.is_finite() {
        return Err(Error::OutOfRange(format!("Borel sample scale {scale} must be non-negative")));
    }
    Ok((0..count)
        .map(|_| {
            let s: f64 = rng.sample(StandardNormal);
            let a = Complex64::from_polar((0.5 * s).exp(), rng.random_range(-std::f64::consts::PI..std::f64::consts::PI));
            let b = if scale == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                scale * Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
            };
            MoebiusMap::new(a, b, 0.0.into(), a.inv()).expect("det one by construction")
        })
        .collect())
}

/// Fixed points of every non-identity element in the ball, merged at chordal
/// distance 1e-9. This stands in for the accumulation set of an orbit.
pub fn limit_set_sample(spec: &GroupSpec, bound: usize) -> Result<CompactCloud> {
    if matches!(spec, GroupSpec::Trivial) {
        return Err(Error::TrivialLimitSet);
    }
    let mut points: Vec<SpherePoint> = Vec::new();
    for e in enumerate_elements(spec, bound)? {
        if e.map.is_identity() {
            continue;
        }
        for p in e.map.fixed_points()? {
            if points.iter().all(|q| chordal_distance(q, &p) >= LIMIT_POINT_MERGE) {
                points.push(p);
            }
        }
    }
    if points.is_empty() {
        return Err(Error::OutOfRange(format!("bound {bound} yields no non-identity element")));
    }
    CompactCloud::new(points, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::random_unitary;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn lox2() -> GroupSpec {
        GroupSpec::cyclic_loxodromic(c(2.0, 0.0)).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(GroupSpec::cyclic_loxodromic(c(1.0, 0.0)).is_err());
        assert!(GroupSpec::cyclic_loxodromic(c(0.0, 1.5)).is_ok());
        assert!(GroupSpec::rank_two_parabolic(c(1.0, 0.0)).is_err());
        assert!(GroupSpec::custom(vec![MoebiusMap::identity()]).is_err());
        assert!(GroupSpec::custom(vec![]).is_err());
        let g: GroupSpec = serde_json::from_str(r#"{"kind":"cyclic_loxodromic","lambda":[2.0,0.0]}"#).unwrap();
        assert_eq!(g, lox2());
        assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"cyclic_loxodromic","lambda":[0.5,0.0]}"#).is_err());
        assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"trivial","x":1}"#).is_err());
        assert_eq!(serde_json::from_str::<GroupSpec>(r#"{"kind":"trivial"}"#).unwrap(), GroupSpec::Trivial);
        let back: GroupSpec = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn loxodromic_generator_matches_formula() {
        let l = lox2().generators()[0];
        for z in [c(0.0, 0.0), c(1.5, -2.0)] {
            let w = l.apply(&SpherePoint::Finite(z)).as_complex().unwrap();
            assert!((w - (2.0 * (z + 1.0) + 1.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn enumeration_examples() {
        let t = enumerate_elements(&GroupSpec::Trivial, 7).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].map.is_identity());
        let p = enumerate_elements(&GroupSpec::CyclicParabolic, 2).unwrap();
        let shifts: Vec<Complex64> = p.iter().map(|e| e.map.b() / e.map.d()).collect();
        assert_eq!(shifts, [-2.0, -1.0, 0.0, 1.0, 2.0].map(|k| c(k, 0.0)));
        assert_eq!(p[0].word, Word::power(0, -2));
        assert_eq!(p[0].word.to_string(), "g0^-2");
        let r = enumerate_elements(&GroupSpec::rank_two_parabolic(Complex64::i()).unwrap(), 1).unwrap();
        assert_eq!(r.len(), 9);
        for e in &r {
            assert_eq!(e.map.c(), c(0.0, 0.0));
            let shift = e.map.b() / e.map.d();
            assert!((shift.re.round() - shift.re).abs() < 1e-15 && (shift.im.round() - shift.im).abs() < 1e-15);
        }
        for i in 0..r.len() {
            for j in i + 1..r.len() {
                assert!(r[i].map.projective_entry_diff(&r[j].map) > DEDUP_TOL);
            }
        }
    }

    #[test]
    fn custom_enumeration_of_free_group() {
        // Schottky-like pair: free, so reduced words never collide
        let a = MoebiusMap::from_real(3.0, 0.0, 0.0, 1.0 / 3.0).unwrap();
        let b = MoebiusMap::from_real(5.0, 4.0, 4.0, 5.0).unwrap().conjugate_by(&MoebiusMap::rotation_to_infinity(&SpherePoint::new(0.3, 0.7)));
        let spec = GroupSpec::custom(vec![a, b]).unwrap();
        let els = enumerate_elements(&spec, 3).unwrap();
        assert_eq!(els.len() as u128, ball_size(&spec, 3));
        assert_eq!(els.len(), 1 + 4 + 12 + 36);
        // shortest first, lexicographic in letter order g0, g0⁻¹, g1, g1⁻¹
        assert_eq!(els[1].word.to_string(), "g0");
        assert_eq!(els[2].word.to_string(), "g0^-1");
        assert_eq!(els[5].word.to_string(), "g0^2");
        assert_eq!(els[6].word.to_string(), "g0 g1");
        // closed under inverse
        for e in &els {
            let inv = e.map.inverse();
            assert!(els.iter().any(|f| f.map.projective_entry_diff(&inv) < 1e-9), "{}", e.word);
        }
    }

    #[test]
    fn custom_enumeration_merges_relations() {
        // an elliptic element of order 4: g⁴ = id, g² = g⁻², ...
        let g = MoebiusMap::new(Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4), 0.0.into(), 0.0.into(), Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4)).unwrap();
        let els = enumerate_elements(&GroupSpec::custom(vec![g]).unwrap(), 6).unwrap();
        assert_eq!(els.len(), 4);
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                assert!(els[i].map.projective_entry_diff(&els[j].map) >= DEDUP_TOL);
            }
        }
    }

    #[test]
    fn custom_budget() {
        let a = MoebiusMap::from_real(3.0, 0.0, 0.0, 1.0 / 3.0).unwrap();
        let b = MoebiusMap::from_real(2.0, 1.0, 1.0, 1.0).unwrap();
        let spec = GroupSpec::custom(vec![a, b]).unwrap();
        match enumerate_elements(&spec, 20) {
            Err(Error::BudgetExceeded { bound: 20, budget: DEFAULT_ELEMENT_BUDGET, requested }) => {
                assert!(requested > 1_000_000_000)
            }
            other => panic!("{other:?}"),
        }
        assert!(enumerate_with_budget(&spec, 2, 17).is_ok());
        assert!(enumerate_with_budget(&spec, 2, 16).is_err());
        assert_eq!(ball_size(&GroupSpec::custom(vec![a; 3]).unwrap(), 500), u128::MAX);
    }

    #[test]
    fn psu2_net_properties() {
        let coarse = psu2_net(1.0).unwrap();
        assert!(coarse.elements.iter().any(|m| m.is_identity()));
        for res in [0.6, 0.3] {
            let net = psu2_net(res).unwrap();
            for u in &net.elements {
                assert!(u.is_unitary(1e-9));
                let b = u.iwasawa().b;
                assert!(b.max_entry_diff(&MoebiusMap::identity()) < 1e-9);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(41);
            for _ in 0..1000 {
                let g = random_unitary(&mut rng);
                let d = net.elements.iter().map(|u| u.operator_distance(&g)).fold(f64::INFINITY, f64::min);
                assert!(d <= res, "{d} > {res}");
            }
        }
        assert!(psu2_net(0.0).is_err());
    }

    #[test]
    fn octahedral_net_is_a_group() {
        let net = octahedral_net();
        assert_eq!(net.len(), 24);
        for (i, x) in net.elements.iter().enumerate() {
            assert!(x.is_unitary(1e-12));
            for y in &net.elements[i + 1..] {
                assert!(x.projective_entry_diff(y) > 1e-3);
            }
            for y in &net.elements {
                let p = x.compose(y);
                assert!(net.elements.iter().any(|z| z.projective_entry_diff(&p) < 1e-12));
            }
        }
        assert!(net.elements.iter().any(|m| m.is_identity()));
    }

    #[test]
    fn borel_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for m in borel_sample(200, 2.0, &mut rng).unwrap() {
            assert!(m.is_in_borel(1e-12));
            assert_eq!(m.apply(&SpherePoint::Infinity), SpherePoint::Infinity);
        }
        for m in borel_sample(20, 0.0, &mut rng).unwrap() {
            assert_eq!(m.b(), c(0.0, 0.0));
            assert_eq!(m.c(), c(0.0, 0.0));
        }
        assert!(borel_sample(0, 1.0, &mut rng).is_err());
    }

    #[test]
    fn limit_set_examples() {
        let p = limit_set_sample(&GroupSpec::CyclicParabolic, 4).unwrap();
        assert_eq!(p.points(), &[SpherePoint::Infinity]);
        assert_eq!(p.epsilon(), 0.0);
        let l = limit_set_sample(&lox2(), 4).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.points().contains(&SpherePoint::Infinity));
        assert!(l.points().iter().any(|q| chordal_distance(q, &SpherePoint::new(-3.0, 0.0)) < 1e-12));
        let r = limit_set_sample(&GroupSpec::rank_two_parabolic(c(0.5, 1.0)).unwrap(), 2).unwrap();
        assert_eq!(r.points(), &[SpherePoint::Infinity]);
        assert_eq!(limit_set_sample(&GroupSpec::Trivial, 3), Err(Error::TrivialLimitSet));
        assert!(limit_set_sample(&GroupSpec::CyclicParabolic, 0).is_err());
    }
}
