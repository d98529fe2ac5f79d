//! Check positions for two-dimensional binary abelian codes in
//! `F[X1, X2] / <X1^r1 - 1, X2^r2 - 1>`, computed from the defining set alone.
//!
//! A defining set is a union of 2-orbits `Q(a1, a2)`. After picking one
//! representative per orbit so that the first coordinates of the
//! representatives form a repetition-free system of coset representatives
//! modulo `r1` ("restricted" representatives), every first coordinate `e1`
//! receives a weight `M(e1)`, the sum of the second-coordinate coset sizes
//! `m(e1, e2)` over its representatives. Sorting the distinct weights yields the
//! staircase `(f, g)` and with it the region Γ of check positions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::{check_modulus, check_residue, coset_len, cyclotomic_coset, Coset};

/// A position or exponent pair in `Z_r1 x Z_r2`.
pub type Point = (u64, u64);

/// The 2-orbit of a pair under simultaneous doubling modulo `(r1, r2)`.
/// Elements are sorted lexicographically; the leader is the smallest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orbit2D {
    r1: u64,
    r2: u64,
    elements: Vec<Point>,
}

impl Orbit2D {
    pub fn moduli(&self) -> (u64, u64) {
        (self.r1, self.r2)
    }

    pub fn elements(&self) -> &[Point] {
        &self.elements
    }

    pub fn leader(&self) -> Point {
        self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.elements.binary_search(&p).is_ok()
    }
}

/// `Q(a1, a2) = {(a1·2^i mod r1, a2·2^i mod r2) : i >= 0}`.
pub fn q_orbit(a1: u64, a2: u64, r1: u64, r2: u64) -> Result<Orbit2D> {
    check_modulus(r1)?;
    check_modulus(r2)?;
    check_residue(a1, r1)?;
    check_residue(a2, r2)?;
    let start = (a1, a2);
    let mut elements = vec![start];
    let mut p = double(start, r1, r2);
    while p != start {
        elements.push(p);
        p = double(p, r1, r2);
    }
    elements.sort_unstable();
    Ok(Orbit2D { r1, r2, elements })
}

fn double(p: Point, r1: u64, r2: u64) -> Point {
    (p.0 * 2 % r1, p.1 * 2 % r2)
}

/// A defining set: a disjoint union of 2-orbits, kept sorted by orbit leader.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DefiningSetDoc", into = "DefiningSetDoc")]
pub struct DefiningSet2D {
    r1: u64,
    r2: u64,
    orbits: Vec<Orbit2D>,
}

impl DefiningSet2D {
    pub fn new(r1: u64, r2: u64, mut orbits: Vec<Orbit2D>) -> Result<Self> {
        check_modulus(r1)?;
        check_modulus(r2)?;
        let mut seen = BTreeSet::new();
        for orbit in &orbits {
            if orbit.moduli() != (r1, r2) {
                let found = if orbit.r1 != r1 { orbit.r1 } else { orbit.r2 };
                let expected = if orbit.r1 != r1 { r1 } else { r2 };
                return Err(Error::ModulusMismatch { expected, found });
            }
            for &p in orbit.elements() {
                if !seen.insert(p) {
                    return Err(Error::OverlappingOrbits(format!("{p:?}")));
                }
            }
        }
        orbits.sort_by_key(|o| o.leader());
        Ok(DefiningSet2D { r1, r2, orbits })
    }

    /// Union of the orbits of the given pairs; repeated orbits are merged.
    pub fn from_leaders(r1: u64, r2: u64, leaders: &[Point]) -> Result<Self> {
        let mut orbits: Vec<Orbit2D> = Vec::new();
        for &(a1, a2) in leaders {
            let orbit = q_orbit(a1, a2, r1, r2)?;
            if !orbits.iter().any(|o| o.contains((a1, a2))) {
                orbits.push(orbit);
            }
        }
        Self::new(r1, r2, orbits)
    }

    /// Groups an explicit point set into orbits, failing unless it is closed
    /// under simultaneous doubling.
    pub fn from_points(r1: u64, r2: u64, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        check_modulus(r1)?;
        check_modulus(r2)?;
        let set: BTreeSet<Point> = points.into_iter().collect();
        for &p in &set {
            check_residue(p.0, r1)?;
            check_residue(p.1, r2)?;
            if !set.contains(&double(p, r1, r2)) {
                return Err(Error::NotClosed(format!("{p:?}")));
            }
        }
        let leaders: Vec<Point> = set.iter().copied().collect();
        Self::from_leaders(r1, r2, &leaders)
    }

    /// Every pair of `Z_r1 x Z_r2`: the zero code.
    pub fn full(r1: u64, r2: u64) -> Result<Self> {
        Self::from_points(r1, r2, (0..r1).flat_map(|a| (0..r2).map(move |b| (a, b))))
    }

    pub fn empty(r1: u64, r2: u64) -> Result<Self> {
        Self::new(r1, r2, Vec::new())
    }

    pub fn moduli(&self) -> (u64, u64) {
        (self.r1, self.r2)
    }

    pub fn orbits(&self) -> &[Orbit2D] {
        &self.orbits
    }

    /// Number of pairs in the set.
    pub fn len(&self) -> usize {
        self.orbits.iter().map(Orbit2D::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.orbits.iter().any(|o| o.contains(p))
    }

    pub fn points(&self) -> Vec<Point> {
        let mut pts: Vec<Point> = self
            .orbits
            .iter()
            .flat_map(|o| o.elements().iter().copied())
            .collect();
        pts.sort_unstable();
        pts
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("defining sets always serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct DefiningSetDoc {
    r1: u64,
    r2: u64,
    orbits: Vec<Vec<[u64; 2]>>,
}

impl From<DefiningSet2D> for DefiningSetDoc {
    fn from(d: DefiningSet2D) -> Self {
        DefiningSetDoc {
            r1: d.r1,
            r2: d.r2,
            orbits: d
                .orbits
                .iter()
                .map(|o| o.elements().iter().map(|&(a, b)| [a, b]).collect())
                .collect(),
        }
    }
}

impl TryFrom<DefiningSetDoc> for DefiningSet2D {
    type Error = Error;

    fn try_from(doc: DefiningSetDoc) -> Result<Self> {
        let mut orbits = Vec::with_capacity(doc.orbits.len());
        for listed in &doc.orbits {
            let first = listed
                .first()
                .ok_or_else(|| Error::NotClosed("empty orbit".into()))?;
            let orbit = q_orbit(first[0], first[1], doc.r1, doc.r2)?;
            let mut given: Vec<Point> = listed.iter().map(|p| (p[0], p[1])).collect();
            given.sort_unstable();
            given.dedup();
            if given != orbit.elements() {
                return Err(Error::NotClosed(format!("{:?}", orbit.leader())));
            }
            orbits.push(orbit);
        }
        DefiningSet2D::new(doc.r1, doc.r2, orbits)
    }
}

/// `(m(e1), m(e1, e2)) = (|C_r1(e1)|, |C_{2^m(e1), r2}(e2)|)`.
pub fn m_params(e1: u64, e2: u64, r1: u64, r2: u64) -> Result<(u64, u64)> {
    check_modulus(r1)?;
    check_modulus(r2)?;
    check_residue(e1, r1)?;
    check_residue(e2, r2)?;
    let m1 = coset_len(e1, r1, 1);
    Ok((m1, coset_len(e2, r2, m1)))
}

/// One representative per orbit of a defining set, with first coordinates
/// forming a repetition-free set of 2-cyclotomic coset representatives mod `r1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedReps {
    r1: u64,
    r2: u64,
    reps: Vec<Point>,
}

impl RestrictedReps {
    /// Validates a candidate set of representatives against its defining set.
    pub fn try_new(d: &DefiningSet2D, mut reps: Vec<Point>) -> Result<Self> {
        reps.sort_unstable();
        if reps.len() != d.orbits().len() {
            return Err(Error::InvalidRepresentatives(format!(
                "{} representatives for {} orbits",
                reps.len(),
                d.orbits().len()
            )));
        }
        for orbit in d.orbits() {
            let hits = reps.iter().filter(|&&p| orbit.contains(p)).count();
            if hits != 1 {
                return Err(Error::InvalidRepresentatives(format!(
                    "orbit of {:?} has {hits} representatives",
                    orbit.leader()
                )));
            }
        }
        let (r1, r2) = d.moduli();
        // first coordinates sharing a coset mod r1 must coincide
        let mut chosen: BTreeMap<u64, u64> = BTreeMap::new();
        for &(e1, _) in &reps {
            let leader = cyclotomic_coset(e1, r1, 1)?.leader();
            match chosen.insert(leader, e1) {
                Some(prev) if prev != e1 => {
                    return Err(Error::InvalidRepresentatives(format!(
                        "{prev} and {e1} lie in the same 2-cyclotomic coset modulo {r1}"
                    )))
                }
                _ => {}
            }
        }
        Ok(RestrictedReps { r1, r2, reps })
    }

    pub fn moduli(&self) -> (u64, u64) {
        (self.r1, self.r2)
    }

    pub fn reps(&self) -> &[Point] {
        &self.reps
    }

    /// Distinct first coordinates, ascending.
    pub fn first_coordinates(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.reps.iter().map(|p| p.0).collect();
        set.into_iter().collect()
    }

    /// `R(e1)`: second coordinates of the representatives over `e1`.
    pub fn over(&self, e1: u64) -> impl Iterator<Item = u64> + '_ {
        self.reps.iter().filter(move |p| p.0 == e1).map(|p| p.1)
    }
}

/// Restricted representatives using the minimum leader of each first-coordinate
/// coset, and inside each orbit the smallest pair with that first coordinate.
pub fn restricted_representatives(d: &DefiningSet2D) -> Result<RestrictedReps> {
    restricted_representatives_with(d, |coset| coset.leader())
}

/// Restricted representatives where `anchor` picks, for every 2-cyclotomic
/// coset modulo `r1` met by the first projection, the shared first coordinate.
pub fn restricted_representatives_with(
    d: &DefiningSet2D,
    mut anchor: impl FnMut(&Coset) -> u64,
) -> Result<RestrictedReps> {
    let (r1, _) = d.moduli();
    let mut anchors: BTreeMap<u64, u64> = BTreeMap::new();
    let mut reps = Vec::with_capacity(d.orbits().len());
    for orbit in d.orbits() {
        let coset = cyclotomic_coset(orbit.leader().0, r1, 1)?;
        let target = match anchors.get(&coset.leader()) {
            Some(&t) => t,
            None => {
                let t = anchor(&coset);
                if !coset.contains(t) {
                    return Err(Error::InvalidRepresentatives(format!(
                        "anchor {t} is outside the coset of {}",
                        coset.leader()
                    )));
                }
                anchors.insert(coset.leader(), t);
                t
            }
        };
        // the first projection of an orbit is a full coset, so a pair exists
        let rep = orbit
            .elements()
            .iter()
            .copied()
            .find(|p| p.0 == target)
            .expect("orbit projects onto the whole coset");
        reps.push(rep);
    }
    RestrictedReps::try_new(d, reps)
}

/// `M(e1) = Σ_{e2 ∈ R(e1)} m(e1, e2)`.
pub fn big_m(e1: u64, reps: &RestrictedReps) -> Result<u64> {
    let (r1, r2) = reps.moduli();
    let mut total = 0;
    let mut found = false;
    for e2 in reps.over(e1) {
        found = true;
        total += m_params(e1, e2, r1, r2)?.1;
    }
    if !found {
        return Err(Error::MissingFirstCoordinate(e1));
    }
    Ok(total)
}

/// Builds the staircase sequences from `(M, weight)` pairs, one pair per
/// first-coordinate class: `f` lists the distinct `M` values in decreasing
/// order and `g_i` sums the weights of all classes with `M >= f_i`.
pub fn staircase(weighted: &[(u64, u64)]) -> (Vec<u64>, Vec<u64>) {
    let distinct: BTreeSet<u64> = weighted.iter().map(|&(m, _)| m).collect();
    let f: Vec<u64> = distinct.into_iter().rev().collect();
    let g = f
        .iter()
        .map(|&fi| {
            weighted
                .iter()
                .filter(|&&(m, _)| m >= fi)
                .map(|&(_, w)| w)
                .sum()
        })
        .collect();
    (f, g)
}

/// The `(f, g)` sequences of a set of restricted representatives.
pub fn fg_sequences(reps: &RestrictedReps) -> Result<(Vec<u64>, Vec<u64>)> {
    let (r1, _) = reps.moduli();
    let weighted = reps
        .first_coordinates()
        .into_iter()
        .map(|e1| Ok((big_m(e1, reps)?, coset_len(e1, r1, 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(staircase(&weighted))
}

/// The staircase region
/// `{(i1, i2) : f_{j+1} <= i2 < f_j and 0 <= i1 < g_j for some j}` with
/// `f_{s+1} = 0`. Only the sequences are stored; points are produced on demand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GammaDoc", into = "GammaDoc")]
pub struct GammaRegion {
    r1: u64,
    r2: u64,
    f: Vec<u64>,
    g: Vec<u64>,
}

impl GammaRegion {
    pub fn new(r1: u64, r2: u64, f: Vec<u64>, g: Vec<u64>) -> Result<Self> {
        check_modulus(r1)?;
        check_modulus(r2)?;
        let bad = |msg: String| Err(Error::InvalidRegion(msg));
        if f.len() != g.len() {
            return bad(format!("f has {} terms but g has {}", f.len(), g.len()));
        }
        if f.windows(2).any(|w| w[0] <= w[1]) || f.last() == Some(&0) {
            return bad(format!("f = {f:?} is not strictly decreasing and positive"));
        }
        if g.windows(2).any(|w| w[0] >= w[1]) || g.first() == Some(&0) {
            return bad(format!("g = {g:?} is not strictly increasing and positive"));
        }
        if f.first().is_some_and(|&f1| f1 > r2) {
            return bad(format!("f_1 = {} exceeds r2 = {r2}", f[0]));
        }
        if g.last().is_some_and(|&gs| gs > r1) {
            return bad(format!("g_s = {} exceeds r1 = {r1}", g[g.len() - 1]));
        }
        Ok(GammaRegion { r1, r2, f, g })
    }

    /// The region of the whole-space code: no check positions.
    pub fn empty(r1: u64, r2: u64) -> Result<Self> {
        Self::new(r1, r2, Vec::new(), Vec::new())
    }

    pub fn moduli(&self) -> (u64, u64) {
        (self.r1, self.r2)
    }

    pub fn f(&self) -> &[u64] {
        &self.f
    }

    pub fn g(&self) -> &[u64] {
        &self.g
    }

    /// `Σ_j g_j (f_j - f_{j+1})`.
    pub fn len(&self) -> u64 {
        (0..self.f.len())
            .map(|j| self.g[j] * (self.f[j] - self.f.get(j + 1).copied().unwrap_or(0)))
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    pub fn contains(&self, (i1, i2): Point) -> bool {
        (0..self.f.len()).any(|j| {
            let lower = self.f.get(j + 1).copied().unwrap_or(0);
            lower <= i2 && i2 < self.f[j] && i1 < self.g[j]
        })
    }

    /// Realized points, sorted lexicographically.
    pub fn points(&self) -> Vec<Point> {
        let mut pts = Vec::with_capacity(self.len() as usize);
        for j in 0..self.f.len() {
            let lower = self.f.get(j + 1).copied().unwrap_or(0);
            for i2 in lower..self.f[j] {
                for i1 in 0..self.g[j] {
                    pts.push((i1, i2));
                }
            }
        }
        pts.sort_unstable();
        pts
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("regions always serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct GammaDoc {
    r1: u64,
    r2: u64,
    f: Vec<u64>,
    g: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<[u64; 2]>>,
}

impl From<GammaRegion> for GammaDoc {
    fn from(region: GammaRegion) -> Self {
        let points = region.points().into_iter().map(|(a, b)| [a, b]).collect();
        GammaDoc {
            r1: region.r1,
            r2: region.r2,
            f: region.f,
            g: region.g,
            points: Some(points),
        }
    }
}

impl TryFrom<GammaDoc> for GammaRegion {
    type Error = Error;

    fn try_from(doc: GammaDoc) -> Result<Self> {
        let region = GammaRegion::new(doc.r1, doc.r2, doc.f, doc.g)?;
        if let Some(points) = doc.points {
            let listed: Vec<Point> = points.iter().map(|p| (p[0], p[1])).collect();
            if listed != region.points() {
                return Err(Error::InvalidRegion(
                    "listed points disagree with the (f, g) sequences".into(),
                ));
            }
        }
        Ok(region)
    }
}

/// Γ(C) for the abelian code with defining set `d`.
pub fn gamma(d: &DefiningSet2D) -> Result<GammaRegion> {
    let (r1, r2) = d.moduli();
    if d.is_empty() {
        return GammaRegion::empty(r1, r2);
    }
    gamma_from_reps(&restricted_representatives(d)?)
}

/// Γ(C) computed from an explicit choice of restricted representatives.
pub fn gamma_from_reps(reps: &RestrictedReps) -> Result<GammaRegion> {
    let (r1, r2) = reps.moduli();
    let (f, g) = fg_sequences(reps)?;
    GammaRegion::new(r1, r2, f, g)
}
