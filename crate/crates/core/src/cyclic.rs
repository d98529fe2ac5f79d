//! Cyclic codes of odd length `n = r1·r2` seen as two-dimensional abelian codes
//! through an isomorphism `T: Z_n -> Z_r1 x Z_r2`.
//!
//! Γ is computed here from one-dimensional coset sizes only: suitable
//! representatives are grouped into classes modulo `r1`, each class `O(u)`
//! contributes `M(u) = Σ_{v ∈ O(u)} |C_n(v)| / |C_r1(u)|`, and the staircase
//! follows as in the abelian engine.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::abelian::{q_orbit, staircase, DefiningSet2D, GammaRegion, Orbit2D};
use crate::error::{Error, Result};
use crate::modular::{check_modulus, check_residue, coset_len, cyclotomic_coset, Coset, GroupIso};

/// Defining set of a cyclic code: a disjoint union of 2-cyclotomic cosets mod `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDefiningSet {
    n: u64,
    cosets: Vec<Coset>,
}

impl CyclicDefiningSet {
    /// Union of the cosets of the given residues; repeated cosets are merged.
    pub fn from_leaders(n: u64, leaders: &[u64]) -> Result<Self> {
        check_modulus(n)?;
        let mut cosets: Vec<Coset> = Vec::new();
        for &e in leaders {
            if !cosets.iter().any(|c| c.contains(e)) {
                cosets.push(cyclotomic_coset(e, n, 1)?);
            }
        }
        cosets.sort_by_key(Coset::leader);
        Ok(CyclicDefiningSet { n, cosets })
    }

    /// Groups an explicit residue set into cosets, failing unless it is
    /// closed under doubling.
    pub fn from_elements(n: u64, elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_modulus(n)?;
        let set: BTreeSet<u64> = elements.into_iter().collect();
        for &e in &set {
            check_residue(e, n)?;
            if !set.contains(&(e * 2 % n)) {
                return Err(Error::NotClosed(e.to_string()));
            }
        }
        let leaders: Vec<u64> = set.into_iter().collect();
        Self::from_leaders(n, &leaders)
    }

    pub fn empty(n: u64) -> Result<Self> {
        Self::from_leaders(n, &[])
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.iter().map(Coset::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn contains(&self, e: u64) -> bool {
        self.cosets.iter().any(|c| c.contains(e))
    }

    pub fn coset_of(&self, e: u64) -> Option<&Coset> {
        self.cosets.iter().find(|c| c.contains(e))
    }

    pub fn elements(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self
            .cosets
            .iter()
            .flat_map(|c| c.elements().iter().copied())
            .collect();
        all.sort_unstable();
        all
    }
}

fn check_iso(d: &CyclicDefiningSet, t: &GroupIso) -> Result<()> {
    if d.n() != t.n() {
        return Err(Error::ModulusMismatch {
            expected: d.n(),
            found: t.n(),
        });
    }
    Ok(())
}

/// `T(D*)`: every coset `C_n(e)` maps onto the 2-orbit `Q(T(e))`.
pub fn lift(d: &CyclicDefiningSet, t: &GroupIso) -> Result<DefiningSet2D> {
    check_iso(d, t)?;
    let (r1, r2) = (t.r1(), t.r2());
    let orbits = d
        .cosets()
        .iter()
        .map(|c| {
            let (a1, a2) = t.apply(c.leader());
            let orbit = q_orbit(a1, a2, r1, r2)?;
            let mut image: Vec<_> = c.elements().iter().map(|&e| t.apply(e)).collect();
            image.sort_unstable();
            if image != orbit.elements() {
                return Err(Error::NotClosed(format!(
                    "image of C_{}({})",
                    d.n(),
                    c.leader()
                )));
            }
            Ok(orbit)
        })
        .collect::<Result<Vec<Orbit2D>>>()?;
    DefiningSet2D::new(r1, r2, orbits)
}

/// One representative per coset of `D*` whose images under `T` form a set of
/// restricted representatives of `T(D*)`. Sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuitableReps {
    iso: GroupIso,
    reps: Vec<u64>,
}

impl SuitableReps {
    pub fn try_new(d: &CyclicDefiningSet, iso: &GroupIso, mut reps: Vec<u64>) -> Result<Self> {
        check_iso(d, iso)?;
        reps.sort_unstable();
        if reps.len() != d.cosets().len() {
            return Err(Error::InvalidRepresentatives(format!(
                "{} representatives for {} cosets",
                reps.len(),
                d.cosets().len()
            )));
        }
        for c in d.cosets() {
            let hits = reps.iter().filter(|&&e| c.contains(e)).count();
            if hits != 1 {
                return Err(Error::InvalidRepresentatives(format!(
                    "coset of {} has {hits} representatives",
                    c.leader()
                )));
            }
        }
        let r1 = iso.r1();
        let mut chosen: BTreeMap<u64, u64> = BTreeMap::new();
        for &e in &reps {
            let first = iso.first(e);
            let leader = cyclotomic_coset(first, r1, 1)?.leader();
            match chosen.insert(leader, first) {
                Some(prev) if prev != first => {
                    return Err(Error::InvalidRepresentatives(format!(
                    "first coordinates {prev} and {first} share a 2-cyclotomic coset modulo {r1}"
                )))
                }
                _ => {}
            }
        }
        Ok(SuitableReps { iso: *iso, reps })
    }

    pub fn iso(&self) -> &GroupIso {
        &self.iso
    }

    pub fn reps(&self) -> &[u64] {
        &self.reps
    }

    pub fn n(&self) -> u64 {
        self.iso.n()
    }
}

/// Suitable representatives with first coordinates anchored at the minimum
/// leader of each coset modulo `r1`, taking the smallest qualifying residue.
pub fn suitable_representatives(d: &CyclicDefiningSet, t: &GroupIso) -> Result<SuitableReps> {
    suitable_representatives_preferring(d, t, &[])
}

/// Like [`suitable_representatives`], but each residue of `preferred` (in order)
/// becomes the representative of its coset whenever that is still compatible
/// with the choices already made. Residues outside `D*` are ignored.
pub fn suitable_representatives_preferring(
    d: &CyclicDefiningSet,
    t: &GroupIso,
    preferred: &[u64],
) -> Result<SuitableReps> {
    check_iso(d, t)?;
    let r1 = t.r1();
    let mut anchors: BTreeMap<u64, u64> = BTreeMap::new();
    let mut reps: BTreeMap<u64, u64> = BTreeMap::new();

    for &p in preferred {
        let Some(coset) = d.coset_of(p) else { continue };
        if reps.contains_key(&coset.leader()) {
            continue;
        }
        let first = t.first(p);
        let key = cyclotomic_coset(first, r1, 1)?.leader();
        let anchor = *anchors.entry(key).or_insert(first);
        if anchor == first {
            reps.insert(coset.leader(), p);
        }
    }

    for coset in d.cosets() {
        if reps.contains_key(&coset.leader()) {
            continue;
        }
        let r1_coset = cyclotomic_coset(t.first(coset.leader()), r1, 1)?;
        let anchor = *anchors
            .entry(r1_coset.leader())
            .or_insert(r1_coset.leader());
        // T1 maps C_n(e) onto the whole coset of T1(e), so the anchor is hit
        let rep = coset
            .elements()
            .iter()
            .copied()
            .find(|&e| t.first(e) == anchor)
            .expect("first projection of a coset is a full coset");
        reps.insert(coset.leader(), rep);
    }

    SuitableReps::try_new(d, t, reps.into_values().collect())
}

/// A class `O(u)` of suitable representatives congruent modulo `r1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UClass {
    pub u: u64,
    pub members: Vec<u64>,
}

/// Partition of the representatives by residue modulo `r1`, with the smallest
/// member of each class as `u`. Classes are ordered by `u`.
pub fn u_classes(reps: &SuitableReps) -> Vec<UClass> {
    u_classes_preferring(reps, &[])
}

/// Like [`u_classes`], but the first residue of `preferred` found in a class
/// (in list order) is taken as that class's `u`.
pub fn u_classes_preferring(reps: &SuitableReps, preferred: &[u64]) -> Vec<UClass> {
    let r1 = reps.iso().r1();
    let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &e in reps.reps() {
        groups.entry(e % r1).or_default().push(e);
    }
    let mut classes: Vec<UClass> = groups
        .into_values()
        .map(|members| {
            let u = preferred
                .iter()
                .copied()
                .find(|p| members.contains(p))
                .unwrap_or(members[0]);
            UClass { u, members }
        })
        .collect();
    classes.sort_by_key(|c| c.u);
    classes
}

/// `M(u) = Σ_{v ∈ O(u)} |C_n(v)| / |C_r1(u)|`.
pub fn m_of_u(u: u64, reps: &SuitableReps) -> Result<u64> {
    let (n, r1) = (reps.n(), reps.iso().r1());
    if !reps.reps().contains(&u) {
        return Err(Error::InvalidRepresentatives(format!(
            "{u} is not one of the suitable representatives"
        )));
    }
    let numerator: u64 = reps
        .reps()
        .iter()
        .filter(|&&v| v % r1 == u % r1)
        .map(|&v| coset_len(v, n, 1))
        .sum();
    let denominator = coset_len(u % r1, r1, 1);
    if numerator % denominator != 0 {
        return Err(Error::InexactDivision {
            u,
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

/// Γ from suitable representatives, via `M(u)` and `|C_r1(u)|` only.
pub fn gamma_from_suitable(reps: &SuitableReps) -> Result<GammaRegion> {
    let r1 = reps.iso().r1();
    let weighted = u_classes(reps)
        .iter()
        .map(|class| Ok((m_of_u(class.u, reps)?, coset_len(class.u % r1, r1, 1))))
        .collect::<Result<Vec<_>>>()?;
    let (f, g) = staircase(&weighted);
    GammaRegion::new(r1, reps.iso().r2(), f, g)
}

/// `T⁻¹` of the points of a region, sorted ascending.
pub fn pullback(region: &GammaRegion, t: &GroupIso) -> Vec<u64> {
    let mut out: Vec<u64> = region.points().into_iter().map(|p| t.invert(p)).collect();
    out.sort_unstable();
    out
}

/// Γ for the cyclic code with defining set `D*` together with its pullback
/// `T⁻¹(Γ) ⊆ Z_n`.
pub fn gamma_from_cyclic(d: &CyclicDefiningSet, t: &GroupIso) -> Result<(GammaRegion, Vec<u64>)> {
    check_iso(d, t)?;
    let region = if d.is_empty() {
        GammaRegion::empty(t.r1(), t.r2())?
    } else {
        gamma_from_suitable(&suitable_representatives(d, t)?)?
    };
    let back = pullback(&region, t);
    Ok((region, back))
}

/// Serializable summary of a cyclic computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicReport {
    pub n: u64,
    pub r1: u64,
    pub r2: u64,
    pub iso: [u64; 2],
    pub f: Vec<u64>,
    pub g: Vec<u64>,
    pub check_positions: Vec<u64>,
}

impl CyclicReport {
    pub fn compute(d: &CyclicDefiningSet, t: &GroupIso) -> Result<Self> {
        let (region, check_positions) = gamma_from_cyclic(d, t)?;
        let (d1, d2) = t.delta();
        Ok(CyclicReport {
            n: t.n(),
            r1: t.r1(),
            r2: t.r2(),
            iso: [d1, d2],
            f: region.f().to_vec(),
            g: region.g().to_vec(),
            check_positions,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}
