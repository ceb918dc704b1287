//! Irreducible representations of `GL(V)`, `GL(W*)` and `H = GL(V) × GL(W*)`,
//! and multiplicity-level tensor decompositions (Pieri, Cauchy).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{
    enumerate_partitions, horizontal_strips, partitions_of, vertical_strips, Partition, Weight,
};

/// Weyl dimension of the `GL_n` irreducible with highest weight `w`.
pub fn dim_weight(w: &Weight, n: usize) -> Result<BigUint> {
    if w.len() != n {
        return Err(Error::invalid(format!(
            "weight {w} has length {} but the group rank is {n}",
            w.len()
        )));
    }
    Ok(weyl_dimension(w))
}

pub(crate) fn weyl_dimension(w: &Weight) -> BigUint {
    let e = w.entries();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            num *= BigUint::from((e[a] - e[b] + (b - a) as i64) as u64);
            den *= BigUint::from((b - a) as u64);
        }
    }
    num / den
}

/// `S_w(U*) ≅ S_{(-w_n, …, -w_1)} U`.
pub fn dual_weight(w: &Weight) -> Weight {
    Weight::from_sorted(w.entries().iter().rev().map(|&e| -e).collect())
}

/// Tensoring with the `m`-th power of the determinant.
pub fn det_twist(w: &Weight, m: i64) -> Weight {
    Weight::from_sorted(w.entries().iter().map(|&e| e + m).collect())
}

/// An irreducible `S_v V ⊗ S_w W*` placed in internal degree `degree`.
///
/// `w` is a `GL(W*)`-weight with determinant twists folded in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiIrrep {
    pub degree: i64,
    pub v: Weight,
    pub w: Weight,
}

impl BiIrrep {
    pub fn new(v: Weight, w: Weight, degree: i64) -> Self {
        Self { degree, v, w }
    }

    pub fn dim(&self) -> BigUint {
        weyl_dimension(&self.v) * weyl_dimension(&self.w)
    }
}

pub trait Dimension {
    fn dimension(&self) -> BigUint;
}

impl Dimension for Weight {
    fn dimension(&self) -> BigUint {
        weyl_dimension(self)
    }
}

impl Dimension for BiIrrep {
    fn dimension(&self) -> BigUint {
        self.dim()
    }
}

/// A finite direct sum of irreducibles with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSum<K: Ord> {
    terms: BTreeMap<K, u64>,
}

impl<K: Ord> Default for RepSum<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> RepSum<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: K, mult: u64) {
        if mult > 0 {
            *self.terms.entry(key).or_insert(0) += mult;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn multiplicity(&self, key: &K) -> u64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m == 1)
    }
}

impl<K: Ord + Clone + Dimension> RepSum<K> {
    pub fn total_dim(&self) -> BigUint {
        self.terms.iter().fold(BigUint::zero(), |acc, (k, &m)| {
            acc + k.dimension() * BigUint::from(m)
        })
    }
}

impl<K: Ord + Clone> FromIterator<(K, u64)> for RepSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        let mut sum = RepSum::new();
        for (k, m) in iter {
            sum.insert(k, m);
        }
        sum
    }
}

#[derive(Serialize, Deserialize)]
struct BiEntry {
    v: Vec<i64>,
    w: Vec<i64>,
    mult: u64,
    deg: i64,
}

#[derive(Serialize, Deserialize)]
struct WeightEntry {
    w: Vec<i64>,
    mult: u64,
}

fn entry_of(b: &BiIrrep, mult: u64) -> BiEntry {
    BiEntry {
        v: b.v.entries().to_vec(),
        w: b.w.entries().to_vec(),
        mult,
        deg: b.degree,
    }
}

fn irrep_of<E: serde::de::Error>(e: BiEntry) -> Result<(BiIrrep, u64), E> {
    if e.mult == 0 {
        return Err(E::custom("multiplicities must be positive"));
    }
    let v = Weight::new(e.v).map_err(E::custom)?;
    let w = Weight::new(e.w).map_err(E::custom)?;
    Ok((BiIrrep::new(v, w, e.deg), e.mult))
}

impl Serialize for RepSum<BiIrrep> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(b, m)| entry_of(b, m)))
    }
}

impl<'de> Deserialize<'de> for RepSum<BiIrrep> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<BiEntry>::deserialize(deserializer)?;
        raw.into_iter().map(irrep_of::<D::Error>).collect()
    }
}

impl Serialize for RepSum<Weight> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(w, mult)| WeightEntry {
            w: w.entries().to_vec(),
            mult,
        }))
    }
}

impl<'de> Deserialize<'de> for RepSum<Weight> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<WeightEntry>::deserialize(deserializer)?;
        raw.into_iter()
            .map(|e| {
                if e.mult == 0 {
                    return Err(serde::de::Error::custom("multiplicities must be positive"));
                }
                Ok((Weight::new(e.w).map_err(serde::de::Error::custom)?, e.mult))
            })
            .collect()
    }
}

/// Sums of `BiIrrep`s grouped by internal degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedRepSum {
    by_degree: BTreeMap<i64, RepSum<BiIrrep>>,
}

impl GradedRepSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Files the irreducible under its own degree.
    pub fn insert(&mut self, irrep: BiIrrep, mult: u64) {
        if mult == 0 {
            return;
        }
        self.by_degree
            .entry(irrep.degree)
            .or_default()
            .insert(irrep, mult);
    }

    pub fn degree(&self, d: i64) -> Option<&RepSum<BiIrrep>> {
        self.by_degree.get(&d)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (i64, &RepSum<BiIrrep>)> {
        self.by_degree.iter().map(|(&d, s)| (d, s))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BiIrrep, u64)> {
        self.by_degree.values().flat_map(|s| s.iter())
    }

    pub fn lowest_degree(&self) -> Option<i64> {
        self.by_degree.keys().next().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.by_degree.is_empty()
    }

    pub fn len(&self) -> usize {
        self.by_degree.values().map(RepSum::len).sum()
    }

    pub fn dim_in_degree(&self, d: i64) -> BigUint {
        self.degree(d).map(RepSum::total_dim).unwrap_or_default()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.by_degree.values().all(RepSum::is_multiplicity_free)
    }
}

impl Serialize for GradedRepSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(b, m)| entry_of(b, m)))
    }
}

impl<'de> Deserialize<'de> for GradedRepSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<BiEntry>::deserialize(deserializer)?;
        let mut out = GradedRepSum::new();
        for e in raw {
            let (b, m) = irrep_of::<D::Error>(e)?;
            out.insert(b, m);
        }
        Ok(out)
    }
}

/// `S_p U ⊗ Sym_k U` for `dim U = n`.
pub fn pieri_sym(p: &Partition, k: usize, n: usize) -> Result<RepSum<Weight>> {
    if p.height() > n {
        return Err(Error::invalid(format!("height of {p} exceeds rank n={n}")));
    }
    horizontal_strips(p, k, n)
        .iter()
        .map(|eta| Ok((Weight::from_partition(eta, n)?, 1)))
        .collect()
}

/// `S_p U ⊗ Λ^k U` for `dim U = n`.
pub fn pieri_ext(p: &Partition, k: usize, n: usize) -> Result<RepSum<Weight>> {
    if p.height() > n {
        return Err(Error::invalid(format!("height of {p} exceeds rank n={n}")));
    }
    if k > n {
        return Err(Error::invalid(format!(
            "exterior degree k={k} exceeds rank n={n}"
        )));
    }
    vertical_strips(p, k, n)
        .iter()
        .map(|eta| Ok((Weight::from_partition(eta, n)?, 1)))
        .collect()
}

/// `Sym_d(V ⊗ W*) ≅ ⊕_{|λ|=d} S_λV ⊗ S_λW*`.
pub fn cauchy_sym(d: u64, f: usize, g: usize) -> Result<RepSum<BiIrrep>> {
    if f == 0 || g == 0 {
        return Err(Error::invalid("f and g must be positive"));
    }
    partitions_of(d, f.min(g))
        .iter()
        .map(|lam| {
            let irrep = BiIrrep::new(
                Weight::from_partition(lam, f)?,
                Weight::from_partition(lam, g)?,
                d as i64,
            );
            Ok((irrep, 1))
        })
        .collect()
}

/// `Λ^j(V ⊗ W*) ≅ ⊕_{|μ|=j} S_μV ⊗ S_μ'W*` with `μ'` the conjugate.
pub fn cauchy_ext(j: u64, f: usize, g: usize) -> Result<RepSum<BiIrrep>> {
    if f == 0 || g == 0 {
        return Err(Error::invalid("f and g must be positive"));
    }
    if j > (f * g) as u64 {
        return Err(Error::invalid(format!("j={j} exceeds f·g={}", f * g)));
    }
    partitions_of(j, f)
        .iter()
        .filter(|mu| mu.conjugate().height() <= g)
        .map(|mu| {
            let irrep = BiIrrep::new(
                Weight::from_partition(mu, f)?,
                Weight::from_partition(&mu.conjugate(), g)?,
                j as i64,
            );
            Ok((irrep, 1))
        })
        .collect()
}

/// The coordinate ring `R = Sym(V ⊗ W*)` up to degree `maxdeg`.
pub fn coordinate_ring(f: usize, g: usize, maxdeg: u64) -> Result<GradedRepSum> {
    let mut out = GradedRepSum::new();
    for lam in enumerate_partitions(maxdeg, f.min(g)) {
        let irrep = BiIrrep::new(
            Weight::from_partition(&lam, f)?,
            Weight::from_partition(&lam, g)?,
            lam.size() as i64,
        );
        out.insert(irrep, 1);
    }
    Ok(out)
}
