//! Equivariant lattices: degree-stratified constituents of a module with an
//! arrow whenever one constituent generates the next under `V ⊗ W*`.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::check_dims;
use crate::cohomology::{k_l, nonvanishing_range};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partitions_of, Partition, Weight};
use crate::rep::{BiIrrep, GradedRepSum};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeNode {
    pub v: Partition,
    /// Untwisted; the lattice's `w_twist` records the power of `Λ^g W*`.
    pub w: Partition,
    #[serde(rename = "deg")]
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lattice {
    pub f: usize,
    pub g: usize,
    pub maxdeg: usize,
    pub w_twist: i64,
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<(usize, usize)>,
}

impl Lattice {
    pub fn nodes_in_degree(&self, d: i64) -> impl Iterator<Item = &LatticeNode> {
        self.nodes.iter().filter(move |n| n.degree == d)
    }

    pub fn roots(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.nodes.len()];
        for &(_, b) in &self.edges {
            has_in[b] = true;
        }
        (0..self.nodes.len()).filter(|&t| !has_in[t]).collect()
    }

    /// True when the lowest stratum is the only one with sources.
    pub fn is_graded_connected(&self) -> bool {
        let Some(low) = self.nodes.iter().map(|n| n.degree).min() else {
            return true;
        };
        self.roots()
            .into_iter()
            .all(|t| self.nodes[t].degree == low)
    }

    /// Nodes as `GL(V) × GL(W*)` irreducibles, twist folded in.
    pub fn to_graded_rep_sum(&self) -> Result<GradedRepSum> {
        let mut out = GradedRepSum::new();
        for n in &self.nodes {
            let w: Vec<i64> =
                n.w.padded(self.g)
                    .into_iter()
                    .map(|x| x + self.w_twist)
                    .collect();
            out.insert(
                BiIrrep::new(
                    Weight::from_partition(&n.v, self.f)?,
                    Weight::new(w)?,
                    n.degree,
                ),
                1,
            );
        }
        Ok(out)
    }

    /// The first `strata` degrees, one line per degree.
    pub fn render_text(&self, strata: usize) -> String {
        let mut degrees: Vec<i64> = self.nodes.iter().map(|n| n.degree).collect();
        degrees.dedup();
        let mut out = String::new();
        for d in degrees.into_iter().take(strata) {
            let cells: Vec<String> = self
                .nodes_in_degree(d)
                .map(|n| format!("S{}V⊗S{}W*", n.v, n.w))
                .collect();
            let _ = writeln!(out, "{d:>3}: {}", cells.join("  "));
        }
        if self.w_twist != 0 {
            let _ = writeln!(out, "(W*-parts twisted by (Λ^g W*)^{})", self.w_twist);
        }
        out
    }
}

fn add_box(mu: &Partition, row: usize) -> Option<Partition> {
    let mut parts = mu.parts().to_vec();
    if row == parts.len() {
        parts.push(1);
    } else {
        parts[row] += 1;
    }
    Partition::new(parts).ok()
}

/// Nodes keyed by the underlying `μ`, with an arrow whenever one key is
/// obtained from another by a single box.
fn assemble(
    f: usize,
    g: usize,
    maxdeg: usize,
    w_twist: i64,
    mut pairs: Vec<(Partition, LatticeNode)>,
) -> Lattice {
    pairs.sort_by(|(a, _), (b, _)| a.cmp(b));
    let index: HashMap<&Partition, usize> = pairs
        .iter()
        .enumerate()
        .map(|(t, (mu, _))| (mu, t))
        .collect();
    let mut edges = Vec::new();
    for (t, (mu, _)) in pairs.iter().enumerate() {
        for row in 0..=mu.height() {
            if let Some(&s) = add_box(mu, row).as_ref().and_then(|nu| index.get(nu)) {
                edges.push((t, s));
            }
        }
    }
    edges.sort_unstable();
    Lattice {
        f,
        g,
        maxdeg,
        w_twist,
        nodes: pairs.into_iter().map(|(_, n)| n).collect(),
        edges,
    }
}

fn diagonal_node(mu: &Partition) -> LatticeNode {
    LatticeNode {
        v: mu.clone(),
        w: mu.clone(),
        degree: mu.size() as i64,
    }
}

/// `I_λ = ⊕_{μ ⊇ λ} S_μV ⊗ S_μW*`.
pub fn ideal_lattice(lam: &Partition, f: usize, g: usize, maxdeg: usize) -> Result<Lattice> {
    check_dims(f, g)?;
    if lam.height() > g {
        return Err(Error::invalid(format!(
            "height of {lam} exceeds min(f,g)={g}"
        )));
    }
    let pairs = enumerate_partitions(maxdeg as u64, g)
        .filter(|mu| mu.contains(lam))
        .map(|mu| {
            let n = diagonal_node(&mu);
            (mu, n)
        })
        .collect();
    Ok(assemble(f, g, maxdeg, 0, pairs))
}

fn quotient_members(l: u32, k: usize, g: usize, maxdeg: usize) -> impl Iterator<Item = Partition> {
    let base = Partition::rectangle(k, l);
    enumerate_partitions(maxdeg as u64, g)
        .filter(move |mu| mu.contains(&base) && mu.part(k + 1) <= l)
}

/// `I_{(l)^k} / I_{(l+1)^{k+1}}`.
pub fn quotient_lattice(l: u32, k: usize, f: usize, g: usize, maxdeg: usize) -> Result<Lattice> {
    check_dims(f, g)?;
    if k > g {
        return Err(Error::invalid(format!(
            "k must be at most min(f,g)={g}, got k={k}"
        )));
    }
    let pairs = quotient_members(l, k, g, maxdeg)
        .map(|mu| {
            let n = diagonal_node(&mu);
            (mu, n)
        })
        .collect();
    Ok(assemble(f, g, maxdeg, 0, pairs))
}

/// `μ` with one box added to each of the first `k` rows.
pub fn add_to_rows(mu: &Partition, k: usize) -> Partition {
    let mut parts = mu.padded(k.max(mu.height()));
    for p in parts.iter_mut().take(k) {
        *p += 1;
    }
    Partition::new(parts.into_iter().map(|x| x as u32).collect::<Vec<_>>())
        .expect("adding a column keeps a partition")
}

/// `μ` with one box added at the bottom of each of the first `l` columns.
pub fn add_to_columns(mu: &Partition, l: usize) -> Partition {
    add_to_rows(&mu.conjugate(), l).conjugate()
}

/// Lattice of `R^q p_* O_Z(i)`, truncated at `maxdeg` in the cohomology grading.
pub fn cohomology_lattice(i: i64, q: usize, f: usize, g: usize, maxdeg: usize) -> Result<Lattice> {
    check_dims(f, g)?;
    let range = nonvanishing_range(i, g)?;
    if !range.contains(&q) {
        return Err(Error::invalid(format!(
            "q={q} is outside the nonvanishing range [{}, {}] for i={i}",
            range.start(),
            range.end()
        )));
    }
    let (k, l) = k_l(i, q, g);
    let (k, l) = (k as usize, l as usize);
    let Some(budget) = maxdeg.checked_sub(k) else {
        return Ok(assemble(f, g, maxdeg, 1, Vec::new()));
    };
    let pairs = quotient_members(l as u32, k, g, budget)
        .filter_map(|mu| {
            let w = add_to_columns(&mu, l);
            (w.height() <= g).then(|| {
                let node = LatticeNode {
                    v: add_to_rows(&mu, k),
                    w,
                    degree: (mu.size() + k as u64) as i64,
                };
                (mu, node)
            })
        })
        .collect();
    Ok(assemble(f, g, maxdeg, 1, pairs))
}

/// `(q+f-g+1)(min(-i,g)-q-1)`, clamped at 0.
pub fn projdim_lower_bound(i: i64, q: usize, f: usize, g: usize) -> Result<u64> {
    check_dims(f, g)?;
    let range = nonvanishing_range(i, g)?;
    if !range.contains(&q) {
        return Err(Error::invalid(format!(
            "q={q} is outside the nonvanishing range [{}, {}] for i={i}",
            range.start(),
            range.end()
        )));
    }
    let (q, f, g) = (q as i64, f as i64, g as i64);
    Ok(((q + f - g + 1) * ((-i).min(g) - q - 1)).max(0) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessRegion {
    /// `height μ ≤ k`, `μ̃_1 ≤ l`, `μ_1 ≤ g-1-k`.
    First,
    /// `μ_1 ≤ l+1`, `μ_1 ≤ k+1`, `height μ ≤ f-k`.
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjdimWitness {
    pub partition: Partition,
    pub region: WitnessRegion,
}

fn in_first(mu: &Partition, k: i64, l: i64, g: usize) -> bool {
    let (h, w) = (mu.height() as i64, i64::from(mu.part(1)));
    h <= k && h <= l && w <= g as i64 - 1 - k
}

fn in_second(mu: &Partition, k: i64, l: i64, f: usize) -> bool {
    let (h, w) = (mu.height() as i64, i64::from(mu.part(1)));
    w <= l + 1 && w <= k + 1 && h <= f as i64 - k
}

pub fn witness_region(
    mu: &Partition,
    i: i64,
    q: usize,
    f: usize,
    g: usize,
) -> Option<WitnessRegion> {
    let (k, l) = k_l(i, q, g);
    if in_first(mu, k, l, g) {
        Some(WitnessRegion::First)
    } else if in_second(mu, k, l, f) {
        Some(WitnessRegion::Second)
    } else {
        None
    }
}

/// First partition of `j` in increasing lexicographic order lying in either
/// region, preferring the first region.
pub fn projdim_witness(
    j: u64,
    i: i64,
    q: usize,
    f: usize,
    g: usize,
) -> Result<Option<ProjdimWitness>> {
    check_dims(f, g)?;
    nonvanishing_range(i, g)?;
    let (k, l) = k_l(i, q, g);
    let max_rows = k.max(f as i64 - k).max(0) as usize;
    let mut candidates = partitions_of(j, max_rows);
    candidates.reverse();
    let found = candidates
        .iter()
        .find(|mu| in_first(mu, k, l, g))
        .map(|mu| (mu, WitnessRegion::First))
        .or_else(|| {
            candidates
                .iter()
                .find(|mu| in_second(mu, k, l, f))
                .map(|mu| (mu, WitnessRegion::Second))
        });
    Ok(found.map(|(mu, region)| ProjdimWitness {
        partition: mu.clone(),
        region,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn layer(lat: &Lattice, d: i64) -> Vec<Partition> {
        lat.nodes_in_degree(d).map(|n| n.v.clone()).collect()
    }

    #[test]
    fn ideal_examples() {
        let lat = ideal_lattice(&part(&[2, 2]), 4, 3, 6).unwrap();
        assert_eq!(layer(&lat, 5), vec![part(&[3, 2]), part(&[2, 2, 1])]);
        let r = ideal_lattice(&Partition::empty(), 3, 3, 4).unwrap();
        assert_eq!(r.roots(), vec![0]);
        assert!(r.nodes[0].v.is_empty());
        let lat = ideal_lattice(&part(&[1]), 2, 2, 3).unwrap();
        assert_eq!(layer(&lat, 3), vec![part(&[3]), part(&[2, 1])]);
        assert!(lat.is_graded_connected());
    }

    #[test]
    fn quotient_examples() {
        let lat = quotient_lattice(1, 1, 4, 4, 3).unwrap();
        assert_eq!(layer(&lat, 1), vec![part(&[1])]);
        assert_eq!(layer(&lat, 2), vec![part(&[2]), part(&[1, 1])]);
        assert_eq!(
            layer(&lat, 3),
            vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]
        );
        assert!(!quotient_lattice(1, 1, 4, 4, 4)
            .unwrap()
            .nodes
            .iter()
            .any(|n| n.v == part(&[2, 2])));
        let lat = quotient_lattice(0, 0, 4, 4, 5).unwrap();
        assert_eq!(lat.nodes.len(), 1);
        let lat = quotient_lattice(3, 2, 5, 4, 9).unwrap();
        assert_eq!(lat.nodes[0].v, Partition::rectangle(2, 3));
        assert_eq!(lat.nodes[0].degree, 6);
    }

    #[test]
    fn cohomology_base_is_rho() {
        let lat = cohomology_lattice(-2, 0, 2, 2, 6).unwrap();
        assert_eq!(lat.nodes[0].v, part(&[2]));
        assert_eq!(lat.nodes[0].w, part(&[1, 1]));
        assert_eq!(lat.nodes[0].degree, 2);
        assert_eq!(
            lat.to_graded_rep_sum().unwrap().dim_in_degree(2),
            3u32.into()
        );
    }

    #[test]
    fn column_and_row_boxes() {
        assert_eq!(add_to_rows(&part(&[2]), 2), part(&[3, 1]));
        assert_eq!(add_to_columns(&part(&[2, 2]), 3), part(&[3, 2, 2]));
        assert_eq!(add_to_columns(&part(&[3, 1]), 2), part(&[3, 2, 1]));
    }

    #[test]
    fn projdim_examples() {
        assert_eq!(projdim_lower_bound(-2, 0, 12, 6).unwrap(), 7);
        assert_eq!(projdim_lower_bound(-2, 1, 12, 6).unwrap(), 0);
        assert_eq!(projdim_lower_bound(-6, 0, 12, 6).unwrap(), 35);
        for g in 1..6 {
            assert_eq!(
                projdim_lower_bound(-(g as i64), 0, g, g).unwrap(),
                g as u64 - 1
            );
        }
        let w = projdim_witness(7, -2, 0, 12, 6).unwrap().unwrap();
        assert_eq!(w.partition, part(&[1; 7]));
        assert_eq!(w.region, WitnessRegion::Second);
        assert_eq!(
            projdim_witness(0, -3, 1, 5, 4).unwrap().unwrap().partition,
            Partition::empty()
        );
        assert!(projdim_witness(100, -2, 0, 12, 6).unwrap().is_none());
    }
}
