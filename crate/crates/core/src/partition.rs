//! Partitions, dominant weights, and Young-diagram combinatorics.
//!
//! Every list-valued operation here returns its results in a fixed order:
//! first by size, then in decreasing lexicographic order of the parts. For
//! example the partitions of size at most 2 come out as `(), (1), (2), (1,1)`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers (trailing zeros are trimmed).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from a weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// The rectangle with `rows` rows of length `len`.
    pub fn rectangle(rows: usize, len: u32) -> Self {
        if len == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![len; rows],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `idx`-th part counted from 1; parts past the height read as 0.
    pub fn part(&self, idx: usize) -> u32 {
        if idx == 0 {
            return u32::MAX;
        }
        self.parts.get(idx - 1).copied().unwrap_or(0)
    }

    /// Parts as signed integers padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (0..len)
            .map(|t| i64::from(self.parts.get(t).copied().unwrap_or(0)))
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Young-diagram containment `small ⊆ self`.
    pub fn contains(&self, small: &Partition) -> bool {
        small.height() <= self.height() && small.parts.iter().zip(&self.parts).all(|(s, b)| b >= s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Size first, then decreasing lexicographic order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, p) in self.parts.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A dominant integral weight of `GL_n`: `n` weakly decreasing integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct Weight {
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    n: usize,
    entries: Vec<i64>,
}

impl TryFrom<WeightRepr> for Weight {
    type Error = Error;

    fn try_from(repr: WeightRepr) -> Result<Self> {
        if repr.n != repr.entries.len() {
            return Err(Error::invalid(format!(
                "weight declares n={} but has {} entries",
                repr.n,
                repr.entries.len()
            )));
        }
        Weight::new(repr.entries)
    }
}

impl From<Weight> for WeightRepr {
    fn from(w: Weight) -> Self {
        WeightRepr {
            n: w.entries.len(),
            entries: w.entries,
        }
    }
}

impl Weight {
    pub fn new(entries: impl Into<Vec<i64>>) -> Result<Self> {
        let entries = entries.into();
        if entries.is_empty() {
            return Err(Error::invalid("weight must have positive length"));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "weight entries must be weakly decreasing, got {entries:?}"
            )));
        }
        Ok(Self { entries })
    }

    /// Caller guarantees the entries are weakly decreasing and nonempty.
    pub(crate) fn from_sorted(entries: Vec<i64>) -> Self {
        debug_assert!(!entries.is_empty());
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        Self { entries }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_sorted(vec![0; n])
    }

    /// The partition padded with zeros to length `n`; fails if it has more than `n` rows.
    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        if p.height() > n {
            return Err(Error::invalid(format!(
                "partition {p} has height {} > {n}",
                p.height()
            )));
        }
        if n == 0 {
            return Err(Error::invalid("weight must have positive length"));
        }
        Ok(Self::from_sorted(p.padded(n)))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Splits the weight as `partition + m·(1,…,1)` with `m` the last entry.
    pub fn split_twist(&self) -> (Partition, i64) {
        let m = *self.entries.last().expect("weights are nonempty");
        let parts = self
            .entries
            .iter()
            .map(|&e| (e - m) as u32)
            .collect::<Vec<_>>();
        (
            Partition::new(parts).expect("shifted dominant weight is a partition"),
            m,
        )
    }

    /// The weight as a partition, when all entries are nonnegative.
    pub fn as_partition(&self) -> Option<Partition> {
        if self.entries.iter().any(|&e| e < 0) {
            return None;
        }
        Partition::new(self.entries.iter().map(|&e| e as u32).collect::<Vec<_>>()).ok()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, e) in self.entries.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn contains(big: &Partition, small: &Partition) -> bool {
    big.contains(small)
}

/// Partitions obtained from `p` by adding `k` boxes, no two in the same row,
/// with at most `max_rows` rows.
pub fn vertical_strips(p: &Partition, k: usize, max_rows: usize) -> Vec<Partition> {
    if p.height() > max_rows {
        return Vec::new();
    }
    let rows = max_rows.min(p.height() + k);
    let base = p.padded(rows);
    let mut out = Vec::new();
    let mut cur = base.clone();
    add_vertical(&base, 0, k, &mut cur, &mut out);
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    out
}

fn add_vertical(
    base: &[i64],
    row: usize,
    left: usize,
    cur: &mut Vec<i64>,
    out: &mut Vec<Partition>,
) {
    if left == 0 {
        let parts = cur.iter().map(|&x| x as u32).collect::<Vec<_>>();
        out.push(Partition::new(parts).expect("strip addition keeps partitions"));
        return;
    }
    if row >= base.len() || base.len() - row < left {
        return;
    }
    // Adding to this row needs the row above (already final) to stay at least as long.
    if row == 0 || cur[row - 1] > base[row] {
        cur[row] += 1;
        add_vertical(base, row + 1, left - 1, cur, out);
        cur[row] -= 1;
    }
    add_vertical(base, row + 1, left, cur, out);
}

/// Partitions obtained from `p` by adding `k` boxes, no two in the same column,
/// with at most `max_rows` rows.
pub fn horizontal_strips(p: &Partition, k: usize, max_rows: usize) -> Vec<Partition> {
    if p.height() > max_rows {
        return Vec::new();
    }
    let rows = max_rows.min(p.height() + 1);
    let base = p.padded(rows);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    add_horizontal(&base, k as i64, &mut cur, &mut out);
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    out
}

fn add_horizontal(base: &[i64], left: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
    let row = cur.len();
    if row == base.len() {
        if left == 0 {
            let parts = cur.iter().map(|&x| x as u32).collect::<Vec<_>>();
            out.push(Partition::new(parts).expect("interlacing sequence is a partition"));
        }
        return;
    }
    // Interlacing: base[row] <= new[row] <= base[row - 1].
    let hi = if row == 0 {
        base[0] + left
    } else {
        base[row - 1].min(base[row] + left)
    };
    for v in base[row]..=hi {
        cur.push(v);
        add_horizontal(base, left - (v - base[row]), cur, out);
        cur.pop();
    }
}

/// Every partition of size at most `max_size` with at most `max_rows` rows,
/// ordered by size and then decreasing lexicographically.
pub fn enumerate_partitions(max_size: u64, max_rows: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(move |n| partitions_of(n, max_rows))
}

/// Partitions of exactly `n` with at most `max_rows` rows, decreasing lexicographically.
pub fn partitions_of(n: u64, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(n as u32, n as u32, max_rows, &mut cur, &mut out);
    out
}

fn fill_partitions(
    left: u32,
    max_part: u32,
    rows: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if left == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if rows == 0 {
        return;
    }
    for part in (1..=max_part.min(left)).rev() {
        cur.push(part);
        fill_partitions(left - part, part, rows - 1, cur, out);
        cur.pop();
    }
}

/// Counts semistandard tableaux of shape `p` with entries in `1..=n` by
/// direct enumeration of fillings.
pub fn ssyt_count(p: &Partition, n: usize) -> u64 {
    if p.height() > n {
        return 0;
    }
    if p.is_empty() {
        return 1;
    }
    let cells: Vec<(usize, usize)> = p
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = p.parts().iter().map(|&len| vec![0; len as usize]).collect();
    count_fillings(&cells, 0, n, &mut grid)
}

fn count_fillings(cells: &[(usize, usize)], idx: usize, n: usize, grid: &mut [Vec<usize>]) -> u64 {
    if idx == cells.len() {
        return 1;
    }
    let (r, c) = cells[idx];
    let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    let lo = lo_row.max(lo_col);
    let mut total = 0;
    for v in lo..=n {
        grid[r][c] = v;
        total += count_fillings(cells, idx + 1, n, grid);
    }
    grid[r][c] = 0;
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn parts(list: &[&[u32]]) -> Vec<Partition> {
        list.iter().map(|v| part(v)).collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[3, 2, 2, 1]).conjugate(), part(&[4, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[5]).conjugate(), part(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(part(&[4, 3, 1, 0]), part(&[4, 3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn containment() {
        assert!(part(&[2, 2]).contains(&part(&[2, 1])));
        assert!(!part(&[3]).contains(&part(&[1, 1])));
        let lam = part(&[3, 1]);
        assert!(lam.contains(&lam));
    }

    #[test]
    fn vertical_strip_examples() {
        assert_eq!(
            vertical_strips(&part(&[2, 1]), 2, 3),
            parts(&[&[3, 2], &[3, 1, 1], &[2, 2, 1]])
        );
        assert_eq!(
            vertical_strips(&Partition::empty(), 0, 0),
            vec![Partition::empty()]
        );
        assert_eq!(vertical_strips(&part(&[1]), 1, 2), parts(&[&[2], &[1, 1]]));
    }

    #[test]
    fn horizontal_strip_examples() {
        assert_eq!(
            horizontal_strips(&part(&[1]), 1, 2),
            parts(&[&[2], &[1, 1]])
        );
        assert_eq!(horizontal_strips(&part(&[2]), 2, 1), parts(&[&[4]]));
        assert_eq!(
            horizontal_strips(&part(&[2, 1]), 2, 3),
            parts(&[&[4, 1], &[3, 2], &[3, 1, 1], &[2, 2, 1]])
        );
    }

    #[test]
    fn strips_respect_row_bound() {
        assert!(vertical_strips(&part(&[1, 1, 1]), 1, 2).is_empty());
        assert_eq!(vertical_strips(&part(&[1]), 2, 1), vec![]);
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<_> = enumerate_partitions(2, 2).collect();
        assert_eq!(got, parts(&[&[], &[1], &[2], &[1, 1]]));
        assert_eq!(
            enumerate_partitions(0, 5).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        assert_eq!(enumerate_partitions(4, 2).count(), 9);
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(ssyt_count(&part(&[1]), 3), 3);
        assert_eq!(ssyt_count(&part(&[1, 1, 1]), 2), 0);
        assert_eq!(ssyt_count(&part(&[2, 1]), 3), 8);
    }

    #[test]
    fn weight_json_shape() {
        let w = Weight::new(vec![2, 0, -1]).unwrap();
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"n":3,"entries":[2,0,-1]}"#
        );
        let p = part(&[3, 2, 2, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,2,2,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<Weight>(r#"{"n":2,"entries":[1]}"#).is_err());
    }

    #[test]
    fn split_twist_normalizes() {
        let w = Weight::new(vec![-1, -1, -4]).unwrap();
        let (p, m) = w.split_twist();
        assert_eq!(p, part(&[3, 3]));
        assert_eq!(m, -4);
    }
}
