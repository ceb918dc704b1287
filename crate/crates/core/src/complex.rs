//! Term-level descriptions of the complexes `K•(i)`, `C•(i)`, the spliced
//! family `D•(i)` and the two-parameter family `D•(i,k)`.
//!
//! Every term is a free `R`-module `R ⊗ (S_v V ⊗ S_w W*)` generated in degree
//! `-p`, where `p ≤ 0` is its native cohomological position. Besides its
//! position a term records its `row`: the index `q` of the page-1 row of the
//! pushforward spectral sequence it comes from (0 for `K`, `g-1` for `C`,
//! `k` for the middle term of `D•(i,k)`). The diagonal `p + row` is the
//! cohomological degree of `R^• p_*` the term contributes to.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bbw::bbw;
use crate::error::{Error, Result};
use crate::partition::{Partition, Weight};
use crate::rep::{dual_weight, weyl_dimension};
use crate::series::Series;
use crate::{binomial, check_dims};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Part {
    K,
    C,
    #[serde(rename = "MID")]
    Mid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexTerm {
    #[serde(rename = "pos")]
    pub position: i64,
    /// Position in the contiguous grading of the spliced complex.
    #[serde(rename = "norm_pos")]
    pub normalized: i64,
    pub part: Part,
    pub row: usize,
    #[serde(with = "crate::bigint_string")]
    pub rank: BigUint,
    #[serde(rename = "gen_deg")]
    pub generator_degree: i64,
    /// `GL(V)`-weight of the generators, length `f`.
    #[serde(with = "weight_entries")]
    pub v: Weight,
    /// `GL(W*)`-weight of the generators, length `g`, determinant twists folded in.
    #[serde(with = "weight_entries")]
    pub w: Weight,
}

impl ComplexTerm {
    /// Diagonal `p + q` of the superimposed spectral-sequence picture.
    pub fn diagonal(&self) -> i64 {
        self.position + self.row as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splice {
    pub from: i64,
    pub to: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDescription {
    pub i: i64,
    pub f: usize,
    pub g: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub terms: Vec<ComplexTerm>,
    pub splice: Option<Splice>,
}

impl ComplexDescription {
    pub fn ranks(&self) -> Vec<BigUint> {
        self.terms.iter().map(|t| t.rank.clone()).collect()
    }

    pub fn positions(&self) -> Vec<i64> {
        self.terms.iter().map(|t| t.position).collect()
    }

    pub fn generator_degrees(&self) -> Vec<i64> {
        self.terms.iter().map(|t| t.generator_degree).collect()
    }

    pub fn terms_of(&self, part: Part) -> impl Iterator<Item = &ComplexTerm> {
        self.terms.iter().filter(move |t| t.part == part)
    }

    /// Closed support interval `[lo, hi]` of one part, if that part is nonempty.
    pub fn support(&self, part: Part) -> Option<(i64, i64)> {
        let mut it = self.terms_of(part).map(|t| t.position);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), p| (lo.min(p), hi.max(p))))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

mod weight_entries {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::partition::Weight;

    pub fn serialize<S: Serializer>(w: &Weight, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(w.entries())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Weight, D::Error> {
        Weight::new(Vec::<i64>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

fn exterior_v(f: usize, p: i64) -> Weight {
    let boxes = (-p) as usize;
    Weight::from_sorted((0..f).map(|t| i64::from(t < boxes)).collect())
}

/// `Sym_m W` viewed as a `GL(W*)`-representation.
fn sym_w(g: usize, m: i64) -> Weight {
    let mut e = vec![0; g];
    e[g - 1] = -m;
    Weight::from_sorted(e)
}

/// `Sym_m W* ⊗ Λ^g W*` as a `GL(W*)`-weight.
fn sym_dual_twisted(g: usize, m: i64) -> Weight {
    let mut e = vec![1; g];
    e[0] = m + 1;
    Weight::from_sorted(e)
}

fn k_term(i: i64, f: usize, g: usize, p: i64) -> ComplexTerm {
    let m = i + p;
    ComplexTerm {
        position: p,
        normalized: p,
        part: Part::K,
        row: 0,
        rank: binomial(f as i64, -p) * binomial(g as i64 - 1 + m, m),
        generator_degree: -p,
        v: exterior_v(f, p),
        w: sym_w(g, m),
    }
}

fn c_term(i: i64, f: usize, g: usize, p: i64) -> ComplexTerm {
    let m = -i - p;
    ComplexTerm {
        position: p,
        normalized: p,
        part: Part::C,
        row: g - 1,
        rank: binomial(f as i64, -p) * binomial(g as i64 - 1 + m, m),
        generator_degree: -p,
        v: exterior_v(f, p),
        w: sym_dual_twisted(g, m),
    }
}

/// `K•(i)`: `Λ^{-p}F ⊗ Sym_{i+p}G` on `[max(-i,-f), 0]`.
pub fn build_k(i: i64, f: usize, g: usize) -> Result<ComplexDescription> {
    check_dims(f, g)?;
    let lo = (-i).max(-(f as i64));
    Ok(ComplexDescription {
        i,
        f,
        g,
        k: None,
        terms: (lo..=0).map(|p| k_term(i, f, g, p)).collect(),
        splice: None,
    })
}

/// `C•(i)`: `Λ^{-p}F ⊗ Sym*_{-i-p}G ⊗ Λ^gG*` on `[-f, min(0,-i)]`.
pub fn build_c(i: i64, f: usize, g: usize) -> Result<ComplexDescription> {
    check_dims(f, g)?;
    let hi = (-i).min(0);
    Ok(ComplexDescription {
        i,
        f,
        g,
        k: None,
        terms: (-(f as i64)..=hi).map(|p| c_term(i, f, g, p)).collect(),
        splice: None,
    })
}

/// Whether `D•(i)` splices a nonempty `C•(i+g)` onto a nonempty `K•(i)`.
pub fn is_spliced(i: i64, f: usize, g: usize) -> bool {
    0 <= i && i <= f as i64 - g as i64
}

/// `D•(i) = C•(i+g) →θ K•(i)`.
///
/// Terms keep their native positions. When both parts are present the `K`
/// terms are renumbered in `normalized` by `-(g-1)` so that the spliced
/// complex is contiguous with its leftmost term at `-f`.
pub fn build_d(i: i64, f: usize, g: usize) -> Result<ComplexDescription> {
    check_dims(f, g)?;
    if i <= -1 {
        let mut c = build_c(i + g as i64, f, g)?;
        c.i = i;
        return Ok(c);
    }
    if i > f as i64 - g as i64 {
        return build_k(i, f, g);
    }
    let c = build_c(i + g as i64, f, g)?;
    let k = build_k(i, f, g)?;
    let shift = g as i64 - 1;
    let terms = c
        .terms
        .into_iter()
        .chain(k.terms.into_iter().map(|mut t| {
            t.normalized = t.position - shift;
            t
        }))
        .collect();
    Ok(ComplexDescription {
        i,
        f,
        g,
        k: None,
        terms,
        splice: Some(Splice {
            from: -i - g as i64,
            to: -i,
        }),
    })
}

/// Page-1 data of `D•(i,k)`, computing `R^• (pι)_* (πι)^* Λ^kΩ(i)`.
///
/// With `d = i - k` the nonzero page-1 terms are
/// `Λ^{-p}F ⊗ S_{(d+p,1^k,0,…)}W` at `q = 0` for `p ≥ -d+1`,
/// `Λ^{k+d}F` at `(p,q) = (-k-d, k)`, and
/// `Λ^{-p}F ⊗ S_{(-d-p-g+1,1,…,1,0^k)}W*` at `q = g-1` for `p ≤ -d-g`,
/// clipped to `-f ≤ p ≤ 0`. For `k = 0` the middle term belongs to the `K` strip.
pub fn build_d_ik(i: i64, k: usize, f: usize, g: usize) -> Result<ComplexDescription> {
    check_dims(f, g)?;
    if k > g - 1 {
        return Err(Error::invalid(format!(
            "k must lie in [0, g-1]=[0, {}], got k={k}",
            g - 1
        )));
    }
    let d = i - k as i64;
    let g_i = g as i64;
    let mut terms = Vec::new();
    for p in -(f as i64)..=0 {
        let (part, row, w_star) = if p > -d {
            let mut e = vec![0i64; g];
            e[0] = d + p;
            for slot in e.iter_mut().skip(1).take(k) {
                *slot = 1;
            }
            (Part::K, 0, dual_weight(&Weight::from_sorted(e)))
        } else if p == -(k as i64) - d {
            let part = if k == 0 { Part::K } else { Part::Mid };
            (part, k, Weight::zero(g))
        } else if p <= -d - g_i {
            let mut e = vec![0i64; g];
            e[0] = -d - p - g_i + 1;
            for slot in e.iter_mut().take(g - k).skip(1) {
                *slot = 1;
            }
            (Part::C, g - 1, Weight::from_sorted(e))
        } else {
            continue;
        };
        cross_check_page_one(d + p, k, g, row, &w_star)?;
        terms.push(ComplexTerm {
            position: p,
            normalized: p,
            part,
            row,
            rank: binomial(f as i64, -p) * weyl_dimension(&w_star),
            generator_degree: -p,
            v: exterior_v(f, p),
            w: w_star,
        });
    }
    Ok(ComplexDescription {
        i,
        f,
        g,
        k: Some(k),
        terms,
        splice: None,
    })
}

/// Compares a closed-form page-1 entry with Borel-Weil-Bott for
/// `Λ^kΩ(i+p) = O(d+p) ⊗ S_{(1^k)}Ω(1)`.
fn cross_check_page_one(twist: i64, k: usize, g: usize, row: usize, w_star: &Weight) -> Result<()> {
    let lam: Vec<i64> = (0..g - 1).map(|t| i64::from(t < k)).collect();
    let r = bbw(twist, &lam, g)?;
    if r.q() != Some(row) || r.w_dual_form().as_ref() != Some(w_star) {
        return Err(Error::invariant(format!(
            "page-1 term for twist {twist}, k={k}: closed form gives q={row}, W*-weight {w_star}; \
             Borel-Weil-Bott gives {r:?}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub i: i64,
    pub dual_i: i64,
    pub ranks: Vec<String>,
    pub dual_ranks: Vec<String>,
    pub ranks_match: bool,
    /// Reversed, negated generator degrees of `D•(i)` minus those of `D•(f-g-i)`,
    /// when that difference is constant.
    pub degree_shift: Option<i64>,
    pub ok: bool,
}

/// Compares `Hom(D•(i), R)` with `D•(f-g-i)` at the level of ranks and generator degrees.
pub fn duality_check(i: i64, f: usize, g: usize) -> Result<DualityReport> {
    let dual_i = f as i64 - g as i64 - i;
    let a = build_d(i, f, g)?;
    let b = build_d(dual_i, f, g)?;
    let mut rev = a.ranks();
    rev.reverse();
    let ranks_match = rev == b.ranks();
    let dual_degrees: Vec<i64> = a.generator_degrees().iter().rev().map(|&x| -x).collect();
    let degree_shift = if dual_degrees.len() == b.terms.len() && !b.terms.is_empty() {
        let shift = b.terms[0].generator_degree - dual_degrees[0];
        dual_degrees
            .iter()
            .zip(b.generator_degrees())
            .all(|(x, y)| y - x == shift)
            .then_some(shift)
    } else {
        None
    };
    Ok(DualityReport {
        i,
        dual_i,
        ranks: a.ranks().iter().map(ToString::to_string).collect(),
        dual_ranks: b.ranks().iter().map(ToString::to_string).collect(),
        ranks_match,
        degree_shift,
        ok: ranks_match && degree_shift.is_some(),
    })
}

/// `Σ ± rank · u^{gen_deg}` truncated at `maxdeg`.
///
/// Signs alternate along the complex and the rightmost term (largest
/// position) counts positively, so a resolution `F_n → … → F_0` gives the
/// usual numerator `Σ (-1)^j H_{F_j}`. Parity is taken along the diagonal
/// `p + row`, which agrees with the contiguous grading of a spliced complex.
pub fn hilbert_numerator(c: &ComplexDescription, maxdeg: usize) -> Series {
    let mut s = Series::zero(maxdeg);
    let Some(last) = c.terms.iter().max_by_key(|t| t.position) else {
        return s;
    };
    let anchor = last.diagonal();
    for t in &c.terms {
        let rank = num_bigint::BigInt::from(t.rank.clone());
        let signed = if (anchor - t.diagonal()).rem_euclid(2) == 0 {
            rank
        } else {
            -rank
        };
        s.add_term(t.generator_degree, signed);
    }
    s
}

/// The `GL(V)`-part of a term as a partition (always a column `1^{-p}`).
pub fn v_partition(t: &ComplexTerm) -> Partition {
    t.v.as_partition()
        .expect("V-side generators are polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(c: &ComplexDescription) -> Vec<u64> {
        c.ranks()
            .iter()
            .map(|r| r.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn k_examples() {
        let k = build_k(1, 2, 2).unwrap();
        assert_eq!(k.positions(), vec![-1, 0]);
        assert_eq!(ranks(&k), vec![2, 2]);
        let k = build_k(0, 5, 3).unwrap();
        assert_eq!(ranks(&k), vec![1]);
        let k = build_k(2, 3, 2).unwrap();
        assert_eq!(ranks(&k), vec![3, 6, 3]);
        assert!(build_k(-1, 3, 2).unwrap().is_empty());
    }

    #[test]
    fn c_examples() {
        let c = build_c(0, 2, 2).unwrap();
        assert_eq!(c.positions(), vec![-2, -1, 0]);
        assert_eq!(ranks(&c), vec![3, 4, 1]);
        let c = build_c(2, 2, 2).unwrap();
        assert_eq!(c.positions(), vec![-2]);
        assert_eq!(ranks(&c), vec![1]);
        let c = build_c(6, 12, 6).unwrap();
        assert_eq!(c.positions(), vec![-12, -11, -10, -9, -8, -7, -6]);
        assert_eq!(c.terms.last().unwrap().rank, BigUint::from(924u32));
    }

    #[test]
    fn eagon_northcott_2x3() {
        let d = build_d(0, 3, 2).unwrap();
        assert_eq!(ranks(&d), vec![2, 3, 1]);
        assert_eq!(d.positions(), vec![-3, -2, 0]);
        assert_eq!(
            d.terms.iter().map(|t| t.normalized).collect::<Vec<_>>(),
            vec![-3, -2, -1]
        );
        assert_eq!(d.splice, Some(Splice { from: -2, to: 0 }));
        assert_eq!(d.generator_degrees(), vec![3, 2, 0]);
    }

    #[test]
    fn unspliced_ends() {
        let d = build_d(-1, 12, 6).unwrap();
        assert_eq!(d.support(Part::C), Some((-12, -5)));
        assert!(d.support(Part::K).is_none());
        assert!(d.splice.is_none());
        let d = build_d(7, 12, 6).unwrap();
        assert!(d.support(Part::C).is_none());
        assert_eq!(d.support(Part::K), Some((-7, 0)));
        assert!(d.splice.is_none());
    }

    #[test]
    fn generator_rep_dimension_is_rank() {
        for i in -4..6 {
            let d = build_d(i, 5, 3).unwrap();
            for t in &d.terms {
                assert_eq!(
                    weyl_dimension(&t.v) * weyl_dimension(&t.w),
                    t.rank,
                    "i={i} p={}",
                    t.position
                );
            }
        }
    }

    #[test]
    fn d_ik_examples() {
        let c = build_d_ik(6, 3, 12, 6).unwrap();
        let mid: Vec<_> = c.terms_of(Part::Mid).collect();
        assert_eq!(mid.len(), 1);
        assert_eq!((mid[0].position, mid[0].row), (-6, 3));
        assert_eq!(mid[0].rank, binomial(12, 6));
        assert!(build_d_ik(0, 3, 4, 3).is_err());

        // k = g-1, d = -1: the q = 0 strip starts at p = 2 and is clipped away.
        let c = build_d_ik(1, 2, 4, 3).unwrap();
        assert!(c.support(Part::K).is_none());
    }

    #[test]
    fn d_ik_with_k_zero_is_d() {
        for i in -5..8 {
            let a = build_d_ik(i, 0, 6, 3).unwrap();
            let b = build_d(i, 6, 3).unwrap();
            let key = |c: &ComplexDescription| {
                c.terms
                    .iter()
                    .map(|t| (t.position, t.row, t.rank.clone(), t.w.clone()))
                    .collect::<Vec<_>>()
            };
            assert_eq!(key(&a), key(&b), "i={i}");
        }
    }

    #[test]
    fn duality_examples() {
        let r = duality_check(0, 3, 2).unwrap();
        assert!(r.ok);
        assert_eq!(r.dual_ranks, vec!["1", "3", "2"]);
        assert!(duality_check(3, 10, 4).unwrap().ok);
        assert!(duality_check(-1, 12, 6).unwrap().ok);
    }

    #[test]
    fn numerators() {
        let c = build_d(-2, 2, 2).unwrap();
        assert_eq!(
            hilbert_numerator(&c, 4),
            Series::from_i64(&[1, -4, 3, 0, 0])
        );
        let c = build_k(0, 3, 3).unwrap();
        assert_eq!(hilbert_numerator(&c, 2), Series::from_i64(&[1, 0, 0]));
        let c = build_k(1, 2, 2).unwrap();
        assert_eq!(hilbert_numerator(&c, 2), Series::from_i64(&[2, -2, 0]));
        let c = build_d(0, 3, 2).unwrap();
        assert_eq!(hilbert_numerator(&c, 3), Series::from_i64(&[1, 0, -3, 2]));
    }

    #[test]
    fn json_round_trip() {
        let d = build_d(0, 3, 2).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains(r#""splice":{"from":-2,"to":0}"#));
        assert_eq!(
            serde_json::from_str::<ComplexDescription>(&json).unwrap(),
            d
        );
    }
}
