//! Borel-Weil-Bott on the projective space `P = Proj Sym W`, `dim W = g`.
//!
//! The homogeneous bundle `V(i, λ) = (R*)^{⊗i} ⊗ S_λ Q*` has at most one
//! nonvanishing cohomology group. To find it, form
//! `s = (i+g-1, λ_1+g-2, …, λ_{g-1})`. A repeated entry means no cohomology;
//! otherwise sorting `s` strictly decreasing with `q` adjacent swaps and
//! subtracting the staircase `(g-1, …, 0)` gives the `GL(W)`-weight of
//! `R^q p_* V(i, λ)`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::binomial;
use crate::error::{Error, Result};
use crate::partition::{Partition, Weight};
use crate::rep::{dual_weight, weyl_dimension};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BbwResult {
    Zero,
    /// `R^q p_* = S_weight W`, with `weight` a `GL(W)`-weight of length `g`.
    Cohomology {
        q: usize,
        weight: Weight,
    },
}

impl BbwResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, BbwResult::Zero)
    }

    pub fn q(&self) -> Option<usize> {
        match self {
            BbwResult::Zero => None,
            BbwResult::Cohomology { q, .. } => Some(*q),
        }
    }

    /// The `GL(W)`-weight of the surviving group.
    pub fn w_form(&self) -> Option<&Weight> {
        match self {
            BbwResult::Zero => None,
            BbwResult::Cohomology { weight, .. } => Some(weight),
        }
    }

    /// The same representation written as a `GL(W*)`-weight.
    pub fn w_dual_form(&self) -> Option<Weight> {
        self.w_form().map(dual_weight)
    }

    pub fn dim(&self) -> BigUint {
        self.w_form().map(weyl_dimension).unwrap_or_default()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BbwJson {
    Zero {
        zero: bool,
    },
    Cohomology {
        q: usize,
        w_weight: Vec<i64>,
        dim: String,
    },
}

impl Serialize for BbwResult {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            BbwResult::Zero => BbwJson::Zero { zero: true },
            BbwResult::Cohomology { q, weight } => BbwJson::Cohomology {
                q: *q,
                w_weight: weight.entries().to_vec(),
                dim: self.dim().to_string(),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BbwResult {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        match BbwJson::deserialize(deserializer)? {
            BbwJson::Zero { zero: true } => Ok(BbwResult::Zero),
            BbwJson::Zero { zero: false } => {
                Err(serde::de::Error::custom("expected \"zero\": true"))
            }
            BbwJson::Cohomology { q, w_weight, dim } => {
                let weight = Weight::new(w_weight).map_err(serde::de::Error::custom)?;
                let out = BbwResult::Cohomology { q, weight };
                if out.dim().to_string() != dim {
                    return Err(serde::de::Error::custom("dimension does not match weight"));
                }
                Ok(out)
            }
        }
    }
}

/// Cohomology of `O(i) ⊗ S_lam(Ω(1))` with `lam` a dominant weight of length `g-1`.
pub fn bbw(i: i64, lam: &[i64], g: usize) -> Result<BbwResult> {
    if g == 0 {
        return Err(Error::invalid("g must be at least 1"));
    }
    if lam.len() != g - 1 {
        return Err(Error::invalid(format!(
            "bundle weight must have length g-1={}, got {}",
            g - 1,
            lam.len()
        )));
    }
    if lam.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid(format!(
            "bundle weight {lam:?} is not dominant"
        )));
    }
    let head = i + g as i64 - 1;
    // The shifted tail is strictly decreasing, so only the head can be out of place.
    let tail: Vec<i64> = lam
        .iter()
        .enumerate()
        .map(|(t, &x)| x + (g as i64 - 2 - t as i64))
        .collect();
    if tail.contains(&head) {
        return Ok(BbwResult::Zero);
    }
    let q = tail.iter().take_while(|&&x| x > head).count();
    let mut sorted = Vec::with_capacity(g);
    sorted.extend_from_slice(&tail[..q]);
    sorted.push(head);
    sorted.extend_from_slice(&tail[q..]);
    let weight = sorted
        .iter()
        .enumerate()
        .map(|(t, &x)| x - (g as i64 - 1 - t as i64))
        .collect();
    Ok(BbwResult::Cohomology {
        q,
        weight: Weight::from_sorted(weight),
    })
}

/// Cohomology of `S_lam(T(-1))(i)`, the dual packaging used for `O_Z(i)`.
pub fn bbw_tangent(i: i64, lam: &Partition, g: usize) -> Result<BbwResult> {
    if g == 0 {
        return Err(Error::invalid("g must be at least 1"));
    }
    if lam.height() > g - 1 {
        return Err(Error::invalid(format!(
            "partition {lam} has height {} > g-1={}",
            lam.height(),
            g - 1
        )));
    }
    let dual: Vec<i64> = lam.padded(g - 1).iter().rev().map(|&x| -x).collect();
    bbw(i, &dual, g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleCohomology {
    pub result: BbwResult,
    #[serde(with = "crate::bigint_string")]
    pub dim: BigUint,
}

/// Cohomology of `O(d)` on `P^{g-1}` from the closed three-case formula.
pub fn line_bundle_cohomology(d: i64, g: usize) -> Result<LineBundleCohomology> {
    if g == 0 {
        return Err(Error::invalid("g must be at least 1"));
    }
    let g_i = g as i64;
    let out = if d >= 0 {
        let mut weight = vec![0; g];
        weight[0] = d;
        LineBundleCohomology {
            result: BbwResult::Cohomology {
                q: 0,
                weight: Weight::from_sorted(weight),
            },
            dim: binomial(d + g_i - 1, g_i - 1),
        }
    } else if d > -g_i {
        LineBundleCohomology {
            result: BbwResult::Zero,
            dim: BigUint::default(),
        }
    } else {
        // Sym_{-d-g} W* ⊗ Λ^g W*, written on the W side.
        let mut weight = vec![-1; g];
        weight[g - 1] = d + g_i - 1;
        LineBundleCohomology {
            result: BbwResult::Cohomology {
                q: g - 1,
                weight: Weight::from_sorted(weight),
            },
            dim: binomial(-d - 1, g_i - 1),
        }
    };
    Ok(out)
}

/// Whether `λ_{g-q} < -i-q ≤ λ_{g-q-1}`, reading `λ_0 = +∞` and `λ_t = 0` past the height.
pub fn q_index_fast(i: i64, lam: &Partition, g: usize, q: usize) -> bool {
    if q >= g {
        return false;
    }
    let target = -i - q as i64;
    let below = i64::from(lam.part(g - q));
    let above = row_or_infinity(lam, g - q - 1);
    below < target && target <= above
}

fn row_or_infinity(lam: &Partition, idx: usize) -> i64 {
    if idx == 0 {
        i64::MAX
    } else {
        i64::from(lam.part(idx))
    }
}

/// The `GL(W*)`-weight `(λ_1, …, λ_{g-q-1}, -i-q, λ_{g-q}+1, …, λ_{g-1}+1)` of the
/// nonzero group `R^q p_* S_λ(T(-1))(i)`, with the `Λ^g W*` twist folded in.
pub fn delta(lam: &Partition, i: i64, q: usize, g: usize) -> Result<Weight> {
    if q >= g {
        return Err(Error::invalid(format!("q={q} must be below g={g}")));
    }
    if lam.height() > g - 1 {
        return Err(Error::invalid(format!("partition {lam} has height > g-1")));
    }
    let parts = lam.padded(g - 1);
    let split = g - q - 1;
    let mut entries = Vec::with_capacity(g);
    entries.extend_from_slice(&parts[..split]);
    entries.push(-i - q as i64);
    entries.extend(parts[split..].iter().map(|&x| x + 1));
    Weight::new(entries).map_err(|_| {
        Error::invalid(format!(
            "λ={lam} does not satisfy the index inequality for i={i}, q={q}, g={g}"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn structure_sheaf() {
        let r = bbw(0, &[0, 0], 3).unwrap();
        assert_eq!(
            r,
            BbwResult::Cohomology {
                q: 0,
                weight: w(&[0, 0, 0])
            }
        );
    }

    #[test]
    fn line_bundles_from_the_algorithm() {
        let r = bbw(2, &[0, 0], 3).unwrap();
        assert_eq!(r.q(), Some(0));
        assert_eq!(r.w_form(), Some(&w(&[2, 0, 0])));
        assert_eq!(r.dim(), BigUint::from(6u32));

        assert!(bbw(-2, &[0, 0], 3).unwrap().is_zero());

        let r = bbw(-5, &[0, 0], 3).unwrap();
        assert_eq!(r.q(), Some(2));
        assert_eq!(r.w_form(), Some(&w(&[-1, -1, -3])));
        assert_eq!(r.dim(), binomial(4, 2));
    }

    #[test]
    fn bbw_rejects_bad_weights() {
        assert!(bbw(0, &[0], 3).is_err());
        assert!(bbw(0, &[0, 1], 3).is_err());
    }

    #[test]
    fn tangent_examples() {
        let r = bbw_tangent(-3, &part(&[2]), 3).unwrap();
        assert_eq!(r.q(), Some(1));
        assert_eq!(r.w_dual_form(), Some(w(&[2, 2, 1])));

        // g = 2, i = -2, λ = (2): the degree-2 piece Sym_0 W ⊗ Sym_2 V.
        let r = bbw_tangent(-2, &part(&[2]), 2).unwrap();
        // Sym_0 W up to the determinant twist det(W)^{-2}.
        assert_eq!(r.q(), Some(0));
        assert_eq!(r.w_form(), Some(&w(&[-2, -2])));
        assert_eq!(r.dim(), BigUint::from(1u32));

        assert!(bbw_tangent(-1, &Partition::empty(), 3).unwrap().is_zero());
        assert!(bbw_tangent(0, &part(&[1, 1, 1]), 3).is_err());
    }

    #[test]
    fn line_bundle_table() {
        let c = line_bundle_cohomology(0, 4).unwrap();
        assert_eq!(
            (c.result.q(), c.dim.clone()),
            (Some(0), BigUint::from(1u32))
        );
        let c = line_bundle_cohomology(3, 2).unwrap();
        assert_eq!(
            (c.result.q(), c.dim.clone()),
            (Some(0), BigUint::from(4u32))
        );
        let c = line_bundle_cohomology(-6, 4).unwrap();
        assert_eq!(
            (c.result.q(), c.dim.clone()),
            (Some(3), BigUint::from(10u32))
        );
        assert_eq!(c.result, bbw(-6, &[0, 0, 0], 4).unwrap());
    }

    #[test]
    fn fast_index_examples() {
        assert!(q_index_fast(-3, &part(&[2]), 3, 1));
        assert_eq!(delta(&part(&[2]), -3, 1, 3).unwrap(), w(&[2, 2, 1]));

        assert!(q_index_fast(-2, &Partition::empty(), 2, 1));
        let d = delta(&Partition::empty(), -2, 1, 2).unwrap();
        assert_eq!(d, w(&[1, 1]));
        assert_eq!(weyl_dimension(&d), BigUint::from(1u32));

        assert!(!q_index_fast(-2, &part(&[1, 1]), 3, 2));
    }

    #[test]
    fn json_forms() {
        let r = bbw_tangent(-3, &part(&[2]), 3).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"q":1,"w_weight":[-1,-2,-2],"dim":"3"}"#);
        assert_eq!(serde_json::from_str::<BbwResult>(&json).unwrap(), r);
        assert_eq!(
            serde_json::to_string(&BbwResult::Zero).unwrap(),
            r#"{"zero":true}"#
        );
        assert_eq!(
            serde_json::from_str::<BbwResult>(r#"{"zero":true}"#).unwrap(),
            BbwResult::Zero
        );
    }
}
