//! Cohomology `R^q p_* O_Z(i)` of the twisted structure sheaf of the
//! incidence bundle, as a graded `GL(V) × GL(W*)`-representation, together
//! with the support predictions and consistency checks built on it.
//!
//! Grading: the summand `S_λV ⊗ (…)` sits in degree `|λ|`. Reports truncate at
//! `maxdeg` and state the smallest `maxdeg` that can see the lowest degree, so
//! an empty truncation is never read as vanishing.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::bbw::{bbw_tangent, delta, q_index_fast};
use crate::complex::{build_d, build_d_ik, hilbert_numerator, is_spliced, ComplexDescription};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, vertical_strips, Partition, Weight};
use crate::rep::{BiIrrep, GradedRepSum};
use crate::series::Series;
use crate::{binomial, check_dims};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub i: i64,
    pub q: usize,
    pub f: usize,
    pub g: usize,
    pub maxdeg: usize,
    pub decomposition: GradedRepSum,
    pub hilbert: Series,
    pub lowest_degree: Option<i64>,
    /// Smallest truncation that contains the lowest-degree class when the
    /// group is nonzero (`i < 0` and `q` in range only).
    pub required_maxdeg: Option<usize>,
}

impl CohomologyReport {
    fn assemble(
        i: i64,
        q: usize,
        f: usize,
        g: usize,
        maxdeg: usize,
        decomposition: GradedRepSum,
    ) -> Self {
        let mut hilbert = Series::zero(maxdeg);
        for (d, sum) in decomposition.degrees() {
            hilbert.add_term(d, BigInt::from(sum.total_dim()));
        }
        let required_maxdeg = (i < 0 && q as i64 <= (-i - 1).min(g as i64 - 1)).then(|| {
            let (k, l) = k_l(i, q, g);
            (k * (l + 1)) as usize
        });
        CohomologyReport {
            i,
            q,
            f,
            g,
            maxdeg,
            lowest_degree: decomposition.lowest_degree(),
            decomposition,
            hilbert,
            required_maxdeg,
        }
    }

    pub fn is_zero_up_to_maxdeg(&self) -> bool {
        self.decomposition.is_empty()
    }
}

/// `k = g-1-q`, `l = -i-q-1`.
pub fn k_l(i: i64, q: usize, g: usize) -> (i64, i64) {
    (g as i64 - 1 - q as i64, -i - q as i64 - 1)
}

fn check_q(q: usize, g: usize) -> Result<()> {
    if q > g - 1 {
        return Err(Error::invalid(format!(
            "q must lie in [0, g-1]=[0, {}], got q={q}",
            g - 1
        )));
    }
    Ok(())
}

/// Sums `R^q p'_*[S_λ(T(-1))(i)] ⊗ S_λV` over all `λ` with at most `g-1`
/// rows and `|λ| ≤ maxdeg`.
pub fn graded_cohomology(
    i: i64,
    q: usize,
    f: usize,
    g: usize,
    maxdeg: usize,
) -> Result<CohomologyReport> {
    check_dims(f, g)?;
    check_q(q, g)?;
    let mut decomposition = GradedRepSum::new();
    for lam in enumerate_partitions(maxdeg as u64, g - 1) {
        let r = bbw_tangent(i, &lam, g)?;
        if r.q() != Some(q) {
            continue;
        }
        let w = r.w_dual_form().expect("nonzero result has a weight");
        decomposition.insert(
            BiIrrep::new(Weight::from_partition(&lam, f)?, w, lam.size() as i64),
            1,
        );
    }
    Ok(CohomologyReport::assemble(
        i,
        q,
        f,
        g,
        maxdeg,
        decomposition,
    ))
}

/// `λ_t`, reading `λ_0 = +∞`.
pub fn part_or_infinity(lam: &Partition, t: usize) -> i64 {
    if t == 0 {
        i64::MAX
    } else {
        i64::from(lam.part(t))
    }
}

/// `λ_t` for a partition with `g-1` parts, reading `λ_g = 0` (and zero beyond).
pub fn part_or_zero(lam: &Partition, t: usize) -> i64 {
    i64::from(lam.part(t.max(1)))
}

/// Partitions with at most `g-1` rows, size at most `maxdeg`, and
/// `λ_{k+1} < l+1 ≤ λ_k`.
pub fn a_set(k: i64, l: i64, g: usize, maxdeg: usize) -> Result<Vec<Partition>> {
    if l < 0 {
        return Err(Error::invalid(format!("l must be nonnegative, got l={l}")));
    }
    if k < 0 {
        return Err(Error::invalid(format!("k must be nonnegative, got k={k}")));
    }
    if g == 0 {
        return Err(Error::invalid("g must be at least 1"));
    }
    let k = k as usize;
    Ok(enumerate_partitions(maxdeg as u64, g - 1)
        .filter(|lam| part_or_zero(lam, k + 1) < l + 1 && l < part_or_infinity(lam, k))
        .collect())
}

/// `⊕_{λ ∈ A(k,l)} S_λV ⊗ S_{δ(λ)}W*` truncated at `maxdeg`.
pub fn strrep_cohomology(
    i: i64,
    q: usize,
    f: usize,
    g: usize,
    maxdeg: usize,
) -> Result<CohomologyReport> {
    check_dims(f, g)?;
    check_q(q, g)?;
    if i >= 0 {
        return Err(Error::invalid(format!(
            "the A(k,l) description needs i < 0, got i={i}"
        )));
    }
    let (k, l) = k_l(i, q, g);
    if l < 0 {
        return Err(Error::invalid(format!(
            "q={q} is outside the nonvanishing range for i={i} (l = -i-q-1 = {l} < 0)"
        )));
    }
    let mut decomposition = GradedRepSum::new();
    for lam in a_set(k, l, g, maxdeg)? {
        let irrep = BiIrrep::new(
            Weight::from_partition(&lam, f)?,
            delta(&lam, i, q, g)?,
            lam.size() as i64,
        );
        decomposition.insert(irrep, 1);
    }
    Ok(CohomologyReport::assemble(
        i,
        q,
        f,
        g,
        maxdeg,
        decomposition,
    ))
}

/// `[0, min(-i-1, g-1)]`, the `q` with `R^q p_* O_Z(i) ≠ 0`.
pub fn nonvanishing_range(i: i64, g: usize) -> Result<RangeInclusive<usize>> {
    if i >= 0 {
        return Err(Error::invalid(format!(
            "nonvanishing range is stated for i < 0, got i={i}"
        )));
    }
    Ok(0..=((-i - 1).min(g as i64 - 1)) as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologySpot {
    /// Cohomological position in `D•(i)`.
    pub j: i64,
    /// `H^j D•(i) ≅ R^q p_* O_Z(i)` with `q = j + g - 1`.
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SupportPrediction {
    /// `D•(i)` resolves `Sym_i coker φ`; the module sits at native position 0
    /// (contiguous position `normalized_position`).
    Resolution {
        module_twist: i64,
        normalized_position: i64,
    },
    Cohomology {
        spots: Vec<CohomologySpot>,
    },
}

impl SupportPrediction {
    /// Points `(p, q)` of the superimposed picture that carry cohomology.
    pub fn grid_points(&self, g: usize) -> Vec<GridPoint> {
        match self {
            SupportPrediction::Resolution { .. } => vec![GridPoint::new(0, 0)],
            SupportPrediction::Cohomology { spots } => spots
                .iter()
                .map(|s| GridPoint::new(s.j, (g - 1) as i64))
                .collect(),
        }
    }
}

/// A lattice point `(p, q)` of the page-1 picture, on diagonal `n = p + q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub p: i64,
    pub q: i64,
    pub n: i64,
}

impl GridPoint {
    pub fn new(p: i64, q: i64) -> Self {
        Self { p, q, n: p + q }
    }
}

/// Where `D•(i)` can and does have cohomology.
pub fn predicted_support(i: i64, f: usize, g: usize) -> Result<SupportPrediction> {
    check_dims(f, g)?;
    if i >= 0 {
        let normalized_position = if is_spliced(i, f, g) {
            -(g as i64) + 1
        } else {
            0
        };
        return Ok(SupportPrediction::Resolution {
            module_twist: i,
            normalized_position,
        });
    }
    let hi = (-(g as i64) - i).min(0);
    let spots = (-(g as i64) + 1..=hi)
        .map(|j| CohomologySpot {
            j,
            q: (j + g as i64 - 1) as usize,
        })
        .collect();
    Ok(SupportPrediction::Cohomology { spots })
}

/// Closed form for `f = g = 2`: `Sym_{d+i}W ⊗ Sym_dV` for `q = 0` and
/// `Sym*_{-(d+i)-2}W ⊗ Λ²W* ⊗ Sym_dV` for `q = 1`.
pub fn g2_series(i: i64, q: usize, maxdeg: usize) -> Result<Series> {
    let mut s = Series::zero(maxdeg);
    for d in 0..=maxdeg as i64 {
        let w_dim = match q {
            0 => binomial(d + i + 1, 1),
            1 => binomial(-d - i - 1, 1),
            _ => {
                return Err(Error::invalid(format!(
                    "q must be 0 or 1 when g = 2, got q={q}"
                )))
            }
        };
        s.add_term(d, BigInt::from(w_dim * BigUint::from((d + 1) as u64)));
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub i: i64,
    pub f: usize,
    pub g: usize,
    pub maxdeg: usize,
    pub balanced: bool,
    pub numerator: Series,
    /// `numerator / (1-u)^{fg}`.
    pub complex_side: Series,
    /// Alternating sum of the Hilbert series of the cohomology groups.
    pub cohomology_side: Series,
    pub first_mismatch: Option<usize>,
    /// Lowest truncation at which every nonzero cohomology group is visible.
    pub required_maxdeg: usize,
}

/// Checks `numerator(D•(i)) / (1-u)^{fg} = ± Σ_q (-1)^q H(R^q p_* O_Z(i))`.
///
/// The sign is fixed by the term of `D•(i)` at the largest position: it lies
/// on diagonal `n_last` and the identity carries the factor `(-1)^{n_last}`.
pub fn euler_check(i: i64, f: usize, g: usize, maxdeg: usize) -> Result<EulerReport> {
    let complex = build_d(i, f, g)?;
    let numerator = hilbert_numerator(&complex, maxdeg);
    let complex_side = numerator.divide_by_one_minus_u_pow(f * g);
    let n_last = last_diagonal(&complex);
    let mut cohomology_side = Series::zero(maxdeg);
    let mut required_maxdeg = 0;
    for q in 0..g {
        let rep = graded_cohomology(i, q, f, g, maxdeg)?;
        if let Some(r) = rep.required_maxdeg {
            required_maxdeg = required_maxdeg.max(r);
        }
        cohomology_side = if (q as i64 + n_last).rem_euclid(2) == 0 {
            &cohomology_side + &rep.hilbert
        } else {
            &cohomology_side - &rep.hilbert
        };
    }
    let first_mismatch = complex_side.first_mismatch(&cohomology_side);
    Ok(EulerReport {
        i,
        f,
        g,
        maxdeg,
        balanced: first_mismatch.is_none(),
        numerator,
        complex_side,
        cohomology_side,
        first_mismatch,
        required_maxdeg,
    })
}

fn last_diagonal(c: &ComplexDescription) -> i64 {
    c.terms
        .iter()
        .max_by_key(|t| t.position)
        .map(|t| t.diagonal())
        .unwrap_or(0)
}

/// The index inequality `λ'_{g-q} < -d-q ≤ λ'_{g-q-1}` for the twisted bundle.
pub fn obstruction_inequality(lam_prime: &Partition, d: i64, q: usize, g: usize) -> bool {
    q_index_fast(d, lam_prime, g, q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftWitness {
    pub q: usize,
    pub lam: Partition,
    pub lam_prime: Partition,
}

/// Every `(q, λ, λ')` with `λ' ∈ VS(λ, k)` satisfying the index inequality
/// for `d = i - k`, over `λ` with at most `g-1` rows and `|λ| ≤ maxdeg`.
pub fn lift_obstruction(k: usize, i: i64, g: usize, maxdeg: usize) -> Result<Vec<LiftWitness>> {
    if g == 0 {
        return Err(Error::invalid("g must be at least 1"));
    }
    if k > g - 1 {
        return Err(Error::invalid(format!(
            "k must lie in [0, g-1]=[0, {}], got k={k}",
            g - 1
        )));
    }
    let d = i - k as i64;
    let mut out = Vec::new();
    for lam in enumerate_partitions(maxdeg as u64, g - 1) {
        for lam_prime in vertical_strips(&lam, k, g - 1) {
            for q in 0..g {
                if obstruction_inequality(&lam_prime, d, q, g) {
                    out.push(LiftWitness {
                        q,
                        lam: lam.clone(),
                        lam_prime: lam_prime.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DikSupport {
    pub i: i64,
    pub k: usize,
    pub d: i64,
    pub acyclic: bool,
    /// Populated page-1 points on diagonals `n ≥ 0`.
    pub intersections: Vec<GridPoint>,
}

/// Strip-endpoint geometry of `D•(i,k)` against the region `p + q ≥ 0`.
pub fn dik_support(i: i64, k: usize, f: usize, g: usize) -> Result<DikSupport> {
    let c = build_d_ik(i, k, f, g)?;
    Ok(DikSupport {
        i,
        k,
        d: i - k as i64,
        acyclic: i - k as i64 >= 0,
        intersections: grey_intersections(&c),
    })
}

/// Populated points `(p, row)` of a complex lying on a diagonal `p + row ≥ 0`.
pub fn grey_intersections(c: &ComplexDescription) -> Vec<GridPoint> {
    let mut pts: Vec<GridPoint> = c
        .terms
        .iter()
        .map(|t| GridPoint::new(t.position, t.row as i64))
        .filter(|pt| pt.n >= 0)
        .collect();
    pts.sort();
    pts
}
