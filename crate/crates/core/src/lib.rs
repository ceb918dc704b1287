//! Exact combinatorial and representation-theoretic data for the family of
//! complexes `D•(i)` attached to a generic `f × g` matrix.
//!
//! The crate works entirely at the level of equivariant decompositions: terms
//! of complexes are described by their generating `GL(V) × GL(W*)`
//! representation, rank, and degree, and cohomology is computed as a graded
//! sum of irreducibles via Borel-Weil-Bott on projective space. Nothing here
//! materializes a differential.
//!
//! Conventions used throughout:
//!
//! * `f = dim V ≥ g = dim W ≥ 1`.
//! * `GL(W*)`-weights are stored with every determinant twist folded into the
//!   entries. [`Weight::split_twist`] recovers the partition and the twist.
//! * The internal degree of an irreducible is its number of `V`-boxes.

pub mod bbw;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod lattice;
pub mod partition;
pub mod region;
pub mod rep;
pub mod series;

pub use error::{Error, Result};
pub use partition::{Partition, Weight};
pub use rep::{BiIrrep, GradedRepSum, RepSum};
pub use series::Series;

pub(crate) fn check_dims(f: usize, g: usize) -> Result<()> {
    if g < 1 {
        return Err(Error::invalid(format!("g must be at least 1, got g={g}")));
    }
    if f < g {
        return Err(Error::invalid(format!("f >= g required, got f={f}, g={g}")));
    }
    Ok(())
}

/// `binomial(n, k)` over arbitrary-precision integers, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    use num_traits::{One, Zero};
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * BigUint::from((n - t) as u64) / BigUint::from((t + 1) as u64);
    }
    acc
}

/// Serde adapter writing big integers as decimal strings.
pub(crate) mod bigint_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}
