//! Truncated power series in one variable `u` with integer coefficients.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficients of `u^0 … u^maxdeg`; everything above `maxdeg` is discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(maxdeg: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); maxdeg + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least the constant term"
        );
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn maxdeg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> &BigInt {
        &self.coeffs[deg]
    }

    /// Adds `c·u^deg`; terms above the truncation are dropped.
    pub fn add_term(&mut self, deg: i64, c: impl Into<BigInt>) {
        if deg >= 0 && (deg as usize) < self.coeffs.len() {
            self.coeffs[deg as usize] += c.into();
        }
    }

    /// Multiplies by `1/(1-u)^m`.
    pub fn divide_by_one_minus_u_pow(&self, m: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..m {
            for t in 1..coeffs.len() {
                let prev = coeffs[t - 1].clone();
                coeffs[t] += prev;
            }
        }
        Series { coeffs }
    }

    /// Multiplies by `(1-u)^m`.
    pub fn multiply_by_one_minus_u_pow(&self, m: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..m {
            for t in (1..coeffs.len()).rev() {
                let prev = coeffs[t - 1].clone();
                coeffs[t] -= prev;
            }
        }
        Series { coeffs }
    }

    /// Degree of the first coefficient where the two series differ.
    pub fn first_mismatch(&self, other: &Series) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        (0..n)
            .find(|&t| self.coeffs.get(t).unwrap_or(&zero) != other.coeffs.get(t).unwrap_or(&zero))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn zip_with(&self, other: &Series, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Series {
        let n = self.coeffs.len().min(other.coeffs.len());
        Series {
            coeffs: (0..n)
                .map(|t| op(&self.coeffs[t], &other.coeffs[t]))
                .collect(),
        }
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match t {
                0 => write!(f, "{mag}")?,
                _ if mag == BigInt::from(1) => {}
                _ => write!(f, "{mag}")?,
            }
            match t {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{t}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.coeffs.len())
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(serde::de::Error::custom(
                "series needs at least one coefficient",
            ));
        }
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Series { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_division() {
        // (1 - 3u) / (1 - u)^3 has coefficients (d + 1)(1 - d).
        let s = Series::from_i64(&[1, -3, 0, 0, 0, 0]).divide_by_one_minus_u_pow(3);
        let expected: Vec<i64> = (0..6).map(|d| (d + 1) * (1 - d)).collect();
        assert_eq!(s, Series::from_i64(&expected));
        assert_eq!(
            s.multiply_by_one_minus_u_pow(3),
            Series::from_i64(&[1, -3, 0, 0, 0, 0])
        );
    }

    #[test]
    fn display_and_json() {
        let s = Series::from_i64(&[1, -4, 3]);
        assert_eq!(s.to_string(), "1 - 4u + 3u^2 + O(u^3)");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"["1","-4","3"]"#);
        assert_eq!(serde_json::from_str::<Series>(&json).unwrap(), s);
    }

    #[test]
    fn mismatch_position() {
        let a = Series::from_i64(&[1, 2, 3]);
        let b = Series::from_i64(&[1, 2, 4]);
        assert_eq!(a.first_mismatch(&b), Some(2));
        assert_eq!(a.first_mismatch(&a), None);
    }
}
