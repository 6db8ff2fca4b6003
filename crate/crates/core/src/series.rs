//! Power series in `q` over ℚ, truncated at a fixed degree.

use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients of `q^0..=q^D`; everything above `D` is discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(degree_bound: usize) -> Self {
        TruncSeries { coeffs: vec![BigRational::zero(); degree_bound + 1] }
    }

    pub fn one(degree_bound: usize) -> Self {
        let mut s = TruncSeries::zero(degree_bound);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Builds from explicit coefficients of `q^0, q^1, …`; extra entries are dropped.
    pub fn from_coeffs(degree_bound: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = TruncSeries::zero(degree_bound);
        for (k, c) in coeffs.into_iter().enumerate().take(degree_bound + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `q^k + q^{2k} + …` up to the bound: the value of `p_k` at `(q, q², q³, …)`.
    pub fn principal_power_sum(k: usize, degree_bound: usize) -> Self {
        assert!(k > 0);
        let mut s = TruncSeries::zero(degree_bound);
        let mut d = k;
        while d <= degree_bound {
            s.coeffs[d] = BigRational::one();
            d += k;
        }
        s
    }

    /// True if every coefficient is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.degree_bound(), rhs.degree_bound(), "degree bounds differ");
        TruncSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.degree_bound(), rhs.degree_bound(), "degree bounds differ");
        let d = self.degree_bound();
        let mut out = TruncSeries::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(d + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            let s = if body.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                body
            } else {
                format!("{mag}*{body}")
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{s}")?,
                (true, false) => write!(f, "{s}")?,
                (false, true) => write!(f, " - {s}")?,
                (false, false) => write!(f, " + {s}")?,
            }
            first = false;
        }
        let tail = format!("O(q^{})", self.degree_bound() + 1);
        if first {
            write!(f, "{tail}")
        } else {
            write!(f, " + {tail}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn display() {
        let s = TruncSeries::principal_power_sum(1, 3);
        assert_eq!(s.to_string(), "q + q^2 + q^3 + O(q^4)");
        let h = TruncSeries::from_coeffs(2, vec![r(0, 1), r(-1, 2), r(3, 1)]);
        assert_eq!(h.to_string(), "-1/2*q + 3*q^2 + O(q^3)");
        assert_eq!(TruncSeries::zero(5).to_string(), "O(q^6)");
    }

    #[test]
    fn product_truncates() {
        // 1/(1-q) squared has coefficients k+1
        let g = &TruncSeries::one(6) + &TruncSeries::principal_power_sum(1, 6);
        let sq = &g * &g;
        for k in 0..=6 {
            assert_eq!(sq.coeff(k), &r(k as i64 + 1, 1));
        }
        assert_eq!(sq.degree_bound(), 6);
    }

    #[test]
    fn principal_power_sums() {
        let p2 = TruncSeries::principal_power_sum(2, 5);
        let expect: Vec<i64> = vec![0, 0, 1, 0, 1, 0];
        assert_eq!(p2.coeffs(), expect.iter().map(|&x| r(x, 1)).collect::<Vec<_>>().as_slice());
    }
}
