//! Permutations in one-line notation, acting on the right by transpositions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
    }

    /// `w·(i,j)`: swaps positions `i` and `j` (1-based) of the one-line word.
    pub fn apply_transposition(&self, t: Transposition) -> Result<Self> {
        let n = self.n();
        if t.0 == 0 || t.0 >= t.1 || t.1 > n {
            return Err(Error::InvalidTransposition(t.0, t.1, n));
        }
        let mut v = self.0.clone();
        v.swap(t.0 - 1, t.1 - 1);
        Ok(Permutation(v))
    }

    /// Whether `u < u·(i,j)` in Bruhat order. For a reflection this is decided by
    /// `u(i) < u(j)`, equivalently by the length going up.
    pub fn bruhat_increases(&self, t: Transposition) -> bool {
        self.apply(t.0) < self.apply(t.1)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(cur.clone())];
        // next lexicographic permutation
        while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(" "))
        }
    }
}

/// Accepts `"3214"` (single digits) or `"3 2 1 4"` / `"3,2,1,4"`.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(s.to_string())))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(images)
    }
}

/// A transposition `(i,j)` with `1 ≤ i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition(pub usize, pub usize);

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl FromStr for Transposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut it = inner.split(',').map(|x| x.trim().parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(i)), Some(Ok(j)), None) if i < j && i > 0 => Ok(Transposition(i, j)),
            _ => Err(Error::Parse(format!("transposition {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(w("1234").length(), 0);
        assert_eq!(w("3214").length(), 3);
        assert_eq!(w("4213").length(), 4);
    }

    #[test]
    fn right_action_matches_worked_example() {
        let a = w("1234").apply_transposition(Transposition(1, 3)).unwrap();
        assert_eq!(a, w("3214"));
        let b = a.apply_transposition(Transposition(1, 4)).unwrap();
        assert_eq!(b, w("4213"));
        assert_eq!(b.apply_transposition(Transposition(1, 4)).unwrap(), a);
    }

    #[test]
    fn transposition_errors() {
        assert!(w("123").apply_transposition(Transposition(2, 2)).is_err());
        assert!(w("123").apply_transposition(Transposition(1, 4)).is_err());
        assert!(w("123").apply_transposition(Transposition(0, 1)).is_err());
    }

    #[test]
    fn bruhat_examples() {
        assert!(w("1234").bruhat_increases(Transposition(1, 3)));
        assert!(!w("3214").bruhat_increases(Transposition(1, 3)));
        assert!(w("3214").bruhat_increases(Transposition(1, 4)));
    }

    #[test]
    fn bruhat_exactly_one_direction_and_agrees_with_length() {
        for n in 2..=5 {
            for u in Permutation::all(n) {
                for i in 1..n {
                    for j in i + 1..=n {
                        let t = Transposition(i, j);
                        let ut = u.apply_transposition(t).unwrap();
                        assert_ne!(u.bruhat_increases(t), ut.bruhat_increases(t));
                        assert_eq!(u.bruhat_increases(t), ut.length() > u.length());
                        // reflections change length by an odd amount
                        assert_eq!((ut.length() as i64 - u.length() as i64).rem_euclid(2), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn all_perms_sorted() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }
}
