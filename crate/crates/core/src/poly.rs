//! Exact polynomials: univariate `PolyT` in `t` over ℤ and sparse multivariate
//! `MultiPoly` in `x_1..x_n` with `PolyT` coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `t` with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyT {
    coeffs: BTreeMap<u32, BigInt>,
}

impl PolyT {
    pub fn zero() -> Self {
        PolyT::default()
    }

    pub fn one() -> Self {
        PolyT::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        PolyT::term(c, 0)
    }

    /// `c·t^e`.
    pub fn term(c: impl Into<BigInt>, e: u32) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        PolyT { coeffs }
    }

    pub fn t_pow(e: u32) -> Self {
        PolyT::term(1, e)
    }

    /// `1 − t^k`.
    pub fn one_minus_t_pow(k: u32) -> Self {
        &PolyT::one() - &PolyT::t_pow(k)
    }

    /// `φ_k(t) = (1−t)(1−t²)…(1−t^k)`.
    pub fn phi(k: u32) -> Self {
        (1..=k).fold(PolyT::one(), |acc, j| &acc * &PolyT::one_minus_t_pow(j))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: u32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(PolyT::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().map(|(e, c)| c * num_traits::pow(t.clone(), *e as usize)).sum()
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    fn add_term(&mut self, e: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Exact division in ℤ[t]; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &PolyT) -> Option<PolyT> {
        let dd = divisor.degree()?;
        let lc = divisor.coeff(dd);
        let mut rem = self.clone();
        let mut quot = PolyT::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (q, r) = rem.coeff(rd).div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let step = PolyT::term(q, rd - dd);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }

    /// Recognizes `t^a (1−t)^b` and returns `(a, b)`.
    pub fn as_t_power_one_minus_t(&self) -> Option<(u32, u32)> {
        let a = self.low_degree()?;
        let b = self.degree()? - a;
        let candidate = &PolyT::t_pow(a) * &PolyT::one_minus_t_pow(1).pow(b);
        (candidate == *self).then_some((a, b))
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.coeffs.iter().enumerate() {
            let body = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            let mag = c.abs();
            let s = if body.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                body
            } else {
                format!("{mag}*{body}")
            };
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-{s}")?,
                (0, false) => write!(f, "{s}")?,
                (_, true) => write!(f, " - {s}")?,
                (_, false) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }

    /// A single signed term `±c·t^e`, if that is all there is.
    fn as_single_term(&self) -> Option<(u32, &BigInt)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }
}

impl fmt::Display for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f, "t")
    }
}

impl From<i64> for PolyT {
    fn from(c: i64) -> Self {
        PolyT::constant(c)
    }
}

impl Add for &PolyT {
    type Output = PolyT;
    fn add(self, rhs: &PolyT) -> PolyT {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c);
        }
        out
    }
}

impl Add for PolyT {
    type Output = PolyT;
    fn add(self, rhs: PolyT) -> PolyT {
        &self + &rhs
    }
}

impl AddAssign<&PolyT> for PolyT {
    fn add_assign(&mut self, rhs: &PolyT) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c);
        }
    }
}

impl Neg for &PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        PolyT { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &PolyT {
    type Output = PolyT;
    fn sub(self, rhs: &PolyT) -> PolyT {
        self + &(-rhs)
    }
}

impl Mul for &PolyT {
    type Output = PolyT;
    fn mul(self, rhs: &PolyT) -> PolyT {
        let mut out = PolyT::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for PolyT {
    type Output = PolyT;
    fn mul(self, rhs: PolyT) -> PolyT {
        &self * &rhs
    }
}

/// Exponent vector of a monomial in `x_1..x_n`.
pub type Exponents = Vec<u32>;

/// Graded-lex comparison: lower total degree first, then lexicographically
/// larger exponent vectors first (`x1^2` before `x1*x2` before `x2^2`).
pub fn graded_lex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// A sparse polynomial in `x_1..x_n` with coefficients in ℤ[t].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, PolyT>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::monomial(vec![0; nvars], PolyT::one())
    }

    pub fn monomial(exps: Exponents, coeff: PolyT) -> Self {
        let mut p = MultiPoly::zero(exps.len());
        p.add_term(exps, &coeff);
        p
    }

    /// The variable `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        MultiPoly::monomial(e, PolyT::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> PolyT {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Terms in canonical graded-lex order.
    pub fn terms(&self) -> Vec<(&Exponents, &PolyT)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_lex(a.0, b.0));
        v
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: &PolyT) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &PolyT) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), &(k * c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(MultiPoly::one(self.nvars), |acc, _| &acc * self)
    }

    /// Substitute `t = 0`.
    pub fn at_t_zero(&self) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &PolyT::constant(c.constant_term()));
        }
        out
    }

    /// Substitute `x_i = 1` for all `i`.
    pub fn at_x_ones(&self) -> PolyT {
        self.terms.values().fold(PolyT::zero(), |acc, c| &acc + c)
    }

    /// Exchange variables `x_i` and `x_j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, j - 1);
            out.add_term(e, c);
        }
        out
    }

    /// Invariant under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// Drop terms of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product truncated at total degree `d`.
    pub fn mul_truncated(&self, rhs: &MultiPoly, d: u32) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &rhs.terms {
                if da + eb.iter().sum::<u32>() > d {
                    continue;
                }
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    /// Renders with custom variable names (one per variable).
    pub fn to_string_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { names[i].clone() } else { format!("{}^{p}", names[i]) })
                .collect();
            let mono = mono.join("*");
            let (neg, s) = match c.as_single_term() {
                Some((te, tc)) => {
                    let mut factors = Vec::new();
                    let mag = tc.abs();
                    if !mag.is_one() || (te == 0 && mono.is_empty()) {
                        factors.push(mag.to_string());
                    }
                    match te {
                        0 => {}
                        1 => factors.push("t".to_string()),
                        _ => factors.push(format!("t^{te}")),
                    }
                    if !mono.is_empty() {
                        factors.push(mono);
                    }
                    (tc.is_negative(), factors.join("*"))
                }
                None if mono.is_empty() => (false, format!("({c})")),
                None => (false, format!("({c})*{mono}")),
            };
            match (k, neg) {
                (0, true) => out.push_str(&format!("-{s}")),
                (0, false) => out.push_str(&s),
                (_, true) => out.push_str(&format!(" - {s}")),
                (_, false) => out.push_str(&format!(" + {s}")),
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.to_string_with(&names))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&PolyT::constant(-1))
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        self.mul_truncated(rhs, u32::MAX)
    }
}
