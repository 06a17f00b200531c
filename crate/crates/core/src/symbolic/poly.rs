//! Sparse polynomials over `ℚ(i)` in the coefficient variables `a[k,j]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use crate::error::Error;

/// The coordinate function `a[k,j]` on binary forms of order `k + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    pub k: u32,
    pub j: u32,
}

impl Var {
    pub const fn new(k: u32, j: u32) -> Self {
        Self { k, j }
    }

    pub const fn order(self) -> u32 {
        self.k + self.j
    }
}

/// Higher order first, then higher `k` first: `a[3,0] < a[2,1] < … < a[0,3] < a[2,0]`.
impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        (other.order(), other.k).cmp(&(self.order(), self.k))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.k, self.j)
    }
}

/// A power product of variables, kept sorted with strictly positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Self(alloc::vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|idx| self.0[idx].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    /// Divides out one power of `v`; returns the previous exponent.
    pub(crate) fn lower(&self, v: Var) -> Option<(u32, Monomial)> {
        let idx = self.0.binary_search_by(|(w, _)| w.cmp(&v)).ok()?;
        let e = self.0[idx].1;
        let mut rest = self.0.clone();
        if e == 1 {
            rest.remove(idx);
        } else {
            rest[idx].1 -= 1;
        }
        Some((e, Monomial(rest)))
    }
}

/// Graded lexicographic: larger total degree first, then larger exponent on
/// the earliest variable first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match other.degree().cmp(&self.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (&(va, ea), &(vb, eb)) in self.0.iter().zip(other.0.iter()) {
            match va.cmp(&vb) {
                Ordering::Equal => match eb.cmp(&ea) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
                ord => return ord,
            }
        }
        other.0.len().cmp(&self.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (v, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with Gaussian-rational coefficients. Zero coefficients are
/// never stored, so the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), GaussianRational::one());
        p
    }

    /// `Σ c_j · a[n−j, j]`.
    pub fn linear(order: u32, coefficients: &[GaussianRational]) -> Self {
        let mut p = Self::zero();
        for (j, c) in coefficients.iter().enumerate() {
            let j = j as u32;
            p.add_term(Monomial::var(Var::new(order - j, j)), c.clone());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> impl Iterator<Item = Var> + '_ {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `∂/∂v`.
    pub fn partial(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.lower(v) {
                out.add_term(rest, c * &GaussianRational::from(e as i64));
            }
        }
        out
    }

    /// Floating-point evaluation; `value(v)` supplies each variable.
    pub fn eval_with<F>(&self, mut value: F) -> Complex64
    where
        F: FnMut(Var) -> Complex64,
    {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let (re, im) = c.to_f64_pair();
            let mut t = Complex64::new(re, im);
            for &(v, e) in m.factors() {
                t *= value(v).powu(e);
            }
            acc += t;
        }
        acc
    }
}

impl<'a> Add<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: SparsePoly) -> SparsePoly {
        &self + &rhs
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: SparsePoly) -> SparsePoly {
        &self - &rhs
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&GaussianRational::from(-1))
    }
}

/// Canonical text: `coef * a[k,j]^e * … + …`, terms in graded lex order.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} * {m}")?;
            }
        }
        Ok(())
    }
}

fn parse_var(tok: &str) -> Result<(Var, u32), Error> {
    let bad = || Error::Parse(format!("bad factor `{tok}`"));
    let (head, exp) = match tok.split_once('^') {
        Some((h, e)) => (h, e.parse::<u32>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    let inner = head
        .strip_prefix("a[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (k, j) = inner.split_once(',').ok_or_else(bad)?;
    let k = k.trim().parse().map_err(|_| bad())?;
    let j = j.trim().parse().map_err(|_| bad())?;
    Ok((Var::new(k, j), exp))
}

impl FromStr for SparsePoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut out = SparsePoly::zero();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let mut parts = term.split(" * ");
            let head = parts
                .next()
                .ok_or_else(|| Error::Parse(String::from("empty term")))?;
            let (coef, first_var) = if head.starts_with("a[") {
                (GaussianRational::one(), Some(parse_var(head)?))
            } else {
                (head.parse::<GaussianRational>()?, None)
            };
            let vars = first_var
                .into_iter()
                .map(Ok)
                .chain(parts.map(parse_var))
                .collect::<Result<Vec<_>, _>>()?;
            out.add_term(Monomial::from_pairs(vars), coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn a(k: u32, j: u32) -> SparsePoly {
        SparsePoly::var(Var::new(k, j))
    }

    #[test]
    fn variable_order_is_graded_descending() {
        let mut vars = alloc::vec![Var::new(0, 2), Var::new(3, 0), Var::new(1, 1), Var::new(0, 3)];
        vars.sort();
        assert_eq!(
            vars,
            alloc::vec![Var::new(3, 0), Var::new(0, 3), Var::new(1, 1), Var::new(0, 2)]
        );
    }

    #[test]
    fn square_of_difference() {
        let d = &a(2, 0) - &a(0, 2);
        let sq = &d * &d;
        assert_eq!(
            sq.to_string(),
            "1 * a[2,0]^2 + -2 * a[2,0] * a[0,2] + 1 * a[0,2]^2"
        );
        assert_eq!(sq.degree(), 2);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &a(2, 1) - &a(2, 1);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn parse_accepts_display() {
        let p = (&a(3, 0) + &a(1, 1).scale(&GaussianRational::from_ints(1, -2))).pow(3);
        let txt = p.to_string();
        let back: SparsePoly = txt.parse().unwrap();
        assert_eq!(back, p);
        let q: SparsePoly = "a[2,0] * a[1,1]^2 + 3".parse().unwrap();
        assert_eq!(q, &(&a(2, 0) * &a(1, 1).pow(2)) + &SparsePoly::constant(3.into()));
    }

    #[test]
    fn partial_derivative() {
        let p = &a(2, 0).pow(3) * &a(1, 1);
        let dp = p.partial(Var::new(2, 0));
        assert_eq!(dp, (&a(2, 0).pow(2) * &a(1, 1)).scale(&3.into()));
        assert!(p.partial(Var::new(0, 2)).is_zero());
    }
}
