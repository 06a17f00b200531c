//! Hilbert bases of zero-weight exponent monoids.
//!
//! A product `Π e_n(s·i)^k` is invariant exactly when `Σ k·s = 0`, so the
//! polynomial invariants of `W_d` form the monoid algebra of
//! `{k ∈ ℕ^N : Σ k_i w_i = 0}`. Its minimal generating set is computed with
//! a Contejean–Devie completion: candidates grow one unit at a time, only in
//! directions that move the weight defect towards zero, and any candidate
//! dominating a known solution is dropped.

use alloc::collections::btree_map;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::kravchuk::{spectrum, EigenSymbol};

/// Guard on the completion search depth.
pub const DEFAULT_DEGREE_CAP: u32 = 32;

/// Exponents of eigen-symbols in a monomial; zero exponents are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector(BTreeMap<EigenSymbol, u32>);

impl ExponentVector {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (EigenSymbol, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (sym, e) in pairs {
            if e > 0 {
                *map.entry(sym).or_insert(0) += e;
            }
        }
        Self(map)
    }

    /// Sparse view of a dense vector over `symbols`.
    pub fn from_dense(symbols: &[EigenSymbol], dense: &[u32]) -> Self {
        Self::from_pairs(symbols.iter().copied().zip(dense.iter().copied()))
    }

    pub fn to_dense(&self, symbols: &[EigenSymbol]) -> Vec<u32> {
        symbols.iter().map(|s| self.exponent(*s)).collect()
    }

    pub fn exponent(&self, sym: EigenSymbol) -> u32 {
        self.0.get(&sym).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (EigenSymbol, u32)> + '_ {
        self.0.iter().map(|(s, e)| (*s, *e))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    /// `Σ exponent · s`.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|(s, e)| s.s as i64 * *e as i64).sum()
    }

    pub fn max_order(&self) -> u32 {
        self.0.keys().map(|s| s.n).max().unwrap_or(0)
    }

    /// Image under `s ↦ −s` on every symbol.
    pub fn conj(&self) -> Self {
        Self(self.0.iter().map(|(s, e)| (s.conj(), *e)).collect())
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().all(|(s, e)| other.exponent(*s) >= *e)
    }

    pub fn symbols(&self) -> btree_map::Keys<'_, EigenSymbol, u32> {
        self.0.keys()
    }
}

/// Degree first, then larger exponent on the earlier symbol first.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for ((sa, ea), (sb, eb)) in self.0.iter().zip(other.0.iter()) {
                let ord = sa.cmp(sb).then_with(|| eb.cmp(ea));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            other.0.len().cmp(&self.0.len())
        })
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `e_3(i)^2 * e_2(-2i)`; the empty product prints as `1`.
impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (idx, (s, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Anything that evaluates as a product of eigenforms.
pub trait AsMonomial {
    fn exponents(&self) -> &ExponentVector;
}

impl AsMonomial for ExponentVector {
    fn exponents(&self) -> &ExponentVector {
        self
    }
}

/// The eigen-symbols of `W_d` with their weights, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub d: u32,
    pub symbols: Vec<EigenSymbol>,
}

impl WeightVector {
    pub fn weights(&self) -> Vec<i64> {
        self.symbols.iter().map(|s| s.s as i64).collect()
    }
}

/// Every `(n, s)` with `2 ≤ n ≤ d`, `s ∈ spectrum(n)`, zero weights included.
pub fn generating_vector(d: u32) -> Result<WeightVector> {
    if d < 2 {
        return Err(Error::Domain("generating vector needs d >= 2"));
    }
    let mut symbols = Vec::new();
    for n in 2..=d {
        for s in spectrum(n)? {
            symbols.push(EigenSymbol { n, s });
        }
    }
    Ok(WeightVector { d, symbols })
}

/// Minimal nonzero solutions of `Σ x_i w_i = 0` over `ℕ`, sorted by degree
/// then lexicographically descending.
pub fn hilbert_basis_of_weights(weights: &[i64], degree_cap: u32) -> Result<Vec<Vec<u32>>> {
    let dim = weights.len();
    let mut basis: Vec<Vec<u32>> = Vec::new();
    let mut frontier: Vec<(Vec<u32>, i64)> = Vec::new();
    for (i, &w) in weights.iter().enumerate() {
        let mut unit = alloc::vec![0u32; dim];
        unit[i] = 1;
        frontier.push((unit, w));
    }
    let mut degree = 1u32;
    while !frontier.is_empty() {
        if degree > degree_cap {
            return Err(Error::DegreeCapExceeded {
                cap: degree_cap,
                frontier: frontier.len(),
            });
        }
        frontier.sort_unstable();
        frontier.dedup();

        let prior = basis.len();
        let mut open = Vec::with_capacity(frontier.len());
        for (x, defect) in frontier.drain(..) {
            if dominates_any(&x, &basis[..prior]) {
                continue;
            }
            if defect == 0 {
                basis.push(x);
            } else {
                open.push((x, defect));
            }
        }

        let mut next = Vec::new();
        for (x, defect) in &open {
            for (j, &w) in weights.iter().enumerate() {
                if defect * w < 0 {
                    let mut y = x.clone();
                    y[j] += 1;
                    next.push((y, defect + w));
                }
            }
        }
        frontier = next;
        degree += 1;
    }
    basis.sort_by(|a, b| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    Ok(basis)
}

fn dominates_any(x: &[u32], basis: &[Vec<u32>]) -> bool {
    basis
        .iter()
        .any(|b| b.iter().zip(x).all(|(bi, xi)| bi <= xi))
}

/// Hilbert basis of the zero-weight monoid of `w`.
pub fn hilbert_basis(w: &WeightVector, degree_cap: u32) -> Result<Vec<ExponentVector>> {
    let dense = hilbert_basis_of_weights(&w.weights(), degree_cap)?;
    Ok(dense
        .iter()
        .map(|v| ExponentVector::from_dense(&w.symbols, v))
        .collect())
}

/// A member of the minimal generating set of the polynomial invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialGenerator {
    pub monomial: ExponentVector,
    pub degree: u32,
}

impl AsMonomial for PolynomialGenerator {
    fn exponents(&self) -> &ExponentVector {
        &self.monomial
    }
}

/// Minimal generating set of `ℂ[W_d]^{so2}` as eigen-monomials, sorted by
/// degree and canonical monomial order.
pub fn polynomial_generators(d: u32, degree_cap: u32) -> Result<Vec<PolynomialGenerator>> {
    let w = generating_vector(d)?;
    let mut out: Vec<PolynomialGenerator> = hilbert_basis(&w, degree_cap)?
        .into_iter()
        .map(|m| PolynomialGenerator {
            degree: m.degree(),
            monomial: m,
        })
        .collect();
    out.sort_by(|a, b| a.monomial.cmp(&b.monomial));
    Ok(out)
}
