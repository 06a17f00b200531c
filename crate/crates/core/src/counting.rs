//! Dimensions of homogeneous invariants and the Poincaré series.
//!
//! The degree-`n` invariants are spanned by the eigen-monomials of weight
//! zero, so `dim = #{multisets of n eigen-symbols with Σ s = 0}`. The count
//! is extracted exactly from a degree × weight table.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kravchuk::multiplicity;

/// `γ_d(n, k)`: the number of degree-`n` eigen-monomials of weight `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub d: u32,
    pub max_degree: u32,
    rows: Vec<Vec<BigUint>>,
}

impl WeightTable {
    fn offset(&self) -> i64 {
        self.d as i64 * self.max_degree as i64
    }

    /// `γ_d(n, k)`, zero outside the table.
    pub fn get(&self, n: u32, k: i64) -> BigUint {
        if n > self.max_degree || k.abs() > self.offset() {
            return BigUint::zero();
        }
        self.rows[n as usize][(k + self.offset()) as usize].clone()
    }

    /// All weights `−d·n ..= d·n` of degree `n`, ascending.
    pub fn row(&self, n: u32) -> &[BigUint] {
        &self.rows[n as usize]
    }
}

/// Multiset DP over the eigen-symbols of `W_d`, degrees `0..=max_degree`.
pub fn weight_table(d: u32, max_degree: u32) -> Result<WeightTable> {
    if d < 2 {
        return Err(Error::Domain("counting needs d >= 2"));
    }
    let offset = (d * max_degree) as i64;
    let width = 2 * offset as usize + 1;
    let mut rows = vec![vec![BigUint::zero(); width]; max_degree as usize + 1];
    rows[0][offset as usize] = BigUint::one();

    // every weight s appears l_|s| times; each copy is an unbounded item
    let mut weights = Vec::new();
    for s in -(d as i64)..=d as i64 {
        for _ in 0..multiplicity(d, s.unsigned_abs() as u32) {
            weights.push(s);
        }
    }
    for s in weights {
        for n in 1..=max_degree as usize {
            let (lower, upper) = rows.split_at_mut(n);
            let src = &lower[n - 1];
            let dst = &mut upper[0];
            for (idx, c) in src.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let target = idx as i64 + s;
                if (0..width as i64).contains(&target) {
                    dst[target as usize] += c;
                }
            }
        }
    }
    Ok(WeightTable {
        d,
        max_degree,
        rows,
    })
}

/// Dimension of the degree-`n` homogeneous rotation invariants of `W_d`.
pub fn dim_invariants(d: u32, n: u32) -> Result<BigUint> {
    Ok(weight_table(d, n)?.get(n, 0))
}

/// Coefficients `c_0..=c_N` of the Poincaré series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareData {
    pub d: u32,
    pub coefficients: Vec<BigUint>,
}

pub fn poincare_series(d: u32, terms: u32) -> Result<PoincareData> {
    let table = weight_table(d, terms)?;
    let coefficients = (0..=terms).map(|n| table.get(n, 0)).collect();
    Ok(PoincareData { d, coefficients })
}

/// Numerator (ascending powers) and the exponents `k` of the denominator
/// factors `(1 − z^k)` of the known closed forms.
fn closed_form(d: u32) -> Result<(Vec<i64>, Vec<u32>)> {
    match d {
        3 => Ok((
            vec![1, 0, 1, 3, 4, 4, 4, 3, 1, 0, 1],
            vec![3, 5, 4, 2, 2, 1],
        )),
        4 => Ok((
            vec![
                1, 0, 5, 13, 33, 63, 112, 174, 252, 331, 400, 445, 464, 445, 400, 331, 252, 174,
                112, 63, 33, 13, 5, 0, 1,
            ],
            vec![3, 3, 3, 5, 5, 7, 4, 2, 2, 1, 1],
        )),
        _ => Err(Error::Unsupported("closed forms are known for d = 3 and d = 4 only")),
    }
}

/// Power series of the closed form, `terms + 1` coefficients.
pub fn closed_form_series(d: u32, terms: u32) -> Result<Vec<BigInt>> {
    let (numerator, factors) = closed_form(d)?;
    let len = terms as usize + 1;
    let mut series: Vec<BigInt> = (0..len)
        .map(|i| BigInt::from(numerator.get(i).copied().unwrap_or(0)))
        .collect();
    // divide by each (1 − z^k): s_i += s_{i−k}
    for k in factors {
        let k = k as usize;
        for i in k..len {
            let prev = series[i - k].clone();
            series[i] += prev;
        }
    }
    Ok(series)
}

/// Whether the closed form expands to the computed series up to `terms`.
pub fn closed_form_check(d: u32, terms: u32) -> Result<bool> {
    let expected = closed_form_series(d, terms)?;
    let computed = poincare_series(d, terms)?;
    Ok(expected
        .iter()
        .zip(&computed.coefficients)
        .all(|(e, c)| e == &BigInt::from(c.clone())))
}
