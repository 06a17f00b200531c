//! Exact polynomial algebra on the coefficient space `W_d = V_2 ⊕ … ⊕ V_d`
//! and the rotation derivation `D(a[p,q]) = q·a[p+1,q−1] − p·a[p−1,q+1]`.

mod gaussian;
mod poly;
mod rotation;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

pub use gaussian::GaussianRational;
pub use poly::{Monomial, SparsePoly, Var};
pub use rotation::rotate_moment_vector;

use crate::error::{Error, Result};
use crate::kravchuk::{eigenvector, multiplicity};
use crate::monoid::ExponentVector;

/// Matrix of `D` on `V_d` in the basis `a[d−j, j]`, `j = 0..=d`.
///
/// `entries[r][c]` is the coefficient of basis element `r` in `D(basis c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationMatrix {
    pub d: u32,
    pub entries: Vec<Vec<i64>>,
}

impl DerivationMatrix {
    pub fn trace(&self) -> i64 {
        (0..self.entries.len()).map(|i| self.entries[i][i]).sum()
    }

    /// Matrix-vector product over `ℚ(i)`.
    pub fn apply(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(m, _)| **m != 0)
                    .fold(GaussianRational::default(), |acc, (m, x)| {
                        &acc + &(&GaussianRational::from(*m) * x)
                    })
            })
            .collect()
    }
}

pub fn build_matrix(d: u32) -> Result<DerivationMatrix> {
    if d < 1 {
        return Err(Error::Domain("derivation matrix needs d >= 1"));
    }
    let n = d as usize;
    let mut entries = vec![vec![0i64; n + 1]; n + 1];
    for c in 0..=n {
        // D(a[d−c, c]) = c·a[d−c+1, c−1] − (d−c)·a[d−c−1, c+1]
        if c > 0 {
            entries[c - 1][c] = c as i64;
        }
        if c < n {
            entries[c + 1][c] = -((n - c) as i64);
        }
    }
    Ok(DerivationMatrix { d, entries })
}

fn derivation_image(v: Var) -> SparsePoly {
    let mut out = SparsePoly::zero();
    if v.j > 0 {
        out.add_term(Monomial::var(Var::new(v.k + 1, v.j - 1)), (v.j as i64).into());
    }
    if v.k > 0 {
        out.add_term(Monomial::var(Var::new(v.k - 1, v.j + 1)), (-(v.k as i64)).into());
    }
    out
}

fn check_range(f: &SparsePoly, d: u32) -> Result<()> {
    match f.variables().find(|v| v.order() < 2 || v.order() > d) {
        Some(v) => Err(Error::VariableOutOfRange { k: v.k, j: v.j, d }),
        None => Ok(()),
    }
}

/// Image of `f` under the derivation on `ℂ[W_d]`.
pub fn apply_d(f: &SparsePoly, d: u32) -> Result<SparsePoly> {
    check_range(f, d)?;
    let mut images: BTreeMap<Var, SparsePoly> = BTreeMap::new();
    let mut out = SparsePoly::zero();
    for (m, c) in f.terms() {
        for &(v, _) in m.factors() {
            let image = images.entry(v).or_insert_with(|| derivation_image(v));
            let (e, rest) = m.lower(v).expect("variable present in its own monomial");
            let coeff = c * &GaussianRational::from(e as i64);
            for (im, ic) in image.terms() {
                out.add_term(rest.mul(im), &coeff * ic);
            }
        }
    }
    Ok(out)
}

pub fn is_invariant(f: &SparsePoly, d: u32) -> Result<bool> {
    Ok(apply_d(f, d)?.is_zero())
}

/// Product of eigenforms `Π e_n(s·i)^k`, expanded in the `a` variables.
pub fn expand_monomial(m: &ExponentVector, d: u32) -> Result<SparsePoly> {
    let mut out = SparsePoly::one();
    for (sym, e) in m.iter() {
        if sym.n > d {
            return Err(Error::Domain("eigen-symbol order exceeds d"));
        }
        let form = eigenvector(sym.n, sym.s)?.to_poly();
        out = &out * &form.pow(e);
    }
    Ok(out)
}

/// `Char(W_d)`: weight `k ↦ l_{|k|}` for `−d ≤ k ≤ d`.
pub fn character(d: u32) -> Result<BTreeMap<i32, u32>> {
    if d < 2 {
        return Err(Error::Domain("character needs d >= 2"));
    }
    let d = d as i32;
    Ok((-d..=d)
        .map(|k| (k, multiplicity(d as u32, k.unsigned_abs())))
        .filter(|&(_, l)| l > 0)
        .collect())
}

/// `dim W_d = (d + 4)(d − 1)/2`.
pub fn dim_w(d: u32) -> u32 {
    (d + 4) * (d - 1) / 2
}

/// All coordinate variables of `W_d`, in canonical variable order.
pub fn variables(d: u32) -> Vec<Var> {
    let mut vars: Vec<Var> = (2..=d)
        .flat_map(|n| (0..=n).map(move |j| Var::new(n - j, j)))
        .collect();
    vars.sort();
    vars
}
