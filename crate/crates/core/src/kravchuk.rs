//! Binary Kravchuk polynomials and the eigenforms of the rotation derivation.
//!
//! On binary forms of order `n` the infinitesimal rotation acts on the
//! coordinates `a[n−j, j]` with eigenvalues `s·i`, `s ∈ {−n, −n+2, …, n}`.
//! The eigenform for `s·i` has coefficient `i^j · K_j((n − s)/2, n)` on
//! `a[n−j, j]`, where `K_j(x, a) = Σ_k (−1)^k C(x,k) C(a−x, j−k)`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symbolic::{GaussianRational, SparsePoly, Var};

/// `C(x, j)` as the falling-factorial polynomial `x(x−1)…(x−j+1)/j!`,
/// defined for every integer `x`.
pub fn binomial(x: i64, j: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j as i64 {
        num *= BigInt::from(x - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// Binary Kravchuk polynomial `K_j(x, a)`.
pub fn kravchuk(j: u32, x: i64, a: i64) -> BigInt {
    (0..=j).fold(BigInt::zero(), |acc, k| {
        let term = binomial(x, k) * binomial(a - x, j - k);
        if k % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Weights `s` of the spectrum `{s·i}` on forms of order `d`, ascending.
pub fn spectrum(d: u32) -> Result<Vec<i32>> {
    if d < 1 {
        return Err(Error::Domain("spectrum needs d >= 1"));
    }
    let d = d as i32;
    Ok((0..=d).map(|t| -d + 2 * t).collect())
}

/// Label of the eigenform `e_n(s·i)`.
///
/// The derived order (`n`, then `s`) is the canonical symbol order used for
/// weight vectors and exponent vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenSymbol {
    pub n: u32,
    pub s: i32,
}

impl EigenSymbol {
    pub fn new(n: u32, s: i32) -> Result<Self> {
        let sym = Self { n, s };
        if n >= 1 && s.unsigned_abs() <= n && (n as i32 - s) % 2 == 0 {
            Ok(sym)
        } else {
            Err(Error::invalid_eigen(sym))
        }
    }

    /// The symbol of the conjugate eigenform `e_n(−s·i)`.
    pub fn conj(self) -> Self {
        Self { n: self.n, s: -self.s }
    }

    /// Short name in the `x_{ns}` / `y_{ns}` notation, e.g. `x31`, `y22`, `x40`.
    pub fn short_name(self) -> alloc::string::String {
        let prefix = if self.s < 0 { 'y' } else { 'x' };
        alloc::format!("{prefix}{}{}", self.n, self.s.unsigned_abs())
    }
}

impl fmt::Display for EigenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s {
            0 => write!(f, "e_{}(0)", self.n),
            1 => write!(f, "e_{}(i)", self.n),
            -1 => write!(f, "e_{}(-i)", self.n),
            s => write!(f, "e_{}({}i)", self.n, s),
        }
    }
}

/// A linear form `Σ_j c_j · a[n−j, j]`; `coefficients[j]` multiplies `a[n−j, j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub order: u32,
    pub coefficients: Vec<GaussianRational>,
}

impl LinearForm {
    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::linear(self.order, &self.coefficients)
    }

    pub fn conj(&self) -> Self {
        Self {
            order: self.order,
            coefficients: self.coefficients.iter().map(GaussianRational::conj).collect(),
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = Var> {
        let n = self.order;
        (0..=n).map(move |j| Var::new(n - j, j))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// The eigenform `e_n(s·i)`, normalized so the coefficient of `a[n,0]` is 1.
pub fn eigenvector(n: u32, s: i32) -> Result<LinearForm> {
    let sym = EigenSymbol::new(n, s)?;
    let x = (n as i64 - sym.s as i64) / 2;
    let coefficients = (0..=n)
        .map(|j| {
            let k = kravchuk(j, x, n as i64);
            &GaussianRational::i_pow(j as i64) * &GaussianRational::from_bigint(k)
        })
        .collect();
    Ok(LinearForm { order: n, coefficients })
}

/// Complex moment `c_{p,q}`, which is the eigenform `e_{p+q}((p−q)·i)`.
pub fn complex_moment_form(p: u32, q: u32) -> Result<LinearForm> {
    if p + q == 0 {
        return Err(Error::Domain("complex moment c_{0,0} is excluded"));
    }
    eigenvector(p + q, p as i32 - q as i32)
}

/// Number of orders `n ∈ 2..=d` whose spectrum contains weight `s`.
pub fn multiplicity(d: u32, s: u32) -> u32 {
    (2..=d).filter(|&n| s <= n && (n - s) % 2 == 0).count() as u32
}

/// `e_{2j}(0) = Σ_k C(j,k) a[2j−2k, 2k]`.
pub fn zero_weight_closed_form(j: u32) -> Result<SparsePoly> {
    if j == 0 {
        return Err(Error::Domain("zero-weight closed form needs j >= 1"));
    }
    let mut p = SparsePoly::zero();
    for k in 0..=j {
        let term = SparsePoly::var(Var::new(2 * j - 2 * k, 2 * k))
            .scale(&GaussianRational::from_bigint(binomial(j as i64, k)));
        p = &p + &term;
    }
    Ok(p)
}

/// `e_n(s·i)·e_n(−s·i)` written as `A² + B²`, with `A` and `B` the real
/// and imaginary parts of the eigenform (both real Kravchuk combinations).
pub fn pair_product_closed_form(n: u32, s: i32) -> Result<SparsePoly> {
    let sym = EigenSymbol::new(n, s)?;
    if s <= 0 {
        return Err(Error::invalid_eigen(sym));
    }
    let x = (n as i64 - s as i64) / 2;
    let sign = |j: u32| {
        if j % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let mut even = SparsePoly::zero();
    let mut odd = SparsePoly::zero();
    for j in 0..=n / 2 {
        if 2 * j <= n {
            let c = sign(j) * kravchuk(2 * j, x, n as i64);
            even = &even
                + &SparsePoly::var(Var::new(n - 2 * j, 2 * j)).scale(&GaussianRational::from_bigint(c));
        }
        if 2 * j < n {
            let c = sign(j) * kravchuk(2 * j + 1, x, n as i64);
            odd = &odd
                + &SparsePoly::var(Var::new(n - 2 * j - 1, 2 * j + 1))
                    .scale(&GaussianRational::from_bigint(c));
        }
    }
    Ok(&(&even * &even) + &(&odd * &odd))
}
