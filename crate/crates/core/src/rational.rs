//! A transcendence basis of the rational rotation invariants.
//!
//! For an anchor `(p, q)` with `q > 0` the set is
//! `{ e_2j(0) } ∪ { e_n(si)·e_n(−si) } ∪ { e_n(si)^q · e_p(−qi)^s }`,
//! the last family over every `(n, s) ≠ (p, q)` with `s > 0`. It has
//! `dim W_d − 1` members, and the Jacobian check below certifies their
//! algebraic independence numerically.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::kravchuk::{complex_moment_form, eigenvector, spectrum, EigenSymbol};
use crate::moments::{evaluate_form, evaluate_invariant, MomentTable};
use crate::monoid::{AsMonomial, ExponentVector};
use crate::symbolic::{dim_w, expand_monomial, variables, GaussianRational, SparsePoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RationalKind {
    ZeroWeight,
    ConjugatePair,
    CrossPair,
}

impl RationalKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RationalKind::ZeroWeight => "zero_weight",
            RationalKind::ConjugatePair => "conjugate_pair",
            RationalKind::CrossPair => "cross_pair",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "zero_weight" => Some(RationalKind::ZeroWeight),
            "conjugate_pair" => Some(RationalKind::ConjugatePair),
            "cross_pair" => Some(RationalKind::CrossPair),
            _ => None,
        }
    }
}

impl fmt::Display for RationalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGenerator {
    pub kind: RationalKind,
    pub factors: ExponentVector,
    /// The symbol `(n, s)` the generator is built from.
    pub key: EigenSymbol,
}

impl RationalGenerator {
    pub fn degree(&self) -> u32 {
        self.factors.degree()
    }

    /// Short name such as `x31y31` or `x22y31^2`.
    pub fn short_name(&self) -> String {
        let mut factors: Vec<_> = self.factors.iter().collect();
        factors.sort_by_key(|(sym, _)| (sym.s < 0, sym.n));
        let mut out = String::new();
        for (sym, e) in factors {
            out.push_str(&sym.short_name());
            if e > 1 {
                out.push_str(&format!("^{e}"));
            }
        }
        out
    }
}

impl AsMonomial for RationalGenerator {
    fn exponents(&self) -> &ExponentVector {
        &self.factors
    }
}

/// `dim W_d − 1`.
pub fn count_rational(d: u32) -> Result<u32> {
    if d < 2 {
        return Err(Error::Domain("rational basis needs d >= 2"));
    }
    Ok(dim_w(d) - 1)
}

/// `(3, 1)` when `d ≥ 3`, otherwise `(2, 2)`.
pub fn default_anchor(d: u32) -> (u32, i32) {
    if d >= 3 {
        (3, 1)
    } else {
        (2, 2)
    }
}

fn check_anchor(d: u32, p: u32, q: i32) -> Result<EigenSymbol> {
    let bad = Error::InvalidAnchor { p, q };
    if p < 2 || p > d || q <= 0 {
        return Err(bad);
    }
    EigenSymbol::new(p, q).map_err(|_| bad)
}

/// The transcendence basis anchored at `e_p(qi)`, sorted by degree, kind,
/// order `n` and weight `s`.
pub fn rational_generators(d: u32, p: u32, q: i32) -> Result<Vec<RationalGenerator>> {
    count_rational(d)?;
    let anchor = check_anchor(d, p, q)?;
    let mut out = Vec::new();
    for j in 1..=d / 2 {
        let key = EigenSymbol { n: 2 * j, s: 0 };
        out.push(RationalGenerator {
            kind: RationalKind::ZeroWeight,
            factors: ExponentVector::from_pairs([(key, 1)]),
            key,
        });
    }
    for n in 2..=d {
        for s in spectrum(n)?.into_iter().filter(|&s| s > 0) {
            let key = EigenSymbol { n, s };
            out.push(RationalGenerator {
                kind: RationalKind::ConjugatePair,
                factors: ExponentVector::from_pairs([(key, 1), (key.conj(), 1)]),
                key,
            });
            if key != anchor {
                out.push(RationalGenerator {
                    kind: RationalKind::CrossPair,
                    factors: ExponentVector::from_pairs([
                        (key, anchor.s as u32),
                        (anchor.conj(), s as u32),
                    ]),
                    key,
                });
            }
        }
    }
    out.sort_by_key(|g| (g.degree(), g.kind, g.key.n, g.key.s));
    Ok(out)
}

/// `∂g/∂a` for `g = Π f_k^e_k` at the point `a`, one entry per variable.
fn gradient(g: &ExponentVector, vars: &[Var], at: &BTreeMap<Var, f64>) -> Result<Vec<Complex64>> {
    let forms: Vec<(Vec<Complex64>, u32, u32)> = g
        .iter()
        .map(|(sym, e)| {
            let form = eigenvector(sym.n, sym.s)?;
            let coeffs = form
                .coefficients
                .iter()
                .map(|c| {
                    let (re, im) = c.to_f64_pair();
                    Complex64::new(re, im)
                })
                .collect();
            Ok((coeffs, sym.n, e))
        })
        .collect::<Result<_>>()?;
    let values: Vec<Complex64> = forms
        .iter()
        .map(|(coeffs, n, _)| {
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * at[&Var::new(n - j as u32, j as u32)])
                .sum()
        })
        .collect();
    let mut grad = Vec::with_capacity(vars.len());
    for v in vars {
        let mut total = Complex64::zero();
        for (k, (coeffs, n, e)) in forms.iter().enumerate() {
            if v.k + v.j != *n {
                continue;
            }
            let dk = coeffs[v.j as usize];
            let mut term = dk * Complex64::from(*e as f64) * values[k].powu(e - 1);
            for (i, (_, _, ei)) in forms.iter().enumerate() {
                if i != k {
                    term *= values[i].powu(*ei);
                }
            }
            total += term;
        }
        grad.push(total);
    }
    Ok(grad)
}

/// Numeric rank of the Jacobian of `gens` (rows) with respect to every
/// coordinate of `W_d` (columns) at `point`, ordered as [`variables`].
pub fn jacobian_rank<G: AsMonomial>(gens: &[G], d: u32, point: &[f64]) -> Result<usize> {
    let vars = variables(d);
    if point.len() != vars.len() {
        return Err(Error::Domain("point dimension must equal dim W_d"));
    }
    for g in gens {
        if g.exponents().max_order() > d {
            return Err(Error::Domain("generator order exceeds d"));
        }
    }
    let at: BTreeMap<Var, f64> = vars.iter().copied().zip(point.iter().copied()).collect();
    let mut rows = Vec::with_capacity(gens.len() * vars.len());
    for g in gens {
        rows.extend(gradient(g.exponents(), &vars, &at)?);
    }
    if gens.is_empty() {
        return Ok(0);
    }
    let jac = DMatrix::from_row_slice(gens.len(), vars.len(), &rows);
    let sv = jac.singular_values();
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&s| s > 1e-8 * max).count())
}

/// Whether the Jacobian has rank `dim W_d − 1` at `trials` random points
/// with coordinates uniform in `[−1, 1]`.
pub fn independence_check<G: AsMonomial, R: Rng + ?Sized>(
    gens: &[G],
    d: u32,
    trials: u32,
    rng: &mut R,
) -> Result<bool> {
    let expected = count_rational(d)? as usize;
    let n = variables(d).len();
    for _ in 0..trials {
        let point: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        if jacobian_rank(gens, d, &point)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Values `b1, b2, …` of the generators on a normalized moment table.
pub fn beta_values(gens: &[RationalGenerator], eta: &MomentTable) -> Result<BTreeMap<String, Complex64>> {
    gens.iter()
        .enumerate()
        .map(|(i, g)| Ok((format!("b{}", i + 1), evaluate_invariant(g, eta)?)))
        .collect()
}

fn beta(b: &BTreeMap<String, Complex64>, i: usize) -> Result<Complex64> {
    b.get(&format!("b{i}"))
        .copied()
        .ok_or(Error::Domain("missing beta value; need b1..b11"))
}

/// The eleven Flusser invariants `phi1..phi11` from the `d = 4` basis
/// anchored at `(3, 1)`, keyed `b1..b11`.
pub fn phi_from_beta(b: &BTreeMap<String, Complex64>) -> Result<BTreeMap<String, Complex64>> {
    let mut vals = [Complex64::zero(); 12];
    for (i, v) in vals.iter_mut().enumerate().skip(1) {
        *v = beta(b, i)?;
    }
    for (i, name) in [(8, "b8"), (9, "b9"), (10, "b10"), (11, "b11")] {
        if vals[i].is_zero() {
            return Err(Error::DegenerateShape(name));
        }
    }
    let half = Complex64::new(0.5, 0.0);
    let half_i = Complex64::new(0.0, 0.5);
    // conj(b8) = b3·b4²/b8 and so on, on real tables
    let c8 = vals[3] * vals[4].powu(2) / vals[8];
    let c9 = vals[6] * vals[4].powu(2) / vals[9];
    let c10 = vals[5] * vals[4].powu(3) / vals[10];
    let c11 = vals[7] * vals[4].powu(4) / vals[11];
    let phi = [
        vals[1],
        vals[4],
        half * (c8 + vals[8]),
        half_i * (c8 - vals[8]),
        half * (c10 + vals[10]),
        half_i * (c10 - vals[10]),
        vals[2],
        half * (c9 + vals[9]),
        half_i * (c9 - vals[9]),
        half * (c11 + vals[11]),
        half_i * (c11 - vals[11]),
    ];
    Ok(phi
        .iter()
        .enumerate()
        .map(|(i, v)| (format!("phi{}", i + 1), *v))
        .collect())
}

/// The same eleven invariants straight from complex moments `c_pq`.
pub fn phi_direct(eta: &MomentTable) -> Result<BTreeMap<String, Complex64>> {
    let c = |p: u32, q: u32| -> Result<Complex64> { evaluate_form(&complex_moment_form(p, q)?, eta) };
    let c12 = c(1, 2)?;
    let p3 = c(2, 0)? * c12.powu(2);
    let p5 = c(3, 0)? * c12.powu(3);
    let p8 = c(3, 1)? * c12.powu(2);
    let p10 = c(4, 0)? * c12.powu(4);
    let real = |z: Complex64| Complex64::new(z.re, 0.0);
    let imag = |z: Complex64| Complex64::new(z.im, 0.0);
    let phi = [
        c(1, 1)?,
        c(2, 1)? * c12,
        real(p3),
        imag(p3),
        real(p5),
        imag(p5),
        c(2, 2)?,
        real(p8),
        imag(p8),
        real(p10),
        imag(p10),
    ];
    Ok(phi
        .iter()
        .enumerate()
        .map(|(i, v)| (format!("phi{}", i + 1), *v))
        .collect())
}

/// Hu's `h5`, `h6`, `h7` as real polynomials on `W_3`.
pub fn hu_classical() -> Result<[SparsePoly; 3]> {
    let form = |s: i32| eigenvector(3, s).map(|f| f.to_poly());
    let x1 = form(1)?;
    let y1 = form(-1)?;
    let x3 = form(3)?;
    let y3 = form(-3)?;
    let x2 = eigenvector(2, 2)?.to_poly();
    let y2 = eigenvector(2, -2)?.to_poly();
    let half = GaussianRational::new(
        num_rational::BigRational::new(1.into(), 2.into()),
        num_rational::BigRational::zero(),
    );
    let minus_half_i = GaussianRational::new(
        num_rational::BigRational::zero(),
        num_rational::BigRational::new((-1).into(), 2.into()),
    );
    let a = &x1.pow(3) * &y3;
    let b = &x3 * &y1.pow(3);
    let h5 = (&a + &b).scale(&half);
    let h6 = (&(&x1.pow(2) * &y2) + &(&x2 * &y1.pow(2))).scale(&half);
    let h7 = (&b - &a).scale(&minus_half_i);
    Ok([h5, h6, h7])
}

/// Expanded generator polynomials, for symbolic certification.
pub fn expand_generators(gens: &[RationalGenerator], d: u32) -> Result<Vec<SparsePoly>> {
    gens.iter().map(|g| expand_monomial(&g.factors, d)).collect()
}
