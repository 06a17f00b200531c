use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::{normalized_from, rotate_point_cloud, rotate_raster, MomentTable, PointCloud, RasterImage};
use crate::error::{Error, Result};
use crate::kravchuk::{eigenvector, LinearForm};
use crate::monoid::AsMonomial;
use crate::rational::{rational_generators, RationalGenerator};
use crate::symbolic::SparsePoly;

/// `Σ_j c_j · η[n−j, j]`.
pub fn evaluate_form(form: &LinearForm, eta: &MomentTable) -> Result<Complex64> {
    let n = form.order;
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, c) in form.coefficients.iter().enumerate() {
        let j = j as u32;
        let (re, im) = c.to_f64_pair();
        acc += Complex64::new(re, im) * eta.get(n - j, j)?;
    }
    Ok(acc)
}

/// Product of eigenform values raised to their exponents.
pub fn evaluate_invariant<M: AsMonomial + ?Sized>(m: &M, eta: &MomentTable) -> Result<Complex64> {
    let mut acc = Complex64::new(1.0, 0.0);
    for (sym, e) in m.exponents().iter() {
        let v = evaluate_form(&eigenvector(sym.n, sym.s)?, eta)?;
        acc *= v.powu(e);
    }
    Ok(acc)
}

/// A polynomial in `a[k,j]` evaluated at `a[k,j] = η[k,j]`.
pub fn evaluate_poly(f: &SparsePoly, eta: &MomentTable) -> Result<Complex64> {
    for v in f.variables() {
        eta.get(v.k, v.j)?;
    }
    Ok(f.eval_with(|v| Complex64::new(eta.try_get(v.k, v.j).unwrap_or(0.0), 0.0)))
}

/// Worst deviation of one generator across the tested angles.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorDeviation {
    pub name: String,
    pub value: Complex64,
    /// `|Im(value)|`, nonzero only for complex-valued generators.
    pub im_residue: f64,
    pub max_relative_deviation: f64,
    /// The value is negligible next to the size of its factors.
    pub vanishing: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceReport {
    pub d: u32,
    pub anchor: (u32, i32),
    pub angles: Vec<f64>,
    pub generators: Vec<GeneratorDeviation>,
    pub max_relative_deviation: f64,
    /// Some generator vanishes on the input, so its relative deviation is
    /// measured against the size of its factors instead.
    pub degenerate: bool,
}

/// Upper bound for `|g(η)|` built from the block sizes of `η`.
fn magnitude_bound<M: AsMonomial + ?Sized>(m: &M, eta: &MomentTable) -> Result<f64> {
    let mut bound = 1.0;
    for (sym, e) in m.exponents().iter() {
        let form = eigenvector(sym.n, sym.s)?;
        let coeffs: f64 = form
            .coefficients
            .iter()
            .map(|c| {
                let (re, im) = c.to_f64_pair();
                libm::hypot(re, im)
            })
            .sum();
        bound *= libm::pow(coeffs * eta.block_norm(sym.n), e as f64);
    }
    Ok(bound)
}

const VANISHING: f64 = 1e-9;

fn compare(
    gens: &[RationalGenerator],
    base: &MomentTable,
    rotated: &[MomentTable],
) -> Result<(Vec<GeneratorDeviation>, f64, bool)> {
    let mut out = Vec::with_capacity(gens.len());
    let mut worst = 0.0f64;
    let mut degenerate = false;
    for (i, g) in gens.iter().enumerate() {
        let value = evaluate_invariant(g, base)?;
        let bound = magnitude_bound(g, base)?;
        let vanishing = value.norm() <= VANISHING * bound || bound == 0.0;
        let scale = if vanishing { bound } else { value.norm() };
        let mut dev = 0.0f64;
        for eta in rotated {
            let diff = (evaluate_invariant(g, eta)? - value).norm();
            let rel = if scale > 0.0 { diff / scale } else { diff };
            dev = dev.max(rel);
        }
        degenerate |= vanishing;
        worst = worst.max(dev);
        out.push(GeneratorDeviation {
            name: alloc::format!("b{}", i + 1),
            value,
            im_residue: value.im.abs(),
            max_relative_deviation: dev,
            vanishing,
        });
    }
    Ok((out, worst, degenerate))
}

/// Rotates the cloud exactly by each angle and compares every generator of
/// the basis anchored at `(p, q)`.
pub fn verify_invariance(
    src: &PointCloud,
    d: u32,
    p: u32,
    q: i32,
    angles: &[f64],
) -> Result<InvarianceReport> {
    if angles.is_empty() {
        return Err(Error::Domain("no angles given"));
    }
    let gens = rational_generators(d, p, q)?;
    let base = normalized_from(src, d)?;
    let rotated = angles
        .iter()
        .map(|&t| normalized_from(&rotate_point_cloud(src, t), d))
        .collect::<Result<Vec<_>>>()?;
    let (generators, max_relative_deviation, degenerate) = compare(&gens, &base, &rotated)?;
    Ok(InvarianceReport {
        d,
        anchor: (p, q),
        angles: angles.to_vec(),
        generators,
        max_relative_deviation,
        degenerate,
    })
}

/// As [`verify_invariance`], with bilinear resampling about the image centre.
pub fn verify_raster_invariance(
    img: &RasterImage,
    d: u32,
    p: u32,
    q: i32,
    angles: &[f64],
) -> Result<InvarianceReport> {
    if angles.is_empty() {
        return Err(Error::Domain("no angles given"));
    }
    let gens = rational_generators(d, p, q)?;
    let base = normalized_from(img, d)?;
    let rotated = angles
        .iter()
        .map(|&t| normalized_from(&rotate_raster(img, t), d))
        .collect::<Result<Vec<_>>>()?;
    let (generators, max_relative_deviation, degenerate) = compare(&gens, &base, &rotated)?;
    Ok(InvarianceReport {
        d,
        anchor: (p, q),
        angles: angles.to_vec(),
        generators,
        max_relative_deviation,
        degenerate,
    })
}
