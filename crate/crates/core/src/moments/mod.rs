//! Geometric, central and normalized moments of point clouds and rasters,
//! exact rotations for the test harness, and numeric evaluation of
//! invariants on normalized moments.

mod eval;
mod source;

use alloc::collections::BTreeMap;

pub use eval::{
    evaluate_form, evaluate_invariant, evaluate_poly, verify_invariance, verify_raster_invariance,
    GeneratorDeviation, InvarianceReport,
};
pub use source::{rotate_point_cloud, rotate_raster, Point, PointCloud, RasterImage};

use crate::error::{Error, Result};
use crate::kravchuk::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MomentKind {
    Geometric,
    Central,
    Normalized,
}

/// Moments `(p, q) ↦ value` up to `max_order`.
///
/// Geometric and central tables hold every `p + q ≤ max_order`; normalized
/// tables hold `2 ≤ p + q ≤ max_order` only.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentTable {
    pub kind: MomentKind,
    pub max_order: u32,
    entries: BTreeMap<(u32, u32), f64>,
}

impl MomentTable {
    pub fn new(kind: MomentKind, max_order: u32) -> Self {
        Self {
            kind,
            max_order,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        kind: MomentKind,
        max_order: u32,
        entries: impl IntoIterator<Item = ((u32, u32), f64)>,
    ) -> Self {
        Self {
            kind,
            max_order,
            entries: entries.into_iter().collect(),
        }
    }

    pub fn get(&self, p: u32, q: u32) -> Result<f64> {
        self.entries
            .get(&(p, q))
            .copied()
            .ok_or(Error::IncompleteTable { p, q })
    }

    pub fn try_get(&self, p: u32, q: u32) -> Option<f64> {
        self.entries.get(&(p, q)).copied()
    }

    pub fn set(&mut self, p: u32, q: u32, value: f64) {
        self.entries.insert((p, q), value);
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), f64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest `|entry|` over orders `n = p + q`.
    pub fn block_norm(&self, n: u32) -> f64 {
        self.entries
            .iter()
            .filter(|((p, q), _)| p + q == n)
            .map(|(_, v)| v.abs())
            .fold(0.0, f64::max)
    }
}

/// Anything with geometric moments.
pub trait MomentSource {
    fn geometric_moments(&self, max_order: u32) -> Result<MomentTable>;
}

pub fn geometric_moments<S: MomentSource + ?Sized>(src: &S, max_order: u32) -> Result<MomentTable> {
    src.geometric_moments(max_order)
}

/// `μ_pq = Σ_a Σ_b C(p,a) C(q,b) (−x̄)^(p−a) (−ȳ)^(q−b) m_ab`.
pub fn central_moments(m: &MomentTable) -> Result<MomentTable> {
    if m.kind != MomentKind::Geometric {
        return Err(Error::Domain("central moments need a geometric table"));
    }
    let m00 = m.get(0, 0)?;
    if m00 == 0.0 || !m00.is_finite() {
        return Err(Error::DegenerateInput("zero total mass"));
    }
    let xc = m.get(1, 0)? / m00;
    let yc = m.get(0, 1)? / m00;
    let mut out = MomentTable::new(MomentKind::Central, m.max_order);
    for n in 0..=m.max_order {
        for q in 0..=n {
            let p = n - q;
            let mut acc = 0.0;
            for a in 0..=p {
                let ca = binom_f64(p, a) * powi(-xc, p - a);
                for b in 0..=q {
                    acc += ca * binom_f64(q, b) * powi(-yc, q - b) * m.get(a, b)?;
                }
            }
            out.set(p, q, acc);
        }
    }
    // exact by construction
    out.set(1, 0, 0.0);
    out.set(0, 1, 0.0);
    Ok(out)
}

/// `η_pq = μ_pq / μ00^(1 + (p+q)/2)` for `2 ≤ p + q`.
pub fn normalized_moments(mu: &MomentTable) -> Result<MomentTable> {
    if mu.kind != MomentKind::Central {
        return Err(Error::Domain("normalized moments need a central table"));
    }
    let mu00 = mu.get(0, 0)?;
    if mu00 <= 0.0 || !mu00.is_finite() {
        return Err(Error::DegenerateInput("central moment mu00 must be positive"));
    }
    let mut out = MomentTable::new(MomentKind::Normalized, mu.max_order);
    for n in 2..=mu.max_order {
        let scale = libm::pow(mu00, 1.0 + n as f64 / 2.0);
        for q in 0..=n {
            let p = n - q;
            out.set(p, q, mu.get(p, q)? / scale);
        }
    }
    Ok(out)
}

/// Geometric, then central, then normalized.
pub fn normalized_from<S: MomentSource + ?Sized>(src: &S, max_order: u32) -> Result<MomentTable> {
    normalized_moments(&central_moments(&src.geometric_moments(max_order)?)?)
}

pub(crate) fn binom_f64(n: u32, k: u32) -> f64 {
    // small arguments only; exact in f64
    let b = binomial(n as i64, k);
    num_traits::ToPrimitive::to_f64(&b).unwrap_or(f64::NAN)
}

pub(crate) fn powi(x: f64, e: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..e {
        acc *= x;
    }
    acc
}
