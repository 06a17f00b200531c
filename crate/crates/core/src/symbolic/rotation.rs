use crate::error::Result;
use crate::moments::{binom_f64, powi, MomentTable};

/// Moments of the counterclockwise rotation by `theta` of the underlying
/// density, computed block by block from `t` for orders `2..=d`.
///
/// Each order-`n` block is the coefficient image of `x^p y^q` under
/// `x ↦ x cosθ − y sinθ`, `y ↦ x sinθ + y cosθ`.
pub fn rotate_moment_vector(t: &MomentTable, theta: f64, d: u32) -> Result<MomentTable> {
    let (s, c) = libm::sincos(theta);
    let mut out = MomentTable::new(t.kind, d);
    for n in 2..=d {
        for q in 0..=n {
            let p = n - q;
            let mut acc = 0.0;
            for a in 0..=p {
                let ka = binom_f64(p, a) * powi(c, p - a) * powi(-s, a);
                for b in 0..=q {
                    let kb = binom_f64(q, b) * powi(s, q - b) * powi(c, b);
                    acc += ka * kb * t.get(p - a + q - b, a + b)?;
                }
            }
            out.set(p, q, acc);
        }
    }
    Ok(out)
}
