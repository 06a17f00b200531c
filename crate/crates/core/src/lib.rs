//! Rotation invariants of binary forms and of image moments.
//!
//! The rotation group acts on `W_d = V_2 ⊕ … ⊕ V_d`, the coefficient space
//! of binary forms of orders `2..=d`, through the derivation
//! `D(a[p,q]) = q·a[p+1,q−1] − p·a[p−1,q+1]`. Normalized central moments
//! `η[p,q]` transform the same way, so invariants of `W_d` are moment
//! invariants. The crate provides:
//!
//! * [`kravchuk`]: the spectrum of `D` and its eigenforms `e_n(si)`;
//! * [`symbolic`]: exact polynomials over `ℚ(i)` and the action of `D`;
//! * [`monoid`]: Hilbert bases of the zero-weight exponent monoid, i.e.
//!   minimal generators of the polynomial invariants;
//! * [`counting`]: dimensions and the Poincaré series;
//! * [`rational`]: transcendence bases of the rational invariants;
//! * [`moments`]: moment tables and numeric evaluation.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod counting;
pub mod error;
pub mod kravchuk;
pub mod moments;
pub mod monoid;
pub mod rational;
pub mod symbolic;

pub use error::{Error, Result};
pub use kravchuk::{EigenSymbol, LinearForm};
pub use moments::{MomentKind, MomentTable, PointCloud, RasterImage};
pub use monoid::{ExponentVector, PolynomialGenerator};
pub use rational::{RationalGenerator, RationalKind};
pub use symbolic::{GaussianRational, SparsePoly, Var};
