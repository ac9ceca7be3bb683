//! Float math that is routed through `libm` when `std` is disabled.
//!
//! Only the handful of transcendental functions the solvers actually use
//! live here; everything else (`abs`, `max`, comparisons) is available in
//! `core` directly.

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("steiner-core needs either the `std` feature or the `libm` feature");

#[cfg(feature = "std")]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        x.hypot(y)
    }
    #[inline]
    pub fn atan2(y: f64, x: f64) -> f64 {
        y.atan2(x)
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        x.cos()
    }
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        libm::hypot(x, y)
    }
    #[inline]
    pub fn atan2(y: f64, x: f64) -> f64 {
        libm::atan2(y, x)
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
}

pub(crate) use imp::{atan2, cos, hypot, sqrt};

/// √3 with full f64 precision.
pub(crate) const SQRT_3: f64 = 1.732050807568877293527446341505872367_f64;
