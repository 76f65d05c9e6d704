//! Numerical building blocks for the dispersion code.

pub mod extrapolate;
pub mod oscillatory;
pub mod quadrature;
pub mod roots;
pub mod special;

pub use oscillatory::fourier_half_line;
pub use quadrature::{
    integrate, integrate_anchored, integrate_complex, Anchor, Interval, QuadratureResult, Tolerance,
};
pub use roots::brent_root;
pub use special::{bessel_i0, bessel_i1, bessel_k0, bessel_k1};
