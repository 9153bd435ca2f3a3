//! Numerical building blocks shared by the solvers: bracketed root finding,
//! adaptive quadrature and ODE integration.

pub mod ode;
pub mod quad;
pub mod roots;

pub use quad::{integrate, integrate_2d, QuadOptions, QuadResult};
pub use roots::brent;
