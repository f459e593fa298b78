//! Exact computer algebra for Fourier-transformed tautological systems.
//!
//! The crate is layered bottom-up:
//!
//! - [`rational`], [`monomial`], [`poly`], [`ideal`]: the commutative ring
//!   ℚ[x1..xN], Gröbner bases, normal forms and toric ideals.
//! - [`weyl`], [`bfunction`]: the Weyl algebra, left ideals and the
//!   minimal-polynomial engine for b-functions.
//! - [`repdata`]: Lie algebras, representations, vector fields and characters.
//! - [`tautsys`]: cyclic presentations of the systems and nonvanishing tests.
//! - [`cekoszul`]: the Chevalley–Eilenberg (Euler–Koszul) complex.
//! - [`dualpar`]: the duality-parameter calculus.
//! - [`instance`]: the JSON instance format and bundled examples.

pub mod error;
mod groebner;
pub mod bfunction;
pub mod catalog;
pub mod cekoszul;
pub mod dualpar;
pub mod ideal;
pub mod instance;
pub mod lattice;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod rational;
pub mod tautsys;
pub mod repdata;
mod text;
pub mod weyl;

pub use error::{Error, Result};
pub use groebner::GbBudget;
pub use ideal::{groebner, normal_form, toric_ideal, PolyIdeal};
pub use monomial::{Monomial, TermOrder};
pub use poly::{Poly, PolyOp};
pub use rational::Rational;
pub use weyl::{weyl_left_groebner, weyl_mul, weyl_normal_form, WeylElement, WeylIdeal};
