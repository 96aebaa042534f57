//! Exact computer algebra for the centres of type-A Iwahori-Hecke algebras.
//!
//! The crate is organised around a tower of exact structures:
//!
//! - [`exactalg`]: Laurent polynomials in `q`, rational functions in `q`,
//!   integer-valued polynomials in `t` written in the binomial-coefficient
//!   basis, and exact interpolation.
//! - [`combinat`]: partitions, Young diagrams, contents, standard tableaux,
//!   border strips and e-cores.
//! - [`symmgroup`]: permutations, Coxeter length, reduced words, reduced
//!   cycle types and conjugacy-class enumeration.
//! - [`symfunc`]: the ring of symmetric functions with integer-valued
//!   polynomial coefficients, in the monomial and elementary bases.
//! - [`hecke`]: sparse arithmetic in `H_n(q)` in the `T_w` basis,
//!   Jucys-Murphy elements, the Geck-Rouquier central basis, and
//!   evaluation of symmetric functions at Jucys-Murphy elements.
//! - [`fhq`]: the interpolating algebra spanned by `K_mu` with
//!   structure-constant polynomials in `q` and `t`, the evaluation maps
//!   onto each centre, and the symmetric-function realisation.
//! - [`specht`]: seminormal matrix models of Specht modules, central
//!   characters by two independent routes, and block partitions via
//!   e-cores.
//!
//! All arithmetic is exact: arbitrary-precision integers, no floating
//! point. Everything is deterministic; caches only memoise.

pub mod cache;
pub mod combinat;
pub mod exactalg;
pub mod fhq;
pub mod hecke;
pub mod specht;
pub mod symfunc;
pub mod symmgroup;
pub mod verify;

// re-exports appear as modules land
