//! Exact computation of higher Frobenius-Schur indicators, exponents,
//! orders and Perron-Frobenius indices for semisimple Hopf algebras built
//! from finite groups: group algebras, their duals, smash products
//! `K^G#K[F]` and Drinfel'd doubles `D(K[F])`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod error;
pub mod permcalc;
pub mod cyclo;
pub mod linalg;
pub mod groups;
pub mod hopf;
pub mod repmod;
pub mod indicators;
pub mod fusionindex;

pub use error::{Error, Result};
