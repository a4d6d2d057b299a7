//! Monte Carlo toolkit for diffusions killed at a domain boundary.
//!
//! The crate simulates killed (sub-Markov) SDE paths together with their
//! first boundary hitting times, evaluates the gradient of the Dirichlet
//! semigroup `P_t^D f(x) = E[1_{t<tau} f(X_t)]` through a stochastic-integral
//! weight built from a boundary-distance time change, and solves killed
//! distribution-dependent SDEs by frozen-flow Picard iteration and by
//! interacting particles. Sub-probability laws are represented as weighted
//! particle clouds and compared in total variation and truncated
//! 1-Wasserstein distances (Euclidean and intrinsic ground costs), with
//! exact transportation-LP solves at desk scale.
//!
//! Everything here is `no_std`-compatible (with `alloc`); IO, CLI wiring and
//! thread pools live in the companion `killsde` crate. All randomness is
//! counter-based: a draw is a pure function of `(master seed, path index,
//! step index, slot)`, so ensembles are bit-identical for any thread count.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bismut;
pub mod coeffs;
pub mod ddsde;
pub mod domain;
pub mod engine;
pub mod error;
pub mod exec;
pub mod fmath;
pub mod linalg;
pub mod measure;
pub mod oracle;
pub mod quad;
pub mod rng;

pub use domain::Domain;
pub use error::{Error, Result};
pub use exec::{Executor, SequentialExec};
