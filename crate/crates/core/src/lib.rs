//! Gaudin operator spectra for finite complex reflection groups.
//!
//! The crate builds a reflection group from generator matrices, computes its
//! character table, finds regular elements in the sense of Springer, and
//! decomposes each isotypic component of the group algebra into joint
//! generalized eigenspaces of the specialized Gaudin operators
//! `D_y = sum_s det(s) c(s) <y, alpha_s> / <v, alpha_s> s`.
//! Comparing those spectra with the action of a regular element `tau` gives a
//! computable test of which `C^x`-fixed points of the Calogero-Moser space lie
//! on the maximal component of the `tau`-fixed locus.
//!
//! Module map:
//!
//! - [`numerics`]: dense complex linear algebra and joint eigenspaces
//! - [`reflection_groups`]: group closure, arrangements, parameters `k` and `c`
//! - [`char_theory`]: classes, character tables, `tau`-action, extended norms
//! - [`combinatorics_sn`]: Murnaghan-Nakayama, cores and quotients
//! - [`regular_elts`]: regular numbers, `tau`, Springer checks
//! - [`gaudin`]: Gaudin operators and their covector spectra
//! - [`families`]: family partitions and the fixed-point reports
//! - [`cli`]: command implementations behind the `cm-gaudin` binary

pub mod char_theory;
pub mod cli;
pub mod combinatorics_sn;
pub mod error;
pub mod families;
pub mod gaudin;
pub mod group_algebra;
pub mod numerics;
pub mod reflection_groups;
pub mod regular_elts;
pub mod report;

pub use error::{Error, Result};
