//! Möbius group actions on sampled Jordan curves in the Riemann sphere: chordal
//! geometry, normalized PSL(2,C) arithmetic, Hausdorff distances, turning
//! constants and orbit experiments.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod cli;
pub mod compacta;
pub mod curves;
pub mod error;
pub mod groups;
pub mod io;
pub mod moebius;
pub mod orbit;
pub mod quasicircle;
pub mod sphere;

pub use error::{Error, Result};
pub use moebius::MoebiusMap;
pub use sphere::SpherePoint;
