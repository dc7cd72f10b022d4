//! Exact arithmetic on elliptic curves over Q and the numerics that
//! surround the rank: point counting mod p, Dirichlet coefficients and
//! central L-values, canonical heights and regulators, Heegner-point
//! construction, torsion censuses over the naturally ordered curve
//! family, the q-expansion of j with certified truncation tails, and
//! the adjoint-orbit geometry of sl(2, R) that parametrizes CM points.
//!
//! Rational arithmetic is exact wherever the statement being tested is
//! exact (group law, torsion, q-expansions, orbit invariants); floats
//! appear only where a limit or an L-value forces them, and then with
//! an explicit tail or residual alongside.
//!
//! Start with the examples: `group_law`, `torsion_zoo` and `ap_table`
//! cover the curve-side basics, `bsd_slope`, `central_values`,
//! `canonical_heights` and `heegner_trace` the analytic side,
//! `family_stats` the census, and `nilpotent_orbits`, `cm_gallery`,
//! `conjecture_evidence` the orbit and modular machinery. The `mordell`
//! binary exposes the same capabilities as subcommands with JSON and
//! CSV output.

pub mod arith;
pub mod curve;
pub mod error;
pub mod families;
pub mod heegner;
pub mod heights;
pub mod json;
pub mod local;
pub mod lseries;
pub mod modular;
pub mod registry;
pub mod sl2;
pub mod torsion;

pub use curve::{Curve, Point};
pub use error::{Error, Result};
