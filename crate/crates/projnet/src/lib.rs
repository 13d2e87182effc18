//! projnet: generators, exact metrics, and cost models for low-diameter
//! interconnection topologies built from finite projective planes and
//! related constructions.
//!
//! The crate covers:
//!
//! * exact arithmetic over GF(p^m) ([`field`]);
//! * the projective plane P2(F_q): canonical points, orthogonality, cross
//!   products, subplane partitions ([`projective`]);
//! * topology generators: PN and demi-PN projective networks, MMS/Slim Fly,
//!   orthogonal fat trees, multi-layer full-mesh, dragonfly, and classic
//!   references ([`topology`]);
//! * exact distance distributions and per-arc loads under even-split minimal
//!   routing, utilization, and Moore-type bounds ([`metrics`], [`bounds`]);
//! * dimensioning, electrical/optical layout, and dollar/watt pricing of a
//!   dimensioned design, including the bundled case-study tables and
//!   scalability sweeps ([`design`]);
//! * file export and the CLI surface ([`export`], [`cli`]).
//!
//! The `projnet` binary exposes all of it: `generate`, `analyze`, `table`,
//! `sweep`.

pub mod bounds;
pub mod cli;
pub mod design;
pub mod export;
pub mod error;
pub mod field;
pub mod metrics;
pub mod oracle;
pub mod projective;
pub mod topology;

pub use error::{Error, Result};
