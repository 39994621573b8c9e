//! Deciding whether a finite group has a faithful irreducible representation.
//!
//! The crate is `no_std` (it needs `alloc`). Groups are multiplication tables
//! on `0..n`; the abelian part of the socle is turned into `F_pG`-modules and
//! tested with three equivalent cyclicity criteria. An exact character table
//! computed by Dixon's method serves as an independent oracle.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod builders;
pub mod criteria;
pub mod group;
pub mod linalg;
pub mod modrep;
pub mod oracle;
pub mod socle;

pub use group::{FiniteGroup, GroupError, GroupHom, SubgroupSet, DEFAULT_ORDER_CAP};
pub use linalg::{FpMatrix, FpSubspace, LinalgError};
