#![allow(clippy::needless_range_loop)]

pub mod acceptance;
pub mod conelab;
pub mod error;
pub mod hallalg;
pub mod linalg;
pub mod polycone;
pub mod quiverrep;
pub mod rootsys;
pub mod tropflag;

pub use error::{Error, Result};
