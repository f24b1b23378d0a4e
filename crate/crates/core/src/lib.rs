//! Gromov hyperbolicity of Cayley graphs and finite quotient towers.
//!
//! The crate is organised bottom-up:
//!
//! - [`engines`]: groups with canonical normal forms (free, cyclic, finite
//!   tables, Heisenberg mod p, free and direct products) and surjections
//!   between them.
//! - [`cayley`]: breadth-first balls of Cayley graphs and their text format.
//! - [`metric`]: exact distances, Gromov products, the four-point constant
//!   (max-min matrix product route plus a naive oracle) and the slim-triangle
//!   constant.
//! - [`towers`]: chains of finite quotients and δ profiles across levels.
//! - [`experiment`]: the config-driven runner behind the `cayley-delta`
//!   binary, with JSON reports, CSV companions and a graph cache.
//!
//! ```
//! use cayley_delta::{cayley, engines, metric};
//!
//! let c4 = engines::parse_engine_spec("cyclic:4").unwrap();
//! let ball = cayley::build_ball(&c4, 2).unwrap();
//! let d = metric::apsp(&ball).unwrap();
//! let (delta, _) = metric::delta_all(&d).unwrap();
//! assert_eq!(delta.doubled(), 2);
//! ```

pub mod cayley;
pub mod engines;
pub mod error;
pub mod experiment;
pub mod metric;
pub mod towers;

pub use error::{Error, Result};
