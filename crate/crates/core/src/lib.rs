//! Lozenge tilings of hexagons with shamrock-shaped holes: region
//! construction, an exact tiling counter, the product formulas, and
//! machinery to check one against the other.

pub mod arith;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod svg;
pub mod verify;

pub use error::{ArithError, GeometryError, OracleError};
pub use lattice::{Family, Orient, Region, RegionSpec, Tiling, TriRef};
pub use oracle::{count_tilings, count_tilings_with, find_one_tiling, CountResult, OracleConfig};
