//! The Picard lattice Z^{1,n} of a plane blown up in n points, characteristic
//! matrices acting on it, and the catalog of explicit matrices.

mod catalog;
mod error;
mod isometry;
mod lattice;

pub use catalog::{
    bedford_kim_matrix, catalog, catalog_json, lookup, CatalogEntry, CatalogRecord, Provenance,
};
pub use error::PicardError;
pub use isometry::{entropy, is_isometry, preserves_canonical, LatticeIsometry, Verification};
pub use lattice::{apply, inner_product, LatticeVector, PicardLattice};
