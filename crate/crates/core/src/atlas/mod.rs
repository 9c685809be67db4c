//! The classification as data: named varieties, separating algebras, the
//! claims they support, and the inclusion poset built from them.

use thiserror::Error;

use crate::search::SearchError;

pub mod catalog;
pub mod claims;
pub mod poset;
pub mod witness;

pub use catalog::{CatalogError, VarietyCatalog};
pub use claims::{verify_claims, Claim, ClaimKind, ClaimLedger, ClaimStatus};
pub use poset::{build_poset, PosetReport};
pub use witness::{discovered_witnesses, embedded_witnesses, proof_witnesses, WitnessRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Search(#[from] SearchError),
}
