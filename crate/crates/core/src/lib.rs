//! Structure and enumeration of RC-lattices: finite lattices whose reducible
//! elements are pairwise comparable.
//!
//! * [`Lattice`] holds a finite poset and answers the structural questions
//!   (lattice, reducible elements, nullity, height, canonical form).
//! * [`AdjunctRep`] builds lattices as adjuncts of chains.
//! * [`catalog`] lists the thirty basic blocks of nullity three with five
//!   comparable reducible elements.
//! * [`census`] evaluates the closed-form counts exactly.
//! * [`oracle`] enumerates lattices up to isomorphism to check them.
//! * [`report`] sets the two side by side in census tables and verification
//!   reports.

pub mod adjunct;
pub mod catalog;
pub mod census;
pub mod error;
pub mod oracle;
pub mod order;
pub mod report;

pub use adjunct::{basic_block_of, linear_sum, maximal_chain_rep, vertical_sum, AdjunctRep, Attachment, BasicBlockResult};
pub use catalog::{catalog, catalog_dot, identify, BasicBlockId, CatalogEntry};
pub use census::{CensusQuery, Count};
pub use error::{Error, Result};
pub use oracle::{ClassifiedLattice, EnumerationTask, Oracle};
pub use order::{CanonicalKey, Lattice};
pub use report::{census_table, verify, CensusRow, Check, Mode, Query, Scope, VerificationReport, VerifyPlan};
