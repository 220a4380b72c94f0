//! Finite partially ordered semirings given by Cayley tables, with the
//! element, ideal, graph and decomposition analyses built on them.

pub mod analysis;
pub mod axioms;
pub mod constructions;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graphs;
pub mod harness;
pub mod ideals;
pub mod iso;
pub mod ringlab;
pub mod table;

pub use axioms::{verify_axioms, Axiom, AxiomReport, Violation};
pub use elemset::{Elem, ElemSet};
pub use error::{DomainError, ParseError, StructureError, TableError};
pub use table::{PoSemiringTable, RawTables};
