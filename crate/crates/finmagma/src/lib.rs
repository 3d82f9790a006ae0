//! Finite magmas given by Cayley tables: loops L_n(m), groupoids Z_n(t,u),
//! their neutrosophic extensions, substructure lattices and multi-structures.

pub mod classify;
pub mod constructors;
pub mod error;
pub mod harness;
pub mod identity;
pub mod iso;
pub mod magma;
pub mod neutro;
pub mod nstruct;
pub mod serial;
pub mod subset;

pub use constructors::{
    build_classical, build_groupoid_zn, build_loop_ln, ClassicalKind, GroupoidFamily, GroupoidFamilySpec, LoopFamilySpec,
};
pub use error::{ClassifyError, ConstructError, MagmaError, MultiError, NeutroError};
pub use identity::{check_identity, IdentityName, IdentityVerdict};
pub use iso::are_isomorphic;
pub use magma::{Kind, Magma, Side};
pub use nstruct::{classify_taxon, make_multi, MultiStructure, StructureTaxon, SubMulti};
pub use subset::SubSet;
