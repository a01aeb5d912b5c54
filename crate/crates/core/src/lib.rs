//! Invariant, reversible token sequences for periodic crystal structures.
//!
//! A [`Crystal`] is reduced to its Niggli-reduced primitive cell, given a canonical origin and
//! basis labeling, split into symmetry operations plus irreducible atoms, and written as a
//! line-oriented text with four-decimal reals. Any rotation, translation, boundary shift, basis
//! re-expression, supercell or atom permutation of the same structure yields the same bytes, and
//! the text decodes back to the structure.
//!
//! ```
//! use mat2seq::{canonicalize, codec, Crystal};
//! use nalgebra::{Matrix3, Vector3};
//!
//! let cscl = Crystal::new(
//!     vec![55, 17],
//!     vec![Vector3::zeros(), Vector3::new(0.5, 0.5, 0.5)],
//!     Matrix3::from_diagonal_element(4.12),
//! )?;
//! let seq = codec::encode(&canonicalize(&cscl)?, &[])?;
//! assert!(seq.text.contains("formula: ClCs\n"));
//! assert_eq!(codec::decode(&seq)?.len(), 2);
//! # Ok::<(), mat2seq::Error>(())
//! ```

pub mod canonical;
pub mod cif;
pub mod codec;
pub mod crystal;
pub mod elements;
pub mod error;
pub mod reduce;
#[rustfmt::skip]
mod spacegroup_table;
pub mod symmetry;
pub mod verify;

pub use canonical::{canonicalize, canonicalize_with, CanonicalizeOptions};
pub use cif::{parse_cif, write_cif};
pub use codec::{decode, encode, CrystalSequence};
pub use crystal::{
    lattice_from_params, params_from_lattice, CanonicalCell, Crystal, IrreducibleAtom,
    LatticeParameters, SymmetryOperation,
};
pub use error::{Error, Result};
pub use reduce::{niggli_reduce, reduce_to_primitive};
