//! Exact-arithmetic toolkit for Chevalley groups over function rings.
//!
//! The crate is organized in layers, each built and tested against the one
//! below it:
//!
//! * [`rings`]: the coefficient rings (integers, finite fields, polynomial
//!   and Laurent polynomial rings, rational function fields), their places,
//!   valuations, and residue fields;
//! * [`roots`]: root systems of the classical and exceptional types, with
//!   closure data and subsystem embeddings;
//! * [`liealg`]: integral structure constants derived inside the adjoint
//!   representation, plus the matrix representations they induce;
//! * [`groups`]: elementary matrix groups generated by root unipotents;
//! * [`steinberg`]: formal words in root-unipotent generators, the defining
//!   relations, collection, and Steinberg symbols;
//! * [`ktheory`]: tame symbols and a concrete model of the relative K2 of
//!   function rings;
//! * [`factor`]: bounded elementary factorizations and unitriangular
//!   product decompositions, with width accounting.
//!
//! [`matrix`] and [`sample`] are shared infrastructure; [`suite`] bundles
//! the acceptance checks the integration tests and the CLI both run.
//!
//! All arithmetic is exact; nothing in the crate uses floating point.

pub mod factor;
pub mod groups;
pub mod ktheory;
pub mod liealg;
pub mod matrix;
pub mod rings;
pub mod steinberg;
pub mod suite;
pub mod roots;
pub mod sample;
