//! Topological analysis of binary neural codes.
//!
//! A code `C ⊆ {0,1}ⁿ` records which subsets of `n` neurons fire together.
//! This crate builds the simplicial complex `Δ(C)` of a code and the nerve
//! of a finite cover, checks that the nerve of a cover equals the complex of
//! the cover's code, and computes invariants that survive the passage from
//! space to code: F₂ Betti numbers, an edge-path presentation of π₁, a
//! Helly lower bound on the embedding dimension, and the canonical form of
//! the neural ideal with the receptive-field relations it encodes.
//!
//! ```
//! use neurocode::{code::parse_code, complex::delta_complex, topology::betti_default};
//!
//! let code = parse_code("110\n101\n011\n").unwrap();
//! let k = delta_complex(&code).unwrap();
//! assert_eq!(betti_default(&k).to_string(), "b0=1 b1=1");
//! ```

pub mod bits;
pub mod code;
pub mod complex;
pub mod cover;
pub mod error;
pub mod ideal;
pub mod topology;

#[cfg(feature = "cli")]
pub mod cli;

pub use code::{parse_code, Code, Codeword};
pub use complex::{delta_complex, nerve, FVector, SimplicialComplex};
pub use cover::{
    atoms, circle_arc_cover, code_of_cover, grid_box_cover, nerve_equals_delta, parse_cover, Atlas,
    Cover, GridBox, NerveCheck,
};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use ideal::{
    canonical_form, code_to_polynomial, polynomial_to_code, rf_relations, PseudoMonomial,
    ReducedPolynomial, RelationKind, RfRelation,
};
pub use topology::{
    betti_default, betti_numbers, boundary_rank, connected_components, helly_lower_bound,
    pi1_presentation, shortest_edge_path, BettiVector, Gf2Matrix, Pi1Presentation,
};
