//! Planar link diagrams, braid closures and the two adjoint cablings.

mod braid;
mod cable;
mod expansion;
mod ops;
mod parse;
mod pd;

use thiserror::Error;

pub use braid::{braid_closure, BraidWord};
pub use cable::{CableMode, CablePattern};
pub use expansion::{
    homfly_adjoint_expansion, homfly_adjoint_expansion_at, kauffman_adjoint_expansion, kauffman_adjoint_expansion_at,
    projector_terms,
};
pub use parse::{diagram_from_json, diagram_to_json, parse_diagram, ParsedInput};
pub use pd::{Edge, LinkDiagram, Port, Sign, Walk, WritheData};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid diagram: {0}")]
    Validation(String),
    #[error("diagram is not oriented")]
    Unoriented,
    #[error("no component {0}")]
    UnknownComponent(usize),
    #[error("orientation mismatch: {0}")]
    OrientationMismatch(String),
    #[error("no cable pattern for component {0}")]
    PatternMissing(usize),
    #[error("cable pattern does not fit the orientation: {0}")]
    PatternOrientation(String),
}

/// The blackboard closure of the 2-strand braid with `m` half twists.
pub fn torus2(m: i64) -> LinkDiagram {
    let g = if m >= 0 { 1 } else { -1 };
    BraidWord::new(2, vec![g; m.unsigned_abs() as usize]).expect("valid generator").closure()
}

#[cfg(test)]
mod tests;
