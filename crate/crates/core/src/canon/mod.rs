//! Constructive flip sequences between 4-PPTs.
//!
//! Every algorithm drives a [`Walker`], which applies flips one at a time to
//! a current graph and records them. Work on a sub-region (a cell of the fan,
//! the part below a cleared tip) runs on an extracted standalone copy whose
//! moves are then replayed on the parent graph; for the regions used here
//! (triangles, and outer polygons cut down by a fan) flip validity is the
//! same in both.

mod general;
mod labeled;
mod region;
mod sequence;
mod triangle;
#[cfg(test)]
mod tests;

use serde::Serialize;

use crate::embedding::{Edge, Vertex};
use crate::error::CanonError;
use crate::fixtures::Side;
use crate::tagged::Cppt;

pub use general::{
    canonicalize_cells, canonicalize_general, cut_ear, fan_outer_face, flip_sequence, merge_cells, rotate_canonical,
};
pub use labeled::{canonical_to_spinal, sort_labels, spinal_to_canonical, swap_neighbors};
pub use sequence::{FlipSequence, Provenance, Stage};
pub use triangle::{canonicalize_triangular, clear_tip, move_triangle_to_edge};

pub(crate) use region::Walker;

/// Outer roles of a triangular region, counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Roles {
    pub r: Vertex,
    pub s: Vertex,
    pub t: Vertex,
}

impl Roles {
    /// `r` is the smallest outer vertex, `s` follows counterclockwise.
    pub fn of(t: &Cppt) -> Result<Roles, CanonError> {
        let c = t.outer_cycle();
        if c.len() != 3 {
            return Err(CanonError::NotTriangular(c.len()));
        }
        Ok(Roles {
            r: c[0],
            s: c[1],
            t: c[2],
        })
    }

    /// Roles with base `st`: `(s, t, r)`.
    pub fn rotated(self) -> Roles {
        Roles {
            r: self.s,
            s: self.t,
            t: self.r,
        }
    }

    pub fn base(self) -> Edge {
        Edge::new(self.r, self.s)
    }

    pub fn side(self, side: Side) -> Vertex {
        match side {
            Side::R => self.r,
            Side::S => self.s,
        }
    }

    fn cycle(self) -> [Vertex; 3] {
        [self.r, self.s, self.t]
    }

    /// The three rotations of `self`, `self` first.
    fn rotations(self) -> [Roles; 3] {
        [self, self.rotated(), self.rotated().rotated()]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Form {
    Canonical,
    RSpinal,
    SSpinal,
    GeneralCanonical,
    Other,
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Form::Canonical => "canonical",
            Form::RSpinal => "r-spinal",
            Form::SSpinal => "s-spinal",
            Form::GeneralCanonical => "general-canonical",
            Form::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalProfile {
    pub form: Form,
    /// Base edge `rs` of the recognized roles.
    pub base_edge: Option<Edge>,
    pub roles: Option<Roles>,
    /// Interior vertices bottom (next to the base) to top.
    pub order: Vec<Vertex>,
}

impl CanonicalProfile {
    fn other() -> Self {
        CanonicalProfile {
            form: Form::Other,
            base_edge: None,
            roles: None,
            order: vec![],
        }
    }
}

/// Recognizes canonical, spinal and general canonical forms. Triangular
/// inputs try the default roles first, then the other two bases.
pub fn classify(t: &Cppt) -> CanonicalProfile {
    let cycle = t.outer_cycle();
    if cycle.len() == 3 {
        let roles = Roles::of(t).expect("triangular");
        let i = t.n() - 3;
        for (m, forms) in [(0, [(Side::S, Form::Canonical)].as_slice()), (i, &[(Side::R, Form::RSpinal), (Side::S, Form::SSpinal)])] {
            for ro in roles.rotations() {
                for &(side, form) in forms {
                    if let Some(order) = labeled::recognize_mixed(t, ro, m, side) {
                        return CanonicalProfile {
                            form,
                            base_edge: Some(ro.base()),
                            roles: Some(ro),
                            order,
                        };
                    }
                }
            }
        }
        return CanonicalProfile::other();
    }
    match general::recognize_general(t) {
        Some(order) => CanonicalProfile {
            form: Form::GeneralCanonical,
            base_edge: Some(Edge::new(cycle[0], cycle[1])),
            roles: Some(Roles {
                r: cycle[0],
                s: cycle[1],
                t: cycle[2],
            }),
            order,
        },
        None => CanonicalProfile::other(),
    }
}

/// Checks the input axioms shared by all public entry points.
fn require_valid(t: &Cppt) -> Result<(), CanonError> {
    let r = t.validate();
    if r.valid {
        Ok(())
    } else {
        Err(CanonError::Invalid(format!("{:?}", r.violations)))
    }
}
