//! Tagged rotation systems: the combinatorial pseudo-triangulation type.
//!
//! Only reflex angles are stored, one per vertex; every other angle is
//! convex. A vertex's reflex angle is recorded as the neighbor `a` such that
//! the angle owned by dart `v -> a` is reflex.

use std::fmt;
use std::sync::Arc;

use crate::embedding::{Angle, Dart, Edge, Embedding, Face, Vertex};
use crate::error::StructureError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cppt {
    emb: Embedding,
    reflex: Vec<Vertex>,
    labels: Arc<[String]>,
}

impl Cppt {
    /// Assembles a tagged embedding. This checks that the input is a simple
    /// connected rotation system with a total reflex map; it does not check
    /// the pseudo-triangulation axioms (see [`Cppt::validate`]).
    pub fn build(rotations: Vec<Vec<Vertex>>, outer: Dart, reflex: Vec<Vertex>) -> Result<Self, StructureError> {
        let emb = Embedding::new(rotations, outer)?;
        Self::from_embedding(emb, reflex)
    }

    pub fn from_embedding(emb: Embedding, reflex: Vec<Vertex>) -> Result<Self, StructureError> {
        let n = emb.n();
        if reflex.len() != n {
            return Err(StructureError::ReflexLength {
                got: reflex.len(),
                expected: n,
            });
        }
        for (v, &a) in reflex.iter().enumerate() {
            if !emb.has_edge(v, a) {
                return Err(StructureError::BadReflex(v, a));
            }
        }
        let labels = (0..n).map(|v| v.to_string()).collect::<Vec<_>>().into();
        let mut t = Cppt { emb, reflex, labels };
        t.normalize_outer();
        Ok(t)
    }

    /// Builds from face walks (face on the left, so interior faces are listed
    /// counterclockwise). `outer` indexes the outer face in `faces`;
    /// `reflex_face[v]` indexes the face holding `v`'s reflex angle.
    pub fn from_faces(
        n: usize,
        faces: &[Vec<Vertex>],
        outer: usize,
        reflex_face: &[usize],
    ) -> Result<Self, StructureError> {
        let ow = faces
            .get(outer)
            .ok_or_else(|| StructureError::BadFaces("outer face index out of range".into()))?;
        let emb = Embedding::from_faces(n, faces, Dart::new(ow[0], ow[1]))?;
        if reflex_face.len() != n {
            return Err(StructureError::ReflexLength {
                got: reflex_face.len(),
                expected: n,
            });
        }
        let mut reflex = Vec::with_capacity(n);
        for (v, &fi) in reflex_face.iter().enumerate() {
            let walk = faces
                .get(fi)
                .ok_or_else(|| StructureError::BadFaces(format!("reflex face of {v} out of range")))?;
            let i = walk
                .iter()
                .position(|&x| x == v)
                .ok_or_else(|| StructureError::BadFaces(format!("vertex {v} is not on face {fi}")))?;
            reflex.push(walk[(i + 1) % walk.len()]);
        }
        Self::from_embedding(emb, reflex)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = labels.into();
        self
    }

    pub fn n(&self) -> usize {
        self.emb.n()
    }

    pub fn edge_count(&self) -> usize {
        self.emb.edge_count()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub(crate) fn parts_mut(&mut self) -> (&mut Embedding, &mut Vec<Vertex>) {
        (&mut self.emb, &mut self.reflex)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn reflex_map(&self) -> &[Vertex] {
        &self.reflex
    }

    pub fn reflex_angle(&self, v: Vertex) -> Angle {
        Angle {
            vertex: v,
            after: self.reflex[v],
        }
    }

    /// Whether the angle owned by dart `d` is tagged reflex.
    pub fn is_reflex(&self, d: Dart) -> bool {
        self.reflex[d.origin] == d.target
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.emb.has_edge(u, v)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.emb.neighbors(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.emb.degree(v)
    }

    pub fn outer_cycle(&self) -> Vec<Vertex> {
        self.emb.outer_cycle()
    }

    pub fn outer_size(&self) -> usize {
        self.emb.outer_face().len()
    }

    pub fn is_outer_vertex(&self, v: Vertex) -> bool {
        self.emb.outer_face().darts.iter().any(|d| d.origin == v)
    }

    pub fn is_outer_edge(&self, e: Edge) -> bool {
        self.emb.outer_face().contains_edge(e)
    }

    pub fn face_of(&self, d: Dart) -> Face {
        self.emb.face_of(d)
    }

    /// Number of reflex angles inside face `f`.
    pub fn reflex_count(&self, f: &Face) -> usize {
        f.darts.iter().filter(|&&d| self.is_reflex(d)).count()
    }

    /// Face walks, outer face first.
    pub fn trace_faces(&self) -> Vec<Face> {
        self.emb.faces()
    }

    /// Same shape with vertex `v` renamed `perm[v]`. Display labels stay
    /// attached to vertex ids.
    pub fn relabel(&self, perm: &[Vertex]) -> Cppt {
        let n = self.n();
        let mut reflex = vec![0; n];
        for v in 0..n {
            reflex[perm[v]] = perm[self.reflex[v]];
        }
        let mut t = Cppt {
            emb: self.emb.relabel(perm),
            reflex,
            labels: self.labels.clone(),
        };
        t.normalize_outer();
        t
    }

    /// Moves the outer dart so that its origin is the smallest outer vertex.
    /// Equal graphs then compare equal regardless of how they were produced.
    pub(crate) fn normalize_outer(&mut self) {
        let f = self.emb.outer_face();
        let d = *f.darts.iter().min_by_key(|d| d.origin).expect("outer face");
        self.emb.set_outer(d);
    }
}

impl fmt::Display for Cppt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.n() {
            writeln!(f, "{}: {:?} reflex after {}", v, self.emb.neighbors(v), self.reflex[v])?;
        }
        Ok(())
    }
}
