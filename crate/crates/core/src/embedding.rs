//! Rotation systems.
//!
//! Every vertex stores its neighbors in counterclockwise order. A dart
//! `u -> v` is one direction of the edge `uv`. Faces are traced with a single
//! convention: the dart following `u -> v` is `v -> w` where `w` is the
//! rotation predecessor of `u` around `v`. This keeps the traced face on the
//! left of every dart, so interior faces come out counterclockwise.
//!
//! The angle owned by dart `v -> a` is the gap at `v` between `a` and its
//! rotation successor; it belongs to the face of that dart.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::StructureError;

pub type Vertex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Dart {
    pub origin: Vertex,
    pub target: Vertex,
}

impl Dart {
    pub fn new(origin: Vertex, target: Vertex) -> Self {
        Dart { origin, target }
    }

    pub fn twin(self) -> Self {
        Dart::new(self.target, self.origin)
    }

    pub fn edge(self) -> Edge {
        Edge::new(self.origin, self.target)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.origin, self.target)
    }
}

/// Unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(self, v: Vertex) -> Vertex {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0, self.1)
    }
}

/// Gap between two rotation-consecutive darts at `vertex`: the one towards
/// `after` and its counterclockwise successor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Angle {
    pub vertex: Vertex,
    pub after: Vertex,
}

impl Angle {
    pub fn dart(self) -> Dart {
        Dart::new(self.vertex, self.after)
    }
}

/// A traced face boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
    pub outer: bool,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.darts.iter().map(|d| d.origin).collect()
    }

    /// A boundary walk that traverses some edge twice.
    pub fn is_degenerate(&self) -> bool {
        let es: Vec<Edge> = self.darts.iter().map(|d| d.edge()).collect();
        (0..es.len()).any(|i| es[i + 1..].contains(&es[i]))
    }

    /// Whether the walk is a simple closed cycle (no repeated vertex).
    pub fn is_simple(&self) -> bool {
        let vs = self.vertices();
        !(0..vs.len()).any(|i| vs[i + 1..].contains(&vs[i]))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.darts.iter().any(|d| d.edge() == e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    rot: Vec<Vec<Vertex>>,
    outer: Dart,
}

impl Embedding {
    /// Builds an embedding from counterclockwise neighbor lists. Rotation
    /// lists are normalized to start at their smallest neighbor, so equal
    /// embeddings compare equal.
    pub fn new(rotations: Vec<Vec<Vertex>>, outer: Dart) -> Result<Self, StructureError> {
        let n = rotations.len();
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                if u >= n {
                    return Err(StructureError::VertexOutOfRange(u));
                }
                if u == v {
                    return Err(StructureError::Loop(v));
                }
                if rot[i + 1..].contains(&u) {
                    return Err(StructureError::MultiEdge(v, u));
                }
                if !rotations[u].contains(&v) {
                    return Err(StructureError::MissingTwin(v, u));
                }
            }
        }
        if outer.origin >= n || !rotations[outer.origin].contains(&outer.target) {
            return Err(StructureError::BadOuterDart(outer.origin, outer.target));
        }
        let mut emb = Embedding {
            rot: rotations,
            outer,
        };
        for v in 0..n {
            emb.normalize(v);
        }
        if !emb.is_connected() {
            return Err(StructureError::Disconnected);
        }
        Ok(emb)
    }

    /// Builds an embedding from face boundary walks, each listed with the
    /// face on the left (interior faces counterclockwise). `outer` must be a
    /// dart of one of the walks.
    pub fn from_faces(n: usize, faces: &[Vec<Vertex>], outer: Dart) -> Result<Self, StructureError> {
        // succ[v] maps a neighbor u to the neighbor following it ccw.
        let mut succ: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
        for walk in faces {
            let k = walk.len();
            if k < 3 {
                return Err(StructureError::BadFaces(format!("walk {walk:?} too short")));
            }
            for i in 0..k {
                let (u, v, w) = (walk[i], walk[(i + 1) % k], walk[(i + 2) % k]);
                if u >= n || v >= n || w >= n {
                    return Err(StructureError::VertexOutOfRange(u.max(v).max(w)));
                }
                // next(u -> v) = v -> w means w = pred_v(u), i.e. succ_v(w) = u.
                if succ[v].iter().any(|&(a, _)| a == w) {
                    return Err(StructureError::BadFaces(format!("angle at {v} after {w} used twice")));
                }
                succ[v].push((w, u));
            }
        }
        let mut rotations = Vec::with_capacity(n);
        for (v, pairs) in succ.iter().enumerate() {
            if pairs.is_empty() {
                return Err(StructureError::BadFaces(format!("vertex {v} is isolated")));
            }
            let mut rot = vec![pairs[0].0];
            let mut cur = pairs[0].0;
            loop {
                let next = pairs
                    .iter()
                    .find(|&&(a, _)| a == cur)
                    .map(|&(_, b)| b)
                    .ok_or_else(|| StructureError::BadFaces(format!("rotation at {v} is open")))?;
                if next == rot[0] {
                    break;
                }
                if rot.contains(&next) {
                    return Err(StructureError::BadFaces(format!("rotation at {v} is not a cycle")));
                }
                rot.push(next);
                cur = next;
            }
            if rot.len() != pairs.len() {
                return Err(StructureError::BadFaces(format!("vertex {v} is pinched")));
            }
            rotations.push(rot);
        }
        Embedding::new(rotations, outer)
    }

    fn normalize(&mut self, v: Vertex) {
        let rot = &mut self.rot[v];
        if let Some((i, _)) = rot.iter().enumerate().min_by_key(|&(_, &u)| u) {
            rot.rotate_left(i);
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &self.rot[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rot
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rot[v].len()
    }

    pub fn outer_dart(&self) -> Dart {
        self.outer
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.rot[u].contains(&v)
    }

    pub fn rotation_index(&self, d: Dart) -> Option<usize> {
        self.rot[d.origin].iter().position(|&u| u == d.target)
    }

    /// Counterclockwise successor of `u` around `v`.
    pub fn succ(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rot[v];
        let i = rot.iter().position(|&x| x == u).expect("succ: not a neighbor");
        rot[(i + 1) % rot.len()]
    }

    /// Counterclockwise predecessor of `u` around `v`.
    pub fn pred(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rot[v];
        let i = rot.iter().position(|&x| x == u).expect("pred: not a neighbor");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    pub fn next_in_face(&self, d: Dart) -> Dart {
        Dart::new(d.target, self.pred(d.target, d.origin))
    }

    pub fn face_of(&self, d: Dart) -> Face {
        let mut darts = vec![d];
        let mut cur = self.next_in_face(d);
        while cur != d {
            darts.push(cur);
            cur = self.next_in_face(cur);
        }
        let outer = darts.contains(&self.outer);
        Face { darts, outer }
    }

    pub fn outer_face(&self) -> Face {
        self.face_of(self.outer)
    }

    /// Outer cycle in counterclockwise order, starting at the origin of the
    /// outer dart. The outer face walk runs clockwise, so this is its reverse.
    pub fn outer_cycle(&self) -> Vec<Vertex> {
        let walk = self.outer_face().vertices();
        let mut cycle = vec![walk[0]];
        cycle.extend(walk[1..].iter().rev());
        cycle
    }

    /// All faces, outer face first; the rest in order of first dart found
    /// scanning vertices and rotations.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = vec![];
        let mark = |f: &Face, seen: &mut Vec<Vec<bool>>| {
            for d in &f.darts {
                let i = self.rot[d.origin].iter().position(|&x| x == d.target).unwrap();
                seen[d.origin][i] = true;
            }
        };
        let outer = self.outer_face();
        mark(&outer, &mut seen);
        faces.push(outer);
        for v in 0..self.n() {
            for i in 0..self.rot[v].len() {
                if !seen[v][i] {
                    let f = self.face_of(Dart::new(v, self.rot[v][i]));
                    mark(&f, &mut seen);
                    faces.push(f);
                }
            }
        }
        faces
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = vec![];
        for (v, rot) in self.rot.iter().enumerate() {
            for &u in rot {
                if v < u {
                    out.push(Edge(v, u));
                }
            }
        }
        out
    }

    /// Inserts edge `uv` with `v` placed right after `after_u` around `u`
    /// and `u` placed right after `after_v` around `v`.
    pub(crate) fn insert_edge(&mut self, u: Vertex, after_u: Vertex, v: Vertex, after_v: Vertex) {
        for (x, after, y) in [(u, after_u, v), (v, after_v, u)] {
            let rot = &mut self.rot[x];
            let i = rot.iter().position(|&a| a == after).expect("insert_edge: bad anchor");
            rot.insert(i + 1, y);
            self.normalize(x);
        }
    }

    /// Removes edge `uv`. The caller is responsible for keeping the outer
    /// dart on a surviving edge.
    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.rot[u].retain(|&x| x != v);
        self.rot[v].retain(|&x| x != u);
        self.normalize(u);
        self.normalize(v);
    }

    pub(crate) fn set_outer(&mut self, d: Dart) {
        self.outer = d;
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Embedding {
        let n = self.n();
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[perm[v]] = self.rot[v].iter().map(|&u| perm[u]).collect();
        }
        let mut emb = Embedding {
            rot,
            outer: Dart::new(perm[self.outer.origin], perm[self.outer.target]),
        };
        for v in 0..n {
            emb.normalize(v);
        }
        emb
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Embedding {
        // outer r=0, s=1, t=2 counterclockwise; v=3 inside.
        Embedding::from_faces(
            4,
            &[vec![0, 2, 1], vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]],
            Dart::new(0, 2),
        )
        .unwrap()
    }

    #[test]
    fn faces_of_k4() {
        let e = k4();
        assert_eq!(e.edge_count(), 6);
        let faces = e.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces[0].outer);
        assert_eq!(e.outer_cycle(), vec![0, 1, 2]);
        assert!(faces.iter().all(|f| f.len() == 3 && !f.is_degenerate()));
    }

    #[test]
    fn rejects_multi_edge_and_loop() {
        let err = Embedding::new(vec![vec![1, 1], vec![0, 0]], Dart::new(0, 1)).unwrap_err();
        assert_eq!(err, StructureError::MultiEdge(0, 1));
        let err = Embedding::new(vec![vec![0]], Dart::new(0, 0)).unwrap_err();
        assert_eq!(err, StructureError::Loop(0));
        let err = Embedding::new(vec![vec![1], vec![]], Dart::new(0, 1)).unwrap_err();
        assert_eq!(err, StructureError::MissingTwin(0, 1));
    }

    #[test]
    fn insert_and_remove_round_trip() {
        let mut e = k4();
        let before = e.clone();
        let (a, b) = (e.pred(0, 3), e.pred(3, 0));
        e.remove_edge(0, 3);
        assert_eq!(e.edge_count(), 5);
        e.insert_edge(0, a, 3, b);
        assert_eq!(e, before);
    }

    #[test]
    fn degenerate_walk_detected() {
        // a path 0-1-2 has a single face that visits 1 twice
        let e = Embedding::new(vec![vec![1], vec![0, 2], vec![1]], Dart::new(0, 1)).unwrap();
        let f = e.outer_face();
        assert_eq!(f.len(), 4);
        assert!(f.is_degenerate());
    }
}
