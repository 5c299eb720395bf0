//! Induced triangulations: every quadrilateral of a 4-PPT gets the diagonal
//! from its reflex vertex to the opposite corner. One 4-PPT flip changes the
//! induced triangulation only inside the two faces of the flipped edge, and
//! [`emulate_flip`] rebuilds that patch with triangulation flips.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::embedding::{Dart, Edge, Embedding, Vertex};
use crate::error::InducedError;
use crate::fixtures::{assemble, canonical_piece, Piece};
use crate::flip::{FlipCase, FlipMove};
use crate::tagged::Cppt;

/// A simple plane graph whose interior faces are all triangles. Outer edges
/// are never flipped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombTriangulation {
    emb: Embedding,
}

impl CombTriangulation {
    pub fn new(emb: Embedding) -> Result<Self, InducedError> {
        let t = CombTriangulation { emb };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<(), InducedError> {
        let faces = self.emb.faces();
        let outer = &faces[0];
        if !outer.is_simple() || outer.len() < 3 {
            return Err(InducedError::NotTriangulation(format!("outer face {:?}", outer.vertices())));
        }
        if let Some(f) = faces[1..].iter().find(|f| f.len() != 3 || !f.is_simple()) {
            return Err(InducedError::NotTriangulation(format!("face {:?}", f.vertices())));
        }
        let (n, h, e) = (self.n(), outer.len(), self.edge_count());
        if e + 3 + h != 3 * n {
            return Err(InducedError::NotTriangulation(format!("{e} edges, n = {n}, h = {h}")));
        }
        Ok(())
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn n(&self) -> usize {
        self.emb.n()
    }

    pub fn edge_count(&self) -> usize {
        self.emb.edge_count()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.emb.has_edge(u, v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.emb.degree(v)
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.emb.edges()
    }

    fn is_outer_edge(&self, e: Edge) -> bool {
        self.emb.outer_face().contains_edge(e)
    }

    /// Interior edges whose flip keeps the graph simple.
    pub fn flippable_edges(&self) -> Vec<Edge> {
        self.edges().into_iter().filter(|&e| self.flip(e).is_ok()).collect()
    }

    /// Replaces the interior edge `e` by the other diagonal of its two
    /// triangles.
    pub fn flip(&self, e: Edge) -> Result<CombTriangulation, InducedError> {
        let Edge(u, v) = Edge::new(e.0, e.1);
        if !self.has_edge(u, v) {
            return Err(InducedError::NotAnEdge(u, v));
        }
        if self.is_outer_edge(Edge(u, v)) {
            return Err(InducedError::OuterEdge(u, v));
        }
        // u -> v -> x and v -> u -> y
        let x = self.emb.next_in_face(Dart::new(u, v)).target;
        let y = self.emb.next_in_face(Dart::new(v, u)).target;
        if x == y || self.has_edge(x, y) {
            return Err(InducedError::MultiEdge(u, v, x, y));
        }
        let mut emb = self.emb.clone();
        emb.remove_edge(u, v);
        emb.insert_edge(x, u, y, v);
        Ok(CombTriangulation { emb })
    }

    /// Two non-adjacent vertices adjacent to everything else, which forms a
    /// single cycle.
    pub fn is_double_wheel(&self) -> bool {
        let n = self.n();
        if n < 5 {
            return false;
        }
        let hubs: Vec<Vertex> = (0..n).filter(|&v| self.degree(v) == n - 2).collect();
        let pairs: Vec<(Vertex, Vertex)> = hubs
            .iter()
            .flat_map(|&a| hubs.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a < b && !self.has_edge(a, b))
            .collect();
        pairs.into_iter().any(|(a, b)| {
            let rim: Vec<Vertex> = (0..n).filter(|&v| v != a && v != b).collect();
            let rim_degree = |v: Vertex| self.emb.neighbors(v).iter().filter(|&&w| w != a && w != b).count();
            if !rim.iter().all(|&v| rim_degree(v) == 2) {
                return false;
            }
            // one cycle through all rim vertices
            let (mut prev, mut cur, mut len) = (rim[0], rim[0], 0);
            loop {
                let next = self.emb.neighbors(cur).iter().copied().find(|&w| w != a && w != b && w != prev && (len > 0 || w != cur));
                let Some(next) = next else { return false };
                prev = cur;
                cur = next;
                len += 1;
                if cur == rim[0] {
                    return len == rim.len();
                }
            }
        })
    }
}

/// Diagonal of quadrilateral face `f` from its reflex corner.
fn quad_diagonal(t: &Cppt, f: &crate::Face) -> Option<Edge> {
    let k = f.darts.iter().position(|&d| t.is_reflex(d))?;
    let p = |i: usize| f.darts[(k + i) % 4].origin;
    Some(Edge::new(p(0), p(2)))
}

/// `T` plus the reflex diagonal of every quadrilateral.
pub fn induced_triangulation(t: &Cppt) -> Result<CombTriangulation, InducedError> {
    let h = t.outer_size();
    if h != 3 {
        return Err(InducedError::NotTriangular(h));
    }
    let mut emb = t.embedding().clone();
    for f in t.trace_faces().iter().skip(1).filter(|f| f.len() == 4) {
        let k = f
            .darts
            .iter()
            .position(|&d| t.is_reflex(d))
            .ok_or_else(|| InducedError::NotTriangulation(format!("quad {:?} without reflex angle", f.vertices())))?;
        let p = |i: usize| f.darts[(k + i) % 4].origin;
        if emb.has_edge(p(0), p(2)) {
            return Err(InducedError::NotTriangulation(format!("diagonal {}-{} already present", p(0), p(2))));
        }
        // ccw at p0 the face spans p1 .. p3; at p2 it spans p3 .. p1
        emb.insert_edge(p(0), p(1), p(2), p(3));
    }
    CombTriangulation::new(emb)
}

/// Shape of the union of the two faces of a flipped edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionShape {
    /// Triangle around one interior vertex (degenerate 5-walk).
    Triangle,
    Pentagon,
    Hexagon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriFlip {
    pub removed: Edge,
    pub inserted: Edge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Emulation {
    pub shape: RegionShape,
    pub flips: Vec<TriFlip>,
    /// Induced triangulation before and after the 4-PPT flip.
    pub start: CombTriangulation,
    pub end: CombTriangulation,
}

impl Emulation {
    /// Replays the flips from `start`; the result equals `end`.
    pub fn replay(&self) -> Result<CombTriangulation, InducedError> {
        let mut cur = self.start.clone();
        for f in &self.flips {
            let next = cur.flip(f.removed)?;
            if !next.has_edge(f.inserted.0, f.inserted.1) {
                return Err(InducedError::Emulation(format!("flip of {:?} did not insert {:?}", f.removed, f.inserted)));
            }
            cur = next;
        }
        Ok(cur)
    }
}

/// Triangulation flips from `I(T)` to `I(T')` where `T'` is `T` after `m`.
/// A triangle region needs none, a pentagon at most two (every pentagon
/// triangulation is a fan, so each flip can insert a target diagonal). For
/// a hexagon we first flip to a fan at an endpoint of the removed edge, or
/// at the vertex cut off by an outside edge blocking that fan.
pub fn emulate_flip(t: &Cppt, m: &FlipMove) -> Result<Emulation, InducedError> {
    let start = induced_triangulation(t)?;
    let after = t.apply_flip(m)?;
    let end = induced_triangulation(&after)?;
    let Edge(u, v) = m.removed;
    let (f1, f2) = (t.face_of(Dart::new(u, v)), t.face_of(Dart::new(v, u)));
    let shape = match (m.case, f1.len() + f2.len() - 2) {
        (FlipCase::Degenerate5, _) => RegionShape::Triangle,
        (_, 4) => return Err(InducedError::QuadRegion),
        (_, 5) => RegionShape::Pentagon,
        (_, 6) => RegionShape::Hexagon,
        (_, k) => return Err(InducedError::Emulation(format!("merged region of size {k}"))),
    };
    let mut out = Emulation {
        shape,
        flips: vec![],
        start: start.clone(),
        end: end.clone(),
    };
    if shape == RegionShape::Triangle {
        if start != end {
            return Err(InducedError::Emulation("triangle region changed the induced triangulation".into()));
        }
        return Ok(out);
    }

    // the polygon: f1 from v round to u, then f2 from u round to v
    let from = |f: &crate::Face, x: Vertex| -> Vec<Vertex> {
        let vs = f.vertices();
        let k = vs.iter().position(|&y| y == x).unwrap();
        (0..vs.len()).map(|i| vs[(k + i) % vs.len()]).collect()
    };
    let mut polygon = from(&f1, v);
    polygon.extend(&from(&f2, u)[1..f2.len() - 1]);
    let inside = |faces: [&crate::Face; 2], t: &Cppt, e: Edge| -> BTreeSet<Edge> {
        let mut s = BTreeSet::from([e]);
        s.extend(faces.iter().filter(|f| f.len() == 4).filter_map(|f| quad_diagonal(t, f)));
        s
    };
    let source = inside([&f1, &f2], t, m.removed);
    let Edge(a, b) = m.inserted;
    let g1 = after.face_of(Dart::new(a, b));
    let g2 = after.face_of(Dart::new(b, a));
    let target = inside([&g1, &g2], &after, m.inserted);

    let (flips, cur) = retriangulate(&start, &polygon, &source, &target, &[u, v])?;
    if cur != end {
        return Err(InducedError::Emulation("emulation missed the induced triangulation".into()));
    }
    out.flips = flips;
    Ok(out)
}

/// Flips inside `polygon` (a cycle of `g`) from the diagonals `source` to
/// `target`, each flip inserting a target diagonal. Polygons with six or
/// more corners first go through a fan, tried at the `prefer` vertices
/// first; a fan blocked by an edge outside the polygon is skipped.
pub fn retriangulate(
    g: &CombTriangulation,
    polygon: &[Vertex],
    source: &BTreeSet<Edge>,
    target: &BTreeSet<Edge>,
    prefer: &[Vertex],
) -> Result<(Vec<TriFlip>, CombTriangulation), InducedError> {
    let mut cur = g.clone();
    let mut diags = source.clone();
    let mut flips = vec![];
    if polygon.len() >= 6 {
        let mut order = prefer.to_vec();
        order.extend(polygon.iter().copied().filter(|x| !prefer.contains(x)));
        let reached = order.iter().find_map(|&apex| {
            let k = polygon.iter().position(|&x| x == apex)?;
            let fan: BTreeSet<Edge> = (2..polygon.len() - 1)
                .map(|i| Edge::new(apex, polygon[(k + i) % polygon.len()]))
                .collect();
            if fan.iter().any(|e| !diags.contains(e) && cur.has_edge(e.0, e.1)) {
                return None;
            }
            let (mut c, mut d, mut fl) = (cur.clone(), diags.clone(), vec![]);
            toward(&mut c, &mut d, &fan, &mut fl).ok()?;
            Some((c, d, fl))
        });
        let Some((c, d, fl)) = reached else {
            return Err(InducedError::Emulation(format!("no fan reachable in {polygon:?}")));
        };
        (cur, diags, flips) = (c, d, fl);
    }
    toward(&mut cur, &mut diags, target, &mut flips)?;
    Ok((flips, cur))
}

/// Flips diagonals of the polygon not in `goal`, each flip inserting a
/// diagonal of `goal`, until the diagonal sets agree.
fn toward(
    cur: &mut CombTriangulation,
    diags: &mut BTreeSet<Edge>,
    goal: &BTreeSet<Edge>,
    flips: &mut Vec<TriFlip>,
) -> Result<(), InducedError> {
    while diags != goal {
        let step = diags.difference(goal).find_map(|&e| {
            let next = cur.flip(e).ok()?;
            let ins = next.edges().into_iter().find(|f| !cur.has_edge(f.0, f.1))?;
            goal.contains(&ins).then_some((e, ins, next))
        });
        let Some((e, ins, next)) = step else {
            return Err(InducedError::Emulation(format!("stuck at diagonals {diags:?}, goal {goal:?}")));
        };
        diags.remove(&e);
        diags.insert(ins);
        flips.push(TriFlip { removed: e, inserted: ins });
        *cur = next;
    }
    Ok(())
}

/// Hubs `0` and `1`, rim `2..n` in order. The outer face is `0, 2, 3`.
pub fn double_wheel(n: usize) -> Result<CombTriangulation, InducedError> {
    if n < 5 {
        return Err(InducedError::WheelTooSmall(n));
    }
    let k = n - 2;
    let c = |i: usize| 2 + i % k;
    let mut faces = vec![];
    for i in 0..k {
        faces.push(vec![0, c(i + 1), c(i)]);
        faces.push(vec![1, c(i), c(i + 1)]);
    }
    let emb = Embedding::from_faces(n, &faces, Dart::new(0, c(1)))
        .map_err(|e| InducedError::NotTriangulation(e.to_string()))?;
    CombTriangulation::new(emb)
}

/// A 4-PPT whose induced triangulation is one flip from a double wheel:
/// outer `r s t = 0 1 2`, an interior hub `x = 3` whose reflex angle lies in
/// the quadrilateral `r x s t`, and a canonical stack `4..n` in the triangle
/// `x r s` with base `x r`. `I(T)` has hubs `r` and `x`; flipping `r x`
/// closes the rim `s, 4, .., n - 1, t`. Checked before returning.
pub fn lower_bound_instance(n: usize) -> Result<Cppt, InducedError> {
    if n < 4 {
        return Err(InducedError::Construction(n, "need n >= 4".into()));
    }
    let (r, s, t, x) = (0, 1, 2, 3);
    let stack: Vec<Vertex> = (4..n).collect();
    let mut quad = Piece::default();
    quad.faces.push(vec![r, x, s, t]);
    quad.reflex.push((x, 0));
    let shape = assemble(n, &[r, s, t], vec![quad, canonical_piece(x, r, s, &stack)]);
    if !shape.is_valid() {
        return Err(InducedError::Construction(n, "not a valid 4-PPT".into()));
    }
    let i = induced_triangulation(&shape)?;
    match i.flip(Edge::new(r, x)) {
        Ok(w) if w.is_double_wheel() => Ok(shape),
        Ok(_) => Err(InducedError::Construction(n, "flipping the hub edge gives no double wheel".into())),
        Err(e) => Err(InducedError::Construction(n, e.to_string())),
    }
}
