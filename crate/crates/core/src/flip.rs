//! Flips: exchange an interior edge of an interior triangle for another
//! edge so that the result is again a combinatorial 4-PPT.
//!
//! Removing `e` merges its two faces into one walk `p_0 .. p_{L-1}`. A new
//! edge always cuts off a triangle `p_k p_{k+1} p_{k+2}`; it is a valid
//! candidate when the apex angle at `p_{k+1}` is convex, the endpoints are
//! distinct, and the edge is neither `e` nor already present. The one reflex
//! angle inside the region (if any) stays on the quadrilateral side.

use serde::Serialize;

use crate::tagged::Cppt;
use crate::embedding::{Angle, Dart, Edge, Vertex};
use crate::error::FlipError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FlipCase {
    /// Two triangles share the edge.
    #[serde(rename = "TT")]
    TwoTriangles,
    /// Triangle and quadrilateral merge into a 5-walk that repeats an edge.
    #[serde(rename = "DEG5")]
    Degenerate5,
    /// Triangle and quadrilateral merge into a simple pentagon.
    #[serde(rename = "NONDEG5")]
    Pentagon,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlipMove {
    pub removed: Edge,
    pub inserted: Edge,
    pub case: FlipCase,
    /// Vertices whose reflex angle moves, with the new angle.
    pub reflex_updates: Vec<(Vertex, Angle)>,
}

impl Cppt {
    /// Interior edges on at least one interior triangle.
    pub fn flippable_edges(&self) -> Vec<Edge> {
        let faces = self.trace_faces();
        let outer = &faces[0];
        let mut out: Vec<Edge> = faces[1..]
            .iter()
            .filter(|f| f.len() == 3)
            .flat_map(|f| f.darts.iter().map(|d| d.edge()))
            .filter(|&e| !outer.contains_edge(e))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// All valid flips of `e`, ordered by inserted edge.
    pub fn flip_candidates(&self, e: Edge) -> Result<Vec<FlipMove>, FlipError> {
        Ok(self.expand(e)?.into_iter().map(|(m, _)| m).collect())
    }

    /// Candidates together with the graphs they produce.
    pub fn expand(&self, e: Edge) -> Result<Vec<(FlipMove, Cppt)>, FlipError> {
        let Edge(u, v) = e;
        if !self.has_edge(u, v) {
            return Err(FlipError::NotAnEdge(u, v));
        }
        if self.is_outer_edge(e) {
            return Err(FlipError::OuterEdge(u, v));
        }
        let emb = self.embedding();
        let (f1, f2) = (emb.face_of(Dart::new(u, v)), emb.face_of(Dart::new(v, u)));
        if f1.len() != 3 && f2.len() != 3 {
            return Err(FlipError::NoIncidentTriangle(u, v));
        }

        let mut base = self.clone();
        let w = emb.pred(v, u);
        {
            let (emb_mut, reflex) = base.parts_mut();
            for (x, y) in [(u, v), (v, u)] {
                if reflex[x] == y {
                    reflex[x] = emb_mut.pred(x, y);
                }
            }
            emb_mut.remove_edge(u, v);
        }
        let walk = base.face_of(Dart::new(v, w)).vertices();
        let l = walk.len();
        let case = match l {
            4 => FlipCase::TwoTriangles,
            5 if walk.iter().enumerate().any(|(i, x)| walk[i + 1..].contains(x)) => FlipCase::Degenerate5,
            5 => FlipCase::Pentagon,
            _ => return Err(FlipError::BadRegion((u, v), format!("merged walk {walk:?}"))),
        };
        let p = |k: usize| walk[k % l];

        let mut out: Vec<(FlipMove, Cppt)> = vec![];
        for k in 0..l {
            let (a, apex, b) = (p(k), p(k + 1), p(k + 2));
            let ins = Edge::new(a, b);
            if a == b || ins == e || base.reflex_map()[apex] == p(k + 2) {
                continue;
            }
            if out.iter().any(|(m, _)| m.inserted == ins) {
                continue;
            }
            if base.has_edge(a, b) {
                if case == FlipCase::TwoTriangles {
                    return Err(FlipError::TwoTriangleMultiEdge((u, v), (ins.0, ins.1)));
                }
                continue;
            }
            let mut next = base.clone();
            {
                let (emb_mut, reflex) = next.parts_mut();
                emb_mut.insert_edge(a, apex, b, p(k + 3));
                if reflex[a] == apex {
                    reflex[a] = b;
                }
            }
            let reflex_updates = (0..self.n())
                .filter(|&x| next.reflex_map()[x] != self.reflex_map()[x])
                .map(|x| (x, next.reflex_angle(x)))
                .collect();
            let m = FlipMove {
                removed: e,
                inserted: ins,
                case,
                reflex_updates,
            };
            out.push((m, next));
        }
        out.sort_by_key(|(m, _)| m.inserted);
        Ok(out)
    }

    /// Applies `m`, which must be a current candidate.
    pub fn apply_flip(&self, m: &FlipMove) -> Result<Cppt, FlipError> {
        self.expand(m.removed)?
            .into_iter()
            .find(|(c, _)| c == m)
            .map(|(_, t)| t)
            .ok_or(FlipError::StaleMove {
                removed: (m.removed.0, m.removed.1),
                inserted: (m.inserted.0, m.inserted.1),
            })
    }

    /// Looks up the candidate of `removed` that inserts `inserted`.
    pub fn find_move(&self, removed: Edge, inserted: Edge) -> Result<FlipMove, FlipError> {
        let removed = Edge::new(removed.0, removed.1);
        let inserted = Edge::new(inserted.0, inserted.1);
        self.flip_candidates(removed)?
            .into_iter()
            .find(|m| m.inserted == inserted)
            .ok_or(FlipError::StaleMove {
                removed: (removed.0, removed.1),
                inserted: (inserted.0, inserted.1),
            })
    }

    /// Flips `removed` to `inserted`.
    pub fn flip(&self, removed: Edge, inserted: Edge) -> Result<Cppt, FlipError> {
        self.flip_with_move(removed, inserted).map(|(_, t)| t)
    }

    /// Like [`Cppt::flip`], also returning the move record.
    pub fn flip_with_move(&self, removed: Edge, inserted: Edge) -> Result<(FlipMove, Cppt), FlipError> {
        let removed = Edge::new(removed.0, removed.1);
        let inserted = Edge::new(inserted.0, inserted.1);
        self.expand(removed)?
            .into_iter()
            .find(|(m, _)| m.inserted == inserted)
            .ok_or(FlipError::StaleMove {
                removed: (removed.0, removed.1),
                inserted: (inserted.0, inserted.1),
            })
    }

    /// All graphs one flip away, with their moves.
    pub fn neighbors_by_flip(&self) -> Vec<(FlipMove, Cppt)> {
        self.flippable_edges()
            .into_iter()
            .flat_map(|e| self.expand(e).expect("flippable edge"))
            .collect()
    }
}

impl FlipMove {
    /// The move undoing `self`, as a candidate of `after` (the graph `self`
    /// produced).
    pub fn reverse(&self, after: &Cppt) -> Result<FlipMove, FlipError> {
        after.find_move(self.inserted, self.removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Side};

    fn e(a: Vertex, b: Vertex) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn canonical_flippable() {
        for n in 4..9 {
            assert_eq!(fixtures::canonical(n).flippable_edges(), vec![e(0, 3), e(1, 3)]);
        }
        assert!(fixtures::canonical(3).flippable_edges().is_empty());
    }

    #[test]
    fn canonical_four_deg5() {
        let t = fixtures::canonical(4);
        let c = t.flip_candidates(e(0, 3)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].inserted, e(2, 3));
        assert_eq!(c[0].case, FlipCase::Degenerate5);
        let t2 = t.apply_flip(&c[0]).unwrap();
        assert!(t2.is_valid());
        assert_eq!(t2.degree(0), 2);
        let back = c[0].reverse(&t2).unwrap();
        assert_eq!(t2.apply_flip(&back).unwrap(), t);
    }

    #[test]
    fn spinal_five_pentagon() {
        let t = fixtures::spinal(5, Side::S);
        let c = t.flip_candidates(e(0, 4)).unwrap();
        assert!(c.iter().all(|m| m.case == FlipCase::Pentagon));
        let ins: Vec<Edge> = c.iter().map(|m| m.inserted).collect();
        assert_eq!(ins, vec![e(0, 3), e(2, 3)]);
        for m in &c {
            assert!(t.apply_flip(m).unwrap().is_valid());
        }
    }

    #[test]
    fn outer_square_tt() {
        let t = fixtures::outer_square(true);
        let c = t.flip_candidates(e(0, 2)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].case, c[0].inserted), (FlipCase::TwoTriangles, e(1, 3)));
        assert_eq!(t.apply_flip(&c[0]).unwrap(), fixtures::outer_square(false));
    }

    #[test]
    fn errors() {
        let t = fixtures::canonical(5);
        assert_eq!(t.flip_candidates(e(0, 1)), Err(FlipError::OuterEdge(0, 1)));
        assert_eq!(t.flip_candidates(e(2, 3)), Err(FlipError::NotAnEdge(2, 3)));
        assert_eq!(t.flip_candidates(e(0, 4)), Err(FlipError::NoIncidentTriangle(0, 4)));
        let stale = FlipMove {
            removed: e(0, 3),
            inserted: e(0, 2),
            case: FlipCase::Degenerate5,
            reflex_updates: vec![],
        };
        assert!(matches!(t.apply_flip(&stale), Err(FlipError::StaleMove { .. })));
    }
}
