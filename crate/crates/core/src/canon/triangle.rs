//! Unlabeled canonicalization with a triangular outer face: walk the single
//! triangle to an outer edge along a dual path, empty the tip, recurse below.

use std::collections::{HashMap, VecDeque};

use crate::canon::sequence::{FlipSequence, Stage};
use crate::canon::{require_valid, Roles, Walker};
use crate::embedding::{Dart, Edge, Face, Vertex};
use crate::error::CanonError;
use crate::flip::FlipCase;
use crate::tagged::Cppt;

/// Flips until an interior triangle is incident to the outer edge `b`.
pub fn move_triangle_to_edge(t: &Cppt, b: Edge) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let mut w = Walker::new(t);
    triangle_to_edge(&mut w, b)?;
    Ok(w.finish())
}

/// Dual path from the interior face at `b` back to the nearest triangle,
/// then one flip per path edge keeping the triangle on the next path edge.
pub(crate) fn triangle_to_edge(w: &mut Walker, b: Edge) -> Result<(), CanonError> {
    let t = &w.cur;
    if !t.is_outer_edge(b) {
        return Err(CanonError::NotBoundaryEdge(b.0, b.1));
    }
    let d = [Dart::new(b.0, b.1), Dart::new(b.1, b.0)]
        .into_iter()
        .find(|&d| !t.face_of(d).outer)
        .expect("outer edge has an inner side");

    let faces = t.trace_faces();
    let mut face_id: HashMap<Dart, usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &x in &f.darts {
            face_id.insert(x, i);
        }
    }
    let goal = face_id[&d];
    // parent[f] = (next face towards the goal, dart crossing into it with f on its left)
    let mut parent: HashMap<usize, (usize, Dart)> = HashMap::new();
    let mut queue = VecDeque::from([goal]);
    let mut seen = vec![false; faces.len()];
    seen[goal] = true;
    let mut start = None;
    while let Some(f) = queue.pop_front() {
        if faces[f].len() == 3 {
            start = Some(f);
            break;
        }
        for &x in &faces[f].darts {
            let g = face_id[&x.twin()];
            if g != 0 && !seen[g] {
                seen[g] = true;
                parent.insert(g, (f, x.twin()));
                queue.push_back(g);
            }
        }
    }
    let start = start.ok_or_else(|| CanonError::Stuck("no interior triangle".into()))?;
    let mut path = vec![];
    let mut f = start;
    while f != goal {
        let (g, c) = parent[&f];
        path.push(c);
        f = g;
    }
    path.push(d);

    // path[j] has the current triangle on its left before step j; afterwards
    // the triangle must sit on the left of path[j + 1].
    for j in 0..path.len() - 1 {
        let (c, next) = (path[j], path[j + 1]);
        let cur = &w.cur;
        let tri = cur.face_of(c);
        if tri.len() != 3 {
            return Err(CanonError::Stuck(format!("expected a triangle left of {c}")));
        }
        let across = cur.face_of(c.twin());
        let mut shared: Vec<Edge> = tri
            .darts
            .iter()
            .filter(|x| across.darts.contains(&x.twin()))
            .map(|x| x.edge())
            .collect();
        shared.sort();
        let mut chosen = None;
        'outer: for e in shared {
            for (m, after) in cur.expand(e)? {
                if after.face_of(next).len() == 3 {
                    chosen = Some(m);
                    break 'outer;
                }
            }
        }
        let m = chosen.ok_or_else(|| CanonError::Stuck(format!("no flip moves the triangle onto {next}")))?;
        w.flip(m.removed, m.inserted, Stage::MoveTriangle)?;
    }
    Ok(())
}

/// Empties the tip `tip` of the outer edge `b` (triangular outer face).
pub fn clear_tip(t: &Cppt, b: Edge, tip: Vertex) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let c = t.outer_cycle();
    if c.len() != 3 {
        return Err(CanonError::NotTriangular(c.len()));
    }
    if !t.is_outer_edge(b) || !b.contains(tip) {
        return Err(CanonError::NotBoundaryEdge(b.0, b.1));
    }
    let r = b.other(tip);
    let s = c.iter().copied().find(|&v| v != r && v != tip).unwrap();
    // r, s, tip must run counterclockwise; otherwise swap the names, which
    // mirrors the construction.
    let pos = |v| c.iter().position(|&x| x == v).unwrap();
    let roles = if (pos(r) + 1) % 3 == pos(s) {
        Roles { r, s, t: tip }
    } else {
        Roles { r: s, s: r, t: tip }
    };
    let mut w = Walker::new(t);
    clear_tip_in(&mut w, roles, r)?;
    Ok(w.finish())
}

fn fourth(face: &[Vertex], known: &[Vertex]) -> Result<Vertex, CanonError> {
    face.iter()
        .copied()
        .find(|v| !known.contains(v))
        .ok_or_else(|| CanonError::Stuck(format!("face {face:?} has no fourth vertex")))
}

/// Neighbors of `t` from `from` to `to` through the interior; `t` is an
/// outer vertex and the interior lies counterclockwise from `from` when
/// `ccw`.
fn fan(t: &Cppt, v: Vertex, from: Vertex, to: Vertex, ccw: bool) -> Vec<Vertex> {
    let emb = t.embedding();
    let mut out = vec![from];
    let mut x = from;
    while x != to {
        x = if ccw { emb.succ(v, x) } else { emb.pred(v, x) };
        out.push(x);
    }
    out
}

/// The two phases of tip clearing. The triangle sits on `anchor tip`, where
/// `anchor` is `roles.r` or `roles.s`; `w_0 = anchor` and the neighbors of
/// the tip are numbered towards the other one.
pub(crate) fn clear_tip_in(w: &mut Walker, roles: Roles, anchor: Vertex) -> Result<(), CanonError> {
    let t = roles.t;
    let far = if anchor == roles.r { roles.s } else { roles.r };
    // interior at the tip runs counterclockwise from r to s
    let ccw = anchor == roles.r;
    let nb = |w: &Walker| fan(&w.cur, t, anchor, far, ccw);
    let tri_left = |w: &Walker, a: Vertex, b: Vertex| {
        // the face holding the corner of the tip between a and b
        let d = if ccw { Dart::new(t, a) } else { Dart::new(t, b) };
        w.cur.face_of(d)
    };
    let other_face = |w: &Walker, x: Vertex, tri: &[Vertex]| {
        let f1 = w.cur.face_of(Dart::new(t, x));
        let f2 = w.cur.face_of(Dart::new(x, t));
        if f1.len() == 3 && tri.iter().all(|v| f1.vertices().contains(v)) {
            f2
        } else {
            f1
        }
    };

    // Phase 1: the triangle is tip, w0, w1.
    loop {
        let ws = nb(w);
        if ws.len() == 2 {
            return Ok(());
        }
        let (w0, w1, w2) = (ws[0], ws[1], ws[2]);
        let tri = tri_left(w, w0, w1);
        if tri.len() != 3 {
            return Err(CanonError::Precondition(format!("no triangle on {w0}-{t}")));
        }
        let tw1 = Edge::new(t, w1);
        let case = w.cur.flip_candidates(tw1)?.first().map(|m| m.case);
        if ws.len() == 3 {
            // Case 1: t w1 is the only inner edge.
            return finish_tip(w, tw1, case, t, w0, w1, w2, &other_face(w, w1, &[t, w0, w1]));
        }
        if !w.cur.has_edge(w0, w2) {
            // Case 2
            w.flip(tw1, Edge::new(w0, w2), Stage::ClearTip)?;
            continue;
        }
        // Case 3, then Phase 2.
        if case == Some(FlipCase::Degenerate5) {
            w.flip(Edge::new(w0, w1), Edge::new(w1, w2), Stage::ClearTip)?;
        } else {
            let f = other_face(w, w1, &[t, w0, w1]);
            let u = fourth(&f.vertices(), &[t, w1, w2])?;
            w.flip(tw1, Edge::new(t, u), Stage::ClearTip)?;
        }
        break;
    }

    // Phase 2: the triangle is tip, w1, w2 with w1 fixed.
    loop {
        let ws = nb(w);
        let (w1, w2) = (ws[1], ws[2]);
        let tri = tri_left(w, w1, w2);
        if tri.len() != 3 {
            return Err(CanonError::Stuck(format!("phase 2 lost the triangle at {t}")));
        }
        if w2 != far {
            // Case 1
            w.flip(Edge::new(t, w2), Edge::new(w1, ws[3]), Stage::ClearTip)?;
            continue;
        }
        // Case 2, mirror of phase 1 case 1.
        let tw1 = Edge::new(t, w1);
        let case = w.cur.flip_candidates(tw1)?.first().map(|m| m.case);
        return finish_tip(w, tw1, case, t, w2, w1, ws[0], &other_face(w, w1, &[t, w1, w2]));
    }
}

/// Last flip of the tip: `t x1` is its only inner edge, the triangle is
/// `t x0 x1` and `f` the face across `t x1`, `t x1 u x2` unless degenerate.
#[allow(clippy::too_many_arguments)]
fn finish_tip(
    w: &mut Walker,
    tx1: Edge,
    case: Option<FlipCase>,
    t: Vertex,
    x0: Vertex,
    x1: Vertex,
    x2: Vertex,
    f: &Face,
) -> Result<(), CanonError> {
    if case == Some(FlipCase::Degenerate5) {
        let m = w.cur.flip_candidates(tx1)?.remove(0);
        return w.flip(m.removed, m.inserted, Stage::ClearTip);
    }
    let u = fourth(&f.vertices(), &[t, x1, x2])?;
    let reflex_at_u = f.darts.iter().any(|&d| d.origin == u && w.cur.is_reflex(d));
    let ins = if reflex_at_u { Edge::new(x0, u) } else { Edge::new(x1, x2) };
    w.flip(tx1, ins, Stage::ClearTip)
}

/// Flips a triangular-outer-face 4-PPT to the canonical form with base
/// `rs` for the default roles.
pub fn canonicalize_triangular(t: &Cppt) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let roles = Roles::of(t)?;
    let mut w = Walker::new(t);
    canonicalize_in(&mut w, roles)?;
    Ok(w.finish_reduced())
}

/// Canonical form with base `r s` inside the triangle `roles`, which must
/// be a region of `w.cur` whose corners keep their reflex angles outside.
/// Returns the interior order, bottom to top.
pub(crate) fn canonicalize_in(w: &mut Walker, roles: Roles) -> Result<Vec<Vertex>, CanonError> {
    let mut tip = roles.t;
    let mut top_down = vec![];
    loop {
        let (x, map) = w.in_region(&[roles.r, roles.s, tip], |lw| {
            if lw.cur.n() == 3 {
                return Ok(None);
            }
            let local = Roles { r: 0, s: 1, t: 2 };
            triangle_to_edge(lw, Edge::new(0, 2))?;
            clear_tip_in(lw, local, 0)?;
            let f = lw.cur.face_of(Dart::new(1, 2)).vertices();
            Ok(Some(fourth(&f, &[0, 1, 2])?))
        })?;
        match x {
            None => break,
            Some(x) => {
                tip = map[x];
                top_down.push(tip);
            }
        }
    }
    top_down.reverse();
    Ok(top_down)
}
