//! Arbitrary outer faces: fan the outer polygon at `o_1`, canonicalize each
//! fan cell, then rotate and merge cells down into `o_1 o_2 o_3`. Also the
//! end-to-end sequence between two graphs.

use crate::canon::labeled::{down, recognize_mixed, sort_in, up};
use crate::canon::region::extract;
use crate::canon::sequence::{FlipSequence, Stage};
use crate::canon::triangle::{canonicalize_in, triangle_to_edge};
use crate::canon::{classify, require_valid, Form, Roles, Walker};
use crate::embedding::{Dart, Edge, Vertex};
use crate::error::CanonError;
use crate::fixtures::Side;
use crate::flip::FlipCase;
use crate::lab::Mode;
use crate::tagged::Cppt;

fn polygon(t: &Cppt) -> Result<Vec<Vertex>, CanonError> {
    let o = t.outer_cycle();
    if o.len() < 4 {
        return Err(CanonError::Precondition(format!("outer face has {} vertices, need at least 4", o.len())));
    }
    Ok(o)
}

/// Introduces the diagonal `o_1 o_{h-1}` by moving a triangle onto `o_h o_1`
/// and sweeping it around `o_h`. The sweep is skipped when moving the
/// triangle already inserted the diagonal; otherwise `o_1 o_{h-1} o_h` ends
/// up a face.
pub fn cut_ear(t: &Cppt) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let o = polygon(t)?;
    let h = o.len();
    if t.has_edge(o[0], o[h - 2]) {
        return Err(CanonError::Precondition(format!("diagonal {}-{} already present", o[0], o[h - 2])));
    }
    let mut w = Walker::new(t);
    triangle_to_edge(&mut w, Edge::new(o[h - 1], o[0]))?;
    if !w.cur.has_edge(o[0], o[h - 2]) {
        cut_ear_in(&mut w, o[0], o[h - 2], o[h - 1])?;
    }
    Ok(w.finish())
}

/// The ear sweep, with an interior triangle already on `o1 oh`. The
/// triangle's far corner `a` starts at `o1` and may be replaced once by a
/// safe vertex, which costs one extra flip at the end.
pub(crate) fn cut_ear_in(w: &mut Walker, o1: Vertex, prev: Vertex, oh: Vertex) -> Result<(), CanonError> {
    let mut a = o1;
    let mut substituted = false;
    loop {
        let emb = w.cur.embedding();
        let x = emb.succ(oh, a);
        if w.cur.face_of(Dart::new(oh, a)).len() != 3 {
            return Err(CanonError::Stuck(format!("no triangle on {a}-{oh}")));
        }
        if x == prev {
            break;
        }
        let next = emb.succ(oh, x);
        let e = Edge::new(oh, x);
        let case = w.cur.flip_candidates(e)?[0].case;
        match case {
            FlipCase::TwoTriangles => w.flip(e, Edge::new(a, next), Stage::CutEar)?,
            FlipCase::Degenerate5 => {
                if substituted {
                    return Err(CanonError::Stuck("second substitution of the ear corner".into()));
                }
                let m = w.cur.flip_candidates(Edge::new(a, x))?.remove(0);
                w.flip(m.removed, m.inserted, Stage::CutEar)?;
                a = x;
                substituted = true;
            }
            FlipCase::Pentagon if w.cur.has_edge(a, next) => {
                if substituted {
                    return Err(CanonError::Stuck("second substitution of the ear corner".into()));
                }
                let f = w.cur.face_of(Dart::new(oh, x)).vertices();
                let y = f
                    .iter()
                    .copied()
                    .find(|v| ![a, oh, x, next].contains(v))
                    .ok_or_else(|| CanonError::Stuck("pentagon without a fifth vertex".into()))?;
                w.flip(e, Edge::new(y, oh), Stage::CutEar)?;
                a = y;
                substituted = true;
            }
            FlipCase::Pentagon => w.flip(e, Edge::new(a, next), Stage::CutEar)?,
        }
    }
    if a != o1 {
        w.flip(Edge::new(a, oh), Edge::new(o1, prev), Stage::CutEar)?;
    }
    Ok(())
}

/// Adds the diagonals `o_1 o_j`, `j = h-1` down to `3`, each by cutting an
/// ear of the polygon left over. Empty for a triangular outer face.
pub fn fan_outer_face(t: &Cppt) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let mut w = Walker::new(t);
    fan_in(&mut w)?;
    Ok(w.finish())
}

fn fan_in(w: &mut Walker) -> Result<(), CanonError> {
    let o = w.cur.outer_cycle();
    for m in (4..=o.len()).rev() {
        if w.cur.has_edge(o[0], o[m - 2]) {
            continue;
        }
        w.in_region(&o[..m], |lw| {
            triangle_to_edge(lw, Edge::new(m - 1, 0))?;
            // moving the triangle can already insert the diagonal
            if lw.cur.has_edge(0, m - 2) {
                return Ok(());
            }
            cut_ear_in(lw, 0, m - 2, m - 1)
        })?;
    }
    Ok(())
}

fn has_fan(t: &Cppt, o: &[Vertex]) -> bool {
    (2..o.len() - 1).all(|j| t.has_edge(o[0], o[j]))
}

/// Roles used for cell `j` (cell `j` is `o_0 o_j o_{j+1}`, 0-based) after
/// canonicalization: base `o_{j+1} o_0`, except base `o_0 o_j` for the last.
fn cell_roles(o: &[Vertex], j: usize) -> Roles {
    if j + 2 == o.len() {
        Roles {
            r: o[0],
            s: o[j],
            t: o[j + 1],
        }
    } else {
        Roles {
            r: o[j + 1],
            s: o[0],
            t: o[j],
        }
    }
}

/// Canonicalizes every fan cell (the fan at `o_1` must be present).
pub fn canonicalize_cells(t: &Cppt) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let mut w = Walker::new(t);
    cells_in(&mut w)?;
    Ok(w.finish())
}

fn cells_in(w: &mut Walker) -> Result<Vec<Vec<Vertex>>, CanonError> {
    let o = w.cur.outer_cycle();
    if o.len() >= 4 && !has_fan(&w.cur, &o) {
        return Err(CanonError::Precondition("fan at o1 is missing".into()));
    }
    let mut orders = vec![];
    for j in 1..o.len() - 1 {
        orders.push(canonicalize_in(w, cell_roles(&o, j))?);
    }
    Ok(orders)
}

/// Rotates a canonical stack with base `rs` to base `st`. Goes through the
/// `r`-spinal form for odd `i` and the `s`-spinal form for even `i`, turning
/// the spine by flipping every other attachment. Returns the new roles and
/// order.
pub(crate) fn rotate_st(w: &mut Walker, roles: Roles, order: &[Vertex]) -> Result<(Roles, Vec<Vertex>), CanonError> {
    let i = order.len();
    let new = roles.rotated();
    let reversed: Vec<Vertex> = order.iter().rev().copied().collect();
    if i == 0 {
        return Ok((new, reversed));
    }
    let v = |k: usize| order[k - 1];
    let side = if i % 2 == 1 { Side::R } else { Side::S };
    for k in 1..=i {
        up(w, roles, side, order, k, Stage::ToSpinal)?;
    }
    let last = if i % 2 == 1 { 3 } else { 4 };
    for j in (last..=i).rev().step_by(2) {
        w.flip(Edge::new(roles.r, v(j)), Edge::new(roles.t, v(j - 2)), Stage::RotateSpine)?;
    }
    let mut top = i;
    if i.is_multiple_of(2) {
        // the last turn of the spine merged with the first flip back down
        let y = if i % 2 == 1 { new.r } else { new.s };
        w.flip(Edge::new(roles.r, v(2)), Edge::new(y, v(1)), Stage::RotateSpine)?;
        top = i - 1;
    }
    for k in (1..=top).rev() {
        down(w, new, Side::S, &reversed, k, Stage::FromSpinal)?;
    }
    Ok((new, reversed))
}

/// Rotates a canonical triangular 4-PPT to the base edge `new_base`, at
/// most `3i` flips.
pub fn rotate_canonical(t: &Cppt, new_base: Edge) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let p = classify(t);
    let (Form::Canonical, Some(roles)) = (p.form, p.roles) else {
        return Err(CanonError::WrongForm {
            expected: "canonical".into(),
            found: p.form.to_string(),
        });
    };
    let nb = Edge::new(new_base.0, new_base.1);
    let mut w = Walker::new(t);
    if nb == roles.base() {
    } else if nb == roles.rotated().base() {
        rotate_st(&mut w, roles, &p.order)?;
    } else if nb == Edge::new(roles.t, roles.r) {
        // mirror image: swap the names of r and s
        let mirrored = Roles {
            r: roles.s,
            s: roles.r,
            t: roles.t,
        };
        rotate_st(&mut w, mirrored, &p.order)?;
    } else {
        return Err(CanonError::NotBoundaryEdge(new_base.0, new_base.1));
    }
    Ok(w.finish())
}

/// Moves the stack of cell `C_{j+1}` into `C_j` across their shared
/// diagonal `o1 o_{j+1}`: flip the diagonal, two flips per vertex, flip it
/// back. `a` is the stack of `C_j` (roles `o_{j+1} o_1 o_j`), `b` that of
/// `C_{j+1}` (roles `o_1 o_{j+1} o_{j+2}`). Returns the merged stack.
fn merge_in(w: &mut Walker, o1: Vertex, oj: Vertex, oj1: Vertex, oj2: Vertex, a: &[Vertex], b: &[Vertex]) -> Result<Vec<Vertex>, CanonError> {
    if b.is_empty() {
        return Ok(a.to_vec());
    }
    let mut x = a.first().copied().unwrap_or(oj);
    w.flip(Edge::new(o1, oj1), Edge::new(x, b[0]), Stage::Merge)?;
    for (q, &y) in b.iter().enumerate() {
        let y2 = b.get(q + 1).copied().unwrap_or(oj2);
        w.flip(Edge::new(o1, y), Edge::new(y, y2), Stage::Merge)?;
        w.flip(Edge::new(x, y), Edge::new(o1, y), Stage::Merge)?;
        x = y;
    }
    w.flip(Edge::new(x, oj2), Edge::new(o1, oj1), Stage::Merge)?;
    Ok(b.iter().rev().chain(a).copied().collect())
}

/// Stack of the triangle `roles` if it holds a canonical 4-PPT for them.
pub(crate) fn cell_order(t: &Cppt, roles: Roles) -> Option<Vec<Vertex>> {
    let (local, map) = extract(t, &roles.cycle()).ok()?;
    let order = recognize_mixed(&local, Roles { r: 0, s: 1, t: 2 }, 0, Side::S)?;
    Some(order.into_iter().map(|v| map[v]).collect())
}

/// Merges cell `C_{j+1}` into `C_j` (1-based as `C_j = o_1 o_j o_{j+1}`,
/// `2 <= j <= h - 2`). Both cells must be canonical with the shared
/// diagonal as base.
pub fn merge_cells(t: &Cppt, j: usize) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let o = polygon(t)?;
    let h = o.len();
    if !(2..=h - 2).contains(&j) {
        return Err(CanonError::Precondition(format!("cell index {j} outside 2..={}", h - 2)));
    }
    if !has_fan(t, &o) {
        return Err(CanonError::Precondition("fan at o1 is missing".into()));
    }
    let (o1, oj, oj1, oj2) = (o[0], o[j - 1], o[j], o[j + 1]);
    let a = cell_order(t, Roles { r: oj1, s: o1, t: oj });
    let b = cell_order(t, Roles { r: o1, s: oj1, t: oj2 });
    let (Some(a), Some(b)) = (a, b) else {
        return Err(CanonError::Precondition(format!("cells are not canonical with base {o1}-{oj1}")));
    };
    let mut w = Walker::new(t);
    merge_in(&mut w, o1, oj, oj1, oj2, &a, &b)?;
    Ok(w.finish())
}

/// Interior order of a general canonical form.
pub(crate) fn recognize_general(t: &Cppt) -> Option<Vec<Vertex>> {
    let o = t.outer_cycle();
    if o.len() < 4 || !has_fan(t, &o) {
        return None;
    }
    let order = cell_order(t, Roles { r: o[0], s: o[1], t: o[2] })?;
    (order.len() + o.len() == t.n()).then_some(order)
}

/// Flips any 4-PPT to the general canonical form (the canonical form for a
/// triangular outer face).
pub fn canonicalize_general(t: &Cppt) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let mut w = Walker::new(t);
    general_in(&mut w)?;
    Ok(w.finish_reduced())
}

/// Returns the roles and order of the final stack.
fn general_in(w: &mut Walker) -> Result<(Roles, Vec<Vertex>), CanonError> {
    let o = w.cur.outer_cycle();
    let h = o.len();
    if h == 3 {
        let roles = Roles::of(&w.cur)?;
        let order = canonicalize_in(w, roles)?;
        return Ok((roles, order));
    }
    if let Some(order) = recognize_general(&w.cur) {
        return Ok((cell_roles(&o, 1).rotated(), order));
    }
    fan_in(w)?;
    let mut orders = cells_in(w)?;
    // orders[j - 1] is cell j (0-based vertex indices: o_0 o_j o_{j+1})
    for j in (1..h - 2).rev() {
        let mut src = orders[j].clone();
        if j + 1 < h - 2 {
            src = rotate_st(w, cell_roles(&o, j + 1), &src)?.1;
        }
        orders[j - 1] = merge_in(w, o[0], o[j], o[j + 1], o[j + 2], &orders[j - 1], &src)?;
        orders[j].clear();
    }
    rotate_st(w, cell_roles(&o, 1), &orders[0])
}

/// A flip sequence from `t1` to `t2`. Both are canonicalized; in labeled
/// mode the first stack is then bubble-sorted into the second's order. The
/// second half is the reversed canonicalization of `t2`. In unlabeled mode
/// the endpoint is `t2` up to renaming interior vertices.
pub fn flip_sequence(t1: &Cppt, t2: &Cppt, mode: Mode) -> Result<FlipSequence, CanonError> {
    require_valid(t1)?;
    require_valid(t2)?;
    if t1.n() != t2.n() || t1.outer_cycle() != t2.outer_cycle() {
        return Err(CanonError::OuterMismatch);
    }
    let mut w1 = Walker::new(t1);
    let (roles, mut order1) = general_in(&mut w1)?;
    let mut w2 = Walker::new(t2);
    let (_, order2) = general_in(&mut w2)?;
    let back = w2.finish().reversed()?;
    let back = match mode {
        Mode::Labeled => {
            sort_in(&mut w1, roles, &mut order1, &order2)?;
            back
        }
        Mode::Unlabeled => {
            let mut perm: Vec<Vertex> = (0..t2.n()).collect();
            for (&a, &b) in order2.iter().zip(&order1) {
                perm[a] = b;
            }
            back.relabel(&perm)
        }
    };
    let mut seq = w1.finish().then(back)?;
    seq.cancel_inverse_pairs();
    Ok(seq)
}
