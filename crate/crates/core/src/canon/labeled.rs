//! Canonical and spinal forms, the swap gadgets and label sorting.
//!
//! All states in between are "mixed": spinal in `r s v_{m+1}` with the rest
//! stacked canonically above (see [`crate::fixtures::mixed`]). One flip moves
//! `m` by one; a swap gadget goes from `m = k + 1` to `m = k` while
//! exchanging the vertices at positions `k` and `k + 1`.

use crate::canon::sequence::{FlipSequence, Stage};
use crate::canon::{classify, require_valid, Form, Roles, Walker};
use crate::embedding::{Dart, Edge, Vertex};
use crate::error::CanonError;
use crate::fixtures::{assemble, mixed_piece, Side};
use crate::tagged::Cppt;

/// The outer vertex position `k` (1-based) of a spinal part hangs off.
fn attach(roles: Roles, side: Side, k: usize) -> Vertex {
    if k % 2 == 1 {
        roles.side(side)
    } else {
        roles.side(side.other())
    }
}

fn detached(roles: Roles, side: Side, k: usize) -> Vertex {
    attach(roles, side.other(), k)
}

/// Vertex at position `k`; position `i + 1` is the tip.
fn at(roles: Roles, order: &[Vertex], k: usize) -> Vertex {
    order.get(k - 1).copied().unwrap_or(roles.t)
}

/// `m = k - 1` to `m = k`.
pub(crate) fn up(w: &mut Walker, roles: Roles, side: Side, order: &[Vertex], k: usize, stage: Stage) -> Result<(), CanonError> {
    let v = at(roles, order, k);
    w.flip(
        Edge::new(detached(roles, side, k), v),
        Edge::new(v, at(roles, order, k + 1)),
        stage,
    )
}

/// `m = k` to `m = k - 1`.
pub(crate) fn down(w: &mut Walker, roles: Roles, side: Side, order: &[Vertex], k: usize, stage: Stage) -> Result<(), CanonError> {
    let v = at(roles, order, k);
    w.flip(
        Edge::new(v, at(roles, order, k + 1)),
        Edge::new(detached(roles, side, k), v),
        stage,
    )
}

/// From spinal in `r s v_{k+2}` to spinal in `r s v_{k+1}` with the labels
/// at positions `k` and `k + 1` exchanged (updates `order`).
pub(crate) fn gadget(w: &mut Walker, roles: Roles, side: Side, order: &mut [Vertex], k: usize) -> Result<(), CanonError> {
    let (a, b, tp) = (at(roles, order, k + 1), at(roles, order, k), at(roles, order, k + 2));
    let x = attach(roles, side, k + 1);
    let y = detached(roles, side, k + 1);
    let e = Edge::new;
    let table = if k == 1 {
        vec![(e(x, a), e(x, b)), (e(y, b), e(y, a)), (e(tp, a), e(y, b))]
    } else {
        let c = at(roles, order, k - 1);
        vec![
            (e(x, a), e(tp, b)),
            (e(tp, a), e(y, a)),
            (e(y, b), e(c, a)),
            (e(b, a), e(y, b)),
            (e(tp, b), e(x, b)),
            (e(c, b), e(b, a)),
        ]
    };
    for (rem, ins) in table {
        w.flip(rem, ins, Stage::Swap)?;
    }
    order.swap(k - 1, k);
    Ok(())
}

pub(crate) fn same_graph(a: &Cppt, b: &Cppt) -> bool {
    a.embedding() == b.embedding() && a.reflex_map() == b.reflex_map()
}

/// Order of `t` if it is the mixed state `m` for `roles` and `side`.
pub(crate) fn recognize_mixed(t: &Cppt, roles: Roles, m: usize, side: Side) -> Option<Vec<Vertex>> {
    let n = t.n();
    let i = n.checked_sub(3)?;
    if m > i {
        return None;
    }
    let outer = [roles.r, roles.s, roles.t];
    let mut top_down = vec![];
    let mut u = roles.t;
    for _ in m..i {
        let f = t.face_of(Dart::new(roles.s, u)).vertices();
        if f.len() != 4 || f[2] != roles.r || outer.contains(&f[3]) {
            return None;
        }
        u = f[3];
        top_down.push(u);
    }
    // the spine runs down from the tip of the spinal cell
    for _ in 0..m {
        let next: Vec<Vertex> = t
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&x| !outer.contains(&x) && !top_down.contains(&x))
            .collect();
        if next.len() != 1 {
            return None;
        }
        u = next[0];
        top_down.push(u);
    }
    let mut order = top_down;
    order.reverse();
    let mut sorted = order.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != i {
        return None;
    }
    let expected = assemble(n, &outer, vec![mixed_piece(roles.r, roles.s, roles.t, &order, m, side)]);
    same_graph(&expected, t).then_some(order)
}

fn require_form(t: &Cppt, forms: &[Form]) -> Result<(Roles, Vec<Vertex>), CanonError> {
    require_valid(t)?;
    let p = classify(t);
    if !forms.contains(&p.form) || p.roles.is_none() {
        let expected = forms.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" or ");
        return Err(CanonError::WrongForm {
            expected,
            found: p.form.to_string(),
        });
    }
    Ok((p.roles.unwrap(), p.order))
}

/// Exactly `i` flips from a canonical form to the `side`-spinal form with
/// the same base; the order is preserved along the spine.
pub fn canonical_to_spinal(t: &Cppt, side: Side) -> Result<FlipSequence, CanonError> {
    let (roles, order) = require_form(t, &[Form::Canonical])?;
    let mut w = Walker::new(t);
    for k in 1..=order.len() {
        up(&mut w, roles, side, &order, k, Stage::ToSpinal)?;
    }
    Ok(w.finish())
}

/// Inverse of [`canonical_to_spinal`].
pub fn spinal_to_canonical(t: &Cppt) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let i = t.n() - 3;
    let roles = Roles::of(t)?;
    // small stacks can be spinal for one base and canonical for another,
    // so look for the spinal form directly
    let (roles, side, order) = roles
        .rotations()
        .into_iter()
        .flat_map(|ro| [Side::R, Side::S].map(|side| (ro, side)))
        .find_map(|(ro, side)| recognize_mixed(t, ro, i, side).map(|o| (ro, side, o)))
        .ok_or_else(|| CanonError::WrongForm {
            expected: "r-spinal or s-spinal".into(),
            found: classify(t).form.to_string(),
        })?;
    let mut w = Walker::new(t);
    for k in (1..=order.len()).rev() {
        down(&mut w, roles, side, &order, k, Stage::FromSpinal)?;
    }
    Ok(w.finish())
}

/// Swaps the vertices at positions `k` and `k + 1` of a graph that is
/// spinal in `r s v_{k+2}` (or `r s t` for `k = i - 1`): the gadget, then one
/// flip back to the same spinal cell.
pub fn swap_neighbors(t: &Cppt, k: usize) -> Result<FlipSequence, CanonError> {
    require_valid(t)?;
    let roles = Roles::of(t)?;
    let i = t.n() - 3;
    if k == 0 || k >= i {
        return Err(CanonError::Precondition(format!("swap position {k} outside 1..{i}")));
    }
    let found = roles
        .rotations()
        .into_iter()
        .flat_map(|ro| [(ro, Side::S), (ro, Side::R)])
        .find_map(|(ro, side)| recognize_mixed(t, ro, k + 1, side).map(|o| (ro, side, o)));
    let (roles, side, mut order) = found.ok_or_else(|| CanonError::WrongForm {
        expected: format!("spinal below position {}", k + 2),
        found: classify(t).form.to_string(),
    })?;
    let mut w = Walker::new(t);
    gadget(&mut w, roles, side, &mut order, k)?;
    up(&mut w, roles, side, &order, k + 1, Stage::Swap)?;
    Ok(w.finish())
}

/// Reorders a canonical form so that its interior reads `target` bottom to
/// top, by bubble passes down the spine.
pub fn sort_labels(t: &Cppt, target: &[Vertex]) -> Result<FlipSequence, CanonError> {
    let (roles, mut order) = require_form(t, &[Form::Canonical])?;
    let mut a = order.clone();
    let mut b = target.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(CanonError::BadPermutation);
    }
    let mut w = Walker::new(t);
    sort_in(&mut w, roles, &mut order, target)?;
    Ok(w.finish())
}

/// Bubble passes on the canonical stack of `roles` with interior `order`.
pub(crate) fn sort_in(w: &mut Walker, roles: Roles, order: &mut Vec<Vertex>, target: &[Vertex]) -> Result<(), CanonError> {
    let i = order.len();
    let rank = |v: Vertex| target.iter().position(|&x| x == v).expect("checked permutation");
    let side = Side::S;
    while order.as_slice() != target {
        for k in 1..=i {
            up(w, roles, side, order, k, Stage::ToSpinal)?;
        }
        for k in (1..i).rev() {
            if rank(order[k - 1]) > rank(order[k]) {
                gadget(w, roles, side, order, k)?;
            } else {
                down(w, roles, side, order, k + 1, Stage::PassStep)?;
            }
        }
        down(w, roles, side, order, 1, Stage::FromSpinal)?;
    }
    Ok(())
}
