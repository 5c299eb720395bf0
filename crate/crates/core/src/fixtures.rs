//! Named instances used by tests, the CLI and the acceptance suite.
//!
//! Triangular instances use `r = 0`, `s = 1`, `t = 2` (counterclockwise) and
//! interior vertices `v_k = k + 2`, numbered bottom (next to `rs`) to top.

use crate::tagged::Cppt;
use crate::embedding::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    R,
    S,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::R => Side::S,
            Side::S => Side::R,
        }
    }
}

/// Interior faces of a region plus, for each interior vertex, the index of
/// the face holding its reflex angle.
#[derive(Clone, Debug, Default)]
pub(crate) struct Piece {
    pub faces: Vec<Vec<Vertex>>,
    pub reflex: Vec<(Vertex, usize)>,
}

impl Piece {
    fn push(&mut self, face: Vec<Vertex>) -> usize {
        self.faces.push(face);
        self.faces.len() - 1
    }

    fn mirrored(mut self) -> Piece {
        for f in &mut self.faces {
            f.reverse();
        }
        self
    }
}

/// Canonical filling of the triangle `r s t` (counterclockwise) with base
/// `rs`; `vs` bottom to top.
pub(crate) fn canonical_piece(r: Vertex, s: Vertex, t: Vertex, vs: &[Vertex]) -> Piece {
    let mut p = Piece::default();
    let Some(&v1) = vs.first() else {
        p.push(vec![r, s, t]);
        return p;
    };
    p.push(vec![r, s, v1]);
    for (k, &v) in vs.iter().enumerate() {
        let above = vs.get(k + 1).copied().unwrap_or(t);
        let f = p.push(vec![r, v, s, above]);
        p.reflex.push((v, f));
    }
    p
}

/// Spinal filling of `r s t`; `v_1` hangs off `s` for [`Side::S`].
pub(crate) fn spinal_piece(r: Vertex, s: Vertex, t: Vertex, vs: &[Vertex], side: Side) -> Piece {
    if side == Side::R {
        return spinal_piece(s, r, t, vs, Side::S).mirrored();
    }
    let mut p = Piece::default();
    let i = vs.len();
    if i == 0 {
        p.push(vec![r, s, t]);
        return p;
    }
    let w = |k: usize| if k <= i { vs[k - 1] } else { t };
    let attach_s = |k: usize| k % 2 == 1;
    let f = p.push(vec![r, s, w(1), w(2)]);
    p.reflex.push((w(1), f));
    for k in 1..i {
        let face = if attach_s(k) {
            vec![s, w(k + 2), w(k + 1), w(k)]
        } else {
            vec![r, w(k), w(k + 1), w(k + 2)]
        };
        let f = p.push(face);
        p.reflex.push((w(k + 1), f));
    }
    if attach_s(i) {
        p.push(vec![s, t, w(i)]);
    } else {
        p.push(vec![r, w(i), t]);
    }
    p
}

/// Canonical stack for `vs[m..]` over a spinal filling of `r s vs[m]` with
/// `vs[..m]` ("spinal in `r s v_{m+1}`"). `m = 0` is canonical and
/// `m = vs.len()` fully spinal.
pub(crate) fn mixed_piece(r: Vertex, s: Vertex, t: Vertex, vs: &[Vertex], m: usize, side: Side) -> Piece {
    let tip = vs.get(m).copied().unwrap_or(t);
    let mut p = spinal_piece(r, s, tip, &vs[..m], side);
    for k in m..vs.len() {
        let above = vs.get(k + 1).copied().unwrap_or(t);
        let f = p.push(vec![r, vs[k], s, above]);
        p.reflex.push((vs[k], f));
    }
    p
}

/// Glues pieces inside the outer cycle `outer` (counterclockwise).
pub(crate) fn assemble(n: usize, outer: &[Vertex], pieces: Vec<Piece>) -> Cppt {
    let mut walk = vec![outer[0]];
    walk.extend(outer[1..].iter().rev());
    let mut faces = vec![walk];
    let mut reflex_face = vec![0; n];
    for p in pieces {
        let off = faces.len();
        for (v, f) in p.reflex {
            reflex_face[v] = off + f;
        }
        faces.extend(p.faces);
    }
    Cppt::from_faces(n, &faces, 0, &reflex_face).expect("fixture is well formed")
}

fn interior(n: usize, from: usize) -> Vec<Vertex> {
    (from..n).collect()
}

/// Canonical 4-PPT on `n >= 3` vertices with base `rs`.
pub fn canonical(n: usize) -> Cppt {
    assert!(n >= 3);
    assemble(n, &[0, 1, 2], vec![canonical_piece(0, 1, 2, &interior(n, 3))])
}

/// Canonical 4-PPT whose interior vertices appear bottom to top in `order`.
pub fn canonical_ordered(order: &[Vertex]) -> Cppt {
    let n = order.len() + 3;
    assemble(n, &[0, 1, 2], vec![canonical_piece(0, 1, 2, order)])
}

/// `r`- or `s`-spinal 4-PPT on `n >= 3` vertices.
pub fn spinal(n: usize, side: Side) -> Cppt {
    assert!(n >= 3);
    assemble(n, &[0, 1, 2], vec![spinal_piece(0, 1, 2, &interior(n, 3), side)])
}

/// Triangular instance spinal in `r s v_{m+1}` below a canonical stack;
/// `order` lists the interior vertices bottom to top.
pub fn mixed(order: &[Vertex], m: usize, side: Side) -> Cppt {
    let n = order.len() + 3;
    assemble(n, &[0, 1, 2], vec![mixed_piece(0, 1, 2, order, m, side)])
}

/// General canonical form: outer cycle `0..h`, fan of diagonals at vertex 0
/// and every interior vertex stacked in the cell `0 1 2` with base `01`.
pub fn general_canonical(n: usize, h: usize) -> Cppt {
    assert!(h >= 3 && n >= h);
    let outer: Vec<Vertex> = (0..h).collect();
    let mut pieces = vec![canonical_piece(0, 1, 2, &interior(n, h))];
    for j in 2..h - 1 {
        pieces.push(Piece {
            faces: vec![vec![0, j, j + 1]],
            reflex: vec![],
        });
    }
    assemble(n, &outer, pieces)
}

/// Outer cycle `0..h` with the fan at `0`; cell `j` is the triangle
/// `0, j + 1, j + 2`. Each cell holds a canonical stack `(order, base)`
/// where `base` picks the base edge: `0` is `0 (j+1)`, `1` is
/// `(j+1) (j+2)`, `2` is `(j+2) 0`.
pub fn fan_cells(h: usize, cells: &[(Vec<Vertex>, usize)]) -> Cppt {
    assert_eq!(cells.len(), h - 2);
    let n = h + cells.iter().map(|c| c.0.len()).sum::<usize>();
    let pieces = cells
        .iter()
        .enumerate()
        .map(|(j, (order, base))| {
            let tri = [0, j + 1, j + 2];
            let (r, s, t) = (tri[*base % 3], tri[(*base + 1) % 3], tri[(*base + 2) % 3]);
            canonical_piece(r, s, t, order)
        })
        .collect();
    let outer: Vec<Vertex> = (0..h).collect();
    assemble(n, &outer, pieces)
}

/// Outer square `0 1 2 3` split by one diagonal: `02` if `fan`, else `13`.
pub fn outer_square(fan: bool) -> Cppt {
    let faces = if fan {
        vec![vec![0, 1, 2], vec![0, 2, 3]]
    } else {
        vec![vec![0, 1, 3], vec![1, 2, 3]]
    };
    assemble(4, &[0, 1, 2, 3], vec![Piece { faces, reflex: vec![] }])
}
