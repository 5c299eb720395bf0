//! Direct generation of every 4-PPT on a fixed outer cycle, independent of
//! flips.
//!
//! The unfilled part of the disk is kept as a stack of holes, each a simple
//! cycle with the hole on its left. The face to the left of a hole's first
//! edge `c0 -> c1` is chosen next: its remaining one or two corners are new
//! interior vertices or later hole vertices (in boundary order). The rest of
//! the hole splits into smaller holes between consecutive hole vertices of
//! the new face. Every filling arises from exactly one choice sequence, with
//! interior vertices numbered in creation order.

use itertools::Itertools;

use crate::tagged::Cppt;
use crate::embedding::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Corner {
    New,
    Hole(usize),
}

#[derive(Clone)]
struct State {
    holes: Vec<Vec<Vertex>>,
    faces: Vec<Vec<Vertex>>,
    adj: Vec<u64>,
    next: Vertex,
    triangles: usize,
    quads: usize,
}

/// Interior faces of every plane graph with outer cycle `0..h`
/// (counterclockwise), `n - h` interior vertices, `h - 2` triangles and
/// `n - h` quadrilaterals, all faces simple.
pub fn shapes(n: usize, h: usize) -> Vec<Vec<Vec<Vertex>>> {
    assert!(h >= 3 && n >= h && n < 64);
    let mut adj = vec![0u64; n];
    for i in 0..h {
        let (a, b) = (i, (i + 1) % h);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let st = State {
        holes: vec![(0..h).collect()],
        faces: vec![],
        adj,
        next: h,
        triangles: h - 2,
        quads: n - h,
    };
    let mut out = vec![];
    grow(n, st, &mut out);
    out
}

fn grow(n: usize, st: State, out: &mut Vec<Vec<Vec<Vertex>>>) {
    let Some(hole) = st.holes.last() else {
        if st.next == n && st.triangles == 0 && st.quads == 0 {
            out.push(st.faces);
        }
        return;
    };
    let m = hole.len();
    for size in [3usize, 4] {
        if (size == 3 && st.triangles == 0) || (size == 4 && st.quads == 0) {
            continue;
        }
        let k = size - 2;
        let options: Vec<Corner> = std::iter::once(Corner::New).chain((2..m).map(Corner::Hole)).collect();
        for pick in std::iter::repeat_n(options.iter().copied(), k).multi_cartesian_product() {
            if let Some(next) = place(n, &st, &pick) {
                grow(n, next, out);
            }
        }
    }
}

fn place(n: usize, st: &State, pick: &[Corner]) -> Option<State> {
    let hole = st.holes.last().unwrap();
    let m = hole.len();
    let fresh = pick.iter().filter(|&&c| c == Corner::New).count();
    if st.next + fresh > n {
        return None;
    }
    // hole positions must increase along the face
    let mut last = 1;
    for &c in pick {
        if let Corner::Hole(p) = c {
            if p <= last {
                return None;
            }
            last = p;
        }
    }

    let mut next = st.clone();
    next.holes.pop();
    let mut face = vec![hole[0], hole[1]];
    let mut ids = Vec::with_capacity(pick.len());
    for &c in pick {
        let v = match c {
            Corner::New => {
                next.next += 1;
                next.next - 1
            }
            Corner::Hole(p) => hole[p],
        };
        ids.push(v);
        face.push(v);
    }

    // Split the remainder into pieces between consecutive hole corners.
    let mut marks: Vec<(usize, Vec<Vertex>)> = vec![(1, vec![])];
    for (&c, &v) in pick.iter().zip(&ids) {
        match c {
            Corner::New => marks.last_mut().unwrap().1.push(v),
            Corner::Hole(p) => marks.push((p, vec![])),
        }
    }
    let mut pieces = vec![];
    for (i, (p, news)) in marks.iter().enumerate() {
        let q = marks.get(i + 1).map_or(m, |x| x.0);
        let a = hole[*p];
        let b = hole[q % m];
        if news.is_empty() {
            if q == p + 1 {
                continue;
            }
            if next.adj[a] >> b & 1 == 1 {
                return None;
            }
        }
        let mut piece: Vec<Vertex> = (*p..=q).map(|j| hole[j % m]).collect();
        piece.extend(news.iter().rev());
        pieces.push(piece);
    }
    for i in 0..face.len() {
        let (a, b) = (face[i], face[(i + 1) % face.len()]);
        next.adj[a] |= 1 << b;
        next.adj[b] |= 1 << a;
    }
    if face.len() == 3 {
        next.triangles -= 1;
    } else {
        next.quads -= 1;
    }
    next.faces.push(face);
    next.holes.extend(pieces);
    Some(next)
}

/// All reflex assignments of a shape: outer vertices reflex on the outer
/// face, interior vertices matched one-to-one with incident quadrilaterals.
pub fn tagged(n: usize, h: usize, faces: &[Vec<Vertex>]) -> Vec<Cppt> {
    let mut all = vec![{
        let mut w = vec![0];
        w.extend((1..h).rev());
        w
    }];
    all.extend(faces.iter().cloned());
    let quads: Vec<usize> = (1..all.len()).filter(|&i| all[i].len() == 4).collect();
    let options: Vec<Vec<usize>> = (h..n)
        .map(|v| quads.iter().copied().filter(|&f| all[f].contains(&v)).collect())
        .collect();
    let mut out = vec![];
    let mut reflex_face = vec![0; n];
    let mut used = vec![false; all.len()];
    assign(h, 0, &options, &mut used, &mut reflex_face, &all, &mut out);
    out
}

fn assign(
    h: usize,
    i: usize,
    options: &[Vec<usize>],
    used: &mut [bool],
    reflex_face: &mut [usize],
    faces: &[Vec<Vertex>],
    out: &mut Vec<Cppt>,
) {
    if i == options.len() {
        let t = Cppt::from_faces(reflex_face.len(), faces, 0, reflex_face).expect("generated shape embeds");
        if t.is_valid() {
            out.push(t);
        }
        return;
    }
    for &f in &options[i] {
        if !used[f] {
            used[f] = true;
            reflex_face[h + i] = f;
            assign(h, i + 1, options, used, reflex_face, faces, out);
            used[f] = false;
        }
    }
}

/// Every 4-PPT on outer cycle `0..h` up to renaming interior vertices.
pub fn outer_fixed(n: usize, h: usize) -> Vec<Cppt> {
    shapes(n, h).iter().flat_map(|f| tagged(n, h, f)).collect()
}

/// Every labeled 4-PPT on outer cycle `0..h`.
pub fn labeled(n: usize, h: usize) -> Vec<Cppt> {
    let reps = outer_fixed(n, h);
    let mut out = Vec::with_capacity(reps.len() * (1..=n - h).product::<usize>());
    for perm in (h..n).permutations(n - h) {
        let full: Vec<Vertex> = (0..h).chain(perm).collect();
        out.extend(reps.iter().map(|t| t.relabel(&full)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_counts() {
        assert_eq!(outer_fixed(3, 3).len(), 1);
        assert_eq!(labeled(4, 3).len(), 3);
        assert_eq!(outer_fixed(4, 4).len(), 2);
    }
}
