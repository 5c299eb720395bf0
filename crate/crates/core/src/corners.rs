//! Subgraph corner counting and the generalized Laman check.

use std::collections::{HashSet, VecDeque};

use crate::tagged::Cppt;
use crate::embedding::{Dart, Edge, Embedding, Vertex};
use crate::error::SubgraphError;

pub const DEFAULT_LAMAN_CAP: usize = 16;

/// Counts the corners of first type of the subgraph `H` of `t` spanned by
/// `edges` (plus any isolated `vertices`): vertices whose reflex angle in `t`
/// lies in the outer face of `H`. A disconnected `H` is evaluated per
/// component of at least 3 vertices and the minimum is returned.
pub fn corners_first_type(t: &Cppt, vertices: &[Vertex], edges: &[Edge]) -> Result<usize, SubgraphError> {
    let n = t.n();
    let mut in_h = vec![false; n];
    for &v in vertices {
        if v >= n {
            return Err(SubgraphError::NotAnEdge(v, v));
        }
        in_h[v] = true;
    }
    let mut adj: Vec<Vec<Vertex>> = vec![vec![]; n];
    let eset: HashSet<Edge> = edges.iter().map(|e| Edge::new(e.0, e.1)).collect();
    for &e in &eset {
        if !t.has_edge(e.0, e.1) {
            return Err(SubgraphError::NotAnEdge(e.0, e.1));
        }
        in_h[e.0] = true;
        in_h[e.1] = true;
        adj[e.0].push(e.1);
        adj[e.1].push(e.0);
    }
    let size = in_h.iter().filter(|&&b| b).count();
    if size < 3 {
        return Err(SubgraphError::TooSmall(size));
    }

    let mut comp = vec![usize::MAX; n];
    let mut best: Option<usize> = None;
    for start in 0..n {
        if !in_h[start] || comp[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        comp[start] = start;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &u in &adj[v] {
                if comp[u] == usize::MAX {
                    comp[u] = start;
                    members.push(u);
                }
            }
        }
        if members.len() < 3 {
            continue;
        }
        let c = component_corners(t, &members, &eset);
        best = Some(best.map_or(c, |b| b.min(c)));
    }
    best.ok_or(SubgraphError::TooSmall(2))
}

fn component_corners(t: &Cppt, members: &[Vertex], eset: &HashSet<Edge>) -> usize {
    let n = t.n();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in members.iter().enumerate() {
        local[v] = i;
    }
    let in_c = |e: Edge| local[e.0] != usize::MAX && eset.contains(&e);
    // Rotations of the component, inherited from t.
    let rot: Vec<Vec<Vertex>> = members
        .iter()
        .map(|&v| {
            t.neighbors(v)
                .iter()
                .filter(|&&u| in_c(Edge::new(u, v)))
                .map(|&u| local[u])
                .collect()
        })
        .collect();

    // The H-gap at v containing t's angle (v, after): the H-neighbor that is
    // the last one at or before `after` in t's rotation.
    let gap = |v: Vertex, after: Vertex| -> Vertex {
        let full = t.neighbors(v);
        let i = full.iter().position(|&x| x == after).unwrap();
        (0..full.len())
            .map(|k| full[(i + full.len() - k) % full.len()])
            .find(|&u| in_c(Edge::new(u, v)))
            .unwrap()
    };

    // Find one angle of t that lies in the same H-face as t's outer face:
    // flood through t's faces across edges outside H.
    let emb = t.embedding();
    let mut seen = HashSet::new();
    let outer = emb.outer_dart();
    let mut queue = VecDeque::from([outer]);
    seen.insert(outer);
    let mut anchor = None;
    'flood: while let Some(d0) = queue.pop_front() {
        let f = emb.face_of(d0);
        for &d in &f.darts {
            seen.insert(d);
        }
        for &d in &f.darts {
            if local[d.origin] != usize::MAX && !rot[local[d.origin]].is_empty() {
                anchor = Some(d);
                break 'flood;
            }
            if !in_c(d.edge()) && seen.insert(d.twin()) {
                queue.push_back(d.twin());
            }
        }
    }
    let a = anchor.expect("component borders some face");
    let h_first = gap(a.origin, a.target);
    let sub = Embedding::new(rot, Dart::new(local[a.origin], local[h_first])).expect("component embedding");
    let outer_h: HashSet<Dart> = sub.outer_face().darts.into_iter().collect();

    members
        .iter()
        .filter(|&&v| {
            let g = gap(v, t.reflex_map()[v]);
            outer_h.contains(&Dart::new(local[v], local[g]))
        })
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LamanReport {
    pub holds: bool,
    /// A vertex set inducing more than `2|S| - 3` edges, if any.
    pub witness: Option<Vec<Vertex>>,
}

/// Brute-force generalized Laman check. Every vertex of a [`Cppt`] is
/// pointed, so the bound `3x + 2y - 3` reads `2|S| - 3`.
pub fn check_generalized_laman(t: &Cppt, cap: usize) -> Result<LamanReport, SubgraphError> {
    let n = t.n();
    if n > cap || n >= 64 {
        return Err(SubgraphError::AboveCap { n, cap });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| t.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    for mask in 1u64..(1u64 << n) {
        let k = mask.count_ones() as usize;
        if k < 2 {
            continue;
        }
        let twice: u32 = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (adj[v] & mask).count_ones()).sum();
        if twice as usize / 2 + 3 > 2 * k {
            let witness = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            return Ok(LamanReport {
                holds: false,
                witness: Some(witness),
            });
        }
    }
    Ok(LamanReport {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn whole_graph_has_three_corners() {
        let t = fixtures::canonical(4);
        let edges = t.embedding().edges();
        assert_eq!(corners_first_type(&t, &[], &edges).unwrap(), 3);
    }

    #[test]
    fn inner_triangle_corners() {
        let t = fixtures::canonical(4);
        let h = [Edge::new(0, 3), Edge::new(3, 1), Edge::new(0, 1)];
        assert_eq!(corners_first_type(&t, &[], &h).unwrap(), 3);
    }

    #[test]
    fn too_small() {
        let t = fixtures::canonical(4);
        assert_eq!(
            corners_first_type(&t, &[], &[Edge::new(0, 1)]),
            Err(SubgraphError::TooSmall(2))
        );
    }

    #[test]
    fn laman_canonical_and_k4() {
        let t = fixtures::canonical(4);
        assert!(check_generalized_laman(&t, DEFAULT_LAMAN_CAP).unwrap().holds);
        let k4 = Cppt::build(
            vec![vec![1, 3, 2], vec![0, 2, 3], vec![0, 3, 1], vec![0, 1, 2]],
            Dart::new(0, 2),
            vec![1, 0, 0, 0],
        )
        .unwrap();
        let r = check_generalized_laman(&k4, DEFAULT_LAMAN_CAP).unwrap();
        assert_eq!(r.witness, Some(vec![0, 1, 2, 3]));
        assert!(check_generalized_laman(&fixtures::canonical(17), DEFAULT_LAMAN_CAP).is_err());
    }
}
