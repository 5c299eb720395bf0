//! Hashable identities for enumerated graphs.

use crate::tagged::Cppt;
use crate::embedding::Vertex;

/// Serialized graph identity. Byte `i` of a labeled key is a vertex id, so
/// keys are only meaningful below 255 vertices.
pub type Key = Box<[u8]>;

/// Identity up to nothing: rotations (already normalized) and reflex map.
pub fn labeled_key(t: &Cppt) -> Key {
    let mut out = Vec::with_capacity(5 * t.n());
    for v in 0..t.n() {
        out.push(t.degree(v) as u8);
        out.extend(t.neighbors(v).iter().map(|&u| u as u8));
        out.push(t.reflex_map()[v] as u8);
    }
    out.into_boxed_slice()
}

/// Identity up to orientation-preserving isomorphism that maps the outer
/// cycle to itself: the smallest traversal code over all outer starting
/// vertices.
pub fn unlabeled_key(t: &Cppt) -> Key {
    let cycle = t.outer_cycle();
    let h = cycle.len();
    (0..h)
        .map(|i| traversal_code(t, cycle[i], cycle[(i + 1) % h]))
        .min()
        .expect("outer cycle is nonempty")
}

/// Key with the outer vertices pinned: the traversal from the outer vertex
/// with the smallest id. Interior vertices are anonymous.
pub fn outer_fixed_key(t: &Cppt) -> Key {
    outer_fixed_order(t).0
}

/// [`outer_fixed_key`] plus the vertices in traversal order. Two graphs
/// with equal keys are isomorphic by matching their orders position by
/// position.
pub fn outer_fixed_order(t: &Cppt) -> (Key, Vec<Vertex>) {
    let cycle = t.outer_cycle();
    traverse(t, cycle[0], cycle[1])
}

/// Breadth-first relabeling from dart `root -> first`. Each vertex lists its
/// neighbors' new numbers starting at the one it was reached from, then the
/// offset of its reflex angle in that order.
fn traversal_code(t: &Cppt, root: Vertex, first: Vertex) -> Key {
    traverse(t, root, first).0
}

fn traverse(t: &Cppt, root: Vertex, first: Vertex) -> (Key, Vec<Vertex>) {
    let n = t.n();
    let mut num = vec![u8::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut from = vec![first; n];
    num[root] = 0;
    order.push(root);
    let mut out = Vec::with_capacity(5 * n);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        let rot = t.neighbors(v);
        let start = rot.iter().position(|&u| u == from[v]).unwrap();
        out.push(rot.len() as u8);
        for k in 0..rot.len() {
            let u = rot[(start + k) % rot.len()];
            if num[u] == u8::MAX {
                num[u] = order.len() as u8;
                order.push(u);
                from[u] = v;
            }
            out.push(num[u]);
        }
        let r = rot.iter().position(|&u| u == t.reflex_map()[v]).unwrap();
        out.push(((r + rot.len() - start) % rot.len()) as u8);
    }
    (out.into_boxed_slice(), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn keys_separate_and_identify() {
        let a = fixtures::canonical_ordered(&[3, 4]);
        let b = fixtures::canonical_ordered(&[4, 3]);
        assert_ne!(labeled_key(&a), labeled_key(&b));
        assert_eq!(outer_fixed_key(&a), outer_fixed_key(&b));
        assert_eq!(unlabeled_key(&a), unlabeled_key(&b));
        // rotating the outer labels keeps the unlabeled class
        let rot = a.relabel(&[1, 2, 0, 3, 4]);
        assert_ne!(outer_fixed_key(&a), outer_fixed_key(&rot));
        assert_eq!(unlabeled_key(&a), unlabeled_key(&rot));
    }
}
