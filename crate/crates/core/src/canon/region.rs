use std::collections::{HashMap, HashSet, VecDeque};

use crate::canon::sequence::{FlipSequence, Provenance, Stage};
use crate::embedding::{Dart, Edge, Vertex};
use crate::error::CanonError;
use crate::tagged::Cppt;

/// Applies flips to a current graph and records them.
#[derive(Clone, Debug)]
pub(crate) struct Walker {
    pub cur: Cppt,
    pub seq: FlipSequence,
}

impl Walker {
    pub fn new(t: &Cppt) -> Self {
        Walker {
            cur: t.clone(),
            seq: FlipSequence::empty(t.clone()),
        }
    }

    pub fn flip(&mut self, removed: Edge, inserted: Edge, stage: Stage) -> Result<(), CanonError> {
        self.flip_tagged(removed, inserted, stage.into())
    }

    fn flip_tagged(&mut self, removed: Edge, inserted: Edge, p: Provenance) -> Result<(), CanonError> {
        let (m, next) = self.cur.flip_with_move(removed, inserted)?;
        self.cur = next;
        self.seq.moves.push(m);
        self.seq.provenance.push(p);
        Ok(())
    }

    pub fn finish(self) -> FlipSequence {
        self.seq
    }

    /// Like [`Walker::finish`], dropping flips that are immediately undone.
    pub fn finish_reduced(self) -> FlipSequence {
        let mut seq = self.seq;
        seq.cancel_inverse_pairs();
        seq
    }

    /// Runs `f` on the standalone region bounded by `cycle` (counterclockwise,
    /// region on the left) and replays its moves here. `f` sees the region
    /// with `cycle[k]` renamed `k` and interior vertices following in
    /// increasing order; the returned map sends local ids back.
    pub fn in_region<R>(
        &mut self,
        cycle: &[Vertex],
        f: impl FnOnce(&mut Walker) -> Result<R, CanonError>,
    ) -> Result<(R, Vec<Vertex>), CanonError> {
        let (local, map) = extract(&self.cur, cycle)?;
        let mut w = Walker::new(&local);
        let out = f(&mut w)?;
        for (m, &p) in w.seq.moves.iter().zip(&w.seq.provenance) {
            let g = |e: Edge| Edge::new(map[e.0], map[e.1]);
            self.flip_tagged(g(m.removed), g(m.inserted), p)?;
        }
        Ok((out, map))
    }
}

/// Copies the part of `t` enclosed by `cycle` into a standalone graph whose
/// outer cycle is `0..cycle.len()`. Cycle vertices get their reflex angle
/// on the new outer face.
pub(crate) fn extract(t: &Cppt, cycle: &[Vertex]) -> Result<(Cppt, Vec<Vertex>), CanonError> {
    let b = cycle.len();
    if b < 3 {
        return Err(CanonError::Precondition(format!("region boundary of length {b}")));
    }
    let boundary: HashSet<Dart> = (0..b).map(|k| Dart::new(cycle[k], cycle[(k + 1) % b])).collect();
    for d in &boundary {
        if !t.has_edge(d.origin, d.target) {
            return Err(CanonError::NotBoundaryEdge(d.origin, d.target));
        }
    }

    let emb = t.embedding();
    let mut faces = vec![];
    let mut face_of_dart: HashMap<Dart, usize> = HashMap::new();
    let mut queue = VecDeque::from([Dart::new(cycle[0], cycle[1])]);
    while let Some(d) = queue.pop_front() {
        if face_of_dart.contains_key(&d) {
            continue;
        }
        let f = emb.face_of(d);
        if f.outer {
            return Err(CanonError::Precondition("region cycle encloses the outer face".into()));
        }
        for &x in &f.darts {
            face_of_dart.insert(x, faces.len());
            let y = x.twin();
            if !boundary.contains(&x) && !face_of_dart.contains_key(&y) {
                queue.push_back(y);
            }
        }
        faces.push(f);
    }

    let on_cycle: HashSet<Vertex> = cycle.iter().copied().collect();
    let mut inner: Vec<Vertex> = faces
        .iter()
        .flat_map(|f| f.darts.iter().map(|d| d.origin))
        .filter(|v| !on_cycle.contains(v))
        .collect();
    inner.sort_unstable();
    inner.dedup();
    let map: Vec<Vertex> = cycle.iter().copied().chain(inner).collect();
    let mut local = vec![usize::MAX; t.n()];
    for (i, &v) in map.iter().enumerate() {
        local[v] = i;
    }

    let mut walk = vec![0];
    walk.extend((1..b).rev());
    let mut walks = vec![walk];
    walks.extend(faces.iter().map(|f| f.darts.iter().map(|d| local[d.origin]).collect()));
    let mut reflex_face = vec![0; map.len()];
    for (i, &v) in map.iter().enumerate().skip(b) {
        let d = Dart::new(v, t.reflex_map()[v]);
        reflex_face[i] = 1 + face_of_dart[&d];
    }
    let sub = Cppt::from_faces(map.len(), &walks, 0, &reflex_face)
        .map_err(|e| CanonError::Precondition(format!("region does not embed: {e}")))?;
    Ok((sub, map))
}
