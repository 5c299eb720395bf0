use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embedding::Vertex;
use crate::error::{CanonError, FlipError};
use crate::flip::FlipMove;
use crate::tagged::Cppt;

/// Which construction emitted a move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    MoveTriangle,
    ClearTip,
    ToSpinal,
    FromSpinal,
    Swap,
    PassStep,
    CutEar,
    RotateSpine,
    Merge,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

/// Stage tag of one move; `reversed` marks moves replayed backwards (the
/// target half of a sequence between two graphs).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Provenance {
    pub stage: Stage,
    pub reversed: bool,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reversed {
            write!(f, "{}-reversed", self.stage)
        } else {
            write!(f, "{}", self.stage)
        }
    }
}

impl std::str::FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (base, reversed) = match s.strip_suffix("-reversed") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let stage = serde_json::from_value(serde_json::Value::String(base.into())).map_err(|_| format!("unknown stage {s:?}"))?;
        Ok(Provenance { stage, reversed })
    }
}

impl From<Stage> for Provenance {
    fn from(stage: Stage) -> Self {
        Provenance { stage, reversed: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipSequence {
    pub start: Cppt,
    pub moves: Vec<FlipMove>,
    pub provenance: Vec<Provenance>,
}

impl FlipSequence {
    pub fn empty(start: Cppt) -> Self {
        FlipSequence {
            start,
            moves: vec![],
            provenance: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Every intermediate graph, `start` first.
    pub fn replay(&self) -> Result<Vec<Cppt>, FlipError> {
        let mut out = vec![self.start.clone()];
        for m in &self.moves {
            let next = out.last().unwrap().apply_flip(m)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<Cppt, FlipError> {
        let mut cur = self.start.clone();
        for m in &self.moves {
            cur = cur.apply_flip(m)?;
        }
        Ok(cur)
    }

    /// Replays and validates every prefix; returns the endpoint.
    pub fn verify(&self) -> Result<Cppt, CanonError> {
        let mut cur = self.start.clone();
        for (i, m) in self.moves.iter().enumerate() {
            cur = cur.apply_flip(m)?;
            let r = cur.validate();
            if !r.valid {
                return Err(CanonError::Invalid(format!("after move {i}: {:?}", r.violations)));
            }
        }
        Ok(cur)
    }

    /// The sequence run backwards from its endpoint.
    pub fn reversed(&self) -> Result<FlipSequence, FlipError> {
        let states = self.replay()?;
        let mut moves = Vec::with_capacity(self.len());
        let mut provenance = Vec::with_capacity(self.len());
        for i in (0..self.len()).rev() {
            moves.push(self.moves[i].reverse(&states[i + 1])?);
            let p = self.provenance[i];
            provenance.push(Provenance {
                stage: p.stage,
                reversed: !p.reversed,
            });
        }
        Ok(FlipSequence {
            start: states.last().unwrap().clone(),
            moves,
            provenance,
        })
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn then(mut self, other: FlipSequence) -> Result<FlipSequence, CanonError> {
        if self.end()? != other.start {
            return Err(CanonError::Precondition("sequences do not chain".into()));
        }
        self.moves.extend(other.moves);
        self.provenance.extend(other.provenance);
        Ok(self)
    }

    /// Drops adjacent move pairs that undo each other.
    pub fn cancel_inverse_pairs(&mut self) {
        let mut moves: Vec<FlipMove> = vec![];
        let mut prov: Vec<Provenance> = vec![];
        for (m, p) in self.moves.drain(..).zip(self.provenance.drain(..)) {
            if let Some(last) = moves.last() {
                if last.removed == m.inserted && last.inserted == m.removed {
                    moves.pop();
                    prov.pop();
                    continue;
                }
            }
            moves.push(m);
            prov.push(p);
        }
        self.moves = moves;
        self.provenance = prov;
    }

    /// Renames vertices in every move and in the start graph.
    pub fn relabel(&self, perm: &[Vertex]) -> FlipSequence {
        let map_move = |m: &FlipMove| {
            let e = |x: crate::Edge| crate::Edge::new(perm[x.0], perm[x.1]);
            let mut updates: Vec<_> = m
                .reflex_updates
                .iter()
                .map(|&(v, a)| {
                    (
                        perm[v],
                        crate::Angle {
                            vertex: perm[a.vertex],
                            after: perm[a.after],
                        },
                    )
                })
                .collect();
            updates.sort();
            FlipMove {
                removed: e(m.removed),
                inserted: e(m.inserted),
                case: m.case,
                reflex_updates: updates,
            }
        };
        FlipSequence {
            start: self.start.relabel(perm),
            moves: self.moves.iter().map(map_move).collect(),
            provenance: self.provenance.clone(),
        }
    }
}
