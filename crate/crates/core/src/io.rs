//! Documents.
//!
//! Graphs and flip sequences are stored as JSON with keys in sorted order
//! and one top-level key per line, so equal graphs serialize to identical
//! bytes and fixtures diff cleanly.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::canon::{FlipSequence, Provenance};
use crate::embedding::{Dart, Edge, Embedding, Vertex};
use crate::error::IoError;
use crate::induced::CombTriangulation;
use crate::tagged::Cppt;

pub const FORMAT_VERSION: u32 = 1;

/// Serialized graph. Fields are declared in key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub format_version: u32,
    pub labels: Vec<String>,
    pub n: usize,
    /// Outer cycle, counterclockwise.
    pub outer: Vec<Vertex>,
    /// `[a, b]`: the reflex gap at `v` runs from neighbor `a` to its
    /// counterclockwise successor `b`. Absent for triangulations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reflex: Option<Vec<[Vertex; 2]>>,
    /// Counterclockwise neighbor lists.
    pub rotations: Vec<Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveRecord {
    pub insert: [Vertex; 2],
    pub remove: [Vertex; 2],
    pub stage: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDocument {
    pub format_version: u32,
    pub moves: Vec<MoveRecord>,
    pub start: GraphDocument,
}

fn parse_err(field: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Parse {
        field: field.into(),
        message: message.into(),
    }
}

impl GraphDocument {
    pub fn from_cppt(t: &Cppt) -> Self {
        let emb = t.embedding();
        let reflex = (0..t.n())
            .map(|v| {
                let a = t.reflex_map()[v];
                [a, emb.succ(v, a)]
            })
            .collect();
        GraphDocument {
            reflex: Some(reflex),
            ..Self::from_embedding(emb, t.labels().to_vec())
        }
    }

    pub fn from_triangulation(g: &CombTriangulation) -> Self {
        Self::from_embedding(g.embedding(), (0..g.n()).map(|v| v.to_string()).collect())
    }

    fn from_embedding(emb: &Embedding, labels: Vec<String>) -> Self {
        GraphDocument {
            format_version: FORMAT_VERSION,
            labels,
            n: emb.n(),
            outer: emb.outer_cycle(),
            reflex: None,
            rotations: emb.rotations().to_vec(),
        }
    }

    fn embedding(&self) -> Result<Embedding, IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(parse_err("format_version", format!("unsupported version {}", self.format_version)));
        }
        if self.rotations.len() != self.n {
            return Err(parse_err("rotations", format!("{} lists for n = {}", self.rotations.len(), self.n)));
        }
        if self.labels.len() != self.n {
            return Err(parse_err("labels", format!("{} labels for n = {}", self.labels.len(), self.n)));
        }
        if self.outer.len() < 3 {
            return Err(parse_err("outer", "fewer than 3 vertices"));
        }
        // the outer face walk runs clockwise: o_0 -> o_{h-1}
        let d = Dart::new(self.outer[0], *self.outer.last().unwrap());
        let emb = Embedding::new(self.rotations.clone(), d)?;
        if emb.outer_cycle() != self.outer {
            return Err(parse_err("outer", format!("rotations trace outer cycle {:?}", emb.outer_cycle())));
        }
        Ok(emb)
    }

    pub fn to_cppt(&self) -> Result<Cppt, IoError> {
        let emb = self.embedding()?;
        let pairs = self.reflex.as_ref().ok_or_else(|| parse_err("reflex", "missing"))?;
        if pairs.len() != self.n {
            return Err(parse_err("reflex", format!("{} entries for n = {}", pairs.len(), self.n)));
        }
        for (v, &[a, b]) in pairs.iter().enumerate() {
            if !emb.has_edge(v, a) || emb.succ(v, a) != b {
                return Err(parse_err(format!("reflex[{v}]"), format!("{a}, {b} are not consecutive neighbors")));
            }
        }
        let reflex = pairs.iter().map(|p| p[0]).collect();
        Ok(Cppt::from_embedding(emb, reflex)?.with_labels(self.labels.clone()))
    }

    pub fn to_triangulation(&self) -> Result<CombTriangulation, IoError> {
        CombTriangulation::new(self.embedding()?).map_err(|e| parse_err("rotations", e.to_string()))
    }

    pub fn to_text(&self) -> String {
        to_text(self)
    }

    pub fn from_text(s: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(s)?)
    }
}

impl SequenceDocument {
    pub fn from_sequence(seq: &FlipSequence) -> Self {
        let moves = seq
            .moves
            .iter()
            .zip(&seq.provenance)
            .map(|(m, p)| MoveRecord {
                insert: [m.inserted.0, m.inserted.1],
                remove: [m.removed.0, m.removed.1],
                stage: p.to_string(),
            })
            .collect();
        SequenceDocument {
            format_version: FORMAT_VERSION,
            moves,
            start: GraphDocument::from_cppt(&seq.start),
        }
    }

    /// Rebuilds the sequence, checking each move against the current graph.
    /// Stage tags are informational and not trusted.
    pub fn to_sequence(&self) -> Result<FlipSequence, IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(parse_err("format_version", format!("unsupported version {}", self.format_version)));
        }
        let start = self.start.to_cppt()?;
        let mut seq = FlipSequence::empty(start.clone());
        let mut cur = start;
        for (i, r) in self.moves.iter().enumerate() {
            let e = |p: [Vertex; 2]| Edge::new(p[0], p[1]);
            let (m, next) = cur
                .flip_with_move(e(r.remove), e(r.insert))
                .map_err(|err| parse_err(format!("moves[{i}]"), err.to_string()))?;
            let p: Provenance = r.stage.parse().map_err(|m: String| parse_err(format!("moves[{i}].stage"), m))?;
            seq.moves.push(m);
            seq.provenance.push(p);
            cur = next;
        }
        Ok(seq)
    }

    pub fn to_text(&self) -> String {
        to_text(self)
    }

    pub fn from_text(s: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(s)?)
    }
}

/// One top-level key per line, values compact. `serde_json` keeps struct
/// field order, which is the sorted key order here; nested objects are
/// reordered through [`Value`], whose maps are sorted.
fn to_text<T: Serialize>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("documents serialize");
    let Value::Object(map) = v else {
        unreachable!("documents are objects")
    };
    let mut out = String::from("{\n");
    let last = map.len().saturating_sub(1);
    for (i, (k, v)) in map.iter().enumerate() {
        out.push_str(&format!("  {}: {}", Value::String(k.clone()), v));
        out.push_str(if i == last { "\n" } else { ",\n" });
    }
    out.push_str("}\n");
    out
}

pub fn write_graph(t: &Cppt) -> String {
    GraphDocument::from_cppt(t).to_text()
}

pub fn read_graph(s: &str) -> Result<Cppt, IoError> {
    GraphDocument::from_text(s)?.to_cppt()
}

pub fn write_sequence(seq: &FlipSequence) -> String {
    SequenceDocument::from_sequence(seq).to_text()
}

pub fn read_sequence(s: &str) -> Result<FlipSequence, IoError> {
    SequenceDocument::from_text(s)?.to_sequence()
}

/// SHA-256 of the serialized graph, hex.
pub fn graph_hash(t: &Cppt) -> String {
    Sha256::digest(write_graph(t).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
