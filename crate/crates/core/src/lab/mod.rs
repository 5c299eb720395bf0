//! Brute-force flip-graph oracle.
//!
//! Two independent enumerations of all 4-PPTs on a fixed outer cycle: the
//! closure of a seed under flips, and [`generate`]'s direct construction.
//! Their agreement certifies connectivity of the flip graph at that size.

pub mod generate;
pub mod key;
pub mod symmetric;

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::tagged::Cppt;
use crate::error::LabError;
use crate::fixtures;
pub use key::{labeled_key, outer_fixed_key, unlabeled_key, Key};

pub const LABELED_CAP: usize = 10;
pub const UNLABELED_CAP: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every vertex keeps its id.
    Labeled,
    /// Orientation-preserving isomorphism mapping the outer cycle to itself.
    Unlabeled,
}

impl Mode {
    pub fn key(self, t: &Cppt) -> Key {
        match self {
            Mode::Labeled => labeled_key(t),
            Mode::Unlabeled => unlabeled_key(t),
        }
    }

    pub fn cap(self) -> usize {
        match self {
            Mode::Labeled => LABELED_CAP,
            Mode::Unlabeled => UNLABELED_CAP,
        }
    }
}

/// Size of the universe: `n` vertices, outer cycle `0..h` counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Universe {
    pub n: usize,
    pub h: usize,
    pub mode: Mode,
}

impl Universe {
    pub fn new(n: usize, h: usize, mode: Mode) -> Result<Self, LabError> {
        Self::with_cap(n, h, mode, mode.cap())
    }

    pub fn with_cap(n: usize, h: usize, mode: Mode, cap: usize) -> Result<Self, LabError> {
        if h < 3 || h > n {
            return Err(LabError::BadOuter(format!("need 3 <= h <= n, got h = {h}, n = {n}")));
        }
        if n > cap {
            return Err(LabError::AboveCap { n, cap });
        }
        Ok(Universe { n, h, mode })
    }

    /// The general canonical form, used to seed the flip closure.
    pub fn seed(&self) -> Cppt {
        fixtures::general_canonical(self.n, self.h)
    }
}

/// Enumeration by flip closure from the seed, level by level. Output order
/// is the BFS discovery order, independent of the thread count.
pub fn enumerate_by_flips(u: Universe) -> Vec<Cppt> {
    let seed = u.seed();
    let mut index: HashMap<Key, usize> = HashMap::from([(u.mode.key(&seed), 0)]);
    let mut all = vec![seed];
    let mut frontier = 0..1;
    while !frontier.is_empty() {
        let found: Vec<Vec<(Key, Cppt)>> = all[frontier.clone()]
            .par_iter()
            .map(|t| {
                t.neighbors_by_flip()
                    .into_iter()
                    .map(|(_, x)| (u.mode.key(&x), x))
                    .collect()
            })
            .collect();
        let start = all.len();
        for (k, t) in found.into_iter().flatten() {
            if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(k) {
                slot.insert(all.len());
                all.push(t);
            }
        }
        frontier = start..all.len();
    }
    all
}

/// Enumeration by direct generation, one representative per class.
pub fn enumerate_direct(u: Universe) -> Vec<Cppt> {
    match u.mode {
        Mode::Labeled => generate::labeled(u.n, u.h),
        Mode::Unlabeled => {
            let mut seen = std::collections::HashSet::new();
            generate::outer_fixed(u.n, u.h)
                .into_iter()
                .filter(|t| seen.insert(unlabeled_key(t)))
                .collect()
        }
    }
}

/// Result of cross-checking the two enumerations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub by_flips: usize,
    pub direct: usize,
    pub only_flips: usize,
    pub only_direct: usize,
}

impl Agreement {
    pub fn agree(&self) -> bool {
        self.only_flips == 0 && self.only_direct == 0 && self.by_flips == self.direct
    }
}

pub fn cross_check(u: Universe) -> (Vec<Cppt>, Agreement) {
    let flips = enumerate_by_flips(u);
    let direct = enumerate_direct(u);
    let a: std::collections::HashSet<Key> = flips.par_iter().map(|t| u.mode.key(t)).collect();
    let b: std::collections::HashSet<Key> = direct.par_iter().map(|t| u.mode.key(t)).collect();
    let agreement = Agreement {
        by_flips: flips.len(),
        direct: direct.len(),
        only_flips: a.difference(&b).count(),
        only_direct: b.difference(&a).count(),
    };
    (flips, agreement)
}

/// Nodes and flip adjacency of one universe.
#[derive(Clone, Debug)]
pub struct FlipGraphIndex {
    pub universe: Universe,
    pub graphs: Vec<Cppt>,
    pub keys: Vec<Key>,
    pub index: HashMap<Key, usize>,
    pub adjacency: Vec<Vec<usize>>,
}

impl FlipGraphIndex {
    pub fn build(universe: Universe, graphs: Vec<Cppt>) -> Result<Self, LabError> {
        let keys: Vec<Key> = graphs.par_iter().map(|t| universe.mode.key(t)).collect();
        let index: HashMap<Key, usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        if index.len() != keys.len() {
            return Err(LabError::Precondition("duplicate graphs in universe".into()));
        }
        let adjacency = graphs
            .par_iter()
            .map(|t| {
                let mut adj: Vec<usize> = t
                    .neighbors_by_flip()
                    .into_iter()
                    .map(|(_, x)| index.get(&universe.mode.key(&x)).copied().ok_or(LabError::NotInUniverse))
                    .collect::<Result<_, _>>()?;
                adj.sort_unstable();
                adj.dedup();
                Ok(adj)
            })
            .collect::<Result<Vec<_>, LabError>>()?;
        Ok(FlipGraphIndex {
            universe,
            graphs,
            keys,
            index,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_symmetric(&self) -> bool {
        self.adjacency
            .iter()
            .enumerate()
            .all(|(i, adj)| adj.iter().all(|&j| self.adjacency[j].binary_search(&i).is_ok()))
    }

    pub fn find(&self, t: &Cppt) -> Result<usize, LabError> {
        self.index
            .get(&self.universe.mode.key(t))
            .copied()
            .ok_or(LabError::NotInUniverse)
    }

    /// Distances from node `s`; `usize::MAX` where unreachable.
    pub fn bfs(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs_distance(&self, a: &Cppt, b: &Cppt) -> Result<Option<usize>, LabError> {
        let (i, j) = (self.find(a)?, self.find(b)?);
        let d = self.bfs(i)[j];
        Ok((d != usize::MAX).then_some(d))
    }

    /// Connectivity and diameter by BFS from every node.
    pub fn connectivity_and_diameter(&self) -> (bool, usize) {
        if self.is_empty() {
            return (true, 0);
        }
        let connected = self.bfs(0).iter().all(|&d| d != usize::MAX);
        if !connected {
            return (false, usize::MAX);
        }
        let diameter = (0..self.len())
            .into_par_iter()
            .map(|s| self.bfs(s).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        (true, diameter)
    }
}

/// Summary line of `flipgraph --stats`.
#[derive(Clone, Debug, Serialize)]
pub struct Stats {
    pub n: usize,
    pub h: usize,
    pub mode: Mode,
    pub nodes: usize,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub generators_agree: bool,
}

pub fn stats(u: Universe) -> Result<Stats, LabError> {
    let (graphs, agreement) = cross_check(u);
    let g = FlipGraphIndex::build(u, graphs)?;
    let (connected, d) = g.connectivity_and_diameter();
    Ok(Stats {
        n: u.n,
        h: u.h,
        mode: u.mode,
        nodes: g.len(),
        edges: g.edge_count(),
        connected,
        diameter: connected.then_some(d),
        generators_agree: agreement.agree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_universes() {
        let u = Universe::new(4, 3, Mode::Labeled).unwrap();
        let (gs, a) = cross_check(u);
        assert!(a.agree(), "{a:?}");
        let g = FlipGraphIndex::build(u, gs).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.connectivity_and_diameter(), (true, 1));
        let u = Universe::new(3, 3, Mode::Labeled).unwrap();
        let g = FlipGraphIndex::build(u, enumerate_by_flips(u)).unwrap();
        assert_eq!((g.len(), g.connectivity_and_diameter()), (1, (true, 0)));
        assert!(matches!(
            Universe::new(11, 3, Mode::Labeled),
            Err(LabError::AboveCap { n: 11, cap: 10 })
        ));
    }
}
