//! Labeled flip graphs modulo interior relabeling.
//!
//! Renaming interior vertices commutes with flips, and a plane graph with
//! its outer cycle pinned has no nontrivial automorphism, so the labeled
//! flip graph is a covering of the outer-fixed class graph with fibre
//! `S_{n-h}`. Each class edge carries the permutation ("voltage") relating
//! a representative's neighbor to the neighbor class's representative. The
//! labeled component of the seed then has `classes * |G|` nodes, where `G`
//! is generated by all voltages (tree edges carry the identity).

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::tagged::Cppt;
use crate::embedding::Vertex;
use crate::error::LabError;
use crate::lab::key::{outer_fixed_order, Key};
use crate::lab::Universe;

/// Permutation of interior slots: slot `i` is vertex `h + i`.
pub type Perm = Box<[u8]>;

#[derive(Clone, Debug)]
pub struct VoltageGraph {
    pub n: usize,
    pub h: usize,
    pub reps: Vec<Cppt>,
    pub index: HashMap<Key, usize>,
    /// `(class, voltage)`: a neighbor of rep `c` equals the target class's
    /// representative relabeled by the voltage.
    pub adjacency: Vec<Vec<(usize, Perm)>>,
}

fn identity(k: usize) -> Perm {
    (0..k as u8).collect()
}

fn compose(g: &[u8], p: &[u8]) -> Perm {
    p.iter().map(|&i| g[i as usize]).collect()
}

fn rank(p: &[u8]) -> usize {
    let k = p.len();
    let mut r = 0;
    for i in 0..k {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        r = r * (k - i) + smaller;
    }
    r
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

impl VoltageGraph {
    /// Class-level flip closure of the universe's seed. Labeled mode only.
    pub fn build(u: Universe) -> Self {
        let (n, h) = (u.n, u.h);
        let seed = u.seed();
        let (k0, o0) = outer_fixed_order(&seed);
        let mut index = HashMap::from([(k0, 0)]);
        let mut reps = vec![seed];
        let mut orders: Vec<Vec<Vertex>> = vec![o0];
        let mut adjacency: Vec<Vec<(usize, Perm)>> = vec![];
        let mut done = 0;
        while done < reps.len() {
            let batch: Vec<Vec<(Key, Vec<Vertex>, Cppt)>> = reps[done..]
                .par_iter()
                .map(|t| {
                    t.neighbors_by_flip()
                        .into_iter()
                        .map(|(_, x)| {
                            let (k, o) = outer_fixed_order(&x);
                            (k, o, x)
                        })
                        .collect()
                })
                .collect();
            done = reps.len();
            for list in batch {
                let mut adj = Vec::with_capacity(list.len());
                for (k, o, x) in list {
                    let c = match index.get(&k) {
                        Some(&c) => c,
                        None => {
                            index.insert(k, reps.len());
                            reps.push(x);
                            orders.push(o.clone());
                            reps.len() - 1
                        }
                    };
                    let mut p = vec![0u8; n - h];
                    for (&a, &b) in orders[c].iter().zip(&o) {
                        if a >= h {
                            p[a - h] = (b - h) as u8;
                        }
                    }
                    adj.push((c, p.into_boxed_slice()));
                }
                adjacency.push(adj);
            }
        }
        VoltageGraph {
            n,
            h,
            reps,
            index,
            adjacency,
        }
    }

    pub fn classes(&self) -> usize {
        self.reps.len()
    }

    /// Order of the group generated by all voltages.
    pub fn group_order(&self) -> usize {
        let k = self.n - self.h;
        let gens: HashSet<Perm> = self.adjacency.iter().flatten().map(|(_, p)| p.clone()).collect();
        let gens: Vec<Perm> = gens.into_iter().collect();
        let mut seen = HashSet::from([identity(k)]);
        let mut queue = VecDeque::from([identity(k)]);
        while let Some(g) = queue.pop_front() {
            for p in &gens {
                let x = compose(&g, p);
                if seen.insert(x.clone()) {
                    queue.push_back(x);
                }
            }
        }
        seen.len()
    }

    /// Number of labeled graphs reachable from the seed.
    pub fn labeled_size(&self) -> usize {
        self.classes() * self.group_order()
    }

    /// Eccentricity of labeled node `class` (its representative) in the
    /// full labeled flip graph, by implicit BFS over `(class, permutation)`.
    pub fn eccentricity(&self, class: usize) -> Result<usize, LabError> {
        let k = self.n - self.h;
        let fib = factorial(k);
        let total = self
            .classes()
            .checked_mul(fib)
            .filter(|&t| t <= 1 << 31)
            .ok_or_else(|| LabError::Precondition("labeled graph too large for implicit BFS".into()))?;
        let mut dist = vec![u8::MAX; total];
        let start = identity(k);
        dist[class * fib + rank(&start)] = 0;
        let mut frontier = vec![(class, start)];
        let mut d = 0u8;
        while !frontier.is_empty() {
            let mut next = vec![];
            for (c, g) in &frontier {
                for (c2, p) in &self.adjacency[*c] {
                    let g2 = compose(g, p);
                    let slot = c2 * fib + rank(&g2);
                    if dist[slot] == u8::MAX {
                        dist[slot] = d + 1;
                        next.push((*c2, g2));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            d += 1;
            frontier = next;
        }
        Ok(d as usize)
    }

    /// Diameter of the labeled flip graph: flips commute with relabeling, so
    /// every eccentricity is attained at some class representative.
    pub fn diameter(&self) -> Result<usize, LabError> {
        (0..self.classes())
            .into_par_iter()
            .map(|c| self.eccentricity(c))
            .try_reduce(|| 0, |a, b| Ok(a.max(b)))
    }
}
