//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always print; exits non-zero if any fails.
//!
//! Label-invariant checks (face counts, corners, candidate counts, the
//! induced triangulation) run on one representative per interior relabeling
//! class; the labeled universe is the class set times all permutations.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cppt::canon::{self, Form};
use cppt::corners::{check_generalized_laman, corners_first_type, DEFAULT_LAMAN_CAP};
use cppt::fixtures::{self, Side};
use cppt::induced::{self, RegionShape};
use cppt::lab::symmetric::VoltageGraph;
use cppt::lab::{self, generate, FlipGraphIndex, Mode, Universe};
use cppt::validate::triangle_count;
use cppt::{Cppt, Dart, Edge, FlipCase, Vertex};

/// Frozen constant of the quadratic length bound `len <= C * n^2`.
/// Largest ratio measured: 1.93 (random pairs, n = 9), 3.16 (reversed
/// interior order, n = 64).
const C: usize = 5;
const SEED: u64 = 0x5EED_4077;
const RANDOM_PAIRS_N9: usize = 10_000;
const RANDOM_PAIRS_GENERAL: usize = 2_000;
/// Face-connected regions of up to this many interior faces get the
/// triangle-count check, besides the whole interior.
const CELL_FACES: usize = 3;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// `t` with interior vertices renamed by `perm` (outer vertices fixed).
fn relabeled(t: &Cppt, h: usize, perm: &[Vertex]) -> Cppt {
    let full: Vec<Vertex> = (0..h).chain(perm.iter().copied()).collect();
    t.relabel(&full)
}

fn random_labeled(reps: &[Cppt], n: usize, h: usize, rng: &mut ChaCha8Rng) -> Cppt {
    let t = &reps[rng.random_range(0..reps.len())];
    let mut p: Vec<Vertex> = (h..n).collect();
    p.shuffle(rng);
    relabeled(t, h, &p)
}

/// Triangle count law on every face-connected region of at most
/// [`CELL_FACES`] interior faces bounded by a simple cycle, and on the
/// whole interior. Returns the number of regions checked.
fn check_cells(t: &Cppt) -> Result<usize, String> {
    let faces = t.trace_faces();
    let mut face_of = std::collections::HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &d in &f.darts {
            face_of.insert(d, i);
        }
    }
    let interior: Vec<usize> = (1..faces.len()).collect();
    let adjacent = |i: usize| -> Vec<usize> {
        faces[i]
            .darts
            .iter()
            .map(|d| face_of[&d.twin()])
            .filter(|&j| j != 0 && j != i)
            .collect()
    };
    let mut regions: HashSet<Vec<usize>> = HashSet::from([interior.clone()]);
    let mut layer: Vec<Vec<usize>> = interior.iter().map(|&i| vec![i]).collect();
    for _ in 0..CELL_FACES {
        let mut next = vec![];
        for r in layer {
            if regions.insert(r.clone()) {
                for &i in &r {
                    for j in adjacent(i) {
                        if !r.contains(&j) {
                            let mut g = r.clone();
                            g.push(j);
                            g.sort_unstable();
                            next.push(g);
                        }
                    }
                }
            }
        }
        layer = next;
    }
    let mut checked = 0;
    for r in &regions {
        let inside = |d: &Dart| r.contains(&face_of[d]);
        let boundary: Vec<Dart> = r
            .iter()
            .flat_map(|&i| faces[i].darts.iter().copied())
            .filter(|d| !inside(&d.twin()))
            .collect();
        let origins: HashSet<Vertex> = boundary.iter().map(|d| d.origin).collect();
        if origins.len() != boundary.len() {
            continue;
        }
        // one cycle, not several
        let mut cur = boundary[0];
        let mut steps = 1;
        while let Some(&d) = boundary.iter().find(|d| d.origin == cur.target && **d != boundary[0]) {
            cur = d;
            steps += 1;
        }
        if steps != boundary.len() {
            continue;
        }
        let b = boundary.len();
        let c = origins
            .iter()
            .filter(|&&v| inside(&Dart::new(v, t.reflex_map()[v])))
            .count();
        let tri = r.iter().filter(|&&i| faces[i].len() == 3).count();
        let expect = triangle_count(b, c).map_err(|e| format!("region {r:?}: {e}"))?;
        ensure(tri == expect, || format!("region {r:?}: {tri} triangles, b = {b}, c = {c}"))?;
        checked += 1;
    }
    Ok(checked)
}

fn structural_laws() -> Check {
    let mut graphs = 0usize;
    let mut cells = 0usize;
    for h in 3..=5 {
        for n in h..=8 {
            let reps = generate::outer_fixed(n, h);
            let perms: Vec<Vec<Vertex>> = (h..n).permutations(n - h).collect();
            let bad = reps
                .par_iter()
                .flat_map_iter(|t| perms.iter().map(move |p| relabeled(t, h, p)))
                .find_any(|t| {
                    let r = t.validate();
                    !(r.valid && r.e == 2 * n - 3 && r.t == h - 2 && r.q == n - h && r.h == h)
                });
            if let Some(t) = bad {
                return Err(format!("n={n} h={h}: {:?}", t.validate()));
            }
            graphs += reps.len() * perms.len();
            let counts: Result<Vec<usize>, String> = reps.par_iter().map(check_cells).collect();
            cells += counts.map_err(|e| format!("n={n} h={h}: {e}"))?.iter().sum::<usize>();
        }
    }
    Ok(format!("{graphs} labeled graphs (n<=8, h=3..5): e=2n-3, t=h-2, q=n-h; triangle law on {cells} cells"))
}

fn corners_and_laman() -> Check {
    let mut subgraphs = 0usize;
    let mut graphs = 0usize;
    for h in 3..=5 {
        for n in h..=7 {
            let reps = generate::outer_fixed(n, h);
            let counts: Result<Vec<usize>, String> = reps
                .par_iter()
                .map(|t| {
                    let edges: Vec<Edge> = t.embedding().edges();
                    let mut checked = 0;
                    for mask in 1u32..1 << edges.len() {
                        let sub: Vec<Edge> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                        let vs: Vec<Vertex> = sub.iter().flat_map(|e| [e.0, e.1]).sorted().dedup().collect();
                        if vs.len() < 3 || !connected(&vs, &sub) {
                            continue;
                        }
                        let k = corners_first_type(t, &vs, &sub).map_err(|e| e.to_string())?;
                        ensure(k >= 3, || format!("n={n} h={h}: subgraph {sub:?} has {k} corners"))?;
                        checked += 1;
                    }
                    let l = check_generalized_laman(t, DEFAULT_LAMAN_CAP).map_err(|e| e.to_string())?;
                    ensure(l.holds, || format!("n={n} h={h}: Laman witness {:?}", l.witness))?;
                    Ok(checked)
                })
                .collect();
            subgraphs += counts?.iter().sum::<usize>();
            graphs += reps.len();
        }
    }
    Ok(format!("{subgraphs} connected subgraphs have >= 3 first-type corners; {graphs} graphs (n<=7) generalized Laman"))
}

fn connected(vs: &[Vertex], es: &[Edge]) -> bool {
    let mut reached = HashSet::from([vs[0]]);
    let mut stack = vec![vs[0]];
    while let Some(v) = stack.pop() {
        for e in es {
            let w = if e.0 == v {
                e.1
            } else if e.1 == v {
                e.0
            } else {
                continue;
            };
            if reached.insert(w) {
                stack.push(w);
            }
        }
    }
    reached.len() == vs.len()
}

fn candidate_counts() -> Check {
    let mut tally = [0usize; 3];
    for h in 3..=5 {
        for n in h..=8 {
            for t in generate::outer_fixed(n, h) {
                for e in t.flippable_edges() {
                    let c = t.flip_candidates(e).map_err(|err| format!("n={n} h={h} {e:?}: {err}"))?;
                    ensure(!c.is_empty(), || format!("n={n} h={h}: {e:?} has no candidate"))?;
                    let case = c[0].case;
                    ensure(c.iter().all(|m| m.case == case), || format!("{e:?}: mixed cases"))?;
                    let ok = match case {
                        FlipCase::TwoTriangles | FlipCase::Degenerate5 => c.len() == 1,
                        FlipCase::Pentagon => (2..=3).contains(&c.len()),
                    };
                    ensure(ok, || format!("n={n} h={h}: {e:?} {case:?} with {} candidates", c.len()))?;
                    tally[case as usize] += 1;
                }
            }
        }
    }
    Ok(format!("n<=8, h=3..5: TT {} / DEG5 {} edges with 1 candidate, NONDEG5 {} edges with 2-3", tally[0], tally[1], tally[2]))
}

/// Closure of the seed equals direct generation, labeled: explicitly up to
/// `explicit`, through the class-level covering above.
fn closure_agrees(h: usize, max_n: usize, explicit: usize) -> Result<(), String> {
    for n in h..=max_n {
        let u = Universe::new(n, h, Mode::Labeled).map_err(|e| e.to_string())?;
        if n <= explicit {
            let (_, a) = lab::cross_check(u);
            ensure(a.agree(), || format!("n={n} h={h}: {a:?}"))?;
        } else {
            let vg = VoltageGraph::build(u);
            let reps = generate::outer_fixed(n, h).len();
            let direct = reps * factorial(n - h);
            ensure(vg.classes() == reps && vg.labeled_size() == direct, || {
                format!("n={n} h={h}: closure {} classes / {} graphs, direct {reps} / {direct}", vg.classes(), vg.labeled_size())
            })?;
        }
    }
    Ok(())
}

/// Sequence between `a` and `b`: valid prefixes, exact endpoint, bounded length.
fn check_pair(a: &Cppt, b: &Cppt, mode: Mode) -> Result<usize, String> {
    let n = a.n();
    let seq = canon::flip_sequence(a, b, mode).map_err(|e| e.to_string())?;
    let end = seq.verify().map_err(|e| e.to_string())?;
    let hit = match mode {
        Mode::Labeled => end == *b,
        Mode::Unlabeled => mode.key(&end) == mode.key(b),
    };
    ensure(hit, || format!("n={n}: endpoint differs from target"))?;
    ensure(seq.len() <= C * n * n, || format!("n={n}: {} flips > {C} n^2", seq.len()))?;
    Ok(seq.len())
}

fn all_pairs(n: usize, h: usize) -> Result<(usize, usize), String> {
    let all = generate::labeled(n, h);
    let worst = all
        .par_iter()
        .map(|a| all.iter().map(|b| check_pair(a, b, Mode::Labeled)).try_fold(0, |m, l| l.map(|l| m.max(l))))
        .try_reduce(|| 0, |x, y| Ok(x.max(y)))?;
    Ok((all.len() * all.len(), worst))
}

fn random_pairs(n: usize, h: usize, count: usize, seed: u64) -> Result<usize, String> {
    let reps = generate::outer_fixed(n, h);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Cppt, Cppt)> = (0..count)
        .map(|_| (random_labeled(&reps, n, h, &mut rng), random_labeled(&reps, n, h, &mut rng)))
        .collect();
    pairs
        .par_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let mode = if i % 4 == 3 { Mode::Unlabeled } else { Mode::Labeled };
            check_pair(a, b, mode)
        })
        .try_reduce(|| 0, |x, y| Ok(x.max(y)))
}

fn triangular_sequences() -> Check {
    closure_agrees(3, 9, 7)?;
    let mut instances = 0;
    for n in 3..=9 {
        let reps = generate::outer_fixed(n, 3);
        reps.par_iter()
            .try_for_each(|t| {
                let seq = canon::canonicalize_triangular(t).map_err(|e| e.to_string())?;
                let end = seq.verify().map_err(|e| e.to_string())?;
                ensure(canon::classify(&end).form == Form::Canonical, || format!("n={n}: endpoint not canonical"))?;
                ensure(seq.len() <= C * n * n, || format!("n={n}: {} flips", seq.len()))
            })?;
        instances += reps.len();
    }
    let mut pairs = 0;
    let mut worst = vec![];
    for n in 3..=6 {
        let (p, w) = all_pairs(n, 3)?;
        pairs += p;
        worst.push(format!("n{n}:{w}"));
    }
    let w9 = random_pairs(9, 3, RANDOM_PAIRS_N9, SEED)?;
    worst.push(format!("n9:{w9}"));
    Ok(format!(
        "closure = generation n<=9; {instances} canonicalized; {pairs} pairs n<=6 + {RANDOM_PAIRS_N9} at n=9; max len {} <= {C} n^2",
        worst.join(" ")
    ))
}

fn spinal_exact() -> Check {
    for i in 0..=6 {
        let order: Vec<Vertex> = (3..3 + i).collect();
        let t = fixtures::canonical_ordered(&order);
        for side in [Side::R, Side::S] {
            let seq = canon::canonical_to_spinal(&t, side).map_err(|e| e.to_string())?;
            ensure(seq.len() == i, || format!("i={i} {side:?}: {} flips", seq.len()))?;
            let end = seq.verify().map_err(|e| e.to_string())?;
            ensure(end == fixtures::mixed(&order, i, side), || format!("i={i} {side:?}: wrong endpoint"))?;
        }
    }
    Ok("canonical -> r/s-spinal in exactly i flips, i = 0..6".into())
}

fn general_sequences() -> Check {
    let mut instances = 0;
    let mut worst = vec![];
    for h in [4, 5] {
        closure_agrees(h, 8, 7)?;
        for n in h..=8 {
            let reps = generate::outer_fixed(n, h);
            reps.par_iter().try_for_each(|t| {
                let seq = canon::canonicalize_general(t).map_err(|e| format!("n={n} h={h}: {e}"))?;
                let end = seq.verify().map_err(|e| e.to_string())?;
                ensure(canon::classify(&end).form == Form::GeneralCanonical, || format!("n={n} h={h}: not canonical"))?;
                ensure(seq.len() <= C * n * n, || format!("n={n} h={h}: {} flips", seq.len()))
            })?;
            instances += reps.len();
        }
        let mut w = 0;
        for n in h..=6 {
            w = w.max(all_pairs(n, h)?.1);
        }
        for n in 7..=8 {
            w = w.max(random_pairs(n, h, RANDOM_PAIRS_GENERAL, SEED + n as u64)?);
        }
        worst.push(format!("h{h}:{w}"));
    }
    Ok(format!(
        "closure = generation n<=8; {instances} canonicalized; all pairs n<=6, {RANDOM_PAIRS_GENERAL} per n at 7,8; max len {}",
        worst.join(" ")
    ))
}

fn small_values() -> Check {
    let mut rows = vec![];
    for (n, size, edges, diameter) in [(3, 1, 0, 0), (4, 3, 3, 1), (5, 30, 54, 6)] {
        let u = Universe::new(n, 3, Mode::Labeled).map_err(|e| e.to_string())?;
        let g = FlipGraphIndex::build(u, lab::enumerate_by_flips(u)).map_err(|e| e.to_string())?;
        let got = (g.len(), g.edge_count(), g.connectivity_and_diameter());
        ensure(got == (size, edges, (true, diameter)), || format!("n={n}: {got:?}"))?;
        rows.push(format!("n={n}: {size} nodes, {edges} edges, diameter {diameter}"));
    }
    Ok(rows.join("; "))
}

fn emulation() -> Check {
    let mut flips = 0usize;
    let mut longest = [0usize; 3];
    for n in 3..=7 {
        for t in generate::outer_fixed(n, 3) {
            let g = induced::induced_triangulation(&t).map_err(|e| e.to_string())?;
            let distinct: HashSet<Edge> = g.edges().into_iter().collect();
            ensure(g.edge_count() == 3 * n - 6 && distinct.len() == 3 * n - 6, || format!("n={n}: I(T) has {} edges", g.edge_count()))?;
            for (m, next) in t.neighbors_by_flip() {
                let em = induced::emulate_flip(&t, &m).map_err(|e| format!("n={n} {m:?}: {e}"))?;
                let target = induced::induced_triangulation(&next).map_err(|e| e.to_string())?;
                ensure(em.start == g && em.end == target, || format!("n={n} {m:?}: endpoints"))?;
                ensure(em.replay().map_err(|e| e.to_string())? == target, || format!("n={n} {m:?}: replay"))?;
                let k = em.flips.len();
                let ok = match em.shape {
                    RegionShape::Triangle => k == 0,
                    RegionShape::Pentagon => k <= 2,
                    RegionShape::Hexagon => k <= 6,
                };
                ensure(ok, || format!("n={n} {m:?}: {:?} with {k} flips", em.shape))?;
                longest[em.shape as usize] = longest[em.shape as usize].max(k);
                flips += 1;
            }
        }
    }
    Ok(format!(
        "{flips} flips (n<=7): I(T) simple with 3n-6 edges; emulation exact, max length triangle {} / pentagon {} / hexagon {}; no 4-gon case",
        longest[0], longest[1], longest[2]
    ))
}

fn lower_bound() -> Check {
    for n in 5..=9 {
        let t = induced::lower_bound_instance(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(t.is_valid(), || format!("n={n}: invalid instance"))?;
        let g = induced::induced_triangulation(&t).map_err(|e| e.to_string())?;
        let hit = g
            .flippable_edges()
            .into_iter()
            .any(|e| g.flip(e).is_ok_and(|w| w.is_double_wheel()));
        ensure(hit, || format!("n={n}: I(T) is not one flip from a double wheel"))?;
    }
    Ok("n=5..9: I(T) one triangulation flip from a double wheel".into())
}

/// Exact labeled diameters for small n; above, the eccentricity `e` of the
/// canonical graph brackets the diameter in `[e, 2e]`.
fn diameters() -> Check {
    let mut exact = vec![];
    for n in 4..=7 {
        let vg = VoltageGraph::build(Universe::new(n, 3, Mode::Labeled).map_err(|e| e.to_string())?);
        exact.push((n, vg.diameter().map_err(|e| e.to_string())?));
    }
    let mut brackets = vec![];
    for n in 8..=9 {
        let u = Universe::new(n, 3, Mode::Labeled).map_err(|e| e.to_string())?;
        let vg = VoltageGraph::build(u);
        let seed = (0..vg.reps.len())
            .find(|&c| canon::classify(&vg.reps[c]).form == Form::Canonical)
            .ok_or("canonical class not found")?;
        let e = vg.eccentricity(seed).map_err(|e| e.to_string())?;
        brackets.push((n, e, 2 * e));
    }
    // growth must not stall: exact values strictly increase faster than n,
    // and each bracket can still sit above the previous per-vertex rate
    for w in exact.windows(2) {
        let ((n0, d0), (n1, d1)) = (w[0], w[1]);
        ensure(d1 > d0 && d1 * n0 > d0 * n1, || format!("diameter {d1} at n={n1} after {d0} at n={n0}"))?;
    }
    let (n7, d7) = *exact.last().unwrap();
    let mut prev = (n7, d7);
    for &(n, lo, hi) in &brackets {
        ensure(lo >= prev.1 && hi * prev.0 > prev.1 * n, || format!("n={n}: bracket [{lo},{hi}] contradicts growth"))?;
        prev = (n, lo);
    }
    let ex: Vec<String> = exact.iter().map(|(n, d)| format!("d({n})={d}")).collect();
    let br: Vec<String> = brackets.iter().map(|(n, lo, hi)| format!("d({n}) in [{lo},{hi}]")).collect();
    Ok(format!("{}; {}; superlinear-consistent", ex.join(" "), br.join(" ")))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("structural laws", structural_laws),
        ("first-type corners and generalized Laman", corners_and_laman),
        ("flip candidate counts", candidate_counts),
        ("triangular outer face: connectivity and sequences", triangular_sequences),
        ("canonical to spinal", spinal_exact),
        ("general outer face: connectivity and sequences", general_sequences),
        ("small exact values", small_values),
        ("induced triangulation and emulation", emulation),
        ("lower-bound family", lower_bound),
        ("labeled diameters", diameters),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
