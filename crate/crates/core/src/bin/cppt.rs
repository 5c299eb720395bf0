//! Command-line front end. Exit codes: 0 success, 1 domain error (invalid
//! graph, impossible flip, failed verification), 2 malformed input.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use cppt::canon::{self, FlipSequence};
use cppt::fixtures::{self, Side};
use cppt::induced;
use cppt::io::{self, GraphDocument};
use cppt::lab::{self, FlipGraphIndex, Mode, Universe};
use cppt::{Cppt, Edge, IoError, Vertex};

#[derive(Parser)]
#[command(name = "cppt", version, about = "Flips in combinatorial pointed pseudo-triangulations")]
struct Cli {
    /// Worker threads for enumeration (0: all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every axiom; exit 1 if any fails.
    Validate { graph: String },
    /// Counts n, e, t, q, h.
    Info { graph: String },
    /// Face walks, outer face first.
    Faces { graph: String },
    /// Edges that can be flipped.
    Flippable { graph: String },
    /// Valid flips of one edge.
    Candidates {
        graph: String,
        #[arg(long, value_parser = parse_edge)]
        edge: Edge,
    },
    /// Apply one flip and print the result.
    Flip {
        graph: String,
        #[arg(long, value_parser = parse_edge)]
        remove: Edge,
        /// Required unless the flip is unique.
        #[arg(long, value_parser = parse_edge)]
        insert: Option<Edge>,
    },
    /// Flip sequence to the canonical form.
    Canonicalize {
        graph: String,
        /// General canonical form (any outer face).
        #[arg(long)]
        general: bool,
        /// Print the endpoint instead of the sequence.
        #[arg(long)]
        end: bool,
    },
    /// From canonical to spinal form.
    ToSpinal {
        graph: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Reorder the interior of a canonical form, bottom to top.
    Sort {
        graph: String,
        #[arg(long, value_delimiter = ',')]
        order: Vec<Vertex>,
    },
    /// Flip sequence from A to B (B up to interior relabeling unless
    /// --labeled).
    Sequence {
        a: String,
        b: String,
        #[arg(long)]
        labeled: bool,
    },
    /// Replay a sequence, validating every prefix. Prints the endpoint hash.
    VerifySeq {
        /// Sequence file, `-` for stdin.
        #[arg(default_value = "-")]
        seq: String,
        /// Graph the sequence must end at.
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        labeled: bool,
    },
    /// Every 4-PPT on the outer cycle 0..h, one compact document per line.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        outer: usize,
        #[arg(long)]
        labeled: bool,
        /// Only print the count.
        #[arg(long)]
        count: bool,
    },
    /// Flip-graph statistics for every size up to n.
    Flipgraph {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        outer: usize,
        #[arg(long)]
        labeled: bool,
        #[arg(long)]
        stats: bool,
    },
    /// Exact flip distance by breadth-first search.
    BfsDist {
        a: String,
        b: String,
        #[arg(long)]
        labeled: bool,
    },
    /// A uniformly random 4-PPT on the outer cycle 0..h.
    Sample {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        outer: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Induced triangulation.
    Induced { graph: String },
    /// Triangulation flips emulating one flip.
    Emulate {
        graph: String,
        #[arg(long, value_parser = parse_edge)]
        remove: Edge,
        #[arg(long, value_parser = parse_edge)]
        insert: Edge,
    },
    /// Named instances.
    Fixtures {
        #[arg(long, value_enum)]
        name: FixtureName,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        outer: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    R,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum FixtureName {
    Canonical,
    SpinalR,
    SpinalS,
    GeneralCanonical,
    DoubleWheel,
    LowerBound,
}

enum Failure {
    Domain(String),
    Input(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (a, b) = s.split_once(',').ok_or("expected u,v")?;
    let p = |x: &str| x.trim().parse::<Vertex>().map_err(|e| e.to_string());
    Ok(Edge::new(p(a)?, p(b)?))
}

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

fn read_graph(path: &str) -> Result<Cppt, Failure> {
    io::read_graph(&read_text(path)?).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// Graph that must also pass validation.
fn read_valid(path: &str) -> Result<Cppt, Failure> {
    let t = read_graph(path)?;
    let r = t.validate();
    if !r.valid {
        return Err(Failure::Domain(format!("{path} is not a valid 4-PPT: {:?}", r.violations)));
    }
    Ok(t)
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

fn mode(labeled: bool) -> Mode {
    if labeled {
        Mode::Labeled
    } else {
        Mode::Unlabeled
    }
}

fn print_seq(seq: &FlipSequence) {
    print!("{}", io::write_sequence(seq));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Validate { graph } => {
            let r = read_graph(&graph)?.validate();
            println!("{}", json(&r));
            if !r.valid {
                return Err(Failure::Domain("invalid".into()));
            }
        }
        Cmd::Info { graph } => {
            let r = read_graph(&graph)?.validate();
            #[derive(Serialize)]
            struct Info {
                n: usize,
                e: usize,
                t: usize,
                q: usize,
                h: usize,
                valid: bool,
            }
            let info = Info {
                n: r.n,
                e: r.e,
                t: r.t,
                q: r.q,
                h: r.h,
                valid: r.valid,
            };
            println!("{}", json(&info));
        }
        Cmd::Faces { graph } => {
            let t = read_graph(&graph)?;
            for f in t.trace_faces() {
                println!("{:?}", f.vertices());
            }
        }
        Cmd::Flippable { graph } => {
            for e in read_valid(&graph)?.flippable_edges() {
                println!("{},{}", e.0, e.1);
            }
        }
        Cmd::Candidates { graph, edge } => {
            let t = read_valid(&graph)?;
            let c = t.flip_candidates(edge).map_err(domain)?;
            for m in c {
                let case = serde_json::to_value(m.case).expect("unit variant");
                println!("{},{} {}", m.inserted.0, m.inserted.1, case.as_str().unwrap_or_default());
            }
        }
        Cmd::Flip { graph, remove, insert } => {
            let t = read_valid(&graph)?;
            let next = match insert {
                Some(ins) => t.flip(remove, ins).map_err(domain)?,
                None => {
                    let c = t.flip_candidates(remove).map_err(domain)?;
                    if c.len() != 1 {
                        let list: Vec<String> = c.iter().map(|m| format!("{},{}", m.inserted.0, m.inserted.1)).collect();
                        return Err(Failure::Domain(format!("{} candidates, pass --insert: {}", c.len(), list.join(" "))));
                    }
                    t.apply_flip(&c[0]).map_err(domain)?
                }
            };
            print!("{}", io::write_graph(&next));
        }
        Cmd::Canonicalize { graph, general, end } => {
            let t = read_valid(&graph)?;
            let seq = if general {
                canon::canonicalize_general(&t)
            } else {
                canon::canonicalize_triangular(&t)
            }
            .map_err(domain)?;
            if end {
                print!("{}", io::write_graph(&seq.end().map_err(domain)?));
            } else {
                print_seq(&seq);
            }
        }
        Cmd::ToSpinal { graph, side } => {
            let side = match side {
                SideArg::R => Side::R,
                SideArg::S => Side::S,
            };
            print_seq(&canon::canonical_to_spinal(&read_valid(&graph)?, side).map_err(domain)?);
        }
        Cmd::Sort { graph, order } => {
            print_seq(&canon::sort_labels(&read_valid(&graph)?, &order).map_err(domain)?);
        }
        Cmd::Sequence { a, b, labeled } => {
            let (ta, tb) = (read_valid(&a)?, read_valid(&b)?);
            print_seq(&canon::flip_sequence(&ta, &tb, mode(labeled)).map_err(domain)?);
        }
        Cmd::VerifySeq { seq, target, labeled } => {
            let s = io::read_sequence(&read_text(&seq)?)?;
            let end = s.verify().map_err(domain)?;
            if let Some(path) = target {
                let b = read_graph(&path)?;
                let m = mode(labeled);
                if m.key(&end) != m.key(&b) {
                    return Err(Failure::Domain(format!("sequence does not end at {path}")));
                }
            }
            println!("{} moves, endpoint {}", s.len(), io::graph_hash(&end));
        }
        Cmd::Enumerate { n, outer, labeled, count } => {
            let u = Universe::new(n, outer, mode(labeled)).map_err(domain)?;
            let all = lab::enumerate_by_flips(u);
            if count {
                println!("{}", all.len());
            } else {
                for t in &all {
                    println!("{}", serde_json::to_string(&GraphDocument::from_cppt(t)).expect("serializable"));
                }
            }
        }
        Cmd::Flipgraph { n, outer, labeled, stats } => {
            if !stats {
                return Err(Failure::Input("only --stats output is supported".into()));
            }
            let mut rows = vec![];
            for k in outer..=n {
                let u = Universe::new(k, outer, mode(labeled)).map_err(domain)?;
                rows.push(lab::stats(u).map_err(domain)?);
            }
            println!("{}", json(&rows));
        }
        Cmd::BfsDist { a, b, labeled } => {
            let (ta, tb) = (read_valid(&a)?, read_valid(&b)?);
            let h = ta.outer_size();
            if tb.n() != ta.n() || ta.outer_cycle() != (0..h).collect::<Vec<_>>() || tb.outer_cycle() != ta.outer_cycle() {
                return Err(Failure::Domain("both graphs need the outer cycle 0..h".into()));
            }
            let u = Universe::new(ta.n(), h, mode(labeled)).map_err(domain)?;
            let g = FlipGraphIndex::build(u, lab::enumerate_by_flips(u)).map_err(domain)?;
            match g.bfs_distance(&ta, &tb).map_err(domain)? {
                Some(d) => println!("{d}"),
                None => return Err(Failure::Domain("not connected".into())),
            }
        }
        Cmd::Sample { n, outer, seed } => {
            let u = Universe::new(n, outer, Mode::Labeled).map_err(domain)?;
            let all = lab::enumerate_direct(u);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = all.choose(&mut rng).ok_or_else(|| domain("empty universe"))?;
            print!("{}", io::write_graph(t));
        }
        Cmd::Induced { graph } => {
            let g = induced::induced_triangulation(&read_valid(&graph)?).map_err(domain)?;
            print!("{}", GraphDocument::from_triangulation(&g).to_text());
        }
        Cmd::Emulate { graph, remove, insert } => {
            let t = read_valid(&graph)?;
            let m = t.find_move(remove, insert).map_err(domain)?;
            let em = induced::emulate_flip(&t, &m).map_err(domain)?;
            #[derive(Serialize)]
            struct Out {
                flips: Vec<induced::TriFlip>,
                shape: induced::RegionShape,
            }
            println!(
                "{}",
                json(&Out {
                    flips: em.flips,
                    shape: em.shape,
                })
            );
        }
        Cmd::Fixtures { name, n, outer } => {
            let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(domain(what)) };
            let t = match name {
                FixtureName::Canonical => {
                    need(n >= 3, "need n >= 3")?;
                    fixtures::canonical(n)
                }
                FixtureName::SpinalR | FixtureName::SpinalS => {
                    need(n >= 3, "need n >= 3")?;
                    let side = if matches!(name, FixtureName::SpinalR) { Side::R } else { Side::S };
                    fixtures::spinal(n, side)
                }
                FixtureName::GeneralCanonical => {
                    need(outer >= 3 && n >= outer, "need 3 <= outer <= n")?;
                    fixtures::general_canonical(n, outer)
                }
                FixtureName::DoubleWheel => {
                    let g = induced::double_wheel(n).map_err(domain)?;
                    print!("{}", GraphDocument::from_triangulation(&g).to_text());
                    return Ok(());
                }
                FixtureName::LowerBound => induced::lower_bound_instance(n).map_err(domain)?,
            };
            print!("{}", io::write_graph(&t));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers > 0 {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("malformed input: {m}");
            ExitCode::from(2)
        }
    }
}
