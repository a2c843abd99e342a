//! The `spr` command line. Exit codes: 0 yes / success, 1 no / unreachable,
//! 2 error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::chordal::chordal_reroute;
use crate::clawfree::{clawfree_connected, clawfree_reachable};
use crate::error::SprError;
use crate::generate;
use crate::io::{
    parse_color_instance, parse_graph, parse_path, parse_sequence, serialize_graph, serialize_path,
    GraphFile,
};
use crate::isolated::count_isolated;
use crate::layering::{check_path, validate_reroute_sequence, Layering, RerouteSequence};
use crate::oracle::{
    build_solution_graph, enumerate_shortest_paths, oracle_connected, oracle_search, DEFAULT_CAP,
};
use crate::recognition::{chordality_check, find_claw};
use crate::reduction::{build_reduction, gen_main_strand};

#[derive(Debug, Parser)]
#[command(name = "spr", version, about = "Shortest-path reconfiguration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Chordal,
    Clawfree,
    Oracle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reroute path P to path Q; prints one `path` line per step.
    Reach {
        graph: PathBuf,
        p: PathBuf,
        q: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        algo: Algo,
        /// Limit on paths explored by the oracle.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Is the solution graph connected? Prints YES or NO.
    Connected {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        algo: Algo,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Number of shortest st-paths with no neighbour in the solution graph.
    CountIsolated { graph: PathBuf },
    /// Check a sequence file against a graph.
    Validate { graph: PathBuf, sequence: PathBuf },
    /// Print the layers L_0 .. L_d, one per line.
    Layers { graph: PathBuf },
    /// Build the rerouting instance for a 4-colour reconfiguration instance.
    Reduce {
        instance: PathBuf,
        /// Writes <out>.graph, <out>.atlas, <out>.alpha.path, <out>.beta.path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a graph file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Write here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    MainStrand {
        n: usize,
    },
    Ktree {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Line graph of G(n, p).
    Linegraph {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Cycle {
        n: usize,
    },
}

struct Failure(String);

impl From<SprError> for Failure {
    fn from(e: SprError) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<(GraphFile, Layering), Failure> {
    let file =
        parse_graph(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let lay = Layering::compute(&file.graph, file.s, file.t)?;
    Ok((file, lay))
}

fn out_line(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure(format!("stdout: {e}")))
}

fn print_sequence(out: &mut dyn Write, seq: &RerouteSequence) -> Outcome {
    for p in seq.paths() {
        out_line(out, &serialize_path(p))?;
    }
    Ok(0)
}

fn resolve(g: &crate::graph::Graph, algo: Algo) -> Algo {
    match algo {
        Algo::Auto if chordality_check(g).is_chordal() => Algo::Chordal,
        Algo::Auto if find_claw(g).is_none() => Algo::Clawfree,
        Algo::Auto => Algo::Oracle,
        other => other,
    }
}

fn reach(graph: &Path, p: &Path, q: &Path, algo: Algo, cap: usize, out: &mut dyn Write) -> Outcome {
    let (file, lay) = load_graph(graph)?;
    let g = &file.graph;
    let n = g.vertex_count();
    let parse = |path: &Path| {
        parse_path(&read(path)?, n).map_err(|e| Failure(format!("{}: {e}", path.display())))
    };
    let (p, q) = (parse(p)?, parse(q)?);
    check_path(g, &lay, &p, "P")?;
    check_path(g, &lay, &q, "Q")?;
    let found = match resolve(g, algo) {
        Algo::Chordal => Some(chordal_reroute(g, &lay, &p, &q)?),
        Algo::Clawfree => clawfree_reachable(g, &lay, &p, &q)?,
        _ => oracle_search(g, &lay, &p, &q, cap)?,
    };
    match found {
        Some(seq) => print_sequence(out, &seq),
        None => {
            out_line(out, "UNREACHABLE")?;
            Ok(1)
        }
    }
}

fn connected(graph: &Path, algo: Algo, cap: usize, out: &mut dyn Write) -> Outcome {
    let (file, lay) = load_graph(graph)?;
    let g = &file.graph;
    let yes = match resolve(g, algo) {
        Algo::Chordal => {
            if !chordality_check(g).is_chordal() {
                return Err(Failure("graph is not chordal".into()));
            }
            true
        }
        Algo::Clawfree => clawfree_connected(g, file.s, file.t)?,
        _ => oracle_connected(&build_solution_graph(enumerate_shortest_paths(
            g, &lay, cap,
        )?)?)?,
    };
    out_line(out, if yes { "YES" } else { "NO" })?;
    Ok(if yes { 0 } else { 1 })
}

fn validate(graph: &Path, sequence: &Path, out: &mut dyn Write) -> Outcome {
    let (file, lay) = load_graph(graph)?;
    let seq = parse_sequence(&read(sequence)?, file.graph.vertex_count())
        .map_err(|e| Failure(format!("{}: {e}", sequence.display())))?;
    match validate_reroute_sequence(&file.graph, &lay, &seq) {
        Ok(()) => {
            out_line(out, "OK")?;
            Ok(0)
        }
        Err(v) => {
            out_line(out, &format!("INVALID: {v}"))?;
            Ok(1)
        }
    }
}

fn reduce(instance: &Path, prefix: &Path, out: &mut dyn Write) -> Outcome {
    let inst = parse_color_instance(&read(instance)?)
        .map_err(|e| Failure(format!("{}: {e}", instance.display())))?;
    let art = build_reduction(&inst)?;
    let with_ext = |ext: &str| {
        let mut name = prefix.as_os_str().to_owned();
        name.push(ext);
        PathBuf::from(name)
    };
    write_file(
        &with_ext(".graph"),
        &serialize_graph(&art.g_prime, art.s, art.t),
    )?;
    write_file(&with_ext(".atlas"), &art.atlas.serialize())?;
    for (ext, c) in [(".alpha.path", &inst.alpha), (".beta.path", &inst.beta)] {
        let p = art.coloring_to_path(c)?;
        write_file(&with_ext(ext), &format!("{}\n", serialize_path(&p)))?;
    }
    out_line(
        out,
        &format!(
            "vertices {} edges {} d {}",
            art.g_prime.vertex_count(),
            art.g_prime.edge_count(),
            art.layering.d()
        ),
    )?;
    Ok(0)
}

fn gen(kind: &GenKind, dest: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let with_pair = |g: crate::graph::Graph| match generate::max_distance_pair(&g) {
        Some((s, t)) => Ok((g, s, t)),
        None => Err(Failure("generated graph has no edge".into())),
    };
    let (g, s, t) = match *kind {
        GenKind::MainStrand { n } => gen_main_strand(n)?,
        GenKind::Ktree { n, k, seed } => with_pair(generate::k_tree(n, k, seed)?)?,
        GenKind::Linegraph { n, p, seed } => {
            with_pair(generate::line_graph(&generate::random_graph(n, p, seed)?))?
        }
        GenKind::Cycle { n } => with_pair(generate::cycle(n)?)?,
    };
    let text = serialize_graph(&g, s, t);
    match dest {
        Some(path) => write_file(path, &text)?,
        None => write!(out, "{text}").map_err(|e| Failure(format!("stdout: {e}")))?,
    }
    Ok(0)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Reach {
            graph,
            p,
            q,
            algo,
            cap,
        } => reach(&graph, &p, &q, algo, cap, out),
        Command::Connected { graph, algo, cap } => connected(&graph, algo, cap, out),
        Command::CountIsolated { graph } => {
            let (file, lay) = load_graph(&graph)?;
            out_line(out, &count_isolated(&file.graph, &lay)?.to_string())?;
            Ok(0)
        }
        Command::Validate { graph, sequence } => validate(&graph, &sequence, out),
        Command::Layers { graph } => {
            let (_, lay) = load_graph(&graph)?;
            for layer in lay.layers() {
                let ids: Vec<String> = layer.iter().map(|v| (v + 1).to_string()).collect();
                out_line(out, &ids.join(" "))?;
            }
            Ok(0)
        }
        Command::Reduce {
            instance,
            out: prefix,
        } => reduce(&instance, &prefix, out),
        Command::Gen { kind, out: dest } => gen(&kind, dest.as_deref(), out),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
