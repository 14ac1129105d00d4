//! Command-line front end for the `compaut` library.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 domain error, 2 input error, 3 oracle bound exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use compaut::dim4::{construct_cx, default_bipartition, four_chains, gi_reduction, verify_chain_intersection};
use compaut::enumerate::{random_connected_bipartite, random_graph};
use compaut::group::aut_tree_with;
use compaut::io::{parse_graph, write_edge_list};
use compaut::modular::is_prime;
use compaut::orientation::{count_orientations, Composer, Orientation};
use compaut::permgraph::{is_permutation_graph_with, prime_symmetry_class_with, representation};
use compaut::{build_modular_tree, Error, Graph, Oracle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Parser, Debug)]
#[command(name = "compaut", version, about = "Modular decomposition, automorphism groups and permutation graphs")]
struct Cli {
    /// Output format; not every command supports every format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Largest vertex count handed to exhaustive oracles.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    oracle_bound: u64,
    /// Seed for randomized commands.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Modular tree of a graph.
    Decompose { input: PathBuf },
    /// Automorphism group as an expression, with its order.
    Aut {
        input: PathBuf,
        /// Cross-check against exhaustive search.
        #[arg(long)]
        verify: bool,
    },
    /// Transitive orientations.
    Orientations {
        input: PathBuf,
        #[arg(long, conflicts_with = "list", required_unless_present = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
        /// Stop listing after this many orientations.
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Permutation graph recognition and a two-line representation.
    Perm { input: PathBuf },
    /// Gadget graph and, for bipartite input, its four chains.
    Dim4 { input: PathBuf },
    /// Isomorphism reduction of two graphs, written to a directory.
    Reduce {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Seeded random graph as an edge list.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Connected bipartite instead of uniform.
        #[arg(long)]
        bipartite: bool,
    },
}

struct Ctx {
    format: Format,
    oracle: Oracle,
    seed: u64,
}

type Res<T> = std::result::Result<T, Error>;

fn read_graph(path: &Path) -> Res<Graph> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

fn unsupported(ctx: &Ctx, cmd: &str) -> Error {
    Error::Input(format!("{cmd} does not support --format {:?}", ctx.format).to_lowercase())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn decompose(ctx: &Ctx, g: &Graph) -> Res<String> {
    let t = build_modular_tree(g)?;
    match ctx.format {
        Format::Json => Ok(pretty(&t.to_json())),
        Format::Dot => Ok(t.to_dot()),
        Format::Text => {
            let mut s = String::new();
            for (id, node) in t.nodes().iter().enumerate() {
                let _ = writeln!(
                    s,
                    "node {id}: {:?} members {:?} children {:?} leaves {:?}",
                    node.kind, node.members, node.children, node.leaves
                );
            }
            Ok(s)
        }
        Format::Svg => Err(unsupported(ctx, "decompose")),
    }
}

fn aut(ctx: &Ctx, g: &Graph, verify: bool) -> Res<String> {
    let t = build_modular_tree(g)?;
    let at = aut_tree_with(&t, &ctx.oracle)?;
    let order = at.expr.order();
    let verified = if verify {
        let brute = ctx.oracle.automorphisms(g)?;
        let ok = brute.element_set() == at.group.element_set();
        if !ok {
            return Err(Error::Domain(format!(
                "verification failed: exhaustive search finds order {}, the tree gives {order}",
                brute.order()
            )));
        }
        Some(ok)
    } else {
        None
    };
    match ctx.format {
        Format::Json => {
            let order_json = order.to_string().parse::<u64>().map_or_else(|_| json!(order.to_string()), |o| json!(o));
            let mut v = json!({
                "group": at.expr.to_string(),
                "expr": at.expr.to_json(),
                "order": order_json,
                "generators": at.group.generators().iter().map(|p| p.images().to_vec()).collect::<Vec<_>>(),
            });
            if let Some(ok) = verified {
                v["verified"] = json!(ok);
            }
            Ok(pretty(&v))
        }
        Format::Text => {
            let mut s = format!("{}\norder {order}\n", at.expr);
            if verified.is_some() {
                s.push_str("verified against exhaustive search\n");
            }
            Ok(s)
        }
        _ => Err(unsupported(ctx, "aut")),
    }
}

fn orientation_text(o: &Orientation) -> String {
    o.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect::<Vec<_>>().join(" ")
}

fn orientations(ctx: &Ctx, g: &Graph, list: bool, limit: usize) -> Res<String> {
    let t = build_modular_tree(g)?;
    let composer = Composer::with_oracle(&t, &ctx.oracle)?;
    if !list {
        let count = count_orientations(&t)?;
        return match ctx.format {
            Format::Text => Ok(format!("{count}\n")),
            Format::Json => {
                let c = count.to_string().parse::<u64>().map_or_else(|_| json!(count.to_string()), |c| json!(c));
                Ok(pretty(&json!({ "count": c })))
            }
            _ => Err(unsupported(ctx, "orientations")),
        };
    }
    let all: Vec<Orientation> = composer.orientations().take(limit.saturating_add(1)).collect();
    if all.len() > limit {
        eprintln!("listing truncated after {limit} orientations");
    }
    let shown = &all[..all.len().min(limit)];
    match ctx.format {
        Format::Text => Ok(shown.iter().map(|o| orientation_text(o) + "\n").collect()),
        Format::Json => Ok(pretty(&json!(shown.iter().map(Orientation::arcs).collect::<Vec<_>>()))),
        _ => Err(unsupported(ctx, "orientations")),
    }
}

fn perm(ctx: &Ctx, g: &Graph) -> Res<String> {
    let yes = is_permutation_graph_with(g, &ctx.oracle)?;
    if !yes {
        return match ctx.format {
            Format::Text => Ok("not a permutation graph\n".into()),
            Format::Json => Ok(pretty(&json!({ "permutation_graph": false }))),
            Format::Svg => Err(Error::Domain("not a permutation graph".into())),
            Format::Dot => Err(unsupported(ctx, "perm")),
        };
    }
    let rep = representation(g)?;
    let class = if g.n() >= 3 && is_prime(g) {
        Some(prime_symmetry_class_with(g, &ctx.oracle)?)
    } else {
        None
    };
    match ctx.format {
        Format::Svg => Ok(rep.to_svg()),
        Format::Json => {
            let mut v = json!({ "permutation_graph": true, "representation": rep.to_json() });
            if let Some(c) = &class {
                v["symmetry_class"] = serde_json::to_value(c).expect("symmetry class serializes");
            }
            Ok(pretty(&v))
        }
        Format::Text => {
            let line = |l: &[usize]| l.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            let mut s = format!("permutation graph\nL1: {}\nL2: {}\n", line(&rep.l1), line(&rep.l2));
            if let Some(c) = &class {
                let _ = writeln!(s, "prime, symmetry {:?}, group order {}", c.subgroup, c.order);
            }
            Ok(s)
        }
        Format::Dot => Err(unsupported(ctx, "perm")),
    }
}

fn dim4(ctx: &Ctx, x: &Graph) -> Res<String> {
    let cx = construct_cx(x);
    if ctx.format == Format::Dot {
        return Ok(cx.to_dot());
    }
    let chains = if x.is_bipartite() {
        let cs = four_chains(&cx, &default_bipartition(x)?)?;
        let report = verify_chain_intersection(&cs, &cx)?;
        Some((cs, report))
    } else {
        None
    };
    match ctx.format {
        Format::Json => {
            let mut v = json!({ "gadget": cx.to_json() });
            match &chains {
                Some((cs, report)) => {
                    v["chains"] = json!(cs.chains);
                    v["verification"] = json!({
                        "pass": report.is_exact(),
                        "report": serde_json::to_value(report).expect("report serializes"),
                    });
                }
                None => v["chains"] = Value::Null,
            }
            Ok(pretty(&v))
        }
        Format::Text => {
            let mut s = write_edge_list(&cx.graph);
            match &chains {
                Some((cs, report)) => {
                    s.push_str("chains\n");
                    s.push_str(&cs.to_text());
                    let verdict = if report.is_exact() { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "verification {verdict}");
                }
                None => s.push_str("no chains: input is not bipartite\n"),
            }
            Ok(s)
        }
        _ => Err(unsupported(ctx, "dim4")),
    }
}

fn reduce(ctx: &Ctx, first: &Path, second: &Path, out: &Path) -> Res<String> {
    let (x1, x2) = (read_graph(first)?, read_graph(second)?);
    let (c1, c2) = gi_reduction(&x1, &x2)?;
    let io_err = |e: std::io::Error| Error::Input(format!("cannot write to {}: {e}", out.display()));
    fs::create_dir_all(out).map_err(io_err)?;
    let (o1, o2) = (out.join("reduced_1.txt"), out.join("reduced_2.txt"));
    fs::write(&o1, write_edge_list(&c1)).map_err(io_err)?;
    fs::write(&o2, write_edge_list(&c2)).map_err(io_err)?;
    let isomorphic = match ctx.oracle.isomorphism(&x1, &x2) {
        Ok(found) => json!(found.is_some()),
        Err(Error::OracleBound { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let manifest = json!({
        "inputs": [first.display().to_string(), second.display().to_string()],
        "outputs": ["reduced_1.txt", "reduced_2.txt"],
        "vertices": [c1.n(), c2.n()],
        "isomorphic": isomorphic,
    });
    let text = pretty(&manifest);
    fs::write(out.join("manifest.json"), &text).map_err(io_err)?;
    Ok(match ctx.format {
        Format::Json => text,
        _ => format!(
            "wrote {} and {} ({} and {} vertices); isomorphic: {isomorphic}\n",
            o1.display(),
            o2.display(),
            c1.n(),
            c2.n()
        ),
    })
}

fn random(ctx: &Ctx, n: usize, p: f64, bipartite: bool) -> Res<String> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let g = if bipartite {
        if n < 2 {
            return Err(Error::Input("a connected bipartite graph needs two vertices".into()));
        }
        random_connected_bipartite(&mut rng, n, p)
    } else {
        random_graph(&mut rng, n, p)
    };
    Ok(write_edge_list(&g))
}

fn run(cli: Cli) -> Res<String> {
    let ctx = Ctx {
        format: cli.format,
        oracle: Oracle::with_max_vertices(cli.oracle_bound as usize),
        seed: cli.seed,
    };
    match cli.command {
        Command::Decompose { input } => decompose(&ctx, &read_graph(&input)?),
        Command::Aut { input, verify } => aut(&ctx, &read_graph(&input)?, verify),
        Command::Orientations { input, list, limit, .. } => orientations(&ctx, &read_graph(&input)?, list, limit),
        Command::Perm { input } => perm(&ctx, &read_graph(&input)?),
        Command::Dim4 { input } => dim4(&ctx, &read_graph(&input)?),
        Command::Reduce { first, second, out } => reduce(&ctx, &first, &second, &out),
        Command::Random { n, p, bipartite } => random(&ctx, n, p, bipartite),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) => 1,
        Error::Input(_) | Error::Parse { .. } => 2,
        Error::OracleBound { .. } => 3,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
