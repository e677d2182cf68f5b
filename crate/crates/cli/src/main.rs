//! `grphcat`: constructions, factorization reports, and reconstruction
//! sweeps over the four categories of graphs, on line-oriented graph and
//! morphism files.
//!
//! Exit codes: 0 for success / holds / found, 1 for a negative verdict
//! (fails / absent / invalid), 2 for usage or parse errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use grphcat_core::fmt::{check_fmt, fmt_factorize, FmtFactorization};
use grphcat_core::gen::random_morphism;
use grphcat_core::graph::{Category, Graph};
use grphcat_core::limits::{coequalizer, coproduct, equalizer, product, ConeResult};
use grphcat_core::morphism::Morphism;
use grphcat_core::reconstruction::{
    corpus_sweep, make_deck, match_decks, reconstruction_check, DeckMode, ReconstructionOutcome,
    SweepOptions,
};
use grphcat_core::text::{parse_graph, parse_morphism, print_graph, to_dot};

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_owned(),
            source,
        }
    }
}

#[derive(Parser)]
#[command(name = "grphcat", version, about = "categorical constructions on finite multigraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct CatArg {
    /// Category: grphs, stgrphs, sigrphs, or slstgrphs.
    #[arg(long = "cat", default_value = "grphs")]
    cat: Category,
}

#[derive(Args, Clone)]
struct OutArg {
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct MorphismPathArgs {
    /// Override the `dom` header of the morphism file.
    #[arg(long)]
    dom: Option<PathBuf>,
    /// Override the `cod` header of the morphism file.
    #[arg(long)]
    cod: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a graph (or morphism) file against a category's rules.
    Validate {
        file: PathBuf,
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        paths: MorphismPathArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Categorical product of two graphs.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Coproduct (disjoint union) of one or more graphs.
    Coproduct {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Equalizer of two parallel morphisms.
    Equalize {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Coequalizer of two parallel morphisms.
    Coequalize {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Image factorization of a morphism, with the isomorphism verdict.
    Fmt {
        /// Morphism file; omit when using --random.
        file: Option<PathBuf>,
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        paths: MorphismPathArgs,
        /// Run this many random morphisms instead of reading a file.
        #[arg(long)]
        random: Option<usize>,
        /// Seed for --random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Part budget per random graph.
        #[arg(long, default_value_t = 8)]
        max_parts: usize,
        /// Write DOT files for all eight diagram objects into this directory.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// The vertex- or edge-deleted deck of a simple graph.
    Deck {
        file: PathBuf,
        #[arg(long)]
        mode: DeckMode,
        /// Write each card as a graph file into this directory.
        #[arg(long)]
        cards: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Match two decks card-by-card up to isomorphism.
    Match {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        mode: DeckMode,
        #[command(flatten)]
        out: OutArg,
    },
    /// Full reconstruction pipeline: decks, gamma, factorization, delta.
    Reconstruct {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        mode: DeckMode,
        #[command(flatten)]
        out: OutArg,
    },
    /// Exhaustive delta-biconditional sweep over small simple graphs.
    Sweep {
        #[arg(long)]
        mode: DeckMode,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long = "min-n", default_value_t = 2)]
        min_n: usize,
        /// Skip graphs with fewer edges.
        #[arg(long = "min-edges", default_value_t = 0)]
        min_edges: usize,
        /// Emit machine-readable rows (n,mode,pairs,noniso,failures,seconds).
        #[arg(long)]
        rows: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// DOT export of a graph file.
    Dot {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let src = read_file(path)?;
    parse_graph(&src).map_err(|e| CliError::Parse {
        path: path.to_owned(),
        line: e.line,
        message: e.message,
    })
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_owned()
    } else {
        base.parent().unwrap_or(Path::new(".")).join(p)
    }
}

fn load_morphism(path: &Path, overrides: &MorphismPathArgs) -> Result<Morphism, CliError> {
    let src = read_file(path)?;
    let file = parse_morphism(&src).map_err(|e| CliError::Parse {
        path: path.to_owned(),
        line: e.line,
        message: e.message,
    })?;
    let dom_path = overrides
        .dom
        .clone()
        .or_else(|| file.dom_path.as_ref().map(|p| resolve(path, p)))
        .ok_or_else(|| {
            CliError::Input(format!(
                "{}: no domain graph (use a `dom <file>` header or --dom)",
                path.display()
            ))
        })?;
    let cod_path = overrides
        .cod
        .clone()
        .or_else(|| file.cod_path.as_ref().map(|p| resolve(path, p)))
        .ok_or_else(|| {
            CliError::Input(format!(
                "{}: no codomain graph (use a `cod <file>` header or --cod)",
                path.display()
            ))
        })?;
    let dom = load_graph(&dom_path)?;
    let cod = load_graph(&cod_path)?;
    let map = file.pairs.into_iter().collect();
    Morphism::new(dom, cod, map)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &OutArg, report: &str) -> Result<(), CliError> {
    match &out.out {
        None => {
            print!("{report}");
            Ok(())
        }
        Some(path) => fs::write(path, report).map_err(|e| CliError::io(path, e)),
    }
}

fn graph_lines(g: &Graph) -> String {
    print_graph(g)
}

fn counts_line(name: &str, g: &Graph) -> String {
    format!("{name}: vertices={} edges={}\n", g.vertex_count(), g.edge_count())
}

fn cone_report(cone: &ConeResult, name: &str, cat: Category) -> String {
    let mut r = String::new();
    writeln!(r, "construction: {name}").unwrap();
    writeln!(r, "category: {cat}").unwrap();
    writeln!(r, "vertices: {}", cone.object.vertex_count()).unwrap();
    writeln!(r, "edges: {}", cone.object.edge_count()).unwrap();
    r.push_str(&graph_lines(&cone.object));
    r
}

fn morphism_lines(m: &Morphism) -> String {
    let mut r = String::new();
    for (p, q) in m.part_map() {
        writeln!(r, "p {p} {q}").unwrap();
    }
    r
}

fn sniff_is_morphism(src: &str) -> bool {
    src.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .map(|l| {
            let head = l.split_whitespace().next().unwrap_or("");
            matches!(head, "p" | "dom" | "cod")
        })
        .unwrap_or(false)
}

fn fmt_report(fx: &FmtFactorization) -> (String, bool) {
    let mut r = String::new();
    writeln!(r, "category: {}", fx.category).unwrap();
    r.push_str(&counts_line("Rf", &fx.kernel_pair));
    r.push_str(&counts_line("I", &fx.coimage));
    r.push_str(&counts_line("I*", &fx.image));
    r.push_str(&counts_line("Rf*", &fx.cokernel_pair));
    let holds = check_fmt(fx).holds();
    if holds {
        writeln!(r, "h: isomorphism (holds)").unwrap();
    } else {
        writeln!(r, "h: NOT isomorphism (fails)").unwrap();
    }
    (r, holds)
}

fn write_fmt_dot(fx: &FmtFactorization, dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let objects: [(&str, &Graph); 8] = [
        ("a", fx.f.domain()),
        ("axa", fx.p0.domain()),
        ("rf", &fx.kernel_pair),
        ("i", &fx.coimage),
        ("b", fx.f.codomain()),
        ("b_plus_b", fx.i0.codomain()),
        ("rf_star", &fx.cokernel_pair),
        ("i_star", &fx.image),
    ];
    for (name, g) in objects {
        let path = dir.join(format!("{name}.dot"));
        fs::write(&path, to_dot(g)).map_err(|e| CliError::io(&path, e))?;
    }
    Ok(())
}

fn run(cmd: Cmd) -> Result<ExitCode, CliError> {
    match cmd {
        Cmd::Validate {
            file,
            cat,
            paths,
            out,
        } => {
            let src = read_file(&file)?;
            let mut r = String::new();
            writeln!(r, "file: {}", file.display()).unwrap();
            writeln!(r, "category: {}", cat.cat).unwrap();
            let ok = if sniff_is_morphism(&src) {
                let m = load_morphism(&file, &paths)?;
                writeln!(r, "kind: morphism").unwrap();
                let violations = m.violations(cat.cat);
                for v in &violations {
                    writeln!(r, "violation: {v}").unwrap();
                }
                violations.is_empty()
            } else {
                let g = parse_graph(&src).map_err(|e| CliError::Parse {
                    path: file.clone(),
                    line: e.line,
                    message: e.message,
                })?;
                writeln!(r, "kind: graph").unwrap();
                g.validate_in(cat.cat)
            };
            writeln!(r, "verdict: {}", if ok { "valid" } else { "invalid" }).unwrap();
            emit(&out, &r)?;
            Ok(exit_verdict(ok))
        }
        Cmd::Product { a, b, cat, out } => {
            let ga = load_graph(&a)?;
            let gb = load_graph(&b)?;
            let cone = product(&ga, &gb, cat.cat).map_err(|e| CliError::Input(e.to_string()))?;
            emit(&out, &cone_report(&cone, "product", cat.cat))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Coproduct { files, cat, out } => {
            let gs = files
                .iter()
                .map(|p| load_graph(p))
                .collect::<Result<Vec<_>, _>>()?;
            let cone = coproduct(&gs, cat.cat).map_err(|e| CliError::Input(e.to_string()))?;
            emit(&out, &cone_report(&cone, "coproduct", cat.cat))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Equalize { f, g, cat, out } => {
            let mf = load_morphism(&f, &MorphismPathArgs { dom: None, cod: None })?;
            let mg = load_morphism(&g, &MorphismPathArgs { dom: None, cod: None })?;
            let cone =
                equalizer(&mf, &mg, cat.cat).map_err(|e| CliError::Input(e.to_string()))?;
            emit(&out, &cone_report(&cone, "equalizer", cat.cat))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Coequalize { f, g, cat, out } => {
            let mf = load_morphism(&f, &MorphismPathArgs { dom: None, cod: None })?;
            let mg = load_morphism(&g, &MorphismPathArgs { dom: None, cod: None })?;
            let cone =
                coequalizer(&mf, &mg, cat.cat).map_err(|e| CliError::Input(e.to_string()))?;
            let mut r = cone_report(&cone, "coequalizer", cat.cat);
            r.push_str("map:\n");
            r.push_str(&morphism_lines(&cone.legs[0]));
            emit(&out, &r)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fmt {
            file,
            cat,
            paths,
            random,
            seed,
            max_parts,
            dot,
            out,
        } => match (file, random) {
            (Some(file), None) => {
                let m = load_morphism(&file, &paths)?;
                let fx =
                    fmt_factorize(&m, cat.cat).map_err(|e| CliError::Input(e.to_string()))?;
                let (r, holds) = fmt_report(&fx);
                if let Some(dir) = dot {
                    write_fmt_dot(&fx, &dir)?;
                }
                emit(&out, &r)?;
                Ok(exit_verdict(holds))
            }
            (None, Some(n)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut holds = 0usize;
                for _ in 0..n {
                    let m = random_morphism(&mut rng, cat.cat, max_parts);
                    let fx = fmt_factorize(&m, cat.cat)
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    if check_fmt(&fx).holds() {
                        holds += 1;
                    }
                }
                let mut r = String::new();
                writeln!(r, "category: {}", cat.cat).unwrap();
                writeln!(r, "random cases: {n} (seed={seed}, max parts={max_parts})").unwrap();
                writeln!(r, "holds: {holds}").unwrap();
                writeln!(r, "fails: {}", n - holds).unwrap();
                emit(&out, &r)?;
                Ok(exit_verdict(holds == n))
            }
            (Some(_), Some(_)) => Err(CliError::Input(
                "give either a morphism file or --random, not both".into(),
            )),
            (None, None) => Err(CliError::Input(
                "fmt needs a morphism file or --random <n>".into(),
            )),
        },
        Cmd::Deck {
            file,
            mode,
            cards,
            out,
        } => {
            let g = load_graph(&file)?;
            let deck = make_deck(&g, mode).map_err(|e| CliError::Input(e.to_string()))?;
            let mut r = String::new();
            writeln!(r, "mode: {mode}").unwrap();
            r.push_str(&counts_line("source", &deck.source));
            writeln!(r, "cards: {}", deck.cards.len()).unwrap();
            for (i, card) in deck.cards.iter().enumerate() {
                writeln!(
                    r,
                    "card {i}: deleted {} vertices={} edges={}",
                    card.deleted,
                    card.graph.vertex_count(),
                    card.graph.edge_count()
                )
                .unwrap();
            }
            for w in deck.hypothesis_warnings() {
                writeln!(r, "warning: {w}").unwrap();
            }
            if let Some(dir) = cards {
                fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
                for (i, card) in deck.cards.iter().enumerate() {
                    let path = dir.join(format!("card{i}.g"));
                    fs::write(&path, print_graph(&card.graph))
                        .map_err(|e| CliError::io(&path, e))?;
                }
            }
            emit(&out, &r)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Match { g, h, mode, out } => {
            let gg = load_graph(&g)?;
            let gh = load_graph(&h)?;
            let dg = make_deck(&gg, mode).map_err(|e| CliError::Input(e.to_string()))?;
            let dh = make_deck(&gh, mode).map_err(|e| CliError::Input(e.to_string()))?;
            let mut r = String::new();
            writeln!(r, "mode: {mode}").unwrap();
            writeln!(r, "cards: {} vs {}", dg.cards.len(), dh.cards.len()).unwrap();
            let matching = if dg.cards.len() == dh.cards.len() {
                match_decks(&dg, &dh).map_err(|e| CliError::Input(e.to_string()))?
            } else {
                None
            };
            let found = match &matching {
                Some(m) => {
                    writeln!(r, "matching: found").unwrap();
                    for (i, j) in m.sigma.iter().enumerate() {
                        writeln!(
                            r,
                            "card {i} ({}) -> card {j} ({})",
                            dg.cards[i].deleted, dh.cards[*j].deleted
                        )
                        .unwrap();
                    }
                    true
                }
                None => {
                    writeln!(r, "matching: absent").unwrap();
                    false
                }
            };
            emit(&out, &r)?;
            Ok(exit_verdict(found))
        }
        Cmd::Reconstruct { g, h, mode, out } => {
            let gg = load_graph(&g)?;
            let gh = load_graph(&h)?;
            let outcome = reconstruction_check(&gg, &gh, mode)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let mut r = String::new();
            writeln!(r, "mode: {mode}").unwrap();
            let found = match outcome {
                ReconstructionOutcome::DecksMismatch { reason } => {
                    writeln!(r, "decks: mismatched ({reason})").unwrap();
                    writeln!(r, "delta: absent").unwrap();
                    false
                }
                ReconstructionOutcome::HypothesisViolation { reason } => {
                    writeln!(r, "decks: matched").unwrap();
                    writeln!(r, "gamma: blocked ({reason})").unwrap();
                    writeln!(r, "delta: absent").unwrap();
                    false
                }
                ReconstructionOutcome::Case(case) => {
                    writeln!(r, "decks: matched").unwrap();
                    writeln!(
                        r,
                        "orientation: {}",
                        if case.swapped { "swapped" } else { "as given" }
                    )
                    .unwrap();
                    writeln!(
                        r,
                        "gamma: {} parts -> {} parts, epi",
                        case.coproduct.object.part_count(),
                        case.h.part_count()
                    )
                    .unwrap();
                    r.push_str(&counts_line("I", &case.fx.coimage));
                    writeln!(r, "I iso target: yes").unwrap();
                    match &case.delta {
                        Some(_) => {
                            writeln!(r, "delta: found").unwrap();
                            writeln!(r, "delta is epi: yes").unwrap();
                            writeln!(r, "delta equation: holds").unwrap();
                            true
                        }
                        None => {
                            writeln!(r, "delta: absent").unwrap();
                            false
                        }
                    }
                }
            };
            emit(&out, &r)?;
            Ok(exit_verdict(found))
        }
        Cmd::Sweep {
            mode,
            max_n,
            min_n,
            min_edges,
            rows,
            out,
        } => {
            let opts = SweepOptions {
                mode,
                n_min: min_n,
                n_max: max_n,
                min_edges,
            };
            let report = corpus_sweep(&opts).map_err(|e| CliError::Input(e.to_string()))?;
            let mut r = String::new();
            if rows {
                for row in &report.rows {
                    writeln!(
                        r,
                        "{},{},{},{},{},{:.3}",
                        row.n,
                        report.mode,
                        row.pairs_checked,
                        row.deck_equal_noniso,
                        row.delta_failures,
                        row.seconds
                    )
                    .unwrap();
                }
            } else {
                writeln!(r, "mode: {}", report.mode).unwrap();
                for row in &report.rows {
                    writeln!(
                        r,
                        "n={}: pairs={} deck_equal_noniso={} delta_failures={} gamma_blocked={}",
                        row.n,
                        row.pairs_checked,
                        row.deck_equal_noniso,
                        row.delta_failures,
                        row.gamma_blocked
                    )
                    .unwrap();
                }
                for line in &report.noniso_pairs {
                    writeln!(r, "noniso: {line}").unwrap();
                }
                for line in &report.violations {
                    writeln!(r, "violation: {line}").unwrap();
                }
                writeln!(
                    r,
                    "total: pairs={} noniso={} failures={}",
                    report.rows.iter().map(|x| x.pairs_checked).sum::<usize>(),
                    report.total_deck_equal_noniso(),
                    report.total_delta_failures()
                )
                .unwrap();
            }
            emit(&out, &r)?;
            Ok(exit_verdict(report.total_delta_failures() == 0))
        }
        Cmd::Dot { file, out } => {
            let g = load_graph(&file)?;
            emit(&out, &to_dot(&g))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_verdict(positive: bool) -> ExitCode {
    if positive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
