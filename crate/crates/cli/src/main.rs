//! Command-line front end: parse a Coxeter graph and a word, run the braid
//! class analyses, and print text, JSON, or DOT.
//!
//! Exit codes: 0 success, 2 the input word is not reduced, 3 an enumeration
//! cap was exceeded, 4 the graph is not triangle free (and `--unchecked` was
//! not given), 1 anything else.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use braidcube::{
    braid_graph, commutation_class, embed_word, enumerate_braid_class, enumerate_matsumoto,
    fibonacci_form, image_is_fibonacci, is_fibonacci_link, is_link, is_median_graph,
    isometric_dimension, link_factorization, star_criterion, theta_classes, type_a_string,
    verify_box_product, verify_isometric, CoxeterGraph, Epsilon, Error, StringSpec, Word,
};

#[derive(Parser)]
#[command(
    name = "braidcube",
    about = "Braid classes, link factorizations, and hypercube embeddings in simply-laced Coxeter systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum SeedOrder {
    /// Canonical lexicographic member order.
    Lex,
    /// Breadth-first discovery order from the input word.
    Bfs,
}

#[derive(Args)]
struct Common {
    /// Graph source: a file in the graph text format, or `family:<F>:<n>`
    /// with F one of A, D, A~, D~.
    #[arg(long)]
    graph: String,

    /// The word, as whitespace- or comma-separated generator indices.
    #[arg(long)]
    word: String,

    /// Cap on closure enumeration.
    #[arg(long, default_value_t = braidcube::DEFAULT_CAP)]
    cap: usize,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Allow graphs with three-cycles where an operation would refuse them.
    #[arg(long)]
    unchecked: bool,

    /// Member listing order.
    #[arg(long, value_enum, default_value_t = SeedOrder::Lex)]
    seed_order: SeedOrder,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the braid class of a word and print members, shadows, rank,
    /// and the braid graph.
    Class(Common),
    /// Print the link factorization and the box-product report.
    Factorize(Common),
    /// Label the braid class and verify the isometric embedding into the
    /// hypercube.
    Embed(Common),
    /// Fibonacci-link analysis: rank, class size, canonical form, star
    /// criterion, and the Fibonacci-cube check.
    Fibonacci(Common),
    /// Enumerate all reduced expressions of the element with typed edges.
    Matsumoto(Common),
    /// Print a type-A string from its parameters.
    String(StringArgs),
    /// Djokovic-Winkler edge classes of the braid graph.
    Theta(Common),
    /// Brute-force median-graph test of the braid graph.
    Median(Common),
}

#[derive(Args)]
struct StringArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    m: usize,
    /// One of `+`, `-`, `0`.
    #[arg(long, allow_hyphen_values = true)]
    eps: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn load_graph(source: &str) -> Result<CoxeterGraph, Error> {
    if let Some(rest) = source.strip_prefix("family:") {
        let mut parts = rest.split(':');
        let family = parts
            .next()
            .ok_or_else(|| Error::Parse("family spec needs a family name".into()))?
            .parse()?;
        let rank: usize = parts
            .next()
            .ok_or_else(|| Error::Parse("family spec needs a rank".into()))?
            .parse()
            .map_err(|_| Error::Parse("family rank must be an integer".into()))?;
        if parts.next().is_some() {
            return Err(Error::Parse("family spec has trailing fields".into()));
        }
        CoxeterGraph::standard_family(family, rank)
    } else {
        let text = std::fs::read_to_string(source)
            .map_err(|e| Error::Parse(format!("cannot read {source}: {e}")))?;
        CoxeterGraph::from_text(&text)
    }
}

fn parse_inputs(common: &Common) -> Result<(CoxeterGraph, Word), Error> {
    let graph = load_graph(&common.graph)?;
    let word = Word::parse(&common.word)?;
    Ok((graph, word))
}

fn cmd_class(common: &Common) -> Result<(), Error> {
    let (graph, word) = parse_inputs(common)?;
    let class = enumerate_braid_class(&graph, &word, common.cap)?;
    match common.format {
        Format::Json => println!("{}", class.to_json()),
        Format::Dot => print!("{}", class.to_dot()),
        Format::Text => {
            println!("word: {word}");
            println!("members ({}):", class.len());
            match common.seed_order {
                SeedOrder::Lex => {
                    for member in class.members() {
                        println!("  {member}");
                    }
                }
                SeedOrder::Bfs => {
                    for member in class.members_in_discovery_order() {
                        println!("  {member}");
                    }
                }
            }
            let shadows: Vec<String> = class.shadows().iter().map(|s| s.to_string()).collect();
            println!("shadows: {}", shadows.join(" "));
            println!("rank: {}", class.rank());
            println!("edges ({}):", class.edges().len());
            for e in class.edges() {
                println!(
                    "  {} -- {}  (shadow {})",
                    class.members()[e.a],
                    class.members()[e.b],
                    e.shadow_lo
                );
            }
        }
    }
    Ok(())
}

fn cmd_factorize(common: &Common) -> Result<(), Error> {
    let (graph, word) = parse_inputs(common)?;
    let factorization = link_factorization(&graph, &word, common.cap)?;
    let report = verify_box_product(&graph, &word, common.cap)?;
    match common.format {
        Format::Json | Format::Dot => {
            let value = json!({
                "factors": factorization.factors.iter().map(|f| json!({
                    "span": [f.span.lo(), f.span.hi()],
                    "word": f.word.letters().iter().map(|g| g.index()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "box_product": report.to_json(),
            });
            println!("{value}");
        }
        Format::Text => {
            println!("{factorization}");
            println!(
                "class size: {} = {}",
                report.class_size,
                report
                    .factor_sizes
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" * ")
            );
            println!(
                "rank: {} = {}",
                report.rank,
                report
                    .factor_ranks
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(" + ")
            );
            println!("box product verified: {}", report.pass());
            if let Some(reason) = &report.failure {
                println!("failure: {reason}");
            }
        }
    }
    Ok(())
}

fn cmd_embed(common: &Common) -> Result<(), Error> {
    let (graph, word) = parse_inputs(common)?;
    let labeling = embed_word(&graph, &word, common.cap, common.unchecked)?;
    let bg = braid_graph(&labeling.class);
    let isometry = verify_isometric(&bg, &labeling.labels);
    match common.format {
        Format::Dot => print!("{}", labeling.to_dot()),
        Format::Json => {
            let isometric = isometry.as_ref().map(|r| r.isometric).unwrap_or(false);
            let theta = theta_classes(&bg)?;
            println!("{}", labeling.to_json(Some(isometric), Some(&theta)));
        }
        Format::Text => {
            println!("word: {word}");
            println!("rank: {}", labeling.class.rank());
            println!("labels ({}):", labeling.class.len());
            for (member, label) in labeling.class.members().iter().zip(&labeling.labels) {
                println!("  {member} -> {label}");
            }
            match isometry {
                Ok(report) => {
                    println!("isometric: {}", report.isometric);
                    for v in report.violations.iter().take(5) {
                        println!(
                            "  violation: {} vs {} (graph {}, hamming {})",
                            labeling.class.members()[v.a],
                            labeling.class.members()[v.b],
                            v.graph_distance,
                            v.hamming_distance
                        );
                    }
                }
                Err(Error::LabelCollision(a, b)) => {
                    println!("isometric: false (label collision between {} and {})",
                        labeling.class.members()[a], labeling.class.members()[b]);
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

fn cmd_fibonacci(common: &Common) -> Result<(), Error> {
    let (graph, word) = parse_inputs(common)?;
    let link = is_link(&graph, &word, common.cap)?;
    let fibonacci = is_fibonacci_link(&graph, &word, common.cap)?;
    let class = enumerate_braid_class(&graph, &word, common.cap)?;
    let rank = class.rank();
    let star = if link && graph.is_triangle_free() {
        Some(star_criterion(&graph, &word, common.cap)?)
    } else {
        None
    };
    let mut form = None;
    let mut cube = None;
    if fibonacci {
        let (s, ts) = fibonacci_form(&graph, &word, common.cap)?;
        form = Some((s, ts));
        cube = Some(image_is_fibonacci(&class, &word)?);
    }
    let fib_number = fibonacci_number(rank + 2);
    match common.format {
        Format::Json | Format::Dot => {
            let value = json!({
                "word": word.letters().iter().map(|g| g.index()).collect::<Vec<_>>(),
                "is_link": link,
                "rank": rank,
                "class_size": class.len(),
                "fibonacci": fibonacci,
                "expected_fibonacci_chain_size": fib_number,
                "form": form.as_ref().map(|(s, ts)| json!({
                    "s": s.index(),
                    "ts": ts.iter().map(|t| t.index()).collect::<Vec<_>>(),
                })),
                "fibonacci_cube": cube,
                "star_criterion": star,
            });
            println!("{value}");
        }
        Format::Text => {
            println!("word: {word}");
            println!("is_link: {link}");
            println!("rank: {rank}");
            println!("class size: {}", class.len());
            println!("fibonacci: {fibonacci}");
            if let Some((s, ts)) = form {
                let ts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
                println!("form: s={} ts=[{}]", s, ts.join(","));
                println!("expected chain size F_{}: {}", rank + 2, fib_number);
            }
            if let Some(flag) = cube {
                println!("fibonacci_cube: {flag}");
            }
            match star {
                Some(flag) => println!("star_criterion: {flag}"),
                None => println!("star_criterion: n/a"),
            }
        }
    }
    Ok(())
}

fn cmd_matsumoto(common: &Common) -> Result<(), Error> {
    let (graph, word) = parse_inputs(common)?;
    let matsumoto = enumerate_matsumoto(&graph, &word, common.cap)?;
    match common.format {
        Format::Json => println!("{}", matsumoto.to_json()),
        Format::Dot => print!("{}", matsumoto.to_dot()),
        Format::Text => {
            println!("word: {word}");
            println!("reduced expressions: {}", matsumoto.len());
            let braid = matsumoto
                .edges()
                .iter()
                .filter(|e| e.kind == braidcube::MoveKind::Braid)
                .count();
            println!(
                "edges: {} ({} braid, {} commutation)",
                matsumoto.edges().len(),
                braid,
                matsumoto.edges().len() - braid
            );
            let mut braid_sizes: Vec<usize> = matsumoto
                .braid_components()
                .iter()
                .map(|c| c.len())
                .collect();
            braid_sizes.sort_unstable_by(|a, b| b.cmp(a));
            println!(
                "braid classes: {} with sizes [{}]",
                braid_sizes.len(),
                braid_sizes
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let mut commutation_sizes: Vec<usize> = matsumoto
                .commutation_components()
                .iter()
                .map(|c| c.len())
                .collect();
            commutation_sizes.sort_unstable_by(|a, b| b.cmp(a));
            println!(
                "commutation classes: {} with sizes [{}]",
                commutation_sizes.len(),
                commutation_sizes
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let example = commutation_class(&graph, &word, common.cap)?;
            println!("commutation class of the word: {} members", example.len());
        }
    }
    Ok(())
}

fn cmd_string(args: &StringArgs) -> Result<(), Error> {
    let spec = StringSpec {
        l: args.l,
        k: args.k,
        m: args.m,
        eps: args.eps.parse::<Epsilon>()?,
    };
    let word = type_a_string(&spec)?;
    match args.format {
        Format::Text => println!("{word}"),
        Format::Json | Format::Dot => {
            let value = json!({
                "l": spec.l,
                "k": spec.k,
                "m": spec.m,
                "eps": spec.eps.to_string(),
                "word": word.letters().iter().map(|g| g.index()).collect::<Vec<_>>(),
                "min_ambient_rank": spec.min_ambient_rank(),
            });
            println!("{value}");
        }
    }
    Ok(())
}

fn cmd_theta(common: &Common) -> Result<(), Error> {
    let (graph, word) = parse_inputs(common)?;
    let class = enumerate_braid_class(&graph, &word, common.cap)?;
    let bg = braid_graph(&class);
    let classes = theta_classes(&bg)?;

    // Compare against the grouping of edges by shadow position.
    let mut by_shadow: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for e in class.edges() {
        by_shadow.entry(e.shadow_lo).or_default().push((e.a, e.b));
    }
    let theta_sets: std::collections::BTreeSet<Vec<(usize, usize)>> =
        classes.iter().cloned().collect();
    let shadow_sets: std::collections::BTreeSet<Vec<(usize, usize)>> =
        by_shadow.into_values().collect();
    let aligned = theta_sets == shadow_sets;
    let dimension = isometric_dimension(&bg);

    match common.format {
        Format::Json | Format::Dot => {
            let value = json!({
                "theta_class_count": classes.len(),
                "isometric_dimension": dimension.as_ref().ok(),
                "theta_classes": classes.iter().map(|c| c.iter().map(|&(a, b)| json!([
                    class.members()[a].to_string(),
                    class.members()[b].to_string(),
                ])).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "aligned_with_shadows": aligned,
            });
            println!("{value}");
        }
        Format::Text => {
            println!("word: {word}");
            println!("theta classes: {}", classes.len());
            for (i, edges) in classes.iter().enumerate() {
                let rendered: Vec<String> = edges
                    .iter()
                    .map(|&(a, b)| format!("{}--{}", class.members()[a], class.members()[b]))
                    .collect();
                println!("  class {}: {}", i + 1, rendered.join(" "));
            }
            println!("aligned with shadow groups: {aligned}");
            match dimension {
                Ok(dim) => println!("isometric dimension: {dim}"),
                Err(e) => println!("isometric dimension: n/a ({e})"),
            }
        }
    }
    Ok(())
}

fn cmd_median(common: &Common) -> Result<(), Error> {
    let (graph, word) = parse_inputs(common)?;
    let class = enumerate_braid_class(&graph, &word, common.cap)?;
    let bg = braid_graph(&class);
    let median = is_median_graph(&bg)?;
    match common.format {
        Format::Json | Format::Dot => {
            println!(
                "{}",
                json!({ "vertices": bg.vertex_count(), "median": median })
            );
        }
        Format::Text => {
            println!("word: {word}");
            println!("vertices: {}", bg.vertex_count());
            println!("median: {median}");
        }
    }
    Ok(())
}

// Fibonacci numbers with F_1 = F_2 = 1.
fn fibonacci_number(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 2..n {
        let next = a + b;
        a = b;
        b = next;
    }
    if n <= 2 {
        1
    } else {
        b
    }
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Class(common) => cmd_class(common),
        Command::Factorize(common) => cmd_factorize(common),
        Command::Embed(common) => cmd_embed(common),
        Command::Fibonacci(common) => cmd_fibonacci(common),
        Command::Matsumoto(common) => cmd_matsumoto(common),
        Command::String(args) => cmd_string(args),
        Command::Theta(common) => cmd_theta(common),
        Command::Median(common) => cmd_median(common),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::NotReduced => 2,
                Error::CapExceeded { .. } => 3,
                Error::NotTriangleFree => 4,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
