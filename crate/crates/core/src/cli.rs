//! The `ramseylab` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 resource cap, 3 finding.
//! Findings (a brute-force value off its closed form, an avoider outside
//! the family, a lemma counterexample) are described on stderr together
//! with the coloring that shows them.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use crate::arrowing::{arrows, avoid_check, enumerate_avoiders};
use crate::coloring::TwoColoring;
use crate::config::{SearchConfig, DEFAULT_MAX_EDGES, DEFAULT_MAX_TREE_ORDER, MAX_EDGES_ENV};
use crate::constructions::{
    build_critical, build_star_lower_bound, critical_blocks, family_membership, star_lower_bound_blocks,
    FamilyParams,
};
use crate::error::{Error, Result};
use crate::format::{emit_coloring, from_graph6, parse_coloring, to_graph6};
use crate::graph::{complete_host, star_deleted_host, SimpleGraph};
use crate::lemmas::{equitable_partition_seeded, hall_dichotomy, lemma35_check, tree_trichotomy, Lemma35Outcome};
use crate::ramsey::{
    ramsey_bruteforce, ramsey_formula, star_critical_bruteforce, star_critical_formula, sweep, Method,
};
use crate::report::{sweep_table, Format, Table};
use crate::tree::{enumerate_trees_capped, Tree};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_FINDING: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ramseylab",
    version,
    about = "Ramsey-critical colorings of trees versus disjoint cliques"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Worker threads (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
    /// Largest host edge count for exhaustive arrowing.
    #[arg(long, global = true, env = MAX_EDGES_ENV, default_value_t = DEFAULT_MAX_EDGES as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_edges: u64,
    /// Largest tree order to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TREE_ORDER as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_tree_order: u64,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report measured runtimes (otherwise runtime columns are 0).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Family {
    /// Tree order.
    #[arg(long)]
    pub n: usize,
    /// Clique order.
    #[arg(long)]
    pub m: usize,
    /// Number of disjoint cliques.
    #[arg(long)]
    pub t: usize,
}

impl Family {
    fn params(self) -> Result<FamilyParams> {
        FamilyParams::new(self.n, self.m, self.t)
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Target {
    /// Number of disjoint blue cliques.
    #[arg(long)]
    pub t: usize,
    /// Order of each blue clique.
    #[arg(long)]
    pub m: usize,
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("trees").required(true).args(["tree", "all_trees"])))]
pub struct TreeSelect {
    /// A tree: Pn, Sn or graph6.
    #[arg(long)]
    pub tree: Option<String>,
    /// Every tree of this order.
    #[arg(long)]
    pub all_trees: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a member of the critical family on (n-1)(m-1)+t-1 vertices.
    Construct {
        #[command(flatten)]
        family: Family,
        /// Red edges inside the last block: graph6 or "0-1,1-2".
        #[arg(long)]
        hm_red: Option<String>,
    },
    /// Build the star-deleted coloring that avoids (T, tK_m).
    StarLowerBound {
        #[command(flatten)]
        family: Family,
    },
    /// Decide whether a coloring belongs to the critical family.
    Membership {
        #[command(flatten)]
        family: Family,
        /// A .2col file, or - for stdin.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Look for a red tree and a blue tK_m in a coloring.
    AvoidCheck {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        tree: String,
        #[command(flatten)]
        target: Target,
    },
    /// Decide whether every coloring of a host contains a red tree or a blue tK_m.
    Arrows {
        /// Kn, star:N:k, graph6, or "N:0-1,1-2".
        #[arg(long)]
        host: String,
        #[arg(long)]
        tree: String,
        #[command(flatten)]
        target: Target,
    },
    /// List every avoiding coloring of the critical order up to isomorphism.
    EnumerateCritical {
        #[command(flatten)]
        family: Family,
        /// Restrict to one tree (default: all trees of order n).
        #[arg(long)]
        tree: Option<String>,
        /// Check each avoider against the family.
        #[arg(long)]
        check_family: bool,
    },
    /// Ramsey number r(T, tK_m).
    Ramsey {
        #[command(flatten)]
        trees: TreeSelect,
        #[command(flatten)]
        target: Target,
        /// Compute by exhaustive search instead of the closed form.
        #[arg(long)]
        brute: bool,
    },
    /// Star-critical number r*(T, tK_m).
    StarCritical {
        #[command(flatten)]
        trees: TreeSelect,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        brute: bool,
    },
    /// Brute-force r and r* for every tree of order n against the closed forms.
    Sweep {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        target: Target,
    },
    /// Equitable partition into l independent sets.
    Equitable {
        /// graph6 or "N:0-1,1-2".
        #[arg(long)]
        graph: String,
        #[arg(long)]
        l: usize,
    },
    /// Red matching saturating X or a blue biclique.
    Hall {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<usize>,
    },
    /// Suspended path, independent end-edges or a talon.
    Trichotomy {
        #[arg(long)]
        tree: String,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
    },
    /// Check the path-lengthening dichotomy on a colored K_{a+b}.
    Lemma35 {
        #[arg(long)]
        coloring: PathBuf,
        /// x_1..x_a in path order.
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<usize>,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        d: usize,
    },
    /// List the trees of order n up to isomorphism.
    Trees {
        #[arg(long)]
        n: usize,
    },
}

/// What a subcommand produced.
enum Body {
    /// An object (JSON) with its human rendering (text).
    Value { json: Value, text: String },
    Table(Table),
    /// Tables that print a bare value in text mode when they have one row.
    Scalar { table: Table, text: String },
}

struct Outcome {
    body: Body,
    findings: Vec<String>,
}

impl Outcome {
    fn value(json: Value, text: String) -> Outcome {
        Outcome {
            body: Body::Value { json, text },
            findings: Vec::new(),
        }
    }

    fn table(table: Table) -> Outcome {
        Outcome {
            body: Body::Table(table),
            findings: Vec::new(),
        }
    }
}

/// Parses `args` (program name first) and runs the command, writing the
/// result to stdout or `--out` and findings to stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(cli, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.global.workers {
        Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Parameter(format!("cannot start {w} workers: {e}"))),
        },
        None => dispatch(&cli),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let rendered = match render(&outcome.body, cli.global.format.into()) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => out.write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    for f in &outcome.findings {
        let _ = writeln!(err, "finding: {f}");
    }
    if outcome.findings.is_empty() {
        EXIT_OK
    } else {
        EXIT_FINDING
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceGuard { .. } => EXIT_RESOURCE,
        Error::Counterexample(_) => EXIT_FINDING,
        _ => EXIT_USAGE,
    }
}

fn render(body: &Body, format: Format) -> Result<String> {
    Ok(match (body, format) {
        (Body::Value { json, .. }, Format::Json) => {
            format!("{}\n", serde_json::to_string_pretty(json).expect("json"))
        }
        (Body::Value { text, .. }, Format::Text) => text.clone(),
        (Body::Value { .. }, Format::Csv) => {
            return Err(Error::param("csv output is only available for tabular commands"))
        }
        (Body::Table(table), f) => table.render(f),
        (Body::Scalar { table, text }, Format::Text) if table.len() == 1 => text.clone(),
        (Body::Scalar { table, .. }, f) => table.render(f),
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let cfg = SearchConfig::default()
        .with_max_edges(g.max_edges as usize)
        .with_max_tree_order(g.max_tree_order as usize);
    match &cli.command {
        Command::Construct { family, hm_red } => {
            let p = family.params()?;
            let hm = match hm_red {
                Some(s) => parse_graph(s, Some(p.t - 1))?,
                None => SimpleGraph::new(p.t - 1),
            };
            let c = build_critical(p, &hm)?;
            Ok(coloring_outcome(p, &c, critical_blocks(p), None))
        }
        Command::StarLowerBound { family } => {
            let p = family.params()?;
            let c = build_star_lower_bound(p)?;
            Ok(coloring_outcome(p, &c, star_lower_bound_blocks(p), Some(p.star_degree())))
        }
        Command::Membership { family, coloring } => {
            let p = family.params()?;
            let c = read_coloring(coloring)?;
            let w = family_membership(&c, p)?;
            let text = match &w {
                Some(w) => format!("member\n{}", blocks_text(&w.blocks)),
                None => "not a member\n".to_string(),
            };
            Ok(Outcome::value(
                json!({ "member": w.is_some(), "witness": w.map(|w| w.blocks) }),
                text,
            ))
        }
        Command::AvoidCheck { coloring, tree, target } => {
            let c = read_coloring(coloring)?;
            let tree = parse_tree(tree)?;
            let r = avoid_check(&c, &tree, target.t, target.m);
            let mut text = String::from(if r.avoids { "avoids\n" } else { "does not avoid\n" });
            if let Some(w) = &r.red_witness {
                let _ = writeln!(text, "red tree: {}", join(&w.map));
            }
            if let Some(w) = &r.blue_witness {
                let _ = writeln!(text, "blue packing:\n{}", blocks_text(&w.cliques).trim_end());
            }
            Ok(Outcome::value(to_json(&r), text))
        }
        Command::Arrows { host, tree, target } => {
            let host = parse_host(host)?;
            let tree = parse_tree(tree)?;
            let out = arrows(&host, &tree, target.t, target.m, &cfg)?;
            let text = match &out.avoider {
                None => "arrows\n".to_string(),
                Some(c) => format!("does not arrow; avoider:\n{}", emit_coloring(c)),
            };
            Ok(Outcome::value(
                json!({ "arrows": out.arrows, "avoider": out.avoider }),
                text,
            ))
        }
        Command::EnumerateCritical {
            family,
            tree,
            check_family,
        } => enumerate_critical(family.params()?, tree.as_deref(), *check_family, &cfg),
        Command::Ramsey { trees, target, brute } => ramsey_cmd(trees, *target, *brute, false, &cfg),
        Command::StarCritical { trees, target, brute } => ramsey_cmd(trees, *target, *brute, true, &cfg),
        Command::Sweep { n, target } => {
            let records = sweep(*n, target.t, target.m, &cfg)?;
            let rows: Vec<_> = records.iter().map(|r| r.row.clone()).collect();
            let mut findings = Vec::new();
            for rec in &records {
                let row = &rec.row;
                if !row.agree_r {
                    findings.push(disagreement(
                        "r",
                        &row.tree_g6,
                        row.r_brute,
                        Some(row.r_formula),
                        rec.ramsey.witness_lower.as_ref(),
                    ));
                }
                if row.agree_rstar == Some(false) {
                    findings.push(disagreement(
                        "r*",
                        &row.tree_g6,
                        row.rstar_brute,
                        row.rstar_formula,
                        rec.star_critical.witness_lower.as_ref(),
                    ));
                }
            }
            Ok(Outcome {
                body: Body::Table(sweep_table(&rows, g.timing)),
                findings,
            })
        }
        Command::Equitable { graph, l } => {
            let graph = parse_graph(graph, None)?;
            let w = equitable_partition_seeded(&graph, *l, g.seed)?;
            let sizes: Vec<usize> = w.blocks.iter().map(Vec::len).collect();
            Ok(Outcome::value(
                json!({ "l": l, "sizes": sizes, "witness": w.blocks }),
                blocks_text(&w.blocks),
            ))
        }
        Command::Hall { coloring, x, y } => {
            let c = read_coloring(coloring)?;
            let out = hall_dichotomy(&c, x, y)?;
            let json = to_json(&out);
            let text = format!("{}\n{}\n", json["kind"].as_str().unwrap_or_default(), json["witness"]);
            Ok(Outcome::value(json, text))
        }
        Command::Trichotomy { tree, alpha, beta } => {
            let tree = parse_tree(tree)?;
            let r = tree_trichotomy(&tree, *alpha, *beta)?;
            let json = to_json(&r);
            let mut text = format!("{}\n{}\n", json["kind"].as_str().unwrap_or_default(), json["witness"]);
            if r.vacuous {
                text.push_str("vacuous: the talon bound is 0\n");
            }
            Ok(Outcome::value(json, text))
        }
        Command::Lemma35 { coloring, x, y, c, d } => {
            let col = read_coloring(coloring)?;
            let r = lemma35_check(&col, x, y, *c, *d)?;
            let json = to_json(&r);
            let text = format!("{}\n{}\n", json["kind"].as_str().unwrap_or_default(), json["witness"]);
            let findings = match &r.outcome {
                Lemma35Outcome::Counterexample(_) => vec![format!(
                    "neither conclusion holds for this input:\n{}",
                    emit_coloring(&col)
                )],
                _ => Vec::new(),
            };
            Ok(Outcome {
                body: Body::Value { json, text },
                findings,
            })
        }
        Command::Trees { n } => {
            #[derive(Serialize)]
            struct Row {
                index: usize,
                graph6: String,
                shorthand: Option<String>,
                edges: String,
            }
            let rows: Vec<Row> = enumerate_trees_capped(*n, cfg.max_tree_order)?
                .iter()
                .enumerate()
                .map(|(index, t)| Row {
                    index,
                    graph6: to_graph6(t.graph()),
                    shorthand: t.shorthand(),
                    edges: edges_text(t.edges()),
                })
                .collect();
            Ok(Outcome::table(Table::from_rows(
                &["index", "graph6", "shorthand", "edges"],
                &rows,
            )))
        }
    }
}

fn coloring_outcome(p: FamilyParams, c: &TwoColoring, blocks: Vec<Vec<usize>>, k: Option<usize>) -> Outcome {
    let mut json = json!({
        "n": p.n,
        "m": p.m,
        "t": p.t,
        "order": c.order(),
        "blocks": blocks,
        "coloring": c,
    });
    if let Some(k) = k {
        json["k"] = json!(k);
    }
    Outcome::value(json, emit_coloring(c))
}

fn enumerate_critical(p: FamilyParams, tree: Option<&str>, check: bool, cfg: &SearchConfig) -> Result<Outcome> {
    #[derive(Serialize)]
    struct Row {
        tree_g6: String,
        index: usize,
        red_edges: String,
        in_family: Option<bool>,
    }
    let trees = match tree {
        Some(s) => {
            let t = parse_tree(s)?;
            if t.order() != p.n {
                return Err(Error::param(format!("tree has {} vertices, expected {}", t.order(), p.n)));
            }
            vec![t]
        }
        None => enumerate_trees_capped(p.n, cfg.max_tree_order)?,
    };
    let host = complete_host(p.critical_order());
    let mut rows = Vec::new();
    let mut findings = Vec::new();
    for tree in &trees {
        let g6 = to_graph6(tree.graph());
        for (index, c) in enumerate_avoiders(&host, tree, p.t, p.m, cfg)?.into_iter().enumerate() {
            let in_family = if check {
                Some(family_membership(&c, p)?.is_some())
            } else {
                None
            };
            if in_family == Some(false) {
                findings.push(format!(
                    "avoider {index} for tree {g6} is not in the family:\n{}",
                    emit_coloring(&c)
                ));
            }
            rows.push(Row {
                tree_g6: g6.clone(),
                index,
                red_edges: edges_text(c.red_edges()),
                in_family,
            });
        }
    }
    Ok(Outcome {
        body: Body::Table(Table::from_rows(&["tree_g6", "index", "red_edges", "in_family"], &rows)),
        findings,
    })
}

fn ramsey_cmd(sel: &TreeSelect, target: Target, brute: bool, star: bool, cfg: &SearchConfig) -> Result<Outcome> {
    #[derive(Serialize)]
    struct Row {
        tree_g6: String,
        n: usize,
        m: usize,
        t: usize,
        method: Method,
        value: usize,
        formula: Option<usize>,
        asymptotic: Option<bool>,
        agree: Option<bool>,
    }
    let trees = select_trees(sel, cfg)?;
    let what = if star { "r*" } else { "r" };
    let mut rows = Vec::new();
    let mut findings = Vec::new();
    for tree in &trees {
        let p = FamilyParams::new(tree.order(), target.m, target.t)?;
        let formula = if star {
            star_critical_formula(p)
        } else {
            Ok(ramsey_formula(p))
        };
        let g6 = to_graph6(tree.graph());
        let (method, value, agree) = if brute {
            let res = if star {
                star_critical_bruteforce(tree, p.t, p.m, None, cfg)?
            } else {
                ramsey_bruteforce(tree, p.t, p.m, cfg)?
            };
            let f = formula.as_ref().ok().map(|f| f.value);
            let agree = f.map(|f| f == res.value);
            if agree == Some(false) {
                findings.push(disagreement(what, &g6, res.value, f, res.witness_lower.as_ref()));
            }
            (Method::BruteForce, res.value, agree)
        } else {
            (Method::Formula, formula.clone()?.value, None)
        };
        rows.push(Row {
            tree_g6: g6,
            n: p.n,
            m: p.m,
            t: p.t,
            method,
            value,
            formula: formula.as_ref().ok().map(|f| f.value),
            asymptotic: formula.as_ref().ok().map(|f| f.asymptotic),
            agree,
        });
    }
    let text = rows.first().map(|r| format!("{}\n", r.value)).unwrap_or_default();
    let table = Table::from_rows(
        &["tree_g6", "n", "m", "t", "method", "value", "formula", "asymptotic", "agree"],
        &rows,
    );
    Ok(Outcome {
        body: Body::Scalar { table, text },
        findings,
    })
}

fn disagreement(what: &str, g6: &str, brute: usize, formula: Option<usize>, avoider: Option<&TwoColoring>) -> String {
    let mut s = format!(
        "tree {g6}: brute-force {what} = {brute}, closed form = {}",
        formula.map_or("undefined".to_string(), |f| f.to_string())
    );
    if let Some(c) = avoider {
        let _ = write!(s, "\navoider on the largest non-arrowing host:\n{}", emit_coloring(c));
    }
    s
}

fn select_trees(sel: &TreeSelect, cfg: &SearchConfig) -> Result<Vec<Tree>> {
    match (&sel.tree, sel.all_trees) {
        (Some(s), _) => Ok(vec![parse_tree(s)?]),
        (None, Some(n)) => enumerate_trees_capped(n, cfg.max_tree_order),
        (None, None) => Err(Error::param("give --tree or --all-trees")),
    }
}

/// `Pn`, `Sn` or graph6.
pub fn parse_tree(s: &str) -> Result<Tree> {
    let s = s.trim();
    for (prefix, build) in [('P', Tree::path as fn(usize) -> Result<Tree>), ('S', Tree::star)] {
        if let Some(rest) = s.strip_prefix(prefix) {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                let n = rest.parse().map_err(|_| Error::param(format!("bad tree order in {s:?}")))?;
                return build(n);
            }
        }
    }
    Tree::new(from_graph6(s)?)
}

/// graph6, or an edge list `N:0-1,1-2` (the `N:` prefix may be dropped
/// when `order` is known).
pub fn parse_graph(s: &str, order: Option<usize>) -> Result<SimpleGraph> {
    let s = s.trim();
    let looks_listed = s.is_empty() || s.contains(['-', ':']);
    if !looks_listed {
        let g = from_graph6(s)?;
        if let Some(n) = order.filter(|&n| n != g.order()) {
            return Err(Error::param(format!("graph has {} vertices, expected {n}", g.order())));
        }
        return Ok(g);
    }
    let (n, list) = match s.split_once(':') {
        Some((n, list)) => (
            n.trim().parse::<usize>().map_err(|_| Error::param(format!("bad vertex count {n:?}")))?,
            list,
        ),
        None => (order.ok_or_else(|| Error::param("edge list needs an N: prefix"))?, s),
    };
    if let Some(o) = order.filter(|&o| o != n) {
        return Err(Error::param(format!("graph has {n} vertices, expected {o}")));
    }
    let mut edges = Vec::new();
    for item in list.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (u, v) = item
            .split_once('-')
            .ok_or_else(|| Error::param(format!("bad edge {item:?}")))?;
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| Error::param(format!("bad edge {item:?}")));
        edges.push((parse(u)?, parse(v)?));
    }
    SimpleGraph::from_edges(n, edges)
}

/// `Kn`, `star:N:k`, or anything [`parse_graph`] accepts.
pub fn parse_host(s: &str) -> Result<SimpleGraph> {
    let s = s.trim();
    if let Some(n) = s.strip_prefix('K').and_then(|r| r.parse::<usize>().ok()) {
        return Ok(complete_host(n));
    }
    if let Some(rest) = s.strip_prefix("star:") {
        let (n, k) = rest
            .split_once(':')
            .and_then(|(n, k)| Some((n.parse().ok()?, k.parse().ok()?)))
            .ok_or_else(|| Error::param(format!("expected star:N:k, got {s:?}")))?;
        return star_deleted_host(n, k);
    }
    parse_graph(s, None)
}

fn read_coloring(path: &PathBuf) -> Result<TwoColoring> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Error::param(format!("cannot read {}: {e}", path.display())))?;
    parse_coloring(&text)
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("outputs serialize")
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn blocks_text(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .enumerate()
        .map(|(i, b)| format!("{}: {}\n", i + 1, join(b)))
        .collect()
}

fn edges_text(edges: impl Iterator<Item = (usize, usize)>) -> String {
    edges.map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("ramseylab").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tree_and_graph_arguments() {
        assert_eq!(parse_tree("P4").unwrap().order(), 4);
        assert_eq!(parse_tree("S5").unwrap().degree(0), 4);
        assert!(parse_tree("Ch").unwrap().is_isomorphic(&Tree::path(4).unwrap()));
        assert!(parse_tree("C~").is_err());
        assert_eq!(parse_graph("3:0-1,1-2", None).unwrap().edge_count(), 2);
        assert_eq!(parse_graph("0-1", Some(2)).unwrap().edge_count(), 1);
        assert_eq!(parse_graph("", Some(0)).unwrap().order(), 0);
        assert!(parse_graph("0-1", None).is_err());
        assert_eq!(parse_host("K5").unwrap().edge_count(), 10);
        assert_eq!(parse_host("star:4:1").unwrap().edge_count(), 4);
    }

    #[test]
    fn ramsey_prints_value() {
        let (code, out, _) = run_args(&["ramsey", "--tree", "P3", "--t", "2", "--m", "2", "--brute"]);
        assert_eq!((code, out.as_str()), (0, "4\n"));
    }

    #[test]
    fn disagreement_is_a_finding() {
        let (code, out, err) = run_args(&["ramsey", "--tree", "P2", "--t", "2", "--m", "2", "--brute"]);
        assert_eq!(code, EXIT_FINDING);
        assert_eq!(out, "4\n");
        assert!(err.contains("closed form = 3") && err.contains("n=3"));
    }

    #[test]
    fn csv_only_for_tables() {
        let (code, _, err) = run_args(&["--format", "csv", "construct", "--n", "3", "--m", "2", "--t", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("csv"));
    }

    #[test]
    fn resource_cap_exit() {
        let (code, _, err) = run_args(&["--max-edges", "5", "arrows", "--host", "K5", "--tree", "P3", "--t", "1", "--m", "3"]);
        assert_eq!(code, EXIT_RESOURCE);
        assert!(err.contains("cap is 5"));
    }
}
