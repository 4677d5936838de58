//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 verification failed, 3 the
//! oracle refused an instance as too large.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::augment::{lower_bound, tri_augment_with, AugmentOptions, AugmentationResult};
use crate::connectivity::is_k_connected;
use crate::error::Error;
use crate::gen::{generate, Shape, TreeGenSpec};
use crate::graph::{graph_from_edges, Graph};
use crate::oracle::min_augmentation_bruteforce;
use crate::tree::{validate_tree, Tree};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// An edge list with string labels mapped onto ids `0..n`.
///
/// Ids follow label order: numeric order when every label is an unsigned
/// integer, string order otherwise. Edge lists written by `gen` therefore
/// map back onto the ids they were generated with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    labels: Vec<String>,
    ids: BTreeMap<String, usize>,
    edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: expected two labels, found {found}")]
    Arity { line: usize, found: usize },
}

impl EdgeListDocument {
    /// One edge per line as two whitespace-separated labels. `#` starts a
    /// comment and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                [] => {}
                [a, b] => edges.push((a.to_string(), b.to_string())),
                _ => {
                    return Err(ParseError::Arity {
                        line: idx + 1,
                        found: fields.len(),
                    })
                }
            }
        }
        let mut labels: Vec<String> = edges
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        labels.sort();
        labels.dedup();
        let numeric: Option<Vec<u64>> = labels.iter().map(|l| l.parse().ok()).collect();
        if let Some(values) = numeric {
            let mut keyed: Vec<_> = values.into_iter().zip(labels).collect();
            keyed.sort();
            labels = keyed.into_iter().map(|(_, l)| l).collect();
        }
        let ids = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(EdgeListDocument { labels, ids, edges })
    }

    pub fn from_graph(g: &Graph) -> Self {
        let labels: Vec<String> = (0..g.n()).map(|v| v.to_string()).collect();
        let ids = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let edges = g
            .edges()
            .map(|(u, v)| (labels[u].clone(), labels[v].clone()))
            .collect();
        EdgeListDocument { labels, ids, edges }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.ids.get(label).copied()
    }

    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    pub fn to_graph(&self) -> crate::Result<Graph> {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|(a, b)| (self.ids[a], self.ids[b]))
            .collect();
        graph_from_edges(self.n(), &edges)
    }

    /// The edge list text, one `u v` line per edge in input order.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        for (a, b) in &self.edges {
            writeln!(out, "{a} {b}").unwrap();
        }
        out
    }

    /// Orients each edge by id and sorts, for stable output.
    pub fn sorted_labeled(&self, edges: &[(usize, usize)]) -> Vec<(String, String)> {
        let mut by_id: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        by_id.sort_unstable();
        by_id
            .into_iter()
            .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect()
    }
}

fn quote(label: &str) -> String {
    let mut s = String::with_capacity(label.len() + 2);
    s.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            s.push('\\');
        }
        s.push(c);
    }
    s.push('"');
    s
}

/// DOT rendering of `T + E_ca`: every vertex, the tree edges, then the added
/// edges with `style=dashed`. Both edge groups are sorted by id.
pub fn render_dot(doc: &EdgeListDocument, t: &Tree, added: &[(usize, usize)]) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..t.n() {
        writeln!(out, "  {};", quote(doc.label(v))).unwrap();
    }
    let tree_edges: Vec<_> = t.graph().edges().collect();
    for (a, b) in doc.sorted_labeled(&tree_edges) {
        writeln!(out, "  {} -- {};", quote(&a), quote(&b)).unwrap();
    }
    for (a, b) in doc.sorted_labeled(added) {
        writeln!(out, "  {} -- {} [style=dashed];", quote(&a), quote(&b)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn stats_line(t: &Tree, r: &AugmentationResult) -> String {
    format!(
        "n={} l1={} l2={} bound={} augmented={} case={}",
        t.n(),
        t.l1(),
        t.l2(),
        r.bound,
        r.edges.len(),
        r.case_taken
    )
}

#[derive(Debug, Parser)]
#[command(
    name = "triaug",
    version,
    about = "Minimum 3-connectivity augmentation of trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the lower bound ⌈(2·l1 + l2)/2⌉ for a tree.
    Bound { file: PathBuf },
    /// Compute a minimum augmentation set for a tree.
    Augment {
        file: PathBuf,
        /// Check the result is 3-connected and meets the bound.
        #[arg(long)]
        verify: bool,
        /// Write T plus the added edges as DOT.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check whether an arbitrary graph is k-vertex-connected.
    Verify {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive minimum augmentation search (n <= 8).
    Oracle {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a generated tree as an edge list.
    Gen {
        #[arg(value_parser = parse_shape)]
        shape: Shape,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        legs: Option<usize>,
        #[arg(long)]
        spine: Option<usize>,
    },
}

fn parse_shape(s: &str) -> Result<Shape, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::VerificationFailed(_) => EXIT_VERIFY_FAILED,
            Error::Budget(_) => EXIT_BUDGET,
            _ => EXIT_INVALID_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID_INPUT
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_document(path: &Path) -> Result<EdgeListDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    EdgeListDocument::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<(EdgeListDocument, Tree), Failure> {
    let doc = read_document(path)?;
    let tree = validate_tree(doc.to_graph()?)?;
    Ok((doc, tree))
}

fn edge_json(edges: &[(String, String)]) -> serde_json::Value {
    edges.iter().map(|(a, b)| json!([a, b])).collect()
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Bound { file } => {
            let (_, t) = read_tree(&file)?;
            writeln!(out, "{}", lower_bound(&t))?;
        }
        Command::Augment {
            file,
            verify,
            dot,
            json,
        } => {
            let (doc, t) = read_tree(&file)?;
            let opts = AugmentOptions {
                verify,
                ..AugmentOptions::default()
            };
            let r = tri_augment_with(&t, opts)?;
            if let Some(path) = dot {
                std::fs::write(&path, render_dot(&doc, &t, &r.edges))
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            }
            let edges = doc.sorted_labeled(&r.edges);
            if json {
                let label = |v: usize| doc.label(v).to_string();
                let report = json!({
                    "n": t.n(),
                    "l1": t.l1(),
                    "l2": t.l2(),
                    "bound": r.bound,
                    "augmented": r.edges.len(),
                    "case": r.case_taken.token(),
                    "edges": edge_json(&edges),
                    "matched_pairs": r.matched_pairs.iter()
                        .map(|&(a, b)| json!([label(a), label(b)]))
                        .collect::<Vec<_>>(),
                    "residual_chain": r.residual_chain.iter().map(|&x| label(x)).collect::<Vec<_>>(),
                    "verified": verify,
                });
                writeln!(out, "{report}")?;
            } else {
                for (a, b) in &edges {
                    writeln!(out, "{a} {b}")?;
                }
                writeln!(out, "{}", stats_line(&t, &r))?;
            }
        }
        Command::Verify { file, k } => {
            let doc = read_document(&file)?;
            let g = doc.to_graph()?;
            let ok = is_k_connected(&g, k);
            writeln!(out, "n={} m={} k={k} connected={ok}", g.n(), g.m())?;
            if !ok {
                return Err(Failure {
                    code: EXIT_VERIFY_FAILED,
                    message: format!("graph is not {k}-connected"),
                });
            }
        }
        Command::Oracle { file, json } => {
            let (doc, t) = read_tree(&file)?;
            let r = min_augmentation_bruteforce(&t)?;
            let witness = doc.sorted_labeled(&r.witness);
            if json {
                let report = json!({
                    "n": t.n(),
                    "bound": lower_bound(&t),
                    "minimum": r.minimum,
                    "explored": r.explored,
                    "witness": edge_json(&witness),
                });
                writeln!(out, "{report}")?;
            } else {
                for (a, b) in &witness {
                    writeln!(out, "{a} {b}")?;
                }
                writeln!(
                    out,
                    "n={} bound={} minimum={} explored={}",
                    t.n(),
                    lower_bound(&t),
                    r.minimum,
                    r.explored
                )?;
            }
        }
        Command::Gen {
            shape,
            n,
            seed,
            legs,
            spine,
        } => {
            let t = generate(&TreeGenSpec {
                shape,
                n,
                seed,
                legs,
                spine,
            })?;
            out.write_all(EdgeListDocument::from_graph(t.graph()).emit().as_bytes())?;
        }
    }
    Ok(())
}
