//! Acceptance criteria. Runs with `harness = false` and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.

use std::hint::black_box;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use triaug::gen::{generate, Shape, TreeGenSpec};
use triaug::oracle::{
    degree_deficiency_bound, enumerate_labeled_trees, min_augmentation_bruteforce,
};
use triaug::{
    graph_from_edges, is_k_connected, lower_bound, non_path_augmentation_with, tri_augment,
    vertex_connectivity, AugmentationResult, ChainWiring, Graph, Tree,
};

/// Growth allowed per doubling of n; quadratic would be 4.
const MAX_GROWTH_PER_DOUBLING: f64 = 5.0;
const RANDOM_TREES_PER_N: u64 = 1000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: &str, title: &str, o: &Outcome) {
    let tag = if o.pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {title}: {}", o.detail);
}

/// Everything AC2 asks of one augmentation. `Err` carries a description of
/// the first violation.
fn check_output(t: &Tree, r: &AugmentationResult) -> Result<(), String> {
    let bound = (2 * t.l1() + t.l2()).div_ceil(2);
    if r.edges.len() != bound {
        return Err(format!("{} edges, bound {bound}", r.edges.len()));
    }
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in &r.edges {
        if u == v || t.graph().has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
            return Err(format!("edge {{{u}, {v}}} is a loop, tree edge or repeat"));
        }
    }
    let h = r.augmented_graph(t).map_err(|e| e.to_string())?;
    let mut fours = 0;
    for v in 0..t.n() {
        let (before, after) = (t.graph().degree(v), h.degree(v));
        if before >= 3 && after != before {
            return Err(format!("vertex {v} of tree degree {before} was touched"));
        }
        if before <= 2 {
            if !(3..=4).contains(&after) {
                return Err(format!("vertex {v} ends at degree {after}"));
            }
            fours += usize::from(after == 4);
        }
    }
    if fours > 2 {
        return Err(format!("{fours} vertices raised to degree 4"));
    }
    if !is_k_connected(&h, 3) {
        return Err("not 3-connected".into());
    }
    Ok(())
}

fn edges_of(t: &Tree) -> Vec<(usize, usize)> {
    t.graph().edges().collect()
}

struct ExhaustiveRow {
    exact: bool,
    oracle_ok: bool,
    failure: Option<String>,
}

/// AC1 and AC6 share one oracle pass over every labeled tree with 4 <= n <= 7.
fn exhaustive_pass() -> (Outcome, Outcome) {
    let mut total = 0usize;
    let mut exact_fail = Vec::new();
    let mut oracle_fail = Vec::new();
    let mut counts = Vec::new();
    for n in 4..=7 {
        let trees: Vec<Tree> = enumerate_labeled_trees(n).unwrap().collect();
        counts.push(trees.len());
        total += trees.len();
        let rows: Vec<ExhaustiveRow> = trees
            .par_iter()
            .map(|t| {
                let r = tri_augment(t).unwrap();
                let o = min_augmentation_bruteforce(t).unwrap();
                let h = r.augmented_graph(t);
                let connected = h.as_ref().map(|h| is_k_connected(h, 3)).unwrap_or(false);
                let witness_ok = is_k_connected(&t.graph().with_edges(&o.witness).unwrap(), 3)
                    && o.witness.len() == o.minimum;
                let exact =
                    r.edges.len() == lower_bound(t) && lower_bound(t) == o.minimum && connected;
                let oracle_ok = witness_ok
                    && o.minimum >= degree_deficiency_bound(t)
                    && o.minimum == lower_bound(t);
                let failure = (!exact || !oracle_ok).then(|| {
                    format!(
                        "tree {:?}: augmented {} bound {} oracle {} 3-connected {}",
                        edges_of(t),
                        r.edges.len(),
                        lower_bound(t),
                        o.minimum,
                        connected
                    )
                });
                ExhaustiveRow {
                    exact,
                    oracle_ok,
                    failure,
                }
            })
            .collect();
        for row in rows {
            if !row.exact {
                exact_fail.push(row.failure.clone().unwrap());
            }
            if !row.oracle_ok {
                oracle_fail.push(row.failure.unwrap());
            }
        }
    }
    let describe = |fails: &[String]| match fails.first() {
        None => format!("{total} trees ({counts:?}), 0 violations"),
        Some(first) => format!("{} of {total} trees violate; first: {first}", fails.len()),
    };
    (
        Outcome {
            pass: exact_fail.is_empty() && total == 16 + 125 + 1296 + 16807,
            detail: describe(&exact_fail),
        },
        Outcome {
            pass: oracle_fail.is_empty(),
            detail: describe(&oracle_fail),
        },
    )
}

fn shape_specs() -> Vec<TreeGenSpec> {
    let mut specs = Vec::new();
    for n in (4..=200).step_by(7) {
        specs.push(TreeGenSpec::new(Shape::Path, n));
        specs.push(TreeGenSpec::new(Shape::Star, n));
        for legs in [3, 4, 7] {
            if legs < n {
                specs.push(TreeGenSpec {
                    legs: Some(legs),
                    ..TreeGenSpec::new(Shape::Spider, n)
                });
            }
        }
        for (spine, legs) in [(n.div_ceil(2), 1), (n.div_ceil(3), 2), (n - 1, 1)] {
            specs.push(TreeGenSpec {
                spine: Some(spine),
                legs: Some(legs),
                ..TreeGenSpec::new(Shape::Caterpillar, n)
            });
        }
    }
    specs
}

fn property_sweep() -> Outcome {
    let mut specs: Vec<TreeGenSpec> = [10, 20, 50, 100, 200]
        .into_iter()
        .flat_map(|n| (0..RANDOM_TREES_PER_N).map(move |seed| TreeGenSpec::random(n, seed)))
        .collect();
    specs.extend(shape_specs());
    let failures: Vec<String> = specs
        .par_iter()
        .filter_map(|spec| {
            let t = generate(spec).unwrap();
            let r = tri_augment(&t).unwrap();
            check_output(&t, &r).err().map(|why| {
                format!(
                    "{spec:?}: {why}; potential counterexample tree {:?}",
                    edges_of(&t)
                )
            })
        })
        .collect();
    Outcome {
        pass: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{} trees, 0 violations", specs.len()),
            Some(first) => format!(
                "{} of {} violate; first: {first}",
                failures.len(),
                specs.len()
            ),
        },
    }
}

fn path_chords() -> Outcome {
    let mut bad = Vec::new();
    for n in 4..=200 {
        let t = generate(&TreeGenSpec::new(Shape::Path, n)).unwrap();
        let r = tri_augment(&t).unwrap();
        // generated path: cycle position of vertex i is i
        if r.edges[0] != (0, n - 1) {
            bad.push(format!("n={n}: first edge {:?}", r.edges[0]));
        }
        for &(a, b) in &r.edges[1..] {
            let gap = a.abs_diff(b);
            if gap.min(n - gap) != n / 2 {
                bad.push(format!("n={n}: chord {a}-{b}"));
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "paths 4..=200, every chord at cycle distance floor(n/2)".into()
        } else {
            format!("{} bad chords, first {}", bad.len(), bad[0])
        },
    }
}

/// Mean time per augmentation over a batch of at least 50 ms; best of 5.
fn time_per_call(trees: &[Tree]) -> Duration {
    let mut best = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        let mut calls = 0u32;
        while start.elapsed() < Duration::from_millis(50) {
            for t in trees {
                black_box(tri_augment(black_box(t)).unwrap());
                calls += 1;
            }
        }
        best = best.min(start.elapsed() / calls);
    }
    best
}

fn complexity() -> Outcome {
    let sizes = [1000, 2000, 4000];
    let mut lines = Vec::new();
    let mut pass = true;
    for family in ["path", "random"] {
        let times: Vec<Duration> = sizes
            .iter()
            .map(|&n| {
                let trees: Vec<Tree> = match family {
                    "path" => vec![generate(&TreeGenSpec::new(Shape::Path, n)).unwrap()],
                    _ => (0..8)
                        .map(|s| generate(&TreeGenSpec::random(n, s)).unwrap())
                        .collect(),
                };
                time_per_call(&trees)
            })
            .collect();
        let ratios: Vec<f64> = times
            .windows(2)
            .map(|w| w[1].as_secs_f64() / w[0].as_secs_f64())
            .collect();
        pass &= ratios.iter().all(|&r| r <= MAX_GROWTH_PER_DOUBLING);
        lines.push(format!("{family}: {:?} ratios {:.2?}", times, ratios));
    }
    Outcome {
        pass,
        detail: format!(
            "limit {MAX_GROWTH_PER_DOUBLING} per doubling; {}",
            lines.join("; ")
        ),
    }
}

fn checker_values() -> Outcome {
    let mut cases: Vec<(String, Graph, usize)> = vec![("K4".into(), Graph::complete(4), 3)];
    for n in 3..=9 {
        cases.push((format!("C{n}"), Graph::cycle(n), 2));
    }
    for n in 2..=9 {
        cases.push((format!("P{n}"), Graph::path(n), 1));
    }
    for leaves in 1..=8 {
        cases.push((format!("K1,{leaves}"), Graph::star(leaves + 1), 1));
    }
    let k5_minus: Vec<_> = Graph::complete(5)
        .edges()
        .filter(|&e| e != (0, 1))
        .collect();
    cases.push(("K5-e".into(), graph_from_edges(5, &k5_minus).unwrap(), 3));
    let wrong: Vec<String> = cases
        .iter()
        .filter_map(|(name, g, want)| {
            let got = vertex_connectivity(g);
            (got != *want).then(|| format!("{name}: got {got}, want {want}"))
        })
        .collect();
    Outcome {
        pass: wrong.is_empty(),
        detail: if wrong.is_empty() {
            format!("{} graphs match textbook values", cases.len())
        } else {
            wrong.join(", ")
        },
    }
}

/// Not a criterion: how often the tree-adjacency-only wiring of the residual
/// chain fails to be 3-connected on the exhaustive range.
fn published_wiring_counterexamples() -> String {
    let mut parts = Vec::new();
    for n in 4..=7 {
        let trees: Vec<Tree> = enumerate_labeled_trees(n).unwrap().collect();
        let failing: Vec<&Tree> = trees
            .par_iter()
            .filter(|t| {
                !t.is_path() && {
                    let r = non_path_augmentation_with(t, ChainWiring::TreeAdjacency).unwrap();
                    !is_k_connected(&r.augmented_graph(t).unwrap(), 3)
                }
            })
            .collect();
        let first = failing
            .first()
            .map(|t| format!(" e.g. {:?}", edges_of(t)))
            .unwrap_or_default();
        parts.push(format!("n={n}: {}/{}{first}", failing.len(), trees.len()));
    }
    parts.join("; ")
}

fn main() -> ExitCode {
    // honour `cargo test -- --list` style probes from tooling
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let started = Instant::now();
    let (ac1, ac6) = exhaustive_pass();
    let results = [
        (
            "AC1",
            "exact optimality, all labeled trees 4 <= n <= 7",
            ac1,
        ),
        (
            "AC2",
            "property sweep, random and shaped trees",
            property_sweep(),
        ),
        ("AC3", "path chord geometry", path_chords()),
        ("AC4", "runtime growth per doubling", complexity()),
        (
            "AC5",
            "connectivity checker textbook values",
            checker_values(),
        ),
        ("AC6", "oracle minimum equals the lower bound", ac6),
    ];
    for (id, title, o) in &results {
        report(id, title, o);
    }
    println!(
        "[INFO] tree-adjacency chain wiring counterexamples: {}",
        published_wiring_counterexamples()
    );
    let failed = results.iter().filter(|(_, _, o)| !o.pass).count();
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        results.len() - failed,
        started.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
