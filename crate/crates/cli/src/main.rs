//! Command-line front end: every library operation behind one binary with
//! deterministic text or JSON output.
//!
//! Exit codes: 0 on success (all checks pass), 1 on a failed check (the
//! output carries a witness), 2 on usage or parse errors. With `--json`
//! every verb prints a single JSON document on standard output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use graphlie::{
    all_entries, analyze_subset_by_names, build_kmn_distinct_labels, build_kmn_single_label,
    build_lie, der0, enumerate_substructures, get, kmn_dimension_formula, names,
    orientation_isomorphism, reversal_isomorphism, verify_axioms, verify_entry, CatalogError,
    GraphError, KmnLabeling, LabeledDigraph, MorphismError, SubstructureReport,
};

#[derive(Parser)]
#[command(
    name = "graphlie",
    version,
    about = "2-step nilpotent Lie algebras of labeled directed graphs"
)]
struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Build the algebra of a graph and check the bracket axioms
    Verify { file: PathBuf },
    /// Print the algebra: dimension, strata, bracket relations
    Info { file: PathBuf },
    /// Connected components and the kernel of the adjacency-minus-valency matrix
    Components { file: PathBuf },
    /// Subalgebras and graph-ideals spanned by vertex subsets
    Ideals {
        file: PathBuf,
        /// Analyze one comma-separated vertex subset instead of enumerating
        #[arg(long)]
        subset: Option<String>,
        /// Also list trivial subsets when enumerating
        #[arg(long)]
        all: bool,
    },
    /// Dimension (and optional basis) of the degree-0 derivation algebra
    Der0 {
        file: PathBuf,
        /// Print a basis of derivations as JSON matrices
        #[arg(long)]
        basis: bool,
    },
    /// Complete bipartite families with closed-form dimension checks
    Kmn {
        /// Size of the first part
        #[arg(long)]
        m: usize,
        /// Size of the second part
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        labeling: LabelingArg,
        /// Compare the computed dimension against the closed form
        #[arg(long)]
        check: bool,
        /// Print the graph instead of solving
        #[arg(long)]
        emit: bool,
    },
    /// Reverse one edge and build the compensating isomorphism
    Reverse {
        file: PathBuf,
        /// The edge to reverse, written TAIL:HEAD
        #[arg(long)]
        edge: String,
    },
    /// Verify composite isomorphisms over every orientation of the graph
    Orientations { file: PathBuf },
    /// Reference graphs with recorded substructure expectations
    Catalog {
        /// Entry name; omit to list all entries
        name: Option<String>,
        /// Print the entry's graph in .lg form
        #[arg(long)]
        emit: bool,
        /// Re-verify the recorded expectations of every entry
        #[arg(long)]
        verify_all: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelingArg {
    Single,
    Distinct,
}

impl From<LabelingArg> for KmnLabeling {
    fn from(value: LabelingArg) -> Self {
        match value {
            LabelingArg::Single => KmnLabeling::Single,
            LabelingArg::Distinct => KmnLabeling::Distinct,
        }
    }
}

/// A finished command: exit code, text output, JSON output.
struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

/// Input problems that map to exit code 2.
struct UsageError(String);

fn main() {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match dispatch(cli.verb) {
        Ok(outcome) => {
            if json_mode {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("serializable output")
                );
            } else {
                print!("{}", outcome.text);
            }
            process::exit(outcome.code);
        }
        Err(UsageError(message)) => {
            if json_mode {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "error": message }))
                        .expect("serializable output")
                );
            } else {
                eprintln!("error: {message}");
            }
            process::exit(2);
        }
    }
}

fn dispatch(verb: Verb) -> Result<Outcome, UsageError> {
    match verb {
        Verb::Verify { file } => cmd_verify(&load(&file)?),
        Verb::Info { file } => cmd_info(&load(&file)?),
        Verb::Components { file } => cmd_components(&load(&file)?),
        Verb::Ideals { file, subset, all } => cmd_ideals(&load(&file)?, subset.as_deref(), all),
        Verb::Der0 { file, basis } => cmd_der0(&load(&file)?, basis),
        Verb::Kmn {
            m,
            n,
            labeling,
            check,
            emit,
        } => cmd_kmn(m, n, labeling.into(), check, emit),
        Verb::Reverse { file, edge } => cmd_reverse(&load(&file)?, &edge),
        Verb::Orientations { file } => cmd_orientations(&load(&file)?),
        Verb::Catalog {
            name,
            emit,
            verify_all,
        } => cmd_catalog(name.as_deref(), emit, verify_all),
    }
}

fn load(path: &Path) -> Result<LabeledDigraph, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    LabeledDigraph::parse(&text).map_err(|e| match e {
        GraphError::Parse { line, message } => {
            UsageError(format!("{}:{line}: {message}", path.display()))
        }
        other => UsageError(format!("{}: {other}", path.display())),
    })
}

fn span_text(names: &[String]) -> String {
    format!("<{}>", names.join(","))
}

fn cmd_verify(g: &LabeledDigraph) -> Result<Outcome, UsageError> {
    let alg = build_lie(g);
    let report = verify_axioms(&alg);
    let mut text = String::new();
    let line = |label: &str, ok: bool, witness: String| {
        if ok {
            format!("{label}: ok\n")
        } else {
            format!("{label}: FAIL {witness}\n")
        }
    };
    text += &line(
        "antisymmetry",
        report.antisymmetry_ok(),
        report
            .antisymmetry_witness
            .map(|(a, b)| format!("at ({}, {})", alg.basis_name(a), alg.basis_name(b)))
            .unwrap_or_default(),
    );
    text += &line(
        "jacobi",
        report.jacobi_ok(),
        report
            .jacobi_witness
            .map(|(a, b, c)| {
                format!(
                    "at ({}, {}, {})",
                    alg.basis_name(a),
                    alg.basis_name(b),
                    alg.basis_name(c)
                )
            })
            .unwrap_or_default(),
    );
    text += &line(
        "nilpotency",
        report.nilpotency_ok(),
        report
            .nilpotency_witness
            .map(|(a, b, c)| {
                format!(
                    "at ({}, {}, {})",
                    alg.basis_name(a),
                    alg.basis_name(b),
                    alg.basis_name(c)
                )
            })
            .unwrap_or_default(),
    );
    text += &line(
        "generation",
        report.generation_ok(),
        format!(
            "(brackets span {} of {})",
            report.generated_dim, report.minus_two_dim
        ),
    );
    if report.generation_ok() {
        // replace the bare "ok" with the span count for the fourth check
        text = text.replace(
            "generation: ok\n",
            &format!(
                "generation: ok (brackets span {} of {})\n",
                report.generated_dim, report.minus_two_dim
            ),
        );
    }
    text += &format!(
        "dim={} generators={} derived={}\n",
        alg.dim(),
        alg.n(),
        alg.m()
    );
    let ok = report.all_ok();
    let json = json!({
        "antisymmetry": report.antisymmetry_ok(),
        "jacobi": report.jacobi_ok(),
        "nilpotency": report.nilpotency_ok(),
        "generation": report.generation_ok(),
        "generated_dim": report.generated_dim,
        "derived_dim": report.minus_two_dim,
        "dim": alg.dim(),
        "ok": ok,
    });
    Ok(Outcome {
        code: i32::from(!ok),
        text,
        json,
    })
}

fn cmd_info(g: &LabeledDigraph) -> Result<Outcome, UsageError> {
    let alg = build_lie(g);
    let info = alg.info_json();
    let mut text = format!("dim={}\n", alg.dim());
    text += &format!("g(-1): {}\n", alg.minus_one_basis().join(" "));
    text += &format!("g(-2): {}\n", alg.minus_two_basis().join(" "));
    let relations = info["relations"].as_array().expect("relations array");
    text += &format!("relations={}\n", relations.len());
    for rel in relations {
        let sign = if rel["sign"].as_i64() == Some(-1) { "-" } else { "" };
        text += &format!(
            "[{}, {}] = {}{}\n",
            rel["left"].as_str().expect("name"),
            rel["right"].as_str().expect("name"),
            sign,
            rel["result"].as_str().expect("name"),
        );
    }
    Ok(Outcome {
        code: 0,
        text,
        json: info,
    })
}

fn cmd_components(g: &LabeledDigraph) -> Result<Outcome, UsageError> {
    let spectral = g.component_count_spectral();
    let components = g.components();
    let mut text = format!(
        "vertices={} edges={} labels={}\n",
        g.vertex_count(),
        g.edge_count(),
        g.label_count()
    );
    text += &format!("kernel dimension={spectral}\n");
    text += &format!("components={}\n", components.len());
    let mut component_names = Vec::new();
    for (idx, comp) in components.iter().enumerate() {
        let names: Vec<&str> = comp.iter().map(|&v| g.vertex_name(v)).collect();
        text += &format!("component {}: {}\n", idx + 1, names.join(" "));
        component_names.push(names);
    }
    let json = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "labels": g.label_count(),
        "kernel_dimension": spectral,
        "component_count": components.len(),
        "components": component_names,
        "laplacian": g.laplacian(),
    });
    Ok(Outcome {
        code: 0,
        text,
        json,
    })
}

fn report_line(r: &SubstructureReport) -> String {
    let mut line = format!(
        "{} subalgebra={} graph-ideal={}",
        span_text(&r.span_names()),
        if r.is_subalgebra { "yes" } else { "no" },
        if r.is_graph_ideal { "yes" } else { "no" },
    );
    if let Some(reason) = &r.trivial {
        line += &format!(" trivial ({reason})");
    }
    line.push('\n');
    line
}

fn cmd_ideals(
    g: &LabeledDigraph,
    subset: Option<&str>,
    all: bool,
) -> Result<Outcome, UsageError> {
    if let Some(list) = subset {
        let names: Vec<&str> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let report = analyze_subset_by_names(g, &names)
            .map_err(|e| UsageError(format!("--subset: {e}")))?;
        let text = report_line(&report);
        let json = serde_json::to_value(&report).expect("serializable report");
        return Ok(Outcome {
            code: 0,
            text,
            json,
        });
    }
    let reports = enumerate_substructures(g, g.vertex_count());
    let nontrivial_subalgebras = reports
        .iter()
        .filter(|r| r.is_nontrivial() && r.is_subalgebra)
        .count();
    let nontrivial_ideals = reports
        .iter()
        .filter(|r| r.is_nontrivial() && r.is_graph_ideal && r.is_ideal)
        .count();
    let mut text = String::new();
    let mut shown = Vec::new();
    for r in &reports {
        if all || r.is_nontrivial() {
            text += &report_line(r);
            shown.push(r);
        }
    }
    text += &format!(
        "nontrivial subalgebras={nontrivial_subalgebras} nontrivial graph-ideals={nontrivial_ideals}\n"
    );
    let json = json!({
        "reports": shown.iter().map(|r| serde_json::to_value(r).expect("serializable report")).collect::<Vec<_>>(),
        "nontrivial_subalgebras": nontrivial_subalgebras,
        "nontrivial_graph_ideals": nontrivial_ideals,
    });
    Ok(Outcome {
        code: 0,
        text,
        json,
    })
}

fn cmd_der0(g: &LabeledDigraph, basis: bool) -> Result<Outcome, UsageError> {
    let alg = build_lie(g);
    let space = der0(&alg);
    let mut text = format!("dim={}\n", space.dimension);
    if basis {
        for map in &space.basis {
            text += &serde_json::to_string(map).expect("serializable map");
            text.push('\n');
        }
    }
    let mut json = json!({ "dimension": space.dimension });
    if basis {
        json["basis"] = serde_json::to_value(&space.basis).expect("serializable basis");
    }
    Ok(Outcome {
        code: 0,
        text,
        json,
    })
}

fn cmd_kmn(
    m: usize,
    n: usize,
    labeling: KmnLabeling,
    check: bool,
    emit: bool,
) -> Result<Outcome, UsageError> {
    let graph = match labeling {
        KmnLabeling::Single => build_kmn_single_label(m, n),
        KmnLabeling::Distinct => build_kmn_distinct_labels(m, n),
    }
    .map_err(|e| UsageError(e.to_string()))?;
    let labeling_name = match labeling {
        KmnLabeling::Single => "single",
        KmnLabeling::Distinct => "distinct",
    };
    if emit {
        let text = graph.serialize();
        let json = json!({
            "m": m, "n": n, "labeling": labeling_name, "graph": text,
        });
        return Ok(Outcome {
            code: 0,
            text,
            json,
        });
    }
    let dim = der0(&build_lie(&graph)).dimension;
    let mut json = json!({
        "m": m, "n": n, "labeling": labeling_name, "dimension": dim,
    });
    if !check {
        return Ok(Outcome {
            code: 0,
            text: format!("dim={dim}\n"),
            json,
        });
    }
    match kmn_dimension_formula(m, n, labeling) {
        Ok(formula) if formula == dim => {
            json["formula"] = json!(formula);
            json["check"] = json!("ok");
            Ok(Outcome {
                code: 0,
                text: format!("dim={dim} formula={formula} OK\n"),
                json,
            })
        }
        Ok(formula) => {
            json["formula"] = json!(formula);
            json["check"] = json!("mismatch");
            Ok(Outcome {
                code: 1,
                text: format!("dim={dim} formula={formula} MISMATCH\n"),
                json,
            })
        }
        Err(e) => {
            json["formula"] = Value::Null;
            json["check"] = json!("unavailable");
            json["reason"] = json!(e.to_string());
            Ok(Outcome {
                code: 1,
                text: format!("dim={dim} formula=unavailable ({e}) FAIL\n"),
                json,
            })
        }
    }
}

fn cmd_reverse(g: &LabeledDigraph, edge: &str) -> Result<Outcome, UsageError> {
    let (tail_name, head_name) = edge
        .split_once(':')
        .map(|(a, b)| (a.trim(), b.trim()))
        .filter(|(a, b)| !a.is_empty() && !b.is_empty())
        .ok_or_else(|| UsageError(format!("--edge expects TAIL:HEAD, got `{edge}`")))?;
    let tail = g
        .vertex_index(tail_name)
        .ok_or_else(|| UsageError(format!("unknown vertex `{tail_name}`")))?;
    let head = g
        .vertex_index(head_name)
        .ok_or_else(|| UsageError(format!("unknown vertex `{head_name}`")))?;
    match reversal_isomorphism(g, tail, head) {
        Ok(outcome) => {
            let map = outcome.map();
            let mut text = outcome.graph().serialize();
            for line in map.describe() {
                text += &format!("# {line}\n");
            }
            text += &format!(
                "# {}\n",
                serde_json::to_string(map).expect("serializable map")
            );
            let verified = outcome.is_verified();
            let mut json = json!({
                "reversed": outcome.graph().serialize(),
                "map": serde_json::to_value(map).expect("serializable map"),
                "verified": verified,
            });
            if let Some(report) = outcome.counterexample() {
                let witness = report
                    .bracket_witness
                    .map(|(a, b)| {
                        let alg = &map.source;
                        format!("({}, {})", alg.basis_name(a), alg.basis_name(b))
                    })
                    .unwrap_or_else(|| "degenerate block".to_string());
                text += &format!("# NOT an isomorphism: bracket check fails at {witness}\n");
                json["counterexample"] =
                    serde_json::to_value(report).expect("serializable report");
            }
            Ok(Outcome {
                code: i32::from(!verified),
                text,
                json,
            })
        }
        Err(MorphismError::Graph(e)) => Err(UsageError(e.to_string())),
        Err(e @ MorphismError::LabelNotUnique(..)) => Ok(Outcome {
            code: 1,
            text: format!("FAIL: {e}\n"),
            json: json!({ "verified": false, "reason": e.to_string() }),
        }),
        Err(e) => Err(UsageError(e.to_string())),
    }
}

fn cmd_orientations(g: &LabeledDigraph) -> Result<Outcome, UsageError> {
    let edge_count = g.edge_count();
    if edge_count > 12 {
        return Err(UsageError(format!(
            "orientation sweep is limited to 12 edges, graph has {edge_count}"
        )));
    }
    // surface the structural preconditions once, before sweeping
    if let Err(e) = orientation_isomorphism(g, &[]) {
        return Ok(Outcome {
            code: 1,
            text: format!("FAIL: {e}\n"),
            json: json!({ "passed": 0, "failed": 0, "reason": e.to_string() }),
        });
    }
    let total: u64 = 1 << edge_count;
    let mut passed = 0u64;
    let mut failing_masks = Vec::new();
    for mask in 0..total {
        let subset: Vec<usize> = (0..edge_count).filter(|i| mask >> i & 1 == 1).collect();
        let outcome = orientation_isomorphism(g, &subset)
            .expect("preconditions were checked before the sweep");
        if outcome.is_verified() {
            passed += 1;
        } else {
            failing_masks.push(mask);
        }
    }
    let mut text = format!("edges={edge_count} orientations={total}\n");
    for mask in &failing_masks {
        text += &format!("mask={mask} FAIL\n");
    }
    text += &format!("passed={passed} failed={}\n", failing_masks.len());
    let json = json!({
        "edges": edge_count,
        "orientations": total,
        "passed": passed,
        "failed": failing_masks.len(),
        "failing_masks": failing_masks,
    });
    Ok(Outcome {
        code: i32::from(!failing_masks.is_empty()),
        text,
        json,
    })
}

fn cmd_catalog(
    name: Option<&str>,
    emit: bool,
    verify_all: bool,
) -> Result<Outcome, UsageError> {
    if verify_all {
        let mut text = String::new();
        let mut rows = Vec::new();
        let mut all_ok = true;
        for entry in all_entries() {
            let report = verify_entry(&entry);
            let ok = report.ok() && report.extras.is_empty();
            all_ok &= ok;
            text += &format!(
                "{}: nontrivial={} misses={} extras={} {}\n",
                entry.name,
                report.nontrivial_found,
                report.misses.len(),
                report.extras.len(),
                if ok { "ok" } else { "FAIL" }
            );
            for miss in &report.misses {
                text += &format!("  miss: {miss}\n");
            }
            for extra in &report.extras {
                text += &format!("  extra: {extra}\n");
            }
            rows.push(json!({
                "name": entry.name,
                "nontrivial_found": report.nontrivial_found,
                "misses": report.misses,
                "extras": report.extras,
                "ok": ok,
            }));
        }
        let failed = rows.iter().filter(|r| r["ok"] == json!(false)).count();
        text += &format!("entries={} ok={} failed={failed}\n", rows.len(), rows.len() - failed);
        let json = json!({ "entries": rows, "all_ok": all_ok });
        return Ok(Outcome {
            code: i32::from(!all_ok),
            text,
            json,
        });
    }
    let Some(name) = name else {
        let mut text = String::new();
        let mut listed = Vec::new();
        for n in names() {
            match get(n) {
                Ok(entry) => {
                    text += &format!("{:<14} {}\n", entry.name, entry.description);
                    listed.push(json!({ "name": entry.name, "description": entry.description }));
                }
                Err(CatalogError::OutOfScope(_, why)) => {
                    text += &format!("{n:<14} (out of scope: {why})\n");
                    listed.push(json!({ "name": n, "out_of_scope": why }));
                }
                Err(e) => return Err(UsageError(e.to_string())),
            }
        }
        return Ok(Outcome {
            code: 0,
            text,
            json: json!({ "entries": listed }),
        });
    };
    let entry = get(name).map_err(|e| UsageError(e.to_string()))?;
    if emit {
        let text = entry.graph.serialize();
        let json = json!({ "name": entry.name, "graph": text });
        return Ok(Outcome {
            code: 0,
            text,
            json,
        });
    }
    let spans = |list: &[Vec<&'static str>]| {
        list.iter()
            .map(|span| {
                span_text(&span.iter().map(|s| s.to_string()).collect::<Vec<_>>())
            })
            .collect::<Vec<_>>()
    };
    let sub_spans = spans(&entry.expected_subalgebras);
    let ideal_spans = spans(&entry.expected_graph_ideals);
    let mut text = format!("name: {}\n", entry.name);
    text += &format!("description: {}\n", entry.description);
    text += &entry.graph.serialize();
    text += &format!(
        "subalgebras: {}\n",
        if sub_spans.is_empty() { "none".to_string() } else { sub_spans.join(" ") }
    );
    text += &format!(
        "graph-ideals: {}\n",
        if ideal_spans.is_empty() { "none".to_string() } else { ideal_spans.join(" ") }
    );
    let json = json!({
        "name": entry.name,
        "description": entry.description,
        "graph": entry.graph.serialize(),
        "subalgebras": entry.expected_subalgebras,
        "graph_ideals": entry.expected_graph_ideals,
    });
    Ok(Outcome {
        code: 0,
        text,
        json,
    })
}
