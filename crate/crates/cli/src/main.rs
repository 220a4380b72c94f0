//! `posr`: verify, analyze, construct and enumerate finite po-semirings,
//! inspect finite rings through their ideals, and run the theorem catalog.

mod input;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use posr_core::analysis::{analyze_elements, check_conditions};
use posr_core::constructions::direct_product;
use posr_core::enumerate::{canonical_form, enumerate_posemirings, Mode};
use posr_core::format::write_psr;
use posr_core::graphs::{classify_shape, export_dot, posemiring_zdgraph};
use posr_core::harness::{catalog, parse_corpus, run_catalog, select_checks, NOT_COVERED};
use posr_core::iso::find_isomorphism;
use posr_core::ringlab::{
    annihilating_ideal_graph, enumerate_ring_ideals, ideal_semiring, radicals, ring_zdgraph,
};
use posr_core::verify_axioms;

use input::{load_instance, load_ring, read_raw, write_output, Fatal};

#[derive(Parser)]
#[command(
    name = "posr",
    version,
    about = "Finite po-semirings, their zero-divisor graphs and ideal semirings"
)]
struct Cli {
    /// Print machine-readable JSON with sorted keys.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a psr file against the axioms (exit 0 valid, 1 invalid).
    Verify { file: PathBuf },
    /// Zero divisors, nilpotents, idempotents, primes and conditions c1-c3.
    Analyze { instance: String },
    /// The zero-divisor graph and its shape.
    Graph {
        instance: String,
        /// Print only the shape line.
        #[arg(long)]
        shape: bool,
        /// Also write the graph in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Build an instance from a construction spec such as `example-2.6:k=2`.
    Construct {
        spec: String,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Direct product of two instances.
    Product {
        left: String,
        right: String,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// An isomorphism between two instances (exit 1 when there is none).
    Iso { left: String, right: String },
    /// Every po-semiring of a given order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "fast")]
        mode: ModeArg,
        /// Write one psr file per class, named by a hash of its canonical form.
        #[arg(long, value_name = "DIR")]
        emit_dir: Option<PathBuf>,
    },
    /// Ideals, ideal semiring, graphs and radicals of a finite ring.
    Ring {
        #[arg(value_enum)]
        op: RingOp,
        /// A ring file, or `zn:N`, `zpx:p:c1:c0`, `prod(<ring>,<ring>)`.
        ring: String,
        /// Print only the shape line (ag and zdgraph).
        #[arg(long)]
        shape: bool,
    },
    /// Run the theorem catalog over a corpus (exit 0 iff nothing fails).
    Theorems {
        /// `+`-separated list of census:N, grid, rings:default, ring:<spec>,
        /// files:<dir> and psr:<construction>.
        #[arg(long, required_unless_present = "list")]
        corpus: Option<String>,
        /// `all` or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
        /// List the catalog and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Naive,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingOp {
    Ideals,
    Semiring,
    Ag,
    Zdgraph,
    Radicals,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn print_json(v: Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&v).expect("values always serialize")
    );
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("library types serialize")
}

fn verify(file: &Path, json: bool) -> Result<ExitCode, Fatal> {
    let raw = read_raw(file)?;
    let report = verify_axioms(&raw).map_err(|e| Fatal(format!("{}: {e}", file.display())))?;
    if json {
        print_json(to_value(&report));
    } else if report.valid {
        println!("valid");
    } else {
        println!("invalid");
        for v in &report.violations {
            let at: Vec<&str> = v
                .witness_elems()
                .iter()
                .map(|&x| raw.names[x].as_str())
                .collect();
            println!("{} at ({})", v.axiom.id(), at.join(", "));
        }
    }
    Ok(if report.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn analyze(arg: &str, json: bool) -> Result<ExitCode, Fatal> {
    let a = load_instance(arg)?;
    let e = analyze_elements(&a);
    let c = check_conditions(&a);
    if json {
        print_json(json!({
            "names": a.names(),
            "analysis": to_value(&e),
            "conditions": to_value(&c),
        }));
    } else {
        print!("{}", render::analysis(a.names(), &e, &c));
    }
    Ok(ExitCode::SUCCESS)
}

fn graph(arg: &str, shape_only: bool, dot: Option<&Path>, json: bool) -> Result<ExitCode, Fatal> {
    let a = load_instance(arg)?;
    let g = posemiring_zdgraph(&a);
    let shape = classify_shape(&g);
    if let Some(path) = dot {
        write_output(Some(path), &export_dot(&g, a.names()))?;
    }
    if json {
        print_json(json!({ "names": a.names(), "graph": to_value(&g), "shape": to_value(&shape) }));
    } else {
        print!("{}", render::graph(a.names(), &g, &shape, shape_only));
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_table(
    a: &posr_core::PoSemiringTable,
    output: Option<&Path>,
    json: bool,
) -> Result<ExitCode, Fatal> {
    if json {
        print_json(to_value(a));
        if output.is_some() {
            write_output(output, &write_psr(a))?;
        }
    } else {
        write_output(output, &write_psr(a))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn iso(left: &str, right: &str, json: bool) -> Result<ExitCode, Fatal> {
    let a = load_instance(left)?;
    let b = load_instance(right)?;
    let found = find_isomorphism(&a, &b);
    if json {
        print_json(json!({ "isomorphic": found.is_some(), "map": found }));
    } else {
        match &found {
            Some(perm) => {
                println!("isomorphic");
                let pairs: Vec<String> = perm
                    .iter()
                    .enumerate()
                    .map(|(x, &y)| format!("{}->{}", a.name(x), b.name(y)))
                    .collect();
                println!("{}", pairs.join(" "));
            }
            None => println!("non-isomorphic"),
        }
    }
    Ok(if found.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn enumerate(
    order: usize,
    mode: ModeArg,
    emit_dir: Option<&Path>,
    json: bool,
) -> Result<ExitCode, Fatal> {
    let mode = match mode {
        ModeArg::Fast => Mode::Fast,
        ModeArg::Naive => Mode::Naive,
    };
    let census = enumerate_posemirings(order, mode)?;
    let mut files = Vec::new();
    if let Some(dir) = emit_dir {
        std::fs::create_dir_all(dir).map_err(|e| Fatal(format!("{}: {e}", dir.display())))?;
        for a in &census.instances {
            let digest = Sha256::digest(canonical_form(a));
            let name = format!("{}.psr", &hex::encode(digest)[..16]);
            write_output(Some(&dir.join(&name)), &write_psr(a))?;
            files.push(name);
        }
    }
    let seconds = census.elapsed.as_secs_f64();
    if json {
        let mut v = json!({
            "order": census.order,
            "mode": to_value(&census.mode),
            "classes": census.count_up_to_iso,
            "labeled": census.count_labeled,
            "seconds": seconds,
        });
        if emit_dir.is_some() {
            v["files"] = json!(files);
        }
        print_json(v);
    } else {
        println!(
            "order={} classes={} labeled={} seconds={seconds:.3}",
            census.order, census.count_up_to_iso, census.count_labeled
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn ring(op: RingOp, arg: &str, shape_only: bool, json: bool) -> Result<ExitCode, Fatal> {
    let r = load_ring(arg)?;
    let names = r.names().to_vec();
    match op {
        RingOp::Ideals => {
            let ideals = enumerate_ring_ideals(&r);
            if json {
                print_json(to_value(&ideals));
            } else {
                for i in &ideals {
                    println!("{} = {}", i.label(&r), render::set(&names, &i.members));
                }
            }
        }
        RingOp::Semiring => {
            let s = ideal_semiring(&r)?;
            return emit_table(&s.table, None, json);
        }
        RingOp::Ag => {
            let (g, shape, s) = annihilating_ideal_graph(&r)?;
            let labels = s.table.names();
            if json {
                print_json(
                    json!({ "names": labels, "graph": to_value(&g), "shape": to_value(&shape) }),
                );
            } else {
                print!("{}", render::graph(labels, &g, &shape, shape_only));
            }
        }
        RingOp::Zdgraph => {
            let (g, shape) = ring_zdgraph(&r);
            if json {
                print_json(
                    json!({ "names": names, "graph": to_value(&g), "shape": to_value(&shape) }),
                );
            } else {
                print!("{}", render::graph(&names, &g, &shape, shape_only));
            }
        }
        RingOp::Radicals => {
            let rad = radicals(&r);
            if json {
                print_json(to_value(&rad));
            } else {
                println!(
                    "nilradical = {} {}",
                    rad.nilradical.label(&r),
                    render::set(&names, &rad.nilradical.members)
                );
                println!(
                    "jacobson = {} {}",
                    rad.jacobson.label(&r),
                    render::set(&names, &rad.jacobson.members)
                );
                println!("idempotents = {}", render::set(&names, &rad.idempotents));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn list_checks(json: bool) {
    if json {
        let checks: Vec<Value> = catalog()
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "statement": c.statement,
                    "scope": to_value(&c.scope()),
                    "annotations": c.annotations,
                })
            })
            .collect();
        let excluded: Vec<Value> = NOT_COVERED
            .iter()
            .map(|(id, why)| json!({ "id": id, "reason": why }))
            .collect();
        print_json(json!({ "checks": checks, "not_covered": excluded }));
        return;
    }
    for c in catalog() {
        let scope = to_value(&c.scope());
        println!(
            "{} [{}] {}",
            c.id,
            scope.as_str().unwrap_or_default(),
            c.statement
        );
    }
    for (id, why) in NOT_COVERED {
        println!("{id} not covered: {why}");
    }
}

fn theorems(
    corpus: Option<&str>,
    check: &str,
    report: ReportFormat,
    list: bool,
    json: bool,
) -> Result<ExitCode, Fatal> {
    let json = json || report == ReportFormat::Json;
    if list {
        list_checks(json);
        return Ok(ExitCode::SUCCESS);
    }
    let checks = select_checks(check)?;
    let instances = parse_corpus(corpus.expect("clap requires --corpus"))?;
    let result = run_catalog(&instances, &checks);
    if json {
        print_json(to_value(&result));
    } else {
        print!("{}", render::theorems(&result));
    }
    Ok(if result.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, Fatal> {
    let json = cli.json;
    match cli.command {
        Command::Verify { file } => verify(&file, json),
        Command::Analyze { instance } => analyze(&instance, json),
        Command::Graph {
            instance,
            shape,
            dot,
        } => graph(&instance, shape, dot.as_deref(), json),
        Command::Construct { spec, output } => {
            emit_table(&load_instance(&spec)?, output.as_deref(), json)
        }
        Command::Product {
            left,
            right,
            output,
        } => {
            let p = direct_product(&load_instance(&left)?, &load_instance(&right)?);
            emit_table(&p, output.as_deref(), json)
        }
        Command::Iso { left, right } => iso(&left, &right, json),
        Command::Enumerate {
            order,
            mode,
            emit_dir,
        } => enumerate(order, mode, emit_dir.as_deref(), json),
        Command::Ring { op, ring: r, shape } => ring(op, &r, shape, json),
        Command::Theorems {
            corpus,
            check,
            report,
            list,
        } => theorems(corpus.as_deref(), &check, report, list, json),
    }
}

fn main() -> ExitCode {
    // Exit quietly when the reader of stdout goes away, as in `posr ... | head`.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            eprintln!("posr: {msg}");
            ExitCode::from(2)
        }
    }
}
