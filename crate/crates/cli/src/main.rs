use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gencon::audit::{audit, sweep_bound};
use gencon::cases::{certify_all_with, two_trees};
use gencon::io::{
    emit_dot, emit_graph6, emit_json, parse_graph6_stream, parse_graph_auto, parse_triple,
    CertificateDocument, Report,
};
use gencon::lemma22::verify_lemma22;
use gencon::oracle::{kappa3, kappa_s};
use gencon::{verify_certificate, Error, ExtremalGraph, Graph, TreeCertificate};

/// Exact generalized 3-connectivity tools.
#[derive(Debug, Parser)]
#[command(name = "gencon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the extremal graph H(k).
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute κ₃ of a graph by exhaustive search.
    Kappa3 {
        #[arg(long)]
        input: PathBuf,
        /// Also print a tree packing for the minimizing triple.
        #[arg(long)]
        certificates: bool,
    },
    /// Compute κ(S) for one 3-set.
    KappaS {
        #[arg(long)]
        input: PathBuf,
        /// Three vertices, as ids or labels: `0,1,4` or `x1,x2,z1`.
        #[arg(long)]
        set: String,
    },
    /// Emit and check two-tree certificates for H(k).
    Certify(CertifyArgs),
    /// Check the edge bound and its equality conditions.
    Audit {
        #[arg(long)]
        input: PathBuf,
    },
    /// Rule out κ₃ = 2 for connected graphs of order 10 and size 12.
    #[command(name = "verify-lemma22")]
    VerifyLemma22 {
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check the edge bound on every graph of a graph6 stream.
    Sweep {
        /// Read graph6 lines from standard input.
        #[arg(long, required = true)]
        stdin_graph6: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[arg(long)]
    k: usize,
    /// One 3-set, as labels (`x1,x2,z1`) or ids.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    set: Option<String>,
    /// Every 3-set of H(k).
    #[arg(long)]
    all: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Json,
    Dot,
}

/// Exit 1 for a failed check, 2 for anything the user can fix.
enum Failure {
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CaseConstruction { .. } => Failure::Verification(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("gencon: verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("gencon: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Construct { k, format } => construct(k, format),
        Command::Kappa3 {
            input,
            certificates,
        } => run_kappa3(&input, certificates),
        Command::KappaS { input, set } => run_kappa_s(&input, &set),
        Command::Certify(args) => certify(args),
        Command::Audit { input } => run_audit(&input),
        Command::VerifyLemma22 { report } => run_lemma22(report.as_deref()),
        Command::Sweep { report, .. } => sweep(report.as_deref()),
    }
}

fn read_graph(path: &Path) -> Result<(Graph, Option<Vec<String>>), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_graph_auto(&text)?)
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn name(v: usize, labels: Option<&[String]>) -> String {
    labels.map_or_else(|| v.to_string(), |ls| ls[v].clone())
}

fn check(g: &Graph, cert: &TreeCertificate) -> Outcome {
    verify_certificate(g, cert).map_err(|v| Failure::Verification(format!("S = {}: {v}", cert.set)))
}

fn construct(k: usize, format: Format) -> Outcome {
    let h = ExtremalGraph::build(k)?;
    let text = match format {
        Format::Graph6 => emit_graph6(h.graph()) + "\n",
        Format::Json => emit_json(h.graph(), Some(&h.labels())) + "\n",
        Format::Dot => emit_dot(h.graph(), Some(&h.labels())),
    };
    print!("{text}");
    Ok(())
}

fn run_kappa3(input: &Path, certificates: bool) -> Outcome {
    let (g, labels) = read_graph(input)?;
    let labels = labels.as_deref();
    let k = kappa3(&g)?;
    println!("{}", k.value);
    let names: Vec<String> = k
        .argmin
        .vertices()
        .iter()
        .map(|&v| name(v, labels))
        .collect();
    println!("argmin {}", names.join(","));
    if certificates {
        match &k.witness.witness {
            Some(cert) => {
                check(&g, cert)?;
                let doc = CertificateDocument::with_labels(cert, None, labels);
                println!(
                    "{}",
                    serde_json::to_string(&doc).expect("documents serialize")
                );
            }
            None => println!("certificate none"),
        }
    }
    Ok(())
}

fn run_kappa_s(input: &Path, set: &str) -> Outcome {
    let (g, labels) = read_graph(input)?;
    let s = parse_triple(set, &g, labels.as_deref())?;
    let result = kappa_s(&g, s)?;
    if let Some(cert) = &result.witness {
        check(&g, cert)?;
    }
    println!("{}", result.kappa);
    Ok(())
}

fn certify(args: CertifyArgs) -> Outcome {
    let h = ExtremalGraph::build(args.k)?;
    let labels = h.labels();
    let doc = |c: &TreeCertificate| CertificateDocument::new(c, Some(&h));
    if let Some(set) = &args.set {
        let s = parse_triple(set, h.graph(), Some(&labels))?;
        let cert = two_trees(&h, s)?;
        check(h.graph(), &cert)?;
        let text = serde_json::to_string(&doc(&cert)).expect("documents serialize");
        return match &args.out {
            Some(path) => write_file(path, &(text + "\n")),
            None => {
                println!("{text}");
                Ok(())
            }
        };
    }

    let (report, certs) = certify_all_with(&h, args.out.is_some())?;
    for cert in &certs {
        check(h.graph(), cert)?;
    }
    if let Some(path) = &args.out {
        let body = json!({
            "k": h.k(),
            "count": certs.len(),
            "certificates": certs.iter().map(doc).collect::<Vec<_>>(),
        });
        write_file(
            path,
            &(serde_json::to_string(&body).expect("serializable") + "\n"),
        )?;
    }
    println!(
        "k={} triples={} verified={} certificates",
        report.k, report.triples, report.verified
    );
    for (tag, count) in &report.by_tag {
        println!("case {tag}: {count}");
    }
    if report.verified != report.triples {
        return Err(Failure::Verification(format!(
            "{} of {} triples certified",
            report.verified, report.triples
        )));
    }
    Ok(())
}

fn run_audit(input: &Path) -> Outcome {
    let (g, _) = read_graph(input)?;
    let a = audit(&g);
    let k = if g.order() >= 3 && g.is_connected() {
        Some(kappa3(&g)?.value)
    } else {
        None
    };
    let mut problems = Vec::new();
    if k == Some(2) && !a.bound_holds {
        problems.push("kappa3 = 2 but 5e < 6n");
    }
    let conditions = a.equality_conditions.m_prime_zero && a.equality_conditions.delta_is_3;
    if k == Some(2) && a.equality != conditions {
        problems.push("kappa3 = 2 but 5e = 6n does not match m' = 0 and max degree 3");
    }
    let body = json!({
        "audit": a,
        "edge_identity_holds": a.edge_identity_holds(),
        "degree_inequality_holds": a.degree_inequality_holds(),
        "kappa3": k,
        "problems": problems,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&body).expect("serializable")
    );
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(problems.join("; ")))
    }
}

fn run_lemma22(report_path: Option<&Path>) -> Outcome {
    let r = verify_lemma22()?;
    println!(
        "candidates: labelled={} connected={} classes={}",
        r.labelled_total, r.labelled_connected, r.classes
    );
    println!("counterexamples: {}", r.counterexamples.len());
    println!(
        "named triples: subdivided_k4={} subdivided_doubled_c4={}",
        r.subdivided_k4_triple_kappa, r.subdivided_doubled_c4_triple_kappa
    );
    if let Some(path) = report_path {
        let mut report = Report::new("verify-lemma22", json!({ "reduction": r.reduction }));
        for c in &r.candidates {
            report.result(c);
        }
        for c in &r.counterexamples {
            report.failure(c);
        }
        write_file(path, &(report.to_json() + "\n"))?;
    }
    if r.verified() {
        println!("verified");
        Ok(())
    } else {
        Err(Failure::Verification(
            "order-10 family has a graph with kappa3 != 1".into(),
        ))
    }
}

fn sweep(report_path: Option<&Path>) -> Outcome {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
    let graphs = parse_graph6_stream(&text)
        .map_err(|(line, e)| Failure::Usage(format!("line {line}: {e}")))?;
    let r = sweep_bound(graphs);
    println!(
        "graphs={} skipped={} kappa3_two={} violations={} equality_mismatches={}",
        r.graphs,
        r.skipped.len(),
        r.kappa3_two,
        r.violations.len(),
        r.equality_mismatches.len()
    );
    if let Some(path) = report_path {
        let mut report = Report::new("sweep", json!({ "graphs": r.graphs }));
        report.result(&json!({
            "kappa3_histogram": r.kappa3_histogram,
            "kappa3_two": r.kappa3_two,
            "min_ratio": r.min_ratio,
            "skipped": r.skipped,
        }));
        for v in &r.violations {
            report.failure(&json!({ "kind": "bound", "graph": v }));
        }
        for v in &r.equality_mismatches {
            report.failure(&json!({ "kind": "equality", "graph": v }));
        }
        write_file(path, &(report.to_json() + "\n"))?;
    }
    if r.violations.is_empty() && r.equality_mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification("bound counterexample found".into()))
    }
}
