//! Command-line front end: chordality checks, dismantling decisions with
//! certificates, homology signatures, tree models, generators, the taut
//! catalog and the verification sweeps.

use std::process::ExitCode;

use taut::complex::{independence_complex, SimplicialComplex};
use taut::dismantle::{self, DecideOptions, DismantleCertificate, Policy};
use taut::error::Error;
use taut::explorer;
use taut::graph::Graph;
use taut::homology::{self, CoefField, HomotopySignature};
use taut::io;
use taut::treemodel::{self, RootedTreeModel};

const USAGE: &str = "\
taut — dismantling and homotopy classification of independence complexes of chordal graphs

USAGE: taut <COMMAND> [OPTIONS]

COMMANDS:
  check      <INPUT>              chordality test
  decide     <INPUT>              full report: chordality, classification, certificate
  core       <INPUT>              dismantling certificate and core
  certify    <INPUT> <CERT.json>  replay a certificate produced by `core`/`decide`
  betti      <INPUT>              reduced Betti numbers (graph input: of Ind(G))
  wedge      <INPUT>              homotopy signature by the wedge recursions
  treemodel  <INPUT>              emit the clique tree in tree-model format
  trgood     <INPUT> --root R     find a rooted-model good pair and verify it
  gen        <chordal|forest|matching|fixture>  generators, edge list to stdout
  explore                         catalog taut chordal graphs by signature
  sweep      <SUITE>              verification suites (see `taut sweep help`)

INPUT is a file path (.edges, .facets, .tree; override with --format) or
--fixture <NAME> with one of: k3_k2, triangle_chain_7, m1..m4, p2..p7.

COMMON OPTIONS:
  --json                  machine-readable output
  --policy lex|seed:<N>   good-pair choice for dismantling (default lex)
  --oracle                also run the homology oracle in `decide`
  --unsafe                allow dismantling non-chordal inputs (reported as
                          dismantlable/taut, never contractible/sphere)
  --seed <N>              seed for randomized generators and suites
  --jobs <N>              worker threads for sweeps
  --field gf2|gf:<P>      coefficient field for `betti`
  --simplicial <V>        in `wedge`: use the simplicial-vertex identity at V
  --model <FILE>          in `trgood`: rooted model instead of the clique tree
  --root <R>              in `trgood`: root node id (default 0)
  --model-out <FILE>      in `gen chordal`: also write the witness tree model
  --n-max <N>, --n <N>, --k <N>, --fill <F>, --trials <N>   sizes

EXIT: 0 ok, 1 property violation or failed verification, 2 usage error.
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Flag-style arguments, collected in one pass so every subcommand shares
/// the same syntax.
struct Opts {
    positional: Vec<String>,
    json: bool,
    unsafe_mode: bool,
    oracle: bool,
    policy: Policy,
    seed: u64,
    jobs: Option<usize>,
    fixture: Option<String>,
    format: Option<String>,
    field: CoefField,
    simplicial: Option<usize>,
    model: Option<String>,
    root: Option<usize>,
    n: Option<usize>,
    n_max: Option<usize>,
    k: Option<usize>,
    fill: f64,
    trials: Option<u64>,
    model_out: Option<String>,
}

fn parse_opts(args: &[String]) -> Result<Opts, String> {
    let mut opts = Opts {
        positional: vec![],
        json: false,
        unsafe_mode: false,
        oracle: false,
        policy: Policy::Lexicographic,
        seed: 0,
        jobs: None,
        fixture: None,
        format: None,
        field: CoefField::Gf2,
        simplicial: None,
        model: None,
        root: None,
        n: None,
        n_max: None,
        k: None,
        fill: 0.5,
        trials: None,
        model_out: None,
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut value = |name: &str| {
            it.next()
                .cloned()
                .ok_or_else(|| format!("{name} needs a value"))
        };
        match arg.as_str() {
            "--json" => opts.json = true,
            "--unsafe" => opts.unsafe_mode = true,
            "--oracle" => opts.oracle = true,
            "--policy" => {
                let v = value("--policy")?;
                opts.policy = if v == "lex" {
                    Policy::Lexicographic
                } else if let Some(seed) = v.strip_prefix("seed:") {
                    Policy::Seeded(seed.parse().map_err(|_| "bad --policy seed")?)
                } else {
                    return Err(format!("unknown policy {v:?} (use lex or seed:<n>)"));
                };
            }
            "--seed" => opts.seed = value("--seed")?.parse().map_err(|_| "bad --seed")?,
            "--jobs" => opts.jobs = Some(value("--jobs")?.parse().map_err(|_| "bad --jobs")?),
            "--fixture" => opts.fixture = Some(value("--fixture")?),
            "--format" => opts.format = Some(value("--format")?),
            "--field" => {
                let v = value("--field")?;
                opts.field = if v == "gf2" {
                    CoefField::Gf2
                } else if let Some(p) = v.strip_prefix("gf:") {
                    CoefField::Gf(p.parse().map_err(|_| "bad --field prime")?)
                } else {
                    return Err(format!("unknown field {v:?} (use gf2 or gf:<p>)"));
                };
            }
            "--simplicial" => {
                opts.simplicial = Some(value("--simplicial")?.parse().map_err(|_| "bad vertex")?)
            }
            "--model" => opts.model = Some(value("--model")?),
            "--root" => opts.root = Some(value("--root")?.parse().map_err(|_| "bad --root")?),
            "--n" => opts.n = Some(value("--n")?.parse().map_err(|_| "bad --n")?),
            "--n-max" => opts.n_max = Some(value("--n-max")?.parse().map_err(|_| "bad --n-max")?),
            "--k" => opts.k = Some(value("--k")?.parse().map_err(|_| "bad --k")?),
            "--fill" => opts.fill = value("--fill")?.parse().map_err(|_| "bad --fill")?,
            "--trials" => {
                opts.trials = Some(value("--trials")?.parse().map_err(|_| "bad --trials")?)
            }
            "--model-out" => opts.model_out = Some(value("--model-out")?),
            other if other.starts_with("--") => return Err(format!("unknown option {other}")),
            other => opts.positional.push(other.to_string()),
        }
    }
    Ok(opts)
}

fn run(args: Vec<String>) -> Result<ExitCode, String> {
    let Some(command) = args.first().cloned() else {
        eprint!("{USAGE}");
        return Ok(ExitCode::from(2));
    };
    if command == "help" || command == "--help" || command == "-h" {
        print!("{USAGE}");
        return Ok(ExitCode::SUCCESS);
    }
    let opts = parse_opts(&args[1..])?;
    if let Some(jobs) = opts.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    match command.as_str() {
        "check" => cmd_check(&opts),
        "decide" => cmd_decide(&opts),
        "core" => cmd_core(&opts),
        "certify" => cmd_certify(&opts),
        "betti" => cmd_betti(&opts),
        "wedge" => cmd_wedge(&opts),
        "treemodel" => cmd_treemodel(&opts),
        "trgood" => cmd_trgood(&opts),
        "gen" => cmd_gen(&opts),
        "explore" => cmd_explore(&opts),
        "sweep" => cmd_sweep(&opts),
        other => Err(format!("unknown command {other:?}; see `taut help`")),
    }
}

// ---------------------------------------------------------------------------
// Input handling

enum Input {
    Graph(Graph),
    Complex(SimplicialComplex),
}

fn load_input(opts: &Opts) -> Result<Input, String> {
    if let Some(name) = &opts.fixture {
        let g = explorer::fixture(name)
            .ok_or_else(|| format!("unknown fixture {name:?}; see `taut help`"))?;
        return Ok(Input::Graph(g));
    }
    let Some(path) = opts.positional.first() else {
        return Err("missing input (file path or --fixture <name>)".into());
    };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let kind = opts.format.clone().unwrap_or_else(|| {
        if path.ends_with(".facets") {
            "facets".into()
        } else if path.ends_with(".tree") {
            "tree".into()
        } else {
            "edges".into()
        }
    });
    match kind.as_str() {
        "edges" => Ok(Input::Graph(io::parse_edge_list(&text).map_err(err_str)?)),
        "facets" => Ok(Input::Complex(io::parse_facets(&text).map_err(err_str)?)),
        "tree" => Err("tree-model files are consumed through `trgood --model`".into()),
        other => Err(format!("unknown format {other:?} (edges, facets, tree)")),
    }
}

fn load_graph(opts: &Opts) -> Result<Graph, String> {
    match load_input(opts)? {
        Input::Graph(g) => Ok(g),
        _ => Err("this command needs a graph input".into()),
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

fn signature_json(sig: &HomotopySignature) -> serde_json::Value {
    serde_json::json!({
        "kind": if sig.is_contractible() { "contractible" } else { "wedge" },
        "betti": sig.betti_from_dim0(),
        "reduced_b_neg1": sig.betti_neg1(),
        "display": sig.to_string(),
    })
}

// ---------------------------------------------------------------------------
// Subcommands

fn cmd_check(opts: &Opts) -> Result<ExitCode, String> {
    let g = load_graph(opts)?;
    let chordal = taut::chordal::is_chordal(&g);
    if opts.json {
        println!(
            "{}",
            serde_json::json!({"n": g.n(), "m": g.edge_count(), "chordal": chordal})
        );
    } else {
        println!("n={} m={} chordal={}", g.n(), g.edge_count(), chordal);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decide(opts: &Opts) -> Result<ExitCode, String> {
    let g = load_graph(opts)?;
    let report = dismantle::decide_with(
        &g,
        DecideOptions {
            policy: opts.policy,
            oracle: opts.oracle,
            allow_non_chordal: opts.unsafe_mode,
        },
    );
    if opts.json {
        println!(
            "{}",
            serde_json::to_string(&report).map_err(|e| e.to_string())?
        );
    } else {
        println!("chordal:        {}", report.chordal);
        println!("classification: {}", report.classification.as_str());
        if let Some(k) = report.k {
            println!("sphere:         S^{} (core is M_{k})", k as isize - 1);
        }
        println!(
            "core:           {} vertices, {} edges",
            report.core.n(),
            report.core.edges.len()
        );
        println!("steps:          {}", report.certificate.len());
        if let Some(dismantlable) = report.dismantlable {
            println!("dismantlable:   {dismantlable}");
        }
        if let Some(taut) = report.taut {
            println!("taut:           {taut}");
        }
        if let Some(betti) = &report.betti {
            println!("betti (dim 0+): {betti:?}");
        }
        println!("elapsed_ms:     {:.3}", report.elapsed_ms);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_core(opts: &Opts) -> Result<ExitCode, String> {
    let g = load_graph(opts)?;
    if !taut::chordal::is_chordal(&g) && !opts.unsafe_mode {
        return Err("input is not chordal (pass --unsafe to dismantle anyway)".into());
    }
    let cert = dismantle::core(&g, opts.policy);
    if opts.json {
        println!(
            "{}",
            serde_json::to_string(&cert).map_err(|e| e.to_string())?
        );
    } else {
        for step in &cert.steps {
            println!("remove {} (witness {})", step.removed, step.witness);
        }
        println!(
            "core: vertices {:?} edges {:?}",
            cert.core.vertices, cert.core.edges
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(opts: &Opts) -> Result<ExitCode, String> {
    let g = load_graph(opts)?;
    // With --fixture the certificate is the only positional argument.
    let cert_idx = if opts.fixture.is_some() { 0 } else { 1 };
    let cert_path = opts
        .positional
        .get(cert_idx)
        .ok_or("usage: taut certify <input> <certificate.json>")?;
    let text = std::fs::read_to_string(cert_path).map_err(|e| format!("{cert_path}: {e}"))?;
    let cert: DismantleCertificate =
        serde_json::from_str(&text).map_err(|e| format!("{cert_path}: {e}"))?;
    match dismantle::verify_certificate_detailed(&g, &cert) {
        Ok(()) => {
            if opts.json {
                println!("{}", serde_json::json!({"valid": true}));
            } else {
                println!(
                    "certificate valid: {} steps to a core of {} vertices",
                    cert.steps.len(),
                    cert.core.n()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(failure) => {
            if opts.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "valid": false,
                        "failed_step": failure.index,
                        "reason": failure.reason,
                    })
                );
            } else {
                println!(
                    "certificate INVALID at step {}: {}",
                    failure.index, failure.reason
                );
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_betti(opts: &Opts) -> Result<ExitCode, String> {
    let complex = match load_input(opts)? {
        Input::Graph(g) => independence_complex(&g),
        Input::Complex(k) => k,
    };
    let sig = homology::reduced_betti(&complex, opts.field).map_err(err_str)?;
    if opts.json {
        println!("{}", signature_json(&sig));
    } else {
        println!("{sig}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_wedge(opts: &Opts) -> Result<ExitCode, String> {
    let g = load_graph(opts)?;
    let sig = match opts.simplicial {
        Some(v) => homology::wedge_via_simplicial(&g, v).map_err(err_str)?,
        None => homology::wedge_decomposition(&g).map_err(err_str)?,
    };
    if opts.json {
        println!("{}", signature_json(&sig));
    } else {
        println!("{sig}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_treemodel(opts: &Opts) -> Result<ExitCode, String> {
    let g = load_graph(opts)?;
    let t = treemodel::clique_tree(&g).map_err(err_str)?;
    print!("{}", io::format_tree_model(&t));
    Ok(ExitCode::SUCCESS)
}

fn cmd_trgood(opts: &Opts) -> Result<ExitCode, String> {
    let g = load_graph(opts)?;
    let model = match &opts.model {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            io::parse_tree_model(&text).map_err(err_str)?
        }
        None => treemodel::clique_tree(&g).map_err(err_str)?,
    };
    let root = opts.root.unwrap_or(0);
    let rooted = RootedTreeModel { model, root };
    let pair = treemodel::find_tr_good_pair(&g, &rooted).map_err(err_str)?;
    let verified = treemodel::is_tr_good(&rooted, &g, pair.x, pair.y);
    if opts.json {
        println!(
            "{}",
            serde_json::json!({"x": pair.x, "y": pair.y, "root": root, "verified": verified})
        );
    } else {
        println!(
            "rooted-model good pair (x={}, y={}) at root {root}; verified={verified}",
            pair.x, pair.y
        );
    }
    Ok(if verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_gen(opts: &Opts) -> Result<ExitCode, String> {
    let kind = opts
        .positional
        .first()
        .ok_or("usage: taut gen <chordal|forest|matching|fixture> ...")?;
    let graph = match kind.as_str() {
        "chordal" => {
            let n = opts.n.ok_or("gen chordal needs --n")?;
            let (g, model) = taut::chordal::random_chordal(n, opts.fill, opts.seed);
            if let Some(path) = &opts.model_out {
                std::fs::write(path, io::format_tree_model(&model))
                    .map_err(|e| format!("{path}: {e}"))?;
            }
            g
        }
        "forest" => {
            let n = opts.n.ok_or("gen forest needs --n")?;
            taut::chordal::random_forest(n, opts.seed)
        }
        "matching" => explorer::matching(opts.k.ok_or("gen matching needs --k")?),
        "fixture" => {
            let name = opts
                .positional
                .get(1)
                .ok_or("usage: taut gen fixture <name>")?;
            explorer::fixture(name).ok_or_else(|| format!("unknown fixture {name:?}"))?
        }
        other => return Err(format!("unknown generator {other:?}")),
    };
    print!("{}", io::format_edge_list(&graph));
    Ok(ExitCode::SUCCESS)
}

fn cmd_explore(opts: &Opts) -> Result<ExitCode, String> {
    let n_max = opts.n_max.unwrap_or(6);
    let catalog = explorer::taut_catalog(n_max).map_err(err_str)?;
    if opts.json {
        let groups: Vec<serde_json::Value> = catalog
            .groups
            .iter()
            .map(|g| {
                serde_json::json!({
                    "signature": signature_json(&g.signature),
                    "labeled": g.labeled.len(),
                    "isomorphism_classes": g.class_representatives.len(),
                    "representatives": g.class_representatives.iter()
                        .map(|r| serde_json::json!({"n": r.n(), "edges": r.edges()}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        println!("{}", serde_json::json!({"n_max": n_max, "groups": groups}));
    } else {
        println!("taut chordal graphs with at most {n_max} vertices, by homotopy signature:");
        for group in &catalog.groups {
            println!(
                "  {:<24} labeled {:>6}   iso classes {:>4}",
                group.signature.to_string(),
                group.labeled.len(),
                group.class_representatives.len()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// Sweeps

const SWEEP_USAGE: &str = "\
taut sweep <SUITE> — verification suites

  oracle        dismantling decisions vs the homology oracle, exhaustively
                over all labeled chordal graphs (--n-max, default 6)
  trgood        the rooted-model good pair search over every root (--n-max)
  copwin        chordality vs hereditary dismantlability (--n-max)
  identities    link/deletion identities on random graphs (--trials) and the
                wedge recursions exhaustively (--n-max)
  confluence    core uniqueness across randomized policies (--trials graphs)
  fixtures      built-in fixtures plus random forest cores (--trials)
  certificates  accept/reject checks on produced and mutated certificates
  perf          decide() timing growth over n = 250/500/1000
  all           every suite above
";

fn cmd_sweep(opts: &Opts) -> Result<ExitCode, String> {
    let Some(suite) = opts.positional.first().cloned() else {
        eprint!("{SWEEP_USAGE}");
        return Ok(ExitCode::from(2));
    };
    if suite == "help" {
        print!("{SWEEP_USAGE}");
        return Ok(ExitCode::SUCCESS);
    }
    let suites: Vec<&str> = if suite == "all" {
        vec![
            "oracle",
            "trgood",
            "copwin",
            "identities",
            "confluence",
            "fixtures",
            "certificates",
            "perf",
        ]
    } else {
        vec![suite.as_str()]
    };
    let mut all_ok = true;
    for name in suites {
        let ok = run_suite(name, opts)?;
        println!("{}: {}", name, if ok { "PASS" } else { "FAIL" });
        all_ok &= ok;
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_suite(name: &str, opts: &Opts) -> Result<bool, String> {
    let n_max = opts.n_max.unwrap_or(6);
    match name {
        "oracle" => {
            let sweep = explorer::oracle_sweep(n_max).map_err(err_str)?;
            println!(
                "  chordal graphs per n: {:?}; taut: {}",
                sweep.chordal_per_n,
                sweep.taut.len()
            );
            println!(
                "  mismatches: contractibility {}, sphere {}, taut-sphere-matching {}, core signature {}",
                sweep.contractibility_mismatches,
                sweep.sphere_mismatches,
                sweep.taut_sphere_nonmatching,
                sweep.core_signature_mismatches
            );
            let contractible_taut = sweep
                .taut
                .iter()
                .filter(|(_, sig)| sig.is_contractible())
                .count();
            println!("  taut graphs with contractible signature: {contractible_taut}");
            Ok(sweep.contractibility_mismatches == 0
                && sweep.sphere_mismatches == 0
                && sweep.taut_sphere_nonmatching == 0
                && sweep.core_signature_mismatches == 0
                && contractible_taut == 1)
        }
        "trgood" => {
            let sweep = explorer::tree_search_sweep(n_max).map_err(err_str)?;
            println!(
                "  graphs {} roots {} failures {}",
                sweep.graphs, sweep.roots, sweep.failures
            );
            Ok(sweep.failures == 0 && sweep.graphs > 0)
        }
        "copwin" => {
            let sweep = explorer::copwin_equivalence_sweep(n_max).map_err(err_str)?;
            println!("  graphs {} mismatches {}", sweep.graphs, sweep.mismatches);
            Ok(sweep.mismatches == 0)
        }
        "identities" => {
            let trials = opts.trials.unwrap_or(200);
            let eq1 = explorer::link_deletion_identity_check(trials, opts.seed);
            let wedge = explorer::wedge_agreement_sweep(n_max).map_err(err_str)?;
            println!(
                "  link/deletion: {}/{} ok; wedge oracle mismatches {}; simplicial mismatches {} over {}",
                eq1.trials - eq1.failures,
                eq1.trials,
                wedge.oracle_mismatches,
                wedge.simplicial_mismatches,
                wedge.simplicial_checked
            );
            Ok(eq1.failures == 0
                && wedge.oracle_mismatches == 0
                && wedge.simplicial_mismatches == 0)
        }
        "confluence" => {
            let graphs = opts.trials.unwrap_or(100);
            let report = explorer::core_confluence_check(graphs, 40, 10, opts.seed);
            println!(
                "  graphs {} exact {} fingerprint {} flagged {}",
                report.graphs,
                report.exact_comparisons,
                report.fingerprint_comparisons,
                report.flagged
            );
            Ok(report.flagged == 0)
        }
        "fixtures" => {
            let mut ok = true;
            for (name, g) in explorer::fixtures() {
                let chordal = taut::chordal::is_chordal(&g);
                let taut_flag = dismantle::is_taut(&g);
                let sig = homology::reduced_betti(&independence_complex(&g), CoefField::Gf2)
                    .map_err(err_str)?;
                println!("  {name}: chordal={chordal} taut={taut_flag} signature={sig}");
                ok &= chordal;
                if name == "k3_k2" || name == "triangle_chain_7" {
                    ok &= taut_flag && sig.betti_at(0) == 0 && sig.betti_at(1) == 2;
                }
            }
            let trials = opts.trials.unwrap_or(300);
            let forest = explorer::forest_core_check(trials, 50, opts.seed);
            println!(
                "  forests: {} trials, {} point cores, {:?} matching cores, {} violations",
                forest.trials,
                forest.single_vertex_cores,
                forest.matching_cores,
                forest.violations.len()
            );
            Ok(ok && forest.violations.is_empty())
        }
        "certificates" => {
            let (accepted, rejected, total) = certificate_suite(opts.seed);
            println!("  produced accepted {accepted}; mutants rejected {rejected}/{total}");
            Ok(accepted > 0 && total == 20 && rejected == total)
        }
        "perf" => {
            let mut ok = true;
            let mut t250 = 0.0;
            for n in [250usize, 500, 1000] {
                let (g, _) = taut::chordal::random_chordal(n, 0.9, opts.seed ^ 0x9e37);
                let mut best = f64::INFINITY;
                for _ in 0..3 {
                    let start = std::time::Instant::now();
                    let _ = dismantle::decide(&g);
                    best = best.min(start.elapsed().as_secs_f64());
                }
                println!("  decide n={n}: {:.1} ms", best * 1e3);
                if n == 250 {
                    t250 = best;
                } else if n == 1000 {
                    let cubic_bound = 2.0 * t250 * 64.0;
                    println!(
                        "  cubic bound from n=250: {:.1} ms; n=1000 under 30 s: {}",
                        cubic_bound * 1e3,
                        best < 30.0
                    );
                    ok &= best <= cubic_bound && best < 30.0;
                }
            }
            Ok(ok)
        }
        other => Err(format!("unknown suite {other:?}; see `taut sweep help`")),
    }
}

/// Builds certificates for a handful of graphs, accepts them, then checks
/// that twenty guaranteed-invalid mutations (wrong witness, wrong order,
/// truncation) are all rejected.
fn certificate_suite(seed: u64) -> (u64, u64, u64) {
    let mut graphs: Vec<Graph> = vec![
        explorer::path_graph(4),
        explorer::path_graph(7),
        explorer::k3_k2(),
    ];
    for i in 0..5 {
        graphs.push(taut::chordal::random_chordal(12, 0.5, seed ^ i).0);
    }
    let mut accepted = 0;
    let mut mutants: Vec<(Graph, DismantleCertificate)> = Vec::new();
    for g in &graphs {
        let cert = dismantle::core(g, Policy::Lexicographic);
        if dismantle::verify_certificate(g, &cert) {
            accepted += 1;
        }
        for mutant in mutate_certificate(&cert) {
            if mutants.len() < 20 {
                mutants.push((g.clone(), mutant));
            }
        }
    }
    let total = mutants.len() as u64;
    let rejected = mutants
        .iter()
        .filter(|(g, mutant)| !dismantle::verify_certificate(g, mutant))
        .count() as u64;
    (accepted, rejected, total)
}

fn mutate_certificate(cert: &DismantleCertificate) -> Vec<DismantleCertificate> {
    let mut out = Vec::new();
    if cert.steps.is_empty() {
        return out;
    }
    // Wrong witness: the removed vertex itself can never witness.
    let mut wrong_witness = cert.clone();
    wrong_witness.steps[0].witness = wrong_witness.steps[0].removed;
    out.push(wrong_witness);
    if cert.steps.len() >= 2 {
        // Wrong witness: an already-removed vertex.
        let mut dead_witness = cert.clone();
        dead_witness.steps[1].witness = cert.steps[0].removed;
        out.push(dead_witness);
        // Wrong order: remove a vertex twice.
        let mut twice = cert.clone();
        twice.steps[1].removed = cert.steps[0].removed;
        out.push(twice);
    }
    // Truncation: the terminal graph no longer matches the stated core.
    let mut truncated = cert.clone();
    truncated.steps.pop();
    out.push(truncated);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opts_parse() {
        let opts = parse_opts(&[
            "--policy".into(),
            "seed:7".into(),
            "--json".into(),
            "x.edges".into(),
        ])
        .unwrap();
        assert_eq!(opts.policy, Policy::Seeded(7));
        assert!(opts.json);
        assert_eq!(opts.positional, vec!["x.edges"]);
        assert!(parse_opts(&["--policy".into()]).is_err());
        assert!(parse_opts(&["--bogus".into()]).is_err());
    }
}
