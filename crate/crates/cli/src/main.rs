//! Command-line surface: every computation and every verification as a
//! reproducible batch command with machine-readable output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symdet::checks::{
    check_all, check_bijection, check_exactness, check_groebner, check_hilbert,
    check_path_determinant, pruned_resolution, CheckConfig, CheckReport,
};
use symdet::graph::{Forest, Graph};
use symdet::ideal::{
    edgeless_ideal, face_vector, hf_closed_form, hf_recursion, hf_ring, hilbert_from_faces,
    ideal_height, initial_ideal_of_minors, it_generators, path_determinant_rhs,
    SparseSymmetricMatrix,
};
use symdet::poly::{signed_cofactor, CompositeWeightOrder, VarSet};
use symdet::resolution::{
    betti_formula, characteristic_numbers, hilbert_series, BettiTable, GradedComplex,
};
use symdet::Error;

#[derive(Parser)]
#[command(
    name = "symdet",
    about = "Minors, degenerations and resolutions of graph-sparse symmetric matrices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph file (text: first line n, then `i j` lines; or JSON).
    #[arg(long, global = true)]
    graph: Option<PathBuf>,

    /// Spanning-forest override, same formats as the graph file.
    #[arg(long, global = true)]
    forest: Option<PathBuf>,

    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    out: Output,

    /// Prime modulus for randomized rank probes.
    #[arg(long, global = true, default_value_t = 2147483647)]
    prime: u64,

    /// Number of random trials per probe.
    #[arg(long, global = true, default_value_t = 10)]
    trials: usize,

    /// RNG seed; a fixed seed makes output byte-identical.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest degree for Hilbert comparisons (default 2n).
    #[arg(long, global = true)]
    dmax: Option<i64>,

    /// Cap on enumerated simple paths per vertex pair.
    #[arg(long, global = true, default_value_t = 100_000)]
    path_cap: usize,

    /// Cap on S-pairs per Gröbner verification.
    #[arg(long, global = true, default_value_t = 10_000)]
    pair_cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BettiMethod {
    /// Closed form in n and the component invariant.
    Formula,
    /// Prune the zero-specialized resolution and count summands.
    Prune,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti numbers of the minor ideal's quotient.
    Betti {
        #[arg(long, value_enum, default_value_t = BettiMethod::Formula)]
        method: BettiMethod,
    },
    /// Initial ideal of the minors under the composite weight order.
    InitIdeal,
    /// The pruned graded free resolution: matrices, twists, basis labels.
    Resolution,
    /// Codimension and degree from the Hilbert series.
    Degree,
    /// Height of the degenerated ideal via minimum vertex covers.
    Height,
    /// Characteristic numbers of smooth sparse quadrics.
    CharNumbers,
    /// Hilbert function of the minor ideal by all three routes.
    Hilbert,
    /// One cofactor against its simple-path expansion.
    PathDet {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Re-derive and cross-check the computed objects.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
}

#[derive(Subcommand, Clone, Copy)]
enum VerifyWhat {
    /// S-pair verification of the minor generating sets.
    Gb,
    /// Randomized rank probes of the pruned resolution.
    Exactness,
    /// The degree-preserving rewrite between the combinatorial ideals.
    Bijection,
    /// Hilbert function agreement across all routes.
    Hilbert,
    /// The cofactor path expansion on every vertex pair.
    Pathdet,
    /// Everything, including Betti, height and degree agreement.
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        // verification failures and broken internal guarantees
        Error::ContractViolation(_) | Error::RetryWithNewPrime { .. } => 1,
        // usage problems: bad files, bad arguments
        Error::Parse { .. } | Error::InvalidArgument(_) => 2,
        Error::ResourceLimit(_) => 3,
    }
}

fn load_graph(cli: &Cli) -> Result<Graph, Error> {
    let path = cli
        .graph
        .as_ref()
        .ok_or_else(|| Error::invalid("--graph FILE is required"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    symdet::io::parse_graph(&text)
}

fn load_forest(cli: &Cli, g: &Graph) -> Result<Forest, Error> {
    match &cli.forest {
        None => Ok(Forest::spanning(g)),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
            symdet::io::parse_forest(g, &text)
        }
    }
}

fn config(cli: &Cli) -> CheckConfig {
    CheckConfig {
        prime: cli.prime,
        trials: cli.trials,
        seed: cli.seed,
        dmax: cli.dmax,
        path_cap: cli.path_cap,
        pair_cap: cli.pair_cap,
    }
}

fn emit(cli: &Cli, json: serde_json::Value, tsv: String, text: String) {
    match cli.out {
        Output::Json => println!("{json}"),
        Output::Tsv => print!("{tsv}"),
        Output::Text => print!("{text}"),
    }
}

fn betti_text(table: &BettiTable) -> String {
    let mut out = String::new();
    for (&(i, j), &count) in table.entries() {
        out.push_str(&format!("beta_{{{i},{j}}} = {count}\n"));
    }
    out
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Betti { method } => {
            let g = load_graph(cli)?;
            let table = match method {
                BettiMethod::Formula => betti_formula(g.n(), g.d_invariant())?.table,
                BettiMethod::Prune => BettiTable::from_complex(&pruned_resolution(&g)?),
            };
            emit(cli, table.to_json(), table.to_tsv(), betti_text(&table));
            Ok(())
        }
        Command::InitIdeal => {
            let g = load_graph(cli)?;
            let t = load_forest(cli, &g)?;
            let m = SparseSymmetricMatrix::new(&g);
            let order = CompositeWeightOrder::for_graph_forest(&g, &t);
            let init = initial_ideal_of_minors(&m, &order)?;
            let combinatorial = it_generators(&t).substitute_zero(m.zeroed_slots());
            if init != combinatorial {
                return Err(Error::contract(
                    "initial ideal differs from the combinatorial generators",
                ));
            }
            let vars = *m.vars();
            let text: String = init
                .generators()
                .iter()
                .map(|g| format!("{}\n", g.display(&vars)))
                .collect();
            emit(cli, init.to_json(&vars), text.clone(), text);
            Ok(())
        }
        Command::Resolution => {
            let g = load_graph(cli)?;
            let pruned = pruned_resolution(&g)?;
            let json = resolution_json(&pruned);
            let text = resolution_text(&pruned);
            emit(cli, json, text.clone(), text);
            Ok(())
        }
        Command::Degree => {
            let g = load_graph(cli)?;
            let table = betti_formula(g.n(), g.d_invariant())?.table;
            let hs = hilbert_series(&table, g.n_variables())?;
            let json = serde_json::json!({"codim": hs.codimension, "degree": hs.degree});
            let tsv = format!("codim\tdegree\n{}\t{}\n", hs.codimension, hs.degree);
            let text = format!("codimension {}, degree {}\n", hs.codimension, hs.degree);
            emit(cli, json, tsv, text);
            Ok(())
        }
        Command::Height => {
            let g = load_graph(cli)?;
            let t = load_forest(cli, &g)?;
            let m = SparseSymmetricMatrix::new(&g);
            let ideal = it_generators(&t).substitute_zero(m.zeroed_slots());
            let height = ideal_height(&ideal)?;
            let json = serde_json::json!({"connected": g.is_connected(), "height": height});
            emit(
                cli,
                json,
                format!("height\n{height}\n"),
                format!("height {height}\n"),
            );
            Ok(())
        }
        Command::CharNumbers => {
            let g = load_graph(cli)?;
            let (first, second) =
                characteristic_numbers(g.n(), g.d_invariant(), g.is_connected())?;
            let json = serde_json::json!({"first": first, "second": second});
            let tsv = match second {
                Some(s) => format!("first\tsecond\n{first}\t{s}\n"),
                None => format!("first\tsecond\n{first}\t-\n"),
            };
            let text = match second {
                Some(s) => format!("tangent to 2 hyperplanes: {first}\ntangent to 3 hyperplanes: {s}\n"),
                None => format!("tangent to 2 hyperplanes: {first}\n"),
            };
            emit(cli, json, tsv, text);
            Ok(())
        }
        Command::Hilbert => {
            let g = load_graph(cli)?;
            let t = load_forest(cli, &g)?;
            let n = g.n();
            let vars = VarSet::new(n);
            let dmax = cli.dmax.unwrap_or(2 * n as i64);
            let faces = face_vector(&it_generators(&t), vars.num_x())?;
            let f_edgeless = face_vector(&edgeless_ideal(n), vars.num_x())?;
            if faces != f_edgeless {
                return Err(Error::contract("face vectors of I and I_T differ"));
            }
            let mut rows = Vec::new();
            let mut tsv = String::from("d\tclosed\trecursion\tfaces\n");
            let mut text = String::new();
            for d in 0..=dmax {
                let closed = hf_closed_form(n, d);
                let rec = hf_recursion(n, d);
                let from_faces =
                    hf_ring(vars.num_x() as i64, d) - hilbert_from_faces(&faces, d);
                if closed != rec || closed != from_faces {
                    return Err(Error::contract(format!(
                        "Hilbert routes disagree at degree {d}"
                    )));
                }
                tsv.push_str(&format!("{d}\t{closed}\t{rec}\t{from_faces}\n"));
                text.push_str(&format!("HF(I)({d}) = {closed}\n"));
                rows.push(serde_json::json!({
                    "d": d,
                    "closed_form": closed.to_string(),
                    "recursion": rec.to_string(),
                    "from_faces": from_faces.to_string(),
                }));
            }
            let json = serde_json::json!({"dmax": dmax, "agree": true, "rows": rows});
            emit(cli, json, tsv, text);
            Ok(())
        }
        Command::PathDet { k, l } => {
            let g = load_graph(cli)?;
            let m = SparseSymmetricMatrix::new(&g);
            let cofactor = signed_cofactor(m.matrix(), *k, *l)?;
            let expansion = path_determinant_rhs(&m, *k, *l, cli.path_cap)?;
            let equal = cofactor == expansion;
            let vars = *m.vars();
            let json = serde_json::json!({
                "k": k,
                "l": l,
                "equal": equal,
                "cofactor": cofactor.to_json(&vars),
                "path_expansion": expansion.to_json(&vars),
            });
            let text = format!(
                "cofactor({k},{l}) = {}\npath expansion = {}\nequal: {equal}\n",
                cofactor.display(&vars),
                expansion.display(&vars)
            );
            emit(cli, json, text.clone(), text);
            if equal {
                Ok(())
            } else {
                Err(Error::contract(format!(
                    "cofactor and path expansion differ at ({k},{l})"
                )))
            }
        }
        Command::Verify { what } => {
            let g = load_graph(cli)?;
            let t = load_forest(cli, &g)?;
            let cfg = config(cli);
            let reports = match what {
                VerifyWhat::Gb => vec![check_groebner(&g, &t, &cfg)?],
                VerifyWhat::Exactness => vec![check_exactness(&g, &cfg)?],
                VerifyWhat::Bijection => vec![check_bijection(&t)?],
                VerifyWhat::Hilbert => vec![check_hilbert(&t, &cfg)?],
                VerifyWhat::Pathdet => vec![check_path_determinant(&g, &cfg)?],
                VerifyWhat::All => check_all(&g, &t, &cfg)?,
            };
            emit_reports(cli, &reports);
            Ok(())
        }
    }
}

fn emit_reports(cli: &Cli, reports: &[CheckReport]) {
    let json = serde_json::json!({
        "checks": reports
            .iter()
            .map(|r| serde_json::json!({"name": r.name, "status": "pass", "detail": r.detail}))
            .collect::<Vec<_>>()
    });
    let mut tsv = String::from("check\tstatus\tdetail\n");
    let mut text = String::new();
    for r in reports {
        tsv.push_str(&format!("{}\tpass\t{}\n", r.name, r.detail));
        text.push_str(&format!("{}: pass ({})\n", r.name, r.detail));
    }
    emit(cli, json, tsv, text);
}

fn resolution_json(c: &GradedComplex) -> serde_json::Value {
    let vars = VarSet::new(c.n());
    let matrices: Vec<serde_json::Value> = (1..=3)
        .map(|i| {
            let m = c.map(i);
            let rows: Vec<serde_json::Value> = (0..m.rows())
                .map(|r| {
                    serde_json::Value::Array(
                        (0..m.cols()).map(|col| m.entry(r, col).to_json(&vars)).collect(),
                    )
                })
                .collect();
            serde_json::Value::Array(rows)
        })
        .collect();
    let twists: Vec<serde_json::Value> = (1..=3)
        .map(|i| serde_json::json!(c.map(i).col_twists()))
        .collect();
    let labels: Vec<serde_json::Value> = (1..=3)
        .map(|i| {
            serde_json::Value::Array(
                c.labels(i)
                    .iter()
                    .map(|l| serde_json::Value::String(l.json_label()))
                    .collect(),
            )
        })
        .collect();
    serde_json::json!({
        "matrices": matrices,
        "twists": twists,
        "basis_labels": labels,
    })
}

fn resolution_text(c: &GradedComplex) -> String {
    let vars = VarSet::new(c.n());
    let mut out = String::new();
    for i in 1..=3 {
        let m = c.map(i);
        out.push_str(&format!(
            "d_{i}: {} x {} (twist {})\n",
            m.rows(),
            m.cols(),
            m.col_twists().first().copied().unwrap_or_default()
        ));
        out.push_str(&format!(
            "  basis: {}\n",
            c.labels(i)
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
        for r in 0..m.rows() {
            let row: Vec<String> = (0..m.cols())
                .map(|col| m.entry(r, col).display(&vars).to_string())
                .collect();
            out.push_str(&format!("  [{}]\n", row.join(", ")));
        }
    }
    out
}
