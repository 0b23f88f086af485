use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graphsign::harness::{check_graph, describe_automorphism};
use graphsign::perm::cycle_notation;
use graphsign::*;

#[derive(Parser)]
#[command(name = "graphsign", version, about = "Orientation signs of multigraph automorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print both characters for every automorphism of a graph file.
    Compute {
        graph_file: PathBuf,
        /// Multiply theta_K by the sign of the component permutation
        /// (required for disconnected graphs).
        #[arg(long)]
        extended: bool,
        /// Print the chain and homology determinant factors.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Check theta_K = theta_S over every multigraph within the bounds.
    Verify {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Emit the report as a single JSON document.
        #[arg(long)]
        json: bool,
    },
    /// List every multigraph within the bounds with its odd-automorphism flag.
    Census {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Run the built-in golden examples and oracle cross-checks.
    Selftest,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    max_vertices: usize,
    #[arg(long)]
    max_edges: usize,
    #[arg(long, default_value_t = 1)]
    max_multiplicity: usize,
    #[arg(long)]
    loops: bool,
    #[arg(long)]
    connected_only: bool,
}

impl SweepArgs {
    fn params(&self) -> Result<SweepParams> {
        Ok(SweepParams::new(self.max_vertices, self.max_edges, self.max_multiplicity)?
            .loops(self.loops)
            .connected_only(self.connected_only))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { graph_file, extended, diagnostics } => compute(&graph_file, extended, diagnostics),
        Command::Verify { sweep, json } => verify(&sweep, json),
        Command::Census { sweep } => census(&sweep),
        Command::Selftest => Ok(selftest()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn signs(v: &[Sign]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn compute(path: &PathBuf, extended: bool, diagnostics: bool) -> Result<bool> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, message: format!("cannot read {}: {e}", path.display()) })?;
    let g = parse_graph(&text)?;
    let o = reference_orientation(&g);
    let b = fundamental_cycles(&g, &o, &spanning_forest(&g))?;
    let parts = components(&g);
    if !extended && parts.component_count > 1 {
        return Err(Error::Disconnected { components: parts.component_count });
    }
    let auts = enumerate_automorphisms(&g);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "# graph {}  automorphisms={} h1_dimension={} components={}",
        g.to_compact(),
        auts.len(),
        b.dimension(),
        parts.component_count
    );
    let mut all_agree = true;
    for (i, a) in auts.iter().enumerate() {
        let s = induced_signed_edge_perm(&g, &o, a);
        let k = if extended { theta_k_extended(&g, &o, &b, a)? } else { theta_k(&g, &o, &b, a)? };
        let ts = theta_s(&g, &o, a);
        all_agree &= k == ts;
        let _ = writeln!(
            out,
            "{i}\tP_V={}\tsign(P_V)={}\tsign(|P_E|)={}\teps={}\ttheta_K={k}\ttheta_S={ts}\tagree={}",
            cycle_notation(a.vertex_perm()),
            permutation_sign(a.vertex_perm()),
            s.unsigned_sign(),
            signs(&s.edge_sign),
            k == ts
        );
        if diagnostics {
            let d = determinant_relation_check(&g, &o, &b, a)?;
            let _ = writeln!(
                out,
                "\tdet_C1={}\tdet_C0={}\tdet_H1={}\tcomponent_sign={}\trelation={}",
                d.chain_edges, d.chain_vertices, d.homology, d.components, d.relation_holds
            );
        }
    }
    print!("{out}");
    Ok(all_agree)
}

fn verify(args: &SweepArgs, json: bool) -> Result<bool> {
    let report = sweep_verify(args.params()?);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    eprintln!("elapsed={:.3}s", report.elapsed.as_secs_f64());
    Ok(report.is_success())
}

fn census(args: &SweepArgs) -> Result<bool> {
    let mut total = 0u64;
    let mut odd = 0u64;
    for (g, is_odd) in census_orientable(args.params()?) {
        total += 1;
        odd += u64::from(is_odd);
        println!("{}\t{}", g.to_compact(), is_odd);
    }
    println!("# graphs={total}");
    println!("# odd={odd}");
    println!("# orientable={}", total - odd);
    Ok(true)
}

fn selftest() -> bool {
    let mut ok = true;
    let mut line = |passed: bool, name: &str, detail: &str| {
        ok &= passed;
        println!("{}\t{name}\t{detail}", if passed { "ok" } else { "FAIL" });
    };

    for c in golden_checks() {
        line(c.passed, c.name, &c.detail);
    }

    // Chain-level determinants against their closed forms.
    for text in ["v 1\ne 0 0", "v 3\ne 0 1\ne 1 2\ne 2 0", "v 2\ne 0 1\ne 0 1", "v 3\ne 0 1\ne 1 2"] {
        let g = parse_graph(text).expect("built-in graph");
        let o = reference_orientation(&g);
        let b = fundamental_cycles(&g, &o, &spanning_forest(&g)).expect("forest spans");
        let mut bad = Vec::new();
        for a in enumerate_automorphisms(&g) {
            let s = induced_signed_edge_perm(&g, &o, &a);
            let closed_c1 = i64::from((s.unsigned_sign() * s.sign_product()).value());
            let closed_c0 = i64::from(permutation_sign(a.vertex_perm()).value());
            match determinant_relation_check(&g, &o, &b, &a) {
                Ok(d) if d.relation_holds && d.chain_edges == closed_c1.into() && d.chain_vertices == closed_c0.into() => {}
                _ => bad.push(describe_automorphism(&a)),
            }
        }
        line(bad.is_empty(), "determinant relation", &format!("{} {}", g.to_compact(), bad.join(" ")));
    }

    let params = SweepParams::new(4, 4, 2).expect("valid params").loops(true);
    let report = sweep_verify(params);
    line(
        report.is_success(),
        "sweep n<=4 |E|<=4 mult<=2 loops",
        &format!("graphs={} automorphisms={}", report.graphs_checked, report.automorphisms_checked),
    );

    let single = check_graph(0, &parse_graph("v 4\ne 0 1\ne 2 3").expect("built-in graph"));
    line(single.is_success(), "disconnected component swap", &format!("automorphisms={}", single.automorphisms_checked));
    ok
}
