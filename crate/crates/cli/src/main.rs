//! Command-line front end for the clique-complex invariant library.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use whitney::bench::{render_tsv, run_bench, BenchAlgo};
use whitney::fcalc::{
    curvature_report, euler_characteristic, f_function_gb, f_function_ph, f_vector_bruteforce,
    index_report, verify_ph_identity,
};
use whitney::generators::{
    barycentric, complete, cycle, erdos_renyi, join, path, star, torus_16, wheel,
};
use whitney::intersection::{f_matrix_bruteforce, f_matrix_ph, f_matrix_ph_with_cutoff, FMatrix};
use whitney::io::{read_graph, render_edge_list, write_graph};
use whitney::{Error, FVector, Graph, Result, UniPoly, VertexFunction};

use whitney_cli::reports::{
    CurvatureEntry, CurvatureJson, EulerReport, FVectorReport, IndexEntry, IndicesReport, WuReport,
};

#[derive(Parser)]
#[command(
    name = "whitney",
    version,
    about = "Exact clique-complex invariants of finite simple graphs"
)]
struct Cli {
    /// Cap the worker-thread count (results never depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// Direct clique enumeration (the oracle).
    Brute,
    /// Unit-sphere integration with exact rationals.
    Gb,
    /// Seeded sub-level-sphere recursion (default).
    Ph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WuAlgo {
    /// Enumerate intersecting clique pairs (the oracle).
    Brute,
    /// Seeded vertex-pair decomposition (default).
    Ph,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph; print it, or write it with -o (.json for JSON).
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file; the extension picks the format.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Count cliques: the f-vector and the counting polynomial f(t).
    Fvector {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Ph)]
        algo: Algo,
        /// Randomness seed for the ph route (ignored otherwise).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Euler characteristic chi = 1 - f(-1).
    Euler {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Per-vertex curvature; sums to chi exactly.
    Curvature {
        file: PathBuf,
        /// Also print each curvature polynomial K_v(t).
        #[arg(long)]
        poly: bool,
        #[arg(long)]
        json: bool,
    },
    /// Per-vertex index polynomials for a seeded random vertex ordering.
    Indices {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Intersection matrix, generating function f(t,s), and Wu
    /// characteristic.  With two files the graphs share vertex ids.
    Wu {
        file: PathBuf,
        file2: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = WuAlgo::Ph)]
        algo: WuAlgo,
        /// Randomness seed for the ph route (ignored otherwise).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sizes at or below this are enumerated directly (ph route).
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check the index-sum identity and the curvature collapse against the
    /// clique-enumeration oracle; nonzero exit on any mismatch.
    Verify {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
    },
    /// Time a route on seeded random graphs; prints a TSV table.
    Bench {
        /// Comma-separated vertex counts, e.g. 10,20,30,40,50.
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Algo::Ph)]
        algo: Algo,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Complete graph on m vertices.
    Complete { m: usize },
    /// Cycle on n >= 3 vertices.
    Cycle { n: usize },
    /// Path on n vertices.
    Path { n: usize },
    /// Star with n leaves (hub gets the last id).
    Star { n: usize },
    /// Wheel: cycle rim on n vertices plus a hub (last id).
    Wheel { n: usize },
    /// Random graph: each edge present independently with probability p.
    Er {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Triangulated torus on 16 vertices.
    Torus16,
    /// Barycentric refinement of the graph in INPUT.
    Barycentric { input: PathBuf },
    /// Join of two graphs: disjoint union plus all cross edges.
    Join { a: PathBuf, b: PathBuf },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };

    if let Some(threads) = cli.threads {
        // Only the first global-pool build can win; later calls are no-ops.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }

    match run(cli.command) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Io(_) | Error::Parse { .. } => 2,
                Error::InvalidParameter(_) => 64,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Gen { kind, output } => cmd_gen(kind, output.as_deref()),
        Command::Fvector {
            file,
            algo,
            seed,
            json,
        } => cmd_fvector(&file, algo, seed, json),
        Command::Euler { file, json } => cmd_euler(&file, json),
        Command::Curvature { file, poly, json } => cmd_curvature(&file, poly, json),
        Command::Indices { file, seed, json } => cmd_indices(&file, seed, json),
        Command::Wu {
            file,
            file2,
            algo,
            seed,
            cutoff,
            json,
        } => cmd_wu(&file, file2.as_deref(), algo, seed, cutoff, json),
        Command::Verify { file, seed } => cmd_verify(&file, seed),
        Command::Bench {
            n_list,
            p,
            samples,
            algo,
            seed,
        } => cmd_bench(&n_list, p, samples, algo, seed),
    }
}

fn cmd_gen(kind: GenKind, output: Option<&Path>) -> Result<()> {
    let g = match kind {
        GenKind::Complete { m } => complete(m)?,
        GenKind::Cycle { n } => cycle(n)?,
        GenKind::Path { n } => path(n)?,
        GenKind::Star { n } => star(n)?,
        GenKind::Wheel { n } => wheel(n)?,
        GenKind::Er { n, p, seed } => erdos_renyi(n, p, seed)?,
        GenKind::Torus16 => torus_16(),
        GenKind::Barycentric { input } => barycentric(&read_graph(&input)?).graph,
        GenKind::Join { a, b } => join(&read_graph(&a)?, &read_graph(&b)?),
    };
    match output {
        Some(path) => write_graph(path, &g),
        None => {
            print!("{}", render_edge_list(&g)?);
            Ok(())
        }
    }
}

/// Compute the counting polynomial by the chosen route and re-derive the
/// counts from it.
fn f_by_algo(g: &Graph, algo: Algo, seed: u64) -> Result<(FVector, UniPoly)> {
    let poly = match algo {
        Algo::Brute => f_vector_bruteforce(g).to_poly(),
        Algo::Gb => f_function_gb(g)?,
        Algo::Ph => f_function_ph(g, seed),
    };
    Ok((FVector::from_poly(&poly)?, poly))
}

fn algo_name(algo: Algo) -> &'static str {
    match algo {
        Algo::Brute => "brute",
        Algo::Gb => "gb",
        Algo::Ph => "ph",
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("report types always serialize")
    );
}

fn cmd_fvector(file: &Path, algo: Algo, seed: u64, json: bool) -> Result<()> {
    let g = read_graph(file)?;
    let (fvector, fpoly) = f_by_algo(&g, algo, seed)?;
    if json {
        print_json(&FVectorReport {
            n: g.n(),
            algo: algo_name(algo).to_string(),
            seed: (algo == Algo::Ph).then_some(seed),
            fvector,
            fpoly,
        });
    } else {
        println!("f-vector: {fvector}");
        println!("f = {fpoly}");
    }
    Ok(())
}

fn cmd_euler(file: &Path, json: bool) -> Result<()> {
    let g = read_graph(file)?;
    let chi = euler_characteristic(&g);
    if json {
        print_json(&EulerReport { euler: chi });
    } else {
        println!("{chi}");
    }
    Ok(())
}

fn cmd_curvature(file: &Path, poly: bool, json: bool) -> Result<()> {
    let g = read_graph(file)?;
    let report = curvature_report(&g)?;
    let chi = report.euler()?;
    if json {
        print_json(&CurvatureJson {
            entries: report
                .entries
                .iter()
                .map(|e| CurvatureEntry {
                    vertex: e.vertex.0,
                    curvature: e.curvature.to_string(),
                    poly: poly.then(|| e.poly.clone()),
                })
                .collect(),
            total: report.total().to_string(),
            euler: chi,
        });
    } else {
        for e in &report.entries {
            if poly {
                println!("{}\t{}\tK(t) = {}", e.vertex, e.curvature, e.poly);
            } else {
                println!("{}\t{}", e.vertex, e.curvature);
            }
        }
        println!("total = {} (chi = {chi})", report.total());
    }
    Ok(())
}

fn cmd_indices(file: &Path, seed: u64, json: bool) -> Result<()> {
    let g = read_graph(file)?;
    let f = VertexFunction::random(&g, seed);
    let report = index_report(&g, &f)?;
    if json {
        print_json(&IndicesReport {
            seed,
            entries: report
                .entries
                .iter()
                .map(|e| IndexEntry {
                    vertex: e.vertex.0,
                    index: e.index,
                    poly: e.poly.clone(),
                })
                .collect(),
            index_sum: report.index_sum(),
        });
    } else {
        for e in &report.entries {
            println!("{}\t{}\ti(t) = {}", e.vertex, e.index, e.poly);
        }
        println!("index sum = {}", report.index_sum());
    }
    Ok(())
}

fn cmd_wu(
    file: &Path,
    file2: Option<&Path>,
    algo: WuAlgo,
    seed: u64,
    cutoff: Option<usize>,
    json: bool,
) -> Result<()> {
    let g = read_graph(file)?;
    let h = match file2 {
        Some(p) => read_graph(p)?,
        None => g.clone(),
    };
    let poly = match algo {
        WuAlgo::Brute => f_matrix_bruteforce(&g, &h),
        WuAlgo::Ph => match cutoff {
            Some(c) => f_matrix_ph_with_cutoff(&g, &h, seed, c),
            None => f_matrix_ph(&g, &h, seed),
        },
    };
    let omega = poly.eval(&BigInt::from(-1), &BigInt::from(-1));
    let matrix = FMatrix::from_bipoly(&poly);
    if json {
        let rows = (0..matrix.rows())
            .map(|i| {
                (0..matrix.cols())
                    .map(|j| matrix.entry(i, j).to_string())
                    .collect()
            })
            .collect();
        print_json(&WuReport {
            algo: match algo {
                WuAlgo::Brute => "brute".to_string(),
                WuAlgo::Ph => "ph".to_string(),
            },
            seed: matches!(algo, WuAlgo::Ph).then_some(seed),
            matrix: rows,
            poly,
            omega: omega.to_string(),
        });
    } else {
        let tsv = matrix.to_tsv();
        if !tsv.is_empty() {
            println!("{tsv}");
        }
        println!("f(t,s) = {poly}");
        println!("omega = {omega}");
    }
    Ok(())
}

fn cmd_verify(file: &Path, seed: u64) -> Result<()> {
    let g = read_graph(file)?;
    let oracle = f_vector_bruteforce(&g).to_poly();
    let chi = BigInt::from(1) - oracle.eval_int(&BigInt::from(-1));

    let f = VertexFunction::random(&g, seed);
    let check = verify_ph_identity(&g, &f)?;
    if !check.holds() {
        return Err(Error::Inconsistency(format!(
            "index sum gives {} but clique enumeration gives {}",
            check.from_indices, check.from_cliques
        )));
    }
    println!("index identity: ok — f = {}", check.from_cliques);

    let total = curvature_report(&g)?.euler()?;
    if BigInt::from(total) != chi {
        return Err(Error::Inconsistency(format!(
            "curvature sum {total} but chi = {chi}"
        )));
    }
    println!("curvature sum: ok — chi = {total}");
    Ok(())
}

fn cmd_bench(ns: &[usize], p: f64, samples: usize, algo: Algo, seed: u64) -> Result<()> {
    let algo = match algo {
        Algo::Brute => BenchAlgo::Bruteforce,
        Algo::Gb => BenchAlgo::GaussBonnet,
        Algo::Ph => BenchAlgo::PoincareHopf,
    };
    let rows = run_bench(ns, p, samples, algo, seed)?;
    print!("{}", render_tsv(&rows));
    Ok(())
}
