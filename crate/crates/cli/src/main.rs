//! Command-line front end for bierkit.
//!
//! Exit codes: 0 success, 1 a boolean question answered "no" (or no obstruction
//! found), 2 input error, 3 refusal on a resource limit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bierkit::certify::{
    complementarity_check, pairing_equivalence, search_complementarity_surfaces, ComplementarityFailure, ReportOptions,
    DEFAULT_EXACT_CHI_LIMIT,
};
use bierkit::dual::{alexander_dual, bier_sphere, bier_sphere_f_vector, is_self_dual};
use bierkit::io::{build_report, read_facet_file, report_to_json, write_facets};
use bierkit::z2::{pair, ChainComplex};
use bierkit::{Error, SimplicialComplex};
use clap::{Parser, Subcommand};

const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "bierkit", version, about = "Bier spheres, mod-2 cohomology and nonembeddability certificates")]
struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true, env = "BIERKIT_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the f-vector and Euler characteristic.
    Fvector { file: PathBuf },
    /// Write the Alexander dual as a facet file.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the Bier sphere as a facet file, printing its f-vector and Euler characteristic.
    Bier {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Refuse to materialize spheres with more faces than this.
        #[arg(long, default_value_t = 1_000_000)]
        max_faces: u64,
    },
    /// Print the mod-2 Betti numbers.
    Homology { file: PathBuf },
    /// Complementarity, self-duality and neighborliness; exits 1 if complementarity fails.
    Check { file: PathBuf },
    /// Full nonembeddability certificate as JSON; exits 1 if no obstruction is found.
    Report {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Largest Kneser graph coloured exactly; larger graphs use the greedy bound.
        #[arg(long, default_value_t = DEFAULT_EXACT_CHI_LIMIT)]
        exact_chi_limit: usize,
        /// Include per-stage wall-clock timings (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Emit a fixture facet file.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Counting-cochain pairing with induced 1-spheres on a 2-dimensional complex;
    /// exits 1 if the equivalence fails.
    #[command(alias = "prop32")]
    SpherePairing { file: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// Boundary of the m-simplex.
    SimplexBoundary { m: usize },
    /// The simplex on n vertices.
    FullSimplex { n: usize },
    /// Boundary of the k-dimensional cross-polytope.
    Crosspolytope { k: usize },
    /// The n-cycle.
    Cycle { n: usize },
    /// First six-vertex complementarity surface found by exhaustive search.
    #[command(name = "rp2-6")]
    Rp26,
}

/// A failed run: message for stderr and exit code.
struct Failure(String, u8);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_limit() { EXIT_RESOURCE } else { EXIT_INPUT };
        Failure(e.to_string(), code)
    }
}

type Outcome = Result<u8, Failure>;

fn load(path: &Path) -> Result<SimplicialComplex, Failure> {
    read_facet_file(path).map_err(|e| Failure(format!("{}: {e}", path.display()), EXIT_INPUT))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display()), EXIT_INPUT))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fvector_line(k: &SimplicialComplex) -> Result<String, Failure> {
    let f = k.f_vector()?;
    Ok(format!("{f}; chi={}", f.euler_characteristic()))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Fvector { file } => {
            println!("{}", fvector_line(&load(&file)?)?);
            Ok(0)
        }
        Command::Dual { file, output } => {
            let k = load(&file)?;
            emit(&write_facets(&alexander_dual(&k)?), output.as_deref())?;
            Ok(0)
        }
        Command::Bier { file, output, max_faces } => {
            let k = load(&file)?;
            let f = bier_sphere_f_vector(&k)?;
            let summary = format!("{f}; chi={}", f.euler_characteristic());
            let refused = f.total_faces() > max_faces;
            // Stdout carries the facet file only when no -o is given.
            if output.is_some() || refused {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
            if refused {
                return Err(Failure(
                    format!("Bier sphere has {} faces, over the --max-faces cap of {max_faces}", f.total_faces()),
                    EXIT_RESOURCE,
                ));
            }
            let sphere = bier_sphere(k.n(), &k)?;
            emit(&write_facets(sphere.complex()), output.as_deref())?;
            Ok(0)
        }
        Command::Homology { file } => {
            let betti = ChainComplex::new(&load(&file)?).betti_numbers()?;
            let line: Vec<String> = betti.iter().map(|b| b.to_string()).collect();
            println!("{}", line.join(" "));
            Ok(0)
        }
        Command::Check { file } => {
            let k = load(&file)?;
            let c = complementarity_check(&k)?;
            match (c.witness, c.failure) {
                (Some(w), Some(ComplementarityFailure::Both)) => {
                    println!("complementarity: false (witness {w}: it and its complement are both faces)")
                }
                (Some(w), Some(ComplementarityFailure::Neither)) => {
                    println!("complementarity: false (witness {w}: neither it nor its complement is a face)")
                }
                _ => println!("complementarity: true"),
            }
            let self_dual = !k.is_void() && is_self_dual(&k)?;
            println!("self_dual: {self_dual}");
            match k.neighborliness() {
                Some(j) => println!("neighborliness: {j}"),
                None => println!("neighborliness: none"),
            }
            if !k.is_void() {
                let mnf = k.minimal_nonfaces()?;
                println!("minimal_nonfaces: {} (pairwise intersecting: {})", mnf.len(), mnf.is_intersecting());
            }
            Ok(if c.holds { 0 } else { EXIT_FALSE })
        }
        Command::Report { file, output, exact_chi_limit, timings } => {
            let k = load(&file)?;
            let doc = build_report(&k, &ReportOptions { exact_chi_limit }, timings)?;
            emit(&report_to_json(&doc), output.as_deref())?;
            Ok(if doc.certificate.index_lower.unwrap_or(0) > 0 { 0 } else { EXIT_FALSE })
        }
        Command::Gen { family, output } => {
            let k = match family {
                Family::SimplexBoundary { m } => SimplicialComplex::boundary_of_simplex(m)?,
                Family::FullSimplex { n } => SimplicialComplex::full_simplex(n)?,
                Family::Crosspolytope { k } => SimplicialComplex::cross_polytope_boundary(k)?,
                Family::Cycle { n } => SimplicialComplex::cycle(n)?,
                Family::Rp26 => search_complementarity_surfaces()
                    .into_iter()
                    .next()
                    .ok_or_else(|| Failure("search found no surface".into(), EXIT_FALSE))?,
            };
            emit(&write_facets(&k), output.as_deref())?;
            Ok(0)
        }
        Command::SpherePairing { file } => {
            let k = load(&file)?;
            let result = pairing_equivalence(&k, 1)?;
            let cx = ChainComplex::new(&k);
            let c = cx.counting_cochain(1)?;
            println!("counting_cochain_support: {}", c.support().len());
            println!("cocycle: {}", cx.is_cocycle(&c)?);
            println!("coboundary: {}", cx.is_coboundary(&c)?);
            let fundamental = cx.fundamental_class()?;
            if fundamental.valid {
                let square = pair(&cx.cup(&c, &c)?, &fundamental.chain)?;
                println!("cup_square_on_fundamental_class: {}", square as u8);
            } else {
                println!("cup_square_on_fundamental_class: undefined (facet sum is not a cycle)");
            }
            println!("spheres_checked: {}", result.spheres_checked);
            println!("with_disjoint_facet: {}", result.with_disjoint_facet);
            println!("pairing_one: {}", result.pairing_one);
            match result.counterexample {
                Some(s) => println!("equivalence: false (counterexample {s})"),
                None => println!("equivalence: true"),
            }
            Ok(if result.holds { 0 } else { EXIT_FALSE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(EXIT_INPUT);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot start thread pool: {e}");
            return ExitCode::from(EXIT_RESOURCE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(message, code)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
