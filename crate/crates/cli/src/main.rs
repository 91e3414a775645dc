//! Command-line frontend: Betti tables, belt listings, annihilator reports,
//! triangulation enumeration, catalog classification, and the end-to-end
//! verification run.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use torbelt::catalog::{
    self, classify, emit_planar_code, load_table2, parse_planar_code, CatalogEntry,
    CatalogSource, PolytopeJson,
};
use torbelt::enumerate::{enumerate_triangulations, filter_irreducible};
use torbelt::hochster::bigraded_betti;
use torbelt::poly::{DualTriangulation, FacetGraph};
use torbelt::torring::annihilator_dim;
use torbelt::verify::{run_criteria, Perturbation};

#[derive(Parser)]
#[command(name = "torbelt", version, about = "Belt structure, bigraded Betti numbers and Tor-algebra invariants of simple 3-polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bigraded Betti table of one polytope as CSV.
    Betti(InputArgs),
    /// List the 3-belts and 4-belts of one polytope.
    Belts(InputArgs),
    /// Print the annihilator report (beta14, belt diagonals, dim V) as JSON.
    Annihilator(InputArgs),
    /// Generate all 3-connected planar triangulations with N vertices.
    Enumerate {
        /// Vertex count, between 4 and 12.
        #[arg(long)]
        n: usize,
        /// Keep only triangulations without non-facial triangles.
        #[arg(long)]
        irreducible: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = EnumFormat::Planar)]
        format: EnumFormat,
    },
    /// Group a catalog by Betti tuple and report collisions with dim V.
    #[command(group(clap::ArgGroup::new("which").required(true).args(["table2", "catalog"])))]
    Classify {
        /// Use the built-in 25-row catalog.
        #[arg(long)]
        table2: bool,
        /// Catalog file: adjacency rows (one per line) or planar_code.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Run the full reproduction suite and print one line per check.
    VerifyPaper {
        /// Testing hook: corrupt one cell of the reference table, given as
        /// "i,j,delta"; any nonzero perturbation must make the run fail.
        #[arg(long, hide = true)]
        perturb: Option<String>,
    },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "table2_row"])))]
struct InputArgs {
    /// Input file; `-` reads standard input.
    input: Option<PathBuf>,
    /// Input format for the file.
    #[arg(long, value_enum, default_value_t = InputFormat::Rows)]
    format: InputFormat,
    /// Use row K (1-based) of the built-in 25-row catalog instead of a file.
    #[arg(long)]
    table2_row: Option<usize>,
    /// Which record of a multi-graph planar_code stream to use (0-based).
    #[arg(long, default_value_t = 0)]
    index: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    /// Adjacency rows: "bcd,acd,abd,abc".
    Rows,
    /// Binary planar_code stream.
    Planar,
    /// Polytope JSON: {"m":..., "labels":[...], "rotation":[[...]]}.
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    /// Binary planar_code stream.
    Planar,
    /// Adjacency rows, one triangulation per line.
    Rows,
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes, like other stream tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    init_thread_pool();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn init_thread_pool() {
    if let Ok(threads) = std::env::var("TORBELT_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Betti(input) => {
            let t = load_input(&input)?;
            print!("{}", bigraded_betti(&t).to_csv());
        }
        Command::Belts(input) => {
            let t = load_input(&input)?;
            let three = t.three_belts();
            println!("3-belts ({}):", three.len());
            for b in &three {
                let names: Vec<&str> = b.facets.iter().map(|&v| t.label(v)).collect();
                println!("  {{{}}}", names.join(","));
            }
            let four = t.four_belts();
            println!("4-belts ({}):", four.len());
            for b in &four {
                let cycle: Vec<&str> = b.cycle.iter().map(|&v| t.label(v)).collect();
                let diag = b.diagonals;
                println!(
                    "  {{{}}} diagonals {{{},{}}} {{{},{}}}",
                    cycle.join(","),
                    t.label(diag[0].0),
                    t.label(diag[0].1),
                    t.label(diag[1].0),
                    t.label(diag[1].1),
                );
            }
        }
        Command::Annihilator(input) => {
            let t = load_input(&input)?;
            let report = annihilator_dim(&t)?;
            println!("{}", report.to_json(&t));
        }
        Command::Enumerate { n, irreducible, format } => {
            let mut classes = enumerate_triangulations(n)?;
            if irreducible {
                classes = filter_irreducible(&classes);
            }
            match format {
                EnumFormat::Planar => {
                    let bytes = emit_planar_code(classes.iter())?;
                    std::io::stdout().write_all(&bytes)?;
                }
                EnumFormat::Rows => {
                    for rs in &classes {
                        let t = DualTriangulation::from_rotation_system(rs.clone())?;
                        println!("{}", t.to_adjacency_rows()?);
                    }
                }
            }
        }
        Command::Classify { table2, catalog } => {
            let mut entries = if table2 {
                load_table2()?
            } else if let Some(path) = catalog {
                load_catalog_file(&path)?
            } else {
                return Err("classify needs --table2 or --catalog FILE".into());
            };
            let report = classify(&mut entries)?;
            print!("{}", report.render());
        }
        Command::VerifyPaper { perturb } => {
            let perturbation = perturb.map(|s| parse_perturbation(&s)).transpose()?;
            let results = run_criteria(perturbation);
            let mut all_passed = true;
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("criterion {} ({}): {} - {}", r.index, r.name, status, r.detail);
                all_passed &= r.passed;
            }
            if !all_passed {
                return Ok(ExitCode::from(1));
            }
            println!("all checks passed");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_perturbation(text: &str) -> Result<Perturbation, Box<dyn std::error::Error>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("--perturb expects \"i,j,delta\", got {text:?}").into());
    }
    Ok(Perturbation {
        i: parts[0].trim().parse()?,
        j: parts[1].trim().parse()?,
        delta: parts[2].trim().parse()?,
    })
}

fn read_input(path: &PathBuf) -> std::io::Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path)
    }
}

fn load_input(input: &InputArgs) -> Result<DualTriangulation, Box<dyn std::error::Error>> {
    if let Some(row) = input.table2_row {
        return Ok(catalog::table2_row(row)?);
    }
    let Some(path) = &input.input else {
        return Err("no input: pass a file or --table2-row K".into());
    };
    let bytes = read_input(path)?;
    let t = match input.format {
        InputFormat::Rows => {
            let text = String::from_utf8(bytes)?;
            DualTriangulation::from_facet_graph(&FacetGraph::parse_adjacency_rows(&text)?)?
        }
        InputFormat::Planar => {
            let systems = parse_planar_code(&bytes)?;
            let rs = systems.into_iter().nth(input.index).ok_or_else(|| {
                format!("planar_code stream has no record with index {}", input.index)
            })?;
            DualTriangulation::from_rotation_system(rs)?
        }
        InputFormat::Json => {
            let json: PolytopeJson = serde_json::from_slice(&bytes)?;
            json.to_triangulation()?
        }
    };
    Ok(t)
}

fn load_catalog_file(path: &PathBuf) -> Result<Vec<CatalogEntry>, Box<dyn std::error::Error>> {
    let bytes = read_input(path)?;
    if bytes.starts_with(b">>planar_code<<") {
        let systems = parse_planar_code(&bytes)?;
        return systems
            .into_iter()
            .enumerate()
            .map(|(k, rs)| {
                Ok(CatalogEntry::new(
                    format!("entry {}", k + 1),
                    CatalogSource::File,
                    DualTriangulation::from_rotation_system(rs)?,
                ))
            })
            .collect();
    }
    let text = String::from_utf8(bytes)?;
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .enumerate()
        .map(|(k, line)| {
            let graph = FacetGraph::parse_adjacency_rows(line)?;
            Ok(CatalogEntry::new(
                format!("entry {}", k + 1),
                CatalogSource::File,
                DualTriangulation::from_facet_graph(&graph)?,
            ))
        })
        .collect()
}
