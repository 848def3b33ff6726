use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use kummer_g2::census::{self, CensusMode};
use kummer_g2::checks::{all_passed, PropertyCheck};
use kummer_g2::index::{self, AdjointCharacter, IndexInput, TraceConvention};
use kummer_g2::orbifold::{gamma_group, relation_table, singular_set};
use kummer_g2::rational::{format_rational, parse_rational};
use kummer_g2::symmetry;
use kummer_g2::{forms, quaternion};
use kummer_g2_cli::{census_json, orbit_json, verify_paper, write_orbit_csv, ModeSelection, VerifyOptions, K_ORDER};

#[derive(Parser)]
#[command(name = "kummer-g2", version, about = "Finite checks for G2-instantons on resolutions of T7/Γ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// G2 exterior algebra property suite.
    G2 {
        #[command(subcommand)]
        action: G2Action,
    },
    /// Eguchi-Hanson hyperkähler quotient identities.
    Eh {
        #[command(subcommand)]
        action: EhAction,
    },
    /// The orbifold group Γ.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Flat SO(3) connection census.
    Census {
        #[command(subcommand)]
        action: CensusAction,
    },
    /// Symmetry groups and orbits of the census.
    Symmetry {
        #[command(subcommand)]
        action: SymmetryAction,
    },
    /// L² index of ASD instantons on ALE spaces.
    Index {
        #[command(subcommand)]
        action: IndexAction,
    },
    /// Run every check and write the report.
    VerifyPaper {
        /// Report path, or `-` for standard output.
        #[arg(long)]
        json: Option<String>,
        /// Orbit representatives as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum G2Action {
    Check {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum EhAction {
    Verify {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    SingularSet,
    Relations,
}

#[derive(Subcommand)]
enum CensusAction {
    Run {
        #[arg(long, value_enum, default_value = "free")]
        mode: CensusModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SymmetryAction {
    Stabilizer,
    Aut,
    Orbits {
        /// A report written by `census run --out`; its mode selects the subset.
        #[arg(long)]
        census: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum IndexAction {
    Compute {
        /// ∫ p₁(Ad P), an exact rational.
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
        /// `zk:<k>` for the cyclic group of order k.
        #[arg(long)]
        group: String,
        /// Comma-separated character values on ζ, ζ², …, ζ^{k−1}.
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        /// dim 𝔤.
        #[arg(long, default_value_t = 3)]
        dim: u64,
        /// Use χ(g) instead of the fundamental trace in 2 − tr g.
        #[arg(long)]
        adjoint_trace: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Free,
    Constrained,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusModeArg {
    Free,
    Constrained,
}

impl From<CensusModeArg> for CensusMode {
    fn from(m: CensusModeArg) -> Self {
        match m {
            CensusModeArg::Free => CensusMode::Free,
            CensusModeArg::Constrained => CensusMode::Constrained,
        }
    }
}

fn print_checks(checks: &[PropertyCheck]) -> bool {
    for c in checks {
        println!("{} {} ({} samples)", if c.passed { "PASS" } else { "FAIL" }, c.name, c.samples);
    }
    all_passed(checks)
}

fn write_json(path: &PathBuf, v: &Value) -> Result<()> {
    let mut f = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
    serde_json::to_writer_pretty(&mut f, v)?;
    writeln!(f)?;
    Ok(())
}

fn parse_group(s: &str) -> Result<u64> {
    let k = s
        .strip_prefix("zk:")
        .with_context(|| format!("unsupported group {s:?}, expected zk:<k>"))?;
    k.parse().with_context(|| format!("invalid cyclic order {k:?}"))
}

fn census_run(mode: CensusMode) -> Result<census::CensusReport> {
    let relations = relation_table()?;
    Ok(census::run_census(mode, Some(&relations))?)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::G2 {
            action: G2Action::Check { samples, seed },
        } => {
            let ok = print_checks(&forms::property_suite(samples, seed));
            let d = forms::component_dimensions();
            println!("Λ2 = {} + {}; Λ3 = {} + {} + {}", d.two.0, d.two.1, d.three.0, d.three.1, d.three.2);
            Ok(ok)
        }
        Command::Eh {
            action: EhAction::Verify { samples, seed },
        } => Ok(print_checks(&quaternion::verify_suite(samples, seed))),
        Command::Group {
            action: GroupAction::SingularSet,
        } => {
            let set = singular_set(&gamma_group())?;
            for (g, tori) in &set.per_element {
                println!("{g}");
                for t in tori {
                    println!("  {t}");
                }
            }
            println!("components up to Γ: {}", set.count());
            for t in &set.components {
                println!("  {t}");
            }
            Ok(true)
        }
        Command::Group {
            action: GroupAction::Relations,
        } => {
            let table = relation_table()?;
            for r in table.translation_relations() {
                println!("{} = τ^{:?}", r.word, r.translation);
            }
            for c in &table.conjugates {
                println!("{} τ{} {}⁻¹ = τ{}^{}", c.generator, c.tau, c.generator, c.image_tau, c.exponent);
            }
            Ok(true)
        }
        Command::Census {
            action: CensusAction::Run { mode, out },
        } => {
            let report = census_run(mode.into())?;
            let c = &report.counts;
            println!("mode: {}", report.mode);
            println!("assignments: {}", c.total);
            println!("irreducible and rigid: {}", c.irreducible_and_rigid);
            println!("non-flat irreducible and rigid: {}", c.nonflat_irreducible_rigid);
            println!("τ-criterion mismatches: {}", c.criterion_mismatches);
            println!("elapsed: {:.3} s", report.elapsed.as_secs_f64());
            if let Some(path) = out {
                write_json(&path, &census_json(&report))?;
            }
            Ok(true)
        }
        Command::Symmetry {
            action: SymmetryAction::Stabilizer,
        } => {
            let h = symmetry::stabilizer_of_phi();
            println!("|H| = {}", h.len());
            println!("closed, preserves ψ: {}", symmetry::check_stabilizer(&h));
            Ok(true)
        }
        Command::Symmetry {
            action: SymmetryAction::Aut,
        } => {
            let aut = symmetry::aut_orbifold(&symmetry::stabilizer_of_phi())?;
            println!("candidates: {}", aut.candidates);
            println!("normalizer condition: {}", aut.normalizer_count);
            println!("literal condition: {}", aut.literal_count);
            println!("disagreements: {}", aut.condition_disagreements);
            println!("equals ⟨K, {{0,1/2}}^7⟩: {}", aut.matches_k_generated);
            Ok(aut.matches_k_generated)
        }
        Command::Symmetry {
            action: SymmetryAction::Orbits { census, out, csv },
        } => {
            let mode = match census {
                Some(path) => {
                    let v: Value = serde_json::from_reader(File::open(&path).with_context(|| format!("opening {}", path.display()))?)?;
                    match v.get("mode").and_then(Value::as_str) {
                        Some(m) => m.parse::<CensusMode>()?,
                        None => bail!("{} has no census mode", path.display()),
                    }
                }
                None => CensusMode::Free,
            };
            let relations = relation_table()?;
            let subset = census::nonflat_irreducible_rigid(mode, Some(&relations))?;
            let aut = symmetry::aut_orbifold(&symmetry::stabilizer_of_phi())?;
            let report = symmetry::orbit_count(&subset, &symmetry::aut_generators(), aut.normalizer_count as u64, K_ORDER)?;
            println!("subset: {}", report.subset_size);
            println!("group order: {}", report.group_order);
            println!("orbits: {}", report.orbit_count);
            println!("pigeonhole bound: {}", report.pigeonhole_bound);
            println!("bound with |K| only: {}", report.pigeonhole_bound_k_only);
            if let Some(path) = out {
                let mut v = orbit_json(&report);
                v["representatives"] = serde_json::to_value(report.representatives())?;
                write_json(&path, &v)?;
            }
            if let Some(path) = csv {
                write_orbit_csv(&report, File::create(&path)?)?;
            }
            Ok(true)
        }
        Command::Index {
            action:
                IndexAction::Compute {
                    p1,
                    group,
                    chi,
                    dim,
                    adjoint_trace,
                },
        } => {
            let group = index::cyclic_group_data(parse_group(&group)?)?;
            let values = chi.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
            let character = AdjointCharacter::rational(dim, &values, group.field)?;
            let input = IndexInput::new(parse_rational(&p1)?, group, character)?;
            let convention = if adjoint_trace { TraceConvention::Adjoint } else { TraceConvention::Fundamental };
            let r = index::l2_index(&input, convention)?;
            println!("{}", format_rational(&r.value));
            Ok(true)
        }
        Command::VerifyPaper {
            json,
            csv,
            mode,
            samples,
            seed,
        } => {
            let opts = VerifyOptions {
                mode: match mode {
                    ModeArg::Free => ModeSelection::Free,
                    ModeArg::Constrained => ModeSelection::Constrained,
                    ModeArg::Both => ModeSelection::Both,
                },
                samples,
                seed,
            };
            let command: Vec<String> = std::env::args().skip(1).collect();
            let run = verify_paper(&opts, command)?;
            let text = run.to_json()?;
            match json.as_deref() {
                Some("-") => io::stdout().write_all(text.as_bytes())?,
                Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {path}"))?,
                None => {}
            }
            if json.as_deref() != Some("-") {
                for c in &run.manifest.claims {
                    println!("{:7} {:28} expected {} observed {}", format!("{:?}", c.status).to_uppercase(), c.id, c.expected, c.observed);
                }
                for s in &run.manifest.failed_stages {
                    println!("FAILED stage {s}");
                }
            }
            if let (Some(path), Some(orbits)) = (csv, &run.orbits) {
                write_orbit_csv(orbits, File::create(&path)?)?;
            }
            Ok(run.manifest.success())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::new().filter_level(log::LevelFilter::Warn).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
