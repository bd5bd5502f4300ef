//! `fc`: exact analysis of FC-centralizers, chain conditions, and
//! finite-index structure in finite permutation groups and affine groups.
//!
//! Every command loads a group file (or bundled fixture), runs one
//! analysis, and emits a deterministic JSON report with embedded
//! certificates. Exit codes: 0 success, 2 validation failure, 3
//! computation abort, 4 I/O or schema error.

mod corpus;
mod error;
mod report;
mod schema;

use clap::{Args, Parser, Subcommand};

use fc_core::fc::{
    check_bounded_fc_nilpotent_chain, check_bounded_fc_solvable_chain, fc_bound,
    fc_centralizer_subgroup, ValidatedFcChain,
};
use fc_core::oracle;
use fc_core::theorems::{neumann_decompose, nilpotent_tower, solvable_resolve};
use fc_core::{GroupRef, SubgroupHandle};

use error::CliError;
use report::{
    index_method, order_method, AnalyzeResults, BoundClaim, CheckChainResults, Claim,
    GeneratorCheck, IndexClaim, Inputs, InputDigest, NeumannResults, OracleSummary, Report,
    Results, SolvableResults, TowerResults, TowerStepReport, METHOD_BALL,
};
use schema::{element_to_file, ChainFile, ChainKindFile, GroupFile};

#[derive(Parser)]
#[command(
    name = "fc",
    version,
    about = "Exact FC-centralizer and finite-index structure analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the FC subgroup, its index, and the uniform conjugate bound
    Analyze(CommonArgs),
    /// Validate a chain against its chain condition, certifying each bound
    CheckChain(CommonArgs),
    /// Build the finite-index nilpotent subgroup from a nilpotent chain
    Tower(CommonArgs),
    /// Decompose a group with finite classes: finite derived subgroup,
    /// finite-index centralizer of class at most two
    Neumann(CommonArgs),
    /// Resolve a chain to a finite-index solvable subgroup
    Solvable(CommonArgs),
    /// Enumerate word-length balls and cross-check conjugate counts
    Oracle(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Group file path or bundled fixture name (e.g. dinf)
    group: String,
    /// Chain file path or bundled chain name (e.g. dinf.nilpotent)
    #[arg(long)]
    chain: Option<String>,
    /// Ball radius for oracle enumeration and cross-checks
    #[arg(long, default_value_t = 6)]
    max_ball_radius: u32,
    /// Write the report to this file instead of standard output
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        std::process::exit(err.code);
    }
}

struct LoadedGroup {
    group: GroupRef,
    digest: InputDigest,
    fixture: Option<String>,
}

fn load_group(arg: &str) -> Result<LoadedGroup, CliError> {
    let resolved = corpus::resolve_group(arg)?;
    let file = GroupFile::parse(&resolved.bytes)?;
    let group = file.build()?;
    Ok(LoadedGroup {
        group,
        digest: InputDigest::new(resolved.source, &resolved.bytes).named(file.name.clone()),
        fixture: resolved.fixture,
    })
}

struct LoadedChain {
    levels: Vec<SubgroupHandle>,
    kind: ChainKindFile,
    digest: InputDigest,
}

/// Resolves the chain argument, falling back to the fixture's bundled
/// chain of the command's preferred kind.
fn load_chain(
    args: &CommonArgs,
    loaded: &LoadedGroup,
    default_kind: ChainKindFile,
) -> Result<LoadedChain, CliError> {
    let arg = match (&args.chain, &loaded.fixture) {
        (Some(chain), _) => chain.clone(),
        (None, Some(name)) => {
            let kind = match default_kind {
                ChainKindFile::Nilpotent => "nilpotent",
                ChainKindFile::Solvable => "solvable",
            };
            format!("{name}.{kind}")
        }
        (None, None) => {
            return Err(CliError::validation(
                "this command needs --chain (only bundled fixtures carry default chains)",
            ))
        }
    };
    let resolved = corpus::resolve_chain(&arg)?;
    let file = ChainFile::parse(&resolved.bytes)?;
    let levels = file.build(&loaded.group)?;
    Ok(LoadedChain {
        levels,
        kind: file.kind,
        digest: InputDigest::new(resolved.source, &resolved.bytes),
    })
}

fn reject_chain_flag(args: &CommonArgs) -> Result<(), CliError> {
    if args.chain.is_some() {
        return Err(CliError::validation("this command does not take --chain"));
    }
    Ok(())
}

/// Validates the chain with the checker matching its declared kind.
fn validate_chain(group: &GroupRef, chain: &LoadedChain) -> Result<ValidatedFcChain, CliError> {
    match chain.kind {
        ChainKindFile::Nilpotent => {
            check_bounded_fc_nilpotent_chain(group, &chain.levels).map_err(CliError::from)
        }
        ChainKindFile::Solvable => {
            check_bounded_fc_solvable_chain(group, &chain.levels).map_err(CliError::from)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    let (name, args): (&'static str, &CommonArgs) = match &command {
        Command::Analyze(a) => ("analyze", a),
        Command::CheckChain(a) => ("check-chain", a),
        Command::Tower(a) => ("tower", a),
        Command::Neumann(a) => ("neumann", a),
        Command::Solvable(a) => ("solvable", a),
        Command::Oracle(a) => ("oracle", a),
    };
    let loaded = load_group(&args.group)?;
    let mut chain_digest = None;
    let (results, oracle_section) = match &command {
        Command::Analyze(_) => {
            reject_chain_flag(args)?;
            let results = analyze(&loaded.group)?;
            let summary = oracle_summary(&loaded.group, args.max_ball_radius)?;
            (Results::Analyze(results), Some(summary))
        }
        Command::CheckChain(_) => {
            let chain = load_chain(args, &loaded, ChainKindFile::Nilpotent)?;
            let validated = validate_chain(&loaded.group, &chain)?;
            chain_digest = Some(chain.digest);
            let kind = match chain.kind {
                ChainKindFile::Nilpotent => "nilpotent",
                ChainKindFile::Solvable => "solvable",
            };
            let results = CheckChainResults {
                kind,
                valid: true,
                levels: validated.levels.len(),
                level_bounds: validated
                    .certificates
                    .iter()
                    .map(BoundClaim::from_certificate)
                    .collect(),
                max_bound: validated.max_bound(),
            };
            (Results::CheckChain(results), None)
        }
        Command::Tower(_) => {
            let chain = load_chain(args, &loaded, ChainKindFile::Nilpotent)?;
            if chain.kind != ChainKindFile::Nilpotent {
                return Err(CliError::validation(
                    "the tower construction needs a nilpotent chain",
                ));
            }
            let validated = validate_chain(&loaded.group, &chain)?;
            chain_digest = Some(chain.digest);
            (Results::Tower(tower(&loaded.group, &validated)?), None)
        }
        Command::Neumann(_) => {
            reject_chain_flag(args)?;
            let full = SubgroupHandle::full(&loaded.group);
            let d = neumann_decompose(&full)?;
            (Results::Neumann(neumann_results(&loaded.group, &d)), None)
        }
        Command::Solvable(_) => {
            let chain = load_chain(args, &loaded, ChainKindFile::Solvable)?;
            let validated = validate_chain(&loaded.group, &chain)?;
            chain_digest = Some(chain.digest);
            let resolution = solvable_resolve(&validated)?;
            let results = SolvableResults {
                index: Claim {
                    value: resolution.index,
                    method: index_method(&loaded.group),
                },
                derived_length: resolution.derived_length,
                subgroup_generators: report::elements_to_file(
                    &resolution.subgroup.closure_generators(),
                ),
                derived_series_levels: resolution.derived_series.len(),
            };
            (Results::Solvable(results), None)
        }
        Command::Oracle(_) => {
            reject_chain_flag(args)?;
            let summary = oracle_summary(&loaded.group, args.max_ball_radius)?;
            (Results::Oracle(summary), None)
        }
    };
    let mut report = Report::new(
        name,
        Inputs {
            group: loaded.digest,
            chain: chain_digest,
            max_ball_radius: args.max_ball_radius,
        },
        results,
    );
    report.oracle = oracle_section;
    let rendered = report.render();
    match &args.output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::io(format!("writing {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn analyze(group: &GroupRef) -> Result<AnalyzeResults, CliError> {
    let full = SubgroupHandle::full(group);
    let trivial = SubgroupHandle::trivial(group);
    let fc = fc_centralizer_subgroup(&full, &full, &trivial)?;
    let fc_is_whole_group = fc.same_as(&full);
    let fc_index = full.relative_index(&fc)?;
    let bound = fc_bound(&fc, &full, &trivial)?;
    let cert = bound
        .certificate()
        .ok_or_else(|| CliError::from(fc_core::Error::SearchExhausted(
            "no uniform conjugate bound".into(),
        )))?
        .clone();
    let decomposition = if fc_is_whole_group {
        let d = neumann_decompose(&full)?;
        Some(neumann_results(group, &d))
    } else {
        None
    };
    Ok(AnalyzeResults {
        group_order: IndexClaim {
            value: group.order().into(),
            method: order_method(group),
        },
        fc_generators: report::elements_to_file(&fc.closure_generators()),
        fc_is_whole_group,
        fc_index: IndexClaim {
            value: fc_index.into(),
            method: index_method(group),
        },
        bound: BoundClaim::from_certificate(&cert),
        decomposition,
    })
}

fn tower(group: &GroupRef, validated: &ValidatedFcChain) -> Result<TowerResults, CliError> {
    let trace = nilpotent_tower(validated)?;
    let method = index_method(group);
    let steps = trace
        .steps
        .iter()
        .map(|step| {
            let odd = &step.tower[step.tower.len() - 2];
            let below = &step.tower[step.tower.len() - 3];
            let odd_factor_finite = odd.relative_index(below)?.is_finite();
            Ok(TowerStepReport {
                level: step.level,
                fc_index: Claim {
                    value: step.fc_index,
                    method,
                },
                commutator_index: Claim {
                    value: step.commutator_index,
                    method,
                },
                stabilizer_index: Claim {
                    value: step.stabilizer_index,
                    method,
                },
                tower_length: step.tower.len(),
                odd_factor_finite,
            })
        })
        .collect::<Result<Vec<_>, fc_core::Error>>()?;
    Ok(TowerResults {
        stabilizer_index: Claim {
            value: trace.stabilizer_index,
            method,
        },
        nilpotency_class: trace.nilpotency_class,
        class_bound: trace.class_bound,
        class_within_bound: trace.nilpotency_class <= trace.class_bound,
        tower_verified: true,
        stabilizer_generators: report::elements_to_file(&trace.stabilizer.closure_generators()),
        steps,
    })
}

fn neumann_results(
    group: &GroupRef,
    d: &fc_core::theorems::NeumannDecomposition,
) -> NeumannResults {
    let method = index_method(group);
    NeumannResults {
        bound: BoundClaim::from_certificate(&d.bound),
        derived_order: Claim {
            value: d.derived_order,
            method,
        },
        derived_generators: report::elements_to_file(&d.derived.closure_generators()),
        centralizer_index: Claim {
            value: d.centralizer_index,
            method,
        },
        centralizer_class: d.centralizer_class,
        centralizer_generators: report::elements_to_file(&d.centralizer.closure_generators()),
    }
}

fn oracle_summary(group: &GroupRef, radius: u32) -> Result<OracleSummary, CliError> {
    let gens = group.standard_generators();
    let ball = oracle::ball_enumerate(group, &gens, radius)?;
    let ball_sizes = (0..=radius)
        .map(|r| ball.elements_within(r).count() as u64)
        .collect();
    let generators = gens
        .iter()
        .map(|el| {
            let stab = oracle::brute_check(group, &gens, el, |x| group.is_identity(x), radius)?;
            Ok(GeneratorCheck {
                element: element_to_file(el),
                conjugates_at_prev: stab.at_prev,
                conjugates_at_radius: stab.at_radius,
                stabilized: stab.stabilized(),
            })
        })
        .collect::<Result<Vec<_>, fc_core::Error>>()?;
    Ok(OracleSummary {
        radius,
        ball_sizes,
        method: METHOD_BALL,
        generators,
    })
}
