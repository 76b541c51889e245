//! Command-line surface for the soft-topology model checker.
//!
//! Exit codes are the machine contract: 0 when every requested check passes
//! or a mined property holds, 1 when a counterexample or expectation
//! mismatch is found, 2 on input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use soft_topology::document::{ClosureReport, ReflectionDoc, SpaceDocument};
use soft_topology::explorer::{
    mine_implication, verify_corpus, CorpusReport, EnumerationSpec, ImplicationStatus,
};
use soft_topology::morphisms::{map_report, MapProperty};
use soft_topology::reflection::compute_reflection;
use soft_topology::separation::{classify, Axiom};
use soft_topology::{MappingDocument, PredicateRegistry, SoftSpace};

#[derive(Parser)]
#[command(
    name = "soft-top",
    version,
    about = "Model checker for finite soft topological spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the twelve separation axioms of a space document
    Classify {
        file: PathBuf,
        /// Comma-separated axiom names to display (default: all twelve)
        #[arg(long)]
        axioms: Option<String>,
        /// Close the printed family instead of requiring a topology
        #[arg(long)]
        generate: bool,
        /// Write a machine-readable report
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct the soft T0 reflection of a space document
    Reflect {
        file: PathBuf,
        /// Write the classes and quotient as JSON
        #[arg(long)]
        out: Option<PathBuf>,
        /// Build the quotient even for a non-T0U space (unverified)
        #[arg(long)]
        force: bool,
        /// Close the printed family instead of requiring a topology
        #[arg(long)]
        generate: bool,
    },
    /// Check structural properties of a soft mapping between two spaces
    CheckMap {
        mapfile: PathBuf,
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        codomain: PathBuf,
        /// Comma-separated properties that must hold (exit 1 otherwise)
        #[arg(long)]
        props: Option<String>,
        /// Close the printed families instead of requiring topologies
        #[arg(long)]
        generate: bool,
    },
    /// Close a family under the topology axioms and write the result
    Generate {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check an implication between axioms over enumerated spaces
    Mine {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        params: usize,
        /// Enumerate every soft topology on the shape
        #[arg(long)]
        exhaustive: bool,
        /// Sample this many seeded random spaces instead
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Implication to check, e.g. "T0k=>T0" or "Regular&T1=>T2"
        #[arg(long)]
        implication: String,
        /// Write a machine-readable report (with any witness embedded)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every fixture in a corpus directory against its claims
    VerifyCorpus {
        dir: PathBuf,
        /// Write a machine-readable report
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Classify {
            file,
            axioms,
            generate,
            out,
        } => cmd_classify(&file, axioms.as_deref(), generate, out.as_deref()),
        Command::Reflect {
            file,
            out,
            force,
            generate,
        } => cmd_reflect(&file, out.as_deref(), force, generate),
        Command::CheckMap {
            mapfile,
            domain,
            codomain,
            props,
            generate,
        } => cmd_check_map(&mapfile, &domain, &codomain, props.as_deref(), generate),
        Command::Generate { file, out } => cmd_generate(&file, &out),
        Command::Mine {
            points,
            params,
            exhaustive,
            sample,
            seed,
            implication,
            out,
        } => cmd_mine(points, params, exhaustive, sample, seed, &implication, out.as_deref()),
        Command::VerifyCorpus { dir, out } => cmd_verify_corpus(&dir, out.as_deref()),
    }
}

fn read_to_string(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_space(path: &Path, generate: bool) -> anyhow::Result<(SpaceDocument, SoftSpace, Option<ClosureReport>)> {
    let text = read_to_string(path)?;
    let doc = SpaceDocument::from_json(&text).with_context(|| path.display().to_string())?;
    if generate {
        let (space, closure) = doc.to_space_generated()?;
        Ok((doc, space, Some(closure)))
    } else {
        let space = doc.to_space().with_context(|| path.display().to_string())?;
        Ok((doc, space, None))
    }
}

fn write_out(path: &Path, value: &serde_json::Value) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn cmd_classify(
    file: &Path,
    axioms: Option<&str>,
    generate: bool,
    out: Option<&Path>,
) -> anyhow::Result<u8> {
    let (doc, space, closure) = load_space(file, generate)?;
    let selected: Vec<Axiom> = match axioms {
        None => Axiom::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .map(|name| {
                Axiom::from_name(name.trim())
                    .ok_or_else(|| anyhow!("unknown axiom `{}`", name.trim()))
            })
            .collect::<anyhow::Result<_>>()?,
    };
    let profile = classify(&space);

    println!("space: {}", space.display_name());
    if let Some(closure) = &closure {
        if let Some(violation) = &closure.violation {
            println!("printed family closed under the axioms: no ({violation})");
            println!("closure added {} soft set(s)", closure.added.len());
        } else {
            println!("printed family closed under the axioms: yes");
        }
    }
    let expected = doc
        .metadata
        .as_ref()
        .and_then(|m| m.expected_profile.clone())
        .unwrap_or_default();
    let mut mismatches = 0;
    for axiom in &selected {
        let actual = profile.get(*axiom);
        match expected
            .iter()
            .find(|(name, _)| Axiom::from_name(name) == Some(*axiom))
        {
            Some((_, &want)) if want != actual => {
                mismatches += 1;
                println!("  {:<18} {:<5}  MISMATCH (expected {})", axiom.name(), actual, want);
            }
            Some(_) => println!("  {:<18} {:<5}  (as expected)", axiom.name(), actual),
            None => println!("  {:<18} {}", axiom.name(), actual),
        }
    }

    if let Some(path) = out {
        let profile_map: serde_json::Map<String, serde_json::Value> = profile
            .iter()
            .map(|(a, v)| (a.name().to_string(), serde_json::Value::Bool(v)))
            .collect();
        let report = json!({
            "space": space.display_name(),
            "profile": profile_map,
            "mismatches": mismatches,
        });
        write_out(path, &report)?;
    }
    Ok(if mismatches > 0 { 1 } else { 0 })
}

fn cmd_reflect(file: &Path, out: Option<&Path>, force: bool, generate: bool) -> anyhow::Result<u8> {
    let (_, space, _) = load_space(file, generate)?;
    let reflection = compute_reflection(&space, force)?;
    println!("space: {}", space.display_name());
    if !reflection.is_verified() {
        println!("note: source is not T0U; the quotient is unverified");
    }
    println!("classes:");
    let doc = ReflectionDoc::from_reflection(&reflection);
    for (label, members) in &doc.classes {
        println!("  {label} = {{{}}}", members.join(", "));
    }
    println!("quotient opens ({}):", doc.opens.len());
    for (name, table) in &doc.opens {
        let rows: Vec<String> = table
            .iter()
            .map(|(param, points)| format!("{param}:{{{}}}", points.join(",")))
            .collect();
        println!("  {:<4} {}", name, rows.join(" "));
    }
    if let Some(path) = out {
        write_out(path, &serde_json::to_value(&doc)?)?;
    }
    Ok(0)
}

fn cmd_check_map(
    mapfile: &Path,
    domain: &Path,
    codomain: &Path,
    props: Option<&str>,
    generate: bool,
) -> anyhow::Result<u8> {
    let (_, dom, _) = load_space(domain, generate)?;
    let (_, cod, _) = load_space(codomain, generate)?;
    let text = read_to_string(mapfile)?;
    let mapping_doc =
        MappingDocument::from_json(&text).with_context(|| mapfile.display().to_string())?;
    let mapping = mapping_doc.to_mapping(dom.universe(), cod.universe())?;
    let name = mapfile
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "mapping".to_string());

    let required: Vec<MapProperty> = match props {
        None => Vec::new(),
        Some(list) => list
            .split(',')
            .map(|name| {
                MapProperty::from_name(name.trim())
                    .ok_or_else(|| anyhow!("unknown map property `{}`", name.trim()))
            })
            .collect::<anyhow::Result<_>>()?,
    };

    let report = map_report(&mapping, &dom, &cod, name.clone())?;
    println!("mapping: {name} ({} -> {})", dom.display_name(), cod.display_name());
    for (property, verdict) in report.iter() {
        match &verdict.witness {
            Some(w) if !verdict.holds => println!("  {:<18} false  ({w})", property.name()),
            _ => println!("  {:<18} {}", property.name(), verdict.holds),
        }
    }
    let failed: Vec<&MapProperty> = required.iter().filter(|p| !report.holds(**p)).collect();
    if !failed.is_empty() {
        let names: Vec<&str> = failed.iter().map(|p| p.name()).collect();
        println!("required properties failing: {}", names.join(", "));
        return Ok(1);
    }
    Ok(0)
}

fn cmd_generate(file: &Path, out: &Path) -> anyhow::Result<u8> {
    let (_, space, closure) = load_space(file, true)?;
    let closure = closure.expect("generated parse");
    if let Some(violation) = &closure.violation {
        println!("printed family closed under the axioms: no ({violation})");
    } else {
        println!("printed family closed under the axioms: yes");
    }
    println!(
        "generated topology has {} opens ({} added)",
        space.opens().len(),
        closure.added.len()
    );
    let doc = SpaceDocument::from_space(&space);
    std::fs::write(out, doc.to_json()).with_context(|| format!("cannot write {}", out.display()))?;
    println!("wrote {}", out.display());
    Ok(0)
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn cmd_mine(
    points: usize,
    params: usize,
    exhaustive: bool,
    sample: Option<usize>,
    seed: Option<u64>,
    implication: &str,
    out: Option<&Path>,
) -> anyhow::Result<u8> {
    let spec = match (exhaustive, sample) {
        (true, None) => EnumerationSpec::exhaustive(points, params),
        (false, Some(count)) => {
            let seed = seed.ok_or_else(|| anyhow!("--sample requires --seed"))?;
            EnumerationSpec::sampled(points, params, count, seed)
        }
        (true, Some(_)) => bail!("--exhaustive and --sample are mutually exclusive"),
        (false, None) => bail!("pass either --exhaustive or --sample K --seed S"),
    };
    let registry = PredicateRegistry::standard();
    let (antecedent, consequent) = registry.parse_implication(implication)?;
    let report = mine_implication(&spec, &*antecedent, &*consequent)?;

    println!(
        "implication {} => {} over {}x{} ({})",
        report.antecedent,
        report.consequent,
        points,
        params,
        match spec.mode {
            soft_topology::EnumerationMode::Exhaustive => "exhaustive".to_string(),
            soft_topology::EnumerationMode::Sampled { count, seed } =>
                format!("{count} samples, seed {seed}"),
        }
    );
    println!(
        "spaces checked: {}, skipped: {}",
        report.spaces_checked, report.spaces_skipped
    );

    let mut json_report = json!({
        "antecedent": report.antecedent,
        "consequent": report.consequent,
        "spaces_checked": report.spaces_checked,
        "spaces_skipped": report.spaces_skipped,
        "status": if report.holds() { "holds" } else { "refuted" },
    });

    let code = match &report.status {
        ImplicationStatus::Holds => {
            println!("status: holds");
            0
        }
        ImplicationStatus::Refuted(space) => {
            let witness_doc = SpaceDocument::from_space(space);
            json_report["witness"] = serde_json::to_value(&witness_doc)?;
            let witness_path = match out {
                Some(_) => None,
                None => {
                    let path = PathBuf::from(format!(
                        "witness-{}.json",
                        sanitize(&format!("{}-implies-{}", report.antecedent, report.consequent))
                    ));
                    std::fs::write(&path, witness_doc.to_json())
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    Some(path)
                }
            };
            println!("status: refuted by {}", space.display_name());
            if let Some(path) = witness_path {
                println!("witness written to {}", path.display());
            }
            1
        }
    };
    if let Some(path) = out {
        write_out(path, &json_report)?;
        println!("report written to {}", path.display());
    }
    Ok(code)
}

fn corpus_json(report: &CorpusReport) -> serde_json::Value {
    json!({
        "passed": report.passed(),
        "entries": report
            .entries
            .iter()
            .map(|e| {
                let profile_map: serde_json::Map<String, serde_json::Value> = e
                    .profile
                    .iter()
                    .map(|(a, v)| (a.name().to_string(), serde_json::Value::Bool(v)))
                    .collect();
                json!({
                    "name": e.name,
                    "passed": e.passed,
                    "printed_family_valid": e.printed_family_valid,
                    "closure_violation": e.closure_violation,
                    "sets_added_by_closure": e.sets_added_by_closure,
                    "profile": profile_map,
                    "profile_checks": e.profile_checks.iter().map(|c| json!({"name": c.name, "expected": c.expected, "actual": c.actual})).collect::<Vec<_>>(),
                    "alpha_checks": e.alpha_checks.iter().map(|c| json!({"name": c.name, "expected": c.expected, "actual": c.actual})).collect::<Vec<_>>(),
                    "reflection_matches": e.reflection_matches,
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn cmd_verify_corpus(dir: &Path, out: Option<&Path>) -> anyhow::Result<u8> {
    let report = verify_corpus(dir)?;
    println!("{:<10} {:<7} {:<9} checks", "fixture", "result", "printed");
    for entry in &report.entries {
        let mut checks: Vec<String> = Vec::new();
        for c in entry.profile_checks.iter().chain(&entry.alpha_checks) {
            checks.push(format!(
                "{}={}{}",
                c.name,
                c.actual,
                if c.ok() { "" } else { "(!)" }
            ));
        }
        if let Some(matches) = entry.reflection_matches {
            checks.push(format!("reflection={}{}", matches, if matches { "" } else { "(!)" }));
        }
        println!(
            "{:<10} {:<7} {:<9} {}",
            entry.name,
            if entry.passed { "pass" } else { "FAIL" },
            if entry.printed_family_valid { "valid" } else { "invalid" },
            checks.join(" ")
        );
        if let Some(violation) = &entry.closure_violation {
            println!(
                "{:<10} closure discrepancy: {violation}; {} set(s) added",
                "", entry.sets_added_by_closure
            );
        }
    }
    if let Some(path) = out {
        write_out(path, &corpus_json(&report))?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}
