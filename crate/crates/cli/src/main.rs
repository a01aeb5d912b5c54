use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mat2seq::codec::{bin_property, decode_text};
use mat2seq::verify::{verify_uniqueness_named, TransformKind, VerifyConfig};
use mat2seq::{canonicalize_with, encode, parse_cif, write_cif, CanonicalizeOptions, Crystal};
use rayon::prelude::*;
use walkdir::WalkDir;

const EXIT_USAGE: u8 = 1;
const EXIT_FAILURE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "mat2seq",
    version,
    about = "Invariant, reversible token sequences for crystal structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonicalize CIF files and write sequence text
    Encode(EncodeArgs),
    /// Rebuild a P1 CIF from sequence text
    Decode(DecodeArgs),
    /// Run the uniqueness harness over a directory of CIF files
    Verify(VerifyArgs),
    /// Write a JSONL corpus of sequences
    Dataset(DatasetArgs),
}

#[derive(Args)]
struct Tolerance {
    /// Fractional tolerance for symmetry matching
    #[arg(long, env = "MAT2SEQ_SYMPREC", default_value_t = 0.01)]
    symprec: f64,
}

impl Tolerance {
    fn options(&self) -> CanonicalizeOptions {
        CanonicalizeOptions {
            symprec: self.symprec,
            ..CanonicalizeOptions::default()
        }
    }
}

#[derive(Args)]
struct EncodeArgs {
    /// A CIF file or a directory searched recursively for *.cif
    #[arg(long)]
    input: PathBuf,
    /// Output file, or output directory when the input is a directory
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    tolerance: Tolerance,
    /// Property value as name=value; fills the next prop slot
    #[arg(long = "prop", value_parser = parse_prop)]
    props: Vec<(String, f64)>,
    /// Bin width applied to every --prop value
    #[arg(long, default_value_t = 1.0)]
    prop_width: f64,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Comma-separated transform kinds, or "none"
    #[arg(
        long,
        default_value = "rotate,translate,shift_boundary,reexpress_lattice,permute_atoms",
        value_parser = parse_transforms
    )]
    transforms: Transforms,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    tolerance: Tolerance,
}

#[derive(Args)]
struct DatasetArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// CSV with an `id` column and one column per property
    #[arg(long, requires = "prop_name")]
    prop_csv: Option<PathBuf>,
    #[arg(long)]
    prop_name: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    prop_width: f64,
    #[command(flatten)]
    tolerance: Tolerance,
}

#[derive(Clone)]
struct Transforms(Vec<TransformKind>);

fn parse_prop(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or("expected name=value")?;
    let value: f64 = value
        .parse()
        .map_err(|_| format!("{value:?} is not a number"))?;
    Ok((name.to_string(), value))
}

fn parse_transforms(s: &str) -> Result<Transforms, String> {
    if s == "none" {
        return Ok(Transforms(Vec::new()));
    }
    s.split(',')
        .map(|k| k.trim().parse())
        .collect::<Result<_, _>>()
        .map(Transforms)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Encode(args) => run_encode(&args),
        Command::Decode(args) => run_decode(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Dataset(args) => run_dataset(&args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

type CmdResult = Result<ExitCode, String>;

fn status(failures: usize) -> ExitCode {
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

/// CIF files under `input` (or `input` itself) with their paths relative to it, sorted by id.
fn cif_files(input: &Path) -> Result<Vec<(PathBuf, PathBuf)>, String> {
    if input.is_file() {
        let name = input.file_name().map(PathBuf::from).unwrap_or_default();
        return Ok(vec![(input.to_path_buf(), name)]);
    }
    if !input.is_dir() {
        return Err(format!("{}: no such file or directory", input.display()));
    }
    let mut out = Vec::new();
    for entry in WalkDir::new(input) {
        let entry = entry.map_err(|e| e.to_string())?;
        let is_cif = entry
            .path()
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("cif"));
        if entry.file_type().is_file() && is_cif {
            let rel = entry
                .path()
                .strip_prefix(input)
                .expect("walk stays under root")
                .to_path_buf();
            out.push((entry.path().to_path_buf(), rel));
        }
    }
    out.sort_by(|a, b| (file_id(&a.1), &a.1).cmp(&(file_id(&b.1), &b.1)));
    Ok(out)
}

fn read_crystal(path: &Path) -> Result<Crystal, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_cif(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Identifier of a file: its relative path without extension, `/`-separated.
fn file_id(rel: &Path) -> String {
    let stem = rel.with_extension("");
    stem.components()
        .map(|c| c.as_os_str().to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join("/")
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| format!("{}: {e}", parent.display()))?;
    }
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn run_encode(args: &EncodeArgs) -> CmdResult {
    let mut bins = Vec::new();
    for (name, value) in &args.props {
        let bin =
            bin_property(*value, args.prop_width).map_err(|e| format!("--prop {name}: {e}"))?;
        bins.push((name.clone(), bin));
    }
    let files = cif_files(&args.input)?;
    let single = args.input.is_file();
    let options = args.tolerance.options();
    let results: Vec<Result<(), String>> = files
        .par_iter()
        .map(|(path, rel)| {
            let crystal = read_crystal(path)?;
            let cell = canonicalize_with(&crystal, &options)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            let seq = encode(&cell, &bins).map_err(|e| format!("{}: {e}", path.display()))?;
            let target = if single {
                args.out.clone()
            } else {
                args.out.join(rel.with_extension("seq"))
            };
            write_file(&target, &seq.text)
        })
        .collect();
    let failures = report_failures(&results);
    Ok(status(failures))
}

fn report_failures(results: &[Result<(), String>]) -> usize {
    let mut failures = 0;
    for r in results {
        if let Err(e) = r {
            eprintln!("error: {e}");
            failures += 1;
        }
    }
    failures
}

fn run_decode(args: &DecodeArgs) -> CmdResult {
    let text =
        fs::read_to_string(&args.input).map_err(|e| format!("{}: {e}", args.input.display()))?;
    let crystal = decode_text(&text).map_err(|e| format!("{}: {e}", args.input.display()))?;
    let cif = write_cif(&crystal).map_err(|e| e.to_string())?;
    write_file(&args.out, &cif)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &VerifyArgs) -> CmdResult {
    let files = cif_files(&args.input)?;
    let mut corpus = Vec::new();
    let mut failures = 0;
    for (path, rel) in &files {
        match read_crystal(path) {
            Ok(c) => corpus.push((file_id(rel), c)),
            Err(e) => {
                eprintln!("error: {e}");
                failures += 1;
            }
        }
    }
    if corpus.is_empty() {
        return Err(format!("{}: no readable CIF files", args.input.display()));
    }
    let config = VerifyConfig {
        trials: args.trials,
        kinds: args.transforms.0.clone(),
        seed: args.seed,
        options: args.tolerance.options(),
    };
    let report = verify_uniqueness_named(&corpus, &config);
    if let Some(path) = &args.report {
        write_file(path, &report.to_json())?;
    }
    println!("success_rate: {:.4}", report.rate);
    Ok(status(failures))
}

/// Property values by id from a CSV with an `id` column; duplicate ids are an error.
fn read_props(path: &Path, name: &str) -> Result<HashMap<String, f64>, String> {
    let mut reader =
        csv::Reader::from_path(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let headers = reader.headers().map_err(|e| e.to_string())?.clone();
    let column = |h: &str| {
        headers
            .iter()
            .position(|x| x.trim() == h)
            .ok_or_else(|| format!("{}: no column {h:?}", path.display()))
    };
    let (id_col, value_col) = (column("id")?, column(name)?);
    let mut out = HashMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| format!("{}: {e}", path.display()))?;
        let id = record.get(id_col).unwrap_or("").trim().to_string();
        let raw = record.get(value_col).unwrap_or("").trim();
        let value: f64 = raw
            .parse()
            .map_err(|_| format!("{}: id {id:?}: {raw:?} is not a number", path.display()))?;
        if out.insert(id.clone(), value).is_some() {
            return Err(format!("{}: duplicate id {id:?}", path.display()));
        }
    }
    Ok(out)
}

fn run_dataset(args: &DatasetArgs) -> CmdResult {
    let props = match (&args.prop_csv, &args.prop_name) {
        (Some(csv), Some(name)) => Some((name.clone(), read_props(csv, name)?)),
        _ => None,
    };
    let files = cif_files(&args.input)?;
    let options = args.tolerance.options();
    let rows: Vec<Result<String, String>> = files
        .par_iter()
        .map(|(path, rel)| {
            let id = file_id(rel);
            let crystal = read_crystal(path)?;
            let cell = canonicalize_with(&crystal, &options)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            let mut bins = Vec::new();
            let mut prop_bins = BTreeMap::new();
            if let Some((name, values)) = &props {
                match values.get(&id) {
                    Some(&v) => {
                        let bin =
                            bin_property(v, args.prop_width).map_err(|e| format!("{id}: {e}"))?;
                        bins.push((name.clone(), bin));
                        prop_bins.insert(name.clone(), bin);
                    }
                    None => {
                        eprintln!("warning: no {name} value for {id}; slot left as unknown_prop")
                    }
                }
            }
            let seq = encode(&cell, &bins).map_err(|e| format!("{}: {e}", path.display()))?;
            let row = serde_json::json!({
                "id": id,
                "sequence": seq.text,
                "n_atoms": cell.n_atoms(),
                "n_ops": cell.operations.len(),
                "space_group_label": cell.space_group_label,
                "prop_bins": prop_bins,
            });
            Ok(row.to_string())
        })
        .collect();
    let mut failures = 0;
    let mut out = Vec::new();
    for r in rows {
        match r {
            Ok(line) => {
                out.extend_from_slice(line.as_bytes());
                out.push(b'\n');
            }
            Err(e) => {
                eprintln!("error: {e}");
                failures += 1;
            }
        }
    }
    let mut file =
        fs::File::create(&args.out).map_err(|e| format!("{}: {e}", args.out.display()))?;
    file.write_all(&out)
        .map_err(|e| format!("{}: {e}", args.out.display()))?;
    Ok(status(failures))
}
