use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use mat2seq::verify::{match_structures, prototypes, random_corpus};
use mat2seq::{parse_cif, write_cif, Crystal};
use tempfile::TempDir;

fn mat2seq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mat2seq"))
        .args(args)
        .env_remove("MAT2SEQ_SYMPREC")
        .output()
        .unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn prototype(name: &str) -> Crystal {
    prototypes()
        .into_iter()
        .find(|(n, _)| *n == name)
        .unwrap()
        .1
}

fn write_crystal(path: &Path, c: &Crystal) {
    fs::create_dir_all(path.parent().unwrap()).unwrap();
    fs::write(path, write_cif(c).unwrap()).unwrap();
}

const PARTIAL_OCCUPANCY: &str = "data_bad
_cell_length_a 4
_cell_length_b 4
_cell_length_c 4
_cell_angle_alpha 90
_cell_angle_beta 90
_cell_angle_gamma 90
loop_
_atom_site_label
_atom_site_type_symbol
_atom_site_fract_x
_atom_site_fract_y
_atom_site_fract_z
_atom_site_occupancy
Fe1 Fe 0 0 0 0.5
";

#[test]
fn encode_single_file_with_property() {
    let dir = TempDir::new().unwrap();
    let cif = dir.path().join("nacl.cif");
    write_crystal(&cif, &prototype("NaCl"));
    let seq = dir.path().join("nacl.seq");
    let out = mat2seq(&[
        "encode",
        "--input",
        path_str(&cif),
        "--out",
        path_str(&seq),
        "--prop",
        "band_gap=0.7",
        "--prop-width",
        "0.5",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = fs::read_to_string(&seq).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "prop: 1");
    assert!(lines[1..10].iter().all(|l| *l == "prop: unknown_prop"));
    assert_eq!(lines[10], "formula: NaCl");
    assert!(text.ends_with('\n'));
}

#[test]
fn encode_directory_continues_past_failures() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("in");
    write_crystal(&input.join("a.cif"), &prototype("CsCl"));
    write_crystal(&input.join("sub/b.cif"), &prototype("Mg-hcp"));
    fs::write(input.join("bad.cif"), PARTIAL_OCCUPANCY).unwrap();
    let out_dir = dir.path().join("out");
    let out = mat2seq(&[
        "encode",
        "--input",
        path_str(&input),
        "--out",
        path_str(&out_dir),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("bad.cif") && stderr.contains("partial occupancy"),
        "{stderr}"
    );
    assert!(out_dir.join("a.seq").is_file());
    assert!(out_dir.join("sub/b.seq").is_file());
    assert!(!out_dir.join("bad.seq").exists());
}

#[test]
fn decode_round_trip_matches_and_is_stable() {
    let dir = TempDir::new().unwrap();
    let original = prototype("TiO2-rutile");
    let cif = dir.path().join("rutile.cif");
    write_crystal(&cif, &original);
    let seq = dir.path().join("rutile.seq");
    let back = dir.path().join("back.cif");
    let again = dir.path().join("again.seq");
    assert!(
        mat2seq(&["encode", "--input", path_str(&cif), "--out", path_str(&seq)])
            .status
            .success()
    );
    assert!(mat2seq(&[
        "decode",
        "--input",
        path_str(&seq),
        "--out",
        path_str(&back)
    ])
    .status
    .success());
    let decoded = parse_cif(&fs::read_to_string(&back).unwrap()).unwrap();
    let m = match_structures(&original, &decoded).unwrap();
    assert!(m.matched && m.normalized_rmse.unwrap() <= 1e-3, "{m:?}");
    assert!(mat2seq(&[
        "encode",
        "--input",
        path_str(&back),
        "--out",
        path_str(&again)
    ])
    .status
    .success());
    assert_eq!(
        fs::read_to_string(&seq).unwrap(),
        fs::read_to_string(&again).unwrap()
    );
}

#[test]
fn decode_reports_parse_position() {
    let dir = TempDir::new().unwrap();
    let empty = dir.path().join("empty.seq");
    fs::write(&empty, "").unwrap();
    let out = mat2seq(&[
        "decode",
        "--input",
        path_str(&empty),
        "--out",
        path_str(&dir.path().join("x.cif")),
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, column 1"));

    let broken = dir.path().join("broken.seq");
    fs::write(&broken, "prop: unknown_prop\nprop: banana\n").unwrap();
    let out = mat2seq(&[
        "decode",
        "--input",
        path_str(&broken),
        "--out",
        path_str(&dir.path().join("y.cif")),
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

fn corpus_dir(dir: &Path) {
    for (i, c) in random_corpus(3, 5).iter().enumerate() {
        write_crystal(&dir.join(format!("r{i}.cif")), c);
    }
    write_crystal(&dir.join("nacl.cif"), &prototype("NaCl"));
}

#[test]
fn verify_prints_rate_and_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("corpus");
    corpus_dir(&input);
    let report_a = dir.path().join("a.json");
    let report_b = dir.path().join("b.json");
    for report in [&report_a, &report_b] {
        let out = mat2seq(&[
            "verify",
            "--input",
            path_str(&input),
            "--trials",
            "3",
            "--seed",
            "9",
            "--report",
            path_str(report),
        ]);
        assert!(out.status.success());
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            "success_rate: 1.0000\n"
        );
    }
    let a = fs::read(&report_a).unwrap();
    assert_eq!(a, fs::read(&report_b).unwrap());
    let json: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(json["total"], 12);
    assert_eq!(json["failures"].as_array().unwrap().len(), 0);

    let out = mat2seq(&[
        "verify",
        "--input",
        path_str(&input),
        "--transforms",
        "none",
    ]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "success_rate: 1.0000\n"
    );
}

#[test]
fn dataset_without_properties() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("corpus");
    for (name, c) in prototypes().into_iter().take(3) {
        write_crystal(&input.join(format!("{name}.cif")), &c);
    }
    let out_path = dir.path().join("corpus.jsonl");
    let out = mat2seq(&[
        "dataset",
        "--input",
        path_str(&input),
        "--out",
        path_str(&out_path),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&out_path).unwrap();
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 3);
    let ids: Vec<&str> = rows.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["CsCl", "Fe-bcc", "NaCl"]);
    for r in &rows {
        let seq = r["sequence"].as_str().unwrap();
        assert_eq!(seq.matches("prop: unknown_prop\n").count(), 10);
        assert!(r["n_atoms"].as_u64().unwrap() >= 1);
        assert!(r["n_ops"].as_u64().unwrap() >= 1);
        assert!(r["space_group_label"].is_string());
    }
}

#[test]
fn dataset_with_property_bins() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("corpus");
    write_crystal(&input.join("nacl.cif"), &prototype("NaCl"));
    write_crystal(&input.join("cscl.cif"), &prototype("CsCl"));
    let csv = dir.path().join("props.csv");
    fs::write(&csv, "id,band_gap\nnacl,0.7\n").unwrap();
    let out_path = dir.path().join("corpus.jsonl");
    let out = mat2seq(&[
        "dataset",
        "--input",
        path_str(&input),
        "--out",
        path_str(&out_path),
        "--prop-csv",
        path_str(&csv),
        "--prop-name",
        "band_gap",
        "--prop-width",
        "0.5",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning: no band_gap value for cscl"));
    let rows: Vec<serde_json::Value> = fs::read_to_string(&out_path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows[0]["id"], "cscl");
    assert_eq!(rows[0]["prop_bins"], serde_json::json!({}));
    assert_eq!(rows[1]["prop_bins"]["band_gap"], 1);
    assert!(rows[1]["sequence"]
        .as_str()
        .unwrap()
        .starts_with("prop: 1\n"));
}

#[test]
fn dataset_rejects_duplicate_ids() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("corpus");
    write_crystal(&input.join("nacl.cif"), &prototype("NaCl"));
    let csv = dir.path().join("props.csv");
    fs::write(&csv, "id,band_gap\nnacl,0.7\nnacl,1.2\n").unwrap();
    let out_path = dir.path().join("corpus.jsonl");
    let out = mat2seq(&[
        "dataset",
        "--input",
        path_str(&input),
        "--out",
        path_str(&out_path),
        "--prop-csv",
        path_str(&csv),
        "--prop-name",
        "band_gap",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate id"));
    assert!(!out_path.exists());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(mat2seq(&["encode"]).status.code(), Some(1));
    assert_eq!(mat2seq(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        mat2seq(&["verify", "--input", ".", "--transforms", "spin"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(mat2seq(&["--help"]).status.code(), Some(0));
}

#[test]
fn symprec_environment_variable() {
    let dir = TempDir::new().unwrap();
    let cif = dir.path().join("cscl.cif");
    write_crystal(&cif, &prototype("CsCl"));
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_mat2seq"))
            .args([
                "encode",
                "--input",
                path_str(&cif),
                "--out",
                path_str(&dir.path().join("o.seq")),
            ])
            .env("MAT2SEQ_SYMPREC", value)
            .output()
            .unwrap()
    };
    assert!(run("0.001").status.success());
    assert_eq!(run("not-a-number").status.code(), Some(1));
}
