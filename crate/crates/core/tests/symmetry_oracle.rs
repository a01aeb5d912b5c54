//! Cross-checks against moyo, an independent symmetry finder.

use mat2seq::codec::cell_to_crystal;
use mat2seq::symmetry::{detect_operations, space_group_table, Fingerprint};
use mat2seq::verify::{prototypes, random_corpus};
use mat2seq::{canonicalize, reduce_to_primitive, Crystal, SymmetryOperation};
use moyo::base::{AngleTolerance, Cell, Lattice};
use moyo::data::{hall_symbol_entry, HallSymbol, Setting};
use moyo::MoyoDataset;

fn moyo_dataset(c: &Crystal) -> MoyoDataset {
    let cell = Cell::new(
        Lattice::new(*c.lattice()),
        c.frac_positions().to_vec(),
        c.species().iter().map(|&z| z as i32).collect(),
    );
    MoyoDataset::new(&cell, 1e-3, AngleTolerance::Default, Setting::Spglib, false).unwrap()
}

#[test]
fn bundled_table_matches_database() {
    let table = space_group_table();
    assert_eq!(table.len(), 230);
    let mut hall_number = 1;
    for entry in table {
        while hall_symbol_entry(hall_number).unwrap().number != entry.number as i32 {
            hall_number += 1;
        }
        let db = hall_symbol_entry(hall_number).unwrap();
        let ops: Vec<SymmetryOperation> = HallSymbol::new(db.hall_symbol)
            .unwrap()
            .primitive_traverse()
            .into_iter()
            .map(|op| SymmetryOperation::new(op.rotation, op.translation))
            .collect();
        assert_eq!(
            entry.fingerprint(),
            Fingerprint::from_operations(&ops),
            "{}",
            entry.label
        );
        let label: String = db.hm_short.chars().filter(|c| !c.is_whitespace()).collect();
        assert_eq!(entry.label, label);
    }
}

#[test]
fn operation_counts_agree_on_prototypes() {
    for (name, c) in prototypes() {
        let prim = reduce_to_primitive(&c).unwrap();
        let ours = detect_operations(&prim, 0.01).unwrap();
        let theirs = moyo_dataset(&prim);
        assert_eq!(ours.len(), theirs.operations.len(), "{name}");
    }
}

#[test]
fn labels_agree_with_database_number() {
    let table = space_group_table();
    for (name, c) in prototypes() {
        let cell = canonicalize(&c).unwrap();
        let number = moyo_dataset(&cell_to_crystal(&cell).unwrap()).number;
        if let Some(entry) = table.iter().find(|e| e.label == cell.space_group_label) {
            assert_eq!(entry.number as i32, number, "{name}");
        } else {
            // an ambiguous fingerprint falls back to the operation count
            assert_eq!(
                cell.space_group_label,
                format!("G{}", cell.operations.len()),
                "{name}"
            );
            let fp = Fingerprint::from_operations(&cell.operations);
            let truth = table.iter().find(|e| e.number as i32 == number).unwrap();
            assert_eq!(truth.fingerprint(), fp, "{name}");
        }
    }
}

#[test]
fn random_corpus_operation_counts_agree() {
    for c in random_corpus(40, 99) {
        let prim = reduce_to_primitive(&c).unwrap();
        let ours = detect_operations(&prim, 0.01).unwrap();
        assert_eq!(ours.len(), moyo_dataset(&prim).operations.len());
    }
}
