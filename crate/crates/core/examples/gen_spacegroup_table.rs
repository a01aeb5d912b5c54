//! Prints `src/spacegroup_table.rs` from the moyo Hall-symbol database.
//!
//! `cargo run -p mat2seq --example gen_spacegroup_table > crates/core/src/spacegroup_table.rs`

use mat2seq::symmetry::Fingerprint;
use mat2seq::SymmetryOperation;
use moyo::data::{hall_symbol_entry, HallSymbol};

fn main() {
    let mut rows = Vec::new();
    let mut last_number = 0;
    for hall_number in 1..=530 {
        let entry = hall_symbol_entry(hall_number).expect("hall numbers 1..=530 exist");
        if entry.number == last_number {
            continue;
        }
        last_number = entry.number;
        let ops: Vec<SymmetryOperation> = HallSymbol::new(entry.hall_symbol)
            .expect("database symbols parse")
            .primitive_traverse()
            .into_iter()
            .map(|op| SymmetryOperation::new(op.rotation, op.translation))
            .collect();
        let fp = Fingerprint::from_operations(&ops);
        let label: String = entry
            .hm_short
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        rows.push(format!(
            "    SpaceGroupEntry {{ number: {}, label: {:?}, order: {}, rotation_types: {:?}, centrosymmetric: {}, screw: {}, glide: {} }},",
            entry.number, label, fp.order, fp.rotation_types, fp.centrosymmetric, fp.screw, fp.glide
        ));
    }
    println!("// Generated by `cargo run -p mat2seq --example gen_spacegroup_table`; do not edit.");
    println!();
    println!("use crate::symmetry::SpaceGroupEntry;");
    println!();
    println!(
        "pub(crate) static SPACE_GROUPS: [SpaceGroupEntry; {}] = [",
        rows.len()
    );
    for r in rows {
        println!("{r}");
    }
    println!("];");
}
