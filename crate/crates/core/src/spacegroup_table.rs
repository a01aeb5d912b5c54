// Generated by `cargo run -p mat2seq --example gen_spacegroup_table`; do not edit.

use crate::symmetry::SpaceGroupEntry;

pub(crate) static SPACE_GROUPS: [SpaceGroupEntry; 230] = [
    SpaceGroupEntry { number: 1, label: "P1", order: 1, rotation_types: [1, 0, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 2, label: "P-1", order: 2, rotation_types: [1, 0, 0, 0, 0, 1, 0, 0, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 3, label: "P2", order: 2, rotation_types: [1, 1, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 4, label: "P2_1", order: 2, rotation_types: [1, 1, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 5, label: "C2", order: 2, rotation_types: [1, 1, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 6, label: "Pm", order: 2, rotation_types: [1, 0, 0, 0, 0, 0, 1, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 7, label: "Pc", order: 2, rotation_types: [1, 0, 0, 0, 0, 0, 1, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 8, label: "Cm", order: 2, rotation_types: [1, 0, 0, 0, 0, 0, 1, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 9, label: "Cc", order: 2, rotation_types: [1, 0, 0, 0, 0, 0, 1, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 10, label: "P2/m", order: 4, rotation_types: [1, 1, 0, 0, 0, 1, 1, 0, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 11, label: "P2_1/m", order: 4, rotation_types: [1, 1, 0, 0, 0, 1, 1, 0, 0, 0], centrosymmetric: true, screw: true, glide: false },
    SpaceGroupEntry { number: 12, label: "C2/m", order: 4, rotation_types: [1, 1, 0, 0, 0, 1, 1, 0, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 13, label: "P2/c", order: 4, rotation_types: [1, 1, 0, 0, 0, 1, 1, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 14, label: "P2_1/c", order: 4, rotation_types: [1, 1, 0, 0, 0, 1, 1, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 15, label: "C2/c", order: 4, rotation_types: [1, 1, 0, 0, 0, 1, 1, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 16, label: "P222", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 17, label: "P222_1", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 18, label: "P2_12_12", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 19, label: "P2_12_12_1", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 20, label: "C222_1", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 21, label: "C222", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 22, label: "F222", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 23, label: "I222", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 24, label: "I2_12_12_1", order: 4, rotation_types: [1, 3, 0, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 25, label: "Pmm2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 26, label: "Pmc2_1", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 27, label: "Pcc2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 28, label: "Pma2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 29, label: "Pca2_1", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 30, label: "Pnc2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 31, label: "Pmn2_1", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 32, label: "Pba2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 33, label: "Pna2_1", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 34, label: "Pnn2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 35, label: "Cmm2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 36, label: "Cmc2_1", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 37, label: "Ccc2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 38, label: "Amm2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 39, label: "Aem2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 40, label: "Ama2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 41, label: "Aea2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 42, label: "Fmm2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 43, label: "Fdd2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 44, label: "Imm2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 45, label: "Iba2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 46, label: "Ima2", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 2, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 47, label: "Pmmm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 48, label: "Pnnn", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 49, label: "Pccm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 50, label: "Pban", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 51, label: "Pmma", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 52, label: "Pnna", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 53, label: "Pmna", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 54, label: "Pcca", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 55, label: "Pbam", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 56, label: "Pccn", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 57, label: "Pbcm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 58, label: "Pnnm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 59, label: "Pmmn", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 60, label: "Pbcn", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 61, label: "Pbca", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 62, label: "Pnma", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 63, label: "Cmcm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 64, label: "Cmce", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 65, label: "Cmmm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 66, label: "Cccm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 67, label: "Cmme", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 68, label: "Ccce", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 69, label: "Fmmm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 70, label: "Fddd", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 71, label: "Immm", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 72, label: "Ibam", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 73, label: "Ibca", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 74, label: "Imma", order: 8, rotation_types: [1, 3, 0, 0, 0, 1, 3, 0, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 75, label: "P4", order: 4, rotation_types: [1, 1, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 76, label: "P4_1", order: 4, rotation_types: [1, 1, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 77, label: "P4_2", order: 4, rotation_types: [1, 1, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 78, label: "P4_3", order: 4, rotation_types: [1, 1, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 79, label: "I4", order: 4, rotation_types: [1, 1, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 80, label: "I4_1", order: 4, rotation_types: [1, 1, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 81, label: "P-4", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 0, 0, 2, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 82, label: "I-4", order: 4, rotation_types: [1, 1, 0, 0, 0, 0, 0, 0, 2, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 83, label: "P4/m", order: 8, rotation_types: [1, 1, 0, 2, 0, 1, 1, 0, 2, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 84, label: "P4_2/m", order: 8, rotation_types: [1, 1, 0, 2, 0, 1, 1, 0, 2, 0], centrosymmetric: true, screw: true, glide: false },
    SpaceGroupEntry { number: 85, label: "P4/n", order: 8, rotation_types: [1, 1, 0, 2, 0, 1, 1, 0, 2, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 86, label: "P4_2/n", order: 8, rotation_types: [1, 1, 0, 2, 0, 1, 1, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 87, label: "I4/m", order: 8, rotation_types: [1, 1, 0, 2, 0, 1, 1, 0, 2, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 88, label: "I4_1/a", order: 8, rotation_types: [1, 1, 0, 2, 0, 1, 1, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 89, label: "P422", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 90, label: "P42_12", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 91, label: "P4_122", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 92, label: "P4_12_12", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 93, label: "P4_222", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 94, label: "P4_22_12", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 95, label: "P4_322", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 96, label: "P4_32_12", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 97, label: "I422", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 98, label: "I4_122", order: 8, rotation_types: [1, 5, 0, 2, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 99, label: "P4mm", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 100, label: "P4bm", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 101, label: "P4_2cm", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 102, label: "P4_2nm", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 103, label: "P4cc", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 104, label: "P4nc", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 105, label: "P4_2mc", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 106, label: "P4_2bc", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 107, label: "I4mm", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 108, label: "I4cm", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 109, label: "I4_1md", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 110, label: "I4_1cd", order: 8, rotation_types: [1, 1, 0, 2, 0, 0, 4, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 111, label: "P-42m", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 112, label: "P-42c", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 113, label: "P-42_1m", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 114, label: "P-42_1c", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 115, label: "P-4m2", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 116, label: "P-4c2", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 117, label: "P-4b2", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 118, label: "P-4n2", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 119, label: "I-4m2", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 120, label: "I-4c2", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 121, label: "I-42m", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 122, label: "I-42d", order: 8, rotation_types: [1, 3, 0, 0, 0, 0, 2, 0, 2, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 123, label: "P4/mmm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 124, label: "P4/mcc", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 125, label: "P4/nbm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 126, label: "P4/nnc", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 127, label: "P4/mbm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 128, label: "P4/mnc", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 129, label: "P4/nmm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 130, label: "P4/ncc", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 131, label: "P4_2/mmc", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 132, label: "P4_2/mcm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 133, label: "P4_2/nbc", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 134, label: "P4_2/nnm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 135, label: "P4_2/mbc", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 136, label: "P4_2/mnm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 137, label: "P4_2/nmc", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 138, label: "P4_2/ncm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 139, label: "I4/mmm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 140, label: "I4/mcm", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 141, label: "I4_1/amd", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 142, label: "I4_1/acd", order: 16, rotation_types: [1, 5, 0, 2, 0, 1, 5, 0, 2, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 143, label: "P3", order: 3, rotation_types: [1, 0, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 144, label: "P3_1", order: 3, rotation_types: [1, 0, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 145, label: "P3_2", order: 3, rotation_types: [1, 0, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 146, label: "R3", order: 3, rotation_types: [1, 0, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 147, label: "P-3", order: 6, rotation_types: [1, 0, 2, 0, 0, 1, 0, 2, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 148, label: "R-3", order: 6, rotation_types: [1, 0, 2, 0, 0, 1, 0, 2, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 149, label: "P312", order: 6, rotation_types: [1, 3, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 150, label: "P321", order: 6, rotation_types: [1, 3, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 151, label: "P3_112", order: 6, rotation_types: [1, 3, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 152, label: "P3_121", order: 6, rotation_types: [1, 3, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 153, label: "P3_212", order: 6, rotation_types: [1, 3, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 154, label: "P3_221", order: 6, rotation_types: [1, 3, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 155, label: "R32", order: 6, rotation_types: [1, 3, 2, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 156, label: "P3m1", order: 6, rotation_types: [1, 0, 2, 0, 0, 0, 3, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 157, label: "P31m", order: 6, rotation_types: [1, 0, 2, 0, 0, 0, 3, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 158, label: "P3c1", order: 6, rotation_types: [1, 0, 2, 0, 0, 0, 3, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 159, label: "P31c", order: 6, rotation_types: [1, 0, 2, 0, 0, 0, 3, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 160, label: "R3m", order: 6, rotation_types: [1, 0, 2, 0, 0, 0, 3, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 161, label: "R3c", order: 6, rotation_types: [1, 0, 2, 0, 0, 0, 3, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 162, label: "P-31m", order: 12, rotation_types: [1, 3, 2, 0, 0, 1, 3, 2, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 163, label: "P-31c", order: 12, rotation_types: [1, 3, 2, 0, 0, 1, 3, 2, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 164, label: "P-3m1", order: 12, rotation_types: [1, 3, 2, 0, 0, 1, 3, 2, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 165, label: "P-3c1", order: 12, rotation_types: [1, 3, 2, 0, 0, 1, 3, 2, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 166, label: "R-3m", order: 12, rotation_types: [1, 3, 2, 0, 0, 1, 3, 2, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 167, label: "R-3c", order: 12, rotation_types: [1, 3, 2, 0, 0, 1, 3, 2, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 168, label: "P6", order: 6, rotation_types: [1, 1, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 169, label: "P6_1", order: 6, rotation_types: [1, 1, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 170, label: "P6_5", order: 6, rotation_types: [1, 1, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 171, label: "P6_2", order: 6, rotation_types: [1, 1, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 172, label: "P6_4", order: 6, rotation_types: [1, 1, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 173, label: "P6_3", order: 6, rotation_types: [1, 1, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 174, label: "P-6", order: 6, rotation_types: [1, 0, 2, 0, 0, 0, 1, 0, 0, 2], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 175, label: "P6/m", order: 12, rotation_types: [1, 1, 2, 0, 2, 1, 1, 2, 0, 2], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 176, label: "P6_3/m", order: 12, rotation_types: [1, 1, 2, 0, 2, 1, 1, 2, 0, 2], centrosymmetric: true, screw: true, glide: false },
    SpaceGroupEntry { number: 177, label: "P622", order: 12, rotation_types: [1, 7, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 178, label: "P6_122", order: 12, rotation_types: [1, 7, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 179, label: "P6_522", order: 12, rotation_types: [1, 7, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 180, label: "P6_222", order: 12, rotation_types: [1, 7, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 181, label: "P6_422", order: 12, rotation_types: [1, 7, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 182, label: "P6_322", order: 12, rotation_types: [1, 7, 2, 0, 2, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 183, label: "P6mm", order: 12, rotation_types: [1, 1, 2, 0, 2, 0, 6, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 184, label: "P6cc", order: 12, rotation_types: [1, 1, 2, 0, 2, 0, 6, 0, 0, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 185, label: "P6_3cm", order: 12, rotation_types: [1, 1, 2, 0, 2, 0, 6, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 186, label: "P6_3mc", order: 12, rotation_types: [1, 1, 2, 0, 2, 0, 6, 0, 0, 0], centrosymmetric: false, screw: true, glide: true },
    SpaceGroupEntry { number: 187, label: "P-6m2", order: 12, rotation_types: [1, 3, 2, 0, 0, 0, 4, 0, 0, 2], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 188, label: "P-6c2", order: 12, rotation_types: [1, 3, 2, 0, 0, 0, 4, 0, 0, 2], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 189, label: "P-62m", order: 12, rotation_types: [1, 3, 2, 0, 0, 0, 4, 0, 0, 2], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 190, label: "P-62c", order: 12, rotation_types: [1, 3, 2, 0, 0, 0, 4, 0, 0, 2], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 191, label: "P6/mmm", order: 24, rotation_types: [1, 7, 2, 0, 2, 1, 7, 2, 0, 2], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 192, label: "P6/mcc", order: 24, rotation_types: [1, 7, 2, 0, 2, 1, 7, 2, 0, 2], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 193, label: "P6_3/mcm", order: 24, rotation_types: [1, 7, 2, 0, 2, 1, 7, 2, 0, 2], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 194, label: "P6_3/mmc", order: 24, rotation_types: [1, 7, 2, 0, 2, 1, 7, 2, 0, 2], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 195, label: "P23", order: 12, rotation_types: [1, 3, 8, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 196, label: "F23", order: 12, rotation_types: [1, 3, 8, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 197, label: "I23", order: 12, rotation_types: [1, 3, 8, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 198, label: "P2_13", order: 12, rotation_types: [1, 3, 8, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 199, label: "I2_13", order: 12, rotation_types: [1, 3, 8, 0, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 200, label: "Pm-3", order: 24, rotation_types: [1, 3, 8, 0, 0, 1, 3, 8, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 201, label: "Pn-3", order: 24, rotation_types: [1, 3, 8, 0, 0, 1, 3, 8, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 202, label: "Fm-3", order: 24, rotation_types: [1, 3, 8, 0, 0, 1, 3, 8, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 203, label: "Fd-3", order: 24, rotation_types: [1, 3, 8, 0, 0, 1, 3, 8, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 204, label: "Im-3", order: 24, rotation_types: [1, 3, 8, 0, 0, 1, 3, 8, 0, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 205, label: "Pa-3", order: 24, rotation_types: [1, 3, 8, 0, 0, 1, 3, 8, 0, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 206, label: "Ia-3", order: 24, rotation_types: [1, 3, 8, 0, 0, 1, 3, 8, 0, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 207, label: "P432", order: 24, rotation_types: [1, 9, 8, 6, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 208, label: "P4_232", order: 24, rotation_types: [1, 9, 8, 6, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 209, label: "F432", order: 24, rotation_types: [1, 9, 8, 6, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 210, label: "F4_132", order: 24, rotation_types: [1, 9, 8, 6, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 211, label: "I432", order: 24, rotation_types: [1, 9, 8, 6, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 212, label: "P4_332", order: 24, rotation_types: [1, 9, 8, 6, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 213, label: "P4_132", order: 24, rotation_types: [1, 9, 8, 6, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 214, label: "I4_132", order: 24, rotation_types: [1, 9, 8, 6, 0, 0, 0, 0, 0, 0], centrosymmetric: false, screw: true, glide: false },
    SpaceGroupEntry { number: 215, label: "P-43m", order: 24, rotation_types: [1, 3, 8, 0, 0, 0, 6, 0, 6, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 216, label: "F-43m", order: 24, rotation_types: [1, 3, 8, 0, 0, 0, 6, 0, 6, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 217, label: "I-43m", order: 24, rotation_types: [1, 3, 8, 0, 0, 0, 6, 0, 6, 0], centrosymmetric: false, screw: false, glide: false },
    SpaceGroupEntry { number: 218, label: "P-43n", order: 24, rotation_types: [1, 3, 8, 0, 0, 0, 6, 0, 6, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 219, label: "F-43c", order: 24, rotation_types: [1, 3, 8, 0, 0, 0, 6, 0, 6, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 220, label: "I-43d", order: 24, rotation_types: [1, 3, 8, 0, 0, 0, 6, 0, 6, 0], centrosymmetric: false, screw: false, glide: true },
    SpaceGroupEntry { number: 221, label: "Pm-3m", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 222, label: "Pn-3n", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 223, label: "Pm-3n", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 224, label: "Pn-3m", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 225, label: "Fm-3m", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 226, label: "Fm-3c", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: false, glide: true },
    SpaceGroupEntry { number: 227, label: "Fd-3m", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 228, label: "Fd-3c", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: true, glide: true },
    SpaceGroupEntry { number: 229, label: "Im-3m", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: false, glide: false },
    SpaceGroupEntry { number: 230, label: "Ia-3d", order: 48, rotation_types: [1, 9, 8, 6, 0, 1, 9, 8, 6, 0], centrosymmetric: true, screw: true, glide: true },
];
