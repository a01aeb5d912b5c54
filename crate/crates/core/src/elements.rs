//! Element symbols and the subset covered by the sequence vocabulary.

/// Symbols for Z = 1..=103, indexed by `Z - 1`.
const SYMBOLS: [&str; 103] = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl",
    "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As",
    "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In",
    "Sn", "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb",
    "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl",
    "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk",
    "Cf", "Es", "Fm", "Md", "No", "Lr",
];

/// The 89 atom types with a vocabulary token, in alphabetical order.
pub const VOCABULARY_ELEMENTS: [&str; 89] = [
    "Ac", "Ag", "Al", "Ar", "As", "Au", "B", "Ba", "Be", "Bi", "Br", "C", "Ca", "Cd", "Ce", "Cl",
    "Co", "Cr", "Cs", "Cu", "Dy", "Er", "Eu", "F", "Fe", "Ga", "Gd", "Ge", "H", "He", "Hf", "Hg",
    "Ho", "I", "In", "Ir", "K", "Kr", "La", "Li", "Lu", "Mg", "Mn", "Mo", "N", "Na", "Nb", "Nd",
    "Ne", "Ni", "Np", "O", "Os", "P", "Pa", "Pb", "Pd", "Pm", "Pr", "Pt", "Pu", "Rb", "Re", "Rh",
    "Ru", "S", "Sb", "Sc", "Se", "Si", "Sm", "Sn", "Sr", "Ta", "Tb", "Tc", "Te", "Th", "Ti", "Tl",
    "Tm", "U", "V", "W", "Xe", "Y", "Yb", "Zn", "Zr",
];

pub const MAX_ATOMIC_NUMBER: u8 = 103;

pub fn symbol(z: u8) -> Option<&'static str> {
    if z == 0 || z > MAX_ATOMIC_NUMBER {
        return None;
    }
    Some(SYMBOLS[(z - 1) as usize])
}

pub fn atomic_number(symbol: &str) -> Option<u8> {
    SYMBOLS
        .iter()
        .position(|&s| s == symbol)
        .map(|i| (i + 1) as u8)
}

/// Whether `z` has a token of its own (Z 1..=83 and 89..=94).
pub fn in_vocabulary(z: u8) -> bool {
    matches!(z, 1..=83 | 89..=94)
}

/// Strips oxidation states and labels from a CIF type symbol (`"Fe3+"`, `"O2-"`, `"Na1"`).
pub fn parse_type_symbol(raw: &str) -> Option<u8> {
    let letters: String = raw
        .trim()
        .chars()
        .take_while(|c| c.is_ascii_alphabetic())
        .collect();
    if letters.is_empty() {
        return None;
    }
    let mut chars = letters.chars();
    let first = chars.next()?.to_ascii_uppercase();
    let rest: String = chars.map(|c| c.to_ascii_lowercase()).collect();
    // try two-letter symbol first, then one-letter
    if !rest.is_empty() {
        let two = format!("{first}{}", &rest[..1]);
        if let Some(z) = atomic_number(&two) {
            return Some(z);
        }
    }
    atomic_number(&first.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vocabulary_matches_membership_rule() {
        let mut from_table: Vec<u8> = VOCABULARY_ELEMENTS
            .iter()
            .map(|s| atomic_number(s).unwrap())
            .collect();
        from_table.sort_unstable();
        let from_rule: Vec<u8> = (1..=MAX_ATOMIC_NUMBER)
            .filter(|&z| in_vocabulary(z))
            .collect();
        assert_eq!(from_table, from_rule);
        assert_eq!(from_rule.len(), 89);
    }

    #[test]
    fn symbol_round_trip() {
        for z in 1..=MAX_ATOMIC_NUMBER {
            assert_eq!(atomic_number(symbol(z).unwrap()), Some(z));
        }
        assert_eq!(symbol(0), None);
        assert_eq!(symbol(104), None);
    }

    #[test]
    fn cif_type_symbols() {
        assert_eq!(parse_type_symbol("Fe3+"), Some(26));
        assert_eq!(parse_type_symbol("O2-"), Some(8));
        assert_eq!(parse_type_symbol("Na1"), Some(11));
        assert_eq!(parse_type_symbol("CL"), Some(17));
        assert_eq!(parse_type_symbol("C12"), Some(6));
        assert_eq!(parse_type_symbol("Xx"), None);
    }
}
