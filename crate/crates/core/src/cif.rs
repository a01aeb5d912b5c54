//! A small CIF subset: cell parameters, fractional atom sites and an optional xyz operation loop.

use std::collections::HashMap;

use nalgebra::Vector3;

use crate::crystal::{
    lattice_from_params, min_image, wrap_frac, Crystal, LatticeParameters, SymmetryOperation,
};
use crate::elements;
use crate::error::{Error, Result};
use crate::symmetry::parse_triplet;

/// Sites generated by the operation loop closer than this (max-norm, fractional) are merged.
pub const SITE_MERGE_TOL: f64 = 1e-4;
/// Allowed deviation of `_atom_site_occupancy` from 1.
pub const OCCUPANCY_TOL: f64 = 1e-4;

const OPERATION_TAGS: [&str; 2] = [
    "_symmetry_equiv_pos_as_xyz",
    "_space_group_symop_operation_xyz",
];

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Data(String),
    Loop,
    Tag(String),
    Value(String),
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut lines = text.lines().peekable();
    while let Some(line) = lines.next() {
        if let Some(first) = line.strip_prefix(';') {
            // semicolon text field runs to the next line starting with ';'
            let mut field = first.to_string();
            for next in lines.by_ref() {
                if next.starts_with(';') {
                    break;
                }
                field.push('\n');
                field.push_str(next);
            }
            out.push(Token::Value(field));
            continue;
        }
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c == '#' {
                break;
            }
            if c == '\'' || c == '"' {
                // a quote closes only when followed by whitespace or end of line
                let mut j = i + 1;
                while j < chars.len()
                    && !(chars[j] == c && chars.get(j + 1).is_none_or(|n| n.is_whitespace()))
                {
                    j += 1;
                }
                out.push(Token::Value(
                    chars[i + 1..j.min(chars.len())].iter().collect(),
                ));
                i = j + 1;
                continue;
            }
            let start = i;
            while i < chars.len() && !chars[i].is_whitespace() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let lower = word.to_ascii_lowercase();
            if lower.starts_with("data_") {
                out.push(Token::Data(word[5..].to_string()));
            } else if lower == "loop_" {
                out.push(Token::Loop);
            } else if word.starts_with('_') {
                out.push(Token::Tag(lower));
            } else {
                out.push(Token::Value(word));
            }
        }
    }
    out
}

/// Parsed tags and loops of the first data block.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CifDocument {
    pub data_block_name: String,
    pub fields: HashMap<String, String>,
    pub loops: Vec<CifLoop>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CifLoop {
    pub tags: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CifLoop {
    fn column(&self, tag: &str) -> Option<usize> {
        self.tags.iter().position(|t| t == tag)
    }
}

pub fn parse_document(text: &str) -> Result<CifDocument> {
    let tokens = tokenize(text);
    let mut doc = CifDocument::default();
    let mut seen_block = false;
    let mut i = 0;
    while i < tokens.len() {
        match &tokens[i] {
            Token::Data(name) => {
                if seen_block {
                    break;
                }
                seen_block = true;
                doc.data_block_name = name.clone();
                i += 1;
            }
            Token::Loop => {
                i += 1;
                let mut lp = CifLoop::default();
                while let Some(Token::Tag(t)) = tokens.get(i) {
                    lp.tags.push(t.clone());
                    i += 1;
                }
                if lp.tags.is_empty() {
                    return Err(Error::MalformedLoop("loop_ without tags".into()));
                }
                let mut values = Vec::new();
                while let Some(Token::Value(v)) = tokens.get(i) {
                    values.push(v.clone());
                    i += 1;
                }
                if values.len() % lp.tags.len() != 0 {
                    return Err(Error::MalformedLoop(format!(
                        "{} values for {} tags starting at {}",
                        values.len(),
                        lp.tags.len(),
                        lp.tags[0]
                    )));
                }
                lp.rows = values
                    .chunks(lp.tags.len())
                    .map(<[String]>::to_vec)
                    .collect();
                doc.loops.push(lp);
            }
            Token::Tag(tag) => match tokens.get(i + 1) {
                Some(Token::Value(v)) => {
                    doc.fields.insert(tag.clone(), v.clone());
                    i += 2;
                }
                _ => return Err(Error::MissingField(format!("{tag} (no value)"))),
            },
            Token::Value(v) => {
                return Err(Error::MalformedLoop(format!(
                    "stray value {v:?} outside a loop"
                )));
            }
        }
    }
    Ok(doc)
}

/// Numeric CIF value with any standard uncertainty such as `5.640(2)` removed.
fn number(raw: &str, tag: &str) -> Result<f64> {
    let trimmed = raw.split('(').next().unwrap_or("");
    trimmed
        .parse::<f64>()
        .map_err(|_| Error::MissingField(format!("{tag} (not a number: {raw:?})")))
}

fn field(doc: &CifDocument, tag: &str) -> Result<f64> {
    let raw = doc
        .fields
        .get(tag)
        .ok_or_else(|| Error::MissingField(tag.to_string()))?;
    number(raw, tag)
}

pub fn parse_cif(text: &str) -> Result<Crystal> {
    let doc = parse_document(text)?;
    let params = LatticeParameters {
        a: field(&doc, "_cell_length_a")?,
        b: field(&doc, "_cell_length_b")?,
        c: field(&doc, "_cell_length_c")?,
        alpha: field(&doc, "_cell_angle_alpha")?,
        beta: field(&doc, "_cell_angle_beta")?,
        gamma: field(&doc, "_cell_angle_gamma")?,
    };
    let lattice = lattice_from_params(&params)?;

    let sites = doc
        .loops
        .iter()
        .find(|l| l.column("_atom_site_fract_x").is_some())
        .ok_or_else(|| Error::MissingField("_atom_site_fract_x".into()))?;
    let col = |tag: &str| {
        sites
            .column(tag)
            .ok_or_else(|| Error::MissingField(tag.to_string()))
    };
    let (cx, cy, cz) = (
        col("_atom_site_fract_x")?,
        col("_atom_site_fract_y")?,
        col("_atom_site_fract_z")?,
    );
    let label_col = sites.column("_atom_site_label");
    let type_col = sites.column("_atom_site_type_symbol");
    let occ_col = sites.column("_atom_site_occupancy");
    if label_col.is_none() && type_col.is_none() {
        return Err(Error::MissingField("_atom_site_type_symbol".into()));
    }
    if sites.rows.is_empty() {
        return Err(Error::MissingField("atom site rows".into()));
    }

    let ops: Vec<SymmetryOperation> = match doc.loops.iter().find_map(|l| {
        OPERATION_TAGS
            .iter()
            .find_map(|t| l.column(t))
            .map(|c| (l, c))
    }) {
        Some((lp, c)) => lp
            .rows
            .iter()
            .map(|r| {
                parse_triplet(&r[c])
                    .ok_or_else(|| Error::MalformedLoop(format!("bad operation {:?}", r[c])))
            })
            .collect::<Result<_>>()?,
        None => vec![SymmetryOperation::identity()],
    };

    let mut species = Vec::new();
    let mut frac: Vec<Vector3<f64>> = Vec::new();
    for row in &sites.rows {
        let label = label_col.map_or("", |c| row[c].as_str());
        let symbol = type_col.map_or(label, |c| row[c].as_str());
        let z = elements::parse_type_symbol(symbol)
            .ok_or_else(|| Error::UnknownElement(symbol.to_string()))?;
        if let Some(c) = occ_col {
            let occupancy = number(&row[c], "_atom_site_occupancy")?;
            if (occupancy - 1.0).abs() > OCCUPANCY_TOL {
                return Err(Error::PartialOccupancy {
                    label: label.to_string(),
                    occupancy,
                });
            }
        }
        let p = Vector3::new(
            number(&row[cx], "_atom_site_fract_x")?,
            number(&row[cy], "_atom_site_fract_y")?,
            number(&row[cz], "_atom_site_fract_z")?,
        );
        for op in &ops {
            let q = wrap_frac(&op.apply(&p));
            let duplicate = species
                .iter()
                .zip(&frac)
                .any(|(&s, f)| s == z && min_image(f, &q).amax() <= SITE_MERGE_TOL);
            if !duplicate {
                species.push(z);
                frac.push(q);
            }
        }
    }
    Crystal::new(species, frac, lattice)
}

/// P1 CIF with six decimals for cell parameters and coordinates.
pub fn write_cif(crystal: &Crystal) -> Result<String> {
    let p = crystal.params()?;
    let formula = crate::crystal::reduced_formula(&crystal.composition());
    let mut s = String::new();
    s.push_str(&format!("data_{formula}\n"));
    s.push_str("_symmetry_space_group_name_H-M   'P 1'\n");
    for (tag, v) in [
        ("_cell_length_a", p.a),
        ("_cell_length_b", p.b),
        ("_cell_length_c", p.c),
        ("_cell_angle_alpha", p.alpha),
        ("_cell_angle_beta", p.beta),
        ("_cell_angle_gamma", p.gamma),
    ] {
        s.push_str(&format!("{tag:<20}{v:.6}\n"));
    }
    s.push_str("loop_\n _symmetry_equiv_pos_as_xyz\n  'x, y, z'\n");
    s.push_str(
        "loop_\n _atom_site_label\n _atom_site_type_symbol\n _atom_site_fract_x\n _atom_site_fract_y\n _atom_site_fract_z\n _atom_site_occupancy\n",
    );
    for (i, (&z, f)) in crystal
        .species()
        .iter()
        .zip(crystal.frac_positions())
        .enumerate()
    {
        let sym = elements::symbol(z).expect("crystal species are valid");
        s.push_str(&format!(
            "  {sym}{i}  {sym}  {:.6}  {:.6}  {:.6}  1\n",
            f[0], f[1], f[2]
        ));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    const NACL: &str = "data_NaCl
# rock salt, conventional cell without operations
_cell_length_a 5.64
_cell_length_b   5.64
_cell_length_c 5.64(1)
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
Na1 Na+ 0 0 0 1.0
Cl1 Cl- 0.5 0.5 0.5 1
";

    #[test]
    fn reads_plain_sites() {
        let c = parse_cif(NACL).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.species(), &[11, 17]);
        assert!((c.params().unwrap().a - 5.64).abs() < 1e-12);
    }

    #[test]
    fn identity_loop_adds_nothing() {
        let with_ops = format!("{NACL}loop_\n_symmetry_equiv_pos_as_xyz\n'x, y, z'\n");
        assert_eq!(parse_cif(&with_ops).unwrap(), parse_cif(NACL).unwrap());
    }

    #[test]
    fn operations_expand_sites() {
        let text = NACL.replace("Cl1 Cl- 0.5 0.5 0.5 1\n", "")
            + "loop_\n_space_group_symop_operation_xyz\n'x, y, z'\n'-x, -y, -z'\n'x+1/2, y+1/2, z'\n";
        let c = parse_cif(&text.replace("Na1 Na+ 0 0 0 1.0", "Na1 Na+ 0.1 0.2 0.3 1.0")).unwrap();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn missing_and_bad_fields() {
        let no_a = NACL.replace("_cell_length_a 5.64\n", "");
        assert_eq!(
            parse_cif(&no_a),
            Err(Error::MissingField("_cell_length_a".into()))
        );
        let partial = NACL.replace("Cl- 0.5 0.5 0.5 1", "Cl- 0.5 0.5 0.5 0.5");
        assert!(matches!(
            parse_cif(&partial),
            Err(Error::PartialOccupancy { .. })
        ));
        let unknown = NACL.replace("Cl1 Cl-", "Xx1 Xx");
        assert!(matches!(parse_cif(&unknown), Err(Error::UnknownElement(_))));
        let ragged = NACL.replace("Cl1 Cl- 0.5 0.5 0.5 1", "Cl1 Cl- 0.5 0.5 0.5");
        assert!(matches!(parse_cif(&ragged), Err(Error::MalformedLoop(_))));
        let cart = NACL.replace("_atom_site_fract_", "_atom_site_Cartn_");
        assert!(matches!(parse_cif(&cart), Err(Error::MissingField(_))));
    }

    #[test]
    fn tag_order_and_whitespace_do_not_matter() {
        let shuffled = "data_x\n_cell_angle_gamma 90\n  _cell_length_b\t5.64\n_cell_angle_beta 90\n#c\n_cell_length_a 5.64\n_cell_angle_alpha 90\n_cell_length_c 5.64\n"
            .to_string()
            + &NACL[NACL.find("loop_").unwrap()..];
        assert_eq!(parse_cif(&shuffled).unwrap(), parse_cif(NACL).unwrap());
    }

    #[test]
    fn write_format() {
        let c = parse_cif(NACL).unwrap();
        let text = write_cif(&c).unwrap();
        assert!(text.contains("_cell_length_a      5.640000\n"));
        let single = Crystal::new(vec![26], vec![Vector3::zeros()], *c.lattice()).unwrap();
        let one = write_cif(&single).unwrap();
        assert_eq!(one.lines().filter(|l| l.starts_with("  Fe")).count(), 1);
    }

    #[test]
    fn write_then_parse_round_trips() {
        let l = nalgebra::Matrix3::new(3.1, 0.0, 0.0, 0.4, 3.7, 0.0, 0.3, 0.6, 4.4);
        let c = Crystal::new(
            vec![8, 26, 8],
            vec![
                Vector3::new(0.1, 0.2, 0.3),
                Vector3::new(0.55, 0.71, 0.13),
                Vector3::new(0.9999999, 0.5, 0.25),
            ],
            l,
        )
        .unwrap();
        let back = parse_cif(&write_cif(&c).unwrap()).unwrap();
        assert_eq!(back.species(), c.species());
        for (a, b) in back.frac_positions().iter().zip(c.frac_positions()) {
            assert!(min_image(a, b).amax() < 1e-6);
        }
        let (pa, pb) = (back.params().unwrap(), c.params().unwrap());
        for (x, y) in pa.as_array().iter().zip(pb.as_array()) {
            assert!((x - y).abs() < 1e-6);
        }
    }
}
