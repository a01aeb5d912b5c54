//! Sequence text, token vocabulary and property bins.
//!
//! The text is a fixed line grammar:
//!
//! ```text
//! prop: <int|unknown_prop>            (10 lines)
//! formula: <reduced formula>
//! space_group_symbol: <label>
//! operations: <s>
//! <xyz triplet>                       (s lines)
//! lattice_parameters: a: <q>, b: <q>, c: <q>, alpha: <q>, beta: <q>, gamma: <q>
//! atoms: <count>
//! <El> <mult> <qx> <qy> <qz>          (count lines)
//! ```
//!
//! Every line ends with `\n` and every real has exactly four decimals.

use std::collections::HashMap;
use std::sync::OnceLock;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::crystal::{
    lattice_from_params, CanonicalCell, Crystal, IrreducibleAtom, LatticeParameters,
    SymmetryOperation,
};
use crate::elements;
use crate::error::{Error, Result};
use crate::symmetry::{self, expand_orbits, format_triplet, parse_triplet};

pub const PROPERTY_SLOTS: usize = 10;
pub const MAX_INTEGER_TOKEN: usize = 300;
pub const UNKNOWN_PROP: &str = "unknown_prop";

/// Round-half-up to the 4-decimal grid, in units of 1e-4.
pub fn ticks(x: f64) -> i64 {
    // the small bias keeps decimal halves such as 0.12345 rounding up despite binary representation
    (x * 1e4 + 0.5 + 1e-7).floor() as i64
}

/// Ticks of a fractional coordinate, with 1.0000 wrapped to 0.0000.
pub fn frac_ticks(x: f64) -> i64 {
    ticks(x).rem_euclid(10_000)
}

fn render_ticks(t: i64) -> String {
    let sign = if t < 0 { "-" } else { "" };
    let a = t.unsigned_abs();
    format!("{sign}{}.{:04}", a / 10_000, a % 10_000)
}

/// Fixed-point rendering with exactly four decimals, rounding half up.
pub fn quantize(x: f64) -> String {
    render_ticks(ticks(x))
}

/// As [`quantize`], wrapping fractional coordinates so that "1.0000" becomes "0.0000".
pub fn quantize_frac(x: f64) -> String {
    render_ticks(frac_ticks(x))
}

/// The value a quantized fractional coordinate decodes to.
pub fn snap_frac(x: f64) -> f64 {
    frac_ticks(x) as f64 / 1e4
}

pub fn snap_value(x: f64) -> f64 {
    ticks(x) as f64 / 1e4
}

pub fn bin_property(value: f64, width: f64) -> Result<usize> {
    if !width.is_finite() || width <= 0.0 {
        return Err(Error::InvalidBinWidth(width));
    }
    if value < 0.0 || value.is_nan() {
        return Err(Error::NegativeValue(value));
    }
    Ok((value / width + 1e-9).floor() as usize)
}

/// A property value with its bin, filling one `prop:` slot.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropertyBin {
    pub value: f64,
    pub width: f64,
    pub bin: usize,
}

impl PropertyBin {
    pub fn new(value: f64, width: f64) -> Result<Self> {
        Ok(Self {
            value,
            width,
            bin: bin_property(value, width)?,
        })
    }
}

/// Grammar-conformant text plus its token ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalSequence {
    pub text: String,
    pub tokens: Vec<u32>,
}

impl CrystalSequence {
    pub fn from_text(text: String) -> Result<Self> {
        let tokens = tokenize(&text)?;
        Ok(Self { text, tokens })
    }

    pub fn from_tokens(tokens: Vec<u32>) -> Result<Self> {
        let text = detokenize(&tokens)?;
        Ok(Self { text, tokens })
    }
}

fn params_line(p: &LatticeParameters) -> String {
    format!(
        "lattice_parameters: a: {}, b: {}, c: {}, alpha: {}, beta: {}, gamma: {}\n",
        quantize(p.a),
        quantize(p.b),
        quantize(p.c),
        quantize(p.alpha),
        quantize(p.beta),
        quantize(p.gamma)
    )
}

fn atom_line(a: &IrreducibleAtom) -> String {
    format!(
        "{} {} {} {} {}\n",
        elements::symbol(a.z).unwrap_or("X"),
        a.multiplicity,
        quantize_frac(a.frac[0]),
        quantize_frac(a.frac[1]),
        quantize_frac(a.frac[2])
    )
}

/// Renders the text without vocabulary checks.
pub(crate) fn render(cell: &CanonicalCell, props: &[Option<usize>]) -> String {
    let mut s = String::new();
    for slot in 0..PROPERTY_SLOTS {
        match props.get(slot).copied().flatten() {
            Some(bin) => s.push_str(&format!("prop: {bin}\n")),
            None => s.push_str("prop: unknown_prop\n"),
        }
    }
    s.push_str(&format!("formula: {}\n", cell.formula));
    s.push_str(&format!("space_group_symbol: {}\n", cell.space_group_label));
    s.push_str(&format!("operations: {}\n", cell.operations.len()));
    for op in &cell.operations {
        s.push_str(&format_triplet(op));
        s.push('\n');
    }
    s.push_str(&params_line(&cell.params));
    s.push_str(&format!("atoms: {}\n", cell.atoms.len()));
    for a in &cell.atoms {
        s.push_str(&atom_line(a));
    }
    s
}

/// Text of a cell with every property slot unknown; the comparison key of the pipeline.
pub fn cell_text(cell: &CanonicalCell) -> String {
    render(cell, &[])
}

fn check_integer(field: &'static str, value: usize) -> Result<()> {
    if value > MAX_INTEGER_TOKEN {
        return Err(Error::ValueOutOfRange { field, value });
    }
    Ok(())
}

/// Serializes a canonical cell; `property_bins` fill the first slots in order.
pub fn encode(cell: &CanonicalCell, property_bins: &[(String, usize)]) -> Result<CrystalSequence> {
    if property_bins.len() > PROPERTY_SLOTS {
        return Err(Error::ValueOutOfRange {
            field: "property slots",
            value: property_bins.len(),
        });
    }
    for a in &cell.atoms {
        if !elements::in_vocabulary(a.z) {
            return Err(Error::UnsupportedElement(a.z));
        }
        check_integer("multiplicity", a.multiplicity)?;
    }
    for (_, bin) in property_bins {
        check_integer("property bin", *bin)?;
    }
    check_integer("operations", cell.operations.len())?;
    check_integer("atoms", cell.atoms.len())?;
    let props: Vec<Option<usize>> = property_bins.iter().map(|&(_, b)| Some(b)).collect();
    CrystalSequence::from_text(render(cell, &props))
}

/// A parsed sequence: property slots plus the cell it describes.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedSequence {
    pub props: Vec<Option<usize>>,
    pub cell: CanonicalCell,
}

struct LineCursor<'a> {
    lines: Vec<&'a str>,
    index: usize,
}

impl<'a> LineCursor<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines: Vec<&str> = text.split('\n').collect();
        // a trailing newline leaves one empty piece, which is not a line
        if lines.last() == Some(&"") {
            lines.pop();
        }
        Self { lines, index: 0 }
    }

    fn err(&self, column: usize, expected: impl Into<String>) -> Error {
        Error::Parse {
            line: self.index + 1,
            column,
            expected: expected.into(),
        }
    }

    fn next(&mut self, expected: &str) -> Result<&'a str> {
        let line = self.lines.get(self.index).copied().ok_or(Error::Parse {
            line: self.index + 1,
            column: 1,
            expected: expected.to_string(),
        })?;
        Ok(line)
    }

    fn advance(&mut self) {
        self.index += 1;
    }

    /// Reads `<keyword>: <rest>` and returns `rest`.
    fn keyed(&mut self, keyword: &str) -> Result<&'a str> {
        let line = self.next(&format!("\"{keyword}: \""))?;
        let prefix = format!("{keyword}: ");
        match line.strip_prefix(&prefix) {
            Some(rest) => Ok(rest),
            None => Err(self.err(1, format!("\"{prefix}\""))),
        }
    }
}

fn parse_count(cur: &LineCursor, s: &str, column: usize) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return Err(cur.err(column, "an integer"));
    }
    s.parse().map_err(|_| cur.err(column, "an integer"))
}

fn parse_real(cur: &LineCursor, s: &str, column: usize) -> Result<f64> {
    let ok = match s.split_once('.') {
        Some((int, frac)) => {
            !int.is_empty()
                && int.bytes().all(|b| b.is_ascii_digit())
                && frac.len() == 4
                && frac.bytes().all(|b| b.is_ascii_digit())
        }
        None => false,
    };
    if !ok {
        return Err(cur.err(column, "a real with four decimals"));
    }
    s.parse()
        .map_err(|_| cur.err(column, "a real with four decimals"))
}

/// Parses sequence text into its property slots and cell.
pub fn parse_sequence(text: &str) -> Result<ParsedSequence> {
    if !text.is_empty() && !text.ends_with('\n') {
        let last = text.split('\n').count();
        let column = text.rsplit('\n').next().map_or(1, |l| l.len() + 1);
        return Err(Error::Parse {
            line: last,
            column,
            expected: "a terminating newline".into(),
        });
    }
    let mut cur = LineCursor::new(text);

    let mut props = Vec::with_capacity(PROPERTY_SLOTS);
    for _ in 0..PROPERTY_SLOTS {
        let rest = cur.keyed("prop")?;
        if rest == UNKNOWN_PROP {
            props.push(None);
        } else {
            props.push(Some(parse_count(&cur, rest, 7)?));
        }
        cur.advance();
    }

    let formula = cur.keyed("formula")?.to_string();
    if formula.is_empty() {
        return Err(cur.err(10, "a formula"));
    }
    cur.advance();
    let label = cur.keyed("space_group_symbol")?.to_string();
    if label.is_empty() {
        return Err(cur.err(21, "a space-group label"));
    }
    cur.advance();
    let ops_field = cur.keyed("operations")?;
    let n_ops = parse_count(&cur, ops_field, 13)?;
    cur.advance();
    let mut operations = Vec::with_capacity(n_ops);
    for _ in 0..n_ops {
        let line = cur.next("a symmetry operation")?;
        let op = parse_triplet(line).ok_or_else(|| cur.err(1, "an xyz triplet"))?;
        operations.push(op);
        cur.advance();
    }

    let rest = cur.keyed("lattice_parameters")?;
    let mut values = [0.0; 6];
    let mut column = "lattice_parameters: ".len() + 1;
    let mut remaining = rest;
    for (i, name) in ["a", "b", "c", "alpha", "beta", "gamma"].iter().enumerate() {
        let prefix = format!("{name}: ");
        remaining = remaining
            .strip_prefix(&prefix)
            .ok_or_else(|| cur.err(column, format!("\"{prefix}\"")))?;
        column += prefix.len();
        let (value, tail) = if i < 5 {
            remaining
                .split_once(", ")
                .ok_or_else(|| cur.err(column, "\", \""))?
        } else {
            (remaining, "")
        };
        values[i] = parse_real(&cur, value, column)?;
        column += value.len() + 2;
        remaining = tail;
    }
    let params = LatticeParameters {
        a: values[0],
        b: values[1],
        c: values[2],
        alpha: values[3],
        beta: values[4],
        gamma: values[5],
    };
    cur.advance();

    let atoms_field = cur.keyed("atoms")?;
    let n_atoms = parse_count(&cur, atoms_field, 8)?;
    cur.advance();
    let mut atoms = Vec::with_capacity(n_atoms);
    for _ in 0..n_atoms {
        let line = cur.next("an atom line")?;
        let fields: Vec<&str> = line.split(' ').collect();
        if fields.len() != 5 {
            return Err(cur.err(1, "\"<El> <mult> <x> <y> <z>\""));
        }
        let z =
            elements::atomic_number(fields[0]).ok_or_else(|| cur.err(1, "an element symbol"))?;
        let mut col = fields[0].len() + 2;
        let multiplicity = parse_count(&cur, fields[1], col)?;
        if multiplicity == 0 {
            return Err(cur.err(col, "a positive multiplicity"));
        }
        col += fields[1].len() + 1;
        let mut frac = Vector3::zeros();
        for k in 0..3 {
            frac[k] = parse_real(&cur, fields[2 + k], col)?;
            if frac[k] >= 1.0 {
                return Err(cur.err(col, "a fractional coordinate below 1"));
            }
            col += fields[2 + k].len() + 1;
        }
        atoms.push(IrreducibleAtom {
            z,
            frac,
            multiplicity,
        });
        cur.advance();
    }
    if cur.index < cur.lines.len() {
        return Err(cur.err(1, "end of sequence"));
    }
    Ok(ParsedSequence {
        props,
        cell: CanonicalCell {
            params,
            atoms,
            operations,
            formula,
            space_group_label: label,
        },
    })
}

/// Rebuilds the full cell from irreducible atoms and operations, checking multiplicities.
pub fn cell_to_crystal(cell: &CanonicalCell) -> Result<Crystal> {
    let lattice = lattice_from_params(&cell.params)?;
    let mut ops: Vec<SymmetryOperation> = cell.operations.clone();
    if !ops.iter().any(|o| o.is_identity()) {
        ops.insert(0, SymmetryOperation::identity());
    }
    let per_atom = expand_orbits(&cell.atoms, &ops)?;
    let mut species = Vec::new();
    let mut frac = Vec::new();
    for (atom, sites) in cell.atoms.iter().zip(per_atom) {
        if sites.len() != atom.multiplicity {
            return Err(Error::MultiplicityMismatch {
                symbol: elements::symbol(atom.z).unwrap_or("X").to_string(),
                declared: atom.multiplicity,
                found: sites.len(),
            });
        }
        for s in sites {
            species.push(atom.z);
            frac.push(s);
        }
    }
    Crystal::new(species, frac, lattice)
}

pub fn decode_text(text: &str) -> Result<Crystal> {
    cell_to_crystal(&parse_sequence(text)?.cell)
}

pub fn decode(seq: &CrystalSequence) -> Result<Crystal> {
    decode_text(&seq.text)
}

/// Bijective token list and lookup.
#[derive(Debug)]
pub struct Vocabulary {
    tokens: Vec<String>,
    ids: HashMap<String, u32>,
}

const SPECIAL_TOKENS: [&str; 16] = [
    "space_group_symbol",
    "formula",
    "atoms",
    "lattice_parameters",
    "a",
    "b",
    "c",
    "alpha",
    "beta",
    "gamma",
    UNKNOWN_PROP,
    ",",
    " ",
    ":",
    "\n",
    "<pad>",
];
const EXTRA_KEYWORDS: [&str; 2] = ["prop", "operations"];
const TRIPLET_TOKENS: [&str; 8] = ["x", "y", "z", "-", "+", "/", "(", ")"];

impl Vocabulary {
    fn build() -> Self {
        let mut tokens: Vec<String> = Vec::new();
        tokens.extend(elements::VOCABULARY_ELEMENTS.iter().map(|s| s.to_string()));
        tokens.extend((0..=MAX_INTEGER_TOKEN).map(|n| n.to_string()));
        tokens.push(".".into());
        tokens.extend(SPECIAL_TOKENS.iter().map(|s| s.to_string()));
        tokens.extend(EXTRA_KEYWORDS.iter().map(|s| s.to_string()));
        tokens.extend(TRIPLET_TOKENS.iter().map(|s| s.to_string()));
        tokens.extend(symmetry::space_group_labels());
        let mut ids = HashMap::new();
        let mut unique = Vec::with_capacity(tokens.len());
        for t in tokens {
            if !ids.contains_key(&t) {
                ids.insert(t.clone(), unique.len() as u32);
                unique.push(t);
            }
        }
        Self {
            tokens: unique,
            ids,
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn id(&self, token: &str) -> Option<u32> {
        self.ids.get(token).copied()
    }

    pub fn token(&self, id: u32) -> Option<&str> {
        self.tokens.get(id as usize).map(String::as_str)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    /// `{token: id}` as a JSON object.
    pub fn to_json(&self) -> String {
        let map: serde_json::Map<String, serde_json::Value> = self
            .tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), serde_json::Value::from(i as u32)))
            .collect();
        serde_json::to_string_pretty(&map).expect("map serializes")
    }
}

pub fn vocabulary() -> &'static Vocabulary {
    static VOCAB: OnceLock<Vocabulary> = OnceLock::new();
    VOCAB.get_or_init(Vocabulary::build)
}

pub fn tokens_to_json(ids: &[u32]) -> String {
    serde_json::to_string(ids).expect("ids serialize")
}

const WORD_TOKENS: [&str; 16] = [
    "space_group_symbol",
    "formula",
    "atoms",
    "lattice_parameters",
    "a",
    "b",
    "c",
    "alpha",
    "beta",
    "gamma",
    UNKNOWN_PROP,
    "prop",
    "operations",
    "x",
    "y",
    "z",
];

/// Splits text into vocabulary ids. Reals become single characters, integers up to 300 and
/// keywords are single tokens, and the space-group label is one token.
pub fn tokenize(text: &str) -> Result<Vec<u32>> {
    let vocab = vocabulary();
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let push = |out: &mut Vec<u32>, tok: &str, position: usize| -> Result<()> {
        let id = vocab.id(tok).ok_or_else(|| Error::UnknownToken {
            position,
            found: tok.to_string(),
        })?;
        out.push(id);
        Ok(())
    };
    let label_prefix = "space_group_symbol: ";
    let mut i = 0;
    let mut line_start = true;
    while i < bytes.len() {
        if line_start && text[i..].starts_with(label_prefix) {
            push(&mut out, "space_group_symbol", i)?;
            push(&mut out, ":", i + 18)?;
            push(&mut out, " ", i + 19)?;
            let start = i + label_prefix.len();
            let end = text[start..].find('\n').map_or(text.len(), |e| start + e);
            push(&mut out, &text[start..end], start)?;
            i = end;
            line_start = false;
            continue;
        }
        line_start = false;
        let c = bytes[i];
        if c.is_ascii_digit() {
            let end = i + bytes[i..].iter().take_while(|b| b.is_ascii_digit()).count();
            let is_real = bytes.get(end) == Some(&b'.') || (i > 0 && bytes[i - 1] == b'.');
            let run = &text[i..end];
            let leading_zero = run.len() > 1 && run.starts_with('0');
            if is_real || leading_zero {
                for k in i..end {
                    push(&mut out, &text[k..k + 1], k)?;
                }
            } else {
                let value: usize = run.parse().unwrap_or(usize::MAX);
                if value > MAX_INTEGER_TOKEN {
                    return Err(Error::ValueOutOfRange {
                        field: "integer token",
                        value,
                    });
                }
                push(&mut out, run, i)?;
            }
            i = end;
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let end = i + bytes[i..]
                .iter()
                .take_while(|b| b.is_ascii_alphabetic() || **b == b'_')
                .count();
            let word = &text[i..end];
            if WORD_TOKENS.contains(&word) {
                push(&mut out, word, i)?;
            } else {
                // element symbols run together in formulas: split before each uppercase letter
                let mut start = i;
                for k in i + 1..=end {
                    if k == end || bytes[k].is_ascii_uppercase() {
                        let piece = &text[start..k];
                        if !elements::VOCABULARY_ELEMENTS.contains(&piece) {
                            return Err(Error::UnknownToken {
                                position: start,
                                found: piece.to_string(),
                            });
                        }
                        push(&mut out, piece, start)?;
                        start = k;
                    }
                }
            }
            i = end;
        } else if text[i..].starts_with("<pad>") {
            push(&mut out, "<pad>", i)?;
            i += 5;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            push(&mut out, &text[i..i + ch.len_utf8()], i)?;
            if ch == '\n' {
                line_start = true;
            }
            i += ch.len_utf8();
        }
    }
    Ok(out)
}

pub fn detokenize(ids: &[u32]) -> Result<String> {
    let vocab = vocabulary();
    let mut s = String::new();
    for &id in ids {
        s.push_str(vocab.token(id).ok_or(Error::UnknownTokenId(id))?);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Matrix3;

    fn cscl_cell() -> CanonicalCell {
        CanonicalCell {
            params: LatticeParameters::new(4.12, 4.12, 4.12, 90.0, 90.0, 90.0).unwrap(),
            atoms: vec![
                IrreducibleAtom {
                    z: 17,
                    frac: Vector3::zeros(),
                    multiplicity: 1,
                },
                IrreducibleAtom {
                    z: 55,
                    frac: Vector3::new(0.5, 0.5, 0.5),
                    multiplicity: 1,
                },
            ],
            operations: vec![
                SymmetryOperation::new(-Matrix3::identity(), Vector3::zeros()),
                SymmetryOperation::identity(),
            ],
            formula: "ClCs".into(),
            space_group_label: "P-1".into(),
        }
    }

    #[test]
    fn quantize_examples() {
        assert_eq!(quantize(1.0 / 3.0), "0.3333");
        assert_eq!(quantize(90.0), "90.0000");
        assert_eq!(quantize_frac(0.99996), "0.0000");
        assert_eq!(quantize(0.12345), "0.1235");
        assert_eq!(quantize(2.00005), "2.0001");
        assert_eq!(quantize(-0.00001), "0.0000");
    }

    #[test]
    fn bin_examples() {
        assert_eq!(bin_property(0.7, 0.5), Ok(1));
        assert_eq!(bin_property(0.0, 0.5), Ok(0));
        assert_eq!(bin_property(3.7, 0.5), Ok(7));
        assert_eq!(bin_property(0.5, 0.5), Ok(1));
        assert_eq!(bin_property(-0.1, 0.5), Err(Error::NegativeValue(-0.1)));
        assert!(bin_property(1.0, 0.0).is_err());
    }

    #[test]
    fn encode_layout() {
        let seq = encode(&cscl_cell(), &[]).unwrap();
        let expected = "prop: unknown_prop\n".repeat(10)
            + "formula: ClCs\n"
            + "space_group_symbol: P-1\n"
            + "operations: 2\n"
            + "-x,-y,-z\n"
            + "x,y,z\n"
            + "lattice_parameters: a: 4.1200, b: 4.1200, c: 4.1200, alpha: 90.0000, beta: 90.0000, gamma: 90.0000\n"
            + "atoms: 2\n"
            + "Cl 1 0.0000 0.0000 0.0000\n"
            + "Cs 1 0.5000 0.5000 0.5000\n";
        assert_eq!(seq.text, expected);
        assert_eq!(encode(&cscl_cell(), &[]).unwrap(), seq);
        assert_eq!(detokenize(&seq.tokens).unwrap(), seq.text);
    }

    #[test]
    fn property_slots_fill_in_order() {
        let seq = encode(&cscl_cell(), &[("band_gap".into(), 1)]).unwrap();
        assert!(seq.text.starts_with("prop: 1\nprop: unknown_prop\n"));
        let parsed = parse_sequence(&seq.text).unwrap();
        assert_eq!(parsed.props[0], Some(1));
        assert!(parsed.props[1..].iter().all(Option::is_none));
    }

    #[test]
    fn unsupported_element_rejected() {
        let mut cell = cscl_cell();
        cell.atoms[1].z = 100;
        assert_eq!(encode(&cell, &[]), Err(Error::UnsupportedElement(100)));
    }

    #[test]
    fn parse_round_trip() {
        let cell = cscl_cell();
        let text = cell_text(&cell);
        let parsed = parse_sequence(&text).unwrap();
        assert_eq!(cell_text(&parsed.cell), text);
        let crystal = decode_text(&text).unwrap();
        assert_eq!(crystal.len(), 2);
    }

    #[test]
    fn identity_only_gives_one_site_per_atom() {
        let mut cell = cscl_cell();
        cell.operations = vec![SymmetryOperation::identity()];
        cell.atoms.push(IrreducibleAtom {
            z: 8,
            frac: Vector3::new(0.1, 0.2, 0.3),
            multiplicity: 1,
        });
        assert_eq!(decode_text(&cell_text(&cell)).unwrap().len(), 3);
    }

    #[test]
    fn multiplicity_checked() {
        let mut cell = cscl_cell();
        cell.atoms[0].frac = Vector3::new(0.25, 0.0, 0.0);
        assert!(matches!(
            decode_text(&cell_text(&cell)),
            Err(Error::MultiplicityMismatch {
                declared: 1,
                found: 2,
                ..
            })
        ));
    }

    #[test]
    fn parse_errors_carry_position() {
        assert!(matches!(
            parse_sequence(""),
            Err(Error::Parse { line: 1, .. })
        ));
        let text = cell_text(&cscl_cell());
        let truncated: String = text.lines().take(14).map(|l| format!("{l}\n")).collect();
        assert!(matches!(
            parse_sequence(&truncated),
            Err(Error::Parse { line: 15, .. })
        ));
        let broken = text.replace("alpha: 90.0000", "alpha: 90.00");
        match parse_sequence(&broken) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 16);
                assert_eq!(column, 61);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_sequence(&text[..text.len() - 1]),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn tokenizer_examples() {
        let v = vocabulary();
        let ids = tokenize("0.1250").unwrap();
        let toks: Vec<&str> = ids.iter().map(|&i| v.token(i).unwrap()).collect();
        assert_eq!(toks, ["0", ".", "1", "2", "5", "0"]);
        assert_eq!(tokenize("lattice_parameters").unwrap().len(), 1);
        let ids = tokenize("formula: Al2O3\n").unwrap();
        let toks: Vec<&str> = ids.iter().map(|&i| v.token(i).unwrap()).collect();
        assert_eq!(toks, ["formula", ":", " ", "Al", "2", "O", "3", "\n"]);
        assert!(matches!(tokenize("Qq"), Err(Error::UnknownToken { .. })));
        assert!(matches!(
            tokenize("301"),
            Err(Error::ValueOutOfRange { .. })
        ));
        assert!(matches!(
            detokenize(&[u32::MAX]),
            Err(Error::UnknownTokenId(_))
        ));
    }

    #[test]
    fn vocabulary_is_bijective() {
        let v = vocabulary();
        for (i, t) in v.tokens().iter().enumerate() {
            assert_eq!(v.id(t), Some(i as u32));
        }
        for e in elements::VOCABULARY_ELEMENTS {
            assert!(v.id(e).is_some());
        }
        for t in [
            "0",
            "9",
            "300",
            ".",
            "\n",
            "<pad>",
            "unknown_prop",
            "P1",
            "G48",
        ] {
            assert!(v.id(t).is_some(), "{t:?}");
        }
        let json: serde_json::Value = serde_json::from_str(&v.to_json()).unwrap();
        assert_eq!(json.as_object().unwrap().len(), v.len());
    }
}
