//! Space-group operations of a cell: detection, orbits, reconstruction and a fingerprint classifier.

use nalgebra::{Matrix3, Vector3};

use crate::crystal::{
    min_image, wrap_frac, wrap_unit, Crystal, IrreducibleAtom, SymmetryOperation,
};
use crate::error::{Error, Result};
use crate::reduce::{find_atom, niggli_transform};
use crate::spacegroup_table::SPACE_GROUPS;

/// Translations within this distance of a multiple of 1/12 are snapped to it.
pub const TWELFTH_SNAP: f64 = 1e-4;
/// Max-norm distance under which reconstructed sites are merged.
///
/// Larger than the 4-decimal grid step because quantization error in a representative is
/// multiplied by the rotation entries when its images are generated.
pub const RECONSTRUCT_TOL: f64 = 1e-3;

/// Integer vectors `v` (entries in `-range..=range`) with `|Lᵀv|² ≈ g_jj`, per column `j`.
fn candidate_columns(g: &Matrix3<f64>, range: i32, rel_tol: f64) -> [Vec<Vector3<i32>>; 3] {
    let mut out: [Vec<Vector3<i32>>; 3] = Default::default();
    for i in -range..=range {
        for j in -range..=range {
            for k in -range..=range {
                if (i, j, k) == (0, 0, 0) {
                    continue;
                }
                let v = Vector3::new(i, j, k);
                let vf = v.map(f64::from);
                let len2 = (vf.transpose() * g * vf)[0];
                for (col, bucket) in out.iter_mut().enumerate() {
                    if (len2 - g[(col, col)]).abs() <= rel_tol * g[(col, col)] {
                        bucket.push(v);
                    }
                }
            }
        }
    }
    out
}

fn det_i32(m: &Matrix3<i32>) -> i32 {
    m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
        - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
        + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
}

/// All integer `W` with `det W = ±1` and `WᵀGW ≈ G` whose entries lie in `-range..=range` when
/// expressed in the Niggli-reduced basis of `lattice`.
pub fn metric_preserving_rotations(
    lattice: &Matrix3<f64>,
    range: i32,
    rel_tol: f64,
) -> Vec<Matrix3<i32>> {
    let k = niggli_transform(lattice).unwrap_or_else(|_| Matrix3::identity());
    let k_inv_t = k
        .map(f64::from)
        .try_inverse()
        .expect("unimodular")
        .transpose()
        .map(|x| x.round() as i32);
    let reduced = k.map(f64::from) * lattice;
    let mut out: Vec<Matrix3<i32>> = reduced_basis_rotations(&reduced, range, rel_tol)
        .into_iter()
        .map(|w| k.transpose() * w * k_inv_t)
        .collect();
    out.sort_by_key(|w| w.as_slice().to_vec());
    out
}

fn reduced_basis_rotations(lattice: &Matrix3<f64>, range: i32, rel_tol: f64) -> Vec<Matrix3<i32>> {
    let g = lattice * lattice.transpose();
    let cols = candidate_columns(&g, range, rel_tol);
    let close = |a: &Vector3<i32>, b: &Vector3<i32>, i: usize, j: usize| {
        let v = (a.map(f64::from).transpose() * g * b.map(f64::from))[0];
        (v - g[(i, j)]).abs() <= rel_tol * (g[(i, i)] * g[(j, j)]).sqrt()
    };
    let mut out = Vec::new();
    for c0 in &cols[0] {
        for c1 in &cols[1] {
            if !close(c0, c1, 0, 1) {
                continue;
            }
            for c2 in &cols[2] {
                if !close(c0, c2, 0, 2) || !close(c1, c2, 1, 2) {
                    continue;
                }
                let w = Matrix3::from_columns(&[*c0, *c1, *c2]);
                if det_i32(&w).abs() == 1 {
                    out.push(w);
                }
            }
        }
    }
    out
}

fn snap_translation(t: &Vector3<f64>) -> Vector3<f64> {
    wrap_frac(&t.map(|x| {
        let k = (x * 12.0).round();
        if (x - k / 12.0).abs() <= TWELFTH_SNAP {
            k / 12.0
        } else {
            x
        }
    }))
}

/// Maps every atom through `op`; returns the permutation when the image set matches.
fn operation_permutation(
    crystal: &Crystal,
    op: &SymmetryOperation,
    symprec: f64,
) -> Option<Vec<usize>> {
    let mut perm = Vec::with_capacity(crystal.len());
    let mut used = vec![false; crystal.len()];
    for (&z, p) in crystal.species().iter().zip(crystal.frac_positions()) {
        let j = find_atom(crystal, z, &op.apply(p), symprec)?;
        if used[j] {
            return None;
        }
        used[j] = true;
        perm.push(j);
    }
    Some(perm)
}

fn least_frequent_members(crystal: &Crystal) -> Vec<usize> {
    let (z, _) = crystal
        .composition()
        .into_iter()
        .min_by_key(|&(z, n)| (n, z))
        .expect("crystal has atoms");
    (0..crystal.len())
        .filter(|&i| crystal.species()[i] == z)
        .collect()
}

fn detect_with_range(crystal: &Crystal, symprec: f64, range: i32) -> Vec<SymmetryOperation> {
    let rotations = metric_preserving_rotations(crystal.lattice(), range, symprec / 10.0);
    let members = least_frequent_members(crystal);
    let anchor = crystal.frac_positions()[members[0]];
    let n = crystal.len() as f64;
    let mut ops: Vec<SymmetryOperation> = Vec::new();
    for w in rotations {
        let wf = w.map(f64::from);
        for &a in &members {
            let t = wrap_frac(&(crystal.frac_positions()[a] - wf * anchor));
            let trial = SymmetryOperation::new(w, t);
            let Some(perm) = operation_permutation(crystal, &trial, symprec) else {
                continue;
            };
            let residual = perm
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    min_image(
                        &crystal.frac_positions()[j],
                        &trial.apply(&crystal.frac_positions()[i]),
                    )
                })
                .fold(Vector3::zeros(), |acc, d| acc + d)
                / n;
            let op = SymmetryOperation::new(w, snap_translation(&(t + residual)));
            if !ops.iter().any(|o| {
                o.rotation == op.rotation
                    && min_image(&o.translation, &op.translation).norm() <= symprec
            }) {
                ops.push(op);
            }
        }
    }
    ops.sort_by(|a, b| a.canonical_cmp(b));
    ops
}

/// Whether `ops` contains the identity and is closed under composition (translations mod 1).
pub fn is_group(ops: &[SymmetryOperation], tol: f64) -> bool {
    let contains = |op: &SymmetryOperation| {
        ops.iter().any(|o| {
            o.rotation == op.rotation && min_image(&o.translation, &op.translation).norm() <= tol
        })
    };
    if !contains(&SymmetryOperation::identity()) {
        return false;
    }
    ops.iter()
        .all(|a| ops.iter().all(|b| contains(&a.compose(b))))
}

/// All space-group operations of a (reduced, primitive) cell, canonically ordered.
pub fn detect_operations(crystal: &Crystal, symprec: f64) -> Result<Vec<SymmetryOperation>> {
    for range in [1, 2] {
        let ops = detect_with_range(crystal, symprec, range);
        if is_group(&ops, 2.0 * symprec) {
            return Ok(ops);
        }
    }
    Err(Error::GroupClosureFailure(symprec))
}

/// Tick key on the 4-decimal grid, used to order positions.
pub(crate) fn frac_ticks(p: &Vector3<f64>) -> [i64; 3] {
    [0, 1, 2].map(|i| crate::codec::frac_ticks(p[i]))
}

/// One representative per orbit, with multiplicity equal to the orbit size.
pub fn extract_irreducible(
    crystal: &Crystal,
    ops: &[SymmetryOperation],
    symprec: f64,
) -> Result<Vec<IrreducibleAtom>> {
    let mut assigned = vec![false; crystal.len()];
    let mut out = Vec::new();
    for i in 0..crystal.len() {
        if assigned[i] {
            continue;
        }
        let z = crystal.species()[i];
        let p = crystal.frac_positions()[i];
        let mut orbit = vec![i];
        for op in ops {
            let j =
                find_atom(crystal, z, &op.apply(&p), symprec).ok_or(Error::OrbitInconsistency {
                    orbit: 0,
                    order: ops.len(),
                })?;
            if !orbit.contains(&j) {
                orbit.push(j);
            }
        }
        if !ops.len().is_multiple_of(orbit.len()) {
            return Err(Error::OrbitInconsistency {
                orbit: orbit.len(),
                order: ops.len(),
            });
        }
        for &j in &orbit {
            assigned[j] = true;
        }
        let rep = orbit
            .iter()
            .copied()
            .min_by_key(|&j| frac_ticks(&crystal.frac_positions()[j]))
            .expect("orbit is non-empty");
        out.push(IrreducibleAtom {
            z,
            frac: crystal.frac_positions()[rep],
            multiplicity: orbit.len(),
        });
    }
    Ok(out)
}

/// Per-representative site lists after applying every operation and merging coincident sites.
pub(crate) fn expand_orbits(
    irr: &[IrreducibleAtom],
    ops: &[SymmetryOperation],
) -> Result<Vec<Vec<Vector3<f64>>>> {
    let mut placed: Vec<(u8, Vector3<f64>)> = Vec::new();
    let mut per_atom = Vec::with_capacity(irr.len());
    for atom in irr {
        let mut sites = Vec::new();
        let images = std::iter::once(wrap_frac(&atom.frac))
            .chain(ops.iter().map(|op| wrap_frac(&op.apply(&atom.frac))));
        for q in images {
            match placed
                .iter()
                .find(|(_, s)| min_image(s, &q).amax() <= RECONSTRUCT_TOL)
            {
                Some(&(z, _)) if z != atom.z => return Err(Error::SpeciesClash(z, atom.z)),
                Some(_) => {}
                None => {
                    placed.push((atom.z, q));
                    sites.push(q);
                }
            }
        }
        per_atom.push(sites);
    }
    Ok(per_atom)
}

/// Applies every operation to every representative and removes duplicate sites.
pub fn reconstruct_full_cell(
    irr: &[IrreducibleAtom],
    ops: &[SymmetryOperation],
) -> Result<Vec<(u8, Vector3<f64>)>> {
    let per_atom = expand_orbits(irr, ops)?;
    Ok(irr
        .iter()
        .zip(per_atom)
        .flat_map(|(atom, sites)| sites.into_iter().map(move |s| (atom.z, s)))
        .collect())
}

/// One row of the bundled space-group table.
#[derive(Debug, Clone, Copy)]
pub struct SpaceGroupEntry {
    pub number: u16,
    pub label: &'static str,
    pub order: u8,
    pub rotation_types: [u8; 10],
    pub centrosymmetric: bool,
    pub screw: bool,
    pub glide: bool,
}

impl SpaceGroupEntry {
    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            order: self.order as usize,
            rotation_types: self.rotation_types.map(usize::from),
            centrosymmetric: self.centrosymmetric,
            screw: self.screw,
            glide: self.glide,
        }
    }
}

/// The 230 space-group types with their fingerprints.
pub fn space_group_table() -> &'static [SpaceGroupEntry] {
    &SPACE_GROUPS
}

/// Invariant summary of an operation set used to look up a space-group label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    /// Counts of rotation types 1, 2, 3, 4, 6, -1, -2, -3, -4, -6.
    pub rotation_types: [usize; 10],
    pub centrosymmetric: bool,
    pub screw: bool,
    pub glide: bool,
}

fn rotation_type_index(w: &Matrix3<i32>) -> usize {
    let trace = w[(0, 0)] + w[(1, 1)] + w[(2, 2)];
    match (det_i32(w), trace) {
        (1, 3) => 0,
        (1, -1) => 1,
        (1, 0) => 2,
        (1, 1) => 3,
        (1, 2) => 4,
        (-1, -3) => 5,
        (-1, 1) => 6,
        (-1, 0) => 7,
        (-1, -1) => 8,
        (-1, -2) => 9,
        _ => panic!("not a crystallographic rotation: {w:?}"),
    }
}

fn rotation_order(w: &Matrix3<i32>) -> usize {
    let mut acc = *w;
    for n in 1..=6 {
        if acc == Matrix3::identity() {
            return n;
        }
        acc *= w;
    }
    panic!("rotation of order > 6: {w:?}")
}

/// Whether some lattice translate of `op` has zero intrinsic translation.
fn has_pure_representative(op: &SymmetryOperation) -> bool {
    let n = rotation_order(&op.rotation);
    let mut s = Matrix3::<i32>::zeros();
    let mut power = Matrix3::<i32>::identity();
    for _ in 0..n {
        s += power;
        power *= op.rotation;
    }
    let tau = s.map(f64::from) * op.translation;
    let target = tau.map(|x| -x.round() as i32);
    if (tau - tau.map(f64::round)).amax() > 1e-3 {
        return false;
    }
    for i in -3..=3 {
        for j in -3..=3 {
            for k in -3..=3 {
                if s * Vector3::new(i, j, k) == target {
                    return true;
                }
            }
        }
    }
    false
}

impl Fingerprint {
    pub fn from_operations(ops: &[SymmetryOperation]) -> Self {
        let mut rotation_types = [0; 10];
        let mut screw = false;
        let mut glide = false;
        for op in ops {
            let idx = rotation_type_index(&op.rotation);
            rotation_types[idx] += 1;
            if idx != 0 && !has_pure_representative(op) {
                if op.determinant() == 1 {
                    screw = true;
                } else {
                    glide = true;
                }
            }
        }
        Self {
            order: ops.len(),
            rotation_types,
            centrosymmetric: rotation_types[5] > 0,
            screw,
            glide,
        }
    }
}

/// Hermann–Mauguin label when the fingerprint identifies a unique space-group type, else
/// `G<order>`. Advisory only: reconstruction never reads it.
pub fn classify_space_group(ops: &[SymmetryOperation]) -> String {
    let fp = Fingerprint::from_operations(ops);
    let mut hits = SPACE_GROUPS.iter().filter(|e| e.fingerprint() == fp);
    match (hits.next(), hits.next()) {
        (Some(entry), None) => entry.label.to_string(),
        _ => format!("G{}", fp.order),
    }
}

/// All labels the classifier can emit, table order then fallbacks `G1..=G48`.
pub fn space_group_labels() -> Vec<String> {
    let mut labels: Vec<String> = SPACE_GROUPS.iter().map(|e| e.label.to_string()).collect();
    labels.extend((1..=48).map(|n| format!("G{n}")));
    labels
}

fn format_fraction(t: f64) -> String {
    let k = (t * 12.0).round();
    if (t - k / 12.0).abs() <= TWELFTH_SNAP {
        let k = k as i64;
        let g = gcd(k, 12);
        format!("{}/{}", k / g, 12 / g)
    } else {
        crate::codec::quantize_frac(t)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `-x,y+1/2,-z` style rendering.
pub fn format_triplet(op: &SymmetryOperation) -> String {
    let mut parts = Vec::with_capacity(3);
    for row in 0..3 {
        let mut s = String::new();
        for (col, var) in ['x', 'y', 'z'].into_iter().enumerate() {
            let c = op.rotation[(row, col)];
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push(var);
        }
        let t = wrap_unit(op.translation[row]);
        let rendered = format_fraction(t);
        if rendered != "0/1" && rendered != "0.0000" {
            s.push('+');
            s.push_str(&rendered);
        }
        parts.push(s);
    }
    parts.join(",")
}

fn parse_number(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.parse().ok()?;
            let q: f64 = q.parse().ok()?;
            (q != 0.0).then_some(p / q)
        }
        None => s.parse().ok(),
    }
}

/// Parses one component such as `-x+y+1/2`, `1/2+x` or `2x-0.25`.
fn parse_component(text: &str) -> Option<([i32; 3], f64)> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .collect::<String>()
        .to_ascii_lowercase();
    if cleaned.is_empty() {
        return None;
    }
    let mut terms = Vec::new();
    let mut current = String::new();
    for c in cleaned.chars() {
        if (c == '+' || c == '-') && !current.is_empty() {
            terms.push(std::mem::take(&mut current));
        }
        current.push(c);
    }
    terms.push(current);

    let mut row = [0i32; 3];
    let mut constant = 0.0;
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-1.0, b),
            None => (1.0, term.strip_prefix('+').unwrap_or(&term)),
        };
        if body.is_empty() {
            return None;
        }
        let last = body.chars().last()?;
        if let Some(axis) = "xyz".find(last) {
            let coeff_text = &body[..body.len() - 1];
            let coeff = if coeff_text.is_empty() {
                1.0
            } else {
                parse_number(coeff_text)?
            };
            if coeff.fract() != 0.0 {
                return None;
            }
            row[axis] += (sign * coeff) as i32;
        } else {
            constant += sign * parse_number(body)?;
        }
    }
    Some((row, constant))
}

pub fn parse_triplet(text: &str) -> Option<SymmetryOperation> {
    let comps: Vec<&str> = text
        .trim()
        .trim_matches(|c| c == '\'' || c == '"')
        .split(',')
        .collect();
    if comps.len() != 3 {
        return None;
    }
    let mut w = Matrix3::<i32>::zeros();
    let mut t = Vector3::zeros();
    for (i, comp) in comps.iter().enumerate() {
        let (row, c) = parse_component(comp)?;
        for j in 0..3 {
            w[(i, j)] = row[j];
        }
        t[i] = c;
    }
    (det_i32(&w).abs() == 1).then(|| SymmetryOperation::new(w, t))
}
