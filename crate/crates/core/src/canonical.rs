//! Origin selection, atom ordering and the full canonicalization pipeline.

use std::cmp::Reverse;

use nalgebra::{Matrix3, Vector3};

use crate::codec::{cell_text, cell_to_crystal, snap_frac, snap_value};
use crate::crystal::{
    lattice_from_params, reduced_formula, wrap_frac, CanonicalCell, Crystal, IrreducibleAtom,
    LatticeParameters, SymmetryOperation,
};
use crate::error::{Error, Result};
use crate::reduce::{niggli_reduce_with_eps, reduce_to_primitive_with_tol, DEFAULT_SYMPREC};
use crate::symmetry::{
    classify_space_group, detect_operations, extract_irreducible, frac_ticks,
    metric_preserving_rotations, TWELFTH_SNAP,
};

/// Radii (Å) for the density rules, compared lexicographically.
pub const RADIUS_LADDER: [f64; 4] = [3.0, 5.0, 8.0, 12.0];
/// Distances within this margin below a radius do not count as inside it.
pub const DISTANCE_MARGIN: f64 = 1e-8;
/// Niggli epsilon (relative to `V^(1/3)`) used by the pipeline.
///
/// Wide enough that re-reading a cell from its own 4-decimal sequence does not cross a reduction
/// boundary.
pub const CANONICAL_NIGGLI_EPS: f64 = 1e-3;
/// Relative tolerance on Gram entries for basis relabelings of the reduced lattice.
pub const BASIS_TOL: f64 = 1e-4;
const MAX_FIXED_POINT_ROUNDS: usize = 4;
const SYMPREC_RETRIES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalizeOptions {
    /// Fractional tolerance for symmetry and translation matching.
    pub symprec: f64,
    /// When false the origin is left where the input put it. Only useful for testing the
    /// uniqueness harness itself.
    pub select_origin: bool,
}

impl Default for CanonicalizeOptions {
    fn default() -> Self {
        Self {
            symprec: DEFAULT_SYMPREC,
            select_origin: true,
        }
    }
}

struct Neighbor {
    z: u8,
    offset: Vector3<f64>,
    distance: f64,
}

/// Periodic images of every atom within `r` of atom `i`, the zero-distance self excluded.
fn neighbors(crystal: &Crystal, i: usize, r: f64) -> Vec<Neighbor> {
    let lt = crystal.lattice().transpose();
    let inv = crystal
        .lattice()
        .try_inverse()
        .expect("crystal lattice is non-degenerate");
    let bound: Vec<i32> = (0..3)
        .map(|k| (r * inv.column(k).norm()).ceil() as i32 + 1)
        .collect();
    let origin = crystal.frac_positions()[i];
    let mut out = Vec::new();
    for (&z, p) in crystal.species().iter().zip(crystal.frac_positions()) {
        let base = p - origin;
        for a in -bound[0]..=bound[0] {
            for b in -bound[1]..=bound[1] {
                for c in -bound[2]..=bound[2] {
                    let offset = base + Vector3::new(a as f64, b as f64, c as f64);
                    let distance = (lt * offset).norm();
                    if distance > DISTANCE_MARGIN && distance < r - DISTANCE_MARGIN {
                        out.push(Neighbor {
                            z,
                            offset,
                            distance,
                        });
                    }
                }
            }
        }
    }
    out
}

fn radial_sum(env: &[Neighbor], r: f64) -> u64 {
    env.iter()
        .filter(|n| n.distance < r - DISTANCE_MARGIN)
        .map(|n| u64::from(n.z))
        .sum()
}

fn directional_sums(env: &[Neighbor], r: f64) -> [u64; 3] {
    let mut out = [0; 3];
    for n in env.iter().filter(|n| n.distance < r - DISTANCE_MARGIN) {
        for (axis, slot) in out.iter_mut().enumerate() {
            if n.offset[axis] > DISTANCE_MARGIN {
                *slot += u64::from(n.z);
            }
        }
    }
    out
}

/// Sum of atomic numbers of all images strictly closer than `r` to atom `i`.
pub fn local_density(crystal: &Crystal, i: usize, r: f64) -> u64 {
    radial_sum(&neighbors(crystal, i, r), r)
}

/// Per-axis densities: neighbors within `r` whose unwrapped offset along that axis is positive.
pub fn directional_densities(crystal: &Crystal, i: usize, r: f64) -> (u64, u64, u64) {
    let [a, b, c] = directional_sums(&neighbors(crystal, i, r), r);
    (a, b, c)
}

/// Radial densities over the radius ladder, then the flattened directional densities.
type DensityKeys = (Vec<u64>, Vec<u64>);

/// Rule 2 and rule 3 keys of atom `i` over the radius ladder.
fn density_keys(crystal: &Crystal, i: usize) -> DensityKeys {
    let rmax = RADIUS_LADDER[RADIUS_LADDER.len() - 1];
    let env = neighbors(crystal, i, rmax);
    let radial = RADIUS_LADDER.iter().map(|&r| radial_sum(&env, r)).collect();
    let directional = RADIUS_LADDER
        .iter()
        .flat_map(|&r| directional_sums(&env, r))
        .collect();
    (radial, directional)
}

/// Atoms still tied after the atomic-number, radial-density and directional-density rules.
pub fn origin_candidates(crystal: &Crystal) -> Vec<usize> {
    let zmin = *crystal.species().iter().min().expect("crystal has atoms");
    let candidates: Vec<usize> = (0..crystal.len())
        .filter(|&i| crystal.species()[i] == zmin)
        .collect();
    if candidates.len() == 1 {
        return candidates;
    }
    let keyed: Vec<(usize, DensityKeys)> = candidates
        .into_iter()
        .map(|i| (i, density_keys(crystal, i)))
        .collect();
    let best_radial = keyed
        .iter()
        .map(|(_, k)| &k.0)
        .min()
        .expect("non-empty")
        .clone();
    let keyed: Vec<_> = keyed
        .into_iter()
        .filter(|(_, k)| k.0 == best_radial)
        .collect();
    let best_directional = keyed
        .iter()
        .map(|(_, k)| &k.1)
        .min()
        .expect("non-empty")
        .clone();
    keyed
        .into_iter()
        .filter(|(_, k)| k.1 == best_directional)
        .map(|(i, _)| i)
        .collect()
}

/// Index of the origin atom: the density cascade, then the smallest sequence text among ties.
pub fn select_origin(crystal: &Crystal) -> usize {
    select_origin_with(crystal, DEFAULT_SYMPREC)
}

fn select_origin_with(crystal: &Crystal, symprec: f64) -> usize {
    let candidates = origin_candidates(crystal);
    if candidates.len() == 1 {
        return candidates[0];
    }
    candidates
        .into_iter()
        .filter_map(|i| {
            let shifted = shift_origin(crystal, i).ok()?;
            let cell = build_cell(&shifted, symprec).ok()?;
            Some((cell_text(&cell), i))
        })
        .min()
        .map_or(0, |(_, i)| i)
}

/// Moves atom `i` to the origin: every position becomes `(p_j - p_i) mod 1`.
pub fn shift_origin(crystal: &Crystal, i: usize) -> Result<Crystal> {
    let origin = *crystal
        .frac_positions()
        .get(i)
        .ok_or(Error::IndexOutOfRange {
            index: i,
            len: crystal.len(),
        })?;
    let frac = crystal
        .frac_positions()
        .iter()
        .enumerate()
        .map(|(j, p)| {
            if j == i {
                Vector3::zeros()
            } else {
                wrap_frac(&(p - origin))
            }
        })
        .collect();
    crystal.with_positions(frac)
}

fn atom_key(a: &IrreducibleAtom) -> (u8, Reverse<usize>, [i64; 3]) {
    (a.z, Reverse(a.multiplicity), frac_ticks(&a.frac))
}

/// Sorts by Z ascending, multiplicity descending, then quantized coordinates.
pub fn order_atoms(atoms: &[IrreducibleAtom]) -> Result<Vec<IrreducibleAtom>> {
    let mut sorted = atoms.to_vec();
    sorted.sort_by_key(atom_key);
    if let Some(w) = sorted
        .windows(2)
        .find(|w| atom_key(&w[0]) == atom_key(&w[1]))
    {
        return Err(Error::DuplicateAtom(w[0].z));
    }
    Ok(sorted)
}

/// Operations at `symprec`, halving it on closure failure and settling for the identity last.
fn robust_operations(crystal: &Crystal, symprec: f64) -> (Vec<SymmetryOperation>, f64) {
    let mut tol = symprec;
    for _ in 0..SYMPREC_RETRIES {
        if let Ok(ops) = detect_operations(crystal, tol) {
            return (ops, tol);
        }
        tol /= 2.0;
    }
    (vec![SymmetryOperation::identity()], symprec)
}

fn snap_translation_component(t: f64) -> f64 {
    let k = (t * 12.0).round();
    if (t - k / 12.0).abs() <= TWELFTH_SNAP {
        k / 12.0
    } else {
        snap_frac(t)
    }
}

fn quantized_params(p: &LatticeParameters) -> LatticeParameters {
    LatticeParameters {
        a: snap_value(p.a),
        b: snap_value(p.b),
        c: snap_value(p.c),
        alpha: snap_value(p.alpha),
        beta: snap_value(p.beta),
        gamma: snap_value(p.gamma),
    }
}

/// Canonical cell of a structure whose basis and origin are already fixed.
pub fn build_cell(crystal: &Crystal, symprec: f64) -> Result<CanonicalCell> {
    let (ops, tol) = robust_operations(crystal, symprec);
    let (ops, irr) = match extract_irreducible(crystal, &ops, tol) {
        Ok(irr) => (ops, irr),
        Err(_) => {
            let ident = vec![SymmetryOperation::identity()];
            let irr = extract_irreducible(crystal, &ident, tol)?;
            (ident, irr)
        }
    };
    let mut operations: Vec<SymmetryOperation> = ops
        .iter()
        .map(|op| {
            SymmetryOperation::new(op.rotation, op.translation.map(snap_translation_component))
        })
        .collect();
    operations.sort_by(|a, b| a.canonical_cmp(b));
    let atoms: Vec<IrreducibleAtom> = irr
        .into_iter()
        .map(|a| IrreducibleAtom {
            frac: a.frac.map(snap_frac),
            ..a
        })
        .collect();
    Ok(CanonicalCell {
        params: quantized_params(&crystal.params()?),
        atoms: order_atoms(&atoms)?,
        space_group_label: classify_space_group(&operations),
        operations,
        formula: reduced_formula(&crystal.composition()),
    })
}

/// Proper relabelings `K` of a reduced basis that leave its metric unchanged.
pub fn basis_automorphisms(lattice: &Matrix3<f64>) -> Vec<Matrix3<i32>> {
    let mut ks: Vec<Matrix3<i32>> = metric_preserving_rotations(lattice, 1, BASIS_TOL)
        .into_iter()
        .map(|w| w.transpose())
        .filter(|k| k.map(f64::from).determinant() > 0.0)
        .collect();
    ks.sort_by_key(|k| k.iter().copied().collect::<Vec<i32>>());
    if ks.is_empty() {
        ks.push(Matrix3::identity());
    }
    ks
}

/// Reduced, primitive cell in the pipeline's Niggli convention.
pub fn reduced_primitive(crystal: &Crystal, symprec: f64) -> Result<Crystal> {
    let (reduced, _) = niggli_reduce_with_eps(crystal, CANONICAL_NIGGLI_EPS)?;
    let primitive = reduce_to_primitive_with_tol(&reduced, symprec)?;
    Ok(niggli_reduce_with_eps(&primitive, CANONICAL_NIGGLI_EPS)?.0)
}

fn canonical_once(crystal: &Crystal, options: &CanonicalizeOptions) -> Result<CanonicalCell> {
    let reduced = reduced_primitive(crystal, options.symprec)?;
    let mut best: Option<(String, CanonicalCell)> = None;
    for k in basis_automorphisms(reduced.lattice()) {
        let relabeled = reduced.change_basis(&k)?;
        let snapped = quantized_params(&relabeled.params()?);
        let relabeled = match lattice_from_params(&snapped) {
            Ok(l) => relabeled.with_lattice(l)?,
            Err(_) => relabeled,
        };
        let starts: Vec<Option<usize>> = if options.select_origin {
            origin_candidates(&relabeled)
                .into_iter()
                .map(Some)
                .collect()
        } else {
            vec![None]
        };
        for start in starts {
            let placed = match start {
                Some(i) => shift_origin(&relabeled, i)?,
                None => relabeled.clone(),
            };
            let cell = build_cell(&placed, options.symprec)?;
            let text = cell_text(&cell);
            if best.as_ref().is_none_or(|(t, _)| text < *t) {
                best = Some((text, cell));
            }
        }
    }
    Ok(best.expect("at least one basis and origin").1)
}

/// Canonical cell with default options.
pub fn canonicalize(crystal: &Crystal) -> Result<CanonicalCell> {
    canonicalize_with(crystal, &CanonicalizeOptions::default())
}

/// Runs the pipeline, then re-runs it on the cell rebuilt from its own quantized form until the
/// text stops changing, so that decoding and re-encoding a sequence reproduces it.
pub fn canonicalize_with(
    crystal: &Crystal,
    options: &CanonicalizeOptions,
) -> Result<CanonicalCell> {
    let mut cell = canonical_once(crystal, options)?;
    let mut text = cell_text(&cell);
    for _ in 0..MAX_FIXED_POINT_ROUNDS {
        let Ok(rebuilt) = cell_to_crystal(&cell) else {
            break;
        };
        let Ok(next) = canonical_once(&rebuilt, options) else {
            break;
        };
        let next_text = cell_text(&next);
        if next_text == text {
            break;
        }
        cell = next;
        text = next_text;
    }
    Ok(cell)
}
