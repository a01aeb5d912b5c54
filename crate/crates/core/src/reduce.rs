//! Niggli reduction of the lattice basis and reduction of supercells to a primitive cell.

use nalgebra::{Matrix3, Vector3};

use crate::crystal::{min_image, wrap_frac, Crystal, MIN_CELL_VOLUME};
use crate::error::{Error, Result};

pub const MAX_NIGGLI_STEPS: usize = 1000;
pub const NIGGLI_EPS: f64 = 1e-5;
/// Fractional tolerance used when none is given.
pub const DEFAULT_SYMPREC: f64 = 0.01;

/// Niggli-reduces the cell. Returns the re-expressed crystal and `K` with `L' = K·L`.
///
/// The reduced basis is right-handed; when the reduced vectors come out left-handed all three
/// are negated, which leaves the metric untouched.
pub fn niggli_reduce(crystal: &Crystal) -> Result<(Crystal, Matrix3<i32>)> {
    niggli_reduce_with_eps(crystal, NIGGLI_EPS)
}

pub fn niggli_reduce_with_eps(crystal: &Crystal, rel_eps: f64) -> Result<(Crystal, Matrix3<i32>)> {
    let k = niggli_transform_with_eps(crystal.lattice(), rel_eps)?;
    Ok((crystal.change_basis(&k)?, k))
}

/// Krivy–Gruber reduction with the epsilon-stabilized comparisons, `eps = 1e-5·V^(1/3)`.
pub fn niggli_transform(lattice: &Matrix3<f64>) -> Result<Matrix3<i32>> {
    niggli_transform_with_eps(lattice, NIGGLI_EPS)
}

/// Comparisons use `eps = rel_eps·V^(1/3)` (Å²).
pub fn niggli_transform_with_eps(lattice: &Matrix3<f64>, rel_eps: f64) -> Result<Matrix3<i32>> {
    let volume = lattice.determinant().abs();
    if volume <= MIN_CELL_VOLUME || !volume.is_finite() {
        return Err(Error::DegenerateLattice(lattice.determinant()));
    }
    let eps = rel_eps * volume.cbrt();
    let mut k = Matrix3::<i32>::identity();

    for _ in 0..MAX_NIGGLI_STEPS {
        let current = k.map(f64::from) * lattice;
        let g = current * current.transpose();
        let (a, b, c) = (g[(0, 0)], g[(1, 1)], g[(2, 2)]);
        let (xi, eta, zeta) = (2.0 * g[(1, 2)], 2.0 * g[(0, 2)], 2.0 * g[(0, 1)]);

        // A1
        if a > b + eps || ((a - b).abs() <= eps && xi.abs() > eta.abs() + eps) {
            let (r0, r1, r2) = (
                k.row(0).into_owned(),
                k.row(1).into_owned(),
                k.row(2).into_owned(),
            );
            k.set_row(0, &-r1);
            k.set_row(1, &-r0);
            k.set_row(2, &-r2);
            continue;
        }
        // A2
        if b > c + eps || ((b - c).abs() <= eps && eta.abs() > zeta.abs() + eps) {
            let (r0, r1, r2) = (
                k.row(0).into_owned(),
                k.row(1).into_owned(),
                k.row(2).into_owned(),
            );
            k.set_row(0, &-r0);
            k.set_row(1, &-r2);
            k.set_row(2, &-r1);
            continue;
        }
        // A3 / A4: bring the cell to all-acute or all-non-acute form
        let sign = |v: f64| {
            if v > eps {
                1
            } else if v < -eps {
                -1
            } else {
                0
            }
        };
        let (l, m, n) = (sign(xi), sign(eta), sign(zeta));
        let flips = if l * m * n == 1 {
            [
                if l == -1 { -1 } else { 1 },
                if m == -1 { -1 } else { 1 },
                if n == -1 { -1 } else { 1 },
            ]
        } else {
            let mut f = [1, 1, 1];
            let mut zero_at = None;
            for (axis, s) in [l, m, n].into_iter().enumerate() {
                if s == 1 {
                    f[axis] = -1;
                } else if s == 0 {
                    zero_at = Some(axis);
                }
            }
            if f[0] * f[1] * f[2] == -1 {
                if let Some(axis) = zero_at {
                    f[axis] = -1;
                }
            }
            f
        };
        if flips != [1, 1, 1] {
            for (axis, f) in flips.into_iter().enumerate() {
                if f == -1 {
                    let r = -k.row(axis).into_owned();
                    k.set_row(axis, &r);
                }
            }
            continue;
        }
        // A5
        if xi.abs() > b + eps
            || ((xi - b).abs() <= eps && 2.0 * eta < zeta - eps)
            || ((xi + b).abs() <= eps && zeta < -eps)
        {
            let s = if xi > 0.0 { 1 } else { -1 };
            let r = k.row(2) - k.row(1) * s;
            k.set_row(2, &r);
            continue;
        }
        // A6
        if eta.abs() > a + eps
            || ((eta - a).abs() <= eps && 2.0 * xi < zeta - eps)
            || ((eta + a).abs() <= eps && zeta < -eps)
        {
            let s = if eta > 0.0 { 1 } else { -1 };
            let r = k.row(2) - k.row(0) * s;
            k.set_row(2, &r);
            continue;
        }
        // A7
        if zeta.abs() > a + eps
            || ((zeta - a).abs() <= eps && 2.0 * xi < eta - eps)
            || ((zeta + a).abs() <= eps && eta < -eps)
        {
            let s = if zeta > 0.0 { 1 } else { -1 };
            let r = k.row(1) - k.row(0) * s;
            k.set_row(1, &r);
            continue;
        }
        // A8
        let sum = xi + eta + zeta + a + b;
        if sum < -eps || (sum.abs() <= eps && 2.0 * (a + eta) + zeta > eps) {
            let r = k.row(2) + k.row(0) + k.row(1);
            k.set_row(2, &r);
            continue;
        }

        if (k.map(f64::from) * lattice).determinant() < 0.0 {
            k = -k;
        }
        return Ok(k);
    }
    Err(Error::NonConvergence(MAX_NIGGLI_STEPS))
}

fn least_frequent_species(crystal: &Crystal) -> u8 {
    crystal
        .composition()
        .into_iter()
        .min_by_key(|&(z, n)| (n, z))
        .map(|(z, _)| z)
        .expect("crystal has atoms")
}

/// Index of the atom of species `z` at `p` within `tol`, if any.
pub(crate) fn find_atom(crystal: &Crystal, z: u8, p: &Vector3<f64>, tol: f64) -> Option<usize> {
    crystal
        .species()
        .iter()
        .zip(crystal.frac_positions())
        .position(|(&s, q)| s == z && min_image(p, q).norm() <= tol)
}

/// Maps every atom by `x -> x + t` and returns the matching permutation, or `None`.
fn translation_permutation(crystal: &Crystal, t: &Vector3<f64>, tol: f64) -> Option<Vec<usize>> {
    let mut perm = Vec::with_capacity(crystal.len());
    for (&z, p) in crystal.species().iter().zip(crystal.frac_positions()) {
        perm.push(find_atom(crystal, z, &(p + t), tol)?);
    }
    Some(perm)
}

/// All pure translations (including zero) mapping the structure onto itself, refined against
/// the matched positions.
pub fn pure_translations(crystal: &Crystal, tol: f64) -> Vec<Vector3<f64>> {
    let z = least_frequent_species(crystal);
    let members: Vec<usize> = (0..crystal.len())
        .filter(|&i| crystal.species()[i] == z)
        .collect();
    let anchor = crystal.frac_positions()[members[0]];
    let mut found: Vec<Vector3<f64>> = vec![Vector3::zeros()];
    for &m in &members[1..] {
        let t = wrap_frac(&(crystal.frac_positions()[m] - anchor));
        let Some(perm) = translation_permutation(crystal, &t, tol) else {
            continue;
        };
        let n = crystal.len() as f64;
        let correction = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                min_image(
                    &crystal.frac_positions()[j],
                    &(crystal.frac_positions()[i] + t),
                )
            })
            .fold(Vector3::zeros(), |acc, d| acc + d)
            / n;
        let t = wrap_frac(&(t + correction));
        if found.iter().all(|f| min_image(f, &t).norm() > tol) {
            found.push(t);
        }
    }
    found
}

/// Row-reduces integer vectors to a basis of the lattice they generate (upper triangular).
fn integer_lattice_basis(mut rows: Vec<[i64; 3]>) -> Option<[[i64; 3]; 3]> {
    let mut basis = Vec::with_capacity(3);
    for col in 0..3 {
        rows.retain(|r| r.iter().any(|&x| x != 0));
        loop {
            let pivot = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[col] != 0)
                .min_by_key(|(_, r)| r[col].abs())
                .map(|(i, _)| i)?;
            let p = rows[pivot];
            let mut clean = true;
            for (i, r) in rows.iter_mut().enumerate() {
                if i == pivot || r[col] == 0 {
                    continue;
                }
                let q = r[col].div_euclid(p[col]);
                for c in 0..3 {
                    r[c] -= q * p[c];
                }
                if r[col] != 0 {
                    clean = false;
                }
            }
            if clean {
                basis.push(rows.remove(pivot));
                break;
            }
        }
    }
    Some([basis[0], basis[1], basis[2]])
}

/// Reduces a supercell to its primitive cell using the default tolerance.
pub fn reduce_to_primitive(crystal: &Crystal) -> Result<Crystal> {
    reduce_to_primitive_with_tol(crystal, DEFAULT_SYMPREC)
}

pub fn reduce_to_primitive_with_tol(crystal: &Crystal, tol: f64) -> Result<Crystal> {
    let translations = pure_translations(crystal, tol);
    let count = translations.len();
    if count == 1 {
        return Ok(crystal.clone());
    }
    if !crystal.len().is_multiple_of(count) {
        return Err(Error::InconsistentSupercell(format!(
            "{} atoms do not divide into {count} translation cosets",
            crystal.len()
        )));
    }
    for (z, n) in crystal.composition() {
        if n % count != 0 {
            return Err(Error::InconsistentSupercell(format!(
                "{n} atoms of Z = {z} are not divisible by {count}"
            )));
        }
    }

    let scale = count as i64;
    let mut generators: Vec<[i64; 3]> = vec![[scale, 0, 0], [0, scale, 0], [0, 0, scale]];
    for t in &translations[1..] {
        let scaled = t * count as f64;
        let rounded = scaled.map(f64::round);
        if (scaled - rounded).amax() > tol * count as f64 {
            return Err(Error::InconsistentSupercell(format!(
                "translation {t:?} is not a multiple of 1/{count}"
            )));
        }
        generators.push([rounded[0] as i64, rounded[1] as i64, rounded[2] as i64]);
    }
    let basis = integer_lattice_basis(generators)
        .ok_or_else(|| Error::InconsistentSupercell("translations do not span 3D".into()))?;
    let p = Matrix3::from_fn(|i, j| basis[i][j] as f64 / count as f64);
    if (p.determinant().abs() * count as f64 - 1.0).abs() > 1e-9 {
        return Err(Error::InconsistentSupercell(format!(
            "translation group of order {count} yields cell of relative volume {}",
            p.determinant().abs()
        )));
    }
    let new_lattice = p * crystal.lattice();
    let to_new = p
        .transpose()
        .try_inverse()
        .ok_or_else(|| Error::InconsistentSupercell("singular primitive basis".into()))?;

    let mut species = Vec::new();
    let mut sums: Vec<(Vector3<f64>, Vector3<f64>, usize)> = Vec::new(); // anchor, summed offset, members
    for (&z, x) in crystal.species().iter().zip(crystal.frac_positions()) {
        let q = wrap_frac(&(to_new * x));
        let existing = sums
            .iter()
            .position(|(anchor, _, _)| min_image(&q, anchor).norm() <= tol * count as f64);
        match existing {
            Some(i) => {
                if species[i] != z {
                    return Err(Error::InconsistentSupercell(format!(
                        "species {} and {z} fold onto the same primitive site",
                        species[i]
                    )));
                }
                let d = min_image(&q, &sums[i].0);
                sums[i].1 += d;
                sums[i].2 += 1;
            }
            None => {
                species.push(z);
                sums.push((q, Vector3::zeros(), 1));
            }
        }
    }
    if sums.iter().any(|&(_, _, n)| n != count) {
        return Err(Error::InconsistentSupercell(
            "sites do not fold into equal-sized groups".into(),
        ));
    }
    let frac = sums
        .iter()
        .map(|(anchor, off, n)| wrap_frac(&(anchor + off / *n as f64)))
        .collect();
    Crystal::new(species, frac, new_lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::params_from_lattice;
    use proptest::prelude::*;

    fn nacl() -> Crystal {
        Crystal::new(
            vec![11, 17],
            vec![Vector3::zeros(), Vector3::new(0.5, 0.5, 0.5)],
            Matrix3::new(0.0, 2.82, 2.82, 2.82, 0.0, 2.82, 2.82, 2.82, 0.0),
        )
        .unwrap()
    }

    /// Lengths of the three shortest non-coplanar lattice vectors by exhaustive search.
    fn shortest_basis_lengths(lattice: &Matrix3<f64>) -> [f64; 3] {
        let mut vecs = Vec::new();
        for i in -3..=3 {
            for j in -3..=3 {
                for k in -3..=3 {
                    if (i, j, k) == (0, 0, 0) {
                        continue;
                    }
                    let v = lattice.transpose() * Vector3::new(i as f64, j as f64, k as f64);
                    vecs.push(v);
                }
            }
        }
        vecs.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
        let mut chosen: Vec<Vector3<f64>> = Vec::new();
        for v in vecs {
            let ok = match chosen.len() {
                0 => true,
                1 => chosen[0].cross(&v).norm() > 1e-6,
                2 => chosen[0].cross(&chosen[1]).dot(&v).abs() > 1e-6,
                _ => break,
            };
            if ok {
                chosen.push(v);
            }
        }
        [chosen[0].norm(), chosen[1].norm(), chosen[2].norm()]
    }

    #[test]
    fn cubic_is_fixed_point() {
        let c = Crystal::new(
            vec![1],
            vec![Vector3::zeros()],
            Matrix3::from_diagonal_element(4.0),
        )
        .unwrap();
        let (r, k) = niggli_reduce(&c).unwrap();
        assert_eq!(k.map(f64::from).determinant().abs(), 1.0);
        let p = r.params().unwrap();
        for (x, y) in p.as_array().iter().zip([4.0, 4.0, 4.0, 90.0, 90.0, 90.0]) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn sheared_cubic_recovers_cube() {
        let k0 = Matrix3::new(1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0);
        let lattice = k0 * Matrix3::from_diagonal_element(4.0);
        let oracle = shortest_basis_lengths(&lattice);
        for l in oracle {
            assert!((l - 4.0).abs() < 1e-12);
        }
        let c = Crystal::new(vec![1], vec![Vector3::zeros()], lattice).unwrap();
        let (r, _) = niggli_reduce(&c).unwrap();
        let p = r.params().unwrap();
        for (x, y) in p.as_array().iter().zip([4.0, 4.0, 4.0, 90.0, 90.0, 90.0]) {
            assert!((x - y).abs() < 1e-9, "{p:?}");
        }
    }

    #[test]
    fn coplanar_rejected() {
        let l = Matrix3::new(1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 1.0, 2.0, 0.0);
        assert!(matches!(
            niggli_transform(&l),
            Err(Error::DegenerateLattice(_))
        ));
    }

    #[test]
    fn reduced_basis_is_right_handed() {
        let l = Matrix3::new(3.0, 0.0, 0.0, 0.0, 4.0, 0.0, 0.0, 0.0, -5.0);
        let k = niggli_transform(&l).unwrap();
        assert!((k.map(f64::from) * l).determinant() > 0.0);
    }

    #[test]
    fn single_atom_is_already_primitive() {
        let c = Crystal::new(
            vec![26],
            vec![Vector3::new(0.3, 0.1, 0.2)],
            Matrix3::from_diagonal_element(2.9),
        )
        .unwrap();
        assert_eq!(reduce_to_primitive(&c).unwrap(), c);
    }

    #[test]
    fn nacl_supercell_halves() {
        let base = nacl();
        let sup = crate::verify::supercell(&base, [2, 1, 1]).unwrap();
        assert_eq!(sup.len(), 4);
        // oracle: t = (1/2, 0, 0) maps every site onto a same-species site
        let t = Vector3::new(0.5, 0.0, 0.0);
        for (z, p) in sup.species().iter().zip(sup.frac_positions()) {
            assert!(find_atom(&sup, *z, &(p + t), 1e-9).is_some());
        }
        let prim = reduce_to_primitive(&sup).unwrap();
        assert_eq!(prim.len(), 2);
        assert!((prim.volume() - base.volume()).abs() < 1e-9);
        let again = reduce_to_primitive(&prim).unwrap();
        assert_eq!(again, prim);
    }

    #[test]
    fn cscl_is_primitive() {
        let c = Crystal::new(
            vec![55, 17],
            vec![Vector3::zeros(), Vector3::new(0.5, 0.5, 0.5)],
            Matrix3::from_diagonal_element(4.12),
        )
        .unwrap();
        // brute force: the body-centering vector sends Cs onto Cl's site
        let t = Vector3::new(0.5, 0.5, 0.5);
        assert!(find_atom(&c, 55, &(c.frac_positions()[0] + t), 1e-9).is_none());
        assert_eq!(reduce_to_primitive(&c).unwrap().len(), 2);
    }

    #[test]
    fn integer_basis_of_translation_group() {
        // body centering: Z^3 + (1/2,1/2,1/2) scaled by 2
        let b = integer_lattice_basis(vec![[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 1]]).unwrap();
        let det = Matrix3::from_fn(|i, j| b[i][j] as f64).determinant().abs();
        assert!((det - 4.0).abs() < 1e-12);
    }

    fn arb_unimodular() -> impl Strategy<Value = Matrix3<i32>> {
        proptest::array::uniform9(-2i32..=2)
            .prop_map(|e| Matrix3::from_row_slice(&e))
            .prop_filter("det = 1", |m| {
                (m.map(f64::from).determinant() - 1.0).abs() < 1e-9
            })
    }

    proptest! {
        #[test]
        fn basis_change_invariance(
            k0 in arb_unimodular(),
            a in 3.0f64..7.0, b in 3.0f64..7.0, c in 3.0f64..7.0,
            alpha in 65.0f64..115.0, beta in 65.0f64..115.0, gamma in 65.0f64..115.0,
        ) {
            let p = crate::crystal::LatticeParameters { a, b, c, alpha, beta, gamma };
            prop_assume!(p.gram_determinant() > 0.1);
            let l = crate::crystal::lattice_from_params(&p).unwrap();
            let reference = params_from_lattice(&(niggli_transform(&l).unwrap().map(f64::from) * l)).unwrap();
            let l2 = k0.map(f64::from) * l;
            let k = niggli_transform(&l2).unwrap();
            let reduced = k.map(f64::from) * l2;
            prop_assert!((reduced.determinant().abs() - l.determinant().abs()).abs() < 1e-8);
            prop_assert!(reduced.determinant() > 0.0);
            let got = params_from_lattice(&reduced).unwrap();
            for (x, y) in reference.as_array().iter().zip(got.as_array()) {
                prop_assert!((x - y).abs() < 1e-8, "{reference:?} vs {got:?}");
            }
            let lengths = shortest_basis_lengths(&l);
            for (x, y) in lengths.iter().zip([got.a, got.b, got.c]) {
                prop_assert!((x - y).abs() < 1e-8);
            }
        }
    }
}
