//! Domain types: the periodic crystal, its six lattice invariants, space-group operations and the
//! canonical cell produced by the pipeline.
//!
//! Lattices are stored with the lattice vectors as *rows*, so a fractional row vector `x` maps to
//! Cartesian `x · L`. Symmetry operations act on fractional column vectors, `x' = W·x + t`.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::elements;
use crate::error::{Error, Result};

/// Values this close below 1.0 wrap to 0.0 instead of staying just under the boundary.
pub const WRAP_SNAP: f64 = 1e-8;
/// Smallest admissible |det(lattice)| in Å³.
pub const MIN_CELL_VOLUME: f64 = 1e-8;
/// Smallest admissible normalized Gram determinant for a parameter sextuple.
pub const MIN_GRAM_DET: f64 = 1e-10;

/// Wraps a fractional component into `[0, 1)`.
pub fn wrap_unit(x: f64) -> f64 {
    let w = x - x.floor();
    if !(WRAP_SNAP..1.0 - WRAP_SNAP).contains(&w) {
        0.0
    } else {
        w
    }
}

pub fn wrap_frac(v: &Vector3<f64>) -> Vector3<f64> {
    v.map(wrap_unit)
}

/// Minimum-image difference `a - b`, each component in `[-0.5, 0.5]`.
pub fn min_image(a: &Vector3<f64>, b: &Vector3<f64>) -> Vector3<f64> {
    (a - b).map(|d| d - d.round())
}

/// A unit cell: atomic numbers, fractional positions and lattice rows (Å).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Crystal {
    species: Vec<u8>,
    frac: Vec<Vector3<f64>>,
    lattice: Matrix3<f64>,
}

impl Crystal {
    pub fn new(species: Vec<u8>, frac: Vec<Vector3<f64>>, lattice: Matrix3<f64>) -> Result<Self> {
        if species.is_empty() {
            return Err(Error::InvalidCrystal("no atoms".into()));
        }
        if species.len() != frac.len() {
            return Err(Error::InvalidCrystal(format!(
                "{} species for {} positions",
                species.len(),
                frac.len()
            )));
        }
        if let Some(&z) = species
            .iter()
            .find(|&&z| z == 0 || z > elements::MAX_ATOMIC_NUMBER)
        {
            return Err(Error::InvalidCrystal(format!(
                "atomic number {z} out of 1..=103"
            )));
        }
        if frac.iter().any(|p| p.iter().any(|c| !c.is_finite())) {
            return Err(Error::InvalidCrystal("non-finite coordinate".into()));
        }
        if lattice.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidCrystal("non-finite lattice".into()));
        }
        let det = lattice.determinant();
        if det.abs() <= MIN_CELL_VOLUME {
            return Err(Error::DegenerateLattice(det));
        }
        let frac = frac.iter().map(wrap_frac).collect();
        Ok(Self {
            species,
            frac,
            lattice,
        })
    }

    pub fn species(&self) -> &[u8] {
        &self.species
    }

    pub fn frac_positions(&self) -> &[Vector3<f64>] {
        &self.frac
    }

    pub fn lattice(&self) -> &Matrix3<f64> {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.species.len()
    }

    pub fn is_empty(&self) -> bool {
        self.species.is_empty()
    }

    pub fn volume(&self) -> f64 {
        self.lattice.determinant().abs()
    }

    /// Cartesian position of atom `index`.
    pub fn frac_to_cart(&self, index: usize) -> Result<Vector3<f64>> {
        let p = self.frac.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.len(),
        })?;
        Ok(self.lattice.transpose() * p)
    }

    pub fn cart_positions(&self) -> Vec<Vector3<f64>> {
        let lt = self.lattice.transpose();
        self.frac.iter().map(|p| lt * p).collect()
    }

    pub fn params(&self) -> Result<LatticeParameters> {
        params_from_lattice(&self.lattice)
    }

    /// Same atoms with a different lattice; fractional coordinates are kept.
    pub fn with_lattice(&self, lattice: Matrix3<f64>) -> Result<Self> {
        Self::new(self.species.clone(), self.frac.clone(), lattice)
    }

    pub fn with_positions(&self, frac: Vec<Vector3<f64>>) -> Result<Self> {
        Self::new(self.species.clone(), frac, self.lattice)
    }

    /// Re-expresses the same periodic structure in the basis `K · L` (`K` integer, `|det K| = 1`).
    pub fn change_basis(&self, k: &Matrix3<i32>) -> Result<Self> {
        let kf = k.map(f64::from);
        let inv_t = kf
            .try_inverse()
            .ok_or_else(|| Error::InvalidCrystal("singular basis change".into()))?
            .transpose();
        let frac = self.frac.iter().map(|p| inv_t * p).collect();
        Self::new(self.species.clone(), frac, kf * self.lattice)
    }

    /// Counts per atomic number, ascending by Z.
    pub fn composition(&self) -> Vec<(u8, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for &z in &self.species {
            *counts.entry(z).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }
}

/// The six rotation-invariant lattice parameters (Å and degrees).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeParameters {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl LatticeParameters {
    pub fn new(a: f64, b: f64, c: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let p = Self {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let lengths_ok = [self.a, self.b, self.c]
            .iter()
            .all(|&l| l.is_finite() && l > 0.0);
        let angles_ok = [self.alpha, self.beta, self.gamma]
            .iter()
            .all(|&t| t.is_finite() && t > 0.0 && t < 180.0);
        if !lengths_ok {
            return Err(Error::InvalidCrystal(format!(
                "lattice lengths must be positive: {}, {}, {}",
                self.a, self.b, self.c
            )));
        }
        if !angles_ok || self.gram_determinant() <= MIN_GRAM_DET {
            return Err(Error::UnrealizableAngles(self.alpha, self.beta, self.gamma));
        }
        Ok(())
    }

    /// `1 + 2 cosα cosβ cosγ - cos²α - cos²β - cos²γ`, the squared volume of the unit-edge cell.
    pub fn gram_determinant(&self) -> f64 {
        let (ca, cb, cg) = (
            self.alpha.to_radians().cos(),
            self.beta.to_radians().cos(),
            self.gamma.to_radians().cos(),
        );
        1.0 + 2.0 * ca * cb * cg - ca * ca - cb * cb - cg * cg
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.a, self.b, self.c, self.alpha, self.beta, self.gamma]
    }
}

pub fn params_from_lattice(lattice: &Matrix3<f64>) -> Result<LatticeParameters> {
    let det = lattice.determinant();
    if det.abs() <= MIN_CELL_VOLUME || !det.is_finite() {
        return Err(Error::DegenerateLattice(det));
    }
    let rows: Vec<Vector3<f64>> = (0..3).map(|i| lattice.row(i).transpose()).collect();
    let len: Vec<f64> = rows.iter().map(|r| r.norm()).collect();
    let angle = |i: usize, j: usize| {
        (rows[i].dot(&rows[j]) / (len[i] * len[j]))
            .clamp(-1.0, 1.0)
            .acos()
            .to_degrees()
    };
    Ok(LatticeParameters {
        a: len[0],
        b: len[1],
        c: len[2],
        alpha: angle(1, 2),
        beta: angle(0, 2),
        gamma: angle(0, 1),
    })
}

/// Builds lattice rows in the fixed orientation: ℓ1 along +x, ℓ2 in the xy-plane with positive
/// y, ℓ3 with positive z.
pub fn lattice_from_params(p: &LatticeParameters) -> Result<Matrix3<f64>> {
    p.validate()?;
    let (ca, cb, cg) = (
        p.alpha.to_radians().cos(),
        p.beta.to_radians().cos(),
        p.gamma.to_radians().cos(),
    );
    let sg = p.gamma.to_radians().sin();
    let cy = (ca - cb * cg) / sg;
    let cz = p.gram_determinant().sqrt() / sg;
    Ok(Matrix3::new(
        p.a,
        0.0,
        0.0,
        p.b * cg,
        p.b * sg,
        0.0,
        p.c * cb,
        p.c * cy,
        p.c * cz,
    ))
}

/// A space-group operation `x' = W·x + t` in the fractional basis of its cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryOperation {
    pub rotation: Matrix3<i32>,
    pub translation: Vector3<f64>,
}

impl SymmetryOperation {
    pub fn new(rotation: Matrix3<i32>, translation: Vector3<f64>) -> Self {
        Self {
            rotation,
            translation: wrap_frac(&translation),
        }
    }

    pub fn identity() -> Self {
        Self::new(Matrix3::identity(), Vector3::zeros())
    }

    pub fn is_identity(&self) -> bool {
        self.rotation == Matrix3::identity() && self.translation.iter().all(|&t| t == 0.0)
    }

    pub fn apply(&self, p: &Vector3<f64>) -> Vector3<f64> {
        self.rotation.map(f64::from) * p + self.translation
    }

    /// `self ∘ other`, translation wrapped into `[0, 1)`.
    pub fn compose(&self, other: &SymmetryOperation) -> SymmetryOperation {
        SymmetryOperation::new(
            self.rotation * other.rotation,
            self.rotation.map(f64::from) * other.translation + self.translation,
        )
    }

    pub fn determinant(&self) -> i32 {
        let m = &self.rotation;
        m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
            - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
            + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
    }

    /// Row-major rotation entries, the primary key of the canonical operation order.
    pub fn rotation_key(&self) -> [i32; 9] {
        let m = &self.rotation;
        [
            m[(0, 0)],
            m[(0, 1)],
            m[(0, 2)],
            m[(1, 0)],
            m[(1, 1)],
            m[(1, 2)],
            m[(2, 0)],
            m[(2, 1)],
            m[(2, 2)],
        ]
    }

    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rotation_key()
            .cmp(&other.rotation_key())
            .then_with(|| {
                for i in 0..3 {
                    let o = self.translation[i].total_cmp(&other.translation[i]);
                    if o.is_ne() {
                        return o;
                    }
                }
                std::cmp::Ordering::Equal
            })
    }
}

/// One representative of a symmetry orbit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrreducibleAtom {
    pub z: u8,
    pub frac: Vector3<f64>,
    pub multiplicity: usize,
}

/// The canonical, origin-fixed primitive cell in invariant form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalCell {
    pub params: LatticeParameters,
    pub atoms: Vec<IrreducibleAtom>,
    pub operations: Vec<SymmetryOperation>,
    pub formula: String,
    pub space_group_label: String,
}

impl CanonicalCell {
    pub fn n_atoms(&self) -> usize {
        self.atoms.iter().map(|a| a.multiplicity).sum()
    }
}

/// Reduced formula with elements by ascending Z and unit counts omitted.
pub fn reduced_formula(composition: &[(u8, usize)]) -> String {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let g = composition
        .iter()
        .fold(0, |acc, &(_, n)| gcd(acc, n))
        .max(1);
    let mut sorted = composition.to_vec();
    sorted.sort_by_key(|&(z, _)| z);
    sorted
        .iter()
        .map(|&(z, n)| {
            let sym = elements::symbol(z).unwrap_or("X");
            match n / g {
                1 => sym.to_string(),
                k => format!("{sym}{k}"),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rotation(axis: Vector3<f64>, angle: f64) -> Matrix3<f64> {
        *nalgebra::Rotation3::from_axis_angle(&nalgebra::Unit::new_normalize(axis), angle).matrix()
    }

    #[test]
    fn frac_to_cart_examples() {
        let cubic = Crystal::new(
            vec![11],
            vec![Vector3::new(0.5, 0.5, 0.5)],
            Matrix3::from_diagonal_element(4.0),
        )
        .unwrap();
        assert!((cubic.frac_to_cart(0).unwrap() - Vector3::new(2.0, 2.0, 2.0)).norm() < 1e-12);

        let hex = Matrix3::new(1.0, 0.0, 0.0, 0.5, 0.8660, 0.0, 0.0, 0.0, 2.0);
        let origin = Crystal::new(vec![6], vec![Vector3::zeros()], hex).unwrap();
        assert_eq!(origin.frac_to_cart(0).unwrap(), Vector3::zeros());
        // x = 1.0 wraps to 0.0 at construction
        let c = Crystal::new(
            vec![6, 6],
            vec![Vector3::new(1.0, 0.0, 0.0), Vector3::new(0.5, 0.5, 0.0)],
            hex,
        )
        .unwrap();
        assert_eq!(c.frac_positions()[0], Vector3::zeros());
        let p = c.frac_to_cart(1).unwrap();
        assert!((p - Vector3::new(0.75, 0.4330, 0.0)).norm() < 1e-12);
        assert_eq!(
            c.frac_to_cart(2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn construction_rejects_bad_input() {
        let l = Matrix3::identity();
        assert!(Crystal::new(vec![], vec![], l).is_err());
        assert!(Crystal::new(vec![1, 2], vec![Vector3::zeros()], l).is_err());
        assert!(Crystal::new(vec![104], vec![Vector3::zeros()], l).is_err());
        let flat = Matrix3::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0);
        assert!(matches!(
            Crystal::new(vec![1], vec![Vector3::zeros()], flat),
            Err(Error::DegenerateLattice(_))
        ));
    }

    #[test]
    fn wrap_snaps_near_one() {
        assert_eq!(wrap_unit(1.0 - 1e-9), 0.0);
        assert_eq!(wrap_unit(-1e-12), 0.0);
        assert_eq!(wrap_unit(1.25), 0.25);
        assert_eq!(wrap_unit(-0.25), 0.75);
    }

    #[test]
    fn params_examples() {
        let p = params_from_lattice(&Matrix3::from_diagonal(&Vector3::new(3.0, 4.0, 5.0))).unwrap();
        let want = [3.0, 4.0, 5.0, 90.0, 90.0, 90.0];
        for (got, want) in p.as_array().iter().zip(want) {
            assert!((got - want).abs() < 1e-12);
        }
        let hex = Matrix3::new(1.0, 0.0, 0.0, 0.5, 3f64.sqrt() / 2.0, 0.0, 0.0, 0.0, 2.0);
        let p = params_from_lattice(&hex).unwrap();
        let want = [1.0, 1.0, 2.0, 90.0, 90.0, 60.0];
        for (got, want) in p.as_array().iter().zip(want) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
        let bad = LatticeParameters {
            a: 1.0,
            b: 1.0,
            c: 1.0,
            alpha: 120.0,
            beta: 120.0,
            gamma: 120.0,
        };
        assert!(bad.gram_determinant().abs() < 1e-12);
        assert!(matches!(
            lattice_from_params(&bad),
            Err(Error::UnrealizableAngles(..))
        ));
    }

    #[test]
    fn lattice_convention() {
        let p = LatticeParameters::new(3.0, 4.0, 5.0, 80.0, 100.0, 110.0).unwrap();
        let l = lattice_from_params(&p).unwrap();
        assert_eq!(l[(0, 1)], 0.0);
        assert_eq!(l[(0, 2)], 0.0);
        assert_eq!(l[(1, 2)], 0.0);
        assert!(l[(0, 0)] > 0.0 && l[(1, 1)] > 0.0 && l[(2, 2)] > 0.0);
        assert!(l.determinant() > 0.0);
    }

    #[test]
    fn change_basis_preserves_cartesian_positions() {
        let l = Matrix3::new(3.0, 0.1, 0.0, 0.2, 4.0, 0.3, 0.1, 0.0, 5.0);
        let c = Crystal::new(
            vec![8, 14],
            vec![Vector3::new(0.1, 0.2, 0.3), Vector3::new(0.7, 0.6, 0.9)],
            l,
        )
        .unwrap();
        let k = Matrix3::new(1, 1, 0, 0, 1, 0, 1, 0, 1);
        let c2 = c.change_basis(&k).unwrap();
        assert!((c2.volume() - c.volume()).abs() < 1e-9);
        for i in 0..2 {
            let d = c2.frac_to_cart(i).unwrap() - c.frac_to_cart(i).unwrap();
            // equal modulo a lattice vector of the original cell
            let f = c.lattice().transpose().try_inverse().unwrap() * d;
            assert!(f.iter().all(|x| (x - x.round()).abs() < 1e-9));
        }
    }

    #[test]
    fn formula_rules() {
        assert_eq!(reduced_formula(&[(55, 1), (17, 1)]), "ClCs");
        assert_eq!(reduced_formula(&[(22, 2), (8, 4)]), "O2Ti");
        assert_eq!(reduced_formula(&[(6, 8)]), "C");
    }

    proptest! {
        #[test]
        fn frac_to_cart_is_rotation_equivariant(
            ax in -1.0f64..1.0, ay in -1.0f64..1.0, az in 0.1f64..1.0, angle in 0.0f64..std::f64::consts::TAU,
            x in 0.0f64..1.0, y in 0.0f64..1.0, z in 0.0f64..1.0,
        ) {
            let l = Matrix3::new(3.0, 0.2, 0.1, 0.4, 4.2, 0.0, -0.3, 0.5, 5.1);
            let r = rotation(Vector3::new(ax, ay, az), angle);
            let c = Crystal::new(vec![8], vec![Vector3::new(x, y, z)], l).unwrap();
            let rotated = c.with_lattice(l * r.transpose()).unwrap();
            let lhs = rotated.frac_to_cart(0).unwrap();
            let rhs = r * c.frac_to_cart(0).unwrap();
            prop_assert!((lhs - rhs).norm() < 1e-9);
        }

        #[test]
        fn params_are_rotation_invariant(
            ax in -1.0f64..1.0, ay in -1.0f64..1.0, az in 0.1f64..1.0, angle in 0.0f64..std::f64::consts::TAU,
            a in 2.0f64..9.0, b in 2.0f64..9.0, c in 2.0f64..9.0,
            alpha in 70.0f64..110.0, beta in 70.0f64..110.0, gamma in 70.0f64..110.0,
        ) {
            let p = LatticeParameters::new(a, b, c, alpha, beta, gamma).unwrap();
            let l = lattice_from_params(&p).unwrap();
            let back = params_from_lattice(&l).unwrap();
            for (x, y) in p.as_array().iter().zip(back.as_array()) {
                prop_assert!((x - y).abs() < 1e-8);
            }
            let r = rotation(Vector3::new(ax, ay, az), angle);
            let rotated = params_from_lattice(&(l * r.transpose())).unwrap();
            for (x, y) in p.as_array().iter().zip(rotated.as_array()) {
                prop_assert!((x - y).abs() < 1e-8);
            }
        }
    }
}
