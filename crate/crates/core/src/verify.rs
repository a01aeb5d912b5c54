//! Structure-preserving transforms, a random corpus, a simplified structure matcher and the
//! uniqueness harness.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use nalgebra::{Matrix3, Quaternion, UnitQuaternion, Vector3};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonicalize_with, reduced_primitive, CanonicalizeOptions};
use crate::codec::encode;
use crate::crystal::{lattice_from_params, min_image, Crystal, LatticeParameters};
use crate::elements;
use crate::error::{Error, Result};
use crate::reduce::DEFAULT_SYMPREC;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    Rotate,
    Translate,
    ShiftBoundary,
    ReexpressLattice,
    PermuteAtoms,
}

impl TransformKind {
    pub const ALL: [TransformKind; 5] = [
        TransformKind::Rotate,
        TransformKind::Translate,
        TransformKind::ShiftBoundary,
        TransformKind::ReexpressLattice,
        TransformKind::PermuteAtoms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Rotate => "rotate",
            TransformKind::Translate => "translate",
            TransformKind::ShiftBoundary => "shift_boundary",
            TransformKind::ReexpressLattice => "reexpress_lattice",
            TransformKind::PermuteAtoms => "permute_atoms",
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        TransformKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown transform {s:?}"))
    }
}

/// Uniform random proper rotation from a uniform unit quaternion.
pub fn random_rotation<R: Rng>(rng: &mut R) -> Matrix3<f64> {
    let (u1, u2, u3): (f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen());
    let tau = std::f64::consts::TAU;
    let q = Quaternion::new(
        u1.sqrt() * (tau * u3).cos(),
        (1.0 - u1).sqrt() * (tau * u2).sin(),
        (1.0 - u1).sqrt() * (tau * u2).cos(),
        u1.sqrt() * (tau * u3).sin(),
    );
    *UnitQuaternion::from_quaternion(q)
        .to_rotation_matrix()
        .matrix()
}

/// Integer matrix with entries in `-2..=2` and determinant 1, by rejection.
pub fn random_unimodular<R: Rng>(rng: &mut R) -> Matrix3<i32> {
    loop {
        let k = Matrix3::from_fn(|_, _| rng.gen_range(-2..=2));
        if (k.map(f64::from).determinant() - 1.0).abs() < 1e-9 {
            return k;
        }
    }
}

fn shift_all(crystal: &Crystal, shift: Vector3<f64>) -> Result<Crystal> {
    crystal.with_positions(crystal.frac_positions().iter().map(|p| p + shift).collect())
}

pub fn apply_transform<R: Rng>(
    crystal: &Crystal,
    kind: TransformKind,
    rng: &mut R,
) -> Result<Crystal> {
    match kind {
        TransformKind::Rotate => {
            let r = random_rotation(rng);
            crystal.with_lattice(crystal.lattice() * r.transpose())
        }
        TransformKind::Translate => {
            let s = Vector3::new(rng.gen(), rng.gen(), rng.gen());
            shift_all(crystal, s)
        }
        TransformKind::ShiftBoundary => {
            // put an atom just beside the cell boundary so the wrap splits the structure there
            let k = rng.gen_range(0..crystal.len());
            let delta = Vector3::from_fn(|_, _| rng.gen_range(-0.05..0.05));
            shift_all(crystal, delta - crystal.frac_positions()[k])
        }
        TransformKind::ReexpressLattice => crystal.change_basis(&random_unimodular(rng)),
        TransformKind::PermuteAtoms => {
            let mut order: Vec<usize> = (0..crystal.len()).collect();
            order.shuffle(rng);
            Crystal::new(
                order.iter().map(|&i| crystal.species()[i]).collect(),
                order.iter().map(|&i| crystal.frac_positions()[i]).collect(),
                *crystal.lattice(),
            )
        }
    }
}

/// Seeded single transform; the same seed gives the same output.
pub fn transform(crystal: &Crystal, kind: TransformKind, seed: u64) -> Result<Crystal> {
    apply_transform(crystal, kind, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Replicates the cell `n[0] × n[1] × n[2]` times.
pub fn supercell(crystal: &Crystal, n: [usize; 3]) -> Result<Crystal> {
    if n.contains(&0) {
        return Err(Error::InvalidCrystal("supercell multiplier of zero".into()));
    }
    let scale = Vector3::new(n[0] as f64, n[1] as f64, n[2] as f64);
    let mut species = Vec::new();
    let mut frac = Vec::new();
    for a in 0..n[0] {
        for b in 0..n[1] {
            for c in 0..n[2] {
                let shift = Vector3::new(a as f64, b as f64, c as f64);
                for (&z, p) in crystal.species().iter().zip(crystal.frac_positions()) {
                    species.push(z);
                    frac.push((p + shift).component_div(&scale));
                }
            }
        }
    }
    let lattice = Matrix3::from_diagonal(&scale) * crystal.lattice();
    Crystal::new(species, frac, lattice)
}

fn min_periodic_distance(lattice: &Matrix3<f64>, a: &Vector3<f64>, b: &Vector3<f64>) -> f64 {
    let lt = lattice.transpose();
    let d = min_image(a, b);
    let mut best = f64::INFINITY;
    for i in -1..=1 {
        for j in -1..=1 {
            for k in -1..=1 {
                let v = d + Vector3::new(i as f64, j as f64, k as f64);
                if v == Vector3::zeros() {
                    continue;
                }
                best = best.min((lt * v).norm());
            }
        }
    }
    best
}

/// Random valid crystal: 1–20 atoms, 15–25 Å³ per atom, angles in 60–120° with normalized Gram
/// determinant above 0.1, species from the vocabulary and no two atoms closer than 1.2 Å.
pub fn random_crystal<R: Rng>(rng: &mut R) -> Crystal {
    const MIN_SEPARATION: f64 = 1.2;
    loop {
        let n = rng.gen_range(1..=20usize);
        let (alpha, beta, gamma) = (
            rng.gen_range(60.0..120.0),
            rng.gen_range(60.0..120.0),
            rng.gen_range(60.0..120.0),
        );
        let ratios = [1.0, rng.gen_range(0.7..1.4), rng.gen_range(0.7..1.4)];
        let unit = LatticeParameters {
            a: ratios[0],
            b: ratios[1],
            c: ratios[2],
            alpha,
            beta,
            gamma,
        };
        if unit.gram_determinant() <= 0.1 {
            continue;
        }
        let volume_per_atom = rng.gen_range(15.0..25.0);
        let unit_volume = ratios[0] * ratios[1] * ratios[2] * unit.gram_determinant().sqrt();
        let s = (n as f64 * volume_per_atom / unit_volume).cbrt();
        let params = LatticeParameters {
            a: s * ratios[0],
            b: s * ratios[1],
            c: s * ratios[2],
            ..unit
        };
        let lattice = lattice_from_params(&params).expect("gram determinant checked");
        if min_periodic_distance(&lattice, &Vector3::zeros(), &Vector3::zeros()) < MIN_SEPARATION {
            continue;
        }
        let mut frac: Vec<Vector3<f64>> = Vec::with_capacity(n);
        let mut attempts = 0;
        while frac.len() < n && attempts < 2000 {
            attempts += 1;
            let p = Vector3::new(rng.gen(), rng.gen(), rng.gen());
            if frac
                .iter()
                .all(|q| min_periodic_distance(&lattice, &p, q) >= MIN_SEPARATION)
            {
                frac.push(p);
            }
        }
        if frac.len() < n {
            continue;
        }
        let species = (0..n)
            .map(|_| {
                let sym = elements::VOCABULARY_ELEMENTS
                    [rng.gen_range(0..elements::VOCABULARY_ELEMENTS.len())];
                elements::atomic_number(sym).expect("vocabulary symbols are elements")
            })
            .collect();
        return Crystal::new(species, frac, lattice).expect("generated crystal is valid");
    }
}

pub fn random_corpus(n: usize, seed: u64) -> Vec<Crystal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_crystal(&mut rng)).collect()
}

fn cell(params: [f64; 6], sites: &[(u8, [f64; 3])]) -> Crystal {
    let [a, b, c, alpha, beta, gamma] = params;
    let lattice = lattice_from_params(&LatticeParameters {
        a,
        b,
        c,
        alpha,
        beta,
        gamma,
    })
    .expect("valid prototype");
    Crystal::new(
        sites.iter().map(|s| s.0).collect(),
        sites.iter().map(|s| Vector3::from(s.1)).collect(),
        lattice,
    )
    .expect("valid prototype")
}

/// Familiar high-symmetry structures, several with centered lattices.
pub fn prototypes() -> Vec<(&'static str, Crystal)> {
    let fcc = |a: f64, sites: &[(u8, [f64; 3])]| {
        let mut all = Vec::new();
        for t in [
            [0.0, 0.0, 0.0],
            [0.0, 0.5, 0.5],
            [0.5, 0.0, 0.5],
            [0.5, 0.5, 0.0],
        ] {
            for &(z, p) in sites {
                all.push((z, [p[0] + t[0], p[1] + t[1], p[2] + t[2]]));
            }
        }
        cell([a, a, a, 90.0, 90.0, 90.0], &all)
    };
    let u = 0.3049;
    vec![
        (
            "NaCl",
            fcc(5.64, &[(11, [0.0, 0.0, 0.0]), (17, [0.5, 0.5, 0.5])]),
        ),
        (
            "CsCl",
            cell(
                [4.12, 4.12, 4.12, 90.0, 90.0, 90.0],
                &[(55, [0.0; 3]), (17, [0.5; 3])],
            ),
        ),
        (
            "Fe-bcc",
            cell(
                [2.87, 2.87, 2.87, 90.0, 90.0, 90.0],
                &[(26, [0.0; 3]), (26, [0.5; 3])],
            ),
        ),
        ("Cu-fcc", fcc(3.61, &[(29, [0.0; 3])])),
        ("Si-diamond", fcc(5.43, &[(14, [0.0; 3]), (14, [0.25; 3])])),
        (
            "CaF2",
            fcc(5.46, &[(20, [0.0; 3]), (9, [0.25; 3]), (9, [0.75; 3])]),
        ),
        (
            "Mg-hcp",
            cell(
                [3.21, 3.21, 5.21, 90.0, 90.0, 120.0],
                &[
                    (12, [1.0 / 3.0, 2.0 / 3.0, 0.25]),
                    (12, [2.0 / 3.0, 1.0 / 3.0, 0.75]),
                ],
            ),
        ),
        (
            "ZnO-wurtzite",
            cell(
                [3.25, 3.25, 5.21, 90.0, 90.0, 120.0],
                &[
                    (30, [1.0 / 3.0, 2.0 / 3.0, 0.0]),
                    (30, [2.0 / 3.0, 1.0 / 3.0, 0.5]),
                    (8, [1.0 / 3.0, 2.0 / 3.0, 0.382]),
                    (8, [2.0 / 3.0, 1.0 / 3.0, 0.882]),
                ],
            ),
        ),
        (
            "SrTiO3",
            cell(
                [3.905, 3.905, 3.905, 90.0, 90.0, 90.0],
                &[
                    (38, [0.0; 3]),
                    (22, [0.5; 3]),
                    (8, [0.5, 0.5, 0.0]),
                    (8, [0.5, 0.0, 0.5]),
                    (8, [0.0, 0.5, 0.5]),
                ],
            ),
        ),
        (
            "TiO2-rutile",
            cell(
                [4.594, 4.594, 2.959, 90.0, 90.0, 90.0],
                &[
                    (22, [0.0; 3]),
                    (22, [0.5; 3]),
                    (8, [u, u, 0.0]),
                    (8, [1.0 - u, 1.0 - u, 0.0]),
                    (8, [0.5 + u, 0.5 - u, 0.5]),
                    (8, [0.5 - u, 0.5 + u, 0.5]),
                ],
            ),
        ),
        (
            "C2/m-monoclinic",
            cell(
                [5.8, 3.4, 6.3, 90.0, 104.0, 90.0],
                &[
                    (13, [0.0, 0.0, 0.0]),
                    (13, [0.5, 0.5, 0.0]),
                    (8, [0.21, 0.0, 0.33]),
                    (8, [0.71, 0.5, 0.33]),
                    (8, [0.79, 0.0, 0.67]),
                    (8, [0.29, 0.5, 0.67]),
                ],
            ),
        ),
    ]
}

/// Outcome of [`match_structures`]; `normalized_rmse` is `None` when the structures differ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MatchResult {
    pub matched: bool,
    pub normalized_rmse: Option<f64>,
}

pub const MATCH_LTOL: f64 = 0.2;
pub const MATCH_STOL: f64 = 0.3;
pub const MATCH_ANGLE_TOL: f64 = 5.0;

/// Minimum-cost perfect assignment on a square cost matrix (Hungarian method, O(n³)).
/// Returns `assignment[row] = column`.
pub fn hungarian(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        if p[j] > 0 {
            assignment[p[j] - 1] = j - 1;
        }
    }
    assignment
}

fn params_close(a: &LatticeParameters, b: &LatticeParameters) -> bool {
    let lengths = [(a.a, b.a), (a.b, b.b), (a.c, b.c)];
    let angles = [(a.alpha, b.alpha), (a.beta, b.beta), (a.gamma, b.gamma)];
    lengths
        .iter()
        .all(|(x, y)| (x - y).abs() <= MATCH_LTOL * x.min(*y))
        && angles.iter().all(|(x, y)| (x - y).abs() <= MATCH_ANGLE_TOL)
}

/// RMS of the best species-preserving assignment of `b` onto `a` after translating `b` by
/// `shift`, with the mean displacement removed. `None` if some displacement exceeds `limit`.
fn aligned_rms(
    a: &Crystal,
    b_frac: &[Vector3<f64>],
    b_species: &[u8],
    shift: &Vector3<f64>,
    limit: f64,
) -> Option<f64> {
    let lt = a.lattice().transpose();
    let mut displacements: Vec<Vector3<f64>> = Vec::with_capacity(a.len());
    for (z, _) in a.composition() {
        let ia: Vec<usize> = (0..a.len()).filter(|&i| a.species()[i] == z).collect();
        let ib: Vec<usize> = (0..b_species.len())
            .filter(|&i| b_species[i] == z)
            .collect();
        let diff = |i: usize, j: usize| min_image(&(b_frac[j] + shift), &a.frac_positions()[i]);
        let cost: Vec<Vec<f64>> = ia
            .iter()
            .map(|&i| {
                ib.iter()
                    .map(|&j| (lt * diff(i, j)).norm_squared())
                    .collect()
            })
            .collect();
        for (r, c) in hungarian(&cost).into_iter().enumerate() {
            displacements.push(diff(ia[r], ib[c]));
        }
    }
    let n = displacements.len() as f64;
    let mean = displacements
        .iter()
        .fold(Vector3::zeros(), |acc, d| acc + d)
        / n;
    let mut sum = 0.0;
    for d in &displacements {
        let dist = (lt * (d - mean)).norm();
        if dist > limit {
            return None;
        }
        sum += dist * dist;
    }
    Some((sum / n).sqrt())
}

/// Integer bases with entries in `-1..=1` and determinant 1.
fn small_unimodular() -> &'static [Matrix3<i32>] {
    static BASES: OnceLock<Vec<Matrix3<i32>>> = OnceLock::new();
    BASES.get_or_init(|| {
        let mut out = Vec::new();
        for code in 0..3usize.pow(9) {
            let mut c = code;
            let k = Matrix3::from_fn(|_, _| {
                let v = (c % 3) as i32 - 1;
                c /= 3;
                v
            });
            if (k.map(f64::from).determinant() - 1.0).abs() < 0.5 {
                out.push(k);
            }
        }
        out
    })
}

/// Simplified periodic structure matcher with ltol 0.2, stol 0.3 and a 5° angle tolerance.
///
/// Both structures are reduced to Niggli-reduced primitive cells without quantization; `b` is
/// then tried in every small unimodular basis whose parameters are close to those of `a`, and
/// under every translation taking an atom of the rarest species onto a fixed one of `a`.
pub fn match_structures(a: &Crystal, b: &Crystal) -> Result<MatchResult> {
    let no = MatchResult {
        matched: false,
        normalized_rmse: None,
    };
    let (ca, cb) = (
        reduced_primitive(a, DEFAULT_SYMPREC)?,
        reduced_primitive(b, DEFAULT_SYMPREC)?,
    );
    if ca.composition() != cb.composition() {
        return Ok(no);
    }
    let pa = ca.params()?;
    let scale = (ca.volume() / ca.len() as f64).cbrt();
    let limit = MATCH_STOL * scale;
    let anchor_species = ca
        .composition()
        .into_iter()
        .min_by_key(|&(z, n)| (n, z))
        .map(|(z, _)| z)
        .expect("non-empty");
    let anchor = ca
        .species()
        .iter()
        .position(|&z| z == anchor_species)
        .expect("present");

    let mut best: Option<f64> = None;
    for k in small_unimodular() {
        let candidate = cb.change_basis(k)?;
        if !params_close(&pa, &candidate.params()?) {
            continue;
        }
        for j in (0..candidate.len()).filter(|&j| candidate.species()[j] == anchor_species) {
            let shift = ca.frac_positions()[anchor] - candidate.frac_positions()[j];
            if let Some(rms) = aligned_rms(
                &ca,
                candidate.frac_positions(),
                candidate.species(),
                &shift,
                limit,
            ) {
                best = Some(best.map_or(rms, |b: f64| b.min(rms)));
            }
        }
    }
    Ok(match best {
        Some(rms) => MatchResult {
            matched: true,
            normalized_rmse: Some(rms / scale),
        },
        None => no,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub id: String,
    pub transform_chain: Vec<String>,
    pub first_diff_line: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniquenessReport {
    pub total: usize,
    pub successes: usize,
    pub rate: f64,
    pub failures: Vec<Failure>,
}

impl UniquenessReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub kinds: Vec<TransformKind>,
    pub seed: u64,
    pub options: CanonicalizeOptions,
}

fn sequence_text(c: &Crystal, options: &CanonicalizeOptions) -> Result<String> {
    Ok(encode(&canonicalize_with(c, options)?, &[])?.text)
}

fn first_difference(a: &str, b: &str) -> String {
    for (i, (x, y)) in a.lines().zip(b.lines()).enumerate() {
        if x != y {
            return format!("line {}: {x:?} vs {y:?}", i + 1);
        }
    }
    format!(
        "length {} vs {} lines",
        a.lines().count(),
        b.lines().count()
    )
}

fn verify_one(
    id: &str,
    crystal: &Crystal,
    index: usize,
    config: &VerifyConfig,
) -> Vec<Option<Failure>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let reference = sequence_text(crystal, &config.options);
    (0..config.trials)
        .map(|_| {
            let mut chain: Vec<TransformKind> = config.kinds.clone();
            chain.shuffle(&mut rng);
            let mut current = Ok(crystal.clone());
            for &k in &chain {
                current = current.and_then(|c| apply_transform(&c, k, &mut rng));
            }
            let names = chain.iter().map(|k| k.name().to_string()).collect();
            let outcome = match (
                &reference,
                current.and_then(|c| sequence_text(&c, &config.options)),
            ) {
                (Ok(r), Ok(t)) if *r == t => None,
                (Ok(r), Ok(t)) => Some(first_difference(r, &t)),
                (Err(e), _) => Some(format!("error: {e}")),
                (_, Err(e)) => Some(format!("error: {e}")),
            };
            outcome.map(|first_diff_line| Failure {
                id: id.to_string(),
                transform_chain: names,
                first_diff_line,
            })
        })
        .collect()
}

/// Encodes each structure and `trials` randomly transformed copies, comparing texts byte for byte.
pub fn verify_uniqueness_named(
    corpus: &[(String, Crystal)],
    config: &VerifyConfig,
) -> UniquenessReport {
    let per_structure: Vec<Vec<Option<Failure>>> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, (id, c))| verify_one(id, c, i, config))
        .collect();
    let total = corpus.len() * config.trials;
    let failures: Vec<Failure> = per_structure.into_iter().flatten().flatten().collect();
    let successes = total - failures.len();
    UniquenessReport {
        total,
        successes,
        rate: if total == 0 {
            1.0
        } else {
            successes as f64 / total as f64
        },
        failures,
    }
}

pub fn verify_uniqueness(corpus: &[Crystal], config: &VerifyConfig) -> UniquenessReport {
    let named: Vec<(String, Crystal)> = corpus
        .iter()
        .enumerate()
        .map(|(i, c)| (i.to_string(), c.clone()))
        .collect();
    verify_uniqueness_named(&named, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Crystal {
        let l = Matrix3::new(3.1, 0.0, 0.0, 0.4, 3.7, 0.0, 0.3, 0.6, 4.4);
        Crystal::new(
            vec![8, 26, 8],
            vec![
                Vector3::new(0.1, 0.2, 0.3),
                Vector3::new(0.55, 0.71, 0.13),
                Vector3::new(0.9, 0.5, 0.25),
            ],
            l,
        )
        .unwrap()
    }

    fn pair_distances(c: &Crystal) -> Vec<f64> {
        let mut out = Vec::new();
        for i in 0..c.len() {
            for j in 0..c.len() {
                out.push(min_periodic_distance(
                    c.lattice(),
                    &c.frac_positions()[i],
                    &c.frac_positions()[j],
                ));
            }
        }
        out
    }

    #[test]
    fn transforms_are_reproducible() {
        for kind in TransformKind::ALL {
            assert_eq!(
                transform(&sample(), kind, 7).unwrap(),
                transform(&sample(), kind, 7).unwrap()
            );
        }
    }

    #[test]
    fn reexpression_preserves_volume() {
        let c = sample();
        for seed in 0..20 {
            let t = transform(&c, TransformKind::ReexpressLattice, seed).unwrap();
            assert!((t.volume() - c.volume()).abs() < 1e-9);
        }
    }

    #[test]
    fn rotation_preserves_distances() {
        let c = sample();
        let t = transform(&c, TransformKind::Rotate, 3).unwrap();
        for (x, y) in pair_distances(&c).iter().zip(pair_distances(&t)) {
            assert!((x - y).abs() < 1e-9);
        }
        let r = random_rotation(&mut ChaCha8Rng::seed_from_u64(1));
        assert!((r.determinant() - 1.0).abs() < 1e-12);
        assert!((r * r.transpose() - Matrix3::identity()).amax() < 1e-12);
    }

    #[test]
    fn hungarian_finds_optimum() {
        let cost = vec![
            vec![4.0, 1.0, 3.0],
            vec![2.0, 0.0, 5.0],
            vec![3.0, 2.0, 2.0],
        ];
        let a = hungarian(&cost);
        let total: f64 = a.iter().enumerate().map(|(r, &c)| cost[r][c]).sum();
        // brute force over the six permutations
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let best = perms
            .iter()
            .map(|p| (0..3).map(|r| cost[r][p[r]]).sum::<f64>())
            .fold(f64::INFINITY, f64::min);
        assert_eq!(total, best);
    }

    #[test]
    fn matcher_examples() {
        let c = sample();
        assert_eq!(
            match_structures(&c, &c).unwrap(),
            MatchResult {
                matched: true,
                normalized_rmse: Some(0.0)
            }
        );
        let protos = prototypes();
        let nacl = &protos[0].1;
        let cscl = &protos[1].1;
        assert!(!match_structures(nacl, cscl).unwrap().matched);
    }

    #[test]
    fn transformed_copies_match() {
        let c = sample();
        for (seed, kind) in TransformKind::ALL.into_iter().enumerate() {
            let t = transform(&c, kind, seed as u64).unwrap();
            let m = match_structures(&c, &t).unwrap();
            assert!(m.matched, "{kind}");
            assert!(m.normalized_rmse.unwrap() < 1e-6);
        }
    }

    #[test]
    fn identity_harness_is_perfect() {
        let corpus = random_corpus(5, 11);
        let config = VerifyConfig {
            trials: 2,
            kinds: vec![],
            seed: 1,
            options: CanonicalizeOptions::default(),
        };
        let report = verify_uniqueness(&corpus, &config);
        assert_eq!(report.total, 10);
        assert_eq!(report.rate, 1.0);
    }

    #[test]
    fn corpus_respects_generator_bounds() {
        for c in random_corpus(30, 5) {
            assert!((1..=20).contains(&c.len()));
            let p = c.params().unwrap();
            assert!(p.gram_determinant() > 0.1);
            assert!(c.species().iter().all(|&z| elements::in_vocabulary(z)));
            let v = c.volume() / c.len() as f64;
            assert!((15.0..25.0).contains(&v));
        }
    }

    #[test]
    fn supercell_counts() {
        let c = sample();
        let s = supercell(&c, [2, 2, 2]).unwrap();
        assert_eq!(s.len(), 24);
        assert!((s.volume() - 8.0 * c.volume()).abs() < 1e-9);
    }
}
