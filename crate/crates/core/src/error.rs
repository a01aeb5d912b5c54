use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid crystal: {0}")]
    InvalidCrystal(String),
    #[error("atom index {index} out of range for {len} atoms")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("degenerate lattice (|det| = {0:e})")]
    DegenerateLattice(f64),
    #[error("lattice angles ({0}, {1}, {2}) cannot be realized in 3D")]
    UnrealizableAngles(f64, f64, f64),

    #[error("missing CIF field {0}")]
    MissingField(String),
    #[error(
        "site {label} has partial occupancy {occupancy}; disordered structures are not supported"
    )]
    PartialOccupancy { label: String, occupancy: f64 },
    #[error("malformed CIF loop: {0}")]
    MalformedLoop(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("Niggli reduction did not converge within {0} steps")]
    NonConvergence(usize),
    #[error("inconsistent supercell: {0}")]
    InconsistentSupercell(String),

    #[error("two irreducible atoms compare equal (Z = {0}); upstream deduplication failed")]
    DuplicateAtom(u8),
    #[error("detected symmetry operations do not form a group at symprec {0}")]
    GroupClosureFailure(f64),
    #[error("orbit of size {orbit} does not divide group order {order}")]
    OrbitInconsistency { orbit: usize, order: usize },
    #[error("species {0} and {1} collapse onto the same site")]
    SpeciesClash(u8, u8),

    #[error("element Z = {0} is outside the token vocabulary")]
    UnsupportedElement(u8),
    #[error("integer field {field} = {value} exceeds the vocabulary maximum of 300")]
    ValueOutOfRange { field: &'static str, value: usize },
    #[error("parse error at line {line}, column {column}: expected {expected}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("atom {symbol} declares multiplicity {declared} but reconstructs to {found} sites")]
    MultiplicityMismatch {
        symbol: String,
        declared: usize,
        found: usize,
    },
    #[error("unknown token {found:?} at byte {position}")]
    UnknownToken { position: usize, found: String },
    #[error("unknown token id {0}")]
    UnknownTokenId(u32),
    #[error("property value {0} is negative")]
    NegativeValue(f64),
    #[error("bin width {0} must be positive")]
    InvalidBinWidth(f64),
}
