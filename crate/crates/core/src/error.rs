use thiserror::Error;

use crate::arith::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    UndefinedValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integer too large to factor by trial division: {0}")]
    TooLarge(String),
    #[error("residue class {residue} mod {modulus} contains no squarefree integer of the requested sign")]
    NoRepresentative { residue: u64, modulus: u64 },

    #[error("division by zero")]
    DivisionByZero,
    #[error("input is identically zero")]
    ZeroInput,
    #[error("pole at u = {at}: denominator {denominator} vanishes")]
    Pole { at: Rational, denominator: String },
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a square, so the pair does not extend")]
    NotAPair(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("not constructible: b^2 = {0} is not a square")]
    NotConstructible(String),
    #[error("conic parametrization has a pole at u = {0}")]
    ParametrizationPole(String),
    #[error("no family with index {0} (expected 1..=8)")]
    UnknownFamily(usize),
    #[error("P(u0)/q = {0} is not a nonzero rational square")]
    NotOnTwist(Rational),

    #[error("point is not on the curve")]
    OffCurve,
    #[error("point has no affine image on the quartic")]
    NoAffineImage,
    #[error("singular curve (discriminant vanishes)")]
    Singular,
    #[error("curves are not isomorphic over the base field: {0}")]
    NotIsomorphic(String),

    #[error("{0} is not squarefree")]
    NotSquarefree(String),
    #[error("quartic has no rational root, so the twist has no obvious rational point")]
    NotGood,
    #[error("t = {0} lies in a class divisible by a square")]
    NonSquarefreeClass(i64),
    #[error("no root-number table for curve {curve} at p = {prime}; run tools/gen_root_number_tables.py")]
    MissingTable { curve: usize, prime: u64 },
    #[error(
        "table for curve {curve} at p = {prime} has no entry for residue {residue} mod {modulus}"
    )]
    UnpopulatedEntry {
        curve: usize,
        prime: u64,
        residue: u64,
        modulus: u64,
    },
    #[error("table file: {0}")]
    TableFormat(String),
    #[error("io: {0}")]
    Io(String),

    #[error("point maps to 2-torsion; doubling gives no new point")]
    TwoTorsion,
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
