//! Exact q-series and character computations for rational vertex algebra data.
//!
//! Everything arithmetic in here is exact: coefficients are arbitrary-precision
//! rationals, exponents are rationals on a common denominator grid, and every
//! series carries an explicit trusted precision. Floating point appears only in
//! the [`analysis`] module, which evaluates finished series numerically.
//!
//! Module map:
//! - [`qseries`]: truncated Laurent series in rational powers of q.
//! - [`modforms`]: Euler product, partitions, eta, Eisenstein series, delta, J.
//! - [`lattice`]: even lattices, theta series, discriminant cosets.
//! - [`virasoro`]: minimal model data, characters, Shapovalov ranks.
//! - [`catalog`]: theory objects (central charge, rank, module characters) and
//!   the structural checks tying them together.
//! - [`analysis`]: numeric evaluation, S-matrix extraction, growth classification.
//! - [`zhu`]: square-bracket mode coefficients and the quadratic trace identity.
//! - [`expr`]: the theory expression language used by the CLI.

pub mod analysis;
pub mod catalog;
pub mod expr;
pub mod lattice;
pub mod modforms;
pub mod qseries;
pub mod rational;
pub mod virasoro;
pub mod zhu;

pub use qseries::QSeries;
pub use rational::Q;

use thiserror::Error;

/// Errors shared across the library.
///
/// Variants are grouped by the kind of failure: precondition violations on
/// inputs, requests past a series' trusted precision, and numeric analysis
/// failures (tail bounds, conditioning).
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("coefficient of q^{0} requested but series is only trusted below q^{1}")]
    BeyondPrecision(String, String),

    #[error("cannot invert: no nonzero coefficient within trusted precision")]
    NotInvertible,

    #[error("fractional power requires leading coefficient 1, found {0}")]
    FractionalPowerBase(String),

    #[error("precision must be positive, got {0}")]
    BadPrecision(String),

    #[error("{0}")]
    BadArgument(String),

    #[error("gram matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),

    #[error("gram matrix has odd diagonal entry {1} at position {0}")]
    OddDiagonal(usize, i64),

    #[error("gram matrix is not positive definite: leading minor {0} is not positive")]
    NotPositiveDefinite(usize),

    #[error("discriminant group has order {0}, exceeding the bound {1}")]
    DiscriminantTooLarge(String, String),

    #[error("minimal model labels must satisfy gcd(p,q)=1 and 2 <= p < q, got ({0},{1})")]
    BadMinimalModelLabel(i64, i64),

    #[error("weight label (m,n)=({0},{1}) outside the grid for ({2},{3})")]
    WeightLabelOutOfRange(i64, i64, i64, i64),

    #[error("shapovalov rank is only computed up to level {0}, requested {1}")]
    LevelTooLarge(u32, u32),

    #[error("theory '{0}' carries invariants only, full characters are unavailable")]
    InvariantsOnly(String),

    #[error("theory '{0}' is not marked rational")]
    NotRational(String),

    #[error("theory '{0}' has no module of weight 0 with one-dimensional bottom")]
    NoVacuumModule(String),

    #[error("module index {0} out of range, theory has {1} modules")]
    ModuleIndexOutOfRange(usize, usize),

    #[error("no vacuum space character is attached to theory '{0}'")]
    NoVacuumSpaceCharacter(String),

    #[error("tail bound {0:e} exceeds tolerance {1:e}; raise precision or im(tau)")]
    TailBoundExceedsTolerance(f64, f64),

    #[error("tau must lie in the upper half plane, got im = {0}")]
    TauNotInUpperHalfPlane(f64),

    #[error("ill-conditioned sample set")]
    IllConditioned,

    #[error("need at least {0} sample points, got {1}")]
    InsufficientSamples(usize, usize),

    #[error("growth classification needs {0}, got {1}")]
    InsufficientData(String, usize),

    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },

    #[error("cannot read gram file '{0}': {1}")]
    GramFile(String, String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
