use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Fewer than the minimum number of grid points.
    TooCoarse {
        points: usize,
        min: usize,
    },
    NonPositiveExtent(f64),
    InvalidDimension {
        kind: &'static str,
        n: usize,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    TooFewNodes(usize),
    InvalidValue {
        index: usize,
        value: f64,
    },
    ZeroMass,
    ZeroEnergy,
    NonPositiveScale(f64),
    SupportOverflow {
        boundary: f64,
        threshold: f64,
    },
    InvalidExponent(f64),
    InadmissibleExponent {
        p: f64,
        n: usize,
    },
    NonPositiveEnergy(f64),
    EnergyBelowInitial {
        energy: f64,
        initial: f64,
    },
    GridTooSmall {
        needed: f64,
        extent: f64,
    },
    TailUnresolved {
        estimate: f64,
    },
    RootFinder {
        residual: f64,
        iterations: usize,
    },
    RelativeEntropyUndefined,
    NonPositiveReference {
        index: usize,
    },
    TooFewSnapshots {
        needed: usize,
        found: usize,
    },
    NonuniformSpacing {
        index: usize,
    },
    NonIncreasingTime {
        index: usize,
    },
    NotNormalized {
        mass: f64,
        mean: f64,
    },
    MassDrift(f64),
    GridMismatch,
    InvalidConfig(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooCoarse { points, min } => {
                write!(f, "grid too coarse: {points} points (need at least {min})")
            }
            Error::NonPositiveExtent(e) => write!(f, "grid extent must be positive, got {e}"),
            Error::InvalidDimension { kind, n } => write!(f, "dimension {n} not valid for {kind}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected} values, found {found}")
            }
            Error::TooFewNodes(n) => write!(f, "at least 3 nodes required, got {n}"),
            Error::InvalidValue { index, value } => {
                write!(f, "density value {value} at node {index} is negative or not finite")
            }
            Error::ZeroMass => f.write_str("zero mass"),
            Error::ZeroEnergy => f.write_str("zero energy (point mass)"),
            Error::NonPositiveScale(a) => write!(f, "dilation factor must be positive, got {a}"),
            Error::SupportOverflow { boundary, threshold } => {
                write!(f, "support overflow: boundary value {boundary:e} exceeds floor {threshold:e}")
            }
            Error::InvalidExponent(p) => write!(f, "exponent must be positive, got {p}"),
            Error::InadmissibleExponent { p, n } => {
                write!(f, "inadmissible exponent p = {p} for n = {n} (need p > n/(n+2), p != 1 where required)")
            }
            Error::NonPositiveEnergy(e) => write!(f, "energy must be positive, got {e}"),
            Error::EnergyBelowInitial { energy, initial } => {
                write!(f, "energy {energy} below initial energy {initial}")
            }
            Error::GridTooSmall { needed, extent } => {
                write!(f, "grid extent {extent} too small, need at least {needed}")
            }
            Error::TailUnresolved { estimate } => {
                write!(f, "tail truncation error estimate {estimate:e} exceeds tolerance")
            }
            Error::RootFinder { residual, iterations } => {
                write!(f, "profile root finder did not converge: residual {residual:e} after {iterations} iterations")
            }
            Error::RelativeEntropyUndefined => {
                f.write_str("relative entropy undefined: support of f not contained in support of g")
            }
            Error::NonPositiveReference { index } => {
                write!(f, "reference density vanishes at node {index} where f > 0")
            }
            Error::TooFewSnapshots { needed, found } => {
                write!(f, "need at least {needed} snapshots, found {found}")
            }
            Error::NonuniformSpacing { index } => {
                write!(f, "snapshot times not uniformly spaced at index {index}")
            }
            Error::NonIncreasingTime { index } => {
                write!(f, "rescaled times not strictly increasing at index {index}")
            }
            Error::NotNormalized { mass, mean } => {
                write!(f, "density not normalized: mass {mass}, mean {mean}")
            }
            Error::MassDrift(d) => write!(f, "mass drift {d:e} exceeds limit"),
            Error::GridMismatch => f.write_str("densities live on different grids"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
