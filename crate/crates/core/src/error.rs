use core::fmt;

use crate::steiner4::FailedDeltas;

/// Everything that can go wrong while validating inputs or solving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A coordinate was NaN or infinite.
    NonFiniteCoordinate,
    /// Tolerances must satisfy `0 < eps_solve <= eps_geom < 1`.
    InvalidTolerance,
    /// The three triangle vertices are collinear within tolerance.
    DegenerateTriangle,
    /// The four quadrilateral vertices wind clockwise.
    NotCcw,
    /// The four vertices do not bound a convex quadrilateral.
    NotConvex,
    /// Three consecutive quadrilateral vertices are collinear within tolerance.
    Degenerate,
    /// Two points that must be distinct coincide.
    CoincidentPoints,
    /// The fixed terminals of a locus query are collinear.
    CollinearTerminals,
    /// The fixed terminals of a locus query wind clockwise.
    WrongOrientation,
    /// No full Steiner tree of the requested topology exists; carries the
    /// existence quantities that failed to be positive.
    NoFullTree(FailedDeltas),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteCoordinate => write!(f, "coordinate is NaN or infinite"),
            Error::InvalidTolerance => {
                write!(f, "tolerances must satisfy 0 < eps_solve <= eps_geom < 1")
            }
            Error::DegenerateTriangle => write!(f, "triangle vertices are collinear"),
            Error::NotCcw => write!(f, "quadrilateral vertices wind clockwise"),
            Error::NotConvex => write!(f, "quadrilateral is not convex"),
            Error::Degenerate => {
                write!(f, "three consecutive quadrilateral vertices are collinear")
            }
            Error::CoincidentPoints => write!(f, "points coincide"),
            Error::CollinearTerminals => write!(f, "fixed terminals are collinear"),
            Error::WrongOrientation => write!(f, "fixed terminals wind clockwise"),
            Error::NoFullTree(failed) => write!(f, "no full Steiner tree: {failed}"),
        }
    }
}

impl core::error::Error for Error {}
