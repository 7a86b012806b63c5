//! Path synthesis in `P*(A_n)`.
//!
//! Every construction here emits a plain vertex sequence; [`certify`] then
//! derives an [`AdjacencyCertificate`] for each edge and rejects the route if
//! any step is not an edge. A synthesized path is therefore only ever returned
//! together with machine-checked evidence for every edge.

mod any;
mod build;
mod general;
mod hubs;
mod small;
mod three;
mod witness;

pub use any::{path_any, path_any_with, prime_order_reduction, shortcut, PathOptions, Reduction};
pub use build::{bridge, free_points, interleave, stitch_step, StitchStep};
pub use general::path_prime_general;
pub use small::path_prime_small;
pub use three::path_3cycles;
pub use witness::{certify, LemmaTag, PathWitness, WitnessJsonError};

use thiserror::Error;

use crate::bounds::connectivity_condition;
use crate::graph::GraphError;
use crate::perm::{PermError, Permutation};
use build::PrimeElem;

/// Smallest degree for which the synthesis machines are guaranteed to succeed.
pub const MIN_DEGREE: usize = 52;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("the identity is not a vertex of the proper power graph")]
    Identity,
    #[error("{0} is odd; vertices must lie in A_n")]
    Odd(String),
    #[error("elements do not commute")]
    NotCommuting,
    #[error("element orders are not coprime")]
    OrdersNotCoprime,
    #[error("not enough free points: need {need}, have {have}")]
    NotEnoughFreePoints { need: usize, have: usize },
    #[error("cycles have unequal lengths")]
    UnequalCycles,
    #[error("cycles overlap")]
    OverlappingCycles,
    #[error("interleaving needs at least two cycles of length at least two")]
    TooFewCycles,
    #[error("head count {heads} is not coprime to cycle length {length}")]
    HeadsNotCoprime { heads: usize, length: usize },
    #[error("{0} is not a 3-cycle")]
    NotThreeCycle(String),
    #[error("{0} does not have prime order")]
    NotPrimeOrder(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degree {n} fails the connectivity hypothesis")]
    Hypothesis { n: usize },
    #[error("degree {n} is below the supported minimum {min}")]
    DegreeTooSmall { n: usize, min: usize },
    #[error("no construction found for {0}")]
    Unhandled(String),
    #[error("step {index} is not an edge: {from} -> {to}")]
    BrokenEdge {
        index: usize,
        from: String,
        to: String,
    },
    #[error("path of length {length} exceeds its bound {bound} ({case})")]
    BoundExceeded {
        length: usize,
        bound: usize,
        case: String,
    },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn check_degree(n: usize) -> Result<(), SynthError> {
    if n < MIN_DEGREE {
        return Err(SynthError::DegreeTooSmall { n, min: MIN_DEGREE });
    }
    if !connectivity_condition(n) {
        return Err(SynthError::Hypothesis { n });
    }
    Ok(())
}

pub(crate) fn prime_pair(
    alpha: &Permutation,
    beta: &Permutation,
    n: usize,
) -> Result<(PrimeElem, PrimeElem), SynthError> {
    let unpack = |x: &Permutation| {
        if x.degree() != n {
            return Err(SynthError::Perm(PermError::DegreeMismatch {
                left: x.degree(),
                right: n,
            }));
        }
        if x.is_identity() {
            return Err(SynthError::Identity);
        }
        if !x.is_even() {
            return Err(SynthError::Odd(x.to_string()));
        }
        PrimeElem::new(x).ok_or_else(|| SynthError::NotPrimeOrder(x.to_string()))
    };
    Ok((unpack(alpha)?, unpack(beta)?))
}
