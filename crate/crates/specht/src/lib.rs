//! Modular representation theory of symmetric groups over GF(2).
//!
//! The crate decides when a Specht module `S^λ` for a two-regular-ish family
//! of partitions splits off an irreducible direct summand, entirely in
//! characteristic 2.  It has two independent halves:
//!
//! * a *symbolic* half ([`partition`], [`tableau`], [`hom`], [`summand`])
//!   implementing the tableau-homomorphism calculus: row-sum maps between
//!   permutation modules, Garnir straightening, kernel-intersection solving
//!   of `Hom(S^μ, M^λ)` restricted to `Hom(S^μ, S^λ)`, and the explicit
//!   homomorphism pairs that certify a summand;
//! * a *numeric* half ([`oracle`]) that re-derives the same answers from raw
//!   GF(2) matrices acting on tabloid spaces, with no shared code paths.
//!
//! Everything is deterministic: sets are ordered, enumeration orders are
//! canonical, and nothing depends on hash iteration order.

pub mod gf2;
pub mod hom;
pub mod oracle;
pub mod partition;
pub mod summand;
pub mod tableau;

pub use gf2::GF2Matrix;
pub use hom::{
    compose, garnir_relation, hom_dim_dual, hom_space, hom_to_perm_basis, lands_in_specht,
    psi_compose, row_relation, semistandardise, GF2Combo, HomBasis, HomDim, HomSpace,
    Semistandardiser,
};
pub use partition::{Composition, Partition};
pub use summand::{
    build_ab, build_c, build_gamma, build_sigma, build_sigma_uv, build_sigma_uv2, candidate_mus,
    check_summand, composite_reference, corollary_case, count_tableaux, existence_search,
    summands, survey, survey_grid, CorollaryCase, ExistenceRecord, SummandFamily, SummandParams,
    SummandVerdict, SurveyRecord, Witness, WITNESS_MAX_SUPPORT,
};
pub use tableau::Tableau;

use thiserror::Error;

/// Errors surfaced to callers (CLI, library users) for bad *input*.
///
/// Violations of internal mathematical contracts are asserted instead:
/// they indicate bugs, not user error.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse partition from {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },
    #[error("cannot parse tableau from {input:?}: {reason}")]
    ParseTableau { input: String, reason: String },
    #[error("guard: {0}")]
    Guard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
