//! Exact ground truth over `Z` (and `Z / p^n Z`): Sylvester matrices,
//! subresultants from minors, the subresultant pseudo-remainder sequence and
//! the structural identities between subresultants and their cofactors.

pub mod matrix;
mod modular;
mod prs;
mod relations;
mod sylvester;

pub use matrix::{bareiss_det, berkowitz_det, Matrix};
pub use modular::{det_mod_pk, max_digits, principal_mod_pk, resultant_mod_pk, ModDet};
pub use prs::{prs_general, prs_transcript, subresultants_prs, PrsTranscript};
pub use relations::{check_relations, reconstruct_pair, reduce, RelationReport};
pub use sylvester::{
    resultant, subresultants_minors, subresultants_minors_generic, subresultants_minors_with, sylvester,
    sylvester_truncated, SubresultantSet,
};
