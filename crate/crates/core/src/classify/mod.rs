//! The classification pipeline: index-by-index case analysis, lattice
//! exclusions, uniqueness data for the surviving types and the explicit
//! constructions, composed into one verdict.

mod construction;
mod enumerate;
mod exclusion;
mod report;
mod tables;
mod theorem;
mod uniqueness;

pub use enumerate::{
    all_candidates, all_components, canonical, classify_index2, classify_index3, component_profiles,
    exclude_index4, exclude_index6, expected_index3_candidates, profile_catalog, rank_multisets,
    IndexSixCase, IndexThreeInventory, EXTREMAL_RANK,
};
pub use report::{rat_value, CaseReport, Step, StepKind, Verdict};
pub use exclusion::{
    congruence_route, exclude_by_lattice, exclude_by_lattice_with, primitive_congruence, BranchVerdict, TARGET_DISC,
};
pub use uniqueness::{
    canonical_index, parse_combination, picard_discriminant, uniqueness_data, uniqueness_data_with, ExtremalType,
    SURVIVORS,
};
pub use construction::{verify_all_constructions, verify_construction};
pub use tables::{closed_form_profiles, indices_report, labelings_report, lefschetz_report};
pub use theorem::{main_theorem, main_theorem_with, TheoremFailure, TheoremOutcome, LATTICE_EXCLUDED};
