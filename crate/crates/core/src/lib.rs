pub mod classify;
pub mod code;
pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod format;
pub mod reference;
pub mod store;
pub mod weights;
mod word;
pub mod z4;

pub use classify::{
    classify_cell, classify_cell_unfiltered, classify_length, classify_up_to, duality_check, optimality_report,
    reduce_generators, ClassificationCell, ClassificationTable, ClassifyOptions, LengthCounts, Method,
};
pub use code::{compute_type, dual, residue, span, to_standard_form, BinaryCode, CodeType, Normalized, StandardGenerator, Z4Code};
pub use enumeration::{closed_form_count, enumerate_candidates, special_swe, CandidateFilterReport, CandidateSpace};
pub use equivalence::{apply_monomial, are_equivalent, fingerprint, partition_classes, EquivalenceClass, Fingerprint, Monomial};
pub use error::{Error, Result};
pub use weights::{enumerator, optimal_codes, weight_profile, EnumeratorKind, Metric, WeightEnumerator, WeightProfile};
pub use z4::{inner_product, is_col_sorted, is_row_sorted, lex_compare, mat_mul, Z4Matrix, Z4Vector, Z4};
