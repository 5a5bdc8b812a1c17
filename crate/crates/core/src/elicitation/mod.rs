//! Ingestion and organisation of interval-valued questionnaire responses.

mod manifest;
mod panel;
mod summary;

pub use manifest::{FactorCategory, FactorInfo, FactorManifest};
pub(crate) use panel::fmt_similarity;
pub use panel::{
    parse_responses, GroupFs, ResponsePanel, ResponseRecord, SimilarityMatrix, EXPERIENCE_COLUMN,
    RESPONSE_HEADER,
};
pub use summary::{rounded_mode, summarize, PanelSummary, SummaryRow};
