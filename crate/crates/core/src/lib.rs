//! Interval-valued expert responses turned into Interval Agreement Approach
//! fuzzy sets, aggregated across stakeholder groups as zSlice general type-2
//! sets, compared with Jaccard similarity and defuzzified into impact scores
//! that moderate driver risk scores.
//!
//! The crate is organised by pipeline stage:
//!
//! - [`fuzzy`]: exact membership-function algebra.
//! - [`elicitation`]: response CSV ingestion, per-group panels and summaries.
//! - [`moderation`]: impact merging, normalisation and risk-score moderation.
//! - [`cli`]: the subcommands behind the `iaa-moderation` binary.

pub mod cli;
pub mod elicitation;
pub mod error;
pub mod fuzzy;
pub mod moderation;
pub mod numeric;

pub use error::{Error, ErrorClass, Result};
