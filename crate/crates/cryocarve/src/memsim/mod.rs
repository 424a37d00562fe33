//! Synthetic RAM images and the cold-boot bit-decay model, plus
//! repeated-trial tooling (majority voting, error cross-correlation).

mod decay;
mod image;
mod trials;

pub use decay::{apply_decay, bit_error_rate, DecayParams};
pub use image::{
    synthesize_dump, FillerProfile, ManifestEntry, MemError, MemoryImage, TAG_BLOB, TAG_XML,
};
pub use trials::{error_cross_correlation, majority_vote, make_trials, CorrelationMode, TrialSet};
