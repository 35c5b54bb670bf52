//! Pipeline stages shared by the command-line tool and the examples.

pub mod config;
pub mod run;
pub mod triplets;

pub use config::{ConfigError, RunConfig, ToyParams};
pub use run::{bundled_corpus_dir, run_end_to_end, split_indices, EndToEndReport, MlmSection, PipelineError, ReportEnvelope};
pub use triplets::{augment, read_triplets, write_triplets, AugmentSummary, ProgramView, SkipReason, TripletRecord};
