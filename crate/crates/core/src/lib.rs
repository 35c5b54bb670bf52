//! Semantics-aware data augmentation and pre-training utilities for code
//! representation learning over C, C++ and Java functions.

pub mod ast;
pub mod batch;
pub mod cli;
pub mod clone;
pub mod deviant;
pub mod difftest;
pub mod eval;
pub mod ingest;
pub mod labels;
pub mod objective;
pub mod pipeline;
pub mod rng;
pub mod samples;
pub mod synth;
pub mod tokenizer;
