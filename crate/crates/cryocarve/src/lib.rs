//! Desk-scale simulator and forensics toolkit for cold-boot recovery of
//! neural-network models.
//!
//! The pipeline mirrors an attack on an edge-inference host: a trained
//! network is serialized into a two-file intermediate representation
//! (architecture XML plus a raw little-endian float32 weight blob), the
//! files are embedded in a synthetic RAM image, the image is degraded with
//! a per-bit decay model, and the model is carved back out, repaired,
//! sanitized and optionally corrected by knowledge distillation. Metrics
//! quantify how much of the original model survived.
//!
//! Modules follow the pipeline stages:
//!
//! - [`ir`]: the XML + weight-blob model format and its (de)serialization.
//! - [`memsim`]: RAM image synthesis, bit decay, repeated-trial tooling.
//! - [`carve`]: locating, repairing and extracting the model from a dump.
//! - [`nn`]: a minimal float32 network engine (forward/backward, Adam,
//!   losses, FGSM, datasets).
//! - [`distill`]: teacher-student correction of high-error recoveries.
//! - [`metrics`]: RAD, adversarial-transfer fidelity, error rates.
//! - [`cli`]: the experiment-runner commands used by the `cryocarve` binary.
//!
//! See the crate examples for runnable end-to-end demonstrations of each
//! capability.

pub mod carve;
pub mod cli;
pub mod distill;
pub mod ir;
pub mod memsim;
pub mod metrics;
pub mod nn;
