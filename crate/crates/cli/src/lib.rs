//! Library surface of the `waveplan` command-line tool.
//!
//! The binary in `main.rs` is a thin wrapper; everything it does lives here
//! so it can be tested directly.

pub mod document;
pub mod render;
pub mod run;

pub use document::{PlanDocument, PlanStatus, SegmentDocument, SCHEMA_VERSION};
pub use render::{emit_field_image, render_ascii, RenderError};
pub use run::{run, RunConfig, RunError, EXIT_BAD_ARGS, EXIT_IO, EXIT_NO_PATH, EXIT_PARSE};
