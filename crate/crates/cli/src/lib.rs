//! Batch front end: job documents in, one JSON report out.

pub mod job;
pub mod run;
pub mod table;

pub use job::{document_from_flags, parse_job, FlagJob, JobSpec, Mode, Options};
pub use run::{run_document, run_job, JobResult, Report, Status, SCHEMA_VERSION};
