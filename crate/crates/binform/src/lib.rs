//! Standard-library companion to `binform-core`: a content-addressed cache
//! for heavy covariants, a shared memoizing engine, the acceptance suite with
//! its structured report, and the pieces behind the `binform` command.

pub mod cache;
pub mod engine;
pub mod report;
pub mod serial;
pub mod suite;

pub use cache::{Cache, CacheKey, ENGINE_VERSION};
pub use engine::Engine;
pub use report::{CheckRecord, Status};
