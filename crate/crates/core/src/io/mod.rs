//! Input documents, the example catalog and report rendering.

pub mod catalog;
mod document;
mod report;

pub use catalog::{expected_verdict, generate_example, UnknownExample, CATALOG};
pub use document::{
    failing_triangles, parse_document, parse_input, InputDocument, InputError, SubcomplexDocument, SCHEMA_VERSION,
};
pub use report::{report_for, Pi1Report, Report};
