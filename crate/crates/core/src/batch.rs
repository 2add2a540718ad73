//! Classification of many documents at once.

use crate::classifier::{classify_embedding_space, Classification};
use crate::io::{InputDocument, InputError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BatchError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Classify(#[from] crate::classifier::ClassifyError),
}

pub fn classify_document(doc: &InputDocument) -> Result<Classification, BatchError> {
    let (s, x) = doc.build()?;
    Ok(classify_embedding_space(&s, &x)?)
}

/// Classifies every document, in parallel when the `parallel` feature is on.
/// Results keep the input order.
pub fn classify_all(docs: &[InputDocument]) -> Vec<Result<Classification, BatchError>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        docs.par_iter().map(classify_document).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        classify_sequential(docs)
    }
}

pub fn classify_sequential(docs: &[InputDocument]) -> Vec<Result<Classification, BatchError>> {
    docs.iter().map(classify_document).collect()
}
