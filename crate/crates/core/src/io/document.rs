use crate::geometry::{embed_subcomplex, GeometryError, Subcomplex};
use crate::surface::{Condition, SimplicialSurface, ValidationReport, VertexId};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubcomplexDocument {
    #[serde(default)]
    pub vertices: Vec<VertexId>,
    #[serde(default)]
    pub edges: Vec<[VertexId; 2]>,
    #[serde(default)]
    pub triangles: Vec<[VertexId; 3]>,
}

/// A surface and a subcomplex, as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Vertex count; vertices are `0..vertices`.
    pub vertices: usize,
    pub triangles: Vec<[VertexId; 3]>,
    pub subcomplex: SubcomplexDocument,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema_version {0} is not supported (expected {SCHEMA_VERSION})")]
    SchemaVersionUnsupported(u32),
    #[error("invalid surface: {}", describe_surface(.0))]
    Surface(ValidationReport, Vec<[VertexId; 3]>),
    #[error("invalid subcomplex ({field}): {source}")]
    Subcomplex {
        field: String,
        #[source]
        source: GeometryError,
    },
}

impl InputError {
    /// The validation conditions behind a surface error.
    pub fn conditions(&self) -> Vec<Condition> {
        match self {
            InputError::Surface(report, _) => report.failures.iter().map(|f| f.condition).collect(),
            _ => Vec::new(),
        }
    }
}

fn describe_surface(report: &ValidationReport) -> String {
    report.to_string()
}

impl InputDocument {
    pub fn new(name: &str, vertices: usize, triangles: Vec<[VertexId; 3]>, subcomplex: SubcomplexDocument) -> Self {
        InputDocument {
            schema_version: SCHEMA_VERSION,
            name: Some(name.to_string()),
            vertices,
            triangles,
            subcomplex,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Hex SHA-256 of the canonical serialization.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(serde_json::to_vec(self).expect("document serializes"));
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn surface(&self) -> Result<SimplicialSurface, InputError> {
        SimplicialSurface::build(self.vertices, &self.triangles)
            .map_err(|r| InputError::Surface(r, self.triangles.clone()))
    }

    pub fn build(&self) -> Result<(SimplicialSurface, Subcomplex), InputError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(InputError::SchemaVersionUnsupported(self.schema_version));
        }
        let s = self.surface()?;
        let x = embed_subcomplex(
            &s,
            &self.subcomplex.vertices,
            &self.subcomplex.edges,
            &self.subcomplex.triangles,
        )
        .map_err(|source| InputError::Subcomplex {
            field: self.locate(&source),
            source,
        })?;
        Ok((s, x))
    }

    /// Field path of the subcomplex entry an error refers to.
    fn locate(&self, err: &GeometryError) -> String {
        let simplex = match err {
            GeometryError::UnknownSimplex(v) | GeometryError::NotClosedUnderFaces(v) => v,
            _ => return "subcomplex".into(),
        };
        let mut key = simplex.clone();
        key.sort_unstable();
        let find = |list: Vec<Vec<VertexId>>, name: &str| {
            list.into_iter().position(|mut s| {
                s.sort_unstable();
                s == key
            })
            .map(|i| format!("subcomplex.{name}[{i}]"))
        };
        find(self.subcomplex.vertices.iter().map(|&v| vec![v]).collect(), "vertices")
            .or_else(|| find(self.subcomplex.edges.iter().map(|e| e.to_vec()).collect(), "edges"))
            .or_else(|| find(self.subcomplex.triangles.iter().map(|t| t.to_vec()).collect(), "triangles"))
            .unwrap_or_else(|| "subcomplex".into())
    }
}

pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(InputError::SchemaVersionUnsupported(doc.schema_version));
    }
    Ok(doc)
}

/// Parses and validates a document.
pub fn parse_input(text: &str) -> Result<(SimplicialSurface, Subcomplex), InputError> {
    parse_document(text)?.build()
}

/// Triangle indices named by a surface validation failure.
pub fn failing_triangles(report: &ValidationReport, triangles: &[[VertexId; 3]]) -> Vec<usize> {
    let mut out = Vec::new();
    for f in &report.failures {
        if f.simplex.len() != 3 {
            continue;
        }
        let mut key = f.simplex.clone();
        key.sort_unstable();
        for (i, t) in triangles.iter().enumerate() {
            let mut s = t.to_vec();
            s.sort_unstable();
            if s == key && !out.contains(&i) {
                out.push(i);
            }
        }
    }
    out
}
