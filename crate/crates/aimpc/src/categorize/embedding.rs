//! Word-embedding table in word2vec text format, with all vectors
//! normalized to unit length on load so that cosine similarity reduces to
//! a dot product.

use std::collections::HashMap;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("embedding file error at line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("cannot read embeddings: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimilarityError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("zero vector has no direction")]
    ZeroVector,
}

/// `V1 · V2 / (‖V1‖ ‖V2‖)`; the plain dot product once both are unit
/// length.
pub fn cosine_similarity(v1: &[f64], v2: &[f64]) -> Result<f64, SimilarityError> {
    if v1.len() != v2.len() {
        return Err(SimilarityError::DimensionMismatch { left: v1.len(), right: v2.len() });
    }
    let dot: f64 = v1.iter().zip(v2).map(|(a, b)| a * b).sum();
    let n1 = norm(v1);
    let n2 = norm(v2);
    if n1 == 0.0 || n2 == 0.0 {
        return Err(SimilarityError::ZeroVector);
    }
    Ok(dot / (n1 * n2))
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

#[derive(Debug, Clone)]
pub struct EmbeddingTable {
    dimension: usize,
    entries: HashMap<String, Vec<f64>>,
}

impl EmbeddingTable {
    /// Parses word2vec text format: a `<count> <dimension>` header line,
    /// then one `word v1 .. vd` row per word. Rows are renormalized to
    /// unit length.
    pub fn parse(text: &str) -> Result<Self, EmbeddingError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(EmbeddingError::Format {
            line: 1,
            message: "empty embedding file".to_string(),
        })?;
        let mut parts = header.split_whitespace();
        let _count: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(EmbeddingError::Format {
                line: 1,
                message: "header must be '<vocab_count> <dimension>'".to_string(),
            })?;
        let dimension: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .filter(|d| *d > 0)
            .ok_or(EmbeddingError::Format {
                line: 1,
                message: "header must name a positive dimension".to_string(),
            })?;

        let mut entries = HashMap::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut cols = line.split_whitespace();
            let word = cols.next().unwrap().to_string();
            let values: Result<Vec<f64>, _> = cols.map(str::parse::<f64>).collect();
            let mut values = values.map_err(|e| EmbeddingError::Format {
                line: lineno,
                message: format!("bad vector component: {e}"),
            })?;
            if values.len() != dimension {
                return Err(EmbeddingError::Format {
                    line: lineno,
                    message: format!(
                        "expected {dimension} components for {word:?}, found {}",
                        values.len()
                    ),
                });
            }
            let n = norm(&values);
            if n == 0.0 || !n.is_finite() {
                return Err(EmbeddingError::Format {
                    line: lineno,
                    message: format!("vector for {word:?} cannot be normalized"),
                });
            }
            for v in &mut values {
                *v /= n;
            }
            entries.insert(word, values);
        }
        Ok(EmbeddingTable { dimension, entries })
    }

    pub fn load(path: &Path) -> Result<Self, EmbeddingError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| EmbeddingError::Io(e.to_string()))?;
        Self::parse(&text)
    }

    pub fn from_entries(
        dimension: usize,
        entries: impl IntoIterator<Item = (String, Vec<f64>)>,
    ) -> Result<Self, EmbeddingError> {
        let mut table = EmbeddingTable { dimension, entries: HashMap::new() };
        for (word, mut values) in entries {
            if values.len() != dimension {
                return Err(EmbeddingError::Format {
                    line: 0,
                    message: format!("vector for {word:?} has wrong dimension"),
                });
            }
            let n = norm(&values);
            if n == 0.0 || !n.is_finite() {
                return Err(EmbeddingError::Format {
                    line: 0,
                    message: format!("vector for {word:?} cannot be normalized"),
                });
            }
            for v in &mut values {
                *v /= n;
            }
            table.entries.insert(word, values);
        }
        Ok(table)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, word: &str) -> Option<&[f64]> {
        self.entries.get(word).map(Vec::as_slice)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
