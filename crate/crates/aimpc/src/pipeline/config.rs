//! Pipeline configuration: default resource paths from a TOML file
//! (pointed at by `AIMP_CONFIG` or `--config`), overridden per run by CLI
//! flags.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::nlp::TagClassConfig;

#[derive(Debug, Clone, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("invalid config {path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Resource(String),
}

#[derive(Debug, Clone, Default)]
pub struct PipelineConfig {
    pub embeddings_path: Option<PathBuf>,
    pub lexicon_path: Option<PathBuf>,
    pub tagger_lexicon_path: Option<PathBuf>,
    pub numwords_path: Option<PathBuf>,
    pub conllu_path: Option<PathBuf>,
    pub tagclasses: Option<TagClassConfig>,
    pub trace: bool,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    embeddings: Option<PathBuf>,
    lexicon: Option<PathBuf>,
    tagger_lexicon: Option<PathBuf>,
    numwords: Option<PathBuf>,
    conllu: Option<PathBuf>,
    trace: Option<bool>,
    tagclasses: Option<RawTagClasses>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTagClasses {
    subject_like: Vec<String>,
    direct_object_like: Vec<String>,
    indirect_object_like: Vec<String>,
    modifier_like: Vec<String>,
}

impl PipelineConfig {
    /// Loads a TOML config file. Relative paths inside it resolve
    /// against the file's own directory.
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        let raw: RawConfig = toml::from_str(&text).map_err(|e| ConfigError::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        let base = path.parent().unwrap_or(Path::new("."));
        let resolve = |p: Option<PathBuf>| p.map(|p| if p.is_relative() { base.join(p) } else { p });
        let tagclasses = match raw.tagclasses {
            None => None,
            Some(r) => {
                let set = |v: Vec<String>| v.into_iter().collect::<BTreeSet<String>>();
                Some(
                    TagClassConfig::new(
                        set(r.subject_like),
                        set(r.direct_object_like),
                        set(r.indirect_object_like),
                        set(r.modifier_like),
                    )
                    .map_err(|e| ConfigError::Parse {
                        path: path.to_path_buf(),
                        message: e.to_string(),
                    })?,
                )
            }
        };
        Ok(PipelineConfig {
            embeddings_path: resolve(raw.embeddings),
            lexicon_path: resolve(raw.lexicon),
            tagger_lexicon_path: resolve(raw.tagger_lexicon),
            numwords_path: resolve(raw.numwords),
            conllu_path: resolve(raw.conllu),
            tagclasses,
            trace: raw.trace.unwrap_or(false),
        })
    }

    /// The config named by `AIMP_CONFIG`, or the empty default.
    pub fn from_env() -> Result<Self, ConfigError> {
        match std::env::var_os("AIMP_CONFIG") {
            Some(path) => Self::from_file(Path::new(&path)),
            None => Ok(Self::default()),
        }
    }

    /// Fields set on `self` win over `base`.
    pub fn over(self, base: PipelineConfig) -> PipelineConfig {
        PipelineConfig {
            embeddings_path: self.embeddings_path.or(base.embeddings_path),
            lexicon_path: self.lexicon_path.or(base.lexicon_path),
            tagger_lexicon_path: self.tagger_lexicon_path.or(base.tagger_lexicon_path),
            numwords_path: self.numwords_path.or(base.numwords_path),
            conllu_path: self.conllu_path.or(base.conllu_path),
            tagclasses: self.tagclasses.or(base.tagclasses),
            trace: self.trace || base.trace,
        }
    }
}
