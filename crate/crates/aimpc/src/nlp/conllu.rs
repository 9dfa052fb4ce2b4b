//! CoNLL-U reader: standard 10-column TSV, blank-line sentence breaks,
//! `#` comment lines. Only ID, FORM, LEMMA, UPOS, HEAD and DEPREL are
//! consumed; multiword-token ranges and empty nodes are skipped.

use std::fmt::Write as _;

use super::{DepEdge, DepGraph, SentenceAnnotation, Token};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("conllu format error at line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

pub fn load_conllu(text: &str) -> Result<Vec<SentenceAnnotation>, FormatError> {
    let mut sentences = Vec::new();
    let mut builder = SentenceBuilder::default();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim_end();
        if trimmed.is_empty() {
            builder.finish(lineno, &mut sentences)?;
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(t) = comment.trim().strip_prefix("text =") {
                builder.text = Some(t.trim().to_string());
            }
            continue;
        }
        builder.row(lineno, trimmed)?;
    }
    builder.finish(text.lines().count() + 1, &mut sentences)?;
    Ok(sentences)
}

#[derive(Default)]
struct SentenceBuilder {
    start_line: Option<usize>,
    text: Option<String>,
    tokens: Vec<Token>,
    heads: Vec<(usize, usize, String)>, // (dependent, head, deprel)
}

impl SentenceBuilder {
    fn row(&mut self, line: usize, raw: &str) -> Result<(), FormatError> {
        let err = |message: String| FormatError { line, message };
        let cols: Vec<&str> = raw.split('\t').collect();
        if cols.len() != 10 {
            return Err(err(format!("expected 10 tab-separated columns, found {}", cols.len())));
        }
        let id = cols[0];
        if id.contains('-') || id.contains('.') {
            // multiword token range or empty node
            return Ok(());
        }
        let index: usize = id
            .parse()
            .map_err(|_| err(format!("non-integer token ID {id:?}")))?;
        if index != self.tokens.len() + 1 {
            return Err(err(format!(
                "token ID {index} out of sequence (expected {})",
                self.tokens.len() + 1
            )));
        }
        let form = cols[1];
        if form.is_empty() {
            return Err(err("empty FORM column".to_string()));
        }
        let lemma = match cols[2] {
            "_" | "" => form.to_lowercase(),
            l => l.to_string(),
        };
        let head: usize = match cols[6] {
            "_" => return Err(err(format!("token {index} has no HEAD"))),
            h => h
                .parse()
                .map_err(|_| err(format!("non-integer HEAD {h:?}")))?,
        };
        let deprel = cols[7].to_string();
        self.start_line.get_or_insert(line);
        self.tokens.push(Token {
            index,
            text: form.to_string(),
            lemma,
            pos: cols[3].to_string(),
        });
        self.heads.push((index, head, deprel));
        Ok(())
    }

    fn finish(
        &mut self,
        line: usize,
        sentences: &mut Vec<SentenceAnnotation>,
    ) -> Result<(), FormatError> {
        if self.tokens.is_empty() {
            self.text = None;
            return Ok(());
        }
        let err = |message: String| FormatError { line, message };
        let mut root = None;
        let mut edges = Vec::new();
        for (dep, head, rel) in self.heads.drain(..) {
            if head == 0 {
                if root.replace(dep).is_some() {
                    return Err(err("sentence has more than one root".to_string()));
                }
            } else {
                edges.push(DepEdge { head, dependent: dep, relation: rel });
            }
        }
        let root = root.ok_or_else(|| err("sentence has no root (HEAD = 0) token".to_string()))?;
        let tokens = std::mem::take(&mut self.tokens);
        let original_text = self
            .text
            .take()
            .unwrap_or_else(|| tokens.iter().map(|t| t.text.as_str()).collect::<Vec<_>>().join(" "));
        let graph = DepGraph::new(tokens, edges, root).map_err(|e| err(e.to_string()))?;
        sentences.push(SentenceAnnotation { original_text, graph });
        self.start_line = None;
        Ok(())
    }
}

/// Writes an annotation back out as CoNLL-U. Only the consumed columns
/// carry data; the others are `_`.
pub fn serialize_annotation(ann: &SentenceAnnotation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# text = {}", ann.original_text);
    for tok in ann.graph.tokens() {
        let (head, rel) = match ann.graph.head_of(tok.index) {
            Some((h, r)) => (h, r.to_string()),
            None => (0, "root".to_string()),
        };
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t_\t_\t{}\t{}\t_\t_",
            tok.index, tok.text, tok.lemma, tok.pos, head, rel
        );
    }
    out.push('\n');
    out
}
