//! Number-word table: zero through twenty, the tens, `a`/`an` as one and
//! `dozen` as twelve. Overridable from a `word<TAB>value` file.

use std::collections::HashMap;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("number-word table error at line {line}: {message}")]
pub struct NumberWordError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct NumberWords {
    map: HashMap<String, f64>,
}

impl Default for NumberWords {
    fn default() -> Self {
        Self::builtin()
    }
}

const UNITS: [(&str, f64); 10] = [
    ("one", 1.0),
    ("two", 2.0),
    ("three", 3.0),
    ("four", 4.0),
    ("five", 5.0),
    ("six", 6.0),
    ("seven", 7.0),
    ("eight", 8.0),
    ("nine", 9.0),
    ("zero", 0.0),
];

const TEENS: [(&str, f64); 10] = [
    ("ten", 10.0),
    ("eleven", 11.0),
    ("twelve", 12.0),
    ("thirteen", 13.0),
    ("fourteen", 14.0),
    ("fifteen", 15.0),
    ("sixteen", 16.0),
    ("seventeen", 17.0),
    ("eighteen", 18.0),
    ("nineteen", 19.0),
];

const TENS: [(&str, f64); 8] = [
    ("twenty", 20.0),
    ("thirty", 30.0),
    ("forty", 40.0),
    ("fifty", 50.0),
    ("sixty", 60.0),
    ("seventy", 70.0),
    ("eighty", 80.0),
    ("ninety", 90.0),
];

impl NumberWords {
    pub fn builtin() -> Self {
        let mut map = HashMap::new();
        for (w, v) in UNITS.iter().chain(TEENS.iter()).chain(TENS.iter()) {
            map.insert(w.to_string(), *v);
        }
        map.insert("a".to_string(), 1.0);
        map.insert("an".to_string(), 1.0);
        map.insert("dozen".to_string(), 12.0);
        NumberWords { map }
    }

    /// Builtin table with entries added or replaced from a file.
    pub fn with_overrides(path: &Path) -> Result<Self, NumberWordError> {
        let text = std::fs::read_to_string(path).map_err(|e| NumberWordError {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let mut table = Self::builtin();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            let (word, value) = match (cols.next(), cols.next(), cols.next()) {
                (Some(w), Some(v), None) => (w, v),
                _ => {
                    return Err(NumberWordError {
                        line: idx + 1,
                        message: format!("expected word<TAB>value, found {line:?}"),
                    })
                }
            };
            let value: f64 = value.parse().map_err(|_| NumberWordError {
                line: idx + 1,
                message: format!("invalid value {value:?}"),
            })?;
            if !value.is_finite() || value < 0.0 {
                return Err(NumberWordError {
                    line: idx + 1,
                    message: format!("value {value} must be finite and non-negative"),
                });
            }
            table.map.insert(word.to_lowercase(), value);
        }
        Ok(table)
    }

    pub fn lookup(&self, word: &str) -> Option<f64> {
        self.map.get(&word.to_lowercase()).copied()
    }

    pub fn is_tens(&self, word: &str) -> bool {
        TENS.iter().any(|(w, _)| *w == word.to_lowercase())
    }

    pub fn is_unit(&self, word: &str) -> bool {
        let lower = word.to_lowercase();
        UNITS.iter().any(|(w, _)| *w == lower && lower != "zero")
    }

    pub fn is_article(&self, word: &str) -> bool {
        let lower = word.to_lowercase();
        lower == "a" || lower == "an"
    }

    pub fn contains(&self, word: &str) -> bool {
        self.map.contains_key(&word.to_lowercase())
    }
}
