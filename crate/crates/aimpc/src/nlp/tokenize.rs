//! Whitespace tokenizer that peels terminal punctuation and possessive
//! `'s` into their own tokens.

const TERMINAL_PUNCT: [char; 4] = ['.', '?', '!', ','];

/// Joins tokens back into plain text, reattaching punctuation and
/// possessive `'s` to the preceding word.
pub fn render<S: AsRef<str>>(tokens: &[S]) -> String {
    let mut out = String::new();
    for tok in tokens {
        let tok = tok.as_ref();
        let attach = tok == "'s"
            || (tok.chars().count() == 1
                && TERMINAL_PUNCT.contains(&tok.chars().next().unwrap()));
        if !out.is_empty() && !attach {
            out.push(' ');
        }
        out.push_str(tok);
    }
    out
}

pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for chunk in text.split_whitespace() {
        split_chunk(chunk, &mut out);
    }
    out
}

fn split_chunk(chunk: &str, out: &mut Vec<String>) {
    if chunk.is_empty() {
        return;
    }
    if let Some(last) = chunk.chars().last() {
        if TERMINAL_PUNCT.contains(&last) && chunk.len() > last.len_utf8() {
            split_chunk(&chunk[..chunk.len() - last.len_utf8()], out);
            out.push(last.to_string());
            return;
        }
    }
    let lower = chunk.to_lowercase();
    if chunk.len() > 2 && (lower.ends_with("'s") || lower.ends_with("\u{2019}s")) {
        let cut = chunk
            .char_indices()
            .rev()
            .nth(1)
            .map(|(i, _)| i)
            .unwrap_or(0);
        split_chunk(&chunk[..cut], out);
        out.push("'s".to_string());
        return;
    }
    out.push(chunk.to_string());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separates_terminal_punctuation() {
        assert_eq!(
            tokenize("Pooja has 3 apples."),
            vec!["Pooja", "has", "3", "apples", "."]
        );
    }

    #[test]
    fn separates_possessive_s() {
        assert_eq!(tokenize("Pooja's Mom"), vec!["Pooja", "'s", "Mom"]);
    }

    #[test]
    fn empty_input_gives_no_tokens() {
        assert_eq!(tokenize(""), Vec::<String>::new());
        assert_eq!(tokenize("   \t\n"), Vec::<String>::new());
    }

    #[test]
    fn handles_possessive_followed_by_punctuation() {
        assert_eq!(tokenize("It is Pooja's."), vec!["It", "is", "Pooja", "'s", "."]);
    }

    #[test]
    fn question_mark_is_its_own_token() {
        assert_eq!(
            tokenize("How many apples does she have now?"),
            vec!["How", "many", "apples", "does", "she", "have", "now", "?"]
        );
    }

    #[test]
    fn idempotent_on_rejoined_output() {
        for text in [
            "Pooja has 3 apples.",
            "Pooja's Mom bought two apples, three oranges and a pear!",
            "How many apples does Pooja have now?",
        ] {
            let once = tokenize(text);
            let rejoined = once.join(" ");
            assert_eq!(tokenize(&rejoined), once, "not idempotent for {text:?}");
        }
    }

    #[test]
    fn decimal_numbers_survive() {
        assert_eq!(tokenize("1.5 apples"), vec!["1.5", "apples"]);
    }

    #[test]
    fn render_reattaches_punctuation_and_possessives() {
        let toks = tokenize("Pooja's Mom has 3 apples, right?");
        assert_eq!(render(&toks), "Pooja's Mom has 3 apples, right?");
    }
}
