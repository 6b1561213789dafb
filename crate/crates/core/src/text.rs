//! Text normalization, tokenization, and set-overlap similarity.
//!
//! Everything in this module is deliberately simple enough to run by hand:
//! normalization is lowercase + punctuation stripping, token sets drop a
//! fixed 50-word stop list, and similarity is plain Jaccard overlap. The
//! redundancy and retrieval layers both build on these primitives, so their
//! verdicts stay reproducible on paper.

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::{EngineError, EngineResult};

/// Fixed 50-word stop list applied when building content token sets.
/// Markers and first-person detection run on the raw token stream *before*
/// stop-word removal, so nothing here may shadow a lexicon phrase.
pub const STOP_WORDS: [&str; 50] = [
    "a", "about", "after", "again", "all", "am", "an", "and", "any", "are", "as", "at", "be",
    "because", "been", "but", "by", "can", "could", "did", "do", "does", "for", "from", "had",
    "has", "have", "he", "her", "his", "i", "if", "in", "into", "is", "it", "its", "me", "my",
    "of", "on", "or", "our", "she", "so", "that", "the", "to", "was", "you",
];

/// Lowercase the text, delete apostrophes (so contractions collapse into a
/// single token), and replace all other punctuation with spaces.
pub fn normalize(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        if ch == '\'' || ch == '\u{2019}' {
            continue;
        }
        if ch.is_alphanumeric() {
            out.extend(ch.to_lowercase());
        } else {
            out.push(' ');
        }
    }
    out.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Normalized tokens in order, stop words included.
pub fn raw_tokens(text: &str) -> Vec<String> {
    normalize(text)
        .split_whitespace()
        .map(str::to_owned)
        .collect()
}

/// Normalized token set with the stop list removed. This is the unit the
/// Jaccard comparisons operate on.
pub fn content_tokens(text: &str) -> BTreeSet<String> {
    raw_tokens(text)
        .into_iter()
        .filter(|t| !STOP_WORDS.contains(&t.as_str()))
        .collect()
}

/// Jaccard overlap of two token sets. Two empty sets yield 0.0 so a
/// contentless comparison never counts as a match.
pub fn jaccard(a: &BTreeSet<String>, b: &BTreeSet<String>) -> f64 {
    let union = a.union(b).count();
    if union == 0 {
        return 0.0;
    }
    let intersection = a.intersection(b).count();
    intersection as f64 / union as f64
}

/// Split raw text into sentences on terminal punctuation. Trimmed, nonempty.
pub fn sentences(text: &str) -> Vec<&str> {
    text.split(['.', '!', '?', ';'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

/// An ordered list of phrases, each matched as a consecutive token run.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    phrases: Vec<Vec<String>>,
}

impl Lexicon {
    pub fn from_phrases<I, S>(phrases: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self {
            phrases: phrases
                .into_iter()
                .map(|p| raw_tokens(p.as_ref()))
                .filter(|toks| !toks.is_empty())
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    /// True when any phrase appears as a consecutive subsequence of `tokens`.
    pub fn matches(&self, tokens: &[String]) -> bool {
        self.phrases.iter().any(|phrase| {
            tokens
                .windows(phrase.len())
                .any(|w| w.iter().zip(phrase).all(|(a, b)| a == b))
        })
    }

    /// True when the first token of `tokens` equals a single-word phrase.
    pub fn matches_leading(&self, tokens: &[String]) -> bool {
        let Some(first) = tokens.first() else {
            return false;
        };
        self.phrases
            .iter()
            .any(|phrase| phrase.len() == 1 && &phrase[0] == first)
    }
}

/// Marker lexicons used by candidate extraction and routing.
#[derive(Debug, Clone)]
pub struct Lexicons {
    /// Phrases signalling a personal preference or identity statement.
    pub preference: Lexicon,
    /// Phrases signalling a recurring event.
    pub recurrence: Lexicon,
    /// Leading tokens treated as an affirmation of the previous turn.
    pub affirmation: Lexicon,
}

impl Default for Lexicons {
    fn default() -> Self {
        Self {
            preference: Lexicon::from_phrases([
                "prefer", "favorite", "always", "never", "i like", "call me", "my name",
            ]),
            recurrence: Lexicon::from_phrases([
                "every",
                "weekly",
                "daily",
                "each",
                "mondays",
                "tuesdays",
                "wednesdays",
                "thursdays",
                "fridays",
                "saturdays",
                "sundays",
            ]),
            affirmation: Lexicon::from_phrases([
                "yes", "yeah", "yep", "right", "correct", "exactly", "indeed", "sure",
            ]),
        }
    }
}

impl Lexicons {
    /// Load lexicon overrides from a file of `list<TAB>phrase` lines.
    /// Lists not mentioned in the file keep their defaults; a list that is
    /// mentioned is replaced wholesale.
    pub fn load(path: &Path) -> EngineResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| EngineError::BadLexiconFile {
            line: 0,
            reason: format!("{}: {e}", path.display()),
        })?;
        let mut preference: Option<Vec<String>> = None;
        let mut recurrence: Option<Vec<String>> = None;
        let mut affirmation: Option<Vec<String>> = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (list, phrase) =
                line.split_once('\t')
                    .ok_or_else(|| EngineError::BadLexiconFile {
                        line: idx + 1,
                        reason: "expected `list<TAB>phrase`".into(),
                    })?;
            let slot = match list.trim() {
                "preference" => &mut preference,
                "recurrence" => &mut recurrence,
                "affirmation" => &mut affirmation,
                other => {
                    return Err(EngineError::BadLexiconFile {
                        line: idx + 1,
                        reason: format!("unknown list `{other}`"),
                    })
                }
            };
            slot.get_or_insert_with(Vec::new).push(phrase.trim().into());
        }
        let defaults = Lexicons::default();
        Ok(Self {
            preference: preference.map_or(defaults.preference, Lexicon::from_phrases),
            recurrence: recurrence.map_or(defaults.recurrence, Lexicon::from_phrases),
            affirmation: affirmation.map_or(defaults.affirmation, Lexicon::from_phrases),
        })
    }
}

const WEEKDAYS: [&str; 7] = [
    "monday",
    "tuesday",
    "wednesday",
    "thursday",
    "friday",
    "saturday",
    "sunday",
];

const MONTHS: [&str; 12] = [
    "january",
    "february",
    "march",
    "april",
    "may",
    "june",
    "july",
    "august",
    "september",
    "october",
    "november",
    "december",
];

const RELATIVE_DAYS: [&str; 5] = ["today", "tomorrow", "tonight", "yesterday", "midnight"];

/// True for tokens naming a calendar point: weekday or month names
/// (optionally possessive/plural), relative day words, clock times such as
/// `3pm` or `1500`, and day ordinals like `21st`.
pub fn is_date_token(token: &str) -> bool {
    let base = token.strip_suffix('s').unwrap_or(token);
    if WEEKDAYS.contains(&base) || MONTHS.contains(&base) || RELATIVE_DAYS.contains(&base) {
        return true;
    }
    if token == "noon" {
        return true;
    }
    // 3pm / 11am style clock tokens
    if let Some(rest) = token.strip_suffix("pm").or_else(|| token.strip_suffix("am")) {
        if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
            return true;
        }
    }
    // 21st / 2nd / 3rd / 4th day ordinals
    for suffix in ["st", "nd", "rd", "th"] {
        if let Some(rest) = token.strip_suffix(suffix) {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                if let Ok(day) = rest.parse::<u32>() {
                    if (1..=31).contains(&day) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// True when the raw (cased) sentence contains a capitalized word beyond the
/// first word — the cheap proper-noun signal used by candidate extraction.
pub fn has_mid_sentence_capital(raw_sentence: &str) -> bool {
    raw_sentence
        .split_whitespace()
        .skip(1)
        .any(|word| word.chars().next().is_some_and(char::is_uppercase))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stop_list_is_exactly_fifty_unique_words() {
        let set: BTreeSet<_> = STOP_WORDS.iter().collect();
        assert_eq!(STOP_WORDS.len(), 50);
        assert_eq!(set.len(), 50);
    }

    #[test]
    fn normalize_strips_punctuation_and_case() {
        assert_eq!(normalize("I prefer Green Tea, over coffee!"), "i prefer green tea over coffee");
        assert_eq!(normalize("tomorrow's 3pm meeting"), "tomorrows 3pm meeting");
    }

    #[test]
    fn content_tokens_drop_stop_words() {
        let toks = content_tokens("I like green tea");
        let expected: BTreeSet<String> =
            ["like", "green", "tea"].iter().map(|s| s.to_string()).collect();
        assert_eq!(toks, expected);
    }

    // Hand-computed overlap: {likes, tea} vs {likes, coffee} shares one of
    // three distinct tokens.
    #[test]
    fn jaccard_matches_hand_computation() {
        let a = content_tokens("likes tea");
        let b = content_tokens("likes coffee");
        assert_eq!(jaccard(&a, &b), 1.0 / 3.0);
    }

    #[test]
    fn jaccard_identical_sets_is_one() {
        let a = content_tokens("likes green tea");
        assert_eq!(jaccard(&a, &a.clone()), 1.0);
    }

    #[test]
    fn jaccard_empty_sets_is_zero() {
        let empty = BTreeSet::new();
        assert_eq!(jaccard(&empty, &empty), 0.0);
    }

    #[test]
    fn jaccard_is_symmetric() {
        let a = content_tokens("green tea with honey");
        let b = content_tokens("black tea with milk");
        assert_eq!(jaccard(&a, &b), jaccard(&b, &a));
    }

    #[test]
    fn sentence_split_handles_terminal_punctuation() {
        assert_eq!(
            sentences("I like tea. Do you? Great!"),
            vec!["I like tea", "Do you", "Great"]
        );
        assert!(sentences("   ").is_empty());
    }

    #[test]
    fn preference_lexicon_matches_declared_phrases() {
        let lex = Lexicons::default();
        assert!(lex.preference.matches(&raw_tokens("I prefer green tea over coffee")));
        assert!(lex.preference.matches(&raw_tokens("i like green tea")));
        assert!(lex.preference.matches(&raw_tokens("my name is spelled with a K")));
        assert!(!lex.preference.matches(&raw_tokens("remind me about the meeting")));
    }

    #[test]
    fn recurrence_lexicon_matches_weekday_plurals() {
        let lex = Lexicons::default();
        assert!(lex.recurrence.matches(&raw_tokens("every Monday I play chess")));
        assert!(lex.recurrence.matches(&raw_tokens("on mondays I play chess")));
        assert!(!lex.recurrence.matches(&raw_tokens("next Monday I play chess")));
    }

    #[test]
    fn affirmation_only_matches_leading_token() {
        let lex = Lexicons::default();
        assert!(lex.affirmation.matches_leading(&raw_tokens("Yes, exactly.")));
        assert!(!lex.affirmation.matches_leading(&raw_tokens("I said yes")));
    }

    #[test]
    fn date_tokens_cover_reminder_vocabulary() {
        for tok in ["tomorrow", "tomorrows", "3pm", "monday", "21st", "noon", "march"] {
            assert!(is_date_token(tok), "{tok} should be a date token");
        }
        for tok in ["tea", "meeting", "pm", "42", "0th", "32nd"] {
            assert!(!is_date_token(tok), "{tok} should not be a date token");
        }
    }

    #[test]
    fn mid_sentence_capital_detection() {
        assert!(has_mid_sentence_capital("my brother Felix visits"));
        assert!(!has_mid_sentence_capital("Nothing else here"));
    }

    #[test]
    fn lexicon_file_overrides_one_list() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("lex.tsv");
        std::fs::write(&path, "# comment\npreference\tadore\n").unwrap();
        let lex = Lexicons::load(&path).unwrap();
        assert!(lex.preference.matches(&raw_tokens("I adore puzzles")));
        assert!(!lex.preference.matches(&raw_tokens("I prefer puzzles")));
        // untouched list keeps defaults
        assert!(lex.recurrence.matches(&raw_tokens("every week")));
    }

    #[test]
    fn lexicon_file_rejects_unknown_list() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("lex.tsv");
        std::fs::write(&path, "colors\tred\n").unwrap();
        let err = Lexicons::load(&path).unwrap_err();
        assert_eq!(err.code(), "BadLexiconFile");
    }
}
