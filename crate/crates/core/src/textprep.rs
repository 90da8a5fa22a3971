//! Tokenization and the two text-preprocessing regimes.
//!
//! `baseline_normalize` reproduces the competition-style preprocessing the
//! original classifier was trained with (lowercase, `$URL$` / `$HASHTAG$`
//! substitution). `extended_clean` is the stricter regime: URLs, mentions,
//! hashtags and emoji are deleted outright. Both are idempotent.

use std::collections::HashSet;
use std::io;
use std::path::Path;
use std::sync::OnceLock;

use regex::Regex;

/// The closed set of substitution tokens. The tokenizer keeps these atomic so
/// that a downstream model can latch onto them (and an audit can catch that).
pub const SPECIAL_TOKENS: [&str; 6] = ["$URL$", "$HASHTAG$", "$PER$", "$ORG$", "$LOC$", "$MISC$"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Number,
    SpecialToken,
    Symbol,
}

/// One token with 0-based character offsets into its source text
/// (`char_end` exclusive, counted in chars, not bytes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub char_start: usize,
    pub char_end: usize,
    pub kind: TokenKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSequence {
    pub source: String,
    pub tokens: Vec<Token>,
}

impl TokenSequence {
    pub fn surfaces(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Rebuild a sequence from (surface, kind) pairs. The source text is the
    /// surfaces joined by single spaces, with offsets recomputed.
    pub fn from_parts(parts: Vec<(String, TokenKind)>) -> TokenSequence {
        let mut source = String::new();
        let mut tokens = Vec::with_capacity(parts.len());
        let mut pos = 0usize;
        for (i, (surface, kind)) in parts.into_iter().enumerate() {
            if i > 0 {
                source.push(' ');
                pos += 1;
            }
            let n = surface.chars().count();
            source.push_str(&surface);
            tokens.push(Token {
                surface,
                char_start: pos,
                char_end: pos + n,
                kind,
            });
            pos += n;
        }
        TokenSequence { source, tokens }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// True for the code points treated as emoji/emoticon material: the Emoticons,
/// Misc Symbols & Pictographs, Transport, Supplemental Symbols, Dingbats and
/// Misc Symbols blocks, plus variation selectors and the zero-width joiner.
pub fn is_emoji_char(c: char) -> bool {
    matches!(
        u32::from(c),
        0x1F300..=0x1F5FF
            | 0x1F600..=0x1F64F
            | 0x1F680..=0x1F6FF
            | 0x1F900..=0x1F9FF
            | 0x2600..=0x26FF
            | 0x2700..=0x27BF
            | 0xFE00..=0xFE0F
            | 0x200D
    )
}

/// If `chars[pos..]` starts with one of the special tokens, return it.
fn match_special(chars: &[char], pos: usize) -> Option<&'static str> {
    SPECIAL_TOKENS.iter().copied().find(|tok| {
        let tok_chars: Vec<char> = tok.chars().collect();
        chars.len() >= pos + tok_chars.len() && chars[pos..pos + tok_chars.len()] == tok_chars[..]
    })
}

/// URLs: scheme-full, scheme-less `www.` hosts, and `t.co` shortlinks.
/// A URL runs until whitespace or a closing bracket/quote.
fn url_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r#"(?i)(?:https?://|\bwww\.|\bt\.co/)[^\s<>"'\)\]\}]*"#).unwrap())
}

/// Twitter handle grammar: '@' plus 1..=15 word characters.
fn mention_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"@[A-Za-z0-9_]{1,15}\b").unwrap())
}

fn hashtag_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"#\w+").unwrap())
}

fn hashtag_mark_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"#(?P<tag>\w)").unwrap())
}

/// Lowercase everything except occurrences of the closed special-token set.
fn lowercase_preserving_special(text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '$' {
            if let Some(tok) = match_special(&chars, i) {
                out.push_str(tok);
                i += tok.chars().count();
                continue;
            }
        }
        out.extend(chars[i].to_lowercase());
        i += 1;
    }
    out
}

/// Split `text` into words, numbers, symbols and special tokens.
///
/// Word runs are maximal alphanumeric/underscore sequences; an all-numeric run
/// is a `Number`; any other character is a one-char `Symbol`. Special tokens
/// are matched before punctuation splitting so `$` is never stripped off
/// `$URL$`. Empty text yields an empty sequence.
pub fn tokenize(text: &str) -> TokenSequence {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '$' {
            if let Some(tok) = match_special(&chars, i) {
                let n = tok.chars().count();
                tokens.push(Token {
                    surface: tok.to_string(),
                    char_start: i,
                    char_end: i + n,
                    kind: TokenKind::SpecialToken,
                });
                i += n;
                continue;
            }
        }
        if is_word_char(c) {
            let start = i;
            while i < chars.len() && is_word_char(chars[i]) {
                i += 1;
            }
            let run = &chars[start..i];
            let kind = if run.iter().all(|ch| ch.is_numeric()) {
                TokenKind::Number
            } else {
                TokenKind::Word
            };
            tokens.push(Token {
                surface: run.iter().collect(),
                char_start: start,
                char_end: i,
                kind,
            });
            continue;
        }
        tokens.push(Token {
            surface: c.to_string(),
            char_start: i,
            char_end: i + 1,
            kind: TokenKind::Symbol,
        });
        i += 1;
    }
    TokenSequence {
        source: text.to_string(),
        tokens,
    }
}

/// Baseline preprocessing: lowercase, URLs replaced by `$URL$`, each `#`
/// marker replaced by `$HASHTAG$` with the tag word kept.
pub fn baseline_normalize(text: &str) -> String {
    let t = url_regex().replace_all(text, "$$URL$$");
    let t = hashtag_mark_regex().replace_all(&t, "$$HASHTAG$$ ${tag}");
    lowercase_preserving_special(&t)
}

/// Extended cleaning: delete URLs (including pre-substituted `$URL$` /
/// `$HASHTAG$` markers), `@`-mentions with their handles, hashtags with their
/// content, and emoji/emoticons; collapse whitespace. Case is preserved — the
/// classifier lowercases on its own. May return an empty string.
pub fn extended_clean(text: &str) -> String {
    extended_clean_with(text, EmoticonLexicon::builtin())
}

pub fn extended_clean_with(text: &str, emoticons: &EmoticonLexicon) -> String {
    // Removal always splices a space in, so fragments never concatenate into
    // new matches; the loop still re-runs to a fixed point so idempotence
    // holds by construction.
    let mut current = clean_pass(text, emoticons);
    for _ in 0..8 {
        let next = clean_pass(&current, emoticons);
        if next == current {
            break;
        }
        current = next;
    }
    current
}

fn clean_pass(text: &str, emoticons: &EmoticonLexicon) -> String {
    let t = url_regex().replace_all(text, " ");
    let t = t.replace("$URL$", " ").replace("$HASHTAG$", " ");
    let t = mention_regex().replace_all(&t, " ");
    let t = hashtag_regex().replace_all(&t, " ");
    let t: String = t
        .chars()
        .map(|c| if is_emoji_char(c) { ' ' } else { c })
        .collect();
    t.split_whitespace()
        .filter(|chunk| !emoticons.contains(chunk))
        .collect::<Vec<_>>()
        .join(" ")
}

/// ASCII emoticon lexicon, loaded from a plain-text file with one emoticon
/// per line and `#`-prefixed comments.
#[derive(Debug, Clone)]
pub struct EmoticonLexicon {
    entries: HashSet<String>,
}

impl EmoticonLexicon {
    pub fn builtin() -> &'static EmoticonLexicon {
        static LEX: OnceLock<EmoticonLexicon> = OnceLock::new();
        LEX.get_or_init(|| EmoticonLexicon::parse(include_str!("../data/emoticons.txt")))
    }

    pub fn from_path(path: &Path) -> io::Result<EmoticonLexicon> {
        Ok(EmoticonLexicon::parse(&std::fs::read_to_string(path)?))
    }

    pub fn parse(content: &str) -> EmoticonLexicon {
        let entries = content
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect();
        EmoticonLexicon { entries }
    }

    pub fn contains(&self, s: &str) -> bool {
        self.entries.contains(s)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(seq: &TokenSequence) -> Vec<TokenKind> {
        seq.tokens.iter().map(|t| t.kind).collect()
    }

    #[test]
    fn tokenize_words_numbers_symbols() {
        let seq = tokenize("the cdc reports 99031 deaths.");
        assert_eq!(
            seq.surfaces(),
            vec!["the", "cdc", "reports", "99031", "deaths", "."]
        );
        assert_eq!(
            kinds(&seq),
            vec![
                TokenKind::Word,
                TokenKind::Word,
                TokenKind::Word,
                TokenKind::Number,
                TokenKind::Word,
                TokenKind::Symbol
            ]
        );
    }

    #[test]
    fn tokenize_empty() {
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn tokenize_keeps_special_tokens_atomic() {
        let seq = tokenize("see $URL$ now");
        assert_eq!(seq.surfaces(), vec!["see", "$URL$", "now"]);
        assert_eq!(seq.tokens[1].kind, TokenKind::SpecialToken);
    }

    #[test]
    fn tokenize_bare_dollar_is_symbol() {
        let seq = tokenize("costs $ 5");
        assert_eq!(seq.surfaces(), vec!["costs", "$", "5"]);
        assert_eq!(seq.tokens[1].kind, TokenKind::Symbol);
    }

    #[test]
    fn tokenize_offsets_map_into_source() {
        let text = "see $URL$ déjà 12.";
        let seq = tokenize(text);
        let chars: Vec<char> = text.chars().collect();
        for tok in &seq.tokens {
            let slice: String = chars[tok.char_start..tok.char_end].iter().collect();
            assert_eq!(slice, tok.surface);
        }
    }

    #[test]
    fn baseline_replaces_urls_and_lowercases() {
        assert_eq!(
            baseline_normalize("Check https://t.co/Ab3 NOW"),
            "check $URL$ now"
        );
    }

    #[test]
    fn baseline_hashtag_keeps_tag_word() {
        assert_eq!(baseline_normalize("#Covid19 spreads"), "$HASHTAG$ covid19 spreads");
    }

    #[test]
    fn baseline_identity_without_artifacts() {
        assert_eq!(baseline_normalize("no links here"), "no links here");
    }

    #[test]
    fn baseline_idempotent_on_own_output() {
        let once = baseline_normalize("Check https://t.co/Ab3 #Tag NOW");
        assert_eq!(baseline_normalize(&once), once);
    }

    #[test]
    fn extended_clean_removes_all_artifact_kinds() {
        let text = "Bolivia approved the use of chlorine dioxide \u{1F637} #covid19 @who https://x.y/z";
        assert_eq!(extended_clean(text), "Bolivia approved the use of chlorine dioxide");
    }

    #[test]
    fn extended_clean_removes_presubstituted_markers() {
        assert_eq!(
            extended_clean("states reported 1121 deaths $URL$"),
            "states reported 1121 deaths"
        );
    }

    #[test]
    fn extended_clean_can_empty_a_text() {
        assert_eq!(extended_clean("#a @b http://c \u{1F642}"), "");
    }

    #[test]
    fn extended_clean_removes_ascii_emoticons() {
        assert_eq!(extended_clean("great news :) honestly xD"), "great news honestly");
    }

    #[test]
    fn extended_clean_handles_www_and_tco() {
        assert_eq!(extended_clean("go www.example.com/x now"), "go now");
        assert_eq!(extended_clean("go t.co/abc now"), "go now");
    }

    #[test]
    fn extended_clean_preserves_case() {
        assert_eq!(extended_clean("Sri Lankan drink #x"), "Sri Lankan drink");
    }

    #[test]
    fn special_token_roundtrip_through_tokenizer() {
        for tok in SPECIAL_TOKENS {
            let seq = tokenize(tok);
            assert_eq!(seq.surfaces(), vec![tok]);
            assert_eq!(seq.tokens[0].kind, TokenKind::SpecialToken);
        }
    }

    #[test]
    fn zwj_sequence_fully_removed() {
        // woman + ZWJ + laptop
        let text = "dev \u{1F469}\u{200D}\u{1F4BB} here";
        assert_eq!(extended_clean(text), "dev here");
    }

    #[test]
    fn builtin_lexicon_loads() {
        let lex = EmoticonLexicon::builtin();
        assert!(lex.contains(":)"));
        assert!(lex.contains("xD"));
        assert!(!lex.contains("word"));
        assert!(lex.len() > 30);
    }
}
