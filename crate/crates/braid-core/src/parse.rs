//! Text grammar for braid words.
//!
//! Tokens are separated by whitespace. A token is a signed nonzero integer
//! (`3`, `-2`) or a band generator `B(i,j)`, optionally followed by a power
//! suffix `^k` with `k` a nonzero integer (`1^3`, `B(1,3)^-1`).

use crate::error::BraidError;
use crate::word::{band_generator, check_letter, BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Generator(Letter),
    Band(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub power: i32,
    /// Byte offset of the token in the input.
    pub offset: usize,
}

fn syntax(position: usize, message: impl Into<String>) -> BraidError {
    BraidError::Syntax {
        position,
        message: message.into(),
    }
}

fn parse_int<T: std::str::FromStr>(s: &str, offset: usize, what: &str) -> Result<T, BraidError> {
    s.parse()
        .map_err(|_| syntax(offset, format!("expected {what}, found {s:?}")))
}

fn parse_token(text: &str, offset: usize) -> Result<Token, BraidError> {
    let (base, power) = match text.find('^') {
        Some(caret) => {
            let exp = &text[caret + 1..];
            let power: i32 = parse_int(exp, offset + caret + 1, "an integer exponent")?;
            if power == 0 {
                return Err(syntax(offset + caret + 1, "exponent must be nonzero"));
            }
            (&text[..caret], power)
        }
        None => (text, 1),
    };
    let kind = if let Some(rest) = base.strip_prefix("B(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| syntax(offset + base.len(), "unterminated band token"))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| syntax(offset + 2, "band token needs two indices"))?;
        let i = parse_int(a, offset + 2, "a band index")?;
        let j = parse_int(b, offset + 3 + a.len(), "a band index")?;
        TokenKind::Band(i, j)
    } else {
        let g: Letter = parse_int(base, offset, "a generator")?;
        if g == 0 {
            return Err(syntax(offset, "generator 0 does not exist"));
        }
        TokenKind::Generator(g)
    };
    Ok(Token {
        kind,
        power,
        offset,
    })
}

/// Splits `text` into grammar tokens without checking index ranges.
pub fn tokenize(text: &str) -> Result<Vec<Token>, BraidError> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (idx, ch) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push(parse_token(&text[s..idx], s)?);
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    Ok(tokens)
}

/// Parses a braid word on `strands` strands, expanding band tokens.
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
    if strands == 0 {
        return Err(BraidError::NoStrands);
    }
    let mut letters = Vec::new();
    for token in tokenize(text)? {
        let base: Vec<Letter> = match token.kind {
            TokenKind::Generator(g) => {
                check_letter(g, strands)?;
                vec![g]
            }
            TokenKind::Band(i, j) => band_generator(i, j, strands)?.into_letters(),
        };
        let word = BraidWord::from_parts_unchecked(strands, base).pow(token.power);
        letters.extend_from_slice(word.letters());
    }
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_words() {
        assert_eq!(parse_word("1 1 1", 2).unwrap().letters(), &[1, 1, 1]);
        assert_eq!(parse_word("1 -2 1 -2", 3).unwrap().letters(), &[1, -2, 1, -2]);
        assert!(parse_word("", 4).unwrap().is_empty());
        assert_eq!(parse_word("  2\t-1\n", 3).unwrap().letters(), &[2, -1]);
    }

    #[test]
    fn band_tokens() {
        assert_eq!(parse_word("B(1,3)", 3).unwrap().letters(), &[1, 2, -1]);
        assert_eq!(parse_word("B(1,3)^-1", 3).unwrap().letters(), &[1, -2, -1]);
        assert_eq!(parse_word("B(2,3)^2 1^-2", 3).unwrap().letters(), &[2, 2, -1, -1]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_word("1 x 2", 3) {
            Err(BraidError::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("1 2^0", 3) {
            Err(BraidError::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_word("0", 3), Err(BraidError::Syntax { .. })));
        assert!(matches!(parse_word("B(1,3", 3), Err(BraidError::Syntax { .. })));
        assert!(matches!(
            parse_word("3", 3),
            Err(BraidError::LetterOutOfRange { letter: 3, strands: 3 })
        ));
        assert!(matches!(parse_word("B(1,4)", 3), Err(BraidError::BandOutOfRange { .. })));
    }
}
