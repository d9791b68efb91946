//! Text forms of words.
//!
//! Group words: `X<i>.<d>`, `C<i>.<d>` (either with optional `^-1`), `pi<i>`,
//! `pibar<i>`, whitespace separated, rightmost letter applied first; `1` is
//! the empty word. Monoid words: `s<i>.<d>`, `sig<i>`, leftmost applied first.

use thiserror::Error;

use crate::group::{GroupLetter, GroupWord};
use crate::monoid::MonoidLetter;

/// `column` counts characters from 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

struct Token<'a> {
    column: usize,
    text: &'a str,
}

fn tokens(s: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, (b, c)) in s.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((k, b)),
            (true, Some((col, from))) => {
                out.push(Token { column: col + 1, text: &s[from..b] });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((col, from)) = start {
        out.push(Token { column: col + 1, text: &s[from..] });
    }
    out
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { column, message: message.into() })
}

/// Digits at the front of `s` as a number, with the rest.
fn number(s: &str, column: usize) -> Result<(usize, &str), ParseError> {
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    if end == 0 {
        return err(column, "expected a number");
    }
    match s[..end].parse() {
        Ok(v) => Ok((v, &s[end..])),
        Err(_) => err(column, "number too large"),
    }
}

/// `<i>.<d>` followed by what is left.
fn index_dim(s: &str, column: usize) -> Result<(usize, usize, &str), ParseError> {
    let (i, rest) = number(s, column)?;
    let col = column + s.len() - rest.len();
    let Some(rest) = rest.strip_prefix('.') else {
        return err(col, "expected '.' before the dimension");
    };
    let (d, rest) = number(rest, col + 1)?;
    Ok((i, d, rest))
}

fn group_letter(t: &Token<'_>) -> Result<GroupLetter, ParseError> {
    let s = t.text;
    let col = t.column;
    let end_col = |rest: &str| col + s.chars().count() - rest.chars().count();
    if let Some(rest) = s.strip_prefix("pibar") {
        let (i, rest) = number(rest, col + 5)?;
        return if rest.is_empty() {
            Ok(GroupLetter::PiBar { i })
        } else {
            err(end_col(rest), "unexpected text after letter")
        };
    }
    if let Some(rest) = s.strip_prefix("pi") {
        let (i, rest) = number(rest, col + 2)?;
        return if rest.is_empty() {
            Ok(GroupLetter::Pi { i })
        } else {
            err(end_col(rest), "unexpected text after letter")
        };
    }
    let (is_x, rest) = match s.chars().next() {
        Some('X') => (true, &s[1..]),
        Some('C') => (false, &s[1..]),
        _ => return err(col, format!("unknown letter '{s}'")),
    };
    let (i, d, rest) = index_dim(rest, col + 1)?;
    let inv = match rest {
        "" => false,
        "^-1" => true,
        _ => return err(end_col(rest), "expected '^-1' or end of letter"),
    };
    Ok(if is_x { GroupLetter::X { i, d, inv } } else { GroupLetter::C { i, d, inv } })
}

pub fn parse_group_word(s: &str) -> Result<GroupWord, ParseError> {
    let toks = tokens(s);
    if toks.len() == 1 && toks[0].text == "1" {
        return Ok(GroupWord::empty());
    }
    toks.iter().map(group_letter).collect::<Result<Vec<_>, _>>().map(GroupWord::from)
}

fn monoid_letter(t: &Token<'_>) -> Result<MonoidLetter, ParseError> {
    let s = t.text;
    let col = t.column;
    if let Some(rest) = s.strip_prefix("sig") {
        let (i, rest) = number(rest, col + 3)?;
        return if rest.is_empty() {
            Ok(MonoidLetter::Swap { i })
        } else {
            err(col + s.len() - rest.len(), "unexpected text after letter")
        };
    }
    if let Some(rest) = s.strip_prefix('s') {
        let (i, d, rest) = index_dim(rest, col + 1)?;
        return if rest.is_empty() {
            Ok(MonoidLetter::Cut { i, d })
        } else {
            err(col + s.len() - rest.len(), "unexpected text after letter")
        };
    }
    err(col, format!("unknown letter '{s}'"))
}

pub fn parse_monoid_word(s: &str) -> Result<Vec<MonoidLetter>, ParseError> {
    let toks = tokens(s);
    if toks.len() == 1 && toks[0].text == "1" {
        return Ok(vec![]);
    }
    toks.iter().map(monoid_letter).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{c, pi, pibar, x};
    use proptest::prelude::*;

    #[test]
    fn group_words() {
        let w = parse_group_word("  C0.2 X0.1^-1  pi3 pibar0 ").unwrap();
        assert_eq!(w, vec![c(0, 2), x(0, 1).inverse(), pi(3), pibar(0)].into());
        assert_eq!(parse_group_word("1").unwrap(), GroupWord::empty());
        assert_eq!(parse_group_word("").unwrap(), GroupWord::empty());
    }

    #[test]
    fn errors_have_columns() {
        assert_eq!(parse_group_word("X0.1 Y2").unwrap_err().column, 6);
        assert_eq!(parse_group_word("X0.1 X12").unwrap_err().column, 9);
        assert_eq!(parse_group_word("X0.1 X1.2^2").unwrap_err().column, 10);
        assert_eq!(parse_group_word("pi").unwrap_err().column, 3);
        assert_eq!(parse_group_word("pi1x").unwrap_err().column, 4);
        assert_eq!(parse_monoid_word("s0.1 sig").unwrap_err().column, 9);
        assert_eq!(parse_monoid_word("t0").unwrap_err().column, 1);
    }

    #[test]
    fn monoid_words() {
        let w = parse_monoid_word("s0.1 s1.2 sig1").unwrap();
        assert_eq!(
            w,
            vec![MonoidLetter::Cut { i: 0, d: 1 }, MonoidLetter::Cut { i: 1, d: 2 }, MonoidLetter::Swap { i: 1 }]
        );
    }

    fn letter() -> impl Strategy<Value = GroupLetter> {
        (0usize..4, 0usize..20, 1usize..5, any::<bool>()).prop_map(|(k, i, d, inv)| match k {
            0 => GroupLetter::X { i, d, inv },
            1 => GroupLetter::C { i, d, inv },
            2 => pi(i),
            _ => pibar(i),
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(letters in prop::collection::vec(letter(), 0..12)) {
            let w = GroupWord::from(letters);
            prop_assert_eq!(parse_group_word(&w.to_string()).unwrap(), w);
        }
    }
}
