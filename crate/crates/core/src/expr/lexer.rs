use std::fmt;

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Integer(String),
    Root,
    Ellipsis,
    Plus,
    Star,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer(digits) => write!(f, "integer `{digits}`"),
            Self::Root => f.write_str("`root`"),
            Self::Ellipsis => f.write_str("`...`"),
            Self::Plus => f.write_str("`+`"),
            Self::Star => f.write_str("`*`"),
            Self::Caret => f.write_str("`^`"),
            Self::Slash => f.write_str("`/`"),
            Self::Comma => f.write_str("`,`"),
            Self::LParen => f.write_str("`(`"),
            Self::RParen => f.write_str("`)`"),
            Self::Eof => f.write_str("end of input"),
        }
    }
}

/// Line and column are 1-based; `offset..end` is the byte span in the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub column: usize,
    pub offset: usize,
    pub end: usize,
}

/// Splits source text into tokens, ending with [`TokenKind::Eof`].
pub fn tokenize(source: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = source.char_indices().peekable();
    let (mut line, mut column) = (1usize, 1usize);

    while let Some(&(offset, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            if ch == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            continue;
        }
        let start = (line, column);
        let kind = match ch {
            '+' => TokenKind::Plus,
            '*' => TokenKind::Star,
            '^' => TokenKind::Caret,
            '/' => TokenKind::Slash,
            ',' => TokenKind::Comma,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '.' => {
                if source[offset..].starts_with("...") {
                    TokenKind::Ellipsis
                } else {
                    return Err(ParseError::syntax(
                        start.0,
                        start.1,
                        vec!["`...`".to_string()],
                        "`.`".to_string(),
                    ));
                }
            }
            c if c.is_ascii_digit() => {
                let digits: String = source[offset..]
                    .chars()
                    .take_while(char::is_ascii_digit)
                    .collect();
                TokenKind::Integer(digits)
            }
            c if c.is_ascii_alphabetic() => {
                let word: String = source[offset..]
                    .chars()
                    .take_while(char::is_ascii_alphanumeric)
                    .collect();
                if word == "root" {
                    TokenKind::Root
                } else {
                    return Err(ParseError::syntax(
                        start.0,
                        start.1,
                        vec!["`root`".to_string()],
                        format!("identifier `{word}`"),
                    ));
                }
            }
            other => {
                return Err(ParseError::syntax(
                    start.0,
                    start.1,
                    vec!["a token".to_string()],
                    format!("character `{other}`"),
                ))
            }
        };
        let len = match &kind {
            TokenKind::Integer(digits) => digits.len(),
            TokenKind::Root => 4,
            TokenKind::Ellipsis => 3,
            _ => ch.len_utf8(),
        };
        for _ in 0..len {
            chars.next();
        }
        column += len;
        tokens.push(Token {
            kind,
            line: start.0,
            column: start.1,
            offset,
            end: offset + len,
        });
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        line,
        column,
        offset: source.len(),
        end: source.len(),
    });
    Ok(tokens)
}
