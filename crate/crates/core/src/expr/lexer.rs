//! Tokenizer for the expression grammar. Tokens carry their byte offset so
//! parse errors can point at the offending input.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

pub fn tokenize(source: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => pos += 1,
            b'+' => {
                tokens.push((Tok::Plus, pos));
                pos += 1;
            }
            b'-' => {
                tokens.push((Tok::Minus, pos));
                pos += 1;
            }
            b'*' => {
                tokens.push((Tok::Star, pos));
                pos += 1;
            }
            b'/' => {
                tokens.push((Tok::Slash, pos));
                pos += 1;
            }
            b'^' => {
                tokens.push((Tok::Caret, pos));
                pos += 1;
            }
            b'(' => {
                tokens.push((Tok::LParen, pos));
                pos += 1;
            }
            b')' => {
                tokens.push((Tok::RParen, pos));
                pos += 1;
            }
            b'0'..=b'9' | b'.' => {
                let end = scan_number(bytes, pos)?;
                let text = &source[pos..end];
                let value: f64 = text.parse().map_err(|_| Error::Syntax {
                    offset: pos,
                    message: format!("invalid number literal `{text}`"),
                })?;
                tokens.push((Tok::Num(value), pos));
                pos = end;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let mut end = pos + 1;
                while end < bytes.len()
                    && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_')
                {
                    end += 1;
                }
                tokens.push((Tok::Ident(source[pos..end].to_string()), pos));
                pos = end;
            }
            _ => {
                return Err(Error::Syntax {
                    offset: pos,
                    message: format!("unexpected character `{}`", &source[pos..pos + 1]),
                })
            }
        }
    }
    Ok(tokens)
}

/// Scan `digits [. digits] [eE [+-] digits]` starting at `start`.
fn scan_number(bytes: &[u8], start: usize) -> Result<usize> {
    let mut pos = start;
    let mut saw_digit = false;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        saw_digit = true;
        pos += 1;
    }
    if pos < bytes.len() && bytes[pos] == b'.' {
        pos += 1;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            saw_digit = true;
            pos += 1;
        }
    }
    if !saw_digit {
        return Err(Error::Syntax {
            offset: start,
            message: "number has no digits".into(),
        });
    }
    if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
        let mut exp = pos + 1;
        if exp < bytes.len() && (bytes[exp] == b'+' || bytes[exp] == b'-') {
            exp += 1;
        }
        if exp < bytes.len() && bytes[exp].is_ascii_digit() {
            pos = exp;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
        }
        // otherwise the `e` belongs to a following identifier, not the number
    }
    Ok(pos)
}
