use std::fmt;

use gts_core::rat::parse_rat;
use gts_core::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Num(Rat),
    NegInf,
    PosInf,
    LParen,
    RParen,
    Comma,
    Eq,
    Colon,
    DotDot,
    /// Newline or `;`.
    Sep,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(r) => write!(f, "`{}`", gts_core::rat::fmt_rat(r)),
            Tok::NegInf => f.write_str("`-inf`"),
            Tok::PosInf => f.write_str("`+inf`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::DotDot => f.write_str("`..`"),
            Tok::Sep => f.write_str("end of statement"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

/// A diagnostic pointing at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '/'
}

pub fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        let err = |i: usize, msg: String| ParseError {
            line: li + 1,
            col: i + 1,
            msg,
        };
        while i < chars.len() {
            let c = chars[i];
            let start = i;
            let tok = if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
                continue;
            } else if is_ident_start(c) {
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                Tok::Ident(chars[start..i].iter().collect())
            } else if (c == '-' || c == '+') && chars[i + 1..].starts_with(&['i', 'n', 'f']) {
                i += 4;
                if c == '-' {
                    Tok::NegInf
                } else {
                    Tok::PosInf
                }
            } else if c.is_ascii_digit()
                || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
            {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if chars.get(i) == Some(&'/') {
                    i += 1;
                    if !chars.get(i).is_some_and(|d| d.is_ascii_digit()) {
                        return Err(err(i, "expected a denominator after `/`".into()));
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if chars.get(i) == Some(&'.') && chars.get(i + 1) != Some(&'.') {
                    return Err(err(
                        i,
                        "decimal literals are not allowed, write num/den".into(),
                    ));
                }
                let s: String = chars[start..i].iter().collect();
                match parse_rat(&s) {
                    Some(r) => Tok::Num(r),
                    None => return Err(err(start, format!("bad rational `{s}`"))),
                }
            } else {
                i += 1;
                match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '=' => Tok::Eq,
                    ':' => Tok::Colon,
                    ';' => Tok::Sep,
                    '.' if chars.get(i) == Some(&'.') => {
                        i += 1;
                        Tok::DotDot
                    }
                    _ => return Err(err(start, format!("unexpected character `{c}`"))),
                }
            };
            out.push(Spanned {
                tok,
                line: li + 1,
                col: start + 1,
            });
        }
        out.push(Spanned {
            tok: Tok::Sep,
            line: li + 1,
            col: chars.len() + 1,
        });
    }
    let last = out.last().map(|s| (s.line, s.col)).unwrap_or((1, 1));
    out.push(Spanned {
        tok: Tok::Eof,
        line: last.0,
        col: last.1,
    });
    Ok(out)
}
