//! Line-oriented tokenizer shared by the text formats.
//!
//! Tokens are separated by whitespace, except inside `(...)`, `{...}` and `[...]`,
//! which are kept whole so literals such as `(1, 2)` or `(x | y)` survive.
//! `#` starts a comment.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tok {
    pub text: String,
    /// 1-based column of the first character.
    pub col: usize,
}

#[derive(Clone, Debug)]
pub struct Line {
    /// 1-based line number.
    pub no: usize,
    /// Whether the line starts with whitespace.
    pub indented: bool,
    pub toks: Vec<Tok>,
}

impl Line {
    pub fn err(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.no, col, msg)
    }

    /// Column just past the last token, for "missing value" errors.
    pub fn end_col(&self) -> usize {
        self.toks.last().map_or(1, |t| t.col + t.text.chars().count())
    }
}

fn closer(c: char) -> Option<char> {
    match c {
        '(' => Some(')'),
        '{' => Some('}'),
        '[' => Some(']'),
        _ => None,
    }
}

pub fn tokenize_line(no: usize, raw: &str) -> Result<Line> {
    let chars: Vec<char> = raw.chars().collect();
    let indented = chars.first().is_some_and(|c| c.is_whitespace());
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let mut stack: Vec<char> = Vec::new();
        while i < chars.len() {
            let c = chars[i];
            if stack.is_empty() && (c.is_whitespace() || c == '#') {
                break;
            }
            if let Some(close) = closer(c) {
                stack.push(close);
            } else if matches!(c, ')' | '}' | ']') && stack.pop() != Some(c) {
                return Err(Error::parse(no, i + 1, format!("unbalanced '{c}'")));
            }
            i += 1;
        }
        if let Some(close) = stack.last() {
            return Err(Error::parse(no, start + 1, format!("missing '{close}'")));
        }
        toks.push(Tok { text: chars[start..i].iter().collect(), col: start + 1 });
    }
    Ok(Line { no, indented, toks })
}

/// All non-blank lines of `text`.
pub fn tokenize(text: &str) -> Result<Vec<Line>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = tokenize_line(i + 1, raw)?;
        if !line.toks.is_empty() {
            out.push(line);
        }
    }
    Ok(out)
}

/// A keyword line together with the indented lines that follow it.
pub struct Section {
    pub head: Line,
    pub body: Vec<Line>,
}

impl Section {
    pub fn key(&self) -> &str {
        &self.head.toks[0].text
    }

    pub fn args(&self) -> &[Tok] {
        &self.head.toks[1..]
    }
}

/// Groups lines into sections; every unindented line opens a new one.
pub fn sections(lines: Vec<Line>) -> Result<Vec<Section>> {
    let mut out: Vec<Section> = Vec::new();
    for line in lines {
        if line.indented {
            match out.last_mut() {
                Some(s) => s.body.push(line),
                None => return Err(line.err(line.toks[0].col, "indented line before any keyword")),
            }
        } else {
            out.push(Section { head: line, body: Vec::new() });
        }
    }
    Ok(out)
}
