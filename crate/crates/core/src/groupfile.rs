//! The group definition format:
//!
//! ```text
//! # comment
//! name PSL(2,7)
//! degree 8
//! gen (3,5,7)(4,8,6)
//! gen (1,2,6)(3,4,8)
//! ```
//!
//! `name` is optional; `degree` must precede the first `gen`. A file with no
//! `gen` lines describes the trivial group.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, ParseErrorKind};
use crate::group::PermGroup;
use crate::perm::{parse_cycles, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupFileErrorKind {
    MissingDegree,
    DuplicateDegree,
    InvalidDegree,
    UnknownDirective(String),
    Cycle(ParseErrorKind),
}

/// Syntax error in a group file; `line` and `column` are 1-based, the column
/// counting characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFileError {
    pub line: usize,
    pub column: usize,
    pub kind: GroupFileErrorKind,
}

impl fmt::Display for GroupFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            GroupFileErrorKind::MissingDegree => write!(f, "`degree` must come before generators"),
            GroupFileErrorKind::DuplicateDegree => write!(f, "`degree` given twice"),
            GroupFileErrorKind::InvalidDegree => write!(f, "degree must be a positive integer"),
            GroupFileErrorKind::UnknownDirective(d) => write!(f, "unknown directive `{}`", d),
            GroupFileErrorKind::Cycle(k) => {
                let e = crate::error::ParseError { pos: 0, kind: *k };
                let msg = e.to_string();
                // drop the offset suffix; the column already locates it
                write!(f, "{}", msg.split(" at offset").next().unwrap_or(&msg))
            }
        }
    }
}

impl core::error::Error for GroupFileError {}

/// A parsed group file.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn group(&self) -> Result<PermGroup, Error> {
        PermGroup::new(self.degree, self.generators.clone())
    }
}

fn column_of(line: &str, byte: usize) -> usize {
    line[..byte.min(line.len())].chars().count() + 1
}

pub fn parse_group_file(text: &str) -> Result<GroupSpec, GroupFileError> {
    let mut name = None;
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let start = content.len() - trimmed.len();
        let (word, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_start = start + word.len();
        let err = |byte: usize, kind| GroupFileError {
            line: line_no,
            column: column_of(raw, byte),
            kind,
        };
        match word {
            "name" => name = Some(rest.trim().to_string()),
            "degree" => {
                if degree.is_some() {
                    return Err(err(start, GroupFileErrorKind::DuplicateDegree));
                }
                let value = rest.trim();
                let offset = rest_start + (rest.len() - rest.trim_start().len());
                match value.parse::<usize>() {
                    Ok(n) if n > 0 => degree = Some(n),
                    _ => return Err(err(offset, GroupFileErrorKind::InvalidDegree)),
                }
            }
            "gen" => {
                let Some(n) = degree else {
                    return Err(err(start, GroupFileErrorKind::MissingDegree));
                };
                let p = parse_cycles(rest, n)
                    .map_err(|e| err(rest_start + e.pos, GroupFileErrorKind::Cycle(e.kind)))?;
                generators.push(p);
            }
            other => {
                return Err(err(start, GroupFileErrorKind::UnknownDirective(other.to_string())));
            }
        }
    }
    let degree = degree.ok_or(GroupFileError {
        line: text.lines().count().max(1),
        column: 1,
        kind: GroupFileErrorKind::MissingDegree,
    })?;
    Ok(GroupSpec {
        name,
        degree,
        generators,
    })
}

/// Renders a group in the file format; parsing the result gives back the
/// same generators.
pub fn write_group_file(name: Option<&str>, group: &PermGroup) -> String {
    let mut out = String::new();
    if let Some(n) = name {
        out.push_str("name ");
        out.push_str(n);
        out.push('\n');
    }
    out.push_str(&alloc::format!("degree {}\n", group.degree()));
    for g in group.generators() {
        out.push_str("gen ");
        out.push_str(&g.to_cycle_string());
        out.push('\n');
    }
    out
}
