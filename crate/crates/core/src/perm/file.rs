//! Plain-text group files.
//!
//! ```text
//! # comment
//! name A5xC7
//! degree 12
//! gen (1 2 3 4 5)
//! gen (1 2 3)
//! gen (6 7 8 9 10 11 12)
//! ```
//!
//! Cycles are 1-based and disjoint within a `gen` line.

use std::path::Path;

use super::group::{Limits, PermGroup};
use super::permutation::Permutation;
use crate::error::FileError;

pub fn read_group_file(path: &Path, limits: Limits) -> Result<PermGroup, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let fallback = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".into());
    let group = parse_group_text(&text, limits)?;
    Ok(if group.label().starts_with("group of order") {
        group.named(fallback)
    } else {
        group
    })
}

pub fn parse_group_text(text: &str, limits: Limits) -> Result<PermGroup, FileError> {
    let mut degree: Option<usize> = None;
    let mut name: Option<String> = None;
    let mut gens: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        let syntax = |message: String| FileError::Syntax { line: line_no, message };
        match key {
            "degree" => {
                if degree.is_some() {
                    return Err(syntax("duplicate degree line".into()));
                }
                let d: usize = rest.parse().map_err(|_| syntax(format!("invalid degree `{rest}`")))?;
                degree = Some(d);
            }
            "name" => {
                if rest.is_empty() {
                    return Err(syntax("empty name".into()));
                }
                name = Some(rest.to_string());
            }
            "gen" => gens.push((line_no, parse_cycles(rest).map_err(syntax)?)),
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }

    let degree = degree.ok_or(FileError::Syntax {
        line: 0,
        message: "missing degree line".into(),
    })?;
    let mut perms = Vec::with_capacity(gens.len());
    for (line, cycles) in gens {
        let zero_based: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|c| c.into_iter().map(|x| x - 1).collect())
            .collect();
        let p = Permutation::from_cycles(degree, &zero_based).map_err(|e| FileError::Syntax {
            line,
            message: e.to_string(),
        })?;
        perms.push(p);
    }
    let group = PermGroup::with_limits(degree, &perms, limits)?;
    Ok(match name {
        Some(n) => group.named(n),
        None => group,
    })
}

/// Parses `(1 2 3)(4 5)`; `()` or an empty string is the identity.
fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(format!("expected `(` at `{rest}`"));
        };
        let Some(end) = body.find(')') else {
            return Err("unclosed cycle".into());
        };
        let points = body[..end]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(0) => Err("points are 1-based".to_string()),
                Ok(x) => Ok(x),
                Err(_) => Err(format!("invalid point `{t}`")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(cycles)
}
