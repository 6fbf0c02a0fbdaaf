//! The `.morse` text format: one event per line, `#` starts a comment.
//!
//! ```text
//! # two odd crossings
//! cup 0
//! leg 0
//! xp 0
//! xp 0
//! head 1
//! cap 0
//! ```

use std::fmt;
use std::path::{Path, PathBuf};

use crate::diagram::{EventKind, MorseDiagram, MorseEvent, ViolationKind};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unknown event `{0}`")]
    UnknownEvent(String),
    #[error("missing position")]
    MissingPosition,
    #[error("bad position `{0}`")]
    BadPosition(String),
    #[error("unexpected token `{0}`")]
    Trailing(String),
    #[error("{0}")]
    Invalid(ViolationKind),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; for end-of-input errors the last line.
    pub line: usize,
    pub kind: ParseErrorKind,
}

pub fn parse_morse(text: &str) -> Result<MorseDiagram, ParseError> {
    let mut events = Vec::new();
    let mut lines = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |kind| ParseError { line, kind };
        let mut toks = body.split_whitespace();
        let name = toks.next().expect("non-empty line has a token");
        let kind = EventKind::from_token(name)
            .ok_or_else(|| err(ParseErrorKind::UnknownEvent(name.to_string())))?;
        let pos_tok = toks
            .next()
            .ok_or_else(|| err(ParseErrorKind::MissingPosition))?;
        let pos = pos_tok
            .parse::<usize>()
            .map_err(|_| err(ParseErrorKind::BadPosition(pos_tok.to_string())))?;
        if let Some(extra) = toks.next() {
            return Err(err(ParseErrorKind::Trailing(extra.to_string())));
        }
        events.push(MorseEvent::new(kind, pos));
        lines.push(line);
    }
    MorseDiagram::new(events).map_err(|v| ParseError {
        line: lines.get(v.event).copied().unwrap_or(last_line.max(1)),
        kind: ParseErrorKind::Invalid(v.kind),
    })
}

/// Inverse of [`parse_morse`]: `parse_morse(&print_morse(d)) == Ok(d)`.
pub fn print_morse(d: &MorseDiagram) -> String {
    d.to_string()
}

/// A diagram read from disk, keeping its source text.
#[derive(Clone, Debug)]
pub struct DiagramFile {
    pub path: Option<PathBuf>,
    pub name: String,
    pub diagram: MorseDiagram,
    pub source: String,
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
}

impl DiagramFile {
    pub fn from_text(name: &str, source: &str) -> Result<Self, ParseError> {
        Ok(DiagramFile {
            path: None,
            name: name.to_string(),
            diagram: parse_morse(source)?,
            source: source.to_string(),
        })
    }

    /// Reads a file; the diagram is named by the file stem.
    pub fn load(path: &Path) -> Result<Self, LoadError> {
        let source = std::fs::read_to_string(path).map_err(|e| LoadError::Io {
            path: path.to_path_buf(),
            source: e,
        })?;
        let diagram = parse_morse(&source).map_err(|e| LoadError::Parse {
            path: path.to_path_buf(),
            source: e,
        })?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Ok(DiagramFile {
            path: Some(path.to_path_buf()),
            name,
            diagram,
            source,
        })
    }
}

impl fmt::Display for DiagramFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}
