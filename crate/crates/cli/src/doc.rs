//! The graph document format.
//!
//! A document is a sequence of `key: items` lines; blank lines and lines
//! starting with `#` are ignored. Keys:
//!
//! ```text
//! vertices: a b c d e          # required, unique labels
//! directed: a->d b->d d->e     # directed edges
//! bidirected: a<->b b<->d      # bidirected edges
//! undirected: a--b b--c        # undirected edges
//! levels: 2 3 2                # optional, discrete level counts,
//!                              # one per vertex in listing order
//! ```
//!
//! Labels are alphanumeric (plus `_`). Every violation is reported with a
//! line and column.

use std::fmt;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.col, self.msg
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Default)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub directed: Vec<(String, String)>,
    pub bidirected: Vec<(String, String)>,
    pub undirected: Vec<(String, String)>,
    pub levels: Option<Vec<u32>>,
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_graph_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut doc = GraphDocument::default();
    let mut seen_keys: Vec<String> = Vec::new();
    let mut vertices_line = 0usize;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |col: usize, msg: String| ParseError { line, col, msg };
        let colon = raw
            .find(':')
            .ok_or_else(|| err(raw.len() + 1, "expected 'key: items'".into()))?;
        let key = raw[..colon].trim();
        if seen_keys.iter().any(|k| k == key) {
            return Err(err(1, format!("duplicate key '{key}'")));
        }
        seen_keys.push(key.to_string());

        // token start columns for diagnostics
        let items: Vec<(usize, &str)> = raw[colon + 1..]
            .split_whitespace()
            .map(|tok| {
                let off = tok.as_ptr() as usize - raw.as_ptr() as usize;
                (off + 1, tok)
            })
            .collect();

        match key {
            "vertices" => {
                vertices_line = line;
                for (col, tok) in &items {
                    if !valid_label(tok) {
                        return Err(err(*col, format!("invalid vertex label '{tok}'")));
                    }
                    if doc.vertices.iter().any(|v| v == tok) {
                        return Err(err(*col, format!("duplicate vertex label '{tok}'")));
                    }
                    doc.vertices.push(tok.to_string());
                }
                if doc.vertices.is_empty() {
                    return Err(err(colon + 2, "vertices list is empty".into()));
                }
            }
            "directed" | "bidirected" | "undirected" => {
                let sep = match key {
                    "directed" => "->",
                    "bidirected" => "<->",
                    _ => "--",
                };
                for (col, tok) in &items {
                    let Some((a, b)) = tok.split_once(sep) else {
                        return Err(err(*col, format!("expected '{sep}' edge, got '{tok}'")));
                    };
                    if !valid_label(a) || !valid_label(b) {
                        return Err(err(*col, format!("invalid edge endpoints '{tok}'")));
                    }
                    for endpoint in [a, b] {
                        if !doc.vertices.iter().any(|v| v == endpoint) {
                            return Err(err(
                                *col,
                                format!("edge endpoint '{endpoint}' is not a declared vertex"),
                            ));
                        }
                    }
                    let pair = (a.to_string(), b.to_string());
                    match key {
                        "directed" => doc.directed.push(pair),
                        "bidirected" => doc.bidirected.push(pair),
                        _ => doc.undirected.push(pair),
                    }
                }
            }
            "levels" => {
                let mut levels = Vec::new();
                for (col, tok) in &items {
                    let d: u32 = tok
                        .parse()
                        .ok()
                        .filter(|&d| d >= 1)
                        .ok_or_else(|| err(*col, format!("invalid level count '{tok}'")))?;
                    levels.push(d);
                }
                doc.levels = Some(levels);
            }
            other => {
                return Err(err(1, format!("unknown key '{other}'")));
            }
        }
    }

    if doc.vertices.is_empty() {
        return Err(ParseError {
            line: 1,
            col: 1,
            msg: "missing 'vertices' line".into(),
        });
    }
    if let Some(levels) = &doc.levels {
        if levels.len() != doc.vertices.len() {
            return Err(ParseError {
                line: vertices_line.max(1),
                col: 1,
                msg: format!(
                    "levels count {} does not match vertex count {}",
                    levels.len(),
                    doc.vertices.len()
                ),
            });
        }
    }
    Ok(doc)
}

/// Level counts reordered to the canonical vertex positions of the built
/// graph (labels are sorted at construction; the document lists levels in
/// declaration order).
pub fn levels_by_position(doc: &GraphDocument, sorted_labels: &[String]) -> Option<Vec<u32>> {
    let levels = doc.levels.as_ref()?;
    Some(
        sorted_labels
            .iter()
            .map(|l| {
                let idx = doc.vertices.iter().position(|v| v == l).expect("label");
                levels[idx]
            })
            .collect(),
    )
}
