//! Plain-text edge lists: optional `c` comment lines, one `p <n> <m>`
//! header, then `m` lines `e <u> <v>` with `0 <= u < v < n`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use pkvc_core::{Graph, GraphBuilder};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("header promises {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: pkvc_core::Error,
    },
    #[error(transparent)]
    Graph(#[from] pkvc_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        msg: msg.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        malformed(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(malformed(line, "second header"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                header = Some((n, m));
                builder = Some(GraphBuilder::with_capacity(n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| malformed(line, "edge before header"))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                if u == v {
                    return Err(ParseError::Invalid {
                        line,
                        source: pkvc_core::Error::SelfLoop(u),
                    });
                }
                if u > v {
                    return Err(malformed(
                        line,
                        format!("endpoints must satisfy u < v, got {u} {v}"),
                    ));
                }
                if v >= n {
                    return Err(ParseError::Invalid {
                        line,
                        source: pkvc_core::Error::VertexOutOfRange { id: v, n },
                    });
                }
                if !seen.insert((u, v)) {
                    return Err(ParseError::Invalid {
                        line,
                        source: pkvc_core::Error::DuplicateEdge(u, v),
                    });
                }
                builder
                    .as_mut()
                    .unwrap()
                    .add_edge(u, v)
                    .map_err(|source| ParseError::Invalid { line, source })?;
            }
            other => return Err(malformed(line, format!("unknown line type `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(malformed(line, "trailing tokens"));
        }
    }
    let (_, m) = header.ok_or(ParseError::MissingHeader)?;
    if seen.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: seen.len(),
        });
    }
    Ok(builder.unwrap().build()?)
}

/// Canonical text: header then edges in lexicographic order, after the
/// given comment lines.
pub fn serialize(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn read(path: &Path) -> Result<Graph, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn write(path: &Path, g: &Graph, comments: &[String]) -> Result<(), ParseError> {
    std::fs::write(path, serialize(g, comments)).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse("c tiny\np 3 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(serialize(&g, &[]), "p 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse("p 2 1\ne 0 0\n"),
            Err(ParseError::Invalid {
                line: 2,
                source: pkvc_core::Error::SelfLoop(0)
            })
        ));
        assert!(matches!(
            parse("p 3 2\ne 0 1\ne 0 1\n"),
            Err(ParseError::Invalid { line: 3, .. })
        ));
        assert!(matches!(
            parse("p 3 1\ne 0 3\n"),
            Err(ParseError::Invalid { line: 2, .. })
        ));
        assert!(matches!(
            parse("p 3 1\ne 1 0\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse("p 3 2\ne 0 1\n"),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse("e 0 1\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(parse("c only\n"), Err(ParseError::MissingHeader)));
        assert!(matches!(
            parse("p 3 1\np 3 1\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse("p 3 x\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse("p 3 1\ne 0 1 2\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse("p 3 1\nq 0 1\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
    }

    #[test]
    fn degree_cap_applies() {
        let mut text = String::from("p 70 69\n");
        for v in 1..70 {
            text.push_str(&format!("e 0 {v}\n"));
        }
        assert!(matches!(
            parse(&text),
            Err(ParseError::Graph(pkvc_core::Error::DegreeCap { .. }))
        ));
    }
}
