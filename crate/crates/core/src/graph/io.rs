use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{Digraph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `u v`, found {0:?}")]
    Syntax(String),
    #[error("loop at `{0}`")]
    Loop(String),
    #[error("duplicate arc `{0}` -> `{1}`")]
    DuplicateArc(String, String),
    #[error("unterminated digraph block")]
    Unterminated,
}

/// A digraph together with the external vertex names, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedDigraph {
    pub digraph: Digraph,
    pub names: Vec<String>,
}

impl NamedDigraph {
    pub fn index_of(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|s| s == name)
    }

    /// Names `0..n` for a digraph built in code.
    pub fn with_numeric_names(digraph: Digraph) -> Self {
        let names = (0..digraph.n()).map(|v| v.to_string()).collect();
        NamedDigraph { digraph, names }
    }
}

#[derive(Default)]
struct Builder {
    ids: HashMap<String, Vertex>,
    names: Vec<String>,
    arcs: Vec<(Vertex, Vertex, usize)>,
}

impl Builder {
    fn vertex(&mut self, name: &str) -> Vertex {
        if let Some(&v) = self.ids.get(name) {
            return v;
        }
        let v = self.names.len();
        self.ids.insert(name.to_string(), v);
        self.names.push(name.to_string());
        v
    }

    fn arc(&mut self, u: &str, v: &str, line: usize) -> Result<(), ParseError> {
        if u == v {
            return Err(ParseError { line, kind: ParseErrorKind::Loop(u.to_string()) });
        }
        let (u, v) = (self.vertex(u), self.vertex(v));
        self.arcs.push((u, v, line));
        Ok(())
    }

    fn finish(self) -> Result<NamedDigraph, ParseError> {
        let mut d = Digraph::empty(self.names.len());
        for (u, v, line) in self.arcs {
            if let Err(GraphError::DuplicateArc(u, v)) = d.add_arc(u, v) {
                let kind = ParseErrorKind::DuplicateArc(self.names[u].clone(), self.names[v].clone());
                return Err(ParseError { line, kind });
            }
        }
        Ok(NamedDigraph { digraph: d, names: self.names })
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find(['#']) {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses an edge list (`u v` per line, `#` comments, a lone name declares a
/// vertex) or a `digraph { a -> b; }` block. Vertices are numbered in order
/// of first appearance.
pub fn parse_digraph(text: &str) -> Result<NamedDigraph, ParseError> {
    let first = text
        .lines()
        .map(|l| strip_comment(l).trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with("digraph") => parse_dot(text),
        _ => parse_edge_list(text),
    }
}

fn parse_edge_list(text: &str) -> Result<NamedDigraph, ParseError> {
    let mut b = Builder::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        match tokens[..] {
            [] => {}
            [v] => {
                b.vertex(v);
            }
            [u, v] => b.arc(u, v, line)?,
            _ => {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::Syntax(raw.trim().to_string()),
                })
            }
        }
    }
    b.finish()
}

fn dot_id(tok: &str) -> Option<&str> {
    let tok = tok.trim();
    if let Some(inner) = tok.strip_prefix('"').and_then(|t| t.strip_suffix('"')) {
        return (!inner.is_empty()).then_some(inner);
    }
    let ok = !tok.is_empty()
        && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.');
    ok.then_some(tok)
}

fn parse_dot(text: &str) -> Result<NamedDigraph, ParseError> {
    let mut b = Builder::default();
    let mut opened = false;
    let mut closed = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut body = strip_comment(raw).trim();
        if let Some(pos) = body.find("//") {
            body = body[..pos].trim();
        }
        if !opened {
            if body.is_empty() {
                continue;
            }
            let Some(rest) = body.strip_prefix("digraph") else {
                return Err(ParseError { line, kind: ParseErrorKind::Syntax(body.to_string()) });
            };
            let Some(brace) = rest.find('{') else {
                return Err(ParseError { line, kind: ParseErrorKind::Syntax(body.to_string()) });
            };
            let name = rest[..brace].trim();
            if !name.is_empty() && dot_id(name).is_none() {
                return Err(ParseError { line, kind: ParseErrorKind::Syntax(body.to_string()) });
            }
            opened = true;
            body = rest[brace + 1..].trim();
        }
        if closed {
            if body.is_empty() {
                continue;
            }
            return Err(ParseError { line, kind: ParseErrorKind::Syntax(body.to_string()) });
        }
        if let Some(pos) = body.find('}') {
            if !body[pos + 1..].trim().is_empty() {
                return Err(ParseError { line, kind: ParseErrorKind::Syntax(body.to_string()) });
            }
            body = body[..pos].trim();
            closed = true;
        }
        for stmt in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let parts: Vec<&str> = stmt.split("->").collect();
            let ids: Option<Vec<&str>> = parts.iter().map(|p| dot_id(p)).collect();
            let Some(ids) = ids else {
                return Err(ParseError { line, kind: ParseErrorKind::Syntax(stmt.to_string()) });
            };
            if ids.len() == 1 {
                b.vertex(ids[0]);
            }
            for w in ids.windows(2) {
                b.arc(w[0], w[1], line)?;
            }
        }
    }
    if !closed {
        let line = text.lines().count().max(1);
        return Err(ParseError { line, kind: ParseErrorKind::Unterminated });
    }
    b.finish()
}

/// Edge-list text that [`parse_digraph`] maps back to the same digraph and names.
///
/// Every vertex is declared on its own line first, which pins the numbering.
pub fn to_edge_list(g: &NamedDigraph) -> String {
    let mut out = String::new();
    for name in &g.names {
        let _ = writeln!(out, "{name}");
    }
    for (u, v) in g.digraph.arcs() {
        let _ = writeln!(out, "{} {}", g.names[u], g.names[v]);
    }
    out
}

pub fn to_dot(g: &NamedDigraph) -> String {
    let quote = |s: &str| {
        if dot_id(s) == Some(s) {
            s.to_string()
        } else {
            format!("\"{s}\"")
        }
    };
    let mut out = String::from("digraph {\n");
    let d = &g.digraph;
    for name in &g.names {
        let _ = writeln!(out, "  {};", quote(name));
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "  {} -> {};", quote(&g.names[u]), quote(&g.names[v]));
    }
    out.push_str("}\n");
    out
}
