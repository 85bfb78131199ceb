//! Graph serialization.
//!
//! The canonical interchange format is a JSON object with `nodes`,
//! `colors` and `edges` arrays (labels, not indices), an optional
//! `unobservable` pair list, and an optional `node_colors` map which
//! switches the document to the node-colored convention: every node's
//! color is assigned to its incoming edges at load time. A document with
//! an empty color list and bare `[from, to]` edges denotes an uncolored
//! digraph (the design-solver input convention).
//!
//! DOT import/export covers plain colored and uncolored graphs: colored
//! edges carry `label="<color>"`, unobservable edges carry no label.
//! JSON is lossless; DOT orders colors by first appearance and drops
//! unused ones.

use crate::graph::{ColoredDigraph, Edge, NodeId, UncoloredDigraph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("json syntax error: {0}")]
    JsonSyntax(#[from] serde_json::Error),
    #[error("{location}: {message}")]
    Document { message: String, location: String },
    #[error("dot syntax error at line {line}: {message}")]
    Dot { message: String, line: usize },
}

impl FormatError {
    fn doc(message: impl Into<String>, location: impl Into<String>) -> Self {
        FormatError::Document {
            message: message.into(),
            location: location.into(),
        }
    }
}

/// Supported text formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

/// A parsed graph document: colored or uncolored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphDocument {
    Colored(ColoredDigraph),
    Uncolored(UncoloredDigraph),
}

impl GraphDocument {
    /// Colored view: uncolored documents are read as single-color graphs
    /// over the placeholder color `*` (or zero colors when edgeless), so
    /// that every generated document is accepted by every consumer.
    pub fn into_colored(self) -> ColoredDigraph {
        match self {
            GraphDocument::Colored(g) => g,
            GraphDocument::Uncolored(g) => g.as_single_color(),
        }
    }

    /// Uncolored view: colors are forgotten, parallel edges collapse.
    pub fn into_uncolored(self) -> UncoloredDigraph {
        match self {
            GraphDocument::Colored(g) => UncoloredDigraph::from(&g),
            GraphDocument::Uncolored(g) => g,
        }
    }

    pub fn parse(text: &str, format: Format) -> Result<GraphDocument, FormatError> {
        match format {
            Format::Json => parse_json(text),
            Format::Dot => parse_dot(text),
        }
    }

    pub fn serialize(&self, format: Format) -> String {
        match (self, format) {
            (GraphDocument::Colored(g), Format::Json) => to_json(g),
            (GraphDocument::Colored(g), Format::Dot) => to_dot(g),
            (GraphDocument::Uncolored(g), Format::Json) => uncolored_to_json(g),
            (GraphDocument::Uncolored(g), Format::Dot) => uncolored_to_dot(g),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    nodes: Vec<String>,
    colors: Vec<String>,
    edges: Vec<JsonEdge>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    unobservable: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    node_colors: Option<BTreeMap<String, String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonEdge {
    Colored(String, String, String),
    Bare(String, String),
}

pub fn parse_json(text: &str) -> Result<GraphDocument, FormatError> {
    let doc: JsonDoc = serde_json::from_str(text)?;
    resolve(doc)
}

fn resolve(doc: JsonDoc) -> Result<GraphDocument, FormatError> {
    let mut node_index = BTreeMap::new();
    for (i, label) in doc.nodes.iter().enumerate() {
        if node_index.insert(label.clone(), i).is_some() {
            return Err(FormatError::doc(
                format!("duplicate node label {label:?}"),
                format!("nodes[{i}]"),
            ));
        }
    }
    let mut color_index = BTreeMap::new();
    for (i, label) in doc.colors.iter().enumerate() {
        if color_index.insert(label.clone(), i).is_some() {
            return Err(FormatError::doc(
                format!("duplicate color label {label:?}"),
                format!("colors[{i}]"),
            ));
        }
    }
    let node = |label: &str, loc: String| {
        node_index
            .get(label)
            .copied()
            .ok_or_else(|| FormatError::doc(format!("unknown node label {label:?}"), loc))
    };
    let color = |label: &str, loc: String| {
        color_index
            .get(label)
            .copied()
            .ok_or_else(|| FormatError::doc(format!("unknown color label {label:?}"), loc))
    };

    let mut unobservable = Vec::with_capacity(doc.unobservable.len());
    for (i, (from, to)) in doc.unobservable.iter().enumerate() {
        unobservable.push((
            node(from, format!("unobservable[{i}][0]"))?,
            node(to, format!("unobservable[{i}][1]"))?,
        ));
    }

    if let Some(node_colors) = &doc.node_colors {
        // node-colored convention: bare edges, color taken from the target
        let mut target_color: BTreeMap<NodeId, usize> = BTreeMap::new();
        for (node_label, color_label) in node_colors {
            let v = node(node_label, format!("node_colors.{node_label}"))?;
            let c = color(color_label, format!("node_colors.{node_label}"))?;
            target_color.insert(v, c);
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (i, e) in doc.edges.iter().enumerate() {
            let JsonEdge::Bare(from, to) = e else {
                return Err(FormatError::doc(
                    "node-colored documents use bare [from, to] edges",
                    format!("edges[{i}]"),
                ));
            };
            let from = node(from, format!("edges[{i}][0]"))?;
            let to_id = node(to, format!("edges[{i}][1]"))?;
            let c = target_color.get(&to_id).copied().ok_or_else(|| {
                FormatError::doc(
                    format!("node {to:?} has incoming edges but no node_colors entry"),
                    format!("edges[{i}]"),
                )
            })?;
            edges.push(Edge::new(from, to_id, c));
        }
        return Ok(GraphDocument::Colored(ColoredDigraph::from_parts(
            doc.nodes,
            doc.colors,
            edges,
            unobservable,
        )));
    }

    let all_bare = doc
        .edges
        .iter()
        .all(|e| matches!(e, JsonEdge::Bare(_, _)));
    if doc.colors.is_empty() && all_bare {
        // uncolored document
        if !unobservable.is_empty() {
            return Err(FormatError::doc(
                "uncolored documents cannot carry unobservable edges",
                "unobservable",
            ));
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (i, e) in doc.edges.iter().enumerate() {
            let JsonEdge::Bare(from, to) = e else {
                unreachable!()
            };
            edges.push((
                node(from, format!("edges[{i}][0]"))?,
                node(to, format!("edges[{i}][1]"))?,
            ));
        }
        return Ok(GraphDocument::Uncolored(UncoloredDigraph::from_parts(
            doc.nodes, edges,
        )));
    }

    let mut edges = Vec::with_capacity(doc.edges.len());
    for (i, e) in doc.edges.iter().enumerate() {
        let JsonEdge::Colored(from, to, c) = e else {
            return Err(FormatError::doc(
                "colored documents use [from, to, color] edges",
                format!("edges[{i}]"),
            ));
        };
        edges.push(Edge::new(
            node(from, format!("edges[{i}][0]"))?,
            node(to, format!("edges[{i}][1]"))?,
            color(c, format!("edges[{i}][2]"))?,
        ));
    }
    Ok(GraphDocument::Colored(ColoredDigraph::from_parts(
        doc.nodes,
        doc.colors,
        edges,
        unobservable,
    )))
}

pub fn to_json(g: &ColoredDigraph) -> String {
    let doc = JsonDoc {
        nodes: g.node_labels().to_vec(),
        colors: g.color_labels().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| {
                JsonEdge::Colored(
                    g.node_label(e.from).to_string(),
                    g.node_label(e.to).to_string(),
                    g.color_label(e.color).to_string(),
                )
            })
            .collect(),
        unobservable: g
            .unobservable_edges()
            .iter()
            .map(|&(from, to)| {
                (
                    g.node_label(from).to_string(),
                    g.node_label(to).to_string(),
                )
            })
            .collect(),
        node_colors: None,
    };
    serde_json::to_string_pretty(&doc).expect("graph documents always serialize")
}

pub fn uncolored_to_json(g: &UncoloredDigraph) -> String {
    let doc = JsonDoc {
        nodes: g.node_labels().to_vec(),
        colors: Vec::new(),
        edges: g
            .edges()
            .iter()
            .map(|&(from, to)| {
                JsonEdge::Bare(
                    g.node_label(from).to_string(),
                    g.node_label(to).to_string(),
                )
            })
            .collect(),
        unobservable: Vec::new(),
        node_colors: None,
    };
    serde_json::to_string_pretty(&doc).expect("graph documents always serialize")
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(ch),
        }
    }
    out.push('"');
    out
}

pub fn to_dot(g: &ColoredDigraph) -> String {
    let mut out = String::from("digraph {\n");
    for label in g.node_labels() {
        out.push_str(&format!("  {};\n", quote(label)));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -> {} [label={}];\n",
            quote(g.node_label(e.from)),
            quote(g.node_label(e.to)),
            quote(g.color_label(e.color))
        ));
    }
    for &(from, to) in g.unobservable_edges() {
        out.push_str(&format!(
            "  {} -> {} [style=dashed];\n",
            quote(g.node_label(from)),
            quote(g.node_label(to))
        ));
    }
    out.push_str("}\n");
    out
}

pub fn uncolored_to_dot(g: &UncoloredDigraph) -> String {
    let mut out = String::from("digraph {\n");
    for label in g.node_labels() {
        out.push_str(&format!("  {};\n", quote(label)));
    }
    for &(from, to) in g.edges() {
        out.push_str(&format!(
            "  {} -> {};\n",
            quote(g.node_label(from)),
            quote(g.node_label(to))
        ));
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT subset written by [`to_dot`]: a `digraph` wrapping node
/// statements and single-arrow edge statements with an optional attribute
/// list. Nodes are ordered by first mention and colors by first labeled
/// use. Edges without a `label` attribute become unobservable edges; if
/// no edge carries a label the document is read as uncolored.
pub fn parse_dot(text: &str) -> Result<GraphDocument, FormatError> {
    let mut tokens = DotLexer::new(text);
    tokens.expect_keyword(&["strict"], true)?;
    tokens.expect_keyword(&["digraph", "graph"], false)?;
    if tokens.last_keyword.as_deref() == Some("graph") {
        return Err(FormatError::Dot {
            message: "only directed graphs (digraph) are supported".to_string(),
            line: tokens.line,
        });
    }
    // optional graph name
    if let Some(Token::Id(_)) = tokens.peek()? {
        tokens.next()?;
    }
    tokens.expect(Token::OpenBrace)?;

    let mut nodes: Vec<String> = Vec::new();
    let mut node_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut colors: Vec<String> = Vec::new();
    let mut color_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut colored_edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut bare_edges: Vec<(usize, usize)> = Vec::new();

    let intern_node = |label: String,
                           nodes: &mut Vec<String>,
                           node_index: &mut BTreeMap<String, usize>| {
        *node_index.entry(label.clone()).or_insert_with(|| {
            nodes.push(label);
            nodes.len() - 1
        })
    };

    loop {
        match tokens.next()? {
            Some(Token::CloseBrace) => break,
            Some(Token::Id(first)) => {
                let from = intern_node(first, &mut nodes, &mut node_index);
                match tokens.peek()? {
                    Some(Token::Arrow) => {
                        tokens.next()?;
                        let Some(Token::Id(target)) = tokens.next()? else {
                            return Err(FormatError::Dot {
                                message: "expected node after '->'".to_string(),
                                line: tokens.line,
                            });
                        };
                        let to = intern_node(target, &mut nodes, &mut node_index);
                        let attrs = tokens.attribute_list()?;
                        tokens.eat(Token::Semicolon)?;
                        match attrs.get("label") {
                            Some(label) => {
                                let c = *color_index
                                    .entry(label.clone())
                                    .or_insert_with(|| {
                                        colors.push(label.clone());
                                        colors.len() - 1
                                    });
                                colored_edges.push((from, to, c));
                            }
                            None => bare_edges.push((from, to)),
                        }
                    }
                    _ => {
                        // node declaration, possibly with ignored attributes
                        tokens.attribute_list()?;
                        tokens.eat(Token::Semicolon)?;
                    }
                }
            }
            Some(other) => {
                return Err(FormatError::Dot {
                    message: format!("unexpected token {other:?}"),
                    line: tokens.line,
                });
            }
            None => {
                return Err(FormatError::Dot {
                    message: "unterminated digraph".to_string(),
                    line: tokens.line,
                });
            }
        }
    }

    if colors.is_empty() {
        return Ok(GraphDocument::Uncolored(UncoloredDigraph::from_parts(
            nodes, bare_edges,
        )));
    }
    let edges = colored_edges
        .into_iter()
        .map(|(from, to, c)| Edge::new(from, to, c))
        .collect();
    Ok(GraphDocument::Colored(ColoredDigraph::from_parts(
        nodes, colors, edges, bare_edges,
    )))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Id(String),
    Arrow,
    OpenBrace,
    CloseBrace,
    OpenBracket,
    CloseBracket,
    Equals,
    Semicolon,
    Comma,
}

struct DotLexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    lookahead: Option<Token>,
    last_keyword: Option<String>,
}

impl<'a> DotLexer<'a> {
    fn new(text: &'a str) -> Self {
        DotLexer {
            chars: text.chars().peekable(),
            line: 1,
            lookahead: None,
            last_keyword: None,
        }
    }

    fn peek(&mut self) -> Result<Option<&Token>, FormatError> {
        if self.lookahead.is_none() {
            self.lookahead = self.lex()?;
        }
        Ok(self.lookahead.as_ref())
    }

    fn next(&mut self) -> Result<Option<Token>, FormatError> {
        if let Some(tok) = self.lookahead.take() {
            return Ok(Some(tok));
        }
        self.lex()
    }

    fn lex(&mut self) -> Result<Option<Token>, FormatError> {
        loop {
            match self.chars.peek() {
                None => return Ok(None),
                Some('\n') => {
                    self.line += 1;
                    self.chars.next();
                }
                Some(c) if c.is_whitespace() => {
                    self.chars.next();
                }
                Some('/') => {
                    self.chars.next();
                    match self.chars.peek() {
                        Some('/') => {
                            while let Some(&c) = self.chars.peek() {
                                if c == '\n' {
                                    break;
                                }
                                self.chars.next();
                            }
                        }
                        Some('*') => {
                            self.chars.next();
                            let mut prev = ' ';
                            loop {
                                match self.chars.next() {
                                    None => {
                                        return Err(FormatError::Dot {
                                            message: "unterminated comment".to_string(),
                                            line: self.line,
                                        })
                                    }
                                    Some('\n') => {
                                        self.line += 1;
                                        prev = '\n';
                                    }
                                    Some('/') if prev == '*' => break,
                                    Some(c) => prev = c,
                                }
                            }
                        }
                        _ => {
                            return Err(FormatError::Dot {
                                message: "stray '/'".to_string(),
                                line: self.line,
                            })
                        }
                    }
                }
                Some('#') => {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.chars.next();
                    }
                }
                Some(_) => break,
            }
        }

        let c = *self.chars.peek().expect("peeked above");
        let token = match c {
            '{' => {
                self.chars.next();
                Token::OpenBrace
            }
            '}' => {
                self.chars.next();
                Token::CloseBrace
            }
            '[' => {
                self.chars.next();
                Token::OpenBracket
            }
            ']' => {
                self.chars.next();
                Token::CloseBracket
            }
            '=' => {
                self.chars.next();
                Token::Equals
            }
            ';' => {
                self.chars.next();
                Token::Semicolon
            }
            ',' => {
                self.chars.next();
                Token::Comma
            }
            '-' => {
                self.chars.next();
                if self.chars.next() == Some('>') {
                    Token::Arrow
                } else {
                    return Err(FormatError::Dot {
                        message: "expected '->'".to_string(),
                        line: self.line,
                    });
                }
            }
            '"' => {
                self.chars.next();
                let mut s = String::new();
                loop {
                    match self.chars.next() {
                        None => {
                            return Err(FormatError::Dot {
                                message: "unterminated string".to_string(),
                                line: self.line,
                            })
                        }
                        Some('"') => break,
                        Some('\\') => match self.chars.next() {
                            Some('n') => s.push('\n'),
                            Some(escaped) => s.push(escaped),
                            None => {
                                return Err(FormatError::Dot {
                                    message: "unterminated escape".to_string(),
                                    line: self.line,
                                })
                            }
                        },
                        Some('\n') => {
                            self.line += 1;
                            s.push('\n');
                        }
                        Some(other) => s.push(other),
                    }
                }
                Token::Id(s)
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' => {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '.' {
                        s.push(c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                Token::Id(s)
            }
            other => {
                return Err(FormatError::Dot {
                    message: format!("unexpected character {other:?}"),
                    line: self.line,
                })
            }
        };
        Ok(Some(token))
    }

    fn expect(&mut self, token: Token) -> Result<(), FormatError> {
        match self.next()? {
            Some(t) if t == token => Ok(()),
            other => Err(FormatError::Dot {
                message: format!("expected {token:?}, found {other:?}"),
                line: self.line,
            }),
        }
    }

    fn eat(&mut self, token: Token) -> Result<(), FormatError> {
        if self.peek()? == Some(&token) {
            self.next()?;
        }
        Ok(())
    }

    fn expect_keyword(&mut self, words: &[&str], optional: bool) -> Result<(), FormatError> {
        match self.peek()? {
            Some(Token::Id(word)) if words.contains(&word.to_lowercase().as_str()) => {
                self.last_keyword = Some(word.to_lowercase());
                self.next()?;
                Ok(())
            }
            _ if optional => Ok(()),
            other => Err(FormatError::Dot {
                message: format!("expected one of {words:?}, found {other:?}"),
                line: self.line,
            }),
        }
    }

    /// Parses an optional `[key=value, ...]` attribute list.
    fn attribute_list(&mut self) -> Result<BTreeMap<String, String>, FormatError> {
        let mut attrs = BTreeMap::new();
        if self.peek()? != Some(&Token::OpenBracket) {
            return Ok(attrs);
        }
        self.next()?;
        loop {
            match self.next()? {
                Some(Token::CloseBracket) => break,
                Some(Token::Comma) => continue,
                Some(Token::Id(key)) => {
                    self.expect(Token::Equals)?;
                    let Some(Token::Id(value)) = self.next()? else {
                        return Err(FormatError::Dot {
                            message: format!("expected value for attribute {key:?}"),
                            line: self.line,
                        });
                    };
                    attrs.insert(key, value);
                }
                other => {
                    return Err(FormatError::Dot {
                        message: format!("unexpected token {other:?} in attribute list"),
                        line: self.line,
                    })
                }
            }
        }
        Ok(attrs)
    }
}
