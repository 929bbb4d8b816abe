//! Text formats for graphs, edge streams and change logs.
//!
//! Graph files hold one edge per line as `<left> <right>`; stream files hold
//! `<op> <left> <right> [timestamp]` with `op` one of `+`/`-`. Labels are
//! alphanumeric (underscores allowed) and map to dense ids per side in order
//! of first appearance. `#` starts a comment.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{self, BufRead, Write};
use std::path::Path;

use bicliq_core::{Biclique, BipartiteGraph, Edge, EdgeBatch, VertexId};

use crate::error::CliError;

#[derive(Debug, Default, Clone)]
struct SideLabels {
    ids: HashMap<String, u32>,
    names: Vec<String>,
}

impl SideLabels {
    fn intern(&mut self, label: &str) -> u32 {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.names.len() as u32;
        self.ids.insert(label.to_owned(), id);
        self.names.push(label.to_owned());
        id
    }

    fn name(&self, id: u32) -> String {
        self.names.get(id as usize).cloned().unwrap_or_else(|| id.to_string())
    }
}

/// Label dictionaries for both sides.
#[derive(Debug, Default, Clone)]
pub struct Labels {
    left: SideLabels,
    right: SideLabels,
}

impl Labels {
    pub fn edge(&mut self, left: &str, right: &str) -> Edge {
        Edge::new(self.left.intern(left), self.right.intern(right))
    }

    pub fn num_left(&self) -> u32 {
        self.left.names.len() as u32
    }

    pub fn num_right(&self) -> u32 {
        self.right.names.len() as u32
    }

    pub fn show_edge(&self, e: Edge) -> String {
        format!("({},{})", self.left.name(e.left), self.right.name(e.right))
    }

    /// `({a,b},{x,y})` with labels in id order.
    pub fn show_biclique(&self, b: &Biclique) -> String {
        let mut out = String::from("({");
        join(&mut out, b.left().iter().map(|&u| self.left.name(u)));
        out.push_str("},{");
        join(&mut out, b.right().iter().map(|&v| self.right.name(v)));
        out.push_str("})");
        out
    }
}

fn join(out: &mut String, items: impl Iterator<Item = String>) {
    for (i, s) in items.enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{s}");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Add,
    Remove,
}

impl OpKind {
    pub fn symbol(self) -> char {
        match self {
            OpKind::Add => '+',
            OpKind::Remove => '-',
        }
    }
}

/// One stream entry. `line` is 0 for generated streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamOp {
    pub kind: OpKind,
    pub edge: Edge,
    pub line: usize,
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Non-empty, non-comment lines as `(line number, tokens)`.
fn records<R: BufRead>(input: R, path: &str) -> Result<Vec<(usize, Vec<String>)>, CliError> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| CliError::io(path, e))?;
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<String> = content.split_whitespace().map(str::to_owned).collect();
        if !tokens.is_empty() {
            out.push((i + 1, tokens));
        }
    }
    Ok(out)
}

fn check_label(path: &str, line: usize, token: &str) -> Result<(), CliError> {
    if is_label(token) {
        Ok(())
    } else {
        Err(CliError::parse(path, line, format!("invalid vertex label '{token}'")))
    }
}

/// Parses a graph file. Repeated edges are collapsed.
pub fn parse_graph<R: BufRead>(input: R, path: &str, labels: &mut Labels) -> Result<BipartiteGraph, CliError> {
    let mut edges = Vec::new();
    for (line, tokens) in records(input, path)? {
        if tokens.len() != 2 {
            return Err(CliError::parse(
                path,
                line,
                format!("expected '<left> <right>', found {} tokens", tokens.len()),
            ));
        }
        check_label(path, line, &tokens[0])?;
        check_label(path, line, &tokens[1])?;
        edges.push(labels.edge(&tokens[0], &tokens[1]));
    }
    edges.sort_unstable();
    edges.dedup();
    let mut g = BipartiteGraph::new();
    for u in 0..labels.num_left() {
        g.add_vertex(VertexId::left(u));
    }
    for v in 0..labels.num_right() {
        g.add_vertex(VertexId::right(v));
    }
    g.add_edges(&EdgeBatch::new(edges)).expect("edges are deduplicated");
    Ok(g)
}

pub fn parse_stream<R: BufRead>(input: R, path: &str, labels: &mut Labels) -> Result<Vec<StreamOp>, CliError> {
    let mut ops = Vec::new();
    for (line, tokens) in records(input, path)? {
        if !(3..=4).contains(&tokens.len()) {
            return Err(CliError::parse(
                path,
                line,
                format!("expected '<op> <left> <right> [timestamp]', found {} tokens", tokens.len()),
            ));
        }
        let kind = match tokens[0].as_str() {
            "+" => OpKind::Add,
            "-" => OpKind::Remove,
            other => return Err(CliError::parse(path, line, format!("unknown operation '{other}'"))),
        };
        check_label(path, line, &tokens[1])?;
        check_label(path, line, &tokens[2])?;
        ops.push(StreamOp {
            kind,
            edge: labels.edge(&tokens[1], &tokens[2]),
            line,
        });
    }
    Ok(ops)
}

pub fn read_graph(path: &Path, labels: &mut Labels) -> Result<BipartiteGraph, CliError> {
    let name = path.display().to_string();
    let file = std::fs::File::open(path).map_err(|e| CliError::io(&name, e))?;
    parse_graph(io::BufReader::new(file), &name, labels)
}

pub fn read_stream(path: &Path, labels: &mut Labels) -> Result<Vec<StreamOp>, CliError> {
    let name = path.display().to_string();
    let file = std::fs::File::open(path).map_err(|e| CliError::io(&name, e))?;
    parse_stream(io::BufReader::new(file), &name, labels)
}

/// Writes edges with numeric labels.
pub fn write_graph<W: Write + ?Sized>(out: &mut W, g: &BipartiteGraph, comment: &str) -> io::Result<()> {
    for line in comment.lines() {
        writeln!(out, "# {line}")?;
    }
    for e in g.edges() {
        writeln!(out, "{} {}", e.left, e.right)?;
    }
    Ok(())
}

pub fn write_stream<'a, W: Write + ?Sized>(out: &mut W, kind: OpKind, edges: impl IntoIterator<Item = &'a Edge>) -> io::Result<()> {
    for e in edges {
        writeln!(out, "{} {} {}", kind.symbol(), e.left, e.right)?;
    }
    Ok(())
}
