//! Text formats. All vertex ids in files are 1-based.
//!
//! Graph file:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>      (m lines)
//! st <s> <t>
//! ```
//!
//! Path file: one `path <v0> ... <vd>` line. A sequence file holds one such
//! line per path. Coloring instance: `p`/`e` as above, then `k <k>`,
//! `alpha <c1> ... <cn>`, `beta <c1> ... <cn>`.

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::{Graph, Vertex};
use crate::layering::StPath;
use crate::reduction::ColorPathInstance;

type ParseResult<T> = std::result::Result<T, ParseError>;
type Directive<'a> = (usize, Vec<&'a str>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub s: Vertex,
    pub t: Vertex,
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn directives(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn malformed(line: usize, tokens: &[&str]) -> ParseError {
    ParseError::new(line, ParseErrorKind::Malformed(tokens.join(" ")))
}

fn numbers(line: usize, tokens: &[&str]) -> ParseResult<Vec<usize>> {
    tokens[1..]
        .iter()
        .map(|tok| tok.parse::<usize>().map_err(|_| malformed(line, tokens)))
        .collect()
}

fn vertex(line: usize, id: usize, n: usize) -> ParseResult<Vertex> {
    if id == 0 || id > n {
        Err(ParseError::new(
            line,
            ParseErrorKind::VertexOutOfRange { id, n },
        ))
    } else {
        Ok(id - 1)
    }
}

/// Consumes the `p` directive and its edge lines; returns the first line
/// that is neither.
fn parse_header<'a>(
    lines: &mut impl Iterator<Item = Directive<'a>>,
) -> ParseResult<(Graph, Option<Directive<'a>>)> {
    let Some((line, tokens)) = lines.next() else {
        return Err(ParseError::new(1, ParseErrorKind::Missing("p")));
    };
    if tokens[0] != "p" {
        return Err(ParseError::new(line, ParseErrorKind::Missing("p")));
    }
    let nums = numbers(line, &tokens)?;
    let [n, m] = nums[..] else {
        return Err(malformed(line, &tokens));
    };
    let mut graph = Graph::new(n);
    let mut found = 0;
    let mut next = None;
    let mut last = line;
    for (line, tokens) in lines.by_ref() {
        last = line;
        if tokens[0] != "e" {
            next = Some((line, tokens));
            break;
        }
        let nums = numbers(line, &tokens)?;
        let [u, v] = nums[..] else {
            return Err(malformed(line, &tokens));
        };
        let (u, v) = (vertex(line, u, n)?, vertex(line, v, n)?);
        if u == v {
            return Err(ParseError::new(line, ParseErrorKind::SelfLoop(u + 1)));
        }
        if graph.has_edge(u, v) {
            return Err(ParseError::new(
                line,
                ParseErrorKind::DuplicateEdge(u + 1, v + 1),
            ));
        }
        found += 1;
        if found > m {
            return Err(ParseError::new(
                line,
                ParseErrorKind::EdgeCount { expected: m, found },
            ));
        }
        graph.add_edge(u, v).expect("checked above");
    }
    if found != m {
        let line = next.as_ref().map_or(last + 1, |(l, _)| *l);
        return Err(ParseError::new(
            line,
            ParseErrorKind::EdgeCount { expected: m, found },
        ));
    }
    Ok((graph, next))
}

pub fn parse_graph(text: &str) -> ParseResult<GraphFile> {
    let mut lines = directives(text);
    let (graph, next) = parse_header(&mut lines)?;
    let n = graph.vertex_count();
    let end = text.lines().count() + 1;
    let Some((line, tokens)) = next else {
        return Err(ParseError::new(end, ParseErrorKind::Missing("st")));
    };
    if tokens[0] != "st" {
        return Err(ParseError::new(
            line,
            ParseErrorKind::Unexpected(tokens[0].to_string()),
        ));
    }
    let nums = numbers(line, &tokens)?;
    let [s, t] = nums[..] else {
        return Err(malformed(line, &tokens));
    };
    let (s, t) = (vertex(line, s, n)?, vertex(line, t, n)?);
    if let Some((line, tokens)) = lines.next() {
        return Err(ParseError::new(
            line,
            ParseErrorKind::Unexpected(tokens[0].to_string()),
        ));
    }
    Ok(GraphFile { graph, s, t })
}

pub fn serialize_graph(g: &Graph, s: Vertex, t: Vertex) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    writeln!(out, "st {} {}", s + 1, t + 1).unwrap();
    out
}

fn parse_path_line(line: usize, tokens: &[&str], n: usize) -> ParseResult<StPath> {
    if tokens[0] != "path" || tokens.len() < 2 {
        return Err(malformed(line, tokens));
    }
    numbers(line, tokens)?
        .into_iter()
        .map(|id| vertex(line, id, n))
        .collect::<ParseResult<Vec<_>>>()
        .map(StPath)
}

/// Parses a path file against a graph with `n` vertices.
pub fn parse_path(text: &str, n: usize) -> ParseResult<StPath> {
    let mut seq = parse_sequence(text, n)?;
    if seq.len() > 1 {
        let line = directives(text).nth(1).map_or(0, |(l, _)| l);
        return Err(ParseError::new(
            line,
            ParseErrorKind::Unexpected("path".into()),
        ));
    }
    Ok(seq.pop().unwrap())
}

/// Parses one `path` line per entry.
pub fn parse_sequence(text: &str, n: usize) -> ParseResult<Vec<StPath>> {
    let seq = directives(text)
        .map(|(line, tokens)| parse_path_line(line, &tokens, n))
        .collect::<ParseResult<Vec<_>>>()?;
    if seq.is_empty() {
        return Err(ParseError::new(1, ParseErrorKind::Missing("path")));
    }
    Ok(seq)
}

pub fn serialize_path(p: &StPath) -> String {
    let mut out = String::from("path");
    for v in p.vertices() {
        write!(out, " {}", v + 1).unwrap();
    }
    out
}

pub fn parse_color_instance(text: &str) -> ParseResult<ColorPathInstance> {
    let mut lines = directives(text);
    let (graph, mut next) = parse_header(&mut lines)?;
    let n = graph.vertex_count();
    let (mut k, mut alpha, mut beta) = (None, None, None);
    let mut last = 0;
    while let Some((line, tokens)) = next {
        last = line;
        let slot = match tokens[0] {
            "k" => {
                let nums = numbers(line, &tokens)?;
                let [kk] = nums[..] else {
                    return Err(malformed(line, &tokens));
                };
                if k.replace(kk).is_some() {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::Unexpected("k".into()),
                    ));
                }
                next = lines.next();
                continue;
            }
            "alpha" => &mut alpha,
            "beta" => &mut beta,
            other => {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::Unexpected(other.to_string()),
                ))
            }
        };
        let nums = numbers(line, &tokens)?;
        if nums.len() != n {
            return Err(malformed(line, &tokens));
        }
        if slot.replace((line, nums)).is_some() {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Unexpected(tokens[0].to_string()),
            ));
        }
        next = lines.next();
    }
    let end = last + 1;
    let k = k.ok_or_else(|| ParseError::new(end, ParseErrorKind::Missing("k")))?;
    let (aline, alpha) =
        alpha.ok_or_else(|| ParseError::new(end, ParseErrorKind::Missing("alpha")))?;
    let (bline, beta) =
        beta.ok_or_else(|| ParseError::new(end, ParseErrorKind::Missing("beta")))?;
    for (line, colors) in [(aline, &alpha), (bline, &beta)] {
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Malformed(format!("color {c} outside 1..={k}")),
            ));
        }
    }
    Ok(ColorPathInstance {
        graph,
        k,
        alpha,
        beta,
    })
}

pub fn serialize_color_instance(inst: &ColorPathInstance) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "p {} {}",
        inst.graph.vertex_count(),
        inst.graph.edge_count()
    )
    .unwrap();
    for (u, v) in inst.graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    writeln!(out, "k {}", inst.k).unwrap();
    for (name, colors) in [("alpha", &inst.alpha), ("beta", &inst.beta)] {
        out.push_str(name);
        for c in colors {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}
