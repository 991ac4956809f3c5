//! Line-oriented instance format.
//!
//! ```text
//! c comment
//! p bip <tops> <bottoms> <edges>
//! v top <name>          (optional; declares a vertex, e.g. an isolated one)
//! v bottom <name>
//! e <top-name> <bottom-name>
//! ```
//!
//! Vertices get ids in order of first appearance. Names are unique within a
//! layer and the header counts must match the body.

use std::collections::HashMap;
use std::fmt::Write as _;

use bisplit_core::{BipartiteGraph, Side, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut g = BipartiteGraph::new();
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut names: [HashMap<String, VertexId>; 2] = [HashMap::new(), HashMap::new()];
    let mut intern = |g: &mut BipartiteGraph, side: Side, name: &str| -> VertexId {
        let map = &mut names[side as usize];
        *map.entry(name.to_string())
            .or_insert_with(|| g.add_vertex(side, name))
    };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        let rest: Vec<&str> = tok.collect();
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line, "second header line"));
                }
                let [fmt, t, b, e] = rest[..] else {
                    return Err(err(line, "expected `p bip <tops> <bottoms> <edges>`"));
                };
                if fmt != "bip" {
                    return Err(err(line, format!("unknown format `{fmt}`, expected `bip`")));
                }
                let num = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("`{s}` is not a count")));
                header = Some((num(t)?, num(b)?, num(e)?, line));
            }
            "v" | "e" if header.is_none() => return Err(err(line, "body line before the `p` header")),
            "v" => {
                let [side, name] = rest[..] else {
                    return Err(err(line, "expected `v top|bottom <name>`"));
                };
                let side = match side {
                    "top" => Side::Top,
                    "bottom" => Side::Bottom,
                    other => return Err(err(line, format!("unknown layer `{other}`"))),
                };
                intern(&mut g, side, name);
            }
            "e" => {
                let [top, bottom] = rest[..] else {
                    return Err(err(line, "expected `e <top> <bottom>`"));
                };
                let t = intern(&mut g, Side::Top, top);
                let b = intern(&mut g, Side::Bottom, bottom);
                if g.has_edge(t, b) {
                    return Err(err(line, format!("duplicate edge {top} {bottom}")));
                }
                g.add_edge(t, b).map_err(|e| err(line, e.to_string()))?;
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }

    let Some((tops, bottoms, edges, line)) = header else {
        return Err(err(text.lines().count().max(1), "missing `p bip` header"));
    };
    let found = (g.layer(Side::Top).count(), g.layer(Side::Bottom).count(), g.edge_count());
    if found != (tops, bottoms, edges) {
        return Err(err(
            line,
            format!(
                "header declares {tops} tops, {bottoms} bottoms, {edges} edges; body has {}, {}, {}",
                found.0, found.1, found.2
            ),
        ));
    }
    Ok(g)
}

/// Writes every vertex as a `v` line in id order, then the edges, so that
/// parsing gives back the same ids.
pub fn serialize(g: &BipartiteGraph) -> String {
    let mut out = String::new();
    let tops = g.layer(Side::Top).count();
    let bottoms = g.layer(Side::Bottom).count();
    writeln!(out, "p bip {tops} {bottoms} {}", g.edge_count()).unwrap();
    for v in g.vertices() {
        let side = match g.side(v) {
            Some(Side::Top) => "top",
            _ => "bottom",
        };
        writeln!(out, "v {side} {}", g.label(v).unwrap_or("")).unwrap();
    }
    let mut edges: Vec<_> = g.edges().collect();
    edges.sort_unstable();
    for (t, b) in edges {
        writeln!(out, "e {} {}", g.label(t).unwrap_or(""), g.label(b).unwrap_or("")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = "c a 4-cycle\np bip 2 2 4\ne t1 b1\ne t2 b1\ne t2 b2\ne t1 b2\n";

    #[test]
    fn parses_a_cycle() {
        let g = parse(C4).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.label(VertexId(0)), Some("t1"));
        assert_eq!(g.side(VertexId(1)), Some(Side::Bottom));
    }

    #[test]
    fn round_trip() {
        let mut text = String::from(C4);
        text = text.replace("p bip 2 2 4", "p bip 3 2 4");
        text.push_str("v top lonely\n");
        let g = parse(&text).unwrap();
        let again = parse(&serialize(&g)).unwrap();
        assert_eq!(again, g);
        assert_eq!(serialize(&again), serialize(&g));
    }

    #[test]
    fn same_name_on_both_layers() {
        let g = parse("p bip 1 1 1\ne x x\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse("p bip 1 1\n").unwrap_err().line, 1);
        assert_eq!(parse("c x\np bip 1 1 1\ne t\n").unwrap_err().line, 3);
        assert_eq!(parse("e t b\n").unwrap_err().line, 1);
        assert_eq!(parse("p bip 1 1 2\ne t b\ne t b\n").unwrap_err().line, 3);
        let counts = parse("c\np bip 2 1 1\ne t b\n").unwrap_err();
        assert_eq!(counts.line, 2);
        assert!(counts.message.contains("declares"));
        assert!(parse("").is_err());
        assert!(parse("p bip 0 0 0\nx\n").is_err());
        assert!(parse("p bip 1 1 0\nv middle q\n").is_err());
    }
}
