//! Plain-text graph files.
//!
//! ```text
//! n m
//! u v          (m lines, 0 <= u < v < n)
//! rotations    (optional)
//! w w w ...    (n lines: clockwise neighbours of vertex 0, 1, ...)
//! colors       (optional, coloured graphs only)
//! u v c        (one line per edge, c in {1, 2})
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Embedding, Graph};
use crate::regularize::{ColoredGraph, EdgeColor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub rotation: Option<Embedding>,
    pub colors: Option<Vec<(usize, usize, EdgeColor)>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line_no: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(line_no, format!("expected an integer, got {t:?}")))
        })
        .collect()
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).collect();
    let mut pos = 0;
    let next_content = |pos: &mut usize| -> Option<(usize, &str)> {
        while *pos < lines.len() {
            let l = lines[*pos];
            *pos += 1;
            if !l.1.is_empty() {
                return Some(l);
            }
        }
        None
    };

    let (hl, header) = next_content(&mut pos).ok_or_else(|| parse_err(1, "empty input"))?;
    let nm = numbers(hl, header)?;
    let [n, m] = nm[..] else {
        return Err(parse_err(hl, "header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = next_content(&mut pos).ok_or_else(|| parse_err(lines.len(), "missing edge lines"))?;
        let uv = numbers(ln, l)?;
        let [u, v] = uv[..] else {
            return Err(parse_err(ln, "edge line must be `u v`"));
        };
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        edges.push((u, v));
    }
    let graph = Graph::new(n, edges).map_err(|e| parse_err(hl, e.to_string()))?;

    let mut rotation = None;
    let mut colors = None;
    while let Some((ln, l)) = next_content(&mut pos) {
        match l {
            "rotations" if rotation.is_none() => {
                let mut rot = Vec::with_capacity(n);
                for v in 0..n {
                    // rotation lines are positional, an isolated vertex has an empty one
                    let (rl, text) = lines
                        .get(pos)
                        .copied()
                        .ok_or_else(|| parse_err(ln, format!("missing rotation for vertex {v}")))?;
                    pos += 1;
                    rot.push(numbers(rl, text)?);
                }
                let emb = Embedding::for_graph(&graph, rot).map_err(|e| parse_err(ln, e.to_string()))?;
                rotation = Some(emb);
            }
            "colors" if colors.is_none() => {
                let mut list = Vec::with_capacity(graph.m());
                for _ in 0..graph.m() {
                    let (cl, text) =
                        next_content(&mut pos).ok_or_else(|| parse_err(ln, "missing colour lines"))?;
                    let uvc = numbers(cl, text)?;
                    let [u, v, c] = uvc[..] else {
                        return Err(parse_err(cl, "colour line must be `u v c`"));
                    };
                    if !graph.has_edge(u, v) {
                        return Err(parse_err(cl, format!("({u}, {v}) is not an edge")));
                    }
                    let c = u8::try_from(c).ok().and_then(EdgeColor::from_code);
                    let c = c.ok_or_else(|| parse_err(cl, "colour must be 1 or 2"))?;
                    list.push((u.min(v), u.max(v), c));
                }
                colors = Some(list);
            }
            other => return Err(parse_err(ln, format!("unexpected line {other:?}"))),
        }
    }
    Ok(GraphFile {
        graph,
        rotation,
        colors,
    })
}

pub fn write_graph(g: &Graph, rotation: Option<&Embedding>) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    if let Some(rho) = rotation {
        s.push_str("rotations\n");
        for r in rho.rotations() {
            let line: Vec<String> = r.iter().map(usize::to_string).collect();
            writeln!(s, "{}", line.join(" ")).unwrap();
        }
    }
    s
}

/// Graph, inherited rotations and a `colors` block.
pub fn write_colored(c: &ColoredGraph) -> String {
    let mut s = write_graph(c.graph(), Some(c.embedding()));
    s.push_str("colors\n");
    for (u, v, k) in c.colored_edges() {
        writeln!(s, "{u} {v} {k}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named;
    use crate::embed::embed_planar;
    use crate::regularize::regularize;

    #[test]
    fn parse_plain() {
        let f = parse_graph_file("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(f.graph, named::complete(4));
        assert!(f.rotation.is_none() && f.colors.is_none());
    }

    #[test]
    fn round_trip_with_rotations_and_colors() {
        let g = named::cube();
        let rho = embed_planar(&g).unwrap();
        let text = write_graph(&g, Some(&rho));
        let f = parse_graph_file(&text).unwrap();
        assert_eq!((f.graph, f.rotation), (g.clone(), Some(rho.clone())));

        let c = regularize(&g, &rho).unwrap();
        let f = parse_graph_file(&write_colored(&c)).unwrap();
        assert_eq!(&f.graph, c.graph());
        assert_eq!(f.rotation.as_ref(), Some(c.embedding()));
        let colors: Vec<EdgeColor> = f.colors.unwrap().iter().map(|x| x.2).collect();
        assert_eq!(colors, c.colors());
    }

    #[test]
    fn single_vertex_with_empty_rotation() {
        let f = parse_graph_file("1 0\nrotations\n\n").unwrap();
        assert_eq!(f.rotation.unwrap().rotation(0), &[] as &[usize]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("3\n", 1),
            ("3 2\n0 1\n", 2),
            ("3 1\n0 x\n", 2),
            ("3 1\n0 5\n", 2),
            ("3 1\n0 1\nbogus\n", 3),
            ("3 2\n0 1\n1 2\nrotations\n1\n0 2\n", 4),
            ("3 2\n0 1\n1 2\nrotations\n1\n2 0\n0 1\n", 4),
        ];
        for (text, line) in cases {
            match parse_graph_file(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} parsed as {other:?}"),
            }
        }
        assert!(parse_graph_file("2 2\n0 1\n1 0\n").is_err());
    }
}
