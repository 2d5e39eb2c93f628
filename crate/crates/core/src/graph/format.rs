//! The `polygraph 1` text format.
//!
//! ```text
//! polygraph 1
//! vertices 4
//! v 0: 1 2 3      # neighbours of 0, counterclockwise
//! v 1: 0 3 2
//! v 2: 0 1 3
//! v 3: 0 2 1
//! ```

use std::fmt::Write;

use super::{validate_steinitz, GraphError, PolyhedralGraph, VertexId};

/// Parses and fully validates a polyhedral graph.
///
/// A spherical but not 3-connected embedding yields
/// [`GraphError::NotThreeConnected`] carrying the graph, so its faces can
/// still be inspected.
pub fn parse_graph(text: &str) -> Result<PolyhedralGraph, GraphError> {
    let g = parse_embedding(text)?;
    let report = validate_steinitz(&g);
    if !report.planar_spherical {
        return Err(GraphError::NotSpherical {
            vertices: report.vertices,
            edges: report.edges,
            faces: report.faces,
        });
    }
    if !report.three_connected {
        return Err(GraphError::NotThreeConnected(Box::new(g)));
    }
    Ok(g)
}

/// Parses the rotation system, checking only syntax and rotation
/// well-formedness.
pub fn parse_embedding(text: &str) -> Result<PolyhedralGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let syntax = |line: usize, message: String| GraphError::Syntax { line, message };

    let (line, header) = lines.next().ok_or_else(|| syntax(0, "empty input".into()))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["polygraph", "1"] {
        return Err(syntax(line, format!("expected `polygraph 1`, found {header:?}")));
    }
    let (line, count_line) =
        lines.next().ok_or_else(|| syntax(line, "missing `vertices N` line".into()))?;
    let count = match count_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["vertices", n] => n
            .parse::<usize>()
            .map_err(|_| syntax(line, format!("bad vertex count {n:?}")))?,
        _ => return Err(syntax(line, format!("expected `vertices N`, found {count_line:?}"))),
    };

    let mut neighbors: Vec<Option<Vec<VertexId>>> = vec![None; count];
    for (line, text) in lines {
        let (head, tail) = text
            .split_once(':')
            .ok_or_else(|| syntax(line, format!("expected `v <i>: ...`, found {text:?}")))?;
        let vertex = match head.split_whitespace().collect::<Vec<_>>()[..] {
            ["v", i] => i
                .parse::<usize>()
                .map_err(|_| syntax(line, format!("bad vertex index {i:?}")))?,
            _ => return Err(syntax(line, format!("expected `v <i>:`, found {head:?}"))),
        };
        if vertex >= count {
            return Err(syntax(line, format!("vertex {vertex} out of range (N = {count})")));
        }
        if neighbors[vertex].is_some() {
            return Err(syntax(line, format!("vertex {vertex} listed twice")));
        }
        let list = tail
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| syntax(line, format!("bad neighbour {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        neighbors[vertex] = Some(list);
    }
    let neighbors = neighbors
        .into_iter()
        .enumerate()
        .map(|(v, list)| list.ok_or_else(|| syntax(0, format!("no rotation line for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    PolyhedralGraph::from_neighbors(&neighbors)
}

/// Writes `g` in polygraph format. Re-parsing yields an identical graph,
/// edge ids included.
pub fn to_polygraph(g: &PolyhedralGraph) -> String {
    let mut out = String::new();
    writeln!(out, "polygraph 1").unwrap();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for v in 0..g.vertex_count() {
        write!(out, "v {v}:").unwrap();
        for u in g.neighbors(v) {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    out
}
