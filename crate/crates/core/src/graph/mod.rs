//! Polyhedral graphs given by a rotation system, their faces and planar duals.
//!
//! Every edge `e` carries two darts: `2e` runs from `endpoints(e)[0]` to
//! `endpoints(e)[1]` and `2e + 1` runs back. Rotations list incident edge ids
//! counterclockwise around each vertex.

mod connectivity;
mod dual;
mod faces;
mod format;
mod generate;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub use connectivity::{is_k_vertex_connected, validate_steinitz, ValidationReport};
pub use dual::{dual, DualPair};
pub use faces::{trace_faces, Direction, Face};
pub use format::{parse_embedding, parse_graph, to_polygraph};
pub use generate::{generate, kleetope, stack_faces, Family};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;
pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists itself as a neighbour (loop)")]
    Loop { vertex: VertexId },
    #[error("vertex {u} lists neighbour {v} more than once (parallel edge)")]
    ParallelEdge { u: VertexId, v: VertexId },
    #[error("vertex {vertex} is out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: VertexId, count: usize },
    #[error("edge {edge} ({u}-{v}) is missing from the rotation of one endpoint")]
    RotationInconsistent { edge: EdgeId, u: VertexId, v: VertexId },
    #[error("embedding is not spherical: V - E + F = {vertices} - {edges} + {faces} != 2")]
    NotSpherical { vertices: usize, edges: usize, faces: usize },
    #[error("graph is not 3-connected")]
    NotThreeConnected(Box<PolyhedralGraph>),
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("parameter {n:?} out of range for family {family}")]
    ParameterOutOfRange { family: String, n: Option<usize> },
    #[error("dual has a loop at primal edge {edge} (primal has a bridge)")]
    DualLoop { edge: EdgeId },
    #[error("dual has parallel edges between faces {a} and {b} (primal is not 3-connected)")]
    DualMultiEdge { a: FaceId, b: FaceId },
}

/// A simple graph with a rotation system.
///
/// Construction checks the simple-graph and rotation well-formedness
/// invariants. Sphericity and 3-connectivity are reported by
/// [`validate_steinitz`]; [`parse_graph`] and the generators enforce them.
#[derive(Clone)]
pub struct PolyhedralGraph {
    edges: Vec<[VertexId; 2]>,
    rotation: Vec<Vec<EdgeId>>,
    /// Index of each dart's edge in the rotation of the dart's tail.
    dart_pos: Vec<usize>,
    faces: OnceLock<faces::FaceSet>,
}

impl PolyhedralGraph {
    /// Builds a graph from counterclockwise neighbour lists.
    ///
    /// Edge ids are assigned in order of first appearance of each unordered
    /// pair when the lists are scanned vertex by vertex, the same numbering
    /// the polygraph text format uses.
    pub fn from_neighbors(neighbors: &[Vec<VertexId>]) -> Result<Self, GraphError> {
        let count = neighbors.len();
        if count == 0 {
            return Err(GraphError::Empty);
        }
        let mut ids: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
        let mut edges: Vec<[VertexId; 2]> = Vec::new();
        let mut seen_at: Vec<u8> = Vec::new();
        let mut rotation = Vec::with_capacity(count);
        for (v, list) in neighbors.iter().enumerate() {
            let mut row = Vec::with_capacity(list.len());
            for &u in list {
                if u >= count {
                    return Err(GraphError::VertexOutOfRange { vertex: u, count });
                }
                if u == v {
                    return Err(GraphError::Loop { vertex: v });
                }
                let key = (v.min(u), v.max(u));
                let id = *ids.entry(key).or_insert_with(|| {
                    edges.push([key.0, key.1]);
                    seen_at.push(0);
                    edges.len() - 1
                });
                let bit = if v == key.0 { 1 } else { 2 };
                if seen_at[id] & bit != 0 {
                    return Err(GraphError::ParallelEdge { u: v, v: u });
                }
                seen_at[id] |= bit;
                row.push(id);
            }
            rotation.push(row);
        }
        if let Some(edge) = seen_at.iter().position(|&s| s != 3) {
            let [u, v] = edges[edge];
            return Err(GraphError::RotationInconsistent { edge, u, v });
        }
        let mut dart_pos = vec![0; 2 * edges.len()];
        for (v, row) in rotation.iter().enumerate() {
            for (i, &e) in row.iter().enumerate() {
                let d = if edges[e][0] == v { 2 * e } else { 2 * e + 1 };
                dart_pos[d] = i;
            }
        }
        Ok(Self { edges, rotation, dart_pos, faces: OnceLock::new() })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = [VertexId; 2]> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.rotation.get(u)?.iter().copied().find(|&e| {
            let [a, b] = self.edges[e];
            (a == u && b == v) || (a == v && b == u)
        })
    }

    /// Incident edges of `v` in counterclockwise order.
    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Neighbours of `v` in counterclockwise order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        self.edges[d / 2][d % 2]
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.edges[d / 2][1 - d % 2]
    }

    /// The dart leaving `v` along `e`.
    pub fn dart_from(&self, v: VertexId, e: EdgeId) -> Dart {
        if self.edges[e][0] == v {
            2 * e
        } else {
            2 * e + 1
        }
    }

    /// Successor of `d` along its face: at the head, turn to the edge that
    /// precedes the reversed dart in the counterclockwise rotation.
    pub fn face_successor(&self, d: Dart) -> Dart {
        let v = self.head(d);
        let rot = &self.rotation[v];
        let back = self.dart_pos[d ^ 1];
        let e = rot[(back + rot.len() - 1) % rot.len()];
        self.dart_from(v, e)
    }

    /// Faces in deterministic order (by smallest dart).
    pub fn faces(&self) -> &[Face] {
        &self.face_set().faces
    }

    pub fn face_of_dart(&self, d: Dart) -> FaceId {
        self.face_set().face_of_dart[d]
    }

    /// The faces on either side of `e`: `[face of dart 2e, face of dart 2e+1]`.
    pub fn faces_of_edge(&self, e: EdgeId) -> [FaceId; 2] {
        let set = self.face_set();
        [set.face_of_dart[2 * e], set.face_of_dart[2 * e + 1]]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Counterclockwise neighbour lists, the inverse of [`Self::from_neighbors`].
    pub fn neighbor_lists(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count()).map(|v| self.neighbors(v).collect()).collect()
    }

    fn face_set(&self) -> &faces::FaceSet {
        self.faces.get_or_init(|| faces::FaceSet::trace(self))
    }
}

impl PartialEq for PolyhedralGraph {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges && self.rotation == other.rotation
    }
}

impl Eq for PolyhedralGraph {}

impl fmt::Debug for PolyhedralGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyhedralGraph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges)
            .field("rotation", &self.rotation)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_ids_follow_first_appearance() {
        let g = PolyhedralGraph::from_neighbors(&[
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap();
        assert_eq!(g.endpoints(0), [0, 1]);
        assert_eq!(g.endpoints(1), [0, 2]);
        assert_eq!(g.endpoints(2), [0, 3]);
        assert_eq!(g.endpoints(3), [1, 3]);
        assert_eq!(g.endpoints(4), [1, 2]);
        assert_eq!(g.endpoints(5), [2, 3]);
        assert_eq!(g.rotation(1), &[0, 3, 4]);
        assert_eq!(g.edge_between(3, 2), Some(5));
        assert_eq!(g.edge_between(3, 3), None);
    }

    #[test]
    fn structural_errors() {
        assert_eq!(PolyhedralGraph::from_neighbors(&[]).unwrap_err(), GraphError::Empty);
        assert_eq!(
            PolyhedralGraph::from_neighbors(&[vec![0]]).unwrap_err(),
            GraphError::Loop { vertex: 0 }
        );
        assert_eq!(
            PolyhedralGraph::from_neighbors(&[vec![1, 1], vec![0, 0]]).unwrap_err(),
            GraphError::ParallelEdge { u: 0, v: 1 }
        );
        assert_eq!(
            PolyhedralGraph::from_neighbors(&[vec![3]]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, count: 1 }
        );
        assert!(matches!(
            PolyhedralGraph::from_neighbors(&[vec![1, 2], vec![0], vec![]]).unwrap_err(),
            GraphError::RotationInconsistent { edge: 1, u: 0, v: 2 }
        ));
    }

    #[test]
    fn darts_and_successors() {
        let g = PolyhedralGraph::from_neighbors(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        for d in 0..g.dart_count() {
            assert_eq!(g.tail(d), g.head(d ^ 1));
            assert_eq!(g.tail(g.face_successor(d)), g.head(d));
        }
        assert_eq!(g.face_count(), 2);
        assert_eq!(g.euler_characteristic(), 2);
    }
}
