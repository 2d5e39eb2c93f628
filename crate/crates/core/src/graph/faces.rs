use super::{Dart, EdgeId, FaceId, PolyhedralGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// From `endpoints(e)[0]` to `endpoints(e)[1]`.
    Forward,
    Backward,
}

/// A face as the closed walk of darts bounding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub boundary: Vec<(EdgeId, Direction)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        self.boundary.iter().map(|&(e, _)| e)
    }

    pub fn darts(&self) -> impl ExactSizeIterator<Item = Dart> + '_ {
        self.boundary.iter().map(|&(e, dir)| match dir {
            Direction::Forward => 2 * e,
            Direction::Backward => 2 * e + 1,
        })
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges().any(|x| x == e)
    }

    /// Boundary vertices in walk order (tail of each dart).
    pub fn vertices(&self, g: &PolyhedralGraph) -> Vec<VertexId> {
        self.darts().map(|d| g.tail(d)).collect()
    }

    /// Sorted edge ids of the boundary.
    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.sort_unstable();
        edges
    }
}

#[derive(Debug, Clone)]
pub(super) struct FaceSet {
    pub faces: Vec<Face>,
    pub face_of_dart: Vec<FaceId>,
}

impl FaceSet {
    pub fn trace(g: &PolyhedralGraph) -> Self {
        let darts = g.dart_count();
        let mut face_of_dart = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut d = start;
            // The successor map is a permutation of darts, so this closes up.
            loop {
                face_of_dart[d] = id;
                let dir = if d % 2 == 0 { Direction::Forward } else { Direction::Backward };
                boundary.push((d / 2, dir));
                d = g.face_successor(d);
                if d == start {
                    break;
                }
            }
            faces.push(Face { id, boundary });
        }
        Self { faces, face_of_dart }
    }
}

/// Traces the faces of the rotation system.
///
/// Every dart lies on exactly one face; faces are numbered by their smallest
/// dart, and each boundary starts at that dart. Well-formedness of the
/// rotation is a construction invariant of [`PolyhedralGraph`], so tracing
/// always closes.
pub fn trace_faces(g: &PolyhedralGraph) -> Vec<Face> {
    g.faces().to_vec()
}
