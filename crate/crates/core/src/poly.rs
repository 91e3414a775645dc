//! Simple 3-polytopes represented by their dual triangulations, and the
//! combinatorial features read off them: non-adjacent facet pairs, 3-belts
//! (non-facial triangles), 4-belts (chordless 4-cycles) and full
//! subcomplexes.
//!
//! All types are immutable after construction and every operation is pure.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::enumerate::RotationSystem;
use crate::error::Error;
use crate::Result;

/// Facet name: index within `[0, m)` plus a display name, a single
/// lowercase letter when `m <= 26` and the decimal index otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetLabel {
    index: usize,
    name: String,
}

impl FacetLabel {
    pub fn new(index: usize, m: usize) -> Self {
        FacetLabel {
            index,
            name: label_name(index, m),
        }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

/// Display name for facet `index` out of `m`.
pub fn label_name(index: usize, m: usize) -> String {
    if m <= 26 {
        ((b'a' + index as u8) as char).to_string()
    } else {
        index.to_string()
    }
}

/// Facet intersection relation of a simple 3-polytope: a symmetric,
/// irreflexive, connected graph on the facets. Neighbor lists keep the
/// order they were parsed in, which lets [`DualTriangulation::from_facet_graph`]
/// first try to read them as rotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetGraph {
    m: usize,
    rows: Vec<Vec<usize>>,
    adj: Vec<u32>,
    edge_count: usize,
}

impl FacetGraph {
    /// Parse the adjacency-row format: comma-separated lowercase-letter
    /// tokens, the n-th token listing the neighbors of the n-th letter.
    /// Whitespace is ignored.
    pub fn parse_adjacency_rows(text: &str) -> Result<FacetGraph> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::AdjacencyRows("empty input".into()));
        }
        let tokens: Vec<&str> = cleaned.split(',').collect();
        let m = tokens.len();
        if m > 26 {
            return Err(Error::AdjacencyRows(format!(
                "{m} rows, but letter rows support at most 26 facets"
            )));
        }
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(m);
        for (i, token) in tokens.iter().enumerate() {
            let row_name = label_name(i, m);
            if token.is_empty() {
                return Err(Error::AdjacencyRows(format!("row {row_name} is empty")));
            }
            let mut row = Vec::with_capacity(token.len());
            let mut seen = 0u32;
            for ch in token.chars() {
                if !ch.is_ascii_lowercase() {
                    return Err(Error::AdjacencyRows(format!(
                        "row {row_name} contains invalid character {ch:?}"
                    )));
                }
                let j = (ch as u8 - b'a') as usize;
                if j >= m {
                    return Err(Error::AdjacencyRows(format!(
                        "row {row_name} lists letter {ch}, out of range for m = {m}"
                    )));
                }
                if j == i {
                    return Err(Error::AdjacencyRows(format!(
                        "row {row_name} lists itself (self-adjacency)"
                    )));
                }
                if seen & (1 << j) != 0 {
                    return Err(Error::AdjacencyRows(format!(
                        "row {row_name} lists neighbor {ch} twice"
                    )));
                }
                seen |= 1 << j;
                row.push(j);
            }
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    /// Build from ordered neighbor lists, validating symmetry and
    /// connectivity.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<FacetGraph> {
        let m = rows.len();
        if m == 0 || m > 32 {
            return Err(Error::AdjacencyRows(format!("facet count {m} unsupported")));
        }
        let mut adj = vec![0u32; m];
        for (i, row) in rows.iter().enumerate() {
            for &j in row {
                if j >= m {
                    return Err(Error::AdjacencyRows(format!(
                        "row {} lists out-of-range facet {j}",
                        label_name(i, m)
                    )));
                }
                adj[i] |= 1 << j;
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for &j in row {
                if adj[j] & (1 << i) == 0 {
                    return Err(Error::AdjacencyRows(format!(
                        "asymmetric relation: {} lists {} but not conversely",
                        label_name(i, m),
                        label_name(j, m)
                    )));
                }
            }
        }
        let edge_count = adj.iter().map(|mask| mask.count_ones() as usize).sum::<usize>() / 2;
        let graph = FacetGraph { m, rows, adj, edge_count };
        if !graph.is_connected() {
            return Err(Error::AdjacencyRows("graph is not connected".into()));
        }
        Ok(graph)
    }

    /// Build from an undirected edge list; neighbor order is ascending.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<FacetGraph> {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
        for &(a, b) in edges {
            if a >= m || b >= m || a == b {
                return Err(Error::AdjacencyRows(format!("bad edge ({a}, {b})")));
            }
            sets[a].insert(b);
            sets[b].insert(a);
        }
        Self::from_rows(sets.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1 << j) != 0
    }

    /// Neighbor lists in their original order.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn adjacency_masks(&self) -> &[u32] {
        &self.adj
    }

    fn is_connected(&self) -> bool {
        let mut reached = 1u32;
        loop {
            let mut next = reached;
            for i in 0..self.m {
                if reached & (1 << i) != 0 {
                    next |= self.adj[i];
                }
            }
            if next == reached {
                break;
            }
            reached = next;
        }
        reached.count_ones() as usize == self.m
    }
}

/// Abstract simplicial complex stored as its maximal faces; the closure is
/// produced on demand. The vertex set may contain vertices that lie in no
/// listed face (they count as isolated 0-faces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<usize>,
    maximal: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The complex with no vertices at all; its only face is the empty face.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: BTreeSet::new(),
            maximal: Vec::new(),
        }
    }

    /// Normalize a face list: sort each face, drop duplicates and faces
    /// contained in a larger face.
    pub fn from_maximal_faces<V, F>(vertices: V, faces: F) -> Self
    where
        V: IntoIterator<Item = usize>,
        F: IntoIterator<Item = Vec<usize>>,
    {
        let mut vertices: BTreeSet<usize> = vertices.into_iter().collect();
        let mut normalized: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        normalized.sort();
        normalized.dedup();
        for f in &normalized {
            vertices.extend(f.iter().copied());
        }
        let mut maximal: Vec<Vec<usize>> = normalized
            .iter()
            .filter(|f| {
                !normalized
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|v| g.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        // Isolated vertices are maximal faces too.
        for &v in &vertices {
            if !maximal.iter().any(|f| f.binary_search(&v).is_ok()) {
                maximal.push(vec![v]);
            }
        }
        maximal.sort();
        SimplicialComplex { vertices, maximal }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn maximal_faces(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    /// Dimension: largest face size minus one; -1 for the empty complex.
    pub fn dim(&self) -> i32 {
        let top = self
            .maximal
            .iter()
            .map(|f| f.len())
            .max()
            .unwrap_or(usize::from(!self.vertices.is_empty()));
        top as i32 - 1
    }

    /// The full closure grouped by face size: entry `k` lists all faces with
    /// `k` vertices, sorted. Entry 0 is the empty face, which every complex
    /// has (including the empty complex).
    pub fn faces_by_size(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.maximal.iter().map(|f| f.len()).max().unwrap_or(0).max(
            usize::from(!self.vertices.is_empty()),
        );
        let mut by_size: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top + 1];
        by_size[0].insert(Vec::new());
        for &v in &self.vertices {
            by_size[1].insert(vec![v]);
        }
        for f in &self.maximal {
            for mask in 1u32..(1 << f.len()) {
                let sub: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                let k = sub.len();
                by_size[k].insert(sub);
            }
        }
        by_size
            .into_iter()
            .map(|set| set.into_iter().collect())
            .collect()
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        if f.is_empty() {
            return true;
        }
        if f.len() == 1 {
            return self.vertices.contains(&f[0]);
        }
        self.maximal
            .iter()
            .any(|g| f.iter().all(|v| g.binary_search(v).is_ok()))
    }
}

/// Three pairwise-adjacent facets that do not bound a common vertex of the
/// polytope: a non-facial triangle of the dual triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Belt3 {
    /// Sorted facet triple.
    pub facets: [usize; 3],
}

/// Chordless 4-cycle of facets. `cycle` lists them in cyclic adjacency
/// order; `diagonals` are the two non-adjacent (opposite) pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Belt4 {
    pub cycle: [usize; 4],
    pub diagonals: [(usize, usize); 2],
}

impl Belt4 {
    /// Sorted facet set of the belt.
    pub fn facet_set(&self) -> [usize; 4] {
        let mut s = self.cycle;
        s.sort_unstable();
        s
    }
}

/// The dual triangulation of a simple 3-polytope: a 3-connected sphere
/// triangulation whose vertices are the polytope's facets. This is the
/// single source of combinatorial truth for everything downstream.
#[derive(Debug, Clone)]
pub struct DualTriangulation {
    rotation: RotationSystem,
    faces: Vec<[usize; 3]>,
    labels: Vec<FacetLabel>,
    adj: Vec<u32>,
}

impl DualTriangulation {
    /// Validate a rotation system as a dual triangulation: every face a
    /// triangle, the face and edge counts of a sphere, and 3-connectivity.
    pub fn from_rotation_system(rotation: RotationSystem) -> Result<Self> {
        let m = rotation.n();
        if m < 4 {
            return Err(Error::NotTriangulation(format!(
                "{m} facets; a simple 3-polytope has at least 4"
            )));
        }
        if m > 32 {
            return Err(Error::Unsupported(format!(
                "facet count {m} exceeds the supported maximum of 32"
            )));
        }
        if !rotation.is_triangulation() {
            return Err(Error::NotTriangulation("a face is not a triangle".into()));
        }
        let faces = rotation.triangles();
        if faces.len() != 2 * m - 4 || rotation.edge_count() != 3 * m - 6 {
            return Err(Error::NotTriangulation(format!(
                "face/edge counts ({}, {}) violate Euler's relation",
                faces.len(),
                rotation.edge_count()
            )));
        }
        {
            let distinct: HashSet<[usize; 3]> = faces.iter().copied().collect();
            if distinct.len() != faces.len() {
                return Err(Error::NotTriangulation("repeated face".into()));
            }
        }
        let mut adj = vec![0u32; m];
        for (v, mask) in adj.iter_mut().enumerate() {
            for &u in rotation.rotation(v) {
                *mask |= 1 << u;
            }
        }
        let t = DualTriangulation {
            rotation,
            faces,
            labels: (0..m).map(|i| FacetLabel::new(i, m)).collect(),
            adj,
        };
        if let Some((a, b)) = t.separating_pair() {
            return Err(Error::NotTriangulation(format!(
                "not 3-connected: removing {{{}, {}}} disconnects the graph",
                t.label(a),
                t.label(b)
            )));
        }
        Ok(t)
    }

    /// Recover the triangulation from a facet graph. Neighbor rows are first
    /// read as rotations; if face tracing does not produce a triangulation
    /// the faces are found by exact-cover search over the graph's triangles.
    pub fn from_facet_graph(g: &FacetGraph) -> Result<Self> {
        let m = g.m();
        if m < 4 || g.edge_count() != 3 * m - 6 {
            return Err(Error::NotTriangulation(format!(
                "{} edges on {m} facets; a triangulation needs 3m-6 = {}",
                g.edge_count(),
                3 * m as i64 - 6
            )));
        }
        if let Ok(rs) = RotationSystem::new(g.rows().to_vec()) {
            if rs.is_triangulation() {
                return Self::from_rotation_system(rs);
            }
        }
        Self::from_facet_graph_unordered(g)
    }

    /// Recover the triangulation ignoring the row order entirely, by
    /// exact-cover search for a face assignment: 2m-4 triangles such that
    /// each edge lies in exactly two and each vertex link is a single cycle.
    pub fn from_facet_graph_unordered(g: &FacetGraph) -> Result<Self> {
        let m = g.m();
        if m < 4 || g.edge_count() != 3 * m - 6 {
            return Err(Error::NotTriangulation(format!(
                "{} edges on {m} facets; a triangulation needs 3m-6 = {}",
                g.edge_count(),
                3 * m as i64 - 6
            )));
        }
        let rs = exact_cover_embedding(m, g.adjacency_masks())?;
        Self::from_rotation_system(rs)
    }

    /// Build directly from a face list (test fixtures, generated data).
    pub fn from_faces(m: usize, faces: &[[usize; 3]]) -> Result<Self> {
        Self::from_rotation_system(RotationSystem::from_faces(m, faces)?)
    }

    pub fn m(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        self.labels[i].name()
    }

    pub fn labels(&self) -> &[FacetLabel] {
        &self.labels
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    /// Faces as sorted triples, in sorted order.
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1 << j) != 0
    }

    pub fn adjacency_masks(&self) -> &[u32] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.edge_count()
    }

    fn separating_pair(&self) -> Option<(usize, usize)> {
        let m = self.m();
        for a in 0..m {
            for b in a + 1..m {
                let removed = (1u32 << a) | (1 << b);
                let Some(start) = (0..m).find(|v| removed & (1 << v) == 0) else {
                    continue;
                };
                let mut reached = 1u32 << start;
                loop {
                    let mut next = reached;
                    for v in 0..m {
                        if reached & (1 << v) != 0 {
                            next |= self.adj[v] & !removed;
                        }
                    }
                    if next == reached {
                        break;
                    }
                    reached = next;
                }
                if reached.count_ones() as usize != m - 2 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// All unordered facet pairs that do not intersect, sorted.
    pub fn non_adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.m();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if !self.is_adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All non-facial triangles of the graph, sorted.
    pub fn three_belts(&self) -> Vec<Belt3> {
        let faces: HashSet<[usize; 3]> = self.faces.iter().copied().collect();
        let m = self.m();
        let mut out = Vec::new();
        for u in 0..m {
            for v in u + 1..m {
                if !self.is_adjacent(u, v) {
                    continue;
                }
                for w in v + 1..m {
                    if self.is_adjacent(u, w)
                        && self.is_adjacent(v, w)
                        && !faces.contains(&[u, v, w])
                    {
                        out.push(Belt3 { facets: [u, v, w] });
                    }
                }
            }
        }
        out
    }

    /// All chordless 4-cycles of the graph, sorted by facet set. The cycle
    /// representative starts at the smallest facet and continues with the
    /// smaller of its two cycle neighbors.
    pub fn four_belts(&self) -> Vec<Belt4> {
        let m = self.m();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    for d in c + 1..m {
                        let quad = [a, b, c, d];
                        // Count induced edges; a chordless 4-cycle has
                        // exactly 4 and every vertex meets exactly 2.
                        let cycle_like = quad.iter().all(|&x| {
                            quad.iter()
                                .filter(|&&y| y != x && self.is_adjacent(x, y))
                                .count()
                                == 2
                        });
                        if !cycle_like {
                            continue;
                        }
                        // a's neighbors within the quad, and its opposite.
                        let nbrs: Vec<usize> = quad[1..]
                            .iter()
                            .copied()
                            .filter(|&x| self.is_adjacent(a, x))
                            .collect();
                        let opposite = quad[1..]
                            .iter()
                            .copied()
                            .find(|&x| !self.is_adjacent(a, x))
                            .unwrap();
                        let (n1, n2) = (nbrs[0].min(nbrs[1]), nbrs[0].max(nbrs[1]));
                        out.push(Belt4 {
                            cycle: [a, n1, opposite, n2],
                            diagonals: [
                                (a, opposite),
                                (n1.min(n2), n1.max(n2)),
                            ],
                        });
                    }
                }
            }
        }
        out
    }

    /// Full subcomplex of the dual triangulation on the facet subset
    /// `sigma`: every face whose vertices all lie in `sigma`, plus isolated
    /// vertices of `sigma`.
    pub fn full_subcomplex(&self, sigma: &[usize]) -> SimplicialComplex {
        let mut mask = 0u32;
        for &v in sigma {
            assert!(v < self.m(), "facet index out of range");
            mask |= 1 << v;
        }
        let mut faces: Vec<Vec<usize>> = Vec::new();
        for f in &self.faces {
            let fmask = (1u32 << f[0]) | (1 << f[1]) | (1 << f[2]);
            if fmask & !mask == 0 {
                faces.push(f.to_vec());
            }
        }
        for i in 0..self.m() {
            if mask & (1 << i) == 0 {
                continue;
            }
            for j in i + 1..self.m() {
                if mask & (1 << j) != 0 && self.is_adjacent(i, j) {
                    faces.push(vec![i, j]);
                }
            }
        }
        let vertices = (0..self.m()).filter(|&v| mask & (1 << v) != 0);
        SimplicialComplex::from_maximal_faces(vertices, faces)
    }

    /// Adjacency-row text for this triangulation, rotation-ordered; only
    /// defined for `m <= 26`.
    pub fn to_adjacency_rows(&self) -> Result<String> {
        let m = self.m();
        if m > 26 {
            return Err(Error::Unsupported(format!(
                "adjacency rows use letters and support at most 26 facets, got {m}"
            )));
        }
        let rows: Vec<String> = (0..m)
            .map(|v| {
                self.rotation
                    .rotation(v)
                    .iter()
                    .map(|&u| self.label(u).to_string())
                    .collect::<String>()
            })
            .collect();
        Ok(rows.join(","))
    }

    /// Relabel facets by `perm` (`perm[v]` is the new index of `v`).
    pub fn relabel(&self, perm: &[usize]) -> Result<DualTriangulation> {
        Self::from_rotation_system(self.rotation.relabel(perm))
    }

    /// Parse a facet subset given as label names, e.g. `["b", "d"]`.
    pub fn facet_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.name() == name)
    }

    /// Render a belt as its cycle of facet names.
    pub fn belt4_names(&self, belt: &Belt4) -> Vec<String> {
        belt.cycle.iter().map(|&v| self.label(v).to_string()).collect()
    }
}

impl fmt::Display for DualTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualTriangulation(m={})", self.m())
    }
}

/// Exact-cover search for a sphere embedding of a graph given only its
/// adjacency: choose triangles of the graph so that every edge lies in
/// exactly two, then check the chosen faces close up into a sphere.
///
/// Errors with [`Error::AmbiguousFaces`] when two inequivalent valid face
/// assignments exist (impossible for 3-connected planar graphs, where the
/// embedding is unique up to reflection).
fn exact_cover_embedding(m: usize, adj: &[u32]) -> Result<RotationSystem> {
    let is_adj = |a: usize, b: usize| adj[a] & (1 << b) != 0;

    let mut candidates: Vec<[usize; 3]> = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            if !is_adj(u, v) {
                continue;
            }
            for w in v + 1..m {
                if is_adj(u, w) && is_adj(v, w) {
                    candidates.push([u, v, w]);
                }
            }
        }
    }

    let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
    for u in 0..m {
        for v in u + 1..m {
            if is_adj(u, v) {
                let id = edge_id.len();
                edge_id.insert((u, v), id);
            }
        }
    }
    let n_edges = edge_id.len();
    let cand_edges: Vec<[usize; 3]> = candidates
        .iter()
        .map(|&[u, v, w]| [edge_id[&(u, v)], edge_id[&(u, w)], edge_id[&(v, w)]])
        .collect();
    let mut edge_cands: Vec<Vec<usize>> = vec![Vec::new(); n_edges];
    for (ci, es) in cand_edges.iter().enumerate() {
        for &e in es {
            edge_cands[e].push(ci);
        }
    }

    struct Search<'a> {
        candidates: &'a [[usize; 3]],
        cand_edges: &'a [[usize; 3]],
        edge_cands: &'a [Vec<usize>],
        count: Vec<u8>,
        chosen: Vec<bool>,
        selected: Vec<usize>,
        solutions: Vec<BTreeSet<[usize; 3]>>,
        m: usize,
    }

    impl Search<'_> {
        fn usable(&self, ci: usize) -> bool {
            !self.chosen[ci] && self.cand_edges[ci].iter().all(|&e| self.count[e] < 2)
        }

        fn dfs(&mut self) {
            if self.solutions.len() >= 2 {
                return;
            }
            // Branch on the unsaturated edge with the fewest usable
            // triangles; a deterministic choice makes each cover appear
            // exactly once.
            let mut branch: Option<(usize, Vec<usize>)> = None;
            for e in 0..self.count.len() {
                if self.count[e] >= 2 {
                    continue;
                }
                let options: Vec<usize> = self.edge_cands[e]
                    .iter()
                    .copied()
                    .filter(|&ci| self.usable(ci))
                    .collect();
                if options.is_empty() {
                    return; // dead end
                }
                match &branch {
                    Some((_, best)) if best.len() <= options.len() => {}
                    _ => branch = Some((e, options)),
                }
            }
            let Some((_, options)) = branch else {
                // Every edge saturated: candidate solution; the sphere
                // condition (single-cycle links, coherent orientation) is
                // checked by the embedding reconstruction.
                let faces: Vec<[usize; 3]> =
                    self.selected.iter().map(|&ci| self.candidates[ci]).collect();
                if RotationSystem::from_faces(self.m, &faces).is_ok() {
                    let set: BTreeSet<[usize; 3]> = faces.into_iter().collect();
                    if !self.solutions.contains(&set) {
                        self.solutions.push(set);
                    }
                }
                return;
            };
            for ci in options {
                self.chosen[ci] = true;
                for &e in &self.cand_edges[ci] {
                    self.count[e] += 1;
                }
                self.selected.push(ci);
                self.dfs();
                self.selected.pop();
                for &e in &self.cand_edges[ci] {
                    self.count[e] -= 1;
                }
                self.chosen[ci] = false;
                if self.solutions.len() >= 2 {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        candidates: &candidates,
        cand_edges: &cand_edges,
        edge_cands: &edge_cands,
        count: vec![0; n_edges],
        chosen: vec![false; candidates.len()],
        selected: Vec::new(),
        solutions: Vec::new(),
        m,
    };
    search.dfs();
    match search.solutions.len() {
        0 => Err(Error::NotTriangulation(
            "no face assignment covers every edge twice".into(),
        )),
        1 => {
            let faces: Vec<[usize; 3]> = search.solutions[0].iter().copied().collect();
            RotationSystem::from_faces(m, &faces)
        }
        _ => Err(Error::AmbiguousFaces),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn tetra() -> DualTriangulation {
        DualTriangulation::from_facet_graph(
            &FacetGraph::parse_adjacency_rows("bcd,acd,abd,abc").unwrap(),
        )
        .unwrap()
    }

    pub(crate) fn octa() -> DualTriangulation {
        // Octahedron: poles 0 and 5, equator 1-2-4-3.
        DualTriangulation::from_faces(
            6,
            &[
                [0, 1, 2],
                [0, 2, 4],
                [0, 4, 3],
                [0, 3, 1],
                [5, 1, 2],
                [5, 2, 4],
                [5, 4, 3],
                [5, 3, 1],
            ],
        )
        .unwrap()
    }

    pub(crate) fn stacked_k4() -> DualTriangulation {
        DualTriangulation::from_faces(
            5,
            &[[0, 1, 4], [1, 2, 4], [0, 2, 4], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn parse_tetrahedron() {
        let g = FacetGraph::parse_adjacency_rows("bcd,acd,abd,abc").unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.edge_count(), 6);
        let t = DualTriangulation::from_facet_graph(&g).unwrap();
        assert_eq!(t.faces().len(), 4);
    }

    #[test]
    fn parse_rejects_bad_rows() {
        // Self-adjacency in row b.
        assert!(matches!(
            FacetGraph::parse_adjacency_rows("bc,ab,a"),
            Err(Error::AdjacencyRows(_))
        ));
        // Asymmetric: c lists b but b does not list c.
        assert!(matches!(
            FacetGraph::parse_adjacency_rows("bc,a,ab"),
            Err(Error::AdjacencyRows(_))
        ));
        // Letter out of range.
        assert!(matches!(
            FacetGraph::parse_adjacency_rows("be,a,a"),
            Err(Error::AdjacencyRows(_))
        ));
        // Duplicate neighbor.
        assert!(matches!(
            FacetGraph::parse_adjacency_rows("bbc,a,a"),
            Err(Error::AdjacencyRows(_))
        ));
        // Whitespace is fine.
        assert!(FacetGraph::parse_adjacency_rows(" bcd, acd , abd,abc\n").is_ok());
    }

    #[test]
    fn path_graph_parses_but_is_no_triangulation() {
        let g = FacetGraph::parse_adjacency_rows("bc,a,a").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(
            DualTriangulation::from_facet_graph(&g),
            Err(Error::NotTriangulation(_))
        ));
    }

    #[test]
    fn four_cycle_is_no_triangulation() {
        let g = FacetGraph::parse_adjacency_rows("bd,ac,bd,ac").unwrap();
        assert!(matches!(
            DualTriangulation::from_facet_graph(&g),
            Err(Error::NotTriangulation(_))
        ));
    }

    #[test]
    fn tetra_has_no_special_structure() {
        let t = tetra();
        assert!(t.non_adjacent_pairs().is_empty());
        assert!(t.three_belts().is_empty());
        assert!(t.four_belts().is_empty());
    }

    #[test]
    fn octa_counts() {
        let t = octa();
        assert_eq!(t.non_adjacent_pairs().len(), 3);
        assert!(t.three_belts().is_empty());
        assert_eq!(t.four_belts().len(), 3);
        for belt in t.four_belts() {
            let [d1, d2] = belt.diagonals;
            assert!(!t.is_adjacent(d1.0, d1.1));
            assert!(!t.is_adjacent(d2.0, d2.1));
            let mut all: Vec<usize> = vec![d1.0, d1.1, d2.0, d2.1];
            all.sort_unstable();
            assert_eq!(all, belt.facet_set().to_vec());
        }
    }

    #[test]
    fn stacked_k4_has_one_three_belt() {
        let t = stacked_k4();
        assert_eq!(t.three_belts(), vec![Belt3 { facets: [0, 1, 2] }]);
    }

    #[test]
    fn full_subcomplex_basics() {
        let t = octa();
        assert!(t.full_subcomplex(&[]).is_empty());
        let whole: Vec<usize> = (0..6).collect();
        let sphere = t.full_subcomplex(&whole);
        assert_eq!(sphere.dim(), 2);
        assert_eq!(sphere.maximal_faces().len(), 8);
        // Two antipodal vertices: no faces between them.
        let pair = t.full_subcomplex(&[0, 5]);
        assert_eq!(pair.maximal_faces(), [vec![0], vec![5]]);
    }

    #[test]
    fn unordered_recovery_matches_rotation_reading() {
        let rows = "bcd,acd,abd,abc";
        let g = FacetGraph::parse_adjacency_rows(rows).unwrap();
        let a = DualTriangulation::from_facet_graph(&g).unwrap();
        let b = DualTriangulation::from_facet_graph_unordered(&g).unwrap();
        assert_eq!(a.faces(), b.faces());
    }

    #[test]
    fn adjacency_rows_round_trip() {
        let t = octa();
        let rows = t.to_adjacency_rows().unwrap();
        let back = DualTriangulation::from_facet_graph(
            &FacetGraph::parse_adjacency_rows(&rows).unwrap(),
        )
        .unwrap();
        assert_eq!(back.faces(), t.faces());
    }
}
