//! Rotation systems for sphere embeddings, canonical codes, and
//! isomorph-free generation of 3-connected planar triangulations.
//!
//! Every 3-connected planar triangulation on at least five vertices arises
//! from a smaller one by splitting a vertex into an edge, so the generator
//! closes the tetrahedron under [`RotationSystem::vertex_split`] and removes
//! duplicates with canonical codes.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::error::Error;
use crate::Result;

/// Cyclic neighbor order around every vertex of a graph embedded in the
/// 2-sphere. Invariants are checked at construction: mutual adjacency,
/// minimum degree 3, connectivity, and genus 0 under face tracing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: Vec<Vec<usize>>,
}

/// Relabeling- and reflection-invariant fingerprint of an embedded graph.
///
/// The bytes are the lexicographically smallest breadth-first code over all
/// starting directed edges and both rotation senses. The byte layout is a
/// single planar_code record (vertex count, then 1-based neighbor lists each
/// terminated by 0), so a code can be decoded back into its canonical
/// representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Decode the canonical representative encoded in the code itself.
    pub fn to_rotation_system(&self) -> RotationSystem {
        let n = self.bytes[0] as usize;
        let mut rotation = vec![Vec::new(); n];
        let mut pos = 1;
        for rot in rotation.iter_mut() {
            while self.bytes[pos] != 0 {
                rot.push(self.bytes[pos] as usize - 1);
                pos += 1;
            }
            pos += 1;
        }
        RotationSystem::new(rotation).expect("canonical code encodes a valid rotation system")
    }
}

impl RotationSystem {
    /// Validate and wrap a rotation table.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotation.len();
        if n == 0 {
            return Err(Error::RotationSystem("no vertices".into()));
        }
        for (v, rot) in rotation.iter().enumerate() {
            if rot.len() < 3 {
                return Err(Error::RotationSystem(format!(
                    "vertex {v} has degree {} < 3",
                    rot.len()
                )));
            }
            let mut seen = HashSet::new();
            for &u in rot {
                if u >= n {
                    return Err(Error::RotationSystem(format!(
                        "vertex {v} lists out-of-range neighbor {u}"
                    )));
                }
                if u == v {
                    return Err(Error::RotationSystem(format!("vertex {v} lists itself")));
                }
                if !seen.insert(u) {
                    return Err(Error::RotationSystem(format!(
                        "vertex {v} lists neighbor {u} twice"
                    )));
                }
            }
        }
        // Mutual adjacency.
        for (v, rot) in rotation.iter().enumerate() {
            for &u in rot {
                if !rotation[u].contains(&v) {
                    return Err(Error::RotationSystem(format!(
                        "adjacency not symmetric: {v} lists {u} but not conversely"
                    )));
                }
            }
        }
        let rs = RotationSystem { rotation };
        if !rs.is_connected() {
            return Err(Error::RotationSystem("graph is not connected".into()));
        }
        // Face tracing must close up to a sphere.
        let faces = rs.trace_faces();
        let (v, e, f) = (rs.n() as i64, rs.edge_count() as i64, faces.len() as i64);
        if v - e + f != 2 {
            return Err(Error::RotationSystem(format!(
                "embedding has genus > 0: V={v} E={e} F={f}"
            )));
        }
        Ok(rs)
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.rotation[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == n
    }

    /// Walk all face orbits of the embedding. Each face is returned as its
    /// vertex cycle; the orbit of the directed edge `u -> v` continues with
    /// the successor of `u` in the rotation at `v`.
    pub fn trace_faces(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                pos[v].insert(u, i);
            }
        }
        let mut visited: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = Vec::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for &u in rot {
                if visited.contains(&(v, u)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, u);
                loop {
                    face.push(a);
                    visited.insert((a, b));
                    let p = pos[b][&a];
                    let next = self.rotation[b][(p + 1) % self.rotation[b].len()];
                    a = b;
                    b = next;
                    if (a, b) == (v, u) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// True when every face of the embedding is a triangle.
    pub fn is_triangulation(&self) -> bool {
        self.trace_faces().iter().all(|f| f.len() == 3)
    }

    /// Faces as sorted triples; only meaningful for triangulations.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out: Vec<[usize; 3]> = self
            .trace_faces()
            .iter()
            .map(|f| {
                assert_eq!(f.len(), 3, "not a triangulation");
                let mut t = [f[0], f[1], f[2]];
                t.sort_unstable();
                t
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// True when some triangle of the underlying graph is not a face.
    pub fn has_nonfacial_triangle(&self) -> bool {
        let faces: HashSet<[usize; 3]> = self.triangles().into_iter().collect();
        let adj: Vec<HashSet<usize>> = self
            .rotation
            .iter()
            .map(|r| r.iter().copied().collect())
            .collect();
        let n = self.n();
        for u in 0..n {
            for &v in &self.rotation[u] {
                if v <= u {
                    continue;
                }
                for &w in &self.rotation[u] {
                    if w <= v || !adj[v].contains(&w) {
                        continue;
                    }
                    if !faces.contains(&[u, v, w]) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Reconstruct a rotation system from an unoriented triangle list by
    /// propagating a coherent orientation across shared edges.
    pub fn from_faces(n: usize, faces: &[[usize; 3]]) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::RotationSystem("no faces".into()));
        }
        let mut edge_faces: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (fi, f) in faces.iter().enumerate() {
            let mut t = *f;
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] || t[2] >= n {
                return Err(Error::RotationSystem(format!("bad face {f:?}")));
            }
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                edge_faces.entry((a, b)).or_default().push(fi);
            }
        }
        for (e, fs) in &edge_faces {
            if fs.len() != 2 {
                return Err(Error::RotationSystem(format!(
                    "edge {e:?} lies in {} faces, expected 2",
                    fs.len()
                )));
            }
        }

        // Orient faces coherently: the two faces at an edge traverse it in
        // opposite directions.
        let mut oriented: Vec<Option<[usize; 3]>> = vec![None; faces.len()];
        oriented[0] = Some(faces[0]);
        let mut queue = VecDeque::from([0usize]);
        let mut placed = 1;
        while let Some(fi) = queue.pop_front() {
            let [a, b, c] = oriented[fi].unwrap();
            for (x, y) in [(a, b), (b, c), (c, a)] {
                let key = (x.min(y), x.max(y));
                let &other = edge_faces[&key].iter().find(|&&g| g != fi).unwrap();
                let f = faces[other];
                let z = f.iter().copied().find(|&t| t != x && t != y).unwrap();
                let want = [y, x, z];
                match oriented[other] {
                    None => {
                        oriented[other] = Some(want);
                        placed += 1;
                        queue.push_back(other);
                    }
                    Some(got) => {
                        let ok = (0..3).any(|r| {
                            got[r] == want[0]
                                && got[(r + 1) % 3] == want[1]
                                && got[(r + 2) % 3] == want[2]
                        });
                        if !ok {
                            return Err(Error::RotationSystem(
                                "faces cannot be oriented coherently".into(),
                            ));
                        }
                    }
                }
            }
        }
        if placed != faces.len() {
            return Err(Error::RotationSystem("face complex is not connected".into()));
        }

        // An oriented face (a,b,c) forces the orbit a->b->c->a, so at b the
        // rotation successor of a is c.
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for f in oriented.iter().map(|o| o.unwrap()) {
            let [a, b, c] = f;
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                if succ[y].insert(x, z).is_some_and(|old| old != z) {
                    return Err(Error::RotationSystem("inconsistent corner data".into()));
                }
            }
        }
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            if succ[v].is_empty() {
                return Err(Error::RotationSystem(format!("vertex {v} lies in no face")));
            }
            let start = *succ[v].keys().min().unwrap();
            let mut cur = start;
            loop {
                rotation[v].push(cur);
                cur = *succ[v].get(&cur).ok_or_else(|| {
                    Error::RotationSystem(format!("open link at vertex {v}"))
                })?;
                if cur == start {
                    break;
                }
                if rotation[v].len() > succ[v].len() {
                    return Err(Error::RotationSystem(format!(
                        "link of vertex {v} is not a single cycle"
                    )));
                }
            }
            if rotation[v].len() != succ[v].len() {
                return Err(Error::RotationSystem(format!(
                    "link of vertex {v} is not a single cycle"
                )));
            }
        }

        let rs = RotationSystem::new(rotation)?;
        // The traced face set must reproduce the input exactly.
        let mut input: Vec<[usize; 3]> = faces
            .iter()
            .map(|f| {
                let mut t = *f;
                t.sort_unstable();
                t
            })
            .collect();
        input.sort_unstable();
        input.dedup();
        if rs.triangles() != input {
            return Err(Error::RotationSystem(
                "reconstructed embedding does not reproduce the face list".into(),
            ));
        }
        Ok(rs)
    }

    /// Apply a vertex relabeling; `perm[v]` is the new name of `v`.
    pub fn relabel(&self, perm: &[usize]) -> RotationSystem {
        let n = self.n();
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation[v].iter().map(|&u| perm[u]).collect();
        }
        RotationSystem { rotation }
    }

    fn bfs_code(&self, root: usize, anchor: usize, reverse: bool, best: Option<&[u8]>) -> Option<Vec<u8>> {
        let n = self.n();
        let mut code = Vec::with_capacity(1 + n + 2 * self.edge_count());
        code.push(n as u8);
        let mut label = vec![0u8; n];
        let mut entry = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 1;
        label[anchor] = 2;
        entry[root] = anchor;
        entry[anchor] = root;
        order.push(root);
        order.push(anchor);
        let mut next_label = 3u8;
        let mut idx = 0;
        // Abort early once the code exceeds `best` on an equal prefix.
        let mut prefix_equal = true;
        let mut push = |code: &mut Vec<u8>, byte: u8| -> bool {
            code.push(byte);
            if let (Some(best), true) = (best, prefix_equal) {
                match byte.cmp(&best[code.len() - 1]) {
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Less => prefix_equal = false,
                    std::cmp::Ordering::Equal => {}
                }
            }
            true
        };
        while idx < order.len() {
            let w = order[idx];
            idx += 1;
            let rot = &self.rotation[w];
            let d = rot.len();
            let p0 = rot.iter().position(|&x| x == entry[w]).unwrap();
            for t in 0..d {
                let x = if reverse {
                    rot[(p0 + d - t) % d]
                } else {
                    rot[(p0 + t) % d]
                };
                if label[x] == 0 {
                    label[x] = next_label;
                    next_label += 1;
                    entry[x] = w;
                    order.push(x);
                }
                if !push(&mut code, label[x]) {
                    return None;
                }
            }
            if !push(&mut code, 0) {
                return None;
            }
        }
        Some(code)
    }

    /// Lexicographically smallest breadth-first code over every starting
    /// directed edge and both rotation senses, so equal codes mean the
    /// embedded graphs are isomorphic up to reflection.
    pub fn canonical_code(&self) -> CanonicalCode {
        let mut best: Option<Vec<u8>> = None;
        for v in 0..self.n() {
            for &u in &self.rotation[v] {
                for reverse in [false, true] {
                    if let Some(code) = self.bfs_code(v, u, reverse, best.as_deref()) {
                        match &best {
                            Some(b) if *b <= code => {}
                            _ => best = Some(code),
                        }
                    }
                }
            }
        }
        CanonicalCode { bytes: best.unwrap() }
    }

    /// Split vertex `v` into an edge. `p` and `q` are positions in the
    /// rotation at `v`; the neighbors at those positions become common
    /// neighbors of the two new vertices. The vertex keeps its index for the
    /// arc `p..=q` and the new vertex (index `n`) takes the rest.
    pub fn vertex_split(&self, v: usize, p: usize, q: usize) -> Result<RotationSystem> {
        let n = self.n();
        let rot = &self.rotation[v];
        let d = rot.len();
        if p >= d || q >= d {
            return Err(Error::VertexSplit(format!(
                "positions ({p}, {q}) out of range for degree {d}"
            )));
        }
        let len1 = (q + d - p) % d + 1;
        let len2 = (p + d - q) % d + 1;
        if len1 < 2 || len2 < 2 {
            return Err(Error::VertexSplit(
                "split would leave a vertex of degree < 3".into(),
            ));
        }
        let mut faces: Vec<[usize; 3]> = self
            .triangles()
            .into_iter()
            .filter(|t| !t.contains(&v))
            .collect();
        for t in 0..len1 - 1 {
            faces.push([v, rot[(p + t) % d], rot[(p + t + 1) % d]]);
        }
        for t in 0..len2 - 1 {
            faces.push([n, rot[(q + t) % d], rot[(q + t + 1) % d]]);
        }
        faces.push([v, n, rot[p]]);
        faces.push([v, n, rot[q]]);
        RotationSystem::from_faces(n + 1, &faces)
    }
}

/// The tetrahedron: the unique smallest triangulation and the seed of the
/// generator.
pub fn tetrahedron() -> RotationSystem {
    RotationSystem::from_faces(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
        .expect("K4 is a triangulation")
}

/// All 3-connected planar triangulations with `n` vertices, one per
/// isomorphism class (reflections identified), sorted by canonical code.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<RotationSystem>> {
    if !(4..=12).contains(&n) {
        return Err(Error::Unsupported(format!(
            "triangulation enumeration supports 4 <= n <= 12, got {n}"
        )));
    }
    let mut frontier: BTreeSet<CanonicalCode> = BTreeSet::new();
    frontier.insert(tetrahedron().canonical_code());
    for _ in 4..n {
        frontier = frontier
            .par_iter()
            .map(|code| {
                let parent = code.to_rotation_system();
                let mut children = BTreeSet::new();
                for v in 0..parent.n() {
                    let d = parent.degree(v);
                    for p in 0..d {
                        for q in p + 1..d {
                            let child = parent
                                .vertex_split(v, p, q)
                                .expect("distinct positions always split");
                            children.insert(child.canonical_code());
                        }
                    }
                }
                children
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
    }
    Ok(frontier.iter().map(|c| c.to_rotation_system()).collect())
}

/// Keep only triangulations without non-facial triangles (no 3-belts in the
/// polytope they are dual to).
pub fn filter_irreducible(list: &[RotationSystem]) -> Vec<RotationSystem> {
    list.iter()
        .filter(|rs| !rs.has_nonfacial_triangle())
        .cloned()
        .collect()
}

/// Group rotation systems by canonical code, keeping the first of each class.
pub fn dedup_by_code(list: Vec<RotationSystem>) -> Vec<RotationSystem> {
    let mut seen: BTreeMap<CanonicalCode, RotationSystem> = BTreeMap::new();
    for rs in list {
        seen.entry(rs.canonical_code()).or_insert(rs);
    }
    seen.into_values().collect()
}
