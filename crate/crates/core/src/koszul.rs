//! Independent computation of the bigraded Betti numbers straight from the
//! differential bigraded algebra `Λ[u_1..u_m] ⊗ k(P)`: exterior generators
//! `u_i` of bidegree (-1,2), polynomial generators `v_i` of bidegree (0,2),
//! differential `d(u_i) = v_i`, `d(v_i) = 0`, and monomials whose support is
//! not a face of the complex vanishing in the quotient.
//!
//! This route never looks at subcomplexes or their homology, so it serves
//! as an oracle for the subset-summation route in [`crate::hochster`].
//!
//! The differential preserves the fine multidegree (the exponent of each
//! variable, counting `u_i` like `v_i`), so the cochain complex in bidegree
//! column `2j` splits into one small block per multidegree of total degree
//! `j`. Ranks are computed block by block; the blocks stay tiny even where
//! the whole slice has dimension in the tens of thousands.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::Error;
use crate::hochster::BettiTable;
use crate::linalg::IntMatrix;
use crate::poly::{DualTriangulation, SimplicialComplex};
use crate::Result;

/// Face data of a Stanley-Reisner ring: which squarefree supports survive in
/// the quotient, plus the minimal non-faces generating the ideal.
#[derive(Debug, Clone)]
pub struct StanleyReisnerData {
    m: usize,
    faces: HashSet<u32>,
    face_masks: Vec<u32>,
    max_face_size: usize,
    minimal_nonfaces: Vec<Vec<usize>>,
}

impl StanleyReisnerData {
    pub fn from_triangulation(t: &DualTriangulation) -> Self {
        let m = t.m();
        let mut faces: HashSet<u32> = HashSet::new();
        faces.insert(0);
        for v in 0..m {
            faces.insert(1 << v);
        }
        for v in 0..m {
            for u in v + 1..m {
                if t.is_adjacent(v, u) {
                    faces.insert((1 << v) | (1 << u));
                }
            }
        }
        for f in t.faces() {
            faces.insert((1 << f[0]) | (1 << f[1]) | (1 << f[2]));
        }
        Self::from_face_masks(m, faces)
    }

    /// Variables `0..m`; every face of the complex must lie in that range.
    /// Variables that are not vertices of the complex give degree-one
    /// generators of the ideal.
    pub fn from_complex(m: usize, complex: &SimplicialComplex) -> Result<Self> {
        if let Some(&v) = complex.vertices().iter().find(|&&v| v >= m) {
            return Err(Error::Unsupported(format!(
                "complex vertex {v} out of range for m = {m}"
            )));
        }
        if m > 26 {
            return Err(Error::Unsupported(format!("m = {m} too large")));
        }
        let mut faces: HashSet<u32> = HashSet::new();
        for size in complex.faces_by_size() {
            for f in size {
                faces.insert(f.iter().fold(0u32, |acc, &v| acc | (1 << v)));
            }
        }
        faces.insert(0);
        Ok(Self::from_face_masks(m, faces))
    }

    fn from_face_masks(m: usize, faces: HashSet<u32>) -> Self {
        let max_face_size = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut face_masks: Vec<u32> = faces.iter().copied().collect();
        face_masks.sort_by_key(|f| (f.count_ones(), *f));
        let minimal_nonfaces = minimal_nonfaces(m, &faces, max_face_size);
        StanleyReisnerData {
            m,
            faces,
            face_masks,
            max_face_size,
            minimal_nonfaces,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max_face_size(&self) -> usize {
        self.max_face_size
    }

    pub fn is_face_mask(&self, mask: u32) -> bool {
        self.faces.contains(&mask)
    }

    pub fn is_face(&self, vertices: &[usize]) -> bool {
        let mask = vertices.iter().fold(0u32, |acc, &v| acc | (1 << v));
        self.is_face_mask(mask)
    }

    /// All face masks, sorted by size then value.
    pub fn face_masks(&self) -> &[u32] {
        &self.face_masks
    }

    /// Generators of the Stanley-Reisner ideal: inclusion-minimal non-faces,
    /// sorted.
    pub fn minimal_nonfaces(&self) -> &[Vec<usize>] {
        &self.minimal_nonfaces
    }
}

fn minimal_nonfaces(m: usize, faces: &HashSet<u32>, max_face_size: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    // A minimal non-face has all proper subsets faces, so its size is at
    // most max_face_size + 1.
    for size in 1..=(max_face_size + 1).min(m) {
        for subset in combinations(m, size) {
            let mask = subset.iter().fold(0u32, |acc, &v| acc | (1 << v));
            if faces.contains(&mask) {
                continue;
            }
            let minimal = subset.iter().all(|&v| faces.contains(&(mask & !(1 << v))));
            if minimal {
                out.push(subset);
            }
        }
    }
    out
}

/// All `k`-element subsets of `0..n`, lexicographically.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    combinations_of(&(0..n).collect::<Vec<_>>(), k)
}

/// All `k`-element subsets of `items`, in lexicographic index order.
fn combinations_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // Advance the combination.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != items.len() - k + pos {
                idx[pos] += 1;
                for later in pos + 1..k {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

/// Compositions of `total` into `parts` nonnegative summands.
fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; parts];
    fn rec(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, pos: usize, left: u32) {
        if pos + 1 == current.len() {
            current[pos] = left;
            out.push(current.clone());
            return;
        }
        for take in 0..=left {
            current[pos] = take;
            rec(out, current, pos + 1, left - take);
        }
    }
    rec(&mut out, &mut current, 0, total);
    out
}

/// Basis element `u_sigma ⊗ v^alpha` of the Koszul complex of the face
/// ring: `sigma` the sorted exterior support, `alpha` an exponent vector
/// whose support is a face. Bidegree `(-|sigma|, 2(|sigma| + |alpha|))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct KoszulBasisElement {
    pub sigma: Vec<usize>,
    pub alpha: Vec<u32>,
}

impl KoszulBasisElement {
    pub fn exterior_degree(&self) -> usize {
        self.sigma.len()
    }

    pub fn total_degree(&self) -> usize {
        self.sigma.len() + self.alpha.iter().sum::<u32>() as usize
    }
}

impl fmt::Display for KoszulBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{{")?;
        for (k, s) in self.sigma.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}} v^(")?;
        for (k, a) in self.alpha.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// One bidegree slice `(-i, 2j)` of the Koszul complex with its explicit
/// outgoing differential into `(-i+1, 2j)`. Intended for inspection and
/// small inputs; the Betti computation itself works blockwise and never
/// materializes these matrices.
#[derive(Debug, Clone)]
pub struct KoszulSlice {
    pub i: usize,
    pub j: usize,
    pub basis: Vec<KoszulBasisElement>,
    pub target_basis: Vec<KoszulBasisElement>,
    /// Matrix of `d`: columns indexed by `basis`, rows by `target_basis`.
    pub d_out: IntMatrix,
}

impl KoszulSlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl fmt::Display for KoszulSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "slice (-{}, {}): dim {}", self.i, 2 * self.j, self.basis.len())?;
        for (k, b) in self.basis.iter().enumerate() {
            writeln!(f, "  [{k}] {b}")?;
        }
        writeln!(f, "d -> (-{}, {}): {} x {}", self.i as i64 - 1, 2 * self.j, self.d_out.rows(), self.d_out.cols())?;
        write!(f, "{}", self.d_out)
    }
}

/// All exponent vectors of total degree `t` whose support is a face,
/// sorted lexicographically.
pub fn monomial_basis(sr: &StanleyReisnerData, t: u32) -> Vec<Vec<u32>> {
    let m = sr.m();
    if t == 0 {
        return vec![vec![0; m]];
    }
    let mut out = Vec::new();
    for &fmask in sr.face_masks() {
        let size = fmask.count_ones() as usize;
        if size == 0 || size > t as usize {
            continue;
        }
        let verts: Vec<usize> = (0..m).filter(|&v| fmask & (1 << v) != 0).collect();
        // Positive exponents on exactly these vertices.
        for extra in weak_compositions(t - size as u32, size) {
            let mut alpha = vec![0u32; m];
            for (k, &v) in verts.iter().enumerate() {
                alpha[v] = 1 + extra[k];
            }
            out.push(alpha);
        }
    }
    out.sort_unstable();
    out
}

fn slice_basis(sr: &StanleyReisnerData, i: usize, j: usize) -> Vec<KoszulBasisElement> {
    if i > j {
        return Vec::new();
    }
    let alphas = monomial_basis(sr, (j - i) as u32);
    let mut out = Vec::with_capacity(alphas.len() << 4);
    for sigma in combinations(sr.m(), i) {
        for alpha in &alphas {
            out.push(KoszulBasisElement {
                sigma: sigma.clone(),
                alpha: alpha.clone(),
            });
        }
    }
    out
}

/// Materialize the bidegree slice `(-i, 2j)` with its outgoing differential.
pub fn koszul_slice(sr: &StanleyReisnerData, i: usize, j: usize) -> KoszulSlice {
    let basis = slice_basis(sr, i, j);
    let target_basis = if i == 0 { Vec::new() } else { slice_basis(sr, i - 1, j) };
    let index: HashMap<(u32, &[u32]), usize> = target_basis
        .iter()
        .enumerate()
        .map(|(row, b)| {
            let mask = b.sigma.iter().fold(0u32, |acc, &v| acc | (1 << v));
            ((mask, b.alpha.as_slice()), row)
        })
        .collect();
    let mut d_out = IntMatrix::zeros(target_basis.len(), basis.len());
    for (col, b) in basis.iter().enumerate() {
        let sigma_mask = b.sigma.iter().fold(0u32, |acc, &v| acc | (1 << v));
        for (pos, &s) in b.sigma.iter().enumerate() {
            let mut alpha = b.alpha.clone();
            alpha[s] += 1;
            let support = alpha
                .iter()
                .enumerate()
                .fold(0u32, |acc, (v, &e)| if e > 0 { acc | (1 << v) } else { acc });
            if !sr.is_face_mask(support) {
                continue;
            }
            let row = index[&(sigma_mask & !(1 << s), alpha.as_slice())];
            let sign = if pos.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            d_out.set(row, col, sign);
        }
    }
    KoszulSlice {
        i,
        j,
        basis,
        target_basis,
        d_out,
    }
}

/// Dimension of the slice `(-i, 2j)` without materializing it.
pub fn slice_dim(sr: &StanleyReisnerData, i: usize, j: usize) -> usize {
    if i > j {
        return 0;
    }
    let monomials = monomial_basis(sr, (j - i) as u32).len();
    binomial(sr.m(), i) * monomials
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: usize = 1;
    for t in 0..k {
        out = out * (n - t) / (t + 1);
    }
    out
}

/// A fine multidegree `a` of total degree `j`: coordinates `>= 2` on the
/// face `high` (with multiplicities `mult`), exactly 1 on `ones`.
#[derive(Debug, Clone)]
struct Multidegree {
    ones_mask: u32,
    high_mask: u32,
    high_verts: Vec<usize>,
    mult: Vec<u32>,
}

impl Multidegree {
    fn total_degree(&self) -> usize {
        self.ones_mask.count_ones() as usize + self.mult.iter().sum::<u32>() as usize
    }
}

/// Basis of one multidegree block, grouped by exterior degree. An element
/// is `(leftover, sub)`: the exterior part is `(ones \ leftover) | sub` and
/// the monomial support is `high | leftover`, which must be a face.
type BlockLevels = BTreeMap<usize, Vec<(u32, u32)>>;

fn block_levels(sr: &StanleyReisnerData, md: &Multidegree) -> BlockLevels {
    let ones: Vec<usize> = (0..sr.m()).filter(|&v| md.ones_mask & (1 << v) != 0).collect();
    let high_size = md.high_verts.len();
    let cap = sr.max_face_size().saturating_sub(high_size);
    let mut levels: BlockLevels = BTreeMap::new();
    for leftover_size in 0..=cap.min(ones.len()) {
        for leftover in combinations_of(&ones, leftover_size) {
            let l_mask = leftover.iter().fold(0u32, |acc, &v| acc | (1 << v));
            if !sr.is_face_mask(md.high_mask | l_mask) {
                continue;
            }
            for s_mask_bits in 0..(1u32 << high_size) {
                let s_mask = md
                    .high_verts
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (k, &v)| {
                        if s_mask_bits & (1 << k) != 0 {
                            acc | (1 << v)
                        } else {
                            acc
                        }
                    });
                let level = ones.len() - leftover_size + s_mask.count_ones() as usize;
                levels.entry(level).or_default().push((l_mask, s_mask));
            }
        }
    }
    levels
}

/// Rank of the block differential from exterior degree `i` to `i - 1`.
fn block_rank(sr: &StanleyReisnerData, md: &Multidegree, levels: &BlockLevels, i: usize) -> usize {
    let Some(source) = levels.get(&i) else { return 0 };
    let Some(target) = (i >= 1).then(|| levels.get(&(i - 1))).flatten() else {
        return 0;
    };
    let index: HashMap<(u32, u32), usize> = target
        .iter()
        .enumerate()
        .map(|(row, &key)| (key, row))
        .collect();
    let mut matrix = IntMatrix::zeros(target.len(), source.len());
    for (col, &(l_mask, s_mask)) in source.iter().enumerate() {
        let sigma_mask = (md.ones_mask & !l_mask) | s_mask;
        let mut pos = 0usize;
        for v in 0..sr.m() {
            let bit = 1u32 << v;
            if sigma_mask & bit == 0 {
                continue;
            }
            // Dropping v from sigma adds one to the exponent of v.
            let target_key = if md.ones_mask & bit != 0 {
                let l2 = l_mask | bit;
                if sr.is_face_mask(md.high_mask | l2) {
                    Some((l2, s_mask))
                } else {
                    None
                }
            } else {
                Some((l_mask, s_mask & !bit))
            };
            if let Some(key) = target_key {
                let row = index[&key];
                let sign = if pos.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
                matrix.set(row, col, sign);
            }
            pos += 1;
        }
    }
    matrix.rank()
}

/// Betti contributions `(i, count)` of one multidegree block.
fn block_betti(sr: &StanleyReisnerData, md: &Multidegree) -> Vec<(usize, u64)> {
    let levels = block_levels(sr, md);
    let Some(&max_i) = levels.keys().max() else {
        return Vec::new();
    };
    let ranks: Vec<usize> = (0..=max_i + 1)
        .map(|i| {
            if (1..=max_i).contains(&i) {
                block_rank(sr, md, &levels, i)
            } else {
                0
            }
        })
        .collect();
    let mut out = Vec::new();
    for (&i, elements) in &levels {
        let dim = elements.len();
        let beta = dim as i64 - ranks[i] as i64 - ranks[i + 1] as i64;
        debug_assert!(beta >= 0, "negative block homology");
        if beta > 0 {
            out.push((i, beta as u64));
        }
    }
    out
}

/// All multidegrees of total degree `j` whose block is nonempty: the
/// coordinates `>= 2` must together form a face.
fn multidegrees(sr: &StanleyReisnerData, j: usize) -> Vec<Multidegree> {
    let m = sr.m();
    let mut out = Vec::new();
    for &high_mask in sr.face_masks() {
        let high_verts: Vec<usize> = (0..m).filter(|&v| high_mask & (1 << v) != 0).collect();
        let h = high_verts.len();
        if 2 * h > j {
            continue;
        }
        let complement: Vec<usize> = (0..m).filter(|&v| high_mask & (1 << v) == 0).collect();
        for s in (2 * h)..=j {
            let ones_count = j - s;
            if ones_count > complement.len() {
                continue;
            }
            if h == 0 && s > 0 {
                break;
            }
            for extra in weak_compositions((s - 2 * h) as u32, h) {
                let mult: Vec<u32> = extra.iter().map(|&e| e + 2).collect();
                for ones in combinations_of(&complement, ones_count) {
                    let ones_mask = ones.iter().fold(0u32, |acc, &v| acc | (1 << v));
                    let md = Multidegree {
                        ones_mask,
                        high_mask,
                        high_verts: high_verts.clone(),
                        mult: mult.clone(),
                    };
                    debug_assert_eq!(md.total_degree(), j);
                    out.push(md);
                }
            }
        }
    }
    out
}

/// Rank of the full differential out of slice `(-i, 2j)`, summed over
/// multidegree blocks.
pub fn slice_rank(sr: &StanleyReisnerData, i: usize, j: usize) -> usize {
    multidegrees(sr, j)
        .par_iter()
        .map(|md| {
            let levels = block_levels(sr, md);
            block_rank(sr, md, &levels, i)
        })
        .sum()
}

/// Betti numbers of the face ring computed from the Koszul differential,
/// assembled per multidegree block.
pub fn tor_betti_for_data(
    sr: &StanleyReisnerData,
    n: usize,
    cells: Option<&[(usize, usize)]>,
) -> BettiTable {
    let m = sr.m();
    let js: Vec<usize> = match cells {
        Some(cells) => {
            let mut js: Vec<usize> = cells.iter().map(|&(_, j)| j).collect();
            js.sort_unstable();
            js.dedup();
            js
        }
        None => (0..=m).collect(),
    };
    let mut table = js
        .par_iter()
        .flat_map_iter(|&j| multidegrees(sr, j).into_iter().map(move |md| (j, md)))
        .fold(
            || BettiTable::new(m, n),
            |mut table, (j, md)| {
                for (i, beta) in block_betti(sr, &md) {
                    table.add(i, j, beta);
                }
                table
            },
        )
        .reduce(
            || BettiTable::new(m, n),
            |mut a, b| {
                a.merge(&b);
                a
            },
        );
    if let Some(cells) = cells {
        let keep: HashSet<(usize, usize)> = cells.iter().copied().collect();
        let mut filtered = BettiTable::new(m, n);
        for (i, j, v) in table.cells() {
            if keep.contains(&(i, j)) {
                filtered.add(i, j, v);
            }
        }
        table = filtered;
    }
    table
}

/// Oracle entry point: Betti table of a polytope via the Koszul
/// differential. `cells` restricts the computation; the default is every
/// cell with `j <= m`.
pub fn tor_betti_via_koszul(
    t: &DualTriangulation,
    cells: Option<&[(usize, usize)]>,
) -> BettiTable {
    tor_betti_for_data(&StanleyReisnerData::from_triangulation(t), 3, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochster::bigraded_betti;
    use crate::poly::{DualTriangulation, FacetGraph};

    fn tetra() -> DualTriangulation {
        DualTriangulation::from_facet_graph(
            &FacetGraph::parse_adjacency_rows("bcd,acd,abd,abc").unwrap(),
        )
        .unwrap()
    }

    fn octa() -> DualTriangulation {
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

    /// Two disjoint points: the smallest complex with a nonzero (-1,4) cell.
    fn two_points() -> StanleyReisnerData {
        let c = SimplicialComplex::from_maximal_faces([0, 1], [vec![0], vec![1]]);
        StanleyReisnerData::from_complex(2, &c).unwrap()
    }

    #[test]
    fn monomial_basis_small_cases() {
        let sr = two_points();
        assert_eq!(monomial_basis(&sr, 0), vec![vec![0, 0]]);
        assert_eq!(monomial_basis(&sr, 2), vec![vec![0, 2], vec![2, 0]]);
        assert_eq!(sr.minimal_nonfaces(), &[vec![0, 1]]);
    }

    #[test]
    fn monomial_count_octahedron_degree_two() {
        let sr = StanleyReisnerData::from_triangulation(&octa());
        // 6 squares plus one product per edge.
        assert_eq!(monomial_basis(&sr, 2).len(), 6 + 12);
    }

    #[test]
    fn tetrahedron_minimal_nonface_is_everything() {
        let sr = StanleyReisnerData::from_triangulation(&tetra());
        assert_eq!(sr.minimal_nonfaces(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn slice_zero_has_no_outgoing_differential() {
        let sr = two_points();
        let slice = koszul_slice(&sr, 0, 2);
        assert_eq!(slice.d_out.rows(), 0);
        assert_eq!(slice.dim(), 2);
    }

    #[test]
    fn two_points_slice_minus_one_four() {
        let sr = two_points();
        let slice = koszul_slice(&sr, 1, 2);
        // u_0 v_0, u_0 v_1, u_1 v_0, u_1 v_1.
        assert_eq!(slice.dim(), 4);
        // d kills the crossed terms (their image support {0,1} is not a
        // face) and sends u_i v_i to v_i^2.
        assert_eq!(slice.d_out.rank(), 2);
        let incoming = koszul_slice(&sr, 2, 2);
        assert_eq!(incoming.dim(), 1);
        assert_eq!(incoming.d_out.rank(), 1);
        // dim ker - rank in = (4 - 2) - 1 = 1 = beta^{-1,4}.
        let table = tor_betti_for_data(&sr, 0, None);
        assert_eq!(table.get(1, 2), 1);
    }

    #[test]
    fn d_squared_vanishes_on_materialized_slices() {
        let sr = StanleyReisnerData::from_triangulation(&octa());
        for j in 0..=4usize {
            for i in 1..j {
                let outer = koszul_slice(&sr, i - 1, j);
                let inner = koszul_slice(&sr, i, j);
                if inner.dim() == 0 || outer.dim() == 0 {
                    continue;
                }
                assert!(outer.d_out.mul(&inner.d_out).is_zero(), "d∘d != 0 at ({i},{j})");
            }
        }
    }

    #[test]
    fn blocked_ranks_match_materialized_ranks() {
        for sr in [
            StanleyReisnerData::from_triangulation(&tetra()),
            StanleyReisnerData::from_triangulation(&octa()),
            two_points(),
        ] {
            for j in 0..=sr.m().min(5) {
                for i in 0..=j {
                    let slice = koszul_slice(&sr, i, j);
                    assert_eq!(
                        slice.d_out.rank(),
                        slice_rank(&sr, i, j),
                        "mismatch at ({i}, {j})"
                    );
                    assert_eq!(slice.dim(), slice_dim(&sr, i, j));
                }
            }
        }
    }

    #[test]
    fn tetrahedron_betti_via_koszul() {
        let table = tor_betti_via_koszul(&tetra(), None);
        assert_eq!(table.get(0, 0), 1);
        assert_eq!(table.get(1, 4), 1);
        assert_eq!(table.cells().len(), 2);
    }

    #[test]
    fn octahedron_oracle_equivalence() {
        let t = octa();
        assert_eq!(tor_betti_via_koszul(&t, None), bigraded_betti(&t));
    }

    #[test]
    fn cell_restriction() {
        let t = tetra();
        let table = tor_betti_via_koszul(&t, Some(&[(1, 4)]));
        assert_eq!(table.get(1, 4), 1);
        assert_eq!(table.cells().len(), 1);
    }
}
