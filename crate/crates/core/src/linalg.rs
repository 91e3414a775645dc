//! Exact rank computation over the rationals and reduced simplicial homology.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination on dense
//! arbitrary-precision integer matrices, so every result is exact. The
//! matrices arising here are boundary maps of small complexes whose entries
//! start in `{-1, 0, 1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::SimplicialComplex;

/// Dense matrix with arbitrary-precision integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from rows of machine integers; rows must have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    /// Rank over the rationals by fraction-free Bareiss elimination with
    /// full pivoting. The input is left untouched.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |m: &Vec<BigInt>, r: usize, c: usize| -> BigInt { m[r * cols + c].clone() };

        let mut rank = 0;
        let mut prev = BigInt::one();
        while rank < rows && rank < cols {
            // Find a pivot in the remaining submatrix; prefer small entries
            // to slow coefficient growth.
            let mut pivot: Option<(usize, usize)> = None;
            'search: for r in rank..rows {
                for c in rank..cols {
                    let v = &m[r * cols + c];
                    if !v.is_zero() {
                        match pivot {
                            Some((pr, pc)) if m[pr * cols + pc].abs() <= v.abs() => {}
                            _ => pivot = Some((r, c)),
                        }
                        if v.abs().is_one() {
                            pivot = Some((r, c));
                            break 'search;
                        }
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break };
            if pr != rank {
                for c in 0..cols {
                    m.swap(pr * cols + c, rank * cols + c);
                }
            }
            if pc != rank {
                for r in 0..rows {
                    m.swap(r * cols + pc, r * cols + rank);
                }
            }
            let piv = at(&m, rank, rank);
            for r in rank + 1..rows {
                let head = at(&m, r, rank);
                for c in rank + 1..cols {
                    // Bareiss update: exact division by the previous pivot.
                    let v = (&piv * at(&m, r, c) - &head * at(&m, rank, c)) / &prev;
                    m[r * cols + c] = v;
                }
                m[r * cols + rank] = BigInt::zero();
            }
            prev = piv;
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Dimensions of reduced (co)homology, `k -> dim H~^k`, for `k >= -1`.
/// Over the rationals homology and cohomology dimensions agree, so one
/// profile serves both. Only nonzero dimensions are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    dims: BTreeMap<i32, u64>,
}

impl HomologyProfile {
    pub fn dim(&self, k: i32) -> u64 {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    /// Nonzero entries `(k, dim)` in increasing `k`.
    pub fn nonzero(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.dims.iter().map(|(&k, &d)| (k, d))
    }

    /// Reduced Euler characteristic `sum (-1)^k dim H~^k`.
    pub fn reduced_euler(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&k, &d)| if k.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Reduced homology dimensions of a simplicial complex over the rationals.
///
/// The augmented chain complex is used: the empty face is a (-1)-dimensional
/// generator, so the empty complex has `dim H~^{-1} = 1` and any nonempty
/// complex has `dim H~^{-1} = 0`. Faces are oriented by their sorted vertex
/// tuple; dropping the `p`-th vertex carries sign `(-1)^p`.
pub fn reduced_homology(complex: &SimplicialComplex) -> HomologyProfile {
    // faces[k] lists the (k-1)-dimensional faces (k-element subsets),
    // with faces[0] = [empty face].
    let faces = complex.faces_by_size();
    let top = faces.len(); // faces of size 0..top-1 exist

    // boundary[k]: C_{k-1-dim...}: map from k-element faces to (k-1)-element
    // faces, for k = 1..top-1. rank of the zero map out of size-0 faces is 0.
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        let source = &faces[k];
        let target = &faces[k - 1];
        if source.is_empty() || target.is_empty() {
            continue;
        }
        let index: BTreeMap<&[usize], usize> = target
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut d = IntMatrix::zeros(target.len(), source.len());
        for (col, face) in source.iter().enumerate() {
            for p in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(p);
                let row = index[sub.as_slice()];
                let sign = if p.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
                d.set(row, col, sign);
            }
        }
        ranks[k] = d.rank();
    }

    let mut dims = BTreeMap::new();
    for k in 0..top {
        // Chain degree of k-element faces is k-1.
        let n_k = faces[k].len();
        let h = n_k - ranks[k] - ranks[k + 1];
        if h > 0 {
            dims.insert(k as i32 - 1, h as u64);
        }
    }
    HomologyProfile { dims }
}
