//! Bigraded Betti numbers of a simple polytope by summing reduced homology
//! of full subcomplexes over all facet subsets, and the moment-angle Betti
//! numbers obtained as diagonal sums.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::reduced_homology;
use crate::poly::DualTriangulation;
use crate::Result;

/// Table of bigraded Betti numbers: `(i, j) -> beta^{-i,2j}`. Absent cells
/// are zero. `m` is the facet count and `n` the polytope dimension (3 here).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    m: usize,
    n: usize,
    values: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(m: usize, n: usize) -> Self {
        BettiTable {
            m,
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.values.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.values.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            self.values.insert((i, j), value);
        } else {
            self.values.remove(&(i, j));
        }
    }

    /// Nonzero cells sorted by `(j, i)`.
    pub fn cells(&self) -> Vec<(usize, usize, u64)> {
        let mut cells: Vec<(usize, usize, u64)> =
            self.values.iter().map(|(&(i, j), &v)| (i, j, v)).collect();
        cells.sort_by_key(|&(i, j, _)| (j, i));
        cells
    }

    /// Merge another table into this one cell-wise.
    pub fn merge(&mut self, other: &BettiTable) {
        for (&(i, j), &v) in &other.values {
            self.add(i, j, v);
        }
    }

    /// CSV with header `i,j,beta`, nonzero cells only, sorted by `(j, i)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,beta\n");
        for (i, j, v) in self.cells() {
            out.push_str(&format!("{i},{j},{v}\n"));
        }
        out
    }

    /// Betti numbers of the moment-angle manifold: `beta^p` is the sum of
    /// all cells with `2j - i = p`, for `p = 0 ..= m + n`.
    pub fn moment_angle_betti(&self) -> Vec<u64> {
        let top = self
            .values
            .keys()
            .map(|&(i, j)| 2 * j - i)
            .max()
            .unwrap_or(0)
            .max(self.m + self.n);
        let mut out = vec![0u64; top + 1];
        for (&(i, j), &v) in &self.values {
            out[2 * j - i] += v;
        }
        out
    }

    /// The 7-component projection used by the 11-facet catalog:
    /// `(beta^{-1,4}, beta^{-2,6}, ..., beta^{-7,16})`.
    pub fn tuple(&self) -> Result<BettiTuple> {
        if self.m != 11 || self.n != 3 {
            return Err(Error::Unsupported(format!(
                "betti tuple is defined for m = 11, n = 3; got m = {}, n = {}",
                self.m, self.n
            )));
        }
        let mut t = [0u64; 7];
        for (k, slot) in t.iter_mut().enumerate() {
            *slot = self.get(k + 1, k + 2);
        }
        Ok(BettiTuple(t))
    }

    /// Cell-wise diff against another table: `(i, j, self, other)` for every
    /// cell where they differ.
    pub fn diff(&self, other: &BettiTable) -> Vec<(usize, usize, u64, u64)> {
        let mut keys: Vec<(usize, usize)> = self.values.keys().copied().collect();
        keys.extend(other.values.keys().copied());
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(i, j)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some((i, j, a, b))
            })
            .collect()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let cells: Vec<BettiCellJson> = self
            .cells()
            .into_iter()
            .map(|(i, j, beta)| BettiCellJson { i, j, beta })
            .collect();
        BettiTableJson { m: self.m, cells }.serialize(serializer)
    }
}

#[derive(Serialize, Deserialize)]
struct BettiTableJson {
    m: usize,
    cells: Vec<BettiCellJson>,
}

#[derive(Serialize, Deserialize)]
struct BettiCellJson {
    i: usize,
    j: usize,
    beta: u64,
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BettiTableJson::deserialize(deserializer)?;
        let mut table = BettiTable::new(raw.m, 3);
        for cell in raw.cells {
            table.add(cell.i, cell.j, cell.beta);
        }
        Ok(table)
    }
}

/// The seven catalog components `(beta^{-1,4}, beta^{-2,6}, ..., beta^{-7,16})`
/// of an 11-facet polytope. For 3-polytopes this diagonal determines the
/// whole bigraded table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BettiTuple(pub [u64; 7]);

impl fmt::Display for BettiTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Bigraded Betti numbers via full subcomplexes: iterate all `2^m` facet
/// subsets, compute reduced homology of the full subcomplex on each, and
/// accumulate `dim H~^{j-i-1}` into cell `(i, j = |sigma|)`. The result does
/// not depend on the iteration order (it is a sum of nonnegative integers).
pub fn bigraded_betti(t: &DualTriangulation) -> BettiTable {
    let m = t.m();
    (0u32..(1u32 << m))
        .into_par_iter()
        .fold(
            || BettiTable::new(m, 3),
            |mut table, mask| {
                accumulate_subset(t, mask, &mut table);
                table
            },
        )
        .reduce(
            || BettiTable::new(m, 3),
            |mut a, b| {
                a.merge(&b);
                a
            },
        )
}

/// Contribution of a single facet subset (given as a bitmask) to the table.
pub fn accumulate_subset(t: &DualTriangulation, mask: u32, table: &mut BettiTable) {
    let sigma: Vec<usize> = (0..t.m()).filter(|&v| mask & (1 << v) != 0).collect();
    let j = sigma.len();
    let profile = reduced_homology(&t.full_subcomplex(&sigma));
    for (k, dim) in profile.nonzero() {
        let i = j as i64 - k as i64 - 1;
        assert!(i >= 0, "homology degree exceeds subset size");
        table.add(i as usize, j, dim);
    }
}
