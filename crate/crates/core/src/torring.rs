//! The partial ring structure of the Tor algebra of a simple 3-polytope
//! without 3-belts: generators in bidegrees (-1,4) and (-2,8), the product
//! rule between them, and the annihilator invariant `dim V`.
//!
//! Generators in bidegree (-1,4) correspond to non-adjacent facet pairs and
//! generators in bidegree (-2,8) to 4-belts. The product of two (-1,4)
//! generators is nonzero exactly when their pairs are the two diagonals of a
//! 4-belt. `V` is the subspace of the (-1,4) part annihilated by every
//! (-1,4) generator; since distinct belts give linearly independent products,
//! `dim V` is the number of non-adjacent pairs minus the number of distinct
//! belt diagonals. Everything here assumes no 3-belts, which is required for
//! the product rule, and fails loudly otherwise.
//!
//! In the total (moment-angle) grading, degree 6 combines the bidegrees
//! (-2,8) and (-4,10); a (-4,10) class can never be a product of two
//! (-1,4) classes for degree reasons, so the belt products above carry all
//! of the degree-6 multiplicative information compared here.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::json;

use crate::error::Error;
use crate::hochster::bigraded_betti;
use crate::poly::{Belt4, DualTriangulation};
use crate::Result;

/// Generator of the bidegree (-1,4) part: a non-adjacent facet pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Deg14Generator {
    /// Sorted facet pair.
    pub pair: (usize, usize),
}

impl Deg14Generator {
    /// Validate that the facets exist and do not intersect.
    pub fn new(t: &DualTriangulation, a: usize, b: usize) -> Result<Self> {
        if a >= t.m() || b >= t.m() || a == b {
            return Err(Error::InvalidGenerator(format!(
                "facet pair ({a}, {b}) out of range"
            )));
        }
        if t.is_adjacent(a, b) {
            return Err(Error::InvalidGenerator(format!(
                "facets {} and {} intersect; not a bidegree (-1,4) generator",
                t.label(a),
                t.label(b)
            )));
        }
        Ok(Deg14Generator {
            pair: (a.min(b), a.max(b)),
        })
    }
}

/// Generator of the bidegree (-2,8) part: a 4-belt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deg28Generator {
    pub belt: Belt4,
}

/// `dim V` report: the (-1,4) dimension, the distinct belt diagonals, and
/// their difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorReport {
    pub beta14: u64,
    /// Sorted union of the diagonal pairs of all 4-belts.
    pub diagonal_pairs: Vec<(usize, usize)>,
    pub dim_v: u64,
}

impl AnnihilatorReport {
    /// JSON with facet names: `{"beta14":…, "diagonal_pairs":[["b","d"],…], "dim_v":…}`.
    pub fn to_json(&self, t: &DualTriangulation) -> String {
        let pairs: Vec<[String; 2]> = self
            .diagonal_pairs
            .iter()
            .map(|&(a, b)| [t.label(a).to_string(), t.label(b).to_string()])
            .collect();
        json!({
            "beta14": self.beta14,
            "diagonal_pairs": pairs,
            "dim_v": self.dim_v,
        })
        .to_string()
    }
}

fn require_no_three_belts(t: &DualTriangulation) -> Result<()> {
    let count = t.three_belts().len();
    if count > 0 {
        return Err(Error::ThreeBeltsPresent(count));
    }
    Ok(())
}

/// Product of two (-1,4) generators: the belt generator indexed by their
/// union when the two pairs are the diagonals of a 4-belt, zero otherwise.
/// Requires the polytope to have no 3-belts.
pub fn product(
    t: &DualTriangulation,
    s: &Deg14Generator,
    u: &Deg14Generator,
) -> Result<Option<Deg28Generator>> {
    require_no_three_belts(t)?;
    // Revalidate the generators against this polytope.
    Deg14Generator::new(t, s.pair.0, s.pair.1)?;
    Deg14Generator::new(t, u.pair.0, u.pair.1)?;
    let mut facets = [s.pair.0, s.pair.1, u.pair.0, u.pair.1];
    facets.sort_unstable();
    if facets.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    for belt in t.four_belts() {
        if belt.facet_set() != facets {
            continue;
        }
        let diags: BTreeSet<(usize, usize)> = belt.diagonals.iter().copied().collect();
        if diags.contains(&s.pair) && diags.contains(&u.pair) {
            return Ok(Some(Deg28Generator { belt }));
        }
    }
    Ok(None)
}

/// The annihilator dimension `dim V = beta^{-1,4} - #(distinct belt
/// diagonals)`. Requires the polytope to have no 3-belts.
pub fn annihilator_dim(t: &DualTriangulation) -> Result<AnnihilatorReport> {
    require_no_three_belts(t)?;
    let beta14 = t.non_adjacent_pairs().len() as u64;
    let diagonals: BTreeSet<(usize, usize)> = t
        .four_belts()
        .iter()
        .flat_map(|b| b.diagonals.into_iter())
        .collect();
    let dim_v = beta14 - diagonals.len() as u64;
    Ok(AnnihilatorReport {
        beta14,
        diagonal_pairs: diagonals.into_iter().collect(),
        dim_v,
    })
}

/// Outcome of comparing two polytopes by Betti table and `dim V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingVerdict {
    /// The invariants differ, so the Tor algebras are not isomorphic.
    Distinguished,
    /// Every invariant computed here agrees; this does not prove the rings
    /// isomorphic.
    IndistinguishableByTheseInvariants,
}

impl fmt::Display for RingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingVerdict::Distinguished => write!(f, "distinguished"),
            RingVerdict::IndistinguishableByTheseInvariants => {
                write!(f, "indistinguishable-by-these-invariants")
            }
        }
    }
}

/// Compare two polytopes: `Distinguished` when the bigraded Betti tables or
/// the annihilator dimensions differ. Both polytopes must be free of
/// 3-belts.
pub fn rings_distinguished(
    p: &DualTriangulation,
    q: &DualTriangulation,
) -> Result<RingVerdict> {
    let dim_v_p = annihilator_dim(p)?.dim_v;
    let dim_v_q = annihilator_dim(q)?.dim_v;
    if bigraded_betti(p) != bigraded_betti(q) || dim_v_p != dim_v_q {
        Ok(RingVerdict::Distinguished)
    } else {
        Ok(RingVerdict::IndistinguishableByTheseInvariants)
    }
}
