//! Independent oracle for the homology engine: ranks by naive Gaussian
//! elimination over exact rationals, compared against the fraction-free
//! integer route on exhaustively generated small complexes and on random
//! larger ones.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use torbelt::linalg::{reduced_homology, IntMatrix};
use torbelt::poly::SimplicialComplex;
use torbelt::rng::SplitMix64;

/// Row echelon rank over the rationals, no cleverness.
fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            let scaled: Vec<BigRational> =
                rows[rank][col..].iter().map(|x| x * &factor).collect();
            for (c, sub) in (col..ncols).zip(scaled) {
                rows[r][c] -= sub;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Reduced homology dimensions recomputed from scratch: boundary matrices
/// over `BigRational`, ranks by plain elimination.
fn naive_reduced_homology(complex: &SimplicialComplex) -> BTreeMap<i32, u64> {
    let faces = complex.faces_by_size();
    let top = faces.len();
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
        let mut rows = vec![vec![BigRational::zero(); source.len()]; target.len()];
        for (col, face) in source.iter().enumerate() {
            for p in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(p);
                let sign = if p % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                rows[index[sub.as_slice()]][col] = sign;
            }
        }
        ranks[k] = rational_rank(rows);
    }
    let mut dims = BTreeMap::new();
    for k in 0..top {
        let h = faces[k].len() - ranks[k] - ranks[k + 1];
        if h > 0 {
            dims.insert(k as i32 - 1, h as u64);
        }
    }
    dims
}

/// Reduced Euler characteristic straight from face counts.
fn reduced_euler_from_faces(complex: &SimplicialComplex) -> i64 {
    complex
        .faces_by_size()
        .iter()
        .enumerate()
        .map(|(size, faces)| {
            let sign = if size % 2 == 0 { -1i64 } else { 1 };
            sign * faces.len() as i64
        })
        .sum()
}

fn check_complex(complex: &SimplicialComplex) {
    let profile = reduced_homology(complex);
    let fast: BTreeMap<i32, u64> = profile.nonzero().collect();
    let naive = naive_reduced_homology(complex);
    assert_eq!(fast, naive, "homology mismatch on {complex:?}");
    assert_eq!(
        profile.reduced_euler(),
        reduced_euler_from_faces(complex),
        "euler mismatch on {complex:?}"
    );
}

/// Every downward-closed family of nonempty subsets of {0,1,2,3}.
fn all_complexes_on_four_vertices() -> Vec<SimplicialComplex> {
    let subsets: Vec<u16> = (1u16..16).collect(); // nonempty subsets of [4] as masks
    let mut out = Vec::new();
    'family: for family in 0u32..(1 << subsets.len()) {
        let members: Vec<u16> = subsets
            .iter()
            .enumerate()
            .filter(|(k, _)| family & (1 << k) != 0)
            .map(|(_, &s)| s)
            .collect();
        for &s in &members {
            for drop in 0..4 {
                let sub = s & !(1 << drop);
                if sub != 0 && sub != s && !members.contains(&sub) {
                    continue 'family;
                }
            }
        }
        let faces: Vec<Vec<usize>> = members
            .iter()
            .map(|&s| (0..4).filter(|&v| s & (1 << v) != 0).collect())
            .collect();
        out.push(SimplicialComplex::from_maximal_faces(std::iter::empty(), faces));
    }
    out
}

#[test]
fn exhaustive_small_complexes_match_rational_oracle() {
    let complexes = all_complexes_on_four_vertices();
    // All antichain-generated complexes on 4 labeled vertices, the empty
    // complex included.
    assert!(complexes.len() > 100);
    for c in &complexes {
        check_complex(c);
    }
}

#[test]
fn random_complexes_match_rational_oracle() {
    let mut rng = SplitMix64::new(0xbead);
    for _ in 0..300 {
        let n = 5 + rng.below(3); // 5..=7 vertices
        let n_faces = 1 + rng.below(6);
        let mut faces = Vec::new();
        for _ in 0..n_faces {
            let size = 1 + rng.below(4.min(n));
            faces.push(rng.sample_distinct(n, size));
        }
        // Sometimes declare extra isolated vertices.
        let extra: Vec<usize> = if rng.below(2) == 0 {
            let count = rng.below(n);
            rng.sample_distinct(n, count)
        } else {
            Vec::new()
        };
        check_complex(&SimplicialComplex::from_maximal_faces(extra, faces));
    }
}

#[test]
fn bareiss_rank_matches_rational_rank_on_random_matrices() {
    let mut rng = SplitMix64::new(0xfeed);
    for _ in 0..200 {
        let rows = 1 + rng.below(7);
        let cols = 1 + rng.below(7);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.below(11) as i64 - 5).collect())
            .collect();
        let int_rank = IntMatrix::from_rows(&data).rank();
        let rational: Vec<Vec<BigRational>> = data
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        assert_eq!(int_rank, rational_rank(rational), "on {data:?}");
    }
}

#[test]
fn sphere_and_torus_profiles() {
    // Boundary of the 3-simplex: a 2-sphere.
    let sphere = SimplicialComplex::from_maximal_faces(
        std::iter::empty(),
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    );
    let h = reduced_homology(&sphere);
    assert_eq!(h.dim(2), 1);
    assert_eq!(h.nonzero().count(), 1);
    check_complex(&sphere);

    // Wedge-like union: two triangles sharing one vertex.
    let wedge = SimplicialComplex::from_maximal_faces(
        std::iter::empty(),
        vec![
            vec![0, 1],
            vec![1, 2],
            vec![0, 2],
            vec![2, 3],
            vec![3, 4],
            vec![2, 4],
        ],
    );
    let h = reduced_homology(&wedge);
    assert_eq!(h.dim(1), 2);
    check_complex(&wedge);
}

#[test]
fn euler_holds_with_unsigned_overflow_guard() {
    // A complex whose homology vanishes entirely except in degree -1 must
    // have reduced Euler characteristic -1 from face counts too.
    let empty = SimplicialComplex::empty();
    assert_eq!(reduced_euler_from_faces(&empty), -1);
    assert_eq!(reduced_homology(&empty).reduced_euler(), -1);
}
