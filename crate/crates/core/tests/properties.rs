//! Cross-module invariants: counting identities, belt/Betti agreements,
//! oracle equivalences on small inputs, and the named example values of the
//! built-in catalog.

use std::collections::BTreeSet;

use proptest::prelude::*;

use torbelt::catalog::{load_table2, table2_row};
use torbelt::enumerate::enumerate_triangulations;
use torbelt::hochster::bigraded_betti;
use torbelt::koszul::{monomial_basis, tor_betti_via_koszul, StanleyReisnerData};
use torbelt::linalg::{reduced_homology, IntMatrix};
use torbelt::poly::{DualTriangulation, FacetGraph};
use torbelt::rng::SplitMix64;
use torbelt::torring::{annihilator_dim, product, rings_distinguished, Deg14Generator, RingVerdict};

fn pair(t: &DualTriangulation, a: &str, b: &str) -> Deg14Generator {
    Deg14Generator::new(
        t,
        t.facet_index(a).unwrap(),
        t.facet_index(b).unwrap(),
    )
    .unwrap()
}

#[test]
fn non_adjacent_pair_count_formula_everywhere() {
    for n in 4..=8usize {
        for rs in enumerate_triangulations(n).unwrap() {
            let t = DualTriangulation::from_rotation_system(rs).unwrap();
            let m = t.m();
            assert_eq!(
                t.non_adjacent_pairs().len(),
                m * (m - 1) / 2 - (3 * m - 6)
            );
        }
    }
}

#[test]
fn three_belt_count_equals_hochster_cell_up_to_nine_vertices() {
    for n in 4..=9usize {
        for rs in enumerate_triangulations(n).unwrap() {
            let has_nonfacial = rs.has_nonfacial_triangle();
            let t = DualTriangulation::from_rotation_system(rs).unwrap();
            let belts = t.three_belts().len() as u64;
            assert_eq!(bigraded_betti(&t).get(1, 3), belts, "n = {n}");
            assert_eq!(has_nonfacial, belts > 0);
        }
    }
}

#[test]
fn four_belt_count_equals_betti_cell_on_catalog() {
    for e in load_table2().unwrap() {
        let t = &e.triangulation;
        let betti = bigraded_betti(t);
        assert_eq!(betti.get(1, 2), 28, "{}", e.id);
        assert_eq!(betti.get(2, 3), 105, "{}", e.id);
        assert_eq!(betti.get(2, 4), t.four_belts().len() as u64, "{}", e.id);
        // Belt diagonals partition the belt and avoid the edge set.
        for belt in t.four_belts() {
            let [d1, d2] = belt.diagonals;
            assert!(!t.is_adjacent(d1.0, d1.1));
            assert!(!t.is_adjacent(d2.0, d2.1));
            let mut members = vec![d1.0, d1.1, d2.0, d2.1];
            members.sort_unstable();
            assert_eq!(members, belt.facet_set().to_vec());
        }
    }
}

#[test]
fn belt_subcomplexes_are_circles() {
    for row in [12, 24] {
        let t = table2_row(row).unwrap();
        for belt in t.four_belts() {
            let h = reduced_homology(&t.full_subcomplex(&belt.facet_set()));
            assert_eq!(h.dim(0), 0);
            assert_eq!(h.dim(1), 1);
            assert_eq!(h.nonzero().count(), 1);
        }
    }
}

#[test]
fn whole_dual_complex_is_a_sphere() {
    let t = table2_row(12).unwrap();
    let all: Vec<usize> = (0..t.m()).collect();
    let h = reduced_homology(&t.full_subcomplex(&all));
    assert_eq!(h.dim(2), 1);
    assert_eq!(h.nonzero().count(), 1);
}

#[test]
fn rotation_reading_and_exact_cover_agree_on_catalog() {
    for (k, row) in torbelt::catalog::TABLE2_ROWS.iter().enumerate() {
        let g = FacetGraph::parse_adjacency_rows(row).unwrap();
        let by_rotation = DualTriangulation::from_facet_graph(&g).unwrap();
        let by_cover = DualTriangulation::from_facet_graph_unordered(&g).unwrap();
        assert_eq!(by_rotation.faces(), by_cover.faces(), "row {}", k + 1);
    }
}

#[test]
fn row12_rotation_row_reads_as_cycle() {
    // Row j of catalog entry 12 lists "eihkf"; every cyclically consecutive
    // pair must be an edge.
    let g = FacetGraph::parse_adjacency_rows(torbelt::catalog::TABLE2_ROWS[11]).unwrap();
    let j = 9; // letter j
    let row = &g.rows()[j];
    assert_eq!(row.len(), 5);
    for k in 0..row.len() {
        let (a, b) = (row[k], row[(k + 1) % row.len()]);
        assert!(g.is_adjacent(a, b), "consecutive pair not an edge");
    }
}

#[test]
fn named_products_in_row12() {
    let t = table2_row(12).unwrap();
    // {b,d}·{c,e} is the belt on {b,c,d,e}.
    let belt = product(&t, &pair(&t, "b", "d"), &pair(&t, "c", "e"))
        .unwrap()
        .expect("nonzero product");
    assert_eq!(
        belt.belt.facet_set().map(|v| t.label(v).to_string()),
        ["b", "c", "d", "e"].map(String::from)
    );
    // {a,i}·{c,e} is the belt on {a,c,e,i}.
    let belt = product(&t, &pair(&t, "a", "i"), &pair(&t, "c", "e"))
        .unwrap()
        .expect("nonzero product");
    assert_eq!(
        belt.belt.facet_set().map(|v| t.label(v).to_string()),
        ["a", "c", "e", "i"].map(String::from)
    );
    // {b,d}·{g,j} vanishes: the union is not a belt.
    assert!(product(&t, &pair(&t, "b", "d"), &pair(&t, "g", "j"))
        .unwrap()
        .is_none());
    // Nonzero products force disjoint pairs and a chordless 4-cycle.
    let gens: Vec<Deg14Generator> = t
        .non_adjacent_pairs()
        .into_iter()
        .map(|(a, b)| Deg14Generator::new(&t, a, b).unwrap())
        .collect();
    let belt_sets: BTreeSet<[usize; 4]> =
        t.four_belts().iter().map(|b| b.facet_set()).collect();
    for s in &gens {
        for u in &gens {
            let forward = product(&t, s, u).unwrap();
            assert_eq!(forward, product(&t, u, s).unwrap());
            if let Some(gen) = forward {
                let (sp, up) = (s.pair, u.pair);
                assert_ne!(sp, up);
                assert!(sp.0 != up.0 && sp.0 != up.1 && sp.1 != up.0 && sp.1 != up.1);
                assert!(belt_sets.contains(&gen.belt.facet_set()));
            }
        }
    }
}

#[test]
fn diagonal_sharing_in_row12() {
    // Row 12 has four belts but only six distinct diagonals: {c,e} serves
    // three belts.
    let t = table2_row(12).unwrap();
    let report = annihilator_dim(&t).unwrap();
    assert_eq!(t.four_belts().len(), 4);
    let names: Vec<(String, String)> = report
        .diagonal_pairs
        .iter()
        .map(|&(a, b)| (t.label(a).to_string(), t.label(b).to_string()))
        .collect();
    let expected = [("a", "i"), ("b", "d"), ("b", "i"), ("c", "e"), ("f", "h"), ("g", "j")];
    assert_eq!(
        names,
        expected.map(|(a, b)| (a.to_string(), b.to_string()))
    );
    assert!(report.diagonal_pairs.len() < 2 * t.four_belts().len());
    let ce = (
        t.facet_index("c").unwrap().min(t.facet_index("e").unwrap()),
        t.facet_index("c").unwrap().max(t.facet_index("e").unwrap()),
    );
    let belts_with_ce = t
        .four_belts()
        .iter()
        .filter(|b| b.diagonals.contains(&ce))
        .count();
    assert_eq!(belts_with_ce, 3);
}

#[test]
fn relabeled_polytope_is_indistinguishable() {
    let t = table2_row(12).unwrap();
    let mut perm: Vec<usize> = (0..t.m()).collect();
    SplitMix64::new(7).shuffle(&mut perm);
    let relabeled = t.relabel(&perm).unwrap();
    assert_eq!(
        rings_distinguished(&t, &relabeled).unwrap(),
        RingVerdict::IndistinguishableByTheseInvariants
    );
    assert_eq!(
        rings_distinguished(&t, &table2_row(24).unwrap()).unwrap(),
        RingVerdict::Distinguished
    );
    assert_eq!(
        rings_distinguished(&t, &table2_row(20).unwrap()).unwrap(),
        RingVerdict::Distinguished
    );
}

#[test]
fn moment_angle_betti_of_row12() {
    let betti = bigraded_betti(&table2_row(12).unwrap());
    let ma = betti.moment_angle_betti();
    assert_eq!(ma[0], 1);
    assert_eq!(ma[3], 28);
    assert_eq!(ma[6], 4 + 123);
    assert_eq!(ma[14], 1);
    assert_eq!(ma.iter().filter(|&&b| b == 0).count(), 4); // p = 1, 2, 12, 13
}

#[test]
fn betti_tuples_of_named_rows() {
    for (row, expected) in [
        (12usize, [28u64, 105, 166, 123, 39, 4, 0]),
        (24, [28, 105, 166, 123, 39, 4, 0]),
        (20, [28, 105, 189, 189, 105, 27, 0]),
    ] {
        let tuple = bigraded_betti(&table2_row(row).unwrap()).tuple().unwrap();
        assert_eq!(tuple.0, expected, "row {row}");
    }
}

#[test]
fn koszul_monomial_count_formula_on_row12() {
    let t = table2_row(12).unwrap();
    let sr = StanleyReisnerData::from_triangulation(&t);
    let (vertices, edges, triangles) = (11u64, 27, 18);
    for deg in 1..=6u64 {
        let expected =
            vertices + edges * (deg - 1) + triangles * ((deg - 1) * deg.saturating_sub(2) / 2);
        assert_eq!(
            monomial_basis(&sr, deg as u32).len() as u64,
            expected,
            "degree {deg}"
        );
    }
}

#[test]
fn koszul_cell_route_reproduces_belt_cell() {
    // beta^{-2,8} of row 12 through the Koszul route alone: the dimension
    // of the kernel at (-2,8) minus the incoming rank is 4.
    let t = table2_row(12).unwrap();
    let sr = StanleyReisnerData::from_triangulation(&t);
    let dim = torbelt::koszul::slice_dim(&sr, 2, 4);
    let rank_out = torbelt::koszul::slice_rank(&sr, 2, 4);
    let rank_in = torbelt::koszul::slice_rank(&sr, 3, 4);
    assert_eq!(dim - rank_out - rank_in, 4);
    let table = tor_betti_via_koszul(&t, Some(&[(2, 4)]));
    assert_eq!(table.get(2, 4), 4);
}

#[test]
fn oracle_equivalence_on_random_small_triangulations() {
    // Walk random split sequences from the tetrahedron and compare the two
    // Betti routes on every intermediate triangulation.
    let mut rng = SplitMix64::new(0xabcd);
    for _ in 0..6 {
        let mut rs = torbelt::enumerate::tetrahedron();
        for _ in 0..4 {
            let v = rng.below(rs.n());
            let d = rs.degree(v);
            let p = rng.below(d);
            let q = (p + 1 + rng.below(d - 1)) % d;
            rs = rs.vertex_split(v, p, q).unwrap();
        }
        let t = DualTriangulation::from_rotation_system(rs).unwrap();
        assert_eq!(tor_betti_via_koszul(&t, None), bigraded_betti(&t));
    }
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 1..6), 1..6)) {
        let width = rows[0].len();
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|mut r| { r.resize(width, 0); r }).collect();
        let m = IntMatrix::from_rows(&rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_survives_permutation_and_zero_rows(
        rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..6),
        seed in any::<u64>(),
    ) {
        let m = IntMatrix::from_rows(&rows);
        let mut shuffled = rows.clone();
        SplitMix64::new(seed).shuffle(&mut shuffled);
        let mut padded = shuffled.clone();
        padded.push(vec![0; 3]);
        prop_assert_eq!(m.rank(), IntMatrix::from_rows(&shuffled).rank());
        prop_assert_eq!(m.rank(), IntMatrix::from_rows(&padded).rank());
    }

    #[test]
    fn adjacency_rows_of_random_splits_round_trip(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let mut rs = torbelt::enumerate::tetrahedron();
        for _ in 0..3 {
            let v = rng.below(rs.n());
            let d = rs.degree(v);
            let p = rng.below(d);
            let q = (p + 1 + rng.below(d - 1)) % d;
            rs = rs.vertex_split(v, p, q).unwrap();
        }
        let t = DualTriangulation::from_rotation_system(rs).unwrap();
        let rows = t.to_adjacency_rows().unwrap();
        let back = DualTriangulation::from_facet_graph(
            &FacetGraph::parse_adjacency_rows(&rows).unwrap(),
        ).unwrap();
        prop_assert_eq!(back.faces(), t.faces());
    }
}
