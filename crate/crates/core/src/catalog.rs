//! File-format codecs (planar_code, adjacency rows, JSON), the built-in
//! catalog of the 25 irreducible 11-facet simple polytopes, and Betti-tuple
//! classification.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::RotationSystem;
use crate::error::Error;
use crate::hochster::{bigraded_betti, BettiTable, BettiTuple};
use crate::poly::{DualTriangulation, FacetGraph};
use crate::torring;
use crate::Result;

/// The 25 irreducible (no 3-belt) simple 3-polytopes with 11 facets, as
/// adjacency rows: the n-th token lists the facets intersecting the n-th
/// facet, in rotation order. Row numbers are 1-based.
pub const TABLE2_ROWS: [&str; 25] = [
    "bcdef,afghc,abhid,acijke,adkf,aekgb,bfkjh,bgjic,chjd,dihgk,djgfe",
    "bcdef,afghijc,abjd,acjke,adkgf,aegb,bfekh,bgki,bhkj,bikdc,djihge",
    "bcde,aefghic,abid,acijke,adkfb,bekjg,bfjh,bgji,bhjdc,dihgfk,djfe",
    "bcde,aefghijc,abjd,acjke,adkfb,bekg,bfkh,bgki,bhkj,bikdc,djihgfe",
    "bcdef,afghijc,abjd,acje,adjkf,aekgb,bfkh,bgki,bhkj,bikedc,ejihgf",
    "bcde,aefc,abfgd,acghe,adhijfb,bejgc,cfjkhd,dgkie,ehkj,eikgf,gjih",
    "bcde,aefgc,abghijkd,acke,adkjfb,bejihg,bfhc,cgfi,chfj,cifek,cjed",
    "bcde,aefghc,abhijd,acje,adjfb,bejkg,bfkh,bgkic,chkj,cikfed,fjihg",
    "bcde,aefghc,abhijd,acje,adjfb,bejikg,bfkh,bgkic,chkfj,cifed,fihg",
    "bcdef,afghic,abid,acijke,adkf,aekgb,bfkjh,bgji,bhjdc,dihgk,djgfe",
    "bcde,aefghic,abid,acije,adjkfb,bekg,bfkh,bgkji,bhjdc,dihke,ejhgf",
    "bcde,aefgc,abghid,acie,adijfb,bejkg,bfkhc,cgkji,chjed,eihkf,fjhg",
    "bcde,aefgc,abghid,acie,adijfb,bejkg,bfkhc,cgki,chkjed,eikf,fjihg",
    "bcde,aefghc,abhd,achije,adjfb,bejikg,bfkh,bgkidc,dhkfj,dife,fihg",
    "bcde,aefghc,abhijd,acjgfe,adfb,bedg,bfdjkh,bgkic,chkj,cikgd,gjih",
    "bcde,aefc,abfghid,acie,adijkfb,bekgc,cfkjh,cgji,chjed,eihgk,ejgf",
    "bcde,aefc,abfghid,acie,adihjfb,bejkgc,cfkh,cgkjei,ched,ehkf,fjhg",
    "bcde,aefghic,abid,acijgke,adkfb,bekg,bfkdjh,bgji,bhjdc,dihg,dgfe",
    "bcde,aefghijc,abjd,acjkhgfe,adfb,bedg,bfdh,bgdki,bhkj,bikdc,djih",
    "bcde,aefghijkc,abkd,ackjihgfe,adfb,bedg,bfdh,bgdi,bhdj,bidk,bjdc",
    "bcde,aefgc,abghd,ache,adhijfb,bejg,bfjkhc,cgkied,ehkj,eikgf,gjih",
    "bcde,aefc,abfghd,ache,adhijfb,bejkgc,cfkh,cgkied,ehkj,eikf,fjihg",
    "bcdefg,aghc,abhijd,acje,adjf,aejkhg,afhb,bgfkic,chkj,cikfed,fjih",
    "bcdef,afgc,abghid,acije,adjf,aejkgb,bfkhc,cgkji,chjd,dihkfe,fjhg",
    "bcdef,afgc,abghijd,acje,adjkhgf,aegb,bfehc,cgeki,chkj,ciked,ejih",
];

/// Betti tuples as printed alongside the catalog rows.
pub const TABLE2_PRINTED_TUPLES: [[u64; 7]; 25] = [
    [28, 105, 164, 112, 28, 2, 0],
    [28, 105, 167, 131, 47, 5, 0],
    [28, 105, 169, 138, 54, 7, 0],
    [28, 105, 175, 159, 75, 13, 0],
    [28, 105, 172, 144, 60, 10, 0],
    [28, 105, 171, 141, 57, 9, 0],
    [28, 105, 174, 156, 72, 12, 0],
    [28, 105, 168, 129, 45, 6, 0],
    [28, 105, 170, 136, 52, 8, 0],
    [28, 105, 165, 119, 35, 3, 0],
    [28, 105, 170, 136, 52, 8, 0],
    [28, 105, 166, 123, 39, 4, 0],
    [28, 105, 167, 125, 41, 5, 0],
    [28, 105, 169, 134, 50, 7, 0],
    [28, 105, 173, 145, 61, 11, 0],
    [28, 105, 170, 143, 59, 8, 0],
    [28, 105, 177, 159, 75, 15, 0],
    [28, 105, 173, 149, 65, 11, 0],
    [28, 105, 179, 169, 85, 17, 0],
    [28, 105, 189, 189, 105, 27, 0],
    [28, 105, 171, 141, 57, 9, 0],
    [28, 105, 173, 145, 61, 11, 0],
    [28, 105, 171, 137, 53, 9, 0],
    [28, 105, 166, 123, 39, 4, 0],
    [28, 105, 173, 149, 65, 11, 0],
];

const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Decode a planar_code byte stream: the ASCII header `>>planar_code<<`,
/// then per graph one byte `n` followed by the 1-based neighbor lists of
/// vertices `1..=n` in rotation order, each terminated by a 0 byte.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<RotationSystem>> {
    let Some(body) = bytes.strip_prefix(PLANAR_CODE_HEADER) else {
        return Err(Error::PlanarCode("missing >>planar_code<< header".into()));
    };
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < body.len() {
        let n = body[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(Error::PlanarCode("graph with 0 vertices".into()));
        }
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = Vec::new();
            loop {
                let Some(&byte) = body.get(pos) else {
                    return Err(Error::PlanarCode(format!(
                        "truncated record: neighbor list of vertex {} ends early",
                        v + 1
                    )));
                };
                pos += 1;
                if byte == 0 {
                    break;
                }
                let u = byte as usize;
                if u > n {
                    return Err(Error::PlanarCode(format!(
                        "vertex index {u} out of range 1..={n}"
                    )));
                }
                row.push(u - 1);
            }
            rotation.push(row);
        }
        out.push(RotationSystem::new(rotation)?);
    }
    Ok(out)
}

/// Encode rotation systems as a planar_code stream (vertex counts <= 255).
pub fn emit_planar_code<'a, I>(systems: I) -> Result<Vec<u8>>
where
    I: IntoIterator<Item = &'a RotationSystem>,
{
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for rs in systems {
        let n = rs.n();
        if n > 255 {
            return Err(Error::Unsupported(format!(
                "planar_code stores vertex counts in one byte; got {n}"
            )));
        }
        out.push(n as u8);
        for v in 0..n {
            for &u in rs.rotation(v) {
                out.push(u as u8 + 1);
            }
            out.push(0);
        }
    }
    Ok(out)
}

/// JSON form of a polytope: facet count, display labels, rotation table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub m: usize,
    pub labels: Vec<String>,
    pub rotation: Vec<Vec<usize>>,
}

impl PolytopeJson {
    pub fn from_triangulation(t: &DualTriangulation) -> Self {
        PolytopeJson {
            m: t.m(),
            labels: t.labels().iter().map(|l| l.name().to_string()).collect(),
            rotation: (0..t.m()).map(|v| t.rotation().rotation(v).to_vec()).collect(),
        }
    }

    pub fn to_triangulation(&self) -> Result<DualTriangulation> {
        if self.rotation.len() != self.m {
            return Err(Error::Unsupported(format!(
                "rotation table has {} rows but m = {}",
                self.rotation.len(),
                self.m
            )));
        }
        DualTriangulation::from_rotation_system(RotationSystem::new(self.rotation.clone())?)
    }
}

/// Where a catalog entry came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSource {
    /// 1-based row of the built-in 25-row catalog.
    Table2Row(usize),
    Generated,
    File,
}

/// One polytope in a catalog, with lazily computed invariants.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub source: CatalogSource,
    pub triangulation: DualTriangulation,
    pub betti: Option<BettiTable>,
    pub tuple: Option<BettiTuple>,
    pub dim_v: Option<u64>,
}

impl CatalogEntry {
    pub fn new(id: String, source: CatalogSource, triangulation: DualTriangulation) -> Self {
        CatalogEntry {
            id,
            source,
            triangulation,
            betti: None,
            tuple: None,
            dim_v: None,
        }
    }
}

/// Parse one built-in catalog row (1-based).
pub fn table2_row(row: usize) -> Result<DualTriangulation> {
    if !(1..=25).contains(&row) {
        return Err(Error::Unsupported(format!(
            "catalog row {row} out of range 1..=25"
        )));
    }
    let text = TABLE2_ROWS[row - 1];
    let graph = FacetGraph::parse_adjacency_rows(text)?;
    DualTriangulation::from_facet_graph(&graph)
}

/// Load the whole built-in catalog. Every row must parse into a valid
/// irreducible 11-facet triangulation; anything else is a packaging bug.
pub fn load_table2() -> Result<Vec<CatalogEntry>> {
    (1..=25)
        .map(|row| {
            let t = table2_row(row).map_err(|e| {
                Error::Unsupported(format!("built-in catalog row {row} is invalid: {e}"))
            })?;
            if t.m() != 11 {
                return Err(Error::Unsupported(format!(
                    "built-in catalog row {row} has {} facets, expected 11",
                    t.m()
                )));
            }
            if !t.three_belts().is_empty() {
                return Err(Error::Unsupported(format!(
                    "built-in catalog row {row} is not irreducible"
                )));
            }
            Ok(CatalogEntry::new(
                format!("row {row}"),
                CatalogSource::Table2Row(row),
                t,
            ))
        })
        .collect()
}

/// A group of catalog entries sharing one Betti tuple.
#[derive(Debug, Clone)]
pub struct TupleGroup {
    pub tuple: BettiTuple,
    pub members: Vec<String>,
}

/// A tuple group of size >= 2, annotated with each member's `dim V` (absent
/// when the polytope has 3-belts, where the invariant is not defined here).
#[derive(Debug, Clone)]
pub struct CollisionGroup {
    pub tuple: BettiTuple,
    pub members: Vec<(String, Option<u64>)>,
}

/// Partition of a catalog by Betti tuple, with collision groups annotated.
#[derive(Debug, Clone)]
pub struct CollisionReport {
    pub groups: Vec<TupleGroup>,
    pub collisions: Vec<CollisionGroup>,
}

impl CollisionReport {
    /// Deterministic text rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} tuple group(s)\n", self.groups.len()));
        for g in &self.groups {
            out.push_str(&format!("{}: {}\n", g.tuple, g.members.join(", ")));
        }
        out.push_str(&format!("{} collision group(s)\n", self.collisions.len()));
        for c in &self.collisions {
            let members: Vec<String> = c
                .members
                .iter()
                .map(|(id, dim_v)| match dim_v {
                    Some(d) => format!("{id} (dim V = {d})"),
                    None => format!("{id} (dim V undefined)"),
                })
                .collect();
            out.push_str(&format!("{}: {}\n", c.tuple, members.join(", ")));
        }
        out
    }
}

/// Group a catalog by Betti tuple, computing missing invariants, and
/// annotate every collision group (size >= 2) with `dim V`.
///
/// All entries must have the same facet count, and tuple extraction
/// requires m = 11.
pub fn classify(entries: &mut [CatalogEntry]) -> Result<CollisionReport> {
    let Some(first) = entries.first() else {
        return Ok(CollisionReport {
            groups: Vec::new(),
            collisions: Vec::new(),
        });
    };
    let m = first.triangulation.m();
    if let Some(other) = entries.iter().find(|e| e.triangulation.m() != m) {
        return Err(Error::Unsupported(format!(
            "mixed facet counts in catalog: {} has m = {}, {} has m = {}",
            first.id,
            m,
            other.id,
            other.triangulation.m()
        )));
    }
    if m != 11 {
        return Err(Error::Unsupported(format!(
            "betti-tuple classification requires m = 11, got m = {m}"
        )));
    }

    // Fill missing invariants in parallel; verify cached ones.
    let computed: Vec<(BettiTable, BettiTuple)> = entries
        .par_iter()
        .map(|e| {
            let betti = bigraded_betti(&e.triangulation);
            let tuple = betti.tuple().expect("m = 11 checked above");
            (betti, tuple)
        })
        .collect();
    for (e, (betti, tuple)) in entries.iter_mut().zip(computed) {
        if let Some(cached) = &e.betti {
            if *cached != betti {
                return Err(Error::Unsupported(format!(
                    "cached Betti table of {} does not match recomputation",
                    e.id
                )));
            }
        }
        if let Some(cached) = e.tuple {
            if cached != tuple {
                return Err(Error::Unsupported(format!(
                    "cached Betti tuple of {} does not match recomputation",
                    e.id
                )));
            }
        }
        e.betti = Some(betti);
        e.tuple = Some(tuple);
    }

    let mut by_tuple: BTreeMap<BettiTuple, Vec<usize>> = BTreeMap::new();
    for (idx, e) in entries.iter().enumerate() {
        by_tuple.entry(e.tuple.unwrap()).or_default().push(idx);
    }

    let mut groups = Vec::new();
    let mut collisions = Vec::new();
    for (tuple, idxs) in by_tuple {
        groups.push(TupleGroup {
            tuple,
            members: idxs.iter().map(|&i| entries[i].id.clone()).collect(),
        });
        if idxs.len() >= 2 {
            let mut members = Vec::new();
            for &i in &idxs {
                if entries[i].dim_v.is_none() {
                    entries[i].dim_v = torring::annihilator_dim(&entries[i].triangulation)
                        .ok()
                        .map(|r| r.dim_v);
                }
                members.push((entries[i].id.clone(), entries[i].dim_v));
            }
            collisions.push(CollisionGroup { tuple, members });
        }
    }
    Ok(CollisionReport { groups, collisions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::tetrahedron;

    #[test]
    fn planar_code_k4_round_trip() {
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend_from_slice(&[4, 2, 4, 3, 0, 1, 3, 4, 0, 1, 4, 2, 0, 1, 2, 3, 0]);
        let systems = parse_planar_code(&bytes).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].n(), 4);
        assert!(systems[0].is_triangulation());
        assert_eq!(emit_planar_code(&systems).unwrap(), bytes);
    }

    #[test]
    fn planar_code_rejects_torus_rotations() {
        // K4 with every neighbor list ascending traces to a genus-1 map.
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend_from_slice(&[4, 2, 3, 4, 0, 1, 3, 4, 0, 1, 2, 4, 0, 1, 2, 3, 0]);
        assert!(matches!(
            parse_planar_code(&bytes),
            Err(Error::RotationSystem(_))
        ));
    }

    #[test]
    fn planar_code_rejects_bad_streams() {
        assert!(matches!(
            parse_planar_code(b""),
            Err(Error::PlanarCode(_))
        ));
        assert!(matches!(
            parse_planar_code(b">>planar_code<"),
            Err(Error::PlanarCode(_))
        ));
        // Header only: empty list.
        assert!(parse_planar_code(PLANAR_CODE_HEADER).unwrap().is_empty());
        // Truncated record.
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend_from_slice(&[4, 2, 3, 4, 0, 1, 3]);
        assert!(matches!(parse_planar_code(&bytes), Err(Error::PlanarCode(_))));
        // Out-of-range vertex.
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend_from_slice(&[4, 2, 3, 9, 0]);
        assert!(matches!(parse_planar_code(&bytes), Err(Error::PlanarCode(_))));
    }

    #[test]
    fn catalog_loads_and_rows_are_distinct() {
        let entries = load_table2().unwrap();
        assert_eq!(entries.len(), 25);
        let codes: std::collections::BTreeSet<_> = entries
            .iter()
            .map(|e| e.triangulation.rotation().canonical_code())
            .collect();
        assert_eq!(codes.len(), 25, "catalog rows must be pairwise non-isomorphic");
    }

    #[test]
    fn json_round_trip() {
        let t = DualTriangulation::from_rotation_system(tetrahedron()).unwrap();
        let json = serde_json::to_string(&PolytopeJson::from_triangulation(&t)).unwrap();
        let back: PolytopeJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_triangulation().unwrap().faces(), t.faces());
    }

    #[test]
    fn empty_catalog_classifies_to_empty_report() {
        let report = classify(&mut []).unwrap();
        assert!(report.groups.is_empty());
        assert!(report.collisions.is_empty());
    }
}
