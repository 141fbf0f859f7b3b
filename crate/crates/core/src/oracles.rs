//! Brute-force solvers and the reduction verifier.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, build_graph, diameter, Distance, EdgeDiff, IntersectionGraph};
use crate::io;
use crate::reductions::hypergraph::{part_triples, HyperSemantics, HypergraphInstance, PARTS};
use crate::reductions::ov::{augment_all_ones, orthogonal, OvInstance, OvMode};
use crate::reductions::{
    hyperclique_to_hypercubes, hypergraph_preprocess, ov_to_segments, ov_to_triangles, ov_to_unit_segments,
    realize_ga_balls, realize_gprime_a_segments, rotate_scale_to_cubes, Construction, ConstructionKind, InputKind,
};
use crate::shape::{Shape, Square2};

/// First `(i, j)` (1-based) with `a_i · b_j = 0`, in row-major order.
pub fn ov_pair_bruteforce(inst: &OvInstance) -> Result<Option<(usize, usize)>> {
    inst.expect_mode(OvMode::TwoSet)?;
    for (i, a) in inst.a().iter().enumerate() {
        for (j, b) in inst.b().iter().enumerate() {
            if orthogonal(a, b) {
                return Ok(Some((i + 1, j + 1)));
            }
        }
    }
    Ok(None)
}

/// First `(i, j)` (1-based, `i < j`) with `a_i · a_j = 0`.
pub fn ov_single_bruteforce(inst: &OvInstance) -> Result<Option<(usize, usize)>> {
    inst.expect_mode(OvMode::SingleSet)?;
    let a = inst.a();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if orthogonal(&a[i], &a[j]) {
                return Ok(Some((i + 1, j + 1)));
            }
        }
    }
    Ok(None)
}

/// First tuple (one 1-based vertex per part, lexicographic) meeting no edge.
pub fn independent_set6_bruteforce(h: &HypergraphInstance) -> Result<Option<[usize; PARTS]>> {
    if h.semantics() != HyperSemantics::IndependentInput {
        return Err(Error::usage("independent-set search needs INDEPENDENT_INPUT semantics"));
    }
    Ok(six_tuple_search(h, false))
}

/// First tuple whose 20 transversal triples are all edges (`want_edges`) or
/// all non-edges.
fn six_tuple_search(h: &HypergraphInstance, want_edges: bool) -> Option<[usize; PARTS]> {
    let sizes = h.part_sizes();
    let triples: Vec<[usize; 3]> = part_triples().collect();
    let mut tuple = [0usize; PARTS];
    loop {
        let ok = triples
            .iter()
            .all(|&[a, b, c]| h.has_edge(&[(a, tuple[a]), (b, tuple[b]), (c, tuple[c])]) == want_edges);
        if ok {
            return Some(tuple.map(|v| v + 1));
        }
        // odometer increment, last part fastest
        let mut p = PARTS;
        loop {
            if p == 0 {
                return None;
            }
            p -= 1;
            tuple[p] += 1;
            if tuple[p] < sizes[p] {
                break;
            }
            tuple[p] = 0;
        }
    }
}

/// Diameter at most 2, decided by building the graph and running BFS from every vertex.
pub fn diam2_naive(squares: &[Square2]) -> Result<bool> {
    if squares.is_empty() {
        return Err(Error::usage("diam2 of an empty square set"));
    }
    let shapes: Vec<Shape> = squares.iter().cloned().map(Shape::Square).collect();
    Ok(diameter(&build_graph(&shapes)?)?.at_most(2))
}

/// Input to [`verify_reduction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Ov(OvInstance),
    Hypergraph(HypergraphInstance),
}

impl Instance {
    pub fn to_text(&self) -> String {
        match self {
            Instance::Ov(o) => io::ov_to_text(o),
            Instance::Hypergraph(h) => io::hypergraph_to_text(h),
        }
    }

    pub fn digest(&self) -> String {
        io::digest(&self.to_text())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleWitness {
    /// 1-based vector indices.
    Pair(usize, usize),
    /// 1-based vertex per part.
    Tuple([usize; PARTS]),
}

impl fmt::Display for OracleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleWitness::Pair(i, j) => write!(f, "pair {i} {j}"),
            OracleWitness::Tuple(t) => {
                f.write_str("tuple")?;
                for v in t {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub kind: ConstructionKind,
    pub digest: String,
    /// Witness of an orthogonal pair / 6-clique / independent 6-set, if any.
    pub oracle: Option<OracleWitness>,
    /// Diameter of the intersection graph of the generated shapes.
    pub graph_diameter: Distance,
    pub threshold: u32,
    /// `graph_diameter <= threshold` exactly when the oracle finds nothing.
    pub consistent: bool,
    /// Whether the shapes realize the intended graph edge for edge.
    pub realizes_abstract: bool,
    /// Edge audit against G(A), for rotated cubes only.
    pub discrepancy: Option<EdgeDiff>,
}

fn edge_list(edges: &[(u32, u32)]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl VerificationReport {
    /// `key=value` lines ending with a blank line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "kind={}", self.kind).unwrap();
        writeln!(out, "digest={}", self.digest).unwrap();
        match &self.oracle {
            Some(w) => writeln!(out, "oracle={w}").unwrap(),
            None => writeln!(out, "oracle=none").unwrap(),
        }
        writeln!(out, "graph_diameter={}", self.graph_diameter).unwrap();
        writeln!(out, "threshold={}", self.threshold).unwrap();
        writeln!(out, "consistent={}", self.consistent).unwrap();
        writeln!(out, "realizes_abstract={}", self.realizes_abstract).unwrap();
        if let Some(d) = &self.discrepancy {
            writeln!(out, "missing_edges={}", d.missing.len()).unwrap();
            writeln!(out, "missing_edge_list={}", edge_list(&d.missing)).unwrap();
            writeln!(out, "extra_edges={}", d.extra.len()).unwrap();
            writeln!(out, "extra_edge_list={}", edge_list(&d.extra)).unwrap();
        }
        out.push('\n');
        out
    }
}

/// Runs the construction for `kind` and the matching oracle, and reports
/// whether the diameter threshold agrees with the oracle. Disagreement is
/// reported, not raised.
pub fn verify_reduction(kind: ConstructionKind, instance: &Instance) -> Result<VerificationReport> {
    let mismatch = || Error::usage(format!("{kind} needs a different input instance"));
    let (oracle, construction, geometric, discrepancy) = match (kind.input(), instance) {
        (InputKind::TwoSetOv, Instance::Ov(o)) => {
            let c = match kind {
                ConstructionKind::Segments => ov_to_segments(o)?,
                ConstructionKind::UnitSegments => ov_to_unit_segments(o)?,
                _ => ov_to_triangles(o)?,
            };
            let g = c.geometric_graph()?;
            (
                ov_pair_bruteforce(o)?.map(|(i, j)| OracleWitness::Pair(i, j)),
                c,
                g,
                None,
            )
        }
        (InputKind::SingleSetOv, Instance::Ov(o)) => {
            let w = ov_single_bruteforce(&augment_all_ones(o)?)?.map(|(i, j)| OracleWitness::Pair(i, j));
            match kind {
                ConstructionKind::CubesRot => {
                    let rot = rotate_scale_to_cubes(&realize_ga_balls(o)?)?;
                    (w, rot.construction, rot.cube_graph, Some(rot.discrepancy))
                }
                ConstructionKind::Balls => {
                    let c = realize_ga_balls(o)?;
                    let g = c.geometric_graph()?;
                    (w, c, g, None)
                }
                _ => {
                    let c = realize_gprime_a_segments(o)?;
                    let g = c.geometric_graph()?;
                    (w, c, g, None)
                }
            }
        }
        (InputKind::Hypergraph, Instance::Hypergraph(h)) => {
            let w = six_tuple_search(h, h.semantics() == HyperSemantics::CliqueInput).map(OracleWitness::Tuple);
            let c = hyperclique_to_hypercubes(&hypergraph_preprocess(h))?;
            let g = c.abstract_graph.clone();
            (w, c, g, None)
        }
        _ => return Err(mismatch()),
    };
    let graph_diameter = diameter(&geometric)?;
    let realizes_abstract = construction.abstract_graph.edge_diff(&geometric)?.is_empty();
    Ok(VerificationReport {
        kind,
        digest: instance.digest(),
        consistent: graph_diameter.at_most(construction.threshold) == oracle.is_none(),
        oracle,
        graph_diameter,
        threshold: construction.threshold,
        realizes_abstract,
        discrepancy,
    })
}

/// Pairs outside `abar x bbar` at distance more than 3 in a segment-family
/// construction; the construction guarantees there are none.
pub fn claim2_violations(c: &Construction, g: &IntersectionGraph) -> Result<Vec<(usize, usize)>> {
    let side = |v: usize| {
        let l = c.labels()[v].as_str();
        if l.starts_with("abar ") {
            1
        } else if l.starts_with("bbar ") {
            2
        } else {
            0
        }
    };
    let mut bad = Vec::new();
    for u in 0..g.vertex_count() {
        let dist = bfs_distances(g, u)?;
        for (v, d) in dist.iter().enumerate().skip(u + 1) {
            let cross = side(u) + side(v) == 3;
            if !cross && !d.at_most(3) {
                bad.push((u, v));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::hypergraph::all_transversal_triples;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    fn two(a: &[&str], b: &[&str]) -> OvInstance {
        OvInstance::two_set(
            a[0].len(),
            a.iter().map(|s| bits(s)).collect(),
            b.iter().map(|s| bits(s)).collect(),
        )
        .unwrap()
    }

    fn single(a: &[&str]) -> OvInstance {
        OvInstance::single_set(a[0].len(), a.iter().map(|s| bits(s)).collect()).unwrap()
    }

    #[test]
    fn ov_oracles() {
        assert_eq!(ov_pair_bruteforce(&two(&["10"], &["01"])).unwrap(), Some((1, 1)));
        assert_eq!(ov_pair_bruteforce(&two(&["1"], &["1"])).unwrap(), None);
        let all = ["01", "10", "11"];
        let inst = two(&all, &all);
        assert_eq!(ov_pair_bruteforce(&inst).unwrap(), Some((1, 2)));
        assert_eq!(ov_single_bruteforce(&single(&["11", "10"])).unwrap(), None);
        assert_eq!(ov_single_bruteforce(&single(&["10", "01"])).unwrap(), Some((1, 2)));
        assert_eq!(ov_single_bruteforce(&single(&["00", "11"])).unwrap(), Some((1, 2)));
    }

    #[test]
    fn hypergraph_oracles() {
        let sizes = [2; 6];
        let empty = HypergraphInstance::new(sizes, [], HyperSemantics::IndependentInput).unwrap();
        assert_eq!(independent_set6_bruteforce(&empty).unwrap(), Some([1; 6]));
        let full =
            HypergraphInstance::new(sizes, all_transversal_triples(&sizes), HyperSemantics::IndependentInput).unwrap();
        assert_eq!(independent_set6_bruteforce(&full).unwrap(), None);
        let clique = HypergraphInstance::new(sizes, [], HyperSemantics::CliqueInput).unwrap();
        assert!(independent_set6_bruteforce(&clique).is_err());
    }

    #[test]
    fn naive_diam2() {
        let sq = |xs: &[i64]| -> Vec<Square2> {
            xs.iter()
                .map(|&x| Square2::unit(crate::shape::Point2::new(crate::scalar::int(x), crate::scalar::int(0))))
                .collect()
        };
        assert!(diam2_naive(&sq(&[0, 1, 2])).unwrap());
        assert!(!diam2_naive(&sq(&[0, 3])).unwrap());
        assert!(diam2_naive(&sq(&[0])).unwrap());
    }

    #[test]
    fn verify_examples() {
        let r = verify_reduction(ConstructionKind::Segments, &Instance::Ov(two(&["1"], &["1"]))).unwrap();
        assert!(r.consistent && r.oracle.is_none());
        assert_eq!(r.graph_diameter, Distance::Finite(3));
        let r = verify_reduction(ConstructionKind::Balls, &Instance::Ov(single(&["10", "01"]))).unwrap();
        assert!(r.consistent && r.oracle.is_some() && r.realizes_abstract);
        assert!(r.graph_diameter > Distance::Finite(8));
        let r = verify_reduction(ConstructionKind::CubesRot, &Instance::Ov(single(&["10", "01", "11"]))).unwrap();
        let d = r.discrepancy.as_ref().unwrap();
        assert!(!d.extra.is_empty() || !d.missing.is_empty());
        assert!(r.to_text().contains("extra_edges="));
        assert!(verify_reduction(ConstructionKind::Hypercubes, &Instance::Ov(single(&["1"]))).is_err());
    }
}
