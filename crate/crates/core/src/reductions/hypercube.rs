//! Unit hypercubes in 12 dimensions from a preprocessed 6-partite hypergraph.
//!
//! Part `p` (0-based) owns coordinates `2p` and `2p + 1`. A vertex with 0-based
//! index `v` in a part of size `N` is encoded by `t = (v + 1) / (N + 1)`.
//!
//! Vertex order: `lefthalf` cubes, `righthalf` cubes, `edgecube`s, each in
//! lexicographic order of their (1-based) vertex indices.

use crate::error::{Error, Result};
use crate::graph::build_graph;
use crate::scalar::{int, ratio, Root2Scalar, Scalar};
use crate::shape::{CubeD, Shape};

use super::hypergraph::{HyperSemantics, HypergraphInstance, Triple, PARTS};
use super::{threshold_for, Construction, ConstructionKind};

pub const HYPERCUBE_DIM: usize = 2 * PARTS;

fn half_triples(n: usize, parts: [usize; 3]) -> impl Iterator<Item = Triple> {
    let [a, b, c] = parts;
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| [(a, x), (b, y), (c, z)])))
}

/// Left-half, right-half and edge cubes; the threshold is 2.
pub fn hyperclique_to_hypercubes(h: &HypergraphInstance) -> Result<Construction> {
    if h.semantics() != HyperSemantics::IndependentInput || !h.is_augmented() {
        return Err(Error::usage(
            "hypercube construction needs a preprocessed (independent, dummy-augmented) hypergraph",
        ));
    }
    let n = h.part_sizes()[0];
    if h.part_sizes().iter().any(|&s| s != n) {
        return Err(Error::usage(format!(
            "hypercube construction needs equal part sizes, got {:?}",
            h.part_sizes()
        )));
    }
    let t = |v: usize| ratio(v as i64 + 1, n as i64 + 1);
    let cube = |coords: Vec<Scalar>| {
        Shape::Cube(CubeD {
            center: coords.into_iter().map(Root2Scalar::rational).collect(),
        })
    };
    let mut shapes = Vec::new();
    let mut labels = Vec::new();
    for (name, parts) in [("lefthalf", [0, 1, 2]), ("righthalf", [3, 4, 5])] {
        for tr in half_triples(n, parts).filter(|tr| !h.has_edge(tr)) {
            let mut coords = vec![int(2); HYPERCUBE_DIM];
            for &(p, v) in &tr {
                coords[2 * p] = t(v);
                coords[2 * p + 1] = int(1) - t(v);
            }
            shapes.push(cube(coords));
            labels.push(format!("{name} {} {} {}", tr[0].1 + 1, tr[1].1 + 1, tr[2].1 + 1));
        }
    }
    for tr in h.edges() {
        let parts = [tr[0].0, tr[1].0, tr[2].0];
        if parts == [0, 1, 2] || parts == [3, 4, 5] {
            continue;
        }
        let mut coords = vec![int(1); HYPERCUBE_DIM];
        for &(p, v) in tr {
            coords[2 * p] = int(1) + t(v);
            coords[2 * p + 1] = int(2) - t(v);
        }
        shapes.push(cube(coords));
        labels.push(format!(
            "edgecube {}",
            tr.iter()
                .map(|&(p, v)| format!("{} {}", p + 1, v + 1))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    let abstract_graph = build_graph(&shapes)?.with_labels(labels)?;
    Ok(Construction {
        kind: ConstructionKind::Hypercubes,
        shapes,
        abstract_graph,
        threshold: threshold_for(ConstructionKind::Hypercubes, 0),
    })
}
