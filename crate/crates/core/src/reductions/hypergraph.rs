//! 6-partite 3-uniform hypergraphs.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub const PARTS: usize = 6;

/// A vertex as `(part, index)`, both 0-based.
pub type HVertex = (usize, usize);

/// Three vertices from distinct parts, sorted by part.
pub type Triple = [HVertex; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HyperSemantics {
    /// The edge set is a hypergraph in which a 6-clique is sought; it is
    /// complemented during preprocessing.
    CliqueInput,
    /// The edge set is used as given; a 6-vertex independent set is sought.
    IndependentInput,
}

impl HyperSemantics {
    pub fn name(self) -> &'static str {
        match self {
            HyperSemantics::CliqueInput => "CLIQUE_INPUT",
            HyperSemantics::IndependentInput => "INDEPENDENT_INPUT",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "CLIQUE_INPUT" => Some(HyperSemantics::CliqueInput),
            "INDEPENDENT_INPUT" => Some(HyperSemantics::IndependentInput),
            _ => None,
        }
    }
}

impl fmt::Display for HyperSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphInstance {
    part_sizes: [usize; PARTS],
    edges: BTreeSet<Triple>,
    semantics: HyperSemantics,
    /// Set once a dummy vertex (the last index) has been added to every part.
    augmented: bool,
}

/// Sorts a triple by part and checks it is transversal and in range.
pub fn canonical_triple(mut t: Triple, part_sizes: &[usize; PARTS]) -> Result<Triple> {
    t.sort_unstable();
    if t[0].0 == t[1].0 || t[1].0 == t[2].0 {
        return Err(Error::usage(format!("triple {t:?} repeats a part")));
    }
    for &(p, v) in &t {
        if p >= PARTS || v >= part_sizes[p] {
            return Err(Error::usage(format!("vertex ({p}, {v}) out of range")));
        }
    }
    Ok(t)
}

/// All 20 ways to pick three of the six parts, in lexicographic order.
pub fn part_triples() -> impl Iterator<Item = [usize; 3]> {
    (0..PARTS).flat_map(|a| (a + 1..PARTS).flat_map(move |b| (b + 1..PARTS).map(move |c| [a, b, c])))
}

/// Every transversal triple for the given part sizes, in sorted order.
pub fn all_transversal_triples(part_sizes: &[usize; PARTS]) -> impl Iterator<Item = Triple> + '_ {
    part_triples().flat_map(move |[a, b, c]| {
        (0..part_sizes[a]).flat_map(move |x| {
            (0..part_sizes[b]).flat_map(move |y| (0..part_sizes[c]).map(move |z| [(a, x), (b, y), (c, z)]))
        })
    })
}

impl HypergraphInstance {
    pub fn new(
        part_sizes: [usize; PARTS],
        edges: impl IntoIterator<Item = Triple>,
        semantics: HyperSemantics,
    ) -> Result<Self> {
        if part_sizes.contains(&0) {
            return Err(Error::usage("every part needs at least one vertex"));
        }
        let edges = edges
            .into_iter()
            .map(|t| canonical_triple(t, &part_sizes))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(HypergraphInstance {
            part_sizes,
            edges,
            semantics,
            augmented: false,
        })
    }

    pub fn part_sizes(&self) -> &[usize; PARTS] {
        &self.part_sizes
    }

    pub fn edges(&self) -> &BTreeSet<Triple> {
        &self.edges
    }

    pub fn semantics(&self) -> HyperSemantics {
        self.semantics
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    /// Marks an instance read back from disk as preprocessed, after checking
    /// that it is independent-input and the last vertex of every part is a
    /// dummy lying in every transversal triple through it.
    pub(crate) fn into_augmented(mut self) -> Result<Self> {
        let sizes = self.part_sizes;
        let is_dummy = |&(p, v): &HVertex| v + 1 == sizes[p];
        let complete = all_transversal_triples(&sizes)
            .filter(|t| t.iter().any(is_dummy))
            .all(|t| self.edges.contains(&t));
        if self.semantics != HyperSemantics::IndependentInput || !complete {
            return Err(Error::usage("instance does not have the preprocessed dummy structure"));
        }
        self.augmented = true;
        Ok(self)
    }

    /// Whether the (already canonical) triple is an edge.
    pub fn has_edge(&self, t: &Triple) -> bool {
        self.edges.contains(t)
    }
}

/// Complements clique inputs, then adds one dummy vertex per part together
/// with every transversal triple that contains a dummy.
pub fn hypergraph_preprocess(h: &HypergraphInstance) -> HypergraphInstance {
    let mut edges: BTreeSet<Triple> = match h.semantics {
        HyperSemantics::IndependentInput => h.edges.clone(),
        HyperSemantics::CliqueInput => all_transversal_triples(&h.part_sizes)
            .filter(|t| !h.edges.contains(t))
            .collect(),
    };
    let sizes = h.part_sizes.map(|s| s + 1);
    let is_dummy = |&(p, v): &HVertex| v == h.part_sizes[p];
    edges.extend(all_transversal_triples(&sizes).filter(|t| t.iter().any(is_dummy)));
    HypergraphInstance {
        part_sizes: sizes,
        edges,
        semantics: HyperSemantics::IndependentInput,
        augmented: true,
    }
}
