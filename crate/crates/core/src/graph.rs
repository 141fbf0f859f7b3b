//! Intersection graphs, BFS distances and diameters.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::Kernel;
use crate::scalar::Scalar;
use crate::shape::{Shape, ShapeFamily};

/// Hop distance, or unreachable. `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn at_most(self, k: u32) -> bool {
        matches!(self, Distance::Finite(d) if d <= k)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Immutable simple undirected graph with one label per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraph {
    adjacency: Vec<Vec<u32>>,
    labels: Vec<String>,
}

/// Edges present in one graph but not the other, each as `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeDiff {
    /// In the reference graph, absent from the compared one.
    pub missing: Vec<(u32, u32)>,
    /// In the compared graph, absent from the reference.
    pub extra: Vec<(u32, u32)>,
}

impl EdgeDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|v| format!("v {v}")).collect()
}

impl IntersectionGraph {
    /// Builds a graph from an edge list. Duplicates are merged; self-loops and
    /// out-of-range endpoints are usage errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > u32::MAX as usize {
            return Err(Error::usage("too many vertices"));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::usage(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::usage(format!("self-loop at {u}")));
            }
            adjacency[u].push(v as u32);
            adjacency[v].push(u as u32);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(IntersectionGraph {
            adjacency,
            labels: default_labels(n),
        })
    }

    /// Replaces the labels, which must be unique and one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::usage(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for (v, l) in labels.iter().enumerate() {
            if l.contains('\n') {
                return Err(Error::usage(format!("label of vertex {v} contains a newline")));
            }
            if let Some(w) = seen.insert(l.as_str(), v) {
                return Err(Error::usage(format!("label {l:?} used by vertices {w} and {v}")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    fn from_sorted_adjacency(adjacency: Vec<Vec<u32>>) -> Self {
        let n = adjacency.len();
        IntersectionGraph {
            adjacency,
            labels: default_labels(n),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Vertex carrying `label`, by linear scan.
    pub fn vertex_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    /// Compares edge sets, treating `self` as the reference.
    pub fn edge_diff(&self, other: &IntersectionGraph) -> Result<EdgeDiff> {
        if self.vertex_count() != other.vertex_count() {
            return Err(Error::usage(format!(
                "vertex counts differ: {} vs {}",
                self.vertex_count(),
                other.vertex_count()
            )));
        }
        let mut diff = EdgeDiff::default();
        for u in 0..self.vertex_count() {
            let (a, b) = (&self.adjacency[u], &other.adjacency[u]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                let (x, y) = (a.get(i).copied(), b.get(j).copied());
                match (x, y) {
                    (Some(x), Some(y)) if x == y => {
                        i += 1;
                        j += 1;
                    }
                    (Some(x), y) if y.map_or(true, |y| x < y) => {
                        if x as usize > u {
                            diff.missing.push((u as u32, x));
                        }
                        i += 1;
                    }
                    (_, Some(y)) => {
                        if y as usize > u {
                            diff.extra.push((u as u32, y));
                        }
                        j += 1;
                    }
                    _ => unreachable!(),
                }
            }
        }
        Ok(diff)
    }

    /// Text dump: `graph n m`, one `u v` line per edge, then `# label v text` lines.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {} {}", self.vertex_count(), self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        for (v, l) in self.labels.iter().enumerate() {
            writeln!(out, "# label {v} {l}").unwrap();
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty graph file"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (n, m) = match fields.as_slice() {
            ["graph", n, m] => (
                n.parse::<usize>().map_err(|e| Error::parse(1, e.to_string()))?,
                m.parse::<usize>().map_err(|e| Error::parse(1, e.to_string()))?,
            ),
            _ => return Err(Error::parse(1, "expected 'graph <n> <m>'")),
        };
        let mut edges = Vec::with_capacity(m);
        let mut labels = default_labels(n);
        for (no, line) in lines {
            if let Some(rest) = line.strip_prefix("# label ") {
                let (v, l) = rest
                    .split_once(' ')
                    .ok_or_else(|| Error::parse(no, "malformed label line"))?;
                let v: usize = v.parse().map_err(|_| Error::parse(no, "bad label vertex"))?;
                if v >= n {
                    return Err(Error::parse(no, "label vertex out of range"));
                }
                labels[v] = l.to_string();
            } else if line.trim().is_empty() {
                continue;
            } else {
                let mut it = line.split_whitespace().map(str::parse::<usize>);
                match (it.next(), it.next(), it.next()) {
                    (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
                    _ => return Err(Error::parse(no, "expected 'u v'")),
                }
            }
        }
        if edges.len() != m {
            return Err(Error::parse(0, format!("header says {m} edges, found {}", edges.len())));
        }
        IntersectionGraph::from_edges(n, edges)?.with_labels(labels)
    }
}

fn check_family(shapes: &[Shape]) -> Result<Option<ShapeFamily>> {
    let Some(first) = shapes.first() else {
        return Ok(None);
    };
    let family = first.family();
    for (i, s) in shapes.iter().enumerate() {
        if s.family() != family {
            return Err(Error::usage(format!(
                "shape {i} is a {} of dimension {}, expected {} of dimension {}",
                s.family().name(),
                s.family().dimension(),
                family.name(),
                family.dimension()
            )));
        }
        s.validate()?;
    }
    Ok(Some(family))
}

/// Intersection graph by testing every pair of shapes.
pub fn build_graph(shapes: &[Shape]) -> Result<IntersectionGraph> {
    check_family(shapes)?;
    let kernel = Kernel::for_shapes(shapes);
    let n = shapes.len();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if kernel.adjacent(i, j) {
                adjacency[i].push(j as u32);
                adjacency[j].push(i as u32);
            }
        }
    }
    Ok(IntersectionGraph::from_sorted_adjacency(adjacency))
}

fn floor_div(v: &Scalar, cell: &Scalar) -> Option<i64> {
    let q = v / cell;
    q.numer().div_floor(q.denom()).to_i64()
}

fn cell_keys(shapes: &[Shape]) -> Option<Vec<Vec<i64>>> {
    match shapes.first()? {
        Shape::Square(_) => {
            let cell = shapes
                .iter()
                .map(|s| match s {
                    Shape::Square(q) => q.side.clone(),
                    _ => unreachable!(),
                })
                .max()?;
            shapes
                .iter()
                .map(|s| match s {
                    Shape::Square(q) => Some(vec![floor_div(&q.center.x, &cell)?, floor_div(&q.center.y, &cell)?]),
                    _ => unreachable!(),
                })
                .collect()
        }
        Shape::Ball(_) => shapes
            .iter()
            .map(|s| match s {
                Shape::Ball(b) => b
                    .center
                    .iter()
                    .map(|c| c.numer().div_floor(c.denom()).to_i64())
                    .collect(),
                _ => unreachable!(),
            })
            .collect(),
        Shape::Cube(_) => shapes
            .iter()
            .map(|s| match s {
                Shape::Cube(c) => c.center.iter().take(3).map(|v| BigInt::to_i64(&v.floor())).collect(),
                _ => unreachable!(),
            })
            .collect(),
        _ => None,
    }
}

/// Same graph as [`build_graph`], testing only shapes in neighboring grid
/// cells. Applies to squares, balls and cubes (cubes are bucketed on their
/// first three coordinates); other families use the pairwise path.
pub fn build_graph_bucketed(shapes: &[Shape]) -> Result<IntersectionGraph> {
    check_family(shapes)?;
    let Some(keys) = cell_keys(shapes) else {
        return build_graph(shapes);
    };
    let kernel = Kernel::for_shapes(shapes);
    let mut cells: HashMap<&[i64], Vec<u32>> = HashMap::new();
    for (i, k) in keys.iter().enumerate() {
        cells.entry(k.as_slice()).or_default().push(i as u32);
    }
    let dims = keys.first().map_or(0, Vec::len);
    let offsets: Vec<Vec<i64>> = (0..3usize.pow(dims as u32))
        .map(|mut code| {
            (0..dims)
                .map(|_| {
                    let o = (code % 3) as i64 - 1;
                    code /= 3;
                    o
                })
                .collect()
        })
        .collect();
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); shapes.len()];
    let mut probe = vec![0i64; dims];
    for (i, key) in keys.iter().enumerate() {
        for off in &offsets {
            for (p, (k, o)) in probe.iter_mut().zip(key.iter().zip(off)) {
                *p = k + o;
            }
            if let Some(members) = cells.get(probe.as_slice()) {
                for &j in members {
                    if (j as usize) > i && kernel.adjacent(i, j as usize) {
                        adjacency[i].push(j);
                        adjacency[j as usize].push(i as u32);
                    }
                }
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(IntersectionGraph::from_sorted_adjacency(adjacency))
}

fn check_vertex(g: &IntersectionGraph, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::usage(format!(
            "vertex {v} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Hop distances from `src` to every vertex.
pub fn bfs_distances(g: &IntersectionGraph, src: usize) -> Result<Vec<Distance>> {
    check_vertex(g, src)?;
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = Vec::with_capacity(g.vertex_count());
    bfs_into(g, src, &mut dist, &mut queue);
    Ok(dist
        .into_iter()
        .map(|d| {
            if d == u32::MAX {
                Distance::Infinite
            } else {
                Distance::Finite(d)
            }
        })
        .collect())
}

/// BFS into reusable buffers; returns (eccentricity within the component, reached count).
fn bfs_into(g: &IntersectionGraph, src: usize, dist: &mut [u32], queue: &mut Vec<u32>) -> (u32, usize) {
    dist.fill(u32::MAX);
    queue.clear();
    dist[src] = 0;
    queue.push(src as u32);
    let mut head = 0;
    let mut ecc = 0;
    while head < queue.len() {
        let u = queue[head] as usize;
        head += 1;
        let du = dist[u];
        ecc = du;
        for &w in &g.adjacency[u] {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = du + 1;
                queue.push(w);
            }
        }
    }
    (ecc, queue.len())
}

/// Adjacency rows as bitsets, for BFS on dense graphs.
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(g: &IntersectionGraph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for (u, list) in g.adjacency.iter().enumerate() {
            for &v in list {
                bits[u * words + v as usize / 64] |= 1 << (v % 64);
            }
        }
        BitRows { words, bits }
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    /// Returns (eccentricity within the component, reached count).
    fn bfs(&self, src: usize) -> (u32, usize) {
        let mut visited = vec![0u64; self.words];
        let mut next = vec![0u64; self.words];
        visited[src / 64] |= 1 << (src % 64);
        let mut frontier = vec![src];
        let mut reached = 1;
        let mut level = 0;
        loop {
            next.fill(0);
            for &u in &frontier {
                for (n, r) in next.iter_mut().zip(self.row(u)) {
                    *n |= r;
                }
            }
            frontier.clear();
            for (w, (n, v)) in next.iter_mut().zip(visited.iter_mut()).enumerate() {
                let mut fresh = *n & !*v;
                *v |= fresh;
                while fresh != 0 {
                    frontier.push(w * 64 + fresh.trailing_zeros() as usize);
                    fresh &= fresh - 1;
                }
            }
            if frontier.is_empty() {
                return (level, reached);
            }
            reached += frontier.len();
            level += 1;
        }
    }
}

fn is_dense(g: &IntersectionGraph) -> bool {
    let n = g.vertex_count();
    n >= 64 && 64 * g.edge_count() >= n * n
}

fn eccentricities_of(g: &IntersectionGraph, sources: &[usize]) -> Vec<Distance> {
    let n = g.vertex_count();
    let finish = |(ecc, reached): (u32, usize)| {
        if reached == n {
            Distance::Finite(ecc)
        } else {
            Distance::Infinite
        }
    };
    if is_dense(g) {
        let rows = BitRows::new(g);
        sources.par_iter().map(|&s| finish(rows.bfs(s))).collect()
    } else {
        sources
            .par_iter()
            .map_init(
                || (vec![u32::MAX; n], Vec::with_capacity(n)),
                |(dist, queue), &s| finish(bfs_into(g, s, dist, queue)),
            )
            .collect()
    }
}

/// Maximum distance over all pairs, from one BFS per vertex.
pub fn diameter(g: &IntersectionGraph) -> Result<Distance> {
    if g.vertex_count() == 0 {
        return Err(Error::usage("diameter of an empty graph"));
    }
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    Ok(eccentricities_of(g, &all).into_iter().max().expect("non-empty"))
}

/// Eccentricity of every vertex.
pub fn eccentricities(g: &IntersectionGraph) -> Vec<Distance> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    eccentricities_of(g, &all)
}

/// Maximum of `dist(s, t)` over `s` in `from`, `t` in `to`.
pub fn diameter_between(g: &IntersectionGraph, from: &[usize], to: &[usize]) -> Result<Distance> {
    if from.is_empty() || to.is_empty() {
        return Err(Error::usage("diameter_between needs two non-empty vertex sets"));
    }
    for &v in from.iter().chain(to) {
        check_vertex(g, v)?;
    }
    let (sources, targets) = if from.len() <= to.len() { (from, to) } else { (to, from) };
    let n = g.vertex_count();
    let best = sources
        .par_iter()
        .map_init(
            || (vec![u32::MAX; n], Vec::with_capacity(n)),
            |(dist, queue), &s| {
                bfs_into(g, s, dist, queue);
                targets
                    .iter()
                    .map(|&t| match dist[t] {
                        u32::MAX => Distance::Infinite,
                        d => Distance::Finite(d),
                    })
                    .max()
                    .expect("non-empty")
            },
        )
        .max()
        .expect("non-empty");
    Ok(best)
}
