//! Text formats for shape sets, OV instances and hypergraphs.
//!
//! Shape file:
//!
//! ```text
//! GEODIAM 1 <family> <dim> <count>
//! <one shape per line>
//! # label <v> <text>
//! ```
//!
//! Rationals are written `p/q` (or `p`), `a + b sqrt2` values as
//! `p/q+r/s*sqrt2`, and floats in shortest round-trip form.

use std::fmt::Write as _;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::reductions::hypergraph::{HyperSemantics, HypergraphInstance, Triple, PARTS};
use crate::reductions::ov::{BitVector, OvInstance, OvMode};
use crate::scalar::{parse_scalar, Root2Scalar, Scalar};
use crate::shape::{Ball3, CubeD, FloatSegment, Point2, Segment2, Shape, ShapeFamily, Square2, Triangle2};

/// A shape list with optional per-shape labels.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapeFile {
    pub family: ShapeFamily,
    pub shapes: Vec<Shape>,
    pub labels: Option<Vec<String>>,
}

impl ShapeFile {
    /// Takes the family from the first shape; empty lists need [`ShapeFile::empty`].
    pub fn new(shapes: Vec<Shape>, labels: Option<Vec<String>>) -> Result<Self> {
        let family = shapes
            .first()
            .map(Shape::family)
            .ok_or_else(|| Error::usage("cannot infer the family of an empty shape list"))?;
        if let Some(i) = shapes.iter().position(|s| s.family() != family) {
            return Err(Error::usage(format!("shape {i} is not a {}", family.name())));
        }
        if labels.as_ref().is_some_and(|l| l.len() != shapes.len()) {
            return Err(Error::usage("label count differs from shape count"));
        }
        Ok(ShapeFile { family, shapes, labels })
    }

    pub fn empty(family: ShapeFamily) -> Self {
        ShapeFile {
            family,
            shapes: Vec::new(),
            labels: None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "GEODIAM 1 {} {} {}",
            self.family.name(),
            self.family.dimension(),
            self.shapes.len()
        )
        .unwrap();
        for s in &self.shapes {
            out.push_str(&shape_line(s));
            out.push('\n');
        }
        for (v, l) in self.labels.iter().flatten().enumerate() {
            writeln!(out, "# label {v} {l}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty shape file"))?;
        let f: Vec<&str> = header.split_whitespace().collect();
        let (family, count) = match f.as_slice() {
            ["GEODIAM", "1", fam, dim, count] => {
                let dim: usize = dim.parse().map_err(|_| Error::parse(1, "bad dimension"))?;
                let family = match (*fam, dim) {
                    ("segment", 2) => ShapeFamily::Segment,
                    ("fsegment", 2) => ShapeFamily::FloatSegment,
                    ("square", 2) => ShapeFamily::Square,
                    ("triangle", 2) => ShapeFamily::Triangle,
                    ("ball", 3) => ShapeFamily::Ball,
                    ("cube", d) if d >= 1 => ShapeFamily::Cube(d),
                    _ => return Err(Error::parse(1, format!("unknown family {fam} of dimension {dim}"))),
                };
                let count: usize = count.parse().map_err(|_| Error::parse(1, "bad count"))?;
                (family, count)
            }
            _ => return Err(Error::parse(1, "expected 'GEODIAM 1 <family> <dim> <count>'")),
        };
        let mut shapes = Vec::with_capacity(count);
        let mut labels: Vec<Option<String>> = Vec::new();
        for (no, line) in lines {
            if let Some(rest) = line.strip_prefix("# label ") {
                let (v, l) = rest
                    .split_once(' ')
                    .ok_or_else(|| Error::parse(no, "malformed label"))?;
                let v: usize = v.parse().map_err(|_| Error::parse(no, "bad label index"))?;
                if v >= count {
                    return Err(Error::parse(no, "label index out of range"));
                }
                labels.resize(count, None);
                labels[v] = Some(l.to_string());
            } else if line.starts_with('#') || line.trim().is_empty() {
                continue;
            } else {
                if shapes.len() == count {
                    return Err(Error::parse(no, "more shapes than the header announces"));
                }
                let shape = parse_shape(family, line).map_err(|m| Error::parse(no, m))?;
                shape.validate().map_err(|e| Error::parse(no, e.to_string()))?;
                shapes.push(shape);
            }
        }
        if shapes.len() != count {
            return Err(Error::parse(
                0,
                format!("expected {count} shapes, found {}", shapes.len()),
            ));
        }
        let labels = if labels.is_empty() {
            None
        } else {
            Some(
                labels
                    .into_iter()
                    .enumerate()
                    .map(|(v, l)| l.ok_or_else(|| Error::parse(0, format!("shape {v} has no label"))))
                    .collect::<Result<Vec<_>>>()?,
            )
        };
        Ok(ShapeFile { family, shapes, labels })
    }
}

fn shape_line(s: &Shape) -> String {
    let join = |v: Vec<String>| v.join(" ");
    match s {
        Shape::Segment(g) => join(vec![
            g.p.x.to_string(),
            g.p.y.to_string(),
            g.q.x.to_string(),
            g.q.y.to_string(),
        ]),
        Shape::FloatSegment(g) => join([g.p.x, g.p.y, g.q.x, g.q.y].iter().map(f64::to_string).collect()),
        Shape::Square(q) => join(vec![q.center.x.to_string(), q.center.y.to_string(), q.side.to_string()]),
        Shape::Triangle(t) => join(
            t.vertices
                .iter()
                .flat_map(|p| [p.x, p.y])
                .map(|v| v.to_string())
                .collect(),
        ),
        Shape::Ball(b) => join(b.center.iter().map(Scalar::to_string).collect()),
        Shape::Cube(c) => join(c.center.iter().map(Root2Scalar::to_string).collect()),
    }
}

fn fields<T>(line: &str, want: usize, parse: impl Fn(&str) -> Result<T, String>) -> Result<Vec<T>, String> {
    let v: Vec<T> = line.split_whitespace().map(parse).collect::<Result<_, _>>()?;
    if v.len() != want {
        return Err(format!("expected {want} fields, found {}", v.len()));
    }
    Ok(v)
}

fn float(s: &str) -> Result<f64, String> {
    f64::from_str(s).map_err(|_| format!("invalid float {s:?}"))
}

fn parse_shape(family: ShapeFamily, line: &str) -> Result<Shape, String> {
    Ok(match family {
        ShapeFamily::Segment => {
            let v = fields(line, 4, parse_scalar)?;
            let [a, b, c, d]: [Scalar; 4] = v.try_into().unwrap();
            Shape::Segment(Segment2 {
                p: Point2::new(a, b),
                q: Point2::new(c, d),
            })
        }
        ShapeFamily::FloatSegment => {
            let v = fields(line, 4, float)?;
            Shape::FloatSegment(FloatSegment {
                p: Point2::new(v[0], v[1]),
                q: Point2::new(v[2], v[3]),
            })
        }
        ShapeFamily::Square => {
            let v = fields(line, 3, parse_scalar)?;
            let [x, y, side]: [Scalar; 3] = v.try_into().unwrap();
            Shape::Square(Square2 {
                center: Point2::new(x, y),
                side,
            })
        }
        ShapeFamily::Triangle => {
            let v = fields(line, 6, float)?;
            Shape::Triangle(Triangle2 {
                vertices: [
                    Point2::new(v[0], v[1]),
                    Point2::new(v[2], v[3]),
                    Point2::new(v[4], v[5]),
                ],
            })
        }
        ShapeFamily::Ball => {
            let v = fields(line, 3, parse_scalar)?;
            Shape::Ball(Ball3 {
                center: v.try_into().unwrap(),
            })
        }
        ShapeFamily::Cube(d) => {
            let v = fields(line, d, |s| s.parse::<Root2Scalar>().map_err(|e| e.to_string()))?;
            Shape::Cube(CubeD { center: v })
        }
    })
}

fn bit_string(v: &BitVector) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// `OV <mode> <n> <d>`, one 0/1 string per vector, and for two-set instances
/// a blank line between A and B.
pub fn ov_to_text(inst: &OvInstance) -> String {
    let mut out = format!("OV {} {} {}\n", inst.mode(), inst.n(), inst.d());
    for v in inst.a() {
        out.push_str(&bit_string(v));
        out.push('\n');
    }
    if inst.mode() == OvMode::TwoSet {
        out.push('\n');
        for v in inst.b() {
            out.push_str(&bit_string(v));
            out.push('\n');
        }
    }
    out
}

pub fn ov_from_text(text: &str) -> Result<OvInstance> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty OV file"))?;
    let f: Vec<&str> = header.split_whitespace().collect();
    let (mode, n, d) = match f.as_slice() {
        ["OV", mode, n, d] => (
            OvMode::from_name(mode).ok_or_else(|| Error::parse(1, format!("unknown mode {mode}")))?,
            n.parse::<usize>().map_err(|_| Error::parse(1, "bad n"))?,
            d.parse::<usize>().map_err(|_| Error::parse(1, "bad d"))?,
        ),
        _ => return Err(Error::parse(1, "expected 'OV <mode> <n> <d>'")),
    };
    let block = |lines: &mut dyn Iterator<Item = (usize, &str)>| -> Result<Vec<BitVector>> {
        (0..n)
            .map(|_| {
                let (no, l) = lines.next().ok_or_else(|| Error::parse(0, "missing vectors"))?;
                let l = l.trim();
                if l.len() != d || !l.chars().all(|c| c == '0' || c == '1') {
                    return Err(Error::parse(no, format!("expected a 0/1 string of length {d}")));
                }
                Ok(l.chars().map(|c| c == '1').collect())
            })
            .collect()
    };
    let inst = match mode {
        OvMode::SingleSet => OvInstance::single_set(d, block(&mut lines)?),
        OvMode::TwoSet => {
            let a = block(&mut lines)?;
            match lines.next() {
                Some((_, l)) if l.trim().is_empty() => {}
                Some((no, _)) => return Err(Error::parse(no, "expected a blank line between A and B")),
                None => return Err(Error::parse(0, "missing B block")),
            }
            let b = block(&mut lines)?;
            OvInstance::two_set(d, a, b)
        }
    }
    .map_err(|e| Error::parse(1, e.to_string()))?;
    if let Some((no, l)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::parse(no, format!("unexpected trailing line {l:?}")));
    }
    Ok(inst)
}

/// `HG6 N1 .. N6 <semantics> [AUGMENTED]`, then one `p1 v1 p2 v2 p3 v3` line
/// per edge (1-based parts and vertices). `AUGMENTED` marks preprocessed
/// instances.
pub fn hypergraph_to_text(h: &HypergraphInstance) -> String {
    let mut out = String::from("HG6");
    for s in h.part_sizes() {
        write!(out, " {s}").unwrap();
    }
    write!(out, " {}", h.semantics()).unwrap();
    out.push_str(if h.is_augmented() { " AUGMENTED\n" } else { "\n" });
    for t in h.edges() {
        let cols: Vec<String> = t.iter().map(|&(p, v)| format!("{} {}", p + 1, v + 1)).collect();
        writeln!(out, "{}", cols.join(" ")).unwrap();
    }
    out
}

pub fn hypergraph_from_text(text: &str) -> Result<HypergraphInstance> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty hypergraph file"))?;
    let f: Vec<&str> = header.split_whitespace().collect();
    let augmented = f.len() == PARTS + 3 && f[PARTS + 2] == "AUGMENTED";
    if !(f.len() == PARTS + 2 || augmented) || f[0] != "HG6" {
        return Err(Error::parse(1, "expected 'HG6 <N1..N6> <semantics> [AUGMENTED]'"));
    }
    let mut sizes = [0usize; PARTS];
    for (s, t) in sizes.iter_mut().zip(&f[1..=PARTS]) {
        *s = t.parse().map_err(|_| Error::parse(1, format!("bad part size {t:?}")))?;
    }
    let semantics = HyperSemantics::from_name(f[PARTS + 1])
        .ok_or_else(|| Error::parse(1, format!("unknown semantics {:?}", f[PARTS + 1])))?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let v = fields(line, 6, |s| s.parse::<usize>().map_err(|_| format!("bad index {s:?}")))
            .map_err(|m| Error::parse(no, m))?;
        if v.contains(&0) {
            return Err(Error::parse(no, "indices are 1-based"));
        }
        let t: Triple = [(v[0] - 1, v[1] - 1), (v[2] - 1, v[3] - 1), (v[4] - 1, v[5] - 1)];
        edges.push(t);
    }
    let h = HypergraphInstance::new(sizes, edges, semantics).map_err(|e| Error::parse(0, e.to_string()))?;
    if augmented {
        h.into_augmented().map_err(|e| Error::parse(1, e.to_string()))
    } else {
        Ok(h)
    }
}

/// First 16 hex digits of the SHA-256 of `text`.
pub fn digest(text: &str) -> String {
    hex::encode(&Sha256::digest(text.as_bytes())[..8])
}
