//! Exact integer kernels for pairwise adjacency.
//!
//! When every rational coordinate of a shape set shares a common denominator
//! `L` small enough, all coordinates are scaled by `L` into `i64` and the
//! predicates are evaluated with `i128` intermediates. The result is identical
//! to the big-rational predicates; shape sets that do not fit fall back to them.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::scalar::{Root2Scalar, Scalar};
use crate::shape::{self, Shape};

/// Scaled magnitudes stay below this so every product fits in `i128`.
const MAX_SCALED: i64 = 1 << 40;

pub(crate) enum Kernel<'a> {
    Squares {
        centers: Vec<[i64; 2]>,
        sides: Vec<i64>,
    },
    Balls {
        centers: Vec<[i64; 3]>,
        unit: i64,
    },
    RationalCubes {
        centers: Vec<Vec<i64>>,
        unit: i64,
    },
    Root2Cubes {
        a: Vec<Vec<i64>>,
        b: Vec<Vec<i64>>,
        unit: i64,
    },
    Segments {
        ends: Vec<[i64; 4]>,
    },
    Generic(&'a [Shape]),
}

pub(crate) struct Lowering {
    scale: BigInt,
}

impl Lowering {
    pub(crate) fn new<'s>(values: impl Iterator<Item = &'s Scalar>) -> Option<Self> {
        let mut scale = BigInt::one();
        for v in values {
            let d = v.denom();
            if !(&scale % d == BigInt::from(0)) {
                scale = scale.lcm(d);
                if scale > BigInt::from(MAX_SCALED) {
                    return None;
                }
            }
        }
        Some(Lowering { scale })
    }

    pub(crate) fn lower(&self, v: &Scalar) -> Option<i64> {
        let n = v.numer() * (&self.scale / v.denom());
        let n = n.to_i64()?;
        (n.abs() <= MAX_SCALED).then_some(n)
    }

    pub(crate) fn unit(&self) -> i64 {
        self.scale.to_i64().expect("scale bounded by MAX_SCALED")
    }
}

fn root2_sign(a: i128, b: i128) -> Ordering {
    match (a.cmp(&0), b.cmp(&0)) {
        (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
        (x, Ordering::Equal) => x,
        (Ordering::Equal, y) => y,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (Ordering::Greater, Ordering::Less) => (a * a).cmp(&(2 * b * b)),
        (Ordering::Less, Ordering::Greater) => (2 * b * b).cmp(&(a * a)),
    }
}

fn orient(ax: i64, ay: i64, bx: i64, by: i64, cx: i64, cy: i64) -> Ordering {
    let l = (bx as i128 - ax as i128) * (cy as i128 - ay as i128);
    let r = (by as i128 - ay as i128) * (cx as i128 - ax as i128);
    l.cmp(&r)
}

fn in_bbox(ax: i64, ay: i64, bx: i64, by: i64, cx: i64, cy: i64) -> bool {
    ax.min(bx) <= cx && cx <= ax.max(bx) && ay.min(by) <= cy && cy <= ay.max(by)
}

fn segments_meet(s: &[i64; 4], t: &[i64; 4]) -> bool {
    let [px, py, qx, qy] = *s;
    let [rx, ry, ux, uy] = *t;
    let o1 = orient(px, py, qx, qy, rx, ry);
    let o2 = orient(px, py, qx, qy, ux, uy);
    let o3 = orient(rx, ry, ux, uy, px, py);
    let o4 = orient(rx, ry, ux, uy, qx, qy);
    if o1 != o2 && o3 != o4 {
        return true;
    }
    (o1.is_eq() && in_bbox(px, py, qx, qy, rx, ry))
        || (o2.is_eq() && in_bbox(px, py, qx, qy, ux, uy))
        || (o3.is_eq() && in_bbox(rx, ry, ux, uy, px, py))
        || (o4.is_eq() && in_bbox(rx, ry, ux, uy, qx, qy))
}

impl<'a> Kernel<'a> {
    /// Picks the integer kernel when the shape set admits one. All shapes must
    /// share one family (checked by the caller).
    pub(crate) fn for_shapes(shapes: &'a [Shape]) -> Kernel<'a> {
        Self::try_lower(shapes).unwrap_or(Kernel::Generic(shapes))
    }

    fn try_lower(shapes: &[Shape]) -> Option<Kernel<'static>> {
        match shapes.first()? {
            Shape::Square(_) => {
                let sq = || {
                    shapes.iter().map(|s| match s {
                        Shape::Square(q) => q,
                        _ => unreachable!(),
                    })
                };
                let low = Lowering::new(sq().flat_map(|q| [&q.center.x, &q.center.y, &q.side]))?;
                let mut centers = Vec::with_capacity(shapes.len());
                let mut sides = Vec::with_capacity(shapes.len());
                for q in sq() {
                    centers.push([low.lower(&q.center.x)?, low.lower(&q.center.y)?]);
                    sides.push(low.lower(&q.side)?);
                }
                Some(Kernel::Squares { centers, sides })
            }
            Shape::Ball(_) => {
                let bl = || {
                    shapes.iter().map(|s| match s {
                        Shape::Ball(b) => b,
                        _ => unreachable!(),
                    })
                };
                let low = Lowering::new(bl().flat_map(|b| b.center.iter()))?;
                let centers = bl()
                    .map(|b| {
                        Some([
                            low.lower(&b.center[0])?,
                            low.lower(&b.center[1])?,
                            low.lower(&b.center[2])?,
                        ])
                    })
                    .collect::<Option<Vec<_>>>()?;
                Some(Kernel::Balls {
                    centers,
                    unit: low.unit(),
                })
            }
            Shape::Cube(_) => {
                let cb = || {
                    shapes.iter().map(|s| match s {
                        Shape::Cube(c) => c,
                        _ => unreachable!(),
                    })
                };
                let low = Lowering::new(cb().flat_map(|c| c.center.iter().flat_map(|v| [&v.a, &v.b])))?;
                let lower_all = |f: fn(&Root2Scalar) -> &Scalar| {
                    cb().map(|c| c.center.iter().map(|v| low.lower(f(v))).collect::<Option<Vec<_>>>())
                        .collect::<Option<Vec<_>>>()
                };
                let a = lower_all(|v| &v.a)?;
                if cb().all(|c| c.center.iter().all(Root2Scalar::is_rational)) {
                    Some(Kernel::RationalCubes {
                        centers: a,
                        unit: low.unit(),
                    })
                } else {
                    let b = lower_all(|v| &v.b)?;
                    Some(Kernel::Root2Cubes { a, b, unit: low.unit() })
                }
            }
            Shape::Segment(_) => {
                let sg = || {
                    shapes.iter().map(|s| match s {
                        Shape::Segment(g) => g,
                        _ => unreachable!(),
                    })
                };
                let low = Lowering::new(sg().flat_map(|g| [&g.p.x, &g.p.y, &g.q.x, &g.q.y]))?;
                let ends = sg()
                    .map(|g| {
                        Some([
                            low.lower(&g.p.x)?,
                            low.lower(&g.p.y)?,
                            low.lower(&g.q.x)?,
                            low.lower(&g.q.y)?,
                        ])
                    })
                    .collect::<Option<Vec<_>>>()?;
                Some(Kernel::Segments { ends })
            }
            _ => None,
        }
    }

    #[inline]
    pub(crate) fn adjacent(&self, i: usize, j: usize) -> bool {
        match self {
            Kernel::Squares { centers, sides } => {
                let reach = sides[i] + sides[j];
                let [ax, ay] = centers[i];
                let [bx, by] = centers[j];
                2 * (ax - bx).abs() <= reach && 2 * (ay - by).abs() <= reach
            }
            Kernel::Balls { centers, unit } => {
                let [a, b] = [centers[i], centers[j]];
                let sq: i128 = (0..3)
                    .map(|k| {
                        let d = (a[k] - b[k]) as i128;
                        d * d
                    })
                    .sum();
                sq <= (*unit as i128) * (*unit as i128)
            }
            Kernel::RationalCubes { centers, unit } => {
                centers[i].iter().zip(&centers[j]).all(|(u, v)| (u - v).abs() <= *unit)
            }
            Kernel::Root2Cubes { a, b, unit } => {
                let l = *unit as i128;
                (0..a[i].len()).all(|k| {
                    let da = (a[i][k] - a[j][k]) as i128;
                    let db = (b[i][k] - b[j][k]) as i128;
                    // -L <= da + db sqrt2 <= L
                    root2_sign(l - da, -db) != Ordering::Less && root2_sign(l + da, db) != Ordering::Less
                })
            }
            Kernel::Segments { ends } => segments_meet(&ends[i], &ends[j]),
            Kernel::Generic(shapes) => shape::intersects(&shapes[i], &shapes[j]).expect("families checked by caller"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::shape::{Ball3, CubeD, Point2, Segment2, Square2};

    fn check_same(shapes: &[Shape]) {
        let k = Kernel::for_shapes(shapes);
        assert!(!matches!(k, Kernel::Generic(_)), "expected an integer kernel");
        for i in 0..shapes.len() {
            for j in 0..shapes.len() {
                assert_eq!(
                    k.adjacent(i, j),
                    shape::intersects(&shapes[i], &shapes[j]).unwrap(),
                    "pair {i} {j}"
                );
            }
        }
    }

    #[test]
    fn root2_sign_matches_float() {
        for a in -20i128..=20 {
            for b in -20i128..=20 {
                let v = a as f64 + b as f64 * 2f64.sqrt();
                let expect = if a == 0 && b == 0 {
                    Ordering::Equal
                } else if v > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
                assert_eq!(root2_sign(a, b), expect, "{a} {b}");
            }
        }
    }

    #[test]
    fn lowered_kernels_agree_with_exact_predicates() {
        let sq: Vec<Shape> = (0..12)
            .map(|i| {
                Shape::Square(Square2 {
                    center: Point2::new(ratio(i * 7 % 11, 4), ratio(i * 5 % 9, 3)),
                    side: ratio(1 + i % 3, 2),
                })
            })
            .collect();
        check_same(&sq);
        let balls: Vec<Shape> = (0..12)
            .map(|i| {
                Shape::Ball(Ball3 {
                    center: [ratio(i % 4, 3), ratio(i % 5, 6), ratio(i % 3, 5)],
                })
            })
            .collect();
        check_same(&balls);
        let cubes: Vec<Shape> = (0..12)
            .map(|i| {
                Shape::Cube(CubeD {
                    center: (0..3)
                        .map(|k| Root2Scalar::new(ratio((i + k) % 5, 4), ratio((i * k) % 3, 4)))
                        .collect(),
                })
            })
            .collect();
        check_same(&cubes);
        let segs: Vec<Shape> = (0..12)
            .map(|i| {
                Shape::Segment(Segment2 {
                    p: Point2::new(int(i % 4), ratio(i % 3, 2)),
                    q: Point2::new(int((i * 3) % 5), int(i % 2)),
                })
            })
            .collect();
        check_same(&segs);
    }

    #[test]
    fn huge_denominators_fall_back() {
        let shapes = vec![Shape::Ball(Ball3 {
            center: [ratio(1, 1_000_000_007), ratio(1, 998_244_353), ratio(1, 3)],
        })];
        assert!(matches!(Kernel::for_shapes(&shapes), Kernel::Generic(_)));
    }
}
