//! Near-linear Diameter-2 decision for axis-parallel unit squares.
//!
//! The graph has diameter at most 2 iff every pair of centers from
//! (BLF, TRF) and from (TLF, BRF) has a common closed neighbor. A square `v`
//! is a common neighbor of `p` and `q` iff both centers lie in `v²`, the
//! side-2 square at `v`'s center, and `v²` meets each front in a contiguous
//! run. So each square contributes one rectangle to a front-by-front grid,
//! and the answer is whether those rectangles cover both grids.

pub mod coverage;
pub mod fronts;

use num_traits::One;

pub use coverage::{find_uncovered_cell, grid_fully_covered, GridRect};
pub use fronts::{chain_interval, compute_fronts, FrontKind, Fronts, IndexInterval, StaircaseChain};

use crate::error::{Error, Result};
use crate::kernel::Lowering;
use crate::scalar::{int, ratio};
use crate::shape::{Point2, Square2};

/// The two front pairs checked, as (rows, columns).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrontPair {
    BlfTrf,
    TlfBrf,
}

impl FrontPair {
    pub fn kinds(self) -> (FrontKind, FrontKind) {
        match self {
            FrontPair::BlfTrf => (FrontKind::Blf, FrontKind::Trf),
            FrontPair::TlfBrf => (FrontKind::Tlf, FrontKind::Brf),
        }
    }
}

/// Two centers with no common neighbor: grid cell `(row, col)` is uncovered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diam2Witness {
    pub pair: FrontPair,
    pub row: usize,
    pub col: usize,
    pub row_point: Point2,
    pub col_point: Point2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diam2Outcome {
    pub at_most_2: bool,
    /// Present exactly when `at_most_2` is false.
    pub witness: Option<Diam2Witness>,
}

/// Whether the unit-square intersection graph has diameter at most 2.
pub fn diam2_unit_squares(squares: &[Square2]) -> Result<bool> {
    Ok(diam2_explain(squares)?.at_most_2)
}

/// [`diam2_unit_squares`] plus an uncovered center pair when the answer is no.
pub fn diam2_explain(squares: &[Square2]) -> Result<Diam2Outcome> {
    if squares.is_empty() {
        return Err(Error::usage("diam2 of an empty square set"));
    }
    if let Some(i) = squares.iter().position(|s| !s.side.is_one()) {
        return Err(Error::usage(format!(
            "square {i} has side {}, expected 1",
            squares[i].side
        )));
    }
    let low = Lowering::new(squares.iter().flat_map(|s| [&s.center.x, &s.center.y]));
    let lowered = low.as_ref().and_then(|low| {
        squares
            .iter()
            .map(|s| Some(Point2::new(low.lower(&s.center.x)?, low.lower(&s.center.y)?)))
            .collect::<Option<Vec<_>>>()
    });
    let witness = match (low, lowered) {
        (Some(low), Some(points)) => {
            let unit = low.unit();
            let back = |p: &Point2<i64>| Point2::new(ratio(p.x, unit), ratio(p.y, unit));
            decide(&points, |v| [v.x - unit, v.x + unit, v.y - unit, v.y + unit]).map(|(pair, row, col, p, q)| {
                Diam2Witness {
                    pair,
                    row,
                    col,
                    row_point: back(&p),
                    col_point: back(&q),
                }
            })
        }
        _ => {
            let points: Vec<Point2> = squares.iter().map(|s| s.center.clone()).collect();
            let one = int(1);
            decide(&points, |v| [&v.x - &one, &v.x + &one, &v.y - &one, &v.y + &one]).map(
                |(pair, row, col, row_point, col_point)| Diam2Witness {
                    pair,
                    row,
                    col,
                    row_point,
                    col_point,
                },
            )
        }
    };
    Ok(Diam2Outcome {
        at_most_2: witness.is_none(),
        witness,
    })
}

type RawWitness<T> = (FrontPair, usize, usize, Point2<T>, Point2<T>);

/// `boxes` maps a center to the `[x_lo, x_hi, y_lo, y_hi]` bounds of its doubled square.
fn decide<T, F>(centers: &[Point2<T>], boxes: F) -> Option<RawWitness<T>>
where
    T: Ord + Clone + Send + Sync,
    F: Fn(&Point2<T>) -> [T; 4] + Sync,
{
    let mut sorted = centers.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let fronts = fronts::fronts_of_sorted(&sorted);
    drop(sorted);
    let boxes: Vec<[T; 4]> = centers.iter().map(boxes).collect();
    let check = |pair: FrontPair| {
        let (rk, ck) = pair.kinds();
        let (rows, cols) = (fronts.get(rk), fronts.get(ck));
        let rects: Vec<GridRect> = boxes
            .iter()
            .map(|[a, b, c, d]| GridRect {
                rows: fronts::interval_in_box(&rows.points, rk.y_increasing(), [a, b, c, d]),
                cols: fronts::interval_in_box(&cols.points, ck.y_increasing(), [a, b, c, d]),
            })
            .collect();
        find_uncovered_cell(&rects, rows.points.len(), cols.points.len())
            .expect("intervals come from the chains")
            .map(|(r, c)| (pair, r, c, rows.points[r - 1].clone(), cols.points[c - 1].clone()))
    };
    let (first, second) = rayon::join(|| check(FrontPair::BlfTrf), || check(FrontPair::TlfBrf));
    first.or(second)
}
