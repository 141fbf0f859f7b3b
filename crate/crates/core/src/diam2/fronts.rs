//! Staircase fronts of a point set and box queries on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::shape::Point2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrontKind {
    /// Top-left: no point lies strictly left and strictly above.
    Tlf,
    /// Top-right: no point lies strictly right and strictly above.
    Trf,
    /// Bottom-left: no point lies strictly left and strictly below.
    Blf,
    /// Bottom-right: no point lies strictly right and strictly below.
    Brf,
}

impl FrontKind {
    pub const ALL: [FrontKind; 4] = [FrontKind::Tlf, FrontKind::Trf, FrontKind::Blf, FrontKind::Brf];

    /// Whether y increases along the chain (chains are always in increasing x).
    pub fn y_increasing(self) -> bool {
        matches!(self, FrontKind::Tlf | FrontKind::Brf)
    }

    pub fn name(self) -> &'static str {
        match self {
            FrontKind::Tlf => "TLF",
            FrontKind::Trf => "TRF",
            FrontKind::Blf => "BLF",
            FrontKind::Brf => "BRF",
        }
    }
}

impl fmt::Display for FrontKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One front as a chain with strictly increasing x and strictly monotone y.
///
/// Among points sharing an x (or a y) coordinate only the extreme one for the
/// front's direction is kept, so every input point is weakly dominated by a
/// chain point in that direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseChain<T = Scalar> {
    pub kind: FrontKind,
    pub points: Vec<Point2<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fronts<T = Scalar> {
    pub tlf: StaircaseChain<T>,
    pub trf: StaircaseChain<T>,
    pub blf: StaircaseChain<T>,
    pub brf: StaircaseChain<T>,
}

impl<T> Fronts<T> {
    pub fn get(&self, kind: FrontKind) -> &StaircaseChain<T> {
        match kind {
            FrontKind::Tlf => &self.tlf,
            FrontKind::Trf => &self.trf,
            FrontKind::Blf => &self.blf,
            FrontKind::Brf => &self.brf,
        }
    }
}

/// Inclusive 1-based index range into a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IndexInterval {
    pub lo: usize,
    pub hi: usize,
}

impl IndexInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(1 <= lo && lo <= hi);
        IndexInterval { lo, hi }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }
}

/// Computes all four fronts. Exact duplicate points are merged first.
pub fn compute_fronts<T: Ord + Clone>(points: &[Point2<T>]) -> Result<Fronts<T>> {
    if points.is_empty() {
        return Err(Error::usage("fronts of an empty point set"));
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(fronts_of_sorted(&sorted))
}

/// `sorted` must be sorted by (x, y) without duplicates.
pub(crate) fn fronts_of_sorted<T: Ord + Clone>(sorted: &[Point2<T>]) -> Fronts<T> {
    // x-groups as index ranges; within a group y ascends.
    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i].x != sorted[start].x {
            groups.push((start, i - 1));
            start = i;
        }
    }
    let scan = |kind: FrontKind, groups: &mut dyn Iterator<Item = &(usize, usize)>| {
        let want_low = matches!(kind, FrontKind::Blf | FrontKind::Brf);
        let mut out: Vec<Point2<T>> = Vec::new();
        for &(first, last) in groups {
            let cand = if want_low { &sorted[first] } else { &sorted[last] };
            let better = match out.last() {
                None => true,
                Some(prev) if want_low => cand.y < prev.y,
                Some(prev) => cand.y > prev.y,
            };
            if better {
                out.push(cand.clone());
            }
        }
        out
    };
    let blf = scan(FrontKind::Blf, &mut groups.iter());
    let tlf = scan(FrontKind::Tlf, &mut groups.iter());
    let mut trf = scan(FrontKind::Trf, &mut groups.iter().rev());
    let mut brf = scan(FrontKind::Brf, &mut groups.iter().rev());
    trf.reverse();
    brf.reverse();
    Fronts {
        tlf: StaircaseChain {
            kind: FrontKind::Tlf,
            points: tlf,
        },
        trf: StaircaseChain {
            kind: FrontKind::Trf,
            points: trf,
        },
        blf: StaircaseChain {
            kind: FrontKind::Blf,
            points: blf,
        },
        brf: StaircaseChain {
            kind: FrontKind::Brf,
            points: brf,
        },
    }
}

/// Chain indices with `x in [x_lo, x_hi]` and `y in [y_lo, y_hi]`, found by two
/// binary searches.
pub(crate) fn interval_in_box<T: Ord>(
    chain: &[Point2<T>],
    y_increasing: bool,
    [x_lo, x_hi, y_lo, y_hi]: [&T; 4],
) -> Option<IndexInterval> {
    let a = chain.partition_point(|p| p.x < *x_lo);
    let b = chain.partition_point(|p| p.x <= *x_hi);
    if a >= b {
        return None;
    }
    let slice = &chain[a..b];
    let (c, d) = if y_increasing {
        (
            slice.partition_point(|p| p.y < *y_lo),
            slice.partition_point(|p| p.y <= *y_hi),
        )
    } else {
        (
            slice.partition_point(|p| p.y > *y_hi),
            slice.partition_point(|p| p.y >= *y_lo),
        )
    };
    (c < d).then(|| IndexInterval::new(a + c + 1, a + d))
}

/// Indices of chain points inside the closed `side x side` box at `center`.
pub fn chain_interval(chain: &StaircaseChain, center: &Point2, side: &Scalar) -> Option<IndexInterval> {
    let h = side / Scalar::from_integer(2.into());
    let bounds = [&center.x - &h, &center.x + &h, &center.y - &h, &center.y + &h];
    interval_in_box(
        &chain.points,
        chain.kind.y_increasing(),
        [&bounds[0], &bounds[1], &bounds[2], &bounds[3]],
    )
}
