//! Does a union of grid rectangles cover the whole grid?

use crate::error::{Error, Result};

use super::fronts::IndexInterval;

/// `rows x cols` block of a grid; an empty side makes the rectangle empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridRect {
    pub rows: Option<IndexInterval>,
    pub cols: Option<IndexInterval>,
}

/// Range add with global min; `min[v] = min(children) + add[v]`.
struct MinAddTree {
    size: usize,
    min: Vec<i32>,
    add: Vec<i32>,
}

const PAD: i32 = i32::MAX / 2;

impl MinAddTree {
    fn new(len: usize) -> Self {
        let size = len.next_power_of_two();
        let mut min = vec![0; 2 * size];
        for leaf in len..size {
            min[size + leaf] = PAD;
        }
        for v in (1..size).rev() {
            min[v] = min[2 * v].min(min[2 * v + 1]);
        }
        MinAddTree {
            size,
            min,
            add: vec![0; 2 * size],
        }
    }

    /// Adds `delta` on 0-based inclusive `[l, r]`.
    fn range_add(&mut self, l: usize, r: usize, delta: i32) {
        self.update(1, 0, self.size - 1, l, r, delta);
    }

    fn update(&mut self, v: usize, nl: usize, nr: usize, l: usize, r: usize, delta: i32) {
        if r < nl || nr < l {
            return;
        }
        if l <= nl && nr <= r {
            self.min[v] += delta;
            self.add[v] += delta;
            return;
        }
        let mid = (nl + nr) / 2;
        self.update(2 * v, nl, mid, l, r, delta);
        self.update(2 * v + 1, mid + 1, nr, l, r, delta);
        self.min[v] = self.min[2 * v].min(self.min[2 * v + 1]) + self.add[v];
    }

    fn global_min(&self) -> i32 {
        self.min[1]
    }

    /// Leftmost 0-based position attaining the global min.
    fn argmin(&self) -> usize {
        let mut v = 1;
        while v < self.size {
            let target = self.min[v] - self.add[v];
            v = if self.min[2 * v] == target { 2 * v } else { 2 * v + 1 };
        }
        v - self.size
    }
}

/// First uncovered cell `(row, col)` (1-based) in column-major sweep order.
pub fn find_uncovered_cell(rects: &[GridRect], n_rows: usize, n_cols: usize) -> Result<Option<(usize, usize)>> {
    if n_rows == 0 || n_cols == 0 {
        return Err(Error::usage("grid needs at least one row and one column"));
    }
    let mut enter: Vec<Vec<IndexInterval>> = vec![Vec::new(); n_cols + 2];
    let mut leave: Vec<Vec<IndexInterval>> = vec![Vec::new(); n_cols + 2];
    for r in rects {
        for (iv, bound) in [(r.rows, n_rows), (r.cols, n_cols)] {
            if let Some(iv) = iv {
                if iv.lo == 0 || iv.lo > iv.hi || iv.hi > bound {
                    return Err(Error::usage(format!(
                        "interval [{}, {}] outside [1, {bound}]",
                        iv.lo, iv.hi
                    )));
                }
            }
        }
        if let (Some(rows), Some(cols)) = (r.rows, r.cols) {
            enter[cols.lo].push(rows);
            leave[cols.hi + 1].push(rows);
        }
    }
    let mut tree = MinAddTree::new(n_rows);
    let mut first_gap = None;
    for col in 1..=n_cols {
        for iv in &leave[col] {
            tree.range_add(iv.lo - 1, iv.hi - 1, -1);
        }
        for iv in &enter[col] {
            tree.range_add(iv.lo - 1, iv.hi - 1, 1);
        }
        if first_gap.is_none() && tree.global_min() < 1 {
            first_gap = Some((tree.argmin() + 1, col));
        }
    }
    Ok(first_gap)
}

/// Whether every cell of `[1, n_rows] x [1, n_cols]` lies in some rectangle.
pub fn grid_fully_covered(rects: &[GridRect], n_rows: usize, n_cols: usize) -> Result<bool> {
    Ok(find_uncovered_cell(rects, n_rows, n_cols)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(r: (usize, usize), c: (usize, usize)) -> GridRect {
        GridRect {
            rows: Some(IndexInterval::new(r.0, r.1)),
            cols: Some(IndexInterval::new(c.0, c.1)),
        }
    }

    #[test]
    fn examples() {
        assert!(grid_fully_covered(&[rect((1, 5), (1, 7))], 5, 7).unwrap());
        let gap = [rect((1, 2), (1, 7)), rect((4, 5), (1, 7))];
        assert_eq!(find_uncovered_cell(&gap, 5, 7).unwrap(), Some((3, 1)));
        assert!(!grid_fully_covered(&[], 1, 1).unwrap());
    }

    #[test]
    fn out_of_bounds_is_usage_error() {
        assert!(grid_fully_covered(&[rect((1, 6), (1, 1))], 5, 1).is_err());
        assert!(grid_fully_covered(&[], 0, 1).is_err());
    }

    #[test]
    fn removal_reopens_rows() {
        // rows 1-3 covered in cols 1-2 only; col 3 needs the second rect
        let rs = [rect((1, 3), (1, 2)), rect((1, 2), (3, 3))];
        assert_eq!(find_uncovered_cell(&rs, 3, 3).unwrap(), Some((3, 3)));
    }
}
