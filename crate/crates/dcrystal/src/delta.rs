//! Coordinates on the triangle of sum roots.
//!
//! The sum roots `ε_i + ε_j` arrange into a triangle with `n−1` rows; row `r`
//! (from the top, 1-based) holds `r` cells.  Cell `(r, m)` (column `m` from
//! the left) is the root with `j = n − m + 1` and `i = r − m + 1`, and its
//! children are `(r+1, m)` and `(r+1, m+1)` directly below.

use crate::roots::{sum_index, Root};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TriangleCoord {
    pub row: u8,
    pub col: u8,
}

impl TriangleCoord {
    pub fn new(row: u8, col: u8) -> Self {
        assert!(1 <= col && col <= row);
        TriangleCoord { row, col }
    }

    pub fn root(self, n: u8) -> Root {
        debug_assert!(self.row < n);
        Root::sum(self.row - self.col + 1, n - self.col + 1)
    }

    pub fn from_root(r: Root, n: u8) -> Self {
        debug_assert!(r.sum);
        TriangleCoord {
            row: n - r.j + r.i,
            col: n - r.j + 1,
        }
    }

    /// Index of this cell in the convex order (0-based, inside `0..M`).
    pub fn index(self, n: u8) -> usize {
        sum_index(n, self.row - self.col + 1, n - self.col + 1)
    }

    pub fn from_index(idx: usize, n: u8) -> Self {
        let mut best = None;
        for r in 1..n {
            for m in 1..=r {
                let c = TriangleCoord { row: r, col: m };
                if c.index(n) == idx {
                    best = Some(c);
                }
            }
        }
        best.expect("index out of triangle range")
    }

    /// The two cells directly below, while they stay inside the triangle.
    pub fn children(self, n: u8) -> Vec<TriangleCoord> {
        if self.row >= n - 1 {
            return Vec::new();
        }
        vec![
            TriangleCoord {
                row: self.row + 1,
                col: self.col,
            },
            TriangleCoord {
                row: self.row + 1,
                col: self.col + 1,
            },
        ]
    }

    /// Mirror image of the cell inside its row.
    pub fn mirror(self) -> TriangleCoord {
        TriangleCoord {
            row: self.row,
            col: self.row - self.col + 1,
        }
    }
}

/// All cells of the triangle, row by row.
pub fn all_cells(n: u8) -> Vec<TriangleCoord> {
    let mut out = Vec::new();
    for r in 1..n {
        for m in 1..=r {
            out.push(TriangleCoord { row: r, col: m });
        }
    }
    out
}
