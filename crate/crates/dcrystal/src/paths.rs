//! Double paths on the triangle and the statistics they compute.
//!
//! A path walks from a cell down to the bottom row, stepping to one of the
//! two children each time.  A double path is a pair of equal-length paths
//! from a common start whose later cells stay strictly left/right of each
//! other and whose endpoints are adjacent in the bottom row.  Summing a
//! triangle datum over the cells of a double path (the shared start counted
//! once) gives `‖c‖_p`; maximizing over double paths computes `ε_n*`, and
//! maximizing over tuples of mutually disjoint double paths computes the
//! partial sums of the associated tableau shape.

use crate::delta::{all_cells, TriangleCoord};
use crate::pbw::{LusztigDatum, Support};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoublePath {
    pub left: Vec<TriangleCoord>,
    pub right: Vec<TriangleCoord>,
}

impl DoublePath {
    pub fn start(&self) -> TriangleCoord {
        self.left[0]
    }

    /// Every cell visited, the shared start listed once.
    pub fn cells(&self) -> Vec<TriangleCoord> {
        let mut out = self.left.clone();
        out.extend(self.right.iter().skip(1).copied());
        out
    }

    pub fn cell_indices(&self, n: u8) -> Vec<usize> {
        self.cells().iter().map(|c| c.index(n)).collect()
    }

    /// A single bottom-row cell standing in for a zero-width double path;
    /// these only enter tuple maximization, never `ε_n*` itself.
    pub fn degenerate(cell: TriangleCoord) -> DoublePath {
        DoublePath {
            left: vec![cell],
            right: vec![cell],
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.left.len() == 1
    }

    /// Two lists of `(row, col)` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let ser = |p: &[TriangleCoord]| {
            serde_json::Value::Array(
                p.iter()
                    .map(|c| serde_json::json!([c.row, c.col]))
                    .collect(),
            )
        };
        serde_json::json!({ "left": ser(&self.left), "right": ser(&self.right) })
    }
}

/// Triangle text with the cells covered by the given paths bracketed.
pub fn render_overlay(c: &LusztigDatum, paths: &[DoublePath]) -> String {
    let n = c.rank();
    let covered: std::collections::HashSet<TriangleCoord> =
        paths.iter().flat_map(|p| p.cells()).collect();
    let mut out = String::new();
    for r in 1..n {
        let mut line = " ".repeat((n - 1 - r) as usize * 2);
        for m in 1..=r {
            let cell = TriangleCoord::new(r, m);
            let v = c.get_cell(cell);
            if covered.contains(&cell) {
                line.push_str(&format!("[{v}] "));
            } else {
                line.push_str(&format!(" {v}  "));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn extend(n: u8, left: Vec<TriangleCoord>, right: Vec<TriangleCoord>, out: &mut Vec<DoublePath>) {
    let (l, r) = (*left.last().unwrap(), *right.last().unwrap());
    if l.row == n - 1 {
        if l.col + 1 == r.col {
            out.push(DoublePath { left, right });
        }
        return;
    }
    for lc in l.children(n) {
        for rc in r.children(n) {
            if lc.col < rc.col {
                let mut nl = left.clone();
                let mut nr = right.clone();
                nl.push(lc);
                nr.push(rc);
                extend(n, nl, nr, out);
            }
        }
    }
}

/// All double paths starting at `start`; a bottom-row start yields none.
pub fn double_paths_at(n: u8, start: TriangleCoord) -> Vec<DoublePath> {
    let mut out = Vec::new();
    if start.row <= n - 2 {
        extend(n, vec![start], vec![start], &mut out);
    }
    out
}

/// All double paths in the triangle, grouped by nothing in particular.
pub fn all_double_paths(n: u8) -> Vec<DoublePath> {
    all_cells(n)
        .into_iter()
        .flat_map(|c| double_paths_at(n, c))
        .collect()
}

/// `‖c‖_p`: the datum summed over the cells of the double path.
pub fn path_weight(c: &LusztigDatum, p: &DoublePath) -> u64 {
    assert_eq!(c.support(), Support::JUpper);
    p.cells().iter().map(|&cell| c.get_cell(cell) as u64).sum()
}

/// `ε_n*` as the maximum of `‖c‖_p` over all double paths.
pub fn epsilon_star(c: &LusztigDatum) -> u64 {
    all_double_paths(c.rank())
        .iter()
        .map(|p| path_weight(c, p))
        .max()
        .unwrap_or(0)
}

/// Same maximum restricted to paths at the top cell; agrees with
/// [`epsilon_star`] because the top cell dominates every start.
pub fn epsilon_star_at_top(c: &LusztigDatum) -> u64 {
    let n = c.rank();
    double_paths_at(n, TriangleCoord::new(1, 1))
        .iter()
        .map(|p| path_weight(c, p))
        .max()
        .unwrap_or(0)
}

/// Candidate double paths for the `i`-th member of an `l`-tuple: all double
/// paths starting in row `2i−1`, degenerating to single cells on the bottom
/// row.
fn tuple_candidates(n: u8, row: u8) -> Vec<DoublePath> {
    if row == n - 1 {
        return (1..=row)
            .map(|m| DoublePath::degenerate(TriangleCoord::new(row, m)))
            .collect();
    }
    (1..=row)
        .flat_map(|m| double_paths_at(n, TriangleCoord::new(row, m)))
        .collect()
}

/// Maximum of `Σ ‖c‖_{p_i}` over `l`-tuples of mutually cell-disjoint double
/// paths with `p_i` starting in row `2i−1`.
pub fn max_nonintersecting(c: &LusztigDatum, l: usize) -> Result<u64, String> {
    let n = c.rank();
    if l == 0 || l > (n as usize) / 2 {
        return Err(format!("l = {l} out of range 1..={}", n / 2));
    }
    let m = (n as usize) * (n as usize - 1) / 2;
    if m > 64 {
        return Err(format!(
            "rank {n} triangle exceeds the 64-cell search limit"
        ));
    }
    let per_level: Vec<Vec<(u64, u64)>> = (1..=l)
        .map(|i| {
            tuple_candidates(n, (2 * i - 1) as u8)
                .iter()
                .map(|p| {
                    let mut mask = 0u64;
                    for idx in p.cell_indices(n) {
                        mask |= 1 << idx;
                    }
                    (mask, path_weight(c, p))
                })
                .collect()
        })
        .collect();
    fn rec(per_level: &[Vec<(u64, u64)>], level: usize, used: u64, acc: u64, best: &mut u64) {
        if level == per_level.len() {
            *best = (*best).max(acc);
            return;
        }
        for &(mask, w) in &per_level[level] {
            if mask & used == 0 {
                rec(per_level, level + 1, used | mask, acc + w, best);
            }
        }
    }
    let mut best = 0;
    rec(&per_level, 0, 0, 0, &mut best);
    Ok(best)
}

/// The tuple realizing the maximum, for display.
pub fn max_nonintersecting_tuple(c: &LusztigDatum, l: usize) -> Result<Vec<DoublePath>, String> {
    let n = c.rank();
    if l == 0 || l > (n as usize) / 2 {
        return Err(format!("l = {l} out of range 1..={}", n / 2));
    }
    let per_level: Vec<Vec<(DoublePath, u64, u64)>> = (1..=l)
        .map(|i| {
            tuple_candidates(n, (2 * i - 1) as u8)
                .into_iter()
                .map(|p| {
                    let mut mask = 0u64;
                    for idx in p.cell_indices(n) {
                        mask |= 1 << idx;
                    }
                    let weight = path_weight(c, &p);
                    (p, mask, weight)
                })
                .collect()
        })
        .collect();
    fn rec(
        per_level: &[Vec<(DoublePath, u64, u64)>],
        level: usize,
        used: u64,
        acc: u64,
        chosen: &mut Vec<DoublePath>,
        best: &mut (u64, Vec<DoublePath>),
    ) {
        if level == per_level.len() {
            if acc > best.0 || (acc == best.0 && best.1.is_empty()) {
                *best = (acc, chosen.clone());
            }
            return;
        }
        for (p, mask, weight) in &per_level[level] {
            if mask & used == 0 {
                chosen.push(p.clone());
                rec(
                    per_level,
                    level + 1,
                    used | mask,
                    acc + weight,
                    chosen,
                    best,
                );
                chosen.pop();
            }
        }
    }
    let mut best = (0, Vec::new());
    let mut chosen = Vec::new();
    rec(&per_level, 0, 0, 0, &mut chosen, &mut best);
    if best.1.is_empty() && l > 0 {
        return Err("no admissible tuple".to_string());
    }
    Ok(best.1)
}

/// Every `l`-tuple of mutually cell-disjoint double paths with the `i`-th
/// member starting in row `2i−1`.
pub fn all_tuples(n: u8, l: usize) -> Vec<Vec<DoublePath>> {
    let per_level: Vec<Vec<DoublePath>> = (1..=l)
        .map(|i| tuple_candidates(n, (2 * i - 1) as u8))
        .collect();
    fn rec(
        n: u8,
        per_level: &[Vec<DoublePath>],
        level: usize,
        used: u64,
        chosen: &mut Vec<DoublePath>,
        out: &mut Vec<Vec<DoublePath>>,
    ) {
        if level == per_level.len() {
            out.push(chosen.clone());
            return;
        }
        for p in &per_level[level] {
            let mut mask = 0u64;
            for idx in p.cell_indices(n) {
                mask |= 1 << idx;
            }
            if mask & used == 0 {
                chosen.push(p.clone());
                rec(n, per_level, level + 1, used | mask, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &per_level, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// The shape attached to a triangle datum by successive tuple maxima:
/// `λ_{2l−1} = max_l − max_{l−1}`, each part doubled.
pub fn shape_from_paths(c: &LusztigDatum) -> Vec<usize> {
    let n = c.rank();
    let mut shape = Vec::new();
    let mut prev = 0u64;
    for l in 1..=(n as usize) / 2 {
        let cur = max_nonintersecting(c, l).unwrap();
        let part = (cur - prev) as usize;
        shape.push(part);
        shape.push(part);
        prev = cur;
    }
    while shape.last() == Some(&0) {
        shape.pop();
    }
    shape
}

/// Membership in the level-`s` polytope: `ε_n*(c) ≤ s`.
pub fn in_level(c: &LusztigDatum, s: u64) -> bool {
    epsilon_star(c) <= s
}

/// The defining inequalities of the level-`s` polytope, one per double path:
/// the datum summed over the listed cells stays `≤ s`.
pub fn polytope_inequalities(n: u8) -> Vec<Vec<TriangleCoord>> {
    all_double_paths(n).iter().map(|p| p.cells()).collect()
}
