//! Semistandard tableaux over the barred alphabet `n̄ < ⋯ < 1̄`.
//!
//! `Letter(k)` stands for the barred letter `k̄`; the order is reversed, so
//! `n̄` is the smallest letter.  A [`Tableau`] is a skew semistandard filling
//! (rows weakly increase, columns strictly increase); normal shapes have all
//! row offsets zero, anti-normal shapes are the 180°-rotations of normal
//! ones.  The same column-insertion kernel drives both orientations: the
//! anti-normal operations conjugate through [`Tableau::rotate`], which composes the
//! rotation with the order-reversing relabeling of the alphabet.

use serde_json::{json, Value};
use std::cmp::Ordering;
use std::fmt;

/// The barred letter `k̄`; larger `k` is smaller in the alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter(pub u8);

impl Letter {
    pub fn value(self) -> u8 {
        self.0
    }

    /// Order-reversing relabeling `k̄ ↦ (n+1−k)‾`.
    pub fn complement(self, n: u8) -> Letter {
        Letter(n + 1 - self.0)
    }

    /// Weight in ε-coordinates: `wt(k̄) = −ε_k`.
    pub fn add_weight(self, v: &mut [i64]) {
        v[self.0 as usize - 1] -= 1;
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauError {
    NotSemistandard(String),
    BadShape(String),
    BadJson(String),
    NotInFamily(String),
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauError::NotSemistandard(m) => write!(f, "not semistandard: {m}"),
            TableauError::BadShape(m) => write!(f, "bad shape: {m}"),
            TableauError::BadJson(m) => write!(f, "bad tableau JSON: {m}"),
            TableauError::NotInFamily(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for TableauError {}

/// Conjugate (transpose) of a partition.
pub fn conjugate(lambda: &[usize]) -> Vec<usize> {
    let mut out = vec![0; lambda.first().copied().unwrap_or(0)];
    for &part in lambda {
        for slot in out.iter_mut().take(part) {
            *slot += 1;
        }
    }
    out
}

pub fn is_partition(lambda: &[usize]) -> bool {
    lambda.windows(2).all(|w| w[0] >= w[1]) && !lambda.contains(&0)
}

/// Do all columns of `λ` have even length?
pub fn columns_even(lambda: &[usize]) -> bool {
    conjugate(lambda).iter().all(|&c| c % 2 == 0)
}

/// A skew semistandard tableau.  Row `r` occupies columns
/// `inner[r] .. inner[r] + rows[r].len()` of the ambient grid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    inner: Vec<usize>,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau {
            inner: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn new(inner: Vec<usize>, rows: Vec<Vec<Letter>>) -> Result<Self, TableauError> {
        let t = Tableau { inner, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn outer(&self) -> Vec<usize> {
        self.inner
            .iter()
            .zip(&self.rows)
            .map(|(o, r)| o + r.len())
            .collect()
    }

    pub fn width(&self) -> usize {
        self.outer().into_iter().max().unwrap_or(0)
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        let off = *self.inner.get(r)?;
        if c < off {
            return None;
        }
        self.rows.get(r)?.get(c - off).copied()
    }

    fn set(&mut self, r: usize, c: usize, x: Letter) {
        let off = self.inner[r];
        self.rows[r][c - off] = x;
    }

    pub fn validate(&self) -> Result<(), TableauError> {
        if self.inner.len() != self.rows.len() {
            return Err(TableauError::BadShape("offset/row count mismatch".into()));
        }
        let outer = self.outer();
        // outer shape weakly decreasing top-down, inner too
        for r in 1..self.rows.len() {
            if outer[r] > outer[r - 1] {
                return Err(TableauError::BadShape(format!("outer grows at row {r}")));
            }
            if self.inner[r] > self.inner[r - 1] {
                return Err(TableauError::BadShape(format!("inner grows at row {r}")));
            }
        }
        if let Some(last) = self.rows.last() {
            if last.is_empty() && self.rows.len() > 1 {
                return Err(TableauError::BadShape("trailing empty row".into()));
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            for w in row.windows(2) {
                if w[0] > w[1] {
                    return Err(TableauError::NotSemistandard(format!("row {r} decreases")));
                }
            }
            for (k, &x) in row.iter().enumerate() {
                let c = self.inner[r] + k;
                if let Some(above) = r.checked_sub(1).and_then(|ra| self.get(ra, c)) {
                    if above >= x {
                        return Err(TableauError::NotSemistandard(format!(
                            "column {c} not strict at row {r}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self) -> bool {
        self.inner.iter().all(|&o| o == 0)
    }

    /// Anti-normal: the 180°-rotation of a partition shape.  Rows are
    /// right-aligned to a common outer edge and lengths grow downward.
    pub fn is_antinormal(&self) -> bool {
        let w = self.width();
        self.outer().iter().all(|&o| o == w)
    }

    /// Shape as a partition: row lengths top-down for normal tableaux,
    /// bottom-up for anti-normal ones.
    pub fn shape(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        if !self.is_normal() {
            lens.reverse();
        }
        lens.retain(|&l| l != 0);
        lens
    }

    /// Reading word: rows top to bottom, right to left within each row.
    pub fn row_word(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.num_cells());
        for row in &self.rows {
            out.extend(row.iter().rev().copied());
        }
        out
    }

    /// Cell coordinates in reading order, matching [`Tableau::row_word`].
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_cells());
        for (r, row) in self.rows.iter().enumerate() {
            for k in (0..row.len()).rev() {
                out.push((r, self.inner[r] + k));
            }
        }
        out
    }

    pub fn weight(&self, n: u8) -> Vec<i64> {
        let mut v = vec![0i64; n as usize];
        for row in &self.rows {
            for x in row {
                x.add_weight(&mut v);
            }
        }
        v
    }

    /// 180° rotation composed with the alphabet complement; swaps the normal
    /// and anti-normal orientations and preserves semistandardness.
    pub fn rotate(&self, n: u8) -> Tableau {
        if self.is_empty() {
            return Tableau::empty();
        }
        let w = self.width();
        let h = self.rows.len();
        let mut grid: Vec<Vec<Option<Letter>>> = vec![vec![None; w]; h];
        for (r, row) in self.rows.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                let c = self.inner[r] + k;
                grid[h - 1 - r][w - 1 - c] = Some(x.complement(n));
            }
        }
        Tableau::from_grid(&grid)
    }

    /// Builds a tableau from a grid with `None` outside the shape, validating
    /// contiguity; rows with no cells are skipped.
    pub fn from_cells(grid: &[Vec<Option<Letter>>]) -> Result<Tableau, TableauError> {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for grow in grid {
            let first = grow.iter().position(Option::is_some);
            match first {
                None => continue,
                Some(f) => {
                    let entries: Vec<Letter> = grow[f..]
                        .iter()
                        .take_while(|c| c.is_some())
                        .map(|c| c.unwrap())
                        .collect();
                    if grow[f + entries.len()..].iter().any(Option::is_some) {
                        return Err(TableauError::BadShape("row not contiguous".into()));
                    }
                    inner.push(f);
                    rows.push(entries);
                }
            }
        }
        Tableau::new(inner, rows)
    }

    fn from_grid(grid: &[Vec<Option<Letter>>]) -> Tableau {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for grow in grid {
            let first = grow.iter().position(Option::is_some);
            match first {
                None => {
                    inner.push(0);
                    rows.push(Vec::new());
                }
                Some(f) => {
                    let entries: Vec<Letter> = grow[f..]
                        .iter()
                        .take_while(|c| c.is_some())
                        .map(|c| c.unwrap())
                        .collect();
                    debug_assert!(grow[f + entries.len()..].iter().all(Option::is_none));
                    inner.push(f);
                    rows.push(entries);
                }
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
            inner.pop();
        }
        while rows.first().is_some_and(Vec::is_empty) {
            rows.remove(0);
            inner.remove(0);
        }
        Tableau { inner, rows }
    }

    /// JSON form: rows padded with `null` for the skew offset.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .inner
            .iter()
            .zip(&self.rows)
            .map(|(&off, row)| {
                let mut cells: Vec<Value> = vec![Value::Null; off];
                cells.extend(row.iter().map(|x| json!(x.0)));
                Value::Array(cells)
            })
            .collect();
        json!({ "shape": self.outer(), "inner": self.inner, "rows": rows })
    }

    pub fn from_json(v: &Value) -> Result<Tableau, TableauError> {
        let rows_v = v
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| TableauError::BadJson("missing rows".into()))?;
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for row_v in rows_v {
            let cells = row_v
                .as_array()
                .ok_or_else(|| TableauError::BadJson("row is not an array".into()))?;
            let off = cells.iter().take_while(|c| c.is_null()).count();
            let mut entries = Vec::new();
            for c in &cells[off..] {
                let k = c
                    .as_u64()
                    .ok_or_else(|| TableauError::BadJson("cell is not an integer".into()))?;
                if k == 0 || k > u8::MAX as u64 {
                    return Err(TableauError::BadJson(format!("letter {k} out of range")));
                }
                entries.push(Letter(k as u8));
            }
            inner.push(off);
            rows.push(entries);
        }
        Tableau::new(inner, rows)
    }

    /// Pretty text: one row per line, dots for the skew offset.
    pub fn render_text(&self) -> String {
        if self.is_empty() {
            return "(empty)".to_string();
        }
        let mut out = String::new();
        for (off, row) in self.inner.iter().zip(&self.rows) {
            let mut line = String::new();
            for _ in 0..*off {
                line.push_str(" .");
            }
            for x in row {
                line.push_str(&format!("{:>2}", x.0));
            }
            out.push_str(line.trim_end_matches(' '));
            out.push('\n');
        }
        out
    }
}

/// Column insertion of `a` into a normal tableau: entering each column, the
/// incoming letter bumps the topmost entry that is `≥` it, or lands at the
/// bottom.  Returns the new tableau and the coordinates of the added cell.
pub fn column_insert(t: &Tableau, a: Letter) -> (Tableau, (usize, usize)) {
    debug_assert!(t.is_normal());
    let mut cols: Vec<Vec<Letter>> = Vec::new();
    let width = t.width();
    for c in 0..width {
        let mut col = Vec::new();
        for r in 0..t.num_rows() {
            if let Some(x) = t.get(r, c) {
                col.push(x);
            }
        }
        cols.push(col);
    }
    let mut cur = a;
    let mut placed = None;
    for c in 0..=cols.len() {
        if c == cols.len() {
            cols.push(vec![cur]);
            placed = Some((0, c));
            break;
        }
        match cols[c].iter().position(|&x| x >= cur) {
            None => {
                cols[c].push(cur);
                placed = Some((cols[c].len() - 1, c));
                break;
            }
            Some(r) => {
                cur = std::mem::replace(&mut cols[c][r], cur);
            }
        }
    }
    let height = cols.iter().map(Vec::len).max().unwrap();
    let rows: Vec<Vec<Letter>> = (0..height)
        .map(|r| cols.iter().filter_map(|col| col.get(r).copied()).collect())
        .collect();
    let out = Tableau {
        inner: vec![0; rows.len()],
        rows,
    };
    debug_assert!(out.validate().is_ok());
    (out, placed.unwrap())
}

/// Inserts `a` by column insertion and then places `b` in the cell directly
/// below the new box.  This is the basic step of the northwest Burge map;
/// the placement is always admissible for pairs coming from a valid biword,
/// and the function asserts rather than repairs.
pub fn insert_pair_below(t: &Tableau, a: Letter, b: Letter) -> Tableau {
    let (mut out, (r, c)) = column_insert(t, a);
    if r + 1 == out.num_rows() {
        if c == 0 {
            out.inner.push(0);
            out.rows.push(vec![b]);
        } else {
            panic!("no room below the new box at ({r},{c})");
        }
    } else if out.rows[r + 1].len() == c {
        out.rows[r + 1].push(b);
    } else {
        panic!("cell below the new box is occupied or not addable");
    }
    out.validate()
        .expect("pair insertion broke semistandardness");
    out
}

/// Reverse insertion of `b` into an anti-normal tableau, working from the
/// rightmost column: the rotation conjugate of [`column_insert`].  The
/// reading word of the result is Knuth-equivalent to `b` followed by the old
/// reading word.
pub fn reverse_insert(t: &Tableau, b: Letter, n: u8) -> (Tableau, (usize, usize)) {
    debug_assert!(t.is_antinormal());
    let rotated = t.rotate(n);
    let (out, (r, c)) = column_insert(&rotated, b.complement(n));
    let back = out.rotate(n);
    let cell = (out.num_rows() - 1 - r, out.width() - 1 - c);
    (back, cell)
}

/// `P(w)`: the unique normal tableau Knuth-equivalent to `w`, built by
/// column-inserting the letters left to right (each insertion appends its
/// letter to the reading word up to Knuth moves).
pub fn p_tableau(word: &[Letter]) -> Tableau {
    let mut t = Tableau::empty();
    for &a in word {
        t = column_insert(&t, a).0;
    }
    t
}

/// Which inner corner to slide from first; rectification is confluent, so
/// the choice only matters for testing that fact.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlidePolicy {
    TopFirst,
    BottomFirst,
}

/// Jeu-de-taquin rectification to a normal tableau.
pub fn rectify_with(t: &Tableau, policy: SlidePolicy) -> Tableau {
    let mut inner = t.inner.clone();
    let w = t.width();
    let h = t.num_rows();
    let mut grid: Vec<Vec<Option<Letter>>> = vec![vec![None; w]; h];
    for (r, row) in t.rows.iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            grid[r][t.inner[r] + k] = Some(x);
        }
    }
    loop {
        // removable corners of the inner shape
        let mut corners: Vec<usize> = (0..inner.len())
            .filter(|&r| inner[r] > 0 && (r + 1 >= inner.len() || inner[r + 1] < inner[r]))
            .collect();
        if corners.is_empty() {
            break;
        }
        if policy == SlidePolicy::BottomFirst {
            corners.reverse();
        }
        let r0 = corners[0];
        let c0 = inner[r0] - 1;
        let (mut r, mut c) = (r0, c0);
        loop {
            let right = if c + 1 < w { grid[r][c + 1] } else { None };
            let below = if r + 1 < h { grid[r + 1][c] } else { None };
            match (right, below) {
                (None, None) => break,
                (Some(x), None) => {
                    grid[r][c] = Some(x);
                    grid[r][c + 1] = None;
                    c += 1;
                }
                (None, Some(y)) => {
                    grid[r][c] = Some(y);
                    grid[r + 1][c] = None;
                    r += 1;
                }
                (Some(x), Some(y)) => {
                    if y <= x {
                        grid[r][c] = Some(y);
                        grid[r + 1][c] = None;
                        r += 1;
                    } else {
                        grid[r][c] = Some(x);
                        grid[r][c + 1] = None;
                        c += 1;
                    }
                }
            }
        }
        inner[r0] -= 1;
    }
    let out = Tableau::from_grid(&grid);
    debug_assert!(out.validate().is_ok() && out.is_normal());
    out
}

/// Rectification (jeu de taquin to the normal orientation).
pub fn rectify(t: &Tableau) -> Tableau {
    rectify_with(t, SlidePolicy::TopFirst)
}

/// Jeu de taquin to the anti-normal orientation, via rotation.
pub fn anti_rectify(t: &Tableau, n: u8) -> Tableau {
    rectify(&t.rotate(n)).rotate(n)
}

/// Tensor-rule signature of a word for node `i < n`: `(i+1)‾` is a `+`,
/// `ī` is a `−`, everything else inert.
fn word_signs(word: &[Letter], i: u8) -> Vec<(bool, usize)> {
    let mut out = Vec::new();
    for (k, &x) in word.iter().enumerate() {
        if x.0 == i + 1 {
            out.push((false, k));
        } else if x.0 == i {
            out.push((true, k));
        }
    }
    out
}

fn reduce_signs(signs: &[(bool, usize)]) -> Vec<(bool, usize)> {
    let mut stack: Vec<(bool, usize)> = Vec::new();
    for &(minus, pos) in signs {
        if minus && stack.last().is_some_and(|&(m, _)| !m) {
            stack.pop();
        } else {
            stack.push((minus, pos));
        }
    }
    stack
}

/// Word crystal operator `f̃_i`: turns the letter at the leftmost surviving
/// `+` from `(i+1)‾` into `ī`.
pub fn word_f(word: &[Letter], i: u8) -> Option<Vec<Letter>> {
    let reduced = reduce_signs(&word_signs(word, i));
    let &(_, pos) = reduced.iter().find(|&&(m, _)| !m)?;
    let mut out = word.to_vec();
    out[pos] = Letter(i);
    Some(out)
}

pub fn word_e(word: &[Letter], i: u8) -> Option<Vec<Letter>> {
    let reduced = reduce_signs(&word_signs(word, i));
    let &(_, pos) = reduced.iter().rev().find(|&&(m, _)| m)?;
    let mut out = word.to_vec();
    out[pos] = Letter(i + 1);
    Some(out)
}

pub fn word_eps(word: &[Letter], i: u8) -> u32 {
    reduce_signs(&word_signs(word, i))
        .iter()
        .filter(|&&(m, _)| m)
        .count() as u32
}

pub fn word_phi(word: &[Letter], i: u8) -> u32 {
    reduce_signs(&word_signs(word, i))
        .iter()
        .filter(|&&(m, _)| !m)
        .count() as u32
}

/// `f̃_i` on a tableau for `i < n`: the shape is preserved and the changed
/// letter sits at the reading position the word rule selects.
pub fn tableau_f(t: &Tableau, i: u8) -> Option<Tableau> {
    let word = t.row_word();
    let reduced = reduce_signs(&word_signs(&word, i));
    let &(_, pos) = reduced.iter().find(|&&(m, _)| !m)?;
    let (r, c) = t.reading_cells()[pos];
    let mut out = t.clone();
    out.set(r, c, Letter(i));
    debug_assert!(out.validate().is_ok());
    Some(out)
}

pub fn tableau_e(t: &Tableau, i: u8) -> Option<Tableau> {
    let word = t.row_word();
    let reduced = reduce_signs(&word_signs(&word, i));
    let &(_, pos) = reduced.iter().rev().find(|&&(m, _)| m)?;
    let (r, c) = t.reading_cells()[pos];
    let mut out = t.clone();
    out.set(r, c, Letter(i + 1));
    debug_assert!(out.validate().is_ok());
    Some(out)
}

/// Membership in the anti-normal family: even column lengths, at most `n`
/// rows, letters in range.
pub fn check_se_member(t: &Tableau, n: u8) -> Result<(), TableauError> {
    t.validate()?;
    if !t.is_antinormal() {
        return Err(TableauError::NotInFamily("not anti-normal".into()));
    }
    let shape = t.shape();
    if shape.len() > n as usize {
        return Err(TableauError::NotInFamily("more than n rows".into()));
    }
    if !columns_even(&shape) {
        return Err(TableauError::NotInFamily("odd column length".into()));
    }
    if t.rows.iter().flatten().any(|x| x.0 == 0 || x.0 > n) {
        return Err(TableauError::NotInFamily("letter out of range".into()));
    }
    Ok(())
}

pub fn check_nw_member(t: &Tableau, n: u8) -> Result<(), TableauError> {
    t.validate()?;
    if !t.is_normal() {
        return Err(TableauError::NotInFamily("not normal".into()));
    }
    let shape = t.shape();
    if shape.len() > n as usize {
        return Err(TableauError::NotInFamily("more than n rows".into()));
    }
    if !columns_even(&shape) {
        return Err(TableauError::NotInFamily("odd column length".into()));
    }
    if t.rows.iter().flatten().any(|x| x.0 == 0 || x.0 > n) {
        return Err(TableauError::NotInFamily("letter out of range".into()));
    }
    Ok(())
}

/// Columns of an anti-normal tableau enumerated from the right, each read
/// top to bottom.
fn columns_from_right(t: &Tableau) -> Vec<Vec<Letter>> {
    let w = t.width();
    let mut out = Vec::with_capacity(w);
    for k in 0..w {
        let c = w - 1 - k;
        let mut col = Vec::new();
        for r in 0..t.num_rows() {
            if let Some(x) = t.get(r, c) {
                col.push(x);
            }
        }
        out.push(col);
    }
    out
}

fn antinormal_from_columns(cols_right: &[Vec<Letter>]) -> Tableau {
    let w = cols_right.len();
    let h = cols_right.iter().map(Vec::len).max().unwrap_or(0);
    let mut grid: Vec<Vec<Option<Letter>>> = vec![vec![None; w]; h];
    for (k, col) in cols_right.iter().enumerate() {
        let c = w - 1 - k;
        let top = h - col.len();
        for (dr, &x) in col.iter().enumerate() {
            grid[top + dr][c] = Some(x);
        }
    }
    Tableau::from_grid(&grid)
}

/// Node-`n` signature of an anti-normal tableau: one symbol per column from
/// the right (`+` if the top entry beats `(n−1)‾`, `−` if the column starts
/// with the `n̄ (n−1)‾` domino), with every absent column counting `+`.
fn se_signature(t: &Tableau, n: u8) -> Vec<(bool, usize)> {
    let cols = columns_from_right(t);
    let mut signs = Vec::new();
    for (k, col) in cols.iter().enumerate() {
        match col.first() {
            Some(&top) if top > Letter(n - 1) => signs.push((false, k)),
            Some(&top) if top == Letter(n) && col.get(1) == Some(&Letter(n - 1)) => {
                signs.push((true, k))
            }
            _ => {}
        }
    }
    reduce_signs(&signs)
}

/// Adds one `n̄ (n−1)‾` domino at the leftmost surviving `+`; never dies on
/// the unleveled family (a fresh column is always available).
pub fn f_n_se(t: &Tableau, n: u8) -> Tableau {
    let reduced = se_signature(t, n);
    let mut cols = columns_from_right(t);
    match reduced.iter().find(|&&(m, _)| !m) {
        Some(&(_, k)) => {
            cols[k].insert(0, Letter(n - 1));
            cols[k].insert(0, Letter(n));
        }
        None => cols.push(vec![Letter(n), Letter(n - 1)]),
    }
    let out = antinormal_from_columns(&cols);
    debug_assert!(check_se_member(&out, n).is_ok());
    out
}

/// Removes the `n̄ (n−1)‾` domino at the rightmost surviving `−`.
pub fn e_n_se(t: &Tableau, n: u8) -> Option<Tableau> {
    let reduced = se_signature(t, n);
    let &(_, k) = reduced.iter().rev().find(|&&(m, _)| m)?;
    let mut cols = columns_from_right(t);
    assert_eq!(cols[k][0], Letter(n));
    assert_eq!(cols[k][1], Letter(n - 1));
    cols[k].drain(0..2);
    while cols.last().is_some_and(Vec::is_empty) {
        cols.pop();
    }
    let out = antinormal_from_columns(&cols);
    debug_assert!(check_se_member(&out, n).is_ok());
    Some(out)
}

pub fn eps_n_se(t: &Tableau, n: u8) -> u32 {
    se_signature(t, n).iter().filter(|&&(m, _)| m).count() as u32
}

/// Node-0 signature of a normal tableau: one symbol per column, listed by
/// decreasing column index (so column 1 is read last); `−` if the bottom
/// entry is above `2̄` or the column is absent, `+` if the column ends with
/// the `2̄ 1̄` domino.
fn nw_signature(t: &Tableau) -> Vec<(bool, usize)> {
    let w = t.width();
    let mut signs = Vec::new();
    // one virtual empty column on the left of the sequence
    signs.push((true, w));
    for k in (0..w).rev() {
        let mut col = Vec::new();
        for r in 0..t.num_rows() {
            if let Some(x) = t.get(r, k) {
                col.push(x);
            }
        }
        match col.last() {
            Some(&bot) if bot < Letter(2) => signs.push((true, k)),
            Some(&bot) if bot == Letter(1) && col.len() >= 2 && col[col.len() - 2] == Letter(2) => {
                signs.push((false, k))
            }
            _ => {}
        }
    }
    reduce_signs(&signs)
}

/// Adds a `2̄ 1̄` domino at the bottom of the column holding the rightmost
/// surviving `−` (a fresh column on the right if that sign is virtual).
pub fn e_0_nw(t: &Tableau) -> Tableau {
    let reduced = nw_signature(t);
    let &(_, k) = reduced
        .iter()
        .rev()
        .find(|&&(m, _)| m)
        .expect("virtual column always survives");
    let w = t.width();
    let mut grid: Vec<Vec<Option<Letter>>> = vec![vec![None; w + 1]; t.num_rows() + 2];
    for (r, row) in t.rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            grid[r][t.inner[r] + j] = Some(x);
        }
    }
    let depth = (0..grid.len())
        .take_while(|&r| grid[r][k].is_some())
        .count();
    grid[depth][k] = Some(Letter(2));
    grid[depth + 1][k] = Some(Letter(1));
    let out = Tableau::from_grid(&grid);
    debug_assert!(out.validate().is_ok() && out.is_normal());
    out
}

/// Removes the `2̄ 1̄` domino at the leftmost surviving `+`.
pub fn f_0_nw(t: &Tableau) -> Option<Tableau> {
    let reduced = nw_signature(t);
    let &(_, k) = reduced.iter().find(|&&(m, _)| !m)?;
    let mut grid: Vec<Vec<Option<Letter>>> = vec![vec![None; t.width()]; t.num_rows()];
    for (r, row) in t.rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            grid[r][t.inner[r] + j] = Some(x);
        }
    }
    let depth = (0..grid.len())
        .take_while(|&r| grid[r][k].is_some())
        .count();
    assert_eq!(grid[depth - 1][k], Some(Letter(1)));
    assert_eq!(grid[depth - 2][k], Some(Letter(2)));
    grid[depth - 1][k] = None;
    grid[depth - 2][k] = None;
    let out = Tableau::from_grid(&grid);
    debug_assert!(out.validate().is_ok() && out.is_normal());
    Some(out)
}

pub fn phi_0_nw(t: &Tableau) -> u32 {
    nw_signature(t).iter().filter(|&&(m, _)| !m).count() as u32
}
