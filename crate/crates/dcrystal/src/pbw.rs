//! Lusztig data and their Kashiwara operators.
//!
//! A Lusztig datum is a vector of nonnegative multiplicities indexed by the
//! positive roots in the fixed convex order.  For `i < n` the operators are
//! computed by a signature rule: the datum contributes alternating runs of
//! `−` and `+` signs read off prescribed pairs of roots, the runs are reduced
//! by cancelling `+` signs against `−` signs to their right, and the operator
//! moves one unit between the two roots of the run carrying the extremal
//! surviving sign.  For `i = n` the lowering operator simply increments the
//! first coordinate, which sits at `α_n`.
//!
//! Data supported on the sum roots only (`upper` support) form the crystal of
//! the quantum nilpotent subalgebra attached to dropping node `n`; their
//! operators use just the first two signature blocks and truncate to `None`
//! instead of falling back to `α_i`.

use crate::delta::{all_cells, TriangleCoord};
use crate::roots::{root_index, Root};
use serde_json::{json, Value};
use std::fmt;

/// Which block of coordinates a datum may occupy.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Support {
    Full,
    /// sum roots only (the triangle)
    JUpper,
    /// difference roots only (the type A part)
    JLower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatumError {
    BadTriangle(String),
    SupportViolation,
    RankMismatch,
}

impl fmt::Display for DatumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatumError::BadTriangle(msg) => write!(f, "bad triangle input: {msg}"),
            DatumError::SupportViolation => write!(f, "entry outside the declared support"),
            DatumError::RankMismatch => write!(f, "rank mismatch"),
        }
    }
}

impl std::error::Error for DatumError {}

/// Multiplicity vector over the positive roots in convex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LusztigDatum {
    n: u8,
    support: Support,
    values: Vec<u32>,
}

impl LusztigDatum {
    pub fn zero(n: u8, support: Support) -> Self {
        let len = (n as usize) * (n as usize - 1);
        LusztigDatum {
            n,
            support,
            values: vec![0; len],
        }
    }

    pub fn from_values(n: u8, support: Support, values: Vec<u32>) -> Result<Self, DatumError> {
        let len = (n as usize) * (n as usize - 1);
        if values.len() != len {
            return Err(DatumError::RankMismatch);
        }
        let d = LusztigDatum { n, support, values };
        if !d.respects_support() {
            return Err(DatumError::SupportViolation);
        }
        Ok(d)
    }

    pub fn rank(&self) -> u8 {
        self.n
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn num_roots(&self) -> usize {
        self.values.len()
    }

    pub fn num_sum_roots(&self) -> usize {
        self.values.len() / 2
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, idx: usize) -> u32 {
        self.values[idx]
    }

    pub fn set_by_index(&mut self, idx: usize, v: u32) {
        self.values[idx] = v;
    }

    pub fn get_root(&self, r: Root) -> u32 {
        self.values[root_index(self.n, r)]
    }

    pub fn set_root(&mut self, r: Root, v: u32) {
        self.values[root_index(self.n, r)] = v;
    }

    pub fn get_cell(&self, c: TriangleCoord) -> u32 {
        self.values[c.index(self.n)]
    }

    pub fn set_cell(&mut self, c: TriangleCoord, v: u32) {
        self.values[c.index(self.n)] = v;
    }

    pub fn total(&self) -> u64 {
        self.values.iter().map(|&v| v as u64).sum()
    }

    pub fn respects_support(&self) -> bool {
        let m = self.num_sum_roots();
        match self.support {
            Support::Full => true,
            Support::JUpper => self.values[m..].iter().all(|&v| v == 0),
            Support::JLower => self.values[..m].iter().all(|&v| v == 0),
        }
    }

    /// Reinterprets the datum with full support.
    pub fn as_full(&self) -> LusztigDatum {
        LusztigDatum {
            n: self.n,
            support: Support::Full,
            values: self.values.clone(),
        }
    }

    /// `wt(c) = −Σ_β c_β · β` in ε-coordinates.
    pub fn weight(&self) -> Vec<i64> {
        let n = self.n as usize;
        let mut v = vec![0i64; n];
        for (k, &mult) in self.values.iter().enumerate() {
            if mult != 0 {
                root_at(self.n, k).add_into(&mut v, -(mult as i64));
            }
        }
        v
    }

    /// Splits into the sum-root part and the difference-root part.
    pub fn split(&self) -> (LusztigDatum, LusztigDatum) {
        let m = self.num_sum_roots();
        let mut upper = LusztigDatum::zero(self.n, Support::JUpper);
        let mut lower = LusztigDatum::zero(self.n, Support::JLower);
        upper.values[..m].copy_from_slice(&self.values[..m]);
        lower.values[m..].copy_from_slice(&self.values[m..]);
        (upper, lower)
    }

    pub fn combine(upper: &LusztigDatum, lower: &LusztigDatum) -> LusztigDatum {
        assert_eq!(upper.n, lower.n);
        let m = upper.num_sum_roots();
        let mut values = upper.values.clone();
        values[m..].copy_from_slice(&lower.values[m..]);
        LusztigDatum {
            n: upper.n,
            support: Support::Full,
            values,
        }
    }

    /// Mirrors a triangle datum left–right inside each row.
    pub fn mirror_rows(&self) -> LusztigDatum {
        assert_eq!(self.support, Support::JUpper);
        let mut out = LusztigDatum::zero(self.n, Support::JUpper);
        for cell in all_cells(self.n) {
            out.set_cell(cell.mirror(), self.get_cell(cell));
        }
        out
    }

    /// Renders the triangle rows `[[c_11],[c_21,c_22],…]` top to bottom.
    pub fn to_triangle_string(&self) -> String {
        assert_eq!(self.support, Support::JUpper);
        let rows: Vec<Vec<u32>> = (1..self.n)
            .map(|r| {
                (1..=r)
                    .map(|m| self.get_cell(TriangleCoord::new(r, m)))
                    .collect()
            })
            .collect();
        serde_json::to_string(&rows).unwrap()
    }

    pub fn from_triangle_string(s: &str) -> Result<Self, DatumError> {
        let rows: Vec<Vec<u32>> =
            serde_json::from_str(s).map_err(|e| DatumError::BadTriangle(e.to_string()))?;
        let n = rows.len() as u8 + 1;
        if n < 4 {
            return Err(DatumError::BadTriangle(format!(
                "{} rows describe rank {}, below the minimum rank 4",
                rows.len(),
                n
            )));
        }
        let mut d = LusztigDatum::zero(n, Support::JUpper);
        for (ri, row) in rows.iter().enumerate() {
            if row.len() != ri + 1 {
                return Err(DatumError::BadTriangle(format!(
                    "row {} has {} entries, expected {}",
                    ri + 1,
                    row.len(),
                    ri + 1
                )));
            }
            for (mi, &v) in row.iter().enumerate() {
                d.set_cell(TriangleCoord::new(ri as u8 + 1, mi as u8 + 1), v);
            }
        }
        Ok(d)
    }

    /// Flat JSON form: the full coordinate vector in convex order.
    pub fn to_flat_json(&self) -> Value {
        let support = match self.support {
            Support::Full => "full",
            Support::JUpper => "upper",
            Support::JLower => "lower",
        };
        json!({ "n": self.n, "support": support, "values": self.values })
    }

    pub fn from_flat_json(v: &Value) -> Result<Self, DatumError> {
        let bad = |m: &str| DatumError::BadTriangle(m.to_string());
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing rank"))? as u8;
        let support = match v.get("support").and_then(Value::as_str) {
            Some("upper") => Support::JUpper,
            Some("lower") => Support::JLower,
            None | Some("full") => Support::Full,
            Some(other) => return Err(bad(&format!("unknown support {other:?}"))),
        };
        let values: Vec<u32> = v
            .get("values")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing values"))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|u| u as u32)
                    .ok_or_else(|| bad("non-integer entry"))
            })
            .collect::<Result<_, _>>()?;
        LusztigDatum::from_values(n, support, values)
    }
}

pub fn root_at(n: u8, idx: usize) -> Root {
    let m = (n as usize) * (n as usize - 1) / 2;
    if idx < m {
        // invert the closed-form sum index
        for j in (2..=n).rev() {
            let base = crate::roots::sum_index(n, j - 1, j);
            if idx >= base && idx < base + (j as usize - 1) {
                let i = j - 1 - (idx - base) as u8;
                return Root::sum(i, j);
            }
        }
        unreachable!()
    } else {
        for i in 1..n {
            let base = crate::roots::diff_index(n, i, i + 1);
            if idx >= base && idx < base + (n - i) as usize {
                let j = i + 1 + (idx - base) as u8;
                return Root::diff(i, j);
            }
        }
        unreachable!()
    }
}

/// `⟨v, h_i⟩` for `v` in ε-coordinates, with `h_0` attached to `−ε_1−ε_2`.
pub fn pairing(v: &[i64], i: u8) -> i64 {
    let n = v.len();
    match i as usize {
        0 => -v[0] - v[1],
        k if k == n => v[n - 2] + v[n - 1],
        k => v[k - 1] - v[k],
    }
}

/// One run of equal signs in a signature sequence.  `from` is the coordinate
/// whose multiplicity gives the run length; acting at this run moves a unit
/// from `from` to `to` (`to = None` marks the plain `α_i` run).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigRun {
    pub minus: bool,
    pub len: u32,
    pub from: usize,
    pub to: Option<usize>,
}

fn push_pair(runs: &mut Vec<SigRun>, c: &LusztigDatum, gamma_pr: Root, gamma: Root) {
    let n = c.rank();
    runs.push(SigRun {
        minus: true,
        len: c.get_root(gamma_pr),
        from: root_index(n, gamma_pr),
        to: Some(root_index(n, gamma)),
    });
    runs.push(SigRun {
        minus: false,
        len: c.get_root(gamma),
        from: root_index(n, gamma),
        to: Some(root_index(n, gamma_pr)),
    });
}

/// The first two signature blocks for `i < n`: sum-root pairs only.
fn sigma_upper_runs(c: &LusztigDatum, i: u8) -> Vec<SigRun> {
    let n = c.rank();
    assert!(1 <= i && i < n);
    let mut runs = Vec::new();
    for j in (i + 2..=n).rev() {
        push_pair(&mut runs, c, Root::sum(i, j), Root::sum(i + 1, j));
    }
    for s in (1..i).rev() {
        push_pair(&mut runs, c, Root::sum(s, i), Root::sum(s, i + 1));
    }
    runs
}

/// The third signature block for `i < n`: difference-root pairs and the
/// closing `α_i` run.
fn sigma_lower_runs(c: &LusztigDatum, i: u8) -> Vec<SigRun> {
    let n = c.rank();
    assert!(1 <= i && i < n);
    let mut runs = Vec::new();
    for s in 1..i {
        push_pair(&mut runs, c, Root::diff(s, i + 1), Root::diff(s, i));
    }
    runs.push(SigRun {
        minus: true,
        len: c.get_root(Root::diff(i, i + 1)),
        from: root_index(n, Root::diff(i, i + 1)),
        to: None,
    });
    runs
}

/// Full signature for `i < n` on a full-support datum.
pub fn sigma_runs(c: &LusztigDatum, i: u8) -> Vec<SigRun> {
    let mut runs = sigma_upper_runs(c, i);
    runs.extend(sigma_lower_runs(c, i));
    runs
}

/// Cancels every `+` against the nearest `−` to its right; what survives is
/// a block of `−` runs followed by a block of `+` runs.
pub fn reduce_runs(runs: &[SigRun]) -> Vec<SigRun> {
    let mut stack: Vec<SigRun> = Vec::new();
    for run in runs {
        let mut run = *run;
        if run.len == 0 {
            continue;
        }
        if run.minus {
            while run.len > 0 {
                match stack.last_mut() {
                    Some(top) if !top.minus => {
                        let t = top.len.min(run.len);
                        top.len -= t;
                        run.len -= t;
                        if top.len == 0 {
                            stack.pop();
                        }
                    }
                    _ => break,
                }
            }
            if run.len > 0 {
                stack.push(run);
            }
        } else {
            stack.push(run);
        }
    }
    stack
}

fn act_at(c: &LusztigDatum, run: &SigRun) -> LusztigDatum {
    let mut out = c.clone();
    out.values[run.from] -= 1;
    if let Some(to) = run.to {
        out.values[to] += 1;
    }
    out
}

fn first_plus(reduced: &[SigRun]) -> Option<&SigRun> {
    reduced.iter().find(|r| !r.minus)
}

fn last_minus(reduced: &[SigRun]) -> Option<&SigRun> {
    reduced.iter().rev().find(|r| r.minus)
}

/// Lowering operator on the full crystal; never dies.
pub fn f_full(c: &LusztigDatum, i: u8) -> LusztigDatum {
    let n = c.rank();
    assert!(1 <= i && i <= n);
    debug_assert!(c.support() == Support::Full || c.as_full().respects_support());
    if i == n {
        let mut out = c.as_full();
        out.values[0] += 1; // β_1 = α_n
        return out;
    }
    let reduced = reduce_runs(&sigma_runs(c, i));
    match first_plus(&reduced) {
        Some(run) => {
            let mut out = act_at(c, run);
            out.support = Support::Full;
            out
        }
        None => {
            let mut out = c.as_full();
            out.values[root_index(n, Root::simple(i, n))] += 1;
            out
        }
    }
}

/// Raising operator on the full crystal; `None` exactly when `ε_i = 0`.
pub fn e_full(c: &LusztigDatum, i: u8) -> Option<LusztigDatum> {
    let n = c.rank();
    assert!(1 <= i && i <= n);
    if i == n {
        if c.values[0] == 0 {
            return None;
        }
        let mut out = c.as_full();
        out.values[0] -= 1;
        return Some(out);
    }
    let reduced = reduce_runs(&sigma_runs(c, i));
    last_minus(&reduced).map(|run| {
        let mut out = act_at(c, run);
        out.support = Support::Full;
        out
    })
}

pub fn eps_full(c: &LusztigDatum, i: u8) -> u32 {
    let n = c.rank();
    if i == n {
        return c.values[0];
    }
    reduce_runs(&sigma_runs(c, i))
        .iter()
        .filter(|r| r.minus)
        .map(|r| r.len)
        .sum()
}

/// `φ_i = ε_i + ⟨wt, h_i⟩`; may be negative away from highest weight.
pub fn phi_full(c: &LusztigDatum, i: u8) -> i64 {
    eps_full(c, i) as i64 + pairing(&c.weight(), i)
}

/// Lowering operator on triangle data for `i < n`; truncates instead of
/// escaping the support.
pub fn f_upper(c: &LusztigDatum, i: u8) -> Option<LusztigDatum> {
    assert_eq!(c.support(), Support::JUpper);
    let reduced = reduce_runs(&sigma_upper_runs(c, i));
    first_plus(&reduced).map(|run| act_at(c, run))
}

pub fn e_upper(c: &LusztigDatum, i: u8) -> Option<LusztigDatum> {
    assert_eq!(c.support(), Support::JUpper);
    let reduced = reduce_runs(&sigma_upper_runs(c, i));
    last_minus(&reduced).map(|run| act_at(c, run))
}

pub fn eps_upper(c: &LusztigDatum, i: u8) -> u32 {
    reduce_runs(&sigma_upper_runs(c, i))
        .iter()
        .filter(|r| r.minus)
        .map(|r| r.len)
        .sum()
}

pub fn phi_upper(c: &LusztigDatum, i: u8) -> u32 {
    reduce_runs(&sigma_upper_runs(c, i))
        .iter()
        .filter(|r| !r.minus)
        .map(|r| r.len)
        .sum()
}

/// Operators on the difference-root part, which is a copy of the type
/// `A_{n−1}` crystal; the fallback at `α_i` keeps the support.
pub fn f_lower(c: &LusztigDatum, i: u8) -> LusztigDatum {
    let n = c.rank();
    assert_eq!(c.support(), Support::JLower);
    assert!(i < n, "node n acts trivially on the difference-root part");
    let reduced = reduce_runs(&sigma_lower_runs(c, i));
    match first_plus(&reduced) {
        Some(run) => act_at(c, run),
        None => {
            let mut out = c.clone();
            out.values[root_index(n, Root::diff(i, i + 1))] += 1;
            out
        }
    }
}

pub fn e_lower(c: &LusztigDatum, i: u8) -> Option<LusztigDatum> {
    assert_eq!(c.support(), Support::JLower);
    let reduced = reduce_runs(&sigma_lower_runs(c, i));
    last_minus(&reduced).map(|run| act_at(c, run))
}

pub fn eps_lower(c: &LusztigDatum, i: u8) -> u32 {
    reduce_runs(&sigma_lower_runs(c, i))
        .iter()
        .filter(|r| r.minus)
        .map(|r| r.len)
        .sum()
}

/// Is this triangle datum a highest-weight element for the type `A_{n−1}`
/// operators?  Exactly the data supported on the cells `ε_{n−1}+ε_n`,
/// `ε_{n−3}+ε_{n−2}`, … with weakly decreasing values down that list.
pub fn is_l_highest(c: &LusztigDatum) -> bool {
    assert_eq!(c.support(), Support::JUpper);
    let n = c.rank();
    let mut chain = Vec::new();
    let mut j = n;
    while j >= 2 {
        chain.push(Root::sum(j - 1, j));
        if j < 4 {
            break;
        }
        j -= 2;
    }
    let chain_idx: Vec<usize> = chain.iter().map(|r| root_index(n, *r)).collect();
    for k in 0..c.num_sum_roots() {
        if c.values[k] != 0 && !chain_idx.contains(&k) {
            return false;
        }
    }
    chain_idx
        .windows(2)
        .all(|w| c.values[w[0]] >= c.values[w[1]])
}

/// Enumerates all data of the given support with entries `0..=bound`.
pub fn enumerate_data(n: u8, support: Support, bound: u32) -> Vec<LusztigDatum> {
    let len = (n as usize) * (n as usize - 1);
    let m = len / 2;
    let slots: Vec<usize> = match support {
        Support::Full => (0..len).collect(),
        Support::JUpper => (0..m).collect(),
        Support::JLower => (m..len).collect(),
    };
    let mut out = Vec::new();
    let mut current = LusztigDatum::zero(n, support);
    fn rec(
        slots: &[usize],
        k: usize,
        bound: u32,
        current: &mut LusztigDatum,
        out: &mut Vec<LusztigDatum>,
    ) {
        if k == slots.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=bound {
            current.values[slots[k]] = v;
            rec(slots, k + 1, bound, current, out);
        }
        current.values[slots[k]] = 0;
    }
    rec(&slots, 0, bound, &mut current, &mut out);
    out
}
