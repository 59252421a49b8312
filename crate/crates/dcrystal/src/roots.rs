//! The type `D_n` root system and its Weyl group.
//!
//! Positive roots are `ε_i ± ε_j` with `1 ≤ i < j ≤ n`.  The crate works
//! throughout with one fixed convex order on `Φ+`: all sum roots come first
//! (sorted by larger index descending, then smaller index descending), then
//! all difference roots (sorted lexicographically).  The reduced word
//! realizing this order is produced by [`reduced_word_i0`], and every other
//! reduced word of the longest element is reachable from it by 2- and 3-term
//! braid moves.  Braid moves carry a piecewise-linear transition map on
//! Lusztig data, which the rest of the crate uses as an independent oracle
//! for crystal operators.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

/// Smallest rank for which the Dynkin diagram is honestly of type D.
pub const MIN_RANK: u8 = 4;

/// Errors from root-system and reduced-word computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    RankTooSmall(u8),
    NotReduced,
    InvalidMove { pos: usize, arity: u8 },
    SearchExhausted { visited: usize },
    BadRootLiteral(String),
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::RankTooSmall(n) => write!(f, "rank {n} is below the minimum rank 4"),
            RootError::NotReduced => write!(f, "word is not reduced"),
            RootError::InvalidMove { pos, arity } => {
                write!(f, "invalid {arity}-term braid move at position {pos}")
            }
            RootError::SearchExhausted { visited } => {
                write!(
                    f,
                    "braid-move search exhausted its node budget ({visited} words visited)"
                )
            }
            RootError::BadRootLiteral(s) => write!(f, "cannot parse root literal {s:?}"),
        }
    }
}

impl std::error::Error for RootError {}

/// A positive root: `ε_i + ε_j` (`sum = true`) or `ε_i − ε_j`, with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    pub sum: bool,
    pub i: u8,
    pub j: u8,
}

impl Root {
    pub fn sum(i: u8, j: u8) -> Self {
        assert!(0 < i && i < j, "need 1 <= i < j");
        Root { sum: true, i, j }
    }

    pub fn diff(i: u8, j: u8) -> Self {
        assert!(0 < i && i < j, "need 1 <= i < j");
        Root { sum: false, i, j }
    }

    /// The simple root `α_i`; `α_n = ε_{n−1} + ε_n`, otherwise `ε_i − ε_{i+1}`.
    pub fn simple(i: u8, n: u8) -> Self {
        assert!(1 <= i && i <= n);
        if i == n {
            Root::sum(n - 1, n)
        } else {
            Root::diff(i, i + 1)
        }
    }

    /// Adds this root into an ε-coordinate vector with multiplicity `k`.
    pub fn add_into(&self, v: &mut [i64], k: i64) {
        v[self.i as usize - 1] += k;
        v[self.j as usize - 1] += if self.sum { k } else { -k };
    }

    /// Compact form used in JSON output: `"+i,j"` or `"-i,j"`.
    pub fn compact(&self) -> String {
        format!("{}{},{}", if self.sum { '+' } else { '-' }, self.i, self.j)
    }

    pub fn parse_compact(s: &str) -> Result<Root, RootError> {
        let bad = || RootError::BadRootLiteral(s.to_string());
        let mut chars = s.chars();
        let sum = match chars.next() {
            Some('+') => true,
            Some('-') => false,
            _ => return Err(bad()),
        };
        let rest: &str = chars.as_str();
        let (a, b) = rest.split_once(',').ok_or_else(bad)?;
        let i: u8 = a.trim().parse().map_err(|_| bad())?;
        let j: u8 = b.trim().parse().map_err(|_| bad())?;
        if i == 0 || i >= j {
            return Err(bad());
        }
        Ok(Root { sum, i, j })
    }
}

/// Position of a sum root in the fixed convex order (0-based).
pub fn sum_index(n: u8, i: u8, j: u8) -> usize {
    debug_assert!(0 < i && i < j && j <= n);
    let (n, i, j) = (n as usize, i as usize, j as usize);
    // block of roots with larger index j' > j, then offset inside the j block
    (n - 1 + j) * (n - j) / 2 + (j - 1 - i)
}

/// Position of a difference root in the fixed convex order (0-based).
pub fn diff_index(n: u8, i: u8, j: u8) -> usize {
    debug_assert!(0 < i && i < j && j <= n);
    let (n, i, j) = (n as usize, i as usize, j as usize);
    let m = n * (n - 1) / 2;
    m + (i - 1) * n - i * (i - 1) / 2 + (j - i - 1)
}

pub fn root_index(n: u8, r: Root) -> usize {
    if r.sum {
        sum_index(n, r.i, r.j)
    } else {
        diff_index(n, r.i, r.j)
    }
}

/// The positive roots of `D_n` in the fixed convex order.
#[derive(Clone, Debug)]
pub struct RootSystemD {
    n: u8,
    roots: Vec<Root>,
}

impl RootSystemD {
    pub fn new(n: u8) -> Result<Self, RootError> {
        if n < MIN_RANK {
            return Err(RootError::RankTooSmall(n));
        }
        let mut roots = Vec::with_capacity((n as usize) * (n as usize - 1));
        for j in (2..=n).rev() {
            for i in (1..j).rev() {
                roots.push(Root::sum(i, j));
            }
        }
        for i in 1..n {
            for j in i + 1..=n {
                roots.push(Root::diff(i, j));
            }
        }
        debug_assert!(roots
            .iter()
            .enumerate()
            .all(|(k, r)| root_index(n, *r) == k));
        Ok(RootSystemD { n, roots })
    }

    pub fn rank(&self) -> u8 {
        self.n
    }

    /// `N = n² − n`, the number of positive roots.
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// `M = N/2`, the number of sum roots (the cells of the triangle).
    pub fn num_sum_roots(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_at(&self, k: usize) -> Root {
        self.roots[k]
    }

    pub fn index_of(&self, r: Root) -> usize {
        root_index(self.n, r)
    }

    /// The convex order as a JSON array of `"+i,j"` / `"-i,j"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.roots
                .iter()
                .map(|r| serde_json::Value::String(r.compact()))
                .collect(),
        )
    }

    /// Checks the defining property of a convex order by brute force:
    /// whenever `γ' = γ + γ''`, the root `γ'` lies between `γ` and `γ''`.
    pub fn is_convex(&self) -> bool {
        let pos: HashMap<Root, usize> = self
            .roots
            .iter()
            .copied()
            .enumerate()
            .map(|(k, r)| (r, k))
            .collect();
        for (a, &ra) in self.roots.iter().enumerate() {
            for (b, &rb) in self.roots.iter().enumerate() {
                if a == b {
                    continue;
                }
                if let Some(rc) = root_sum(ra, rb) {
                    if let Some(&c) = pos.get(&rc) {
                        if !(a.min(b) < c && c < a.max(b)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Sum of two positive roots when it is again a positive root.
pub fn root_sum(a: Root, b: Root) -> Option<Root> {
    let mut v = [0i64; 64];
    a.add_into(&mut v, 1);
    b.add_into(&mut v, 1);
    let support: Vec<(usize, i64)> = v
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(k, &x)| (k, x))
        .collect();
    if support.len() != 2 {
        return None;
    }
    let ((p, x), (q, y)) = (support[0], support[1]);
    if x.abs() != 1 || y.abs() != 1 || x < 0 {
        return None;
    }
    // p < q and x = +1 here
    if y > 0 {
        Some(Root::sum(p as u8 + 1, q as u8 + 1))
    } else {
        Some(Root::diff(p as u8 + 1, q as u8 + 1))
    }
}

/// A signed permutation `w`, stored as the images `w(ε_k) = sign · ε_m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm {
    img: Vec<(u8, i8)>,
}

impl SignedPerm {
    pub fn identity(n: u8) -> Self {
        SignedPerm {
            img: (1..=n).map(|k| (k, 1)).collect(),
        }
    }

    pub fn rank(&self) -> u8 {
        self.img.len() as u8
    }

    /// Image of `ε_k` (1-based) as `(index, sign)`.
    pub fn apply_eps(&self, k: u8) -> (u8, i8) {
        self.img[k as usize - 1]
    }

    /// Replaces `w` by `w·s_i`.
    pub fn mul_right_simple(&mut self, i: u8) {
        let n = self.rank();
        assert!(1 <= i && i <= n);
        if i < n {
            self.img.swap(i as usize - 1, i as usize);
        } else {
            let a = self.img[n as usize - 2];
            let b = self.img[n as usize - 1];
            self.img[n as usize - 2] = (b.0, -b.1);
            self.img[n as usize - 1] = (a.0, -a.1);
        }
    }

    /// Applies `w` to a positive root, returning the image root and its sign.
    pub fn apply_root(&self, r: Root) -> (Root, i8) {
        let (a, sa) = self.apply_eps(r.i);
        let (b, sb) = self.apply_eps(r.j);
        let sb = if r.sum { sb } else { -sb };
        // w(r) = sa·ε_a + sb·ε_b with a ≠ b
        let ((p, sp), (q, sq)) = if a < b {
            ((a, sa), (b, sb))
        } else {
            ((b, sb), (a, sa))
        };
        if sp > 0 {
            (
                Root {
                    sum: sq > 0,
                    i: p,
                    j: q,
                },
                1,
            )
        } else {
            (
                Root {
                    sum: sq < 0,
                    i: p,
                    j: q,
                },
                -1,
            )
        }
    }
}

/// The roots `β_k = s_{i_1}⋯s_{i_{k−1}}(α_{i_k})` listed by a reduced word.
/// Fails if the word is not reduced (a negative or repeated root shows up).
pub fn word_to_roots(word: &[u8], n: u8) -> Result<Vec<Root>, RootError> {
    let mut w = SignedPerm::identity(n);
    let mut seen = vec![false; (n as usize) * (n as usize - 1)];
    let mut out = Vec::with_capacity(word.len());
    for &letter in word {
        let (beta, sign) = w.apply_root(Root::simple(letter, n));
        if sign < 0 {
            return Err(RootError::NotReduced);
        }
        let idx = root_index(n, beta);
        if std::mem::replace(&mut seen[idx], true) {
            return Err(RootError::NotReduced);
        }
        out.push(beta);
        w.mul_right_simple(letter);
    }
    Ok(out)
}

pub fn is_reduced(word: &[u8], n: u8) -> bool {
    word_to_roots(word, n).is_ok()
}

/// The fixed reduced word `i_0` of the longest element, as a concatenation of
/// descending blocks: first the blocks sweeping out the sum roots, then the
/// blocks for the type `A_{n−1}` part.
pub fn reduced_word_i0(n: u8) -> Vec<u8> {
    assert!(n >= MIN_RANK);
    let mut word = Vec::with_capacity((n as usize) * (n as usize - 1));
    // upper half: block k runs (n or n−1), n−2, n−3, …, k
    for k in 1..=n - 1 {
        if n.is_multiple_of(2) && k == n - 1 {
            word.push(n);
            continue;
        }
        word.push(if k % 2 == 1 { n } else { n - 1 });
        for t in (k..=n - 2).rev() {
            word.push(t);
        }
    }
    // lower half: block k runs (n−1 or n), n−2, …, k
    for k in 1..=n - 1 {
        if n % 2 == 1 && k == n - 1 {
            word.push(n);
            continue;
        }
        word.push(if n.is_multiple_of(2) { n - 1 } else { n });
        for t in (k..=n - 2).rev() {
            word.push(t);
        }
    }
    word
}

/// Dynkin adjacency for type `D_n`: a chain `1 − 2 − ⋯ − (n−1)` with `n`
/// attached to `n−2`.
pub fn adjacent(a: u8, b: u8, n: u8) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    (hi == lo + 1 && hi < n) || (hi == n && lo == n - 2)
}

/// A single braid move on a reduced word: `arity` 2 swaps commuting letters
/// at `pos`, `arity` 3 rewrites `(i, j, i) → (j, i, j)` starting at `pos`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BraidMove {
    pub pos: usize,
    pub arity: u8,
}

impl BraidMove {
    fn check(&self, word: &[u8], n: u8) -> Result<(), RootError> {
        let err = || RootError::InvalidMove {
            pos: self.pos,
            arity: self.arity,
        };
        match self.arity {
            2 => {
                if self.pos + 1 >= word.len() || adjacent(word[self.pos], word[self.pos + 1], n) {
                    return Err(err());
                }
            }
            3 => {
                if self.pos + 2 >= word.len()
                    || word[self.pos] != word[self.pos + 2]
                    || !adjacent(word[self.pos], word[self.pos + 1], n)
                {
                    return Err(err());
                }
            }
            _ => return Err(err()),
        }
        Ok(())
    }

    pub fn apply_to_word(&self, word: &mut [u8], n: u8) -> Result<(), RootError> {
        self.check(word, n)?;
        match self.arity {
            2 => word.swap(self.pos, self.pos + 1),
            _ => {
                let (i, j) = (word[self.pos], word[self.pos + 1]);
                word[self.pos] = j;
                word[self.pos + 1] = i;
                word[self.pos + 2] = j;
            }
        }
        Ok(())
    }
}

/// Transits a Lusztig datum along braid moves: a 2-move swaps the two
/// coordinates, a 3-move applies `(a,b,c) ↦ (b+c−m, m, a+b−m)` with
/// `m = min(a,c)`.  Returns the transported datum and the final word.
pub fn transition(
    values: &[u32],
    word: &[u8],
    moves: &[BraidMove],
    n: u8,
) -> Result<(Vec<u32>, Vec<u8>), RootError> {
    assert_eq!(values.len(), word.len());
    let mut vals = values.to_vec();
    let mut w = word.to_vec();
    for mv in moves {
        mv.check(&w, n)?;
        match mv.arity {
            2 => vals.swap(mv.pos, mv.pos + 1),
            _ => {
                let (a, b, c) = (
                    vals[mv.pos] as i64,
                    vals[mv.pos + 1] as i64,
                    vals[mv.pos + 2] as i64,
                );
                let m = a.min(c);
                vals[mv.pos] = (b + c - m) as u32;
                vals[mv.pos + 1] = m as u32;
                vals[mv.pos + 2] = (a + b - m) as u32;
            }
        }
        mv.apply_to_word(&mut w, n)?;
    }
    Ok((vals, w))
}

/// Default node budget for [`find_word_path`]; reduced-word graphs explode
/// with rank, and the searches are intended for rank-4 oracle runs.
pub const DEFAULT_SEARCH_CAP: usize = 5_000_000;

/// Breadth-first search through braid moves from `from` to any word
/// satisfying `pred`.  Returns the move sequence (shortest in move count).
pub fn find_word_path<F>(
    from: &[u8],
    n: u8,
    cap: usize,
    pred: F,
) -> Result<Vec<BraidMove>, RootError>
where
    F: Fn(&[u8]) -> bool,
{
    if pred(from) {
        return Ok(Vec::new());
    }
    let mut nodes: Vec<(usize, BraidMove)> = Vec::new(); // parent index + move taken
    let mut words: Vec<Vec<u8>> = vec![from.to_vec()];
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    seen.insert(from.to_vec(), 0);
    nodes.push((usize::MAX, BraidMove { pos: 0, arity: 0 }));
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    while let Some(cur) = queue.pop_front() {
        let word = words[cur].clone();
        let mut candidates = Vec::new();
        for pos in 0..word.len().saturating_sub(1) {
            if !adjacent(word[pos], word[pos + 1], n) {
                candidates.push(BraidMove { pos, arity: 2 });
            }
        }
        for pos in 0..word.len().saturating_sub(2) {
            if word[pos] == word[pos + 2] && adjacent(word[pos], word[pos + 1], n) {
                candidates.push(BraidMove { pos, arity: 3 });
            }
        }
        for mv in candidates {
            let mut next = word.clone();
            mv.apply_to_word(&mut next, n)?;
            if seen.contains_key(&next) {
                continue;
            }
            if seen.len() >= cap {
                return Err(RootError::SearchExhausted {
                    visited: seen.len(),
                });
            }
            let idx = words.len();
            seen.insert(next.clone(), idx);
            let hit = pred(&next);
            words.push(next);
            nodes.push((cur, mv));
            if hit {
                // walk back to the root
                let mut path = Vec::new();
                let mut at = idx;
                while at != 0 {
                    let (parent, mv) = nodes[at];
                    path.push(mv);
                    at = parent;
                }
                path.reverse();
                return Ok(path);
            }
            queue.push_back(idx);
        }
    }
    Err(RootError::SearchExhausted {
        visited: seen.len(),
    })
}
