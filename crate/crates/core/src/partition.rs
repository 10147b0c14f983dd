//! Integer partitions and the box arithmetic used everywhere else.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Zero parts are never stored, so the derived ordering is the
/// lexicographic order with absent parts read as 0.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box position, 1-based row and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence. Trailing zeros
    /// are dropped; any other zero or an increase is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (k, w) in parts.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(Error::NotPartition(format!(
                    "part {} ({}) exceeds part {} ({})",
                    k + 2,
                    w[1],
                    k + 1,
                    w[0]
                )));
            }
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the sequence is weakly decreasing; zeros are trimmed.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Sorts arbitrary nonnegative row lengths into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    /// The rectangle (c^r).
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    /// The staircase (i, i-1, ..., 1).
    pub fn staircase(i: usize) -> Self {
        Partition { parts: (1..=i).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// First part, 0 for the empty partition.
    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// 1-based part access with zero padding.
    pub fn part(&self, k: usize) -> usize {
        debug_assert!(k >= 1);
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.width();
        let mut out = vec![0; w];
        for &p in &self.parts {
            for c in out.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts: out }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Whether `q` fits inside `self`.
    pub fn contains(&self, q: &Partition) -> bool {
        q.len() <= self.len() && q.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn fits_in_square(&self, m: usize) -> bool {
        self.len() <= m && self.width() <= m
    }

    /// The complement of `self` in the m×m square, rotated by 180°.
    pub fn complement(&self, m: usize) -> Result<Partition> {
        if self.len() > m {
            return Err(Error::OutOfBounds(format!(
                "{} has {} rows, more than m={}",
                self,
                self.len(),
                m
            )));
        }
        if self.width() > m {
            return Err(Error::OutOfBounds(format!(
                "{} has first part {}, more than m={}",
                self,
                self.width(),
                m
            )));
        }
        let parts = (1..=m).map(|k| m - self.part(m + 1 - k)).collect();
        Ok(Self::from_sorted(parts))
    }

    /// Every cell where a box can be added, sorted by row.
    pub fn outer_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for k in 1..=self.len() + 1 {
            let here = self.part(k);
            if k == 1 || self.part(k - 1) > here {
                out.push(Cell::new(k, here + 1));
            }
        }
        out
    }

    pub fn is_outer_corner(&self, c: Cell) -> bool {
        c.row >= 1
            && c.col >= 1
            && c.row <= self.len() + 1
            && self.part(c.row) + 1 == c.col
            && (c.row == 1 || self.part(c.row - 1) >= c.col)
    }

    pub fn add_box(&self, c: Cell) -> Result<Partition> {
        if !self.is_outer_corner(c) {
            return Err(Error::NotCorner(format!("{} is not an outer corner of {}", c, self)));
        }
        let mut parts = self.parts.clone();
        if c.row > parts.len() {
            parts.push(1);
        } else {
            parts[c.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// All partitions obtained by adding a single box, in corner order.
    pub fn covers_by_one(&self) -> Vec<Partition> {
        self.outer_corners()
            .into_iter()
            .map(|c| self.add_box(c).expect("outer corner"))
            .collect()
    }

    /// Removes the first `k` columns.
    pub fn strip_columns(&self, k: usize) -> Result<Partition> {
        if k > self.width() {
            return Err(Error::OutOfBounds(format!(
                "cannot strip {} columns from {}",
                k, self
            )));
        }
        Ok(Self::from_sorted(
            self.parts.iter().map(|&p| p.saturating_sub(k)).collect(),
        ))
    }

    /// Removes the first `s` rows.
    pub fn strip_rows(&self, s: usize) -> Result<Partition> {
        if s > self.len() {
            return Err(Error::OutOfBounds(format!(
                "cannot strip {} rows from {}",
                s, self
            )));
        }
        Ok(Partition { parts: self.parts[s..].to_vec() })
    }

    /// Componentwise sum, shorter sequence zero-padded.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Self::from_sorted((1..=n).map(|k| self.part(k) + other.part(k)).collect())
    }

    /// Appends `rest` below `self`; fails if the result is not a partition.
    pub fn concat(&self, rest: &Partition) -> Result<Partition> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&rest.parts);
        Partition::new(parts)
    }

    /// Every partition contained in `self`, in lexicographic order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        sub_rec(&self.parts, 0, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn sub_rec(
    outer: &[usize],
    k: usize,
    cap: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition::from_sorted(cur.clone()));
    if k == outer.len() {
        return;
    }
    for v in 1..=outer[k].min(cap) {
        cur.push(v);
        sub_rec(outer, k + 1, v, cur, out);
        cur.pop();
    }
}

/// All partitions of `n`, in lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    bounded_partitions(n, usize::MAX, usize::MAX)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in lexicographic order.
pub fn bounded_partitions(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    bounded_rec(n, max_len, max_part.min(n), &mut cur, &mut out);
    out.reverse();
    out
}

fn bounded_rec(
    n: usize,
    max_len: usize,
    max_part: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if n == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if max_len == 0 {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p);
        bounded_rec(n - p, max_len - 1, p, cur, out);
        cur.pop();
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    /// 0-based index into the stored parts; out of range reads as 0.
    fn index(&self, k: usize) -> &usize {
        self.parts.get(k).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical form `[6,4,3,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("expected '[...]', got {:?}", s),
            })?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut pos = 1;
        for (k, tok) in inner.split(',').enumerate() {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("entry {} ({:?}) is not a positive integer", k + 1, tok),
            })?;
            if v == 0 {
                return Err(Error::Parse {
                    pos,
                    msg: format!("entry {} is zero", k + 1),
                });
            }
            if let Some(&prev) = parts.last() {
                if v > prev {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("entry {} ({}) exceeds the previous entry ({})", k + 1, v, prev),
                    });
                }
            }
            parts.push(v);
            pos += tok.len() + 1;
        }
        Ok(Partition { parts })
    }
}

/// Shorthand for tests and examples; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($x),+]).expect("valid partition")
    };
}
