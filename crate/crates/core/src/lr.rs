//! Littlewood-Richardson tableaux on chains of straight, skew and rotated
//! skew shapes.
//!
//! A chain places its blocks from north-east to south-west, so the blocks
//! share no rows and no columns. Column strictness is then a per-block
//! condition and the reverse reading word is the concatenation of the
//! per-block words in chain order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::ControlFlow;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub type Label = u8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    Straight(Partition),
    /// outer/inner in the usual English position.
    Skew { outer: Partition, inner: Partition },
    /// outer/inner rotated by 180°.
    Rotated { outer: Partition, inner: Partition },
}

impl Block {
    pub fn skew(outer: Partition, inner: Partition) -> Result<Block> {
        check_inner(&outer, &inner)?;
        Ok(Block::Skew { outer, inner })
    }

    pub fn rotated(outer: Partition, inner: Partition) -> Result<Block> {
        check_inner(&outer, &inner)?;
        Ok(Block::Rotated { outer, inner })
    }

    /// Width of the bounding frame.
    pub fn width(&self) -> usize {
        match self {
            Block::Straight(p) => p.width(),
            Block::Skew { outer, .. } | Block::Rotated { outer, .. } => outer.width(),
        }
    }

    /// Rows top to bottom as (first column, length), columns 0-based within
    /// the frame. Empty rows inside the frame are kept.
    pub fn rows(&self) -> Vec<(usize, usize)> {
        match self {
            Block::Straight(p) => p.parts().iter().map(|&l| (0, l)).collect(),
            Block::Skew { outer, inner } => (1..=outer.len())
                .map(|k| (inner.part(k), outer.part(k) - inner.part(k)))
                .collect(),
            Block::Rotated { outer, inner } => {
                let w = outer.width();
                (1..=outer.len())
                    .rev()
                    .map(|k| (w - outer.part(k), outer.part(k) - inner.part(k)))
                    .collect()
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Block::Straight(p) => p.weight(),
            Block::Skew { outer, inner } | Block::Rotated { outer, inner } => {
                outer.weight() - inner.weight()
            }
        }
    }
}

fn check_inner(outer: &Partition, inner: &Partition) -> Result<()> {
    if outer.contains(inner) {
        Ok(())
    } else {
        Err(Error::Shape(format!("{} is not contained in {}", inner, outer)))
    }
}

/// The 180° rotation of outer/inner as a chain block.
pub fn rotate180(outer: &Partition, inner: &Partition) -> Result<Block> {
    Block::rotated(outer.clone(), inner.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewChain {
    blocks: Vec<Block>,
}

impl SkewChain {
    /// Empty blocks are dropped.
    pub fn new(blocks: Vec<Block>) -> Self {
        SkewChain {
            blocks: blocks.into_iter().filter(|b| b.size() > 0).collect(),
        }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Block::size).sum()
    }

    /// Canonical text used as a memo key.
    pub fn key(&self) -> String {
        let mut s = String::new();
        for b in &self.blocks {
            match b {
                Block::Straight(p) => s.push_str(&format!("S{}", p)),
                Block::Skew { outer, inner } => s.push_str(&format!("K{}/{}", outer, inner)),
                Block::Rotated { outer, inner } => s.push_str(&format!("R{}/{}", outer, inner)),
            }
        }
        s
    }
}

/// A filling of a chain. `labels[b][r]` lists the labels of row `r` of block
/// `b` from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub shape: SkewChain,
    pub labels: Vec<Vec<Vec<Label>>>,
}

impl Tableau {
    /// Checks that the labels fit the shape row by row.
    pub fn new(shape: SkewChain, labels: Vec<Vec<Vec<Label>>>) -> Result<Tableau> {
        let ok = labels.len() == shape.blocks.len()
            && shape.blocks.iter().zip(&labels).all(|(b, rows)| {
                let geo = b.rows();
                geo.len() == rows.len() && geo.iter().zip(rows).all(|(g, r)| g.1 == r.len())
            });
        if !ok {
            return Err(Error::Shape("labels do not match the chain".into()));
        }
        Ok(Tableau { shape, labels })
    }

    /// Rows of the whole chain, top to bottom, skipping empty rows.
    pub fn rows(&self) -> impl Iterator<Item = &[Label]> {
        self.labels.iter().flatten().filter(|r| !r.is_empty()).map(|r| r.as_slice())
    }

    pub fn content(&self) -> Vec<usize> {
        let mut c = Vec::new();
        for &a in self.rows().flatten() {
            let a = a as usize;
            if c.len() < a {
                c.resize(a, 0);
            }
            c[a - 1] += 1;
        }
        c
    }

    pub fn is_semistandard(&self) -> bool {
        for (b, rows) in self.shape.blocks.iter().zip(&self.labels) {
            let geo = b.rows();
            for (r, row) in rows.iter().enumerate() {
                if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                    return false;
                }
                if r == 0 {
                    continue;
                }
                let (s0, _) = geo[r - 1];
                let (s1, _) = geo[r];
                for (k, &a) in row.iter().enumerate() {
                    let col = s1 + k;
                    if col >= s0 {
                        if let Some(&up) = rows[r - 1].get(col - s0) {
                            if up >= a {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether the tableau is an LR tableau of the given type.
    pub fn is_lr(&self, ty: &Partition) -> bool {
        self.is_semistandard()
            && Partition::new(self.content()).ok().as_ref() == Some(ty)
            && is_lattice(&reverse_reading_word(self))
    }
}

impl fmt::Display for Tableau {
    /// One line per row; absent cells to the left are shown as dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = self.shape.blocks.iter().map(Block::width).collect();
        let mut first = true;
        for (b, (block, rows)) in self.shape.blocks.iter().zip(&self.labels).enumerate() {
            let offset: usize = widths[b + 1..].iter().sum();
            for ((start, _), row) in block.rows().into_iter().zip(rows) {
                if !first {
                    writeln!(f)?;
                }
                first = false;
                let mut cells: Vec<String> = vec![".".to_string(); offset + start];
                cells.extend(row.iter().map(|a| a.to_string()));
                f.write_str(&cells.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Row k filled with label k.
pub fn superstandard(nu: &Partition) -> Tableau {
    let rows = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &l)| vec![(k + 1) as Label; l])
        .collect();
    let shape = SkewChain::new(vec![Block::Straight(nu.clone())]);
    let labels = if shape.blocks.is_empty() { vec![] } else { vec![rows] };
    Tableau { shape, labels }
}

/// Every prefix has at least as many i's as (i+1)'s.
pub fn is_lattice(word: &[Label]) -> bool {
    let mut counts = [0usize; 256];
    for &a in word {
        let a = a as usize;
        if a == 0 {
            return false;
        }
        counts[a] += 1;
        if a > 1 && counts[a] > counts[a - 1] {
            return false;
        }
    }
    true
}

/// Rows top to bottom, each read right to left.
pub fn reverse_reading_word(t: &Tableau) -> Vec<Label> {
    t.rows().flat_map(|r| r.iter().rev().copied()).collect()
}

/// Peels the rows of `t` from the bottom and checks that each row removes a
/// horizontal strip from what is left of the superstandard tableau of `ty`.
pub fn validate_horizontal_strips(t: &Tableau, ty: &Partition) -> bool {
    let mut rem: Vec<usize> = ty.parts().to_vec();
    let rows: Vec<&[Label]> = t.rows().collect();
    for row in rows.iter().rev() {
        let mut take = vec![0usize; rem.len()];
        for &a in row.iter() {
            let a = a as usize;
            if a == 0 || a > rem.len() {
                return false;
            }
            take[a - 1] += 1;
        }
        let old = rem.clone();
        for a in 0..rem.len() {
            if take[a] > old[a] {
                return false;
            }
            rem[a] = old[a] - take[a];
            if a + 1 < old.len() && rem[a] < old[a + 1] {
                return false;
            }
        }
    }
    rem.iter().all(|&r| r == 0)
}

/// Cells of a chain in reverse reading order with their neighbours.
struct Layout {
    /// (block, row, position from the left) per cell.
    place: Vec<(usize, usize, usize)>,
    /// Index of the cell immediately to the right, read just before.
    right: Vec<Option<usize>>,
    /// Index of the cell directly above in the same block.
    above: Vec<Option<usize>>,
    /// Number of cells below in the same column.
    depth: Vec<usize>,
    row_shapes: Vec<Vec<(usize, usize)>>,
}

impl Layout {
    fn new(shape: &SkewChain) -> Layout {
        let mut place = Vec::new();
        let mut right = Vec::new();
        let mut above = Vec::new();
        let mut depth = Vec::new();
        let mut row_shapes = Vec::new();
        for (b, block) in shape.blocks.iter().enumerate() {
            let geo = block.rows();
            // index of the cell at (row, col) within this block
            let mut index: HashMap<(usize, usize), usize> = HashMap::new();
            for (r, &(start, len)) in geo.iter().enumerate() {
                for k in (0..len).rev() {
                    let col = start + k;
                    let idx = place.len();
                    place.push((b, r, k));
                    right.push(if k + 1 < len { Some(idx - 1) } else { None });
                    above.push(if r > 0 { index.get(&(r - 1, col)).copied() } else { None });
                    let mut d = 0;
                    for &(s2, l2) in &geo[r + 1..] {
                        if s2 <= col && col < s2 + l2 {
                            d += 1;
                        } else {
                            break;
                        }
                    }
                    depth.push(d);
                    index.insert((r, col), idx);
                }
            }
            row_shapes.push(geo);
        }
        Layout {
            place,
            right,
            above,
            depth,
            row_shapes,
        }
    }

    fn to_tableau(&self, shape: &SkewChain, word: &[Label]) -> Tableau {
        let mut labels: Vec<Vec<Vec<Label>>> = self
            .row_shapes
            .iter()
            .map(|g| g.iter().map(|&(_, l)| vec![0; l]).collect())
            .collect();
        for (i, &(b, r, k)) in self.place.iter().enumerate() {
            labels[b][r][k] = word[i];
        }
        Tableau {
            shape: shape.clone(),
            labels,
        }
    }
}

struct Search<'a> {
    layout: &'a Layout,
    /// Upper bound on the multiplicity of each label.
    caps: &'a [usize],
    counts: Vec<usize>,
    word: Vec<Label>,
}

impl Search<'_> {
    fn run<F>(&mut self, idx: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Label], &[usize]) -> ControlFlow<()>,
    {
        if idx == self.word.len() {
            return visit(&self.word, &self.counts);
        }
        let n = self.caps.len();
        let lo = self.layout.above[idx].map_or(1, |u| self.word[u] as usize + 1);
        let mut hi = self.layout.right[idx].map_or(n, |r| self.word[r] as usize);
        hi = hi.min(n.saturating_sub(self.layout.depth[idx]));
        for a in lo..=hi {
            let c = self.counts[a - 1];
            if c >= self.caps[a - 1] || (a > 1 && c >= self.counts[a - 2]) {
                continue;
            }
            self.counts[a - 1] += 1;
            self.word[idx] = a as Label;
            let flow = self.run(idx + 1, visit);
            self.counts[a - 1] -= 1;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Backtracks over all SSYT fillings of `shape` whose reading word, read
/// after a lattice prefix of content `start`, stays lattice and uses label
/// a at most `caps[a-1]` times in total.
fn search_from<F>(shape: &SkewChain, caps: &[usize], start: &[usize], mut visit: F) -> Layout
where
    F: FnMut(&Layout, &[Label], &[usize]) -> ControlFlow<()>,
{
    let layout = Layout::new(shape);
    let mut counts = start.to_vec();
    counts.resize(caps.len(), 0);
    let mut s = Search {
        layout: &layout,
        caps,
        counts,
        word: vec![0; layout.place.len()],
    };
    let _ = s.run(0, &mut |w: &[Label], c: &[usize]| visit(&layout, w, c));
    layout
}

fn search<F>(shape: &SkewChain, ty: &Partition, visit: F) -> Result<Layout>
where
    F: FnMut(&Layout, &[Label], &[usize]) -> ControlFlow<()>,
{
    check_size(shape, ty, &Partition::empty())?;
    Ok(search_from(shape, ty.parts(), &[], visit))
}

fn check_size(shape: &SkewChain, ty: &Partition, start: &Partition) -> Result<()> {
    if !ty.contains(start) || shape.size() + start.weight() != ty.weight() {
        return Err(Error::Shape(format!(
            "shape has {} cells, prefix {} and type {} do not add up",
            shape.size(),
            start,
            ty
        )));
    }
    if ty.len() > Label::MAX as usize {
        return Err(Error::OutOfBounds(format!("type {} has too many parts", ty)));
    }
    Ok(())
}

/// Number of LR tableaux of the given shape and type.
pub fn count_lr(shape: &SkewChain, ty: &Partition) -> Result<u64> {
    let mut n = 0u64;
    search(shape, ty, |_, _, _| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}

/// Number of fillings of `shape` that complete a lattice prefix of content
/// `start` to an LR tableau of type `ty`. Equals the count for the chain
/// `start × shape`, whose first block is forced to be superstandard.
pub fn count_lr_from(shape: &SkewChain, ty: &Partition, start: &Partition) -> Result<u64> {
    check_size(shape, ty, start)?;
    let mut n = 0u64;
    search_from(shape, ty.parts(), start.parts(), |_, _, _| {
        n += 1;
        ControlFlow::Continue(())
    });
    Ok(n)
}

/// Whether at least one LR tableau of the given shape and type exists.
pub fn exists_lr(shape: &SkewChain, ty: &Partition) -> Result<bool> {
    let mut found = false;
    search(shape, ty, |_, _, _| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// All LR tableaux of the given shape and type, ordered lexicographically by
/// reverse reading word.
pub fn enumerate_lr(shape: &SkewChain, ty: &Partition) -> Result<Vec<Tableau>> {
    let mut words = Vec::new();
    let layout = search(shape, ty, |_, w, _| {
        words.push(w.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(words.iter().map(|w| layout.to_tableau(shape, w)).collect())
}

/// Counts the LR tableaux of `shape` of every possible type.
pub fn lr_by_content(shape: &SkewChain) -> BTreeMap<Partition, u64> {
    let rows = shape.blocks.iter().flat_map(|b| b.rows()).filter(|r| r.1 > 0).count();
    let caps = vec![shape.size(); rows.min(Label::MAX as usize)];
    let mut out = BTreeMap::new();
    search_from(shape, &caps, &[], |_, _, counts| {
        *out.entry(Partition::from_sorted(counts.to_vec())).or_insert(0) += 1;
        ControlFlow::Continue(())
    });
    out
}

/// A thread-safe memo for `count_lr`. Lookups never change results.
#[derive(Default)]
pub struct LrCache {
    map: RwLock<HashMap<(String, Partition), u64>>,
}

impl LrCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self, shape: &SkewChain, ty: &Partition) -> Result<u64> {
        let key = (shape.key(), ty.clone());
        if let Some(&n) = self.map.read().expect("lr cache poisoned").get(&key) {
            return Ok(n);
        }
        let n = count_lr(shape, ty)?;
        self.map.write().expect("lr cache poisoned").insert(key, n);
        Ok(n)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("lr cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
