//! Injections from LR(γ × σ × (ν/η)*, ν') into LR(γ × σ × (μ/η)*, μ'), where
//! μ is the predicted cover of ν and μ/ν is the single box x.
//!
//! The algorithms are stated on the rotated block (ν/η)*, where "the last
//! row" is the bottom row and "left" is the rotated left. [`WorkGrid`] keeps
//! labels at their unrotated positions (R, C) of ν/η and offers the rotated
//! moves: rotated up is R+1, rotated left is C+1, rotated south-west is
//! (R-1, C+1), and the rightmost cell of a rotated row R is (R, η_R + 1).

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::classify::{is_type1_reading, predicted_cover, type2_reading};
use crate::error::{Error, Result};
use crate::lr::{count_lr, enumerate_lr, Block, Label, SkewChain, Tableau};
use crate::par;
use crate::partition::{Cell, Partition};
use crate::schur::{LambdaIndex, ProductTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Type 1 ν with (ν_1^{ν_1 - 1}) ⊆ ν.
    Type1Rect,
    /// Type 1 ν with ν_1 = 4 and ν'_4 = 2.
    Width4,
    /// Type 2 ν = β + (s^s) + α with β_1 = 1.
    Type2Col1,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Type1Rect => "type1-rect",
            Algorithm::Width4 => "width4",
            Algorithm::Type2Col1 => "type2-col1",
        }
    }

    pub fn parse(s: &str) -> Option<Algorithm> {
        [Algorithm::Type1Rect, Algorithm::Width4, Algorithm::Type2Col1]
            .into_iter()
            .find(|a| a.name() == s)
    }

    /// Whether `nu` satisfies the hypothesis of this algorithm.
    pub fn applies_to(self, nu: &Partition) -> bool {
        match self {
            Algorithm::Type1Rect => {
                let i = nu.width();
                is_type1_reading(nu) && (i == 1 || nu.part(i - 1) == i)
            }
            Algorithm::Width4 => {
                is_type1_reading(nu) && nu.width() == 4 && nu.conjugate().part(4) == 2
            }
            Algorithm::Type2Col1 => type2_reading(nu).is_some_and(|(beta, _, _)| beta.width() == 1),
        }
    }

    /// The first algorithm whose hypothesis `nu` satisfies.
    pub fn select(nu: &Partition) -> Option<Algorithm> {
        [Algorithm::Type1Rect, Algorithm::Width4, Algorithm::Type2Col1]
            .into_iter()
            .find(|a| a.applies_to(nu))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectionContext {
    pub nu: Partition,
    pub mu: Partition,
    pub eta: Partition,
    pub gamma: Partition,
    pub sigma: Partition,
    /// The box μ/ν in unrotated coordinates.
    pub x: Cell,
    /// Row of x counted from the bottom of the rotated block.
    pub r_x: usize,
}

impl InjectionContext {
    pub fn new(nu: &Partition, mu: &Partition, idx: &LambdaIndex) -> Result<Self> {
        if !mu.contains(nu) || mu.weight() != nu.weight() + 1 {
            return Err(Error::Precondition(format!("{} is not {} plus one box", mu, nu)));
        }
        if !nu.contains(&idx.eta) {
            return Err(Error::Precondition(format!("{} is not inside {}", idx.eta, nu)));
        }
        let r = (1..=mu.len()).find(|&r| mu.part(r) != nu.part(r)).expect("one box differs");
        let x = Cell::new(r, mu.part(r));
        Ok(InjectionContext {
            nu: nu.clone(),
            mu: mu.clone(),
            eta: idx.eta.clone(),
            gamma: idx.gamma.clone(),
            sigma: idx.sigma.clone(),
            x,
            r_x: x.row,
        })
    }

    pub fn source_shape(&self) -> Result<SkewChain> {
        self.chain(&self.nu)
    }

    pub fn target_shape(&self) -> Result<SkewChain> {
        self.chain(&self.mu)
    }

    fn chain(&self, outer: &Partition) -> Result<SkewChain> {
        Ok(SkewChain::new(vec![
            Block::Straight(self.gamma.clone()),
            Block::Straight(self.sigma.clone()),
            Block::rotated(outer.clone(), self.eta.clone())?,
        ]))
    }
}

/// One bump: the label at `pos` was replaced by `new`, pushing out `old`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bump {
    pub pos: Cell,
    pub old: Label,
    pub new: Label,
}

/// Mutable copy of a tableau with the last block addressed by unrotated
/// coordinates.
#[derive(Clone, Debug)]
pub struct WorkGrid {
    ctx: InjectionContext,
    /// Labels of the γ and σ blocks, untouched by the algorithms.
    head: Vec<Vec<Vec<Label>>>,
    /// `cells[R-1][C-1]`, `None` outside ν/η.
    cells: Vec<Vec<Option<Label>>>,
    x_label: Option<Label>,
    pub trace: Vec<Bump>,
}

impl WorkGrid {
    pub fn new(t: &Tableau, ctx: &InjectionContext) -> Result<WorkGrid> {
        if t.shape != ctx.source_shape()? {
            return Err(Error::Shape("tableau does not have the source shape".into()));
        }
        let nu = &ctx.nu;
        let eta = &ctx.eta;
        let mut cells = vec![vec![None; ctx.mu.width()]; ctx.mu.len()];
        let mut head = t.labels.clone();
        let has_d = matches!(t.shape.blocks().last(), Some(Block::Rotated { .. }));
        if has_d {
            let rows = head.pop().expect("last block");
            for (top, labels) in rows.iter().enumerate() {
                let r = nu.len() - top;
                // left to right in the rotation is right to left unrotated
                for (k, &a) in labels.iter().enumerate() {
                    let c = nu.part(r) - k;
                    debug_assert!(c > eta.part(r));
                    cells[r - 1][c - 1] = Some(a);
                }
            }
        }
        Ok(WorkGrid {
            ctx: ctx.clone(),
            head,
            cells,
            x_label: None,
            trace: Vec::new(),
        })
    }

    pub fn ctx(&self) -> &InjectionContext {
        &self.ctx
    }

    /// Label at (r, c) if the cell belongs to ν/η.
    pub fn get(&self, r: usize, c: usize) -> Option<Label> {
        if r == 0 || c == 0 {
            return None;
        }
        self.cells.get(r - 1).and_then(|row| row.get(c - 1)).copied().flatten()
    }

    pub fn present(&self, r: usize, c: usize) -> bool {
        self.get(r, c).is_some()
    }

    /// Unrotated column of the rightmost cell of rotated row `r`.
    pub fn rightmost(&self, r: usize) -> Option<usize> {
        let c = self.ctx.eta.part(r) + 1;
        self.present(r, c).then_some(c)
    }

    /// Labels of rotated row `r` from left to right.
    pub fn row(&self, r: usize) -> Vec<Label> {
        let (lo, hi) = (self.ctx.eta.part(r) + 1, self.ctx.nu.part(r));
        (lo..=hi).rev().filter_map(|c| self.get(r, c)).collect()
    }

    /// Every label of the γ and σ blocks.
    pub fn head_labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.head.iter().flatten().flatten().copied()
    }

    /// Puts `v` at (r, c) and returns the label it displaced.
    pub fn bump(&mut self, r: usize, c: usize, v: Label) -> Result<Label> {
        let old = self.get(r, c).ok_or_else(|| {
            Error::Internal(format!("bump into ({},{}), which is not a box of the shape", r, c))
        })?;
        self.cells[r - 1][c - 1] = Some(v);
        self.trace.push(Bump {
            pos: Cell::new(r, c),
            old,
            new: v,
        });
        Ok(old)
    }

    pub fn place_x(&mut self, v: Label) {
        self.x_label = Some(v);
    }

    /// The rewritten tableau on the target shape.
    pub fn finish(mut self) -> Result<Tableau> {
        let x = self.ctx.x;
        let v = self
            .x_label
            .ok_or_else(|| Error::Internal("box x was never filled".into()))?;
        self.cells[x.row - 1][x.col - 1] = Some(v);
        let mu = &self.ctx.mu;
        let eta = &self.ctx.eta;
        let mut labels = self.head;
        let rows: Vec<Vec<Label>> = (1..=mu.len())
            .rev()
            .map(|r| {
                (eta.part(r) + 1..=mu.part(r))
                    .rev()
                    .map(|c| self.cells[r - 1][c - 1].expect("target cell filled"))
                    .collect()
            })
            .collect();
        labels.push(rows);
        Tableau::new(self.ctx.target_shape()?, labels)
    }
}

fn label(v: usize) -> Label {
    v as Label
}

/// Type 1 with (i^{i-1}) ⊆ ν, i = ν_1.
pub fn inject_type1_rect(t: &Tableau, ctx: &InjectionContext) -> Result<Tableau> {
    let nu = &ctx.nu;
    let i = nu.width();
    if !Algorithm::Type1Rect.applies_to(nu) || ctx.x != Cell::new(1, i + 1) {
        return Err(Error::Precondition(format!("{} is outside the type1-rect hypothesis", nu)));
    }
    let mut g = WorkGrid::new(t, ctx)?;
    let eta1 = ctx.eta.width();
    let j = nu.part(i);

    // (1) q sits in the first column (unrotated column i), row i-j from the bottom.
    let q = if eta1 < i && j < i {
        Some(g.get(i - j, i).ok_or_else(|| Error::Internal("no label q".into()))? as usize)
    } else {
        None
    };
    // (2)
    if eta1 == i {
        g.place_x(label(i + 1));
        return g.finish();
    }
    let leftmost_last = g.get(1, i);
    // (3)
    let mut pos = (1, eta1 + 1);
    let mut v = g.bump(pos.0, pos.1, label(i + 1))? as usize;
    // (4), (5)
    let up = !(j == i || eta1 >= 2) && leftmost_last == Some(label(i));
    if up {
        let q = q.expect("defined when j < i");
        // (6)
        loop {
            if (q == j && v == j + 1) || (q == j + 1 && v == j) {
                break;
            }
            pos = (pos.0 + 1, pos.1);
            v = g.bump(pos.0, pos.1, label(v))? as usize;
        }
    }
    // (7)
    while g.present(pos.0, pos.1 + 1) {
        pos = (pos.0, pos.1 + 1);
        v = g.bump(pos.0, pos.1, label(v))? as usize;
    }
    // (8)
    g.place_x(label(v));
    g.finish()
}

/// Type 1 with ν_1 = 4 and ν'_4 = 2.
pub fn inject_width4(t: &Tableau, ctx: &InjectionContext) -> Result<Tableau> {
    let nu = &ctx.nu;
    if !Algorithm::Width4.applies_to(nu) || ctx.x != Cell::new(1, 5) {
        return Err(Error::Precondition(format!("{} is outside the width4 hypothesis", nu)));
    }
    let mut g = WorkGrid::new(t, ctx)?;
    let eta = &ctx.eta;
    // (1)
    if eta.width() == 4 {
        g.place_x(5);
        return g.finish();
    }
    let fours_total = nu.conjugate().part(4);
    let fours_last = g.row(1).iter().filter(|&&a| a == 4).count();
    // (2)
    let mut pos = (1, eta.part(1) + 1);
    let mut v = g.bump(pos.0, pos.1, 5)?;
    // (3)
    if fours_last == fours_total {
        // (4)
        pos = (2, g.rightmost(2).ok_or_else(|| Error::Internal("second-to-last row is empty".into()))?);
        v = g.bump(pos.0, pos.1, v)?;
        // (5)
        let three_above = g.head_labels().any(|a| a == 3)
            || (3..=nu.len()).any(|r| g.row(r).contains(&3));
        if !three_above {
            pos = (3, g.rightmost(3).ok_or_else(|| Error::Internal("third-to-last row is empty".into()))?);
            v = g.bump(pos.0, pos.1, v)?;
        }
    }
    // (6), (7)
    loop {
        let sw = (pos.0.wrapping_sub(1), pos.1 + 1);
        let next = match g.get(sw.0, sw.1) {
            Some(b) if v >= b => sw,
            _ => (pos.0, pos.1 + 1),
        };
        if !g.present(next.0, next.1) {
            break;
        }
        pos = next;
        v = g.bump(pos.0, pos.1, v)?;
        if !g.present(pos.0, pos.1 + 1) {
            break;
        }
    }
    // (8)
    g.place_x(v);
    g.finish()
}

/// Type 2 with β_1 = 1: x is (s+1, 2) and r_x the (s+1)-st row from the bottom.
pub fn inject_type2_col1(t: &Tableau, ctx: &InjectionContext) -> Result<Tableau> {
    let nu = &ctx.nu;
    let (_, s, _) = type2_reading(nu)
        .filter(|(beta, _, _)| beta.width() == 1)
        .ok_or_else(|| Error::Precondition(format!("{} is outside the type2-col1 hypothesis", nu)))?;
    if ctx.x != Cell::new(s + 1, 2) {
        return Err(Error::Precondition(format!("x is not (s+1, 2) for {}", nu)));
    }
    let mut g = WorkGrid::new(t, ctx)?;
    // highest row below r_x holding a 1, and the last 1 of that row so the
    // row stays weakly increasing
    let hit = (1..ctx.r_x).rev().find_map(|r| {
        (1..=nu.part(r)).find(|&c| g.get(r, c) == Some(1)).map(|c| (r, c))
    });
    match hit {
        None => g.place_x(2),
        Some((r, c)) => {
            g.bump(r, c, 2)?;
            g.place_x(1);
        }
    }
    g.finish()
}

pub fn apply(alg: Algorithm, t: &Tableau, ctx: &InjectionContext) -> Result<Tableau> {
    match alg {
        Algorithm::Type1Rect => inject_type1_rect(t, ctx),
        Algorithm::Width4 => inject_width4(t, ctx),
        Algorithm::Type2Col1 => inject_type2_col1(t, ctx),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectionFailure {
    pub index: LambdaIndex,
    pub reason: String,
    /// The offending source tableau, rendered.
    pub tableau: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectionReport {
    pub nu: Partition,
    pub mu: Partition,
    pub algorithm: String,
    pub indices: usize,
    pub tableaux: u64,
    pub failures: Vec<InjectionFailure>,
}

impl InjectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for InjectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "injection nu={} mu={} algorithm={} indices={} tableaux={} failures={}",
            self.nu,
            self.mu,
            self.algorithm,
            self.indices,
            self.tableaux,
            self.failures.len()
        )?;
        for fail in &self.failures {
            writeln!(f, "failure {} reason={}", fail.index, fail.reason)?;
            writeln!(f, "{}", fail.tableau)?;
        }
        Ok(())
    }
}

/// Runs `alg` on every source tableau of every index with a nonzero count
/// and checks injectivity, target membership and the count inequality.
pub fn verify_injection(nu: &Partition, alg: Algorithm) -> Result<InjectionReport> {
    if !alg.applies_to(nu) {
        return Err(Error::Precondition(format!(
            "{} does not satisfy the {} hypothesis",
            nu,
            alg.name()
        )));
    }
    let mu = predicted_cover(nu)
        .ok_or_else(|| Error::Internal(format!("{} has no predicted cover", nu)))?;
    verify_injection_with(nu, &mu, alg.name(), |t, ctx| apply(alg, t, ctx))
}

/// [`verify_injection`] for an arbitrary map.
pub fn verify_injection_with<F>(
    nu: &Partition,
    mu: &Partition,
    name: &str,
    map: F,
) -> Result<InjectionReport>
where
    F: Fn(&Tableau, &InjectionContext) -> Result<Tableau> + Sync + Send,
{
    let table = ProductTable::compute(nu);
    let indices: Vec<LambdaIndex> = table.terms.into_keys().collect();
    verify_injection_on(nu, mu, &indices, name, map)
}

/// [`verify_injection_with`] restricted to the given indices.
pub fn verify_injection_on<F>(
    nu: &Partition,
    mu: &Partition,
    indices: &[LambdaIndex],
    name: &str,
    map: F,
) -> Result<InjectionReport>
where
    F: Fn(&Tableau, &InjectionContext) -> Result<Tableau> + Sync + Send,
{
    let source_ty = nu.conjugate();
    let target_ty = mu.conjugate();
    let results = par::map(indices, |idx| -> Result<(u64, Vec<InjectionFailure>)> {
        let ctx = InjectionContext::new(nu, mu, idx)?;
        let target = ctx.target_shape()?;
        let sources = enumerate_lr(&ctx.source_shape()?, &source_ty)?;
        let mut seen = HashSet::new();
        let mut failures = Vec::new();
        let fail = |t: &Tableau, reason: String| InjectionFailure {
            index: idx.clone(),
            reason,
            tableau: t.to_string(),
        };
        for t in &sources {
            match map(t, &ctx) {
                Err(e) => failures.push(fail(t, e.to_string())),
                Ok(out) => {
                    if out.shape != target {
                        failures.push(fail(t, "wrong target shape".into()));
                    } else if !out.is_semistandard() {
                        failures.push(fail(t, format!("image is not semistandard:\n{}", out)));
                    } else if !out.is_lr(&target_ty) {
                        failures.push(fail(t, format!("image is not an LR tableau:\n{}", out)));
                    } else if !seen.insert(out.labels) {
                        failures.push(fail(t, "two tableaux share an image".into()));
                    }
                }
            }
        }
        let target_count = count_lr(&target, &target_ty)?;
        if (sources.len() as u64) > target_count {
            failures.push(InjectionFailure {
                index: idx.clone(),
                reason: format!("source count {} exceeds target count {}", sources.len(), target_count),
                tableau: String::new(),
            });
        }
        Ok((sources.len() as u64, failures))
    });
    let mut report = InjectionReport {
        nu: nu.clone(),
        mu: mu.clone(),
        algorithm: name.to_string(),
        indices: indices.len(),
        tableaux: 0,
        failures: Vec::new(),
    };
    for r in results {
        let (n, f) = r?;
        report.tableaux += n;
        report.failures.extend(f);
    }
    Ok(report)
}

/// Counts of the three structural facts about type 2 LR tableaux, per
/// index: (tableaux checked, tableaux violating any of them).
pub fn check_type2_row_facts(nu: &Partition) -> Result<BTreeMap<LambdaIndex, (u64, u64)>> {
    let (beta, s, _) = type2_reading(nu)
        .ok_or_else(|| Error::Precondition(format!("{} is not of type 2", nu)))?;
    let i = beta.width();
    let mu = nu.add_box(Cell::new(s + 1, i + 1))?;
    let ty = nu.conjugate();
    let table = ProductTable::compute(nu);
    let mut out = BTreeMap::new();
    for idx in table.terms.keys() {
        let ctx = InjectionContext::new(nu, &mu, idx)?;
        let mut bad = 0;
        let all = enumerate_lr(&ctx.source_shape()?, &ty)?;
        for t in &all {
            if !type2_row_facts_hold(&WorkGrid::new(t, &ctx)?, i, s) {
                bad += 1;
            }
        }
        out.insert(idx.clone(), (all.len() as u64, bad));
    }
    Ok(out)
}

/// With r_x the (s+1)-st row from the bottom: each label i+j (1 ≤ j ≤ s)
/// lies at most j rows under r_x, some label i+1 lies in r_x or above, and
/// at least s labels i lie in r_x or above.
fn type2_row_facts_hold(g: &WorkGrid, i: usize, s: usize) -> bool {
    let r_x = s + 1;
    let nu = &g.ctx.nu;
    let mut count_at_or_above = BTreeMap::new();
    for a in g.head_labels() {
        *count_at_or_above.entry(a as usize).or_insert(0usize) += 1;
    }
    for r in 1..=nu.len() {
        for a in g.row(r) {
            let a = a as usize;
            if a > i && a <= i + s && r + (a - i) < r_x {
                return false;
            }
            if r >= r_x {
                *count_at_or_above.entry(a).or_insert(0) += 1;
            }
        }
    }
    let at = |a: usize| count_at_or_above.get(&a).copied().unwrap_or(0);
    at(i + 1) >= 1 && (i == 0 || at(i) >= s)
}
