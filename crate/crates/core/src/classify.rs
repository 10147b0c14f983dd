//! Structural predicates on a partition: the type 1 / type 2 readings, the
//! predicted cover, and corner symmetry.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `beta` is the partition itself and contains (i, i, i-1, ..., 1), i = beta_1.
    Type1 { beta: Partition },
    /// The partition is beta + (s^s) + alpha.
    Type2 {
        beta: Partition,
        s: usize,
        alpha: Partition,
    },
    NotC1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Direct,
    Conjugate,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeClass {
    /// The reading of the partition itself when it has one, otherwise the
    /// reading of its conjugate.
    pub variant: Variant,
    /// `None` exactly when `variant` is `NotC1`.
    pub side: Option<Side>,
}

impl TypeClass {
    pub fn is_type1(&self) -> bool {
        matches!(self.variant, Variant::Type1 { .. })
    }

    pub fn is_type2(&self) -> bool {
        matches!(self.variant, Variant::Type2 { .. })
    }
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.variant {
            Variant::Type1 { beta } => write!(f, "type1 beta={}", beta)?,
            Variant::Type2 { beta, s, alpha } => {
                write!(f, "type2 beta={} s={} alpha={}", beta, s, alpha)?
            }
            Variant::NotC1 => return f.write_str("none"),
        }
        match self.side {
            Some(Side::Direct) => f.write_str(" (direct)"),
            Some(Side::Conjugate) => f.write_str(" (conjugate)"),
            Some(Side::Both) => f.write_str(" (both)"),
            None => Ok(()),
        }
    }
}

/// Whether `beta` contains (i^{s+1}, i, i-1, ..., 1) for i = beta_1.
fn contains_core(beta: &Partition, s: usize) -> bool {
    let i = beta.width();
    if i == 0 {
        return true;
    }
    let core_len = s + 1 + i;
    if beta.len() < core_len {
        return false;
    }
    (1..=core_len).all(|k| {
        let need = if k <= s + 2 { i } else { i + s + 2 - k };
        beta.part(k) >= need
    })
}

/// Whether `p` itself satisfies the type 1 condition.
pub fn is_type1_reading(p: &Partition) -> bool {
    !p.is_empty() && contains_core(p, 0)
}

/// The type 2 decomposition of `p` itself, if any, as (beta, s, alpha).
pub fn type2_reading(p: &Partition) -> Option<(Partition, usize, Partition)> {
    // For a given s the first part of beta is forced to be p_{s+1}, so each
    // s admits at most one candidate.
    for s in (1..=p.len()).rev() {
        let i = p.part(s + 1);
        if p.part(s) < i + s {
            continue;
        }
        let alpha = Partition::from_sorted((1..=s).map(|k| p.part(k) - i - s).collect());
        if alpha.is_empty() {
            continue;
        }
        let mut beta_parts = vec![i; s];
        beta_parts.extend_from_slice(&p.parts()[s.min(p.len())..]);
        let beta = Partition::from_sorted(beta_parts);
        if contains_core(&beta, s) {
            return Some((beta, s, alpha));
        }
    }
    None
}

fn reading(p: &Partition) -> Variant {
    if is_type1_reading(p) {
        Variant::Type1 { beta: p.clone() }
    } else if let Some((beta, s, alpha)) = type2_reading(p) {
        Variant::Type2 { beta, s, alpha }
    } else {
        Variant::NotC1
    }
}

pub fn classify(nu: &Partition) -> Result<TypeClass> {
    if nu.is_empty() {
        return Err(Error::Precondition("classify needs a nonempty partition".into()));
    }
    let direct = reading(nu);
    let conj = reading(&nu.conjugate());
    let (variant, side) = match (direct, conj) {
        (Variant::NotC1, Variant::NotC1) => (Variant::NotC1, None),
        (Variant::NotC1, c) => (c, Some(Side::Conjugate)),
        (d, Variant::NotC1) => (d, Some(Side::Direct)),
        (d, _) => (d, Some(Side::Both)),
    };
    Ok(TypeClass { variant, side })
}

/// The cover a reading predicts for the partition it was read from.
fn cover_of_reading(p: &Partition, v: &Variant) -> Option<Partition> {
    let cell = match v {
        Variant::Type1 { .. } => Cell::new(1, p.width() + 1),
        Variant::Type2 { beta, s, .. } => Cell::new(s + 1, beta.width() + 1),
        Variant::NotC1 => return None,
    };
    Some(p.add_box(cell).expect("predicted box is an outer corner"))
}

/// The unique partition of size |nu|+1 predicted to cover `nu`, if any.
pub fn predicted_cover(nu: &Partition) -> Option<Partition> {
    if nu.is_empty() {
        return None;
    }
    let direct = reading(nu);
    if direct != Variant::NotC1 {
        let mu = cover_of_reading(nu, &direct);
        debug_assert!({
            let conj = nu.conjugate();
            let cv = reading(&conj);
            cv == Variant::NotC1 || cover_of_reading(&conj, &cv).map(|q| q.conjugate()) == mu
        });
        return mu;
    }
    let conj = nu.conjugate();
    let cv = reading(&conj);
    cover_of_reading(&conj, &cv).map(|q| q.conjugate())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerWitness {
    pub corner: Cell,
    pub eta: Partition,
}

/// Searches for a witness at outer corner (k, j), k > 1: a nonempty `eta`
/// such that nu/eta is a straight self-conjugate shape whose first column is
/// column j and which contains (k-1, j).
fn corner_witness(nu: &Partition, corner: Cell) -> Option<CornerWitness> {
    let (k, j) = (corner.row, corner.col);
    // Rows k.. have fewer than j boxes, so the shape lives in rows t..k-1.
    for t in 1..k {
        let delta = Partition::from_sorted((t..k).map(|r| nu.part(r) - (j - 1)).collect());
        if delta.is_empty() || !delta.is_self_conjugate() {
            continue;
        }
        let mut eta = nu.parts().to_vec();
        for r in t..k {
            eta[r - 1] = j - 1;
        }
        let eta = Partition::from_sorted(eta);
        if eta.is_empty() {
            continue;
        }
        return Some(CornerWitness { corner, eta });
    }
    None
}

/// Returns whether every outer corner below the first row admits a witness,
/// and the witnesses when it does.
pub fn is_corner_symmetric(nu: &Partition) -> Result<(bool, Vec<CornerWitness>)> {
    if nu.is_empty() {
        return Err(Error::Precondition("corner symmetry needs a nonempty partition".into()));
    }
    let mut out = Vec::new();
    for c in nu.outer_corners().into_iter().filter(|c| c.row > 1) {
        match corner_witness(nu, c) {
            Some(w) => out.push(w),
            None => return Ok((false, Vec::new())),
        }
    }
    Ok((true, out))
}
