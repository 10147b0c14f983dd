//! Schur expansions of s_{μ'} s_{μ^c}.
//!
//! Once m ≥ μ_1 + ℓ(μ), every λ in the expansion has the form
//! (η^c + γ, σ) with η ⊆ μ and |γ| + |σ| = |η|, and its coefficient is the
//! number of LR tableaux of shape γ × σ × (μ/η)* and type μ'. Those counts do
//! not depend on m, so they are computed once per μ as a [`ProductTable`]
//! keyed by the triple (η, γ, σ) and only assembled into partitions at the
//! end. Below the bound the generic route multiplies directly, counting LR
//! tableaux of shape λ/μ^c over all candidate λ.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Sub;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lr::{count_lr, count_lr_from, lr_by_content, rotate180, Block, SkewChain};
use crate::par;
use crate::partition::{partitions_of, Partition};

/// m = μ_1 + ℓ(μ), the smallest m for which the expansion is stable.
pub fn stable_bound(mu: &Partition) -> usize {
    mu.width() + mu.len()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaIndex {
    pub eta: Partition,
    pub gamma: Partition,
    pub sigma: Partition,
}

impl LambdaIndex {
    pub fn new(eta: Partition, gamma: Partition, sigma: Partition) -> Self {
        LambdaIndex { eta, gamma, sigma }
    }

    /// The same triple with γ and σ exchanged.
    pub fn swapped(&self) -> Self {
        LambdaIndex::new(self.eta.clone(), self.sigma.clone(), self.gamma.clone())
    }
}

impl fmt::Display for LambdaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta={} gamma={} sigma={}", self.eta, self.gamma, self.sigma)
    }
}

/// (η^c + γ, σ) with the complement taken in the m×m square.
pub fn assemble_lambda(idx: &LambdaIndex, m: usize) -> Result<Partition> {
    if idx.gamma.len() > m {
        return Err(Error::NotPartition(format!(
            "gamma {} has more than m={} rows",
            idx.gamma, m
        )));
    }
    let top = idx.eta.complement(m)?;
    let mut parts: Vec<usize> = (1..=m).map(|k| top.part(k) + idx.gamma.part(k)).collect();
    parts.extend_from_slice(idx.sigma.parts());
    Partition::new(parts).map_err(|e| {
        Error::NotPartition(format!("assembly of {} at m={}: {}", idx, m, e))
    })
}

/// Recovers (η, γ, σ) from λ for a given μ and m, if λ has that shape.
pub fn decompose_lambda(lambda: &Partition, mu: &Partition, m: usize) -> Option<LambdaIndex> {
    if m < mu.len() {
        return None;
    }
    let split = m - mu.len();
    let mut gamma = Vec::new();
    for k in 1..=split {
        gamma.push(lambda.part(k).checked_sub(m)?);
    }
    let mut eta = Vec::new();
    for k in (split + 1..=m).rev() {
        eta.push(m.checked_sub(lambda.part(k))?);
    }
    let sigma = lambda.parts().get(m..).unwrap_or(&[]).to_vec();
    let idx = LambdaIndex::new(
        Partition::new(eta).ok()?,
        Partition::new(gamma).ok()?,
        Partition::new(sigma).ok()?,
    );
    let ok = mu.contains(&idx.eta)
        && idx.gamma.weight() + idx.sigma.weight() == idx.eta.weight()
        && assemble_lambda(&idx, m).ok().as_ref() == Some(lambda);
    ok.then_some(idx)
}

/// The chain γ × σ × (μ/η)* whose LR tableaux of type μ' count the
/// coefficient of the assembled λ.
pub fn index_chain(mu: &Partition, idx: &LambdaIndex) -> Result<SkewChain> {
    Ok(SkewChain::new(vec![
        Block::Straight(idx.gamma.clone()),
        Block::Straight(idx.sigma.clone()),
        rotate180(mu, &idx.eta)?,
    ]))
}

/// Nonzero coefficients of s_{μ'} s_{μ^c} in the stable range, keyed by
/// triple. Independent of m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTable {
    pub mu: Partition,
    pub terms: BTreeMap<LambdaIndex, u64>,
}

impl ProductTable {
    /// Each coefficient factors through the content κ of the γ × σ part of
    /// the tableau: it equals Σ_κ c^κ_{γσ} · f_η(κ), where f_η(κ) counts the
    /// fillings of (μ/η)* that continue a lattice word of content κ.
    pub fn compute(mu: &Partition) -> ProductTable {
        let ty = mu.conjugate();
        let by_weight = subpartitions_by_weight(&ty);
        let etas = mu.subpartitions();
        let chunks = par::map(&etas, |eta| {
            let d = SkewChain::new(vec![rotate180(mu, eta).expect("eta is a subpartition")]);
            let mut acc: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
            for kappa in &by_weight[eta.weight()] {
                let f = count_lr_from(&d, &ty, kappa).expect("sizes agree");
                if f == 0 {
                    continue;
                }
                for (gamma, sigma, c) in coproduct(kappa).iter() {
                    *acc.entry((gamma.clone(), sigma.clone())).or_insert(0) += c * f;
                }
            }
            acc.into_iter()
                .map(|((gamma, sigma), c)| (LambdaIndex::new(eta.clone(), gamma, sigma), c))
                .collect::<Vec<_>>()
        });
        ProductTable {
            mu: mu.clone(),
            terms: chunks.into_iter().flatten().collect(),
        }
    }

    /// Reference implementation: one LR count per candidate triple.
    pub fn compute_direct(mu: &Partition) -> ProductTable {
        let ty = mu.conjugate();
        let by_weight = subpartitions_by_weight(&ty);
        let etas = mu.subpartitions();
        let chunks = par::map(&etas, |eta| {
            let d = rotate180(mu, eta).expect("eta is a subpartition");
            let n = eta.weight();
            let mut out = Vec::new();
            for a in 0..=n {
                for gamma in &by_weight[a] {
                    for sigma in &by_weight[n - a] {
                        let chain = SkewChain::new(vec![
                            Block::Straight(gamma.clone()),
                            Block::Straight(sigma.clone()),
                            d.clone(),
                        ]);
                        let c = count_lr(&chain, &ty).expect("sizes agree");
                        if c > 0 {
                            out.push((LambdaIndex::new(eta.clone(), gamma.clone(), sigma.clone()), c));
                        }
                    }
                }
            }
            out
        });
        ProductTable {
            mu: mu.clone(),
            terms: chunks.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, idx: &LambdaIndex) -> u64 {
        self.terms.get(idx).copied().unwrap_or(0)
    }

    /// The expansion at a given m in the stable range.
    pub fn expansion(&self, m: usize) -> Result<SchurExpansion> {
        check_stable(&self.mu, m)?;
        let mut e = SchurExpansion::new();
        for (idx, &c) in &self.terms {
            let lambda = assemble_lambda(idx, m)?;
            let prev = e.terms.insert(lambda, BigInt::from(c));
            assert!(prev.is_none(), "two triples assemble to the same partition at m={}", m);
        }
        e.meta = Some((self.mu.clone(), m));
        Ok(e)
    }
}

fn subpartitions_by_weight(p: &Partition) -> Vec<Vec<Partition>> {
    let mut by_weight = vec![Vec::new(); p.weight() + 1];
    for q in p.subpartitions() {
        by_weight[q.weight()].push(q);
    }
    by_weight
}

type Coproduct = Arc<Vec<(Partition, Partition, u64)>>;

/// All (γ, σ, c^κ_{γσ}) with c^κ_{γσ} > 0. Memoized process-wide.
pub fn coproduct(kappa: &Partition) -> Coproduct {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Coproduct>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.read().expect("coproduct cache poisoned").get(kappa) {
        return c.clone();
    }
    let mut out = Vec::new();
    for gamma in kappa.subpartitions() {
        let shape = SkewChain::new(vec![
            Block::skew(kappa.clone(), gamma.clone()).expect("gamma is a subpartition")
        ]);
        for (sigma, c) in lr_by_content(&shape) {
            out.push((gamma.clone(), sigma, c));
        }
    }
    let out = Arc::new(out);
    cache
        .write()
        .expect("coproduct cache poisoned")
        .insert(kappa.clone(), out.clone());
    out
}

fn check_stable(mu: &Partition, m: usize) -> Result<()> {
    if m == 0 || m < stable_bound(mu) {
        return Err(Error::OutOfBounds(format!(
            "m={} is below the stable bound {} for {}",
            m,
            stable_bound(mu).max(1),
            mu
        )));
    }
    Ok(())
}

/// A sparse signed combination of Schur functions. Equality compares terms
/// only.
#[derive(Clone, Debug, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
    /// (μ, m) when the expansion is a product s_{μ'} s_{μ^c}.
    pub meta: Option<(Partition, usize)>,
}

impl PartialEq for SchurExpansion {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for SchurExpansion {}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BigInt)>>(terms: I) -> Self {
        let mut e = Self::new();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, p: Partition, c: BigInt) {
        match self.terms.entry(p) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    /// Terms in increasing lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, k: i64) -> SchurExpansion {
        let mut e = SchurExpansion::new();
        for (p, c) in &self.terms {
            e.add_term(p.clone(), c * k);
        }
        e
    }
}

impl Sub for &SchurExpansion {
    type Output = SchurExpansion;

    fn sub(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut e = self.clone();
        e.meta = None;
        for (p, c) in &rhs.terms {
            e.add_term(p.clone(), -c);
        }
        e
    }
}

impl std::ops::AddAssign<&SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: &SchurExpansion) {
        self.meta = None;
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl fmt::Display for SchurExpansion {
    /// One `coefficient<TAB>[partition]` line per term, partitions in
    /// decreasing lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, c) in self.terms.iter().rev() {
            writeln!(f, "{}\t{}", c, p)?;
        }
        Ok(())
    }
}

impl FromStr for SchurExpansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut e = SchurExpansion::new();
        for (n, line) in s.lines().enumerate() {
            let (c, p) = line.split_once('\t').ok_or_else(|| Error::Parse {
                pos: n + 1,
                msg: "expected coefficient<TAB>partition".into(),
            })?;
            let c: BigInt = c.parse().map_err(|_| Error::Parse {
                pos: n + 1,
                msg: format!("bad coefficient {:?}", c),
            })?;
            e.add_term(p.parse()?, c);
        }
        Ok(e)
    }
}

/// s_{μ'} s_{μ^c} for m ≥ μ_1 + ℓ(μ).
pub fn product_conj_comp(mu: &Partition, m: usize) -> Result<SchurExpansion> {
    check_stable(mu, m)?;
    ProductTable::compute(mu).expansion(m)
}

/// s_{μ'} s_{μ^c} for any m with μ inside the m×m square. Uses the stable
/// route when m allows it and the generic route otherwise.
pub fn product_exact(mu: &Partition, m: usize) -> Result<SchurExpansion> {
    if m >= stable_bound(mu) && m > 0 {
        product_conj_comp(mu, m)
    } else {
        product_generic(mu, m)
    }
}

/// s_{μ'} s_{μ^c} by plain LR multiplication: the coefficient of λ is the
/// number of LR tableaux of shape λ/μ^c and type μ'.
pub fn product_generic(mu: &Partition, m: usize) -> Result<SchurExpansion> {
    let base = mu.complement(m)?;
    let ty = mu.conjugate();
    let mut outers = Vec::new();
    let mut cur = Vec::new();
    grow(&base, mu.weight(), 0, usize::MAX, &mut cur, &mut outers);
    let counts = par::map(&outers, |lambda| {
        let chain = SkewChain::new(vec![
            Block::skew(lambda.clone(), base.clone()).expect("lambda contains the base")
        ]);
        count_lr(&chain, &ty).expect("sizes agree")
    });
    let mut e = SchurExpansion::new();
    for (lambda, c) in outers.into_iter().zip(counts) {
        if c > 0 {
            e.add_term(lambda, BigInt::from(c));
        }
    }
    e.meta = Some((mu.clone(), m));
    Ok(e)
}

/// All partitions containing `base` with exactly `extra` more boxes.
fn grow(
    base: &Partition,
    extra: usize,
    k: usize,
    cap: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let b = base[k];
    if extra == 0 && k >= base.len() {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    if b > cap {
        return;
    }
    let hi = (b + extra).min(cap);
    for v in (b..=hi).rev() {
        if v == 0 {
            continue;
        }
        cur.push(v);
        grow(base, extra - (v - b), k + 1, v, cur, out);
        cur.pop();
    }
}

/// s_{μ'} s_{μ^c} − s_{ν'} s_{ν^c} for ν ⊂ μ with one box fewer.
pub fn difference(mu: &Partition, nu: &Partition, m: usize) -> Result<SchurExpansion> {
    check_pair(mu, nu)?;
    check_stable(mu, m)?;
    Ok(&product_conj_comp(mu, m)? - &product_conj_comp(nu, m)?)
}

/// Like [`difference`] but allows m below the stable bound.
pub fn difference_exact(mu: &Partition, nu: &Partition, m: usize) -> Result<SchurExpansion> {
    check_pair(mu, nu)?;
    Ok(&product_exact(mu, m)? - &product_exact(nu, m)?)
}

pub(crate) fn check_pair(mu: &Partition, nu: &Partition) -> Result<()> {
    if !mu.contains(nu) {
        return Err(Error::Precondition(format!("{} does not contain {}", mu, nu)));
    }
    if mu.weight() != nu.weight() + 1 {
        return Err(Error::Precondition(format!(
            "|{}| = {} is not |{}| + 1 = {}",
            mu,
            mu.weight(),
            nu,
            nu.weight() + 1
        )));
    }
    Ok(())
}

/// Whether all coefficients are nonnegative, with the lexicographically
/// least negative partition as witness otherwise.
pub fn is_schur_positive(e: &SchurExpansion) -> (bool, Option<Partition>) {
    match e.terms().find(|(_, c)| c.is_negative()) {
        Some((p, _)) => (false, Some(p.clone())),
        None => (true, None),
    }
}

/// ω(s_λ) = s_{λ'}.
pub fn omega(e: &SchurExpansion) -> SchurExpansion {
    SchurExpansion {
        terms: e.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect(),
        meta: None,
    }
}

/// Every triple (η, γ, σ) with η ⊆ μ and γ, σ ⊆ μ', |γ| + |σ| = |η|.
pub fn candidate_indices(mu: &Partition) -> Vec<LambdaIndex> {
    let subs = mu.conjugate().subpartitions();
    let mut out = Vec::new();
    for eta in mu.subpartitions() {
        let n = eta.weight();
        for gamma in &subs {
            for sigma in &subs {
                if gamma.weight() + sigma.weight() == n {
                    out.push(LambdaIndex::new(eta.clone(), gamma.clone(), sigma.clone()));
                }
            }
        }
    }
    out
}

/// Coefficients of s_λ and s_λ̄ agree, where λ̄ swaps γ and σ.
pub fn check_symmetry(mu: &Partition, m: usize) -> Result<bool> {
    let e = product_conj_comp(mu, m)?;
    for idx in candidate_indices(mu) {
        let (Ok(a), Ok(b)) = (assemble_lambda(&idx, m), assemble_lambda(&idx.swapped(), m)) else {
            continue;
        };
        if e.coefficient(&a) != e.coefficient(&b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Computes the difference by direct multiplication at m = μ_1 + ℓ(μ) and
/// m + 1 and compares the two triple by triple.
pub fn check_stability(mu: &Partition, nu: &Partition) -> Result<bool> {
    check_pair(mu, nu)?;
    let m = stable_bound(mu).max(1);
    let reindex = |m: usize| -> Result<Option<BTreeMap<LambdaIndex, BigInt>>> {
        let e = &product_generic(mu, m)? - &product_generic(nu, m)?;
        let mut out = BTreeMap::new();
        for (lambda, c) in e.terms() {
            match decompose_lambda(lambda, mu, m) {
                Some(idx) => {
                    out.insert(idx, c.clone());
                }
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    };
    let a = reindex(m)?;
    let b = reindex(m + 1)?;
    Ok(a.is_some() && a == b)
}

/// The Kronecker product s_{(n-k,1^k)} * s_{(m^m)}, n = m², as the
/// alternating sum Σ_i (−1)^{k−i} Σ_{μ ⊢ i, μ ⊆ (m^m)} s_{μ'} s_{μ^c}.
pub fn kronecker_hook_square(m: usize, k: usize) -> Result<SchurExpansion> {
    if m == 0 || k >= m * m {
        return Err(Error::OutOfBounds(format!(
            "need m ≥ 1 and k ≤ m²−1, got m={} k={}",
            m, k
        )));
    }
    let mut total = SchurExpansion::new();
    for i in 0..=k {
        let sign = if (k - i).is_multiple_of(2) { 1 } else { -1 };
        for mu in partitions_of(i).into_iter().filter(|p| p.fits_in_square(m)) {
            total += &product_exact(&mu, m)?.scaled(sign);
        }
    }
    Ok(total)
}
