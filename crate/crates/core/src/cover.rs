//! Cover verdicts, the exhaustive conjecture sweep, and the lex-minimality
//! check for type 1 partitions.

use std::collections::BTreeMap;
use std::fmt;

use crate::classify::{is_type1_reading, predicted_cover};
use crate::error::{Error, Result};
use crate::lr::{count_lr, exists_lr, Block, SkewChain};
use crate::par;
use crate::partition::{partitions_of, Partition};
use crate::schur::{
    assemble_lambda, check_pair, difference, difference_exact, index_chain, is_schur_positive,
    stable_bound, LambdaIndex, ProductTable,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverVerdict {
    pub mu: Partition,
    pub nu: Partition,
    pub m: usize,
    pub positive: bool,
    /// Lexicographically least partition with a negative coefficient.
    pub witness: Option<Partition>,
}

impl fmt::Display for CoverVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("positive"),
            Some(w) => write!(f, "negative witness={}", w),
        }
    }
}

/// Whether μ covers ν, i.e. s_{μ'}s_{μ^c} − s_{ν'}s_{ν^c} is Schur-positive.
/// `m` defaults to μ_1 + ℓ(μ).
pub fn covers(mu: &Partition, nu: &Partition, m: Option<usize>) -> Result<CoverVerdict> {
    let m = m.unwrap_or_else(|| stable_bound(mu).max(1));
    let d = difference(mu, nu, m)?;
    Ok(verdict(mu, nu, m, &d))
}

/// Like [`covers`] but accepts m below the stable bound.
pub fn covers_exact(mu: &Partition, nu: &Partition, m: usize) -> Result<CoverVerdict> {
    let d = difference_exact(mu, nu, m)?;
    Ok(verdict(mu, nu, m, &d))
}

fn verdict(mu: &Partition, nu: &Partition, m: usize, d: &crate::schur::SchurExpansion) -> CoverVerdict {
    let (positive, witness) = is_schur_positive(d);
    CoverVerdict {
        mu: mu.clone(),
        nu: nu.clone(),
        m,
        positive,
        witness,
    }
}

/// The cover verdict computed from two product tables, at m = μ_1 + ℓ(μ).
pub fn verdict_from_tables(mu_table: &ProductTable, nu_table: &ProductTable) -> Result<CoverVerdict> {
    let (mu, nu) = (&mu_table.mu, &nu_table.mu);
    check_pair(mu, nu)?;
    let m = stable_bound(mu);
    // Every μ-side coefficient is positive, so only ν-side terms can go negative.
    let mut witness: Option<Partition> = None;
    for (idx, &c) in &nu_table.terms {
        if mu_table.get(idx) < c {
            let lambda = assemble_lambda(idx, m)?;
            if witness.as_ref().is_none_or(|w| lambda < *w) {
                witness = Some(lambda);
            }
        }
    }
    Ok(CoverVerdict {
        mu: mu.clone(),
        nu: nu.clone(),
        m,
        positive: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub nu: Partition,
    pub mu: Partition,
    pub predicted: bool,
    pub actual: bool,
    pub witness: Option<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub agreements: usize,
    pub violations: Vec<Violation>,
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "conjecture-sweep n={} pairs={} violations={}",
            self.n,
            self.pairs_checked,
            self.violations.len()
        )?;
        for v in &self.violations {
            let w = v.witness.as_ref().map_or_else(|| "[]".to_string(), |p| p.to_string());
            writeln!(
                f,
                "nu={} mu={} predicted={} actual={} witness={}",
                v.nu, v.mu, v.predicted as u8, v.actual as u8, w
            )?;
        }
        Ok(())
    }
}

/// Product tables for every partition of `n`, keyed by partition.
pub fn tables_of_weight(n: usize) -> BTreeMap<Partition, ProductTable> {
    let ps = partitions_of(n);
    let tables = par::map(&ps, ProductTable::compute);
    ps.into_iter().zip(tables).collect()
}

/// Compares the actual cover relation with the predicted one for every
/// ν ⊢ n and every μ ⊃ ν with one more box.
pub fn verify_conjecture(n: usize) -> Result<ConjectureReport> {
    if n == 0 {
        return Err(Error::Precondition("the sweep needs n ≥ 1".into()));
    }
    let small = tables_of_weight(n);
    let large = tables_of_weight(n + 1);
    let nus: Vec<&Partition> = small.keys().collect();
    let per_nu = par::map(&nus, |nu| -> Result<Vec<(bool, Option<Violation>)>> {
        let predicted = predicted_cover(nu);
        let mut out = Vec::new();
        for mu in nu.covers_by_one() {
            let v = verdict_from_tables(&large[&mu], &small[*nu])?;
            let pred = predicted.as_ref() == Some(&mu);
            let violation = (pred != v.positive).then(|| Violation {
                nu: (*nu).clone(),
                mu: mu.clone(),
                predicted: pred,
                actual: v.positive,
                witness: v.witness.clone(),
            });
            out.push((pred == v.positive, violation));
        }
        Ok(out)
    });
    let mut report = ConjectureReport {
        n,
        pairs_checked: 0,
        agreements: 0,
        violations: Vec::new(),
    };
    for chunk in per_nu {
        for (agrees, violation) in chunk? {
            report.pairs_checked += 1;
            if agrees {
                report.agreements += 1;
            }
            report.violations.extend(violation);
        }
    }
    report.violations.sort();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexminResult {
    pub eta: Partition,
    /// Coefficient of λ = η^c + η' (γ = η', σ = ∅).
    pub coefficient: u64,
    pub conjectured: Partition,
}

impl LexminResult {
    pub fn matches(&self) -> bool {
        self.eta == self.conjectured && self.coefficient == 1
    }
}

impl fmt::Display for LexminResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "eta={} conjectured={} match={}",
            self.eta,
            self.conjectured,
            self.matches() as u8
        )
    }
}

fn require_type1(nu: &Partition) -> Result<()> {
    if is_type1_reading(nu) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not of type 1", nu)))
    }
}

/// The lexicographically smallest η ⊆ ν for which some (γ, σ) gives a
/// nonzero coefficient in s_{ν'}s_{ν^c}, with the coefficient at
/// (η, η', ∅).
pub fn lexmin_actual(nu: &Partition, m: usize) -> Result<(Partition, u64)> {
    require_type1(nu)?;
    if m < stable_bound(nu) {
        return Err(Error::OutOfBounds(format!(
            "m={} is below the stable bound {} for {}",
            m,
            stable_bound(nu),
            nu
        )));
    }
    let ty = nu.conjugate();
    let mut by_weight: Vec<Vec<Partition>> = vec![Vec::new(); nu.weight() + 1];
    for p in ty.subpartitions() {
        by_weight[p.weight()].push(p);
    }
    for eta in nu.subpartitions() {
        let d = Block::rotated(nu.clone(), eta.clone())?;
        let n = eta.weight();
        let mut hit = false;
        'search: for a in 0..=n {
            for gamma in &by_weight[a] {
                for sigma in &by_weight[n - a] {
                    let chain = SkewChain::new(vec![
                        Block::Straight(gamma.clone()),
                        Block::Straight(sigma.clone()),
                        d.clone(),
                    ]);
                    if exists_lr(&chain, &ty)? {
                        hit = true;
                        break 'search;
                    }
                }
            }
        }
        if hit {
            let idx = LambdaIndex::new(eta.clone(), eta.conjugate(), Partition::empty());
            let c = count_lr(&index_chain(nu, &idx)?, &ty)?;
            return Ok((eta, c));
        }
    }
    Err(Error::Internal(format!("no term found for {}", nu)))
}

/// Rows of ν/(ν ∩ ν') sorted into a partition.
pub fn lexmin_conjectured(nu: &Partition) -> Result<Partition> {
    require_type1(nu)?;
    let conj = nu.conjugate();
    Ok(Partition::from_unsorted(
        (1..=nu.len()).map(|k| nu.part(k) - nu.part(k).min(conj.part(k))).collect(),
    ))
}

pub fn check_lexmin(nu: &Partition) -> Result<LexminResult> {
    let (eta, coefficient) = lexmin_actual(nu, stable_bound(nu))?;
    Ok(LexminResult {
        eta,
        coefficient,
        conjectured: lexmin_conjectured(nu)?,
    })
}
