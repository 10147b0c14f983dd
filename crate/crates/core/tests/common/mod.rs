//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's search or product code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use schurpos::lr::{is_lattice, reverse_reading_word, Block, Label, SkewChain, Tableau};
use schurpos::partition::{partitions_of, Partition};

/// Every semistandard filling of `shape` with labels `1..=max_label`, each
/// label used at most `caps[a-1]` times, passed to `visit`.
pub fn each_ssyt(shape: &SkewChain, caps: &[usize], visit: &mut dyn FnMut(&Tableau)) {
    // cells in block/row/column order with the index of the cell above
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    let mut above: Vec<Option<usize>> = Vec::new();
    let mut left: Vec<Option<usize>> = Vec::new();
    for (b, block) in shape.blocks().iter().enumerate() {
        let rows = block.rows();
        let mut prev: Vec<(usize, usize)> = Vec::new();
        for (r, &(start, len)) in rows.iter().enumerate() {
            let mut here = Vec::new();
            for k in 0..len {
                let col = start + k;
                let up = prev.iter().find(|&&(c, _)| c == col).map(|&(_, i)| i);
                above.push(up);
                left.push((k > 0).then(|| cells.len() - 1));
                here.push((col, cells.len()));
                cells.push((b, r, k));
            }
            prev = here;
        }
    }
    let template: Vec<Vec<Vec<Label>>> = shape
        .blocks()
        .iter()
        .map(|b| b.rows().iter().map(|&(_, l)| vec![0; l]).collect())
        .collect();
    let mut fill = vec![0 as Label; cells.len()];
    let mut used = vec![0usize; caps.len()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        cells: &[(usize, usize, usize)],
        above: &[Option<usize>],
        left: &[Option<usize>],
        caps: &[usize],
        fill: &mut Vec<Label>,
        used: &mut Vec<usize>,
        template: &[Vec<Vec<Label>>],
        shape: &SkewChain,
        visit: &mut dyn FnMut(&Tableau),
    ) {
        if i == cells.len() {
            let mut labels = template.to_vec();
            for (j, &(b, r, k)) in cells.iter().enumerate() {
                labels[b][r][k] = fill[j];
            }
            visit(&Tableau::new(shape.clone(), labels).unwrap());
            return;
        }
        let lo = left[i].map_or(1, |j| fill[j]).max(above[i].map_or(1, |j| fill[j] + 1));
        for a in lo..=caps.len() as Label {
            if used[a as usize - 1] == caps[a as usize - 1] {
                continue;
            }
            used[a as usize - 1] += 1;
            fill[i] = a;
            go(i + 1, cells, above, left, caps, fill, used, template, shape, visit);
            used[a as usize - 1] -= 1;
        }
    }
    go(0, &cells, &above, &left, caps, &mut fill, &mut used, &template, shape, visit);
}

/// |{SSYT of the shape with content `ty` and lattice reverse reading word}|.
pub fn brute_lr(shape: &SkewChain, ty: &Partition) -> u64 {
    if shape.size() != ty.weight() {
        return 0;
    }
    let mut n = 0;
    each_ssyt(shape, ty.parts(), &mut |t| {
        if t.content() == ty.parts() && is_lattice(&reverse_reading_word(t)) {
            n += 1;
        }
    });
    n
}

pub fn chain(blocks: Vec<Block>) -> SkewChain {
    SkewChain::new(blocks)
}

/// c^λ_{αβ} as the number of LR tableaux of λ/α with content β.
pub fn brute_lr_coefficient(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if !lambda.contains(alpha) {
        return 0;
    }
    brute_lr(&chain(vec![Block::skew(lambda.clone(), alpha.clone()).unwrap()]), beta)
}

/// Partitions obtained from `p` by adding `k` boxes.
pub fn grow(p: &Partition, k: usize) -> BTreeSet<Partition> {
    let mut level = BTreeSet::from([p.clone()]);
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for q in &level {
            let mut parts = q.parts().to_vec();
            parts.push(0);
            for r in 0..parts.len() {
                if r == 0 || parts[r - 1] > parts[r] {
                    let mut v = parts.clone();
                    v[r] += 1;
                    next.insert(Partition::from_unsorted(v));
                }
            }
        }
        level = next;
    }
    level
}

/// s_α s_β as a map λ → c^λ_{αβ}, by brute force over λ ⊇ α with
/// |λ| = |α| + |β|.
pub fn brute_product(alpha: &Partition, beta: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for lambda in grow(alpha, beta.weight()) {
        let c = brute_lr_coefficient(&lambda, alpha, beta);
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    out
}

/// χ^λ(ρ) by the Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let n = lambda.len();
    // beta numbers b_k = λ_k + (n - k)
    let beta: Vec<usize> = (1..=n).map(|k| lambda.part(k) + n - k).collect();
    let mut total = 0;
    for (k, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // sign: number of beta numbers strictly between b - r and b
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut nb = beta.clone();
        nb[k] = b - r;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(i, &c)| c - (n - 1 - i)).collect();
        let mu = Partition::from_unsorted(parts);
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character(&mu, rest);
    }
    total
}

/// z_ρ = Π k^{m_k} m_k!.
pub fn z(rho: &Partition) -> u128 {
    let mut mult: BTreeMap<usize, u128> = BTreeMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    mult.iter()
        .map(|(&k, &m)| (k as u128).pow(m as u32) * (1..=m).product::<u128>())
        .product()
}

/// Kronecker coefficient g(λ, μ, ν) = Σ_ρ χ^λ χ^μ χ^ν / z_ρ.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let n = lambda.weight();
    let fact: u128 = (1..=n as u128).product();
    let mut num: i128 = 0;
    for rho in partitions_of(n) {
        let c = mn_character(lambda, rho.parts())
            * mn_character(mu, rho.parts())
            * mn_character(nu, rho.parts());
        num += c as i128 * (fact / z(&rho)) as i128;
    }
    assert_eq!(num % fact as i128, 0);
    (num / fact as i128) as i64
}

/// The natural width-5 generalization of the width-4 injection, kept only as
/// a negative control: i+1 bumps the end of the last row, and while every
/// label i+1-k sits in the last k rows the bumped label moves on to the end
/// of row k+1; then the south-west / left walk of the width-4 algorithm.
pub fn width5_generalized(
    t: &Tableau,
    ctx: &schurpos::inject::InjectionContext,
) -> schurpos::Result<Tableau> {
    use schurpos::inject::WorkGrid;
    let nu = &ctx.nu;
    let i = nu.width();
    let counts = nu.conjugate();
    let mut g = WorkGrid::new(t, ctx)?;
    if ctx.eta.width() == i {
        g.place_x((i + 1) as Label);
        return g.finish();
    }
    let original = g.clone();
    let mut pos = (1, g.rightmost(1).expect("last row"));
    let mut v = g.bump(pos.0, pos.1, (i + 1) as Label)?;
    let mut k = 1;
    while k < i {
        let label = (i + 1 - k) as Label;
        let low: usize = (1..=k).map(|r| original.row(r).iter().filter(|&&a| a == label).count()).sum();
        let Some(c) = g.rightmost(k + 1) else { break };
        if low != counts.part(label as usize) {
            break;
        }
        pos = (k + 1, c);
        v = g.bump(pos.0, pos.1, v)?;
        k += 1;
    }
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
    g.place_x(v);
    g.finish()
}

/// Rows of digits, one string per row.
pub fn rows(v: &[&str]) -> Vec<Vec<Label>> {
    v.iter().map(|s| s.bytes().map(|b| b - b'0').collect()).collect()
}
