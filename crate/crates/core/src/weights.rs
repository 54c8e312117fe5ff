//! Weight multiplicities of finite-dimensional `sl_{l+1}`-modules (Freudenthal)
//! and branching to the Levi subalgebra spanned by `α_1, ..., α_{l−1}`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::lie::{root_system, weyl_dim_int, Weight};

pub const DEFAULT_CAP: usize = 100_000;

/// `(l+1)` times the inverse Cartan matrix: `(l+1)(ω_i|ω_j)`.
fn scaled_gram(l: usize) -> Vec<Vec<i64>> {
    let n = l as i64 + 1;
    (1..=l as i64).map(|i| (1..=l as i64).map(|j| i.min(j) * (n - i.max(j))).collect()).collect()
}

fn form(g: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, xi) in x.iter().enumerate() {
        if *xi == 0 {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            acc += xi * g[i][j] * yj;
        }
    }
    acc
}

/// All weights of `V(λ)` with their multiplicities, in Dynkin coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub rank: usize,
    pub highest: Vec<i64>,
    entries: BTreeMap<Vec<i64>, u64>,
}

impl MultiplicityTable {
    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    /// `(weight, multiplicity)` pairs in increasing lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, &u64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn dim(&self) -> u64 {
        self.entries.values().sum()
    }
}

fn check_cap(l: usize, lam: &[i64], cap: usize) -> Result<u64> {
    let dim = weyl_dim_int(lam)?;
    if dim > cap as u64 {
        return Err(Error::CapExceeded { cap, needed: usize::try_from(dim).unwrap_or(usize::MAX) });
    }
    debug_assert_eq!(lam.len(), l);
    Ok(dim)
}

pub fn weight_multiplicities(l: usize, lambda: &Weight) -> Result<MultiplicityTable> {
    weight_multiplicities_capped(l, lambda, DEFAULT_CAP)
}

pub fn weight_multiplicities_capped(l: usize, lambda: &Weight, cap: usize) -> Result<MultiplicityTable> {
    let lam = lambda.require_dominant(l)?;
    multiplicities_int(l, &lam, cap)
}

pub(crate) fn multiplicities_int(l: usize, lam: &[i64], cap: usize) -> Result<MultiplicityTable> {
    check_cap(l, lam, cap)?;
    let rs = root_system(l)?;
    let g = scaled_gram(l);
    let cartan = rs.cartan_matrix();
    // positive roots in Dynkin coordinates, with their heights
    let roots: Vec<(Vec<i64>, usize)> =
        rs.positive_roots.iter().map(|&(i, j)| (crate::lie::root_coords(l, i, j), j - i)).collect();
    let rho = vec![1i64; l];
    let shift = |x: &[i64]| -> Vec<i64> { x.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top = {
        let s = shift(lam);
        form(&g, &s, &s)
    };

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(lam.to_vec(), 1);
    let mut layer: Vec<Vec<i64>> = vec![lam.to_vec()];
    let mut depth = 0usize;
    while !layer.is_empty() {
        depth += 1;
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        for mu in &layer {
            for row in &cartan {
                let nu: Vec<i64> = mu.iter().zip(row).map(|(a, b)| a - b).collect();
                candidates.push(nu);
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut next = Vec::new();
        for mu in candidates {
            let mut sum: i128 = 0;
            for (alpha, height) in &roots {
                let mut k = 1;
                while k * height <= depth {
                    let nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + (k as i64) * b).collect();
                    if let Some(&m) = mult.get(&nu) {
                        sum += m as i128 * form(&g, &nu, alpha) as i128;
                    }
                    k += 1;
                }
            }
            let s = shift(&mu);
            let diff = (top - form(&g, &s, &s)) as i128;
            let m = if diff == 0 {
                if sum != 0 {
                    return Err(Error::Invariant(format!("Freudenthal denominator vanished at {mu:?}")));
                }
                0
            } else {
                let num = 2 * sum;
                if num % diff != 0 {
                    return Err(Error::Invariant(format!("non-integral multiplicity at {mu:?}")));
                }
                num / diff
            };
            if m > 0 {
                mult.insert(mu.clone(), m as u64);
                next.push(mu);
            }
        }
        layer = next;
    }
    Ok(MultiplicityTable { rank: l, highest: lam.to_vec(), entries: mult.into_iter().collect() })
}

/// Multiplicity of the zero weight in `V(λ)`.
pub fn zero_weight_dim(l: usize, lambda: &Weight) -> Result<u64> {
    let table = weight_multiplicities(l, lambda)?;
    Ok(table.multiplicity(&vec![0; l]))
}

/// One irreducible constituent of a restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSummand {
    /// Highest weight in Dynkin coordinates of the rank `l − 1` subalgebra.
    pub highest: Vec<i64>,
    pub multiplicity: u64,
    pub dim: u64,
}

/// `ε`-coordinates `x_a = Σ_{i ≥ a} μ_i`; lexicographically larger means
/// higher in the dominance order.
fn eps_key(mu: &[i64]) -> Vec<i64> {
    (0..mu.len()).map(|a| mu[a..].iter().sum()).collect()
}

/// Decomposes `V(λ)` restricted to the subalgebra generated by
/// `e_{α_i}, f_{α_i}` for `i < l`, by peeling off highest weights.
pub fn branch_to_subalgebra(l: usize, lambda: &Weight) -> Result<Vec<BranchSummand>> {
    branch_to_subalgebra_capped(l, lambda, DEFAULT_CAP)
}

pub fn branch_to_subalgebra_capped(l: usize, lambda: &Weight, cap: usize) -> Result<Vec<BranchSummand>> {
    if l < 2 {
        return Err(Error::Unsupported("branching needs rank at least 2".into()));
    }
    let table = weight_multiplicities_capped(l, lambda, cap)?;
    let mut remaining: BTreeMap<Vec<i64>, (Vec<i64>, i64)> = BTreeMap::new();
    for (mu, m) in table.entries() {
        let r = mu[..l - 1].to_vec();
        let slot = remaining.entry(eps_key(&r)).or_insert_with(|| (r, 0));
        slot.1 += *m as i64;
    }
    let mut out = Vec::new();
    while let Some((_, (top, count))) = remaining.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        if count < 0 || top.iter().any(|&x| x < 0) {
            return Err(Error::Invariant(format!("branching peeled a non-dominant weight {top:?}")));
        }
        let sub = multiplicities_int(l - 1, &top, cap)?;
        for (nu, m) in sub.entries() {
            let key = eps_key(nu);
            let slot = remaining
                .get_mut(&key)
                .ok_or_else(|| Error::Invariant(format!("restricted character lacks weight {nu:?}")))?;
            slot.1 -= count * *m as i64;
            if slot.1 == 0 {
                remaining.remove(&key);
            }
        }
        out.push(BranchSummand { dim: sub.dim(), highest: top, multiplicity: count as u64 });
    }
    Ok(out)
}
