//! Independent oracles shared by the integration tests. None of them call
//! into the algorithms they check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use affvoa::{HPolynomial, Rational, WeightFamily};
use num_traits::Zero;

/// Weight multiplicities of `V(λ)` by counting Gelfand–Tsetlin patterns.
pub fn gt_multiplicities(lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let n = lambda.len() + 1;
    // partition λ_1 ≥ ... ≥ λ_n = 0
    let top: Vec<i64> = (0..n).map(|i| lambda[i.min(n - 1)..].iter().sum::<i64>() * i64::from(i < n - 1)).collect();
    let mut out = BTreeMap::new();
    let mut sums = vec![0i64; n + 1];
    sums[n] = top.iter().sum();
    descend(&top, &mut sums, &mut out);
    out
}

fn descend(row: &[i64], sums: &mut Vec<i64>, out: &mut BTreeMap<Vec<i64>, u64>) {
    let k = row.len();
    if k == 1 {
        sums[1] = row[0];
        let n = sums.len() - 1;
        // ε-weights w_i = s_i − s_{i−1}, then Dynkin μ_i = w_i − w_{i+1}
        let w: Vec<i64> = (1..=n).map(|i| sums[i] - sums[i - 1]).collect();
        let mu: Vec<i64> = (0..n - 1).map(|i| w[i] - w[i + 1]).collect();
        *out.entry(mu).or_insert(0) += 1;
        return;
    }
    let mut next = vec![0i64; k - 1];
    fill(row, 0, &mut next, sums, out);
}

fn fill(row: &[i64], i: usize, next: &mut Vec<i64>, sums: &mut Vec<i64>, out: &mut BTreeMap<Vec<i64>, u64>) {
    if i == next.len() {
        sums[next.len()] = next.iter().sum();
        let owned = next.clone();
        descend(&owned, sums, out);
        return;
    }
    for x in row[i + 1]..=row[i] {
        next[i] = x;
        fill(row, i + 1, next, sums, out);
    }
}

/// Number of multisets of `(basis element, mode)` pairs of total depth `d`,
/// by unbounded knapsack counting over `dim_g · d` item kinds.
pub fn coloured_partitions(dim_g: usize, d: usize) -> u128 {
    let mut dp = vec![0u128; d + 1];
    dp[0] = 1;
    for part in 1..=d {
        for _ in 0..dim_g {
            for s in part..=d {
                dp[s] += dp[s - part];
            }
        }
    }
    dp[d]
}

pub fn dim_sl(l: usize) -> usize {
    l * (l + 2)
}

/// `Π_{i<j} (λ+ρ)(ε_i−ε_j) / (j−i)` in exact integers.
pub fn weyl_dim_oracle(lambda: &[i64]) -> u64 {
    let n = lambda.len() + 1;
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= lambda[i..j].iter().map(|&x| x as i128 + 1).sum::<i128>();
            den *= (j - i) as i128;
        }
    }
    (num / den) as u64
}

pub fn satisfies_all(polys: &[HPolynomial], x: &[Rational]) -> bool {
    polys.iter().all(|p| p.eval(x).unwrap().is_zero())
}

pub fn in_union(fams: &[WeightFamily], x: &[Rational]) -> bool {
    fams.iter().any(|f| f.contains(x))
}

/// Every point of `values^l`.
pub fn grid(values: &[Rational], l: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Rational>| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    out
}
