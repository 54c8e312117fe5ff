mod common;

use affvoa::weights::{branch_to_subalgebra, weight_multiplicities, zero_weight_dim};
use affvoa::{root_system, weyl_dim, Weight};
use common::{gt_multiplicities, weyl_dim_oracle};

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

fn fundamental_sum(l: usize, idx: &[usize]) -> Vec<i64> {
    let mut v = vec![0; l];
    for &i in idx {
        v[i - 1] += 1;
    }
    v
}

#[test]
fn root_system_counts() {
    for l in 1..=6 {
        let rs = root_system(l).unwrap();
        assert_eq!(rs.positive_roots.len(), l * (l + 1) / 2);
        assert_eq!(rs.dim(), l * (l + 2));
    }
    assert!(root_system(0).is_err());
}

#[test]
fn symmetric_powers_have_one_dimensional_weight_spaces() {
    for l in 1..=4 {
        for n in 0..=6 {
            let mut first = vec![0; l];
            first[0] = n;
            let mut last = vec![0; l];
            last[l - 1] = n;
            for lam in [first, last] {
                let t = weight_multiplicities(l, &w(&lam)).unwrap();
                assert!(t.entries().all(|(_, &m)| m == 1), "l={l} lambda={lam:?}");
                assert_eq!(t.len() as u64, weyl_dim_oracle(&lam));
            }
        }
    }
}

#[test]
fn multiplicities_agree_with_gelfand_tsetlin_count() {
    let cases: &[&[i64]] =
        &[&[1, 1], &[2, 1], &[3, 0], &[0, 2, 0], &[1, 0, 1], &[2, 1, 1], &[0, 1, 1, 0], &[1, 0, 0, 1], &[1, 1, 0, 1]];
    for lam in cases {
        let t = weight_multiplicities(lam.len(), &w(lam)).unwrap();
        let oracle = gt_multiplicities(lam);
        let got: Vec<(Vec<i64>, u64)> = t.entries().map(|(k, v)| (k.clone(), *v)).collect();
        let want: Vec<(Vec<i64>, u64)> = oracle.into_iter().collect();
        assert_eq!(got, want, "lambda={lam:?}");
    }
}

#[test]
fn adjoint_zero_weight_is_the_cartan() {
    assert_eq!(gt_multiplicities(&[1, 1])[&vec![0, 0]], 2);
    for l in 1..=5 {
        let lam = fundamental_sum(l, &[1, l]);
        assert_eq!(zero_weight_dim(l, &w(&lam)).unwrap(), l as u64);
        assert_eq!(weyl_dim(l, &w(&lam)).unwrap(), (l * (l + 2)) as u64);
    }
}

#[test]
fn zero_weight_space_of_omega2_plus_omega_lminus1() {
    for l in 3..=6 {
        let lam = fundamental_sum(l, &[2, l - 1]);
        let want = ((l - 2) * (l + 1) / 2) as u64;
        assert_eq!(zero_weight_dim(l, &w(&lam)).unwrap(), want, "l={l}");
        let dim = ((l - 2) * (l + 2) * (l + 1) * (l + 1) / 4) as u64;
        assert_eq!(weyl_dim(l, &w(&lam)).unwrap(), dim);
        assert_eq!(weyl_dim_oracle(&lam), dim);
    }
}

#[test]
fn weyl_dimension_examples() {
    assert_eq!(weyl_dim(3, &w(&[0, 2, 0])).unwrap(), 20);
    for n in 0..=6u64 {
        assert_eq!(weyl_dim(2, &w(&[0, n as i64])).unwrap(), (n + 1) * (n + 2) / 2);
    }
    assert_eq!(weyl_dim(5, &Weight::zero(5)).unwrap(), 1);
    assert!(weyl_dim(2, &w(&[-1, 1])).is_err());
}

#[test]
fn branching_of_omega2_plus_omega3_at_rank_four() {
    let got = branch_to_subalgebra(4, &w(&[0, 1, 1, 0])).unwrap();
    let mut summands: Vec<(Vec<i64>, u64, u64)> =
        got.iter().map(|s| (s.highest.clone(), s.multiplicity, s.dim)).collect();
    summands.sort();
    // ω2+ω_{l−1}, ω2+ω_{l−2}, ω1+ω_{l−1}, ω1+ω_{l−2} of the rank-3 subalgebra
    let mut want = vec![
        (vec![0, 1, 1], 1, weyl_dim_oracle(&[0, 1, 1])),
        (vec![0, 2, 0], 1, weyl_dim_oracle(&[0, 2, 0])),
        (vec![1, 0, 1], 1, weyl_dim_oracle(&[1, 0, 1])),
        (vec![1, 1, 0], 1, weyl_dim_oracle(&[1, 1, 0])),
    ];
    want.sort();
    assert_eq!(summands, want);
    let total: u64 = summands.iter().map(|s| s.1 * s.2).sum();
    assert_eq!(total, 75);
    assert_eq!(total, weyl_dim(4, &w(&[0, 1, 1, 0])).unwrap());
}

#[test]
fn branching_conserves_dimension_and_matches_oracle() {
    let cases: &[&[i64]] = &[&[1, 0], &[2, 1], &[1, 1, 1], &[0, 2, 1], &[2, 0, 0, 1], &[0, 0, 0]];
    for lam in cases {
        let l = lam.len();
        let got = branch_to_subalgebra(l, &w(lam)).unwrap();
        let total: u64 = got.iter().map(|s| s.multiplicity * weyl_dim_oracle(&s.highest)).sum();
        assert_eq!(total, weyl_dim_oracle(lam), "lambda={lam:?}");
        // restricted character rebuilt from the summands
        let mut rebuilt = std::collections::BTreeMap::new();
        for s in &got {
            for (mu, m) in gt_multiplicities(&s.highest) {
                *rebuilt.entry(eps(&mu)).or_insert(0) += m * s.multiplicity;
            }
        }
        let mut restricted = std::collections::BTreeMap::new();
        for (mu, m) in gt_multiplicities(lam) {
            *restricted.entry(eps(&mu[..l - 1])).or_insert(0) += m;
        }
        assert_eq!(rebuilt, restricted, "lambda={lam:?}");
    }
}

fn eps(mu: &[i64]) -> Vec<i64> {
    (0..mu.len()).map(|a| mu[a..].iter().sum()).collect()
}

#[test]
fn cap_reports_its_value() {
    let err = affvoa::weights::weight_multiplicities_capped(4, &w(&[3, 3, 3, 3]), 1000).unwrap_err();
    assert!(err.to_string().contains("1000"), "{err}");
}
