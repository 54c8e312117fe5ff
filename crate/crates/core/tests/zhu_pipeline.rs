mod common;

use affvoa::rational::{frac, int};
use affvoa::{
    check_lemma64, classify, extract_p0, family_satisfies, generate_adjoint_module, known_families_a2,
    known_families_vl1, known_p0_vl1, known_p_a2, known_vprime_a2, known_vprime_l1, psi, same_span, v2n_vector,
    vlm_vector, zhu_image, Generator, HPolynomial, LieElement, Rational, Uea, WeightFamily,
};
use common::{grid, in_union, satisfies_all, weyl_dim_oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn omega_sum(l: usize, idx: &[usize]) -> Vec<i64> {
    let mut v = vec![0; l];
    for &i in idx {
        v[i - 1] += 1;
    }
    v
}

#[test]
fn zhu_images_match_closed_forms() {
    for l in 3..=4 {
        let u = Uea::new(l).unwrap();
        assert_eq!(zhu_image(&vlm_vector(l, 1).unwrap(), &u).unwrap(), known_vprime_l1(&u).unwrap());
    }
    let u = Uea::new(2).unwrap();
    for n in 1..=2 {
        assert_eq!(zhu_image(&v2n_vector(n).unwrap(), &u).unwrap(), known_vprime_a2(&u, n).unwrap());
    }
}

#[test]
fn zhu_image_of_degree_three_vector() {
    let u = Uea::new(2).unwrap();
    let want = u.parse("-1 * f[1,2] e[1,3]^2 + -1 * h[1] e[1,3] e[2,3] + 1 * e[1,2] e[2,3]^2").unwrap();
    assert_eq!(zhu_image(&v2n_vector(1).unwrap(), &u).unwrap(), want);
    // a single negative mode maps to the generator
    let m = affvoa::VacuumModule::new(2, int(-1)).unwrap();
    let x = m.monomial(&[(Generator::f(1, 3), -1, 1)]).unwrap();
    assert_eq!(zhu_image(&x, &u).unwrap(), u.generator(Generator::f(1, 3)).unwrap());
}

#[test]
fn adjoint_module_of_vl1() {
    for l in 3..=4 {
        let u = Uea::new(l).unwrap();
        let r = generate_adjoint_module(&u, &known_vprime_l1(&u).unwrap(), 100_000).unwrap();
        assert!(r.closed);
        assert_eq!(r.dim() as u64, weyl_dim_oracle(&omega_sum(l, &[2, l - 1])), "l={l}");
        assert_eq!(r.zero_weight_space().len(), (l - 2) * (l + 1) / 2, "l={l}");
        let p0 = extract_p0(&u, &r).unwrap();
        assert!(same_span(&p0, &known_p0_vl1(l).unwrap()).unwrap(), "l={l}");
    }
    let u = Uea::new(3).unwrap();
    let r = generate_adjoint_module(&u, &known_vprime_l1(&u).unwrap(), 100_000).unwrap();
    assert_eq!((r.dim(), r.zero_weight_space().len()), (20, 2));
}

#[test]
fn adjoint_module_of_v2n() {
    let u = Uea::new(2).unwrap();
    for n in 1..=2u32 {
        let r = generate_adjoint_module(&u, &known_vprime_a2(&u, n).unwrap(), 100_000).unwrap();
        assert_eq!(r.dim() as u64, weyl_dim_oracle(&[0, 3 * n as i64]));
        assert!(r.weight_dims().iter().all(|(_, d)| *d == 1));
        assert_eq!(r.zero_weight_space().len(), 1);
        let p0 = extract_p0(&u, &r).unwrap();
        assert!(same_span(&p0, &[known_p_a2(n).unwrap()]).unwrap(), "n={n}");
    }
}

#[test]
fn adjoint_module_of_theta_is_the_adjoint_representation() {
    for l in 1..=3 {
        let u = Uea::new(l).unwrap();
        let r = generate_adjoint_module(&u, &u.generator(Generator::e(1, l + 1)).unwrap(), 1000).unwrap();
        assert_eq!(r.dim(), (l + 1) * (l + 1) - 1);
        let p0 = extract_p0(&u, &r).unwrap();
        let hs: Vec<HPolynomial> = (1..=l).map(|i| HPolynomial::var(l, i).unwrap()).collect();
        assert!(same_span(&p0, &hs).unwrap());
    }
    let u = Uea::new(3).unwrap();
    let err = generate_adjoint_module(&u, &known_vprime_l1(&u).unwrap(), 5).unwrap_err();
    assert!(err.to_string().contains('5'));
}

#[test]
fn adjoint_action_on_vl1_by_f13() {
    for l in 4..=6 {
        let u = Uea::new(l).unwrap();
        let x = LieElement::f(l, 1, 3).unwrap();
        let got = u.adjoint_apply(&x, &known_vprime_l1(&u).unwrap()).unwrap();
        let want = u
            .pbw_normalize(&[(Generator::e(2, l + 1), 1), (Generator::e(3, l), 1)])
            .unwrap()
            .sub(&u.pbw_normalize(&[(Generator::e(3, l + 1), 1), (Generator::e(2, l), 1)]).unwrap())
            .unwrap();
        assert!(got == want || got == want.scale(&int(-1)), "l={l}: {got}");
    }
}

#[test]
fn lowering_the_rank_two_vector_gives_its_polynomial() {
    let u = Uea::new(2).unwrap();
    for n in 1..=2 {
        let c = check_lemma64(&u, n).unwrap();
        assert!(c.holds(), "n={n}: {} vs {}", c.computed, c.expected);
    }
    let one = check_lemma64(&u, 1).unwrap();
    assert_eq!(one.computed, HPolynomial::parse(2, "-1 * h[1]^2 h[2] + -1 * h[1] h[2]^2 + -1 * h[1] h[2]").unwrap());
}

#[test]
fn known_polynomials() {
    assert_eq!(known_p0_vl1(3).unwrap().len(), 2);
    assert_eq!(known_p0_vl1(4).unwrap().len(), 5);
    assert_eq!(known_p0_vl1(5).unwrap().len(), 9);
    let p2 = HPolynomial::parse(2, "1 * h[1]^2 h[2]^2 + -1 * h[1] h[2]^2 + -1 * h[1]^2 h[2] + 1 * h[1] h[2]").unwrap();
    let s = HPolynomial::affine_int(&[1, 1], 1).mul(&HPolynomial::affine_int(&[1, 1], 0)).unwrap();
    assert_eq!(known_p_a2(2).unwrap(), p2.mul(&s).unwrap());
    assert_eq!(known_p_a2(1).unwrap().eval(&[int(1), int(1)]).unwrap(), int(3));
}

#[test]
fn classification_of_vl1_systems() {
    for l in 3..=5 {
        let polys = known_p0_vl1(l).unwrap();
        let fams = classify(&polys, l).unwrap();
        assert_eq!(fams, known_families_vl1(l).unwrap(), "l={l}");
        assert_eq!(fams.len(), l + 1);
        for f in &fams {
            assert!(family_satisfies(f, &polys).unwrap());
        }
    }
}

#[test]
fn classification_of_a2_systems() {
    for n in 1..=3 {
        let p = [known_p_a2(n).unwrap()];
        let fams = classify(&p, 2).unwrap();
        assert_eq!(fams.len(), 3 * n as usize);
        assert_eq!(fams, known_families_a2(n), "n={n}");
        // the involution swaps h1 and h2 and permutes the families
        let mut swapped: Vec<WeightFamily> = fams.iter().map(|f| f.swap(1, 2)).collect();
        swapped.sort();
        assert_eq!(swapped, fams);
        let swapped_poly = p[0].swap_vars(1, 2);
        assert_eq!(swapped_poly, p[0]);
    }
}

#[test]
fn computed_polynomials_classify_identically() {
    for l in 3..=4 {
        let u = Uea::new(l).unwrap();
        let r = generate_adjoint_module(&u, &zhu_image(&vlm_vector(l, 1).unwrap(), &u).unwrap(), 100_000).unwrap();
        let fams = classify(&extract_p0(&u, &r).unwrap(), l).unwrap();
        assert_eq!(fams, known_families_vl1(l).unwrap());
    }
    let u = Uea::new(2).unwrap();
    for n in 1..=2 {
        for v in [v2n_vector(n).unwrap(), psi(&v2n_vector(n).unwrap()).unwrap()] {
            let r = generate_adjoint_module(&u, &zhu_image(&v, &u).unwrap(), 100_000).unwrap();
            let fams = classify(&extract_p0(&u, &r).unwrap(), 2).unwrap();
            assert_eq!(fams, known_families_a2(n));
        }
    }
}

#[test]
fn family_membership_examples() {
    let p = [known_p_a2(1).unwrap()];
    assert!(family_satisfies(&WeightFamily::line_int(&[0, -1], &[1, -1]), &p).unwrap());
    assert!(!family_satisfies(&WeightFamily::point(vec![int(1), int(1)]), &p).unwrap());
    assert!(family_satisfies(&WeightFamily::line_int(&[0, 0, 0, 0], &[1, 0, 0, 0]), &known_p0_vl1(4).unwrap()).unwrap());
}

fn sample_values() -> Vec<Rational> {
    let mut v: Vec<Rational> = (-3..=3).map(int).collect();
    v.extend([frac(-5, 2), frac(-3, 2), frac(-1, 2), frac(1, 2), frac(3, 2)]);
    v
}

/// Every lattice point is a common zero exactly when it lies on an emitted family.
#[test]
fn classification_is_sound_and_complete_on_a_grid() {
    let vals = sample_values();
    let systems: Vec<(usize, Vec<HPolynomial>)> = vec![
        (2, vec![known_p_a2(1).unwrap()]),
        (2, vec![known_p_a2(2).unwrap()]),
        (2, vec![known_p_a2(3).unwrap()]),
        (3, known_p0_vl1(3).unwrap()),
        (4, known_p0_vl1(4).unwrap()),
    ];
    for (l, polys) in systems {
        let fams = classify(&polys, l).unwrap();
        let pts = if l == 4 { grid(&vals[..7], l) } else { grid(&vals, l) };
        let mut zeros = 0;
        for x in pts {
            let sat = satisfies_all(&polys, &x);
            zeros += usize::from(sat);
            assert_eq!(sat, in_union(&fams, &x), "l={l} x={x:?}");
        }
        assert!(zeros > 0);
    }
}

/// Random points, biased towards the coordinate and shifted hyperplanes
/// where solutions live.
#[test]
fn classification_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for l in 3..=5 {
        let polys = known_p0_vl1(l).unwrap();
        let fams = classify(&polys, l).unwrap();
        let (mut on, mut off) = (0, 0);
        for _ in 0..1000 {
            let mut x: Vec<Rational> = Vec::with_capacity(l);
            for i in 0..l {
                let r: f64 = rng.random();
                let c = if r < 0.5 {
                    int(0)
                } else if r < 0.65 && i > 0 {
                    -int(1) - x[i - 1].clone()
                } else {
                    frac(rng.random_range(-6..=6), rng.random_range(1..=3))
                };
                x.push(c);
            }
            let sat = satisfies_all(&polys, &x);
            if sat {
                on += 1;
            } else {
                off += 1;
            }
            assert_eq!(sat, in_union(&fams, &x), "l={l} x={x:?}");
        }
        assert!(on > 20 && off > 20, "l={l}: {on} on, {off} off");
    }
}
