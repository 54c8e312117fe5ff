use affvoa::linalg::{kernel, rank};
use affvoa::rational::{frac, int};
use affvoa::{
    bracket, invariant_form, root_system, Generator, HPolynomial, LieElement, Rational, Uea, UeaElement, VacuumModule,
    VermaVector, WeightFamily,
};
use num_traits::Zero;
use proptest::prelude::*;

const RANK: usize = 2;

fn generators() -> Vec<Generator> {
    root_system(RANK).unwrap().generators()
}

fn lie_element() -> impl Strategy<Value = LieElement> {
    prop::collection::vec(-3i64..=3, RANK * (RANK + 2))
        .prop_map(|cs| LieElement::from_terms(RANK, generators().into_iter().zip(cs.into_iter().map(int))).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| frac(a, b))
}

fn hpoly() -> impl Strategy<Value = HPolynomial> {
    prop::collection::vec((0u32..=3, 0u32..=3, rational()), 0..5).prop_map(|ts| {
        let h1 = HPolynomial::var(RANK, 1).unwrap();
        let h2 = HPolynomial::var(RANK, 2).unwrap();
        let mut p = HPolynomial::zero(RANK);
        for (a, b, c) in ts {
            let mut m = HPolynomial::constant(RANK, c);
            for _ in 0..a {
                m = m.mul(&h1).unwrap();
            }
            for _ in 0..b {
                m = m.mul(&h2).unwrap();
            }
            p = p.add(&m).unwrap();
        }
        p
    })
}

fn word() -> impl Strategy<Value = Vec<(usize, u32)>> {
    prop::collection::vec((0usize..RANK * (RANK + 2), 1u32..=2), 0..4)
}

fn uea_element(u: &Uea, ws: &[(Vec<(usize, u32)>, i64)]) -> UeaElement {
    let gens = generators();
    let mut acc = u.zero();
    for (w, c) in ws {
        let w: Vec<(Generator, u32)> = w.iter().map(|&(i, e)| (gens[i], e)).collect();
        acc = acc.add(&u.pbw_normalize(&w).unwrap().scale(&int(*c))).unwrap();
    }
    acc
}

/// `(generator index, mode, exponent)` words with integer coefficients.
type ModeWords = [(Vec<(usize, i32, u32)>, i64)];

fn verma(ws: &ModeWords) -> VermaVector {
    let m = VacuumModule::new(RANK, frac(-3, 2)).unwrap();
    let gens = generators();
    let mut acc = VermaVector::zero(RANK, frac(-3, 2));
    for (w, c) in ws {
        let w: Vec<(Generator, i32, u32)> = w.iter().map(|&(i, n, e)| (gens[i], n, e)).collect();
        acc = acc.add(&m.monomial(&w).unwrap().scale(&int(*c))).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear_antisymmetric_and_invariant(x in lie_element(), y in lie_element(), z in lie_element()) {
        let xy = bracket(&x, &y).unwrap();
        prop_assert!(xy.add(&bracket(&y, &x).unwrap()).unwrap().is_zero());
        let lhs = bracket(&x.add(&z).unwrap(), &y).unwrap();
        prop_assert_eq!(lhs, xy.add(&bracket(&z, &y).unwrap()).unwrap());
        prop_assert_eq!(
            invariant_form(&xy, &z).unwrap(),
            invariant_form(&x, &bracket(&y, &z).unwrap()).unwrap()
        );
        prop_assert_eq!(invariant_form(&x, &y).unwrap(), invariant_form(&y, &x).unwrap());
    }

    #[test]
    fn hpoly_ring_laws(p in hpoly(), q in hpoly(), r in hpoly()) {
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert_eq!(
            p.mul(&q.add(&r).unwrap()).unwrap(),
            p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(p.mul(&q).unwrap().mul(&r).unwrap(), p.mul(&q.mul(&r).unwrap()).unwrap());
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn hpoly_eval_is_a_homomorphism(p in hpoly(), q in hpoly(), a in rational(), b in rational()) {
        let x = [a, b];
        let pq = p.mul(&q).unwrap().eval(&x).unwrap();
        prop_assert_eq!(pq, p.eval(&x).unwrap() * q.eval(&x).unwrap());
    }

    #[test]
    fn hpoly_display_roundtrip(p in hpoly()) {
        prop_assert_eq!(HPolynomial::parse(RANK, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn uea_display_roundtrip_and_associativity(
        a in prop::collection::vec((word(), -3i64..=3), 0..3),
        b in prop::collection::vec((word(), -3i64..=3), 0..3),
        c in prop::collection::vec((word(), -3i64..=3), 0..2),
    ) {
        let u = Uea::new(RANK).unwrap();
        let (a, b, c) = (uea_element(&u, &a), uea_element(&u, &b), uea_element(&u, &c));
        prop_assert_eq!(u.parse(&a.to_string()).unwrap(), a.clone());
        let left = u.multiply(&u.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = u.multiply(&a, &u.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn verma_lines_roundtrip(ws in prop::collection::vec(
        (prop::collection::vec((0usize..RANK * (RANK + 2), -2i32..=-1, 1u32..=2), 0..3), -4i64..=4), 0..4)
    ) {
        let v = verma(&ws);
        prop_assert_eq!(VermaVector::from_lines(&v.to_lines()).unwrap(), v);
    }

    #[test]
    fn family_canonical_form_is_parametrization_invariant(
        base in prop::collection::vec(-4i64..=4, 3),
        dir in prop::collection::vec(-3i64..=3, 3),
        shift in -3i64..=3,
        scale in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
    ) {
        prop_assume!(dir.iter().any(|&d| d != 0));
        let f = WeightFamily::line_int(&base, &dir);
        let moved: Vec<i64> = base.iter().zip(&dir).map(|(b, d)| b + shift * d).collect();
        let scaled: Vec<i64> = dir.iter().map(|d| d * scale).collect();
        prop_assert_eq!(WeightFamily::line_int(&moved, &scaled), f.clone());
        let point: Vec<Rational> = base.iter().zip(&dir).map(|(b, d)| int(b + 2 * d)).collect();
        prop_assert!(f.contains(&point));
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<WeightFamily>(&json).unwrap(), f);
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..5)) {
        let a: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let k = kernel(&a, 5);
        prop_assert_eq!(k.len() + rank(&a, 5), 5);
        for v in &k {
            for row in &a {
                let dot = row.iter().zip(v).fold(Rational::zero(), |s, (x, y)| s + x * y);
                prop_assert!(dot.is_zero());
            }
        }
    }
}
