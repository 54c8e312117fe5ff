//! Machine checks of the `U(g)` relations behind the degree-`3n` computation
//! for `sl_3`, and randomized invariants of the algebraic kernels.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::affine::{psi, psi_lie, VacuumModule, VermaVector};
use crate::error::Result;
use crate::lie::{bracket, invariant_form, root_system, Generator, LieElement};
use crate::rational::{binomial, factorial, falling, frac, int, Rational};
use crate::uea::{Uea, UeaElement};

/// Outcome of one family of checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl IdentityReport {
    fn new(name: &str) -> Self {
        IdentityReport { name: name.into(), cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

/// `∏ (h + c)` over the given shifts, as an element of `U(g)`.
fn h_product(uea: &Uea, h: &UeaElement, shifts: impl IntoIterator<Item = i64>) -> Result<UeaElement> {
    let mut acc = uea.one();
    for c in shifts {
        acc = uea.multiply(&acc, &h.add(&uea.scalar(int(c)))?)?;
    }
    Ok(acc)
}

struct RootData {
    l: usize,
    root: (usize, usize),
    uea: Uea,
    e: UeaElement,
    f: UeaElement,
    h: UeaElement,
    f_lie: LieElement,
}

fn roots(max_rank: usize) -> Result<Vec<RootData>> {
    let mut out = Vec::new();
    for l in 1..=max_rank {
        for &(i, j) in &root_system(l)?.positive_roots {
            let uea = Uea::with_last(l, &[Generator::e(i, j)])?;
            out.push(RootData {
                l,
                root: (i, j),
                e: uea.generator(Generator::e(i, j))?,
                f: uea.generator(Generator::f(i, j))?,
                h: uea.lie(&LieElement::coroot(l, i, j)?)?,
                f_lie: LieElement::f(l, i, j)?,
                uea,
            });
        }
    }
    Ok(out)
}

/// `(f^m)_L(e^k) ∈ (−1)^k m! C(k, 2k−m) f^{m−k} (h+k−m)⋯(h−k+1) + U(g)e` for `2k ≥ m ≥ k`.
fn f_on_e_high(rd: &[RootData], max_exp: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("(f^m)_L(e^k), 2k >= m >= k, modulo U(g)e");
    for d in rd {
        let u = &d.uea;
        for k in 0..=max_exp {
            for m in k..=(2 * k).min(max_exp) {
                let lhs = u.adjoint_word_apply(&[(d.f_lie.clone(), m)], &u.pow(&d.e, k)?)?;
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                let c = sign * factorial(m as u64) * binomial(k as u64, (2 * k - m) as u64);
                let poly = h_product(u, &d.h, (0..(2 * k - m) as i64).map(|s| k as i64 - m as i64 - s))?;
                let rhs = u.multiply(&u.pow(&d.f, m - k)?, &poly)?.scale(&c);
                let ok = u.in_left_ideal(&lhs.sub(&rhs)?, Generator::e(d.root.0, d.root.1), 1)?;
                rep.record(ok, || format!("l={} root={:?} m={m} k={k}", d.l, d.root));
            }
        }
    }
    Ok(rep)
}

/// `(f^m)_L(e^k) ∈ (−1)^m k⋯(k−m+1) (h−k+1)⋯(h−k+m) e^{k−m} + U(g)e^{k−m+1}` for `m ≤ k`.
fn f_on_e_low(rd: &[RootData], max_exp: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("(f^m)_L(e^k), m <= k, modulo U(g)e^(k-m+1)");
    for d in rd {
        let u = &d.uea;
        for k in 0..=max_exp {
            for m in 0..=k {
                let lhs = u.adjoint_word_apply(&[(d.f_lie.clone(), m)], &u.pow(&d.e, k)?)?;
                let sign = if m % 2 == 0 { int(1) } else { int(-1) };
                let c = sign * falling(k as i64, m as u64);
                let poly = h_product(u, &d.h, (1..=m as i64).map(|s| s - k as i64))?;
                let rhs = u.multiply(&poly, &u.pow(&d.e, k - m)?)?.scale(&c);
                let ok = u.in_left_ideal(&lhs.sub(&rhs)?, Generator::e(d.root.0, d.root.1), k - m + 1)?;
                rep.record(ok, || format!("l={} root={:?} m={m} k={k}", d.l, d.root));
            }
        }
    }
    Ok(rep)
}

/// `e^m f^k ∈ m⋯(m−k+1) (h−m+k)⋯(h−m+1) e^{m−k} + U(g)e^{m−k+1}` for `m ≥ k`.
fn e_times_f(rd: &[RootData], max_exp: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("e^m f^k, m >= k, modulo U(g)e^(m-k+1)");
    for d in rd {
        let u = &d.uea;
        for m in 0..=max_exp {
            for k in 0..=m {
                let lhs = u.multiply(&u.pow(&d.e, m)?, &u.pow(&d.f, k)?)?;
                let poly = h_product(u, &d.h, (1..=k as i64).map(|s| s - m as i64))?;
                let rhs = u.multiply(&poly, &u.pow(&d.e, m - k)?)?.scale(&falling(m as i64, k as u64));
                let ok = u.in_left_ideal(&lhs.sub(&rhs)?, Generator::e(d.root.0, d.root.1), m - k + 1)?;
                rep.record(ok, || format!("l={} root={:?} m={m} k={k}", d.l, d.root));
            }
        }
    }
    Ok(rep)
}

/// `e_{ip}^m f_{ij}^k ∈ k⋯(k−m+1) f_{ij}^{k−m} e_{jp}^m + U(g)e_{ip}` for
/// `i < j < p` and `m ≤ k`.
fn long_e_times_f(max_rank: usize, max_exp: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("e_(i,p)^m f_(i,j)^k, m <= k, modulo U(g)e_(i,p)");
    for l in 2..=max_rank {
        for i in 1..=l + 1 {
            for j in i + 1..=l + 1 {
                for p in j + 1..=l + 1 {
                    let long = Generator::e(i, p);
                    let u = Uea::with_last(l, &[long])?;
                    for k in 0..=max_exp {
                        for m in 0..=k {
                            let lhs = u.pbw_normalize(&[(long, m), (Generator::f(i, j), k)])?;
                            let rhs = u
                                .pbw_normalize(&[(Generator::f(i, j), k - m), (Generator::e(j, p), m)])?
                                .scale(&falling(k as i64, m as u64));
                            let ok = u.in_left_ideal(&lhs.sub(&rhs)?, long, 1)?;
                            rep.record(ok, || format!("l={l} (i,j,p)=({i},{j},{p}) m={m} k={k}"));
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// `(x^m)_L(y^k) = k⋯(k−m+1) y^{k−m} [x,y]^m` whenever `[[x,y],y] = 0 = [x,[x,y]]`.
fn nilpotent_pairs(max_rank: usize, max_exp: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("(x^m)_L(y^k) for [[x,y],y] = [x,[x,y]] = 0");
    for l in 1..=max_rank {
        let u = Uea::new(l)?;
        let basis: Vec<LieElement> =
            root_system(l)?.generators().into_iter().map(|g| LieElement::generator(l, g)).collect::<Result<_>>()?;
        for x in &basis {
            for y in &basis {
                let xy = bracket(x, y)?;
                if !bracket(&xy, y)?.is_zero() || !bracket(x, &xy)?.is_zero() {
                    continue;
                }
                let (yu, xyu) = (u.lie(y)?, u.lie(&xy)?);
                for k in 0..=max_exp {
                    let yk = u.pow(&yu, k)?;
                    for m in 0..=k {
                        let lhs = u.adjoint_word_apply(&[(x.clone(), m)], &yk)?;
                        let rhs =
                            u.multiply(&u.pow(&yu, k - m)?, &u.pow(&xyu, m)?)?.scale(&falling(k as i64, m as u64));
                        rep.record(lhs == rhs, || format!("l={l} x={x} y={y} m={m} k={k}"));
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// The five `U(g)` relations for every root (or admissible pair) up to
/// `max_rank`, with all exponents at most `max_exp`.
pub fn check_uea_relations(max_rank: usize, max_exp: u32) -> Result<Vec<IdentityReport>> {
    let rd = roots(max_rank)?;
    Ok(vec![
        f_on_e_high(&rd, max_exp)?,
        f_on_e_low(&rd, max_exp)?,
        e_times_f(&rd, max_exp)?,
        long_e_times_f(max_rank, max_exp)?,
        nilpotent_pairs(max_rank, max_exp)?,
    ])
}

fn random_generator(rng: &mut ChaCha8Rng, l: usize) -> Generator {
    let gens = root_system(l).expect("positive rank").generators();
    *gens.choose(rng).expect("nonempty basis")
}

fn random_lie(rng: &mut ChaCha8Rng, l: usize) -> LieElement {
    let mut x = LieElement::zero(l);
    for _ in 0..rng.random_range(1..=3) {
        let g = LieElement::generator(l, random_generator(rng, l)).expect("valid generator");
        let c = int(rng.random_range(-3..=3));
        x = x.add(&g.scale(&c)).expect("same rank");
    }
    x
}

fn random_uea(rng: &mut ChaCha8Rng, u: &Uea) -> Result<UeaElement> {
    let mut acc = u.zero();
    for _ in 0..rng.random_range(1..=2) {
        let word: Vec<(Generator, u32)> =
            (0..rng.random_range(0..=3)).map(|_| (random_generator(rng, u.rank()), rng.random_range(1..=2))).collect();
        let c = int(rng.random_range(1..=4));
        acc = acc.add(&u.pbw_normalize(&word)?.scale(&c))?;
    }
    Ok(acc)
}

const LEVELS: [(i64, i64); 4] = [(-1, 1), (0, 1), (1, 2), (2, 1)];

fn random_vector(rng: &mut ChaCha8Rng, l: usize) -> Result<(VermaVector, std::sync::Arc<VacuumModule>)> {
    let (p, q) = *LEVELS.choose(rng).expect("nonempty");
    let module = VacuumModule::shared(l, frac(p, q))?;
    let word: Vec<(Generator, i32, u32)> = (0..rng.random_range(0..=2))
        .map(|_| (random_generator(rng, l), -rng.random_range(1..=2), rng.random_range(1..=2)))
        .collect();
    Ok((module.monomial(&word)?, module))
}

/// Randomized invariants, `cases` samples each, reproducible from `seed`.
pub fn run_property_suite(seed: u64, cases: usize) -> Result<Vec<IdentityReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebras: Vec<Uea> = (1..=3).map(Uea::new).collect::<Result<_>>()?;
    let mut out = Vec::new();

    let mut jac = IdentityReport::new("Jacobi and antisymmetry of the bracket");
    let mut inv = IdentityReport::new("invariance of the normalized form");
    for _ in 0..cases {
        let l = rng.random_range(1..=4);
        let (x, y, z) = (random_lie(&mut rng, l), random_lie(&mut rng, l), random_lie(&mut rng, l));
        let j = bracket(&x, &bracket(&y, &z)?)?
            .add(&bracket(&y, &bracket(&z, &x)?)?)?
            .add(&bracket(&z, &bracket(&x, &y)?)?)?;
        let anti = bracket(&x, &y)?.add(&bracket(&y, &x)?)?;
        jac.record(j.is_zero() && anti.is_zero(), || format!("x={x} y={y} z={z}"));
        let ok = invariant_form(&bracket(&x, &y)?, &z)? == invariant_form(&x, &bracket(&y, &z)?)?
            && invariant_form(&x, &y)? == invariant_form(&y, &x)?;
        inv.record(ok, || format!("x={x} y={y} z={z}"));
    }
    out.push(jac);
    out.push(inv);

    let mut der = IdentityReport::new("adjoint action is a derivation of U(g)");
    let mut assoc = IdentityReport::new("associativity of the PBW product");
    for _ in 0..cases {
        let u = algebras.choose(&mut rng).expect("nonempty");
        let x = random_lie(&mut rng, u.rank());
        let (a, b, c) = (random_uea(&mut rng, u)?, random_uea(&mut rng, u)?, random_uea(&mut rng, u)?);
        let lhs = u.adjoint_apply(&x, &u.multiply(&a, &b)?)?;
        let rhs = u.multiply(&u.adjoint_apply(&x, &a)?, &b)?.add(&u.multiply(&a, &u.adjoint_apply(&x, &b)?)?)?;
        der.record(lhs == rhs, || format!("x={x} a={a} b={b}"));
        let ok = u.multiply(&u.multiply(&a, &b)?, &c)? == u.multiply(&a, &u.multiply(&b, &c)?)?;
        assoc.record(ok, || format!("a={a} b={b} c={c}"));
    }
    out.push(der);
    out.push(assoc);

    let mut comm = IdentityReport::new("mode commutation relations on N(k,0)");
    for _ in 0..cases {
        let l = rng.random_range(1..=3);
        let (v, module) = random_vector(&mut rng, l)?;
        let (gx, gy) = (random_generator(&mut rng, l), random_generator(&mut rng, l));
        let (a, b) = (rng.random_range(-3..=3), rng.random_range(-3..=3));
        let x = LieElement::generator(l, gx)?;
        let y = LieElement::generator(l, gy)?;
        let lhs = module.apply_generator(gx, a, &module.apply_generator(gy, b, &v)?)?.sub(&module.apply_generator(
            gy,
            b,
            &module.apply_generator(gx, a, &v)?,
        )?)?;
        let mut rhs = module.apply_mode(&bracket(&x, &y)?, a + b, &v)?;
        if a + b == 0 {
            let c: Rational = int(a as i64) * invariant_form(&x, &y)? * module.level();
            rhs = rhs.add(&v.scale(&c))?;
        }
        comm.record(lhs == rhs, || format!("x={gx}({a}) y={gy}({b}) v={v}"));
    }
    out.push(comm);

    let mut invol = IdentityReport::new("diagram involution is an involutive automorphism");
    for _ in 0..cases {
        let (v, module) = random_vector(&mut rng, 2)?;
        let x = random_lie(&mut rng, 2);
        let m = rng.random_range(-2..=2);
        let back = psi(&psi(&v)?)?;
        let lhs = psi(&module.apply_mode(&x, m, &v)?)?;
        let rhs = module.apply_mode(&psi_lie(&x)?, m, &psi(&v)?)?;
        let y = random_lie(&mut rng, 2);
        let bracket_ok = psi_lie(&bracket(&x, &y)?)? == bracket(&psi_lie(&x)?, &psi_lie(&y)?)?;
        invol.record(back == v && lhs == rhs && bracket_ok, || format!("x={x}({m}) v={v}"));
    }
    out.push(invol);
    Ok(out)
}
