//! The universal enveloping algebra `U(sl_{l+1})` in PBW normal form.
//!
//! The default order puts every `f` first, then `h_1..h_l`, then every `e`, so
//! a normal-form element lies in the left ideal `U(g)n₊` exactly when each of
//! its monomials ends in an `e`. Algebras with other orders (for instance one
//! `e_α` moved to the very end, to test membership in `U(g)e_α^j`) are built
//! with [`Uea::with_last`].

use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Zero};
use rustc_hash::{FxHashMap, FxHasher};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::hpoly::{HMonomial, HPolynomial};
use crate::lie::{check_rank, generator_bracket, root_system, Generator, LieElement};
use crate::rational::{fmt_rational, parse_rational, Rational};
use crate::straighten::{add_into, Bracket, Monomial, Rules, Straightener, Terms};

pub type PbwMonomial = Monomial<Generator>;

impl PbwMonomial {
    pub fn weight(&self, rank: usize) -> Vec<i64> {
        let mut w = vec![0; rank];
        for (g, e) in &self.0 {
            for (x, y) in w.iter_mut().zip(g.weight(rank)) {
                *x += y * *e as i64;
            }
        }
        w
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.0.iter().map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub(crate) struct UeaRules {
    position: FxHashMap<Generator, usize>,
    reversed: bool,
}

impl Rules for UeaRules {
    type Key = Generator;

    fn precedes(&self, a: Generator, b: Generator) -> bool {
        let (pa, pb) = (self.position[&a], self.position[&b]);
        if self.reversed {
            pa > pb
        } else {
            pa < pb
        }
    }

    fn bracket(&self, a: Generator, b: Generator) -> Bracket<Generator> {
        Bracket { terms: SmallVec::from_vec(generator_bracket(a, b)), central: Rational::zero() }
    }
}

/// An element of `U(sl_{l+1})` in the normal form of the algebra that made it.
#[derive(Clone, Debug)]
pub struct UeaElement {
    rank: usize,
    order_key: u64,
    pub(crate) terms: Terms<Generator>,
}

impl PartialEq for UeaElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.order_key == other.order_key && self.terms == other.terms
    }
}

impl Eq for UeaElement {}

impl UeaElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by monomial (lexicographic in the generator order).
    pub fn terms(&self) -> Vec<(&PbwMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UeaElement { terms: crate::straighten::scaled(&self.terms, c), ..self.clone() }
    }

    fn same_frame(&self, other: &Self) -> Result<()> {
        check_rank(self.rank, other.rank)?;
        if self.order_key != other.order_key {
            return Err(Error::Invariant("elements normalized in different PBW orders".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_frame(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m.clone(), c.clone());
        }
        Ok(UeaElement { terms, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// The common weight of all terms; `None` for zero or mixed weights.
    pub fn weight(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|m| m.weight(self.rank));
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(m, c)| if m.is_one() { fmt_rational(c) } else { format!("{} * {}", fmt_rational(c), m) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `U(sl_{l+1})` with a fixed PBW order and memoized straightening tables.
pub struct Uea {
    rank: usize,
    order: Vec<Generator>,
    order_key: u64,
    forward: Straightener<UeaRules>,
    // the same algebra under the reversed order, for right multiplication
    backward: Straightener<UeaRules>,
}

fn order_key(order: &[Generator]) -> u64 {
    let mut h = FxHasher::default();
    order.hash(&mut h);
    h.finish()
}

impl Uea {
    /// The standard order: `f` block, `h` block, `e` block.
    pub fn new(rank: usize) -> Result<Self> {
        let order = root_system(rank)?.generators();
        Self::with_order(rank, order)
    }

    /// The standard order with `last` moved, in the given sequence, to the end.
    pub fn with_last(rank: usize, last: &[Generator]) -> Result<Self> {
        let mut order: Vec<Generator> =
            root_system(rank)?.generators().into_iter().filter(|g| !last.contains(g)).collect();
        order.extend_from_slice(last);
        Self::with_order(rank, order)
    }

    /// An arbitrary total order on the Chevalley basis.
    pub fn with_order(rank: usize, order: Vec<Generator>) -> Result<Self> {
        let mut expected = root_system(rank)?.generators();
        let mut given = order.clone();
        expected.sort();
        given.sort();
        if expected != given {
            return Err(Error::Unsupported("order must be a permutation of the Chevalley basis".into()));
        }
        let position: FxHashMap<Generator, usize> = order.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        Ok(Uea {
            rank,
            order_key: order_key(&order),
            forward: Straightener::new(UeaRules { position: position.clone(), reversed: false }),
            backward: Straightener::new(UeaRules { position, reversed: true }),
            order,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &[Generator] {
        &self.order
    }

    /// Number of memoized straightening products.
    pub fn cache_size(&self) -> usize {
        self.forward.memo_len() + self.backward.memo_len()
    }

    fn wrap(&self, terms: Terms<Generator>) -> UeaElement {
        UeaElement { rank: self.rank, order_key: self.order_key, terms }
    }

    pub fn zero(&self) -> UeaElement {
        self.wrap(Terms::default())
    }

    pub fn scalar(&self, c: Rational) -> UeaElement {
        let mut t = Terms::default();
        add_into(&mut t, Monomial::one(), c);
        self.wrap(t)
    }

    pub fn one(&self) -> UeaElement {
        self.scalar(Rational::one())
    }

    pub fn generator(&self, g: Generator) -> Result<UeaElement> {
        g.validate(self.rank)?;
        let mut t = Terms::default();
        add_into(&mut t, Monomial(vec![(g, 1)]), Rational::one());
        Ok(self.wrap(t))
    }

    /// A Lie algebra element as a degree-one element.
    pub fn lie(&self, x: &LieElement) -> Result<UeaElement> {
        check_rank(self.rank, x.rank())?;
        let mut t = Terms::default();
        for (g, c) in x.terms() {
            add_into(&mut t, Monomial(vec![(*g, 1)]), c.clone());
        }
        Ok(self.wrap(t))
    }

    /// The Cartan polynomial as an element of `U(h)`.
    pub fn from_hpoly(&self, p: &HPolynomial) -> Result<UeaElement> {
        check_rank(self.rank, p.nvars())?;
        let mut acc = self.zero();
        for (m, c) in p.terms() {
            let word: Vec<(Generator, u32)> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (Generator::h(i + 1), e))
                .collect();
            acc = acc.add(&self.pbw_normalize(&word)?.scale(c))?;
        }
        Ok(acc)
    }

    fn validate_word(&self, word: &[(Generator, u32)]) -> Result<()> {
        word.iter().try_for_each(|(g, _)| g.validate(self.rank))
    }

    /// The normal form of the product `g_1^{a_1} g_2^{a_2} ...`.
    pub fn pbw_normalize(&self, word: &[(Generator, u32)]) -> Result<UeaElement> {
        self.validate_word(word)?;
        let mut one = Terms::default();
        add_into(&mut one, Monomial::one(), Rational::one());
        Ok(self.wrap(self.forward.word_times_terms(word, &one)))
    }

    /// Re-expresses an element normalized in any order in this algebra's order.
    pub fn renormalize(&self, u: &UeaElement) -> Result<UeaElement> {
        check_rank(self.rank, u.rank)?;
        if u.order_key == self.order_key {
            return Ok(u.clone());
        }
        let mut one = Terms::default();
        add_into(&mut one, Monomial::one(), Rational::one());
        let mut acc = Terms::default();
        for (m, c) in u.terms() {
            let t = self.forward.word_times_terms(&m.0, &one);
            crate::straighten::add_scaled(&mut acc, &t, c);
        }
        Ok(self.wrap(acc))
    }

    fn adopt(&self, u: &UeaElement) -> Result<std::borrow::Cow<'_, Terms<Generator>>> {
        check_rank(self.rank, u.rank)?;
        if u.order_key == self.order_key {
            Ok(std::borrow::Cow::Owned(u.terms.clone()))
        } else {
            Ok(std::borrow::Cow::Owned(self.renormalize(u)?.terms))
        }
    }

    pub fn multiply(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
        let (a, b) = (self.adopt(a)?, self.adopt(b)?);
        Ok(self.wrap(self.forward.multiply(&a, &b)))
    }

    pub fn pow(&self, a: &UeaElement, k: u32) -> Result<UeaElement> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    fn left_gen(&self, g: Generator, t: &Terms<Generator>) -> Terms<Generator> {
        self.forward.gen_times_terms(g, t)
    }

    /// `t · g`, through the principal anti-automorphism `x ↦ −x`, which maps
    /// normal forms in this order to normal forms in the reversed order.
    fn right_gen(&self, t: &Terms<Generator>, g: Generator) -> Terms<Generator> {
        let flip = |src: &Terms<Generator>| -> Terms<Generator> {
            let mut out = Terms::default();
            for (m, c) in src {
                let mut f = m.0.clone();
                f.reverse();
                let sign = if m.degree() % 2 == 0 { c.clone() } else { -c.clone() };
                add_into(&mut out, Monomial(f), sign);
            }
            out
        };
        let img = self.backward.gen_times_terms(g, &flip(t));
        let mut out = flip(&img);
        for c in out.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// `x_L f = x f − f x`.
    pub fn adjoint_apply(&self, x: &LieElement, f: &UeaElement) -> Result<UeaElement> {
        check_rank(self.rank, x.rank())?;
        let f = self.adopt(f)?;
        Ok(self.wrap(self.adjoint_terms(x, &f)))
    }

    fn adjoint_terms(&self, x: &LieElement, f: &Terms<Generator>) -> Terms<Generator> {
        let mut acc = Terms::default();
        for (g, c) in x.terms() {
            let left = self.left_gen(*g, f);
            let right = self.right_gen(f, *g);
            crate::straighten::add_scaled(&mut acc, &left, c);
            crate::straighten::add_scaled(&mut acc, &right, &-c.clone());
        }
        acc
    }

    /// `(x_1^{a_1} ... x_r^{a_r})_L f`, the rightmost factor acting first.
    pub fn adjoint_word_apply(&self, word: &[(LieElement, u32)], f: &UeaElement) -> Result<UeaElement> {
        for (x, _) in word {
            check_rank(self.rank, x.rank())?;
        }
        let mut acc = self.adopt(f)?.into_owned();
        for (x, e) in word.iter().rev() {
            for _ in 0..*e {
                acc = self.adjoint_terms(x, &acc);
            }
        }
        Ok(self.wrap(acc))
    }

    /// Whether `u` lies in the left ideal `U(g) g^power`; `g` must be the last
    /// generator of this algebra's order.
    pub fn in_left_ideal(&self, u: &UeaElement, g: Generator, power: u32) -> Result<bool> {
        if self.order.last() != Some(&g) {
            return Err(Error::Unsupported(format!("{g} is not last in the PBW order")));
        }
        let t = self.adopt(u)?;
        Ok(t.keys().all(|m| matches!(m.0.last(), Some(&(k, e)) if k == g && e >= power)))
    }

    /// The polynomial `p` with `u ∈ p(h) + U(g)n₊`, for `u` of weight zero.
    ///
    /// Requires the `e` block to come last in the order.
    pub fn reduce_mod_n_plus(&self, u: &UeaElement) -> Result<HPolynomial> {
        let e_start = self.order.iter().position(Generator::is_raising).unwrap_or(self.order.len());
        if !self.order[e_start..].iter().all(Generator::is_raising) {
            return Err(Error::Unsupported("reduction modulo n+ needs the e block last".into()));
        }
        let t = self.adopt(u)?;
        let mut p = HPolynomial::zero(self.rank);
        for (m, c) in t.iter() {
            let w = m.weight(self.rank);
            if w.iter().any(|&x| x != 0) {
                return Err(Error::NonZeroWeight(format!("{w:?}")));
            }
            if m.0.iter().any(|(g, _)| g.is_raising()) {
                continue;
            }
            let mut e = vec![0u32; self.rank];
            for (g, k) in &m.0 {
                match g {
                    Generator::H(i) => e[*i as usize - 1] += k,
                    _ => {
                        return Err(Error::Invariant(format!("weight-zero monomial {m} left over after reduction")));
                    }
                }
            }
            p.add_term(HMonomial(e), c.clone());
        }
        Ok(p)
    }

    /// Parses the `Display` rendering; any factor order is accepted.
    pub fn parse(&self, s: &str) -> Result<UeaElement> {
        let s = s.trim();
        let mut acc = self.zero();
        if s == "0" {
            return Ok(acc);
        }
        for term in s.split(" + ") {
            let (coef, mono) = match term.split_once(" * ") {
                Some((c, m)) => (parse_rational(c)?, m),
                None => (parse_rational(term)?, ""),
            };
            let mut word = Vec::new();
            for factor in mono.split_whitespace() {
                let (g, e) = match factor.split_once('^') {
                    Some((g, x)) => (g, x.parse::<u32>().map_err(|_| Error::Parse(factor.into()))?),
                    None => (factor, 1),
                };
                word.push((g.parse::<Generator>()?, e));
            }
            acc = acc.add(&self.pbw_normalize(&word)?.scale(&coef))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn e(i: usize, j: usize) -> Generator {
        Generator::e(i, j)
    }
    fn f(i: usize, j: usize) -> Generator {
        Generator::f(i, j)
    }

    #[test]
    fn single_commutator() {
        let u = Uea::new(2).unwrap();
        let x = u.pbw_normalize(&[(e(1, 2), 1), (f(1, 2), 1)]).unwrap();
        assert_eq!(x.to_string(), "1 * f[1,2] e[1,2] + 1 * h[1]");
        let y = u.pbw_normalize(&[(f(1, 2), 1), (e(1, 2), 1)]).unwrap();
        assert_eq!(y.to_string(), "1 * f[1,2] e[1,2]");
    }

    #[test]
    fn e_squared_times_f() {
        let u = Uea::new(2).unwrap();
        let x = u.pbw_normalize(&[(e(1, 2), 2), (f(1, 2), 1)]).unwrap();
        assert_eq!(x, u.parse("1 * f[1,2] e[1,2]^2 + 2 * h[1] e[1,2] + -2 * e[1,2]").unwrap());
    }

    #[test]
    fn parse_roundtrip() {
        let u = Uea::new(3).unwrap();
        let x = u.pbw_normalize(&[(e(1, 3), 2), (f(1, 2), 2), (Generator::h(2), 1)]).unwrap();
        assert_eq!(u.parse(&x.to_string()).unwrap(), x);
        assert_eq!(u.parse("0").unwrap(), u.zero());
        assert_eq!(u.parse("3/2").unwrap(), u.scalar(crate::rational::frac(3, 2)));
    }

    #[test]
    fn right_multiplication_matches_left() {
        let u = Uea::new(2).unwrap();
        let a = u.parse("1 * f[1,3] h[2] e[1,2]^2 + 2 * f[2,3] e[2,3]").unwrap();
        for g in root_system(2).unwrap().generators() {
            let via_right = u.wrap(u.right_gen(&a.terms, g));
            let direct = u.multiply(&a, &u.generator(g).unwrap()).unwrap();
            assert_eq!(via_right, direct, "{g}");
        }
    }

    #[test]
    fn adjoint_examples() {
        let u = Uea::new(2).unwrap();
        let fx = LieElement::f(2, 1, 2).unwrap();
        let r = u.adjoint_apply(&fx, &u.generator(e(1, 2)).unwrap()).unwrap();
        assert_eq!(r.to_string(), "-1 * h[1]");
        assert!(u.adjoint_apply(&fx, &u.one()).unwrap().is_zero());
        assert_eq!(u.adjoint_word_apply(&[], &r).unwrap(), r);
    }

    #[test]
    fn reorders_for_ideal_tests() {
        let std = Uea::new(2).unwrap();
        let alt = Uea::with_last(2, &[e(1, 3)]).unwrap();
        let x = std.pbw_normalize(&[(e(1, 3), 1), (f(1, 2), 1)]).unwrap();
        let y = alt.renormalize(&x).unwrap();
        assert_eq!(y.len(), 2);
        assert!(!alt.in_left_ideal(&y, e(1, 3), 1).unwrap());
        let z = y.sub(&alt.pbw_normalize(&[(e(2, 3), 1)]).unwrap()).unwrap();
        assert!(alt.in_left_ideal(&z, e(1, 3), 1).unwrap());
        assert!(std.in_left_ideal(&x, e(1, 3), 1).is_err());
        assert_eq!(std.renormalize(&y).unwrap(), x);
    }

    #[test]
    fn reduction_mod_n_plus() {
        let u = Uea::new(2).unwrap();
        let x = u.parse("1 * h[1] h[2] + 3 * f[1,2] e[1,2] + 2 * h[1]").unwrap();
        assert_eq!(u.reduce_mod_n_plus(&x).unwrap().to_string(), "1 * h[1] h[2] + 2 * h[1]");
        let bad = u.parse("1 * e[1,2]").unwrap();
        assert!(matches!(u.reduce_mod_n_plus(&bad), Err(Error::NonZeroWeight(_))));
        assert_eq!(x.weight(), Some(vec![0, 0]));
        assert!(u.scalar(int(0)).is_zero());
    }
}
