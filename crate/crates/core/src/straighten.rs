//! Normal ordering in enveloping algebras presented by a totally ordered basis.
//!
//! Elements are sparse sums of ordered monomials `k_1^{a_1} ... k_r^{a_r}`.
//! Left multiplication by a basis element `y` uses
//!
//! ```text
//! y z^a R = Σ_{j=0}^{a} C(a, j) z^{a-j} · (ad(-z))^j(y) · R
//! ```
//!
//! where `(ad(-z))^j(y) = [...[[y, z], z]..., z]` may carry a central scalar. The
//! same rule serves the vacuum module: keys that annihilate the vacuum are moved
//! all the way to the right, where they vanish.
//!
//! Products `y · m` for monomials `m` are memoized; the table is filled at most
//! once per key and read concurrently.

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use parking_lot::RwLock;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::rational::{int, Rational};

/// An ordered monomial: factors with exponents, sorted by the algebra's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial<K>(pub(crate) Vec<(K, u32)>);

impl<K: Copy> Monomial<K> {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn factors(&self) -> &[(K, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent_of(&self, k: K) -> u32
    where
        K: PartialEq,
    {
        self.0.iter().find(|(g, _)| *g == k).map_or(0, |(_, e)| *e)
    }

    /// The factors expanded into a word, one entry per unit exponent.
    pub fn word(&self) -> Vec<K> {
        self.0.iter().flat_map(|&(k, e)| std::iter::repeat_n(k, e as usize)).collect()
    }
}

pub(crate) type Terms<K> = FxHashMap<Monomial<K>, Rational>;

pub(crate) fn add_into<K: Eq + Hash>(out: &mut Terms<K>, m: Monomial<K>, c: Rational) {
    if c.is_zero() {
        return;
    }
    match out.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

pub(crate) fn add_scaled<K: Eq + Hash + Clone>(out: &mut Terms<K>, src: &Terms<K>, c: &Rational) {
    if c.is_zero() {
        return;
    }
    let unit = c.is_one();
    for (m, x) in src {
        add_into(out, m.clone(), if unit { x.clone() } else { x * c });
    }
}

pub(crate) fn merge<K: Eq + Hash>(mut a: Terms<K>, mut b: Terms<K>) -> Terms<K> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    for (m, c) in b {
        add_into(&mut a, m, c);
    }
    a
}

pub(crate) fn scaled<K: Eq + Hash + Clone>(src: &Terms<K>, c: &Rational) -> Terms<K> {
    let mut out = Terms::default();
    add_scaled(&mut out, src, c);
    out
}

/// `[a, b] = Σ c_i k_i + central`.
pub(crate) struct Bracket<K> {
    pub terms: SmallVec<[(K, i64); 4]>,
    pub central: Rational,
}

pub(crate) trait Rules: Send + Sync {
    type Key: Copy + Eq + Hash + Ord + Debug + Send + Sync;

    /// `a` sorts strictly before `b` in normal order.
    fn precedes(&self, a: Self::Key, b: Self::Key) -> bool;

    fn bracket(&self, a: Self::Key, b: Self::Key) -> Bracket<Self::Key>;

    fn kills_vacuum(&self, _a: Self::Key) -> bool {
        false
    }
}

const PAR_THRESHOLD: usize = 256;

/// `(g, m) ↦ g·m` in normal form.
type Memo<K> = FxHashMap<(K, Monomial<K>), Arc<Terms<K>>>;

pub(crate) struct Straightener<R: Rules> {
    pub(crate) rules: R,
    memo: RwLock<Memo<R::Key>>,
}

impl<R: Rules> Straightener<R> {
    pub fn new(rules: R) -> Self {
        Straightener { rules, memo: RwLock::new(FxHashMap::default()) }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }

    /// Adds `c · (y · m)` to `out`.
    pub fn gen_times_mono_into(&self, y: R::Key, m: &[(R::Key, u32)], c: &Rational, out: &mut Terms<R::Key>) {
        let kills = self.rules.kills_vacuum(y);
        let Some(&(z, _)) = m.first() else {
            if !kills {
                add_into(out, Monomial(vec![(y, 1)]), c.clone());
            }
            return;
        };
        if !kills {
            if y == z {
                let mut v = m.to_vec();
                v[0].1 += 1;
                add_into(out, Monomial(v), c.clone());
                return;
            }
            if self.rules.precedes(y, z) {
                let mut v = Vec::with_capacity(m.len() + 1);
                v.push((y, 1));
                v.extend_from_slice(m);
                add_into(out, Monomial(v), c.clone());
                return;
            }
        }
        let key = (y, Monomial(m.to_vec()));
        let cached = self.memo.read().get(&key).cloned();
        let res = match cached {
            Some(r) => r,
            None => {
                let r = Arc::new(self.commute_through(y, m));
                self.memo.write().entry(key).or_insert(r).clone()
            }
        };
        add_scaled(out, &res, c);
    }

    fn commute_through(&self, y: R::Key, m: &[(R::Key, u32)]) -> Terms<R::Key> {
        let (z, a) = m[0];
        let rest = &m[1..];
        let mut result = Terms::default();
        let mut lin: Vec<(R::Key, Rational)> = vec![(y, Rational::one())];
        let mut scalar = Rational::zero();
        let mut binom = BigInt::one();
        for j in 0..=a {
            if lin.is_empty() && scalar.is_zero() {
                break;
            }
            let mut inner = Terms::default();
            for (k, c) in &lin {
                self.gen_times_mono_into(*k, rest, c, &mut inner);
            }
            if !scalar.is_zero() {
                add_into(&mut inner, Monomial(rest.to_vec()), scalar.clone());
            }
            for _ in 0..(a - j) {
                inner = self.gen_times_terms(z, &inner);
            }
            add_scaled(&mut result, &inner, &Rational::from_integer(binom.clone()));
            binom = binom * BigInt::from(a - j) / BigInt::from(j + 1);

            let mut next: FxHashMap<R::Key, Rational> = FxHashMap::default();
            let mut next_scalar = Rational::zero();
            for (k, c) in &lin {
                let b = self.rules.bracket(*k, z);
                for (g, x) in b.terms {
                    *next.entry(g).or_insert_with(Rational::zero) += c * int(x);
                }
                if !b.central.is_zero() {
                    next_scalar += c * &b.central;
                }
            }
            lin = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            lin.sort_by_key(|(k, _)| *k);
            scalar = next_scalar;
        }
        result
    }

    pub fn gen_times_terms(&self, y: R::Key, t: &Terms<R::Key>) -> Terms<R::Key> {
        if t.len() >= PAR_THRESHOLD {
            t.par_iter()
                .fold(Terms::default, |mut acc, (m, c)| {
                    self.gen_times_mono_into(y, &m.0, c, &mut acc);
                    acc
                })
                .reduce(Terms::default, merge)
        } else {
            let mut out = Terms::default();
            for (m, c) in t {
                self.gen_times_mono_into(y, &m.0, c, &mut out);
            }
            out
        }
    }

    /// Left-multiplies `t` by the (not necessarily ordered) word `factors`.
    pub fn word_times_terms(&self, factors: &[(R::Key, u32)], t: &Terms<R::Key>) -> Terms<R::Key> {
        let mut acc = t.clone();
        for &(g, e) in factors.iter().rev() {
            for _ in 0..e {
                acc = self.gen_times_terms(g, &acc);
            }
        }
        acc
    }

    pub fn multiply(&self, a: &Terms<R::Key>, b: &Terms<R::Key>) -> Terms<R::Key> {
        let work = |(m, c): (&Monomial<R::Key>, &Rational)| scaled(&self.word_times_terms(&m.0, b), c);
        if a.len() * b.len() >= PAR_THRESHOLD {
            a.par_iter().map(work).reduce(Terms::default, merge)
        } else {
            a.iter().map(work).fold(Terms::default(), merge)
        }
    }
}
