//! Root data, Chevalley basis and brackets for the simple Lie algebra of type A_l.
//!
//! The basis is realized inside `gl(l+1)` by signed matrix units:
//!
//! ```text
//! e_(i,j) = s(i,j) E_ij,   f_(i,j) = s(i,j) E_ji,   s(i,j) = (-1)^(j-i-1),
//! h_i     = E_ii - E_(i+1,i+1)
//! ```
//!
//! Simple root vectors are plain matrix units, `[e_(i,j), f_(i,j)] = h_(i,j)` and
//! `(e_(i,j) | f_(i,j)) = 1` for every positive root, while composite root vectors
//! satisfy `[e_(i,j), e_(j,k)] = -e_(i,k)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, is_nonneg_int, serde_rational, to_i64, Rational};

/// A Chevalley basis element. Indices are 1-based; the derived order
/// (all `F` lexicographically, then `H`, then `E`) is the global PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    F(u8, u8),
    H(u8),
    E(u8, u8),
}

/// `(-1)^(j-i-1)`
pub(crate) fn root_sign(i: usize, j: usize) -> i64 {
    if (j - i - 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Generator {
    pub fn e(i: usize, j: usize) -> Self {
        Generator::E(i as u8, j as u8)
    }

    pub fn f(i: usize, j: usize) -> Self {
        Generator::F(i as u8, j as u8)
    }

    pub fn h(i: usize) -> Self {
        Generator::H(i as u8)
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        let ok = match *self {
            Generator::E(i, j) | Generator::F(i, j) => 1 <= i && i < j && (j as usize) <= rank + 1,
            Generator::H(i) => 1 <= i && (i as usize) <= rank,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGenerator { generator: self.to_string(), rank })
        }
    }

    pub fn is_raising(&self) -> bool {
        matches!(self, Generator::E(..))
    }

    pub fn is_lowering(&self) -> bool {
        matches!(self, Generator::F(..))
    }

    pub fn is_cartan(&self) -> bool {
        matches!(self, Generator::H(_))
    }

    /// The root-lattice weight in coroot coordinates `(α(h_1), ..., α(h_l))`.
    pub fn weight(&self, rank: usize) -> Vec<i64> {
        match *self {
            Generator::E(i, j) => root_coords(rank, i as usize, j as usize),
            Generator::F(i, j) => root_coords(rank, i as usize, j as usize).into_iter().map(|c| -c).collect(),
            Generator::H(_) => vec![0; rank],
        }
    }

    /// Signed matrix units `(row, col, coefficient)` realizing the generator.
    fn matrix_units(&self) -> SmallVec<[(usize, usize, i64); 2]> {
        match *self {
            Generator::E(i, j) => {
                let (i, j) = (i as usize, j as usize);
                smallvec![(i, j, root_sign(i, j))]
            }
            Generator::F(i, j) => {
                let (i, j) = (i as usize, j as usize);
                smallvec![(j, i, root_sign(i, j))]
            }
            Generator::H(i) => {
                let i = i as usize;
                smallvec![(i, i, 1), (i + 1, i + 1, -1)]
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i, j) => write!(f, "e[{i},{j}]"),
            Generator::F(i, j) => write!(f, "f[{i},{j}]"),
            Generator::H(i) => write!(f, "h[{i}]"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a generator: {s:?}"));
        let s = s.trim();
        let kind = s.chars().next().ok_or_else(bad)?;
        let inner = s[1..].strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let idx: Vec<u8> =
            inner.split(',').map(|p| p.trim().parse::<u8>().map_err(|_| bad())).collect::<Result<_>>()?;
        match (kind, idx.as_slice()) {
            ('e', [i, j]) => Ok(Generator::E(*i, *j)),
            ('f', [i, j]) => Ok(Generator::F(*i, *j)),
            ('h', [i]) => Ok(Generator::H(*i)),
            _ => Err(bad()),
        }
    }
}

/// Coroot evaluations of `ε_i − ε_j`.
pub(crate) fn root_coords(rank: usize, i: usize, j: usize) -> Vec<i64> {
    let eps = |a: usize, k: usize| -> i64 {
        // ε_a(h_k) with h_k = E_kk - E_(k+1)(k+1)
        (a == k) as i64 - (a == k + 1) as i64
    };
    (1..=rank).map(|k| eps(i, k) - eps(j, k)).collect()
}

/// Converts a traceless combination of matrix units back to the Chevalley basis.
fn matrix_to_basis(entries: &BTreeMap<(usize, usize), i64>) -> Vec<(Generator, i64)> {
    let mut out = Vec::new();
    let mut diag: BTreeMap<usize, i64> = BTreeMap::new();
    for (&(a, b), &c) in entries {
        if c == 0 {
            continue;
        }
        if a < b {
            out.push((Generator::e(a, b), c * root_sign(a, b)));
        } else if a > b {
            out.push((Generator::f(b, a), c * root_sign(b, a)));
        } else {
            diag.insert(a, c);
        }
    }
    // Σ d_a E_aa = Σ_i x_i h_i with x_i = d_1 + ... + d_i
    if let Some(&max) = diag.keys().next_back() {
        let mut running = 0;
        for i in 1..max {
            running += diag.get(&i).copied().unwrap_or(0);
            if running != 0 {
                out.push((Generator::h(i), running));
            }
        }
        debug_assert_eq!(running + diag[&max], 0, "bracket left the traceless part");
    }
    out.sort_by_key(|(g, _)| *g);
    out
}

/// Structure constants `[a, b] = Σ c g` via the matrix realization.
pub fn generator_bracket(a: Generator, b: Generator) -> Vec<(Generator, i64)> {
    let mut entries: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (r1, c1, x) in a.matrix_units() {
        for (r2, c2, y) in b.matrix_units() {
            // [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb
            if c1 == r2 {
                *entries.entry((r1, c2)).or_default() += x * y;
            }
            if c2 == r1 {
                *entries.entry((r2, c1)).or_default() -= x * y;
            }
        }
    }
    matrix_to_basis(&entries)
}

/// Trace form of the defining representation, `(θ|θ) = 2`.
pub fn generator_form(a: Generator, b: Generator) -> i64 {
    let mut acc = 0;
    for (r1, c1, x) in a.matrix_units() {
        for (r2, c2, y) in b.matrix_units() {
            if c1 == r2 && c2 == r1 {
                acc += x * y;
            }
        }
    }
    acc
}

/// A weight in coroot coordinates `(λ(h_1), ..., λ(h_l))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "serde_rational::vec")] pub Vec<Rational>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    /// `ω_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i - 1] = Rational::one();
        w
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.0.iter().all(is_nonneg_int)
    }

    /// Integer coordinates when the weight is dominant integral.
    pub fn dominant_integral(&self) -> Option<Vec<i64>> {
        if !self.is_dominant_integral() {
            return None;
        }
        self.0.iter().map(to_i64).collect()
    }

    pub(crate) fn require_dominant(&self, rank: usize) -> Result<Vec<i64>> {
        if self.rank() != rank {
            return Err(Error::WeightLength { got: self.rank(), expected: rank });
        }
        self.dominant_integral().ok_or_else(|| Error::NotDominantIntegral(self.to_string()))
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Root data of A_l. Roots `ε_i − ε_j` are stored as index pairs `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub rank: usize,
    pub positive_roots: Vec<(usize, usize)>,
    pub simple_roots: Vec<(usize, usize)>,
    pub highest_root: (usize, usize),
    pub fundamental_weights: Vec<Weight>,
    pub dual_coxeter: usize,
}

pub fn root_system(rank: usize) -> Result<RootSystem> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let n = rank + 1;
    let positive_roots = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    Ok(RootSystem {
        rank,
        positive_roots,
        simple_roots: (1..=rank).map(|i| (i, i + 1)).collect(),
        highest_root: (1, n),
        fundamental_weights: (1..=rank).map(|i| Weight::fundamental(rank, i)).collect(),
        dual_coxeter: n,
    })
}

impl RootSystem {
    pub fn dim(&self) -> usize {
        self.rank * (self.rank + 2)
    }

    /// All basis generators in the global PBW order.
    pub fn generators(&self) -> Vec<Generator> {
        let mut gens: Vec<Generator> = self.positive_roots.iter().map(|&(i, j)| Generator::f(i, j)).collect();
        gens.extend((1..=self.rank).map(Generator::h));
        gens.extend(self.positive_roots.iter().map(|&(i, j)| Generator::e(i, j)));
        gens
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (1..=self.rank).map(|i| root_coords(self.rank, i, i + 1)).collect()
    }

    /// Expansion `θ = Σ c_i α_i` of a positive root in simple roots.
    pub fn simple_root_expansion(&self, root: (usize, usize)) -> Vec<i64> {
        (1..=self.rank).map(|k| (root.0 <= k && k < root.1) as i64).collect()
    }
}

/// A linear combination of Chevalley generators with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    rank: usize,
    terms: BTreeMap<Generator, Rational>,
}

impl LieElement {
    pub fn zero(rank: usize) -> Self {
        LieElement { rank, terms: BTreeMap::new() }
    }

    pub fn generator(rank: usize, g: Generator) -> Result<Self> {
        g.validate(rank)?;
        let mut terms = BTreeMap::new();
        terms.insert(g, Rational::one());
        Ok(LieElement { rank, terms })
    }

    pub fn e(rank: usize, i: usize, j: usize) -> Result<Self> {
        Self::generator(rank, Generator::e(i, j))
    }

    pub fn f(rank: usize, i: usize, j: usize) -> Result<Self> {
        Self::generator(rank, Generator::f(i, j))
    }

    pub fn h(rank: usize, i: usize) -> Result<Self> {
        Self::generator(rank, Generator::h(i))
    }

    /// The coroot `h_(i,j) = h_i + ... + h_(j-1)`.
    pub fn coroot(rank: usize, i: usize, j: usize) -> Result<Self> {
        Generator::e(i, j).validate(rank)?;
        Self::from_terms(rank, (i..j).map(|k| (Generator::h(k), Rational::one())))
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Generator, Rational)>) -> Result<Self> {
        let mut out = Self::zero(rank);
        for (g, c) in terms {
            g.validate(rank)?;
            out.add_term(g, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, g: Generator, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: Generator) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.rank);
        for (g, x) in &self.terms {
            out.add_term(*g, x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&int(-1)))
    }

    /// Weight of a single-generator-homogeneous element, if homogeneous.
    pub fn weight(&self) -> Option<Vec<i64>> {
        let mut weights = self.terms.keys().map(|g| g.weight(self.rank));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("{} * {g}", fmt_rational(c))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub(crate) fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement> {
    check_rank(x.rank, y.rank)?;
    let mut out = LieElement::zero(x.rank);
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            let c = ca * cb;
            for (g, k) in generator_bracket(*a, *b) {
                out.add_term(g, &c * int(k));
            }
        }
    }
    Ok(out)
}

pub fn invariant_form(x: &LieElement, y: &LieElement) -> Result<Rational> {
    check_rank(x.rank, y.rank)?;
    let mut acc = Rational::zero();
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            let k = generator_form(*a, *b);
            if k != 0 {
                acc += ca * cb * int(k);
            }
        }
    }
    Ok(acc)
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α^∨) / (ρ, α^∨)`.
pub fn weyl_dim(rank: usize, lambda: &Weight) -> Result<u64> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let lam = lambda.require_dominant(rank)?;
    weyl_dim_int(&lam)
}

pub(crate) fn weyl_dim_int(lam: &[i64]) -> Result<u64> {
    let n = lam.len() + 1;
    let mut num = num_bigint::BigInt::one();
    let mut den = num_bigint::BigInt::one();
    for i in 1..=n {
        for j in i + 1..=n {
            // (λ+ρ, (ε_i − ε_j)^∨) = Σ_{k=i}^{j-1} (λ_k + 1)
            let s: i64 = (i..j).map(|k| lam[k - 1] + 1).sum();
            num *= s;
            den *= (j - i) as i64;
        }
    }
    let q = num / den;
    u64::try_from(&q).map_err(|_| Error::Overflow("weyl_dim"))
}
