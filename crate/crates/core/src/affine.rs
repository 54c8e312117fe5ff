//! The vacuum module `N(k, 0)` of `A_l^(1)` spanned by negative-mode monomials.
//!
//! Modes obey `[x(a), y(b)] = [x, y](a+b) + a δ_{a+b,0} (x|y) k` and
//! `x(m) 𝟏 = 0` for `m ≥ 0`. Vectors are kept as sums of ordered monomials
//! `x_1(−n_1)^{a_1} ... x_r(−n_r)^{a_r} 𝟏`, most negative mode first.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use parking_lot::Mutex;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::lie::{check_rank, generator_bracket, generator_form, root_system, Generator, LieElement};
use crate::linalg::kernel;
use crate::rational::{fmt_rational, int, parse_rational, Rational};
use crate::straighten::{add_into, add_scaled, Bracket, Monomial, Rules, Straightener, Terms};
use crate::uea::{Uea, UeaElement};

/// The mode `x(n)` of a Chevalley generator. Ordered by mode, then generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeGenerator {
    pub mode: i32,
    pub generator: Generator,
}

impl ModeGenerator {
    pub fn new(generator: Generator, mode: i32) -> Self {
        ModeGenerator { mode, generator }
    }
}

impl fmt::Display for ModeGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.generator, self.mode)
    }
}

pub type ModeMonomial = Monomial<ModeGenerator>;

impl ModeMonomial {
    /// Conformal weight `Σ a_i n_i`.
    pub fn conformal_degree(&self) -> u32 {
        self.0.iter().map(|(g, e)| (-g.mode) as u32 * e).sum()
    }

    pub fn weight(&self, rank: usize) -> Vec<i64> {
        let mut w = vec![0; rank];
        for (g, e) in &self.0 {
            for (x, y) in w.iter_mut().zip(g.generator.weight(rank)) {
                *x += y * *e as i64;
            }
        }
        w
    }
}

impl fmt::Display for ModeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

struct AffineRules {
    level: Rational,
}

impl Rules for AffineRules {
    type Key = ModeGenerator;

    fn precedes(&self, a: ModeGenerator, b: ModeGenerator) -> bool {
        a < b
    }

    fn bracket(&self, a: ModeGenerator, b: ModeGenerator) -> Bracket<ModeGenerator> {
        let mode = a.mode + b.mode;
        let terms: SmallVec<[(ModeGenerator, i64); 4]> = generator_bracket(a.generator, b.generator)
            .into_iter()
            .map(|(g, c)| (ModeGenerator::new(g, mode), c))
            .collect();
        let central = if mode == 0 && a.mode != 0 {
            let form = generator_form(a.generator, b.generator);
            if form == 0 {
                Rational::zero()
            } else {
                int(a.mode as i64 * form) * &self.level
            }
        } else {
            Rational::zero()
        };
        Bracket { terms, central }
    }

    fn kills_vacuum(&self, a: ModeGenerator) -> bool {
        a.mode >= 0
    }
}

/// A vector of `N(k, 0)`.
#[derive(Clone, Debug)]
pub struct VermaVector {
    rank: usize,
    level: Rational,
    pub(crate) terms: Terms<ModeGenerator>,
}

impl PartialEq for VermaVector {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.level == other.level && self.terms == other.terms
    }
}

impl Eq for VermaVector {}

impl VermaVector {
    pub fn zero(rank: usize, level: Rational) -> Self {
        VermaVector { rank, level, terms: Terms::default() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> &Rational {
        &self.level
    }

    /// The same PBW expansion read in the vacuum module of another level.
    pub fn at_level(&self, level: Rational) -> Self {
        VermaVector { rank: self.rank, level, terms: self.terms.clone() }
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

    /// Terms in monomial order.
    pub fn terms(&self) -> Vec<(&ModeMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coefficient(&self, m: &ModeMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn same_module(&self, other: &Self) -> Result<()> {
        check_rank(self.rank, other.rank)?;
        if self.level != other.level {
            return Err(Error::Unsupported(format!(
                "vectors at levels {} and {}",
                fmt_rational(&self.level),
                fmt_rational(&other.level)
            )));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        VermaVector { terms: crate::straighten::scaled(&self.terms, c), ..self.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_module(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m.clone(), c.clone());
        }
        Ok(VermaVector { terms, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Whether `self = c · other` for some nonzero `c`; returns `c`.
    pub fn proportional_to(&self, other: &Self) -> Option<Rational> {
        if self.rank != other.rank || self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        let ratio = c / other.terms.get(m)?;
        self.terms.iter().all(|(m, c)| other.terms.get(m).is_some_and(|d| &(d * &ratio) == c)).then_some(ratio)
    }

    /// The conformal degree, if every term has the same one.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(ModeMonomial::conformal_degree);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    /// The `h`-weight, if every term has the same one.
    pub fn weight(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|m| m.weight(self.rank));
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    /// Splits into components indexed by (conformal degree, weight).
    pub fn components(&self) -> BTreeMap<(u32, Vec<i64>), VermaVector> {
        let mut out: BTreeMap<(u32, Vec<i64>), VermaVector> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = (m.conformal_degree(), m.weight(self.rank));
            let slot = out.entry(key).or_insert_with(|| VermaVector::zero(self.rank, self.level.clone()));
            add_into(&mut slot.terms, m.clone(), c.clone());
        }
        out
    }

    /// Line-oriented serialization: a header, then one monomial per line as
    /// `coefficient generator mode exponent ...`.
    pub fn to_lines(&self) -> String {
        let mut s = format!("# rank {}\n# level {}\n", self.rank, fmt_rational(&self.level));
        for (m, c) in self.terms() {
            s.push_str(&fmt_rational(c));
            for (g, e) in m.factors() {
                s.push_str(&format!(" {} {} {}", g.generator, g.mode, e));
            }
            s.push('\n');
        }
        s
    }

    pub fn from_lines(text: &str) -> Result<Self> {
        let mut rank = None;
        let mut level = None;
        let mut terms = Terms::default();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(h) = line.strip_prefix('#') {
                let mut it = h.split_whitespace();
                match (it.next(), it.next()) {
                    (Some("rank"), Some(r)) => rank = Some(r.parse::<usize>().map_err(|_| Error::Parse(line.into()))?),
                    (Some("level"), Some(k)) => level = Some(parse_rational(k)?),
                    _ => {}
                }
                continue;
            }
            let rank = rank.ok_or_else(|| Error::Parse("missing rank header".into()))?;
            let mut it = line.split_whitespace();
            let c = parse_rational(it.next().expect("nonempty line"))?;
            let rest: Vec<&str> = it.collect();
            if !rest.len().is_multiple_of(3) {
                return Err(Error::Parse(format!("malformed monomial line {line:?}")));
            }
            let mut factors: Vec<(ModeGenerator, u32)> = Vec::new();
            for chunk in rest.chunks(3) {
                let g: Generator = chunk[0].parse()?;
                g.validate(rank)?;
                let mode: i32 = chunk[1].parse().map_err(|_| Error::Parse(line.into()))?;
                let e: u32 = chunk[2].parse().map_err(|_| Error::Parse(line.into()))?;
                if mode >= 0 || e == 0 {
                    return Err(Error::Parse(format!("not a vacuum-module monomial: {line:?}")));
                }
                factors.push((ModeGenerator::new(g, mode), e));
            }
            if factors.windows(2).any(|w| w[0].0 >= w[1].0) {
                return Err(Error::Parse(format!("factors out of order: {line:?}")));
            }
            add_into(&mut terms, Monomial(factors), c);
        }
        Ok(VermaVector {
            rank: rank.ok_or_else(|| Error::Parse("missing rank header".into()))?,
            level: level.ok_or_else(|| Error::Parse("missing level header".into()))?,
            terms,
        })
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms().into_iter().map(|(m, c)| format!("{} * {}", fmt_rational(c), m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `N(k, 0)` for a fixed rank and level, with its straightening cache.
pub struct VacuumModule {
    rank: usize,
    level: Rational,
    engine: Straightener<AffineRules>,
}

type ModuleRegistry = Mutex<FxHashMap<(usize, Rational), Arc<VacuumModule>>>;

impl VacuumModule {
    pub fn new(rank: usize, level: Rational) -> Result<Self> {
        root_system(rank)?;
        Ok(VacuumModule { rank, engine: Straightener::new(AffineRules { level: level.clone() }), level })
    }

    /// A process-wide instance, so repeated computations share one cache.
    pub fn shared(rank: usize, level: Rational) -> Result<Arc<Self>> {
        static REGISTRY: OnceLock<ModuleRegistry> = OnceLock::new();
        let registry = REGISTRY.get_or_init(Default::default);
        let mut map = registry.lock();
        if let Some(m) = map.get(&(rank, level.clone())) {
            return Ok(m.clone());
        }
        let m = Arc::new(Self::new(rank, level.clone())?);
        map.insert((rank, level), m.clone());
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> &Rational {
        &self.level
    }

    pub fn vacuum(&self) -> VermaVector {
        let mut terms = Terms::default();
        add_into(&mut terms, Monomial::one(), Rational::one());
        VermaVector { rank: self.rank, level: self.level.clone(), terms }
    }

    fn check(&self, v: &VermaVector) -> Result<()> {
        check_rank(self.rank, v.rank)?;
        if v.level != self.level {
            return Err(Error::Unsupported(format!(
                "vector at level {} acted on at level {}",
                fmt_rational(&v.level),
                fmt_rational(&self.level)
            )));
        }
        Ok(())
    }

    fn wrap(&self, terms: Terms<ModeGenerator>) -> VermaVector {
        VermaVector { rank: self.rank, level: self.level.clone(), terms }
    }

    /// `x(m) v`.
    pub fn apply_mode(&self, x: &LieElement, m: i32, v: &VermaVector) -> Result<VermaVector> {
        check_rank(self.rank, x.rank())?;
        self.check(v)?;
        let mut acc = Terms::default();
        for (g, c) in x.terms() {
            let t = self.engine.gen_times_terms(ModeGenerator::new(*g, m), &v.terms);
            add_scaled(&mut acc, &t, c);
        }
        Ok(self.wrap(acc))
    }

    /// `g(m) v` for a single basis element.
    pub fn apply_generator(&self, g: Generator, m: i32, v: &VermaVector) -> Result<VermaVector> {
        g.validate(self.rank)?;
        self.check(v)?;
        Ok(self.wrap(self.engine.gen_times_terms(ModeGenerator::new(g, m), &v.terms)))
    }

    /// `x_1(m_1)^{a_1} ... x_r(m_r)^{a_r} v`, the rightmost factor acting first.
    pub fn apply_word(&self, word: &[(Generator, i32, u32)], v: &VermaVector) -> Result<VermaVector> {
        self.check(v)?;
        for (g, _, _) in word {
            g.validate(self.rank)?;
        }
        let w: Vec<(ModeGenerator, u32)> = word.iter().map(|&(g, m, e)| (ModeGenerator::new(g, m), e)).collect();
        Ok(self.wrap(self.engine.word_times_terms(&w, &v.terms)))
    }

    /// `x_1(m_1)^{a_1} ... 𝟏`.
    pub fn monomial(&self, word: &[(Generator, i32, u32)]) -> Result<VermaVector> {
        self.apply_word(word, &self.vacuum())
    }

    /// The operators `e_{α_1}(0), ..., e_{α_l}(0), f_θ(1)` generating the
    /// affine raising subalgebra.
    pub fn raising_operators(&self) -> Vec<(Generator, i32)> {
        let mut ops: Vec<(Generator, i32)> = (1..=self.rank).map(|i| (Generator::e(i, i + 1), 0)).collect();
        ops.push((Generator::f(1, self.rank + 1), 1));
        ops
    }

    /// Applies each raising operator to `v`.
    pub fn is_singular(&self, v: &VermaVector) -> Result<SingularityCertificate> {
        self.check(v)?;
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let checks = self
            .raising_operators()
            .into_iter()
            .map(|(g, m)| {
                let result = self.apply_generator(g, m, v)?;
                Ok(Annihilation { operator: ModeGenerator::new(g, m).to_string(), result })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SingularityCertificate { singular: checks.iter().all(|c| c.result.is_zero()), checks })
    }
}

/// One raising operator applied to a candidate vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilation {
    pub operator: String,
    pub result: VermaVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityCertificate {
    pub singular: bool,
    pub checks: Vec<Annihilation>,
}

/// Singularity test in the module the vector lives in.
pub fn is_singular(v: &VermaVector) -> Result<SingularityCertificate> {
    VacuumModule::shared(v.rank, v.level.clone())?.is_singular(v)
}

/// `(e_{ε1−ε_{l+1}}(−1) e_{ε2−ε_l}(−1) − e_{ε2−ε_{l+1}}(−1) e_{ε1−ε_l}(−1))^n 𝟏`
/// at level `n − 2`.
pub fn vlm_vector(l: usize, n: u32) -> Result<VermaVector> {
    if l < 3 {
        return Err(Error::Unsupported(format!("v_(l,n) needs l >= 3, got l = {l}")));
    }
    if n == 0 {
        return Err(Error::Unsupported("n must be at least 1".into()));
    }
    let module = VacuumModule::shared(l, int(n as i64 - 2))?;
    let mut v = module.vacuum();
    for _ in 0..n {
        let a = module.apply_word(&[(Generator::e(1, l + 1), -1, 1), (Generator::e(2, l), -1, 1)], &v)?;
        let b = module.apply_word(&[(Generator::e(2, l + 1), -1, 1), (Generator::e(1, l), -1, 1)], &v)?;
        v = a.sub(&b)?;
    }
    Ok(v)
}

/// `Σ_{t=0}^{2n} (1/t!) e_{ε1−ε3}(−1)^t e_{ε2−ε3}(−1)^{2n−t} f_{ε1−ε2}(0)^t
/// e_{ε1−ε2}(−1)^n 𝟏` in `N(n − 2, 0)` for `sl_3`.
pub fn v2n_vector(n: u32) -> Result<VermaVector> {
    if n == 0 {
        return Err(Error::Unsupported("n must be at least 1".into()));
    }
    let module = VacuumModule::shared(2, int(n as i64 - 2))?;
    let (e12, e13, e23, f12) = (Generator::e(1, 2), Generator::e(1, 3), Generator::e(2, 3), Generator::f(1, 2));
    let mut inner = module.monomial(&[(e12, -1, n)])?;
    let mut acc = VermaVector::zero(2, module.level.clone());
    let mut t_factorial = Rational::one();
    for t in 0..=2 * n {
        if t > 0 {
            inner = module.apply_generator(f12, 0, &inner)?;
            t_factorial *= int(t as i64);
        }
        if inner.is_zero() {
            break;
        }
        let term = module.apply_word(&[(e13, -1, t), (e23, -1, 2 * n - t)], &inner)?;
        acc = acc.add(&term.scale(&t_factorial.recip()))?;
    }
    Ok(acc)
}

/// The diagram involution of `sl_3` on a basis element: a signed basis element.
pub fn psi_generator(g: Generator) -> (Generator, i64) {
    match g {
        Generator::E(1, 2) => (Generator::e(2, 3), 1),
        Generator::E(2, 3) => (Generator::e(1, 2), 1),
        Generator::E(1, 3) => (Generator::e(1, 3), -1),
        Generator::F(1, 2) => (Generator::f(2, 3), 1),
        Generator::F(2, 3) => (Generator::f(1, 2), 1),
        Generator::F(1, 3) => (Generator::f(1, 3), -1),
        Generator::H(1) => (Generator::h(2), 1),
        Generator::H(2) => (Generator::h(1), 1),
        other => (other, 1),
    }
}

/// Ψ on a Lie algebra element of `sl_3`.
pub fn psi_lie(x: &LieElement) -> Result<LieElement> {
    if x.rank() != 2 {
        return Err(Error::Unsupported("the diagram involution is implemented for rank 2".into()));
    }
    LieElement::from_terms(
        2,
        x.terms().map(|(g, c)| {
            let (h, s) = psi_generator(*g);
            (h, c * int(s))
        }),
    )
}

/// Ψ on `N(k, 0)` for `sl_3`: modes are kept, generators mapped by
/// [`psi_generator`].
pub fn psi(v: &VermaVector) -> Result<VermaVector> {
    if v.rank != 2 {
        return Err(Error::Unsupported("the diagram involution is implemented for rank 2".into()));
    }
    let module = VacuumModule::shared(2, v.level.clone())?;
    let mut acc = VermaVector::zero(2, v.level.clone());
    for (m, c) in v.terms() {
        let mut sign = 1i64;
        let word: Vec<(Generator, i32, u32)> = m
            .factors()
            .iter()
            .map(|(g, e)| {
                let (h, s) = psi_generator(g.generator);
                if s < 0 && e % 2 == 1 {
                    sign = -sign;
                }
                (h, g.mode, *e)
            })
            .collect();
        let image = module.monomial(&word)?;
        acc = acc.add(&image.scale(&(c * int(sign))))?;
    }
    Ok(acc)
}

/// Coefficient of `q^d` in `∏_{n≥1} (1 − q^n)^{−l(l+2)}`, for `d = 0..=max_degree`.
pub fn graded_dimensions(l: usize, max_degree: usize) -> Result<Vec<BigUint>> {
    let dim = root_system(l)?.dim();
    let mut c = vec![BigUint::zero(); max_degree + 1];
    c[0] = BigUint::one();
    for n in 1..=max_degree {
        for _ in 0..dim {
            for i in n..=max_degree {
                let prev = c[i - n].clone();
                c[i] += prev;
            }
        }
    }
    Ok(c)
}

pub fn graded_dimension(l: usize, d: usize) -> Result<BigUint> {
    Ok(graded_dimensions(l, d)?.pop().expect("nonempty"))
}

/// All monomials of conformal degree `d` in `N(k, 0)` for rank `l`, sorted.
pub fn mode_monomials(l: usize, d: u32) -> Result<Vec<ModeMonomial>> {
    let gens = root_system(l)?.generators();
    let mut keys: Vec<ModeGenerator> = Vec::new();
    for m in (1..=d as i32).rev() {
        for g in &gens {
            keys.push(ModeGenerator::new(*g, -m));
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        keys: &[ModeGenerator],
        i: usize,
        left: u32,
        cur: &mut Vec<(ModeGenerator, u32)>,
        out: &mut Vec<ModeMonomial>,
    ) {
        if left == 0 {
            out.push(Monomial(cur.clone()));
            return;
        }
        if i == keys.len() {
            return;
        }
        let depth = (-keys[i].mode) as u32;
        rec(keys, i + 1, left, cur, out);
        let mut e = 1;
        while e * depth <= left {
            cur.push((keys[i], e));
            rec(keys, i + 1, left - e * depth, cur, out);
            cur.pop();
            e += 1;
        }
    }
    rec(&keys, 0, d, &mut current, &mut out);
    out.sort();
    Ok(out)
}

/// Singular vectors of one conformal degree, weight by weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularSpace {
    pub rank: usize,
    pub level: Rational,
    pub degree: u32,
    /// Number of monomials in the graded piece.
    pub graded_dimension: usize,
    /// `(weight, dimension)` for every weight carrying singular vectors.
    pub by_weight: Vec<(Vec<i64>, usize)>,
    pub basis: Vec<VermaVector>,
}

impl SingularSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// The joint kernel of `e_{α_i}(0)` and `f_θ(1)` on the degree-`d` piece.
pub fn singular_space(l: usize, level: Rational, d: u32, cap: usize) -> Result<SingularSpace> {
    let total = graded_dimension(l, d as usize)?;
    let total_usize = usize::try_from(&total).unwrap_or(usize::MAX);
    if total_usize > cap {
        return Err(Error::CapExceeded { cap, needed: total_usize });
    }
    let module = VacuumModule::shared(l, level.clone())?;
    let monomials = mode_monomials(l, d)?;
    debug_assert_eq!(monomials.len(), total_usize);
    let mut blocks: BTreeMap<Vec<i64>, Vec<ModeMonomial>> = BTreeMap::new();
    for m in monomials {
        blocks.entry(m.weight(l)).or_default().push(m);
    }
    let ops = module.raising_operators();
    let blocks: Vec<(Vec<i64>, Vec<ModeMonomial>)> = blocks.into_iter().collect();
    let solved: Vec<(Vec<i64>, Vec<VermaVector>)> = blocks
        .par_iter()
        .map(|(w, cols)| {
            let mut rows: BTreeMap<(usize, ModeMonomial), Vec<Rational>> = BTreeMap::new();
            for (j, m) in cols.iter().enumerate() {
                let mut v = VermaVector::zero(l, level.clone());
                add_into(&mut v.terms, m.clone(), Rational::one());
                for (k, &(g, mode)) in ops.iter().enumerate() {
                    let image = module.apply_generator(g, mode, &v)?;
                    for (im, c) in image.terms {
                        let row = rows.entry((k, im)).or_insert_with(|| vec![Rational::zero(); cols.len()]);
                        row[j] = c;
                    }
                }
            }
            let matrix: Vec<Vec<Rational>> = rows.into_values().collect();
            let vectors = kernel(&matrix, cols.len())
                .into_iter()
                .map(|x| {
                    let mut v = VermaVector::zero(l, level.clone());
                    for (m, c) in cols.iter().zip(x) {
                        add_into(&mut v.terms, m.clone(), c);
                    }
                    v
                })
                .collect();
            Ok((w.clone(), vectors))
        })
        .collect::<Result<_>>()?;
    let mut by_weight = Vec::new();
    let mut basis = Vec::new();
    for (w, vs) in solved {
        if !vs.is_empty() {
            by_weight.push((w, vs.len()));
            basis.extend(vs);
        }
    }
    Ok(SingularSpace { rank: l, level, degree: d, graded_dimension: total_usize, by_weight, basis })
}

/// Image in `U(g)` under `A(N(k,0)) ≅ U(g)`: the monomial
/// `x_1(−n_1) ... x_r(−n_r) 𝟏` goes to `(−1)^{Σ(n_i − 1)} x_r ... x_1`.
pub fn zhu_image(v: &VermaVector, uea: &Uea) -> Result<UeaElement> {
    check_rank(uea.rank(), v.rank)?;
    if v.degree().is_none() && !v.is_zero() || v.weight().is_none() && !v.is_zero() {
        return Err(Error::NotHomogeneous);
    }
    let mut acc = uea.zero();
    for (m, c) in v.terms() {
        let mut sign_exp = 0u32;
        let mut word: Vec<(Generator, u32)> = Vec::new();
        for (g, e) in m.factors().iter().rev() {
            sign_exp += e * ((-g.mode) as u32 - 1);
            word.push((g.generator, *e));
        }
        let sign = if sign_exp.is_multiple_of(2) { c.clone() } else { -c.clone() };
        acc = acc.add(&uea.pbw_normalize(&word)?.scale(&sign))?;
    }
    Ok(acc)
}
