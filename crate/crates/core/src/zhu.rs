//! Zhu-algebra side of the classification: the adjoint module `R` generated by
//! `v′`, its zero-weight polynomials `P₀`, and the highest-weight families
//! on which every polynomial of `P₀` vanishes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hpoly::{HMonomial, HPolynomial};
use crate::lie::{Generator, LieElement};
use crate::linalg::{rank, rref};
use crate::rational::{factorial, fmt_rational, int, serde_rational, Rational};
use crate::straighten::{add_into, Terms};
use crate::uea::{PbwMonomial, Uea, UeaElement};

/// `v′_{l,1} = e_{ε1−ε_{l+1}} e_{ε2−ε_l} − e_{ε2−ε_{l+1}} e_{ε1−ε_l}`.
pub fn known_vprime_l1(uea: &Uea) -> Result<UeaElement> {
    let l = uea.rank();
    if l < 3 {
        return Err(Error::Unsupported(format!("v'_(l,1) needs l >= 3, got l = {l}")));
    }
    let a = uea.pbw_normalize(&[(Generator::e(1, l + 1), 1), (Generator::e(2, l), 1)])?;
    let b = uea.pbw_normalize(&[(Generator::e(2, l + 1), 1), (Generator::e(1, l), 1)])?;
    a.sub(&b)
}

/// `v′_{2,n} = Σ_t (1/t!) (f_{ε1−ε2}^t)_L(e_{ε1−ε2}^n) e_{ε2−ε3}^{2n−t} e_{ε1−ε3}^t`.
pub fn known_vprime_a2(uea: &Uea, n: u32) -> Result<UeaElement> {
    if uea.rank() != 2 || n == 0 {
        return Err(Error::Unsupported("v'_(2,n) lives in U(sl_3) with n >= 1".into()));
    }
    let f12 = LieElement::f(2, 1, 2)?;
    let mut ad = uea.pbw_normalize(&[(Generator::e(1, 2), n)])?;
    let mut acc = uea.zero();
    for t in 0..=2 * n {
        if t > 0 {
            ad = uea.adjoint_apply(&f12, &ad)?;
        }
        if ad.is_zero() {
            break;
        }
        let tail = uea.pbw_normalize(&[(Generator::e(2, 3), 2 * n - t), (Generator::e(1, 3), t)])?;
        let term = uea.multiply(&ad, &tail)?;
        acc = acc.add(&term.scale(&factorial(t as u64).recip()))?;
    }
    Ok(acc)
}

type IntRow = BTreeMap<PbwMonomial, BigInt>;

/// Scales to a primitive integer row with positive leading coefficient.
fn primitive(row: &Terms<Generator>) -> IntRow {
    let den = row.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out: IntRow =
        row.iter().map(|(m, c)| (m.clone(), (c * Rational::from_integer(den.clone())).to_integer())).collect();
    normalize_int(&mut out);
    out
}

fn normalize_int(row: &mut IntRow) {
    row.retain(|_, c| !c.is_zero());
    let g = row.values().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let neg = row.values().next_back().is_some_and(|c| c.is_negative());
    if g.is_zero() {
        return;
    }
    let g = if neg { -g } else { g };
    for c in row.values_mut() {
        *c = &*c / &g;
    }
}

/// Fraction-free echelon basis of one weight space; pivots are leading monomials.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<PbwMonomial, IntRow>,
}

impl Echelon {
    /// Reduces `cand` and inserts it when independent.
    fn insert(&mut self, mut cand: IntRow) -> Option<IntRow> {
        loop {
            let (lead, lc) = match cand.iter().next_back() {
                Some((m, c)) => (m.clone(), c.clone()),
                None => return None,
            };
            let Some(row) = self.rows.get(&lead) else {
                normalize_int(&mut cand);
                self.rows.insert(lead, cand.clone());
                return Some(cand);
            };
            let rc = row[&lead].clone();
            for c in cand.values_mut() {
                *c *= &rc;
            }
            for (m, x) in row {
                let slot = cand.entry(m.clone()).or_insert_with(BigInt::zero);
                *slot -= &lc * x;
            }
            normalize_int(&mut cand);
        }
    }
}

/// The `g`-submodule of `U(g)` (adjoint action) generated by one element.
#[derive(Clone, Debug)]
pub struct AdjointModule {
    pub generator: UeaElement,
    /// Basis grouped by weight, weights in increasing lexicographic order.
    pub by_weight: BTreeMap<Vec<i64>, Vec<UeaElement>>,
    pub closed: bool,
}

impl AdjointModule {
    pub fn dim(&self) -> usize {
        self.by_weight.values().map(Vec::len).sum()
    }

    pub fn zero_weight_space(&self) -> &[UeaElement] {
        let zero = vec![0; self.generator.rank()];
        self.by_weight.get(&zero).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn weight_dims(&self) -> Vec<(Vec<i64>, usize)> {
        self.by_weight.iter().map(|(w, v)| (w.clone(), v.len())).collect()
    }
}

fn chevalley_generators(rank: usize) -> Result<Vec<LieElement>> {
    let mut out = Vec::new();
    for i in 1..=rank {
        out.push(LieElement::e(rank, i, i + 1)?);
        out.push(LieElement::f(rank, i, i + 1)?);
    }
    Ok(out)
}

fn to_element(uea: &Uea, row: &IntRow) -> UeaElement {
    let mut t = uea.zero();
    for (m, c) in row {
        add_into(&mut t.terms, m.clone(), Rational::from_integer(c.clone()));
    }
    t
}

/// Closure of `{v}` under `ad e_{α_i}` and `ad f_{α_i}`, breadth first.
pub fn generate_adjoint_module(uea: &Uea, v: &UeaElement, cap: usize) -> Result<AdjointModule> {
    let v = uea.renormalize(v)?;
    let w = v.weight().ok_or(Error::NotHomogeneous)?;
    let gens = chevalley_generators(uea.rank())?;
    let mut spaces: BTreeMap<Vec<i64>, Echelon> = BTreeMap::new();
    let mut by_weight: BTreeMap<Vec<i64>, Vec<UeaElement>> = BTreeMap::new();
    let first = spaces.entry(w.clone()).or_default().insert(primitive(&v.terms)).expect("nonzero generator");
    let first = to_element(uea, &first);
    by_weight.entry(w).or_default().push(first.clone());
    let mut wave = vec![first];
    let mut dim = 1;
    while !wave.is_empty() {
        let images: Vec<UeaElement> = wave
            .par_iter()
            .flat_map_iter(|u| gens.iter().map(move |x| (x, u)))
            .map(|(x, u)| uea.adjoint_apply(x, u))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for img in images {
            if img.is_zero() {
                continue;
            }
            let w = img.weight().ok_or_else(|| Error::Invariant("adjoint image is not homogeneous".into()))?;
            if let Some(row) = spaces.entry(w.clone()).or_default().insert(primitive(&img.terms)) {
                dim += 1;
                if dim > cap {
                    return Err(Error::CapExceeded { cap, needed: dim });
                }
                let e = to_element(uea, &row);
                by_weight.entry(w).or_default().push(e.clone());
                next.push(e);
            }
        }
        wave = next;
    }
    Ok(AdjointModule { generator: v, by_weight, closed: true })
}

/// Canonical basis of a span of polynomials: reduced echelon form with
/// monomials in decreasing order, leading coefficients one.
pub fn canonical_span(polys: &[HPolynomial]) -> Result<Vec<HPolynomial>> {
    let Some(nvars) = polys.first().map(HPolynomial::nvars) else {
        return Ok(Vec::new());
    };
    let mut monos: Vec<HMonomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    monos.reverse();
    let matrix: Vec<Vec<Rational>> =
        polys.iter().map(|p| monos.iter().map(|m| p.coefficient(m.exponents())).collect()).collect();
    let (rows, _) = rref(&matrix, monos.len());
    rows.into_iter()
        .map(|r| HPolynomial::from_terms(nvars, monos.iter().zip(r).map(|(m, c)| (m.exponents().to_vec(), c))))
        .collect()
}

/// Whether two lists of polynomials span the same space.
pub fn same_span(a: &[HPolynomial], b: &[HPolynomial]) -> Result<bool> {
    Ok(canonical_span(a)? == canonical_span(b)?)
}

/// `P₀`: the zero-weight space of `R` reduced modulo `U(g)n₊`, as a canonical basis.
pub fn extract_p0(uea: &Uea, module: &AdjointModule) -> Result<Vec<HPolynomial>> {
    let polys: Vec<HPolynomial> =
        module.zero_weight_space().iter().map(|u| uea.reduce_mod_n_plus(u)).collect::<Result<_>>()?;
    canonical_span(&polys)
}

/// `p_ij = h_i h_j` (`i ≤ l−2`, `j − i ≥ 2`) and
/// `q_i = h_i (h_{i−1} + h_i + h_{i+1} + 1)` (`2 ≤ i ≤ l−1`).
pub fn known_p0_vl1(l: usize) -> Result<Vec<HPolynomial>> {
    if l < 3 {
        return Err(Error::Unsupported(format!("needs l >= 3, got l = {l}")));
    }
    let h = |i: usize| HPolynomial::var(l, i);
    let mut out = Vec::new();
    for i in 1..=l - 2 {
        for j in i + 2..=l {
            out.push(h(i)?.mul(&h(j)?)?);
        }
    }
    for i in 2..l {
        let mut c = vec![0i64; l];
        c[i - 2] = 1;
        c[i - 1] = 1;
        c[i] = 1;
        out.push(h(i)?.mul(&HPolynomial::affine_int(&c, 1))?);
    }
    Ok(out)
}

/// `∏_{m<n} (h_1 − m)(h_2 − m) · ∏_{m<n} (h_1 + h_2 + 1 − m)`.
pub fn known_p_a2(n: u32) -> Result<HPolynomial> {
    let mut factors = Vec::new();
    for m in 0..n as i64 {
        factors.push(HPolynomial::affine_int(&[1, 0], -m));
        factors.push(HPolynomial::affine_int(&[0, 1], -m));
        factors.push(HPolynomial::affine_int(&[1, 1], 1 - m));
    }
    HPolynomial::product(2, &factors)
}

/// `V(tω_1)`, `V(tω_l)` and `V(tω_i + (−1−t)ω_{i+1})` for `1 ≤ i < l`.
pub fn known_families_vl1(l: usize) -> Result<Vec<WeightFamily>> {
    if l < 3 {
        return Err(Error::Unsupported(format!("needs l >= 3, got l = {l}")));
    }
    let unit = |i: usize| -> Vec<i64> { (1..=l).map(|j| i64::from(j == i)).collect() };
    let zero = vec![0i64; l];
    let mut out = vec![WeightFamily::line_int(&zero, &unit(1)), WeightFamily::line_int(&zero, &unit(l))];
    for i in 1..l {
        let base: Vec<i64> = unit(i + 1).iter().map(|x| -x).collect();
        let dir: Vec<i64> = unit(i).iter().zip(unit(i + 1)).map(|(a, b)| a - b).collect();
        out.push(WeightFamily::line_int(&base, &dir));
    }
    out.sort();
    Ok(out)
}

/// `V(tω_1 + mω_2)`, `V(mω_1 + tω_2)`, `V(tω_1 + (−1−t+m)ω_2)` for `0 ≤ m < n`.
pub fn known_families_a2(n: u32) -> Vec<WeightFamily> {
    let mut out = Vec::new();
    for m in 0..n as i64 {
        out.push(WeightFamily::line_int(&[0, m], &[1, 0]));
        out.push(WeightFamily::line_int(&[m, 0], &[0, 1]));
        out.push(WeightFamily::line_int(&[0, m - 1], &[1, -1]));
    }
    out.sort();
    out
}

/// `(f_{ε1−ε3}^n f_{ε2−ε3}^n)_L v′_{2,n}` reduced modulo `U(g)n₊`, next to
/// `(−1)^n (n!)^2 p(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma64Check {
    pub n: u32,
    pub computed: HPolynomial,
    pub expected: HPolynomial,
}

impl Lemma64Check {
    pub fn holds(&self) -> bool {
        self.computed == self.expected
    }
}

pub fn check_lemma64(uea: &Uea, n: u32) -> Result<Lemma64Check> {
    let v = known_vprime_a2(uea, n)?;
    let word = [(LieElement::f(2, 1, 3)?, n), (LieElement::f(2, 2, 3)?, n)];
    let image = uea.adjoint_word_apply(&word, &v)?;
    let computed = uea.reduce_mod_n_plus(&image)?;
    let f = factorial(n as u64);
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let expected = known_p_a2(n)?.scale(&(sign * &f * &f));
    Ok(Lemma64Check { n, computed, expected })
}

/// An affine line `base + t · direction` (a point when `direction = 0`) of
/// highest weights in coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct WeightFamily {
    base: Vec<Rational>,
    direction: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    #[serde(with = "serde_rational::vec")]
    base: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    direction: Vec<Rational>,
    param: String,
}

impl From<WeightFamily> for FamilyRepr {
    fn from(f: WeightFamily) -> Self {
        FamilyRepr { base: f.base, direction: f.direction, param: "t".into() }
    }
}

impl TryFrom<FamilyRepr> for WeightFamily {
    type Error = Error;

    fn try_from(r: FamilyRepr) -> Result<Self> {
        if r.param != "t" {
            return Err(Error::Parse(format!("unknown family parameter {:?}", r.param)));
        }
        WeightFamily::new(r.base, r.direction)
    }
}

impl WeightFamily {
    /// Canonical form: primitive integral direction with positive first
    /// nonzero entry, base zero at that entry.
    pub fn new(base: Vec<Rational>, direction: Vec<Rational>) -> Result<Self> {
        if base.len() != direction.len() {
            return Err(Error::WeightLength { got: direction.len(), expected: base.len() });
        }
        let Some(p) = direction.iter().position(|c| !c.is_zero()) else {
            return Ok(WeightFamily { base, direction });
        };
        let den = direction.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            direction.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints[p].is_negative() {
            g = -g;
        }
        let direction: Vec<Rational> = ints.iter().map(|c| Rational::from_integer(c / &g)).collect();
        let s = &base[p] / &direction[p];
        let base = base.iter().zip(&direction).map(|(b, d)| b - &s * d).collect();
        Ok(WeightFamily { base, direction })
    }

    pub fn point(coords: Vec<Rational>) -> Self {
        let n = coords.len();
        WeightFamily { base: coords, direction: vec![Rational::zero(); n] }
    }

    pub fn line_int(base: &[i64], direction: &[i64]) -> Self {
        Self::new(base.iter().map(|&x| int(x)).collect(), direction.iter().map(|&x| int(x)).collect())
            .expect("equal lengths")
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn direction(&self) -> &[Rational] {
        &self.direction
    }

    pub fn rank(&self) -> usize {
        self.base.len()
    }

    pub fn is_point(&self) -> bool {
        self.direction.iter().all(Zero::is_zero)
    }

    pub fn at(&self, t: &Rational) -> Vec<Rational> {
        self.base.iter().zip(&self.direction).map(|(b, d)| b + t * d).collect()
    }

    /// Whether `x` lies on the family.
    pub fn contains(&self, x: &[Rational]) -> bool {
        match self.direction.iter().position(|c| !c.is_zero()) {
            None => self.base == x,
            Some(p) => {
                let t = (&x[p] - &self.base[p]) / &self.direction[p];
                self.at(&t) == x
            }
        }
    }

    /// The family with coordinates `i` and `j` (1-based) exchanged.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        let mut b = self.base.clone();
        let mut d = self.direction.clone();
        b.swap(i - 1, j - 1);
        d.swap(i - 1, j - 1);
        Self::new(b, d).expect("equal lengths")
    }
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>().join(", ");
        if self.is_point() {
            write!(f, "({})", show(&self.base))
        } else {
            write!(f, "({}) + t({})", show(&self.base), show(&self.direction))
        }
    }
}

/// Whether every polynomial vanishes identically along the family.
pub fn family_satisfies(fam: &WeightFamily, polys: &[HPolynomial]) -> Result<bool> {
    for p in polys {
        if !p.restrict_to_line(&fam.base, &fam.direction)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An affine subspace `{x : A x + c = 0}` kept in reduced echelon form; each
/// row stores the coefficients followed by the constant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Subspace {
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

enum Restriction {
    Vanishes,
    Empty,
    Cut(Subspace),
}

impl Subspace {
    fn whole() -> Self {
        Subspace { rows: Vec::new(), pivots: Vec::new() }
    }

    fn reduce(&self, form: &[Rational]) -> Vec<Rational> {
        let mut f = form.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f[p].is_zero() {
                let c = f[p].clone();
                for (x, y) in f.iter_mut().zip(row) {
                    *x -= &c * y;
                }
            }
        }
        f
    }

    fn cut(&self, form: &[Rational]) -> Restriction {
        let n = form.len() - 1;
        let r = self.reduce(form);
        if r[..n].iter().all(Zero::is_zero) {
            return if r[n].is_zero() { Restriction::Vanishes } else { Restriction::Empty };
        }
        let mut rows = self.rows.clone();
        rows.push(r);
        let (rows, pivots) = rref(&rows, n + 1);
        Restriction::Cut(Subspace { rows, pivots })
    }

    fn free(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `p` pulled back along the parametrization by the free coordinates.
    fn restrict(&self, p: &HPolynomial, n: usize) -> Result<HPolynomial> {
        let free = self.free(n);
        let k = free.len();
        let mut images: Vec<HPolynomial> = vec![HPolynomial::zero(k); n];
        for (j, &f) in free.iter().enumerate() {
            images[f] = HPolynomial::var(k, j + 1)?;
        }
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let coeffs: Vec<Rational> = free.iter().map(|&f| -row[f].clone()).collect();
            images[piv] = HPolynomial::affine(&coeffs, -row[n].clone());
        }
        let mut out = HPolynomial::zero(k);
        for (m, c) in p.terms() {
            let mut t = HPolynomial::constant(k, c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                if e > 0 {
                    t = t.mul(&img.pow(e))?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    fn contained_in(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|row| self.reduce(row).iter().all(Zero::is_zero))
    }

    fn family(&self, n: usize) -> Result<WeightFamily> {
        let free = self.free(n);
        let mut base = vec![Rational::zero(); n];
        let mut direction = vec![Rational::zero(); n];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            base[p] = -row[n].clone();
        }
        match free.as_slice() {
            [] => {}
            [f] => {
                direction[*f] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    direction[p] = -row[*f].clone();
                }
            }
            _ => return Err(Error::ComponentTooLarge(free.len())),
        }
        WeightFamily::new(base, direction)
    }
}

/// The common zero set of `polys` in `h*` as a list of families.
///
/// Each component is refined by the first polynomial not vanishing on it,
/// after restricting that polynomial to the component; the restriction must
/// split into affine-linear factors over the rationals.
pub fn classify(polys: &[HPolynomial], l: usize) -> Result<Vec<WeightFamily>> {
    for p in polys {
        if p.nvars() != l {
            return Err(Error::RankMismatch { left: l, right: p.nvars() });
        }
    }
    let mut stack = vec![Subspace::whole()];
    let mut done = Vec::new();
    'component: while let Some(s) = stack.pop() {
        let mut last_err = None;
        for p in polys {
            let r = s.restrict(p, l)?;
            if r.is_zero() {
                continue;
            }
            if r.degree() == Some(0) {
                continue 'component;
            }
            let factors = match r.affine_factors() {
                Ok((_, f)) => f,
                Err(e) => {
                    last_err = Some(e);
                    continue;
                }
            };
            let free = s.free(l);
            for f in factors {
                let mut form = vec![Rational::zero(); l + 1];
                for (c, &col) in f.coeffs.iter().zip(&free) {
                    form[col] = c.clone();
                }
                form[l] = f.constant.clone();
                match s.cut(&form) {
                    Restriction::Cut(c) => stack.push(c),
                    Restriction::Empty => {}
                    Restriction::Vanishes => return Err(Error::Invariant("factor vanished on its component".into())),
                }
            }
            continue 'component;
        }
        match last_err {
            Some(e) => return Err(e),
            None => done.push(s),
        }
    }
    let mut out = prune(done).iter().map(|s| s.family(l)).collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Drops duplicates and components contained in another one.
fn prune(mut comps: Vec<Subspace>) -> Vec<Subspace> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> =
        (0..comps.len()).map(|i| !(0..comps.len()).any(|j| j != i && comps[i].contained_in(&comps[j]))).collect();
    comps.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

/// Dimension of the span of `polys`.
pub fn span_dimension(polys: &[HPolynomial]) -> usize {
    let mut monos: Vec<HMonomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let matrix: Vec<Vec<Rational>> =
        polys.iter().map(|p| monos.iter().map(|m| p.coefficient(m.exponents())).collect()).collect();
    rank(&matrix, monos.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_lists() {
        let p = known_p0_vl1(3).unwrap();
        let shown: Vec<String> = p.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["1 * h[1] h[3]", "1 * h[1] h[2] + 1 * h[2]^2 + 1 * h[2] h[3] + 1 * h[2]"]);
        assert_eq!(known_p0_vl1(4).unwrap().len(), 5);
        assert_eq!(known_p0_vl1(5).unwrap().len(), 9);
        assert!(known_p0_vl1(2).is_err());
        let a = known_p_a2(1).unwrap();
        assert_eq!(a.eval(&[int(1), int(1)]).unwrap(), int(3));
        assert_eq!(a.degree(), Some(3));
        assert_eq!(known_p_a2(3).unwrap().degree(), Some(9));
    }

    #[test]
    fn family_canonical_form() {
        let a = WeightFamily::new(vec![int(2), int(-3)], vec![int(-2), int(2)]).unwrap();
        let b = WeightFamily::line_int(&[0, -1], &[1, -1]);
        assert_eq!(a, b);
        assert!(b.contains(&[int(5), int(-6)]));
        assert!(!b.contains(&[int(5), int(-5)]));
        assert_eq!(b.to_string(), "(0, -1) + t(1, -1)");
        assert_eq!(b.swap(1, 2), WeightFamily::line_int(&[-1, 0], &[-1, 1]));
    }

    #[test]
    fn family_json_roundtrip() {
        let f = WeightFamily::line_int(&[0, 1], &[1, 0]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"base":["0","1"],"direction":["1","0"],"param":"t"}"#);
        assert_eq!(serde_json::from_str::<WeightFamily>(&s).unwrap(), f);
    }

    #[test]
    fn classify_rank_two_n1() {
        let fams = classify(&[known_p_a2(1).unwrap()], 2).unwrap();
        let mut want = vec![
            WeightFamily::line_int(&[0, 0], &[1, 0]),
            WeightFamily::line_int(&[0, 0], &[0, 1]),
            WeightFamily::line_int(&[0, -1], &[1, -1]),
        ];
        want.sort();
        assert_eq!(fams, want);
        assert_eq!(known_families_a2(1), want);
    }

    #[test]
    fn classify_isolated_points_and_empty() {
        let h1 = HPolynomial::affine_int(&[1, 0], -2);
        let h2 = HPolynomial::affine_int(&[0, 1], 3);
        let fams = classify(&[h1.clone(), h2], 2).unwrap();
        assert_eq!(fams, vec![WeightFamily::point(vec![int(2), int(-3)])]);
        assert!(fams[0].is_point());
        assert!(classify(&[HPolynomial::one(2)], 2).unwrap().is_empty());
        assert_eq!(classify(&[h1], 2).unwrap().len(), 1);
        assert!(matches!(classify(&[HPolynomial::affine_int(&[1, 0, 0], 0)], 3), Err(Error::ComponentTooLarge(2))));
    }

    #[test]
    fn satisfies() {
        let p = [known_p_a2(1).unwrap()];
        assert!(family_satisfies(&WeightFamily::line_int(&[0, -1], &[1, -1]), &p).unwrap());
        assert!(!family_satisfies(&WeightFamily::point(vec![int(1), int(1)]), &p).unwrap());
        assert!(
            family_satisfies(&WeightFamily::line_int(&[0, 0, 0, 0], &[1, 0, 0, 0]), &known_p0_vl1(4).unwrap()).unwrap()
        );
    }
}
