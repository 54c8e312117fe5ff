//! Polynomials in the Cartan coordinates `h_1, ..., h_l`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, parse_rational, Rational};

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographically with `h_1` most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HMonomial(pub(crate) Vec<u32>);

impl HMonomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for HMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for HMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients and no zero terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPolynomial {
    nvars: usize,
    terms: BTreeMap<HMonomial, Rational>,
}

/// A univariate polynomial, coefficients from degree zero upwards.
pub type UniPoly = Vec<Rational>;

fn uni_trim(p: &mut UniPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn uni_mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    uni_trim(&mut out);
    out
}

impl HPolynomial {
    pub fn zero(nvars: usize) -> Self {
        HPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(HMonomial(vec![0; nvars]), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The coordinate `h_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        if i == 0 || i > nvars {
            return Err(Error::InvalidGenerator { generator: format!("h[{i}]"), rank: nvars });
        }
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(HMonomial(e), Rational::one());
        Ok(p)
    }

    /// `Σ coeffs[i] h_{i+1} + constant`.
    pub fn affine(coeffs: &[Rational], constant: Rational) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, constant);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(HMonomial(e), c.clone());
        }
        p
    }

    /// Same as [`HPolynomial::affine`] with integer coefficients.
    pub fn affine_int(coeffs: &[i64], constant: i64) -> Self {
        let c: Vec<Rational> = coeffs.iter().map(|&x| int(x)).collect();
        Self::affine(&c, int(constant))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::WeightLength { got: e.len(), expected: nvars });
            }
            p.add_term(HMonomial(e), c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: HMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&HMonomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(HMonomial::degree)
    }

    pub fn leading(&self) -> Option<(&HMonomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(&HMonomial(exps.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        if !c.is_zero() {
            for (m, x) in &self.terms {
                out.terms.insert(m.clone(), x * c);
            }
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RankMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.0.iter().zip(&b.0).map(|(p, q)| p + q).collect();
                out.add_term(HMonomial(e), x * y);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self).expect("same number of variables");
        }
        acc
    }

    /// Product of the polynomials, `1` for an empty list.
    pub fn product(nvars: usize, factors: &[HPolynomial]) -> Result<Self> {
        let mut acc = Self::one(nvars);
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::WeightLength { got: point.len(), expected: self.nvars });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Restriction to the line `base + t · direction`, as a polynomial in `t`.
    pub fn restrict_to_line(&self, base: &[Rational], direction: &[Rational]) -> Result<UniPoly> {
        let n = self.nvars;
        if base.len() != n || direction.len() != n {
            return Err(Error::WeightLength { got: base.len().min(direction.len()), expected: n });
        }
        let lines: Vec<UniPoly> = base
            .iter()
            .zip(direction)
            .map(|(b, d)| {
                let mut p = vec![b.clone(), d.clone()];
                uni_trim(&mut p);
                p
            })
            .collect();
        let mut out: UniPoly = Vec::new();
        for (m, c) in &self.terms {
            let mut t: UniPoly = vec![c.clone()];
            for (line, &e) in lines.iter().zip(&m.0) {
                for _ in 0..e {
                    t = uni_mul(&t, line);
                }
            }
            if out.len() < t.len() {
                out.resize(t.len(), Rational::zero());
            }
            for (i, x) in t.into_iter().enumerate() {
                out[i] += x;
            }
        }
        uni_trim(&mut out);
        Ok(out)
    }

    /// Exchanges `h_i` and `h_j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.swap(i - 1, j - 1);
            out.add_term(HMonomial(e), c.clone());
        }
        out
    }

    /// Whether every variable appears with degree at most one.
    pub fn is_affine(&self) -> bool {
        self.degree().is_none_or(|d| d <= 1)
    }

    /// For a polynomial of degree at most one: its coefficients and constant.
    pub fn affine_parts(&self) -> Option<(Vec<Rational>, Rational)> {
        if !self.is_affine() {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.nvars];
        let mut constant = Rational::zero();
        for (m, c) in &self.terms {
            match m.0.iter().position(|&e| e == 1) {
                Some(i) => coeffs[i] = c.clone(),
                None => constant = c.clone(),
            }
        }
        Some((coeffs, constant))
    }

    /// Coefficients of `self` as a polynomial in `h_{var+1}` (0-based `var`).
    fn coefficients_in(&self, var: usize) -> Vec<HPolynomial> {
        let mut out: Vec<HPolynomial> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.0[var] as usize;
            if out.len() <= d {
                out.resize(d + 1, Self::zero(self.nvars));
            }
            let mut e = m.0.clone();
            e[var] = 0;
            out[d].add_term(HMonomial(e), c.clone());
        }
        out
    }

    /// Exact quotient by the affine form `Σ a_i h_i + b`, or `None` if it does
    /// not divide.
    pub fn divide_affine(&self, coeffs: &[Rational], constant: &Rational) -> Option<HPolynomial> {
        let n = self.nvars;
        let v = coeffs.iter().position(|c| !c.is_zero())?;
        let a = &coeffs[v];
        let mut rest = coeffs.to_vec();
        rest[v] = Rational::zero();
        let m = HPolynomial::affine(&rest, constant.clone());
        let c = self.coefficients_in(v);
        if c.is_empty() {
            return Some(Self::zero(n));
        }
        let d = c.len() - 1;
        // self = (a x + m) q  ⇒  q_{k-1} = (c_k − m q_k) / a from the top down
        let mut q = vec![Self::zero(n); d + 1];
        let inv = a.recip();
        for k in (1..=d).rev() {
            let t = c[k].sub(&m.mul(&q[k]).ok()?).ok()?;
            q[k - 1] = t.scale(&inv);
        }
        if !c[0].sub(&m.mul(&q[0]).ok()?).ok()?.is_zero() {
            return None;
        }
        let mut out = Self::zero(n);
        let mut xpow = Self::one(n);
        let x = Self::var(n, v + 1).ok()?;
        for qk in q.iter().take(d) {
            out = out.add(&qk.mul(&xpow).ok()?).ok()?;
            xpow = xpow.mul(&x).ok()?;
        }
        Some(out)
    }

    /// Splits the polynomial into affine-linear factors over the rationals.
    ///
    /// Returns the leading scalar and the factors with multiplicity; every
    /// factor is normalized so that its first nonzero coefficient is one.
    pub fn affine_factors(&self) -> Result<(Rational, Vec<AffineForm>)> {
        if self.is_zero() {
            return Err(Error::UnsupportedShape("the zero polynomial".into()));
        }
        let mut factors = Vec::new();
        let scalar = factor_rec(self, &mut factors)?;
        factors.sort();
        Ok((scalar, factors))
    }

    /// Parses the rendering produced by `Display`.
    pub fn parse(nvars: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut p = Self::zero(nvars);
        if s == "0" {
            return Ok(p);
        }
        for term in s.split(" + ") {
            let (coef, mono) = match term.split_once(" * ") {
                Some((c, m)) => (parse_rational(c)?, m),
                None => (parse_rational(term)?, ""),
            };
            let mut e = vec![0u32; nvars];
            for factor in mono.split_whitespace() {
                let (g, exp) = match factor.split_once('^') {
                    Some((g, x)) => (g, x.parse::<u32>().map_err(|_| Error::Parse(factor.into()))?),
                    None => (factor, 1),
                };
                let idx = g
                    .strip_prefix("h[")
                    .and_then(|r| r.strip_suffix(']'))
                    .and_then(|r| r.parse::<usize>().ok())
                    .filter(|&i| 1 <= i && i <= nvars)
                    .ok_or_else(|| Error::Parse(format!("bad variable {g:?}")))?;
                e[idx - 1] += exp;
            }
            p.add_term(HMonomial(e), coef);
        }
        Ok(p)
    }
}

impl fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", fmt_rational(c))?;
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("h[{}]", i + 1) } else { format!("h[{}]^{e}", i + 1) })
                    .collect();
            if !factors.is_empty() {
                write!(f, " * {}", factors.join(" "))?;
            }
        }
        Ok(())
    }
}

/// `Σ coeffs[i] h_{i+1} + constant`, normalized so the first nonzero
/// coefficient is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl AffineForm {
    pub fn to_poly(&self) -> HPolynomial {
        HPolynomial::affine(&self.coeffs, self.constant.clone())
    }
}

fn factor_rec(p: &HPolynomial, out: &mut Vec<AffineForm>) -> Result<Rational> {
    let n = p.nvars;
    let Some(v) = (0..n).find(|&i| p.terms.keys().any(|m| m.0[i] > 0)) else {
        return Ok(p.coefficient(&vec![0; n]));
    };
    let coeffs = p.coefficients_in(v);
    let lead = coeffs.last().expect("positive degree in v");
    let mut rest = p.clone();
    // Factors free of h_v divide the leading coefficient in h_v.
    if lead.degree() != Some(0) {
        let mut content = Vec::new();
        factor_rec(lead, &mut content)?;
        content.sort();
        content.dedup();
        for f in content {
            while let Some(q) = rest.divide_affine(&f.coeffs, &f.constant) {
                out.push(f.clone());
                rest = q;
            }
        }
        if rest.coefficients_in(v).last().and_then(HPolynomial::degree) != Some(0) {
            return Err(Error::UnsupportedShape(p.to_string()));
        }
    }
    // Every remaining factor is h_v − ℓ(other variables).
    loop {
        let d = rest.coefficients_in(v).len() - 1;
        if d == 0 {
            return factor_rec(&rest, out);
        }
        let f = find_linear_factor(&rest, v).ok_or_else(|| Error::UnsupportedShape(p.to_string()))?;
        rest = rest
            .divide_affine(&f.coeffs, &f.constant)
            .ok_or_else(|| Error::Invariant("verified factor failed to divide".into()))?;
        out.push(f);
    }
}

/// Finds `h_v − Σ_{j≠v} b_j h_j − b_0` dividing `p`, where `p` has constant
/// leading coefficient in `h_v`.
fn find_linear_factor(p: &HPolynomial, v: usize) -> Option<AffineForm> {
    let n = p.nvars;
    let point = |j: Option<usize>| -> Vec<Rational> {
        (0..n).map(|i| if Some(i) == j { Rational::one() } else { Rational::zero() }).collect()
    };
    let dir = |i: usize| -> Vec<Rational> {
        (0..n).map(|k| if k == i { Rational::one() } else { Rational::zero() }).collect()
    };
    let roots0 = rational_roots(&p.restrict_to_line(&point(None), &dir(v)).ok()?);
    let others: Vec<usize> = (0..n).filter(|&j| j != v).collect();
    for b0 in roots0 {
        // slope candidates per other variable, filtered by bivariate divisibility
        let mut choices: Vec<Vec<Rational>> = Vec::new();
        for &j in &others {
            let at_one = rational_roots(&p.restrict_to_line(&point(Some(j)), &dir(v)).ok()?);
            let bivariate = restrict_keep(p, &[v, j]);
            let mut cands = Vec::new();
            for r in at_one {
                let bj = &r - &b0;
                let mut c = vec![Rational::zero(); n];
                c[v] = Rational::one();
                c[j] = -bj.clone();
                if bivariate.divide_affine(&c, &-b0.clone()).is_some() && !cands.contains(&bj) {
                    cands.push(bj);
                }
            }
            if cands.is_empty() {
                break;
            }
            choices.push(cands);
        }
        if choices.len() != others.len() {
            continue;
        }
        let mut idx = vec![0usize; choices.len()];
        loop {
            let mut c = vec![Rational::zero(); n];
            c[v] = Rational::one();
            for (k, &j) in others.iter().enumerate() {
                c[j] = -choices[k][idx[k]].clone();
            }
            let constant = -b0.clone();
            if p.divide_affine(&c, &constant).is_some() {
                return Some(normalize_form(c, constant));
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    None
}

/// Sets every variable outside `keep` to zero.
fn restrict_keep(p: &HPolynomial, keep: &[usize]) -> HPolynomial {
    let mut out = HPolynomial::zero(p.nvars);
    for (m, c) in &p.terms {
        if m.0.iter().enumerate().all(|(i, &e)| e == 0 || keep.contains(&i)) {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

fn normalize_form(coeffs: Vec<Rational>, constant: Rational) -> AffineForm {
    let lead = coeffs.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(Rational::one);
    AffineForm { coeffs: coeffs.iter().map(|c| c / &lead).collect(), constant: constant / lead }
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;

    let mut p = p.clone();
    uni_trim(&mut p);
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return roots;
    }
    let low = p.iter().position(|c| !c.is_zero()).expect("nonzero");
    if low > 0 {
        roots.push(Rational::zero());
        p.drain(..low);
    }
    if p.len() <= 1 {
        return roots;
    }
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let c0 = ints[0].abs();
    let cn = ints.last().expect("nonempty").abs();
    let divs = |x: &BigInt| -> Vec<BigInt> {
        let mut ds = Vec::new();
        let mut i = BigInt::one();
        while &i * &i <= *x {
            if (x % &i).is_zero() {
                ds.push(i.clone());
                let q = x / &i;
                if q != i {
                    ds.push(q);
                }
            }
            i += 1;
        }
        ds
    };
    let (pd, qd) = (divs(&c0), divs(&cn));
    for a in &pd {
        for b in &qd {
            for s in [1, -1] {
                let r = Rational::new(a * s, b.clone());
                if !roots.contains(&r) && horner(&p, &r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn horner(p: &UniPoly, x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, i: usize) -> HPolynomial {
        HPolynomial::var(n, i).unwrap()
    }

    #[test]
    fn arithmetic_and_rendering() {
        let p = h(2, 1).mul(&h(2, 2)).unwrap();
        assert_eq!(p.to_string(), "1 * h[1] h[2]");
        let q = p.add(&HPolynomial::constant(2, int(-3))).unwrap();
        assert_eq!(q.to_string(), "1 * h[1] h[2] + -3");
        assert_eq!(HPolynomial::parse(2, &q.to_string()).unwrap(), q);
        assert_eq!(HPolynomial::zero(3).to_string(), "0");
        let sq = h(2, 1).add(&h(2, 2)).unwrap().pow(2);
        assert_eq!(sq.to_string(), "1 * h[1]^2 + 2 * h[1] h[2] + 1 * h[2]^2");
    }

    #[test]
    fn evaluation_and_lines() {
        let p = HPolynomial::parse(2, "1 * h[1]^2 h[2] + 1 * h[1] h[2]^2 + 1 * h[1] h[2]").unwrap();
        assert_eq!(p.eval(&[int(1), int(1)]).unwrap(), int(3));
        // h1 h2 (h1 + h2 + 1) vanishes on h2 = -1 - h1
        let line = p.restrict_to_line(&[int(0), int(-1)], &[int(1), int(-1)]).unwrap();
        assert!(line.is_empty());
        assert_eq!(p.swap_vars(1, 2), p);
    }

    #[test]
    fn exact_division() {
        let l1 = HPolynomial::affine_int(&[1, 1], 1);
        let l2 = HPolynomial::affine_int(&[1, -2], 3);
        let prod = l1.mul(&l2).unwrap().mul(&h(2, 2)).unwrap();
        let q = prod.divide_affine(&[int(1), int(1)], &int(1)).unwrap();
        assert_eq!(q, l2.mul(&h(2, 2)).unwrap());
        assert!(prod.divide_affine(&[int(1), int(0)], &int(5)).is_none());
    }

    #[test]
    fn factoring_products_of_affine_forms() {
        let forms = [
            HPolynomial::affine_int(&[1, 0, 0], 0),
            HPolynomial::affine_int(&[1, 0, 0], -1),
            HPolynomial::affine_int(&[0, 1, 1], 2),
            HPolynomial::affine_int(&[1, 1, 1], 1),
            HPolynomial::affine_int(&[2, -1, 0], 0),
        ];
        let p = HPolynomial::product(3, &forms).unwrap().scale(&int(6));
        let (scalar, factors) = p.affine_factors().unwrap();
        assert_eq!(factors.len(), 5);
        let rebuilt = factors.iter().fold(HPolynomial::constant(3, scalar), |acc, f| acc.mul(&f.to_poly()).unwrap());
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn factoring_rejects_irreducible_quadratics() {
        let p = HPolynomial::parse(2, "1 * h[1]^2 + 1 * h[2]^2 + 1").unwrap();
        assert!(matches!(p.affine_factors(), Err(Error::UnsupportedShape(_))));
    }

    #[test]
    fn roots() {
        // (2x - 1)(x + 3) x^2
        let p = vec![int(0), int(0), int(-3), int(5), int(2)];
        assert_eq!(rational_roots(&p), vec![int(-3), int(0), frac(1, 2)]);
    }

    use crate::rational::frac;
}
