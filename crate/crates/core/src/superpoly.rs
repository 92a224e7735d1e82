//! Supercommutative polynomials in the matrix-element alphabet.
//!
//! A [`Poly`] is a finite map from canonical [`Monomial`]s to coefficients.
//! Symbols are ordered by (tag, row, col); odd symbols occur with exponent 1.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grading::{Gl, Parity};
use crate::scalar::{sign, write_combination, Coeff, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    /// Matrix element of the vector module.
    T,
    /// Matrix element of the dual module.
    TBar,
}

/// Generator `t[row,col]` or `tb[row,col]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    pub tag: Tag,
    pub row: u8,
    pub col: u8,
    pub odd: bool,
}

impl Symbol {
    pub fn new(gl: &Gl, tag: Tag, row: usize, col: usize) -> Self {
        Symbol { tag, row: row as u8, col: col as u8, odd: gl.odd(row) ^ gl.odd(col) }
    }
    pub fn t(gl: &Gl, row: usize, col: usize) -> Self {
        Self::new(gl, Tag::T, row, col)
    }
    pub fn tbar(gl: &Gl, row: usize, col: usize) -> Self {
        Self::new(gl, Tag::TBar, row, col)
    }
    pub fn parity(&self) -> Parity {
        Parity::from_odd(self.odd)
    }
    pub fn row(&self) -> usize {
        self.row as usize
    }
    pub fn col(&self) -> usize {
        self.col as usize
    }
    /// All `2(m+n)²` symbols in canonical order.
    pub fn all(gl: &Gl) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(2 * gl.dim() * gl.dim());
        for tag in [Tag::T, Tag::TBar] {
            for a in gl.indices() {
                for b in gl.indices() {
                    out.push(Symbol::new(gl, tag, a, b));
                }
            }
        }
        out
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.tag {
            Tag::T => "t",
            Tag::TBar => "tb",
        };
        write!(f, "{name}[{},{}]", self.row, self.col)
    }
}

/// Canonical monomial: strictly increasing symbols with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn symbol(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Degree in the `t` and `tb` letters separately.
    pub fn bidegree(&self) -> (u32, u32) {
        let mut d = (0, 0);
        for (s, e) in &self.0 {
            match s.tag {
                Tag::T => d.0 += e,
                Tag::TBar => d.1 += e,
            }
        }
        d
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().filter(|(s, _)| s.odd).count() % 2 == 1
    }

    /// Factors expanded into a flat list of symbols, in canonical order.
    pub fn letters(&self) -> Vec<Symbol> {
        self.0
            .iter()
            .flat_map(|&(s, e)| std::iter::repeat_n(s, e as usize))
            .collect()
    }

    /// Product `self · other`; `None` when an odd symbol repeats. The flag is
    /// the Koszul sign of the sorting.
    pub fn mul(&self, other: &Monomial) -> Option<(bool, Monomial)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut neg = false;
        // Number of odd symbols of `a` not yet emitted.
        let mut odd_left_in_a = a.iter().filter(|(s, _)| s.odd).count();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                if a[i].0.odd {
                    odd_left_in_a -= 1;
                }
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                if b[j].0.odd && odd_left_in_a % 2 == 1 {
                    neg = !neg;
                }
                out.push(b[j]);
                j += 1;
            } else {
                if a[i].0.odd {
                    return None;
                }
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        Some((neg, Monomial(out)))
    }

    /// Builds a monomial from an ordered product of symbols.
    pub fn from_product(symbols: &[Symbol]) -> Option<(bool, Monomial)> {
        let mut acc = (false, Monomial::one());
        for &s in symbols {
            let (neg, m) = acc.1.mul(&Monomial::symbol(s))?;
            acc = (acc.0 ^ neg, m);
        }
        Some(acc)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Common parity of the terms of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolyParity {
    Homogeneous(Parity),
    Mixed,
}

/// Element of the free supercommutative algebra on [`Symbol`]s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C = Scalar> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::monomial(Monomial::symbol(s), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Ordered product of symbols, canonicalized.
    pub fn product(symbols: &[Symbol]) -> Self {
        match Monomial::from_product(symbols) {
            Some((neg, m)) => Self::monomial(m, sign(neg)),
            None => Self::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly<C>, c: &C) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &Poly<C>) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((neg, m)) = ma.mul(mb) {
                    let c = ca.clone() * cb.clone();
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Maximal degrees in `t` and in `tb` letters over all terms.
    pub fn bidegree(&self) -> (u32, u32) {
        self.terms.keys().map(Monomial::bidegree).fold((0, 0), |a, b| (a.0.max(b.0), a.1.max(b.1)))
    }

    pub fn parity(&self) -> PolyParity {
        let mut seen: Option<bool> = None;
        for m in self.terms.keys() {
            let p = m.is_odd();
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return PolyParity::Mixed,
                _ => {}
            }
        }
        PolyParity::Homogeneous(Parity::from_odd(seen.unwrap_or(false)))
    }

    /// Parity of a homogeneous polynomial; `None` if mixed.
    pub fn homogeneous_parity(&self) -> Option<bool> {
        match self.parity() {
            PolyParity::Homogeneous(p) => Some(p.is_odd()),
            PolyParity::Mixed => None,
        }
    }

    /// Splits into even and odd parts.
    pub fn split_parity(&self) -> (Self, Self) {
        let (mut even, mut odd) = (Self::zero(), Self::zero());
        for (m, c) in &self.terms {
            if m.is_odd() {
                odd.add_term(m.clone(), c.clone());
            } else {
                even.add_term(m.clone(), c.clone());
            }
        }
        (even, odd)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn conj_coeffs(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    /// Algebra homomorphism determined by generator images, into any
    /// supercommutative target represented by `Poly`.
    pub fn substitute(&self, image: impl Fn(Symbol) -> Poly<C>) -> Self {
        let mut cache: BTreeMap<Symbol, Poly<C>> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for &(s, e) in m.factors() {
                let img = cache.entry(s).or_insert_with(|| image(s)).clone();
                for _ in 0..e {
                    acc = acc.mul(&img);
                }
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, cc);
            }
        }
        out
    }

    /// Extends a symbol-level superderivation of parity `odd` by the graded
    /// Leibniz rule.
    pub fn derive(&self, odd: bool, image: impl Fn(Symbol) -> Poly<C>) -> Self {
        let mut cache: BTreeMap<Symbol, Poly<C>> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let f = m.factors();
            let mut prefix_odd = false;
            for i in 0..f.len() {
                let (s, e) = f[i];
                let ds = cache.entry(s).or_insert_with(|| image(s)).clone();
                if !ds.is_zero() {
                    let mut pre = f[..i].to_vec();
                    if e > 1 {
                        pre.push((s, e - 1));
                    }
                    let prefix = Monomial(pre);
                    let suffix = Monomial(f[i + 1..].to_vec());
                    let mut k = c.clone() * C::from_int(e as i64);
                    if odd && prefix_odd {
                        k = -k;
                    }
                    let term = Poly::monomial(prefix, k).mul(&ds).mul(&Poly::monomial(suffix, C::one()));
                    for (mm, cc) in term.terms {
                        out.add_term(mm, cc);
                    }
                }
                if s.odd {
                    prefix_odd = !prefix_odd;
                }
            }
        }
        out
    }
}

impl<C: Coeff> std::ops::Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coeff> std::ops::Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one());
        out
    }
}

impl<C: Coeff> std::ops::Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::mul(self, rhs)
    }
}

impl<C: Coeff> std::ops::Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> std::ops::Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> std::ops::Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> std::ops::Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        Poly::mul(&self, &rhs)
    }
}

/// Superderivation given by its values on generators.
#[derive(Clone, Debug)]
pub struct DerivationSpec<C = Scalar> {
    pub parity: Parity,
    pub images: BTreeMap<Symbol, Poly<C>>,
}

impl<C: Coeff> DerivationSpec<C> {
    /// Checks that every image has parity `symbol + self.parity`.
    pub fn is_consistent(&self) -> bool {
        self.images.iter().all(|(s, p)| match p.parity() {
            PolyParity::Homogeneous(q) => p.is_zero() || q == s.parity() + self.parity,
            PolyParity::Mixed => false,
        })
    }
}

pub fn apply_derivation<C: Coeff>(d: &DerivationSpec<C>, p: &Poly<C>) -> Poly<C> {
    p.derive(d.parity.is_odd(), |s| d.images.get(&s).cloned().unwrap_or_else(Poly::zero))
}

/// Conjugate-linear anti-automorphism given by generator images.
#[derive(Clone, Debug)]
pub struct StarSpec<C = Scalar> {
    pub images: BTreeMap<Symbol, Poly<C>>,
}

impl<C: Coeff> StarSpec<C> {
    pub fn image(&self, s: Symbol) -> Poly<C> {
        self.images.get(&s).cloned().unwrap_or_else(|| Poly::symbol(s))
    }
}

/// Conjugates coefficients, reverses products and substitutes images.
pub fn apply_star<C: Coeff>(s: &StarSpec<C>, p: &Poly<C>) -> Poly<C> {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let mut acc = Poly::constant(c.conj());
        for sym in m.letters().into_iter().rev() {
            acc = acc.mul(&s.image(sym));
        }
        out.add_scaled(&acc, &C::one());
    }
    out
}

pub fn parity_of<C: Coeff>(p: &Poly<C>) -> PolyParity {
    p.parity()
}

impl fmt::Display for Poly<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter().map(|(m, c)| (if m.is_one() { String::new() } else { m.to_string() }, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl11() -> Gl {
        Gl::new(1, 1).unwrap()
    }

    #[test]
    fn odd_product_signs() {
        let g = gl11();
        let x12 = Poly::<Scalar>::symbol(Symbol::t(&g, 1, 2));
        let x21 = Poly::<Scalar>::symbol(Symbol::t(&g, 2, 1));
        let a = x12.mul(&x21);
        let b = x21.mul(&x12);
        assert_eq!(a, -&b);
        assert!(x12.mul(&x12).is_zero());
    }

    #[test]
    fn derivation_examples() {
        let g = gl11();
        let x11 = Symbol::t(&g, 1, 1);
        let sq = Poly::<Scalar>::symbol(x11).pow(2);
        let d = DerivationSpec {
            parity: Parity::Even,
            images: [(x11, Poly::one())].into_iter().collect(),
        };
        assert_eq!(apply_derivation(&d, &sq), Poly::symbol(x11).scale(&Scalar::from_int(2)));
        assert!(apply_derivation(&d, &Poly::constant(Scalar::from_int(7))).is_zero());

        let (x12, x21) = (Symbol::t(&g, 1, 2), Symbol::t(&g, 2, 1));
        let d = DerivationSpec {
            parity: Parity::Odd,
            images: [(x12, Poly::one())].into_iter().collect(),
        };
        let p = Poly::<Scalar>::product(&[x12, x21]);
        assert_eq!(apply_derivation(&d, &p), Poly::symbol(x21));
    }

    #[test]
    fn star_examples() {
        let g = gl11();
        let x11 = Symbol::t(&g, 1, 1);
        let id = StarSpec::<Scalar> { images: BTreeMap::new() };
        let p = Poly::symbol(x11).scale(&crate::scalar::imag_unit());
        assert_eq!(apply_star(&id, &p), Poly::symbol(x11).scale(&-crate::scalar::imag_unit()));
        let (x12, x21) = (Symbol::t(&g, 1, 2), Symbol::t(&g, 2, 1));
        let q = Poly::<Scalar>::product(&[x12, x21]);
        assert_eq!(apply_star(&id, &q), -&q);
    }

    #[test]
    fn parity_classes() {
        let g = gl11();
        let x11 = Poly::<Scalar>::symbol(Symbol::t(&g, 1, 1));
        let x12 = Poly::<Scalar>::symbol(Symbol::t(&g, 1, 2));
        assert_eq!(x12.parity(), PolyParity::Homogeneous(Parity::Odd));
        assert_eq!((&x11 + &x12).parity(), PolyParity::Mixed);
        assert_eq!(Poly::<Scalar>::zero().parity(), PolyParity::Homogeneous(Parity::Even));
    }

    #[test]
    fn display() {
        let g = gl11();
        let x12 = Poly::<Scalar>::symbol(Symbol::t(&g, 1, 2));
        let x21 = Poly::<Scalar>::symbol(Symbol::tbar(&g, 2, 1));
        let p = &(&x12.mul(&x21).scale(&Scalar::from_ratio(-3, 2)) + &Poly::one()) - &x21;
        assert_eq!(p.to_string(), "1 - 3/2*t[1,2]*tb[2,1] - tb[2,1]");
    }
}
