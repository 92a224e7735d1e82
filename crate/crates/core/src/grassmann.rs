//! Grassmann algebras, even supermatrices and supergroup points.
//!
//! A supergroup point is a superalgebra homomorphism ℂ(G) → Λ_N, stored by
//! its values on the generators `t[a,b]` and `tb[a,b]`.
//!
//! Conjugation on Λ_N fixes each generator, conjugates coefficients and
//! reverses products, so `conj(θ_i θ_j) = θ_j θ_i`.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cg::Cg;
use crate::error::{Error, Result};
use crate::grading::Gl;
use crate::linalg;
use crate::scalar::{sign, Coeff, One, Scalar, Zero};
use crate::superpoly::{Poly, Symbol, Tag};

/// Largest supported number of Grassmann generators.
pub const MAX_GENERATORS: usize = 31;

/// Element of Λ_N, keyed by generator subsets as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grass<C = Scalar> {
    terms: BTreeMap<u32, C>,
}

/// Koszul sign of `θ_A θ_B` for disjoint `A`, `B`.
#[inline]
fn merge_is_negative(a: u32, b: u32) -> bool {
    let mut bits = b;
    let mut count = 0;
    while bits != 0 {
        let j = bits.trailing_zeros();
        count += (a >> j >> 1).count_ones();
        bits &= bits - 1;
    }
    count % 2 == 1
}

impl<C: Coeff> Default for Grass<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Grass<C> {
    pub fn zero() -> Self {
        Grass { terms: BTreeMap::new() }
    }
    pub fn scalar(c: C) -> Self {
        let mut g = Self::zero();
        g.add_term(0, c);
        g
    }
    pub fn one() -> Self {
        Self::scalar(C::one())
    }
    /// Generator θ_j, 0-based.
    pub fn generator(j: usize) -> Self {
        assert!(j < MAX_GENERATORS);
        let mut g = Self::zero();
        g.add_term(1 << j, C::one());
        g
    }
    pub fn terms(&self) -> impl Iterator<Item = (&u32, &C)> {
        self.terms.iter()
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
    pub fn add_term(&mut self, mask: u32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
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
    /// Constant term.
    pub fn body(&self) -> C {
        self.terms.get(&0).cloned().unwrap_or_else(C::zero)
    }
    pub fn soul(&self) -> Self {
        let mut s = self.clone();
        s.terms.remove(&0);
        s
    }
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 1)
    }
    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v.clone() * c.clone());
        }
        out
    }
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(*m, v.clone());
        }
        out
    }
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(*m, -v.clone());
        }
        out
    }
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<u32, C> = HashMap::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let v = ca.clone() * cb.clone();
                let v = if merge_is_negative(a, b) { -v } else { v };
                let e = acc.entry(a | b).or_insert_with(C::zero);
                *e = e.clone() + v;
            }
        }
        Grass { terms: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }
    /// Conjugates coefficients and reverses products.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (&m, v) in &self.terms {
            let k = m.count_ones() as usize;
            out.add_term(m, sign::<C>(k * k.saturating_sub(1) / 2 % 2 == 1) * v.conj());
        }
        out
    }
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Grass<D> {
        let mut out = Grass::zero();
        for (&m, v) in &self.terms {
            out.add_term(m, f(v));
        }
        out
    }
}

/// JSON form of one Grassmann term.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GrassTermJson {
    pub subset: Vec<usize>,
    pub re: String,
    pub im: String,
}

impl Grass<Scalar> {
    pub fn to_json(&self) -> Vec<GrassTermJson> {
        self.terms
            .iter()
            .map(|(&m, c)| GrassTermJson {
                subset: (0..32).filter(|j| m >> j & 1 == 1).map(|j| j + 1).collect(),
                re: c.re.to_string(),
                im: c.im.to_string(),
            })
            .collect()
    }
}

/// Even supermatrix with entries in Λ_N, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Supermatrix<C = Scalar> {
    pub gl: Gl,
    entries: Vec<Grass<C>>,
}

impl<C: Coeff> Supermatrix<C> {
    pub fn from_entries(gl: Gl, entries: Vec<Grass<C>>) -> Result<Self> {
        let d = gl.dim();
        if entries.len() != d * d {
            return Err(Error::Shape(format!("{} entries for a {d}x{d} matrix", entries.len())));
        }
        let m = Supermatrix { gl, entries };
        for a in gl.indices() {
            for b in gl.indices() {
                let e = m.get(a, b);
                let ok = if gl.odd(a) ^ gl.odd(b) { e.is_odd() } else { e.is_even() };
                if !ok && !e.is_zero() {
                    return Err(Error::Shape(format!("entry ({a},{b}) has the wrong parity")));
                }
            }
        }
        Ok(m)
    }

    pub fn identity(gl: Gl) -> Self {
        let d = gl.dim();
        let entries = (0..d * d).map(|k| if k / d == k % d { Grass::one() } else { Grass::zero() }).collect();
        Supermatrix { gl, entries }
    }

    /// 1-based entry access.
    pub fn get(&self, a: usize, b: usize) -> &Grass<C> {
        &self.entries[(a - 1) * self.gl.dim() + (b - 1)]
    }

    pub fn set(&mut self, a: usize, b: usize, v: Grass<C>) {
        let d = self.gl.dim();
        self.entries[(a - 1) * d + (b - 1)] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.gl.dim();
        let mut out = Self::identity(self.gl);
        for a in 1..=d {
            for b in 1..=d {
                let mut acc = Grass::zero();
                for c in 1..=d {
                    acc = acc.add(&self.get(a, c).mul(other.get(c, b)));
                }
                out.set(a, b, acc);
            }
        }
        out
    }

    pub fn body(&self) -> Vec<Vec<C>> {
        let d = self.gl.dim();
        (1..=d).map(|a| (1..=d).map(|b| self.get(a, b).body()).collect()).collect()
    }

    /// Number of generators needed to hold every entry.
    pub fn generator_span(&self) -> usize {
        let all = self.entries.iter().flat_map(|e| e.terms().map(|(m, _)| *m)).fold(0, |a, m| a | m);
        32 - all.leading_zeros() as usize
    }

    /// Two-sided inverse via the terminating Neumann series in the soul.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.gl.dim();
        let body_inv = linalg::invert(&self.body()).ok_or(Error::Singular)?;
        let bi = Supermatrix {
            gl: self.gl,
            entries: body_inv.into_iter().flatten().map(Grass::scalar).collect(),
        };
        let mut soul = self.clone();
        for e in soul.entries.iter_mut() {
            *e = e.soul();
        }
        // X = −T_b⁻¹ T_s is nilpotent.
        let mut x = bi.mul(&soul);
        for e in x.entries.iter_mut() {
            *e = e.scale(&-C::one());
        }
        let mut acc = bi.clone();
        let mut power = bi.clone();
        for _ in 0..=self.generator_span() {
            power = x.mul(&power);
            if power.entries.iter().all(Grass::is_zero) {
                break;
            }
            for k in 0..d * d {
                acc.entries[k] = acc.entries[k].add(&power.entries[k]);
            }
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.gl)
    }
}

/// Sign relating `α(t_ab)` to the matrix entry `T_ab`: `(−1)^{[a]([a]+[b])}`.
pub fn entry_twist(gl: &Gl, a: usize, b: usize) -> bool {
    gl.odd(a) && (gl.odd(a) ^ gl.odd(b))
}

/// A superalgebra homomorphism ℂ(G) → Λ_N.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupPoint<C = Scalar> {
    pub gl: Gl,
    t: Vec<Grass<C>>,
    tbar: Vec<Grass<C>>,
}

impl<C: Coeff> GroupPoint<C> {
    fn slot(&self, a: usize, b: usize) -> usize {
        (a - 1) * self.gl.dim() + (b - 1)
    }

    /// The counit, sending `t[a,b]` and `tb[a,b]` to `δ_ab`.
    pub fn identity(gl: Gl) -> Self {
        let id = Supermatrix::<C>::identity(gl);
        GroupPoint { gl, t: id.entries.clone(), tbar: id.entries }
    }

    /// Builds the point of an even invertible supermatrix:
    /// `α(t_ab) = (−1)^{[a]([a]+[b])} T_ab`, `α(tb_ba) = (T⁻¹)_ab`.
    pub fn from_matrix(t: &Supermatrix<C>) -> Result<Self> {
        let gl = t.gl;
        let inv = t.inverse()?;
        let d = gl.dim();
        let mut p = GroupPoint { gl, t: vec![Grass::zero(); d * d], tbar: vec![Grass::zero(); d * d] };
        for a in gl.indices() {
            for b in gl.indices() {
                let k = p.slot(a, b);
                p.t[k] = t.get(a, b).scale(&sign(entry_twist(&gl, a, b)));
                let kb = p.slot(b, a);
                p.tbar[kb] = inv.get(a, b).clone();
            }
        }
        p.validate()?;
        Ok(p)
    }

    /// Builds a point directly from generator images, checking the relations.
    pub fn from_images(gl: Gl, t: Vec<Grass<C>>, tbar: Vec<Grass<C>>) -> Result<Self> {
        let p = GroupPoint { gl, t, tbar };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        for (k, r) in Cg::new(self.gl).relations().generators().iter().enumerate() {
            let v = self.evaluate(&r.map_coeffs(|c| C::from_scalar(c)));
            if C::is_exact() && !v.is_zero() {
                return Err(Error::Relation(format!("relation #{k} evaluates to a nonzero element")));
            }
        }
        Ok(())
    }

    /// The supermatrix `T` with `α(t_ab) = (−1)^{[a]([a]+[b])} T_ab`.
    pub fn matrix(&self) -> Supermatrix<C> {
        let gl = self.gl;
        let mut m = Supermatrix::identity(gl);
        for a in gl.indices() {
            for b in gl.indices() {
                m.set(a, b, self.t[self.slot(a, b)].scale(&sign(entry_twist(&gl, a, b))));
            }
        }
        m
    }

    pub fn image(&self, s: Symbol) -> &Grass<C> {
        let k = self.slot(s.row(), s.col());
        match s.tag {
            Tag::T => &self.t[k],
            Tag::TBar => &self.tbar[k],
        }
    }

    /// Evaluates a polynomial; monomials sharing a prefix share work.
    pub fn evaluate(&self, f: &Poly<C>) -> Grass<C> {
        let mut out = Grass::zero();
        let mut powers: HashMap<(Symbol, u32), Grass<C>> = HashMap::new();
        // stack[i] = product of the first i factors of the previous monomial.
        let mut prev: Vec<(Symbol, u32)> = Vec::new();
        let mut stack: Vec<Grass<C>> = vec![Grass::one()];
        for (m, c) in f.terms() {
            let fac = m.factors();
            let common = prev.iter().zip(fac).take_while(|(x, y)| x == y).count();
            stack.truncate(common + 1);
            prev.truncate(common);
            for &(s, e) in &fac[common..] {
                let top = stack.last().unwrap();
                let next = if top.is_zero() {
                    Grass::zero()
                } else {
                    let pw = powers.entry((s, e)).or_insert_with(|| {
                        let base = self.image(s);
                        let mut acc = base.clone();
                        for _ in 1..e {
                            acc = acc.mul(base);
                        }
                        acc
                    });
                    top.mul(pw)
                };
                stack.push(next);
                prev.push((s, e));
            }
            let v = stack.last().unwrap();
            for (mask, x) in v.terms() {
                out.add_term(*mask, x.clone() * c.clone());
            }
        }
        out
    }

    /// Convolution product `(αβ)(f) = Σ α(f₍₁₎) β(f₍₂₎)`; β is even.
    pub fn mul(&self, other: &Self) -> Self {
        let gl = self.gl;
        let cg = Cg::new(gl);
        let d = gl.dim();
        let mut p = GroupPoint { gl, t: vec![Grass::zero(); d * d], tbar: vec![Grass::zero(); d * d] };
        for s in Symbol::all(&gl) {
            let mut acc = Grass::zero();
            for (l, r, neg) in cg.delta_generator(s) {
                let v = self.image(l).mul(other.image(r));
                acc = if neg { acc.sub(&v) } else { acc.add(&v) };
            }
            let k = p.slot(s.row(), s.col());
            match s.tag {
                Tag::T => p.t[k] = acc,
                Tag::TBar => p.tbar[k] = acc,
            }
        }
        p
    }

    /// `α⁻¹ = α ∘ S`.
    pub fn inv(&self) -> Self {
        self.compose_symbolwise(|s| {
            let (neg, img) = Cg::antipode_symbol(&self.gl, s);
            let v = self.image(img).clone();
            if neg {
                v.scale(&-C::one())
            } else {
                v
            }
        })
    }

    /// The point `f ↦ conj(α(ω(S f)))`.
    pub fn theta_check(&self) -> Self {
        let gl = self.gl;
        self.compose_symbolwise(|s| {
            let (neg_s, si) = Cg::antipode_symbol(&gl, s);
            let (neg_w, wi) = Cg::omega_symbol(&gl, si);
            let v = self.image(wi).conj();
            if neg_s ^ neg_w {
                v.scale(&-C::one())
            } else {
                v
            }
        })
    }

    fn compose_symbolwise(&self, f: impl Fn(Symbol) -> Grass<C>) -> Self {
        let gl = self.gl;
        let d = gl.dim();
        let mut p = GroupPoint { gl, t: vec![Grass::zero(); d * d], tbar: vec![Grass::zero(); d * d] };
        for s in Symbol::all(&gl) {
            let k = p.slot(s.row(), s.col());
            let v = f(s);
            match s.tag {
                Tag::T => p.t[k] = v,
                Tag::TBar => p.tbar[k] = v,
            }
        }
        p
    }

    /// True iff `α(ω(t_ab)) = conj(α(t_ab))` for all generators.
    pub fn is_real_point(&self) -> bool {
        Symbol::all(&self.gl).into_iter().filter(|s| s.tag == Tag::T).all(|s| {
            let (neg, w) = Cg::omega_symbol(&self.gl, s);
            let lhs = self.image(w).scale(&sign(neg));
            lhs == self.image(s).conj()
        })
    }
}

/// Sampling parameters for random points.
#[derive(Clone, Copy, Debug)]
pub struct Sampling {
    /// Entries are drawn from `[-bound, bound]`.
    pub bound: i64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { bound: 1 << 20 }
    }
}

impl Sampling {
    /// Size of the smallest sample set used (odd scales exclude 0).
    pub fn set_size(&self) -> f64 {
        (2 * self.bound) as f64
    }
}

/// Random even invertible supermatrix; odd entry number `j` in row-major
/// order is a random nonzero multiple of `θ_j`.
pub fn random_supermatrix<C: Coeff>(gl: Gl, rng: &mut impl Rng, s: Sampling) -> Supermatrix<C> {
    let d = gl.dim();
    loop {
        let mut entries = Vec::with_capacity(d * d);
        let mut next_gen = 0;
        for a in gl.indices() {
            for b in gl.indices() {
                if gl.odd(a) ^ gl.odd(b) {
                    let c = loop {
                        let c = rng.gen_range(-s.bound..=s.bound);
                        if c != 0 {
                            break c;
                        }
                    };
                    entries.push(Grass::generator(next_gen).scale(&C::from_int(c)));
                    next_gen += 1;
                } else {
                    entries.push(Grass::scalar(C::from_int(rng.gen_range(-s.bound..=s.bound))));
                }
            }
        }
        let m = Supermatrix { gl, entries };
        if linalg::invert(&m.body()).is_some() {
            return m;
        }
    }
}

/// Random body-only block-diagonal unitary matrix over ℚ(i).
pub fn random_unitary(gl: Gl, rng: &mut impl Rng) -> Supermatrix<Scalar> {
    use crate::scalar::{gaussian, rational};
    let d = gl.dim();
    let phases = [
        gaussian(rational(1, 1), rational(0, 1)),
        gaussian(rational(-1, 1), rational(0, 1)),
        gaussian(rational(0, 1), rational(1, 1)),
        gaussian(rational(0, 1), rational(-1, 1)),
        gaussian(rational(3, 5), rational(4, 5)),
        gaussian(rational(-5, 13), rational(12, 13)),
    ];
    let mut u: Vec<Vec<Scalar>> =
        (0..d).map(|i| (0..d).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    for _ in 0..3 {
        for i in 0..d {
            let ph = phases[rng.gen_range(0..phases.len())].clone();
            for r in 0..d {
                u[r][i] = u[r][i].clone() * ph.clone();
            }
        }
        // Real rotations inside a parity block.
        for i in 0..d.saturating_sub(1) {
            if gl.odd(i + 1) != gl.odd(i + 2) || rng.gen_bool(0.5) {
                continue;
            }
            let (c, s) = (Scalar::from_ratio(3, 5), Scalar::from_ratio(4, 5));
            for r in 0..d {
                let (x, y) = (u[r][i].clone(), u[r][i + 1].clone());
                u[r][i] = c.clone() * x.clone() - s.clone() * y.clone();
                u[r][i + 1] = s.clone() * x + c.clone() * y;
            }
        }
    }
    Supermatrix { gl, entries: u.into_iter().flatten().map(Grass::scalar).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gl(m: usize, n: usize) -> Gl {
        Gl::new(m, n).unwrap()
    }

    #[test]
    fn grassmann_signs() {
        let t1 = Grass::<Scalar>::generator(0);
        let t2 = Grass::<Scalar>::generator(1);
        assert_eq!(t1.mul(&t2), t2.mul(&t1).scale(&-Scalar::one()));
        assert!(t1.mul(&t1).is_zero());
        assert_eq!(t1.mul(&t2).conj(), t2.mul(&t1));
    }

    #[test]
    fn inverse_examples() {
        let g = gl(1, 1);
        assert!(Supermatrix::<Scalar>::identity(g).inverse().unwrap().is_identity());
        let mut d = Supermatrix::<Scalar>::identity(g);
        d.set(1, 1, Grass::scalar(Scalar::from_int(2)));
        d.set(2, 2, Grass::scalar(Scalar::from_int(3)));
        let inv = d.inverse().unwrap();
        assert_eq!(inv.get(1, 1).body(), Scalar::from_ratio(1, 2));
        assert_eq!(inv.get(2, 2).body(), Scalar::from_ratio(1, 3));
        let mut u = Supermatrix::<Scalar>::identity(g);
        u.set(1, 2, Grass::generator(0));
        let inv = u.inverse().unwrap();
        assert_eq!(*inv.get(1, 2), Grass::generator(0).scale(&-Scalar::one()));
        let mut s = Supermatrix::<Scalar>::identity(g);
        s.set(1, 1, Grass::zero());
        assert_eq!(s.inverse(), Err(Error::Singular));
    }

    #[test]
    fn random_inverse_is_two_sided() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = gl(2, 1);
        let t = random_supermatrix::<Scalar>(g, &mut rng, Sampling { bound: 9 });
        let inv = t.inverse().unwrap();
        assert!(t.mul(&inv).is_identity());
        assert!(inv.mul(&t).is_identity());
    }

    #[test]
    fn identity_point_is_counit() {
        let g = gl(2, 1);
        let id = GroupPoint::<Scalar>::identity(g);
        assert_eq!(GroupPoint::from_matrix(&Supermatrix::identity(g)).unwrap(), id);
        assert!(id.is_real_point());
        assert_eq!(id.inv(), id);
    }

    #[test]
    fn diagonal_real_points() {
        let g = gl(1, 1);
        let mut d = Supermatrix::<Scalar>::identity(g);
        d.set(1, 1, Grass::scalar(crate::scalar::imag_unit()));
        d.set(2, 2, Grass::scalar(-Scalar::one()));
        assert!(GroupPoint::from_matrix(&d).unwrap().is_real_point());
        d.set(1, 1, Grass::scalar(Scalar::from_int(2)));
        assert!(!GroupPoint::from_matrix(&d).unwrap().is_real_point());
    }

    #[test]
    fn body_only_product_is_matrix_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = gl(2, 1);
        let a = random_unitary(g, &mut rng);
        let b = random_unitary(g, &mut rng);
        let pa = GroupPoint::from_matrix(&a).unwrap();
        let pb = GroupPoint::from_matrix(&b).unwrap();
        assert_eq!(pa.mul(&pb).matrix(), a.mul(&b));
        let _ = Scalar::zero();
    }

    #[test]
    fn convolution_matches_matrix_product_with_soul() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (m, n) in [(1, 1), (2, 1)] {
            let g = gl(m, n);
            let a = random_supermatrix::<Scalar>(g, &mut rng, Sampling { bound: 50 });
            let b = random_supermatrix::<Scalar>(g, &mut rng, Sampling { bound: 50 });
            let pa = GroupPoint::from_matrix(&a).unwrap();
            let pb = GroupPoint::from_matrix(&b).unwrap();
            assert_eq!(pa.mul(&pb), GroupPoint::from_matrix(&a.mul(&b)).unwrap());
            assert_eq!(pa.mul(&pa.inv()), GroupPoint::identity(g));
        }
    }

    #[test]
    fn untwisted_entries_break_the_relations() {
        // α(t_ab) = T_ab with α(tb_ba) = (−1)^{[a][b]+[a]} (T⁻¹)_ab is not a
        // homomorphism once odd entries are present.
        let g = gl(1, 1);
        let mut t = Supermatrix::<Scalar>::identity(g);
        t.set(1, 2, Grass::generator(0));
        t.set(2, 1, Grass::generator(1));
        let inv = t.inverse().unwrap();
        let d = g.dim();
        let mut ti = vec![Grass::zero(); d * d];
        let mut tb = vec![Grass::zero(); d * d];
        for a in 1..=d {
            for b in 1..=d {
                ti[(a - 1) * d + b - 1] = t.get(a, b).clone();
                let s = (g.odd(a) && g.odd(b)) ^ g.odd(a);
                tb[(b - 1) * d + a - 1] = inv.get(a, b).scale(&sign(s));
            }
        }
        assert!(matches!(GroupPoint::from_images(g, ti, tb), Err(Error::Relation(_))));
    }
}
