//! The enveloping superalgebra U(gl(m|n)) in PBW normal form.
//!
//! Words are stored weakly increasing in the (row, col) order of letters,
//! with no repeated odd letter. Straightening uses the supercommutator and
//! is memoized per [`Ugl`] context.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{Gl, Parity};
use crate::scalar::{sign, write_combination, Coeff, Scalar};

/// Default bound on the length of enveloping-algebra words.
pub const DEFAULT_WORD_CAP: usize = 8;

/// Basis letter `E[row,col]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub row: u8,
    pub col: u8,
    pub odd: bool,
}

impl Letter {
    pub fn new(gl: &Gl, row: usize, col: usize) -> Self {
        Letter { row: row as u8, col: col as u8, odd: gl.odd(row) ^ gl.odd(col) }
    }
    pub fn row(&self) -> usize {
        self.row as usize
    }
    pub fn col(&self) -> usize {
        self.col as usize
    }
    pub fn parity(&self) -> Parity {
        Parity::from_odd(self.odd)
    }
    /// All `(m+n)²` letters in PBW order.
    pub fn all(gl: &Gl) -> Vec<Letter> {
        let mut out = Vec::new();
        for a in gl.indices() {
            for b in gl.indices() {
                out.push(Letter::new(gl, a, b));
            }
        }
        out
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.row, self.col)
    }
}

pub type Word = Vec<Letter>;

pub fn word_is_odd(w: &[Letter]) -> bool {
    w.iter().filter(|l| l.odd).count() % 2 == 1
}

fn word_string(w: &[Letter]) -> String {
    w.iter().map(Letter::to_string).collect::<Vec<_>>().join("*")
}

/// Element of U(g): PBW words with coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UElement<C = Scalar> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for UElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> UElement<C> {
    pub fn zero() -> Self {
        UElement { terms: BTreeMap::new() }
    }
    pub fn one() -> Self {
        Self::scalar(C::one())
    }
    pub fn scalar(c: C) -> Self {
        let mut u = Self::zero();
        u.add_term(Vec::new(), c);
        u
    }
    pub fn letter(x: Letter) -> Self {
        let mut u = Self::zero();
        u.add_term(vec![x], C::one());
        u
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
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
    pub fn coeff(&self, w: &[Letter]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
    /// Parity if homogeneous.
    pub fn homogeneous_parity(&self) -> Option<bool> {
        let mut seen = None;
        for w in self.terms.keys() {
            let p = word_is_odd(w);
            if seen.is_some_and(|q| q != p) {
                return None;
            }
            seen = Some(p);
        }
        Some(seen.unwrap_or(false))
    }

    /// Adds a term whose word is already in PBW form.
    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add_scaled(&mut self, other: &UElement<C>, c: &C) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }
}

impl<C: Coeff> std::ops::Add for &UElement<C> {
    type Output = UElement<C>;
    fn add(self, rhs: &UElement<C>) -> UElement<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coeff> std::ops::Sub for &UElement<C> {
    type Output = UElement<C>;
    fn sub(self, rhs: &UElement<C>) -> UElement<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one());
        out
    }
}

impl fmt::Display for UElement<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter().map(|(w, c)| (word_string(w), c)))
    }
}

/// Element of U(g) ⊗ U(g).
pub type UTensor2<C = Scalar> = BTreeMap<(Word, Word), C>;

fn add_to<K: Ord, C: Coeff>(map: &mut BTreeMap<K, C>, k: K, c: C) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(k).or_insert_with(C::zero);
    *e = e.clone() + c;
}

/// Drops zero coefficients left behind by cancellation.
pub fn prune<K: Ord, C: Coeff>(map: &mut BTreeMap<K, C>) {
    map.retain(|_, v| !v.is_zero());
}

type NormalForm = Arc<Vec<(Word, i64)>>;

/// Context for computations in U(gl(m|n)).
#[derive(Debug)]
pub struct Ugl {
    gl: Gl,
    word_cap: usize,
    cache: Mutex<HashMap<Word, NormalForm>>,
}

impl Clone for Ugl {
    fn clone(&self) -> Self {
        Ugl { gl: self.gl, word_cap: self.word_cap, cache: Mutex::new(HashMap::new()) }
    }
}

impl Ugl {
    pub fn new(gl: Gl) -> Self {
        Self::with_cap(gl, DEFAULT_WORD_CAP)
    }

    pub fn with_cap(gl: Gl, word_cap: usize) -> Self {
        Ugl { gl, word_cap, cache: Mutex::new(HashMap::new()) }
    }

    pub fn gl(&self) -> &Gl {
        &self.gl
    }

    pub fn word_cap(&self) -> usize {
        self.word_cap
    }

    pub fn letter(&self, row: usize, col: usize) -> Result<Letter> {
        self.gl.check(row)?;
        self.gl.check(col)?;
        Ok(Letter::new(&self.gl, row, col))
    }

    /// `[E_ab, E_cd] = δ_bc E_ad − (−1)^{([a]+[b])([c]+[d])} δ_ad E_cb`.
    pub fn bracket(&self, x: Letter, y: Letter) -> Vec<(Letter, i64)> {
        let mut out: Vec<(Letter, i64)> = Vec::new();
        let mut push = |l: Letter, c: i64| {
            if let Some(e) = out.iter_mut().find(|(k, _)| *k == l) {
                e.1 += c;
            } else {
                out.push((l, c));
            }
        };
        if x.col == y.row {
            push(Letter::new(&self.gl, x.row(), y.col()), 1);
        }
        if x.row == y.col {
            push(Letter::new(&self.gl, y.row(), x.col()), if x.odd && y.odd { 1 } else { -1 });
        }
        out.retain(|(_, c)| *c != 0);
        out
    }

    pub fn supercommutator(&self, x: Letter, y: Letter) -> UElement {
        let mut u = UElement::zero();
        for (l, c) in self.bracket(x, y) {
            u.add_term(vec![l], Scalar::from_int(c));
        }
        u
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len > self.word_cap {
            Err(Error::Cap { what: "word degree", value: len, cap: self.word_cap })
        } else {
            Ok(())
        }
    }

    fn normal_form(&self, w: &[Letter]) -> NormalForm {
        if let Some(nf) = self.cache.lock().unwrap().get(w) {
            return nf.clone();
        }
        let descent = (0..w.len().saturating_sub(1))
            .find(|&i| w[i] > w[i + 1] || (w[i] == w[i + 1] && w[i].odd));
        let nf: NormalForm = match descent {
            None => Arc::new(vec![(w.to_vec(), 1)]),
            Some(i) if w[i] == w[i + 1] => {
                // g² = ½[g,g], and the self-bracket of an odd letter vanishes.
                debug_assert!(self.bracket(w[i], w[i]).is_empty());
                Arc::new(Vec::new())
            }
            Some(i) => {
                let (x, y) = (w[i], w[i + 1]);
                let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
                let mut swapped = w.to_vec();
                swapped.swap(i, i + 1);
                let s = if x.odd && y.odd { -1 } else { 1 };
                for (v, c) in self.normal_form(&swapped).iter() {
                    *acc.entry(v.clone()).or_default() += s * c;
                }
                for (z, k) in self.bracket(x, y) {
                    let mut shorter = w[..i].to_vec();
                    shorter.push(z);
                    shorter.extend_from_slice(&w[i + 2..]);
                    for (v, c) in self.normal_form(&shorter).iter() {
                        *acc.entry(v.clone()).or_default() += k * c;
                    }
                }
                Arc::new(acc.into_iter().filter(|(_, c)| *c != 0).collect())
            }
        };
        self.cache.lock().unwrap().insert(w.to_vec(), nf.clone());
        nf
    }

    /// Straightens an arbitrary word into PBW form.
    pub fn pbw_normalize<C: Coeff>(&self, w: &[Letter]) -> Result<UElement<C>> {
        self.check_len(w.len())?;
        let mut u = UElement::zero();
        for (v, c) in self.normal_form(w).iter() {
            u.add_term(v.clone(), C::from_int(*c));
        }
        Ok(u)
    }

    /// Adds `c · w` to `out`, straightening `w` first.
    pub fn add_word<C: Coeff>(&self, out: &mut UElement<C>, w: &[Letter], c: &C) -> Result<()> {
        self.check_len(w.len())?;
        for (v, k) in self.normal_form(w).iter() {
            out.add_term(v.clone(), c.clone() * C::from_int(*k));
        }
        Ok(())
    }

    pub fn mul<C: Coeff>(&self, a: &UElement<C>, b: &UElement<C>) -> Result<UElement<C>> {
        let mut out = UElement::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                self.add_word(&mut out, &w, &(ca.clone() * cb.clone()))?;
            }
        }
        Ok(out)
    }

    pub fn word<C: Coeff>(&self, letters: &[Letter]) -> Result<UElement<C>> {
        self.pbw_normalize(letters)
    }

    /// Coproduct; letters are primitive.
    pub fn coproduct<C: Coeff>(&self, u: &UElement<C>) -> UTensor2<C> {
        let mut out = UTensor2::new();
        for (w, c) in u.terms() {
            let k = w.len();
            for mask in 0u32..(1u32 << k) {
                // Bit i set: letter i goes to the right factor.
                let mut neg = false;
                let mut right_odd = false;
                let (mut l, mut r) = (Vec::new(), Vec::new());
                for (i, x) in w.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        r.push(*x);
                        right_odd ^= x.odd;
                    } else {
                        l.push(*x);
                        if x.odd && right_odd {
                            neg = !neg;
                        }
                    }
                }
                let v = if neg { -c.clone() } else { c.clone() };
                add_to(&mut out, (l, r), v);
            }
        }
        prune(&mut out);
        out
    }

    pub fn counit<C: Coeff>(&self, u: &UElement<C>) -> C {
        u.coeff(&[])
    }

    /// Antipode: `S(X) = −X`, extended as a graded anti-morphism.
    pub fn antipode<C: Coeff>(&self, u: &UElement<C>) -> Result<UElement<C>> {
        let mut out = UElement::zero();
        for (w, c) in u.terms() {
            let odd = w.iter().filter(|x| x.odd).count();
            let neg = (w.len() + odd * odd.saturating_sub(1) / 2) % 2 == 1;
            let rev: Word = w.iter().rev().copied().collect();
            self.add_word(&mut out, &rev, &(sign::<C>(neg) * c.clone()))?;
        }
        Ok(out)
    }

    /// Conjugate-linear anti-automorphism `E_ab ↦ E_ba`.
    pub fn theta<C: Coeff>(&self, u: &UElement<C>) -> Result<UElement<C>> {
        let mut out = UElement::zero();
        for (w, c) in u.terms() {
            let rev: Word = w.iter().rev().map(|x| Letter::new(&self.gl, x.col(), x.row())).collect();
            self.add_word(&mut out, &rev, &c.conj())?;
        }
        Ok(out)
    }

    /// Multiplication on U(g) ⊗ U(g) with the graded product rule.
    pub fn mul_tensor2<C: Coeff>(&self, a: &UTensor2<C>, b: &UTensor2<C>) -> Result<UTensor2<C>> {
        let mut out = UTensor2::new();
        for ((a1, a2), ca) in a {
            for ((b1, b2), cb) in b {
                let neg = word_is_odd(a2) && word_is_odd(b1);
                let l = self.mul(&pure::<C>(a1), &pure(b1))?;
                let r = self.mul(&pure::<C>(a2), &pure(b2))?;
                let c = sign::<C>(neg) * ca.clone() * cb.clone();
                for (wl, cl) in l.terms() {
                    for (wr, cr) in r.terms() {
                        add_to(&mut out, (wl.clone(), wr.clone()), c.clone() * cl.clone() * cr.clone());
                    }
                }
            }
        }
        prune(&mut out);
        Ok(out)
    }

    /// `Z = Σ_a E_aa`.
    pub fn z_central<C: Coeff>(&self) -> UElement<C> {
        let mut u = UElement::zero();
        for a in self.gl.indices() {
            u.add_term(vec![Letter::new(&self.gl, a, a)], C::one());
        }
        u
    }

    /// Quadratic Casimir `Σ_{a,b} (−1)^{[b]} E_ab E_ba`.
    pub fn casimir<C: Coeff>(&self) -> UElement<C> {
        let mut u = UElement::zero();
        for a in self.gl.indices() {
            for b in self.gl.indices() {
                let w = [Letter::new(&self.gl, a, b), Letter::new(&self.gl, b, a)];
                self.add_word(&mut u, &w, &sign(self.gl.odd(b))).expect("degree 2");
            }
        }
        u
    }

    /// `∇² = −Σ_{i<m+n} E_{i,m+n} E_{m+n,i}`.
    pub fn laplacian<C: Coeff>(&self) -> UElement<C> {
        let top = self.gl.dim();
        let mut u = UElement::zero();
        for i in 1..top {
            let w = [Letter::new(&self.gl, i, top), Letter::new(&self.gl, top, i)];
            self.add_word(&mut u, &w, &-C::one()).expect("degree 2");
        }
        u
    }

    /// All PBW words of length at most `d`, shortest first.
    pub fn pbw_words(&self, d: usize) -> Vec<Word> {
        let letters = Letter::all(&self.gl);
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..d {
            let mut next = Vec::new();
            for w in &frontier {
                for &x in &letters {
                    let ok = match w.last() {
                        None => true,
                        Some(&y) => y < x || (y == x && !x.odd),
                    };
                    if ok {
                        let mut v: Word = w.clone();
                        v.push(x);
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

fn pure<C: Coeff>(w: &[Letter]) -> UElement<C> {
    let mut u = UElement::zero();
    u.add_term(w.to_vec(), C::one());
    u
}

/// Tensor factor type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    V,
    VStar,
}

/// Vector in a tensor product of copies of `V` and `V*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector<C = Scalar> {
    pub shape: Vec<Factor>,
    comps: BTreeMap<Vec<u8>, C>,
}

impl<C: Coeff> TensorVector<C> {
    pub fn zero(shape: Vec<Factor>) -> Self {
        TensorVector { shape, comps: BTreeMap::new() }
    }

    /// Shape `V^{⊗k} ⊗ V*^{⊗ℓ}`.
    pub fn mixed_shape(k: usize, l: usize) -> Vec<Factor> {
        let mut s = vec![Factor::V; k];
        s.extend(std::iter::repeat_n(Factor::VStar, l));
        s
    }

    pub fn basis(shape: Vec<Factor>, idx: &[usize]) -> Result<Self> {
        if idx.len() != shape.len() {
            return Err(Error::Shape(format!("{} indices for {} factors", idx.len(), shape.len())));
        }
        let mut v = Self::zero(shape);
        v.add(idx.iter().map(|&a| a as u8).collect(), C::one());
        Ok(v)
    }

    pub fn add(&mut self, idx: Vec<u8>, c: C) {
        add_to(&mut self.comps, idx, c);
        prune(&mut self.comps);
    }

    pub fn get(&self, idx: &[u8]) -> C {
        self.comps.get(idx).cloned().unwrap_or_else(C::zero)
    }

    pub fn comps(&self) -> impl Iterator<Item = (&Vec<u8>, &C)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.shape.clone());
        for (k, v) in &self.comps {
            add_to(&mut out.comps, k.clone(), v.clone() * c.clone());
        }
        prune(&mut out.comps);
        out
    }

    pub fn add_vector(&mut self, other: &Self, c: &C) {
        for (k, v) in &other.comps {
            add_to(&mut self.comps, k.clone(), v.clone() * c.clone());
        }
        prune(&mut self.comps);
    }
}

/// Action of one letter on a single factor: returns (index, coefficient).
pub fn letter_on_factor<C: Coeff>(gl: &Gl, x: Letter, f: Factor, c: usize) -> Option<(usize, C)> {
    match f {
        // E_ab v_c = δ_bc v_a
        Factor::V => (x.col() == c).then(|| (x.row(), C::one())),
        // E_ab v̄_c = −(−1)^{[a]+[a][b]} δ_ac v̄_b
        Factor::VStar => (x.row() == c).then(|| {
            let a = gl.odd(x.row());
            let b = gl.odd(x.col());
            (x.col(), -sign::<C>(a ^ (a && b)))
        }),
    }
}

/// Action of a letter on a tensor vector, through the iterated coproduct.
pub fn act_letter<C: Coeff>(gl: &Gl, x: Letter, w: &TensorVector<C>) -> TensorVector<C> {
    let mut out = TensorVector::zero(w.shape.clone());
    for (idx, c) in &w.comps {
        let mut passed_odd = false;
        for (s, &f) in w.shape.iter().enumerate() {
            let a = idx[s] as usize;
            if let Some((b, k)) = letter_on_factor::<C>(gl, x, f, a) {
                let mut j = idx.clone();
                j[s] = b as u8;
                let v = sign::<C>(x.odd && passed_odd) * k * c.clone();
                add_to(&mut out.comps, j, v);
            }
            passed_odd ^= gl.odd(a);
        }
    }
    prune(&mut out.comps);
    out
}

/// Module action of U(g); words act letter by letter from the right.
pub fn act<C: Coeff>(gl: &Gl, u: &UElement<C>, w: &TensorVector<C>) -> TensorVector<C> {
    let mut out = TensorVector::zero(w.shape.clone());
    for (word, c) in u.terms() {
        let mut v = w.clone();
        for &x in word.iter().rev() {
            v = act_letter(gl, x, &v);
            if v.is_zero() {
                break;
            }
        }
        out.add_vector(&v, c);
    }
    out
}
