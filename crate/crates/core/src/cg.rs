//! The function superalgebra ℂ(G) = ℂ[X, X̄]/J.
//!
//! Elements are represented by polynomials in `t[a,b]`, `tb[a,b]`;
//! representatives are not canonical, so equality goes through
//! [`Cg::is_zero_mod_j`]. Two oracles are provided: evaluation at random
//! supergroup points over Λ_{2mn} (nonzero verdicts are proofs) and the exact
//! pairing with the image of U(g) in a finite tensor module.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::Gl;
use crate::grassmann::{random_supermatrix, GroupPoint, Sampling};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::{sign, Coeff, Rational, Scalar};
use crate::superpoly::{apply_star, Monomial, Poly, StarSpec, Symbol, Tag};
use crate::ugl::{act_letter, letter_on_factor, word_is_odd, Factor, Letter, TensorVector, UElement, UTensor2};

/// Element of ℂ(G) ⊗ ℂ(G), with the graded product.
pub type CgTensor2<C = Scalar> = BTreeMap<(Monomial, Monomial), C>;
/// Element of ℂ(G)^{⊗3}.
pub type CgTensor3<C = Scalar> = BTreeMap<(Monomial, Monomial, Monomial), C>;

fn add_to<K: Ord, C: Coeff>(map: &mut BTreeMap<K, C>, k: K, c: C) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(k).or_insert_with(C::zero);
    *e = e.clone() + c;
}

fn prune<K: Ord, C: Coeff>(mut map: BTreeMap<K, C>) -> BTreeMap<K, C> {
    map.retain(|_, v| !v.is_zero());
    map
}

/// Generators of the ideal J, in the order (first family, a, b) then
/// (second family, a, b).
#[derive(Clone, Debug)]
pub struct RelationSet {
    gens: Vec<Poly<Scalar>>,
}

impl RelationSet {
    pub fn generators(&self) -> &[Poly<Scalar>] {
        &self.gens
    }
}

/// Context for ℂ(G) over gl(m|n).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cg {
    gl: Gl,
}

impl Cg {
    pub fn new(gl: Gl) -> Self {
        Cg { gl }
    }

    pub fn gl(&self) -> &Gl {
        &self.gl
    }

    pub fn t<C: Coeff>(&self, a: usize, b: usize) -> Result<Poly<C>> {
        self.gl.check(a)?;
        self.gl.check(b)?;
        Ok(Poly::symbol(Symbol::t(&self.gl, a, b)))
    }

    pub fn tbar<C: Coeff>(&self, a: usize, b: usize) -> Result<Poly<C>> {
        self.gl.check(a)?;
        self.gl.check(b)?;
        Ok(Poly::symbol(Symbol::tbar(&self.gl, a, b)))
    }

    /// The `2(m+n)²` generators of J.
    pub fn relations(&self) -> RelationSet {
        let g = &self.gl;
        let mut gens = Vec::new();
        for a in g.indices() {
            for b in g.indices() {
                let mut p = Poly::constant(if a == b { -Scalar::one() } else { Scalar::zero() });
                for c in g.indices() {
                    let s = (g.odd(c) && g.odd(a)) ^ g.odd(b);
                    p.add_scaled(&Poly::product(&[Symbol::t(g, a, c), Symbol::tbar(g, b, c)]), &sign(s));
                }
                gens.push(p);
            }
        }
        for a in g.indices() {
            for b in g.indices() {
                let mut p = Poly::constant(if a == b { -Scalar::one() } else { Scalar::zero() });
                for c in g.indices() {
                    let s = (g.odd(b) && g.odd(c)) ^ g.odd(c);
                    p.add_scaled(&Poly::product(&[Symbol::tbar(g, c, a), Symbol::t(g, c, b)]), &sign(s));
                }
                gens.push(p);
            }
        }
        RelationSet { gens }
    }

    /// `Δ(x_ab) = Σ_c (−1)^{([c]+[a])([c]+[b])} x_ac ⊗ x_cb` as
    /// (left, right, negative) triples.
    pub fn delta_generator(&self, s: Symbol) -> Vec<(Symbol, Symbol, bool)> {
        let g = &self.gl;
        let (a, b) = (s.row(), s.col());
        g.indices()
            .map(|c| {
                let neg = (g.odd(c) ^ g.odd(a)) && (g.odd(c) ^ g.odd(b));
                (Symbol::new(g, s.tag, a, c), Symbol::new(g, s.tag, c, b), neg)
            })
            .collect()
    }

    /// Product in ℂ(G) ⊗ ℂ(G): `(a⊗b)(c⊗d) = (−1)^{[b][c]} ac ⊗ bd`.
    pub fn mul_tensor2<C: Coeff>(&self, x: &CgTensor2<C>, y: &CgTensor2<C>) -> CgTensor2<C> {
        let mut out = CgTensor2::new();
        for ((a, b), cx) in x {
            for ((c, d), cy) in y {
                let (Some((n1, ac)), Some((n2, bd))) = (a.mul(c), b.mul(d)) else { continue };
                let neg = n1 ^ n2 ^ (b.is_odd() && c.is_odd());
                add_to(&mut out, (ac, bd), sign::<C>(neg) * cx.clone() * cy.clone());
            }
        }
        prune(out)
    }

    fn delta_symbol<C: Coeff>(&self, s: Symbol) -> CgTensor2<C> {
        let mut out = CgTensor2::new();
        for (l, r, neg) in self.delta_generator(s) {
            add_to(&mut out, (Monomial::symbol(l), Monomial::symbol(r)), sign::<C>(neg));
        }
        out
    }

    /// Coproduct, extended as a superalgebra morphism.
    pub fn delta<C: Coeff>(&self, f: &Poly<C>) -> CgTensor2<C> {
        let mut cache: HashMap<Symbol, CgTensor2<C>> = HashMap::new();
        let mut out = CgTensor2::new();
        for (m, c) in f.terms() {
            let mut acc: CgTensor2<C> = [((Monomial::one(), Monomial::one()), c.clone())].into_iter().collect();
            for s in m.letters() {
                let d = cache.entry(s).or_insert_with(|| self.delta_symbol(s));
                acc = self.mul_tensor2(&acc, d);
            }
            for (k, v) in acc {
                add_to(&mut out, k, v);
            }
        }
        prune(out)
    }

    /// `(Δ ⊗ id)Δ(f)`.
    pub fn delta_left<C: Coeff>(&self, f: &Poly<C>) -> CgTensor3<C> {
        let mut out = CgTensor3::new();
        for ((a, b), c) in self.delta(f) {
            for ((a1, a2), k) in self.delta(&Poly::monomial(a, C::one())) {
                add_to(&mut out, (a1, a2, b.clone()), c.clone() * k);
            }
        }
        prune(out)
    }

    /// `(id ⊗ Δ)Δ(f)`.
    pub fn delta_right<C: Coeff>(&self, f: &Poly<C>) -> CgTensor3<C> {
        let mut out = CgTensor3::new();
        for ((a, b), c) in self.delta(f) {
            for ((b1, b2), k) in self.delta(&Poly::monomial(b, C::one())) {
                add_to(&mut out, (a.clone(), b1, b2), c.clone() * k);
            }
        }
        prune(out)
    }

    /// `S(t_ab) = (−1)^{[a][b]+[a]} tb_ba`, `S(tb_ab) = (−1)^{[a][b]+[b]} t_ba`.
    pub fn antipode_symbol(gl: &Gl, s: Symbol) -> (bool, Symbol) {
        let (a, b) = (s.row(), s.col());
        let ab = gl.odd(a) && gl.odd(b);
        match s.tag {
            Tag::T => (ab ^ gl.odd(a), Symbol::tbar(gl, b, a)),
            Tag::TBar => (ab ^ gl.odd(b), Symbol::t(gl, b, a)),
        }
    }

    /// `ω(t_ab) = (−1)^{[b]([a]+[b])} tb_ab` and symmetrically.
    pub fn omega_symbol(gl: &Gl, s: Symbol) -> (bool, Symbol) {
        let (a, b) = (s.row(), s.col());
        let neg = gl.odd(b) && (gl.odd(a) ^ gl.odd(b));
        let tag = match s.tag {
            Tag::T => Tag::TBar,
            Tag::TBar => Tag::T,
        };
        (neg, Symbol::new(gl, tag, a, b))
    }

    /// Antipode. On the supercommutative algebra the graded anti-morphism
    /// rule `S(fg) = (−1)^{[f][g]} S(g)S(f)` is the substitution morphism.
    pub fn antipode<C: Coeff>(&self, f: &Poly<C>) -> Poly<C> {
        f.substitute(|s| {
            let (neg, img) = Self::antipode_symbol(&self.gl, s);
            Poly::monomial(Monomial::symbol(img), sign(neg))
        })
    }

    /// `ε(t_ab) = ε(tb_ab) = δ_ab`.
    pub fn counit<C: Coeff>(&self, f: &Poly<C>) -> C {
        f.substitute(|s| if s.row == s.col { Poly::one() } else { Poly::zero() }).constant_term()
    }

    pub fn omega_spec<C: Coeff>(&self) -> StarSpec<C> {
        let images = Symbol::all(&self.gl)
            .into_iter()
            .map(|s| {
                let (neg, w) = Self::omega_symbol(&self.gl, s);
                (s, Poly::monomial(Monomial::symbol(w), sign(neg)))
            })
            .collect();
        StarSpec { images }
    }

    /// The ∗-structure ω: conjugate-linear, anti-multiplicative.
    pub fn omega<C: Coeff>(&self, f: &Poly<C>) -> Poly<C> {
        apply_star(&self.omega_spec(), f)
    }

    /// `(ω⋆ω)(a⊗b) = (−1)^{[a][b]} ω(a) ⊗ ω(b)`.
    pub fn omega_star_omega<C: Coeff>(&self, x: &CgTensor2<C>) -> CgTensor2<C> {
        let mut out = CgTensor2::new();
        for ((a, b), c) in x {
            let wa = self.omega(&Poly::monomial(a.clone(), C::one()));
            let wb = self.omega(&Poly::monomial(b.clone(), C::one()));
            let s = sign::<C>(a.is_odd() && b.is_odd()) * c.conj();
            for (ma, ca) in wa.terms() {
                for (mb, cb) in wb.terms() {
                    add_to(&mut out, (ma.clone(), mb.clone()), s.clone() * ca.clone() * cb.clone());
                }
            }
        }
        prune(out)
    }

    /// `⟨g₁⋯g_k, w⟩` for one monomial and one word, through the tensor module
    /// matching the factors of the monomial.
    pub fn pair_monomial_word<C: Coeff>(&self, m: &Monomial, w: &[Letter]) -> C {
        let letters = m.letters();
        let shape: Vec<Factor> = letters.iter().map(|s| factor_of(s.tag)).collect();
        let mut v = TensorVector::<C>::zero(shape);
        v.add(letters.iter().map(|s| s.col).collect(), C::one());
        for &x in w.iter().rev() {
            v = act_letter(&self.gl, x, &v);
            if v.is_zero() {
                return C::zero();
            }
        }
        let rows: Vec<u8> = letters.iter().map(|s| s.row).collect();
        v.get(&rows) * sign::<C>(monomial_pairing_sign(&self.gl, &letters))
    }

    /// The dual pairing `⟨f, u⟩`.
    pub fn pair<C: Coeff>(&self, f: &Poly<C>, u: &UElement<C>) -> C {
        let mut acc = C::zero();
        for (m, c) in f.terms() {
            for (w, k) in u.terms() {
                acc = acc + c.clone() * k.clone() * self.pair_monomial_word(m, w);
            }
        }
        acc
    }

    /// Graded pairing `⟨f⊗g, a⊗b⟩ = (−1)^{[g][a]} ⟨f,a⟩⟨g,b⟩`.
    pub fn pair_tensor2<C: Coeff>(&self, x: &CgTensor2<C>, y: &UTensor2<C>) -> C {
        let mut acc = C::zero();
        for ((f, g), cx) in x {
            for ((a, b), cy) in y {
                let p = self.pair_monomial_word::<C>(f, a) * self.pair_monomial_word::<C>(g, b);
                if p.is_zero() {
                    continue;
                }
                let s = sign::<C>(g.is_odd() && word_is_odd(a));
                acc = acc + s * cx.clone() * cy.clone() * p;
            }
        }
        acc
    }

    /// Pairing computed by peeling one generator at a time through the
    /// coproduct of `u`; independent of the tensor-module route.
    pub fn pair_recursive(&self, f: &Poly<Scalar>, u: &UElement<Scalar>, ugl: &crate::ugl::Ugl) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in f.terms() {
            acc += c.clone() * self.pair_letters_recursive(&m.letters(), u, ugl);
        }
        acc
    }

    fn pair_letters_recursive(&self, letters: &[Symbol], u: &UElement<Scalar>, ugl: &crate::ugl::Ugl) -> Scalar {
        let Some((first, rest)) = letters.split_first() else { return ugl.counit(u) };
        let rest_odd = rest.iter().filter(|s| s.odd).count() % 2 == 1;
        let mut acc = Scalar::zero();
        for ((w1, w2), c) in ugl.coproduct(u) {
            let head = self.generator_on_word(*first, &w1);
            if head.is_zero() {
                continue;
            }
            let mut tail = UElement::zero();
            tail.add_term(w2, Scalar::one());
            let v = self.pair_letters_recursive(rest, &tail, ugl);
            acc += sign::<Scalar>(rest_odd && word_is_odd(&w1)) * c * head * v;
        }
        acc
    }

    /// Matrix entry `(row, col)` of a word in the vector or dual module.
    fn generator_on_word(&self, s: Symbol, w: &[Letter]) -> Scalar {
        let f = factor_of(s.tag);
        let mut cur = Some((s.col(), Scalar::one()));
        for &x in w.iter().rev() {
            cur = cur.and_then(|(i, c)| letter_on_factor::<Scalar>(&self.gl, x, f, i).map(|(j, k)| (j, c * k)));
        }
        match cur {
            Some((i, c)) if i == s.row() => c,
            _ => Scalar::zero(),
        }
    }

    /// Decides whether `f ∈ J`.
    pub fn is_zero_mod_j(&self, f: &Poly<Scalar>, cfg: &OracleConfig) -> Result<Verdict> {
        match cfg.mode {
            Mode::Generic => self.generic_point_test(f, cfg),
            Mode::Pairing => self.pairing_test(f, cfg),
        }
    }

    /// Convenience: `Ok(true)` iff the oracle returns a zero verdict.
    pub fn is_zero(&self, f: &Poly<Scalar>, cfg: &OracleConfig) -> Result<bool> {
        Ok(self.is_zero_mod_j(f, cfg)?.is_zero())
    }

    /// The random point used for trial `trial` of seed `seed`.
    pub fn sample_point(&self, seed: u64, trial: u64, sampling: Sampling) -> Result<Arc<GroupPoint<Rational>>> {
        type Key = (Gl, u64, u64, i64);
        static CACHE: OnceLock<Mutex<HashMap<Key, Arc<GroupPoint<Rational>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = (self.gl, seed, trial, sampling.bound);
        if let Some(p) = cache.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let t = random_supermatrix::<Rational>(self.gl, &mut rng, sampling);
        let p = Arc::new(GroupPoint::from_matrix(&t)?);
        cache.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }

    /// Degree bound for the cleared-denominator polynomial in the sampled
    /// variables whose nonvanishing `f(α)` witnesses.
    pub fn sampling_degree(&self, f: &Poly<Scalar>) -> u64 {
        let n_gen = self.gl.odd_entries() as u64;
        let d = self.gl.dim() as u64;
        f.terms()
            .map(|(m, _)| {
                let (dt, dtb) = m.bidegree();
                dt as u64 + (dtb as u64 + n_gen) * d + n_gen
            })
            .max()
            .unwrap_or(0)
    }

    fn generic_point_test(&self, f: &Poly<Scalar>, cfg: &OracleConfig) -> Result<Verdict> {
        let deg = f.degree();
        if deg > cfg.degree_cap {
            return Err(Error::Cap { what: "polynomial degree", value: deg as usize, cap: cfg.degree_cap as usize });
        }
        let re = f.map_coeffs(|c| c.re.clone());
        let im = f.map_coeffs(|c| c.im.clone());
        for trial in 0..cfg.trials {
            let p = self.sample_point(cfg.seed, trial as u64, cfg.sampling)?;
            for part in [&re, &im] {
                if !part.is_zero() && !p.evaluate(part).is_zero() {
                    return Ok(Verdict::nonzero(cfg, format!("trial {trial}")));
                }
            }
        }
        let s = cfg.sampling.set_size();
        let d = self.sampling_degree(f) as f64;
        let per_trial = ((d / s) / (1.0 - self.gl.dim() as f64 / s)).min(1.0);
        let bound = if f.is_zero() { 0.0 } else { per_trial.powi(cfg.trials as i32) };
        Ok(Verdict::zero(cfg, Some(bound)))
    }

    fn pairing_test(&self, f: &Poly<Scalar>, cfg: &OracleConfig) -> Result<Verdict> {
        if f.is_zero() {
            return Ok(Verdict::zero(cfg, None));
        }
        let span = PairingSpan::build(self.gl, f.terms().map(|(m, _)| m.bidegree()), cfg.pairing_cap)?;
        for (word, vec) in &span.elements {
            if !span.pair(f, vec).is_zero() {
                let w: Vec<String> = word.iter().map(Letter::to_string).collect();
                let w = if w.is_empty() { "1".to_string() } else { w.join("*") };
                return Ok(Verdict::nonzero(cfg, format!("word {w}")));
            }
        }
        Ok(Verdict::zero(cfg, None))
    }
}

fn factor_of(tag: Tag) -> Factor {
    match tag {
        Tag::T => Factor::V,
        Tag::TBar => Factor::VStar,
    }
}

/// `Σ_{i<j} [g_j][a_i]` where `a_i` is the row of factor `i`.
fn monomial_pairing_sign(gl: &Gl, letters: &[Symbol]) -> bool {
    let mut rows_odd = 0usize;
    let mut neg = false;
    for s in letters {
        if s.odd && rows_odd % 2 == 1 {
            neg = !neg;
        }
        if gl.odd(s.row()) {
            rows_odd += 1;
        }
    }
    neg
}

/// Spanning set of the image of U(g) in `End(M)`, `M` a sum of tensor modules.
struct PairingSpan {
    gl: Gl,
    /// (bidegree, offset, dim) per block.
    blocks: Vec<((u32, u32), usize, usize)>,
    elements: Vec<(Vec<Letter>, SparseVec<Scalar>)>,
}

impl PairingSpan {
    fn build(gl: Gl, types: impl Iterator<Item = (u32, u32)>, cap: usize) -> Result<Self> {
        let mut kinds: Vec<(u32, u32)> = types.collect();
        kinds.sort();
        kinds.dedup();
        let d = gl.dim();
        let mut blocks = Vec::new();
        let mut offset = 0;
        let mut module_dim: usize = 0;
        for &(k, l) in &kinds {
            let dim = d.checked_pow(k + l).unwrap_or(usize::MAX);
            module_dim = module_dim.saturating_add(dim);
            if module_dim > cap {
                return Err(Error::Cap { what: "pairing module dimension", value: module_dim, cap });
            }
            blocks.push(((k, l), offset, dim));
            offset += dim * dim;
        }
        let letters = Letter::all(&gl);
        // tables[block][letter][basis] = images of the basis vector.
        let tables: Vec<Vec<Vec<Vec<(usize, Scalar)>>>> = blocks
            .iter()
            .map(|&((k, l), _, dim)| {
                let shape = TensorVector::<Scalar>::mixed_shape(k as usize, l as usize);
                letters
                    .iter()
                    .map(|&x| {
                        (0..dim)
                            .map(|i| {
                                let idx = decode(i, d, shape.len());
                                let v = TensorVector::<Scalar>::basis(shape.clone(), &idx).expect("shape");
                                act_letter(&gl, x, &v)
                                    .comps()
                                    .map(|(j, c)| (encode(j, d), c.clone()))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut identity = SparseVec::new();
        for &(_, off, dim) in &blocks {
            for i in 0..dim {
                identity.insert(off + i * dim + i, Scalar::one());
            }
        }
        let mut ech = Echelon::new();
        ech.insert(identity.clone());
        let mut elements = vec![(Vec::new(), identity)];
        let mut frontier = 0;
        while frontier < elements.len() {
            let (word, vec) = elements[frontier].clone();
            frontier += 1;
            for (xi, &x) in letters.iter().enumerate() {
                let mut prod = SparseVec::new();
                for (&g, c) in &vec {
                    let b = blocks.partition_point(|&(_, off, _)| off <= g) - 1;
                    let (_, off, dim) = blocks[b];
                    let (row, col) = ((g - off) / dim, (g - off) % dim);
                    for (r, k) in &tables[b][xi][row] {
                        let e = prod.entry(off + r * dim + col).or_insert_with(Scalar::zero);
                        *e += k.clone() * c.clone();
                    }
                }
                prod.retain(|_, v: &mut Scalar| !v.is_zero());
                if prod.is_empty() || !ech.insert(prod.clone()) {
                    continue;
                }
                let mut w = vec![x];
                w.extend_from_slice(&word);
                elements.push((w, prod));
            }
        }
        Ok(PairingSpan { gl, blocks, elements })
    }

    fn pair(&self, f: &Poly<Scalar>, v: &SparseVec<Scalar>) -> Scalar {
        let d = self.gl.dim();
        let mut acc = Scalar::zero();
        for (m, c) in f.terms() {
            let Some(&(_, off, dim)) = self.blocks.iter().find(|(t, _, _)| *t == m.bidegree()) else { continue };
            let letters = m.letters();
            let rows: Vec<u8> = letters.iter().map(|s| s.row).collect();
            let cols: Vec<u8> = letters.iter().map(|s| s.col).collect();
            let key = off + encode(&rows, d) * dim + encode(&cols, d);
            if let Some(x) = v.get(&key) {
                acc += sign::<Scalar>(monomial_pairing_sign(&self.gl, &letters)) * c.clone() * x.clone();
            }
        }
        acc
    }
}

fn encode(idx: &[u8], d: usize) -> usize {
    idx.iter().fold(0, |acc, &a| acc * d + (a as usize - 1))
}

fn decode(mut i: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for s in (0..len).rev() {
        out[s] = i % d + 1;
        i /= d;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Generic,
    Pairing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Zero,
    Nonzero,
}

/// Default cap on the degree of polynomials sent to the generic-point oracle.
pub const DEFAULT_DEGREE_CAP: u32 = 64;
/// Default cap on `dim M` in pairing mode.
pub const DEFAULT_PAIRING_CAP: usize = 5000;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub mode: Mode,
    pub trials: u32,
    pub seed: u64,
    pub degree_cap: u32,
    pub pairing_cap: usize,
    pub sampling: Sampling,
}

impl Default for OracleConfig {
    fn default() -> Self {
        let degree_cap = std::env::var("SUPERFN_DEGREE_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_DEGREE_CAP);
        OracleConfig {
            mode: Mode::Generic,
            trials: 3,
            seed: 0,
            degree_cap,
            pairing_cap: DEFAULT_PAIRING_CAP,
            sampling: Sampling::default(),
        }
    }
}

impl OracleConfig {
    pub fn pairing() -> Self {
        OracleConfig { mode: Mode::Pairing, ..Default::default() }
    }
    pub fn with_seed(self, seed: u64) -> Self {
        OracleConfig { seed, ..self }
    }
}

/// Oracle answer; nonzero verdicts are exact.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub verdict: Outcome,
    pub mode: Mode,
    pub trials: u32,
    pub seed: u64,
    pub failure_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    fn zero(cfg: &OracleConfig, failure_bound: Option<f64>) -> Self {
        let failure_bound = match cfg.mode {
            Mode::Generic => failure_bound,
            Mode::Pairing => None,
        };
        Verdict { verdict: Outcome::Zero, mode: cfg.mode, trials: cfg.trials, seed: cfg.seed, failure_bound, witness: None }
    }
    fn nonzero(cfg: &OracleConfig, witness: String) -> Self {
        Verdict {
            verdict: Outcome::Nonzero,
            mode: cfg.mode,
            trials: cfg.trials,
            seed: cfg.seed,
            failure_bound: None,
            witness: Some(witness),
        }
    }
    pub fn is_zero(&self) -> bool {
        self.verdict == Outcome::Zero
    }
}

use crate::scalar::{One, Zero};
