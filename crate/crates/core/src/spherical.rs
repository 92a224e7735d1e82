//! Homogeneous superspaces and spherical functions.
//!
//! A [`LeviProfile`] fixes a block-diagonal Levi subalgebra of gl(m|n).
//! Invariant generators are the block sums `C^{(i)}_ab = Σ_{c∈block i}
//! t_ca t̄_cb` and their traces `C^{(i,j)}`. The projective case uses
//! `z_a = t_{N,a}`, `z̄_a = t̄_{N,a}` and `r = z_N z̄_N` with `N = m+n`.

use std::fmt;
use std::ops::RangeInclusive;

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::actions::{Actions, Side};
use crate::cg::{Cg, OracleConfig};
use crate::error::{Error, Result};
use crate::grading::Gl;
use crate::scalar::{real, sign, One, Rational, Scalar, Zero};
use crate::suites::Case;
use crate::superpoly::{Poly, Symbol};
use crate::ugl::Letter;

/// Ordered block decomposition of the index set.
///
/// Blocks have sizes `k_1..k_s` and cumulative ends `l_i`. Every block
/// lies inside `1..=m` or `m+1..=m+n`; when `super_at = Some(r)` the blocks
/// `r` and `r+1` form one super block gl(k_r|k_{r+1}) straddling `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviProfile {
    gl: Gl,
    sizes: Vec<usize>,
    super_at: Option<usize>,
}

impl LeviProfile {
    /// `super_at` is the 1-based index `r` of the even half of the super block.
    pub fn new(gl: Gl, sizes: Vec<usize>, super_at: Option<usize>) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::Usage("Levi blocks must be nonempty".into()));
        }
        if sizes.iter().sum::<usize>() != gl.dim() {
            return Err(Error::Usage(format!("Levi blocks must cover 1..={}", gl.dim())));
        }
        let mut end = 0;
        for &k in &sizes {
            let start = end + 1;
            end += k;
            if start <= gl.m && end > gl.m {
                return Err(Error::Usage(format!("block {start}..={end} straddles the parity boundary")));
            }
        }
        if let Some(r) = super_at {
            let l_r: usize = sizes.iter().take(r).sum();
            if r == 0 || r >= sizes.len() || l_r != gl.m {
                return Err(Error::Usage("super block must join the blocks ending and starting at m".into()));
            }
        }
        Ok(LeviProfile { gl, sizes, super_at })
    }

    /// Parses a comma list of blocks; `k|l` is a super block.
    ///
    /// `"1,1|1,1"` is gl(1) ⊕ gl(1|1) ⊕ gl(1). A super pair with an empty
    /// half, as in `"2|0,1"`, degenerates to an ordinary block.
    pub fn parse(gl: Gl, text: &str) -> Result<Self> {
        let mut sizes = Vec::new();
        let mut super_at = None;
        for item in text.split(',') {
            let item = item.trim();
            let num = |s: &str| {
                s.trim().parse::<usize>().map_err(|_| Error::Usage(format!("bad Levi block `{item}`")))
            };
            match item.split_once('|') {
                Some((k, l)) => {
                    let (k, l) = (num(k)?, num(l)?);
                    if super_at.is_some() {
                        return Err(Error::Usage("at most one super block".into()));
                    }
                    match (k, l) {
                        (0, 0) => return Err(Error::Usage("empty super block".into())),
                        (0, l) => sizes.push(l),
                        (k, 0) => sizes.push(k),
                        (k, l) => {
                            sizes.push(k);
                            super_at = Some(sizes.len());
                            sizes.push(l);
                        }
                    }
                }
                None => sizes.push(num(item)?),
            }
        }
        LeviProfile::new(gl, sizes, super_at)
    }

    /// gl(m|n−1) ⊕ gl(1), the projective-superspace profile.
    pub fn projective(gl: Gl) -> Result<Self> {
        if gl.n == 0 {
            return Err(Error::Usage("projective profile needs n >= 1".into()));
        }
        LeviProfile::parse(gl, &format!("{}|{},1", gl.m, gl.n - 1))
    }

    pub fn gl(&self) -> &Gl {
        &self.gl
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn num_blocks(&self) -> usize {
        self.sizes.len()
    }

    /// 1-based index `r` of the even half of the super block.
    pub fn super_block(&self) -> Option<usize> {
        self.super_at
    }

    /// `l_i = k_1 + … + k_i`, with `l_0 = 0`.
    pub fn l(&self, i: usize) -> usize {
        self.sizes.iter().take(i).sum()
    }

    /// Index interval `1+l_{i−1} ..= l_i` of block `i`.
    pub fn block(&self, i: usize) -> Result<RangeInclusive<usize>> {
        if i == 0 || i > self.sizes.len() {
            return Err(Error::IndexOutOfRange { index: i, dim: self.sizes.len() });
        }
        Ok(1 + self.l(i - 1)..=self.l(i))
    }

    /// Parity `[l_i]` shared by every index of block `i`.
    pub fn block_odd(&self, i: usize) -> bool {
        self.gl.odd(self.l(i))
    }

    /// Blocks other than the two halves of the super block.
    pub fn outer_blocks(&self) -> Vec<usize> {
        (1..=self.sizes.len())
            .filter(|&i| self.super_at.is_none_or(|r| i != r && i != r + 1))
            .collect()
    }

    /// Cartan letters plus Chevalley letters internal to each block, plus
    /// `E_{m,m+1}`, `E_{m+1,m}` for a super block.
    pub fn generating_letters(&self) -> Vec<Letter> {
        let gl = &self.gl;
        let mut out: Vec<Letter> = gl.indices().map(|a| Letter::new(gl, a, a)).collect();
        for i in 1..=self.sizes.len() {
            let b = self.block(i).expect("valid block");
            for c in *b.start()..*b.end() {
                out.push(Letter::new(gl, c, c + 1));
                out.push(Letter::new(gl, c + 1, c));
            }
        }
        if self.super_at.is_some() {
            out.push(Letter::new(gl, gl.m, gl.m + 1));
            out.push(Letter::new(gl, gl.m + 1, gl.m));
        }
        out
    }
}

impl fmt::Display for LeviProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.sizes.len() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if self.super_at == Some(i + 1) {
                write!(f, "{}|{}", self.sizes[i], self.sizes[i + 1])?;
                i += 2;
            } else {
                write!(f, "{}", self.sizes[i])?;
                i += 1;
            }
        }
        Ok(())
    }
}

fn tt(gl: &Gl, c: usize, a: usize, b: usize) -> Poly {
    Poly::product(&[Symbol::t(gl, c, a), Symbol::tbar(gl, c, b)])
}

/// `C^{(i)}_ab = Σ_{c=1+l_{i−1}}^{l_i} t_ca t̄_cb`.
pub fn c_block(p: &LeviProfile, i: usize, a: usize, b: usize) -> Result<Poly> {
    let gl = p.gl();
    gl.check(a)?;
    gl.check(b)?;
    let mut out = Poly::zero();
    for c in p.block(i)? {
        out = &out + &tt(gl, c, a, b);
    }
    Ok(out)
}

/// `C^{(i,j)} = Σ_{a∈block j} Σ_{c∈block i} t_ca t̄_ca`.
pub fn c_pair(p: &LeviProfile, i: usize, j: usize) -> Result<Poly> {
    let mut out = Poly::zero();
    for a in p.block(j)? {
        out = &out + &c_block(p, i, a, a)?;
    }
    Ok(out)
}

/// `Σ_{c∈rows} t_ca t̄_cb` over an arbitrary row interval.
pub fn c_rows(gl: &Gl, rows: RangeInclusive<usize>, a: usize, b: usize) -> Result<Poly> {
    gl.check(a)?;
    gl.check(b)?;
    let mut out = Poly::zero();
    for c in rows {
        gl.check(c)?;
        out = &out + &tt(gl, c, a, b);
    }
    Ok(out)
}

/// `Σ_i (−1)^{[l_i]} C^{(i)}_ab − δ_ab`, the naive block sum.
pub fn block_sum_naive(p: &LeviProfile, a: usize, b: usize) -> Result<Poly> {
    let mut out = Poly::constant(if a == b { -Scalar::one() } else { Scalar::zero() });
    for i in 1..=p.num_blocks() {
        out.add_scaled(&c_block(p, i, a, b)?, &sign(p.block_odd(i)));
    }
    Ok(out)
}

/// `Σ_i (−1)^{[b]([l_i]+[a])} C^{(i)}_ab − δ_ab`, which lies in J.
///
/// Follows from the second family of relations after supercommuting
/// `t̄_ca t_cb` into `t_cb t̄_ca`.
pub fn block_sum(p: &LeviProfile, a: usize, b: usize) -> Result<Poly> {
    let gl = p.gl();
    let mut out = Poly::constant(if a == b { -Scalar::one() } else { Scalar::zero() });
    for i in 1..=p.num_blocks() {
        let s = gl.odd(b) && (p.block_odd(i) ^ gl.odd(a));
        out.add_scaled(&c_block(p, i, a, b)?, &sign(s));
    }
    Ok(out)
}

/// `Σ_a C^{(i)}_aa − k_i`, the naive trace with the free index summed.
pub fn trace_naive(p: &LeviProfile, i: usize) -> Result<Poly> {
    let k = p.block(i)?.count();
    let mut out = Poly::constant(-real(Rational::from_integer(k.into())));
    for a in p.gl().indices() {
        out = &out + &c_block(p, i, a, a)?;
    }
    Ok(out)
}

/// `Σ_a (−1)^{[l_i]([a]+1)} C^{(i)}_aa − k_i`, which lies in J.
pub fn trace_identity(p: &LeviProfile, i: usize) -> Result<Poly> {
    let gl = p.gl();
    let k = p.block(i)?.count();
    let beta = p.block_odd(i);
    let mut out = Poly::constant(-real(Rational::from_integer(k.into())));
    for a in gl.indices() {
        out.add_scaled(&c_block(p, i, a, a)?, &sign(beta && !gl.odd(a)));
    }
    Ok(out)
}

/// `Σ_i (−1)^{β_j(β_i+β_j)} C^{(i,j)} − k_j`, which lies in J; `β` is the
/// block parity. The block sum at `a = b` summed over block `j`.
pub fn pair_sum_over_rows(p: &LeviProfile, j: usize) -> Result<Poly> {
    let k = p.block(j)?.count();
    let bj = p.block_odd(j);
    let mut out = Poly::constant(-real(Rational::from_integer(k.into())));
    for i in 1..=p.num_blocks() {
        out.add_scaled(&c_pair(p, i, j)?, &sign(bj && (p.block_odd(i) ^ bj)));
    }
    Ok(out)
}

/// `Σ_j (−1)^{β_i(β_j+1)} C^{(i,j)} − k_i`, which lies in J. The signed
/// trace split by blocks.
pub fn pair_sum_over_cols(p: &LeviProfile, i: usize) -> Result<Poly> {
    let k = p.block(i)?.count();
    let bi = p.block_odd(i);
    let mut out = Poly::constant(-real(Rational::from_integer(k.into())));
    for j in 1..=p.num_blocks() {
        out.add_scaled(&c_pair(p, i, j)?, &sign(bi && !p.block_odd(j)));
    }
    Ok(out)
}

/// `z_a = t_{N,a}`.
pub fn z(gl: &Gl, a: usize) -> Result<Poly> {
    gl.check(a)?;
    Ok(Poly::symbol(Symbol::t(gl, gl.dim(), a)))
}

/// `z̄_a = t̄_{N,a}`.
pub fn zbar(gl: &Gl, a: usize) -> Result<Poly> {
    gl.check(a)?;
    Ok(Poly::symbol(Symbol::tbar(gl, gl.dim(), a)))
}

/// `r = z_N z̄_N`.
pub fn r(gl: &Gl) -> Poly {
    let top = gl.dim();
    tt(gl, top, top, top)
}

/// `Q_ab = Σ_{c<N} (−1)^{[b][c]+[c]} t̄_ca t_cb`.
pub fn q(gl: &Gl, a: usize, b: usize) -> Result<Poly> {
    gl.check(a)?;
    gl.check(b)?;
    let mut out = Poly::zero();
    for c in 1..gl.dim() {
        let s = (gl.odd(b) && gl.odd(c)) ^ gl.odd(c);
        out.add_scaled(&Poly::product(&[Symbol::tbar(gl, c, a), Symbol::t(gl, c, b)]), &sign(s));
    }
    Ok(out)
}

/// `Σ_a z̄_a z_a − 1`.
pub fn sphere_relation(gl: &Gl) -> Poly {
    let mut out = Poly::constant(-Scalar::one());
    for a in gl.indices() {
        out = &out + &zbar(gl, a).expect("index").mul(&z(gl, a).expect("index"));
    }
    out
}

/// `Q_ab − (δ_ab − (−1)^{[b]} z_a z̄_b)`, the naive closed form.
pub fn q_identity_naive(gl: &Gl, a: usize, b: usize) -> Result<Poly> {
    let mut out = q(gl, a, b)?;
    if a == b {
        out = &out - &Poly::one();
    }
    out.add_scaled(&z(gl, a)?.mul(&zbar(gl, b)?), &sign(gl.odd(b)));
    Ok(out)
}

/// `Q_ab − (δ_ab − (−1)^{[b][N]+[N]} z̄_a z_b)`, which lies in J.
///
/// This is the `c = N` term of the second relation family moved across.
pub fn q_identity(gl: &Gl, a: usize, b: usize) -> Result<Poly> {
    let top_odd = gl.odd(gl.dim());
    let mut out = q(gl, a, b)?;
    if a == b {
        out = &out - &Poly::one();
    }
    let s = (gl.odd(b) && top_odd) ^ top_odd;
    out.add_scaled(&zbar(gl, a)?.mul(&z(gl, b)?), &sign(s));
    Ok(out)
}

/// Generalized binomial `x(x−1)…(x−i+1)/i!` for integer `x` of any sign.
pub fn binomial(x: i64, i: u32) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..i as i64 {
        num *= BigInt::from(x - t);
        den *= BigInt::from(t + 1);
    }
    Rational::new(num, den)
}

fn poly_in_r(gl: &Gl, coeffs: &[(u32, Rational)]) -> Poly {
    let rr = r(gl);
    let mut out = Poly::zero();
    for (e, c) in coeffs {
        out.add_scaled(&rr.pow(*e), &real(c.clone()));
    }
    out
}

/// `θ_k = Σ_i (−1)^i C(n−m+2k−2, i) C(k,i)² (i!)² r^{k−i}`, with the
/// generalized binomial for negative upper arguments.
///
/// This closed form is an eigenfunction only for `k ≤ 1` when `n−m = 1`;
/// [`theta_corrected`] satisfies the eigen-relation in general.
pub fn theta(gl: &Gl, k: u32) -> Poly {
    let top = gl.n as i64 - gl.m as i64 + 2 * k as i64 - 2;
    let coeffs: Vec<(u32, Rational)> = (0..=k)
        .map(|i| {
            let kb = binomial(k as i64, i);
            let fact: BigInt = (1..=i as i64).map(BigInt::from).product();
            let fact = Rational::from_integer(fact);
            let c = binomial(top, i) * &kb * &kb * &fact * &fact;
            (k - i, if i % 2 == 1 { -c } else { c })
        })
        .collect();
    poly_in_r(gl, &coeffs)
}

/// Corrected eigenfunction `Σ_i (−1)^i C(k,i)² / C(n−m+2k−2, i) r^{k−i}`.
///
/// These are the coefficients forced by `dR_{∇²} r^j = j r^{j−1}[(m−n−j+1)r + j]`
/// and the eigenvalue `k(m−n−k+1)`. Fails with [`Error::Singular`] when a
/// denominator vanishes, which happens only when `m−n+1 > 0`.
pub fn theta_corrected(gl: &Gl, k: u32) -> Result<Poly> {
    let top = gl.n as i64 - gl.m as i64 + 2 * k as i64 - 2;
    let mut coeffs = Vec::new();
    for i in 0..=k {
        let kb = binomial(k as i64, i);
        let d = binomial(top, i);
        if d.is_zero() {
            return Err(Error::Singular);
        }
        let c = &kb * &kb / d;
        coeffs.push((k - i, if i % 2 == 1 { -c } else { c }));
    }
    Ok(poly_in_r(gl, &coeffs))
}

/// Eigenvalue `k(m−n−k+1)` of `θ_k`.
pub fn theta_eigenvalue(gl: &Gl, k: u32) -> i64 {
    let k = k as i64;
    k * (gl.m as i64 - gl.n as i64 - k + 1)
}

/// `k r^{k−1}[(m−n−k+1) r + k]`.
pub fn laplacian_power_formula(gl: &Gl, k: u32) -> Poly {
    if k == 0 {
        return Poly::zero();
    }
    let kk = k as i64;
    let a = Rational::from_integer((kk * (gl.m as i64 - gl.n as i64 - kk + 1)).into());
    let b = Rational::from_integer((kk * kk).into());
    poly_in_r(gl, &[(k, a), (k - 1, b)])
}

/// `dR_{∇²}(f)`.
pub fn laplacian_apply(actions: &Actions, f: &Poly) -> Poly {
    let lap = actions.ugl().laplacian::<Scalar>();
    actions.act(Side::DR, &lap, f)
}

/// `−(−1)^{[a]+[b]} t_{m+1,a} t̄_{m,b}` and `−(−1)^{[a]+[b]} t_{m,a} t̄_{m+1,b}`,
/// the naive images of `C^{(r+1)}_ab` under `dL_{E_{m,m+1}}` and
/// `dL_{E_{m+1,m}}`.
pub fn super_block_images_naive(gl: &Gl, a: usize, b: usize) -> Result<(Poly, Poly)> {
    gl.check(a)?;
    gl.check(b)?;
    let (m, m1) = (gl.m, gl.m + 1);
    let s = sign::<Scalar>(!(gl.odd(a) ^ gl.odd(b)));
    let up = Poly::product(&[Symbol::t(gl, m1, a), Symbol::tbar(gl, m, b)]).scale(&s);
    let down = Poly::product(&[Symbol::t(gl, m, a), Symbol::tbar(gl, m1, b)]).scale(&s);
    Ok((up, down))
}

/// Images of `C^{(r+1)}_ab` under `dL_{E_{m,m+1}}` and `dL_{E_{m+1,m}}` as
/// produced by the translation action: `(−1)^{[a]+[b]} t_{m+1,a} t̄_{m,b}`
/// and `(−1)^{[a]} t_{m,a} t̄_{m+1,b}`.
pub fn super_block_images(gl: &Gl, a: usize, b: usize) -> Result<(Poly, Poly)> {
    gl.check(a)?;
    gl.check(b)?;
    let (m, m1) = (gl.m, gl.m + 1);
    let up = Poly::product(&[Symbol::t(gl, m1, a), Symbol::tbar(gl, m, b)]).scale(&sign(gl.odd(a) ^ gl.odd(b)));
    let down = Poly::product(&[Symbol::t(gl, m, a), Symbol::tbar(gl, m1, b)]).scale(&sign(gl.odd(a)));
    Ok((up, down))
}

/// Left-invariant generators `C^{(i)}_ab`, `i` outside the super block.
pub fn left_generators(p: &LeviProfile) -> Vec<(String, Poly)> {
    let mut out = Vec::new();
    for i in p.outer_blocks() {
        for a in p.gl().indices() {
            for b in p.gl().indices() {
                out.push((format!("C[{i};{a},{b}]"), c_block(p, i, a, b).expect("valid")));
            }
        }
    }
    out
}

/// Bi-invariant generators `C^{(i,j)}`, `i, j` outside the super block.
pub fn bi_generators(p: &LeviProfile) -> Vec<(String, Poly)> {
    let outer = p.outer_blocks();
    let mut out = Vec::new();
    for &i in &outer {
        for &j in &outer {
            out.push((format!("CP[{i},{j}]"), c_pair(p, i, j).expect("valid")));
        }
    }
    out
}

/// Checks on the projective spherical variable.
///
/// For `n = 1`: `(1−r)^{m+1}` vanishes and `(1−r)^m` does not. For `n > 1`:
/// `r^k` is nonzero for `k ≤ max_k`. Always: the Laplacian power formula
/// for `k ≤ max_k`.
pub fn verify_projective_spherical(gl: &Gl, max_k: u32, cfg: &OracleConfig) -> Result<Vec<Case>> {
    let cg = Cg::new(*gl);
    let tag = format!("({},{})", gl.m, gl.n);
    let rr = r(gl);
    let mut cases = Vec::new();
    if gl.n == 1 {
        let one_minus = &Poly::one() - &rr;
        let m = gl.m as u32;
        let v = cg.is_zero_mod_j(&one_minus.pow(m + 1), cfg)?;
        cases.push(Case::from_verdict(format!("{tag} (1-r)^{} zero", m + 1), true, &v));
        let v = cg.is_zero_mod_j(&one_minus.pow(m), cfg)?;
        cases.push(Case::from_verdict(format!("{tag} (1-r)^{m} nonzero"), false, &v));
    } else {
        for k in 1..=max_k {
            let v = cg.is_zero_mod_j(&rr.pow(k), cfg)?;
            cases.push(Case::from_verdict(format!("{tag} r^{k} nonzero"), false, &v));
        }
    }
    let actions = Actions::new(*gl);
    for k in 0..=max_k {
        let lhs = laplacian_apply(&actions, &rr.pow(k));
        let v = cg.is_zero_mod_j(&(&lhs - &laplacian_power_formula(gl, k)), cfg)?;
        cases.push(Case::from_verdict(format!("{tag} laplacian r^{k}"), true, &v));
    }
    Ok(cases)
}

/// Which end of the index set carries the `k` summed rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankSide {
    /// Rows `m+n−k+1..=m+n`, all odd.
    N,
    /// Rows `1..=k`, all even.
    M,
}

impl fmt::Display for RankSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankSide::N => "n-side",
            RankSide::M => "m-side",
        })
    }
}

/// Rows summed by the maximal-rank generators.
pub fn rank_rows(gl: &Gl, side: RankSide, k: usize) -> Result<RangeInclusive<usize>> {
    let bound = match side {
        RankSide::N => gl.n,
        RankSide::M => gl.m,
    };
    if k == 0 || k > bound {
        return Err(Error::Usage(format!("need 0 < k <= {bound} on the {side}")));
    }
    Ok(match side {
        RankSide::N => gl.dim() - k + 1..=gl.dim(),
        RankSide::M => 1..=k,
    })
}

/// Spherical generator `C = Σ_{c,a∈rows} t_ca t̄_ca`.
pub fn rank_spherical(gl: &Gl, side: RankSide, k: usize) -> Result<Poly> {
    let rows = rank_rows(gl, side, k)?;
    let mut out = Poly::zero();
    for a in rows.clone() {
        out = &out + &c_rows(gl, rows.clone(), a, a)?;
    }
    Ok(out)
}

/// Nilpotency orders of the maximal-rank generators `C_ab`.
///
/// When `[a] = [b]` differs from the row parity, `C_ab^{k+1}` vanishes and
/// `C_ab^k` does not. Mixed-parity generators square to zero. Powers of the spherical
/// generator up to `max_power` are nonzero.
pub fn maximal_rank_orders(
    gl: &Gl,
    k: usize,
    side: RankSide,
    max_power: u32,
    cfg: &OracleConfig,
) -> Result<Vec<Case>> {
    let cg = Cg::new(*gl);
    let rows = rank_rows(gl, side, k)?;
    let row_odd = side == RankSide::N;
    let tag = format!("({},{}) {side} k={k}", gl.m, gl.n);
    let kk = k as u32;
    let mut cases = Vec::new();
    for a in gl.indices() {
        for b in gl.indices() {
            let c = c_rows(gl, rows.clone(), a, b)?;
            let name = format!("{tag} C[{a},{b}]");
            if gl.odd(a) != gl.odd(b) {
                let v = cg.is_zero_mod_j(&c.pow(2), cfg)?;
                cases.push(Case::from_verdict(format!("{name}^2 zero"), true, &v));
            } else if gl.odd(a) != row_odd {
                // Same-parity class is not checked: at k equal to the whole
                // side its off-diagonal entries are nilpotent.
                let v = cg.is_zero_mod_j(&c.pow(kk + 1), cfg)?;
                cases.push(Case::from_verdict(format!("{name}^{} zero", kk + 1), true, &v));
                let v = cg.is_zero_mod_j(&c.pow(kk), cfg)?;
                cases.push(Case::from_verdict(format!("{name}^{kk} nonzero"), false, &v));
            }
        }
    }
    let cs = rank_spherical(gl, side, k)?;
    for j in 1..=max_power {
        let v = cg.is_zero_mod_j(&cs.pow(j), cfg)?;
        cases.push(Case::from_verdict(format!("{tag} C^{j} nonzero"), false, &v));
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(m: usize, n: usize) -> Gl {
        Gl::new(m, n).unwrap()
    }

    #[test]
    fn profile_parsing() {
        let p = LeviProfile::parse(gl(2, 2), "1,1|1,1").unwrap();
        assert_eq!(p.sizes(), &[1, 1, 1, 1]);
        assert_eq!(p.super_block(), Some(2));
        assert_eq!(p.outer_blocks(), vec![1, 4]);
        assert_eq!(p.to_string(), "1,1|1,1");
        let q = LeviProfile::projective(gl(2, 2)).unwrap();
        assert_eq!(q.to_string(), "2|1,1");
        let q1 = LeviProfile::projective(gl(2, 1)).unwrap();
        assert_eq!(q1.sizes(), &[2, 1]);
        assert_eq!(q1.super_block(), None);
        assert!(LeviProfile::parse(gl(2, 2), "1,2,1").is_err());
        assert!(LeviProfile::parse(gl(2, 2), "1|1,1,1").is_err());
        assert!(LeviProfile::parse(gl(2, 2), "1,1").is_err());
    }

    #[test]
    fn generating_letters_of_profile() {
        let p = LeviProfile::parse(gl(2, 2), "1,1|1,1").unwrap();
        let ls = p.generating_letters();
        assert_eq!(ls.len(), 4 + 2);
        assert!(ls.contains(&Letter::new(p.gl(), 2, 3)));
        assert!(!ls.contains(&Letter::new(p.gl(), 1, 2)));
    }

    #[test]
    fn c_block_example() {
        let g = gl(1, 1);
        let p = LeviProfile::parse(g, "1,1").unwrap();
        assert_eq!(c_block(&p, 2, 1, 1).unwrap(), Poly::product(&[Symbol::t(&g, 2, 1), Symbol::tbar(&g, 2, 1)]));
        assert!(c_block(&p, 3, 1, 1).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Rational::from_integer(10.into()));
        assert_eq!(binomial(-1, 3), Rational::from_integer((-1).into()));
        assert_eq!(binomial(0, 1), Rational::zero());
    }

    #[test]
    fn theta_small() {
        let g = gl(1, 3);
        assert_eq!(theta(&g, 0), Poly::one());
        assert_eq!(theta_corrected(&g, 0).unwrap(), Poly::one());
        let half = real(Rational::new(1.into(), 2.into()));
        assert_eq!(theta_corrected(&g, 1).unwrap(), &r(&g) - &Poly::constant(half));
        assert_eq!(theta(&g, 1), &r(&g) - &Poly::constant(real(Rational::from_integer(2.into()))));
        assert!(theta_corrected(&gl(1, 1), 1).is_err());
    }

    #[test]
    fn power_formula_low_degree() {
        let g = gl(2, 1);
        assert!(laplacian_power_formula(&g, 0).is_zero());
        let expect = &r(&g).scale(&real(Rational::from_integer(1.into()))) + &Poly::one();
        assert_eq!(laplacian_power_formula(&g, 1), expect);
    }
}
