//! Invariant theory on `V^{⊗k} ⊗ (V*)^{⊗ℓ}` by exact linear algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::Gl;
use crate::linalg::{nullspace, rank, Echelon, SparseVec};
use crate::scalar::{sign, Coeff, Scalar};
use crate::ugl::{act_letter, Factor, Letter, TensorVector};

/// Default cap on `(m+n)^{k+ℓ}`.
pub const DEFAULT_TENSOR_CAP: usize = 10_000;

/// Permutation of `{1..d}`, stored 0-based: position `j` goes to `images[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// From a 1-based image array.
    pub fn new(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in images {
            if i == 0 || i > d || seen[i - 1] {
                return Err(Error::Usage(format!("{images:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Perm { images: images.iter().map(|i| i - 1).collect() })
    }

    pub fn identity(d: usize) -> Self {
        Perm { images: (0..d).collect() }
    }

    /// Adjacent transposition `s_i = (i, i+1)`, 1-based.
    pub fn transposition(d: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= d {
            return Err(Error::Usage(format!("s_{i} needs 1 <= i < {d}")));
        }
        let mut p = Perm::identity(d);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    /// `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (j, &i) in self.images.iter().enumerate() {
            inv[i] = j;
        }
        Perm { images: inv }
    }

    pub fn is_even(&self) -> bool {
        self.inversions().count().is_multiple_of(2)
    }

    fn inversions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let d = self.images.len();
        (0..d).flat_map(move |j| (j + 1..d).map(move |k| (j, k))).filter(|&(j, k)| self.images[j] > self.images[k])
    }

    /// Word in adjacent transpositions (1-based `i` for `s_i`) whose
    /// product, leftmost applied last, is `self`.
    pub fn adjacent_factors(&self) -> Vec<usize> {
        // Bubble sort the image array; each swap of slots (i, i+1) is s_i.
        let mut a = self.images.clone();
        let mut swaps = Vec::new();
        let d = a.len();
        for pass in 0..d {
            for i in 0..d.saturating_sub(1 + pass) {
                if a[i] > a[i + 1] {
                    a.swap(i, i + 1);
                    swaps.push(i + 1);
                }
            }
        }
        // a ∘ s_{i_1} ∘ … ∘ s_{i_r} = id, so self = s_{i_r} ∘ … ∘ s_{i_1}.
        swaps.reverse();
        swaps
    }

    /// All permutations of `{1..d}` in lexicographic order.
    pub fn all(d: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            let d = used.len();
            if prefix.len() == d {
                out.push(Perm { images: prefix.clone() });
                return;
            }
            for i in 0..d {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; d], &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `ρ(σ)` on `V^{⊗d}`: the factor in position `j` moves to `σ(j)`, with the
/// Koszul sign `(−1)^{[a_j][a_k]}` for every pair of factors that cross.
pub fn rho<C: Coeff>(gl: &Gl, sigma: &Perm, w: &TensorVector<C>) -> Result<TensorVector<C>> {
    let d = sigma.degree();
    if w.shape.len() != d || w.shape.iter().any(|&f| f != Factor::V) {
        return Err(Error::Shape(format!("ρ of S_{d} needs V^⊗{d}")));
    }
    let mut out = TensorVector::zero(w.shape.clone());
    for (idx, c) in w.comps() {
        let mut neg = false;
        for (j, k) in sigma.inversions() {
            neg ^= gl.odd(idx[j] as usize) && gl.odd(idx[k] as usize);
        }
        let mut img = vec![0u8; d];
        for (j, &a) in idx.iter().enumerate() {
            img[sigma.images[j]] = a;
        }
        out.add(img, sign::<C>(neg) * c.clone());
    }
    Ok(out)
}

fn check_cap(gl: &Gl, factors: usize, cap: usize) -> Result<usize> {
    let dim = (gl.dim() as u64).checked_pow(factors as u32).unwrap_or(u64::MAX);
    if dim > cap as u64 {
        return Err(Error::Cap { what: "tensor dimension", value: dim.min(usize::MAX as u64) as usize, cap });
    }
    Ok(dim as usize)
}

/// Tuples `I^d` in lexicographic order, 1-based.
fn tuples(dim: usize, d: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = dim.pow(d as u32);
    (0..total).map(move |mut code| {
        let mut idx = vec![0u8; d];
        for s in (0..d).rev() {
            idx[s] = (code % dim) as u8 + 1;
            code /= dim;
        }
        idx
    })
}

fn encode(idx: &[u8], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &a| acc * dim + (a as usize - 1))
}

fn to_sparse<C: Coeff>(w: &TensorVector<C>, dim: usize) -> SparseVec<C> {
    w.comps().map(|(idx, c)| (encode(idx, dim), c.clone())).collect()
}

fn from_sparse<C: Coeff>(v: &SparseVec<C>, shape: Vec<Factor>, dim: usize) -> TensorVector<C> {
    let d = shape.len();
    let mut out = TensorVector::zero(shape);
    for (&code, c) in v {
        let mut idx = vec![0u8; d];
        let mut k = code;
        for s in (0..d).rev() {
            idx[s] = (k % dim) as u8 + 1;
            k /= dim;
        }
        out.add(idx, c.clone());
    }
    out
}

/// The Sergeev tensor
/// `Σ_a sgn(σ, a) v_{a_{σ(1)}} ⊗ … ⊗ v_{a_{σ(d)}} ⊗ v̄_{a_d} ⊗ … ⊗ v̄_{a_1}`.
///
/// `sgn(σ, a)` is the sign of the order in which the odd-index positions
/// appear in `(σ(1), …, σ(d))`.
pub fn sergeev_invariant(gl: &Gl, sigma: &Perm, cap: usize) -> Result<TensorVector<Scalar>> {
    let d = sigma.degree();
    check_cap(gl, 2 * d, cap)?;
    let mut out = TensorVector::zero(TensorVector::<Scalar>::mixed_shape(d, d));
    for a in tuples(gl.dim(), d) {
        let seq: Vec<usize> = (0..d).map(|p| sigma.images[p]).collect();
        let mut neg = false;
        for p in 0..d {
            for q in p + 1..d {
                if seq[p] > seq[q] && gl.odd(a[seq[p]] as usize) && gl.odd(a[seq[q]] as usize) {
                    neg = !neg;
                }
            }
        }
        let mut idx: Vec<u8> = seq.iter().map(|&j| a[j]).collect();
        idx.extend(a.iter().rev());
        out.add(idx, sign::<Scalar>(neg));
    }
    Ok(out)
}

/// Cartan and Chevalley letters; their joint kernel is the invariant space.
pub fn generating_letters(gl: &Gl) -> Vec<Letter> {
    let mut out: Vec<Letter> = gl.indices().map(|a| Letter::new(gl, a, a)).collect();
    for c in 1..gl.dim() {
        out.push(Letter::new(gl, c, c + 1));
        out.push(Letter::new(gl, c + 1, c));
    }
    out
}

/// Basis of `(V^{⊗k} ⊗ V*^{⊗ℓ})^{U(g)}`, the joint kernel of all letters.
pub fn invariant_subspace(gl: &Gl, k: usize, l: usize, cap: usize) -> Result<Vec<TensorVector<Scalar>>> {
    let n = check_cap(gl, k + l, cap)?;
    let shape = TensorVector::<Scalar>::mixed_shape(k, l);
    let dim = gl.dim();
    if k + l == 0 {
        let mut one = TensorVector::zero(shape);
        one.add(Vec::new(), Scalar::one());
        return Ok(vec![one]);
    }
    // Row r of the stacked matrix of x: coefficient of e_r in x·e_col.
    let mut rows: Vec<SparseVec<Scalar>> = Vec::new();
    for x in generating_letters(gl) {
        let mut mat: Vec<SparseVec<Scalar>> = vec![SparseVec::new(); n];
        for (col, idx) in tuples(dim, k + l).enumerate() {
            let e = TensorVector::<Scalar>::basis(shape.clone(), &idx.iter().map(|&a| a as usize).collect::<Vec<_>>())?;
            for (ri, c) in act_letter(gl, x, &e).comps() {
                mat[encode(ri, dim)].insert(col, c.clone());
            }
        }
        rows.extend(mat.into_iter().filter(|r| !r.is_empty()));
    }
    Ok(nullspace(rows, n).iter().map(|v| from_sparse(v, shape.clone(), dim)).collect())
}

/// Commutant of the U(g)-image in `End(V^{⊗d})` in the super sense, split
/// by parity of the operator: `(even dim, odd dim)`.
pub fn commutant_dims(gl: &Gl, d: usize, cap: usize) -> Result<(usize, usize)> {
    let n = check_cap(gl, d, cap)?;
    check_cap(gl, 2 * d, cap)?;
    let dim = gl.dim();
    let shape = vec![Factor::V; d];
    let basis: Vec<Vec<u8>> = tuples(dim, d).collect();
    let par: Vec<bool> = basis.iter().map(|idx| idx.iter().fold(false, |p, &a| p ^ gl.odd(a as usize))).collect();
    let letters = generating_letters(gl);
    // Matrices of letters as (row, col) -> coeff.
    let mats: Vec<Vec<(usize, usize, Scalar)>> = letters
        .iter()
        .map(|&x| {
            let mut entries = Vec::new();
            for (col, idx) in basis.iter().enumerate() {
                let e = TensorVector::<Scalar>::basis(shape.clone(), &idx.iter().map(|&a| a as usize).collect::<Vec<_>>())
                    .expect("shape");
                for (ri, c) in act_letter(gl, x, &e).comps() {
                    entries.push((encode(ri, dim), col, c.clone()));
                }
            }
            entries
        })
        .collect();
    let mut out = [0usize; 2];
    for (slot, odd_phi) in [false, true].into_iter().enumerate() {
        // Unknowns: entries φ_{ij} with par(i) ^ par(j) == odd_phi.
        let vars: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| (par[i] ^ par[j]) == odd_phi).collect();
        let var_index: std::collections::HashMap<(usize, usize), usize> =
            vars.iter().enumerate().map(|(v, &ij)| (ij, v)).collect();
        let mut rows: Vec<SparseVec<Scalar>> = Vec::new();
        for (x, mat) in letters.iter().zip(&mats) {
            // (φX − (−1)^{[φ][x]} Xφ)_{ij} = Σ_k φ_ik X_kj − s X_ik φ_kj.
            let s = sign::<Scalar>(odd_phi && x.odd);
            let mut eqs: std::collections::BTreeMap<(usize, usize), SparseVec<Scalar>> = Default::default();
            for &(k, j, ref c) in mat {
                for i in 0..n {
                    if let Some(&v) = var_index.get(&(i, k)) {
                        add(eqs.entry((i, j)).or_default(), v, c.clone());
                    }
                }
            }
            for &(i, k, ref c) in mat {
                for j in 0..n {
                    if let Some(&v) = var_index.get(&(k, j)) {
                        add(eqs.entry((i, j)).or_default(), v, -(s.clone() * c.clone()));
                    }
                }
            }
            rows.extend(eqs.into_values().filter(|r| !r.is_empty()));
        }
        out[slot] = nullspace(rows, vars.len()).len();
    }
    Ok((out[0], out[1]))
}

fn add(row: &mut SparseVec<Scalar>, k: usize, c: Scalar) {
    let e = row.entry(k).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        row.remove(&k);
    }
}

/// Dimension of `ρ(ℂ𝔖_d)` inside `End(V^{⊗d})`.
pub fn group_algebra_dim(gl: &Gl, d: usize, cap: usize) -> Result<usize> {
    check_cap(gl, 2 * d, cap)?;
    let dim = gl.dim();
    let n = dim.pow(d as u32);
    let shape = vec![Factor::V; d];
    let mut vecs = Vec::new();
    for sigma in Perm::all(d) {
        let mut flat = SparseVec::new();
        for (col, idx) in tuples(dim, d).enumerate() {
            let e = TensorVector::<Scalar>::basis(shape.clone(), &idx.iter().map(|&a| a as usize).collect::<Vec<_>>())?;
            for (ri, c) in rho(gl, &sigma, &e)?.comps() {
                flat.insert(encode(ri, dim) * n + col, c.clone());
            }
        }
        vecs.push(flat);
    }
    Ok(rank(vecs))
}

/// Outcome of the first-fundamental-theorem checks at one `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FftReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub invariant_dim: usize,
    pub sergeev_rank: usize,
    /// Every Sergeev tensor lies in the invariant space.
    pub sergeev_invariant: bool,
    pub span_equal: bool,
    pub commutant_dim: usize,
    pub commutant_odd_dim: usize,
    pub group_algebra_dim: usize,
    pub centralizer_equal: bool,
}

impl FftReport {
    pub fn passed(&self) -> bool {
        self.sergeev_invariant && self.span_equal && self.centralizer_equal
    }
}

/// Compares the Sergeev span with the exact invariants of `V^{⊗d} ⊗ V*^{⊗d}`
/// and the commutant of U(g) on `V^{⊗d}` with `ρ(ℂ𝔖_d)`.
pub fn verify_fft(gl: &Gl, d: usize, cap: usize) -> Result<FftReport> {
    let dim = gl.dim();
    let inv = invariant_subspace(gl, d, d, cap)?;
    let mut space = Echelon::new();
    for v in &inv {
        space.insert(to_sparse(v, dim));
    }
    let mut span = Echelon::new();
    let mut all_in = true;
    for sigma in Perm::all(d) {
        let s = to_sparse(&sergeev_invariant(gl, &sigma, cap)?, dim);
        all_in &= space.contains(&s);
        span.insert(s);
    }
    let (ce, co) = commutant_dims(gl, d, cap)?;
    let ga = group_algebra_dim(gl, d, cap)?;
    Ok(FftReport {
        m: gl.m,
        n: gl.n,
        d,
        invariant_dim: inv.len(),
        sergeev_rank: span.rank(),
        sergeev_invariant: all_in,
        span_equal: all_in && span.rank() == inv.len(),
        commutant_dim: ce + co,
        commutant_odd_dim: co,
        group_algebra_dim: ga,
        centralizer_equal: ce + co == ga,
    })
}

use crate::scalar::{One, Zero};

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(m: usize, n: usize) -> Gl {
        Gl::new(m, n).unwrap()
    }

    #[test]
    fn rho_examples() {
        let g = gl(1, 1);
        let s1 = Perm::transposition(2, 1).unwrap();
        let v12 = TensorVector::<Scalar>::basis(vec![Factor::V; 2], &[1, 2]).unwrap();
        let v21 = TensorVector::<Scalar>::basis(vec![Factor::V; 2], &[2, 1]).unwrap();
        assert_eq!(rho(&g, &s1, &v12).unwrap(), v21);
        let v22 = TensorVector::<Scalar>::basis(vec![Factor::V; 2], &[2, 2]).unwrap();
        assert_eq!(rho(&g, &s1, &v22).unwrap(), v22.scale(&-Scalar::one()));
        assert_eq!(rho(&g, &Perm::identity(2), &v12).unwrap(), v12);
    }

    #[test]
    fn perm_basics() {
        let p = Perm::new(&[2, 3, 1]).unwrap();
        assert_eq!(p.apply(1), 2);
        assert!(p.is_even());
        assert_eq!(p.compose(&p.inverse()), Perm::identity(3));
        assert!(Perm::new(&[1, 1]).is_err());
        assert_eq!(Perm::all(3).len(), 6);
    }

    #[test]
    fn adjacent_factors_multiply_back() {
        for p in Perm::all(4) {
            let d = p.degree();
            let prod = p
                .adjacent_factors()
                .into_iter()
                .fold(Perm::identity(d), |acc, i| acc.compose(&Perm::transposition(d, i).unwrap()));
            assert_eq!(prod, p, "{p}");
        }
    }

    #[test]
    fn sergeev_examples() {
        let g = gl(1, 1);
        let e = sergeev_invariant(&g, &Perm::identity(1), DEFAULT_TENSOR_CAP).unwrap();
        let mut canon = TensorVector::zero(TensorVector::<Scalar>::mixed_shape(1, 1));
        for a in 1..=2u8 {
            canon.add(vec![a, a], Scalar::one());
        }
        assert_eq!(e, canon);
        let s = sergeev_invariant(&g, &Perm::transposition(2, 1).unwrap(), DEFAULT_TENSOR_CAP).unwrap();
        assert_eq!(s.get(&[2, 2, 2, 2]), -Scalar::one());
        assert_eq!(s.get(&[2, 1, 2, 1]), Scalar::one());
        let id = sergeev_invariant(&g, &Perm::identity(2), DEFAULT_TENSOR_CAP).unwrap();
        assert!(id.comps().all(|(_, c)| *c == Scalar::one()));
    }

    #[test]
    fn invariant_subspace_examples() {
        let g = gl(1, 1);
        assert!(invariant_subspace(&g, 1, 0, DEFAULT_TENSOR_CAP).unwrap().is_empty());
        assert!(invariant_subspace(&g, 2, 1, DEFAULT_TENSOR_CAP).unwrap().is_empty());
        let one = invariant_subspace(&g, 1, 1, DEFAULT_TENSOR_CAP).unwrap();
        assert_eq!(one.len(), 1);
        assert!(matches!(invariant_subspace(&gl(6, 5), 2, 2, DEFAULT_TENSOR_CAP), Err(Error::Cap { .. })));
    }

    #[test]
    fn fft_small() {
        let r = verify_fft(&gl(1, 1), 1, DEFAULT_TENSOR_CAP).unwrap();
        assert_eq!((r.invariant_dim, r.sergeev_rank), (1, 1));
        assert!(r.passed());
    }
}
