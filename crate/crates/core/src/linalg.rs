//! Exact sparse linear algebra over a [`Coeff`] field.

use std::collections::BTreeMap;

use crate::scalar::Coeff;

pub type SparseVec<C> = BTreeMap<usize, C>;

fn axpy<C: Coeff>(y: &mut SparseVec<C>, a: &C, x: &SparseVec<C>) {
    for (k, v) in x {
        let e = y.entry(*k).or_insert_with(C::zero);
        *e = e.clone() + a.clone() * v.clone();
        if e.is_zero() {
            y.remove(k);
        }
    }
}

/// Row-echelon basis grown one vector at a time. Pivot rows have leading
/// coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon<C> {
    pivots: BTreeMap<usize, SparseVec<C>>,
}

impl<C: Coeff> Default for Echelon<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> Echelon<C> {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `v` after elimination against the pivots.
    pub fn reduce(&self, mut v: SparseVec<C>) -> SparseVec<C> {
        let mut cursor = 0;
        loop {
            let next = v.range(cursor..).find(|(k, _)| self.pivots.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            match next {
                None => return v,
                Some((k, c)) => {
                    axpy(&mut v, &-c, &self.pivots[&k]);
                    cursor = k + 1;
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec<C>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v`; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec<C>) -> bool {
        let mut r = self.reduce(v);
        let Some((&k, lead)) = r.iter().next() else { return false };
        let inv = lead.inverse().expect("nonzero pivot");
        for c in r.values_mut() {
            *c = c.clone() * inv.clone();
        }
        self.pivots.insert(k, r);
        true
    }

    /// Fully reduced pivot rows.
    fn reduced_rows(&self) -> BTreeMap<usize, SparseVec<C>> {
        let mut rows = self.pivots.clone();
        let keys: Vec<usize> = rows.keys().rev().copied().collect();
        for (i, &p) in keys.iter().enumerate() {
            let row = rows[&p].clone();
            for &q in &keys[i + 1..] {
                let c = rows[&q].get(&p).cloned();
                if let Some(c) = c {
                    let target = rows.get_mut(&q).unwrap();
                    axpy(target, &-c, &row);
                }
            }
        }
        rows
    }
}

/// Basis of `{x : row·x = 0 for all rows}` in `C^ncols`.
pub fn nullspace<C: Coeff>(rows: impl IntoIterator<Item = SparseVec<C>>, ncols: usize) -> Vec<SparseVec<C>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
        if e.rank() == ncols {
            return Vec::new();
        }
    }
    let red = e.reduced_rows();
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !red.contains_key(c)) {
        let mut x = SparseVec::new();
        x.insert(f, C::one());
        for (p, row) in &red {
            if let Some(c) = row.get(&f) {
                x.insert(*p, -c.clone());
            }
        }
        out.push(x);
    }
    out
}

/// Rank of a family of vectors.
pub fn rank<C: Coeff>(vs: impl IntoIterator<Item = SparseVec<C>>) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// Inverse of a dense square matrix, `None` when singular.
pub fn invert<C: Coeff>(mat: &[Vec<C>]) -> Option<Vec<Vec<C>>> {
    let n = mat.len();
    let mut a: Vec<Vec<C>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { C::one() } else { C::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].inverse()?;
        for v in a[col].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..2 * n {
                    let d = f.clone() * a[col][j].clone();
                    a[r][j] = a[r][j].clone() - d;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Scalar, Zero};

    fn v(xs: &[(usize, i64)]) -> SparseVec<Scalar> {
        xs.iter().map(|&(k, c)| (k, Scalar::from_int(c))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[(0, 2), (1, 4)])));
    }

    #[test]
    fn nullspace_basis() {
        let rows = vec![v(&[(0, 1), (1, -1)]), v(&[(1, 1), (2, -1)])];
        let ns = nullspace(rows.clone(), 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot = r.iter().fold(Scalar::zero(), |acc, (k, c)| acc + c.clone() * ns[0].get(k).cloned().unwrap_or_else(Scalar::zero));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn dense_inverse() {
        let m = vec![vec![Scalar::from_int(2), Scalar::from_int(1)], vec![Scalar::from_int(1), Scalar::from_int(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv[0][0], Scalar::from_int(1));
        assert_eq!(inv[0][1], Scalar::from_int(-1));
        assert!(invert(&[vec![Scalar::zero()]]).is_none());
    }
}
