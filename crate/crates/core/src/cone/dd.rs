//! Double description: H-representation → extreme rays and lineality.
//!
//! The cone `{x : A x ≥ 0, E x = 0}` splits as `L ⊕ C'` where `L` is its
//! lineality space and `C' = C ∩ V`, `V = ker E ∩ L⊥`. In coordinates of a
//! basis of `V` the cone `C'` is pointed, so the textbook incremental
//! algorithm applies: start from a simplicial cone cut out by a maximal
//! independent set of rows, then insert the remaining rows in order, joining
//! adjacent ray pairs across each new hyperplane.

use crate::linalg::{self, dot, independent_rows, inverse, kernel_basis, primitive, Matrix};
use crate::scalar::Scalar;

/// Extreme rays (primitive, sorted, orthogonal to the lineality space) and a
/// canonical lineality basis.
pub(crate) fn extreme_rays<T: Scalar>(
    dim: usize,
    inequalities: &[Vec<T>],
    equations: &[Vec<T>],
) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
    let mut all = inequalities.to_vec();
    all.extend(equations.iter().cloned());
    let lineality = kernel_basis(&Matrix::from_rows(all, dim).expect("row length"));

    let mut sub = equations.to_vec();
    sub.extend(lineality.iter().cloned());
    let basis = kernel_basis(&Matrix::from_rows(sub, dim).expect("row length"));
    let k = basis.len();
    if k == 0 {
        return (Vec::new(), lineality);
    }

    // Inequalities restricted to V, in basis coordinates.
    let rows: Vec<Vec<T>> = inequalities
        .iter()
        .map(|a| basis.iter().map(|b| dot(a, b)).collect())
        .collect();
    let rays_y = pointed_dd(&rows, k);

    let mut rays: Vec<Vec<T>> = rays_y
        .iter()
        .map(|y| {
            let x = linalg::combination(dim, y.iter().zip(basis.iter().map(Vec::as_slice)));
            primitive(&x).expect("extreme ray is nonzero")
        })
        .collect();
    rays.sort();
    rays.dedup();
    (rays, lineality)
}

#[derive(Clone)]
struct Ray<T> {
    v: Vec<T>,
    zeros: Bits,
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Extreme rays of the pointed cone `{y : rows·y ≥ 0}` in dimension `k`.
/// `rows` must have rank `k`.
fn pointed_dd<T: Scalar>(rows: &[Vec<T>], k: usize) -> Vec<Vec<T>> {
    let m = rows.len();
    let init = independent_rows(rows, k);
    assert_eq!(init.len(), k, "cone is not pointed after removing lineality");

    // Simplicial start: the columns of A_S⁻¹.
    let a_s = Matrix::new(init.iter().map(|&i| rows[i].clone()).collect());
    let inv = inverse(&a_s).expect("independent rows");
    let mut rays: Vec<Ray<T>> = (0..k)
        .map(|j| {
            let v = primitive(&inv.column(j)).expect("nonzero column");
            let mut zeros = Bits::new(m);
            for (t, &i) in init.iter().enumerate() {
                if t != j {
                    zeros.set(i);
                }
            }
            Ray { v, zeros }
        })
        .collect();

    let in_init: Vec<bool> = (0..m).map(|i| init.contains(&i)).collect();
    // Zero sets only track processed rows; unprocessed rows are marked later.
    for i in 0..m {
        if in_init[i] {
            continue;
        }
        let a = &rows[i];
        let vals: Vec<T> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for (idx, s) in vals.iter().enumerate() {
            if s.is_positive() {
                pos.push(idx);
            } else if s.is_negative() {
                neg.push(idx);
            } else {
                zero.push(idx);
            }
        }
        if neg.is_empty() {
            for &z in &zero {
                rays[z].zeros.set(i);
            }
            continue;
        }
        let mut next: Vec<Ray<T>> = Vec::with_capacity(pos.len() + zero.len());
        for &p in &pos {
            next.push(rays[p].clone());
        }
        for &z in &zero {
            let mut r = rays[z].clone();
            r.zeros.set(i);
            next.push(r);
        }
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < k || !adjacent(&rays, p, q, &common) {
                    continue;
                }
                let sp = &vals[p];
                let sq = &vals[q];
                let v: Vec<T> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| sp.clone() * x.clone() - sq.clone() * y.clone())
                    .collect();
                let mut zeros = common;
                zeros.set(i);
                next.push(Ray { v: primitive(&v).expect("adjacent rays are independent"), zeros });
            }
        }
        rays = next;
    }
    rays.into_iter().map(|r| r.v).collect()
}

/// Combinatorial test: `p` and `q` span a 2-face iff no other current ray
/// is tight on every row where both are.
fn adjacent<T>(rays: &[Ray<T>], p: usize, q: usize, common: &Bits) -> bool {
    rays.iter()
        .enumerate()
        .all(|(r, ray)| r == p || r == q || ray.zeros.and(common) != *common)
}
