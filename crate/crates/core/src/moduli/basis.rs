use std::collections::BTreeMap;

use num_traits::Zero;

use super::label::{enumerate_boundaries, stabilizer_of_subset, BoundaryLabel};
use super::{ModuliError, SpaceId};
use crate::linalg::{independent_rows, inverse, Matrix};
use crate::{q, RatVector, Rational};

/// Formal rational combination of boundary labels (b-normalised).
pub type FormalSum = BTreeMap<BoundaryLabel, Rational>;

/// Ordered basis of `N¹(X_{n,m})` together with the relations among all
/// boundary labels and the reduction of each label to the basis.
#[derive(Clone, Debug)]
pub struct BasisSpec {
    space: SpaceId,
    labels: Vec<BoundaryLabel>,
    basis: Vec<BoundaryLabel>,
    names: Vec<String>,
    relations: Vec<RatVector>,
    label_coords: Vec<RatVector>,
}

fn subset_of(mask: u64, n: usize) -> Vec<usize> {
    (1..=n).filter(|p| mask >> (p - 1) & 1 == 1).collect()
}

/// The `C(n,2) − n` relations spanning the kernel of `⊕ ℚ·D_S → N¹(M̄_{0,n})`,
/// as vectors over `enumerate_boundaries(X_n)`.
pub fn keel_relations(n: usize) -> Result<(Vec<BoundaryLabel>, Vec<RatVector>), ModuliError> {
    let s = SpaceId::full(n)?;
    let labels = enumerate_boundaries(s);
    let index: BTreeMap<&BoundaryLabel, usize> = labels.iter().enumerate().map(|(k, l)| (l, k)).collect();
    // Each divisor once: the side containing point 1.
    let sides: Vec<(u64, usize)> = (0u64..1 << n)
        .filter(|mask| mask & 1 == 1)
        .filter(|mask| (2..=n - 2).contains(&(mask.count_ones() as usize)))
        .map(|mask| {
            let l = BoundaryLabel::of_subset(s, &subset_of(mask, n)).expect("valid subset");
            (mask, index[&l])
        })
        .collect();
    let bit = |p: usize| 1u64 << (p - 1);
    let term = |inside: [usize; 2], outside: [usize; 2]| -> Vec<usize> {
        let need = bit(inside[0]) | bit(inside[1]);
        let avoid = bit(outside[0]) | bit(outside[1]);
        sides.iter().filter(|(m, _)| m & need == need && m & avoid == 0).map(|&(_, k)| k).collect()
    };
    let relation = |a: Vec<usize>, b: Vec<usize>| -> RatVector {
        let mut v = vec![Rational::zero(); labels.len()];
        for k in a {
            v[k] += q(1, 1);
        }
        for k in b {
            v[k] -= q(1, 1);
        }
        v
    };
    let mut rels = Vec::new();
    for i in 3..=n {
        for j in i + 1..=n {
            rels.push(relation(term([1, 2], [i, j]), term([1, i], [2, j])));
        }
    }
    for k in 4..=n {
        rels.push(relation(term([1, 3], [2, k]), term([1, k], [2, 3])));
    }
    Ok((labels, rels))
}

/// Keel relations pushed to `s` (possibly dependent).
fn pushed_keel(s: SpaceId, labels: &[BoundaryLabel]) -> Result<Vec<RatVector>, ModuliError> {
    let full = SpaceId::full(s.n())?;
    let (src, rels) = keel_relations(s.n())?;
    let index: BTreeMap<&BoundaryLabel, usize> = labels.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let image: Vec<(usize, Rational)> = src
        .iter()
        .map(|l| {
            let rep = l.representative(full);
            let tgt = BoundaryLabel::of_subset(s, &rep).expect("image label");
            (index[&tgt], stabilizer_of_subset(s, &rep))
        })
        .collect();
    Ok(rels
        .iter()
        .map(|r| {
            let mut v = vec![Rational::zero(); labels.len()];
            for (c, (k, st)) in r.iter().zip(&image) {
                if !c.is_zero() {
                    v[*k] += c * st;
                }
            }
            v
        })
        .collect())
}

/// The closed-form relations for `m = 2` (one) and `m = 3` (three), `n ≥ 5`.
pub fn stated_relations(s: SpaceId) -> Result<Vec<RatVector>, ModuliError> {
    let n = s.n() as i64;
    let labels = enumerate_boundaries(s);
    let index: BTreeMap<&BoundaryLabel, usize> = labels.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let vector = |terms: Vec<(i64, usize, &[usize])>| -> Result<RatVector, ModuliError> {
        let mut v = vec![Rational::zero(); labels.len()];
        for (c, i, t) in terms {
            let l = BoundaryLabel::new(s, i, t)?;
            v[index[&l]] += q(c, 1);
        }
        Ok(v)
    };
    let range = |lo: i64, hi: i64| (lo..=hi).map(|i| (i, i as usize));
    match s.m() {
        2 => {
            let mut terms: Vec<(i64, usize, &[usize])> = Vec::new();
            for (i, iu) in range(2, n - 2) {
                terms.push(((n - i) * (n - i - 1), iu, &[1, 2]));
                terms.push((-(i - 1) * (n - i - 1), iu, &[1]));
            }
            Ok(vec![vector(terms)?])
        }
        3 => {
            let chain = |a: &'static [usize], b: &'static [usize]| {
                let mut t: Vec<(i64, usize, &[usize])> = Vec::new();
                for (i, iu) in range(2, n - 2) {
                    t.push((n - i - 1, iu, a));
                    t.push((-(n - i - 1), iu, b));
                }
                t
            };
            let mut r3: Vec<(i64, usize, &[usize])> = Vec::new();
            for (i, iu) in range(3, n - 2) {
                r3.push(((n - i) * (n - i - 1), iu, &[1, 2, 3]));
                r3.push((-(i - 2) * (n - i - 1), iu, &[1, 3]));
            }
            for (i, iu) in range(2, n - 3) {
                r3.push(((n - i - 1) * (n - i - 2), iu, &[1, 2]));
                r3.push((-(i - 1) * (n - i - 2), iu, &[1]));
            }
            Ok(vec![vector(chain(&[1, 2], &[1, 3]))?, vector(chain(&[1, 3], &[2, 3]))?, vector(r3)?])
        }
        _ => Ok(Vec::new()),
    }
}

/// Builds the ordered basis and relations of `N¹(s)`.
///
/// * `m = 0`: `(b₂, …, b_{⌊n/2⌋})`; `m = 1`: `(b₂, …, b_{n−2})`, `b_k = D^k_{1}`;
/// * `m = 2`: `(b₃, …, b_{n−2}, b*₂, …, b*_{n−2})` with `b_k = D^k_{12}`,
///   `b*_k = D^k_{1}`, and the single stated relation;
/// * `m = 3`: all labels except `D²₁₂, D²₁₃, D²₂₃`, stated relations;
/// * otherwise (`n = 4`, `m ≥ 4`): Keel relations pushed down, with the
///   earliest independent labels eliminated.
pub fn relations_and_basis(s: SpaceId) -> Result<BasisSpec, ModuliError> {
    let n = s.n();
    let labels = enumerate_boundaries(s);
    let lab = |i: usize, t: &[usize]| BoundaryLabel::new(s, i, t).expect("basis label");
    let (basis, names, relations): (Vec<BoundaryLabel>, Vec<String>, Vec<RatVector>) = match s.m() {
        0 | 1 if n >= 5 => {
            let hi = if s.m() == 0 { n / 2 } else { n - 2 };
            let t: &[usize] = if s.m() == 0 { &[] } else { &[1] };
            ((2..=hi).map(|k| lab(k, t)).collect(), (2..=hi).map(|k| format!("b{k}")).collect(), Vec::new())
        }
        2 if n >= 5 => {
            let mut b: Vec<BoundaryLabel> = (3..=n - 2).map(|k| lab(k, &[1, 2])).collect();
            let mut names: Vec<String> = (3..=n - 2).map(|k| format!("b{k}")).collect();
            b.extend((2..=n - 2).map(|k| lab(k, &[1])));
            names.extend((2..=n - 2).map(|k| format!("b*{k}")));
            (b, names, stated_relations(s)?)
        }
        3 if n >= 5 => {
            let drop = [lab(2, &[1, 2]), lab(2, &[1, 3]), lab(2, &[2, 3])];
            let b: Vec<BoundaryLabel> = labels.iter().filter(|l| !drop.contains(l)).cloned().collect();
            let names = b.iter().map(BoundaryLabel::name).collect();
            (b, names, stated_relations(s)?)
        }
        _ => {
            let rels = pushed_keel(s, &labels)?;
            let keep = independent_rows(&rels, labels.len());
            let rels: Vec<RatVector> = keep.into_iter().map(|k| rels[k].clone()).collect();
            let cols: Vec<RatVector> =
                (0..labels.len()).map(|j| rels.iter().map(|r| r[j].clone()).collect()).collect();
            let eliminated = independent_rows(&cols, rels.len());
            let b: Vec<BoundaryLabel> =
                labels.iter().enumerate().filter(|(k, _)| !eliminated.contains(k)).map(|(_, l)| l.clone()).collect();
            let names = b.iter().map(|l| b_name(s, l).unwrap_or_else(|| l.name())).collect();
            (b, names, rels)
        }
    };
    let label_coords = reduce_labels(&labels, &basis, &relations);
    Ok(BasisSpec { space: s, labels, basis, names, relations, label_coords })
}

/// The `b`/`b*` name of a label for `m ≤ 2` (`b_k = D^k_{1..m}`,
/// `b*_k = D^k_1` when `m = 2`).
fn b_name(s: SpaceId, l: &BoundaryLabel) -> Option<String> {
    let (n, i, t) = (s.n(), l.i(), l.t());
    match (s.m(), t) {
        (0, []) => Some(format!("b{}", i.min(n - i))),
        (1, [1]) | (2, [1, 2]) => Some(format!("b{i}")),
        (1, []) | (2, []) => Some(format!("b{}", n - i)),
        (2, [1]) => Some(format!("b*{i}")),
        (2, [2]) => Some(format!("b*{}", n - i)),
        _ => None,
    }
}

/// Coordinates of every label in the basis, obtained by solving the
/// relations for the eliminated labels.
fn reduce_labels(labels: &[BoundaryLabel], basis: &[BoundaryLabel], relations: &[RatVector]) -> Vec<RatVector> {
    let bidx: Vec<usize> = basis.iter().map(|b| labels.iter().position(|l| l == b).expect("basis label")).collect();
    let elim: Vec<usize> = (0..labels.len()).filter(|k| !bidx.contains(k)).collect();
    assert_eq!(elim.len(), relations.len(), "one relation per eliminated label");
    let square: Vec<RatVector> =
        relations.iter().map(|r| elim.iter().map(|&k| r[k].clone()).collect()).collect();
    let inv = if elim.is_empty() {
        Vec::new()
    } else {
        inverse(&Matrix::new(square)).expect("eliminated labels are independent modulo relations").into_rows()
    };
    (0..labels.len())
        .map(|k| {
            if let Some(pos) = bidx.iter().position(|&b| b == k) {
                let mut e = vec![Rational::zero(); basis.len()];
                e[pos] = q(1, 1);
                return e;
            }
            // e_k = c·R on the eliminated columns, c = row of M⁻¹.
            let slot = elim.iter().position(|&e| e == k).unwrap();
            let c = &inv[slot];
            bidx.iter()
                .map(|&b| -relations.iter().zip(c).map(|(r, ci)| &r[b] * ci).fold(Rational::zero(), |a, x| a + x))
                .collect()
        })
        .collect()
}

impl BasisSpec {
    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn labels(&self) -> &[BoundaryLabel] {
        &self.labels
    }

    pub fn basis(&self) -> &[BoundaryLabel] {
        &self.basis
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[RatVector] {
        &self.relations
    }

    pub fn picard_number(&self) -> usize {
        self.basis.len()
    }

    pub fn boundary_count(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, l: &BoundaryLabel) -> Option<usize> {
        self.labels.binary_search(l).ok()
    }

    /// Coordinates of one label.
    pub fn label_coords(&self, l: &BoundaryLabel) -> Result<&RatVector, ModuliError> {
        self.index_of(l).map(|k| &self.label_coords[k]).ok_or_else(|| ModuliError::ForeignLabel(l.name()))
    }

    /// Reduces a formal sum of labels to basis coordinates.
    pub fn express(&self, sum: &FormalSum) -> Result<RatVector, ModuliError> {
        let mut out = vec![Rational::zero(); self.basis.len()];
        for (l, c) in sum {
            for (o, x) in out.iter_mut().zip(self.label_coords(l)?) {
                *o += c * x;
            }
        }
        Ok(out)
    }

    /// Coordinates of a relation-space vector (over all labels).
    pub fn express_vector(&self, v: &[Rational]) -> RatVector {
        let mut out = vec![Rational::zero(); self.basis.len()];
        for (c, coords) in v.iter().zip(&self.label_coords) {
            if !c.is_zero() {
                for (o, x) in out.iter_mut().zip(coords) {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// The basis element as a formal sum.
    pub fn basis_sum(&self, k: usize) -> FormalSum {
        FormalSum::from([(self.basis[k].clone(), q(1, 1))])
    }

    /// Formal sum `Σ coords_k · basis_k`.
    pub fn to_formal(&self, coords: &[Rational]) -> FormalSum {
        self.basis.iter().cloned().zip(coords.iter().cloned()).filter(|(_, c)| !c.is_zero()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::qv;

    fn sp(n: usize, m: usize) -> SpaceId {
        SpaceId::new(n, m).unwrap()
    }

    #[test]
    fn keel_counts_and_rank() {
        for n in 5..=8 {
            let (labels, rels) = keel_relations(n).unwrap();
            assert_eq!(rels.len(), n * (n - 1) / 2 - n);
            assert_eq!(rank(&Matrix::from_rows(rels, labels.len()).unwrap()), n * (n - 1) / 2 - n);
        }
    }

    #[test]
    fn stated_relations_span_pushed_keel() {
        for n in 5..=8 {
            for m in [2, 3] {
                let s = sp(n, m);
                let labels = enumerate_boundaries(s);
                let pushed = pushed_keel(s, &labels).unwrap();
                let stated = stated_relations(s).unwrap();
                let r_pushed = rank(&Matrix::from_rows(pushed.clone(), labels.len()).unwrap());
                let r_stated = rank(&Matrix::from_rows(stated.clone(), labels.len()).unwrap());
                let mut both = pushed;
                both.extend(stated);
                assert_eq!(r_stated, r_pushed);
                assert_eq!(rank(&Matrix::from_rows(both, labels.len()).unwrap()), r_pushed);
            }
        }
    }

    #[test]
    fn picard_numbers() {
        for n in 5..=10 {
            let p = |m| relations_and_basis(sp(n, m)).unwrap().picard_number();
            assert_eq!(p(0), n / 2 - 1);
            assert_eq!(p(1), n - 3);
            assert_eq!(p(2), 2 * n - 7);
            assert_eq!(p(3), 4 * n - 16);
        }
        assert_eq!(relations_and_basis(sp(4, 0)).unwrap().picard_number(), 1);
        assert_eq!(relations_and_basis(sp(4, 2)).unwrap().picard_number(), 1);
        assert_eq!(relations_and_basis(sp(4, 2)).unwrap().names(), ["b*2"]);
        assert_eq!(relations_and_basis(sp(4, 1)).unwrap().names(), ["b2"]);
        // M̄_{0,6}: 2^5 − C(6,2) − 1 = 16.
        assert_eq!(relations_and_basis(SpaceId::full(6).unwrap()).unwrap().picard_number(), 16);
    }

    #[test]
    fn x52_relation() {
        let b = relations_and_basis(sp(5, 2)).unwrap();
        assert_eq!(b.names(), ["b3", "b*2", "b*3"]);
        let b2 = BoundaryLabel::new(sp(5, 2), 2, &[1, 2]).unwrap();
        let three: RatVector = b.label_coords(&b2).unwrap().iter().map(|x| x * q(3, 1)).collect();
        assert_eq!(three, qv(&[-1, 1, 1]));
    }

    #[test]
    fn x63_expansions() {
        let s = sp(6, 3);
        let b = relations_and_basis(s).unwrap();
        assert_eq!(b.names(), ["D^2", "D^2_1", "D^2_2", "D^2_3", "D^3", "D^3_1", "D^3_2", "D^3_3"]);
        let three = |t: &[usize]| -> RatVector {
            b.label_coords(&BoundaryLabel::new(s, 2, t).unwrap()).unwrap().iter().map(|x| x * q(3, 1)).collect()
        };
        assert_eq!(three(&[1, 2]), qv(&[-1, 1, 1, 0, -3, 1, 1, -1]));
        assert_eq!(three(&[1, 3]), qv(&[-1, 1, 0, 1, -3, 1, -1, 1]));
        assert_eq!(three(&[2, 3]), qv(&[-1, 0, 1, 1, -3, -1, 1, 1]));
    }

    #[test]
    fn relations_reduce_to_zero() {
        for (n, m) in [(6, 2), (7, 3), (5, 3), (6, 6), (7, 4)] {
            let b = relations_and_basis(sp(n, m)).unwrap();
            for r in b.relations() {
                assert!(b.express_vector(r).iter().all(Zero::is_zero));
            }
            let labels = enumerate_boundaries(sp(n, m));
            for r in pushed_keel(sp(n, m), &labels).unwrap() {
                assert!(b.express_vector(&r).iter().all(Zero::is_zero));
            }
        }
    }
}
