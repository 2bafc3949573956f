//! Exact phase-I simplex with Bland's rule.
//!
//! Decides whether `target = Σ λᵢ gᵢ + Σ μⱼ fⱼ` has a solution with `λ ≥ 0`
//! (the `fⱼ` are free directions). On infeasibility the final basis yields a
//! Farkas functional `y` with `y·gᵢ ≥ 0`, `y·fⱼ = 0`, `y·target < 0`.

use crate::scalar::Scalar;

pub(crate) enum Feasibility<T> {
    Feasible { lambda: Vec<T>, mu: Vec<T> },
    Infeasible { functional: Vec<T> },
}

pub(crate) fn combination<T: Scalar>(gens: &[Vec<T>], free: &[Vec<T>], target: &[T]) -> Feasibility<T> {
    let d = target.len();
    let ng = gens.len();
    let nf = free.len();
    // Structural columns: gens, then +free, then −free.
    let nstruct = ng + 2 * nf;
    let ncols = nstruct + d;
    let column = |j: usize, i: usize| -> T {
        if j < ng {
            gens[j][i].clone()
        } else if j < ng + nf {
            free[j - ng][i].clone()
        } else {
            -free[j - ng - nf][i].clone()
        }
    };

    let sign: Vec<bool> = target.iter().map(|b| b.is_negative()).collect();
    let flip = |i: usize, x: T| if sign[i] { -x } else { x };

    // Tableau rows: [structural | artificial | rhs].
    let mut tab: Vec<Vec<T>> = (0..d)
        .map(|i| {
            let mut row: Vec<T> = (0..nstruct).map(|j| flip(i, column(j, i))).collect();
            row.extend((0..d).map(|a| if a == i { T::one() } else { T::zero() }));
            row.push(flip(i, target[i].clone()));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (nstruct..ncols).collect();

    // Reduced costs of the phase-I objective Σ artificials.
    let mut cost: Vec<T> = vec![T::zero(); ncols + 1];
    for row in &tab {
        for j in 0..nstruct {
            cost[j] = cost[j].clone() - row[j].clone();
        }
        cost[ncols] = cost[ncols].clone() - row[ncols].clone();
    }

    while let Some(enter) = (0..nstruct).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..d {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = tab[i][ncols].clone() / tab[i][enter].clone();
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let best = tab[l][ncols].clone() / tab[l][enter].clone();
                    if ratio < best || (ratio == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let r = leave.expect("phase-I objective is bounded below");
        pivot(&mut tab, &mut cost, r, enter);
        basis[r] = enter;
    }

    let objective = -cost[ncols].clone();
    if objective.is_zero() {
        let mut x = vec![T::zero(); nstruct];
        for (i, &b) in basis.iter().enumerate() {
            if b < nstruct {
                x[b] = tab[i][ncols].clone();
            }
        }
        let lambda = x[..ng].to_vec();
        let mu = (0..nf).map(|j| x[ng + j].clone() - x[ng + nf + j].clone()).collect();
        Feasibility::Feasible { lambda, mu }
    } else {
        // y_i = 1 − (reduced cost of artificial i); the functional is −y,
        // with the row sign flips undone.
        let functional = (0..d)
            .map(|i| {
                let y = T::one() - cost[nstruct + i].clone();
                flip(i, -y)
            })
            .collect();
        Feasibility::Infeasible { functional }
    }
}

fn pivot<T: Scalar>(tab: &mut [Vec<T>], cost: &mut [T], r: usize, c: usize) {
    let p = tab[r][c].clone();
    for x in tab[r].iter_mut() {
        *x = x.clone() / p.clone();
    }
    let prow = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            *x = x.clone() - f.clone() * y.clone();
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            *x = x.clone() - f.clone() * y.clone();
        }
    }
}
