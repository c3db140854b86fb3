//! Exact rational linear programming (two-phase simplex, Bland's rule).
//!
//! Every convexity decision in the crate — weak hyperbolicity, face
//! nonemptiness, interior tests — funnels through this module so that the
//! decisions are exact, not floating-point.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Result of an exact LP solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// Optimum attained; payload is the optimal objective value.
    Optimal(BigRational),
    Infeasible,
    Unbounded,
}

/// Minimizes `c·x` subject to `a x = b`, `x ≥ 0`.
///
/// Dense tableau simplex over `BigRational` with Bland's rule for both the
/// entering and the leaving variable, which guarantees termination.
pub fn solve_min(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { c.len() } else { a[0].len() };
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);
    debug_assert_eq!(c.len(), n);

    // Tableau rows: [ real columns | artificial columns | rhs ].
    let total = n + m;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r: Vec<BigRational> = Vec::with_capacity(total + 1);
        for x in row {
            r.push(if flip { -x.clone() } else { x.clone() });
        }
        for j in 0..m {
            r.push(if j == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        r.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..total).collect();

    // Phase I: minimize the sum of artificials.
    let phase1_cost = |j: usize| {
        if j < n {
            BigRational::zero()
        } else {
            BigRational::one()
        }
    };
    let mut z = reduced_costs(&t, &basis, total, &phase1_cost);
    iterate(&mut t, &mut basis, &mut z, total, total);
    let phase1_value = -z[total].clone();
    if !phase1_value.is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining artificials out of the basis; rows that cannot pivot on
    // a real column are redundant and get dropped.
    let mut keep: Vec<bool> = vec![true; t.len()];
    for i in 0..t.len() {
        if basis[i] < n {
            continue;
        }
        match (0..n).find(|&j| !t[i][j].is_zero()) {
            Some(j) => pivot(&mut t, &mut basis, &mut z, i, j),
            None => keep[i] = false,
        }
    }
    if keep.iter().any(|k| !k) {
        let mut nt = Vec::new();
        let mut nb = Vec::new();
        for (i, row) in t.into_iter().enumerate() {
            if keep[i] {
                nt.push(row);
                nb.push(basis[i]);
            }
        }
        t = nt;
        basis = nb;
    }

    // Phase II over the real columns only.
    let phase2_cost = |j: usize| {
        if j < n {
            c[j].clone()
        } else {
            BigRational::zero()
        }
    };
    let mut z = reduced_costs(&t, &basis, total, &phase2_cost);
    if !iterate(&mut t, &mut basis, &mut z, n, total) {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal(-z[total].clone())
}

/// True iff `a x = b`, `x ≥ 0` is feasible.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let n = if a.is_empty() { 0 } else { a[0].len() };
    let c = vec![BigRational::zero(); n];
    solve_min(a, b, &c) != LpOutcome::Infeasible
}

/// Reduced-cost row `z[j] = c_j − c_B · T[:,j]`, with `z[total] = −objective`.
fn reduced_costs(
    t: &[Vec<BigRational>],
    basis: &[usize],
    total: usize,
    cost: &dyn Fn(usize) -> BigRational,
) -> Vec<BigRational> {
    let mut z: Vec<BigRational> = (0..=total).map(|j| {
        if j < total {
            cost(j)
        } else {
            BigRational::zero()
        }
    }).collect();
    for (i, row) in t.iter().enumerate() {
        let cb = cost(basis[i]);
        if cb.is_zero() {
            continue;
        }
        for j in 0..=total {
            z[j] -= &cb * &row[j];
        }
    }
    z
}

/// Runs simplex iterations until optimal (true) or unbounded (false).
/// Entering candidates range over columns `0..enter_limit`.
fn iterate(
    t: &mut [Vec<BigRational>],
    basis: &mut [usize],
    z: &mut [BigRational],
    enter_limit: usize,
    total: usize,
) -> bool {
    loop {
        // Bland: smallest-index column with negative reduced cost.
        let entering = (0..enter_limit).find(|&j| z[j].is_negative());
        let j = match entering {
            Some(j) => j,
            None => return true,
        };
        // Ratio test; ties broken by the smallest basis index (Bland).
        let mut best: Option<(BigRational, usize, usize)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[j].is_positive() {
                let ratio = &row[total] / &row[j];
                let cand = (ratio, basis[i], i);
                best = Some(match best {
                    None => cand,
                    Some(cur) => {
                        if (cand.0.clone(), cand.1) < (cur.0.clone(), cur.1) {
                            cand
                        } else {
                            cur
                        }
                    }
                });
            }
        }
        let (_, _, i) = match best {
            Some(b) => b,
            None => return false,
        };
        pivot(t, basis, z, i, j);
    }
}

fn pivot(
    t: &mut [Vec<BigRational>],
    basis: &mut [usize],
    z: &mut [BigRational],
    i: usize,
    j: usize,
) {
    let p = t[i][j].clone();
    for x in t[i].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[i].clone();
    for (r, row) in t.iter_mut().enumerate() {
        if r == i || row[j].is_zero() {
            continue;
        }
        let f = row[j].clone();
        for (x, pv) in row.iter_mut().zip(&pivot_row) {
            *x -= &f * pv;
        }
    }
    if !z[j].is_zero() {
        let f = z[j].clone();
        for (x, pv) in z.iter_mut().zip(&pivot_row) {
            *x -= &f * pv;
        }
    }
    basis[i] = j;
}

/// True iff the origin lies in the convex hull of the given k-vectors:
/// feasibility of `Σ tᵢ vᵢ = 0, Σ tᵢ = 1, t ≥ 0`.
pub fn origin_in_hull(vectors: &[&[BigRational]]) -> bool {
    if vectors.is_empty() {
        return false;
    }
    let k = vectors[0].len();
    let n = vectors.len();
    let mut a = vec![vec![BigRational::zero(); n]; k + 1];
    for (i, v) in vectors.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            a[r][i] = x.clone();
        }
        a[k][i] = BigRational::one();
    }
    let mut b = vec![BigRational::zero(); k + 1];
    b[k] = BigRational::one();
    feasible(&a, &b)
}

/// The largest `t` such that `Σ uᵢ vᵢ = 0, Σ uᵢ = 1, uᵢ ≥ t` is solvable,
/// or `None` if even `t = 0` is infeasible. Positive iff the origin admits a
/// representation with all coefficients strictly positive.
pub fn hull_slack(vectors: &[&[BigRational]]) -> Option<BigRational> {
    if vectors.is_empty() {
        return None;
    }
    let k = vectors[0].len();
    let n = vectors.len();
    // Substitute uᵢ = t + wᵢ with w ≥ 0, t ≥ 0; variables (w₁..wₙ, t).
    let mut a = vec![vec![BigRational::zero(); n + 1]; k + 1];
    for (i, v) in vectors.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            a[r][i] = x.clone();
            a[r][n] += x;
        }
        a[k][i] = BigRational::one();
    }
    a[k][n] = BigRational::from_integer(n.into());
    let mut b = vec![BigRational::zero(); k + 1];
    b[k] = BigRational::one();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = -BigRational::one();
    match solve_min(&a, &b, &c) {
        LpOutcome::Optimal(v) => Some(-v),
        LpOutcome::Infeasible => None,
        // t ≤ 1/n on the feasible set, so the LP is never unbounded.
        LpOutcome::Unbounded => unreachable!("hull_slack objective is bounded"),
    }
}
