//! Integer Smith normal form: sparse unit-pivot elimination with a dense
//! arbitrary-precision tail, plus saturated integer kernel bases.
//!
//! No modular shortcuts anywhere: torsion comes out exactly.

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

/// Rank and invariant factors (ascending divisibility chain, length = rank,
/// leading 1s included) of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub rank: usize,
    pub divisors: Vec<BigUint>,
}

impl SnfResult {
    /// The invariant factors larger than 1 (the torsion-relevant ones).
    pub fn nontrivial(&self) -> Vec<BigUint> {
        self.divisors
            .iter()
            .filter(|d| **d != BigUint::one())
            .cloned()
            .collect()
    }
}

/// Smith normal form of a sparse integer matrix given as triplets.
///
/// Strategy: eliminate with ±1 pivots chosen by a Markowitz-style fill
/// heuristic (exact, since unit pivots need no division), then finish the
/// unit-free residual with a dense big-integer Smith normal form. Entries are
/// tracked in `i128` with checked arithmetic; on overflow the computation
/// restarts the surviving submatrix in `BigInt`.
pub fn snf_sparse(rows: usize, cols: usize, triplets: &[(u32, u32, i64)]) -> SnfResult {
    let mut mat: SparseMat<i128> = SparseMat::new(rows, cols);
    for &(r, c, v) in triplets {
        if v != 0 {
            mat.add(r, c, v as i128);
        }
    }
    match mat.eliminate_units() {
        Ok(unit_rank) => {
            let residual = mat.residual_dense();
            finish(unit_rank, residual)
        }
        Err(()) => {
            // Overflow: redo the live part exactly in BigInt (cannot fail).
            let mut big: SparseMat<BigInt> = SparseMat::new(rows, cols);
            let live = mat.live_triplets();
            let pre_rank = mat.unit_rank;
            for (r, c, v) in live {
                big.add(r, c, BigInt::from(v));
            }
            let unit_rank = big.eliminate_units().expect("BigInt arithmetic cannot overflow");
            let residual = big.residual_dense();
            finish(pre_rank + unit_rank, residual)
        }
    }
}

fn finish(unit_rank: usize, residual: Vec<Vec<BigInt>>) -> SnfResult {
    let mut divisors = vec![BigUint::one(); unit_rank];
    let tail = dense_snf_diagonal(residual, None);
    let mut rank = unit_rank;
    for d in tail {
        if !d.is_zero() {
            rank += 1;
            divisors.push(d.magnitude().clone());
        }
    }
    SnfResult { rank, divisors }
}

/// Smith normal form of a small dense integer matrix.
pub fn snf_dense(m: Vec<Vec<BigInt>>) -> SnfResult {
    finish(0, m)
}

/// A basis of the full integer kernel lattice {x ∈ ℤⁿ : M x = 0}.
///
/// Computed from a column-transform Smith normal form: the transform columns
/// matching zero diagonal entries span exactly the integer kernel, so the
/// basis is saturated by construction. Each vector is normalized so its first
/// nonzero entry is positive.
pub fn integer_kernel_basis(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let diag = dense_snf_diagonal(m.to_vec(), Some(&mut v));
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let mut basis = Vec::new();
    for j in rank..cols {
        let mut vec: Vec<BigInt> = (0..cols).map(|i| v[i][j].clone()).collect();
        if let Some(first) = vec.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in &mut vec {
                    *x = -x.clone();
                }
            }
        }
        basis.push(vec);
    }
    basis
}

/// Dense Smith normal form core. Returns the diagonal (unsigned later by the
/// caller); if `v` is given, all column operations are mirrored into it.
fn dense_snf_diagonal(mut m: Vec<Vec<BigInt>>, mut v: Option<&mut Vec<Vec<BigInt>>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let lim = rows.min(cols);
    let mut t = 0;
    while t < lim {
        // Smallest-magnitude nonzero entry of the trailing submatrix.
        let mut piv: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if !m[r][c].is_zero()
                    && piv.map_or(true, |(pr, pc)| m[r][c].abs() < m[pr][pc].abs())
                {
                    piv = Some((r, c));
                }
            }
        }
        let (pr, pc) = match piv {
            Some(p) => p,
            None => break,
        };
        m.swap(t, pr);
        swap_cols(&mut m, &mut v, t, pc);
        loop {
            let mut clean = true;
            for r in (t + 1)..rows {
                if m[r][t].is_zero() {
                    continue;
                }
                let q = &m[r][t] / &m[t][t];
                if !q.is_zero() {
                    for c in t..cols {
                        let s = &q * &m[t][c];
                        m[r][c] -= s;
                    }
                }
                if !m[r][t].is_zero() {
                    m.swap(r, t);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            for c in (t + 1)..cols {
                if m[t][c].is_zero() {
                    continue;
                }
                let q = &m[t][c] / &m[t][t];
                if !q.is_zero() {
                    sub_col(&mut m, &mut v, c, t, &q);
                }
                if !m[t][c].is_zero() {
                    swap_cols(&mut m, &mut v, c, t);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Invariant-factor condition: the pivot must divide everything in
            // the trailing submatrix; folding an offending row in and looping
            // strictly shrinks the pivot gcd.
            let mut offender = None;
            'scan: for r in (t + 1)..rows {
                for c in (t + 1)..cols {
                    if !(&m[r][c] % &m[t][t]).is_zero() {
                        offender = Some(r);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(r) => {
                    for c in t..cols {
                        let x = m[r][c].clone();
                        m[t][c] += x;
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    (0..t).map(|i| m[i][i].clone()).collect()
}

fn swap_cols(m: &mut [Vec<BigInt>], v: &mut Option<&mut Vec<Vec<BigInt>>>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
    if let Some(v) = v {
        for row in v.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// col a -= q * col b.
fn sub_col(m: &mut [Vec<BigInt>], v: &mut Option<&mut Vec<Vec<BigInt>>>, a: usize, b: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let s = q * &row[b];
        row[a] -= s;
    }
    if let Some(v) = v {
        for row in v.iter_mut() {
            let s = q * &row[b];
            row[a] -= s;
        }
    }
}

/// Sparse matrix under row elimination with unit pivots.
struct SparseMat<T> {
    row_data: Vec<HashMap<u32, T>>,
    col_rows: Vec<HashSet<u32>>,
    dead_rows: Vec<bool>,
    dead_cols: Vec<bool>,
    unit_rank: usize,
}

trait PivotInt: Clone + Zero + One + Signed + CheckedMul + CheckedSub + PartialEq {
    fn is_unit(&self) -> bool;
}
impl PivotInt for i128 {
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}
impl PivotInt for BigInt {
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
}

impl<T: PivotInt> SparseMat<T> {
    fn new(rows: usize, cols: usize) -> Self {
        SparseMat {
            row_data: vec![HashMap::new(); rows],
            col_rows: vec![HashSet::new(); cols],
            dead_rows: vec![false; rows],
            dead_cols: vec![false; cols],
            unit_rank: 0,
        }
    }

    fn add(&mut self, r: u32, c: u32, v: T) {
        self.row_data[r as usize].insert(c, v);
        self.col_rows[c as usize].insert(r);
    }

    /// Eliminates ±1 pivots until none remain. Returns the number of unit
    /// pivots taken (each contributes an invariant factor 1), or `Err` on
    /// arithmetic overflow.
    fn eliminate_units(&mut self) -> Result<usize, ()> {
        let mut heap: BinaryHeap<Reverse<(u64, u32, u32)>> = BinaryHeap::new();
        for (r, row) in self.row_data.iter().enumerate() {
            for (&c, val) in row {
                if val.is_unit() {
                    heap.push(Reverse((self.cost(r as u32, c), r as u32, c)));
                }
            }
        }
        let start_rank = self.unit_rank;
        while let Some(Reverse((cost, r, c))) = heap.pop() {
            if self.dead_rows[r as usize] || self.dead_cols[c as usize] {
                continue;
            }
            let val = match self.row_data[r as usize].get(&c) {
                Some(v) if v.is_unit() => v.clone(),
                _ => continue,
            };
            let now = self.cost(r, c);
            if now > cost {
                heap.push(Reverse((now, r, c)));
                continue;
            }
            // Pivot at (r, c): clear column c by row operations. Since the
            // pivot is ±1 the subsequent column clears only touch row r, so
            // deleting row r and column c afterwards is exact.
            let pivot_row: Vec<(u32, T)> =
                self.row_data[r as usize].iter().map(|(k, v)| (*k, v.clone())).collect();
            let targets: Vec<u32> = self.col_rows[c as usize]
                .iter()
                .copied()
                .filter(|&rr| rr != r)
                .collect();
            for rr in targets {
                // factor = M[rr][c] / val; val is ±1 so this is a product.
                let factor = self.row_data[rr as usize].get(&c).unwrap().clone();
                let factor = if val.is_one() { factor } else { -factor };
                for (cc, pv) in &pivot_row {
                    let delta = factor.checked_mul(pv).ok_or(())?;
                    let entry = self.row_data[rr as usize].remove(cc);
                    let newv = match entry {
                        Some(old) => old.checked_sub(&delta).ok_or(())?,
                        None => T::zero() - delta.clone(),
                    };
                    if newv.is_zero() {
                        self.col_rows[*cc as usize].remove(&rr);
                    } else {
                        self.row_data[rr as usize].insert(*cc, newv);
                        self.col_rows[*cc as usize].insert(rr);
                    }
                }
                // Queue fresh unit candidates from the modified row.
                for (&cc, vv) in &self.row_data[rr as usize] {
                    if vv.is_unit() && !self.dead_cols[cc as usize] {
                        heap.push(Reverse((self.cost(rr, cc), rr, cc)));
                    }
                }
            }
            // Retire pivot row and column.
            for (cc, _) in &pivot_row {
                self.col_rows[*cc as usize].remove(&r);
            }
            self.row_data[r as usize].clear();
            self.dead_rows[r as usize] = true;
            self.dead_cols[c as usize] = true;
            self.unit_rank += 1;
        }
        Ok(self.unit_rank - start_rank)
    }

    fn cost(&self, r: u32, c: u32) -> u64 {
        let rn = self.row_data[r as usize].len() as u64;
        let cn = self.col_rows[c as usize].len() as u64;
        rn.saturating_sub(1) * cn.saturating_sub(1)
    }

    /// Live entries after elimination, compacted into a dense matrix.
    fn residual_dense(&self) -> Vec<Vec<BigInt>>
    where
        BigInt: From<T>,
    {
        let live = self.live_triplets();
        if live.is_empty() {
            return Vec::new();
        }
        let mut rmap: HashMap<u32, usize> = HashMap::new();
        let mut cmap: HashMap<u32, usize> = HashMap::new();
        for (r, c, _) in &live {
            let nr = rmap.len();
            rmap.entry(*r).or_insert(nr);
            let nc = cmap.len();
            cmap.entry(*c).or_insert(nc);
        }
        assert!(
            rmap.len() * cmap.len() <= 25_000_000,
            "unit-free residual unexpectedly large ({}x{})",
            rmap.len(),
            cmap.len()
        );
        let mut m = vec![vec![BigInt::zero(); cmap.len()]; rmap.len()];
        for (r, c, v) in live {
            m[rmap[&r]][cmap[&c]] = BigInt::from(v);
        }
        m
    }

    fn live_triplets(&self) -> Vec<(u32, u32, T)> {
        let mut out = Vec::new();
        for (r, row) in self.row_data.iter().enumerate() {
            if self.dead_rows[r] {
                continue;
            }
            for (&c, v) in row {
                out.push((r as u32, c, v.clone()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn dense_from(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter().map(|r| r.iter().map(|&x| bi(x)).collect()).collect()
    }

    fn sparse_from(raw: &[&[i64]]) -> SnfResult {
        let rows = raw.len();
        let cols = if rows == 0 { 0 } else { raw[0].len() };
        let mut t = Vec::new();
        for (r, row) in raw.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    t.push((r as u32, c as u32, v));
                }
            }
        }
        snf_sparse(rows, cols, &t)
    }

    /// Independent oracle: invariant factors via determinantal divisors
    /// (gcd of all k×k minors). Exponential, fine for tiny matrices.
    fn snf_by_minors(raw: &[&[i64]]) -> Vec<BigUint> {
        use num_integer::Integer;
        let rows = raw.len();
        let cols = if rows == 0 { 0 } else { raw[0].len() };
        let lim = rows.min(cols);
        let mut dets: Vec<BigUint> = Vec::new(); // D_k, k = 1..
        for k in 1..=lim {
            let mut g = BigUint::zero();
            for rsel in subsets(rows, k) {
                for csel in subsets(cols, k) {
                    let d = minor(raw, &rsel, &csel);
                    g = g.gcd(&d.magnitude());
                }
            }
            if g.is_zero() {
                break;
            }
            dets.push(g);
        }
        let mut out = Vec::new();
        let mut prev = BigUint::one();
        for d in dets {
            out.push(&d / &prev);
            prev = d;
        }
        out
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    fn minor(raw: &[&[i64]], rsel: &[usize], csel: &[usize]) -> BigInt {
        let k = rsel.len();
        if k == 0 {
            return BigInt::one();
        }
        let mut det = BigInt::zero();
        // Laplace expansion along the first selected row.
        for (j, &c) in csel.iter().enumerate() {
            if raw[rsel[0]][c] == 0 {
                continue;
            }
            let sub_r: Vec<usize> = rsel[1..].to_vec();
            let sub_c: Vec<usize> = csel
                .iter()
                .enumerate()
                .filter(|(jj, _)| *jj != j)
                .map(|(_, &cc)| cc)
                .collect();
            let term = bi(raw[rsel[0]][c]) * minor(raw, &sub_r, &sub_c);
            if j % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    #[test]
    fn known_small_matrices() {
        let r = sparse_from(&[&[2, 4], &[6, 8]]);
        assert_eq!(r.rank, 2);
        assert_eq!(r.divisors, vec![BigUint::from(2u32), BigUint::from(4u32)]);

        let r = sparse_from(&[&[1, 0], &[0, 1]]);
        assert_eq!(r.rank, 2);
        assert_eq!(r.nontrivial(), Vec::<BigUint>::new());

        let r = sparse_from(&[&[0, 0], &[0, 0]]);
        assert_eq!(r.rank, 0);

        // Diagonal needing reordering into a divisibility chain.
        let r = sparse_from(&[&[6, 0], &[0, 4]]);
        assert_eq!(r.divisors, vec![BigUint::from(2u32), BigUint::from(12u32)]);
    }

    #[test]
    fn matches_minor_oracle_on_random_matrices() {
        let mut state: u64 = 0x243f6a8885a308d3;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..200 {
            let rows = 1 + (next() % 4) as usize;
            let cols = 1 + (next() % 4) as usize;
            let raw: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| (next() % 9) as i64 - 4).collect())
                .collect();
            let refs: Vec<&[i64]> = raw.iter().map(|r| r.as_slice()).collect();
            let got = sparse_from(&refs);
            let want = snf_by_minors(&refs);
            assert_eq!(got.divisors, want, "trial {trial} on {raw:?}");
            assert_eq!(got.rank, want.len(), "trial {trial} rank on {raw:?}");
        }
    }

    #[test]
    fn unit_free_matrices_use_dense_tail() {
        // All entries even: no unit pivots at all.
        let r = sparse_from(&[&[2, 2], &[2, -2]]);
        assert_eq!(r.rank, 2);
        assert_eq!(r.divisors, vec![BigUint::from(2u32), BigUint::from(4u32)]);
    }

    #[test]
    fn kernel_basis_is_saturated() {
        // x + y + z = 0, x - z = 0 → kernel spanned by (1, -2, 1).
        let m = dense_from(&[&[1, 1, 1], &[1, 0, -1]]);
        assert_eq!(integer_kernel_basis(&m), vec![vec![bi(1), bi(-2), bi(1)]]);

        // 2x = 0 in ℤ² → kernel is all of the y-axis, primitively (0, 1).
        let m = dense_from(&[&[2, 0]]);
        assert_eq!(integer_kernel_basis(&m), vec![vec![bi(0), bi(1)]]);

        // Full-rank square matrix → empty kernel basis.
        let m = dense_from(&[&[1, 2], &[3, 4]]);
        assert!(integer_kernel_basis(&m).is_empty());
    }

    #[test]
    fn kernel_vectors_satisfy_the_system() {
        let m = dense_from(&[&[3, -6, 9, 0], &[1, 1, 1, 1]]);
        let basis = integer_kernel_basis(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            for row in &m {
                let s: BigInt = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
        // Saturation: the basis matrix's own invariant factors are all 1.
        let rows = basis.len();
        let cols = basis[0].len();
        let mut t = Vec::new();
        for (r, v) in basis.iter().enumerate() {
            for (c, x) in v.iter().enumerate() {
                let xi: i64 = x.try_into().unwrap();
                if xi != 0 {
                    t.push((r as u32, c as u32, xi));
                }
            }
        }
        let snf = snf_sparse(rows, cols, &t);
        assert_eq!(snf.rank, 2);
        assert!(snf.nontrivial().is_empty());
    }
}
