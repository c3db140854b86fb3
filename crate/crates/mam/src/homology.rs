//! Integer homology of the intersection manifolds attached to a face lattice.
//!
//! Writing P for the polytope and F_i for its (possibly empty) facets, the
//! closed manifold Z carried by a configuration satisfies
//!
//! ```text
//! H_q(Z) = ⊕_J H_q(P, P_J),   P_J = ∪_{i∈J} F_i,
//! ```
//!
//! summed over all subsets J of the coordinate indices; the bounded half Z₊
//! keeps only the subsets avoiding one chosen index. `relative_homology`
//! computes a single pair from the order complex of the face poset.
//! `homology_z` evaluates the whole direct sum through the nerve of the
//! facet covering of P_J, memoized over the per-ray-class membership counts
//! of J, switching to the combinatorial Alexander dual complex whenever that
//! is the smaller one.

use crate::chain::{chain_homology, ChainHomology};
use crate::polytope::{FaceLattice, FeasibilityCache};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Default ceiling on the number of order-complex simplices materialized by
/// a single homology computation.
pub const DEFAULT_SIMPLEX_CAP: usize = 2_000_000;

/// Finitely generated graded abelian group: free rank plus torsion
/// coefficients (ascending divisibility) per degree. Trailing trivial
/// degrees are trimmed, so equality is degree-wise equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedGroup {
    ranks: Vec<usize>,
    torsion: Vec<Vec<BigUint>>,
}

impl GradedGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from per-degree data; the lists may differ in length and are
    /// padded, then normalized.
    pub fn from_parts(ranks: Vec<usize>, torsion: Vec<Vec<BigUint>>) -> Self {
        let mut g = GradedGroup { ranks, torsion };
        g.normalize();
        g
    }

    /// Free group with the given ranks and no torsion.
    pub fn from_ranks(ranks: &[usize]) -> Self {
        Self::from_parts(ranks.to_vec(), Vec::new())
    }

    fn normalize(&mut self) {
        let len = self.ranks.len().max(self.torsion.len());
        self.ranks.resize(len, 0);
        self.torsion.resize(len, Vec::new());
        while let (Some(0), Some(t)) = (self.ranks.last(), self.torsion.last()) {
            if !t.is_empty() {
                break;
            }
            self.ranks.pop();
            self.torsion.pop();
        }
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.ranks.get(degree).copied().unwrap_or(0)
    }

    pub fn torsion_at(&self, degree: usize) -> &[BigUint] {
        self.torsion.get(degree).map(|t| t.as_slice()).unwrap_or(&[])
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn torsion(&self) -> &[Vec<BigUint>] {
        &self.torsion
    }

    /// Largest degree carrying a nonzero group, if any.
    pub fn max_degree(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(|t| t.is_empty())
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// Alternating sum of ranks.
    pub fn euler(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(q, &r)| if q % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    pub fn add_assign(&mut self, other: &GradedGroup) {
        self.add_assign_scaled(other, 1);
    }

    /// Adds `copies` direct-sum copies of `other`, recombining torsion into
    /// invariant-factor form degree by degree.
    pub fn add_assign_scaled(&mut self, other: &GradedGroup, copies: usize) {
        if copies == 0 || other.is_zero() {
            return;
        }
        let len = self.ranks.len().max(other.ranks.len());
        self.ranks.resize(len, 0);
        self.torsion.resize(len, Vec::new());
        for q in 0..other.ranks.len() {
            self.ranks[q] += other.ranks[q] * copies;
            if !other.torsion[q].is_empty() {
                self.torsion[q] = merge_torsion(&self.torsion[q], &other.torsion[q], copies);
            }
        }
    }

    /// JSON value in the shape `{"ranks": [...], "torsion": [[...], ...]}`.
    /// Torsion coefficients exceeding u64 fall back to decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let torsion: Vec<Vec<serde_json::Value>> = self
            .torsion
            .iter()
            .map(|per_degree| {
                per_degree
                    .iter()
                    .map(|c| match u64::try_from(c) {
                        Ok(v) => serde_json::Value::from(v),
                        Err(_) => serde_json::Value::from(c.to_string()),
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({ "ranks": self.ranks, "torsion": torsion })
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for q in 0..self.ranks.len() {
            if self.ranks[q] == 0 && self.torsion[q].is_empty() {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "H_{q} = ")?;
            let mut parts: Vec<String> = Vec::new();
            match self.ranks[q] {
                0 => {}
                1 => parts.push("Z".to_string()),
                r => parts.push(format!("Z^{r}")),
            }
            for c in &self.torsion[q] {
                parts.push(format!("Z/{c}"));
            }
            write!(f, "{}", parts.join(" + "))?;
        }
        Ok(())
    }
}

/// Prime factorization by trial division (torsion coefficients are small).
fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let mut e = 0u32;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if n > BigUint::one() {
        out.push((n, 1));
    }
    out
}

fn accumulate_prime_powers(exps: &mut HashMap<BigUint, Vec<u32>>, c: &BigUint, times: usize) {
    for (p, e) in factorize(c) {
        let v = exps.entry(p).or_default();
        for _ in 0..times {
            v.push(e);
        }
    }
}

/// Invariant factors of T_a ⊕ T_b^copies, both inputs already in
/// invariant-factor form.
fn merge_torsion(a: &[BigUint], b: &[BigUint], copies: usize) -> Vec<BigUint> {
    if b.is_empty() || copies == 0 {
        return a.to_vec();
    }
    if a.is_empty() && copies == 1 {
        return b.to_vec();
    }
    let mut exps: HashMap<BigUint, Vec<u32>> = HashMap::new();
    for c in a {
        accumulate_prime_powers(&mut exps, c, 1);
    }
    for c in b {
        accumulate_prime_powers(&mut exps, c, copies);
    }
    let count = exps.values().map(|v| v.len()).max().unwrap_or(0);
    let mut factors = vec![BigUint::one(); count];
    for (p, v) in exps.iter_mut() {
        v.sort_unstable_by(|x, y| y.cmp(x));
        for (i, e) in v.iter().enumerate() {
            factors[i] *= p.pow(*e);
        }
    }
    factors.reverse();
    factors
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("too_large: order complex has {simplices} simplices, cap {cap}")]
    TooLarge { simplices: usize, cap: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Homology of the pair (P, P_J), P_J = union of the facets indexed by `j`
/// (0-based), as simplicial homology of the order complex of the face poset
/// relative to the chains lying in P_J. Refuses to materialize more than
/// `cap` simplices.
pub fn relative_homology(
    lat: &FaceLattice,
    j: &[usize],
    cap: usize,
) -> Result<GradedGroup, HomologyError> {
    assert!(!lat.empty_manifold, "relative homology needs a nonempty polytope");
    let n = lat.n();
    let mut jmask: u32 = 0;
    for &i in j {
        assert!(i < n, "facet index {i} out of range for n = {n}");
        jmask |= 1 << i;
    }

    // Poset elements ordered so that every chain is ascending: bigger index
    // masks (smaller faces) first.
    let mut order: Vec<u32> = lat.faces.iter().map(|f| f.mask).collect();
    order.sort_unstable_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    let count = order.len();

    let mut succ: Vec<Vec<u32>> = vec![Vec::new(); count];
    for a in 0..count {
        for b in (a + 1)..count {
            let (ma, mb) = (order[a], order[b]);
            if mb != ma && mb & ma == mb {
                succ[a].push(b as u32);
            }
        }
    }
    // chains_from[a]: chains starting at a (prefix-closed count of the
    // whole order complex, survivors or not).
    let mut chains_from = vec![0usize; count];
    for a in (0..count).rev() {
        let mut c = 1usize;
        for &b in &succ[a] {
            c = c.saturating_add(chains_from[b as usize]);
        }
        chains_from[a] = c;
    }
    let total = chains_from.iter().fold(0usize, |acc, &c| acc.saturating_add(c));
    if total > cap {
        return Err(HomologyError::TooLarge { simplices: total, cap });
    }

    // A chain lies in the subdivision of P_J exactly when its largest face
    // (the last, smallest-mask element) is contained in some F_i, i ∈ J;
    // only the other chains generate the quotient complex.
    let mut by_dim: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut path: Vec<u32> = Vec::new();
    for start in 0..count {
        emit_chains(start, &order, &succ, jmask, &mut path, &mut by_dim);
    }
    let ch = chain_homology(&by_dim, false);
    let (ranks, torsion) = ch.groups.into_iter().unzip();
    Ok(GradedGroup::from_parts(ranks, torsion))
}

fn emit_chains(
    a: usize,
    order: &[u32],
    succ: &[Vec<u32>],
    jmask: u32,
    path: &mut Vec<u32>,
    by_dim: &mut Vec<Vec<Vec<u32>>>,
) {
    path.push(a as u32);
    if order[a] & jmask == 0 {
        let dim = path.len() - 1;
        if by_dim.len() <= dim {
            by_dim.resize(dim + 1, Vec::new());
        }
        by_dim[dim].push(path.clone());
    }
    for &b in &succ[a] {
        emit_chains(b as usize, order, succ, jmask, path, by_dim);
    }
    path.pop();
}

/// Selector between the closed manifold (sum over all index subsets J) and
/// the bounded half (only subsets avoiding one 0-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Half {
    None,
    Exclude(usize),
}

/// Homology of Z (or of the bounded half Z₊) as the direct sum of the pair
/// groups H_*(P, P_J) over the selected subsets J.
///
/// Each pair is computed from the nerve of its facet covering, so the value
/// depends only on how many members of each ray class J contains; subsets
/// are grouped accordingly and weighted by binomial multiplicities.
pub fn homology_z(lat: &FaceLattice, half: Half) -> GradedGroup {
    assert!(!lat.empty_manifold, "homology needs a nonempty polytope");
    let n = lat.n();
    let (class_of, members) = lat.cfg.ray_classes();
    let m = members.len();
    let sizes: Vec<usize> = members.iter().map(|v| v.len()).collect();
    let excluded_class = match half {
        Half::None => None,
        Half::Exclude(i) => {
            assert!(i < n, "excluded index {i} out of range for n = {n}");
            Some(class_of[i])
        }
    };

    let mut cache = FeasibilityCache::new(&lat.cfg);
    let mut memo: HashMap<Vec<usize>, GradedGroup> = HashMap::new();
    let mut total = GradedGroup::zero();
    let mut counts = vec![0usize; m];
    loop {
        let mut copies = 1usize;
        for c in 0..m {
            let avail = if excluded_class == Some(c) {
                sizes[c] - 1
            } else {
                sizes[c]
            };
            copies *= binomial(avail, counts[c]);
            if copies == 0 {
                break;
            }
        }
        if copies > 0 {
            if !memo.contains_key(&counts) {
                let value = pair_homology_of_pattern(&counts, &sizes, &mut cache);
                memo.insert(counts.clone(), value);
            }
            total.add_assign_scaled(&memo[&counts], copies);
        }
        let mut c = 0;
        loop {
            if c == m {
                return total;
            }
            if counts[c] < sizes[c] {
                counts[c] += 1;
                break;
            }
            counts[c] = 0;
            c += 1;
        }
    }
}

/// H_*(P, P_J) for any J containing `counts[c]` members of ray class c.
///
/// The nerve N = {σ ⊆ J : F_σ ≠ ∅} of the facet covering satisfies
/// H_q(P, P_J) = H̃_{q−1}(N). When N has an apex vertex it is a cone and
/// everything vanishes. Otherwise the groups come from the simplicial chain
/// complex of either N or its combinatorial Alexander dual
/// N^∨ = {τ ⊆ J : J∖τ ∉ N}, whichever has fewer faces, related by
/// rank H̃_i(N) = rank H̃_{|J|−i−3}(N^∨) and
/// torsion H̃_i(N) = torsion H̃_{|J|−i−4}(N^∨).
fn pair_homology_of_pattern(
    counts: &[usize],
    sizes: &[usize],
    cache: &mut FeasibilityCache,
) -> GradedGroup {
    let m = counts.len();
    let jsize: usize = counts.iter().sum();
    if jsize == 0 {
        // N = {∅}: H_0(P, ∅) = H_0(P) = ℤ.
        return GradedGroup::from_ranks(&[1]);
    }
    assert!(jsize <= 24, "nerve tables support at most 24 selected indices");

    // Local vertices 0..jsize stand for the chosen members; only their class
    // matters. F_σ ≠ ∅ iff the classes retaining a member outside σ contain
    // the origin in the convex hull of their rays.
    let mut class_pos_mask = vec![0u32; m];
    let mut p = 0u32;
    for (c, &cnt) in counts.iter().enumerate() {
        for _ in 0..cnt {
            class_pos_mask[c] |= 1 << p;
            p += 1;
        }
    }
    let full: u32 = ((1u64 << jsize) - 1) as u32;
    let mut is_face = vec![false; 1usize << jsize];
    let mut n_faces = 0usize;
    for sigma in 0..=full {
        let mut outside = 0u32;
        for c in 0..m {
            if ((sigma & class_pos_mask[c]).count_ones() as usize) < sizes[c] {
                outside |= 1 << c;
            }
        }
        if cache.hull_of_classes(outside) {
            is_face[sigma as usize] = true;
            n_faces += 1;
        }
    }

    // Apex filter: vertex v with σ ∪ {v} ∈ N for every σ ∈ N makes N a cone.
    let mut bad = 0u32;
    for sigma in 0..=full {
        if !is_face[sigma as usize] {
            continue;
        }
        let mut rest = full & !sigma;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if !is_face[(sigma | 1 << v) as usize] {
                bad |= 1 << v;
            }
        }
    }
    if bad != full {
        return GradedGroup::zero();
    }

    let n_dual = (1usize << jsize) - n_faces;
    let dual = n_faces > n_dual;
    let by_dim = if dual {
        simplices_from_masks(jsize, |s| !is_face[(full ^ s as u32) as usize])
    } else {
        simplices_from_masks(jsize, |s| is_face[s])
    };
    let ch = chain_homology(&by_dim, true);

    let mut ranks = Vec::with_capacity(jsize + 1);
    let mut torsion = Vec::with_capacity(jsize + 1);
    for q in 0..=jsize {
        let i = q as isize - 1;
        if dual {
            let d = jsize as isize - i - 3;
            ranks.push(reduced_rank(&ch, d));
            torsion.push(reduced_torsion(&ch, d - 1));
        } else {
            ranks.push(reduced_rank(&ch, i));
            torsion.push(reduced_torsion(&ch, i));
        }
    }
    GradedGroup::from_parts(ranks, torsion)
}

/// Nonempty subsets of {0..jsize} selected by `keep`, grouped by dimension
/// as sorted vertex lists.
fn simplices_from_masks(jsize: usize, keep: impl Fn(usize) -> bool) -> Vec<Vec<Vec<u32>>> {
    let mut by_dim: Vec<Vec<Vec<u32>>> = vec![Vec::new(); jsize];
    for s in 1usize..1 << jsize {
        if !keep(s) {
            continue;
        }
        let verts: Vec<u32> = (0..jsize as u32).filter(|v| s >> v & 1 == 1).collect();
        by_dim[verts.len() - 1].push(verts);
    }
    by_dim
}

fn reduced_rank(ch: &ChainHomology, degree: isize) -> usize {
    match degree {
        -1 => ch.neg1.0,
        d if d >= 0 => ch.groups.get(d as usize).map(|(r, _)| *r).unwrap_or(0),
        _ => 0,
    }
}

fn reduced_torsion(ch: &ChainHomology, degree: isize) -> Vec<BigUint> {
    match degree {
        -1 => ch.neg1.1.clone(),
        d if d >= 0 => ch
            .groups
            .get(d as usize)
            .map(|(_, t)| t.clone())
            .unwrap_or_default(),
        _ => Vec::new(),
    }
}

/// Integer homology of a symbolic manifold expression, computed
/// structurally: spheres and disks as base cases, products by the Kunneth
/// formula (everything in scope is torsion free), connected sums by summing
/// middle degrees, boundary connected sums by summing positive degrees,
/// punctured products by dropping the top class, and exteriors of sphere
/// products inside a sphere via Alexander duality.
pub fn expression_homology(
    expr: &crate::classify::ManifoldExpression,
) -> Result<GradedGroup, HomologyError> {
    use crate::classify::ManifoldExpression as E;
    let sphere_product = |a: usize, b: usize| -> Vec<usize> {
        let mut ranks = vec![0usize; a + b + 1];
        ranks[0] += 1;
        ranks[a] += 1;
        ranks[b] += 1;
        ranks[a + b] += 1;
        ranks
    };
    match expr {
        E::Empty => Ok(GradedGroup::zero()),
        E::Point | E::Disk(_) => Ok(GradedGroup::from_ranks(&[1])),
        E::Sphere(0) => Ok(GradedGroup::from_ranks(&[2])),
        E::Sphere(d) => {
            let mut ranks = vec![0; d + 1];
            ranks[0] = 1;
            ranks[*d] = 1;
            Ok(GradedGroup::from_ranks(&ranks))
        }
        E::Product(factors) => {
            let mut ranks = vec![1usize];
            for f in factors {
                let h = expression_homology(f)?;
                if !h.is_torsion_free() {
                    return Err(HomologyError::Unsupported(
                        "Kunneth with torsion factors".into(),
                    ));
                }
                let mut next = vec![0usize; ranks.len() + h.ranks().len()];
                for (i, &a) in ranks.iter().enumerate() {
                    for (j, &b) in h.ranks().iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                ranks = next;
            }
            Ok(GradedGroup::from_ranks(&ranks))
        }
        E::ConnectedSum(summands) => {
            let m = expr.dim();
            if m == 0 || summands.iter().any(|s| !s.is_closed() || s.dim() != m) {
                return Err(HomologyError::Unsupported(
                    "connected sum needs closed equi-dimensional summands of positive dimension"
                        .into(),
                ));
            }
            let mut ranks = vec![0usize; m + 1];
            ranks[0] = 1;
            ranks[m] = 1;
            for s in summands {
                let h = expression_homology(s)?;
                if !h.is_torsion_free() {
                    return Err(HomologyError::Unsupported("torsion summand".into()));
                }
                for q in 1..m {
                    ranks[q] += h.rank(q);
                }
            }
            Ok(GradedGroup::from_ranks(&ranks))
        }
        E::BoundaryConnectedSum(summands) => {
            let m = expr.dim();
            if summands.iter().any(|s| s.is_closed() || s.dim() != m) {
                return Err(HomologyError::Unsupported(
                    "boundary connected sum needs bounded equi-dimensional summands".into(),
                ));
            }
            let mut ranks = vec![0usize; m + 1];
            ranks[0] = 1;
            for s in summands {
                let h = expression_homology(s)?;
                if !h.is_torsion_free() {
                    return Err(HomologyError::Unsupported("torsion summand".into()));
                }
                for q in 1..=m {
                    ranks[q] += h.rank(q);
                }
            }
            Ok(GradedGroup::from_ranks(&ranks))
        }
        E::PuncturedProduct { a, b, m } => {
            if *m != a + b || *m == 0 {
                return Err(HomologyError::Unsupported(
                    "punctured product must remove a top-dimensional disk".into(),
                ));
            }
            let mut ranks = sphere_product(*a, *b);
            ranks[*m] -= 1;
            Ok(GradedGroup::from_ranks(&ranks))
        }
        E::Exterior { p, q, m } => {
            if p + q + 2 > *m {
                return Err(HomologyError::Unsupported(
                    "exterior needs codimension at least two".into(),
                ));
            }
            // Reduced H_i of the exterior is reduced H^{m-1-i} of the
            // embedded product; torsion free, so cohomology = homology.
            let inner = sphere_product(*p, *q);
            let mut ranks = vec![0usize; *m];
            ranks[0] = 1;
            for i in 1..*m {
                let dual = m - 1 - i;
                let reduced = inner.get(dual).copied().unwrap_or(0)
                    - usize::from(dual == 0);
                ranks[i] += reduced;
            }
            Ok(GradedGroup::from_ranks(&ranks))
        }
    }
}

/// Exact binomial coefficient, 0 when k > n.
fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::ManifoldExpression as E;
    use crate::config::{parse_configuration, DeriveAction};
    use crate::polytope::build_face_lattice;

    fn lattice(text: &str) -> FaceLattice {
        build_face_lattice(&parse_configuration(text).unwrap()).unwrap()
    }

    fn pentagon() -> FaceLattice {
        lattice("2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i")
    }

    fn quad() -> FaceLattice {
        lattice("2 4\n1+0i\n1+0i\n0+1i\n-1-1i")
    }

    fn t(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    const CAP: usize = DEFAULT_SIMPLEX_CAP;

    #[test]
    fn graded_group_algebra() {
        let a = GradedGroup::from_ranks(&[1, 2]);
        let padded = GradedGroup::from_parts(vec![1, 2, 0, 0], vec![]);
        assert_eq!(a, padded);
        assert_eq!(a.max_degree(), Some(1));
        assert_eq!(a.euler(), -1);

        let mut s = GradedGroup::from_parts(vec![0, 1], vec![vec![], t(&[4])]);
        s.add_assign_scaled(&GradedGroup::from_parts(vec![0, 0], vec![vec![], t(&[6])]), 1);
        assert_eq!(s.torsion_at(1), t(&[2, 12]).as_slice());
        assert_eq!(s.rank(1), 1);

        let mut d = GradedGroup::zero();
        d.add_assign_scaled(&GradedGroup::from_parts(vec![0], vec![t(&[3])]), 2);
        assert_eq!(d.torsion_at(0), t(&[3, 3]).as_slice());
        assert!(!d.is_zero());
        assert!(GradedGroup::from_parts(vec![0, 0], vec![]).is_zero());

        let merged = merge_torsion(&t(&[2]), &t(&[6]), 1);
        assert_eq!(merged, t(&[2, 6]));
    }

    #[test]
    fn relative_pairs_on_the_pentagon() {
        let lat = pentagon();
        assert_eq!(
            relative_homology(&lat, &[], CAP).unwrap(),
            GradedGroup::from_ranks(&[1])
        );
        // Adjacent directions: the two facets are disjoint, one degree-1 class.
        assert_eq!(
            relative_homology(&lat, &[0, 1], CAP).unwrap(),
            GradedGroup::from_ranks(&[0, 1])
        );
        // Facets meeting in a vertex: contractible union, trivial pair.
        assert_eq!(
            relative_homology(&lat, &[0, 2], CAP).unwrap(),
            GradedGroup::zero()
        );
        assert_eq!(
            relative_homology(&lat, &[3], CAP).unwrap(),
            GradedGroup::zero()
        );
        // The full boundary: top class of (disk, boundary).
        assert_eq!(
            relative_homology(&lat, &[0, 1, 2, 3, 4], CAP).unwrap(),
            GradedGroup::from_ranks(&[0, 0, 1])
        );
        assert_eq!(
            relative_homology(&lat, &[], 5),
            Err(HomologyError::TooLarge { simplices: 41, cap: 5 })
        );
    }

    #[test]
    fn nerve_route_matches_order_complex_sum() {
        for text in [
            "2 3\n1+0i\n0+1i\n-1-1i",
            "2 4\n1+0i\n1+0i\n0+1i\n-1-1i",
            "2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i",
        ] {
            let lat = lattice(text);
            let n = lat.n();
            let mut full = GradedGroup::zero();
            let mut half = GradedGroup::zero();
            for jmask in 0u32..1 << n {
                let j: Vec<usize> = (0..n).filter(|i| jmask >> i & 1 == 1).collect();
                let pair = relative_homology(&lat, &j, CAP).unwrap();
                full.add_assign(&pair);
                if jmask & 1 == 0 {
                    half.add_assign(&pair);
                }
            }
            assert_eq!(homology_z(&lat, Half::None), full, "full sum for {text}");
            assert_eq!(homology_z(&lat, Half::Exclude(0)), half, "half sum for {text}");
        }
    }

    #[test]
    fn frozen_ranks_for_reference_configurations() {
        let pent = pentagon();
        assert_eq!(homology_z(&pent, Half::None), GradedGroup::from_ranks(&[1, 10, 1]));
        assert_eq!(homology_z(&pent, Half::Exclude(0)), GradedGroup::from_ranks(&[1, 5]));

        let q = quad();
        assert_eq!(homology_z(&q, Half::None), GradedGroup::from_ranks(&[4, 4]));
        assert_eq!(homology_z(&q, Half::Exclude(0)), GradedGroup::from_ranks(&[4]));

        let point = lattice("2 3\n1+0i\n0+1i\n-1-1i");
        assert_eq!(homology_z(&point, Half::None), GradedGroup::from_ranks(&[8]));
        assert_eq!(homology_z(&point, Half::Exclude(2)), GradedGroup::from_ranks(&[4]));

        let hept = lattice("2 7\n1+0i\n4+5i\n-2+9i\n-9+4i\n-9-4i\n-2-9i\n4-5i");
        assert_eq!(
            homology_z(&hept, Half::None),
            GradedGroup::from_ranks(&[1, 0, 14, 0, 1])
        );

        // Doubling every direction of the repeated-pair quadrilateral gives
        // the real model of S¹ × S¹ × S³.
        let cfg = parse_configuration("2 4\n1+0i\n1+0i\n0+1i\n-1-1i").unwrap();
        let cfg = crate::config::derive(&cfg, DeriveAction::Complexify).unwrap();
        let cx = build_face_lattice(&cfg).unwrap();
        assert_eq!(
            homology_z(&cx, Half::None),
            GradedGroup::from_ranks(&[1, 2, 1, 1, 2, 1])
        );
    }

    #[test]
    fn closed_manifolds_satisfy_poincare_duality() {
        for text in [
            "2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i",
            "2 7\n1+0i\n4+5i\n-2+9i\n-9+4i\n-9-4i\n-2-9i\n4-5i",
        ] {
            let lat = lattice(text);
            let h = homology_z(&lat, Half::None);
            assert!(h.is_torsion_free());
            let dim = lat.n() - 3;
            for q in 0..=dim {
                assert_eq!(h.rank(q), h.rank(dim - q), "degree {q} in {text}");
            }
        }
    }

    #[test]
    fn bounded_half_is_a_sub_sum_of_the_closed_manifold() {
        for text in [
            "2 4\n1+0i\n1+0i\n0+1i\n-1-1i",
            "2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i",
            "2 7\n1+0i\n4+5i\n-2+9i\n-9+4i\n-9-4i\n-2-9i\n4-5i",
        ] {
            let lat = lattice(text);
            let full = homology_z(&lat, Half::None);
            for i in 0..lat.n() {
                let part = homology_z(&lat, Half::Exclude(i));
                for q in 0..=full.max_degree().unwrap_or(0) {
                    assert!(part.rank(q) <= full.rank(q));
                }
            }
        }
    }

    #[test]
    fn structural_homology_of_expressions() {
        let h = |e: &E| expression_homology(e).unwrap();
        let s34 = E::Product(vec![E::Sphere(3), E::Sphere(4)]);
        assert_eq!(h(&s34).ranks(), &[1, 0, 0, 1, 1, 0, 0, 1]);
        let cs = E::ConnectedSum(vec![s34.clone(); 5]);
        assert_eq!(h(&cs).ranks(), &[1, 0, 0, 5, 5, 0, 0, 1]);
        let torus3 = E::Product(vec![E::Sphere(1), E::Sphere(1), E::Sphere(3)]);
        assert_eq!(h(&torus3).ranks(), &[1, 2, 1, 1, 2, 1]);

        let punct = E::PuncturedProduct { a: 3, b: 3, m: 6 };
        assert_eq!(h(&punct).ranks(), &[1, 0, 0, 2]);
        let ext = E::Exterior { p: 1, q: 1, m: 6 };
        assert_eq!(h(&ext).ranks(), &[1, 0, 0, 1, 2]);
        let page = E::BoundaryConnectedSum(vec![punct, ext]);
        assert_eq!(h(&page).ranks(), &[1, 0, 0, 3, 2]);

        let four_points = E::Product(vec![E::Sphere(0), E::Sphere(0)]);
        assert_eq!(h(&four_points).ranks(), &[4]);
        assert_eq!(h(&E::Exterior { p: 0, q: 0, m: 2 }).ranks(), &[1, 3]);

        let bad = E::ConnectedSum(vec![E::Disk(3), E::Disk(3)]);
        assert!(matches!(
            expression_homology(&bad),
            Err(HomologyError::Unsupported(_))
        ));
    }
}
