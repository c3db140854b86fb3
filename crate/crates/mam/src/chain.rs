//! Simplicial chain-complex homology over ℤ.
//!
//! Input is a list of simplices per dimension (vertices sorted ascending).
//! Faces absent from the complex are treated as zero in boundary maps, which
//! computes relative (quotient) homology when a subcomplex is omitted.

use crate::snf;
use num_bigint::BigUint;
use std::collections::HashMap;

/// Per-degree rank and torsion coefficients.
pub type DegreeGroups = Vec<(usize, Vec<BigUint>)>;

/// Homology of a (possibly relative, possibly augmented) simplicial chain
/// complex. `neg1` is the degree −1 group, only meaningful when `augmented`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainHomology {
    pub neg1: (usize, Vec<BigUint>),
    pub groups: DegreeGroups,
}

/// Computes integer homology from simplices grouped by dimension:
/// `by_dim[d]` lists the d-simplices as sorted vertex vectors.
///
/// With `augmented`, the empty simplex is added in degree −1 (reduced
/// homology of honest complexes; `neg1` can be ℤ only for the complex whose
/// sole simplex is ∅).
pub fn chain_homology(by_dim: &[Vec<Vec<u32>>], augmented: bool) -> ChainHomology {
    let top = by_dim.len();
    // Index of each simplex within its dimension.
    let mut index: Vec<HashMap<&[u32], u32>> = Vec::with_capacity(top);
    for simps in by_dim {
        let mut m = HashMap::with_capacity(simps.len());
        for (i, s) in simps.iter().enumerate() {
            debug_assert!(s.windows(2).all(|w| w[0] < w[1]), "unsorted simplex");
            m.insert(s.as_slice(), i as u32);
        }
        debug_assert_eq!(m.len(), simps.len(), "duplicate simplices");
        index.push(m);
    }

    // boundary_rank[d] = rank of ∂_d : C_d → C_{d-1}, torsion from divisors.
    let mut ranks_of_boundary = vec![0usize; top + 1];
    let mut torsion_from_boundary: Vec<Vec<BigUint>> = vec![Vec::new(); top + 1];

    if augmented && !by_dim.is_empty() {
        // ∂_0 sends every vertex to the empty simplex with coefficient +1.
        ranks_of_boundary[0] = if by_dim[0].is_empty() { 0 } else { 1 };
    }

    let mut facet = Vec::new();
    for d in 1..top {
        let cols = &by_dim[d];
        if cols.is_empty() {
            continue;
        }
        let mut triplets: Vec<(u32, u32, i64)> = Vec::new();
        for (j, simplex) in cols.iter().enumerate() {
            for t in 0..simplex.len() {
                facet.clear();
                facet.extend_from_slice(&simplex[..t]);
                facet.extend_from_slice(&simplex[t + 1..]);
                if let Some(&i) = index[d - 1].get(facet.as_slice()) {
                    let sign = if t % 2 == 0 { 1 } else { -1 };
                    triplets.push((i, j as u32, sign));
                }
            }
        }
        let res = snf::snf_sparse(by_dim[d - 1].len(), cols.len(), &triplets);
        ranks_of_boundary[d] = res.rank;
        torsion_from_boundary[d] = res.nontrivial();
    }

    let mut groups = Vec::with_capacity(top);
    for d in 0..top {
        let n_d = by_dim[d].len();
        let rank = n_d - ranks_of_boundary[d] - ranks_of_boundary[d + 1];
        groups.push((rank, torsion_from_boundary[d + 1].clone()));
    }
    let neg1 = if augmented {
        let has_vertices = !by_dim.is_empty() && !by_dim[0].is_empty();
        let has_empty_cell = true; // ∅ always present in augmented mode
        let rank = if has_empty_cell && !has_vertices { 1 } else { 0 };
        (rank, Vec::new())
    } else {
        (0, Vec::new())
    };
    ChainHomology { neg1, groups }
}

/// Downward closure of a set of simplices, grouped by dimension.
/// Convenient for building test complexes from maximal faces.
pub fn with_all_faces(maximal: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    use std::collections::HashSet;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for s in maximal {
        let mut sorted = s.clone();
        sorted.sort_unstable();
        let n = sorted.len();
        for mask in 1u32..(1 << n) {
            let sub: Vec<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| sorted[i])
                .collect();
            seen.insert(sub);
        }
    }
    let top = seen.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut by_dim: Vec<Vec<Vec<u32>>> = vec![Vec::new(); top];
    for s in seen {
        by_dim[s.len() - 1].push(s);
    }
    for level in &mut by_dim {
        level.sort();
    }
    by_dim
}
