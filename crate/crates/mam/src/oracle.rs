//! Brute-force homology oracle from the reflected-cell decomposition.
//!
//! The manifold Z is tiled by reflected copies of the polytope P: one cell
//! (J, L) for every face L and every sign pattern J on the coordinates not
//! vanishing on L. The cell (J′, L′) is a face of (J, L) exactly when
//! L′ is a face of L and J′ = J minus the coordinates vanishing on L′.
//! This module triangulates that poset by its order complex and runs
//! textbook simplicial homology on it, assembling its own boundary
//! matrices; it shares only the Smith normal form backend with the direct
//! computation it is meant to check.

use crate::homology::{GradedGroup, Half, HomologyError};
use crate::polytope::FaceLattice;
use crate::snf;
use num_bigint::BigUint;

/// Number of reflected cells per dimension (the f-vector of the cell
/// decomposition of Z, resp. Z₊). Its alternating sum is χ.
pub fn cell_counts(lat: &FaceLattice, half: Half) -> Vec<usize> {
    assert!(!lat.empty_manifold, "cell decomposition needs a nonempty polytope");
    let n = lat.n();
    let dim_p = lat.dim_p.expect("nonempty lattice has a dimension");
    let mut counts = vec![0usize; dim_p + 1];
    for face in &lat.faces {
        counts[face.dim] += pattern_count(n, face.mask, half);
    }
    counts
}

fn pattern_count(n: usize, face_mask: u32, half: Half) -> usize {
    let mut free = n - face_mask.count_ones() as usize;
    if let Half::Exclude(i) = half {
        if face_mask >> i & 1 == 0 {
            free -= 1;
        }
    }
    1usize << free
}

/// Integer homology of Z (or Z₊) from the order complex of the reflected
/// cell poset. Returns `too_large` when the triangulation would exceed
/// `cap` simplices.
pub fn brute_force_homology(
    lat: &FaceLattice,
    half: Half,
    cap: usize,
) -> Result<GradedGroup, HomologyError> {
    assert!(!lat.empty_manifold, "oracle needs a nonempty polytope");
    let n = lat.n();
    assert!(n <= 12, "oracle cell ids support n ≤ 12");
    if let Half::Exclude(i) = half {
        assert!(i < n, "excluded index {i} out of range for n = {n}");
    }
    let faces = &lat.faces;
    let count = faces.len();

    // supers[a]: faces whose index set strictly contains that of face a,
    // i.e. the proper faces of the cell carried by a. Lattice order puts
    // them after a.
    let mut supers: Vec<Vec<u32>> = vec![Vec::new(); count];
    for a in 0..count {
        for b in (a + 1)..count {
            let (ma, mb) = (faces[a].mask, faces[b].mask);
            if ma != mb && ma & mb == ma {
                supers[a].push(b as u32);
            }
        }
    }

    // chains_above[a]: nested chains of faces whose minimum is a. Each such
    // chain, with a sign pattern for the minimal element, is one simplex.
    let mut chains_above = vec![0u128; count];
    let mut total: u128 = 0;
    for a in (0..count).rev() {
        let mut c = 1u128;
        for &b in &supers[a] {
            c += chains_above[b as usize];
        }
        chains_above[a] = c;
        total += c * pattern_count(n, faces[a].mask, half) as u128;
    }
    if total > cap as u128 {
        return Err(HomologyError::TooLarge {
            simplices: total.min(usize::MAX as u128) as usize,
            cap,
        });
    }

    // Materialize the simplices. Cell id = (face index << n) | pattern;
    // face indices grow along a chain, so paths are already sorted.
    let mut by_dim: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut path: Vec<u32> = Vec::new();
    for a in 0..count {
        let comp = !faces[a].mask & ((1u32 << n) - 1);
        let allowed = match half {
            Half::None => comp,
            Half::Exclude(i) => comp & !(1 << i),
        };
        let mut pattern = allowed;
        loop {
            emit(a, pattern, n, faces, &supers, &mut path, &mut by_dim);
            if pattern == 0 {
                break;
            }
            pattern = (pattern - 1) & allowed;
        }
    }
    for level in &mut by_dim {
        level.sort_unstable();
    }

    // Simplicial boundary matrices and their Smith normal forms.
    let top = by_dim.len();
    let mut rank_of_boundary = vec![0usize; top + 1];
    let mut torsion_of_boundary: Vec<Vec<BigUint>> = vec![Vec::new(); top + 1];
    let mut facet: Vec<u32> = Vec::new();
    for d in 1..top {
        let mut triplets: Vec<(u32, u32, i64)> = Vec::new();
        for (col, simplex) in by_dim[d].iter().enumerate() {
            for t in 0..simplex.len() {
                facet.clear();
                facet.extend_from_slice(&simplex[..t]);
                facet.extend_from_slice(&simplex[t + 1..]);
                let row = by_dim[d - 1]
                    .binary_search_by(|probe| probe.as_slice().cmp(facet.as_slice()))
                    .expect("order complexes are closed under subchains");
                let sign = if t % 2 == 0 { 1 } else { -1 };
                triplets.push((row as u32, col as u32, sign));
            }
        }
        let res = snf::snf_sparse(by_dim[d - 1].len(), by_dim[d].len(), &triplets);
        rank_of_boundary[d] = res.rank;
        torsion_of_boundary[d] = res.nontrivial();
    }

    let mut ranks = Vec::with_capacity(top);
    let mut torsion = Vec::with_capacity(top);
    for d in 0..top {
        ranks.push(by_dim[d].len() - rank_of_boundary[d] - rank_of_boundary[d + 1]);
        torsion.push(torsion_of_boundary[d + 1].clone());
    }
    Ok(GradedGroup::from_parts(ranks, torsion))
}

fn emit(
    a: usize,
    pattern: u32,
    n: usize,
    faces: &[crate::polytope::Face],
    supers: &[Vec<u32>],
    path: &mut Vec<u32>,
    by_dim: &mut Vec<Vec<Vec<u32>>>,
) {
    path.push(((a as u32) << n) | (pattern & !faces[a].mask));
    let dim = path.len() - 1;
    if by_dim.len() <= dim {
        by_dim.resize(dim + 1, Vec::new());
    }
    by_dim[dim].push(path.clone());
    for &b in &supers[a] {
        emit(b as usize, pattern, n, faces, supers, path, by_dim);
    }
    path.pop();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_configuration;
    use crate::homology::{homology_z, DEFAULT_SIMPLEX_CAP};
    use crate::polytope::build_face_lattice;

    fn lattice(text: &str) -> FaceLattice {
        build_face_lattice(&parse_configuration(text).unwrap()).unwrap()
    }

    const CAP: usize = DEFAULT_SIMPLEX_CAP;

    #[test]
    fn pentagon_cells_and_homology() {
        let lat = lattice("2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i");
        assert_eq!(cell_counts(&lat, Half::None), vec![40, 80, 32]);
        let h = brute_force_homology(&lat, Half::None, CAP).unwrap();
        assert_eq!(h, GradedGroup::from_ranks(&[1, 10, 1]));
        assert_eq!(h.euler(), 40 - 80 + 32);

        assert_eq!(cell_counts(&lat, Half::Exclude(0)), vec![28, 48, 16]);
        let hp = brute_force_homology(&lat, Half::Exclude(0), CAP).unwrap();
        assert_eq!(hp, GradedGroup::from_ranks(&[1, 5]));
        assert_eq!(hp.euler(), 28 - 48 + 16);

        assert_eq!(
            brute_force_homology(&lat, Half::None, 10),
            Err(HomologyError::TooLarge { simplices: 952, cap: 10 })
        );
    }

    #[test]
    fn point_polytope_reflects_to_discrete_points() {
        let lat = lattice("2 3\n1+0i\n0+1i\n-1-1i");
        assert_eq!(cell_counts(&lat, Half::None), vec![8]);
        assert_eq!(
            brute_force_homology(&lat, Half::None, CAP).unwrap(),
            GradedGroup::from_ranks(&[8])
        );
        assert_eq!(
            brute_force_homology(&lat, Half::Exclude(1), CAP).unwrap(),
            GradedGroup::from_ranks(&[4])
        );
    }

    #[test]
    fn matches_direct_computation_on_small_fixtures() {
        for text in [
            "2 3\n2+0i\n-1+2i\n-1-2i",
            "2 4\n1+0i\n1+0i\n0+1i\n-1-1i",
            "2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i",
        ] {
            let lat = lattice(text);
            for half in [Half::None, Half::Exclude(0), Half::Exclude(lat.n() - 1)] {
                let direct = homology_z(&lat, half);
                let oracle = brute_force_homology(&lat, half, CAP).unwrap();
                assert_eq!(direct, oracle, "{text} with {half:?}");
            }
        }
    }
}
