//! The associated simple polytope P = {Σ λᵢ rᵢ = 0, Σ rᵢ = 1, r ≥ 0} as a
//! combinatorial face lattice.
//!
//! A face F_J is the subset of P where rᵢ = 0 for i ∈ J; it is nonempty
//! exactly when the origin lies in conv{λᵢ : i ∉ J}. Faces are stored as
//! coordinate bitmasks. Feasibility depends only on the set of rays in the
//! complement, so LP answers are memoized per ray-class mask.

use crate::config::{check_weak_hyperbolicity, Configuration, WhReport};
use crate::lp;
use crate::rat;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::HashMap;
use thiserror::Error;

/// A nonempty face F_J: coordinate bitmask of J and the face dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Face {
    pub mask: u32,
    pub dim: usize,
}

/// The face lattice of P.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub cfg: Configuration,
    /// dim P = n − k − 1; `None` iff the polytope is empty.
    pub dim_p: Option<usize>,
    /// Nonempty faces sorted by (|J|, mask); starts with the top face J = ∅
    /// unless the polytope is empty.
    pub faces: Vec<Face>,
    /// Covering relations (index of J, index of J ∪ {i}), both nonempty.
    pub covers: Vec<(u32, u32)>,
    pub empty_manifold: bool,
    index: HashMap<u32, u32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("configuration is not weakly hyperbolic (witness {witness:?}, 0-based)")]
    NotWeaklyHyperbolic { witness: Vec<usize> },
}

impl FaceLattice {
    pub fn n(&self) -> usize {
        self.cfg.n()
    }

    pub fn k(&self) -> usize {
        self.cfg.k
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.index.contains_key(&mask)
    }

    pub fn face_position(&self, mask: u32) -> Option<u32> {
        self.index.get(&mask).copied()
    }

    /// Bitmask of coordinates whose facet Fᵢ is nonempty.
    pub fn nonempty_facet_mask(&self) -> u32 {
        let mut m = 0;
        for i in 0..self.n() {
            if self.contains(1 << i) {
                m |= 1 << i;
            }
        }
        m
    }

    /// Alternating sum Σ_faces (−1)^dim; equals 1 for every nonempty P
    /// (contractibility witness at the lattice level).
    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.dim % 2 == 0 { 1 } else { -1 })
            .sum()
    }
}

/// True iff F_J ≠ ∅ for the subset J (0-based coordinate indices):
/// feasibility of {Σ_{i∉J} λᵢ rᵢ = 0, Σ rᵢ = 1, r ≥ 0} by exact LP,
/// equivalently 0 ∈ conv{λᵢ : i ∉ J}.
pub fn face_nonempty(cfg: &Configuration, j: &[usize]) -> bool {
    let vecs: Vec<&[BigRational]> = (0..cfg.n())
        .filter(|i| !j.contains(i))
        .map(|i| cfg.vectors[i].as_slice())
        .collect();
    lp::origin_in_hull(&vecs)
}

/// Memoizing feasibility tester keyed by the ray classes present in the
/// complement of J.
pub(crate) struct FeasibilityCache {
    class_of: Vec<usize>,
    class_dirs: Vec<Vec<BigRational>>,
    full: u32,
    hull: HashMap<u32, bool>,
    slack: HashMap<u32, bool>,
    rank_k: HashMap<u32, bool>,
    k: usize,
}

impl FeasibilityCache {
    pub(crate) fn new(cfg: &Configuration) -> Self {
        let (class_of, members) = cfg.ray_classes();
        let class_dirs = members
            .iter()
            .map(|m| {
                rat::primitive_direction(&cfg.vectors[m[0]])
                    .into_iter()
                    .map(BigRational::from)
                    .collect()
            })
            .collect();
        FeasibilityCache {
            class_of,
            class_dirs,
            full: (1u32 << cfg.n()) - 1,
            hull: HashMap::new(),
            slack: HashMap::new(),
            rank_k: HashMap::new(),
            k: cfg.k,
        }
    }

    fn class_mask_of_complement(&self, jmask: u32) -> u32 {
        let mut m = 0;
        let mut rest = self.full & !jmask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            m |= 1 << self.class_of[i];
        }
        m
    }

    fn dirs(&self, class_mask: u32) -> Vec<&[BigRational]> {
        self.class_dirs
            .iter()
            .enumerate()
            .filter(|(c, _)| class_mask >> c & 1 == 1)
            .map(|(_, d)| d.as_slice())
            .collect()
    }

    /// 0 ∈ conv of the rays of the classes selected by `class_mask`.
    pub(crate) fn hull_of_classes(&mut self, class_mask: u32) -> bool {
        if let Some(&b) = self.hull.get(&class_mask) {
            return b;
        }
        let b = lp::origin_in_hull(&self.dirs(class_mask));
        self.hull.insert(class_mask, b);
        b
    }

    /// 0 ∈ conv of the complement's vectors.
    fn complement_spans(&mut self, jmask: u32) -> bool {
        let key = self.class_mask_of_complement(jmask);
        self.hull_of_classes(key)
    }

    /// 0 has an all-coefficients-positive representation over the
    /// complement's rays (certifies the face has no implicit equalities).
    fn complement_strictly_spans(&mut self, jmask: u32) -> bool {
        let key = self.class_mask_of_complement(jmask);
        if let Some(&b) = self.slack.get(&key) {
            return b;
        }
        let b = match lp::hull_slack(&self.dirs(key)) {
            Some(s) => s > BigRational::zero(),
            None => false,
        };
        self.slack.insert(key, b);
        b
    }

    /// The complement's rays span all of ℝᵏ.
    fn complement_full_rank(&mut self, jmask: u32) -> bool {
        let key = self.class_mask_of_complement(jmask);
        if let Some(&b) = self.rank_k.get(&key) {
            return b;
        }
        let rows: Vec<Vec<BigRational>> = self.dirs(key).iter().map(|d| d.to_vec()).collect();
        let b = rat::rational_rank(rows) == self.k;
        self.rank_k.insert(key, b);
        b
    }
}

/// Enumerates all nonempty faces by BFS over |J| with monotone pruning
/// (supersets of empty faces are never generated). Errors when the
/// configuration is not weakly hyperbolic; an empty P is a first-class
/// result flagged `empty_manifold`.
pub fn build_face_lattice(cfg: &Configuration) -> Result<FaceLattice, PolytopeError> {
    let n = cfg.n();
    assert!(n <= 31, "bitmask face lattice supports n ≤ 31");
    if let WhReport::Violated { witness } = check_weak_hyperbolicity(cfg) {
        return Err(PolytopeError::NotWeaklyHyperbolic { witness });
    }
    let mut cache = FeasibilityCache::new(cfg);

    if !cache.complement_spans(0) {
        return Ok(FaceLattice {
            cfg: cfg.clone(),
            dim_p: None,
            faces: Vec::new(),
            covers: Vec::new(),
            empty_manifold: true,
            index: HashMap::new(),
        });
    }

    let dim_p = n - cfg.k - 1;
    let mut faces: Vec<Face> = Vec::new();
    let mut index: HashMap<u32, u32> = HashMap::new();
    let mut level: Vec<u32> = vec![0];
    let mut size = 0;
    while !level.is_empty() {
        debug_assert!(size <= dim_p, "weak hyperbolicity bounds |J| by dim P");
        for &mask in &level {
            index.insert(mask, faces.len() as u32);
            faces.push(Face { mask, dim: dim_p - size });
        }
        let mut next: Vec<u32> = Vec::new();
        for &mask in &level {
            let start = if mask == 0 {
                0
            } else {
                32 - mask.leading_zeros() as usize
            };
            for i in start..n {
                let cand = mask | 1 << i;
                if cache.complement_spans(cand) {
                    next.push(cand);
                }
            }
        }
        next.sort_unstable();
        level = next;
        size += 1;
    }

    let mut covers = Vec::new();
    for (fi, face) in faces.iter().enumerate() {
        if face.mask == 0 {
            continue;
        }
        let mut rest = face.mask;
        while rest != 0 {
            let i = rest.trailing_zeros();
            rest &= rest - 1;
            let sub = face.mask & !(1 << i);
            let si = index[&sub];
            covers.push((si, fi as u32));
        }
    }

    Ok(FaceLattice {
        cfg: cfg.clone(),
        dim_p: Some(dim_p),
        faces,
        covers,
        empty_manifold: false,
        index,
    })
}

/// Audits simplicity: every recorded face must have dimension exactly
/// n − |J| − k − 1 and every vertex must lie in exactly dim P facets.
///
/// Both conditions reduce to two exact facts about each face's complement:
/// its rays span ℝᵏ, and the origin admits a representation with all
/// coefficients strictly positive (no implicit equality rᵢ = 0, hence no
/// extra facet incidences). Decisions are memoized per ray-class mask.
pub fn verify_simple(lat: &FaceLattice) -> bool {
    if lat.empty_manifold {
        return true;
    }
    let mut cache = FeasibilityCache::new(&lat.cfg);
    let dim_p = lat.dim_p.expect("nonempty lattice has a dimension");
    for face in &lat.faces {
        let size = face.mask.count_ones() as usize;
        if face.dim != dim_p - size {
            return false;
        }
        if !cache.complement_full_rank(face.mask) {
            return false;
        }
        if !cache.complement_strictly_spans(face.mask) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_configuration;

    fn cfg(text: &str) -> Configuration {
        parse_configuration(text).unwrap()
    }

    fn pentagon() -> Configuration {
        cfg("2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i")
    }

    #[test]
    fn point_polytope() {
        let lat = build_face_lattice(&cfg("2 3\n1+0i\n0+1i\n-1-1i")).unwrap();
        assert!(!lat.empty_manifold);
        assert_eq!(lat.dim_p, Some(0));
        assert_eq!(lat.faces.len(), 1);
        assert_eq!(lat.faces[0], Face { mask: 0, dim: 0 });
        assert_eq!(lat.euler_characteristic(), 1);
        assert!(verify_simple(&lat));
    }

    #[test]
    fn segment_with_empty_facets() {
        // (1,0) twice, (0,1), (−1,−1): P is a segment; F₃ and F₄ are empty.
        let lat = build_face_lattice(&cfg("2 4\n1+0i\n1+0i\n0+1i\n-1-1i")).unwrap();
        assert_eq!(lat.dim_p, Some(1));
        let masks: Vec<u32> = lat.faces.iter().map(|f| f.mask).collect();
        assert_eq!(masks, vec![0b0000, 0b0001, 0b0010]);
        assert_eq!(lat.nonempty_facet_mask(), 0b0011);
        assert_eq!(lat.euler_characteristic(), 1);
        assert_eq!(lat.covers, vec![(0, 1), (0, 2)]);
        assert!(verify_simple(&lat));
    }

    #[test]
    fn pentagon_lattice_combinatorics() {
        let lat = build_face_lattice(&pentagon()).unwrap();
        assert_eq!(lat.dim_p, Some(2));
        assert_eq!(lat.faces.len(), 11); // top + 5 edges + 5 vertices
        let facets: Vec<u32> = lat
            .faces
            .iter()
            .filter(|f| f.dim == 1)
            .map(|f| f.mask)
            .collect();
        assert_eq!(facets.len(), 5);
        // Vertices pair facets at circular direction distance two: the edge
        // adjacency of the polytope follows the pentagram pattern.
        let vertices: Vec<u32> = lat
            .faces
            .iter()
            .filter(|f| f.dim == 0)
            .map(|f| f.mask)
            .collect();
        let expected: Vec<u32> = (0..5u32)
            .map(|i| (1 << i) | (1 << ((i + 2) % 5)))
            .collect();
        for v in &expected {
            assert!(vertices.contains(v), "missing vertex {v:#07b}");
        }
        assert_eq!(lat.euler_characteristic(), 1);
        assert!(verify_simple(&lat));
    }

    #[test]
    fn face_nonempty_single_queries() {
        let tri = cfg("2 3\n1+0i\n0+1i\n-1-1i");
        assert!(face_nonempty(&tri, &[]));
        assert!(!face_nonempty(&tri, &[0]));
        let row1 = cfg("2 4\n1+0i\n1+0i\n0+1i\n-1-1i");
        assert!(!face_nonempty(&row1, &[2]));
    }

    #[test]
    fn empty_manifold_and_wh_error() {
        let lat = build_face_lattice(&cfg("2 3\n1+0i\n0+1i\n1+1i")).unwrap();
        assert!(lat.empty_manifold);
        assert!(lat.faces.is_empty());
        assert_eq!(lat.dim_p, None);

        let e = build_face_lattice(&cfg("2 3\n1+0i\n-2+0i\n0+1i")).unwrap_err();
        assert_eq!(e, PolytopeError::NotWeaklyHyperbolic { witness: vec![0, 1] });
    }

    #[test]
    fn verify_simple_rejects_poisoned_lattice() {
        // Hand-built lattice for a non-weakly-hyperbolic configuration: the
        // face {2}ᶜ contains an antipodal pair, so the origin has no
        // all-positive representation and the simplicity audit must fail.
        let c = cfg("2 4\n1+0i\n-1+0i\n0+1i\n0-1i");
        let faces = vec![Face { mask: 0, dim: 1 }, Face { mask: 0b0100, dim: 0 }];
        let mut index = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            index.insert(f.mask, i as u32);
        }
        let lat = FaceLattice {
            cfg: c,
            dim_p: Some(1),
            faces,
            covers: vec![(0, 1)],
            empty_manifold: false,
            index,
        };
        assert!(!verify_simple(&lat));
    }

    #[test]
    fn heptagon_euler_and_simplicity() {
        let hept = cfg("2 7\n1+0i\n4+5i\n-2+9i\n-9+4i\n-9-4i\n-2-9i\n4-5i");
        let lat = build_face_lattice(&hept).unwrap();
        assert_eq!(lat.dim_p, Some(4));
        // f-vector of the 4-dimensional cyclic-type polytope: 14 vertices,
        // 28 edges, 21 ridges, 7 facets, 1 top face.
        let mut by_dim = vec![0usize; 5];
        for f in &lat.faces {
            by_dim[f.dim] += 1;
        }
        assert_eq!(by_dim, vec![14, 28, 21, 7, 1]);
        assert_eq!(lat.euler_characteristic(), 1);
        assert!(verify_simple(&lat));
    }
}
