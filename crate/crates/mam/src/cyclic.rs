//! Cyclic partition normal form for plane (k = 2) configurations.
//!
//! Coordinates are grouped by the ray their vector spans, the rays are
//! ordered around the circle, and adjacent groups are merged whenever the
//! arc antipodal to their combined arc is free of configuration rays (so
//! the two groups can be rotated into a single ray without the origin ever
//! leaving the interior of the hull). The result is a partition of the
//! coordinates into an odd number `2ℓ + 1` of circularly ordered classes,
//! which drives the diffeomorphism classification.

use crate::config::Configuration;
use crate::lp;
use crate::rat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// A partition of coordinate indices into circularly ordered classes
/// `J₁, …, J_{2ℓ+1}`, each class spanning a single arc of directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPartition {
    /// Classes in circular order; each class lists 0-based coordinate
    /// indices in increasing order.
    pub classes: Vec<Vec<usize>>,
    /// Total number of coordinates.
    pub n: usize,
}

impl CyclicPartition {
    /// Class sizes `(n₁, …, n_{2ℓ+1})` in circular order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Number of classes, always odd.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The ℓ with `2ℓ + 1` classes.
    pub fn ell(&self) -> usize {
        (self.classes.len() - 1) / 2
    }

    /// Window sums `dᵢ = nᵢ + n_{i+1} + … + n_{i+ℓ-1}` (indices mod the
    /// class count), one per class. For ℓ = 1 these are the sizes.
    pub fn spans(&self) -> Vec<usize> {
        let m = self.classes.len();
        let ell = self.ell();
        let sizes = self.sizes();
        (0..m)
            .map(|i| (0..ell).map(|t| sizes[(i + t) % m]).sum())
            .collect()
    }

    /// Position of the class containing coordinate `index`.
    pub fn class_of(&self, index: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&index))
            .expect("index out of range for partition")
    }
}

/// Why a configuration has no cyclic partition.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CyclicError {
    #[error("not_k2: cyclic partitions are defined for k = 2, got k = {0}")]
    NotK2(usize),
    #[error("empty_or_degenerate: the origin is not interior to the hull of the vectors")]
    EmptyOrDegenerate,
    #[error("even_classes: merging stabilised at {0} classes; an odd count was expected")]
    EvenClasses(usize),
}

/// One circular group of rays during merging.
struct Arc {
    /// First ray of the arc in circular order.
    first: Vec<BigInt>,
    /// Last ray of the arc in circular order.
    last: Vec<BigInt>,
    /// Coordinate indices covered by the arc.
    members: Vec<usize>,
}

fn neg(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| -x).collect()
}

/// True iff ray `x` lies strictly inside the open arc swept
/// counterclockwise from ray `from` to ray `to`.
fn in_open_ccw_arc(from: &[BigInt], to: &[BigInt], x: &[BigInt]) -> bool {
    let c = rat::cross(from, to);
    if c.is_positive() {
        // Arc shorter than a half turn.
        rat::cross(from, x).is_positive() && rat::cross(x, to).is_positive()
    } else if c.is_negative() {
        // Arc longer than a half turn: complement of the closed arc [to, from].
        !(rat::cross(to, x).is_positive() || rat::cross(to, x).is_zero())
            || !(rat::cross(x, from).is_positive() || rat::cross(x, from).is_zero())
    } else if rat::dot(from, to).is_negative() {
        // Antipodal endpoints: exactly the open half plane on the left of `from`.
        rat::cross(from, x).is_positive()
    } else {
        // Coincident endpoints: empty open arc.
        false
    }
}

/// True iff the group pair `(a, b)` (b the circular successor of a) may be
/// merged: the open arc antipodal to the closed arc from `a.first` to
/// `b.last` contains no configuration ray.
fn merge_permitted(a: &Arc, b: &Arc, rays: &[Vec<BigInt>]) -> bool {
    let from = neg(&a.first);
    let to = neg(&b.last);
    rays.iter().all(|r| !in_open_ccw_arc(&from, &to, r))
}

/// Circular comparison of rays: lower half-turn index first (angle in
/// [0, π) before [π, 2π)), then counterclockwise within the half.
fn ray_key_less(a: &[BigInt], b: &[BigInt]) -> bool {
    let half = |v: &[BigInt]| -> u8 {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha < hb;
    }
    rat::cross(a, b).is_positive()
}

/// Computes the cyclic partition of a plane configuration.
///
/// Groups coordinates by ray, orders the rays around the circle, then
/// repeatedly merges the first adjacent pair whose antipodal arc is free of
/// configuration rays, until no merge applies. The surviving class count
/// must be odd. Classes are reported in clockwise circular order starting
/// with the class containing coordinate 0.
pub fn cyclic_partition(cfg: &Configuration) -> Result<CyclicPartition, CyclicError> {
    if cfg.k != 2 {
        return Err(CyclicError::NotK2(cfg.k));
    }
    let dirs = cfg.directions();
    if dirs.iter().any(|d| d.iter().all(Zero::is_zero)) {
        return Err(CyclicError::EmptyOrDegenerate);
    }
    let (_, ray_members) = cfg.ray_classes();
    let rays: Vec<Vec<BigInt>> = ray_members.iter().map(|m| dirs[m[0]].clone()).collect();

    // The origin must be interior to the hull: the rays span the plane and
    // admit a strictly positive combination summing to zero.
    let rat_rays: Vec<Vec<BigRational>> = rays
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    if rat::rational_rank(rat_rays.clone()) != 2 {
        return Err(CyclicError::EmptyOrDegenerate);
    }
    let refs: Vec<&[BigRational]> = rat_rays.iter().map(Vec::as_slice).collect();
    match lp::hull_slack(&refs) {
        Some(t) if t.is_positive() => {}
        _ => return Err(CyclicError::EmptyOrDegenerate),
    }

    // Distinct rays in counterclockwise circular order, then their groups.
    let mut order: Vec<usize> = (0..rays.len()).collect();
    order.sort_by(|&i, &j| {
        if ray_key_less(&rays[i], &rays[j]) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let mut arcs: Vec<Arc> = order
        .into_iter()
        .map(|c| Arc {
            first: rays[c].clone(),
            last: rays[c].clone(),
            members: ray_members[c].clone(),
        })
        .collect();

    // Merge the first permitted adjacent pair and rescan, to a fixed point.
    'merge: while arcs.len() > 1 {
        for p in 0..arcs.len() {
            let q = (p + 1) % arcs.len();
            if merge_permitted(&arcs[p], &arcs[q], &rays) {
                let b = arcs.remove(q);
                let p = if q < p { p - 1 } else { p };
                arcs[p].last = b.last;
                arcs[p].members.extend(b.members);
                continue 'merge;
            }
        }
        break;
    }

    if arcs.len() % 2 == 0 {
        return Err(CyclicError::EvenClasses(arcs.len()));
    }
    if arcs.len() < 3 {
        return Err(CyclicError::EmptyOrDegenerate);
    }

    // Present the cycle clockwise, starting at the class of coordinate 0.
    arcs.reverse();
    let mut classes: Vec<Vec<usize>> = arcs.into_iter().map(|a| a.members).collect();
    for c in &mut classes {
        c.sort_unstable();
    }
    let start = classes
        .iter()
        .position(|c| c.contains(&0))
        .expect("coordinate 0 must appear in some class");
    classes.rotate_left(start);
    debug_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), cfg.n());
    Ok(CyclicPartition { classes, n: cfg.n() })
}

/// The same partition rotated so that its first class contains coordinate
/// `index` (0-based). Idempotent when the first class already contains it.
pub fn rotate_to_index(part: &CyclicPartition, index: usize) -> CyclicPartition {
    let mut rotated = part.clone();
    let start = rotated.class_of(index);
    rotated.classes.rotate_left(start);
    rotated
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_configuration;

    fn part_of(text: &str) -> CyclicPartition {
        cyclic_partition(&parse_configuration(text).unwrap()).unwrap()
    }

    #[test]
    fn square_and_pentagon_partitions() {
        let quad = part_of("2 4\n1+0i\n1+0i\n0+1i\n-1-1i");
        assert_eq!(quad.sizes(), vec![2, 1, 1]);
        assert_eq!(quad.ell(), 1);
        assert_eq!(quad.spans(), vec![2, 1, 1]);
        assert_eq!(quad.classes[0], vec![0, 1]);

        let pent = part_of("2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i");
        assert_eq!(pent.sizes(), vec![1, 1, 1, 1, 1]);
        assert_eq!(pent.ell(), 2);
        assert_eq!(pent.spans(), vec![2, 2, 2, 2, 2]);
        assert_eq!(pent.classes[0], vec![0]);
    }

    #[test]
    fn two_pair_fixture_is_clockwise_from_coordinate_one() {
        // Rays at 90 deg (twice), 0 deg, 225 deg (twice): walking clockwise
        // from the class of coordinate 0 gives sizes (2, 1, 2).
        let part = part_of("2 5\n0+1i\n0+1i\n1+0i\n-1-1i\n-1-1i");
        assert_eq!(part.sizes(), vec![2, 1, 2]);
        assert_eq!(part.classes, vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(part.ell(), 1);
        assert_eq!(part.spans(), vec![2, 1, 2]);
    }

    #[test]
    fn rotation_to_an_index_is_idempotent() {
        let part = part_of("2 5\n0+1i\n0+1i\n1+0i\n-1-1i\n-1-1i");
        let r = rotate_to_index(&part, 2);
        assert_eq!(r.sizes(), vec![1, 2, 2]);
        assert_eq!(r.classes[0], vec![2]);
        assert_eq!(rotate_to_index(&r, 2), r);
        assert_eq!(rotate_to_index(&r, 0), part);
        let back = rotate_to_index(&rotate_to_index(&part, 4), 0);
        assert_eq!(back, part);
    }

    #[test]
    fn heptagon_and_its_puncture_merge_correctly() {
        let hept = part_of(
            "2 7\n1+0i\n4+5i\n-2+9i\n-9+4i\n-9-4i\n-2-9i\n4-5i",
        );
        assert_eq!(hept.sizes(), vec![1; 7]);
        assert_eq!(hept.ell(), 3);
        assert_eq!(hept.spans(), vec![3; 7]);

        // Dropping the first ray frees the arc antipodal to the two rays
        // around 180 deg, which then merge into one class of size 2.
        let punct = part_of("2 6\n4+5i\n-2+9i\n-9+4i\n-9-4i\n-2-9i\n4-5i");
        assert_eq!(punct.ell(), 2);
        let mut sizes = punct.sizes();
        let split = sizes.iter().position(|&s| s == 2).unwrap();
        sizes.rotate_left(split);
        assert_eq!(sizes, vec![2, 1, 1, 1, 1]);
        let merged = punct.classes.iter().find(|c| c.len() == 2).unwrap();
        assert_eq!(merged, &vec![2, 3]);
    }

    #[test]
    fn partition_ignores_scaling_and_relabelling() {
        let a = part_of("2 5\n0+1i\n0+1i\n1+0i\n-1-1i\n-1-1i");
        let b = part_of("2 5\n0+7i\n0+2i\n5+0i\n-3-3i\n-1/2-1/2i");
        assert_eq!(a, b);
        // Listing order does not matter: the circular structure is the
        // same, only the member labels move.
        let c = part_of("2 5\n0+1i\n0+1i\n-1-1i\n-1-1i\n1+0i");
        assert_eq!(c.sizes(), vec![2, 1, 2]);
        assert_eq!(c.classes, vec![vec![0, 1], vec![4], vec![2, 3]]);
    }

    #[test]
    fn degenerate_and_non_plane_inputs_are_rejected() {
        let k3 = parse_configuration("3 4\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1").unwrap();
        assert_eq!(cyclic_partition(&k3), Err(CyclicError::NotK2(3)));

        let outside = parse_configuration("2 3\n1+0i\n0+1i\n1+1i").unwrap();
        assert_eq!(cyclic_partition(&outside), Err(CyclicError::EmptyOrDegenerate));

        let boundary = parse_configuration("2 3\n1+0i\n-1+0i\n0+1i").unwrap();
        assert_eq!(cyclic_partition(&boundary), Err(CyclicError::EmptyOrDegenerate));

        let with_zero = parse_configuration("2 3\n1+0i\n0+0i\n-1+0i").unwrap();
        assert_eq!(cyclic_partition(&with_zero), Err(CyclicError::EmptyOrDegenerate));
    }

    #[test]
    fn antipodal_square_stabilises_at_two_classes() {
        // Not weakly hyperbolic: opposite pairs merge with their neighbours
        // and the loop stabilises at an even class count.
        let sq = parse_configuration("2 4\n1+0i\n0+1i\n-1+0i\n0-1i").unwrap();
        assert_eq!(cyclic_partition(&sq), Err(CyclicError::EvenClasses(2)));
    }

    #[test]
    fn partition_predicts_the_homology_of_the_manifold() {
        use crate::homology::{homology_z, GradedGroup, Half};
        use crate::polytope::build_face_lattice;
        let texts = [
            "2 4\n1+0i\n1+0i\n0+1i\n-1-1i",
            "2 5\n1+0i\n1+0i\n1+0i\n0+1i\n-1-1i",
            "2 5\n0+1i\n0+1i\n1+0i\n-1-1i\n-1-1i",
            "2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i",
            "2 6\n1+0i\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i",
            "2 7\n1+0i\n4+5i\n-2+9i\n-9+4i\n-9-4i\n-2-9i\n4-5i",
        ];
        for text in texts {
            let cfg = parse_configuration(text).unwrap();
            let part = cyclic_partition(&cfg).unwrap();
            let n = part.n;
            let mut ranks = vec![0usize; n.saturating_sub(2)];
            ranks[0] += 1;
            ranks[n - 3] += 1;
            for d in part.spans() {
                ranks[d - 1] += 1;
                ranks[n - d - 2] += 1;
            }
            let predicted = GradedGroup::from_ranks(&ranks);
            let lat = build_face_lattice(&cfg).unwrap();
            let got = homology_z(&lat, Half::None);
            assert_eq!(got, predicted, "homology mismatch for {text}");
        }
    }
}
