//! Symbolic diffeomorphism types from cyclic partitions.
//!
//! A cyclic partition `(n₁, …, n_{2ℓ+1})` determines the closed intersection
//! manifold up to diffeomorphism (a product of three spheres for ℓ = 1, a
//! connected sum of sphere products for ℓ > 1), and likewise the bounded
//! half cut out by one coordinate sign. Expressions are small ASTs with a
//! canonical form so equal manifolds print identically, plus an open-book
//! report combining total space, binding and page.

use crate::config::{self, Configuration, DeriveAction};
use crate::cyclic::{cyclic_partition, rotate_to_index, CyclicError, CyclicPartition};
use crate::homology::expression_homology;
use std::fmt;
use thiserror::Error;

/// Symbolic description of a manifold built from spheres and disks.
///
/// The derived ordering doubles as the canonical summand/factor order:
/// variants are ranked by declaration, then compared by their fields.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ManifoldExpression {
    /// The sphere S^d.
    Sphere(usize),
    /// The closed disk D^d.
    Disk(usize),
    /// A single point.
    Point,
    /// Cartesian product of the factors.
    Product(Vec<ManifoldExpression>),
    /// Connected sum of closed equi-dimensional summands.
    ConnectedSum(Vec<ManifoldExpression>),
    /// Boundary connected sum of bounded equi-dimensional summands.
    BoundaryConnectedSum(Vec<ManifoldExpression>),
    /// S^a × S^b with an open m-disk removed (m = a + b).
    PuncturedProduct { a: usize, b: usize, m: usize },
    /// Exterior of an embedded S^p × S^q in S^m.
    Exterior { p: usize, q: usize, m: usize },
    /// The empty manifold.
    Empty,
}

use ManifoldExpression::*;

impl ManifoldExpression {
    /// Dimension of the manifold the expression denotes.
    pub fn dim(&self) -> usize {
        match self {
            Sphere(d) | Disk(d) => *d,
            Point | Empty => 0,
            Product(fs) => fs.iter().map(Self::dim).sum(),
            ConnectedSum(s) | BoundaryConnectedSum(s) => {
                s.first().map_or(0, Self::dim)
            }
            PuncturedProduct { m, .. } | Exterior { m, .. } => *m,
        }
    }

    /// True for manifolds without boundary.
    pub fn is_closed(&self) -> bool {
        match self {
            Sphere(_) | Point | Empty => true,
            Disk(_) | PuncturedProduct { .. } | Exterior { .. } => false,
            Product(fs) => fs.iter().all(Self::is_closed),
            ConnectedSum(_) => true,
            BoundaryConnectedSum(_) => false,
        }
    }

    /// Canonical form: products and sums flattened, members sorted,
    /// singleton sums unwrapped, punctured/exterior indices ordered.
    pub fn canonical(self) -> Self {
        match self {
            Product(fs) => {
                let mut flat = Vec::new();
                for f in fs {
                    match f.canonical() {
                        Product(inner) => flat.extend(inner),
                        Point => {}
                        other => flat.push(other),
                    }
                }
                flat.sort();
                match flat.len() {
                    0 => Point,
                    1 => flat.pop().unwrap(),
                    _ => Product(flat),
                }
            }
            ConnectedSum(s) => {
                let mut flat = Vec::new();
                for x in s {
                    match x.canonical() {
                        ConnectedSum(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                flat.sort();
                match flat.len() {
                    0 => Empty,
                    1 => flat.pop().unwrap(),
                    _ => ConnectedSum(flat),
                }
            }
            BoundaryConnectedSum(s) => {
                let mut flat = Vec::new();
                for x in s {
                    match x.canonical() {
                        BoundaryConnectedSum(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                flat.sort();
                match flat.len() {
                    0 => Empty,
                    1 => flat.pop().unwrap(),
                    _ => BoundaryConnectedSum(flat),
                }
            }
            PuncturedProduct { a, b, m } => {
                PuncturedProduct { a: a.min(b), b: a.max(b), m }
            }
            Exterior { p, q, m } => Exterior { p: p.min(q), q: p.max(q), m },
            other => other,
        }
    }
}

/// Writes sum members grouped by multiplicity: `op_k (expr)` for a run of
/// k equal members, `op (expr)` for later singleton runs, and a bare
/// `(expr)` when the very first run is a singleton.
fn write_sum(f: &mut fmt::Formatter<'_>, op: &str, members: &[ManifoldExpression]) -> fmt::Result {
    let mut i = 0;
    let mut first = true;
    while i < members.len() {
        let mut j = i + 1;
        while j < members.len() && members[j] == members[i] {
            j += 1;
        }
        let count = j - i;
        if !first {
            write!(f, " ")?;
        }
        if count > 1 {
            write!(f, "{op}_{count} ({})", members[i])?;
        } else if first {
            write!(f, "({})", members[i])?;
        } else {
            write!(f, "{op} ({})", members[i])?;
        }
        first = false;
        i = j;
    }
    Ok(())
}

impl fmt::Display for ManifoldExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sphere(d) => write!(f, "S^{d}"),
            Disk(d) => write!(f, "D^{d}"),
            Point => write!(f, "pt"),
            Empty => write!(f, "empty"),
            Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            ConnectedSum(s) => write_sum(f, "#", s),
            BoundaryConnectedSum(s) => write_sum(f, "[+]", s),
            PuncturedProduct { a, b, m } => write!(f, "(S^{a} x S^{b}) \\ D^{m}"),
            Exterior { p, q, m } => write!(f, "Ext(S^{p} x S^{q} in S^{m})"),
        }
    }
}

/// Which manifold the classification refers to: the real intersection of
/// quadrics or its complex (moment-angle) model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Real,
    Complex,
}

/// How firmly the emitted diffeomorphism type is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The formula applies without unverified hypotheses.
    Unconditional,
    /// Hypotheses were checked as far as computable; the rest is assumed.
    Conditional,
    /// The classification does not apply.
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Unconditional => write!(f, "unconditional"),
            Verdict::Conditional => write!(f, "conditional"),
            Verdict::NotApplicable => write!(f, "not_applicable"),
        }
    }
}

/// Record of which classification hypotheses were verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisStatus {
    /// Ambient dimension is high enough for the surgery arguments the
    /// formula relies on.
    pub dim_ok: bool,
    /// First homology of the emitted expression vanishes.
    pub h1_zero: bool,
    pub verdict: Verdict,
    pub notes: String,
}

/// Errors from classification entry points.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("repeat_required: coordinate {0} is not repeated; the real open book needs a duplicated vector")]
    RepeatRequired(usize),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
}

/// Sizes of the class cycle for the complex (moment-angle) total space:
/// every class doubles.
fn doubled(sizes: &[usize]) -> Vec<usize> {
    sizes.iter().map(|&s| 2 * s).collect()
}

/// Sizes for the complex bounded half: the distinguished first class loses
/// one coordinate to the sign cut, the rest double.
fn doubled_first_reduced(sizes: &[usize]) -> Vec<usize> {
    let mut out = doubled(sizes);
    out[0] -= 1;
    out
}

/// Window sums of a size cycle: `d_i = n_i + … + n_{i+ℓ-1}` with
/// `2ℓ + 1` classes.
fn window_sums(sizes: &[usize]) -> Vec<usize> {
    let m = sizes.len();
    let ell = (m - 1) / 2;
    (0..m)
        .map(|i| (0..ell).map(|t| sizes[(i + t) % m]).sum())
        .collect()
}

/// Closed manifold of a size cycle: a three-sphere product for ℓ = 1, a
/// connected sum of sphere products for ℓ > 1.
fn closed_expression(sizes: &[usize]) -> ManifoldExpression {
    let n: usize = sizes.iter().sum();
    let ell = (sizes.len() - 1) / 2;
    if ell == 1 {
        Product(sizes.iter().map(|&s| Sphere(s - 1)).collect()).canonical()
    } else {
        let sum = window_sums(sizes)
            .into_iter()
            .map(|d| Product(vec![Sphere(d - 1), Sphere(n - d - 2)]))
            .collect();
        ConnectedSum(sum).canonical()
    }
}

/// Bounded half of a size cycle, by case analysis on ℓ and the size of the
/// distinguished first class.
fn bounded_expression(sizes: &[usize]) -> ManifoldExpression {
    let n: usize = sizes.iter().sum();
    let m = sizes.len();
    let ell = (m - 1) / 2;
    let d = window_sums(sizes);
    // 1-based helpers matching the classical indexing of the cases.
    let size = |i: usize| sizes[i - 1];
    let dd = |i: usize| d[i - 1];
    let s_by_d = |i: usize| Product(vec![Sphere(dd(i) - 1), Disk(n - dd(i) - 2)]);
    let d_by_s = |i: usize| Product(vec![Disk(dd(i) - 1), Sphere(n - dd(i) - 2)]);
    if ell == 1 {
        // (a) product with a disk along the distinguished class.
        Product(vec![Sphere(size(2) - 1), Sphere(size(3) - 1), Disk(size(1) - 1)]).canonical()
    } else if size(1) > 1 {
        // (b) boundary connected sum of sphere-disk products.
        let mut sum: Vec<ManifoldExpression> = (2..=ell + 2).map(s_by_d).collect();
        sum.extend((ell + 3..=2 * ell + 1).map(d_by_s));
        sum.push(d_by_s(1));
        BoundaryConnectedSum(sum).canonical()
    } else if ell > 2 {
        // (c) as (b) with the two extreme sphere-disk summands fused into
        // a punctured sphere product.
        let mut sum = vec![PuncturedProduct { a: dd(2) - 1, b: dd(ell + 2) - 1, m: n - 3 }];
        sum.extend((3..=ell + 1).map(s_by_d));
        sum.extend((ell + 3..=2 * ell + 1).map(d_by_s));
        sum.push(d_by_s(1));
        BoundaryConnectedSum(sum).canonical()
    } else {
        // (d) ℓ = 2 with a singleton distinguished class: punctured product
        // plus the exterior of a sphere product.
        BoundaryConnectedSum(vec![
            PuncturedProduct { a: dd(2) - 1, b: dd(4) - 1, m: n - 3 },
            Exterior { p: size(2) - 1, q: size(5) - 1, m: n - 3 },
        ])
        .canonical()
    }
}

fn status_for(expr: &ManifoldExpression, flavor: Flavor, ell: usize, ambient_dim: usize, min_dim: usize) -> HypothesisStatus {
    let dim_ok = ambient_dim >= min_dim;
    let h1_zero = expression_homology(expr)
        .map(|h| h.rank(1) == 0 && h.torsion_at(1).is_empty())
        .unwrap_or(false);
    let (verdict, notes) = if ell == 1 {
        (Verdict::Unconditional, "explicit product formula".to_string())
    } else if flavor == Flavor::Complex {
        (Verdict::Unconditional, "moment-angle case needs no extra hypotheses".to_string())
    } else {
        let mut notes = String::from("fundamental group not computed; conditional on simple connectivity");
        if !dim_ok {
            notes.push_str("; dimension below the surgery threshold");
        }
        (Verdict::Conditional, notes)
    };
    HypothesisStatus { dim_ok, h1_zero, verdict, notes }
}

/// Diffeomorphism type of the closed intersection manifold.
pub fn classify_z(part: &CyclicPartition, flavor: Flavor) -> (ManifoldExpression, HypothesisStatus) {
    let sizes = part.sizes();
    let expr = match flavor {
        Flavor::Real => closed_expression(&sizes),
        Flavor::Complex => closed_expression(&doubled(&sizes)),
    };
    let dim = match flavor {
        Flavor::Real => part.n - 3,
        Flavor::Complex => 2 * part.n - 3,
    };
    let status = status_for(&expr, flavor, part.ell(), dim, 5);
    (expr, status)
}

/// Diffeomorphism type of the bounded half cut out by one coordinate sign.
/// The partition must already start at the class of the distinguished
/// coordinate (see `rotate_to_index`).
pub fn classify_z_plus(part: &CyclicPartition, flavor: Flavor) -> (ManifoldExpression, HypothesisStatus) {
    let sizes = part.sizes();
    let expr = match flavor {
        Flavor::Real => bounded_expression(&sizes),
        Flavor::Complex => bounded_expression(&doubled_first_reduced(&sizes)),
    };
    let dim = match flavor {
        Flavor::Real => part.n - 3,
        Flavor::Complex => 2 * part.n - 3,
    };
    let status = status_for(&expr, flavor, part.ell(), dim, 6);
    (expr, status)
}

/// Diffeomorphism type of the `s`-fold suspension-like family member: a
/// connected sum of sphere products with both exponents shifted by `s`.
pub fn classify_z_s(part: &CyclicPartition, s: usize) -> ManifoldExpression {
    assert!(s >= 1, "the shift parameter must be positive");
    assert!(part.n > 3, "the shifted family needs n > 3");
    let n = part.n;
    let sum = part
        .spans()
        .into_iter()
        .map(|d| Product(vec![Sphere(2 * d + s - 1), Sphere(2 * n - 2 * d + s - 2)]))
        .collect();
    ConnectedSum(sum).canonical()
}

/// An open-book decomposition: total space, binding (the manifold of the
/// configuration with one coordinate removed), page (the bounded half) and
/// the always-trivial monodromy.
#[derive(Debug, Clone)]
pub struct OpenBookReport {
    pub total: ManifoldExpression,
    pub binding_cfg: Configuration,
    pub binding: ManifoldExpression,
    pub page: ManifoldExpression,
    pub monodromy: &'static str,
    pub status: HypothesisStatus,
}

/// Builds the open-book report at coordinate `i` (0-based). The real
/// flavor requires the vector at `i` to be repeated in the configuration.
pub fn open_book_report(cfg: &Configuration, i: usize, flavor: Flavor) -> Result<OpenBookReport, ClassifyError> {
    if flavor == Flavor::Real {
        let (class_of, members) = cfg.ray_classes();
        if members[class_of[i]].len() < 2 {
            return Err(ClassifyError::RepeatRequired(i + 1));
        }
    }
    let part = cyclic_partition(cfg)?;
    let (total, _) = classify_z(&part, flavor);
    let (page, mut status) = classify_z_plus(&rotate_to_index(&part, i), flavor);
    let binding_cfg = config::derive(cfg, DeriveAction::Remove(i))?;
    let binding = match cyclic_partition(&binding_cfg) {
        Ok(bpart) => classify_z(&bpart, flavor).0,
        Err(CyclicError::EmptyOrDegenerate) => {
            if !status.notes.is_empty() {
                status.notes.push_str("; ");
            }
            status.notes.push_str("the binding might be empty");
            Empty
        }
        Err(e) => return Err(e.into()),
    };
    Ok(OpenBookReport { total, binding_cfg, binding, page, monodromy: "trivial", status })
}
