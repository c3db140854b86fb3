//! Numerical certification of the confoliation structure on the extended
//! variety `{Σ w_r² + Σ λ_j |z_j|² = 0, |w|² + |z|² = 1}` in ℂ^{s+n}.
//!
//! The 1-form `α = Σ 2a_r (u_r dv_r − v_r du_r) + Σ 2b_j (x_j dy_j − y_j dx_j)`
//! (positive weights a, b) is evaluated together with its constant exterior
//! derivative on an orthonormal tangent basis; the top form `α ∧ (dα)^m`
//! is computed as a bordered Pfaffian. Away from the degeneracy locus
//! `W = {w = 0}` the value is positive; on `W` it vanishes and the kernel
//! dimensions jump to (3, 2). Legendrian escape paths out of `W` certify
//! conductivity.

use crate::config::Configuration;
use nalgebra::{DMatrix, DVector};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Iterations and draws allowed to the sampler.
const MAX_NEWTON_ITERS: usize = 100;
const MAX_DRAWS: usize = 10;
/// Projection residual target.
const PROJECTION_TOL: f64 = 1e-12;
/// Relative singular-value threshold for rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// A point of the extended variety: `s` complex `w` coordinates, then `n`
/// complex `z` coordinates, flattened to `2(s+n)` reals in the order
/// `(u₁, v₁, …, u_s, v_s, x₁, y₁, …, x_n, y_n)`.
#[derive(Debug, Clone)]
pub struct AmbientPoint {
    pub coords: Vec<f64>,
    pub s: usize,
    pub n: usize,
    /// |Σ w² + Σ λ|z|²| after projection.
    pub residual_f: f64,
    /// |ρ − 1| after projection.
    pub residual_rho: f64,
}

impl AmbientPoint {
    /// Euclidean norm of the `w` block.
    pub fn w_norm(&self) -> f64 {
        self.coords[..2 * self.s].iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// True if the point lies on the degeneracy locus `W` (w = 0 exactly,
    /// as produced by the on-W sampler).
    pub fn on_w(&self) -> bool {
        self.coords[..2 * self.s].iter().all(|&x| x == 0.0)
    }
}

/// Positive weights of the 1-form, one per complex coordinate.
#[derive(Debug, Clone)]
pub struct Weights {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

/// Where the sampler should land.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleRegion {
    /// Anywhere on the variety (generically off `W`).
    Generic,
    /// On `W`: `w = 0`, `z` on the base variety.
    OnW,
    /// `z = 0`: the Brieskorn-type locus (needs s ≥ 2).
    Brieskorn,
}

/// How to pick the initial direction of an escape path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EscapeDirection {
    /// Maximize the `w` component: transverse to `W`.
    Transverse,
    /// Zero `w` component: stays inside `W` (negative control).
    TangentToW,
}

/// Outcome of a Legendrian escape integration.
#[derive(Debug, Clone)]
pub struct EscapeReport {
    /// Steps taken until the confoliation value turned positive.
    pub steps: usize,
    /// Oriented confoliation value at the final point.
    pub final_value: f64,
    /// Largest |α(unit step direction)| along the path.
    pub legendrian_defect: f64,
}

/// One fully analyzed sample.
#[derive(Debug, Clone)]
pub struct ContactSample {
    pub point: AmbientPoint,
    pub weights: Weights,
    pub confoliation_value: f64,
    /// Comparison scale for deciding "zero": m!·‖α‖·σ_max(dα|T)^m.
    pub scale: f64,
    pub ker_dalpha_dim: usize,
    pub ker_both_dim: usize,
    pub on_w: bool,
}

/// Errors from the numerical layer.
#[derive(Debug, Error)]
pub enum ContactError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no_convergence: projection failed after {0} restarts")]
    NoConvergence(usize),
    #[error("ill_conditioned: {0}")]
    IllConditioned(String),
    #[error("trapped: no positive confoliation value within {0} steps")]
    Trapped(usize),
}

/// Analyzer bound to one configuration and one `s`; holds the orientation
/// calibration so confoliation values have a well-defined sign.
#[derive(Debug, Clone)]
pub struct ContactAnalyzer {
    lambda: Vec<(f64, f64)>,
    pub s: usize,
    pub n: usize,
    orientation: f64,
}

impl ContactAnalyzer {
    /// Checks the preconditions (k = 2, n > 3, s ≥ 1), converts the
    /// configuration to floating point and calibrates the orientation on a
    /// reference generic sample with unit weights.
    pub fn new(cfg: &Configuration, s: usize) -> Result<Self, ContactError> {
        if cfg.k != 2 {
            return Err(ContactError::Unsupported(format!(
                "contact analysis needs k = 2, got k = {}",
                cfg.k
            )));
        }
        if cfg.n() <= 3 {
            return Err(ContactError::Unsupported(
                "contact analysis needs n > 3".into(),
            ));
        }
        if s < 1 {
            return Err(ContactError::Unsupported("s must be at least 1".into()));
        }
        let lambda = cfg
            .vectors
            .iter()
            .map(|v| {
                let re = v[0].to_f64().unwrap_or(f64::NAN);
                let im = v[1].to_f64().unwrap_or(f64::NAN);
                if !re.is_finite() || !im.is_finite() {
                    return Err(ContactError::Unsupported(
                        "configuration entry does not fit a double".into(),
                    ));
                }
                Ok((re, im))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut me = ContactAnalyzer { lambda, s, n: cfg.n(), orientation: 1.0 };
        let reference = me.sample(0x5EED_CA1B, SampleRegion::Generic)?;
        let raw = me.raw_value(&reference, &me.unit_weights())?;
        if raw == 0.0 {
            return Err(ContactError::IllConditioned(
                "reference sample has vanishing top form".into(),
            ));
        }
        me.orientation = raw.signum();
        Ok(me)
    }

    /// Ambient real dimension 2(s+n).
    fn ambient_dim(&self) -> usize {
        2 * (self.s + self.n)
    }

    /// All weights 1.
    pub fn unit_weights(&self) -> Weights {
        Weights { a: vec![1.0; self.s], b: vec![1.0; self.n] }
    }

    /// Reproducible weights in [1/2, 2].
    pub fn seeded_weights(&self, seed: u64) -> Weights {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x57E1_6875);
        let mut draw = |k: usize| (0..k).map(|_| rng.gen_range(0.5..2.0)).collect();
        Weights { a: draw(self.s), b: draw(self.n) }
    }

    /// Constraint residuals (Re F, Im F, ρ − 1) at ambient coordinates.
    fn residuals(&self, x: &[f64]) -> [f64; 3] {
        let s = self.s;
        let mut re_f = 0.0;
        let mut im_f = 0.0;
        let mut rho = -1.0;
        for r in 0..s {
            let (u, v) = (x[2 * r], x[2 * r + 1]);
            re_f += u * u - v * v;
            im_f += 2.0 * u * v;
            rho += u * u + v * v;
        }
        for j in 0..self.n {
            let (px, py) = (x[2 * (s + j)], x[2 * (s + j) + 1]);
            let q = px * px + py * py;
            re_f += self.lambda[j].0 * q;
            im_f += self.lambda[j].1 * q;
            rho += q;
        }
        [re_f, im_f, rho]
    }

    /// 3 × 2(s+n) constraint Jacobian at ambient coordinates.
    fn jacobian(&self, x: &[f64]) -> DMatrix<f64> {
        let s = self.s;
        let dim = self.ambient_dim();
        let mut j = DMatrix::zeros(3, dim);
        for r in 0..s {
            let (u, v) = (x[2 * r], x[2 * r + 1]);
            j[(0, 2 * r)] = 2.0 * u;
            j[(0, 2 * r + 1)] = -2.0 * v;
            j[(1, 2 * r)] = 2.0 * v;
            j[(1, 2 * r + 1)] = 2.0 * u;
            j[(2, 2 * r)] = 2.0 * u;
            j[(2, 2 * r + 1)] = 2.0 * v;
        }
        for jj in 0..self.n {
            let c = 2 * (s + jj);
            let (px, py) = (x[c], x[c + 1]);
            let (lr, li) = self.lambda[jj];
            j[(0, c)] = 2.0 * lr * px;
            j[(0, c + 1)] = 2.0 * lr * py;
            j[(1, c)] = 2.0 * li * px;
            j[(1, c + 1)] = 2.0 * li * py;
            j[(2, c)] = 2.0 * px;
            j[(2, c + 1)] = 2.0 * py;
        }
        j
    }

    /// Gauss-Newton projection of `x` onto the variety, in place. The
    /// constraint gradients have no `w` component at `w = 0`, so a point
    /// started on `W` stays on `W` exactly.
    fn project(&self, x: &mut [f64]) -> bool {
        for _ in 0..MAX_NEWTON_ITERS {
            let r = self.residuals(x);
            let worst = r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            if worst < PROJECTION_TOL {
                return true;
            }
            let j = self.jacobian(x);
            let rhs = DVector::from_column_slice(&r);
            let svd = j.svd(true, true);
            let Ok(step) = svd.solve(&rhs, 1e-12) else { return false };
            for (xi, si) in x.iter_mut().zip(step.iter()) {
                *xi -= si;
            }
        }
        false
    }

    /// Draws a reproducible point of the requested region of the variety.
    pub fn sample(&self, seed: u64, region: SampleRegion) -> Result<AmbientPoint, ContactError> {
        if region == SampleRegion::Brieskorn && self.s < 2 {
            return Err(ContactError::Unsupported(
                "the z = 0 locus is empty for s < 2".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_DRAWS {
            let mut x: Vec<f64> =
                (0..self.ambient_dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            match region {
                SampleRegion::Generic => {}
                SampleRegion::OnW => x[..2 * self.s].fill(0.0),
                SampleRegion::Brieskorn => x[2 * self.s..].fill(0.0),
            }
            if self.project(&mut x) {
                // The projection preserves the zeroed block up to roundoff
                // dust (the constraint gradients vanish there); restore it
                // exactly, which leaves the residuals unchanged to first
                // order in the dust.
                match region {
                    SampleRegion::Generic => {}
                    SampleRegion::OnW => x[..2 * self.s].fill(0.0),
                    SampleRegion::Brieskorn => x[2 * self.s..].fill(0.0),
                }
                let r = self.residuals(&x);
                let worst = r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                if worst >= PROJECTION_TOL {
                    continue;
                }
                return Ok(AmbientPoint {
                    coords: x,
                    s: self.s,
                    n: self.n,
                    residual_f: (r[0] * r[0] + r[1] * r[1]).sqrt(),
                    residual_rho: r[2].abs(),
                });
            }
        }
        Err(ContactError::NoConvergence(MAX_DRAWS))
    }

    /// Covector of α at a point, in ambient coordinates.
    fn alpha(&self, x: &[f64], w: &Weights) -> DVector<f64> {
        let s = self.s;
        let mut a = DVector::zeros(self.ambient_dim());
        for r in 0..s {
            a[2 * r] = -2.0 * w.a[r] * x[2 * r + 1];
            a[2 * r + 1] = 2.0 * w.a[r] * x[2 * r];
        }
        for j in 0..self.n {
            let c = 2 * (s + j);
            a[c] = -2.0 * w.b[j] * x[c + 1];
            a[c + 1] = 2.0 * w.b[j] * x[c];
        }
        a
    }

    /// Constant ambient matrix of dα (antisymmetric, block diagonal).
    fn dalpha(&self, w: &Weights) -> DMatrix<f64> {
        let dim = self.ambient_dim();
        let mut m = DMatrix::zeros(dim, dim);
        for r in 0..self.s {
            m[(2 * r, 2 * r + 1)] = 4.0 * w.a[r];
            m[(2 * r + 1, 2 * r)] = -4.0 * w.a[r];
        }
        for j in 0..self.n {
            let c = 2 * (self.s + j);
            m[(c, c + 1)] = 4.0 * w.b[j];
            m[(c + 1, c)] = -4.0 * w.b[j];
        }
        m
    }

    /// Orthonormal basis of the tangent space (columns), together with an
    /// orthonormalized basis of the 3-dimensional normal space. Fails when
    /// the constraint Jacobian is rank deficient (non-generic sample).
    fn tangent_basis(&self, pt: &AmbientPoint) -> Result<(DMatrix<f64>, DMatrix<f64>), ContactError> {
        let dim = self.ambient_dim();
        let j = self.jacobian(&pt.coords);
        let mut normals: Vec<DVector<f64>> = Vec::with_capacity(3);
        for r in 0..3 {
            let mut v: DVector<f64> = j.row(r).transpose();
            for _ in 0..2 {
                for b in &normals {
                    let p = b.dot(&v);
                    v -= b * p;
                }
            }
            let norm = v.norm();
            if norm < 1e-10 {
                return Err(ContactError::IllConditioned(
                    "constraint jacobian is rank deficient; sample flagged non-generic".into(),
                ));
            }
            normals.push(v / norm);
        }
        let mut basis: Vec<DVector<f64>> = Vec::with_capacity(dim - 3);
        for i in 0..dim {
            if basis.len() == dim - 3 {
                break;
            }
            let mut v = DVector::zeros(dim);
            v[i] = 1.0;
            for _ in 0..2 {
                for b in normals.iter().chain(basis.iter()) {
                    let p = b.dot(&v);
                    v -= b * p;
                }
            }
            let norm = v.norm();
            if norm > 1e-8 {
                basis.push(v / norm);
            }
        }
        if basis.len() != dim - 3 {
            return Err(ContactError::IllConditioned(
                "failed to complete a tangent basis".into(),
            ));
        }
        let t = DMatrix::from_columns(&basis);
        let nmat = DMatrix::from_columns(&normals);
        Ok((t, nmat))
    }

    /// α ∧ (dα)^m on an oriented orthonormal tangent frame, m = n+s−2, as
    /// the bordered Pfaffian times m!. The frame is oriented so that frame
    /// plus normals is positively oriented in the ambient space; the final
    /// sign uses the analyzer's calibration.
    fn raw_value(&self, pt: &AmbientPoint, w: &Weights) -> Result<f64, ContactError> {
        let (t, normals) = self.tangent_basis(pt)?;
        let dim = self.ambient_dim();
        let mut full = DMatrix::zeros(dim, dim);
        full.view_mut((0, 0), (dim, dim - 3)).copy_from(&t);
        full.view_mut((0, dim - 3), (dim, 3)).copy_from(&normals);
        let orient = full.determinant().signum();

        let m = self.n + self.s - 2;
        let alpha_t = t.transpose() * self.alpha(&pt.coords, w);
        let dalpha_t = t.transpose() * self.dalpha(w) * &t;
        let side = dim - 2; // 2m + 2
        let mut bord = DMatrix::zeros(side, side);
        for i in 0..side - 1 {
            bord[(0, i + 1)] = alpha_t[i];
            bord[(i + 1, 0)] = -alpha_t[i];
            for jj in 0..side - 1 {
                bord[(i + 1, jj + 1)] = dalpha_t[(i, jj)];
            }
        }
        let mut factorial = 1.0;
        for q in 2..=m {
            factorial *= q as f64;
        }
        Ok(orient * factorial * pfaffian(bord))
    }

    /// Oriented confoliation value: positive off `W`, zero on `W`.
    pub fn confoliation_value(&self, pt: &AmbientPoint, w: &Weights) -> Result<f64, ContactError> {
        Ok(self.orientation * self.raw_value(pt, w)?)
    }

    /// Comparison scale for the value: m!·‖α|T‖·σ_max(dα|T)^m.
    pub fn value_scale(&self, pt: &AmbientPoint, w: &Weights) -> Result<f64, ContactError> {
        let (t, _) = self.tangent_basis(pt)?;
        let m = self.n + self.s - 2;
        let alpha_t = t.transpose() * self.alpha(&pt.coords, w);
        let dalpha_t = t.transpose() * self.dalpha(w) * &t;
        let smax = dalpha_t.svd(false, false).singular_values[0];
        let mut factorial = 1.0;
        for q in 2..=m {
            factorial *= q as f64;
        }
        Ok(factorial * alpha_t.norm() * smax.powi(m as i32))
    }

    /// (dim ker(dα|T), dim (ker α ∩ ker dα)|T) by singular-value
    /// thresholding at `tol` relative to the largest singular value.
    pub fn kernel_dims(
        &self,
        pt: &AmbientPoint,
        w: &Weights,
        tol: f64,
    ) -> Result<(usize, usize), ContactError> {
        let (t, _) = self.tangent_basis(pt)?;
        let dalpha_t = t.transpose() * self.dalpha(w) * &t;
        let svd = dalpha_t.clone().svd(false, true);
        let smax = svd.singular_values[0];
        let thr = tol * smax;
        if svd.singular_values.iter().any(|&s| s > thr && s < 10.0 * thr) {
            return Err(ContactError::IllConditioned(
                "singular values cluster at the rank threshold".into(),
            ));
        }
        let vt = svd.v_t.as_ref().expect("svd with v requested");
        let ker: Vec<usize> = (0..svd.singular_values.len())
            .filter(|&i| svd.singular_values[i] <= thr)
            .collect();
        let ker_dim = ker.len();
        // α restricted to ker(dα|T).
        let alpha_t = t.transpose() * self.alpha(&pt.coords, w);
        let mut proj = 0.0f64;
        for &i in &ker {
            let dot: f64 = (0..alpha_t.len()).map(|c| vt[(i, c)] * alpha_t[c]).sum();
            proj += dot * dot;
        }
        let both = if proj.sqrt() > tol * alpha_t.norm() && ker_dim > 0 {
            ker_dim - 1
        } else {
            ker_dim
        };
        Ok((ker_dim, both))
    }

    /// Integrates a Legendrian path from a `W` point: unit steps inside
    /// ker α along the variety, reporting the first step where the
    /// confoliation value exceeds `tol_zero` times the local scale.
    pub fn escape_path(
        &self,
        pt: &AmbientPoint,
        w: &Weights,
        step: f64,
        max_steps: usize,
        direction: EscapeDirection,
        tol_zero: f64,
    ) -> Result<EscapeReport, ContactError> {
        assert!(pt.on_w(), "escape paths start on W");
        let dim = self.ambient_dim();
        let sw = 2 * self.s;
        let mut x = pt.coords.clone();
        // Initial direction in ker α ∩ tangent space. On W both the
        // constraint normals and α have vanishing w-components, so a pure
        // w-direction projects to itself: it maximizes the transverse
        // component. A z-direction projects inside W for the control.
        let mut dir = {
            let (t, normals) = self.tangent_basis(pt)?;
            let alpha_tan = &t * (t.transpose() * self.alpha(&x, w));
            let anorm = alpha_tan.norm();
            if anorm < 1e-12 {
                return Err(ContactError::IllConditioned("α vanishes at the start".into()));
            }
            let a_unit = alpha_tan / anorm;
            let range = match direction {
                EscapeDirection::Transverse => 0..sw,
                EscapeDirection::TangentToW => sw..dim,
            };
            let mut chosen: Option<DVector<f64>> = None;
            for i in range {
                let mut v = DVector::zeros(dim);
                v[i] = 1.0;
                for _ in 0..2 {
                    for c in 0..3 {
                        let b = normals.column(c);
                        let p = b.dot(&v);
                        v -= b * p;
                    }
                    let p = a_unit.dot(&v);
                    v -= &a_unit * p;
                }
                if direction == EscapeDirection::TangentToW {
                    for r in 0..sw {
                        v[r] = 0.0;
                    }
                }
                let norm = v.norm();
                if norm > 1e-8 {
                    chosen = Some(v / norm);
                    break;
                }
            }
            chosen.ok_or_else(|| {
                ContactError::IllConditioned("no usable escape direction".into())
            })?
        };
        let mut defect = 0.0f64;
        for count in 1..=max_steps {
            let prev = x.clone();
            for i in 0..dim {
                x[i] += step * dir[i];
            }
            if !self.project(&mut x) {
                return Err(ContactError::NoConvergence(1));
            }
            if direction == EscapeDirection::TangentToW {
                x[..sw].fill(0.0);
            }
            // Actual displacement direction, Legendrian defect against the
            // form at the departure point.
            let mut disp = DVector::zeros(dim);
            for i in 0..dim {
                disp[i] = x[i] - prev[i];
            }
            let dn = disp.norm();
            if dn > 0.0 {
                disp /= dn;
                defect = defect.max(self.alpha(&prev, w).dot(&disp).abs());
            }
            let r = self.residuals(&x);
            let here = AmbientPoint {
                coords: x.clone(),
                s: self.s,
                n: self.n,
                residual_f: (r[0] * r[0] + r[1] * r[1]).sqrt(),
                residual_rho: r[2].abs(),
            };
            let value = self.confoliation_value(&here, w)?;
            let scale = self.value_scale(&here, w)?;
            if value > tol_zero * scale {
                return Ok(EscapeReport {
                    steps: count,
                    final_value: value,
                    legendrian_defect: defect,
                });
            }
            // Continue in ker α: project the previous direction.
            let (t, _) = self.tangent_basis(&here)?;
            let alpha_t = t.transpose() * self.alpha(&x, w);
            let mut dir_t = t.transpose() * &dir;
            let a_unit = alpha_t.normalize();
            let p = a_unit.dot(&dir_t);
            dir_t -= a_unit * p;
            let mut cand = &t * dir_t;
            if direction == EscapeDirection::TangentToW {
                for i in 0..sw {
                    cand[i] = 0.0;
                }
            }
            let norm = cand.norm();
            if norm < 1e-12 {
                return Err(ContactError::IllConditioned(
                    "escape direction degenerated".into(),
                ));
            }
            dir = cand / norm;
        }
        Err(ContactError::Trapped(max_steps))
    }

    /// Full record for one seeded sample.
    pub fn analyze(
        &self,
        seed: u64,
        region: SampleRegion,
        weights: &Weights,
        tol: f64,
    ) -> Result<ContactSample, ContactError> {
        let point = self.sample(seed, region)?;
        let confoliation_value = self.confoliation_value(&point, weights)?;
        let scale = self.value_scale(&point, weights)?;
        let (ker_dalpha_dim, ker_both_dim) = self.kernel_dims(&point, weights, tol)?;
        let on_w = point.on_w();
        Ok(ContactSample {
            point,
            weights: weights.clone(),
            confoliation_value,
            scale,
            ker_dalpha_dim,
            ker_both_dim,
            on_w,
        })
    }
}

/// Pfaffian of an even-dimensional antisymmetric matrix by skew Gaussian
/// elimination with pivoting (Parlett-Reid).
fn pfaffian(mut a: DMatrix<f64>) -> f64 {
    let n = a.nrows();
    if n % 2 == 1 {
        return 0.0;
    }
    let mut pf = 1.0;
    let mut k = 0;
    while k + 1 < n {
        let mut p = k + 1;
        for j in k + 2..n {
            if a[(k, j)].abs() > a[(k, p)].abs() {
                p = j;
            }
        }
        if a[(k, p)] == 0.0 {
            return 0.0;
        }
        if p != k + 1 {
            a.swap_rows(p, k + 1);
            a.swap_columns(p, k + 1);
            pf = -pf;
        }
        let piv = a[(k, k + 1)];
        pf *= piv;
        for i in k + 2..n {
            let f = a[(k, i)] / piv;
            if f != 0.0 {
                for r in k + 2..n {
                    let d = f * a[(r, k + 1)];
                    a[(r, i)] -= d;
                    a[(i, r)] += d;
                }
            }
        }
        k += 2;
    }
    pf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_configuration;

    const PENTAGON: &str = "2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i";

    fn analyzer(s: usize) -> ContactAnalyzer {
        ContactAnalyzer::new(&parse_configuration(PENTAGON).unwrap(), s).unwrap()
    }

    #[test]
    fn pfaffian_of_known_matrices() {
        let m = DMatrix::from_row_slice(4, 4, &[
            0.0, 1.0, 2.0, 3.0,
            -1.0, 0.0, 4.0, 5.0,
            -2.0, -4.0, 0.0, 6.0,
            -3.0, -5.0, -6.0, 0.0,
        ]);
        // Pf = a01*a23 - a02*a13 + a03*a12.
        assert!((pfaffian(m.clone()) - (1.0 * 6.0 - 2.0 * 5.0 + 3.0 * 4.0)).abs() < 1e-12);
        // A transposition of the basis flips the sign.
        let perm = DMatrix::from_row_slice(4, 4, &[
            0.0, 1.0, 0.0, 0.0,
            1.0, 0.0, 0.0, 0.0,
            0.0, 0.0, 1.0, 0.0,
            0.0, 0.0, 0.0, 1.0,
        ]);
        assert!((perm.determinant() + 1.0f64).abs() < 1e-12);
        let conj = perm.transpose() * m * perm;
        assert!((pfaffian(conj) + 8.0).abs() < 1e-9);
    }

    #[test]
    fn generic_samples_are_contact_points() {
        let an = analyzer(1);
        let w = an.unit_weights();
        for seed in 1..=5u64 {
            let pt = an.sample(seed, SampleRegion::Generic).unwrap();
            assert!(pt.residual_f < 1e-11 && pt.residual_rho < 1e-11);
            assert!(pt.w_norm() > 1e-6, "generic sample fell on W");
            let v = an.confoliation_value(&pt, &w).unwrap();
            let scale = an.value_scale(&pt, &w).unwrap();
            assert!(v > 1e-8 * scale, "value not positive: {v} vs scale {scale}");
            assert_eq!(an.kernel_dims(&pt, &w, DEFAULT_RANK_TOL).unwrap(), (1, 0));
        }
    }

    #[test]
    fn w_samples_are_degenerate_with_kernel_three_two() {
        let an = analyzer(1);
        for seed in 1..=5u64 {
            let w = an.seeded_weights(seed);
            let pt = an.sample(seed, SampleRegion::OnW).unwrap();
            assert!(pt.on_w());
            assert!(pt.residual_f < 1e-11 && pt.residual_rho < 1e-11);
            let v = an.confoliation_value(&pt, &w).unwrap();
            let scale = an.value_scale(&pt, &w).unwrap();
            assert!(v.abs() <= 1e-8 * scale, "value {v} not zero against {scale}");
            assert_eq!(an.kernel_dims(&pt, &w, DEFAULT_RANK_TOL).unwrap(), (3, 2));
        }
    }

    #[test]
    fn weight_scaling_scales_the_value_homogeneously() {
        let an = analyzer(2);
        let pt = an.sample(11, SampleRegion::Generic).unwrap();
        let w1 = an.seeded_weights(3);
        let mut w2 = w1.clone();
        for a in w2.a.iter_mut().chain(w2.b.iter_mut()) {
            *a *= 2.0;
        }
        let v1 = an.confoliation_value(&pt, &w1).unwrap();
        let v2 = an.confoliation_value(&pt, &w2).unwrap();
        let expo = (an.n + an.s - 1) as f64;
        assert!((v2 / v1 - 2f64.powf(expo)).abs() < 1e-6 * 2f64.powf(expo));
        assert_eq!(
            an.kernel_dims(&pt, &w1, DEFAULT_RANK_TOL).unwrap(),
            an.kernel_dims(&pt, &w2, DEFAULT_RANK_TOL).unwrap()
        );
    }

    #[test]
    fn brieskorn_locus_is_contact_for_three_handles() {
        let an = analyzer(3);
        let w = an.unit_weights();
        let pt = an.sample(7, SampleRegion::Brieskorn).unwrap();
        assert!(pt.coords[2 * an.s..].iter().all(|&c| c == 0.0));
        let v = an.confoliation_value(&pt, &w).unwrap();
        let scale = an.value_scale(&pt, &w).unwrap();
        assert!(v > 1e-8 * scale);
        assert_eq!(an.kernel_dims(&pt, &w, DEFAULT_RANK_TOL).unwrap(), (1, 0));
        // The z = 0 locus is empty for s = 1.
        assert!(matches!(
            analyzer(1).sample(7, SampleRegion::Brieskorn),
            Err(ContactError::Unsupported(_))
        ));
    }

    #[test]
    fn legendrian_escape_leaves_w_quickly() {
        let an = analyzer(1);
        let w = an.unit_weights();
        let pt = an.sample(21, SampleRegion::OnW).unwrap();
        let rep = an
            .escape_path(&pt, &w, 1e-3, 50, EscapeDirection::Transverse, 1e-8)
            .unwrap();
        assert!(rep.steps <= 50);
        assert!(rep.final_value > 0.0);
        assert!(rep.legendrian_defect < 1e-6, "defect {}", rep.legendrian_defect);
        // Staying tangent to W never escapes.
        let control = an.escape_path(&pt, &w, 1e-3, 50, EscapeDirection::TangentToW, 1e-8);
        assert!(
            matches!(control, Err(ContactError::Trapped(50))),
            "control run was {control:?}"
        );
    }
}
