//! Configurations Λ = (λ₁, …, λₙ) of exact rational k-vectors: parsing,
//! validation (weak hyperbolicity, integer kernel bases), and derived
//! configurations (remove / duplicate / complexify).

use crate::lp;
use crate::rat;
use crate::snf;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// A configuration of n exact rational k-vectors with distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub k: usize,
    pub vectors: Vec<Vec<BigRational>>,
    pub labels: Vec<String>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("coordinate index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid configuration: {0}")]
    Invariant(String),
}

impl Configuration {
    /// Validates the structural invariants (vector lengths, n ≥ 1, k ≥ 1,
    /// distinct labels) and constructs the configuration.
    pub fn new(
        k: usize,
        vectors: Vec<Vec<BigRational>>,
        labels: Vec<String>,
    ) -> Result<Self, ConfigError> {
        if k == 0 {
            return Err(ConfigError::Invariant("k must be positive".into()));
        }
        if vectors.is_empty() {
            return Err(ConfigError::Invariant("need at least one vector".into()));
        }
        if vectors.iter().any(|v| v.len() != k) {
            return Err(ConfigError::Invariant(format!(
                "every vector must have exactly {k} coordinates"
            )));
        }
        if labels.len() != vectors.len() {
            return Err(ConfigError::Invariant("one label per vector required".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(ConfigError::Invariant(format!("duplicate label `{l}`")));
            }
        }
        Ok(Configuration { k, vectors, labels })
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    /// Primitive integer ray representative of each λᵢ.
    pub fn directions(&self) -> Vec<Vec<BigInt>> {
        self.vectors.iter().map(|v| rat::primitive_direction(v)).collect()
    }

    /// Groups coordinates whose vectors span the same ray: returns
    /// (class id per coordinate, members per class). Class ids follow first
    /// appearance order.
    pub fn ray_classes(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let dirs = self.directions();
        let mut class_of: Vec<usize> = Vec::with_capacity(dirs.len());
        let mut reps: Vec<&Vec<BigInt>> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (i, d) in dirs.iter().enumerate() {
            match reps.iter().position(|r| *r == d) {
                Some(c) => {
                    class_of.push(c);
                    members[c].push(i);
                }
                None => {
                    class_of.push(reps.len());
                    reps.push(d);
                    members.push(vec![i]);
                }
            }
        }
        (class_of, members)
    }
}

/// Parses the configuration file format: line 1 `k n`; then n vector lines
/// (`a+bi` Gaussian shorthand allowed when k = 2, otherwise k whitespace-
/// separated rationals); `#` starts a comment line; an optional `label=`
/// prefix names a coordinate.
pub fn parse_configuration(text: &str) -> Result<Configuration, ConfigError> {
    let err = |line: usize, msg: String| ConfigError::Parse { line, msg };
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = content
        .next()
        .ok_or_else(|| err(0, "empty configuration file".into()))?;
    let mut it = header.split_whitespace();
    let k: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&k| k >= 1)
        .ok_or_else(|| err(hline, "header must be `k n` with positive integers".into()))?;
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| err(hline, "header must be `k n` with positive integers".into()))?;
    if it.next().is_some() {
        return Err(err(hline, "header must be exactly `k n`".into()));
    }

    let mut vectors = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for idx in 0..n {
        let (lno, line) = content
            .next()
            .ok_or_else(|| err(hline, format!("expected {n} vector lines, found {idx}")))?;
        let (label, body) = match line.split_once('=') {
            Some((l, b)) => {
                let l = l.trim();
                if l.is_empty() || l.contains(char::is_whitespace) {
                    return Err(err(lno, format!("invalid label `{l}`")));
                }
                (l.to_string(), b.trim())
            }
            None => (format!("x{}", idx + 1), line),
        };
        let vector = parse_vector(body, k).map_err(|msg| err(lno, msg))?;
        vectors.push(vector);
        labels.push(label);
    }
    if let Some((lno, _)) = content.next() {
        return Err(err(lno, format!("more than {n} vector lines")));
    }
    Configuration::new(k, vectors, labels).map_err(|e| match e {
        ConfigError::Invariant(msg) => err(hline, msg),
        other => other,
    })
}

fn parse_vector(body: &str, k: usize) -> Result<Vec<BigRational>, String> {
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if k == 2 && tokens.len() == 1 && tokens[0].ends_with('i') {
        return parse_gaussian(tokens[0]);
    }
    if tokens.len() != k {
        return Err(format!("expected {k} rationals, found {}", tokens.len()));
    }
    tokens.iter().map(|t| rat::parse_rational(t)).collect()
}

/// Parses `a+bi` / `a-bi` Gaussian shorthand into the vector (a, b).
fn parse_gaussian(token: &str) -> Result<Vec<BigRational>, String> {
    let body = token
        .strip_suffix('i')
        .ok_or_else(|| format!("`{token}` is not of the form a+bi"))?;
    // Split at the last sign that is not the leading sign of the real part.
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, ch)| *ch == '+' || *ch == '-')
        .map(|(i, _)| i)
        .last()
        .ok_or_else(|| format!("`{token}` is not of the form a+bi"))?;
    let re = &body[..split];
    let im_sign = &body[split..split + 1];
    let im_body = &body[split + 1..];
    let re = rat::parse_rational(re)?;
    let im_mag = rat::parse_rational(if im_body.is_empty() { "1" } else { im_body })?;
    let im = if im_sign == "-" { -im_mag } else { im_mag };
    Ok(vec![re, im])
}

/// Weak hyperbolicity verdict. A violation carries the minimal witness
/// subset (smallest size, then lexicographically smallest; 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WhReport {
    Ok,
    Violated { witness: Vec<usize> },
}

impl WhReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, WhReport::Ok)
    }
}

/// Checks weak hyperbolicity: for every J with |J| ≤ k, the origin must
/// avoid conv{λᵢ : i ∈ J}. Each decision is an exact LP.
pub fn check_weak_hyperbolicity(cfg: &Configuration) -> WhReport {
    let n = cfg.n();
    for size in 1..=cfg.k.min(n) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let vecs: Vec<&[BigRational]> =
                subset.iter().map(|&i| cfg.vectors[i].as_slice()).collect();
            if lp::origin_in_hull(&vecs) {
                return WhReport::Violated { witness: subset };
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    WhReport::Ok
}

/// Advances a sorted index combination in lexicographic order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Integer kernel report for the system {Σ sᵢ λᵢ = 0, Σ sᵢ = 0}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionKReport {
    pub holds: bool,
    pub basis: Vec<Vec<BigInt>>,
    pub solution_dim: usize,
}

/// Computes a saturated integer basis of the solution lattice of
/// {Σ sᵢ λᵢ = 0, Σ sᵢ = 0} (denominators cleared row-wise; Smith normal
/// form transform). `holds` records the re-checked saturation certificate:
/// basis vectors solve the system exactly and their matrix has all invariant
/// factors 1.
pub fn check_condition_k(cfg: &Configuration) -> ConditionKReport {
    let n = cfg.n();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(cfg.k + 1);
    for r in 0..cfg.k {
        let mut lcm = BigInt::one();
        for v in &cfg.vectors {
            lcm = lcm.lcm(v[r].denom());
        }
        m.push(
            cfg.vectors
                .iter()
                .map(|v| v[r].numer() * (&lcm / v[r].denom()))
                .collect(),
        );
    }
    m.push(vec![BigInt::one(); n]);

    let basis = snf::integer_kernel_basis(&m);
    let solution_dim = basis.len();

    let mut holds = true;
    for s in &basis {
        for row in &m {
            let dot: BigInt = row.iter().zip(s).map(|(a, b)| a * b).sum();
            if !dot.is_zero() {
                holds = false;
            }
        }
    }
    if !basis.is_empty() {
        let dense: Vec<Vec<BigInt>> = basis.clone();
        let res = snf::snf_dense(dense);
        if res.rank != basis.len() || !res.nontrivial().is_empty() {
            holds = false;
        }
    }
    ConditionKReport { holds, basis, solution_dim }
}

/// Configuration derivations (0-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeriveAction {
    /// Delete coordinate i.
    Remove(usize),
    /// Insert a copy of λᵢ directly after position i.
    Duplicate(usize),
    /// Duplicate every coordinate once, in place: the real model of the
    /// complex variety, since each |zᵢ|² = xᵢ² + yᵢ² doubles the coordinate.
    Complexify,
}

pub fn derive(cfg: &Configuration, action: DeriveAction) -> Result<Configuration, ConfigError> {
    let n = cfg.n();
    let fresh = |labels: &[String], base: &str| {
        let mut cand = format!("{base}'");
        while labels.iter().any(|l| l == &cand) {
            cand.push('\'');
        }
        cand
    };
    match action {
        DeriveAction::Remove(i) => {
            if i >= n {
                return Err(ConfigError::IndexOutOfRange { index: i + 1, n });
            }
            if n == 1 {
                return Err(ConfigError::Invariant("cannot remove the only coordinate".into()));
            }
            let mut vectors = cfg.vectors.clone();
            let mut labels = cfg.labels.clone();
            vectors.remove(i);
            labels.remove(i);
            Configuration::new(cfg.k, vectors, labels)
        }
        DeriveAction::Duplicate(i) => {
            if i >= n {
                return Err(ConfigError::IndexOutOfRange { index: i + 1, n });
            }
            let mut vectors = cfg.vectors.clone();
            let mut labels = cfg.labels.clone();
            vectors.insert(i + 1, cfg.vectors[i].clone());
            labels.insert(i + 1, fresh(&cfg.labels, &cfg.labels[i]));
            Configuration::new(cfg.k, vectors, labels)
        }
        DeriveAction::Complexify => {
            let mut vectors = Vec::with_capacity(2 * n);
            let mut labels = Vec::with_capacity(2 * n);
            for (v, l) in cfg.vectors.iter().zip(&cfg.labels) {
                vectors.push(v.clone());
                vectors.push(v.clone());
                labels.push(l.clone());
                labels.push(fresh(&cfg.labels, l));
            }
            Configuration::new(cfg.k, vectors, labels)
        }
    }
}
