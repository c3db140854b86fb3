//! Exact rational scalars and integer direction vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Parses an exact rational from `p` or `p/q` decimal notation.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".to_string());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid integer `{num}`"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid integer `{den}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(BigRational::new(n, d))
}

/// Renders a rational as `p` or `p/q` (canonical reduced form).
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Scales a rational vector to the primitive integer vector on the same ray.
///
/// The zero vector maps to all zeros. Positive rescalings of a vector share
/// one primitive image, so this is the canonical ray representative.
pub fn primitive_direction(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Rank of a rational matrix by exact Gaussian elimination.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows).find(|&r| !m[r][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][c].clone();
        for r in (rank + 1)..rows {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &inv;
            for cc in c..cols {
                let s = &f * &m[rank][cc];
                m[r][cc] -= s;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// 2-D cross product a.x * b.y - a.y * b.x.
pub fn cross(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// 2-D dot product.
pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1]
}

/// True if `a` and `b` are exactly antipodal rays (nonzero, opposite).
pub fn antipodal(a: &[BigInt], b: &[BigInt]) -> bool {
    !a.iter().all(Zero::is_zero) && cross(a, b).is_zero() && dot(a, b).is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(q("3"), BigRational::from(BigInt::from(3)));
        assert_eq!(q("-6/4"), q("-3/2"));
        assert_eq!(rational_to_string(&q("-6/4")), "-3/2");
        assert_eq!(rational_to_string(&q("5")), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn primitive_direction_is_ray_canonical() {
        let v = vec![q("2/3"), q("-4/3")];
        assert_eq!(
            primitive_direction(&v),
            vec![BigInt::from(1), BigInt::from(-2)]
        );
        let w = vec![q("10"), q("-20")];
        assert_eq!(primitive_direction(&v), primitive_direction(&w));
        let z = vec![q("0"), q("0")];
        assert_eq!(primitive_direction(&z), vec![BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn rank_of_rational_matrices() {
        let m = vec![
            vec![q("1"), q("2"), q("3")],
            vec![q("2"), q("4"), q("6")],
            vec![q("0"), q("1"), q("1")],
        ];
        assert_eq!(rational_rank(m), 2);
        assert_eq!(rational_rank(vec![vec![q("0"), q("0")]]), 0);
        assert_eq!(rational_rank(Vec::new()), 0);
    }

    #[test]
    fn cross_dot_antipodal() {
        let a = vec![BigInt::from(1), BigInt::from(0)];
        let b = vec![BigInt::from(0), BigInt::from(1)];
        let c = vec![BigInt::from(-2), BigInt::from(0)];
        assert_eq!(cross(&a, &b), BigInt::from(1));
        assert_eq!(dot(&a, &c), BigInt::from(-2));
        assert!(antipodal(&a, &c));
        assert!(!antipodal(&a, &b));
        assert!(!antipodal(&a, &a));
    }
}
