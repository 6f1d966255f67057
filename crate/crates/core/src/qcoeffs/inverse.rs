use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::matrix::PolyMatrix;
use super::{check_index, family_det_unchecked, family_poly};
use crate::error::{Error, Result};
use crate::exactpoly::{interpolate, q_fact, BigRational, Family, LaurentPoly};
use crate::homog::{c_poly, d_poly, g_poly, h_spec};

type RatMatrix = Vec<Vec<BigRational>>;

/// Forward-matrix entry at matrix indices `(k, m)`: `h_{2m-k}({1,q}^{k-m+1})`
/// for `P`, and `c_{k,m}`, `g_{k,m}`, `d_{k,m}` for the others.
fn forward_entry(family: Family, k: i64, m: i64) -> LaurentPoly {
    match family {
        Family::P => {
            let r = k - m + 1;
            h_spec(2 * m - k, r, r, 1)
        }
        Family::Q => c_poly(k, m),
        Family::G => g_poly(k, m),
        Family::H => d_poly(k, m),
    }
}

/// The lower-triangular forward matrix with matrix indices running over
/// `0..=n` for `P` and `1..=n` for `Q`, `G`, `H`.
pub fn build_forward_matrix(family: Family, n: u32) -> PolyMatrix {
    let base = family.first_index();
    let dim = (n as i64 - base + 1) as usize;
    PolyMatrix::from_fn(dim, |i, j| {
        forward_entry(family, i as i64 + base, j as i64 + base)
    })
}

fn pos(family: Family, index: i64) -> usize {
    (index - family.first_index()) as usize
}

fn product(factors: impl Iterator<Item = LaurentPoly>) -> LaurentPoly {
    factors.product()
}

/// `(num, den)` such that the inverse matrix entry at matrix indices
/// `(k, m)`, `k >= m`, is `(-1)^(k-m) X_{k,k-m}(q) num / den`.
pub fn inverse_scale(family: Family, k: i64, m: i64) -> (LaurentPoly, LaurentPoly) {
    assert!(k >= m, "inverse_scale: entry above the diagonal");
    let q = |e: i64| LaurentPoly::monomial(1, e);
    let one = LaurentPoly::one();
    let span = 0..=(k - m);
    match family {
        Family::P => {
            let den = q_fact((k + 1) as u32, 1)
                .div_exact(&q_fact(m as u32, 1))
                .expect("[m]! divides [k+1]!");
            (one, den)
        }
        Family::Q => {
            let num = (&one - &q(1)).pow((k - m + 1) as u32);
            let den = product(span.map(|i| &one - &q(2 * k - 2 * i + 1)));
            (num, den)
        }
        Family::G => (one.clone(), product(span.map(|i| &one + &q(k - i)))),
        Family::H => {
            let den = (&one + &q(1)).pow((k - m + 1) as u32)
                * product(span.map(|i| &one + &q(2 * k - 2 * i - 1)));
            (one, den)
        }
    }
}

fn sign(e: i64) -> BigRational {
    if e % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn nonzero_at(p: &LaurentPoly, x: &BigRational) -> Result<BigRational> {
    let v = p.eval(x)?;
    if v.is_zero() {
        return Err(Error::SingularSample(x.to_string()));
    }
    Ok(v)
}

/// The claimed inverse entry at matrix indices `(k, m)` evaluated at `x`,
/// built from the determinant-route polynomial.
pub fn claimed_inverse_entry(
    family: Family,
    k: i64,
    m: i64,
    x: &BigRational,
) -> Result<BigRational> {
    if k < m {
        return Ok(BigRational::zero());
    }
    let (num, den) = inverse_scale(family, k, m);
    let den = nonzero_at(&den, x)?;
    let poly = family_det_unchecked(family, k, k - m);
    Ok(sign(k - m) * poly.eval(x)? * num.eval(x)? / den)
}

/// Degree bound for the identity `A * B = I` after each product entry
/// `(r, c)` is multiplied by all denominators of column `c` of `B`.
///
/// Agreement at more points than this bound proves the polynomial identity.
pub fn inverse_pair_degree_bound(family: Family, n: u32) -> usize {
    let a = build_forward_matrix(family, n);
    let base = family.first_index();
    let dim = a.dim();
    let deg = |p: &LaurentPoly| p.max_exp().unwrap_or(0).max(0) as usize;
    let mut bound = 0usize;
    for c in 0..dim {
        let col: Vec<(usize, usize)> = (c..dim)
            .map(|j| {
                let (k, m) = (j as i64 + base, c as i64 + base);
                let (num, den) = inverse_scale(family, k, m);
                let numer = family_det_unchecked(family, k, k - m) * num;
                (deg(&numer), deg(&den))
            })
            .collect();
        for r in c..dim {
            let den_total: usize = col[..=r - c].iter().map(|&(_, d)| d).sum();
            let widest = (c..=r)
                .map(|j| deg(&a[(r, j)]) + col[j - c].0)
                .max()
                .unwrap_or(0);
            bound = bound.max(den_total + widest);
        }
    }
    bound
}

/// Distinct positive rationals different from 1, in order of increasing
/// numerator + denominator: 2, 3, 4, 3/2, 5, 6, 5/2, 4/3, ...
pub fn default_sample_points(count: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(count);
    let mut height = 3i64;
    while out.len() < count {
        for den in 1..height {
            let num = height - den;
            if num > den && num_integer::gcd(num, den) == 1 {
                out.push(crate::exactpoly::rat(num, den));
                if out.len() == count {
                    break;
                }
            }
        }
        height += 1;
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn mat_mul_is_identity(a: &RatMatrix, b: &RatMatrix) -> bool {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        for j in 0..n {
            let mut s = BigRational::zero();
            for (l, ail) in row.iter().enumerate() {
                if !ail.is_zero() && !b[l][j].is_zero() {
                    s += ail * &b[l][j];
                }
            }
            let expected = if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            if s != expected {
                return false;
            }
        }
    }
    true
}

/// Checks that the forward matrix of size `n` times the claimed inverse is
/// the identity at every sample point.
///
/// Sample points are values of the family's own variable. Pass at least
/// `inverse_pair_degree_bound(family, n) + 1` of them for the check to be a
/// proof of the polynomial identity.
pub fn verify_inverse_pair(family: Family, n: u32, points: &[BigRational]) -> Result<bool> {
    let a = build_forward_matrix(family, n);
    let dim = a.dim();
    let base = family.first_index();
    // numerator and denominator polynomials of the claimed inverse
    let mut claimed: Vec<Vec<Option<(LaurentPoly, LaurentPoly)>>> = vec![vec![None; dim]; dim];
    for (r, row) in claimed.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate().take(r + 1) {
            let (k, m) = (r as i64 + base, c as i64 + base);
            let (num, den) = inverse_scale(family, k, m);
            let mut numer = family_det_unchecked(family, k, k - m) * num;
            if (k - m) % 2 == 1 {
                numer = -numer;
            }
            *slot = Some((numer, den));
        }
    }
    for x in points {
        let a_at = a.eval(x)?;
        let mut b_at = vec![vec![BigRational::zero(); dim]; dim];
        for r in 0..dim {
            for c in 0..dim {
                if let Some((numer, den)) = &claimed[r][c] {
                    b_at[r][c] = numer.eval(x)? / nonzero_at(den, x)?;
                }
            }
        }
        if !mat_mul_is_identity(&a_at, &b_at) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Inverse of the forward matrix of size `n` at `x`, by forward
/// substitution over the rationals.
pub fn forward_inverse_at(family: Family, n: u32, x: &BigRational) -> Result<RatMatrix> {
    let a = build_forward_matrix(family, n).eval(x)?;
    lower_triangular_inverse(&a, x)
}

fn lower_triangular_inverse(a: &RatMatrix, x: &BigRational) -> Result<RatMatrix> {
    let n = a.len();
    let mut b = vec![vec![BigRational::zero(); n]; n];
    for c in 0..n {
        if a[c][c].is_zero() {
            return Err(Error::SingularSample(x.to_string()));
        }
        b[c][c] = BigRational::one() / &a[c][c];
        for r in c + 1..n {
            if a[r][r].is_zero() {
                return Err(Error::SingularSample(x.to_string()));
            }
            let mut s = BigRational::zero();
            for j in c..r {
                if !a[r][j].is_zero() {
                    s += &a[r][j] * &b[j][c];
                }
            }
            b[r][c] = -s / &a[r][r];
        }
    }
    Ok(b)
}

/// Rows and columns (matrix positions) of the minor that the inverse entry
/// at positions `(r, c)` is proportional to.
fn closed_form_minor(a: &PolyMatrix, r: usize, c: usize) -> PolyMatrix {
    let rows: Vec<usize> = (c + 1..=r).collect();
    let cols: Vec<usize> = (c..r).collect();
    a.submatrix(&rows, &cols)
}

fn minor_degree_bound(minor: &PolyMatrix) -> usize {
    (0..minor.dim())
        .map(|i| {
            (0..minor.dim())
                .filter_map(|j| minor[(i, j)].max_exp())
                .max()
                .unwrap_or(0)
                .max(0) as usize
        })
        .sum()
}

fn check_matrix_index(family: Family, m: u32, k: u32) -> Result<()> {
    check_index(family, m as i64, k as i64)?;
    if (m as i64) < family.first_index() {
        return Err(Error::BadIndex {
            family: family.letter(),
            m: m as i64,
            k: k as i64,
        });
    }
    Ok(())
}

/// Recovers `X(m, k)` for every `0 <= k < m <= max_m` from the inverse of the
/// forward matrix, computed by rational forward substitution at enough
/// points and interpolated.
pub fn invert_route_table(family: Family, max_m: u32) -> Result<BTreeMap<(u32, u32), LaurentPoly>> {
    let a = build_forward_matrix(family, max_m);
    let mut jobs = Vec::new();
    for m in family.first_index().max(1) as u32..=max_m {
        for k in 0..m {
            let (r, c) = (pos(family, m as i64), pos(family, (m - k) as i64));
            let bound = minor_degree_bound(&closed_form_minor(&a, r, c));
            let (num, den) = inverse_scale(family, m as i64, (m - k) as i64);
            jobs.push((m, k, r, c, bound, num, den));
        }
    }
    let needed = jobs.iter().map(|j| j.4).max().unwrap_or(0) + 1;
    let points = default_sample_points(needed);
    let mut inverses = Vec::with_capacity(points.len());
    for x in &points {
        inverses.push(lower_triangular_inverse(&a.eval(x)?, x)?);
    }
    let mut out = BTreeMap::new();
    if family == Family::P {
        out.insert((0, 0), LaurentPoly::one());
    }
    for (m, k, r, c, bound, num, den) in jobs {
        let xs = &points[..=bound];
        let mut ys = Vec::with_capacity(xs.len());
        for (x, b) in xs.iter().zip(&inverses) {
            ys.push(sign(k as i64) * &b[r][c] * den.eval(x)? / nonzero_at(&num, x)?);
        }
        let coeffs = interpolate(xs, &ys);
        if coeffs.iter().any(|c| !c.is_integer()) {
            return Err(Error::Disagreement(format!(
                "{family}({m},{k}) from the inverse matrix is not an integer polynomial"
            )));
        }
        let poly = LaurentPoly::from_coeffs(0, coeffs.into_iter().map(|c| c.to_integer()));
        out.insert((m, k), poly);
    }
    Ok(out)
}

/// `X(m, k)` via the inverse of the forward matrix (see [`invert_route_table`]).
pub fn invert_route(family: Family, m: u32, k: u32) -> Result<LaurentPoly> {
    check_matrix_index(family, m, k)?;
    let table = invert_route_table(family, m)?;
    Ok(table[&(m, k)].clone())
}

/// Checks the closed form of an inverse entry of a lower triangular matrix,
/// `B(n,c) = (-1)^(n-c) / (A(c,c)...A(n,n)) * det(A(c+i+1, c+j))`, against
/// forward substitution, at the entry that carries `X(m, k)`.
pub fn verify_detinv_consistency(
    family: Family,
    m: u32,
    k: u32,
    points: &[BigRational],
) -> Result<bool> {
    check_matrix_index(family, m, k)?;
    let a = build_forward_matrix(family, m);
    let (r, c) = (pos(family, m as i64), pos(family, (m - k) as i64));
    let minor_det = closed_form_minor(&a, r, c).det();
    let diag: LaurentPoly = (c..=r).map(|j| a[(j, j)].clone()).product();
    for x in points {
        let b = lower_triangular_inverse(&a.eval(x)?, x)?;
        let closed = sign((r - c) as i64) * minor_det.eval(x)? / nonzero_at(&diag, x)?;
        if b[r][c] != closed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates at `t0`
///
/// `sum_{k=0}^{m-1} (-1)^(m-k) d(m,m-k)(t) H(m-k,m-k-1)(t)
///     / ((1+t)^(m-k) prod_{i=0}^{m-k-1} (1 + t^(2(m-k-i)-1)))`
///
/// and reports whether it is exactly zero.
pub fn verify_dstr_vanishing(m: u32, t0: &BigRational) -> Result<bool> {
    assert!(m >= 2, "verify_dstr_vanishing needs m >= 2");
    let m = m as i64;
    let one = LaurentPoly::one();
    let mut total = BigRational::zero();
    for k in 0..m {
        let j = m - k;
        let h = family_poly(Family::H, j as u32, (j - 1) as u32)?;
        let den = (&one + &LaurentPoly::var()).pow(j as u32)
            * product((0..j).map(|i| &one + &LaurentPoly::monomial(1, 2 * (j - i) - 1)));
        let term = d_poly(m, j).eval(t0)? * h.eval(t0)? / nonzero_at(&den, t0)?;
        total += sign(j) * term;
    }
    Ok(total.is_zero())
}
