use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Zero};

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Coefficients (ascending powers) of the unique polynomial of degree
/// `< xs.len()` through the points `(xs[i], ys[i])`.
///
/// Newton divided differences, then expansion to the monomial basis.
/// Panics if the abscissae are not pairwise distinct or the slices differ
/// in length.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(xs.len(), ys.len(), "interpolate: length mismatch");
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let den = &xs[i] - &xs[i - level];
            assert!(!den.is_zero(), "interpolate: repeated abscissa");
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    // Horner on the Newton form: p = dd[n-1]; p = p*(x - xs[i]) + dd[i].
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        coeffs.push(BigRational::zero());
    }
    coeffs
}

pub(crate) fn pow_rat(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        BigRational::one() / num_traits::pow(x.clone(), (-e) as usize)
    }
}
