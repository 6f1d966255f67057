//! Complete homogeneous symmetric functions on the alphabets `{1}^r, {q^e}^s`
//! and the derived families `c`, `g`, `d`.
//!
//! Every function here returns a polynomial in `q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactpoly::LaurentPoly;

/// Number of degree-`d` monomials in `r` variables, `C(d+r-1, r-1)`, with
/// the empty alphabet contributing only the constant monomial.
fn multichoose(r: i64, d: i64) -> BigInt {
    debug_assert!(r >= 0 && d >= 0);
    if r == 0 {
        return if d == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    // C(d + r - 1, d)
    let mut acc = BigInt::one();
    for i in 0..d {
        acc = acc * BigInt::from(r + i) / BigInt::from(i + 1);
    }
    acc
}

/// `h_n({1}^r, {q^qexp}^s)`: the coefficient of `z^n` in
/// `1 / ((1 - z)^r (1 - q^qexp z)^s)`.
///
/// Zero when `n`, `r` or `s` is negative.
pub fn h_spec(n: i64, r: i64, s: i64, qexp: u32) -> LaurentPoly {
    if n < 0 || r < 0 || s < 0 {
        return LaurentPoly::zero();
    }
    assert!(qexp > 0, "h_spec: qexp must be positive");
    let e = qexp as usize;
    let mut coeffs = vec![BigInt::zero(); n as usize * e + 1];
    for j in 0..=n {
        let ones = multichoose(r, n - j);
        if ones.is_zero() {
            continue;
        }
        coeffs[j as usize * e] = ones * multichoose(s, j);
    }
    LaurentPoly::from_coeffs(0, coeffs)
}

/// `c_{k,m}(q) = h_{2m-k}({1,q^2}^{k-m+1}) + q h_{2m-k-1}({1,q^2}^{k-m+1})`.
pub fn c_poly(k: i64, m: i64) -> LaurentPoly {
    let r = k - m + 1;
    h_spec(2 * m - k, r, r, 2) + h_spec(2 * m - k - 1, r, r, 2).shift(1)
}

/// `g_{k,m}(q) = h_{2m-k}({1}^{k-m+1},{q}^{k-m}) + h_{2m-k}({1}^{k-m},{q}^{k-m+1})`.
pub fn g_poly(k: i64, m: i64) -> LaurentPoly {
    let n = 2 * m - k;
    h_spec(n, k - m + 1, k - m, 1) + h_spec(n, k - m, k - m + 1, 1)
}

/// `d_{k,m}(q) = g_{k,m}(q^2) + q g_{k-1,m-1}(q^2)`.
pub fn d_poly(k: i64, m: i64) -> LaurentPoly {
    g_poly(k, m).stretch(2) + g_poly(k - 1, m - 1).stretch(2).shift(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, BigRational};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c.iter().copied())
    }

    /// Oracle: multiply truncated geometric series `sum_j x^j z^j` for each
    /// letter of the alphabet and read off the `z^n` coefficient.
    fn h_by_products(n: i64, r: i64, s: i64, qexp: u32) -> LaurentPoly {
        if n < 0 || r < 0 || s < 0 {
            return LaurentPoly::zero();
        }
        let n = n as usize;
        let letters: Vec<LaurentPoly> = std::iter::repeat_n(LaurentPoly::one(), r as usize)
            .chain(std::iter::repeat_n(
                LaurentPoly::monomial(1, qexp as i64),
                s as usize,
            ))
            .collect();
        // series[i] = coefficient of z^i
        let mut series = vec![LaurentPoly::zero(); n + 1];
        series[0] = LaurentPoly::one();
        for x in &letters {
            let mut next = vec![LaurentPoly::zero(); n + 1];
            for (i, a) in series.iter().enumerate() {
                for j in 0..=(n - i) {
                    next[i + j] += a * x.pow(j as u32);
                }
            }
            series = next;
        }
        series.swap_remove(n)
    }

    #[test]
    fn examples() {
        assert_eq!(h_spec(1, 2, 2, 1), p(&[2, 2]));
        assert_eq!(h_spec(0, 3, 1, 1), LaurentPoly::one());
        assert!(h_spec(2, -1, 3, 1).is_zero());
        assert_eq!(h_spec(3, 2, 1, 1), p(&[4, 3, 2, 1]));
        assert_eq!(h_spec(0, 0, 0, 1), LaurentPoly::one());
        assert!(h_spec(2, 0, 0, 1).is_zero());
        assert_eq!(h_spec(2, 0, 1, 2), p(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn closed_form_matches_products() {
        for n in -1..=6 {
            for r in -1..=4 {
                for s in -1..=4 {
                    for e in 1..=2 {
                        assert_eq!(
                            h_spec(n, r, s, e),
                            h_by_products(n, r, s, e),
                            "{n} {r} {s} {e}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn c_examples() {
        assert_eq!(c_poly(3, 2), p(&[2, 1, 2]));
        // h_1({1,q^2}) + q h_0
        assert_eq!(c_poly(1, 1), p(&[1, 1, 1]));
        assert!(c_poly(2, 0).is_zero());
        // diagonal: [2k+1]
        assert_eq!(c_poly(2, 2), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_poly(2, 1), LaurentPoly::constant(2));
        assert!(g_poly(1, 0).is_zero());
        assert_eq!(g_poly(3, 2), p(&[3, 3]));
        // h_1({1}) + h_1({q})
        assert_eq!(g_poly(1, 1), p(&[1, 1]));
        assert_eq!(g_poly(0, 0), LaurentPoly::constant(2));
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_poly(2, 1), LaurentPoly::constant(2));
        assert_eq!(d_poly(3, 2), p(&[3, 2, 3]));
        // g(1,1)(q^2) + q g(0,0)(q^2) = 1 + q^2 + 2q
        assert_eq!(d_poly(1, 1), p(&[1, 2, 1]));
        // d(3,2) built by stretching g(3,2) and g(2,1)
        assert_eq!(
            d_poly(3, 2),
            g_poly(3, 2).stretch(2) + g_poly(2, 1).stretch(2).shift(1)
        );
    }

    #[test]
    fn recurrences() {
        for e in 1..=2u32 {
            let qe = LaurentPoly::monomial(1, e as i64);
            for n in 0..=8 {
                for r in 0..=8 {
                    for s in 0..=8 {
                        let h = h_spec(n, r, s, e);
                        if r >= 1 {
                            assert_eq!(h, h_spec(n, r - 1, s, e) + h_spec(n - 1, r, s, e));
                        }
                        if s >= 1 {
                            assert_eq!(h, h_spec(n, r, s - 1, e) + &qe * h_spec(n - 1, r, s, e));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degree_and_palindromes() {
        for n in 0..=10 {
            for r in 0..=5 {
                for s in 1..=5 {
                    assert_eq!(h_spec(n, r, s, 1).max_exp(), Some(n));
                }
                assert!(h_spec(n, r, r, 1).is_palindromic());
            }
        }
    }

    #[test]
    fn generating_function_series() {
        // 1/((1-z)^r (1-q0 z)^s) expanded as a rational power series.
        let points = [rat(2, 1), rat(-1, 3), rat(5, 7)];
        let order = 12usize;
        for q0 in &points {
            for r in 0..=4 {
                for s in 0..=4 {
                    let mut series = vec![BigRational::zero(); order + 1];
                    series[0] = BigRational::one();
                    let mut mul_geometric = |x: &BigRational| {
                        // multiply by 1/(1 - x z): prefix recurrence
                        for i in 1..=order {
                            let prev = series[i - 1].clone();
                            series[i] += prev * x;
                        }
                    };
                    for _ in 0..r {
                        mul_geometric(&BigRational::one());
                    }
                    for _ in 0..s {
                        mul_geometric(q0);
                    }
                    for (n, expected) in series.iter().enumerate() {
                        assert_eq!(&h_spec(n as i64, r, s, 1).eval(q0).unwrap(), expected);
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn eval_at_one_counts_monomials(n in 0i64..12, r in 0i64..6, s in 0i64..6) {
            let count = h_spec(n, r, s, 1).eval_at_one();
            prop_assert_eq!(count, multichoose(r + s, n));
        }
    }
}
