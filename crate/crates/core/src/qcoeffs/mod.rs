//! The q-Faulhaber polynomials `P`, `Q` and q-Salie polynomials `G`, `H`
//! by determinant formulas, and the matrix-inverse relations that tie them
//! to the forward matrices of `h`, `c`, `g`, `d`.

mod inverse;
mod matrix;

pub use inverse::{
    build_forward_matrix, claimed_inverse_entry, default_sample_points, forward_inverse_at,
    inverse_pair_degree_bound, inverse_scale, invert_route, invert_route_table,
    verify_detinv_consistency, verify_dstr_vanishing, verify_inverse_pair,
};
pub use matrix::{detsum_expansion, PolyMatrix};

use crate::error::{Error, Result};
use crate::exactpoly::{Family, LaurentPoly};
use crate::homog::{c_poly, d_poly, g_poly, h_spec};

/// Entry `(i, j)` of the `k x k` determinant giving the family's `(m, k)`
/// polynomial.
pub fn det_entry(family: Family, m: i64, k: i64, i: i64, j: i64) -> LaurentPoly {
    match family {
        Family::P => {
            let r = i - j + 2;
            h_spec(m - k - i + 2 * j - 1, r, r, 1)
        }
        Family::Q => c_poly(m - k + i + 1, m - k + j),
        Family::G => g_poly(m - k + i + 1, m - k + j),
        Family::H => d_poly(m - k + i + 1, m - k + j),
    }
}

/// The `k x k` determinant matrix for `(m, k)`.
pub fn det_matrix(family: Family, m: i64, k: i64) -> PolyMatrix {
    PolyMatrix::from_fn(k.max(0) as usize, |i, j| {
        det_entry(family, m, k, i as i64, j as i64)
    })
}

/// The determinant formula without the `k < m` range check.
///
/// At `k = m >= 1` it evaluates to zero, which is what the power-sum
/// identities need for their `k = 0` summands.
pub fn family_det_unchecked(family: Family, m: i64, k: i64) -> LaurentPoly {
    assert!(k >= 0, "k must be nonnegative");
    det_matrix(family, m, k).det()
}

pub(crate) fn check_index(family: Family, m: i64, k: i64) -> Result<()> {
    if m < 0 || k < 0 || (k > 0 && k >= m) {
        return Err(Error::BadIndex {
            family: family.letter(),
            m,
            k,
        });
    }
    Ok(())
}

/// `X(m, k)` for any of the four families, determinant route.
///
/// Defined for `0 <= k < m` and for `k = 0` with any `m >= 0`.
pub fn family_poly(family: Family, m: u32, k: u32) -> Result<LaurentPoly> {
    check_index(family, m as i64, k as i64)?;
    Ok(family_det_unchecked(family, m as i64, k as i64))
}

pub fn faulhaber_p(m: u32, k: u32) -> Result<LaurentPoly> {
    family_poly(Family::P, m, k)
}

pub fn faulhaber_q(m: u32, k: u32) -> Result<LaurentPoly> {
    family_poly(Family::Q, m, k)
}

pub fn salie_g(m: u32, k: u32) -> Result<LaurentPoly> {
    family_poly(Family::G, m, k)
}

pub fn salie_h(m: u32, k: u32) -> Result<LaurentPoly> {
    family_poly(Family::H, m, k)
}
