use std::collections::BTreeMap;

use proptest::prelude::*;
use qfaul::exactpoly::Family;
use qfaul::lgv::{
    enumerate_nonintersecting, family_weight, gh_config, lgv_determinant, weight_h,
    weight_h_subsets, ColumnWeights, Configuration, LatticePoint,
};
use qfaul::qcoeffs::{detsum_expansion, family_poly, invert_route_table, PolyMatrix};
use qfaul::LaurentPoly;

#[test]
fn inverse_route_matches_determinants() {
    for family in Family::ALL {
        let table = invert_route_table(family, 6).unwrap();
        for (&(m, k), p) in &table {
            assert_eq!(p, &family_poly(family, m, k).unwrap(), "{family}({m},{k})");
        }
    }
}

#[test]
fn salie_h_product_form_on_larger_configs() {
    for (m, k) in [(5, 2), (6, 2), (6, 4)] {
        for fam in enumerate_nonintersecting(&gh_config(m, k).unwrap()) {
            assert_eq!(weight_h(&fam), weight_h_subsets(&fam));
        }
    }
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-3i64..4, 1..3).prop_map(|c| LaurentPoly::from_coeffs(0, c))
}

fn matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(small_poly(), n * n)
        .prop_map(move |v| PolyMatrix::from_fn(n, |i, j| v[i * n + j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn detsum_expansion_matches_direct((a, b) in (1usize..=5).prop_flat_map(|n| (matrix(n), matrix(n)))) {
        prop_assert_eq!(detsum_expansion(&a, &b).unwrap(), a.add(&b).unwrap().det());
    }

    /// Staircase configurations `u_i = (s*i, -s*i)`, `v_i = u_i + (w, h - i*d)`
    /// with positive row offsets are nonpermutable.
    #[test]
    fn lgv_matches_brute_force(
        n in 1usize..=3,
        s in 2i64..=3,
        w in 1i64..=3,
        h in 0i64..=3,
        weights in prop::collection::vec(small_poly(), 12),
    ) {
        let starts: Vec<_> = (0..n as i64).map(|i| LatticePoint::new(s * i, -s * i)).collect();
        let ends: Vec<_> = (0..n as i64).map(|i| LatticePoint::new(s * i + w, h - i)).collect();
        let config = Configuration { starts, ends };
        let cols: BTreeMap<i64, LaurentPoly> =
            weights.into_iter().enumerate().map(|(x, p)| (x as i64, p)).collect();
        let scheme = ColumnWeights(cols);
        let brute: LaurentPoly = enumerate_nonintersecting(&config)
            .iter()
            .map(|f| family_weight(f, &scheme))
            .sum();
        prop_assert_eq!(lgv_determinant(&config, &scheme), brute);
    }
}
