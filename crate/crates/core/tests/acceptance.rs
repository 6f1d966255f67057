//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.
//!
//! Run with `cargo test --test acceptance`; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qfaul::exactpoly::{rat, Family};
use qfaul::identities::{
    classical_check, verify_lemma1, verify_lemma2, verify_theorem1, Lemma2Identity,
    Theorem1Identity,
};
use qfaul::lgv::{enumerate_nonintersecting, gh_config, lgv_brute, lgv_det, weight_g, weight_h};
use qfaul::qcoeffs::{
    default_sample_points, family_poly, inverse_pair_degree_bound, invert_route_table,
    verify_dstr_vanishing, verify_inverse_pair,
};
use qfaul::LaurentPoly;

const TABLE_LIMIT: Duration = Duration::from_secs(1);
const ENUMERATION_LIMIT: Duration = Duration::from_secs(1);
const ROUTES_LIMIT: Duration = Duration::from_secs(120);

/// `c * prod(factors)`, each factor an ascending coefficient list in `q`.
fn prod(c: i64, factors: &[&[i64]]) -> LaurentPoly {
    factors.iter().fold(LaurentPoly::constant(c), |acc, f| {
        acc * LaurentPoly::from_coeffs(0, f.iter().copied())
    })
}

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

/// Reference values with `k >= 1`, as `(family, m, k, value)`.
fn table_fixtures() -> Vec<(Family, u32, u32, LaurentPoly)> {
    use Family::*;
    let p41 = prod(1, &[&[3, 4, 3]]);
    let p42 = prod(1, &[&[1, 1], &[5, 8, 5]]);
    let p52 = prod(1, &[&[1, 1], &[9, 19, 29, 19, 9]]);
    let p53 = prod(2, &[&[1, 1], &[1, 1], &[1, 1, 1], &[7, 11, 7]]);
    let q42 = prod(1, &[&[1, 1, 1], &[5, 1, 9, 1, 5]]);
    let g42 = prod(2, &[&[1, 1], &[5, 7, 5]]);
    let g53 = prod(5, &[&[1, 1], &[1, 1], &[7, 14, 20, 14, 7]]);
    let h42 = prod(1, &[&[10, 15, 30, 26, 30, 15, 10]]);
    vec![
        (P, 2, 1, prod(1, &[])),
        (P, 3, 1, prod(2, &[&[1, 1]])),
        (P, 3, 2, prod(2, &[&[1, 1]])),
        (P, 4, 1, p41),
        (P, 4, 2, p42.clone()),
        (P, 4, 3, p42),
        (P, 5, 1, prod(2, &[&[1, 1], &[2, 1, 2]])),
        (P, 5, 2, p52),
        (P, 5, 3, p53.clone()),
        (P, 5, 4, p53),
        (Q, 2, 1, prod(1, &[])),
        (Q, 3, 1, prod(1, &[&[2, 1, 2]])),
        (Q, 3, 2, prod(1, &[&[2, 1, 2]])),
        (Q, 4, 1, prod(1, &[&[3, 2, 4, 2, 3]])),
        (Q, 4, 2, q42.clone()),
        (Q, 4, 3, q42),
        (G, 2, 1, prod(2, &[])),
        (G, 3, 1, prod(3, &[&[1, 1]])),
        (G, 3, 2, prod(6, &[&[1, 1]])),
        (G, 4, 1, prod(4, &[&[1, 1, 1]])),
        (G, 4, 2, g42.clone()),
        (G, 4, 3, g42.scale(&2.into())),
        (G, 5, 1, prod(5, &[&[1, 1], &[1, 0, 1]])),
        (G, 5, 2, prod(5, &[&[1, 1], &[3, 4, 8, 4, 3]])),
        (G, 5, 3, g53.clone()),
        (G, 5, 4, g53.scale(&2.into())),
        (H, 2, 1, prod(2, &[])),
        (H, 3, 1, prod(1, &[&[3, 2, 3]])),
        (H, 3, 2, prod(2, &[&[3, 2, 3]])),
        (H, 4, 1, prod(1, &[&[4, 3, 4, 3, 4]])),
        (H, 4, 2, h42.clone()),
        (H, 4, 3, h42.scale(&2.into())),
    ]
}

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

fn c1_tables() -> Outcome {
    let start = Instant::now();
    let fixtures = table_fixtures();
    let mut bad = Vec::new();
    for (f, m, k, want) in &fixtures {
        if family_poly(*f, *m, *k).as_ref() != Ok(want) {
            bad.push(format!("{f}({m},{k})"));
        }
    }
    let mut rows_ok = 0;
    for (f, top) in [
        (Family::P, 5),
        (Family::Q, 4),
        (Family::G, 5),
        (Family::H, 4),
    ] {
        let lo = if f == Family::P { 0 } else { 1 };
        for m in lo..=top {
            if family_poly(f, m, 0).map(|p| p.is_one()) == Ok(true) {
                rows_ok += 1;
            } else {
                bad.push(format!("{f}({m},0)"));
            }
        }
    }
    let el = start.elapsed();
    outcome(
        bad.is_empty() && within(el, TABLE_LIMIT),
        format!(
            "{} entries with k>=1 and {rows_ok} k=0 entries, mismatches {bad:?}, {el:.2?} (limit {TABLE_LIMIT:?})",
            fixtures.len()
        ),
    )
}

fn g42_family_weights() -> Vec<LaurentPoly> {
    let c = |v: &[i64]| prod(1, &[v]);
    vec![
        c(&[1, 1, 1, 1]),
        c(&[0, 2, 2]),
        c(&[1, 2, 1]),
        c(&[0, 4]),
        c(&[2, 0, 2]),
        c(&[0, 1, 2, 1]),
        c(&[0, 0, 4]),
        c(&[0, 2, 0, 2]),
        c(&[2, 2]),
        c(&[2, 2]),
        c(&[2, 2]),
        c(&[0, 2, 2]),
        c(&[0, 2, 2]),
        c(&[0, 2, 2]),
        c(&[0, 0, 2, 2]),
        c(&[0, 0, 2, 2]),
        c(&[0, 0, 2, 2]),
    ]
}

fn h42_family_weights() -> Vec<LaurentPoly> {
    let a = prod(1, &[&[1, 1]]);
    let b = prod(1, &[&[1, 0, 1]]);
    let c = prod(1, &[&[1, 0, 0, 1]]);
    let two = LaurentPoly::constant(2);
    vec![
        a.pow(3) * &c,
        &two * q(2) * a.pow(2),
        a.pow(4),
        &two * q(1) * a.pow(2),
        &two * &a * &c,
        q(2) * a.pow(4),
        &two * q(3) * a.pow(2),
        &two * q(2) * &a * &c,
        &two * a.pow(2),
        &two * &b,
        &two * &b,
        &two * q(2) * a.pow(2),
        &two * q(2) * &b,
        &two * q(2) * &b,
        &two * q(4) * a.pow(2),
        &two * q(4) * &b,
        &two * q(4) * &b,
    ]
}

fn sorted<T: std::fmt::Debug>(mut v: Vec<T>) -> Vec<T> {
    v.sort_by_key(|x| format!("{x:?}"));
    v
}

fn c2_g42_families() -> Outcome {
    let start = Instant::now();
    let fams = enumerate_nonintersecting(&gh_config(4, 2).unwrap());
    let weights: Vec<_> = fams.iter().map(weight_g).collect();
    let total: LaurentPoly = weights.iter().cloned().sum();
    let el = start.elapsed();
    let want_total = prod(1, &[&[10, 24, 24, 10]]);
    let panels = sorted(weights) == sorted(g42_family_weights());
    outcome(
        fams.len() == 17 && total == want_total && panels && within(el, ENUMERATION_LIMIT),
        format!(
            "{} families, total {total}, per-family multiset {}, {el:.2?} (limit {ENUMERATION_LIMIT:?})",
            fams.len(),
            if panels { "matches" } else { "differs" }
        ),
    )
}

fn c3_h42_families() -> Outcome {
    let fams = enumerate_nonintersecting(&gh_config(4, 2).unwrap());
    let got: Vec<_> = fams.iter().map(|f| (weight_g(f), weight_h(f))).collect();
    let want: Vec<_> = g42_family_weights().into_iter().zip(h42_family_weights()).collect();
    let total: LaurentPoly = got.iter().map(|(_, h)| h.clone()).sum();
    let paired = sorted(got) == sorted(want);
    let h42 = prod(1, &[&[10, 15, 30, 26, 30, 15, 10]]);
    outcome(
        paired && total == h42,
        format!(
            "per-family (G, H) pairs {}, H total {total}",
            if paired { "match" } else { "differ" }
        ),
    )
}

fn c4_routes() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut lgv_cases = 0;
    for f in Family::ALL {
        for m in 2..=6u32 {
            for k in 1..m {
                lgv_cases += 1;
                let det = family_poly(f, m, k).unwrap();
                if lgv_brute(f, m, k).as_ref() != Ok(&det) || lgv_det(f, m, k).as_ref() != Ok(&det)
                {
                    bad.push(format!("lgv {f}({m},{k})"));
                }
            }
        }
    }
    let mut inv_cases = 0;
    for f in Family::ALL {
        match invert_route_table(f, 8) {
            Ok(table) => {
                for m in 2..=8u32 {
                    for k in 1..m {
                        inv_cases += 1;
                        if table.get(&(m, k)) != family_poly(f, m, k).ok().as_ref() {
                            bad.push(format!("invert {f}({m},{k})"));
                        }
                    }
                }
            }
            Err(e) => bad.push(format!("invert {f}: {e}")),
        }
    }
    let el = start.elapsed();
    outcome(
        bad.is_empty() && within(el, ROUTES_LIMIT),
        format!(
            "{lgv_cases} lattice-path cases, {inv_cases} inverse cases, failures {bad:?}, {el:.2?} (limit {ROUTES_LIMIT:?})"
        ),
    )
}

fn c5_inverse_pairs() -> Outcome {
    let mut bad = Vec::new();
    let mut points_used = Vec::new();
    for f in Family::ALL {
        let pts = default_sample_points(inverse_pair_degree_bound(f, 6) + 1);
        points_used.push(format!("{f}:{}", pts.len()));
        if verify_inverse_pair(f, 6, &pts) != Ok(true) {
            bad.push(format!("pair {f}"));
        }
    }
    for m in 2..=6 {
        for t0 in [rat(2, 1), rat(1, 2), rat(3, 1)] {
            if verify_dstr_vanishing(m, &t0) != Ok(true) {
                bad.push(format!("vanishing m={m} t0={t0}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "n=6 sample counts [{}], failures {bad:?}",
            points_used.join(" ")
        ),
    )
}

fn c6_identities() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for which in Theorem1Identity::ALL {
        for m in which.min_m()..=5 {
            for n in 1..=6 {
                count += 1;
                if verify_theorem1(which, m, n) != Ok(true) {
                    bad.push(format!("{which} m={m} n={n}"));
                }
            }
        }
    }
    for which in Lemma2Identity::ALL {
        for m in 1..=8 {
            for l in 1..=8 {
                count += 1;
                if !verify_lemma2(which, m, l) {
                    bad.push(format!("{which} m={m} l={l}"));
                }
            }
        }
    }
    for (a, b) in [(1, 1), (1, 0), (0, 1)] {
        for q0 in [rat(2, 1), rat(1, 2), rat(3, 1)] {
            for l in 1..=5 {
                count += 1;
                if verify_lemma1(a, b, &q0, l, 12) != Ok(true) {
                    bad.push(format!("series a={a} b={b} q0={q0} l={l}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} cases, failures {bad:?}"))
}

fn c7_structure() -> Outcome {
    let mut bad = Vec::new();
    for f in Family::ALL {
        for m in 1..=8u32 {
            for k in 0..m {
                let p = family_poly(f, m, k).unwrap();
                if !p.is_palindromic() || !p.has_nonnegative_coeffs() {
                    bad.push(format!("{f}({m},{k})"));
                }
            }
        }
        let factor = if matches!(f, Family::G | Family::H) {
            2
        } else {
            1
        };
        for m in 2..=8u32 {
            let top = family_poly(f, m, m - 1).unwrap();
            let below = family_poly(f, m, m - 2).unwrap();
            if top != below.scale(&factor.into()) {
                bad.push(format!("boundary {f}({m})"));
            }
        }
    }
    outcome(bad.is_empty(), format!("m<=8, failures {bad:?}"))
}

fn c8_classical() -> Outcome {
    outcome(classical_check(4, 20), "m<=4, n<=20")
}

fn c9_shape() -> Outcome {
    let mut bad = Vec::new();
    for f in [Family::P, Family::G] {
        for m in 1..=8u32 {
            for k in 0..m {
                let rep = family_poly(f, m, k).unwrap().shape_report().unwrap();
                if !rep.log_concave {
                    bad.push(format!("{f}({m},{k})"));
                }
            }
        }
    }
    let q41 = family_poly(Family::Q, 4, 1)
        .unwrap()
        .shape_report()
        .unwrap();
    let h42 = family_poly(Family::H, 4, 2)
        .unwrap()
        .shape_report()
        .unwrap();
    outcome(
        bad.is_empty() && !q41.unimodal && !h42.unimodal,
        format!(
            "P/G not log-concave {bad:?}, Q(4,1) unimodal={}, H(4,2) unimodal={}",
            q41.unimodal, h42.unimodal
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("tabulated values", c1_tables),
        ("G(4,2) path families", c2_g42_families),
        ("H(4,2) path families", c3_h42_families),
        ("route agreement", c4_routes),
        ("inverse pairs", c5_inverse_pairs),
        ("power-sum identities", c6_identities),
        ("structural invariants", c7_structure),
        ("classical specialization", c8_classical),
        ("shape report", c9_shape),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{}] {name}: {}", i + 1, o.detail);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
