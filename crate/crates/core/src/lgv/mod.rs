//! Non-intersecting lattice paths: brute-force enumeration under the
//! weightings that realise `P`, `Q`, `G`, `H`, and the
//! Lindström-Gessel-Viennot determinant that shortcuts it.
//!
//! Paths use unit steps `(1,0)` and `(0,1)`. Non-intersecting means
//! vertex-disjoint. Every configuration built here is nonpermutable, so the
//! determinant needs no sign correction; this is not checked.

mod path;
mod weights;

use std::collections::HashSet;

pub use path::{LatticePath, LatticePoint, PathFamily, Step};
pub use weights::{
    family_configuration, family_weight, weight_alt, weight_alt_subsets, weight_g,
    weight_g_subsets, weight_h, weight_h_subsets, weight_p, weight_q, AltScheme, ColumnWeights,
    Scheme, StepInfo, WeightScheme,
};

use crate::error::Result;
use crate::exactpoly::{Family, LaurentPoly};
use crate::qcoeffs::{check_index, PolyMatrix};

/// Start points `u_i` and end points `v_i`; path `i` runs `u_i -> v_i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Configuration {
    pub starts: Vec<LatticePoint>,
    pub ends: Vec<LatticePoint>,
}

impl Configuration {
    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }
}

fn staircase(m: u32, k: u32, dx: i64, family: Family) -> Result<Configuration> {
    check_index(family, i64::from(m), i64::from(k))?;
    let (m, k) = (i64::from(m), i64::from(k));
    Ok(Configuration {
        starts: (0..k).map(|i| LatticePoint::new(2 * i, -2 * i)).collect(),
        ends: (0..k)
            .map(|i| LatticePoint::new(2 * i + dx, m - k - 1 - i))
            .collect(),
    })
}

/// `u_i = (2i, -2i)`, `v_i = (2i+3, m-k-i-1)` for `0 <= i < k`.
pub fn pq_config(m: u32, k: u32) -> Result<Configuration> {
    staircase(m, k, 3, Family::P)
}

/// `u_i = (2i, -2i)`, `v_i = (2i+2, m-k-1-i)` for `0 <= i < k`.
pub fn gh_config(m: u32, k: u32) -> Result<Configuration> {
    staircase(m, k, 2, Family::G)
}

/// The configuration whose families realise `X(m, k)`.
pub fn family_config(family: Family, m: u32, k: u32) -> Result<Configuration> {
    check_index(family, i64::from(m), i64::from(k))?;
    match family {
        Family::P | Family::Q => pq_config(m, k),
        Family::G | Family::H => gh_config(m, k),
    }
}

/// Weighted count of monotone paths `a -> b`, step weights taken from
/// `scheme` relative to `config`.
pub fn weighted_path_sum(
    a: LatticePoint,
    b: LatticePoint,
    config: &Configuration,
    scheme: &impl WeightScheme,
) -> LaurentPoly {
    if b.x < a.x || b.y < a.y {
        return LaurentPoly::zero();
    }
    let w = (b.x - a.x + 1) as usize;
    let h = (b.y - a.y + 1) as usize;
    // table[dx][dy]: weighted count a -> a + (dx, dy)
    let mut table = vec![vec![LaurentPoly::zero(); h]; w];
    table[0][0] = LaurentPoly::one();
    for dx in 0..w {
        for dy in 0..h {
            if dx == 0 && dy == 0 {
                continue;
            }
            let mut acc = LaurentPoly::zero();
            if dx > 0 && !table[dx - 1][dy].is_zero() {
                let from = LatticePoint::new(a.x + dx as i64 - 1, a.y + dy as i64);
                let wt = scheme.step_weight(&StepInfo::new(from, Step::East, config));
                acc += &table[dx - 1][dy] * &wt;
            }
            if dy > 0 && !table[dx][dy - 1].is_zero() {
                let from = LatticePoint::new(a.x + dx as i64, a.y + dy as i64 - 1);
                let wt = scheme.step_weight(&StepInfo::new(from, Step::North, config));
                acc += &table[dx][dy - 1] * &wt;
            }
            table[dx][dy] = acc;
        }
    }
    table[w - 1][h - 1].clone()
}

/// Weighted count of paths `a -> b` where a vertical step on column `x`
/// weighs `weights[x]`; this is `h_{b.y-a.y}` of the column weights.
pub fn single_path_weight_sum(
    a: LatticePoint,
    b: LatticePoint,
    weights: &ColumnWeights,
) -> LaurentPoly {
    weighted_path_sum(a, b, &Configuration::default(), weights)
}

/// `det(N(u_j -> v_i))` under `scheme`.
pub fn lgv_determinant(config: &Configuration, scheme: &impl WeightScheme) -> LaurentPoly {
    let n = config.len();
    let entries: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| weighted_path_sum(config.starts[j], config.ends[i], config, scheme))
                .collect()
        })
        .collect();
    PolyMatrix::from_fn(n, |i, j| entries[i][j].clone()).det()
}

/// Every vertex-disjoint family `(u_0 -> v_0, ..., u_{n-1} -> v_{n-1})`.
///
/// Paths are placed in index order; each is generated step by step and
/// pruned as soon as it touches a point of an earlier path.
pub fn enumerate_nonintersecting(config: &Configuration) -> Vec<PathFamily> {
    let mut out = Vec::new();
    let mut placed = Vec::with_capacity(config.len());
    let mut occupied = HashSet::new();
    place_from(config, 0, &mut placed, &mut occupied, &mut out);
    out
}

fn place_from(
    config: &Configuration,
    idx: usize,
    placed: &mut Vec<LatticePath>,
    occupied: &mut HashSet<LatticePoint>,
    out: &mut Vec<PathFamily>,
) {
    if idx == config.len() {
        out.push(PathFamily::new(placed.clone()));
        return;
    }
    let (u, v) = (config.starts[idx], config.ends[idx]);
    if v.x < u.x || v.y < u.y || occupied.contains(&u) {
        return;
    }
    let mut candidates = Vec::new();
    let mut steps = Vec::new();
    extend_path(u, v, occupied, &mut steps, &mut candidates);
    for steps in candidates {
        let path = LatticePath::new(u, steps);
        let pts = path.points();
        occupied.extend(pts.iter().copied());
        placed.push(path);
        place_from(config, idx + 1, placed, occupied, out);
        placed.pop();
        for p in &pts {
            occupied.remove(p);
        }
    }
}

fn extend_path(
    at: LatticePoint,
    end: LatticePoint,
    occupied: &HashSet<LatticePoint>,
    steps: &mut Vec<Step>,
    out: &mut Vec<Vec<Step>>,
) {
    if at == end {
        out.push(steps.clone());
        return;
    }
    for dir in [Step::East, Step::North] {
        let next = at.step(dir);
        if next.x > end.x || next.y > end.y || occupied.contains(&next) {
            continue;
        }
        steps.push(dir);
        extend_path(next, end, occupied, steps, out);
        steps.pop();
    }
}

/// Per-family weight used for `family`'s brute-force total.
pub fn family_path_weight(family: Family, paths: &PathFamily) -> LaurentPoly {
    match family {
        Family::P => weight_p(paths),
        Family::Q => weight_q(paths),
        Family::G => weight_g(paths),
        Family::H => weight_h(paths),
    }
}

/// `X(m, k)` as the weighted sum over enumerated non-intersecting families.
pub fn lgv_brute(family: Family, m: u32, k: u32) -> Result<LaurentPoly> {
    let config = family_config(family, m, k)?;
    Ok(enumerate_nonintersecting(&config)
        .iter()
        .map(|f| family_path_weight(family, f))
        .sum())
}

/// `X(m, k)` by the LGV determinant; for `G` and `H` summed over all
/// subsets `I` of the subset-indexed weightings.
pub fn lgv_det(family: Family, m: u32, k: u32) -> Result<LaurentPoly> {
    let config = family_config(family, m, k)?;
    Ok(match family {
        Family::P => lgv_determinant(&config, &Scheme::FaulhaberP),
        Family::Q => lgv_determinant(&config, &Scheme::FaulhaberQ),
        Family::G => weights::subsets(config.len())
            .map(|subset| lgv_determinant(&config, &Scheme::SalieG { subset }))
            .sum(),
        Family::H => weights::subsets(config.len())
            .map(|subset| lgv_determinant(&config, &Scheme::SalieH { subset }))
            .sum(),
    })
}

/// One line per family: its step strings, for diffing by eye.
pub fn dump_families(family: Family, m: u32, k: u32) -> Result<Vec<String>> {
    let config = family_config(family, m, k)?;
    Ok(enumerate_nonintersecting(&config)
        .iter()
        .map(PathFamily::step_strings)
        .collect())
}
