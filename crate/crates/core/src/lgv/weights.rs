use std::collections::BTreeMap;

use super::path::{LatticePoint, PathFamily, Step};
use super::Configuration;
use crate::exactpoly::LaurentPoly;

/// A step together with the configuration points it touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepInfo {
    pub from: LatticePoint,
    pub dir: Step,
    /// `Some(j)` when the step leaves the start point `u_j`.
    pub start_of: Option<usize>,
    /// `Some(i)` when the step arrives at the end point `v_i`.
    pub end_of: Option<usize>,
}

impl StepInfo {
    pub fn new(from: LatticePoint, dir: Step, config: &Configuration) -> Self {
        let to = from.step(dir);
        Self {
            from,
            dir,
            start_of: config.starts.iter().position(|&u| u == from),
            end_of: config.ends.iter().position(|&v| v == to),
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.dir == Step::North
    }
}

/// Assigns a weight to every step; a path weighs the product of its steps.
pub trait WeightScheme {
    fn step_weight(&self, step: &StepInfo) -> LaurentPoly;
}

/// Vertical steps on column `x` weigh `weights[x]` (1 when absent);
/// horizontal steps weigh 1.
#[derive(Debug, Clone, Default)]
pub struct ColumnWeights(pub BTreeMap<i64, LaurentPoly>);

impl WeightScheme for ColumnWeights {
    fn step_weight(&self, step: &StepInfo) -> LaurentPoly {
        if !step.is_vertical() {
            return LaurentPoly::one();
        }
        self.0
            .get(&step.from.x)
            .cloned()
            .unwrap_or_else(LaurentPoly::one)
    }
}

/// Step weightings used for the four families.
///
/// `subset` is a bitmask over `0..k`; bit `i` set means `i` is in `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// `q` on vertical steps with even `x`.
    FaulhaberP,
    /// `q` on vertical steps with odd `x`.
    FaulhaberPOdd,
    /// `q^2` on vertical steps with even `x`, `q^2 + q` when leaving a start point.
    FaulhaberQ,
    /// `q^2` on vertical steps with odd `x`, `1 + q` when leaving a start point.
    FaulhaberQOdd,
    /// `w_I`: `q` on `x = 2i-1` for `i` in `I` and on `x = 2i` for `i` not in `I`.
    SalieG { subset: u64 },
    /// `w_I` with `q -> q^2`, plus `q` on vertical steps leaving a start point.
    SalieH { subset: u64 },
    /// Alternative `w_I`: `q` on `x = 2i+3` for `i` in `I`, on `x = 2i+2` otherwise.
    SalieGAlt { subset: u64 },
    /// Alternative `w_I` for `H`, keyed on steps arriving at end points.
    SalieHAlt { subset: u64 },
}

fn in_subset(subset: u64, i: i64) -> bool {
    (0..64).contains(&i) && subset & (1 << i) != 0
}

fn q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

/// Exponent carried by a `w_I` step (0 or 1).
fn salie_g_exponent(subset: u64, x: i64) -> i64 {
    let heavy = if x.rem_euclid(2) == 1 {
        in_subset(subset, (x + 1) / 2)
    } else {
        !in_subset(subset, x / 2)
    };
    i64::from(heavy)
}

fn salie_g_alt_exponent(subset: u64, x: i64) -> i64 {
    let heavy = if x.rem_euclid(2) == 1 {
        in_subset(subset, (x - 3) / 2)
    } else {
        !in_subset(subset, (x - 2) / 2)
    };
    i64::from(heavy)
}

impl WeightScheme for Scheme {
    fn step_weight(&self, step: &StepInfo) -> LaurentPoly {
        if !step.is_vertical() {
            return LaurentPoly::one();
        }
        let x = step.from.x;
        let even = x.rem_euclid(2) == 0;
        match *self {
            Scheme::FaulhaberP => q_pow(i64::from(even)),
            Scheme::FaulhaberPOdd => q_pow(i64::from(!even)),
            Scheme::FaulhaberQ => {
                let base = q_pow(2 * i64::from(even));
                if step.start_of.is_some() {
                    base + q_pow(1)
                } else {
                    base
                }
            }
            Scheme::FaulhaberQOdd => {
                let base = q_pow(2 * i64::from(!even));
                if step.start_of.is_some() {
                    base + q_pow(1)
                } else {
                    base
                }
            }
            Scheme::SalieG { subset } => q_pow(salie_g_exponent(subset, x)),
            Scheme::SalieH { subset } => {
                let base = q_pow(2 * salie_g_exponent(subset, x));
                if step.start_of.is_some() {
                    base + q_pow(1)
                } else {
                    base
                }
            }
            Scheme::SalieGAlt { subset } => q_pow(salie_g_alt_exponent(subset, x)),
            Scheme::SalieHAlt { subset } => match step.end_of {
                Some(i) if in_subset(subset, i as i64) => q_pow(0) + q_pow(1),
                Some(_) => q_pow(2) + q_pow(1),
                None => q_pow(2 * salie_g_alt_exponent(subset, x)),
            },
        }
    }
}

/// The configuration a family was drawn in: starts and ends of its paths.
pub fn family_configuration(family: &PathFamily) -> Configuration {
    Configuration {
        starts: family.paths.iter().map(|p| p.start()).collect(),
        ends: family.paths.iter().map(|p| p.end()).collect(),
    }
}

/// Product of all step weights of the family under `scheme`.
pub fn family_weight(family: &PathFamily, scheme: &impl WeightScheme) -> LaurentPoly {
    let config = family_configuration(family);
    let mut acc = LaurentPoly::one();
    for path in &family.paths {
        for (from, dir) in path.steps_from() {
            let w = scheme.step_weight(&StepInfo::new(from, dir, &config));
            if !w.is_one() {
                acc = acc * w;
            }
        }
    }
    acc
}

pub fn weight_p(family: &PathFamily) -> LaurentPoly {
    family_weight(family, &Scheme::FaulhaberP)
}

pub fn weight_q(family: &PathFamily) -> LaurentPoly {
    family_weight(family, &Scheme::FaulhaberQ)
}

fn sigma(family: &PathFamily, x: i64) -> i64 {
    i64::from(family.sigma(x))
}

/// `q^σ(2k) * prod_{i<k} (q^σ(2i-1) + q^σ(2i))`, where `σ(x)` counts
/// vertical steps on column `x`.
pub fn weight_g(family: &PathFamily) -> LaurentPoly {
    let k = family.len() as i64;
    (0..k)
        .map(|i| q_pow(sigma(family, 2 * i - 1)) + q_pow(sigma(family, 2 * i)))
        .fold(q_pow(sigma(family, 2 * k)), |acc, f| acc * f)
}

/// `(1+q)^f q^(2σ(2k)) prod_{i<k} (q^(2σ(2i-1)) + q^(2σ(2i) - f_i))`, with
/// `f_i` = 1 when path `i` starts with a vertical step and `f = sum f_i`.
pub fn weight_h(family: &PathFamily) -> LaurentPoly {
    let k = family.len() as i64;
    let f: u32 = (0..family.len()).map(|i| family.starts_vertically(i)).sum();
    let one_q = LaurentPoly::from_coeffs(0, [1, 1]);
    (0..k)
        .map(|i| {
            let fi = i64::from(family.starts_vertically(i as usize));
            q_pow(2 * sigma(family, 2 * i - 1)) + q_pow(2 * sigma(family, 2 * i) - fi)
        })
        .fold(one_q.pow(f) * q_pow(2 * sigma(family, 2 * k)), |acc, x| {
            acc * x
        })
}

/// `sum_I w_I(L)` taken literally over all subsets of `0..k`.
pub fn weight_g_subsets(family: &PathFamily) -> LaurentPoly {
    subsets(family.len())
        .map(|subset| family_weight(family, &Scheme::SalieG { subset }))
        .sum()
}

/// `sum_I w̄_I(L)` taken literally over all subsets of `0..k`.
pub fn weight_h_subsets(family: &PathFamily) -> LaurentPoly {
    subsets(family.len())
        .map(|subset| family_weight(family, &Scheme::SalieH { subset }))
        .sum()
}

pub(crate) fn subsets(k: usize) -> impl Iterator<Item = u64> {
    assert!(k < 64, "too many paths for subset enumeration");
    0..(1u64 << k)
}

/// Which alternative weighting [`weight_alt`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AltScheme {
    G,
    H,
}

/// Product forms of the alternative weightings:
///
/// * `G`: `q^σ(0) prod_{i=1..k} (q^σ(2i) + q^σ(2i+1))`
/// * `H`: `(1+q)^f̄ q^(2σ(0)) prod_{i=1..k} (q^(2σ(2i) - f̄_{i-1}) + q^(2σ(2i+1)))`
///
/// where `f̄_i` = 1 when path `i` arrives at its end vertically.
pub fn weight_alt(family: &PathFamily, scheme: AltScheme) -> LaurentPoly {
    let k = family.len() as i64;
    match scheme {
        AltScheme::G => (1..=k)
            .map(|i| q_pow(sigma(family, 2 * i)) + q_pow(sigma(family, 2 * i + 1)))
            .fold(q_pow(sigma(family, 0)), |acc, f| acc * f),
        AltScheme::H => {
            let fbar: u32 = (0..family.len()).map(|i| family.ends_vertically(i)).sum();
            let one_q = LaurentPoly::from_coeffs(0, [1, 1]);
            (1..=k)
                .map(|i| {
                    let fi = i64::from(family.ends_vertically((i - 1) as usize));
                    q_pow(2 * sigma(family, 2 * i) - fi) + q_pow(2 * sigma(family, 2 * i + 1))
                })
                .fold(one_q.pow(fbar) * q_pow(2 * sigma(family, 0)), |acc, f| {
                    acc * f
                })
        }
    }
}

/// Literal subset sums of the alternative weightings.
pub fn weight_alt_subsets(family: &PathFamily, scheme: AltScheme) -> LaurentPoly {
    subsets(family.len())
        .map(|subset| match scheme {
            AltScheme::G => family_weight(family, &Scheme::SalieGAlt { subset }),
            AltScheme::H => family_weight(family, &Scheme::SalieHAlt { subset }),
        })
        .sum()
}
