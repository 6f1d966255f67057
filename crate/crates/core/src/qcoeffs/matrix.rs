use std::collections::HashMap;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::exactpoly::{BigRational, LaurentPoly};

/// A square matrix of Laurent polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self[(i, j)].is_zero()))
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(Self::from_fn(self.dim, |i, j| {
            &self[(i, j)] + &other[(i, j)]
        }))
    }

    /// The submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), cols.len());
        Self::from_fn(rows.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Evaluates every entry at `x`.
    pub fn eval(&self, x: &BigRational) -> Result<Vec<Vec<BigRational>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)].eval(x)).collect())
            .collect()
    }

    /// Exact determinant by cofactor expansion along successive rows,
    /// memoized on the set of columns already used.
    pub fn det(&self) -> LaurentPoly {
        let n = self.dim;
        if n == 0 {
            return LaurentPoly::one();
        }
        assert!(n < 64, "determinant dimension too large");
        let mut memo: HashMap<u64, LaurentPoly> = HashMap::new();
        self.det_rec(0, &mut memo)
    }

    fn det_rec(&self, used: u64, memo: &mut HashMap<u64, LaurentPoly>) -> LaurentPoly {
        let row = used.count_ones() as usize;
        if row == self.dim {
            return LaurentPoly::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = LaurentPoly::zero();
        let mut free_before = 0usize;
        for col in 0..self.dim {
            if used & (1 << col) != 0 {
                continue;
            }
            let a = &self[(row, col)];
            if !a.is_zero() {
                let minor = self.det_rec(used | (1 << col), memo);
                let term = a * &minor;
                if free_before.is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        assert!(i < self.dim && j < self.dim, "index out of range");
        &self.entries[i * self.dim + j]
    }
}

/// `det(A + B)` expanded as the sum over column subsets `I` of the
/// determinant of the matrix taking column `j` from `A` when `j` is in `I`
/// and from `B` otherwise.
pub fn detsum_expansion(a: &PolyMatrix, b: &PolyMatrix) -> Result<LaurentPoly> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let n = a.dim;
    assert!(n < 32, "detsum_expansion: dimension too large");
    let mut total = LaurentPoly::zero();
    for subset in 0u32..(1 << n) {
        let mixed = PolyMatrix::from_fn(n, |i, j| {
            if subset & (1 << j) != 0 {
                a[(i, j)].clone()
            } else {
                b[(i, j)].clone()
            }
        });
        total += mixed.det();
    }
    Ok(total)
}
