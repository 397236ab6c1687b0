//! Matrices over a polynomial ring: symbolic determinants and minors.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// Default cap on the size of a symbolic determinant. Cofactor expansion
/// beyond this is both slow and a sign that the caller wants something the
/// crate does not promise.
pub const DEFAULT_DET_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Arc<RingSpec>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>, // row-major
}

impl PolyMatrix {
    pub fn new(
        ring: &Arc<RingSpec>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if !RingSpec::same(e.ring(), ring) {
                return Err(Error::RingMismatch(
                    "matrix entry from a different ring".into(),
                ));
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        ring: &Arc<RingSpec>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: &Arc<RingSpec>, n: usize) -> PolyMatrix {
        PolyMatrix::from_fn(ring, n, n, |i, j| {
            if i == j {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn matmul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !RingSpec::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("matmul over distinct rings".into()));
        }
        if self.cols != other.rows {
            return Err(Error::Invalid(format!(
                "matmul shape mismatch: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(PolyMatrix::from_fn(
            &self.ring,
            self.rows,
            other.cols,
            |i, j| {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add_raw(&self.get(i, k).mul_raw(other.get(k, j)));
                }
                acc
            },
        ))
    }

    pub fn matadd(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !RingSpec::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("matadd over distinct rings".into()));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Invalid("matadd shape mismatch".into()));
        }
        Ok(PolyMatrix::from_fn(
            &self.ring,
            self.rows,
            self.cols,
            |i, j| self.get(i, j).add_raw(other.get(i, j)),
        ))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        self.determinant_with_limit(DEFAULT_DET_LIMIT)
    }

    /// Cofactor expansion along columns with memoization on the active row
    /// set. Exponential in the size, which is why the limit exists.
    pub fn determinant_with_limit(&self, limit: usize) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > limit {
            return Err(Error::DeterminantLimit {
                size: self.rows,
                limit,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        let mut memo: HashMap<u64, Polynomial> = HashMap::new();
        Ok(self.det_rec((1u64 << n) - 1, &mut memo))
    }

    fn det_rec(&self, row_mask: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
        if row_mask == 0 {
            return Polynomial::one(&self.ring);
        }
        if let Some(p) = memo.get(&row_mask) {
            return p.clone();
        }
        // column index = number of columns already consumed
        let col = self.rows - (row_mask.count_ones() as usize);
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign_neg = false;
        for r in 0..self.rows {
            if row_mask & (1 << r) == 0 {
                continue;
            }
            let e = self.get(r, col);
            if !e.is_zero() {
                let sub = self.det_rec(row_mask & !(1 << r), memo);
                let prod = e.mul_raw(&sub);
                acc = if sign_neg {
                    acc.sub_raw(&prod)
                } else {
                    acc.add_raw(&prod)
                };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(row_mask, acc.clone());
        acc
    }

    /// All `k`-by-`k` minors, in lexicographic order of (row index set,
    /// column index set). Zero minors are kept; filtering is the caller's
    /// choice.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::MinorSize {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if k > DEFAULT_DET_LIMIT {
            return Err(Error::DeterminantLimit {
                size: k,
                limit: DEFAULT_DET_LIMIT,
            });
        }
        let row_sets = k_subsets(self.rows, k);
        let col_sets = k_subsets(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs).determinant_with_limit(k)?);
            }
        }
        Ok(out)
    }
}

/// All k-element subsets of {0,..,n-1} in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next subset
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
