use std::fmt;

use super::{AlgebraError, MultiPoly};

/// Largest square matrix the determinant routine accepts.
pub const MAX_DET_SIZE: usize = 6;

/// Dense row-major matrix of polynomials sharing one ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        nvars: usize,
        mut f: impl FnMut(usize, usize) -> MultiPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.nvars(), nvars, "entry ({i},{j}) in a different ring");
                entries.push(e);
            }
        }
        PolyMatrix {
            rows,
            cols,
            nvars,
            entries,
        }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MultiPoly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self::from_fn(nrows, ncols, nvars, |i, j| rows[i][j].clone())
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        Self::from_fn(n, n, nvars, |i, j| {
            if i == j {
                MultiPoly::one(nvars)
            } else {
                MultiPoly::zero(nvars)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: MultiPoly) {
        assert_eq!(value.nvars(), self.nvars);
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MultiPoly::is_zero)
    }

    /// Multiplies every entry by the scalar `c`.
    pub fn scaled(&self, c: &super::ExactScalar) -> Self {
        PolyMatrix {
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// Same value as [`PolyMatrix::determinant`], computed by division-free
    /// minor expansion on packed integer monomials when the entries fit
    /// (≤ 8 variables, exponents < 256), otherwise by Bareiss elimination.
    pub fn determinant_fast(&self) -> Result<MultiPoly, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > MAX_DET_SIZE {
            return Err(AlgebraError::TooLarge(self.rows));
        }
        match super::packed::determinant_packed(self) {
            Some(d) => Ok(d),
            None => self.determinant(),
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate entry is a minor of the input, so each division by
    /// the previous pivot is exact in the polynomial ring.
    pub fn determinant(&self) -> Result<MultiPoly, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(AlgebraError::TooLarge(n));
        }
        if n == 0 {
            return Ok(MultiPoly::one(self.nvars));
        }
        let mut a: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = MultiPoly::one(self.nvars);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(MultiPoly::zero(self.nvars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let cross = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = cross.exact_divide(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
