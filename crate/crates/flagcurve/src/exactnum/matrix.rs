use super::{ExactError, Polynomial, Rational};
use num::{One, Zero};
use std::fmt;

/// Dense matrix of polynomials, possibly rectangular (row-major storage).
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Polynomial::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        &mut self.entries[i * self.cols + j]
    }

    pub fn matmul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = PolyMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    *out.get_mut(i, j) = &*out.get(i, j) + &prod;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    /// Entrywise substitution t ↦ −t.
    pub fn reflect(&self) -> PolyMatrix {
        self.map(Polynomial::reflect)
    }

    /// Entrywise derivative d/dt.
    pub fn derivative(&self) -> PolyMatrix {
        self.map(Polynomial::derivative)
    }

    /// Entrywise scaling by a rational constant.
    pub fn scale(&self, k: &Rational) -> PolyMatrix {
        self.map(|p| p.scale(k))
    }

    /// Entrywise substitution t ↦ t + c.
    pub fn shift(&self, c: &Rational) -> PolyMatrix {
        self.map(|p| p.compose_linear(&Rational::one(), c))
    }

    fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Reverses both row and column order (conjugation by the reversal
    /// permutation matrix, up to the signs that cancel in pairs).
    pub fn reversed(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(self.rows - 1 - i, self.cols - 1 - j) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zero(row_idx.len(), col_idx.len());
        for (a, &i) in row_idx.iter().enumerate() {
            for (b, &j) in col_idx.iter().enumerate() {
                *out.get_mut(a, b) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn eval(&self, t: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.eval(t)).collect(),
        }
    }

    /// Inverse of a lower-unitriangular polynomial matrix via the terminating
    /// Neumann series (I + S)⁻¹ = Σ_{m<n} (−S)^m.
    pub fn inverse_lower_unitriangular(&self) -> PolyMatrix {
        let n = self.rows;
        assert_eq!(self.rows, self.cols);
        debug_assert!((0..n).all(|i| self.get(i, i) == &Polynomial::one()));
        debug_assert!((0..n).all(|i| (i + 1..n).all(|j| self.get(i, j).is_zero())));
        let mut s = self.clone();
        for i in 0..n {
            *s.get_mut(i, i) = Polynomial::zero();
        }
        let mut out = PolyMatrix::identity(n);
        let mut power = PolyMatrix::identity(n);
        for m in 1..n {
            power = power.matmul(&s);
            let term = power.map(|p| if m % 2 == 1 { -p } else { p.clone() });
            out = out.add(&term);
        }
        out
    }

    pub fn add(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact determinant. Cofactor expansion for tiny sizes, fraction-free
    /// Bareiss elimination over ℚ[t] otherwise.
    pub fn det(&self) -> Result<Polynomial, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows <= 3 {
            Ok(self.det_cofactor())
        } else {
            Ok(self.det_bareiss())
        }
    }

    /// Recursive cofactor expansion along the first row. Exponential; serves
    /// as the independent oracle for the Bareiss route and as the fast path
    /// for tiny matrices.
    pub fn det_cofactor(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        match n {
            0 => Polynomial::one(),
            1 => self.get(0, 0).clone(),
            _ => {
                let rows: Vec<usize> = (1..n).collect();
                let mut acc = Polynomial::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let minor = self.submatrix(&rows, &cols).det_cofactor();
                    let term = a * &minor;
                    acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    fn det_bareiss(&self) -> Polynomial {
        let n = self.rows;
        let mut a: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = Polynomial::one();
        let mut sgn = 1i8;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sgn = -sgn;
                    }
                    None => return Polynomial::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev);
                }
                a[i][k] = Polynomial::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sgn < 0 {
            -&d
        } else {
            d
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[ ")?;
            for j in 0..self.cols {
                write!(f, "{}{}", self.get(i, j), if j + 1 < self.cols { ", " } else { " " })?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Dense matrix of rationals (row-major).
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }

    pub fn matmul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = QMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * rhs.get(k, j);
                    *out.get_mut(i, j) = &*out.get(i, j) + &v;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    /// Reverses both row and column order.
    pub fn reversed(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(self.rows - 1 - i, self.cols - 1 - j) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> QMatrix {
        let mut out = QMatrix::zero(row_idx.len(), col_idx.len());
        for (a, &i) in row_idx.iter().enumerate() {
            for (b, &j) in col_idx.iter().enumerate() {
                *out.get_mut(a, b) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn det(&self) -> Result<Rational, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        // Gaussian elimination over ℚ.
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = Rational::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        det = -det;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            det *= &a[k][k];
            let pivot = a[k][k].clone();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let factor = &a[i][k] / &pivot;
                for j in k..n {
                    let v = &a[k][j] * &factor;
                    a[i][j] = &a[i][j] - &v;
                }
            }
        }
        Ok(det)
    }

    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for r in rank + 1..self.rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &pivot;
                for c in col..self.cols {
                    let v = &a[rank][c] * &factor;
                    a[r][c] = &a[r][c] - &v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Inverse of a lower-unitriangular rational matrix.
    pub fn inverse_lower_unitriangular(&self) -> QMatrix {
        let n = self.rows;
        assert_eq!(self.rows, self.cols);
        debug_assert!((0..n).all(|i| self.get(i, i).is_one()));
        debug_assert!((0..n).all(|i| (i + 1..n).all(|j| self.get(i, j).is_zero())));
        let mut s = self.clone();
        for i in 0..n {
            *s.get_mut(i, i) = Rational::zero();
        }
        let mut out = QMatrix::identity(n);
        let mut power = QMatrix::identity(n);
        for m in 1..n {
            power = power.matmul(&s);
            let mut term = power.clone();
            if m % 2 == 1 {
                for e in term.entries.iter_mut() {
                    *e = -e.clone();
                }
            }
            out = out.add(&term);
        }
        out
    }

    fn add(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[ ")?;
            for j in 0..self.cols {
                write!(
                    f,
                    "{}{}",
                    super::rational_string(self.get(i, j)),
                    if j + 1 < self.cols { ", " } else { " " }
                )?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
