//! Dense square matrices with an exact fraction-free backend and a float
//! backend.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Clone> SquareMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn filled(dim: usize, value: T) -> Self {
        SquareMatrix {
            dim,
            entries: vec![value; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Principal submatrix on `indices`.
    pub fn principal(&self, indices: &[usize]) -> Self {
        let entries = indices
            .iter()
            .flat_map(|&i| indices.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        SquareMatrix {
            dim: indices.len(),
            entries,
        }
    }
}

impl<T: Clone + PartialEq> SquareMatrix<T> {
    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl SquareMatrix<f64> {
    pub fn to_nalgebra(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.dim, self.dim, &self.entries)
    }

    /// Hadamard bound: product of the row norms.
    pub fn hadamard_scale(&self) -> f64 {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(|x| x * x).sum::<f64>().sqrt())
            .product()
    }
}

/// Clears denominators row by row. Returns the integer rows and the scale
/// applied to each.
fn integer_rows(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    rows.iter()
        .map(|row| {
            let scale = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints = row
                .iter()
                .map(|q| q.numer() * (&scale / q.denom()))
                .collect();
            (ints, scale)
        })
        .unzip()
}

/// Bareiss elimination on the first `n` columns of an `n × cols` integer
/// matrix. Returns the sign of the row permutation, or `None` if singular.
fn bareiss(m: &mut [Vec<BigInt>], n: usize) -> Option<i8> {
    let cols = m.first().map_or(0, Vec::len);
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero())?;
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..cols {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Some(sign)
}

pub fn determinant_exact(a: &SquareMatrix<BigRational>) -> BigRational {
    let n = a.dim();
    if n == 0 {
        return BigRational::one();
    }
    let (mut m, scales) = integer_rows(&a.rows());
    let Some(sign) = bareiss(&mut m, n) else {
        return BigRational::zero();
    };
    let scale: BigInt = scales.iter().product();
    let det = BigRational::new(m[n - 1][n - 1].clone(), scale);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Solves `A X = B` for the columns of `rhs` by fraction-free elimination.
pub fn solve_exact_many(
    a: &SquareMatrix<BigRational>,
    rhs: &[Vec<BigRational>],
) -> Result<Vec<Vec<BigRational>>> {
    let n = a.dim();
    for b in rhs {
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: b.len(),
            });
        }
    }
    let augmented: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    let (mut m, _) = integer_rows(&augmented);
    bareiss(&mut m, n).ok_or(Error::SingularSystem)?;
    let solutions = (0..rhs.len())
        .map(|c| {
            let mut x = vec![BigRational::zero(); n];
            for i in (0..n).rev() {
                let mut acc = BigRational::from_integer(m[i][n + c].clone());
                for j in i + 1..n {
                    acc -= BigRational::from_integer(m[i][j].clone()) * &x[j];
                }
                x[i] = acc / BigRational::from_integer(m[i][i].clone());
            }
            x
        })
        .collect();
    Ok(solutions)
}

pub fn solve_exact(a: &SquareMatrix<BigRational>, b: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut sols = solve_exact_many(a, &[b.to_vec()])?;
    Ok(sols.pop().unwrap_or_default())
}

pub fn inverse_exact(a: &SquareMatrix<BigRational>) -> Result<SquareMatrix<BigRational>> {
    let n = a.dim();
    let units: Vec<Vec<BigRational>> = (0..n)
        .map(|c| {
            (0..n)
                .map(|r| if r == c { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    let columns = solve_exact_many(a, &units)?;
    let rows = (0..n)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect();
    SquareMatrix::from_rows(rows)
}

pub fn determinant_float(a: &SquareMatrix<f64>) -> f64 {
    if a.dim() == 0 {
        return 1.0;
    }
    a.to_nalgebra().lu().determinant()
}

/// Float rule for nonsingularity: `|det| > 1e-12 ×` the Hadamard bound.
pub fn is_nonsingular_float(a: &SquareMatrix<f64>) -> bool {
    let scale = a.hadamard_scale();
    scale > 0.0 && determinant_float(a).abs() > 1e-12 * scale
}

/// Partial-pivot LU solve.
pub fn solve_float(a: &SquareMatrix<f64>, b: &[f64]) -> Result<Vec<f64>> {
    if b.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.len(),
        });
    }
    if !is_nonsingular_float(a) {
        return Err(Error::SingularSystem);
    }
    let x = a
        .to_nalgebra()
        .lu()
        .solve(&DVector::from_column_slice(b))
        .ok_or(Error::SingularSystem)?;
    Ok(x.iter().copied().collect())
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(a: &SquareMatrix<f64>) -> Vec<f64> {
    let mut values: Vec<f64> = a.to_nalgebra().symmetric_eigen().eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}
