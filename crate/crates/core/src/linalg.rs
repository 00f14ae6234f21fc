//! Exact rational linear algebra.
//!
//! Everything here works over [`Rational`] (arbitrary precision) so that
//! identity checks downstream are exact: a residual is either zero or it
//! is not. Subspaces are kept in reduced row-echelon form, which gives a
//! canonical basis independent of the order generators were supplied in.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The ground field.
pub type Rational = BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Returns `None` for a zero denominator
/// or anything that is not an exact rational literal.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    text.parse::<Rational>().ok()
}

/// Canonical text form: reduced, positive denominator, `p` when integral.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A dense vector of rationals with a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn zeros(len: usize) -> Self {
        Vector(vec![Rational::zero(); len])
    }

    /// The `index`-th standard basis vector of length `len`.
    pub fn basis(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Vector(values.iter().map(|&x| int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }

    /// `self += c * other`. Lengths must agree.
    pub fn add_scaled(&mut self, c: &Rational, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn scaled(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// Concatenation `(self, other)`, used for direct sums.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut out = self.0.clone();
        out.extend(other.0.iter().cloned());
        Vector(out)
    }

    /// The sub-vector on `start..start + len`.
    pub fn segment(&self, start: usize, len: usize) -> Vector {
        Vector(self.0[start..start + len].to_vec())
    }

    pub fn select(&self, indices: &[usize]) -> Vector {
        Vector(indices.iter().map(|&i| self.0[i].clone()).collect())
    }

    fn check_len(&self, other: &Vector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                context: "vector arithmetic".into(),
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(v: Vec<Rational>) -> Self {
        Vector(v)
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        self.check_len(rhs).expect("vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self.check_len(rhs).expect("vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: format!("{rows}x{cols} matrix entries"),
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    /// `k * Id` on an `n`-dimensional space.
    pub fn scalar(n: usize, k: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, k.clone());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: format!("matrix row {r}"),
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer rows")
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    context: format!("matrix column {j}"),
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| Vector(self.row(r).to_vec())).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product".into(),
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = Vector::zeros(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if !a.is_zero() {
                    out[r] += a * x;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if other.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix product".into(),
                expected: self.cols,
                found: other.rows,
            });
        }
        let columns = (0..other.cols)
            .map(|c| self.mul_vec(&other.column(c)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.rows, &columns)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row-echelon form and its (strictly increasing) pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead_row = 0;
        for col in 0..m.cols {
            if lead_row == m.rows {
                break;
            }
            let Some(p) = (lead_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, lead_row);
            let inv = m.get(lead_row, col).recip();
            for c in col..m.cols {
                let x = m.get(lead_row, c) * &inv;
                m.set(lead_row, c, x);
            }
            for r in 0..m.rows {
                if r == lead_row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(lead_row, c);
                    if !sub.is_zero() {
                        let x = m.get(r, c) - sub;
                        m.set(r, c, x);
                    }
                }
            }
            pivots.push(col);
            lead_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// A subspace of `K^n`, stored as the non-zero rows of an RREF matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| Vector::basis(ambient_dim, i))
                .collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the unique element of the subspace that agrees with `v`
    /// on the pivot columns. The result vanishes on every pivot column and
    /// is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        self.check_dim(v)?;
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                r.add_scaled(&-c, b);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Span of `self` together with `extra`.
    pub fn extend(&self, extra: &[Vector]) -> Result<SubspaceBasis> {
        let mut all = self.basis.clone();
        all.extend(extra.iter().cloned());
        span(self.ambient_dim, &all)
    }

    /// Ambient coordinates that are not pivots, together with the coset
    /// projection expressed in those coordinates.
    pub fn complement_coordinates(&self) -> (Vec<usize>, CosetProjection) {
        let complement: Vec<usize> = (0..self.ambient_dim)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect();
        let projection = CosetProjection {
            subspace: self.clone(),
            complement: complement.clone(),
        };
        (complement, projection)
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                context: "subspace membership".into(),
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        Ok(())
    }
}

/// Canonical RREF basis of the span of `vectors` inside `K^ambient_dim`.
pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<SubspaceBasis> {
    let mut data = Vec::with_capacity(vectors.len() * ambient_dim);
    for v in vectors {
        if v.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                context: "span generators".into(),
                expected: ambient_dim,
                found: v.len(),
            });
        }
        data.extend(v.iter().cloned());
    }
    let m = Matrix::new(vectors.len(), ambient_dim, data)?;
    let (r, pivots) = m.rref();
    let basis = (0..pivots.len()).map(|i| Vector(r.row(i).to_vec())).collect();
    Ok(SubspaceBasis {
        ambient_dim,
        basis,
        pivots,
    })
}

/// `v ↦ v + W` written in complement (non-pivot) coordinates of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetProjection {
    subspace: SubspaceBasis,
    complement: Vec<usize>,
}

impl CosetProjection {
    pub fn source_dim(&self) -> usize {
        self.subspace.ambient_dim
    }

    pub fn target_dim(&self) -> usize {
        self.complement.len()
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        Ok(self.subspace.reduce(v)?.select(&self.complement))
    }

    /// Standard representative of the `k`-th quotient basis vector.
    pub fn lift(&self, k: usize) -> Vector {
        Vector::basis(self.source_dim(), self.complement[k])
    }

    /// The projection as a `target_dim × source_dim` matrix.
    pub fn matrix(&self) -> Matrix {
        let n = self.source_dim();
        let columns: Vec<Vector> = (0..n)
            .map(|i| self.apply(&Vector::basis(n, i)).expect("basis vector"))
            .collect();
        Matrix::from_columns(self.target_dim(), &columns).expect("consistent columns")
    }
}
