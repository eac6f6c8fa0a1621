//! Exact rational dense linear algebra.
//!
//! Everything downstream (axiom checks, derivation spaces, cohomology) reduces
//! to kernels, ranks and inverses of small dense matrices over ℚ. Scalars are
//! arbitrary-precision rationals, so every result is exact and every subspace
//! has a canonical reduced row echelon basis that can be compared structurally.

use num_traits::{One, Zero};

use crate::error::Error;

/// Exact scalar: arbitrary-precision rational with positive reduced denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for constructing a rational from an integer pair.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Coordinate vector over ℚ.
pub type Vector = Vec<Rational>;

pub fn vec_zero(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

pub fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

/// The i-th standard basis vector of ℚ^n.
pub fn basis_vec(n: usize, i: usize) -> Vector {
    assert!(i < n, "basis index out of range");
    let mut v = vec_zero(n);
    v[i] = Rational::one();
    v
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// Adds `c * b` into `a` in place.
pub fn vec_add_scaled(a: &mut [Rational], c: &Rational, b: &[Rational]) {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x += c * y;
    }
}

/// Dense row-major matrix over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        Matrix::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Builds the matrix whose j-th column is `cols[j]`.
    pub fn from_cols(cols: Vec<Vector>) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(nrows, ncols);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// Integer convenience constructor, mostly for tests and fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix::new(self.rows, self.cols, self.entries.iter().map(|x| c * x).collect())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length must match columns");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::new(
            self.rows,
            self.cols,
            self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::new(
            self.rows,
            self.cols,
            self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn neg(&self) -> Matrix {
        Matrix::new(self.rows, self.cols, self.entries.iter().map(|a| -a).collect())
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix::new(self.rows + other.rows, self.cols, entries)
    }

    /// Column-major flattening: column j of an n×n operator is the image of e_j.
    pub fn to_col_major_vec(&self) -> Vector {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self[(i, j)].clone());
            }
        }
        v
    }

    /// Inverse of [`Matrix::to_col_major_vec`] for square operators.
    pub fn from_col_major_vec(n: usize, v: &[Rational]) -> Matrix {
        assert_eq!(v.len(), n * n, "operator coordinates must have length n*n");
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for i in 0..n {
                m[(i, j)] = v[j * n + i].clone();
            }
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let t = &m[(row, j)] * &inv;
                m[(row, j)] = t;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let t = &m[(r, j)] - &factor * &m[(row, j)];
                    m[(r, j)] = t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : Mx = 0}, returned in canonical echelon form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec_zero(self.cols);
            x[free] = Rational::one();
            for (col, pr) in pivot_of_col.iter().enumerate() {
                if let Some(row) = pr {
                    x[col] = -r[(*row, free)].clone();
                }
            }
            basis.push(x);
        }
        Subspace::from_vectors(self.cols, basis)
    }

    /// Exact inverse; `Err(Singular)` when the rank is deficient.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        assert!(self.is_square(), "inverse requires a square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square(), "determinant requires a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            det *= m[(col, col)].clone();
            let inv = m[(col, col)].recip();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &inv;
                for j in col..n {
                    let t = &m[(r, j)] - &factor * &m[(col, j)];
                    m[(r, j)] = t;
                }
            }
        }
        det
    }

    /// Determinant of the square submatrix picked out by `rows` × `cols`.
    pub fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Rational {
        assert_eq!(rows.len(), cols.len(), "minor must be square");
        let k = rows.len();
        let mut sub = Matrix::zeros(k, k);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                sub[(a, b)] = self[(i, j)].clone();
            }
        }
        sub.determinant()
    }

    /// Solves `self * x = b` exactly; `None` when inconsistent.
    ///
    /// When the system is underdetermined an arbitrary solution (free
    /// variables set to zero) is returned.
    pub fn solve(&self, b: &[Rational]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "rhs length must match rows");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec_zero(self.cols);
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Linear subspace of ℚ^n held as a reduced row echelon basis.
///
/// The basis is canonical, so two `Subspace` values describe the same space
/// exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Canonicalizes an arbitrary spanning set.
    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vector>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length must match ambient dim");
        }
        if vectors.is_empty() {
            return Subspace { ambient_dim, basis: Vec::new() };
        }
        let (r, pivots) = Matrix::from_rows(vectors).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::from_vectors(
            ambient_dim,
            (0..ambient_dim)
                .map(|i| {
                    let mut v = vec_zero(ambient_dim);
                    v[i] = Rational::one();
                    v
                })
                .collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Reduces `v` against the echelon basis; membership means exact reduction to zero.
    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length must match ambient dim");
        let mut w = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            if w[pivot].is_zero() {
                continue;
            }
            let c = -w[pivot].clone();
            vec_add_scaled(&mut w, &c, row);
        }
        vec_is_zero(&w)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient_dim, vs)
    }

    /// Intersection, computed from the kernel of [U^T | −W^T].
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let n = self.ambient_dim;
        let (du, dw) = (self.dim(), other.dim());
        if du == 0 || dw == 0 {
            return Subspace::zero(n);
        }
        let mut m = Matrix::zeros(n, du + dw);
        for (j, u) in self.basis.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = u[i].clone();
            }
        }
        for (j, w) in other.basis.iter().enumerate() {
            for i in 0..n {
                m[(i, du + j)] = -w[i].clone();
            }
        }
        let vectors = m
            .kernel()
            .basis()
            .iter()
            .map(|coeffs| {
                let mut x = vec_zero(n);
                for (j, u) in self.basis.iter().enumerate() {
                    vec_add_scaled(&mut x, &coeffs[j], u);
                }
                x
            })
            .collect();
        Subspace::from_vectors(n, vectors)
    }
}

/// Eigenspace of `m` for eigenvalue 1, i.e. kernel(M − I).
pub fn fixed_space(m: &Matrix) -> Subspace {
    assert!(m.is_square(), "fixed_space requires a square matrix");
    m.sub(&Matrix::identity(m.rows())).kernel()
}

/// dim Z − dim B after checking B ⊆ Z basis vector by basis vector.
pub fn quotient_dim(z: &Subspace, b: &Subspace) -> Result<usize, Error> {
    if z.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "quotient of subspaces with ambient dims {} and {}",
            z.ambient_dim(),
            b.ambient_dim()
        )));
    }
    for (idx, v) in b.basis().iter().enumerate() {
        if !z.contains(v) {
            return Err(Error::NotContained(format!(
                "basis vector {idx} of the claimed subspace lies outside the larger space"
            )));
        }
    }
    Ok(z.dim() - b.dim())
}

/// Vectors of `z` extending a basis of `b` to one of `z`; representatives of z/b.
pub fn complement_representatives(z: &Subspace, b: &Subspace) -> Result<Vec<Vector>, Error> {
    quotient_dim(z, b)?;
    let mut reps = Vec::new();
    let mut span = b.clone();
    for v in z.basis() {
        if span.contains(v) {
            continue;
        }
        reps.push(v.clone());
        span = span.sum(&Subspace::from_vectors(z.ambient_dim(), vec![v.clone()]));
    }
    Ok(reps)
}
