//! Hom-Lie algebras given by structure constants and a twisting map.
//!
//! An algebra is a basis e_0, …, e_{n−1}, a skew bracket stored as the
//! coefficient vectors of [e_i, e_j] for i < j, and a square matrix α.
//! Skew-symmetry is structural: only i < j pairs are stored and the rest is
//! extended by [e_j, e_i] = −[e_i, e_j], [e_i, e_i] = 0. The defining
//! hom-Jacobi identity, multiplicativity of α and regularity are queried
//! properties, not constructor requirements, and each check reports a
//! concrete counterexample when it fails.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{
    vec_add, vec_add_scaled, vec_is_zero, vec_neg, vec_sub, vec_zero, Matrix, Rational, Subspace,
    Vector,
};

/// Outcome of a basis-tuple property check.
///
/// `holds` is true exactly when `counterexample` is absent; the witness
/// carries the offending basis indices and the nonzero defect vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub property: String,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub indices: Vec<usize>,
    pub defect: Vector,
}

impl VerificationReport {
    pub fn ok(property: &str) -> Self {
        VerificationReport { property: property.to_string(), holds: true, counterexample: None }
    }

    pub fn fail(property: &str, indices: Vec<usize>, defect: Vector) -> Self {
        VerificationReport {
            property: property.to_string(),
            holds: false,
            counterexample: Some(Counterexample { indices, defect }),
        }
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.holds {
            write!(f, "{}: holds", self.property)
        } else {
            let c = self.counterexample.as_ref().expect("failing report has a counterexample");
            let defect: Vec<String> = c.defect.iter().map(|x| x.to_string()).collect();
            write!(
                f,
                "{}: fails at {:?} with defect ({})",
                self.property,
                c.indices,
                defect.join(", ")
            )
        }
    }
}

/// Linear map between two algebras, columns = images of source basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { source_dim: matrix.cols(), target_dim: matrix.rows(), matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.matrix.apply(v)
    }
}

/// Finite-dimensional hom-Lie algebra over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    dim: usize,
    basis_labels: Option<Vec<String>>,
    /// (i, j) with i < j mapped to the coefficient vector of [e_i, e_j].
    structure: BTreeMap<(usize, usize), Vector>,
    alpha: Matrix,
}

impl HomLieAlgebra {
    /// Builds an algebra from sparse structure constants and a twisting matrix.
    ///
    /// Pairs with an all-zero coefficient vector may be omitted. Keys must
    /// satisfy i < j < dim and every coefficient vector must have length dim.
    pub fn new(
        dim: usize,
        structure: BTreeMap<(usize, usize), Vector>,
        alpha: Matrix,
    ) -> Result<Self, Error> {
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "alpha is {}x{} but the algebra has dimension {dim}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        let mut pruned = BTreeMap::new();
        for ((i, j), coeffs) in structure {
            if i >= j || j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket pair ({i}, {j}) must satisfy i < j < {dim}"
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket ({i}, {j}) has {} coefficients, expected {dim}",
                    coeffs.len()
                )));
            }
            if !vec_is_zero(&coeffs) {
                pruned.insert((i, j), coeffs);
            }
        }
        Ok(HomLieAlgebra { dim, basis_labels: None, structure: pruned, alpha })
    }

    /// Convenience constructor from integer structure constants.
    pub fn from_i64(
        dim: usize,
        brackets: &[(usize, usize, &[i64])],
        alpha: Matrix,
    ) -> Result<Self, Error> {
        let mut structure = BTreeMap::new();
        for &(i, j, coeffs) in brackets {
            structure
                .insert((i, j), coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect());
        }
        HomLieAlgebra::new(dim, structure, alpha)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "label count must match dimension");
        self.basis_labels = Some(labels);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> Option<&[String]> {
        self.basis_labels.as_deref()
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Sparse structure constants, only i < j pairs with a nonzero bracket.
    pub fn structure(&self) -> &BTreeMap<(usize, usize), Vector> {
        &self.structure
    }

    /// True when dimension, brackets and twist coincide, ignoring labels.
    pub fn same_structure(&self, other: &HomLieAlgebra) -> bool {
        self.dim == other.dim && self.structure == other.structure && self.alpha == other.alpha
    }

    /// [e_i, e_j] for arbitrary index order.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec_zero(self.dim),
            std::cmp::Ordering::Less => {
                self.structure.get(&(i, j)).cloned().unwrap_or_else(|| vec_zero(self.dim))
            }
            std::cmp::Ordering::Greater => self
                .structure
                .get(&(j, i))
                .map(|v| vec_neg(v))
                .unwrap_or_else(|| vec_zero(self.dim)),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector, Error> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket arguments have lengths {} and {}, expected {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec_zero(self.dim);
        for ((i, j), coeffs) in &self.structure {
            // coefficient of [e_i, e_j]: x_i y_j - x_j y_i
            let c = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if !c.is_zero() {
                vec_add_scaled(&mut out, &c, coeffs);
            }
        }
        Ok(out)
    }

    /// Matrix of v ↦ [x, v].
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Matrix, Error> {
        let cols = (0..self.dim)
            .map(|j| self.bracket(x, &crate::linalg::basis_vec(self.dim, j)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_cols(cols))
    }

    /// Center: kernel of the stacked maps u ↦ [u, e_j].
    pub fn center(&self) -> Subspace {
        let mut stacked: Option<Matrix> = None;
        for j in 0..self.dim {
            // column i of block j is [e_i, e_j]
            let block =
                Matrix::from_cols((0..self.dim).map(|i| self.bracket_basis(i, j)).collect());
            stacked = Some(match stacked {
                None => block,
                Some(m) => m.vstack(&block),
            });
        }
        stacked.map_or_else(|| Subspace::full(0), |m| m.kernel())
    }

    /// Checks [α(e_i), [e_j, e_k]] + cyclic = 0 on all triples i < j < k.
    ///
    /// The identity is alternating and trilinear, so vanishing on strictly
    /// increasing basis triples is equivalent to vanishing everywhere.
    pub fn verify_hom_jacobi(&self) -> VerificationReport {
        let property = "hom-Jacobi";
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let defect = self
                        .hom_jacobiator(i, j, k)
                        .expect("basis vectors always have matching length");
                    if !vec_is_zero(&defect) {
                        return VerificationReport::fail(property, vec![i, j, k], defect);
                    }
                }
            }
        }
        VerificationReport::ok(property)
    }

    fn hom_jacobiator(&self, i: usize, j: usize, k: usize) -> Result<Vector, Error> {
        let alpha_i = self.alpha.col(i);
        let alpha_j = self.alpha.col(j);
        let alpha_k = self.alpha.col(k);
        let t1 = self.bracket(&alpha_i, &self.bracket_basis(j, k))?;
        let t2 = self.bracket(&alpha_j, &self.bracket_basis(k, i))?;
        let t3 = self.bracket(&alpha_k, &self.bracket_basis(i, j))?;
        Ok(vec_add(&vec_add(&t1, &t2), &t3))
    }

    /// Checks α[e_i, e_j] = [α e_i, α e_j] on all pairs i < j.
    ///
    /// Both sides are bilinear and skew, so basis pairs decide the identity.
    pub fn is_multiplicative(&self) -> VerificationReport {
        let property = "multiplicative";
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = self.alpha.apply(&self.bracket_basis(i, j));
                let rhs = self
                    .bracket(&self.alpha.col(i), &self.alpha.col(j))
                    .expect("columns of alpha have the algebra dimension");
                let defect = vec_sub(&lhs, &rhs);
                if !vec_is_zero(&defect) {
                    return VerificationReport::fail(property, vec![i, j], defect);
                }
            }
        }
        VerificationReport::ok(property)
    }

    /// Multiplicative with invertible α.
    pub fn is_regular(&self) -> bool {
        self.is_multiplicative().holds && self.alpha.inverse().is_ok()
    }

    /// α^s with α^0 = I; negative powers need an invertible twist.
    pub fn alpha_power(&self, s: i64) -> Result<Matrix, Error> {
        let base = if s >= 0 {
            self.alpha.clone()
        } else {
            self.alpha.inverse().map_err(|_| {
                Error::NotRegular("negative twist power needs invertible alpha".into())
            })?
        };
        let mut out = Matrix::identity(self.dim);
        for _ in 0..s.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Block-diagonal sum: brackets component-wise, twist α ⊕ β.
    pub fn direct_sum(&self, other: &HomLieAlgebra) -> HomLieAlgebra {
        let n = self.dim;
        let m = other.dim;
        let mut structure = BTreeMap::new();
        for ((i, j), coeffs) in &self.structure {
            let mut v = coeffs.clone();
            v.extend(vec_zero(m));
            structure.insert((*i, *j), v);
        }
        for ((i, j), coeffs) in &other.structure {
            let mut v = vec_zero(n);
            v.extend(coeffs.iter().cloned());
            structure.insert((n + i, n + j), v);
        }
        let mut alpha = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                alpha[(i, j)] = self.alpha[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                alpha[(n + i, n + j)] = other.alpha[(i, j)].clone();
            }
        }
        let labels = match (&self.basis_labels, &other.basis_labels) {
            (Some(a), Some(b)) => {
                let mut l: Vec<String> = a.iter().map(|s| format!("{s}.l")).collect();
                l.extend(b.iter().map(|s| format!("{s}.r")));
                Some(l)
            }
            _ => None,
        };
        let mut sum = HomLieAlgebra::new(n + m, structure, alpha)
            .expect("block construction preserves shape invariants");
        if let Some(l) = labels {
            sum = sum.with_labels(l);
        }
        sum
    }

    /// Checks φ[e_i, e_j] = [φ e_i, φ e_j] on all pairs and φ∘α = β∘φ.
    pub fn is_morphism(&self, target: &HomLieAlgebra, phi: &LinearMap) -> Result<bool, Error> {
        if phi.source_dim != self.dim || phi.target_dim != target.dim {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{} but algebras have dimensions {} and {}",
                phi.target_dim, phi.source_dim, self.dim, target.dim
            )));
        }
        if phi.matrix.mul(&self.alpha) != target.alpha.mul(&phi.matrix) {
            return Ok(false);
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = phi.apply(&self.bracket_basis(i, j));
                let rhs = target.bracket(&phi.matrix.col(i), &phi.matrix.col(j))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Decides morphism-ness through the graph: builds the direct sum and asks
    /// whether {(u, φu)} is closed under the sum bracket and invariant under α ⊕ β.
    pub fn graph_is_subalgebra(
        &self,
        target: &HomLieAlgebra,
        phi: &LinearMap,
    ) -> Result<bool, Error> {
        if phi.source_dim != self.dim || phi.target_dim != target.dim {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{} but algebras have dimensions {} and {}",
                phi.target_dim, phi.source_dim, self.dim, target.dim
            )));
        }
        let sum = self.direct_sum(target);
        let graph_basis: Vec<Vector> = (0..self.dim)
            .map(|i| {
                let mut v = vec_zero(self.dim);
                v[i] = Rational::from_integer(1.into());
                v.extend(phi.matrix.col(i));
                v
            })
            .collect();
        Ok(sum.is_subalgebra(&graph_basis))
    }

    /// True iff span(h) is α-invariant and bracket-closed.
    pub fn is_subalgebra(&self, h_basis: &[Vector]) -> bool {
        for v in h_basis {
            assert_eq!(v.len(), self.dim, "subalgebra vectors must have the algebra dimension");
        }
        let span = Subspace::from_vectors(self.dim, h_basis.to_vec());
        for v in span.basis() {
            if !span.contains(&self.alpha.apply(v)) {
                return false;
            }
        }
        for (a, va) in span.basis().iter().enumerate() {
            for vb in span.basis().iter().skip(a + 1) {
                let w = self.bracket(va, vb).expect("span vectors have the algebra dimension");
                if !span.contains(&w) {
                    return false;
                }
            }
        }
        true
    }
}
