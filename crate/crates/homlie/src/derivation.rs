//! Graded derivation spaces Der_{α^k} and Inn_{α^k}, commutators, and the
//! derivation extension of a multiplicative hom-Lie algebra.
//!
//! An α^k-derivation is an operator D with Dα = αD and
//! D[u,v] = [Du, α^k v] + [α^k u, Dv]. Operators are flattened column-major
//! (column j = image of e_j), so each graded space is a subspace of ℚ^{n²}
//! with a canonical echelon basis.

use num_traits::One;

use crate::algebra::{HomLieAlgebra, VerificationReport};
use crate::error::Error;
use crate::linalg::{vec_is_zero, vec_neg, vec_sub, vec_zero, Matrix, Rational, Subspace, Vector};

/// All α^k-derivations of one grade, as a subspace of operator coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDerivationSpace {
    pub k: i64,
    pub space: Subspace,
}

impl GradedDerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis reshaped back into n×n operators.
    pub fn operators(&self) -> Vec<Matrix> {
        let n = operator_side(self.space.ambient_dim());
        self.space.basis().iter().map(|v| Matrix::from_col_major_vec(n, v)).collect()
    }
}

fn operator_side(ambient: usize) -> usize {
    let n = (ambient as f64).sqrt().round() as usize;
    assert_eq!(n * n, ambient, "operator space dimension must be a perfect square");
    n
}

fn require_multiplicative(g: &HomLieAlgebra) -> Result<(), Error> {
    if g.is_multiplicative().holds {
        Ok(())
    } else {
        Err(Error::NotMultiplicative)
    }
}

/// Defect of the twisted Leibniz rule on the basis pair (i, j).
fn leibniz_defect(g: &HomLieAlgebra, alpha_k: &Matrix, d: &Matrix, i: usize, j: usize) -> Vector {
    let lhs = d.apply(&g.bracket_basis(i, j));
    let t1 =
        g.bracket(&d.col(i), &alpha_k.col(j)).expect("operator columns have the algebra dimension");
    let t2 =
        g.bracket(&alpha_k.col(i), &d.col(j)).expect("operator columns have the algebra dimension");
    vec_sub(&vec_sub(&lhs, &t1), &t2)
}

/// Solution space of the two derivation conditions in grade k.
pub fn derivation_space(g: &HomLieAlgebra, k: i64) -> Result<GradedDerivationSpace, Error> {
    require_multiplicative(g)?;
    let n = g.dim();
    let alpha_k = g.alpha_power(k)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    // One column per operator coordinate: stack the commutation defect with
    // the Leibniz defect of every pair.
    let mut columns = Vec::with_capacity(n * n);
    for q in 0..n * n {
        let mut unit = vec_zero(n * n);
        unit[q] = Rational::one();
        let e = Matrix::from_col_major_vec(n, &unit);
        let mut col = e.mul(g.alpha()).sub(&g.alpha().mul(&e)).to_col_major_vec();
        for &(i, j) in &pairs {
            col.extend(leibniz_defect(g, &alpha_k, &e, i, j));
        }
        columns.push(col);
    }
    let system = Matrix::from_cols(columns);
    Ok(GradedDerivationSpace { k, space: system.kernel() })
}

/// Span of the operators v ↦ [α^{k−1}(v), u] over α-fixed elements u.
pub fn inner_derivation_space(g: &HomLieAlgebra, k: i64) -> Result<GradedDerivationSpace, Error> {
    let n = g.dim();
    let alpha_km1 = g.alpha_power(k - 1)?;
    let fixed = crate::linalg::fixed_space(g.alpha());
    let mut vectors = Vec::new();
    for u in fixed.basis() {
        let cols = (0..n)
            .map(|j| {
                g.bracket(&alpha_km1.col(j), u)
                    .expect("fixed-space vectors have the algebra dimension")
            })
            .collect();
        vectors.push(Matrix::from_cols(cols).to_col_major_vec());
    }
    Ok(GradedDerivationSpace { k, space: Subspace::from_vectors(n * n, vectors) })
}

/// Membership test for the two α^k-derivation conditions.
pub fn is_derivation(g: &HomLieAlgebra, k: i64, d: &Matrix) -> Result<VerificationReport, Error> {
    require_multiplicative(g)?;
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} but the algebra has dimension {n}",
            d.rows(),
            d.cols()
        )));
    }
    let alpha_k = g.alpha_power(k)?;
    let property = format!("alpha^{k}-derivation");
    let commute = d.mul(g.alpha()).sub(&g.alpha().mul(d));
    if !commute.is_zero() {
        let j = (0..n).find(|&j| !vec_is_zero(&commute.col(j))).expect("nonzero matrix");
        return Ok(VerificationReport::fail(&property, vec![j], commute.col(j)));
    }
    for i in 0..n {
        for j in i + 1..n {
            let defect = leibniz_defect(g, &alpha_k, d, i, j);
            if !vec_is_zero(&defect) {
                return Ok(VerificationReport::fail(&property, vec![i, j], defect));
            }
        }
    }
    Ok(VerificationReport::ok(&property))
}

/// D∘D′ − D′∘D.
pub fn commutator(d: &Matrix, dp: &Matrix) -> Result<Matrix, Error> {
    if !d.is_square() || d.rows() != dp.rows() || d.cols() != dp.cols() {
        return Err(Error::DimensionMismatch(format!(
            "commutator needs equal square operators, got {}x{} and {}x{}",
            d.rows(),
            d.cols(),
            dp.rows(),
            dp.cols()
        )));
    }
    Ok(d.mul(dp).sub(&dp.mul(d)))
}

/// The (n+1)-dimensional extension with [D, u] = D(u) and twist α ⊕ 1.
///
/// The construction is performed for any operator; by the extension theorem
/// the result passes both verifiers exactly when D is an α-derivation.
pub fn derivation_extension(g: &HomLieAlgebra, d: &Matrix) -> Result<HomLieAlgebra, Error> {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} but the algebra has dimension {n}",
            d.rows(),
            d.cols()
        )));
    }
    let mut structure = std::collections::BTreeMap::new();
    for ((i, j), coeffs) in g.structure() {
        let mut v = coeffs.clone();
        v.push(Rational::from_integer(0.into()));
        structure.insert((*i, *j), v);
    }
    // stored pair (i, n) is [e_i, D] = -D(e_i)
    for i in 0..n {
        let mut v = vec_neg(&d.col(i));
        v.push(Rational::from_integer(0.into()));
        structure.insert((i, n), v);
    }
    let mut alpha = Matrix::zeros(n + 1, n + 1);
    for i in 0..n {
        for j in 0..n {
            alpha[(i, j)] = g.alpha()[(i, j)].clone();
        }
    }
    alpha[(n, n)] = Rational::one();
    let ext = HomLieAlgebra::new(n + 1, structure, alpha)?;
    Ok(match g.basis_labels() {
        Some(labels) => {
            let mut l = labels.to_vec();
            l.push("D".into());
            ext.with_labels(l)
        }
        None => ext,
    })
}
