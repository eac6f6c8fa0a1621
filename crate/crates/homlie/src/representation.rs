//! Representations ρ_A of multiplicative hom-Lie algebras, with the trivial
//! and α^s-adjoint constructions, semidirect products and central extensions.
//!
//! A representation on V with respect to A ∈ gl(V) is a linear map
//! ρ: g → gl(V) with ρ(α u)∘A = A∘ρ(u) and
//! ρ([u,v])∘A = ρ(α u)∘ρ(v) − ρ(α v)∘ρ(u).

use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::{HomLieAlgebra, LinearMap, VerificationReport};
use crate::cohomology::{coboundary_apply, Cochain};
use crate::error::Error;
use crate::linalg::{vec_zero, Matrix, Rational};

/// Action of a hom-Lie algebra on a module V, together with the twist A of V.
///
/// [`Representation::new`] checks the two representation axioms; use
/// [`Representation::new_unchecked`] to carry candidate data that may violate
/// them, e.g. to exercise the converse directions of the structure theorems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: HomLieAlgebra,
    module_dim: usize,
    rho: Vec<Matrix>,
    a: Matrix,
}

fn check_shapes(g: &HomLieAlgebra, rho: &[Matrix], a: &Matrix) -> Result<usize, Error> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "module twist must be square, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let m = a.rows();
    if rho.len() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "need one action matrix per basis vector: got {}, expected {}",
            rho.len(),
            g.dim()
        )));
    }
    for (i, r) in rho.iter().enumerate() {
        if r.rows() != m || r.cols() != m {
            return Err(Error::DimensionMismatch(format!(
                "action of basis vector {i} is {}x{}, expected {m}x{m}",
                r.rows(),
                r.cols()
            )));
        }
    }
    Ok(m)
}

/// Checks both representation axioms on basis vectors and pairs.
pub fn is_representation(
    g: &HomLieAlgebra,
    rho: &[Matrix],
    a: &Matrix,
) -> Result<VerificationReport, Error> {
    check_shapes(g, rho, a)?;
    let property = "representation";
    let rho_of = |v: &[Rational]| -> Matrix {
        let m = a.rows();
        let mut out = Matrix::zeros(m, m);
        for (i, c) in v.iter().enumerate() {
            out = out.add(&rho[i].scale(c));
        }
        out
    };
    for (i, rho_i) in rho.iter().enumerate() {
        let defect = rho_of(&g.alpha().col(i)).mul(a).sub(&a.mul(rho_i));
        if !defect.is_zero() {
            return Ok(VerificationReport::fail(property, vec![i], defect.to_col_major_vec()));
        }
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = rho_of(&g.bracket_basis(i, j)).mul(a);
            let rhs =
                rho_of(&g.alpha().col(i)).mul(&rho[j]).sub(&rho_of(&g.alpha().col(j)).mul(&rho[i]));
            let defect = lhs.sub(&rhs);
            if !defect.is_zero() {
                return Ok(VerificationReport::fail(
                    property,
                    vec![i, j],
                    defect.to_col_major_vec(),
                ));
            }
        }
    }
    Ok(VerificationReport::ok(property))
}

impl Representation {
    /// Validated constructor: the axioms are checked on construction.
    pub fn new(g: &HomLieAlgebra, rho: Vec<Matrix>, a: Matrix) -> Result<Self, Error> {
        let report = is_representation(g, &rho, &a)?;
        if !report.holds {
            return Err(Error::InvalidRepresentation(report.to_string()));
        }
        let module_dim = a.rows();
        Ok(Representation { algebra: g.clone(), module_dim, rho, a })
    }

    /// Shape-checked constructor that skips the axiom check.
    pub fn new_unchecked(g: &HomLieAlgebra, rho: Vec<Matrix>, a: Matrix) -> Result<Self, Error> {
        let module_dim = check_shapes(g, &rho, &a)?;
        Ok(Representation { algebra: g.clone(), module_dim, rho, a })
    }

    /// The trivial representation: V = ℚ, ρ = 0, A = 1.
    pub fn trivial(g: &HomLieAlgebra) -> Result<Self, Error> {
        if !g.is_multiplicative().holds {
            return Err(Error::NotMultiplicative);
        }
        Representation::new(g, vec![Matrix::zeros(1, 1); g.dim()], Matrix::identity(1))
    }

    /// The α^s-adjoint representation ad_s(u) = [α^s(u), ·] with A = α.
    ///
    /// Nonnegative s only needs a multiplicative algebra; negative s needs a
    /// regular one.
    pub fn adjoint(g: &HomLieAlgebra, s: i64) -> Result<Self, Error> {
        if !g.is_multiplicative().holds {
            return Err(Error::NotMultiplicative);
        }
        if s < 0 && !g.is_regular() {
            return Err(Error::NotRegular(format!(
                "the alpha^{s}-adjoint representation needs an invertible twist"
            )));
        }
        let alpha_s = g.alpha_power(s)?;
        let n = g.dim();
        let rho = (0..n)
            .map(|i| {
                let cols = (0..n)
                    .map(|j| {
                        g.bracket(&alpha_s.col(i), &crate::linalg::basis_vec(n, j))
                            .expect("twist columns have the algebra dimension")
                    })
                    .collect();
                Matrix::from_cols(cols)
            })
            .collect();
        Representation::new(g, rho, g.alpha().clone())
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Action matrix of the basis vector e_i.
    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    /// Linear extension ρ(v) = Σ v_i ρ(e_i).
    pub fn rho_of(&self, v: &[Rational]) -> Matrix {
        assert_eq!(v.len(), self.algebra.dim(), "vector length must match the algebra");
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, c) in v.iter().enumerate() {
            out = out.add(&self.rho[i].scale(c));
        }
        out
    }

    /// Axiom check of the carried data.
    pub fn verify(&self) -> VerificationReport {
        is_representation(&self.algebra, &self.rho, &self.a)
            .expect("shapes were checked at construction")
    }

    /// g ⊕ V with [(u,X),(v,Y)] = ([u,v], ρ(u)Y − ρ(v)X) and twist α ⊕ A.
    ///
    /// The construction is performed for any carried data; it passes both
    /// verifiers exactly when the data is a representation.
    pub fn semidirect_product(&self) -> HomLieAlgebra {
        let g = &self.algebra;
        let n = g.dim();
        let m = self.module_dim;
        let mut structure = BTreeMap::new();
        for ((i, j), coeffs) in g.structure() {
            let mut v = coeffs.clone();
            v.extend(vec_zero(m));
            structure.insert((*i, *j), v);
        }
        // [(e_i, 0), (0, f_b)] = (0, rho(e_i) f_b)
        for i in 0..n {
            for b in 0..m {
                let mut v = vec_zero(n + m);
                for t in 0..m {
                    v[n + t] = self.rho[i][(t, b)].clone();
                }
                structure.insert((i, n + b), v);
            }
        }
        let mut alpha = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                alpha[(i, j)] = g.alpha()[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                alpha[(n + i, n + j)] = self.a[(i, j)].clone();
            }
        }
        let product = HomLieAlgebra::new(n + m, structure, alpha)
            .expect("block construction preserves shape invariants");
        match g.basis_labels() {
            Some(labels) => {
                let mut l = labels.to_vec();
                l.extend((0..m).map(|b| format!("v{b}")));
                product.with_labels(l)
            }
            None => product,
        }
    }
}

fn check_scalar_two_cochain(g: &HomLieAlgebra, theta: &Cochain) -> Result<(), Error> {
    if theta.algebra_dim() != g.dim() || theta.module_dim() != 1 || theta.degree() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "central extension data must be a scalar 2-cochain on a {}-dimensional algebra",
            g.dim()
        )));
    }
    // theta(alpha u, alpha v) = theta(u, v) on basis pairs
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = theta.eval(&[g.alpha().col(i), g.alpha().col(j)]);
            if lhs != theta.value_at(&[i, j]) {
                return Err(Error::NotHomCochain(format!(
                    "theta∘(α∧α) differs from theta at the pair ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// One-dimensional extension with bracket [(u,s),(v,t)] = ([u,v], θ(u,v)).
///
/// θ must lie in C²_α(g); closedness is a reported property of the output,
/// not a precondition, so the converse of the extension theorem can be
/// exercised on non-closed θ.
pub fn central_extension(g: &HomLieAlgebra, theta: &Cochain) -> Result<HomLieAlgebra, Error> {
    check_scalar_two_cochain(g, theta)?;
    let n = g.dim();
    let mut structure = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = g.bracket_basis(i, j);
            v.push(theta.value_at(&[i, j])[0].clone());
            structure.insert((i, j), v);
        }
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
            l.push("z".into());
            ext.with_labels(l)
        }
        None => ext,
    })
}

/// The isomorphism f_h(u, s) = (u, s + f(u)) between the central extensions
/// of two cohomologous cocycles, plus the verification that it is one.
pub fn central_extension_isomorphism(
    g: &HomLieAlgebra,
    theta1: &Cochain,
    theta2: &Cochain,
    f: &Cochain,
) -> Result<(LinearMap, VerificationReport), Error> {
    check_scalar_two_cochain(g, theta1)?;
    check_scalar_two_cochain(g, theta2)?;
    let n = g.dim();
    if f.algebra_dim() != n || f.module_dim() != 1 || f.degree() != 1 {
        return Err(Error::DimensionMismatch(
            "the connecting cochain must be a scalar 1-cochain".into(),
        ));
    }
    for i in 0..n {
        if f.eval(&[g.alpha().col(i)]) != f.value_at(&[i]) {
            return Err(Error::NotHomCochain(format!("f∘α differs from f at basis vector {i}")));
        }
    }
    let trivial = Representation::trivial(g)?;
    let df = coboundary_apply(&trivial, f)?;
    if theta1.sub(theta2) != df {
        return Err(Error::NotCoboundary);
    }
    let mut matrix = Matrix::identity(n + 1);
    for i in 0..n {
        matrix[(n, i)] = f.value_at(&[i])[0].clone();
    }
    let map = LinearMap::new(matrix);
    let h1 = central_extension(g, theta1)?;
    let h2 = central_extension(g, theta2)?;
    let property = "central-extension isomorphism";
    let report = (|| {
        let twist_defect = map.matrix.mul(h1.alpha()).sub(&h2.alpha().mul(&map.matrix));
        if !twist_defect.is_zero() {
            let j = (0..n + 1)
                .find(|&j| !crate::linalg::vec_is_zero(&twist_defect.col(j)))
                .expect("nonzero matrix");
            return VerificationReport::fail(property, vec![j], twist_defect.col(j));
        }
        for i in 0..n + 1 {
            for j in i + 1..n + 1 {
                let lhs = map.apply(&h1.bracket_basis(i, j));
                let rhs = h2
                    .bracket(&map.matrix.col(i), &map.matrix.col(j))
                    .expect("map columns have the extension dimension");
                let defect = crate::linalg::vec_sub(&lhs, &rhs);
                if !crate::linalg::vec_is_zero(&defect) {
                    return VerificationReport::fail(property, vec![i, j], defect);
                }
            }
        }
        VerificationReport::ok(property)
    })();
    Ok((map, report))
}
