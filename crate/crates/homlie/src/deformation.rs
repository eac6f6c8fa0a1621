//! One-parameter deformations [·,·]_t = [·,·] + tω and hom-Nijenhuis operators.
//!
//! A g-valued 2-cochain ω commuting with α generates a deformation of a
//! regular hom-Lie algebra when (i) ω is closed for the α⁻¹-adjoint
//! representation and (ii) ω satisfies the hom-Jacobi identity on its own.
//! A hom-Nijenhuis operator N produces such an ω = [·,·]_N whose deformation
//! is trivialized by T_t = Id + tN; triviality is checked coefficient-wise in
//! t, which is an exact polynomial identity.

use crate::algebra::{HomLieAlgebra, VerificationReport};
use crate::cohomology::Cochain;
use crate::error::Error;
use crate::linalg::{basis_vec, vec_add, vec_is_zero, vec_sub, Matrix, Rational, Vector};

/// A 2-cochain with the two deformation conditions evaluated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationDatum {
    pub omega: Cochain,
    /// Condition (i): closedness for the α⁻¹-adjoint representation.
    pub closed: bool,
    /// Condition (ii): ω satisfies the hom-Jacobi identity by itself.
    pub omega_hom_jacobi: bool,
}

impl DeformationDatum {
    pub fn new(g: &HomLieAlgebra, omega: Cochain) -> Result<Self, Error> {
        check_omega(g, &omega)?;
        let closed = closedness_defect(g, &omega).is_none();
        let omega_hom_jacobi = omega_jacobi_defect(g, &omega).is_none();
        Ok(DeformationDatum { omega, closed, omega_hom_jacobi })
    }

    pub fn generates_deformation(&self) -> bool {
        self.closed && self.omega_hom_jacobi
    }
}

fn check_omega(g: &HomLieAlgebra, omega: &Cochain) -> Result<(), Error> {
    if !g.is_regular() {
        return Err(Error::NotRegular("deformations are defined for regular algebras".into()));
    }
    if omega.degree() != 2 || omega.algebra_dim() != g.dim() || omega.module_dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "omega must be a g-valued 2-cochain on a {}-dimensional algebra",
            g.dim()
        )));
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = omega.eval(&[g.alpha().col(i), g.alpha().col(j)]);
            let rhs = g.alpha().apply(&omega.value_at(&[i, j]));
            if lhs != rhs {
                return Err(Error::NotHomCochain(format!(
                    "omega does not commute with alpha at the pair ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// First triple where ω(αu,[v,w]) + [αu, ω(v,w)] + c.p. is nonzero.
fn closedness_defect(g: &HomLieAlgebra, omega: &Cochain) -> Option<(Vec<usize>, Vector)> {
    cyclic_defect(g, omega, |g, omega, u, v, w| {
        let t1 = omega.eval(&[g.alpha().apply(u), g.bracket(v, w).unwrap()]);
        let t2 = g.bracket(&g.alpha().apply(u), &omega.eval(&[v.clone(), w.clone()])).unwrap();
        vec_add(&t1, &t2)
    })
}

/// First triple where ω(αu, ω(v,w)) + c.p. is nonzero.
fn omega_jacobi_defect(g: &HomLieAlgebra, omega: &Cochain) -> Option<(Vec<usize>, Vector)> {
    cyclic_defect(g, omega, |g, omega, u, v, w| {
        omega.eval(&[g.alpha().apply(u), omega.eval(&[v.clone(), w.clone()])])
    })
}

fn cyclic_defect(
    g: &HomLieAlgebra,
    omega: &Cochain,
    term: impl Fn(&HomLieAlgebra, &Cochain, &Vector, &Vector, &Vector) -> Vector,
) -> Option<(Vec<usize>, Vector)> {
    let n = g.dim();
    let basis: Vec<Vector> = (0..n).map(|i| basis_vec(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (u, v, w) = (&basis[i], &basis[j], &basis[k]);
                let mut defect = term(g, omega, u, v, w);
                defect = vec_add(&defect, &term(g, omega, v, w, u));
                defect = vec_add(&defect, &term(g, omega, w, u, v));
                if !vec_is_zero(&defect) {
                    return Some((vec![i, j, k], defect));
                }
            }
        }
    }
    None
}

/// Checks the two conditions for [·,·] + tω to be hom-Lie for every t.
pub fn generates_deformation(
    g: &HomLieAlgebra,
    omega: &Cochain,
) -> Result<VerificationReport, Error> {
    check_omega(g, omega)?;
    let property = "generates-deformation";
    if let Some((triple, defect)) = closedness_defect(g, omega) {
        return Ok(VerificationReport::fail(property, triple, defect));
    }
    // cross-check: condition (i) is exactly d_{-1} omega = 0
    debug_assert!({
        let rep = crate::representation::Representation::adjoint(g, -1)?;
        crate::cohomology::coboundary_apply(&rep, omega)?.is_zero()
    });
    if let Some((triple, defect)) = omega_jacobi_defect(g, omega) {
        return Ok(VerificationReport::fail(property, triple, defect));
    }
    Ok(VerificationReport::ok(property))
}

/// The algebra (g, [·,·] + tω, α) at one parameter value.
pub fn deformed_bracket_at(
    g: &HomLieAlgebra,
    omega: &Cochain,
    t: &Rational,
) -> Result<HomLieAlgebra, Error> {
    check_omega(g, omega)?;
    let n = g.dim();
    let mut structure = std::collections::BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = g.bracket_basis(i, j);
            crate::linalg::vec_add_scaled(&mut v, t, &omega.value_at(&[i, j]));
            structure.insert((i, j), v);
        }
    }
    let deformed = HomLieAlgebra::new(n, structure, g.alpha().clone())?;
    Ok(match g.basis_labels() {
        Some(labels) => deformed.with_labels(labels.to_vec()),
        None => deformed,
    })
}

fn check_commutes(g: &HomLieAlgebra, n_op: &Matrix) -> Result<(), Error> {
    if n_op.rows() != g.dim() || n_op.cols() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} but the algebra has dimension {}",
            n_op.rows(),
            n_op.cols(),
            g.dim()
        )));
    }
    if n_op.mul(g.alpha()) != g.alpha().mul(n_op) {
        return Err(Error::NotCommutingWithAlpha);
    }
    Ok(())
}

/// [u,v]_N = [Nu,v] + [u,Nv] − N[u,v] on basis pairs.
fn nijenhuis_bracket_value(g: &HomLieAlgebra, n_op: &Matrix, i: usize, j: usize) -> Vector {
    let n = g.dim();
    let t1 = g.bracket(&n_op.col(i), &basis_vec(n, j)).expect("operator columns match");
    let t2 = g.bracket(&basis_vec(n, i), &n_op.col(j)).expect("operator columns match");
    let t3 = n_op.apply(&g.bracket_basis(i, j));
    vec_sub(&vec_add(&t1, &t2), &t3)
}

/// The deformed-bracket cochain ω = [·,·]_N of an operator commuting with α.
///
/// For N ∈ C¹_α(g;g) this equals the α⁻¹-adjoint coboundary of N viewed as a
/// 1-cochain.
pub fn nijenhuis_bracket(g: &HomLieAlgebra, n_op: &Matrix) -> Result<DeformationDatum, Error> {
    check_commutes(g, n_op)?;
    let n = g.dim();
    let mut omega = Cochain::zero(n, n, 2);
    for i in 0..n {
        for j in i + 1..n {
            omega.set(&[i, j], nijenhuis_bracket_value(g, n_op, i, j))?;
        }
    }
    DeformationDatum::new(g, omega)
}

/// Checks [Nu, Nv] = N[u,v]_N on all basis pairs.
pub fn is_hom_nijenhuis(g: &HomLieAlgebra, n_op: &Matrix) -> Result<VerificationReport, Error> {
    check_commutes(g, n_op)?;
    let property = "hom-Nijenhuis";
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs =
                g.bracket(&n_op.col(i), &n_op.col(j)).expect("operator columns match the algebra");
            let rhs = n_op.apply(&nijenhuis_bracket_value(g, n_op, i, j));
            let defect = vec_sub(&lhs, &rhs);
            if !vec_is_zero(&defect) {
                return Ok(VerificationReport::fail(property, vec![i, j], defect));
            }
        }
    }
    Ok(VerificationReport::ok(property))
}

/// T_t = Id + tN, the transport trivializing the deformation generated by N.
pub fn transport(n_op: &Matrix, t: &Rational) -> Matrix {
    Matrix::identity(n_op.rows()).add(&n_op.scale(t))
}

/// Verifies T_t[u,v]_t = [T_t u, T_t v] as a polynomial identity in t.
///
/// Coefficients are matched exactly on all basis pairs: the t¹ terms require
/// [u,v]_N + N[u,v] = [Nu,v] + [u,Nv] and the t² terms N[u,v]_N = [Nu,Nv].
pub fn check_trivializes(g: &HomLieAlgebra, n_op: &Matrix) -> Result<VerificationReport, Error> {
    check_commutes(g, n_op)?;
    if !is_hom_nijenhuis(g, n_op)?.holds {
        return Err(Error::NotNijenhuis);
    }
    let property = "trivializes";
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let n = g.dim();
            let omega_ij = nijenhuis_bracket_value(g, n_op, i, j);
            let linear_lhs = vec_add(&omega_ij, &n_op.apply(&g.bracket_basis(i, j)));
            let linear_rhs = vec_add(
                &g.bracket(&n_op.col(i), &basis_vec(n, j)).expect("operator columns match"),
                &g.bracket(&basis_vec(n, i), &n_op.col(j)).expect("operator columns match"),
            );
            let linear_defect = vec_sub(&linear_lhs, &linear_rhs);
            if !vec_is_zero(&linear_defect) {
                return Ok(VerificationReport::fail(property, vec![i, j], linear_defect));
            }
            let quadratic_defect = vec_sub(
                &n_op.apply(&omega_ij),
                &g.bracket(&n_op.col(i), &n_op.col(j)).expect("operator columns match"),
            );
            if !vec_is_zero(&quadratic_defect) {
                return Ok(VerificationReport::fail(property, vec![i, j], quadratic_defect));
            }
        }
    }
    Ok(VerificationReport::ok(property))
}
