//! Small standard algebras used throughout the tests and shipped as data files.

use crate::algebra::HomLieAlgebra;
use crate::linalg::Matrix;

/// Two-dimensional abelian algebra, identity twist.
pub fn abelian2() -> HomLieAlgebra {
    HomLieAlgebra::from_i64(2, &[], Matrix::identity(2))
        .unwrap()
        .with_labels(vec!["e1".into(), "e2".into()])
}

/// [e1, e2] = e2 with identity twist.
pub fn solvable2() -> HomLieAlgebra {
    HomLieAlgebra::from_i64(2, &[(0, 1, &[0, 1])], Matrix::identity(2))
        .unwrap()
        .with_labels(vec!["e1".into(), "e2".into()])
}

/// [e1, e2] = e2 with twist diag(1, 2).
pub fn solvable2_twisted() -> HomLieAlgebra {
    HomLieAlgebra::from_i64(2, &[(0, 1, &[0, 1])], Matrix::from_i64_rows(&[&[1, 0], &[0, 2]]))
        .unwrap()
        .with_labels(vec!["e1".into(), "e2".into()])
}

/// sl₂ in the basis (h, e, f): [h,e] = 2e, [h,f] = −2f, [e,f] = h; identity twist.
pub fn sl2() -> HomLieAlgebra {
    HomLieAlgebra::from_i64(
        3,
        &[(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])],
        Matrix::identity(3),
    )
    .unwrap()
    .with_labels(vec!["h".into(), "e".into(), "f".into()])
}

/// Heisenberg algebra [e1, e2] = e3, identity twist.
pub fn heisenberg3() -> HomLieAlgebra {
    HomLieAlgebra::from_i64(3, &[(0, 1, &[0, 0, 1])], Matrix::identity(3))
        .unwrap()
        .with_labels(vec!["e1".into(), "e2".into(), "e3".into()])
}

/// Heisenberg brackets with twist diag(3, 1, 3).
pub fn heisenberg3_twisted() -> HomLieAlgebra {
    HomLieAlgebra::from_i64(
        3,
        &[(0, 1, &[0, 0, 1])],
        Matrix::from_i64_rows(&[&[3, 0, 0], &[0, 1, 0], &[0, 0, 3]]),
    )
    .unwrap()
    .with_labels(vec!["e1".into(), "e2".into(), "e3".into()])
}

/// The whole corpus with its conventional names.
pub fn all() -> Vec<(&'static str, HomLieAlgebra)> {
    vec![
        ("A1", abelian2()),
        ("A2", solvable2()),
        ("A3", solvable2_twisted()),
        ("S3", sl2()),
        ("H3", heisenberg3()),
        ("H3q", heisenberg3_twisted()),
    ]
}

/// The regular members of the corpus (here: all of them).
pub fn regular() -> Vec<(&'static str, HomLieAlgebra)> {
    all().into_iter().filter(|(_, g)| g.is_regular()).collect()
}
