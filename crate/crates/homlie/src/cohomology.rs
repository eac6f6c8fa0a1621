//! Twisted cochain complexes and their cohomology.
//!
//! A k-cochain is a skew k-linear map g^∧k → V stored on strictly increasing
//! basis tuples. The hom-compatible subspace C^k_{α,A} consists of the f with
//! A∘f = f∘(α,…,α); the coboundary d_{ρ_A} maps it to degree k+1 and squares
//! to zero. Coordinates are ordered lexicographically by index tuple, then by
//! module coordinate, so subspaces of cochains compare structurally and, for
//! V = g in degree one, agree with the operator coordinates used by the
//! derivation module.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::VerificationReport;
use crate::error::Error;
use crate::linalg::{
    complement_representatives, quotient_dim, vec_add, vec_add_scaled, vec_is_zero, vec_neg,
    vec_zero, Matrix, Rational, Subspace, Vector,
};
use crate::representation::Representation;

/// Binomial coefficient, exact in usize for the sizes that occur here.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Strictly increasing k-tuples from {0, …, n−1} in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn tuple_rank(tuples: &[Vec<usize>], t: &[usize]) -> usize {
    tuples
        .binary_search_by(|probe| probe.as_slice().cmp(t))
        .expect("tuple must be strictly increasing and in range")
}

/// Skew multilinear map g^∧k → V, stored on strictly increasing index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    algebra_dim: usize,
    module_dim: usize,
    values: BTreeMap<Vec<usize>, Vector>,
}

impl Cochain {
    pub fn zero(algebra_dim: usize, module_dim: usize, degree: usize) -> Self {
        Cochain { degree, algebra_dim, module_dim, values: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Stored (tuple, value) pairs; tuples strictly increasing, values nonzero.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.values.iter()
    }

    /// Assigns f(e_{i₁},…,e_{i_k}); indices are normalized by skew-symmetry.
    ///
    /// Repeated indices are only legal with a zero value.
    pub fn set(&mut self, indices: &[usize], value: Vector) -> Result<(), Error> {
        if indices.len() != self.degree {
            return Err(Error::DimensionMismatch(format!(
                "cochain of degree {} given {} indices",
                self.degree,
                indices.len()
            )));
        }
        if value.len() != self.module_dim {
            return Err(Error::DimensionMismatch(format!(
                "cochain value has length {}, expected {}",
                value.len(),
                self.module_dim
            )));
        }
        if indices.iter().any(|&i| i >= self.algebra_dim) {
            return Err(Error::DimensionMismatch(format!(
                "cochain index out of range for algebra dimension {}",
                self.algebra_dim
            )));
        }
        let (sorted, sign) = sort_with_sign(indices);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            if vec_is_zero(&value) {
                return Ok(());
            }
            return Err(Error::DimensionMismatch(
                "repeated indices in a cochain entry must carry a zero value".into(),
            ));
        }
        let value = if sign < 0 { vec_neg(&value) } else { value };
        if vec_is_zero(&value) {
            self.values.remove(&sorted);
        } else {
            self.values.insert(sorted, value);
        }
        Ok(())
    }

    /// Value on a strictly increasing tuple (zero when absent).
    pub fn value_at(&self, indices: &[usize]) -> Vector {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        self.values.get(indices).cloned().unwrap_or_else(|| vec_zero(self.module_dim))
    }

    /// Evaluation on arbitrary basis tuples via full skew-symmetry.
    pub fn eval_basis(&self, indices: &[usize]) -> Vector {
        assert_eq!(indices.len(), self.degree, "argument count must equal degree");
        let (sorted, sign) = sort_with_sign(indices);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return vec_zero(self.module_dim);
        }
        let v = self.value_at(&sorted);
        if sign < 0 {
            vec_neg(&v)
        } else {
            v
        }
    }

    /// Full multilinear evaluation on coordinate vectors.
    ///
    /// The coefficient of the stored value at S = (s₁<…<s_k) is the
    /// determinant of the k×k matrix with entry (t, l) = args[t][s_l].
    pub fn eval(&self, args: &[Vector]) -> Vector {
        assert_eq!(args.len(), self.degree, "argument count must equal degree");
        for a in args {
            assert_eq!(a.len(), self.algebra_dim, "argument length must match algebra dim");
        }
        let k = self.degree;
        let mut out = vec_zero(self.module_dim);
        for (tuple, value) in &self.values {
            let mut minor = Matrix::zeros(k, k);
            for (t, arg) in args.iter().enumerate() {
                for (l, &s) in tuple.iter().enumerate() {
                    minor[(t, l)] = arg[s].clone();
                }
            }
            let c = minor.determinant();
            if !c.is_zero() {
                vec_add_scaled(&mut out, &c, value);
            }
        }
        out
    }

    /// Flat coordinates: lexicographic tuple rank, then module coordinate.
    pub fn to_coords(&self) -> Vector {
        let tuples = increasing_tuples(self.algebra_dim, self.degree);
        let mut coords = vec_zero(tuples.len() * self.module_dim);
        for (tuple, value) in &self.values {
            let r = tuple_rank(&tuples, tuple);
            for (a, x) in value.iter().enumerate() {
                coords[r * self.module_dim + a] = x.clone();
            }
        }
        coords
    }

    pub fn from_coords(
        algebra_dim: usize,
        module_dim: usize,
        degree: usize,
        coords: &[Rational],
    ) -> Self {
        let tuples = increasing_tuples(algebra_dim, degree);
        assert_eq!(coords.len(), tuples.len() * module_dim, "coordinate length must be C(n,k) * m");
        let mut c = Cochain::zero(algebra_dim, module_dim, degree);
        for (r, tuple) in tuples.iter().enumerate() {
            let value = coords[r * module_dim..(r + 1) * module_dim].to_vec();
            c.set(tuple, value).expect("tuples are strictly increasing");
        }
        c
    }

    /// Views an n×n operator as a g-valued 1-cochain (column j = f(e_j)).
    pub fn from_operator(m: &Matrix) -> Self {
        assert!(m.is_square(), "operator cochains come from square matrices");
        let n = m.rows();
        let mut c = Cochain::zero(n, n, 1);
        for j in 0..n {
            c.set(&[j], m.col(j)).expect("single indices are increasing");
        }
        c
    }

    /// Inverse of [`Cochain::from_operator`] for degree-1 g-valued cochains.
    pub fn to_operator(&self) -> Matrix {
        assert_eq!(self.degree, 1, "only degree-1 cochains are operators");
        assert_eq!(self.module_dim, self.algebra_dim, "operator cochains need V = g");
        Matrix::from_cols((0..self.algebra_dim).map(|j| self.value_at(&[j])).collect())
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.shape(), other.shape(), "cochain shapes must agree");
        let mut out = self.clone();
        for (tuple, value) in &other.values {
            let sum = vec_add(&out.value_at(tuple), value);
            out.set(tuple, sum).expect("stored tuples are valid");
        }
        out
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        let mut out = Cochain::zero(self.algebra_dim, self.module_dim, self.degree);
        if c.is_zero() {
            return out;
        }
        for (tuple, value) in &self.values {
            out.set(tuple, value.iter().map(|x| c * x).collect()).expect("stored tuples are valid");
        }
        out
    }

    fn shape(&self) -> (usize, usize, usize) {
        (self.degree, self.algebra_dim, self.module_dim)
    }
}

fn sort_with_sign(indices: &[usize]) -> (Vec<usize>, i32) {
    let mut v = indices.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (v, sign)
}

/// Basis of the hom-compatible cochains C^k_{α,A}(g; V).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCochainSpace {
    pub degree: usize,
    pub basis: Vec<Cochain>,
    space: Subspace,
}

impl HomCochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The same basis as a subspace of flat cochain coordinates.
    pub fn coordinate_space(&self) -> &Subspace {
        &self.space
    }
}

fn check_cochain_shape(rep: &Representation, f: &Cochain) -> Result<(), Error> {
    if f.algebra_dim() != rep.algebra().dim() || f.module_dim() != rep.module_dim() {
        return Err(Error::DimensionMismatch(format!(
            "cochain is ({}, {})-valued but the representation is ({}, {})",
            f.algebra_dim(),
            f.module_dim(),
            rep.algebra().dim(),
            rep.module_dim()
        )));
    }
    Ok(())
}

/// First violation of A∘f = f∘(α,…,α), if any.
fn hom_compatibility_defect(rep: &Representation, f: &Cochain) -> Option<(Vec<usize>, Vector)> {
    let g = rep.algebra();
    let n = g.dim();
    for tuple in increasing_tuples(n, f.degree()) {
        let lhs = rep.a().apply(&f.value_at(&tuple));
        let args: Vec<Vector> = tuple.iter().map(|&i| g.alpha().col(i)).collect();
        let rhs = f.eval(&args);
        let defect = crate::linalg::vec_sub(&lhs, &rhs);
        if !vec_is_zero(&defect) {
            return Some((tuple, defect));
        }
    }
    None
}

/// Membership in C^k_{α,A}, decided by the defining identity.
pub fn is_hom_cochain(rep: &Representation, f: &Cochain) -> Result<bool, Error> {
    check_cochain_shape(rep, f)?;
    Ok(hom_compatibility_defect(rep, f).is_none())
}

/// Kernel of f ↦ A∘f − f∘(α,…,α) inside the full degree-k cochain space.
///
/// In flat coordinates the constraint matrix entry at row (T, a), column
/// (S, b) is A_{a,b}·[S = T] − δ_{a,b}·det α[S|T], where α[S|T] is the k×k
/// minor of α with rows S and columns T.
pub fn hom_cochain_space(rep: &Representation, k: usize) -> Result<HomCochainSpace, Error> {
    let g = rep.algebra();
    let n = g.dim();
    let m = rep.module_dim();
    if k > n {
        return Err(Error::DegreeOutOfRange(format!("degree {k} exceeds the dimension {n}")));
    }
    let tuples = increasing_tuples(n, k);
    let dim = tuples.len() * m;
    let mut system = Matrix::zeros(dim, dim);
    for (t_rank, t) in tuples.iter().enumerate() {
        for (s_rank, s) in tuples.iter().enumerate() {
            let minor = g.alpha().minor_det(s, t);
            for a in 0..m {
                let row = t_rank * m + a;
                if s_rank == t_rank {
                    for b in 0..m {
                        let e = &mut system[(row, s_rank * m + b)];
                        *e += rep.a()[(a, b)].clone();
                    }
                }
                if !minor.is_zero() {
                    let e = &mut system[(row, s_rank * m + a)];
                    *e -= minor.clone();
                }
            }
        }
    }
    let space = system.kernel();
    let basis = space.basis().iter().map(|v| Cochain::from_coords(n, m, k, v)).collect();
    Ok(HomCochainSpace { degree: k, basis, space })
}

/// The twisted coboundary of a hom-cochain.
///
/// On (u_1,…,u_{k+1}) the value is
/// Σ_i (−1)^{i+1} ρ(α^k(u_i)) f(…,û_i,…) +
/// Σ_{i<j} (−1)^{i+j} f([u_i,u_j], α(u_1),…,û_i,…,û_j,…,α(u_{k+1})).
pub fn coboundary_apply(rep: &Representation, f: &Cochain) -> Result<Cochain, Error> {
    check_cochain_shape(rep, f)?;
    let g = rep.algebra();
    let n = g.dim();
    let m = rep.module_dim();
    let k = f.degree();
    if k > n {
        return Err(Error::DegreeOutOfRange(format!("degree {k} exceeds the dimension {n}")));
    }
    if let Some((tuple, _)) = hom_compatibility_defect(rep, f) {
        return Err(Error::NotHomCochain(format!(
            "A∘f differs from f∘α on the basis tuple {tuple:?}"
        )));
    }
    let alpha_k = g.alpha_power(k as i64).expect("nonnegative powers always exist");
    // action matrices of alpha^k(e_i)
    let action: Vec<Matrix> = (0..n).map(|i| rep.rho_of(&alpha_k.col(i))).collect();
    let alpha_cols: Vec<Vector> = (0..n).map(|i| g.alpha().col(i)).collect();
    let mut out = Cochain::zero(n, m, k + 1);
    for tuple in increasing_tuples(n, k + 1) {
        let mut value = vec_zero(m);
        for (p, &up) in tuple.iter().enumerate() {
            let mut rest = tuple.clone();
            rest.remove(p);
            let t = action[up].apply(&f.value_at(&rest));
            if p % 2 == 0 {
                value = vec_add(&value, &t);
            } else {
                value = crate::linalg::vec_sub(&value, &t);
            }
        }
        for p in 0..tuple.len() {
            for q in p + 1..tuple.len() {
                let mut args: Vec<Vector> = Vec::with_capacity(k);
                args.push(g.bracket_basis(tuple[p], tuple[q]));
                for (r, &ur) in tuple.iter().enumerate() {
                    if r != p && r != q {
                        args.push(alpha_cols[ur].clone());
                    }
                }
                let t = f.eval(&args);
                if (p + q) % 2 == 1 {
                    // 1-based (i, j) have sign (−1)^{i+j} = (−1)^{p+q}
                    value = crate::linalg::vec_sub(&value, &t);
                } else {
                    value = vec_add(&value, &t);
                }
            }
        }
        out.set(&tuple, value).expect("tuples are strictly increasing");
    }
    Ok(out)
}

/// Matrix of d on the hom-cochain basis, in full degree-(k+1) coordinates.
pub fn coboundary_matrix(rep: &Representation, k: usize) -> Result<Matrix, Error> {
    let g = rep.algebra();
    let n = g.dim();
    let m = rep.module_dim();
    let space = hom_cochain_space(rep, k)?;
    let out_rows = binomial(n, k + 1) * m;
    if space.dim() == 0 {
        return Ok(Matrix::zeros(out_rows, 0));
    }
    let cols = space
        .basis
        .iter()
        .map(|f| Ok(coboundary_apply(rep, f)?.to_coords()))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Matrix::from_cols(cols))
}

/// Closed and exact dimensions plus representatives of a complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyResult {
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    pub representatives: Vec<Cochain>,
}

/// Z^k: closed hom-cochains, as a subspace of full degree-k coordinates.
pub fn closed_cochain_space(rep: &Representation, k: usize) -> Result<Subspace, Error> {
    let n = rep.algebra().dim();
    let m = rep.module_dim();
    let ambient = binomial(n, k) * m;
    let space = hom_cochain_space(rep, k)?;
    if space.dim() == 0 {
        return Ok(Subspace::zero(ambient));
    }
    let coeff_kernel = coboundary_matrix(rep, k)?.kernel();
    let vectors: Vec<Vector> = coeff_kernel
        .basis()
        .iter()
        .map(|coeffs| {
            let mut v = vec_zero(ambient);
            for (q, c) in coeffs.iter().enumerate() {
                vec_add_scaled(&mut v, c, &space.space.basis()[q]);
            }
            v
        })
        .collect();
    Ok(Subspace::from_vectors(ambient, vectors))
}

/// B^k: coboundaries from degree k−1, as a subspace of full coordinates.
pub fn exact_cochain_space(rep: &Representation, k: usize) -> Result<Subspace, Error> {
    let n = rep.algebra().dim();
    let m = rep.module_dim();
    let ambient = binomial(n, k) * m;
    if k == 0 {
        return Ok(Subspace::zero(ambient));
    }
    let d_prev = coboundary_matrix(rep, k - 1)?;
    let cols: Vec<Vector> = (0..d_prev.cols()).map(|j| d_prev.col(j)).collect();
    Ok(Subspace::from_vectors(ambient, cols))
}

/// H^k = Z^k / B^k for the complex (C^•_{α,A}, d_{ρ_A}).
///
/// Degrees beyond the algebra dimension are identically zero spaces and give
/// an all-zero result rather than an error.
pub fn cohomology(rep: &Representation, k: usize) -> Result<CohomologyResult, Error> {
    let g = rep.algebra();
    let n = g.dim();
    let m = rep.module_dim();
    if k > n {
        return Ok(CohomologyResult {
            degree: k,
            dim_z: 0,
            dim_b: 0,
            dim_h: 0,
            representatives: Vec::new(),
        });
    }
    let z = closed_cochain_space(rep, k)?;
    let b = exact_cochain_space(rep, k)?;
    let dim_h = quotient_dim(&z, &b)?;
    let representatives = complement_representatives(&z, &b)?
        .into_iter()
        .map(|v| Cochain::from_coords(n, m, k, &v))
        .collect();
    Ok(CohomologyResult { degree: k, dim_z: z.dim(), dim_b: b.dim(), dim_h, representatives })
}

/// Applies d twice to every hom-basis element in degrees 0..=max_degree.
///
/// Reports the first failure, either the image escaping the hom-compatible
/// subspace or a nonzero composite, with [degree, basis index, tuple…].
pub fn d_squared_is_zero(rep: &Representation, max_degree: usize) -> VerificationReport {
    let property = "d∘d = 0";
    let n = rep.algebra().dim();
    for k in 0..=max_degree.min(n) {
        let space = match hom_cochain_space(rep, k) {
            Ok(s) => s,
            Err(_) => break,
        };
        for (idx, f) in space.basis.iter().enumerate() {
            let df = match coboundary_apply(rep, f) {
                Ok(df) => df,
                Err(_) => unreachable!("basis elements are hom-cochains by construction"),
            };
            if let Some((tuple, defect)) = hom_compatibility_defect(rep, &df) {
                let mut indices = vec![k, idx];
                indices.extend(tuple);
                return VerificationReport::fail(property, indices, defect);
            }
            if df.degree() > n {
                continue;
            }
            let ddf = coboundary_apply(rep, &df)
                .expect("df passed the hom-compatibility check just above");
            if !ddf.is_zero() {
                let (tuple, value) =
                    ddf.entries().next().map(|(t, v)| (t.clone(), v.clone())).expect("nonzero");
                let mut indices = vec![k, idx];
                indices.extend(tuple);
                return VerificationReport::fail(property, indices, value);
            }
        }
    }
    VerificationReport::ok(property)
}
