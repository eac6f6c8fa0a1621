//! Acceptance suite: one test per criterion, exact arithmetic throughout.
//!
//! Every check is zero-tolerance. The corpus is loaded verbatim from the
//! shipped data files. Each test prints a single PASS line (visible with
//! `cargo test --test acceptance -- --nocapture`); a failure panics with the
//! offending algebra, representation and indices.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use homlie::algebra::HomLieAlgebra;
use homlie::cohomology::{
    closed_cochain_space, coboundary_apply, coboundary_matrix, cohomology, hom_cochain_space,
    is_hom_cochain, Cochain, HomCochainSpace,
};
use homlie::deformation;
use homlie::derivation::{
    commutator, derivation_extension, derivation_space, inner_derivation_space, is_derivation,
};
use homlie::linalg::{fixed_space, rat_int, Matrix, Rational, Subspace};
use homlie::representation::{central_extension, is_representation, Representation};
use homlie::{io, LinearMap};

fn corpus() -> Vec<(String, HomLieAlgebra)> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    ["A1", "A2", "A3", "S3", "H3", "H3q"]
        .iter()
        .map(|name| {
            let g = io::read_algebra(dir.join(format!("{name}.json")))
                .unwrap_or_else(|e| panic!("loading fixture {name}: {e}"));
            (name.to_string(), g)
        })
        .collect()
}

/// trivial, ad_{−1}, ad₀, ad₁; all defined since the corpus is regular.
fn representation_family(g: &HomLieAlgebra) -> Vec<(String, Representation)> {
    let mut reps = vec![("trivial".to_string(), Representation::trivial(g).unwrap())];
    for s in [-1, 0, 1] {
        reps.push((format!("ad_{s}"), Representation::adjoint(g, s).unwrap()));
    }
    reps
}

fn rand_rat(rng: &mut StdRng) -> Rational {
    homlie::linalg::rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn rand_nonzero_rat(rng: &mut StdRng) -> Rational {
    loop {
        let r = rand_rat(rng);
        if r != rat_int(0) {
            return r;
        }
    }
}

fn rand_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Matrix {
    Matrix::new(rows, cols, (0..rows * cols).map(|_| rand_rat(rng)).collect())
}

/// Random element of the span of a hom-cochain basis.
fn rand_cochain_in(rng: &mut StdRng, space: &HomCochainSpace, n: usize, m: usize) -> Cochain {
    let mut c = Cochain::zero(n, m, space.degree);
    for b in &space.basis {
        c = c.add(&b.scale(&rand_rat(rng)));
    }
    c
}

/// Columns = echelon basis vectors of a subspace.
fn basis_columns(space: &Subspace) -> Matrix {
    Matrix::from_cols(space.basis().to_vec())
}

#[test]
fn criterion_01_d_squared_is_zero() {
    for (name, g) in corpus() {
        let n = g.dim();
        for (rep_name, rep) in representation_family(&g) {
            for k in 0..n {
                let d_k = coboundary_matrix(&rep, k).unwrap();
                if d_k.cols() == 0 {
                    continue;
                }
                let next = hom_cochain_space(&rep, k + 1).unwrap();
                if next.dim() == 0 {
                    assert!(
                        d_k.is_zero(),
                        "{name}/{rep_name}: d at degree {k} escapes the zero hom space"
                    );
                    continue;
                }
                // express the image in the degree-(k+1) hom basis, then compose
                let basis = basis_columns(next.coordinate_space());
                let coeffs: Vec<_> = (0..d_k.cols())
                    .map(|j| {
                        basis.solve(&d_k.col(j)).unwrap_or_else(|| {
                            panic!("{name}/{rep_name}: d image escapes hom space at degree {k}")
                        })
                    })
                    .collect();
                let composite =
                    coboundary_matrix(&rep, k + 1).unwrap().mul(&Matrix::from_cols(coeffs));
                assert!(composite.is_zero(), "{name}/{rep_name}: d∘d ≠ 0 from degree {k}");
            }
        }
    }
    println!("criterion 1 (d∘d = 0, composed coboundary matrices): PASS");
}

#[test]
fn criterion_02_coboundary_well_definedness() {
    for (name, g) in corpus() {
        for (rep_name, rep) in representation_family(&g) {
            for k in 0..=g.dim() {
                for (idx, f) in hom_cochain_space(&rep, k).unwrap().basis.iter().enumerate() {
                    let df = coboundary_apply(&rep, f).unwrap();
                    assert!(
                        is_hom_cochain(&rep, &df).unwrap(),
                        "{name}/{rep_name}: d of hom-basis element {idx} at degree {k} \
                         is not a hom-cochain"
                    );
                }
            }
        }
    }
    println!("criterion 2 (well-definedness of d on hom-cochains): PASS");
}

#[test]
fn criterion_03_one_cocycles_are_derivations() {
    for (name, g) in corpus() {
        for s in [-1i64, 0] {
            let rep = Representation::adjoint(&g, s).unwrap();
            let z1 = closed_cochain_space(&rep, 1).unwrap();
            let der = derivation_space(&g, s + 1).unwrap();
            assert_eq!(
                z1,
                der.space,
                "{name}: Z¹(ad_{s}) and Der_alpha^{} differ as echelon bases",
                s + 1
            );
        }
    }
    println!("criterion 3 (Z¹(ad_s) = Der_{{α^{{s+1}}}} structurally, s ∈ {{−1,0}}): PASS");
}

#[test]
fn criterion_04_cohomology_dimension_formulas() {
    for (name, g) in corpus() {
        let trivial = Representation::trivial(&g).unwrap();
        assert_eq!(cohomology(&trivial, 0).unwrap().dim_h, 1, "{name}: H⁰(trivial)");

        let ad_m1 = Representation::adjoint(&g, -1).unwrap();
        let ad_0 = Representation::adjoint(&g, 0).unwrap();
        let der0 = derivation_space(&g, 0).unwrap();
        let inn0 = inner_derivation_space(&g, 0).unwrap();
        let der1 = derivation_space(&g, 1).unwrap();
        let inn1 = inner_derivation_space(&g, 1).unwrap();
        assert_eq!(
            cohomology(&ad_m1, 1).unwrap().dim_h,
            der0.dim() - inn0.dim(),
            "{name}: H¹(ad_{{−1}}) vs Der_α⁰/Inn_α⁰"
        );
        assert_eq!(
            cohomology(&ad_0, 1).unwrap().dim_h,
            der1.dim() - inn1.dim(),
            "{name}: H¹(ad₀) vs Der_α/Inn_α"
        );
        assert_eq!(
            cohomology(&ad_m1, 0).unwrap().dim_h,
            fixed_space(g.alpha()).intersect(&g.center()).dim(),
            "{name}: H⁰(ad_{{−1}}) vs Fix(α) ∩ center"
        );
    }
    // concrete targets
    let corpus = corpus();
    let s3 = &corpus.iter().find(|(n, _)| n == "S3").unwrap().1;
    assert_eq!(derivation_space(s3, 0).unwrap().dim(), 3);
    assert_eq!(inner_derivation_space(s3, 0).unwrap().dim(), 3);
    assert_eq!(cohomology(&Representation::adjoint(s3, -1).unwrap(), 1).unwrap().dim_h, 0);
    let a2 = &corpus.iter().find(|(n, _)| n == "A2").unwrap().1;
    assert_eq!(derivation_space(a2, 0).unwrap().dim(), 2);
    assert_eq!(inner_derivation_space(a2, 0).unwrap().dim(), 2);
    assert_eq!(cohomology(&Representation::adjoint(a2, -1).unwrap(), 1).unwrap().dim_h, 0);
    println!("criterion 4 (H⁰/H¹ dimension formulas and concrete targets): PASS");
}

#[test]
fn criterion_05_extension_theorems_as_iff() {
    let mut rng = StdRng::seed_from_u64(0x5EED_0005);
    for (name, g) in corpus() {
        let n = g.dim();
        let trivial = Representation::trivial(&g).unwrap();

        // central extensions: 50 random θ ∈ C²_α
        let theta_space = hom_cochain_space(&trivial, 2).unwrap();
        let (mut pos, mut neg) = (0usize, 0usize);
        for _ in 0..50 {
            let theta = rand_cochain_in(&mut rng, &theta_space, n, 1);
            let ext = central_extension(&g, &theta).unwrap();
            let passes = ext.verify_hom_jacobi().holds && ext.is_multiplicative().holds;
            let closed = coboundary_apply(&trivial, &theta).unwrap().is_zero();
            assert_eq!(passes, closed, "{name}: extension verdict differs from closedness");
            if closed {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        assert!(pos >= 5, "{name}: expected at least 5 closed θ, got {pos}");
        // On this corpus every hom-compatible 2-cochain is closed (dimension 2
        // kills C³; S3 and H3 are unimodular; A3 and H3q have C²_α = 0), so
        // negative θ instances cannot exist. Verify that exhaustively instead
        // of demanding samples of an empty set.
        let z2 = closed_cochain_space(&trivial, 2).unwrap();
        assert_eq!(z2.dim(), theta_space.dim(), "{name}: expected every θ ∈ C²_α to be closed");
        assert_eq!(neg, 0, "{name}: found a non-closed θ despite Z² = C²_α");

        // derivation extensions: 50 random D, half drawn near Der_α
        let der1 = derivation_space(&g, 1).unwrap();
        let (mut pos, mut neg) = (0usize, 0usize);
        for trial in 0..50 {
            let d = if trial % 2 == 0 {
                let mut d = Matrix::zeros(n, n);
                for op in der1.operators() {
                    d = d.add(&op.scale(&rand_rat(&mut rng)));
                }
                d
            } else {
                rand_matrix(&mut rng, n, n)
            };
            let ext = derivation_extension(&g, &d).unwrap();
            let passes = ext.verify_hom_jacobi().holds && ext.is_multiplicative().holds;
            let member = is_derivation(&g, 1, &d).unwrap().holds;
            assert_eq!(passes, member, "{name}: extension verdict differs from membership");
            if member {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        assert!(pos >= 5, "{name}: expected at least 5 α-derivations, got {pos}");
        if name == "A1" {
            // On the abelian algebra every operator is an α-derivation, so
            // negatives cannot exist; verify exhaustively.
            assert_eq!(der1.dim(), n * n, "A1: expected Der_α to be all operators");
            assert_eq!(neg, 0, "A1: found a non-derivation despite Der_α = gl(g)");
        } else {
            assert!(neg >= 5, "{name}: expected at least 5 non-derivations, got {neg}");
        }
    }
    println!(
        "criterion 5 (extension theorems as iff over 50 random θ and D per algebra): PASS \
         (θ-negatives are proven impossible on this corpus: Z² = C²_α throughout; \
         D-negatives proven impossible on A1: Der_α = gl(g))"
    );
}

#[test]
fn criterion_06_semidirect_products() {
    let mut rng = StdRng::seed_from_u64(0x5EED_0006);
    for (name, g) in corpus() {
        for (rep_name, rep) in representation_family(&g) {
            let product = rep.semidirect_product();
            assert!(
                product.verify_hom_jacobi().holds && product.is_multiplicative().holds,
                "{name}/{rep_name}: semidirect product fails a verifier"
            );
        }
        // 20 perturbed non-representations must make the product fail
        let base = Representation::adjoint(&g, 0).unwrap();
        let n = g.dim();
        for trial in 0..20 {
            let rho = loop {
                let mut rho = base.rho().to_vec();
                for _ in 0..=trial % 3 + 1 {
                    let i = rng.gen_range(0..n);
                    let r = rng.gen_range(0..n);
                    let c = rng.gen_range(0..n);
                    let bump = rand_nonzero_rat(&mut rng);
                    let e = &mut rho[i][(r, c)];
                    *e += bump;
                }
                if !is_representation(&g, &rho, g.alpha()).unwrap().holds {
                    break rho;
                }
            };
            let candidate = Representation::new_unchecked(&g, rho, g.alpha().clone()).unwrap();
            let product = candidate.semidirect_product();
            assert!(
                !product.verify_hom_jacobi().holds || !product.is_multiplicative().holds,
                "{name}: perturbed non-representation produced a verified product"
            );
        }
    }
    println!("criterion 6 (semidirect products verify iff the data is a representation): PASS");
}

#[test]
fn criterion_07_morphism_iff_graph() {
    let mut rng = StdRng::seed_from_u64(0x5EED_0007);
    let corpus = corpus();
    for trial in 0..100 {
        let (_, g) = &corpus[rng.gen_range(0..corpus.len())];
        let (_, k) = &corpus[rng.gen_range(0..corpus.len())];
        let phi = match trial % 10 {
            // seed the sample with guaranteed morphisms
            0 => LinearMap::new(Matrix::zeros(k.dim(), g.dim())),
            1 if g.dim() == k.dim() => LinearMap::identity(g.dim()),
            _ => LinearMap::new(rand_matrix(&mut rng, k.dim(), g.dim())),
        };
        assert_eq!(
            g.is_morphism(k, &phi).unwrap(),
            g.graph_is_subalgebra(k, &phi).unwrap(),
            "disagreement at trial {trial}"
        );
    }
    println!("criterion 7 (is_morphism agrees with graph_is_subalgebra on 100 random maps): PASS");
}

#[test]
fn criterion_08_derivation_commutator_closure() {
    for (name, g) in corpus() {
        for k in [0i64, 1] {
            for s in [0i64, 1] {
                let dk = derivation_space(&g, k).unwrap();
                let ds = derivation_space(&g, s).unwrap();
                for a in dk.operators() {
                    for b in ds.operators() {
                        let c = commutator(&a, &b).unwrap();
                        assert!(
                            is_derivation(&g, k + s, &c).unwrap().holds,
                            "{name}: [Der_α^{k}, Der_α^{s}] escapes Der_α^{}",
                            k + s
                        );
                    }
                }
            }
        }
    }
    println!("criterion 8 (commutators close into the summed grade): PASS");
}

#[test]
fn criterion_09_nijenhuis_triviality() {
    let corpus = corpus();
    let a2 = &corpus.iter().find(|(n, _)| n == "A2").unwrap().1;
    let candidates = [
        Matrix::identity(2).scale(&homlie::linalg::rat(3, 2)),
        Matrix::identity(2).scale(&rat_int(-2)),
        Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]),
    ];
    for n_op in &candidates {
        assert!(deformation::is_hom_nijenhuis(a2, n_op).unwrap().holds);
        let datum = deformation::nijenhuis_bracket(a2, n_op).unwrap();
        assert!(datum.generates_deformation());
        assert!(deformation::generates_deformation(a2, &datum.omega).unwrap().holds);
        // exact t-coefficient identities
        assert!(deformation::check_trivializes(a2, n_op).unwrap().holds);
        for t in [rat_int(1), rat_int(-1), rat_int(2)] {
            let deformed = deformation::deformed_bracket_at(a2, &datum.omega, &t).unwrap();
            assert!(deformed.verify_hom_jacobi().holds, "t = {t}");
            assert!(deformed.is_multiplicative().holds, "t = {t}");
            // sampled transport cross-check of the coefficient identities
            let tt = deformation::transport(n_op, &t);
            for i in 0..2 {
                for j in i + 1..2 {
                    assert_eq!(
                        tt.apply(&deformed.bracket_basis(i, j)),
                        a2.bracket(&tt.col(i), &tt.col(j)).unwrap(),
                        "t = {t}"
                    );
                }
            }
        }
    }
    println!("criterion 9 (hom-Nijenhuis operators generate trivial deformations on A2): PASS");
}

#[test]
fn criterion_10_central_extension_of_a1_is_heisenberg() {
    let corpus = corpus();
    let a1 = &corpus.iter().find(|(n, _)| n == "A1").unwrap().1;
    let h3 = &corpus.iter().find(|(n, _)| n == "H3").unwrap().1;
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let theta = io::read_cochain(dir.join("theta_A1.json"), 2).unwrap();
    let ext = central_extension(a1, &theta).unwrap();
    assert!(ext.same_structure(h3), "central extension of A1 by e1*∧e2* is not H3");
    println!("criterion 10 (A1 extended by e1*∧e2* is the Heisenberg algebra): PASS");
}
