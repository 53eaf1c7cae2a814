//! The acceptance suite: one test per headline guarantee of the library.
//! Each test is self-contained and checks exact identities only; the
//! harness prints one pass/fail line per criterion.

use hopfkit::algebra::StructureAlgebra;
use hopfkit::gallery::{
    self, sweedler_hopf, sweedler_j_lambda, sweedler_r_g, sweedler_r_lambda, GalleryObject,
};
use hopfkit::group::{FiniteGroup, Subgroup};
use hopfkit::hopf::{
    hopf_iso_check, signed_flip, tensor_inv, tensor_mul, HopfPresentation, TensorSquareElement,
};
use hopfkit::linalg::Mat;
use hopfkit::onecocycle::{dim16_datum, dim36_datum, rmatrix_from_cocycle};
use hopfkit::pointed_super::{
    bosonize, build_hd, exp_twist, hn_datum, ordinary_to_super_r, s4_check,
    super_to_ordinary_r, supergroup_algebra, unbosonize, SuperGroupDatum,
};
use hopfkit::scalar::{rat, Cyc};
use hopfkit::twist::{
    extract_quasitwist, gauge, movshev_coalgebra, movshev_dual_algebra, movshev_stabilizer,
    symplectic_twist, verify_twist, twist_hopf, twist_r, MovshevCoalgebra,
};
use hopfkit::{analysis, bicross, rmatrix};

use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

// ---------------------------------------------------------------------------
// shared helpers

fn is_commutative(a: &StructureAlgebra) -> bool {
    (0..a.dim).all(|i| (i + 1..a.dim).all(|j| a.mult[i][j] == a.mult[j][i]))
}

fn is_cocommutative(hp: &HopfPresentation) -> bool {
    hp.comult.iter().all(|t| *t == signed_flip(t, hp.parity.as_deref()))
}

/// Basis-independent verification profile, for comparing presentations of
/// the same algebra built along different routes.
#[derive(Debug, PartialEq)]
struct Profile {
    dim: usize,
    axioms_ok: bool,
    grouplikes: usize,
    s2_identity: bool,
    s4_identity: bool,
    commutative: bool,
    cocommutative: bool,
    radical_dim: usize,
    dual_blocks: Vec<usize>,
}

fn profile(hp: &HopfPresentation) -> Profile {
    let s4 = s4_check(hp);
    let mut dual_blocks = hp.dual_hopf().algebra.block_profile().unwrap();
    dual_blocks.sort_unstable();
    Profile {
        dim: hp.dim(),
        axioms_ok: hp.verify().ok(),
        grouplikes: hp.grouplikes().unwrap().elements.len(),
        s2_identity: s4.s2_is_identity,
        s4_identity: s4.s4_is_identity,
        commutative: is_commutative(&hp.algebra),
        cocommutative: is_cocommutative(hp),
        radical_dim: hp.algebra.jacobson_radical().len(),
        dual_blocks,
    }
}

/// R R_21 as an element of A (x) A.
fn r_r21(hp: &HopfPresentation, r: &TensorSquareElement) -> TensorSquareElement {
    tensor_mul(&hp.algebra, hp.parity.as_deref(), r, &signed_flip(r, hp.parity.as_deref()))
}

/// Apply c to both tensor legs: coefficients become C M C^T.
fn tensor_apply(c: &Mat, t: &TensorSquareElement) -> TensorSquareElement {
    let m = Mat::from_rows(t.coeffs.clone(), t.conductor);
    let out = c.matmul(&m).matmul(&c.transpose());
    TensorSquareElement {
        dim: t.dim,
        conductor: t.conductor,
        coeffs: (0..t.dim)
            .map(|i| (0..t.dim).map(|j| out.at(i, j).clone()).collect())
            .collect(),
    }
}

fn right_mult_matrix(a: &StructureAlgebra, x: &[Cyc]) -> Mat {
    let mut m = Mat::zero(a.dim, a.dim, a.conductor);
    for j in 0..a.dim {
        let col = a.mul_vec(&a.basis_vec(j), x);
        for (i, v) in col.into_iter().enumerate() {
            *m.at_mut(i, j) = v;
        }
    }
    m
}

/// The full check shared by the two big cocycle galleries: every Hopf
/// axiom, quasitriangularity, R R_21 = 1 (x) 1, full rank, trivial
/// Drinfeld element, noncommutative and noncocommutative.
fn check_cocycle_gallery(obj: &GalleryObject, dim: usize) {
    let hp = &obj.hopf;
    assert_eq!(hp.dim(), dim);
    assert!(hp.verify().ok(), "Hopf axioms");
    assert!(rmatrix::verify_quasitriangular(hp, &obj.r).ok(), "hexagons + intertwining");
    assert_eq!(r_r21(hp, &obj.r), TensorSquareElement::unit(&hp.algebra), "R R_21 = 1 (x) 1");
    let mp = rmatrix::minimal_part(hp, &obj.r).unwrap();
    assert_eq!(mp.rank, dim, "minimal part has full rank");
    let u = rmatrix::drinfeld_element(hp, &obj.r).unwrap();
    assert_eq!(u.u, hp.algebra.unit, "Drinfeld element is 1");
    assert!(!is_commutative(&hp.algebra));
    assert!(!is_cocommutative(hp));
}

// ---------------------------------------------------------------------------
// 1-2: the two big twisted-group-algebra galleries

#[test]
fn a01_dim16_gallery() {
    let start = std::time::Instant::now();
    let obj = gallery::build("dim16").unwrap();
    assert_eq!(obj.hopf.conductor(), 4);
    check_cocycle_gallery(&obj, 16);
    assert!(start.elapsed().as_secs() < 60, "dim-16 gallery exceeded 60 s");
}

#[test]
fn a02_dim36_gallery() {
    let start = std::time::Instant::now();
    let obj = gallery::build("dim36").unwrap();
    assert_eq!(obj.hopf.conductor(), 6);
    check_cocycle_gallery(&obj, 36);
    assert!(start.elapsed().as_secs() < 300, "dim-36 gallery exceeded 5 min");
}

// ---------------------------------------------------------------------------
// 3: closed forms vs solved forms on both cocycle data

#[test]
fn a03_closed_forms_match_solved_forms() {
    for (datum, n) in [(dim16_datum(), 4u32), (dim36_datum(), 6u32)] {
        // The constructor itself certifies the closed-form inverse against
        // the T-map and the closed-form R against J_21^-1 J; re-derive the
        // solved sides here independently.
        let out = rmatrix_from_cocycle(&datum, n).unwrap();
        let plain = HopfPresentation::group_algebra(&out.doubled.datum.g, n);
        let solved_inv = tensor_inv(&plain.algebra, None, &out.twist.j).unwrap();
        assert_eq!(solved_inv, out.twist.j_inv, "closed-form J^-1 = solved inverse");
        let via_twist =
            twist_r(&plain, &TensorSquareElement::unit(&plain.algebra), &out.twist).unwrap();
        assert_eq!(via_twist, out.r, "closed-form R = J_21^-1 J");
    }
}

// ---------------------------------------------------------------------------
// 4: the four-dimensional suite, three construction routes

fn z2_sign_sgd(dim_v: usize, n: u32) -> SuperGroupDatum {
    let q = FiniteGroup::cyclic(2);
    let mut minus = Mat::identity(dim_v, n);
    for i in 0..dim_v {
        *minus.at_mut(i, i) = Cyc::one(n).neg();
    }
    SuperGroupDatum { group: q, dim_v, action: vec![Mat::identity(dim_v, n), minus], conductor: n }
}

#[test]
fn a04_sweedler_suite() {
    let n = 1;
    // Route 1: from the pointed datum.
    let from_datum = build_hd(&hn_datum(1, n)).unwrap();
    // Route 2: bosonization of k[Z2] x| Lambda(k), one odd generator with
    // the sign action.
    let sgd = z2_sign_sgd(1, n);
    let sup = supergroup_algebra(&sgd).unwrap();
    let g_super = sup.algebra.basis_vec(sgd.idx(1, 0));
    let from_bosonization = bosonize(&sup, &g_super).unwrap();
    // Route 3: twisting the reference presentation by J_lambda.
    let hp = sweedler_hopf(n);
    let one = Cyc::one(n);
    let t = verify_twist(&hp, &sweedler_j_lambda(&one, n)).unwrap();
    let from_twist = twist_hopf(&hp, &t).unwrap();

    let p = profile(&from_datum);
    assert_eq!(p, profile(&from_bosonization));
    assert_eq!(p, profile(&from_twist));
    assert_eq!(p, profile(&hp));
    assert!(p.axioms_ok && !p.s2_identity && p.s4_identity);
    assert_eq!((p.dim, p.grouplikes), (4, 2));

    // The one-parameter family of triangular structures at sample points.
    for lam in [0i64, 1, 2, -1] {
        let l = Cyc::from_rat(rat(lam, 1), n);
        let r = sweedler_r_lambda(&l, n);
        assert!(rmatrix::verify_quasitriangular(&hp, &r).ok(), "lambda = {lam}");
        assert!(rmatrix::is_triangular(&hp, &r), "lambda = {lam}");
        let rank = rmatrix::minimal_part(&hp, &r).unwrap().rank;
        assert_eq!(rank, if lam == 0 { 2 } else { 4 }, "lambda = {lam}");
        // u = g independently of lambda, of order 2.
        let u = rmatrix::drinfeld_element(&hp, &r).unwrap();
        assert_eq!(u.u, hp.algebra.basis_vec(1), "u = g");
        assert_eq!(hp.algebra.mul_vec(&u.u, &u.u), hp.algebra.unit, "u^2 = 1");
    }
}

// ---------------------------------------------------------------------------
// 5-6: the order-18 cotriangular example and its reference cross-check

#[test]
fn a05_p3_double_coset_blocks() {
    let setup = analysis::p3_cotriangular(3).unwrap();
    assert_eq!(setup.hopf.dim(), 18);
    let decomp = analysis::dual_double_coset_decomposition(&setup).unwrap();
    assert_eq!(decomp.cosets.len(), 2);
    let hn = setup.subgroup.order();
    for c in &decomp.cosets {
        // |Z| |K_g| = |H|^2 and each block dimension is a multiple of
        // |H| / |K_g|.
        assert_eq!(c.elements.len() * c.k_g.len(), hn * hn);
        let factor = hn / c.k_g.len();
        assert!(c.blocks.iter().all(|&b| b % factor == 0));
        if c.elements.contains(&0) {
            assert_eq!(c.blocks, vec![1; 9], "(A*)_H splits into nine lines");
        } else {
            assert_eq!(c.blocks, vec![3], "(A*)_gH is a single 3x3 block");
        }
    }
    let kap = analysis::kaplansky_check(&setup.hopf).unwrap();
    assert!(kap.all_divide, "every block dimension divides 18");
}

#[test]
fn a06_p3_reference_twisted_algebra_crosscheck() {
    let setup = analysis::p3_cotriangular(3).unwrap();
    assert!(setup.minimal, "the symplectic twist is minimal on k[H]");
    let decomp = analysis::dual_double_coset_decomposition(&setup).unwrap();
    for c in &decomp.cosets {
        // The reference profile is |H|/|K_g| copies of the block multiset
        // of the twisted group algebra k_{c_W}[K_g]; the decomposition
        // certifies the multiset equality internally, so it must be
        // present and equal here.
        let reference = c
            .reference_blocks
            .as_ref()
            .expect("reference comparison must run for a minimal twist");
        assert_eq!(&c.blocks, reference);
    }
}

// ---------------------------------------------------------------------------
// 7: function-algebra side of the symplectic twist

/// Expand Delta(lambda) in the translate basis of lambda; Some(gamma)
/// when eps(lambda) is invertible and the translates form a basis.
fn lambda_expansion(
    c: &MovshevCoalgebra,
    lambda: &[Cyc],
) -> Option<(Vec<Cyc>, Mat, TensorSquareElement)> {
    let g = &c.group;
    let dim = g.order;
    let n = c.j.conductor;
    let eps: Cyc = lambda
        .iter()
        .zip(&c.counit)
        .fold(Cyc::zero(n), |acc, (l, e)| acc.add(&l.mul(e)));
    if eps.is_zero() {
        return None;
    }
    let scale = eps.inv().ok()?;
    let lambda: Vec<Cyc> = lambda.iter().map(|x| x.mul(&scale)).collect();
    let mut b = Mat::zero(dim, dim, n);
    for h in 0..dim {
        for (y, v) in hopfkit::twist::translate(g, h, &lambda).into_iter().enumerate() {
            *b.at_mut(y, h) = v;
        }
    }
    let b_inv = b.inverse().ok()?;
    let mut m = Mat::zero(dim, dim, n);
    for (i, li) in lambda.iter().enumerate() {
        if li.is_zero() {
            continue;
        }
        for a in 0..dim {
            for bb in 0..dim {
                let d = &c.comult[i].coeffs[a][bb];
                if !d.is_zero() {
                    *m.at_mut(a, bb) = m.at(a, bb).add(&li.mul(d));
                }
            }
        }
    }
    let gamma = b_inv.matmul(&m).matmul(&b_inv.transpose());
    let mut j = TensorSquareElement::zero(dim, n);
    for a in 0..dim {
        for bb in 0..dim {
            j.coeffs[a][bb] = gamma.at(a, bb).clone();
        }
    }
    Some((lambda, b, j))
}

#[test]
fn a07_movshev_suite() {
    let a = FiniteGroup::cyclic(3).direct_product(&FiniteGroup::cyclic(3));
    let j = symplectic_twist(3, 3);
    // Dual algebra of the twisted coalgebra: semisimple, one 3x3 block.
    let alg = movshev_dual_algebra(&a, &j).unwrap();
    assert!(alg.jacobson_radical().is_empty(), "radical is 0");
    assert_eq!(alg.block_profile().unwrap(), vec![3], "single block of dimension 3");
    // Stabilizer of a primitive idempotent: the whole group.
    let st = movshev_stabilizer(&a, &j).unwrap();
    assert_eq!(st.order(), 9, "St = H");

    // Round trip: re-extract a quasitwist from the bare coalgebra and
    // exhibit an explicit translation-equivariant coalgebra isomorphism
    // back to the original.
    let c1 = movshev_coalgebra(&a, &j).unwrap();
    let j2 = extract_quasitwist(&c1, 2000).unwrap();
    verify_twist(&HopfPresentation::group_algebra(&a, 3), &j2).unwrap();
    let c2 = movshev_coalgebra(&a, &j2).unwrap();
    // Find the lambda whose translate expansion produced j2; the map
    // phi(e_h) = h . lambda is then the isomorphism candidate.
    let dim = a.order;
    let mut found = None;
    for i in 0..dim {
        let mut v = vec![Cyc::zero(3); dim];
        v[i] = Cyc::one(3);
        if let Some((lam, b, gamma)) = lambda_expansion(&c1, &v) {
            if gamma == j2 {
                found = Some((lam, b));
                break;
            }
        }
    }
    let (_, b) = found.expect("no basis vector reproduces the extracted quasitwist");
    // phi intertwines the comultiplications and both counits, for every
    // basis element (equivalently, for every group translate).
    for h in 0..dim {
        let mut lhs = TensorSquareElement::zero(dim, 3);
        for y in 0..dim {
            if !b.at(y, h).is_zero() {
                lhs = lhs.add(&c1.comult[y].scale(b.at(y, h)));
            }
        }
        let rhs = tensor_apply(&b, &c2.comult[h]);
        assert_eq!(lhs, rhs, "comultiplication intertwining at {h}");
        let eps: Cyc = (0..dim).fold(Cyc::zero(3), |acc, y| acc.add(b.at(y, h)));
        assert!(eps.is_one(), "counit preserved at {h}");
    }
}

// ---------------------------------------------------------------------------
// 8: bicrossproducts of the order-6 exact factorization

fn s3_factorization() -> bicross::ExactFactorization {
    let (s3, perms) = FiniteGroup::symmetric(3);
    let even: Vec<usize> = (0..6)
        .filter(|&i| {
            let p = &perms[i];
            let mut inv = 0;
            for r in 0..3 {
                for s in r + 1..3 {
                    if p[r] > p[s] {
                        inv += 1;
                    }
                }
            }
            inv % 2 == 0
        })
        .collect();
    let a3 = Subgroup { elements: even };
    let t = perms.iter().position(|p| p == &vec![1, 0, 2]).unwrap();
    let z2 = s3.subgroup_generated(&[t]);
    bicross::ExactFactorization::new(&s3, a3, z2).unwrap()
}

#[test]
fn a08_bicrossproduct_suite() {
    let f = s3_factorization();
    let hp = bicross::bicrossproduct(&f, 6).unwrap();
    assert!(hp.verify().ok(), "bicrossproduct Hopf axioms");
    let dual = bicross::duality_check(&f, 6).unwrap();
    assert!(dual.map_used.is_some(), "H(G,G2,G1) ~ H(G,G1,G2)*");
    // Biperfectness fails both ways, consistently, and the grouplike
    // counts match the fixed-point formula through duality.
    let report = bicross::biperfect_test(&f, 6).unwrap();
    assert!(!report.group_theoretic);
    let swapped =
        bicross::ExactFactorization::new(&f.group, f.g2.clone(), f.g1.clone()).unwrap();
    assert_eq!(report.grouplike_count_dual, bicross::one_dim_rep_count(&f));
    assert_eq!(report.grouplike_count_h, bicross::one_dim_rep_count(&swapped));
    // Degenerate factorizations: the group algebra and its dual, on the
    // nose.
    let g = &f.group;
    let all = g.full_subgroup();
    let triv = g.subgroup_generated(&[]);
    let f1 = bicross::ExactFactorization::new(g, all.clone(), triv.clone()).unwrap();
    assert_eq!(
        bicross::bicrossproduct(&f1, 6).unwrap(),
        HopfPresentation::group_algebra(g, 6)
    );
    let f2 = bicross::ExactFactorization::new(g, triv, all).unwrap();
    assert_eq!(
        bicross::bicrossproduct(&f2, 6).unwrap(),
        HopfPresentation::group_algebra(g, 6).dual_hopf()
    );
}

// ---------------------------------------------------------------------------
// 9: the eight-dimensional pointed algebra

#[test]
fn a09_h2_suite() {
    let hp = build_hd(&hn_datum(2, 2)).unwrap();
    assert_eq!(hp.dim(), 8);
    assert!(hp.verify().ok());
    // Grouplikes form Z2.
    let gl = hp.grouplikes().unwrap();
    assert_eq!(gl.elements.len(), 2);
    let nontrivial = gl
        .elements
        .iter()
        .find(|g| **g != hp.algebra.unit)
        .expect("a nontrivial grouplike");
    assert_eq!(hp.algebra.mul_vec(nontrivial, nontrivial), hp.algebra.unit);
    let s4 = s4_check(&hp);
    assert!(!s4.s2_is_identity && s4.s4_is_identity);
    // The radical is a Hopf ideal, confirmed through both the ideal-level
    // and the module-level route.
    let ch = analysis::chevalley_check(&hp).unwrap();
    assert!(ch.is_hopf_ideal && ch.tensor_action_zero);
    // A valid T-datum upgrades it to a verified minimal triangular
    // structure (the constructor certifies quasitriangularity,
    // triangularity and minimality; re-check the rank here).
    let obj = gallery::h2_triangular(2).unwrap();
    assert!(rmatrix::verify_quasitriangular(&obj.hopf, &obj.r).ok());
    assert!(rmatrix::is_triangular(&obj.hopf, &obj.r));
    assert_eq!(rmatrix::minimal_part(&obj.hopf, &obj.r).unwrap().rank, 8);
}

// ---------------------------------------------------------------------------
// 10: randomized property suites, fixed seeds

fn fixed_runner(cases: u32, seed: u8) -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases, ..Config::default() },
        TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]),
    )
}

#[test]
fn a10a_gauge_property_suite() {
    let n = 1;
    let hp = sweedler_hopf(n);
    let r_g = sweedler_r_g(n);
    let mut runner = fixed_runner(24, 11);
    runner
        .run(&(-3i64..=3, -2i64..=2, -2i64..=2, -2i64..=2), |(lam, bg, bx, bgx)| {
            let l = Cyc::from_rat(rat(lam, 1), n);
            let t = verify_twist(&hp, &sweedler_j_lambda(&l, n)).unwrap();
            // Gauge element x = 1 + bg (g - 1) + bx x + bgx gx: eps(x)=1
            // by construction; skip the non-invertible ones.
            let mut x = hp.algebra.unit.clone();
            x[0] = x[0].sub(&Cyc::from_rat(rat(bg, 1), n));
            x[1] = x[1].add(&Cyc::from_rat(rat(bg, 1), n));
            x[2] = Cyc::from_rat(rat(bx, 1), n);
            x[3] = Cyc::from_rat(rat(bgx, 1), n);
            let Ok(xi) = hp.algebra.element_inverse(&x) else {
                return Ok(());
            };
            // The gauge transform of a twist is again a twist (gauge()
            // certifies this or errors).
            let t2 = gauge(&hp, &t, &x).unwrap();
            // a -> x a x^-1 is an isomorphism of the twisted triangular
            // structures.
            let a1 = twist_hopf(&hp, &t).unwrap();
            let a2 = twist_hopf(&hp, &t2).unwrap();
            let conj = hp.algebra.left_mult_matrix(&x).matmul(&right_mult_matrix(&hp.algebra, &xi));
            hopf_iso_check(&a1, &a2, &conj).unwrap();
            let r1 = twist_r(&hp, &r_g, &t).unwrap();
            let r2 = twist_r(&hp, &r_g, &t2).unwrap();
            assert_eq!(tensor_apply(&conj, &r1), r2);
            Ok(())
        })
        .unwrap();
}

#[test]
fn a10b_super_round_trip_suite() {
    let n = 1;
    let sgd = z2_sign_sgd(2, n);
    let sup = supergroup_algebra(&sgd).unwrap();
    let g = sup.algebra.basis_vec(sgd.idx(1, 0));
    let parity = sup.parity.clone().unwrap();
    let mut runner = fixed_runner(20, 23);
    runner
        .run(&(-2i64..=2, -2i64..=2, -2i64..=2), |(ra, rb, rc)| {
            let mut r = Mat::zero(2, 2, n);
            *r.at_mut(0, 0) = Cyc::from_rat(rat(ra, 1), n);
            *r.at_mut(0, 1) = Cyc::from_rat(rat(rb, 1), n);
            *r.at_mut(1, 0) = Cyc::from_rat(rat(rb, 1), n);
            *r.at_mut(1, 1) = Cyc::from_rat(rat(rc, 1), n);
            let mut neg = r.clone();
            for i in 0..2 {
                for j in 0..2 {
                    *neg.at_mut(i, j) = r.at(i, j).neg();
                }
            }
            // exp(r/2) exp(-r/2) = 1 (x) 1.
            let jp = exp_twist(&sgd, &sup, &r).unwrap();
            let jm = exp_twist(&sgd, &sup, &neg).unwrap();
            let prod = tensor_mul(&sup.algebra, Some(&parity), &jp.j, &jm.j);
            assert_eq!(prod, TensorSquareElement::unit(&sup.algebra));
            // Bosonize / unbosonize round-trips on the nose.
            let bos = bosonize(&sup, &g).unwrap();
            assert_eq!(unbosonize(&bos, &g).unwrap(), sup);
            // The R-matrix correspondence round-trips: the even super
            // triangular structure J_21^-1 J maps to an ordinary R and
            // back unchanged.
            let r_super = tensor_mul(
                &sup.algebra,
                Some(&parity),
                &tensor_inv(&sup.algebra, Some(&parity), &signed_flip(&jp.j, Some(&parity)))
                    .unwrap(),
                &jp.j,
            );
            let r_ord = super_to_ordinary_r(&bos, &parity, &r_super, &g).unwrap();
            let back = ordinary_to_super_r(&bos, &r_ord, &g).unwrap();
            assert_eq!(back, r_super);
            Ok(())
        })
        .unwrap();
}

#[test]
fn a10c_categorical_dimension_suite() {
    for e in gallery::manifest() {
        // The heavyweight entries take minutes to rebuild; their
        // categorical dimensions are covered through the cheaper reps.
        let obj = gallery::build(e.name).unwrap();
        let hp = &obj.hopf;
        let triv = analysis::trivial_representation(hp);
        let reg = analysis::regular_representation(&hp.algebra);
        let is_int = |v: &hopfkit::algebra::AlgebraRepresentation| {
            let d = analysis::categorical_dimension(hp, &obj.r, v).unwrap();
            d.as_rational().map(|q| q.is_integer()).unwrap_or(false)
        };
        assert!(is_int(&triv), "{}: trivial rep", e.name);
        assert!(is_int(&reg), "{}: regular rep", e.name);
        let sum = analysis::rep_direct_sum(&triv, &reg, hp.conductor());
        assert!(is_int(&sum), "{}: direct sum", e.name);
        if hp.dim() <= 8 {
            let tens = analysis::rep_tensor(hp, &triv, &reg);
            assert!(is_int(&tens), "{}: tensor product", e.name);
        }
    }
}

// ---------------------------------------------------------------------------
// 11: negative controls

/// Add 1 to the coefficient of e_k in the product e_i e_j.
fn perturb_mult(hp: &HopfPresentation, i: usize, j: usize, k: usize) -> HopfPresentation {
    let n = hp.conductor();
    let mut h = hp.clone();
    let row = &mut h.algebra.mult[i][j];
    if let Some(p) = row.iter_mut().find(|(t, _)| *t == k) {
        p.1 = p.1.add(&Cyc::one(n));
    } else {
        row.push((k, Cyc::one(n)));
    }
    h
}

fn assert_detected(hp: &HopfPresentation, r: &TensorSquareElement, label: &str) {
    let rep = hp.verify();
    if rep.ok() {
        // The algebra half survived; the quasitriangular check must
        // object instead.
        let qt = rmatrix::verify_quasitriangular(hp, r);
        assert!(!qt.ok(), "{label}: no axiom failed");
        assert!(!qt.failures.is_empty() && !qt.failures[0].is_empty(), "{label}: no witness");
    } else {
        assert!(!rep.failures.is_empty() && !rep.failures[0].is_empty(), "{label}: no witness");
    }
}

#[test]
fn a11_negative_controls() {
    for e in gallery::manifest() {
        let obj = gallery::build(e.name).unwrap();
        let dim = obj.hopf.dim();
        // Exhaustive over the product table for the small objects; a
        // deterministic stride for the large ones (every row, shifted
        // column, shifted target).
        let pairs: Vec<(usize, usize)> = if dim <= 8 {
            (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).collect()
        } else {
            let step = if dim >= 36 { 6 } else { 1 };
            (0..dim).step_by(step).map(|i| (i, (7 * i + 3) % dim)).collect()
        };
        for (i, j) in pairs {
            let k = (i + j) % dim;
            let bad = perturb_mult(&obj.hopf, i, j, k);
            assert_detected(&bad, &obj.r, &format!("{} mult[{i}][{j}] += e_{k}", e.name));
        }
        // An R-matrix perturbation must be flagged too.
        let mut bad_r = obj.r.clone();
        bad_r.coeffs[0][0] = bad_r.coeffs[0][0].add(&Cyc::one(obj.hopf.conductor()));
        assert!(
            !rmatrix::verify_quasitriangular(&obj.hopf, &bad_r).ok(),
            "{}: perturbed R not detected",
            e.name
        );
    }
}
