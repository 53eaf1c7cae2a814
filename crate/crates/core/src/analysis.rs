//! Representation theory of the duals of twisted group algebras k[G]^J:
//! the double-coset decomposition of A* with its block-dimension
//! cross-checks, the F_g embedding into (A_2)* (x) (A_1)*, Kaplansky
//! divisibility, the Chevalley property of the radical, and categorical
//! dimensions via the Drinfeld element.

use crate::algebra::{twisted_group_algebra, AlgebraRepresentation, StructureAlgebra};
use crate::group::{FiniteGroup, Subgroup, TwoCocycle};
use crate::hopf::{HopfPresentation, TensorSquareElement};
use crate::linalg::{kernel, Mat, Subspace};
use crate::rmatrix::{drinfeld_element, is_triangular, minimal_part};
use crate::scalar::Cyc;
use crate::twist::{self, movshev_dual_algebra};
use crate::{Error, Result};

/// A twisted group algebra A = k[G]^J with the twist supported on a
/// subgroup H, prepared for double-coset analysis.
pub struct CotriangularSetup {
    pub group: FiniteGroup,
    pub subgroup: Subgroup,
    /// H as an abstract group; h_map[i] = index in G.
    pub h_group: FiniteGroup,
    pub h_map: Vec<usize>,
    /// G index -> H index where defined.
    pub h_pos: Vec<Option<usize>>,
    pub j: TensorSquareElement,
    /// J embedded into k[G] (x) k[G].
    pub j_embedded: TensorSquareElement,
    pub hopf: HopfPresentation,
    pub r: TensorSquareElement,
    /// The dual algebra A* (multiplication = transpose of Delta^J).
    pub dual: StructureAlgebra,
    /// (A_1)* = dual of (k[H], Delta(a)J), a simple algebra when J is
    /// minimal.
    pub a1_star: StructureAlgebra,
    /// (A_2)* = dual of (k[H], J^-1 Delta(a)).
    pub a2_star: StructureAlgebra,
    /// Whether J was certified minimal on H (rank of its R-matrix = |H|).
    pub minimal: bool,
}

/// Build and verify the setup: certify J as a twist on k[H], embed into
/// k[G], twist, and construct the three dual algebras.
pub fn cotriangular_setup(
    g: &FiniteGroup,
    h: &Subgroup,
    j: &TensorSquareElement,
) -> Result<CotriangularSetup> {
    if g.subgroup_generated(&h.elements).elements != h.elements {
        return Err(Error::Invalid("H is not a subgroup".into()));
    }
    let (h_group, h_map) = g.subgroup_as_group(h);
    let n = j.conductor;
    if j.dim != h_group.order {
        return Err(Error::Invalid("J must live on k[H] (x) k[H]".into()));
    }
    let mut h_pos = vec![None; g.order];
    for (i, &x) in h_map.iter().enumerate() {
        h_pos[x] = Some(i);
    }

    // Certify J on k[H] and measure minimality.
    let hp_h = HopfPresentation::group_algebra(&h_group, n);
    let t_h = twist::verify_twist(&hp_h, j)?;
    let twisted_h = twist::twist_hopf(&hp_h, &t_h)?;
    let r_h = twist::twist_r(&hp_h, &TensorSquareElement::unit(&hp_h.algebra), &t_h)?;
    let minimal = minimal_part(&twisted_h, &r_h)?.rank == h_group.order;

    // Embed into k[G] and twist there.
    let mut j_embedded = TensorSquareElement::zero(g.order, n);
    for a in 0..h_group.order {
        for b in 0..h_group.order {
            j_embedded.coeffs[h_map[a]][h_map[b]] = j.coeffs[a][b].clone();
        }
    }
    let hp_g = HopfPresentation::group_algebra(g, n);
    let t_g = twist::verify_twist(&hp_g, &j_embedded)?;
    let hopf = twist::twist_hopf(&hp_g, &t_g)?;
    let r = twist::twist_r(&hp_g, &TensorSquareElement::unit(&hp_g.algebra), &t_g)?;
    let dual = hopf.dual_hopf().algebra;

    let a1_star = movshev_dual_algebra(&h_group, j)?;
    // (A_2)*: delta_a delta_b = sum_x (J^-1 (x (x) x))_{a,b}
    //       = sum_x (J^-1)_{a x^-1, b x^-1} delta_x.
    let dim = h_group.order;
    let mut mult: Vec<Vec<Vec<(usize, Cyc)>>> = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let mut row = Vec::new();
            for x in 0..dim {
                let xi = h_group.inv(x);
                let c = &t_h.j_inv.coeffs[h_group.mul(a, xi)][h_group.mul(b, xi)];
                if !c.is_zero() {
                    row.push((x, c.clone()));
                }
            }
            mult[a][b] = row;
        }
    }
    let unit = hp_h.counit.clone();
    let a2_star = StructureAlgebra { dim, conductor: n, mult, unit };
    a2_star.verify()?;

    Ok(CotriangularSetup {
        group: g.clone(),
        subgroup: h.clone(),
        h_group,
        h_map,
        h_pos,
        j: j.clone(),
        j_embedded,
        hopf,
        r,
        dual,
        a1_star,
        a2_star,
        minimal,
    })
}

/// A basis (as vectors in the ambient algebra) of a minimal left ideal of
/// a simple algebra of dimension d^2, found by splitting a commutative
/// subalgebra k[a] of dimension d and taking a left ideal A e of
/// dimension d generated by one of its primitive idempotents.
fn simple_module(alg: &StructureAlgebra) -> Result<Vec<Vec<Cyc>>> {
    let d = (alg.dim as f64).sqrt().round() as usize;
    if d * d != alg.dim {
        return Err(Error::Invalid("algebra dimension is not a square".into()));
    }
    let mut seeds: Vec<Vec<Cyc>> = (0..alg.dim).map(|i| alg.basis_vec(i)).collect();
    for i in 0..alg.dim.min(8) {
        for j in (i + 1)..alg.dim.min(8) {
            let v: Vec<Cyc> = (0..alg.dim)
                .map(|t| alg.basis_vec(i)[t].add(&alg.basis_vec(j)[t]))
                .collect();
            seeds.push(v);
        }
    }
    for seed in &seeds {
        let sub = alg.generated_subalgebra(std::slice::from_ref(seed));
        if sub.len() != d {
            continue;
        }
        let idems = match alg.split_commutative(&sub) {
            Ok(e) => e,
            Err(_) => continue,
        };
        for e in &idems {
            let mut space = Subspace::new(alg.dim, alg.conductor);
            for x in 0..alg.dim {
                space.insert(&alg.mul_vec(&alg.basis_vec(x), e));
            }
            if space.dim() == d {
                return Ok(space.basis().to_vec());
            }
        }
    }
    Err(Error::EnlargeConductor)
}

/// A lift of a projective representation of `grp` on the simple module of
/// `alg`, where `grp` acts on `alg` by the basis permutation `auto`.
pub struct ProjectiveLift {
    pub d: usize,
    /// One matrix per group element; the identity lifts to Id.
    pub mats: Vec<Mat>,
    /// cocycle[a][b]: mats[a] mats[b] = cocycle[a][b] mats[ab].
    pub cocycle: Vec<Vec<Cyc>>,
}

fn lift_projective(
    alg: &StructureAlgebra,
    grp: &FiniteGroup,
    auto: impl Fn(usize, usize) -> usize,
) -> Result<ProjectiveLift> {
    let n = alg.conductor;
    let module = simple_module(alg)?;
    let d = module.len();
    let mut mspace = Subspace::new(alg.dim, n);
    for v in &module {
        mspace.insert(v);
    }
    // Action matrices of the basis elements on the module.
    let mut act = Vec::with_capacity(alg.dim);
    for x in 0..alg.dim {
        let mut m = Mat::zero(d, d, n);
        for (jcol, b) in module.iter().enumerate() {
            let w = alg.mul_vec(&alg.basis_vec(x), b);
            let coords = mspace
                .coordinates(&w)
                .ok_or_else(|| Error::Invalid("left ideal is not closed".into()))?;
            for (i, c) in coords.into_iter().enumerate() {
                *m.at_mut(i, jcol) = c;
            }
        }
        act.push(m);
    }
    // For each h solve act[auto(h, x)] T = T act[x] for all x; by Schur
    // the solution space must be exactly one-dimensional.
    let mut mats = Vec::with_capacity(grp.order);
    for h in 0..grp.order {
        if h == grp.identity {
            mats.push(Mat::identity(d, n));
            continue;
        }
        let mut rows: Vec<Vec<Cyc>> = Vec::new();
        for x in 0..alg.dim {
            let a = &act[auto(h, x)];
            let b = &act[x];
            // (a T - T b)[i][j] = sum_k a[i][k] T[k][j] - T[i][k] b[k][j].
            for i in 0..d {
                for j in 0..d {
                    let mut row = vec![Cyc::zero(n); d * d];
                    for k in 0..d {
                        row[k * d + j] = row[k * d + j].add(a.at(i, k));
                        row[i * d + k] = row[i * d + k].sub(b.at(k, j));
                    }
                    rows.push(row);
                }
            }
        }
        let ker = kernel(&rows, d * d, n);
        if ker.len() != 1 {
            return Err(Error::VerificationFailed(format!(
                "intertwiner space for element {h} has dimension {}, not 1",
                ker.len()
            )));
        }
        let mut t = Mat::zero(d, d, n);
        for i in 0..d {
            for j in 0..d {
                *t.at_mut(i, j) = ker[0][i * d + j].clone();
            }
        }
        t.inverse().map_err(|_| {
            Error::VerificationFailed(format!("lift of element {h} is singular"))
        })?;
        mats.push(t);
    }
    // Extract the 2-cocycle and certify it entry-wise.
    let mut cocycle = vec![vec![Cyc::zero(n); grp.order]; grp.order];
    for a in 0..grp.order {
        for b in 0..grp.order {
            let prod = mats[a].matmul(&mats[b]);
            let target = &mats[grp.mul(a, b)];
            let (pi, pj) = (0..d)
                .flat_map(|i| (0..d).map(move |j| (i, j)))
                .find(|&(i, j)| !target.at(i, j).is_zero())
                .ok_or(Error::Singular)?;
            let c = prod.at(pi, pj).mul(&target.at(pi, pj).inv()?);
            for i in 0..d {
                for j in 0..d {
                    if *prod.at(i, j) != c.mul(target.at(i, j)) {
                        return Err(Error::VerificationFailed(format!(
                            "lift is not projective at ({a},{b})"
                        )));
                    }
                }
            }
            cocycle[a][b] = c;
        }
    }
    Ok(ProjectiveLift { d, mats, cocycle })
}

/// Lift of the H-action rho_1(h) delta_y = delta_{hy} on (A_1)*.
pub fn lift_v1(setup: &CotriangularSetup) -> Result<ProjectiveLift> {
    let grp = setup.h_group.clone();
    lift_projective(&setup.a1_star, &setup.h_group, move |h, y| grp.mul(h, y))
}

/// Lift of the H-action rho_2(h) delta_y = delta_{y h^-1} on (A_2)*.
pub fn lift_v2(setup: &CotriangularSetup) -> Result<ProjectiveLift> {
    let grp = setup.h_group.clone();
    lift_projective(&setup.a2_star, &setup.h_group, move |h, y| {
        grp.mul(y, grp.inv(h))
    })
}

pub struct CosetAnalysis {
    /// Chosen representative (smallest G index in the coset).
    pub rep: usize,
    /// The coset elements, sorted.
    pub elements: Vec<usize>,
    /// K_g = H intersect g H g^-1, as G indices.
    pub k_g: Vec<usize>,
    /// Block profile of (A*)_Z.
    pub blocks: Vec<usize>,
    /// |H| / |K_g| times the block profile of the reference twisted group
    /// algebra of K_g; present only when J is minimal on H.
    pub reference_blocks: Option<Vec<usize>>,
}

pub struct DoubleCosetBlockReport {
    pub cosets: Vec<CosetAnalysis>,
    pub dim: usize,
}

/// The subalgebra (A*)_Z spanned by the delta functions over a double
/// coset; closure is verified.
fn coset_subalgebra(setup: &CotriangularSetup, z: &[usize]) -> Result<StructureAlgebra> {
    let n = setup.dual.conductor;
    let mut pos = vec![None; setup.group.order];
    for (i, &y) in z.iter().enumerate() {
        pos[y] = Some(i);
    }
    let dim = z.len();
    let mut mult: Vec<Vec<Vec<(usize, Cyc)>>> = vec![vec![Vec::new(); dim]; dim];
    for (i, &a) in z.iter().enumerate() {
        for (j, &b) in z.iter().enumerate() {
            let mut row = Vec::new();
            for (k, c) in &setup.dual.mult[a][b] {
                match pos[*k] {
                    Some(kk) => row.push((kk, c.clone())),
                    None => {
                        return Err(Error::VerificationFailed(format!(
                            "(A*)_Z is not closed: delta_{a} delta_{b} leaves the coset"
                        )))
                    }
                }
            }
            mult[i][j] = row;
        }
    }
    let unit: Vec<Cyc> = z.iter().map(|&y| setup.dual.unit[y].clone()).collect();
    let a = StructureAlgebra { dim, conductor: n, mult, unit };
    a.verify()?;
    Ok(a)
}

/// Decompose A* over the double cosets of H, compute each block profile,
/// and cross-check the dimension formula |H|^2 / |K_g| plus, when J is
/// minimal, the block multiset against the reference twisted group
/// algebra of K_g.
pub fn dual_double_coset_decomposition(
    setup: &CotriangularSetup,
) -> Result<DoubleCosetBlockReport> {
    let g = &setup.group;
    let h = &setup.subgroup.elements;
    let lifts = if setup.minimal {
        Some((lift_v1(setup)?, lift_v2(setup)?))
    } else {
        None
    };
    let mut cosets = Vec::new();
    let mut total = 0usize;
    for z in g.double_cosets(&setup.subgroup) {
        let rep = z[0];
        let k_g: Vec<usize> = h
            .iter()
            .copied()
            .filter(|&a| {
                setup
                    .subgroup
                    .contains(g.mul(g.mul(g.inv(rep), a), rep))
            })
            .collect();
        if z.len() * k_g.len() != h.len() * h.len() {
            return Err(Error::VerificationFailed(format!(
                "dim (A*)_Z = {} but |H|^2/|K_g| = {}",
                z.len(),
                h.len() * h.len() / k_g.len()
            )));
        }
        let alg_z = coset_subalgebra(setup, &z)?;
        let blocks = alg_z.block_profile()?;
        let reference_blocks = match &lifts {
            None => None,
            Some((v1, v2)) => {
                let scale = h.len() / k_g.len();
                let reference = reference_twisted_algebra(setup, rep, &k_g, v1, v2)?;
                let mut want: Vec<usize> =
                    reference.block_profile()?.into_iter().map(|d| d * scale).collect();
                want.sort_unstable();
                if want != blocks {
                    return Err(Error::VerificationFailed(format!(
                        "block multiset of (A*)_Z is {blocks:?} but the reference predicts {want:?}"
                    )));
                }
                for &b in &blocks {
                    if b % scale != 0 {
                        return Err(Error::VerificationFailed(format!(
                            "block dimension {b} is not divisible by |H|/|K_g| = {scale}"
                        )));
                    }
                }
                Some(want)
            }
        };
        total += z.len();
        cosets.push(CosetAnalysis { rep, elements: z, k_g, blocks, reference_blocks });
    }
    if total != g.order {
        return Err(Error::VerificationFailed(
            "double cosets do not partition the group".into(),
        ));
    }
    Ok(DoubleCosetBlockReport { cosets, dim: g.order })
}

/// The twisted group algebra of K_g with the cocycle of
/// W = W_1 (x) W_2, where W_1 pulls V_1 back along a -> g^-1 a g and W_2
/// pulls V_2 back along the inclusion.
fn reference_twisted_algebra(
    setup: &CotriangularSetup,
    rep: usize,
    k_g: &[usize],
    v1: &ProjectiveLift,
    v2: &ProjectiveLift,
) -> Result<StructureAlgebra> {
    let g = &setup.group;
    let k_in_h: Vec<usize> = k_g
        .iter()
        .map(|&a| setup.h_pos[a].expect("K_g lies in H"))
        .collect();
    let mut sorted = k_in_h.clone();
    sorted.sort_unstable();
    let (k_grp, k_map) = setup
        .h_group
        .subgroup_as_group(&Subgroup { elements: sorted });
    // theta_1(a) = g^-1 a g as an H index.
    let theta1 = |a_k: usize| -> usize {
        let a_g = setup.h_map[k_map[a_k]];
        let conj = g.mul(g.mul(g.inv(rep), a_g), rep);
        setup.h_pos[conj].expect("K_g is stable under conjugation by g")
    };
    let theta2 = |a_k: usize| -> usize { k_map[a_k] };
    let n = setup.j.conductor;
    let mut values = vec![vec![Cyc::zero(n); k_grp.order]; k_grp.order];
    for a in 0..k_grp.order {
        for b in 0..k_grp.order {
            values[a][b] = v1.cocycle[theta1(a)][theta1(b)]
                .mul(&v2.cocycle[theta2(a)][theta2(b)]);
        }
    }
    twisted_group_algebra(&k_grp, &TwoCocycle { values }, n)
}

pub struct FgReport {
    /// The matrix of F_g: columns indexed by the coset elements (sorted),
    /// rows by pairs (h, h') as h * |H| + h'.
    pub matrix: Mat,
    pub coset: Vec<usize>,
    pub rank: usize,
}

/// The embedding F_g: (A*)_Z -> (A_2)* (x) (A_1)*,
/// delta_y -> sum over factorizations y = h g h' of delta_h (x) delta_h'.
/// Injectivity, multiplicativity, pointwise invariance under
/// rho(a) = rho_2(a) (x) rho_1(g^-1 a g) for a in K_g, and the
/// equivariance law under changing the representative are all verified.
pub fn fg_embedding(setup: &CotriangularSetup, rep: usize) -> Result<FgReport> {
    let g = &setup.group;
    let h = &setup.subgroup.elements;
    let hg = &setup.h_group;
    let n = setup.j.conductor;
    let hn = h.len();
    let coset = {
        let mut all = g.double_cosets(&setup.subgroup);
        all.retain(|z| z.contains(&rep));
        all.pop().unwrap()
    };
    let mut pos = vec![None; g.order];
    for (i, &y) in coset.iter().enumerate() {
        pos[y] = Some(i);
    }

    // F_g columns.
    let fg_of = |gg: usize| -> Vec<Vec<Cyc>> {
        let mut cols = vec![vec![Cyc::zero(n); hn * hn]; coset.len()];
        for a in 0..hn {
            for b in 0..hn {
                let y = g.mul(g.mul(setup.h_map[a], gg), setup.h_map[b]);
                if let Some(i) = pos[y] {
                    cols[i][a * hn + b] = cols[i][a * hn + b].add(&Cyc::one(n));
                }
            }
        }
        cols
    };
    let cols = fg_of(rep);

    // Injectivity.
    let matrix = Mat::from_rows(cols.clone(), n).transpose();
    let rank = matrix.rank();
    if rank != coset.len() {
        return Err(Error::VerificationFailed(format!(
            "F_g has rank {rank}, expected {}",
            coset.len()
        )));
    }

    // Multiplicativity in (A_2)* (x) (A_1)*.
    let tensor_mul2 = |v: &[Cyc], w: &[Cyc]| -> Vec<Cyc> {
        let mut out = vec![Cyc::zero(n); hn * hn];
        for a in 0..hn {
            for b in 0..hn {
                let x = &v[a * hn + b];
                if x.is_zero() {
                    continue;
                }
                for c in 0..hn {
                    for d in 0..hn {
                        let y = &w[c * hn + d];
                        if y.is_zero() {
                            continue;
                        }
                        let s = x.mul(y);
                        for (p, c2) in &setup.a2_star.mult[a][c] {
                            for (q, c1) in &setup.a1_star.mult[b][d] {
                                out[p * hn + q] =
                                    out[p * hn + q].add(&s.mul(c2).mul(c1));
                            }
                        }
                    }
                }
            }
        }
        out
    };
    for (i, &y) in coset.iter().enumerate() {
        for (j, &z) in coset.iter().enumerate() {
            let mut lhs = vec![Cyc::zero(n); hn * hn];
            for (k, c) in &setup.dual.mult[y][z] {
                let kk = pos[*k].ok_or_else(|| {
                    Error::VerificationFailed("(A*)_Z is not closed".into())
                })?;
                for (t, v) in cols[kk].iter().enumerate() {
                    lhs[t] = lhs[t].add(&c.mul(v));
                }
            }
            if lhs != tensor_mul2(&cols[i], &cols[j]) {
                return Err(Error::VerificationFailed(format!(
                    "F_g is not multiplicative at ({y},{z})"
                )));
            }
        }
    }

    // Pointwise invariance under rho(a), a in K_g.
    for a in 0..hg.order {
        let a_g = setup.h_map[a];
        let conj = g.mul(g.mul(g.inv(rep), a_g), rep);
        let Some(ah) = setup.h_pos[conj] else { continue };
        for col in &cols {
            let mut moved = vec![Cyc::zero(n); hn * hn];
            for p in 0..hn {
                for q in 0..hn {
                    if col[p * hn + q].is_zero() {
                        continue;
                    }
                    // rho_2(a): delta_p -> delta_{p a^-1};
                    // rho_1(a^g): delta_q -> delta_{a^g q}.
                    let p2 = hg.mul(p, hg.inv(a));
                    let q2 = hg.mul(ah, q);
                    moved[p2 * hn + q2] = moved[p2 * hn + q2].add(&col[p * hn + q]);
                }
            }
            if &moved != col {
                return Err(Error::VerificationFailed(format!(
                    "image of F_g is not invariant under rho({a_g})"
                )));
            }
        }
    }

    // Equivariance: F_{a g a'} = (rho_2(a) (x) rho_1(a')^-1) F_g.
    for a in 0..hg.order {
        for ap in 0..hg.order {
            let new_rep = g.mul(g.mul(setup.h_map[a], rep), setup.h_map[ap]);
            let direct = fg_of(new_rep);
            for (i, col) in cols.iter().enumerate() {
                let mut moved = vec![Cyc::zero(n); hn * hn];
                for p in 0..hn {
                    for q in 0..hn {
                        if col[p * hn + q].is_zero() {
                            continue;
                        }
                        let p2 = hg.mul(p, hg.inv(a));
                        let q2 = hg.mul(hg.inv(ap), q);
                        moved[p2 * hn + q2] =
                            moved[p2 * hn + q2].add(&col[p * hn + q]);
                    }
                }
                if moved != direct[i] {
                    return Err(Error::VerificationFailed(format!(
                        "equivariance fails at (a, a') = ({a}, {ap})"
                    )));
                }
            }
        }
    }

    Ok(FgReport { matrix, coset, rank })
}

pub struct KaplanskyReport {
    pub dim: usize,
    /// Block profile of the dual algebra.
    pub blocks: Vec<usize>,
    pub all_divide: bool,
}

/// Block profile of the dual algebra with the divisibility of each
/// irreducible dimension into dim(A) reported.
pub fn kaplansky_check(hp: &HopfPresentation) -> Result<KaplanskyReport> {
    let blocks = hp.dual_hopf().algebra.block_profile()?;
    let dim = hp.dim();
    let all_divide = blocks.iter().all(|&b| dim % b == 0);
    Ok(KaplanskyReport { dim, blocks, all_divide })
}

pub struct ChevalleyReport {
    pub radical_dim: usize,
    pub counit_vanishes: bool,
    pub antipode_stable: bool,
    pub comult_in_ideal: bool,
    /// Module-level cross-check: the radical acts as zero on the tensor
    /// square of the semisimple quotient's regular module.
    pub tensor_action_zero: bool,
    pub is_hopf_ideal: bool,
}

/// Test whether Rad(A) is a Hopf ideal: eps(Rad) = 0, S(Rad) in Rad, and
/// Delta(Rad) in Rad (x) A + A (x) Rad.  Cross-checked at the module
/// level: the regular module of A/Rad contains every simple module, so
/// the radical annihilates V (x) W for all simples V, W exactly when it
/// annihilates the tensor square of that regular module.
pub fn chevalley_check(hp: &HopfPresentation) -> Result<ChevalleyReport> {
    let alg = &hp.algebra;
    let n = hp.conductor();
    let dim = hp.dim();
    let rad = alg.jacobson_radical();
    let mut rad_space = Subspace::new(dim, n);
    for r in &rad {
        rad_space.insert(r);
    }
    let radical_dim = rad_space.dim();

    let counit_vanishes = rad.iter().all(|r| {
        r.iter()
            .zip(&hp.counit)
            .fold(Cyc::zero(n), |acc, (c, e)| acc.add(&c.mul(e)))
            .is_zero()
    });
    let antipode_stable = rad.iter().all(|r| rad_space.contains(&hp.antipode.apply(r)));

    // Rad (x) A + A (x) Rad as a subspace of flattened tensors.
    let mut ideal2 = Subspace::new(dim * dim, n);
    for r in &rad {
        for j in 0..dim {
            let mut v = vec![Cyc::zero(n); dim * dim];
            for (i, c) in r.iter().enumerate() {
                v[i * dim + j] = c.clone();
            }
            ideal2.insert(&v);
            let mut w = vec![Cyc::zero(n); dim * dim];
            for (i, c) in r.iter().enumerate() {
                w[j * dim + i] = c.clone();
            }
            ideal2.insert(&w);
        }
    }
    let comult_in_ideal = rad.iter().all(|r| {
        let d = hp.comult_vec(r);
        let mut flat = vec![Cyc::zero(n); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                flat[i * dim + j] = d.coeffs[i][j].clone();
            }
        }
        ideal2.contains(&flat)
    });

    // Module-level cross-check on the regular module of A/Rad.
    let q = alg.quotient(&rad);
    let qd = q.algebra.dim;
    let mut lift_mat = Mat::zero(dim, qd, n);
    for (j, l) in q.lift.iter().enumerate() {
        for (i, c) in l.iter().enumerate() {
            *lift_mat.at_mut(i, j) = c.clone();
        }
    }
    let rho: Vec<Mat> = (0..dim)
        .map(|i| {
            q.project
                .matmul(&alg.left_mult_matrix(&alg.basis_vec(i)))
                .matmul(&lift_mat)
        })
        .collect();
    let tensor_action_zero = rad.iter().all(|r| {
        let d = hp.comult_vec(r);
        let mut total = Mat::zero(qd * qd, qd * qd, n);
        for a in 0..dim {
            for b in 0..dim {
                let c = &d.coeffs[a][b];
                if c.is_zero() {
                    continue;
                }
                for i1 in 0..qd {
                    for j1 in 0..qd {
                        let x = rho[a].at(i1, j1);
                        if x.is_zero() {
                            continue;
                        }
                        for i2 in 0..qd {
                            for j2 in 0..qd {
                                let y = rho[b].at(i2, j2);
                                if y.is_zero() {
                                    continue;
                                }
                                let slot = total.at_mut(i1 * qd + i2, j1 * qd + j2);
                                *slot = slot.add(&c.mul(x).mul(y));
                            }
                        }
                    }
                }
            }
        }
        total == Mat::zero(qd * qd, qd * qd, n)
    });

    let is_hopf_ideal = counit_vanishes && antipode_stable && comult_in_ideal;
    if is_hopf_ideal != tensor_action_zero {
        return Err(Error::VerificationFailed(
            "Hopf-ideal test and the tensor-module test disagree".into(),
        ));
    }
    Ok(ChevalleyReport {
        radical_dim,
        counit_vanishes,
        antipode_stable,
        comult_in_ideal,
        tensor_action_zero,
        is_hopf_ideal,
    })
}

/// Categorical dimension of V: the trace of the Drinfeld element acting
/// on V.  For triangular inputs the result is certified to be a rational
/// integer.
pub fn categorical_dimension(
    hp: &HopfPresentation,
    r: &TensorSquareElement,
    v: &AlgebraRepresentation,
) -> Result<Cyc> {
    v.verify(&hp.algebra)?;
    let u = drinfeld_element(hp, r)?;
    let n = hp.conductor();
    let mut tr = Cyc::zero(n);
    for (i, c) in u.u.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = Cyc::zero(n);
        for k in 0..v.dim_v {
            t = t.add(v.action[i].at(k, k));
        }
        tr = tr.add(&c.mul(&t));
    }
    if is_triangular(hp, r) {
        let integral = tr.as_rational().map(|q| q.is_integer()).unwrap_or(false);
        if !integral {
            return Err(Error::VerificationFailed(format!(
                "categorical dimension {tr:?} of a triangular input is not an integer"
            )));
        }
    }
    Ok(tr)
}

/// The one-dimensional representation e_i -> eps(e_i).
pub fn trivial_representation(hp: &HopfPresentation) -> AlgebraRepresentation {
    let n = hp.conductor();
    let action = hp
        .counit
        .iter()
        .map(|c| {
            let mut m = Mat::zero(1, 1, n);
            *m.at_mut(0, 0) = c.clone();
            m
        })
        .collect();
    AlgebraRepresentation { dim_v: 1, action }
}

/// The left regular representation.
pub fn regular_representation(alg: &StructureAlgebra) -> AlgebraRepresentation {
    let action = (0..alg.dim)
        .map(|i| alg.left_mult_matrix(&alg.basis_vec(i)))
        .collect();
    AlgebraRepresentation { dim_v: alg.dim, action }
}

/// Direct sum of two representations.
pub fn rep_direct_sum(
    a: &AlgebraRepresentation,
    b: &AlgebraRepresentation,
    n: u32,
) -> AlgebraRepresentation {
    let dv = a.dim_v + b.dim_v;
    let action = a
        .action
        .iter()
        .zip(&b.action)
        .map(|(x, y)| {
            let mut m = Mat::zero(dv, dv, n);
            for i in 0..a.dim_v {
                for j in 0..a.dim_v {
                    *m.at_mut(i, j) = x.at(i, j).clone();
                }
            }
            for i in 0..b.dim_v {
                for j in 0..b.dim_v {
                    *m.at_mut(a.dim_v + i, a.dim_v + j) = y.at(i, j).clone();
                }
            }
            m
        })
        .collect();
    AlgebraRepresentation { dim_v: dv, action }
}

/// Tensor product of two representations, with the action through Delta.
pub fn rep_tensor(
    hp: &HopfPresentation,
    a: &AlgebraRepresentation,
    b: &AlgebraRepresentation,
) -> AlgebraRepresentation {
    let n = hp.conductor();
    let dv = a.dim_v * b.dim_v;
    let action = (0..hp.dim())
        .map(|e| {
            let d = &hp.comult[e];
            let mut m = Mat::zero(dv, dv, n);
            for p in 0..hp.dim() {
                for q in 0..hp.dim() {
                    let c = &d.coeffs[p][q];
                    if c.is_zero() {
                        continue;
                    }
                    for i1 in 0..a.dim_v {
                        for j1 in 0..a.dim_v {
                            let x = a.action[p].at(i1, j1);
                            if x.is_zero() {
                                continue;
                            }
                            for i2 in 0..b.dim_v {
                                for j2 in 0..b.dim_v {
                                    let y = b.action[q].at(i2, j2);
                                    if y.is_zero() {
                                        continue;
                                    }
                                    let slot = m.at_mut(i1 * b.dim_v + i2, j1 * b.dim_v + j2);
                                    *slot = slot.add(&c.mul(x).mul(y));
                                }
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    AlgebraRepresentation { dim_v: dv, action }
}

/// The order-18 example: G = Z2 x| (Z/3)^2 with the nontrivial factor
/// inverting the second coordinate (determinant -1), H = (Z/3)^2, and the
/// symplectic twist on H.
pub fn p3_cotriangular(n: u32) -> Result<CotriangularSetup> {
    let z3 = FiniteGroup::cyclic(3);
    let h = z3.direct_product(&z3);
    // (x, y) -> (x, -y): index 3x + y -> 3x + (3 - y) mod 3.
    let flip: Vec<usize> = (0..9).map(|i| 3 * (i / 3) + (3 - i % 3) % 3).collect();
    let ident: Vec<usize> = (0..9).collect();
    let g = FiniteGroup::cyclic(2).semidirect_product(&h, &[ident, flip])?;
    // H embeds as the elements (0, a) = indices 0..9.
    let sub = Subgroup { elements: (0..9).collect() };
    let j = twist::symplectic_twist(3, n);
    cotriangular_setup(&g, &sub, &j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{sweedler_hopf, sweedler_r_g, sweedler_r_lambda};
    use crate::pointed_super::{build_hd, hn_datum};
    use crate::scalar::rat;

    #[test]
    fn trivial_twist_full_subgroup() {
        // J = 1 (x) 1 on H = G: one double coset, A* = k[G]* commutative,
        // |G| blocks of size 1, K_g = G.  J is not minimal here, so no
        // reference comparison is attempted.
        let (g, _) = FiniteGroup::symmetric(3);
        let n = 3;
        let j = TensorSquareElement::unit(&crate::algebra::group_algebra_structure(&g, n));
        let setup = cotriangular_setup(&g, &g.full_subgroup(), &j).unwrap();
        assert!(!setup.minimal);
        let rep = dual_double_coset_decomposition(&setup).unwrap();
        assert_eq!(rep.cosets.len(), 1);
        assert_eq!(rep.cosets[0].blocks, vec![1; 6]);
        assert_eq!(rep.cosets[0].k_g.len(), 6);
        // F_1 for the trivial twist: injective into the commutative
        // tensor algebra.
        let f = fg_embedding(&setup, g.identity).unwrap();
        assert_eq!(f.rank, 6);
    }

    #[test]
    fn p3_example_blocks() {
        let setup = p3_cotriangular(3).unwrap();
        assert!(setup.minimal);
        assert_eq!(setup.hopf.dim(), 18);
        let rep = dual_double_coset_decomposition(&setup).unwrap();
        assert_eq!(rep.cosets.len(), 2);
        // Coset H: nine one-dimensional blocks; coset gH: one 3-dim
        // block; each certified against the reference twisted group
        // algebra of K_g = H.
        let by_rep: Vec<_> = rep.cosets.iter().map(|c| (c.rep, c.blocks.clone())).collect();
        assert_eq!(by_rep[0], (0, vec![1; 9]));
        assert_eq!(by_rep[1], (9, vec![3]));
        for c in &rep.cosets {
            assert_eq!(c.k_g.len(), 9);
            assert_eq!(c.reference_blocks.as_ref().unwrap(), &c.blocks);
        }
        // Kaplansky for the full dual: {1 x 9, 3} all divide 18.
        let kap = kaplansky_check(&setup.hopf).unwrap();
        assert_eq!(kap.blocks, vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 3]);
        assert!(kap.all_divide);
        // F_g for the nontrivial coset: rank 9 = |H|^2 / |K_g|.
        let f = fg_embedding(&setup, 9).unwrap();
        assert_eq!(f.rank, 9);
    }

    #[test]
    fn chevalley_reports() {
        let n = 1;
        // Semisimple: radical zero, trivially Chevalley.
        let kg = HopfPresentation::group_algebra(&FiniteGroup::symmetric(3).0, 3);
        let rep = chevalley_check(&kg).unwrap();
        assert_eq!(rep.radical_dim, 0);
        assert!(rep.is_hopf_ideal && rep.tensor_action_zero);
        // Sweedler: radical = span{x, gx}, a Hopf ideal.
        let sw = sweedler_hopf(n);
        let rep = chevalley_check(&sw).unwrap();
        assert_eq!(rep.radical_dim, 2);
        assert!(rep.is_hopf_ideal && rep.tensor_action_zero);
        // H(2): Chevalley holds.
        let h2 = build_hd(&hn_datum(2, n)).unwrap();
        let rep = chevalley_check(&h2).unwrap();
        assert_eq!(rep.radical_dim, 6);
        assert!(rep.is_hopf_ideal);
    }

    #[test]
    fn categorical_dimensions() {
        let n = 1;
        let sw = sweedler_hopf(n);
        let r = sweedler_r_lambda(&Cyc::from_int(2, n), n);
        // Trivial representation: dimension 1.
        let triv = trivial_representation(&sw);
        assert_eq!(categorical_dimension(&sw, &r, &triv).unwrap(), Cyc::one(n));
        // Sign representation of g: u = g acts by -1.
        let mut sign_mats = Vec::new();
        for v in [1i64, -1, 0, 0] {
            let mut m = Mat::zero(1, 1, n);
            *m.at_mut(0, 0) = Cyc::from_int(v, n);
            sign_mats.push(m);
        }
        let sign = AlgebraRepresentation { dim_v: 1, action: sign_mats };
        assert_eq!(
            categorical_dimension(&sw, &r, &sign).unwrap(),
            Cyc::one(n).neg()
        );
        // Regular representation of Sweedler: tr(u) on the regular module
        // is 0 (u = g is a fixed-point-free permutation of the basis).
        let reg = regular_representation(&sw.algebra);
        assert_eq!(categorical_dimension(&sw, &r, &reg).unwrap(), Cyc::zero(n));
        // Additivity and multiplicativity.
        let ds = rep_direct_sum(&triv, &sign, n);
        assert_eq!(categorical_dimension(&sw, &r, &ds).unwrap(), Cyc::zero(n));
        let tp = rep_tensor(&sw, &sign, &sign);
        assert_eq!(categorical_dimension(&sw, &r, &tp).unwrap(), Cyc::one(n));
        let tp2 = rep_tensor(&sw, &sign, &reg);
        assert_eq!(
            categorical_dimension(&sw, &r, &tp2).unwrap(),
            Cyc::zero(n)
        );
        let _ = sweedler_r_g(n);
    }

    #[test]
    fn twisted_group_algebra_regular_trace() {
        // For the symplectic twist on (Z/3)^2 the Drinfeld element is 1,
        // so the categorical dimension of the regular module is dim(A).
        let n = 3;
        let z3 = FiniteGroup::cyclic(3);
        let h = z3.direct_product(&z3);
        let hp = HopfPresentation::group_algebra(&h, n);
        let j = twist::symplectic_twist(3, n);
        let t = twist::verify_twist(&hp, &j).unwrap();
        let twisted = twist::twist_hopf(&hp, &t).unwrap();
        let r = twist::twist_r(&hp, &TensorSquareElement::unit(&hp.algebra), &t).unwrap();
        let reg = regular_representation(&twisted.algebra);
        assert_eq!(
            categorical_dimension(&twisted, &r, &reg).unwrap(),
            Cyc::from_int(9, n)
        );
        let _ = rat(1, 1);
    }
}
