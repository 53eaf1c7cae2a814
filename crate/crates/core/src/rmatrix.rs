//! Quasitriangular and triangular structure: axiom verification, the
//! Drinfeld element, the involutive-grouplike structures R_u, minimal
//! parts, rank, and the map f_R : A* -> A.

use crate::hopf::{
    cube_mul, embed12, embed13, embed23, hopf_iso_check, signed_flip, tensor_inv, tensor_mul,
    AxiomReport, HopfPresentation, TensorSquareElement,
};
use crate::linalg::{Mat, Subspace};
use crate::scalar::{rat, Cyc};
use crate::{Error, Result};

/// u = sum_i S(b_i) a_i, with its inverse cached.
#[derive(Clone, Debug)]
pub struct DrinfeldElement {
    pub u: Vec<Cyc>,
    pub u_inv: Vec<Cyc>,
}

/// Check the hexagon identities and the intertwining property exactly.
pub fn verify_quasitriangular(hp: &HopfPresentation, r: &TensorSquareElement) -> AxiomReport {
    let mut failures = Vec::new();
    let alg = &hp.algebra;
    let parity = hp.parity.as_deref();

    if tensor_inv(alg, parity, r).is_err() {
        failures.push("R is not invertible".into());
    }

    // (Delta x Id)(R) = R13 R23 and (Id x Delta)(R) = R13 R12.
    let r13 = embed13(r, &alg.unit);
    let r23 = embed23(r, &alg.unit);
    let r12 = embed12(r, &alg.unit);
    if hp.comult_first(r) != cube_mul(alg, parity, &r13, &r23) {
        failures.push("(Delta x Id)(R) != R13 R23".into());
    }
    if hp.comult_second(r) != cube_mul(alg, parity, &r13, &r12) {
        failures.push("(Id x Delta)(R) != R13 R12".into());
    }

    // Delta^cop(a) R = R Delta(a) on every basis element.
    for i in 0..hp.dim() {
        let cop = signed_flip(&hp.comult[i], parity);
        let lhs = tensor_mul(alg, parity, &cop, r);
        let rhs = tensor_mul(alg, parity, r, &hp.comult[i]);
        if lhs != rhs {
            failures.push(format!("Delta^cop(a)R != R Delta(a) at basis {i}"));
            break;
        }
    }

    AxiomReport { failures }
}

pub fn verify_quasitriangular_ok(hp: &HopfPresentation, r: &TensorSquareElement) -> Result<()> {
    let rep = verify_quasitriangular(hp, r);
    if rep.ok() {
        Ok(())
    } else {
        Err(Error::VerificationFailed(rep.failures.join("; ")))
    }
}

/// R . R_21 = 1 (x) 1, exactly.
pub fn is_triangular(hp: &HopfPresentation, r: &TensorSquareElement) -> bool {
    let parity = hp.parity.as_deref();
    let flipped = signed_flip(r, parity);
    tensor_mul(&hp.algebra, parity, r, &flipped) == TensorSquareElement::unit(&hp.algebra)
}

/// The Drinfeld element u = m(S x Id)(R_21); verifies invertibility and
/// S^2 = Ad(u), and that u is grouplike whenever R is triangular.
pub fn drinfeld_element(hp: &HopfPresentation, r: &TensorSquareElement) -> Result<DrinfeldElement> {
    let alg = &hp.algebra;
    let dim = hp.dim();
    let n = hp.conductor();
    let mut u = vec![Cyc::zero(n); dim];
    for i in 0..dim {
        for j in 0..dim {
            let c = &r.coeffs[i][j];
            if c.is_zero() {
                continue;
            }
            // R = sum a_i (x) b_i contributes S(b)a = S(e_j) e_i.
            let term = alg.mul_vec(&hp.antipode.col(j), &alg.basis_vec(i));
            for t in 0..dim {
                u[t] = u[t].add(&c.mul(&term[t]));
            }
        }
    }
    let u_inv = alg.element_inverse(&u)?;
    // S^2 = Ad(u).
    let s2 = hp.antipode.matmul(&hp.antipode);
    for k in 0..dim {
        let lhs = s2.col(k);
        let rhs = alg.mul_vec(&alg.mul_vec(&u, &alg.basis_vec(k)), &u_inv);
        if lhs != rhs {
            return Err(Error::VerificationFailed(format!(
                "S^2 != Ad(u) at basis {k}"
            )));
        }
    }
    if is_triangular(hp, r) {
        let gg = TensorSquareElement::from_pure(&u, &u, n);
        if hp.comult_vec(&u) != gg || !hp.counit_vec(&u).is_one() {
            return Err(Error::VerificationFailed(
                "triangular structure whose Drinfeld element is not grouplike".into(),
            ));
        }
    }
    Ok(DrinfeldElement { u, u_inv })
}

/// R_u = (1/2)(1x1 + 1xu + ux1 - uxu) for an involutive grouplike u.
pub fn r_u(hp: &HopfPresentation, u: &[Cyc]) -> Result<TensorSquareElement> {
    let alg = &hp.algebra;
    let n = hp.conductor();
    if hp.comult_vec(u) != TensorSquareElement::from_pure(u, u, n)
        || !hp.counit_vec(u).is_one()
    {
        return Err(Error::Invalid("u is not grouplike".into()));
    }
    if alg.mul_vec(u, u) != alg.unit {
        return Err(Error::Invalid("u is not involutive".into()));
    }
    let one = &alg.unit;
    let half = rat(1, 2);
    let mut out = TensorSquareElement::from_pure(one, one, n)
        .add(&TensorSquareElement::from_pure(one, u, n))
        .add(&TensorSquareElement::from_pure(u, one, n))
        .sub(&TensorSquareElement::from_pure(u, u, n));
    out = out.scale(&Cyc::from_rat(half, n));
    Ok(out)
}

/// The minimal part A_m: the sub-Hopf-algebra generated by the tensor legs
/// of R, together with its rank (= dim A_m) and the inclusion data.
pub struct MinimalPart {
    pub presentation: HopfPresentation,
    pub rank: usize,
    /// basis[i] = the i-th basis vector of A_m inside A.
    pub basis: Vec<Vec<Cyc>>,
    /// R rewritten in the A_m basis.
    pub r_sub: TensorSquareElement,
}

pub fn minimal_part(hp: &HopfPresentation, r: &TensorSquareElement) -> Result<MinimalPart> {
    let alg = &hp.algebra;
    let dim = hp.dim();
    let n = hp.conductor();
    // Tensor legs: columns (left factors) and rows (right factors) of R.
    let mut seeds: Vec<Vec<Cyc>> = Vec::new();
    for j in 0..dim {
        let col: Vec<Cyc> = (0..dim).map(|i| r.coeffs[i][j].clone()).collect();
        if col.iter().any(|c| !c.is_zero()) {
            seeds.push(col);
        }
    }
    for i in 0..dim {
        let row = r.coeffs[i].clone();
        if row.iter().any(|c| !c.is_zero()) {
            seeds.push(row);
        }
    }
    // Close under multiplication and antipode until stable.
    let mut basis = alg.generated_subalgebra(&seeds);
    loop {
        let mut space = Subspace::new(dim, n);
        for v in &basis {
            space.insert(v);
        }
        let mut grew = false;
        for v in basis.clone() {
            if space.insert(&hp.antipode_vec(&v)) {
                grew = true;
            }
        }
        if !grew {
            break;
        }
        basis = alg.generated_subalgebra(space.basis());
    }
    let mut space = Subspace::new(dim, n);
    for v in &basis {
        space.insert(v);
    }
    let sub_basis: Vec<Vec<Cyc>> = space.basis().to_vec();
    let pivots = space.pivot_columns();
    let rank = sub_basis.len();

    // Coordinates in the reduced-echelon basis are just the pivot entries.
    let coords = |v: &[Cyc]| -> Vec<Cyc> { pivots.iter().map(|&p| v[p].clone()).collect() };
    let in_span_tensor = |m: &TensorSquareElement| -> Option<Vec<Vec<Cyc>>> {
        let x: Vec<Vec<Cyc>> = pivots
            .iter()
            .map(|&p| pivots.iter().map(|&q| m.coeffs[p][q].clone()).collect())
            .collect();
        // Reconstruct and compare.
        let mut rebuilt = TensorSquareElement::zero(dim, n);
        for (a, row) in x.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (s, vs) in sub_basis[a].iter().enumerate() {
                    if vs.is_zero() {
                        continue;
                    }
                    for (t, wt) in sub_basis[b].iter().enumerate() {
                        if !wt.is_zero() {
                            rebuilt.coeffs[s][t] =
                                rebuilt.coeffs[s][t].add(&c.mul(vs).mul(wt));
                        }
                    }
                }
            }
        }
        if rebuilt == *m {
            Some(x)
        } else {
            None
        }
    };

    // Assemble the sub-presentation.
    let mut mult: Vec<Vec<Vec<(usize, Cyc)>>> = vec![vec![Vec::new(); rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let p = alg.mul_vec(&sub_basis[i], &sub_basis[j]);
            if !space.contains(&p) {
                return Err(Error::VerificationFailed(
                    "minimal part is not closed under multiplication".into(),
                ));
            }
            mult[i][j] = coords(&p)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
    }
    if !space.contains(&alg.unit) {
        return Err(Error::VerificationFailed("minimal part does not contain 1".into()));
    }
    let algebra = crate::algebra::StructureAlgebra {
        dim: rank,
        conductor: n,
        mult,
        unit: coords(&alg.unit),
    };
    let mut comult = Vec::new();
    for b in &sub_basis {
        let full = hp.comult_vec(b);
        let x = in_span_tensor(&full).ok_or_else(|| {
            Error::VerificationFailed("minimal part is not closed under Delta".into())
        })?;
        comult.push(TensorSquareElement { dim: rank, conductor: n, coeffs: x });
    }
    let counit: Vec<Cyc> = sub_basis.iter().map(|b| hp.counit_vec(b)).collect();
    let mut antipode = Mat::zero(rank, rank, n);
    for (i, b) in sub_basis.iter().enumerate() {
        let s = hp.antipode_vec(b);
        if !space.contains(&s) {
            return Err(Error::VerificationFailed(
                "minimal part is not closed under the antipode".into(),
            ));
        }
        for (k, c) in coords(&s).into_iter().enumerate() {
            *antipode.at_mut(k, i) = c;
        }
    }
    let parity = match &hp.parity {
        None => None,
        Some(p) => {
            // The sub-basis must be parity-homogeneous for the super
            // structure to restrict.
            let mut sub_p = Vec::with_capacity(rank);
            for b in &sub_basis {
                let supp: Vec<u8> = (0..dim)
                    .filter(|&i| !b[i].is_zero())
                    .map(|i| p[i])
                    .collect();
                if supp.windows(2).any(|w| w[0] != w[1]) {
                    return Err(Error::Invalid(
                        "minimal part basis is not parity-homogeneous".into(),
                    ));
                }
                sub_p.push(supp[0]);
            }
            Some(sub_p)
        }
    };
    let presentation = HopfPresentation { algebra, comult, counit, antipode, parity };
    presentation.verify_ok()?;

    let r_sub = in_span_tensor(r)
        .map(|x| TensorSquareElement { dim: rank, conductor: n, coeffs: x })
        .ok_or_else(|| Error::VerificationFailed("R does not lie in A_m (x) A_m".into()))?;

    Ok(MinimalPart { presentation, rank, basis: sub_basis, r_sub })
}

/// The matrix of f_R(p) = sum <p, a_i> b_i, i.e. the transpose of R's
/// coefficient matrix.
pub fn f_r_matrix(r: &TensorSquareElement) -> Mat {
    Mat::from_rows(r.coeffs.clone(), r.conductor).transpose()
}

/// For a minimal triangular input, verify that f_R is a Hopf algebra
/// isomorphism A_m^{* cop} -> A_m.
pub fn verify_f_r_iso(hp: &HopfPresentation, r: &TensorSquareElement) -> Result<()> {
    let mp = minimal_part(hp, r)?;
    let src = mp.presentation.dual_hopf().cop()?;
    // In the sub-basis and its dual basis, f_R(delta_k) = sum_j (R_m)_kj b_j,
    // so the matrix (column k = image of delta_k) is the transpose of R_m.
    let f = f_r_matrix(&mp.r_sub);
    hopf_iso_check(&src, &mp.presentation, &f)
}
