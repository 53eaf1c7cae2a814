//! Twists: verification, gauge transformation, the twisting operation on a
//! Hopf presentation, abelian twists from 2-cocycles of the character
//! group, and the Movshev machinery (the twisted coalgebra A_J, its
//! semisimple dual algebra, stabilizer subgroups, and quasitwist
//! extraction from group coalgebras).

use crate::algebra::StructureAlgebra;
use crate::group::{Character, FiniteGroup, Subgroup, TwoCocycle};
use crate::hopf::{
    cube_mul, embed12, embed23, tensor_inv, tensor_mul, HopfPresentation, TensorSquareElement,
};
use crate::linalg::Mat;
use crate::scalar::{rat, Cyc};
use crate::{Error, Result};

/// A certified twist with its cached inverse.
#[derive(Clone, Debug)]
pub struct Twist {
    pub j: TensorSquareElement,
    pub j_inv: TensorSquareElement,
}

/// The quasitwist identity (Delta x Id)(J)(J x 1) = (Id x Delta)(J)(1 x J)
/// plus the counit normalization, without demanding invertibility.
pub fn verify_quasitwist(hp: &HopfPresentation, j: &TensorSquareElement) -> Result<()> {
    let alg = &hp.algebra;
    let parity = hp.parity.as_deref();
    let lhs = cube_mul(alg, parity, &hp.comult_first(j), &embed12(j, &alg.unit));
    let rhs = cube_mul(alg, parity, &hp.comult_second(j), &embed23(j, &alg.unit));
    if lhs != rhs {
        return Err(Error::VerificationFailed("quasitwist identity fails".into()));
    }
    let dim = hp.dim();
    let n = hp.conductor();
    let mut left = vec![Cyc::zero(n); dim];
    let mut right = vec![Cyc::zero(n); dim];
    for i in 0..dim {
        for k in 0..dim {
            let c = &j.coeffs[i][k];
            if c.is_zero() {
                continue;
            }
            left[k] = left[k].add(&c.mul(&hp.counit[i]));
            right[i] = right[i].add(&c.mul(&hp.counit[k]));
        }
    }
    if left != alg.unit || right != alg.unit {
        return Err(Error::VerificationFailed(
            "counit normalization (eps x Id)(J) = (Id x eps)(J) = 1 fails".into(),
        ));
    }
    Ok(())
}

/// Full twist check; distinguishes "not a quasitwist" from "quasitwist but
/// not invertible".
pub fn verify_twist(hp: &HopfPresentation, j: &TensorSquareElement) -> Result<Twist> {
    verify_quasitwist(hp, j)?;
    let j_inv = tensor_inv(&hp.algebra, hp.parity.as_deref(), j)
        .map_err(|_| Error::NotInvertible)?;
    Ok(Twist { j: j.clone(), j_inv })
}

/// Gauge transformation J^x = Delta(x) J (x^-1 (x) x^-1) for invertible x
/// with eps(x) = 1; the result is re-certified.
pub fn gauge(hp: &HopfPresentation, t: &Twist, x: &[Cyc]) -> Result<Twist> {
    if !hp.counit_vec(x).is_one() {
        return Err(Error::Invalid("gauge element must have eps(x) = 1".into()));
    }
    let alg = &hp.algebra;
    let parity = hp.parity.as_deref();
    let xi = alg.element_inverse(x)?;
    let dx = hp.comult_vec(x);
    let tail = TensorSquareElement::from_pure(&xi, &xi, hp.conductor());
    let jx = tensor_mul(alg, parity, &tensor_mul(alg, parity, &dx, &t.j), &tail);
    verify_twist(hp, &jx)
}

/// The twisted Hopf algebra A^J: same product,
/// Delta^J(a) = J^-1 Delta(a) J, S^J(a) = Q^-1 S(a) Q with
/// Q = m(S x Id)(J).  The output is re-verified.
pub fn twist_hopf(hp: &HopfPresentation, t: &Twist) -> Result<HopfPresentation> {
    let alg = &hp.algebra;
    let parity = hp.parity.as_deref();
    let dim = hp.dim();
    let n = hp.conductor();
    let comult: Vec<TensorSquareElement> = (0..dim)
        .map(|i| {
            tensor_mul(
                alg,
                parity,
                &tensor_mul(alg, parity, &t.j_inv, &hp.comult[i]),
                &t.j,
            )
        })
        .collect();
    // Q = sum J_ij S(e_i) e_j.
    let mut q = vec![Cyc::zero(n); dim];
    for i in 0..dim {
        for j in 0..dim {
            let c = &t.j.coeffs[i][j];
            if c.is_zero() {
                continue;
            }
            let term = alg.mul_vec(&hp.antipode.col(i), &alg.basis_vec(j));
            for s in 0..dim {
                q[s] = q[s].add(&c.mul(&term[s]));
            }
        }
    }
    let q_inv = alg.element_inverse(&q)?;
    let mut antipode = Mat::zero(dim, dim, n);
    for i in 0..dim {
        let v = alg.mul_vec(&alg.mul_vec(&q_inv, &hp.antipode.col(i)), &q);
        for s in 0..dim {
            *antipode.at_mut(s, i) = v[s].clone();
        }
    }
    let out = HopfPresentation {
        algebra: alg.clone(),
        comult,
        counit: hp.counit.clone(),
        antipode,
        parity: hp.parity.clone(),
    };
    out.verify_ok()?;
    Ok(out)
}

/// R^J = J_21^-1 R J.
pub fn twist_r(
    hp: &HopfPresentation,
    r: &TensorSquareElement,
    t: &Twist,
) -> Result<TensorSquareElement> {
    let alg = &hp.algebra;
    let parity = hp.parity.as_deref();
    let j21_inv = tensor_inv(alg, parity, &crate::hopf::signed_flip(&t.j, parity))?;
    Ok(tensor_mul(alg, parity, &tensor_mul(alg, parity, &j21_inv, r), &t.j))
}

/// The coalgebra A_J = (k[G], Delta_J) with Delta_J(g) = (g (x) g)J.
pub struct MovshevCoalgebra {
    pub group: FiniteGroup,
    pub j: TensorSquareElement,
    pub comult: Vec<TensorSquareElement>,
    pub counit: Vec<Cyc>,
}

pub fn movshev_coalgebra(g: &FiniteGroup, j: &TensorSquareElement) -> Result<MovshevCoalgebra> {
    let dim = g.order;
    let n = j.conductor;
    if j.dim != dim {
        return Err(Error::Invalid("J must live on k[G] (x) k[G]".into()));
    }
    let comult: Vec<TensorSquareElement> = (0..dim)
        .map(|x| {
            let mut t = TensorSquareElement::zero(dim, n);
            for a in 0..dim {
                for b in 0..dim {
                    // coefficient of a (x) b in (x (x) x) J.
                    let c = &j.coeffs[g.mul(g.inv(x), a)][g.mul(g.inv(x), b)];
                    t.coeffs[a][b] = c.clone();
                }
            }
            // Rewriting: (x(x)x)J has coefficient J_{x^-1 a, x^-1 b}.
            let mut fixed = TensorSquareElement::zero(dim, n);
            for a in 0..dim {
                for b in 0..dim {
                    fixed.coeffs[g.mul(x, a)][g.mul(x, b)] = j.coeffs[a][b].clone();
                }
            }
            debug_assert_eq!(t, fixed);
            t
        })
        .collect();
    let counit = vec![Cyc::one(n); dim];
    let c = MovshevCoalgebra { group: g.clone(), j: j.clone(), comult, counit };
    // Coassociativity (holds iff J is a quasitwist).
    for x in 0..dim {
        let lhs = apply_comult_first(&c, &c.comult[x]);
        let rhs = apply_comult_second(&c, &c.comult[x]);
        if lhs != rhs {
            return Err(Error::VerificationFailed(format!(
                "Delta_J is not coassociative at basis {x} (J is not a quasitwist)"
            )));
        }
    }
    Ok(c)
}

fn apply_comult_first(c: &MovshevCoalgebra, x: &TensorSquareElement) -> crate::hopf::TensorCube {
    let dim = x.dim;
    let mut out = crate::hopf::TensorCube::zero(dim, x.conductor);
    for i in 0..dim {
        for k in 0..dim {
            let v = &x.coeffs[i][k];
            if v.is_zero() {
                continue;
            }
            for a in 0..dim {
                for b in 0..dim {
                    let d = &c.comult[i].coeffs[a][b];
                    if !d.is_zero() {
                        let id = out.idx(a, b, k);
                        out.coeffs[id] = out.coeffs[id].add(&v.mul(d));
                    }
                }
            }
        }
    }
    out
}

fn apply_comult_second(c: &MovshevCoalgebra, x: &TensorSquareElement) -> crate::hopf::TensorCube {
    let dim = x.dim;
    let mut out = crate::hopf::TensorCube::zero(dim, x.conductor);
    for i in 0..dim {
        for k in 0..dim {
            let v = &x.coeffs[i][k];
            if v.is_zero() {
                continue;
            }
            for a in 0..dim {
                for b in 0..dim {
                    let d = &c.comult[k].coeffs[a][b];
                    if !d.is_zero() {
                        let id = out.idx(i, a, b);
                        out.coeffs[id] = out.coeffs[id].add(&v.mul(d));
                    }
                }
            }
        }
    }
    out
}

/// The dual algebra (A_J)*: delta_a delta_b = sum_g J_{g^-1 a, g^-1 b}
/// delta_g.  Semisimplicity (zero radical) is asserted.
pub fn movshev_dual_algebra(g: &FiniteGroup, j: &TensorSquareElement) -> Result<StructureAlgebra> {
    let c = movshev_coalgebra(g, j)?;
    let dim = g.order;
    let n = j.conductor;
    let mut mult: Vec<Vec<Vec<(usize, Cyc)>>> = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let mut row = Vec::new();
            for x in 0..dim {
                let coeff = &c.comult[x].coeffs[a][b];
                if !coeff.is_zero() {
                    row.push((x, coeff.clone()));
                }
            }
            mult[a][b] = row;
        }
    }
    let unit = c.counit.clone();
    let alg = StructureAlgebra { dim, conductor: n, mult, unit };
    alg.verify()?;
    if !alg.jacobson_radical().is_empty() {
        return Err(Error::VerificationFailed(
            "(A_J)* has a nonzero radical; J is not a quasitwist for k[G]".into(),
        ));
    }
    Ok(alg)
}

/// Left translation rho(g) delta_y = delta_{gy} as a coefficient-vector map.
pub fn translate(g: &FiniteGroup, elem: usize, v: &[Cyc]) -> Vec<Cyc> {
    let mut out = vec![Cyc::zero(v[0].conductor()); v.len()];
    for (y, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out[g.mul(elem, y)] = c.clone();
        }
    }
    out
}

/// The stabilizer St of a primitive central idempotent of (A_J)* under the
/// translation action.  The expected block structure is verified: all
/// blocks have size |St|^(1/2) and there are |G/St| of them.
pub fn movshev_stabilizer(g: &FiniteGroup, j: &TensorSquareElement) -> Result<Subgroup> {
    let alg = movshev_dual_algebra(g, j)?;
    let zbasis = alg.center();
    let mut idems = alg.split_commutative(&zbasis)?;
    idems.sort_by_key(|e| format!("{e:?}"));
    let e0 = &idems[0];
    let elements: Vec<usize> = (0..g.order)
        .filter(|&h| translate(g, h, e0) == *e0)
        .collect();
    let st = Subgroup { elements };
    // Subgroup sanity.
    let regen = g.subgroup_generated(&st.elements);
    if regen != st {
        return Err(Error::VerificationFailed("stabilizer is not a subgroup".into()));
    }
    // Block shape: |G/St| blocks of size |St|^(1/2).
    let dims = alg.block_profile()?;
    let st_order = st.order();
    let root = (st_order as f64).sqrt().round() as usize;
    if root * root != st_order
        || dims.len() != g.order / st_order
        || dims.iter().any(|&d| d != root)
    {
        return Err(Error::VerificationFailed(format!(
            "block profile {dims:?} does not match stabilizer of order {st_order}"
        )));
    }
    Ok(st)
}

/// Find lambda with eps(lambda) = 1 whose translates form a basis, and read
/// off the quasitwist J with Delta(lambda) = sum J_{a,b} (a lambda)(x)(b
/// lambda).  The search order is deterministic: basis vectors, then 0/1
/// sums in lexicographic order, up to `budget` candidates.
pub fn extract_quasitwist(
    c: &MovshevCoalgebra,
    budget: usize,
) -> Result<TensorSquareElement> {
    let g = &c.group;
    let dim = g.order;
    let n = c.j.conductor;
    let mut tried = 0usize;
    let mut candidates: Vec<Vec<Cyc>> = Vec::new();
    for i in 0..dim {
        let mut v = vec![Cyc::zero(n); dim];
        v[i] = Cyc::one(n);
        candidates.push(v);
    }
    let mut mask: u64 = 0;
    let enumerate_masks = dim <= 16;
    loop {
        let lambda = if let Some(v) = candidates.pop() {
            v
        } else if enumerate_masks {
            mask += 1;
            if mask >= (1u64 << dim) {
                break;
            }
            let mut v = vec![Cyc::zero(n); dim];
            for y in 0..dim {
                if mask >> y & 1 == 1 {
                    v[y] = Cyc::one(n);
                }
            }
            v
        } else {
            break;
        };
        tried += 1;
        if tried > budget {
            return Err(Error::BudgetExhausted(
                "no lambda with invertible translate matrix found within budget".into(),
            ));
        }
        // Normalize eps(lambda) = 1.
        let eps: Cyc = lambda
            .iter()
            .zip(&c.counit)
            .fold(Cyc::zero(n), |acc, (l, e)| acc.add(&l.mul(e)));
        if eps.is_zero() {
            continue;
        }
        let scale = eps.inv()?;
        let lambda: Vec<Cyc> = lambda.iter().map(|x| x.mul(&scale)).collect();
        // B: column g = g . lambda.
        let mut b = Mat::zero(dim, dim, n);
        for h in 0..dim {
            let col = translate(g, h, &lambda);
            for (y, v) in col.into_iter().enumerate() {
                *b.at_mut(y, h) = v;
            }
        }
        let Ok(b_inv) = b.inverse() else { continue };
        // Delta(lambda) as a matrix, conjugated into the translate basis.
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
        // Certify against the *group algebra* comultiplication.
        let hp = HopfPresentation::group_algebra(g, n);
        verify_quasitwist(&hp, &j)?;
        return Ok(j);
    }
    Err(Error::VerificationFailed(
        "no valid lambda: the coalgebra is not isomorphic to the regular representation".into(),
    ))
}

/// Best-effort gauge-equivalence search: looks for x with eps(x)=1 and
/// j2 = Delta(x) j1 (x^-1 (x) x^-1).  Candidates: grouplikes (when the
/// field splits them), then 0/1-support vectors in lexicographic order up
/// to `budget`.  Ok(Some(x)) is a certificate; Ok(None) is inconclusive,
/// never a proof of inequivalence.
pub fn gauge_equivalent(
    hp: &HopfPresentation,
    j1: &TensorSquareElement,
    j2: &TensorSquareElement,
    budget: usize,
) -> Result<Option<Vec<Cyc>>> {
    let t1 = verify_twist(hp, j1)?;
    verify_twist(hp, j2)?;
    let dim = hp.dim();
    let n = hp.conductor();
    let mut candidates: Vec<Vec<Cyc>> = Vec::new();
    if let Ok(gl) = hp.grouplikes() {
        candidates.extend(gl.elements);
    }
    let enumerate_masks = dim <= 16;
    let mut tried = 0usize;
    let mut mask: u64 = 0;
    loop {
        let x = if let Some(v) = candidates.pop() {
            v
        } else if enumerate_masks {
            mask += 1;
            if mask >= (1u64 << dim) {
                return Ok(None);
            }
            let mut v = vec![Cyc::zero(n); dim];
            for y in 0..dim {
                if mask >> y & 1 == 1 {
                    v[y] = Cyc::one(n);
                }
            }
            v
        } else {
            return Ok(None);
        };
        tried += 1;
        if tried > budget {
            return Ok(None);
        }
        let eps = hp.counit_vec(&x);
        if eps.is_zero() {
            continue;
        }
        let scale = eps.inv()?;
        let x: Vec<Cyc> = x.iter().map(|c| c.mul(&scale)).collect();
        if hp.algebra.element_inverse(&x).is_err() {
            continue;
        }
        if let Ok(gauged) = gauge(hp, &t1, &x) {
            if gauged.j == *j2 {
                return Ok(Some(x));
            }
        }
    }
}

/// The twist of k[A] (A abelian) attached to a 2-cocycle c of the
/// character group: J = sum c(chi,psi) E_chi (x) E_psi, with
/// E_chi = |A|^-1 sum chi(g^-1) g so that psi(E_chi) = [psi = chi] and the
/// inverse correspondence (chi (x) psi)(J) = c(chi, psi) holds on the nose.
pub fn abelian_twist(
    a: &FiniteGroup,
    dual: &FiniteGroup,
    chars: &[Character],
    c: &TwoCocycle,
    n: u32,
) -> Result<Twist> {
    c.verify(dual)?;
    let dim = a.order;
    let inv_order = Cyc::from_rat(rat(1, dim as i64), n);
    let idem = |chi: &Character| -> Vec<Cyc> {
        (0..dim)
            .map(|g| chi.values[a.inv(g)].embed(n).unwrap().mul(&inv_order))
            .collect()
    };
    let idems: Vec<Vec<Cyc>> = chars.iter().map(idem).collect();
    let mut j = TensorSquareElement::zero(dim, n);
    for (x, ex) in idems.iter().enumerate() {
        for (y, ey) in idems.iter().enumerate() {
            let cc = c.eval(x, y).embed(n)?;
            if cc.is_zero() {
                continue;
            }
            for p in 0..dim {
                if ex[p].is_zero() {
                    continue;
                }
                for q in 0..dim {
                    if !ey[q].is_zero() {
                        j.coeffs[p][q] = j.coeffs[p][q].add(&cc.mul(&ex[p]).mul(&ey[q]));
                    }
                }
            }
        }
    }
    let hp = HopfPresentation::group_algebra(a, n);
    let t = verify_twist(&hp, &j)?;
    // Inverse correspondence.
    for (x, chi) in chars.iter().enumerate() {
        for (y, psi) in chars.iter().enumerate() {
            let mut val = Cyc::zero(n);
            for p in 0..dim {
                for q in 0..dim {
                    let co = &t.j.coeffs[p][q];
                    if !co.is_zero() {
                        val = val.add(
                            &co.mul(&chi.values[p].embed(n)?).mul(&psi.values[q].embed(n)?),
                        );
                    }
                }
            }
            if val != c.eval(x, y).embed(n)? {
                return Err(Error::VerificationFailed(
                    "inverse correspondence (chi x psi)(J) = c(chi,psi) fails".into(),
                ));
            }
        }
    }
    Ok(t)
}

/// The closed-form minimal twist for k[(Z/pZ)^2]:
/// J = p^-2 sum_{a,b} (a,b) a (x) b with the standard symplectic pairing
/// ((x,y),(x',y')) = zeta_p^(x y' - y x').  Index convention: (x,y) ->
/// p*x + y; the conductor must be a multiple of p.
pub fn symplectic_twist(p: usize, n: u32) -> TensorSquareElement {
    let dim = p * p;
    let mut j = TensorSquareElement::zero(dim, n);
    let scale = Cyc::from_rat(rat(1, (dim) as i64), n);
    let step = (n as usize / p) as i64;
    for a in 0..dim {
        let (x, y) = ((a / p) as i64, (a % p) as i64);
        for b in 0..dim {
            let (x2, y2) = ((b / p) as i64, (b % p) as i64);
            let phase = Cyc::root_of_unity((x * y2 - y * x2) * step, n);
            j.coeffs[a][b] = phase.mul(&scale);
        }
    }
    j
}
