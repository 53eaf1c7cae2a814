//! Finite-dimensional associative unital algebras given by structure
//! constants, with the semisimple-structure toolkit: Jacobson radical,
//! center, quotients, primitive idempotents of commutative pieces, and
//! Wedderburn block sizes.

use serde::{Deserialize, Serialize};

use crate::linalg::{self, Mat, Subspace};
use crate::scalar::Cyc;
use crate::{Error, Result};

/// e_i * e_j = sum over the sparse row mult[i][j] of coeff * e_k.
/// Rows only store nonzero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureAlgebra {
    pub dim: usize,
    pub conductor: u32,
    pub mult: Vec<Vec<Vec<(usize, Cyc)>>>,
    pub unit: Vec<Cyc>,
}

impl StructureAlgebra {
    pub fn zero_vec(&self) -> Vec<Cyc> {
        vec![Cyc::zero(self.conductor); self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Cyc> {
        let mut v = self.zero_vec();
        v[i] = Cyc::one(self.conductor);
        v
    }

    /// Product of two coefficient vectors.
    pub fn mul_vec(&self, a: &[Cyc], b: &[Cyc]) -> Vec<Cyc> {
        let mut out = self.zero_vec();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.mul(bj);
                for (k, s) in &self.mult[i][j] {
                    out[*k] = out[*k].add(&c.mul(s));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a`: column j holds a * e_j.
    pub fn left_mult_matrix(&self, a: &[Cyc]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim, self.conductor);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, s) in &self.mult[i][j] {
                    *m.at_mut(*k, j) = m.at(*k, j).add(&ai.mul(s));
                }
            }
        }
        m
    }

    /// trace of left multiplication by `a`.
    pub fn trace_left_mult(&self, a: &[Cyc]) -> Cyc {
        let mut t = Cyc::zero(self.conductor);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                for (l, s) in &self.mult[i][k] {
                    if *l == k {
                        t = t.add(&ai.mul(s));
                    }
                }
            }
        }
        t
    }

    /// Exhaustive associativity and unit-law check; the error message
    /// carries a witness triple on failure.
    pub fn verify(&self) -> Result<()> {
        if self.unit.len() != self.dim {
            return Err(Error::VerificationFailed("unit vector has wrong length".into()));
        }
        for j in 0..self.dim {
            let e = self.basis_vec(j);
            if self.mul_vec(&self.unit, &e) != e {
                return Err(Error::VerificationFailed(format!("left unit law fails on e_{j}")));
            }
            if self.mul_vec(&e, &self.unit) != e {
                return Err(Error::VerificationFailed(format!("right unit law fails on e_{j}")));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                // (e_i e_j) e_k vs e_i (e_j e_k), sparse accumulation.
                for k in 0..self.dim {
                    let mut lhs = self.zero_vec();
                    for (p, c) in &self.mult[i][j] {
                        for (q, d) in &self.mult[*p][k] {
                            lhs[*q] = lhs[*q].add(&c.mul(d));
                        }
                    }
                    let mut rhs = self.zero_vec();
                    for (p, c) in &self.mult[j][k] {
                        for (q, d) in &self.mult[i][*p] {
                            rhs[*q] = rhs[*q].add(&c.mul(d));
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::VerificationFailed(format!(
                            "associativity fails at basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Kernel of the trace form (a,b) -> tr(L_ab).  In characteristic zero
    /// this is exactly the Jacobson radical (Dickson's criterion).
    pub fn jacobson_radical(&self) -> Vec<Vec<Cyc>> {
        let mut gram: Vec<Vec<Cyc>> = vec![vec![Cyc::zero(self.conductor); self.dim]; self.dim];
        // tr(L_{e_i e_j}) = sum_k mult[i][j][k] * tr(L_{e_k}); precompute the
        // basis traces once.
        let basis_traces: Vec<Cyc> =
            (0..self.dim).map(|k| self.trace_left_mult(&self.basis_vec(k))).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut t = Cyc::zero(self.conductor);
                for (k, s) in &self.mult[i][j] {
                    t = t.add(&s.mul(&basis_traces[*k]));
                }
                gram[i][j] = t;
            }
        }
        linalg::kernel(&gram, self.dim, self.conductor)
    }

    /// Basis of the center {z : ze_i = e_i z for all i}.
    pub fn center(&self) -> Vec<Vec<Cyc>> {
        let mut rows: Vec<Vec<Cyc>> = Vec::new();
        for i in 0..self.dim {
            // For each output coordinate k: sum_j z_j (m[i][j][k] - m[j][i][k]) = 0.
            let mut block: Vec<Vec<Cyc>> =
                vec![vec![Cyc::zero(self.conductor); self.dim]; self.dim];
            for j in 0..self.dim {
                for (k, s) in &self.mult[i][j] {
                    block[*k][j] = block[*k][j].add(s);
                }
                for (k, s) in &self.mult[j][i] {
                    block[*k][j] = block[*k][j].sub(s);
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
        }
        linalg::kernel(&rows, self.dim, self.conductor)
    }

    /// Smallest unital subalgebra containing the given vectors, as an
    /// echelonized basis.
    pub fn generated_subalgebra(&self, seeds: &[Vec<Cyc>]) -> Vec<Vec<Cyc>> {
        let mut space = Subspace::new(self.dim, self.conductor);
        space.insert(&self.unit);
        for s in seeds {
            space.insert(s);
        }
        loop {
            let basis: Vec<Vec<Cyc>> = space.basis().to_vec();
            let mut grew = false;
            for a in &basis {
                for b in &basis {
                    if space.insert(&self.mul_vec(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return space.basis().to_vec();
            }
        }
    }

    /// Quotient by a two-sided ideal spanned by `ideal` (not verified to be
    /// an ideal; callers pass radicals and verified Hopf ideals).
    pub fn quotient(&self, ideal: &[Vec<Cyc>]) -> Quotient {
        let mut sub = Subspace::new(self.dim, self.conductor);
        for v in ideal {
            sub.insert(v);
        }
        let pivot_cols: Vec<usize> = sub.pivot_columns();
        let free: Vec<usize> =
            (0..self.dim).filter(|c| !pivot_cols.contains(c)).collect();
        let qdim = free.len();
        let project = |x: &[Cyc]| -> Vec<Cyc> {
            let r = sub.reduce(x);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let lift: Vec<Vec<Cyc>> = free
            .iter()
            .map(|&c| {
                let mut v = self.zero_vec();
                v[c] = Cyc::one(self.conductor);
                v
            })
            .collect();
        let mut mult = vec![vec![Vec::new(); qdim]; qdim];
        for i in 0..qdim {
            for j in 0..qdim {
                let p = project(&self.mul_vec(&lift[i], &lift[j]));
                mult[i][j] = p
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }
        let unit = project(&self.unit);
        let proj_rows: Vec<Vec<Cyc>> =
            (0..self.dim).map(|j| project(&self.basis_vec(j))).collect();
        // proj matrix is qdim x dim: column j = class of e_j.
        let proj = Mat::from_rows(proj_rows, self.conductor).transpose();
        Quotient {
            algebra: StructureAlgebra { dim: qdim, conductor: self.conductor, mult, unit },
            lift,
            project: proj,
        }
    }

    /// Primitive idempotents of a commutative, unital, multiplicatively
    /// closed subalgebra (given by a basis) that splits over the ground
    /// field.  Fails with EnlargeConductor when a component resists
    /// splitting by elements of the deterministic sequence (basis elements,
    /// then pairwise sums) or when an eigenvalue is not of the monomial
    /// form q * zeta^j.
    pub fn split_commutative(&self, zbasis: &[Vec<Cyc>]) -> Result<Vec<Vec<Cyc>>> {
        let n = self.conductor;
        let m = zbasis.len();
        let mut zspace = Subspace::new(self.dim, n);
        for v in zbasis {
            zspace.insert(v);
        }
        if zspace.dim() != m {
            return Err(Error::Invalid("subalgebra basis is linearly dependent".into()));
        }
        let zb: Vec<Vec<Cyc>> = zspace.basis().to_vec();
        // Multiplication matrices in subalgebra coordinates.
        let mult_matrix = |s: &[Cyc]| -> Result<Vec<Vec<Cyc>>> {
            let mut cols = Vec::with_capacity(m);
            for z in &zb {
                let w = self.mul_vec(s, z);
                let c = zspace
                    .coordinates(&w)
                    .ok_or_else(|| Error::Invalid("subalgebra is not closed under products".into()))?;
                cols.push(c);
            }
            // transpose columns into rows
            let mut rows = vec![vec![Cyc::zero(n); m]; m];
            for (j, col) in cols.iter().enumerate() {
                for (i, c) in col.iter().enumerate() {
                    rows[i][j] = c.clone();
                }
            }
            Ok(rows)
        };
        // Candidate splitting elements, in subalgebra coordinates relative
        // to the ambient algebra: the basis vectors, then pairwise sums.
        let mut candidates: Vec<Vec<Cyc>> = zb.clone();
        for p in 0..m {
            for q in (p + 1)..m {
                let s: Vec<Cyc> = (0..self.dim).map(|t| zb[p][t].add(&zb[q][t])).collect();
                candidates.push(s);
            }
        }
        // Components live in subalgebra coordinates (length m).
        let mut components: Vec<Vec<Vec<Cyc>>> = vec![{
            let mut id = Vec::new();
            for i in 0..m {
                let mut v = vec![Cyc::zero(n); m];
                v[i] = Cyc::one(n);
                id.push(v);
            }
            id
        }];
        for s in &candidates {
            if components.iter().all(|c| c.len() == 1) {
                break;
            }
            let big = mult_matrix(s)?;
            let mut next: Vec<Vec<Vec<Cyc>>> = Vec::new();
            for comp in components {
                if comp.len() == 1 {
                    next.push(comp);
                    continue;
                }
                match split_component(&big, &comp, n) {
                    Some(parts) => next.extend(parts),
                    None => next.push(comp),
                }
            }
            components = next;
        }
        if components.iter().any(|c| c.len() != 1) {
            return Err(Error::EnlargeConductor);
        }
        // Scale each 1-dim component into an idempotent: v*v = lambda*v.
        let mut idems = Vec::new();
        for comp in components {
            let coords = &comp[0];
            let mut a = self.zero_vec();
            for (p, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    for (t, z) in zb[p].iter().enumerate() {
                        a[t] = a[t].add(&c.mul(z));
                    }
                }
            }
            let a2 = self.mul_vec(&a, &a);
            let pivot = a.iter().position(|c| !c.is_zero()).ok_or(Error::EnlargeConductor)?;
            let lambda = a2[pivot].mul(&a[pivot].inv()?);
            if lambda.is_zero() {
                return Err(Error::EnlargeConductor);
            }
            let scaled: Vec<Cyc> = {
                let li = lambda.inv()?;
                a.iter().map(|c| c.mul(&li)).collect()
            };
            let check = self.mul_vec(&scaled, &scaled);
            if check != scaled {
                return Err(Error::EnlargeConductor);
            }
            idems.push(scaled);
        }
        Ok(idems)
    }

    /// Wedderburn block sizes of A/Rad(A), sorted ascending.
    pub fn block_profile(&self) -> Result<Vec<usize>> {
        let rad = self.jacobson_radical();
        let reduced;
        let alg = if rad.is_empty() {
            self
        } else {
            reduced = self.quotient(&rad).algebra;
            &reduced
        };
        let zbasis = alg.center();
        let idems = alg.split_commutative(&zbasis)?;
        let mut dims = Vec::new();
        for e in &idems {
            let r = alg.left_mult_matrix(e).rank();
            let d = (r as f64).sqrt().round() as usize;
            if d * d != r {
                return Err(Error::EnlargeConductor);
            }
            dims.push(d);
        }
        dims.sort_unstable();
        let total: usize = dims.iter().map(|d| d * d).sum();
        if total != alg.dim {
            return Err(Error::EnlargeConductor);
        }
        Ok(dims)
    }

    pub fn element_inverse(&self, a: &[Cyc]) -> Result<Vec<Cyc>> {
        let unit = self.unit.clone();
        linalg::element_inverse(&unit, a, |x, y| self.mul_vec(x, y), self.conductor)
    }
}

/// A quotient algebra together with the maps relating it to the parent:
/// `lift[i]` is a representative of quotient basis element i, and
/// `project` (qdim x dim) sends a parent vector to its class.
pub struct Quotient {
    pub algebra: StructureAlgebra,
    pub lift: Vec<Vec<Cyc>>,
    pub project: Mat,
}

/// Group algebra structure constants: e_g e_h = e_{gh}.
pub fn group_algebra_structure(g: &crate::group::FiniteGroup, n: u32) -> StructureAlgebra {
    let dim = g.order;
    let one = Cyc::one(n);
    let mult = (0..dim)
        .map(|i| (0..dim).map(|j| vec![(g.mul(i, j), one.clone())]).collect())
        .collect();
    let mut unit = vec![Cyc::zero(n); dim];
    unit[g.identity] = one;
    StructureAlgebra { dim, conductor: n, mult, unit }
}

/// Twisted group algebra X_g X_h = c(g,h) X_{gh}; the cocycle identity is
/// exactly associativity, which we re-verify.
pub fn twisted_group_algebra(
    g: &crate::group::FiniteGroup,
    c: &crate::group::TwoCocycle,
    n: u32,
) -> Result<StructureAlgebra> {
    c.verify(g)?;
    let dim = g.order;
    let mut mult: Vec<Vec<Vec<(usize, Cyc)>>> = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let coeff = c.eval(i, j).embed(n)?;
            mult[i][j] = vec![(g.mul(i, j), coeff)];
        }
    }
    let mut unit = vec![Cyc::zero(n); dim];
    unit[g.identity] = Cyc::one(n);
    let a = StructureAlgebra { dim, conductor: n, mult, unit };
    a.verify()?;
    Ok(a)
}

/// A module over a structure algebra, given by the action matrices of the
/// basis elements.
pub struct AlgebraRepresentation {
    pub dim_v: usize,
    pub action: Vec<Mat>,
}

impl AlgebraRepresentation {
    /// Check that the matrices satisfy the defining relations and the unit
    /// acts as the identity.
    pub fn verify(&self, a: &StructureAlgebra) -> Result<()> {
        if self.action.len() != a.dim {
            return Err(Error::VerificationFailed("one action matrix per basis element".into()));
        }
        let n = a.conductor;
        let mut unit_action = Mat::zero(self.dim_v, self.dim_v, n);
        for (i, c) in a.unit.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..self.dim_v {
                for s in 0..self.dim_v {
                    *unit_action.at_mut(r, s) =
                        unit_action.at(r, s).add(&c.mul(self.action[i].at(r, s)));
                }
            }
        }
        if !unit_action.is_identity() {
            return Err(Error::VerificationFailed("unit does not act as the identity".into()));
        }
        for i in 0..a.dim {
            for j in 0..a.dim {
                let prod = self.action[i].matmul(&self.action[j]);
                let mut expect = Mat::zero(self.dim_v, self.dim_v, n);
                for (k, c) in &a.mult[i][j] {
                    for r in 0..self.dim_v {
                        for s in 0..self.dim_v {
                            *expect.at_mut(r, s) =
                                expect.at(r, s).add(&c.mul(self.action[*k].at(r, s)));
                        }
                    }
                }
                if prod != expect {
                    return Err(Error::VerificationFailed(format!(
                        "action does not respect the product at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Split a component (list of coordinate vectors) under the restriction of
/// the multiplication matrix `big`; returns None when the restriction
/// contributes no splitting over the field.
fn split_component(
    big: &[Vec<Cyc>],
    comp: &[Vec<Cyc>],
    n: u32,
) -> Option<Vec<Vec<Vec<Cyc>>>> {
    let m = big.len();
    let k = comp.len();
    let mut cspace = Subspace::new(m, n);
    for v in comp {
        cspace.insert(v);
    }
    let cb: Vec<Vec<Cyc>> = cspace.basis().to_vec();
    // Restriction matrix R: columns = coordinates of big*basisvec in comp.
    let mut rmat = vec![vec![Cyc::zero(n); k]; k];
    for (j, v) in cb.iter().enumerate() {
        let mut w = vec![Cyc::zero(n); m];
        for (r, row) in big.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() && !v[c].is_zero() {
                    w[r] = w[r].add(&x.mul(&v[c]));
                }
            }
        }
        let coords = cspace.coordinates(&w)?;
        for (i, c) in coords.into_iter().enumerate() {
            rmat[i][j] = c;
        }
    }
    // Minimal polynomial of the restriction, via its Krylov chain on the
    // flattened matrix space.
    let flat_id: Vec<Cyc> = {
        let mut v = vec![Cyc::zero(n); k * k];
        for i in 0..k {
            v[i * k + i] = Cyc::one(n);
        }
        v
    };
    let flat_r: Vec<Cyc> = rmat.iter().flat_map(|r| r.iter().cloned()).collect();
    let mul = |x: &[Cyc]| -> Vec<Cyc> {
        let mut out = vec![Cyc::zero(n); k * k];
        for i in 0..k {
            for l in 0..k {
                if rmat[i][l].is_zero() {
                    continue;
                }
                for j in 0..k {
                    out[i * k + j] = out[i * k + j].add(&rmat[i][l].mul(&x[l * k + j]));
                }
            }
        }
        out
    };
    let minpoly = linalg::min_poly_of_element(&flat_id, &flat_r, mul, n);
    let mut roots = linalg::monomial_form_roots(&minpoly, n);
    roots.dedup_by(|a, b| a == b);
    let mut uniq: Vec<Cyc> = Vec::new();
    for r in roots {
        if !uniq.contains(&r) {
            uniq.push(r);
        }
    }
    if uniq.len() <= 1 {
        return None;
    }
    let mut parts: Vec<Vec<Vec<Cyc>>> = Vec::new();
    let mut captured = 0usize;
    for r in &uniq {
        // Kernel of (R - r I) inside the component, lifted back to the
        // ambient coordinates.
        let mut rows = rmat.clone();
        for i in 0..k {
            rows[i][i] = rows[i][i].sub(r);
        }
        let ker = linalg::kernel(&rows, k, n);
        if ker.is_empty() {
            continue;
        }
        captured += ker.len();
        let lifted: Vec<Vec<Cyc>> = ker
            .iter()
            .map(|coef| {
                let mut v = vec![Cyc::zero(n); m];
                for (p, c) in coef.iter().enumerate() {
                    if !c.is_zero() {
                        for (t, x) in cb[p].iter().enumerate() {
                            v[t] = v[t].add(&c.mul(x));
                        }
                    }
                }
                v
            })
            .collect();
        parts.push(lifted);
    }
    if captured < k {
        // Residual: kernel of q(R), q = minpoly with each found root
        // divided out once.
        let mut q = minpoly.clone();
        for r in &uniq {
            if linalg::poly_eval(&q, r).is_zero() {
                q = linalg::deflate(&q, r);
            }
        }
        // Evaluate q(R) on the flattened matrix.
        let mut acc = vec![Cyc::zero(n); k * k];
        let mut power = flat_id.clone();
        for c in &q {
            for (t, p) in power.iter().enumerate() {
                acc[t] = acc[t].add(&c.mul(p));
            }
            power = {
                let mut out = vec![Cyc::zero(n); k * k];
                for i in 0..k {
                    for l in 0..k {
                        if rmat[i][l].is_zero() {
                            continue;
                        }
                        for j in 0..k {
                            out[i * k + j] = out[i * k + j].add(&rmat[i][l].mul(&power[l * k + j]));
                        }
                    }
                }
                out
            };
        }
        let rows: Vec<Vec<Cyc>> =
            (0..k).map(|i| (0..k).map(|j| acc[i * k + j].clone()).collect()).collect();
        let ker = linalg::kernel(&rows, k, n);
        if !ker.is_empty() {
            let lifted: Vec<Vec<Cyc>> = ker
                .iter()
                .map(|coef| {
                    let mut v = vec![Cyc::zero(n); m];
                    for (p, c) in coef.iter().enumerate() {
                        if !c.is_zero() {
                            for (t, x) in cb[p].iter().enumerate() {
                                v[t] = v[t].add(&c.mul(x));
                            }
                        }
                    }
                    v
                })
                .collect();
            parts.push(lifted);
        }
    }
    Some(parts)
}

// --- serialization: dense nested arrays of scalars ------------------------

#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    dim: usize,
    conductor: u32,
    mult: Vec<Vec<Vec<Cyc>>>,
    unit: Vec<Cyc>,
}

impl Serialize for StructureAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut mult = vec![vec![vec![Cyc::zero(self.conductor); self.dim]; self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.mult[i][j] {
                    mult[i][j][*k] = c.clone();
                }
            }
        }
        AlgebraRepr { dim: self.dim, conductor: self.conductor, mult, unit: self.unit.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StructureAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = AlgebraRepr::deserialize(d)?;
        let mut mult = vec![vec![Vec::new(); repr.dim]; repr.dim];
        for i in 0..repr.dim {
            for j in 0..repr.dim {
                mult[i][j] = repr.mult[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
            }
        }
        Ok(StructureAlgebra {
            dim: repr.dim,
            conductor: repr.conductor,
            mult,
            unit: repr.unit,
        })
    }
}
