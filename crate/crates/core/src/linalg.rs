//! Exact dense linear algebra over Q(zeta_N).
//!
//! Everything is plain Gaussian elimination with exact scalars.  The
//! dimensions in this crate are small (at most ~1300 for tensor-square
//! vectors), so dense row operations are fine.

use num::{One, Signed, Zero};

use crate::scalar::{phi, Cyc, Int, Rat};
use crate::{Error, Result};

/// A dense matrix over Q(zeta_N), row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub n: u32,
    pub data: Vec<Cyc>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, n: u32) -> Self {
        Mat { rows, cols, n, data: vec![Cyc::zero(n); rows * cols] }
    }

    pub fn identity(dim: usize, n: u32) -> Self {
        let mut m = Self::zero(dim, dim, n);
        for i in 0..dim {
            *m.at_mut(i, i) = Cyc::one(n);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyc>>, n: u32) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, n, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &Cyc {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Cyc {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Cyc] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Cyc> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows, self.n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols, self.n);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    let cell = out.at_mut(i, j);
                    *cell = cell.add(&prod);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cyc]) -> Vec<Cyc> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Cyc::zero(self.n); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[j]));
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                let ok = if i == j { a.is_one() } else { a.is_zero() };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Cyc>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rref(&mut rows).len()
    }

    /// Determinant by elimination (square matrices only).
    pub fn det(&self) -> Cyc {
        assert_eq!(self.rows, self.cols);
        let n = self.n;
        let dim = self.rows;
        let mut rows: Vec<Vec<Cyc>> = (0..dim).map(|i| self.row(i).to_vec()).collect();
        let mut det = Cyc::one(n);
        for col in 0..dim {
            let pivot = (col..dim).find(|&r| !rows[r][col].is_zero());
            let Some(p) = pivot else {
                return Cyc::zero(n);
            };
            if p != col {
                rows.swap(p, col);
                det = det.neg();
            }
            let pv = rows[col][col].clone();
            det = det.mul(&pv);
            let pv_inv = pv.inv().expect("pivot nonzero");
            for r in col + 1..dim {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = rows[r][col].mul(&pv_inv);
                for c in col..dim {
                    if rows[col][c].is_zero() {
                        continue;
                    }
                    let delta = f.mul(&rows[col][c]);
                    rows[r][c] = rows[r][c].sub(&delta);
                }
            }
        }
        det
    }

    /// Matrix inverse; errors on singular input.
    pub fn inverse(&self) -> Result<Mat> {
        assert_eq!(self.rows, self.cols);
        let dim = self.rows;
        let n = self.n;
        let mut aug: Vec<Vec<Cyc>> = (0..dim)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                for j in 0..dim {
                    row.push(if i == j { Cyc::one(n) } else { Cyc::zero(n) });
                }
                row
            })
            .collect();
        let pivots = rref(&mut aug);
        if pivots.len() < dim || pivots.iter().any(|&(_, c)| c >= dim) {
            return Err(Error::Singular);
        }
        let mut out = Mat::zero(dim, dim, n);
        for (r, &(_, c)) in pivots.iter().enumerate() {
            for j in 0..dim {
                *out.at_mut(c, j) = aug[r][dim + j].clone();
            }
        }
        Ok(out)
    }
}

/// Reduce `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns (row index, pivot column) pairs, in order.
pub fn rref(rows: &mut Vec<Vec<Cyc>>) -> Vec<(usize, usize)> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(p) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let inv = rows[next_row][col].inv().expect("pivot nonzero");
        for c in col..ncols {
            if !rows[next_row][c].is_zero() {
                rows[next_row][c] = rows[next_row][c].mul(&inv);
            }
        }
        for r in 0..rows.len() {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in col..ncols {
                if rows[next_row][c].is_zero() {
                    continue;
                }
                let delta = f.mul(&rows[next_row][c]);
                rows[r][c] = rows[r][c].sub(&delta);
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    pivots
}

/// Null space of the linear system rows * x = 0 (each entry of `rows` is
/// one equation over `ncols` unknowns).  Returns a basis.
pub fn kernel(rows: &[Vec<Cyc>], ncols: usize, n: u32) -> Vec<Vec<Cyc>> {
    let mut work: Vec<Vec<Cyc>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    for r in &work {
        assert_eq!(r.len(), ncols);
    }
    let pivots = rref(&mut work);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Cyc::zero(n); ncols];
        v[free] = Cyc::one(n);
        for (r, &(_, pc)) in pivots.iter().enumerate() {
            v[pc] = work[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// One particular solution of rows * x = rhs, or None if inconsistent.
pub fn solve(rows: &[Vec<Cyc>], rhs: &[Cyc], n: u32) -> Option<Vec<Cyc>> {
    assert_eq!(rows.len(), rhs.len());
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Cyc>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent iff some pivot lands in the rhs column.
    if pivots.iter().any(|&(_, c)| c == ncols) {
        return None;
    }
    let mut x = vec![Cyc::zero(n); ncols];
    for (r, &(_, c)) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

/// An incrementally built subspace of k^dim kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient: usize,
    pub n: u32,
    rows: Vec<Vec<Cyc>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize, n: u32) -> Self {
        Subspace { ambient, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Cyc>] {
        &self.rows
    }

    /// Reduce `v` against the current basis, returning the residual.
    pub fn reduce(&self, v: &[Cyc]) -> Vec<Cyc> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for c in 0..self.ambient {
                if row[c].is_zero() {
                    continue;
                }
                let delta = f.mul(&row[c]);
                v[c] = v[c].sub(&delta);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Cyc]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns true if it enlarged the space.
    pub fn insert(&mut self, v: &[Cyc]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for c in 0..self.ambient {
            if !r[c].is_zero() {
                r[c] = r[c].mul(&inv);
            }
        }
        // Back-substitute into existing rows to keep the form reduced.
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for c in 0..self.ambient {
                if r[c].is_zero() {
                    continue;
                }
                let delta = f.mul(&r[c]);
                row[c] = row[c].sub(&delta);
            }
        }
        // Keep rows sorted by pivot column.
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.rows.len());
        self.rows.insert(pos, r);
        self.pivots.insert(pos, p);
        true
    }

    /// Pivot column of each basis row, in row order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.clone()
    }

    /// Coordinates of `v` in the basis, if it lies in the subspace.
    pub fn coordinates(&self, v: &[Cyc]) -> Option<Vec<Cyc>> {
        let mut v = v.to_vec();
        let mut coords = vec![Cyc::zero(self.n); self.rows.len()];
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            coords[i] = f.clone();
            for c in 0..self.ambient {
                if row[c].is_zero() {
                    continue;
                }
                let delta = f.mul(&row[c]);
                v[c] = v[c].sub(&delta);
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}

/// Minimal polynomial of an abstract element given by its multiplication
/// action: returns coefficients c_0..c_d (monic, c_d = 1) of the minimal
/// monic polynomial with sum c_i x^i = 0, computed from the Krylov chain
/// 1, x, x^2, ... inside the algebra.
pub fn min_poly_of_element(
    one: &[Cyc],
    x: &[Cyc],
    mut mul_by_x: impl FnMut(&[Cyc]) -> Vec<Cyc>,
    n: u32,
) -> Vec<Cyc> {
    let ambient = one.len();
    let mut space = Subspace::new(ambient, n);
    // Echelon rows augmented with the combination of powers they represent.
    let mut combos: Vec<Vec<Cyc>> = Vec::new();
    let mut power = one.to_vec();
    let mut k = 0usize;
    loop {
        // Reduce `power` while tracking the power-combination.
        let mut v = power.clone();
        let mut combo = vec![Cyc::zero(n); k + 1];
        combo[k] = Cyc::one(n);
        for (i, (row, &p)) in space.rows.iter().zip(&space.pivots).enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for c in 0..ambient {
                if row[c].is_zero() {
                    continue;
                }
                let delta = f.mul(&row[c]);
                v[c] = v[c].sub(&delta);
            }
            for (c, val) in combos[i].iter().enumerate() {
                if val.is_zero() {
                    continue;
                }
                let delta = f.mul(val);
                combo[c] = combo[c].sub(&delta);
            }
        }
        if let Some(p) = v.iter().position(|c| !c.is_zero()) {
            let inv = v[p].inv().expect("nonzero");
            for c in 0..ambient {
                if !v[c].is_zero() {
                    v[c] = v[c].mul(&inv);
                }
            }
            for c in combo.iter_mut() {
                if !c.is_zero() {
                    *c = c.mul(&inv);
                }
            }
            // Maintain reduced form against the new row.
            for (i, row) in space.rows.iter_mut().enumerate() {
                if row[p].is_zero() {
                    continue;
                }
                let f = row[p].clone();
                for c in 0..ambient {
                    if v[c].is_zero() {
                        continue;
                    }
                    let delta = f.mul(&v[c]);
                    row[c] = row[c].sub(&delta);
                }
                while combos[i].len() < combo.len() {
                    combos[i].push(Cyc::zero(n));
                }
                for (c, val) in combo.iter().enumerate() {
                    if val.is_zero() {
                        continue;
                    }
                    let delta = f.mul(val);
                    combos[i][c] = combos[i][c].sub(&delta);
                }
            }
            let pos = space.pivots.iter().position(|&q| q > p).unwrap_or(space.rows.len());
            space.rows.insert(pos, v);
            space.pivots.insert(pos, p);
            combos.insert(pos, combo);
        } else {
            // power combination vanished: x^k = -(combo_0 + ... ), and since
            // combo was normalized with leading 1, combo itself is monic.
            return combo;
        }
        if k == 0 {
            power = x.to_vec();
        } else {
            power = mul_by_x(&power);
        }
        k += 1;
        assert!(k <= ambient + 1, "minimal polynomial search exceeded ambient dimension");
    }
}

/// Inverse of an element of a finite-dimensional unital algebra given by a
/// multiplication callback, via its minimal polynomial.  Checks the result
/// from both sides.
pub fn element_inverse(
    one: &[Cyc],
    x: &[Cyc],
    mut mul: impl FnMut(&[Cyc], &[Cyc]) -> Vec<Cyc>,
    n: u32,
) -> Result<Vec<Cyc>> {
    let mp = min_poly_of_element(one, x, |v| mul(v, x), n);
    // mp = c_0 + c_1 t + ... + t^d; invertible iff c_0 != 0, and then
    // x^{-1} = -(c_1 + c_2 x + ... + x^{d-1}) / c_0.
    let c0 = &mp[0];
    if c0.is_zero() {
        return Err(Error::NotInvertible);
    }
    let neg_inv_c0 = c0.inv()?.neg();
    let mut acc = vec![Cyc::zero(n); one.len()];
    let mut power = one.to_vec();
    for (i, c) in mp.iter().enumerate().skip(1) {
        if !c.is_zero() {
            let coef = c.mul(&neg_inv_c0);
            for (a, p) in acc.iter_mut().zip(&power) {
                if !p.is_zero() {
                    *a = a.add(&p.mul(&coef));
                }
            }
        }
        if i < mp.len() - 1 {
            power = mul(&power, x);
        }
    }
    let left = mul(&acc, x);
    let right = mul(x, &acc);
    if left.as_slice() != one || right.as_slice() != one {
        return Err(Error::NotInvertible);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Exact root finding used for splitting commutative semisimple algebras.
//
// We only ever need eigenvalues of the form q * zeta_N^j with q rational
// (every algebra we split arises from (twisted) group algebras, whose
// monomial-like elements have such spectra).  The finder is exact and
// complete for roots of that shape; anything else is reported as a failed
// split so callers can surface the "enlarge conductor" error honestly.
// ---------------------------------------------------------------------------

/// All roots of the polynomial `p` (low degree first, over Q(zeta_n)) that
/// have the form q * zeta_n^j.  `p` need not be squarefree.
pub fn monomial_form_roots(p: &[Cyc], n: u32) -> Vec<Cyc> {
    let mut roots: Vec<Cyc> = Vec::new();
    let deg = p.len().saturating_sub(1);
    if deg == 0 {
        return roots;
    }
    for j in 0..n {
        // Substitute x = zeta^j * y and look for rational roots in y.
        let zj: Vec<Cyc> = (0..p.len())
            .map(|t| Cyc::root_of_unity((j as i64) * t as i64, n))
            .collect();
        // Coordinate polynomials over Q: one per power-basis slot.
        let d = phi(n) as usize;
        let mut coord_polys: Vec<Vec<Rat>> = vec![vec![Rat::zero(); p.len()]; d];
        for (t, c) in p.iter().enumerate() {
            let scaled = c.mul(&zj[t]);
            for (slot, val) in scaled.coeffs().iter().enumerate() {
                coord_polys[slot][t] = val.clone();
            }
        }
        let mut g: Option<Vec<Rat>> = None;
        for cp in coord_polys {
            let cp = trim_rat(cp);
            if cp.is_empty() {
                continue;
            }
            g = Some(match g {
                None => cp,
                Some(prev) => rat_poly_gcd(&prev, &cp),
            });
        }
        let Some(g) = g else { continue };
        for q in rational_roots(&g) {
            let candidate = Cyc::root_of_unity(j as i64, n).scale(&q);
            if !roots.contains(&candidate) {
                // Double-check directly against p.
                if poly_eval(p, &candidate).is_zero() {
                    roots.push(candidate);
                }
            }
        }
    }
    roots
}

pub fn poly_eval(p: &[Cyc], x: &Cyc) -> Cyc {
    let n = x.conductor();
    let mut acc = Cyc::zero(n);
    for c in p.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Divide out a known root: p(t) / (t - r), exact (r must be a root).
pub fn deflate(p: &[Cyc], r: &Cyc) -> Vec<Cyc> {
    let n = r.conductor();
    let mut out = vec![Cyc::zero(n); p.len() - 1];
    let mut carry = Cyc::zero(n);
    for k in (0..p.len() - 1).rev() {
        carry = p[k + 1].add(&carry.mul(r));
        out[k] = carry.clone();
    }
    out
}

fn trim_rat(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().map_or(false, |x| x.is_zero()) {
        p.pop();
    }
    p
}

fn rat_poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    while !r1.is_empty() {
        let r = rat_poly_rem(&r0, &r1);
        r0 = r1;
        r1 = r;
    }
    // Normalize monic.
    if let Some(lead) = r0.last().cloned() {
        for c in r0.iter_mut() {
            *c = &*c / &lead;
        }
    }
    r0
}

fn rat_poly_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        for (i, y) in b.iter().enumerate() {
            let delta = &c * y;
            rem[k + i] = &rem[k + i] - &delta;
        }
        rem = trim_rat(rem);
        if rem.is_empty() {
            break;
        }
        if rem.len() < b.len() {
            break;
        }
    }
    trim_rat(rem)
}

/// Rational roots of a rational-coefficient polynomial (exhaustive via the
/// rational root theorem, after clearing denominators).
fn rational_roots(p: &[Rat]) -> Vec<Rat> {
    let mut p = trim_rat(p.to_vec());
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return roots;
    }
    // Factor out powers of t.
    while p.first().map_or(false, |c| c.is_zero()) {
        if !roots.contains(&Rat::zero()) {
            roots.push(Rat::zero());
        }
        p.remove(0);
    }
    if p.len() <= 1 {
        return roots;
    }
    // Clear denominators.
    let mut lcm = Int::one();
    for c in &p {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<Int> = p.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = ints[0].clone();
    let ad = ints.last().unwrap().clone();
    let num_divs = divisors(&a0.abs());
    let den_divs = divisors(&ad.abs());
    for nu in &num_divs {
        for de in &den_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(nu * Int::from(sign), de.clone());
                if roots.contains(&cand) {
                    continue;
                }
                let mut acc = Rat::zero();
                for c in p.iter().rev() {
                    acc = acc * &cand + c;
                }
                if acc.is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// Positive divisors by trial division.  Constants in this crate stay tiny;
/// if one ever does not, we give up on that candidate set rather than loop
/// forever (the caller then reports a failed split).
fn divisors(x: &Int) -> Vec<Int> {
    let mut out = Vec::new();
    if x.is_zero() {
        return out;
    }
    if let Some(v) = to_u64(x) {
        let mut d = 1u64;
        while d * d <= v {
            if v % d == 0 {
                out.push(Int::from(d));
                if d != v / d {
                    out.push(Int::from(v / d));
                }
            }
            d += 1;
            if d > 1_000_000 {
                // Too big to enumerate honestly; return what we have.
                break;
            }
        }
    }
    out
}

fn to_u64(x: &Int) -> Option<u64> {
    use num::ToPrimitive;
    x.abs().to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn c(v: i64) -> Cyc {
        Cyc::from_int(v, 4)
    }

    #[test]
    fn rref_and_kernel() {
        let n = 4;
        let rows = vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(0), c(1), c(1)],
        ];
        let mut work = rows.clone();
        let pivots = rref(&mut work);
        assert_eq!(pivots.len(), 2);
        let ker = kernel(&rows, 3, n);
        assert_eq!(ker.len(), 1);
        // The kernel vector satisfies all equations.
        for r in &rows {
            let mut acc = Cyc::zero(n);
            for (a, b) in r.iter().zip(&ker[0]) {
                acc = acc.add(&a.mul(b));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn solve_and_inverse() {
        let n = 4;
        let i = Cyc::root_of_unity(1, 4);
        let m = Mat::from_rows(
            vec![vec![c(1), i.clone()], vec![i.clone(), c(1)]],
            n,
        );
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        let sol = solve(
            &vec![vec![c(1), i.clone()], vec![i.clone(), c(1)]],
            &[c(3), c(5)],
            n,
        )
        .unwrap();
        // Check by substitution.
        let lhs0 = sol[0].add(&i.mul(&sol[1]));
        let lhs1 = i.mul(&sol[0]).add(&sol[1]);
        assert_eq!(lhs0, c(3));
        assert_eq!(lhs1, c(5));
        // Singular matrix has no inverse.
        let s = Mat::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]], n);
        assert!(s.inverse().is_err());
        assert!(s.det().is_zero());
    }

    #[test]
    fn subspace_ops() {
        let n = 1;
        let mut s = Subspace::new(3, n);
        let one = |v: [i64; 3]| -> Vec<Cyc> {
            v.iter().map(|&x| Cyc::from_int(x, n)).collect()
        };
        assert!(s.insert(&one([1, 1, 0])));
        assert!(s.insert(&one([0, 1, 1])));
        assert!(!s.insert(&one([1, 2, 1])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&one([2, 3, 1])));
        assert!(!s.contains(&one([0, 0, 1])));
        let coords = s.coordinates(&one([1, 2, 1])).unwrap();
        assert_eq!(coords.len(), 2);
    }

    #[test]
    fn element_inverse_in_group_algebra_z4() {
        // Group algebra of Z4 as an abstract algebra: basis g^0..g^3.
        let n = 4;
        let mul = |a: &[Cyc], b: &[Cyc]| -> Vec<Cyc> {
            let mut out = vec![Cyc::zero(n); 4];
            for i in 0..4 {
                if a[i].is_zero() {
                    continue;
                }
                for j in 0..4 {
                    if b[j].is_zero() {
                        continue;
                    }
                    let k = (i + j) % 4;
                    out[k] = out[k].add(&a[i].mul(&b[j]));
                }
            }
            out
        };
        let one = vec![c(1), c(0), c(0), c(0)];
        // x = 2 + g is invertible.
        let x = vec![c(2), c(1), c(0), c(0)];
        let xi = element_inverse(&one, &x, |a, b| mul(a, b), n).unwrap();
        assert_eq!(mul(&x, &xi), one);
        // y = 1 + g + g^2 + g^3 is a zero divisor.
        let y = vec![c(1), c(1), c(1), c(1)];
        assert!(element_inverse(&one, &y, |a, b| mul(a, b), n).is_err());
    }

    #[test]
    fn monomial_roots_found() {
        // p(t) = (t - 2)(t - zeta4)(t + 1/3) over Q(zeta_4)
        let n = 4;
        let i = Cyc::root_of_unity(1, 4);
        let r1 = c(2);
        let r2 = i.clone();
        let r3 = Cyc::from_rat(rat(-1, 3), n);
        // expand
        let p = {
            let mut p = vec![Cyc::one(n)];
            for r in [&r1, &r2, &r3] {
                let mut q = vec![Cyc::zero(n); p.len() + 1];
                for (k, ck) in p.iter().enumerate() {
                    q[k + 1] = q[k + 1].add(ck);
                    q[k] = q[k].sub(&ck.mul(r));
                }
                p = q;
            }
            p
        };
        let roots = monomial_form_roots(&p, n);
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&r1));
        assert!(roots.contains(&r2));
        assert!(roots.contains(&r3));
    }
}
