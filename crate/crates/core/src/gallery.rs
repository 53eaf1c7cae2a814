//! Ready-made gallery objects.  More builders (the dim-16 and dim-36
//! constructions, the pointed family H(n), the order-18 cotriangular
//! example) accumulate here as their modules land.

use crate::algebra::StructureAlgebra;
use crate::hopf::{HopfPresentation, TensorSquareElement};
use crate::linalg::Mat;
use crate::scalar::{rat, Cyc};

/// Sweedler's 4-dimensional Hopf algebra, basis 1, g, x, gx with
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.
/// The conductor is a parameter so twists living in larger fields can be
/// applied without re-embedding.
pub fn sweedler_hopf(n: u32) -> HopfPresentation {
    let o = || Cyc::one(n);
    let z = || Cyc::zero(n);
    let mut mult: Vec<Vec<Vec<(usize, Cyc)>>> = vec![vec![Vec::new(); 4]; 4];
    let set = |m: &mut Vec<Vec<Vec<(usize, Cyc)>>>, i: usize, j: usize, k: usize, sign: i32| {
        let c = if sign >= 0 { Cyc::one(n) } else { Cyc::one(n).neg() };
        m[i][j] = vec![(k, c)];
    };
    set(&mut mult, 0, 0, 0, 1);
    set(&mut mult, 0, 1, 1, 1);
    set(&mut mult, 0, 2, 2, 1);
    set(&mut mult, 0, 3, 3, 1);
    set(&mut mult, 1, 0, 1, 1);
    set(&mut mult, 1, 1, 0, 1);
    set(&mut mult, 1, 2, 3, 1);
    set(&mut mult, 1, 3, 2, 1);
    set(&mut mult, 2, 0, 2, 1);
    set(&mut mult, 2, 1, 3, -1);
    set(&mut mult, 3, 0, 3, 1);
    set(&mut mult, 3, 1, 2, -1);
    // x*x = x*gx = gx*x = gx*gx = 0: rows stay empty.
    let mut unit = vec![z(); 4];
    unit[0] = o();
    let algebra = StructureAlgebra { dim: 4, conductor: n, mult, unit };

    let mut comult = Vec::new();
    for i in 0..4 {
        let mut t = TensorSquareElement::zero(4, n);
        match i {
            0 => t.coeffs[0][0] = o(),
            1 => t.coeffs[1][1] = o(),
            2 => {
                // Delta(x) = x (x) 1 + g (x) x
                t.coeffs[2][0] = o();
                t.coeffs[1][2] = o();
            }
            _ => {
                // Delta(gx) = gx (x) g + 1 (x) gx
                t.coeffs[3][1] = o();
                t.coeffs[0][3] = o();
            }
        }
        comult.push(t);
    }
    let counit = vec![o(), o(), z(), z()];
    // S(g) = g, S(x) = -gx, S(gx) = x.
    let mut antipode = Mat::zero(4, 4, n);
    *antipode.at_mut(0, 0) = o();
    *antipode.at_mut(1, 1) = o();
    *antipode.at_mut(3, 2) = o().neg();
    *antipode.at_mut(2, 3) = o();
    HopfPresentation { algebra, comult, counit, antipode, parity: None }
}

/// R_g = (1/2)(1x1 + 1xg + gx1 - gxg).
pub fn sweedler_r_g(n: u32) -> TensorSquareElement {
    let half = Cyc::from_rat(rat(1, 2), n);
    let mut r = TensorSquareElement::zero(4, n);
    r.coeffs[0][0] = half.clone();
    r.coeffs[0][1] = half.clone();
    r.coeffs[1][0] = half.clone();
    r.coeffs[1][1] = half.neg();
    r
}

/// Radford's one-parameter family of triangular structures.  Radford's
/// presentation has the skew primitive on the other side
/// (Delta(y) = y (x) g + 1 (x) y); the substitution y = gx carries his
/// formula into this basis, where it reads
/// R_lambda = R_g - (lambda/2)(gx(x)gx - x(x)gx + gx(x)x + x(x)x).
pub fn sweedler_r_lambda(lambda: &Cyc, n: u32) -> TensorSquareElement {
    let mut r = sweedler_r_g(n);
    let half_l = lambda.scale(&rat(1, 2));
    r.coeffs[3][3] = r.coeffs[3][3].sub(&half_l);
    r.coeffs[2][3] = r.coeffs[2][3].add(&half_l);
    r.coeffs[3][2] = r.coeffs[3][2].sub(&half_l);
    r.coeffs[2][2] = r.coeffs[2][2].sub(&half_l);
    r
}

/// The twist with R_lambda = (J_lambda)_21^{-1} R_g J_lambda; in this
/// basis J_lambda = 1x1 - (lambda/2) gx (x) x.
pub fn sweedler_j_lambda(lambda: &Cyc, n: u32) -> TensorSquareElement {
    let hopf = sweedler_hopf(n);
    let mut j = TensorSquareElement::unit(&hopf.algebra);
    j.coeffs[3][2] = j.coeffs[3][2].sub(&lambda.scale(&rat(1, 2)));
    j
}

/// A gallery object: a Hopf presentation with a distinguished
/// quasitriangular structure.
pub struct GalleryObject {
    pub hopf: HopfPresentation,
    pub r: TensorSquareElement,
}

/// The pointed family H(n): group algebra of Z2 extended by `copies`
/// skew-primitive generators; H(0) = k[Z2], H(1) = Sweedler.
pub fn hn(copies: usize, n: u32) -> crate::Result<HopfPresentation> {
    crate::pointed_super::build_hd(&crate::pointed_super::hn_datum(copies, n))
}

/// Sweedler's algebra with the triangular structure R_lambda.
pub fn sweedler(lambda: &Cyc, n: u32) -> GalleryObject {
    GalleryObject { hopf: sweedler_hopf(n), r: sweedler_r_lambda(lambda, n) }
}

/// The dimension-16 minimal triangular Hopf algebra from the bijective
/// 1-cocycle datum on (Z2)^2 acting on Z4, over Q(i).
pub fn dim16() -> crate::Result<GalleryObject> {
    let out = crate::onecocycle::rmatrix_from_cocycle(&crate::onecocycle::dim16_datum(), 4)?;
    Ok(GalleryObject { hopf: out.hopf, r: out.r })
}

/// The dimension-36 minimal triangular Hopf algebra from the bijective
/// 1-cocycle datum on S3 acting on Z2 x Z3, over Q(zeta_6).
pub fn dim36() -> crate::Result<GalleryObject> {
    let out = crate::onecocycle::rmatrix_from_cocycle(&crate::onecocycle::dim36_datum(), 6)?;
    Ok(GalleryObject { hopf: out.hopf, r: out.r })
}

/// The order-18 cotriangular example k[Z2 x| (Z/3)^2]^J with the
/// symplectic twist on the abelian part.
pub fn p3() -> crate::Result<GalleryObject> {
    let setup = crate::analysis::p3_cotriangular(3)?;
    Ok(GalleryObject { hopf: setup.hopf, r: setup.r })
}

/// H(2) with the minimal triangular structure from the identity M-datum.
pub fn h2_triangular(n: u32) -> crate::Result<GalleryObject> {
    use crate::pointed_super::{hn_datum, minimal_triangular_structure, TDatum};
    let d = hn_datum(2, n);
    let (_, chars) = d.group.dual_group(n)?;
    let sign_ix = chars
        .iter()
        .position(|c| !c.values[1].is_one())
        .ok_or_else(|| crate::Error::Invalid("no sign character".into()))?;
    let mut phi = vec![0usize; 2];
    phi[sign_ix] = 1;
    let t = TDatum { phi, m: vec![None, Some(Mat::identity(2, n))] };
    let out = minimal_triangular_structure(&d, &t)?;
    Ok(GalleryObject { hopf: out.hopf, r: out.r })
}

/// Expected properties of a gallery object, used by the CLI and the
/// acceptance tests as the single source of truth.
pub struct GalleryEntry {
    pub name: &'static str,
    pub dim: usize,
    pub conductor: u32,
    pub triangular: bool,
    pub minimal_rank: usize,
    pub drinfeld_is_one: bool,
    pub s2_identity: bool,
    pub s4_identity: bool,
    pub commutative: bool,
    pub cocommutative: bool,
}

pub fn manifest() -> Vec<GalleryEntry> {
    vec![
        GalleryEntry {
            name: "sweedler",
            dim: 4,
            conductor: 1,
            triangular: true,
            minimal_rank: 4,
            drinfeld_is_one: false,
            s2_identity: false,
            s4_identity: true,
            commutative: false,
            cocommutative: false,
        },
        GalleryEntry {
            name: "h2",
            dim: 8,
            conductor: 2,
            triangular: true,
            minimal_rank: 8,
            drinfeld_is_one: false,
            s2_identity: false,
            s4_identity: true,
            commutative: false,
            cocommutative: false,
        },
        GalleryEntry {
            name: "dim16",
            dim: 16,
            conductor: 4,
            triangular: true,
            minimal_rank: 16,
            drinfeld_is_one: true,
            s2_identity: true,
            s4_identity: true,
            commutative: false,
            cocommutative: false,
        },
        GalleryEntry {
            name: "dim36",
            dim: 36,
            conductor: 6,
            triangular: true,
            minimal_rank: 36,
            drinfeld_is_one: true,
            s2_identity: true,
            s4_identity: true,
            commutative: false,
            cocommutative: false,
        },
        GalleryEntry {
            name: "p3",
            dim: 18,
            conductor: 3,
            triangular: true,
            minimal_rank: 9,
            drinfeld_is_one: true,
            s2_identity: true,
            s4_identity: true,
            commutative: false,
            cocommutative: false,
        },
    ]
}

/// Build a manifest entry by name; "sweedler" uses lambda = 1.
pub fn build(name: &str) -> crate::Result<GalleryObject> {
    match name {
        "sweedler" => Ok(sweedler(&Cyc::one(1), 1)),
        "h2" => h2_triangular(2),
        "dim16" => dim16(),
        "dim36" => dim36(),
        "p3" => p3(),
        _ => Err(crate::Error::Invalid(format!("unknown gallery entry {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_is_hopf() {
        sweedler_hopf(4).verify_ok().unwrap();
        sweedler_hopf(1).verify_ok().unwrap();
    }

    #[test]
    fn manifest_small_entries() {
        // The heavyweight entries (dim16/dim36) are exercised by the
        // acceptance suite; check the small ones here.
        for name in ["sweedler", "h2", "p3"] {
            let want = manifest().into_iter().find(|e| e.name == name).unwrap();
            let got = build(name).unwrap();
            assert_eq!(got.hopf.dim(), want.dim);
            assert_eq!(got.hopf.conductor(), want.conductor);
            crate::rmatrix::verify_quasitriangular_ok(&got.hopf, &got.r).unwrap();
            assert_eq!(crate::rmatrix::is_triangular(&got.hopf, &got.r), want.triangular);
            let mp = crate::rmatrix::minimal_part(&got.hopf, &got.r).unwrap();
            assert_eq!(mp.rank, want.minimal_rank);
            let u = crate::rmatrix::drinfeld_element(&got.hopf, &got.r).unwrap();
            assert_eq!(u.u == got.hopf.algebra.unit, want.drinfeld_is_one);
            let s4 = crate::pointed_super::s4_check(&got.hopf);
            assert_eq!(s4.s2_is_identity, want.s2_identity);
            assert_eq!(s4.s4_is_identity, want.s4_identity);
        }
    }
}
