//! Exact arithmetic in the cyclotomic field Q(zeta_N).
//!
//! An element is stored by its coordinates in the power basis
//! 1, zeta, ..., zeta^(phi(N)-1) of Q[x]/(Phi_N(x)), with fully reduced
//! big rationals, so equality is plain coefficient comparison.  The
//! conductor N is fixed per value; mixing conductors is a usage error
//! (use `embed` to move into a larger field first).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Euler's totient, by trial division (conductors here are tiny).
pub fn phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Monic coefficients of the N-th cyclotomic polynomial, low degree first,
/// length phi(N)+1.  Computed by dividing x^N - 1 by the product of
/// Phi_d over proper divisors d | N; all intermediate divisions are exact
/// over the integers.
fn cyclotomic_poly(n: u32) -> Arc<Vec<Int>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Int>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![Int::zero(); n as usize + 1];
    num[0] = -Int::one();
    num[n as usize] = Int::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = exact_int_poly_div(&num, &phi_d);
        }
    }
    let arc = Arc::new(num);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// Exact division of integer polynomials (remainder known to be zero).
fn exact_int_poly_div(num: &[Int], den: &[Int]) -> Vec<Int> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![Int::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Rows expressing zeta^k for k = phi(N) .. 2*phi(N)-2 in the power basis,
/// precomputed once per conductor so that products reduce by table lookup.
fn reduction_rows(n: u32) -> Arc<Vec<Vec<Rat>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Vec<Rat>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&n) {
        return r.clone();
    }
    let d = phi(n) as usize;
    let poly = cyclotomic_poly(n);
    // zeta^d = -(Phi - x^d) since Phi is monic of degree d.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let base: Vec<Rat> = (0..d)
        .map(|i| Rat::from_integer(-poly[i].clone()))
        .collect();
    if d >= 1 {
        rows.push(base.clone());
        // zeta^(d+k) = zeta * zeta^(d+k-1), re-reduced.
        for _ in 1..d.saturating_sub(1) {
            let prev = rows.last().unwrap().clone();
            let mut next = vec![Rat::zero(); d];
            for i in 0..d - 1 {
                next[i + 1] = prev[i].clone();
            }
            let top = prev[d - 1].clone();
            if !top.is_zero() {
                for i in 0..d {
                    next[i] += &top * &base[i];
                }
            }
            rows.push(next);
        }
    }
    let arc = Arc::new(rows);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// An exact element of Q(zeta_N).
#[derive(Clone, PartialEq, Eq)]
pub struct Cyc {
    n: u32,
    /// Coordinates in the power basis, length phi(n).
    c: Vec<Rat>,
}

impl Cyc {
    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn zero(n: u32) -> Self {
        assert!(n >= 1, "conductor must be positive");
        Cyc { n, c: vec![Rat::zero(); phi(n) as usize] }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rat(Rat::one(), n)
    }

    pub fn from_rat(q: Rat, n: u32) -> Self {
        let mut z = Self::zero(n);
        z.c[0] = q;
        z
    }

    pub fn from_int(k: i64, n: u32) -> Self {
        Self::from_rat(Rat::from_integer(Int::from(k)), n)
    }

    /// Build from raw power-basis coordinates (must have length phi(n)).
    pub fn from_coeffs(c: Vec<Rat>, n: u32) -> Self {
        assert_eq!(c.len(), phi(n) as usize, "coefficient vector has wrong length");
        Cyc { n, c }
    }

    /// zeta_N^k, reduced into the power basis.
    pub fn root_of_unity(k: i64, n: u32) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let d = phi(n) as usize;
        if k < d {
            let mut z = Self::zero(n);
            z.c[k] = Rat::one();
            z
        } else {
            // zeta^k with k in d..n-1: repeated multiplication by zeta is
            // cheap at these sizes and keeps the code honest.
            let mut acc = vec![Rat::zero(); k + 1];
            acc[k] = Rat::one();
            reduce_mod_phi(&mut acc, n);
            acc.truncate(d);
            acc.resize(d, Rat::zero());
            Cyc { n, c: acc }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// Some(q) when the element is rational.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Cyc) -> Result<()> {
        if self.n != other.n {
            Err(Error::ConductorMismatch { a: self.n, b: other.n })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        self.check_same(other).expect("conductor mismatch in add");
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| a + b)
            .collect();
        Cyc { n: self.n, c }
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.check_same(other).expect("conductor mismatch in sub");
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| a - b)
            .collect();
        Cyc { n: self.n, c }
    }

    pub fn neg(&self) -> Cyc {
        Cyc { n: self.n, c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        self.check_same(other).expect("conductor mismatch in mul");
        let d = self.c.len();
        if d == 1 {
            return Cyc { n: self.n, c: vec![&self.c[0] * &other.c[0]] };
        }
        let mut prod = vec![Rat::zero(); 2 * d - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let rows = reduction_rows(self.n);
        let mut out: Vec<Rat> = prod[..d].to_vec();
        for k in d..2 * d - 1 {
            if prod[k].is_zero() {
                continue;
            }
            let row = &rows[k - d];
            for i in 0..d {
                if !row[i].is_zero() {
                    out[i] += &prod[k] * &row[i];
                }
            }
        }
        Cyc { n: self.n, c: out }
    }

    /// Multiply by a plain rational (cheaper than building a Cyc).
    pub fn scale(&self, q: &Rat) -> Cyc {
        if q.is_zero() {
            return Cyc::zero(self.n);
        }
        Cyc { n: self.n, c: self.c.iter().map(|a| a * q).collect() }
    }

    /// Field inverse by the extended Euclidean algorithm against Phi_N.
    pub fn inv(&self) -> Result<Cyc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { n: self.n });
        }
        if let Some(q) = self.as_rational() {
            return Ok(Cyc::from_rat(q.recip(), self.n));
        }
        let d = self.c.len();
        let phi_n: Vec<Rat> = cyclotomic_poly(self.n)
            .iter()
            .map(|z| Rat::from_integer(z.clone()))
            .collect();
        // Extended Euclid on (self, Phi_N) in Q[x]; Phi_N is not tracked
        // since we only need the Bezout coefficient of `self`.
        let mut r0 = phi_n;
        let mut r1 = trim(self.c.clone());
        let mut s0: Vec<Rat> = vec![];
        let mut s1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is now a nonzero constant gcd (Phi_N is irreducible).
        if r0.len() != 1 {
            return Err(Error::NotInvertible);
        }
        let scale = r0[0].recip();
        let mut c = vec![Rat::zero(); d];
        for (i, x) in s0.iter().enumerate() {
            c[i] = x * &scale;
        }
        let out = Cyc { n: self.n, c };
        debug_assert!(out.mul(self).is_one());
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Result<Cyc> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = Cyc::one(self.n);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Multiplicative order, or None if the element is not a root of unity
    /// (only orders dividing 2N can occur for roots of unity in Q(zeta_N)).
    pub fn multiplicative_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = 2 * self.n;
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// Ring embedding Q(zeta_N) -> Q(zeta_M) for N | M, zeta_N -> zeta_M^(M/N).
    pub fn embed(&self, m: u32) -> Result<Cyc> {
        if m % self.n != 0 {
            return Err(Error::BadEmbedding { n: self.n, m });
        }
        if m == self.n {
            return Ok(self.clone());
        }
        let step = (m / self.n) as i64;
        let mut out = Cyc::zero(m);
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = Cyc::root_of_unity(step * k as i64, m).scale(a);
            out = out.add(&term);
        }
        Ok(out)
    }
}

/// Reduce a raw coefficient vector (any length) mod Phi_n in place; the
/// vector is left with length >= phi(n) and only the first phi(n) entries
/// meaningful.
fn reduce_mod_phi(c: &mut Vec<Rat>, n: u32) {
    let d = phi(n) as usize;
    let poly = cyclotomic_poly(n);
    for k in (d..c.len()).rev() {
        let top = std::mem::replace(&mut c[k], Rat::zero());
        if top.is_zero() {
            continue;
        }
        // zeta^k = -sum_{i<d} Phi_i zeta^(k-d+i)
        for i in 0..d {
            if !poly[i].is_zero() {
                let delta = &top * Rat::from_integer(poly[i].clone());
                c[k - d + i] -= delta;
            }
        }
    }
    c.resize(d.max(1), Rat::zero());
}

// -- small dense polynomial helpers over Q (low degree first, no trailing zeros) --

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().map_or(false, |x| x.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rat::zero(); a.len() - b.len() + 1];
    let lead = b.last().unwrap();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + b.len() - 1] / lead;
        if !c.is_zero() {
            for (i, y) in b.iter().enumerate() {
                rem[k + i] -= &c * y;
            }
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if a.is_negative() { "-" } else { "+" })?;
            } else if a.is_negative() {
                write!(f, "-")?;
            }
            let abs = a.abs();
            if k == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                if k == 1 {
                    write!(f, "z{}", self.n)?;
                } else {
                    write!(f, "z{}^{}", self.n, k)?;
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// JSON form: { "conductor": N, "coeffs": [["num","den"], ...] } with bigints
// as decimal strings so arbitrary precision survives the round trip.

#[derive(Serialize, Deserialize)]
struct CycRepr {
    conductor: u32,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = CycRepr {
            conductor: self.n,
            coeffs: self
                .c
                .iter()
                .map(|q| [q.numer().to_string(), q.denom().to_string()])
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycRepr::deserialize(d)?;
        if repr.conductor < 1 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let expect = phi(repr.conductor) as usize;
        if repr.coeffs.len() != expect {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for conductor {}, got {}",
                expect,
                repr.conductor,
                repr.coeffs.len()
            )));
        }
        let mut c = Vec::with_capacity(expect);
        for [num, den] in &repr.coeffs {
            let num: Int = num.parse().map_err(D::Error::custom)?;
            let den: Int = den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            c.push(Rat::new(num, den));
        }
        Ok(Cyc { n: repr.conductor, c })
    }
}
