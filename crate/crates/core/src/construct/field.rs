//! Finite fields `GF(p^e)` as polynomials over `GF(p)` modulo an
//! irreducible polynomial.

use crate::error::{Error, Result};
use crate::math::prime_power;

/// `GF(q)` with precomputed addition and multiplication tables.
///
/// An element is an index in `0..q` encoding its coefficient vector in base
/// `p`: `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. Index 0 is zero and index 1
/// is one.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    e: u32,
    q: usize,
    /// Coefficients `m_0..m_{e-1}` of the monic modulus `x^e + ...`.
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl FiniteField {
    pub const MAX_ORDER: u64 = 256;

    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > Self::MAX_ORDER {
            return Err(Error::InvalidParameters(format!(
                "field order {q} above supported maximum {}",
                Self::MAX_ORDER
            )));
        }
        let modulus = least_irreducible(p, e as usize);
        let q = q as usize;
        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            add: vec![0; q * q],
            mul: vec![0; q * q],
        };
        for a in 0..q {
            let ca = field.coeffs(a);
            for b in 0..q {
                let cb = field.coeffs(b);
                let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                field.add[a * q + b] = field.encode(&sum) as u32;
                let prod = field.poly_mul_mod(&ca, &cb);
                field.mul[a * q + b] = field.encode(&prod) as u32;
            }
        }
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Lower coefficients of the monic modulus.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse")
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| {
            (1..self.q)
                .find(|&b| self.mul(a, b) == 1)
                .expect("field inverse")
        })
    }

    pub fn pow(&self, a: usize, mut exp: u64) -> usize {
        let (mut base, mut acc) = (a, 1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn coeffs(&self, a: usize) -> Vec<u64> {
        let mut a = a as u64;
        (0..self.e)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u64]) -> usize {
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as usize
    }

    fn poly_mul_mod(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let e = self.e as usize;
        let mut prod = vec![0u64; 2 * e];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
        for d in (e..2 * e).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (t, &m) in self.modulus.iter().enumerate() {
                prod[d - e + t] = (prod[d - e + t] + (p - c) * m) % p;
            }
        }
        prod.truncate(e);
        prod
    }
}

/// Smallest monic irreducible polynomial of degree `e` over `GF(p)`, ordered
/// by the base-`p` encoding of its lower coefficients. Returns those lower
/// coefficients.
fn least_irreducible(p: u64, e: usize) -> Vec<u64> {
    let count = p.pow(e as u32);
    (0..count)
        .map(|code| {
            let mut c = code;
            let mut lower: Vec<u64> = (0..e)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect();
            lower.push(1);
            lower
        })
        .find(|poly| is_irreducible(poly, p))
        .map(|mut poly| {
            poly.pop();
            poly
        })
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
/// Coefficients are stored low to high.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut c = code;
            let mut divisor: Vec<u64> = (0..d)
                .map(|_| {
                    let x = c % p;
                    c /= p;
                    x
                })
                .collect();
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo a monic `b`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * c % p) % p;
            }
        }
        r.pop();
    }
    r
}
