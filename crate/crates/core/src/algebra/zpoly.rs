//! Dense integer polynomials (constant term first) and a modular gcd used to
//! reduce univariate fractions with large numerators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use super::upoly::UPoly;

const PRIMES: [u64; 8] = [
    2305843009213693951,
    2305843009213693921,
    2305843009213693907,
    2305843009213693723,
    2305843009213693693,
    2305843009213693669,
    2305843009213693613,
    2305843009213693561,
];

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// `u = c * p` with `p` integral and primitive, leading coefficient positive.
pub(crate) fn primitive(u: &UPoly) -> (Rational, Vec<BigInt>) {
    let cs = u.coeffs();
    if cs.is_empty() {
        return (Rational::zero(), Vec::new());
    }
    let den = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut v: Vec<BigInt> = cs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for c in &mut v {
        *c /= &g;
    }
    (Rational::new(g, den), v)
}

pub(crate) fn to_upoly(c: &Rational, v: &[BigInt]) -> UPoly {
    UPoly::new(v.iter().map(|x| Rational::from_integer(x.clone()) * c).collect())
}

/// `a / b` when `b` divides `a`; `b` must be primitive.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len().checked_sub(1)?;
    if a.len() <= db {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    let lc = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[k + j] -= &q * bj;
            }
        }
        quot[k] = q;
    }
    rem[..db].iter().all(Zero::is_zero).then_some(quot)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Primitive gcd, modular with a Euclidean fallback.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    modular_gcd(a, b).unwrap_or_else(|| {
        let one = Rational::one();
        primitive(&to_upoly(&one, a).euclid_gcd(&to_upoly(&one, b))).1
    })
}

/// Primitive lcm of primitive polynomials.
pub(crate) fn lcm(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let g = gcd(a, b);
    mul(a, &div_exact(b, &g).expect("gcd divides"))
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn reduce(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = v.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = powmod(b[db], p - 2, p);
    while a.len() > db {
        let top = a.len() - 1;
        let c = mulmod(a[top], inv, p);
        if c != 0 {
            let s = top - db;
            for (j, bj) in b.iter().enumerate() {
                let t = mulmod(c, *bj, p);
                a[s + j] = (a[s + j] + p - t) % p;
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

/// Monic gcd over `F_p`.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        rem_mod(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
    let inv = powmod(*a.last().unwrap(), p - 2, p);
    a.iter().map(|c| mulmod(*c, inv, p)).collect()
}

/// Smallest `(n, d)` with `n = d r mod m`, `|n|, d <= sqrt(m / 2)`.
fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Primitive gcd `g` of `a` and `b` together with `a / g`, for the case where
/// `g` has small coefficients (it divides a short polynomial). `None` when the
/// modular images do not lift to a verified divisor of both inputs.
fn modular_gcd_cofactor(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let mut images: Vec<(u64, Vec<u64>)> = Vec::new();
    for &p in &PRIMES {
        let (ap, bp) = (reduce(a, p), reduce(b, p));
        if ap.len() != a.len() || bp.len() != b.len() {
            continue;
        }
        let g = gcd_mod(&ap, &bp, p);
        if g.len() == 1 {
            return Some((vec![BigInt::one()], a.to_vec()));
        }
        match images.first().map(|(_, h)| h.len()) {
            Some(d) if g.len() > d => continue,
            Some(d) if g.len() < d => images.clear(),
            _ => {}
        }
        images.push((p, g));
        if let Some(cand) = lift(&images) {
            if div_exact(b, &cand).is_some() {
                if let Some(q) = div_exact(a, &cand) {
                    return Some((cand, q));
                }
            }
        }
    }
    None
}

pub(crate) fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    // the cheaper division is verified second
    modular_gcd_cofactor(b, a).map(|(g, _)| g)
}

/// Primitive gcd and `a / gcd`, modular with a Euclidean fallback.
pub(crate) fn gcd_cofactor(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    modular_gcd_cofactor(a, b).unwrap_or_else(|| {
        let g = gcd(a, b);
        let q = div_exact(a, &g).expect("gcd divides");
        (g, q)
    })
}

fn lift(images: &[(u64, Vec<u64>)]) -> Option<Vec<BigInt>> {
    let len = images[0].1.len();
    let mut m = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); len];
    for (p, g) in images {
        let pb = BigInt::from(*p);
        // x = x0 + m * ((g - x0) * m^-1 mod p)
        let minv = BigInt::from(powmod((&m % &pb).to_u64().unwrap(), p - 2, *p));
        for (c, gi) in coeffs.iter_mut().zip(g) {
            let diff = (BigInt::from(*gi) - &*c).mod_floor(&pb);
            *c += &m * ((diff * &minv) % &pb);
        }
        m *= pb;
    }
    let rats: Vec<Rational> = coeffs.iter().map(|c| rational_reconstruct(c, &m)).collect::<Option<_>>()?;
    Some(primitive(&UPoly::new(rats)).1)
}
