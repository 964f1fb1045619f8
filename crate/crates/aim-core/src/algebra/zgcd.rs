//! Integer primitive-remainder-sequence GCDs.
//!
//! The reduced-fraction layers above need polynomial GCDs constantly; doing
//! Euclid directly on rational (or rational-function) coefficients re-reduces
//! a fraction on every scalar operation, which dominates the whole engine.
//! Instead the inputs are cleared to integer coefficients once, the remainder
//! sequence runs on plain `BigInt` vectors with content stripped between
//! remainders, and the result is converted back at the end.
//!
//! `Zp` is a univariate integer polynomial (ascending, trimmed); `Zp2` is a
//! polynomial in a second variable whose coefficients are `Zp`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(crate) type Zp = Vec<BigInt>;
pub(crate) type Zp2 = Vec<Zp>;

// ---- univariate over Z ----

pub(crate) fn zp_trim(mut p: Zp) -> Zp {
    while p.last().map_or(false, BigInt::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn zp_is_zero(p: &Zp) -> bool {
    p.is_empty()
}

fn zp_is_one(p: &Zp) -> bool {
    p.len() == 1 && p[0].is_one()
}

fn zp_scale(p: &Zp, c: &BigInt) -> Zp {
    p.iter().map(|a| a * c).collect()
}

fn zp_neg(p: &Zp) -> Zp {
    p.iter().map(|a| -a).collect()
}

fn zp_sub(a: &Zp, b: &Zp) -> Zp {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        out.push(a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero));
    }
    zp_trim(out)
}

pub(crate) fn zp_mul(a: &Zp, b: &Zp) -> Zp {
    if zp_is_zero(a) || zp_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    zp_trim(out)
}

/// Gcd of the coefficients, positive; zero polynomial gives zero.
pub(crate) fn zp_int_content(p: &Zp) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if !c.is_zero() {
            g = num_integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
    }
    g
}

fn zp_div_int(p: &Zp, c: &BigInt) -> Zp {
    debug_assert!(!c.is_zero());
    p.iter().map(|a| a / c).collect()
}

/// Sign-normalized copy: leading coefficient positive.
fn zp_abs(p: &Zp) -> Zp {
    if p.last().map_or(false, |l| l.is_negative()) {
        zp_neg(p)
    } else {
        p.clone()
    }
}

/// Divides out the integer content and makes the leading coefficient
/// positive.
pub(crate) fn zp_primitive(p: &Zp) -> Zp {
    if zp_is_zero(p) {
        return Vec::new();
    }
    let mut g = zp_int_content(p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    if g.is_one() {
        p.clone()
    } else {
        zp_div_int(p, &g)
    }
}

/// Standard pseudo-remainder `rem(lc(b)^(deg a - deg b + 1) * a, b)`: the
/// full scaling is applied even when a round is skipped by cancellation, so
/// the subresultant exact-division bookkeeping stays valid.
fn zp_prem(a: &Zp, b: &Zp) -> Zp {
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    let monic_like = lead.is_one();
    let mut scalings = (a.len() - 1) - db + 1;
    let mut rem = a.clone();
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        if !monic_like {
            rem = zp_scale(&rem, lead);
        }
        scalings -= 1;
        let shift = rem.len() - 1 - db;
        let mut sub = vec![BigInt::zero(); shift];
        sub.extend(zp_scale(b, &top));
        rem = zp_sub(&rem, &sub);
        debug_assert!(rem.len() <= db + shift, "top term failed to cancel");
    }
    if !monic_like && scalings > 0 && !zp_is_zero(&rem) {
        rem = zp_scale(&rem, &lead.pow(scalings as u32));
    }
    rem
}

fn bigint_pow(base: &BigInt, exp: usize) -> BigInt {
    base.pow(exp as u32)
}

/// Gcd of the primitive parts by the subresultant remainder sequence:
/// every remainder is divided by a predicted exact factor, so coefficient
/// growth stays linear and no content gcds are needed along the way.
/// Inputs must be nonconstant; the result is primitive with positive lead.
fn zp_prim_gcd_subresultant(a: &Zp, b: &Zp) -> Zp {
    let mut p;
    let mut q;
    if a.len() >= b.len() {
        p = a.clone();
        q = b.clone();
    } else {
        p = b.clone();
        q = a.clone();
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let d = p.len() - q.len();
        let r = zp_prem(&p, &q);
        if zp_is_zero(&r) {
            return zp_primitive(&q);
        }
        if r.len() == 1 {
            // primitive parts are coprime
            return vec![BigInt::one()];
        }
        let divisor = (&g * bigint_pow(&h, d)).abs();
        p = q;
        q = zp_div_int(&r, &divisor);
        g = p.last().unwrap().abs();
        h = if d == 0 {
            h
        } else {
            (bigint_pow(&g, d) / bigint_pow(&h, d - 1)).abs()
        };
    }
}

/// True gcd in Z[t]: integer-content gcd times the primitive-part gcd,
/// leading coefficient positive.
pub(crate) fn zp_gcd(a: &Zp, b: &Zp) -> Zp {
    if zp_is_zero(a) {
        return zp_abs(b);
    }
    if zp_is_zero(b) {
        return zp_abs(a);
    }
    let content = num_integer::gcd(zp_int_content(a), zp_int_content(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![content];
    }
    let p = zp_primitive(a);
    let q = zp_primitive(b);
    let gcd_pp = zp_prim_gcd_subresultant(&p, &q);
    if content.is_one() {
        gcd_pp
    } else {
        zp_scale(&gcd_pp, &content)
    }
}

/// Exact division in Z[t]; the divisor must divide exactly.
pub(crate) fn zp_divexact(a: &Zp, b: &Zp) -> Zp {
    debug_assert!(!zp_is_zero(b), "zp_divexact by zero");
    if zp_is_zero(a) {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let (q, r) = num_integer::Integer::div_rem(rem.last().unwrap(), lead);
        debug_assert!(r.is_zero(), "inexact integer-polynomial division");
        if !q.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let v = &rem[k + i] - &(&q * bc);
                rem[k + i] = v;
            }
            quot[k] = q;
        }
        rem.pop();
        while rem.last().map_or(false, BigInt::is_zero) {
            rem.pop();
        }
    }
    debug_assert!(zp_is_zero(&zp_trim(rem)), "inexact polynomial division");
    zp_trim(quot)
}

// ---- bivariate: Z[t][x] ----

pub(crate) fn zp2_trim(mut p: Zp2) -> Zp2 {
    while p.last().map_or(false, |c| zp_is_zero(c)) {
        p.pop();
    }
    p
}

pub(crate) fn zp2_is_zero(p: &Zp2) -> bool {
    p.is_empty()
}

fn zp2_scale_zp(p: &Zp2, c: &Zp) -> Zp2 {
    p.iter().map(|a| zp_mul(a, c)).collect()
}

fn zp2_sub(a: &Zp2, b: &Zp2) -> Zp2 {
    let n = a.len().max(b.len());
    let empty: Zp = Vec::new();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        out.push(zp_sub(a.get(k).unwrap_or(&empty), b.get(k).unwrap_or(&empty)));
    }
    zp2_trim(out)
}

/// Content of a bivariate polynomial as the Z[t]-gcd of its coefficients.
fn zp2_content(p: &Zp2) -> Zp {
    let mut g: Zp = Vec::new();
    for c in p {
        if !zp_is_zero(c) {
            g = zp_gcd(&g, c);
            if zp_is_one(&g) {
                break;
            }
        }
    }
    g
}

fn zp2_primitive(p: &Zp2) -> Zp2 {
    if zp2_is_zero(p) {
        return Vec::new();
    }
    let mut g = zp2_content(p);
    if p.last().unwrap().last().unwrap().is_negative() {
        g = zp_neg(&g);
    }
    if zp_is_one(&g) {
        p.clone()
    } else {
        p.iter().map(|c| zp_divexact(c, &g)).collect()
    }
}

/// Standard pseudo-remainder in x with Z[t] coefficient arithmetic only,
/// with the full `lc^(deg a - deg b + 1)` scaling convention.
fn zp2_prem(a: &Zp2, b: &Zp2) -> Zp2 {
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    let monic_like = zp_is_one(&lead);
    let mut scalings = (a.len() - 1) - db + 1;
    let mut rem = a.clone();
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        if !monic_like {
            rem = zp2_scale_zp(&rem, &lead);
        }
        scalings -= 1;
        let shift = rem.len() - 1 - db;
        let mut sub: Zp2 = vec![Vec::new(); shift];
        sub.extend(zp2_scale_zp(b, &top));
        rem = zp2_sub(&rem, &sub);
        debug_assert!(rem.len() <= db + shift, "top term failed to cancel");
    }
    if !monic_like && scalings > 0 && !zp2_is_zero(&rem) {
        let mut factor = lead.clone();
        for _ in 1..scalings {
            factor = zp_mul(&factor, &lead);
        }
        rem = zp2_scale_zp(&rem, &factor);
    }
    rem
}

fn zp_pow(base: &Zp, exp: usize) -> Zp {
    let mut out = vec![BigInt::one()];
    for _ in 0..exp {
        out = zp_mul(&out, base);
    }
    out
}

/// Gcd in x of two bivariate polynomials, up to a unit of Q(t), by the
/// subresultant remainder sequence over Z[t]: remainders are divided by
/// predicted exact factors instead of computing their content, which keeps
/// coefficient growth linear. The t-content is dropped, since callers
/// normalize to a monic-in-x polynomial over Q(t) anyway.
pub(crate) fn zp2_gcd(a: &Zp2, b: &Zp2) -> Zp2 {
    debug_assert!(!zp2_is_zero(a) && !zp2_is_zero(b));
    let mut p = zp2_primitive(a);
    let mut q = zp2_primitive(b);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    if q.len() == 1 {
        return vec![vec![BigInt::one()]];
    }
    let mut g: Zp = vec![BigInt::one()];
    let mut h: Zp = vec![BigInt::one()];
    loop {
        let d = p.len() - q.len();
        let r = zp2_prem(&p, &q);
        if zp2_is_zero(&r) {
            return zp2_primitive(&q);
        }
        if r.len() == 1 {
            // no common factor with positive x-degree
            return vec![vec![BigInt::one()]];
        }
        let divisor = zp_abs(&zp_mul(&g, &zp_pow(&h, d)));
        p = q;
        q = r.iter().map(|c| zp_divexact(c, &divisor)).collect();
        g = zp_abs(p.last().unwrap());
        h = if d == 0 {
            h
        } else {
            zp_abs(&zp_divexact(&zp_pow(&g, d), &zp_pow(&h, d - 1)))
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> Zp {
        zp_trim(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn zp2_mul(a: &Zp2, b: &Zp2) -> Zp2 {
        let mut out: Zp2 = vec![Vec::new(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let prod = zp_mul(x, y);
                out[i + j] = zp_sub(&out[i + j], &zp_neg(&prod));
            }
        }
        zp2_trim(out)
    }

    #[test]
    fn univariate_gcd_with_content() {
        // gcd(2(t-1)(t+2), 4(t-1)) = 2(t-1)
        let a = zp_mul(&zp(&[-2, 2]), &zp(&[2, 1]));
        let b = zp(&[-4, 4]);
        assert_eq!(zp_gcd(&a, &b), zp(&[-2, 2]));
    }

    #[test]
    fn univariate_coprime() {
        assert_eq!(zp_gcd(&zp(&[1, 0, 1]), &zp(&[2, 1])), zp(&[1]));
    }

    #[test]
    fn gcd_with_zero_is_sign_normalized() {
        assert_eq!(zp_gcd(&Vec::new(), &zp(&[2, -4])), zp(&[-2, 4]));
    }

    #[test]
    fn exact_division() {
        let a = zp_mul(&zp(&[3, 2]), &zp(&[-1, 0, 5]));
        assert_eq!(zp_divexact(&a, &zp(&[3, 2])), zp(&[-1, 0, 5]));
    }

    #[test]
    fn bivariate_gcd() {
        // over Z[t][x]: gcd((x - t)(x + 1), (x - t)(x - 1)) = x - t
        let x_minus_t: Zp2 = vec![zp(&[0, -1]), zp(&[1])];
        let a = zp2_mul(&x_minus_t, &vec![zp(&[1]), zp(&[1])]);
        let c = zp2_mul(&x_minus_t, &vec![zp(&[-1]), zp(&[1])]);
        assert_eq!(zp2_gcd(&a, &c), x_minus_t);
    }
}
