//! Exact valuations and p-adic helpers for integers and rationals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact valuation, normalized so that v(p) = 1 unless stated otherwise.
pub type Val = Ratio<i64>;

pub fn val(n: i64, d: i64) -> Val {
    Ratio::new(n, d)
}

pub fn val_int(n: i64) -> Val {
    Ratio::from_integer(n)
}

/// Multiplicity of `p` in a nonzero integer.
pub fn vp_int(x: &BigInt, p: u64) -> i64 {
    debug_assert!(!x.is_zero());
    if p == 2 {
        return x.trailing_zeros().unwrap_or(0) as i64;
    }
    let pb = BigInt::from(p);
    let mut n = x.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// p-adic valuation of a rational, `None` for zero.
pub fn vp_rat(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        Some(vp_int(x.numer(), p) - vp_int(x.denom(), p))
    }
}

/// Image of a p-integral rational in F_p.
pub fn rat_mod_p(x: &BigRational, p: u64) -> u64 {
    if x.is_zero() {
        return 0;
    }
    let pb = BigInt::from(p);
    let n = x.numer().mod_floor(&pb);
    let d = x.denom().mod_floor(&pb);
    debug_assert!(!d.is_zero(), "denominator divisible by p");
    let n = n.to_u64().unwrap();
    let d = d.to_u64().unwrap();
    (n as u128 * inv_mod(d, p) as u128 % p as u128) as u64
}

pub fn inv_mod(a: u64, m: u64) -> u64 {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(m as i128) as u64
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Reduce a rational of valuation `v` modulo p^k, returning p^v * u with
/// 0 <= u < p^(k - v). Used to bound coefficient growth.
pub fn reduce_rat(x: &BigRational, p: u64, k: i64) -> BigRational {
    let v = match vp_rat(x, p) {
        None => return BigRational::zero(),
        Some(v) => v,
    };
    if v >= k {
        return BigRational::zero();
    }
    let pb = BigInt::from(p);
    let m = num_traits::pow(pb.clone(), (k - v) as usize);
    let pv = p_pow_rat(p, v);
    let unit = x / &pv;
    let num = unit.numer().mod_floor(&m);
    let den = unit.denom().mod_floor(&m);
    let dinv = den.modinv(&m).expect("unit denominator");
    let u = (num * dinv).mod_floor(&m);
    BigRational::from_integer(u) * pv
}

pub fn p_pow_rat(p: u64, k: i64) -> BigRational {
    let pb = BigInt::from(p);
    if k >= 0 {
        BigRational::from_integer(num_traits::pow(pb, k as usize))
    } else {
        BigRational::new(BigInt::one(), num_traits::pow(pb, (-k) as usize))
    }
}

/// Smallest integer >= x.
pub fn ceil(x: Val) -> i64 {
    x.ceil().to_integer()
}

pub fn floor(x: Val) -> i64 {
    x.floor().to_integer()
}

pub fn min_opt(a: Option<Val>, b: Option<Val>) -> Option<Val> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x < y { x } else { y }),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

pub fn is_integral(v: Val) -> bool {
    v.is_integer()
}

pub fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vp_of_rationals() {
        let x = BigRational::new(BigInt::from(24), BigInt::from(5));
        assert_eq!(vp_rat(&x, 2), Some(3));
        assert_eq!(vp_rat(&x, 5), Some(-1));
        assert_eq!(vp_rat(&BigRational::zero(), 3), None);
    }

    #[test]
    fn reduction_keeps_class() {
        let x = BigRational::new(BigInt::from(-7), BigInt::from(3));
        let r = reduce_rat(&x, 2, 5);
        let diff = &x - &r;
        assert!(vp_rat(&diff, 2).is_none_or(|v| v >= 5));
        assert!(r >= BigRational::zero());
    }

    #[test]
    fn residue_mod_p() {
        let x = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(rat_mod_p(&x, 5), 2);
    }
}
