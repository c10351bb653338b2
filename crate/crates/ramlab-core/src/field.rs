//! The interface shared by tower fields and their simple extensions.

use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::residue::{Fq, ResidueField};
use crate::val::Val;

/// A complete discretely valued field of characteristic 0 with residue
/// characteristic p, valuations normalized by v(p) = 1.
///
/// Elements are plain data; every operation goes through the field so that
/// reduction and precision rules live in one place.
pub trait ValuedField: Clone + Debug {
    type Elem: Clone + Debug;

    fn p(&self) -> u64;
    /// Absolute ramification index over Q_p.
    fn ram_index(&self) -> i64;
    fn residue_field(&self) -> &ResidueField;
    fn default_precision(&self) -> Val;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn from_rational(&self, r: &BigRational) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Exact valuation; fails when `a` is indistinguishable from zero.
    fn valuation(&self, a: &Self::Elem) -> Result<Val>;
    /// Absolute precision, `None` for exact elements.
    fn precision(&self, a: &Self::Elem) -> Option<Val>;
    /// True when `a` is zero to its recorded precision.
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Caps the absolute precision of `a` at `n`.
    fn truncate(&self, a: &Self::Elem, n: Val) -> Self::Elem;

    fn residue(&self, a: &Self::Elem) -> Result<Fq>;
    /// A Teichmuller-free lift of a residue class with small coefficients.
    fn lift(&self, r: &Fq) -> Self::Elem;
    fn uniformizer(&self) -> Self::Elem;
    /// pi^k for any integer k.
    fn uniformizer_pow(&self, k: i64) -> Result<Self::Elem>;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut r = self.one();
        while n > 0 {
            if n & 1 == 1 {
                r = self.mul(&r, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        r
    }

    fn pow_signed(&self, a: &Self::Elem, n: i64) -> Result<Self::Elem> {
        if n >= 0 {
            Ok(self.pow(a, n as u64))
        } else {
            self.inv(&self.pow(a, n.unsigned_abs()))
        }
    }

    fn scale_int(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        self.mul(a, &self.from_int(n))
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    /// Valuation in units of this field's uniformizer.
    fn pi_units(&self, v: Val) -> Val {
        v * Val::from_integer(self.ram_index())
    }

    /// Valuation, or the precision bound for elements that read as zero.
    fn valuation_lower_bound(&self, a: &Self::Elem) -> Option<Val> {
        match self.valuation(a) {
            Ok(v) => Some(v),
            Err(_) => self.precision(a),
        }
    }
}
