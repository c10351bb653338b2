//! Dense univariate polynomials over a valued field.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::ValuedField;
use crate::val::Val;

/// Coefficients lowest degree first. Trailing coefficients that read as zero
/// are dropped by `trim`, so the leading coefficient has a defined valuation.
#[derive(Clone, Debug)]
pub struct DensePoly<E> {
    pub coeffs: Vec<E>,
}

impl<E: Clone> DensePoly<E> {
    pub fn new(coeffs: Vec<E>) -> Self {
        DensePoly { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

impl<E: Clone> DensePoly<E> {
    pub fn from_ints<F: ValuedField<Elem = E>>(k: &F, c: &[i64]) -> Self {
        DensePoly::new(c.iter().map(|&x| k.from_int(x)).collect()).trim(k)
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant<F: ValuedField<Elem = E>>(k: &F, c: E) -> Self {
        DensePoly::new(vec![c]).trim(k)
    }

    /// X as a polynomial.
    pub fn x<F: ValuedField<Elem = E>>(k: &F) -> Self {
        DensePoly::new(vec![k.zero(), k.one()])
    }

    pub fn trim<F: ValuedField<Elem = E>>(mut self, k: &F) -> Self {
        while self.coeffs.last().is_some_and(|c| k.is_zero(c)) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add<F: ValuedField<Elem = E>>(&self, k: &F, o: &Self) -> Self {
        let n = self.len().max(o.len());
        let z = k.zero();
        DensePoly::new((0..n).map(|i| k.add(self.coeffs.get(i).unwrap_or(&z), o.coeffs.get(i).unwrap_or(&z))).collect())
            .trim(k)
    }

    pub fn neg<F: ValuedField<Elem = E>>(&self, k: &F) -> Self {
        DensePoly::new(self.coeffs.iter().map(|c| k.neg(c)).collect())
    }

    pub fn sub<F: ValuedField<Elem = E>>(&self, k: &F, o: &Self) -> Self {
        self.add(k, &o.neg(k))
    }

    pub fn mul<F: ValuedField<Elem = E>>(&self, k: &F, o: &Self) -> Self {
        if self.is_empty() || o.is_empty() {
            return DensePoly::zero();
        }
        let mut r = vec![k.zero(); self.len() + o.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) && k.precision(a).is_none() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                r[i + j] = k.add(&r[i + j], &k.mul(a, b));
            }
        }
        DensePoly::new(r).trim(k)
    }

    pub fn scale<F: ValuedField<Elem = E>>(&self, k: &F, c: &E) -> Self {
        DensePoly::new(self.coeffs.iter().map(|a| k.mul(a, c)).collect()).trim(k)
    }

    pub fn pow<F: ValuedField<Elem = E>>(&self, k: &F, n: u32) -> Self {
        let mut r = DensePoly::constant(k, k.one());
        for _ in 0..n {
            r = r.mul(k, self);
        }
        r
    }

    pub fn eval<F: ValuedField<Elem = E>>(&self, k: &F, x: &E) -> E {
        self.coeffs.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    pub fn derivative<F: ValuedField<Elem = E>>(&self, k: &F) -> Self {
        DensePoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| k.scale_int(c, i as i64)).collect()).trim(k)
    }

    /// f(X + a), by repeated synthetic division.
    pub fn shift<F: ValuedField<Elem = E>>(&self, k: &F, a: &E) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = k.mul(&c[j + 1], a);
                c[j] = k.add(&c[j], &t);
            }
        }
        DensePoly::new(c).trim(k)
    }

    /// f(sX).
    pub fn scale_var<F: ValuedField<Elem = E>>(&self, k: &F, s: &E) -> Self {
        let mut pw = k.one();
        let mut out = Vec::with_capacity(self.len());
        for c in &self.coeffs {
            out.push(k.mul(c, &pw));
            pw = k.mul(&pw, s);
        }
        DensePoly::new(out).trim(k)
    }

    /// f(g(X)).
    pub fn compose<F: ValuedField<Elem = E>>(&self, k: &F, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(DensePoly::zero(), |acc, c| acc.mul(k, g).add(k, &DensePoly::constant(k, c.clone())))
    }

    /// Division with remainder; the divisor's leading coefficient must be invertible.
    pub fn divrem<F: ValuedField<Elem = E>>(&self, k: &F, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or_else(|| Error::invalid("division by the zero polynomial"))?;
        let inv = k.inv(dl)?;
        let mut r = self.coeffs.clone();
        if r.len() < d.len() {
            return Ok((DensePoly::zero(), DensePoly::new(r).trim(k)));
        }
        let mut q = vec![k.zero(); r.len() - d.len() + 1];
        for s in (0..q.len()).rev() {
            let c = k.mul(&r[s + d.len() - 1], &inv);
            for (i, di) in d.coeffs.iter().enumerate() {
                let t = k.mul(&c, di);
                r[s + i] = k.sub(&r[s + i], &t);
            }
            q[s] = c;
        }
        r.truncate(d.len() - 1);
        Ok((DensePoly::new(q).trim(k), DensePoly::new(r).trim(k)))
    }

    pub fn monic<F: ValuedField<Elem = E>>(&self, k: &F) -> Result<Self> {
        let l = self.leading().ok_or_else(|| Error::invalid("zero polynomial has no monic form"))?;
        let inv = k.inv(l)?;
        Ok(self.scale(k, &inv))
    }

    /// Valuations of the coefficients, `None` where a coefficient reads as zero.
    pub fn valuations<F: ValuedField<Elem = E>>(&self, k: &F) -> Vec<Option<Val>> {
        self.coeffs.iter().map(|c| k.valuation(c).ok()).collect()
    }

    /// Minimum absolute precision over the coefficients.
    pub fn precision<F: ValuedField<Elem = E>>(&self, k: &F) -> Option<Val> {
        self.coeffs.iter().fold(None, |acc, c| crate::val::min_opt(acc, k.precision(c)))
    }

    /// Gauss valuation: minimum coefficient valuation.
    pub fn gauss_valuation<F: ValuedField<Elem = E>>(&self, k: &F) -> Option<Val> {
        self.valuations(k).into_iter().flatten().min()
    }

    /// Reduction modulo the maximal ideal of an integral polynomial.
    pub fn reduction<F: ValuedField<Elem = E>>(&self, k: &F) -> Result<Vec<crate::residue::Fq>> {
        let rf = k.residue_field();
        let mut out: Vec<_> = self.coeffs.iter().map(|c| k.residue(c)).collect::<Result<_>>()?;
        rf.poly_trim(&mut out);
        Ok(out)
    }

    pub fn truncate_all<F: ValuedField<Elem = E>>(&self, k: &F, n: Val) -> Self {
        DensePoly::new(self.coeffs.iter().map(|c| k.truncate(c, n)).collect())
    }

    /// Embed coefficients through a field map.
    pub fn map<E2: Clone>(&self, f: impl Fn(&E) -> E2) -> DensePoly<E2> {
        DensePoly::new(self.coeffs.iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::TowerField;

    #[test]
    fn taylor_shift() {
        let k = TowerField::unramified(3, 1).unwrap();
        // X^2 at X + 1 is X^2 + 2X + 1.
        let f = DensePoly::from_ints(&k, &[0, 0, 1]);
        let g = f.shift(&k, &k.one());
        let want = DensePoly::from_ints(&k, &[1, 2, 1]);
        assert!(g.sub(&k, &want).is_empty());
    }

    #[test]
    fn division_identity() {
        let k = TowerField::unramified(5, 1).unwrap();
        let f = DensePoly::from_ints(&k, &[3, 0, 7, 1, 2]);
        let d = DensePoly::from_ints(&k, &[1, 1, 1]);
        let (q, r) = f.divrem(&k, &d).unwrap();
        assert!(q.mul(&k, &d).add(&k, &r).sub(&k, &f).is_empty());
        assert!(r.len() < d.len());
    }
}
