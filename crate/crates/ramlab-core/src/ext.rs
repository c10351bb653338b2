//! Totally ramified simple extensions F[y]/(T) of a valued field.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::ValuedField;
use crate::linalg::charpoly;
use crate::poly::DensePoly;
use crate::residue::{Fq, ResidueField};
use crate::val::{min_opt, Val};

/// Coordinates in the basis 1, y, ..., y^(d-1).
#[derive(Clone, Debug)]
pub struct ExtElement<E>(pub Vec<E>);

/// F[y]/(T) for a monic T whose Newton polygon is a single segment and which
/// the caller asserts to be irreducible, so that the extension is totally
/// ramified of degree deg T.
#[derive(Clone, Debug)]
pub struct SimpleExtension<F: ValuedField> {
    base: F,
    modulus: Vec<F::Elem>,
    d: usize,
    vy: Val,
    pi: Option<ExtElement<F::Elem>>,
}

impl<F: ValuedField> SimpleExtension<F> {
    /// Builds the extension and looks for a uniformizer among y and the base
    /// uniformizer; use `with_witnesses` when those do not suffice.
    pub fn new(base: F, t: &DensePoly<F::Elem>) -> Result<Self> {
        Self::with_witnesses(base, t, &[])
    }

    /// `witnesses` are polynomials in y whose valuations, together with those of
    /// y and the base uniformizer, generate the value group of the extension.
    pub fn with_witnesses(base: F, t: &DensePoly<F::Elem>, witnesses: &[DensePoly<F::Elem>]) -> Result<Self> {
        let t = t.clone().trim(&base);
        let d = t.degree().ok_or_else(|| Error::invalid("zero modulus"))?;
        if d == 0 {
            return Err(Error::invalid("constant modulus"));
        }
        if !base.equal(&t.coeffs[d], &base.one()) {
            return Err(Error::invalid("modulus must be monic"));
        }
        let v0 = base.valuation(&t.coeffs[0]).map_err(|_| Error::invalid("modulus has a vanishing constant term"))?;
        let vy = v0 / Val::from_integer(d as i64);
        for i in 1..d {
            if let Ok(v) = base.valuation(&t.coeffs[i]) {
                if v < vy * Val::from_integer((d - i) as i64) {
                    return Err(Error::invalid(format!(
                        "modulus Newton polygon is not a single segment (coefficient {})",
                        i
                    )));
                }
            }
        }
        let modulus = t.coeffs[..d].to_vec();
        let mut ext = SimpleExtension { base, modulus, d, vy, pi: None };
        let mut cands: Vec<ExtElement<F::Elem>> = vec![ext.generator()];
        for w in witnesses {
            cands.push(ext.from_poly(w)?);
        }
        ext.pi = Some(ext.uniformizer_from(&cands)?);
        Ok(ext)
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Valuation of the generator y.
    pub fn generator_valuation(&self) -> Val {
        self.vy
    }

    pub fn modulus(&self) -> DensePoly<F::Elem> {
        let mut c = self.modulus.clone();
        c.push(self.base.one());
        DensePoly::new(c)
    }

    pub fn generator(&self) -> ExtElement<F::Elem> {
        if self.d == 1 {
            return ExtElement(vec![self.base.neg(&self.modulus[0])]);
        }
        let mut c = vec![self.base.zero(); 2];
        c[1] = self.base.one();
        ExtElement(c)
    }

    pub fn embed(&self, a: &F::Elem) -> ExtElement<F::Elem> {
        self.trim(ExtElement(vec![a.clone()]))
    }

    /// Reduces a polynomial in y modulo T.
    pub fn from_poly(&self, f: &DensePoly<F::Elem>) -> Result<ExtElement<F::Elem>> {
        let y = self.generator();
        let mut acc = self.zero();
        for c in f.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, &y), &self.embed(c));
        }
        Ok(acc)
    }

    /// The element as a polynomial in y of degree < d.
    pub fn to_poly(&self, x: &ExtElement<F::Elem>) -> DensePoly<F::Elem> {
        DensePoly::new(x.0.clone()).trim(&self.base)
    }

    /// The coordinate vector padded to length d.
    pub fn coords(&self, x: &ExtElement<F::Elem>) -> Vec<F::Elem> {
        let mut c = x.0.clone();
        c.resize(self.d, self.base.zero());
        c
    }

    fn trim(&self, mut x: ExtElement<F::Elem>) -> ExtElement<F::Elem> {
        while x.0.last().is_some_and(|c| self.base.is_zero(c) && self.base.precision(c).is_none()) {
            x.0.pop();
        }
        x
    }

    fn mul_by_y(&self, x: &ExtElement<F::Elem>) -> ExtElement<F::Elem> {
        let k = &self.base;
        let mut c = self.coords(x);
        let top = c.pop().unwrap();
        c.insert(0, k.zero());
        for (i, ti) in self.modulus.iter().enumerate() {
            c[i] = k.sub(&c[i], &k.mul(&top, ti));
        }
        self.trim(ExtElement(c))
    }

    /// Matrix of multiplication by x in the basis of powers of y.
    pub fn mult_matrix(&self, x: &ExtElement<F::Elem>) -> Vec<Vec<F::Elem>> {
        let mut cols = Vec::with_capacity(self.d);
        let mut cur = x.clone();
        for j in 0..self.d {
            cols.push(self.coords(&cur));
            if j + 1 < self.d {
                cur = self.mul_by_y(&cur);
            }
        }
        (0..self.d).map(|r| (0..self.d).map(|j| cols[j][r].clone()).collect()).collect()
    }

    pub fn charpoly_of(&self, x: &ExtElement<F::Elem>) -> DensePoly<F::Elem> {
        charpoly(&self.base, &self.mult_matrix(x))
    }

    pub fn norm(&self, x: &ExtElement<F::Elem>) -> F::Elem {
        let c = self.charpoly_of(x);
        let c0 = c.coeffs[0].clone();
        if self.d % 2 == 1 {
            self.base.neg(&c0)
        } else {
            c0
        }
    }

    pub fn trace(&self, x: &ExtElement<F::Elem>) -> F::Elem {
        let c = self.charpoly_of(x);
        self.base.neg(&c.coeffs[self.d - 1])
    }

    fn term_valuations(&self, x: &ExtElement<F::Elem>) -> Vec<Val> {
        x.0.iter()
            .enumerate()
            .filter_map(|(i, c)| self.base.valuation(c).ok().map(|v| v + self.vy * Val::from_integer(i as i64)))
            .collect()
    }

    fn uniformizer_from(&self, cands: &[ExtElement<F::Elem>]) -> Result<ExtElement<F::Elem>> {
        let e = self.ram_index();
        let mut g = self.d as i64;
        let mut elem = self.embed(&self.base.uniformizer());
        for w in cands {
            if g == 1 {
                break;
            }
            let v = self.valuation(w)? * Val::from_integer(e);
            if !v.is_integer() {
                return Err(Error::invalid(format!(
                    "valuation {} is not integral in the value group: extension not totally ramified of degree {}",
                    v / Val::from_integer(e),
                    self.d
                )));
            }
            let v = v.to_integer();
            let eg = g.extended_gcd(&v);
            if eg.gcd < g {
                elem = self.mul(&self.pow_signed(&elem, eg.x)?, &self.pow_signed(w, eg.y)?);
                g = eg.gcd;
            }
        }
        if g != 1 {
            return Err(Error::invalid("no uniformizer found; supply witness elements with coprime valuations"));
        }
        Ok(elem)
    }
}

impl<F: ValuedField> ValuedField for SimpleExtension<F> {
    type Elem = ExtElement<F::Elem>;

    fn p(&self) -> u64 {
        self.base.p()
    }

    fn ram_index(&self) -> i64 {
        self.base.ram_index() * self.d as i64
    }

    fn residue_field(&self) -> &ResidueField {
        self.base.residue_field()
    }

    fn default_precision(&self) -> Val {
        self.base.default_precision()
    }

    fn zero(&self) -> Self::Elem {
        ExtElement(Vec::new())
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.embed(&self.base.from_bigint(n))
    }

    fn from_rational(&self, r: &BigRational) -> Self::Elem {
        self.embed(&self.base.from_rational(r))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.0.len().max(b.0.len());
        let z = self.base.zero();
        let c = (0..n).map(|i| self.base.add(a.0.get(i).unwrap_or(&z), b.0.get(i).unwrap_or(&z))).collect();
        self.trim(ExtElement(c))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        ExtElement(a.0.iter().map(|c| self.base.neg(c)).collect())
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = &self.base;
        if a.0.is_empty() || b.0.is_empty() {
            return self.zero();
        }
        let mut r = vec![k.zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                r[i + j] = k.add(&r[i + j], &k.mul(x, y));
            }
        }
        while r.len() > self.d {
            let top = r.pop().unwrap();
            let base = r.len() - self.d;
            for (i, ti) in self.modulus.iter().enumerate() {
                r[base + i] = k.sub(&r[base + i], &k.mul(&top, ti));
            }
        }
        self.trim(ExtElement(r))
    }

    /// Cayley-Hamilton: x^-1 = -(x^(d-1) + c_(d-1) x^(d-2) + ... + c_1) / c_0.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let k = &self.base;
        if a.0.len() <= 1 {
            let c = a.0.first().ok_or(Error::ZeroAtPrecision { precision: None })?;
            return Ok(self.embed(&k.inv(c)?));
        }
        self.valuation(a)?;
        let chi = self.charpoly_of(a);
        let c0inv = k.inv(&chi.coeffs[0])?;
        let mut acc = self.one();
        for i in (1..self.d).rev() {
            acc = self.add(&self.mul(&acc, a), &self.embed(&chi.coeffs[i]));
        }
        Ok(self.mul(&acc, &self.embed(&k.neg(&c0inv))))
    }

    fn valuation(&self, a: &Self::Elem) -> Result<Val> {
        let vals = self.term_valuations(a);
        let m = match vals.iter().min() {
            None => return Err(Error::ZeroAtPrecision { precision: self.precision(a) }),
            Some(m) => *m,
        };
        let v = if vals.iter().filter(|v| **v == m).count() == 1 {
            m
        } else {
            let n = self.norm(a);
            match self.base.valuation(&n) {
                Ok(v) => v / Val::from_integer(self.d as i64),
                Err(_) => return Err(Error::precision("norm vanishes at working precision")),
            }
        };
        // A leading term at or past the noise floor says nothing about v.
        match self.precision(a) {
            Some(n) if v >= n => Err(Error::ZeroAtPrecision { precision: Some(n) }),
            _ => Ok(v),
        }
    }

    fn precision(&self, a: &Self::Elem) -> Option<Val> {
        a.0.iter().enumerate().fold(None, |acc, (i, c)| {
            min_opt(acc, self.base.precision(c).map(|n| n + self.vy * Val::from_integer(i as i64)))
        })
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.0.iter().all(|c| self.base.is_zero(c))
    }

    fn truncate(&self, a: &Self::Elem, n: Val) -> Self::Elem {
        let c =
            a.0.iter()
                .enumerate()
                .map(|(i, c)| self.base.truncate(c, n - self.vy * Val::from_integer(i as i64)))
                .collect();
        self.trim(ExtElement(c))
    }

    fn residue(&self, a: &Self::Elem) -> Result<Fq> {
        let k = &self.base;
        let rf = k.residue_field();
        if self.is_zero(a) {
            return match self.precision(a) {
                Some(n) if n <= Val::from_integer(0) => Err(Error::precision("residue at precision <= 0")),
                _ => Ok(rf.zero()),
            };
        }
        let v = self.valuation(a)?;
        if v < Val::from_integer(0) {
            return Err(Error::NegativeValuation(v));
        }
        if v > Val::from_integer(0) {
            return Ok(rf.zero());
        }
        let higher_small = a.0.iter().enumerate().skip(1).all(|(i, c)| {
            k.valuation(c).map_or(true, |w| w + self.vy * Val::from_integer(i as i64) > Val::from_integer(0))
        });
        if higher_small {
            return k.residue(&a.0[0]);
        }
        // The characteristic polynomial reduces to (X - r)^d; read r from the
        // coefficient of X^(d - p^a), where p^a exactly divides d.
        let p = self.p() as usize;
        let mut pa = 1usize;
        while self.d.is_multiple_of(pa * p) {
            pa *= p;
        }
        let chi = self.charpoly_of(a);
        let c = k.residue(&chi.coeffs[self.d - pa])?;
        let binom = binomial_mod(self.d, pa, self.p());
        let mut r = rf.scale(&c, crate::val::inv_mod(binom, self.p()));
        if pa % 2 == 1 {
            r = rf.neg(&r);
        }
        let mut k_exp = 0;
        let mut t = pa;
        while t > 1 {
            t /= p;
            k_exp += 1;
        }
        Ok(rf.p_power_root(&r, k_exp))
    }

    fn lift(&self, r: &Fq) -> Self::Elem {
        self.embed(&self.base.lift(r))
    }

    fn uniformizer(&self) -> Self::Elem {
        self.pi.clone().expect("uniformizer set at construction")
    }

    fn uniformizer_pow(&self, k: i64) -> Result<Self::Elem> {
        self.pow_signed(&self.uniformizer(), k)
    }
}

fn binomial_mod(n: usize, k: usize, p: u64) -> u64 {
    // Lucas' theorem.
    let (mut n, mut k) = (n as u64, k as u64);
    let mut r = 1u64;
    while n > 0 || k > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for i in 0..b {
            c = c * (a - i) % p * crate::val::inv_mod(i + 1, p) % p;
        }
        r = r * c % p;
        n /= p;
        k /= p;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::TowerSpec;
    use crate::val::val;

    #[test]
    fn sqrt_two_over_q2() {
        let k = TowerSpec::new(2, 1).build().unwrap();
        let t = DensePoly::from_ints(&k, &[-2, 0, 1]);
        let l = SimpleExtension::new(k.clone(), &t).unwrap();
        let y = l.generator();
        assert_eq!(l.valuation(&y).unwrap(), val(1, 2));
        assert_eq!(l.ram_index(), 2);
        let one_plus = l.add(&l.one(), &y);
        assert_eq!(l.valuation(&one_plus).unwrap(), val(0, 1));
        // (1 + y)(1 - y) = -1
        let prod = l.mul(&one_plus, &l.sub(&l.one(), &y));
        assert!(l.equal(&prod, &l.from_int(-1)));
        let inv = l.inv(&one_plus).unwrap();
        assert!(l.equal(&l.mul(&inv, &one_plus), &l.one()));
        assert!(l.residue_field().is_one(&l.residue(&one_plus).unwrap()));
    }

    #[test]
    fn cancellation_needs_norm() {
        // y^2 = 12, so y = 2 sqrt(3) has integral valuation and y/2 - 1 is the
        // uniformizer witness. In 2 + y both terms have valuation 1.
        let k = TowerSpec::new(2, 1).build().unwrap();
        let t = DensePoly::from_ints(&k, &[-12, 0, 1]);
        assert!(SimpleExtension::new(k.clone(), &t).is_err());
        let half = k.from_rational(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        let w = DensePoly::new(vec![k.from_int(-1), half]);
        let l = SimpleExtension::with_witnesses(k.clone(), &t, &[w]).unwrap();
        let x = l.add(&l.from_int(2), &l.generator());
        assert_eq!(l.valuation(&x).unwrap(), val(3, 2));
        assert_eq!(l.valuation(&l.uniformizer()).unwrap(), val(1, 2));
    }

    #[test]
    fn residue_by_charpoly() {
        // y^2 = 2, x = 1 + y has residue 1; x = (1 + y)^2 / 1 has residue 1.
        let k = TowerSpec::new(3, 1).build().unwrap();
        let t = DensePoly::from_ints(&k, &[-3, 0, 1]);
        let l = SimpleExtension::new(k.clone(), &t).unwrap();
        let y = l.generator();
        let x = l.add(&l.from_int(2), &y);
        let r = l.residue(&x).unwrap();
        assert_eq!(l.residue_field().in_prime_field(&r), Some(2));
    }

    #[test]
    fn nested_extension() {
        let k = TowerSpec::new(2, 1).build().unwrap();
        let l = SimpleExtension::new(k.clone(), &DensePoly::from_ints(&k, &[-2, 0, 1])).unwrap();
        let pi_l = l.uniformizer();
        let t = DensePoly::new(vec![l.neg(&pi_l), l.zero(), l.one()]);
        let m = SimpleExtension::new(l.clone(), &t).unwrap();
        assert_eq!(m.ram_index(), 4);
        assert_eq!(m.valuation(&m.generator()).unwrap(), val(1, 4));
        assert_eq!(m.valuation(&m.uniformizer()).unwrap(), val(1, 4));
    }

    #[test]
    fn lucas() {
        assert_eq!(binomial_mod(4, 4, 2), 1);
        assert_eq!(binomial_mod(6, 2, 2), 1);
        assert_eq!(binomial_mod(9, 9, 3), 1);
        assert_eq!(binomial_mod(4, 2, 2), 0);
    }
}
