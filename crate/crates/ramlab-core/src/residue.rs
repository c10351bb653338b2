//! Finite residue fields F_{p^f} and polynomial factorization over them.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::One;

/// An element of F_{p^f}: coefficients in the power basis of the modulus root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(pub Vec<u64>);

/// Polynomial over F_{p^f}, lowest degree first, no trailing zeros.
pub type FqPoly = Vec<Fq>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    p: u64,
    f: usize,
    modulus: Vec<u64>,
}

impl ResidueField {
    /// F_{p^f} presented by the first monic irreducible of degree f over F_p,
    /// in the order c_0 + c_1 p + ... of its lower coefficients.
    pub fn new(p: u64, f: usize) -> Self {
        assert!(f >= 1);
        assert!((p as u128).checked_pow(f as u32).is_some_and(|q| q < 1 << 62), "residue field too large");
        if f == 1 {
            return ResidueField::prime(p);
        }
        let fp = ResidueField::prime(p);
        let mut counter = vec![0u64; f];
        loop {
            if counter[0] != 0 {
                let mut poly: FqPoly = counter.iter().map(|&c| fp.from_u64(c)).collect();
                poly.push(fp.one());
                if fp.is_irreducible(&poly) {
                    let mut modulus = counter.clone();
                    modulus.push(1);
                    return ResidueField { p, f, modulus };
                }
            }
            let mut i = 0;
            loop {
                counter[i] += 1;
                if counter[i] < p {
                    break;
                }
                counter[i] = 0;
                i += 1;
                assert!(i < f, "no irreducible polynomial found");
            }
        }
    }

    pub fn prime(p: u64) -> Self {
        ResidueField { p, f: 1, modulus: vec![0, 1] }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    /// Monic modulus, lowest coefficient first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.f as u32)
    }

    pub fn zero(&self) -> Fq {
        Fq(vec![0; self.f])
    }

    pub fn one(&self) -> Fq {
        self.from_u64(1)
    }

    pub fn from_u64(&self, a: u64) -> Fq {
        let mut v = vec![0; self.f];
        v[0] = a % self.p;
        Fq(v)
    }

    pub fn from_coeffs(&self, c: &[u64]) -> Fq {
        let mut v = vec![0u64; self.f];
        let mut acc: Vec<u64> = c.iter().map(|&x| x % self.p).collect();
        self.reduce(&mut acc);
        for (i, x) in acc.into_iter().enumerate().take(self.f) {
            v[i] = x;
        }
        Fq(v)
    }

    /// The generator t of the power basis.
    pub fn generator(&self) -> Fq {
        self.from_coeffs(&[0, 1])
    }

    pub fn is_zero(&self, a: &Fq) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self, a: &Fq) -> bool {
        a.0[0] == 1 && a.0[1..].iter().all(|&x| x == 0)
    }

    /// True when the element lies in the prime field.
    pub fn in_prime_field(&self, a: &Fq) -> Option<u64> {
        if a.0[1..].iter().all(|&x| x == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }

    pub fn add(&self, a: &Fq, b: &Fq) -> Fq {
        Fq(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % self.p).collect())
    }

    pub fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        Fq(a.0.iter().zip(&b.0).map(|(x, y)| (x + self.p - y) % self.p).collect())
    }

    pub fn neg(&self, a: &Fq) -> Fq {
        Fq(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }

    pub fn scale(&self, a: &Fq, k: u64) -> Fq {
        let k = k % self.p;
        Fq(a.0.iter().map(|x| mulmod(*x, k, self.p)).collect())
    }

    fn reduce(&self, acc: &mut Vec<u64>) {
        let f = self.f;
        while acc.len() > f {
            let top = acc.pop().unwrap();
            if top == 0 {
                continue;
            }
            let base = acc.len() - f;
            for i in 0..f {
                let m = mulmod(top, self.modulus[i], self.p);
                acc[base + i] = (acc[base + i] + self.p - m) % self.p;
            }
        }
    }

    pub fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        let f = self.f;
        let mut acc = vec![0u64; 2 * f - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                acc[i + j] = (acc[i + j] + mulmod(x, y, self.p)) % self.p;
            }
        }
        self.reduce(&mut acc);
        acc.resize(f, 0);
        Fq(acc)
    }

    pub fn pow(&self, a: &Fq, mut e: u64) -> Fq {
        let mut base = a.clone();
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: &Fq) -> Option<Fq> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.size() - 2))
    }

    /// The unique p-th root; the field is perfect.
    pub fn pth_root(&self, a: &Fq) -> Fq {
        self.pow(a, self.p.pow(self.f as u32 - 1))
    }

    /// The unique (p^k)-th root.
    pub fn p_power_root(&self, a: &Fq, k: u32) -> Fq {
        let mut r = a.clone();
        for _ in 0..k {
            r = self.pth_root(&r);
        }
        r
    }

    /// All elements, for small fields only.
    pub fn elements(&self) -> Vec<Fq> {
        let q = self.size();
        assert!(q <= 1 << 20);
        (0..q)
            .map(|mut n| {
                let mut v = vec![0u64; self.f];
                for c in v.iter_mut() {
                    *c = n % self.p;
                    n /= self.p;
                }
                Fq(v)
            })
            .collect()
    }

    // ---- polynomials ----

    pub fn poly_trim(&self, a: &mut FqPoly) {
        while a.last().is_some_and(|c| self.is_zero(c)) {
            a.pop();
        }
    }

    pub fn poly_deg(&self, a: &FqPoly) -> Option<usize> {
        if a.is_empty() {
            None
        } else {
            Some(a.len() - 1)
        }
    }

    pub fn poly_add(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.len().max(b.len());
        let z = self.zero();
        let mut r: FqPoly = (0..n).map(|i| self.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
        self.poly_trim(&mut r);
        r
    }

    pub fn poly_sub(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.len().max(b.len());
        let z = self.zero();
        let mut r: FqPoly = (0..n).map(|i| self.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
        self.poly_trim(&mut r);
        r
    }

    pub fn poly_mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[i + j] = self.add(&r[i + j], &self.mul(x, y));
            }
        }
        self.poly_trim(&mut r);
        r
    }

    pub fn poly_scale(&self, a: &FqPoly, c: &Fq) -> FqPoly {
        let mut r: FqPoly = a.iter().map(|x| self.mul(x, c)).collect();
        self.poly_trim(&mut r);
        r
    }

    pub fn poly_monic(&self, a: &FqPoly) -> FqPoly {
        match a.last() {
            None => Vec::new(),
            Some(lc) => self.poly_scale(a, &self.inv(lc).unwrap()),
        }
    }

    pub fn poly_divrem(&self, a: &FqPoly, b: &FqPoly) -> (FqPoly, FqPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.clone();
        self.poly_trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let inv_lc = self.inv(b.last().unwrap()).unwrap();
        let mut q = vec![self.zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = self.mul(r.last().unwrap(), &inv_lc);
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] = self.sub(&r[shift + i], &self.mul(&c, bi));
            }
            q[shift] = c;
            self.poly_trim(&mut r);
        }
        self.poly_trim(&mut q);
        (q, r)
    }

    pub fn poly_rem(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        self.poly_divrem(a, b).1
    }

    pub fn poly_gcd(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        self.poly_trim(&mut x);
        self.poly_trim(&mut y);
        while !y.is_empty() {
            let r = self.poly_rem(&x, &y);
            x = y;
            y = r;
        }
        self.poly_monic(&x)
    }

    /// Returns (g, s, t) with s a + t b = g monic.
    pub fn poly_ext_gcd(&self, a: &FqPoly, b: &FqPoly) -> (FqPoly, FqPoly, FqPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![self.one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![self.one()]);
        self.poly_trim(&mut r0);
        self.poly_trim(&mut r1);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let lc_inv = self.inv(r0.last().expect("gcd of zero polynomials")).unwrap();
        (self.poly_scale(&r0, &lc_inv), self.poly_scale(&s0, &lc_inv), self.poly_scale(&t0, &lc_inv))
    }

    pub fn poly_derivative(&self, a: &FqPoly) -> FqPoly {
        let mut r: FqPoly = a.iter().enumerate().skip(1).map(|(i, c)| self.scale(c, i as u64)).collect();
        self.poly_trim(&mut r);
        r
    }

    pub fn poly_eval(&self, a: &FqPoly, x: &Fq) -> Fq {
        a.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    fn poly_powmod(&self, a: &FqPoly, e: &BigUint, m: &FqPoly) -> FqPoly {
        let mut r = vec![self.one()];
        let base = self.poly_rem(a, m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            r = self.poly_rem(&self.poly_mul(&r, &r), m);
            if e.bit(i) {
                r = self.poly_rem(&self.poly_mul(&r, &base), m);
            }
        }
        r
    }

    fn is_const_one(&self, a: &FqPoly) -> bool {
        a.len() == 1 && self.is_one(&a[0])
    }

    pub fn is_irreducible(&self, a: &FqPoly) -> bool {
        let a = self.poly_monic(a);
        let n = match self.poly_deg(&a) {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let q = BigUint::from(self.size());
        let x = vec![self.zero(), self.one()];
        let mut h = x.clone();
        for _ in 0..n / 2 {
            h = self.poly_powmod(&h, &q, &a);
            let g = self.poly_gcd(&a, &self.poly_sub(&h, &x));
            if !self.is_const_one(&g) {
                return false;
            }
        }
        true
    }

    fn poly_pth_root(&self, a: &FqPoly) -> FqPoly {
        let p = self.p as usize;
        let mut r: FqPoly = a.iter().step_by(p).map(|c| self.pth_root(c)).collect();
        self.poly_trim(&mut r);
        r
    }

    /// Square-free decomposition of a monic polynomial: coprime parts with multiplicities.
    pub fn squarefree(&self, a: &FqPoly) -> Vec<(FqPoly, usize)> {
        let mut out = Vec::new();
        let a = self.poly_monic(a);
        if a.len() <= 1 {
            return out;
        }
        let d = self.poly_derivative(&a);
        if d.is_empty() {
            for (h, m) in self.squarefree(&self.poly_pth_root(&a)) {
                out.push((h, m * self.p as usize));
            }
            return out;
        }
        let mut c = self.poly_gcd(&a, &d);
        let mut w = self.poly_divrem(&a, &c).0;
        let mut i = 1;
        while !self.is_const_one(&w) {
            let y = self.poly_gcd(&w, &c);
            let z = self.poly_divrem(&w, &y).0;
            if !self.is_const_one(&z) {
                out.push((self.poly_monic(&z), i));
            }
            i += 1;
            w = y;
            c = self.poly_divrem(&c, &w).0;
        }
        if !self.is_const_one(&c) {
            for (h, m) in self.squarefree(&self.poly_pth_root(&c)) {
                out.push((h, m * self.p as usize));
            }
        }
        out
    }

    fn distinct_degree(&self, a: &FqPoly) -> Vec<(FqPoly, usize)> {
        let mut out = Vec::new();
        let mut f = a.clone();
        let x = vec![self.zero(), self.one()];
        let q = BigUint::from(self.size());
        let mut h = x.clone();
        let mut i = 1;
        while f.len() > 2 * i {
            h = self.poly_powmod(&h, &q, &f);
            let g = self.poly_gcd(&f, &self.poly_sub(&h, &x));
            if !self.is_const_one(&g) {
                f = self.poly_divrem(&f, &g).0;
                h = self.poly_rem(&h, &f);
                out.push((g, i));
            }
            i += 1;
        }
        if f.len() > 1 {
            let d = f.len() - 1;
            out.push((self.poly_monic(&f), d));
        }
        out
    }

    fn equal_degree(&self, a: &FqPoly, d: usize, rng: &mut XorShift) -> Vec<FqPoly> {
        let n = a.len() - 1;
        if n == d {
            return vec![a.clone()];
        }
        loop {
            let r: FqPoly = {
                let mut r: FqPoly = (0..n)
                    .map(|_| {
                        let v: Vec<u64> = (0..self.f).map(|_| rng.next() % self.p).collect();
                        Fq(v)
                    })
                    .collect();
                self.poly_trim(&mut r);
                r
            };
            if r.len() < 2 {
                continue;
            }
            let b = if self.p == 2 {
                let m = self.f * d;
                let mut acc = r.clone();
                let mut t = r.clone();
                for _ in 1..m {
                    t = self.poly_rem(&self.poly_mul(&t, &t), a);
                    acc = self.poly_add(&acc, &t);
                }
                acc
            } else {
                let qd = num_traits::pow(BigUint::from(self.size()), d);
                let e = (qd - BigUint::one()) / BigUint::from(2u32);
                let t = self.poly_powmod(&r, &e, a);
                self.poly_sub(&t, &[self.one()].to_vec())
            };
            let g = self.poly_gcd(a, &b);
            if g.len() > 1 && g.len() < a.len() {
                let h = self.poly_divrem(a, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&self.poly_monic(&h), d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities, sorted.
    pub fn factor(&self, a: &FqPoly) -> Vec<(FqPoly, usize)> {
        let mut rng = XorShift::new(0x9e37_79b9_7f4a_7c15);
        let mut out = Vec::new();
        for (part, m) in self.squarefree(a) {
            for (g, d) in self.distinct_degree(&part) {
                for h in self.equal_degree(&g, d, &mut rng) {
                    out.push((h, m));
                }
            }
        }
        out.sort();
        out
    }

    /// Roots with multiplicity.
    pub fn roots(&self, a: &FqPoly) -> Vec<(Fq, usize)> {
        let mut a = a.clone();
        self.poly_trim(&mut a);
        if a.len() <= 1 {
            return Vec::new();
        }
        self.factor(&a).into_iter().filter(|(g, _)| g.len() == 2).map(|(g, m)| (self.neg(&g[0]), m)).collect()
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Deterministic generator for the randomized splitting step.
struct XorShift(u64);

impl XorShift {
    fn new(seed: u64) -> Self {
        XorShift(seed | 1)
    }

    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(k: &ResidueField, c: &[u64]) -> FqPoly {
        let mut r: FqPoly = c.iter().map(|&x| k.from_u64(x)).collect();
        k.poly_trim(&mut r);
        r
    }

    #[test]
    fn field_axioms_small() {
        let k = ResidueField::new(2, 4);
        assert_eq!(k.size(), 16);
        for a in k.elements() {
            if !k.is_zero(&a) {
                let b = k.inv(&a).unwrap();
                assert!(k.is_one(&k.mul(&a, &b)));
            }
            assert_eq!(k.pth_root(&k.pow(&a, 2)), a);
        }
    }

    #[test]
    fn modulus_is_irreducible() {
        for (p, f) in [(2, 8), (3, 4), (5, 3), (2, 16)] {
            let k = ResidueField::new(p, f);
            let fp = ResidueField::prime(p);
            let m = poly(&fp, k.modulus());
            assert!(fp.is_irreducible(&m));
        }
    }

    #[test]
    fn factor_y4_y4_plus_1() {
        let k = ResidueField::new(2, 8);
        let f = poly(&k, &[0, 0, 0, 0, 1, 0, 0, 0, 1]);
        let fac = k.factor(&f);
        assert_eq!(fac.len(), 2);
        assert!(fac.iter().all(|(g, m)| g.len() == 2 && *m == 4));
    }

    #[test]
    fn roots_of_cubic_over_f4() {
        // X^3 - 1 splits over F_4 into three distinct roots.
        let k = ResidueField::new(2, 2);
        let f = poly(&k, &[1, 0, 0, 1]);
        let r = k.roots(&f);
        assert_eq!(r.len(), 3);
        for (x, m) in r {
            assert_eq!(m, 1);
            assert!(k.is_zero(&k.poly_eval(&f, &x)));
        }
    }

    #[test]
    fn factor_over_odd_prime() {
        let k = ResidueField::new(3, 2);
        // X^4 - 1 = (X-1)(X+1)(X^2+1) over F_3, and X^2+1 splits over F_9.
        let f = poly(&k, &[2, 0, 0, 0, 1]);
        let fac = k.factor(&f);
        assert_eq!(fac.len(), 4);
        let prod = fac.iter().fold(vec![k.one()], |acc, (g, _)| k.poly_mul(&acc, g));
        assert_eq!(prod, f);
    }
}
