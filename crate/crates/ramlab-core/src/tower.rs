//! Finite extensions of Q_p presented as an unramified base followed by
//! totally ramified steps.
//!
//! The base W = Q_p[t]/(g) has g the integer lift of the residue modulus, so
//! its power basis is integral and v_W is the minimum over coordinates. All
//! ramified steps are flattened into one Eisenstein polynomial E over W and an
//! element is a vector of W-coordinates in powers of pi = root of E, scaled by a
//! common p^-d. Radical steps X^m = +-pi^j with gcd(m, j) = 1 flatten by the
//! substitution pi_prev = +-Pi^m, which keeps E Eisenstein.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::ValuedField;
use crate::residue::{Fq, ResidueField};
use crate::val::{ceil, vp_int, Val};

/// Coordinates of an element of W in the basis 1, t, ..., t^(f-1).
type Wc = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamifiedStep {
    /// Monic Eisenstein polynomial over the unramified base, constant term
    /// first, leading 1 included; coefficients are expressions.
    Eisenstein { name: String, coeffs: Vec<String> },
    /// lambda = zeta_p - 1. For p = 2 this adds nothing and binds lambda = -2.
    Cyclotomic { name: String },
    /// X^m = radicand, where the radicand must evaluate to +-pi^j exactly.
    Radical { name: String, m: u32, radicand: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerSpec {
    pub p: u64,
    pub f_ur: usize,
    pub steps: Vec<RamifiedStep>,
}

impl TowerSpec {
    pub fn new(p: u64, f_ur: usize) -> Self {
        TowerSpec { p, f_ur, steps: Vec::new() }
    }

    pub fn radical(mut self, name: &str, m: u32, radicand: &str) -> Self {
        self.steps.push(RamifiedStep::Radical { name: name.to_string(), m, radicand: radicand.to_string() });
        self
    }

    pub fn cyclotomic(mut self, name: &str) -> Self {
        self.steps.push(RamifiedStep::Cyclotomic { name: name.to_string() });
        self
    }

    pub fn eisenstein(mut self, name: &str, coeffs: &[&str]) -> Self {
        self.steps.push(RamifiedStep::Eisenstein {
            name: name.to_string(),
            coeffs: coeffs.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    pub fn build(&self) -> Result<TowerField> {
        TowerField::build(self)
    }
}

/// x = p^-d * sum_i c_i pi^i, known modulo elements of valuation >= prec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerElement {
    d: i64,
    c: Vec<Wc>,
    prec: Option<Val>,
}

impl TowerElement {
    pub fn precision(&self) -> Option<Val> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct TowerField {
    p: u64,
    pb: BigInt,
    residue: ResidueField,
    g: Vec<BigInt>,
    e: usize,
    /// E_0..E_{e-1} of the monic flattened Eisenstein polynomial.
    eis: Vec<Wc>,
    names: Vec<(String, TowerElement)>,
    step_degrees: Vec<usize>,
    default_prec: Val,
}

pub const DEFAULT_PRECISION: i64 = 64;

impl TowerField {
    /// Q_p^(f) with no ramified steps.
    pub fn unramified(p: u64, f_ur: usize) -> Result<Self> {
        TowerSpec::new(p, f_ur).build()
    }

    pub fn build(spec: &TowerSpec) -> Result<Self> {
        if spec.p < 2 || !is_prime(spec.p) {
            return Err(Error::Construction { step: 0, reason: format!("{} is not prime", spec.p) });
        }
        if spec.f_ur == 0 {
            return Err(Error::Construction { step: 0, reason: "f_ur must be at least 1".into() });
        }
        let residue = ResidueField::new(spec.p, spec.f_ur);
        let g = residue.modulus().iter().map(|&c| BigInt::from(c)).collect();
        let pb = BigInt::from(spec.p);
        let mut field = TowerField {
            p: spec.p,
            pb: pb.clone(),
            residue,
            g,
            e: 1,
            eis: vec![vec![-pb]],
            names: Vec::new(),
            step_degrees: Vec::new(),
            default_prec: Val::from_integer(DEFAULT_PRECISION),
        };
        if spec.f_ur > 1 {
            let t = field.exact(0, vec![vec![BigInt::zero(), BigInt::one()]]);
            field.names.push(("t".to_string(), t));
        }
        for (idx, step) in spec.steps.iter().enumerate() {
            field.add_step(idx, step)?;
        }
        Ok(field)
    }

    pub fn with_default_precision(mut self, n: Val) -> Self {
        self.default_prec = n;
        self
    }

    pub fn spec_degree(&self) -> usize {
        self.e * self.residue.degree()
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn f_ur(&self) -> usize {
        self.residue.degree()
    }

    pub fn step_degrees(&self) -> &[usize] {
        &self.step_degrees
    }

    /// Coefficients E_0..E_{e-1} of the flattened Eisenstein polynomial, as
    /// coordinates over W.
    pub fn eisenstein_coeffs(&self) -> Vec<Vec<BigInt>> {
        self.eis.clone()
    }

    pub fn generator(&self, name: &str) -> Option<TowerElement> {
        match name {
            "p" => Some(self.from_int(self.p as i64)),
            "pi" => Some(self.uniformizer()),
            _ => self.names.iter().find(|(n, _)| n == name).map(|(_, x)| x.clone()),
        }
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.names.iter().map(|(n, _)| n.clone()).collect()
    }

    /// Binds a name to an element for later expression parsing.
    pub fn bind(&mut self, name: &str, x: TowerElement) {
        self.names.retain(|(n, _)| n != name);
        self.names.push((name.to_string(), x));
    }

    fn exact(&self, d: i64, c: Vec<Wc>) -> TowerElement {
        self.normalize(TowerElement { d, c, prec: None })
    }

    fn add_step(&mut self, idx: usize, step: &RamifiedStep) -> Result<()> {
        let err = |reason: String| Error::Construction { step: idx, reason };
        match step {
            RamifiedStep::Cyclotomic { name } => {
                if self.p == 2 {
                    let lam = self.from_int(-2);
                    self.bind(name, lam);
                    return Ok(());
                }
                let p = self.p as i64;
                let coeffs: Vec<Wc> = (1..=p).map(|k| vec![binomial(p, k)]).collect();
                self.eisenstein_step(idx, name, coeffs)
            }
            RamifiedStep::Eisenstein { name, coeffs } => {
                if self.e != 1 {
                    return Err(err("Eisenstein steps are only supported over the unramified base".into()));
                }
                let mut ws = Vec::new();
                for s in coeffs {
                    let x = crate::expr::parse_and_eval(self, s).map_err(|e| err(format!("{}", e)))?;
                    if x.prec.is_some() || x.d != 0 {
                        return Err(err(format!("coefficient {} is not an exact integer of the base", s)));
                    }
                    ws.push(x.c.into_iter().next().unwrap_or_default());
                }
                self.eisenstein_step(idx, name, ws)
            }
            RamifiedStep::Radical { name, m, radicand } => {
                let m = *m as usize;
                if m < 2 {
                    return Err(err("radical degree must be at least 2".into()));
                }
                let x = crate::expr::parse_and_eval(self, radicand).map_err(|e| err(format!("{}", e)))?;
                let (sign, j) = self
                    .as_signed_uniformizer_power(&x)
                    .ok_or_else(|| err(format!("radicand {} is not +-pi^j in the field built so far", radicand)))?;
                if j <= 0 {
                    return Err(err(format!("radicand {} must have positive valuation", radicand)));
                }
                if (j as usize).gcd(&m) != 1 {
                    return Err(err(format!(
                        "X^{} = {} is not totally ramified of degree {} (gcd with pi-valuation {})",
                        m, radicand, m, j
                    )));
                }
                // a*j + b*m = 1; Pi = rho^a pi^b satisfies Pi^m = sign^a pi.
                let eg = j.extended_gcd(&(m as i64));
                let (a, b) = (eg.x, eg.y);
                let sa: i64 = if sign < 0 && a.rem_euclid(2) == 1 { -1 } else { 1 };
                let sb: i64 = if sign < 0 && b.rem_euclid(2) == 1 { -1 } else { 1 };
                let e_old = self.e;
                let e_new = e_old * m;
                // E_new(X) = sa^e * E_old(sa X^m), monic.
                let lead = if e_old % 2 == 1 { sa } else { 1 };
                let mut eis = vec![Wc::new(); e_new];
                for (i, ei) in self.eis.iter().enumerate() {
                    let s = lead * if i % 2 == 1 { sa } else { 1 };
                    eis[i * m] = ei.iter().map(|c| c * s).collect();
                }
                let spread = |x: &TowerElement| -> TowerElement {
                    let mut c = vec![Wc::new(); x.c.len().saturating_sub(1) * m + 1];
                    for (i, ci) in x.c.iter().enumerate() {
                        let s = if i % 2 == 1 { sa } else { 1 };
                        c[i * m] = ci.iter().map(|v| v * s).collect();
                    }
                    if x.c.is_empty() {
                        c.clear();
                    }
                    TowerElement { d: x.d, c, prec: x.prec }
                };
                let names: Vec<(String, TowerElement)> =
                    self.names.iter().map(|(n, x)| (n.clone(), spread(x))).collect();
                self.e = e_new;
                self.eis = eis;
                self.names = names.into_iter().map(|(n, x)| (n, self.normalize(x))).collect();
                self.step_degrees.push(m);
                let rho = self.scale_int(&self.uniformizer_pow(j)?, sb);
                self.bind(name, rho);
                Ok(())
            }
        }
    }

    fn eisenstein_step(&mut self, idx: usize, name: &str, coeffs: Vec<Wc>) -> Result<()> {
        let err = |reason: String| Error::Construction { step: idx, reason };
        if self.e != 1 {
            return Err(err("Eisenstein steps are only supported over the unramified base".into()));
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.iter().all(|x| x.is_zero())) {
            coeffs.pop();
        }
        let m = coeffs.len().saturating_sub(1);
        if m < 2 {
            return Err(err("Eisenstein degree must be at least 2".into()));
        }
        let lead = &coeffs[m];
        if !(lead.len() == 1 && lead[0].is_one()) {
            return Err(err("Eisenstein polynomial must be monic".into()));
        }
        for (i, c) in coeffs[..m].iter().enumerate() {
            let v = self.vp_w(c);
            if v.is_some_and(|v| v < 1) {
                return Err(err(format!("coefficient of X^{} is not divisible by p", i)));
            }
            if i == 0 && v != Some(1) {
                return Err(err("constant term must have valuation exactly 1".into()));
            }
        }
        coeffs.truncate(m);
        self.e = m;
        self.eis = coeffs.into_iter().map(|c| self.w_trim(c)).collect();
        self.step_degrees.push(m);
        let pi = self.uniformizer();
        self.bind(name, pi);
        Ok(())
    }

    /// Detects x = sign * pi^j exactly.
    pub fn as_signed_uniformizer_power(&self, x: &TowerElement) -> Option<(i64, i64)> {
        if x.prec.is_some() {
            return None;
        }
        let v = self.valuation(x).ok()?;
        let j = v * Val::from_integer(self.e as i64);
        if !j.is_integer() {
            return None;
        }
        let j = j.to_integer();
        let pj = self.uniformizer_pow(j).ok()?;
        if pj.prec.is_some() {
            return None;
        }
        let diff = self.sub(x, &pj);
        if diff.prec.is_none() && diff.c.is_empty() {
            return Some((1, j));
        }
        let sum = self.add(x, &pj);
        if sum.prec.is_none() && sum.c.is_empty() {
            return Some((-1, j));
        }
        None
    }

    // ---- W arithmetic ----

    fn w_trim(&self, mut a: Wc) -> Wc {
        while a.last().is_some_and(|x| x.is_zero()) {
            a.pop();
        }
        a
    }

    fn w_add(&self, a: &Wc, b: &Wc) -> Wc {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        let r = (0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect();
        self.w_trim(r)
    }

    fn w_mul(&self, a: &Wc, b: &Wc) -> Wc {
        if a.is_empty() || b.is_empty() {
            return Wc::new();
        }
        let f = self.residue.degree();
        let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[i + j] += x * y;
            }
        }
        while r.len() > f {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = r.len() - f;
            for i in 0..f {
                if !self.g[i].is_zero() {
                    r[base + i] -= &top * &self.g[i];
                }
            }
        }
        self.w_trim(r)
    }

    fn w_scale(&self, a: &Wc, k: &BigInt) -> Wc {
        self.w_trim(a.iter().map(|x| x * k).collect())
    }

    fn vp_w(&self, a: &Wc) -> Option<i64> {
        a.iter().filter(|x| !x.is_zero()).map(|x| vp_int(x, self.p)).min()
    }

    fn p_pow(&self, k: i64) -> BigInt {
        num_traits::pow(self.pb.clone(), k as usize)
    }

    // ---- normalization ----

    /// Reduce coordinates modulo what the precision can distinguish, then
    /// strip common factors of p from the denominator.
    fn normalize(&self, mut x: TowerElement) -> TowerElement {
        if let Some(n) = x.prec {
            let e = self.e as i64;
            for (i, ci) in x.c.iter_mut().enumerate() {
                let k = ceil(n - Val::new(i as i64, e)) + x.d;
                if k <= 0 {
                    ci.clear();
                    continue;
                }
                let m = self.p_pow(k);
                for v in ci.iter_mut() {
                    *v = v.mod_floor(&m);
                }
            }
        }
        for ci in x.c.iter_mut() {
            while ci.last().is_some_and(|v| v.is_zero()) {
                ci.pop();
            }
        }
        while x.c.last().is_some_and(|ci| ci.is_empty()) {
            x.c.pop();
        }
        if x.c.is_empty() {
            x.d = 0;
            return x;
        }
        while x.d > 0 && x.c.iter().all(|ci| ci.iter().all(|v| v.is_zero() || v.is_multiple_of(&self.pb))) {
            for ci in x.c.iter_mut() {
                for v in ci.iter_mut() {
                    *v = &*v / &self.pb;
                }
            }
            x.d -= 1;
        }
        x
    }

    fn align(&self, a: &TowerElement, d: i64) -> Vec<Wc> {
        if a.d == d {
            return a.c.clone();
        }
        let s = self.p_pow(d - a.d);
        a.c.iter().map(|ci| self.w_scale(ci, &s)).collect()
    }

    fn term_vals<'a>(&'a self, x: &'a TowerElement) -> impl Iterator<Item = Val> + 'a {
        let e = self.e as i64;
        let d = x.d;
        x.c.iter()
            .enumerate()
            .filter_map(move |(i, ci)| self.vp_w(ci).map(|v| Val::from_integer(v - d) + Val::new(i as i64, e)))
    }

    fn exact_zero(&self) -> TowerElement {
        TowerElement { d: 0, c: Vec::new(), prec: None }
    }

    /// Multiply by p^k exactly (k may be negative).
    pub fn mul_p_pow(&self, x: &TowerElement, k: i64) -> TowerElement {
        let kv = Val::from_integer(k);
        let y = if k >= 0 {
            let s = self.p_pow(k);
            TowerElement {
                d: x.d,
                c: x.c.iter().map(|ci| self.w_scale(ci, &s)).collect(),
                prec: x.prec.map(|n| n + kv),
            }
        } else {
            TowerElement { d: x.d - k, c: x.c.clone(), prec: x.prec.map(|n| n + kv) }
        };
        self.normalize(y)
    }

    /// Coordinates over W of the element times p^d, for inspection.
    pub fn coordinates(&self, x: &TowerElement) -> (i64, Vec<Vec<BigInt>>) {
        (x.d, x.c.clone())
    }

    /// The element as a rational number, when it lies in Q exactly.
    pub fn as_rational(&self, x: &TowerElement) -> Option<BigRational> {
        if x.prec.is_some() {
            return None;
        }
        match x.c.len() {
            0 => Some(BigRational::zero()),
            1 if x.c[0].len() <= 1 => {
                let n = x.c[0].first().cloned().unwrap_or_default();
                Some(BigRational::new(n, self.p_pow(x.d)))
            }
            _ => None,
        }
    }

    fn unit_inverse(&self, u: &TowerElement, n: Val) -> Result<TowerElement> {
        let r = self.residue(u)?;
        let rinv = self.residue.inv(&r).ok_or_else(|| Error::precision("unit with vanishing residue"))?;
        if u.prec.is_none() && u.c.len() == 1 && u.d == 0 && u.c[0].len() == 1 && u.c[0][0].abs().is_one() {
            return Ok(u.clone());
        }
        let two = self.from_int(2);
        let mut x = self.truncate(&self.lift(&rinv), n);
        let mut reached = Val::from_integer(0);
        for _ in 0..200 {
            let ux = self.truncate(&self.mul(u, &x), n);
            let err = self.sub(&self.one(), &ux);
            match self.valuation(&err) {
                Err(_) => return Ok(self.truncate(&x, n)),
                Ok(v) if v >= n => return Ok(self.truncate(&x, n)),
                Ok(v) => {
                    if v <= reached {
                        return Err(Error::precision("unit inverse iteration stalled"));
                    }
                    reached = v;
                }
            }
            x = self.truncate(&self.mul(&x, &self.sub(&two, &ux)), n);
        }
        Err(Error::precision("unit inverse did not converge"))
    }

    /// Lift of the Frobenius-invariant residue basis element t.
    pub fn residue_generator(&self) -> TowerElement {
        self.lift(&self.residue.generator())
    }
}

impl ValuedField for TowerField {
    type Elem = TowerElement;

    fn p(&self) -> u64 {
        self.p
    }

    fn ram_index(&self) -> i64 {
        self.e as i64
    }

    fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    fn default_precision(&self) -> Val {
        self.default_prec
    }

    fn zero(&self) -> TowerElement {
        self.exact_zero()
    }

    fn one(&self) -> TowerElement {
        self.from_int(1)
    }

    fn from_bigint(&self, n: &BigInt) -> TowerElement {
        self.exact(0, vec![vec![n.clone()]])
    }

    /// Exact when the denominator is a power of p; otherwise the p-adic unit
    /// part of the denominator is inverted to the default precision.
    fn from_rational(&self, r: &BigRational) -> TowerElement {
        if r.is_zero() {
            return self.zero();
        }
        let mut den = r.denom().clone();
        let mut d = 0i64;
        while den.is_multiple_of(&self.pb) {
            den /= &self.pb;
            d += 1;
        }
        if den.is_one() {
            return self.exact(d, vec![vec![r.numer().clone()]]);
        }
        let n = self.default_prec;
        let k = ceil(n) + d;
        let m = self.p_pow(k.max(1));
        let inv = den.mod_floor(&m).modinv(&m).expect("unit denominator");
        let num = (r.numer() * inv).mod_floor(&m);
        self.normalize(TowerElement { d, c: vec![vec![num]], prec: Some(n) })
    }

    fn add(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        let d = a.d.max(b.d);
        let ca = self.align(a, d);
        let cb = self.align(b, d);
        let n = ca.len().max(cb.len());
        let empty = Wc::new();
        let c = (0..n).map(|i| self.w_add(ca.get(i).unwrap_or(&empty), cb.get(i).unwrap_or(&empty))).collect();
        let prec = crate::val::min_opt(a.prec, b.prec);
        self.normalize(TowerElement { d, c, prec })
    }

    fn neg(&self, a: &TowerElement) -> TowerElement {
        let c = a.c.iter().map(|ci| ci.iter().map(|v| -v).collect()).collect();
        self.normalize(TowerElement { d: a.d, c, prec: a.prec })
    }

    fn sub(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        let prec = match (a.prec, b.prec) {
            (None, None) => None,
            _ => {
                if (a.prec.is_none() && a.c.is_empty()) || (b.prec.is_none() && b.c.is_empty()) {
                    return self.exact_zero();
                }
                let va = self.valuation_lower_bound(a);
                let vb = self.valuation_lower_bound(b);
                let x = a.prec.zip(vb).map(|(n, v)| n + v);
                let y = b.prec.zip(va).map(|(n, v)| n + v);
                crate::val::min_opt(x, y)
            }
        };
        if a.c.is_empty() || b.c.is_empty() {
            return self.normalize(TowerElement { d: 0, c: Vec::new(), prec });
        }
        let e = self.e;
        let mut r = vec![Wc::new(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_empty() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if y.is_empty() {
                    continue;
                }
                let t = self.w_mul(x, y);
                r[i + j] = self.w_add(&r[i + j], &t);
            }
        }
        while r.len() > e {
            let top = r.pop().unwrap();
            if top.is_empty() {
                continue;
            }
            let base = r.len() - e;
            for i in 0..e {
                if self.eis[i].is_empty() {
                    continue;
                }
                let t = self.w_mul(&top, &self.eis[i]);
                r[base + i] = self.w_add(&r[base + i], &t.iter().map(|v| -v).collect());
            }
        }
        self.normalize(TowerElement { d: a.d + b.d, c: r, prec })
    }

    fn inv(&self, a: &TowerElement) -> Result<TowerElement> {
        let v = self.valuation(a)?;
        let e = self.e as i64;
        let k = (v * Val::from_integer(e)).to_integer();
        let qd = ceil(v);
        let m = qd * e - k;
        let pim = self.uniformizer_pow(m)?;
        let u = self.mul_p_pow(&self.mul(a, &pim), -qd);
        let nu = match a.prec {
            Some(n) => n - v,
            None => self.default_prec + v,
        };
        if nu <= Val::from_integer(0) {
            return Err(Error::precision(format!("inverting an element of valuation {} known to {:?}", v, a.prec)));
        }
        let w = self.unit_inverse(&u, nu)?;
        Ok(self.mul_p_pow(&self.mul(&w, &pim), -qd))
    }

    fn valuation(&self, a: &TowerElement) -> Result<Val> {
        self.term_vals(a).min().ok_or(Error::ZeroAtPrecision { precision: a.prec })
    }

    fn precision(&self, a: &TowerElement) -> Option<Val> {
        a.prec
    }

    fn is_zero(&self, a: &TowerElement) -> bool {
        a.c.is_empty()
    }

    fn truncate(&self, a: &TowerElement, n: Val) -> TowerElement {
        let prec = Some(match a.prec {
            Some(m) if m < n => m,
            _ => n,
        });
        self.normalize(TowerElement { d: a.d, c: a.c.clone(), prec })
    }

    fn residue(&self, a: &TowerElement) -> Result<Fq> {
        if let Some(n) = a.prec {
            if n <= Val::from_integer(0) {
                return Err(Error::precision("residue of an element known only to precision <= 0"));
            }
        }
        if a.c.is_empty() {
            return Ok(self.residue.zero());
        }
        let v = self.valuation(a)?;
        if v < Val::from_integer(0) {
            return Err(Error::NegativeValuation(v));
        }
        if self.vp_w(&a.c[0]).is_none_or(|w| w > a.d) {
            return Ok(self.residue.zero());
        }
        let pd = self.p_pow(a.d);
        let c0: Vec<u64> = a.c[0].iter().map(|x| (x / &pd).mod_floor(&self.pb).to_u64().unwrap()).collect();
        Ok(self.residue.from_coeffs(&c0))
    }

    fn lift(&self, r: &Fq) -> TowerElement {
        let c: Wc = r.0.iter().map(|&x| BigInt::from(x)).collect();
        self.exact(0, vec![c])
    }

    fn uniformizer(&self) -> TowerElement {
        if self.e == 1 {
            self.from_int(self.p as i64)
        } else {
            self.exact(0, vec![Wc::new(), vec![BigInt::one()]])
        }
    }

    fn uniformizer_pow(&self, k: i64) -> Result<TowerElement> {
        if k >= 0 {
            Ok(self.pow(&self.uniformizer(), k as u64))
        } else {
            self.inv(&self.pow(&self.uniformizer(), k.unsigned_abs()))
        }
    }
}

fn binomial(n: i64, k: i64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::val::val;

    #[test]
    fn base_case() {
        let k = TowerSpec::new(2, 1).build().unwrap();
        assert_eq!(k.e(), 1);
        assert_eq!(k.valuation(&k.uniformizer()).unwrap(), val(1, 1));
    }

    #[test]
    fn radical_fifteenth_root_of_two() {
        let k = TowerSpec::new(2, 8).radical("r", 15, "p").build().unwrap();
        assert_eq!(k.e(), 15);
        assert_eq!(k.valuation(&k.uniformizer()).unwrap(), val(1, 15));
        let two = k.from_int(2);
        assert!(k.equal(&k.uniformizer_pow(15).unwrap(), &two));
    }

    #[test]
    fn cyclotomic_then_radical() {
        let k = TowerSpec::new(3, 2).cyclotomic("lambda").radical("mu", 4, "lambda").build().unwrap();
        assert_eq!(k.e(), 8);
        let lam = k.generator("lambda").unwrap();
        assert_eq!(k.valuation(&lam).unwrap(), val(1, 2));
        // (1 + lambda)^3 = 1
        let z = k.add(&k.one(), &lam);
        assert!(k.equal(&k.pow(&z, 3), &k.one()));
        let mu = k.generator("mu").unwrap();
        assert!(k.equal(&k.pow(&mu, 4), &lam));
    }

    #[test]
    fn negative_radicand() {
        // p = 2: lambda = -2 and X^3 = lambda.
        let k = TowerSpec::new(2, 1).cyclotomic("lambda").radical("r", 3, "lambda").build().unwrap();
        let r = k.generator("r").unwrap();
        assert!(k.equal(&k.pow(&r, 3), &k.from_int(-2)));
    }

    #[test]
    fn rejects_non_totally_ramified() {
        let k = TowerSpec::new(2, 1).radical("r", 3, "p").radical("s", 3, "p").build();
        assert!(matches!(k, Err(Error::Construction { step: 1, .. })));
        let k = TowerSpec::new(2, 1).eisenstein("x", &["2", "1", "1"]).build();
        assert!(matches!(k, Err(Error::Construction { step: 0, .. })));
    }

    #[test]
    fn inverse_round_trip() {
        let k = TowerSpec::new(2, 4).radical("r", 5, "p").build().unwrap();
        let t = k.residue_generator();
        let x = k.add(&k.mul(&t, &k.uniformizer_pow(3).unwrap()), &k.uniformizer_pow(7).unwrap());
        let y = k.inv(&x).unwrap();
        assert_eq!(k.valuation(&y).unwrap(), val(-3, 5));
        let one = k.mul(&x, &y);
        assert!(k.equal(&one, &k.one()));
        assert!(k.precision(&one).unwrap() >= val(63, 1));
    }

    #[test]
    fn rational_constants() {
        let k = TowerField::unramified(3, 1).unwrap();
        let x = k.from_rational(&BigRational::new(BigInt::from(5), BigInt::from(18)));
        assert_eq!(k.valuation(&x).unwrap(), val(-2, 1));
        let y = k.mul(&x, &k.from_int(18));
        assert!(k.equal(&y, &k.from_int(5)));
    }

    #[test]
    fn residue_images() {
        let k = TowerSpec::new(2, 1).build().unwrap();
        let x = k.from_int(5);
        assert!(k.residue_field().is_one(&k.residue(&x).unwrap()));
        let half = k.from_rational(&BigRational::new(BigInt::one(), BigInt::from(2)));
        assert!(matches!(k.residue(&half), Err(Error::NegativeValuation(_))));
    }
}
