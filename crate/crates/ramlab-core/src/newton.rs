//! Newton polygons, residual polynomials, factor lifting, root search and
//! irreducibility certificates over a valued field.
//!
//! Segments record the valuation of the roots they account for, the negative
//! of the hull slope.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::ValuedField;
use crate::linalg::{charpoly_mod, inverse_mod};
use crate::poly::DensePoly;
use crate::residue::FqPoly;
use crate::val::Val;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    /// Common valuation of the roots accounted for by this segment.
    pub root_valuation: Val,
}

impl Segment {
    pub fn length(&self) -> usize {
        self.end - self.start
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(usize, Val)>,
    /// Ordered by index, hence by decreasing root valuation.
    pub segments: Vec<Segment>,
    /// Multiplicity of the exact root 0.
    pub zero_roots: usize,
    pub degree: usize,
}

impl NewtonPolygon {
    /// Root valuations with multiplicities, largest first.
    pub fn root_valuations(&self) -> Vec<(Val, usize)> {
        self.segments.iter().map(|s| (s.root_valuation, s.length())).collect()
    }

    pub fn is_single_segment(&self) -> bool {
        self.segments.len() == 1
    }

    /// The full multiset of root valuations, one entry per nonzero root.
    pub fn root_multiset(&self) -> Vec<Val> {
        self.segments.iter().flat_map(|s| core::iter::repeat_n(s.root_valuation, s.length())).collect()
    }
}

/// Residual polynomial of a segment in Z = x^b / pi^a, where a/b is the root
/// valuation in uniformizer units, in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub poly: FqPoly,
    pub numerator: i64,
    pub denominator: i64,
}

pub fn newton_polygon<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>) -> Result<NewtonPolygon> {
    let f = f.clone().trim(k);
    let n = f.degree().ok_or_else(|| Error::invalid("Newton polygon of the zero polynomial"))?;
    let mut z = 0;
    while z < n && k.is_zero(&f.coeffs[z]) {
        if k.precision(&f.coeffs[z]).is_some() {
            return Err(Error::precision(format!(
                "coefficient of X^{} is indistinguishable from 0, so the multiplicity of the root 0 is undecided",
                z
            )));
        }
        z += 1;
    }
    let pts: Vec<(usize, Val)> = (z..=n).filter_map(|i| k.valuation(&f.coeffs[i]).ok().map(|v| (i, v))).collect();
    let mut hull: Vec<(usize, Val)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = Val::from_integer((a.0 - o.0) as i64) * (pt.1 - o.1)
                - (a.1 - o.1) * Val::from_integer((pt.0 - o.0) as i64);
            if cross <= Val::from_integer(0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let hull_at = |i: usize| -> Val {
        let w = hull.windows(2).find(|w| w[0].0 <= i && i <= w[1].0).unwrap();
        let t = Val::new((i - w[0].0) as i64, (w[1].0 - w[0].0) as i64);
        w[0].1 + (w[1].1 - w[0].1) * t
    };
    if hull.len() >= 2 {
        for i in z..=n {
            let c = &f.coeffs[i];
            if k.is_zero(c) {
                if let Some(prec) = k.precision(c) {
                    if prec < hull_at(i) {
                        return Err(Error::precision(format!(
                            "coefficient of X^{} is known only to {} but could lie below the polygon",
                            i, prec
                        )));
                    }
                }
            }
        }
    }
    let segments = hull
        .windows(2)
        .map(|w| Segment {
            start: w[0].0,
            end: w[1].0,
            root_valuation: -(w[1].1 - w[0].1) / Val::from_integer((w[1].0 - w[0].0) as i64),
        })
        .collect();
    Ok(NewtonPolygon { vertices: hull, segments, zero_roots: z, degree: n })
}

pub fn residual_polynomial<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>, seg: &Segment) -> Result<Residual> {
    let e = Val::from_integer(k.ram_index());
    let r = seg.root_valuation * e;
    let (a, b) = (*r.numer(), *r.denom());
    let rf = k.residue_field();
    let v0 = k.valuation(&f.coeffs[seg.start])? * e;
    let v0 = v0.to_integer();
    let len = seg.length() as i64 / b;
    let mut poly = Vec::with_capacity(len as usize + 1);
    for j in 0..=len {
        let i = seg.start + (b * j) as usize;
        let vj = v0 - j * a;
        let c = &f.coeffs[i];
        let on = k.valuation(c).is_ok_and(|v| v * e == Val::from_integer(vj));
        if on {
            let scaled = k.mul(c, &k.uniformizer_pow(-vj)?);
            poly.push(k.residue(&scaled)?);
        } else {
            poly.push(rf.zero());
        }
    }
    rf.poly_trim(&mut poly);
    Ok(Residual { poly, numerator: a, denominator: b })
}

fn target_precision<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>) -> Val {
    match f.precision(k) {
        Some(n) if n < k.default_precision() => n,
        _ => k.default_precision(),
    }
}

/// Newton iteration for a factor: given a monic approximate factor g0 of f,
/// repeatedly replaces g by g + (r * h^-1 mod g) where f = g h + r.
pub fn lift_factor<F: ValuedField>(
    k: &F,
    f: &DensePoly<F::Elem>,
    g0: &DensePoly<F::Elem>,
) -> Result<DensePoly<F::Elem>> {
    let target = target_precision(k, f);
    let mut g = g0.clone();
    let mut best: Option<Val> = None;
    let mut stalls = 0;
    for _ in 0..128 {
        let (h, r) = f.divrem(k, &g)?;
        let vr = r.gauss_valuation(k);
        let s = inverse_mod(k, &g, &h)?;
        let loss = s.gauss_valuation(k).unwrap_or(Val::from_integer(0)).min(Val::from_integer(0));
        match vr {
            None => {
                let bound = r.precision(k).unwrap_or(target) + loss;
                return Ok(g.truncate_all(k, bound.min(target)));
            }
            Some(v) if v + loss >= target => return Ok(g.truncate_all(k, target)),
            Some(v) => {
                if best.is_some_and(|b| v <= b) {
                    stalls += 1;
                    if stalls > 3 {
                        return Err(Error::CannotSplit(format!("factor lifting stalled at remainder valuation {}", v)));
                    }
                } else {
                    best = Some(v);
                    stalls = 0;
                }
            }
        }
        let delta = r.mul(k, &s).divrem(k, &g)?.1;
        g = g.add(k, &delta).truncate_all(k, target);
    }
    Err(Error::CannotSplit("factor lifting did not converge".into()))
}

/// Splits f along Newton polygon slopes and coprime residual factors, as far
/// as those allow. Errors with `CannotSplit` when no split exists.
pub fn hensel_split<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>) -> Result<Vec<DensePoly<F::Elem>>> {
    let parts = split_rec(k, &f.clone().trim(k))?;
    if parts.len() < 2 {
        return Err(Error::CannotSplit(String::from(
            "single slope with a residual polynomial that is a power of one irreducible",
        )));
    }
    Ok(parts)
}

fn split_rec<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>) -> Result<Vec<DensePoly<F::Elem>>> {
    let n = match f.degree() {
        None => return Err(Error::invalid("cannot split the zero polynomial")),
        Some(n) => n,
    };
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let poly = newton_polygon(k, f)?;
    if poly.zero_roots > 0 {
        let z = poly.zero_roots;
        let mut xz = vec![k.zero(); z];
        xz.push(k.one());
        let rest = DensePoly::new(f.coeffs[z..].to_vec());
        let mut out = vec![DensePoly::new(xz)];
        if rest.degree().is_some_and(|d| d > 0) {
            out.extend(split_rec(k, &rest)?);
        } else {
            out[0] = out[0].scale(k, &rest.coeffs[0]);
        }
        return Ok(out);
    }
    if poly.segments.len() >= 2 {
        let m = poly.segments[0].end;
        let g0 = DensePoly::new(f.coeffs[..=m].to_vec()).monic(k)?;
        let g = lift_factor(k, f, &g0)?;
        let h = f.divrem(k, &g)?.0;
        let mut out = split_rec(k, &g)?;
        out.extend(split_rec(k, &h)?);
        return Ok(out);
    }
    let seg = &poly.segments[0];
    let res = residual_polynomial(k, f, seg)?;
    let rf = k.residue_field();
    let factors = rf.factor(&res.poly);
    if factors.len() < 2 {
        return Ok(vec![f.clone()]);
    }
    let mut rest = f.clone();
    let mut out = Vec::new();
    for (phi, m) in &factors[..factors.len() - 1] {
        let mut part = vec![rf.one()];
        for _ in 0..*m {
            part = rf.poly_mul(&part, phi);
        }
        let g0 = approx_factor(k, &part, res.numerator, res.denominator)?;
        let g = lift_factor(k, &rest, &g0)?;
        rest = rest.divrem(k, &g)?.0;
        out.push(g);
    }
    out.push(rest);
    Ok(out)
}

/// pi^(a d) * part(X^b / pi^a) for a monic residual factor `part` of degree d.
fn approx_factor<F: ValuedField>(k: &F, part: &FqPoly, a: i64, b: i64) -> Result<DensePoly<F::Elem>> {
    let d = (part.len() - 1) as i64;
    let mut c = vec![k.zero(); (b * d) as usize + 1];
    for (j, pj) in part.iter().enumerate() {
        let j = j as i64;
        c[(b * j) as usize] = k.mul(&k.lift(pj), &k.uniformizer_pow(a * (d - j))?);
    }
    Ok(DensePoly::new(c))
}

/// Roots of f lying in the field, with multiplicities, refined to the
/// working precision.
pub fn roots_in_field<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>) -> Result<Vec<(F::Elem, usize)>> {
    let f = f.clone().trim(k);
    let depth_cap = (k.default_precision() * Val::from_integer(k.ram_index())).to_integer() as usize + 8;
    roots_rec(k, &f, None, 0, depth_cap)
}

fn roots_rec<F: ValuedField>(
    k: &F,
    f: &DensePoly<F::Elem>,
    above: Option<Val>,
    depth: usize,
    cap: usize,
) -> Result<Vec<(F::Elem, usize)>> {
    let n = match f.degree() {
        None => return Err(Error::invalid("roots of the zero polynomial")),
        Some(n) => n,
    };
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let poly = match newton_polygon(k, f) {
        Ok(p) => p,
        Err(e) if e.is_precision() && above.is_some() => {
            return Err(Error::InconclusiveRootSearch(format!(
                "root cluster not separated at working precision: {}",
                e
            )))
        }
        Err(e) => return Err(e),
    };
    if poly.zero_roots > 0 {
        out.push((k.zero(), poly.zero_roots));
    }
    let rf = k.residue_field();
    for seg in &poly.segments {
        if above.is_some_and(|m| seg.root_valuation <= m) {
            continue;
        }
        let res = residual_polynomial(k, f, seg)?;
        if res.denominator != 1 {
            continue;
        }
        for (phi, mult) in rf.factor(&res.poly) {
            if phi.len() != 2 {
                continue;
            }
            let zeta = rf.neg(&phi[0]);
            let x0 = k.mul(&k.lift(&zeta), &k.uniformizer_pow(res.numerator)?);
            if mult == 1 {
                if let Some(x) = newton_root(k, f, &x0)? {
                    out.push((x, 1));
                    continue;
                }
            }
            if depth >= cap {
                return Err(Error::InconclusiveRootSearch("refinement depth exhausted".into()));
            }
            let f1 = f.shift(k, &x0);
            let v0 = k.valuation(&x0)?;
            for (s, m) in roots_rec(k, &f1, Some(v0), depth + 1, cap)? {
                out.push((k.add(&x0, &s), m));
            }
        }
    }
    Ok(out)
}

/// Newton's method from x0 when v(f(x0)) > 2 v(f'(x0)); `None` otherwise.
pub fn newton_root<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>, x0: &F::Elem) -> Result<Option<F::Elem>> {
    let df = f.derivative(k);
    let fx = f.eval(k, x0);
    let dfx = df.eval(k, x0);
    let vd = match k.valuation(&dfx) {
        Ok(v) => v,
        Err(_) => return Ok(None),
    };
    let vf = match k.valuation(&fx) {
        Ok(v) => v,
        Err(_) => return Ok(Some(x0.clone())),
    };
    if vf <= vd * Val::from_integer(2) {
        return Ok(None);
    }
    let target = target_precision(k, f);
    let mut x = x0.clone();
    for _ in 0..128 {
        let fx = f.eval(k, &x);
        if k.is_zero(&fx) {
            return Ok(Some(x));
        }
        let dfx = df.eval(k, &x);
        let delta = k.div(&fx, &dfx)?;
        match k.valuation(&delta) {
            Err(_) => return Ok(Some(x)),
            Ok(v) if v >= target => return Ok(Some(x)),
            Ok(_) => {}
        }
        x = k.truncate(&k.sub(&x, &delta), target);
    }
    Err(Error::InconclusiveRootSearch("Newton iteration did not converge".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible,
    Reducible,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertReason {
    SingleSlopeDenominator,
    ResidualIrreducible,
    HenselSplit,
    /// Some polynomial phi takes values whose valuation has denominator deg f
    /// (in uniformizer units) at every root, so each root generates an
    /// extension of ramification index deg f.
    KeyPolynomialDenominator,
    None,
}

#[derive(Clone, Debug)]
pub enum Witness<E> {
    Slope { root_valuation: Val, denominator: i64 },
    Factors(Vec<DensePoly<E>>),
    Residual { poly: FqPoly, denominator: i64 },
    KeyPolynomial { phi: DensePoly<E>, valuation: Val, denominator: i64, steps: usize },
    None(String),
}

#[derive(Clone, Debug)]
pub struct IrreducibilityCertificate<E> {
    pub verdict: Verdict,
    pub reason: CertReason,
    pub witness: Witness<E>,
}

impl<E> IrreducibilityCertificate<E> {
    fn inconclusive(note: impl Into<String>) -> Self {
        IrreducibilityCertificate {
            verdict: Verdict::Inconclusive,
            reason: CertReason::None,
            witness: Witness::None(note.into()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    /// Accept an irreducible residual polynomial as proof. Sound over the
    /// finite residue field in use, but not over its algebraic closure.
    pub allow_residual_irreducible: bool,
    pub max_key_steps: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { allow_residual_irreducible: false, max_key_steps: 24 }
    }
}

pub fn certify_irreducible<F: ValuedField>(
    k: &F,
    f: &DensePoly<F::Elem>,
    opts: &CertifyOptions,
) -> Result<IrreducibilityCertificate<F::Elem>> {
    let f = f.clone().trim(k);
    let n = f.degree().ok_or_else(|| Error::invalid("zero polynomial"))?;
    if n == 0 {
        return Err(Error::invalid("constant polynomial"));
    }
    let e = Val::from_integer(k.ram_index());
    let poly = newton_polygon(k, &f)?;
    let split = |note: &str| -> Result<IrreducibilityCertificate<F::Elem>> {
        match hensel_split(k, &f) {
            Ok(parts) => Ok(IrreducibilityCertificate {
                verdict: Verdict::Reducible,
                reason: CertReason::HenselSplit,
                witness: Witness::Factors(parts),
            }),
            Err(err) if err.is_precision() => Err(err),
            Err(_) => Ok(IrreducibilityCertificate::inconclusive(note)),
        }
    };
    if n == 1 {
        let rv = poly.segments.first().map(|s| s.root_valuation).unwrap_or(Val::from_integer(0));
        return Ok(IrreducibilityCertificate {
            verdict: Verdict::Irreducible,
            reason: CertReason::SingleSlopeDenominator,
            witness: Witness::Slope { root_valuation: rv, denominator: 1 },
        });
    }
    if poly.zero_roots > 0 || poly.segments.len() > 1 {
        return split("polygon has several slopes but lifting failed");
    }
    let seg = &poly.segments[0];
    let b = *(seg.root_valuation * e).denom();
    if b as usize == n {
        return Ok(IrreducibilityCertificate {
            verdict: Verdict::Irreducible,
            reason: CertReason::SingleSlopeDenominator,
            witness: Witness::Slope { root_valuation: seg.root_valuation, denominator: b },
        });
    }
    let rf = k.residue_field();
    let res = residual_polynomial(k, &f, seg)?;
    let facs = rf.factor(&res.poly);
    if facs.len() > 1 {
        return split("residual polynomial has coprime factors but lifting failed");
    }
    let (psi, m) = facs[0].clone();
    if opts.allow_residual_irreducible && m == 1 && (psi.len() - 1) * b as usize == n {
        return Ok(IrreducibilityCertificate {
            verdict: Verdict::Irreducible,
            reason: CertReason::ResidualIrreducible,
            witness: Witness::Residual { poly: res.poly, denominator: b },
        });
    }
    let fm = f.monic(k)?;
    let prec = fm.precision(k).unwrap_or_else(|| k.default_precision());
    let reduce =
        |g: DensePoly<F::Elem>| -> Result<DensePoly<F::Elem>> { Ok(g.divrem(k, &fm)?.1.truncate_all(k, prec)) };
    // Earlier key polynomials with their value and relative ramification.
    let mut keys: Vec<(DensePoly<F::Elem>, Val, i64)> = Vec::new();
    let mut group = k.ram_index();
    let mut f_lb = 1i64;
    let mut phi = DensePoly::x(k);
    for step in 1..=opts.max_key_steps {
        let chi = charpoly_mod(k, &fm, &phi)?;
        let cp = match newton_polygon(k, &chi) {
            Ok(p) => p,
            Err(err) if err.is_precision() => {
                return Ok(IrreducibilityCertificate::inconclusive(format!(
                    "key polynomial step {} exhausted precision",
                    step
                )))
            }
            Err(err) => return Err(err),
        };
        if cp.zero_roots > 0 || cp.segments.len() > 1 {
            return split("key polynomial separates roots but lifting failed");
        }
        let w = cp.segments[0].root_valuation;
        let g2 = crate::val::lcm_i64(group, *w.denom());
        let b = g2 / group;
        group = g2;
        let e_lb = group / k.ram_index();
        if e_lb as usize >= n {
            return Ok(IrreducibilityCertificate {
                verdict: Verdict::Irreducible,
                reason: CertReason::KeyPolynomialDenominator,
                witness: Witness::KeyPolynomial { phi, valuation: w, denominator: e_lb, steps: step },
            });
        }
        // A monomial of value b*w in pi and the earlier keys.
        let (m, minv) = monomial(k, &keys, w * Val::from_integer(b), &fm, prec)?;
        let phib = reduce(phi.pow(k, b as u32))?;
        let u = reduce(phib.mul(k, &minv))?;
        let chu = charpoly_mod(k, &fm, &u)?;
        let red = chu.reduction(k)?;
        let facs = rf.factor(&red);
        if facs.len() > 1 {
            return split("key polynomial residual has coprime factors but lifting failed");
        }
        let psi = &facs[0].0;
        let d = psi.len() - 1;
        f_lb = crate::val::lcm_i64(f_lb, d as i64);
        if opts.allow_residual_irreducible && (e_lb * f_lb) as usize >= n {
            return Ok(IrreducibilityCertificate {
                verdict: Verdict::Irreducible,
                reason: CertReason::ResidualIrreducible,
                witness: Witness::Residual { poly: red, denominator: e_lb },
            });
        }
        // phi <- sum psi_j (phi^b)^j m^(d-j).
        let mut acc = DensePoly::zero();
        let mut pw = DensePoly::constant(k, k.one());
        for (j, c) in psi.iter().enumerate().rev() {
            acc = acc.add(k, &reduce(phib.pow(k, j as u32))?.mul(k, &pw).scale(k, &k.lift(c)));
            if j > 0 {
                pw = reduce(pw.mul(k, &m))?;
            }
        }
        if b as usize * d > 1 {
            keys.push((phi, w, b));
        }
        phi = reduce(acc)?;
        if phi.is_empty() {
            return Ok(IrreducibilityCertificate::inconclusive("key polynomial reached the modulus"));
        }
    }
    Ok(IrreducibilityCertificate::inconclusive("key polynomial search reached its step limit"))
}

/// pi^s times a product of earlier keys, with exponents below their relative
/// ramification, of value `target`; returned with its inverse mod `fm`.
#[allow(clippy::type_complexity)]
fn monomial<F: ValuedField>(
    k: &F,
    keys: &[(DensePoly<F::Elem>, Val, i64)],
    target: Val,
    fm: &DensePoly<F::Elem>,
    prec: Val,
) -> Result<(DensePoly<F::Elem>, DensePoly<F::Elem>)> {
    let e = Val::from_integer(k.ram_index());
    let mut js = vec![0i64; keys.len()];
    loop {
        let rest = keys.iter().zip(&js).fold(target, |acc, ((_, v, _), &j)| acc - *v * Val::from_integer(j));
        let s = rest * e;
        if s.is_integer() {
            let mut m = DensePoly::constant(k, k.uniformizer_pow(s.to_integer())?);
            let mut minv = DensePoly::constant(k, k.uniformizer_pow(-s.to_integer())?);
            for ((phi, _, _), &j) in keys.iter().zip(&js) {
                if j > 0 {
                    let inv = inverse_mod(k, fm, phi)?;
                    m = m.mul(k, &phi.pow(k, j as u32)).divrem(k, fm)?.1.truncate_all(k, prec);
                    minv = minv.mul(k, &inv.pow(k, j as u32)).divrem(k, fm)?.1;
                }
            }
            return Ok((m, minv));
        }
        let mut i = 0;
        loop {
            if i == js.len() {
                return Err(Error::invalid("value outside the key polynomial value group"));
            }
            js[i] += 1;
            if js[i] < keys[i].2 {
                break;
            }
            js[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::{TowerField, TowerSpec};
    use crate::val::val;

    #[test]
    fn x2_minus_p() {
        let k = TowerField::unramified(3, 1).unwrap();
        let f = DensePoly::from_ints(&k, &[-3, 0, 1]);
        let poly = newton_polygon(&k, &f).unwrap();
        assert_eq!(poly.root_valuations(), vec![(val(1, 2), 2)]);
        let c = certify_irreducible(&k, &f, &CertifyOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Irreducible);
        assert_eq!(c.reason, CertReason::SingleSlopeDenominator);
    }

    #[test]
    fn collinear_points_merge() {
        let k = TowerField::unramified(2, 1).unwrap();
        // 4 + 2X + X^2: points (0,2), (1,1), (2,0) are collinear.
        let f = DensePoly::from_ints(&k, &[4, 2, 1]);
        let poly = newton_polygon(&k, &f).unwrap();
        assert_eq!(poly.segments.len(), 1);
        assert_eq!(poly.vertices.len(), 2);
    }

    #[test]
    fn zero_roots_factored() {
        let k = TowerField::unramified(2, 1).unwrap();
        let f = DensePoly::from_ints(&k, &[0, 0, 2, 1]);
        let poly = newton_polygon(&k, &f).unwrap();
        assert_eq!(poly.zero_roots, 2);
        assert_eq!(poly.root_multiset(), vec![val(1, 1)]);
    }

    #[test]
    fn split_x2_minus_1_over_q3() {
        let k = TowerField::unramified(3, 1).unwrap();
        let f = DensePoly::from_ints(&k, &[-1, 0, 1]);
        let parts = hensel_split(&k, &f).unwrap();
        assert_eq!(parts.len(), 2);
        let prod = parts[0].mul(&k, &parts[1]);
        assert!(prod.sub(&k, &f).is_empty());
        let roots = roots_in_field(&k, &f).unwrap();
        assert_eq!(roots.len(), 2);
        for (r, m) in roots {
            assert_eq!(m, 1);
            assert!(k.is_zero(&f.eval(&k, &r)));
        }
    }

    #[test]
    fn slope_split() {
        // Roots of valuation 1, 3 and a unit pair.
        let k = TowerField::unramified(2, 1).unwrap();
        let a = DensePoly::from_ints(&k, &[-2, 1]);
        let b = DensePoly::from_ints(&k, &[-8, 1]);
        let c = DensePoly::from_ints(&k, &[3, 1, 1]);
        let f = a.mul(&k, &b).mul(&k, &c);
        let parts = hensel_split(&k, &f).unwrap();
        assert_eq!(parts.len(), 3);
        let prod = parts.iter().skip(1).fold(parts[0].clone(), |acc, g| acc.mul(&k, g));
        assert!(prod.sub(&k, &f).is_empty());
    }

    #[test]
    fn repeated_residual_root_refines() {
        // (X - 1)(X - 3) over Q_2: both roots reduce to 1.
        let k = TowerField::unramified(2, 1).unwrap();
        let f = DensePoly::from_ints(&k, &[3, -4, 1]);
        let roots = roots_in_field(&k, &f).unwrap();
        assert_eq!(roots.len(), 2);
        let vals: Vec<_> = roots.iter().map(|(r, _)| k.valuation(&k.sub(r, &k.one())).ok()).collect();
        assert!(vals.contains(&None) && vals.contains(&Some(val(1, 1))));
    }

    #[test]
    fn key_polynomial_certificate() {
        // X^4 - 4X^2 - 4: roots of valuation 1/2, and X^2 + 2 only sees the
        // subfield Q2(sqrt 2). Dividing by 2X gives X^2 + 2X + 2 of value 7/4.
        let k = TowerField::unramified(2, 1).unwrap();
        let f = DensePoly::from_ints(&k, &[-4, 0, -4, 0, 1]);
        let c = certify_irreducible(&k, &f, &CertifyOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Irreducible);
        match c.witness {
            Witness::KeyPolynomial { phi, valuation, denominator, .. } => {
                assert!(phi.sub(&k, &DensePoly::from_ints(&k, &[2, 2, 1])).is_empty());
                assert_eq!(valuation, val(7, 4));
                assert_eq!(denominator, 4);
            }
            w => panic!("unexpected witness {:?}", w),
        }
        // (X - 1)^2 - 2: roots 1 +- sqrt 2 are units, and X - 1 takes values
        // of valuation 1/2 on them.
        let g = DensePoly::from_ints(&k, &[-1, -2, 1]);
        let c = certify_irreducible(&k, &g, &CertifyOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Irreducible);
        assert_eq!(c.reason, CertReason::KeyPolynomialDenominator);
    }

    #[test]
    fn radical_tower_polygon() {
        let k = TowerSpec::new(2, 1).radical("r", 3, "p").build().unwrap();
        let f = DensePoly::new(vec![k.neg(&k.uniformizer()), k.zero(), k.one()]);
        let c = certify_irreducible(&k, &f, &CertifyOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Irreducible);
    }
}
