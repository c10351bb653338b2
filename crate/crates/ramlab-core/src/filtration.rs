//! Ramification filtrations: lower and upper profiles, Herbrand functions,
//! towers, products, tame base change and differents.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ext::{ExtElement, SimpleExtension};
use crate::field::ValuedField;
use crate::val::{ceil, Val};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Lower,
    Upper,
}

/// One step of a filtration: the subgroup `label` of order `order` is the
/// ramification group for indices up to and including `at`, and the next
/// entry (or the trivial group) takes over just after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Break {
    pub at: Val,
    pub label: String,
    pub order: u64,
}

/// A filtration G_0 ⊇ ... ⊋ 1 of a ramification group. An unramified
/// extension is a single break at -1 with trivial wild part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationProfile {
    pub group: String,
    pub mode: Mode,
    pub breaks: Vec<Break>,
}

/// Label used for the trivial subgroup after the last break.
pub const TRIVIAL: &str = "1";

impl FiltrationProfile {
    pub fn new(group: impl Into<String>, mode: Mode, breaks: Vec<Break>) -> Result<Self> {
        let p = FiltrationProfile { group: group.into(), mode, breaks };
        p.validate()?;
        Ok(p)
    }

    /// Lower profile from (break, label, order) triples.
    pub fn lower(group: impl Into<String>, breaks: &[(i64, &str, u64)]) -> Result<Self> {
        let b =
            breaks.iter().map(|&(at, l, o)| Break { at: Val::from_integer(at), label: l.into(), order: o }).collect();
        Self::new(group, Mode::Lower, b)
    }

    /// Upper profile from (break, label, order) triples.
    pub fn upper(group: impl Into<String>, breaks: &[(Val, &str, u64)]) -> Result<Self> {
        let b = breaks.iter().map(|(at, l, o)| Break { at: *at, label: (*l).into(), order: *o }).collect();
        Self::new(group, Mode::Upper, b)
    }

    /// The unramified (trivial) profile.
    pub fn unramified(group: impl Into<String>) -> Self {
        FiltrationProfile {
            group: group.into(),
            mode: Mode::Lower,
            breaks: alloc::vec![Break { at: Val::from_integer(-1), label: TRIVIAL.into(), order: 1 }],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.breaks.is_empty() {
            return Err(Error::invalid("a profile needs at least one break"));
        }
        for w in self.breaks.windows(2) {
            if w[1].at <= w[0].at {
                return Err(Error::invalid("breaks must increase"));
            }
            if w[1].order >= w[0].order || w[0].order % w[1].order != 0 {
                return Err(Error::invalid("orders must strictly decrease through divisors"));
            }
        }
        if self.breaks[0].at < Val::from_integer(-1) {
            return Err(Error::invalid("breaks start at -1"));
        }
        if self.mode == Mode::Lower && self.breaks.iter().any(|b| !b.at.is_integer()) {
            return Err(Error::invalid("lower breaks are integers"));
        }
        if self.breaks.iter().any(|b| b.order == 0) {
            return Err(Error::invalid("zero group order"));
        }
        Ok(())
    }

    fn is_unramified(&self) -> bool {
        self.breaks[0].at < Val::zero()
    }

    /// |G_0|.
    pub fn order(&self) -> u64 {
        if self.is_unramified() {
            1
        } else {
            self.breaks[0].order
        }
    }

    /// |G_0 / G_1|, the tame part.
    pub fn tame_order(&self) -> u64 {
        self.order() / self.order_at(Val::one())
    }

    /// Order of the ramification group at index x in this profile's numbering.
    pub fn order_at(&self, x: Val) -> u64 {
        let x = if self.mode == Mode::Lower { Val::from_integer(ceil(x)) } else { x };
        self.breaks.iter().find(|b| x <= b.at).map_or(1, |b| b.order)
    }

    pub fn label_at(&self, x: Val) -> &str {
        let x = if self.mode == Mode::Lower { Val::from_integer(ceil(x)) } else { x };
        self.breaks.iter().find(|b| x <= b.at).map_or(TRIVIAL, |b| b.label.as_str())
    }

    pub fn break_values(&self) -> Vec<Val> {
        self.breaks.iter().map(|b| b.at).collect()
    }

    /// Herbrand function of a lower profile, or its inverse for an upper one:
    /// in both cases the map from this numbering to the other.
    pub fn herbrand(&self) -> HerbrandFn {
        let g0 = Val::from_integer(self.order() as i64);
        let mut pts = alloc::vec![(Val::zero(), Val::zero())];
        let mut slopes = Vec::new();
        for b in self.breaks.iter().filter(|b| b.at > Val::zero()) {
            let o = Val::from_integer(b.order as i64);
            let s = if self.mode == Mode::Lower { o / g0 } else { g0 / o };
            let &(x0, y0) = pts.last().unwrap();
            pts.push((b.at, y0 + s * (b.at - x0)));
            slopes.push(s);
        }
        let last = if self.mode == Mode::Lower { Val::one() / g0 } else { g0 };
        slopes.push(last);
        HerbrandFn { points: pts, slopes }
    }

    pub fn to_upper(&self) -> FiltrationProfile {
        self.convert(Mode::Upper)
    }

    pub fn to_lower(&self) -> FiltrationProfile {
        self.convert(Mode::Lower)
    }

    fn convert(&self, mode: Mode) -> FiltrationProfile {
        if self.mode == mode {
            return self.clone();
        }
        let h = self.herbrand();
        let breaks = self
            .breaks
            .iter()
            .map(|b| Break { at: if b.at > Val::zero() { h.eval(b.at) } else { b.at }, ..b.clone() })
            .collect();
        FiltrationProfile { group: self.group.clone(), mode, breaks }
    }

    /// v_L of the different: sum over i >= 0 of (|G_i| - 1).
    pub fn different_exponent(&self) -> i64 {
        let lower = self.to_lower();
        let mut prev = -1i64;
        let mut total = 0i64;
        for b in &lower.breaks {
            let at = b.at.to_integer();
            // Integers i in (prev, at] with i >= 0.
            let n = if at < 0 { 0 } else { at - (prev + 1).max(0) + 1 };
            total += n * (b.order as i64 - 1);
            prev = at;
        }
        total
    }

    /// i_G(sigma) = b + 1 for sigma in G_b minus G_(b+1), returned as
    /// (i_G value, number of such sigma).
    pub fn i_g_distribution(&self) -> Vec<(i64, u64)> {
        let lower = self.to_lower();
        let mut out = Vec::new();
        for (j, b) in lower.breaks.iter().enumerate() {
            let next = lower.breaks.get(j + 1).map_or(1, |n| n.order);
            if b.at >= Val::zero() {
                out.push((b.at.to_integer() + 1, b.order - next));
            }
        }
        out
    }
}

/// A continuous increasing piecewise-linear map with value 0 at 0: `slopes[k]`
/// applies from `points[k]` on, and the last slope continues forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HerbrandFn {
    pub points: Vec<(Val, Val)>,
    pub slopes: Vec<Val>,
}

impl HerbrandFn {
    pub fn identity() -> Self {
        HerbrandFn { points: alloc::vec![(Val::zero(), Val::zero())], slopes: alloc::vec![Val::one()] }
    }

    /// Identity on [-1, 0], piecewise linear after.
    pub fn eval(&self, x: Val) -> Val {
        if x <= Val::zero() {
            return x;
        }
        let k = self.points.iter().rposition(|&(px, _)| px <= x).unwrap_or(0);
        let (px, py) = self.points[k];
        py + self.slopes[k] * (x - px)
    }

    pub fn inverse(&self) -> Self {
        HerbrandFn {
            points: self.points.iter().map(|&(x, y)| (y, x)).collect(),
            slopes: self.slopes.iter().map(|s| Val::one() / *s).collect(),
        }
    }

    /// self after other.
    pub fn compose(&self, other: &HerbrandFn) -> Self {
        let mut xs: Vec<Val> = other.points.iter().map(|p| p.0).collect();
        let inv = other.inverse();
        xs.extend(self.points.iter().map(|p| inv.eval(p.0)));
        xs.sort();
        xs.dedup();
        let points: Vec<(Val, Val)> = xs.iter().map(|&x| (x, self.eval(other.eval(x)))).collect();
        let mut slopes = Vec::with_capacity(points.len());
        for w in points.windows(2) {
            slopes.push((w[1].1 - w[0].1) / (w[1].0 - w[0].0));
        }
        let last = *self.slopes.last().unwrap() * *other.slopes.last().unwrap();
        slopes.push(last);
        HerbrandFn { points, slopes }.simplify()
    }

    /// Drop breakpoints where the slope does not change.
    pub fn simplify(self) -> Self {
        let mut points = alloc::vec![self.points[0]];
        let mut slopes = alloc::vec![self.slopes[0]];
        for k in 1..self.points.len() {
            if self.slopes[k] != *slopes.last().unwrap() {
                points.push(self.points[k]);
                slopes.push(self.slopes[k]);
            }
        }
        HerbrandFn { points, slopes }
    }

    pub fn is_concave(&self) -> bool {
        self.slopes.windows(2).all(|w| w[1] <= w[0]) && self.slopes.iter().all(|s| *s > Val::zero())
    }

    pub fn is_convex(&self) -> bool {
        self.slopes.windows(2).all(|w| w[1] >= w[0]) && self.slopes.iter().all(|s| *s > Val::zero())
    }
}

/// Lower filtration of Gal(M/K) from H = Gal(M/L) (lower, M/L numbering) and
/// G/H = Gal(L/K) (lower, L/K numbering), using
/// |G_i| = |H_i| |(G/H)_(phi_(M/L)(i))|.
/// `labels` names the composite subgroup for each (sub label, quotient label)
/// pair met; unnamed pairs get "sub.quot".
pub fn compose_tower(
    sub: &FiltrationProfile,
    quot: &FiltrationProfile,
    group: &str,
    labels: &BTreeMap<(String, String), String>,
) -> Result<FiltrationProfile> {
    let sub = sub.to_lower();
    let quot = quot.to_lower();
    let phi = sub.herbrand();
    let psi = phi.inverse();
    let last_sub = sub.breaks.last().unwrap().at;
    let last_quot = psi.eval(quot.breaks.last().unwrap().at);
    let bound = ceil(last_sub.max(last_quot)) + 1;
    let mut breaks: Vec<Break> = Vec::new();
    let mut current: Option<(u64, String)> = None;
    for i in -1..=bound {
        let x = Val::from_integer(i);
        let hs = sub.order_at(x);
        let hq = quot.order_at(phi.eval(x));
        let order = hs * hq;
        let key = (String::from(sub.label_at(x)), String::from(quot.label_at(phi.eval(x))));
        let label = labels.get(&key).cloned().unwrap_or_else(|| format!("{}.{}", key.0, key.1));
        match &current {
            Some((o, _)) if *o == order => {}
            Some((_, l)) => {
                breaks.push(Break {
                    at: Val::from_integer(i - 1),
                    label: l.clone(),
                    order: current.as_ref().unwrap().0,
                });
                current = Some((order, label));
            }
            None => current = Some((order, label)),
        }
        if order == 1 {
            break;
        }
    }
    if breaks.is_empty() {
        return Ok(FiltrationProfile::unramified(group));
    }
    // Drop the G_(-1) entry when it equals G_0.
    if breaks[0].at == Val::from_integer(-1) && breaks.len() > 1 && breaks[1].order == breaks[0].order {
        breaks.remove(0);
    }
    FiltrationProfile::new(group, Mode::Lower, breaks)
}

/// Upper filtration of a compositum of arithmetically disjoint extensions:
/// G^u = A^u x B^u. Labels are joined with "x".
pub fn product_arith_disjoint(a: &FiltrationProfile, b: &FiltrationProfile) -> Result<FiltrationProfile> {
    let (ua, ub) = (a.to_upper(), b.to_upper());
    let mut pts: Vec<Val> = ua.break_values().into_iter().chain(ub.break_values()).collect();
    pts.sort();
    pts.dedup();
    let breaks = pts
        .iter()
        .map(|&u| Break {
            at: u,
            label: format!("{}x{}", ua.label_at(u), ub.label_at(u)),
            order: ua.order_at(u) * ub.order_at(u),
        })
        .collect();
    FiltrationProfile::new(format!("{}x{}", a.group, b.group), Mode::Upper, breaks)
}

/// Sufficient advisory criterion for arithmetic disjointness: no upper break
/// of one factor is an upper break of the other.
pub fn breaks_avoid(a: &FiltrationProfile, b: &FiltrationProfile) -> bool {
    let ub = b.to_upper().break_values();
    a.to_upper().break_values().iter().all(|u| !ub.contains(u))
}

/// Filtration of M/F for a tame totally ramified K/F of degree `tame_degree`
/// under M/K with the given lower profile: the lower numbering on M is
/// unchanged for i >= 1 and G'_0 grows by the tame degree.
pub fn tame_base_change(
    profile: &FiltrationProfile,
    tame_degree: u64,
    p: u64,
    label: &str,
) -> Result<FiltrationProfile> {
    if tame_degree == 0 || tame_degree.is_multiple_of(p) {
        return Err(Error::invalid(format!("tame degree {} is not prime to {}", tame_degree, p)));
    }
    let lower = profile.to_lower();
    if tame_degree == 1 {
        return Ok(lower);
    }
    let g0 = lower.order() * tame_degree;
    let mut breaks = alloc::vec![Break { at: Val::zero(), label: label.into(), order: g0 }];
    breaks.extend(lower.breaks.iter().filter(|b| b.at > Val::zero()).cloned());
    if lower.is_unramified() {
        breaks.truncate(1);
    }
    FiltrationProfile::new(format!("{}.{}", lower.group, tame_degree), Mode::Lower, breaks)
}

/// Data of a degree-p Kummer extension X^p = 1 + w pi_K^s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KummerDatum {
    pub p: u64,
    pub s: i64,
    /// v_K(p) in pi_K units.
    pub vk_p: i64,
}

/// (v_K(D), v_L(D)) = (v_K(p) + (p-1)(1-s)/p, p v_K(D)).
pub fn different_from_kummer(d: &KummerDatum) -> Result<(Val, Val)> {
    let p = d.p as i64;
    let bound = Val::new(p * d.vk_p, p - 1);
    if d.s <= 0 || Val::from_integer(d.s) >= bound || d.s.gcd(&p) != 1 {
        return Err(Error::invalid(format!("s = {} is not in Hyodo range (0, {}) prime to {}", d.s, bound, p)));
    }
    let vk = Val::from_integer(d.vk_p) + Val::new((p - 1) * (1 - d.s), p);
    Ok((vk, vk * Val::from_integer(p)))
}

/// Single lower break t of a degree-p extension from v_L(D) = (p-1)(t+1).
pub fn break_from_different(vl_diff: i64, p: u64) -> Result<i64> {
    let p1 = p as i64 - 1;
    if p1 <= 0 || vl_diff % p1 != 0 {
        return Err(Error::invalid(format!("v_L(D) = {} is not a multiple of {}", vl_diff, p1)));
    }
    Ok(vl_diff / p1 - 1)
}

/// A unit x of K rewritten as u^p (1 + w) with v_K(w) as large as possible
/// below p v_K(p)/(p-1), valuations in pi_K units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerForm {
    /// v_K(w), or `None` when it reaches p v_K(p)/(p-1) (no wild break).
    pub s: Option<i64>,
    pub vk_p: i64,
    pub steps: usize,
}

impl KummerForm {
    /// Lower break of K(x^(1/p))/K, when ramified.
    pub fn lower_break(&self, p: u64) -> Result<Option<i64>> {
        match self.s {
            None => Ok(None),
            Some(s) => {
                let (_, vl) = different_from_kummer(&KummerDatum { p, s, vk_p: self.vk_p })?;
                break_from_different(vl.to_integer(), p).map(Some)
            }
        }
    }
}

/// Removes p-th powers from x - 1 term by term: while v(x - 1) = p k < the
/// bound, x is divided by (1 + a pi^k)^p with a^p the leading coefficient.
pub fn kummer_normal_form<F: ValuedField>(k: &F, x: &F::Elem) -> Result<KummerForm> {
    let p = k.p();
    let rf = k.residue_field();
    let e = k.ram_index();
    let bound = Val::new(p as i64 * e, p as i64 - 1);
    if k.valuation(x)? != Val::zero() {
        return Err(Error::invalid("Kummer normal form needs a unit"));
    }
    let r0 = rf.pth_root(&k.residue(x)?);
    let mut x = k.div(x, &k.pow(&k.lift(&r0), p))?;
    let ev = Val::from_integer(e);
    for steps in 0..4 * (bound.to_integer() as usize + 2) {
        let z = k.sub(&x, &k.one());
        let v = match k.valuation(&z) {
            Ok(v) => v * ev,
            Err(err) if err.is_precision() && k.is_zero(&z) => match k.precision(&z) {
                Some(n) if n * ev > bound => return Ok(KummerForm { s: None, vk_p: e, steps }),
                None => return Ok(KummerForm { s: None, vk_p: e, steps }),
                _ => return Err(Error::precision("x - 1 vanishes below the Kummer bound")),
            },
            Err(err) => return Err(err),
        };
        if v >= bound {
            return Ok(KummerForm { s: None, vk_p: e, steps });
        }
        let v = v.to_integer();
        if v % p as i64 != 0 {
            return Ok(KummerForm { s: Some(v), vk_p: e, steps });
        }
        let lead = k.residue(&k.mul(&z, &k.uniformizer_pow(-v)?))?;
        let c = k.mul(&k.lift(&rf.pth_root(&lead)), &k.uniformizer_pow(v / p as i64)?);
        x = k.div(&x, &k.pow(&k.add(&k.one(), &c), p))?;
    }
    Err(Error::precision("Kummer normalization did not terminate"))
}

/// Lower filtration of a totally ramified Galois L = K(alpha) from the
/// conjugates of alpha in L, each defining sigma: alpha -> root, and a
/// uniformizer of L written in alpha.
pub fn filtration_from_roots<F: ValuedField>(
    l: &SimpleExtension<F>,
    roots: &[ExtElement<F::Elem>],
    uniformizer: &ExtElement<F::Elem>,
    group: &str,
) -> Result<FiltrationProfile> {
    let n = l.degree();
    if roots.len() != n {
        return Err(Error::invalid(format!("{} conjugates for a degree {} extension", roots.len(), n)));
    }
    let apply = |x: &ExtElement<F::Elem>, r: &ExtElement<F::Elem>| -> ExtElement<F::Elem> {
        let c = l.coords(x);
        c.iter().rev().fold(l.zero(), |acc, a| l.add(&l.mul(&acc, r), &l.embed(a)))
    };
    let e = Val::from_integer(l.ram_index());
    // Separation: sigma(alpha) is identified with the root it is closest to.
    let mut sep = Val::zero();
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            sep = sep.max(l.valuation(&l.sub(a, b))?);
        }
    }
    let identify = |x: &ExtElement<F::Elem>| -> Result<usize> {
        for (k, r) in roots.iter().enumerate() {
            match l.valuation(&l.sub(x, r)) {
                Ok(v) if v > sep => return Ok(k),
                Err(err) if err.is_precision() => return Ok(k),
                Err(err) => return Err(err),
                _ => {}
            }
        }
        Err(Error::invalid("root permutations do not close under composition"))
    };
    for a in roots {
        for b in roots {
            identify(&apply(b, a))?;
        }
    }
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for r in roots {
        let d = l.sub(&apply(uniformizer, r), uniformizer);
        match l.valuation(&d) {
            Ok(v) => {
                let i = v * e;
                if !i.is_integer() {
                    return Err(Error::invalid("i_G value is not an integer; is the uniformizer right?"));
                }
                *counts.entry(i.to_integer()).or_insert(0) += 1;
            }
            Err(err) if err.is_precision() => {}
            Err(err) => return Err(err),
        }
    }
    // G_b has order 1 + #{sigma : i_G(sigma) >= b + 1}.
    let mut breaks = Vec::new();
    let mut above: u64 = counts.values().sum();
    for (&i, &c) in &counts {
        breaks.push(Break { at: Val::from_integer(i - 1), label: format!("G{}", i - 1), order: above + 1 });
        above -= c;
    }
    if breaks.is_empty() {
        return Ok(FiltrationProfile::unramified(group));
    }
    FiltrationProfile::new(group, Mode::Lower, breaks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::val::val;

    fn q8_1() -> FiltrationProfile {
        FiltrationProfile::lower("Q8", &[(1, "Q8", 8), (3, "Z", 2)]).unwrap()
    }

    fn q8_2() -> FiltrationProfile {
        FiltrationProfile::lower("Q8", &[(5, "Q8", 8), (69, "Z", 2)]).unwrap()
    }

    #[test]
    fn upper_breaks() {
        assert_eq!(q8_1().to_upper().break_values(), alloc::vec![val(1, 1), val(3, 2)]);
        assert_eq!(q8_2().to_upper().break_values(), alloc::vec![val(5, 1), val(21, 1)]);
        let h = q8_1().herbrand();
        assert!(h.is_concave());
        assert_eq!(h.inverse().eval(h.eval(val(7, 3))), val(7, 3));
    }

    #[test]
    fn yamamoto_product() {
        let u = product_arith_disjoint(&q8_1(), &q8_2()).unwrap();
        assert_eq!(u.break_values(), alloc::vec![val(1, 1), val(3, 2), val(5, 1), val(21, 1)]);
        let l = u.to_lower();
        assert_eq!(l.break_values(), alloc::vec![val(1, 1), val(3, 1), val(31, 1), val(543, 1)]);
        let labels: Vec<&str> = l.breaks.iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, alloc::vec!["Q8xQ8", "ZxQ8", "1xQ8", "1xZ"]);
        let orders: Vec<u64> = l.breaks.iter().map(|b| b.order).collect();
        assert_eq!(orders, alloc::vec![64, 16, 8, 2]);
        assert!(breaks_avoid(&q8_1(), &q8_2()));
    }

    #[test]
    fn tower_composition() {
        // Degree-p top step with break q + 1 over a (Z/p)^2n quotient with
        // break 1, at p = 2, q = 2.
        let sub = FiltrationProfile::lower("Z", &[(3, "Z", 2)]).unwrap();
        let quot = FiltrationProfile::lower("V", &[(1, "V", 4)]).unwrap();
        let mut labels = BTreeMap::new();
        labels.insert((String::from("Z"), String::from("V")), String::from("G"));
        labels.insert((String::from("Z"), String::from("1")), String::from("Z"));
        let g = compose_tower(&sub, &quot, "G", &labels).unwrap();
        assert_eq!(
            g.breaks,
            alloc::vec![
                Break { at: val(1, 1), label: "G".into(), order: 8 },
                Break { at: val(3, 1), label: "Z".into(), order: 2 },
            ]
        );
        // The quotient's upper breaks are the images of the composite's.
        let up = g.to_upper();
        assert_eq!(quot.to_upper().breaks[0].at, up.breaks[0].at);
    }

    #[test]
    fn hyodo_and_breaks() {
        assert_eq!(different_from_kummer(&KummerDatum { p: 2, s: 1, vk_p: 2 }).unwrap(), (val(2, 1), val(4, 1)));
        assert_eq!(different_from_kummer(&KummerDatum { p: 3, s: 2, vk_p: 3 }).unwrap(), (val(7, 3), val(7, 1)));
        assert!(different_from_kummer(&KummerDatum { p: 3, s: 3, vk_p: 3 }).is_err());
        assert_eq!(break_from_different(4, 2).unwrap(), 3);
        assert_eq!(break_from_different(2, 2).unwrap(), 1);
        assert!(break_from_different(5, 3).is_err());
    }

    #[test]
    fn kummer_forms() {
        let k = crate::tower::TowerField::unramified(2, 1).unwrap();
        let form = |n: i64| kummer_normal_form(&k, &k.from_int(n)).unwrap();
        assert_eq!(form(3).s, Some(1));
        assert_eq!(form(3).lower_break(2).unwrap(), Some(1));
        assert_eq!(form(-1).s, Some(1));
        assert_eq!(form(5).s, None);
        assert_eq!(form(17).s, None);
        // 1 + 8 is a square; 1 + 4 + 8 = 13 is not, but its form is unramified.
        assert_eq!(form(9).s, None);
        let k3 = crate::tower::TowerField::unramified(3, 1).unwrap();
        assert_eq!(kummer_normal_form(&k3, &k3.from_int(4)).unwrap().s, Some(1));
        assert!(kummer_normal_form(&k, &k.from_int(2)).is_err());
    }

    #[test]
    fn different_matches_i_g() {
        for p in [q8_1(), q8_2()] {
            let s: i64 = p.i_g_distribution().iter().map(|&(i, c)| i * c as i64).sum();
            assert_eq!(s, p.different_exponent());
        }
    }

    #[test]
    fn tame_change() {
        let g = FiltrationProfile::lower("G", &[(1, "G", 8), (3, "Z", 2)]).unwrap();
        let t = tame_base_change(&g, 3, 2, "G'").unwrap();
        assert_eq!(t.order(), 24);
        assert_eq!(t.order_at(val(1, 1)), 8);
        assert_eq!(tame_base_change(&g, 1, 2, "G'").unwrap(), g);
        assert!(tame_base_change(&g, 4, 2, "G'").is_err());
    }
}
