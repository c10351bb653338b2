//! Genus 2 curves Y^2 = f(X) = 1 + b2 X^2 + b3 X^3 + b4 X^4 + X^5 over 2-adic
//! towers, through T_f(Y) = s1(Y)^2 - 4 s0(Y) s2(Y), where s_i are the Taylor
//! coefficients of f(X + Y) in X.
//!
//! Square roots of s0(y), s2(y) and f(y) are never built: the quadratic
//! pieces K(y, f(y)^(1/2))/K(y) are read through the Kummer normal form of
//! f(y) in K(y).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::conductor::{fixed_dims_elliptic_product, swan, ConductorReport};
use crate::error::{Error, Result};
use crate::expr::parse_and_eval;
use crate::ext::{ExtElement, SimpleExtension};
use crate::field::ValuedField;
use crate::filtration::{
    breaks_avoid, compose_tower, filtration_from_roots, kummer_normal_form, product_arith_disjoint, Break,
    FiltrationProfile, Mode,
};
use crate::group::{q8, FiniteGroup};
use crate::linalg::{discriminant, resultant};
use crate::monodromy::embed_poly;
use crate::newton::{
    certify_irreducible, hensel_split, newton_polygon, roots_in_field, CertReason, CertifyOptions,
    IrreducibilityCertificate, Verdict, Witness,
};
use crate::poly::DensePoly;
use crate::residue::{Fq, FqPoly};
use crate::tower::{TowerElement, TowerField, TowerSpec};
use crate::val::Val;

pub type Ext = SimpleExtension<TowerField>;
type El = ExtElement<TowerElement>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DegenerationType {
    I,
    II,
    III,
}

impl core::fmt::Display for DegenerationType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            DegenerationType::I => "I",
            DegenerationType::II => "II",
            DegenerationType::III => "III",
        })
    }
}

/// The named examples: "type-i", "type-ii", "type-iii".
pub const PRESETS: [&str; 3] = ["type-i", "type-ii", "type-iii"];

#[derive(Clone, Debug)]
pub struct Genus2Scenario {
    pub spec: TowerSpec,
    pub k: TowerField,
    /// b2, b3, b4 as given.
    pub exprs: [String; 3],
    pub b: [TowerElement; 3],
}

impl Genus2Scenario {
    pub fn new(spec: TowerSpec, b2: &str, b3: &str, b4: &str) -> Result<Self> {
        if spec.p != 2 {
            return Err(Error::Unsupported(format!("genus 2 scenarios need p = 2, not {}", spec.p)));
        }
        let k = spec.build()?;
        let mut b = Vec::new();
        for s in [b2, b3, b4] {
            let x = parse_and_eval(&k, s)?;
            if k.valuation(&x).is_ok_and(|v| v < Val::zero()) {
                return Err(Error::invalid(format!("coefficient {} is not integral", s)));
            }
            b.push(x);
        }
        let b: [TowerElement; 3] = b.try_into().expect("three coefficients");
        Ok(Genus2Scenario { spec, k, exprs: [b2.into(), b3.into(), b4.into()], b })
    }

    pub fn preset(name: &str, f_ur: usize) -> Result<Self> {
        match name {
            "type-i" => Self::new(TowerSpec::new(2, f_ur).radical("pi", 15, "p"), "pi^9", "1", "pi^6"),
            "type-ii" => Self::new(TowerSpec::new(2, f_ur).radical("a", 9, "p"), "a^3", "a^6", "0"),
            "type-iii" => {
                Self::new(TowerSpec::new(2, f_ur).cyclotomic("lambda").radical("mu", 5, "lambda"), "0", "0", "1")
            }
            _ => Err(Error::invalid(format!("unknown preset {}; expected one of {}", name, PRESETS.join(", ")))),
        }
    }

    /// Default absolute precision for everything built from K.
    pub fn with_precision(mut self, n: Val) -> Self {
        self.k = self.k.with_default_precision(n);
        self
    }

    pub fn f_poly(&self) -> DensePoly<TowerElement> {
        let k = &self.k;
        DensePoly::new(vec![k.zero(), k.zero(), self.b[0].clone(), self.b[1].clone(), self.b[2].clone(), k.one()])
            .add(k, &DensePoly::constant(k, k.one()))
    }

    /// s0, s1, s2 with f(X + Y) = s0(Y) + s1(Y) X + s2(Y) X^2 + ...; s2 uses
    /// the integer binomials C(i, 2) so that nothing is divided.
    pub fn taylor(&self) -> [DensePoly<TowerElement>; 3] {
        let k = &self.k;
        let f = self.f_poly();
        let s1 = f.derivative(k);
        let s2 = DensePoly::new(
            f.coeffs.iter().enumerate().skip(2).map(|(i, c)| k.scale_int(c, (i * (i - 1) / 2) as i64)).collect(),
        )
        .trim(k);
        [f, s1, s2]
    }

    pub fn build_tf(&self) -> DensePoly<TowerElement> {
        let k = &self.k;
        let [s0, s1, s2] = self.taylor();
        s1.mul(k, &s1).sub(k, &s0.mul(k, &s2).scale(k, &k.from_int(4))).trim(k)
    }

    /// 1 + b3 b2 + b3^2 b4.
    pub fn unit_condition(&self) -> TowerElement {
        let k = &self.k;
        let [b2, b3, b4] = &self.b;
        k.add(&k.add(&k.one(), &k.mul(b3, b2)), &k.mul(&k.mul(b3, b3), b4))
    }

    /// Two singularities on the model Y^2 = f(X) iff b3 is a unit.
    pub fn two_singularities(&self) -> bool {
        self.k.valuation(&self.b[1]).is_ok_and(|v| v == Val::zero())
    }

    /// Type I from b3 and the Hensel split of T_f; types II and III from
    /// the Newton polygon of Delta(Z) = (T_f(Z + y) - T_f(y))/Z over K(y).
    pub fn classify(&self) -> Result<Classification> {
        let k = &self.k;
        let tf = self.build_tf();
        if self.two_singularities() {
            let split = self.type_one_split()?;
            let unit = self.unit_condition();
            let unit_ok = k.valuation(&unit).is_ok_and(|v| v == Val::zero());
            return Ok(Classification {
                kind: DegenerationType::I,
                singularities: 2,
                clusters: vec![4, 4],
                cluster_distance: Some(Val::zero()),
                delta_polygon: Vec::new(),
                unit_condition: Some(unit_ok),
                split_reductions: Some((split.t1_reduction.clone(), split.t2_reduction.clone())),
            });
        }
        let factor = match hensel_split(k, &tf) {
            Ok(parts) => parts.into_iter().max_by_key(|f| f.degree()).expect("nonempty split"),
            Err(Error::CannotSplit(_)) => tf.clone(),
            Err(e) => return Err(e),
        }
        .monic(k)?;
        let cert = certify_irreducible(k, &factor, &CertifyOptions::default())?;
        let l = self.root_field(&factor, &cert)?;
        let delta = delta_polygon(&l, &tf)?;
        // Roots of T_f at the smallest distance from y lie outside its cluster.
        let (far, outside) = *delta.last().ok_or_else(|| Error::invalid("T_f has degree below 2"))?;
        let own = 8 - outside;
        let (kind, clusters, distance) = if own == 4 && delta.len() == 2 {
            (DegenerationType::II, vec![4, 4], Some(far))
        } else if own == 4 {
            return Err(Error::precision(format!("ambiguous root clustering {:?}", delta)));
        } else {
            // Conjugate clusters have equal size when T_f is irreducible.
            let clusters = if factor.degree() == Some(8) { vec![own; 8 / own] } else { vec![own] };
            (DegenerationType::III, clusters, None)
        };
        Ok(Classification {
            kind,
            singularities: 1,
            clusters,
            cluster_distance: distance,
            delta_polygon: delta,
            unit_condition: None,
            split_reductions: None,
        })
    }

    /// T_f = lc T1 T2 with T1 reducing to Y^4 and T2 to Y^4 + b3^2.
    pub fn type_one_split(&self) -> Result<TypeOneSplit> {
        let k = &self.k;
        let rf = k.residue_field();
        let tf = self.build_tf();
        let parts = hensel_split(k, &tf)?;
        if parts.len() != 2 || parts.iter().any(|f| f.degree() != Some(4)) {
            return Err(Error::invalid(format!(
                "T_f splits into degrees {:?}, not two quartics",
                parts.iter().map(|f| f.degree()).collect::<Vec<_>>()
            )));
        }
        let mut parts: Vec<(DensePoly<TowerElement>, FqPoly)> = parts
            .into_iter()
            .map(|f| {
                let m = f.monic(k)?;
                let r = m.reduction(k)?;
                Ok((m, r))
            })
            .collect::<Result<_>>()?;
        let y4: FqPoly = vec![rf.zero(), rf.zero(), rf.zero(), rf.zero(), rf.one()];
        parts.sort_by_key(|(_, r)| *r != y4);
        let (t1, r1) = parts[0].clone();
        let (t2, r2) = parts[1].clone();
        let b3 = k.residue(&self.b[1])?;
        let mut want2 = y4.clone();
        want2[0] = rf.mul(&b3, &b3);
        let lc = tf.leading().expect("T_f is nonzero").clone();
        Ok(TypeOneSplit { lc, reductions_match: r1 == y4 && r2 == want2, t1, t2, t1_reduction: r1, t2_reduction: r2 })
    }

    /// v(2^-16 disc T_f) and its residue against b3^8 (1 + b3 b2 + b3^2 b4)^4,
    /// plus the factor identity disc T_f = lc^14 disc T1 disc T2 Res(T1, T2)^2.
    pub fn discriminant_identity(&self, split: &TypeOneSplit) -> Result<DiscriminantCheck> {
        let k = &self.k;
        let tf = self.build_tf();
        let d = k.mul_p_pow(&discriminant(k, &tf)?, -16);
        let v = k.valuation(&d)?;
        let rhs = k.mul(&k.pow(&self.b[1], 8), &k.pow(&self.unit_condition(), 4));
        let residue_match = v == Val::zero() && k.residue(&d)? == k.residue(&rhs)?;
        let d1 = discriminant(k, &split.t1)?;
        let d2 = discriminant(k, &split.t2)?;
        let res = resultant(k, &split.t1, &split.t2)?;
        let factored = k.mul(&k.mul(&k.pow(&split.lc, 14), &k.mul(&d1, &d2)), &k.mul(&res, &res));
        let full = discriminant(k, &tf)?;
        let ratio_ok = k.valuation(&k.sub(&full, &factored)).map_or(true, |dv| dv > k.valuation(&full).unwrap_or(dv));
        Ok(DiscriminantCheck {
            v_scaled: v,
            residue_match,
            v_disc_t1: k.valuation(&d1)?,
            v_disc_t2: k.valuation(&d2)?,
            v_resultant: k.valuation(&res)?,
            factorization_holds: ratio_ok,
        })
    }

    /// K(y) for a root y of the irreducible t, with the key polynomial of its
    /// certificate as a uniformizer witness.
    fn root_field(&self, t: &DensePoly<TowerElement>, cert: &IrreducibilityCertificate<TowerElement>) -> Result<Ext> {
        let witnesses: Vec<DensePoly<TowerElement>> = match &cert.witness {
            Witness::KeyPolynomial { phi, .. } => vec![phi.clone()],
            _ => Vec::new(),
        };
        SimpleExtension::with_witnesses(self.k.clone(), t, &witnesses)
    }

    /// Filtration of Gal(K(y, f(y)^(1/2))/K) for a root y of t, with
    /// K(y)/K Galois of group Q8/Z: the quotient from the conjugates of y,
    /// the center from the Kummer form of f(y).
    fn q8_piece(&self, l: &Ext, t: &DensePoly<TowerElement>) -> Result<Q8Piece> {
        let k = &self.k;
        let roots: Vec<El> = roots_in_field(l, &embed_poly(l, t))?.into_iter().map(|(r, _)| r).collect();
        if roots.len() != 4 {
            return Err(Error::InconclusiveRootSearch(format!(
                "{} of 4 conjugates in K(y); enlarge f_ur",
                roots.len()
            )));
        }
        let raw = filtration_from_roots(l, &roots, &l.uniformizer(), "Q8/Z")?;
        if raw.breaks.len() != 1 || raw.order() != 4 {
            return Err(Error::invalid(format!("K(y)/K filtration {:?} is not a single break of order 4", raw.breaks)));
        }
        let quotient = FiltrationProfile::new(
            "Q8/Z",
            Mode::Lower,
            vec![Break { at: raw.breaks[0].at, label: String::from("Q8/Z"), order: 4 }],
        )?;
        let fy = l.from_poly(&self.f_poly())?;
        let form = kummer_normal_form(l, &fy)?;
        let top = form.lower_break(2)?.ok_or_else(|| Error::invalid("K(y, f(y)^(1/2))/K(y) is not wildly ramified"))?;
        let sub = FiltrationProfile::lower("Z", &[(top, "Z", 2)])?;
        let mut labels = BTreeMap::new();
        labels.insert((String::from("Z"), String::from("Q8/Z")), String::from("Q8"));
        labels.insert((String::from("Z"), String::from("1")), String::from("Z"));
        let profile = compose_tower(&sub, &quotient, "Q8", &labels)?;
        let _ = k;
        Ok(Q8Piece { quotient, kummer_s: form.s.expect("ramified"), top_break: top, profile })
    }

    pub fn type_one_analysis(&self) -> Result<TypeOneAnalysis> {
        let k = &self.k;
        if !self.two_singularities() {
            return Err(Error::invalid("type I needs b3 to be a unit"));
        }
        let split = self.type_one_split()?;
        let disc = self.discriminant_identity(&split)?;
        let opts = CertifyOptions::default();
        let cert1 = certify_irreducible(k, &split.t1, &opts)?;
        let cert2 = certify_irreducible(k, &split.t2, &opts)?;
        if cert1.verdict != Verdict::Irreducible || cert2.verdict != Verdict::Irreducible {
            return Err(Error::invalid("T1 and T2 are not both certified irreducible"));
        }
        let l1 = self.root_field(&split.t1, &cert1)?;
        let l2 = self.root_field(&split.t2, &cert2)?;
        let g1 = self.q8_piece(&l1, &split.t1)?;
        let g2 = self.q8_piece(&l2, &split.t2)?;
        let disjoint_breaks = breaks_avoid(&g1.profile, &g2.profile);
        let upper = product_arith_disjoint(&g1.profile, &g2.profile)?;
        let lower = upper.to_lower();
        let labels: Vec<&str> = lower.breaks.iter().map(|b| b.label.as_str()).collect();
        let dims = fixed_dims_elliptic_product(&labels)?;
        let conductor = swan(&lower, &dims)?;
        let group = FiniteGroup::direct_product(&q8(), &q8())?;
        Ok(TypeOneAnalysis {
            split,
            disc,
            cert1: cert1.reason,
            cert2: cert2.reason,
            g1,
            g2,
            disjoint_breaks,
            upper,
            lower,
            group_order: group.order() as u64,
            conductor,
        })
    }

    /// T_f irreducible by its slope, the Delta(Z) clusters over K(y), and
    /// the group certificate: a cluster translation pair for one elliptic
    /// component and a swap generate (Q8 x Q8):2 modulo its Frattini subgroup.
    pub fn type_two_analysis(&self) -> Result<TypeTwoAnalysis> {
        let k = &self.k;
        let tf = self.build_tf();
        let polygon = newton_polygon(k, &tf)?;
        let cert = certify_irreducible(k, &tf, &CertifyOptions::default())?;
        let (root_valuation, denominator) = match &cert.witness {
            Witness::Slope { root_valuation, denominator } if cert.verdict == Verdict::Irreducible => {
                (*root_valuation, *denominator)
            }
            _ => return Err(Error::invalid("T_f is not certified irreducible by its slope")),
        };
        let l = SimpleExtension::new(k.clone(), &tf.monic(k)?)?;
        let delta = delta_polygon(&l, &tf)?;
        let group = FiniteGroup::swap_extension(&q8())?;
        let el = |s: &str| group.find(s).ok_or_else(|| Error::invalid(format!("no element {}", s)));
        let near = delta.iter().find(|(_, m)| *m == 3).is_some();
        let far = delta.iter().find(|(_, m)| *m == 4).is_some();
        let mut images = Vec::new();
        if near {
            images.push(el("(i,1;0)")?);
            images.push(el("(j,1;0)")?);
        }
        if far {
            images.push(el("(1,1;1)")?);
        }
        let surjective = group.frattini_closure_surjective(&images)?;
        Ok(TypeTwoAnalysis {
            root_valuations: polygon.root_valuations(),
            slope_denominator: denominator,
            root_valuation,
            delta,
            group_order: group.order() as u64,
            surjective,
        })
    }

    /// Over K1 = K(y1), y1 a root of T1: how T_f factors, read from the roots
    /// of T1 and T2 in K1 and a certificate attempt for T2 over K1.
    pub fn magma_shape(&self) -> Result<FactorShape> {
        let split = self.type_one_split()?;
        let cert1 = certify_irreducible(&self.k, &split.t1, &CertifyOptions::default())?;
        let l1 = self.root_field(&split.t1, &cert1)?;
        let t1_roots = roots_in_field(&l1, &embed_poly(&l1, &split.t1))?.len();
        let t2 = embed_poly(&l1, &split.t2);
        let t2_roots = roots_in_field(&l1, &t2)?.len();
        let t2_cert = certify_irreducible(&l1, &t2, &CertifyOptions::default())?;
        Ok(FactorShape {
            f_ur: self.k.f_ur(),
            over_k: vec![4, 4],
            linear_over_k1: t1_roots,
            t2_roots_over_k1: t2_roots,
            t2_verdict: t2_cert.verdict,
            t2_reason: t2_cert.reason,
        })
    }
}

/// Root valuations of Delta(Z) = (T(Z + y) - T(y))/Z over K(y), y the generator.
pub fn delta_polygon(l: &Ext, t: &DensePoly<TowerElement>) -> Result<Vec<(Val, usize)>> {
    let shifted = embed_poly(l, t).shift(l, &l.generator());
    let delta = DensePoly::new(shifted.coeffs[1..].to_vec());
    Ok(newton_polygon(l, &delta)?.root_valuations())
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub kind: DegenerationType,
    pub singularities: usize,
    /// Sizes of the clusters of roots of T_f.
    pub clusters: Vec<usize>,
    /// Valuation of differences between clusters.
    pub cluster_distance: Option<Val>,
    pub delta_polygon: Vec<(Val, usize)>,
    pub unit_condition: Option<bool>,
    pub split_reductions: Option<(FqPoly, FqPoly)>,
}

#[derive(Clone, Debug)]
pub struct TypeOneSplit {
    pub lc: TowerElement,
    pub t1: DensePoly<TowerElement>,
    pub t2: DensePoly<TowerElement>,
    pub t1_reduction: Vec<Fq>,
    pub t2_reduction: Vec<Fq>,
    pub reductions_match: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantCheck {
    pub v_scaled: Val,
    pub residue_match: bool,
    pub v_disc_t1: Val,
    pub v_disc_t2: Val,
    pub v_resultant: Val,
    pub factorization_holds: bool,
}

#[derive(Clone, Debug)]
pub struct Q8Piece {
    pub quotient: FiltrationProfile,
    pub kummer_s: i64,
    pub top_break: i64,
    pub profile: FiltrationProfile,
}

#[derive(Clone, Debug)]
pub struct TypeOneAnalysis {
    pub split: TypeOneSplit,
    pub disc: DiscriminantCheck,
    pub cert1: CertReason,
    pub cert2: CertReason,
    pub g1: Q8Piece,
    pub g2: Q8Piece,
    pub disjoint_breaks: bool,
    pub upper: FiltrationProfile,
    pub lower: FiltrationProfile,
    pub group_order: u64,
    pub conductor: ConductorReport,
}

#[derive(Clone, Debug)]
pub struct TypeTwoAnalysis {
    pub root_valuations: Vec<(Val, usize)>,
    pub slope_denominator: i64,
    pub root_valuation: Val,
    pub delta: Vec<(Val, usize)>,
    pub group_order: u64,
    pub surjective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorShape {
    pub f_ur: usize,
    pub over_k: Vec<usize>,
    pub linear_over_k1: usize,
    pub t2_roots_over_k1: usize,
    pub t2_verdict: Verdict,
    pub t2_reason: CertReason,
}

impl FactorShape {
    /// Four linear factors and no root of T2: the T2 part stays whole.
    pub fn matches(&self) -> bool {
        self.over_k == [4, 4]
            && self.linear_over_k1 == 4
            && self.t2_roots_over_k1 == 0
            && self.t2_verdict != Verdict::Reducible
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::val::val;

    #[test]
    fn taylor_of_x5_plus_1() {
        let s = Genus2Scenario::new(TowerSpec::new(2, 1), "0", "0", "0").unwrap();
        let k = &s.k;
        let t = s.build_tf();
        let want = [0i64, 0, 0, -40, 0, 0, 0, 0, -15];
        assert_eq!(t.degree(), Some(8));
        for (c, w) in t.coeffs.iter().zip(want) {
            assert_eq!(k.as_rational(c).unwrap(), num_rational::BigRational::from_integer(w.into()));
        }
    }

    #[test]
    fn presets_build() {
        for p in PRESETS {
            Genus2Scenario::preset(p, 1).unwrap();
        }
        assert!(Genus2Scenario::preset("type-iv", 1).is_err());
        assert!(Genus2Scenario::new(TowerSpec::new(3, 1), "0", "0", "0").is_err());
    }

    #[test]
    fn type_one_split_and_discriminant() {
        let s = Genus2Scenario::preset("type-i", 1).unwrap();
        let split = s.type_one_split().unwrap();
        assert!(split.reductions_match);
        let d = s.discriminant_identity(&split).unwrap();
        assert_eq!(d.v_scaled, val(0, 1));
        assert!(d.residue_match);
        assert_eq!((d.v_disc_t1, d.v_disc_t2, d.v_resultant), (val(8, 1), val(8, 1), val(0, 1)));
        assert!(d.factorization_holds);
    }

    #[test]
    fn classification() {
        let kinds: Vec<DegenerationType> =
            PRESETS.iter().map(|p| Genus2Scenario::preset(p, 2).unwrap().classify().unwrap().kind).collect();
        assert_eq!(kinds, [DegenerationType::I, DegenerationType::II, DegenerationType::III]);
        let c = Genus2Scenario::preset("type-i", 2).unwrap().classify().unwrap();
        assert_eq!(c.unit_condition, Some(true));
    }

    #[test]
    fn type_two() {
        let a = Genus2Scenario::preset("type-ii", 1).unwrap().type_two_analysis().unwrap();
        assert_eq!(a.root_valuations, [(val(7, 24), 8)]);
        assert_eq!(a.slope_denominator, 8);
        assert_eq!(a.delta, [(val(4, 9), 3), (val(1, 3), 4)]);
        assert_eq!(a.group_order, 128);
        assert!(a.surjective);
    }

    #[test]
    fn type_one() {
        let a = Genus2Scenario::preset("type-i", 2).unwrap().type_one_analysis().unwrap();
        assert_eq!((a.cert1, a.cert2), (CertReason::SingleSlopeDenominator, CertReason::KeyPolynomialDenominator));
        assert_eq!((a.g1.kummer_s, a.g1.top_break), (117, 3));
        assert_eq!((a.g2.kummer_s, a.g2.top_break), (51, 69));
        let breaks: Vec<(i64, u64)> = a.lower.breaks.iter().map(|b| (b.at.to_integer(), b.order)).collect();
        assert_eq!(breaks, [(1, 64), (3, 16), (31, 8), (543, 2)]);
        assert!(a.disjoint_breaks);
        assert_eq!(a.conductor.sw, 45);
        assert_eq!(a.group_order, 64);
    }
}
