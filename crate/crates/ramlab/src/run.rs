//! Scenario execution: each kind runs its pipeline and records claims.

use std::collections::BTreeMap;

use ramlab_core::conductor::{
    fixed_dims_elliptic_product, fixed_dims_good_reduction, swan, swan_after_base_change, FixedDimTable,
};
use ramlab_core::filtration::{compose_tower, product_arith_disjoint, tame_base_change, FiltrationProfile};
use ramlab_core::group::{make_named, FiniteGroup};
use ramlab_core::monodromy::genus2::{DegenerationType, Genus2Scenario, PRESETS};
use ramlab_core::monodromy::good_reduction::{AnalyzeOptions, GoodReductionScenario};
use ramlab_core::val::Val;
use serde_json::{json, Value};

use crate::config::{DimsRef, FiltrationOp, ProfileRef, Scenario, ScenarioConfig};
use crate::error::CliError;
use crate::json::{
    conductor_value, dims_value, fq_poly_string, load_profile, parse_val, profile_json, profile_value, val_json,
    valuations_json, TowerJson, DEFAULT_F_UR,
};
use crate::report::Report;

/// (p, n) pairs whose good-reduction values are pinned.
pub const PINNED_GOOD_REDUCTION: [(u64, u32); 3] = [(2, 1), (2, 2), (3, 1)];

/// The type I preset needs F_4 in the residue field; 2 is the cheapest choice.
pub const TYPE_I_DEFAULT_F_UR: usize = 2;

pub fn run(cfg: &ScenarioConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let precision = cfg.effective_precision()?.map(Val::from_integer);
    let mut report = Report::new(serde_json::to_value(&cfg.scenario).expect("config serializes"));
    if let Some(n) = precision {
        report.detail("precision", val_json(n));
    }
    match &cfg.scenario {
        Scenario::GoodReduction { p, n, c, f_ur, galois_roots } => {
            good_reduction(&mut report, *p, *n, c, f_ur.unwrap_or(DEFAULT_F_UR), *galois_roots, precision)?
        }
        Scenario::Genus2 { preset, tower, coeffs, f_ur, shape_f_ur } => {
            let s = match (preset, tower, coeffs) {
                (Some(name), _, _) => {
                    let default = if name == "type-i" { TYPE_I_DEFAULT_F_UR } else { DEFAULT_F_UR };
                    Genus2Scenario::preset(name, f_ur.unwrap_or(default))?
                }
                (None, Some(t), Some([b2, b3, b4])) => {
                    let mut t = t.clone();
                    if let Some(f) = f_ur {
                        t.f_ur = *f;
                    }
                    Genus2Scenario::new(t.to_spec(), b2, b3, b4)?
                }
                _ => return Err(CliError::Config(String::from("genus2 needs a preset or tower and coeffs"))),
            };
            let s = match precision {
                Some(n) => s.with_precision(n),
                None => s,
            };
            genus2(&mut report, &s, preset.as_deref(), shape_f_ur, precision)?
        }
        Scenario::FiltrationAlgebra { operation } => filtration(&mut report, operation)?,
        Scenario::Conductor { profile, dims, tame_degree, p } => {
            conductor(&mut report, &resolve_profile(profile)?, &resolve_dims(dims)?, *tame_degree, *p)?
        }
        Scenario::Group { name } => group_info(&mut report, &make_named(name)?)?,
    }
    Ok(report)
}

fn resolve_profile(r: &ProfileRef) -> Result<FiltrationProfile, CliError> {
    match r {
        ProfileRef::Name(s) => load_profile(s),
        ProfileRef::Inline(pj) => pj.to_profile(),
    }
}

pub fn resolve_dims(r: &DimsRef) -> Result<FixedDimTable, CliError> {
    match r {
        DimsRef::Inline(d) => d.to_table(),
        DimsRef::Name(s) => named_dims(s),
    }
}

/// "good-reduction(p,n)" or "elliptic-q8xq8".
pub fn named_dims(s: &str) -> Result<FixedDimTable, CliError> {
    if s == "elliptic-q8xq8" {
        let mut labels = Vec::new();
        for a in ["1", "Z", "Q8"] {
            for b in ["1", "Z", "Q8"] {
                labels.push(format!("{}x{}", a, b));
            }
        }
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        return Ok(fixed_dims_elliptic_product(&refs)?);
    }
    let inner = s
        .strip_prefix("good-reduction(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| CliError::Config(format!("unknown dims table {:?}", s)))?;
    let (p, n) = inner.split_once(',').ok_or_else(|| CliError::Config(format!("bad dims table {:?}", s)))?;
    let p: u64 = p.trim().parse().map_err(|_| CliError::Config(format!("bad p in {:?}", s)))?;
    let n: u32 = n.trim().parse().map_err(|_| CliError::Config(format!("bad n in {:?}", s)))?;
    Ok(fixed_dims_good_reduction(p, n))
}

fn pin(report: &mut Report, pinned: bool, id: &str, anchor: &str, computed: Value, expected: Value) {
    report.claim(id, anchor, computed, pinned.then_some(expected));
}

fn good_reduction(
    report: &mut Report,
    p: u64,
    n: u32,
    c: &str,
    f_ur: usize,
    galois_roots: bool,
    precision: Option<Val>,
) -> Result<(), CliError> {
    let mut s = GoodReductionScenario::new(p, n, c, f_ur)?;
    if let Some(n) = precision {
        s = s.with_precision(n);
    }
    let a = s.analyze(&AnalyzeOptions { galois_roots })?;
    let (pi, q) = (p as i64, s.q as i64);
    let pinned = PINNED_GOOD_REDUCTION.contains(&(p, n)) && a.hypothesis;
    let anchor = |k: &str| format!("good-reduction.{}", k);
    pin(
        report,
        pinned,
        "step1.root-valuation",
        &anchor("step1.root-valuation"),
        valuations_json(&a.step1.polygon),
        valuations_json(&[(a.step1.formula, (q * q) as usize)]),
    );
    pin(
        report,
        pinned,
        "step5.root-separation",
        &anchor("step5.root-separation"),
        json!([val_json(a.step5.derivative), val_json(a.step5.pairwise), a.step5.holds()]),
        json!([val_json(a.step5.expected), val_json(s.separation_valuation()), true]),
    );
    pin(report, pinned, "step2.binomial", &anchor("step2.binomial"), json!(a.step2.holds), json!(true));
    pin(report, pinned, "step3.recursion", &anchor("step3.recursion"), json!(a.step3.holds()), json!(true));
    pin(report, pinned, "step-a.v-t", &anchor("step-a.v-t"), val_json(a.step_a.v_t), val_json(Val::new(1, q * q)));
    let s_expected = (q + 1) * (pi * q * q - 1);
    pin(report, pinned, "step-d.s", &anchor("step-d.s"), json!(a.step_d.s), json!(s_expected));
    pin(report, pinned, "step-d.shape", &anchor("step-d.shape"), json!(a.step_d.holds(s.q)), json!(true));
    pin(report, pinned, "kummer.s", &anchor("kummer.s"), json!(a.kummer_s), json!(s_expected));
    pin(
        report,
        pinned,
        "different.hyodo",
        &anchor("different.hyodo"),
        json!(a.hyodo_different),
        json!((pi - 1) * (q + 2)),
    );
    let expected_filtration =
        FiltrationProfile::lower("G", &[(1, "G", (pi * q * q) as u64), (q + 1, "Z", p)]).expect("valid profile");
    pin(
        report,
        pinned,
        "filtration.lower",
        &anchor("filtration.lower"),
        profile_value(&a.filtration),
        profile_value(&expected_filtration),
    );
    if let Some(r) = &a.quotient_from_roots {
        pin(
            report,
            pinned,
            "filtration.quotient-from-roots",
            &anchor("filtration.quotient"),
            json!(r.break_values().iter().map(|&v| val_json(v)).collect::<Vec<_>>()),
            json!([1]),
        );
    }
    pin(
        report,
        pinned,
        "group.order",
        &anchor("group.order"),
        json!([a.group_order, a.group_is_extraspecial]),
        json!([pi * q * q, true]),
    );
    pin(
        report,
        pinned,
        "conductor.epsilon",
        &anchor("conductor.epsilon"),
        json!(a.conductor.epsilon),
        json!(q * (pi - 1)),
    );
    pin(report, pinned, "conductor.sw", &anchor("conductor.sw"), json!(a.conductor.sw), json!((q + 1) * (pi - 1)));
    pin(report, pinned, "conductor.f", &anchor("conductor.f"), json!(a.conductor.f), json!((2 * q + 1) * (pi - 1)));
    if let Some(b) = &a.base_change {
        pin(report, pinned, "conductor.sw-after-base-change", &anchor("conductor.base-change"), json!(b.sw), json!(1));
    }
    report.detail("tower", serde_json::to_value(TowerJson::from_spec(&s.spec)).expect("tower serializes"));
    report.detail("q", json!(q));
    report.detail("filtration_lower", profile_value(&a.filtration));
    report.detail("filtration_upper", profile_value(&a.filtration.to_upper()));
    report.detail("conductor", conductor_value(&a.conductor));
    if let Some(b) = &a.base_change {
        report.detail("conductor_after_base_change", conductor_value(b));
        report.detail("tame_degree", json!(s.tame_degree()));
    }
    report.detail("step3_b_valuations", json!(a.step3.b_valuations.iter().map(|&v| val_json(v)).collect::<Vec<_>>()));
    report.detail("hypothesis", json!(a.hypothesis));
    Ok(())
}

fn genus2(
    report: &mut Report,
    s: &Genus2Scenario,
    preset: Option<&str>,
    shape_f_ur: &[usize],
    precision: Option<Val>,
) -> Result<(), CliError> {
    let preset = preset.filter(|p| PRESETS.contains(p));
    let class = s.classify()?;
    let expected_kind = preset.map(|p| match p {
        "type-i" => "I",
        "type-ii" => "II",
        _ => "III",
    });
    report.claim(
        "classification",
        "genus2.classification",
        json!(class.kind.to_string()),
        expected_kind.map(|k| json!(k)),
    );
    report.detail("tower", serde_json::to_value(TowerJson::from_spec(&s.spec)).expect("tower serializes"));
    report.detail("coeffs", json!(s.exprs));
    report.detail("clusters", json!(class.clusters));
    if !class.delta_polygon.is_empty() {
        report.detail("delta_polygon", valuations_json(&class.delta_polygon));
    }
    let pinned = preset.is_some();
    match class.kind {
        DegenerationType::I => {
            let a = s.type_one_analysis()?;
            let reds = json!([fq_poly_string(&a.split.t1_reduction), fq_poly_string(&a.split.t2_reduction)]);
            pin(report, pinned, "split.reductions", "genus2.type-i.split", reds, json!(["Y^4", "Y^4 + 1"]));
            report.claim(
                "split.reductions-match",
                "genus2.type-i.split",
                json!(a.split.reductions_match),
                Some(json!(true)),
            );
            report.claim(
                "discriminant.scaled-valuation",
                "genus2.type-i.discriminant",
                val_json(a.disc.v_scaled),
                Some(json!(0)),
            );
            report.claim(
                "discriminant.residue",
                "genus2.type-i.discriminant",
                json!(a.disc.residue_match),
                Some(json!(true)),
            );
            report.claim(
                "discriminant.factorization",
                "genus2.type-i.discriminant",
                json!(a.disc.factorization_holds),
                Some(json!(true)),
            );
            let g1 = FiltrationProfile::lower("Q8", &[(1, "Q8", 8), (3, "Z", 2)]).expect("valid profile");
            let g2 = FiltrationProfile::lower("Q8", &[(5, "Q8", 8), (69, "Z", 2)]).expect("valid profile");
            pin(
                report,
                pinned,
                "filtration.first",
                "genus2.type-i.tables",
                profile_value(&a.g1.profile),
                profile_value(&g1),
            );
            pin(
                report,
                pinned,
                "filtration.second",
                "genus2.type-i.tables",
                profile_value(&a.g2.profile),
                profile_value(&g2),
            );
            report.claim(
                "filtration.breaks-avoid",
                "genus2.type-i.disjoint",
                json!(a.disjoint_breaks),
                Some(json!(true)),
            );
            let upper = FiltrationProfile::upper(
                "Q8xQ8",
                &[
                    (Val::from_integer(1), "Q8xQ8", 64),
                    (Val::new(3, 2), "ZxQ8", 16),
                    (Val::from_integer(5), "1xQ8", 8),
                    (Val::from_integer(21), "1xZ", 2),
                ],
            )
            .expect("valid profile");
            pin(
                report,
                pinned,
                "filtration.upper",
                "genus2.type-i.tables",
                profile_value(&a.upper),
                profile_value(&upper),
            );
            let lower = json!([1, 3, 31, 543]);
            let got: Vec<Value> = a.lower.break_values().iter().map(|&v| val_json(v)).collect();
            pin(report, pinned, "filtration.lower", "genus2.type-i.tables", json!(got), lower);
            pin(report, pinned, "group.order", "genus2.type-i.group", json!(a.group_order), json!(64));
            pin(report, pinned, "conductor.sw", "genus2.type-i.swan", json!(a.conductor.sw), json!(45));
            report.detail("certificates", json!([format!("{:?}", a.cert1), format!("{:?}", a.cert2)]));
            report.detail("kummer_s", json!([a.g1.kummer_s, a.g2.kummer_s]));
            report.detail(
                "discriminant",
                json!({
                    "v_disc_t1": val_json(a.disc.v_disc_t1),
                    "v_disc_t2": val_json(a.disc.v_disc_t2),
                    "v_resultant": val_json(a.disc.v_resultant),
                }),
            );
            report.detail("filtration_lower", profile_value(&a.lower));
            report.detail("filtration_upper", profile_value(&a.upper));
            report.detail("conductor", conductor_value(&a.conductor));
            if !shape_f_ur.is_empty() {
                factor_shapes(report, s, shape_f_ur, precision)?;
            }
        }
        DegenerationType::II => {
            let a = s.type_two_analysis()?;
            pin(
                report,
                pinned,
                "tf.root-valuations",
                "genus2.type-ii.slope",
                valuations_json(&a.root_valuations),
                valuations_json(&[(Val::new(7, 24), 8)]),
            );
            pin(report, pinned, "tf.slope-denominator", "genus2.type-ii.slope", json!(a.slope_denominator), json!(8));
            pin(
                report,
                pinned,
                "delta.clusters",
                "genus2.type-ii.clusters",
                valuations_json(&a.delta),
                valuations_json(&[(Val::new(4, 9), 3), (Val::new(1, 3), 4)]),
            );
            pin(
                report,
                pinned,
                "group.order",
                "genus2.type-ii.group",
                json!([a.group_order, a.surjective]),
                json!([128, true]),
            );
        }
        DegenerationType::III => {
            let [b2, b3, b4] = &s.exprs;
            let gr = GoodReductionScenario::new(2, 2, b4, s.k.f_ur())?;
            if b2 == "0" && b3 == "0" && gr.spec == s.spec {
                let gr = match precision {
                    Some(n) => gr.with_precision(n),
                    None => gr,
                };
                let a = gr.analyze(&AnalyzeOptions::default())?;
                report.detail("filtration_lower", profile_value(&a.filtration));
                report.detail("conductor", conductor_value(&a.conductor));
                pin(report, pinned, "conductor.f", "genus2.type-iii.conductor", json!(a.conductor.f), json!(9));
                if let Some(b) = &a.base_change {
                    pin(
                        report,
                        pinned,
                        "conductor.sw-after-base-change",
                        "genus2.type-iii.conductor",
                        json!(b.sw),
                        json!(1),
                    );
                }
            } else {
                report.advisory(
                    "conductor",
                    "genus2.type-iii.conductor",
                    json!("only Y^2 = 1 + cX^4 + X^5 over the good-reduction tower is analysed"),
                    None,
                );
            }
        }
    }
    Ok(())
}

/// Shape of T_f over K(y1) at each f_ur; advisory, compared across f_ur.
fn factor_shapes(
    report: &mut Report,
    s: &Genus2Scenario,
    f_urs: &[usize],
    precision: Option<Val>,
) -> Result<(), CliError> {
    let mut shapes = Vec::new();
    for &f in f_urs {
        let mut spec = s.spec.clone();
        spec.f_ur = f;
        let [b2, b3, b4] = &s.exprs;
        let mut t = Genus2Scenario::new(spec, b2, b3, b4)?;
        if let Some(n) = precision {
            t = t.with_precision(n);
        }
        let shape = t.magma_shape()?;
        shapes.push(json!({
            "f_ur": shape.f_ur,
            "over_k": shape.over_k,
            "linear_over_k1": shape.linear_over_k1,
            "t2_roots_over_k1": shape.t2_roots_over_k1,
            "t2_over_k1": format!("{:?}", shape.t2_verdict),
            "matches": shape.matches(),
        }));
    }
    let stable = shapes.windows(2).all(|w| {
        let strip = |v: &Value| {
            let mut v = v.clone();
            v.as_object_mut().expect("object").remove("f_ur");
            v
        };
        strip(&w[0]) == strip(&w[1])
    });
    let all_match = shapes.iter().all(|v| v["matches"] == json!(true));
    report.advisory(
        "factorization-shape",
        "genus2.type-i.factorization",
        json!({"shapes": shapes, "stable": stable, "matches": all_match}),
        Some(json!({"over_k": [4, 4], "linear_over_k1": 4, "t2_roots_over_k1": 0, "stable": true})),
    );
    Ok(())
}

fn filtration(report: &mut Report, op: &FiltrationOp) -> Result<(), CliError> {
    match op {
        FiltrationOp::Phi { profile, at } | FiltrationOp::Psi { profile, at } => {
            let g = resolve_profile(profile)?;
            let x = parse_val(at)?;
            let phi = g.herbrand();
            let is_phi = matches!(op, FiltrationOp::Phi { .. });
            let (f, back) = if is_phi { (phi.clone(), phi.inverse()) } else { (phi.inverse(), phi) };
            let y = f.eval(x);
            let name = if is_phi { "phi" } else { "psi" };
            report.advisory(name, &format!("filtration.{}", name), val_json(y), None);
            report.pinned("round-trip", "filtration.herbrand-inverse", val_json(back.eval(y)), val_json(x));
            report.detail(
                "herbrand",
                json!({
                    "points": f.points.iter().map(|&(a, b)| json!([val_json(a), val_json(b)])).collect::<Vec<_>>(),
                    "slopes": f.slopes.iter().map(|&s| val_json(s)).collect::<Vec<_>>(),
                }),
            );
        }
        FiltrationOp::Compose { sub, quot, group, labels } => {
            let map: BTreeMap<(String, String), String> =
                labels.iter().map(|(a, b, c)| ((a.clone(), b.clone()), c.clone())).collect();
            let r = compose_tower(&resolve_profile(sub)?, &resolve_profile(quot)?, group, &map)?;
            report.advisory("compose", "filtration.compose", profile_value(&r), None);
            report.detail("filtration_lower", profile_value(&r));
            report.detail("filtration_upper", profile_value(&r.to_upper()));
        }
        FiltrationOp::Product { a, b } => {
            let (pa, pb) = (resolve_profile(a)?, resolve_profile(b)?);
            let r = product_arith_disjoint(&pa, &pb)?;
            let known = matches!((a, b), (ProfileRef::Name(x), ProfileRef::Name(y)) if x == "q8-1-3" && y == "q8-5-69");
            let got: Vec<Value> = r.break_values().iter().map(|&v| val_json(v)).collect();
            report.claim("product.upper", "filtration.product", json!(got), known.then(|| json!([1, "3/2", 5, 21])));
            report.advisory(
                "product.breaks-avoid",
                "filtration.disjoint",
                json!(ramlab_core::filtration::breaks_avoid(&pa, &pb)),
                None,
            );
            report.detail("filtration_upper", profile_value(&r));
            report.detail("filtration_lower", profile_value(&r.to_lower()));
        }
        FiltrationOp::Tame { profile, degree, p, label } => {
            let r = tame_base_change(&resolve_profile(profile)?, *degree, *p, label)?;
            report.advisory("tame", "filtration.tame", profile_value(&r), None);
            report.detail("filtration_lower", profile_value(&r));
        }
    }
    Ok(())
}

fn conductor(
    report: &mut Report,
    profile: &FiltrationProfile,
    dims: &FixedDimTable,
    tame_degree: Option<u64>,
    p: Option<u64>,
) -> Result<(), CliError> {
    let r = match tame_degree {
        Some(e) => {
            let p = p.ok_or_else(|| CliError::Config(String::from("a tame base change needs p")))?;
            swan_after_base_change(profile, e, p, dims, "G'")?
        }
        None => swan(profile, dims)?,
    };
    report.advisory("sw", "conductor.swan", json!(r.sw), None);
    report.advisory("f", "conductor.exponent", json!(r.f), None);
    report.pinned("f-is-epsilon-plus-sw", "conductor.exponent", json!(r.f), json!(r.epsilon + r.sw));
    report.detail("conductor", conductor_value(&r));
    report.detail("dims", dims_value(dims));
    report.detail("filtration_lower", serde_json::to_value(profile_json(&profile.to_lower())).expect("profile"));
    Ok(())
}

fn group_info(report: &mut Report, g: &FiniteGroup) -> Result<(), CliError> {
    let extraspecial = g.is_extraspecial().unwrap_or(false);
    report.advisory("order", "group.order", json!(g.order()), None);
    report.advisory("center", "group.center", json!(g.center().order()), None);
    report.advisory("derived", "group.derived", json!(g.derived().order()), None);
    if let Ok(phi) = g.frattini() {
        report.advisory("frattini", "group.frattini", json!(phi.order()), None);
    }
    report.advisory("extraspecial", "group.extraspecial", json!(extraspecial), None);
    if extraspecial {
        let p = g.p_group_prime().expect("extra-special groups are p-groups");
        let mut k = 1u32;
        while (p as usize).pow(2 * k + 1) < g.order() {
            k += 1;
        }
        report.pinned(
            "extraspecial.order",
            "group.extraspecial-order",
            json!(g.order()),
            json!((p as usize).pow(2 * k + 1)),
        );
    }
    let stats: BTreeMap<String, usize> = g.order_statistics().into_iter().map(|(o, c)| (o.to_string(), c)).collect();
    report.detail("name", json!(g.name()));
    report.detail("element_orders", json!(stats));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn cfg(text: &str) -> ScenarioConfig {
        ScenarioConfig::parse(text).unwrap()
    }

    #[test]
    fn product_preset_matches() {
        let r = run(&cfg(
            r#"{"scenario":{"kind":"filtration-algebra","operation":{"op":"product","a":"q8-1-3","b":"q8-5-69"}}}"#,
        ))
        .unwrap();
        assert_eq!(r.claim_by_id("product.upper").unwrap().status, Status::Match);
        assert!(!r.has_mismatch());
    }

    #[test]
    fn herbrand_round_trip() {
        let r = run(&cfg(
            r#"{"scenario":{"kind":"filtration-algebra","operation":{"op":"phi","profile":"q8-1-3","at":"3"}}}"#,
        ))
        .unwrap();
        assert_eq!(r.claim_by_id("phi").unwrap().computed, json!("3/2"));
        assert_eq!(r.claim_by_id("round-trip").unwrap().status, Status::Match);
    }

    #[test]
    fn conductor_and_group() {
        let r = run(&cfg(
            r#"{"scenario":{"kind":"conductor","profile":{"group":"G","mode":"lower","breaks":[[1,"G",8],[3,"Z",2]]},"dims":"good-reduction(2,1)","tame_degree":3,"p":2}}"#,
        ))
        .unwrap();
        assert_eq!(r.claim_by_id("sw").unwrap().computed, json!(1));
        let r = run(&cfg(r#"{"scenario":{"kind":"group","name":"Q8"}}"#)).unwrap();
        assert_eq!(r.claim_by_id("extraspecial.order").unwrap().status, Status::Match);
        assert!(named_dims("elliptic-q8xq8").unwrap().dims.len() == 9);
        assert!(named_dims("nope").is_err());
    }

    #[test]
    fn good_reduction_small() {
        let r = run(&cfg(r#"{"scenario":{"kind":"good-reduction","p":2,"n":1,"f_ur":1}}"#)).unwrap();
        assert!(r.claims.iter().all(|c| c.status == Status::Match), "{}", r.to_json());
        assert_eq!(r.claim_by_id("conductor.f").unwrap().computed, json!(5));
        let unpinned = run(&cfg(r#"{"scenario":{"kind":"good-reduction","p":5,"n":1,"f_ur":1}}"#)).unwrap();
        assert!(unpinned.claims.iter().all(|c| c.status == Status::UnverifiedAdvisory));
    }

    #[test]
    fn genus2_type_two() {
        let r = run(&cfg(r#"{"scenario":{"kind":"genus2","preset":"type-ii","f_ur":1}}"#)).unwrap();
        assert!(r.claims.iter().all(|c| c.status == Status::Match), "{}", r.to_json());
    }
}
