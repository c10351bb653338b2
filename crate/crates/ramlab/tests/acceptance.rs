//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if a
//! required criterion fails. Criterion 9 is advisory and never fails the run.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::Instant;

use ramlab_core::conductor::ELLIPTIC_Q8_FIXED_DIMS;
use ramlab_core::field::ValuedField;
use ramlab_core::filtration::FiltrationProfile;
use ramlab_core::monodromy::genus2::{DegenerationType, Genus2Scenario};
use ramlab_core::monodromy::good_reduction::{AnalyzeOptions, GoodReductionAnalysis, GoodReductionScenario};
use ramlab_core::residue::Fq;
use ramlab_core::val::{val, Val};

#[allow(dead_code)]
#[path = "../../ramlab-core/tests/suites/mod.rs"]
mod suites;

const CASES: [(u64, u32); 3] = [(2, 1), (2, 2), (3, 1)];

type Outcome = Result<String, String>;
type Suite = fn() -> Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

struct GoodReduction {
    p: u64,
    n: u32,
    q: i64,
    v_anc: Val,
    a: GoodReductionAnalysis,
}

fn good_reductions() -> Result<Vec<GoodReduction>, String> {
    CASES
        .iter()
        .map(|&(p, n)| {
            let s = GoodReductionScenario::new(p, n, "1", 1).map_err(err)?;
            let v_anc = s.k.valuation(&s.a_n).map_err(err)? + s.k.valuation(&s.c).map_err(err)?;
            let a = s.analyze(&AnalyzeOptions::default()).map_err(err)?;
            Ok(GoodReduction { p, n, q: s.q as i64, v_anc, a })
        })
        .collect()
}

fn c1(runs: &[GoodReduction]) -> Outcome {
    for r in runs {
        let q2 = r.q * r.q;
        let want = vec![(r.v_anc / q2, q2 as usize)];
        ensure(r.a.step1.polygon == want, || {
            format!("({},{},1): polygon {:?}, want {:?}", r.p, r.n, r.a.step1.polygon, want)
        })?;
    }
    Ok(runs.iter().map(|r| format!("({},{}) {}", r.p, r.n, r.a.step1.polygon[0].0)).collect::<Vec<_>>().join(", "))
}

fn c2(runs: &[GoodReduction]) -> Outcome {
    for r in runs {
        let (p, q) = (r.p as i64, r.q);
        let s = (q + 1) * (p * q * q - 1);
        ensure(r.a.step_d.s == s, || format!("({},{}): s = {}, want {}", r.p, r.n, r.a.step_d.s, s))?;
        ensure(r.a.kummer_s == Some(s), || format!("({},{}): Kummer s = {:?}", r.p, r.n, r.a.kummer_s))?;
        let d = (p - 1) * (q + 2);
        ensure(r.a.hyodo_different == d, || {
            format!("({},{}): v_M(D) = {}, want {}", r.p, r.n, r.a.hyodo_different, d)
        })?;
    }
    Ok(runs
        .iter()
        .map(|r| format!("({},{}) s={} v_M(D)={}", r.p, r.n, r.a.step_d.s, r.a.hyodo_different))
        .collect::<Vec<_>>()
        .join(", "))
}

fn c3(runs: &[GoodReduction]) -> Outcome {
    for r in runs {
        let f = &r.a.filtration;
        let got: Vec<(Val, u64)> = f.breaks.iter().map(|b| (b.at, b.order)).collect();
        let want = vec![(val(1, 1), r.p * (r.q * r.q) as u64), (val(r.q + 1, 1), r.p)];
        ensure(got == want, || format!("({},{}): breaks {:?}, want {:?}", r.p, r.n, got, want))?;
    }
    Ok(String::from("orders (pq^2, p) at (1, q+1) for all three"))
}

fn c4(runs: &[GoodReduction]) -> Outcome {
    let mut fs = Vec::new();
    for r in runs {
        let (p, q) = (r.p as i64, r.q);
        let f = r.a.conductor.f;
        ensure(f == (2 * q + 1) * (p - 1), || format!("({},{}): f = {}", r.p, r.n, f))?;
        let sw = r.a.base_change.as_ref().map(|b| b.sw);
        ensure(sw == Some(1), || format!("({},{}): sw after base change {:?}", r.p, r.n, sw))?;
        fs.push(format!("({},{}) f={}", r.p, r.n, f));
    }
    let f22 = runs.iter().find(|r| (r.p, r.n) == (2, 2)).map(|r| r.a.conductor.f);
    ensure(f22 == Some(9), || format!("f at (2,2) is {:?}", f22))?;
    Ok(fs.join(", "))
}

fn poly_string(c: &[Fq]) -> Vec<String> {
    c.iter().map(|x| format!("{:?}", x)).collect()
}

fn c5(profiles: &mut Vec<FiltrationProfile>) -> Outcome {
    let s = Genus2Scenario::preset("type-i", 2).map_err(err)?;
    let class = s.classify().map_err(err)?;
    ensure(class.kind == DegenerationType::I, || format!("classified as {}", class.kind))?;
    let a = s.type_one_analysis().map_err(err)?;
    let k = s.k.residue_field();
    let (zero, one) = (k.zero(), k.one());
    let y4 = vec![zero.clone(), zero.clone(), zero.clone(), zero.clone(), one.clone()];
    let y4_1 = vec![one.clone(), zero.clone(), zero.clone(), zero, one];
    ensure(a.split.t1_reduction == y4, || format!("T1 reduces to {:?}", poly_string(&a.split.t1_reduction)))?;
    ensure(a.split.t2_reduction == y4_1, || format!("T2 reduces to {:?}", poly_string(&a.split.t2_reduction)))?;
    let d = &a.disc;
    ensure(d.v_scaled == val(0, 1) && d.residue_match && d.factorization_holds, || format!("discriminant {:?}", d))?;
    let lower = a.lower.break_values();
    let want: Vec<Val> = [1, 3, 31, 543].iter().map(|&b| val(b, 1)).collect();
    ensure(lower == want, || format!("lower breaks {:?}", lower))?;
    ensure(a.conductor.sw == 45, || format!("sw = {}", a.conductor.sw))?;
    profiles.extend([a.g1.profile.clone(), a.g2.profile.clone(), a.lower.clone()]);
    Ok(String::from("Y^4, Y^4 + 1; disc ok; lower (1,3,31,543); sw 45"))
}

fn c6() -> Outcome {
    let s = Genus2Scenario::preset("type-ii", 1).map_err(err)?;
    let a = s.type_two_analysis().map_err(err)?;
    ensure(a.root_valuations == vec![(val(7, 24), 8)], || format!("T_f roots {:?}", a.root_valuations))?;
    ensure(a.slope_denominator == 8, || format!("slope denominator {}", a.slope_denominator))?;
    let want = vec![(val(4, 9), 3), (val(1, 3), 4)];
    ensure(a.delta == want, || format!("delta clusters {:?}", a.delta))?;
    ensure(a.group_order == 128 && a.surjective, || format!("order {} surjective {}", a.group_order, a.surjective))?;
    Ok(String::from("7/24 -> 8; 3 at 4/9, 4 at 1/3; order 128"))
}

fn c7(produced: &[FiltrationProfile]) -> Outcome {
    let suites: [(&str, Suite); 6] = [
        ("psi o phi", suites::psi_after_phi),
        ("hilbert profiles", suites::hilbert_on_profiles),
        ("ultrametric", suites::ultrametric_and_additive),
        ("hensel", suites::hensel_split_product),
        ("extraspecial", suites::extraspecial_orders),
        ("hilbert fields", suites::hilbert_on_fields),
    ];
    for (name, f) in suites {
        f().map_err(|e| format!("{}: {}", name, e))?;
    }
    suites::hilbert_on_produced(produced).map_err(|e| format!("hilbert produced: {}", e))?;
    Ok(format!(
        "{} profiles, {} tower elements, {} splits, {} produced filtrations",
        suites::PROFILE_CASES,
        suites::TOWER_CASES,
        suites::HENSEL_CASES,
        produced.len()
    ))
}

fn c8() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/elliptic_fixed_dims.json");
    let text = std::fs::read_to_string(path).map_err(err)?;
    let table: serde_json::Value = serde_json::from_str(&text).map_err(err)?;
    let from_file: BTreeMap<String, u64> = serde_json::from_value(table["dims"].clone()).map_err(err)?;
    let built: BTreeMap<String, u64> = ELLIPTIC_Q8_FIXED_DIMS.iter().map(|&(l, d)| (l.to_string(), d as u64)).collect();
    ensure(from_file == built, || format!("data {:?} vs library {:?}", from_file, built))?;
    let script = concat!(env!("CARGO_MANIFEST_DIR"), "/../../scripts/elliptic_fixed_dims.py");
    match Command::new("python3").arg(script).output() {
        Ok(out) if out.status.success() => {
            let fresh: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(err)?;
            ensure(fresh == table, || format!("script output {} differs from the data file", fresh))?;
            Ok(format!("{:?}, regenerated by the script", built))
        }
        Ok(out) => Err(format!("script failed: {}", String::from_utf8_lossy(&out.stderr))),
        Err(_) => Ok(format!("{:?}; python3 unavailable, script not rerun", built)),
    }
}

fn c9() -> Outcome {
    let mut shapes = Vec::new();
    for f in [8, 16] {
        let shape = Genus2Scenario::preset("type-i", f).map_err(err)?.magma_shape().map_err(err)?;
        ensure(shape.matches(), || format!("f_ur {}: {:?}", f, shape))?;
        shapes.push(shape);
    }
    let strip = |s: &ramlab_core::monodromy::genus2::FactorShape| {
        (s.over_k.clone(), s.linear_over_k1, s.t2_roots_over_k1, s.t2_verdict)
    };
    ensure(strip(&shapes[0]) == strip(&shapes[1]), || format!("{:?} vs {:?}", shapes[0], shapes[1]))?;
    Ok(format!("over K {:?}, {} linear over K(y1), T2 without roots", shapes[0].over_k, shapes[0].linear_over_k1))
}

fn main() -> ExitCode {
    let mut failed = false;
    let mut line = |id: u32, advisory: bool, start: Instant, outcome: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        let tag = if advisory { " (advisory)" } else { "" };
        match outcome {
            Ok(msg) => println!("PASS criterion {}{} [{:.1}s]: {}", id, tag, secs, msg),
            Err(msg) => {
                println!("FAIL criterion {}{} [{:.1}s]: {}", id, tag, secs, msg);
                failed |= !advisory;
            }
        }
    };
    let start = Instant::now();
    let mut produced = Vec::new();
    match good_reductions() {
        Ok(runs) => {
            produced.extend(runs.iter().map(|r| r.a.filtration.clone()));
            line(1, false, start, c1(&runs));
            line(2, false, start, c2(&runs));
            line(3, false, start, c3(&runs));
            line(4, false, start, c4(&runs));
        }
        Err(e) => {
            for id in 1..=4 {
                line(id, false, start, Err(e.clone()));
            }
        }
    }
    let t = Instant::now();
    line(5, false, t, c5(&mut produced));
    let t = Instant::now();
    line(6, false, t, c6());
    let t = Instant::now();
    line(7, false, t, c7(&produced));
    let t = Instant::now();
    line(8, false, t, c8());
    let t = Instant::now();
    line(9, true, t, c9());
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
