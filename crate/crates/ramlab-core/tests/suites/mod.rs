//! Property suites shared by the core tests and the acceptance runner. Each
//! runs a fixed number of cases from a fixed seed and reports the first
//! failure after shrinking.

use std::sync::OnceLock;

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use ramlab_core::ext::SimpleExtension;
use ramlab_core::field::ValuedField;
use ramlab_core::filtration::{filtration_from_roots, Break, FiltrationProfile, HerbrandFn, Mode};
use ramlab_core::group::{extraspecial, q8, ExtraspecialType, FiniteGroup};
use ramlab_core::newton::{hensel_split, roots_in_field};
use ramlab_core::poly::DensePoly;
use ramlab_core::tower::{TowerElement, TowerField, TowerSpec};
use ramlab_core::val::{val, Val};

pub const PROFILE_CASES: u32 = 200;
pub const TOWER_CASES: u32 = 10_000;
pub const HENSEL_CASES: u32 = 100;

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, max_global_rejects: 100_000, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// A lower profile: optional tame step at 0, then wild breaks with orders
/// dropping by powers of p.
pub fn profile() -> impl Strategy<Value = FiltrationProfile> {
    (prop_oneof![Just(2u64), Just(3), Just(5)], 1u64..4, proptest::collection::vec((1i64..12, 1u32..3), 1..4)).prop_map(
        |(p, tame, steps)| {
            let tame = if tame % p == 0 { 1 } else { tame };
            let wild: u64 = steps.iter().map(|&(_, k)| p.pow(k)).product();
            let mut breaks = Vec::new();
            if tame > 1 {
                breaks.push(Break { at: Val::zero(), label: "G0".into(), order: tame * wild });
            }
            let (mut at, mut order) = (0i64, wild);
            for (gap, k) in steps {
                at += gap;
                breaks.push(Break { at: Val::from_integer(at), label: format!("G{}", at), order });
                order /= p.pow(k);
            }
            FiltrationProfile::new("G", Mode::Lower, breaks).unwrap()
        },
    )
}

/// psi(phi(x)) = x = phi(psi(x)), psi o phi is the identity map, and
/// lower -> upper -> lower is the identity on profiles.
pub fn psi_after_phi() -> Result<(), String> {
    report(runner(PROFILE_CASES).run(&(profile(), 0i64..400, 1i64..7), |(g, x, d)| {
        let phi = g.herbrand();
        let psi = phi.inverse();
        let x = val(x, d);
        prop_assert_eq!(psi.eval(phi.eval(x)), x);
        prop_assert_eq!(phi.eval(psi.eval(x)), x);
        prop_assert_eq!(psi.compose(&phi), HerbrandFn::identity());
        prop_assert_eq!(g.to_upper().to_lower(), g);
        Ok(())
    }))
}

/// sum of i_G(sigma) over sigma != 1 equals the different exponent.
pub fn hilbert_on_profiles() -> Result<(), String> {
    report(runner(PROFILE_CASES).run(&profile(), |g| {
        let total: i64 = g.i_g_distribution().iter().map(|&(i, n)| i * n as i64).sum();
        prop_assert_eq!(total, g.different_exponent());
        Ok(())
    }))
}

fn tower(which: usize) -> &'static TowerField {
    static TOWERS: OnceLock<[TowerField; 3]> = OnceLock::new();
    &TOWERS.get_or_init(|| {
        [
            TowerSpec::new(2, 2).radical("pi", 3, "p").build().unwrap(),
            TowerSpec::new(3, 1).cyclotomic("lambda").build().unwrap(),
            TowerSpec::new(5, 2).build().unwrap(),
        ]
    })[which]
}

fn element(k: &TowerField, shift: i64, digits: &[(i64, i64)]) -> TowerElement {
    let t = k.residue_generator();
    let pi = k.uniformizer();
    let mut x = k.zero();
    for (i, &(a, b)) in digits.iter().enumerate() {
        let c = k.add(&k.from_int(a), &k.mul(&k.from_int(b), &t));
        x = k.add(&x, &k.mul(&c, &k.pow(&pi, i as u64)));
    }
    k.mul(&x, &k.uniformizer_pow(shift).unwrap())
}

fn digits() -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-4i64..5, -4i64..5), 1..6)
}

/// v(xy) = v(x) + v(y), v(1/x) = -v(x), v(x + y) >= min with equality when
/// the valuations differ.
pub fn ultrametric_and_additive() -> Result<(), String> {
    let strategy = (0usize..3, -3i64..4, digits(), -3i64..4, digits());
    report(runner(TOWER_CASES).run(&strategy, |(which, s, a, t, b)| {
        let k = tower(which);
        let x = element(k, s, &a);
        let y = element(k, t, &b);
        prop_assume!(!k.is_zero(&x) && !k.is_zero(&y));
        let (vx, vy) = (k.valuation(&x).unwrap(), k.valuation(&y).unwrap());
        prop_assert_eq!(k.valuation(&k.mul(&x, &y)).unwrap(), vx + vy);
        let sum = k.add(&x, &y);
        if !k.is_zero(&sum) {
            let vs = k.valuation(&sum).unwrap();
            prop_assert!(vs >= vx.min(vy));
            if vx != vy {
                prop_assert_eq!(vs, vx.min(vy));
            }
        }
        prop_assert_eq!(k.valuation(&k.inv(&x).unwrap()).unwrap(), -vx);
        Ok(())
    }))
}

pub fn monic(k: &TowerField, low: &[i64]) -> DensePoly<TowerElement> {
    let mut c = low.to_vec();
    c.push(1);
    DensePoly::from_ints(k, &c)
}

/// Products of monic polynomials with coprime reductions split back into
/// factors whose product is the input.
pub fn hensel_split_product() -> Result<(), String> {
    let coeffs = || proptest::collection::vec(-9i64..10, 1..4);
    let strategy = (prop_oneof![Just(2u64), Just(3)], coeffs(), coeffs());
    report(runner(HENSEL_CASES).run(&strategy, |(p, a, b)| {
        let k = TowerField::unramified(p, 1).unwrap();
        let (fa, fb) = (monic(&k, &a), monic(&k, &b));
        let g = k.residue_field().poly_gcd(&fa.reduction(&k).unwrap(), &fb.reduction(&k).unwrap());
        prop_assume!(g.len() == 1);
        let f = fa.mul(&k, &fb);
        let parts = hensel_split(&k, &f).unwrap();
        prop_assert!(parts.len() >= 2);
        let prod = parts.iter().skip(1).fold(parts[0].clone(), |acc, q| acc.mul(&k, q));
        let diff = prod.sub(&k, &f).trim(&k);
        prop_assert!(diff.coeffs.iter().all(|c| k.is_zero(c)), "{:?}", diff);
        Ok(())
    }))
}

/// Every extra-special group the constructors build has order p^(2n+1); a
/// direct product of two of them is not extra-special.
pub fn extraspecial_orders() -> Result<(), String> {
    for p in [2u64, 3, 5] {
        for n in 1..=2usize {
            if p.pow(2 * n as u32 + 1) > 1000 {
                continue;
            }
            let kinds: &[ExtraspecialType] =
                if p == 2 { &[ExtraspecialType::Plus, ExtraspecialType::Minus] } else { &[ExtraspecialType::Plus] };
            for &kind in kinds {
                let g = extraspecial(p, n, kind).map_err(|e| e.to_string())?;
                if g.is_extraspecial().map_err(|e| e.to_string())? && g.order() as u64 != p.pow(2 * n as u32 + 1) {
                    return Err(format!("{} has order {}", g.name(), g.order()));
                }
                if !g.is_extraspecial().map_err(|e| e.to_string())? {
                    return Err(format!("{} is not extra-special", g.name()));
                }
            }
        }
    }
    let q8q8 = FiniteGroup::direct_product(&q8(), &q8()).map_err(|e| e.to_string())?;
    if q8q8.is_extraspecial().map_err(|e| e.to_string())? {
        return Err(String::from("Q8 x Q8 reported extra-special"));
    }
    Ok(())
}

/// v_L(D) read as v_L(g'(y)) for Eisenstein g against the sum of i_G over
/// the Galois group found from the conjugates of y.
pub fn hilbert_on_fields() -> Result<(), String> {
    let cases: [(u64, &[i64]); 5] =
        [(2, &[-2, 0]), (2, &[2, 2]), (2, &[2, 4, 6, 4]), (3, &[3, 3]), (3, &[3, 9, 18, 21, 15, 6])];
    for (p, low) in cases {
        let k = TowerField::unramified(p, 1).unwrap();
        let g = monic(&k, low);
        let l = SimpleExtension::new(k.clone(), &g).map_err(|e| e.to_string())?;
        let y = l.generator();
        let gl = DensePoly::new(g.coeffs.iter().map(|c| l.embed(c)).collect());
        let roots: Vec<_> = roots_in_field(&l, &gl).map_err(|e| e.to_string())?.into_iter().map(|(r, _)| r).collect();
        let profile = filtration_from_roots(&l, &roots, &y, "G").map_err(|e| e.to_string())?;
        let d = gl.derivative(&l).eval(&l, &y);
        let vd = l.valuation(&d).map_err(|e| e.to_string())? * Val::from_integer(l.ram_index());
        let total: i64 = profile.i_g_distribution().iter().map(|&(i, n)| i * n as i64).sum();
        if !vd.is_integer() || total != vd.to_integer() || profile.different_exponent() != total {
            return Err(format!("{:?}: sum i_G = {}, v_L(g'(y)) = {}", low, total, vd));
        }
        if profile.order() != g.degree().unwrap() as u64 {
            return Err(format!("{:?}: group order {}", low, profile.order()));
        }
    }
    Ok(())
}

/// Sum of i_G against the different on filtrations the pipelines produce.
pub fn hilbert_on_produced(profiles: &[FiltrationProfile]) -> Result<(), String> {
    for g in profiles {
        let total: i64 = g.i_g_distribution().iter().map(|&(i, n)| i * n as i64).sum();
        if total != g.different_exponent() {
            return Err(format!("{}: sum i_G = {}, different {}", g.group, total, g.different_exponent()));
        }
    }
    Ok(())
}
