//! JSON forms of core values: valuations, filtration profiles, fixed
//! dimension tables, conductor reports and tower specs.

use std::collections::BTreeMap;

use ramlab_core::conductor::{ConductorReport, FixedDimTable};
use ramlab_core::filtration::{Break, FiltrationProfile, Mode};
use ramlab_core::residue::Fq;
use ramlab_core::tower::{RamifiedStep, TowerSpec};
use ramlab_core::val::Val;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

/// Integers as JSON numbers, other rationals as "a/b" strings.
pub fn val_json(v: Val) -> Value {
    if v.is_integer() {
        json!(v.to_integer())
    } else {
        json!(format!("{}/{}", v.numer(), v.denom()))
    }
}

pub fn parse_val(s: &str) -> Result<Val, CliError> {
    let s = s.trim();
    let bad = || CliError::Config(format!("{:?} is not a rational number", s));
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == 0 {
                return Err(bad());
            }
            Ok(Val::new(a, b))
        }
        None => Ok(Val::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn val_from_json(v: &Value) -> Result<Val, CliError> {
    match v {
        Value::Number(n) => {
            n.as_i64().map(Val::from_integer).ok_or_else(|| CliError::Config(format!("{} is not an integer", n)))
        }
        Value::String(s) => parse_val(s),
        _ => Err(CliError::Config(format!("{} is not a valuation", v))),
    }
}

pub fn valuations_json(vs: &[(Val, usize)]) -> Value {
    Value::Array(vs.iter().map(|&(v, m)| json!([val_json(v), m])).collect())
}

/// `{"group": .., "mode": "lower", "breaks": [[at, label, order], ..]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileJson {
    pub group: String,
    pub mode: String,
    pub breaks: Vec<(Value, String, u64)>,
}

pub fn profile_json(p: &FiltrationProfile) -> ProfileJson {
    ProfileJson {
        group: p.group.clone(),
        mode: String::from(match p.mode {
            Mode::Lower => "lower",
            Mode::Upper => "upper",
        }),
        breaks: p.breaks.iter().map(|b| (val_json(b.at), b.label.clone(), b.order)).collect(),
    }
}

pub fn profile_value(p: &FiltrationProfile) -> Value {
    serde_json::to_value(profile_json(p)).expect("profile serializes")
}

impl ProfileJson {
    pub fn to_profile(&self) -> Result<FiltrationProfile, CliError> {
        let mode = match self.mode.as_str() {
            "lower" => Mode::Lower,
            "upper" => Mode::Upper,
            m => return Err(CliError::Config(format!("mode {:?} is neither lower nor upper", m))),
        };
        let breaks = self
            .breaks
            .iter()
            .map(|(at, label, order)| Ok(Break { at: val_from_json(at)?, label: label.clone(), order: *order }))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(FiltrationProfile::new(self.group.clone(), mode, breaks)?)
    }
}

/// `q8-A-B`: Q8 with lower breaks A (Q8) and B (center, order 2).
pub fn named_profile(name: &str) -> Option<FiltrationProfile> {
    let rest = name.strip_prefix("q8-")?;
    let (a, b) = rest.split_once('-')?;
    let (a, b): (i64, i64) = (a.parse().ok()?, b.parse().ok()?);
    FiltrationProfile::lower("Q8", &[(a, "Q8", 8), (b, "Z", 2)]).ok()
}

/// A profile given by preset name, inline JSON or a JSON file path.
pub fn load_profile(arg: &str) -> Result<FiltrationProfile, CliError> {
    if let Some(p) = named_profile(arg) {
        return Ok(p);
    }
    let text = if arg.trim_start().starts_with('{') { arg.to_string() } else { read_file(arg)? };
    let pj: ProfileJson = serde_json::from_str(&text).map_err(|e| CliError::Config(format!("profile: {}", e)))?;
    pj.to_profile()
}

pub fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", path, e)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimsJson {
    /// Metadata naming the variety the table was computed for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<String>,
    pub genus: u32,
    #[serde(default)]
    pub ell: Option<u64>,
    pub dims: BTreeMap<String, u32>,
}

impl DimsJson {
    pub fn to_table(&self) -> Result<FixedDimTable, CliError> {
        let dims: Vec<(&str, u32)> = self.dims.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        Ok(FixedDimTable::new(self.genus, self.ell.unwrap_or(0), &dims)?)
    }
}

pub fn dims_value(t: &FixedDimTable) -> Value {
    json!({"genus": t.genus, "ell": t.ell, "dims": t.dims})
}

pub fn conductor_value(r: &ConductorReport) -> Value {
    let ledger: Vec<Value> = r
        .ledger
        .iter()
        .map(|c| {
            json!({
                "from": c.from,
                "to": c.to,
                "label": c.label,
                "order": c.order,
                "codim": c.codim,
                "amount": val_json(c.amount),
            })
        })
        .collect();
    json!({"epsilon": r.epsilon, "sw": r.sw, "f": r.f, "ledger": ledger})
}

/// `{"p": 2, "f_ur": 8, "steps": [{"radical": {"m": 15, "radicand": "p"}}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerJson {
    pub p: u64,
    #[serde(default = "default_f_ur")]
    pub f_ur: usize,
    #[serde(default)]
    pub steps: Vec<StepJson>,
}

pub const DEFAULT_F_UR: usize = 8;

fn default_f_ur() -> usize {
    DEFAULT_F_UR
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum StepJson {
    Radical {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        m: u32,
        radicand: String,
    },
    Cyclotomic {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Eisenstein {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        coeffs: Vec<String>,
    },
}

impl TowerJson {
    /// Unnamed steps are called lambda (cyclotomic) or g1, g2, ... by position.
    pub fn to_spec(&self) -> TowerSpec {
        let mut spec = TowerSpec::new(self.p, self.f_ur);
        for (i, s) in self.steps.iter().enumerate() {
            let fallback = format!("g{}", i + 1);
            spec.steps.push(match s {
                StepJson::Radical { name, m, radicand } => {
                    RamifiedStep::Radical { name: name.clone().unwrap_or(fallback), m: *m, radicand: radicand.clone() }
                }
                StepJson::Cyclotomic { name } => {
                    RamifiedStep::Cyclotomic { name: name.clone().unwrap_or_else(|| String::from("lambda")) }
                }
                StepJson::Eisenstein { name, coeffs } => {
                    RamifiedStep::Eisenstein { name: name.clone().unwrap_or(fallback), coeffs: coeffs.clone() }
                }
            });
        }
        spec
    }

    pub fn from_spec(spec: &TowerSpec) -> Self {
        TowerJson {
            p: spec.p,
            f_ur: spec.f_ur,
            steps: spec
                .steps
                .iter()
                .map(|s| match s {
                    RamifiedStep::Radical { name, m, radicand } => {
                        StepJson::Radical { name: Some(name.clone()), m: *m, radicand: radicand.clone() }
                    }
                    RamifiedStep::Cyclotomic { name } => StepJson::Cyclotomic { name: Some(name.clone()) },
                    RamifiedStep::Eisenstein { name, coeffs } => {
                        StepJson::Eisenstein { name: Some(name.clone()), coeffs: coeffs.clone() }
                    }
                })
                .collect(),
        }
    }
}

pub fn load_tower(arg: &str) -> Result<TowerJson, CliError> {
    let text = if arg.trim_start().starts_with('{') { arg.to_string() } else { read_file(arg)? };
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("tower: {}", e)))
}

/// A residue class in the basis 1, t, ..., e.g. "1+t^2".
pub fn fq_string(a: &Fq) -> String {
    let terms: Vec<String> =
        a.0.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => String::from("t"),
                (1, c) => format!("{}t", c),
                (i, 1) => format!("t^{}", i),
                (i, c) => format!("{}t^{}", c, i),
            })
            .collect();
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join("+")
    }
}

/// A residue polynomial in Y, highest degree first: "Y^4 + 1".
pub fn fq_poly_string(f: &[Fq]) -> String {
    let mut terms = Vec::new();
    for (i, c) in f.iter().enumerate().rev() {
        let s = fq_string(c);
        if s == "0" {
            continue;
        }
        let coeff = if s.contains('+') { format!("({})", s) } else { s };
        terms.push(match (i, coeff.as_str()) {
            (0, _) => coeff.clone(),
            (1, "1") => String::from("Y"),
            (1, _) => format!("{}*Y", coeff),
            (_, "1") => format!("Y^{}", i),
            _ => format!("{}*Y^{}", coeff, i),
        });
    }
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_round_trip() {
        let text =
            r#"{"group":"Q8xQ8","mode":"upper","breaks":[[1,"Q8xQ8",64],["3/2","ZxQ8",16],[5,"1xQ8",8],[21,"1xZ",2]]}"#;
        let pj: ProfileJson = serde_json::from_str(text).unwrap();
        let p = pj.to_profile().unwrap();
        assert_eq!(p.breaks[1].at, Val::new(3, 2));
        assert_eq!(serde_json::to_string(&profile_json(&p)).unwrap(), text);
    }

    #[test]
    fn named_profiles() {
        let p = named_profile("q8-5-69").unwrap();
        assert_eq!(p.breaks.len(), 2);
        assert!(named_profile("q8-5").is_none());
        assert!(load_profile("no-such-file.json").is_err());
    }

    #[test]
    fn tower_defaults() {
        let t: TowerJson = serde_json::from_str(r#"{"p":2,"steps":[{"radical":{"m":15,"radicand":"p"}}]}"#).unwrap();
        assert_eq!(t.f_ur, DEFAULT_F_UR);
        let spec = t.to_spec();
        assert_eq!(spec, TowerSpec::new(2, 8).radical("g1", 15, "p"));
        assert_eq!(TowerJson::from_spec(&spec).to_spec(), spec);
        assert!(serde_json::from_str::<TowerJson>(r#"{"p":2,"extra":1}"#).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_val("-7/24").unwrap(), Val::new(-7, 24));
        assert!(parse_val("1/0").is_err());
        assert_eq!(val_json(Val::new(4, 2)), json!(2));
        assert_eq!(fq_poly_string(&[Fq(vec![1]), Fq(vec![0]), Fq(vec![0]), Fq(vec![0]), Fq(vec![1])]), "Y^4 + 1");
    }
}
