//! Scenario configuration files. The JSON schema lives in
//! `schemas/scenario.schema.json`.

use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::json::{read_file, DimsJson, ProfileJson, TowerJson};

pub const PRECISION_ENV: &str = "RAMLAB_PRECISION";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    /// Absolute working precision in units of v(p); falls back to
    /// RAMLAB_PRECISION, then to the library default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    pub scenario: Scenario,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Scenario {
    GoodReduction {
        p: u64,
        n: u32,
        #[serde(default = "default_c")]
        c: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f_ur: Option<usize>,
        /// Also read the L/K filtration off the conjugates of y.
        #[serde(default)]
        galois_roots: bool,
    },
    Genus2 {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        preset: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tower: Option<TowerJson>,
        /// b2, b3, b4 as expressions over the tower.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coeffs: Option<[String; 3]>,
        /// Overrides the preset tower's f_ur.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f_ur: Option<usize>,
        /// f_ur values at which to record the factorization shape of T_f
        /// over the field of a root of its first quartic factor.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        shape_f_ur: Vec<usize>,
    },
    FiltrationAlgebra {
        operation: FiltrationOp,
    },
    Conductor {
        profile: ProfileRef,
        dims: DimsRef,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tame_degree: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<u64>,
    },
    Group {
        name: String,
    },
}

fn default_c() -> String {
    String::from("1")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FiltrationOp {
    Phi { profile: ProfileRef, at: String },
    Psi { profile: ProfileRef, at: String },
    Compose { sub: ProfileRef, quot: ProfileRef, group: String, labels: Vec<(String, String, String)> },
    Product { a: ProfileRef, b: ProfileRef },
    Tame { profile: ProfileRef, degree: u64, p: u64, label: String },
}

/// A preset name such as "q8-1-3", or an inline profile.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProfileRef {
    Name(String),
    Inline(ProfileJson),
}

/// "good-reduction(p,n)", "elliptic-q8xq8", or an inline table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DimsRef {
    Name(String),
    Inline(DimsJson),
}

impl ScenarioConfig {
    pub fn load(path: &str) -> Result<Self, CliError> {
        Self::parse(&read_file(path)?)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let cfg: ScenarioConfig = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.precision.is_some_and(|n| n < 1) {
            return Err(CliError::Config(String::from("precision must be positive")));
        }
        if let Scenario::Genus2 { preset, tower, coeffs, .. } = &self.scenario {
            match (preset, tower, coeffs) {
                (Some(_), None, None) | (None, Some(_), Some(_)) => {}
                _ => {
                    return Err(CliError::Config(String::from("genus2 needs either a preset or both tower and coeffs")))
                }
            }
        }
        Ok(())
    }

    /// Precision from the config, then the environment.
    pub fn effective_precision(&self) -> Result<Option<i64>, CliError> {
        if self.precision.is_some() {
            return Ok(self.precision);
        }
        match std::env::var(PRECISION_ENV) {
            Ok(s) => {
                let n: i64 = s
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Config(format!("{}={:?} is not an integer", PRECISION_ENV, s)))?;
                if n < 1 {
                    return Err(CliError::Config(format!("{} must be positive", PRECISION_ENV)));
                }
                Ok(Some(n))
            }
            Err(_) => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let texts = [
            r#"{"scenario":{"kind":"good-reduction","p":2,"n":1}}"#,
            r#"{"precision":80,"format":"json","scenario":{"kind":"genus2","preset":"type-i"}}"#,
            r#"{"scenario":{"kind":"genus2","tower":{"p":2,"f_ur":2,"steps":[{"radical":{"m":15,"radicand":"p"}}]},"coeffs":["pi^9","1","pi^6"]}}"#,
            r#"{"scenario":{"kind":"filtration-algebra","operation":{"op":"product","a":"q8-1-3","b":"q8-5-69"}}}"#,
            r#"{"scenario":{"kind":"filtration-algebra","operation":{"op":"phi","profile":{"group":"G","mode":"lower","breaks":[[1,"G",8],[3,"Z",2]]},"at":"3"}}}"#,
            r#"{"scenario":{"kind":"conductor","profile":"q8-1-3","dims":{"genus":1,"dims":{"Q8":0,"Z":0}}}}"#,
            r#"{"scenario":{"kind":"group","name":"Q8"}}"#,
        ];
        for t in texts {
            let cfg = ScenarioConfig::parse(t).unwrap();
            let back = serde_json::to_string(&cfg).unwrap();
            assert_eq!(ScenarioConfig::parse(&back).unwrap(), cfg, "{}", t);
        }
        match ScenarioConfig::parse(texts[0]).unwrap().scenario {
            Scenario::GoodReduction { c, f_ur, .. } => assert_eq!((c.as_str(), f_ur), ("1", None)),
            _ => unreachable!(),
        }
    }

    #[test]
    fn rejects_bad_configs() {
        for t in [
            r#"{"scenario":{"kind":"good-reduction","p":2}}"#,
            r#"{"scenario":{"kind":"good-reduction","p":2,"n":1,"typo":0}}"#,
            r#"{"scenario":{"kind":"genus2","preset":"type-i","coeffs":["0","0","0"]}}"#,
            r#"{"scenario":{"kind":"genus2"}}"#,
            r#"{"precision":0,"scenario":{"kind":"group","name":"Q8"}}"#,
            r#"{"scenario":{"kind":"nope"}}"#,
        ] {
            assert!(ScenarioConfig::parse(t).is_err(), "{}", t);
        }
    }
}
