use std::fmt;
use std::path::Path;

use crinv::invariant::Mode;
use crinv::verify::Suite;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subcommand {
    CiInvariant,
    EinsteinTransform,
    ChernExpansion,
    Verify,
}

impl fmt::Display for Subcommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subcommand::CiInvariant => "ci-invariant",
            Subcommand::EinsteinTransform => "einstein-transform",
            Subcommand::ChernExpansion => "chern-expansion",
            Subcommand::Verify => "verify",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    #[default]
    Text,
    Json,
}

/// `n` is a single dimension except for `verify`, which takes a list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NArg {
    One(u32),
    Many(Vec<u32>),
}

impl NArg {
    fn into_list(self) -> Vec<u32> {
        match self {
            NArg::One(n) => vec![n],
            NArg::Many(ns) => ns,
        }
    }
}

/// Either a list of degrees or the string `"symbolic"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DegreesArg {
    Numeric(Vec<i64>),
    Named(String),
}

/// Every setting, all optional; read from a config file and from flags.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct PartialConfig {
    pub subcommand: Option<Subcommand>,
    pub n: Option<NArg>,
    pub r: Option<u32>,
    pub degrees: Option<DegreesArg>,
    pub symbolic: Option<bool>,
    pub phi: Option<String>,
    pub mode: Option<Mode>,
    pub symbolic_n: Option<bool>,
    pub suite: Option<Suite>,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub output: Option<Output>,
}

impl PartialConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }

    /// Values set in `other` win.
    pub fn overlay(self, other: PartialConfig) -> PartialConfig {
        PartialConfig {
            subcommand: other.subcommand.or(self.subcommand),
            n: other.n.or(self.n),
            r: other.r.or(self.r),
            degrees: other.degrees.or(self.degrees),
            symbolic: other.symbolic.or(self.symbolic),
            phi: other.phi.or(self.phi),
            mode: other.mode.or(self.mode),
            symbolic_n: other.symbolic_n.or(self.symbolic_n),
            suite: other.suite.or(self.suite),
            seed: other.seed.or(self.seed),
            trials: other.trials.or(self.trials),
            output: other.output.or(self.output),
        }
    }
}

/// Validated settings, echoed back in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct RunConfig {
    pub subcommand: Subcommand,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<NArg>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degrees: Option<DegreesArg>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub phi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mode: Option<Mode>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub suite: Option<Suite>,
    pub seed: u64,
    pub trials: u64,
    pub output: Output,
}

pub const DEFAULT_VERIFY_N: [u32; 2] = [2, 3];

impl RunConfig {
    pub fn resolve(p: PartialConfig) -> Result<Self, String> {
        let subcommand = p.subcommand.ok_or("no subcommand given")?;
        let trials = p.trials.unwrap_or(100);
        if trials == 0 {
            return Err("--trials must be positive".into());
        }
        let mut cfg = RunConfig {
            subcommand,
            n: None,
            r: None,
            degrees: None,
            phi: None,
            mode: None,
            suite: None,
            seed: p.seed.unwrap_or(0),
            trials,
            output: p.output.unwrap_or_default(),
        };
        let single_n = |n: Option<NArg>| -> Result<Option<u32>, String> {
            match n {
                None => Ok(None),
                Some(NArg::One(n)) => Ok(Some(n)),
                Some(NArg::Many(ns)) if ns.len() == 1 => Ok(Some(ns[0])),
                Some(NArg::Many(_)) => Err(format!("{subcommand} takes a single --n")),
            }
        };
        match subcommand {
            Subcommand::CiInvariant => {
                let n = single_n(p.n)?.ok_or("--n is required")?;
                let phi = p.phi.ok_or("--phi is required")?;
                let degrees = match (p.degrees, p.symbolic.unwrap_or(false)) {
                    (Some(DegreesArg::Named(s)), _) if s == "symbolic" => DegreesArg::Named(s),
                    (Some(DegreesArg::Named(s)), _) => return Err(format!("invalid degrees {s:?}")),
                    (Some(DegreesArg::Numeric(_)), true) => return Err("--degrees and --symbolic conflict".into()),
                    (Some(DegreesArg::Numeric(d)), false) => DegreesArg::Numeric(d),
                    (None, true) => DegreesArg::Named("symbolic".into()),
                    (None, false) => return Err("one of --degrees or --symbolic is required".into()),
                };
                let r = match (&degrees, p.r) {
                    (DegreesArg::Numeric(d), Some(r)) if d.len() != r as usize => {
                        return Err(format!("--r {r} but {} degrees given", d.len()))
                    }
                    (DegreesArg::Numeric(d), r) => r.unwrap_or(d.len() as u32),
                    (_, Some(r)) => r,
                    (_, None) => return Err("--r is required with --symbolic".into()),
                };
                cfg.n = Some(NArg::One(n));
                cfg.r = Some(r);
                cfg.degrees = Some(degrees);
                cfg.phi = Some(phi);
            }
            Subcommand::EinsteinTransform => {
                let n = single_n(p.n)?;
                match (n, p.symbolic_n.unwrap_or(false)) {
                    (Some(_), true) => return Err("--n and --symbolic-n conflict".into()),
                    (None, false) => return Err("one of --n or --symbolic-n is required".into()),
                    _ => {}
                }
                cfg.n = n.map(NArg::One);
                cfg.phi = Some(p.phi.ok_or("--phi is required")?);
                cfg.mode = Some(p.mode.unwrap_or(Mode::Domain));
            }
            Subcommand::ChernExpansion => {
                cfg.n = Some(NArg::One(single_n(p.n)?.ok_or("--n is required")?));
            }
            Subcommand::Verify => {
                let ns = p.n.map(NArg::into_list).unwrap_or_else(|| DEFAULT_VERIFY_N.to_vec());
                if ns.is_empty() || ns.contains(&0) {
                    return Err("--n must list positive dimensions".into());
                }
                cfg.n = Some(NArg::Many(ns));
                cfg.suite = Some(p.suite.unwrap_or(Suite::All));
            }
        }
        Ok(cfg)
    }

    pub fn single_n(&self) -> u32 {
        match &self.n {
            Some(NArg::One(n)) => *n,
            _ => unreachable!("validated"),
        }
    }

    pub fn n_list(&self) -> Vec<u32> {
        self.n.clone().map(NArg::into_list).unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partial(json: &str) -> PartialConfig {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn file_keys_mirror_flags() {
        let p = partial(r#"{"subcommand": "ci-invariant", "n": 2, "degrees": [3, 3, 3], "phi": "c2"}"#);
        let cfg = RunConfig::resolve(p).unwrap();
        assert_eq!(cfg.r, Some(3));
        assert_eq!(cfg.trials, 100);
        let p = partial(r#"{"subcommand": "einstein-transform", "symbolic-n": true, "phi": "c3", "mode": "base"}"#);
        assert_eq!(RunConfig::resolve(p).unwrap().mode, Some(Mode::Base));
        assert!(serde_json::from_str::<PartialConfig>(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = partial(r#"{"subcommand": "verify", "suite": "ring", "trials": 5}"#);
        let flags = PartialConfig { trials: Some(7), ..Default::default() };
        let cfg = RunConfig::resolve(file.overlay(flags)).unwrap();
        assert_eq!((cfg.trials, cfg.suite), (7, Some(Suite::Ring)));
        assert_eq!(cfg.n_list(), DEFAULT_VERIFY_N.to_vec());
    }

    #[test]
    fn rejects_inconsistent_settings() {
        for json in [
            r#"{"subcommand": "ci-invariant", "n": 2, "r": 2, "degrees": [3, 3, 3], "phi": "c2"}"#,
            r#"{"subcommand": "ci-invariant", "n": 2, "symbolic": true, "phi": "c2"}"#,
            r#"{"subcommand": "einstein-transform", "n": 2, "symbolic-n": true, "phi": "c2"}"#,
            r#"{"subcommand": "verify", "trials": 0}"#,
            r#"{"n": 2}"#,
        ] {
            assert!(RunConfig::resolve(partial(json)).is_err(), "{json}");
        }
    }
}
