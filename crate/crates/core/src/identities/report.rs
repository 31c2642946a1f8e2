use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closed integer interval `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct ParamRange {
    lo: i64,
    hi: i64,
}

impl ParamRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidRange(format!("{lo}..{hi} is empty")));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl TryFrom<(i64, i64)> for ParamRange {
    type Error = Error;
    fn try_from((lo, hi): (i64, i64)) -> Result<Self> {
        Self::new(lo, hi)
    }
}

impl From<ParamRange> for (i64, i64) {
    fn from(r: ParamRange) -> Self {
        (r.lo, r.hi)
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    /// `lo..hi`, inclusive on both ends. A bare integer is the one-point range.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRange(format!("malformed range `{s}`, expected lo..hi"));
        let s = s.trim();
        match s.split_once("..") {
            Some((lo, hi)) => {
                let lo = lo.trim().parse().map_err(|_| bad())?;
                let hi = hi.trim().parse().map_err(|_| bad())?;
                Self::new(lo, hi)
            }
            None => {
                let v = s.parse().map_err(|_| bad())?;
                Self::new(v, v)
            }
        }
    }
}

/// Ranges for the identity parameters. Unused parameters are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<ParamRange>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<ParamRange>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<ParamRange>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<ParamRange>,
}

impl GridSpec {
    pub fn get(&self, param: char) -> Option<ParamRange> {
        match param {
            'a' => self.a,
            'b' => self.b,
            'n' => self.n,
            'k' => self.k,
            _ => None,
        }
    }

    pub fn set(&mut self, param: char, r: ParamRange) {
        match param {
            'a' => self.a = Some(r),
            'b' => self.b = Some(r),
            'n' => self.n = Some(r),
            'k' => self.k = Some(r),
            _ => {}
        }
    }

    /// `self` with every range present in `overrides` replaced.
    pub fn overridden_by(&self, overrides: &GridSpec) -> GridSpec {
        GridSpec {
            a: self.a.and(overrides.a).or(self.a),
            b: self.b.and(overrides.b).or(self.b),
            n: self.n.and(overrides.n).or(self.n),
            k: self.k.and(overrides.k).or(self.k),
        }
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in ['a', 'b', 'n', 'k'] {
            if let Some(r) = self.get(p) {
                if !first {
                    f.write_str(", ")?;
                }
                write!(f, "{p} in {r}")?;
                first = false;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity over a grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub grid: GridSpec,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({}): checked {}, failures {}",
            self.identity,
            if self.passed() { "PASS" } else { "FAIL" },
            self.grid,
            self.checked,
            self.failures.len()
        )?;
        for fail in &self.failures {
            let params: Vec<String> = fail
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, "\n  at {}", params.join(" "))?;
            if let Some(d) = &fail.detail {
                write!(f, " [{d}]")?;
            }
            write!(f, "\n    lhs: {}\n    rhs: {}", fail.lhs, fail.rhs)?;
        }
        Ok(())
    }
}
