//! Suite configuration.
//!
//! Config files are flat `key = value` lines; `#` starts a comment.
//!
//! ```text
//! pi = {2,3}
//! pi = ~{2}
//! x = nil
//! primes = 2,3,5
//! k = 1,2
//! max_order = 120
//! group_file = groups/a5xc7.txt
//! threads = 4
//! ```
//!
//! `pi`, `x`, `primes`, `k` and `group_file` may repeat and accumulate; the
//! first occurrence replaces the default list.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::HarnessError;
use crate::fitting::ClassExpr;
use crate::primes::{is_prime, PrimeSet};

pub const DEFAULT_MAX_ORDER: usize = 500;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub pis: Vec<PrimeSet>,
    pub xs: Vec<ClassExpr>,
    pub primes: Vec<u64>,
    pub ks: Vec<usize>,
    pub max_order: usize,
    pub group_files: Vec<PathBuf>,
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            pis: ["{2}", "{3}", "{2,3}", "{2,5}", "~{2}"]
                .iter()
                .map(|s| s.parse().expect("valid prime set"))
                .collect(),
            xs: ["triv", "nil", "Epi({2,3,5})"]
                .iter()
                .map(|s| s.parse().expect("valid class"))
                .collect(),
            primes: vec![2, 3, 5],
            ks: vec![1, 2, 3],
            max_order: DEFAULT_MAX_ORDER,
            group_files: Vec::new(),
            threads: 0,
        }
    }
}

/// Settings from one source; `None` leaves the underlying value alone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub pis: Option<Vec<PrimeSet>>,
    pub xs: Option<Vec<ClassExpr>>,
    pub primes: Option<Vec<u64>>,
    pub ks: Option<Vec<usize>>,
    pub max_order: Option<usize>,
    pub group_files: Option<Vec<PathBuf>>,
    pub threads: Option<usize>,
}

fn append<T>(slot: &mut Option<Vec<T>>, items: impl IntoIterator<Item = T>) {
    slot.get_or_insert_with(Vec::new).extend(items);
}

impl Overrides {
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let mut o = Overrides::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| HarnessError::Config { line: i + 1, message };
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| err(format!("expected `key = value`, found `{line}`")))?;
            match key {
                "pi" => {
                    let set: PrimeSet = value.parse().map_err(|e| err(format!("pi: {e}")))?;
                    append(&mut o.pis, [set]);
                }
                "x" => {
                    let x: ClassExpr = value.parse().map_err(|e| err(format!("x: {e}")))?;
                    append(&mut o.xs, [x]);
                }
                "primes" => append(&mut o.primes, parse_list(value, "primes", true).map_err(err)?),
                "k" => {
                    let ks = parse_list(value, "k", false).map_err(err)?;
                    if ks.contains(&0) {
                        return Err(err("k must be at least 1".into()));
                    }
                    append(&mut o.ks, ks.into_iter().map(|k| k as usize));
                }
                "max_order" => o.max_order = Some(parse_number(value, key).map_err(err)? as usize),
                "threads" => o.threads = Some(parse_number(value, key).map_err(err)? as usize),
                "group_file" => append(&mut o.group_files, [PathBuf::from(value)]),
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        Ok(o)
    }
}

fn parse_number(value: &str, key: &str) -> Result<u64, String> {
    value.parse().map_err(|_| format!("{key}: `{value}` is not a number"))
}

fn parse_list(value: &str, key: &str, primes: bool) -> Result<Vec<u64>, String> {
    value
        .split(',')
        .map(|s| {
            let n = parse_number(s.trim(), key)?;
            if primes && !is_prime(n) {
                return Err(format!("{key}: {n} is not prime"));
            }
            Ok(n)
        })
        .collect()
}

impl Config {
    /// Applies overrides; later calls win.
    pub fn with(mut self, o: &Overrides) -> Self {
        if let Some(v) = &o.pis {
            self.pis = v.clone();
        }
        if let Some(v) = &o.xs {
            self.xs = v.clone();
        }
        if let Some(v) = &o.primes {
            self.primes = v.clone();
        }
        if let Some(v) = &o.ks {
            self.ks = v.clone();
        }
        if let Some(v) = o.max_order {
            self.max_order = v;
        }
        if let Some(v) = &o.group_files {
            self.group_files = v.clone();
        }
        if let Some(v) = o.threads {
            self.threads = v;
        }
        self
    }

    /// The settings that determine suite results; excludes the thread count.
    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            pi: self.pis.iter().map(ToString::to_string).collect(),
            x: self.xs.iter().map(ToString::to_string).collect(),
            primes: self.primes.clone(),
            k: self.ks.clone(),
            max_order: self.max_order,
            group_files: self.group_files.iter().map(|p| p.display().to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub pi: Vec<String>,
    pub x: Vec<String>,
    pub primes: Vec<u64>,
    pub k: Vec<usize>,
    pub max_order: usize,
    pub group_files: Vec<String>,
}
