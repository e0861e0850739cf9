//! Randomized and exhaustive scans for ideals whose normalized depth function
//! increases somewhere.
//!
//! Sample `index` of a scan is drawn from a ChaCha stream keyed by
//! `(seed, index)`, so results never depend on iteration order or on how the
//! work is split across threads.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::depth::{g_profile, GProfile};
use crate::error::{Error, Result};
use crate::ideal::{full_mask, BitIter, Ideal};
use crate::linalg::FieldSpec;

/// Largest ambient ring a scan accepts.
pub const MAX_SEARCH_VARS: usize = 14;
/// Largest ambient ring for which findings are deduplicated up to relabeling.
pub const MAX_DEDUP_VARS: usize = 8;
/// Redraws allowed before a sample that keeps coming out zero is reported degenerate.
pub const MAX_RESAMPLES: u32 = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub ambient_n: usize,
    /// Inclusive range of generator degrees.
    pub gen_degree: (usize, usize),
    /// Inclusive range for the number of drawn generators. When unset each
    /// candidate support is kept independently with probability `density`.
    pub gen_count: Option<(usize, usize)>,
    pub density: f64,
    pub seed: u64,
    pub sample_count: u64,
    pub primes: Vec<u32>,
    /// Restricts generators to degree two, i.e. to edge ideals of graphs.
    pub edge_ideals_only: bool,
    /// Enumerate every nonempty set of candidate supports instead of sampling.
    pub exhaustive: bool,
    pub exhaustive_cap: u64,
    /// Extra ideals evaluated after the sampled stream, at indices
    /// `stream_len..stream_len + injected.len()`.
    pub injected: Vec<Ideal>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            ambient_n: 6,
            gen_degree: (2, 3),
            gen_count: None,
            density: 0.2,
            seed: 0,
            sample_count: 1000,
            primes: vec![2],
            edge_ideals_only: false,
            exhaustive: false,
            exhaustive_cap: 1 << 20,
            injected: Vec::new(),
        }
    }
}

fn parse_range(key: &str, value: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidConfig(format!("{key}: expected `a` or `a..b`, got `{value}`"));
    match value.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ))
        }
        None => {
            let v = value.trim().parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("{key}: cannot parse `{value}`")))
}

impl SearchConfig {
    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key.trim() {
            "ambient_n" => self.ambient_n = parse_value(key, value)?,
            "gen_degree" => self.gen_degree = parse_range(key, value)?,
            "gen_count" => self.gen_count = Some(parse_range(key, value)?),
            "density" => self.density = parse_value(key, value)?,
            "seed" => self.seed = parse_value(key, value)?,
            "sample_count" => self.sample_count = parse_value(key, value)?,
            "primes" => {
                self.primes = value
                    .split(',')
                    .map(|p| parse_value(key, p))
                    .collect::<Result<_>>()?
            }
            "edge_ideals_only" => self.edge_ideals_only = parse_value(key, value)?,
            "exhaustive" => self.exhaustive = parse_value(key, value)?,
            "exhaustive_cap" => self.exhaustive_cap = parse_value(key, value)?,
            other => return Err(Error::InvalidConfig(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Reads `key = value` lines on top of `self`; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(idx + 1, "expected `key = value`"))?;
            self.set(k, v.trim().trim_matches('"'))?;
        }
        Ok(())
    }

    /// Degree range after applying `edge_ideals_only`.
    pub fn degree_range(&self) -> (usize, usize) {
        if self.edge_ideals_only {
            (2, 2)
        } else {
            self.gen_degree
        }
    }

    pub fn fields(&self) -> Result<Vec<FieldSpec>> {
        self.primes.iter().map(|&p| FieldSpec::new(p)).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.ambient_n;
        if n == 0 || n > MAX_SEARCH_VARS {
            return Err(Error::InvalidConfig(format!(
                "ambient_n = {n} outside 1..={MAX_SEARCH_VARS}"
            )));
        }
        let (lo, hi) = self.degree_range();
        if lo == 0 || lo > hi || hi > n {
            return Err(Error::InvalidConfig(format!(
                "generator degrees {lo}..={hi} invalid for {n} variables"
            )));
        }
        if let Some((a, b)) = self.gen_count {
            if a == 0 || a > b {
                return Err(Error::InvalidConfig(format!(
                    "generator count {a}..={b} invalid"
                )));
            }
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidConfig(format!(
                "density {} outside [0, 1]",
                self.density
            )));
        }
        if self.primes.is_empty() {
            return Err(Error::InvalidConfig("no primes given".into()));
        }
        self.fields()?;
        if let Some(bad) = self
            .injected
            .iter()
            .find(|i| i.ambient_n() != n || i.is_zero())
        {
            return Err(Error::InvalidConfig(format!(
                "injected ideal {bad} is zero or not in {n} variables"
            )));
        }
        Ok(())
    }

    /// Candidate generator supports, ascending by mask.
    pub fn candidates(&self) -> Vec<u64> {
        let (lo, hi) = self.degree_range();
        (1..=full_mask(self.ambient_n))
            .filter(|m| (lo..=hi).contains(&(m.count_ones() as usize)))
            .collect()
    }

    /// Number of nonempty candidate sets an exhaustive scan would visit.
    pub fn exhaustive_size(&self) -> u128 {
        let len = self.candidates().len() as u32;
        if len >= 127 {
            u128::MAX
        } else {
            (1u128 << len) - 1
        }
    }
}

fn draw(cfg: &SearchConfig, candidates: &[u64], index: u64) -> Result<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    let (lo, hi) = cfg.degree_range();
    for _ in 0..MAX_RESAMPLES {
        let masks: Vec<u64> = match cfg.gen_count {
            Some((a, b)) => {
                let count = rng.gen_range(a..=b);
                (0..count)
                    .map(|_| {
                        let d = rng.gen_range(lo..=hi);
                        sample(&mut rng, cfg.ambient_n, d)
                            .into_iter()
                            .fold(0u64, |acc, v| acc | 1u64 << v)
                    })
                    .collect()
            }
            None => candidates
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(cfg.density))
                .collect(),
        };
        let ideal = Ideal::from_masks(cfg.ambient_n, masks)?;
        if !ideal.is_zero() {
            return Ok(ideal);
        }
    }
    Err(Error::DegenerateSample {
        index,
        attempts: MAX_RESAMPLES,
    })
}

/// The ideal drawn for sample `index`; a pure function of `(cfg, index)`.
pub fn random_ideal(cfg: &SearchConfig, index: u64) -> Result<Ideal> {
    cfg.validate()?;
    draw(cfg, &cfg.candidates(), index)
}

/// The ideal at position `index` of an exhaustive scan: the candidate
/// supports selected by the bits of `index` (which must be nonzero).
pub fn exhaustive_ideal(cfg: &SearchConfig, candidates: &[u64], index: u64) -> Result<Ideal> {
    let masks = BitIter(index).map(|b| candidates[b]);
    Ideal::from_masks(cfg.ambient_n, masks)
}

/// Lexicographically smallest sorted generator list over all relabelings of
/// the variables, or `None` above [`MAX_DEDUP_VARS`].
pub fn canonical_form(ideal: &Ideal) -> Option<Vec<u64>> {
    let n = ideal.ambient_n();
    if n > MAX_DEDUP_VARS {
        return None;
    }
    let gens = ideal.gen_masks();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    let mut image = Vec::with_capacity(gens.len());
    loop {
        image.clear();
        image.extend(
            gens.iter()
                .map(|&g| BitIter(g).fold(0u64, |acc, b| acc | 1u64 << perm[b])),
        );
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A sampled ideal whose normalized depth function increases somewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub ideal: Ideal,
    pub profile: GProfile,
    pub violations: Vec<usize>,
    pub field_char: u32,
    pub seed: u64,
    pub index: u64,
}

impl Finding {
    /// Recomputes the profile from the stored ideal and checks the violations.
    pub fn reverify(&self) -> Result<bool> {
        let fresh = g_profile(&self.ideal, FieldSpec::new(self.field_char)?)?;
        Ok(fresh == self.profile && fresh.violations() == self.violations)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub exhaustive: bool,
    /// Stream positions visited per prime (samples or enumerated sets, plus injected ideals).
    pub positions: u64,
    pub primes: Vec<u32>,
    /// Profiles computed, over all primes.
    pub evaluated: u64,
    pub degenerate: u64,
    pub findings: u64,
    pub duplicates: u64,
    /// Evaluations per value of `ν(I)`.
    pub by_nu: BTreeMap<usize, u64>,
    /// Largest `g(k+1) - g(k)` seen, if any ideal had `ν ≥ 2`.
    pub max_increase: Option<i64>,
    pub dedup: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOutcome {
    pub findings: Vec<Finding>,
    pub summary: ScanSummary,
}

#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the ambient rayon pool.
    pub workers: Option<usize>,
    /// Line-delimited JSON log that receives each finding as it is accepted.
    pub log: Option<PathBuf>,
}

enum Evaluation {
    Degenerate,
    Profiled(Ideal, GProfile),
}

/// Scans the configured stream once per prime.
pub fn scan(cfg: &SearchConfig, opts: &ScanOptions) -> Result<ScanOutcome> {
    cfg.validate()?;
    let candidates = cfg.candidates();
    let stream_len = if cfg.exhaustive {
        let size = cfg.exhaustive_size();
        if size > cfg.exhaustive_cap as u128 {
            return Err(Error::SpaceTooLarge {
                size,
                cap: cfg.exhaustive_cap,
            });
        }
        size as u64
    } else {
        cfg.sample_count
    };
    let positions = stream_len + cfg.injected.len() as u64;
    let ideal_at = |index: u64| -> Result<Option<Ideal>> {
        if index >= stream_len {
            return Ok(Some(cfg.injected[(index - stream_len) as usize].clone()));
        }
        if cfg.exhaustive {
            return exhaustive_ideal(cfg, &candidates, index + 1).map(Some);
        }
        match draw(cfg, &candidates, index) {
            Ok(i) => Ok(Some(i)),
            Err(Error::DegenerateSample { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };

    let pool = match opts.workers {
        Some(w) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?,
        ),
        None => None,
    };

    let mut log = match &opts.log {
        Some(path) => Some(OpenOptions::new().create(true).append(true).open(path)?),
        None => None,
    };

    let dedup = cfg.ambient_n <= MAX_DEDUP_VARS;
    let mut summary = ScanSummary {
        exhaustive: cfg.exhaustive,
        positions,
        primes: cfg.primes.clone(),
        dedup,
        ..Default::default()
    };
    let mut findings = Vec::new();
    let mut seen: HashSet<(Vec<u64>, u32)> = HashSet::new();

    for field in cfg.fields()? {
        let evaluate = || -> Result<Vec<Evaluation>> {
            (0..positions)
                .into_par_iter()
                .map(|index| match ideal_at(index)? {
                    None => Ok(Evaluation::Degenerate),
                    Some(ideal) => {
                        let profile = g_profile(&ideal, field)?;
                        Ok(Evaluation::Profiled(ideal, profile))
                    }
                })
                .collect()
        };
        let evaluations = match &pool {
            Some(pool) => pool.install(evaluate)?,
            None => evaluate()?,
        };

        for (index, eval) in evaluations.into_iter().enumerate() {
            let (ideal, profile) = match eval {
                Evaluation::Degenerate => {
                    summary.degenerate += 1;
                    continue;
                }
                Evaluation::Profiled(i, p) => (i, p),
            };
            summary.evaluated += 1;
            *summary.by_nu.entry(profile.nu).or_insert(0) += 1;
            if let Some(inc) = profile.max_increase() {
                summary.max_increase = Some(summary.max_increase.map_or(inc, |m| m.max(inc)));
            }
            let violations = profile.violations();
            if violations.is_empty() {
                continue;
            }
            if dedup {
                let key = canonical_form(&ideal).expect("dedup only at small n");
                if !seen.insert((key, field.characteristic())) {
                    summary.duplicates += 1;
                    continue;
                }
            }
            let finding = Finding {
                ideal,
                profile,
                violations,
                field_char: field.characteristic(),
                seed: cfg.seed,
                index: index as u64,
            };
            if let Some(file) = log.as_mut() {
                append_finding(file, &finding)?;
            }
            summary.findings += 1;
            findings.push(finding);
        }
    }
    Ok(ScanOutcome { findings, summary })
}

fn append_finding(file: &mut File, finding: &Finding) -> Result<()> {
    let mut line = serde_json::to_string(finding)?;
    line.push('\n');
    file.write_all(line.as_bytes())?;
    file.sync_data()?;
    Ok(())
}

/// Reads a findings log written by [`scan`].
pub fn read_findings_log(path: &Path) -> Result<Vec<Finding>> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| Error::parse(idx + 1, e.to_string()))?);
    }
    Ok(out)
}
