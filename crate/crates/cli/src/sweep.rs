//! Seeded random parameter sweeps over combination instances, emitting one
//! machine-readable record per (sample, target) pair.

use std::fmt;
use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use lagcomb::{
    combination_zeros, default_tie_tol, interlace_check, laguerre_zeros, CombinationSpec, Family,
    ParamSet,
};

/// Comparison family a combination is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Target {
    /// `L_n^alpha`
    #[serde(rename = "L_n^alpha")]
    Base,
    /// `L_{n-1}^alpha`
    #[serde(rename = "L_{n-1}^alpha")]
    PrevBase,
    /// `L_n^{alpha+t}`
    #[serde(rename = "L_n^{alpha+t}")]
    Shifted,
    /// `L_{n-1}^{alpha+t}`
    #[serde(rename = "L_{n-1}^{alpha+t}")]
    PrevShifted,
}

impl Target {
    pub fn parse(token: &str) -> Result<Self, String> {
        match token.trim() {
            "base" | "L_n^alpha" => Ok(Target::Base),
            "prev" | "L_{n-1}^alpha" => Ok(Target::PrevBase),
            "shifted" | "L_n^{alpha+t}" => Ok(Target::Shifted),
            "prev-shifted" | "L_{n-1}^{alpha+t}" => Ok(Target::PrevShifted),
            other => Err(format!(
                "unknown target '{other}' (expected base, prev, shifted or prev-shifted)"
            )),
        }
    }

    fn label(self) -> &'static str {
        match self {
            Target::Base => "L_n^alpha",
            Target::PrevBase => "L_{n-1}^alpha",
            Target::Shifted => "L_n^{alpha+t}",
            Target::PrevShifted => "L_{n-1}^{alpha+t}",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub samples: usize,
    pub seed: u64,
    pub n_min: u32,
    pub n_max: u32,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub coeff_min: f64,
    pub coeff_max: f64,
    pub family: Family,
    pub targets: Vec<Target>,
    pub out: Option<String>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl SweepConfig {
    /// Parse a plain-text key=value config. Lines starting with '#' and blank
    /// lines are ignored. `seed` is mandatory.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut samples = None;
        let mut seed = None;
        let mut n_min = 2u32;
        let mut n_max = 10u32;
        let mut alpha_min = -0.9;
        let mut alpha_max = 8.0;
        let mut t_min = 0.1;
        let mut t_max = 2.0;
        let mut coeff_min = -10.0;
        let mut coeff_max = 10.0;
        let mut family = Family::S;
        let mut targets = vec![Target::Base, Target::PrevShifted];
        let mut out = None;
        let mut format = OutputFormat::Csv;

        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value, got '{line}'", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e| format!("line {}: bad value for {key}: {e}", lineno + 1);
            match key {
                "samples" => samples = Some(value.parse::<usize>().map_err(|e| bad(e.to_string()))?),
                "seed" => seed = Some(value.parse::<u64>().map_err(|e| bad(e.to_string()))?),
                "n_min" => n_min = value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?,
                "n_max" => n_max = value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?,
                "alpha_min" => alpha_min = value.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
                "alpha_max" => alpha_max = value.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
                "t_min" => t_min = value.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
                "t_max" => t_max = value.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
                "coeff_min" => coeff_min = value.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
                "coeff_max" => coeff_max = value.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
                "family" => {
                    family = match value {
                        "R" | "r" => Family::R,
                        "S" | "s" => Family::S,
                        other => return Err(bad(format!("unknown family '{other}'"))),
                    }
                }
                "targets" => {
                    targets = value
                        .split(',')
                        .map(Target::parse)
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(bad)?;
                }
                "out" => out = Some(value.to_string()),
                "format" => {
                    format = match value {
                        "csv" => OutputFormat::Csv,
                        "json" => OutputFormat::Json,
                        other => return Err(bad(format!("unknown format '{other}'"))),
                    }
                }
                other => return Err(format!("line {}: unknown key '{other}'", lineno + 1)),
            }
        }

        let samples = samples.ok_or("missing mandatory key 'samples'")?;
        let seed = seed.ok_or("missing mandatory key 'seed' (sweeps must be reproducible)")?;
        let config = SweepConfig {
            samples,
            seed,
            n_min,
            n_max,
            alpha_min,
            alpha_max,
            t_min,
            t_max,
            coeff_min,
            coeff_max,
            family,
            targets,
            out,
            format,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn parse_file(path: &Path) -> Result<Self, String> {
        let text =
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<(), String> {
        if self.samples == 0 {
            return Err("samples must be >= 1".into());
        }
        if self.n_min < 1 || self.n_min > self.n_max {
            return Err(format!(
                "need 1 <= n_min <= n_max, got [{}, {}]",
                self.n_min, self.n_max
            ));
        }
        if self.alpha_min <= -1.0 || self.alpha_min > self.alpha_max {
            return Err(format!(
                "need -1 < alpha_min <= alpha_max, got [{}, {}]",
                self.alpha_min, self.alpha_max
            ));
        }
        if self.t_min > self.t_max || self.alpha_min + self.t_min <= -1.0 {
            return Err(format!(
                "need t_min <= t_max and alpha_min + t_min > -1, got t in [{}, {}]",
                self.t_min, self.t_max
            ));
        }
        if self.coeff_min > self.coeff_max {
            return Err("need coeff_min <= coeff_max".into());
        }
        if self.targets.is_empty() {
            return Err("at least one target is required".into());
        }
        Ok(())
    }
}

/// One row of a sweep: the sampled parameters, the comparison target, and
/// the interlacing verdict.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub family: String,
    pub n: u32,
    pub alpha: f64,
    pub t: f64,
    pub coeff: f64,
    pub target: Target,
    pub verdict: String,
    pub min_gap: f64,
    pub complete: bool,
}

pub const SWEEP_CSV_HEADER: &str = "family,n,alpha,t,coeff,target,verdict,min_gap,complete";

impl SweepRecord {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.alpha,
            self.t,
            self.coeff,
            self.target,
            self.verdict,
            self.min_gap,
            self.complete
        )
    }
}

/// Run the sweep; records come out in deterministic sample order.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>, lagcomb::Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut records = Vec::with_capacity(config.samples * config.targets.len());

    for _ in 0..config.samples {
        let n = rng.gen_range(config.n_min..=config.n_max);
        let alpha = rng.gen_range(config.alpha_min..=config.alpha_max);
        let t = rng.gen_range(config.t_min..=config.t_max);
        let mut coeff = rng.gen_range(config.coeff_min..=config.coeff_max);
        while coeff == 0.0 {
            coeff = rng.gen_range(config.coeff_min..=config.coeff_max);
        }

        let spec = CombinationSpec::new(config.family, ParamSet { n, alpha, t, coeff })?;
        let combo = combination_zeros(&spec)?;

        for &target in &config.targets {
            let (tn, talpha) = match target {
                Target::Base => (n, alpha),
                Target::PrevBase => (n - 1, alpha),
                Target::Shifted => (n, alpha + t),
                Target::PrevShifted => (n - 1, alpha + t),
            };
            if tn < 1 {
                continue; // n = 1 has no lower-degree comparison
            }
            let other = laguerre_zeros(tn, talpha)?;
            let report = interlace_check(&combo, &other, default_tie_tol(&combo, &other))?;
            records.push(SweepRecord {
                family: config.family.to_string(),
                n,
                alpha,
                t,
                coeff,
                target,
                verdict: report.verdict.to_string(),
                min_gap: report.min_gap,
                complete: combo.complete,
            });
        }
    }
    Ok(records)
}
