//! Seeded fuzz campaigns over the four statements.
//!
//! Trial `k` of a campaign with seed `s` draws from a ChaCha8 stream
//! (`rand_chacha::ChaCha8Rng::seed_from_u64(s)` with `set_stream(k)`), so
//! every trial is reproducible on its own and trials can run in parallel.
//! Reports are collected in trial order, then stably sorted failures first,
//! which makes the JSON output byte-identical for identical configs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::identities::{
    chu_vandermonde_check, identity_b_sides, identity_c_sides, inequality_a_check,
    random_polynomial, Density, RandomSpec, Statement, VerificationReport,
};
use crate::poly::Polynomial;

/// Largest `r`, `s`, `p` drawn by a Chu–Vandermonde campaign.
pub const CHU_FUZZ_MAX: u32 = 40;
/// Largest dimension drawn when [`FuzzConfig::dimension`] is unset.
pub const DEFAULT_MAX_DIMENSION: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub trials: u64,
    pub seed: u64,
    /// Fixed dimension for every trial; `None` draws it from
    /// `1..=DEFAULT_MAX_DIMENSION` per trial.
    pub dimension: Option<usize>,
    /// Each polynomial draws its degree from `0..=max_degree`.
    pub max_degree: u32,
    pub density: Density,
    pub coefficient_bound: u32,
    /// Draw only homogeneous polynomials. Always on for the inequality.
    pub homogeneous: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            trials: 100,
            seed: 0,
            dimension: None,
            max_degree: 4,
            density: Density::new(1, 2).expect("valid density"),
            coefficient_bound: 5,
            homogeneous: false,
        }
    }
}

impl FuzzConfig {
    /// The generator for one trial.
    pub fn trial_rng(&self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        rng
    }

    /// Draws `count` polynomials of one shared dimension for a trial.
    pub fn draw_polynomials(
        &self,
        rng: &mut ChaCha8Rng,
        count: usize,
        homogeneous: bool,
    ) -> Vec<Polynomial> {
        let dimension = self
            .dimension
            .unwrap_or_else(|| rng.random_range(1..=DEFAULT_MAX_DIMENSION));
        (0..count)
            .map(|_| {
                let spec = RandomSpec {
                    dimension,
                    max_degree: rng.random_range(0..=self.max_degree),
                    density: self.density,
                    coefficient_bound: self.coefficient_bound,
                    homogeneous,
                };
                random_polynomial(rng, &spec)
            })
            .collect()
    }
}

/// Pass/fail counts. `merge` is associative and commutative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
}

impl Summary {
    pub fn of(report: &VerificationReport) -> Summary {
        let ok = report.passes();
        Summary {
            trials: 1,
            passed: ok as u64,
            failed: !ok as u64,
        }
    }

    pub fn merge(self, other: Summary) -> Summary {
        Summary {
            trials: self.trials + other.trials,
            passed: self.passed + other.passed,
            failed: self.failed + other.failed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub statement: Statement,
    pub config: FuzzConfig,
    pub summary: Summary,
    /// Failures first, then passes; each group in trial order.
    pub reports: Vec<VerificationReport>,
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Runs a single trial of a campaign.
pub fn run_trial(statement: Statement, config: &FuzzConfig, trial: u64) -> VerificationReport {
    let mut rng = config.trial_rng(trial);
    let mut report = match statement {
        Statement::Chu => {
            let r = rng.random_range(0..=CHU_FUZZ_MAX);
            let s = rng.random_range(0..=CHU_FUZZ_MAX);
            let p = rng.random_range(0..=CHU_FUZZ_MAX);
            chu_vandermonde_check(r, s, p)
        }
        Statement::IdentityC => {
            let v = config.draw_polynomials(&mut rng, 4, config.homogeneous);
            identity_c_sides(&v[0], &v[1], &v[2], &v[3]).expect("shared dimension")
        }
        Statement::IdentityB => {
            let v = config.draw_polynomials(&mut rng, 2, config.homogeneous);
            identity_b_sides(&v[0], &v[1]).expect("shared dimension")
        }
        Statement::InequalityA => {
            let v = config.draw_polynomials(&mut rng, 2, true);
            inequality_a_check(&v[0], &v[1], true).expect("homogeneous by construction")
        }
    };
    report.instance.seed = Some(config.seed);
    report.instance.trial = Some(trial);
    report
}

pub fn run_campaign(statement: Statement, config: &FuzzConfig) -> CampaignReport {
    let mut reports: Vec<VerificationReport> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(statement, config, t))
        .collect();
    let summary = reports
        .par_iter()
        .map(Summary::of)
        .reduce(Summary::default, Summary::merge);
    // stable: trial order is kept within each group
    reports.sort_by_key(|r| r.passes());
    CampaignReport {
        statement,
        config: config.clone(),
        summary,
        reports,
    }
}
