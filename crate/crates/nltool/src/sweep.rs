//! Sweeps: run selected methods over a whole family of functions, verify
//! that they agree pointwise, and aggregate per-nonlinearity-class counts
//! and counter statistics.
//!
//! Work fans out over a thread pool (capped by `NLTOOL_THREADS`); outcomes
//! are merged back in function order, so output is deterministic.

use std::collections::BTreeMap;

use nlcore::{BitVec, BooleanFunction, IdealStats};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{run_method, Method, RunReport};

#[derive(Clone, Copy, Debug)]
pub enum FunctionSet {
    /// All `2^(2^n)` functions; supported for `n <= 4`.
    Exhaustive,
    /// `count` random functions from a seed-split generator: function `i`
    /// draws from stream `i` of the seeded ChaCha generator.
    Sample { count: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n: usize,
    pub set: FunctionSet,
    pub methods: Vec<Method>,
}

#[derive(Clone, Debug)]
pub struct FunctionOutcome {
    pub index: u64,
    pub reports: Vec<RunReport>,
    pub f2_trace: Option<Vec<IdealStats>>,
    pub agree: bool,
}

impl FunctionOutcome {
    pub fn nl(&self) -> u32 {
        self.reports[0].nl
    }

    pub fn tt(&self) -> &str {
        &self.reports[0].tt
    }
}

/// Statistics of the distance ideal at one `(nonlinearity class, t)` cell,
/// aggregated over every function of the class.
#[derive(Clone, Copy, Debug)]
pub struct IdealCell {
    pub loads: u64,
    pub checked_sum: u64,
    pub sufficient_sum: u64,
    pub sufficient_min: u64,
    pub sufficient_max: u64,
}

impl IdealCell {
    fn absorb(&mut self, stats: &IdealStats) {
        self.loads += 1;
        self.checked_sum += stats.counters.generators_checked;
        self.sufficient_sum += stats.counters.generators_sufficient;
        self.sufficient_min = self
            .sufficient_min
            .min(stats.counters.generators_sufficient);
        self.sufficient_max = self
            .sufficient_max
            .max(stats.counters.generators_sufficient);
    }

    pub fn checked_avg(&self) -> f64 {
        self.checked_sum as f64 / self.loads as f64
    }

    pub fn sufficient_avg(&self) -> f64 {
        self.sufficient_sum as f64 / self.loads as f64
    }
}

#[derive(Debug)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub outcomes: Vec<FunctionOutcome>,
}

pub fn run_sweep(config: SweepConfig) -> Result<SweepReport, String> {
    let n = config.n;
    if config.methods.is_empty() {
        return Err("no methods selected".to_string());
    }
    let total = match config.set {
        FunctionSet::Exhaustive => {
            if n > 4 {
                return Err(format!(
                    "exhaustive sweep over 2^(2^{n}) functions is not tractable; supported for n <= 4"
                ));
            }
            1u64 << (1 << n)
        }
        FunctionSet::Sample { count, .. } => count,
    };

    let outcomes: Vec<FunctionOutcome> = (0..total)
        .into_par_iter()
        .map(|index| {
            let f = function_at(&config.set, n, index);
            let mut reports = Vec::with_capacity(config.methods.len());
            let mut f2_trace = None;
            for &method in &config.methods {
                let (report, trace) = run_method(&f, method);
                if let Some(t) = trace {
                    f2_trace = Some(t);
                }
                reports.push(report);
            }
            let agree = reports.windows(2).all(|w| w[0].nl == w[1].nl);
            FunctionOutcome {
                index,
                reports,
                f2_trace,
                agree,
            }
        })
        .collect();

    Ok(SweepReport { config, outcomes })
}

fn function_at(set: &FunctionSet, n: usize, index: u64) -> BooleanFunction {
    match set {
        FunctionSet::Exhaustive => BooleanFunction::new(n, BitVec::from_words(1 << n, vec![index])),
        FunctionSet::Sample { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            rng.set_stream(index);
            BooleanFunction::random(n, &mut rng)
        }
    }
}

impl SweepReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &FunctionOutcome> {
        self.outcomes.iter().filter(|o| !o.agree)
    }

    /// Functions per nonlinearity class.
    pub fn class_counts(&self) -> BTreeMap<u32, u64> {
        let mut counts = BTreeMap::new();
        for o in &self.outcomes {
            *counts.entry(o.nl()).or_insert(0) += 1;
        }
        counts
    }

    /// Average addition counter per method.
    pub fn additions_avg(&self) -> Vec<(Method, f64)> {
        self.config
            .methods
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let sum: u64 = self
                    .outcomes
                    .iter()
                    .map(|o| o.reports[i].counters.additions)
                    .sum();
                (m, sum as f64 / self.outcomes.len() as f64)
            })
            .collect()
    }

    /// Per `(nonlinearity class, t)` ideal counter statistics, present when
    /// the f2 method ran.
    pub fn ideal_cells(&self) -> BTreeMap<(u32, usize), IdealCell> {
        let mut cells: BTreeMap<(u32, usize), IdealCell> = BTreeMap::new();
        for o in &self.outcomes {
            let Some(trace) = &o.f2_trace else { continue };
            for stats in trace {
                cells
                    .entry((o.nl(), stats.t))
                    .or_insert(IdealCell {
                        loads: 0,
                        checked_sum: 0,
                        sufficient_sum: 0,
                        sufficient_min: u64::MAX,
                        sufficient_max: 0,
                    })
                    .absorb(stats);
            }
        }
        cells
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let total = self.outcomes.len();
        let methods: Vec<&str> = self.config.methods.iter().map(|m| m.id()).collect();
        let set = match self.config.set {
            FunctionSet::Exhaustive => "exhaustive".to_string(),
            FunctionSet::Sample { count, seed } => format!("sample {count} (seed {seed})"),
        };
        let verdict = if self.mismatches().next().is_none() {
            "agree"
        } else {
            "MISMATCH"
        };
        out.push_str(&format!(
            "sweep n={} {set}: {total} functions, methods [{}] {verdict}\n",
            self.config.n,
            methods.join(","),
        ));

        out.push_str("nonlinearity classes:\n");
        out.push_str("  NL   count\n");
        for (nl, count) in self.class_counts() {
            out.push_str(&format!("  {nl:>2}  {count:>6}\n"));
        }

        out.push_str("average additions per function:\n");
        for (m, avg) in self.additions_avg() {
            if m != Method::F2 {
                out.push_str(&format!("  {:<6} {avg:.2}\n", m.id()));
            }
        }

        let cells = self.ideal_cells();
        if !cells.is_empty() {
            out.push_str(
                "ideal counters by class (avg checked #C / avg sufficient #S, S range [m, M]):\n",
            );
            out.push_str("  NL   t   loads      #C       #S     m     M\n");
            for ((nl, t), cell) in &cells {
                out.push_str(&format!(
                    "  {nl:>2}  {t:>2}  {:>6}  {:>8.2}  {:>7.2}  {:>4}  {:>4}\n",
                    cell.loads,
                    cell.checked_avg(),
                    cell.sufficient_avg(),
                    cell.sufficient_min,
                    cell.sufficient_max,
                ));
            }
        }
        out
    }

    /// One JSON object per (function, method), in function order.
    pub fn render_json_lines(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            for report in &o.reports {
                out.push_str(&serde_json::to_string(report).unwrap());
                out.push('\n');
            }
        }
        out
    }
}
