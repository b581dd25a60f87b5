//! Timing comparison of the methods on random functions.

use nlcore::BooleanFunction;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{run_method, Method};

pub struct BenchRow {
    pub method: Method,
    pub reps: u32,
    pub min_micros: u64,
    pub mean_micros: f64,
    pub max_micros: u64,
}

/// Times each method over `reps` seeded random functions on `n` variables.
/// Every method sees the same functions.
pub fn run_bench(n: usize, reps: u32, seed: u64, methods: &[Method]) -> Vec<BenchRow> {
    assert!(reps > 0, "need at least one repetition");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let functions: Vec<BooleanFunction> = (0..reps)
        .map(|_| BooleanFunction::random(n, &mut rng))
        .collect();
    methods
        .iter()
        .map(|&method| {
            let times: Vec<u64> = functions
                .iter()
                .map(|f| run_method(f, method).0.micros)
                .collect();
            BenchRow {
                method,
                reps,
                min_micros: *times.iter().min().unwrap(),
                mean_micros: times.iter().sum::<u64>() as f64 / times.len() as f64,
                max_micros: *times.iter().max().unwrap(),
            }
        })
        .collect()
}

pub fn render_table(n: usize, rows: &[BenchRow]) -> String {
    let mut out = format!("bench n={n}\n  method  reps   min(us)      mean(us)   max(us)\n");
    for row in rows {
        out.push_str(&format!(
            "  {:<6}  {:>4}  {:>8}  {:>12.1}  {:>8}\n",
            row.method.id(),
            row.reps,
            row.min_micros,
            row.mean_micros,
            row.max_micros,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_runs_all_methods() {
        let rows = run_bench(
            3,
            2,
            1,
            &[Method::Fwt, Method::Nnf, Method::F2, Method::QLoop],
        );
        assert_eq!(rows.len(), 4);
        for row in &rows {
            assert!(row.min_micros <= row.max_micros);
        }
    }
}
