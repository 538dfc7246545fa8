//! Randomised Kelmans monotonicity sweep.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sombor_core::numfmt;
use sombor_core::spectra::STRICT_MARGIN;
use sombor_core::transforms::{kelmans, verify_monotone, OpSpec};
use sombor_core::{EdgeList, Error, Graph, WeightFunction};

#[derive(Debug, Serialize)]
pub struct Violation {
    pub graph: EdgeList,
    pub op: OpSpec,
    pub weighting: String,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub cases: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub weightings: Vec<String>,
    #[serde(with = "numfmt::sig")]
    pub tolerance: f64,
    /// Checks where the result is a different graph.
    pub changed: usize,
    pub unchanged: usize,
    /// Pairs drawn whose result would be disconnected.
    pub skipped: usize,
    pub violations: Vec<Violation>,
}

/// Random recursive tree plus each other pair with probability `density`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("distinct in-range pairs")
}

pub fn run(cases: usize, seed: u64, min_n: usize, max_n: usize, fs: &[WeightFunction]) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport {
        seed,
        cases,
        min_n,
        max_n,
        weightings: fs.iter().map(ToString::to_string).collect(),
        tolerance: STRICT_MARGIN,
        changed: 0,
        unchanged: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    let mut done = 0;
    while done < cases {
        let n = rng.gen_range(min_n..=max_n);
        let density = rng.gen_range(0.1..0.6);
        let g = random_connected(&mut rng, n, density);
        let (v1, v2) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if v1 == v2 {
            continue;
        }
        if let Err(Error::Disconnected) = kelmans(&g, v1, v2) {
            report.skipped += 1;
            continue;
        }
        let op = OpSpec::Kelmans { v1, v2 };
        for f in fs {
            match verify_monotone(&g, op, f) {
                Ok(out) if out.changed => report.changed += 1,
                Ok(_) => report.unchanged += 1,
                Err(e) => report.violations.push(Violation {
                    graph: EdgeList::from(&g),
                    op,
                    weighting: f.to_string(),
                    message: e.to_string(),
                }),
            }
        }
        done += 1;
    }
    report
}
