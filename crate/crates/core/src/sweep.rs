//! Exhaustive comparison of the combinatorial toricness decision with the
//! saturation check over every labeled graph up to a vertex count.
//!
//! Graphs on `n` vertices are enumerated by edge-subset bitmask in increasing
//! numeric order (bit `b` = `b`-th vertex pair in lexicographic order).

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::edge_ideals::{decide_toric, verify_lattice};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepLevel {
    pub n: usize,
    pub graphs_checked: u64,
    pub toric_count: u64,
}

/// A graph where the two routes disagreed, or where verification failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub mask: u64,
    pub is_toric: bool,
    pub verified: Option<bool>,
    pub error: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub max_n: usize,
    pub levels: Vec<SweepLevel>,
    pub mismatches: Vec<Mismatch>,
    pub wall_time: Duration,
}

impl SweepSummary {
    pub fn graphs_checked(&self) -> u64 {
        self.levels.iter().map(|l| l.graphs_checked).sum()
    }

    pub fn toric_count(&self, n: usize) -> Option<u64> {
        self.levels.iter().find(|l| l.n == n).map(|l| l.toric_count)
    }
}

struct Outcome {
    mask: u64,
    is_toric: bool,
    verified: Result<bool, String>,
}

fn check_graph(n: usize, mask: u64) -> Outcome {
    let g = Graph::from_edge_mask(n, mask);
    Outcome {
        mask,
        is_toric: decide_toric(&g).is_toric,
        verified: verify_lattice(&g).map_err(|e| e.to_string()),
    }
}

fn sweep_level(n: usize) -> (SweepLevel, Vec<Mismatch>) {
    let count = 1u64 << Graph::pair_count(n);
    let mut outcomes: Vec<Outcome> = (0..count)
        .into_par_iter()
        .map(|mask| check_graph(n, mask))
        .collect();
    outcomes.sort_by_key(|o| o.mask);
    let toric_count = outcomes.iter().filter(|o| o.is_toric).count() as u64;
    let mismatches = outcomes
        .into_iter()
        .filter(|o| o.verified.as_ref().map_or(true, |&v| v != o.is_toric))
        .map(|o| Mismatch {
            n,
            mask: o.mask,
            is_toric: o.is_toric,
            verified: o.verified.as_ref().ok().copied(),
            error: o.verified.err(),
        })
        .collect();
    (
        SweepLevel {
            n,
            graphs_checked: count,
            toric_count,
        },
        mismatches,
    )
}

/// Runs the sweep for `n = 1..=max_n` on `jobs` worker threads
/// (`jobs == 0` picks the rayon default).
pub fn sweep(max_n: usize, jobs: usize) -> Result<SweepSummary, rayon::ThreadPoolBuildError> {
    assert!(Graph::pair_count(max_n) < 64, "edge masks are 64-bit");
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let start = Instant::now();
    let (levels, mismatches) = pool.install(|| {
        let mut levels = Vec::new();
        let mut mismatches = Vec::new();
        for n in 1..=max_n {
            let (level, bad) = sweep_level(n);
            levels.push(level);
            mismatches.extend(bad);
        }
        (levels, mismatches)
    });
    Ok(SweepSummary {
        max_n,
        levels,
        mismatches,
        wall_time: start.elapsed(),
    })
}
