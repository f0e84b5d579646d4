//! Uniform sampling of realizations via a lazy swap-move random walk.
//!
//! The move set is pair swaps plus the chained three-arc rewiring (with
//! the closed case degenerating to a triangle reversal) — a superset of
//! every exchange the path construction uses, so the walk's state space is
//! connected. Proposals are drawn as ordered tuples over the arc set;
//! since the arc count never changes, forward and backward proposal
//! probabilities coincide and every applicable proposal is accepted.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Arc, DiGraph};
use crate::swap::{apply_swap_in_place, Swap};

/// Parameters of one chain run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainConfig {
    pub steps: u64,
    pub seed: u64,
    /// Probability of proposing a pair swap instead of a triple move.
    pub pair_move_probability: f64,
    /// A sample is taken every `thinning` steps.
    pub thinning: u64,
}

impl ChainConfig {
    pub fn new(steps: u64, seed: u64) -> Self {
        Self {
            steps,
            seed,
            pair_move_probability: 0.5,
            thinning: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.pair_move_probability) {
            return Err(Error::InvalidChainConfig(
                "pair move probability must lie in [0, 1]",
            ));
        }
        if self.thinning == 0 {
            return Err(Error::InvalidChainConfig("thinning must be positive"));
        }
        Ok(())
    }
}

/// A chain positioned at one realization. The degree sequence of `current`
/// is invariant over the chain's lifetime.
#[derive(Debug, Clone)]
pub struct ChainState {
    current: DiGraph,
    rng: ChaCha8Rng,
    pair_move_probability: f64,
    step_count: u64,
    accept_count: u64,
}

impl ChainState {
    pub fn new(g0: DiGraph, cfg: &ChainConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            current: g0,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            pair_move_probability: cfg.pair_move_probability,
            step_count: 0,
            accept_count: 0,
        })
    }

    pub fn current(&self) -> &DiGraph {
        &self.current
    }

    pub fn step_count(&self) -> u64 {
        self.step_count
    }

    pub fn accept_count(&self) -> u64 {
        self.accept_count
    }

    /// Draws one proposal. `None` is an ordinary rejection: the drawn arcs
    /// did not match a move pattern, or the rewired arcs would collide
    /// with existing ones.
    pub fn propose(&mut self) -> Option<Swap> {
        let arcs: Vec<Arc> = self.current.arcs().collect();
        let m = arcs.len();
        if self.rng.random_bool(self.pair_move_probability) {
            if m < 2 {
                return None;
            }
            let (i, j) = self.draw_two(m);
            let swap = Swap::pair(arcs[i], arcs[j]).ok()?;
            self.applicable(&swap).then_some(swap)
        } else {
            if m < 3 {
                return None;
            }
            let (i, j, k) = self.draw_three(m);
            let ((a, b), (b2, c), (c2, d)) = (arcs[i], arcs[j], arcs[k]);
            if b2 != b || c2 != c {
                return None;
            }
            let swap = if d == a {
                Swap::triangle(a, b, c).ok()?
            } else {
                Swap::triple_path(a, b, c, d).ok()?
            };
            self.applicable(&swap).then_some(swap)
        }
    }

    /// Applies one lazy Metropolis step: the proposal, if any, is accepted
    /// with probability one; rejections leave the state unchanged.
    pub fn step(&mut self) {
        if let Some(swap) = self.propose() {
            apply_swap_in_place(&mut self.current, &swap)
                .expect("accepted proposals are applicable");
            self.accept_count += 1;
        }
        self.step_count += 1;
    }

    fn applicable(&self, swap: &Swap) -> bool {
        swap.added().iter().all(|&(u, v)| !self.current.has_arc(u, v))
    }

    /// Uniform ordered pair of distinct indices below `m`.
    fn draw_two(&mut self, m: usize) -> (usize, usize) {
        let i = self.rng.random_range(0..m);
        let r = self.rng.random_range(0..m - 1);
        (i, if r >= i { r + 1 } else { r })
    }

    /// Uniform ordered triple of distinct indices below `m`.
    fn draw_three(&mut self, m: usize) -> (usize, usize, usize) {
        let (i, j) = self.draw_two(m);
        let mut k = self.rng.random_range(0..m - 2);
        let (lo, hi) = (i.min(j), i.max(j));
        if k >= lo {
            k += 1;
        }
        if k >= hi {
            k += 1;
        }
        (i, j, k)
    }
}

/// Runs a fresh chain from `g0` and returns every `thinning`-th state;
/// `floor(steps / thinning)` samples in total. Deterministic in
/// `(g0, cfg)`.
pub fn run_chain(g0: &DiGraph, cfg: &ChainConfig) -> Result<Vec<DiGraph>> {
    let mut state = ChainState::new(g0.clone(), cfg)?;
    let mut samples = Vec::with_capacity((cfg.steps / cfg.thinning) as usize);
    for t in 1..=cfg.steps {
        state.step();
        if t % cfg.thinning == 0 {
            samples.push(state.current().clone());
        }
    }
    Ok(samples)
}

/// Total-variation distance between the empirical distribution of
/// `samples` and the uniform distribution on `support`. Samples are keyed
/// by their sorted arc lists; a sample outside the support is an error.
/// An empty sample list is maximally far from uniform (distance 1).
pub fn empirical_tv(samples: &[DiGraph], support: &[DiGraph]) -> Result<f64> {
    assert!(!support.is_empty(), "support must be nonempty");
    let index: BTreeMap<Vec<Arc>, usize> = support
        .iter()
        .enumerate()
        .map(|(i, g)| (g.arcs().collect(), i))
        .collect();
    let mut counts = vec![0u64; support.len()];
    for sample in samples {
        let key: Vec<Arc> = sample.arcs().collect();
        let i = *index.get(&key).ok_or(Error::SampleOutsideSupport)?;
        counts[i] += 1;
    }
    if samples.is_empty() {
        return Ok(1.0);
    }
    let n = samples.len() as f64;
    let uniform = 1.0 / support.len() as f64;
    Ok(0.5
        * counts
            .iter()
            .map(|&c| (c as f64 / n - uniform).abs())
            .sum::<f64>())
}
