use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest order handled by a full subset scan under [`Strategy::Auto`].
pub const EXHAUSTIVE_MAX_N: usize = 20;

/// Default hard limit on the order of an instance.
pub const DEFAULT_MAX_N: usize = 32;

/// Absolute ceiling: solvers work on single-word bit masks.
pub(crate) const MASK_BITS: usize = 64;

/// Which of the four extremal numbers to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// Minimum kTDS size.
    Gamma,
    /// Maximum size of a minimal kTDS.
    UpperGamma,
    /// Minimum k-transversal size.
    Tau,
    /// Maximum size of a minimal k-transversal.
    Upsilon,
}

impl Quantity {
    pub fn is_hypergraph(self) -> bool {
        matches!(self, Quantity::Tau | Quantity::Upsilon)
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Quantity::UpperGamma | Quantity::Upsilon)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Gamma => "gamma",
            Quantity::UpperGamma => "Gamma",
            Quantity::Tau => "tau",
            Quantity::Upsilon => "upsilon",
        })
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(Quantity::Gamma),
            "Gamma" => Ok(Quantity::UpperGamma),
            "tau" => Ok(Quantity::Tau),
            "upsilon" => Ok(Quantity::Upsilon),
            _ => Err(Error::Argument(format!(
                "unknown quantity {s:?} (expected gamma, Gamma, tau or upsilon)"
            ))),
        }
    }
}

/// Search strategy for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Subset scan up to [`EXHAUSTIVE_MAX_N`] vertices, branch and bound above.
    #[default]
    Auto,
    Exhaustive,
    BranchAndBound,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "bnb" | "branch-and-bound" => Ok(Strategy::BranchAndBound),
            _ => Err(Error::Argument(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub strategy: Strategy,
    /// Threads for the subset scan; `1` keeps everything on the caller's thread.
    pub workers: usize,
    /// Instances with more vertices are rejected with [`Error::Resource`].
    pub max_n: usize,
    pub deadline: Option<Instant>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            strategy: Strategy::Auto,
            workers: 1,
            max_n: DEFAULT_MAX_N,
            deadline: None,
        }
    }
}

impl SolveOptions {
    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.deadline = Some(Instant::now() + budget);
        self
    }

    pub(crate) fn check_order(&self, n: usize) -> Result<()> {
        let limit = self.max_n.min(MASK_BITS);
        if n > limit {
            return Err(Error::Resource(format!(
                "instance has {n} vertices, exact solvers accept at most {limit} \
                 (raise with KTDOM_MAX_N, up to {MASK_BITS})"
            )));
        }
        Ok(())
    }

    pub(crate) fn use_exhaustive(&self, n: usize) -> bool {
        match self.strategy {
            Strategy::Auto => n <= EXHAUSTIVE_MAX_N,
            Strategy::Exhaustive => true,
            Strategy::BranchAndBound => false,
        }
    }
}

/// Optimal value together with the lexicographically least optimal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Node counter with a cheap periodic deadline check.
pub(crate) struct Budget {
    deadline: Option<Instant>,
    pub nodes: u64,
}

impl Budget {
    pub fn new(deadline: Option<Instant>) -> Self {
        Self { deadline, nodes: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes & 0xfff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::Timeout { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}

/// Best `(size, mask)` seen so far under a min or max objective, ties broken
/// towards the lexicographically least set.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Best {
    pub maximize: bool,
    pub found: Option<(usize, u64)>,
}

impl Best {
    pub fn new(maximize: bool) -> Self {
        Self {
            maximize,
            found: None,
        }
    }

    pub fn offer(&mut self, size: usize, mask: u64) {
        let better = match self.found {
            None => true,
            Some((s, m)) => {
                if size != s {
                    (size > s) == self.maximize
                } else {
                    crate::vertex_set::mask_lex_less(mask, m)
                }
            }
        };
        if better {
            self.found = Some((size, mask));
        }
    }

    pub fn merge(mut self, other: Best) -> Best {
        if let Some((s, m)) = other.found {
            self.offer(s, m);
        }
        self
    }
}

/// Iterates `f` over every submask of `free`, OR-ed with `base`, splitting the
/// work across `workers` threads. Partial results are merged with `merge`,
/// which must be commutative and associative for the outcome to be
/// independent of the schedule.
pub(crate) fn scan_submasks<T, F, M>(
    base: u64,
    free: u64,
    workers: usize,
    deadline: Option<Instant>,
    init: impl Fn() -> T + Sync,
    visit: F,
    merge: M,
) -> Result<(T, u64)>
where
    T: Send,
    F: Fn(&mut T, u64) + Sync,
    M: Fn(T, T) -> T + Sync,
{
    let free_bits = free.count_ones();
    // Split on the highest free bits so each chunk is a contiguous scan.
    let split_bits = if workers > 1 && free_bits >= 14 {
        (free_bits - 10).min(10)
    } else {
        0
    };
    let mut high = 0u64;
    let mut rest = free;
    for _ in 0..split_bits {
        let top = 63 - rest.leading_zeros();
        high |= 1 << top;
        rest &= !(1 << top);
    }
    let low = free & !high;

    let run_chunk = |hi: u64| -> Result<(T, u64)> {
        let mut acc = init();
        let mut budget = Budget::new(deadline);
        let mut sub = 0u64;
        loop {
            budget.tick()?;
            visit(&mut acc, base | hi | sub);
            if sub == low {
                break;
            }
            sub = (sub.wrapping_sub(low)) & low;
        }
        Ok((acc, budget.nodes))
    };

    if split_bits == 0 {
        return run_chunk(0);
    }

    let mut highs = Vec::with_capacity(1 << split_bits);
    let mut h = 0u64;
    loop {
        highs.push(h);
        if h == high {
            break;
        }
        h = (h.wrapping_sub(high)) & high;
    }

    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        highs.par_iter().map(|&hi| run_chunk(hi)).try_reduce(
            || (init(), 0),
            |(a, na), (b, nb)| Ok((merge(a, b), na + nb)),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_scan_visits_each_once() {
        for workers in [1, 4] {
            let free = 0b1011_0110_1101_1110_1011u64;
            let (seen, nodes) = scan_submasks(
                1 << 40,
                free,
                workers,
                None,
                Vec::new,
                |acc: &mut Vec<u64>, m| acc.push(m),
                |mut a, b| {
                    a.extend(b);
                    a
                },
            )
            .unwrap();
            let mut seen = seen;
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), 1 << free.count_ones());
            assert_eq!(nodes, 1 << free.count_ones());
            assert!(seen.iter().all(|m| m & !free == 1 << 40));
        }
    }

    #[test]
    fn best_breaks_ties_lexicographically() {
        let mut b = Best::new(true);
        b.offer(2, 0b110);
        b.offer(2, 0b011);
        b.offer(1, 0b001);
        assert_eq!(b.found, Some((2, 0b011)));
        let mut m = Best::new(false);
        m.offer(2, 0b110);
        m.offer(3, 0b111);
        assert_eq!(m.found, Some((2, 0b110)));
    }

    #[test]
    fn quantity_names_round_trip() {
        for q in [
            Quantity::Gamma,
            Quantity::UpperGamma,
            Quantity::Tau,
            Quantity::Upsilon,
        ] {
            assert_eq!(q.to_string().parse::<Quantity>().unwrap(), q);
        }
    }
}
