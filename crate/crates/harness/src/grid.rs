//! Parameter ranges, graph corpora and family lists given on the command line.

use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use ktdom::corpus::{all_graphs, connected_graphs, MAX_CORPUS_ORDER};
use ktdom::{FamilySpec, Instance};

/// Inclusive integer range written `a..b`, `a..=b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: usize,
    pub hi: usize,
}

impl IntRange {
    pub fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    pub fn contains(self, x: usize) -> bool {
        (self.lo..=self.hi).contains(&x)
    }
}

impl FromStr for IntRange {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad number {t:?} in range {s:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let x = num(s)?;
                (x, x)
            }
        };
        if lo > hi {
            bail!("range {s:?} is empty");
        }
        Ok(Self { lo, hi })
    }
}

/// `connected:<=7` or `all:<=6`: every graph (or connected graph) up to
/// isomorphism with at most the given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    pub connected: bool,
    pub max_n: usize,
}

impl FromStr for CorpusSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, bound) = s
            .split_once(':')
            .ok_or_else(|| anyhow!("corpus {s:?} should look like connected:<=7"))?;
        let connected = match kind {
            "connected" => true,
            "all" => false,
            _ => bail!("unknown corpus {kind:?}, expected connected or all"),
        };
        let max_n: usize = bound
            .strip_prefix("<=")
            .ok_or_else(|| anyhow!("corpus bound {bound:?} should look like <=7"))?
            .parse()
            .with_context(|| format!("bad corpus bound {bound:?}"))?;
        if max_n > MAX_CORPUS_ORDER {
            bail!("corpus order is limited to {MAX_CORPUS_ORDER}");
        }
        Ok(Self { connected, max_n })
    }
}

impl CorpusSpec {
    /// Graphs of order `1..=max_n` (restricted to `orders` when given), named
    /// `<kind><n>#<index>`.
    pub fn instances(&self, orders: Option<IntRange>) -> Result<Vec<Instance>> {
        let kind = if self.connected { "connected" } else { "all" };
        let mut out = Vec::new();
        for n in 1..=self.max_n {
            if orders.is_some_and(|r| !r.contains(n)) {
                continue;
            }
            let graphs = if self.connected {
                connected_graphs(n)?
            } else {
                all_graphs(n)?
            };
            for (i, g) in graphs.into_iter().enumerate() {
                out.push(Instance::new(format!("{kind}{n}#{i}"), g));
            }
        }
        Ok(out)
    }
}

/// Splits a comma-separated list of family specs. Commas inside parentheses
/// or between numeric arguments (`rook:3,4`) do not separate entries.
pub fn split_families(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    let chars: Vec<char> = list.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0
                && chars[i + 1..]
                    .iter()
                    .find(|n| !n.is_whitespace())
                    .is_some_and(|n| n.is_ascii_alphabetic()) =>
            {
                out.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        current.push(c);
    }
    if !current.is_empty() {
        out.push(current);
    }
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

pub fn parse_families(list: &str) -> Result<Vec<Instance>> {
    split_families(list)
        .iter()
        .map(|s| {
            let spec: FamilySpec = s.parse().with_context(|| format!("family {s:?}"))?;
            Ok(Instance::from_spec(&spec)?)
        })
        .collect()
}

/// Ascending part lists with `p >= 2` parts summing to `total`.
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            if acc.len() >= 2 {
                out.push(acc.clone());
            }
            return;
        }
        for first in min..=total {
            acc.push(first);
            go(total - first, first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(total, 1, &mut Vec::new(), &mut out);
    out
}
