use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of the vertices `0..host_size` of some graph or hypergraph.
///
/// Sets order lexicographically by their sorted member lists, so
/// `{0,1,2} < {0,1,3} < {0,2} < {1}`. All "lexicographically least witness"
/// guarantees in this crate refer to this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    host_size: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(host_size: usize) -> Self {
        Self {
            host_size,
            words: vec![0; host_size.div_ceil(WORD)],
        }
    }

    pub fn full(host_size: usize) -> Self {
        let mut s = Self::empty(host_size);
        for v in 0..host_size {
            s.insert(v);
        }
        s
    }

    /// Builds a set from member indices, rejecting indices outside the host.
    pub fn from_members<I>(host_size: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(host_size);
        for v in members {
            if v >= host_size {
                return Err(Error::Argument(format!(
                    "vertex {v} outside host of size {host_size}"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Interprets bit `i` of `mask` as membership of vertex `i`.
    pub fn from_mask(host_size: usize, mask: u64) -> Self {
        assert!(host_size <= WORD || mask == 0);
        assert!(host_size >= WORD || mask >> host_size == 0);
        let mut s = Self::empty(host_size);
        if host_size > 0 {
            s.words[0] = mask;
        }
        s
    }

    /// The set as a single machine word, if the host fits in one.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn host_size(&self) -> usize {
        self.host_size
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.host_size && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.host_size,
            "vertex {v} outside host of size {}",
            self.host_size
        );
        let was = self.contains(v);
        self.words[v / WORD] |= 1 << (v % WORD);
        !was
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let was = self.contains(v);
        if was {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.host_size == other.host_size
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// `|self ∩ other|`.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.host_size, other.host_size);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        out
    }

    /// Complement within the host.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.host_size);
        for (a, b) in out.words.iter_mut().zip(&self.words) {
            *a &= !b;
        }
        out
    }

    /// Space-separated 1-based member list, as used in files and ledgers.
    pub fn to_one_based(&self) -> String {
        self.iter()
            .map(|v| (v + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.host_size.cmp(&other.host_size))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.host_size)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Orders two equal-host bit masks by the sorted-member-list order of
/// [`VertexSet`]. Returns `true` when `a` comes first.
///
/// For sets that are not comparable by inclusion this is the same as putting
/// the lowest differing vertex in the first set, which is what reversing the
/// bit order and comparing numerically does.
pub(crate) fn mask_lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let diff = a ^ b;
    let low = diff.trailing_zeros();
    let in_a = a >> low & 1 == 1;
    // A strict prefix sorts first: if the lowest difference is a member of
    // `a` but `b` has nothing beyond the common part, `b` is a prefix of `a`.
    let common = a & b & ((1u64 << low) - 1);
    if in_a {
        // b's next member (if any) is above `low`
        let b_rest = b & !common;
        b_rest != 0
    } else {
        let a_rest = a & !common;
        a_rest == 0
    }
}
