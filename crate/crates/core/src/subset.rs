//! Element labels, ground sets and bitmask subsets.
//!
//! Internally every subset is a `u64` mask over element indices; labels only
//! appear at I/O boundaries.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on ground-set size imposed by the 64-bit subset representation.
pub const MAX_GROUND: usize = 64;

/// An element identifier. Integers and strings are both accepted; numeric
/// labels sort numerically and serialize back as JSON integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(s: impl Into<String>) -> Self {
        Label(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<u64> {
        let s = &self.0;
        if s.is_empty() || (s.len() > 1 && s.starts_with('0')) || !s.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            (Some(a), Some(b)) => a.cmp(&b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_string())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(s)
    }
}

impl From<&Label> for Label {
    fn from(l: &Label) -> Self {
        l.clone()
    }
}

macro_rules! label_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Label {
            fn from(v: $t) -> Self {
                Label(v.to_string())
            }
        }
    )*};
}
label_from_int!(u8, u16, u32, u64, usize, i32, i64);

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.numeric() {
            Some(n) => s.serialize_u64(n),
            None => s.serialize_str(&self.0),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Int(i) => Label(i.to_string()),
            Raw::Str(s) => Label(s),
        })
    }
}

/// A subset of `{0, ..., 63}` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Subset(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lowest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Compares by the ascending index sequence, so `{0,5} < {1,2}`.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Every subset of `self`, in increasing mask order.
    pub fn subsets(self) -> SubmaskIter {
        SubmaskIter { mask: self.0, next: Some(0) }
    }

    /// All subsets of `{0..n}` as masks `0..2^n`.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < 64, "cannot enumerate all subsets of a 64-element set");
        (0..1u64 << n).map(Subset)
    }

    /// Subsets of `self` with exactly `k` elements, in lexicographic order of
    /// their index sequences.
    pub fn combinations(self, k: usize) -> Vec<Subset> {
        let idx = self.indices();
        let mut out = Vec::new();
        if k > idx.len() {
            return out;
        }
        let n = idx.len();
        let mut pos: Vec<usize> = (0..k).collect();
        loop {
            out.push(Subset::from_indices(pos.iter().map(|&p| idx[p])));
            let Some(i) = (0..k).rev().find(|&i| pos[i] < i + n - k) else {
                return out;
            };
            pos[i] += 1;
            for j in i + 1..k {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Subset::from_indices(it)
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

pub struct SubmaskIter {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubmaskIter {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some((cur.wrapping_sub(self.mask)) & self.mask) };
        Some(Subset(cur))
    }
}

/// An ordered, duplicate-free sequence of labels with index lookup.
#[derive(Clone)]
pub struct Ground(Arc<GroundInner>);

struct GroundInner {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl PartialEq for Ground {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Ground {}

impl fmt::Debug for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0.labels).finish()
    }
}

impl Ground {
    pub fn new<I, L>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        let labels: Vec<Label> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge { n: labels.len(), limit: MAX_GROUND, what: "subset masks" });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        Ok(Ground(Arc::new(GroundInner { labels, index })))
    }

    /// Labels `1..=n`.
    pub fn numbered(n: usize) -> Self {
        Ground::new(1..=n).expect("numbered ground sets are valid up to 64")
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.0.labels[i]
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.0.index.get(l).copied()
    }

    pub fn index(&self, l: impl Into<Label>) -> Result<usize> {
        let l = l.into();
        self.index_of(&l).ok_or_else(|| Error::UnknownElement(l.to_string()))
    }

    /// Converts labels to a mask. Unknown labels give [`Error::UnknownElement`].
    pub fn set<I, L>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        let mut s = Subset::EMPTY;
        for l in labels {
            s = s.with(self.index(l)?);
        }
        Ok(s)
    }

    /// Labels of a subset in ground order.
    pub fn labels_of(&self, s: Subset) -> Vec<Label> {
        s.iter().map(|i| self.0.labels[i].clone()).collect()
    }

    /// `{1,2,5}` style rendering; the empty set prints as `∅`.
    pub fn fmt_set(&self, s: Subset) -> String {
        if s.is_empty() {
            return "∅".to_string();
        }
        let parts: Vec<String> = s.iter().map(|i| self.0.labels[i].to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}
