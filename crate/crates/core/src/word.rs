//! Words over positive integer alphabets, permutations, rearrangement
//! classes and 1-based index sets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite sequence of positive integer letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(&zero) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::ZeroLetter(zero));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The first letter, `F` in statistic tables.
    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn is_permutation(&self) -> bool {
        is_permutation(&self.0)
    }

    pub fn multiset(&self) -> Multiset {
        Multiset::from_letters(&self.0)
    }
}

impl fmt::Display for Word {
    /// Digit string when every letter is a single digit, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l <= 9) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))?;
            // a lone multi-digit letter would read back as a digit string
            if parts.len() == 1 {
                f.write_str(",")?;
            }
            Ok(())
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `"212231"` (letters 1-9) or `"10,2,10,3"` / `"10 2 10 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        let letters = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad letter `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d >= 1 => Ok(d),
                    _ => Err(Error::Parse(format!(
                        "bad letter `{c}` in digit string (use separators for letters above 9)"
                    ))),
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn is_permutation(letters: &[u32]) -> bool {
    let n = letters.len();
    let mut seen = vec![false; n];
    letters.iter().all(|&l| {
        let i = l as usize;
        if i == 0 || i > n || seen[i - 1] {
            false
        } else {
            seen[i - 1] = true;
            true
        }
    })
}

/// A word whose letters are exactly `1..=n`, each once.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Word);

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if !is_permutation(&letters) {
            return Err(Error::NotPermutation(letters.len()));
        }
        Ok(Permutation(Word(letters)))
    }

    pub fn identity(n: usize) -> Self {
        Permutation(Word((1..=n as u32).collect()))
    }

    /// Caller guarantees the permutation property.
    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(is_permutation(&letters));
        Permutation(Word(letters))
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn letters(&self) -> &[u32] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `π^r_i = π_{n+1-i}`
    pub fn reverse(&self) -> Self {
        let mut v = self.letters().to_vec();
        v.reverse();
        Permutation(Word(v))
    }

    /// `π^c_i = n+1-π_i`
    pub fn complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation(Word(self.letters().iter().map(|&x| n + 1 - x).collect()))
    }

    /// `π^{rc}_i = n+1-π_{n+1-i}`
    pub fn reverse_complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation(Word(
            self.letters().iter().rev().map(|&x| n + 1 - x).collect(),
        ))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.letters().iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation(Word(inv))
    }
}

impl AsRef<Word> for Permutation {
    fn as_ref(&self) -> &Word {
        &self.0
    }
}

impl TryFrom<Word> for Permutation {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        Permutation::new(w.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::from_str(s)?.try_into()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// `(r, c, rc)` images of a permutation.
pub fn symmetries(p: &Permutation) -> (Permutation, Permutation, Permutation) {
    (p.reverse(), p.complement(), p.reverse_complement())
}

/// Letter multiplicities of a rearrangement class `R(w)`.
///
/// Two classes are equal iff their multiplicity maps are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset(BTreeMap<u32, usize>);

impl Multiset {
    pub fn from_letters(letters: &[u32]) -> Self {
        let mut counts = BTreeMap::new();
        for &l in letters {
            *counts.entry(l).or_insert(0) += 1;
        }
        Multiset(counts)
    }

    /// Build from `(letter, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_counts<I: IntoIterator<Item = (u32, usize)>>(counts: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (letter, k) in counts {
            if letter == 0 {
                return Err(Error::ZeroLetter(0));
            }
            if k > 0 {
                *map.entry(letter).or_insert(0) += k;
            }
        }
        Ok(Multiset(map))
    }

    pub fn counts(&self) -> &BTreeMap<u32, usize> {
        &self.0
    }

    /// `n`, the length of every word in the class.
    pub fn size(&self) -> usize {
        self.0.values().sum()
    }

    /// The unique nondecreasing word `w̄` of the class.
    pub fn sorted_word(&self) -> Word {
        Word(
            self.0
                .iter()
                .flat_map(|(&l, &k)| std::iter::repeat_n(l, k))
                .collect(),
        )
    }

    /// Positions `b_1 < … < b_k` ending each letter block of `w̄`, except the last.
    pub fn block_boundaries(&self) -> IndexSet {
        let mut acc = 0;
        let mut ends: Vec<usize> = self
            .0
            .values()
            .map(|&k| {
                acc += k;
                acc
            })
            .collect();
        ends.pop();
        IndexSet(ends)
    }

    /// `|R(w)|`, the multinomial coefficient `n! / Π k_i!`.
    pub fn class_size(&self) -> u128 {
        let mut total: u128 = 1;
        let mut placed: u128 = 0;
        for &k in self.0.values() {
            for j in 1..=k as u128 {
                placed += 1;
                total = total * placed / j;
            }
        }
        total
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(l, k)| {
                if *k == 1 {
                    l.to_string()
                } else {
                    format!("{l}^{k}")
                }
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for Multiset {
    type Err = Error;

    /// Any word of the class, in either word form.
    fn from_str(s: &str) -> Result<Self> {
        Ok(Word::from_str(s)?.multiset())
    }
}

/// Strictly increasing set of 1-based positions or values.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut elems: Vec<usize>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        IndexSet(elems)
    }

    pub(crate) fn from_sorted(elems: Vec<usize>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        IndexSet(elems)
    }

    pub fn elems(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        IndexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    /// `"{1,2,4}"`, braces optional.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad set element `{t}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IndexSet::new)
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
