//! Vincular patterns and occurrence counting.
//!
//! Patterns are written in dash notation: maximal runs of digits must occupy
//! adjacent positions of the host word, dashes separate runs that may be
//! spread apart. `"31-4-2"` is the pattern whose first two letters are
//! adjacent. Pattern letters may repeat; equal pattern letters must match
//! equal letters of the host word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    letters: Vec<u32>,
    /// `adjacent[j]` holds when pattern positions `j` and `j + 1` share a block.
    adjacent: Vec<bool>,
}

impl VincularPattern {
    /// `blocks` lists the block lengths left to right.
    pub fn new(letters: Vec<u32>, blocks: &[usize]) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Parse("empty pattern".into()));
        }
        if blocks.contains(&0) || blocks.iter().sum::<usize>() != letters.len() {
            return Err(Error::Parse(
                "blocks must partition the pattern positions".into(),
            ));
        }
        let max = *letters.iter().max().unwrap();
        if let Some(gap) = (1..=max).find(|v| !letters.contains(v)) {
            return Err(Error::Parse(format!(
                "pattern letters must form 1..{max}; {gap} is missing"
            )));
        }
        let mut adjacent = Vec::with_capacity(letters.len() - 1);
        for (bi, &len) in blocks.iter().enumerate() {
            adjacent.extend(std::iter::repeat_n(true, len - 1));
            if bi + 1 < blocks.len() {
                adjacent.push(false);
            }
        }
        Ok(VincularPattern { letters, adjacent })
    }

    /// Every letter in its own block.
    pub fn classical(letters: Vec<u32>) -> Result<Self> {
        let blocks = vec![1; letters.len()];
        Self::new(letters, &blocks)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Block lengths, left to right.
    pub fn blocks(&self) -> Vec<usize> {
        let mut out = vec![1];
        for &adj in &self.adjacent {
            if adj {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
        }
        out
    }

    /// Number of occurrences of the pattern in `w`.
    pub fn count_in(&self, w: &Word) -> usize {
        let word = w.letters();
        if word.len() < self.letters.len() {
            return 0;
        }
        let mut chosen = Vec::with_capacity(self.letters.len());
        self.extend(word, &mut chosen, 0)
    }

    fn extend(&self, word: &[u32], chosen: &mut Vec<usize>, start: usize) -> usize {
        let a = chosen.len();
        if a == self.letters.len() {
            return 1;
        }
        // Positions left to fill after this one bound the search range.
        let remaining = self.letters.len() - a - 1;
        let range = if a > 0 && self.adjacent[a - 1] {
            start..(start + 1).min(word.len())
        } else {
            start..word.len().saturating_sub(remaining)
        };
        let mut total = 0;
        for i in range {
            if self.consistent(word, chosen, a, i) {
                chosen.push(i);
                total += self.extend(word, chosen, i + 1);
                chosen.pop();
            }
        }
        total
    }

    fn consistent(&self, word: &[u32], chosen: &[usize], a: usize, i: usize) -> bool {
        let pa = self.letters[a];
        let wa = word[i];
        chosen
            .iter()
            .enumerate()
            .all(|(b, &ib)| self.letters[b].cmp(&pa) == word[ib].cmp(&wa))
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty pattern".into()));
        }
        let mut letters = Vec::new();
        let mut blocks = Vec::new();
        for block in s.split('-') {
            if block.is_empty() {
                return Err(Error::Parse(format!("empty block in pattern `{s}`")));
            }
            for c in block.chars() {
                match c.to_digit(10) {
                    Some(d) if d >= 1 => letters.push(d),
                    _ => return Err(Error::Parse(format!("bad pattern letter `{c}`"))),
                }
            }
            blocks.push(block.chars().count());
        }
        VincularPattern::new(letters, &blocks)
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, l) in self.letters.iter().enumerate() {
            if j > 0 && !self.adjacent[j - 1] {
                f.write_str("-")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A sum of pattern occurrence counts, each term with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSum {
    terms: Vec<VincularPattern>,
}

/// Built-in sums addressable by name.
pub const NAMED_SUMS: [&str; 6] = ["INV", "MAJ", "MAK", "STAT", "MAJ_w", "STAT_w"];

impl PatternSum {
    pub fn new(terms: Vec<VincularPattern>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidInput(
                "pattern sum needs at least one term".into(),
            ));
        }
        Ok(PatternSum { terms })
    }

    /// Built-in decompositions. The first four are the permutation forms; the
    /// `_w` forms add the repeated-letter terms needed on words.
    pub fn named(name: &str) -> Result<Self> {
        let terms: &[&str] = match name {
            "INV" => &["21", "3-12", "3-21", "2-31"],
            "MAJ" => &["21", "1-32", "2-31", "3-21"],
            "MAK" => &["21", "1-32", "2-31", "32-1"],
            "STAT" => &["21", "13-2", "21-3", "32-1"],
            "MAJ_w" => &["1-32", "1-21", "2-31", "2-21", "3-21", "21"],
            "STAT_w" => &["21-3", "21-2", "13-2", "12-1", "32-1", "21"],
            _ => return Err(Error::UnknownName(name.to_string())),
        };
        Self::parse(&terms.join("+"))
    }

    /// `"21+13-2+21-3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let terms = s
            .split('+')
            .map(VincularPattern::from_str)
            .collect::<Result<Vec<_>>>()?;
        Self::new(terms)
    }

    pub fn terms(&self) -> &[VincularPattern] {
        &self.terms
    }

    pub fn eval(&self, w: &Word) -> usize {
        self.terms.iter().map(|t| t.count_in(w)).sum()
    }
}

impl fmt::Display for PatternSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

pub fn parse_pattern(s: &str) -> Result<VincularPattern> {
    s.parse()
}

pub fn count_occurrences(pattern: &VincularPattern, w: &Word) -> usize {
    pattern.count_in(w)
}

/// Evaluate a named built-in sum on `w`.
pub fn eval_named(name: &str, w: &Word) -> Result<usize> {
    Ok(PatternSum::named(name)?.eval(w))
}
