//! Lexicographic enumeration of `S_n`, `[m]^n`, rearrangement classes and
//! the multisets of a given size.

use crate::word::{Multiset, Permutation, Word};

/// Distinct rearrangements of a word in increasing lexicographic order.
#[derive(Debug, Clone)]
pub struct Rearrangements {
    next: Option<Vec<u32>>,
}

impl Rearrangements {
    fn starting_at(sorted: Vec<u32>) -> Self {
        Rearrangements { next: Some(sorted) }
    }
}

impl Iterator for Rearrangements {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Word::new(current).expect("letters of a multiset are positive"))
    }
}

/// Advance to the next lexicographic arrangement; `false` at the last one.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("v[i + 1] > v[i]");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every word of `R(w)` exactly once, lexicographically.
pub fn enumerate_class(ms: &Multiset) -> Rearrangements {
    Rearrangements::starting_at(ms.sorted_word().into_letters())
}

/// `S_n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    Rearrangements::starting_at((1..=n as u32).collect())
        .map(|w| Permutation::try_from(w).expect("rearrangement of 1..n"))
}

/// `[m]^n` in lexicographic order.
pub fn words(m: u32, n: usize) -> impl Iterator<Item = Word> {
    let mut next = (m > 0 || n == 0).then(|| vec![1u32; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if let Some(i) = succ.iter().rposition(|&x| x < m) {
            succ[i] += 1;
            succ[i + 1..].fill(1);
            next = Some(succ);
        }
        Some(Word::new(current).expect("letters are at least 1"))
    })
}

/// All multisets of size `n` over the alphabet `[m]` (letters may be absent).
pub fn multisets(n: usize, m: u32) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut counts = vec![0usize; m as usize];
    fill(&mut counts, 0, n, &mut out);
    out
}

fn fill(counts: &mut [usize], at: usize, left: usize, out: &mut Vec<Multiset>) {
    if at + 1 == counts.len() {
        counts[at] = left;
        out.push(
            Multiset::from_counts(counts.iter().enumerate().map(|(i, &k)| (i as u32 + 1, k)))
                .expect("letters start at 1"),
        );
        return;
    }
    if counts.is_empty() {
        return;
    }
    for k in (0..=left).rev() {
        counts[at] = k;
        fill(counts, at + 1, left - k, out);
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
