//! Involutions on `S_n` that swap `MAJ` and `STAT`.
//!
//! A permutation `π` with first letter `k` is determined by the triple
//! (top subword of letters above `k`, bottom subword of letters below `k`,
//! shuffle set). Both [`phi`] and [`burstein_p`] act on the three parts
//! separately and recompose.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats::{code, decode, shuffle_set, standardize};
use crate::tableaux::foata_j;
use crate::word::{IndexSet, Permutation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ShuffleTriple {
    pub top: Word,
    pub bottom: Word,
    pub shuffle: IndexSet,
}

impl ShuffleTriple {
    /// Length of the permutation the triple describes.
    pub fn len(&self) -> usize {
        self.top.len() + self.bottom.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The first letter `k = |bottom| + 1`.
    pub fn first(&self) -> u32 {
        self.bottom.len() as u32 + 1
    }

    /// Checks letters and that the shuffle set splits `1..=n` into alternating
    /// high/low blocks with `|top| + 1` high and `|bottom|` low positions.
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidTriple(msg));
        let n = self.len();
        let k = self.first();
        let mut seen = vec![false; n + 1];
        seen[k as usize] = true;
        for &x in self.top.letters() {
            if x <= k || x as usize > n || seen[x as usize] {
                return invalid(format!(
                    "top letter {x} must be a distinct value in {}..={n}",
                    k + 1
                ));
            }
            seen[x as usize] = true;
        }
        for &x in self.bottom.letters() {
            if x >= k || seen[x as usize] {
                return invalid(format!(
                    "bottom letter {x} must be a distinct value below {k}"
                ));
            }
            seen[x as usize] = true;
        }
        if let Some(m) = self.shuffle.last() {
            if self.shuffle.elems()[0] == 0 || m >= n {
                return invalid(format!("shuffle set must lie in 1..{}", n - 1));
            }
        }
        let high = self.high_positions().filter(|&h| h).count();
        if high != self.top.len() + 1 {
            return invalid(format!(
                "shuffle set {} gives {high} high positions, expected {}",
                self.shuffle,
                self.top.len() + 1
            ));
        }
        Ok(())
    }

    /// Whether each position `1..=n` lies in a high block.
    fn high_positions(&self) -> impl Iterator<Item = bool> + '_ {
        let mut high = true;
        (1..=self.len()).map(move |i| {
            let here = high;
            if self.shuffle.contains(i) {
                high = !high;
            }
            here
        })
    }
}

pub fn decompose(p: &Permutation) -> Result<ShuffleTriple> {
    let k = *p.letters().first().ok_or(Error::EmptyInput)?;
    let pick = |keep: &dyn Fn(u32) -> bool| {
        Word::new(p.letters().iter().copied().filter(|&x| keep(x)).collect())
            .expect("subword of a permutation")
    };
    Ok(ShuffleTriple {
        top: pick(&|x| x > k),
        bottom: pick(&|x| x < k),
        shuffle: shuffle_set(p.as_word())?,
    })
}

/// Fill high blocks from `k` followed by `top`, low blocks from `bottom`.
pub fn recompose(t: &ShuffleTriple) -> Result<Permutation> {
    t.validate()?;
    let mut high = std::iter::once(t.first()).chain(t.top.letters().iter().copied());
    let mut low = t.bottom.letters().iter().copied();
    let out = t
        .high_positions()
        .map(|h| if h { high.next() } else { low.next() })
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| Error::InvalidTriple("block sizes do not match subwords".into()))?;
    Permutation::new(out).map_err(|e| Error::InvalidTriple(e.to_string()))
}

/// Reflect the shuffle set, adding `1` when its size is odd.
pub fn transform_shuffle(sh: &IndexSet, n: usize) -> Result<IndexSet> {
    if let Some(&bad) = sh.elems().iter().find(|&&i| i == 0 || i >= n) {
        return Err(Error::InvalidInput(format!(
            "shuffle element {bad} outside 1..{}",
            n.saturating_sub(1)
        )));
    }
    let reflected = sh.elems().iter().filter(|&&i| i >= 2).map(|&i| n + 1 - i);
    Ok(if sh.len() % 2 == 1 {
        std::iter::once(1).chain(reflected).collect()
    } else {
        reflected.collect()
    })
}

/// Apply a map on `S_m` to a word of distinct letters by standardizing,
/// mapping, then re-lettering with the word's own sorted letters.
fn on_letters(w: &Word, f: impl FnOnce(&Permutation) -> Result<Permutation>) -> Result<Word> {
    let image = f(&standardize(w.letters()))?;
    let mut sorted = w.letters().to_vec();
    sorted.sort_unstable();
    Ok(Word::new(
        image
            .letters()
            .iter()
            .map(|&x| sorted[x as usize - 1])
            .collect(),
    )
    .expect("letters taken from a word"))
}

fn transform(
    p: &Permutation,
    f: impl Fn(&Permutation) -> Result<Permutation>,
) -> Result<Permutation> {
    let t = decompose(p)?;
    let image = ShuffleTriple {
        top: on_letters(&t.top, &f)?,
        bottom: on_letters(&t.bottom, &f)?,
        shuffle: transform_shuffle(&t.shuffle, p.len())?,
    };
    recompose(&image).map_err(|e| {
        Error::InternalInvariantBroken(format!("image triple of {p} does not recompose: {e}"))
    })
}

/// The involution `φ`: `ȷ` on both subwords, reflected shuffle set.
pub fn phi(p: &Permutation) -> Result<Permutation> {
    transform(p, foata_j)
}

/// Burstein's involution `p`: reverse-complement on both subwords,
/// reflected shuffle set.
pub fn burstein_p(p: &Permutation) -> Result<Permutation> {
    transform(p, |q| Ok(q.reverse_complement()))
}

/// `φ_{R(w)} = c⁻¹ ∘ φ ∘ c` on the rearrangement class of `v`.
pub fn phi_on_class(v: &Word) -> Result<Word> {
    let image = phi(&code(v)?)?;
    decode(&image, &v.multiset()).map_err(|e| match e {
        Error::NotCompatible(_) => {
            Error::InternalInvariantBroken(format!("phi moved the code of {v} out of its class"))
        }
        other => other,
    })
}
