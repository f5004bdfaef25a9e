//! The coding map, its inverse on a rearrangement class, and the seven
//! statistics `F, des, ides, Adj, MAJ, IMAJ, STAT` with their index sets.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vincular::PatternSum;
use crate::word::{IndexSet, Multiset, Permutation, Word};

/// Standardize `w`: equal letters are ranked left to right.
pub fn code(w: &Word) -> Result<Permutation> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(standardize(w.letters()))
}

pub(crate) fn standardize(letters: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    // stable: ties keep positional order
    order.sort_by_key(|&i| letters[i]);
    let mut out = vec![0u32; letters.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation::from_vec_unchecked(out)
}

/// Inverse of [`code`] on the class described by `ms`: `v_i = w̄_{p_i}`.
pub fn decode(p: &Permutation, ms: &Multiset) -> Result<Word> {
    if p.len() != ms.size() {
        return Err(Error::SizeMismatch {
            permutation: p.len(),
            multiset: ms.size(),
        });
    }
    if !is_compatible(p, ms) {
        return Err(Error::NotCompatible(p.to_string()));
    }
    let sorted = ms.sorted_word();
    let bar = sorted.letters();
    Ok(
        Word::new(p.letters().iter().map(|&x| bar[x as usize - 1]).collect())
            .expect("letters come from a valid multiset"),
    )
}

/// `Id(p) ⊆ {b_1, …, b_k}`, the block boundaries of the class.
pub fn is_compatible(p: &Permutation, ms: &Multiset) -> bool {
    p.len() == ms.size() && inverse_descent_set(p.letters()).is_subset(&ms.block_boundaries())
}

/// An index set with its cardinality and sum (`des`/`MAJ`, `ides`/`IMAJ`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetStatistic {
    pub set: IndexSet,
    pub count: usize,
    pub sum: usize,
}

impl From<IndexSet> for SetStatistic {
    fn from(set: IndexSet) -> Self {
        SetStatistic {
            count: set.len(),
            sum: set.sum(),
            set,
        }
    }
}

/// `D(w)`, `des w`, `MAJ w`. Empty words give the empty set.
pub fn descent_data(w: &Word) -> SetStatistic {
    let d = w
        .letters()
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] > pair[1])
        .map(|(i, _)| i + 1)
        .collect::<Vec<_>>();
    IndexSet::from_sorted(d).into()
}

/// `Id(w)`, `ides w`, `IMAJ w`.
pub fn inverse_descent_data(w: &Word) -> Result<SetStatistic> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(inverse_descent_set(standardize(w.letters()).letters()).into())
}

/// Values `v` of a permutation such that `v + 1` appears before `v`.
fn inverse_descent_set(p: &[u32]) -> IndexSet {
    let mut pos = vec![0usize; p.len() + 1];
    for (i, &x) in p.iter().enumerate() {
        pos[x as usize] = i;
    }
    IndexSet::from_sorted((1..p.len()).filter(|&v| pos[v + 1] < pos[v]).collect())
}

/// `Sh(w)`: positions where consecutive letters straddle the threshold `w_1`.
pub fn shuffle_set(w: &Word) -> Result<IndexSet> {
    let letters = w.letters();
    let first = *letters.first().ok_or(Error::EmptyInput)?;
    Ok(IndexSet::from_sorted(
        letters
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| (pair[0] >= first) != (pair[1] >= first))
            .map(|(i, _)| i + 1)
            .collect(),
    ))
}

/// `Adj w`, with the sentinel `c(w)_{n+1} = 0` so a final letter coded `1` counts.
pub fn adj(w: &Word) -> Result<usize> {
    let c = code(w)?;
    let c = c.letters();
    let inner = c.windows(2).filter(|pair| pair[0] == pair[1] + 1).count();
    Ok(inner + usize::from(c[c.len() - 1] == 1))
}

fn stat_sum() -> &'static PatternSum {
    static SUM: OnceLock<PatternSum> = OnceLock::new();
    SUM.get_or_init(|| PatternSum::named("STAT_w").expect("built-in sum"))
}

/// `STAT w` as the six-term vincular pattern sum.
pub fn stat(w: &Word) -> usize {
    stat_sum().eval(w)
}

/// `MAJ w`.
pub fn maj(w: &Word) -> usize {
    descent_data(w).sum
}

/// All seven statistics of a nonempty word, with `D`, `Id` and `Sh`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatVector {
    pub first: u32,
    pub des: usize,
    pub ides: usize,
    pub adj: usize,
    pub maj: usize,
    pub imaj: usize,
    pub stat: usize,
    pub descent_set: IndexSet,
    pub inverse_descent_set: IndexSet,
    pub shuffle_set: IndexSet,
}

pub fn stat_vector(w: &Word) -> Result<StatVector> {
    let first = w.first().ok_or(Error::EmptyInput)?;
    let d = descent_data(w);
    let id = inverse_descent_data(w)?;
    Ok(StatVector {
        first,
        des: d.count,
        ides: id.count,
        adj: adj(w)?,
        maj: d.sum,
        imaj: id.sum,
        stat: stat(w),
        descent_set: d.set,
        inverse_descent_set: id.set,
        shuffle_set: shuffle_set(w)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn coding() {
        assert_eq!(code(&w("212231")).unwrap(), p("314562"));
        assert_eq!(code(&w("123")).unwrap(), p("123"));
        assert_eq!(code(&w("434421651")).unwrap(), p("546731982"));
        assert_eq!(code(&Word::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn decoding() {
        let ms: Multiset = "112223".parse().unwrap();
        assert_eq!(decode(&p("314562"), &ms).unwrap(), w("212231"));
        let ms: Multiset = "112344456".parse().unwrap();
        assert_eq!(decode(&p("519643782"), &ms).unwrap(), w("416432451"));
        assert_eq!(
            decode(&Permutation::identity(9), &ms).unwrap(),
            ms.sorted_word()
        );
    }

    #[test]
    fn decoding_errors() {
        let ms: Multiset = "1122".parse().unwrap();
        assert!(matches!(
            decode(&p("123"), &ms),
            Err(Error::SizeMismatch {
                permutation: 3,
                multiset: 4
            })
        ));
        // Id(2134) = {1}, not within the boundary set {2}
        assert!(matches!(
            decode(&p("2134"), &ms),
            Err(Error::NotCompatible(_))
        ));
    }

    #[test]
    fn descents() {
        let d = descent_data(&w("434421651"));
        assert_eq!(d.set.elems(), &[1, 4, 5, 7, 8]);
        assert_eq!((d.count, d.sum), (5, 25));
        assert_eq!(descent_data(&w("1122")).count, 0);
        assert_eq!(descent_data(&Word::empty()).sum, 0);
    }

    #[test]
    fn inverse_descents() {
        let id = inverse_descent_data(&w("434421651")).unwrap();
        assert_eq!(id.set.to_string(), "{2,3,4,8}");
        assert_eq!((id.count, id.sum), (4, 17));
        let id = inverse_descent_data(&w("2121")).unwrap();
        assert_eq!((id.count, id.sum), (1, 2));
        assert!(inverse_descent_data(&w("12345")).unwrap().set.is_empty());
        assert_eq!(inverse_descent_data(&Word::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn shuffle_sets() {
        assert_eq!(
            shuffle_set(&w("546731982")).unwrap().to_string(),
            "{1,2,4,6,8}"
        );
        assert!(shuffle_set(&w("123456")).unwrap().is_empty());
        assert_eq!(shuffle_set(&w("231")).unwrap().to_string(), "{2}");
        assert_eq!(shuffle_set(&Word::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn adjacency() {
        assert_eq!(adj(&w("1212")).unwrap(), 1);
        assert_eq!(adj(&w("1122")).unwrap(), 0);
        assert_eq!(adj(&w("21")).unwrap(), 2);
        assert_eq!(adj(&w("1")).unwrap(), 1);
        assert_eq!(adj(&Word::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn stat_values() {
        assert_eq!(stat(&w("2121")), 4);
        assert_eq!(stat(&w("434421651")), 21);
        assert_eq!(stat(&w("1234567")), 0);
        assert_eq!(stat(&Word::empty()), 0);
    }

    #[test]
    fn stat_vectors() {
        let v = stat_vector(&w("2112")).unwrap();
        assert_eq!(
            (v.first, v.des, v.ides, v.adj, v.maj, v.imaj, v.stat),
            (2, 1, 1, 0, 1, 2, 2)
        );
        let v = stat_vector(&w("1122")).unwrap();
        assert_eq!(
            (v.first, v.des, v.ides, v.adj, v.maj, v.imaj, v.stat),
            (1, 0, 0, 0, 0, 0, 0)
        );
        let v = stat_vector(&w("546731982")).unwrap();
        assert_eq!((v.first, v.des, v.maj, v.stat), (5, 5, 25, 21));
        assert_eq!(v.inverse_descent_set.to_string(), "{2,3,4,8}");
        assert_eq!(stat_vector(&Word::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn coding_example_keeps_statistics() {
        let word = stat_vector(&w("212231")).unwrap();
        let coded = stat_vector(&w("314562")).unwrap();
        assert_eq!((word.des, word.maj), (2, 6));
        assert_eq!(word.inverse_descent_set.to_string(), "{2}");
        assert_eq!(
            (
                word.des,
                word.maj,
                word.adj,
                word.stat,
                &word.inverse_descent_set
            ),
            (
                coded.des,
                coded.maj,
                coded.adj,
                coded.stat,
                &coded.inverse_descent_set
            )
        );
    }
}
