//! Exhaustive invariant sweeps over small domains.

use std::collections::{BTreeSet, HashSet};

use mahonian::enumerate::{enumerate_class, multisets, permutations, words};
use mahonian::verify::{check, Bound, CheckId};
use mahonian::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn all_classes(max_n: usize, alphabet: u32) -> impl Iterator<Item = Multiset> {
    (1..=max_n).flat_map(move |n| multisets(n, alphabet))
}

#[test]
fn coding_is_injective_on_each_class_and_decodes_back() {
    for ms in all_classes(6, 4) {
        let mut images = HashSet::new();
        for v in enumerate_class(&ms) {
            let c = code(&v).unwrap();
            assert!(images.insert(c.clone()), "code not injective on {ms}");
            assert_eq!(decode(&c, &ms).unwrap(), v);
        }
        for p in images {
            assert_eq!(code(&decode(&p, &ms).unwrap()).unwrap(), p);
        }
    }
}

#[test]
fn coding_preserves_five_statistics() {
    for m in 1..=4 {
        for n in 1..=4 {
            for w in words(m, n) {
                let a = stat_vector(&w).unwrap();
                let b = stat_vector(code(&w).unwrap().as_word()).unwrap();
                assert_eq!(
                    (a.adj, a.des, &a.inverse_descent_set, a.maj, a.stat),
                    (b.adj, b.des, &b.inverse_descent_set, b.maj, b.stat),
                    "{w}"
                );
            }
        }
    }
}

#[test]
fn maj_plus_stat_on_permutations() {
    for n in 1..=7 {
        for p in permutations(n) {
            let v = stat_vector(p.as_word()).unwrap();
            assert_eq!(
                v.maj + v.stat,
                (n + 1) * v.des - (v.first as usize - 1),
                "{p}"
            );
        }
    }
    // Not an identity on words: 2121 has MAJ + STAT = 8 but (n+1) des - (F-1) = 9.
    let v = stat_vector(&"2121".parse().unwrap()).unwrap();
    assert_eq!(v.maj + v.stat, 8);
    assert_eq!(5 * v.des - (v.first as usize - 1), 9);
}

#[test]
fn index_sets_stay_in_range() {
    for m in 1..=4 {
        for n in 1..=5 {
            for w in words(m, n) {
                let v = stat_vector(&w).unwrap();
                for set in [&v.descent_set, &v.shuffle_set, &v.inverse_descent_set] {
                    assert!(
                        set.elems().iter().all(|&i| (1..n).contains(&i)),
                        "{w}: {set}"
                    );
                }
            }
        }
    }
}

#[test]
fn symmetries_are_involutions() {
    for n in 0..=6 {
        for p in permutations(n) {
            let (r, c, rc) = symmetries(&p);
            assert_eq!(r.reverse(), p);
            assert_eq!(c.complement(), p);
            assert_eq!(rc.reverse_complement(), p);
            assert_eq!(r.complement(), rc);
            assert_eq!(c.reverse(), rc);
        }
    }
}

fn is_standard(t: &Tableau) -> bool {
    Tableau::from_rows(t.rows().to_vec()).is_ok()
}

#[test]
fn rsk_round_trip_exhaustive() {
    for n in 0..=7 {
        for p in permutations(n) {
            let (insertion, recording) = rsk(&p);
            assert!(is_standard(&insertion) && is_standard(&recording), "{p}");
            assert_eq!(insertion.shape(), recording.shape());
            assert_eq!(inverse_rsk(&insertion, &recording).unwrap(), p);
        }
    }
}

#[test]
fn rsk_round_trip_random_length_12() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut letters: Vec<u32> = (1..=12).collect();
    for _ in 0..1000 {
        letters.shuffle(&mut rng);
        let p = Permutation::new(letters.clone()).unwrap();
        let (insertion, recording) = rsk(&p);
        assert_eq!(inverse_rsk(&insertion, &recording).unwrap(), p);
    }
}

#[test]
fn foata_involution_properties() {
    for n in 1..=6 {
        for p in permutations(n) {
            let (insertion, _) = rsk(&p);
            let (_, recording) = rsk(&p.reverse_complement());
            assert_eq!(insertion.shape(), recording.shape(), "{p}");

            let j = foata_j(&p).unwrap();
            assert_eq!(foata_j(&j).unwrap(), p);
            let id = |q: &Permutation| inverse_descent_data(q.as_word()).unwrap().set;
            assert_eq!(id(&j), id(&p), "{p}");
            let reflected: IndexSet = descent_data(p.as_word())
                .set
                .elems()
                .iter()
                .map(|&k| n - k)
                .collect();
            assert_eq!(descent_data(j.as_word()).set, reflected, "{p}");
        }
    }
}

#[test]
fn decompose_recompose_round_trip() {
    for n in 1..=7 {
        for p in permutations(n) {
            let t = decompose(&p).unwrap();
            assert_eq!(recompose(&t).unwrap(), p);
        }
    }
}

#[test]
fn shuffle_transform_is_an_involution_and_recomposes() {
    for n in 1..=7 {
        for p in permutations(n) {
            let t = decompose(&p).unwrap();
            let once = transform_shuffle(&t.shuffle, n).unwrap();
            assert_eq!(transform_shuffle(&once, n).unwrap(), t.shuffle);
            let moved = ShuffleTriple { shuffle: once, ..t };
            assert!(moved.validate().is_ok(), "{p}");
        }
    }
}

type Swap = (usize, IndexSet, u32, usize, usize);

fn swap_view(w: &Word, swapped: bool) -> Swap {
    let v = stat_vector(w).unwrap();
    let (a, b) = if swapped {
        (v.stat, v.maj)
    } else {
        (v.maj, v.stat)
    };
    (v.des, v.inverse_descent_set, v.first, a, b)
}

#[test]
fn phi_swaps_maj_and_stat_pointwise() {
    for n in 1..=7 {
        for p in permutations(n) {
            let image = phi(&p).unwrap();
            assert_eq!(
                swap_view(p.as_word(), false),
                swap_view(image.as_word(), true),
                "{p}"
            );
            let lhs = descent_data(p.as_word()).sum + descent_data(image.as_word()).sum;
            let v = stat_vector(p.as_word()).unwrap();
            assert_eq!(lhs, (n + 1) * v.des - (v.first as usize - 1), "{p}");
            if n <= 6 {
                assert_eq!(phi(&image).unwrap(), p);
            }
        }
    }
}

#[test]
fn burstein_p_swaps_with_adj() {
    for n in 1..=6 {
        for p in permutations(n) {
            let image = burstein_p(&p).unwrap();
            assert_eq!(burstein_p(&image).unwrap(), p);
            let a = stat_vector(p.as_word()).unwrap();
            let b = stat_vector(image.as_word()).unwrap();
            assert_eq!(
                (a.adj, a.des, a.first, a.maj, a.stat),
                (b.adj, b.des, b.first, b.stat, b.maj),
                "{p}"
            );
        }
    }
}

#[test]
fn class_involution_stays_in_class() {
    for ms in all_classes(6, 4) {
        let boundaries = ms.block_boundaries();
        for v in enumerate_class(&ms) {
            let image = phi_on_class(&v).unwrap();
            assert_eq!(image.multiset(), ms);
            assert_eq!(phi_on_class(&image).unwrap(), v);
            assert_eq!(swap_view(&v, false), swap_view(&image, true), "{v}");
            let id = inverse_descent_data(&image).unwrap().set;
            assert!(id.is_subset(&boundaries));
        }
    }
}

#[test]
fn class_enumeration_is_strictly_increasing_with_multinomial_length() {
    for ms in all_classes(6, 4) {
        let class: Vec<Word> = enumerate_class(&ms).collect();
        assert!(class.windows(2).all(|p| p[0] < p[1]), "{ms}");
        assert_eq!(class.len() as u128, ms.class_size(), "{ms}");
        let distinct: BTreeSet<&Word> = class.iter().collect();
        assert_eq!(distinct.len(), class.len());
    }
}

#[test]
fn class_quintuple_distributions_agree() {
    use Statistic::*;
    for ms in all_classes(6, 4) {
        let a = joint_distribution(
            enumerate_class(&ms),
            &[Des, InverseDescentSet, First, Maj, Stat],
        )
        .unwrap();
        let b = joint_distribution(
            enumerate_class(&ms),
            &[Des, InverseDescentSet, First, Stat, Maj],
        )
        .unwrap();
        assert!(a.same_counts(&b), "{ms}");
        assert_eq!(a.total() as u128, ms.class_size());
    }
}

#[test]
fn word_sextuple_distributions_agree() {
    use Statistic::*;
    for m in 1..=4 {
        for n in 1..=4 {
            let a = joint_distribution(words(m, n), &[Adj, Des, Ides, First, Maj, Stat]).unwrap();
            let b = joint_distribution(words(m, n), &[Adj, Des, Ides, First, Stat, Maj]).unwrap();
            assert!(a.same_counts(&b), "m = {m}, n = {n}");
        }
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    for id in CheckId::ALL {
        let one = check(
            id,
            &Bound {
                jobs: 1,
                n: 5,
                ..Bound::default()
            },
        )
        .unwrap();
        let many = check(
            id,
            &Bound {
                jobs: 4,
                n: 5,
                ..Bound::default()
            },
        )
        .unwrap();
        assert_eq!(one, many, "{id}");
        assert!(one.passed, "{one}");
    }
}
