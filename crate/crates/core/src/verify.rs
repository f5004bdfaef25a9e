//! Exhaustive verification of the equidistribution identities over bounded
//! domains.
//!
//! Checks that come with an explicit bijection are run pointwise (statistic
//! swap and involution per element) and also as multiset equality of the
//! two tuple distributions. Reports are deterministic: domains are walked in
//! lexicographic order and the reported counterexample is the first failing
//! element in that order, whatever the worker count.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distribution::{render_tuple, tuple, JointDistribution, Statistic};
use crate::enumerate::{enumerate_class, factorial, multisets, permutations, words};
use crate::error::{Error, Result};
use crate::involute::{burstein_p, phi, phi_on_class};
use crate::stats::{code, descent_data, inverse_descent_data, is_compatible, stat_vector};
use crate::tableaux::foata_j;
use crate::word::{IndexSet, Multiset, Permutation, Word};

/// Default limit on the number of instances one check may enumerate.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Size parameters for a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    /// Largest length; lengths `1..=n` are swept.
    pub n: usize,
    /// Largest alphabet size for word and class domains.
    pub alphabet: u32,
    /// Restrict class checks to this single rearrangement class.
    pub word: Option<Multiset>,
    pub cap: u64,
    /// Worker threads; 0 picks the default.
    pub jobs: usize,
}

impl Default for Bound {
    fn default() -> Self {
        Bound {
            n: 6,
            alphabet: 3,
            word: None,
            cap: DEFAULT_CAP,
            jobs: 0,
        }
    }
}

impl Bound {
    pub fn with_n(n: usize) -> Self {
        Bound {
            n,
            ..Bound::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    /// `(Adj, des, F, MAJ, STAT) ~ (Adj, des, F, STAT, MAJ)` on `S_n` via Burstein's `p`.
    BursteinSwap,
    /// `(Adj, des, ides, F, MAJ, STAT) ~ (Adj, des, ides, F, STAT, MAJ)` on `[m]^n`.
    WordSextuple,
    /// `(des, Id, F, MAJ, STAT) ~ (des, Id, F, STAT, MAJ)` on `S_n` via `φ`.
    PhiSwap,
    /// The same quintuple on each `R(w)` via `φ_{R(w)}`.
    ClassSwap,
    /// `(IMAJ, des, ides, F, MAJ, STAT)` swap on each `R(w)` via `φ_{R(w)}`.
    ClassImajSwap,
    /// `ȷ` keeps `Id` and sends `D` to `{n - k}`.
    FoataInvariants,
    /// `MAJ + STAT = (n+1) des - (F - 1)` on permutations.
    MajStatSum,
    /// `MAJ π + MAJ φ(π) = (n+1) des π - (F π - 1)`.
    MajPhiSum,
    /// Coding keeps `(Adj, des, Id, MAJ, STAT)`.
    CodingPreserves,
    /// Images of `R(w)` under coding are the permutations with `Id` inside the block boundaries.
    CompatibleCharacterization,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::BursteinSwap,
        CheckId::WordSextuple,
        CheckId::PhiSwap,
        CheckId::ClassSwap,
        CheckId::ClassImajSwap,
        CheckId::FoataInvariants,
        CheckId::MajStatSum,
        CheckId::MajPhiSum,
        CheckId::CodingPreserves,
        CheckId::CompatibleCharacterization,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CheckId::BursteinSwap => "thm-1.1",
            CheckId::WordSextuple => "thm-1.2",
            CheckId::PhiSwap => "thm-1.3",
            CheckId::ClassSwap => "cor-1.4",
            CheckId::ClassImajSwap => "cor-1.5",
            CheckId::FoataInvariants => "lemma-3.1",
            CheckId::MajStatSum => "lemma-3.4",
            CheckId::MajPhiSum => "lemma-3.5",
            CheckId::CodingPreserves => "eq-2",
            CheckId::CompatibleCharacterization => "prop-2.4",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            CheckId::BursteinSwap => "(Adj, des, F, MAJ, STAT) ~ (Adj, des, F, STAT, MAJ) via p",
            CheckId::WordSextuple => {
                "(Adj, des, ides, F, MAJ, STAT) ~ (Adj, des, ides, F, STAT, MAJ) as multisets"
            }
            CheckId::PhiSwap => "(des, Id, F, MAJ, STAT) ~ (des, Id, F, STAT, MAJ) via phi",
            CheckId::ClassSwap => "(des, Id, F, MAJ, STAT) ~ (des, Id, F, STAT, MAJ) via phi_R(w)",
            CheckId::ClassImajSwap => {
                "(IMAJ, des, ides, F, MAJ, STAT) ~ (IMAJ, des, ides, F, STAT, MAJ) via phi_R(w)"
            }
            CheckId::FoataInvariants => "Id(j(pi)) = Id(pi), D(j(pi)) = n - D(pi), j involution",
            CheckId::MajStatSum => "MAJ + STAT = (n+1) des - (F - 1)",
            CheckId::MajPhiSum => "MAJ pi + MAJ phi(pi) = (n+1) des pi - (F pi - 1)",
            CheckId::CodingPreserves => {
                "(Adj, des, Id, MAJ, STAT)(w) = (Adj, des, Id, MAJ, STAT)(c(w))"
            }
            CheckId::CompatibleCharacterization => {
                "c(R(w)) = {pi : Id(pi) within block boundaries}, |R(w)| multinomial"
            }
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCount {
    pub label: String,
    pub instances: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub summary: String,
    pub domain: String,
    pub instances: u64,
    pub sizes: Vec<SizeCount>,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl fmt::Display for CheckReport {
    /// Line-oriented text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {verdict}", self.check)?;
        writeln!(f, "  claim: {}", self.summary)?;
        writeln!(f, "  domain: {}", self.domain)?;
        for s in &self.sizes {
            writeln!(f, "  {}: {} instances", s.label, s.instances)?;
        }
        write!(f, "  total: {} instances", self.instances)?;
        if let Some(c) = &self.counterexample {
            write!(
                f,
                "\n  counterexample: {}\n    expected: {}\n    actual:   {}",
                c.input, c.expected, c.actual
            )?;
        }
        Ok(())
    }
}

/// Both characterizations of the permutations coding `R(w)`, compared.
pub fn compatible_set(ms: &Multiset) -> Result<BTreeSet<Permutation>> {
    if ms.size() == 0 {
        return Ok(BTreeSet::from([Permutation::identity(0)]));
    }
    let images = enumerate_class(ms)
        .map(|v| code(&v))
        .collect::<Result<BTreeSet<_>>>()?;
    let by_id: BTreeSet<Permutation> = permutations(ms.size())
        .filter(|p| is_compatible(p, ms))
        .collect();
    if images != by_id {
        let witness = images
            .symmetric_difference(&by_id)
            .next()
            .map(ToString::to_string)
            .unwrap_or_default();
        return Err(Error::InternalInvariantBroken(format!(
            "coding image and Id characterization of {ms} differ at {witness}"
        )));
    }
    Ok(images)
}

pub fn check(id: CheckId, bound: &Bound) -> Result<CheckReport> {
    let planned = planned_instances(id, bound);
    if planned > u128::from(bound.cap) {
        return Err(Error::BoundTooLarge {
            instances: planned,
            cap: bound.cap,
        });
    }
    with_jobs(bound.jobs, || run(id, bound))
}

/// Every check at `bound`, in [`CheckId::ALL`] order.
pub fn check_all(bound: &Bound) -> Result<Vec<CheckReport>> {
    CheckId::ALL.iter().map(|&id| check(id, bound)).collect()
}

fn planned_instances(id: CheckId, bound: &Bound) -> u128 {
    let n = bound.n;
    let m = u128::from(bound.alphabet);
    let perms = || (1..=n).fold(0u128, |acc, k| acc.saturating_add(factorial_sat(k)));
    let words = || {
        (1..=m).fold(0u128, |acc, a| {
            (1..=n).fold(acc, |acc, k| acc.saturating_add(a.saturating_pow(k as u32)))
        })
    };
    match id {
        CheckId::BursteinSwap
        | CheckId::PhiSwap
        | CheckId::FoataInvariants
        | CheckId::MajStatSum
        | CheckId::MajPhiSum => perms(),
        CheckId::WordSextuple | CheckId::CodingPreserves => words(),
        CheckId::ClassSwap | CheckId::ClassImajSwap => match &bound.word {
            Some(ms) => ms.class_size(),
            // the classes of size k over [m] partition [m]^k
            None => (1..=n).fold(0u128, |acc, k| {
                acc.saturating_add(m.saturating_pow(k as u32))
            }),
        },
        CheckId::CompatibleCharacterization => match &bound.word {
            Some(ms) => factorial_sat(ms.size()),
            None => (1..=n).fold(0u128, |acc, k| {
                acc.saturating_add(
                    binomial(k as u128 + m - 1, m.saturating_sub(1))
                        .saturating_mul(factorial_sat(k)),
                )
            }),
        },
    }
}

fn factorial_sat(k: usize) -> u128 {
    if k > 33 {
        u128::MAX
    } else {
        factorial(k)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if jobs > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

/// First element (in slice order) whose check fails or errors.
fn first_failure<T, F>(items: &[T], point: F) -> Result<Option<Counterexample>>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Counterexample>> + Sync,
{
    let keep = |r: Result<Option<Counterexample>>| match r {
        Ok(None) => None,
        other => Some(other),
    };
    #[cfg(feature = "parallel")]
    let found = {
        use rayon::prelude::*;
        items.par_iter().map(&point).find_map_first(keep)
    };
    #[cfg(not(feature = "parallel"))]
    let found = items.iter().map(&point).find_map(keep);
    found.unwrap_or(Ok(None))
}

fn distribution(items: &[Word], schema: &[Statistic]) -> Result<JointDistribution> {
    #[cfg(feature = "parallel")]
    let tuples = {
        use rayon::prelude::*;
        items
            .par_iter()
            .map(|w| tuple(w, schema))
            .collect::<Result<Vec<_>>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let tuples = items
        .iter()
        .map(|w| tuple(w, schema))
        .collect::<Result<Vec<_>>>()?;
    let mut dist = JointDistribution::new(schema.to_vec());
    for t in tuples {
        dist.insert(t);
    }
    Ok(dist)
}

/// Accumulates per-size instance counts and stops at the first failure.
#[derive(Default)]
struct Sweep {
    sizes: Vec<SizeCount>,
    instances: u64,
    failure: Option<Counterexample>,
}

impl Sweep {
    fn done(&self) -> bool {
        self.failure.is_some()
    }

    fn count(&mut self, label: &str, k: u64) {
        self.instances += k;
        match self.sizes.last_mut() {
            Some(last) if last.label == label => last.instances += k,
            _ => self.sizes.push(SizeCount {
                label: label.to_string(),
                instances: k,
            }),
        }
    }

    fn pointwise<T, F>(&mut self, label: &str, items: &[T], point: F) -> Result<()>
    where
        T: Sync,
        F: Fn(&T) -> Result<Option<Counterexample>> + Sync,
    {
        if self.done() {
            return Ok(());
        }
        self.count(label, items.len() as u64);
        self.failure = first_failure(items, point)?;
        Ok(())
    }

    /// Multiset equality of the tuple distributions under two schemas.
    fn equidistributed(
        &mut self,
        domain: &str,
        items: &[Word],
        left: &[Statistic],
        right: &[Statistic],
    ) -> Result<()> {
        if self.done() {
            return Ok(());
        }
        let a = distribution(items, left)?;
        let b = distribution(items, right)?;
        if let Some((t, x, y)) = a.first_difference(&b) {
            self.failure = Some(Counterexample {
                input: format!("{domain}, tuple {}", render_tuple(&t)),
                expected: format!("multiplicity {x} under {}", schema_text(left)),
                actual: format!("multiplicity {y} under {}", schema_text(right)),
            });
        }
        Ok(())
    }
}

fn schema_text(schema: &[Statistic]) -> String {
    let names: Vec<&str> = schema.iter().map(|s| s.name()).collect();
    format!("({})", names.join(", "))
}

fn with_swap(fixed: &[Statistic], swapped: bool) -> Vec<Statistic> {
    let mut s = fixed.to_vec();
    if swapped {
        s.extend([Statistic::Stat, Statistic::Maj]);
    } else {
        s.extend([Statistic::Maj, Statistic::Stat]);
    }
    s
}

/// `map` is an involution on `x` and swaps `MAJ` with `STAT` while keeping `fixed`.
fn swap_point(
    x: &Word,
    map: impl Fn(&Word) -> Result<Word>,
    fixed: &[Statistic],
) -> Result<Option<Counterexample>> {
    let image = map(x)?;
    let before = tuple(x, &with_swap(fixed, false))?;
    let after = tuple(&image, &with_swap(fixed, true))?;
    if before != after {
        return Ok(Some(Counterexample {
            input: format!("{x} -> {image}"),
            expected: format!(
                "{} = {}",
                schema_text(&with_swap(fixed, true)),
                render_tuple(&before)
            ),
            actual: render_tuple(&after),
        }));
    }
    let back = map(&image)?;
    if &back != x {
        return Ok(Some(Counterexample {
            input: format!("{x} -> {image}"),
            expected: format!("involution returns {x}"),
            actual: back.to_string(),
        }));
    }
    Ok(None)
}

fn perm_words(k: usize) -> Vec<Word> {
    permutations(k).map(Permutation::into_word).collect()
}

fn as_perm(w: &Word) -> Permutation {
    Permutation::try_from(w.clone()).expect("domain holds permutations")
}

fn lift(f: fn(&Permutation) -> Result<Permutation>) -> impl Fn(&Word) -> Result<Word> {
    move |w| f(&as_perm(w)).map(Permutation::into_word)
}

fn classes(bound: &Bound) -> Vec<Multiset> {
    match &bound.word {
        Some(ms) => vec![ms.clone()],
        None => (1..=bound.n)
            .flat_map(|k| multisets(k, bound.alphabet))
            .collect(),
    }
}

fn domain_text(id: CheckId, bound: &Bound) -> String {
    let (n, m) = (bound.n, bound.alphabet);
    match id {
        CheckId::BursteinSwap
        | CheckId::PhiSwap
        | CheckId::FoataInvariants
        | CheckId::MajStatSum
        | CheckId::MajPhiSum => format!("S_n, n = 1..{n}"),
        CheckId::WordSextuple | CheckId::CodingPreserves => {
            format!("[m]^n, m = 1..{m}, n = 1..{n}")
        }
        CheckId::ClassSwap | CheckId::ClassImajSwap | CheckId::CompatibleCharacterization => {
            let scope = match &bound.word {
                Some(ms) => format!("R({})", ms.sorted_word()),
                None => format!("R(w) for every multiset of size 1..{n} over [{m}]"),
            };
            if id == CheckId::CompatibleCharacterization {
                format!("{scope}, scanning S_n per class")
            } else {
                scope
            }
        }
    }
}

type PermMap = fn(&Permutation) -> Result<Permutation>;

fn run(id: CheckId, bound: &Bound) -> Result<CheckReport> {
    use Statistic::*;
    let mut sweep = Sweep::default();
    match id {
        CheckId::PhiSwap | CheckId::BursteinSwap => {
            let (fixed, map): (&[Statistic], PermMap) = if id == CheckId::PhiSwap {
                (&[Des, InverseDescentSet, First], phi)
            } else {
                (&[Adj, Des, First], burstein_p)
            };
            for k in 1..=bound.n {
                let items = perm_words(k);
                let label = format!("n={k}");
                let f = lift(map);
                sweep.pointwise(&label, &items, |w| swap_point(w, &f, fixed))?;
                sweep.equidistributed(
                    &format!("S_{k}"),
                    &items,
                    &with_swap(fixed, false),
                    &with_swap(fixed, true),
                )?;
            }
        }
        CheckId::ClassSwap | CheckId::ClassImajSwap => {
            let fixed: &[Statistic] = if id == CheckId::ClassSwap {
                &[Des, InverseDescentSet, First]
            } else {
                &[Imaj, Des, Ides, First]
            };
            for ms in classes(bound) {
                let items: Vec<Word> = enumerate_class(&ms).collect();
                let label = format!("n={}", ms.size());
                sweep.pointwise(&label, &items, |w| swap_point(w, phi_on_class, fixed))?;
                let domain = format!("R({})", ms.sorted_word());
                sweep.equidistributed(
                    &domain,
                    &items,
                    &with_swap(fixed, false),
                    &with_swap(fixed, true),
                )?;
            }
        }
        CheckId::WordSextuple => {
            let fixed = [Adj, Des, Ides, First];
            for m in 1..=bound.alphabet {
                for k in 1..=bound.n {
                    let items: Vec<Word> = words(m, k).collect();
                    let label = format!("m={m},n={k}");
                    sweep.count(&label, items.len() as u64);
                    sweep.equidistributed(
                        &format!("[{m}]^{k}"),
                        &items,
                        &with_swap(&fixed, false),
                        &with_swap(&fixed, true),
                    )?;
                }
            }
        }
        CheckId::FoataInvariants => {
            for k in 1..=bound.n {
                let items = perm_words(k);
                sweep.pointwise(&format!("n={k}"), &items, foata_point)?;
            }
        }
        CheckId::MajStatSum | CheckId::MajPhiSum => {
            for k in 1..=bound.n {
                let items = perm_words(k);
                let point = |w: &Word| -> Result<Option<Counterexample>> {
                    let v = stat_vector(w)?;
                    let other = if id == CheckId::MajStatSum {
                        v.stat
                    } else {
                        descent_data(phi(&as_perm(w))?.as_word()).sum
                    };
                    let lhs = v.maj + other;
                    let rhs = (k + 1) * v.des - (v.first as usize - 1);
                    Ok((lhs != rhs).then(|| Counterexample {
                        input: w.to_string(),
                        expected: format!("(n+1) des - (F - 1) = {rhs}"),
                        actual: lhs.to_string(),
                    }))
                };
                sweep.pointwise(&format!("n={k}"), &items, point)?;
            }
        }
        CheckId::CodingPreserves => {
            let schema = [Adj, Des, InverseDescentSet, Maj, Stat];
            for m in 1..=bound.alphabet {
                for k in 1..=bound.n {
                    let items: Vec<Word> = words(m, k).collect();
                    let point = |w: &Word| -> Result<Option<Counterexample>> {
                        let c = code(w)?.into_word();
                        let (a, b) = (tuple(w, &schema)?, tuple(&c, &schema)?);
                        Ok((a != b).then(|| Counterexample {
                            input: format!("{w} coded as {c}"),
                            expected: render_tuple(&a),
                            actual: render_tuple(&b),
                        }))
                    };
                    sweep.pointwise(&format!("m={m},n={k}"), &items, point)?;
                }
            }
        }
        CheckId::CompatibleCharacterization => {
            let all = classes(bound);
            let mut start = 0;
            while start < all.len() {
                let k = all[start].size();
                let end = all[start..]
                    .iter()
                    .position(|ms| ms.size() != k)
                    .map_or(all.len(), |i| start + i);
                let group = &all[start..end];
                if sweep.done() {
                    break;
                }
                sweep.count(&format!("n={k}"), group.len() as u64 * factorial(k) as u64);
                sweep.failure = first_failure(group, compatible_point)?;
                start = end;
            }
        }
    }
    let passed = sweep.failure.is_none();
    Ok(CheckReport {
        check: id.id().to_string(),
        summary: id.summary().to_string(),
        domain: domain_text(id, bound),
        instances: sweep.instances,
        sizes: sweep.sizes,
        passed,
        counterexample: sweep.failure,
    })
}

fn foata_point(w: &Word) -> Result<Option<Counterexample>> {
    let p = as_perm(w);
    let n = p.len();
    let image = foata_j(&p)?;
    let fail = |expected: String, actual: String| {
        Ok(Some(Counterexample {
            input: format!("{p} -> {image}"),
            expected,
            actual,
        }))
    };
    let id_before = inverse_descent_data(w)?.set;
    let id_after = inverse_descent_data(image.as_word())?.set;
    if id_before != id_after {
        return fail(format!("Id = {id_before}"), id_after.to_string());
    }
    let reflected: IndexSet = descent_data(w).set.elems().iter().map(|&k| n - k).collect();
    let d_after = descent_data(image.as_word()).set;
    if reflected != d_after {
        return fail(format!("D = {reflected}"), d_after.to_string());
    }
    let back = foata_j(&image)?;
    if back != p {
        return fail(format!("involution returns {p}"), back.to_string());
    }
    Ok(None)
}

fn compatible_point(ms: &Multiset) -> Result<Option<Counterexample>> {
    let input = format!("R({})", ms.sorted_word());
    let set = match compatible_set(ms) {
        Ok(set) => set,
        Err(Error::InternalInvariantBroken(msg)) => {
            return Ok(Some(Counterexample {
                input,
                expected: "coding image equals Id characterization".into(),
                actual: msg,
            }))
        }
        Err(e) => return Err(e),
    };
    let class: Vec<Word> = enumerate_class(ms).collect();
    let multinomial = ms.class_size();
    let ordered = class.windows(2).all(|p| p[0] < p[1]);
    if set.len() as u128 != multinomial || class.len() as u128 != multinomial || !ordered {
        return Ok(Some(Counterexample {
            input,
            expected: format!(
                "{multinomial} words in increasing order and {multinomial} compatible permutations"
            ),
            actual: format!(
                "{} words (ordered: {ordered}), {} compatible permutations",
                class.len(),
                set.len()
            ),
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_ids_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.id().parse::<CheckId>().unwrap(), c);
        }
        assert!("thm-9".parse::<CheckId>().is_err());
    }

    #[test]
    fn compatible_examples() {
        let set = compatible_set(&"1122".parse().unwrap()).unwrap();
        assert_eq!(set.len(), 6);
        let boundary: IndexSet = "{2}".parse().unwrap();
        for p in &set {
            assert!(inverse_descent_data(p.as_word())
                .unwrap()
                .set
                .is_subset(&boundary));
        }
        assert_eq!(compatible_set(&"1234".parse().unwrap()).unwrap().len(), 24);
        let ones = compatible_set(&"1111".parse().unwrap()).unwrap();
        assert_eq!(
            ones.into_iter().collect::<Vec<_>>(),
            vec![Permutation::identity(4)]
        );
    }

    #[test]
    fn small_checks_pass() {
        let report = check(CheckId::PhiSwap, &Bound::with_n(5)).unwrap();
        assert!(report.passed, "{report}");
        assert_eq!(report.instances, 1 + 2 + 6 + 24 + 120);
        assert_eq!(report.sizes.last().unwrap().instances, 120);
        let report = check(CheckId::MajStatSum, &Bound::with_n(1)).unwrap();
        assert!(report.passed);
        assert_eq!(report.instances, 1);
    }

    #[test]
    fn single_class_check() {
        let bound = Bound {
            word: Some("1122".parse().unwrap()),
            ..Bound::default()
        };
        let report = check(CheckId::ClassSwap, &bound).unwrap();
        assert!(report.passed, "{report}");
        assert_eq!(report.instances, 6);
    }

    #[test]
    fn cap_is_enforced() {
        let bound = Bound {
            n: 12,
            cap: 1000,
            ..Bound::default()
        };
        assert!(matches!(
            check(CheckId::PhiSwap, &bound),
            Err(Error::BoundTooLarge { .. })
        ));
    }

    #[test]
    fn failing_point_is_reported_not_raised() {
        // Adj is not preserved by phi on words, so the swap with Adj fails.
        let ms: Multiset = "1122".parse().unwrap();
        let items: Vec<Word> = enumerate_class(&ms).collect();
        let got =
            first_failure(&items, |w| swap_point(w, phi_on_class, &[Statistic::Adj])).unwrap();
        let c = got.expect("Adj is not swapped along with MAJ and STAT");
        assert!(c.input.starts_with("1212"), "{c:?}");
    }
}
