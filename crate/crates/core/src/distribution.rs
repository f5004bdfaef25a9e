//! Named statistics and joint distributions of statistic tuples.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::stats::{stat_vector, StatVector};
use crate::word::{IndexSet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statistic {
    Adj,
    Des,
    Ides,
    First,
    Imaj,
    Maj,
    Stat,
    DescentSet,
    InverseDescentSet,
    ShuffleSet,
}

/// Column order of the seven-statistic table.
pub const TABLE_COLUMNS: [Statistic; 7] = [
    Statistic::Adj,
    Statistic::Des,
    Statistic::Ides,
    Statistic::First,
    Statistic::Imaj,
    Statistic::Maj,
    Statistic::Stat,
];

/// Table columns followed by `D`, `Id`, `Sh`.
pub const ALL_COLUMNS: [Statistic; 10] = [
    Statistic::Adj,
    Statistic::Des,
    Statistic::Ides,
    Statistic::First,
    Statistic::Imaj,
    Statistic::Maj,
    Statistic::Stat,
    Statistic::DescentSet,
    Statistic::InverseDescentSet,
    Statistic::ShuffleSet,
];

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Adj => "Adj",
            Statistic::Des => "des",
            Statistic::Ides => "ides",
            Statistic::First => "F",
            Statistic::Imaj => "IMAJ",
            Statistic::Maj => "MAJ",
            Statistic::Stat => "STAT",
            Statistic::DescentSet => "D",
            Statistic::InverseDescentSet => "Id",
            Statistic::ShuffleSet => "Sh",
        }
    }

    pub fn of(self, v: &StatVector) -> StatValue {
        use StatValue::{Int, Set};
        match self {
            Statistic::Adj => Int(v.adj as u64),
            Statistic::Des => Int(v.des as u64),
            Statistic::Ides => Int(v.ides as u64),
            Statistic::First => Int(v.first.into()),
            Statistic::Imaj => Int(v.imaj as u64),
            Statistic::Maj => Int(v.maj as u64),
            Statistic::Stat => Int(v.stat as u64),
            Statistic::DescentSet => Set(v.descent_set.clone()),
            Statistic::InverseDescentSet => Set(v.inverse_descent_set.clone()),
            Statistic::ShuffleSet => Set(v.shuffle_set.clone()),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    /// Case-insensitive; set statistics also accept an `-set` suffix.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Ok(match lower.as_str() {
            "adj" => Statistic::Adj,
            "des" => Statistic::Des,
            "ides" => Statistic::Ides,
            "f" => Statistic::First,
            "imaj" => Statistic::Imaj,
            "maj" => Statistic::Maj,
            "stat" => Statistic::Stat,
            "d" | "d-set" => Statistic::DescentSet,
            "id" | "id-set" => Statistic::InverseDescentSet,
            "sh" | "sh-set" => Statistic::ShuffleSet,
            _ => return Err(Error::UnknownName(s.to_string())),
        })
    }
}

impl Serialize for Statistic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Parse a comma-separated schema such as `"des,Id-set,F,maj,stat"`.
pub fn parse_schema(s: &str) -> Result<Vec<Statistic>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatValue {
    Int(u64),
    Set(IndexSet),
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Int(x) => write!(f, "{x}"),
            StatValue::Set(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for StatValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            StatValue::Int(x) => serializer.serialize_u64(*x),
            StatValue::Set(s) => s.serialize(serializer),
        }
    }
}

pub fn tuple_of(v: &StatVector, schema: &[Statistic]) -> Vec<StatValue> {
    schema.iter().map(|s| s.of(v)).collect()
}

pub fn tuple(w: &Word, schema: &[Statistic]) -> Result<Vec<StatValue>> {
    Ok(tuple_of(&stat_vector(w)?, schema))
}

pub fn render_tuple(t: &[StatValue]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Multiset of statistic tuples over a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    schema: Vec<Statistic>,
    counts: BTreeMap<Vec<StatValue>, u64>,
}

impl JointDistribution {
    pub fn new(schema: Vec<Statistic>) -> Self {
        JointDistribution {
            schema,
            counts: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, t: Vec<StatValue>) {
        debug_assert_eq!(t.len(), self.schema.len());
        *self.counts.entry(t).or_insert(0) += 1;
    }

    pub fn schema(&self) -> &[Statistic] {
        &self.schema
    }

    pub fn counts(&self) -> &BTreeMap<Vec<StatValue>, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Least tuple whose multiplicity differs, as `(tuple, self, other)`.
    /// Schemas are not compared: this is how `(…, MAJ, STAT)` is matched
    /// against `(…, STAT, MAJ)`.
    pub fn first_difference(
        &self,
        other: &JointDistribution,
    ) -> Option<(Vec<StatValue>, u64, u64)> {
        let keys: std::collections::BTreeSet<&Vec<StatValue>> =
            self.counts.keys().chain(other.counts.keys()).collect();
        keys.into_iter().find_map(|k| {
            let a = self.counts.get(k).copied().unwrap_or(0);
            let b = other.counts.get(k).copied().unwrap_or(0);
            (a != b).then(|| (k.clone(), a, b))
        })
    }

    pub fn same_counts(&self, other: &JointDistribution) -> bool {
        self.counts == other.counts
    }
}

pub fn joint_distribution<I>(domain: I, schema: &[Statistic]) -> Result<JointDistribution>
where
    I: IntoIterator<Item = Word>,
{
    let mut dist = JointDistribution::new(schema.to_vec());
    for w in domain {
        dist.insert(tuple(&w, schema)?);
    }
    Ok(dist)
}

/// Like [`joint_distribution`] with statistic names, reporting unknown ones.
pub fn joint_distribution_by_name<I>(domain: I, names: &[&str]) -> Result<JointDistribution>
where
    I: IntoIterator<Item = Word>,
{
    let schema = names
        .iter()
        .map(|n| n.parse())
        .collect::<Result<Vec<Statistic>>>()?;
    joint_distribution(domain, &schema)
}
