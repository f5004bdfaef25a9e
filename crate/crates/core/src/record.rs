//! Rows of statistics in TSV or JSON form, and the per-class table.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::distribution::{tuple, StatValue, Statistic};
use crate::enumerate::enumerate_class;
use crate::error::{Error, Result};
use crate::word::{Multiset, Word};

/// A word and its statistics in schema order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub word: Word,
    pub values: Vec<(Statistic, StatValue)>,
}

impl OutputRecord {
    pub fn new(word: Word, schema: &[Statistic]) -> Result<Self> {
        let values = schema.iter().copied().zip(tuple(&word, schema)?).collect();
        Ok(OutputRecord { word, values })
    }

    pub fn tsv_row(&self) -> String {
        let mut fields = vec![self.word.to_string()];
        fields.extend(self.values.iter().map(|(_, v)| v.to_string()));
        fields.join("\t")
    }
}

impl Serialize for OutputRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.values.len() + 1))?;
        map.serialize_entry("word", &self.word)?;
        for (stat, value) in &self.values {
            map.serialize_entry(stat.name(), value)?;
        }
        map.end()
    }
}

pub fn tsv_header(schema: &[Statistic]) -> String {
    let mut fields = vec!["word"];
    fields.extend(schema.iter().map(|s| s.name()));
    fields.join("\t")
}

/// Header line then one line per record, each newline-terminated.
pub fn render_tsv(records: &[OutputRecord], schema: &[Statistic]) -> String {
    let mut out = tsv_header(schema);
    out.push('\n');
    for r in records {
        out.push_str(&r.tsv_row());
        out.push('\n');
    }
    out
}

pub fn render_json(records: &[OutputRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize") + "\n"
}

/// One record per word of `R(w)`, lexicographically.
pub fn class_table(ms: &Multiset, schema: &[Statistic], cap: u64) -> Result<Vec<OutputRecord>> {
    let size = ms.class_size();
    if size > u128::from(cap) {
        return Err(Error::BoundTooLarge {
            instances: size,
            cap,
        });
    }
    enumerate_class(ms)
        .map(|w| OutputRecord::new(w, schema))
        .collect()
}
