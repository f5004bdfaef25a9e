//! Standard Young tableaux, row-insertion RSK on permutations and the
//! involution `ȷ(π) = RSK⁻¹(P_π, Q_{π^{rc}})`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Permutation;

/// Weakly decreasing row lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

/// A filling of a shape with `1..=n` increasing along rows and columns.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::NotStandard(msg));
        if self.rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        if self.rows.windows(2).any(|r| r[0].len() < r[1].len()) {
            return bad("row lengths must weakly decrease".into());
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            let i = x as usize;
            if i == 0 || i > n || seen[i] {
                return bad(format!("entries must be 1..{n}, each once"));
            }
            seen[i] = true;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|p| p[0] >= p[1]) {
                return bad(format!("row {} is not increasing", r + 1));
            }
            if r > 0
                && row
                    .iter()
                    .zip(&self.rows[r - 1])
                    .any(|(below, above)| above >= below)
            {
                return bad(format!("column increase fails in row {}", r + 1));
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn position_of(&self, x: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&y| y == x).map(|c| (r, c)))
    }
}

impl fmt::Display for Tableau {
    /// One row per line, top row first, entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            let parts: Vec<String> = row.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

/// Insertion and recording tableaux `(P_π, Q_π)` by Schensted row insertion.
pub fn rsk(p: &Permutation) -> (Tableau, Tableau) {
    let mut insertion: Vec<Vec<u32>> = Vec::new();
    let mut recording: Vec<Vec<u32>> = Vec::new();
    for (step, &value) in p.letters().iter().enumerate() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == insertion.len() {
                insertion.push(vec![x]);
                recording.push(vec![step as u32 + 1]);
                break;
            }
            let row = &mut insertion[r];
            // rows are increasing, so the bump target is found by binary search
            let c = row.partition_point(|&y| y < x);
            if c == row.len() {
                row.push(x);
                recording[r].push(step as u32 + 1);
                break;
            }
            std::mem::swap(&mut row[c], &mut x);
            r += 1;
        }
    }
    (Tableau { rows: insertion }, Tableau { rows: recording })
}

/// Reverse bumping, removing the cells of `q` in order `n, n-1, …, 1`.
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    p.validate()?;
    q.validate()?;
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = p.size();
    let mut rows = p.rows.clone();
    let mut out = vec![0u32; n];
    for step in (1..=n as u32).rev() {
        let (r, c) = q
            .position_of(step)
            .expect("validated tableau holds every entry");
        // Cells of q larger than `step` are gone, so (r, c) is a corner of `rows`.
        debug_assert_eq!(c + 1, rows[r].len());
        let mut x = rows[r].pop().expect("corner cell");
        if rows[r].is_empty() {
            rows.pop();
        }
        for above in (0..r).rev() {
            let row = &mut rows[above];
            let k = row.partition_point(|&y| y < x) - 1;
            std::mem::swap(&mut row[k], &mut x);
        }
        out[step as usize - 1] = x;
    }
    Permutation::new(out).map_err(|e| Error::InternalInvariantBroken(e.to_string()))
}

/// `ȷ(π) = RSK⁻¹(P_π, Q_{π^{rc}})`.
pub fn foata_j(p: &Permutation) -> Result<Permutation> {
    let (insertion, _) = rsk(p);
    let (_, recording) = rsk(&p.reverse_complement());
    if insertion.shape() != recording.shape() {
        return Err(Error::InternalInvariantBroken(format!(
            "P and Q of the reverse complement of {p} differ in shape"
        )));
    }
    inverse_rsk(&insertion, &recording)
}
