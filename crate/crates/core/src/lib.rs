//! Mahonian statistics on words and permutations.
//!
//! The crate computes the descent-based statistics `F`, `des`, `ides`,
//! `Adj`, `MAJ`, `IMAJ` and `STAT` on words over positive integers, counts
//! vincular pattern occurrences, runs RSK and the Foata–Schützenberger
//! involution, and implements two involutions on permutations (Burstein's
//! `p` and `φ`) that exchange `MAJ` with `STAT`. The `φ` variant also fixes
//! the inverse descent set, so it descends to every rearrangement class of
//! words through the coding map.
//!
//! The [`verify`] module checks the resulting equidistributions exhaustively
//! on bounded domains.
//!
//! ```
//! use mahonian::{phi_on_class, stat_vector, Word};
//!
//! let v: Word = "434421651".parse().unwrap();
//! let s = stat_vector(&v).unwrap();
//! assert_eq!((s.des, s.maj, s.stat), (5, 25, 21));
//!
//! let image = phi_on_class(&v).unwrap();
//! assert_eq!(image.to_string(), "416432451");
//! let t = stat_vector(&image).unwrap();
//! assert_eq!((t.des, t.maj, t.stat), (5, 21, 25));
//! ```

pub mod distribution;
pub mod enumerate;
pub mod error;
pub mod involute;
pub mod record;
pub mod stats;
pub mod tableaux;
pub mod verify;
pub mod vincular;
pub mod word;

pub use distribution::{joint_distribution, JointDistribution, StatValue, Statistic};
pub use error::{Error, Result};
pub use involute::{
    burstein_p, decompose, phi, phi_on_class, recompose, transform_shuffle, ShuffleTriple,
};
pub use stats::{
    adj, code, decode, descent_data, inverse_descent_data, shuffle_set, stat, stat_vector,
    SetStatistic, StatVector,
};
pub use tableaux::{foata_j, inverse_rsk, rsk, Shape, Tableau};
pub use verify::{check, check_all, Bound, CheckId, CheckReport};
pub use vincular::{count_occurrences, parse_pattern, PatternSum, VincularPattern};
pub use word::{symmetries, IndexSet, Multiset, Permutation, Word};
