//! Braid group machinery and a decision procedure for double cosets of
//! connected parabolic subgroups of `B_n`.
//!
//! The layers, bottom up:
//! - [`word`], [`perm`], [`simple`], [`garside`], [`strands`]: braid words,
//!   permutation braids, left normal forms, crossing numbers, strand deletion;
//! - [`parabolic`]: standard parabolic subgroups `B_[k,l]`, membership,
//!   `Δ²`-power decomposition and instance standardization;
//! - [`centralizer`]: generating sets of centralizers of `B_[k,l]`;
//! - [`simconj`]: conjugacy and simultaneous conjugacy via summit sets;
//! - [`dcp`]: the double coset decider;
//! - [`oracle`]: bounded brute-force deciders used as ground truth, plus a
//!   second word problem through Artin's action on the free group.

pub mod centralizer;
pub mod dcp;
pub mod error;
pub mod garside;
pub mod oracle;
pub mod parabolic;
pub mod perm;
pub mod simconj;
pub mod simple;
pub mod strands;
pub mod word;

pub use error::{BraidError, Result};
pub use garside::{canonical_length, delta, equal, fundamental_power, inf, is_trivial, normal_form, sup, NormalForm};
pub use perm::{permutation_of, Permutation};
pub use simple::PermutationBraid;
pub use strands::{crossing_number, delete_strands};
pub use word::BraidWord;
