//! Rectangular semistandard tableaux with skewed Kostka weights, and their
//! bijections with permutations constrained by longest increasing
//! subsequences.
//!
//! * [`tableau`]: diagrams, tableaux, content vectors and rectangle subtraction.
//! * [`complement`]: column and tableau complements.
//! * [`perm`]: permutations, LIS and the Robinson-Schensted correspondence.
//! * [`bijection`]: rectangle <-> tableau pair maps, with and without skew.
//! * [`enumeration`]: exact counts by enumeration and closed forms.

pub mod bijection;
pub mod complement;
pub mod enumeration;
pub mod perm;
pub mod tableau;

pub use bijection::{BijectionError, BijectionParams};
pub use enumeration::{BigCount, EnumError};
pub use perm::{Permutation, TableauPair};
pub use tableau::{Classification, Column, ContentVector, Diagram, RectShape, SkewWeight, Tableau, TableauError};
