//! Exact computation in the higher-dimensional Thompson groups nV.
//!
//! Elements are pairs of numbered dyadic patterns ([`element`]); the monoid of
//! patterns is handled by [`monoid`] over labeled forests ([`forest`]). The
//! group generators, relation families and the L·M·R factorization live in
//! [`group`], [`relations`], [`trunk`] and [`factor`]. [`presentation`] emits
//! and verifies the finite presentations and abelianizes them with [`snf`].
//! [`parse`] reads words and [`checks`] is the acceptance suite.

pub mod checks;
pub mod element;
pub mod factor;
pub mod forest;
pub mod group;
pub mod monoid;
pub mod parse;
pub mod pattern;
pub mod presentation;
pub mod relations;
pub mod snf;
pub mod trunk;

pub use element::Element;
pub use forest::{Forest, Tree};
pub use monoid::{MonoidLetter, MonoidWord};
pub use pattern::{Address, DyadicBrick, DyadicInterval, Pattern};
