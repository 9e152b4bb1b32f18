//! Infinite nested radicals of arbitrary root order.
//!
//! Layer generators for radicals of any root order, certified interval
//! enclosures of their truncations, exact polynomial checks of the underlying
//! functional equation, and a small expression language with text and LaTeX
//! printers.

pub mod algebra;
pub mod cli;
pub mod expr;
pub mod numeric;
pub mod radical;
pub mod report;

pub use numeric::{BigRat, Dyadic, Interval};
pub use radical::{Entry4Spec, GeneralSpec, LayerSource, TailPolicy, TruncationResult};
