//! Riordan groups over finite coefficient rings, computed through truncated
//! formal power series, and a finite-group engine for their truncations.

pub mod fps;
pub mod groupkit;
pub mod literal;
pub mod riordan;
pub mod theorems;

pub use fps::{RingSpec, TruncatedSeries};
pub use riordan::{RiordanMatrix, RiordanPair};
