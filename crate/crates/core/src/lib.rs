//! Exact-arithmetic invariants of framed links.
//!
//! * [`rings`]: coefficient rings and specialization maps.
//! * [`diagrams`]: planar diagram codes, braids, writhe data and 2-cabling.
//! * [`homfly`] / [`kauffman`]: memoized skein engines and their adjoint cablings.
//! * [`dskein`]: the sigma-valued invariant of two-strand torus families.
//! * [`verify`]: the named identity checks behind `linkinv verify`.

pub mod diagrams;
pub mod dskein;
pub mod rings;
pub mod homfly;
pub mod kauffman;
pub mod skein;
pub mod verify;
