//! Crystal combinatorics for type `D_n`.
//!
//! The crate models the crystal of Lusztig data attached to one fixed convex
//! order on the positive roots, its subcrystal supported on the sum roots
//! (a triangle with `n−1` rows), and the affine crystal structure that this
//! triangle carries.  The main computational surfaces are:
//!
//! * signature-rule Kashiwara operators on Lusztig data ([`pbw`]), with an
//!   independent braid-move/transition-map oracle ([`roots`]);
//! * the double-path statistics on the triangle that cut out the level-`s`
//!   subcrystals as lattice polytopes and compute tableau shapes ([`paths`]);
//! * Burge insertion between triangle data and semistandard tableaux with
//!   even column lengths, in both orientations ([`burge`], [`tableaux`]);
//! * spin trails, string formulas and 0/1 triangle arrays, used as a second
//!   independent route to the same statistics ([`trails`]);
//! * finite affine crystal graphs at level `s`, their enumeration, and
//!   labeled-digraph comparison across the two realizations ([`kr`]).
//!
//! Everything is exact integer combinatorics; all values are immutable after
//! construction and every operation is a pure function.

pub mod burge;
pub mod delta;
pub mod kr;
pub mod paths;
pub mod pbw;
pub mod roots;
pub mod tableaux;
pub mod trails;
pub mod verify;

pub use delta::TriangleCoord;
pub use pbw::{LusztigDatum, Support};
pub use roots::{BraidMove, Root, RootSystemD};
pub use tableaux::{Letter, Tableau};
