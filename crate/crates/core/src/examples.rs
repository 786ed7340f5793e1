//! Named braids used across tests, benchmarks and the command line.

use crate::braid::BraidWord;

/// `(word, braid index)` whose plat closure is the trefoil.
pub const TREFOIL_PLAT: (&str, usize) = ("s2^3", 4);

/// Plat closure is the Hopf link.
pub const HOPF_PLAT: (&str, usize) = ("s2^2", 4);

/// Plat closure is the Borromean rings. The strand permutation carries
/// the top colours `(j, j, k, k, l, l)` to `(k, k, j, j, l, l)` at the
/// bottom.
pub const BORROMEAN_PLAT: (&str, usize) = ("s2 s4^-1 s3 s4^-1 s3 s1 s2^-1 s4^-1", 6);

/// Trace closure is the trefoil.
pub const TREFOIL_TRACE: (&str, usize) = ("s1^3", 2);

/// Trace closure is the figure-eight knot.
pub const FIGURE_EIGHT_TRACE: (&str, usize) = ("s1 s2^-1 s1 s2^-1", 3);

/// Trace closure is the Borromean rings.
pub const BORROMEAN_TRACE: (&str, usize) = ("s1 s2^-1 s1 s2^-1 s1 s2^-1", 3);

pub fn braid(named: (&str, usize)) -> BraidWord {
    BraidWord::parse(named.0, named.1).expect("named braids parse")
}
