use std::fmt;

use crate::graph::Edge;
use crate::sorted;

/// A pair of left and right vertex sets, kept in canonical form: both sides
/// strictly ascending.
///
/// Whether every left vertex is adjacent to every right vertex is a property
/// of a host graph, so the type itself does not enforce it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Biclique {
    left: Vec<u32>,
    right: Vec<u32>,
}

impl Biclique {
    /// Builds a biclique from arbitrary id lists, sorting and deduplicating.
    pub fn new(mut left: Vec<u32>, mut right: Vec<u32>) -> Self {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        Biclique { left, right }
    }

    /// Both sides must already be strictly ascending.
    pub(crate) fn from_sorted(left: Vec<u32>, right: Vec<u32>) -> Self {
        debug_assert!(left.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(right.windows(2).all(|w| w[0] < w[1]));
        Biclique { left, right }
    }

    pub fn left(&self) -> &[u32] {
        &self.left
    }

    pub fn right(&self) -> &[u32] {
        &self.right
    }

    pub fn into_parts(self) -> (Vec<u32>, Vec<u32>) {
        (self.left, self.right)
    }

    pub fn has_empty_side(&self) -> bool {
        self.left.is_empty() || self.right.is_empty()
    }

    /// Both sides hold at least `s` vertices.
    pub fn meets_threshold(&self, s: usize) -> bool {
        self.left.len() >= s && self.right.len() >= s
    }

    pub fn contains_left(&self, u: u32) -> bool {
        self.left.binary_search(&u).is_ok()
    }

    pub fn contains_right(&self, v: u32) -> bool {
        self.right.binary_search(&v).is_ok()
    }

    /// Whether `e` is one of the `|X|·|Y|` vertex pairs spanned by this biclique.
    pub fn contains_edge(&self, e: Edge) -> bool {
        self.contains_left(e.left) && self.contains_right(e.right)
    }

    /// Number of edges spanned, `|X|·|Y|`.
    pub fn edge_count(&self) -> usize {
        self.left.len() * self.right.len()
    }

    /// Total vertices on both sides.
    pub fn order(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Side-wise containment, `X ⊆ X'` and `Y ⊆ Y'`.
    pub fn is_sub_biclique_of(&self, other: &Biclique) -> bool {
        sorted::is_subset(&self.left, &other.left) && sorted::is_subset(&self.right, &other.right)
    }

    pub fn is_proper_sub_biclique_of(&self, other: &Biclique) -> bool {
        self != other && self.is_sub_biclique_of(other)
    }

    pub(crate) fn without_left(&self, u: u32) -> Biclique {
        Biclique::from_sorted(sorted::without(&self.left, u), self.right.clone())
    }

    pub(crate) fn without_right(&self, v: u32) -> Biclique {
        Biclique::from_sorted(self.left.clone(), sorted::without(&self.right, v))
    }

    /// Swaps the roles of the two sides.
    pub(crate) fn transposed(self) -> Biclique {
        Biclique {
            left: self.right,
            right: self.left,
        }
    }
}

impl fmt::Display for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(f: &mut fmt::Formatter<'_>, ids: &[u32]) -> fmt::Result {
            f.write_str("{")?;
            for (i, id) in ids.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{id}")?;
            }
            f.write_str("}")
        }
        f.write_str("(")?;
        side(f, &self.left)?;
        f.write_str(",")?;
        side(f, &self.right)?;
        f.write_str(")")
    }
}
