use std::collections::BTreeSet;

use crate::biclique::Biclique;
use crate::changeset::ChangeSet;
use crate::error::{GraphError, OracleError};
use crate::graph::{BipartiteGraph, EdgeBatch, Side};
use crate::mbe::{maximal_bicliques, SizeThreshold};

/// Largest `|L| + |R|` accepted by [`brute_force_bc`].
pub const BRUTE_FORCE_VERTEX_LIMIT: usize = 20;

/// Which maximal bicliques an enumeration reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Both sides hold at least `s` vertices.
    NonTrivial(SizeThreshold),
    /// Also admit `(L, ∅)` and `(∅, R)` when nothing extends them. Used by
    /// the extremal counting bounds.
    TrivialInclusive,
}

/// Every maximal biclique of `g` under `convention`, in ascending order.
///
/// Closes every subset of the smaller side and keeps the subsets that are
/// fixed points, so the cost is `2^min(|L|,|R|)` closures.
pub fn brute_force_bc(g: &BipartiteGraph, convention: Convention) -> Result<Vec<Biclique>, OracleError> {
    let n = g.num_vertices();
    if n > BRUTE_FORCE_VERTEX_LIMIT {
        return Err(OracleError::TooLarge {
            vertices: n,
            limit: BRUTE_FORCE_VERTEX_LIMIT,
        });
    }
    let small = if g.num_right() < g.num_left() {
        Side::Right
    } else {
        Side::Left
    };
    let small_vs = g.side_vertices(small);
    let big_vs = g.side_vertices(small.opposite());
    let common = |side: Side, set: &[u32], everything: &[u32]| -> Vec<u32> {
        if set.is_empty() {
            everything.to_vec()
        } else {
            g.common_neighbors(side, set)
        }
    };

    let mut found = BTreeSet::new();
    for mask in 0u64..(1u64 << small_vs.len()) {
        let subset: Vec<u32> = small_vs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let partners = common(small, &subset, &big_vs);
        let closed = common(small.opposite(), &partners, &small_vs);
        if closed != subset || (closed.is_empty() && partners.is_empty()) {
            continue;
        }
        let b = match small {
            Side::Left => Biclique::from_sorted(closed, partners),
            Side::Right => Biclique::from_sorted(partners, closed),
        };
        let keep = match convention {
            Convention::NonTrivial(s) => b.meets_threshold(s.get()),
            Convention::TrivialInclusive => true,
        };
        if keep {
            found.insert(b);
        }
    }
    Ok(found.into_iter().collect())
}

/// `BC(after) ∖ BC(before)` and `BC(before) ∖ BC(after)` by brute force.
pub fn brute_force_change(
    before: &BipartiteGraph,
    after: &BipartiteGraph,
    convention: Convention,
) -> Result<ChangeSet, OracleError> {
    let old: BTreeSet<_> = brute_force_bc(before, convention)?.into_iter().collect();
    let new: BTreeSet<_> = brute_force_bc(after, convention)?.into_iter().collect();
    Ok(ChangeSet::new(
        new.difference(&old).cloned().collect(),
        old.difference(&new).cloned().collect(),
    ))
}

/// Change between two graphs by enumerating both in full and diffing.
pub fn baseline_diff(before: &BipartiteGraph, after: &BipartiteGraph, s: SizeThreshold) -> ChangeSet {
    let old: BTreeSet<_> = maximal_bicliques(before, s).into_iter().collect();
    let new: BTreeSet<_> = maximal_bicliques(after, s).into_iter().collect();
    ChangeSet::new(
        new.difference(&old).cloned().collect(),
        old.difference(&new).cloned().collect(),
    )
}

/// Change caused by adding `h` to `g`, by full re-enumeration.
pub fn baseline_bc(g: &BipartiteGraph, h: &EdgeBatch, s: SizeThreshold) -> Result<ChangeSet, GraphError> {
    let mut after = g.clone();
    after.add_edges(h)?;
    Ok(baseline_diff(g, &after, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::oracle::{gen_cp, gen_extremal};

    fn all() -> Convention {
        Convention::NonTrivial(SizeThreshold::ALL)
    }

    fn t0() -> BipartiteGraph {
        BipartiteGraph::from_edges([Edge::new(0, 0), Edge::new(1, 1)]).unwrap()
    }

    fn bc(l: &[u32], r: &[u32]) -> Biclique {
        Biclique::new(l.to_vec(), r.to_vec())
    }

    #[test]
    fn cocktail_party_counts() {
        assert_eq!(brute_force_bc(&gen_cp(3), Convention::TrivialInclusive).unwrap().len(), 8);
        assert_eq!(brute_force_bc(&gen_cp(3), all()).unwrap().len(), 6);
        assert_eq!(brute_force_bc(&gen_cp(4), Convention::TrivialInclusive).unwrap().len(), 16);
        assert_eq!(brute_force_bc(&gen_cp(1), Convention::TrivialInclusive).unwrap().len(), 2);
    }

    #[test]
    fn empty_graph() {
        assert!(brute_force_bc(&BipartiteGraph::new(), all()).unwrap().is_empty());
        assert!(brute_force_bc(&BipartiteGraph::new(), Convention::TrivialInclusive)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn trivial_bicliques_only_when_unextendable() {
        // K_{1,1}: (L,∅) extends to (L,R), so only the full biclique remains.
        let g = BipartiteGraph::from_edges([Edge::new(0, 0)]).unwrap();
        assert_eq!(
            brute_force_bc(&g, Convention::TrivialInclusive).unwrap(),
            vec![bc(&[0], &[0])]
        );
    }

    #[test]
    fn size_guard() {
        let g = BipartiteGraph::with_vertices(11, 10);
        assert!(matches!(
            brute_force_bc(&g, all()),
            Err(OracleError::TooLarge { vertices: 21, .. })
        ));
    }

    #[test]
    fn baseline_on_t0() {
        let cs = baseline_bc(&t0(), &vec![Edge::new(0, 1)].into(), SizeThreshold::ALL).unwrap();
        assert_eq!(cs.new, vec![bc(&[0], &[0, 1]), bc(&[0, 1], &[1])]);
        assert_eq!(cs.del, vec![bc(&[0], &[0]), bc(&[1], &[1])]);
        let none = baseline_bc(&t0(), &EdgeBatch::empty(), SizeThreshold::ALL).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn extremal_six_vertex_change() {
        let (g, e) = gen_extremal(6).unwrap();
        let cs = baseline_bc(&g, &vec![e].into(), SizeThreshold::ALL).unwrap();
        assert_eq!((cs.new.len(), cs.del.len()), (4, 6));
        let mut after = g.clone();
        after.add_edges(&vec![e].into()).unwrap();
        let full = brute_force_change(&g, &after, Convention::TrivialInclusive).unwrap();
        assert_eq!(brute_force_bc(&g, Convention::TrivialInclusive).unwrap().len(), 8);
        assert_eq!(brute_force_bc(&after, Convention::TrivialInclusive).unwrap().len(), 4);
        assert_eq!(full.len(), 12);
        assert_eq!(brute_force_change(&g, &after, all()).unwrap().sorted(), cs.sorted());
    }
}
