use std::collections::BTreeSet;

use crate::biclique::Biclique;

/// Maximal bicliques gained (`new`) and lost (`del`) by one update.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChangeSet {
    pub new: Vec<Biclique>,
    pub del: Vec<Biclique>,
}

impl ChangeSet {
    pub fn new(new: Vec<Biclique>, del: Vec<Biclique>) -> Self {
        ChangeSet { new, del }
    }

    pub fn is_empty(&self) -> bool {
        self.new.is_empty() && self.del.is_empty()
    }

    /// `|Υ| = |Υ^new| + |Υ^del|`.
    pub fn len(&self) -> usize {
        self.new.len() + self.del.len()
    }

    /// Sum of `|X|·|Y|` over both sides of the change.
    pub fn change_edges(&self) -> usize {
        self.new
            .iter()
            .chain(&self.del)
            .map(Biclique::edge_count)
            .sum()
    }

    /// Both sides sorted, for order-insensitive comparison.
    pub fn sorted(mut self) -> Self {
        self.new.sort_unstable();
        self.del.sort_unstable();
        self
    }

    pub fn new_set(&self) -> BTreeSet<Biclique> {
        self.new.iter().cloned().collect()
    }

    pub fn del_set(&self) -> BTreeSet<Biclique> {
        self.del.iter().cloned().collect()
    }

    /// The same change seen in the opposite direction.
    pub fn inverted(self) -> Self {
        ChangeSet {
            new: self.del,
            del: self.new,
        }
    }

    /// Net effect of applying `self` and then `later`.
    ///
    /// A biclique created by one step and destroyed by the other cancels out.
    pub fn then(self, later: ChangeSet) -> ChangeSet {
        let first_new = self.new_set();
        let first_del = self.del_set();
        let later_new = later.new_set();
        let later_del = later.del_set();
        let new = self
            .new
            .into_iter()
            .filter(|b| !later_del.contains(b))
            .chain(later.new.into_iter().filter(|b| !first_del.contains(b)))
            .collect();
        let del = self
            .del
            .into_iter()
            .filter(|b| !later_new.contains(b))
            .chain(later.del.into_iter().filter(|b| !first_new.contains(b)))
            .collect();
        ChangeSet { new, del }
    }
}
