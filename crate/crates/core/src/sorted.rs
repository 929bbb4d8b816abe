//! Merge-style helpers over strictly ascending `u32` slices.

use std::cmp::Ordering;

pub(crate) fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    intersect_into(a, b, &mut out);
    out
}

pub(crate) fn intersect_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    // Galloping pays off once one side dwarfs the other (hub vertices).
    if a.len() * 16 < b.len() {
        out.extend(a.iter().filter(|x| b.binary_search(x).is_ok()));
        return;
    }
    if b.len() * 16 < a.len() {
        out.extend(b.iter().filter(|x| a.binary_search(x).is_ok()));
        return;
    }
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// `a ⊆ b`
pub(crate) fn is_subset(a: &[u32], b: &[u32]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Inserts `x`, returning false if it was already present.
pub(crate) fn insert(v: &mut Vec<u32>, x: u32) -> bool {
    match v.binary_search(&x) {
        Ok(_) => false,
        Err(pos) => {
            v.insert(pos, x);
            true
        }
    }
}

pub(crate) fn remove(v: &mut Vec<u32>, x: u32) -> bool {
    match v.binary_search(&x) {
        Ok(pos) => {
            v.remove(pos);
            true
        }
        Err(_) => false,
    }
}

pub(crate) fn without(v: &[u32], x: u32) -> Vec<u32> {
    v.iter().copied().filter(|&y| y != x).collect()
}
