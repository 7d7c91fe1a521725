//! Arrangements of a degree multiset around a cycle or along a path, one per
//! symmetry class.

use alloc::vec::Vec;

/// Rearranges `v` into the next lexicographic permutation; `false` once the
/// last one has been passed (and `v` is back to ascending order).
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Whether `v` is the least of its rotations and reflections.
pub fn is_necklace_rep<T: Ord>(v: &[T]) -> bool {
    let n = v.len();
    for shift in 0..n {
        for reflect in [false, true] {
            if shift == 0 && !reflect {
                continue;
            }
            let at = |i: usize| {
                if reflect {
                    &v[(shift + n - i) % n]
                } else {
                    &v[(shift + i) % n]
                }
            };
            for i in 0..n {
                match at(i).cmp(&v[i]) {
                    core::cmp::Ordering::Less => return false,
                    core::cmp::Ordering::Greater => break,
                    core::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    true
}

/// Cyclic arrangements of `items` up to rotation and reflection, each as
/// its least representative, in ascending order.
pub fn necklaces<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut v = items.to_vec();
    v.sort();
    let mut out = Vec::new();
    loop {
        if is_necklace_rep(&v) {
            out.push(v.clone());
        }
        if !next_permutation(&mut v) {
            return out;
        }
    }
}

/// Linear arrangements of `items` up to reversal, each no greater than its
/// reverse, in ascending order.
pub fn bracelet_paths<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut v = items.to_vec();
    v.sort();
    let mut out = Vec::new();
    loop {
        if v.iter().le(v.iter().rev()) {
            out.push(v.clone());
        }
        if !next_permutation(&mut v) {
            return out;
        }
    }
}
