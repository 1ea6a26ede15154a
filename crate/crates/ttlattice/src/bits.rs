//! Fixed-width bit rows representing subsets of a carrier of at most
//! [`MAX_ELEMENTS`] elements.
//!
//! Posets, topologies and frame tables in this crate all index their
//! elements densely, so subsets are plain bit rows and the set algebra is
//! word-parallel. `Row` is `Copy`, `Eq`, `Ord` and `Hash`, which keeps
//! deduplication and deterministic sorting cheap.

/// Number of 64-bit words in a row.
pub const ROW_WORDS: usize = 4;

/// Largest carrier size a `Row` can index.
pub const MAX_ELEMENTS: usize = 64 * ROW_WORDS;

/// A subset of a carrier with at most [`MAX_ELEMENTS`] elements.
pub type Row = [u64; ROW_WORDS];

/// The empty subset.
pub const EMPTY: Row = [0; ROW_WORDS];

/// Subset containing exactly `i`.
pub fn singleton(i: usize) -> Row {
    debug_assert!(i < MAX_ELEMENTS);
    let mut r = EMPTY;
    r[i / 64] = 1u64 << (i % 64);
    r
}

/// Full subset `{0, .., n-1}`.
pub fn full(n: usize) -> Row {
    debug_assert!(n <= MAX_ELEMENTS);
    let mut r = EMPTY;
    for i in 0..ROW_WORDS {
        let lo = i * 64;
        if n >= lo + 64 {
            r[i] = u64::MAX;
        } else if n > lo {
            r[i] = (1u64 << (n - lo)) - 1;
        }
    }
    r
}

/// Membership test.
pub fn get(r: Row, i: usize) -> bool {
    r[i / 64] >> (i % 64) & 1 == 1
}

/// Insert `i`.
pub fn set(r: &mut Row, i: usize) {
    r[i / 64] |= 1u64 << (i % 64);
}

/// Remove `i`.
pub fn clear(r: &mut Row, i: usize) {
    r[i / 64] &= !(1u64 << (i % 64));
}

/// Union.
pub fn union(a: Row, b: Row) -> Row {
    let mut r = a;
    for i in 0..ROW_WORDS {
        r[i] |= b[i];
    }
    r
}

/// Intersection.
pub fn inter(a: Row, b: Row) -> Row {
    let mut r = a;
    for i in 0..ROW_WORDS {
        r[i] &= b[i];
    }
    r
}

/// Set difference `a \ b`.
pub fn diff(a: Row, b: Row) -> Row {
    let mut r = a;
    for i in 0..ROW_WORDS {
        r[i] &= !b[i];
    }
    r
}

/// Complement inside `{0, .., n-1}`.
pub fn complement(a: Row, n: usize) -> Row {
    diff(full(n), a)
}

/// True when `a` is contained in `b`.
pub fn is_subset(a: Row, b: Row) -> bool {
    (0..ROW_WORDS).all(|i| a[i] & !b[i] == 0)
}

/// True when the subset is empty.
pub fn is_empty(a: Row) -> bool {
    a == EMPTY
}

/// Number of elements.
pub fn count(a: Row) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

/// Ascending list of members.
pub fn members(a: Row) -> Vec<usize> {
    let mut out = Vec::with_capacity(count(a));
    for (w, word) in a.iter().enumerate() {
        let mut bits = *word;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            out.push(w * 64 + b);
            bits &= bits - 1;
        }
    }
    out
}

/// Sort key ordering subsets by size first, then lexicographically by word.
/// Puts the empty set first and the full set last, which fixes the element
/// order of every set-family lattice in the crate.
pub fn size_lex_key(a: Row) -> (usize, Row) {
    (count(a), a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement_agree() {
        for n in [0, 1, 63, 64, 65, 200, MAX_ELEMENTS] {
            let f = full(n);
            assert_eq!(count(f), n);
            assert_eq!(complement(f, n), EMPTY);
            assert_eq!(complement(EMPTY, n), f);
        }
    }

    #[test]
    fn member_iteration_round_trips() {
        let mut r = EMPTY;
        for i in [0, 3, 63, 64, 130, 255] {
            set(&mut r, i);
        }
        assert_eq!(members(r), vec![0, 3, 63, 64, 130, 255]);
        assert!(get(r, 130));
        clear(&mut r, 130);
        assert!(!get(r, 130));
        assert_eq!(count(r), 5);
    }

    #[test]
    fn boolean_algebra_identities() {
        let a = union(singleton(2), singleton(70));
        let b = union(singleton(70), singleton(255));
        assert_eq!(inter(a, b), singleton(70));
        assert_eq!(diff(a, b), singleton(2));
        assert!(is_subset(inter(a, b), a));
        assert!(is_subset(a, union(a, b)));
        assert!(!is_subset(a, b));
    }
}
