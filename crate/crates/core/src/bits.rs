//! Helpers for subsets of `{1, …, n}` stored as `u64` masks (index `i` lives in bit `i - 1`).

use std::cmp::Ordering;

/// Ascending 1-based indices of the set bits.
pub fn indices(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i + 1)
    })
}

pub fn index_vec(mask: u64) -> Vec<usize> {
    indices(mask).collect()
}

/// Mask of the given 1-based indices. Indices must be in `1..=64`.
pub fn mask_of<I: IntoIterator<Item = usize>>(idx: I) -> u64 {
    idx.into_iter().fold(0, |m, i| m | bit(i))
}

#[inline]
pub fn bit(index: usize) -> u64 {
    debug_assert!((1..=64).contains(&index));
    1u64 << (index - 1)
}

#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn size(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// All submasks of `mask`, including `mask` itself and `0`, in decreasing numeric order.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

/// Lexicographic comparison of the ascending index sequences, so `{1,2} < {1,3} < {2}`.
pub fn lex_cmp(a: u64, b: u64) -> Ordering {
    let mut ia = indices(a);
    let mut ib = indices(b);
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => match x.cmp(&y) {
                Ordering::Equal => continue,
                other => return other,
            },
        }
    }
}

/// Order by size first, then lexicographically.
pub fn size_lex_cmp(a: u64, b: u64) -> Ordering {
    size(a).cmp(&size(b)).then_with(|| lex_cmp(a, b))
}

/// `1,2,5`; the empty set renders as `{}`.
pub fn render_indices(mask: u64) -> String {
    if mask == 0 {
        return "{}".to_string();
    }
    let parts: Vec<String> = indices(mask).map(|i| i.to_string()).collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_enumeration_counts() {
        assert_eq!(submasks(0).count(), 1);
        assert_eq!(submasks(0b1011).count(), 8);
        assert!(submasks(0b1011).all(|s| s & !0b1011 == 0));
    }

    #[test]
    fn lexicographic_order() {
        let a = mask_of([1, 2]);
        let b = mask_of([1, 3]);
        let c = mask_of([2]);
        assert_eq!(lex_cmp(a, b), Ordering::Less);
        assert_eq!(lex_cmp(b, c), Ordering::Less);
        assert_eq!(lex_cmp(0, c), Ordering::Less);
        assert_eq!(size_lex_cmp(c, a), Ordering::Less);
    }

    #[test]
    fn rendering() {
        assert_eq!(render_indices(0), "{}");
        assert_eq!(render_indices(mask_of([1, 3, 10])), "1,3,10");
    }
}
