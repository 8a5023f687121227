//! Exhaustive corpora of small algebras.
//!
//! Every labeled partial order on `{0, .., n-1}` is generated by orienting
//! each unordered pair three ways (incomparable, `<`, `>`) with triangle
//! pruning, then validating the leaf.  The semilattice corpus keeps the
//! orders that have a greatest element and a greatest lower bound for every
//! pair.  Counts grow superexponentially; sizes up to 5 or 6 are practical.

use alloc::vec;
use alloc::vec::Vec;

use crate::order::{MeetSemilattice, Poset};

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // Position of (i, j) in the lexicographic list of pairs i < j.
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn triangle_ok(strict: &[Vec<bool>], i: usize, j: usize, k: usize) -> bool {
    let t = [i, j, k];
    for &x in &t {
        for &y in &t {
            for &z in &t {
                if strict[x][y] && strict[y][z] && !strict[x][z] {
                    return false;
                }
            }
        }
    }
    true
}

fn orient(
    n: usize,
    pairs: &[(usize, usize)],
    idx: usize,
    strict: &mut Vec<Vec<bool>>,
    out: &mut Vec<Poset>,
) {
    if idx == pairs.len() {
        // The pruning is only a speedup; the validator is the authority.
        if let Ok(p) = Poset::new(n, |a, b| a == b || strict[a][b]) {
            out.push(p);
        }
        return;
    }
    let (i, j) = pairs[idx];
    let decided = |a: usize, b: usize| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        pair_index(n, lo, hi) <= idx
    };
    for choice in 0..3 {
        match choice {
            1 => strict[i][j] = true,
            2 => strict[j][i] = true,
            _ => {}
        }
        let ok = (0..n).all(|k| {
            k == i || k == j || !(decided(k, i) && decided(k, j)) || triangle_ok(strict, i, j, k)
        });
        if ok {
            orient(n, pairs, idx + 1, strict, out);
        }
        strict[i][j] = false;
        strict[j][i] = false;
    }
}

/// All partial orders on a labeled carrier of the given size, in a fixed
/// generation order.
pub fn labeled_posets(n: usize) -> Vec<Poset> {
    if n == 0 {
        return vec![Poset::new(0, |_, _| false).unwrap()];
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let mut strict = vec![vec![false; n]; n];
    let mut out = Vec::new();
    orient(n, &pairs, 0, &mut strict, &mut out);
    out
}

/// All labeled meet-semilattices with top of the given size: the labeled
/// orders that have a greatest element and all binary greatest lower
/// bounds.
pub fn meet_semilattices_with_top(n: usize) -> Vec<MeetSemilattice> {
    labeled_posets(n)
        .iter()
        .filter_map(|p| MeetSemilattice::from_order(p).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Oracle: scan every boolean matrix and keep the partial orders.
    fn brute_posets(n: usize) -> Vec<Poset> {
        let bits = n * n;
        assert!(bits <= 16, "oracle is exponential in n^2");
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << bits) {
            let leq = |a: usize, b: usize| mask >> (a * n + b) & 1 == 1;
            if let Ok(p) = Poset::new(n, leq) {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn poset_counts_are_frozen() {
        let counts: Vec<usize> = (0..=5).map(|n| labeled_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231]);
    }

    #[test]
    fn posets_match_the_matrix_scan_oracle() {
        for n in 0..=4 {
            let mut fast = labeled_posets(n);
            let mut slow = brute_posets(n);
            let key = |p: &Poset| {
                let v: Vec<crate::set::SmallSet> = (0..p.n()).map(|a| p.up(a)).collect();
                v
            };
            fast.sort_by_key(key);
            slow.sort_by_key(key);
            assert_eq!(fast, slow, "size {n}");
        }
    }

    #[test]
    fn semilattice_counts_are_frozen() {
        let counts: Vec<usize> = (1..=5).map(|n| meet_semilattices_with_top(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 36, 380]);
    }

    #[test]
    fn semilattices_match_the_matrix_scan_oracle() {
        for n in 1..=4 {
            let slow: Vec<MeetSemilattice> = brute_posets(n)
                .iter()
                .filter_map(|p| MeetSemilattice::from_order(p).ok())
                .collect();
            let mut fast = meet_semilattices_with_top(n);
            let mut slow = slow;
            let key = |a: &MeetSemilattice| {
                let mut v: Vec<usize> = Vec::new();
                for x in 0..a.n() {
                    for y in 0..a.n() {
                        v.push(a.meet(x, y));
                    }
                }
                v
            };
            fast.sort_by_key(key);
            slow.sort_by_key(key);
            assert_eq!(fast.len(), slow.len(), "size {n}");
            for (f, s) in fast.iter().zip(slow.iter()) {
                assert_eq!(key(f), key(s), "size {n}");
                assert_eq!(f.top(), s.top(), "size {n}");
            }
        }
    }

    #[test]
    fn familiar_shapes_appear_in_the_corpus() {
        // Both labelings of the two-element chain.
        let twos = meet_semilattices_with_top(2);
        let tops: Vec<usize> = twos.iter().map(|a| a.top()).collect();
        assert!(tops.contains(&0) && tops.contains(&1));
        // The diamond shows up among the 36 four-element algebras.
        let d4 = fixtures::d4();
        let key = |a: &MeetSemilattice| {
            (0..16).map(|i| a.meet(i / 4, i % 4)).collect::<Vec<_>>()
        };
        assert!(meet_semilattices_with_top(4).iter().any(|a| key(a) == key(&d4)));
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(labeled_posets(4), labeled_posets(4));
        let a = meet_semilattices_with_top(3);
        let b = meet_semilattices_with_top(3);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.top(), y.top());
        }
    }
}
