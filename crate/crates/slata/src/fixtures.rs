//! Ready-made example algebras used across tests, documentation and the CLI.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::order::{MeetSemilattice, Poset};
use crate::tense::ESlata;

fn labels(ls: &[&str]) -> Vec<alloc::string::String> {
    ls.iter().map(|s| s.to_string()).collect()
}

/// The one-element algebra.
pub fn one() -> MeetSemilattice {
    MeetSemilattice::validate(1, vec![0], 0)
        .unwrap()
        .with_labels(labels(&["1"]))
}

/// The two-element chain `0 < 1`.
pub fn c2() -> MeetSemilattice {
    MeetSemilattice::validate(2, vec![0, 0, 0, 1], 1)
        .unwrap()
        .with_labels(labels(&["0", "1"]))
}

/// The three-element chain `0 < m < 1`.
pub fn c3() -> MeetSemilattice {
    MeetSemilattice::validate(3, vec![0, 0, 0, 0, 1, 1, 0, 1, 2], 2)
        .unwrap()
        .with_labels(labels(&["0", "m", "1"]))
}

/// The diamond: `0` below incomparable `a`, `b` below `1`.
pub fn d4() -> MeetSemilattice {
    MeetSemilattice::validate(4, vec![0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3], 3)
        .unwrap()
        .with_labels(labels(&["0", "a", "b", "1"]))
}

/// The powerset of a two-element set under intersection (the diamond again,
/// with subset labels).
pub fn powerset2() -> MeetSemilattice {
    MeetSemilattice::validate(4, vec![0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3], 3)
        .unwrap()
        .with_labels(labels(&["{}", "{a}", "{b}", "{a,b}"]))
}

/// The nine-element lattice used as the worked tense example.
///
/// Carrier `0, a, b, c, d, e, f, g, 1` (indices `0..9`), covers:
/// `0 < a, b`; `a < c, d`; `b < d, e`; `c < f`; `d < f, g`; `e < g`;
/// `f, g < 1`.
pub fn fig1_algebra() -> MeetSemilattice {
    let order = Poset::from_pairs_closure(
        9,
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 4),
            (2, 5),
            (3, 6),
            (4, 6),
            (4, 7),
            (5, 7),
            (6, 8),
            (7, 8),
        ],
    )
    .unwrap();
    MeetSemilattice::from_order(&order)
        .unwrap()
        .with_labels(labels(&["0", "a", "b", "c", "d", "e", "f", "g", "1"]))
}

/// The worked tense example: [`fig1_algebra`] with its four operations.
pub fn fig1_eslata() -> ESlata {
    ESlata::new(
        fig1_algebra(),
        // P: 0, d, b, 1, d, e, 1, g, 1
        vec![0, 4, 2, 8, 4, 5, 8, 7, 8],
        // G: 0, 0, b, 0, d, e, d, g, 1
        vec![0, 0, 2, 0, 4, 5, 4, 7, 8],
        // F: 0, a, d, c, d, 1, f, 1, 1
        vec![0, 1, 4, 3, 4, 8, 6, 8, 8],
        // H: 0, a, 0, c, d, 0, f, d, 1
        vec![0, 1, 0, 3, 4, 0, 6, 4, 8],
    )
    .expect("the worked example satisfies the tense axioms")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_meets() {
        let a = fig1_algebra();
        // A few meets read off the diagram.
        assert_eq!(a.meet(1, 2), 0); // a ∧ b = 0
        assert_eq!(a.meet(3, 4), 1); // c ∧ d = a
        assert_eq!(a.meet(3, 5), 0); // c ∧ e = 0
        assert_eq!(a.meet(3, 7), 1); // c ∧ g = a
        assert_eq!(a.meet(4, 5), 2); // d ∧ e = b
        assert_eq!(a.meet(5, 6), 2); // e ∧ f = b
        assert_eq!(a.meet(6, 7), 4); // f ∧ g = d
        assert_eq!(a.top(), 8);
        assert_eq!(a.bottom(), 0);
    }

    #[test]
    fn fig1_cover_structure() {
        let a = fig1_algebra();
        assert!(a.leq(0, 8));
        assert!(a.leq(1, 6) && !a.leq(1, 5));
        assert!(!a.leq(3, 7) && !a.leq(7, 3));
        assert_eq!(a.order().up(4).iter().collect::<Vec<_>>(), vec![4, 6, 7, 8]);
    }
}
