//! Adjoint pairs of monotone maps and semilattices carrying one.

use alloc::vec::Vec;
use core::fmt;

use crate::order::{is_monotone, monotone_maps, HomFailure, MeetSemilattice, Poset};

/// An enumeration was asked to run past its configured size bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeLimitExceeded {
    pub size: usize,
    pub limit: usize,
}

impl fmt::Display for SizeLimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "size {} exceeds the enumeration limit {}",
            self.size, self.limit
        )
    }
}

/// Checks the adjunction biconditional `f(p) <= q  iff  p <= g(q)` for
/// `f: P -> Q` and `g: Q -> P`; the witness is the first failing `(p, q)`.
pub fn is_adjoint_pair(
    p: &Poset,
    q: &Poset,
    f: &[usize],
    g: &[usize],
) -> Result<(), (usize, usize)> {
    assert_eq!(f.len(), p.n(), "f must be a table over P");
    assert_eq!(g.len(), q.n(), "g must be a table over Q");
    for x in 0..p.n() {
        for y in 0..q.n() {
            if q.leq(f[x], y) != p.leq(x, g[y]) {
                return Err((x, y));
            }
        }
    }
    Ok(())
}

/// Failure of the equational characterization of an endo adjoint pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjointFailure {
    LeftNotMonotone { a: usize, b: usize },
    RightNotMonotone { a: usize, b: usize },
    /// `i(d(a)) <= a` fails.
    NotDeflationary { a: usize },
    /// `a <= d(i(a))` fails.
    NotInflationary { a: usize },
}

impl fmt::Display for AdjointFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AdjointFailure::LeftNotMonotone { a, b } => {
                write!(f, "left map not monotone at {a} <= {b}")
            }
            AdjointFailure::RightNotMonotone { a, b } => {
                write!(f, "right map not monotone at {a} <= {b}")
            }
            AdjointFailure::NotDeflationary { a } => write!(f, "i(d({a})) is not below {a}"),
            AdjointFailure::NotInflationary { a } => write!(f, "{a} is not below d(i({a}))"),
        }
    }
}

/// Equational form of the endo adjunction `i -| d` on one algebra: both maps
/// monotone, `i(d(a)) <= a` and `a <= d(i(a))` for every `a`.
///
/// Monotonicity is part of the check.  The two inequalities alone do not
/// imply an adjunction (the swap map on a two-chain satisfies both), and with
/// monotonicity included this agrees with [`is_adjoint_pair`] on every pair
/// of endomaps.
pub fn equational_adjoint_check(
    a: &MeetSemilattice,
    i: &[usize],
    d: &[usize],
) -> Result<(), AdjointFailure> {
    let o = a.order();
    if let Err((x, y)) = is_monotone(o, o, i) {
        return Err(AdjointFailure::LeftNotMonotone { a: x, b: y });
    }
    if let Err((x, y)) = is_monotone(o, o, d) {
        return Err(AdjointFailure::RightNotMonotone { a: x, b: y });
    }
    for x in 0..a.n() {
        if !a.leq(i[d[x]], x) {
            return Err(AdjointFailure::NotDeflationary { a: x });
        }
    }
    for x in 0..a.n() {
        if !a.leq(x, d[i[x]]) {
            return Err(AdjointFailure::NotInflationary { a: x });
        }
    }
    Ok(())
}

/// The map has no adjoint on the given side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotAdjoinable {
    /// Element at which the defining extremum does not exist.
    pub at: usize,
}

impl fmt::Display for NotAdjoinable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no adjoint: the defining extremum fails at {}", self.at)
    }
}

/// Right adjoint of monotone `f: P -> Q`, when `{p : f(p) <= q}` has a
/// greatest element for every `q`.
pub fn right_adjoint_of(p: &Poset, q: &Poset, f: &[usize]) -> Result<Vec<usize>, NotAdjoinable> {
    assert!(is_monotone(p, q, f).is_ok(), "f must be monotone");
    let mut g = Vec::with_capacity(q.n());
    for y in 0..q.n() {
        let s = (0..p.n()).filter(|&x| q.leq(f[x], y)).collect();
        match p.greatest_of(s) {
            Some(m) => g.push(m),
            None => return Err(NotAdjoinable { at: y }),
        }
    }
    debug_assert!(is_adjoint_pair(p, q, f, &g).is_ok());
    Ok(g)
}

/// Left adjoint of monotone `g: Q -> P`, when `{q : p <= g(q)}` has a least
/// element for every `p`.
pub fn left_adjoint_of(p: &Poset, q: &Poset, g: &[usize]) -> Result<Vec<usize>, NotAdjoinable> {
    assert!(is_monotone(q, p, g).is_ok(), "g must be monotone");
    let mut f = Vec::with_capacity(p.n());
    for x in 0..p.n() {
        let s = (0..q.n()).filter(|&y| p.leq(x, g[y])).collect();
        match q.least_of(s) {
            Some(m) => f.push(m),
            None => return Err(NotAdjoinable { at: x }),
        }
    }
    debug_assert!(is_adjoint_pair(p, q, &f, g).is_ok());
    Ok(f)
}

/// An endo adjoint pair `(i, d)` with `i -| d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointPair {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// All endo adjoint pairs on the algebra, ordered lexicographically by the
/// left table (each left adjoint determines its right adjoint uniquely).
pub fn enumerate_adjoint_pairs(
    a: &MeetSemilattice,
    limit: usize,
) -> Result<Vec<AdjointPair>, SizeLimitExceeded> {
    if a.n() > limit {
        return Err(SizeLimitExceeded {
            size: a.n(),
            limit,
        });
    }
    let o = a.order();
    let mut out = Vec::new();
    for f in monotone_maps(o, o) {
        if let Ok(g) = right_adjoint_of(o, o, &f) {
            out.push(AdjointPair { left: f, right: g });
        }
    }
    Ok(out)
}

/// A meet-semilattice with an adjoint pair of unary operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slata {
    algebra: MeetSemilattice,
    i: Vec<usize>,
    d: Vec<usize>,
}

impl Slata {
    /// Validates the adjunction on construction.
    pub fn new(
        algebra: MeetSemilattice,
        i: Vec<usize>,
        d: Vec<usize>,
    ) -> Result<Slata, AdjointFailure> {
        assert_eq!(i.len(), algebra.n(), "i must be a table over the carrier");
        assert_eq!(d.len(), algebra.n(), "d must be a table over the carrier");
        equational_adjoint_check(&algebra, &i, &d)?;
        Ok(Slata { algebra, i, d })
    }

    pub fn algebra(&self) -> &MeetSemilattice {
        &self.algebra
    }

    pub fn i(&self) -> &[usize] {
        &self.i
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }
}

/// Failure of a structure-preservation check between two such algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismFailure {
    Algebra(HomFailure),
    /// `h(i1(a)) != i2(h(a))`.
    LeftOp { a: usize },
    /// `h(d1(a)) != d2(h(a))`.
    RightOp { a: usize },
}

impl fmt::Display for MorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MorphismFailure::Algebra(ref e) => write!(f, "{e}"),
            MorphismFailure::LeftOp { a } => write!(f, "left operation not preserved at {a}"),
            MorphismFailure::RightOp { a } => write!(f, "right operation not preserved at {a}"),
        }
    }
}

/// Checks that `h` preserves meet, top and both operations.
pub fn is_slata_morphism(s1: &Slata, s2: &Slata, h: &[usize]) -> Result<(), MorphismFailure> {
    s1.algebra()
        .is_homomorphism(s2.algebra(), h)
        .map_err(MorphismFailure::Algebra)?;
    for a in 0..s1.algebra().n() {
        if h[s1.i()[a]] != s2.i()[h[a]] {
            return Err(MorphismFailure::LeftOp { a });
        }
    }
    for a in 0..s1.algebra().n() {
        if h[s1.d()[a]] != s2.d()[h[a]] {
            return Err(MorphismFailure::RightOp { a });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn c2_adjoint_pairs() {
        let c2 = fixtures::c2();
        let o = c2.order();
        assert!(is_adjoint_pair(o, o, &[0, 1], &[0, 1]).is_ok());
        assert!(is_adjoint_pair(o, o, &[0, 0], &[1, 1]).is_ok());
        // Constants the other way round fail immediately.
        assert_eq!(is_adjoint_pair(o, o, &[1, 1], &[0, 0]), Err((0, 0)));
    }

    #[test]
    fn powerset_example() {
        // The powerset of a two-element set under intersection: intersecting
        // with {a} is left adjoint to adjoining b, since
        // x ∩ {a} ⊆ y  ⟺  x ⊆ y ∪ {b}.
        let p2 = fixtures::powerset2();
        let o = p2.order();
        let f = [0, 1, 0, 1];
        let g = [2, 3, 2, 3];
        assert!(is_adjoint_pair(o, o, &f, &g).is_ok());
        assert_eq!(right_adjoint_of(o, o, &f).unwrap(), g);
        assert_eq!(left_adjoint_of(o, o, &g).unwrap(), f);
        // Adjoining b has no right adjoint of its own: it moves bottom.
        assert!(right_adjoint_of(o, o, &g).is_err());
    }

    #[test]
    fn swap_satisfies_inequalities_but_is_no_adjunction() {
        // On the two-chain the swap map composed with itself is the identity,
        // so both inequalities hold; monotonicity is what fails, and the
        // check must catch it to stay in agreement with the biconditional.
        let c2 = fixtures::c2();
        let swap = [1, 0];
        for x in 0..2 {
            assert!(c2.leq(swap[swap[x]], x));
            assert!(c2.leq(x, swap[swap[x]]));
        }
        assert_eq!(
            equational_adjoint_check(&c2, &swap, &swap),
            Err(AdjointFailure::LeftNotMonotone { a: 0, b: 1 })
        );
        assert!(is_adjoint_pair(c2.order(), c2.order(), &swap, &swap).is_err());
    }

    #[test]
    fn equational_check_agrees_with_biconditional() {
        for a in [fixtures::c2(), fixtures::c3(), fixtures::d4()] {
            let o = a.order();
            let n = a.n();
            let all_maps: Vec<Vec<usize>> = (0..n.pow(n as u32))
                .map(|code| {
                    let mut t = Vec::with_capacity(n);
                    let mut c = code;
                    for _ in 0..n {
                        t.push(c % n);
                        c /= n;
                    }
                    t
                })
                .collect();
            for i in &all_maps {
                for d in &all_maps {
                    assert_eq!(
                        is_adjoint_pair(o, o, i, d).is_ok(),
                        equational_adjoint_check(&a, i, d).is_ok(),
                        "disagreement at i={i:?} d={d:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn synthesis_failure_witness() {
        let c2 = fixtures::c2();
        let o = c2.order();
        // const-top has no right adjoint: {p : 1 <= 0} is empty.
        assert_eq!(right_adjoint_of(o, o, &[1, 1]), Err(NotAdjoinable { at: 0 }));
        assert_eq!(left_adjoint_of(o, o, &[0, 0]), Err(NotAdjoinable { at: 1 }));
    }

    #[test]
    fn enumeration_matches_pairwise_oracle() {
        for a in [fixtures::c2(), fixtures::c3(), fixtures::d4(), fixtures::powerset2()] {
            let o = a.order();
            let pairs = enumerate_adjoint_pairs(&a, 16).unwrap();
            // Oracle: filter all pairs of monotone maps by the biconditional.
            let maps = monotone_maps(o, o);
            let mut oracle = Vec::new();
            for f in &maps {
                for g in &maps {
                    if is_adjoint_pair(o, o, f, g).is_ok() {
                        oracle.push((f.clone(), g.clone()));
                    }
                }
            }
            let got: Vec<(Vec<usize>, Vec<usize>)> = pairs
                .iter()
                .map(|p| (p.left.clone(), p.right.clone()))
                .collect();
            assert_eq!(got, oracle, "enumeration mismatch on a {}-element algebra", a.n());
            // Right adjoints are unique, so lex order on left tables is strict.
            for w in got.windows(2) {
                assert!(w[0].0 < w[1].0);
            }
        }
    }

    #[test]
    fn c2_has_exactly_two_pairs() {
        let c2 = fixtures::c2();
        let pairs = enumerate_adjoint_pairs(&c2, 16).unwrap();
        let got: Vec<(Vec<usize>, Vec<usize>)> = pairs
            .iter()
            .map(|p| (p.left.clone(), p.right.clone()))
            .collect();
        assert_eq!(
            got,
            vec![(vec![0, 0], vec![1, 1]), (vec![0, 1], vec![0, 1])]
        );
    }

    #[test]
    fn size_limit_is_enforced() {
        let fig1 = fixtures::fig1_algebra();
        assert_eq!(
            enumerate_adjoint_pairs(&fig1, 8),
            Err(SizeLimitExceeded { size: 9, limit: 8 })
        );
    }

    #[test]
    fn triangle_identities_hold_for_enumerated_pairs() {
        for a in [fixtures::c3(), fixtures::d4(), fixtures::powerset2()] {
            for pair in enumerate_adjoint_pairs(&a, 16).unwrap() {
                let (i, d) = (&pair.left, &pair.right);
                for x in 0..a.n() {
                    assert_eq!(i[d[i[x]]], i[x]);
                    assert_eq!(d[i[d[x]]], d[x]);
                }
            }
        }
    }

    #[test]
    fn slata_morphism_witnesses() {
        let c2 = fixtures::c2();
        let s_id = Slata::new(c2.clone(), vec![0, 1], vec![0, 1]).unwrap();
        let s_const = Slata::new(c2.clone(), vec![0, 0], vec![1, 1]).unwrap();
        assert!(is_slata_morphism(&s_id, &s_id, &[0, 1]).is_ok());
        // The identity map preserves meet and top but not the operations.
        assert_eq!(
            is_slata_morphism(&s_id, &s_const, &[0, 1]),
            Err(MorphismFailure::LeftOp { a: 1 })
        );
        assert_eq!(
            is_slata_morphism(&s_const, &s_id, &[0, 1]),
            Err(MorphismFailure::LeftOp { a: 1 })
        );
    }

    #[test]
    fn slata_rejects_non_adjoint_tables() {
        let c2 = fixtures::c2();
        assert!(Slata::new(c2, vec![1, 1], vec![0, 0]).is_err());
    }
}
