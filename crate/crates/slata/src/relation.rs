//! Meet-relations between spaces: the box operator, star composition with
//! its specialization identities, relations from homomorphisms, and the
//! one-to-one characterization of surjectivity.
//!
//! A meet-relation `T ⊆ X1 × X2` is stored per source point as a set of
//! target points.  Its box operator `□_T(U) = {x : T(x) ⊆ U}` maps subbasic
//! closed sets of the target to subbasic closed sets of the source; that and
//! the reconstruction condition `T(x) = ⋂{U ∈ S(X2) : T(x) ⊆ U}` are the
//! two validity conditions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::set::SmallSet;
use crate::space::{box_multirel, DualSpace, Multirelation, SSpace};

/// Why a candidate fails the meet-relation conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeetRelationFailure {
    /// The per-point table does not match the source point count.
    Shape { expected: usize, got: usize },
    /// Some image contains a point outside the target.
    PointOutOfRange { x: usize },
    /// `□_T(U)` left the subbasic closed sets of the source.
    BoxNotClosed { u: SmallSet },
    /// `T(x)` is not the intersection of the closed sets containing it.
    NotReconstructed { x: usize },
}

impl fmt::Display for MeetRelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MeetRelationFailure::Shape { expected, got } => {
                write!(f, "table has {got} rows, expected {expected}")
            }
            MeetRelationFailure::PointOutOfRange { x } => {
                write!(f, "image of {x} leaves the target point set")
            }
            MeetRelationFailure::BoxNotClosed { u } => {
                write!(f, "box image of {u} is not a subbasic closed set of the source")
            }
            MeetRelationFailure::NotReconstructed { x } => {
                write!(f, "image of {x} is not an intersection of closed sets")
            }
        }
    }
}

/// A relation between the points of two spaces, box-compatible with their
/// closed-set structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetRelation {
    pub src: SSpace,
    pub tgt: SSpace,
    /// `at[x] ⊆` target points, for each source point `x`.
    pub at: Vec<SmallSet>,
}

/// Checks the two meet-relation conditions for a candidate table.
pub fn is_meet_relation(
    src: &SSpace,
    tgt: &SSpace,
    at: &[SmallSet],
) -> Result<(), MeetRelationFailure> {
    if at.len() != src.n() {
        return Err(MeetRelationFailure::Shape {
            expected: src.n(),
            got: at.len(),
        });
    }
    for (x, img) in at.iter().enumerate() {
        if !img.is_subset(tgt.full()) {
            return Err(MeetRelationFailure::PointOutOfRange { x });
        }
    }
    for &u in tgt.s_closed() {
        let b: SmallSet = (0..src.n()).filter(|&x| at[x].is_subset(u)).collect();
        if src.s_index(b).is_none() {
            return Err(MeetRelationFailure::BoxNotClosed { u });
        }
    }
    for (x, &img) in at.iter().enumerate() {
        let mut acc = tgt.full();
        for &u in tgt.s_closed() {
            if img.is_subset(u) {
                acc = acc.inter(u);
            }
        }
        if acc != img {
            return Err(MeetRelationFailure::NotReconstructed { x });
        }
    }
    Ok(())
}

impl MeetRelation {
    /// Builds and validates a meet-relation.
    pub fn new(
        src: SSpace,
        tgt: SSpace,
        at: Vec<SmallSet>,
    ) -> Result<MeetRelation, MeetRelationFailure> {
        is_meet_relation(&src, &tgt, &at)?;
        Ok(MeetRelation { src, tgt, at })
    }

    /// Builds without validating; for constructions whose validity is a
    /// theorem (and for counterexamples in tests).
    pub fn raw(src: SSpace, tgt: SSpace, at: Vec<SmallSet>) -> MeetRelation {
        MeetRelation { src, tgt, at }
    }

    /// The relation with every image full.
    pub fn full(src: SSpace, tgt: SSpace) -> MeetRelation {
        let at = alloc::vec![tgt.full(); src.n()];
        MeetRelation { src, tgt, at }
    }

    /// `□_T(U) = {x : T(x) ⊆ U}` for an arbitrary target subset.
    pub fn box_op(&self, u: SmallSet) -> SmallSet {
        (0..self.src.n())
            .filter(|&x| self.at[x].is_subset(u))
            .collect()
    }

    pub fn validity(&self) -> Result<(), MeetRelationFailure> {
        is_meet_relation(&self.src, &self.tgt, &self.at)
    }
}

/// The composite `T ∗ R` for `R ⊆ X1 × X2` and `T ⊆ X2 × X3`: the ordinary
/// relational composite `T∘R` is formed first, then each image is saturated
/// to `⋂{U ∈ S(X3) : (T∘R)(x) ⊆ U}` (the full set when no `U` qualifies).
pub fn compose_star(t: &MeetRelation, r: &MeetRelation) -> MeetRelation {
    assert_eq!(r.tgt, t.src, "relations are not composable");
    let at = r
        .at
        .iter()
        .map(|&rx| {
            let comp = rx
                .iter()
                .fold(SmallSet::EMPTY, |acc, y| acc.union(t.at[y]));
            let mut sat = t.tgt.full();
            for &u in t.tgt.s_closed() {
                if comp.is_subset(u) {
                    sat = sat.inter(u);
                }
            }
            sat
        })
        .collect();
    MeetRelation {
        src: r.src.clone(),
        tgt: t.tgt.clone(),
        at,
    }
}

/// The specialization relation `x ⊒ y ⟺ y ∈ cl(x)`; the identity for `∗`.
pub fn dual_specialization(space: &SSpace) -> MeetRelation {
    let at = (0..space.n()).map(|x| space.closure_of_point(x)).collect();
    MeetRelation {
        src: space.clone(),
        tgt: space.clone(),
        at,
    }
}

/// The meet-relation of a homomorphism `h : A1 -> A2`, running between the
/// dual of `A2` and the dual of `A1`: `(P, Q) ∈ R_h ⟺ h⁻¹[P] ⊆ Q`.
pub fn relation_from_hom(
    a1_dual: &DualSpace,
    a2_dual: &DualSpace,
    h: &[usize],
) -> MeetRelation {
    assert_eq!(h.len(), a1_dual.carrier(), "map table must cover the source carrier");
    let at = a2_dual
        .spectrum
        .iter()
        .map(|p| {
            let h_inv: SmallSet = (0..a1_dual.carrier())
                .filter(|&a| p.filter.members.contains(h[a]))
                .collect();
            a1_dual
                .spectrum
                .iter()
                .enumerate()
                .filter(|(_, q)| h_inv.is_subset(q.filter.members))
                .map(|(qi, _)| qi)
                .collect()
        })
        .collect();
    MeetRelation {
        src: a2_dual.space.clone(),
        tgt: a1_dual.space.clone(),
        at,
    }
}

/// Checks the two commuting squares that make a meet-relation between
/// adjoint-pair spaces structure-preserving: `□_T ∘ m_I⟨tgt⟩ = m_I⟨src⟩ ∘ □_T`
/// on every `U ∈ S(X2)`, and likewise for `D`.
pub fn is_slata_relation(
    t: &MeetRelation,
    i_src: &Multirelation,
    d_src: &Multirelation,
    i_tgt: &Multirelation,
    d_tgt: &Multirelation,
) -> Result<(), String> {
    for (name, m_src, m_tgt) in [("I", i_src, i_tgt), ("D", d_src, d_tgt)] {
        for &u in t.tgt.s_closed() {
            let via_tgt = box_multirel(&t.tgt, m_tgt, u).map_err(|e| format!("{e}"))?;
            let lhs = t.box_op(via_tgt);
            let bt = t.box_op(u);
            let rhs = box_multirel(&t.src, m_src, bt)
                .map_err(|_| format!("box image of {u} is not closed on the source side"))?;
            if lhs != rhs {
                return Err(format!(
                    "{name}-square does not commute at U = {u}: {lhs} vs {rhs}"
                ));
            }
        }
    }
    Ok(())
}

/// Witness that a meet-relation is not one-to-one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotOneToOne {
    pub x: usize,
    pub u: SmallSet,
}

impl fmt::Display for NotOneToOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no target closed set separates {} from U = {} through the box operator",
            self.x, self.u
        )
    }
}

/// One-to-one: for every `x ∉ U ∈ S(X1)` some `V ∈ S(X2)` has
/// `U ⊆ □_T(V)` and `x ∉ □_T(V)`.
pub fn is_one_to_one(t: &MeetRelation) -> Result<(), NotOneToOne> {
    for &u in t.src.s_closed() {
        for x in 0..t.src.n() {
            if u.contains(x) {
                continue;
            }
            let ok = t.tgt.s_closed().iter().any(|&v| {
                let b = t.box_op(v);
                u.is_subset(b) && !b.contains(x)
            });
            if !ok {
                return Err(NotOneToOne { x, u });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjoint::Slata;
    use crate::fixtures;
    
    use crate::space::{dual_space, dualize_slata, relation_from_map};

    fn fixture_duals() -> Vec<(crate::order::MeetSemilattice, DualSpace)> {
        [
            fixtures::one(),
            fixtures::c2(),
            fixtures::c3(),
            fixtures::d4(),
            fixtures::fig1_algebra(),
        ]
        .into_iter()
        .map(|a| {
            let d = dual_space(&a);
            (a, d)
        })
        .collect()
    }

    #[test]
    fn full_relation_box() {
        let dual = dual_space(&fixtures::d4());
        let t = MeetRelation::full(dual.space.clone(), dual.space.clone());
        assert_eq!(t.box_op(t.tgt.full()), t.src.full());
        assert_eq!(t.box_op(SmallSet::singleton(0)), SmallSet::EMPTY);
    }

    #[test]
    fn specialization_is_the_identity_box() {
        for (a, dual) in fixture_duals() {
            let sp = dual_specialization(&dual.space);
            sp.validity().unwrap();
            for x in 0..a.n() {
                assert_eq!(sp.box_op(dual.beta[x]), dual.beta[x]);
            }
        }
        // On a single-point space the specialization is the full relation.
        let c2d = dual_space(&fixtures::c2());
        let sp = dual_specialization(&c2d.space);
        assert_eq!(sp.at, alloc::vec![SmallSet::full(1)]);
    }

    #[test]
    fn specialization_orders_spectrum_by_inclusion() {
        let dual = dual_space(&fixtures::fig1_algebra());
        let sp = dual_specialization(&dual.space);
        for (x, px) in dual.spectrum.iter().enumerate() {
            for (y, py) in dual.spectrum.iter().enumerate() {
                assert_eq!(
                    sp.at[x].contains(y),
                    px.filter.members.is_subset(py.filter.members)
                );
            }
        }
    }

    #[test]
    fn reconstruction_can_fail_without_an_empty_closed_set() {
        // A (deliberately non-axiomatic) target whose closed sets are all
        // nonempty: the empty image cannot be reconstructed.
        let tgt = SSpace::new(1, alloc::vec![SmallSet::EMPTY]);
        assert_eq!(tgt.s_closed(), &[SmallSet::full(1)]);
        let src = tgt.clone();
        assert_eq!(
            is_meet_relation(&src, &tgt, &[SmallSet::EMPTY]),
            Err(MeetRelationFailure::NotReconstructed { x: 0 })
        );
        // On a genuine dual space the empty relation reconstructs fine.
        let dual = dual_space(&fixtures::c2());
        let empty = alloc::vec![SmallSet::EMPTY; 1];
        is_meet_relation(&dual.space, &dual.space, &empty).unwrap();
    }

    #[test]
    fn hom_relations_are_meet_relations_with_box_transport() {
        let pairs: [(crate::order::MeetSemilattice, crate::order::MeetSemilattice); 4] = [
            (fixtures::c2(), fixtures::d4()),
            (fixtures::d4(), fixtures::c2()),
            (fixtures::d4(), fixtures::d4()),
            (fixtures::c3(), fixtures::c3()),
        ];
        for (a1, a2) in pairs {
            let d1 = dual_space(&a1);
            let d2 = dual_space(&a2);
            for h in a1.homomorphisms(&a2) {
                let r = relation_from_hom(&d1, &d2, &h);
                r.validity().unwrap();
                for x in 0..a1.n() {
                    // The box of β over the source algebra lands on β of the image.
                    assert_eq!(r.box_op(d1.beta[x]), d2.beta[h[x]]);
                }
            }
        }
    }

    #[test]
    fn identity_hom_gives_specialization() {
        for (a, dual) in fixture_duals() {
            let id: Vec<usize> = (0..a.n()).collect();
            let r = relation_from_hom(&dual, &dual, &id);
            assert_eq!(r, dual_specialization(&dual.space));
        }
    }

    #[test]
    fn constant_top_hom_relation() {
        let a = fixtures::d4();
        let dual = dual_space(&a);
        let h = alloc::vec![3usize; 4];
        let r = relation_from_hom(&dual, &dual, &h);
        r.validity().unwrap();
        // h⁻¹[P] is always everything, contained only in the improper filter;
        // no spectrum point is improper, so every image is empty.
        for x in 0..dual.space.n() {
            assert_eq!(r.at[x], SmallSet::EMPTY);
        }
    }

    #[test]
    fn star_identities() {
        let pairs: [(crate::order::MeetSemilattice, crate::order::MeetSemilattice); 3] = [
            (fixtures::c2(), fixtures::d4()),
            (fixtures::d4(), fixtures::d4()),
            (fixtures::c3(), fixtures::c3()),
        ];
        for (a1, a2) in pairs {
            let d1 = dual_space(&a1);
            let d2 = dual_space(&a2);
            for h in a1.homomorphisms(&a2) {
                let r = relation_from_hom(&d1, &d2, &h);
                assert_eq!(compose_star(&r, &dual_specialization(&r.src)), r);
                assert_eq!(compose_star(&dual_specialization(&r.tgt), &r), r);
            }
        }
    }

    #[test]
    fn star_matches_hom_composition() {
        // h : A1 -> A2 then g : A2 -> A3; the relation of the composite is
        // the star composite of the relations in reverse order.
        let a1 = fixtures::c2();
        let a2 = fixtures::d4();
        let a3 = fixtures::d4();
        let d1 = dual_space(&a1);
        let d2 = dual_space(&a2);
        let d3 = dual_space(&a3);
        for h in a1.homomorphisms(&a2) {
            for g in a2.homomorphisms(&a3) {
                let gh: Vec<usize> = h.iter().map(|&x| g[x]).collect();
                let lhs = relation_from_hom(&d1, &d3, &gh);
                let rhs = compose_star(
                    &relation_from_hom(&d1, &d2, &h),
                    &relation_from_hom(&d2, &d3, &g),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn star_is_associative_and_box_contravariant_on_hom_chains() {
        let a1 = fixtures::c2();
        let a2 = fixtures::d4();
        let d1 = dual_space(&a1);
        let d2 = dual_space(&a2);
        let homs12 = a1.homomorphisms(&a2);
        let homs22 = a2.homomorphisms(&a2);
        for h in &homs12 {
            let r = relation_from_hom(&d1, &d2, h);
            for g in &homs22 {
                let s = relation_from_hom(&d2, &d2, g);
                for k in &homs22 {
                    let t = relation_from_hom(&d2, &d2, k);
                    let left = compose_star(&compose_star(&r, &s), &t);
                    let right = compose_star(&r, &compose_star(&s, &t));
                    assert_eq!(left, right);
                }
                // □_{s∗r'} = □_{r'} ∘ □_s with r' = r as the first factor.
                let comp = compose_star(&r, &s);
                for &u in comp.tgt.s_closed() {
                    assert_eq!(comp.box_op(u), s.box_op(r.box_op(u)));
                }
            }
        }
    }

    #[test]
    fn one_to_one_iff_onto() {
        let pairs: [(crate::order::MeetSemilattice, crate::order::MeetSemilattice); 4] = [
            (fixtures::c2(), fixtures::d4()),
            (fixtures::d4(), fixtures::c2()),
            (fixtures::d4(), fixtures::d4()),
            (fixtures::c3(), fixtures::c3()),
        ];
        for (a1, a2) in pairs {
            let d1 = dual_space(&a1);
            let d2 = dual_space(&a2);
            for h in a1.homomorphisms(&a2) {
                let onto = (0..a2.n()).all(|y| h.contains(&y));
                let r = relation_from_hom(&d1, &d2, &h);
                assert_eq!(
                    is_one_to_one(&r).is_ok(),
                    onto,
                    "mismatch for h = {h:?}"
                );
            }
        }
    }

    #[test]
    fn slata_relations_from_slata_morphisms() {
        // Identity-pair structures: every homomorphism is a morphism of
        // pairs, so every hom relation satisfies both squares.
        let a1 = fixtures::c2();
        let a2 = fixtures::d4();
        let id1: Vec<usize> = (0..a1.n()).collect();
        let id2: Vec<usize> = (0..a2.n()).collect();
        let s1 = Slata::new(a1.clone(), id1.clone(), id1.clone()).unwrap();
        let s2 = Slata::new(a2.clone(), id2.clone(), id2.clone()).unwrap();
        let (du1, i1, dd1) = dualize_slata(&s1);
        let (du2, i2, dd2) = dualize_slata(&s2);
        for h in a1.homomorphisms(&a2) {
            let r = relation_from_hom(&du1, &du2, &h);
            // The relation runs dual(A2) -> dual(A1), so the source carries
            // the relations of s2 and the target those of s1.
            is_slata_relation(&r, &i2, &dd2, &i1, &dd1).unwrap();
        }
        // Specialization is the identity arrow on any pair space.
        let sp = dual_specialization(&du2.space);
        is_slata_relation(&sp, &i2, &dd2, &i2, &dd2).unwrap();
    }

    #[test]
    fn meet_but_not_operator_preserving_fails_the_squares() {
        // The identity carrier map between different pair structures on the
        // two-element chain preserves meets but not the operators.
        let c2 = fixtures::c2();
        let s_id = Slata::new(c2.clone(), vec![0, 1], vec![0, 1]).unwrap();
        let s_const = Slata::new(c2.clone(), vec![0, 0], vec![1, 1]).unwrap();
        let (du_a, i_a, d_a) = dualize_slata(&s_id);
        let (du_b, i_b, d_b) = dualize_slata(&s_const);
        let id = vec![0, 1];
        // h : s_id -> s_const as algebras; relation runs dual(s_const) -> dual(s_id).
        let r = relation_from_hom(&du_a, &du_b, &id);
        r.validity().unwrap();
        assert!(is_slata_relation(&r, &i_b, &d_b, &i_a, &d_a).is_err());
    }

    #[test]
    fn relation_from_map_and_from_hom_agree_thrice() {
        // For an endomorphism h of D4 the multirelation of h and the meet
        // relation of h induce the same box on β-sets.
        let a = fixtures::d4();
        let dual = dual_space(&a);
        for h in a.homomorphisms(&a) {
            let mr = relation_from_map(&dual, &dual, &h);
            let rr = relation_from_hom(&dual, &dual, &h);
            for x in 0..a.n() {
                assert_eq!(
                    box_multirel(&dual.space, &mr, dual.beta[x]).unwrap(),
                    rr.box_op(dual.beta[x])
                );
            }
        }
    }
}
