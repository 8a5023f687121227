//! Tense quadruples: two interacting adjoint pairs on one semilattice, and
//! their dual spaces with four multirelations.
//!
//! A tense quadruple `⟨A, P, G, F, H⟩` has `P ⊣ G`, `F ⊣ H`, and the mixing
//! laws `G(x) ∧ F(y) ≤ F(x ∧ y)` and `H(x) ∧ P(y) ≤ P(x ∧ y)`.  The same
//! class is carved out by an equational formulation (monotonicity of all
//! four maps plus three inequality families); validation computes both and
//! insists they agree.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::adjoint::{
    enumerate_adjoint_pairs, equational_adjoint_check, AdjointFailure, SizeLimitExceeded, Slata,
};
use crate::order::{is_monotone, MeetSemilattice};
use crate::space::{
    algebra_of_slata_space, dual_space, relation_from_map, verify_slata_space, DualSpace,
    Multirelation, SSpace, SlataSpaceReport, SpaceAlgebraError,
};
use crate::verdict::Verdict;

/// Why a quadruple fails to be a tense quadruple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TenseFailure {
    /// One operator table has the wrong length.
    Table {
        op: char,
        expected: usize,
        got: usize,
    },
    /// One operator table has a value outside the carrier.
    Value { op: char, x: usize, value: usize },
    /// The pair (P, G) is not an adjunction.
    PastPair(AdjointFailure),
    /// The pair (F, H) is not an adjunction.
    FuturePair(AdjointFailure),
    /// A mixing law fails: with `future` set, `G(x) ∧ F(y) ≰ F(x ∧ y)`;
    /// otherwise `H(x) ∧ P(y) ≰ P(x ∧ y)`.
    Interplay { future: bool, x: usize, y: usize },
    /// The adjunction formulation and the inequality formulation came to
    /// different verdicts — an internal inconsistency, never expected.
    FormulationsDisagree { adjunction_ok: bool },
}

impl fmt::Display for TenseFailure {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TenseFailure::Table { op, expected, got } => {
                write!(fm, "operator {op}: table has {got} entries, expected {expected}")
            }
            TenseFailure::Value { op, x, value } => {
                write!(fm, "operator {op}: value {value} at {x} is outside the carrier")
            }
            TenseFailure::PastPair(ref e) => write!(fm, "P ⊣ G fails: {e}"),
            TenseFailure::FuturePair(ref e) => write!(fm, "F ⊣ H fails: {e}"),
            TenseFailure::Interplay { future, x, y } => {
                if future {
                    write!(fm, "G({x}) ∧ F({y}) ≰ F({x} ∧ {y})")
                } else {
                    write!(fm, "H({x}) ∧ P({y}) ≰ P({x} ∧ {y})")
                }
            }
            TenseFailure::FormulationsDisagree { adjunction_ok } => write!(
                fm,
                "formulations disagree: adjunction form says {}, inequality form says {}",
                adjunction_ok, !adjunction_ok
            ),
        }
    }
}

/// A validated tense quadruple.
#[derive(Clone, Debug)]
pub struct ESlata {
    algebra: MeetSemilattice,
    p: Vec<usize>,
    g: Vec<usize>,
    f: Vec<usize>,
    h: Vec<usize>,
}

/// First failing mixing law, if any.
pub fn interplay_witness(
    a: &MeetSemilattice,
    p: &[usize],
    g: &[usize],
    f: &[usize],
    h: &[usize],
) -> Option<(bool, usize, usize)> {
    for x in 0..a.n() {
        for y in 0..a.n() {
            if !a.leq(a.meet(g[x], f[y]), f[a.meet(x, y)]) {
                return Some((true, x, y));
            }
            if !a.leq(a.meet(h[x], p[y]), p[a.meet(x, y)]) {
                return Some((false, x, y));
            }
        }
    }
    None
}

/// The inequality formulation: all four maps monotone, the mixing laws, and
/// the unit/counit inequalities `x ≤ GPx`, `x ≤ HFx`, `PGx ≤ x`, `FHx ≤ x`.
pub fn inequality_form_holds(
    a: &MeetSemilattice,
    p: &[usize],
    g: &[usize],
    f: &[usize],
    h: &[usize],
) -> bool {
    let ord = a.order();
    for t in [p, g, f, h] {
        if is_monotone(ord, ord, t).is_err() {
            return false;
        }
    }
    if interplay_witness(a, p, g, f, h).is_some() {
        return false;
    }
    (0..a.n()).all(|x| {
        a.leq(x, g[p[x]]) && a.leq(x, h[f[x]]) && a.leq(p[g[x]], x) && a.leq(f[h[x]], x)
    })
}

impl ESlata {
    /// Validates the quadruple through the adjunction formulation, reporting
    /// the first failing axiom; also computes the inequality formulation and
    /// rejects with `FormulationsDisagree` if the two differ.
    pub fn new(
        algebra: MeetSemilattice,
        p: Vec<usize>,
        g: Vec<usize>,
        f: Vec<usize>,
        h: Vec<usize>,
    ) -> Result<ESlata, TenseFailure> {
        let n = algebra.n();
        for (op, t) in [('P', &p), ('G', &g), ('F', &f), ('H', &h)] {
            if t.len() != n {
                return Err(TenseFailure::Table {
                    op,
                    expected: n,
                    got: t.len(),
                });
            }
            for (x, &v) in t.iter().enumerate() {
                if v >= n {
                    return Err(TenseFailure::Value { op, x, value: v });
                }
            }
        }
        let adjunction_form = (|| -> Result<(), TenseFailure> {
            equational_adjoint_check(&algebra, &p, &g).map_err(TenseFailure::PastPair)?;
            equational_adjoint_check(&algebra, &f, &h).map_err(TenseFailure::FuturePair)?;
            if let Some((future, x, y)) = interplay_witness(&algebra, &p, &g, &f, &h) {
                return Err(TenseFailure::Interplay { future, x, y });
            }
            Ok(())
        })();
        let inequality_form = inequality_form_holds(&algebra, &p, &g, &f, &h);
        if adjunction_form.is_ok() != inequality_form {
            return Err(TenseFailure::FormulationsDisagree {
                adjunction_ok: adjunction_form.is_ok(),
            });
        }
        adjunction_form?;
        Ok(ESlata { algebra, p, g, f, h })
    }

    pub fn algebra(&self) -> &MeetSemilattice {
        &self.algebra
    }

    pub fn op_p(&self) -> &[usize] {
        &self.p
    }

    pub fn op_g(&self) -> &[usize] {
        &self.g
    }

    pub fn op_f(&self) -> &[usize] {
        &self.f
    }

    pub fn op_h(&self) -> &[usize] {
        &self.h
    }

    /// The adjoint pair (P, G) as a standalone structure.
    pub fn past_pair(&self) -> Slata {
        Slata::new(self.algebra.clone(), self.p.clone(), self.g.clone())
            .expect("validated quadruples have P ⊣ G")
    }

    /// The adjoint pair (F, H) as a standalone structure.
    pub fn future_pair(&self) -> Slata {
        Slata::new(self.algebra.clone(), self.f.clone(), self.h.clone())
            .expect("validated quadruples have F ⊣ H")
    }
}

/// Checks the theorems that follow from the axioms: meet subdistribution of
/// `F` and `P`, the exchange inequalities, and the triple-composition
/// identities.  Failure on a validated quadruple signals a bug.
pub fn check_derived_identities(e: &ESlata) -> Result<(), String> {
    let a = e.algebra();
    let (p, g, f, h) = (e.op_p(), e.op_g(), e.op_f(), e.op_h());
    for x in 0..a.n() {
        for y in 0..a.n() {
            let m = a.meet(x, y);
            if !a.leq(f[m], a.meet(f[x], f[y])) {
                return Err(format!("F({x}∧{y}) ≰ F({x})∧F({y})"));
            }
            if !a.leq(p[m], a.meet(p[x], p[y])) {
                return Err(format!("P({x}∧{y}) ≰ P({x})∧P({y})"));
            }
            if !a.leq(a.meet(x, f[y]), f[a.meet(p[x], y)]) {
                return Err(format!("{x}∧F({y}) ≰ F(P({x})∧{y})"));
            }
            if !a.leq(a.meet(x, p[y]), p[a.meet(f[x], y)]) {
                return Err(format!("{x}∧P({y}) ≰ P(F({x})∧{y})"));
            }
        }
        if f[h[f[x]]] != f[x] {
            return Err(format!("FHF({x}) ≠ F({x})"));
        }
        if p[g[p[x]]] != p[x] {
            return Err(format!("PGP({x}) ≠ P({x})"));
        }
        if g[p[g[x]]] != g[x] {
            return Err(format!("GPG({x}) ≠ G({x})"));
        }
        if h[f[h[x]]] != h[x] {
            return Err(format!("HFH({x}) ≠ H({x})"));
        }
    }
    Ok(())
}

/// A space with four multirelations, the dual shape of a tense quadruple.
#[derive(Clone, Debug)]
pub struct ESlataSpace {
    pub space: SSpace,
    pub i1: Multirelation,
    pub d1: Multirelation,
    pub i2: Multirelation,
    pub d2: Multirelation,
}

/// Verdicts for the tense-space axioms.
#[derive(Clone, Debug)]
pub struct ESlataSpaceReport {
    /// `⟨X, K, I1, D1⟩` is a valid adjoint-pair space.
    pub past: SlataSpaceReport,
    /// `⟨X, K, I2, D2⟩` is a valid adjoint-pair space.
    pub future: SlataSpaceReport,
    /// If `D1(x) ⊆ L_U` and `I2(x) ⊆ L_V` then `I2(x) ⊆ L_{U∩V}`.
    pub e2: Verdict,
    /// If `D2(x) ⊆ L_U` and `I1(x) ⊆ L_V` then `I1(x) ⊆ L_{U∩V}`.
    pub e3: Verdict,
}

impl ESlataSpaceReport {
    pub fn all_pass(&self) -> bool {
        self.past.all_pass() && self.future.all_pass() && self.e2.passed() && self.e3.passed()
    }

    pub fn checks(&self) -> Vec<(String, &Verdict)> {
        let mut out = Vec::new();
        for (name, v) in self.past.checks() {
            out.push((format!("past.{name}"), v));
        }
        for (name, v) in self.future.checks() {
            out.push((format!("future.{name}"), v));
        }
        out.push(("mixed.e2".to_string(), &self.e2));
        out.push(("mixed.e3".to_string(), &self.e3));
        out
    }
}

fn mixed_condition(
    space: &SSpace,
    d_first: &Multirelation,
    i_second: &Multirelation,
) -> Verdict {
    let s = space.s_closed();
    for x in 0..space.n() {
        for &u in s {
            if !d_first.at[x].is_subset(&space.l_u(u)) {
                continue;
            }
            for &v in s {
                if i_second.at[x].is_subset(&space.l_u(v))
                    && !i_second.at[x].is_subset(&space.l_u(u.inter(v)))
                {
                    return Verdict::Fail(format!(
                        "x={x}, U={u}, V={v}: the second image escapes L of the intersection"
                    ));
                }
            }
        }
    }
    Verdict::Pass
}

/// Checks the tense-space axioms: both component spaces, then the two mixed
/// conditions.
pub fn verify_eslata_space(sp: &ESlataSpace) -> ESlataSpaceReport {
    ESlataSpaceReport {
        past: verify_slata_space(&sp.space, &sp.i1, &sp.d1),
        future: verify_slata_space(&sp.space, &sp.i2, &sp.d2),
        e2: mixed_condition(&sp.space, &sp.d1, &sp.i2),
        e3: mixed_condition(&sp.space, &sp.d2, &sp.i1),
    }
}

/// The dual of a tense quadruple: the dual space of its algebra with the
/// multirelations of `P`, `G`, `F`, `H` as `I1`, `D1`, `I2`, `D2`.
pub fn dualize_eslata(e: &ESlata) -> (DualSpace, ESlataSpace) {
    let dual = dual_space(e.algebra());
    let rel = |t: &[usize]| relation_from_map(&dual, &dual, t);
    let sp = ESlataSpace {
        space: dual.space.clone(),
        i1: rel(e.op_p()),
        d1: rel(e.op_g()),
        i2: rel(e.op_f()),
        d2: rel(e.op_h()),
    };
    (dual, sp)
}

/// Failure to read a tense quadruple off a space with four multirelations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ESlataAlgebraError {
    Past(SpaceAlgebraError),
    Future(SpaceAlgebraError),
    Axioms(TenseFailure),
}

impl fmt::Display for ESlataAlgebraError {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ESlataAlgebraError::Past(e) => write!(fm, "first pair: {e}"),
            ESlataAlgebraError::Future(e) => write!(fm, "second pair: {e}"),
            ESlataAlgebraError::Axioms(e) => write!(fm, "{e}"),
        }
    }
}

/// Reads the tense quadruple `⟨S(X), m_I1, m_D1, m_I2, m_D2⟩` off a space.
pub fn algebra_of_eslata_space(sp: &ESlataSpace) -> Result<ESlata, ESlataAlgebraError> {
    let past = algebra_of_slata_space(&sp.space, &sp.i1, &sp.d1)
        .map_err(ESlataAlgebraError::Past)?;
    let future = algebra_of_slata_space(&sp.space, &sp.i2, &sp.d2)
        .map_err(ESlataAlgebraError::Future)?;
    ESlata::new(
        past.algebra().clone(),
        past.i().to_vec(),
        past.d().to_vec(),
        future.i().to_vec(),
        future.d().to_vec(),
    )
    .map_err(ESlataAlgebraError::Axioms)
}

/// Explicit isomorphism `a ↦ β(a)` onto the quadruple read off the dual
/// space, transport of all four operators included.
pub fn eslata_unit_isomorphism(e: &ESlata) -> Result<Vec<usize>, String> {
    let phi = crate::space::semilattice_unit_isomorphism(e.algebra())?;
    let (dual, sp) = dualize_eslata(e);
    let b = algebra_of_eslata_space(&sp).map_err(|err| err.to_string())?;
    if b.algebra().n() != e.algebra().n() {
        return Err("dual quadruple has a different carrier size".to_string());
    }
    let pairs: [(&[usize], &[usize], char); 4] = [
        (e.op_p(), b.op_p(), 'P'),
        (e.op_g(), b.op_g(), 'G'),
        (e.op_f(), b.op_f(), 'F'),
        (e.op_h(), b.op_h(), 'H'),
    ];
    for x in 0..e.algebra().n() {
        for (orig, img, name) in pairs {
            if img[phi[x]] != phi[orig[x]] {
                return Err(format!("β does not carry {name} at {x}"));
            }
        }
    }
    // The β-sets themselves also pin the transported boxes.
    for x in 0..e.algebra().n() {
        debug_assert_eq!(dual.space.s_closed()[phi[x]], dual.beta[x]);
    }
    Ok(phi)
}

/// All tense quadruples on an algebra, built from its adjoint pairs and
/// filtered by the mixing laws; ordered by (past pair, future pair) in the
/// pair enumeration order.
pub fn enumerate_eslatas(
    a: &MeetSemilattice,
    limit: usize,
) -> Result<Vec<ESlata>, SizeLimitExceeded> {
    let pairs = enumerate_adjoint_pairs(a, limit)?;
    let mut out = Vec::new();
    for past in &pairs {
        for future in &pairs {
            if interplay_witness(a, &past.left, &past.right, &future.left, &future.right)
                .is_none()
            {
                out.push(
                    ESlata::new(
                        a.clone(),
                        past.left.clone(),
                        past.right.clone(),
                        future.left.clone(),
                        future.right.clone(),
                    )
                    .expect("two adjoint pairs passing the mixing laws form a quadruple"),
                );
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn worked_example_tables_are_frozen() {
        let e = fixtures::fig1_eslata();
        assert_eq!(e.op_p(), &[0, 4, 2, 8, 4, 5, 8, 7, 8]);
        assert_eq!(e.op_g(), &[0, 0, 2, 0, 4, 5, 4, 7, 8]);
        assert_eq!(e.op_f(), &[0, 1, 4, 3, 4, 8, 6, 8, 8]);
        assert_eq!(e.op_h(), &[0, 1, 0, 3, 4, 0, 6, 4, 8]);
    }

    #[test]
    fn identity_quadruple_is_valid_everywhere() {
        for a in [
            fixtures::one(),
            fixtures::c2(),
            fixtures::c3(),
            fixtures::d4(),
            fixtures::fig1_algebra(),
        ] {
            let id: Vec<usize> = (0..a.n()).collect();
            ESlata::new(a, id.clone(), id.clone(), id.clone(), id).unwrap();
        }
    }

    #[test]
    fn swapping_g_and_h_breaks_the_axioms() {
        let e = fixtures::fig1_eslata();
        let err = ESlata::new(
            e.algebra().clone(),
            e.op_p().to_vec(),
            e.op_h().to_vec(), // G := H
            e.op_f().to_vec(),
            e.op_g().to_vec(), // H := G
        )
        .unwrap_err();
        assert!(
            matches!(err, TenseFailure::PastPair(_) | TenseFailure::FuturePair(_)),
            "unexpected failure {err:?}"
        );
    }

    #[test]
    fn bad_tables_are_rejected() {
        let a = fixtures::c2();
        let id = vec![0, 1];
        assert_eq!(
            ESlata::new(a.clone(), vec![0], id.clone(), id.clone(), id.clone()).unwrap_err(),
            TenseFailure::Table {
                op: 'P',
                expected: 2,
                got: 1
            }
        );
        assert_eq!(
            ESlata::new(a, id.clone(), id.clone(), id.clone(), vec![0, 5]).unwrap_err(),
            TenseFailure::Value {
                op: 'H',
                x: 1,
                value: 5
            }
        );
    }

    #[test]
    fn formulations_agree_on_every_small_quadruple() {
        for a in [fixtures::c2(), fixtures::c3()] {
            let maps = crate::order::monotone_maps(a.order(), a.order());
            // Also throw in non-monotone tables on the two-element chain.
            let mut tables = maps.clone();
            if a.n() == 2 {
                tables.push(vec![1, 0]);
            }
            for p in &tables {
                for g in &tables {
                    for f in &tables {
                        for h in &tables {
                            // `new` itself asserts agreement and returns
                            // FormulationsDisagree on any mismatch.
                            let r = ESlata::new(
                                a.clone(),
                                p.clone(),
                                g.clone(),
                                f.clone(),
                                h.clone(),
                            );
                            assert!(
                                !matches!(r, Err(TenseFailure::FormulationsDisagree { .. })),
                                "disagreement at {p:?} {g:?} {f:?} {h:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn derived_identities_hold_on_validated_quadruples() {
        check_derived_identities(&fixtures::fig1_eslata()).unwrap();
        for a in [fixtures::c2(), fixtures::c3(), fixtures::d4()] {
            for e in enumerate_eslatas(&a, 16).unwrap() {
                check_derived_identities(&e).unwrap();
            }
        }
        // Frozen spot value from the worked example: F(H(F(e))) = F(e) = 1.
        let e = fixtures::fig1_eslata();
        let (f, h) = (e.op_f(), e.op_h());
        assert_eq!(f[5], 8);
        assert_eq!(h[f[5]], 8);
        assert_eq!(f[h[f[5]]], f[5]);
    }

    #[test]
    fn two_element_chain_has_exactly_two_quadruples() {
        let es = enumerate_eslatas(&fixtures::c2(), 8).unwrap();
        assert_eq!(es.len(), 2);
        // (P,G) = (F,H) = (const 0, const 1), then the identity quadruple.
        assert_eq!(es[0].op_p(), &[0, 0]);
        assert_eq!(es[0].op_g(), &[1, 1]);
        assert_eq!(es[0].op_f(), &[0, 0]);
        assert_eq!(es[0].op_h(), &[1, 1]);
        assert_eq!(es[1].op_p(), &[0, 1]);
        assert_eq!(es[1].op_h(), &[0, 1]);
    }

    #[test]
    fn mixed_pairs_on_the_chain_fail_the_mixing_laws() {
        let a = fixtures::c2();
        let err = ESlata::new(a.clone(), vec![0, 0], vec![1, 1], vec![0, 1], vec![0, 1])
            .unwrap_err();
        assert_eq!(
            err,
            TenseFailure::Interplay {
                future: true,
                x: 0,
                y: 1
            }
        );
        let err = ESlata::new(a, vec![0, 1], vec![0, 1], vec![0, 0], vec![1, 1]).unwrap_err();
        assert_eq!(
            err,
            TenseFailure::Interplay {
                future: false,
                x: 0,
                y: 1
            }
        );
    }

    #[test]
    fn duals_of_quadruples_are_valid_spaces() {
        let (_, sp) = dualize_eslata(&fixtures::fig1_eslata());
        let rep = verify_eslata_space(&sp);
        assert!(rep.all_pass(), "{:?}", rep.checks());
        for a in [fixtures::c2(), fixtures::c3(), fixtures::d4()] {
            for e in enumerate_eslatas(&a, 16).unwrap() {
                let (_, sp) = dualize_eslata(&e);
                assert!(verify_eslata_space(&sp).all_pass());
            }
        }
    }

    #[test]
    fn empty_second_relation_fails_the_component_space() {
        let (_, mut sp) = dualize_eslata(&fixtures::fig1_eslata());
        sp.i2 = Multirelation::empty(sp.space.n());
        let rep = verify_eslata_space(&sp);
        assert!(!rep.all_pass());
        // The empty multirelation still satisfies both multirelation
        // conditions on a dual space; what breaks is the reflection
        // condition of the second component pair.
        assert!(rep.future.left_ms.all_pass());
        assert!(!rep.future.cond3.passed());
    }

    #[test]
    fn swapped_adjoints_fail_on_the_dual_side() {
        let e = fixtures::fig1_eslata();
        let dual = dual_space(e.algebra());
        let rel = |t: &[usize]| relation_from_map(&dual, &dual, t);
        let sp = ESlataSpace {
            space: dual.space.clone(),
            i1: rel(e.op_p()),
            d1: rel(e.op_h()), // D1 should pair with I1 = R_P
            i2: rel(e.op_f()),
            d2: rel(e.op_g()),
        };
        let rep = verify_eslata_space(&sp);
        assert!(!rep.past.all_pass());
    }

    #[test]
    fn mismatched_valid_pairs_fail_only_the_mixed_condition() {
        // On the two-element chain, (const0, const1) and (id, id) are both
        // adjoint pairs but cannot share a quadruple.
        let a = fixtures::c2();
        let dual = dual_space(&a);
        let rel = |t: &[usize]| relation_from_map(&dual, &dual, t);
        let sp = ESlataSpace {
            space: dual.space.clone(),
            i1: rel(&[0, 0]),
            d1: rel(&[1, 1]),
            i2: rel(&[0, 1]),
            d2: rel(&[0, 1]),
        };
        let rep = verify_eslata_space(&sp);
        assert!(rep.past.all_pass());
        assert!(rep.future.all_pass());
        assert!(!rep.e2.passed());
        assert!(rep.e3.passed());
    }

    #[test]
    fn round_trips_are_isomorphisms() {
        eslata_unit_isomorphism(&fixtures::fig1_eslata()).unwrap();
        for a in [fixtures::c2(), fixtures::c3(), fixtures::d4()] {
            for e in enumerate_eslatas(&a, 16).unwrap() {
                eslata_unit_isomorphism(&e).unwrap();
            }
        }
    }

    #[test]
    fn component_pairs_are_extractable() {
        let e = fixtures::fig1_eslata();
        let past = e.past_pair();
        assert_eq!(past.i(), e.op_p());
        assert_eq!(past.d(), e.op_g());
        let future = e.future_pair();
        assert_eq!(future.i(), e.op_f());
        assert_eq!(future.d(), e.op_h());
    }
}
