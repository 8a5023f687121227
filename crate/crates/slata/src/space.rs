//! Subbasic spaces, dual spaces of algebras, and multirelations.
//!
//! A space `⟨X, K⟩` is a finite point set with a distinguished subbase `K` of
//! open sets.  Three derived families drive everything here:
//!
//! - `S(X)`: complements of subbase members (the subbasic closed sets);
//! - `Z(X)`: all intersections of subfamilies of `K`, including `X` as the
//!   empty intersection (∅ appears only when realized);
//! - `C_K(X)`: all intersections of subfamilies of `S(X)`, again including
//!   `X`.
//!
//! The dual space of an algebra has the irreducible filters as points and
//! `{β(a)^c}` as subbase; multirelations `R ⊆ X × Z(X)` carry unary
//! operations across the duality.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::adjoint::{AdjointFailure, Slata};
use crate::filter::{beta, irreducible_filters, SpectrumPoint};
use crate::order::MeetSemilattice;
use crate::set::{SmallSet, MAX_UNIVERSE};
use crate::verdict::Verdict;

/// All intersections of subfamilies of `gens` in the universe `{0,..,n-1}`,
/// including the full set as the empty intersection.
fn inter_closure(n: usize, gens: &[SmallSet]) -> Vec<SmallSet> {
    let mut seen: BTreeSet<SmallSet> = BTreeSet::new();
    let mut work = vec![SmallSet::full(n)];
    seen.insert(SmallSet::full(n));
    while let Some(cur) = work.pop() {
        for &g in gens {
            let x = cur.inter(g);
            if seen.insert(x) {
                work.push(x);
            }
        }
    }
    let mut out: Vec<SmallSet> = seen.into_iter().collect();
    out.sort();
    out
}

/// A finite space with a distinguished subbase of opens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSpace {
    n: usize,
    subbase: Vec<SmallSet>,
    sclosed: Vec<SmallSet>,
    zx: Vec<SmallSet>,
    ck: Vec<SmallSet>,
}

impl SSpace {
    /// Builds the space and derives `S(X)`, `Z(X)` and `C_K(X)`.  The subbase
    /// is deduplicated and kept in canonical order.
    pub fn new(n: usize, subbase: Vec<SmallSet>) -> SSpace {
        assert!(n <= MAX_UNIVERSE, "point set too large");
        let full = SmallSet::full(n);
        let mut k: Vec<SmallSet> = subbase;
        for u in &k {
            assert!(u.is_subset(full), "subbase member outside the point set");
        }
        k.sort();
        k.dedup();
        let sclosed: Vec<SmallSet> = {
            let mut s: Vec<SmallSet> = k.iter().map(|u| u.complement_in(n)).collect();
            s.sort();
            s.dedup();
            s
        };
        let zx = inter_closure(n, &k);
        let ck = inter_closure(n, &sclosed);
        SSpace {
            n,
            subbase: k,
            sclosed,
            zx,
            ck,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> SmallSet {
        SmallSet::full(self.n)
    }

    /// The subbase `K`, canonically ordered.
    pub fn subbase(&self) -> &[SmallSet] {
        &self.subbase
    }

    /// The subbasic closed sets `S(X)`, canonically ordered.
    pub fn s_closed(&self) -> &[SmallSet] {
        &self.sclosed
    }

    /// The family `Z(X)`, canonically ordered.
    pub fn z_family(&self) -> &[SmallSet] {
        &self.zx
    }

    /// The closure system `C_K(X)`, canonically ordered.
    pub fn c_family(&self) -> &[SmallSet] {
        &self.ck
    }

    pub fn s_index(&self, u: SmallSet) -> Option<usize> {
        self.sclosed.binary_search(&u).ok()
    }

    pub fn z_index(&self, z: SmallSet) -> Option<usize> {
        self.zx.binary_search(&z).ok()
    }

    pub fn c_index(&self, c: SmallSet) -> Option<usize> {
        self.ck.binary_search(&c).ok()
    }

    /// `L_U = {Z ∈ Z(X) : Z ∩ U ≠ ∅}` as a set of `Z(X)` indices.
    pub fn l_u(&self, u: SmallSet) -> BTreeSet<usize> {
        (0..self.zx.len())
            .filter(|&zi| self.zx[zi].intersects(u))
            .collect()
    }

    /// The whole of `Z(X)` as an index set (the empty-family intersection).
    pub fn all_z(&self) -> BTreeSet<usize> {
        (0..self.zx.len()).collect()
    }

    /// Closure of the point `y`: `x ∈ cl(y)` iff every subbase member
    /// containing `x` contains `y`.
    pub fn closure_of_point(&self, y: usize) -> SmallSet {
        (0..self.n)
            .filter(|&x| self.subbase.iter().all(|u| !u.contains(x) || u.contains(y)))
            .collect()
    }
}

/// Per-axiom verdicts for the space axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSpaceReport {
    /// Distinct points have distinct subbase membership profiles.
    pub t0: Verdict,
    /// The subbase covers the point set.
    pub cover: Verdict,
    /// Compactness of subbase members: trivially true at finite scale.
    pub compact: Verdict,
    /// The subbase is closed under binary unions.
    pub unions: Verdict,
    /// The empty set belongs to the subbase.
    pub empty_member: Verdict,
    /// The separation axiom: for `x ∈ U ∩ V` there are `W, D ∈ K` with
    /// `x ∉ W`, `x ∈ D`, `D ⊆ (U ∩ V) ∪ W`.
    pub s3: Verdict,
    /// The adequacy axiom over `C_K(X)` and nonempty families in `S(X)`.
    pub s4: Verdict,
}

impl SSpaceReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, v)| v.passed())
    }

    pub fn checks(&self) -> Vec<(&'static str, &Verdict)> {
        vec![
            ("space.t0", &self.t0),
            ("space.cover", &self.cover),
            ("space.compact", &self.compact),
            ("space.unions", &self.unions),
            ("space.empty-member", &self.empty_member),
            ("space.s3", &self.s3),
            ("space.s4", &self.s4),
        ]
    }
}

/// Checks the space axioms, reporting a witness for the first failure of
/// each.  The adequacy scan (`s4`) ranges over **nonempty** subfamilies of
/// `S(X)`; the empty family would falsify the axiom on every dual space via
/// the empty member of `C_K(X)`, which is not the intent of the condition.
/// The scan is exponential in `|S(X)|`.
pub fn verify_s_space(space: &SSpace) -> SSpaceReport {
    let n = space.n;
    let k = &space.subbase;

    let mut t0 = Verdict::Pass;
    'tzero: for x in 0..n {
        for y in (x + 1)..n {
            if k.iter().all(|u| u.contains(x) == u.contains(y)) {
                t0 = Verdict::Fail(format!(
                    "points {x} and {y} lie in exactly the same subbase members"
                ));
                break 'tzero;
            }
        }
    }

    let covered = k.iter().fold(SmallSet::EMPTY, |acc, &u| acc.union(u));
    let cover = Verdict::when(covered == space.full(), || {
        format!("subbase covers only {covered}")
    });

    let compact = Verdict::Vacuous;

    let mut unions = Verdict::Pass;
    'unions: for &u in k.iter() {
        for &v in k.iter() {
            if !k.binary_search(&u.union(v)).is_ok() {
                unions = Verdict::Fail(format!("{u} ∪ {v} is not in the subbase"));
                break 'unions;
            }
        }
    }

    let empty_member = Verdict::when(k.binary_search(&SmallSet::EMPTY).is_ok(), || {
        "the empty set is not in the subbase".to_string()
    });

    let mut s3 = Verdict::Pass;
    's3: for &u in k.iter() {
        for &v in k.iter() {
            for x in u.inter(v).iter() {
                let ok = k.iter().any(|&d| {
                    d.contains(x)
                        && k.iter()
                            .any(|&w| !w.contains(x) && d.is_subset(u.inter(v).union(w)))
                });
                if !ok {
                    s3 = Verdict::Fail(format!(
                        "no W, D in the subbase separate x={x} inside {u} ∩ {v}"
                    ));
                    break 's3;
                }
            }
        }
    }

    let s = &space.sclosed;
    let ns = s.len();
    let mut s4 = Verdict::Pass;
    's4: for &y in space.ck.iter() {
        // Candidates for the H of the family condition: closed sets over Y.
        let hs: Vec<usize> = (0..ns).filter(|&h| y.is_subset(s[h])).collect();
        for jmask in 1u64..(1u64 << ns) {
            let j: Vec<usize> = (0..ns).filter(|&i| jmask >> i & 1 == 1).collect();
            // Premise: Y meets every complement, i.e. Y ⊈ A for all A ∈ J.
            if j.iter().any(|&a| y.is_subset(s[a])) {
                continue;
            }
            // Conclusion: Y ∖ ⋃J nonempty.  Only a failed conclusion makes
            // the (expensive) family check worth running.
            let union = j.iter().fold(SmallSet::EMPTY, |acc, &a| acc.union(s[a]));
            if !y.diff(union).is_empty() {
                continue;
            }
            let family = j.iter().all(|&a| {
                j.iter().all(|&b| {
                    hs.iter().any(|&h| {
                        j.iter().any(|&c| {
                            s[a].inter(s[h]).is_subset(s[c])
                                && s[b].inter(s[h]).is_subset(s[c])
                        })
                    })
                })
            });
            if family {
                let members: Vec<String> = j.iter().map(|&a| s[a].to_string()).collect();
                s4 = Verdict::Fail(format!(
                    "Y = {y} admits the family {{{}}} with empty residue",
                    members.join(", ")
                ));
                break 's4;
            }
        }
    }

    SSpaceReport {
        t0,
        cover,
        compact,
        unions,
        empty_member,
        s3,
        s4,
    }
}

/// A multirelation `R ⊆ X × Z(X)`, stored per point as a set of `Z(X)`
/// indices of the relevant space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multirelation {
    pub at: Vec<BTreeSet<usize>>,
}

impl Multirelation {
    pub fn empty(n_points: usize) -> Multirelation {
        Multirelation {
            at: vec![BTreeSet::new(); n_points],
        }
    }

    pub fn n_points(&self) -> usize {
        self.at.len()
    }
}

/// The dual space of an algebra: spectrum points, the embedding `β`, and the
/// space with subbase `{β(a)^c}`.
#[derive(Clone, Debug)]
pub struct DualSpace {
    pub spectrum: Vec<SpectrumPoint>,
    /// `beta[a]` is the spectrum-point set of the carrier element `a`.
    pub beta: Vec<SmallSet>,
    pub space: SSpace,
}

impl DualSpace {
    /// Carrier size of the algebra this is the dual of.
    pub fn carrier(&self) -> usize {
        self.beta.len()
    }

    /// `I_A(Z) = {a : β(a) ∩ Z = ∅}`.
    pub fn i_a(&self, z: SmallSet) -> SmallSet {
        (0..self.beta.len())
            .filter(|&a| !self.beta[a].intersects(z))
            .collect()
    }
}

/// Builds the dual space of a validated algebra.
pub fn dual_space(a: &MeetSemilattice) -> DualSpace {
    let spectrum = irreducible_filters(a);
    let betas: Vec<SmallSet> = (0..a.n()).map(|x| beta(&spectrum, x)).collect();
    let n = spectrum.len();
    let subbase: Vec<SmallSet> = betas.iter().map(|b| b.complement_in(n)).collect();
    DualSpace {
        spectrum,
        beta: betas,
        space: SSpace::new(n, subbase),
    }
}

/// The multirelation `R_f ⊆ 𝒳(B) × Z(𝒳(A))` of an order-preserving map
/// `f : A -> B`: `(P, Z) ∈ R_f` iff `f⁻¹[P] ∩ I_A(Z) = ∅`.
///
/// `src` must be the dual of `A` (supplying `Z` and `β`), `tgt` the dual of
/// `B` (supplying the points).  For endomaps both are the same dual.
pub fn relation_from_map(src: &DualSpace, tgt: &DualSpace, f: &[usize]) -> Multirelation {
    assert_eq!(f.len(), src.carrier(), "map table must cover the source carrier");
    for &v in f {
        assert!(v < tgt.carrier(), "map value outside the target carrier");
    }
    let i_a: Vec<SmallSet> = src.space.z_family().iter().map(|&z| src.i_a(z)).collect();
    let at = tgt
        .spectrum
        .iter()
        .map(|p| {
            let f_inv: SmallSet = (0..src.carrier())
                .filter(|&a| p.filter.members.contains(f[a]))
                .collect();
            (0..i_a.len())
                .filter(|&zi| !f_inv.intersects(i_a[zi]))
                .collect()
        })
        .collect();
    Multirelation { at }
}

/// The argument of a box operator was not a subbasic closed set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotSubbasicClosed {
    pub set: SmallSet,
}

impl fmt::Display for NotSubbasicClosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is not a subbasic closed set", self.set)
    }
}

/// `m_R(U) = {x : R(x) ⊆ L_U}` for `U ∈ S(X)`.
pub fn box_multirel(
    space: &SSpace,
    r: &Multirelation,
    u: SmallSet,
) -> Result<SmallSet, NotSubbasicClosed> {
    if space.s_index(u).is_none() {
        return Err(NotSubbasicClosed { set: u });
    }
    let l = space.l_u(u);
    Ok((0..space.n())
        .filter(|&x| r.at[x].is_subset(&l))
        .collect())
}

/// Verdicts for the two multirelation conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MsReport {
    /// `m_R(U) ∈ S(X)` for every `U ∈ S(X)`.
    pub boxes_closed: Verdict,
    /// `R(x) = ⋂{L_U : U ∈ S(X), x ∈ m_R(U)}` (the empty intersection is all
    /// of `Z(X)`).
    pub images_reconstructed: Verdict,
}

impl MsReport {
    pub fn all_pass(&self) -> bool {
        self.boxes_closed.passed() && self.images_reconstructed.passed()
    }
}

fn raw_boxes(space: &SSpace, r: &Multirelation) -> Vec<SmallSet> {
    space
        .sclosed
        .iter()
        .map(|&u| {
            let l = space.l_u(u);
            (0..space.n()).filter(|&x| r.at[x].is_subset(&l)).collect()
        })
        .collect()
}

/// Checks both multirelation-space conditions for `⟨X, K, R⟩`.
pub fn verify_ms_space(space: &SSpace, r: &Multirelation) -> MsReport {
    assert_eq!(r.n_points(), space.n(), "relation must cover the point set");
    let boxes = raw_boxes(space, r);

    let mut closed = Verdict::Pass;
    for (ui, &b) in boxes.iter().enumerate() {
        if space.s_index(b).is_none() {
            closed = Verdict::Fail(format!(
                "m_R({}) = {} is not a subbasic closed set",
                space.sclosed[ui], b
            ));
            break;
        }
    }

    let mut reconstructed = Verdict::Pass;
    for x in 0..space.n() {
        let mut acc = space.all_z();
        for (ui, &b) in boxes.iter().enumerate() {
            if b.contains(x) {
                let l = space.l_u(space.sclosed[ui]);
                acc = acc.intersection(&l).copied().collect();
            }
        }
        if acc != r.at[x] {
            reconstructed = Verdict::Fail(format!(
                "R({x}) is not the intersection of its forcing L_U family"
            ));
            break;
        }
    }

    MsReport {
        boxes_closed: closed,
        images_reconstructed: reconstructed,
    }
}

/// Verdicts for the adjoint-pair space conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlataSpaceReport {
    pub left_ms: MsReport,
    pub right_ms: MsReport,
    /// For `x ∈ U` every `Z ∈ D(x)` holds a witness `w` with `I(w) ⊆ L_U`.
    pub cond2: Verdict,
    /// If every `Z ∈ I(x)` holds a witness `y` with `D(y) ⊆ L_U`, then
    /// `x ∈ U`.
    pub cond3: Verdict,
}

impl SlataSpaceReport {
    pub fn all_pass(&self) -> bool {
        self.left_ms.all_pass()
            && self.right_ms.all_pass()
            && self.cond2.passed()
            && self.cond3.passed()
    }

    pub fn checks(&self) -> Vec<(&'static str, &Verdict)> {
        vec![
            ("left.boxes-closed", &self.left_ms.boxes_closed),
            ("left.images-reconstructed", &self.left_ms.images_reconstructed),
            ("right.boxes-closed", &self.right_ms.boxes_closed),
            ("right.images-reconstructed", &self.right_ms.images_reconstructed),
            ("pair.cond2", &self.cond2),
            ("pair.cond3", &self.cond3),
        ]
    }
}

/// Checks that `⟨X, K, I, D⟩` carries a dual adjoint pair: both
/// multirelation conditions for `I` and `D`, plus the two interplay
/// conditions.
pub fn verify_slata_space(
    space: &SSpace,
    i: &Multirelation,
    d: &Multirelation,
) -> SlataSpaceReport {
    let left_ms = verify_ms_space(space, i);
    let right_ms = verify_ms_space(space, d);

    let mut cond2 = Verdict::Pass;
    'c2: for &u in space.sclosed.iter() {
        let l = space.l_u(u);
        for x in u.iter() {
            for &zi in d.at[x].iter() {
                let z = space.zx[zi];
                if !z.iter().any(|w| i.at[w].is_subset(&l)) {
                    cond2 = Verdict::Fail(format!(
                        "x={x} in U={u}: Z={z} in D(x) has no w with I(w) ⊆ L_U"
                    ));
                    break 'c2;
                }
            }
        }
    }

    let mut cond3 = Verdict::Pass;
    'c3: for &u in space.sclosed.iter() {
        let l = space.l_u(u);
        for x in 0..space.n() {
            let forced = i.at[x].iter().all(|&zi| {
                space.zx[zi].iter().any(|y| d.at[y].is_subset(&l))
            });
            if forced && !u.contains(x) {
                cond3 = Verdict::Fail(format!(
                    "x={x}: every Z in I(x) has a D-witness for U={u}, yet x is outside U"
                ));
                break 'c3;
            }
        }
    }

    SlataSpaceReport {
        left_ms,
        right_ms,
        cond2,
        cond3,
    }
}

/// Failure to read an algebra off a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualAlgebraError {
    NotClosedUnderIntersection { u: SmallSet, v: SmallSet },
    FullSetMissing,
}

impl fmt::Display for DualAlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DualAlgebraError::NotClosedUnderIntersection { u, v } => {
                write!(f, "S(X) is not closed under intersection at {u}, {v}")
            }
            DualAlgebraError::FullSetMissing => {
                write!(f, "the full point set is not a subbasic closed set")
            }
        }
    }
}

/// The algebra `⟨S(X), ∩, X⟩` of a space, with the canonically ordered
/// closed sets as carrier.
pub fn dual_algebra(space: &SSpace) -> Result<MeetSemilattice, DualAlgebraError> {
    let s = &space.sclosed;
    let n = s.len();
    let mut meet = Vec::with_capacity(n * n);
    for &u in s.iter() {
        for &v in s.iter() {
            match space.s_index(u.inter(v)) {
                Some(w) => meet.push(w),
                None => return Err(DualAlgebraError::NotClosedUnderIntersection { u, v }),
            }
        }
    }
    let top = space
        .s_index(space.full())
        .ok_or(DualAlgebraError::FullSetMissing)?;
    let labels = s.iter().map(|u| u.to_string()).collect();
    Ok(MeetSemilattice::validate(n, meet, top)
        .expect("intersection tables satisfy the meet laws")
        .with_labels(labels))
}

/// Failure to read an adjoint-pair algebra off a space with multirelations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceAlgebraError {
    Algebra(DualAlgebraError),
    /// A box image is not a subbasic closed set (`left` picks the relation).
    BoxNotClosed { left: bool, u: SmallSet },
    Adjoint(AdjointFailure),
}

impl fmt::Display for SpaceAlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceAlgebraError::Algebra(e) => write!(f, "{e}"),
            SpaceAlgebraError::BoxNotClosed { left, u } => {
                let side = if *left { "left" } else { "right" };
                write!(f, "{side} box image of {u} is not a subbasic closed set")
            }
            SpaceAlgebraError::Adjoint(e) => write!(f, "box operators are not adjoint: {e}"),
        }
    }
}

/// Reads the algebra `⟨S(X), m_I, m_D⟩` off a space with two multirelations.
pub fn algebra_of_slata_space(
    space: &SSpace,
    i: &Multirelation,
    d: &Multirelation,
) -> Result<Slata, SpaceAlgebraError> {
    let alg = dual_algebra(space).map_err(SpaceAlgebraError::Algebra)?;
    let table = |r: &Multirelation, left: bool| -> Result<Vec<usize>, SpaceAlgebraError> {
        space
            .sclosed
            .iter()
            .map(|&u| {
                let b = box_multirel(space, r, u).expect("u ranges over S(X)");
                space
                    .s_index(b)
                    .ok_or(SpaceAlgebraError::BoxNotClosed { left, u })
            })
            .collect()
    };
    let ti = table(i, true)?;
    let td = table(d, false)?;
    Slata::new(alg, ti, td).map_err(SpaceAlgebraError::Adjoint)
}

/// Failure of the point-to-double-dual evaluation map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HMapError {
    Algebra(DualAlgebraError),
    /// `H(x)` is not an irreducible filter of the dual algebra.
    NotIrreducible { x: usize },
    NotInjective { x: usize, y: usize },
    NotSurjective { q: usize },
    SubbaseMismatch { detail: String },
}

impl fmt::Display for HMapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HMapError::Algebra(e) => write!(f, "{e}"),
            HMapError::NotIrreducible { x } => {
                write!(f, "H({x}) is not an irreducible filter of the dual algebra")
            }
            HMapError::NotInjective { x, y } => write!(f, "H identifies points {x} and {y}"),
            HMapError::NotSurjective { q } => {
                write!(f, "spectrum point {q} of the dual algebra is not hit by H")
            }
            HMapError::SubbaseMismatch { detail } => write!(f, "{detail}"),
        }
    }
}

/// The evaluation map `H(x) = {A ∈ S(X) : x ∈ A}`, verified to be a bijection
/// onto the spectrum of the dual algebra that carries subbase to subbase.
#[derive(Clone, Debug)]
pub struct HMap {
    /// Point index to spectrum id of the dual algebra.
    pub table: Vec<usize>,
}

pub fn h_map(space: &SSpace) -> Result<HMap, HMapError> {
    let alg = dual_algebra(space).map_err(HMapError::Algebra)?;
    let spec = irreducible_filters(&alg);
    let mut table = Vec::with_capacity(space.n());
    for x in 0..space.n() {
        let hx: SmallSet = (0..space.sclosed.len())
            .filter(|&si| space.sclosed[si].contains(x))
            .collect();
        match spec.iter().find(|p| p.filter.members == hx) {
            Some(p) => table.push(p.id),
            None => return Err(HMapError::NotIrreducible { x }),
        }
    }
    for x in 0..table.len() {
        for y in (x + 1)..table.len() {
            if table[x] == table[y] {
                return Err(HMapError::NotInjective { x, y });
            }
        }
    }
    for q in 0..spec.len() {
        if !table.contains(&q) {
            return Err(HMapError::NotSurjective { q });
        }
    }
    // Subbase carries to subbase: {H[V] : V ∈ K} must equal the subbase of
    // the dual space of the dual algebra.
    let mut image: Vec<SmallSet> = space
        .subbase
        .iter()
        .map(|v| v.iter().map(|x| table[x]).collect())
        .collect();
    image.sort();
    image.dedup();
    let ddual = dual_space(&alg);
    if image != ddual.space.subbase {
        return Err(HMapError::SubbaseMismatch {
            detail: format!(
                "H-image of the subbase ({} members) differs from the double-dual subbase ({} members)",
                image.len(),
                ddual.space.subbase().len()
            ),
        });
    }
    Ok(HMap { table })
}

/// The dual of an algebra with an adjoint pair: its dual space together with
/// the multirelations of the two operations.
pub fn dualize_slata(s: &Slata) -> (DualSpace, Multirelation, Multirelation) {
    let dual = dual_space(s.algebra());
    let r_i = relation_from_map(&dual, &dual, s.i());
    let r_d = relation_from_map(&dual, &dual, s.d());
    (dual, r_i, r_d)
}

/// Explicit isomorphism `a ↦ β(a)` from an algebra onto the algebra of its
/// dual space; the table maps carrier indices to closed-set indices.
pub fn semilattice_unit_isomorphism(a: &MeetSemilattice) -> Result<Vec<usize>, String> {
    let dual = dual_space(a);
    let b = dual_algebra(&dual.space).map_err(|e| e.to_string())?;
    if b.n() != a.n() {
        return Err(format!(
            "dual algebra has {} elements, expected {}",
            b.n(),
            a.n()
        ));
    }
    let mut phi = Vec::with_capacity(a.n());
    for x in 0..a.n() {
        match dual.space.s_index(dual.beta[x]) {
            Some(si) => phi.push(si),
            None => return Err(format!("β({x}) is not a subbasic closed set")),
        }
    }
    for x in 0..a.n() {
        for y in 0..a.n() {
            if x != y && phi[x] == phi[y] {
                return Err(format!("β identifies {x} and {y}"));
            }
            if b.meet(phi[x], phi[y]) != phi[a.meet(x, y)] {
                return Err(format!("β does not carry meet({x},{y})"));
            }
        }
    }
    if phi[a.top()] != b.top() {
        return Err("β does not carry top".to_string());
    }
    Ok(phi)
}

/// Explicit isomorphism for an algebra with an adjoint pair: the unit
/// isomorphism of the carrier plus transport of both operations through
/// their multirelations.
pub fn unit_isomorphism(s: &Slata) -> Result<Vec<usize>, String> {
    let phi = semilattice_unit_isomorphism(s.algebra())?;
    let (dual, r_i, r_d) = dualize_slata(s);
    for x in 0..s.algebra().n() {
        let bi = box_multirel(&dual.space, &r_i, dual.beta[x]).map_err(|e| e.to_string())?;
        if bi != dual.beta[s.i()[x]] {
            return Err(format!("m_RI(β({x})) = {bi} differs from β(i({x}))"));
        }
        let bd = box_multirel(&dual.space, &r_d, dual.beta[x]).map_err(|e| e.to_string())?;
        if bd != dual.beta[s.d()[x]] {
            return Err(format!("m_RD(β({x})) = {bd} differs from β(d({x}))"));
        }
    }
    Ok(phi)
}

/// Checks that evaluation at points is an isomorphism of spaces-with-pairs
/// onto the dual of the algebra read off the space: the subbase carries over
/// and both multirelations transport along `H` and its action on `Z(X)`.
pub fn verify_counit_slata(
    space: &SSpace,
    i: &Multirelation,
    d: &Multirelation,
) -> Result<(), String> {
    let b = algebra_of_slata_space(space, i, d).map_err(|e| e.to_string())?;
    let h = h_map(space).map_err(|e| e.to_string())?;
    let ddual = dual_space(b.algebra());
    let r_i = relation_from_map(&ddual, &ddual, b.i());
    let r_d = relation_from_map(&ddual, &ddual, b.d());
    for (name, rel, drel) in [("I", i, &r_i), ("D", d, &r_d)] {
        for x in 0..space.n() {
            for zi in 0..space.z_family().len() {
                let z = space.z_family()[zi];
                let himg: SmallSet = z.iter().map(|w| h.table[w]).collect();
                let zj = ddual
                    .space
                    .z_index(himg)
                    .ok_or_else(|| format!("H-image of Z = {z} is outside Z of the double dual"))?;
                let lhs = rel.at[x].contains(&zi);
                let rhs = drel.at[h.table[x]].contains(&zj);
                if lhs != rhs {
                    return Err(format!(
                        "{name} does not transport at x={x}, Z={z}: {lhs} vs {rhs}"
                    ));
                }
            }
        }
    }
    Ok(())
}
