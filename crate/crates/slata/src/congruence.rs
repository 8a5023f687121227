//! Congruences on algebras with adjoint pairs, quotients, and the matching
//! families of closed sets on the dual side.
//!
//! A congruence must respect the meet and every listed unary operation.  On
//! the dual side the matching object is a family `F` of nonempty members of
//! `C_K(X)` that carries its own space structure (subbase `M_F = {U⁻_F}`),
//! has increasing operator images, and supports a derived adjoint pair of
//! multirelations.  The two sides correspond bijectively, and both round
//! trips are computed rather than assumed.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::adjoint::{SizeLimitExceeded, Slata};
use crate::order::MeetSemilattice;
use crate::relation::{relation_from_hom, MeetRelation};
use crate::set::SmallSet;
use crate::space::{
    dual_space, dualize_slata, verify_s_space, verify_slata_space, Multirelation, SSpace,
    SSpaceReport, SlataSpaceReport,
};
use crate::verdict::Verdict;

/// A partition of the carrier in restricted-growth form: block indices are
/// assigned in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    partition: Vec<usize>,
}

impl Congruence {
    /// Canonicalizes an arbitrary block assignment into restricted-growth
    /// form.
    pub fn from_partition(raw: &[usize]) -> Congruence {
        let mut rename: Vec<Option<usize>> = vec![None; raw.len()];
        let mut next = 0;
        let mut partition = Vec::with_capacity(raw.len());
        for &b in raw {
            let slot = rename.get_mut(b).expect("block index within range");
            let id = *slot.get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            partition.push(id);
        }
        Congruence { partition }
    }

    /// The diagonal: every element in its own block.
    pub fn diagonal(n: usize) -> Congruence {
        Congruence {
            partition: (0..n).collect(),
        }
    }

    /// The total relation: a single block.
    pub fn all(n: usize) -> Congruence {
        Congruence {
            partition: vec![0; n],
        }
    }

    pub fn partition(&self) -> &[usize] {
        &self.partition
    }

    pub fn n_blocks(&self) -> usize {
        self.partition.iter().max().map_or(0, |m| m + 1)
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.partition[a] == self.partition[b]
    }

    /// Blocks in index order; elements within a block ascend.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_blocks()];
        for (x, &b) in self.partition.iter().enumerate() {
            out[b].push(x);
        }
        out
    }
}

impl PartialOrd for Congruence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Congruence {
    /// Fewer blocks first, then lexicographic on the growth string.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n_blocks()
            .cmp(&other.n_blocks())
            .then_with(|| self.partition.cmp(&other.partition))
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        for (i, b) in blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Why a partition is not a congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompatibilityFailure {
    /// `a ~ a2` and `b ~ b2` but the meets land in different blocks.
    Meet {
        a: usize,
        a2: usize,
        b: usize,
        b2: usize,
    },
    /// `a ~ b` but operation `op` separates them.
    Op { op: usize, a: usize, b: usize },
}

impl fmt::Display for CompatibilityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CompatibilityFailure::Meet { a, a2, b, b2 } => write!(
                f,
                "meet is not compatible: {a}~{a2} and {b}~{b2} but {a}∧{b} and {a2}∧{b2} split"
            ),
            CompatibilityFailure::Op { op, a, b } => {
                write!(f, "operation #{op} is not compatible: {a}~{b} but images split")
            }
        }
    }
}

/// Checks compatibility of a partition with the meet and the given unary
/// operation tables.
pub fn is_congruence(
    a: &MeetSemilattice,
    ops: &[&[usize]],
    c: &Congruence,
) -> Result<(), CompatibilityFailure> {
    let p = c.partition();
    assert_eq!(p.len(), a.n(), "partition must cover the carrier");
    for x in 0..a.n() {
        for x2 in 0..a.n() {
            if p[x] != p[x2] {
                continue;
            }
            for y in 0..a.n() {
                for y2 in 0..a.n() {
                    if p[y] == p[y2] && p[a.meet(x, y)] != p[a.meet(x2, y2)] {
                        return Err(CompatibilityFailure::Meet {
                            a: x,
                            a2: x2,
                            b: y,
                            b2: y2,
                        });
                    }
                }
            }
            for (k, t) in ops.iter().enumerate() {
                if p[t[x]] != p[t[x2]] {
                    return Err(CompatibilityFailure::Op { op: k, a: x, b: x2 });
                }
            }
        }
    }
    Ok(())
}

fn partial_compatible(a: &MeetSemilattice, ops: &[&[usize]], assigned: &[usize]) -> bool {
    let k = assigned.len();
    for x in 0..k {
        for y in 0..k {
            if assigned[x] != assigned[y] {
                continue;
            }
            // Same block so far: meets against every assigned element must
            // not separate, whenever both meets are themselves assigned.
            for z in 0..k {
                let m1 = a.meet(x, z);
                let m2 = a.meet(y, z);
                if m1 < k && m2 < k && assigned[m1] != assigned[m2] {
                    return false;
                }
            }
            for t in ops {
                let o1 = t[x];
                let o2 = t[y];
                if o1 < k && o2 < k && assigned[o1] != assigned[o2] {
                    return false;
                }
            }
        }
    }
    true
}

fn congruence_rec(
    a: &MeetSemilattice,
    ops: &[&[usize]],
    assigned: &mut Vec<usize>,
    out: &mut Vec<Congruence>,
) {
    if assigned.len() == a.n() {
        let c = Congruence {
            partition: assigned.clone(),
        };
        if is_congruence(a, ops, &c).is_ok() {
            out.push(c);
        }
        return;
    }
    let max = assigned.iter().max().map_or(0, |m| m + 1);
    for b in 0..=max {
        assigned.push(b);
        if partial_compatible(a, ops, assigned) {
            congruence_rec(a, ops, assigned, out);
        }
        assigned.pop();
    }
}

/// All partitions of the carrier compatible with the meet and the listed
/// operations, ordered by block count then growth string.  Generation walks
/// restricted growth strings with pruning on partial assignments.
pub fn enumerate_congruences(
    a: &MeetSemilattice,
    ops: &[&[usize]],
    limit: usize,
) -> Result<Vec<Congruence>, SizeLimitExceeded> {
    if a.n() > limit {
        return Err(SizeLimitExceeded {
            size: a.n(),
            limit,
        });
    }
    for t in ops {
        assert_eq!(t.len(), a.n(), "operation table must cover the carrier");
    }
    let mut out = Vec::new();
    let mut assigned = vec![0usize];
    if a.n() == 0 {
        return Ok(out);
    }
    congruence_rec(a, ops, &mut assigned, &mut out);
    out.sort();
    Ok(out)
}

/// The quotient was not constructible from the given partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotWellDefined {
    pub detail: String,
}

impl fmt::Display for NotWellDefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quotient is not well defined: {}", self.detail)
    }
}

/// Quotient of an algebra-with-pair by a congruence; returns the quotient
/// structure and the canonical projection table.  Well-definedness of all
/// quotient operations is verified, not assumed.
pub fn quotient(s: &Slata, theta: &Congruence) -> Result<(Slata, Vec<usize>), NotWellDefined> {
    let a = s.algebra();
    let p = theta.partition();
    assert_eq!(p.len(), a.n(), "partition must cover the carrier");
    let nb = theta.n_blocks();
    let blocks = theta.blocks();
    let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();

    let mut meet = vec![0usize; nb * nb];
    for bi in 0..nb {
        for bj in 0..nb {
            meet[bi * nb + bj] = p[a.meet(reps[bi], reps[bj])];
        }
    }
    for x in 0..a.n() {
        for y in 0..a.n() {
            if p[a.meet(x, y)] != meet[p[x] * nb + p[y]] {
                return Err(NotWellDefined {
                    detail: format!("meet of classes of {x} and {y} depends on representatives"),
                });
            }
        }
    }

    let lift = |t: &[usize], name: &str| -> Result<Vec<usize>, NotWellDefined> {
        let table: Vec<usize> = reps.iter().map(|&r| p[t[r]]).collect();
        for x in 0..a.n() {
            if p[t[x]] != table[p[x]] {
                return Err(NotWellDefined {
                    detail: format!("operation {name} on the class of {x} depends on representatives"),
                });
            }
        }
        Ok(table)
    };
    let qi = lift(s.i(), "i")?;
    let qd = lift(s.d(), "d")?;

    let labels: Vec<String> = blocks
        .iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(|&x| a.label(x)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let qa = MeetSemilattice::validate(nb, meet, p[a.top()])
        .map_err(|e| NotWellDefined {
            detail: format!("quotient meet table violates the laws: {e}"),
        })?
        .with_labels(labels);
    let qs = Slata::new(qa, qi, qd).map_err(|e| NotWellDefined {
        detail: format!("quotient operations are not an adjoint pair: {e}"),
    })?;
    Ok((qs, p.to_vec()))
}

/// A family of subsets of a space's points, deduplicated and canonically
/// ordered.  The degenerate empty family is the dual of the total
/// congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VietorisFamily {
    members: Vec<SmallSet>,
}

impl VietorisFamily {
    pub fn new(mut members: Vec<SmallSet>) -> VietorisFamily {
        members.sort();
        members.dedup();
        VietorisFamily { members }
    }

    pub fn members(&self) -> &[SmallSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, y: SmallSet) -> Option<usize> {
        self.members.binary_search(&y).ok()
    }
}

impl PartialOrd for VietorisFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VietorisFamily {
    /// Fewer members first, then lexicographic on the member list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Display for VietorisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// `U⁻_F = {Y ∈ F : Y ∩ U ≠ ∅}` as a set of family-member indices.
pub fn u_minus(f: &VietorisFamily, u: SmallSet) -> SmallSet {
    (0..f.len())
        .filter(|&i| f.members[i].intersects(u))
        .collect()
}

/// `H_a = {Y ∈ F : Y ∩ β(a)^c ≠ ∅}`: the members not inside `β(a)`.
pub fn h_a(f: &VietorisFamily, n_points: usize, beta_a: SmallSet) -> SmallSet {
    u_minus(f, beta_a.complement_in(n_points))
}

/// The family `{T(x) : x ∈ X1}` of images of a meet-relation.
pub fn f_t_family(t: &MeetRelation) -> VietorisFamily {
    VietorisFamily::new(t.at.clone())
}

/// The space `⟨F, M_F⟩` with subbase `M_F = {U⁻_F : U ∈ K}`.
pub fn derived_space(space: &SSpace, f: &VietorisFamily) -> SSpace {
    let subbase: Vec<SmallSet> = space.subbase().iter().map(|&u| u_minus(f, u)).collect();
    SSpace::new(f.len(), subbase)
}

/// Checks `[H ∩ K)_F = H ∩ K` for an `H ⊆ Z(X)` given as index set:
/// the subbase members reachable from `H ∩ K` by `U⁻_F ⊆ V⁻_F` must be
/// exactly those already in `H`.  Witness is the escaping `V`.
pub fn is_m_increasing(
    space: &SSpace,
    f: &VietorisFamily,
    h: &BTreeSet<usize>,
) -> Result<(), SmallSet> {
    let in_h = |set: SmallSet| space.z_index(set).is_some_and(|zi| h.contains(&zi));
    for &v in space.subbase() {
        let left = space
            .subbase()
            .iter()
            .any(|&u| in_h(u) && u_minus(f, u).is_subset(u_minus(f, v)));
        if left != in_h(v) {
            return Err(v);
        }
    }
    Ok(())
}

/// `R[Y] = {Z ∈ Z(X) : (y, Z) ∈ R for some y ∈ Y}` as `Z(X)` indices.
pub fn relation_image(r: &Multirelation, y: SmallSet) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for p in y.iter() {
        out.extend(r.at[p].iter().copied());
    }
    out
}

/// The derived multirelations over `⟨F, M_F⟩`: `(Y, Z) ∈ Î` iff `Z` lies in
/// every `L_{(U⁻_F)^c}` for `U ∈ K` outside `I[Y]` (all of `Z(F)` when no
/// `U` qualifies), and likewise for `D̂`.
pub fn hat_relations(
    space: &SSpace,
    i: &Multirelation,
    d: &Multirelation,
    f: &VietorisFamily,
) -> (SSpace, Multirelation, Multirelation) {
    let derived = derived_space(space, f);
    let build = |r: &Multirelation| -> Multirelation {
        let at = f
            .members()
            .iter()
            .map(|&y| {
                let img = relation_image(r, y);
                let mut acc = derived.all_z();
                for &u in space.subbase() {
                    let zi = space.z_index(u).expect("subbase members lie in Z(X)");
                    if img.contains(&zi) {
                        continue;
                    }
                    let target = u_minus(f, u).complement_in(f.len());
                    let l = derived.l_u(target);
                    acc = acc.intersection(&l).copied().collect();
                }
                acc
            })
            .collect();
        Multirelation { at }
    };
    let ih = build(i);
    let dh = build(d);
    (derived, ih, dh)
}

/// Verdicts for the family conditions.
#[derive(Clone, Debug)]
pub struct VietorisReport {
    /// Members are nonempty elements of `C_K(X)`.
    pub membership: Verdict,
    /// `⟨F, M_F⟩` satisfies the space axioms.
    pub base: SSpaceReport,
    /// Every `I[Y]` and `D[Y]` is increasing.
    pub increasing: Verdict,
    /// `⟨F, M_F, Î, D̂⟩` is a valid adjoint-pair space.
    pub pair: SlataSpaceReport,
}

impl VietorisReport {
    pub fn all_pass(&self) -> bool {
        self.membership.passed()
            && self.base.all_pass()
            && self.increasing.passed()
            && self.pair.all_pass()
    }

    pub fn checks(&self) -> Vec<(String, &Verdict)> {
        let mut out = vec![("family.membership".into(), &self.membership)];
        for (name, v) in self.base.checks() {
            out.push((format!("family.{name}"), v));
        }
        out.push(("family.increasing".into(), &self.increasing));
        for (name, v) in self.pair.checks() {
            out.push((format!("family.hat.{name}"), v));
        }
        out
    }
}

/// Runs all three family conditions against a space with two multirelations.
pub fn is_vietoris_family(
    space: &SSpace,
    i: &Multirelation,
    d: &Multirelation,
    f: &VietorisFamily,
) -> VietorisReport {
    let mut membership = Verdict::Pass;
    for &m in f.members() {
        if m.is_empty() {
            membership = Verdict::Fail("the empty set is not an admissible member".into());
            break;
        }
        if space.c_index(m).is_none() {
            membership = Verdict::Fail(format!("{m} is not in the closure system of the space"));
            break;
        }
    }
    let (derived, ih, dh) = hat_relations(space, i, d, f);
    let base = verify_s_space(&derived);
    let mut increasing = Verdict::Pass;
    'inc: for (yi, &y) in f.members().iter().enumerate() {
        for (r, name) in [(i, "I"), (d, "D")] {
            let img = relation_image(r, y);
            if let Err(v) = is_m_increasing(space, f, &img) {
                increasing = Verdict::Fail(format!(
                    "{name}-image of member #{yi} is not increasing at V = {v}"
                ));
                break 'inc;
            }
        }
    }
    let pair = verify_slata_space(&derived, &ih, &dh);
    VietorisReport {
        membership,
        base,
        increasing,
        pair,
    }
}

/// The family of a congruence: images of the quotient spectrum under the
/// relation of the canonical projection.
pub fn family_from_congruence(
    s: &Slata,
    theta: &Congruence,
) -> Result<VietorisFamily, NotWellDefined> {
    let (qs, q) = quotient(s, theta)?;
    let a_dual = dual_space(s.algebra());
    let q_dual = dual_space(qs.algebra());
    let r = relation_from_hom(&a_dual, &q_dual, &q);
    Ok(VietorisFamily::new(r.at))
}

/// The two kernel computations disagreed — an implementation bug.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelMismatch {
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for KernelMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "family kernel routes disagree at the pair ({}, {})",
            self.a, self.b
        )
    }
}

/// The congruence of a family: `a ~ b` iff `[β(a)^c]⁻_F = [β(b)^c]⁻_F`.
/// The same partition is recomputed as the kernel of `□_{T_F} ∘ β` with
/// `(Y, P) ∈ T_F ⟺ P ∈ Y`; the two routes must agree.
pub fn congruence_from_family(
    s: &Slata,
    f: &VietorisFamily,
) -> Result<Congruence, KernelMismatch> {
    let dual = dual_space(s.algebra());
    let n = s.algebra().n();
    let np = dual.space.n();
    let minus_keys: Vec<SmallSet> = (0..n)
        .map(|a| u_minus(f, dual.beta[a].complement_in(np)))
        .collect();
    // □_{T_F}(β(a)) = {Y ∈ F : Y ⊆ β(a)}.
    let box_keys: Vec<SmallSet> = (0..n)
        .map(|a| {
            (0..f.len())
                .filter(|&yi| f.members()[yi].is_subset(dual.beta[a]))
                .collect()
        })
        .collect();
    for a in 0..n {
        for b in (a + 1)..n {
            if (minus_keys[a] == minus_keys[b]) != (box_keys[a] == box_keys[b]) {
                return Err(KernelMismatch { a, b });
            }
        }
    }
    let mut raw = vec![0usize; n];
    let mut seen: Vec<SmallSet> = Vec::new();
    for a in 0..n {
        let pos = seen.iter().position(|&k| k == minus_keys[a]).unwrap_or_else(|| {
            seen.push(minus_keys[a]);
            seen.len() - 1
        });
        raw[a] = pos;
    }
    Ok(Congruence::from_partition(&raw))
}

/// All families passing the three conditions, by exhaustive scan over
/// subsets of the nonempty members of `C_K(X)` (the empty family included
/// as the degenerate dual of the total congruence).  The scan is `2^m` for
/// `m` candidate members, so it is gated.
pub fn enumerate_vietoris_families(
    s: &Slata,
    limit: usize,
) -> Result<Vec<VietorisFamily>, SizeLimitExceeded> {
    let (dual, r_i, r_d) = dualize_slata(s);
    let candidates: Vec<SmallSet> = dual
        .space
        .c_family()
        .iter()
        .copied()
        .filter(|c| !c.is_empty())
        .collect();
    let m = candidates.len();
    if m > limit {
        return Err(SizeLimitExceeded { size: m, limit });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let members: Vec<SmallSet> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| candidates[i])
            .collect();
        let f = VietorisFamily::new(members);
        if is_vietoris_family(&dual.space, &r_i, &r_d, &f).all_pass() {
            out.push(f);
        }
    }
    out.sort();
    Ok(out)
}
