//! Finite posets and meet-semilattices with top on indexed carriers.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::set::{SmallSet, MAX_UNIVERSE};

/// Violation found when checking a relation for partial-order laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetError {
    NotReflexive { a: usize },
    NotAntisymmetric { a: usize, b: usize },
    NotTransitive { a: usize, b: usize, c: usize },
    CarrierTooLarge { n: usize },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PosetError::NotReflexive { a } => write!(f, "not reflexive at {a}"),
            PosetError::NotAntisymmetric { a, b } => {
                write!(f, "not antisymmetric: {a} <= {b} and {b} <= {a}")
            }
            PosetError::NotTransitive { a, b, c } => {
                write!(f, "not transitive: {a} <= {b} <= {c} but not {a} <= {c}")
            }
            PosetError::CarrierTooLarge { n } => {
                write!(f, "carrier size {n} exceeds the limit of {MAX_UNIVERSE}")
            }
        }
    }
}

/// A partial order on `{0, .., n-1}`, stored as principal upsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `up[a] = {b : a <= b}`.
    up: Vec<SmallSet>,
}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity of the given
    /// relation; the first violation in scan order is reported.
    pub fn new(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Poset, PosetError> {
        if n > MAX_UNIVERSE {
            return Err(PosetError::CarrierTooLarge { n });
        }
        let up: Vec<SmallSet> = (0..n)
            .map(|a| (0..n).filter(|&b| leq(a, b)).collect())
            .collect();
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(PosetError::NotReflexive { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && up[a].contains(b) && up[b].contains(a) {
                    return Err(PosetError::NotAntisymmetric { a, b });
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                for c in up[b].iter() {
                    if !up[a].contains(c) {
                        return Err(PosetError::NotTransitive { a, b, c });
                    }
                }
            }
        }
        Ok(Poset { n, up })
    }

    /// Builds the poset whose order is the reflexive-transitive closure of the
    /// given pairs (each `(a, b)` read as `a <= b`), then validates it.
    pub fn from_pairs_closure(
        n: usize,
        pairs: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        if n > MAX_UNIVERSE {
            return Err(PosetError::CarrierTooLarge { n });
        }
        let mut up: Vec<SmallSet> = (0..n).map(SmallSet::singleton).collect();
        for &(a, b) in pairs {
            assert!(a < n && b < n, "pair ({a}, {b}) out of range for carrier {n}");
            up[a].insert(b);
        }
        // Transitive closure by iterating until a fixed point.
        loop {
            let mut changed = false;
            for a in 0..n {
                let mut acc = up[a];
                for b in up[a].iter() {
                    acc = acc.union(up[b]);
                }
                if acc != up[a] {
                    up[a] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let closed = up;
        Poset::new(n, |a, b| closed[a].contains(b))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Principal upset `[a) = {b : a <= b}`.
    pub fn up(&self, a: usize) -> SmallSet {
        self.up[a]
    }

    /// Principal downset `(a] = {b : b <= a}`.
    pub fn down(&self, a: usize) -> SmallSet {
        (0..self.n).filter(|&b| self.leq(b, a)).collect()
    }

    /// `[Y) = {x : y <= x for some y in Y}`.
    pub fn upset(&self, y: SmallSet) -> SmallSet {
        y.iter().fold(SmallSet::EMPTY, |acc, a| acc.union(self.up[a]))
    }

    /// `(Y] = {x : x <= y for some y in Y}`.
    pub fn downset(&self, y: SmallSet) -> SmallSet {
        y.iter().fold(SmallSet::EMPTY, |acc, a| acc.union(self.down(a)))
    }

    /// Greatest element of the whole poset, if one exists.
    pub fn greatest(&self) -> Option<usize> {
        (0..self.n).find(|&t| (0..self.n).all(|a| self.leq(a, t)))
    }

    pub fn least(&self) -> Option<usize> {
        (0..self.n).find(|&b| (0..self.n).all(|a| self.leq(b, a)))
    }

    /// Greatest element of the subset `s`, if one exists in `s`.
    pub fn greatest_of(&self, s: SmallSet) -> Option<usize> {
        s.iter().find(|&m| s.iter().all(|a| self.leq(a, m)))
    }

    pub fn least_of(&self, s: SmallSet) -> Option<usize> {
        s.iter().find(|&m| s.iter().all(|a| self.leq(m, a)))
    }
}

/// Checks that `table` is order-preserving from `p` to `q`; the witness on
/// failure is the first pair `(a, b)` with `a <= b` but `table[a] <= table[b]`
/// failing in `q`.
pub fn is_monotone(p: &Poset, q: &Poset, table: &[usize]) -> Result<(), (usize, usize)> {
    assert_eq!(table.len(), p.n(), "map table must cover the source carrier");
    for a in 0..p.n() {
        for b in 0..p.n() {
            if p.leq(a, b) && !q.leq(table[a], table[b]) {
                return Err((a, b));
            }
        }
    }
    Ok(())
}

/// All order-preserving maps from `p` to `q`, in lexicographic table order.
pub fn monotone_maps(p: &Poset, q: &Poset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut table = Vec::with_capacity(p.n());
    fn rec(p: &Poset, q: &Poset, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = table.len();
        if k == p.n() {
            out.push(table.clone());
            return;
        }
        'next: for v in 0..q.n() {
            for j in 0..k {
                if p.leq(j, k) && !q.leq(table[j], v) {
                    continue 'next;
                }
                if p.leq(k, j) && !q.leq(v, table[j]) {
                    continue 'next;
                }
            }
            table.push(v);
            rec(p, q, table, out);
            table.pop();
        }
    }
    rec(p, q, &mut table, &mut out);
    out
}

/// Violation found when validating a meet table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemilatticeError {
    EmptyCarrier,
    CarrierTooLarge { n: usize },
    TableShape { expected: usize, got: usize },
    EntryOutOfRange { a: usize, b: usize, value: usize },
    TopOutOfRange { top: usize },
    NotIdempotent { a: usize },
    NotCommutative { a: usize, b: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    TopNotNeutral { a: usize },
}

impl fmt::Display for SemilatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SemilatticeError::EmptyCarrier => write!(f, "carrier must be nonempty"),
            SemilatticeError::CarrierTooLarge { n } => {
                write!(f, "carrier size {n} exceeds the limit of {MAX_UNIVERSE}")
            }
            SemilatticeError::TableShape { expected, got } => {
                write!(f, "meet table has {got} entries, expected {expected}")
            }
            SemilatticeError::EntryOutOfRange { a, b, value } => {
                write!(f, "meet({a},{b}) = {value} is outside the carrier")
            }
            SemilatticeError::TopOutOfRange { top } => {
                write!(f, "top index {top} is outside the carrier")
            }
            SemilatticeError::NotIdempotent { a } => write!(f, "meet({a},{a}) != {a}"),
            SemilatticeError::NotCommutative { a, b } => {
                write!(f, "meet({a},{b}) != meet({b},{a})")
            }
            SemilatticeError::NotAssociative { a, b, c } => {
                write!(f, "meet(meet({a},{b}),{c}) != meet({a},meet({b},{c}))")
            }
            SemilatticeError::TopNotNeutral { a } => write!(f, "meet({a},top) != {a}"),
        }
    }
}

/// Failure of derivation of a meet table from a partial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderMeetError {
    Order(PosetError),
    NoTop,
    NoGreatestLowerBound { a: usize, b: usize },
}

impl fmt::Display for OrderMeetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrderMeetError::Order(ref e) => write!(f, "{e}"),
            OrderMeetError::NoTop => write!(f, "the order has no greatest element"),
            OrderMeetError::NoGreatestLowerBound { a, b } => {
                write!(f, "elements {a} and {b} have no greatest lower bound")
            }
        }
    }
}

/// A meet-semilattice `<A, meet, top>` on the carrier `{0, .., n-1}`.
///
/// Validation checks idempotence, commutativity, associativity and top
/// neutrality in that scan order; the induced order `a <= b iff meet(a,b) = a`
/// is then a partial order with greatest element `top`, and every meet is the
/// greatest lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetSemilattice {
    n: usize,
    meet: Vec<usize>,
    top: usize,
    order: Poset,
    labels: Option<Vec<String>>,
}

impl MeetSemilattice {
    /// Validates a meet table given in row-major order.
    pub fn validate(
        n: usize,
        meet: Vec<usize>,
        top: usize,
    ) -> Result<MeetSemilattice, SemilatticeError> {
        if n == 0 {
            return Err(SemilatticeError::EmptyCarrier);
        }
        if n > MAX_UNIVERSE {
            return Err(SemilatticeError::CarrierTooLarge { n });
        }
        if meet.len() != n * n {
            return Err(SemilatticeError::TableShape {
                expected: n * n,
                got: meet.len(),
            });
        }
        for a in 0..n {
            for b in 0..n {
                let v = meet[a * n + b];
                if v >= n {
                    return Err(SemilatticeError::EntryOutOfRange { a, b, value: v });
                }
            }
        }
        if top >= n {
            return Err(SemilatticeError::TopOutOfRange { top });
        }
        let m = |a: usize, b: usize| meet[a * n + b];
        for a in 0..n {
            if m(a, a) != a {
                return Err(SemilatticeError::NotIdempotent { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if m(a, b) != m(b, a) {
                    return Err(SemilatticeError::NotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(SemilatticeError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            if m(a, top) != a {
                return Err(SemilatticeError::TopNotNeutral { a });
            }
        }
        // The four laws force `a <= b iff meet(a,b) = a` to be a partial
        // order, so this cannot fail past validation.
        let up: Vec<SmallSet> = (0..n)
            .map(|a| (0..n).filter(|&b| m(a, b) == a).collect())
            .collect();
        let order = Poset { n, up };
        Ok(MeetSemilattice {
            n,
            meet,
            top,
            order,
            labels: None,
        })
    }

    /// Derives the meet table from a partial order; fails if the order has no
    /// greatest element or some pair has no greatest lower bound.
    pub fn from_order(order: &Poset) -> Result<MeetSemilattice, OrderMeetError> {
        let n = order.n();
        if n == 0 {
            return Err(OrderMeetError::NoTop);
        }
        let top = order.greatest().ok_or(OrderMeetError::NoTop)?;
        let mut meet = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let lower = order.down(a).inter(order.down(b));
                match order.greatest_of(lower) {
                    Some(g) => meet.push(g),
                    None => return Err(OrderMeetError::NoGreatestLowerBound { a, b }),
                }
            }
        }
        MeetSemilattice::validate(n, meet, top)
            .map_err(|_| unreachable!("greatest lower bounds always satisfy the meet laws"))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> MeetSemilattice {
        assert_eq!(labels.len(), self.n, "one label per carrier element");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label when present, its index otherwise.
    pub fn label(&self, a: usize) -> String {
        match self.labels {
            Some(ref ls) => ls[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn upset(&self, y: SmallSet) -> SmallSet {
        self.order.upset(y)
    }

    pub fn downset(&self, y: SmallSet) -> SmallSet {
        self.order.downset(y)
    }

    /// Meet of all members of `s`; the empty meet is `top`.
    pub fn meet_of_set(&self, s: SmallSet) -> usize {
        s.iter().fold(self.top, |acc, a| self.meet(acc, a))
    }

    /// Least element (the meet of the whole carrier).
    pub fn bottom(&self) -> usize {
        self.meet_of_set(SmallSet::full(self.n))
    }

    /// Checks that `h` preserves meet and top into `other`.
    pub fn is_homomorphism(
        &self,
        other: &MeetSemilattice,
        h: &[usize],
    ) -> Result<(), HomFailure> {
        assert_eq!(h.len(), self.n, "map table must cover the source carrier");
        if h[self.top] != other.top {
            return Err(HomFailure::Top);
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if h[self.meet(a, b)] != other.meet(h[a], h[b]) {
                    return Err(HomFailure::Meet { a, b });
                }
            }
        }
        Ok(())
    }

    /// All meet-and-top-preserving maps into `other`, in lexicographic table
    /// order.
    pub fn homomorphisms(&self, other: &MeetSemilattice) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut table: Vec<usize> = Vec::with_capacity(self.n);
        self.hom_rec(other, &mut table, &mut out);
        out
    }

    fn hom_rec(&self, other: &MeetSemilattice, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = table.len();
        if k == self.n {
            if self.is_homomorphism(other, table).is_ok() {
                out.push(table.clone());
            }
            return;
        }
        'next: for v in 0..other.n {
            if k == self.top && v != other.top {
                continue;
            }
            // Prune on meet constraints whose three entries are all assigned.
            for j in 0..k {
                let m = self.meet(j, k);
                if m < k && other.meet(table[j], v) != table[m] {
                    continue 'next;
                }
                if m == k && other.meet(table[j], v) != v {
                    continue 'next;
                }
            }
            table.push(v);
            self.hom_rec(other, table, out);
            table.pop();
        }
    }

    /// All order-preserving endomaps of the carrier.
    pub fn monotone_endomaps(&self) -> Vec<Vec<usize>> {
        monotone_maps(&self.order, &self.order)
    }
}

/// Failure of a meet-and-top-preservation check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomFailure {
    Top,
    Meet { a: usize, b: usize },
}

impl fmt::Display for HomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HomFailure::Top => write!(f, "top is not preserved"),
            HomFailure::Meet { a, b } => write!(f, "meet({a},{b}) is not preserved"),
        }
    }
}
