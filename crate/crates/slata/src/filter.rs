//! Filters, irreducible filters and the spectrum embedding.

use alloc::vec::Vec;

use crate::order::MeetSemilattice;
use crate::set::SmallSet;

/// A filter of a meet-semilattice: an upset containing top and closed under
/// meet.  In a finite algebra every filter is the principal upset of its
/// least member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Filter {
    pub members: SmallSet,
}

/// An irreducible filter together with its position in the canonical
/// enumeration of the spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumPoint {
    pub id: usize,
    pub filter: Filter,
}

/// Checks the three filter conditions: upset, contains top, closed under meet.
pub fn is_filter(a: &MeetSemilattice, s: SmallSet) -> bool {
    if !s.contains(a.top()) {
        return false;
    }
    if a.upset(s) != s {
        return false;
    }
    for x in s.iter() {
        for y in s.iter() {
            if !s.contains(a.meet(x, y)) {
                return false;
            }
        }
    }
    true
}

/// All filters, sorted by (cardinality, lexicographic index set).  The
/// improper filter (the whole carrier) is included.
///
/// Finiteness makes every filter principal: it is closed under meet, so it
/// contains the meet of all its members and equals that element's upset.
pub fn all_filters(a: &MeetSemilattice) -> Vec<Filter> {
    let mut out: Vec<Filter> = (0..a.n())
        .map(|x| Filter {
            members: a.order().up(x),
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Least filter containing `y`: close under meet, then upward.
pub fn generated_filter(a: &MeetSemilattice, y: SmallSet) -> Filter {
    // The meet of a finite generating set is its least element, so the
    // generated filter is that element's upset; the empty set generates {top}.
    let g = a.meet_of_set(y);
    Filter {
        members: a.order().up(g),
    }
}

/// The spectrum: all irreducible filters in canonical order.
///
/// A proper filter `F` is irreducible when `F = F1 ∩ F2` forces `F1 = F` or
/// `F2 = F`; this is checked by the pairwise intersection scan over all
/// filters, with no shortcut through the order structure.
pub fn irreducible_filters(a: &MeetSemilattice) -> Vec<SpectrumPoint> {
    let fis = all_filters(a);
    let carrier = SmallSet::full(a.n());
    let mut out = Vec::new();
    for &f in fis.iter() {
        if f.members == carrier {
            continue; // only proper filters can be irreducible
        }
        let mut reducible = false;
        'scan: for &f1 in fis.iter() {
            for &f2 in fis.iter() {
                if f1.members.inter(f2.members) == f.members
                    && f1 != f
                    && f2 != f
                {
                    reducible = true;
                    break 'scan;
                }
            }
        }
        if !reducible {
            out.push(f);
        }
    }
    out.sort();
    out.iter()
        .enumerate()
        .map(|(id, &filter)| SpectrumPoint { id, filter })
        .collect()
}

/// `β(x) = {P in spectrum : x ∈ P}` as a set of spectrum ids.
pub fn beta(spectrum: &[SpectrumPoint], x: usize) -> SmallSet {
    spectrum
        .iter()
        .filter(|p| p.filter.members.contains(x))
        .map(|p| p.id)
        .collect()
}
