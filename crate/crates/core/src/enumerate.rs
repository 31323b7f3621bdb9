//! Isomorph-free exhaustive generation of tournaments.
//!
//! Each order-(n-1) representative is extended by one vertex in all 2^(n-1)
//! ways; an extension survives iff deleting the canonically-last vertex of
//! its canonical copy lands back on the parent it came from. Every class of
//! order n is therefore produced from exactly one parent, and duplicates
//! within a parent are removed locally.

use crate::error::{Error, Result};
use crate::tournament::{CanonicalForm, Tournament, VertexSet};
use std::collections::BTreeSet;

/// Largest order the generator accepts without the extended flag.
pub const DEFAULT_MAX_ORDER: usize = 8;
/// Hard cap with `allow_deep`.
pub const HARD_MAX_ORDER: usize = 9;

/// All tournaments of the given order, one canonical representative per
/// isomorphism class, sorted by canonical form.
pub fn tournaments_of_order(n: usize, allow_deep: bool) -> Result<Vec<Tournament>> {
    let cap = if allow_deep {
        HARD_MAX_ORDER
    } else {
        DEFAULT_MAX_ORDER
    };
    if n == 0 || n > cap {
        return Err(Error::EnumOrder(n));
    }
    let mut reps = vec![Tournament::new(1, &[]).expect("order 1")];
    for order in 2..=n {
        reps = extend_layer(&reps, order);
    }
    Ok(reps)
}

pub fn count_tournaments(n: usize, allow_deep: bool) -> Result<usize> {
    Ok(tournaments_of_order(n, allow_deep)?.len())
}

/// Extends every parent by one vertex, applying the canonical-parent rule.
/// Splitting the parent list is the parallelization unit; the merged result
/// does not depend on how it was split.
fn extend_layer(parents: &[Tournament], order: usize) -> Vec<Tournament> {
    let mut out: Vec<CanonicalForm> = Vec::new();
    for parent in parents {
        let parent_canon = parent.canonical_form();
        let mut local: BTreeSet<CanonicalForm> = BTreeSet::new();
        for mask in 0u64..1 << (order - 1) {
            let cand = parent.add_vertex(VertexSet(mask));
            let canon = cand.canonical_form();
            if local.contains(&canon) {
                continue;
            }
            let canon_t = canon.to_tournament();
            let reduced = canon_t.delete_vertex(order - 1).canonical_form();
            if reduced == parent_canon {
                local.insert(canon);
            }
        }
        out.extend(local);
    }
    out.sort();
    out.dedup();
    out.iter().map(|c| c.to_tournament()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn small_counts() {
        assert_eq!(count_tournaments(1, false).unwrap(), 1);
        assert_eq!(count_tournaments(2, false).unwrap(), 1);
        assert_eq!(count_tournaments(3, false).unwrap(), 2);
        assert_eq!(count_tournaments(4, false).unwrap(), 4);
        assert_eq!(count_tournaments(5, false).unwrap(), 12);
    }

    #[test]
    fn order_out_of_range() {
        assert!(tournaments_of_order(0, false).is_err());
        assert!(tournaments_of_order(9, false).is_err());
        assert!(tournaments_of_order(10, true).is_err());
    }

    // oracle: classify every labeled tournament by canonical form
    #[test]
    fn matches_naive_classification_up_to_5() {
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            let mut naive: BTreeSet<String> = BTreeSet::new();
            for code in 0u64..1 << pairs {
                let bits: Vec<bool> = (0..pairs).map(|k| code >> k & 1 == 1).collect();
                let t = Tournament::new(n, &bits).unwrap();
                naive.insert(t.canonical_form().bit_string());
            }
            let stream: BTreeSet<String> = tournaments_of_order(n, false)
                .unwrap()
                .iter()
                .map(|t| t.canonical_form().bit_string())
                .collect();
            assert_eq!(stream, naive, "order {n}");
        }
    }

    #[test]
    fn stream_is_sorted_canonical_and_distinct() {
        let reps = tournaments_of_order(6, false).unwrap();
        assert_eq!(reps.len(), 56);
        let mut prev: Option<CanonicalForm> = None;
        for t in &reps {
            let c = t.canonical_form();
            assert_eq!(c.to_tournament(), *t, "stream holds canonical copies");
            if let Some(p) = &prev {
                assert!(*p < c, "strictly increasing");
            }
            prev = Some(c);
        }
    }

    #[test]
    fn closed_under_dualization() {
        let reps = tournaments_of_order(6, false).unwrap();
        let forms: BTreeSet<String> = reps
            .iter()
            .map(|t| t.canonical_form().bit_string())
            .collect();
        for t in &reps {
            assert!(forms.contains(&t.dual().canonical_form().bit_string()));
        }
    }
}

#[cfg(test)]
mod extra_tests {
    use super::*;

    #[test]
    fn dual_is_an_involution_on_the_order_5_stream() {
        for t in tournaments_of_order(5, false).unwrap() {
            assert_eq!(t.dual().dual(), t);
        }
    }
}
