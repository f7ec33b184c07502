use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::{canonical_form, canonical_labeling, CanonicalForm, Graph};
use crate::{Error, Result};

/// Largest order for which connected graphs are enumerated (11117 classes).
pub const ENUMERATION_LIMIT: usize = 8;

/// Orders up to this one are enumerated from raw edge masks.
const MASK_LIMIT: usize = 6;

/// One canonically labelled representative per isomorphism class of
/// connected graphs on `n` vertices, sorted by edge count and then by
/// canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "connected graph enumeration",
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut classes = if n <= MASK_LIMIT {
        from_masks(n)?
    } else {
        // Every connected graph has a non-cut vertex, so extending each
        // connected class on n-1 vertices by one vertex with a nonempty
        // neighborhood reaches every class on n vertices.
        let smaller = enumerate_connected_graphs(n - 1)?;
        let mut seen = HashMap::new();
        for g in &smaller {
            for nbhd in 1u64..(1 << (n - 1)) {
                let mut h = Graph::empty(n);
                for (u, v) in g.edges() {
                    h.set(u, v, true);
                }
                for u in 0..n - 1 {
                    if nbhd & (1 << u) != 0 {
                        h.set(u, n - 1, true);
                    }
                }
                insert(&mut seen, h)?;
            }
        }
        seen
    };
    let mut out: Vec<(usize, CanonicalForm, Graph)> = classes
        .drain()
        .map(|(cf, g)| (g.edge_count(), cf, g))
        .collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

fn from_masks(n: usize) -> Result<HashMap<CanonicalForm, Graph>> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut seen = HashMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        // fewer than n-1 edges cannot be connected
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let mut g = Graph::empty(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                g.set(u, v, true);
            }
        }
        if g.is_connected() {
            insert(&mut seen, g)?;
        }
    }
    Ok(seen)
}

fn insert(seen: &mut HashMap<CanonicalForm, Graph>, g: Graph) -> Result<()> {
    if let Entry::Vacant(slot) = seen.entry(canonical_form(&g)?) {
        slot.insert(g.permuted(&canonical_labeling(&g)?));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn deterministic_and_connected() {
        let a = enumerate_connected_graphs(5).unwrap();
        let b = enumerate_connected_graphs(5).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(Graph::is_connected));
        assert_eq!(a.first().unwrap().edge_count(), 4);
        assert_eq!(a.last().unwrap().edge_count(), 10);
    }

    #[test]
    fn seven_via_extension() {
        assert_eq!(enumerate_connected_graphs(7).unwrap().len(), 853);
    }

    #[test]
    fn budget() {
        assert!(enumerate_connected_graphs(9).is_err());
        assert!(enumerate_connected_graphs(0).is_err());
    }
}
