//! Exact (exponential-time) structural invariants for small graphs.

use serde::Serialize;

use super::Graph;
use crate::{Error, Result};

/// Largest order accepted by the exact invariant routines.
pub const INVARIANT_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub chromatic_number: usize,
    pub independence_number: usize,
    pub min_degree: usize,
    /// Part sizes `(smaller, larger)` when the graph is bipartite.
    pub bipartite_parts: Option<(usize, usize)>,
}

fn check(g: &Graph, what: &'static str) -> Result<()> {
    if g.order() > INVARIANT_LIMIT {
        return Err(Error::BudgetExceeded {
            what,
            n: g.order(),
            limit: INVARIANT_LIMIT,
        });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.mask(v)).collect()
}

pub fn graph_invariants(g: &Graph) -> Result<GraphInvariants> {
    check(g, "graph invariants")?;
    let bipartite_parts = bipartition(g).map(|(a, b)| (a.len().min(b.len()), a.len().max(b.len())));
    Ok(GraphInvariants {
        vertex_connectivity: vertex_connectivity(g)?,
        edge_connectivity: edge_connectivity(g)?,
        chromatic_number: chromatic_number(g)?,
        independence_number: independence_number(g)?,
        min_degree: g.min_degree(),
        bipartite_parts,
    })
}

/// Whether the vertices in `within` induce a connected subgraph.
fn induces_connected(m: &[u64], within: u64) -> bool {
    if within == 0 {
        return false;
    }
    let start = within & within.wrapping_neg();
    let mut reached = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = m[v] & within & !reached;
        reached |= new;
        frontier |= new;
    }
    reached == within
}

/// Smallest number of vertices whose removal disconnects the graph
/// (`n - 1` for complete graphs).
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    check(g, "vertex connectivity")?;
    let n = g.order();
    let m = masks(g);
    let all = (1u64 << n) - 1;
    if g.edge_count() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    for k in 1..n - 1 {
        let found = (0..=all)
            .any(|s: u64| s.count_ones() as usize == k && !induces_connected(&m, all & !s));
        if found {
            return Ok(k);
        }
    }
    unreachable!("a non-complete graph has a separating set of size <= n - 2")
}

/// Size of a minimum edge cut.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    check(g, "edge connectivity")?;
    let n = g.order();
    if n == 1 {
        return Ok(0);
    }
    let m = masks(g);
    let all = (1u64 << n) - 1;
    // vertex 0 is always on the S side
    let mut best = usize::MAX;
    for rest in 0..(1u64 << (n - 1)) {
        let s = 1 | (rest << 1);
        if s == all {
            continue;
        }
        let mut cut = 0;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            cut += (m[v] & all & !s).count_ones() as usize;
        }
        best = best.min(cut);
    }
    Ok(best)
}

/// Maximum clique size by branch and bound over bitmask candidate sets.
fn max_clique(m: &[u64]) -> usize {
    fn grow(m: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            grow(m, cand & m[v], size + 1, best);
        }
    }
    let n = m.len();
    let mut best = 0;
    grow(m, (1u64 << n) - 1, 0, &mut best);
    best
}

/// Independence number, as the clique number of the complement.
pub fn independence_number(g: &Graph) -> Result<usize> {
    check(g, "independence number")?;
    let n = g.order();
    let all = (1u64 << n) - 1;
    let comp: Vec<u64> = masks(g)
        .iter()
        .enumerate()
        .map(|(v, &mv)| all & !mv & !(1 << v))
        .collect();
    Ok(max_clique(&comp))
}

/// Chromatic number by iterative deepening from the clique lower bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    check(g, "chromatic number")?;
    let n = g.order();
    let m = masks(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(m[v].count_ones()));

    fn colour(
        m: &[u64],
        order: &[usize],
        k: usize,
        idx: usize,
        used: usize,
        col: &mut [usize],
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        // new colours are interchangeable, so try at most one of them
        for c in 0..k.min(used + 1) {
            let clash = order[..idx]
                .iter()
                .any(|&u| col[u] == c && m[v] & (1 << u) != 0);
            if !clash {
                col[v] = c;
                if colour(m, order, k, idx + 1, used.max(c + 1), col) {
                    return true;
                }
            }
        }
        false
    }

    let mut col = vec![usize::MAX; n];
    let lower = max_clique(&m).max(1);
    for k in lower..=n {
        if colour(&m, &order, k, 0, 0, &mut col) {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

/// Two-colouring of a bipartite graph: `(part containing vertex 0, rest)`.
pub fn bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!sv);
                        stack.push(u);
                    }
                    Some(su) if su == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| side[v] == Some(false));
    Some((a, b))
}

/// Number of pendant vertices and of distinct quasi-pendant vertices.
pub fn pendant_counts(g: &Graph) -> (usize, usize) {
    let mut quasi = vec![false; g.order()];
    let mut p = 0;
    for v in 0..g.order() {
        if g.degree(v) == 1 {
            p += 1;
            quasi[g.neighbors(v).next().unwrap()] = true;
        }
    }
    (p, quasi.iter().filter(|&&q| q).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{
        complete, complete_bipartite, cycle, path, petersen, star, wheel,
    };

    #[test]
    fn complete_graph() {
        let inv = graph_invariants(&complete(4).unwrap()).unwrap();
        assert_eq!(
            (
                inv.vertex_connectivity,
                inv.edge_connectivity,
                inv.chromatic_number,
                inv.independence_number
            ),
            (3, 3, 4, 1)
        );
        assert_eq!(inv.bipartite_parts, None);
    }

    #[test]
    fn five_cycle() {
        let inv = graph_invariants(&cycle(5).unwrap()).unwrap();
        assert_eq!(
            (
                inv.vertex_connectivity,
                inv.edge_connectivity,
                inv.chromatic_number,
                inv.independence_number
            ),
            (2, 2, 3, 2)
        );
    }

    #[test]
    fn paw() {
        // triangle 0-1-2 with pendant 3 on vertex 0
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let inv = graph_invariants(&g).unwrap();
        assert_eq!(
            (
                inv.vertex_connectivity,
                inv.edge_connectivity,
                inv.chromatic_number,
                inv.independence_number
            ),
            (1, 1, 3, 2)
        );
        assert_eq!(inv.min_degree, 1);
    }

    #[test]
    fn connectivity_can_differ() {
        // two triangles sharing vertex 0: κ = 1, κ' = 2
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 1);
        assert_eq!(edge_connectivity(&g).unwrap(), 2);
    }

    #[test]
    fn assorted() {
        let p = petersen();
        assert_eq!(chromatic_number(&p).unwrap(), 3);
        assert_eq!(independence_number(&p).unwrap(), 4);
        assert_eq!(vertex_connectivity(&p).unwrap(), 3);
        assert_eq!(edge_connectivity(&p).unwrap(), 3);
        assert_eq!(chromatic_number(&wheel(6).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number(&wheel(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&complete(1).unwrap()).unwrap(), 1);
        assert_eq!(vertex_connectivity(&complete(1).unwrap()).unwrap(), 0);
        let inv = graph_invariants(&complete_bipartite(2, 5).unwrap()).unwrap();
        assert_eq!(inv.bipartite_parts, Some((2, 5)));
        assert_eq!(inv.independence_number, 5);
    }

    #[test]
    fn pendants() {
        assert_eq!(pendant_counts(&star(5).unwrap()), (4, 1));
        assert_eq!(pendant_counts(&path(4).unwrap()), (2, 2));
        assert_eq!(pendant_counts(&path(2).unwrap()), (2, 2));
        assert_eq!(pendant_counts(&cycle(4).unwrap()), (0, 0));
    }

    #[test]
    fn errors() {
        assert_eq!(
            graph_invariants(&Graph::from_edges(3, &[(0, 1)]).unwrap()),
            Err(Error::NotConnected)
        );
        assert!(matches!(
            graph_invariants(&path(11).unwrap()),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
