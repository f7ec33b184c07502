//! Named graph families.
//!
//! Vertex numbering is fixed: in a join `G1 ∨ G2` the vertices of `G1` come
//! first, so the hub of a wheel is vertex 0 and the `K_a` side of a
//! complete split graph is `0..a`.

use super::Graph;
use crate::{Error, Result};

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, || "complete graph needs n >= 1".into())?;
    Ok(Graph::empty(n).complement())
}

/// `K̄_n`, the graph with `n` vertices and no edges.
pub fn edgeless(n: usize) -> Result<Graph> {
    need(n >= 1, || "edgeless graph needs n >= 1".into())?;
    Ok(Graph::empty(n))
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, || "path needs n >= 1".into())?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Star `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    need(n >= 2, || format!("star needs n >= 2, got {n}"))?;
    complete_bipartite(1, n - 1)
}

/// `K_{a,b} = K̄_a ∨ K̄_b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    need(a >= 1 && b >= 1, || {
        format!("K_{{a,b}} needs a, b >= 1, got {a}, {b}")
    })?;
    Ok(join(&edgeless(a)?, &edgeless(b)?))
}

/// Complete split graph `CS_{a,b} = K_a ∨ K̄_b`.
pub fn complete_split(a: usize, b: usize) -> Result<Graph> {
    need(a >= 1 && b >= 1, || {
        format!("CS_{{a,b}} needs a, b >= 1, got {a}, {b}")
    })?;
    Ok(join(&complete(a)?, &edgeless(b)?))
}

/// Wheel `W(n) = K_1 ∨ C_{n-1}` with hub 0.
pub fn wheel(n: usize) -> Result<Graph> {
    need(n >= 4, || format!("wheel needs n >= 4, got {n}"))?;
    Ok(join(&complete(1)?, &cycle(n - 1)?))
}

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut g = Graph::empty(n1 + g2.order());
    for (u, v) in g1.edges() {
        g.set(u, v, true);
    }
    for (u, v) in g2.edges() {
        g.set(n1 + u, n1 + v, true);
    }
    g
}

/// `G1 ∨ G2`: disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut g = disjoint_union(g1, g2);
    for u in 0..n1 {
        for v in 0..g2.order() {
            g.set(u, n1 + v, true);
        }
    }
    g
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    need(!parts.is_empty(), || {
        "multipartite graph needs at least one part".into()
    })?;
    need(parts.iter().all(|&p| p >= 1), || {
        format!("part sizes must be positive: {parts:?}")
    })?;
    let mut g = edgeless(parts[0])?;
    for &p in &parts[1..] {
        g = join(&g, &edgeless(p)?);
    }
    Ok(g)
}

/// Part sizes of the Turán graph `T_{n,r}`, largest first.
pub fn turan_parts(n: usize, r: usize) -> Result<Vec<usize>> {
    need(r >= 1 && r <= n, || {
        format!("Turán graph needs 1 <= r <= n, got n = {n}, r = {r}")
    })?;
    Ok((0..r).map(|i| n / r + usize::from(i < n % r)).collect())
}

/// Turán graph `T_{n,r}`: complete r-partite with balanced parts.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    complete_multipartite(&turan_parts(n, r)?)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("static edge list")
}
