//! Exact canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize a vertex of the first non-singleton cell,
//! repeat. Each leaf is a discrete partition, i.e. a relabeling, and the
//! canonical form is the lexicographically largest relabeled adjacency code
//! among the leaves. Automorphisms discovered at leaves prune the tree: a
//! leaf equivalent to the first leaf lets us jump back to the common
//! ancestor, and siblings in one orbit of the stabilizer of the current
//! prefix are explored only once.

use super::Graph;
use crate::{Error, Result};

/// Largest order accepted. The adjacency code of 45 bits fits a `u64`.
pub const CANON_LIMIT: usize = 10;

/// Byte string that is equal for two graphs iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let (_, code) = search(g)?;
    let mut bytes = Vec::with_capacity(9);
    bytes.push(g.order() as u8);
    bytes.extend_from_slice(&code.to_be_bytes());
    Ok(CanonicalForm(bytes))
}

/// Permutation `p` such that `g.permuted(&p)` is the canonical
/// representative of the isomorphism class of `g`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let (lab, _) = search(g)?;
    let mut perm = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

fn search(g: &Graph) -> Result<(Vec<usize>, u64)> {
    let n = g.order();
    if n > CANON_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "canonical form",
            n,
            limit: CANON_LIMIT,
        });
    }
    let masks: Vec<u64> = (0..n).map(|v| g.mask(v)).collect();
    let mut s = Search {
        masks,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    if n > 0 {
        s.refine(&mut cells);
    } else {
        cells.clear();
    }
    let mut prefix = Vec::new();
    s.dfs(&cells, &mut prefix);
    let (lab, code) = s.best.expect("search visits at least one leaf");
    Ok((lab, code))
}

struct Leaf {
    lab: Vec<usize>,
    code: u64,
    prefix: Vec<usize>,
}

struct Search {
    masks: Vec<u64>,
    first: Option<Leaf>,
    best: Option<(Vec<usize>, u64)>,
    autos: Vec<Vec<usize>>,
}

impl Search {
    fn cell_mask(cell: &[usize]) -> u64 {
        cell.iter().fold(0, |m, &v| m | (1 << v))
    }

    /// Split cells by neighbor counts into each splitter cell until the
    /// ordered partition is equitable. Sub-cells are ordered by count.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        'outer: loop {
            for s in 0..cells.len() {
                let splitter = Self::cell_mask(&cells[s]);
                for i in 0..cells.len() {
                    if cells[i].len() < 2 {
                        continue;
                    }
                    let count = |v: usize| (self.masks[v] & splitter).count_ones();
                    let c0 = count(cells[i][0]);
                    if cells[i].iter().all(|&v| count(v) == c0) {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> =
                        cells[i].iter().map(|&v| (count(v), v)).collect();
                    keyed.sort_unstable();
                    let mut pieces: Vec<Vec<usize>> = Vec::new();
                    let mut last = None;
                    for (k, v) in keyed {
                        if last != Some(k) {
                            pieces.push(Vec::new());
                            last = Some(k);
                        }
                        pieces.last_mut().unwrap().push(v);
                    }
                    cells.splice(i..=i, pieces);
                    continue 'outer;
                }
            }
            return;
        }
    }

    fn code(&self, lab: &[usize]) -> u64 {
        let n = lab.len();
        let mut code = 0u64;
        for j in 1..n {
            let mj = self.masks[lab[j]];
            for &li in &lab[..j] {
                code = (code << 1) | ((mj >> li) & 1);
            }
        }
        code
    }

    /// Orbit representatives under automorphisms fixing `prefix` pointwise.
    fn orbit_roots(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.masks.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.autos {
            if prefix.iter().any(|&v| a[v] != v) {
                continue;
            }
            for (v, &av) in a.iter().enumerate() {
                let (x, y) = (find(&mut parent, v), find(&mut parent, av));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Returns `Some(depth)` when the search should unwind to the node with
    /// a prefix of that length.
    fn dfs(&mut self, cells: &[Vec<usize>], prefix: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(cells, prefix);
        };
        let depth = prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                let roots = self.orbit_roots(prefix);
                if explored.iter().any(|&e| roots[e] == roots[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.refine(&mut child);
            prefix.push(v);
            let jump = self.dfs(&child, prefix);
            prefix.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], prefix: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = self.code(&lab);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                lab: lab.clone(),
                code,
                prefix: prefix.to_vec(),
            });
            self.best = Some((lab, code));
            return None;
        };
        if code == first.code {
            let auto = mapping(&first.lab, &lab);
            let common = first
                .prefix
                .iter()
                .zip(prefix)
                .take_while(|(a, b)| a == b)
                .count();
            self.autos.push(auto);
            return Some(common);
        }
        let (best_lab, best_code) = self.best.as_ref().unwrap();
        if code == *best_code {
            let auto = mapping(best_lab, &lab);
            self.autos.push(auto);
        } else if code > *best_code {
            self.best = Some((lab, code));
        }
        None
    }
}

/// Automorphism sending `from[pos]` to `to[pos]` for every position.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut a = vec![0; from.len()];
    for (&f, &t) in from.iter().zip(to) {
        a[f] = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, complete_bipartite, cycle, path, petersen, star};

    #[test]
    fn relabeled_paths_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn distinguishes_small_graphs() {
        let p3 = path(3).unwrap();
        let k3 = complete(3).unwrap();
        assert_ne!(canonical_form(&p3).unwrap(), canonical_form(&k3).unwrap());
        let k13 = star(4).unwrap();
        let p4 = path(4).unwrap();
        assert_ne!(canonical_form(&k13).unwrap(), canonical_form(&p4).unwrap());
    }

    #[test]
    fn labeling_produces_canonical_representative() {
        for g in [
            petersen(),
            cycle(7).unwrap(),
            complete_bipartite(3, 4).unwrap(),
        ] {
            let p = canonical_labeling(&g).unwrap();
            let h = g.permuted(&p);
            let q = canonical_labeling(&h).unwrap();
            assert_eq!(h.permuted(&q), h);
        }
    }

    #[test]
    fn symmetric_graphs_are_fast_enough() {
        // K_10 without pruning would visit 10! leaves
        let k = complete(10).unwrap();
        let rev: Vec<usize> = (0..10).rev().collect();
        assert_eq!(
            canonical_form(&k).unwrap(),
            canonical_form(&k.permuted(&rev)).unwrap()
        );
        let e = Graph::empty(10);
        assert_eq!(canonical_form(&e).unwrap().as_bytes()[1..], [0u8; 8]);
    }

    #[test]
    fn budget() {
        assert!(matches!(
            canonical_form(&Graph::empty(11)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
